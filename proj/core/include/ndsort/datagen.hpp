#ifndef NDSORT_DATAGEN_HPP
#define NDSORT_DATAGEN_HPP

#include "ndsort/core.hpp"

#include <cstdint>
#include <random>
#include <string>

namespace ndsort {

enum class GenKind { Uniform, Shells, Degenerate };

const char* to_string(GenKind kind) noexcept;
GenKind parse_gen_kind(const std::string& name);

/// Description of a synthetic population. `k_fronts` is read only for
/// shells; `dup_fraction` and `quant_levels` only for degenerate.
struct GenSpec {
    GenKind kind = GenKind::Uniform;
    std::size_t n = 0;
    std::size_t m = 1;
    std::uint64_t seed = 0;
    std::size_t k_fronts = 1;
    double dup_fraction = 0.0;
    std::size_t quant_levels = 0;

    friend bool operator==(const GenSpec&, const GenSpec&) = default;
};

/// Deterministic stream of doubles and bounded integers.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the C++
/// standard. Doubles are (x >> 11) * 2^-53, i.e. the top 53 bits of each
/// draw mapped onto [0, 1); bounded integers are x mod bound. Standard
/// distributions are avoided because their algorithms are
/// implementation-defined.
class SeededStream {
public:
    explicit SeededStream(std::uint64_t seed) : engine_(seed) {}

    double uniform() noexcept { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    std::uint64_t below(std::uint64_t bound) noexcept { return engine_() % bound; }

private:
    std::mt19937_64 engine_;
};

ObjectiveMatrix gen_uniform(std::size_t n, std::size_t m, std::uint64_t seed);

/// k_fronts shells of simplex points; shell j is the base set shifted by +j,
/// so every point of shell j has rank j + 1. Point i belongs to shell i % k
/// and uses base point i / k.
ObjectiveMatrix gen_shells(std::size_t n, std::size_t m, std::size_t k_fronts, std::uint64_t seed);

/// Uniform values snapped to a grid of quant_levels levels (when > 0), then
/// floor(dup_fraction * n) rows overwritten by copies of earlier rows.
ObjectiveMatrix gen_degenerate(std::size_t n, std::size_t m, std::uint64_t seed, double dup_fraction,
                               std::size_t quant_levels);

ObjectiveMatrix generate(const GenSpec& spec);

} // namespace ndsort

#endif
