#include "ndsort/datagen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace ndsort {

const char* to_string(GenKind kind) noexcept
{
    switch (kind) {
    case GenKind::Uniform: return "uniform";
    case GenKind::Shells: return "shells";
    case GenKind::Degenerate: return "degenerate";
    }
    return "unknown";
}

GenKind parse_gen_kind(const std::string& name)
{
    if (name == "uniform") {
        return GenKind::Uniform;
    }
    if (name == "shells") {
        return GenKind::Shells;
    }
    if (name == "degenerate") {
        return GenKind::Degenerate;
    }
    throw Error(ErrorCode::InvalidArgument, "unknown generator kind '" + name + "'");
}

namespace {

void check_objectives(std::size_t m)
{
    if (m == 0) {
        throw Error(ErrorCode::ZeroObjectives, "generator needs m >= 1");
    }
}

void fill_uniform(ObjectiveMatrix& matrix, SeededStream& stream)
{
    for (std::size_t i = 0; i < matrix.rows(); ++i) {
        for (auto& v : matrix.row(i)) {
            v = stream.uniform();
        }
    }
}

} // namespace

ObjectiveMatrix gen_uniform(std::size_t n, std::size_t m, std::uint64_t seed)
{
    check_objectives(m);
    ObjectiveMatrix matrix(n, m);
    SeededStream stream(seed);
    fill_uniform(matrix, stream);
    return matrix;
}

ObjectiveMatrix gen_shells(std::size_t n, std::size_t m, std::size_t k_fronts, std::uint64_t seed)
{
    if (m < 2) {
        throw Error(ErrorCode::InvalidArgument, "shells need m >= 2");
    }
    if (k_fronts == 0 || n < k_fronts) {
        throw Error(ErrorCode::InsufficientPoints,
                    "cannot fill " + std::to_string(k_fronts) + " fronts with " + std::to_string(n) + " points");
    }
    SeededStream stream(seed);
    const std::size_t bases = (n + k_fronts - 1) / k_fronts;
    ObjectiveMatrix base(bases, m);
    for (std::size_t b = 0; b < bases; ++b) {
        auto row = base.row(b);
        double sum = 0.0;
        for (auto& v : row) {
            v = -std::log1p(-stream.uniform());
            sum += v;
        }
        if (sum == 0.0) {
            // every draw was exactly 0; fall back to the simplex barycentre
            std::fill(row.begin(), row.end(), 1.0);
            sum = static_cast<double>(m);
        }
        for (auto& v : row) {
            v /= sum;
        }
    }

    ObjectiveMatrix matrix(n, m);
    for (std::size_t i = 0; i < n; ++i) {
        const auto shift = static_cast<double>(i % k_fronts);
        const auto src = base.row(i / k_fronts);
        auto dst = matrix.row(i);
        for (std::size_t k = 0; k < m; ++k) {
            dst[k] = src[k] + shift;
        }
    }
    return matrix;
}

ObjectiveMatrix gen_degenerate(std::size_t n, std::size_t m, std::uint64_t seed, double dup_fraction,
                               std::size_t quant_levels)
{
    check_objectives(m);
    if (n == 0) {
        throw Error(ErrorCode::InsufficientPoints, "degenerate populations need n >= 1");
    }
    if (!(dup_fraction >= 0.0 && dup_fraction < 1.0)) {
        throw Error(ErrorCode::InvalidArgument, "dup_fraction must lie in [0, 1)");
    }
    ObjectiveMatrix matrix(n, m);
    SeededStream stream(seed);
    fill_uniform(matrix, stream);

    if (quant_levels > 0) {
        const auto levels = static_cast<double>(quant_levels);
        for (std::size_t i = 0; i < n; ++i) {
            for (auto& v : matrix.row(i)) {
                v = std::floor(v * levels) / levels;
            }
        }
    }

    const auto copies = static_cast<std::size_t>(std::floor(dup_fraction * static_cast<double>(n)));
    // partial Fisher-Yates over candidate rows 1..n-1
    std::vector<std::size_t> candidates(n - 1);
    std::iota(candidates.begin(), candidates.end(), std::size_t{1});
    for (std::size_t j = 0; j < copies; ++j) {
        const auto pick = j + stream.below(candidates.size() - j);
        std::swap(candidates[j], candidates[pick]);
    }
    std::vector<std::size_t> targets(candidates.begin(), candidates.begin() + static_cast<std::ptrdiff_t>(copies));
    std::sort(targets.begin(), targets.end());
    for (const auto target : targets) {
        const auto source = stream.below(target);
        const auto from = matrix.row(source);
        std::copy(from.begin(), from.end(), matrix.row(target).begin());
    }
    return matrix;
}

ObjectiveMatrix generate(const GenSpec& spec)
{
    switch (spec.kind) {
    case GenKind::Uniform: return gen_uniform(spec.n, spec.m, spec.seed);
    case GenKind::Shells: return gen_shells(spec.n, spec.m, spec.k_fronts, spec.seed);
    case GenKind::Degenerate:
        return gen_degenerate(spec.n, spec.m, spec.seed, spec.dup_fraction, spec.quant_levels);
    }
    throw Error(ErrorCode::InvalidArgument, "unknown generator kind");
}

} // namespace ndsort
