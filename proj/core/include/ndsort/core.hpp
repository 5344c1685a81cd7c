#ifndef NDSORT_CORE_HPP
#define NDSORT_CORE_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ndsort {

using SolutionId = std::uint32_t;

enum class ErrorCode {
    NonFiniteValue,
    ZeroObjectives,
    LengthMismatch,
    ObjectiveOutOfRange,
    InternalOrderViolation,
    InsufficientPoints,
    InvalidArgument,
    IoError,
    ParseError,
};

const char* to_string(ErrorCode code) noexcept;

/// Single exception type for the library; `code()` tells callers what went wrong.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message);

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// Row-major N x M population of objective vectors, minimization convention.
///
/// Construction only checks that the dimensions are consistent; finiteness and
/// m >= 1 are the job of validate_population so that callers can obtain a
/// located error instead of an exception.
class ObjectiveMatrix {
public:
    ObjectiveMatrix() = default;
    ObjectiveMatrix(std::size_t n, std::size_t m);
    ObjectiveMatrix(std::size_t n, std::size_t m, std::vector<double> values);

    static ObjectiveMatrix from_rows(const std::vector<std::vector<double>>& rows);

    std::size_t rows() const noexcept { return n_; }
    std::size_t objectives() const noexcept { return m_; }
    bool empty() const noexcept { return n_ == 0; }

    std::span<const double> row(std::size_t i) const noexcept { return {values_.data() + i * m_, m_}; }
    std::span<double> row(std::size_t i) noexcept { return {values_.data() + i * m_, m_}; }

    double operator()(std::size_t i, std::size_t k) const noexcept { return values_[i * m_ + k]; }
    double& operator()(std::size_t i, std::size_t k) noexcept { return values_[i * m_ + k]; }

    const std::vector<double>& values() const noexcept { return values_; }

    friend bool operator==(const ObjectiveMatrix&, const ObjectiveMatrix&) = default;

private:
    std::size_t n_ = 0;
    std::size_t m_ = 1;
    std::vector<double> values_;
};

/// Number of scalar objective-value comparisons performed by one run.
/// Owned by the caller and passed down; never shared between concurrent runs.
struct ComparisonTally {
    std::uint64_t count = 0;

    void add(std::uint64_t n) noexcept { count += n; }
    void reset() noexcept { count = 0; }
};

/// Map from SolutionId to its 1-based front number.
class RankAssignment {
public:
    RankAssignment() = default;
    explicit RankAssignment(std::vector<std::uint32_t> ranks) : ranks_(std::move(ranks)) {}

    std::size_t size() const noexcept { return ranks_.size(); }
    std::uint32_t operator[](SolutionId id) const noexcept { return ranks_[id]; }
    std::uint32_t& operator[](SolutionId id) noexcept { return ranks_[id]; }

    /// Highest rank present; 0 for an empty population.
    std::uint32_t front_count() const noexcept;

    const std::vector<std::uint32_t>& values() const noexcept { return ranks_; }

    friend bool operator==(const RankAssignment&, const RankAssignment&) = default;

private:
    std::vector<std::uint32_t> ranks_;
};

/// Returns std::nullopt when every ObjectiveMatrix invariant holds.
std::optional<Error> validate_population(const ObjectiveMatrix& matrix);

/// Throws the validation error, if any.
void require_valid(const ObjectiveMatrix& matrix);

/// Pareto dominance under minimization. Stops at the first objective where
/// a is worse than b; the tally grows by the objectives actually examined.
bool dominates(std::span<const double> a, std::span<const double> b, ComparisonTally& tally);
bool dominates(std::span<const double> a, std::span<const double> b);

std::weak_ordering lexicographic_compare(std::span<const double> a, std::span<const double> b,
                                         ComparisonTally& tally);
std::weak_ordering lexicographic_compare(std::span<const double> a, std::span<const double> b);

enum class DominanceRelation { FirstDominates, SecondDominates, Equal, Incomparable };

/// Two-sided dominance test in one sweep; exits as soon as both vectors have
/// been found strictly better somewhere.
DominanceRelation dominance_relation(std::span<const double> a, std::span<const double> b,
                                     ComparisonTally& tally);

namespace detail {

// Unchecked kernels shared by the sorters. Callers guarantee a.size() == b.size().

inline bool dominates_unchecked(const double* a, const double* b, std::size_t m, std::uint64_t& count) noexcept
{
    bool strict = false;
    for (std::size_t k = 0; k < m; ++k) {
        ++count;
        if (a[k] > b[k]) {
            return false;
        }
        strict |= a[k] < b[k];
    }
    return strict;
}

inline int lexicographic_unchecked(const double* a, const double* b, std::size_t m, std::uint64_t& count) noexcept
{
    for (std::size_t k = 0; k < m; ++k) {
        ++count;
        if (a[k] < b[k]) {
            return -1;
        }
        if (b[k] < a[k]) {
            return 1;
        }
    }
    return 0;
}

} // namespace detail

} // namespace ndsort

#endif
