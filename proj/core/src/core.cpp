#include "ndsort/core.hpp"

#include <algorithm>
#include <cmath>

namespace ndsort {

const char* to_string(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::NonFiniteValue: return "NonFiniteValue";
    case ErrorCode::ZeroObjectives: return "ZeroObjectives";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::ObjectiveOutOfRange: return "ObjectiveOutOfRange";
    case ErrorCode::InternalOrderViolation: return "InternalOrderViolation";
    case ErrorCode::InsufficientPoints: return "InsufficientPoints";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message)
    , code_(code)
{
}

ObjectiveMatrix::ObjectiveMatrix(std::size_t n, std::size_t m)
    : n_(n)
    , m_(m)
    , values_(n * m, 0.0)
{
}

ObjectiveMatrix::ObjectiveMatrix(std::size_t n, std::size_t m, std::vector<double> values)
    : n_(n)
    , m_(m)
    , values_(std::move(values))
{
    if (values_.size() != n * m) {
        throw Error(ErrorCode::LengthMismatch,
                    "matrix of " + std::to_string(n) + "x" + std::to_string(m) + " given "
                        + std::to_string(values_.size()) + " values");
    }
}

ObjectiveMatrix ObjectiveMatrix::from_rows(const std::vector<std::vector<double>>& rows)
{
    if (rows.empty()) {
        return {};
    }
    const auto m = rows.front().size();
    std::vector<double> values;
    values.reserve(rows.size() * m);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m) {
            throw Error(ErrorCode::LengthMismatch, "row " + std::to_string(i) + " has " + std::to_string(rows[i].size())
                                                       + " objectives, expected " + std::to_string(m));
        }
        values.insert(values.end(), rows[i].begin(), rows[i].end());
    }
    return {rows.size(), m, std::move(values)};
}

std::uint32_t RankAssignment::front_count() const noexcept
{
    return ranks_.empty() ? 0 : *std::max_element(ranks_.begin(), ranks_.end());
}

std::optional<Error> validate_population(const ObjectiveMatrix& matrix)
{
    if (matrix.objectives() == 0) {
        return Error(ErrorCode::ZeroObjectives, "population must have at least one objective");
    }
    for (std::size_t i = 0; i < matrix.rows(); ++i) {
        for (std::size_t k = 0; k < matrix.objectives(); ++k) {
            if (!std::isfinite(matrix(i, k))) {
                return Error(ErrorCode::NonFiniteValue,
                             "row " + std::to_string(i) + ", column " + std::to_string(k) + " is not finite");
            }
        }
    }
    return std::nullopt;
}

void require_valid(const ObjectiveMatrix& matrix)
{
    if (auto error = validate_population(matrix)) {
        throw *error;
    }
}

namespace {

void check_lengths(std::span<const double> a, std::span<const double> b)
{
    if (a.size() != b.size()) {
        throw Error(ErrorCode::LengthMismatch,
                    "vectors of length " + std::to_string(a.size()) + " and " + std::to_string(b.size()));
    }
}

} // namespace

bool dominates(std::span<const double> a, std::span<const double> b, ComparisonTally& tally)
{
    check_lengths(a, b);
    std::uint64_t count = 0;
    const bool result = detail::dominates_unchecked(a.data(), b.data(), a.size(), count);
    tally.add(count);
    return result;
}

bool dominates(std::span<const double> a, std::span<const double> b)
{
    ComparisonTally unused;
    return dominates(a, b, unused);
}

std::weak_ordering lexicographic_compare(std::span<const double> a, std::span<const double> b,
                                         ComparisonTally& tally)
{
    check_lengths(a, b);
    std::uint64_t count = 0;
    const int c = detail::lexicographic_unchecked(a.data(), b.data(), a.size(), count);
    tally.add(count);
    if (c < 0) {
        return std::weak_ordering::less;
    }
    return c > 0 ? std::weak_ordering::greater : std::weak_ordering::equivalent;
}

std::weak_ordering lexicographic_compare(std::span<const double> a, std::span<const double> b)
{
    ComparisonTally unused;
    return lexicographic_compare(a, b, unused);
}

DominanceRelation dominance_relation(std::span<const double> a, std::span<const double> b, ComparisonTally& tally)
{
    check_lengths(a, b);
    bool a_better = false;
    bool b_better = false;
    std::uint64_t count = 0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        ++count;
        if (a[k] < b[k]) {
            a_better = true;
        } else if (b[k] < a[k]) {
            b_better = true;
        }
        if (a_better && b_better) {
            break;
        }
    }
    tally.add(count);
    if (a_better && b_better) {
        return DominanceRelation::Incomparable;
    }
    if (a_better) {
        return DominanceRelation::FirstDominates;
    }
    return b_better ? DominanceRelation::SecondDominates : DominanceRelation::Equal;
}

} // namespace ndsort
