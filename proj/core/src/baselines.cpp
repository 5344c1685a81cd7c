#include "ndsort/baselines.hpp"

#include "ndsort/merge_sort.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace ndsort {

FrontList to_front_list(const RankAssignment& ranks)
{
    FrontList fronts(ranks.front_count());
    for (SolutionId id = 0; id < ranks.size(); ++id) {
        if (ranks[id] == 0) {
            throw Error(ErrorCode::InvalidArgument, "solution " + std::to_string(id) + " has no rank");
        }
        fronts[ranks[id] - 1].push_back(id);
    }
    for (std::size_t k = 0; k < fronts.size(); ++k) {
        if (fronts[k].empty()) {
            throw Error(ErrorCode::InvalidArgument, "rank " + std::to_string(k + 1) + " is unoccupied");
        }
    }
    return fronts;
}

RankAssignment from_front_list(const FrontList& fronts)
{
    std::size_t n = 0;
    for (const auto& front : fronts) {
        n += front.size();
    }
    std::vector<std::uint32_t> ranks(n, 0);
    for (std::size_t k = 0; k < fronts.size(); ++k) {
        if (fronts[k].empty()) {
            throw Error(ErrorCode::InvalidArgument, "front " + std::to_string(k) + " is empty");
        }
        for (const auto id : fronts[k]) {
            if (id >= n || ranks[id] != 0) {
                throw Error(ErrorCode::InvalidArgument, "fronts do not partition 0.." + std::to_string(n - 1));
            }
            ranks[id] = static_cast<std::uint32_t>(k + 1);
        }
    }
    return RankAssignment(std::move(ranks));
}

RankAssignment fnds_rank(const ObjectiveMatrix& matrix, ComparisonTally& tally)
{
    require_valid(matrix);
    const std::size_t n = matrix.rows();
    std::vector<std::vector<SolutionId>> dominated(n);
    std::vector<std::uint32_t> dominator_count(n, 0);

    for (SolutionId p = 0; p < n; ++p) {
        for (SolutionId q = p + 1; q < n; ++q) {
            switch (dominance_relation(matrix.row(p), matrix.row(q), tally)) {
            case DominanceRelation::FirstDominates:
                dominated[p].push_back(q);
                ++dominator_count[q];
                break;
            case DominanceRelation::SecondDominates:
                dominated[q].push_back(p);
                ++dominator_count[p];
                break;
            default:
                break;
            }
        }
    }

    std::vector<std::uint32_t> ranks(n, 0);
    std::vector<SolutionId> front;
    for (SolutionId p = 0; p < n; ++p) {
        if (dominator_count[p] == 0) {
            front.push_back(p);
        }
    }
    std::uint32_t rank = 1;
    std::vector<SolutionId> next;
    while (!front.empty()) {
        next.clear();
        for (const auto p : front) {
            ranks[p] = rank;
            for (const auto q : dominated[p]) {
                if (--dominator_count[q] == 0) {
                    next.push_back(q);
                }
            }
        }
        front.swap(next);
        ++rank;
    }
    return RankAssignment(std::move(ranks));
}

RankAssignment fnds_rank(const ObjectiveMatrix& matrix)
{
    ComparisonTally unused;
    return fnds_rank(matrix, unused);
}

namespace {

template <bool Binary>
RankAssignment efficient_sort(const ObjectiveMatrix& matrix, ComparisonTally& tally)
{
    require_valid(matrix);
    const std::size_t n = matrix.rows();
    const std::size_t m = matrix.objectives();
    const double* values = matrix.values().data();
    std::uint64_t count = 0;

    std::vector<SolutionId> order(n);
    std::iota(order.begin(), order.end(), 0U);
    std::vector<SolutionId> scratch;
    stable_merge_sort(order, scratch, [&](SolutionId a, SolutionId b) {
        return detail::lexicographic_unchecked(values + a * m, values + b * m, m, count) < 0;
    });

    // After the lexicographic sort a solution can only be dominated by solutions
    // placed before it. Exact duplicates are never dominated by their twin and so
    // settle in the twin's front.
    FrontList fronts;
    auto dominated_by_front = [&](const std::vector<SolutionId>& front, SolutionId s) {
        const double* row = values + s * m;
        return std::any_of(front.rbegin(), front.rend(), [&](SolutionId member) {
            return detail::dominates_unchecked(values + member * m, row, m, count);
        });
    };

    std::vector<std::uint32_t> ranks(n, 0);
    for (const auto s : order) {
        std::size_t k = 0;
        if constexpr (Binary) {
            std::size_t lo = 0;
            std::size_t hi = fronts.size();
            while (lo < hi) {
                const std::size_t mid = lo + (hi - lo) / 2;
                if (dominated_by_front(fronts[mid], s)) {
                    lo = mid + 1;
                } else {
                    hi = mid;
                }
            }
            k = lo;
        } else {
            while (k < fronts.size() && dominated_by_front(fronts[k], s)) {
                ++k;
            }
        }
        if (k == fronts.size()) {
            fronts.emplace_back();
        }
        fronts[k].push_back(s);
        ranks[s] = static_cast<std::uint32_t>(k + 1);
    }
    tally.add(count);
    return RankAssignment(std::move(ranks));
}

} // namespace

RankAssignment ens_ss_rank(const ObjectiveMatrix& matrix, ComparisonTally& tally)
{
    return efficient_sort<false>(matrix, tally);
}

RankAssignment ens_ss_rank(const ObjectiveMatrix& matrix)
{
    ComparisonTally unused;
    return ens_ss_rank(matrix, unused);
}

RankAssignment ens_bs_rank(const ObjectiveMatrix& matrix, ComparisonTally& tally)
{
    return efficient_sort<true>(matrix, tally);
}

RankAssignment ens_bs_rank(const ObjectiveMatrix& matrix)
{
    ComparisonTally unused;
    return ens_bs_rank(matrix, unused);
}

} // namespace ndsort
