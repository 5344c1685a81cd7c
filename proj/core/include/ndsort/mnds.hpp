#ifndef NDSORT_MNDS_HPP
#define NDSORT_MNDS_HPP

#include "ndsort/core.hpp"
#include "ndsort/dominance_set.hpp"

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace ndsort {

using CompactIndex = std::uint32_t;

/// Ordering of solution (or compact) indices produced by a per-objective sort.
using SortPermutation = std::vector<std::uint32_t>;

/// Working state of a Merge Non-Dominated Sorting run.
///
/// Exact duplicates are removed in the first pass; the retained solutions are
/// renumbered with compact indices equal to their position in the
/// first-objective order, and every dominance set is a bit set over those
/// compact indices. Objective values are stored column-major so that a
/// per-objective pass reads one contiguous column.
class MndsState {
public:
    std::size_t size() const noexcept { return original_id_.size(); }
    std::size_t objectives() const noexcept { return objectives_; }

    const SortPermutation& order() const noexcept { return order_; }
    const DominanceSet& dominance_set(CompactIndex c) const noexcept { return ds_[c]; }
    const DominanceSet& incremental_set() const noexcept { return inc_set_; }

    /// (duplicate, canonical) pairs in detection order; canonical ids are
    /// always retained solutions.
    const std::vector<std::pair<SolutionId, SolutionId>>& duplicates() const noexcept { return duplicates_; }

    SolutionId original_id(CompactIndex c) const noexcept { return original_id_[c]; }
    /// Duplicates map to the compact index of their canonical solution.
    CompactIndex compact_of(SolutionId id) const noexcept { return compact_of_[id]; }

    double value(CompactIndex c, std::size_t objective) const noexcept { return columns_[objective * size() + c]; }

    bool has_dominance() const noexcept { return has_dominance_; }

    /// Dominance set of a retained solution expressed as original ids, ascending.
    std::vector<SolutionId> dominators_of(SolutionId id) const;

private:
    friend MndsState sort_first_objective(const ObjectiveMatrix&, ComparisonTally&);
    friend bool stable_sort_by_objective(MndsState&, std::size_t, bool, ComparisonTally&);
    friend bool refine_by_objective(MndsState&, std::size_t, ComparisonTally&);

    std::size_t objectives_ = 0;
    std::vector<double> columns_;
    SortPermutation order_;
    SortPermutation scratch_;
    std::vector<DominanceSet> ds_;
    DominanceSet inc_set_;
    std::vector<std::pair<SolutionId, SolutionId>> duplicates_;
    std::vector<SolutionId> original_id_;
    std::vector<CompactIndex> compact_of_;
    bool has_dominance_ = true;
};

/// Stable sort of `order` (ids into `matrix`) by one objective. With
/// `lex_ties`, ties on that objective fall back to the full lexicographic
/// order. Returns whether the permutation changed.
bool stable_sort_by_objective(const ObjectiveMatrix& matrix, SortPermutation& order, std::size_t objective,
                              bool lex_ties, ComparisonTally& tally);

/// Same as above, on the state's current permutation.
bool stable_sort_by_objective(MndsState& state, std::size_t objective, bool lex_ties, ComparisonTally& tally);

/// First pass: lexicographic sort, duplicate extraction, and
/// ds[i] = {0, ..., i-1} over the compact indices.
MndsState sort_first_objective(const ObjectiveMatrix& matrix, ComparisonTally& tally);

/// One later pass: stable sort by `objective`, and when the order changed,
/// ds[s] <- ds[s] ∩ {solutions before s}. Returns has_dominance afterwards.
bool refine_by_objective(MndsState& state, std::size_t objective, ComparisonTally& tally);

/// Runs refine_by_objective for objectives 1..M-1, stopping as soon as no
/// dominance set is left nonempty.
bool sort_rest_of_objectives(MndsState& state, ComparisonTally& tally);

/// Ranks indexed by compact index. Requires the final permutation, in which
/// every dominator precedes the solutions it dominates.
std::vector<std::uint32_t> get_ranking(const MndsState& state);

RankAssignment mnds_rank(const ObjectiveMatrix& matrix, ComparisonTally& tally);
RankAssignment mnds_rank(const ObjectiveMatrix& matrix);

} // namespace ndsort

#endif
