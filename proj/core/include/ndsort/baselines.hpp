#ifndef NDSORT_BASELINES_HPP
#define NDSORT_BASELINES_HPP

#include "ndsort/core.hpp"

#include <vector>

namespace ndsort {

/// fronts[k] holds the ids of rank k + 1, ascending.
using FrontList = std::vector<std::vector<SolutionId>>;

FrontList to_front_list(const RankAssignment& ranks);
RankAssignment from_front_list(const FrontList& fronts);

/// Fast non-dominated sorting (Deb et al. 2002): all-pairs dominance with
/// dominated lists and domination counters, then front peeling.
RankAssignment fnds_rank(const ObjectiveMatrix& matrix, ComparisonTally& tally);
RankAssignment fnds_rank(const ObjectiveMatrix& matrix);

/// Efficient non-dominated sort (Zhang et al. 2015), sequential front search.
RankAssignment ens_ss_rank(const ObjectiveMatrix& matrix, ComparisonTally& tally);
RankAssignment ens_ss_rank(const ObjectiveMatrix& matrix);

/// Efficient non-dominated sort, binary front search.
RankAssignment ens_bs_rank(const ObjectiveMatrix& matrix, ComparisonTally& tally);
RankAssignment ens_bs_rank(const ObjectiveMatrix& matrix);

} // namespace ndsort

#endif
