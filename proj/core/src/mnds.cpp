#include "ndsort/mnds.hpp"

#include "ndsort/merge_sort.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace ndsort {

namespace {

void check_objective(std::size_t objective, std::size_t objectives)
{
    if (objective >= objectives) {
        throw Error(ErrorCode::ObjectiveOutOfRange,
                    "objective " + std::to_string(objective) + " of " + std::to_string(objectives));
    }
}

// Union-find over original ids, joined only on exact lexicographic equality.
class TwinSets {
public:
    explicit TwinSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0U); }

    std::uint32_t find(std::uint32_t x) noexcept
    {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    void unite(std::uint32_t a, std::uint32_t b) noexcept { parent_[find(a)] = find(b); }

private:
    std::vector<std::uint32_t> parent_;
};

} // namespace

std::vector<SolutionId> MndsState::dominators_of(SolutionId id) const
{
    std::vector<SolutionId> out;
    for (auto c : ds_[compact_of_[id]].to_vector()) {
        out.push_back(original_id_[c]);
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool stable_sort_by_objective(const ObjectiveMatrix& matrix, SortPermutation& order, std::size_t objective,
                              bool lex_ties, ComparisonTally& tally)
{
    check_objective(objective, matrix.objectives());
    const std::size_t m = matrix.objectives();
    const double* values = matrix.values().data();
    std::uint64_t count = 0;
    SortPermutation scratch;
    bool changed = false;
    if (lex_ties) {
        changed = stable_merge_sort(order, scratch, [&](std::uint32_t a, std::uint32_t b) {
            const double* ra = values + a * m;
            const double* rb = values + b * m;
            ++count;
            if (ra[objective] != rb[objective]) {
                return ra[objective] < rb[objective];
            }
            for (std::size_t k = 0; k < m; ++k) {
                if (k == objective) {
                    continue;
                }
                ++count;
                if (ra[k] != rb[k]) {
                    return ra[k] < rb[k];
                }
            }
            return false;
        });
    } else {
        changed = stable_merge_sort(order, scratch, [&](std::uint32_t a, std::uint32_t b) {
            ++count;
            return values[a * m + objective] < values[b * m + objective];
        });
    }
    tally.add(count);
    return changed;
}

bool stable_sort_by_objective(MndsState& state, std::size_t objective, bool lex_ties, ComparisonTally& tally)
{
    check_objective(objective, state.objectives_);
    const std::size_t n = state.size();
    const std::size_t m = state.objectives_;
    const double* columns = state.columns_.data();
    const double* key = columns + objective * n;
    std::uint64_t count = 0;
    bool changed = false;
    if (lex_ties) {
        changed = stable_merge_sort(state.order_, state.scratch_, [&](std::uint32_t a, std::uint32_t b) {
            ++count;
            if (key[a] != key[b]) {
                return key[a] < key[b];
            }
            for (std::size_t k = 0; k < m; ++k) {
                if (k == objective) {
                    continue;
                }
                const double va = columns[k * n + a];
                const double vb = columns[k * n + b];
                ++count;
                if (va != vb) {
                    return va < vb;
                }
            }
            return false;
        });
    } else {
        changed = stable_merge_sort(state.order_, state.scratch_, [&](std::uint32_t a, std::uint32_t b) {
            ++count;
            return key[a] < key[b];
        });
    }
    tally.add(count);
    return changed;
}

MndsState sort_first_objective(const ObjectiveMatrix& matrix, ComparisonTally& tally)
{
    const std::size_t n = matrix.rows();
    const std::size_t m = matrix.objectives();
    const double* values = matrix.values().data();

    SortPermutation order(n);
    std::iota(order.begin(), order.end(), 0U);
    SortPermutation scratch;
    TwinSets twins(n);
    std::uint64_t count = 0;
    stable_merge_sort(order, scratch, [&](std::uint32_t a, std::uint32_t b) {
        const int c = detail::lexicographic_unchecked(values + a * m, values + b * m, m, count);
        if (c == 0) {
            twins.unite(a, b);
        }
        return c < 0;
    });
    tally.add(count);

    MndsState state;
    state.objectives_ = m;
    state.compact_of_.assign(n, 0);
    state.original_id_.reserve(n);
    SolutionId canonical = 0;
    for (std::size_t p = 0; p < n; ++p) {
        const SolutionId id = order[p];
        if (p > 0 && twins.find(id) == twins.find(order[p - 1])) {
            state.duplicates_.emplace_back(id, canonical);
            state.compact_of_[id] = state.compact_of_[canonical];
            continue;
        }
        canonical = id;
        state.compact_of_[id] = static_cast<CompactIndex>(state.original_id_.size());
        state.original_id_.push_back(id);
    }

    const std::size_t kept = state.original_id_.size();
    state.columns_.resize(kept * m);
    for (std::size_t k = 0; k < m; ++k) {
        for (std::size_t c = 0; c < kept; ++c) {
            state.columns_[k * kept + c] = matrix(state.original_id_[c], k);
        }
    }
    state.order_.resize(kept);
    std::iota(state.order_.begin(), state.order_.end(), 0U);
    state.ds_.reserve(kept);
    for (std::size_t c = 0; c < kept; ++c) {
        state.ds_.push_back(DominanceSet::prefix(kept, c));
    }
    state.inc_set_ = DominanceSet::prefix(kept, kept);
    state.has_dominance_ = true;
    return state;
}

bool refine_by_objective(MndsState& state, std::size_t objective, ComparisonTally& tally)
{
    if (!stable_sort_by_objective(state, objective, false, tally)) {
        // an unchanged order intersects every set with a superset of itself
        return state.has_dominance_;
    }
    state.inc_set_.clear();
    bool has_dominance = false;
    for (const CompactIndex s : state.order_) {
        auto& ds = state.ds_[s];
        if (!ds.empty()) {
            ds.intersect_with(state.inc_set_);
            has_dominance |= !ds.empty();
        }
        state.inc_set_.insert(s);
    }
    state.has_dominance_ = has_dominance;
    return has_dominance;
}

bool sort_rest_of_objectives(MndsState& state, ComparisonTally& tally)
{
    for (std::size_t objective = 1; objective < state.objectives() && state.has_dominance(); ++objective) {
        refine_by_objective(state, objective, tally);
    }
    return state.has_dominance();
}

std::vector<std::uint32_t> get_ranking(const MndsState& state)
{
    std::vector<std::uint32_t> ranks(state.size(), 0);
    std::uint32_t max_rank = 0;
    for (const CompactIndex s : state.order()) {
        std::uint32_t rank = 1;
        state.dominance_set(s).for_each_descending([&](std::size_t u) {
            const auto ru = ranks[u];
            if (ru == 0) {
                throw Error(ErrorCode::InternalOrderViolation,
                            "solution " + std::to_string(state.original_id(static_cast<CompactIndex>(u)))
                                + " dominates " + std::to_string(state.original_id(s)) + " but is not ranked yet");
            }
            rank = std::max(rank, ru + 1);
            // no ranked solution exceeds max_rank, so rank cannot grow further
            return rank <= max_rank;
        });
        ranks[s] = rank;
        max_rank = std::max(max_rank, rank);
    }
    return ranks;
}

RankAssignment mnds_rank(const ObjectiveMatrix& matrix, ComparisonTally& tally)
{
    require_valid(matrix);
    std::vector<std::uint32_t> ranks(matrix.rows(), 1);
    if (matrix.empty()) {
        return RankAssignment(std::move(ranks));
    }
    auto state = sort_first_objective(matrix, tally);
    if (!sort_rest_of_objectives(state, tally)) {
        return RankAssignment(std::move(ranks));
    }
    const auto compact = get_ranking(state);
    for (std::size_t c = 0; c < compact.size(); ++c) {
        ranks[state.original_id(static_cast<CompactIndex>(c))] = compact[c];
    }
    for (const auto& [duplicate, canonical] : state.duplicates()) {
        ranks[duplicate] = ranks[canonical];
    }
    return RankAssignment(std::move(ranks));
}

RankAssignment mnds_rank(const ObjectiveMatrix& matrix)
{
    ComparisonTally unused;
    return mnds_rank(matrix, unused);
}

} // namespace ndsort
