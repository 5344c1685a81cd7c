// Acceptance runner: one PASS/FAIL line per criterion.
//
//   ndsort_acceptance            run every criterion
//   ndsort_acceptance 3 5        run criteria 3 and 5
//
// Exit status is 0 only when every selected criterion passes.

#include "fixtures.hpp"
#include "oracle.hpp"
#include "properties.hpp"

#include "ndsort/baselines.hpp"
#include "ndsort/bench.hpp"
#include "ndsort/datagen.hpp"
#include "ndsort/mnds.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace ndsort;
using Clock = std::chrono::steady_clock;

namespace {

struct Verdict {
    bool pass = true;
    std::vector<std::string> details;

    void check(bool held, const std::string& what)
    {
        details.push_back(std::string(held ? "ok   " : "FAIL ") + what);
        pass = pass && held;
    }
};

double seconds_since(Clock::time_point start)
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string join(const std::vector<std::uint32_t>& xs)
{
    std::ostringstream out;
    out << '{';
    for (std::size_t i = 0; i < xs.size(); ++i) {
        out << (i ? "," : "") << xs[i];
    }
    out << '}';
    return out.str();
}

std::vector<std::uint32_t> dominator_labels(const MndsState& state, SolutionId id)
{
    auto ids = state.dominators_of(id);
    for (auto& x : ids) {
        ++x;
    }
    return ids;
}

double least_squares_slope(const std::vector<double>& xs, const std::vector<double>& ys)
{
    const double n = static_cast<double>(xs.size());
    const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
    const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / n;
    double sxy = 0.0;
    double sxx = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxy += (xs[i] - mx) * (ys[i] - my);
        sxx += (xs[i] - mx) * (xs[i] - mx);
    }
    return sxy / sxx;
}

// 1. Worked example: label 7's dominance-set trajectory, duplicate
// inheritance, and the tabulated Rank column, within 1 ms.
Verdict worked_example()
{
    Verdict v;
    const auto p = testing::worked_example();
    const auto start = Clock::now();
    ComparisonTally tally;
    auto state = sort_first_objective(p, tally);
    const auto after_first = dominator_labels(state, 6);
    refine_by_objective(state, 1, tally);
    const auto after_second = dominator_labels(state, 6);
    refine_by_objective(state, 2, tally);
    const auto after_third = dominator_labels(state, 6);
    const auto ranks = mnds_rank(p).values();
    const double elapsed = seconds_since(start);

    const std::vector<std::uint32_t> e1{1, 2, 3, 4, 5, 8, 10};
    const std::vector<std::uint32_t> e2{1, 3, 5, 8};
    const std::vector<std::uint32_t> e3{3};
    v.check(after_first == e1 && after_second == e2 && after_third == e3,
            "solution 7 trajectory " + join(after_first) + " -> " + join(after_second) + " -> " + join(after_third));
    v.check(ranks[12] == ranks[8] && ranks[13] == ranks[1],
            "duplicates 13, 14 inherit ranks of 9, 2: got " + std::to_string(ranks[12]) + ", "
                + std::to_string(ranks[13]));
    v.check(ranks == testing::worked_example_ranks(), "ranks match the dominance definition " + join(ranks));
    const auto tabulated = testing::worked_example_tabulated_ranks();
    v.check(ranks == tabulated, "ranks match the tabulated Rank column " + join(tabulated)
                                    + " (tabulated column lists 6 and 9 both at rank 3 though 6 dominates 9)");
    v.check(elapsed < 1e-3, "elapsed " + std::to_string(elapsed * 1e3) + " ms < 1 ms");
    return v;
}

// 2. Oracle equivalence over 1000 seeded instances of every generator kind.
Verdict oracle_equivalence()
{
    Verdict v;
    const auto start = Clock::now();
    std::mt19937_64 rng(20240601);
    std::size_t mismatched = 0;
    std::string first;
    std::size_t kinds[3] = {0, 0, 0};
    for (std::size_t t = 0; t < 1000; ++t) {
        GenSpec spec;
        spec.kind = static_cast<GenKind>(t % 3);
        spec.n = 1 + rng() % 200;
        spec.m = 1 + rng() % 10;
        spec.seed = rng();
        if (spec.kind == GenKind::Shells) {
            spec.m = 2 + rng() % 9;
            spec.k_fronts = 1 + rng() % std::min<std::size_t>(10, spec.n);
        } else if (spec.kind == GenKind::Degenerate) {
            const double dups[] = {0.0, 0.3, 0.6};
            const std::size_t quants[] = {0, 4, 16};
            spec.dup_fraction = dups[rng() % 3];
            spec.quant_levels = quants[rng() % 3];
        }
        ++kinds[t % 3];
        const auto p = generate(spec);
        const auto reference = fnds_rank(p);
        const bool agree = mnds_rank(p) == reference && ens_ss_rank(p) == reference && ens_bs_rank(p) == reference;
        if (!agree && mismatched++ == 0) {
            first = format_gen_spec(spec);
        }
    }
    const double elapsed = seconds_since(start);
    v.check(mismatched == 0, std::to_string(mismatched) + " of 1000 instances mismatched (uniform "
                                 + std::to_string(kinds[0]) + ", shells " + std::to_string(kinds[1]) + ", degenerate "
                                 + std::to_string(kinds[2]) + ")" + (first.empty() ? "" : ", first: " + first));
    v.check(elapsed < 60.0, "elapsed " + std::to_string(elapsed) + " s < 60 s");
    return v;
}

// 3. Comparison-count magnitude on uniform N = 800.
Verdict comparison_magnitude()
{
    Verdict v;
    const auto start = Clock::now();
    const std::size_t n = 800;
    for (std::size_t m : {5U, 10U, 15U, 20U}) {
        const auto p = gen_uniform(n, m, 1);
        ComparisonTally mnds;
        ComparisonTally ens;
        mnds_rank(p, mnds);
        ens_ss_rank(p, ens);
        const double scale = double(m) * double(n) * std::log2(double(n));
        const double factor = double(mnds.count) / scale;
        const double ratio = double(ens.count) / double(mnds.count);
        std::ostringstream a;
        a << "M=" << m << ": MNDS " << mnds.count << " = " << factor << " x M N log2 N, within [0.5, 2.0]";
        v.check(factor >= 0.5 && factor <= 2.0, a.str());
        std::ostringstream b;
        b << "M=" << m << ": ENS-SS " << ens.count << " / MNDS = " << ratio << " >= 10";
        v.check(ratio >= 10.0, b.str());
    }
    const double elapsed = seconds_since(start);
    v.check(elapsed < 10.0, "elapsed " + std::to_string(elapsed) + " s < 10 s");
    return v;
}

// 4. Log-log slopes of the tallies at M = 10.
Verdict complexity_slopes()
{
    Verdict v;
    const auto start = Clock::now();
    std::vector<double> xs;
    std::vector<double> fnds;
    std::vector<double> mnds;
    for (std::size_t n : {100U, 200U, 400U, 800U}) {
        const auto p = gen_uniform(n, 10, 1);
        ComparisonTally tf;
        ComparisonTally tm;
        fnds_rank(p, tf);
        mnds_rank(p, tm);
        xs.push_back(std::log(double(n)));
        fnds.push_back(std::log(double(tf.count)));
        mnds.push_back(std::log(double(tm.count)));
    }
    const double sf = least_squares_slope(xs, fnds);
    const double sm = least_squares_slope(xs, mnds);
    v.check(std::abs(sf - 2.0) <= 0.2, "FNDS slope " + std::to_string(sf) + " within 2.0 +- 0.2");
    v.check(sm >= 1.0 && sm <= 1.3, "MNDS slope " + std::to_string(sm) + " within [1.0, 1.3]");
    const double elapsed = seconds_since(start);
    v.check(elapsed < 30.0, "elapsed " + std::to_string(elapsed) + " s < 30 s");
    return v;
}

// 5. Best case: a strictly decreasing two-objective curve, rows shuffled.
Verdict best_case_exit()
{
    Verdict v;
    const std::size_t n = 1000;
    ObjectiveMatrix p(n, 2);
    std::vector<std::size_t> slot(n);
    std::iota(slot.begin(), slot.end(), 0);
    std::shuffle(slot.begin(), slot.end(), std::mt19937_64(5));
    for (std::size_t i = 0; i < n; ++i) {
        p(slot[i], 0) = double(i) / double(n);
        p(slot[i], 1) = 1.0 - double(i) / double(n);
    }
    const auto start = Clock::now();
    ComparisonTally phases;
    auto state = sort_first_objective(p, phases);
    const bool rest = sort_rest_of_objectives(state, phases);
    ComparisonTally total;
    const auto ranks = mnds_rank(p, total);
    const double elapsed = seconds_since(start);

    const auto bound = 3 * n * testing::ceil_log2(n);
    v.check(!rest, "sort_rest_of_objectives reports no dominance");
    v.check(ranks.front_count() == 1 && std::all_of(ranks.values().begin(), ranks.values().end(),
                                                    [](std::uint32_t r) { return r == 1; }),
            "all " + std::to_string(n) + " ranks are 1");
    v.check(total.count <= bound,
            "tally " + std::to_string(total.count) + " <= 3 N ceil(log2 N) = " + std::to_string(bound));
    v.check(elapsed < 1.0, "elapsed " + std::to_string(elapsed) + " s < 1 s");
    return v;
}

// 6. Invariant suite, 250 random instances per property.
Verdict invariant_suite()
{
    Verdict v;
    const auto start = Clock::now();
    const std::size_t count = 250;
    const std::vector<std::pair<std::string, std::function<testing::Outcome(std::size_t, std::uint64_t)>>> checks = {
        {"monotone-transform invariance", testing::check_monotone_invariance},
        {"input-permutation invariance", testing::check_permutation_invariance},
        {"rank contiguity", testing::check_rank_contiguity},
        {"rank r - 1 dominator existence", testing::check_dominator_existence},
        {"dominance-set shrinking", testing::check_dominance_set_shrinking},
        {"stable-sort tagging", testing::check_stable_sort_tagging},
    };
    std::uint64_t seed = 600;
    for (const auto& [name, check] : checks) {
        const auto outcome = check(count, ++seed);
        v.check(outcome.ok() && outcome.instances >= 200,
                name + ": " + std::to_string(outcome.violations) + " violations in " + std::to_string(outcome.instances)
                    + " instances" + (outcome.ok() ? "" : ", first: " + outcome.first_violation));
    }
    const double elapsed = seconds_since(start);
    v.check(elapsed < 60.0, "elapsed " + std::to_string(elapsed) + " s < 60 s");
    return v;
}

// 7. Scaling smoke test.
Verdict scaling()
{
    Verdict v;
    const auto start = Clock::now();
    {
        const auto p = gen_uniform(10000, 20, 1);
        const auto t0 = Clock::now();
        const auto mnds = mnds_rank(p);
        const double t_mnds = seconds_since(t0);
        const auto ens = ens_ss_rank(p);
        v.check(mnds == ens, "N=10000 M=20: MNDS (" + std::to_string(t_mnds) + " s) agrees with ENS-SS, "
                                 + std::to_string(mnds.front_count()) + " fronts");
    }
    {
        const auto p = gen_uniform(5000, 10, 1);
        auto best_of = [&](auto&& sorter, int runs) {
            double best = 1e300;
            for (int r = 0; r < runs; ++r) {
                const auto t0 = Clock::now();
                const auto ranks = sorter(p);
                best = std::min(best, seconds_since(t0));
                if (ranks.size() != p.rows()) {
                    best = 1e300;
                }
            }
            return best;
        };
        const double t_mnds = best_of([](const ObjectiveMatrix& m) { return mnds_rank(m); }, 5);
        const double t_fnds = best_of([](const ObjectiveMatrix& m) { return fnds_rank(m); }, 2);
        std::ostringstream s;
        s << "N=5000 M=10: FNDS " << t_fnds * 1e3 << " ms / MNDS " << t_mnds * 1e3 << " ms = " << t_fnds / t_mnds
          << " >= 5";
        v.check(t_fnds >= 5.0 * t_mnds, s.str());
    }
    const double elapsed = seconds_since(start);
    v.check(elapsed < 120.0, "elapsed " + std::to_string(elapsed) + " s < 120 s");
    return v;
}

struct Criterion {
    int number;
    const char* title;
    Verdict (*run)();
};

const Criterion criteria[] = {
    {1, "worked example", worked_example},
    {2, "oracle equivalence", oracle_equivalence},
    {3, "comparison-count magnitude", comparison_magnitude},
    {4, "complexity slopes", complexity_slopes},
    {5, "best-case exit", best_case_exit},
    {6, "invariant suite", invariant_suite},
    {7, "scaling smoke test", scaling},
};

} // namespace

int main(int argc, char** argv)
{
    std::vector<int> selected;
    for (int i = 1; i < argc; ++i) {
        selected.push_back(std::atoi(argv[i]));
    }
    bool all_pass = true;
    for (const auto& c : criteria) {
        if (!selected.empty() && std::find(selected.begin(), selected.end(), c.number) == selected.end()) {
            continue;
        }
        Verdict verdict;
        try {
            verdict = c.run();
        } catch (const std::exception& e) {
            verdict.check(false, std::string("threw: ") + e.what());
        }
        for (const auto& d : verdict.details) {
            std::cout << "    " << d << '\n';
        }
        std::cout << (verdict.pass ? "PASS" : "FAIL") << " criterion " << c.number << ": " << c.title << '\n'
                  << std::flush;
        all_pass = all_pass && verdict.pass;
    }
    return all_pass ? EXIT_SUCCESS : EXIT_FAILURE;
}
