#include "cli.hpp"

#include "ndsort/ndsort.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <string>
#include <vector>

namespace ndsort::cli {

namespace {

struct GenOptions {
    std::string kind = "uniform";
    std::size_t n = 0;
    std::size_t m = 1;
    std::uint64_t seed = 0;
    std::size_t k_fronts = 1;
    double dup_fraction = 0.0;
    std::size_t quant_levels = 0;
    std::string out;
};

struct RankOptions {
    std::string algo = "mnds";
    std::string in;
    std::string out;
    bool count_comparisons = false;
};

struct VerifyOptions {
    std::string in;
    std::string algos = "mnds,fnds";
};

struct BenchOptions {
    std::string algos = "mnds,fnds,ens-ss,ens-bs";
    std::vector<std::string> in;
    std::size_t reps = 100;
    std::size_t warmup = 0;
    bool parallel = false;
    std::string out;
};

std::uint64_t effective_seed(std::uint64_t flag_seed)
{
    if (const char* env = std::getenv("NDSORT_SEED"); env != nullptr && *env != '\0') {
        try {
            return std::stoull(env);
        } catch (const std::logic_error&) {
            throw Error(ErrorCode::InvalidArgument, std::string("NDSORT_SEED='") + env + "' is not an integer");
        }
    }
    return flag_seed;
}

int do_gen(const GenOptions& opt, std::ostream& out)
{
    GenSpec spec;
    spec.kind = parse_gen_kind(opt.kind);
    spec.n = opt.n;
    spec.m = opt.m;
    spec.seed = effective_seed(opt.seed);
    spec.k_fronts = opt.k_fronts;
    spec.dup_fraction = opt.dup_fraction;
    spec.quant_levels = opt.quant_levels;
    const auto matrix = generate(spec);
    write_population(opt.out, matrix);
    out << "wrote " << matrix.rows() << "x" << matrix.objectives() << " population (" << format_gen_spec(spec)
        << ") to " << opt.out << '\n';
    return Success;
}

int do_rank(const RankOptions& opt, std::ostream& out)
{
    const auto algorithm = parse_algorithm(opt.algo);
    const auto matrix = parse_population(opt.in);
    ComparisonTally tally;
    const auto ranks = rank_with(algorithm, matrix, tally);
    write_ranking(opt.out, ranks);
    out << "ranked " << ranks.size() << " solutions into " << ranks.front_count() << " fronts with "
        << to_string(algorithm) << '\n';
    if (opt.count_comparisons) {
        out << "comparisons: " << tally.count << '\n';
    }
    return Success;
}

int do_verify(const VerifyOptions& opt, std::ostream& out)
{
    const auto matrix = parse_population(opt.in);
    const auto report = verify(matrix, parse_algorithm_list(opt.algos));
    print_report(out, report);
    return report.agreed() ? Success : VerificationMismatch;
}

int do_bench(const BenchOptions& opt, std::ostream& out, std::ostream& err)
{
    BenchConfig config;
    config.algorithms = parse_algorithm_list(opt.algos);
    for (const auto& source : opt.in) {
        config.datasets.push_back(parse_dataset_source(source));
    }
    config.repetitions = opt.reps;
    config.warmup = opt.warmup;
    config.parallel_cells = opt.parallel;
    const auto result = run_benchmark(config);

    std::ofstream csv(opt.out);
    if (!csv) {
        throw Error(ErrorCode::IoError, "cannot open " + opt.out + " for writing");
    }
    write_bench_csv(csv, result.records);

    const auto summary = summarize(result.records);
    std::filesystem::path summary_path = opt.out;
    summary_path.replace_extension(".summary.csv");
    std::ofstream summary_out(summary_path);
    if (!summary_out) {
        throw Error(ErrorCode::IoError, "cannot open " + summary_path.string() + " for writing");
    }
    write_summary_csv(summary_out, summary);
    const auto plots = write_plot_data(opt.out, summary);

    for (const auto& s : summary) {
        out << s.algorithm << " on " << s.dataset << ": mean " << s.mean_ns / 1e6 << " ms, median "
            << s.median_ns / 1e6 << " ms, " << s.comparisons << " comparisons, " << s.fronts << " fronts\n";
    }
    out << "wrote " << result.records.size() << " records to " << opt.out << ", summary to "
        << summary_path.string() << ", " << plots.size() << " plot data files\n";
    for (const auto& f : result.failures) {
        err << "cell " << f.algorithm << " x " << f.dataset << " failed: " << f.message << '\n';
    }
    return Success;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Non-dominated sorting: generate populations, rank them, cross-check sorters, benchmark"};
    app.name("ndsort");
    app.require_subcommand(1);

    GenOptions gen;
    auto* gen_cmd = app.add_subcommand("gen", "Write a synthetic population file");
    gen_cmd->add_option("--kind", gen.kind, "uniform | shells | degenerate")
        ->check(CLI::IsMember({"uniform", "shells", "degenerate"}));
    gen_cmd->add_option("--n", gen.n, "Number of solutions")->required();
    gen_cmd->add_option("--m", gen.m, "Number of objectives")->required();
    gen_cmd->add_option("--seed", gen.seed, "Generator seed (NDSORT_SEED overrides)")->required();
    gen_cmd->add_option("--k-fronts", gen.k_fronts, "Front count (shells)");
    gen_cmd->add_option("--dup-fraction", gen.dup_fraction, "Fraction of duplicated rows (degenerate)");
    gen_cmd->add_option("--quant-levels", gen.quant_levels, "Quantisation levels, 0 = off (degenerate)");
    gen_cmd->add_option("--out", gen.out, "Output population file")->required();

    RankOptions rank;
    auto* rank_cmd = app.add_subcommand("rank", "Rank a population file");
    rank_cmd->add_option("--algo", rank.algo, "mnds | fnds | ens-ss | ens-bs")
        ->check(CLI::IsMember({"mnds", "fnds", "ens-ss", "ens-bs"}));
    rank_cmd->add_option("--in", rank.in, "Population file")->required();
    rank_cmd->add_option("--out", rank.out, "Ranking CSV")->required();
    rank_cmd->add_flag("--count-comparisons", rank.count_comparisons, "Report objective comparisons");

    VerifyOptions ver;
    auto* verify_cmd = app.add_subcommand("verify", "Cross-check sorters on a population file");
    verify_cmd->add_option("--in", ver.in, "Population file")->required();
    verify_cmd->add_option("--algos", ver.algos, "Comma-separated algorithms (>= 2)");

    BenchOptions bench;
    auto* bench_cmd = app.add_subcommand("bench", "Benchmark sorters over datasets");
    bench_cmd->add_option("--algos", bench.algos, "Comma-separated algorithms");
    bench_cmd->add_option("--in", bench.in, "Population files or gen:kind=...,n=...,m=...,seed=... specs")
        ->required();
    bench_cmd->add_option("--reps", bench.reps, "Timed repetitions per cell")->required()->check(
        CLI::PositiveNumber);
    bench_cmd->add_option("--warmup", bench.warmup, "Untimed runs per cell");
    bench_cmd->add_flag("--parallel", bench.parallel, "Run cells concurrently");
    bench_cmd->add_option("--out", bench.out, "Benchmark CSV")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return Success;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return Success;
    } catch (const CLI::ParseError& e) {
        err << "ndsort: " << e.what() << '\n';
        return InputError;
    }

    try {
        if (*gen_cmd) {
            return do_gen(gen, out);
        }
        if (*rank_cmd) {
            return do_rank(rank, out);
        }
        if (*verify_cmd) {
            return do_verify(ver, out);
        }
        return do_bench(bench, out, err);
    } catch (const Error& e) {
        err << "ndsort: " << e.what() << '\n';
        return InputError;
    }
}

} // namespace ndsort::cli
