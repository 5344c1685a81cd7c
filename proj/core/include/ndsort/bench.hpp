#ifndef NDSORT_BENCH_HPP
#define NDSORT_BENCH_HPP

#include "ndsort/core.hpp"
#include "ndsort/datagen.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace ndsort {

enum class Algorithm { Mnds, Fnds, EnsSs, EnsBs };

const char* to_string(Algorithm algorithm) noexcept;
Algorithm parse_algorithm(const std::string& name);
/// Comma-separated list, e.g. "mnds,fnds".
std::vector<Algorithm> parse_algorithm_list(const std::string& list);

RankAssignment rank_with(Algorithm algorithm, const ObjectiveMatrix& matrix, ComparisonTally& tally);

struct Mismatch {
    SolutionId id;
    Algorithm reference;
    std::uint32_t reference_rank;
    Algorithm other;
    std::uint32_t other_rank;
};

/// Outcome of running several sorters on one population; every algorithm
/// is compared pointwise against the first one listed.
struct VerifyReport {
    std::vector<Algorithm> algorithms;
    std::vector<Mismatch> mismatches;

    bool agreed() const noexcept { return mismatches.empty(); }
};

VerifyReport verify(const ObjectiveMatrix& matrix, const std::vector<Algorithm>& algorithms);
void print_report(std::ostream& out, const VerifyReport& report);

/// A dataset is either a population file or an inline generator spec.
struct DatasetSource {
    std::string id;
    std::optional<std::filesystem::path> path;
    std::optional<GenSpec> spec;
};

/// Accepts `gen:kind=uniform,n=800,m=10,seed=1[,k=3][,dup=0.3][,quant=8]`,
/// anything else is taken as a file path.
DatasetSource parse_dataset_source(const std::string& text);
std::string format_gen_spec(const GenSpec& spec);

struct BenchConfig {
    std::vector<Algorithm> algorithms;
    std::vector<DatasetSource> datasets;
    std::size_t repetitions = 100;
    std::size_t warmup = 0;
    bool parallel_cells = false;
};

struct BenchRecord {
    std::string algorithm;
    std::string dataset;
    std::size_t n = 0;
    std::size_t m = 0;
    std::size_t rep = 0;
    std::uint64_t wall_time_ns = 0;
    std::uint64_t comparisons = 0;
    std::uint32_t fronts = 0;

    friend bool operator==(const BenchRecord&, const BenchRecord&) = default;
};

struct CellFailure {
    std::string algorithm;
    std::string dataset;
    std::string message;
};

struct BenchResult {
    std::vector<BenchRecord> records;
    std::vector<CellFailure> failures;
};

/// Cells are (algorithm, dataset) pairs. Each cell runs `warmup` untimed and
/// `repetitions` timed runs serially on one thread; with parallel_cells,
/// distinct cells may run concurrently. Records come back in cell order
/// (dataset-major, then algorithm) regardless.
BenchResult run_benchmark(const BenchConfig& config);

struct CellSummary {
    std::string algorithm;
    std::string dataset;
    std::size_t n = 0;
    std::size_t m = 0;
    std::size_t repetitions = 0;
    double mean_ns = 0.0;
    double median_ns = 0.0;
    std::uint64_t comparisons = 0;
    std::uint32_t fronts = 0;
};

std::vector<CellSummary> summarize(const std::vector<BenchRecord>& records);

/// Header `algorithm,dataset,n,m,rep,wall_time_ns,comparisons,fronts`.
void write_bench_csv(std::ostream& out, const std::vector<BenchRecord>& records);
std::vector<BenchRecord> parse_bench_csv(std::istream& in);
void write_summary_csv(std::ostream& out, const std::vector<CellSummary>& summary);

/// Writes whitespace-separated series next to `csv_path`: one file per
/// population size (mean time in ms against M) and one per objective count
/// (mean time in ms against N), one column per algorithm. Returns the paths.
std::vector<std::filesystem::path> write_plot_data(const std::filesystem::path& csv_path,
                                                   const std::vector<CellSummary>& summary);

} // namespace ndsort

#endif
