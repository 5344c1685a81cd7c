#include "ndsort/bench.hpp"

#include "ndsort/baselines.hpp"
#include "ndsort/io.hpp"
#include "ndsort/mnds.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>
#include <thread>

namespace ndsort {

const char* to_string(Algorithm algorithm) noexcept
{
    switch (algorithm) {
    case Algorithm::Mnds: return "mnds";
    case Algorithm::Fnds: return "fnds";
    case Algorithm::EnsSs: return "ens-ss";
    case Algorithm::EnsBs: return "ens-bs";
    }
    return "unknown";
}

Algorithm parse_algorithm(const std::string& name)
{
    for (auto a : {Algorithm::Mnds, Algorithm::Fnds, Algorithm::EnsSs, Algorithm::EnsBs}) {
        if (name == to_string(a)) {
            return a;
        }
    }
    throw Error(ErrorCode::InvalidArgument, "unknown algorithm '" + name + "'");
}

std::vector<Algorithm> parse_algorithm_list(const std::string& list)
{
    std::vector<Algorithm> out;
    std::istringstream in(list);
    std::string name;
    while (std::getline(in, name, ',')) {
        if (!name.empty()) {
            out.push_back(parse_algorithm(name));
        }
    }
    if (out.empty()) {
        throw Error(ErrorCode::InvalidArgument, "empty algorithm list");
    }
    return out;
}

RankAssignment rank_with(Algorithm algorithm, const ObjectiveMatrix& matrix, ComparisonTally& tally)
{
    switch (algorithm) {
    case Algorithm::Mnds: return mnds_rank(matrix, tally);
    case Algorithm::Fnds: return fnds_rank(matrix, tally);
    case Algorithm::EnsSs: return ens_ss_rank(matrix, tally);
    case Algorithm::EnsBs: return ens_bs_rank(matrix, tally);
    }
    throw Error(ErrorCode::InvalidArgument, "unknown algorithm");
}

VerifyReport verify(const ObjectiveMatrix& matrix, const std::vector<Algorithm>& algorithms)
{
    if (algorithms.size() < 2) {
        throw Error(ErrorCode::InvalidArgument, "verification needs at least two algorithms");
    }
    VerifyReport report{algorithms, {}};
    ComparisonTally tally;
    const auto reference = rank_with(algorithms.front(), matrix, tally);
    for (std::size_t a = 1; a < algorithms.size(); ++a) {
        const auto other = rank_with(algorithms[a], matrix, tally);
        for (SolutionId id = 0; id < reference.size(); ++id) {
            if (reference[id] != other[id]) {
                report.mismatches.push_back({id, algorithms.front(), reference[id], algorithms[a], other[id]});
            }
        }
    }
    return report;
}

void print_report(std::ostream& out, const VerifyReport& report)
{
    if (report.agreed()) {
        out << "agreement:";
        for (auto a : report.algorithms) {
            out << ' ' << to_string(a);
        }
        out << '\n';
        return;
    }
    out << "mismatch on " << report.mismatches.size() << " ranks\n";
    for (const auto& mm : report.mismatches) {
        out << "  id " << mm.id << ": " << to_string(mm.reference) << '=' << mm.reference_rank << ' '
            << to_string(mm.other) << '=' << mm.other_rank << '\n';
    }
}

namespace {

std::uint64_t whole_number(const std::string& text)
{
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw std::invalid_argument(text);
    }
    return value;
}

} // namespace

DatasetSource parse_dataset_source(const std::string& text)
{
    static const std::string prefix = "gen:";
    if (text.rfind(prefix, 0) != 0) {
        return {text, std::filesystem::path(text), std::nullopt};
    }
    GenSpec spec;
    bool has_kind = false;
    bool has_n = false;
    bool has_m = false;
    bool has_seed = false;
    std::istringstream in(text.substr(prefix.size()));
    std::string field;
    while (std::getline(in, field, ',')) {
        const auto eq = field.find('=');
        if (eq == std::string::npos) {
            throw Error(ErrorCode::ParseError, "generator field '" + field + "' lacks '='");
        }
        const auto key = field.substr(0, eq);
        const auto value = field.substr(eq + 1);
        try {
            if (key == "kind") {
                spec.kind = parse_gen_kind(value);
                has_kind = true;
            } else if (key == "n") {
                spec.n = whole_number(value);
                has_n = true;
            } else if (key == "m") {
                spec.m = whole_number(value);
                has_m = true;
            } else if (key == "seed") {
                spec.seed = whole_number(value);
                has_seed = true;
            } else if (key == "k") {
                spec.k_fronts = whole_number(value);
            } else if (key == "dup") {
                std::size_t used = 0;
                spec.dup_fraction = std::stod(value, &used);
                if (used != value.size()) {
                    throw std::invalid_argument(value);
                }
            } else if (key == "quant") {
                spec.quant_levels = whole_number(value);
            } else {
                throw Error(ErrorCode::ParseError, "unknown generator field '" + key + "'");
            }
        } catch (const std::logic_error&) {
            throw Error(ErrorCode::ParseError, "bad value in generator field '" + field + "'");
        }
    }
    if (!has_kind) {
        spec.kind = GenKind::Uniform;
    }
    if (!has_n || !has_m || !has_seed) {
        throw Error(ErrorCode::ParseError, "generator spec '" + text + "' needs n, m and seed");
    }
    return {format_gen_spec(spec), std::nullopt, spec};
}

std::string format_gen_spec(const GenSpec& spec)
{
    std::ostringstream out;
    out << "gen:kind=" << to_string(spec.kind) << ",n=" << spec.n << ",m=" << spec.m << ",seed=" << spec.seed;
    if (spec.kind == GenKind::Shells) {
        out << ",k=" << spec.k_fronts;
    }
    if (spec.kind == GenKind::Degenerate) {
        out << ",dup=" << spec.dup_fraction << ",quant=" << spec.quant_levels;
    }
    return out.str();
}

namespace {

ObjectiveMatrix load(const DatasetSource& source)
{
    if (source.spec) {
        return generate(*source.spec);
    }
    return parse_population(*source.path);
}

struct Cell {
    Algorithm algorithm;
    std::size_t dataset;
};

struct CellOutcome {
    std::vector<BenchRecord> records;
    std::optional<CellFailure> failure;
};

CellOutcome run_cell(const BenchConfig& config, const Cell& cell, const DatasetSource& source,
                     const ObjectiveMatrix& matrix)
{
    CellOutcome outcome;
    const std::string name = to_string(cell.algorithm);
    try {
        for (std::size_t w = 0; w < config.warmup; ++w) {
            ComparisonTally tally;
            rank_with(cell.algorithm, matrix, tally);
        }
        for (std::size_t rep = 0; rep < config.repetitions; ++rep) {
            ComparisonTally tally;
            const auto start = std::chrono::steady_clock::now();
            const auto ranks = rank_with(cell.algorithm, matrix, tally);
            const auto stop = std::chrono::steady_clock::now();
            BenchRecord record;
            record.algorithm = name;
            record.dataset = source.id;
            record.n = matrix.rows();
            record.m = matrix.objectives();
            record.rep = rep;
            record.wall_time_ns =
                static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count());
            record.comparisons = tally.count;
            record.fronts = ranks.front_count();
            outcome.records.push_back(std::move(record));
        }
    } catch (const std::exception& e) {
        outcome.records.clear();
        outcome.failure = CellFailure{name, source.id, e.what()};
    }
    return outcome;
}

} // namespace

BenchResult run_benchmark(const BenchConfig& config)
{
    if (config.repetitions == 0) {
        throw Error(ErrorCode::InvalidArgument, "repetitions must be >= 1");
    }
    if (config.algorithms.empty() || config.datasets.empty()) {
        throw Error(ErrorCode::InvalidArgument, "need at least one algorithm and one dataset");
    }
    std::vector<ObjectiveMatrix> matrices;
    matrices.reserve(config.datasets.size());
    for (const auto& source : config.datasets) {
        matrices.push_back(load(source));
    }

    std::vector<Cell> cells;
    for (std::size_t d = 0; d < config.datasets.size(); ++d) {
        for (auto a : config.algorithms) {
            cells.push_back({a, d});
        }
    }

    std::vector<CellOutcome> outcomes(cells.size());
    auto work = [&](std::size_t i) {
        outcomes[i] = run_cell(config, cells[i], config.datasets[cells[i].dataset], matrices[cells[i].dataset]);
    };
    if (config.parallel_cells && cells.size() > 1) {
        const auto workers =
            std::min<std::size_t>(cells.size(), std::max(1U, std::thread::hardware_concurrency()));
        std::atomic<std::size_t> next{0};
        std::vector<std::jthread> pool;
        for (std::size_t t = 0; t < workers; ++t) {
            pool.emplace_back([&] {
                for (auto i = next.fetch_add(1); i < cells.size(); i = next.fetch_add(1)) {
                    work(i);
                }
            });
        }
    } else {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            work(i);
        }
    }

    BenchResult result;
    for (auto& outcome : outcomes) {
        std::move(outcome.records.begin(), outcome.records.end(), std::back_inserter(result.records));
        if (outcome.failure) {
            result.failures.push_back(std::move(*outcome.failure));
        }
    }
    return result;
}

std::vector<CellSummary> summarize(const std::vector<BenchRecord>& records)
{
    std::vector<CellSummary> out;
    std::map<std::pair<std::string, std::string>, std::vector<const BenchRecord*>> cells;
    std::vector<std::pair<std::string, std::string>> order;
    for (const auto& r : records) {
        auto key = std::make_pair(r.algorithm, r.dataset);
        auto [it, inserted] = cells.try_emplace(key);
        if (inserted) {
            order.push_back(key);
        }
        it->second.push_back(&r);
    }
    for (const auto& key : order) {
        const auto& rs = cells[key];
        std::vector<double> times;
        double total = 0.0;
        for (const auto* r : rs) {
            times.push_back(static_cast<double>(r->wall_time_ns));
            total += times.back();
        }
        std::sort(times.begin(), times.end());
        const auto mid = times.size() / 2;
        CellSummary s;
        s.algorithm = key.first;
        s.dataset = key.second;
        s.n = rs.front()->n;
        s.m = rs.front()->m;
        s.repetitions = rs.size();
        s.mean_ns = total / static_cast<double>(rs.size());
        s.median_ns = times.size() % 2 == 1 ? times[mid] : 0.5 * (times[mid - 1] + times[mid]);
        s.comparisons = rs.front()->comparisons;
        s.fronts = rs.front()->fronts;
        out.push_back(std::move(s));
    }
    return out;
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRecord>& records)
{
    out << "algorithm,dataset,n,m,rep,wall_time_ns,comparisons,fronts\n";
    for (const auto& r : records) {
        // generator specs contain commas
        std::string dataset;
        for (const char c : r.dataset) {
            dataset += c == '"' ? "\"\"" : std::string(1, c);
        }
        out << r.algorithm << ",\"" << dataset << "\"," << r.n << ',' << r.m << ',' << r.rep << ','
            << r.wall_time_ns << ',' << r.comparisons << ',' << r.fronts << '\n';
    }
}

namespace {

std::vector<std::string> split_csv_row(const std::string& line)
{
    std::vector<std::string> fields(1);
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (c == '"' && quoted && i + 1 < line.size() && line[i + 1] == '"') {
            fields.back() += '"';
            ++i;
        } else if (c == '"') {
            quoted = !quoted;
        } else if (c == ',' && !quoted) {
            fields.emplace_back();
        } else {
            fields.back() += c;
        }
    }
    return fields;
}

} // namespace

std::vector<BenchRecord> parse_bench_csv(std::istream& in)
{
    std::string line;
    if (!std::getline(in, line) || line != "algorithm,dataset,n,m,rep,wall_time_ns,comparisons,fronts") {
        throw Error(ErrorCode::ParseError, "benchmark CSV header mismatch");
    }
    std::vector<BenchRecord> records;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) {
            continue;
        }
        const auto f = split_csv_row(line);
        if (f.size() != 8) {
            throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": expected 8 fields");
        }
        try {
            BenchRecord r;
            r.algorithm = f[0];
            r.dataset = f[1];
            r.n = std::stoull(f[2]);
            r.m = std::stoull(f[3]);
            r.rep = std::stoull(f[4]);
            r.wall_time_ns = std::stoull(f[5]);
            r.comparisons = std::stoull(f[6]);
            r.fronts = static_cast<std::uint32_t>(std::stoul(f[7]));
            records.push_back(std::move(r));
        } catch (const std::logic_error&) {
            throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": malformed number");
        }
    }
    return records;
}

void write_summary_csv(std::ostream& out, const std::vector<CellSummary>& summary)
{
    out << "algorithm,dataset,n,m,reps,mean_ns,median_ns,comparisons,fronts\n";
    out << std::fixed << std::setprecision(1);
    for (const auto& s : summary) {
        out << s.algorithm << ",\"" << s.dataset << "\"," << s.n << ',' << s.m << ',' << s.repetitions << ','
            << s.mean_ns << ',' << s.median_ns << ',' << s.comparisons << ',' << s.fronts << '\n';
    }
}

namespace {

// series[x][algorithm] -> mean times (ms) of every dataset at that point
using Series = std::map<std::size_t, std::map<std::string, std::vector<double>>>;

void write_series(const std::filesystem::path& path, const std::string& x_label, const Series& series,
                  const std::vector<std::string>& algorithms)
{
    std::ofstream out(path);
    if (!out) {
        throw Error(ErrorCode::IoError, "cannot open " + path.string() + " for writing");
    }
    out << "# " << x_label;
    for (const auto& a : algorithms) {
        out << ' ' << a << "_ms";
    }
    out << '\n' << std::setprecision(6);
    for (const auto& [x, per_algo] : series) {
        out << x;
        for (const auto& a : algorithms) {
            const auto it = per_algo.find(a);
            if (it == per_algo.end()) {
                out << " NaN";
                continue;
            }
            double total = 0.0;
            for (double t : it->second) {
                total += t;
            }
            out << ' ' << total / static_cast<double>(it->second.size());
        }
        out << '\n';
    }
}

} // namespace

std::vector<std::filesystem::path> write_plot_data(const std::filesystem::path& csv_path,
                                                   const std::vector<CellSummary>& summary)
{
    std::vector<std::string> algorithms;
    std::map<std::size_t, Series> by_n; // time vs M at fixed N
    std::map<std::size_t, Series> by_m; // time vs N at fixed M
    for (const auto& s : summary) {
        if (std::find(algorithms.begin(), algorithms.end(), s.algorithm) == algorithms.end()) {
            algorithms.push_back(s.algorithm);
        }
        const double ms = s.mean_ns / 1e6;
        by_n[s.n][s.m][s.algorithm].push_back(ms);
        by_m[s.m][s.n][s.algorithm].push_back(ms);
    }
    auto stem = csv_path;
    stem.replace_extension();
    std::vector<std::filesystem::path> written;
    for (const auto& [n, series] : by_n) {
        std::filesystem::path p = stem.string() + ".fixed_n" + std::to_string(n) + ".dat";
        write_series(p, "m", series, algorithms);
        written.push_back(std::move(p));
    }
    for (const auto& [m, series] : by_m) {
        std::filesystem::path p = stem.string() + ".fixed_m" + std::to_string(m) + ".dat";
        write_series(p, "n", series, algorithms);
        written.push_back(std::move(p));
    }
    return written;
}

} // namespace ndsort
