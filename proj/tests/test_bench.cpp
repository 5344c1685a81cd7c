#include "ndsort/bench.hpp"
#include "ndsort/io.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace ndsort;

namespace {

DatasetSource inline_source(GenKind kind, std::size_t n, std::size_t m, std::uint64_t seed)
{
    GenSpec spec;
    spec.kind = kind;
    spec.n = n;
    spec.m = m;
    spec.seed = seed;
    if (kind == GenKind::Shells) {
        spec.k_fronts = 3;
    }
    return parse_dataset_source(format_gen_spec(spec));
}

} // namespace

TEST_SUITE("bench")
{
    TEST_CASE("algorithm names")
    {
        for (auto a : {Algorithm::Mnds, Algorithm::Fnds, Algorithm::EnsSs, Algorithm::EnsBs}) {
            CHECK(parse_algorithm(to_string(a)) == a);
        }
        CHECK(parse_algorithm_list("mnds,ens-bs")
              == std::vector<Algorithm>{Algorithm::Mnds, Algorithm::EnsBs});
        CHECK_THROWS_AS(parse_algorithm("nsga"), Error);
        CHECK_THROWS_AS(parse_algorithm_list(""), Error);
    }

    TEST_CASE("verify reports agreement and needs two sorters")
    {
        const auto p = generate({GenKind::Degenerate, 120, 4, 3, 1, 0.3, 5});
        const auto report = verify(p, {Algorithm::Mnds, Algorithm::Fnds, Algorithm::EnsSs, Algorithm::EnsBs});
        CHECK(report.agreed());
        std::ostringstream text;
        print_report(text, report);
        CHECK(text.str() == "agreement: mnds fnds ens-ss ens-bs\n");
        CHECK(verify(p, {Algorithm::Mnds, Algorithm::Mnds}).agreed());
        CHECK_THROWS_AS(verify(p, {Algorithm::Mnds}), Error);
    }

    TEST_CASE("inline generator specs")
    {
        const auto src = parse_dataset_source("gen:kind=degenerate,n=50,m=3,seed=4,dup=0.25,quant=6");
        REQUIRE(src.spec);
        CHECK_FALSE(src.path);
        CHECK(*src.spec == GenSpec{GenKind::Degenerate, 50, 3, 4, 1, 0.25, 6});
        CHECK(parse_dataset_source(format_gen_spec(*src.spec)).spec == src.spec);

        const auto file = parse_dataset_source("data/pop.txt");
        CHECK(file.path == std::filesystem::path("data/pop.txt"));
        CHECK_FALSE(file.spec);

        CHECK_THROWS_AS(parse_dataset_source("gen:kind=uniform,n=5"), Error);
        CHECK_THROWS_AS(parse_dataset_source("gen:kind=uniform,n=x,m=2,seed=1"), Error);
        CHECK_THROWS_AS(parse_dataset_source("gen:kind=uniform,n=5,m=2,seed=1,colour=red"), Error);
    }

    TEST_CASE("one repetition gives one record per cell")
    {
        BenchConfig config;
        config.algorithms = {Algorithm::Mnds, Algorithm::Fnds, Algorithm::EnsBs};
        config.datasets = {inline_source(GenKind::Uniform, 60, 3, 1), inline_source(GenKind::Shells, 30, 2, 2)};
        config.repetitions = 1;
        config.warmup = 0;
        const auto result = run_benchmark(config);
        CHECK(result.failures.empty());
        REQUIRE(result.records.size() == 6);
        CHECK(result.records[0].algorithm == "mnds");
        CHECK(result.records[1].algorithm == "fnds");
        CHECK(result.records[3].dataset == config.datasets[1].id);
        CHECK(result.records[5].dataset == config.datasets[1].id);
        CHECK(result.records[5].fronts == 3);
    }

    TEST_CASE("comparison counts are identical across repetitions and threads")
    {
        BenchConfig config;
        config.algorithms = {Algorithm::Mnds, Algorithm::Fnds, Algorithm::EnsSs, Algorithm::EnsBs};
        config.datasets = {inline_source(GenKind::Uniform, 200, 5, 1), inline_source(GenKind::Uniform, 150, 8, 2)};
        config.repetitions = 4;
        config.warmup = 1;
        const auto serial = run_benchmark(config);
        config.parallel_cells = true;
        const auto parallel = run_benchmark(config);
        REQUIRE(serial.records.size() == 32);
        REQUIRE(parallel.records.size() == 32);
        for (std::size_t i = 0; i < serial.records.size(); ++i) {
            const auto& a = serial.records[i];
            const auto& b = parallel.records[i];
            CHECK(a.algorithm == b.algorithm);
            CHECK(a.dataset == b.dataset);
            CHECK(a.rep == b.rep);
            CHECK(a.comparisons == b.comparisons);
            CHECK(a.fronts == b.fronts);
            CHECK(a.comparisons == serial.records[i - i % 4].comparisons);
        }
    }

    TEST_CASE("missing dataset propagates, cells do not")
    {
        BenchConfig config;
        config.algorithms = {Algorithm::Mnds};
        config.datasets = {parse_dataset_source("/nonexistent/pop.txt")};
        config.repetitions = 1;
        CHECK_THROWS_AS(run_benchmark(config), Error);
    }

    TEST_CASE("MNDS is faster than FNDS on N = 800, M = 10")
    {
        BenchConfig config;
        config.algorithms = {Algorithm::Mnds, Algorithm::Fnds};
        config.datasets = {inline_source(GenKind::Uniform, 800, 10, 1)};
        config.repetitions = 10;
        config.warmup = 1;
        const auto summary = summarize(run_benchmark(config).records);
        REQUIRE(summary.size() == 2);
        CHECK(summary[0].mean_ns < summary[1].mean_ns);
        CHECK(summary[0].comparisons >= 1.0e4);
    }

    TEST_CASE("benchmark CSV round trip and summary")
    {
        std::vector<BenchRecord> records = {
            {"mnds", "gen:kind=uniform,n=4,m=2,seed=1", 4, 2, 0, 300, 10, 1},
            {"mnds", "gen:kind=uniform,n=4,m=2,seed=1", 4, 2, 1, 100, 10, 1},
            {"mnds", "gen:kind=uniform,n=4,m=2,seed=1", 4, 2, 2, 200, 10, 1},
            {"fnds", "pop \"a\".txt", 9, 3, 0, 50, 36, 2},
        };
        std::stringstream csv;
        write_bench_csv(csv, records);
        CHECK(csv.str().rfind("algorithm,dataset,n,m,rep,wall_time_ns,comparisons,fronts\n", 0) == 0);
        CHECK(parse_bench_csv(csv) == records);

        const auto summary = summarize(records);
        REQUIRE(summary.size() == 2);
        CHECK(summary[0].repetitions == 3);
        CHECK(summary[0].mean_ns == doctest::Approx(200.0));
        CHECK(summary[0].median_ns == doctest::Approx(200.0));
        CHECK(summary[1].comparisons == 36);

        std::ostringstream summary_csv;
        write_summary_csv(summary_csv, summary);
        CHECK(summary_csv.str().rfind("algorithm,dataset,n,m,reps,mean_ns,median_ns,comparisons,fronts\n", 0) == 0);

        std::stringstream bad("algorithm,n\nmnds,3\n");
        CHECK_THROWS_AS(parse_bench_csv(bad), Error);
    }

    TEST_CASE("plot data files follow both axes")
    {
        const auto dir = std::filesystem::temp_directory_path() / "ndsort_bench_test";
        std::filesystem::create_directories(dir);
        std::vector<CellSummary> summary = {
            {"mnds", "a", 500, 5, 1, 1e6, 1e6, 1, 1},
            {"fnds", "a", 500, 5, 1, 4e6, 4e6, 1, 1},
            {"mnds", "b", 500, 10, 1, 2e6, 2e6, 1, 1},
            {"mnds", "c", 1000, 10, 1, 3e6, 3e6, 1, 1},
        };
        const auto files = write_plot_data(dir / "run.csv", summary);
        REQUIRE(files.size() == 4);
        CHECK(files[0] == dir / "run.fixed_n500.dat");
        CHECK(files[3] == dir / "run.fixed_m10.dat");
        std::ifstream in(files[0]);
        std::stringstream text;
        text << in.rdbuf();
        CHECK(text.str() == "# m mnds_ms fnds_ms\n5 1 4\n10 2 NaN\n");
        std::filesystem::remove_all(dir);
    }
}
