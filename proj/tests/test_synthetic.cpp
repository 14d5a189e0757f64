#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>
#include <vector>

#include "smspk/errors.hpp"
#include "smspk/shortest_paths.hpp"
#include "smspk/synthetic.hpp"
#include "test_util.hpp"

using namespace smspk;
using testutil::make_chain;
using testutil::make_graph;

TEST_CASE("degenerate probabilities pin the labels exactly") {
    const auto g = make_chain("chain12", 12);
    SyntheticSpec spec;
    spec.groups = 3;
    spec.patients_per_group = 5;
    spec.seed = 7;

    SUBCASE("p_in one, p_out zero copies the driver indicator") {
        spec.p_in = 1.0;
        spec.p_out = 0.0;
        const auto cohort = generate_cohort(g, spec);
        REQUIRE(cohort.driver_paths.size() == 3);
        for (int i = 0; i < 15; ++i) {
            const auto& driver =
                cohort.driver_paths[static_cast<std::size_t>(cohort.true_group[
                    static_cast<std::size_t>(i)])];
            Eigen::VectorXd indicator = Eigen::VectorXd::Zero(12);
            for (int v : driver.vertices) indicator(v) = 1.0;
            CHECK(cohort.labels.row(i).transpose() == indicator);
        }
    }

    SUBCASE("both probabilities zero gives a silent cohort") {
        spec.p_in = 0.0;
        spec.p_out = 0.0;
        const auto cohort = generate_cohort(g, spec);
        CHECK(cohort.labels.isZero(0.0));
    }

    SUBCASE("both probabilities one mutates everything") {
        spec.p_in = 1.0;
        spec.p_out = 1.0;
        const auto cohort = generate_cohort(g, spec);
        CHECK(cohort.labels == Eigen::MatrixXd::Ones(15, 12));
    }
}

TEST_CASE("cohort shape, ids, and group layout") {
    const auto g = make_chain("chain10", 10);
    SyntheticSpec spec;
    spec.groups = 3;
    spec.patients_per_group = 4;
    spec.seed = 11;
    const auto cohort = generate_cohort(g, spec);

    REQUIRE(cohort.patients.size() == 12);
    CHECK(cohort.patients[0] == "P0000");
    CHECK(cohort.patients[11] == "P0011");
    CHECK(cohort.labels.rows() == 12);
    CHECK(cohort.labels.cols() == 10);
    for (int i = 0; i < 12; ++i) CHECK(cohort.true_group[static_cast<std::size_t>(i)] == i / 4);
}

TEST_CASE("driver paths are distinct and sized to the diameter band") {
    const auto g = make_chain("chain15", 15);
    const int d = diameter(g);
    REQUIRE(d == 14);
    SyntheticSpec spec;
    spec.groups = 4;
    spec.patients_per_group = 2;
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
        spec.seed = seed;
        const auto cohort = generate_cohort(g, spec);
        std::set<std::vector<int>> seen;
        for (const auto& driver : cohort.driver_paths) {
            CHECK(driver.length() >= (d + 1) / 2);
            CHECK(driver.length() <= d);
            seen.insert(driver.vertices);
        }
        CHECK(seen.size() == 4);
    }
}

TEST_CASE("generation is reproducible from the seed") {
    const auto g = make_chain("chain9", 9);
    SyntheticSpec spec;
    spec.groups = 2;
    spec.patients_per_group = 30;
    spec.p_in = 0.6;
    spec.p_out = 0.15;
    spec.seed = 12345;
    const auto a = generate_cohort(g, spec);
    const auto b = generate_cohort(g, spec);
    CHECK(a.labels == b.labels);
    CHECK(a.patients == b.patients);
    CHECK(a.true_group == b.true_group);
    REQUIRE(a.driver_paths.size() == b.driver_paths.size());
    for (std::size_t i = 0; i < a.driver_paths.size(); ++i)
        CHECK(a.driver_paths[i].vertices == b.driver_paths[i].vertices);
}

TEST_CASE("mutation counts sit inside binomial bounds") {
    const auto g = make_chain("chain12", 12);
    SyntheticSpec spec;
    spec.groups = 3;
    spec.patients_per_group = 200;
    spec.p_in = 0.7;
    spec.p_out = 0.1;
    spec.seed = 321;
    const auto cohort = generate_cohort(g, spec);

    for (int group = 0; group < 3; ++group) {
        const double s =
            static_cast<double>(cohort.driver_paths[static_cast<std::size_t>(group)]
                                    .vertices.size());
        const double mean_per_patient = spec.p_in * s + spec.p_out * (12.0 - s);
        const double var_per_patient =
            s * spec.p_in * (1.0 - spec.p_in) + (12.0 - s) * spec.p_out * (1.0 - spec.p_out);
        double total = 0.0;
        for (int i = group * 200; i < (group + 1) * 200; ++i) total += cohort.labels.row(i).sum();
        const double empirical = total / 200.0;
        const double sigma = std::sqrt(var_per_patient / 200.0);
        CHECK(std::abs(empirical - mean_per_patient) <= 3.0 * sigma);
    }
}

TEST_CASE("cohort generation rejects bad parameters") {
    const auto g = make_chain("chain8", 8);
    SyntheticSpec spec;
    spec.groups = 1;
    CHECK_THROWS_AS(generate_cohort(g, spec), ConfigError);
    spec.groups = 2;
    spec.patients_per_group = 0;
    CHECK_THROWS_AS(generate_cohort(g, spec), ConfigError);
    spec.patients_per_group = 1;
    spec.p_in = 1.5;
    CHECK_THROWS_AS(generate_cohort(g, spec), ConfigError);
    spec.p_in = 0.5;
    spec.p_out = -0.5;
    CHECK_THROWS_AS(generate_cohort(g, spec), ConfigError);

    // A single edge has one canonical path: not enough for two groups.
    const auto tiny = make_graph("edge", 2, {{0, 1}});
    SyntheticSpec two;
    two.groups = 2;
    two.patients_per_group = 1;
    CHECK_THROWS_AS(generate_cohort(tiny, two), DataError);
}

TEST_CASE("accuracy scoring") {
    SUBCASE("perfect and relabeled predictions score one") {
        CHECK(clustering_accuracy({0, 0, 1, 1, 2}, {0, 0, 1, 1, 2}) == 1.0);
        CHECK(clustering_accuracy({2, 2, 0, 0, 1}, {0, 0, 1, 1, 2}) == 1.0);
    }

    SUBCASE("half-crossed pairs score one half") {
        CHECK(clustering_accuracy({0, 1, 0, 1}, {0, 0, 1, 1}) == 0.5);
    }

    SUBCASE("all-in-one prediction scores the largest group share") {
        CHECK(clustering_accuracy({0, 0, 0}, {0, 0, 1}) == doctest::Approx(2.0 / 3.0));
        CHECK(clustering_accuracy({0, 0, 0, 0}, {0, 1, 2, 2}) == 0.5);
    }

    SUBCASE("is invariant to patient order") {
        const std::vector<int> predicted = {0, 1, 2, 0, 1, 2, 1};
        const std::vector<int> truth = {1, 1, 2, 0, 0, 2, 2};
        const double base = clustering_accuracy(predicted, truth);
        const std::vector<std::size_t> perm = {6, 2, 4, 0, 5, 1, 3};
        std::vector<int> p2, t2;
        for (std::size_t i : perm) {
            p2.push_back(predicted[i]);
            t2.push_back(truth[i]);
        }
        CHECK(clustering_accuracy(p2, t2) == base);
    }

    SUBCASE("rejects malformed inputs") {
        using ints = std::vector<int>;
        CHECK_THROWS_AS(clustering_accuracy(ints{0, 1}, ints{0}), DataError);
        CHECK_THROWS_AS(clustering_accuracy(ints{}, ints{}), DataError);
        CHECK_THROWS_AS(clustering_accuracy(ints{-1, 0}, ints{0, 0}), DataError);
        CHECK_THROWS_AS(clustering_accuracy(ints{0, 0}, ints{0, -2}), DataError);
        CHECK_THROWS_AS(
            clustering_accuracy(ints{0, 1, 2, 3, 4, 5, 6}, ints{0, 0, 0, 0, 0, 0, 0}),
            ConfigError);
    }
}

TEST_CASE("disjoint planted paths are recovered perfectly") {
    // Three separate edges: the only eligible driver paths are the edges
    // themselves, so the three groups never share a mutated gene and the
    // kernel is block diagonal.
    const auto g = make_graph("threeedges", 6, {{0, 1}, {2, 3}, {4, 5}});
    SimulationOptions opts;
    opts.groups = 3;
    opts.patients_per_group = 20;
    opts.repetitions = 1;
    opts.seed = 5;
    const auto rows = run_simulation_grid(g, {1.0}, {0.0}, {0.5}, opts);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].mean_accuracy == 1.0);
    CHECK(rows[0].sd_accuracy == 0.0);
}

TEST_CASE("matched probabilities collapse accuracy to chance") {
    const auto g = make_chain("chain12", 12);
    SimulationOptions opts;
    opts.groups = 3;
    opts.patients_per_group = 30;
    opts.repetitions = 20;
    opts.seed = 99;
    const auto rows = run_simulation_grid(g, {0.3}, {0.3}, {0.4}, opts);
    REQUIRE(rows.size() == 1);
    // Identical in/out probabilities erase the planted structure; accuracy
    // hovers at the best-bijection baseline for random splits, which sits a
    // bit above 1/3 for finite cohorts.
    CHECK(rows[0].mean_accuracy >= 1.0 / 3.0 - 0.05);
    CHECK(rows[0].mean_accuracy <= 1.0 / 3.0 + 3.0 * rows[0].sd_accuracy + 0.15);
}

TEST_CASE("grid enumeration follows input order") {
    const auto g = make_chain("chain10", 10);
    SimulationOptions opts;
    opts.groups = 2;
    opts.patients_per_group = 6;
    opts.repetitions = 2;
    opts.seed = 1;
    const std::vector<double> p_ins = {0.9, 0.7};
    const std::vector<double> p_outs = {0.05, 0.2};
    const std::vector<double> alphas = {0.0, 0.4, 0.8};
    const auto rows = run_simulation_grid(g, p_ins, p_outs, alphas, opts);
    REQUIRE(rows.size() == 12);
    std::size_t r = 0;
    for (double p_in : p_ins)
        for (double p_out : p_outs)
            for (double alpha : alphas) {
                CHECK(rows[r].p_in == p_in);
                CHECK(rows[r].p_out == p_out);
                CHECK(rows[r].alpha == alpha);
                CHECK(rows[r].repetitions == 2);
                CHECK(rows[r].mean_accuracy >= 0.0);
                CHECK(rows[r].mean_accuracy <= 1.0);
                CHECK(rows[r].sd_accuracy >= 0.0);
                ++r;
            }

    const auto again = run_simulation_grid(g, p_ins, p_outs, alphas, opts);
    CHECK(simulation_to_csv(rows) == simulation_to_csv(again));
}

TEST_CASE("grid driver rejects empty or invalid settings") {
    const auto g = make_chain("chain10", 10);
    SimulationOptions opts;
    opts.patients_per_group = 2;
    opts.repetitions = 0;
    CHECK_THROWS_AS(run_simulation_grid(g, {0.5}, {0.1}, {0.3}, opts), ConfigError);
    opts.repetitions = 1;
    CHECK_THROWS_AS(run_simulation_grid(g, {}, {0.1}, {0.3}, opts), ConfigError);
    CHECK_THROWS_AS(run_simulation_grid(g, {0.5}, {0.1}, {1.0}, opts), ConfigError);
    CHECK_THROWS_AS(run_simulation_grid(g, {0.5}, {0.1}, {-0.1}, opts), ConfigError);
}

TEST_CASE("simulation CSV layout") {
    SimulationRow row;
    row.p_in = 0.8;
    row.p_out = 0.05;
    row.alpha = 0.4;
    row.repetitions = 100;
    row.mean_accuracy = 0.8675;
    row.sd_accuracy = 0.0321;
    CHECK(simulation_to_csv({row}) ==
          "p_in,p_out,alpha,repetitions,mean_accuracy,sd_accuracy\n"
          "0.8,0.05,0.4,100,0.8675,0.0321\n");

    testutil::TempDir dir;
    write_simulation_csv({row}, dir.file("sim.csv"));
    CHECK(std::filesystem::exists(dir.file("sim.csv")));
}
