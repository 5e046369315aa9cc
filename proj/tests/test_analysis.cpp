#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "avgsearch/analysis.hpp"
#include "avgsearch/errors.hpp"
#include "avgsearch/kernel.hpp"
#include "avgsearch/pointset.hpp"
#include "avgsearch/rng.hpp"
#include "avgsearch/search.hpp"
#include "avgsearch/torus.hpp"

#include "oracles.hpp"

using namespace avgsearch;

TEST_CASE("exp_sum basics") {
    PointSet set = random_points(2, 10, 3);
    CHECK(exp_sum(set, {0, 0}) == std::complex<double>(1.0, 0.0));

    PointSet equispaced = equispaced_points(1, 4);
    CHECK(std::abs(exp_sum(equispaced, {4}) - std::complex<double>(1.0, 0.0)) <= 1e-14);
    for (int k : {1, 2, 3})
        CHECK(std::abs(exp_sum(equispaced, {k})) <= 1e-14);

    PointSet single(1, {0.25});
    CHECK(std::abs(exp_sum(single, {1}) - std::complex<double>(0.0, 1.0)) <= 1e-15);

    CHECK_THROWS_AS(exp_sum(set, {1}), DimensionMismatch);
}

TEST_CASE("pair energy of a single point is F0(0)") {
    auto kernel = FourierKernel::korobov(1, 2.0, 4);
    PointSet set(1, {0.37});
    CHECK(pair_energy_direct(kernel, set) ==
          doctest::Approx(2.8472222222222223).epsilon(1e-13));
    CHECK(pair_energy_spectral(kernel, set) ==
          doctest::Approx(2.8472222222222223).epsilon(1e-13));
}

TEST_CASE("equispaced m=2 pair energy is 2.5 by both routes") {
    // brute-force double-sum oracle: 2 F0(0) + 2 F0(1/2) = 2.5
    auto kernel = FourierKernel::korobov(1, 2.0, 4);
    PointSet set = equispaced_points(1, 2);
    double expected = oracle::pair_energy(1, 2.0, 4, set.coords());
    CHECK(expected == doctest::Approx(2.5).epsilon(1e-12));
    CHECK(pair_energy_direct(kernel, set) == doctest::Approx(2.5).epsilon(1e-12));
    CHECK(pair_energy_spectral(kernel, set) == doctest::Approx(2.5).epsilon(1e-12));
}

TEST_CASE("direct energy matches the full-box oracle on a random set") {
    auto kernel = FourierKernel::korobov(2, 2.0, 3);
    PointSet set = random_points(2, 6, 77);
    double expected = oracle::pair_energy(2, 2.0, 3, set.coords());
    CHECK(pair_energy_direct(kernel, set) ==
          doctest::Approx(expected).epsilon(1e-10));
}

TEST_CASE("spectral identity holds on random pairs") {
    SplitMix64 rng(2025);
    for (int trial = 0; trial < 50; ++trial) {
        int dim = 1 + static_cast<int>(rng.next_u64() % 3);
        std::size_t m = 1 + rng.next_u64() % 64;
        int K = 1 + static_cast<int>(rng.next_u64() % 8);
        double r = 1.5 + 1.5 * rng.next_double();
        auto kernel = FourierKernel::korobov(dim, r, K);
        PointSet set = random_points(dim, m, rng.next_u64());

        double direct = pair_energy_direct(kernel, set);
        double spectral = pair_energy_spectral(kernel, set);
        CHECK(spectral >= 0.0);
        CHECK(std::abs(direct - spectral) <= 1e-9 * std::max(1.0, std::abs(direct)));
    }
}

TEST_CASE("wce of a single point at the origin is the sup norm") {
    auto kernel = FourierKernel::korobov(1, 2.0, 4);
    PointSet set(1, {0.0});
    auto wce = wce_l1_class(kernel, set, 1024);
    CHECK(wce.value == doctest::Approx(2.8472222222222223).epsilon(1e-13));
    REQUIRE(wce.argmax.size() == 1);
    CHECK(wce.argmax[0] == 0.0);
    CHECK(wce.grid == 1024);
}

TEST_CASE("wce of the two-point equispaced set") {
    auto kernel = FourierKernel::korobov(1, 2.0, 4);
    PointSet set = equispaced_points(1, 2);
    auto wce = wce_l1_class(kernel, set, 1024);
    // value at y=0 is (F0(0) + F0(1/2)) / 2 = 0.625; the scan maximum is at
    // least that and matches a dense oracle scan
    CHECK(wce.value >= 0.625 - 1e-12);
    auto scan = oracle::scan_1d(2.0, 4, set.coords(), 1024);
    CHECK(wce.value == doctest::Approx(scan.max_abs_mean).epsilon(1e-11));
    CHECK(wce.value <= kernel.sup_norm_centered() * (1.0 + 1e-12));
}

TEST_CASE("wce never exceeds the sup norm") {
    SplitMix64 rng(8);
    auto kernel = FourierKernel::korobov(2, 2.0, 4);
    double sup = kernel.sup_norm_centered();
    for (int trial = 0; trial < 5; ++trial) {
        PointSet set = random_points(2, 1 + rng.next_u64() % 20, rng.next_u64());
        auto wce = wce_l1_class(kernel, set, 32);
        CHECK(wce.value <= sup * (1.0 + 1e-12));
    }
}

TEST_CASE("g_sup_norm is the same computation as wce_l1_class") {
    auto kernel = FourierKernel::korobov(1, 2.0, 8);
    PointSet set = random_points(1, 12, 5);
    auto a = wce_l1_class(kernel, set, 512);
    auto b = g_sup_norm(kernel, set, 512);
    CHECK(a.value == b.value);
    CHECK(a.argmax == b.argmax);
}

TEST_CASE("integration error at the wce argmax reproduces the estimate") {
    auto kernel = FourierKernel::korobov(2, 2.0, 4);
    PointSet set = random_points(2, 9, 123);
    auto wce = wce_l1_class(kernel, set, 64);
    CHECK(integration_error(kernel, set, wce.argmax) == wce.value);  // same code path
}

TEST_CASE("qmc_evaluate") {
    PointSet set = random_points(1, 7, 19);
    CHECK(qmc_evaluate([](std::span<const double>) { return 0.25; }, set) == 0.25);
    CHECK(qmc_evaluate([](std::span<const double>) { return 0.7; }, set) ==
          doctest::Approx(0.7).epsilon(1e-14));

    // the character integrand reproduces exp_sum
    FrequencyIndex k{3};
    auto q = exp_sum(set, k);
    double re = qmc_evaluate(
        [&](std::span<const double> x) { return std::cos(oracle::two_pi * k[0] * x[0]); }, set);
    CHECK(re == doctest::Approx(q.real()).epsilon(1e-12));
}

TEST_CASE("cs_bound and theorem_bound") {
    auto kernel = FourierKernel::korobov(1, 2.0, 4);
    double sup = kernel.sup_norm_centered();

    // m=1: all three quantities coincide at F0(0)
    PointSet one(1, {0.0});
    CHECK(cs_bound(kernel, one) == doctest::Approx(sup).epsilon(1e-12));
    CHECK(theorem_bound(kernel, 1) == sup);

    // equispaced m=2: sqrt(sup) * (1/2) * sqrt(2.5) = 1.3340...
    PointSet two = equispaced_points(1, 2);
    double expected = std::sqrt(sup) * 0.5 * std::sqrt(2.5);
    CHECK(expected == doctest::Approx(1.3340).epsilon(1e-4));
    CHECK(cs_bound(kernel, two) == doctest::Approx(expected).epsilon(1e-12));

    CHECK(theorem_bound(kernel, 4) == doctest::Approx(sup / 2.0).epsilon(1e-15));
    CHECK(theorem_bound(kernel, 100) == doctest::Approx(0.28472222222222224).epsilon(1e-12));
}

TEST_CASE("equispaced spectral energy follows the survivor closed form") {
    for (int K : {4, 8, 16}) {
        auto kernel = FourierKernel::korobov(1, 2.0, K);
        for (std::size_t m : {2, 3, 4, 8}) {
            PointSet set = equispaced_points(1, m);
            double expected = oracle::equispaced_spectral_energy(m, 2.0, K);
            double spectral = pair_energy_spectral(kernel, set);
            CHECK(std::abs(spectral - expected) <= 1e-10 * std::max(1.0, expected));
        }
    }
}

TEST_CASE("equispaced sets with m past the truncation integrate exactly") {
    // no surviving frequency once m > K
    auto kernel = FourierKernel::korobov(1, 2.0, 8);
    for (std::size_t m : {9, 16, 32}) {
        PointSet set = equispaced_points(1, m);
        CHECK(pair_energy_spectral(kernel, set) <= 1e-10);
        CHECK(wce_l1_class(kernel, set, 256).value <= 1e-9);
    }
}

TEST_CASE("pointwise errors stay below a wce scan refined around the probe") {
    auto kernel = FourierKernel::korobov(1, 2.0, 8);
    SearchConfig config;
    config.variant = SearchVariant::Greedy;
    auto run = greedy_averaging_search(kernel, 12, config);

    SplitMix64 rng(55);
    const int G = 64;
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<double> y0{rng.next_double()};
        double err = integration_error(kernel, run.points, y0);
        // scan the grid shifted so y0 is one of its nodes
        double refined_max = 0.0;
        for (int g = 0; g < G; ++g) {
            std::vector<double> y{reduce_unit(y0[0] + static_cast<double>(g) / G)};
            refined_max = std::max(refined_max, integration_error(kernel, run.points, y));
        }
        CHECK(err <= refined_max);
    }
}

TEST_CASE("clustered sets keep cs_bound at the sup norm") {
    auto kernel = FourierKernel::korobov(2, 2.0, 4);
    double sup = kernel.sup_norm_centered();
    for (std::size_t m : {2, 8, 32}) {
        std::vector<double> coords;
        for (std::size_t j = 0; j < m; ++j) {
            coords.push_back(0.3);
            coords.push_back(0.7);
        }
        PointSet set(2, coords);
        CHECK(cs_bound(kernel, set) == doctest::Approx(sup).epsilon(1e-9));
    }
}

TEST_CASE("report violations gate the theorem comparison on provenance") {
    auto kernel = FourierKernel::korobov(1, 2.0, 8);

    SearchConfig config;
    config.variant = SearchVariant::Greedy;
    auto run = greedy_averaging_search(kernel, 16, config);
    auto good = make_error_report(kernel, run.points, 1024);
    CHECK(report_violations(good, true).empty());

    PointSet clustered(1, std::vector<double>(8, 0.25));
    auto degenerate = make_error_report(kernel, clustered, 1024);
    CHECK(report_violations(degenerate, false).empty());
    CHECK(!report_violations(degenerate, true).empty());
}

TEST_CASE("error report fields are coherent") {
    auto kernel = FourierKernel::korobov(1, 2.0, 8);
    SearchConfig config;
    config.seed = 21;
    auto run = averaging_search(kernel, 24, config);
    auto report = make_error_report(kernel, run.points, 2048);
    CHECK(report.m == 24);
    CHECK(report.dim == 1);
    CHECK(report.grid_G == 2048);
    CHECK(report.spectral_energy >= 0.0);
    CHECK(report.wce_grid <= report.cs_bound * (1.0 + 1e-9));
    CHECK(report.cs_bound <= report.theorem_bound * (1.0 + 1e-12));
    CHECK(report.wce_argmax.size() == 1);
}
