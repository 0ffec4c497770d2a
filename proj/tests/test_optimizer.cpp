#include "doctest.h"

#include <cmath>
#include <cstdlib>
#include <random>

#include "dsmale/certificate.hpp"
#include "dsmale/error.hpp"
#include "dsmale/optimizer.hpp"

using namespace dsmale;

namespace {

const double kPi = std::acos(-1.0);
const double kTarget = 1.0 / 49.0;

Angles random_angles(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.0, 2 * kPi);
    return {u(rng), u(rng), u(rng), u(rng), u(rng)};
}

double circular(double a, double b) {
    const double d = std::fmod(std::abs(a - b), 2 * kPi);
    return std::min(d, 2 * kPi - d);
}

}  // namespace

TEST_CASE("objective examples") {
    CHECK(objective({0, 0, 0, 0, 0}) == doctest::Approx(kTarget).epsilon(1e-14));
    const double t = kPi / 3;
    CHECK(objective({t, t, t, t, t}) == doctest::Approx(kTarget).epsilon(1e-14));
    CHECK(objective({-t, -t, -t, -t, -t}) == doctest::Approx(kTarget).epsilon(1e-14));
    CHECK(objective({kPi, kPi, kPi, kPi, kPi}) == doctest::Approx(400.0 / 49.0).epsilon(1e-14));
}

TEST_CASE("moment with no factors") {
    // integral t^k (1 - t) dt = 1/((k+1)(k+2))
    for (int k = 0; k < 4; ++k) {
        const auto m = moment({}, k);
        CHECK(m.real() == doctest::Approx(1.0 / ((k + 1) * (k + 2))));
        CHECK(m.imag() == 0.0);
    }
}

TEST_CASE("objective agrees with the symbolic S^2 and is symmetric") {
    const TrigPoly s2 = build_S_squared();
    std::mt19937_64 rng(31);
    for (int s = 0; s < 100; ++s) {
        Angles a = random_angles(rng);
        const double v = objective(a);
        CHECK(std::abs(v - s2.eval_at(a)) <= 1e-10 * std::max(1.0, v));
        std::shuffle(a.begin(), a.end(), rng);
        CHECK(objective(a) == doctest::Approx(v).epsilon(1e-12));
        for (double& x : a) x = -x;
        CHECK(objective(a) == doctest::Approx(v).epsilon(1e-12));
    }
}

TEST_CASE("grid scans") {
    CHECK_THROWS_AS(grid_scan(7), UsageError);
    CHECK_THROWS_AS(grid_scan(251), UsageError);
    const ScanResult r8 = grid_scan(8);
    CHECK(r8.grid_min_value >= kTarget - 0.05);
    CHECK_FALSE(r8.refined);

    const ScanResult r12 = grid_scan(12);
    CHECK(grid_scan_unreduced(12) == doctest::Approx(r12.grid_min_value).epsilon(1e-14));
    CHECK(grid_scan(12, false).grid_min_value == doctest::Approx(r12.grid_min_value).epsilon(1e-14));
    CHECK(r12.grid_min_value >= kTarget - 1e-12);
    CHECK(objective(r12.grid_argmin) == doctest::Approx(r12.grid_min_value).epsilon(1e-14));
    for (const auto& m : r12.local_minima) CHECK(m.value < kScanThreshold);

    const ScanResult r48 = grid_scan(48);
    CHECK(std::abs(r48.grid_min_value - kTarget) <= 1e-3);
    CHECK(r48.grid_resolution == doctest::Approx(2 * kPi / 48));
}

TEST_CASE("refine") {
    const double t = kPi / 3;
    const LocalMinimum near = refine({1.0, 1.1, 1.05, 1.0, 1.02}, 1e-12);
    CHECK(std::abs(near.value - kTarget) <= 1e-14);
    for (double a : near.angles) CHECK(circular(a, t) < 1e-6);

    const LocalMinimum fixed = refine({0, 0, 0, 0, 0}, 1e-12);
    for (double a : fixed.angles) CHECK(circular(a, 0.0) < 1e-12);

    const LocalMinimum zero = refine({0.1, 0.1, 0.1, 0.1, 0.1}, 1e-12);
    CHECK(std::abs(zero.value - kTarget) <= 1e-14);
    for (double a : zero.angles) CHECK(circular(a, 0.0) < 1e-6);

    CHECK_THROWS_AS(refine({0, 0, 0, 0, 0}, 0.0), UsageError);
    CHECK_THROWS_AS(refine({0, 0, 0, 0, 0}, -1.0), UsageError);
}

TEST_CASE("scan_and_refine finds the three orbits") {
    const ScanResult r = scan_and_refine(24);
    CHECK(r.refined);
    CHECK(std::abs(r.min_value - kTarget) <= 1e-10);
    CHECK(r.orbits.size() == 3);
    const double t = kPi / 3;
    const std::array<Angles, 3> expect{Angles{0, 0, 0, 0, 0}, Angles{t, t, t, t, t},
                                       Angles{-t, -t, -t, -t, -t}};
    for (const auto& e : expect) {
        double best = 1e300;
        for (const auto& o : r.orbits) best = std::min(best, orbit_distance(o.angles, e));
        CHECK(best < 1e-6);
    }
}

TEST_CASE("canonical and orbit_distance") {
    const Angles c = canonical({-1.0, 7.0, 0.5, 2 * kPi, 3.0});
    CHECK(std::is_sorted(c.begin(), c.end()));
    for (double v : c) {
        CHECK(v >= 0.0);
        CHECK(v < 2 * kPi);
    }
    CHECK(c[0] == 0.0);
    CHECK(orbit_distance({1, 2, 3, 4, 5}, {5, 4, 3, 2, 1}) == 0.0);
    CHECK(orbit_distance({0, 0, 0, 0, 0}, {2 * kPi - 0.01, 0, 0, 0, 0}) == doctest::Approx(0.01));
}

TEST_CASE("worker_count reads the environment") {
    const char* old = std::getenv("DSMALE_WORKERS");
    const std::string saved = old ? old : "";
    setenv("DSMALE_WORKERS", "3", 1);
    CHECK(worker_count() == 3);
    setenv("DSMALE_WORKERS", "junk", 1);
    CHECK(worker_count() >= 1);
    setenv("DSMALE_WORKERS", "3", 1);
    CHECK(grid_scan(10).grid_min_value == doctest::Approx(grid_scan_unreduced(10)).epsilon(1e-14));
    if (old) {
        setenv("DSMALE_WORKERS", saved.c_str(), 1);
    } else {
        unsetenv("DSMALE_WORKERS");
    }
}

TEST_CASE("sampling checks") {
    const ConjectureReport q = conjecture_sample_check(2, 200, 7);
    CHECK(q.pass);
    CHECK(q.min_S == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(q.max_T == doctest::Approx(0.5).epsilon(1e-9));
    for (int n = 3; n <= 7; ++n) {
        const ConjectureReport r = conjecture_sample_check(n, 200, 100 + static_cast<std::uint64_t>(n));
        CHECK(r.pass);
        CHECK(r.min_S >= 1.0 / n - 1e-9);
        CHECK(r.max_T < 4.0);
        CHECK(r.samples == 200);
    }
    CHECK_THROWS_AS(conjecture_sample_check(1, 10, 1), UsageError);

    const DubininReport d = dubinin_sample_check(5, 200, 9);
    CHECK(d.pass);
    CHECK(d.min_margin >= 1.0 - 1e-9);

    const DiscBoundReport b = disc_bound_sample_check(5000, 11);
    CHECK(b.pass);
    CHECK(b.min_b > 1.0 / 6.0);
    CHECK(b.min_gap > 0.0);
}

TEST_CASE("sampling is deterministic under a seed") {
    const auto a = conjecture_sample_check(4, 100, 42);
    const auto b = conjecture_sample_check(4, 100, 42);
    CHECK(a.min_S == b.min_S);
    CHECK(a.max_T == b.max_T);
}
