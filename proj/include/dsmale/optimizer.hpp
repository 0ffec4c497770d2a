#pragma once

// Grid scan and local refinement of S^2 over the 5-torus, plus the random
// sampling checks over the polynomial classes.

#include <array>
#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "dsmale/polynomial.hpp"

namespace dsmale {

using Angles = std::array<double, 5>;

/// integral_0^1 t^extra (1 - t) prod_k (1 - z_k t) dt, by termwise integration
/// of the expanded product.
std::complex<double> moment(std::span<const std::complex<double>> z, int extra_t_power = 0);

/// S^2 = |integral_0^1 (1-t) prod_j (1 - e^{i phi_j} t) dt|^2.
double objective(const Angles& angles);

struct LocalMinimum {
    Angles angles{};
    double value = 0.0;
};

struct ScanResult {
    int points_per_axis = 0;
    double grid_resolution = 0.0;
    double grid_min_value = 0.0;  ///< smallest value at any grid point
    Angles grid_argmin{};
    double min_value = 0.0;  ///< after refinement when refined == true
    Angles argmin{};
    bool refined = false;
    std::vector<LocalMinimum> local_minima;  ///< grid-local minima below the threshold
    std::vector<LocalMinimum> refined_minima;  ///< one per distinct refined point
    std::vector<LocalMinimum> orbits;  ///< refined minima within 1e-10 of the global value
    long long evaluations = 0;
};

inline constexpr double kScanThreshold = 1.0 / 49.0 + 0.01;

/// Scan of all sorted grid tuples phi_i = 2 pi k_i / N.  With use_symmetry only
/// one tuple per conjugate pair is evaluated.  Throws UsageError for N < 8.
ScanResult grid_scan(int points_per_axis, bool use_symmetry = true, double threshold = kScanThreshold);

/// Plain N^5 scan with no symmetry reduction; returns the grid minimum.
double grid_scan_unreduced(int points_per_axis);

/// Coordinate pattern search with step halving, stopping once the step is
/// below tol.  Throws RefineNonConvergence after 10^6 evaluations.
LocalMinimum refine(const Angles& start, double tol = 1e-12, double initial_step = 0.1);

/// grid_scan followed by refine from every grid-local minimum and orbit dedup.
ScanResult scan_and_refine(int points_per_axis, double tol = 1e-12);

/// Angles reduced to [0, 2 pi) and sorted.
Angles canonical(const Angles& a);
/// min over permutations of the largest circular distance between entries.
double orbit_distance(const Angles& a, const Angles& b);

/// Worker threads: DSMALE_WORKERS if set, else hardware concurrency.
int worker_count();

struct ConjectureReport {
    int n = 0;
    int samples = 0;
    double min_S = 0.0;
    ComplexPolynomial min_S_poly;
    double max_T = 0.0;
    int below_one_over_n = 0;  ///< S(f) < 1/n - 1e-9
    int below_weak_bound = 0;  ///< S(f) < 1/(n 4^n)
    int smale_violations = 0;  ///< T(f) >= 4
    int root_failures = 0;
    bool pass = false;
};

ConjectureReport conjecture_sample_check(int n, int samples, std::uint64_t seed);

struct DubininReport {
    int n = 0;
    int pairs = 0;
    int violations = 0;
    double min_margin = 0.0;  ///< min of best_ratio / bound
    bool pass = false;
};

/// f random in the degree-n class and z uniform in |z| <= 2.
DubininReport dubinin_sample_check(int n, int pairs, std::uint64_t seed);

struct DiscBoundReport {
    int samples = 0;
    int b_not_above_a = 0;
    int b_not_above_sixth = 0;
    double min_b = 0.0;
    double min_gap = 0.0;  ///< min of |b| - |a|
    bool pass = false;
};

/// |b| > |a| and |b| > 1/6 for (z_1..z_4) uniform in the closed unit disc,
/// where b and a are the moments with t-powers 0 and 1.
DiscBoundReport disc_bound_sample_check(int samples, std::uint64_t seed);

}  // namespace dsmale
