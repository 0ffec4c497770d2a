#include "dsmale/optimizer.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <string>
#include <thread>

#include "dsmale/error.hpp"
#include "dsmale/smale_metrics.hpp"

namespace dsmale {
namespace {

using cplx = std::complex<double>;
using Tuple = std::array<int, 5>;

const double kTwoPi = 2.0 * std::acos(-1.0);

class Binomials {
public:
    explicit Binomials(int nmax) : n_(nmax + 1), t_(static_cast<std::size_t>(n_ * 6), 0) {
        for (int n = 0; n < n_; ++n) {
            at(n, 0) = 1;
            for (int k = 1; k <= std::min(n, 5); ++k) at(n, k) = at(n - 1, k - 1) + (k <= n - 1 ? at(n - 1, k) : 0);
        }
    }
    long long operator()(int n, int k) const { return n < k ? 0 : t_[static_cast<std::size_t>(n * 6 + k)]; }

private:
    long long& at(int n, int k) { return t_[static_cast<std::size_t>(n * 6 + k)]; }
    int n_;
    std::vector<long long> t_;
};

// Combinatorial number system rank of a sorted multiset.
long long rank(const Tuple& t, const Binomials& C) {
    long long r = 0;
    for (int j = 0; j < 5; ++j) r += C(t[static_cast<std::size_t>(j)] + j, j + 1);
    return r;
}

Tuple mirror(const Tuple& t, int N) {
    Tuple m;
    for (std::size_t i = 0; i < 5; ++i) m[i] = (N - t[i]) % N;
    std::sort(m.begin(), m.end());
    return m;
}

double objective_units(const Tuple& t, const std::vector<cplx>& units) {
    std::array<cplx, 5> z;
    for (std::size_t i = 0; i < 5; ++i) z[i] = units[static_cast<std::size_t>(t[i])];
    return std::norm(moment(z, 0));
}

// Calls fn(first_index) for every value of the leading index, spread over workers.
template <class F>
void parallel_over(int count, F&& fn) {
    const int workers = std::max(1, std::min(worker_count(), count));
    std::atomic<int> next{0};
    auto run = [&] {
        for (int i = next++; i < count; i = next++) fn(i);
    };
    std::vector<std::thread> pool;
    for (int w = 1; w < workers; ++w) pool.emplace_back(run);
    run();
    for (auto& th : pool) th.join();
}

// All sorted tuples with t[0] == first, in lexicographic order.
template <class F>
void for_each_with_first(int first, int N, F&& fn) {
    Tuple t{first, first, first, first, first};
    while (true) {
        fn(t);
        int j = 4;
        while (j >= 1 && t[static_cast<std::size_t>(j)] == N - 1) --j;
        if (j < 1) return;
        const int v = t[static_cast<std::size_t>(j)] + 1;
        for (int k = j; k < 5; ++k) t[static_cast<std::size_t>(k)] = v;
    }
}

Angles to_angles(const Tuple& t, int N) {
    Angles a;
    for (std::size_t i = 0; i < 5; ++i) a[i] = kTwoPi * t[i] / N;
    return a;
}

double circular(double a, double b) {
    double d = std::fmod(std::abs(a - b), kTwoPi);
    return std::min(d, kTwoPi - d);
}

}  // namespace

std::complex<double> moment(std::span<const std::complex<double>> z, int extra_t_power) {
    std::vector<cplx> c{1.0};
    c.reserve(z.size() + 1);
    for (const cplx zk : z) {
        c.push_back(0.0);
        for (std::size_t k = c.size() - 1; k >= 1; --k) c[k] -= zk * c[k - 1];
    }
    cplx s = 0.0;
    for (std::size_t k = 0; k < c.size(); ++k) {
        const double e = static_cast<double>(k) + extra_t_power;
        s += c[k] * (1.0 / (e + 1.0) - 1.0 / (e + 2.0));
    }
    return s;
}

double objective(const Angles& angles) {
    std::array<cplx, 5> z;
    for (std::size_t i = 0; i < 5; ++i) z[i] = std::polar(1.0, angles[i]);
    return std::norm(moment(z, 0));
}

int worker_count() {
    if (const char* env = std::getenv("DSMALE_WORKERS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 1) return static_cast<int>(std::min(v, 256L));
    }
    return static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
}

Angles canonical(const Angles& a) {
    Angles c;
    for (std::size_t i = 0; i < 5; ++i) {
        double v = std::fmod(a[i], kTwoPi);
        if (v < 0) v += kTwoPi;
        if (v >= kTwoPi) v = 0.0;
        c[i] = v;
    }
    std::sort(c.begin(), c.end());
    return c;
}

double orbit_distance(const Angles& a, const Angles& b) {
    std::array<int, 5> p{0, 1, 2, 3, 4};
    double best = std::numeric_limits<double>::infinity();
    do {
        double worst = 0.0;
        for (std::size_t i = 0; i < 5; ++i) worst = std::max(worst, circular(a[i], b[static_cast<std::size_t>(p[i])]));
        best = std::min(best, worst);
    } while (std::next_permutation(p.begin(), p.end()));
    return best;
}

ScanResult grid_scan(int N, bool use_symmetry, double threshold) {
    if (N < 8) throw UsageError("grid_scan needs at least 8 points per axis");
    if (N > 250) throw UsageError("grid_scan supports at most 250 points per axis");
    const Binomials C(N + 5);
    const long long total = C(N + 4, 5);
    std::vector<cplx> units(static_cast<std::size_t>(N));
    for (int k = 0; k < N; ++k) units[static_cast<std::size_t>(k)] = std::polar(1.0, kTwoPi * k / N);

    std::vector<double> values(static_cast<std::size_t>(total), std::numeric_limits<double>::quiet_NaN());
    std::vector<long long> evals(static_cast<std::size_t>(N), 0);
    parallel_over(N, [&](int first) {
        long long count = 0;
        for_each_with_first(first, N, [&](const Tuple& t) {
            if (use_symmetry && mirror(t, N) < t) return;
            values[static_cast<std::size_t>(rank(t, C))] = objective_units(t, units);
            ++count;
        });
        evals[static_cast<std::size_t>(first)] = count;
    });
    if (use_symmetry) {
        parallel_over(N, [&](int first) {
            for_each_with_first(first, N, [&](const Tuple& t) {
                const Tuple m = mirror(t, N);
                if (m < t) values[static_cast<std::size_t>(rank(t, C))] = values[static_cast<std::size_t>(rank(m, C))];
            });
        });
    }

    ScanResult out;
    out.points_per_axis = N;
    out.grid_resolution = kTwoPi / N;
    for (long long e : evals) out.evaluations += e;
    out.grid_min_value = std::numeric_limits<double>::infinity();

    std::vector<std::vector<LocalMinimum>> found(static_cast<std::size_t>(N));
    std::vector<std::pair<double, Tuple>> best(static_cast<std::size_t>(N), {std::numeric_limits<double>::infinity(), {}});
    parallel_over(N, [&](int first) {
        auto& mine = found[static_cast<std::size_t>(first)];
        auto& b = best[static_cast<std::size_t>(first)];
        for_each_with_first(first, N, [&](const Tuple& t) {
            const double v = values[static_cast<std::size_t>(rank(t, C))];
            if (v < b.first) b = {v, t};
            if (!(v < threshold)) return;
            for (std::size_t i = 0; i < 5; ++i) {
                for (int step : {-1, 1}) {
                    Tuple nb = t;
                    nb[i] = (nb[i] + step + N) % N;
                    std::sort(nb.begin(), nb.end());
                    if (values[static_cast<std::size_t>(rank(nb, C))] < v) return;
                }
            }
            mine.push_back({to_angles(t, N), v});
        });
    });
    for (int first = 0; first < N; ++first) {
        const auto& b = best[static_cast<std::size_t>(first)];
        if (b.first < out.grid_min_value) {
            out.grid_min_value = b.first;
            out.grid_argmin = to_angles(b.second, N);
        }
        for (const auto& m : found[static_cast<std::size_t>(first)]) out.local_minima.push_back(m);
    }
    out.min_value = out.grid_min_value;
    out.argmin = out.grid_argmin;
    return out;
}

double grid_scan_unreduced(int N) {
    if (N < 8) throw UsageError("grid_scan needs at least 8 points per axis");
    std::vector<cplx> units(static_cast<std::size_t>(N));
    for (int k = 0; k < N; ++k) units[static_cast<std::size_t>(k)] = std::polar(1.0, kTwoPi * k / N);
    std::vector<double> best(static_cast<std::size_t>(N), std::numeric_limits<double>::infinity());
    parallel_over(N, [&](int a) {
        double& b = best[static_cast<std::size_t>(a)];
        Tuple t{a, 0, 0, 0, 0};
        for (t[1] = 0; t[1] < N; ++t[1])
            for (t[2] = 0; t[2] < N; ++t[2])
                for (t[3] = 0; t[3] < N; ++t[3])
                    for (t[4] = 0; t[4] < N; ++t[4]) b = std::min(b, objective_units(t, units));
    });
    return *std::min_element(best.begin(), best.end());
}

LocalMinimum refine(const Angles& start, double tol, double initial_step) {
    if (!(tol > 0)) throw UsageError("refine tolerance must be positive");
    constexpr long kCap = 1000000;
    const double eps = std::numeric_limits<double>::epsilon();
    long evals = 0;
    Angles best_x = start;
    double best_f = objective(start);
    ++evals;
    auto eval = [&](const Angles& x) {
        if (++evals > kCap) {
            throw RefineNonConvergence("refine: evaluation cap reached",
                                       std::vector<double>(best_x.begin(), best_x.end()), best_f);
        }
        return objective(x);
    };
    auto better = [&](double cand, double cur) { return cand < cur - 4.0 * eps * std::abs(cur); };
    // One exploratory sweep around base; returns whether anything improved.
    auto explore = [&](Angles& x, double& fx, double h) {
        bool moved = false;
        for (std::size_t i = 0; i < 5; ++i) {
            for (double dir : {1.0, -1.0}) {
                Angles y = x;
                y[i] += dir * h;
                const double fy = eval(y);
                if (better(fy, fx)) {
                    x = y;
                    fx = fy;
                    moved = true;
                    break;
                }
            }
        }
        return moved;
    };

    double h = initial_step;
    while (h >= tol) {
        Angles x = best_x;
        double fx = best_f;
        if (!explore(x, fx, h)) {
            h /= 2.0;
            continue;
        }
        // Pattern moves along the accumulated direction.
        Angles prev = best_x;
        best_x = x;
        best_f = fx;
        while (true) {
            Angles p;
            for (std::size_t i = 0; i < 5; ++i) p[i] = 2.0 * best_x[i] - prev[i];
            double fp = eval(p);
            explore(p, fp, h);
            if (!better(fp, best_f)) break;
            prev = best_x;
            best_x = p;
            best_f = fp;
        }
    }
    return {best_x, best_f};
}

ScanResult scan_and_refine(int N, double tol) {
    ScanResult out = grid_scan(N);
    const auto& starts = out.local_minima;
    std::vector<LocalMinimum> refined(starts.size());
    parallel_over(static_cast<int>(starts.size()), [&](int i) {
        const auto k = static_cast<std::size_t>(i);
        LocalMinimum r = refine(starts[k].angles, tol, out.grid_resolution / 2.0);
        r.angles = canonical(r.angles);
        refined[k] = r;
    });
    std::sort(refined.begin(), refined.end(), [](const LocalMinimum& a, const LocalMinimum& b) {
        return a.value != b.value ? a.value < b.value : a.angles < b.angles;
    });
    for (const auto& r : refined) {
        bool seen = false;
        for (const auto& u : out.refined_minima) seen = seen || orbit_distance(u.angles, r.angles) < 1e-6;
        if (!seen) out.refined_minima.push_back(r);
    }
    out.refined = true;
    if (!out.refined_minima.empty()) {
        out.min_value = out.refined_minima.front().value;
        out.argmin = out.refined_minima.front().angles;
        for (const auto& r : out.refined_minima)
            if (r.value <= out.min_value + 1e-10) out.orbits.push_back(r);
    }
    return out;
}

ConjectureReport conjecture_sample_check(int n, int samples, std::uint64_t seed) {
    if (n < 2) throw UsageError("class degree must be >= 2");
    std::mt19937_64 rng(seed);
    ConjectureReport rep;
    rep.n = n;
    rep.samples = samples;
    rep.min_S = std::numeric_limits<double>::infinity();
    const double weak = 1.0 / (n * std::pow(4.0, n));
    for (int s = 0; s < samples; ++s) {
        const ComplexPolynomial f = random_class_polynomial(n, rng);
        MetricsReport m;
        try {
            m = metrics(f);
        } catch (const NonConvergence&) {
            ++rep.root_failures;
            continue;
        }
        if (m.S < rep.min_S) {
            rep.min_S = m.S;
            rep.min_S_poly = f;
        }
        rep.max_T = std::max(rep.max_T, m.T);
        if (m.S < 1.0 / n - 1e-9) ++rep.below_one_over_n;
        if (m.S < weak) ++rep.below_weak_bound;
        if (m.T >= 4.0) ++rep.smale_violations;
    }
    rep.pass = rep.below_one_over_n == 0 && rep.below_weak_bound == 0 && rep.smale_violations == 0 &&
               rep.root_failures == 0;
    return rep;
}

DubininReport dubinin_sample_check(int n, int pairs, std::uint64_t seed) {
    if (n < 2) throw UsageError("class degree must be >= 2");
    std::mt19937_64 rng(seed);
    DubininReport rep;
    rep.n = n;
    rep.pairs = pairs;
    rep.min_margin = std::numeric_limits<double>::infinity();
    for (int s = 0; s < pairs; ++s) {
        const ComplexPolynomial f = random_class_polynomial(n, rng);
        const cplx z = random_in_disc(rng, 2.0);
        const DubininResult d = dubinin_check(f, z);
        if (!d.pass) ++rep.violations;
        if (d.bound > 0) rep.min_margin = std::min(rep.min_margin, d.best_ratio / d.bound);
    }
    rep.pass = rep.violations == 0;
    return rep;
}

DiscBoundReport disc_bound_sample_check(int samples, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    DiscBoundReport rep;
    rep.samples = samples;
    rep.min_b = std::numeric_limits<double>::infinity();
    rep.min_gap = std::numeric_limits<double>::infinity();
    for (int s = 0; s < samples; ++s) {
        std::array<cplx, 4> z;
        for (auto& v : z) v = random_in_disc(rng, 1.0);
        const double b = std::abs(moment(z, 0));
        const double a = std::abs(moment(z, 1));
        if (!(b > a)) ++rep.b_not_above_a;
        if (!(b > 1.0 / 6.0)) ++rep.b_not_above_sixth;
        rep.min_b = std::min(rep.min_b, b);
        rep.min_gap = std::min(rep.min_gap, b - a);
    }
    rep.pass = rep.b_not_above_a == 0 && rep.b_not_above_sixth == 0;
    return rep;
}

}  // namespace dsmale
