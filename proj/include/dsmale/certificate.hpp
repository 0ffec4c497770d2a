#pragma once

// Symbolic construction of S^2, g = 25200 (S^2 - 1/49), the five
// sum-of-nonnegative-terms blocks J_1..J_5, and the four-variable chain
// h -> h_1 -> h_2 that bounds 11025 (|b|^2 - |a|^2) from below.  Every claim is
// checked exactly in normal form; numeric oracles are run alongside.

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "dsmale/box_poly.hpp"
#include "dsmale/nonneg.hpp"
#include "dsmale/trig_poly.hpp"

namespace dsmale {

/// Index families over {1..5} used by the J-blocks.
struct IndexSets {
    /// All 120 permutations.
    std::vector<std::array<int, 5>> E1;
    /// 30 ordered pairs of disjoint unordered pairs [{e1,e2},{e3,e4}].
    std::vector<std::array<int, 4>> E2;
    /// 10 unordered pairs {t1,t2}.
    std::vector<std::array<int, 2>> E3;
    /// 20 pairs (k1, {k2,k3,k4}) with distinct entries.
    std::vector<std::array<int, 4>> E4;

    static const IndexSets& instance();
};

/// Real and imaginary part of the t-integral of t^extra (1-t) prod_{j<=nvars} (1 - z_j t),
/// z_j = x_j + i y_j.
std::pair<TrigPoly, TrigPoly> integral_parts(int nvars, int extra_t_power);

TrigPoly build_S_squared();
TrigPoly build_g();

/// Which way the 1/16 prefactor in J_2 is scoped.
enum class J2Reading {
    PrefactorOnAllGroups,   ///< (1/16) sum_E1 (group1 + group2 + group3)
    PrefactorOnFirstGroup,  ///< (1/16) sum_E1 group1 + sum_E1 (group2 + group3)
};

std::string to_string(J2Reading r);

struct CertifiedBlock {
    int k = 0;
    TrigPoly value;
    /// (description, construction shape) per summand group.
    std::vector<std::pair<std::string, std::string>> groups;
};

CertifiedBlock build_J_certified(int k, J2Reading reading = J2Reading::PrefactorOnAllGroups);
TrigPoly build_J(int k, J2Reading reading = J2Reading::PrefactorOnAllGroups);

struct IdentityReport {
    bool pass = false;
    bool numeric_pass = false;
    J2Reading reading = J2Reading::PrefactorOnAllGroups;
    double reading_mismatch = 0.0;  ///< numeric mismatch of the chosen reading
    double numeric_max_discrepancy = 0.0;
    int numeric_samples = 0;
    std::size_t g_terms = 0;
    std::size_t residual_terms = 0;
    std::string residual_dump;  ///< up to 200 lowest-order residual terms
    std::vector<std::pair<std::string, std::string>> nonneg_evidence;  ///< (block/group, shape)
};

/// Exact check g - (J_1 + ... + J_5) == 0, preceded by a numeric oracle
/// at `samples` seeded tuples which also selects the J_2 reading.
IdentityReport verify_identity_id1(std::uint64_t seed = 20240607, int samples = 100);

/// Residual check for caller-supplied blocks (no numeric stage).
IdentityReport verify_identity_with(const TrigPoly& g, const std::array<TrigPoly, 5>& blocks);

struct LemmaIntegrands {
    TrigPoly a_sq;  ///< |integral t (1-t) prod_{k<=4} (1 - z_k t) dt|^2
    TrigPoly b_sq;  ///< |integral (1-t) prod_{k<=4} (1 - z_k t) dt|^2
    TrigPoly h;     ///< 11025 (|b|^2 - |a|^2)
};

LemmaIntegrands build_lemma_integrands();

/// The closed-form 11025 (|b|^2 - |a|^2) as displayed, transcribed term by term.
TrigPoly lemma_display_h();
/// 7 ((y1-y2)^2 (y3-y4)^2 + (y1-y3)^2 (y2-y4)^2 + (y1-y4)^2 (y3-y2)^2), certified.
TrigNonneg lemma_square_products();
/// 301 - 238 u + 14 u^2 - 238 v + 182 u v + 14 v^2 with u = x_i, v = x_j.
TrigPoly lemma_bracket(int i, int j);
/// The six (pair, bracket-variables) couplings: (y_p - y_q)^2 goes with bracket(x_r, x_s).
const std::array<std::array<int, 4>, 6>& lemma_bracket_pairs();
/// The displayed h_2 as certified nonnegative groups over w in [0,1]^4.
std::vector<std::pair<std::string, BoxNonneg>> h2_display_groups();

struct CoefficientCheck {
    std::string monomial;
    Rational expected;
    Rational actual;
    bool pass = false;
};

struct ChainStep {
    std::string step;
    std::string bracket;
    std::string exact_min;
    bool pass = false;
};

struct TermVerdict {
    std::string term;
    std::string shape;
    bool nonneg = false;
};

struct LemmaReport {
    bool expansion_pass = false;
    bool verbatim = false;
    std::string expansion_residual;
    std::vector<CoefficientCheck> coefficients;
    bool h1_difference_pass = false;
    std::vector<ChainStep> h_chain;
    bool y_free = false;
    bool h2_match = false;
    std::string h2_residual;
    Rational h2_constant;
    Rational h2_w1w2w3w4;
    std::vector<TermVerdict> h2_terms;
    int sample_points = 0;
    bool pass = false;
};

LemmaReport verify_lemma1(std::uint64_t seed = 20240607, int samples = 1000);

struct EqualityPoint {
    std::string name;
    std::string exact_value;
    bool pass = false;
};

struct EqualityReport {
    std::vector<EqualityPoint> points;
    int samples = 0;
    double min_sampled_g = 0.0;
    std::array<double, 5> min_sampled_at{};
    bool all_positive = false;
    bool pass = false;
};

/// g == 0 exactly (in Q(sqrt 3)) at phi = 0, pi/3, -pi/3 and g > 0 at
/// `samples` seeded tuples.
EqualityReport verify_equality_cases(const TrigPoly& g, std::uint64_t seed = 20240607, int samples = 1000);

struct SymmetryReport {
    bool permutation_invariant = false;
    bool conjugation_invariant = false;
};

SymmetryReport check_symmetries(const TrigPoly& p);

struct OracleEntry {
    std::string quantity;
    double max_rel_discrepancy = 0.0;
    bool pass = false;
};

struct OracleReport {
    std::vector<OracleEntry> entries;
    std::vector<std::pair<std::array<double, 5>, double>> g_samples;  ///< (angles, |g_sym - g_num|)
    bool pass = false;
};

/// Symbolic values against numeric evaluation of the defining integrals and
/// formulas, relative tolerance `tol` with an absolute floor of 1.
OracleReport run_numeric_oracles(std::uint64_t seed = 20240607, int samples = 100, double tol = 1e-8);

struct CertificateReport {
    IdentityReport identity;
    LemmaReport lemma;
    EqualityReport equality;
    OracleReport oracle;
    bool pass() const { return identity.pass && lemma.pass && equality.pass && oracle.pass; }
};

}  // namespace dsmale
