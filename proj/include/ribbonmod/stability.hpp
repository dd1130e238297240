#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ribbonmod/core.hpp"

namespace ribbonmod {

/// Whether semistable / stable sheaves of the queried kind exist.
/// A boundary equality yields semistable only.
struct ExistenceVerdict {
    bool semistable_exists = false;
    bool stable_exists = false;

    static ExistenceVerdict from_bounds(bool weak, bool strict) { return {weak || strict, strict}; }
    friend bool operator==(const ExistenceVerdict&, const ExistenceVerdict&) = default;
};

enum class Rank3Verdict { Stable, StrictlySemistable, NoSemistable };
std::string_view to_string(Rank3Verdict v);

enum class DeformVerdict { Deforms, PossibleException, HypothesesFail };
std::string_view to_string(DeformVerdict v);

/// Quasi locally free sheaf of complete type ct, r0 > r1 > 0, gbar >= 2:
/// (d0 - (r0+r1)*delta)/r0 <= d1/r1 <= d0/r0, strict for stability.
ExistenceVerdict ss_qlf_exists(const CompleteType& ct, const RibbonParams& p);

/// Rigid-type locus N(a, d0, d1), i.e. complete type ((a+1, a), (d0, d1)).
bool rigid_locus_nonempty(Int a, Int d0, Int d1, const RibbonParams& p);

/// Generalized vector bundles of generalized rank 2r and index b.
ExistenceVerdict gvb_ss_exists(Int r, Int b, const RibbonParams& p);

/// r1 * delta: the index of a semistable sheaf is at most this, of a stable
/// one strictly below.
Int stable_index_bound(Int r1, const RibbonParams& p);

/// Sheaves of type (n, 1) with index b, i.e. complete type ((n+1, 1), (d0, d1)).
/// Requires gbar >= 2 and delta > 0.
bool L_locus_nonempty(Int n, Int b, Int d0, Int d1, const RibbonParams& p);

/// Diagnostic comparing the L-locus inequality against the quasi locally free
/// stability range transported to the blow-up (delta' = delta - b) under two
/// readings of how the degrees move. Nothing here is asserted to be correct.
struct LCrossCheck {
    bool verbatim = false;
    bool blowup_same_degrees = false;    ///< (d0, d1) unchanged on the blow-up
    bool blowup_shifted_degrees = false; ///< d0 replaced by d0 - b on the blow-up
    bool agree() const { return verbatim == blowup_same_degrees && verbatim == blowup_shifted_degrees; }
};
LCrossCheck L_locus_cross_check(Int n, Int b, Int d0, Int d1, const RibbonParams& p);

/// Rank-3 classification over a rational reduced curve (gbar = 0), for
/// complete type ((2,1),(d0,d1)). Rows only match when d1 is an integer.
Rank3Verdict rank3_rational_classify(Int d0, Int d1, const RibbonParams& p);

DeformVerdict vb_deforms_to_ribbon(Int r, Int d, const RibbonParams& p);

/// Type reached by deforming a rank r bundle along a rank r' subsheaf.
LocalType deformation_target_type(Int r, Int r_prime);

// ---------------------------------------------------------------------------
// Numerical lemmas on slopes and weighted averages.

/// Six (rank, degree) pairs with R1 = R2 + R3, R4 = R5 + R6 and the same for
/// the degrees. Slopes are mu_i = D_i / R_i.
class LemmaSlopeData {
public:
    /// Indices 0..5 correspond to 1..6. Throws DomainError on a non-positive
    /// rank or broken additivity.
    LemmaSlopeData(const std::array<Fraction, 6>& ranks, const std::array<Fraction, 6>& degrees);

    /// Builds (R1, D1) and (R4, D4) from the summands.
    static LemmaSlopeData from_summands(Fraction r2, Fraction d2, Fraction r3, Fraction d3, Fraction r5,
                                        Fraction d5, Fraction r6, Fraction d6);

    const Fraction& rank(int i) const { return ranks_.at(static_cast<std::size_t>(i - 1)); }
    const Fraction& degree(int i) const { return degrees_.at(static_cast<std::size_t>(i - 1)); }
    Fraction mu(int i) const { return degree(i) / rank(i); }

    std::string to_string() const;

private:
    std::array<Fraction, 6> ranks_;
    std::array<Fraction, 6> degrees_;
};

enum class SlopeVariant { Mu2Ge3, Mu5Ge6 };
std::string_view to_string(SlopeVariant v);

/// mu2 >= mu3 (or mu5 >= mu6), mu6 >= mu3, mu5 >= mu2, R4/R1 >= R6/R3.
bool lemma_slope_hypotheses(const LemmaSlopeData& d, SlopeVariant variant);

enum class SlopeConclusion { Violated, GE, GT_certified };
std::string_view to_string(SlopeConclusion c);

/// Strict conclusion certified by the hypotheses: mu6 > mu3 or mu5 > mu2, or
/// the variant's own comparison strict together with R4/R1 > R6/R3.
bool lemma_slope_strict_certified(const LemmaSlopeData& d, SlopeVariant variant);

/// Violated when mu4 < mu1; GT_certified when mu4 > mu1; GE on equality.
SlopeConclusion lemma_slope_conclusion(const LemmaSlopeData& d);

class LemmaWeightData {
public:
    /// m = (m1, m2, m3) strictly decreasing and non-negative, same for m'.
    LemmaWeightData(std::array<Int, 3> m, std::array<Int, 3> m_prime, std::array<Fraction, 3> q,
                    std::array<Fraction, 3> q_prime);

    const std::array<Int, 3>& m() const { return m_; }
    const std::array<Int, 3>& m_prime() const { return mp_; }
    const std::array<Fraction, 3>& q() const { return q_; }
    const std::array<Fraction, 3>& q_prime() const { return qp_; }

    std::string to_string() const;

private:
    std::array<Int, 3> m_;
    std::array<Int, 3> mp_;
    std::array<Fraction, 3> q_;
    std::array<Fraction, 3> qp_;
};

struct WeightCheck {
    bool hypotheses = false;
    Fraction w;
    Fraction w_prime;
    /// The hypotheses force w < w'.
    bool strict_certified = false;
};

/// w = [m3 q1 + (m2-m3) q2 + (m1-m2) q3] / m1, and w' likewise.
WeightCheck lemma_weight_check(const LemmaWeightData& d);

struct LemmaSampleReport {
    std::uint64_t samples = 0;
    std::uint64_t violations = 0;        ///< non-strict conclusion failed
    std::uint64_t strict_violations = 0; ///< certified strict conclusion failed
    std::uint64_t generator_rejects = 0; ///< generated instance failed the hypotheses
    std::uint64_t strict_cases = 0;      ///< instances with strictness certified
    std::vector<std::string> counterexamples;

    bool ok() const { return violations == 0 && strict_violations == 0 && generator_rejects == 0; }
};

/// Draws instances satisfying the hypotheses with small integer-based
/// rationals, so ties are frequent. Deterministic in (samples, seed).
LemmaSampleReport sample_slope_lemma(std::uint64_t samples, std::uint64_t seed, SlopeVariant variant);
LemmaSampleReport sample_weight_lemma(std::uint64_t samples, std::uint64_t seed);

} // namespace ribbonmod
