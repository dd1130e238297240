#include <algorithm>
#include <random>
#include <sstream>

#include "ribbonmod/errors.hpp"
#include "ribbonmod/stability.hpp"

namespace ribbonmod {

namespace {

constexpr std::size_t kMaxCounterexamples = 5;

template <class Array>
std::string join(const Array& xs) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? "," : "") << xs[i];
    os << ")";
    return os.str();
}

} // namespace

// --- slope lemma ------------------------------------------------------------

LemmaSlopeData::LemmaSlopeData(const std::array<Fraction, 6>& ranks, const std::array<Fraction, 6>& degrees)
    : ranks_(ranks), degrees_(degrees) {
    for (const auto& r : ranks_)
        if (r <= Fraction(0)) throw DomainError("lemma ranks must be positive");
    if (ranks_[0] != ranks_[1] + ranks_[2] || ranks_[3] != ranks_[4] + ranks_[5])
        throw DomainError("lemma ranks must satisfy R1 = R2 + R3 and R4 = R5 + R6");
    if (degrees_[0] != degrees_[1] + degrees_[2] || degrees_[3] != degrees_[4] + degrees_[5])
        throw DomainError("lemma degrees must satisfy D1 = D2 + D3 and D4 = D5 + D6");
}

LemmaSlopeData LemmaSlopeData::from_summands(Fraction r2, Fraction d2, Fraction r3, Fraction d3, Fraction r5,
                                             Fraction d5, Fraction r6, Fraction d6) {
    return LemmaSlopeData({r2 + r3, r2, r3, r5 + r6, r5, r6}, {d2 + d3, d2, d3, d5 + d6, d5, d6});
}

std::string LemmaSlopeData::to_string() const { return "R=" + join(ranks_) + " D=" + join(degrees_); }

std::string_view to_string(SlopeVariant v) { return v == SlopeVariant::Mu2Ge3 ? "Mu2Ge3" : "Mu5Ge6"; }

std::string_view to_string(SlopeConclusion c) {
    switch (c) {
    case SlopeConclusion::Violated: return "Violated";
    case SlopeConclusion::GE: return "GE";
    case SlopeConclusion::GT_certified: return "GT_certified";
    }
    return "?";
}

bool lemma_slope_hypotheses(const LemmaSlopeData& d, SlopeVariant variant) {
    bool first = variant == SlopeVariant::Mu2Ge3 ? d.mu(2) >= d.mu(3) : d.mu(5) >= d.mu(6);
    return first && d.mu(6) >= d.mu(3) && d.mu(5) >= d.mu(2) && d.rank(4) / d.rank(1) >= d.rank(6) / d.rank(3);
}

bool lemma_slope_strict_certified(const LemmaSlopeData& d, SlopeVariant variant) {
    if (!lemma_slope_hypotheses(d, variant)) return false;
    if (d.mu(6) > d.mu(3) || d.mu(5) > d.mu(2)) return true;
    bool own = variant == SlopeVariant::Mu2Ge3 ? d.mu(2) > d.mu(3) : d.mu(5) > d.mu(6);
    return own && d.rank(4) / d.rank(1) > d.rank(6) / d.rank(3);
}

SlopeConclusion lemma_slope_conclusion(const LemmaSlopeData& d) {
    auto mu4 = d.mu(4);
    auto mu1 = d.mu(1);
    if (mu4 < mu1) return SlopeConclusion::Violated;
    return mu4 > mu1 ? SlopeConclusion::GT_certified : SlopeConclusion::GE;
}

// --- weight lemma -----------------------------------------------------------

LemmaWeightData::LemmaWeightData(std::array<Int, 3> m, std::array<Int, 3> m_prime, std::array<Fraction, 3> q,
                                 std::array<Fraction, 3> q_prime)
    : m_(m), mp_(m_prime), q_(q), qp_(q_prime) {
    auto chain = [](const std::array<Int, 3>& x) { return x[0] > x[1] && x[1] > x[2] && x[2] >= 0; };
    if (!chain(m_) || !chain(mp_)) throw DomainError("weights need m1 > m2 > m3 >= 0");
}

std::string LemmaWeightData::to_string() const {
    return "m=" + join(m_) + " m'=" + join(mp_) + " q=" + join(q_) + " q'=" + join(qp_);
}

namespace {

Fraction weighted(const std::array<Int, 3>& m, const std::array<Fraction, 3>& q) {
    Fraction sum = Fraction(m[2]) * q[0] + Fraction(checked::sub(m[1], m[2])) * q[1] +
                   Fraction(checked::sub(m[0], m[1])) * q[2];
    return sum / Fraction(m[0]);
}

} // namespace

WeightCheck lemma_weight_check(const LemmaWeightData& d) {
    const auto& m = d.m();
    const auto& mp = d.m_prime();
    const auto& q = d.q();
    const auto& qp = d.q_prime();
    Int cross13 = checked::sub(checked::mul(m[0], mp[2]), checked::mul(mp[0], m[2]));
    Int cross21 = checked::sub(checked::mul(m[1], mp[0]), checked::mul(mp[1], m[0]));

    WeightCheck out;
    out.hypotheses = q[0] <= qp[0] && q[1] <= qp[1] && q[2] <= qp[2] && qp[0] <= qp[1] && qp[2] <= qp[1] &&
                     cross13 <= 0 && cross21 <= 0;
    out.w = weighted(m, q);
    out.w_prime = weighted(mp, qp);
    // q1 only carries weight when m3 > 0; the two cross terms enter as products
    // of two non-positive factors.
    out.strict_certified = out.hypotheses && ((m[2] > 0 && q[0] < qp[0]) || q[1] < qp[1] || q[2] < qp[2] ||
                                              (cross13 < 0 && qp[0] < qp[1]) || (cross21 < 0 && qp[2] < qp[1]));
    return out;
}

// --- samplers -----------------------------------------------------------------

namespace {

class Draw {
public:
    explicit Draw(std::uint64_t seed) : rng_(seed) {}

    Int uniform(Int lo, Int hi) { return std::uniform_int_distribution<Int>(lo, hi)(rng_); }

    Fraction rational(Int lo, Int hi) { return Fraction(uniform(lo, hi), uniform(1, 3)); }
    Fraction positive() { return Fraction(uniform(1, 6), uniform(1, 3)); }
    /// Zero a third of the time, so ties are common.
    Fraction gap() { return uniform(0, 2) == 0 ? Fraction(0) : positive(); }

private:
    std::mt19937_64 rng_;
};

LemmaSlopeData draw_slope(Draw& rnd, SlopeVariant variant) {
    Fraction r2 = rnd.positive();
    Fraction r3 = rnd.positive();
    Fraction r5 = rnd.positive();
    // R5/R2 >= R6/R3 is equivalent to R4/R1 >= R6/R3. R6 sits on the cap a
    // quarter of the time and is a proper fraction of it otherwise.
    Fraction cap = r5 * r3 / r2;
    Fraction r6 = rnd.uniform(0, 3) == 0 ? cap : cap * Fraction(rnd.uniform(1, 5), 6);

    Fraction mu2, mu3, mu5, mu6;
    mu3 = rnd.rational(-6, 6);
    mu6 = mu3 + rnd.gap();
    if (variant == SlopeVariant::Mu2Ge3) {
        mu2 = mu3 + rnd.gap();
        mu5 = mu2 + rnd.gap();
    } else {
        mu2 = rnd.rational(-6, 6);
        mu5 = std::max(mu2, mu6) + rnd.gap();
    }
    return LemmaSlopeData::from_summands(r2, mu2 * r2, r3, mu3 * r3, r5, mu5 * r5, r6, mu6 * r6);
}

std::array<Int, 3> draw_chain(Draw& rnd) {
    Int m3 = rnd.uniform(0, 4);
    Int m2 = m3 + rnd.uniform(1, 4);
    Int m1 = m2 + rnd.uniform(1, 4);
    return {m1, m2, m3};
}

LemmaWeightData draw_weight(Draw& rnd) {
    std::array<Int, 3> m, mp;
    for (;;) {
        m = draw_chain(rnd);
        mp = draw_chain(rnd);
        if (m[0] * mp[2] - mp[0] * m[2] <= 0 && m[1] * mp[0] - mp[1] * m[0] <= 0) break;
    }
    Fraction qp2 = rnd.rational(-6, 6);
    std::array<Fraction, 3> qp{qp2 - rnd.gap(), qp2, qp2 - rnd.gap()};
    std::array<Fraction, 3> q{qp[0] - rnd.gap(), qp[1] - rnd.gap(), qp[2] - rnd.gap()};
    return {m, mp, q, qp};
}

void note(LemmaSampleReport& rep, std::string what) {
    if (rep.counterexamples.size() < kMaxCounterexamples) rep.counterexamples.push_back(std::move(what));
}

} // namespace

LemmaSampleReport sample_slope_lemma(std::uint64_t samples, std::uint64_t seed, SlopeVariant variant) {
    Draw rnd(seed);
    LemmaSampleReport rep;
    for (std::uint64_t i = 0; i < samples; ++i) {
        auto d = draw_slope(rnd, variant);
        ++rep.samples;
        if (!lemma_slope_hypotheses(d, variant)) {
            ++rep.generator_rejects;
            note(rep, "generator produced data outside the hypotheses: " + d.to_string());
            continue;
        }
        auto c = lemma_slope_conclusion(d);
        bool strict = lemma_slope_strict_certified(d, variant);
        rep.strict_cases += strict ? 1 : 0;
        if (c == SlopeConclusion::Violated) {
            ++rep.violations;
            note(rep, "mu4 < mu1 at " + d.to_string());
        } else if (strict && c != SlopeConclusion::GT_certified) {
            ++rep.strict_violations;
            note(rep, "mu4 = mu1 although strictness is certified at " + d.to_string());
        }
    }
    return rep;
}

LemmaSampleReport sample_weight_lemma(std::uint64_t samples, std::uint64_t seed) {
    Draw rnd(seed);
    LemmaSampleReport rep;
    for (std::uint64_t i = 0; i < samples; ++i) {
        auto d = draw_weight(rnd);
        ++rep.samples;
        auto c = lemma_weight_check(d);
        if (!c.hypotheses) {
            ++rep.generator_rejects;
            note(rep, "generator produced data outside the hypotheses: " + d.to_string());
            continue;
        }
        rep.strict_cases += c.strict_certified ? 1 : 0;
        if (c.w > c.w_prime) {
            ++rep.violations;
            note(rep, "w > w' at " + d.to_string());
        } else if (c.strict_certified && c.w == c.w_prime) {
            ++rep.strict_violations;
            note(rep, "w = w' although strictness is certified at " + d.to_string());
        }
    }
    return rep;
}

} // namespace ribbonmod
