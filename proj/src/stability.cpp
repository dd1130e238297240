#include "ribbonmod/stability.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "ribbonmod/errors.hpp"

namespace ribbonmod {

using checked::add;
using checked::mul;
using checked::sub;

namespace {

void require_gbar_at_least_2(const RibbonParams& p) {
    if (p.gbar < 2)
        throw DomainError("requires reduced genus >= 2, got " + std::to_string(p.gbar));
}

// Half-integer value (num / 2) equal to an integer d1.
bool half_equals(Int twice, Int d1) { return twice == mul(2, d1); }

} // namespace

std::string_view to_string(Rank3Verdict v) {
    switch (v) {
    case Rank3Verdict::Stable: return "Stable";
    case Rank3Verdict::StrictlySemistable: return "StrictlySemistable";
    case Rank3Verdict::NoSemistable: return "NoSemistable";
    }
    return "?";
}

std::string_view to_string(DeformVerdict v) {
    switch (v) {
    case DeformVerdict::Deforms: return "Deforms";
    case DeformVerdict::PossibleException: return "PossibleException";
    case DeformVerdict::HypothesesFail: return "HypothesesFail";
    }
    return "?";
}

ExistenceVerdict ss_qlf_exists(const CompleteType& ct, const RibbonParams& p) {
    require_gbar_at_least_2(p);
    if (!(ct.r0 > ct.r1 && ct.r1 > 0))
        throw DomainError("quasi locally free existence needs r0 > r1 > 0");
    Int R = add(ct.r0, ct.r1);
    Fraction lower(sub(ct.d0, mul(R, p.delta)), ct.r0);
    Fraction middle(ct.d1, ct.r1);
    Fraction upper(ct.d0, ct.r0);
    bool weak = lower <= middle && middle <= upper;
    bool strict = lower < middle && middle < upper;
    return ExistenceVerdict::from_bounds(weak, strict);
}

bool rigid_locus_nonempty(Int a, Int d0, Int d1, const RibbonParams& p) {
    require_gbar_at_least_2(p);
    if (a < 1) throw DomainError("rigid type needs a >= 1");
    Int a1 = add(a, 1);
    Fraction lower(sub(d0, mul(add(mul(2, a), 1), p.delta)), a1);
    Fraction middle(d1, a);
    Fraction upper(d0, a1);
    return lower < middle && middle < upper;
}

ExistenceVerdict gvb_ss_exists(Int r, Int b, const RibbonParams& p) {
    if (r < 1 || b < 0) throw DomainError("generalized vector bundle needs r >= 1 and b >= 0");
    Int bound = mul(r, p.delta);
    return ExistenceVerdict::from_bounds(b <= bound, b < bound);
}

Int stable_index_bound(Int r1, const RibbonParams& p) {
    if (r1 < 1) throw DomainError("stable index bound needs r1 >= 1");
    return mul(r1, p.delta);
}

namespace {

void require_L_preconditions(Int n, Int b, const RibbonParams& p) {
    require_gbar_at_least_2(p);
    if (p.delta <= 0) throw DomainError("L-locus needs delta > 0");
    if (n < 1 || b < 1) throw DomainError("L-locus needs n >= 1 and b >= 1");
}

bool open_between(const Fraction& lo, const Fraction& x, const Fraction& hi) { return lo < x && x < hi; }

} // namespace

bool L_locus_nonempty(Int n, Int b, Int d0, Int d1, const RibbonParams& p) {
    require_L_preconditions(n, b, p);
    if (!(b < p.delta)) return false;
    Int n1 = add(n, 1);
    Fraction lower(sub(sub(d0, b), mul(add(n, 2), p.delta)), n1);
    Fraction upper(sub(d0, b), n1);
    return open_between(lower, Fraction(d1), upper);
}

LCrossCheck L_locus_cross_check(Int n, Int b, Int d0, Int d1, const RibbonParams& p) {
    LCrossCheck out;
    out.verbatim = L_locus_nonempty(n, b, d0, d1, p);
    Int delta_blown = sub(p.delta, b);
    Int n1 = add(n, 1);
    Int R = add(n, 2);
    auto strict_qlf = [&](Int e0) {
        if (delta_blown <= 0) return false;
        Fraction lower(sub(e0, mul(R, delta_blown)), n1);
        Fraction upper(e0, n1);
        return open_between(lower, Fraction(d1), upper);
    };
    out.blowup_same_degrees = strict_qlf(d0);
    out.blowup_shifted_degrees = strict_qlf(sub(d0, b));
    return out;
}

Rank3Verdict rank3_rational_classify(Int d0, Int d1, const RibbonParams& p) {
    if (p.gbar != 0) throw DomainError("rank-3 rational classification needs gbar = 0");
    const Int delta = p.delta;
    const Int twice_d1 = mul(2, d1);

    bool stable = false;
    if (delta >= 3) {
        // (d0 - 3 delta + 3)/2 < d1 < (d0 - 3)/2, or d1 at the two listed points.
        Int lo = add(sub(d0, mul(3, delta)), 3);
        Int hi = sub(d0, 3);
        stable = (lo < twice_d1 && twice_d1 < hi) || half_equals(add(sub(d0, mul(3, delta)), 2), d1) ||
                 half_equals(sub(sub(d0, delta), 2), d1);
    } else if (delta == 2) {
        stable = half_equals(sub(d0, mul(2, delta)), d1) || half_equals(add(sub(d0, mul(2, delta)), 2), d1);
    }
    if (stable) return Rank3Verdict::Stable;

    bool semistable = false;
    if (delta >= 3) {
        Int base = sub(d0, mul(3, delta));
        semistable = twice_d1 == base || twice_d1 == add(base, 3) || twice_d1 == sub(d0, 3) || twice_d1 == d0;
    } else if (delta == 2) {
        Int base = sub(d0, mul(2, delta));
        semistable = twice_d1 == sub(base, 2) || twice_d1 == add(base, 1) || twice_d1 == add(base, 4);
    } else if (delta == 1) {
        Int base = sub(d0, mul(2, delta));
        semistable = twice_d1 == sub(base, 1) || twice_d1 == add(base, 2);
    } else if (delta == 0) {
        semistable = twice_d1 == d0;
    }
    return semistable ? Rank3Verdict::StrictlySemistable : Rank3Verdict::NoSemistable;
}

DeformVerdict vb_deforms_to_ribbon(Int r, Int d, const RibbonParams& p) {
    if (r < 2) throw DomainError("deformation statement needs rank >= 2");
    if (p.gbar < 2 || !(p.delta > sub(mul(2, p.gbar), 2))) return DeformVerdict::HypothesesFail;
    if (p.delta == sub(mul(2, p.gbar), 1) && r == 3 && d % 3 == 0 && p.gbar % 3 == 0)
        return DeformVerdict::PossibleException;
    return DeformVerdict::Deforms;
}

LocalType deformation_target_type(Int r, Int r_prime) {
    if (r < 3 || r_prime <= 0 || r_prime >= r)
        throw DomainError("deformation target needs r >= 3 and 0 < r' < r");
    Int a = std::llabs(sub(r, mul(2, r_prime)));
    return {a, std::min(r_prime, sub(r, r_prime))};
}

} // namespace ribbonmod
