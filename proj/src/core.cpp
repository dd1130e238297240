#include "ribbonmod/core.hpp"

#include <string>

#include "ribbonmod/errors.hpp"

namespace ribbonmod {

using checked::add;
using checked::mul;
using checked::sub;

RibbonParams::RibbonParams(Int gbar_, Int delta_) : gbar(gbar_), delta(delta_) {
    if (gbar < 0) throw DomainError("reduced genus must be non-negative, got " + std::to_string(gbar));
}

RibbonParams RibbonParams::from_deg_n(Int gbar, Int deg_n) { return {gbar, checked::neg(deg_n)}; }

Int RibbonParams::genus() const { return add(sub(mul(2, gbar), 1), delta); }

bool RibbonParams::small_conormal() const { return delta <= sub(mul(2, gbar), 2); }

CompleteType::CompleteType(Int r0_, Int r1_, Int d0_, Int d1_) : r0(r0_), r1(r1_), d0(d0_), d1(d1_) {
    if (r0 < 1 || r1 < 0 || r0 < r1)
        throw DomainError("complete type needs r0 >= r1 >= 0 and r0 >= 1, got (" + std::to_string(r0) + ", " +
                          std::to_string(r1) + ")");
}

LocalType::LocalType(Int a_, Int b_) : a(a_), b(b_) {
    if (a < 0 || b < 0 || (a == 0 && b == 0)) throw DomainError("local type needs a, b >= 0, not both zero");
}

Invariants::Invariants(Int R_, Int D_) : R(R_), D(D_) {
    if (R < 1) throw DomainError("generalized rank must be positive, got " + std::to_string(R));
}

Int ribbon_genus(const RibbonParams& p) { return p.genus(); }

Invariants invariants_of(const CompleteType& ct) { return {add(ct.r0, ct.r1), add(ct.d0, ct.d1)}; }

Fraction slope(const Invariants& inv) { return {inv.D, inv.R}; }

Fraction slope(const CompleteType& ct) { return slope(invariants_of(ct)); }

Int euler_characteristic(const Invariants& inv, const RibbonParams& p) {
    return add(inv.D, mul(inv.R, sub(1, p.gbar)));
}

HilbertPolynomial hilbert_polynomial(const Invariants& inv, const RibbonParams& p, Int d) {
    if (d < 1) throw DomainError("polarization degree must be positive");
    return {euler_characteristic(inv, p), mul(inv.R, d)};
}

ClassicalInvariants classical_invariants(const Invariants& inv, const RibbonParams& p) {
    Fraction rank(inv.R, 2);
    return {rank, Fraction(inv.D) + Fraction(mul(inv.R, p.delta), 2)};
}

Invariants dual_invariants(const Invariants& inv, const RibbonParams& p, Int torsion_sections) {
    if (torsion_sections < 0) throw DomainError("torsion sections must be non-negative");
    return {inv.R, add(sub(checked::neg(inv.D), mul(inv.R, p.delta)), torsion_sections)};
}

Invariants vector_bundle_invariants(Int n, Int deg_restriction, const RibbonParams& p) {
    if (n < 1) throw DomainError("vector bundle rank must be positive");
    return {mul(2, n), sub(mul(2, deg_restriction), mul(n, p.delta))};
}

bool vb_parity_ok(Int R, Int D, const RibbonParams& p) {
    if (R % 2 != 0) return false;
    Int diff = sub(D, mul(R / 2, p.delta));
    return diff % 2 == 0;
}

CompleteType gvb_complete_type(Int r, Int D, Int b, const RibbonParams& p) {
    if (r < 1) throw DomainError("generalized vector bundle needs r >= 1");
    if (b < 0) throw DomainError("index must be non-negative");
    Int twice_d0 = add(add(D, b), mul(r, p.delta));
    if (twice_d0 % 2 != 0)
        throw IntegralityError("no generalized vector bundle of rank 2*" + std::to_string(r) + ", degree " +
                               std::to_string(D) + " and index " + std::to_string(b) +
                               ": d0 = " + std::to_string(twice_d0) + "/2 is not an integer");
    Int d0 = twice_d0 / 2;
    return {r, r, d0, sub(D, d0)};
}

std::pair<Int, Int> local_type_to_rank_pair(const LocalType& t) { return {add(t.a, t.b), t.b}; }

LocalType rank_pair_to_local_type(Int r0, Int r1) {
    if (r1 < 0 || r0 < r1) throw DomainError("rank pair needs r0 >= r1 >= 0");
    return {sub(r0, r1), r1};
}

} // namespace ribbonmod
