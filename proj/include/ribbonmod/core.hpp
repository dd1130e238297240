#pragma once

#include <utility>

#include "ribbonmod/fraction.hpp"

namespace ribbonmod {

/// Numeric data of a ribbon: genus of the reduced curve and delta = -deg(N),
/// where N is the nilradical. delta is the stored convention; deg(N) is derived.
struct RibbonParams {
    Int gbar = 0;
    Int delta = 0;

    RibbonParams() = default;
    RibbonParams(Int gbar_, Int delta_);

    static RibbonParams from_deg_n(Int gbar, Int deg_n);

    Int deg_n() const { return checked::neg(delta); }
    /// Arithmetic genus 2*gbar - 1 + delta.
    Int genus() const;
    /// delta <= 2*gbar - 2, equivalently genus <= 4*gbar - 3.
    bool small_conormal() const;

    friend bool operator==(const RibbonParams&, const RibbonParams&) = default;
};

/// Ranks and degrees ((r0, r1), (d0, d1)) of the first canonical filtration.
struct CompleteType {
    Int r0 = 1;
    Int r1 = 0;
    Int d0 = 0;
    Int d1 = 0;

    CompleteType() = default;
    /// Throws DomainError unless r0 >= r1 >= 0 and r0 >= 1.
    CompleteType(Int r0_, Int r1_, Int d0_, Int d1_);

    friend bool operator==(const CompleteType&, const CompleteType&) = default;
};

/// Local type (a, b): locally O_Xred^a + O_X^b.
struct LocalType {
    Int a = 0;
    Int b = 0;

    LocalType() = default;
    LocalType(Int a_, Int b_);

    friend bool operator==(const LocalType&, const LocalType&) = default;
};

/// Generalized rank and degree.
struct Invariants {
    Int R = 1;
    Int D = 0;

    Invariants() = default;
    Invariants(Int R_, Int D_);

    friend bool operator==(const Invariants&, const Invariants&) = default;
};

struct HilbertPolynomial {
    Int constant = 0;
    Int linear = 0;

    friend bool operator==(const HilbertPolynomial&, const HilbertPolynomial&) = default;
};

struct ClassicalInvariants {
    Fraction rank;
    Fraction degree;
};

Int ribbon_genus(const RibbonParams& p);

Invariants invariants_of(const CompleteType& ct);
Fraction slope(const Invariants& inv);
Fraction slope(const CompleteType& ct);

/// chi = D + R * (1 - gbar).
Int euler_characteristic(const Invariants& inv, const RibbonParams& p);

/// P(T) = chi + R*d*T, where d >= 1 is the polarization degree on the
/// reduced curve.
HilbertPolynomial hilbert_polynomial(const Invariants& inv, const RibbonParams& p, Int d);

/// Rank R/2 and degree D + R*delta/2 of the sheaf viewed on the ribbon.
ClassicalInvariants classical_invariants(const Invariants& inv, const RibbonParams& p);

/// Invariants of the dual; torsion_sections is h^0 of the torsion subsheaf.
Invariants dual_invariants(const Invariants& inv, const RibbonParams& p, Int torsion_sections);

/// Invariants of a vector bundle on the ribbon of rank n whose restriction
/// to the reduced curve has degree deg_restriction.
Invariants vector_bundle_invariants(Int n, Int deg_restriction, const RibbonParams& p);
bool vb_parity_ok(Int R, Int D, const RibbonParams& p);
inline bool vb_parity_ok(const Invariants& inv, const RibbonParams& p) {
    return vb_parity_ok(inv.R, inv.D, p);
}

/// Complete type of a generalized vector bundle of generalized rank 2r,
/// generalized degree D and index b. Throws IntegralityError when
/// b + D + r*delta is odd.
CompleteType gvb_complete_type(Int r, Int D, Int b, const RibbonParams& p);

std::pair<Int, Int> local_type_to_rank_pair(const LocalType& t);
/// Throws DomainError when r0 < r1 or the pair is (0, 0).
LocalType rank_pair_to_local_type(Int r0, Int r1);

} // namespace ribbonmod
