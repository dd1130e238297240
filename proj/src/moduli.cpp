#include "ribbonmod/moduli.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "ribbonmod/errors.hpp"

namespace ribbonmod {

using checked::add;
using checked::mul;
using checked::sub;

namespace formula {

Int qlf(Int r0, Int r1, const RibbonParams& p) {
    Int squares = add(mul(r0, r0), mul(r1, r1));
    return add(add(1, mul(squares, sub(p.gbar, 1))), mul(mul(r0, r1), p.delta));
}

Int rigid(Int a, const RibbonParams& p) {
    Int a2 = mul(a, a);
    return add(add(1, mul(add(a2, a), p.delta)), mul(add(add(mul(2, a2), mul(2, a)), 1), sub(p.gbar, 1)));
}

Int vector_bundle(Int r, const RibbonParams& p) {
    Int r2 = mul(r, r);
    return add(add(1, mul(r2, p.delta)), mul(mul(2, r2), sub(p.gbar, 1)));
}

Int gvb(Int r, const RibbonParams& p) {
    Int r2 = mul(r, r);
    return add(add(1, mul(mul(2, r2), sub(p.gbar, 1))), mul(r2, p.delta));
}

Int L_locus(Int n, Int b, const RibbonParams& p) {
    Int quad = add(add(mul(n, n), mul(2, n)), 2);
    return add(add(1, mul(quad, sub(p.gbar, 1))), mul(add(n, 1), sub(p.delta, b)));
}

} // namespace formula

Int dim_qlf_locus(const CompleteType& ct, const RibbonParams& p) { return formula::qlf(ct.r0, ct.r1, p); }

Int dim_rigid_locus(Int a, const RibbonParams& p) {
    if (a < 1) throw DomainError("rigid type needs a >= 1");
    return formula::rigid(a, p);
}

VbLocus dim_vb_locus(Int r, Int D, const RibbonParams& p) {
    if (r < 1) throw DomainError("vector bundle rank must be positive");
    bool parity = sub(D, mul(r, p.delta)) % 2 == 0;
    return {p.delta > 0 && parity, formula::vector_bundle(r, p)};
}

Int dim_gvb_locus(Int r, const RibbonParams& p) {
    if (r < 1) throw DomainError("generalized vector bundle needs r >= 1");
    if (p.delta <= 0) throw DomainError("generalized vector bundle locus dimension needs delta > 0");
    return formula::gvb(r, p);
}

RibbonParams blowup(const RibbonParams& p, Int b) {
    if (b < 0) throw DomainError("blow-up length must be non-negative");
    return {p.gbar, sub(p.delta, b)};
}

PartitionSpec::PartitionSpec(std::vector<Int> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw DomainError("partition must have at least one part");
    for (Int x : parts_)
        if (x < 1) throw DomainError("partition parts must be positive");
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

Int PartitionSpec::total() const {
    Int s = 0;
    for (Int x : parts_) s = add(s, x);
    return s;
}

namespace {

void require_L(Int n, const RibbonParams& p) {
    if (p.gbar < 2) throw DomainError("L-locus dimension needs gbar >= 2");
    if (p.delta <= 0) throw DomainError("L-locus dimension needs delta > 0");
    if (n < 1) throw DomainError("L-locus dimension needs n >= 1");
}

} // namespace

Int dim_L_locus(Int n, Int b, const RibbonParams& p) {
    require_L(n, p);
    if (b < 1) throw DomainError("L-locus dimension needs b >= 1");
    return formula::L_locus(n, b, p);
}

Int dim_L_stratum(Int n, const PartitionSpec& partition, const RibbonParams& p) {
    return add(dim_L_locus(n, partition.total(), p), partition.length());
}

std::vector<PartitionSpec> partitions(Int b) {
    if (b < 1) throw DomainError("partitions need b >= 1");
    if (b > kMaxPartitionArg)
        throw DomainError("partitions of " + std::to_string(b) + " exceed the supported size (max " +
                          std::to_string(kMaxPartitionArg) + ")");
    // Lexicographically descending: start at (b) and repeatedly step to the
    // next smaller partition.
    std::vector<PartitionSpec> out;
    std::vector<Int> cur{b};
    for (;;) {
        out.emplace_back(cur);
        // Strip trailing 1s, decrement the last part > 1, refill greedily.
        Int ones = 0;
        while (!cur.empty() && cur.back() == 1) {
            ++ones;
            cur.pop_back();
        }
        if (cur.empty()) break;
        Int k = cur.back() - 1;
        cur.back() = k;
        Int rest = ones + 1;
        while (rest > 0) {
            Int part = std::min(k, rest);
            cur.push_back(part);
            rest -= part;
        }
    }
    return out;
}

std::uint64_t partition_count(Int b) {
    if (b < 0 || b > 400) throw DomainError("partition count supports 0 <= b <= 400");
    std::vector<std::uint64_t> p(static_cast<std::size_t>(b) + 1, 0);
    p[0] = 1;
    for (Int part = 1; part <= b; ++part)
        for (Int s = part; s <= b; ++s) {
            auto& slot = p[static_cast<std::size_t>(s)];
            if (__builtin_add_overflow(slot, p[static_cast<std::size_t>(s - part)], &slot))
                throw OverflowError("partition count overflows 64 bits");
        }
    return p[static_cast<std::size_t>(b)];
}

bool may_specialize(const CompleteType& generic, const CompleteType& special) {
    return invariants_of(generic) == invariants_of(special) && special.r0 >= generic.r0 && special.r1 <= generic.r1;
}

std::string_view to_string(ComponentKind k) {
    switch (k) {
    case ComponentKind::QlfCompleteType: return "QlfCompleteType";
    case ComponentKind::GeneralizedVectorBundle: return "GeneralizedVectorBundle";
    case ComponentKind::RigidType: return "RigidType";
    case ComponentKind::VectorBundleOnReduced: return "VectorBundleOnReduced";
    }
    return "?";
}

std::string_view short_name(ComponentKind k) {
    switch (k) {
    case ComponentKind::QlfCompleteType: return "qlf";
    case ComponentKind::GeneralizedVectorBundle: return "gvb";
    case ComponentKind::RigidType: return "rigid";
    case ComponentKind::VectorBundleOnReduced: return "vb_reduced";
    }
    return "?";
}

OpenRange open_integer_range(Int lo_num, Int hi_num, Int den) {
    Int first = add(floor_div(lo_num, den), 1);
    Int last = sub(ceil_div(hi_num, den), 1);
    if (last < first) return {first, 0};
    return {first, add(sub(last, first), 1)};
}

} // namespace ribbonmod
