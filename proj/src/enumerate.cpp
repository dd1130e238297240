#include <exception>
#include <algorithm>
#include <string>
#include <thread>
#include <tuple>

#include "ribbonmod/errors.hpp"
#include "ribbonmod/moduli.hpp"

namespace ribbonmod {

using checked::add;
using checked::mul;
using checked::sub;

namespace {

// Stable bundles of any rank and degree exist on a curve of genus >= 2.
constexpr ExistenceVerdict kStableOnReduced{true, true};

// For r0 + r1 = R and d0 + d1 = D, the open range
//   (d0 - R delta)/r0 < d1/r1 < d0/r0
// is equivalent to r1 (D - R delta) < R d1 < r1 D.
OpenRange qlf_d1_range(Int r1, Int R, Int D, const RibbonParams& p) {
    return open_integer_range(mul(r1, sub(D, mul(R, p.delta))), mul(r1, D), R);
}

struct GvbRange {
    Int first = 0; // smallest admissible index
    Int count = 0; // admissible indices step by 2
};

// Indices b in [lowest, r delta) with b = D + r delta (mod 2).
GvbRange gvb_indices(Int r, Int D, const RibbonParams& p, Int lowest) {
    Int bound = mul(r, p.delta);
    Int parity = ((add(D, bound) % 2) + 2) % 2;
    Int first = lowest + ((((parity - lowest) % 2) + 2) % 2);
    if (first >= bound) return {first, 0};
    return {first, add(sub(bound - 1, first) / 2, 1)};
}

ComponentDescriptor make_qlf(Int r0, Int r1, Int D, Int d1, const RibbonParams& p) {
    CompleteType ct(r0, r1, sub(D, d1), d1);
    ExistenceVerdict ex = r1 == 0 ? kStableOnReduced : ss_qlf_exists(ct, p);
    return {ComponentKind::QlfCompleteType, ct, std::nullopt, dim_qlf_locus(ct, p), ex};
}

ComponentDescriptor make_gvb(Int r, Int D, Int b, const RibbonParams& p) {
    CompleteType ct = gvb_complete_type(r, D, b, p);
    return {ComponentKind::GeneralizedVectorBundle, ct, b, dim_gvb_locus(r, p), gvb_ss_exists(r, b, p)};
}

ComponentDescriptor make_rigid(Int a, Int D, Int d1, const RibbonParams& p) {
    CompleteType ct(add(a, 1), a, sub(D, d1), d1);
    ExistenceVerdict ex{rigid_locus_nonempty(a, ct.d0, d1, p), rigid_locus_nonempty(a, ct.d0, d1, p)};
    return {ComponentKind::RigidType, ct, std::nullopt, dim_rigid_locus(a, p), ex};
}

auto order_key(const ComponentDescriptor& c) {
    return std::make_tuple(static_cast<int>(c.kind), c.type.r1, c.type.d1, c.index.value_or(-1));
}

void check_budget(std::uint64_t count, const EnumerateOptions& options) {
    if (count > options.max_components)
        throw DomainError("query would emit " + std::to_string(count) + " components, above the limit of " +
                          std::to_string(options.max_components));
}

// Quasi locally free complete types with r0 > r1 >= 0, split over threads by r1.
std::vector<ComponentDescriptor> qlf_components(const RibbonParams& p, Int R, Int D, unsigned jobs) {
    const Int max_r1 = (R - 1) / 2;
    auto work = [&](Int from, Int to, std::vector<ComponentDescriptor>& out) {
        for (Int r1 = from; r1 < to; ++r1) {
            Int r0 = R - r1;
            if (r1 == 0) {
                out.push_back(make_qlf(r0, 0, D, 0, p));
                continue;
            }
            auto range = qlf_d1_range(r1, R, D, p);
            for (Int k = 0; k < range.count; ++k) out.push_back(make_qlf(r0, r1, D, range.first + k, p));
        }
    };

    const Int total = max_r1 + 1;
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::min<Int>(total, 256))));
    std::vector<std::vector<ComponentDescriptor>> parts(jobs);
    if (jobs == 1) {
        work(0, total, parts[0]);
    } else {
        std::vector<std::exception_ptr> errors(jobs);
        {
            std::vector<std::jthread> pool;
            Int chunk = (total + jobs - 1) / jobs;
            for (unsigned j = 0; j < jobs; ++j) {
                Int from = std::min<Int>(total, static_cast<Int>(j) * chunk);
                Int to = std::min<Int>(total, from + chunk);
                pool.emplace_back([&, from, to, j] {
                    try {
                        work(from, to, parts[j]);
                    } catch (...) {
                        errors[j] = std::current_exception();
                    }
                });
            }
        }
        for (auto& e : errors)
            if (e) std::rethrow_exception(e);
    }
    std::vector<ComponentDescriptor> out;
    for (auto& part : parts) out.insert(out.end(), part.begin(), part.end());
    return out;
}

std::uint64_t qlf_count(const RibbonParams& p, Int R, Int D) {
    std::uint64_t n = 0;
    for (Int r1 = 0; r1 <= (R - 1) / 2; ++r1)
        n += r1 == 0 ? 1 : static_cast<std::uint64_t>(qlf_d1_range(r1, R, D, p).count);
    return n;
}

} // namespace

std::vector<ComponentDescriptor> enumerate_components(const RibbonParams& p, Int R, Int D,
                                                      const EnumerateOptions& options) {
    if (p.gbar < 2) throw DomainError("component enumeration needs gbar >= 2");
    if (p.delta <= 0) throw DomainError("component enumeration needs delta > 0");
    if (R < 1) throw DomainError("generalized rank must be positive");

    const bool small = p.small_conormal();
    const Int gvb_lowest = options.include_index_zero ? 0 : 1;
    std::vector<ComponentDescriptor> out;

    GvbRange gvb{};
    if (R % 2 == 0) gvb = gvb_indices(R / 2, D, p, gvb_lowest);

    if (small) {
        check_budget(qlf_count(p, R, D) + static_cast<std::uint64_t>(gvb.count), options);
        out = qlf_components(p, R, D, options.jobs);
    } else if (R % 2 == 0) {
        check_budget(static_cast<std::uint64_t>(gvb.count), options);
    } else if (R == 1) {
        // Generalized rank 1 lives on the reduced curve: line bundles.
        out.push_back(make_qlf(1, 0, D, 0, p));
    } else {
        Int a = (R - 1) / 2;
        auto range = qlf_d1_range(a, R, D, p);
        check_budget(static_cast<std::uint64_t>(range.count), options);
        for (Int k = 0; k < range.count; ++k) out.push_back(make_rigid(a, D, range.first + k, p));
        if (options.include_possible_exception && R == 3 &&
            vb_deforms_to_ribbon(3, D, p) == DeformVerdict::PossibleException) {
            CompleteType ct(3, 0, D, 0);
            out.push_back({ComponentKind::VectorBundleOnReduced, ct, std::nullopt, dim_qlf_locus(ct, p),
                           kStableOnReduced});
        }
    }

    for (Int k = 0; k < gvb.count; ++k) out.push_back(make_gvb(R / 2, D, add(gvb.first, mul(2, k)), p));

    std::stable_sort(out.begin(), out.end(),
                     [](const auto& x, const auto& y) { return order_key(x) < order_key(y); });
    return out;
}

} // namespace ribbonmod
