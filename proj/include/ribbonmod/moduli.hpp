#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "ribbonmod/core.hpp"
#include "ribbonmod/stability.hpp"

namespace ribbonmod {

/// Raw dimension formulas with no hypothesis checks. The checked entry points
/// below call these after validating their preconditions.
namespace formula {
Int qlf(Int r0, Int r1, const RibbonParams& p);
Int rigid(Int a, const RibbonParams& p);
Int vector_bundle(Int r, const RibbonParams& p);
Int gvb(Int r, const RibbonParams& p);
Int L_locus(Int n, Int b, const RibbonParams& p);
} // namespace formula

/// 1 + (r0^2 + r1^2)(gbar - 1) + r0 r1 delta. Evaluated for any ct; the
/// degrees are ignored and the stability range is the caller's concern.
Int dim_qlf_locus(const CompleteType& ct, const RibbonParams& p);

/// 1 + (a^2 + a) delta + (2a^2 + 2a + 1)(gbar - 1).
Int dim_rigid_locus(Int a, const RibbonParams& p);

struct VbLocus {
    bool nonempty = false;
    Int dimension = 0;
};
/// Stable vector bundles on the ribbon of rank r (generalized rank 2r) and
/// generalized degree D.
VbLocus dim_vb_locus(Int r, Int D, const RibbonParams& p);

/// Stable generalized vector bundles of generalized rank 2r with a fixed
/// index. Throws DomainError if delta <= 0.
Int dim_gvb_locus(Int r, const RibbonParams& p);

/// Ribbon obtained by blowing up along a divisor of length b: delta' = delta - b.
RibbonParams blowup(const RibbonParams& p, Int b);

/// Unordered partition of the index into local indices, parts descending.
class PartitionSpec {
public:
    /// Sorts descending; throws DomainError on an empty list or a part < 1.
    explicit PartitionSpec(std::vector<Int> parts);

    const std::vector<Int>& parts() const { return parts_; }
    Int total() const;
    Int length() const { return static_cast<Int>(parts_.size()); }

    friend bool operator==(const PartitionSpec&, const PartitionSpec&) = default;
    friend auto operator<=>(const PartitionSpec& a, const PartitionSpec& b) { return a.parts_ <=> b.parts_; }

private:
    std::vector<Int> parts_;
};

/// Sheaves of type (n, 1) with index b. Requires gbar >= 2 and delta > 0.
Int dim_L_locus(Int n, Int b, const RibbonParams& p);
/// Same, restricted to a fixed local index sequence: adds its length.
Int dim_L_stratum(Int n, const PartitionSpec& partition, const RibbonParams& p);

/// All partitions of b, lexicographically descending. b <= kMaxPartitionArg.
inline constexpr Int kMaxPartitionArg = 60;
std::vector<PartitionSpec> partitions(Int b);

/// Number of partitions of b, for b in [0, 400].
std::uint64_t partition_count(Int b);

/// Necessary condition for `special` to lie in the closure of the locus of
/// `generic`: same (R, D), r0 can only grow and r1 only shrink.
bool may_specialize(const CompleteType& generic, const CompleteType& special);

// ---------------------------------------------------------------------------

enum class ComponentKind { QlfCompleteType, GeneralizedVectorBundle, RigidType, VectorBundleOnReduced };
std::string_view to_string(ComponentKind k);
/// Short label used in reports: qlf, gvb, rigid, vb_reduced.
std::string_view short_name(ComponentKind k);

/// One conjectural irreducible component. Every kind is described by its
/// complete type; `index` is set for generalized vector bundles only.
struct ComponentDescriptor {
    ComponentKind kind = ComponentKind::QlfCompleteType;
    CompleteType type;
    std::optional<Int> index;
    Int dimension = 0;
    ExistenceVerdict existence;

    /// (a, d0, d1) for rigid type: a = r1.
    Int rigid_a() const { return type.r1; }

    friend bool operator==(const ComponentDescriptor&, const ComponentDescriptor&) = default;
};

struct EnumerateOptions {
    /// Also emit index-0 generalized vector bundles (honest vector bundles on
    /// the ribbon) in the small-delta regime.
    bool include_index_zero = false;
    /// In the large-delta regime with odd rank, also emit the stable bundles
    /// on the reduced curve when the deformation statement leaves them as a
    /// possible exception.
    bool include_possible_exception = false;
    /// Worker threads; output order does not depend on it.
    unsigned jobs = 1;
    /// Refuse queries that would produce more rows than this.
    std::uint64_t max_components = 1'000'000;
};

/// Conjectural list of irreducible components of the moduli space of stable
/// sheaves of generalized rank R and degree D. Requires gbar >= 2, delta > 0.
/// Ordered by (kind, r1, d1, index).
std::vector<ComponentDescriptor> enumerate_components(const RibbonParams& p, Int R, Int D,
                                                      const EnumerateOptions& options = {});

/// Number of integers strictly between lo_num/den and hi_num/den (den > 0),
/// and the first of them.
struct OpenRange {
    Int first = 0;
    Int count = 0;
};
OpenRange open_integer_range(Int lo_num, Int hi_num, Int den);

} // namespace ribbonmod
