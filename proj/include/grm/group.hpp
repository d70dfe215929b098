#pragma once

#include "grm/smith.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace grm {

/// Element of Z^r x Z/m_1 x ... x Z/m_s in coordinates (free part first, torsion residues after).
struct GroupElement {
    std::vector<std::int64_t> coords;

    auto operator<=>(const GroupElement&) const = default;
    bool operator==(const GroupElement&) const = default;

    std::string to_string() const;
};

struct GroupElementHash {
    std::size_t operator()(const GroupElement& g) const noexcept;
};

/// Finitely generated abelian group Z^rank x Z/m_1 x ... x Z/m_s with m_1 | m_2 | ... and every m_i >= 2.
class FgAbelianGroup {
public:
    FgAbelianGroup() = default;
    /// Throws std::invalid_argument unless the torsion list is already a divisibility chain of entries >= 2.
    FgAbelianGroup(std::size_t rank, std::vector<std::int64_t> torsion = {});

    struct Presented;
    /// Canonical form of Z^rank x Z/t_1 x ... for an arbitrary list t_i >= 1, together with the
    /// isomorphism from those coordinates onto the canonical ones.
    static Presented canonicalize(std::size_t rank, const std::vector<std::int64_t>& orders);

    std::size_t rank() const { return rank_; }
    const std::vector<std::int64_t>& torsion() const { return torsion_; }
    /// Number of coordinates of an element.
    std::size_t ngens() const { return rank_ + torsion_.size(); }
    bool is_trivial() const { return rank_ == 0 && torsion_.empty(); }
    bool is_finite() const { return rank_ == 0; }
    /// Order of a finite group; throws for infinite groups.
    std::uint64_t order() const;

    GroupElement zero() const;
    GroupElement generator(std::size_t i) const;
    GroupElement element(std::vector<std::int64_t> coords) const;
    bool contains(const GroupElement& g) const;
    GroupElement reduce(GroupElement g) const;
    GroupElement add(const GroupElement& a, const GroupElement& b) const;
    GroupElement sub(const GroupElement& a, const GroupElement& b) const;
    GroupElement neg(const GroupElement& a) const;
    GroupElement scale(const GroupElement& a, std::int64_t k) const;

    /// All elements of a finite group in lexicographic coordinate order.
    std::vector<GroupElement> elements() const;
    /// Elements with free coordinates in [-radius, radius] and arbitrary torsion residues.
    std::vector<GroupElement> box(std::int64_t radius) const;

    bool operator==(const FgAbelianGroup&) const = default;
    std::string to_string() const;

private:
    std::size_t rank_ = 0;
    std::vector<std::int64_t> torsion_;
};

/// Homomorphism given by an integer matrix whose column j is the image of domain generator j.
class GroupMorphism {
public:
    GroupMorphism() = default;
    /// Throws std::invalid_argument on shape mismatch or when torsion is not respected.
    GroupMorphism(FgAbelianGroup domain, FgAbelianGroup codomain, std::vector<std::vector<std::int64_t>> matrix);

    static GroupMorphism identity(const FgAbelianGroup& g);
    static GroupMorphism zero(const FgAbelianGroup& domain, const FgAbelianGroup& codomain);

    const FgAbelianGroup& domain() const { return domain_; }
    const FgAbelianGroup& codomain() const { return codomain_; }
    const std::vector<std::vector<std::int64_t>>& matrix() const { return matrix_; }

    GroupElement operator()(const GroupElement& g) const;
    /// this after other
    GroupMorphism compose(const GroupMorphism& other) const;
    bool is_identity() const;
    bool is_zero() const;

    bool operator==(const GroupMorphism&) const = default;
    std::string to_string() const;

private:
    FgAbelianGroup domain_;
    FgAbelianGroup codomain_;
    std::vector<std::vector<std::int64_t>> matrix_; // codomain.ngens() rows
};

struct FgAbelianGroup::Presented {
    FgAbelianGroup group;
    /// from the presented coordinates to the canonical group
    std::vector<std::vector<std::int64_t>> coordinate_map;
};

struct GroupKernel {
    FgAbelianGroup group;
    GroupMorphism inclusion;
};

GroupKernel kernel(const GroupMorphism& phi);

/// Some g with phi(g) = h, if any.
std::optional<GroupElement> preimage(const GroupMorphism& phi, const GroupElement& h);

/// Members of `support` mapping to h, in the order given.
std::vector<GroupElement> fiber_elements(const GroupMorphism& phi, const GroupElement& h,
                                         const std::vector<GroupElement>& support);
/// The complete fiber over h; throws std::domain_error("infinite fiber; supply a support set") when
/// the kernel is infinite. Sorted lexicographically.
std::vector<GroupElement> fiber_elements(const GroupMorphism& phi, const GroupElement& h);

/// Kernel elements whose kernel coordinates lie in box(radius), mapped into the domain.
std::vector<GroupElement> kernel_window(const GroupKernel& k, std::int64_t radius);

/// Non-negative integer or infinity, totally ordered with infinity on top.
class ExtendedNat {
public:
    constexpr ExtendedNat() = default;
    constexpr ExtendedNat(std::uint64_t v) : finite_(true), value_(v) {}
    static constexpr ExtendedNat infinity() { return ExtendedNat(InfinityTag{}); }

    constexpr bool is_finite() const { return finite_; }
    constexpr bool is_infinite() const { return !finite_; }
    /// Undefined for infinity.
    constexpr std::uint64_t value() const { return value_; }

    constexpr std::strong_ordering operator<=>(const ExtendedNat& o) const
    {
        if (finite_ != o.finite_)
            return finite_ ? std::strong_ordering::less : std::strong_ordering::greater;
        return finite_ ? value_ <=> o.value_ : std::strong_ordering::equal;
    }
    constexpr bool operator==(const ExtendedNat& o) const { return (*this <=> o) == 0; }

    friend constexpr ExtendedNat operator+(ExtendedNat a, ExtendedNat b)
    {
        if (!a.finite_ || !b.finite_)
            return infinity();
        return ExtendedNat(a.value_ + b.value_);
    }

    std::string to_string() const;

private:
    struct InfinityTag {};
    constexpr explicit ExtendedNat(InfinityTag) : finite_(false), value_(0) {}
    bool finite_ = true;
    std::uint64_t value_ = 0;
};

/// Cohomological dimension of L over a field of the given characteristic (0 for Q):
/// rank(L) unless the characteristic divides a torsion order, then infinity.
ExtendedNat cohomological_dimension(const FgAbelianGroup& L, std::uint64_t characteristic);

} // namespace grm
