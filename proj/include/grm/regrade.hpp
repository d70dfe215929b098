#pragma once

#include "grm/module.hpp"
#include "grm/report.hpp"

#include <variant>

namespace grm {

/// The algebra with every degree pushed along phi.
AlgebraPtr pushforward(const AlgebraPtr& a, const GroupMorphism& phi);

/// phi_!: same space and action, basis vector of degree g moved to phi(g).
GradedModule pushforward(const GradedModule& m, const GroupMorphism& phi);
/// Variant reusing an already regraded algebra (must equal pushforward(m.algebra(), phi)).
GradedModule pushforward(const GradedModule& m, const GroupMorphism& phi, AlgebraPtr pushed);
GradedMap pushforward(const GradedMap& f, const GroupMorphism& phi, AlgebraPtr pushed);

/// phi_*: the component at h is the product of the components of m over the fiber of h, which for
/// finite-dimensional m is a finite sum. Basis ordered by h, then fiber element, then m's basis.
GradedModule coinduction(const GradedModule& m, const GroupMorphism& phi, AlgebraPtr pushed);
/// Position in coinduction(m, ...) of each basis vector of m.
std::vector<std::size_t> coinduction_order(const GradedModule& m, const GroupMorphism& phi);
GradedMap coinduction(const GradedMap& f, const GroupMorphism& phi, AlgebraPtr pushed);

/// phi^*(N) for infinite kernels: the component at g is a copy of N at phi(g), queried on demand.
class LazyGradedModule {
public:
    LazyGradedModule(ModulePtr base, GroupMorphism phi, AlgebraPtr algebra);

    const ModulePtr& base() const { return base_; }
    const GroupMorphism& morphism() const { return phi_; }
    const AlgebraPtr& algebra() const { return algebra_; }

    std::size_t component_dim(const GroupElement& g) const { return base_->component_dim(phi_(g)); }
    /// Basis indices of the base module forming the copy at g.
    const std::vector<std::size_t>& component(const GroupElement& g) const { return base_->component(phi_(g)); }
    /// Action of algebra basis element k from the g-slot to the (g + deg a_k)-slot.
    Matrix block(std::size_t k, const GroupElement& g) const;

private:
    ModulePtr base_;
    GroupMorphism phi_;
    AlgebraPtr algebra_;
};

/// Materialized phi^*(N): basis pairs (n, g) with g running over the fiber of deg n, ordered by
/// n then g. `algebra` is the source-graded algebra whose pushforward is N's algebra.
GradedModule pullback_finite(const GradedModule& n, const GroupMorphism& phi, AlgebraPtr algebra);
/// Materialized when the kernel is finite, lazy otherwise.
std::variant<GradedModule, LazyGradedModule> pullback(const ModulePtr& n, const GroupMorphism& phi,
                                                      AlgebraPtr algebra);
/// phi^*(f) for a degree-zero map between target-graded modules; kernel must be finite.
GradedMap pullback(const GradedMap& f, const GroupMorphism& phi, AlgebraPtr algebra);

struct Decomposition {
    ModulePtr source; // sum over l in ker(phi) of m[l]
    ModulePtr target; // phi^* phi_! m
    GradedMap map;
    CheckList checks;
};
/// The isomorphism sum_l m[l] -> phi^* phi_!(m), m in m[l]_g going to the slot (m, g).
/// Requires a finite kernel.
Decomposition decomposition_iso(const ModulePtr& m, const GroupMorphism& phi);

struct WindowedDecomposition {
    std::int64_t radius = 0;
    std::size_t required_radius = 0;
    std::vector<GroupElement> interior; // degrees fully covered by the window
    CheckList checks;
};
/// Degreewise version over kernel elements with coordinates in [-radius, radius].
/// Throws std::invalid_argument naming the required radius when the window does not cover supp(m).
WindowedDecomposition decomposition_window(const ModulePtr& m, const GroupMorphism& phi, std::int64_t radius);

struct AdjunctionWitness {
    GradedMap unit;   // m -> phi^* phi_! m
    GradedMap counit; // phi_! phi^* n -> n
    /// Hom(phi_! m, n) -> Hom(m, phi^* n), f |-> phi^*(f) o unit, in hom_space bases
    Matrix left_bijection;
    /// Hom(phi^* n, m) -> Hom(n, phi_* m), g |-> phi_*(g) o unit', in hom_space bases
    Matrix right_bijection;
    std::size_t hom_left[2] = {0, 0};  // dims of Hom(phi_! m, n), Hom(m, phi^* n)
    std::size_t hom_right[2] = {0, 0}; // dims of Hom(phi^* n, m), Hom(n, phi_* m)
    CheckList checks;
};
/// m over the source-graded algebra, n over its pushforward. Throws std::domain_error for an
/// infinite kernel (use the windowed checks instead).
AdjunctionWitness adjunction_witness(const ModulePtr& m, const ModulePtr& n, const GroupMorphism& phi);

/// phi^* phi_*(m) against the sum of the shifts m[l], l in ker(phi), with an explicit isomorphism.
CheckList product_decomposition_check(const ModulePtr& m, const GroupMorphism& phi);

struct Rank1Resolution {
    std::int64_t radius = 0;
    GroupElement kernel_generator;
    /// per target degree h: the truncated complex S1 -> S0 -> n_h
    struct Piece {
        GroupElement degree;
        Matrix differential;  // S0_h x S1_h
        Matrix augmentation;  // n_h x S0_h
    };
    std::vector<Piece> pieces;
    CheckList checks;
};
/// 0 -> phi_! phi^* n -> phi_! phi^* n -> n -> 0 with differential (shift by l) - id, kernel slots
/// restricted to [-radius, radius]; S1 omits slot `radius`, whose image leaves the window.
/// `algebra` is the source-graded algebra; the kernel of phi must be infinite cyclic.
Rank1Resolution rank1_regrade_resolution(const ModulePtr& n, const GroupMorphism& phi, AlgebraPtr algebra,
                                         std::int64_t radius);

/// Coordinates of a degree-zero map in a hom_space basis; nullopt if it is not in the span.
std::optional<Vector> hom_coordinates(const std::vector<GradedMap>& basis, const GradedMap& f);

} // namespace grm
