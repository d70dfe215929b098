#pragma once

#include "grm/algebra.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace grm {

using GradedDimension = std::map<GroupElement, std::size_t>;

/// Finite-dimensional graded left module: a homogeneous basis with degrees and, for every algebra
/// basis element a_k, the matrix of its action in that basis.
class GradedModule {
public:
    GradedModule() = default;
    GradedModule(AlgebraPtr algebra, std::vector<GroupElement> degrees, std::vector<Matrix> action,
                 std::vector<std::string> labels = {});

    static GradedModule zero(AlgebraPtr algebra);
    /// Action given on the algebra's generators only; extended to the basis through the algebra's words.
    /// Without words every basis element is a generator and the action is taken as given.
    static GradedModule from_generator_action(AlgebraPtr algebra, std::vector<GroupElement> degrees,
                                              const std::map<std::size_t, Matrix>& generator_action,
                                              std::vector<std::string> labels = {});
    /// The algebra acting on itself from the left.
    static GradedModule regular(AlgebraPtr algebra);

    const AlgebraPtr& algebra() const { return algebra_; }
    const Field& field() const { return algebra_->field(); }
    const FgAbelianGroup& group() const { return algebra_->group(); }
    std::size_t dim() const { return degrees_.size(); }
    bool is_zero() const { return degrees_.empty(); }

    const GroupElement& degree(std::size_t i) const { return degrees_[i]; }
    const std::vector<GroupElement>& degrees() const { return degrees_; }
    const std::string& label(std::size_t i) const { return labels_[i]; }
    const std::vector<std::string>& labels() const { return labels_; }
    const Matrix& action(std::size_t k) const { return action_[k]; }
    const std::vector<Matrix>& actions() const { return action_; }
    /// Action of an arbitrary algebra element given in coordinates.
    Matrix action_of(const Vector& a) const;

    /// Basis indices of degree g, ascending; empty when g is outside the support.
    const std::vector<std::size_t>& component(const GroupElement& g) const;
    std::size_t component_dim(const GroupElement& g) const { return component(g).size(); }
    std::vector<GroupElement> support() const;
    GradedDimension graded_dimension() const;

    /// Block of action(k) from the degree-g component to the degree g + deg(a_k) component.
    Matrix block(std::size_t k, const GroupElement& g) const;

    std::string to_string() const;

private:
    AlgebraPtr algebra_;
    std::vector<GroupElement> degrees_;
    std::vector<Matrix> action_;
    std::vector<std::string> labels_;
    std::map<GroupElement, std::vector<std::size_t>> components_;
};

using ModulePtr = std::shared_ptr<const GradedModule>;

inline ModulePtr share(GradedModule m) { return std::make_shared<const GradedModule>(std::move(m)); }

ValidationReport validate(const GradedModule& m);

/// Homogeneous map of the given degree; matrix is target.dim() x source.dim() in the two bases.
struct GradedMap {
    ModulePtr source;
    ModulePtr target;
    GroupElement degree;
    Matrix matrix;

    /// Block from source degree g to target degree g + degree.
    Matrix block(const GroupElement& g) const;
};

ValidationReport validate(const GradedMap& f);

GradedMap identity_map(const ModulePtr& m);
GradedMap zero_map(const ModulePtr& source, const ModulePtr& target);
/// g after f
GradedMap compose(const GradedMap& g, const GradedMap& f);
bool same_map(const GradedMap& a, const GradedMap& b);

/// M(g), with M(g)_h = M_{h+g}: every basis vector moves from degree d to d - g.
GradedModule shift(const GradedModule& m, const GroupElement& g);
/// Same matrix between the shifted modules.
GradedMap shift(const GradedMap& f, const GroupElement& g);

/// Basis of the degree-preserving A-linear maps M -> N.
std::vector<GradedMap> hom_space(const ModulePtr& m, const ModulePtr& n);
std::size_t hom_dimension(const ModulePtr& m, const ModulePtr& n);

/// Graded dual over the opposite algebra: (DM)_g = (M_{-g})^*, action by transposes.
GradedModule dual(const GradedModule& m);
/// Dual over an explicitly supplied algebra, which must equal the opposite of m's algebra.
GradedModule dual(const GradedModule& m, AlgebraPtr opposite);

struct DirectSum {
    GradedModule module;
    std::vector<Matrix> injections;  // sum.dim() x summand.dim()
    std::vector<Matrix> projections; // summand.dim() x sum.dim()
};
DirectSum direct_sum(const std::vector<ModulePtr>& summands);

/// Homogeneous subspace of a module, one subspace (in component-local coordinates) per degree.
using GradedSubspace = std::map<GroupElement, Subspace>;

/// Submodule spanned by an A-stable graded subspace; inclusion is m.dim() x sub.dim().
struct Submodule {
    GradedModule module;
    Matrix inclusion;
};
Submodule submodule(const GradedModule& m, const GradedSubspace& u);
/// A-submodule generated by homogeneous vectors of m.
GradedSubspace generated_subspace(const GradedModule& m, const std::vector<Vector>& generators);
Submodule generated_submodule(const GradedModule& m, const std::vector<Vector>& generators);

struct Quotient {
    GradedModule module;
    Matrix projection; // quotient.dim() x m.dim()
};
Quotient quotient(const GradedModule& m, const GradedSubspace& u);

/// Degreewise kernel and image of a homogeneous map.
GradedSubspace kernel_subspace(const GradedMap& f);
GradedSubspace image_subspace(const GradedMap& f);

struct KernelResult {
    GradedModule module;
    GradedMap inclusion;
};
struct CokernelResult {
    GradedModule module;
    GradedMap projection;
};
KernelResult kernel(const GradedMap& f);
CokernelResult cokernel(const GradedMap& f);

/// Full-length vector of m with the given component-local coordinates placed at degree g.
Vector embed(const GradedModule& m, const GroupElement& g, const Vector& local);

} // namespace grm
