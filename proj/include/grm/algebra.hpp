#pragma once

#include "grm/group.hpp"
#include "grm/matrix.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace grm {

struct AlgebraBasisElement {
    std::string label;
    GroupElement degree;

    bool operator==(const AlgebraBasisElement&) const = default;
};

/// Collected invariant violations; validation never throws.
struct ValidationReport {
    std::vector<std::string> failures;

    bool ok() const { return failures.empty(); }
    void fail(std::string what) { failures.push_back(std::move(what)); }
    void merge(const ValidationReport& other, const std::string& prefix = {});
};

/// Linear combination of paths, each written as a product of arrow indices left to right
/// ("c*a" is the path a followed by c).
struct QuiverRelation {
    struct Term {
        Scalar coefficient;
        std::vector<std::size_t> arrows;
        bool operator==(const Term&) const = default;
    };
    std::vector<Term> terms;
    bool operator==(const QuiverRelation&) const = default;
};

/// Presentation behind a quiver-compiled algebra.
struct QuiverData {
    struct Arrow {
        std::string name;
        std::size_t source = 0;
        std::size_t target = 0;
        GroupElement degree;
        bool operator==(const Arrow&) const = default;
    };
    std::vector<std::string> vertices;
    std::vector<Arrow> arrows;
    std::vector<QuiverRelation> relations;
    std::size_t cap = 0;
    /// basis index of e_v and of each arrow
    std::vector<std::size_t> vertex_basis;
    std::vector<std::size_t> arrow_basis;
    /// basis index -> vertex at which the path starts / ends
    std::vector<std::size_t> path_source;
    std::vector<std::size_t> path_target;

    bool operator==(const QuiverData&) const = default;
};

/// Finite-dimensional algebra with a homogeneous basis graded by an abelian group.
///
/// Multiplication is stored as left-multiplication matrices: column j of left(i) is a_i * a_j.
/// Optional data used by the homological layer: a radical given as a subset of basis indices,
/// a complete set of orthogonal primitive idempotents given as basis indices, and for each basis
/// element a word in generator indices whose product (left to right) is that element.
class GradedAlgebra {
public:
    GradedAlgebra(Field field, FgAbelianGroup group, std::vector<AlgebraBasisElement> basis,
                  std::vector<Matrix> left_mult, Vector unit);

    const Field& field() const { return field_; }
    const FgAbelianGroup& group() const { return group_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<AlgebraBasisElement>& basis() const { return basis_; }
    const GroupElement& degree(std::size_t i) const { return basis_[i].degree; }
    const std::string& label(std::size_t i) const { return basis_[i].label; }
    std::optional<std::size_t> index_of(const std::string& label) const;

    const Matrix& left(std::size_t i) const { return left_[i]; }
    const Vector& unit() const { return unit_; }
    /// Coordinates of a_i * a_j.
    Vector product(std::size_t i, std::size_t j) const { return left_[i].col(j); }
    Vector multiply(const Vector& a, const Vector& b) const;

    const std::optional<std::vector<std::size_t>>& radical() const { return radical_; }
    const std::vector<std::size_t>& idempotents() const { return idempotents_; }
    /// Basis indices whose products span the algebra; all of them unless words are known.
    const std::vector<std::size_t>& generators() const { return generators_; }
    const std::optional<std::vector<std::vector<std::size_t>>>& words() const { return words_; }
    const std::optional<QuiverData>& quiver() const { return quiver_; }

    void set_radical(std::vector<std::size_t> radical) { radical_ = std::move(radical); }
    void set_idempotents(std::vector<std::size_t> idempotents) { idempotents_ = std::move(idempotents); }
    void set_words(std::vector<std::size_t> generators, std::vector<std::vector<std::size_t>> words);
    void set_quiver(QuiverData q) { quiver_ = std::move(q); }
    bool has_radical_data() const { return radical_.has_value() && !idempotents_.empty(); }

    /// Same basis and radical, products reversed.
    GradedAlgebra opposite() const;
    /// The same algebra with every degree pushed along phi.
    GradedAlgebra regraded(const GroupMorphism& phi) const;

    bool operator==(const GradedAlgebra& other) const;

private:
    Field field_;
    FgAbelianGroup group_;
    std::vector<AlgebraBasisElement> basis_;
    std::vector<Matrix> left_;
    Vector unit_;
    std::optional<std::vector<std::size_t>> radical_;
    std::vector<std::size_t> idempotents_;
    std::vector<std::size_t> generators_;
    std::optional<std::vector<std::vector<std::size_t>>> words_;
    std::optional<QuiverData> quiver_;
};

using AlgebraPtr = std::shared_ptr<const GradedAlgebra>;

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b);

ValidationReport validate(const GradedAlgebra& a);

struct QuiverPresentation {
    Field field;
    FgAbelianGroup group;
    std::vector<std::string> vertices;
    std::vector<QuiverData::Arrow> arrows;
    std::vector<QuiverRelation> relations;
};

/// Basis of irreducible paths under the length-lexicographic rewriting system completed from the
/// relations. Throws std::invalid_argument for non-homogeneous or non-admissible relations and
/// std::runtime_error("possibly infinite-dimensional; raise cap or add relations") when the
/// completion does not close off below the path-length cap.
GradedAlgebra compile_quiver(const QuiverPresentation& q, std::size_t cap);

} // namespace grm
