#pragma once

#include "grm/module.hpp"
#include "grm/report.hpp"

#include <cstdint>

namespace grm {

/// Indecomposable projective A e_v shifted by s: (A e_v)(s), generator e_v in degree -s.
struct ProjectiveSummand {
    std::size_t vertex = 0;
    GroupElement shift;
    bool operator==(const ProjectiveSummand&) const = default;
};

/// Throws std::invalid_argument unless the algebra carries a radical whose complement is exactly
/// its designated idempotents and every basis element lies in some A e_v.
void require_radical_data(const GradedAlgebra& a);

/// Basis indices j with a_j e_v = a_j, i.e. the basis of A e_v.
std::vector<std::size_t> projective_basis(const GradedAlgebra& a, std::size_t vertex);
GradedModule indecomposable_projective(const AlgebraPtr& a, std::size_t vertex, const GroupElement& shift);
/// One-dimensional simple at vertex v concentrated in the given degree.
GradedModule simple_module(const AlgebraPtr& a, std::size_t vertex, const GroupElement& degree);
/// D(e_v A) for every vertex v, as modules over a.
std::vector<GradedModule> indecomposable_injectives(const AlgebraPtr& a);

struct TopAndRadical {
    GradedModule top;
    GradedModule radical;
    Matrix projection; // top.dim() x m.dim()
    Matrix inclusion;  // m.dim() x radical.dim()
};
TopAndRadical top_and_radical(const GradedModule& m);

enum class ResolutionStatus { terminated, truncated };

/// P_cap -> ... -> P_0 -> target, with differentials[0] the augmentation P_0 -> target and
/// differentials[i] : P_i -> P_{i-1}. `syzygy` is the kernel of the last differential as a
/// submodule of the last term; it is zero exactly when the status is terminated.
struct Resolution {
    ModulePtr target;
    std::size_t cap = 0;
    std::vector<std::vector<ProjectiveSummand>> terms;
    std::vector<ModulePtr> modules;
    std::vector<GradedMap> differentials;
    ModulePtr syzygy;
    Matrix syzygy_inclusion; // last term dim x syzygy dim
    ResolutionStatus status = ResolutionStatus::terminated;

    /// Index of the last nonzero term, or nullopt for the zero module.
    std::optional<std::size_t> length() const;
};

Resolution minimal_resolution(const ModulePtr& m, std::size_t cap);
/// Every cover carries one redundant summand duplicating its first generator.
Resolution nonminimal_resolution(const ModulePtr& m, std::size_t cap);

/// dim Ext^i(target, n) from the degree-zero Hom complex of r, for 0 <= i <= r.cap.
std::size_t ext_dimension(const Resolution& r, const ModulePtr& n, std::size_t i);
/// All Ext dimensions 0..r.cap.
std::vector<std::size_t> ext_dimensions(const Resolution& r, const ModulePtr& n);
/// dim Ext^i(m, n); throws std::invalid_argument when i > cap.
std::size_t graded_ext(const ModulePtr& m, const ModulePtr& n, std::size_t i, std::size_t cap);

struct DimensionVerdict {
    enum class Kind { exact, at_least, infinite, zero_module };
    Kind kind = Kind::exact;
    std::uint64_t value = 0;

    static DimensionVerdict exact(std::uint64_t d) { return {Kind::exact, d}; }
    static DimensionVerdict at_least(std::uint64_t d) { return {Kind::at_least, d}; }
    static DimensionVerdict infinite() { return {Kind::infinite, 0}; }
    static DimensionVerdict zero_module() { return {Kind::zero_module, 0}; }
    bool is_exact() const { return kind == Kind::exact; }
    bool operator==(const DimensionVerdict&) const = default;
    std::string to_string() const;
};

DimensionVerdict projective_dimension(const ModulePtr& m, std::size_t cap);
/// Projective dimension of the graded dual over the opposite algebra.
DimensionVerdict graded_injective_dimension(const ModulePtr& m, std::size_t cap);

struct AcyclicityReport {
    std::vector<std::size_t> ext; // Ext^i for i = 1..cap, index 0 is i = 1
    std::optional<std::size_t> first_nonzero;
    CheckList checks;
};
/// Ext^i(phi_! m, phi_! injective) = 0 for 1 <= i <= cap over the regraded algebra.
AcyclicityReport verify_acyclicity(const ModulePtr& m, const ModulePtr& injective, const GroupMorphism& phi,
                                   std::size_t cap);

struct InequalityReport {
    DimensionVerdict source;   // id over the domain grading
    DimensionVerdict regraded; // id of phi_!(m) over the codomain grading
    ExtendedNat cd;            // cohomological dimension of ker(phi)
    CheckList checks;
};
/// id^G m <= id^G' phi_!(m) <= id^G m + cd(ker phi), deciding what the verdicts allow.
InequalityReport verify_inequality(const ModulePtr& m, const GroupMorphism& phi, std::size_t cap);

/// Ext^1(S, I) = 0 against every simple S over the shifts where the Hom complex can be nonzero.
CheckList verify_injective(const ModulePtr& injective);

} // namespace grm
