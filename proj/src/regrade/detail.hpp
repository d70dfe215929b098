#pragma once

#include "grm/regrade.hpp"

#include <map>

namespace grm::detail {

void check_domain(const GradedModule& m, const GroupMorphism& phi);
void check_codomain(const GradedModule& n, const GroupMorphism& phi);
void check_pushed(const GradedAlgebra& a, const GroupMorphism& phi, const GradedAlgebra& pushed);

// basis of phi^*(n): pairs (i, g), g over the fiber of deg(i)
struct PulledBasis {
    std::vector<std::pair<std::size_t, GroupElement>> pairs;
    std::map<std::pair<std::size_t, GroupElement>, std::size_t> index;

    std::size_t at(std::size_t i, const GroupElement& g) const { return index.at({i, g}); }
};
PulledBasis pulled_basis(const GradedModule& n, const GroupMorphism& phi);

GroupKernel finite_kernel(const GroupMorphism& phi, const char* what);
std::vector<GroupElement> kernel_elements(const GroupKernel& k);

bool full_rank_square(const Matrix& m);
CheckList bijective_degreewise(const GradedMap& f);

} // namespace grm::detail
