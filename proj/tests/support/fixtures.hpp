#pragma once

#include "grm/algebra.hpp"
#include "grm/module.hpp"

namespace fixtures {

using namespace grm;

FgAbelianGroup Z();
FgAbelianGroup Z2();
FgAbelianGroup Zmod(std::int64_t n);

/// k[x]/(x^2) as a one-loop quiver algebra with x in the given degree.
AlgebraPtr dual_numbers(const FgAbelianGroup& g, const GroupElement& deg_x, Field f = Field::rationals());
/// k[x]/(x^2) over Z with deg x = 1.
AlgebraPtr dual_numbers_Z(Field f = Field::rationals());
/// Kronecker quiver 1 => 2, alpha of degree (1,0), beta of degree (0,1).
AlgebraPtr kronecker(Field f = Field::rationals());
/// Commutative square a:1->2, b:1->3, c:2->4, d:3->4 with c*a = d*b, graded by Z^2.
AlgebraPtr commutative_square(Field f = Field::rationals());
/// Group algebra k[Z/2] with basis {1, g} and radical spanned by 1 + g in characteristic 2.
AlgebraPtr group_algebra_z2_char2();

GroupMorphism to_zero(const FgAbelianGroup& g);
GroupMorphism sum_map(); // Z^2 -> Z
GroupMorphism z4_to_z2();

/// Module from per-generator matrices keyed by basis label of the algebra.
ModulePtr module(const AlgebraPtr& a, std::vector<GroupElement> degrees,
                 const std::vector<std::pair<std::string, std::vector<std::vector<long>>>>& action);

} // namespace fixtures
