#include "fixtures.hpp"

#include <stdexcept>

namespace fixtures {

FgAbelianGroup Z() { return FgAbelianGroup(1); }
FgAbelianGroup Z2() { return FgAbelianGroup(2); }
FgAbelianGroup Zmod(std::int64_t n) { return FgAbelianGroup(0, {n}); }

AlgebraPtr dual_numbers(const FgAbelianGroup& g, const GroupElement& deg_x, Field f)
{
    QuiverPresentation q{f, g, {"1"}, {{"x", 0, 0, deg_x}}, {}};
    q.relations.push_back({{{Scalar(1), {0, 0}}}});
    return std::make_shared<const GradedAlgebra>(compile_quiver(q, 16));
}

AlgebraPtr dual_numbers_Z(Field f) { return dual_numbers(Z(), Z().element({1}), f); }

AlgebraPtr kronecker(Field f)
{
    const auto G = Z2();
    QuiverPresentation q{f, G, {"1", "2"}, {{"alpha", 0, 1, G.element({1, 0})}, {"beta", 0, 1, G.element({0, 1})}}, {}};
    return std::make_shared<const GradedAlgebra>(compile_quiver(q, 16));
}

AlgebraPtr commutative_square(Field f)
{
    const auto G = Z2();
    QuiverPresentation q{f,
                         G,
                         {"1", "2", "3", "4"},
                         {{"a", 0, 1, G.element({1, 0})},
                          {"b", 0, 2, G.element({0, 1})},
                          {"c", 1, 3, G.element({0, 1})},
                          {"d", 2, 3, G.element({1, 0})}},
                         {}};
    // c*a - d*b
    q.relations.push_back({{{Scalar(1), {2, 0}}, {Scalar(-1), {3, 1}}}});
    return std::make_shared<const GradedAlgebra>(compile_quiver(q, 16));
}

AlgebraPtr group_algebra_z2_char2()
{
    // basis {1, u} with u = 1 + g, u^2 = 0: the group algebra in characteristic 2 is k[u]/(u^2)
    const Field f = Field::prime(2);
    const auto G = FgAbelianGroup(0);
    std::vector<AlgebraBasisElement> basis{{"1", G.zero()}, {"u", G.zero()}};
    std::vector<Matrix> left{Matrix::identity(2, f), Matrix({{0, 0}, {1, 0}}, f)};
    GradedAlgebra a(f, G, basis, left, Vector{Scalar(1), Scalar(0)});
    a.set_radical({1});
    a.set_idempotents({0});
    return std::make_shared<const GradedAlgebra>(std::move(a));
}

GroupMorphism to_zero(const FgAbelianGroup& g) { return GroupMorphism::zero(g, FgAbelianGroup(0)); }

GroupMorphism sum_map() { return GroupMorphism(Z2(), Z(), {{1, 1}}); }

GroupMorphism z4_to_z2() { return GroupMorphism(Zmod(4), Zmod(2), {{1}}); }

ModulePtr module(const AlgebraPtr& a, std::vector<GroupElement> degrees,
                 const std::vector<std::pair<std::string, std::vector<std::vector<long>>>>& action)
{
    std::map<std::size_t, Matrix> gens;
    for (const auto& [label, rows] : action) {
        auto idx = a->index_of(label);
        if (!idx)
            throw std::invalid_argument("no basis element " + label);
        gens.emplace(*idx, Matrix(rows, a->field()));
    }
    return share(GradedModule::from_generator_action(a, std::move(degrees), gens));
}

} // namespace fixtures
