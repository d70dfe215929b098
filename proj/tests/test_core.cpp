#include "doctest.h"
#include "fixtures.hpp"

using namespace grm;
using namespace fixtures;

TEST_CASE("quiver compilation: dimensions and labels")
{
    const auto d = dual_numbers_Z();
    CHECK(d->dim() == 2);
    CHECK(d->label(1) == "x");
    CHECK(validate(*d).ok());

    const auto k = kronecker();
    CHECK(k->dim() == 4);
    CHECK(validate(*k).ok());

    const auto sq = commutative_square();
    CHECK(sq->dim() == 9); // 4 vertices, 4 arrows, one path of length two
    CHECK(validate(*sq).ok());
    CHECK(sq->index_of("c*a"));
    CHECK_FALSE(sq->index_of("d*b")); // rewritten to c*a
}

TEST_CASE("quiver compilation: rejections")
{
    const FgAbelianGroup Zg(1);
    // no relations on a loop: infinite
    QuiverPresentation loop{Field::rationals(), Zg, {"1"}, {{"x", 0, 0, Zg.element({1})}}, {}};
    CHECK_THROWS_WITH_AS(compile_quiver(loop, 8), "possibly infinite-dimensional; raise cap or add relations",
                         std::runtime_error);
    // inhomogeneous relation x*x - x*x*x
    QuiverPresentation bad = loop;
    bad.relations.push_back({{{Scalar(1), {0, 0}}, {Scalar(-1), {0, 0, 0}}}});
    CHECK_THROWS_AS(compile_quiver(bad, 8), std::invalid_argument);
    // relation of length one is not admissible
    QuiverPresentation short_rel = loop;
    short_rel.relations.push_back({{{Scalar(1), {0}}}});
    CHECK_THROWS_AS(compile_quiver(short_rel, 8), std::invalid_argument);
    // non-composable
    const FgAbelianGroup G(2);
    QuiverPresentation kr{Field::rationals(), G, {"1", "2"}, {{"a", 0, 1, G.element({1, 0})}, {"b", 0, 1, G.element({0, 1})}}, {}};
    kr.relations.push_back({{{Scalar(1), {0, 1}}}});
    CHECK_THROWS_AS(compile_quiver(kr, 8), std::invalid_argument);
}

TEST_CASE("quiver compilation: ungraded x^2 - x^3 is caught")
{
    // degree 0 loop makes the relation homogeneous, but x^2 = x^3 forces x^2 idempotent-like
    const FgAbelianGroup triv(0);
    QuiverPresentation q{Field::rationals(), triv, {"1"}, {{"x", 0, 0, triv.zero()}}, {}};
    q.relations.push_back({{{Scalar(1), {0, 0}}, {Scalar(-1), {0, 0, 0}}}});
    CHECK_THROWS(compile_quiver(q, 8));
}

TEST_CASE("algebra validation reports the failing pair")
{
    const auto G = FgAbelianGroup(1);
    std::vector<AlgebraBasisElement> basis{{"1", G.zero()}, {"x", G.element({1})}};
    // x * x = x breaks the degree condition
    std::vector<Matrix> left{Matrix::identity(2), Matrix({{0, 0}, {1, 1}})};
    GradedAlgebra a(Field::rationals(), G, basis, left, Vector{Scalar(1), Scalar(0)});
    const auto r = validate(a);
    REQUIRE_FALSE(r.ok());
    CHECK(r.failures.front().find("(1,1)") != std::string::npos);
}

TEST_CASE("modules: regular, simple data and validation")
{
    const auto a = dual_numbers_Z();
    const auto Z1 = Z();
    const auto reg = share(GradedModule::regular(a));
    CHECK(validate(*reg).ok());
    CHECK(reg->graded_dimension() == GradedDimension{{Z1.element({0}), 1}, {Z1.element({1}), 1}});

    // x acting by a non-homogeneous matrix
    auto bad = module(a, {Z1.element({0}), Z1.element({0})}, {{"e_1", {{1, 0}, {0, 1}}}, {"x", {{0, 0}, {1, 0}}}});
    CHECK_FALSE(validate(*bad).ok());
    // x^2 != 0
    const auto k = kronecker();
    auto s = module(a, {Z1.element({0}), Z1.element({1})}, {{"e_1", {{1, 0}, {0, 1}}}, {"x", {{0, 0}, {1, 0}}}});
    CHECK(validate(*s).ok());
}

TEST_CASE("modules: hom spaces on the Kronecker algebra")
{
    const auto k = kronecker();
    const auto G = Z2();
    // P_1 = A e_1: e_1 at 0, alpha at (1,0), beta at (0,1)
    const auto p1 = share(GradedModule::regular(k)); // whole algebra = P_1 + P_2
    CHECK(validate(*p1).ok());
    const auto hom = hom_space(p1, p1);
    // End(A)_0 = A_0 acting on the right: spanned by e_1, e_2
    CHECK(hom.size() == 2);
    for (const auto& f : hom)
        CHECK(validate(f).ok());

    const auto sh = share(shift(*p1, G.element({-1, 0}))); // generators moved up to (1,0)
    CHECK(hom_dimension(sh, p1) == 1); // right multiplication by alpha
}

TEST_CASE("modules: kernel, cokernel, quotient and duals")
{
    const auto a = dual_numbers_Z();
    const auto Z1 = Z();
    const auto A = share(GradedModule::regular(a));
    // multiplication by x as a degree-one map A -> A
    GradedMap x{A, A, Z1.element({1}), a->left(1).transpose().transpose()};
    // right multiplication by x equals left multiplication in the commutative case
    CHECK(validate(x).ok());
    const auto k = kernel(x);
    CHECK(k.module.dim() == 1);
    CHECK(k.module.degree(0) == Z1.element({1}));
    const auto c = cokernel(x);
    CHECK(c.module.dim() == 1);
    CHECK(c.module.degree(0) == Z1.element({0}));
    CHECK(validate(k.module).ok());
    CHECK(validate(c.module).ok());
    CHECK(validate(c.projection).ok());
    CHECK(validate(k.inclusion).ok());

    const auto D = dual(*A);
    CHECK(validate(D).ok());
    CHECK(D.graded_dimension() == GradedDimension{{Z1.element({-1}), 1}, {Z1.element({0}), 1}});
    CHECK(dual(D, a) .degrees() == A->degrees());
}

TEST_CASE("modules: shifts and direct sums")
{
    const auto k = kronecker();
    const auto G = Z2();
    const auto A = share(GradedModule::regular(k));
    const auto s = shift(*A, G.element({1, 1}));
    CHECK(s.degree(0) == G.element({-1, -1}));
    const auto sum = direct_sum({A, share(s)});
    CHECK(validate(sum.module).ok());
    CHECK(sum.module.dim() == 8);
    CHECK(sum.projections[1] * sum.injections[1] == Matrix::identity(4));
}
