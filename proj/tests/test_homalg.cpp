#include "doctest.h"
#include "fixtures.hpp"
#include "grm/homalg.hpp"
#include "grm/regrade.hpp"

#include <random>

using namespace grm;
using namespace fixtures;

namespace {

GroupElement z(long v) { return Z().element({v}); }
GroupElement z2(long a, long b) { return Z2().element({a, b}); }

// random Kronecker representation: spaces at vertices 1, 2 in degrees of a small box
ModulePtr random_kronecker(std::mt19937_64& rng, const AlgebraPtr& k)
{
    const auto G = Z2();
    std::vector<GroupElement> degrees;
    std::vector<std::size_t> vertex;
    for (long a = 0; a <= 1; ++a)
        for (long b = 0; b <= 1; ++b)
            for (std::size_t v = 0; v < 2; ++v)
                for (std::size_t c = rng() % 2; c > 0; --c) {
                    degrees.push_back(G.element({a, b}));
                    vertex.push_back(v);
                }
    const std::size_t n = degrees.size();
    std::vector<std::vector<long>> e1(n, std::vector<long>(n)), e2 = e1, al = e1, be = e1;
    for (std::size_t i = 0; i < n; ++i)
        (vertex[i] == 0 ? e1 : e2)[i][i] = 1;
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            if (vertex[c] != 0 || vertex[r] != 1)
                continue;
            if (degrees[r] == G.add(degrees[c], G.element({1, 0})))
                al[r][c] = static_cast<long>(rng() % 5) - 2;
            if (degrees[r] == G.add(degrees[c], G.element({0, 1})))
                be[r][c] = static_cast<long>(rng() % 5) - 2;
        }
    return module(k, degrees, {{"e_1", e1}, {"e_2", e2}, {"alpha", al}, {"beta", be}});
}

// graded Euler form of the Kronecker quiver
long euler_form(const GradedModule& m, const GradedModule& n)
{
    const auto& a = *m.algebra();
    const auto& G = m.group();
    auto vdim = [&](const GradedModule& x, std::size_t v, const GroupElement& g) {
        if (!x.component_dim(g))
            return 0L;
        return static_cast<long>(rank(x.block(a.idempotents()[v], g)));
    };
    long total = 0;
    for (const auto& g : m.support()) {
        for (std::size_t v = 0; v < 2; ++v)
            total += vdim(m, v, g) * vdim(n, v, g);
        total -= vdim(m, 0, g) * vdim(n, 1, G.add(g, G.element({1, 0})));
        total -= vdim(m, 0, g) * vdim(n, 1, G.add(g, G.element({0, 1})));
    }
    return total;
}

bool differentials_in_radical(const Resolution& r)
{
    const auto& a = *r.target->algebra();
    for (std::size_t i = 1; i < r.differentials.size(); ++i) {
        const auto& m = r.differentials[i].matrix;
        // rows that are generators (idempotent basis positions) of the previous term
        std::size_t off = 0;
        for (const auto& s : r.terms[i - 1]) {
            const auto basis = projective_basis(a, s.vertex);
            for (std::size_t j = 0; j < basis.size(); ++j)
                if (basis[j] == a.idempotents()[s.vertex])
                    for (std::size_t c = 0; c < m.cols(); ++c)
                        if (!Field::is_zero(m(off + j, c)))
                            return false;
            off += basis.size();
        }
    }
    return true;
}

bool complex_closes(const Resolution& r)
{
    for (std::size_t i = 1; i < r.differentials.size(); ++i)
        if (!(r.differentials[i - 1].matrix * r.differentials[i].matrix).is_zero())
            return false;
    return true;
}

} // namespace

TEST_CASE("top and radical")
{
    const auto a = dual_numbers_Z();
    const auto A = GradedModule::regular(a);
    const auto t = top_and_radical(A);
    CHECK(t.top.dim() == 1);
    CHECK(t.top.degree(0) == z(0));
    CHECK(t.radical.dim() == 1);
    const auto s = simple_module(a, 0, z(0));
    CHECK(top_and_radical(s).top.dim() == 1);
    CHECK(top_and_radical(GradedModule::zero(a)).top.dim() == 0);
}

TEST_CASE("minimal resolution of the simple over k[x]/(x^2)")
{
    const auto a = dual_numbers_Z();
    const auto s = share(simple_module(a, 0, z(0)));
    const Resolution r = minimal_resolution(s, 5);
    CHECK(r.status == ResolutionStatus::truncated);
    REQUIRE(r.terms.size() == 6);
    for (std::size_t i = 0; i < 6; ++i) {
        REQUIRE(r.terms[i].size() == 1);
        CHECK(r.terms[i][0].shift == z(-static_cast<long>(i)));
    }
    CHECK(complex_closes(r));
    CHECK(differentials_in_radical(r));
    CHECK(projective_dimension(s, 5) == DimensionVerdict::at_least(5));
}

TEST_CASE("minimal resolution of S_1 over the Kronecker algebra")
{
    const auto k = kronecker();
    const auto s1 = share(simple_module(k, 0, z2(0, 0)));
    const Resolution r = minimal_resolution(s1, 4);
    CHECK(r.status == ResolutionStatus::terminated);
    REQUIRE(r.length() == std::optional<std::size_t>(1));
    std::vector<ProjectiveSummand> expect{{1, z2(-1, 0)}, {1, z2(0, -1)}};
    auto got = r.terms[1];
    std::sort(got.begin(), got.end(), [](auto& x, auto& y) { return x.shift > y.shift; });
    std::sort(expect.begin(), expect.end(), [](auto& x, auto& y) { return x.shift > y.shift; });
    CHECK(got == expect);
    CHECK(projective_dimension(s1, 4) == DimensionVerdict::exact(1));
    CHECK(projective_dimension(share(indecomposable_projective(k, 0, z2(2, 3))), 4) == DimensionVerdict::exact(0));
}

TEST_CASE("Ext over k[x]/(x^2)")
{
    const auto a = dual_numbers_Z();
    const auto s = share(simple_module(a, 0, z(0)));
    const auto s1 = share(shift(*s, z(-1)));
    CHECK(graded_ext(s, s1, 1, 4) == 1);
    CHECK(graded_ext(s, s, 1, 4) == 0);
    CHECK(graded_ext(s, s, 0, 4) == hom_dimension(s, s));
    // Ext^i(S, S(-i)) = 1 along the diagonal
    const Resolution r = minimal_resolution(s, 6);
    for (std::size_t i = 0; i <= 6; ++i)
        CHECK(ext_dimension(r, share(shift(*s, z(-static_cast<long>(i)))), i) == 1);
    const auto p = share(GradedModule::regular(a));
    CHECK(graded_ext(p, s1, 1, 3) == 0);
    CHECK_THROWS_AS(graded_ext(s, s, 5, 4), std::invalid_argument);
}

TEST_CASE("Ext on the Kronecker algebra matches the Euler form")
{
    std::mt19937_64 rng(17);
    const auto k = kronecker();
    for (int trial = 0; trial < 25; ++trial) {
        const auto m = random_kronecker(rng, k);
        const auto n = random_kronecker(rng, k);
        REQUIRE(validate(*m).ok());
        const Resolution r = minimal_resolution(m, 3);
        CHECK(r.status == ResolutionStatus::terminated);
        const auto e = ext_dimensions(r, n);
        CHECK(e[0] == hom_dimension(m, n));
        CHECK(static_cast<long>(e[0]) - static_cast<long>(e[1]) == euler_form(*m, *n));
        CHECK(e[2] == 0);
        CHECK(complex_closes(r));
        CHECK(differentials_in_radical(r));
    }
}

TEST_CASE("Ext does not depend on the resolution")
{
    std::mt19937_64 rng(23);
    const auto k = kronecker();
    const auto a = dual_numbers_Z();
    const auto s = share(simple_module(a, 0, z(0)));
    for (int trial = 0; trial < 8; ++trial) {
        const auto m = random_kronecker(rng, k);
        const auto n = random_kronecker(rng, k);
        const Resolution r1 = minimal_resolution(m, 3);
        const Resolution r2 = nonminimal_resolution(m, 3);
        CHECK(complex_closes(r2));
        CHECK(ext_dimensions(r1, n) == ext_dimensions(r2, n));
    }
    for (long d = -1; d <= 4; ++d) {
        const auto t = share(shift(*s, z(d)));
        CHECK(ext_dimensions(minimal_resolution(s, 4), t) == ext_dimensions(nonminimal_resolution(s, 4), t));
    }
}

TEST_CASE("Ext is invariant under simultaneous shifts")
{
    std::mt19937_64 rng(29);
    const auto k = kronecker();
    for (int trial = 0; trial < 6; ++trial) {
        const auto m = random_kronecker(rng, k);
        const auto n = random_kronecker(rng, k);
        const auto g = z2(static_cast<long>(rng() % 5) - 2, static_cast<long>(rng() % 5) - 2);
        CHECK(ext_dimensions(minimal_resolution(m, 2), n) ==
              ext_dimensions(minimal_resolution(share(shift(*m, g)), 2), share(shift(*n, g))));
    }
}

TEST_CASE("injective dimension and injectives")
{
    const auto a = dual_numbers_Z();
    const auto A = share(GradedModule::regular(a));
    CHECK(graded_injective_dimension(A, 5) == DimensionVerdict::exact(0));

    const auto inj = indecomposable_injectives(a);
    REQUIRE(inj.size() == 1);
    // D(A) is A(1): generator of the socle sits in degree 0, top in degree -1
    CHECK(inj[0].graded_dimension() == GradedDimension{{z(-1), 1}, {z(0), 1}});
    CHECK(verify_injective(share(inj[0])).passed());

    const auto k = kronecker();
    const auto ki = indecomposable_injectives(k);
    REQUIRE(ki.size() == 2);
    CHECK(ki[0].dim() == 1);
    CHECK(ki[1].dim() == 3);
    for (const auto& i : ki) {
        CHECK(validate(i).ok());
        CHECK(verify_injective(share(i)).passed());
        CHECK(graded_injective_dimension(share(i), 4) == DimensionVerdict::exact(0));
    }
    CHECK(graded_injective_dimension(share(simple_module(k, 1, z2(0, 0))), 4) == DimensionVerdict::exact(1));
    CHECK(graded_injective_dimension(share(simple_module(k, 0, z2(0, 0))), 4) == DimensionVerdict::exact(0));
    // the simple over k[x]/(x^2) is not injective
    CHECK_FALSE(verify_injective(share(simple_module(a, 0, z(0)))).passed());
}

TEST_CASE("acyclicity and the inequality on fixtures")
{
    const auto a = dual_numbers_Z();
    const auto s = share(simple_module(a, 0, z(0)));
    const auto i = share(indecomposable_injectives(a)[0]);
    const auto rep = verify_acyclicity(s, i, to_zero(Z()), 6);
    CHECK(rep.checks.passed());
    CHECK(rep.ext == std::vector<std::size_t>(6, 0));

    const auto A = share(GradedModule::regular(a));
    const auto ineq = verify_inequality(A, to_zero(Z()), 6);
    CHECK(ineq.source == DimensionVerdict::exact(0));
    CHECK(ineq.regraded == DimensionVerdict::exact(0));
    CHECK(ineq.cd == ExtendedNat(1));
    CHECK(ineq.checks.passed());
    CHECK(ineq.checks.count(Outcome::inconclusive) == 0);

    const auto sq = verify_inequality(s, to_zero(Z()), 4);
    CHECK(sq.source == DimensionVerdict::at_least(4));
    CHECK(sq.checks.passed());
    CHECK(sq.checks.count(Outcome::inconclusive) == 2);

    const auto k = kronecker();
    const auto ks = share(simple_module(k, 1, z2(0, 0)));
    const auto kr = verify_inequality(ks, sum_map(), 4);
    CHECK(kr.checks.passed());
    CHECK(kr.source == kr.regraded);
}

TEST_CASE("radical data is required")
{
    const auto G = FgAbelianGroup(0);
    std::vector<AlgebraBasisElement> basis{{"1", G.zero()}};
    auto raw = std::make_shared<const GradedAlgebra>(Field::rationals(), G, basis, std::vector<Matrix>{Matrix::identity(1)},
                                                     Vector{Scalar(1)});
    CHECK_THROWS_WITH_AS(minimal_resolution(share(GradedModule::regular(raw)), 2),
                         doctest::Contains("radical data"), std::invalid_argument);
}
