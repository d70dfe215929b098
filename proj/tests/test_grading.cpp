#include "doctest.h"
#include "grm/group.hpp"

#include <random>

using namespace grm;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c)
{
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            m(i, j) = static_cast<long>(rng() % 41) - 20;
    return m;
}

bool unimodular(const IntMatrix& m)
{
    const mpz_class d = determinant(m);
    return d == 1 || d == -1;
}

// product of the first k diagonal entries equals the gcd of all k x k minors
mpz_class minors_gcd(const IntMatrix& m, std::size_t k)
{
    mpz_class g = 0;
    std::vector<std::size_t> rows(k), cols(k);
    std::function<void(std::size_t, std::size_t)> pick_cols;
    std::function<void(std::size_t, std::size_t)> pick_rows = [&](std::size_t at, std::size_t from) {
        if (at == k) {
            pick_cols(0, 0);
            return;
        }
        for (std::size_t r = from; r < m.rows(); ++r) {
            rows[at] = r;
            pick_rows(at + 1, r + 1);
        }
    };
    pick_cols = [&](std::size_t at, std::size_t from) {
        if (at == k) {
            IntMatrix sub(k, k);
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j)
                    sub(i, j) = m(rows[i], cols[j]);
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), mpz_class(abs(determinant(sub))).get_mpz_t());
            return;
        }
        for (std::size_t c = from; c < m.cols(); ++c) {
            cols[at] = c;
            pick_cols(at + 1, c + 1);
        }
    };
    pick_rows(0, 0);
    return g;
}

} // namespace

TEST_CASE("smith form: identities on random matrices")
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
        const IntMatrix m = random_matrix(rng, r, c);
        const SmithForm s = smith_normal_form(m);
        CHECK(s.U * m * s.V == s.D);
        CHECK(s.U * s.U_inv == IntMatrix::identity(r));
        CHECK(s.V * s.V_inv == IntMatrix::identity(c));
        CHECK(unimodular(s.U));
        CHECK(unimodular(s.V));
        const auto d = s.diagonal();
        for (std::size_t i = 0; i + 1 < d.size(); ++i)
            if (d[i + 1] != 0)
                CHECK(d[i + 1] % d[i] == 0);
        mpz_class prod = 1;
        for (std::size_t k = 1; k <= std::min(r, c) && k <= 3; ++k) {
            prod *= d[k - 1];
            CHECK(prod == minors_gcd(m, k));
        }
    }
}

TEST_CASE("smith form: small known cases")
{
    const SmithForm s = smith_normal_form(IntMatrix(2, 2, {{2, 4}, {6, 8}}));
    CHECK(s.diagonal() == std::vector<mpz_class>{2, 4});
    CHECK(smith_normal_form(IntMatrix(2, 3)).rank() == 0);
    CHECK(determinant(IntMatrix(3, 3, {{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}})) == 4);
}

TEST_CASE("groups: canonical form and arithmetic")
{
    CHECK_THROWS_AS(FgAbelianGroup(0, {4, 2}), std::invalid_argument);
    const auto p = FgAbelianGroup::canonicalize(1, {2, 3});
    CHECK(p.group == FgAbelianGroup(1, {6}));
    const FgAbelianGroup z4(0, {4});
    CHECK(z4.add(z4.element({3}), z4.element({2})) == z4.element({1}));
    CHECK(z4.order() == 4);
    CHECK(z4.elements().size() == 4);
    CHECK(FgAbelianGroup(2).box(1).size() == 9);
}

TEST_CASE("groups: morphisms, kernels and fibers")
{
    const FgAbelianGroup z(1), z2(2), z4(0, {4}), zmod2(0, {2});
    CHECK_THROWS_AS(GroupMorphism(zmod2, z, {{1}}), std::invalid_argument);
    const GroupMorphism sum(z2, z, {{1, 1}});
    const GroupKernel k = kernel(sum);
    CHECK(k.group == FgAbelianGroup(1));
    const auto gen = k.inclusion(k.group.generator(0));
    CHECK(sum(gen) == z.zero());
    CHECK((gen == z2.element({1, -1}) || gen == z2.element({-1, 1})));
    CHECK_THROWS_AS(fiber_elements(sum, z.element({0})), std::domain_error);

    const GroupMorphism red(z4, zmod2, {{1}});
    const GroupKernel kr = kernel(red);
    CHECK(kr.group == zmod2);
    const auto fib = fiber_elements(red, zmod2.element({1}));
    CHECK(fib == std::vector<GroupElement>{z4.element({1}), z4.element({3})});
    CHECK(kernel_window(kernel(GroupMorphism::zero(z, FgAbelianGroup(0))), 2).size() == 5);
    auto pre = preimage(sum, z.element({5}));
    REQUIRE(pre);
    CHECK(sum(*pre) == z.element({5}));
}

TEST_CASE("cohomological dimension")
{
    CHECK(cohomological_dimension(FgAbelianGroup(0), 0) == ExtendedNat(0));
    CHECK(cohomological_dimension(FgAbelianGroup(2), 0) == ExtendedNat(2));
    CHECK(cohomological_dimension(FgAbelianGroup(0, {2}), 2).is_infinite());
    CHECK(cohomological_dimension(FgAbelianGroup(0, {2}), 3) == ExtendedNat(0));
    CHECK(cohomological_dimension(FgAbelianGroup(1, {2, 6}), 3).is_infinite());
    CHECK(ExtendedNat(1) + ExtendedNat::infinity() == ExtendedNat::infinity());
}
