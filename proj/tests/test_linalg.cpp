#include "doctest.h"
#include "grm/matrix.hpp"

#include <random>

using namespace grm;

namespace {

Matrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, Field f, int density = 3)
{
    Matrix m(r, c, f);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            if (rng() % density == 0)
                m.set(i, j, Scalar(static_cast<long>(rng() % 11) - 5));
    return m;
}

} // namespace

TEST_CASE("field arithmetic")
{
    const Field f = Field::prime(5);
    CHECK(f.mul(f.from_int(3), f.inv(f.from_int(3))) == 1);
    CHECK(f.from_rational(mpq_class(1, 2)) == 3);
    CHECK_THROWS_AS(Field::prime(6), std::invalid_argument);
    CHECK_THROWS_AS(f.inv(Scalar(0)), std::domain_error);
}

TEST_CASE("kernel, rank and solve agree")
{
    std::mt19937_64 rng(3);
    for (const Field f : {Field::rationals(), Field::prime(3)}) {
        for (int trial = 0; trial < 40; ++trial) {
            const Matrix m = random_matrix(rng, 1 + rng() % 7, 1 + rng() % 7, f);
            const Matrix k = kernel_basis(m);
            CHECK((m * k).is_zero());
            CHECK(k.cols() + rank(m) == m.cols());
            CHECK(rank(k) == k.cols());
            Vector x(m.cols());
            for (auto& v : x)
                v = f.from_int(static_cast<long>(rng() % 7) - 3);
            const Vector b = m * x;
            const auto y = solve(m, b);
            REQUIRE(y);
            CHECK(m * *y == b);
        }
    }
    CHECK_FALSE(solve(Matrix({{1, 0}, {1, 0}}), Vector{Scalar(1), Scalar(2)}));
}

TEST_CASE("subspace coordinates")
{
    const Matrix gens({{1, 2}, {0, 1}, {1, 3}});
    const Subspace s = Subspace::span(gens);
    CHECK(s.dim() == 2);
    const Vector v = gens * Vector{Scalar(2), Scalar(-1)};
    CHECK(s.contains(v));
    CHECK(s.basis() * s.coordinates(v) == v);
    CHECK_FALSE(s.contains(Vector{Scalar(0), Scalar(0), Scalar(1)}));
}

TEST_CASE("parallel elimination matches the serial reference")
{
    std::mt19937_64 rng(11);
    for (const Field f : {Field::rationals(), Field::prime(7)}) {
        for (int trial = 0; trial < 6; ++trial) {
            const Matrix m = random_matrix(rng, 40 + rng() % 30, 40 + rng() % 30, f, 2);
            const Echelon a = kernels::row_echelon_serial(m);
            const Echelon b = kernels::row_echelon_parallel(m);
            CHECK(a.pivots == b.pivots);
            CHECK(a.reduced == b.reduced);
        }
    }
}
