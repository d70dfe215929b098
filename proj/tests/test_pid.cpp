#include "doctest.h"
#include "grm/pid.hpp"

using namespace grm;

namespace {

PidDimensions dims(std::vector<PidAtom> atoms) { return injective_dimensions({std::move(atoms)}); }

constexpr auto F = PidAtom::Kind::F;
constexpr auto L = PidAtom::Kind::L;
constexpr auto T = PidAtom::Kind::T;

} // namespace

TEST_CASE("sharp examples over k[t]")
{
    const auto f = dims({{F, 0, 0}});
    CHECK(f.graded == DimensionVerdict::exact(1));
    CHECK(f.ungraded == DimensionVerdict::exact(1));
    const auto l = dims({{L, 0, 0}});
    CHECK(l.graded == DimensionVerdict::exact(0));
    CHECK(l.ungraded == DimensionVerdict::exact(1));
    const CheckList c = verify_sharpness();
    CHECK(c.passed());
    CHECK(c.count(Outcome::pass) == c.checks.size());
}

TEST_CASE("torsion atoms, shifts and sums")
{
    for (std::uint32_t m = 1; m <= 4; ++m)
        for (std::int64_t s = -3; s <= 3; ++s) {
            const auto t = dims({{T, m, s}});
            CHECK(t.graded == DimensionVerdict::exact(1));
            CHECK(t.ungraded == DimensionVerdict::exact(1));
        }
    CHECK(dims({{L, 0, 5}}).graded == dims({{L, 0, -2}}).graded);
    const auto sum = dims({{L, 0, 0}, {L, 0, 3}});
    CHECK(sum.graded == DimensionVerdict::exact(0));
    CHECK(dims({{L, 0, 0}, {T, 2, 1}}).graded == DimensionVerdict::exact(1));
    CHECK(dims({}).graded == DimensionVerdict::zero_module());
    CHECK_THROWS_AS(dims({{T, 0, 0}}), std::invalid_argument);
}

TEST_CASE("every atom combination satisfies graded <= ungraded <= graded + 1")
{
    const std::vector<PidAtom> atoms{{F, 0, 0}, {L, 0, 1}, {T, 1, 0}, {T, 3, -2}};
    for (unsigned mask = 1; mask < 16; ++mask) {
        std::vector<PidAtom> pick;
        for (unsigned i = 0; i < 4; ++i)
            if (mask & (1u << i))
                pick.push_back(atoms[i]);
        const auto d = dims(pick);
        CHECK(d.graded.value <= d.ungraded.value);
        CHECK(d.ungraded.value <= d.graded.value + 1);
    }
}
