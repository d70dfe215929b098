#include "grm/pid.hpp"

#include <algorithm>
#include <stdexcept>

namespace grm {

std::string PidAtom::to_string() const
{
    std::string s = kind == Kind::F ? "F" : kind == Kind::L ? "L" : "T(" + std::to_string(m) + ")";
    return shift ? s + "(" + std::to_string(shift) + ")" : s;
}

PidDimensions injective_dimensions(const PidGradedModule& m)
{
    if (m.atoms.empty())
        return {DimensionVerdict::zero_module(), DimensionVerdict::zero_module()};
    std::uint64_t graded = 0, ungraded = 0;
    for (const auto& a : m.atoms) {
        std::uint64_t g = 1, u = 1;
        switch (a.kind) {
        case PidAtom::Kind::F:
            break;
        case PidAtom::Kind::L:
            // graded field: injective among graded modules, not among all modules
            g = 0;
            break;
        case PidAtom::Kind::T:
            // 0 -> k[t]/(t^m) -> D(k[t])(m') -> D(k[t])(m'') -> 0 in both categories
            if (a.m == 0)
                throw std::invalid_argument("atom T(m) needs m >= 1");
            break;
        }
        graded = std::max(graded, g);
        ungraded = std::max(ungraded, u);
    }
    return {DimensionVerdict::exact(graded), DimensionVerdict::exact(ungraded)};
}

CheckList verify_sharpness()
{
    CheckList c;
    const ExtendedNat n = cohomological_dimension(FgAbelianGroup(1), 0);
    c.add("cd(Z) = 1", n == ExtendedNat(1), n.to_string());
    const std::uint64_t cd = n.is_finite() ? n.value() : 0;

    auto bounds = [&](const std::string& name, const PidGradedModule& m, int sharp) {
        const auto d = injective_dimensions(m);
        const auto g = d.graded.value, u = d.ungraded.value;
        const std::string vals = "id^Z = " + d.graded.to_string() + ", id = " + d.ungraded.to_string();
        c.add(name + ": id^Z <= id <= id^Z + 1", g <= u && u <= g + cd, vals);
        if (sharp < 0)
            c.add(name + ": left inequality is an equality", g == u, vals);
        if (sharp > 0)
            c.add(name + ": right inequality is an equality", u == g + cd, vals);
        return d;
    };
    const auto f = bounds("k[t]", {{{PidAtom::Kind::F, 0, 0}}}, -1);
    c.add("k[t]: values (1, 1)", f.graded == DimensionVerdict::exact(1) && f.ungraded == DimensionVerdict::exact(1));
    const auto l = bounds("k[t,t^-1]", {{{PidAtom::Kind::L, 0, 0}}}, 1);
    c.add("k[t,t^-1]: values (0, 1)",
          l.graded == DimensionVerdict::exact(0) && l.ungraded == DimensionVerdict::exact(1));
    bounds("k[t] + k[t,t^-1]", {{{PidAtom::Kind::F, 0, 0}, {PidAtom::Kind::L, 0, 0}}}, 0);
    return c;
}

} // namespace grm
