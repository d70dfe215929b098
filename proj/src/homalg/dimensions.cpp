#include "grm/homalg.hpp"
#include "grm/regrade.hpp"

#include <set>
#include <stdexcept>

namespace grm {

std::string DimensionVerdict::to_string() const
{
    switch (kind) {
    case Kind::exact:
        return "exact(" + std::to_string(value) + ")";
    case Kind::at_least:
        return "at_least(" + std::to_string(value) + ")";
    case Kind::infinite:
        return "infinite";
    case Kind::zero_module:
        return "zero module";
    }
    return "?";
}

DimensionVerdict projective_dimension(const ModulePtr& m, std::size_t cap)
{
    if (m->is_zero())
        return DimensionVerdict::zero_module();
    const Resolution r = minimal_resolution(m, cap);
    if (r.status == ResolutionStatus::terminated)
        return DimensionVerdict::exact(*r.length());
    return DimensionVerdict::at_least(cap);
}

DimensionVerdict graded_injective_dimension(const ModulePtr& m, std::size_t cap)
{
    auto op = std::make_shared<const GradedAlgebra>(m->algebra()->opposite());
    return projective_dimension(share(dual(*m, op)), cap);
}

AcyclicityReport verify_acyclicity(const ModulePtr& m, const ModulePtr& injective, const GroupMorphism& phi,
                                   std::size_t cap)
{
    const AlgebraPtr pushed = pushforward(m->algebra(), phi);
    auto pm = share(pushforward(*m, phi, pushed));
    auto pi = share(pushforward(*injective, phi, pushed));
    AcyclicityReport out;
    const Resolution r = minimal_resolution(pm, cap);
    for (std::size_t i = 1; i <= cap; ++i) {
        out.ext.push_back(ext_dimension(r, pi, i));
        if (out.ext.back() != 0 && !out.first_nonzero)
            out.first_nonzero = i;
    }
    out.checks.add("Ext^i(phi_! M, phi_! I) = 0 for 1 <= i <= " + std::to_string(cap), !out.first_nonzero,
                   out.first_nonzero ? "Ext^" + std::to_string(*out.first_nonzero) + " has dimension " +
                                           std::to_string(out.ext[*out.first_nonzero - 1])
                                     : "");
    return out;
}

namespace {

// a <= b given what the verdicts certify; nullopt when undecidable
std::optional<bool> certified_leq(const DimensionVerdict& a, const DimensionVerdict& b, const ExtendedNat& plus)
{
    using K = DimensionVerdict::Kind;
    const bool inf = plus.is_infinite();
    const std::uint64_t n = inf ? 0 : plus.value();
    if (a.kind == K::zero_module || b.kind == K::zero_module)
        return a.kind == b.kind;
    if (inf)
        return true;
    if (a.kind == K::exact && b.kind == K::exact)
        return a.value <= b.value + n;
    if (a.kind == K::exact && b.kind == K::at_least)
        return a.value <= b.value + n ? std::optional<bool>(true) : std::nullopt;
    if (a.kind == K::at_least && b.kind == K::exact)
        return a.value > b.value + n ? std::optional<bool>(false) : std::nullopt;
    return std::nullopt;
}

void record(CheckList& c, const std::string& name, std::optional<bool> v, const std::string& what)
{
    if (v)
        c.add(name, *v, what);
    else
        c.inconclusive(name, what + "; truncated resolution decides neither way");
}

} // namespace

InequalityReport verify_inequality(const ModulePtr& m, const GroupMorphism& phi, std::size_t cap)
{
    InequalityReport out;
    out.cd = cohomological_dimension(kernel(phi).group, m->field().characteristic());
    out.source = graded_injective_dimension(m, cap);
    out.regraded = graded_injective_dimension(share(pushforward(*m, phi)), cap);
    const std::string values = "id_G = " + out.source.to_string() + ", id_G' = " + out.regraded.to_string() +
                               ", n = " + out.cd.to_string();
    record(out.checks, "id_G(M) <= id_G'(phi_! M)", certified_leq(out.source, out.regraded, ExtendedNat(0)), values);
    record(out.checks, "id_G'(phi_! M) <= id_G(M) + n", certified_leq(out.regraded, out.source, out.cd), values);
    return out;
}

CheckList verify_injective(const ModulePtr& injective)
{
    const AlgebraPtr& a = injective->algebra();
    const auto& G = injective->group();
    CheckList c;
    std::size_t tested = 0, failures = 0;
    std::string first;
    for (std::size_t w = 0; w < a->idempotents().size(); ++w) {
        auto s = share(simple_module(a, w, G.zero()));
        const Resolution r = minimal_resolution(s, 1);
        if (r.terms.size() < 2)
            continue;
        std::set<GroupElement> shifts;
        for (const auto& p : r.terms[1])
            for (const auto& d : injective->support())
                shifts.insert(G.add(d, p.shift)); // generator at -shift lands on d after moving by d + shift
        for (const auto& g : shifts) {
            ++tested;
            const std::size_t e = ext_dimension(r, share(shift(*injective, g)), 1);
            if (e != 0 && !failures++)
                first = "Ext^1(S_" + std::to_string(w) + "(" + g.to_string() + "), I) = " + std::to_string(e);
        }
    }
    c.add("Ext^1(S, I) = 0 for every simple S", failures == 0,
          failures ? first : std::to_string(tested) + " shifted simples tested");
    return c;
}

} // namespace grm
