#include "grm/harness.hpp"

#include <cstdlib>

namespace grm {

namespace {

constexpr int attempt_budget = 64;

GroupElement draw(std::mt19937_64& rng, const std::vector<GroupElement>& pool) { return pool[rng() % pool.size()]; }

// random nonzero homogeneous vector, or an empty vector for the zero module
Vector homogeneous_vector(std::mt19937_64& rng, const GradedModule& m)
{
    const Field& f = m.field();
    const GroupElement d = m.degree(rng() % m.dim());
    const auto& comp = m.component(d);
    for (;;) {
        Vector local(comp.size());
        bool nonzero = false;
        for (auto& x : local) {
            x = f.from_int(static_cast<long>(rng() % 5) - 2);
            nonzero |= !Field::is_zero(x);
        }
        if (nonzero)
            return embed(m, d, local);
    }
}

GradedModule quotient_by(std::mt19937_64& rng, const GradedModule& m, std::size_t relations)
{
    std::vector<Vector> gens;
    for (std::size_t i = 0; i < relations; ++i)
        gens.push_back(homogeneous_vector(rng, m));
    return quotient(m, generated_subspace(m, gens)).module;
}

GradedModule attempt(std::mt19937_64& rng, const AlgebraPtr& a, const AlgebraPtr& op, std::size_t max_dim,
                     const std::vector<GroupElement>& shifts)
{
    const bool dualize = rng() % 2;
    const AlgebraPtr& b = dualize ? op : a;
    const std::size_t nv = b->idempotents().size();
    std::vector<ModulePtr> summands;
    const std::size_t k = 1 + rng() % 3;
    for (std::size_t i = 0; i < k; ++i)
        summands.push_back(share(indecomposable_projective(b, rng() % nv, draw(rng, shifts))));
    GradedModule m = direct_sum(summands).module;
    m = quotient_by(rng, m, rng() % (m.dim() + 1));
    while (m.dim() > max_dim)
        m = quotient_by(rng, m, 1);
    return dualize ? dual(m, a) : m;
}

} // namespace

GradedModule random_module(const AlgebraPtr& algebra, std::uint64_t seed, std::size_t max_dim,
                           std::int64_t support_radius)
{
    if (max_dim == 0)
        return GradedModule::zero(algebra);
    require_radical_data(*algebra);
    std::mt19937_64 rng(seed);
    const auto op = std::make_shared<const GradedAlgebra>(algebra->opposite());
    const auto shifts = algebra->group().box(support_radius);
    for (int i = 0; i < attempt_budget; ++i) {
        GradedModule m = attempt(rng, algebra, op, max_dim, shifts);
        if (!m.is_zero() && validate(m).ok())
            return m;
    }
    throw std::runtime_error("random_module: no valid module within " + std::to_string(attempt_budget) +
                             " attempts");
}

} // namespace grm
