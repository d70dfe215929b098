#include "grm/homalg.hpp"

#include <set>
#include <stdexcept>

namespace grm {

namespace {

Vector unit_vector(std::size_t n, std::size_t i)
{
    Vector v(n);
    v[i] = 1;
    return v;
}

struct Generator {
    std::size_t vertex;
    GroupElement degree;
    Vector local; // in the component of that degree
};

// Lifts of a basis of the top of x, vertex by vertex within each degree.
std::vector<Generator> top_generators(const GradedModule& x)
{
    const auto& a = *x.algebra();
    const auto& rad = *a.radical();
    std::vector<Generator> gens;
    for (const auto& g : x.support()) {
        const std::size_t dim = x.component_dim(g);
        std::vector<Vector> span;
        for (auto r : rad) {
            const GroupElement from = x.group().sub(g, a.degree(r));
            if (!x.component_dim(from))
                continue;
            const Matrix blk = x.block(r, from);
            for (std::size_t c = 0; c < blk.cols(); ++c)
                span.push_back(blk.col(c));
        }
        Matrix acc(dim, span.size(), x.field());
        for (std::size_t c = 0; c < span.size(); ++c)
            acc.set_col(c, span[c]);
        std::size_t have = rank(acc);
        for (std::size_t v = 0; v < a.idempotents().size() && have < dim; ++v) {
            const Matrix ev = x.block(a.idempotents()[v], g);
            for (std::size_t c = 0; c < ev.cols() && have < dim; ++c) {
                const Vector col = ev.col(c);
                Matrix trial = Matrix::hstack(acc, Matrix::column(col, x.field()));
                const std::size_t rk = rank(trial);
                if (rk > have) {
                    have = rk;
                    acc = std::move(trial);
                    gens.push_back({v, g, col});
                }
            }
        }
    }
    return gens;
}

struct Cover {
    std::vector<ProjectiveSummand> summands;
    ModulePtr module;
    Matrix map; // x.dim() x module.dim()
};

Cover projective_cover(const GradedModule& x, bool redundant)
{
    const AlgebraPtr& alg = x.algebra();
    std::vector<Generator> gens = top_generators(x);
    if (redundant && !gens.empty())
        gens.push_back(gens.front());
    Cover c;
    std::vector<ModulePtr> parts;
    for (const auto& g : gens) {
        const GroupElement s = x.group().neg(g.degree);
        c.summands.push_back({g.vertex, s});
        parts.push_back(share(indecomposable_projective(alg, g.vertex, s)));
    }
    if (parts.empty()) {
        c.module = share(GradedModule::zero(alg));
        c.map = Matrix(x.dim(), 0, x.field());
        return c;
    }
    DirectSum sum = direct_sum(parts);
    c.module = share(std::move(sum.module));
    c.map = Matrix(x.dim(), c.module->dim(), x.field());
    std::size_t off = 0;
    for (std::size_t t = 0; t < gens.size(); ++t) {
        const Vector xv = embed(x, gens[t].degree, gens[t].local);
        const auto basis = projective_basis(*alg, gens[t].vertex);
        for (std::size_t j = 0; j < basis.size(); ++j)
            c.map.set_col(off + j, x.action(basis[j]) * xv);
        off += basis.size();
    }
    return c;
}

Resolution resolve(const ModulePtr& m, std::size_t cap, bool redundant)
{
    require_radical_data(*m->algebra());
    Resolution r;
    r.target = m;
    r.cap = cap;
    const auto& G = m->group();

    ModulePtr current = m;
    Matrix incl = Matrix::identity(m->dim(), m->field());
    ModulePtr previous = m;
    for (std::size_t i = 0;; ++i) {
        Cover c = projective_cover(*current, redundant);
        GradedMap d{c.module, previous, G.zero(), incl * c.map};
        GradedMap cover_map{c.module, current, G.zero(), c.map};
        KernelResult k = kernel(cover_map);
        r.terms.push_back(std::move(c.summands));
        r.modules.push_back(c.module);
        r.differentials.push_back(std::move(d));
        r.syzygy = share(std::move(k.module));
        r.syzygy_inclusion = k.inclusion.matrix;
        if (r.syzygy->is_zero()) {
            r.status = ResolutionStatus::terminated;
            break;
        }
        if (i == cap) {
            r.status = ResolutionStatus::truncated;
            break;
        }
        previous = c.module;
        current = r.syzygy;
        incl = r.syzygy_inclusion;
    }
    return r;
}

// Layout of a projective term: where each summand starts and its basis of A e_v.
struct TermLayout {
    std::vector<std::size_t> offsets;
    std::vector<std::vector<std::size_t>> bases;
    std::vector<std::size_t> generators; // position of e_v in each summand
};

TermLayout layout(const GradedAlgebra& a, const std::vector<ProjectiveSummand>& term)
{
    TermLayout l;
    std::size_t off = 0;
    for (const auto& s : term) {
        auto basis = projective_basis(a, s.vertex);
        const std::size_t ev = a.idempotents()[s.vertex];
        std::size_t gpos = 0;
        for (std::size_t j = 0; j < basis.size(); ++j)
            if (basis[j] == ev)
                gpos = j;
        l.offsets.push_back(off);
        l.generators.push_back(off + gpos);
        off += basis.size();
        l.bases.push_back(std::move(basis));
    }
    return l;
}

// Hom(P, N)_0 = sum over summands of e_v N_{-s}; cochain coordinates are stacked per summand.
struct Cochains {
    TermLayout layout;
    std::vector<Matrix> embedded; // N.dim() x dim(e_v N_{-s})
    std::vector<Subspace> local;  // inside N_{-s}
    std::vector<std::size_t> offsets;
    std::size_t dim = 0;
};

Cochains cochains(const GradedAlgebra& a, const std::vector<ProjectiveSummand>& term, const GradedModule& n)
{
    Cochains c;
    c.layout = layout(a, term);
    for (const auto& s : term) {
        const GroupElement d = n.group().neg(s.shift);
        const auto& idx = n.component(d);
        Subspace sub(idx.size(), n.field());
        if (!idx.empty())
            sub = Subspace::span(n.block(a.idempotents()[s.vertex], d));
        Matrix emb(n.dim(), sub.dim(), n.field());
        for (std::size_t col = 0; col < sub.dim(); ++col)
            for (std::size_t r = 0; r < idx.size(); ++r)
                emb(idx[r], col) = sub.basis()(r, col);
        c.offsets.push_back(c.dim);
        c.dim += sub.dim();
        c.embedded.push_back(std::move(emb));
        c.local.push_back(std::move(sub));
    }
    return c;
}

// N.dim() x c.dim: cochain f |-> f(y) for an element y of the projective term
Matrix evaluation(const Cochains& c, const GradedModule& n, const Vector& y)
{
    Matrix out(n.dim(), c.dim, n.field());
    for (std::size_t t = 0; t < c.embedded.size(); ++t) {
        if (c.local[t].dim() == 0)
            continue;
        Matrix acc(n.dim(), n.dim(), n.field());
        bool any = false;
        const auto& basis = c.layout.bases[t];
        for (std::size_t j = 0; j < basis.size(); ++j) {
            const Scalar& coef = y[c.layout.offsets[t] + j];
            if (Field::is_zero(coef))
                continue;
            acc = acc + n.action(basis[j]).scaled(coef);
            any = true;
        }
        if (!any)
            continue;
        const Matrix block = acc * c.embedded[t];
        for (std::size_t r = 0; r < block.rows(); ++r)
            for (std::size_t col = 0; col < block.cols(); ++col)
                out(r, c.offsets[t] + col) = block(r, col);
    }
    return out;
}

} // namespace

void require_radical_data(const GradedAlgebra& a)
{
    if (!a.has_radical_data())
        throw std::invalid_argument("algebra lacks radical data (radical basis and idempotents required)");
    std::set<std::size_t> top;
    std::set<std::size_t> rad(a.radical()->begin(), a.radical()->end());
    for (std::size_t i = 0; i < a.dim(); ++i)
        if (!rad.count(i))
            top.insert(i);
    if (top != std::set<std::size_t>(a.idempotents().begin(), a.idempotents().end()))
        throw std::invalid_argument("algebra lacks radical data: the basis outside the radical must be the idempotents");
    for (std::size_t j = 0; j < a.dim(); ++j) {
        std::size_t hits = 0;
        for (auto e : a.idempotents())
            hits += a.product(j, e) == unit_vector(a.dim(), j);
        if (hits != 1)
            throw std::invalid_argument("algebra lacks radical data: basis element '" + a.label(j) +
                                        "' is not in exactly one A e_v");
    }
}

std::vector<std::size_t> projective_basis(const GradedAlgebra& a, std::size_t vertex)
{
    const std::size_t e = a.idempotents().at(vertex);
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < a.dim(); ++j)
        if (a.product(j, e) == unit_vector(a.dim(), j))
            out.push_back(j);
    return out;
}

GradedModule indecomposable_projective(const AlgebraPtr& a, std::size_t vertex, const GroupElement& shift)
{
    const auto basis = projective_basis(*a, vertex);
    const std::size_t n = basis.size();
    std::vector<std::size_t> local(a->dim(), n);
    for (std::size_t j = 0; j < n; ++j)
        local[basis[j]] = j;
    std::vector<GroupElement> degrees;
    std::vector<std::string> labels;
    for (auto j : basis) {
        degrees.push_back(a->group().sub(a->degree(j), shift));
        labels.push_back(a->label(j));
    }
    std::vector<Matrix> action;
    for (std::size_t k = 0; k < a->dim(); ++k) {
        Matrix m(n, n, a->field());
        for (std::size_t c = 0; c < n; ++c) {
            const Vector p = a->product(k, basis[c]);
            for (std::size_t i = 0; i < p.size(); ++i)
                if (!Field::is_zero(p[i]))
                    m(local.at(i), c) = p[i];
        }
        action.push_back(std::move(m));
    }
    return GradedModule(a, std::move(degrees), std::move(action), std::move(labels));
}

GradedModule simple_module(const AlgebraPtr& a, std::size_t vertex, const GroupElement& degree)
{
    require_radical_data(*a);
    std::vector<Matrix> action(a->dim(), Matrix(1, 1, a->field()));
    action[a->idempotents().at(vertex)](0, 0) = 1;
    return GradedModule(a, {degree}, std::move(action), {"s" + std::to_string(vertex)});
}

std::vector<GradedModule> indecomposable_injectives(const AlgebraPtr& a)
{
    require_radical_data(*a);
    auto op = std::make_shared<const GradedAlgebra>(a->opposite());
    std::vector<GradedModule> out;
    for (std::size_t v = 0; v < a->idempotents().size(); ++v)
        out.push_back(dual(indecomposable_projective(op, v, a->group().zero()), a));
    return out;
}

TopAndRadical top_and_radical(const GradedModule& m)
{
    const auto& a = *m.algebra();
    require_radical_data(a);
    std::vector<Vector> gens;
    for (auto r : *a.radical())
        for (std::size_t c = 0; c < m.dim(); ++c) {
            Vector v = m.action(r) * unit_vector(m.dim(), c);
            bool nz = false;
            for (const auto& x : v)
                nz = nz || !Field::is_zero(x);
            if (nz)
                gens.push_back(std::move(v));
        }
    // images of basis vectors under radical elements are homogeneous
    GradedSubspace rad;
    {
        std::map<GroupElement, std::vector<Vector>> parts;
        for (const auto& v : gens) {
            std::size_t first = 0;
            while (Field::is_zero(v[first]))
                ++first;
            const GroupElement d = m.degree(first);
            const auto& idx = m.component(d);
            Vector local(idx.size());
            for (std::size_t i = 0; i < idx.size(); ++i)
                local[i] = v[idx[i]];
            parts[d].push_back(std::move(local));
        }
        for (auto& [d, vs] : parts) {
            Matrix mat(vs.front().size(), vs.size(), m.field());
            for (std::size_t c = 0; c < vs.size(); ++c)
                mat.set_col(c, vs[c]);
            rad[d] = Subspace::span(mat);
        }
    }
    Submodule s = submodule(m, rad);
    Quotient q = quotient(m, rad);
    return TopAndRadical{std::move(q.module), std::move(s.module), std::move(q.projection), std::move(s.inclusion)};
}

std::optional<std::size_t> Resolution::length() const
{
    for (std::size_t i = terms.size(); i-- > 0;)
        if (!terms[i].empty())
            return i;
    return std::nullopt;
}

Resolution minimal_resolution(const ModulePtr& m, std::size_t cap) { return resolve(m, cap, false); }

Resolution nonminimal_resolution(const ModulePtr& m, std::size_t cap) { return resolve(m, cap, true); }

std::size_t ext_dimension(const Resolution& r, const ModulePtr& n, std::size_t i)
{
    if (i > r.cap)
        throw std::invalid_argument("Ext^" + std::to_string(i) + " needs a resolution computed to at least that length");
    if (!same_algebra(r.target->algebra(), n->algebra()))
        throw std::invalid_argument("Ext: modules over different algebras");
    if (i >= r.terms.size())
        return 0;
    const auto& a = *n->algebra();
    const Cochains ci = cochains(a, r.terms[i], *n);
    if (ci.dim == 0)
        return 0;

    // cocycles: vanish on the image of the next differential (or on the syzygy at the end)
    std::vector<Vector> relations;
    if (i + 1 < r.terms.size()) {
        const TermLayout next = layout(a, r.terms[i + 1]);
        for (auto g : next.generators)
            relations.push_back(r.differentials[i + 1].matrix.col(g));
    } else {
        for (std::size_t c = 0; c < r.syzygy_inclusion.cols(); ++c)
            relations.push_back(r.syzygy_inclusion.col(c));
    }
    Matrix constraints(0, ci.dim, n->field());
    for (const auto& y : relations)
        constraints = Matrix::vstack(constraints, evaluation(ci, *n, y));
    const std::size_t cocycles = ci.dim - rank(constraints);

    std::size_t boundaries = 0;
    if (i > 0) {
        const Cochains prev = cochains(a, r.terms[i - 1], *n);
        if (prev.dim > 0) {
            Matrix delta(ci.dim, prev.dim, n->field());
            for (std::size_t t = 0; t < ci.layout.generators.size(); ++t) {
                if (ci.local[t].dim() == 0)
                    continue;
                const Vector y = r.differentials[i].matrix.col(ci.layout.generators[t]);
                const Matrix ev = evaluation(prev, *n, y);
                const GroupElement d = n->group().neg(r.terms[i][t].shift);
                const Matrix local = ev.select_rows(n->component(d));
                const Matrix coords = ci.local[t].coordinates(local);
                for (std::size_t row = 0; row < coords.rows(); ++row)
                    for (std::size_t col = 0; col < coords.cols(); ++col)
                        delta(ci.offsets[t] + row, col) = coords(row, col);
            }
            boundaries = rank(delta);
        }
    }
    return cocycles - boundaries;
}

std::vector<std::size_t> ext_dimensions(const Resolution& r, const ModulePtr& n)
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i <= r.cap; ++i)
        out.push_back(ext_dimension(r, n, i));
    return out;
}

std::size_t graded_ext(const ModulePtr& m, const ModulePtr& n, std::size_t i, std::size_t cap)
{
    if (i > cap)
        throw std::invalid_argument("Ext^" + std::to_string(i) + " requested beyond cap " + std::to_string(cap));
    return ext_dimension(minimal_resolution(m, i), n, i);
}

} // namespace grm
