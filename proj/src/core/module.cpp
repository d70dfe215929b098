#include "grm/module.hpp"

#include <sstream>
#include <stdexcept>

namespace grm {

namespace {

const std::vector<std::size_t> kEmpty;

std::vector<std::string> default_labels(std::size_t n, const std::string& stem)
{
    std::vector<std::string> out(n);
    for (std::size_t i = 0; i < n; ++i)
        out[i] = stem + std::to_string(i);
    return out;
}

GroupElement support_degree(const GradedModule& m, const Vector& v, bool& homogeneous)
{
    homogeneous = true;
    std::optional<GroupElement> deg;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (Field::is_zero(v[i]))
            continue;
        if (deg && *deg != m.degree(i))
            homogeneous = false;
        deg = m.degree(i);
    }
    return deg.value_or(m.group().zero());
}

} // namespace

GradedModule::GradedModule(AlgebraPtr algebra, std::vector<GroupElement> degrees, std::vector<Matrix> action,
                           std::vector<std::string> labels)
    : algebra_(std::move(algebra)), degrees_(std::move(degrees)), action_(std::move(action)),
      labels_(std::move(labels))
{
    if (!algebra_)
        throw std::invalid_argument("module: null algebra");
    const std::size_t n = degrees_.size();
    if (action_.size() != algebra_->dim())
        throw std::invalid_argument("module: one action matrix per algebra basis element required");
    for (const auto& m : action_)
        if (m.rows() != n || m.cols() != n)
            throw std::invalid_argument("module: action matrices must be " + std::to_string(n) + " x " +
                                        std::to_string(n));
    if (labels_.empty())
        labels_ = default_labels(n, "m");
    if (labels_.size() != n)
        throw std::invalid_argument("module: label count mismatch");
    for (std::size_t i = 0; i < n; ++i) {
        if (!algebra_->group().contains(degrees_[i]))
            throw std::invalid_argument("module: degree " + degrees_[i].to_string() + " of '" + labels_[i] +
                                        "' is not an element of " + algebra_->group().to_string());
        components_[degrees_[i]].push_back(i);
    }
}

GradedModule GradedModule::zero(AlgebraPtr algebra)
{
    const Field f = algebra->field();
    std::vector<Matrix> action(algebra->dim(), Matrix(0, 0, f));
    return GradedModule(std::move(algebra), {}, std::move(action));
}

GradedModule GradedModule::from_generator_action(AlgebraPtr algebra, std::vector<GroupElement> degrees,
                                                 const std::map<std::size_t, Matrix>& generator_action,
                                                 std::vector<std::string> labels)
{
    const std::size_t n = degrees.size();
    const Field f = algebra->field();
    for (auto g : algebra->generators())
        if (!generator_action.count(g))
            throw std::invalid_argument("module: missing action of generator '" + algebra->label(g) + "'");
    std::vector<Matrix> action;
    action.reserve(algebra->dim());
    if (!algebra->words()) {
        for (std::size_t k = 0; k < algebra->dim(); ++k)
            action.push_back(generator_action.at(k));
        return GradedModule(std::move(algebra), std::move(degrees), std::move(action), std::move(labels));
    }
    for (const auto& word : *algebra->words()) {
        Matrix m = Matrix::identity(n, f);
        for (auto g : word)
            m = m * generator_action.at(g);
        action.push_back(std::move(m));
    }
    return GradedModule(std::move(algebra), std::move(degrees), std::move(action), std::move(labels));
}

GradedModule GradedModule::regular(AlgebraPtr algebra)
{
    std::vector<GroupElement> degrees;
    std::vector<std::string> labels;
    for (const auto& b : algebra->basis()) {
        degrees.push_back(b.degree);
        labels.push_back(b.label);
    }
    std::vector<Matrix> action;
    for (std::size_t i = 0; i < algebra->dim(); ++i)
        action.push_back(algebra->left(i));
    return GradedModule(std::move(algebra), std::move(degrees), std::move(action), std::move(labels));
}

Matrix GradedModule::action_of(const Vector& a) const
{
    Matrix out(dim(), dim(), field());
    for (std::size_t k = 0; k < a.size(); ++k)
        if (!Field::is_zero(a[k]))
            out = out + action_[k].scaled(a[k]);
    return out;
}

const std::vector<std::size_t>& GradedModule::component(const GroupElement& g) const
{
    auto it = components_.find(g);
    return it == components_.end() ? kEmpty : it->second;
}

std::vector<GroupElement> GradedModule::support() const
{
    std::vector<GroupElement> out;
    for (const auto& [g, idx] : components_)
        out.push_back(g);
    return out;
}

GradedDimension GradedModule::graded_dimension() const
{
    GradedDimension d;
    for (const auto& [g, idx] : components_)
        d[g] = idx.size();
    return d;
}

Matrix GradedModule::block(std::size_t k, const GroupElement& g) const
{
    const GroupElement h = group().add(g, algebra_->degree(k));
    return action_[k].select(component(h), component(g));
}

std::string GradedModule::to_string() const
{
    std::ostringstream os;
    os << "module of dimension " << dim() << " over " << group().to_string() << ":";
    for (const auto& [g, idx] : components_)
        os << ' ' << g.to_string() << ':' << idx.size();
    return os.str();
}

ValidationReport validate(const GradedModule& m)
{
    ValidationReport r;
    const auto& a = *m.algebra();
    const Field& f = m.field();
    const std::size_t n = m.dim();
    for (std::size_t k = 0; k < a.dim(); ++k) {
        const Matrix& act = m.action(k);
        for (std::size_t row = 0; row < n; ++row)
            for (std::size_t col = 0; col < n; ++col)
                if (!Field::is_zero(act(row, col)) &&
                    m.degree(row) != m.group().add(m.degree(col), a.degree(k))) {
                    r.fail("degree condition fails: " + a.label(k) + " sends " + m.label(col) + " into degree " +
                           m.degree(row).to_string());
                    goto next_k;
                }
    next_k:;
    }
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) {
            const Matrix lhs = m.action(i) * m.action(j);
            const Matrix rhs = m.action_of(a.product(i, j));
            if (!(lhs == rhs))
                r.fail("module axiom fails for pair (" + std::to_string(i) + "," + std::to_string(j) + "): " +
                       a.label(i) + ", " + a.label(j));
        }
    if (!(m.action_of(a.unit()) == Matrix::identity(n, f)))
        r.fail("unit does not act as the identity");
    return r;
}

Matrix GradedMap::block(const GroupElement& g) const
{
    const GroupElement h = target->group().add(g, degree);
    return matrix.select(target->component(h), source->component(g));
}

ValidationReport validate(const GradedMap& f)
{
    ValidationReport r;
    if (!f.source || !f.target) {
        r.fail("map has no source or target");
        return r;
    }
    if (!same_algebra(f.source->algebra(), f.target->algebra()))
        r.fail("source and target are modules over different algebras");
    if (f.matrix.rows() != f.target->dim() || f.matrix.cols() != f.source->dim()) {
        r.fail("map matrix has the wrong shape");
        return r;
    }
    const auto& G = f.source->group();
    for (std::size_t row = 0; row < f.matrix.rows(); ++row)
        for (std::size_t col = 0; col < f.matrix.cols(); ++col)
            if (!Field::is_zero(f.matrix(row, col)) &&
                f.target->degree(row) != G.add(f.source->degree(col), f.degree)) {
                r.fail("map is not homogeneous of degree " + f.degree.to_string() + " at (" + f.target->label(row) +
                       ", " + f.source->label(col) + ")");
                return r;
            }
    const auto& a = *f.source->algebra();
    for (auto k : a.generators())
        if (!(f.matrix * f.source->action(k) == f.target->action(k) * f.matrix))
            r.fail("map does not commute with the action of " + a.label(k));
    return r;
}

GradedMap identity_map(const ModulePtr& m)
{
    return GradedMap{m, m, m->group().zero(), Matrix::identity(m->dim(), m->field())};
}

GradedMap zero_map(const ModulePtr& source, const ModulePtr& target)
{
    return GradedMap{source, target, source->group().zero(), Matrix(target->dim(), source->dim(), source->field())};
}

GradedMap compose(const GradedMap& g, const GradedMap& f)
{
    if (f.target->dim() != g.source->dim() || f.target->degrees() != g.source->degrees())
        throw std::invalid_argument("compose: target of the first map is not the source of the second");
    return GradedMap{f.source, g.target, f.source->group().add(f.degree, g.degree), g.matrix * f.matrix};
}

bool same_map(const GradedMap& a, const GradedMap& b)
{
    return a.degree == b.degree && a.matrix == b.matrix && a.source->degrees() == b.source->degrees() &&
           a.target->degrees() == b.target->degrees();
}

GradedModule shift(const GradedModule& m, const GroupElement& g)
{
    if (!m.group().contains(g))
        throw std::invalid_argument("shift: " + g.to_string() + " is not in " + m.group().to_string());
    std::vector<GroupElement> degrees;
    degrees.reserve(m.dim());
    for (const auto& d : m.degrees())
        degrees.push_back(m.group().sub(d, g));
    return GradedModule(m.algebra(), std::move(degrees), m.actions(), m.labels());
}

GradedMap shift(const GradedMap& f, const GroupElement& g)
{
    return GradedMap{share(shift(*f.source, g)), share(shift(*f.target, g)), f.degree, f.matrix};
}

std::vector<GradedMap> hom_space(const ModulePtr& m, const ModulePtr& n)
{
    if (!same_algebra(m->algebra(), n->algebra()))
        throw std::invalid_argument("hom_space: modules over different algebras");
    const auto& a = *m->algebra();
    const auto& G = m->group();
    const Field& f = m->field();

    // unknown block X_g : M_g -> N_g for every common degree
    std::map<GroupElement, std::size_t> offset;
    std::size_t unknowns = 0;
    for (const auto& g : m->support()) {
        const std::size_t rows = n->component_dim(g);
        if (rows == 0)
            continue;
        offset[g] = unknowns;
        unknowns += rows * m->component_dim(g);
    }
    if (unknowns == 0)
        return {};

    std::vector<std::tuple<std::size_t, std::size_t, Scalar>> eq;
    std::size_t row = 0;
    for (auto k : a.generators()) {
        for (const auto& g : m->support()) {
            const GroupElement h = G.add(g, a.degree(k));
            const auto& nh = n->component(h);
            if (nh.empty())
                continue;
            const auto& mg = m->component(g);
            const auto& mh = m->component(h);
            const auto& ng = n->component(g);
            const Matrix am = m->action(k).select(mh, mg);
            const Matrix an = n->action(k).select(nh, ng);
            // X_h * am - an * X_g = 0, one equation per (r, c)
            for (std::size_t r = 0; r < nh.size(); ++r)
                for (std::size_t c = 0; c < mg.size(); ++c, ++row) {
                    if (auto it = offset.find(h); it != offset.end())
                        for (std::size_t t = 0; t < mh.size(); ++t)
                            if (!Field::is_zero(am(t, c)))
                                eq.emplace_back(row, it->second + r * mh.size() + t, am(t, c));
                    if (auto it = offset.find(g); it != offset.end())
                        for (std::size_t t = 0; t < ng.size(); ++t)
                            if (!Field::is_zero(an(r, t)))
                                eq.emplace_back(row, it->second + t * mg.size() + c, f.neg(an(r, t)));
                }
        }
    }
    const Matrix system = Matrix::from_triplets(row, unknowns, eq, f);
    const Matrix basis = kernel_basis(system);

    std::vector<GradedMap> out;
    for (std::size_t b = 0; b < basis.cols(); ++b) {
        Matrix mat(n->dim(), m->dim(), f);
        for (const auto& [g, off] : offset) {
            const auto& mg = m->component(g);
            const auto& ng = n->component(g);
            for (std::size_t r = 0; r < ng.size(); ++r)
                for (std::size_t c = 0; c < mg.size(); ++c)
                    mat(ng[r], mg[c]) = basis(off + r * mg.size() + c, b);
        }
        out.push_back(GradedMap{m, n, G.zero(), std::move(mat)});
    }
    return out;
}

std::size_t hom_dimension(const ModulePtr& m, const ModulePtr& n) { return hom_space(m, n).size(); }

GradedModule dual(const GradedModule& m) { return dual(m, std::make_shared<const GradedAlgebra>(m.algebra()->opposite())); }

GradedModule dual(const GradedModule& m, AlgebraPtr opposite)
{
    if (!(*opposite == m.algebra()->opposite()))
        throw std::invalid_argument("dual: supplied algebra is not the opposite of the module's algebra");
    std::vector<GroupElement> degrees;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < m.dim(); ++i) {
        degrees.push_back(m.group().neg(m.degree(i)));
        labels.push_back(m.label(i) + "*");
    }
    std::vector<Matrix> action;
    for (const auto& act : m.actions())
        action.push_back(act.transpose());
    return GradedModule(std::move(opposite), std::move(degrees), std::move(action), std::move(labels));
}

DirectSum direct_sum(const std::vector<ModulePtr>& summands)
{
    if (summands.empty())
        throw std::invalid_argument("direct_sum: no summands");
    const AlgebraPtr& alg = summands.front()->algebra();
    const Field& f = alg->field();
    std::size_t total = 0;
    for (const auto& s : summands) {
        if (!same_algebra(s->algebra(), alg))
            throw std::invalid_argument("direct_sum: summands over different algebras");
        total += s->dim();
    }
    std::vector<GroupElement> degrees;
    std::vector<std::string> labels;
    std::vector<Matrix> action(alg->dim(), Matrix(total, total, f));
    DirectSum out{GradedModule::zero(alg), {}, {}};
    std::size_t off = 0;
    for (std::size_t s = 0; s < summands.size(); ++s) {
        const auto& m = *summands[s];
        Matrix inj(total, m.dim(), f);
        Matrix proj(m.dim(), total, f);
        for (std::size_t i = 0; i < m.dim(); ++i) {
            degrees.push_back(m.degree(i));
            labels.push_back(m.label(i) + "@" + std::to_string(s));
            inj(off + i, i) = 1;
            proj(i, off + i) = 1;
        }
        for (std::size_t k = 0; k < alg->dim(); ++k)
            for (std::size_t r = 0; r < m.dim(); ++r)
                for (std::size_t c = 0; c < m.dim(); ++c)
                    action[k](off + r, off + c) = m.action(k)(r, c);
        out.injections.push_back(std::move(inj));
        out.projections.push_back(std::move(proj));
        off += m.dim();
    }
    out.module = GradedModule(alg, std::move(degrees), std::move(action), std::move(labels));
    return out;
}

Vector embed(const GradedModule& m, const GroupElement& g, const Vector& local)
{
    const auto& idx = m.component(g);
    if (local.size() != idx.size())
        throw std::invalid_argument("embed: local vector has the wrong length");
    Vector v(m.dim());
    for (std::size_t i = 0; i < idx.size(); ++i)
        v[idx[i]] = local[i];
    return v;
}

Submodule submodule(const GradedModule& m, const GradedSubspace& u)
{
    const auto& a = *m.algebra();
    const Field& f = m.field();
    const auto& G = m.group();
    std::vector<GroupElement> degrees;
    std::vector<std::string> labels;
    std::map<GroupElement, std::size_t> start;
    std::size_t total = 0;
    for (const auto& [g, s] : u) {
        start[g] = total;
        for (std::size_t i = 0; i < s.dim(); ++i) {
            degrees.push_back(g);
            labels.push_back("u" + std::to_string(total + i));
        }
        total += s.dim();
    }
    Matrix incl(m.dim(), total, f);
    for (const auto& [g, s] : u) {
        const auto& idx = m.component(g);
        for (std::size_t i = 0; i < s.dim(); ++i)
            for (std::size_t r = 0; r < idx.size(); ++r)
                incl(idx[r], start[g] + i) = s.basis()(r, i);
    }
    std::vector<Matrix> action(a.dim(), Matrix(total, total, f));
    for (std::size_t k = 0; k < a.dim(); ++k)
        for (const auto& [g, s] : u) {
            if (s.dim() == 0)
                continue;
            const GroupElement h = G.add(g, a.degree(k));
            const Matrix img = m.block(k, g) * s.basis();
            if (img.is_zero())
                continue;
            auto it = u.find(h);
            if (it == u.end())
                throw std::logic_error("submodule: subspace is not stable under the action");
            const Matrix coords = it->second.coordinates(img);
            for (std::size_t r = 0; r < coords.rows(); ++r)
                for (std::size_t c = 0; c < coords.cols(); ++c)
                    action[k](start[h] + r, start[g] + c) = coords(r, c);
        }
    return Submodule{GradedModule(m.algebra(), std::move(degrees), std::move(action), std::move(labels)),
                     std::move(incl)};
}

GradedSubspace generated_subspace(const GradedModule& m, const std::vector<Vector>& generators)
{
    const auto& a = *m.algebra();
    const auto& G = m.group();
    std::map<GroupElement, std::vector<Vector>> parts;
    for (const auto& v : generators) {
        bool homogeneous = true;
        const GroupElement d = support_degree(m, v, homogeneous);
        if (!homogeneous)
            throw std::invalid_argument("generated_submodule: generator is not homogeneous");
        for (std::size_t k = 0; k < a.dim(); ++k) {
            const Vector w = m.action(k) * v;
            const GroupElement h = G.add(d, a.degree(k));
            const auto& idx = m.component(h);
            Vector local(idx.size());
            bool nonzero = false;
            for (std::size_t i = 0; i < idx.size(); ++i) {
                local[i] = w[idx[i]];
                nonzero = nonzero || !Field::is_zero(local[i]);
            }
            if (nonzero)
                parts[h].push_back(std::move(local));
        }
    }
    GradedSubspace out;
    for (auto& [g, vecs] : parts) {
        Matrix mat(vecs.front().size(), vecs.size(), m.field());
        for (std::size_t c = 0; c < vecs.size(); ++c)
            mat.set_col(c, vecs[c]);
        out[g] = Subspace::span(mat);
    }
    return out;
}

Submodule generated_submodule(const GradedModule& m, const std::vector<Vector>& generators)
{
    return submodule(m, generated_subspace(m, generators));
}

Quotient quotient(const GradedModule& m, const GradedSubspace& u)
{
    const auto& a = *m.algebra();
    const Field& f = m.field();
    const auto& G = m.group();

    struct Part {
        std::vector<std::size_t> keep; // component-local indices kept in the quotient
        Matrix project;                // keep.size() x component dim
        std::size_t start = 0;
    };
    std::map<GroupElement, Part> parts;
    std::vector<GroupElement> degrees;
    std::vector<std::string> labels;
    std::size_t total = 0;
    for (const auto& g : m.support()) {
        const auto& idx = m.component(g);
        Part p;
        std::vector<bool> pivot(idx.size(), false);
        const Subspace* s = nullptr;
        if (auto it = u.find(g); it != u.end() && it->second.dim() > 0) {
            s = &it->second;
            for (auto pr : s->pivot_rows())
                pivot[pr] = true;
        }
        for (std::size_t i = 0; i < idx.size(); ++i)
            if (!pivot[i])
                p.keep.push_back(i);
        // v -> (v - B v[pivots])[keep]
        p.project = Matrix(p.keep.size(), idx.size(), f);
        for (std::size_t r = 0; r < p.keep.size(); ++r)
            p.project(r, p.keep[r]) = 1;
        if (s)
            for (std::size_t i = 0; i < s->dim(); ++i)
                for (std::size_t r = 0; r < p.keep.size(); ++r)
                    p.project(r, s->pivot_rows()[i]) = f.neg(s->basis()(p.keep[r], i));
        p.start = total;
        for (auto kidx : p.keep) {
            degrees.push_back(g);
            labels.push_back(m.label(idx[kidx]));
        }
        total += p.keep.size();
        parts.emplace(g, std::move(p));
    }
    Matrix proj(total, m.dim(), f);
    for (const auto& [g, p] : parts) {
        const auto& idx = m.component(g);
        for (std::size_t r = 0; r < p.keep.size(); ++r)
            for (std::size_t c = 0; c < idx.size(); ++c)
                proj(p.start + r, idx[c]) = p.project(r, c);
    }
    std::vector<Matrix> action(a.dim(), Matrix(total, total, f));
    for (std::size_t k = 0; k < a.dim(); ++k)
        for (const auto& [g, p] : parts) {
            if (p.keep.empty())
                continue;
            const GroupElement h = G.add(g, a.degree(k));
            auto it = parts.find(h);
            if (it == parts.end() || it->second.keep.empty())
                continue;
            const Matrix blk = m.block(k, g).select_cols(p.keep);
            const Matrix img = it->second.project * blk;
            for (std::size_t r = 0; r < img.rows(); ++r)
                for (std::size_t c = 0; c < img.cols(); ++c)
                    action[k](it->second.start + r, p.start + c) = img(r, c);
        }
    return Quotient{GradedModule(m.algebra(), std::move(degrees), std::move(action), std::move(labels)),
                    std::move(proj)};
}

GradedSubspace kernel_subspace(const GradedMap& f)
{
    GradedSubspace out;
    for (const auto& g : f.source->support()) {
        const Matrix blk = f.block(g);
        Matrix k = blk.rows() == 0 ? Matrix::identity(blk.cols(), f.matrix.field()) : kernel_basis(blk);
        if (k.cols() > 0)
            out[g] = Subspace::span(k);
    }
    return out;
}

GradedSubspace image_subspace(const GradedMap& f)
{
    GradedSubspace out;
    const auto& G = f.source->group();
    for (const auto& g : f.source->support()) {
        const Matrix blk = f.block(g);
        if (blk.rows() == 0 || blk.is_zero())
            continue;
        Subspace s = Subspace::span(blk);
        out[G.add(g, f.degree)] = std::move(s);
    }
    return out;
}

KernelResult kernel(const GradedMap& f)
{
    Submodule s = submodule(*f.source, kernel_subspace(f));
    auto k = share(std::move(s.module));
    GradedMap incl{k, f.source, f.source->group().zero(), std::move(s.inclusion)};
    return KernelResult{*k, std::move(incl)};
}

CokernelResult cokernel(const GradedMap& f)
{
    Quotient q = quotient(*f.target, image_subspace(f));
    auto c = share(std::move(q.module));
    GradedMap proj{f.target, c, f.source->group().zero(), std::move(q.projection)};
    return CokernelResult{*c, std::move(proj)};
}

} // namespace grm
