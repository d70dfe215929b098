#include "detail.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace grm {

namespace detail {

void check_domain(const GradedModule& m, const GroupMorphism& phi)
{
    if (!(m.group() == phi.domain()))
        throw std::invalid_argument("module graded by " + m.group().to_string() + ", morphism starts at " +
                                    phi.domain().to_string());
}

void check_codomain(const GradedModule& n, const GroupMorphism& phi)
{
    if (!(n.group() == phi.codomain()))
        throw std::invalid_argument("module graded by " + n.group().to_string() + ", morphism ends at " +
                                    phi.codomain().to_string());
}

void check_pushed(const GradedAlgebra& a, const GroupMorphism& phi, const GradedAlgebra& pushed)
{
    if (pushed.dim() != a.dim() || !(pushed.group() == phi.codomain()))
        throw std::invalid_argument("regraded algebra does not match");
    for (std::size_t k = 0; k < a.dim(); ++k)
        if (pushed.degree(k) != phi(a.degree(k)))
            throw std::invalid_argument("regraded algebra does not match at '" + a.label(k) + "'");
}

PulledBasis pulled_basis(const GradedModule& n, const GroupMorphism& phi)
{
    PulledBasis b;
    for (std::size_t i = 0; i < n.dim(); ++i)
        for (auto& g : fiber_elements(phi, n.degree(i))) {
            b.index[{i, g}] = b.pairs.size();
            b.pairs.emplace_back(i, std::move(g));
        }
    return b;
}

GroupKernel finite_kernel(const GroupMorphism& phi, const char* what)
{
    GroupKernel k = kernel(phi);
    if (!k.group.is_finite())
        throw std::domain_error(std::string(what) + ": kernel " + k.group.to_string() +
                                " is infinite; use the windowed check");
    return k;
}

std::vector<GroupElement> kernel_elements(const GroupKernel& k)
{
    std::vector<GroupElement> out;
    for (const auto& l : k.group.elements())
        out.push_back(k.inclusion(l));
    return out;
}

bool full_rank_square(const Matrix& m) { return m.rows() == m.cols() && rank(m) == m.rows(); }

CheckList bijective_degreewise(const GradedMap& f)
{
    CheckList c;
    std::vector<GroupElement> degrees = f.source->support();
    for (const auto& g : f.target->support())
        if (!f.source->component_dim(g))
            degrees.push_back(g);
    std::size_t bad = 0;
    std::string first;
    for (const auto& g : degrees) {
        const Matrix blk = f.block(g);
        if (blk.rows() != f.target->component_dim(g) || !full_rank_square(blk)) {
            if (!bad++)
                first = g.to_string();
        }
    }
    c.add("bijective in every degree", bad == 0,
          bad ? std::to_string(bad) + " degrees fail, first " + first
              : std::to_string(degrees.size()) + " degrees");
    return c;
}

} // namespace detail

using namespace detail;

AlgebraPtr pushforward(const AlgebraPtr& a, const GroupMorphism& phi)
{
    return std::make_shared<const GradedAlgebra>(a->regraded(phi));
}

GradedModule pushforward(const GradedModule& m, const GroupMorphism& phi)
{
    return pushforward(m, phi, pushforward(m.algebra(), phi));
}

GradedModule pushforward(const GradedModule& m, const GroupMorphism& phi, AlgebraPtr pushed)
{
    check_domain(m, phi);
    check_pushed(*m.algebra(), phi, *pushed);
    std::vector<GroupElement> degrees;
    degrees.reserve(m.dim());
    for (const auto& d : m.degrees())
        degrees.push_back(phi(d));
    return GradedModule(std::move(pushed), std::move(degrees), m.actions(), m.labels());
}

GradedMap pushforward(const GradedMap& f, const GroupMorphism& phi, AlgebraPtr pushed)
{
    return GradedMap{share(pushforward(*f.source, phi, pushed)), share(pushforward(*f.target, phi, pushed)),
                     phi(f.degree), f.matrix};
}

std::vector<std::size_t> coinduction_order(const GradedModule& m, const GroupMorphism& phi)
{
    std::vector<std::size_t> order(m.dim());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const auto ha = phi(m.degree(a));
        const auto hb = phi(m.degree(b));
        if (ha != hb)
            return ha < hb;
        return m.degree(a) < m.degree(b);
    });
    std::vector<std::size_t> pos(m.dim());
    for (std::size_t p = 0; p < order.size(); ++p)
        pos[order[p]] = p;
    return pos;
}

GradedModule coinduction(const GradedModule& m, const GroupMorphism& phi, AlgebraPtr pushed)
{
    check_domain(m, phi);
    check_pushed(*m.algebra(), phi, *pushed);
    const auto pos = coinduction_order(m, phi);
    const std::size_t n = m.dim();
    std::vector<GroupElement> degrees(n);
    std::vector<std::string> labels(n);
    for (std::size_t i = 0; i < n; ++i) {
        degrees[pos[i]] = phi(m.degree(i));
        labels[pos[i]] = m.label(i) + "@" + m.degree(i).to_string();
    }
    std::vector<Matrix> action;
    for (const auto& a : m.actions()) {
        Matrix b(n, n, m.field());
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c)
                if (!Field::is_zero(a(r, c)))
                    b(pos[r], pos[c]) = a(r, c);
        action.push_back(std::move(b));
    }
    return GradedModule(std::move(pushed), std::move(degrees), std::move(action), std::move(labels));
}

GradedMap coinduction(const GradedMap& f, const GroupMorphism& phi, AlgebraPtr pushed)
{
    const auto ps = coinduction_order(*f.source, phi);
    const auto pt = coinduction_order(*f.target, phi);
    Matrix mat(f.matrix.rows(), f.matrix.cols(), f.matrix.field());
    for (std::size_t r = 0; r < f.matrix.rows(); ++r)
        for (std::size_t c = 0; c < f.matrix.cols(); ++c)
            mat(pt[r], ps[c]) = f.matrix(r, c);
    return GradedMap{share(coinduction(*f.source, phi, pushed)), share(coinduction(*f.target, phi, pushed)),
                     phi(f.degree), std::move(mat)};
}

LazyGradedModule::LazyGradedModule(ModulePtr base, GroupMorphism phi, AlgebraPtr algebra)
    : base_(std::move(base)), phi_(std::move(phi)), algebra_(std::move(algebra))
{
    check_codomain(*base_, phi_);
    if (!(algebra_->group() == phi_.domain()))
        throw std::invalid_argument("lazy pullback: algebra not graded by the morphism's domain");
    check_pushed(*algebra_, phi_, *base_->algebra());
}

Matrix LazyGradedModule::block(std::size_t k, const GroupElement& g) const { return base_->block(k, phi_(g)); }

GradedModule pullback_finite(const GradedModule& n, const GroupMorphism& phi, AlgebraPtr algebra)
{
    check_codomain(n, phi);
    check_pushed(*algebra, phi, *n.algebra());
    finite_kernel(phi, "pullback");
    const PulledBasis pb = pulled_basis(n, phi);
    const std::size_t dim = pb.pairs.size();
    std::vector<GroupElement> degrees;
    std::vector<std::string> labels;
    for (const auto& [i, g] : pb.pairs) {
        degrees.push_back(g);
        labels.push_back(n.label(i) + "@" + g.to_string());
    }
    const auto& G = algebra->group();
    std::vector<Matrix> action;
    for (std::size_t k = 0; k < algebra->dim(); ++k) {
        Matrix m(dim, dim, n.field());
        const Matrix& a = n.action(k);
        for (std::size_t c = 0; c < dim; ++c) {
            const auto& [i, g] = pb.pairs[c];
            const GroupElement h = G.add(g, algebra->degree(k));
            for (std::size_t r = 0; r < n.dim(); ++r)
                if (!Field::is_zero(a(r, i)))
                    m(pb.at(r, h), c) = a(r, i);
        }
        action.push_back(std::move(m));
    }
    return GradedModule(std::move(algebra), std::move(degrees), std::move(action), std::move(labels));
}

std::variant<GradedModule, LazyGradedModule> pullback(const ModulePtr& n, const GroupMorphism& phi,
                                                      AlgebraPtr algebra)
{
    if (kernel(phi).group.is_finite())
        return pullback_finite(*n, phi, std::move(algebra));
    return LazyGradedModule(n, phi, std::move(algebra));
}

GradedMap pullback(const GradedMap& f, const GroupMorphism& phi, AlgebraPtr algebra)
{
    if (f.degree != f.source->group().zero())
        throw std::invalid_argument("pullback of maps: degree-zero maps only");
    auto src = share(pullback_finite(*f.source, phi, algebra));
    auto tgt = share(pullback_finite(*f.target, phi, algebra));
    const PulledBasis ps = pulled_basis(*f.source, phi);
    const PulledBasis pt = pulled_basis(*f.target, phi);
    Matrix mat(tgt->dim(), src->dim(), f.matrix.field());
    for (std::size_t c = 0; c < ps.pairs.size(); ++c) {
        const auto& [i, g] = ps.pairs[c];
        for (std::size_t r = 0; r < f.target->dim(); ++r)
            if (!Field::is_zero(f.matrix(r, i)))
                mat(pt.at(r, g), c) = f.matrix(r, i);
    }
    return GradedMap{std::move(src), std::move(tgt), algebra->group().zero(), std::move(mat)};
}

std::optional<Vector> hom_coordinates(const std::vector<GradedMap>& basis, const GradedMap& f)
{
    const std::size_t rows = f.matrix.rows() * f.matrix.cols();
    Matrix sys(rows, basis.size(), f.matrix.field());
    for (std::size_t b = 0; b < basis.size(); ++b)
        for (std::size_t r = 0; r < f.matrix.rows(); ++r)
            for (std::size_t c = 0; c < f.matrix.cols(); ++c)
                sys(r * f.matrix.cols() + c, b) = basis[b].matrix(r, c);
    Vector rhs(rows);
    for (std::size_t r = 0; r < f.matrix.rows(); ++r)
        for (std::size_t c = 0; c < f.matrix.cols(); ++c)
            rhs[r * f.matrix.cols() + c] = f.matrix(r, c);
    return solve(sys, rhs);
}

} // namespace grm
