#include "grm/algebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace grm {

void ValidationReport::merge(const ValidationReport& other, const std::string& prefix)
{
    for (const auto& f : other.failures)
        failures.push_back(prefix + f);
}

GradedAlgebra::GradedAlgebra(Field field, FgAbelianGroup group, std::vector<AlgebraBasisElement> basis,
                             std::vector<Matrix> left_mult, Vector unit)
    : field_(field), group_(std::move(group)), basis_(std::move(basis)), left_(std::move(left_mult)),
      unit_(std::move(unit))
{
    const std::size_t n = basis_.size();
    if (left_.size() != n)
        throw std::invalid_argument("algebra: one multiplication matrix per basis element required");
    for (const auto& m : left_)
        if (m.rows() != n || m.cols() != n)
            throw std::invalid_argument("algebra: multiplication matrices must be dim x dim");
    if (unit_.size() != n)
        throw std::invalid_argument("algebra: unit has wrong length");
    for (const auto& b : basis_)
        if (!group_.contains(b.degree))
            throw std::invalid_argument("algebra: degree of '" + b.label + "' is not an element of " +
                                        group_.to_string());
    generators_.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        generators_[i] = i;
}

std::optional<std::size_t> GradedAlgebra::index_of(const std::string& label) const
{
    for (std::size_t i = 0; i < basis_.size(); ++i)
        if (basis_[i].label == label)
            return i;
    return std::nullopt;
}

Vector GradedAlgebra::multiply(const Vector& a, const Vector& b) const
{
    Vector out(dim());
    for (std::size_t i = 0; i < dim(); ++i) {
        if (Field::is_zero(a[i]))
            continue;
        Vector col = left_[i] * b;
        for (std::size_t k = 0; k < dim(); ++k)
            if (!Field::is_zero(col[k]))
                out[k] = field_.add(out[k], field_.mul(a[i], col[k]));
    }
    return out;
}

void GradedAlgebra::set_words(std::vector<std::size_t> generators, std::vector<std::vector<std::size_t>> words)
{
    if (words.size() != dim())
        throw std::invalid_argument("algebra: one word per basis element required");
    generators_ = std::move(generators);
    words_ = std::move(words);
}

GradedAlgebra GradedAlgebra::opposite() const
{
    const std::size_t n = dim();
    std::vector<Matrix> left(n, Matrix(n, n, field_));
    // a_i *op a_j = a_j * a_i
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                left[i](k, j) = left_[j](k, i);
    GradedAlgebra op(field_, group_, basis_, std::move(left), unit_);
    op.radical_ = radical_;
    op.idempotents_ = idempotents_;
    op.generators_ = generators_;
    if (words_) {
        auto w = *words_;
        for (auto& word : w)
            std::reverse(word.begin(), word.end());
        op.words_ = std::move(w);
    }
    if (quiver_) {
        QuiverData q = *quiver_;
        for (auto& a : q.arrows)
            std::swap(a.source, a.target);
        std::swap(q.path_source, q.path_target);
        for (auto& r : q.relations)
            for (auto& t : r.terms)
                std::reverse(t.arrows.begin(), t.arrows.end());
        op.quiver_ = std::move(q);
    }
    return op;
}

GradedAlgebra GradedAlgebra::regraded(const GroupMorphism& phi) const
{
    if (!(phi.domain() == group_))
        throw std::invalid_argument("regrade: morphism domain " + phi.domain().to_string() +
                                    " does not match grading group " + group_.to_string());
    auto basis = basis_;
    for (auto& b : basis)
        b.degree = phi(b.degree);
    GradedAlgebra out(field_, phi.codomain(), std::move(basis), left_, unit_);
    out.radical_ = radical_;
    out.idempotents_ = idempotents_;
    out.generators_ = generators_;
    out.words_ = words_;
    if (quiver_) {
        QuiverData q = *quiver_;
        for (auto& a : q.arrows)
            a.degree = phi(a.degree);
        out.quiver_ = std::move(q);
    }
    return out;
}

bool GradedAlgebra::operator==(const GradedAlgebra& o) const
{
    return field_ == o.field_ && group_ == o.group_ && basis_ == o.basis_ && unit_ == o.unit_ &&
           radical_ == o.radical_ && idempotents_ == o.idempotents_ && left_ == o.left_;
}

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b)
{
    return a == b || (a && b && *a == *b);
}

namespace {

bool homogeneous_in(const GradedAlgebra& a, const Vector& v, const GroupElement& deg)
{
    for (std::size_t k = 0; k < v.size(); ++k)
        if (!Field::is_zero(v[k]) && a.degree(k) != deg)
            return false;
    return true;
}

std::string vec_label(const GradedAlgebra& a, std::size_t i) { return a.label(i) + "#" + std::to_string(i); }

void check_radical(const GradedAlgebra& a, ValidationReport& r)
{
    const auto& rad = *a.radical();
    const std::size_t n = a.dim();
    std::vector<bool> in_rad(n, false);
    for (auto i : rad) {
        if (i >= n) {
            r.fail("radical index " + std::to_string(i) + " out of range");
            return;
        }
        in_rad[i] = true;
    }
    // two-sided ideal
    for (auto j : rad)
        for (std::size_t i = 0; i < n; ++i)
            for (const auto& v : {a.product(i, j), a.product(j, i)})
                for (std::size_t k = 0; k < n; ++k)
                    if (!Field::is_zero(v[k]) && !in_rad[k]) {
                        r.fail("radical not an ideal: product of " + vec_label(a, i) + " and " + vec_label(a, j) +
                               " leaves it");
                        goto ideal_done;
                    }
ideal_done:
    // nilpotent: J^k shrinks to zero
    {
        Matrix power(n, rad.size(), a.field());
        for (std::size_t c = 0; c < rad.size(); ++c)
            power(rad[c], c) = 1;
        Subspace cur = Subspace::span(power);
        for (std::size_t step = 0; step <= n && cur.dim() > 0; ++step) {
            std::vector<Vector> next;
            for (auto j : rad)
                for (std::size_t c = 0; c < cur.dim(); ++c)
                    next.push_back(a.left(j) * cur.basis().col(c));
            Matrix m(n, next.size(), a.field());
            for (std::size_t c = 0; c < next.size(); ++c)
                m.set_col(c, next[c]);
            Subspace nxt = Subspace::span(m);
            if (nxt.dim() == cur.dim()) {
                r.fail("radical is not nilpotent");
                break;
            }
            cur = std::move(nxt);
        }
    }
    // A/J semisimple: nondegenerate trace form, or spanned by orthogonal idempotents
    std::vector<std::size_t> top;
    for (std::size_t i = 0; i < n; ++i)
        if (!in_rad[i])
            top.push_back(i);
    const std::size_t t = top.size();
    auto left_bar = [&](const Vector& x) {
        Matrix m(t, t, a.field());
        for (std::size_t c = 0; c < t; ++c) {
            Vector e(n);
            e[top[c]] = 1;
            Vector y = a.multiply(x, e);
            for (std::size_t rr = 0; rr < t; ++rr)
                m(rr, c) = y[top[rr]];
        }
        return m;
    };
    Matrix form(t, t, a.field());
    for (std::size_t i = 0; i < t; ++i)
        for (std::size_t j = 0; j < t; ++j) {
            Vector ai(n), aj(n);
            ai[top[i]] = 1;
            aj[top[j]] = 1;
            Matrix l = left_bar(a.multiply(ai, aj));
            Scalar tr = 0;
            for (std::size_t d = 0; d < t; ++d)
                tr = a.field().add(tr, l(d, d));
            form(i, j) = tr;
        }
    if (rank(form) == t)
        return;
    const auto& idem = a.idempotents();
    bool split = idem.size() == t;
    for (std::size_t i = 0; split && i < idem.size(); ++i)
        split = !in_rad[idem[i]];
    if (!split)
        r.fail("quotient by the radical is not shown semisimple (degenerate trace form and no spanning idempotents)");
}

} // namespace

ValidationReport validate(const GradedAlgebra& a)
{
    ValidationReport r;
    const std::size_t n = a.dim();
    const Field& f = a.field();
    // degree compatibility
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const GroupElement d = a.group().add(a.degree(i), a.degree(j));
            if (!homogeneous_in(a, a.product(i, j), d))
                r.fail("degree compatibility fails for (" + std::to_string(i) + "," + std::to_string(j) + "): " +
                       a.label(i) + "*" + a.label(j) + " not of degree " + d.to_string());
        }
    // associativity: (a_i a_j) a_k = a_i (a_j a_k)
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Vector ij = a.product(i, j);
            Matrix lhs(n, n, f);
            for (std::size_t k = 0; k < n; ++k)
                if (!Field::is_zero(ij[k]))
                    lhs = lhs + a.left(k).scaled(ij[k]);
            const Matrix rhs = a.left(i) * a.left(j);
            if (!(lhs == rhs))
                for (std::size_t k = 0; k < n; ++k)
                    if (!(lhs.col(k) == rhs.col(k))) {
                        r.fail("associativity fails for triple (" + std::to_string(i) + "," + std::to_string(j) +
                               "," + std::to_string(k) + ")");
                        break;
                    }
        }
    // unit
    if (!homogeneous_in(a, a.unit(), a.group().zero()))
        r.fail("unit is not homogeneous of trivial degree");
    for (std::size_t i = 0; i < n; ++i) {
        Vector e(n);
        e[i] = 1;
        if (!(a.multiply(a.unit(), e) == e) || !(a.multiply(e, a.unit()) == e))
            r.fail("unit is not a two-sided identity on " + vec_label(a, i));
    }
    // idempotents
    const auto& idem = a.idempotents();
    if (!idem.empty()) {
        Vector sum(n);
        for (std::size_t x = 0; x < idem.size(); ++x) {
            if (idem[x] >= n) {
                r.fail("idempotent index out of range");
                return r;
            }
            sum[idem[x]] = f.add(sum[idem[x]], Scalar(1));
            for (std::size_t y = 0; y < idem.size(); ++y) {
                Vector expect(n);
                if (x == y)
                    expect[idem[x]] = 1;
                if (!(a.product(idem[x], idem[y]) == expect))
                    r.fail("idempotents " + vec_label(a, idem[x]) + " and " + vec_label(a, idem[y]) +
                           " are not orthogonal idempotents");
            }
        }
        if (!(sum == a.unit()))
            r.fail("idempotents do not sum to the unit");
    }
    if (a.radical())
        check_radical(a, r);
    return r;
}

} // namespace grm
