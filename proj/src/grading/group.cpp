#include "grm/group.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace grm {

namespace {

std::int64_t to_int64(const mpz_class& z)
{
    if (!z.fits_slong_p())
        throw std::overflow_error("group coordinate exceeds 64 bits");
    return z.get_si();
}

std::int64_t mod_floor(std::int64_t a, std::int64_t m)
{
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

std::int64_t checked(__int128 v)
{
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
        throw std::overflow_error("group coordinate exceeds 64 bits");
    return static_cast<std::int64_t>(v);
}

// Matrix of phi with the codomain torsion relations appended: columns [phi | -diag(m')].
// Its integer kernel projected to the first n coordinates is the preimage of 0 in Z^n.
IntMatrix lifted_system(const GroupMorphism& phi)
{
    const auto& dom = phi.domain();
    const auto& cod = phi.codomain();
    const std::size_t n = dom.ngens();
    const std::size_t s2 = cod.torsion().size();
    IntMatrix b(cod.ngens(), n + s2);
    for (std::size_t r = 0; r < cod.ngens(); ++r)
        for (std::size_t c = 0; c < n; ++c)
            b(r, c) = static_cast<long>(phi.matrix()[r][c]);
    for (std::size_t i = 0; i < s2; ++i)
        b(cod.rank() + i, n + i) = static_cast<long>(-cod.torsion()[i]);
    return b;
}

} // namespace

std::string GroupElement::to_string() const
{
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < coords.size(); ++i)
        os << (i ? "," : "") << coords[i];
    os << ')';
    return os.str();
}

std::size_t GroupElementHash::operator()(const GroupElement& g) const noexcept
{
    std::size_t h = 1469598103934665603ull;
    for (auto c : g.coords) {
        h ^= static_cast<std::size_t>(c) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
}

FgAbelianGroup::FgAbelianGroup(std::size_t rank, std::vector<std::int64_t> torsion)
    : rank_(rank), torsion_(std::move(torsion))
{
    for (std::size_t i = 0; i < torsion_.size(); ++i) {
        if (torsion_[i] < 2)
            throw std::invalid_argument("torsion orders must be >= 2");
        if (i > 0 && torsion_[i] % torsion_[i - 1] != 0)
            throw std::invalid_argument("torsion orders must form a divisibility chain; canonicalize first");
    }
}

FgAbelianGroup::Presented FgAbelianGroup::canonicalize(std::size_t rank, const std::vector<std::int64_t>& orders)
{
    const std::size_t n = rank + orders.size();
    IntMatrix rel(n, orders.size());
    for (std::size_t i = 0; i < orders.size(); ++i) {
        if (orders[i] < 1)
            throw std::invalid_argument("torsion orders must be >= 1");
        rel(rank + i, i) = static_cast<long>(orders[i]);
    }
    SmithForm snf = smith_normal_form(rel);
    // new coordinates y = U x; y_j lives in Z/d_j (d_j = 0 past the rank)
    std::vector<std::size_t> free_rows, torsion_rows;
    std::vector<std::int64_t> torsion;
    const std::size_t r = snf.rank();
    for (std::size_t j = 0; j < n; ++j) {
        if (j >= r) {
            free_rows.push_back(j);
        } else if (snf.D(j, j) != 1) {
            torsion_rows.push_back(j);
            torsion.push_back(to_int64(snf.D(j, j)));
        }
    }
    Presented out{FgAbelianGroup(free_rows.size(), torsion), {}};
    for (auto rows : {&free_rows, &torsion_rows})
        for (std::size_t j : *rows) {
            std::vector<std::int64_t> row(n);
            for (std::size_t c = 0; c < n; ++c)
                row[c] = to_int64(snf.U(j, c));
            out.coordinate_map.push_back(std::move(row));
        }
    // reduce torsion rows so the map stays small
    for (std::size_t i = 0; i < torsion.size(); ++i)
        for (auto& x : out.coordinate_map[free_rows.size() + i])
            x = mod_floor(x, torsion[i]);
    return out;
}

std::uint64_t FgAbelianGroup::order() const
{
    if (rank_ != 0)
        throw std::domain_error("order of an infinite group");
    std::uint64_t o = 1;
    for (auto m : torsion_)
        o *= static_cast<std::uint64_t>(m);
    return o;
}

GroupElement FgAbelianGroup::zero() const { return GroupElement{std::vector<std::int64_t>(ngens(), 0)}; }

GroupElement FgAbelianGroup::generator(std::size_t i) const
{
    GroupElement g = zero();
    g.coords.at(i) = 1;
    return reduce(std::move(g));
}

GroupElement FgAbelianGroup::element(std::vector<std::int64_t> coords) const
{
    if (coords.size() != ngens())
        throw std::invalid_argument("element of " + to_string() + " needs " + std::to_string(ngens()) +
                                    " coordinates, got " + std::to_string(coords.size()));
    return reduce(GroupElement{std::move(coords)});
}

bool FgAbelianGroup::contains(const GroupElement& g) const
{
    if (g.coords.size() != ngens())
        return false;
    for (std::size_t i = 0; i < torsion_.size(); ++i) {
        auto c = g.coords[rank_ + i];
        if (c < 0 || c >= torsion_[i])
            return false;
    }
    return true;
}

GroupElement FgAbelianGroup::reduce(GroupElement g) const
{
    for (std::size_t i = 0; i < torsion_.size(); ++i)
        g.coords[rank_ + i] = mod_floor(g.coords[rank_ + i], torsion_[i]);
    return g;
}

GroupElement FgAbelianGroup::add(const GroupElement& a, const GroupElement& b) const
{
    GroupElement c = a;
    for (std::size_t i = 0; i < c.coords.size(); ++i)
        c.coords[i] = checked(static_cast<__int128>(c.coords[i]) + b.coords[i]);
    return reduce(std::move(c));
}

GroupElement FgAbelianGroup::sub(const GroupElement& a, const GroupElement& b) const
{
    return add(a, neg(b));
}

GroupElement FgAbelianGroup::neg(const GroupElement& a) const
{
    GroupElement c = a;
    for (auto& x : c.coords)
        x = -x;
    return reduce(std::move(c));
}

GroupElement FgAbelianGroup::scale(const GroupElement& a, std::int64_t k) const
{
    GroupElement c = a;
    for (auto& x : c.coords)
        x = checked(static_cast<__int128>(x) * k);
    return reduce(std::move(c));
}

std::vector<GroupElement> FgAbelianGroup::elements() const
{
    if (rank_ != 0)
        throw std::domain_error("cannot enumerate an infinite group");
    return box(0);
}

std::vector<GroupElement> FgAbelianGroup::box(std::int64_t radius) const
{
    std::vector<std::int64_t> lo(ngens()), hi(ngens());
    for (std::size_t i = 0; i < rank_; ++i) {
        lo[i] = -radius;
        hi[i] = radius;
    }
    for (std::size_t i = 0; i < torsion_.size(); ++i)
        hi[rank_ + i] = torsion_[i] - 1;
    std::vector<GroupElement> out;
    GroupElement cur{lo};
    for (;;) {
        out.push_back(cur);
        bool advanced = false;
        for (std::size_t k = ngens(); k-- > 0;) {
            if (cur.coords[k] < hi[k]) {
                ++cur.coords[k];
                advanced = true;
                break;
            }
            cur.coords[k] = lo[k];
        }
        if (!advanced)
            break;
    }
    return out;
}

std::string FgAbelianGroup::to_string() const
{
    std::ostringstream os;
    bool first = true;
    if (rank_ > 0) {
        os << "Z";
        if (rank_ > 1)
            os << '^' << rank_;
        first = false;
    }
    for (auto m : torsion_) {
        os << (first ? "" : " x ") << "Z/" << m;
        first = false;
    }
    if (first)
        os << "0";
    return os.str();
}

GroupMorphism::GroupMorphism(FgAbelianGroup domain, FgAbelianGroup codomain,
                             std::vector<std::vector<std::int64_t>> matrix)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), matrix_(std::move(matrix))
{
    if (matrix_.empty() && codomain_.ngens() == 0) {
        // zero-row matrix: nothing to check
    } else if (matrix_.size() != codomain_.ngens()) {
        throw std::invalid_argument("morphism matrix needs " + std::to_string(codomain_.ngens()) + " rows");
    }
    for (const auto& row : matrix_)
        if (row.size() != domain_.ngens())
            throw std::invalid_argument("morphism matrix needs " + std::to_string(domain_.ngens()) + " columns");

    // reduce torsion rows; check that torsion generators land on elements of compatible order
    for (std::size_t i = 0; i < codomain_.torsion().size(); ++i)
        for (auto& x : matrix_[codomain_.rank() + i])
            x = mod_floor(x, codomain_.torsion()[i]);
    for (std::size_t j = 0; j < domain_.torsion().size(); ++j) {
        const std::size_t col = domain_.rank() + j;
        const std::int64_t m = domain_.torsion()[j];
        for (std::size_t r = 0; r < codomain_.ngens(); ++r) {
            const std::int64_t x = matrix_[r][col];
            const bool ok = r < codomain_.rank() ? x == 0
                                                 : (static_cast<__int128>(x) * m) % codomain_.torsion()[r - codomain_.rank()] == 0;
            if (!ok)
                throw std::invalid_argument("morphism not well defined: torsion generator " + std::to_string(col) +
                                            " of order " + std::to_string(m) + " has image of incompatible order");
        }
    }
}

GroupMorphism GroupMorphism::identity(const FgAbelianGroup& g)
{
    std::vector<std::vector<std::int64_t>> m(g.ngens(), std::vector<std::int64_t>(g.ngens(), 0));
    for (std::size_t i = 0; i < g.ngens(); ++i)
        m[i][i] = 1;
    return GroupMorphism(g, g, std::move(m));
}

GroupMorphism GroupMorphism::zero(const FgAbelianGroup& domain, const FgAbelianGroup& codomain)
{
    return GroupMorphism(domain, codomain,
                         std::vector<std::vector<std::int64_t>>(codomain.ngens(),
                                                                std::vector<std::int64_t>(domain.ngens(), 0)));
}

GroupElement GroupMorphism::operator()(const GroupElement& g) const
{
    if (!domain_.contains(g))
        throw std::invalid_argument("element " + g.to_string() + " not in domain " + domain_.to_string());
    GroupElement out = codomain_.zero();
    for (std::size_t r = 0; r < codomain_.ngens(); ++r) {
        __int128 acc = 0;
        for (std::size_t c = 0; c < domain_.ngens(); ++c)
            acc += static_cast<__int128>(matrix_[r][c]) * g.coords[c];
        out.coords[r] = checked(acc);
    }
    return codomain_.reduce(std::move(out));
}

GroupMorphism GroupMorphism::compose(const GroupMorphism& other) const
{
    if (!(other.codomain_ == domain_))
        throw std::invalid_argument("compose: codomain/domain mismatch");
    std::vector<std::vector<std::int64_t>> m(codomain_.ngens(), std::vector<std::int64_t>(other.domain_.ngens(), 0));
    for (std::size_t c = 0; c < other.domain_.ngens(); ++c) {
        GroupElement img = (*this)(other(other.domain_.generator(c)));
        for (std::size_t r = 0; r < codomain_.ngens(); ++r)
            m[r][c] = img.coords[r];
    }
    return GroupMorphism(other.domain_, codomain_, std::move(m));
}

bool GroupMorphism::is_identity() const { return domain_ == codomain_ && *this == identity(domain_); }

bool GroupMorphism::is_zero() const
{
    for (const auto& row : matrix_)
        for (auto x : row)
            if (x != 0)
                return false;
    return true;
}

std::string GroupMorphism::to_string() const
{
    std::ostringstream os;
    os << domain_.to_string() << " -> " << codomain_.to_string() << " [";
    for (std::size_t r = 0; r < matrix_.size(); ++r) {
        os << (r ? ", [" : "[");
        for (std::size_t c = 0; c < matrix_[r].size(); ++c)
            os << (c ? "," : "") << matrix_[r][c];
        os << ']';
    }
    os << ']';
    return os.str();
}

GroupKernel kernel(const GroupMorphism& phi)
{
    const auto& dom = phi.domain();
    const std::size_t n = dom.ngens();

    // generators of the lattice K = {x in Z^n : phi(x) = 0}: integer kernel of the lifted system,
    // together with the domain's own torsion relations
    const IntMatrix b = lifted_system(phi);
    const SmithForm sb = smith_normal_form(b);
    std::vector<std::vector<mpz_class>> gens;
    for (std::size_t j = sb.rank(); j < b.cols(); ++j) {
        std::vector<mpz_class> v(n);
        for (std::size_t i = 0; i < n; ++i)
            v[i] = sb.V(i, j);
        gens.push_back(std::move(v));
    }
    for (std::size_t i = 0; i < dom.torsion().size(); ++i) {
        std::vector<mpz_class> v(n);
        v[dom.rank() + i] = static_cast<long>(dom.torsion()[i]);
        gens.push_back(std::move(v));
    }

    // basis of K: columns of U^{-1} D for the nonzero invariant factors
    IntMatrix gm(n, gens.size());
    for (std::size_t j = 0; j < gens.size(); ++j)
        for (std::size_t i = 0; i < n; ++i)
            gm(i, j) = gens[j][i];
    const SmithForm sg = smith_normal_form(gm);
    const std::size_t q = sg.rank();
    IntMatrix basis(n, q);
    for (std::size_t j = 0; j < q; ++j)
        for (std::size_t i = 0; i < n; ++i)
            basis(i, j) = sg.U_inv(i, j) * sg.D(j, j);

    // the torsion relations of the domain, written in that basis
    const std::size_t s = dom.torsion().size();
    IntMatrix rel(q, s);
    for (std::size_t k = 0; k < s; ++k) {
        const std::size_t col = dom.rank() + k;
        for (std::size_t j = 0; j < q; ++j) {
            mpz_class y = sg.U(j, col) * dom.torsion()[k];
            mpz_class qt;
            mpz_divexact(qt.get_mpz_t(), y.get_mpz_t(), sg.D(j, j).get_mpz_t());
            rel(j, k) = qt;
        }
    }

    // L = Z^q / rel; canonical generators from U2^{-1}
    const SmithForm sr = smith_normal_form(rel);
    const std::size_t r2 = sr.rank();
    std::vector<std::size_t> order;
    std::vector<std::int64_t> torsion;
    for (std::size_t j = r2; j < q; ++j)
        order.push_back(j);
    for (std::size_t j = 0; j < r2; ++j)
        if (sr.D(j, j) != 1) {
            order.push_back(j);
            torsion.push_back(to_int64(sr.D(j, j)));
        }
    FgAbelianGroup L(q - r2, torsion);

    std::vector<std::vector<std::int64_t>> incl(n, std::vector<std::int64_t>(order.size(), 0));
    for (std::size_t c = 0; c < order.size(); ++c) {
        const std::size_t j = order[c];
        GroupElement g = dom.zero();
        for (std::size_t i = 0; i < n; ++i) {
            mpz_class acc = 0;
            for (std::size_t t = 0; t < q; ++t)
                acc += basis(i, t) * sr.U_inv(t, j);
            if (i >= dom.rank())
                acc = acc % dom.torsion()[i - dom.rank()];
            g.coords[i] = to_int64(acc);
        }
        g = dom.reduce(std::move(g));
        for (std::size_t i = 0; i < n; ++i)
            incl[i][c] = g.coords[i];
    }
    return GroupKernel{L, GroupMorphism(L, dom, std::move(incl))};
}

std::optional<GroupElement> preimage(const GroupMorphism& phi, const GroupElement& h)
{
    const auto& cod = phi.codomain();
    if (!cod.contains(h))
        throw std::invalid_argument("preimage: element not in codomain");
    const IntMatrix b = lifted_system(phi);
    const SmithForm sb = smith_normal_form(b);
    const std::size_t m = b.rows();
    std::vector<mpz_class> rhs(m);
    for (std::size_t i = 0; i < m; ++i) {
        mpz_class acc = 0;
        for (std::size_t k = 0; k < m; ++k)
            acc += sb.U(i, k) * h.coords[k];
        rhs[i] = acc;
    }
    std::vector<mpz_class> z(b.cols());
    const std::size_t r = sb.rank();
    for (std::size_t i = 0; i < m; ++i) {
        if (i < r) {
            if (rhs[i] % sb.D(i, i) != 0)
                return std::nullopt;
            mpz_divexact(z[i].get_mpz_t(), rhs[i].get_mpz_t(), sb.D(i, i).get_mpz_t());
        } else if (rhs[i] != 0) {
            return std::nullopt;
        }
    }
    const auto& dom = phi.domain();
    GroupElement g = dom.zero();
    for (std::size_t i = 0; i < dom.ngens(); ++i) {
        mpz_class acc = 0;
        for (std::size_t k = 0; k < b.cols(); ++k)
            acc += sb.V(i, k) * z[k];
        if (i >= dom.rank())
            acc = acc % dom.torsion()[i - dom.rank()];
        g.coords[i] = to_int64(acc);
    }
    return dom.reduce(std::move(g));
}

std::vector<GroupElement> fiber_elements(const GroupMorphism& phi, const GroupElement& h,
                                         const std::vector<GroupElement>& support)
{
    std::vector<GroupElement> out;
    for (const auto& g : support)
        if (phi(g) == h)
            out.push_back(g);
    return out;
}

std::vector<GroupElement> fiber_elements(const GroupMorphism& phi, const GroupElement& h)
{
    const GroupKernel k = kernel(phi);
    if (!k.group.is_finite())
        throw std::domain_error("infinite fiber; supply a support set");
    auto base = preimage(phi, h);
    if (!base)
        return {};
    std::vector<GroupElement> out;
    for (const auto& l : k.group.elements())
        out.push_back(phi.domain().add(*base, k.inclusion(l)));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<GroupElement> kernel_window(const GroupKernel& k, std::int64_t radius)
{
    std::vector<GroupElement> out;
    for (const auto& l : k.group.box(radius))
        out.push_back(k.inclusion(l));
    return out;
}

std::string ExtendedNat::to_string() const { return finite_ ? std::to_string(value_) : "infinity"; }

ExtendedNat cohomological_dimension(const FgAbelianGroup& L, std::uint64_t characteristic)
{
    if (characteristic != 0)
        for (auto m : L.torsion())
            if (static_cast<std::uint64_t>(m) % characteristic == 0)
                return ExtendedNat::infinity();
    return ExtendedNat(static_cast<std::uint64_t>(L.rank()));
}

} // namespace grm
