#include "grm/algebra.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace grm {

namespace {

// Paths of positive length as arrow sequences in traversal order.
using Word = std::vector<std::size_t>;

struct LengthLex {
    bool operator()(const Word& a, const Word& b) const
    {
        if (a.size() != b.size())
            return a.size() < b.size();
        return a < b;
    }
};

using Poly = std::map<Word, Scalar, LengthLex>;

Word concat(const Word& a, const Word& b)
{
    Word w = a;
    w.insert(w.end(), b.begin(), b.end());
    return w;
}

void add_term(Poly& p, const Word& w, const Scalar& c, const Field& f)
{
    auto it = p.find(w);
    if (it == p.end()) {
        if (!Field::is_zero(c))
            p.emplace(w, c);
        return;
    }
    it->second = f.add(it->second, c);
    if (Field::is_zero(it->second))
        p.erase(it);
}

std::optional<std::size_t> find_subword(const Word& w, const Word& u)
{
    if (u.size() > w.size())
        return std::nullopt;
    for (std::size_t k = 0; k + u.size() <= w.size(); ++k)
        if (std::equal(u.begin(), u.end(), w.begin() + static_cast<std::ptrdiff_t>(k)))
            return k;
    return std::nullopt;
}

class RewritingSystem {
public:
    RewritingSystem(Field f, std::size_t cap) : field_(f), cap_(cap) {}

    const Word& leading(std::size_t id) const { return rules_[id].rbegin()->first; }

    Poly reduce(Poly p) const
    {
        Poly done;
        while (!p.empty()) {
            auto top = std::prev(p.end());
            const Word w = top->first;
            const Scalar c = top->second;
            p.erase(top);
            bool rewritten = false;
            for (std::size_t id = 0; id < rules_.size() && !rewritten; ++id) {
                if (!alive_[id])
                    continue;
                const Word& u = leading(id);
                auto pos = find_subword(w, u);
                if (!pos)
                    continue;
                const Word prefix(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(*pos));
                const Word suffix(w.begin() + static_cast<std::ptrdiff_t>(*pos + u.size()), w.end());
                // c * x u y  ->  -c * x (g - u) y
                for (const auto& [t, d] : rules_[id]) {
                    if (t == u)
                        continue;
                    add_term(p, concat(concat(prefix, t), suffix), field_.neg(field_.mul(c, d)), field_);
                }
                rewritten = true;
            }
            if (!rewritten)
                add_term(done, w, c, field_);
        }
        return done;
    }

    void add(Poly p)
    {
        std::vector<Poly> pending{std::move(p)};
        while (!pending.empty()) {
            Poly r = reduce(std::move(pending.back()));
            pending.pop_back();
            if (r.empty())
                continue;
            const Scalar lc_inv = field_.inv(r.rbegin()->second);
            for (auto& [w, c] : r)
                c = field_.mul(c, lc_inv);
            const Word lw = r.rbegin()->first;
            if (lw.size() > cap_)
                throw std::runtime_error("possibly infinite-dimensional; raise cap or add relations");
            // rules whose leading word now reduces are retired and re-added after this one
            for (std::size_t id = 0; id < rules_.size(); ++id)
                if (alive_[id] && find_subword(leading(id), lw)) {
                    alive_[id] = false;
                    pending.push_back(rules_[id]);
                }
            const std::size_t id = rules_.size();
            rules_.push_back(std::move(r));
            alive_.push_back(true);
            for (std::size_t other = 0; other <= id; ++other)
                if (alive_[other]) {
                    pairs_.emplace_back(id, other);
                    if (other != id)
                        pairs_.emplace_back(other, id);
                }
        }
    }

    void complete()
    {
        std::size_t budget = 200000;
        while (!pairs_.empty()) {
            if (budget-- == 0)
                throw std::runtime_error("possibly infinite-dimensional; raise cap or add relations");
            auto [i, j] = pairs_.back();
            pairs_.pop_back();
            if (!alive_[i] || !alive_[j])
                continue;
            const Word u = leading(i);
            const Word w = leading(j);
            // proper overlaps: a suffix of u equals a prefix of w
            for (std::size_t s = 1; s < std::min(u.size(), w.size()); ++s) {
                if (!std::equal(u.end() - static_cast<std::ptrdiff_t>(s), u.end(), w.begin()))
                    continue;
                const Word w_tail(w.begin() + static_cast<std::ptrdiff_t>(s), w.end());
                const Word u_head(u.begin(), u.end() - static_cast<std::ptrdiff_t>(s));
                Poly sp;
                for (const auto& [t, c] : rules_[i])
                    add_term(sp, concat(t, w_tail), c, field_);
                for (const auto& [t, c] : rules_[j])
                    add_term(sp, concat(u_head, t), field_.neg(c), field_);
                add(std::move(sp));
                if (!alive_[i] || !alive_[j])
                    break;
            }
        }
    }

    bool reducible(const Word& w) const
    {
        for (std::size_t id = 0; id < rules_.size(); ++id)
            if (alive_[id] && find_subword(w, leading(id)))
                return true;
        return false;
    }

private:
    Field field_;
    std::size_t cap_;
    std::vector<Poly> rules_;
    std::vector<bool> alive_;
    std::vector<std::pair<std::size_t, std::size_t>> pairs_;
};

} // namespace

GradedAlgebra compile_quiver(const QuiverPresentation& q, std::size_t cap)
{
    const Field& f = q.field;
    const auto& G = q.group;
    const std::size_t nv = q.vertices.size();
    if (nv == 0)
        throw std::invalid_argument("quiver has no vertices");
    for (const auto& a : q.arrows) {
        if (a.source >= nv || a.target >= nv)
            throw std::invalid_argument("arrow '" + a.name + "' has an endpoint out of range");
        if (!G.contains(a.degree))
            throw std::invalid_argument("arrow '" + a.name + "' has a degree outside " + G.to_string());
    }

    auto word_degree = [&](const Word& w) {
        GroupElement d = G.zero();
        for (auto x : w)
            d = G.add(d, q.arrows[x].degree);
        return d;
    };
    auto composable = [&](const Word& w) {
        for (std::size_t k = 1; k < w.size(); ++k)
            if (q.arrows[w[k - 1]].target != q.arrows[w[k]].source)
                return false;
        return true;
    };

    RewritingSystem rs(f, cap);
    for (std::size_t r = 0; r < q.relations.size(); ++r) {
        const auto& rel = q.relations[r];
        Poly p;
        std::optional<GroupElement> deg;
        std::optional<std::pair<std::size_t, std::size_t>> ends;
        for (const auto& term : rel.terms) {
            for (auto x : term.arrows)
                if (x >= q.arrows.size())
                    throw std::invalid_argument("relation " + std::to_string(r) + " names an unknown arrow");
            Word w(term.arrows.rbegin(), term.arrows.rend());
            if (w.size() < 2)
                throw std::invalid_argument("relation " + std::to_string(r) +
                                            " is not admissible: every path must have length >= 2");
            if (!composable(w))
                throw std::invalid_argument("relation " + std::to_string(r) + " contains a non-composable path");
            const auto e = std::make_pair(q.arrows[w.front()].source, q.arrows[w.back()].target);
            const GroupElement d = word_degree(w);
            if (deg && (*deg != d || *ends != e))
                throw std::invalid_argument("relation " + std::to_string(r) +
                                            " is not homogeneous: its paths differ in degree or endpoints");
            deg = d;
            ends = e;
            add_term(p, w, f.from_rational(term.coefficient), f);
        }
        rs.add(std::move(p));
    }
    rs.complete();

    // irreducible paths, length by length
    std::vector<Word> paths;
    std::vector<Word> layer;
    for (std::size_t a = 0; a < q.arrows.size(); ++a)
        if (!rs.reducible({a}))
            layer.push_back({a});
    for (std::size_t len = 1; !layer.empty(); ++len) {
        if (len >= cap)
            throw std::runtime_error("possibly infinite-dimensional; raise cap or add relations");
        std::sort(layer.begin(), layer.end());
        paths.insert(paths.end(), layer.begin(), layer.end());
        std::vector<Word> next;
        for (const auto& w : layer)
            for (std::size_t a = 0; a < q.arrows.size(); ++a)
                if (q.arrows[a].source == q.arrows[w.back()].target) {
                    Word ext = w;
                    ext.push_back(a);
                    if (!rs.reducible(ext))
                        next.push_back(std::move(ext));
                }
        layer = std::move(next);
    }

    // basis: vertices first, then irreducible paths in length-lex order
    const std::size_t n = nv + paths.size();
    std::vector<AlgebraBasisElement> basis;
    QuiverData data;
    data.vertices = q.vertices;
    data.arrows = q.arrows;
    data.relations = q.relations;
    data.cap = cap;
    data.arrow_basis.assign(q.arrows.size(), n);
    for (std::size_t v = 0; v < nv; ++v) {
        basis.push_back({"e_" + q.vertices[v], G.zero()});
        data.vertex_basis.push_back(v);
        data.path_source.push_back(v);
        data.path_target.push_back(v);
    }
    std::map<Word, std::size_t> index;
    std::vector<std::vector<std::size_t>> words(n);
    for (std::size_t v = 0; v < nv; ++v)
        words[v] = {v};
    for (std::size_t k = 0; k < paths.size(); ++k) {
        const Word& w = paths[k];
        std::string label;
        for (auto it = w.rbegin(); it != w.rend(); ++it)
            label += (label.empty() ? "" : "*") + q.arrows[*it].name;
        basis.push_back({label, word_degree(w)});
        index[w] = nv + k;
        data.path_source.push_back(q.arrows[w.front()].source);
        data.path_target.push_back(q.arrows[w.back()].target);
        if (w.size() == 1)
            data.arrow_basis[w.front()] = nv + k;
        // product order: last arrow first, then the starting idempotent
        for (auto it = w.rbegin(); it != w.rend(); ++it)
            words[nv + k].push_back(index.at(Word{*it}));
        words[nv + k].push_back(q.arrows[w.front()].source);
    }

    auto to_vector = [&](const Poly& p) {
        Vector v(n);
        for (const auto& [w, c] : p)
            v[index.at(w)] = c;
        return v;
    };

    std::vector<Matrix> left(n, Matrix(n, n, f));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            // a_i * a_j: traverse a_j, then a_i
            if (data.path_target[j] != data.path_source[i])
                continue;
            Vector prod(n);
            if (i < nv) {
                prod[j] = 1;
            } else if (j < nv) {
                prod[i] = 1;
            } else {
                Poly p;
                p.emplace(concat(paths[j - nv], paths[i - nv]), Scalar(1));
                prod = to_vector(rs.reduce(std::move(p)));
            }
            left[i].set_col(j, prod);
        }

    Vector unit(n);
    for (std::size_t v = 0; v < nv; ++v)
        unit[v] = 1;

    GradedAlgebra alg(f, G, std::move(basis), std::move(left), std::move(unit));
    std::vector<std::size_t> radical;
    for (std::size_t i = nv; i < n; ++i)
        radical.push_back(i);
    alg.set_radical(std::move(radical));
    std::vector<std::size_t> idem(nv);
    for (std::size_t v = 0; v < nv; ++v)
        idem[v] = v;
    alg.set_idempotents(idem);
    std::vector<std::size_t> gens = idem;
    for (auto b : data.arrow_basis)
        if (b < n)
            gens.push_back(b);
    alg.set_words(std::move(gens), std::move(words));
    alg.set_quiver(std::move(data));

    const ValidationReport rep = validate(alg);
    if (!rep.ok())
        throw std::invalid_argument("relations not admissible: " + rep.failures.front());
    return alg;
}

} // namespace grm
