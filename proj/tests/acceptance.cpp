// Acceptance run: one line per criterion. `grm_acceptance N` runs criterion N alone.
#include "fixtures.hpp"
#include "grm/harness.hpp"
#include "grm/smith.hpp"

#include <bit>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <set>

using namespace grm;
using namespace fixtures;

namespace {

struct Verdict {
    bool ok = true;
    std::string detail;
    std::size_t failures = 0;
    std::string first;

    void require(bool cond, const std::string& what)
    {
        if (cond)
            return;
        if (!failures++)
            first = what;
        ok = false;
    }
    void require(const CheckList& c, const std::string& what)
    {
        if (const Check* f = c.first_failure())
            require(false, what + ": " + f->name + (f->detail.empty() ? "" : " (" + f->detail + ")"));
    }
};

constexpr std::uint64_t seed = 20261017;

GroupElement el(const FgAbelianGroup& G, std::vector<std::int64_t> c) { return G.element(std::move(c)); }

AlgebraPtr kronecker_z4()
{
    const auto G = Zmod(4);
    QuiverPresentation q{Field::rationals(), G, {"1", "2"}, {{"alpha", 0, 1, el(G, {1})}, {"beta", 0, 1, el(G, {2})}}, {}};
    return std::make_shared<const GradedAlgebra>(compile_quiver(q, 16));
}

// (vertex, phi(shift)) multiset per term
std::vector<std::multiset<std::pair<std::size_t, GroupElement>>> pushed_terms(const Resolution& r,
                                                                            const GroupMorphism* phi)
{
    std::vector<std::multiset<std::pair<std::size_t, GroupElement>>> out;
    for (const auto& t : r.terms) {
        out.emplace_back();
        for (const auto& p : t)
            out.back().emplace(p.vertex, phi ? (*phi)(p.shift) : p.shift);
    }
    return out;
}

Verdict pid_examples()
{
    Verdict v;
    const auto f = injective_dimensions({{{PidAtom::Kind::F, 0, 0}}});
    const auto l = injective_dimensions({{{PidAtom::Kind::L, 0, 0}}});
    v.require(f.graded == DimensionVerdict::exact(1) && f.ungraded == DimensionVerdict::exact(1),
              "k[t] gives " + f.graded.to_string() + ", " + f.ungraded.to_string());
    v.require(l.graded == DimensionVerdict::exact(0) && l.ungraded == DimensionVerdict::exact(1),
              "k[t,t^-1] gives " + l.graded.to_string() + ", " + l.ungraded.to_string());
    const CheckList s = verify_sharpness();
    v.require(s, "sharpness");
    bool left = false, right = false;
    for (const auto& c : s.checks) {
        left |= c.name == "k[t]: left inequality is an equality" && c.outcome == Outcome::pass;
        right |= c.name == "k[t,t^-1]: right inequality is an equality" && c.outcome == Outcome::pass;
    }
    v.require(left && right, "sharpness flags missing");
    v.detail = "k[t] -> (1,1), k[t,t^-1] -> (0,1), both flags set";
    return v;
}

Verdict inequality_campaign()
{
    Verdict v;
    struct Case {
        std::string name;
        AlgebraPtr a;
        GroupMorphism phi;
        std::size_t max_dim;
        std::int64_t radius;
    };
    const std::vector<Case> cases{
        {"k[x]/(x^2), identity", dual_numbers_Z(), GroupMorphism::identity(Z()), 5, 2},
        {"k[x]/(x^2), Z -> 0", dual_numbers_Z(), to_zero(Z()), 5, 2},
        {"Kronecker, identity", kronecker(), GroupMorphism::identity(Z2()), 6, 1},
        {"Kronecker, sum", kronecker(), sum_map(), 6, 1},
        {"square, identity", commutative_square(), GroupMorphism::identity(Z2()), 6, 1},
        {"square, sum", commutative_square(), sum_map(), 6, 1},
    };
    const std::size_t per_case = 10, cap = 8;
    std::size_t modules = 0, exact = 0;
    for (std::size_t ci = 0; ci < cases.size(); ++ci) {
        const auto& c = cases[ci];
        const auto op = std::make_shared<const GradedAlgebra>(c.a->opposite());
        const AlgebraPtr pushed = pushforward(c.a, c.phi);
        const auto pushed_op = std::make_shared<const GradedAlgebra>(pushed->opposite());
        for (std::size_t i = 0; i < per_case; ++i) {
            const auto m = share(random_module(c.a, seed + 97 * ci + i, c.max_dim, c.radius));
            ++modules;
            const std::string tag = c.name + " #" + std::to_string(i);
            v.require(validate(*m).ok(), tag + ": invalid random module");
            const InequalityReport rep = verify_inequality(m, c.phi, cap);
            v.require(rep.checks, tag);
            if (rep.source.is_exact() && rep.regraded.is_exact()) {
                ++exact;
                v.require(rep.source == rep.regraded, tag + ": d_G != d_G'");
            }
            // minimal coresolutions: regrading the terms of dual(m) gives those of dual(phi_! m)
            const Resolution a = minimal_resolution(share(dual(*m, op)), cap);
            const Resolution b = minimal_resolution(share(dual(pushforward(*m, c.phi, pushed), pushed_op)), cap);
            v.require(a.status == b.status && pushed_terms(a, &c.phi) == pushed_terms(b, nullptr),
                      tag + ": minimal terms differ after regrading");
        }
    }
    const Document doc = load_document(std::string(GRM_SOURCE_DIR) + "/fixtures/campaign.yaml");
    const Report rep = run_campaign(doc, {seed, cap, 4});
    v.require(!rep.failed(), "fixture campaign failed");
    std::size_t doc_modules = 0;
    for (const auto& j : doc.jobs)
        doc_modules += std::stoul(j.params.at("count"));
    v.require(modules >= 50 && doc_modules >= 50, "fewer than 50 modules");
    v.require(exact >= 25, "only " + std::to_string(exact) + " exact pairs");
    v.detail = std::to_string(modules) + " modules (+" + std::to_string(doc_modules) + " via campaign), " +
               std::to_string(exact) + " exact pairs, 3 algebras, 4 morphisms";
    return v;
}

Verdict adjunction_suite()
{
    Verdict v;
    const std::vector<std::pair<std::string, AlgebraPtr>> algebras{
        {"k[x]/(x^2) over Z/4", dual_numbers(Zmod(4), el(Zmod(4), {1}))}, {"Kronecker over Z/4", kronecker_z4()}};
    const std::vector<std::pair<std::string, GroupMorphism>> maps{{"Z/4 -> Z/2", z4_to_z2()},
                                                                   {"identity", GroupMorphism::identity(Zmod(4))}};
    std::size_t pairs = 0;
    for (std::size_t ai = 0; ai < algebras.size(); ++ai)
        for (std::size_t mi = 0; mi < maps.size(); ++mi) {
            const auto& a = algebras[ai].second;
            const auto& phi = maps[mi].second;
            const AlgebraPtr pushed = pushforward(a, phi);
            for (std::size_t i = 0; i < 6; ++i) {
                const std::uint64_t s = seed + 1000 * ai + 100 * mi + 2 * i;
                const auto m = share(random_module(a, s, 4, 0));
                const auto n = share(random_module(pushed, s + 1, 4, 0));
                const std::string tag = algebras[ai].first + ", " + maps[mi].first + " #" + std::to_string(i);
                const AdjunctionWitness w = adjunction_witness(m, n, phi);
                ++pairs;
                v.require(w.checks, tag);
                std::size_t triangles = 0;
                for (const auto& c : w.checks.checks)
                    triangles += c.name.starts_with("triangle identity") && c.outcome == Outcome::pass;
                v.require(triangles == 2, tag + ": triangle identities not both verified");
                // Hom dimensions straight from the graded-core solver
                const auto pm = share(pushforward(*m, phi, pushed));
                const auto pn = share(pullback_finite(*n, phi, a));
                const auto cm = share(coinduction(*m, phi, pushed));
                v.require(hom_dimension(pm, n) == hom_dimension(m, pn), tag + ": left Hom dimensions differ");
                v.require(hom_dimension(pn, m) == hom_dimension(n, cm), tag + ": right Hom dimensions differ");
            }
        }
    v.require(pairs >= 20, "fewer than 20 pairs");
    v.detail = std::to_string(pairs) + " pairs, Hom equalities and both triangle identities exact";
    return v;
}

Verdict decomposition_lemma()
{
    Verdict v;
    std::size_t finite = 0, windowed = 0;
    const auto z4 = Zmod(4);
    const std::vector<std::pair<AlgebraPtr, GroupMorphism>> cases{
        {dual_numbers(z4, el(z4, {1})), z4_to_z2()},
        {dual_numbers(z4, el(z4, {1})), to_zero(z4)},
        {kronecker_z4(), z4_to_z2()},
        {kronecker_z4(), to_zero(z4)},
    };
    for (std::size_t ci = 0; ci < cases.size(); ++ci) {
        const auto& [a, phi] = cases[ci];
        for (std::size_t i = 0; i < 6; ++i) {
            const auto m = share(random_module(a, seed + 31 * ci + i, 5, 0));
            const Decomposition d = decomposition_iso(m, phi);
            const std::string tag = "finite case " + std::to_string(ci) + " #" + std::to_string(i);
            v.require(d.checks, tag);
            // dim (phi^* phi_! m)_g = sum of dim m_g' over phi(g') = phi(g)
            const auto md = m->graded_dimension();
            for (const auto& g : a->group().elements()) {
                std::size_t expect = 0;
                for (const auto& [h, k] : md)
                    expect += phi(h) == phi(g) ? k : 0;
                v.require(d.target->component_dim(g) == expect, tag + ": fiber count at " + g.to_string());
                v.require(d.source->component_dim(g) == expect, tag + ": sum of shifts at " + g.to_string());
            }
            ++finite;
        }
    }
    for (const auto& a : {kronecker(), commutative_square()})
        for (std::size_t i = 0; i < 5; ++i) {
            const auto m = share(random_module(a, seed + 500 + i, 5, 1));
            const WindowedDecomposition w = decomposition_window(m, sum_map(), 4);
            v.require(w.checks, "window #" + std::to_string(i));
            v.require(!w.interior.empty(), "empty window interior");
            ++windowed;
        }
    {
        const auto m = share(random_module(dual_numbers_Z(), seed + 600, 4, 2));
        v.require(decomposition_window(m, to_zero(Z()), 4).checks, "window over Z -> 0");
        ++windowed;
    }
    v.require(finite >= 20, "fewer than 20 finite-kernel instances");
    v.detail = std::to_string(finite) + " finite-kernel isomorphisms, " + std::to_string(windowed) +
               " Z-kernel windows at W = 4";
    return v;
}

Verdict rank1_resolution()
{
    Verdict v;
    std::size_t targets = 0;
    struct Case {
        AlgebraPtr a;
        GroupMorphism phi;
    };
    const std::vector<Case> cases{{kronecker(), sum_map()}, {commutative_square(), sum_map()},
                                  {dual_numbers_Z(), to_zero(Z())}};
    for (std::size_t ci = 0; ci < cases.size(); ++ci) {
        const auto& [a, phi] = cases[ci];
        const AlgebraPtr pushed = pushforward(a, phi);
        const auto& H = phi.codomain();
        std::vector<ModulePtr> ns;
        for (std::size_t vtx = 0; vtx < pushed->idempotents().size(); ++vtx) {
            ns.push_back(share(simple_module(pushed, vtx, H.zero())));
            ns.push_back(share(indecomposable_projective(pushed, vtx, H.zero())));
        }
        for (std::size_t i = 0; i < 2; ++i)
            ns.push_back(share(random_module(pushed, seed + 700 + 10 * ci + i, 4, 1)));
        for (std::size_t t = 0; t < ns.size(); ++t) {
            const std::string tag = "case " + std::to_string(ci) + " target " + std::to_string(t);
            const Rank1Resolution r = rank1_regrade_resolution(ns[t], phi, a, 4);
            v.require(r.checks, tag);
            for (const auto& p : r.pieces)
                v.require(rank(p.augmentation) == ns[t]->component_dim(p.degree) &&
                              (p.augmentation * p.differential).is_zero(),
                          tag + ": piece at " + p.degree.to_string());
            ++targets;
        }
    }
    v.require(targets >= 10, "fewer than 10 targets");
    v.detail = std::to_string(targets) + " targets at W = 4, exact at the target and on the interior";
    return v;
}

Verdict acyclicity()
{
    Verdict v;
    struct Case {
        std::string name;
        AlgebraPtr a;
        std::vector<GroupMorphism> maps;
    };
    const auto z4 = Zmod(4);
    const std::vector<Case> cases{
        {"k[x]/(x^2) over Z", dual_numbers_Z(), {GroupMorphism::identity(Z()), to_zero(Z())}},
        {"Kronecker", kronecker(), {GroupMorphism::identity(Z2()), sum_map(), to_zero(Z2())}},
        {"square", commutative_square(), {GroupMorphism::identity(Z2()), sum_map(), to_zero(Z2())}},
        {"k[x]/(x^2) over Z/4", dual_numbers(z4, el(z4, {1})), {GroupMorphism::identity(z4), z4_to_z2(), to_zero(z4)}},
    };
    std::size_t triples = 0;
    for (const auto& c : cases) {
        const auto inj = indecomposable_injectives(c.a);
        const auto& G = c.a->group();
        std::vector<GroupElement> degrees{G.zero()};
        degrees.push_back(G.is_finite() ? G.elements().back() : G.generator(0));
        for (const auto& phi : c.maps)
            for (std::size_t s = 0; s < c.a->idempotents().size(); ++s)
                for (const auto& g : degrees)
                    for (std::size_t i = 0; i < inj.size(); ++i) {
                        const auto rep = verify_acyclicity(share(simple_module(c.a, s, g)), share(inj[i]), phi, 6);
                        v.require(rep.checks, c.name + ", S" + std::to_string(s) + "(" + g.to_string() + "), I" +
                                                  std::to_string(i) + ", " + phi.to_string());
                        v.require(rep.ext.size() == 6, c.name + ": wrong Ext range");
                        ++triples;
                    }
    }
    v.detail = std::to_string(triples) + " (simple, injective, phi) triples, Ext^1..6 = 0";
    return v;
}

Verdict resolution_independence()
{
    Verdict v;
    std::size_t instances = 0, nonzero = 0;
    const std::vector<AlgebraPtr> algebras{dual_numbers_Z(), kronecker(), commutative_square(),
                                           dual_numbers(Zmod(4), el(Zmod(4), {1}))};
    for (std::size_t ai = 0; ai < algebras.size(); ++ai)
        for (std::size_t i = 0; i < 6; ++i) {
            const auto& a = algebras[ai];
            const auto m = share(random_module(a, seed + 900 + 20 * ai + 2 * i, 4, 1));
            const auto n = share(random_module(a, seed + 901 + 20 * ai + 2 * i, 4, 1));
            const Resolution rm = minimal_resolution(m, 4), rn = nonminimal_resolution(m, 4);
            for (const auto& g : a->group().box(3)) {
                const auto ng = share(shift(*n, g));
                const auto x = ext_dimensions(rm, ng);
                const auto y = ext_dimensions(rn, ng);
                v.require(x == y, "algebra " + std::to_string(ai) + " #" + std::to_string(i) + " shift " + g.to_string());
                v.require(x[0] == hom_dimension(m, ng), "Ext^0 differs from Hom");
                nonzero += std::accumulate(x.begin() + 1, x.end(), std::size_t(0)) > 0;
            }
            ++instances;
        }
    // simples against shifted simples, where higher Ext lives
    for (std::size_t ai = 0; ai < algebras.size(); ++ai) {
        const auto& a = algebras[ai];
        const auto& G = a->group();
        for (std::size_t s = 0; s < a->idempotents().size(); ++s) {
            const auto m = share(simple_module(a, s, G.zero()));
            const Resolution rm = minimal_resolution(m, 4), rn = nonminimal_resolution(m, 4);
            for (std::size_t t = 0; t < a->idempotents().size(); ++t)
                for (const auto& g : G.box(4)) {
                    const auto n = share(simple_module(a, t, g));
                    const auto x = ext_dimensions(rm, n);
                    v.require(x == ext_dimensions(rn, n), "simples S" + std::to_string(s) + ", S" + std::to_string(t) +
                                                               "(" + g.to_string() + ")");
                    nonzero += std::accumulate(x.begin() + 1, x.end(), std::size_t(0)) > 0;
                }
            ++instances;
        }
    }
    // Euler form on the Kronecker quiver, shift by shift
    const auto k = kronecker();
    for (std::size_t i = 0; i < 4; ++i) {
        const auto m = share(random_module(k, seed + 950 + i, 4, 1));
        const auto n = share(random_module(k, seed + 960 + i, 4, 1));
        const auto x = ext_dimensions(nonminimal_resolution(m, 2), n);
        long euler = 0;
        // <M,N> = sum_v m_v n_v - sum_arrows m_s(a) n_t(a), degreewise along arrow degrees
        auto dimv = [](const ModulePtr& mm, std::size_t vtx, const GroupElement& g) {
            std::size_t c = 0;
            for (auto b : mm->component(g))
                c += !Field::is_zero(mm->action(vtx)(b, b));
            return static_cast<long>(c);
        };
        std::set<GroupElement> degs;
        for (const auto& g : m->support())
            degs.insert(g);
        for (const auto& g : degs) {
            euler += dimv(m, 0, g) * dimv(n, 0, g) + dimv(m, 1, g) * dimv(n, 1, g);
            euler -= dimv(m, 0, g) * dimv(n, 1, Z2().add(g, Z2().element({1, 0})));
            euler -= dimv(m, 0, g) * dimv(n, 1, Z2().add(g, Z2().element({0, 1})));
        }
        v.require(static_cast<long>(x[0]) - static_cast<long>(x[1]) == euler && x[2] == 0, "Euler form");
        ++instances;
    }
    v.require(instances >= 20, "fewer than 20 instances");
    v.require(nonzero >= 20, "only " + std::to_string(nonzero) + " shifted pairs with nonzero higher Ext");
    v.detail = std::to_string(instances) + " instances, i <= 4, " + std::to_string(nonzero) +
               " shifted pairs with nonzero higher Ext";
    return v;
}

mpz_class minor_gcd(const IntMatrix& m, std::size_t k)
{
    mpz_class g = 0;
    std::vector<std::size_t> rows(k), cols(k);
    std::function<void(std::size_t, std::size_t)> pick_cols;
    std::function<void(std::size_t, std::size_t)> pick_rows = [&](std::size_t at, std::size_t from) {
        if (at == k)
            return pick_cols(0, 0);
        for (std::size_t r = from; r < m.rows(); ++r) {
            rows[at] = r;
            pick_rows(at + 1, r + 1);
        }
    };
    pick_cols = [&](std::size_t at, std::size_t from) {
        if (at == k) {
            IntMatrix s(k, k);
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j)
                    s(i, j) = m(rows[i], cols[j]);
            mpz_class d = determinant(s);
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
            return;
        }
        for (std::size_t c = from; c < m.cols(); ++c) {
            cols[at] = c;
            pick_cols(at + 1, c + 1);
        }
    };
    pick_rows(0, 0);
    return g;
}

// Windowed Koszul complexes over R = k[Z^r], one component R e_S per subset S, each component a box of
// Laurent monomials. The chain complex K (resolution of k) shrinks S along t_j - 1 and gives the e_S box
// range [-w, w] in coordinates j in S and [-w, w + 1] elsewhere; the cochain complex Hom_R(K, R) grows S
// with the ranges swapped. Either way it is a tensor power of R_[-w,w] -> R_[-w,w+1], so the window
// keeps the homology of the untruncated complex.
struct KoszulWindow {
    std::vector<std::size_t> dims; // by |S|
    std::vector<Matrix> d;          // chain: d[i] : K_i -> K_{i-1}; cochain: d[i] : C^{i-1} -> C^i
};

KoszulWindow koszul(std::size_t r, std::int64_t w, const Field& f, bool cochain)
{
    auto box = [&](unsigned S) {
        std::vector<std::vector<std::int64_t>> pts{{}};
        for (std::size_t j = 0; j < r; ++j) {
            const bool in = (S >> j) & 1;
            const std::int64_t hi = in != cochain ? w : w + 1;
            std::vector<std::vector<std::int64_t>> next;
            for (const auto& p : pts)
                for (std::int64_t x = -w; x <= hi; ++x) {
                    next.push_back(p);
                    next.back().push_back(x);
                }
            pts = std::move(next);
        }
        return pts;
    };
    std::vector<std::map<std::pair<unsigned, std::vector<std::int64_t>>, std::size_t>> index(r + 1);
    KoszulWindow out;
    out.dims.assign(r + 1, 0);
    for (unsigned S = 0; S < (1u << r); ++S)
        for (const auto& p : box(S))
            index[std::popcount(S)][{S, p}] = out.dims[std::popcount(S)]++;
    out.d.resize(r + 1);
    for (std::size_t i = 1; i <= r; ++i) {
        // chain maps e_S (|S| = i) down, cochain maps e_T (|T| = i - 1) up
        Matrix m = cochain ? Matrix(out.dims[i], out.dims[i - 1], f) : Matrix(out.dims[i - 1], out.dims[i], f);
        for (const auto& [key, col] : index[cochain ? i - 1 : i]) {
            const auto& [S, p] = key;
            int sign = 1;
            for (std::size_t j = 0; j < r; ++j) {
                if (((S >> j) & 1) == (cochain ? 1u : 0u))
                    continue;
                const unsigned T = S ^ (1u << j);
                auto up = p;
                ++up[j];
                const auto& target = index[cochain ? i : i - 1];
                const std::size_t hi = target.at({T, up}), lo = target.at({T, p});
                m.set(hi, col, f.add(m(hi, col), f.from_int(sign)));
                m.set(lo, col, f.add(m(lo, col), f.from_int(-sign)));
                sign = -sign;
            }
        }
        out.d[i] = m;
    }
    return out;
}

// (co)homology dimension at each degree
std::vector<std::size_t> homology(const KoszulWindow& k)
{
    const std::size_t r = k.dims.size() - 1;
    std::vector<std::size_t> rk(r + 2, 0);
    for (std::size_t i = 1; i <= r; ++i)
        rk[i] = rank(k.d[i]);
    std::vector<std::size_t> h;
    for (std::size_t i = 0; i <= r; ++i)
        h.push_back(k.dims[i] - rk[i] - rk[i + 1]);
    return h;
}

// resolution-based cd of Z^r: the Koszul complex resolves k, and Ext^i(k, R) vanishes below r but not at r
std::optional<std::size_t> free_abelian_cd(std::size_t r, const Field& f)
{
    const KoszulWindow k = koszul(r, 3, f, false), c = koszul(r, 3, f, true);
    for (std::size_t i = 2; i <= r; ++i)
        if (!(k.d[i - 1] * k.d[i]).is_zero() || !(c.d[i] * c.d[i - 1]).is_zero())
            return std::nullopt;
    const auto h = homology(k), e = homology(c);
    if (h[0] != 1 || e[r] == 0)
        return std::nullopt;
    for (std::size_t i = 1; i <= r; ++i)
        if (h[i] != 0 || e[i - 1] != 0)
            return std::nullopt;
    return r;
}

AlgebraPtr group_algebra_z2_char3()
{
    // idempotent basis e0 = (1 + g)/2, e1 = (1 - g)/2 of F_3[Z/2]
    const Field f = Field::prime(3);
    const auto G = FgAbelianGroup(0);
    std::vector<AlgebraBasisElement> basis{{"e0", G.zero()}, {"e1", G.zero()}};
    std::vector<Matrix> left{Matrix({{1, 0}, {0, 0}}, f), Matrix({{0, 0}, {0, 1}}, f)};
    GradedAlgebra a(f, G, basis, left, Vector{Scalar(1), Scalar(1)});
    a.set_radical({});
    a.set_idempotents({0, 1});
    return std::make_shared<const GradedAlgebra>(std::move(a));
}

Verdict infrastructure()
{
    Verdict v;
    std::mt19937_64 rng(seed);
    for (int t = 0; t < 100; ++t) {
        const std::size_t rows = 1 + rng() % 6, cols = 1 + rng() % 6;
        IntMatrix m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j)
                m(i, j) = static_cast<long>(rng() % 41) - 20;
        const SmithForm s = smith_normal_form(m);
        const std::string tag = "SNF #" + std::to_string(t);
        v.require(s.U * m * s.V == s.D, tag + ": U M V != D");
        v.require(abs(determinant(s.U)) == 1 && abs(determinant(s.V)) == 1, tag + ": not unimodular");
        v.require(s.U * s.U_inv == IntMatrix::identity(rows) && s.V * s.V_inv == IntMatrix::identity(cols),
                  tag + ": inverses");
        const auto diag = s.diagonal();
        mpz_class prod = 1;
        for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
            if (k <= diag.size())
                prod *= diag[k - 1];
            else
                prod = 0;
            v.require(prod == minor_gcd(m, k), tag + ": determinantal divisor " + std::to_string(k));
            if (k < diag.size() && diag[k - 1] != 0)
                v.require(diag[k] % diag[k - 1] == 0, tag + ": divisibility");
        }
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j)
                v.require(i == j || s.D(i, j) == 0, tag + ": off-diagonal entry");
    }

    for (std::uint64_t p : {2, 3}) {
        const Field f = Field::prime(p);
        for (std::size_t r = 0; r <= 2; ++r) {
            const auto oracle = free_abelian_cd(r, f);
            const ExtendedNat cd = cohomological_dimension(FgAbelianGroup(r), p);
            v.require(oracle && cd == ExtendedNat(*oracle),
                      "cd(Z^" + std::to_string(r) + ") in char " + std::to_string(p) + " is " + cd.to_string());
        }
    }
    // the trivial group through the engine: k over k is projective
    {
        const Field f = Field::prime(3);
        const auto G = FgAbelianGroup(0);
        GradedAlgebra k(f, G, {{"1", G.zero()}}, {Matrix::identity(1, f)}, Vector{Scalar(1)});
        k.set_radical({});
        k.set_idempotents({0});
        const auto a = std::make_shared<const GradedAlgebra>(std::move(k));
        v.require(projective_dimension(share(simple_module(a, 0, G.zero())), 8) == DimensionVerdict::exact(0),
                  "trivial group resolution");
    }
    // Z/2 in char 3: semisimple group algebra, the trivial module (g acting by 1) is projective
    {
        const auto a = group_algebra_z2_char3();
        const auto triv = share(simple_module(a, 0, FgAbelianGroup(0).zero()));
        const auto pd = projective_dimension(triv, 8);
        v.require(pd == DimensionVerdict::exact(0), "Z/2 char 3 resolution gives " + pd.to_string());
        v.require(cohomological_dimension(Zmod(2), 3) == ExtendedNat(pd.value), "cd(Z/2) in char 3");
    }
    // Z/2 in char 2: k[u]/(u^2), the trivial module has a periodic resolution with one summand per term
    {
        const auto a = group_algebra_z2_char2();
        const auto triv = share(simple_module(a, 0, FgAbelianGroup(0).zero()));
        const Resolution r = minimal_resolution(triv, 8);
        bool periodic = r.status == ResolutionStatus::truncated && r.terms.size() == 9;
        for (const auto& t : r.terms)
            periodic &= t.size() == 1;
        v.require(periodic && r.syzygy->dim() == 1, "Z/2 char 2 resolution is not periodic");
        v.require(cohomological_dimension(Zmod(2), 2).is_infinite(), "cd(Z/2) in char 2");
    }

    const Document doc = load_document(std::string(GRM_SOURCE_DIR) + "/fixtures/campaign.yaml");
    const std::string a = run_campaign(doc, {seed, 8, 4}).to_json();
    const std::string b = run_campaign(doc, {seed, 8, 4}).to_json();
    v.require(a == b, "campaign reports differ between runs");
    v.detail = "100 SNF identities, cd oracles for {0}, Z, Z^2, Z/2 (char 2, 3), byte-identical reports";
    return v;
}

struct Criterion {
    const char* name;
    double budget_seconds;
    Verdict (*run)();
};

} // namespace

int main(int argc, char** argv)
{
    const Criterion all[] = {
        {"pid sharp examples", 1, pid_examples},
        {"inequality campaign", 120, inequality_campaign},
        {"adjunction suite", 60, adjunction_suite},
        {"decomposition lemma", 60, decomposition_lemma},
        {"rank-1 resolution", 60, rank1_resolution},
        {"acyclicity", 120, acyclicity},
        {"resolution independence", 60, resolution_independence},
        {"infrastructure", 60, infrastructure},
    };
    std::set<int> only;
    for (int i = 1; i < argc; ++i)
        only.insert(std::atoi(argv[i]));
    bool ok = true;
    for (int i = 0; i < 8; ++i) {
        if (!only.empty() && !only.count(i + 1))
            continue;
        const auto start = std::chrono::steady_clock::now();
        Verdict v;
        try {
            v = all[i].run();
        } catch (const std::exception& e) {
            v.ok = false;
            v.first = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = secs < all[i].budget_seconds;
        const bool pass = v.ok && in_time;
        ok &= pass;
        std::printf("criterion %d (%s): %s in %.3f s (budget %.0f s); %s\n", i + 1, all[i].name, pass ? "PASS" : "FAIL",
                    secs, all[i].budget_seconds,
                    v.ok ? (in_time ? v.detail.c_str() : "over budget")
                         : (std::to_string(v.failures) + " failures, first: " + v.first).c_str());
    }
    return ok ? 0 : 1;
}
