#include "grm/harness.hpp"

#include <yaml-cpp/yaml.h>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace grm {

DocumentError::DocumentError(const std::string& section, int line, const std::string& what)
    : std::runtime_error("section '" + section + "', line " + std::to_string(line) + ": " + what),
      section_(section), line_(line)
{
}

namespace {

template <class Map>
const typename Map::mapped_type& lookup(const Map& m, const std::string& name, const char* what)
{
    auto it = m.find(name);
    if (it == m.end())
        throw std::out_of_range("unknown " + std::string(what) + " '" + name + "'");
    return it->second;
}

int line_of(const YAML::Node& n) { return n.Mark().line >= 0 ? n.Mark().line + 1 : 0; }

struct Parser {
    Document doc;
    std::string section;

    [[noreturn]] void fail(const YAML::Node& at, const std::string& what) const
    {
        throw DocumentError(section, line_of(at), what);
    }

    YAML::Node need(const YAML::Node& n, const char* key) const
    {
        if (!n.IsMap())
            fail(n, "expected a mapping");
        YAML::Node v = n[key];
        if (!v)
            fail(n, std::string("missing key '") + key + "'");
        return v;
    }

    template <class T>
    T as(const YAML::Node& n, const char* what) const
    {
        try {
            return n.as<T>();
        } catch (const YAML::Exception&) {
            fail(n, std::string("bad value for ") + what);
        }
    }

    template <class Map>
    const typename Map::mapped_type& ref(const Map& m, const YAML::Node& n, const char* what) const
    {
        const auto name = as<std::string>(n, what);
        auto it = m.find(name);
        if (it == m.end())
            fail(n, "unresolved " + std::string(what) + " reference '" + name + "'");
        return it->second;
    }

    std::vector<std::int64_t> ints(const YAML::Node& n, const char* what) const
    {
        if (!n.IsSequence())
            fail(n, std::string(what) + " must be a list of integers");
        std::vector<std::int64_t> out;
        for (const auto& x : n)
            out.push_back(as<std::int64_t>(x, what));
        return out;
    }

    GroupElement element(const FgAbelianGroup& G, const YAML::Node& n) const
    {
        auto c = ints(n, "degree");
        if (c.size() != G.ngens())
            fail(n, "degree has " + std::to_string(c.size()) + " coordinates, group " + G.to_string() + " needs " +
                        std::to_string(G.ngens()));
        return G.element(std::move(c));
    }

    Matrix matrix(const YAML::Node& n, std::size_t rows, std::size_t cols, const Field& f) const
    {
        if (!n.IsSequence() || n.size() != rows)
            fail(n, "expected a " + std::to_string(rows) + "x" + std::to_string(cols) + " matrix");
        Matrix m(rows, cols, f);
        for (std::size_t r = 0; r < rows; ++r) {
            if (!n[r].IsSequence() || n[r].size() != cols)
                fail(n[r], "row " + std::to_string(r) + " should have " + std::to_string(cols) + " entries");
            for (std::size_t c = 0; c < cols; ++c)
                m.set(r, c, scalar(n[r][c], f));
        }
        return m;
    }

    Scalar scalar(const YAML::Node& n, const Field& f) const
    {
        try {
            return f.from_rational(mpq_class(as<std::string>(n, "scalar")));
        } catch (const std::invalid_argument&) {
            fail(n, "bad scalar '" + n.as<std::string>() + "'");
        }
    }

    Field field(const YAML::Node& n) const
    {
        const auto s = as<std::string>(n, "field");
        if (s == "Q")
            return Field::rationals();
        if (s.size() > 1 && s[0] == 'F') {
            try {
                return Field::prime(std::stoull(s.substr(1)));
            } catch (const std::exception&) {
            }
        }
        fail(n, "field must be Q or F<p> with p prime, got '" + s + "'");
    }

    void groups(const YAML::Node& sec)
    {
        for (const auto& kv : sec) {
            const auto name = kv.first.as<std::string>();
            const YAML::Node& g = kv.second;
            const auto rank = as<std::int64_t>(need(g, "rank"), "rank");
            if (rank < 0)
                fail(g, "rank must be non-negative");
            std::vector<std::int64_t> torsion;
            if (g["torsion"])
                torsion = ints(g["torsion"], "torsion");
            try {
                doc.groups.emplace(name, FgAbelianGroup(static_cast<std::size_t>(rank), torsion));
            } catch (const std::invalid_argument& e) {
                fail(g, "group '" + name + "': " + e.what());
            }
        }
    }

    void morphisms(const YAML::Node& sec)
    {
        for (const auto& kv : sec) {
            const auto name = kv.first.as<std::string>();
            const YAML::Node& m = kv.second;
            const auto& dom = ref(doc.groups, need(m, "domain"), "group");
            const auto& cod = ref(doc.groups, need(m, "codomain"), "group");
            const YAML::Node mat = need(m, "matrix");
            if (!mat.IsSequence())
                fail(mat, "matrix must be a list of rows");
            std::vector<std::vector<std::int64_t>> rows;
            for (const auto& r : mat)
                rows.push_back(ints(r, "matrix row"));
            try {
                doc.morphisms.emplace(name, GroupMorphism(dom, cod, rows));
            } catch (const std::invalid_argument& e) {
                fail(m, "morphism '" + name + "': " + e.what());
            }
        }
    }

    // "c*a - 2*d*b": paths written left to right as composed, c*a is a followed by c
    QuiverRelation relation(const YAML::Node& n, const std::map<std::string, std::size_t>& arrows,
                            const Field& f) const
    {
        std::string s = as<std::string>(n, "relation");
        QuiverRelation rel;
        std::size_t pos = 0;
        while (pos < s.size()) {
            int sign = 1;
            while (pos < s.size() && (s[pos] == ' ' || s[pos] == '+' || s[pos] == '-')) {
                if (s[pos] == '-')
                    sign = -sign;
                ++pos;
            }
            std::size_t end = pos;
            while (end < s.size() && s[end] != '+' && s[end] != '-')
                ++end;
            std::string term = s.substr(pos, end - pos);
            pos = end;
            if (term.find_first_not_of(' ') == std::string::npos)
                fail(n, "empty term in relation '" + s + "'");
            QuiverRelation::Term t{Scalar(sign), {}};
            std::stringstream ss(term);
            std::string tok;
            bool first = true;
            while (std::getline(ss, tok, '*')) {
                tok.erase(0, tok.find_first_not_of(' '));
                tok.erase(tok.find_last_not_of(' ') + 1);
                auto a = arrows.find(tok);
                if (a != arrows.end()) {
                    t.arrows.push_back(a->second);
                } else if (first && !tok.empty() && (std::isdigit(static_cast<unsigned char>(tok[0])))) {
                    try {
                        t.coefficient *= mpq_class(tok);
                    } catch (const std::invalid_argument&) {
                        fail(n, "bad coefficient '" + tok + "'");
                    }
                } else {
                    fail(n, "unknown arrow '" + tok + "' in relation '" + s + "'");
                }
                first = false;
            }
            if (t.arrows.empty())
                fail(n, "relation term without arrows in '" + s + "'");
            t.coefficient = f.from_rational(t.coefficient);
            rel.terms.push_back(std::move(t));
        }
        return rel;
    }

    AlgebraPtr quiver_algebra(const YAML::Node& a, const Field& f, const FgAbelianGroup& G) const
    {
        QuiverPresentation q{f, G, {}, {}, {}};
        std::map<std::string, std::size_t> vidx, aidx;
        for (const auto& v : need(a, "vertices")) {
            const auto name = as<std::string>(v, "vertex");
            if (!vidx.emplace(name, q.vertices.size()).second)
                fail(v, "duplicate vertex '" + name + "'");
            q.vertices.push_back(name);
        }
        if (a["arrows"])
            for (const auto& ar : a["arrows"]) {
                const auto name = as<std::string>(need(ar, "name"), "arrow name");
                auto endpoint = [&](const char* key) {
                    const YAML::Node v = need(ar, key);
                    auto it = vidx.find(as<std::string>(v, key));
                    if (it == vidx.end())
                        fail(v, "unresolved vertex reference '" + v.as<std::string>() + "'");
                    return it->second;
                };
                const auto s = endpoint("source"), t = endpoint("target");
                if (!aidx.emplace(name, q.arrows.size()).second)
                    fail(ar, "duplicate arrow '" + name + "'");
                q.arrows.push_back({name, s, t, element(G, need(ar, "degree"))});
            }
        if (a["relations"])
            for (const auto& r : a["relations"])
                q.relations.push_back(relation(r, aidx, f));
        const std::size_t cap = a["cap"] ? as<std::size_t>(a["cap"], "cap") : 16;
        try {
            return std::make_shared<const GradedAlgebra>(compile_quiver(q, cap));
        } catch (const std::exception& e) {
            fail(a, e.what());
        }
    }

    AlgebraPtr raw_algebra(const YAML::Node& a, const Field& f, const FgAbelianGroup& G) const
    {
        std::vector<AlgebraBasisElement> basis;
        std::map<std::string, std::size_t> idx;
        for (const auto& b : need(a, "basis")) {
            const auto label = as<std::string>(need(b, "label"), "label");
            if (!idx.emplace(label, basis.size()).second)
                fail(b, "duplicate basis label '" + label + "'");
            basis.push_back({label, element(G, need(b, "degree"))});
        }
        const std::size_t n = basis.size();
        const YAML::Node left = need(a, "left");
        std::vector<Matrix> mats(n);
        for (std::size_t i = 0; i < n; ++i) {
            const YAML::Node m = left[basis[i].label];
            if (!m)
                fail(left, "no left multiplication matrix for '" + basis[i].label + "'");
            mats[i] = matrix(m, n, n, f);
        }
        Vector unit(n);
        const YAML::Node u = need(a, "unit");
        if (!u.IsSequence() || u.size() != n)
            fail(u, "unit needs " + std::to_string(n) + " coordinates");
        for (std::size_t i = 0; i < n; ++i)
            unit[i] = scalar(u[i], f);
        auto indices = [&](const char* key) {
            std::vector<std::size_t> out;
            for (const auto& x : need(a, key)) {
                auto it = idx.find(as<std::string>(x, key));
                if (it == idx.end())
                    fail(x, "unresolved basis label '" + x.as<std::string>() + "'");
                out.push_back(it->second);
            }
            return out;
        };
        try {
            GradedAlgebra alg(f, G, std::move(basis), std::move(mats), std::move(unit));
            alg.set_radical(indices("radical"));
            alg.set_idempotents(indices("idempotents"));
            const ValidationReport rep = validate(alg);
            if (!rep.ok())
                fail(a, rep.failures.front());
            return std::make_shared<const GradedAlgebra>(std::move(alg));
        } catch (const std::invalid_argument& e) {
            fail(a, e.what());
        }
    }

    void algebras(const YAML::Node& sec)
    {
        for (const auto& kv : sec) {
            const auto name = kv.first.as<std::string>();
            const YAML::Node& a = kv.second;
            AlgebraPtr alg;
            if (a["pushforward"]) {
                const auto& base = ref(doc.algebras, a["pushforward"], "algebra");
                const auto& phi = ref(doc.morphisms, need(a, "morphism"), "morphism");
                if (!(phi.domain() == base->group()))
                    fail(a, "morphism domain does not match the grading group of '" +
                                a["pushforward"].as<std::string>() + "'");
                alg = pushforward(base, phi);
            } else {
                const Field f = field(need(a, "field"));
                const auto& G = ref(doc.groups, need(a, "group"), "group");
                alg = a["basis"] ? raw_algebra(a, f, G) : quiver_algebra(a, f, G);
            }
            doc.algebras.emplace(name, std::move(alg));
        }
    }

    std::size_t vertex(const AlgebraPtr& a, const YAML::Node& n) const
    {
        const auto name = as<std::string>(n, "vertex");
        if (const auto& q = a->quiver())
            for (std::size_t v = 0; v < q->vertices.size(); ++v)
                if (q->vertices[v] == name)
                    return v;
        if (!a->quiver())
            for (std::size_t v = 0; v < a->idempotents().size(); ++v)
                if (a->label(a->idempotents()[v]) == name)
                    return v;
        fail(n, "unresolved vertex reference '" + name + "'");
    }

    GradedModule explicit_module(const AlgebraPtr& a, const YAML::Node& m) const
    {
        const auto& G = a->group();
        const Field& f = a->field();
        std::vector<GroupElement> degrees;
        std::vector<std::string> labels;
        std::vector<std::size_t> vertices;
        bool idempotent_action = false;
        if (a->quiver() && m["action"])
            for (const auto& kv : m["action"]) {
                auto idx = a->index_of(kv.first.as<std::string>());
                idempotent_action |= idx && *idx < a->quiver()->vertices.size();
            }
        for (const auto& b : need(m, "basis")) {
            if (idempotent_action && b["vertex"])
                fail(b["vertex"], "give either basis vertices or vertex idempotent actions, not both");
            degrees.push_back(element(G, need(b, "degree")));
            labels.push_back(b["label"] ? as<std::string>(b["label"], "label") : "b" + std::to_string(labels.size()));
            if (a->quiver())
                vertices.push_back(b["vertex"] ? vertex(a, b["vertex"]) : 0);
        }
        const std::size_t n = degrees.size();
        std::map<std::size_t, Matrix> gens;
        for (auto g : a->generators())
            gens.emplace(g, Matrix(n, n, f));
        if (a->quiver() && !idempotent_action)
            for (std::size_t i = 0; i < n; ++i)
                gens.at(a->quiver()->vertex_basis[vertices[i]]).set(i, i, Scalar(1));
        if (m["action"])
            for (const auto& kv : m["action"]) {
                const auto label = kv.first.as<std::string>();
                auto idx = a->index_of(label);
                if (!idx || !gens.count(*idx))
                    fail(kv.first, "'" + label + "' is not a generator of the algebra");
                gens[*idx] = matrix(kv.second, n, n, f);
            }
        try {
            return GradedModule::from_generator_action(a, std::move(degrees), gens, std::move(labels));
        } catch (const std::invalid_argument& e) {
            fail(m, e.what());
        }
    }

    void modules(const YAML::Node& sec)
    {
        for (const auto& kv : sec) {
            const auto name = kv.first.as<std::string>();
            const YAML::Node& m = kv.second;
            GradedModule mod;
            try {
                if (m["pushforward"]) {
                    const auto& base = ref(doc.modules, m["pushforward"], "module");
                    const auto& phi = ref(doc.morphisms, need(m, "morphism"), "morphism");
                    if (!(phi.domain() == base->group()))
                        fail(m, "morphism domain does not match the grading of '" +
                                    m["pushforward"].as<std::string>() + "'");
                    AlgebraPtr pushed = pushforward(base->algebra(), phi);
                    for (const auto& [an, alg] : doc.algebras)
                        if (same_algebra(alg, pushed))
                            pushed = alg;
                    mod = pushforward(*base, phi, pushed);
                } else {
                    const auto& a = ref(doc.algebras, need(m, "algebra"), "algebra");
                    const auto& G = a->group();
                    if (m["simple"]) {
                        const YAML::Node s = m["simple"];
                        mod = simple_module(a, vertex(a, need(s, "vertex")),
                                            s["degree"] ? element(G, s["degree"]) : G.zero());
                    } else if (m["projective"] || m["injective"]) {
                        const YAML::Node s = m["projective"] ? m["projective"] : m["injective"];
                        const auto v = vertex(a, need(s, "vertex"));
                        const auto g = s["shift"] ? element(G, s["shift"]) : G.zero();
                        mod = m["projective"] ? indecomposable_projective(a, v, g)
                                              : shift(indecomposable_injectives(a).at(v), g);
                    } else if (m["regular"]) {
                        mod = GradedModule::regular(a);
                    } else if (m["random"]) {
                        const YAML::Node r = m["random"];
                        mod = random_module(a, as<std::uint64_t>(need(r, "seed"), "seed"),
                                            as<std::size_t>(need(r, "max_dim"), "max_dim"),
                                            r["radius"] ? as<std::int64_t>(r["radius"], "radius") : 1);
                    } else {
                        mod = explicit_module(a, m);
                    }
                }
            } catch (const DocumentError&) {
                throw;
            } catch (const std::exception& e) {
                fail(m, "module '" + name + "': " + e.what());
            }
            const ValidationReport rep = validate(mod);
            if (!rep.ok())
                fail(m, "module '" + name + "' is invalid: " + rep.failures.front());
            doc.modules.emplace(name, share(std::move(mod)));
        }
    }

    void pid_modules(const YAML::Node& sec)
    {
        for (const auto& kv : sec) {
            PidGradedModule pm;
            for (const auto& at : kv.second) {
                PidAtom atom;
                const auto k = as<std::string>(need(at, "atom"), "atom");
                if (k == "F")
                    atom.kind = PidAtom::Kind::F;
                else if (k == "L")
                    atom.kind = PidAtom::Kind::L;
                else if (k == "T")
                    atom.kind = PidAtom::Kind::T;
                else
                    fail(at, "atom must be F, L or T, got '" + k + "'");
                if (atom.kind == PidAtom::Kind::T) {
                    const auto m = as<std::int64_t>(need(at, "m"), "m");
                    if (m < 1)
                        fail(at, "T atom needs m >= 1");
                    atom.m = static_cast<std::uint32_t>(m);
                }
                if (at["shift"])
                    atom.shift = as<std::int64_t>(at["shift"], "shift");
                pm.atoms.push_back(atom);
            }
            doc.pid_modules.emplace(kv.first.as<std::string>(), std::move(pm));
        }
    }

    void jobs(const YAML::Node& sec)
    {
        if (!sec.IsSequence())
            fail(sec, "jobs must be a list");
        std::set<std::string> ids;
        for (const auto& j : sec) {
            Job job;
            job.line = line_of(j);
            job.kind = as<std::string>(need(j, "kind"), "kind");
            job.id = j["id"] ? as<std::string>(j["id"], "id") : job.kind + "-" + std::to_string(doc.jobs.size());
            if (!ids.insert(job.id).second)
                fail(j, "duplicate job id '" + job.id + "'");
            for (const auto& kv : j) {
                const auto key = kv.first.as<std::string>();
                if (key == "id" || key == "kind")
                    continue;
                if (kv.second.IsMap()) {
                    for (const auto& e : kv.second)
                        job.params[key + "." + e.first.as<std::string>()] = as<std::string>(e.second, key.c_str());
                } else {
                    job.params[key] = as<std::string>(kv.second, key.c_str());
                }
            }
            try {
                validate_job(doc, job);
            } catch (const std::invalid_argument& e) {
                fail(j, "job '" + job.id + "': " + e.what());
            }
            doc.jobs.push_back(std::move(job));
        }
    }
};

} // namespace

const AlgebraPtr& Document::algebra(const std::string& name) const { return lookup(algebras, name, "algebra"); }
const ModulePtr& Document::module(const std::string& name) const { return lookup(modules, name, "module"); }
const GroupMorphism& Document::morphism(const std::string& name) const
{
    return lookup(morphisms, name, "morphism");
}

Document parse_document(const std::string& text)
{
    YAML::Node root;
    try {
        root = YAML::Load(text);
    } catch (const YAML::ParserException& e) {
        throw DocumentError("document", e.mark.line + 1, e.msg);
    }
    Parser p;
    p.doc.text = text;
    if (!root || root.IsNull())
        return p.doc;
    if (!root.IsMap())
        throw DocumentError("document", line_of(root), "top level must be a mapping of sections");
    static const char* order[] = {"groups", "morphisms", "algebras", "modules", "pid_modules", "jobs"};
    for (const auto& kv : root) {
        const auto key = kv.first.as<std::string>();
        if (std::find(std::begin(order), std::end(order), key) == std::end(order))
            throw DocumentError("document", line_of(kv.first), "unknown section '" + key + "'");
    }
    for (const char* s : order) {
        const YAML::Node sec = root[s];
        if (!sec || sec.IsNull())
            continue;
        p.section = s;
        if (std::string(s) != "jobs" && !sec.IsMap())
            p.fail(sec, "section must be a mapping of named entries");
        const std::string name = s;
        if (name == "groups")
            p.groups(sec);
        else if (name == "morphisms")
            p.morphisms(sec);
        else if (name == "algebras")
            p.algebras(sec);
        else if (name == "modules")
            p.modules(sec);
        else if (name == "pid_modules")
            p.pid_modules(sec);
        else
            p.jobs(sec);
    }
    return p.doc;
}

Document load_document(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_document(ss.str());
}

} // namespace grm
