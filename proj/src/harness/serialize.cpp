#include "grm/harness.hpp"

#include <yaml-cpp/yaml.h>

#include <set>

namespace grm {

namespace {

std::string field_name(const Field& f)
{
    return f.characteristic() == 0 ? "Q" : "F" + std::to_string(f.characteristic());
}

void emit_ints(YAML::Emitter& e, const std::vector<std::int64_t>& v)
{
    e << YAML::Flow << YAML::BeginSeq;
    for (auto x : v)
        e << x;
    e << YAML::EndSeq;
}

void emit_vector(YAML::Emitter& e, const Vector& v)
{
    e << YAML::Flow << YAML::BeginSeq;
    for (std::size_t i = 0; i < v.size(); ++i)
        e << v[i].get_str();
    e << YAML::EndSeq;
}

void emit_matrix(YAML::Emitter& e, const Matrix& m)
{
    e << YAML::Flow << YAML::BeginSeq;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        e << YAML::BeginSeq;
        for (std::size_t c = 0; c < m.cols(); ++c)
            e << m(r, c).get_str();
        e << YAML::EndSeq;
    }
    e << YAML::EndSeq;
}

bool is_zero(const Matrix& m)
{
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (m(r, c) != 0)
                return false;
    return true;
}

std::string relation_text(const QuiverRelation& rel, const QuiverData& q)
{
    std::string out;
    for (const auto& t : rel.terms) {
        const bool negative = t.coefficient < 0;
        const Scalar c = abs(t.coefficient);
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        if (c != 1)
            out += c.get_str() + "*";
        for (std::size_t i = 0; i < t.arrows.size(); ++i)
            out += (i ? "*" : "") + q.arrows[t.arrows[i]].name;
    }
    return out;
}

// basis vector -> vertex, when every vertex idempotent acts diagonally by 0 and 1
std::optional<std::vector<std::size_t>> basis_vertices(const GradedModule& m, const QuiverData& q)
{
    std::vector<std::size_t> out(m.dim(), q.vertices.size());
    for (std::size_t v = 0; v < q.vertices.size(); ++v) {
        const Matrix& a = m.action(q.vertex_basis[v]);
        for (std::size_t r = 0; r < m.dim(); ++r)
            for (std::size_t c = 0; c < m.dim(); ++c) {
                const Scalar& x = a(r, c);
                if (r != c ? x != 0 : (x != 0 && x != 1))
                    return std::nullopt;
                if (r == c && x == 1) {
                    if (out[r] != q.vertices.size())
                        return std::nullopt;
                    out[r] = v;
                }
            }
    }
    for (auto v : out)
        if (v == q.vertices.size())
            return std::nullopt;
    return out;
}

struct Writer {
    const Document& doc;
    std::map<std::string, FgAbelianGroup> groups;
    std::vector<std::pair<std::string, AlgebraPtr>> algebras;

    template <class Map>
    static std::string fresh(const Map& taken, std::string name)
    {
        while (taken.count(name))
            name += "_";
        return name;
    }

    std::string group_name(const FgAbelianGroup& G)
    {
        for (const auto& [n, g] : groups)
            if (g == G)
                return n;
        const auto n = fresh(groups, "group_" + std::to_string(groups.size()));
        groups.emplace(n, G);
        return n;
    }

    const std::string& algebra_name(const AlgebraPtr& a) const
    {
        for (const auto& [n, b] : algebras)
            if (b == a)
                return n;
        for (const auto& [n, b] : algebras)
            if (same_algebra(a, b))
                return n;
        throw std::logic_error("serialize: module over an unlisted algebra");
    }

    explicit Writer(const Document& d) : doc(d), groups(d.groups)
    {
        for (const auto& [n, a] : doc.algebras)
            algebras.emplace_back(n, a);
        std::set<std::string> names;
        for (const auto& [n, a] : doc.algebras)
            names.insert(n);
        for (const auto& [n, m] : doc.modules) {
            bool listed = false;
            for (const auto& [an, a] : algebras)
                listed |= same_algebra(a, m->algebra());
            if (!listed) {
                const auto an = fresh(names, n + "_algebra");
                names.insert(an);
                algebras.emplace_back(an, m->algebra());
            }
        }
        for (const auto& [n, a] : algebras)
            group_name(a->group());
        for (const auto& [n, phi] : doc.morphisms) {
            group_name(phi.domain());
            group_name(phi.codomain());
        }
    }

    void quiver_algebra(YAML::Emitter& e, const QuiverData& q)
    {
        e << YAML::Key << "vertices" << YAML::Value << YAML::Flow << q.vertices;
        e << YAML::Key << "arrows" << YAML::Value << YAML::BeginSeq;
        for (const auto& ar : q.arrows) {
            e << YAML::Flow << YAML::BeginMap << YAML::Key << "name" << YAML::Value << ar.name << YAML::Key
              << "source" << YAML::Value << q.vertices[ar.source] << YAML::Key << "target" << YAML::Value
              << q.vertices[ar.target] << YAML::Key << "degree" << YAML::Value;
            emit_ints(e, ar.degree.coords);
            e << YAML::EndMap;
        }
        e << YAML::EndSeq;
        if (!q.relations.empty()) {
            e << YAML::Key << "relations" << YAML::Value << YAML::BeginSeq;
            for (const auto& r : q.relations)
                e << YAML::DoubleQuoted << relation_text(r, q);
            e << YAML::EndSeq;
        }
        e << YAML::Key << "cap" << YAML::Value << q.cap;
    }

    void raw_algebra(YAML::Emitter& e, const GradedAlgebra& a)
    {
        if (!a.has_radical_data())
            throw std::runtime_error("serialize: algebra without radical and idempotents");
        e << YAML::Key << "basis" << YAML::Value << YAML::BeginSeq;
        for (const auto& b : a.basis()) {
            e << YAML::Flow << YAML::BeginMap << YAML::Key << "label" << YAML::Value << b.label << YAML::Key
              << "degree" << YAML::Value;
            emit_ints(e, b.degree.coords);
            e << YAML::EndMap;
        }
        e << YAML::EndSeq << YAML::Key << "left" << YAML::Value << YAML::BeginMap;
        for (std::size_t i = 0; i < a.dim(); ++i) {
            e << YAML::Key << a.label(i) << YAML::Value;
            emit_matrix(e, a.left(i));
        }
        e << YAML::EndMap << YAML::Key << "unit" << YAML::Value;
        emit_vector(e, a.unit());
        auto labels = [&](const char* key, const std::vector<std::size_t>& idx) {
            e << YAML::Key << key << YAML::Value << YAML::Flow << YAML::BeginSeq;
            for (auto i : idx)
                e << a.label(i);
            e << YAML::EndSeq;
        };
        labels("radical", *a.radical());
        labels("idempotents", a.idempotents());
    }

    void module(YAML::Emitter& e, const GradedModule& m)
    {
        const GradedAlgebra& a = *m.algebra();
        const auto& q = a.quiver();
        const auto vertices = q ? basis_vertices(m, *q) : std::nullopt;
        e << YAML::BeginMap << YAML::Key << "algebra" << YAML::Value << algebra_name(m.algebra());
        e << YAML::Key << "basis" << YAML::Value << YAML::BeginSeq;
        for (std::size_t i = 0; i < m.dim(); ++i) {
            e << YAML::Flow << YAML::BeginMap << YAML::Key << "label" << YAML::Value << m.label(i) << YAML::Key
              << "degree" << YAML::Value;
            emit_ints(e, m.degree(i).coords);
            if (vertices)
                e << YAML::Key << "vertex" << YAML::Value << q->vertices[(*vertices)[i]];
            e << YAML::EndMap;
        }
        e << YAML::EndSeq;
        std::vector<std::size_t> shown;
        for (auto g : a.generators())
            if (!(vertices && g < q->vertices.size()) && !is_zero(m.action(g)))
                shown.push_back(g);
        if (!shown.empty()) {
            e << YAML::Key << "action" << YAML::Value << YAML::BeginMap;
            for (auto g : shown) {
                e << YAML::Key << a.label(g) << YAML::Value;
                emit_matrix(e, m.action(g));
            }
            e << YAML::EndMap;
        }
        e << YAML::EndMap;
    }

    std::string write()
    {
        YAML::Emitter e;
        e << YAML::BeginMap;
        if (!groups.empty()) {
            e << YAML::Key << "groups" << YAML::Value << YAML::BeginMap;
            for (const auto& [n, g] : groups) {
                e << YAML::Key << n << YAML::Value << YAML::Flow << YAML::BeginMap << YAML::Key << "rank"
                  << YAML::Value << g.rank();
                if (!g.torsion().empty()) {
                    e << YAML::Key << "torsion" << YAML::Value;
                    emit_ints(e, g.torsion());
                }
                e << YAML::EndMap;
            }
            e << YAML::EndMap;
        }
        if (!doc.morphisms.empty()) {
            e << YAML::Key << "morphisms" << YAML::Value << YAML::BeginMap;
            for (const auto& [n, phi] : doc.morphisms) {
                e << YAML::Key << n << YAML::Value << YAML::BeginMap << YAML::Key << "domain" << YAML::Value
                  << group_name(phi.domain()) << YAML::Key << "codomain" << YAML::Value
                  << group_name(phi.codomain()) << YAML::Key << "matrix" << YAML::Value << YAML::Flow
                  << YAML::BeginSeq;
                for (const auto& row : phi.matrix())
                    emit_ints(e, row);
                e << YAML::EndSeq << YAML::EndMap;
            }
            e << YAML::EndMap;
        }
        if (!algebras.empty()) {
            e << YAML::Key << "algebras" << YAML::Value << YAML::BeginMap;
            for (const auto& [n, a] : algebras) {
                e << YAML::Key << n << YAML::Value << YAML::BeginMap << YAML::Key << "field" << YAML::Value
                  << field_name(a->field()) << YAML::Key << "group" << YAML::Value << group_name(a->group());
                if (a->quiver())
                    quiver_algebra(e, *a->quiver());
                else
                    raw_algebra(e, *a);
                e << YAML::EndMap;
            }
            e << YAML::EndMap;
        }
        if (!doc.modules.empty()) {
            e << YAML::Key << "modules" << YAML::Value << YAML::BeginMap;
            for (const auto& [n, m] : doc.modules) {
                e << YAML::Key << n << YAML::Value;
                module(e, *m);
            }
            e << YAML::EndMap;
        }
        if (!doc.pid_modules.empty()) {
            e << YAML::Key << "pid_modules" << YAML::Value << YAML::BeginMap;
            for (const auto& [n, pm] : doc.pid_modules) {
                e << YAML::Key << n << YAML::Value << YAML::Flow << YAML::BeginSeq;
                for (const auto& at : pm.atoms) {
                    const char* k = at.kind == PidAtom::Kind::F ? "F" : at.kind == PidAtom::Kind::L ? "L" : "T";
                    e << YAML::BeginMap << YAML::Key << "atom" << YAML::Value << k;
                    if (at.kind == PidAtom::Kind::T)
                        e << YAML::Key << "m" << YAML::Value << at.m;
                    e << YAML::Key << "shift" << YAML::Value << at.shift << YAML::EndMap;
                }
                e << YAML::EndSeq;
            }
            e << YAML::EndMap;
        }
        if (!doc.jobs.empty()) {
            e << YAML::Key << "jobs" << YAML::Value << YAML::BeginSeq;
            for (const auto& j : doc.jobs) {
                std::map<std::string, std::map<std::string, std::string>> nested;
                e << YAML::BeginMap << YAML::Key << "id" << YAML::Value << j.id << YAML::Key << "kind"
                  << YAML::Value << j.kind;
                for (const auto& [k, v] : j.params) {
                    const auto dot = k.find('.');
                    if (dot == std::string::npos)
                        e << YAML::Key << k << YAML::Value << v;
                    else
                        nested[k.substr(0, dot)][k.substr(dot + 1)] = v;
                }
                for (const auto& [k, sub] : nested) {
                    e << YAML::Key << k << YAML::Value << YAML::Flow << YAML::BeginMap;
                    for (const auto& [sk, v] : sub)
                        e << YAML::Key << sk << YAML::Value << v;
                    e << YAML::EndMap;
                }
                e << YAML::EndMap;
            }
            e << YAML::EndSeq;
        }
        e << YAML::EndMap;
        if (!e.good())
            throw std::logic_error("serialize: " + e.GetLastError());
        return std::string(e.c_str()) + "\n";
    }
};

} // namespace

std::string serialize_document(const Document& doc) { return Writer(doc).write(); }

} // namespace grm
