#include "grm/harness.hpp"

#include "json.hpp"

#include <omp.h>

#include <chrono>
#include <set>

namespace grm {

using ojson = nlohmann::ordered_json;

namespace {

struct KindSpec {
    std::vector<std::string> required;
    std::vector<std::string> optional;
};

const std::map<std::string, KindSpec>& kinds()
{
    static const std::map<std::string, KindSpec> k{
        {"validate", {{"module"}, {}}},
        {"resolve", {{"module"}, {"cap", "minimal", "expect.pd"}}},
        {"ext", {{"module", "target"}, {"degree", "cap", "expect"}}},
        {"injdim", {{"module"}, {"cap", "expect"}}},
        {"regrade", {{"module", "morphism"}, {}}},
        {"inequality", {{"module", "morphism"}, {"cap", "expect.source", "expect.regraded"}}},
        {"adjunction", {{"module", "target", "morphism"}, {}}},
        {"lemma", {{"module", "morphism"}, {"window"}}},
        {"product", {{"module", "morphism"}, {}}},
        {"resolution", {{"module", "morphism", "algebra"}, {"window"}}},
        {"acyclicity", {{"morphism"}, {"module", "injective", "algebra", "cap"}}},
        {"ext_independence", {{"module", "target"}, {"degree"}}},
        {"random_inequality", {{"algebra", "morphism", "count"}, {"max_dim", "radius", "cap"}}},
        {"random_adjunction", {{"algebra", "morphism", "count"}, {"max_dim", "radius"}}},
        {"pid_sharpness", {{}, {}}},
        {"pid_dimensions", {{"pid_module"}, {"expect.graded", "expect.ungraded"}}},
    };
    return k;
}

const std::string* param(const Job& j, const std::string& key)
{
    auto it = j.params.find(key);
    return it == j.params.end() ? nullptr : &it->second;
}

std::int64_t integer(const Job& j, const std::string& key, std::int64_t fallback)
{
    const std::string* v = param(j, key);
    if (!v)
        return fallback;
    std::size_t used = 0;
    std::int64_t x = 0;
    try {
        x = std::stoll(*v, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != v->size() || v->empty())
        throw std::invalid_argument("parameter '" + key + "' must be an integer, got '" + *v + "'");
    return x;
}

std::size_t count_param(const Job& j, const std::string& key, std::size_t fallback)
{
    const auto x = integer(j, key, static_cast<std::int64_t>(fallback));
    if (x < 0)
        throw std::invalid_argument("parameter '" + key + "' must be non-negative");
    return static_cast<std::size_t>(x);
}

std::uint64_t fnv1a(std::uint64_t h, const std::string& s)
{
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

ojson graded_dims(const GradedModule& m)
{
    ojson out = ojson::array();
    for (const auto& [g, d] : m.graded_dimension())
        out.push_back({{"degree", g.coords}, {"dim", d}});
    return out;
}

void expect(CheckList& c, const Job& j, const std::string& key, const std::string& computed, const std::string& what)
{
    if (const std::string* e = param(j, key))
        c.add("expected " + what, *e == computed, "computed " + computed + ", expected " + *e);
}

const ModulePtr& mod(const Document& d, const Job& j, const char* key) { return d.module(*param(j, key)); }
const GroupMorphism& mor(const Document& d, const Job& j) { return d.morphism(*param(j, "morphism")); }

void require_domain(const GroupMorphism& phi, const FgAbelianGroup& G, const std::string& what)
{
    if (!(phi.domain() == G))
        throw std::invalid_argument("morphism domain " + phi.domain().to_string() + " does not match the grading " +
                                    G.to_string() + " of " + what);
}

std::size_t cap_of(const Job& j, const RunOptions& opt) { return count_param(j, "cap", opt.cap); }

void run_resolve(const Document& d, const Job& j, const RunOptions& opt, JobResult& r, ojson& data)
{
    const ModulePtr& m = mod(d, j, "module");
    const std::size_t cap = cap_of(j, opt);
    const bool minimal = !param(j, "minimal") || *param(j, "minimal") != "false";
    const Resolution res = minimal ? minimal_resolution(m, cap) : nonminimal_resolution(m, cap);
    ojson terms = ojson::array();
    for (const auto& t : res.terms) {
        ojson term = ojson::array();
        for (const auto& p : t)
            term.push_back({{"vertex", p.vertex}, {"shift", p.shift.coords}});
        terms.push_back(term);
    }
    data["terms"] = terms;
    data["status"] = res.status == ResolutionStatus::terminated ? "terminated" : "truncated";
    const DimensionVerdict pd = m->is_zero()                                  ? DimensionVerdict::zero_module()
                                : res.status == ResolutionStatus::terminated ? DimensionVerdict::exact(*res.length())
                                                                              : DimensionVerdict::at_least(cap);
    data["pd"] = pd.to_string();
    for (std::size_t i = 0; i < res.differentials.size(); ++i) {
        const auto rep = validate(res.differentials[i]);
        r.checks.add("d" + std::to_string(i) + " is homogeneous and A-linear", rep.ok(),
                     rep.ok() ? "" : rep.failures.front());
    }
    // exactness by ranks: rank d_i + rank d_{i+1} = dim P_i, with d_0 the augmentation
    const auto& ds = res.differentials;
    if (!ds.empty())
        r.checks.add("augmentation is surjective", rank(ds[0].matrix) == m->dim());
    for (std::size_t i = 0; i + 1 < ds.size(); ++i) {
        const auto a = rank(ds[i].matrix), b = rank(ds[i + 1].matrix);
        r.checks.add("exact at P" + std::to_string(i), a + b == res.modules[i]->dim(),
                     "rank " + std::to_string(a) + " + " + std::to_string(b) + " vs dim " +
                         std::to_string(res.modules[i]->dim()));
    }
    if (!ds.empty() && res.status == ResolutionStatus::terminated) {
        const std::size_t last = ds.size() - 1;
        r.checks.add("last differential is injective", rank(ds[last].matrix) == res.modules[last]->dim());
    }
    expect(r.checks, j, "expect.pd", pd.to_string(), "projective dimension");
}

void run_ext(const Document& d, const Job& j, const RunOptions& opt, JobResult& r, ojson& data)
{
    const ModulePtr &m = mod(d, j, "module"), &n = mod(d, j, "target");
    if (!same_algebra(m->algebra(), n->algebra()))
        throw std::invalid_argument("module and target live over different algebras");
    const std::size_t cap = cap_of(j, opt);
    const Resolution res = minimal_resolution(m, cap);
    if (param(j, "degree")) {
        const std::size_t i = count_param(j, "degree", 0);
        if (i > cap)
            throw std::invalid_argument("degree " + std::to_string(i) + " exceeds cap " + std::to_string(cap));
        const std::size_t e = ext_dimension(res, n, i);
        data["degree"] = i;
        data["ext"] = e;
        expect(r.checks, j, "expect", std::to_string(e), "dim Ext^" + std::to_string(i));
    } else {
        data["ext"] = ext_dimensions(res, n);
    }
    r.checks.add("Ext^0 = Hom", ext_dimension(res, n, 0) == hom_dimension(m, n));
}

void run_injdim(const Document& d, const Job& j, const RunOptions& opt, JobResult& r, ojson& data)
{
    const DimensionVerdict v = graded_injective_dimension(mod(d, j, "module"), cap_of(j, opt));
    data["injdim"] = v.to_string();
    if (v.kind == DimensionVerdict::Kind::at_least)
        r.checks.inconclusive("injective dimension", "coresolution longer than cap; " + v.to_string());
    else
        r.checks.add("injective dimension", true, v.to_string());
    expect(r.checks, j, "expect", v.to_string(), "injective dimension");
}

void run_regrade(const Document& d, const Job& j, JobResult& r, ojson& data)
{
    const ModulePtr& m = mod(d, j, "module");
    const GroupMorphism& phi = mor(d, j);
    require_domain(phi, m->group(), "the module");
    const AlgebraPtr pushed = pushforward(m->algebra(), phi);
    const GradedModule lower = pushforward(*m, phi, pushed);
    const GradedModule upper = coinduction(*m, phi, pushed);
    data["module"] = graded_dims(*m);
    data["pushforward"] = graded_dims(lower);
    data["coinduction"] = graded_dims(upper);
    GradedDimension expected;
    for (const auto& [g, n] : m->graded_dimension())
        expected[phi(g)] += n;
    for (const auto& [name, x] : {std::pair<std::string, const GradedModule*>{"phi_! M", &lower}, {"phi_* M", &upper}}) {
        const auto rep = validate(*x);
        r.checks.add(name + " is a valid module", rep.ok(), rep.ok() ? "" : rep.failures.front());
        r.checks.add(name + " has dimension sum over fibers", x->graded_dimension() == expected);
    }
}

void run_inequality(const Document& d, const Job& j, const RunOptions& opt, JobResult& r, ojson& data)
{
    const ModulePtr& m = mod(d, j, "module");
    require_domain(mor(d, j), m->group(), "the module");
    const InequalityReport rep = verify_inequality(m, mor(d, j), cap_of(j, opt));
    data["source"] = rep.source.to_string();
    data["regraded"] = rep.regraded.to_string();
    data["cd"] = rep.cd.to_string();
    r.checks.append(rep.checks);
    expect(r.checks, j, "expect.source", rep.source.to_string(), "id_G(M)");
    expect(r.checks, j, "expect.regraded", rep.regraded.to_string(), "id_G'(phi_! M)");
}

void run_adjunction(const Document& d, const Job& j, JobResult& r, ojson& data)
{
    const ModulePtr &m = mod(d, j, "module"), &n = mod(d, j, "target");
    require_domain(mor(d, j), m->group(), "the module");
    const AdjunctionWitness w = adjunction_witness(m, n, mor(d, j));
    data["hom_left"] = {w.hom_left[0], w.hom_left[1]};
    data["hom_right"] = {w.hom_right[0], w.hom_right[1]};
    r.checks.append(w.checks);
}

void run_lemma(const Document& d, const Job& j, const RunOptions& opt, JobResult& r, ojson& data)
{
    const ModulePtr& m = mod(d, j, "module");
    const GroupMorphism& phi = mor(d, j);
    require_domain(phi, m->group(), "the module");
    if (kernel(phi).group.is_finite()) {
        const Decomposition dec = decomposition_iso(m, phi);
        data["dimension"] = dec.source->dim();
        r.checks.append(dec.checks);
    } else {
        const auto w = decomposition_window(m, phi, integer(j, "window", opt.window));
        data["radius"] = w.radius;
        data["required_radius"] = w.required_radius;
        data["interior_degrees"] = w.interior.size();
        r.checks.append(w.checks);
    }
}

void run_resolution(const Document& d, const Job& j, const RunOptions& opt, JobResult& r, ojson& data)
{
    const AlgebraPtr& a = d.algebra(*param(j, "algebra"));
    require_domain(mor(d, j), a->group(), "the algebra");
    const Rank1Resolution res =
        rank1_regrade_resolution(mod(d, j, "module"), mor(d, j), a, integer(j, "window", opt.window));
    data["radius"] = res.radius;
    data["kernel_generator"] = res.kernel_generator.coords;
    data["degrees"] = res.pieces.size();
    r.checks.append(res.checks);
}

void run_acyclicity(const Document& d, const Job& j, const RunOptions& opt, JobResult& r, ojson& data)
{
    const GroupMorphism& phi = mor(d, j);
    const std::size_t cap = cap_of(j, opt);
    std::vector<std::pair<std::string, ModulePtr>> simples, injectives;
    if (param(j, "algebra")) {
        const AlgebraPtr& a = d.algebra(*param(j, "algebra"));
        const auto inj = indecomposable_injectives(a);
        for (std::size_t v = 0; v < a->idempotents().size(); ++v) {
            simples.emplace_back("S" + std::to_string(v), share(simple_module(a, v, a->group().zero())));
            injectives.emplace_back("I" + std::to_string(v), share(inj[v]));
        }
    } else {
        simples.emplace_back(*param(j, "module"), mod(d, j, "module"));
        injectives.emplace_back(*param(j, "injective"), mod(d, j, "injective"));
    }
    require_domain(phi, simples.front().second->group(), "the modules");
    ojson pairs = ojson::array();
    for (const auto& [sn, s] : simples)
        for (const auto& [in, i] : injectives) {
            const AcyclicityReport rep = verify_acyclicity(s, i, phi, cap);
            pairs.push_back({{"module", sn}, {"injective", in}, {"ext", rep.ext}});
            r.checks.append(rep.checks, sn + ", " + in + ": ");
        }
    data["pairs"] = pairs;
}

void run_ext_independence(const Document& d, const Job& j, const RunOptions& opt, JobResult& r, ojson& data)
{
    const ModulePtr &m = mod(d, j, "module"), &n = mod(d, j, "target");
    const std::size_t top = count_param(j, "degree", std::min<std::size_t>(opt.cap, 4));
    const auto a = ext_dimensions(minimal_resolution(m, top), n);
    const auto b = ext_dimensions(nonminimal_resolution(m, top), n);
    data["minimal"] = a;
    data["nonminimal"] = b;
    for (std::size_t i = 0; i <= top; ++i)
        r.checks.add("Ext^" + std::to_string(i) + " minimal = non-minimal", a[i] == b[i],
                     std::to_string(a[i]) + " vs " + std::to_string(b[i]));
}

std::mt19937_64 job_rng(const Job& j, const RunOptions& opt)
{
    std::seed_seq seq{static_cast<std::uint32_t>(opt.seed), static_cast<std::uint32_t>(opt.seed >> 32),
                      static_cast<std::uint32_t>(fnv1a(0xcbf29ce484222325ULL, j.id))};
    return std::mt19937_64(seq);
}

void run_random_inequality(const Document& d, const Job& j, const RunOptions& opt, JobResult& r, ojson& data)
{
    const AlgebraPtr& a = d.algebra(*param(j, "algebra"));
    const GroupMorphism& phi = mor(d, j);
    require_domain(phi, a->group(), "the algebra");
    const std::size_t count = count_param(j, "count", 0), max_dim = count_param(j, "max_dim", 4);
    const std::int64_t radius = integer(j, "radius", 1);
    const std::size_t cap = cap_of(j, opt);
    auto rng = job_rng(j, opt);
    std::vector<ModulePtr> mods;
    for (std::size_t i = 0; i < count; ++i)
        mods.push_back(share(random_module(a, rng(), max_dim, radius)));
    std::vector<InequalityReport> reps(count);
#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < count; ++i)
        reps[i] = verify_inequality(mods[i], phi, cap);
    ojson rows = ojson::array();
    std::size_t exact_pairs = 0;
    for (std::size_t i = 0; i < count; ++i) {
        const auto& rep = reps[i];
        const std::string tag = "module " + std::to_string(i) + ": ";
        rows.push_back({{"graded_dimension", graded_dims(*mods[i])},
                        {"source", rep.source.to_string()},
                        {"regraded", rep.regraded.to_string()}});
        r.checks.append(rep.checks, tag);
        if (rep.source.is_exact() && rep.regraded.is_exact()) {
            ++exact_pairs;
            r.checks.add(tag + "id_G(M) = id_G'(phi_! M)", rep.source == rep.regraded,
                         rep.source.to_string() + " vs " + rep.regraded.to_string());
        }
    }
    data["cd"] = cohomological_dimension(kernel(phi).group, a->field().characteristic()).to_string();
    data["exact_pairs"] = exact_pairs;
    data["modules"] = rows;
}

void run_random_adjunction(const Document& d, const Job& j, const RunOptions& opt, JobResult& r, ojson& data)
{
    const AlgebraPtr& a = d.algebra(*param(j, "algebra"));
    const GroupMorphism& phi = mor(d, j);
    require_domain(phi, a->group(), "the algebra");
    const AlgebraPtr pushed = pushforward(a, phi);
    const std::size_t count = count_param(j, "count", 0), max_dim = count_param(j, "max_dim", 3);
    const std::int64_t radius = integer(j, "radius", 1);
    auto rng = job_rng(j, opt);
    std::vector<std::pair<ModulePtr, ModulePtr>> pairs;
    for (std::size_t i = 0; i < count; ++i) {
        auto m = share(random_module(a, rng(), max_dim, radius));
        auto n = share(random_module(pushed, rng(), max_dim, radius));
        pairs.emplace_back(std::move(m), std::move(n));
    }
    std::vector<AdjunctionWitness> ws(count);
#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < count; ++i)
        ws[i] = adjunction_witness(pairs[i].first, pairs[i].second, phi);
    ojson rows = ojson::array();
    for (std::size_t i = 0; i < count; ++i) {
        rows.push_back({{"hom_left", {ws[i].hom_left[0], ws[i].hom_left[1]}},
                        {"hom_right", {ws[i].hom_right[0], ws[i].hom_right[1]}}});
        r.checks.append(ws[i].checks, "pair " + std::to_string(i) + ": ");
    }
    data["pairs"] = rows;
}

void run_pid_dimensions(const Document& d, const Job& j, JobResult& r, ojson& data)
{
    const auto& pm = d.pid_modules.at(*param(j, "pid_module"));
    const PidDimensions dims = injective_dimensions(pm);
    ojson atoms = ojson::array();
    for (const auto& a : pm.atoms)
        atoms.push_back(a.to_string());
    data["atoms"] = atoms;
    data["graded"] = dims.graded.to_string();
    data["ungraded"] = dims.ungraded.to_string();
    const auto g = dims.graded.value, u = dims.ungraded.value;
    if (!pm.atoms.empty())
        r.checks.add("id^Z <= id <= id^Z + 1", g <= u && u <= g + 1,
                     dims.graded.to_string() + ", " + dims.ungraded.to_string());
    expect(r.checks, j, "expect.graded", dims.graded.to_string(), "id^Z");
    expect(r.checks, j, "expect.ungraded", dims.ungraded.to_string(), "id");
}

} // namespace

void validate_job(const Document& doc, const Job& job)
{
    auto it = kinds().find(job.kind);
    if (it == kinds().end())
        throw std::invalid_argument("unknown job kind '" + job.kind + "'");
    const auto& spec = it->second;
    for (const auto& key : spec.required)
        if (!param(job, key))
            throw std::invalid_argument("missing parameter '" + key + "'");
    std::set<std::string> allowed(spec.required.begin(), spec.required.end());
    allowed.insert(spec.optional.begin(), spec.optional.end());
    for (const auto& [key, value] : job.params)
        if (!allowed.count(key))
            throw std::invalid_argument("unexpected parameter '" + key + "' for kind " + job.kind);
    auto resolves = [&](const std::string& key, const auto& table, const char* what) {
        if (const std::string* v = param(job, key); v && !table.count(*v))
            throw std::invalid_argument("unresolved " + std::string(what) + " reference '" + *v + "'");
    };
    for (const char* key : {"module", "target", "injective"})
        resolves(key, doc.modules, "module");
    resolves("morphism", doc.morphisms, "morphism");
    resolves("algebra", doc.algebras, "algebra");
    resolves("pid_module", doc.pid_modules, "pid module");
    for (const char* key : {"cap", "degree", "count", "max_dim"})
        count_param(job, key, 0);
    for (const char* key : {"window", "radius"})
        integer(job, key, 0);
    if (job.kind == "acyclicity" && !param(job, "algebra") && (!param(job, "module") || !param(job, "injective")))
        throw std::invalid_argument("acyclicity needs either 'algebra' or both 'module' and 'injective'");
}

Outcome JobResult::status() const
{
    if (!error.empty() || checks.count(Outcome::fail))
        return Outcome::fail;
    return checks.count(Outcome::inconclusive) ? Outcome::inconclusive : Outcome::pass;
}

JobResult run_job(const Document& doc, const Job& job, const RunOptions& opt)
{
    JobResult r;
    r.id = job.id;
    r.kind = job.kind;
    const auto start = std::chrono::steady_clock::now();
    ojson data = ojson::object();
    try {
        validate_job(doc, job);
        const std::string& k = job.kind;
        if (k == "validate") {
            const auto rep = validate(*mod(doc, job, "module"));
            r.checks.add("module axioms", rep.ok(), rep.ok() ? "" : rep.failures.front());
            data["graded_dimension"] = graded_dims(*mod(doc, job, "module"));
        } else if (k == "resolve") {
            run_resolve(doc, job, opt, r, data);
        } else if (k == "ext") {
            run_ext(doc, job, opt, r, data);
        } else if (k == "injdim") {
            run_injdim(doc, job, opt, r, data);
        } else if (k == "regrade") {
            run_regrade(doc, job, r, data);
        } else if (k == "inequality") {
            run_inequality(doc, job, opt, r, data);
        } else if (k == "adjunction") {
            run_adjunction(doc, job, r, data);
        } else if (k == "lemma") {
            run_lemma(doc, job, opt, r, data);
        } else if (k == "product") {
            require_domain(mor(doc, job), mod(doc, job, "module")->group(), "the module");
            r.checks.append(product_decomposition_check(mod(doc, job, "module"), mor(doc, job)));
        } else if (k == "resolution") {
            run_resolution(doc, job, opt, r, data);
        } else if (k == "acyclicity") {
            run_acyclicity(doc, job, opt, r, data);
        } else if (k == "ext_independence") {
            run_ext_independence(doc, job, opt, r, data);
        } else if (k == "random_inequality") {
            run_random_inequality(doc, job, opt, r, data);
        } else if (k == "random_adjunction") {
            run_random_adjunction(doc, job, opt, r, data);
        } else if (k == "pid_sharpness") {
            r.checks.append(verify_sharpness());
            for (const auto& [name, atom] : {std::pair<const char*, PidAtom::Kind>{"k[t]", PidAtom::Kind::F},
                                             {"k[t,t^-1]", PidAtom::Kind::L}}) {
                const auto dims = injective_dimensions({{{atom, 0, 0}}});
                data[name] = {dims.graded.value, dims.ungraded.value};
            }
        } else if (k == "pid_dimensions") {
            run_pid_dimensions(doc, job, r, data);
        }
    } catch (const std::exception& e) {
        r.error = e.what();
    }
    r.data = data.dump();
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

std::string input_digest(const std::string& text, const RunOptions& opt, const std::vector<Job>& jobs)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    h = fnv1a(h, text);
    h = fnv1a(h, "\x1fseed=" + std::to_string(opt.seed) + "\x1f" "cap=" + std::to_string(opt.cap) +
                     "\x1fwindow=" + std::to_string(opt.window));
    for (const auto& j : jobs) {
        h = fnv1a(h, "\x1ejob=" + j.id + "\x1f" + j.kind);
        for (const auto& [k, v] : j.params)
            h = fnv1a(h, "\x1f" + k + "=" + v);
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string("fnv1a64:") + buf;
}

Report run_jobs(const Document& doc, const std::vector<Job>& jobs, const RunOptions& opt)
{
    Report rep;
    rep.options = opt;
    rep.digest = input_digest(doc.text, opt, jobs);
    rep.jobs.resize(jobs.size());
#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < jobs.size(); ++i)
        rep.jobs[i] = run_job(doc, jobs[i], opt);
    return rep;
}

Report run_campaign(const Document& doc, const RunOptions& opt) { return run_jobs(doc, doc.jobs, opt); }

bool Report::failed() const
{
    for (const auto& j : jobs)
        if (j.status() == Outcome::fail)
            return true;
    return false;
}

std::string Report::to_json() const
{
    ojson out;
    out["schema"] = report_schema;
    out["digest"] = digest;
    out["seed"] = options.seed;
    out["cap"] = options.cap;
    out["window"] = options.window;
    ojson js = ojson::array();
    std::size_t counts[3] = {0, 0, 0};
    std::size_t errors = 0;
    ojson inconclusive = ojson::array();
    for (const auto& j : jobs) {
        ojson checks = ojson::array();
        for (const auto& c : j.checks.checks) {
            checks.push_back({{"name", c.name}, {"outcome", to_string(c.outcome)}, {"detail", c.detail}});
            ++counts[static_cast<int>(c.outcome)];
            if (c.outcome == Outcome::inconclusive)
                inconclusive.push_back(j.id + ": " + c.name);
        }
        ojson entry{{"id", j.id}, {"kind", j.kind}, {"status", to_string(j.status())}};
        if (!j.error.empty()) {
            entry["error"] = j.error;
            ++errors;
        }
        entry["checks"] = checks;
        entry["data"] = ojson::parse(j.data);
        js.push_back(entry);
    }
    out["jobs"] = js;
    out["summary"] = {{"jobs", jobs.size()},
                      {"pass", counts[0]},
                      {"fail", counts[1]},
                      {"inconclusive", counts[2]},
                      {"errors", errors},
                      {"inconclusive_checks", inconclusive},
                      {"failed", failed()}};
    return out.dump(2) + "\n";
}

std::string Report::to_table() const
{
    std::string out;
    char line[512];
    std::snprintf(line, sizeof line, "%-28s %-18s %-13s %6s %6s %6s %9s\n", "job", "kind", "status", "pass", "fail",
                  "incon", "seconds");
    out += line;
    for (const auto& j : jobs) {
        std::snprintf(line, sizeof line, "%-28s %-18s %-13s %6zu %6zu %6zu %9.3f\n", j.id.c_str(), j.kind.c_str(),
                      to_string(j.status()), j.checks.count(Outcome::pass), j.checks.count(Outcome::fail),
                      j.checks.count(Outcome::inconclusive), j.seconds);
        out += line;
        if (!j.error.empty())
            out += "  error: " + j.error + "\n";
        for (const auto& c : j.checks.checks)
            if (c.outcome == Outcome::fail)
                out += "  FAIL " + c.name + (c.detail.empty() ? "" : " (" + c.detail + ")") + "\n";
    }
    out += "digest " + digest + ", seed " + std::to_string(options.seed) + ", cap " + std::to_string(options.cap) +
           ", window " + std::to_string(options.window) + "\n";
    return out;
}

std::size_t default_cap()
{
    if (const char* env = std::getenv("GRM_DEFAULT_CAP")) {
        char* end = nullptr;
        const long long v = std::strtoll(env, &end, 10);
        if (end != env && *end == '\0' && v >= 0)
            return static_cast<std::size_t>(v);
    }
    return 8;
}

} // namespace grm
