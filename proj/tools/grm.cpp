#include "grm/harness.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>

namespace {

struct Options {
    std::string file;
    std::string module, target, injective, morphism, algebra, json, emit;
    std::size_t cap = grm::default_cap();
    std::int64_t window = 4;
    std::uint64_t seed = 0;
    std::size_t degree = 0;
};

int finish(const grm::Report& rep, const std::string& json, bool details)
{
    std::cout << rep.to_table();
    if (details)
        for (const auto& j : rep.jobs) {
            for (const auto& c : j.checks.checks)
                std::cout << "  [" << grm::to_string(c.outcome) << "] " << c.name
                          << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
            std::cout << "  data: " << j.data << "\n";
        }
    if (!json.empty()) {
        std::ofstream out(json, std::ios::binary);
        if (!out)
            throw std::runtime_error("cannot write " + json);
        out << rep.to_json();
    }
    return rep.failed() ? 1 : 0;
}

int single(const Options& o, const std::string& kind, std::map<std::string, std::string> params)
{
    const grm::Document doc = grm::load_document(o.file);
    for (auto it = params.begin(); it != params.end();)
        it = it->second.empty() ? params.erase(it) : std::next(it);
    grm::Job job{kind, kind, std::move(params), 0};
    grm::validate_job(doc, job);
    return finish(grm::run_jobs(doc, {job}, {o.seed, o.cap, o.window}), o.json, true);
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact change-of-grading computations for group-graded modules"};
    app.require_subcommand(1);
    Options o;

    auto file = [&](CLI::App* c) { c->add_option("file", o.file, "input document")->required()->check(CLI::ExistingFile); };
    auto common = [&](CLI::App* c) {
        c->add_option("--cap", o.cap, "resolution length cap (default $GRM_DEFAULT_CAP or 8)");
        c->add_option("--json", o.json, "write the JSON report here");
    };
    auto need = [&](CLI::App* c, const char* name, std::string& into) { c->add_option(name, into)->required(); };

    auto* validate = app.add_subcommand("validate", "parse and validate a document");
    file(validate);
    validate->add_option("--emit", o.emit, "write the document back out with every module in explicit form");

    auto* resolve = app.add_subcommand("resolve", "minimal projective resolution");
    file(resolve);
    common(resolve);
    need(resolve, "--module", o.module);

    auto* ext = app.add_subcommand("ext", "dimensions of Ext^i(M, N)");
    file(ext);
    common(ext);
    need(ext, "--module", o.module);
    need(ext, "--target", o.target);
    ext->add_option("--degree", o.degree, "single degree i (default: all up to the cap)");

    auto* injdim = app.add_subcommand("injdim", "graded injective dimension");
    file(injdim);
    common(injdim);
    need(injdim, "--module", o.module);

    auto* regrade = app.add_subcommand("regrade", "pushforward and coinduction along a morphism");
    file(regrade);
    common(regrade);
    need(regrade, "--module", o.module);
    need(regrade, "--morphism", o.morphism);

    auto* ineq = app.add_subcommand("verify-inequality", "id_G(M) <= id_G'(phi_! M) <= id_G(M) + cd(ker phi)");
    file(ineq);
    common(ineq);
    need(ineq, "--module", o.module);
    need(ineq, "--morphism", o.morphism);

    auto* adj = app.add_subcommand("verify-adjunction", "unit, counit and Hom bijections for phi_! -| phi^* -| phi_*");
    file(adj);
    common(adj);
    need(adj, "--module", o.module);
    need(adj, "--target", o.target);
    need(adj, "--morphism", o.morphism);

    auto* lemma = app.add_subcommand("verify-lemma", "sum of shifts over ker(phi) against phi^* phi_! M");
    file(lemma);
    common(lemma);
    need(lemma, "--module", o.module);
    need(lemma, "--morphism", o.morphism);
    lemma->add_option("--window", o.window, "kernel window radius for infinite kernels");

    auto* res = app.add_subcommand("verify-resolution", "windowed rank-1 resolution 0 -> phi_! phi^* N -> phi_! phi^* N -> N");
    file(res);
    common(res);
    need(res, "--module", o.module);
    need(res, "--morphism", o.morphism);
    need(res, "--algebra", o.algebra);
    res->add_option("--window", o.window, "kernel window radius");

    auto* acyc = app.add_subcommand("verify-acyclicity", "Ext^i(phi_! S, phi_! I) = 0 for 1 <= i <= cap");
    file(acyc);
    common(acyc);
    need(acyc, "--morphism", o.morphism);
    acyc->add_option("--module", o.module, "simple module (default: every simple of --algebra)");
    acyc->add_option("--injective", o.injective, "injective module");
    acyc->add_option("--algebra", o.algebra, "check every simple against every indecomposable injective");

    auto* pid = app.add_subcommand("demo-pid", "sharp examples over k[t]");
    pid->add_option("--json", o.json, "write the JSON report here");

    auto* campaign = app.add_subcommand("campaign", "run every job of a document");
    file(campaign);
    common(campaign);
    campaign->add_option("--seed", o.seed, "random seed");
    campaign->add_option("--window", o.window, "default kernel window radius");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*validate) {
            const grm::Document d = grm::load_document(o.file);
            std::cout << o.file << ": ok (" << d.groups.size() << " groups, " << d.morphisms.size() << " morphisms, "
                      << d.algebras.size() << " algebras, " << d.modules.size() << " modules, "
                      << d.pid_modules.size() << " pid modules, " << d.jobs.size() << " jobs)\n";
            if (!o.emit.empty()) {
                std::ofstream out(o.emit, std::ios::binary);
                if (!out)
                    throw std::runtime_error("cannot write " + o.emit);
                out << grm::serialize_document(d);
            }
            return 0;
        }
        if (*resolve)
            return single(o, "resolve", {{"module", o.module}});
        if (*ext)
            return single(o, "ext",
                          {{"module", o.module}, {"target", o.target}, {"degree", ext->count("--degree") ? std::to_string(o.degree) : ""}});
        if (*injdim)
            return single(o, "injdim", {{"module", o.module}});
        if (*regrade)
            return single(o, "regrade", {{"module", o.module}, {"morphism", o.morphism}});
        if (*ineq)
            return single(o, "inequality", {{"module", o.module}, {"morphism", o.morphism}});
        if (*adj)
            return single(o, "adjunction", {{"module", o.module}, {"target", o.target}, {"morphism", o.morphism}});
        if (*lemma)
            return single(o, "lemma", {{"module", o.module}, {"morphism", o.morphism}});
        if (*res)
            return single(o, "resolution", {{"module", o.module}, {"morphism", o.morphism}, {"algebra", o.algebra}});
        if (*acyc)
            return single(o, "acyclicity",
                          {{"module", o.module}, {"injective", o.injective}, {"algebra", o.algebra}, {"morphism", o.morphism}});
        if (*pid) {
            grm::Document d;
            grm::Job job{"sharpness", "pid_sharpness", {}, 0};
            return finish(grm::run_jobs(d, {job}, {0, o.cap, o.window}), o.json, true);
        }
        if (*campaign) {
            const grm::Document d = grm::load_document(o.file);
            return finish(grm::run_campaign(d, {o.seed, o.cap, o.window}), o.json, false);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
