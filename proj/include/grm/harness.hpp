#pragma once

#include "grm/homalg.hpp"
#include "grm/pid.hpp"
#include "grm/regrade.hpp"

#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace grm {

/// Error in an input document, carrying the section and line it came from.
class DocumentError : public std::runtime_error {
public:
    DocumentError(const std::string& section, int line, const std::string& what);
    const std::string& section() const { return section_; }
    int line() const { return line_; }

private:
    std::string section_;
    int line_;
};

struct Job {
    std::string id;
    std::string kind;
    std::map<std::string, std::string> params;
    int line = 0;
};

/// Resolved object graph of an input document.
struct Document {
    std::string text;
    std::map<std::string, FgAbelianGroup> groups;
    std::map<std::string, GroupMorphism> morphisms;
    std::map<std::string, AlgebraPtr> algebras;
    std::map<std::string, ModulePtr> modules;
    std::map<std::string, PidGradedModule> pid_modules;
    std::vector<Job> jobs;

    const AlgebraPtr& algebra(const std::string& name) const;
    const ModulePtr& module(const std::string& name) const;
    const GroupMorphism& morphism(const std::string& name) const;
};

/// Throws std::invalid_argument for an unknown kind, a missing parameter or a dangling reference.
void validate_job(const Document& doc, const Job& job);

/// Parses and validates every object; throws DocumentError naming section, line and reference.
Document parse_document(const std::string& text);
Document load_document(const std::string& path);

/// The document in the input format with every algebra written as a quiver or by structure
/// constants and every module written explicitly. Parsing the result gives equal objects, and
/// serializing again gives the same bytes.
std::string serialize_document(const Document& doc);

/// Valid graded module of dimension <= max_dim: a quotient of a random sum of shifted projectives
/// (shifts within support_radius) by random homogeneous relations, or the dual of such a module
/// over the opposite algebra. Deterministic in the seed. Throws std::runtime_error when no module
/// passes validation within the retry budget.
GradedModule random_module(const AlgebraPtr& algebra, std::uint64_t seed, std::size_t max_dim,
                           std::int64_t support_radius);

struct RunOptions {
    std::uint64_t seed = 0;
    std::size_t cap = 8;
    std::int64_t window = 4;
};

/// Default cap: GRM_DEFAULT_CAP when set to a non-negative integer, else 8.
std::size_t default_cap();

struct JobResult {
    std::string id;
    std::string kind;
    CheckList checks;
    std::string error; // non-empty when the job threw
    std::string data;  // serialized JSON object with job-specific values
    double seconds = 0;

    Outcome status() const;
};

JobResult run_job(const Document& doc, const Job& job, const RunOptions& opt);

struct Report {
    std::string digest;
    RunOptions options;
    std::vector<JobResult> jobs;

    bool failed() const;
    /// Versioned JSON ("grm-report/1"); timings are excluded so equal inputs give equal bytes.
    std::string to_json() const;
    /// Fixed-width table for terminals, timings included.
    std::string to_table() const;
};

inline constexpr const char* report_schema = "grm-report/1";

/// FNV-1a 64 over the document text, the run options and the jobs to run.
std::string input_digest(const std::string& text, const RunOptions& opt, const std::vector<Job>& jobs);

/// Runs every job (in parallel) and assembles results in declaration order.
Report run_campaign(const Document& doc, const RunOptions& opt);
Report run_jobs(const Document& doc, const std::vector<Job>& jobs, const RunOptions& opt);

} // namespace grm
