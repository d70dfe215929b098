#pragma once

#include <string>
#include <vector>

namespace grm {

enum class Outcome { pass, fail, inconclusive };

const char* to_string(Outcome o);

struct Check {
    std::string name;
    Outcome outcome = Outcome::pass;
    std::string detail;
};

/// Ordered list of named outcomes produced by a verifier.
struct CheckList {
    std::vector<Check> checks;

    void add(std::string name, bool ok, std::string detail = {});
    void inconclusive(std::string name, std::string detail);
    void append(const CheckList& other, const std::string& prefix = {});
    bool passed() const;
    std::size_t count(Outcome o) const;
    /// First failing check, or nullptr.
    const Check* first_failure() const;
};

} // namespace grm
