#include "grm/report.hpp"

namespace grm {

const char* to_string(Outcome o)
{
    switch (o) {
    case Outcome::pass:
        return "pass";
    case Outcome::fail:
        return "fail";
    case Outcome::inconclusive:
        return "inconclusive";
    }
    return "?";
}

void CheckList::add(std::string name, bool ok, std::string detail)
{
    checks.push_back({std::move(name), ok ? Outcome::pass : Outcome::fail, std::move(detail)});
}

void CheckList::inconclusive(std::string name, std::string detail)
{
    checks.push_back({std::move(name), Outcome::inconclusive, std::move(detail)});
}

void CheckList::append(const CheckList& other, const std::string& prefix)
{
    for (const auto& c : other.checks)
        checks.push_back({prefix + c.name, c.outcome, c.detail});
}

bool CheckList::passed() const { return first_failure() == nullptr; }

std::size_t CheckList::count(Outcome o) const
{
    std::size_t n = 0;
    for (const auto& c : checks)
        n += c.outcome == o;
    return n;
}

const Check* CheckList::first_failure() const
{
    for (const auto& c : checks)
        if (c.outcome == Outcome::fail)
            return &c;
    return nullptr;
}

} // namespace grm
