#include "lck/report.hpp"

#include <sstream>

namespace lck {

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        case Verdict::Split: return "split";
        case Verdict::Error: return "error";
    }
    return "?";
}

void Report::add(std::string location, std::vector<Poly> terms) {
    Poly sum;
    for (const auto& t : terms) sum += t;
    residuals.push_back({std::move(location), std::move(sum), std::move(terms)});
}

void Report::require(std::string name, bool ok, std::string detail) {
    conditions.push_back({std::move(name), ok, std::move(detail)});
}

void Report::note(std::string text) { notes.push_back(std::move(text)); }

void Report::merge(const Report& sub, const std::string& prefix) {
    for (const auto& r : sub.residuals) residuals.push_back({prefix + r.location, r.value, r.terms});
    for (const auto& c : sub.conditions) conditions.push_back({prefix + c.name, c.ok, c.detail});
    for (const auto& n : sub.notes) notes.push_back(prefix + n);
    if (!sub.error.empty()) conditions.push_back({prefix + "error", false, sub.error});
}

void Report::require_report(const std::string& name, const Report& sub) {
    for (const auto& r : sub.residuals) residuals.push_back({name + ": " + r.location, r.value, r.terms});
    for (const auto& n : sub.notes) notes.push_back(name + ": " + n);
    std::string detail;
    if (!sub.error.empty())
        detail = sub.error;
    else if (!sub.passed())
        detail = sub.summary();
    conditions.push_back({name, sub.passed(), detail});
}

Verdict Report::verdict() const {
    if (!error.empty()) return Verdict::Error;
    if (forced) return *forced;
    for (const auto& r : residuals)
        if (!r.value.is_zero()) return Verdict::Fail;
    for (const auto& c : conditions)
        if (!c.ok) return Verdict::Fail;
    return Verdict::Pass;
}

std::vector<const Residual*> Report::failures() const {
    std::vector<const Residual*> out;
    for (const auto& r : residuals)
        if (!r.value.is_zero()) out.push_back(&r);
    return out;
}

std::vector<const Condition*> Report::failed_conditions() const {
    std::vector<const Condition*> out;
    for (const auto& c : conditions)
        if (!c.ok) out.push_back(&c);
    return out;
}

std::string Report::summary() const {
    std::ostringstream os;
    os << check << ' ' << subject << ": " << to_string(verdict());
    if (!error.empty()) os << " (" << error << ')';
    auto f = failures();
    if (!f.empty()) os << "; " << f.size() << " nonzero residual(s), first at " << f.front()->location;
    auto c = failed_conditions();
    if (!c.empty()) os << "; failed: " << c.front()->name;
    return os.str();
}

}  // namespace lck
