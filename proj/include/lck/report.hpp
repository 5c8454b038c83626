#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lck/oracle.hpp"
#include "lck/poly.hpp"

namespace lck {

enum class Verdict { Pass, Fail, Split, Error };

const char* to_string(Verdict v);

struct Residual {
    std::string location;
    Poly value;               // sum of terms
    std::vector<Poly> terms;  // kept for the independent evaluation oracle
};

struct Condition {
    std::string name;
    bool ok = true;
    std::string detail;
};

class Report {
public:
    Report() = default;
    Report(std::string check, std::string subject) : check(std::move(check)), subject(std::move(subject)) {}

    std::string check;
    std::string subject;
    std::vector<Residual> residuals;
    std::vector<Condition> conditions;
    std::vector<std::string> notes;
    std::optional<Verdict> forced;
    std::string error;

    // Residual whose value is the sum of `terms`.
    void add(std::string location, std::vector<Poly> terms);
    void require(std::string name, bool ok, std::string detail = {});
    void note(std::string text);
    // Adds every residual and condition of `sub`, prefixing locations and names.
    void merge(const Report& sub, const std::string& prefix);
    // Adds `sub` as one named condition; its residuals are kept for the oracle.
    void require_report(const std::string& name, const Report& sub);

    Verdict verdict() const;
    bool passed() const { return verdict() == Verdict::Pass; }
    std::vector<const Residual*> failures() const;
    std::vector<const Condition*> failed_conditions() const;
    std::string summary() const;
};

}  // namespace lck
