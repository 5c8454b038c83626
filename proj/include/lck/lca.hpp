#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>

#include "lck/module.hpp"
#include "lck/report.hpp"
#include "lck/table.hpp"

namespace lck {

// [e_i L e_j] = sum_k P[i][j][k](L, D) e_k
class LcaStructure {
public:
    LcaStructure(CdModule module, SesquiTable table);

    const CdModule& module() const { return module_; }
    const std::string& name() const { return module_.name; }
    std::size_t rank() const { return module_.rank(); }
    const SesquiTable& table() const { return table_; }
    bool verified() const { return verified_; }
    LcaStructure renamed(std::string name) const;

private:
    friend std::shared_ptr<const LcaStructure> verify(const LcaStructure&);
    CdModule module_;
    SesquiTable table_;
    bool verified_ = false;
};

using LcaPtr = std::shared_ptr<const LcaStructure>;

// Entries keyed by (i,j). Missing (j,i) entries are filled by skew-symmetry; explicit
// redundant entries must agree with the synthesized value.
LcaStructure lca_from_entries(CdModule module, const std::map<std::pair<std::size_t, std::size_t>, Element>& entries);

Element bracket_at(const LcaStructure& l, const Element& x, const Element& y, const Poly& spectral);
Element bracket_eval(const LcaStructure& l, const Element& x, const Element& y);
Element bracket_shifted(const LcaStructure& l, const Element& x, const Element& y);

Report check_lca_axioms(const LcaStructure& l);
// Runs the axiom check; throws Unverified with the report summary on failure.
LcaPtr verify(const LcaStructure& l);

// {a L b}_N = [N a L b] + [a L N b] - N[a L b]
LcaStructure deformed_bracket(const LcaStructure& l, const CdHom& n);

// Finite-dimensional Lie algebra over Q[params]: [x_i, x_j] = sum_k c[i][j][k] x_k.
struct LieAlgebra {
    std::string name;
    std::vector<std::string> basis;
    std::vector<Poly> c;

    LieAlgebra() = default;
    LieAlgebra(std::string name, std::vector<std::string> basis);
    std::size_t dim() const { return basis.size(); }
    Poly& at(std::size_t i, std::size_t j, std::size_t k) { return c[(i * dim() + j) * dim() + k]; }
    const Poly& at(std::size_t i, std::size_t j, std::size_t k) const { return c[(i * dim() + j) * dim() + k]; }
    std::vector<Poly> bracket(const std::vector<Poly>& x, const std::vector<Poly>& y) const;
    bool operator==(const LieAlgebra&) const = default;
};

Report check_lie(const LieAlgebra& g);
LcaStructure current(const LieAlgebra& g);

// Common substitutions.
Poly lambda_shift();  // -L - D
Element shift_lambda(const Element& e);  // L -> -L - D

}  // namespace lck
