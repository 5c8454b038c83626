#pragma once

#include <cstddef>
#include <vector>

#include "lck/module.hpp"

namespace lck {

// Table T[i][j][k](L, D) of a sesquilinear operation A x B -> C[L] on free modules:
// (f(D)e_i)_s (g(D)e_j) = f(-s) g(s + D) sum_k T[i][j][k](s, D) e_k.
class SesquiTable {
public:
    SesquiTable() = default;
    SesquiTable(std::size_t left, std::size_t right, std::size_t out)
        : l_(left), r_(right), o_(out), t_(left * right * out) {}

    std::size_t left_rank() const { return l_; }
    std::size_t right_rank() const { return r_; }
    std::size_t out_rank() const { return o_; }

    Poly& at(std::size_t i, std::size_t j, std::size_t k) { return t_[(i * r_ + j) * o_ + k]; }
    const Poly& at(std::size_t i, std::size_t j, std::size_t k) const { return t_[(i * r_ + j) * o_ + k]; }
    Element entry(std::size_t i, std::size_t j) const;
    void set_entry(std::size_t i, std::size_t j, const Element& e);

    // Evaluation at spectral value s; s may contain D, which then refers to the output slot.
    Element eval(const Element& x, const Element& y, const Poly& s) const;

    SesquiTable substitute(const Substitution& b) const;
    bool only_kinds(std::initializer_list<SymbolKind> kinds, bool allow_l) const;
    bool operator==(const SesquiTable&) const = default;

private:
    std::size_t l_ = 0, r_ = 0, o_ = 0;
    std::vector<Poly> t_;
};

}  // namespace lck
