#pragma once

#include <variant>

#include "lck/rep.hpp"

namespace lck {

// Coefficient module of a cochain. When `trivial` is set the module is C with D acting by 0.
struct Coefficients {
    RepPtr rep;
    bool trivial = false;

    static Coefficients adjoint_of(const LcaPtr& l);
    static Coefficients trivial_of(const LcaPtr& l);
    static Coefficients module(const RepPtr& r);
    std::size_t rank() const { return trivial ? 1 : rep->rank(); }
};

// c_L(e_i, e_j) = sum_k C[i][j][k](L, D) v_k, skew-symmetric under L -> -L - D.
class Cochain2 {
public:
    Cochain2(LcaPtr algebra, Coefficients coeffs, SesquiTable table);

    const LcaStructure& algebra() const { return *algebra_; }
    const LcaPtr& algebra_ptr() const { return algebra_; }
    const Coefficients& coefficients() const { return coeffs_; }
    const SesquiTable& table() const { return table_; }
    Element eval(const Element& x, const Element& y, const Poly& spectral) const;

private:
    LcaPtr algebra_;
    Coefficients coeffs_;
    SesquiTable table_;
};

// 3-cochain on generators with L = lambda_1, M = lambda_2.
struct Cochain3 {
    LcaPtr algebra;
    Coefficients coeffs;
    std::vector<Element> entries;  // index (i*n + j)*n + k

    const Element& at(std::size_t i, std::size_t j, std::size_t k) const;
    bool is_zero() const;
};

// 1-cochain c: A -> V as a C[D]-linear map.
Cochain2 coboundary_1(const LcaPtr& l, const Coefficients& coeffs, const CdHom& c);
Cochain3 coboundary_2(const Cochain2& c);
Report check_2cocycle(const Cochain2& c);

using AnyCochain = std::variant<CdHom, Cochain2, Cochain3>;
// Degree 3 and above raise Unsupported.
AnyCochain coboundary(const LcaPtr& l, const Coefficients& coeffs, const AnyCochain& c);

// Table P + t C for a 2-cochain with adjoint coefficients; t must be a parameter symbol.
LcaStructure deform_with_parameter(const LcaStructure& l, const Cochain2& omega, SymbolId t);

}  // namespace lck
