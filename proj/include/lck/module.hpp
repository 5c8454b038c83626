#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "lck/errors.hpp"
#include "lck/poly.hpp"

namespace lck {

// Free C[D]-module of finite rank with named generators.
struct CdModule {
    std::string name;
    std::vector<std::string> basis;

    std::size_t rank() const { return basis.size(); }
    std::size_t index_of(const std::string& b) const;  // throws when absent
    bool operator==(const CdModule&) const = default;
};

// Dual module with generators named <b>_star.
CdModule dual_module(const CdModule& m, const std::string& name = {});

// Element-valued polynomial: the coefficient of each generator.
class Element {
public:
    Element() = default;
    explicit Element(std::size_t rank) : c_(rank) {}
    explicit Element(std::vector<Poly> coeffs) : c_(std::move(coeffs)) {}
    static Element basis(std::size_t rank, std::size_t i, const Poly& coef = Poly(1));

    std::size_t rank() const { return c_.size(); }
    Poly& operator[](std::size_t i) { return c_[i]; }
    const Poly& operator[](std::size_t i) const { return c_[i]; }
    const std::vector<Poly>& coeffs() const { return c_; }
    bool is_zero() const;

    Element& operator+=(const Element& o);
    Element& operator-=(const Element& o);
    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    Element operator-() const;
    friend Element operator*(const Poly& s, const Element& e);
    bool operator==(const Element&) const = default;

    Element substitute(const Substitution& b) const;

private:
    std::vector<Poly> c_;
};

// C[D]-module homomorphism with T(e_j) = sum_k T[j][k](D) e_k.
class CdHom {
public:
    CdHom() = default;
    CdHom(std::size_t src, std::size_t dst) : src_(src), dst_(dst), m_(src * dst) {}
    static CdHom identity(std::size_t n);
    static CdHom scalar(std::size_t n, const Poly& c);

    std::size_t src_rank() const { return src_; }
    std::size_t dst_rank() const { return dst_; }
    bool is_endo() const { return src_ == dst_; }
    Poly& at(std::size_t j, std::size_t k) { return m_[j * dst_ + k]; }
    const Poly& at(std::size_t j, std::size_t k) const { return m_[j * dst_ + k]; }
    Element row(std::size_t j) const;

    Element apply(const Element& x) const;
    CdHom operator+(const CdHom& o) const;
    CdHom operator-(const CdHom& o) const;
    friend CdHom operator*(const Poly& s, const CdHom& h);
    CdHom pow(unsigned k) const;
    bool is_zero() const;
    bool operator==(const CdHom&) const = default;

private:
    std::size_t src_ = 0, dst_ = 0;
    std::vector<Poly> m_;
};

// outer o inner
CdHom compose(const CdHom& outer, const CdHom& inner);

// S*(e_j*) = sum_k S[k][j](-D) e_k*
CdHom dual_hom(const CdHom& s);

// <f(D) e_j*, g(D) e_k>_sigma = f(-sigma) g(sigma) delta_jk, extended bilinearly.
Poly pairing(const Element& alpha, const Element& v, const Poly& spectral);

class NonInvertible : public Error {
public:
    explicit NonInvertible(Poly det);
    Poly determinant;
};

struct DetInfo {
    Poly det;
    bool unit = false;
};

Poly determinant(const CdHom& t);
DetInfo hom_det_unit(const CdHom& t);
CdHom invert_hom(const CdHom& t);

// D -> value in each coefficient.
Poly subst_d(const Poly& p, const Poly& value);

}  // namespace lck
