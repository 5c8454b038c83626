#pragma once

#include <string>

#include "lck/ooperator.hpp"

namespace lck {

// r = sum R[i][j](D1, D2) e_i (x) e_j
class Tensor2 {
public:
    Tensor2(LcaPtr algebra, std::string name = "r");

    const LcaStructure& algebra() const { return *algebra_; }
    const LcaPtr& algebra_ptr() const { return algebra_; }
    std::size_t rank() const { return algebra_->rank(); }
    const std::string& name() const { return name_; }
    void set_name(std::string n) { name_ = std::move(n); }
    Poly& at(std::size_t i, std::size_t j) { return r_[i * rank() + j]; }
    const Poly& at(std::size_t i, std::size_t j) const { return r_[i * rank() + j]; }
    bool operator==(const Tensor2& o) const { return rank() == o.rank() && r_ == o.r_; }
    Tensor2 operator+(const Tensor2& o) const;
    friend Tensor2 operator*(const Poly& s, const Tensor2& t);

private:
    LcaPtr algebra_;
    std::string name_;
    std::vector<Poly> r_;
};

struct Tensor3 {
    std::size_t n = 0;
    std::vector<Poly> w;  // index (i*n + j)*n + k, polynomials in D1, D2, D3

    explicit Tensor3(std::size_t rank) : n(rank), w(rank * rank * rank) {}
    Poly& at(std::size_t i, std::size_t j, std::size_t k) { return w[(i * n + j) * n + k]; }
    const Poly& at(std::size_t i, std::size_t j, std::size_t k) const { return w[(i * n + j) * n + k]; }
    bool is_zero() const;
};

Report is_skew(const Tensor2& r);

// r#_0 : A*c -> A, T[j][k](D) = R[j][k](-D, D)
CdHom r_sharp0(const Tensor2& r);
// Matrix of r#_L on dual generators, entries R[j][k](-L-D, D).
std::vector<Poly> r_sharp_lambda(const Tensor2& r);
bool is_lambda_constant(const Tensor2& r);
Report is_nondegenerate_r(const Tensor2& r);

// [[r, r]] before reduction.
Tensor3 expand_cybe(const Tensor2& r);
// Quotient by the image of D^(x)3 via D3 -> -D1 - D2.
Tensor3 reduce_mod_partial(const Tensor3& w);
Report cybe_check(const Tensor2& r);
// The same question through r#_0 on the coadjoint pair.
Report cybe_via_o_operator(const Tensor2& r);

Report check_rmatrix_nijenhuis(const Tensor2& r, const CdHom& n);

// (id (x) N^k) r
Tensor2 r_deform(const Tensor2& r, const CdHom& n, unsigned k);
Report check_r_family_compatible(const Tensor2& r, const CdHom& n, unsigned kmax);
// k1 r1 + k2 r2 solves the equation for indeterminate k1, k2.
Report cybe_check_combination(const Tensor2& r1, const Tensor2& r2);

}  // namespace lck
