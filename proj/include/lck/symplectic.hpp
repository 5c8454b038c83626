#pragma once

#include "lck/ybe.hpp"

namespace lck {

// {f(D)e_i L g(D)e_j} = f(-L) g(L) W[i][j](L), with W[i][j](L) = -W[j][i](-L).
class TwoForm {
public:
    TwoForm(LcaPtr algebra, std::vector<Poly> table, std::string name = "w");
    // Skips the skew-symmetry check; used for intermediate tables.
    static TwoForm unchecked(LcaPtr algebra, std::vector<Poly> table, std::string name);

    const LcaStructure& algebra() const { return *algebra_; }
    const LcaPtr& algebra_ptr() const { return algebra_; }
    std::size_t rank() const { return algebra_->rank(); }
    const std::string& name() const { return name_; }
    void set_name(std::string n) { name_ = std::move(n); }
    const Poly& at(std::size_t i, std::size_t j) const { return w_[i * rank() + j]; }
    const std::vector<Poly>& table() const { return w_; }
    bool operator==(const TwoForm& o) const { return rank() == o.rank() && w_ == o.w_; }

private:
    TwoForm() = default;
    LcaPtr algebra_;
    std::vector<Poly> w_;
    std::string name_;
};

// Entries keyed by (i,j); missing (j,i) entries come from skew-symmetry, explicit ones must agree.
TwoForm form_from_entries(LcaPtr algebra, const std::map<std::pair<std::size_t, std::size_t>, Poly>& entries,
                          std::string name = "w");

Poly form_eval(const TwoForm& w, const Element& x, const Element& y, const Poly& spectral);

// H[i][j](D) = W[i][j](-D), a map A -> A*c
CdHom omega_natural(const TwoForm& w);
bool is_nondegenerate(const TwoForm& w);

Report check_cocycle(const TwoForm& w);
// Pass when closed and non-degenerate; split when closed but degenerate.
Report check_symplectic(const TwoForm& w);

Cochain2 as_cochain(const TwoForm& w);

// W_N[i][j](L) = sum_l N^k[i][l](-L) W[l][j](L)
TwoForm omega_N(const TwoForm& w, const CdHom& n, unsigned k);
Report check_omega_Nk_closed(const TwoForm& w, const CdHom& n, unsigned kmax);
Report check_sn_structure(const TwoForm& w, const CdHom& n);

CdHom o_from_symplectic(const TwoForm& w);
OnCandidate on_from_sn(const TwoForm& w, const CdHom& n);

// R[j][k](D1, D2) = G[j][k](D2) with G the inverse of the natural map.
Tensor2 r_from_symplectic(const TwoForm& w);
// The form whose natural map is the inverse of r#_0.
TwoForm form_from_r(const Tensor2& r);

}  // namespace lck
