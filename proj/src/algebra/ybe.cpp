#include "lck/ybe.hpp"

namespace lck {
namespace {

Poly x() { return Poly::var(sym::X()); }
Poly y() { return Poly::var(sym::Y()); }
Poly z() { return Poly::var(sym::Z()); }
Poly d() { return Poly::var(sym::D()); }
Poly lam() { return Poly::var(sym::L()); }

Poly sub_xy(const Poly& p, const Poly& xv, const Poly& yv) { return p.substitute({{sym::X(), xv}, {sym::Y(), yv}}); }
Poly sub_ld(const Poly& p, const Poly& lv, const Poly& dv) { return p.substitute({{sym::L(), lv}, {sym::D(), dv}}); }

Poly fresh_param(const std::string& name) { return Poly::var(Symbols::intern(name, SymbolKind::Param)); }

std::string loc3(const CdModule& m, std::size_t i, std::size_t j, std::size_t k) {
    return "cybe(" + m.basis[i] + "," + m.basis[j] + "," + m.basis[k] + ")";
}

RepPtr coadjoint_pair(const LcaPtr& l) {
    if (!l->verified()) throw Unverified("algebra " + l->name() + " is not verified");
    return verify(coadjoint(*verify(adjoint(l))));
}

}  // namespace

Tensor2::Tensor2(LcaPtr algebra, std::string name)
    : algebra_(std::move(algebra)), name_(std::move(name)), r_(algebra_->rank() * algebra_->rank()) {}

Tensor2 Tensor2::operator+(const Tensor2& o) const {
    if (o.rank() != rank()) throw ModuleMismatch("tensor rank mismatch");
    Tensor2 t = *this;
    for (std::size_t i = 0; i < r_.size(); ++i) t.r_[i] += o.r_[i];
    return t;
}

Tensor2 operator*(const Poly& s, const Tensor2& t) {
    Tensor2 r = t;
    for (auto& p : r.r_) p = s * p;
    return r;
}

bool Tensor3::is_zero() const {
    for (const auto& p : w)
        if (!p.is_zero()) return false;
    return true;
}

Report is_skew(const Tensor2& r) {
    Report rep("skew", r.name());
    const std::size_t n = r.rank();
    const auto& m = r.algebra().module();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            std::vector<Poly> terms{r.at(i, j), sub_xy(r.at(j, i), y(), x())};
            if (!terms[0].is_zero() || !terms[1].is_zero())
                rep.add("skew(" + m.basis[i] + "," + m.basis[j] + ")", std::move(terms));
        }
    return rep;
}

CdHom r_sharp0(const Tensor2& r) {
    const std::size_t n = r.rank();
    CdHom h(n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) h.at(j, k) = sub_xy(r.at(j, k), -d(), d());
    return h;
}

std::vector<Poly> r_sharp_lambda(const Tensor2& r) {
    const std::size_t n = r.rank();
    std::vector<Poly> m(n * n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) m[j * n + k] = sub_xy(r.at(j, k), -lam() - d(), d());
    return m;
}

bool is_lambda_constant(const Tensor2& r) {
    const std::size_t n = r.rank();
    auto m = r_sharp_lambda(r);
    CdHom h = r_sharp0(r);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
            if (!(m[j * n + k] == h.at(j, k))) return false;
    return true;
}

Report is_nondegenerate_r(const Tensor2& r) {
    Report rep("nondegenerate-r", r.name());
    rep.require("r#_L is independent of L", is_lambda_constant(r));
    DetInfo info = hom_det_unit(r_sharp0(r));
    rep.require("r#_0 is an isomorphism", info.unit, "det = " + info.det.str());
    rep.note("non-degeneracy requires both lambda-independence and a unit determinant");
    return rep;
}

Tensor3 expand_cybe(const Tensor2& r) {
    const std::size_t n = r.rank();
    const auto& P = r.algebra().table();
    Tensor3 w(n);
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) {
            const Poly& ri = r.at(p, q);
            if (ri.is_zero()) continue;
            const Poly ri1 = sub_xy(ri, -y(), y());
            const Poly ri2 = sub_xy(ri, x(), z() + y());
            for (std::size_t pp = 0; pp < n; ++pp)
                for (std::size_t qq = 0; qq < n; ++qq) {
                    const Poly& rj = r.at(pp, qq);
                    if (rj.is_zero()) continue;
                    const Poly c1 = ri1 * sub_xy(rj, y() + x(), z());
                    const Poly c2 = ri2 * sub_xy(rj, -z(), z());
                    const Poly c3 = ri2 * sub_xy(rj, y(), -y());
                    for (std::size_t k = 0; k < n; ++k) {
                        if (!P.at(p, pp, k).is_zero()) w.at(k, q, qq) += c1 * sub_ld(P.at(p, pp, k), y(), x());
                        if (!P.at(pp, q, k).is_zero()) w.at(p, k, qq) -= c2 * sub_ld(P.at(pp, q, k), z(), y());
                        if (!P.at(qq, q, k).is_zero()) w.at(p, pp, k) -= c3 * sub_ld(P.at(qq, q, k), y(), z());
                    }
                }
        }
    return w;
}

Tensor3 reduce_mod_partial(const Tensor3& w) {
    Tensor3 out(w.n);
    const Substitution b{{sym::Z(), -x() - y()}};
    for (std::size_t i = 0; i < w.w.size(); ++i) out.w[i] = w.w[i].substitute(b);
    return out;
}

Report cybe_check(const Tensor2& r) {
    Report rep("cybe", r.name());
    Tensor3 red = reduce_mod_partial(expand_cybe(r));
    const std::size_t n = r.rank();
    const auto& m = r.algebra().module();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (!red.at(i, j, k).is_zero()) rep.add(loc3(m, i, j, k), {red.at(i, j, k)});
    return rep;
}

Report cybe_via_o_operator(const Tensor2& r) {
    RepPtr co = coadjoint_pair(r.algebra_ptr());
    Report rep = check_o_operator(*co, r_sharp0(r));
    rep.check = "cybe-ooperator";
    rep.subject = r.name();
    return rep;
}

Report check_rmatrix_nijenhuis(const Tensor2& r, const CdHom& n) {
    Report rep("rmatrix-nijenhuis", r.name());
    const std::size_t k = r.rank();
    if (n.src_rank() != k || n.dst_rank() != k) throw ModuleMismatch("N must be an endomorphism of " + r.algebra().name());
    rep.require_report("pre: r is skew-symmetric", is_skew(r));
    rep.require_report("pre: r solves the conformal CYBE", cybe_check(r));
    rep.require_report("pre: N is a Nijenhuis operator", check_nijenhuis_operator(r.algebra(), n));
    auto m = r_sharp_lambda(r);
    const Poly shift = -lam() - d();
    const auto& names = r.algebra().module().basis;
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t q = 0; q < k; ++q) {
            std::vector<Poly> terms;
            for (std::size_t l = 0; l < k; ++l) {
                if (!m[j * k + l].is_zero() && !n.at(l, q).is_zero()) terms.push_back(m[j * k + l] * n.at(l, q));
                if (!m[l * k + q].is_zero() && !n.at(l, j).is_zero())
                    terms.push_back(-(subst_d(n.at(l, j), shift) * m[l * k + q]));
            }
            if (!terms.empty()) rep.add("intertwine(" + names[j] + "_star)[" + names[q] + "]", std::move(terms));
        }
    RepPtr co = coadjoint_pair(r.algebra_ptr());
    rep.require_report("ON-structure (r#_0, N, N*)", check_on_structure(*co, r_sharp0(r), n, dual_hom(n)));
    return rep;
}

Tensor2 r_deform(const Tensor2& r, const CdHom& n, unsigned k) {
    const std::size_t s = r.rank();
    if (n.src_rank() != s || n.dst_rank() != s) throw ModuleMismatch("N must be an endomorphism of " + r.algebra().name());
    CdHom nk = n.pow(k);
    Tensor2 out(r.algebra_ptr(), r.name() + "_N" + std::to_string(k));
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < s; ++j) {
            if (r.at(i, j).is_zero()) continue;
            for (std::size_t l = 0; l < s; ++l)
                if (!nk.at(j, l).is_zero()) out.at(i, l) += r.at(i, j) * subst_d(nk.at(j, l), y());
        }
    return out;
}

Report cybe_check_combination(const Tensor2& r1, const Tensor2& r2) {
    Tensor2 comb = fresh_param("_k1") * r1 + fresh_param("_k2") * r2;
    comb.set_name("k1*" + r1.name() + " + k2*" + r2.name());
    Report rep = cybe_check(comb);
    rep.check = "cybe-compatible";
    return rep;
}

Report check_r_family_compatible(const Tensor2& r, const CdHom& n, unsigned kmax) {
    Report rep("r-family", r.name() + " kmax=" + std::to_string(kmax));
    rep.require_report("pre: (r,N) is an r-matrix-Nijenhuis structure", check_rmatrix_nijenhuis(r, n));
    std::vector<Tensor2> fam;
    for (unsigned k = 0; k <= kmax; ++k) fam.push_back(r_deform(r, n, k));
    for (unsigned k = 0; k <= kmax; ++k) {
        rep.require_report(fam[k].name() + " is skew", is_skew(fam[k]));
        rep.require_report(fam[k].name() + " solves the CYBE", cybe_check(fam[k]));
    }
    for (unsigned k = 0; k <= kmax; ++k)
        for (unsigned l = k + 1; l <= kmax; ++l)
            rep.require_report(fam[k].name() + ", " + fam[l].name() + " compatible", cybe_check_combination(fam[k], fam[l]));
    return rep;
}

}  // namespace lck
