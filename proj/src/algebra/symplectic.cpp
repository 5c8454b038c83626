#include "lck/symplectic.hpp"

namespace lck {
namespace {

Poly lam() { return Poly::var(sym::L()); }
Poly d() { return Poly::var(sym::D()); }

void check_table(const LcaPtr& a, const std::vector<Poly>& w, const std::string& name) {
    if (!a) throw ConstructionError("form " + name + " has no algebra");
    if (w.size() != a->rank() * a->rank()) throw ConstructionError("form " + name + " table shape mismatch");
    for (const auto& p : w)
        for (SymbolId s : p.symbols())
            if (s != sym::L() && Symbols::kind(s) != SymbolKind::Param)
                throw ConstructionError("form " + name + " may only use L and parameters");
}

std::string pair_loc(const std::string& kind, const CdModule& m, std::size_t i, std::size_t j) {
    return kind + "(" + m.basis[i] + "," + m.basis[j] + ")";
}

}  // namespace

TwoForm::TwoForm(LcaPtr algebra, std::vector<Poly> table, std::string name)
    : algebra_(std::move(algebra)), w_(std::move(table)), name_(std::move(name)) {
    check_table(algebra_, w_, name_);
    const std::size_t n = rank();
    const Substitution neg{{sym::L(), -lam()}};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            Poly r = at(i, j) + at(j, i).substitute(neg);
            if (!r.is_zero())
                throw ConstructionError("form " + name_ + " violates skew-symmetry at " +
                                        pair_loc("", algebra_->module(), i, j) + ": residual " + r.str());
        }
}

TwoForm TwoForm::unchecked(LcaPtr algebra, std::vector<Poly> table, std::string name) {
    check_table(algebra, table, name);
    TwoForm f;
    f.algebra_ = std::move(algebra);
    f.w_ = std::move(table);
    f.name_ = std::move(name);
    return f;
}

TwoForm form_from_entries(LcaPtr algebra, const std::map<std::pair<std::size_t, std::size_t>, Poly>& entries,
                          std::string name) {
    const std::size_t n = algebra->rank();
    std::vector<Poly> w(n * n);
    const Substitution neg{{sym::L(), -lam()}};
    for (const auto& [ij, p] : entries) {
        auto [i, j] = ij;
        if (i >= n || j >= n) throw ConstructionError("form entry index out of range");
        w[i * n + j] = p;
        if (i == j) continue;
        Poly mirror = -p.substitute(neg);
        auto it = entries.find({j, i});
        if (it == entries.end())
            w[j * n + i] = mirror;
        else if (!(it->second == mirror))
            throw ConstructionError("form entry (" + algebra->module().basis[j] + "," + algebra->module().basis[i] +
                                    ") disagrees with skew-symmetry");
    }
    return TwoForm(std::move(algebra), std::move(w), std::move(name));
}

Poly form_eval(const TwoForm& w, const Element& x, const Element& y, const Poly& s) {
    const std::size_t n = w.rank();
    if (x.rank() != n || y.rank() != n) throw ModuleMismatch("form evaluation on foreign elements");
    Poly out;
    const Substitution sl{{sym::L(), s}};
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i].is_zero()) continue;
        Poly f = subst_d(x[i], -s);
        for (std::size_t j = 0; j < n; ++j) {
            if (y[j].is_zero() || w.at(i, j).is_zero()) continue;
            out += f * subst_d(y[j], s) * w.at(i, j).substitute(sl);
        }
    }
    return out;
}

CdHom omega_natural(const TwoForm& w) {
    const std::size_t n = w.rank();
    CdHom h(n, n);
    const Substitution b{{sym::L(), -d()}};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) h.at(i, j) = w.at(i, j).substitute(b);
    return h;
}

bool is_nondegenerate(const TwoForm& w) { return hom_det_unit(omega_natural(w)).unit; }

Report check_cocycle(const TwoForm& w) {
    Report rep("cocycle", w.name());
    const std::size_t n = w.rank();
    const auto& A = w.algebra();
    const Poly l = lam(), m = Poly::var(sym::M());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Element ei = Element::basis(n, i), ej = Element::basis(n, j), ek = Element::basis(n, k);
                std::vector<Poly> terms{form_eval(w, ei, bracket_at(A, ej, ek, m), l),
                                        -form_eval(w, ej, bracket_at(A, ei, ek, l), m),
                                        -form_eval(w, bracket_at(A, ei, ej, l), ek, l + m)};
                if (!terms[0].is_zero() || !terms[1].is_zero() || !terms[2].is_zero())
                    rep.add("cocycle(" + A.module().basis[i] + "," + A.module().basis[j] + "," + A.module().basis[k] + ")",
                            std::move(terms));
            }
    return rep;
}

Report check_symplectic(const TwoForm& w) {
    Report rep("symplectic", w.name());
    Report c = check_cocycle(w);
    rep.merge(c, "");
    DetInfo info = hom_det_unit(omega_natural(w));
    rep.require("non-degenerate", info.unit, "det = " + info.det.str());
    if (c.passed() && !info.unit) {
        rep.forced = Verdict::Split;
        rep.note("2-cocycle condition holds; natural map has determinant " + info.det.str() +
                 ", which is not a unit of Q[D]");
    }
    return rep;
}

Cochain2 as_cochain(const TwoForm& w) {
    const std::size_t n = w.rank();
    SesquiTable t(n, n, 1);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) t.at(i, j, 0) = w.at(i, j);
    return Cochain2(w.algebra_ptr(), Coefficients::trivial_of(w.algebra_ptr()), std::move(t));
}

TwoForm omega_N(const TwoForm& w, const CdHom& n, unsigned k) {
    const std::size_t r = w.rank();
    if (n.src_rank() != r || n.dst_rank() != r) throw ModuleMismatch("N must be an endomorphism of " + w.algebra().name());
    CdHom nk = n.pow(k);
    std::vector<Poly> t(r * r);
    const Substitution b{{sym::D(), -lam()}};
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            for (std::size_t l = 0; l < r; ++l)
                if (!nk.at(i, l).is_zero() && !w.at(l, j).is_zero()) t[i * r + j] += nk.at(i, l).substitute(b) * w.at(l, j);
    return TwoForm::unchecked(w.algebra_ptr(), std::move(t), w.name() + "_N" + std::to_string(k));
}

Report check_omega_Nk_closed(const TwoForm& w, const CdHom& n, unsigned kmax) {
    Report rep("omega-closed", w.name() + " kmax=" + std::to_string(kmax));
    for (unsigned k = 0; k <= kmax; ++k) {
        TwoForm wk = omega_N(w, n, k);
        rep.require_report(wk.name() + " is closed", check_cocycle(wk));
    }
    return rep;
}

Report check_sn_structure(const TwoForm& w, const CdHom& n) {
    const std::size_t r = w.rank();
    if (n.src_rank() != r || n.dst_rank() != r) throw ModuleMismatch("N must be an endomorphism of " + w.algebra().name());
    Report rep("sn-structure", w.name());
    rep.require_report("pre: w is symplectic", check_symplectic(w));
    rep.require_report("pre: N is a Nijenhuis operator", check_nijenhuis_operator(w.algebra(), n));
    const Substitution neg{{sym::D(), -lam()}}, pos{{sym::D(), lam()}};
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            std::vector<Poly> terms;
            for (std::size_t l = 0; l < r; ++l) {
                if (!n.at(i, l).is_zero() && !w.at(l, j).is_zero()) terms.push_back(n.at(i, l).substitute(neg) * w.at(l, j));
                if (!n.at(j, l).is_zero() && !w.at(i, l).is_zero()) terms.push_back(-(n.at(j, l).substitute(pos) * w.at(i, l)));
            }
            if (!terms.empty()) rep.add(pair_loc("sn1", w.algebra().module(), i, j), std::move(terms));
        }
    rep.require_report("w_N is closed", check_cocycle(omega_N(w, n, 1)));
    return rep;
}

CdHom o_from_symplectic(const TwoForm& w) {
    CdHom inv = invert_hom(omega_natural(w));
    Report c = check_cocycle(w);
    if (!c.passed()) throw PreconditionFailed("o_from_symplectic: form is not closed: " + c.summary());
    return inv;
}

OnCandidate on_from_sn(const TwoForm& w, const CdHom& n) {
    CdHom t = o_from_symplectic(w);
    Report sn = check_sn_structure(w, n);
    if (!sn.passed()) throw PreconditionFailed("on_from_sn: " + sn.summary());
    return {t, n, dual_hom(n)};
}

Tensor2 r_from_symplectic(const TwoForm& w) {
    CdHom g = invert_hom(omega_natural(w));
    const std::size_t n = w.rank();
    Tensor2 r(w.algebra_ptr(), "r_" + w.name());
    const Poly y = Poly::var(sym::Y());
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) r.at(j, k) = subst_d(g.at(j, k), y);
    const Poly l = lam();
    const Substitution at_pair{{sym::X(), -l}, {sym::Y(), l}};
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) {
            Poly lhs = pairing(Element::basis(n, q), g.row(p), l);
            if (!(lhs == r.at(p, q).substitute(at_pair)))
                throw ConstructionError("r_from_symplectic: pairing identity fails at (" + std::to_string(p) + "," +
                                        std::to_string(q) + ")");
        }
    return r;
}

TwoForm form_from_r(const Tensor2& r) {
    CdHom h = invert_hom(r_sharp0(r));
    const std::size_t n = r.rank();
    std::vector<Poly> t(n * n);
    const Substitution b{{sym::D(), -lam()}};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) t[i * n + j] = h.at(i, j).substitute(b);
    return TwoForm(r.algebra_ptr(), std::move(t), "w_" + r.name());
}

}  // namespace lck
