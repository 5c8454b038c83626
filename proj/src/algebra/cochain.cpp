#include "lck/cochain.hpp"

namespace lck {
namespace {

Element finish(const Coefficients& c, Element e) {
    if (c.trivial) return e.substitute({{sym::D(), Poly(0)}});
    return e;
}

Element rho(const Coefficients& c, const Element& a, const Element& v, const Poly& s) {
    if (c.trivial) return Element(1);
    return act(*c.rep, a, v, s);
}

std::string loc3(const CdModule& a, std::size_t i, std::size_t j, std::size_t k, const std::string& out) {
    return "d(" + a.basis[i] + "," + a.basis[j] + "," + a.basis[k] + ")[" + out + "]";
}

std::string out_name(const Coefficients& c, std::size_t o) { return c.trivial ? "1" : c.rep->module().basis[o]; }

// The six terms of d c on (e_i, e_j, e_k), each an element of the coefficient module.
std::vector<Element> coboundary_2_terms(const Cochain2& c, std::size_t i, std::size_t j, std::size_t k) {
    const auto& A = c.algebra();
    const auto& co = c.coefficients();
    const std::size_t n = A.rank();
    const Poly lam = Poly::var(sym::L()), mu = Poly::var(sym::M()), d = Poly::var(sym::D());
    const Poly s3 = -lam - mu - d;
    Element ei = Element::basis(n, i), ej = Element::basis(n, j), ek = Element::basis(n, k);
    std::vector<Element> t;
    t.push_back(rho(co, ei, c.eval(ej, ek, mu), lam));
    t.push_back(-rho(co, ej, c.eval(ei, ek, lam), mu));
    t.push_back(c.eval(ek, bracket_at(A, ei, ej, lam), s3));
    t.push_back(rho(co, ek, c.eval(ei, ej, lam), s3));
    t.push_back(-c.eval(ej, bracket_at(A, ei, ek, lam), mu));
    t.push_back(c.eval(ei, bracket_at(A, ej, ek, mu), lam));
    for (auto& e : t) e = finish(co, e);
    return t;
}

}  // namespace

Coefficients Coefficients::adjoint_of(const LcaPtr& l) { return {verify(adjoint(l)), false}; }

Coefficients Coefficients::trivial_of(const LcaPtr& l) { return {verify(lck::trivial(l, 1)), true}; }

Coefficients Coefficients::module(const RepPtr& r) { return {r, false}; }

Cochain2::Cochain2(LcaPtr algebra, Coefficients coeffs, SesquiTable table)
    : algebra_(std::move(algebra)), coeffs_(std::move(coeffs)), table_(std::move(table)) {
    const std::size_t n = algebra_->rank(), m = coeffs_.rank();
    if (table_.left_rank() != n || table_.right_rank() != n || table_.out_rank() != m)
        throw ConstructionError("2-cochain table shape mismatch");
    if (coeffs_.trivial && !table_.only_kinds({SymbolKind::Param}, true))
        throw ConstructionError("2-cochain with trivial coefficients may only use L and parameters");
    if (!coeffs_.trivial && !table_.only_kinds({SymbolKind::Deriv, SymbolKind::Param}, true))
        throw ConstructionError("2-cochain table may only use L, D and parameters");
    const Substitution shift{{sym::L(), coeffs_.trivial ? -Poly::var(sym::L()) : lambda_shift()}};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            for (std::size_t k = 0; k < m; ++k) {
                Poly r = table_.at(i, j, k) + table_.at(j, i, k).substitute(shift);
                if (!r.is_zero())
                    throw ConstructionError("2-cochain violates skew-symmetry at (" + algebra_->module().basis[i] + "," +
                                            algebra_->module().basis[j] + "): residual " + r.str());
            }
}

Element Cochain2::eval(const Element& x, const Element& y, const Poly& spectral) const {
    return finish(coeffs_, table_.eval(x, y, spectral));
}

const Element& Cochain3::at(std::size_t i, std::size_t j, std::size_t k) const {
    const std::size_t n = algebra->rank();
    return entries[(i * n + j) * n + k];
}

bool Cochain3::is_zero() const {
    for (const auto& e : entries)
        if (!e.is_zero()) return false;
    return true;
}

Cochain2 coboundary_1(const LcaPtr& l, const Coefficients& coeffs, const CdHom& c) {
    const std::size_t n = l->rank(), m = coeffs.rank();
    if (c.src_rank() != n || c.dst_rank() != m) throw ModuleMismatch("1-cochain shape mismatch");
    SesquiTable t(n, n, m);
    const Poly lam = Poly::var(sym::L());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Element ei = Element::basis(n, i), ej = Element::basis(n, j);
            Element v = rho(coeffs, ei, c.row(j), lam) - rho(coeffs, ej, c.row(i), lambda_shift()) -
                        c.apply(bracket_eval(*l, ei, ej));
            t.set_entry(i, j, finish(coeffs, v));
        }
    return Cochain2(l, coeffs, std::move(t));
}

Cochain3 coboundary_2(const Cochain2& c) {
    const std::size_t n = c.algebra().rank();
    Cochain3 out{c.algebra_ptr(), c.coefficients(), {}};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Element sum(c.coefficients().rank());
                for (const auto& t : coboundary_2_terms(c, i, j, k)) sum += t;
                out.entries.push_back(std::move(sum));
            }
    return out;
}

Report check_2cocycle(const Cochain2& c) {
    Report rep("cocycle", c.algebra().name());
    const std::size_t n = c.algebra().rank(), m = c.coefficients().rank();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                auto terms = coboundary_2_terms(c, i, j, k);
                for (std::size_t o = 0; o < m; ++o) {
                    std::vector<Poly> ps;
                    bool any = false;
                    for (const auto& t : terms) {
                        ps.push_back(t[o]);
                        any = any || !t[o].is_zero();
                    }
                    if (any) rep.add(loc3(c.algebra().module(), i, j, k, out_name(c.coefficients(), o)), std::move(ps));
                }
            }
    return rep;
}

AnyCochain coboundary(const LcaPtr& l, const Coefficients& coeffs, const AnyCochain& c) {
    if (const auto* h = std::get_if<CdHom>(&c)) return coboundary_1(l, coeffs, *h);
    if (const auto* c2 = std::get_if<Cochain2>(&c)) return coboundary_2(*c2);
    throw Unsupported("coboundary of cochains of degree >= 3 is not implemented");
}

LcaStructure deform_with_parameter(const LcaStructure& l, const Cochain2& omega, SymbolId t) {
    if (Symbols::kind(t) != SymbolKind::Param) throw PreconditionFailed("deformation parameter must be a parameter symbol");
    if (omega.coefficients().trivial || !(omega.coefficients().rep->table() == l.table()) ||
        omega.algebra().rank() != l.rank())
        throw PreconditionFailed("deform_with_parameter needs a 2-cochain with adjoint coefficients");
    const std::size_t n = l.rank();
    SesquiTable table = l.table();
    const Poly tp = Poly::var(t);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) table.at(i, j, k) += tp * omega.table().at(i, j, k);
    return LcaStructure(l.module(), std::move(table));
}

}  // namespace lck
