#include "lck/nijenhuis.hpp"

namespace lck {
namespace {

bool has_nonzero(const std::vector<Poly>& terms) {
    for (const auto& t : terms)
        if (!t.is_zero()) return true;
    return false;
}

void add_components(Report& rep, const std::string& where, const CdModule& out, const std::vector<Element>& terms) {
    for (std::size_t o = 0; o < out.rank(); ++o) {
        std::vector<Poly> ps;
        for (const auto& t : terms) ps.push_back(t[o]);
        if (has_nonzero(ps)) rep.add(where + "[" + out.basis[o] + "]", std::move(ps));
    }
}

void check_endo(const CdHom& h, std::size_t n, const std::string& what) {
    if (h.src_rank() != n || h.dst_rank() != n)
        throw ModuleMismatch(what + " must be an endomorphism of a rank-" + std::to_string(n) + " module");
}

}  // namespace

Report check_nijenhuis_operator(const LcaStructure& l, const CdHom& n) {
    check_endo(n, l.rank(), "N");
    Report rep("nijenhuis", l.name());
    const std::size_t r = l.rank();
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            Element ei = Element::basis(r, i), ej = Element::basis(r, j);
            Element nei = n.apply(ei), nej = n.apply(ej);
            std::vector<Element> terms{n.apply(bracket_eval(l, nei, ej)), n.apply(bracket_eval(l, ei, nej)),
                                       -n.apply(n.apply(bracket_eval(l, ei, ej))), -bracket_eval(l, nei, nej)};
            add_components(rep, "nijenhuis(" + l.module().basis[i] + "," + l.module().basis[j] + ")", l.module(), terms);
        }
    return rep;
}

Report check_nijenhuis_structure(const RepStructure& r, const CdHom& n, const CdHom& s) {
    check_endo(n, r.algebra().rank(), "N");
    check_endo(s, r.rank(), "S");
    Report rep("nijstructure", r.algebra().name() + " " + r.name());
    rep.require("pre: module verified", r.verified());
    rep.require_report("pre: N is a Nijenhuis operator", check_nijenhuis_operator(r.algebra(), n));
    const std::size_t na = r.algebra().rank(), m = r.rank();
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            Element a = Element::basis(na, i), v = Element::basis(m, j);
            Element na_ = n.apply(a), sv = s.apply(v);
            std::vector<Element> terms{act_eval(r, na_, sv), -s.apply(act_eval(r, na_, v)), -act_eval(r, a, s.apply(sv)),
                                       s.apply(act_eval(r, a, sv))};
            add_components(rep, "structure(" + r.algebra().module().basis[i] + "," + r.module().basis[j] + ")",
                           r.module(), terms);
        }
    return rep;
}

Report check_semidirect_condition(const RepStructure& r, const CdHom& n, const CdHom& s) {
    check_endo(n, r.algebra().rank(), "N");
    check_endo(s, r.rank(), "S");
    Report rep("semidirect-condition", r.algebra().name() + " " + r.name());
    const std::size_t na = r.algebra().rank(), m = r.rank();
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            Element a = Element::basis(na, i), v = Element::basis(m, j);
            Element na_ = n.apply(a), sv = s.apply(v);
            std::vector<Element> terms{act_eval(r, na_, sv), -s.apply(act_eval(r, na_, v)), -s.apply(act_eval(r, a, sv)),
                                       s.apply(s.apply(act_eval(r, a, v)))};
            add_components(rep, "condition(" + r.algebra().module().basis[i] + "," + r.module().basis[j] + ")",
                           r.module(), terms);
        }
    return rep;
}

CdHom direct_sum(const CdHom& n, const CdHom& s) {
    const std::size_t a = n.src_rank(), b = s.src_rank();
    if (!n.is_endo() || !s.is_endo()) throw ModuleMismatch("direct_sum needs endomorphisms");
    CdHom h(a + b, a + b);
    for (std::size_t i = 0; i < a; ++i)
        for (std::size_t j = 0; j < a; ++j) h.at(i, j) = n.at(i, j);
    for (std::size_t i = 0; i < b; ++i)
        for (std::size_t j = 0; j < b; ++j) h.at(a + i, a + j) = s.at(i, j);
    return h;
}

SemidirectCharacterization check_semidirect_characterization(const RepStructure& r, const CdHom& n, const CdHom& s) {
    SemidirectCharacterization out;
    LcaStructure sd = semidirect(r);
    out.semidirect_side = check_nijenhuis_operator(sd, direct_sum(n, s));
    out.component_side = Report("semidirect-components", r.algebra().name() + " " + r.name());
    out.component_side.require_report("N is a Nijenhuis operator", check_nijenhuis_operator(r.algebra(), n));
    out.component_side.require_report("semidirect condition", check_semidirect_condition(r, n, s));
    out.agree = out.semidirect_side.passed() == out.component_side.passed();
    out.combined = Report("semidirect-char", r.algebra().name() + " " + r.name());
    out.combined.merge(out.semidirect_side, "semidirect: ");
    out.combined.merge(out.component_side, "components: ");
    out.combined.require("both sides agree", out.agree);
    return out;
}

SesquiTable varpi_table(const RepStructure& r, const CdHom& n, const CdHom& s) {
    const std::size_t na = r.algebra().rank(), m = r.rank();
    SesquiTable t(na, m, m);
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            Element a = Element::basis(na, i), v = Element::basis(m, j);
            t.set_entry(i, j, act_eval(r, n.apply(a), v) + act_eval(r, a, s.apply(v)) - s.apply(act_eval(r, a, v)));
        }
    return t;
}

RepPtr deformed_rep(const RepStructure& r, const CdHom& n, const CdHom& s) {
    Report pre = check_nijenhuis_structure(r, n, s);
    if (!pre.passed()) throw PreconditionFailed("deformed_rep: (N,S) is not a Nijenhuis structure: " + pre.summary());
    LcaPtr alg = verify(deformed_bracket(r.algebra(), n).renamed(r.algebra().name() + "_N"));
    const std::size_t na = r.algebra().rank(), m = r.rank();
    SesquiTable t(na, m, m);
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            Element a = Element::basis(na, i), v = Element::basis(m, j);
            t.set_entry(i, j, act_eval(r, n.apply(a), v) - act_eval(r, a, s.apply(v)) + s.apply(act_eval(r, a, v)));
        }
    CdModule mod = r.module();
    mod.name += "_N";
    return verify(RepStructure(alg, std::move(mod), std::move(t)));
}

LpPair trivial_pair_deformation(const RepStructure& r, const CdHom& n, const CdHom& s, SymbolId t) {
    const auto& l = r.algebra();
    Cochain2 dn = coboundary_1(r.algebra_ptr(), Coefficients::adjoint_of(r.algebra_ptr()), n);
    LcaStructure alg = deform_with_parameter(l, dn, t);
    SesquiTable action = r.table();
    SesquiTable w = varpi_table(r, n, s);
    const Poly tp = Poly::var(t);
    for (std::size_t i = 0; i < l.rank(); ++i)
        for (std::size_t j = 0; j < r.rank(); ++j)
            for (std::size_t k = 0; k < r.rank(); ++k) action.at(i, j, k) += tp * w.at(i, j, k);
    return {std::move(alg), std::move(action)};
}

Report check_lp_pair(const LpPair& p, const std::string& name) {
    Report rep("lp-pair", name);
    Report alg = check_lca_axioms(p.algebra);
    rep.merge(alg, "algebra: ");
    if (!alg.passed()) return rep;
    LcaPtr a = verify(p.algebra);
    CdModule mod{name + "_module", {}};
    for (std::size_t i = 0; i < p.action.right_rank(); ++i) mod.basis.push_back("v" + std::to_string(i + 1));
    rep.merge(check_rep_axioms(RepStructure(a, mod, p.action)), "module: ");
    return rep;
}

}  // namespace lck
