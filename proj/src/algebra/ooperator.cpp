#include "lck/ooperator.hpp"

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

void check_shape(const RepStructure& r, const CdHom& t) {
    if (t.src_rank() != r.rank() || t.dst_rank() != r.algebra().rank())
        throw ModuleMismatch("T must map " + r.name() + " (rank " + std::to_string(r.rank()) + ") to " +
                             r.algebra().name() + " (rank " + std::to_string(r.algebra().rank()) + ")");
}

Poly fresh_param(const std::string& name) { return Poly::var(Symbols::intern(name, SymbolKind::Param)); }

}  // namespace

Report check_o_operator(const RepStructure& r, const CdHom& t) {
    check_shape(r, t);
    Report rep("ooperator", r.algebra().name() + " " + r.name());
    rep.require("pre: module verified", r.verified());
    const std::size_t m = r.rank();
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            Element u = Element::basis(m, i), v = Element::basis(m, j);
            Element tu = t.apply(u), tv = t.apply(v);
            std::vector<Element> terms{bracket_eval(r.algebra(), tu, tv), -t.apply(act_eval(r, tu, v)),
                                       t.apply(act(r, tv, u, lambda_shift()))};
            add_components(rep, "ooperator(" + r.module().basis[i] + "," + r.module().basis[j] + ")",
                           r.algebra().module(), terms);
        }
    return rep;
}

SesquiTable induced_lsa(const RepStructure& r, const CdHom& t) {
    check_shape(r, t);
    const std::size_t m = r.rank();
    SesquiTable s(m, m, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) s.set_entry(i, j, act_eval(r, t.row(i), Element::basis(m, j)));
    return s;
}

Report check_left_symmetric(const SesquiTable& lsa, const CdModule& mod) {
    Report rep("left-symmetric", mod.name);
    const std::size_t m = mod.rank();
    const Poly lam = Poly::var(sym::L()), mu = Poly::var(sym::M());
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t k = 0; k < m; ++k) {
                Element a = Element::basis(m, i), b = Element::basis(m, j), c = Element::basis(m, k);
                std::vector<Element> terms{lsa.eval(lsa.eval(a, b, lam), c, lam + mu), -lsa.eval(a, lsa.eval(b, c, mu), lam),
                                           -lsa.eval(lsa.eval(b, a, mu), c, lam + mu), lsa.eval(b, lsa.eval(a, c, lam), mu)};
                add_components(rep, "lsa(" + mod.basis[i] + "," + mod.basis[j] + "," + mod.basis[k] + ")", mod, terms);
            }
    return rep;
}

LcaStructure subadjacent_table(const RepStructure& r, const CdHom& t) {
    SesquiTable lsa = induced_lsa(r, t);
    const std::size_t m = r.rank();
    SesquiTable b(m, m, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) b.set_entry(i, j, lsa.entry(i, j) - shift_lambda(lsa.entry(j, i)));
    CdModule mod = r.module();
    mod.name += "_T";
    return LcaStructure(std::move(mod), std::move(b));
}

Subadjacent subadjacent(const RepStructure& r, const CdHom& t) {
    Report pre = check_o_operator(r, t);
    if (!pre.passed()) throw PreconditionFailed("subadjacent: T is not an O-operator: " + pre.summary());
    Subadjacent out;
    out.lsa = induced_lsa(r, t);
    LcaStructure l = subadjacent_table(r, t);
    out.report = Report("subadjacent", r.algebra().name() + " " + r.name());
    out.report.require_report("left-symmetric", check_left_symmetric(out.lsa, l.module()));
    out.report.require_report("lca axioms", check_lca_axioms(l));
    Report hom("homomorphism", l.name());
    const std::size_t m = r.rank();
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            Element u = Element::basis(m, i), v = Element::basis(m, j);
            std::vector<Element> terms{t.apply(bracket_eval(l, u, v)), -bracket_eval(r.algebra(), t.apply(u), t.apply(v))};
            add_components(hom, "hom(" + r.module().basis[i] + "," + r.module().basis[j] + ")", r.algebra().module(), terms);
        }
    out.report.require_report("T is a homomorphism", hom);
    if (!out.report.passed()) throw Unverified("subadjacent algebra failed verification: " + out.report.summary());
    out.algebra = verify(l);
    return out;
}

Report check_compatible(const RepStructure& r, const CdHom& t1, const CdHom& t2) {
    Report rep("compatible", r.algebra().name() + " " + r.name());
    rep.require_report("pre: T1 is an O-operator", check_o_operator(r, t1));
    rep.require_report("pre: T2 is an O-operator", check_o_operator(r, t2));
    CdHom comb = fresh_param("_k1") * t1 + fresh_param("_k2") * t2;
    rep.merge(check_o_operator(r, comb), "k1*T1 + k2*T2: ");
    return rep;
}

Report check_on_structure(const RepStructure& r, const CdHom& t, const CdHom& n, const CdHom& s) {
    check_shape(r, t);
    Report rep("on-structure", r.algebra().name() + " " + r.name());
    rep.require_report("pre: T is an O-operator", check_o_operator(r, t));
    rep.require_report("pre: (N,S) is a Nijenhuis structure", check_nijenhuis_structure(r, n, s));
    CdHom nt = compose(n, t), ts = compose(t, s);
    for (std::size_t j = 0; j < t.src_rank(); ++j)
        for (std::size_t k = 0; k < t.dst_rank(); ++k) {
            std::vector<Poly> terms{nt.at(j, k), -ts.at(j, k)};
            if (has_nonzero(terms))
                rep.add("NT=TS(" + r.module().basis[j] + ")[" + r.algebra().module().basis[k] + "]", std::move(terms));
        }
    LcaStructure lhs = subadjacent_table(r, nt);
    LcaStructure rhs = deformed_bracket(subadjacent_table(r, t), s);
    const std::size_t m = r.rank();
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t k = 0; k < m; ++k) {
                std::vector<Poly> terms{lhs.table().at(i, j, k), -rhs.table().at(i, j, k)};
                if (has_nonzero(terms))
                    rep.add("bracket(" + r.module().basis[i] + "," + r.module().basis[j] + ")[" + r.module().basis[k] + "]",
                            std::move(terms));
            }
    return rep;
}

Hierarchy hierarchy(const RepStructure& r, const CdHom& t, const CdHom& n, const CdHom& s, unsigned kmax) {
    Hierarchy h;
    h.report = Report("hierarchy", r.algebra().name() + " " + r.name() + " kmax=" + std::to_string(kmax));
    h.report.require_report("pre: (T,N,S) is an ON-structure", check_on_structure(r, t, n, s));
    CdHom cur = t;
    for (unsigned k = 0; k <= kmax; ++k) {
        h.ops.push_back(cur);
        cur = compose(n, cur);
    }
    for (unsigned k = 0; k <= kmax; ++k)
        h.report.require_report("T_" + std::to_string(k) + " is an O-operator", check_o_operator(r, h.ops[k]));
    for (unsigned k = 0; k <= kmax; ++k)
        for (unsigned l = k + 1; l <= kmax; ++l) {
            Report c = check_o_operator(r, fresh_param("_k1") * h.ops[k] + fresh_param("_k2") * h.ops[l]);
            h.report.require_report("T_" + std::to_string(k) + ", T_" + std::to_string(l) + " compatible", c);
        }
    return h;
}

CdHom nijenhuis_from_compatible(const RepStructure& r, const CdHom& t1, const CdHom& t2) {
    CdHom inv = invert_hom(t2);
    Report c = check_compatible(r, t1, t2);
    if (!c.passed()) throw PreconditionFailed("nijenhuis_from_compatible: " + c.summary());
    return compose(t1, inv);
}

std::pair<OnCandidate, OnCandidate> on_from_compatible(const RepStructure& r, const CdHom& t, const CdHom& t1) {
    CdHom inv = invert_hom(t);
    Report c = check_compatible(r, t, t1);
    if (!c.passed()) throw PreconditionFailed("on_from_compatible: " + c.summary());
    CdHom s = compose(inv, t1), n = compose(t1, inv);
    return {OnCandidate{t, n, s}, OnCandidate{t1, n, s}};
}

}  // namespace lck
