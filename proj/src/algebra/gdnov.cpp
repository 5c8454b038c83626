#include "lck/gdnov.hpp"

namespace lck {
namespace {

using Vec = std::vector<Poly>;

bool has_nonzero(const std::vector<Poly>& terms) {
    for (const auto& t : terms)
        if (!t.is_zero()) return true;
    return false;
}

Vec unit(std::size_t d, std::size_t i) {
    Vec v(d);
    v[i] = 1;
    return v;
}

Vec add(Vec a, const Vec& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}

Vec neg(Vec a) {
    for (auto& p : a) p = -p;
    return a;
}

Vec happly(const CdHom& n, const Vec& x) { return Element(n.apply(Element(x))).coeffs(); }

std::string loc(const std::string& kind, const std::vector<std::string>& b, std::initializer_list<std::size_t> idx,
                std::size_t out) {
    std::string s = kind + "(";
    bool first = true;
    for (auto i : idx) {
        if (!first) s += ",";
        s += b[i];
        first = false;
    }
    return s + ")[" + b[out] + "]";
}

void add_vec_terms(Report& rep, const std::string& kind, const std::vector<std::string>& b,
                   std::initializer_list<std::size_t> idx, const std::vector<Vec>& terms) {
    for (std::size_t o = 0; o < b.size(); ++o) {
        std::vector<Poly> ps;
        for (const auto& t : terms) ps.push_back(t[o]);
        if (has_nonzero(ps)) rep.add(loc(kind, b, idx, o), std::move(ps));
    }
}

void check_scalar_dim(const CdHom& n, std::size_t d) {
    if (n.src_rank() != d || n.dst_rank() != d) throw ModuleMismatch("matrix dimension does not match algebra dimension");
    if (!is_scalar_matrix(n)) throw ConstructionError("matrix on a Novikov or Lie algebra must not involve D");
}

}  // namespace

NovikovAlgebra::NovikovAlgebra(std::string n, std::vector<std::string> b) : name(std::move(n)), basis(std::move(b)) {
    m.resize(basis.size() * basis.size() * basis.size());
}

Vec NovikovAlgebra::mul(const Vec& x, const Vec& y) const {
    Vec out(dim());
    for (std::size_t i = 0; i < dim(); ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < dim(); ++j) {
            if (y[j].is_zero()) continue;
            Poly s = x[i] * y[j];
            for (std::size_t k = 0; k < dim(); ++k)
                if (!at(i, j, k).is_zero()) out[k] += s * at(i, j, k);
        }
    }
    return out;
}

bool is_scalar_matrix(const CdHom& n) {
    for (std::size_t i = 0; i < n.src_rank(); ++i)
        for (std::size_t j = 0; j < n.dst_rank(); ++j)
            if (!n.at(i, j).only_kinds({SymbolKind::Param})) return false;
    return true;
}

Report check_novikov(const NovikovAlgebra& v) {
    Report rep("novikov", v.name);
    const std::size_t d = v.dim();
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) {
                Vec a = unit(d, i), b = unit(d, j), c = unit(d, k);
                // (a o b) o c = (a o c) o b
                add_vec_terms(rep, "right-commutative", v.basis, {i, j, k}, {v.mul(v.mul(a, b), c), neg(v.mul(v.mul(a, c), b))});
                // (a o b) o c - a o (b o c) = (b o a) o c - b o (a o c)
                add_vec_terms(rep, "left-symmetric", v.basis, {i, j, k},
                              {v.mul(v.mul(a, b), c), neg(v.mul(a, v.mul(b, c))), neg(v.mul(v.mul(b, a), c)),
                               v.mul(b, v.mul(a, c))});
            }
    return rep;
}

Report check_gd(const GDBialgebra& g) {
    Report rep("gd", g.name);
    const auto& v = g.novikov;
    const auto& l = g.lie;
    if (v.basis != l.basis) throw ModuleMismatch("Novikov and Lie structures live on different bases");
    rep.require_report("novikov", check_novikov(v));
    rep.require_report("lie", check_lie(l));
    const std::size_t d = v.dim();
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) {
                Vec a = unit(d, i), b = unit(d, j), c = unit(d, k);
                // [a o b, c] + [a, b] o c - a o [b, c] - [a o c, b] - [a, c] o b = 0
                add_vec_terms(rep, "compatibility", v.basis, {i, j, k},
                              {l.bracket(v.mul(a, b), c), v.mul(l.bracket(a, b), c), neg(v.mul(a, l.bracket(b, c))),
                               neg(l.bracket(v.mul(a, c), b)), neg(v.mul(l.bracket(a, c), b))});
            }
    return rep;
}

LcaStructure quadratic_from_gd(const GDBialgebra& g) {
    Report r = check_gd(g);
    if (!r.passed()) throw Unverified("GD bialgebra " + g.name + " fails its axioms: " + r.summary());
    const std::size_t d = g.novikov.dim();
    SesquiTable t(d, d, d);
    const Poly dd = Poly::var(sym::D()), lam = Poly::var(sym::L());
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k)
                t.at(i, j, k) = dd * g.novikov.at(j, i, k) + lam * (g.novikov.at(i, j, k) + g.novikov.at(j, i, k)) +
                                g.lie.at(j, i, k);
    return LcaStructure(CdModule{"Q_" + g.name, g.novikov.basis}, std::move(t));
}

Report check_nijenhuis_novikov(const NovikovAlgebra& v, const CdHom& n) {
    check_scalar_dim(n, v.dim());
    Report rep("nijenhuis-novikov", v.name);
    const std::size_t d = v.dim();
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Vec a = unit(d, i), b = unit(d, j), na = happly(n, a), nb = happly(n, b);
            add_vec_terms(rep, "nijenhuis", v.basis, {i, j},
                          {happly(n, v.mul(na, b)), happly(n, v.mul(a, nb)), neg(happly(n, happly(n, v.mul(a, b)))),
                           neg(v.mul(na, nb))});
        }
    return rep;
}

Report check_nijenhuis_lie(const LieAlgebra& g, const CdHom& n) {
    check_scalar_dim(n, g.dim());
    Report rep("nijenhuis-lie", g.name);
    const std::size_t d = g.dim();
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Vec a = unit(d, i), b = unit(d, j), na = happly(n, a), nb = happly(n, b);
            add_vec_terms(rep, "nijenhuis", g.basis, {i, j},
                          {happly(n, g.bracket(na, b)), happly(n, g.bracket(a, nb)),
                           neg(happly(n, happly(n, g.bracket(a, b)))), neg(g.bracket(na, nb))});
        }
    return rep;
}

Report check_nijenhuis_gd(const GDBialgebra& g, const CdHom& n) {
    Report rep("nijenhuis-gd", g.name);
    rep.require_report("novikov part", check_nijenhuis_novikov(g.novikov, n));
    rep.require_report("lie part", check_nijenhuis_lie(g.lie, n));
    return rep;
}

NovikovAlgebra deformed_novikov(const NovikovAlgebra& v, const CdHom& n) {
    check_scalar_dim(n, v.dim());
    const std::size_t d = v.dim();
    NovikovAlgebra out(v.name + "_N", v.basis);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Vec a = unit(d, i), b = unit(d, j);
            Vec r = add(add(v.mul(happly(n, a), b), v.mul(a, happly(n, b))), neg(happly(n, v.mul(a, b))));
            for (std::size_t k = 0; k < d; ++k) out.at(i, j, k) = r[k];
        }
    return out;
}

LieAlgebra deformed_lie(const LieAlgebra& g, const CdHom& n) {
    check_scalar_dim(n, g.dim());
    const std::size_t d = g.dim();
    LieAlgebra out(g.name + "_N", g.basis);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Vec a = unit(d, i), b = unit(d, j);
            Vec r = add(add(g.bracket(happly(n, a), b), g.bracket(a, happly(n, b))), neg(happly(n, g.bracket(a, b))));
            for (std::size_t k = 0; k < d; ++k) out.at(i, j, k) = r[k];
        }
    return out;
}

GDBialgebra deformed_gd(const GDBialgebra& g, const CdHom& n) {
    return {g.name + "_N", deformed_novikov(g.novikov, n), deformed_lie(g.lie, n)};
}

CdHom lift_hom(const CdHom& n) {
    if (!is_scalar_matrix(n)) throw ConstructionError("lift_hom: matrix must not involve D");
    return n;
}

}  // namespace lck
