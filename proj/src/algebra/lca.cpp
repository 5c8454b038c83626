#include "lck/lca.hpp"

namespace lck {
namespace {

std::string loc(const std::string& kind, const CdModule& m, std::initializer_list<std::size_t> idx, std::size_t out) {
    std::string s = kind + "(";
    bool first = true;
    for (auto i : idx) {
        if (!first) s += ",";
        s += m.basis[i];
        first = false;
    }
    return s + ")[" + m.basis[out] + "]";
}

bool has_nonzero(const std::vector<Poly>& terms) {
    for (const auto& t : terms)
        if (!t.is_zero()) return true;
    return false;
}

}  // namespace

Poly lambda_shift() { return -Poly::var(sym::L()) - Poly::var(sym::D()); }

Element shift_lambda(const Element& e) { return e.substitute({{sym::L(), lambda_shift()}}); }

LcaStructure::LcaStructure(CdModule module, SesquiTable table) : module_(std::move(module)), table_(std::move(table)) {
    const std::size_t n = module_.rank();
    if (n == 0) throw ConstructionError("algebra " + module_.name + " must have rank >= 1");
    if (table_.left_rank() != n || table_.right_rank() != n || table_.out_rank() != n)
        throw ConstructionError("bracket table shape does not match rank of " + module_.name);
    if (!table_.only_kinds({SymbolKind::Deriv, SymbolKind::Param}, true))
        throw ConstructionError("bracket table of " + module_.name + " may only use L, D and parameters");
}

LcaStructure LcaStructure::renamed(std::string name) const {
    LcaStructure r = *this;
    r.module_.name = std::move(name);
    return r;
}

LcaStructure lca_from_entries(CdModule module, const std::map<std::pair<std::size_t, std::size_t>, Element>& entries) {
    const std::size_t n = module.rank();
    SesquiTable t(n, n, n);
    for (const auto& [ij, e] : entries) {
        auto [i, j] = ij;
        if (i >= n || j >= n) throw ConstructionError("bracket entry index out of range");
        t.set_entry(i, j, e);
        if (i == j) continue;
        Element mirror = -shift_lambda(e);
        auto it = entries.find({j, i});
        if (it == entries.end()) {
            t.set_entry(j, i, mirror);
        } else if (!(it->second == mirror)) {
            throw ConstructionError("entry [" + module.basis[j] + "," + module.basis[i] +
                                    "] disagrees with skew-symmetry of [" + module.basis[i] + "," + module.basis[j] +
                                    "]");
        }
    }
    return LcaStructure(std::move(module), std::move(t));
}

Element bracket_at(const LcaStructure& l, const Element& x, const Element& y, const Poly& spectral) {
    if (x.rank() != l.rank() || y.rank() != l.rank()) throw ModuleMismatch("element does not belong to " + l.name());
    return l.table().eval(x, y, spectral);
}

Element bracket_eval(const LcaStructure& l, const Element& x, const Element& y) {
    return bracket_at(l, x, y, Poly::var(sym::L()));
}

Element bracket_shifted(const LcaStructure& l, const Element& x, const Element& y) {
    return shift_lambda(bracket_eval(l, x, y));
}

Report check_lca_axioms(const LcaStructure& l) {
    Report rep("lca", l.name());
    const std::size_t n = l.rank();
    const auto& m = l.module();
    const Poly lam = Poly::var(sym::L()), mu = Poly::var(sym::M());
    const Substitution shift{{sym::L(), lambda_shift()}};
    const auto& t = l.table();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                std::vector<Poly> terms{t.at(i, j, k), t.at(j, i, k).substitute(shift)};
                if (has_nonzero(terms)) rep.add(loc("skew", m, {i, j}, k), std::move(terms));
            }
    std::vector<Element> e;
    for (std::size_t i = 0; i < n; ++i) e.push_back(Element::basis(n, i));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Element a = bracket_at(l, e[i], bracket_at(l, e[j], e[k], mu), lam);
                Element b = bracket_at(l, e[j], bracket_at(l, e[i], e[k], lam), mu);
                Element c = bracket_at(l, bracket_at(l, e[i], e[j], lam), e[k], lam + mu);
                for (std::size_t o = 0; o < n; ++o) {
                    std::vector<Poly> terms{a[o], -b[o], -c[o]};
                    if (has_nonzero(terms)) rep.add(loc("jacobi", m, {i, j, k}, o), std::move(terms));
                }
            }
    return rep;
}

LcaPtr verify(const LcaStructure& l) {
    Report r = check_lca_axioms(l);
    if (!r.passed()) throw Unverified("algebra " + l.name() + " fails the axioms: " + r.summary());
    auto p = std::make_shared<LcaStructure>(l);
    p->verified_ = true;
    return p;
}

LcaStructure deformed_bracket(const LcaStructure& l, const CdHom& n) {
    const std::size_t r = l.rank();
    if (n.src_rank() != r || n.dst_rank() != r) throw ModuleMismatch("deformed_bracket: map is not an endomorphism of " + l.name());
    SesquiTable t(r, r, r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            Element ei = Element::basis(r, i), ej = Element::basis(r, j);
            Element v = bracket_eval(l, n.apply(ei), ej) + bracket_eval(l, ei, n.apply(ej)) -
                        n.apply(bracket_eval(l, ei, ej));
            t.set_entry(i, j, v);
        }
    return LcaStructure(l.module(), std::move(t));
}

LieAlgebra::LieAlgebra(std::string n, std::vector<std::string> b) : name(std::move(n)), basis(std::move(b)) {
    c.resize(basis.size() * basis.size() * basis.size());
}

std::vector<Poly> LieAlgebra::bracket(const std::vector<Poly>& x, const std::vector<Poly>& y) const {
    std::vector<Poly> out(dim());
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

Report check_lie(const LieAlgebra& g) {
    Report rep("lie", g.name);
    const std::size_t d = g.dim();
    CdModule m{g.name, g.basis};
    auto unit = [&](std::size_t i) {
        std::vector<Poly> v(d);
        v[i] = 1;
        return v;
    };
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) {
                std::vector<Poly> terms{g.at(i, j, k), g.at(j, i, k)};
                if (has_nonzero(terms)) rep.add(loc("antisym", m, {i, j}, k), std::move(terms));
            }
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) {
                auto a = g.bracket(g.bracket(unit(i), unit(j)), unit(k));
                auto b = g.bracket(g.bracket(unit(j), unit(k)), unit(i));
                auto c = g.bracket(g.bracket(unit(k), unit(i)), unit(j));
                for (std::size_t o = 0; o < d; ++o) {
                    std::vector<Poly> terms{a[o], b[o], c[o]};
                    if (has_nonzero(terms)) rep.add(loc("jacobi", m, {i, j, k}, o), std::move(terms));
                }
            }
    return rep;
}

LcaStructure current(const LieAlgebra& g) {
    for (const auto& p : g.c)
        if (!p.only_kinds({SymbolKind::Param}))
            throw ConstructionError("Lie algebra " + g.name + " has non-scalar structure constants");
    Report r = check_lie(g);
    if (!r.passed()) throw PreconditionFailed("input is not a Lie algebra: " + r.summary());
    const std::size_t d = g.dim();
    SesquiTable t(d, d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) t.at(i, j, k) = g.at(i, j, k);
    return LcaStructure(CdModule{"Cur_" + g.name, g.basis}, std::move(t));
}

}  // namespace lck
