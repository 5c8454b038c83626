#include "lck/rep.hpp"

#include <algorithm>

namespace lck {
namespace {

bool has_nonzero(const std::vector<Poly>& terms) {
    for (const auto& t : terms)
        if (!t.is_zero()) return true;
    return false;
}

}  // namespace

RepStructure::RepStructure(LcaPtr algebra, CdModule module, SesquiTable table)
    : algebra_(std::move(algebra)), module_(std::move(module)), table_(std::move(table)) {
    if (!algebra_) throw ConstructionError("module " + module_.name + " has no algebra");
    const std::size_t n = algebra_->rank(), m = module_.rank();
    if (m == 0) throw ConstructionError("module " + module_.name + " must have rank >= 1");
    if (table_.left_rank() != n || table_.right_rank() != m || table_.out_rank() != m)
        throw ConstructionError("action table shape does not match ranks of " + algebra_->name() + " and " +
                                module_.name);
    if (!table_.only_kinds({SymbolKind::Deriv, SymbolKind::Param}, true))
        throw ConstructionError("action table of " + module_.name + " may only use L, D and parameters");
}

RepStructure RepStructure::renamed(std::string name) const {
    RepStructure r = *this;
    r.module_.name = std::move(name);
    return r;
}

Element act(const RepStructure& r, const Element& a, const Element& v, const Poly& spectral) {
    return r.table().eval(a, v, spectral);
}

Element act_eval(const RepStructure& r, const Element& a, const Element& v) {
    return act(r, a, v, Poly::var(sym::L()));
}

Report check_rep_axioms(const RepStructure& r) {
    if (!r.algebra().verified())
        throw Unverified("algebra " + r.algebra().name() + " of module " + r.name() + " is not verified");
    Report rep("rep", r.name());
    const std::size_t n = r.algebra().rank(), m = r.rank();
    const Poly lam = Poly::var(sym::L()), mu = Poly::var(sym::M());
    const auto& A = r.algebra().module();
    const auto& V = r.module();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < m; ++k) {
                Element ei = Element::basis(n, i), ej = Element::basis(n, j), vk = Element::basis(m, k);
                Element a = act(r, bracket_at(r.algebra(), ei, ej, lam), vk, lam + mu);
                Element b = act(r, ei, act(r, ej, vk, mu), lam);
                Element c = act(r, ej, act(r, ei, vk, lam), mu);
                for (std::size_t o = 0; o < m; ++o) {
                    std::vector<Poly> terms{a[o], -b[o], c[o]};
                    if (has_nonzero(terms))
                        rep.add("module(" + A.basis[i] + "," + A.basis[j] + "," + V.basis[k] + ")[" + V.basis[o] + "]",
                                std::move(terms));
                }
            }
    return rep;
}

RepPtr verify(const RepStructure& r) {
    Report rep = check_rep_axioms(r);
    if (!rep.passed()) throw Unverified("module " + r.name() + " fails the axioms: " + rep.summary());
    auto p = std::make_shared<RepStructure>(r);
    p->verified_ = true;
    return p;
}

RepStructure adjoint(const LcaPtr& l) {
    return RepStructure(l, CdModule{"ad_" + l->name(), l->module().basis}, l->table());
}

RepStructure trivial(const LcaPtr& l, std::size_t m, const std::string& name) {
    CdModule mod{name.empty() ? "triv_" + l->name() : name, {}};
    for (std::size_t i = 0; i < m; ++i) mod.basis.push_back("v" + std::to_string(i + 1));
    return RepStructure(l, std::move(mod), SesquiTable(l->rank(), m, m));
}

RepStructure coadjoint(const RepStructure& r) {
    if (!r.verified()) throw Unverified("coadjoint: module " + r.name() + " is not verified");
    const std::size_t n = r.algebra().rank(), m = r.rank();
    SesquiTable t(n, m, m);
    const Substitution shift{{sym::D(), lambda_shift()}};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t k = 0; k < m; ++k) t.at(i, j, k) = -r.table().at(i, k, j).substitute(shift);
    return RepStructure(r.algebra_ptr(), dual_module(r.module()), std::move(t));
}

LcaStructure semidirect(const RepStructure& r) {
    if (!r.verified()) throw Unverified("semidirect: module " + r.name() + " is not verified");
    const auto& A = r.algebra();
    const std::size_t n = A.rank(), m = r.rank(), N = n + m;
    CdModule mod{A.name() + "_x_" + r.name(), A.module().basis};
    for (const auto& b : r.module().basis) {
        std::string name = b;
        while (std::find(mod.basis.begin(), mod.basis.end(), name) != mod.basis.end()) name += "_m";
        mod.basis.push_back(name);
    }
    SesquiTable t(N, N, N);
    const Substitution shift{{sym::L(), lambda_shift()}};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) t.at(i, j, k) = A.table().at(i, j, k);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t k = 0; k < m; ++k) {
                const Poly& q = r.table().at(i, j, k);
                if (q.is_zero()) continue;
                t.at(i, n + j, n + k) = q;
                t.at(n + j, i, n + k) = -q.substitute(shift);
            }
    return LcaStructure(std::move(mod), std::move(t));
}

}  // namespace lck
