#pragma once

#include "lck/gdnov.hpp"
#include "lck/symplectic.hpp"

namespace lck::fixtures {

inline Poly D() { return Poly::var(sym::D()); }
inline Poly L() { return Poly::var(sym::L()); }
inline Poly M() { return Poly::var(sym::M()); }
inline Poly X() { return Poly::var(sym::X()); }
inline Poly Y() { return Poly::var(sym::Y()); }
inline Poly param(const std::string& name) { return Poly::var(Symbols::intern(name, SymbolKind::Param)); }

inline Element el(std::initializer_list<Poly> c) { return Element(std::vector<Poly>(c)); }

inline CdHom hom(std::size_t n, std::initializer_list<std::initializer_list<Poly>> rows) {
    CdHom h(n, n);
    std::size_t j = 0;
    for (const auto& row : rows) {
        std::size_t k = 0;
        for (const auto& p : row) h.at(j, k++) = p;
        ++j;
    }
    return h;
}

inline LcaStructure virasoro() {
    return lca_from_entries(CdModule{"Vir", {"a"}}, {{{0, 0}, el({D() + 2 * L()})}});
}

// [a L a] = (D + 2L) a, [a L b] = (D + L) b, [b L b] = 0
inline LcaStructure quadratic2() {
    return lca_from_entries(CdModule{"Q2", {"a", "b"}},
                            {{{0, 0}, el({D() + 2 * L(), 0})}, {{0, 1}, el({0, D() + L()})}, {{1, 1}, el({0, 0})}});
}

inline LieAlgebra lie2() {
    LieAlgebra g("g2", {"x", "y"});
    g.at(0, 1, 1) = 1;
    g.at(1, 0, 1) = -1;
    return g;
}

inline LieAlgebra sl2() {
    // [e,f] = h, [h,e] = 2e, [h,f] = -2f with basis (e, f, h)
    LieAlgebra g("sl2", {"e", "f", "h"});
    g.at(0, 1, 2) = 1;
    g.at(1, 0, 2) = -1;
    g.at(2, 0, 0) = 2;
    g.at(0, 2, 0) = -2;
    g.at(2, 1, 1) = -2;
    g.at(1, 2, 1) = 2;
    return g;
}

// [a L a] = (D + 2L) a, [a L b] = (D + k L + l) b, [b L b] = 0
inline LcaStructure sn2_algebra() {
    Poly k = param("k"), l = param("l");
    return lca_from_entries(CdModule{"A", {"a", "b"}},
                            {{{0, 0}, el({D() + 2 * L(), 0})}, {{0, 1}, el({0, D() + k * L() + l})}});
}

// rho(a) a = (D + L + m) a, rho(a) b = (D + k L + l) b, rho(b) = 0
inline RepStructure sn2_rho(const LcaPtr& a) {
    Poly k = param("k"), l = param("l"), m = param("m");
    SesquiTable t(2, 2, 2);
    t.at(0, 0, 0) = D() + L() + m;
    t.at(0, 1, 1) = D() + k * L() + l;
    return RepStructure(a, CdModule{"V", {"p", "q"}}, t);
}

struct Sn2 {
    LcaPtr a;
    RepPtr rho;
    RepPtr rho_star;
    LcaPtr d;
    TwoForm omega;
    CdHom n;
};

inline Sn2 sn2() {
    LcaPtr a = verify(sn2_algebra());
    RepPtr rho = verify(sn2_rho(a));
    RepPtr rs = verify(coadjoint(*rho));
    LcaPtr d = verify(semidirect(*rs).renamed("D"));
    // {a a*} = -1, {b b*} = -1 on the basis (a, b, p*, q*)
    TwoForm w = form_from_entries(d, {{{0, 2}, Poly(-1)}, {{1, 3}, Poly(-1)}}, "w");
    Poly k1 = param("k1"), k2 = param("k2");
    CdHom n = hom(4, {{k1, 0, 0, 0}, {0, k2, 0, 0}, {0, 0, k1, 0}, {0, 0, 0, k2}});
    return {a, rho, rs, d, w, n};
}

// [a L a] = 0, [a L b] = L a, [b L b] = (D + 2L) b
inline LcaStructure sn3_algebra() {
    return lca_from_entries(CdModule{"A3", {"a", "b"}},
                            {{{0, 0}, el({0, 0})}, {{0, 1}, el({L(), 0})}, {{1, 1}, el({0, D() + 2 * L()})}});
}

}  // namespace lck::fixtures
