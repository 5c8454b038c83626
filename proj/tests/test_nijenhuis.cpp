#include <doctest.h>

#include <random>

#include "support/fixtures.hpp"
#include "support/modes.hpp"
#include "support/random.hpp"

using namespace lck;
using namespace lck::fixtures;

namespace {

CdHom quadratic2_n() {
    Poly f = param("f0") + param("f1") * D() + param("f2") * D().pow(2) + param("f3") * D().pow(3);
    return hom(2, {{0, f}, {0, 0}});
}

CdHom diag2(const Poly& x, const Poly& y) { return hom(2, {{x, 0}, {0, y}}); }

}  // namespace

TEST_SUITE("nijenhuis") {
    TEST_CASE("scalar multiple of the identity on virasoro") {
        std::mt19937_64 rng(51);
        LcaStructure v = virasoro();
        CdHom n = CdHom::scalar(1, param("k"));
        CHECK(check_nijenhuis_operator(v, n).passed());
        CHECK(modes::nijenhuis_holds(v, n, rng));
        LcaStructure vn = deformed_bracket(v, n);
        CHECK(vn.table().at(0, 0, 0) == param("k") * (D() + 2 * L()));
        CHECK(check_lca_axioms(vn).passed());
    }

    TEST_CASE("differential operator into the abelian ideal") {
        std::mt19937_64 rng(52);
        LcaStructure q = quadratic2();
        CdHom n = quadratic2_n();
        Report r = check_nijenhuis_operator(q, n);
        CHECK(r.passed());
        CHECK(modes::nijenhuis_holds(q, n, rng));
        CHECK(check_lca_axioms(deformed_bracket(q, n)).passed());
    }

    TEST_CASE("nijenhuis check agrees with the mode algebra on random operators") {
        std::mt19937_64 rng(53);
        std::vector<LcaStructure> base{virasoro(), quadratic2(), sn3_algebra()};
        int agree = 0, total = 0;
        for (int it = 0; it < 24; ++it) {
            const LcaStructure& l = base[it % base.size()];
            CdHom n = it % 4 == 0 ? CdHom::scalar(l.rank(), Poly(gen::small_rational(rng)))
                                  : gen::hom(rng, l.rank(), l.rank(), 1);
            bool symbolic = check_nijenhuis_operator(l, n).passed();
            CHECK(symbolic == modes::nijenhuis_holds(l, n, rng));
            agree += symbolic;
            ++total;
        }
        CHECK(agree > 0);
        CHECK(agree < total);
    }

    TEST_CASE("failing operator is reported with a location") {
        LcaStructure v = virasoro();
        Report r = check_nijenhuis_operator(v, CdHom::scalar(1, D()));
        CHECK(r.verdict() == Verdict::Fail);
        REQUIRE_FALSE(r.failures().empty());
        CHECK(r.failures().front()->location.find("(a,a)") != std::string::npos);
    }

    TEST_CASE("nijenhuis structure and semidirect characterization on a module") {
        LcaPtr a = verify(sn2_algebra());
        RepPtr v = verify(sn2_rho(a));
        CdHom n = diag2(param("k1"), param("k2"));
        CdHom s = diag2(param("k1"), param("k2"));
        CHECK(check_nijenhuis_structure(*v, n, s).passed());
        SemidirectCharacterization c = check_semidirect_characterization(*v, n, s);
        CHECK(c.agree);
        CHECK(c.semidirect_side.passed());
        CHECK(c.component_side.passed());
        CHECK(c.combined.passed());
    }

    TEST_CASE("semidirect characterization agrees on random pairs") {
        std::mt19937_64 rng(54);
        LcaPtr vir = verify(virasoro());
        RepPtr ad = verify(adjoint(vir));
        LcaPtr q = verify(quadratic2());
        RepPtr adq = verify(adjoint(q));
        for (int it = 0; it < 16; ++it) {
            const RepPtr& r = it % 2 ? ad : adq;
            std::size_t na = r->algebra().rank(), m = r->rank();
            CdHom n = it % 3 == 0 ? CdHom::scalar(na, Poly(gen::small_rational(rng))) : gen::hom(rng, na, na, 1);
            CdHom s = it % 3 == 0 ? n : gen::hom(rng, m, m, 1);
            SemidirectCharacterization c = check_semidirect_characterization(*r, n, s);
            CHECK(c.agree);
            std::mt19937_64 orng(1000 + it);
            CHECK(c.semidirect_side.passed() == modes::nijenhuis_holds(semidirect(*r), direct_sum(n, s), orng));
        }
    }

    TEST_CASE("dual of the deformed module is the varpi module") {
        LcaPtr a = verify(sn2_algebra());
        RepPtr v = verify(sn2_rho(a));
        RepPtr vs = verify(coadjoint(*v));
        CdHom n = diag2(param("k1"), param("k2"));
        CdHom s = diag2(param("k1"), param("k2"));
        RepPtr tilde = deformed_rep(*vs, n, s);
        CHECK(check_rep_axioms(*tilde).passed());
        RepStructure co = coadjoint(*tilde);
        CHECK(co.table() == varpi_table(*v, n, dual_hom(s)));
    }

    TEST_CASE("deformed module requires a nijenhuis structure") {
        LcaPtr vir = verify(virasoro());
        RepPtr ad = verify(adjoint(vir));
        CHECK_THROWS_AS(deformed_rep(*ad, CdHom::scalar(1, D()), CdHom::scalar(1, D())), PreconditionFailed);
    }

    TEST_CASE("trivial deformation of the pair") {
        SymbolId t = Symbols::intern("t", SymbolKind::Param);
        LcaPtr a = verify(sn2_algebra());
        RepPtr v = verify(sn2_rho(a));
        CdHom n = diag2(param("k1"), param("k2"));
        LpPair p = trivial_pair_deformation(*v, n, n, t);
        CHECK(check_lp_pair(p, "pair").passed());
        std::mt19937_64 rng(55);
        CHECK(modes::lca_holds(p.algebra, rng));
    }
}
