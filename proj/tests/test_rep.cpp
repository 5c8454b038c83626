#include <doctest.h>

#include <random>

#include "support/fixtures.hpp"
#include "support/modes.hpp"
#include "support/random.hpp"

using namespace lck;
using namespace lck::fixtures;

TEST_SUITE("rep") {
    TEST_CASE("adjoint, trivial and coadjoint modules satisfy the axioms") {
        std::mt19937_64 rng(31);
        for (const auto& l : {verify(virasoro()), verify(quadratic2()), verify(sn2_algebra()), verify(current(sl2()))}) {
            CAPTURE(l->name());
            RepStructure ad = adjoint(l);
            CHECK(check_rep_axioms(ad).passed());
            CHECK(modes::rep_holds(ad, rng));
            RepStructure tr = trivial(l, 2);
            CHECK(check_rep_axioms(tr).passed());
            RepStructure co = coadjoint(*verify(ad));
            CHECK(check_rep_axioms(co).passed());
            CHECK(modes::rep_holds(co, rng));
        }
    }

    TEST_CASE("parametrized module and its dual") {
        std::mt19937_64 rng(32);
        LcaPtr a = verify(sn2_algebra());
        RepPtr v = verify(sn2_rho(a));
        CHECK(modes::rep_holds(*v, rng));
        RepStructure vs = coadjoint(*v);
        CHECK(check_rep_axioms(vs).passed());
        CHECK(vs.module().basis == std::vector<std::string>{"p_star", "q_star"});
    }

    TEST_CASE("rep axiom check agrees with the mode algebra on random actions") {
        std::mt19937_64 rng(33);
        LcaPtr vir = verify(virasoro());
        for (int it = 0; it < 20; ++it) {
            SesquiTable t(1, 1, 1);
            // D + beta L + gamma is a module for every beta, gamma.
            Rational alpha = it % 3 == 0 ? Rational(1) : gen::small_rational(rng);
            t.at(0, 0, 0) = Poly(alpha) * D() + Poly(gen::small_rational(rng)) * L() + Poly(gen::small_rational(rng));
            RepStructure r(vir, CdModule{"W", {"w"}}, t);
            CHECK(check_rep_axioms(r).passed() == modes::rep_holds(r, rng));
        }
    }

    TEST_CASE("coadjoint action is the negative transpose under the pairing") {
        LcaPtr a = verify(sn2_algebra());
        RepPtr v = verify(sn2_rho(a));
        RepStructure vs = coadjoint(*v);
        const Poly lam = L(), mu = M();
        for (std::size_t i = 0; i < a->rank(); ++i)
            for (std::size_t j = 0; j < v->rank(); ++j)
                for (std::size_t k = 0; k < v->rank(); ++k) {
                    Element ai = Element::basis(2, i), fj = Element::basis(2, j), vk = Element::basis(2, k);
                    Poly lhs = pairing(act(vs, ai, fj, lam), vk, mu);
                    Poly rhs = -pairing(fj, act(*v, ai, vk, lam), mu - lam);
                    CHECK(lhs == rhs);
                }
    }

    TEST_CASE("double dual returns the module") {
        std::vector<RepPtr> reps{verify(adjoint(verify(quadratic2()))), verify(sn2_rho(verify(sn2_algebra()))),
                                 verify(adjoint(verify(current(lie2()))))};
        for (const auto& r : reps) {
            RepStructure dd = coadjoint(*verify(coadjoint(*r)));
            CHECK(dd.table() == r->table());
        }
    }

    TEST_CASE("semidirect product satisfies the axioms") {
        std::mt19937_64 rng(34);
        LcaPtr a = verify(sn2_algebra());
        RepPtr v = verify(sn2_rho(a));
        LcaStructure s = semidirect(*v);
        CHECK(s.rank() == 4);
        CHECK(s.module().basis == std::vector<std::string>{"a", "b", "p", "q"});
        CHECK(check_lca_axioms(s).passed());
        CHECK(modes::lca_holds(s, rng));
        // Module generators that clash with algebra generators get the suffix _m.
        LcaPtr q = verify(quadratic2());
        LcaStructure sa = semidirect(*verify(adjoint(q)));
        CHECK(sa.module().basis == std::vector<std::string>{"a", "b", "a_m", "b_m"});
        CHECK(check_lca_axioms(sa).passed());
    }

    TEST_CASE("constructions require verified inputs") {
        auto unverified = std::make_shared<LcaStructure>(virasoro());
        SesquiTable t(1, 1, 1);
        t.at(0, 0, 0) = D() + L();
        RepStructure r(unverified, CdModule{"W", {"w"}}, t);
        CHECK_THROWS_AS(check_rep_axioms(r), Unverified);
        RepStructure r2(verify(virasoro()), CdModule{"W", {"w"}}, t);
        CHECK_THROWS_AS(coadjoint(r2), Unverified);
        CHECK_THROWS_AS(semidirect(r2), Unverified);
    }
}
