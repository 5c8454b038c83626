#include <doctest.h>

#include <random>

#include "support/fixtures.hpp"
#include "support/modes.hpp"
#include "support/random.hpp"

using namespace lck;
using namespace lck::fixtures;

namespace {

TwoForm random_form(std::mt19937_64& rng, const LcaPtr& a, unsigned deg) {
    const std::size_t n = a->rank();
    const Substitution neg{{sym::L(), -L()}};
    std::vector<Poly> t(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            Poly p = gen::poly(rng, {sym::L()}, deg, 3);
            if (i == j) p = p - p.substitute(neg);
            t[i * n + j] = p;
            t[j * n + i] = -p.substitute(neg);
        }
    return TwoForm(a, t, "w");
}

TwoForm sn3_form() {
    LcaPtr a = verify(sn3_algebra());
    return form_from_entries(a, {{{0, 1}, L().pow(2)}});
}

}  // namespace

TEST_SUITE("symplectic") {
    TEST_CASE("symplectic form on the semidirect product") {
        std::mt19937_64 rng(81);
        Sn2 s = sn2();
        CHECK(check_cocycle(s.omega).passed());
        CHECK(modes::form_cocycle_holds(*s.d, s.omega.table(), rng));
        CHECK(is_nondegenerate(s.omega));
        CHECK(check_symplectic(s.omega).passed());
    }

    TEST_CASE("symplectic-nijenhuis structure") {
        Sn2 s = sn2();
        CHECK(check_nijenhuis_operator(*s.d, s.n).passed());
        CHECK(check_sn_structure(s.omega, s.n).passed());
        CHECK(check_omega_Nk_closed(s.omega, s.n, 3).passed());
        std::mt19937_64 rng(82);
        for (unsigned k = 0; k <= 3; ++k) CHECK(modes::form_cocycle_holds(*s.d, omega_N(s.omega, s.n, k).table(), rng));
        OnCandidate c = on_from_sn(s.omega, s.n);
        RepPtr co = verify(coadjoint(*verify(adjoint(s.d))));
        CHECK(check_on_structure(*co, c.t, c.n, c.s).passed());
    }

    TEST_CASE("tensor and form correspondence is inverse") {
        Sn2 s = sn2();
        Tensor2 r = r_from_symplectic(s.omega);
        CHECK(form_from_r(r) == s.omega);
        CHECK(compose(omega_natural(s.omega), r_sharp0(r)) == CdHom::identity(4));
    }

    TEST_CASE("closed but degenerate form is split") {
        std::mt19937_64 rng(83);
        TwoForm w = sn3_form();
        CHECK(check_cocycle(w).passed());
        CHECK(modes::form_cocycle_holds(w.algebra(), w.table(), rng));
        CHECK_FALSE(is_nondegenerate(w));
        Report r = check_symplectic(w);
        CHECK(r.verdict() == Verdict::Split);
        auto failed = r.failed_conditions();
        REQUIRE(failed.size() == 1);
        CHECK(failed.front()->name == "non-degenerate");
        CHECK(failed.front()->detail == "det = D^4");
        CHECK_THROWS_AS(r_from_symplectic(w), NonInvertible);
    }

    TEST_CASE("non-closed form fails") {
        LcaPtr vir = verify(virasoro());
        TwoForm w = form_from_entries(vir, {{{0, 0}, L().pow(5)}});
        Report r = check_symplectic(w);
        CHECK(r.verdict() == Verdict::Fail);
        CHECK_THROWS_AS(o_from_symplectic(w), NonInvertible);
    }

    TEST_CASE("cocycle check agrees with the mode algebra and with the cochain complex") {
        std::mt19937_64 rng(84);
        std::vector<LcaPtr> algebras{verify(virasoro()), verify(quadratic2()), verify(sn3_algebra()),
                                     verify(current(lie2()))};
        int closed = 0;
        for (int it = 0; it < 40; ++it) {
            const LcaPtr& a = algebras[it % algebras.size()];
            TwoForm w = random_form(rng, a, 3);
            bool symbolic = check_cocycle(w).passed();
            CHECK(symbolic == modes::form_cocycle_holds(*a, w.table(), rng));
            CHECK(symbolic == check_2cocycle(as_cochain(w)).passed());
            closed += symbolic;
        }
        CHECK(closed >= 1);
    }

    TEST_CASE("skew-symmetry is enforced") {
        LcaPtr vir = verify(virasoro());
        CHECK_THROWS_AS(form_from_entries(vir, {{{0, 0}, Poly(1)}}), ConstructionError);
        CHECK_THROWS_AS(form_from_entries(vir, {{{0, 0}, L().pow(2)}}), ConstructionError);
        CHECK_THROWS_AS(form_from_entries(vir, {{{0, 0}, D()}}), ConstructionError);
        LcaPtr q = verify(quadratic2());
        TwoForm w = form_from_entries(q, {{{0, 1}, L().pow(2) + 1}});
        CHECK(w.at(1, 0) == -(L().pow(2) + 1));
        CHECK_NOTHROW(form_from_entries(q, {{{0, 1}, L()}, {{1, 0}, L()}}));
        CHECK_THROWS_AS(form_from_entries(q, {{{0, 1}, L()}, {{1, 0}, -L()}}), ConstructionError);
    }

    TEST_CASE("form evaluation is sesquilinear") {
        Sn2 s = sn2();
        Element a = Element::basis(4, 0), p = Element::basis(4, 2);
        CHECK(form_eval(s.omega, a, p, L()) == Poly(-1));
        Element da = el({D(), 0, 0, 0});
        CHECK(form_eval(s.omega, da, p, L()) == L());
    }
}
