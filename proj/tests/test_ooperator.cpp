#include <doctest.h>

#include <random>

#include "support/fixtures.hpp"
#include "support/modes.hpp"
#include "support/random.hpp"

using namespace lck;
using namespace lck::fixtures;

namespace {

struct RotaBaxter {
    LcaPtr q;
    RepPtr ad;
    CdHom r1, r2;
};

RotaBaxter rota_baxter() {
    LcaPtr q = verify(quadratic2());
    RepPtr ad = verify(adjoint(q));
    CdHom r1 = hom(2, {{-1, -1}, {1, 1}});
    return {q, ad, r1, Poly(-1) * r1};
}

struct OnSetup {
    RepPtr co;
    CdHom t, n, s;
};

OnSetup sn2_on() {
    Sn2 s = sn2();
    RepPtr co = verify(coadjoint(*verify(adjoint(s.d))));
    OnCandidate c = on_from_sn(s.omega, s.n);
    return {co, c.t, c.n, c.s};
}

}  // namespace

TEST_SUITE("ooperator") {
    TEST_CASE("rota-baxter operators on the adjoint module") {
        std::mt19937_64 rng(61);
        RotaBaxter rb = rota_baxter();
        CHECK(check_o_operator(*rb.ad, rb.r1).passed());
        CHECK(check_o_operator(*rb.ad, rb.r2).passed());
        CHECK(modes::o_operator_holds(*rb.ad, rb.r1, rng));
        CHECK(modes::o_operator_holds(*rb.ad, rb.r2, rng));
        CHECK(check_compatible(*rb.ad, rb.r1, rb.r2).passed());
    }

    TEST_CASE("o-operator check agrees with the mode algebra on random maps") {
        std::mt19937_64 rng(62);
        RotaBaxter rb = rota_baxter();
        RepPtr vir = verify(adjoint(verify(virasoro())));
        int passes = 0;
        for (int it = 0; it < 24; ++it) {
            const RepPtr& r = it % 2 ? rb.ad : vir;
            CdHom t = it % 4 == 1 ? Poly(gen::small_rational(rng)) * rb.r1 : gen::hom(rng, r->rank(), r->rank(), 1);
            bool symbolic = check_o_operator(*r, t).passed();
            CHECK(symbolic == modes::o_operator_holds(*r, t, rng));
            passes += symbolic;
        }
        CHECK(passes >= 6);
    }

    TEST_CASE("induced left-symmetric product and subadjacent algebra") {
        std::mt19937_64 rng(63);
        RotaBaxter rb = rota_baxter();
        SesquiTable lsa = induced_lsa(*rb.ad, rb.r1);
        CHECK(check_left_symmetric(lsa, rb.ad->module()).passed());
        Subadjacent sub = subadjacent(*rb.ad, rb.r1);
        CHECK(sub.report.passed());
        CHECK(check_lca_axioms(*sub.algebra).passed());
        CHECK(modes::lca_holds(*sub.algebra, rng));
        CHECK_THROWS_AS(subadjacent(*rb.ad, CdHom::scalar(2, D())), PreconditionFailed);
    }

    TEST_CASE("compatible pair with a singular operator has no nijenhuis quotient") {
        RotaBaxter rb = rota_baxter();
        CHECK_THROWS_AS(nijenhuis_from_compatible(*rb.ad, rb.r1, rb.r2), NonInvertible);
    }

    TEST_CASE("on-structure from a symplectic-nijenhuis pair") {
        std::mt19937_64 rng(64);
        OnSetup o = sn2_on();
        CHECK(check_o_operator(*o.co, o.t).passed());
        CHECK(modes::o_operator_holds(*o.co, o.t, rng));
        CHECK(check_on_structure(*o.co, o.t, o.n, o.s).passed());
    }

    TEST_CASE("hierarchy of compatible o-operators") {
        OnSetup o = sn2_on();
        Hierarchy h = hierarchy(*o.co, o.t, o.n, o.s, 3);
        CHECK(h.report.passed());
        REQUIRE(h.ops.size() == 4);
        CHECK(h.ops[0] == o.t);
        CHECK(h.ops[2] == compose(o.n, compose(o.n, o.t)));
        std::mt19937_64 rng(65);
        for (const auto& t : h.ops) CHECK(modes::o_operator_holds(*o.co, t, rng));
    }

    TEST_CASE("nijenhuis operator recovered from a compatible invertible pair") {
        OnSetup o = sn2_on();
        CdHom t1 = compose(o.n, o.t);
        CHECK(nijenhuis_from_compatible(*o.co, t1, o.t) == o.n);
        auto [c0, c1] = on_from_compatible(*o.co, o.t, t1);
        CHECK(check_on_structure(*o.co, c0.t, c0.n, c0.s).passed());
        CHECK(check_on_structure(*o.co, c1.t, c1.n, c1.s).passed());
    }

    TEST_CASE("on-structure precondition failure is recorded") {
        OnSetup o = sn2_on();
        CdHom bad = CdHom::scalar(4, D());
        Report r = check_on_structure(*o.co, o.t, bad, bad);
        CHECK_FALSE(r.passed());
    }
}
