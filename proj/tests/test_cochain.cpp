#include <doctest.h>

#include <random>

#include "support/fixtures.hpp"
#include "support/modes.hpp"
#include "support/random.hpp"

using namespace lck;
using namespace lck::fixtures;

TEST_SUITE("cochain") {
    TEST_CASE("d squared vanishes on random 1-cochains") {
        std::mt19937_64 rng(41);
        std::vector<LcaPtr> algebras{verify(virasoro()), verify(quadratic2()), verify(sn2_algebra()), verify(sn3_algebra())};
        for (int it = 0; it < 24; ++it) {
            const LcaPtr& l = algebras[it % algebras.size()];
            CAPTURE(l->name());
            Coefficients ad = Coefficients::adjoint_of(l);
            CdHom c = gen::hom(rng, l->rank(), l->rank(), 2);
            CHECK(coboundary_2(coboundary_1(l, ad, c)).is_zero());
            CHECK(check_2cocycle(coboundary_1(l, ad, c)).passed());

            Coefficients tr = Coefficients::trivial_of(l);
            CdHom ct(l->rank(), 1);
            for (std::size_t j = 0; j < l->rank(); ++j) ct.at(j, 0) = Poly(gen::small_rational(rng));
            CHECK(coboundary_2(coboundary_1(l, tr, ct)).is_zero());
        }
    }

    TEST_CASE("d squared vanishes with module coefficients") {
        std::mt19937_64 rng(42);
        LcaPtr a = verify(sn2_algebra());
        RepPtr v = verify(sn2_rho(a));
        Coefficients co = Coefficients::module(v);
        for (int it = 0; it < 6; ++it) {
            CdHom c = gen::hom(rng, a->rank(), v->rank(), 2);
            CHECK(coboundary_2(coboundary_1(a, co, c)).is_zero());
        }
    }

    TEST_CASE("coboundary of N with adjoint coefficients is the deformed bracket") {
        std::mt19937_64 rng(43);
        for (const auto& l : {verify(virasoro()), verify(quadratic2()), verify(sn3_algebra())}) {
            for (int it = 0; it < 5; ++it) {
                CdHom n = gen::hom(rng, l->rank(), l->rank(), 2);
                CHECK(coboundary_1(l, Coefficients::adjoint_of(l), n).table() == deformed_bracket(*l, n).table());
            }
        }
    }

    TEST_CASE("generic dispatch") {
        LcaPtr l = verify(virasoro());
        Coefficients ad = Coefficients::adjoint_of(l);
        AnyCochain c1 = CdHom::identity(1);
        AnyCochain c2 = coboundary(l, ad, c1);
        REQUIRE(std::holds_alternative<Cochain2>(c2));
        AnyCochain c3 = coboundary(l, ad, c2);
        REQUIRE(std::holds_alternative<Cochain3>(c3));
        CHECK(std::get<Cochain3>(c3).is_zero());
        CHECK_THROWS_AS(coboundary(l, ad, c3), Unsupported);
    }

    TEST_CASE("2-cochains must be skew-symmetric") {
        LcaPtr l = verify(virasoro());
        SesquiTable t(1, 1, 1);
        t.at(0, 0, 0) = 1;
        CHECK_THROWS_AS(Cochain2(l, Coefficients::adjoint_of(l), t), ConstructionError);
        t.at(0, 0, 0) = D() + 2 * L();
        CHECK_NOTHROW(Cochain2(l, Coefficients::adjoint_of(l), t));
    }

    TEST_CASE("trivial-coefficient cocycles of virasoro") {
        // L^3 is a cocycle (central extension), L is a coboundary-type cocycle, L^2 is not skew.
        LcaPtr l = verify(virasoro());
        Coefficients tr = Coefficients::trivial_of(l);
        auto cochain = [&](const Poly& p) {
            SesquiTable t(1, 1, 1);
            t.at(0, 0, 0) = p;
            return Cochain2(l, tr, t);
        };
        std::mt19937_64 rng(44);
        for (const Poly& p : {L().pow(3), L(), L().pow(3) + 5 * L()}) {
            CHECK(check_2cocycle(cochain(p)).passed());
            CHECK(modes::form_cocycle_holds(*l, {p}, rng));
        }
        CHECK_THROWS_AS(cochain(L().pow(2)), ConstructionError);
        CHECK_FALSE(check_2cocycle(cochain(L().pow(5))).passed());
        CHECK_FALSE(modes::form_cocycle_holds(*l, {L().pow(5)}, rng));
    }

    TEST_CASE("parameter deformation by a coboundary is a deformation") {
        SymbolId t = Symbols::intern("t", SymbolKind::Param);
        LcaPtr l = verify(quadratic2());
        Poly f = param("f0") + param("f1") * D() + param("f2") * D().pow(2) + param("f3") * D().pow(3);
        CdHom n = hom(2, {{0, f}, {0, 0}});
        Cochain2 dn = coboundary_1(l, Coefficients::adjoint_of(l), n);
        LcaStructure deformed = deform_with_parameter(*l, dn, t);
        CHECK(check_lca_axioms(deformed).passed());
        CHECK_THROWS_AS(deform_with_parameter(*l, dn, sym::L()), PreconditionFailed);
    }
}
