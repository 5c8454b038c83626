#include <doctest.h>

#include <random>

#include "support/fixtures.hpp"
#include "support/modes.hpp"

using namespace lck;
using namespace lck::fixtures;

namespace {

NovikovAlgebra novikov_v() {
    NovikovAlgebra v("V", {"a", "b"});
    v.at(0, 0, 0) = 1;
    v.at(1, 0, 1) = 1;
    return v;
}

GDBialgebra gd_g() { return {"G", novikov_v(), LieAlgebra("G", {"a", "b"})}; }

// [e_i L e_j] = D(e_j o e_i) + L(e_i o e_j + e_j o e_i) + [e_j, e_i], written out independently.
SesquiTable quadratic_table(const NovikovAlgebra& v, const LieAlgebra& g) {
    const std::size_t d = v.dim();
    SesquiTable t(d, d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) {
                Poly p = D() * v.at(j, i, k) + L() * v.at(i, j, k) + L() * v.at(j, i, k) - g.at(i, j, k);
                t.at(i, j, k) = p;
            }
    return t;
}

NovikovAlgebra random_novikov(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> c(-1, 1), sparse(0, 2);
    NovikovAlgebra v("R", {"a", "b"});
    for (auto& p : v.m) p = sparse(rng) == 0 ? Poly(c(rng)) : Poly();
    return v;
}

LieAlgebra random_lie(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> c(-1, 1);
    LieAlgebra g("R", {"a", "b"});
    for (std::size_t k = 0; k < 2; ++k) {
        Poly x = c(rng);
        g.at(0, 1, k) = x;
        g.at(1, 0, k) = -x;
    }
    return g;
}

}  // namespace

TEST_SUITE("gdnov") {
    TEST_CASE("novikov algebra and its quadratic conformal algebra") {
        NovikovAlgebra v = novikov_v();
        CHECK(check_novikov(v).passed());
        GDBialgebra g = gd_g();
        CHECK(check_gd(g).passed());
        LcaStructure q = quadratic_from_gd(g);
        CHECK(q.table() == quadratic2().table());
        CHECK(q.table() == quadratic_table(v, g.lie));
        CHECK(check_lca_axioms(q).passed());
    }

    TEST_CASE("novikov and gd checks agree with the quadratic algebra on modes") {
        std::mt19937_64 rng(91);
        int novikov = 0, gd = 0;
        for (int it = 0; it < 60; ++it) {
            NovikovAlgebra v = random_novikov(rng);
            LieAlgebra zero("R", {"a", "b"});
            LcaStructure q(CdModule{"Q", {"a", "b"}}, quadratic_table(v, zero));
            bool nov = check_novikov(v).passed();
            CHECK(nov == modes::lca_holds(q, rng));
            novikov += nov;

            LieAlgebra g = random_lie(rng);
            LcaStructure qg(CdModule{"Q", {"a", "b"}}, quadratic_table(v, g));
            bool isgd = check_gd({"R", v, g}).passed();
            CHECK(isgd == modes::lca_holds(qg, rng));
            gd += isgd;
        }
        CHECK(novikov >= 3);
        CHECK(gd >= 3);
    }

    TEST_CASE("nijenhuis operator on the gd bialgebra") {
        GDBialgebra g = gd_g();
        CdHom n0 = hom(2, {{0, 1}, {0, 0}});
        CHECK(check_nijenhuis_novikov(g.novikov, n0).passed());
        CHECK(check_nijenhuis_lie(g.lie, n0).passed());
        CHECK(check_nijenhuis_gd(g, n0).passed());
        CHECK(check_novikov(deformed_novikov(g.novikov, n0)).passed());
        CHECK(check_gd(deformed_gd(g, n0)).passed());
    }

    TEST_CASE("lifting commutes with deformation") {
        GDBialgebra g = gd_g();
        std::vector<CdHom> ops{hom(2, {{0, 1}, {0, 0}}), CdHom::scalar(2, param("k")), CdHom::identity(2)};
        for (const auto& n : ops) {
            REQUIRE(check_nijenhuis_gd(g, n).passed());
            LcaStructure lhs = quadratic_from_gd(deformed_gd(g, n));
            LcaStructure rhs = deformed_bracket(quadratic_from_gd(g), lift_hom(n));
            CHECK(lhs.table() == rhs.table());
            CHECK(check_nijenhuis_operator(quadratic_from_gd(g), lift_hom(n)).passed());
        }
    }

    TEST_CASE("nijenhuis checks on random matrices agree with the lift") {
        std::mt19937_64 rng(92);
        std::uniform_int_distribution<int> c(-2, 2);
        GDBialgebra g = gd_g();
        LcaStructure q = quadratic_from_gd(g);
        for (int it = 0; it < 20; ++it) {
            CdHom n = hom(2, {{c(rng), c(rng)}, {c(rng), c(rng)}});
            bool gd = check_nijenhuis_gd(g, n).passed();
            CHECK(gd == modes::nijenhuis_holds(q, n, rng));
        }
    }

    TEST_CASE("non-gd input and differential matrices are rejected") {
        NovikovAlgebra v("W", {"a", "b"});
        v.at(0, 0, 0) = 1;
        v.at(0, 1, 1) = 1;
        CHECK_FALSE(check_novikov(v).passed());
        GDBialgebra g{"W", v, LieAlgebra("W", {"a", "b"})};
        CHECK_THROWS_AS(quadratic_from_gd(g), Unverified);
        CHECK_THROWS_AS(check_nijenhuis_gd(gd_g(), CdHom::scalar(2, D())), ConstructionError);
        CHECK_THROWS_AS(lift_hom(CdHom::scalar(2, D())), ConstructionError);
    }
}
