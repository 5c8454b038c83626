#include <doctest.h>

#include <random>

#include "support/fixtures.hpp"
#include "support/random.hpp"

using namespace lck;
using namespace lck::fixtures;

namespace {

std::vector<SymbolId> ring_vars() { return {sym::D(), sym::L(), sym::M(), Symbols::intern("k", SymbolKind::Param)}; }

std::map<SymbolId, Rational> random_point(std::mt19937_64& rng, const std::vector<SymbolId>& vars) {
    std::map<SymbolId, Rational> pt;
    for (SymbolId s : vars) pt[s] = gen::small_rational(rng);
    return pt;
}

}  // namespace

TEST_SUITE("kernel") {
    TEST_CASE("polynomial ring laws on random inputs") {
        std::mt19937_64 rng(11);
        auto vars = ring_vars();
        for (int it = 0; it < 200; ++it) {
            Poly a = gen::poly(rng, vars, 3), b = gen::poly(rng, vars, 3), c = gen::poly(rng, vars, 3);
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + Poly() == a);
            CHECK(a * Poly(1) == a);
            CHECK((a - a).is_zero());
            CHECK((a * Poly()).is_zero());
            CHECK(-(-a) == a);
        }
    }

    TEST_CASE("evaluation is a ring homomorphism") {
        std::mt19937_64 rng(12);
        auto vars = ring_vars();
        for (int it = 0; it < 100; ++it) {
            Poly a = gen::poly(rng, vars, 3), b = gen::poly(rng, vars, 3);
            auto pt = random_point(rng, vars);
            CHECK((a * b).evaluate(pt) == a.evaluate(pt) * b.evaluate(pt));
            CHECK((a - b).evaluate(pt) == a.evaluate(pt) - b.evaluate(pt));
        }
    }

    TEST_CASE("substitution commutes with evaluation and arithmetic") {
        std::mt19937_64 rng(13);
        auto vars = ring_vars();
        for (int it = 0; it < 100; ++it) {
            Poly a = gen::poly(rng, vars, 3), b = gen::poly(rng, vars, 3);
            Poly img = gen::poly(rng, {sym::L(), sym::D()}, 2);
            Substitution s{{sym::M(), img}};
            CHECK((a * b).substitute(s) == a.substitute(s) * b.substitute(s));
            CHECK((a + b).substitute(s) == a.substitute(s) + b.substitute(s));
            auto pt = random_point(rng, vars);
            auto pt2 = pt;
            pt2[sym::M()] = img.evaluate(pt);
            CHECK(a.substitute(s).evaluate(pt) == a.evaluate(pt2));
        }
    }

    TEST_CASE("substitution is simultaneous") {
        Poly p = L() + 2 * D();
        Poly q = p.substitute({{sym::L(), D()}, {sym::D(), L()}});
        CHECK(q == D() + 2 * L());
    }

    TEST_CASE("substitution by name rejects unknown symbols") {
        CHECK_THROWS_AS(substitute(L(), {{"no_such_symbol_xyz", Poly(1)}}), UnknownSymbol);
        CHECK(substitute(L() * D(), {{"L", Poly(3)}}) == 3 * D());
    }

    TEST_CASE("canonical rendering") {
        CHECK((D() + 2 * L()).pow(2).str() == "D^2 + 4*D*L + 4*L^2");
        CHECK(Poly(Rational(3, 4)).str() == "3/4");
        CHECK((-D()).str() == "-D");
        CHECK(Poly().str() == "0");
        CHECK(render_rational(Rational(-5, 10)) == "-1/2");
    }

    TEST_CASE("exponent cap") {
        unsigned saved = max_degree();
        set_max_degree(8);
        CHECK_NOTHROW(D().pow(8));
        CHECK_THROWS_AS(D().pow(9), ExponentOverflow);
        CHECK_THROWS_AS(D().pow(5) * D().pow(4), ExponentOverflow);
        set_max_degree(saved);
    }

    TEST_CASE("identity test") {
        Poly k = param("k");
        CHECK(identity_test((D() + k) * (D() - k) - (D() * D() - k * k)));
        CHECK_FALSE(identity_test(D().pow(4)));
    }

    TEST_CASE("oracle certifies zero sums and finds witnesses") {
        Poly k = param("k");
        std::vector<Poly> zero_terms{(D() + L()).pow(3), -(D().pow(3) + 3 * D().pow(2) * L() + 3 * D() * L().pow(2)),
                                     -L().pow(3)};
        OracleResult z = evaluation_oracle(zero_terms);
        CHECK(z.all_zero);
        CHECK(z.certified);
        CHECK_FALSE(z.witness);

        std::vector<Poly> quartic{D().pow(4)};
        OracleResult q = evaluation_oracle(quartic);
        CHECK_FALSE(q.all_zero);
        REQUIRE(q.witness);
        CHECK(q.witness->value != 0);
        CHECK(q.witness->point.size() == 1);
        CHECK(q.witness->point[0].first == "D");

        auto w = find_witness(k * D() - L());
        REQUIRE(w);
        CHECK(w->value != 0);
        CHECK_FALSE(find_witness(Poly()));
    }

    TEST_CASE("oracle agrees with symbolic zero test on random sums") {
        std::mt19937_64 rng(14);
        auto vars = ring_vars();
        for (int it = 0; it < 150; ++it) {
            Poly a = gen::poly(rng, vars, 3), b = gen::poly(rng, vars, 3);
            // Half of the cases cancel exactly.
            std::vector<Poly> terms{a, b, it % 2 ? -(a + b) : -a};
            Poly sum = terms[0] + terms[1] + terms[2];
            OracleResult r = evaluation_oracle(terms, {0, static_cast<std::uint64_t>(it), 4'000'000});
            CHECK(r.certified);
            CHECK(r.all_zero == sum.is_zero());
            if (!r.all_zero) {
                std::map<SymbolId, Rational> pt;
                for (const auto& [name, v] : r.witness->point) pt[*Symbols::find(name)] = v;
                CHECK(sum.evaluate(pt) == r.witness->value);
            }
        }
    }

    TEST_CASE("oracle is deterministic for a fixed seed") {
        std::vector<Poly> t{D().pow(3) - L()};
        auto a = evaluation_oracle(t, {0, 7, 4'000'000});
        auto b = evaluation_oracle(t, {0, 7, 4'000'000});
        REQUIRE(a.witness);
        REQUIRE(b.witness);
        CHECK(a.witness->point == b.witness->point);
        CHECK(a.points == b.points);
    }

    TEST_CASE("too few oracle points are reported as uncertified") {
        std::vector<Poly> t{D().pow(3)};
        CHECK_FALSE(evaluation_oracle(t, {2, 0, 4'000'000}).certified);
    }

    TEST_CASE("determinant is multiplicative") {
        std::mt19937_64 rng(15);
        for (int it = 0; it < 40; ++it) {
            std::size_t n = 1 + it % 3;
            CdHom a = gen::hom(rng, n, n, 2), b = gen::hom(rng, n, n, 2);
            CHECK(determinant(compose(a, b)) == determinant(a) * determinant(b));
        }
    }

    TEST_CASE("determinant by cofactor expansion matches explicit 2x2 and 3x3 formulas") {
        std::mt19937_64 rng(16);
        for (int it = 0; it < 30; ++it) {
            CdHom a = gen::hom(rng, 2, 2, 2);
            CHECK(determinant(a) == a.at(0, 0) * a.at(1, 1) - a.at(0, 1) * a.at(1, 0));
            CdHom b = gen::hom(rng, 3, 3, 1);
            Poly sarrus = b.at(0, 0) * b.at(1, 1) * b.at(2, 2) + b.at(0, 1) * b.at(1, 2) * b.at(2, 0) +
                          b.at(0, 2) * b.at(1, 0) * b.at(2, 1) - b.at(0, 2) * b.at(1, 1) * b.at(2, 0) -
                          b.at(0, 0) * b.at(1, 2) * b.at(2, 1) - b.at(0, 1) * b.at(1, 0) * b.at(2, 2);
            CHECK(determinant(b) == sarrus);
        }
    }

    TEST_CASE("inverse of unimodular homomorphisms") {
        std::mt19937_64 rng(17);
        for (int it = 0; it < 30; ++it) {
            // Unit upper triangular times unit lower triangular has determinant 1.
            std::size_t n = 2 + it % 2;
            CdHom u = CdHom::identity(n), l = CdHom::identity(n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i + 1; j < n; ++j) {
                    u.at(i, j) = gen::poly(rng, {sym::D()}, 2, 2);
                    l.at(j, i) = gen::poly(rng, {sym::D()}, 2, 2);
                }
            CdHom t = Poly(3) * compose(u, l);
            CdHom inv = invert_hom(t);
            CHECK(compose(inv, t) == CdHom::identity(n));
            CHECK(compose(t, inv) == CdHom::identity(n));
        }
    }

    TEST_CASE("non-unit determinant is reported") {
        CdHom t = hom(2, {{D(), 0}, {0, D().pow(3)}});
        try {
            invert_hom(t);
            FAIL("expected NonInvertible");
        } catch (const NonInvertible& e) {
            CHECK(e.determinant == D().pow(4));
        }
        CHECK_FALSE(hom_det_unit(t).unit);
        CHECK_THROWS_AS(invert_hom(CdHom(2, 2)), NonInvertible);
    }

    TEST_CASE("dual homomorphism is adjoint for the pairing") {
        std::mt19937_64 rng(18);
        Poly sigma = L();
        for (int it = 0; it < 60; ++it) {
            std::size_t n = 1 + it % 3;
            CdHom s = gen::hom(rng, n, n, 2);
            Element alpha = gen::element(rng, n, {sym::D()}, 2), v = gen::element(rng, n, {sym::D()}, 2);
            CHECK(pairing(dual_hom(s).apply(alpha), v, sigma) == pairing(alpha, s.apply(v), sigma));
        }
    }

    TEST_CASE("dual is an involution and reverses composition") {
        std::mt19937_64 rng(19);
        for (int it = 0; it < 30; ++it) {
            CdHom a = gen::hom(rng, 2, 2, 2), b = gen::hom(rng, 2, 2, 2);
            CHECK(dual_hom(dual_hom(a)) == a);
            CHECK(dual_hom(compose(a, b)) == compose(dual_hom(b), dual_hom(a)));
        }
    }

    TEST_CASE("pairing of basis elements") {
        Element f = el({D() * D(), 0}), g = el({D() + 1, 0});
        CHECK(pairing(f, g, L()) == L() * L() * (L() + 1));
        CHECK(pairing(el({1, 0}), el({0, 1}), L()).is_zero());
    }

    TEST_CASE("symbol registry") {
        CHECK(Symbols::name(sym::D()) == "D");
        CHECK(Symbols::name(sym::X()) == "D1");
        CHECK(is_reserved_name("M"));
        CHECK(is_reserved_name("_k1"));
        CHECK_FALSE(is_reserved_name("k1"));
        SymbolId k = Symbols::intern("kk", SymbolKind::Param);
        CHECK(Symbols::intern("kk", SymbolKind::Param) == k);
    }
}
