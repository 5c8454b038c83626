#include <doctest.h>

#include <filesystem>
#include <json.hpp>

#include "lck/dsl/runner.hpp"
#include "support/fixtures.hpp"

using namespace lck;
using namespace lck::dsl;
using namespace lck::fixtures;

namespace {

const std::vector<std::string> kCorpus{"virasoro.lck", "current.lck", "quadratic.lck", "rota_baxter.lck", "sn2.lck",
                                       "sn3.lck"};

std::string corpus(const std::string& f) { return std::string(LCK_CORPUS_DIR) + "/" + f; }

ParseError parse_error(const std::string& src) {
    try {
        parse(src);
    } catch (const ParseError& e) {
        return e;
    }
    FAIL("expected a parse error");
    return ParseError(0, 0, "");
}

}  // namespace

TEST_SUITE("dsl") {
    TEST_CASE("virasoro parses") {
        Workspace ws = parse_file(corpus("virasoro.lck"));
        REQUIRE(ws.kind_of("Vir") == ObjectKind::Algebra);
        CHECK(ws.algebra("Vir")->rank() == 1);
        CHECK(ws.algebra("Vir")->table() == virasoro().table());
        CHECK(ws.algebra("VirN")->table() == deformed_bracket(virasoro(), CdHom::scalar(1, param("k"))).table());
        CHECK(ws.checks.size() == 4);
    }

    TEST_CASE("semidirect corpus parses with its parameters") {
        Workspace ws = parse_file(corpus("sn2.lck"));
        CHECK(ws.scalars == std::vector<std::string>{"k", "l", "m", "k1", "k2"});
        Sn2 s = sn2();
        CHECK(ws.algebra("AV")->table() == s.d->table());
        CHECK(ws.form("w") == s.omega);
        CHECK(ws.map("N").hom == s.n);
        CHECK(ws.checks.size() == 15);
    }

    TEST_CASE("reserved symbol outside its context is rejected with a position") {
        ParseError e = parse_error("algebra X rank 1 basis a {\n  [a,a] = (D + 2*M)*a;\n}\n");
        CHECK(e.line == 2);
        CHECK(e.column == 18);
        CHECK(e.message == "M not permitted in a bracket table");
    }

    TEST_CASE("unknown identifiers, expected tokens and duplicates") {
        ParseError u = parse_error("algebra X rank 1 basis a { [a,a] = (D + 2*kk)*a; }");
        CHECK(u.message.find("unknown identifier") != std::string::npos);
        ParseError x = parse_error("algebra X rank 1 basis a [");
        CHECK_FALSE(x.expected.empty());
        ParseError d = parse_error("lie g dim 1 basis x { }\nlie g dim 1 basis y { }\n");
        CHECK(d.line == 2);
        ParseError c = parse_error("check lca Nope;");
        CHECK(c.message.find("Nope") != std::string::npos);
    }

    TEST_CASE("construction failures become parse errors") {
        ParseError e = parse_error("algebra X rank 1 basis a { [a,a] = (D + 3*L)*a; }\n"
                                   "module Ad = adjoint(X);\nmodule Co = coadjoint(Ad);\n");
        CHECK(e.line == 3);
        CHECK(e.message.find("construction failed") != std::string::npos);
    }

    TEST_CASE("exponent cap in the parser") {
        unsigned saved = max_degree();
        set_max_degree(8);
        CHECK_THROWS(parse("algebra X rank 1 basis a { [a,a] = D^9*a; }"));
        set_max_degree(saved);
    }

    TEST_CASE("every corpus object survives an emit and parse round trip") {
        for (const auto& f : kCorpus) {
            CAPTURE(f);
            Workspace ws = parse_file(corpus(f));
            std::string text = emit_workspace(ws);
            Workspace back = parse(text);
            CHECK(emit_workspace(back) == text);
            for (const auto& [kind, name] : ws.order) {
                CAPTURE(name);
                CHECK(same_object(ws, name, back, name));
                Workspace one = parse(emit_object(ws, name));
                CHECK(same_object(ws, name, one, name));
            }
        }
    }

    TEST_CASE("emitted deformed bracket factors out the parameter") {
        Workspace ws = parse_file(corpus("virasoro.lck"));
        CHECK(emit_object(ws, "VirN").find("[a,a] = k*(D + 2*L)*a;") != std::string::npos);
    }

    TEST_CASE("emitted semidirect product re-verifies") {
        Workspace ws = parse_file(corpus("sn2.lck"));
        Workspace back = parse(emit_object(ws, "AV"));
        CHECK(check_lca_axioms(*back.algebra("AV")).passed());
    }

    TEST_CASE("json report is well formed and deterministic") {
        Workspace ws = parse_file(corpus("sn3.lck"));
        RunOptions opts;
        opts.oracle = true;
        auto a = run(ws, opts), b = run(ws, opts);
        REQUIRE(a.size() == b.size());
        for (std::size_t i = 0; i < a.size(); ++i) {
            std::string ja = render_json(a[i]);
            CHECK(ja == render_json(b[i]));
            auto j = nlohmann::json::parse(ja);
            CHECK(j["schema"] == "lck-report/1");
            CHECK(j["millis"].is_null());
            CHECK(j["oracle"]["agree"] == true);
            CHECK(j["oracle"]["certified"] == true);
        }
        auto last = nlohmann::json::parse(render_json(a.back()));
        CHECK(last["check"] == "symplectic");
        CHECK(last["verdict"] == "split");
        CHECK(exit_code(a) == 1);
    }

    TEST_CASE("failing check carries a witness") {
        Workspace ws = parse("scalars k;\nalgebra X rank 1 basis a { [a,a] = (D + 2*L)*a; }\n"
                             "map N : X -> X { a -> D*a; }\ncheck nijenhuis X N;\n");
        auto rs = run(ws);
        REQUIRE(rs.size() == 1);
        CHECK(rs[0].verdict() == Verdict::Fail);
        REQUIRE(rs[0].witness);
        CHECK(rs[0].witness->witness.value != 0);
        auto j = nlohmann::json::parse(render_json(rs[0]));
        CHECK(j["witness"]["location"] == rs[0].witness->location);
        CHECK_FALSE(j["residuals"].empty());
    }

    TEST_CASE("error verdict does not stop later checks") {
        Workspace ws = parse("algebra X rank 1 basis a { [a,a] = (D + 2*L)*a; }\n"
                             "map N : X -> X { a -> a; }\n"
                             "check hierarchy X N N N 2;\ncheck lca X;\n");
        auto rs = run(ws);
        REQUIRE(rs.size() == 2);
        CHECK(rs[0].verdict() == Verdict::Error);
        CHECK(rs[1].verdict() == Verdict::Pass);
        CHECK(exit_code(rs) == 1);
    }

    TEST_CASE("passing corpus files exit cleanly") {
        for (const auto& f : kCorpus) {
            CAPTURE(f);
            auto rs = run(parse_file(corpus(f)));
            CHECK(exit_code(rs) == (f == "sn3.lck" ? 1 : 0));
        }
    }

    TEST_CASE("text rendering") {
        Workspace ws = parse_file(corpus("virasoro.lck"));
        auto rs = run(ws);
        CHECK(render_text(rs[0]) == "lca Vir: pass\n");
    }
}
