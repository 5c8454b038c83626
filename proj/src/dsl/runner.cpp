#include "lck/dsl/runner.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <sstream>

#include <json.hpp>

namespace lck::dsl {
namespace {

using Args = std::vector<std::string>;
using Handler = std::function<Report(const Workspace&, const Args&)>;

unsigned as_uint(const std::string& s) {
    if (s.empty() || !std::isdigit(static_cast<unsigned char>(s[0]))) throw Error("expected an integer, got '" + s + "'");
    return static_cast<unsigned>(std::stoul(s));
}

SymbolId as_scalar(const Workspace& ws, const std::string& s) {
    if (std::find(ws.scalars.begin(), ws.scalars.end(), s) == ws.scalars.end())
        throw Error("'" + s + "' is not a declared scalar");
    return *Symbols::find(s);
}

// Map checked against a module or algebra shape.
const CdHom& endo_on(const Workspace& ws, const std::string& map, std::size_t rank) {
    const MapObject& m = ws.map(map);
    if (m.hom.src_rank() != rank || m.hom.dst_rank() != rank)
        throw ModuleMismatch("map " + map + " is not an endomorphism of rank " + std::to_string(rank));
    return m.hom;
}

// Optional leading algebra argument, checked against the module's algebra.
Args drop_algebra(const Workspace& ws, const Args& a, std::size_t full) {
    if (a.size() != full) return a;
    const RepPtr& r = ws.module(a[1]);
    if (r->algebra().name() != a[0]) throw ModuleMismatch("module " + a[1] + " is not over " + a[0]);
    return Args(a.begin() + 1, a.end());
}

Report subadjacent_report(const RepStructure& r, const CdHom& t) {
    Report rep("subadjacent", r.name());
    try {
        Subadjacent s = subadjacent(r, t);
        rep.merge(s.report, "");
    } catch (const PreconditionFailed& e) {
        rep.require("pre: O-operator", false, e.what());
    }
    return rep;
}

struct Entry {
    std::string signature;
    std::size_t min_args;
    std::size_t max_args;
    Handler run;
};

const std::map<std::string, Entry>& table() {
    static const std::map<std::string, Entry> t = {
        {"lca", {"A", 1, 1, [](const Workspace& ws, const Args& a) { return check_lca_axioms(*ws.algebra(a[0])); }}},
        {"rep", {"V", 1, 1, [](const Workspace& ws, const Args& a) { return check_rep_axioms(*ws.module(a[0])); }}},
        {"nijenhuis",
         {"A N", 2, 2,
          [](const Workspace& ws, const Args& a) {
              const auto& l = *ws.algebra(a[0]);
              return check_nijenhuis_operator(l, endo_on(ws, a[1], l.rank()));
          }}},
        {"nijstructure",
         {"[A] V N S", 3, 4,
          [](const Workspace& ws, const Args& a0) {
              Args a = drop_algebra(ws, a0, 4);
              const auto& r = *ws.module(a[0]);
              return check_nijenhuis_structure(r, endo_on(ws, a[1], r.algebra().rank()), endo_on(ws, a[2], r.rank()));
          }}},
        {"semidirect-char",
         {"[A] V N S", 3, 4,
          [](const Workspace& ws, const Args& a0) {
              Args a = drop_algebra(ws, a0, 4);
              const auto& r = *ws.module(a[0]);
              return check_semidirect_characterization(r, endo_on(ws, a[1], r.algebra().rank()),
                                                       endo_on(ws, a[2], r.rank()))
                  .combined;
          }}},
        {"lp-pair",
         {"V N S t", 4, 4,
          [](const Workspace& ws, const Args& a) {
              const auto& r = *ws.module(a[0]);
              LpPair p = trivial_pair_deformation(r, endo_on(ws, a[1], r.algebra().rank()), endo_on(ws, a[2], r.rank()),
                                                  as_scalar(ws, a[3]));
              return check_lp_pair(p, r.name());
          }}},
        {"ooperator",
         {"V T", 2, 2, [](const Workspace& ws, const Args& a) { return check_o_operator(*ws.module(a[0]), ws.map(a[1]).hom); }}},
        {"compatible",
         {"V T1 T2", 3, 3,
          [](const Workspace& ws, const Args& a) {
              return check_compatible(*ws.module(a[0]), ws.map(a[1]).hom, ws.map(a[2]).hom);
          }}},
        {"on-structure",
         {"V T N S", 4, 4,
          [](const Workspace& ws, const Args& a) {
              return check_on_structure(*ws.module(a[0]), ws.map(a[1]).hom, ws.map(a[2]).hom, ws.map(a[3]).hom);
          }}},
        {"hierarchy",
         {"V T N S kmax", 5, 5,
          [](const Workspace& ws, const Args& a) {
              return hierarchy(*ws.module(a[0]), ws.map(a[1]).hom, ws.map(a[2]).hom, ws.map(a[3]).hom, as_uint(a[4]))
                  .report;
          }}},
        {"lsa",
         {"V T", 2, 2,
          [](const Workspace& ws, const Args& a) {
              const auto& r = *ws.module(a[0]);
              return check_left_symmetric(induced_lsa(r, ws.map(a[1]).hom), r.module());
          }}},
        {"subadjacent",
         {"V T", 2, 2,
          [](const Workspace& ws, const Args& a) { return subadjacent_report(*ws.module(a[0]), ws.map(a[1]).hom); }}},
        {"skew", {"r", 1, 1, [](const Workspace& ws, const Args& a) { return is_skew(ws.tensor(a[0])); }}},
        {"cybe", {"r", 1, 1, [](const Workspace& ws, const Args& a) { return cybe_check(ws.tensor(a[0])); }}},
        {"cybe-ooperator",
         {"r", 1, 1, [](const Workspace& ws, const Args& a) { return cybe_via_o_operator(ws.tensor(a[0])); }}},
        {"rmatrix-nijenhuis",
         {"r N", 2, 2,
          [](const Workspace& ws, const Args& a) {
              const auto& r = ws.tensor(a[0]);
              return check_rmatrix_nijenhuis(r, endo_on(ws, a[1], r.rank()));
          }}},
        {"r-family",
         {"r N kmax", 3, 3,
          [](const Workspace& ws, const Args& a) {
              const auto& r = ws.tensor(a[0]);
              return check_r_family_compatible(r, endo_on(ws, a[1], r.rank()), as_uint(a[2]));
          }}},
        {"cybe-sum",
         {"r1 r2", 2, 2,
          [](const Workspace& ws, const Args& a) { return cybe_check_combination(ws.tensor(a[0]), ws.tensor(a[1])); }}},
        {"nondegenerate-r",
         {"r", 1, 1, [](const Workspace& ws, const Args& a) { return is_nondegenerate_r(ws.tensor(a[0])); }}},
        {"lambda-constant",
         {"r", 1, 1,
          [](const Workspace& ws, const Args& a) {
              Report rep("lambda-constant", a[0]);
              rep.require("r-sharp independent of lambda", is_lambda_constant(ws.tensor(a[0])));
              return rep;
          }}},
        {"symplectic", {"w", 1, 1, [](const Workspace& ws, const Args& a) { return check_symplectic(ws.form(a[0])); }}},
        {"cocycle", {"w", 1, 1, [](const Workspace& ws, const Args& a) { return check_cocycle(ws.form(a[0])); }}},
        {"sn-structure",
         {"w N", 2, 2,
          [](const Workspace& ws, const Args& a) {
              const auto& w = ws.form(a[0]);
              return check_sn_structure(w, endo_on(ws, a[1], w.rank()));
          }}},
        {"omega-closed",
         {"w N kmax", 3, 3,
          [](const Workspace& ws, const Args& a) {
              const auto& w = ws.form(a[0]);
              return check_omega_Nk_closed(w, endo_on(ws, a[1], w.rank()), as_uint(a[2]));
          }}},
        {"lie", {"g", 1, 1, [](const Workspace& ws, const Args& a) { return check_lie(ws.lie(a[0])); }}},
        {"novikov", {"V", 1, 1, [](const Workspace& ws, const Args& a) { return check_novikov(ws.novikov(a[0])); }}},
        {"gd", {"G", 1, 1, [](const Workspace& ws, const Args& a) { return check_gd(ws.gd(a[0])); }}},
        {"nijenhuis-novikov",
         {"V N", 2, 2,
          [](const Workspace& ws, const Args& a) {
              const auto& v = ws.novikov(a[0]);
              return check_nijenhuis_novikov(v, endo_on(ws, a[1], v.dim()));
          }}},
        {"nijenhuis-lie",
         {"g N", 2, 2,
          [](const Workspace& ws, const Args& a) {
              const auto& g = ws.lie(a[0]);
              return check_nijenhuis_lie(g, endo_on(ws, a[1], g.dim()));
          }}},
        {"nijenhuis-gd",
         {"G N", 2, 2,
          [](const Workspace& ws, const Args& a) {
              const auto& g = ws.gd(a[0]);
              return check_nijenhuis_gd(g, endo_on(ws, a[1], g.novikov.dim()));
          }}},
        {"tdeform",
         {"A N t", 3, 3,
          [](const Workspace& ws, const Args& a) {
              const LcaPtr& l = ws.algebra(a[0]);
              Cochain2 dn = coboundary_1(l, Coefficients::adjoint_of(l), endo_on(ws, a[1], l->rank()));
              Report rep = check_lca_axioms(deform_with_parameter(*l, dn, as_scalar(ws, a[2])));
              rep.check = "tdeform";
              return rep;
          }}},
    };
    return t;
}

OracleSummary run_oracle(const Report& rep, const RunOptions& opts) {
    OracleSummary s;
    OracleOptions o;
    o.count = opts.oracle_points;
    o.seed = opts.seed;
    for (const auto& r : rep.residuals) {
        OracleResult res = evaluation_oracle(r.terms, o);
        ++s.residuals;
        s.points += res.points;
        s.certified = s.certified && res.certified;
        if (res.all_zero != r.value.is_zero()) ++s.disagreements;
    }
    return s;
}

}  // namespace

const std::vector<std::pair<std::string, std::string>>& check_kinds() {
    static const std::vector<std::pair<std::string, std::string>> k = [] {
        std::vector<std::pair<std::string, std::string>> v;
        for (const auto& [name, e] : table()) v.emplace_back(name, e.signature);
        return v;
    }();
    return k;
}

CheckResult run_check(const Workspace& ws, const CheckStmt& stmt, const RunOptions& opts) {
    CheckResult out;
    out.stmt = stmt;
    auto start = std::chrono::steady_clock::now();
    auto it = table().find(stmt.kind);
    std::string subject = stmt.args.empty() ? std::string() : stmt.args.front();
    try {
        if (it == table().end()) throw Error("unknown check kind '" + stmt.kind + "'");
        const Entry& e = it->second;
        if (stmt.args.size() < e.min_args || stmt.args.size() > e.max_args)
            throw Error("check " + stmt.kind + " expects arguments " + e.signature);
        out.report = e.run(ws, stmt.args);
    } catch (const std::exception& ex) {
        out.report = Report(stmt.kind, subject);
        out.report.error = ex.what();
    }
    if (out.report.check.empty()) out.report.check = stmt.kind;
    if (out.report.subject.empty()) out.report.subject = subject;
    if (out.report.error.empty()) {
        auto f = out.report.failures();
        if (!f.empty()) {
            auto w = find_witness(f.front()->value, opts.seed);
            if (w) out.witness = LocatedWitness{f.front()->location, *w};
        }
        if (opts.oracle) out.oracle = run_oracle(out.report, opts);
    }
    if (opts.timing)
        out.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return out;
}

std::vector<CheckResult> run(const Workspace& ws, const RunOptions& opts) {
    std::vector<CheckResult> out;
    for (const auto& c : ws.checks) out.push_back(run_check(ws, c, opts));
    return out;
}

int exit_code(const std::vector<CheckResult>& results) {
    for (const auto& r : results)
        if (r.verdict() != Verdict::Pass) return 1;
    return 0;
}

std::string render_text(const CheckResult& r) {
    const Report& rep = r.report;
    std::ostringstream os;
    os << r.stmt.kind;
    for (const auto& a : r.stmt.args) os << ' ' << a;
    os << ": " << to_string(r.verdict()) << '\n';
    if (!rep.error.empty()) os << "  error: " << rep.error << '\n';
    constexpr std::size_t shown = 20;
    auto f = rep.failures();
    for (std::size_t i = 0; i < f.size() && i < shown; ++i)
        os << "  residual " << f[i]->location << " = " << f[i]->value.str() << '\n';
    if (f.size() > shown) os << "  ... " << f.size() - shown << " more residual(s)\n";
    for (const auto* c : rep.failed_conditions()) {
        os << "  failed: " << c->name;
        if (!c->detail.empty()) os << " (" << c->detail << ')';
        os << '\n';
    }
    for (const auto& n : rep.notes) os << "  note: " << n << '\n';
    if (r.witness) {
        os << "  witness at " << r.witness->location << ":";
        for (const auto& [s, v] : r.witness->witness.point) os << ' ' << s << '=' << render_rational(v);
        os << " -> " << render_rational(r.witness->witness.value) << '\n';
    }
    if (r.oracle) {
        os << "  oracle: " << r.oracle->residuals << " residual(s), " << r.oracle->points << " point(s), "
           << (r.oracle->agree() ? "agrees" : "DISAGREES") << (r.oracle->certified ? ", certified" : ", sampled")
           << '\n';
    }
    if (r.millis) os << "  time: " << *r.millis << " ms\n";
    return os.str();
}

std::string render_json(const CheckResult& r) {
    using nlohmann::ordered_json;
    const Report& rep = r.report;
    ordered_json j;
    j["schema"] = "lck-report/1";
    j["check"] = r.stmt.kind;
    j["args"] = r.stmt.args;
    j["subject"] = rep.subject;
    j["verdict"] = to_string(r.verdict());
    ordered_json res = ordered_json::array();
    for (const auto* f : rep.failures()) res.push_back({{"location", f->location}, {"polynomial", f->value.str()}});
    j["residuals"] = res;
    ordered_json conds = ordered_json::array();
    for (const auto& c : rep.conditions) {
        ordered_json cj{{"name", c.name}, {"ok", c.ok}};
        if (!c.detail.empty()) cj["detail"] = c.detail;
        conds.push_back(cj);
    }
    j["conditions"] = conds;
    j["notes"] = rep.notes;
    if (r.witness) {
        ordered_json pt = ordered_json::object();
        for (const auto& [s, v] : r.witness->witness.point) pt[s] = render_rational(v);
        j["witness"] = {{"location", r.witness->location},
                        {"point", pt},
                        {"value", render_rational(r.witness->witness.value)}};
    } else {
        j["witness"] = nullptr;
    }
    if (r.oracle) {
        j["oracle"] = {{"residuals", r.oracle->residuals},
                       {"points", r.oracle->points},
                       {"agree", r.oracle->agree()},
                       {"disagreements", r.oracle->disagreements},
                       {"certified", r.oracle->certified}};
    } else {
        j["oracle"] = nullptr;
    }
    j["error"] = rep.error.empty() ? ordered_json(nullptr) : ordered_json(rep.error);
    j["millis"] = r.millis ? ordered_json(*r.millis) : ordered_json(nullptr);
    return j.dump();
}

}  // namespace lck::dsl
