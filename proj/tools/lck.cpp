#include <algorithm>
#include <cctype>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lck/dsl/runner.hpp"

using namespace lck;
using namespace lck::dsl;

namespace {

constexpr int kUsageError = 2;

struct ReportFlags {
    bool json = false;
    std::optional<unsigned> oracle_points;
    std::uint64_t seed = 0;
    bool timing = false;

    RunOptions options() const {
        RunOptions o;
        o.oracle = oracle_points.has_value();
        o.oracle_points = oracle_points.value_or(0);
        o.seed = seed;
        o.timing = timing;
        return o;
    }
};

void add_report_flags(CLI::App* app, ReportFlags& f) {
    app->add_flag("--json", f.json, "One JSON object per check");
    app->add_option("--oracle-points", f.oracle_points, "Run the evaluation oracle with N points per symbol (0 = auto)");
    app->add_option("--seed", f.seed, "Seed for witness search and the oracle");
    app->add_flag("--timing", f.timing, "Report wall-clock time per check");
}

int print_results(const std::vector<CheckResult>& results, const ReportFlags& f) {
    for (const auto& r : results) {
        if (f.json)
            std::cout << render_json(r) << '\n';
        else
            std::cout << render_text(r);
    }
    return exit_code(results);
}

std::string fresh_name(const Workspace& ws, const std::string& base) {
    if (!ws.kind_of(base)) return base;
    for (int i = 1;; ++i) {
        std::string n = base + "_" + std::to_string(i);
        if (!ws.kind_of(n)) return n;
    }
}

void add_map(Workspace& ws, MapObject m) {
    std::string n = m.name;
    ws.maps.emplace(n, std::move(m));
    ws.order.emplace_back(ObjectKind::Map, n);
}

int cmd_check(const std::vector<std::string>& args, const std::string& file, const ReportFlags& f) {
    if (file.empty()) {
        if (args.size() != 1) {
            std::cerr << "usage: lck check <file> | lck check <kind> <args...> -f <file>\n";
            return kUsageError;
        }
        Workspace ws = parse_file(args[0]);
        return print_results(run(ws, f.options()), f);
    }
    if (args.empty()) {
        std::cerr << "lck check: missing check kind\n";
        return kUsageError;
    }
    Workspace ws = parse_file(file);
    CheckStmt stmt;
    stmt.kind = args[0];
    stmt.args.assign(args.begin() + 1, args.end());
    for (const auto& a : stmt.args) {
        if (std::isdigit(static_cast<unsigned char>(a[0])) || ws.kind_of(a)) continue;
        if (std::find(ws.scalars.begin(), ws.scalars.end(), a) != ws.scalars.end()) continue;
        std::cerr << "lck check: unknown name '" << a << "'\n";
        return kUsageError;
    }
    return print_results({run_check(ws, stmt, f.options())}, f);
}

int cmd_emit(const std::string& file, const std::string& object) {
    Workspace ws = parse_file(file);
    if (object.empty()) {
        std::cout << emit_workspace(ws);
        return 0;
    }
    if (!ws.kind_of(object)) {
        std::cerr << "lck emit: no object named '" << object << "'\n";
        return kUsageError;
    }
    std::cout << emit_object(ws, object);
    return 0;
}

int cmd_hierarchy(const std::string& file, const std::vector<std::string>& a, unsigned kmax, const ReportFlags& f) {
    if (a.size() != 4) {
        std::cerr << "usage: lck hierarchy -f <file> <module> <T> <N> <S> --kmax K\n";
        return kUsageError;
    }
    Workspace ws = parse_file(file);
    CheckStmt stmt{"hierarchy", {a[0], a[1], a[2], a[3], std::to_string(kmax)}, 0, 0};
    CheckResult res = run_check(ws, stmt, f.options());
    int code = print_results({res}, f);
    if (res.verdict() != Verdict::Pass || f.json) return code;
    const MapObject& t = ws.map(a[1]);
    Hierarchy h = hierarchy(*ws.module(a[0]), t.hom, ws.map(a[2]).hom, ws.map(a[3]).hom, kmax);
    std::vector<std::string> names;
    for (unsigned k = 1; k < h.ops.size(); ++k) {
        MapObject m = t;
        m.name = fresh_name(ws, a[1] + "_" + std::to_string(k));
        m.hom = h.ops[k];
        names.push_back(m.name);
        add_map(ws, std::move(m));
    }
    std::cout << "\n" << emit_objects(ws, names);
    return code;
}

int cmd_lift(const std::string& file, const std::vector<std::string>& a, const ReportFlags& f) {
    if (a.size() != 2) {
        std::cerr << "usage: lck lift -f <file> <gd> <map>\n";
        return kUsageError;
    }
    Workspace ws = parse_file(file);
    const GDBialgebra& g = ws.gd(a[0]);
    const MapObject& n0 = ws.map(a[1]);
    CheckResult base = run_check(ws, CheckStmt{"nijenhuis-gd", {a[0], a[1]}, 0, 0}, f.options());

    std::string qname = fresh_name(ws, "Q_" + g.name);
    LcaStructure q = quadratic_from_gd(g).renamed(qname);
    ws.algebras.emplace(qname, verify(q));
    ws.order.emplace_back(ObjectKind::Algebra, qname);
    CdModule qm = ws.algebra(qname)->module();
    add_map(ws, MapObject{fresh_name(ws, a[1] + "_lift"), qname, qname, qm, qm, lift_hom(n0.hom)});
    std::string lname = ws.order.back().second;
    CheckResult lifted = run_check(ws, CheckStmt{"nijenhuis", {qname, lname}, 0, 0}, f.options());

    int code = print_results({base, lifted}, f);
    if (!f.json) std::cout << "\n" << emit_object(ws, lname);
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verifier for Lie conformal algebra structures"};
    app.require_subcommand(1);

    ReportFlags check_flags;
    std::vector<std::string> check_args;
    std::string check_file;
    auto* check = app.add_subcommand("check", "Run the checks of a file, or one check against a file");
    check->add_option("args", check_args, "<file> or <kind> <args...>")->required();
    check->add_option("-f,--file", check_file, "Workspace file for a single check");
    add_report_flags(check, check_flags);

    std::string emit_file, emit_object_name;
    auto* emit = app.add_subcommand("emit", "Print canonical DSL text");
    emit->add_option("file", emit_file)->required();
    emit->add_option("--object", emit_object_name, "Emit one object and its dependencies");

    ReportFlags hier_flags;
    std::vector<std::string> hier_args;
    std::string hier_file;
    unsigned kmax = 3;
    auto* hier = app.add_subcommand("hierarchy", "Check and print the O-operators N^k T");
    hier->add_option("args", hier_args, "<module> <T> <N> <S>")->required();
    hier->add_option("-f,--file", hier_file)->required();
    hier->add_option("--kmax", kmax, "Largest power of N");
    add_report_flags(hier, hier_flags);

    ReportFlags lift_flags;
    std::vector<std::string> lift_args;
    std::string lift_file;
    auto* lift = app.add_subcommand("lift", "Lift a Nijenhuis operator of a GD bialgebra to its quadratic algebra");
    lift->add_option("args", lift_args, "<gd> <map>")->required();
    lift->add_option("-f,--file", lift_file)->required();
    add_report_flags(lift, lift_flags);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kUsageError;
    }

    try {
        if (*check) return cmd_check(check_args, check_file, check_flags);
        if (*emit) return cmd_emit(emit_file, emit_object_name);
        if (*hier) return cmd_hierarchy(hier_file, hier_args, kmax, hier_flags);
        if (*lift) return cmd_lift(lift_file, lift_args, lift_flags);
    } catch (const ParseError& e) {
        std::cerr << "lck: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::exception& e) {
        std::cerr << "lck: " << e.what() << '\n';
        return kUsageError;
    }
    return kUsageError;
}
