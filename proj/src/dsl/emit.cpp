#include <set>
#include <sstream>

#include "lck/dsl/workspace.hpp"

namespace lck::dsl {
namespace {

// Largest monomial in parameters dividing every term.
Monomial param_content(const Poly& c) {
    std::map<SymbolId, std::uint32_t> low;
    bool first = true;
    for (const auto& [m, q] : c.terms()) {
        std::map<SymbolId, std::uint32_t> here;
        for (const auto& [s, e] : m.factors())
            if (Symbols::kind(s) == SymbolKind::Param) here[s] = e;
        if (first) {
            low = here;
            first = false;
            continue;
        }
        for (auto it = low.begin(); it != low.end();) {
            auto h = here.find(it->first);
            if (h == here.end()) {
                it = low.erase(it);
            } else {
                it->second = std::min(it->second, h->second);
                ++it;
            }
        }
    }
    Monomial g;
    for (const auto& [s, e] : low) g = g * Monomial::of(s, e);
    return g;
}

Poly divide_monomial(const Poly& c, const Monomial& g) {
    Poly out;
    for (const auto& [m, q] : c.terms()) {
        Monomial r;
        for (const auto& [s, e] : m.factors()) {
            std::uint32_t d = e - g.degree(s);
            if (d) r = r * Monomial::of(s, d);
        }
        out += Poly::term(r, q);
    }
    return out;
}

// Coefficient times a generator, or the bare generator for 1 and -1.
std::string scaled(const Poly& c, const std::string& what) {
    if (c == Poly(1)) return what;
    if (c == Poly(-1)) return "-" + what;
    if (c.terms().size() == 1) {
        const auto& [m, q] = *c.terms().begin();
        if (q < 0) return "-" + (-c).str() + "*" + what;
        return c.str() + "*" + what;
    }
    Monomial g = param_content(c);
    if (!g.is_one()) return scaled(Poly::term(g, 1), "(" + divide_monomial(c, g).str() + ")*" + what);
    return "(" + c.str() + ")*" + what;
}

std::string join_terms(const std::vector<std::string>& parts) {
    if (parts.empty()) return "0";
    std::string s = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i) {
        if (parts[i][0] == '-')
            s += " - " + parts[i].substr(1);
        else
            s += " + " + parts[i];
    }
    return s;
}

std::string basis_line(const std::vector<std::string>& basis) {
    std::string s;
    for (const auto& b : basis) s += " " + b;
    return s;
}

void collect(const Poly& p, std::set<std::string>& out) {
    for (SymbolId s : p.symbols())
        if (Symbols::kind(s) == SymbolKind::Param) out.insert(Symbols::name(s));
}

bool same_algebra(const LcaStructure& a, const LcaStructure& b) {
    return a.module() == b.module() && a.table() == b.table();
}

class Emitter {
public:
    explicit Emitter(const Workspace& ws) : ws_(ws) {}

    void object(const std::string& name) {
        if (done_.count(name)) return;
        auto k = ws_.kind_of(name);
        if (!k) throw Error("no object named '" + name + "'");
        switch (*k) {
            case ObjectKind::Algebra: algebra(*ws_.algebra(name)); break;
            case ObjectKind::Module: module(*ws_.module(name)); break;
            case ObjectKind::Map: map(ws_.map(name)); break;
            case ObjectKind::Tensor: tensor(ws_.tensor(name)); break;
            case ObjectKind::Form: form(ws_.form(name)); break;
            case ObjectKind::Lie: lie(ws_.lie(name)); break;
            case ObjectKind::Novikov: novikov(ws_.novikov(name)); break;
            case ObjectKind::Gd: gd(ws_.gd(name)); break;
        }
    }

    void checks() {
        for (const auto& c : ws_.checks) {
            body_ << "check " << c.kind;
            for (const auto& a : c.args) body_ << " " << a;
            body_ << ";\n";
        }
    }

    void declare_all_scalars() {
        for (const auto& s : ws_.scalars) params_.insert(s);
    }

    std::string text() const {
        std::string head;
        std::vector<std::string> ps;
        for (const auto& p : params_)
            if (p[0] != '_') ps.push_back(p);
        if (!ps.empty()) {
            head = "scalars";
            for (const auto& p : ps) head += " " + p;
            head += ";\n\n";
        }
        return head + body_.str();
    }

private:
    bool begin(const std::string& name) {
        if (done_.count(name)) return false;
        done_.insert(name);
        if (!first_) body_ << "\n";
        first_ = false;
        return true;
    }

    // Algebra dependency: a workspace object by name when it matches, else inline.
    void algebra_dep(const LcaStructure& a) {
        if (ws_.algebras.count(a.name()) && same_algebra(*ws_.algebras.at(a.name()), a)) {
            object(a.name());
            return;
        }
        if (ws_.kind_of(a.name())) throw Error("dependency '" + a.name() + "' clashes with a workspace object");
        algebra(a);
    }

    void algebra(const LcaStructure& a) {
        const std::size_t n = a.rank();
        const auto& b = a.module().basis;
        std::ostringstream s;
        s << "algebra " << a.name() << " rank " << n << " basis" << basis_line(b) << " {\n";
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) {
                Element e = a.table().entry(i, j);
                if (e.is_zero()) continue;
                for (const auto& p : e.coeffs()) collect(p, params_);
                s << "  [" << b[i] << "," << b[j] << "] = " << render_element(e, b) << ";\n";
            }
        s << "}\n";
        if (begin(a.name())) body_ << s.str();
    }

    void module(const RepStructure& r) {
        if (done_.count(r.name())) return;
        algebra_dep(r.algebra());
        const auto& ab = r.algebra().module().basis;
        const auto& b = r.module().basis;
        std::ostringstream s;
        s << "module " << r.name() << " over " << r.algebra().name() << " rank " << r.rank() << " basis"
          << basis_line(b) << " {\n";
        for (std::size_t i = 0; i < ab.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) {
                Element e = r.table().entry(i, j);
                if (e.is_zero()) continue;
                for (const auto& p : e.coeffs()) collect(p, params_);
                s << "  " << ab[i] << "." << b[j] << " = " << render_element(e, b) << ";\n";
            }
        s << "}\n";
        if (begin(r.name())) body_ << s.str();
    }

    void endpoint(const std::string& name) {
        if (!ws_.kind_of(name)) throw Error("map endpoint '" + name + "' is not a workspace object");
        object(name);
    }

    void map(const MapObject& m) {
        if (done_.count(m.name)) return;
        endpoint(m.src);
        endpoint(m.dst);
        std::ostringstream s;
        s << "map " << m.name << " : " << m.src << " -> " << m.dst << " {\n";
        for (std::size_t j = 0; j < m.src_module.rank(); ++j) {
            Element e = m.hom.row(j);
            if (e.is_zero()) continue;
            for (const auto& p : e.coeffs()) collect(p, params_);
            s << "  " << m.src_module.basis[j] << " -> " << render_element(e, m.dst_module.basis) << ";\n";
        }
        s << "}\n";
        if (begin(m.name)) body_ << s.str();
    }

    void tensor(const Tensor2& t) {
        if (done_.count(t.name())) return;
        algebra_dep(t.algebra());
        for (std::size_t i = 0; i < t.rank(); ++i)
            for (std::size_t j = 0; j < t.rank(); ++j) collect(t.at(i, j), params_);
        std::string s = "tensor " + t.name() + " in " + t.algebra().name() + " (x) " + t.algebra().name() + " = " +
                        render_tensor(t) + ";\n";
        if (begin(t.name())) body_ << s;
    }

    void form(const TwoForm& w) {
        if (done_.count(w.name())) return;
        algebra_dep(w.algebra());
        const auto& b = w.algebra().module().basis;
        std::ostringstream s;
        s << "form " << w.name() << " on " << w.algebra().name() << " {\n";
        for (std::size_t i = 0; i < b.size(); ++i)
            for (std::size_t j = i; j < b.size(); ++j) {
                if (w.at(i, j).is_zero()) continue;
                collect(w.at(i, j), params_);
                s << "  (" << b[i] << "," << b[j] << ") = " << w.at(i, j).str() << ";\n";
            }
        s << "}\n";
        if (begin(w.name())) body_ << s.str();
    }

    std::string lie_body(const LieAlgebra& g) {
        std::ostringstream s;
        s << " {\n";
        for (std::size_t i = 0; i < g.dim(); ++i)
            for (std::size_t j = i; j < g.dim(); ++j) {
                Element e(g.dim());
                for (std::size_t k = 0; k < g.dim(); ++k) e[k] = g.at(i, j, k);
                if (e.is_zero()) continue;
                for (const auto& p : e.coeffs()) collect(p, params_);
                s << "  [" << g.basis[i] << "," << g.basis[j] << "] = " << render_element(e, g.basis) << ";\n";
            }
        s << "}\n";
        return s.str();
    }

    void lie(const LieAlgebra& g) {
        std::string s = "lie " + g.name + " dim " + std::to_string(g.dim()) + " basis" + basis_line(g.basis) + lie_body(g);
        if (begin(g.name)) body_ << s;
    }

    void novikov(const NovikovAlgebra& v) {
        std::ostringstream s;
        s << "novikov " << v.name << " dim " << v.dim() << " basis" << basis_line(v.basis) << " {\n";
        for (std::size_t i = 0; i < v.dim(); ++i)
            for (std::size_t j = 0; j < v.dim(); ++j) {
                Element e(v.dim());
                for (std::size_t k = 0; k < v.dim(); ++k) e[k] = v.at(i, j, k);
                if (e.is_zero()) continue;
                for (const auto& p : e.coeffs()) collect(p, params_);
                s << "  " << v.basis[i] << " * " << v.basis[j] << " = " << render_element(e, v.basis) << ";\n";
            }
        s << "}\n";
        if (begin(v.name)) body_ << s.str();
    }

    void gd(const GDBialgebra& g) {
        if (done_.count(g.name)) return;
        if (ws_.novikovs.count(g.novikov.name) && ws_.novikovs.at(g.novikov.name) == g.novikov)
            object(g.novikov.name);
        else
            novikov(g.novikov);
        std::string s = "gd " + g.name + " on " + g.novikov.name + lie_body(g.lie);
        if (begin(g.name)) body_ << s;
    }

    const Workspace& ws_;
    std::set<std::string> done_;
    std::set<std::string> params_;
    std::ostringstream body_;
    bool first_ = true;
};

}  // namespace

std::string render_element(const Element& e, const std::vector<std::string>& basis) {
    std::vector<std::string> parts;
    for (std::size_t i = 0; i < e.rank(); ++i)
        if (!e[i].is_zero()) parts.push_back(scaled(e[i], basis[i]));
    return join_terms(parts);
}

std::string render_tensor(const Tensor2& t) {
    const auto& b = t.algebra().module().basis;
    std::vector<std::string> parts;
    for (std::size_t i = 0; i < t.rank(); ++i)
        for (std::size_t j = 0; j < t.rank(); ++j)
            if (!t.at(i, j).is_zero()) parts.push_back(scaled(t.at(i, j), b[i] + " (x) " + b[j]));
    return join_terms(parts);
}

std::string emit_object(const Workspace& ws, const std::string& name) {
    Emitter e(ws);
    e.object(name);
    return e.text();
}

std::string emit_objects(const Workspace& ws, const std::vector<std::string>& names) {
    Emitter e(ws);
    for (const auto& n : names) e.object(n);
    return e.text();
}

std::string emit_workspace(const Workspace& ws) {
    Emitter e(ws);
    e.declare_all_scalars();
    for (const auto& [k, n] : ws.order) e.object(n);
    std::string s = e.text();
    if (!ws.checks.empty()) {
        Emitter c(ws);
        c.checks();
        s += "\n" + c.text();
    }
    return s;
}

bool same_object(const Workspace& a, const std::string& na, const Workspace& b, const std::string& nb) {
    auto ka = a.kind_of(na), kb = b.kind_of(nb);
    if (!ka || !kb || *ka != *kb) return false;
    switch (*ka) {
        case ObjectKind::Algebra: {
            const auto &x = *a.algebra(na), &y = *b.algebra(nb);
            return x.module().basis == y.module().basis && x.table() == y.table();
        }
        case ObjectKind::Module: {
            const auto &x = *a.module(na), &y = *b.module(nb);
            return x.module().basis == y.module().basis && x.table() == y.table() &&
                   x.algebra().table() == y.algebra().table();
        }
        case ObjectKind::Map: {
            const auto &x = a.map(na), &y = b.map(nb);
            return x.src_module.basis == y.src_module.basis && x.dst_module.basis == y.dst_module.basis &&
                   x.hom == y.hom;
        }
        case ObjectKind::Tensor: {
            const auto &x = a.tensor(na), &y = b.tensor(nb);
            return x == y && x.algebra().table() == y.algebra().table();
        }
        case ObjectKind::Form: {
            const auto &x = a.form(na), &y = b.form(nb);
            return x == y && x.algebra().table() == y.algebra().table();
        }
        case ObjectKind::Lie: {
            const auto &x = a.lie(na), &y = b.lie(nb);
            return x.basis == y.basis && x.c == y.c;
        }
        case ObjectKind::Novikov: {
            const auto &x = a.novikov(na), &y = b.novikov(nb);
            return x.basis == y.basis && x.m == y.m;
        }
        case ObjectKind::Gd: {
            const auto &x = a.gd(na), &y = b.gd(nb);
            return x.novikov.basis == y.novikov.basis && x.novikov.m == y.novikov.m && x.lie.c == y.lie.c;
        }
    }
    return false;
}

}  // namespace lck::dsl
