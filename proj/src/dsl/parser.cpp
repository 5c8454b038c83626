#include <algorithm>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#include "lck/dsl/workspace.hpp"

namespace lck::dsl {

const char* to_string(ObjectKind k) {
    switch (k) {
        case ObjectKind::Algebra: return "algebra";
        case ObjectKind::Module: return "module";
        case ObjectKind::Map: return "map";
        case ObjectKind::Tensor: return "tensor";
        case ObjectKind::Form: return "form";
        case ObjectKind::Lie: return "lie";
        case ObjectKind::Novikov: return "novikov";
        case ObjectKind::Gd: return "gd";
    }
    return "?";
}

std::optional<ObjectKind> Workspace::kind_of(const std::string& name) const {
    for (const auto& [k, n] : order)
        if (n == name) return k;
    return std::nullopt;
}

std::optional<CdModule> Workspace::carrier(const std::string& name) const {
    auto k = kind_of(name);
    if (!k) return std::nullopt;
    switch (*k) {
        case ObjectKind::Algebra: return algebras.at(name)->module();
        case ObjectKind::Module: return modules.at(name)->module();
        case ObjectKind::Lie: return CdModule{name, lies.at(name).basis};
        case ObjectKind::Novikov: return CdModule{name, novikovs.at(name).basis};
        case ObjectKind::Gd: return CdModule{name, gds.at(name).novikov.basis};
        default: return std::nullopt;
    }
}

namespace {

template <class M>
const typename M::mapped_type& lookup(const M& m, const std::string& name, const char* what) {
    auto it = m.find(name);
    if (it == m.end()) throw Error(std::string("no ") + what + " named '" + name + "'");
    return it->second;
}

}  // namespace

const LcaPtr& Workspace::algebra(const std::string& n) const { return lookup(algebras, n, "algebra"); }
const RepPtr& Workspace::module(const std::string& n) const { return lookup(modules, n, "module"); }
const MapObject& Workspace::map(const std::string& n) const { return lookup(maps, n, "map"); }
const Tensor2& Workspace::tensor(const std::string& n) const { return lookup(tensors, n, "tensor"); }
const TwoForm& Workspace::form(const std::string& n) const { return lookup(forms, n, "form"); }
const LieAlgebra& Workspace::lie(const std::string& n) const { return lookup(lies, n, "lie algebra"); }
const NovikovAlgebra& Workspace::novikov(const std::string& n) const { return lookup(novikovs, n, "novikov algebra"); }
const GDBialgebra& Workspace::gd(const std::string& n) const { return lookup(gds, n, "gd bialgebra"); }

namespace {

struct Value {
    enum Kind { Scalar, Elem, Tens } kind = Scalar;
    Poly s;
    Element e;
    std::vector<Poly> t;  // n x n

    bool is_zero_scalar() const { return kind == Scalar && s.is_zero(); }
};

struct ExprCtx {
    std::string where;
    std::vector<std::string> reserved;  // permitted reserved tokens
    const std::vector<std::string>* basis = nullptr;
    bool tensors = false;
};

LcaPtr maybe_verified(const LcaStructure& l) {
    if (check_lca_axioms(l).passed()) return verify(l);
    return std::make_shared<LcaStructure>(l);
}

RepPtr maybe_verified(const RepStructure& r) {
    if (r.algebra().verified() && check_rep_axioms(r).passed()) return verify(r);
    return std::make_shared<RepStructure>(r);
}

class Parser {
public:
    explicit Parser(const std::string& src) : toks_(lex(src)) {}

    Workspace run() {
        while (peek().kind != Tok::End) statement();
        resolve_checks();
        return std::move(ws_);
    }

private:
    // ---- token helpers ----
    const Token& peek(std::size_t k = 0) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }
    Token next() {
        Token t = peek();
        if (pos_ < toks_.size() - 1) ++pos_;
        return t;
    }
    bool is_punct(const std::string& p, std::size_t k = 0) const {
        return peek(k).kind == Tok::Punct && peek(k).text == p;
    }
    bool is_word(const std::string& w, std::size_t k = 0) const { return peek(k).kind == Tok::Ident && peek(k).text == w; }
    bool accept(const std::string& p) {
        if (!is_punct(p)) return false;
        next();
        return true;
    }
    [[noreturn]] void fail(const Token& t, const std::string& msg, std::vector<std::string> expected = {}) const {
        throw ParseError(t.line, t.column, msg, std::move(expected));
    }
    static std::string describe(const Token& t) {
        if (t.kind == Tok::End) return "end of input";
        return "'" + t.text + "'";
    }
    void expect(const std::string& p) {
        if (!accept(p)) fail(peek(), "unexpected " + describe(peek()), {"'" + p + "'"});
    }
    void expect_word(const std::string& w) {
        if (!is_word(w)) fail(peek(), "unexpected " + describe(peek()), {"'" + w + "'"});
        next();
    }
    Token ident(const std::string& what) {
        if (peek().kind != Tok::Ident) fail(peek(), "unexpected " + describe(peek()), {what});
        return next();
    }
    long integer(const std::string& what) {
        if (peek().kind != Tok::Int) fail(peek(), "unexpected " + describe(peek()), {what});
        Token t = next();
        try {
            return std::stol(t.text);
        } catch (...) {
            fail(t, "integer literal out of range");
        }
    }

    // ---- names ----
    void check_new_name(const Token& t) {
        if (is_reserved_name(t.text)) fail(t, "'" + t.text + "' is a reserved name");
        if (std::find(ws_.scalars.begin(), ws_.scalars.end(), t.text) != ws_.scalars.end())
            fail(t, "'" + t.text + "' is already declared as a scalar");
        if (ws_.kind_of(t.text)) fail(t, "'" + t.text + "' is already declared");
    }

    std::vector<std::string> basis_list(std::size_t expected_count, const Token& where) {
        std::vector<std::string> b;
        while (peek().kind == Tok::Ident) {
            Token t = next();
            if (is_reserved_name(t.text)) fail(t, "'" + t.text + "' is a reserved name");
            if (std::find(ws_.scalars.begin(), ws_.scalars.end(), t.text) != ws_.scalars.end())
                fail(t, "basis name '" + t.text + "' clashes with a scalar");
            if (std::find(b.begin(), b.end(), t.text) != b.end()) fail(t, "duplicate basis name '" + t.text + "'");
            b.push_back(t.text);
        }
        if (b.size() != expected_count)
            fail(where, "declared size " + std::to_string(expected_count) + " but " + std::to_string(b.size()) +
                            " basis names given");
        if (b.empty()) fail(where, "size must be at least 1");
        return b;
    }

    std::size_t basis_index(const Token& t, const std::vector<std::string>& basis, const std::string& owner) {
        auto it = std::find(basis.begin(), basis.end(), t.text);
        if (it == basis.end()) fail(t, "'" + t.text + "' is not a generator of " + owner);
        return static_cast<std::size_t>(it - basis.begin());
    }

    void add(ObjectKind k, const std::string& name) { ws_.order.emplace_back(k, name); }

    // ---- expressions ----
    Value expr(const ExprCtx& c) {
        Value v = tprod(c);
        while (is_punct("+") || is_punct("-")) {
            Token op = next();
            Value r = tprod(c);
            v = combine(op, v, r, op.text == "+");
        }
        return v;
    }

    Value tprod(const ExprCtx& c) {
        Value v = term(c);
        if (is_punct("(") && is_word("x", 1) && is_punct(")", 2)) {
            Token op = peek();
            if (!c.tensors) fail(op, "tensor product not permitted in " + c.where);
            next();
            next();
            next();
            Value r = term(c);
            if (v.kind != Value::Elem || r.kind != Value::Elem) fail(op, "both factors of (x) must be elements");
            Value t;
            t.kind = Value::Tens;
            const std::size_t n = v.e.rank();
            t.t.resize(n * n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    if (!v.e[i].is_zero() && !r.e[j].is_zero()) t.t[i * n + j] = v.e[i] * r.e[j];
            return t;
        }
        return v;
    }

    Value term(const ExprCtx& c) {
        Value v = unary(c);
        while (is_punct("*") || is_punct("/")) {
            Token op = next();
            Value r = unary(c);
            if (op.text == "*")
                v = multiply(op, v, r);
            else {
                if (r.kind != Value::Scalar || !r.s.is_constant() || r.s.is_zero())
                    fail(op, "division only by a nonzero rational constant");
                Value q;
                q.kind = Value::Scalar;
                q.s = Poly(Rational(1) / r.s.constant_term());
                v = multiply(op, v, q);
            }
        }
        return v;
    }

    Value unary(const ExprCtx& c) {
        if (is_punct("-")) {
            Token op = next();
            Value v = unary(c);
            Value m;
            m.kind = Value::Scalar;
            m.s = Poly(-1);
            return multiply(op, m, v);
        }
        return power(c);
    }

    Value power(const ExprCtx& c) {
        Value v = primary(c);
        if (is_punct("^")) {
            Token op = next();
            long e = integer("exponent");
            if (v.kind != Value::Scalar) fail(op, "only scalars can be raised to a power");
            if (e < 0) fail(op, "negative exponent");
            if (static_cast<unsigned long>(e) > max_degree())
                fail(op, "exponent " + std::to_string(e) + " exceeds cap " + std::to_string(max_degree()));
            try {
                v.s = v.s.pow(static_cast<unsigned>(e));
            } catch (const ExponentOverflow& ex) {
                fail(op, ex.what());
            }
        }
        return v;
    }

    Value primary(const ExprCtx& c) {
        const Token& t = peek();
        if (t.kind == Tok::Int) {
            next();
            Value v;
            v.s = Poly(Rational(mpz_class(t.text)));
            return v;
        }
        if (accept("(")) {
            Value v = expr(c);
            expect(")");
            return v;
        }
        if (t.kind == Tok::Ident) {
            Token id = next();
            if (c.basis) {
                auto it = std::find(c.basis->begin(), c.basis->end(), id.text);
                if (it != c.basis->end()) {
                    Value v;
                    v.kind = Value::Elem;
                    v.e = Element::basis(c.basis->size(), static_cast<std::size_t>(it - c.basis->begin()));
                    return v;
                }
            }
            if (is_reserved_name(id.text)) {
                if (std::find(c.reserved.begin(), c.reserved.end(), id.text) == c.reserved.end())
                    fail(id, id.text + " not permitted in " + c.where);
                Value v;
                v.s = Poly::var(id.text);
                return v;
            }
            if (std::find(ws_.scalars.begin(), ws_.scalars.end(), id.text) != ws_.scalars.end()) {
                Value v;
                v.s = Poly::var(id.text);
                return v;
            }
            fail(id, "unknown identifier '" + id.text + "' in " + c.where);
        }
        fail(t, "unexpected " + describe(t), {"number", "identifier", "'('"});
    }

    Value combine(const Token& op, Value a, const Value& b, bool plus) {
        if (a.is_zero_scalar() && b.kind != Value::Scalar) {
            Value z = b;
            if (!plus) return negate(z);
            return z;
        }
        if (b.is_zero_scalar()) return a;
        if (a.kind != b.kind) fail(op, "cannot add values of different kinds (scalar, element, tensor)");
        switch (a.kind) {
            case Value::Scalar: a.s = plus ? a.s + b.s : a.s - b.s; break;
            case Value::Elem: a.e = plus ? a.e + b.e : a.e - b.e; break;
            case Value::Tens:
                for (std::size_t i = 0; i < a.t.size(); ++i) a.t[i] = plus ? a.t[i] + b.t[i] : a.t[i] - b.t[i];
                break;
        }
        return a;
    }

    static Value negate(Value v) {
        v.s = -v.s;
        if (v.kind == Value::Elem) v.e = -v.e;
        for (auto& p : v.t) p = -p;
        return v;
    }

    Value multiply(const Token& op, const Value& a, const Value& b) {
        if (a.kind == Value::Scalar && b.kind == Value::Scalar) {
            Value v;
            v.s = a.s * b.s;
            return v;
        }
        if (a.kind != Value::Scalar && b.kind != Value::Scalar) fail(op, "cannot multiply two non-scalar values");
        const Value& s = a.kind == Value::Scalar ? a : b;
        Value v = a.kind == Value::Scalar ? b : a;
        if (v.kind == Value::Elem) v.e = s.s * v.e;
        for (auto& p : v.t) p = s.s * p;
        return v;
    }

    Element as_element(const Token& at, const Value& v, std::size_t rank) {
        if (v.is_zero_scalar()) return Element(rank);
        if (v.kind != Value::Elem) fail(at, "expected an element-valued expression");
        return v.e;
    }

    Poly as_scalar(const Token& at, const Value& v) {
        if (v.kind != Value::Scalar) fail(at, "expected a scalar expression");
        return v.s;
    }

    // ---- statements ----
    void statement() {
        Token kw = ident("declaration keyword");
        const std::string& k = kw.text;
        if (k == "scalars") return scalars();
        if (k == "algebra") return algebra();
        if (k == "module") return module();
        if (k == "map") return map();
        if (k == "tensor") return tensor();
        if (k == "form") return form();
        if (k == "lie") return lie();
        if (k == "novikov") return novikov();
        if (k == "gd") return gd();
        if (k == "check") return check(kw);
        fail(kw, "unknown declaration '" + k + "'",
             {"scalars", "algebra", "module", "map", "tensor", "form", "lie", "novikov", "gd", "check"});
    }

    void scalars() {
        do {
            Token t = ident("scalar name");
            check_new_name(t);
            try {
                Symbols::intern(t.text, SymbolKind::Param);
            } catch (const Error& e) {
                fail(t, e.what());
            }
            ws_.scalars.push_back(t.text);
            accept(",");
        } while (peek().kind == Tok::Ident);
        expect(";");
    }

    template <class F>
    auto construct(const Token& at, F&& f) -> decltype(f()) {
        try {
            return f();
        } catch (const ParseError&) {
            throw;
        } catch (const Error& e) {
            fail(at, std::string("construction failed: ") + e.what());
        }
    }

    void algebra() {
        Token name = ident("algebra name");
        check_new_name(name);
        if (accept("=")) {
            Token ctor = ident("constructor");
            auto args = ctor_args();
            expect(";");
            LcaStructure l = construct(ctor, [&] { return algebra_ctor(ctor, args); }).renamed(name.text);
            ws_.algebras.emplace(name.text, maybe_verified(l));
            add(ObjectKind::Algebra, name.text);
            return;
        }
        expect_word("rank");
        Token rk = peek();
        long n = integer("rank");
        expect_word("basis");
        auto basis = basis_list(static_cast<std::size_t>(n), rk);
        expect("{");
        ExprCtx c{"a bracket table", {"D", "L"}, &basis, false};
        std::map<std::pair<std::size_t, std::size_t>, Element> entries;
        while (!accept("}")) {
            Token lb = peek();
            expect("[");
            std::size_t i = basis_index(ident("generator"), basis, name.text);
            expect(",");
            std::size_t j = basis_index(ident("generator"), basis, name.text);
            expect("]");
            expect("=");
            Token at = peek();
            Element e = as_element(at, expr(c), basis.size());
            expect(";");
            if (!entries.emplace(std::make_pair(i, j), e).second) fail(lb, "duplicate entry");
        }
        LcaStructure l = construct(name, [&] { return lca_from_entries(CdModule{name.text, basis}, entries); });
        ws_.algebras.emplace(name.text, maybe_verified(l));
        add(ObjectKind::Algebra, name.text);
    }

    void module() {
        Token name = ident("module name");
        check_new_name(name);
        if (accept("=")) {
            Token ctor = ident("constructor");
            auto args = ctor_args();
            expect(";");
            RepStructure r = construct(ctor, [&] { return module_ctor(ctor, args); }).renamed(name.text);
            ws_.modules.emplace(name.text, maybe_verified(r));
            add(ObjectKind::Module, name.text);
            return;
        }
        expect_word("over");
        Token an = ident("algebra name");
        if (!ws_.algebras.count(an.text)) fail(an, "no algebra named '" + an.text + "'");
        const LcaPtr& alg = ws_.algebras.at(an.text);
        expect_word("rank");
        Token rk = peek();
        long m = integer("rank");
        expect_word("basis");
        auto basis = basis_list(static_cast<std::size_t>(m), rk);
        expect("{");
        ExprCtx c{"a module action table", {"D", "L"}, &basis, false};
        SesquiTable t(alg->rank(), basis.size(), basis.size());
        std::set<std::pair<std::size_t, std::size_t>> seen;
        while (!accept("}")) {
            Token at = peek();
            std::size_t i = basis_index(ident("algebra generator"), alg->module().basis, an.text);
            expect(".");
            std::size_t j = basis_index(ident("module generator"), basis, name.text);
            expect("=");
            Token et = peek();
            Element e = as_element(et, expr(c), basis.size());
            expect(";");
            if (!seen.insert({i, j}).second) fail(at, "duplicate entry");
            t.set_entry(i, j, e);
        }
        RepStructure r = construct(name, [&] { return RepStructure(alg, CdModule{name.text, basis}, t); });
        ws_.modules.emplace(name.text, maybe_verified(r));
        add(ObjectKind::Module, name.text);
    }

    CdModule endpoint(const Token& t) {
        auto m = ws_.carrier(t.text);
        if (!m) fail(t, "no algebra or module named '" + t.text + "'");
        return *m;
    }

    void map() {
        Token name = ident("map name");
        check_new_name(name);
        if (accept("=")) {
            Token ctor = ident("constructor");
            auto args = ctor_args();
            expect(";");
            MapObject m = construct(ctor, [&] { return map_ctor(ctor, args); });
            m.name = name.text;
            ws_.maps.emplace(name.text, std::move(m));
            add(ObjectKind::Map, name.text);
            return;
        }
        expect(":");
        Token src = ident("source");
        expect("->");
        Token dst = ident("target");
        CdModule sm = endpoint(src), dm = endpoint(dst);
        expect("{");
        ExprCtx c{"a map", {"D"}, &dm.basis, false};
        CdHom h(sm.rank(), dm.rank());
        std::set<std::size_t> seen;
        while (!accept("}")) {
            Token at = peek();
            std::size_t j = basis_index(ident("source generator"), sm.basis, src.text);
            expect("->");
            Token et = peek();
            Element e = as_element(et, expr(c), dm.rank());
            expect(";");
            if (!seen.insert(j).second) fail(at, "duplicate entry");
            for (std::size_t k = 0; k < dm.rank(); ++k) h.at(j, k) = e[k];
        }
        ws_.maps.emplace(name.text, MapObject{name.text, src.text, dst.text, sm, dm, h});
        add(ObjectKind::Map, name.text);
    }

    void tensor() {
        Token name = ident("tensor name");
        check_new_name(name);
        if (accept("=")) {
            Token ctor = ident("constructor");
            auto args = ctor_args();
            expect(";");
            Tensor2 t = construct(ctor, [&] { return tensor_ctor(ctor, args); });
            t.set_name(name.text);
            ws_.tensors.emplace(name.text, std::move(t));
            add(ObjectKind::Tensor, name.text);
            return;
        }
        expect_word("in");
        Token a1 = ident("algebra name");
        expect("(");
        expect_word("x");
        expect(")");
        Token a2 = ident("algebra name");
        if (!ws_.algebras.count(a1.text)) fail(a1, "no algebra named '" + a1.text + "'");
        if (a1.text != a2.text) fail(a2, "both tensor factors must be the same algebra");
        const LcaPtr& alg = ws_.algebras.at(a1.text);
        expect("=");
        Token at = peek();
        ExprCtx c{"a tensor", {"D1", "D2"}, &alg->module().basis, true};
        Value v = expr(c);
        expect(";");
        Tensor2 t(alg, name.text);
        if (!v.is_zero_scalar()) {
            if (v.kind != Value::Tens) fail(at, "expected a tensor-valued expression");
            for (std::size_t i = 0; i < alg->rank(); ++i)
                for (std::size_t j = 0; j < alg->rank(); ++j) t.at(i, j) = v.t[i * alg->rank() + j];
        }
        ws_.tensors.emplace(name.text, std::move(t));
        add(ObjectKind::Tensor, name.text);
    }

    void form() {
        Token name = ident("form name");
        check_new_name(name);
        if (accept("=")) {
            Token ctor = ident("constructor");
            auto args = ctor_args();
            expect(";");
            TwoForm f = construct(ctor, [&] { return form_ctor(ctor, args); });
            f.set_name(name.text);
            ws_.forms.emplace(name.text, std::move(f));
            add(ObjectKind::Form, name.text);
            return;
        }
        expect_word("on");
        Token an = ident("algebra name");
        if (!ws_.algebras.count(an.text)) fail(an, "no algebra named '" + an.text + "'");
        const LcaPtr& alg = ws_.algebras.at(an.text);
        expect("{");
        ExprCtx c{"a 2-form", {"L"}, nullptr, false};
        std::map<std::pair<std::size_t, std::size_t>, Poly> entries;
        while (!accept("}")) {
            Token at = peek();
            expect("(");
            std::size_t i = basis_index(ident("generator"), alg->module().basis, an.text);
            expect(",");
            std::size_t j = basis_index(ident("generator"), alg->module().basis, an.text);
            expect(")");
            expect("=");
            Token et = peek();
            Poly p = as_scalar(et, expr(c));
            expect(";");
            if (!entries.emplace(std::make_pair(i, j), p).second) fail(at, "duplicate entry");
        }
        TwoForm f = construct(name, [&] { return form_from_entries(alg, entries, name.text); });
        ws_.forms.emplace(name.text, std::move(f));
        add(ObjectKind::Form, name.text);
    }

    // Antisymmetric bilinear table over scalars; missing [j,i] entries are synthesized.
    std::vector<Poly> lie_table(const std::vector<std::string>& basis, const std::string& owner) {
        const std::size_t d = basis.size();
        ExprCtx c{"a Lie bracket table", {}, &basis, false};
        std::map<std::pair<std::size_t, std::size_t>, std::pair<Element, Token>> entries;
        expect("{");
        while (!accept("}")) {
            Token at = peek();
            expect("[");
            std::size_t i = basis_index(ident("generator"), basis, owner);
            expect(",");
            std::size_t j = basis_index(ident("generator"), basis, owner);
            expect("]");
            expect("=");
            Token et = peek();
            Element e = as_element(et, expr(c), d);
            expect(";");
            if (!entries.emplace(std::make_pair(i, j), std::make_pair(e, at)).second) fail(at, "duplicate entry");
        }
        std::vector<Poly> t(d * d * d);
        for (const auto& [ij, et] : entries) {
            auto [i, j] = ij;
            for (std::size_t k = 0; k < d; ++k) t[(i * d + j) * d + k] = et.first[k];
            if (i == j) continue;
            auto it = entries.find({j, i});
            if (it == entries.end()) {
                for (std::size_t k = 0; k < d; ++k) t[(j * d + i) * d + k] = -et.first[k];
            } else if (!(it->second.first == -et.first)) {
                fail(it->second.second, "entry disagrees with antisymmetry");
            }
        }
        return t;
    }

    void lie() {
        Token name = ident("lie algebra name");
        check_new_name(name);
        expect_word("dim");
        Token dt = peek();
        long d = integer("dimension");
        expect_word("basis");
        auto basis = basis_list(static_cast<std::size_t>(d), dt);
        LieAlgebra g(name.text, basis);
        g.c = lie_table(basis, name.text);
        ws_.lies.emplace(name.text, std::move(g));
        add(ObjectKind::Lie, name.text);
    }

    void novikov() {
        Token name = ident("novikov algebra name");
        check_new_name(name);
        expect_word("dim");
        Token dt = peek();
        long d = integer("dimension");
        expect_word("basis");
        auto basis = basis_list(static_cast<std::size_t>(d), dt);
        NovikovAlgebra v(name.text, basis);
        ExprCtx c{"a Novikov table", {}, &basis, false};
        std::set<std::pair<std::size_t, std::size_t>> seen;
        expect("{");
        while (!accept("}")) {
            Token at = peek();
            std::size_t i = basis_index(ident("generator"), basis, name.text);
            expect("*");
            std::size_t j = basis_index(ident("generator"), basis, name.text);
            expect("=");
            Token et = peek();
            Element e = as_element(et, expr(c), basis.size());
            expect(";");
            if (!seen.insert({i, j}).second) fail(at, "duplicate entry");
            for (std::size_t k = 0; k < basis.size(); ++k) v.at(i, j, k) = e[k];
        }
        ws_.novikovs.emplace(name.text, std::move(v));
        add(ObjectKind::Novikov, name.text);
    }

    void gd() {
        Token name = ident("gd name");
        check_new_name(name);
        expect_word("on");
        Token vn = ident("novikov algebra name");
        if (!ws_.novikovs.count(vn.text)) fail(vn, "no novikov algebra named '" + vn.text + "'");
        const NovikovAlgebra& v = ws_.novikovs.at(vn.text);
        LieAlgebra g(name.text, v.basis);
        g.c = lie_table(v.basis, name.text);
        ws_.gds.emplace(name.text, GDBialgebra{name.text, v, std::move(g)});
        add(ObjectKind::Gd, name.text);
    }

    void check(const Token& kw) {
        CheckStmt c;
        c.line = kw.line;
        c.column = kw.column;
        c.kind = ident("check kind").text;
        while (is_punct("-") && peek(1).kind == Tok::Ident) {
            next();
            c.kind += "-" + next().text;
        }
        while (!accept(";")) {
            const Token& t = peek();
            if (t.kind != Tok::Ident && t.kind != Tok::Int) fail(t, "unexpected " + describe(t), {"argument", "';'"});
            c.args.push_back(next().text);
            accept(",");
        }
        ws_.checks.push_back(std::move(c));
    }

    void resolve_checks() {
        for (const auto& c : ws_.checks)
            for (const auto& a : c.args) {
                if (std::isdigit(static_cast<unsigned char>(a[0]))) continue;
                if (ws_.kind_of(a)) continue;
                if (std::find(ws_.scalars.begin(), ws_.scalars.end(), a) != ws_.scalars.end()) continue;
                throw ParseError(c.line, c.column, "check '" + c.kind + "' refers to unknown name '" + a + "'");
            }
    }

    // ---- constructors ----
    std::vector<Token> ctor_args() {
        std::vector<Token> args;
        expect("(");
        if (accept(")")) return args;
        do {
            if (peek().kind != Tok::Ident && peek().kind != Tok::Int)
                fail(peek(), "unexpected " + describe(peek()), {"name", "integer"});
            args.push_back(next());
        } while (accept(","));
        expect(")");
        return args;
    }

    void arity(const Token& ctor, const std::vector<Token>& args, std::size_t n) {
        if (args.size() != n)
            fail(ctor, ctor.text + " takes " + std::to_string(n) + " argument(s), " + std::to_string(args.size()) + " given");
    }

    const LcaPtr& get_algebra(const Token& t) {
        if (!ws_.algebras.count(t.text)) fail(t, "no algebra named '" + t.text + "'");
        return ws_.algebras.at(t.text);
    }
    const RepPtr& get_module(const Token& t) {
        if (!ws_.modules.count(t.text)) fail(t, "no module named '" + t.text + "'");
        return ws_.modules.at(t.text);
    }
    const MapObject& get_map(const Token& t) {
        if (!ws_.maps.count(t.text)) fail(t, "no map named '" + t.text + "'");
        return ws_.maps.at(t.text);
    }
    const Tensor2& get_tensor(const Token& t) {
        if (!ws_.tensors.count(t.text)) fail(t, "no tensor named '" + t.text + "'");
        return ws_.tensors.at(t.text);
    }
    const TwoForm& get_form(const Token& t) {
        if (!ws_.forms.count(t.text)) fail(t, "no form named '" + t.text + "'");
        return ws_.forms.at(t.text);
    }
    unsigned get_uint(const Token& t) {
        if (t.kind != Tok::Int) fail(t, "expected an integer");
        return static_cast<unsigned>(std::stoul(t.text));
    }
    SymbolId get_scalar(const Token& t) {
        if (std::find(ws_.scalars.begin(), ws_.scalars.end(), t.text) == ws_.scalars.end())
            fail(t, "'" + t.text + "' is not a declared scalar");
        return *Symbols::find(t.text);
    }
    CdModule get_carrier(const Token& t) {
        auto m = ws_.carrier(t.text);
        if (!m) fail(t, "no algebra or module named '" + t.text + "'");
        return *m;
    }

    LcaStructure algebra_ctor(const Token& ctor, const std::vector<Token>& a) {
        const std::string& k = ctor.text;
        if (k == "semidirect") {
            if (a.size() == 2) {
                const RepPtr& r = get_module(a[1]);
                if (r->algebra().name() != a[0].text) fail(a[1], "module is not over " + a[0].text);
                return semidirect(*r);
            }
            arity(ctor, a, 1);
            return semidirect(*get_module(a[0]));
        }
        if (k == "deformed") {
            arity(ctor, a, 2);
            return deformed_bracket(*get_algebra(a[0]), get_map(a[1]).hom);
        }
        if (k == "tdeform") {
            arity(ctor, a, 3);
            const LcaPtr& l = get_algebra(a[0]);
            Cochain2 dn = coboundary_1(l, Coefficients::adjoint_of(l), get_map(a[1]).hom);
            return deform_with_parameter(*l, dn, get_scalar(a[2]));
        }
        if (k == "quadratic") {
            arity(ctor, a, 1);
            if (!ws_.gds.count(a[0].text)) fail(a[0], "no gd bialgebra named '" + a[0].text + "'");
            return quadratic_from_gd(ws_.gds.at(a[0].text));
        }
        if (k == "current") {
            arity(ctor, a, 1);
            if (!ws_.lies.count(a[0].text)) fail(a[0], "no lie algebra named '" + a[0].text + "'");
            return current(ws_.lies.at(a[0].text));
        }
        if (k == "subadjacent") {
            arity(ctor, a, 2);
            return *subadjacent(*get_module(a[0]), get_map(a[1]).hom).algebra;
        }
        fail(ctor, "unknown algebra constructor '" + k + "'",
             {"semidirect", "deformed", "tdeform", "quadratic", "current", "subadjacent"});
    }

    RepStructure module_ctor(const Token& ctor, const std::vector<Token>& a) {
        const std::string& k = ctor.text;
        if (k == "adjoint") {
            arity(ctor, a, 1);
            return adjoint(get_algebra(a[0]));
        }
        if (k == "coadjoint") {
            arity(ctor, a, 1);
            return coadjoint(*get_module(a[0]));
        }
        if (k == "trivial") {
            arity(ctor, a, 2);
            return trivial(get_algebra(a[0]), get_uint(a[1]));
        }
        if (k == "deformed") {
            arity(ctor, a, 3);
            return *deformed_rep(*get_module(a[0]), get_map(a[1]).hom, get_map(a[2]).hom);
        }
        fail(ctor, "unknown module constructor '" + k + "'", {"adjoint", "coadjoint", "trivial", "deformed"});
    }

    MapObject make_map(const CdModule& src, const CdModule& dst, CdHom h) {
        if (h.src_rank() != src.rank() || h.dst_rank() != dst.rank())
            throw ModuleMismatch("map ranks do not match " + src.name + " -> " + dst.name);
        return MapObject{"", src.name, dst.name, src, dst, std::move(h)};
    }

    MapObject map_ctor(const Token& ctor, const std::vector<Token>& a) {
        const std::string& k = ctor.text;
        if (k == "dual") {
            arity(ctor, a, 2);
            CdModule tgt = get_carrier(a[1]);
            return make_map(tgt, tgt, dual_hom(get_map(a[0]).hom));
        }
        if (k == "inverse") {
            arity(ctor, a, 1);
            const MapObject& m = get_map(a[0]);
            return make_map(m.dst_module, m.src_module, invert_hom(m.hom));
        }
        if (k == "compose") {
            arity(ctor, a, 2);
            const MapObject& outer = get_map(a[0]);
            const MapObject& inner = get_map(a[1]);
            return make_map(inner.src_module, outer.dst_module, compose(outer.hom, inner.hom));
        }
        if (k == "power") {
            arity(ctor, a, 2);
            const MapObject& m = get_map(a[0]);
            return make_map(m.src_module, m.dst_module, m.hom.pow(get_uint(a[1])));
        }
        if (k == "sum") {
            arity(ctor, a, 3);
            CdModule tgt = get_carrier(a[2]);
            return make_map(tgt, tgt, direct_sum(get_map(a[0]).hom, get_map(a[1]).hom));
        }
        if (k == "natural") {
            arity(ctor, a, 2);
            const TwoForm& w = get_form(a[0]);
            return make_map(w.algebra().module(), get_carrier(a[1]), omega_natural(w));
        }
        if (k == "ofrom") {
            arity(ctor, a, 2);
            const TwoForm& w = get_form(a[0]);
            return make_map(get_carrier(a[1]), w.algebra().module(), o_from_symplectic(w));
        }
        if (k == "rsharp") {
            arity(ctor, a, 2);
            const Tensor2& r = get_tensor(a[0]);
            return make_map(get_carrier(a[1]), r.algebra().module(), r_sharp0(r));
        }
        if (k == "lift") {
            arity(ctor, a, 2);
            CdModule tgt = get_carrier(a[1]);
            return make_map(tgt, tgt, lift_hom(get_map(a[0]).hom));
        }
        if (k == "nijfrom") {
            arity(ctor, a, 3);
            const RepPtr& r = get_module(a[0]);
            CdHom n = nijenhuis_from_compatible(*r, get_map(a[1]).hom, get_map(a[2]).hom);
            return make_map(r->algebra().module(), r->algebra().module(), std::move(n));
        }
        fail(ctor, "unknown map constructor '" + k + "'",
             {"dual", "inverse", "compose", "power", "sum", "natural", "ofrom", "rsharp", "lift", "nijfrom"});
    }

    Tensor2 tensor_ctor(const Token& ctor, const std::vector<Token>& a) {
        const std::string& k = ctor.text;
        if (k == "from_form") {
            arity(ctor, a, 1);
            return r_from_symplectic(get_form(a[0]));
        }
        if (k == "rdeform") {
            arity(ctor, a, 3);
            return r_deform(get_tensor(a[0]), get_map(a[1]).hom, get_uint(a[2]));
        }
        fail(ctor, "unknown tensor constructor '" + k + "'", {"from_form", "rdeform"});
    }

    TwoForm form_ctor(const Token& ctor, const std::vector<Token>& a) {
        const std::string& k = ctor.text;
        if (k == "omegaN") {
            arity(ctor, a, 3);
            TwoForm w = omega_N(get_form(a[0]), get_map(a[1]).hom, get_uint(a[2]));
            return TwoForm(w.algebra_ptr(), w.table(), w.name());
        }
        if (k == "from_r") {
            arity(ctor, a, 1);
            return form_from_r(get_tensor(a[0]));
        }
        fail(ctor, "unknown form constructor '" + k + "'", {"omegaN", "from_r"});
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    Workspace ws_;
};

}  // namespace

Workspace parse(const std::string& source) { return Parser(source).run(); }

Workspace parse_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse(ss.str());
}

}  // namespace lck::dsl
