#include "lck/poly.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <tuple>

#include "lck/errors.hpp"

namespace lck {
namespace {

Rational canonical(Rational c) {
    c.canonicalize();
    return c;
}

void check_cap(SymbolId s, std::uint64_t e) {
    if (e > max_degree()) throw ExponentOverflow(Symbols::name(s), static_cast<unsigned>(e), max_degree());
}

using DisplayKey = std::tuple<int, std::string>;

DisplayKey display_key(SymbolId s) { return {Symbols::display_rank(s), Symbols::name(s)}; }

std::vector<std::pair<DisplayKey, std::uint32_t>> display_factors(const Monomial& m) {
    std::vector<std::pair<DisplayKey, std::uint32_t>> out;
    for (auto [s, e] : m.factors()) out.emplace_back(display_key(s), e);
    std::sort(out.begin(), out.end());
    return out;
}

// Graded order, then lexicographic in display order of symbols; larger first.
bool display_before(const std::vector<std::pair<DisplayKey, std::uint32_t>>& a, std::uint32_t da,
                    const std::vector<std::pair<DisplayKey, std::uint32_t>>& b, std::uint32_t db) {
    if (da != db) return da > db;
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) return true;
        if (i == a.size() || b[j].first < a[i].first) return false;
        if (a[i].second != b[j].second) return a[i].second > b[j].second;
        ++i;
        ++j;
    }
    return false;
}

std::string render_monomial(const std::vector<std::pair<DisplayKey, std::uint32_t>>& f) {
    std::string out;
    for (const auto& [key, e] : f) {
        if (!out.empty()) out += '*';
        out += std::get<1>(key);
        if (e > 1) out += '^' + std::to_string(e);
    }
    return out;
}

}  // namespace

Monomial Monomial::of(SymbolId s, std::uint32_t e) {
    Monomial m;
    if (e > 0) {
        check_cap(s, e);
        m.f_.emplace_back(s, e);
    }
    return m;
}

std::uint32_t Monomial::degree(SymbolId s) const {
    for (auto [id, e] : f_)
        if (id == s) return e;
    return 0;
}

std::uint32_t Monomial::total_degree() const {
    std::uint32_t d = 0;
    for (auto [id, e] : f_) d += e;
    return d;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r;
    r.f_.reserve(f_.size() + o.f_.size());
    std::size_t i = 0, j = 0;
    while (i < f_.size() || j < o.f_.size()) {
        if (j == o.f_.size() || (i < f_.size() && f_[i].first < o.f_[j].first)) {
            r.f_.push_back(f_[i++]);
        } else if (i == f_.size() || o.f_[j].first < f_[i].first) {
            r.f_.push_back(o.f_[j++]);
        } else {
            std::uint64_t e = std::uint64_t(f_[i].second) + o.f_[j].second;
            check_cap(f_[i].first, e);
            r.f_.emplace_back(f_[i].first, static_cast<std::uint32_t>(e));
            ++i;
            ++j;
        }
    }
    return r;
}

Poly::Poly(long c) {
    if (c != 0) t_.emplace(Monomial{}, Rational(c));
}

Poly::Poly(const Rational& c) {
    if (c != 0) t_.emplace(Monomial{}, canonical(c));
}

Poly Poly::var(SymbolId s) { return term(Monomial::of(s), 1); }

Poly Poly::var(std::string_view name) {
    auto id = Symbols::find(name);
    if (!id) throw UnknownSymbol(std::string(name));
    return var(*id);
}

Poly Poly::term(const Monomial& m, const Rational& c) {
    Poly p;
    if (c != 0) p.t_.emplace(m, canonical(c));
    return p;
}

bool Poly::is_constant() const { return t_.empty() || (t_.size() == 1 && t_.begin()->first.is_one()); }

Rational Poly::constant_term() const {
    auto it = t_.find(Monomial{});
    return it == t_.end() ? Rational(0) : it->second;
}

Poly& Poly::operator+=(const Poly& o) {
    for (const auto& [m, c] : o.t_) {
        auto [it, inserted] = t_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) t_.erase(it);
        }
    }
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    for (const auto& [m, c] : o.t_) {
        auto [it, inserted] = t_.emplace(m, -c);
        if (!inserted) {
            it->second -= c;
            if (it->second == 0) t_.erase(it);
        }
    }
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    if (a.t_.empty() || b.t_.empty()) return r;
    for (const auto& [ma, ca] : a.t_) {
        for (const auto& [mb, cb] : b.t_) {
            Rational c = ca * cb;
            auto [it, inserted] = r.t_.emplace(ma * mb, c);
            if (!inserted) it->second += c;
        }
    }
    std::erase_if(r.t_, [](const auto& kv) { return kv.second == 0; });
    return r;
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& [m, c] : r.t_) c = -c;
    return r;
}

Poly Poly::pow(unsigned e) const {
    Poly result(1);
    Poly base = *this;
    while (e > 0) {
        if (e & 1u) result *= base;
        e >>= 1;
        if (e > 0) base *= base;
    }
    return result;
}

std::uint32_t Poly::degree_in(SymbolId s) const {
    std::uint32_t d = 0;
    for (const auto& [m, c] : t_) d = std::max(d, m.degree(s));
    return d;
}

std::uint32_t Poly::total_degree() const {
    std::uint32_t d = 0;
    for (const auto& [m, c] : t_) d = std::max(d, m.total_degree());
    return d;
}

std::vector<SymbolId> Poly::symbols() const {
    std::set<SymbolId> s;
    for (const auto& [m, c] : t_)
        for (auto [id, e] : m.factors()) s.insert(id);
    return {s.begin(), s.end()};
}

bool Poly::depends_on(SymbolId s) const {
    for (const auto& [m, c] : t_)
        if (m.degree(s) > 0) return true;
    return false;
}

bool Poly::only_kinds(std::initializer_list<SymbolKind> kinds) const {
    for (SymbolId s : symbols())
        if (std::find(kinds.begin(), kinds.end(), Symbols::kind(s)) == kinds.end()) return false;
    return true;
}

Poly Poly::substitute(const Substitution& b) const {
    if (b.empty() || t_.empty()) return *this;
    std::map<std::pair<SymbolId, std::uint32_t>, Poly> powers;
    auto power_of = [&](SymbolId s, std::uint32_t e, const Poly& base) -> const Poly& {
        auto key = std::make_pair(s, e);
        auto it = powers.find(key);
        if (it != powers.end()) return it->second;
        return powers.emplace(key, base.pow(e)).first->second;
    };
    Poly out;
    for (const auto& [m, c] : t_) {
        Monomial rest;
        Poly factor(c);
        for (auto [s, e] : m.factors()) {
            auto it = b.find(s);
            if (it == b.end())
                rest = rest * Monomial::of(s, e);
            else
                factor *= power_of(s, e, it->second);
        }
        if (!rest.is_one()) factor *= Poly::term(rest, 1);
        out += factor;
    }
    return out;
}

Rational Poly::evaluate(const std::map<SymbolId, Rational>& point) const {
    Rational sum = 0;
    for (const auto& [m, c] : t_) {
        Rational v = c;
        for (auto [s, e] : m.factors()) {
            auto it = point.find(s);
            if (it == point.end()) throw UnknownSymbol(Symbols::name(s));
            Rational p = 1;
            for (std::uint32_t k = 0; k < e; ++k) p *= it->second;
            v *= p;
        }
        sum += v;
    }
    return sum;
}

std::string render_rational(const Rational& r) {
    const Rational q = canonical(r);
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string Poly::str() const {
    if (t_.empty()) return "0";
    struct Item {
        std::vector<std::pair<DisplayKey, std::uint32_t>> f;
        std::uint32_t deg;
        Rational c;
    };
    std::vector<Item> items;
    items.reserve(t_.size());
    for (const auto& [m, c] : t_) items.push_back({display_factors(m), m.total_degree(), c});
    std::sort(items.begin(), items.end(),
              [](const Item& a, const Item& b) { return display_before(a.f, a.deg, b.f, b.deg); });
    std::ostringstream os;
    bool first = true;
    for (const auto& it : items) {
        Rational mag = abs(it.c);
        bool neg = it.c < 0;
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        first = false;
        std::string mono = render_monomial(it.f);
        if (mono.empty())
            os << render_rational(mag);
        else if (mag == 1)
            os << mono;
        else
            os << render_rational(mag) << '*' << mono;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

Poly substitute(const Poly& p, const std::map<std::string, Poly>& bindings) {
    Substitution b;
    for (const auto& [name, value] : bindings) {
        auto id = Symbols::find(name);
        if (!id) throw UnknownSymbol(name);
        b.emplace(*id, value);
    }
    return p.substitute(b);
}

bool identity_test(const Poly& p) { return p.is_zero(); }

}  // namespace lck
