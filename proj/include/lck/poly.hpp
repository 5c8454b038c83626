#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lck/symbols.hpp"

namespace lck {

using Rational = mpq_class;

// Product of symbol powers. Factors are sorted by id with positive exponents.
class Monomial {
public:
    using Factor = std::pair<SymbolId, std::uint32_t>;

    Monomial() = default;
    static Monomial of(SymbolId s, std::uint32_t e = 1);

    const std::vector<Factor>& factors() const { return f_; }
    bool is_one() const { return f_.empty(); }
    std::uint32_t degree(SymbolId s) const;
    std::uint32_t total_degree() const;

    Monomial operator*(const Monomial& o) const;
    auto operator<=>(const Monomial&) const = default;
    bool operator==(const Monomial&) const = default;

private:
    std::vector<Factor> f_;
};

class Poly;
using Substitution = std::map<SymbolId, Poly>;

// Exact multivariate polynomial over Q. Zero coefficients are never stored.
class Poly {
public:
    using Terms = std::map<Monomial, Rational>;

    Poly() = default;
    Poly(long c);
    Poly(const Rational& c);

    static Poly var(SymbolId s);
    static Poly var(std::string_view name);
    static Poly term(const Monomial& m, const Rational& c);

    const Terms& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    bool is_constant() const;
    Rational constant_term() const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly operator-() const;
    Poly pow(unsigned e) const;
    bool operator==(const Poly&) const = default;

    std::uint32_t degree_in(SymbolId s) const;
    std::uint32_t total_degree() const;
    std::vector<SymbolId> symbols() const;
    bool depends_on(SymbolId s) const;
    bool only_kinds(std::initializer_list<SymbolKind> kinds) const;

    // Simultaneous substitution.
    Poly substitute(const Substitution& b) const;
    // Every symbol of the polynomial must be bound.
    Rational evaluate(const std::map<SymbolId, Rational>& point) const;

    std::string str() const;

private:
    Terms t_;
};

std::ostream& operator<<(std::ostream& os, const Poly& p);

// Binding by name; an unregistered name raises UnknownSymbol.
Poly substitute(const Poly& p, const std::map<std::string, Poly>& bindings);

bool identity_test(const Poly& p);

std::string render_rational(const Rational& q);

}  // namespace lck
