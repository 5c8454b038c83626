#include "lck/table.hpp"

namespace lck {

Element SesquiTable::entry(std::size_t i, std::size_t j) const {
    Element e(o_);
    for (std::size_t k = 0; k < o_; ++k) e[k] = at(i, j, k);
    return e;
}

void SesquiTable::set_entry(std::size_t i, std::size_t j, const Element& e) {
    if (e.rank() != o_) throw ModuleMismatch("table entry rank mismatch");
    for (std::size_t k = 0; k < o_; ++k) at(i, j, k) = e[k];
}

Element SesquiTable::eval(const Element& x, const Element& y, const Poly& s) const {
    if (x.rank() != l_ || y.rank() != r_)
        throw ModuleMismatch("sesquilinear evaluation on ranks (" + std::to_string(x.rank()) + "," +
                             std::to_string(y.rank()) + "), table expects (" + std::to_string(l_) + "," +
                             std::to_string(r_) + ")");
    const Poly d = Poly::var(sym::D());
    const Substitution left{{sym::D(), -s}};
    const Substitution right{{sym::D(), s + d}};
    const Substitution spectral{{sym::L(), s}};
    Element out(o_);
    std::vector<Poly> xs(l_), ys(r_);
    for (std::size_t i = 0; i < l_; ++i)
        if (!x[i].is_zero()) xs[i] = x[i].substitute(left);
    for (std::size_t j = 0; j < r_; ++j)
        if (!y[j].is_zero()) ys[j] = y[j].substitute(right);
    for (std::size_t i = 0; i < l_; ++i) {
        if (xs[i].is_zero()) continue;
        for (std::size_t j = 0; j < r_; ++j) {
            if (ys[j].is_zero()) continue;
            Poly coef = xs[i] * ys[j];
            for (std::size_t k = 0; k < o_; ++k) {
                const Poly& t = at(i, j, k);
                if (!t.is_zero()) out[k] += coef * t.substitute(spectral);
            }
        }
    }
    return out;
}

SesquiTable SesquiTable::substitute(const Substitution& b) const {
    SesquiTable r = *this;
    for (auto& p : r.t_) p = p.substitute(b);
    return r;
}

bool SesquiTable::only_kinds(std::initializer_list<SymbolKind> kinds, bool allow_l) const {
    for (const auto& p : t_)
        for (SymbolId s : p.symbols()) {
            if (s == sym::L()) {
                if (!allow_l) return false;
                continue;
            }
            bool ok = false;
            for (auto k : kinds) ok = ok || Symbols::kind(s) == k;
            if (!ok) return false;
        }
    return true;
}

}  // namespace lck
