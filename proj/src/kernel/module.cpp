#include "lck/module.hpp"

#include <unordered_map>

namespace lck {

std::size_t CdModule::index_of(const std::string& b) const {
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (basis[i] == b) return i;
    throw ModuleMismatch("'" + b + "' is not a generator of " + name);
}

CdModule dual_module(const CdModule& m, const std::string& name) {
    CdModule d{name.empty() ? m.name + "_star" : name, {}};
    for (const auto& b : m.basis) d.basis.push_back(b + "_star");
    return d;
}

Element Element::basis(std::size_t rank, std::size_t i, const Poly& coef) {
    Element e(rank);
    e.c_.at(i) = coef;
    return e;
}

bool Element::is_zero() const {
    for (const auto& p : c_)
        if (!p.is_zero()) return false;
    return true;
}

Element& Element::operator+=(const Element& o) {
    if (o.rank() != rank()) throw ModuleMismatch("element rank mismatch");
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

Element& Element::operator-=(const Element& o) {
    if (o.rank() != rank()) throw ModuleMismatch("element rank mismatch");
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

Element Element::operator-() const {
    Element r = *this;
    for (auto& p : r.c_) p = -p;
    return r;
}

Element operator*(const Poly& s, const Element& e) {
    Element r = e;
    for (auto& p : r.c_) p = s * p;
    return r;
}

Element Element::substitute(const Substitution& b) const {
    Element r = *this;
    for (auto& p : r.c_) p = p.substitute(b);
    return r;
}

CdHom CdHom::identity(std::size_t n) { return scalar(n, Poly(1)); }

CdHom CdHom::scalar(std::size_t n, const Poly& c) {
    CdHom h(n, n);
    for (std::size_t i = 0; i < n; ++i) h.at(i, i) = c;
    return h;
}

Element CdHom::row(std::size_t j) const {
    Element e(dst_);
    for (std::size_t k = 0; k < dst_; ++k) e[k] = at(j, k);
    return e;
}

Element CdHom::apply(const Element& x) const {
    if (x.rank() != src_) throw ModuleMismatch("hom source rank " + std::to_string(src_) + " applied to rank " +
                                               std::to_string(x.rank()));
    Element out(dst_);
    for (std::size_t j = 0; j < src_; ++j) {
        if (x[j].is_zero()) continue;
        for (std::size_t k = 0; k < dst_; ++k)
            if (!at(j, k).is_zero()) out[k] += x[j] * at(j, k);
    }
    return out;
}

CdHom CdHom::operator+(const CdHom& o) const {
    if (o.src_ != src_ || o.dst_ != dst_) throw ModuleMismatch("hom shape mismatch");
    CdHom r = *this;
    for (std::size_t i = 0; i < m_.size(); ++i) r.m_[i] += o.m_[i];
    return r;
}

CdHom CdHom::operator-(const CdHom& o) const {
    if (o.src_ != src_ || o.dst_ != dst_) throw ModuleMismatch("hom shape mismatch");
    CdHom r = *this;
    for (std::size_t i = 0; i < m_.size(); ++i) r.m_[i] -= o.m_[i];
    return r;
}

CdHom operator*(const Poly& s, const CdHom& h) {
    CdHom r = h;
    for (auto& p : r.m_) p = s * p;
    return r;
}

CdHom CdHom::pow(unsigned k) const {
    if (!is_endo()) throw ModuleMismatch("power of a non-endomorphism");
    CdHom r = identity(src_);
    for (unsigned i = 0; i < k; ++i) r = compose(*this, r);
    return r;
}

bool CdHom::is_zero() const {
    for (const auto& p : m_)
        if (!p.is_zero()) return false;
    return true;
}

CdHom compose(const CdHom& outer, const CdHom& inner) {
    if (inner.dst_rank() != outer.src_rank()) throw ModuleMismatch("composition rank mismatch");
    CdHom r(inner.src_rank(), outer.dst_rank());
    for (std::size_t j = 0; j < inner.src_rank(); ++j) {
        Element img = outer.apply(inner.row(j));
        for (std::size_t k = 0; k < outer.dst_rank(); ++k) r.at(j, k) = img[k];
    }
    return r;
}

Poly subst_d(const Poly& p, const Poly& value) { return p.substitute({{sym::D(), value}}); }

CdHom dual_hom(const CdHom& s) {
    if (!s.is_endo()) throw ModuleMismatch("dual_hom needs an endomorphism");
    const std::size_t n = s.src_rank();
    CdHom d(n, n);
    Poly minus_d = -Poly::var(sym::D());
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) d.at(j, k) = subst_d(s.at(k, j), minus_d);
    return d;
}

Poly pairing(const Element& alpha, const Element& v, const Poly& spectral) {
    if (alpha.rank() != v.rank()) throw ModuleMismatch("pairing rank mismatch");
    Poly out;
    for (std::size_t j = 0; j < v.rank(); ++j) {
        if (alpha[j].is_zero() || v[j].is_zero()) continue;
        out += subst_d(alpha[j], -spectral) * subst_d(v[j], spectral);
    }
    return out;
}

NonInvertible::NonInvertible(Poly det)
    : Error("homomorphism is not invertible over Q[D]: determinant " + det.str()), determinant(std::move(det)) {}

namespace {

// Laplace expansion along rows with minors cached by column mask.
class MinorCache {
public:
    MinorCache(const CdHom& t, std::vector<std::size_t> rows, std::vector<std::size_t> cols)
        : t_(t), rows_(std::move(rows)), cols_(std::move(cols)) {}

    Poly det() { return minor(0, (1ull << cols_.size()) - 1); }

private:
    Poly minor(std::size_t depth, unsigned long long mask) {
        if (mask == 0) return Poly(1);
        auto it = cache_.find(mask);
        if (it != cache_.end()) return it->second;
        Poly sum;
        int sign = 1;
        for (std::size_t c = 0; c < cols_.size(); ++c) {
            if (!(mask & (1ull << c))) continue;
            const Poly& entry = t_.at(rows_[depth], cols_[c]);
            if (!entry.is_zero()) {
                Poly sub = minor(depth + 1, mask & ~(1ull << c));
                if (sign > 0)
                    sum += entry * sub;
                else
                    sum -= entry * sub;
            }
            sign = -sign;
        }
        cache_.emplace(mask, sum);
        return sum;
    }

    const CdHom& t_;
    std::vector<std::size_t> rows_, cols_;
    std::unordered_map<unsigned long long, Poly> cache_;
};

std::vector<std::size_t> range_without(std::size_t n, std::size_t skip) {
    std::vector<std::size_t> v;
    for (std::size_t i = 0; i < n; ++i)
        if (i != skip) v.push_back(i);
    return v;
}

}  // namespace

Poly determinant(const CdHom& t) {
    if (!t.is_endo()) throw ModuleMismatch("determinant of a non-square matrix");
    if (t.src_rank() > 24) throw Unsupported("determinant rank above 24");
    return MinorCache(t, range_without(t.src_rank(), t.src_rank()), range_without(t.src_rank(), t.src_rank())).det();
}

DetInfo hom_det_unit(const CdHom& t) {
    DetInfo info{determinant(t), false};
    info.unit = info.det.is_constant() && !info.det.is_zero();
    return info;
}

CdHom invert_hom(const CdHom& t) {
    DetInfo info = hom_det_unit(t);
    if (!info.unit) throw NonInvertible(info.det);
    const std::size_t n = t.src_rank();
    Rational inv = 1 / info.det.constant_term();
    CdHom r(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Poly cof = n == 1 ? Poly(1) : MinorCache(t, range_without(n, i), range_without(n, j)).det();
            if ((i + j) % 2) cof = -cof;
            r.at(j, i) = Poly(inv) * cof;
        }
    return r;
}

}  // namespace lck
