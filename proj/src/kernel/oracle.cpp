#include "lck/oracle.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

namespace lck {
namespace {

using i128 = __int128;

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::vector<long> sample_points(const std::string& name, unsigned count, std::uint64_t seed) {
    std::mt19937_64 rng(seed ^ fnv1a(name));
    const long bound = std::max<long>(16, 2L * count);
    std::set<long> seen;
    std::vector<long> out;
    while (out.size() < count) {
        long v = static_cast<long>(rng() % static_cast<std::uint64_t>(2 * bound + 1)) - bound;
        if (seen.insert(v).second) out.push_back(v);
    }
    return out;
}

struct FlatTerm {
    Rational coef;
    mpz_class scaled;
    std::vector<std::uint32_t> exps;
};

struct Grid {
    std::vector<SymbolId> syms;
    std::vector<std::string> names;
    std::vector<std::vector<long>> values;
};

class Evaluator {
public:
    Evaluator(const Grid& g, const std::vector<FlatTerm>& terms, const mpz_class& scale)
        : g_(g), terms_(terms), scale_(scale) {
        fast_ = true;
        for (const auto& t : terms_)
            if (!t.scaled.fits_slong_p()) fast_ = false;
        if (!fast_) return;
        std::uint32_t maxe = 0;
        for (const auto& t : terms_)
            for (auto e : t.exps) maxe = std::max(maxe, e);
        pow_.resize(g_.syms.size());
        for (std::size_t s = 0; s < g_.syms.size(); ++s) {
            for (long v : g_.values[s]) {
                std::vector<i128> row(maxe + 1);
                row[0] = 1;
                for (std::uint32_t e = 1; e <= maxe && fast_; ++e)
                    if (__builtin_mul_overflow(row[e - 1], static_cast<i128>(v), &row[e])) fast_ = false;
                pow_[s].push_back(std::move(row));
            }
        }
    }

    // Value at the grid point with per-symbol indices `idx`, scaled by `scale`.
    Rational at(const std::vector<std::size_t>& idx) {
        if (fast_) {
            i128 sum = 0;
            bool ok = true;
            for (const auto& t : terms_) {
                i128 v = static_cast<i128>(t.scaled.get_si());
                for (std::size_t s = 0; s < t.exps.size() && ok; ++s)
                    if (t.exps[s] && __builtin_mul_overflow(v, pow_[s][idx[s]][t.exps[s]], &v)) ok = false;
                if (!ok || __builtin_add_overflow(sum, v, &sum)) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                if (sum == 0) return 0;
                Rational q(to_mpz(sum), scale_);
                q.canonicalize();
                return q;
            }
        }
        Rational sum = 0;
        for (const auto& t : terms_) {
            Rational v = t.coef;
            for (std::size_t s = 0; s < t.exps.size(); ++s)
                for (std::uint32_t e = 0; e < t.exps[s]; ++e) v *= g_.values[s][idx[s]];
            sum += v;
        }
        return sum;
    }

private:
    static mpz_class to_mpz(i128 v) {
        bool neg = v < 0;
        unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
        mpz_class hi(static_cast<unsigned long>(u >> 64));
        mpz_class lo(static_cast<unsigned long>(u & 0xffffffffffffffffull));
        mpz_class r = (hi << 64) + lo;
        return neg ? mpz_class(-r) : r;
    }

    const Grid& g_;
    const std::vector<FlatTerm>& terms_;
    mpz_class scale_;
    bool fast_ = true;
    std::vector<std::vector<std::vector<i128>>> pow_;
};

Witness make_witness(const Grid& g, const std::vector<std::size_t>& idx, const Rational& value) {
    Witness w;
    for (std::size_t s = 0; s < g.syms.size(); ++s) w.point.emplace_back(g.names[s], Rational(g.values[s][idx[s]]));
    w.value = value;
    return w;
}

}  // namespace

OracleResult evaluation_oracle(std::span<const Poly> terms, const OracleOptions& opts) {
    std::map<std::string, SymbolId> by_name;
    std::map<SymbolId, std::uint32_t> degree;
    for (const auto& p : terms)
        for (SymbolId s : p.symbols()) {
            by_name.emplace(Symbols::name(s), s);
            degree[s] = std::max(degree[s], p.degree_in(s));
        }

    Grid g;
    OracleResult res;
    res.certified = true;
    for (const auto& [name, s] : by_name) {
        unsigned count = opts.count ? opts.count : degree[s] + 1;
        if (count <= degree[s]) res.certified = false;
        g.syms.push_back(s);
        g.names.push_back(name);
        g.values.push_back(sample_points(name, count, opts.seed));
    }

    mpz_class scale = 1;
    for (const auto& p : terms)
        for (const auto& [m, c] : p.terms()) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), c.get_den_mpz_t());
    std::vector<FlatTerm> flat;
    for (const auto& p : terms)
        for (const auto& [m, c] : p.terms()) {
            FlatTerm t{c, mpz_class(c.get_num() * (scale / c.get_den())), std::vector<std::uint32_t>(g.syms.size(), 0)};
            for (std::size_t s = 0; s < g.syms.size(); ++s) t.exps[s] = m.degree(g.syms[s]);
            flat.push_back(std::move(t));
        }

    Evaluator ev(g, flat, scale);
    std::uint64_t grid = 1;
    bool sampled = false;
    for (const auto& v : g.values) {
        if (grid > opts.max_grid / std::max<std::size_t>(1, v.size())) {
            sampled = true;
            break;
        }
        grid *= v.size();
    }

    std::vector<std::size_t> idx(g.syms.size(), 0);
    auto visit = [&](void) {
        ++res.points;
        Rational v = ev.at(idx);
        if (v != 0 && res.all_zero) {
            res.all_zero = false;
            res.witness = make_witness(g, idx, v);
        }
    };

    if (sampled) {
        res.certified = false;
        std::mt19937_64 rng(opts.seed ^ 0x9e3779b97f4a7c15ull);
        for (std::uint64_t n = 0; n < opts.max_grid && res.all_zero; ++n) {
            for (std::size_t s = 0; s < idx.size(); ++s) idx[s] = rng() % g.values[s].size();
            visit();
        }
        return res;
    }

    while (true) {
        visit();
        if (!res.all_zero) break;
        std::size_t s = 0;
        while (s < idx.size() && ++idx[s] == g.values[s].size()) idx[s++] = 0;
        if (s == idx.size()) break;
    }
    return res;
}

bool evaluation_oracle(const Poly& p, unsigned count, std::uint64_t seed) {
    OracleOptions o;
    o.count = count;
    o.seed = seed;
    return evaluation_oracle(std::span<const Poly>(&p, 1), o).all_zero;
}

std::optional<Witness> find_witness(const Poly& p, std::uint64_t seed) {
    if (p.is_zero()) return std::nullopt;
    OracleOptions o;
    o.seed = seed;
    return evaluation_oracle(std::span<const Poly>(&p, 1), o).witness;
}

}  // namespace lck
