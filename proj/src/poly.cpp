#include "curvex/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace curvex {

bool grlex_less(const Mono& a, const Mono& b) {
    long da = std::accumulate(a.begin(), a.end(), 0L);
    long db = std::accumulate(b.begin(), b.end(), 0L);
    if (da != db) return da < db;
    // Same grade: the earlier variable is more significant.
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

namespace {

struct GrlexLess {
    bool operator()(const Mono& a, const Mono& b) const { return grlex_less(a, b); }
};

// Index of each of `from` inside `to` (to must be a superset, both sorted).
std::vector<std::size_t> index_map(const std::vector<std::string>& from,
                                   const std::vector<std::string>& to) {
    std::vector<std::size_t> idx(from.size());
    for (std::size_t i = 0; i < from.size(); ++i) {
        auto it = std::lower_bound(to.begin(), to.end(), from[i]);
        idx[i] = static_cast<std::size_t>(it - to.begin());
    }
    return idx;
}

Mono remap(const Mono& m, const std::vector<std::size_t>& idx, std::size_t width) {
    Mono out(width, 0);
    for (std::size_t i = 0; i < m.size(); ++i) out[idx[i]] = m[i];
    return out;
}

std::vector<std::string> merge_vars(const std::vector<std::string>& a,
                                    const std::vector<std::string>& b) {
    std::vector<std::string> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool mono_divides(const Mono& d, const Mono& m) {
    for (std::size_t i = 0; i < d.size(); ++i)
        if (d[i] > m[i]) return false;
    return true;
}

}  // namespace

Poly::Poly(const Rat& c) {
    if (c != 0) terms_.push_back({Mono{}, c});
}

Poly::Poly(long c) : Poly(Rat(c)) {}

Poly Poly::variable(const std::string& name) {
    if (name.empty()) throw std::invalid_argument("empty variable name");
    Poly p;
    p.vars_ = {name};
    p.terms_.push_back({Mono{1}, Rat(1)});
    return p;
}

Poly Poly::from_terms(std::vector<std::string> vars,
                      std::vector<std::pair<Mono, Rat>> terms) {
    for (const auto& [m, c] : terms)
        if (m.size() != vars.size())
            throw std::invalid_argument("from_terms: exponent width mismatch");
    if (!std::is_sorted(vars.begin(), vars.end()))
        throw std::invalid_argument("from_terms: variables must be sorted");
    Poly p;
    p.vars_ = std::move(vars);
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
}

// Re-establishes the canonical representation: merge duplicate monomials,
// drop zero coefficients and unused variables, sort graded-lex descending.
void Poly::normalize() {
    std::map<Mono, Rat, GrlexLess> acc;
    for (auto& [m, c] : terms_) {
        if (c == 0) continue;
        auto [it, fresh] = acc.emplace(m, c);
        if (!fresh && (it->second += c) == 0) acc.erase(it);
    }
    std::vector<bool> used(vars_.size(), false);
    for (const auto& [m, c] : acc)
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i]) used[i] = true;
    std::vector<std::string> kept;
    std::vector<std::size_t> pos(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (used[i]) {
            pos[i] = kept.size();
            kept.push_back(vars_[i]);
        }
    terms_.clear();
    for (auto it = acc.rbegin(); it != acc.rend(); ++it) {
        Mono m(kept.size(), 0);
        for (std::size_t i = 0; i < it->first.size(); ++i)
            if (used[i]) m[pos[i]] = it->first[i];
        terms_.push_back({std::move(m), it->second});
    }
    vars_ = std::move(kept);
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && vars_.empty());
}

const Rat& Poly::constant_value() const {
    static const Rat zero(0);
    if (terms_.empty()) return zero;
    if (!is_constant()) throw std::logic_error("constant_value on non-constant polynomial");
    return terms_[0].second;
}

long Poly::total_degree() const {
    if (terms_.empty()) return -1;
    const Mono& m = terms_[0].first;  // graded order: leading term has max grade
    return std::accumulate(m.begin(), m.end(), 0L);
}

long Poly::degree_in(const std::string& var) const {
    auto it = std::lower_bound(vars_.begin(), vars_.end(), var);
    if (it == vars_.end() || *it != var) return 0;
    std::size_t k = static_cast<std::size_t>(it - vars_.begin());
    long d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, static_cast<long>(m[k]));
    return d;
}

Rat Poly::leading_coefficient() const {
    return terms_.empty() ? Rat(0) : terms_[0].second;
}

Rat Poly::content() const {
    Int g(0), l(1);
    for (const auto& [m, c] : terms_) {
        g = gcd(g, rat_num(c));
        l = lcm(l, rat_den(c));
    }
    return g == 0 ? Rat(0) : Rat(abs(g), l);
}

Poly Poly::operator-() const {
    Poly out(*this);
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
}

Poly operator+(const Poly& a, const Poly& b) {
    Poly out;
    out.vars_ = merge_vars(a.vars_, b.vars_);
    auto ia = index_map(a.vars_, out.vars_), ib = index_map(b.vars_, out.vars_);
    out.terms_.reserve(a.terms_.size() + b.terms_.size());
    for (const auto& [m, c] : a.terms_) out.terms_.push_back({remap(m, ia, out.vars_.size()), c});
    for (const auto& [m, c] : b.terms_) out.terms_.push_back({remap(m, ib, out.vars_.size()), c});
    out.normalize();
    return out;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    Poly out;
    out.vars_ = merge_vars(a.vars_, b.vars_);
    auto ia = index_map(a.vars_, out.vars_), ib = index_map(b.vars_, out.vars_);
    std::map<Mono, Rat, GrlexLess> acc;
    for (const auto& [ma, ca] : a.terms_) {
        Mono ra = remap(ma, ia, out.vars_.size());
        for (const auto& [mb, cb] : b.terms_) {
            Mono m = ra;
            for (std::size_t i = 0; i < mb.size(); ++i) m[ib[i]] += mb[i];
            auto [it, fresh] = acc.emplace(std::move(m), ca * cb);
            if (!fresh) it->second += ca * cb;
        }
    }
    for (auto it = acc.rbegin(); it != acc.rend(); ++it)
        if (it->second != 0) out.terms_.push_back({it->first, it->second});
    out.normalize();  // prunes variables cancelled by coefficient collisions
    return out;
}

Poly operator*(const Rat& c, const Poly& p) {
    if (c == 0) return Poly();
    Poly out(p);
    for (auto& [m, k] : out.terms_) k *= c;
    return out;
}

Poly Poly::pow(unsigned e) const {
    Poly acc(Rat(1)), b(*this);
    while (e) {
        if (e & 1) acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

std::optional<Poly> Poly::divide_exact(const Poly& num, const Poly& den) {
    if (den.is_zero()) throw std::domain_error("divide_exact: zero divisor");
    if (den.is_constant()) return Rat(1) / den.constant_value() * num;
    // Leading-term reduction in graded-lex order. When num = q*den the
    // leading term of every remainder is divisible by lt(den), so failure of
    // that test certifies the division is not exact.
    std::vector<std::string> allv = merge_vars(num.vars_, den.vars_);
    auto id = index_map(den.vars_, allv);
    Mono dlt = remap(den.terms_[0].first, id, allv.size());
    const Rat& dlc = den.terms_[0].second;
    Poly r = num, q;
    while (!r.is_zero()) {
        auto ir = index_map(r.vars_, allv);
        Mono rlt = remap(r.terms_[0].first, ir, allv.size());
        if (!mono_divides(dlt, rlt)) return std::nullopt;
        Mono diff(allv.size());
        for (std::size_t i = 0; i < allv.size(); ++i)
            diff[i] = static_cast<std::uint16_t>(rlt[i] - dlt[i]);
        Poly step = Poly::from_terms(allv, {{std::move(diff), r.terms_[0].second / dlc}});
        q += step;
        r -= step * den;
    }
    return q;
}

Poly Poly::derivative(const std::string& var) const {
    auto it = std::lower_bound(vars_.begin(), vars_.end(), var);
    if (it == vars_.end() || *it != var) return Poly();
    std::size_t k = static_cast<std::size_t>(it - vars_.begin());
    std::vector<std::pair<Mono, Rat>> out;
    for (const auto& [m, c] : terms_) {
        if (m[k] == 0) continue;
        Mono d = m;
        --d[k];
        out.push_back({std::move(d), c * m[k]});
    }
    return from_terms(vars_, std::move(out));
}

Poly Poly::substituted(const std::map<std::string, Poly>& bind) const {
    // Per-variable power cache; unbound variables pass through.
    std::vector<const Poly*> images(vars_.size(), nullptr);
    std::vector<std::vector<Poly>> powers(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        auto it = bind.find(vars_[i]);
        if (it != bind.end()) {
            images[i] = &it->second;
            powers[i] = {Poly(Rat(1))};
        }
    }
    Poly acc;
    for (const auto& [m, c] : terms_) {
        Poly term{c};
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (!images[i]) {
                term *= Poly::from_terms({vars_[i]}, {{Mono{m[i]}, Rat(1)}});
                continue;
            }
            auto& cache = powers[i];
            while (cache.size() <= m[i]) cache.push_back(cache.back() * *images[i]);
            term *= cache[m[i]];
        }
        acc += term;
    }
    return acc;
}

Rat Poly::evaluate(const std::map<std::string, Rat>& bind) const {
    std::vector<std::vector<Rat>> powers(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        auto it = bind.find(vars_[i]);
        if (it == bind.end())
            throw std::invalid_argument("evaluate: unbound variable " + vars_[i]);
        powers[i] = {Rat(1), it->second};
    }
    Rat acc(0);
    for (const auto& [m, c] : terms_) {
        Rat term = c;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            auto& cache = powers[i];
            while (cache.size() <= m[i]) cache.push_back(cache.back() * cache[1]);
            term *= cache[m[i]];
        }
        acc += term;
    }
    return acc;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rat a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool has_vars = std::any_of(m.begin(), m.end(), [](auto e) { return e != 0; });
        if (!has_vars || a != 1) {
            os << rat_str(a);
            if (has_vars) os << "*";
        }
        bool inner_first = true;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (!inner_first) os << "*";
            inner_first = false;
            os << vars_[i];
            if (m[i] > 1) os << "^" << m[i];
        }
    }
    return os.str();
}

}  // namespace curvex
