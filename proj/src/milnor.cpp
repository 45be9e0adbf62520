#include "curvex/milnor.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace curvex {

MilnorAlgebra MilnorAlgebra::build(const BinaryForm& q) {
    int n = q.degree();
    if (n < 3) throw std::domain_error("MilnorAlgebra: degree must be at least 3");
    if (!q.has_rational_coeffs())
        throw std::invalid_argument("MilnorAlgebra: coefficients must be rational");
    MilnorAlgebra a;
    a.source_ = q;
    a.nu_ = 2 * (n - 2);
    std::vector<Rat> pz = q.derivative(1, 0).rational_coeffs();
    std::vector<Rat> pw = q.derivative(0, 1).rational_coeffs();
    // Degree-d generators: monomial multiples of the two partials. Columns
    // are z^(d) .. w^(d), z-exponent descending.
    for (int d = 0; d <= a.nu_ + 1; ++d) {
        RatMatrix rows;
        if (d >= n - 1) {
            int k = d - (n - 1);
            for (int e = k; e >= 0; --e) {
                for (const std::vector<Rat>* part : {&pz, &pw}) {
                    std::vector<Rat> row(static_cast<std::size_t>(d) + 1, Rat(0));
                    for (int i = 0; i < n; ++i) {
                        if ((*part)[static_cast<std::size_t>(i)] == 0) continue;
                        row[static_cast<std::size_t>(d - e - i)] +=
                            (*part)[static_cast<std::size_t>(i)];
                    }
                    rows.push_back(std::move(row));
                }
            }
        }
        DegreeData dd;
        dd.red = rref(std::move(rows));
        std::size_t next = 0;
        for (int c = 0; c <= d; ++c) {
            if (next < dd.red.pivot_cols.size() &&
                dd.red.pivot_cols[next] == static_cast<std::size_t>(c)) {
                ++next;
                continue;
            }
            dd.nonpivot.push_back(c);
        }
        a.deg_.push_back(std::move(dd));
    }
    if (!a.deg_[static_cast<std::size_t>(a.nu_) + 1].nonpivot.empty())
        throw std::domain_error("MilnorAlgebra: form is not square-free (infinite colength)");
    for (int d = 0; d <= a.nu_; ++d) {
        const auto& dd = a.deg_[static_cast<std::size_t>(d)];
        a.hilbert_.push_back(static_cast<int>(dd.nonpivot.size()));
        std::vector<int> b;
        for (int c : dd.nonpivot) b.push_back(d - c);
        a.basis_.push_back(std::move(b));
    }
    if (a.hilbert_[static_cast<std::size_t>(a.nu_)] != 1)
        throw std::logic_error("MilnorAlgebra: socle dimension is not 1");
    return a;
}

int MilnorAlgebra::dimension() const {
    return std::accumulate(hilbert_.begin(), hilbert_.end(), 0);
}

int MilnorAlgebra::kernel_dim() const { return dimension() - 2; }

std::vector<Rat> MilnorAlgebra::reduce(int d, std::vector<Rat> v) const {
    if (d < 0) throw std::invalid_argument("reduce: negative degree");
    if (d > nu_) return {};
    if (v.size() != static_cast<std::size_t>(d) + 1)
        throw std::invalid_argument("reduce: coefficient vector has wrong length");
    const DegreeData& dd = deg_[static_cast<std::size_t>(d)];
    for (std::size_t r = 0; r < dd.red.rows.size(); ++r) {
        std::size_t c = dd.red.pivot_cols[r];
        if (v[c] == 0) continue;
        Rat f = v[c];
        const std::vector<Rat>& row = dd.red.rows[r];
        for (std::size_t j = 0; j < v.size(); ++j)
            if (row[j] != 0) v[j] -= f * row[j];
    }
    std::vector<Rat> out;
    out.reserve(dd.nonpivot.size());
    for (int c : dd.nonpivot) out.push_back(v[static_cast<std::size_t>(c)]);
    return out;
}

std::vector<std::vector<Rat>> MilnorAlgebra::normal_form(const Poly& p) const {
    int zpos = -1;
    int wpos = -1;
    const auto& vars = p.vars();
    for (std::size_t i = 0; i < vars.size(); ++i) {
        if (vars[i] == "z")
            zpos = static_cast<int>(i);
        else if (vars[i] == "w")
            wpos = static_cast<int>(i);
        else
            throw std::invalid_argument("normal_form: polynomial must involve only z and w");
    }
    std::map<int, std::vector<Rat>> parts;
    for (const auto& [mono, coeff] : p.terms()) {
        int ze = zpos >= 0 ? mono[static_cast<std::size_t>(zpos)] : 0;
        int we = wpos >= 0 ? mono[static_cast<std::size_t>(wpos)] : 0;
        int d = ze + we;
        if (d > nu_) continue;  // full-rank degrees reduce to zero
        auto& v = parts.try_emplace(d, std::vector<Rat>(static_cast<std::size_t>(d) + 1, Rat(0)))
                      .first->second;
        v[static_cast<std::size_t>(d - ze)] += coeff;
    }
    std::vector<std::vector<Rat>> out(static_cast<std::size_t>(nu_) + 1);
    for (int d = 0; d <= nu_; ++d)
        out[static_cast<std::size_t>(d)].assign(
            static_cast<std::size_t>(hilbert_[static_cast<std::size_t>(d)]), Rat(0));
    for (auto& [d, v] : parts) out[static_cast<std::size_t>(d)] = reduce(d, std::move(v));
    return out;
}

Rat MilnorAlgebra::top_coordinate(const Poly& p) const {
    return normal_form(p)[static_cast<std::size_t>(nu_)][0];
}

bool MilnorAlgebra::annihilator_check() const {
    if (hilbert_[static_cast<std::size_t>(nu_)] != 1) return false;
    if (top_coordinate(hessian(source_).to_poly()) == 0) return false;
    if (nu_ < 2) return false;
    const std::vector<int>& b1 = basis_[1];
    const std::vector<int>& b2 = basis_[static_cast<std::size_t>(nu_) - 1];
    if (b1.size() != 2 || b2.size() != 2) return false;
    Poly z = Poly::variable("z");
    Poly w = Poly::variable("w");
    Rat m[2][2];
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            Poly mono = z.pow(static_cast<unsigned>(b1[i] + b2[j])) *
                        w.pow(static_cast<unsigned>((1 - b1[i]) + (nu_ - 1 - b2[j])));
            m[i][j] = top_coordinate(mono);
        }
    return m[0][0] * m[1][1] - m[0][1] * m[1][0] != 0;
}

Poly MilnorAlgebra::s_pi_polynomial() const {
    // Flat index over classes of degree 1..nu, socle last.
    std::vector<std::size_t> off(static_cast<std::size_t>(nu_) + 2, 0);
    for (int d = 1; d <= nu_; ++d)
        off[static_cast<std::size_t>(d) + 1] =
            off[static_cast<std::size_t>(d)] +
            static_cast<std::size_t>(hilbert_[static_cast<std::size_t>(d)]);
    std::size_t total = off[static_cast<std::size_t>(nu_) + 1];
    std::size_t socle = off[static_cast<std::size_t>(nu_)];
    std::size_t m = socle;  // classes below the socle, = kernel_dim()
    if (m > 99) throw std::logic_error("s_pi_polynomial: too many variables");
    std::vector<int> cd(total), cz(total);
    for (int d = 1; d <= nu_; ++d)
        for (std::size_t idx = 0; idx < basis_[static_cast<std::size_t>(d)].size(); ++idx) {
            cd[off[static_cast<std::size_t>(d)] + idx] = d;
            cz[off[static_cast<std::size_t>(d)] + idx] = basis_[static_cast<std::size_t>(d)][idx];
        }
    std::vector<Poly> zeta;
    for (std::size_t i = 1; i <= m; ++i) {
        char buf[16];
        std::snprintf(buf, sizeof buf, "zeta%02lu", static_cast<unsigned long>(i));
        zeta.push_back(Poly::variable(buf));
    }
    // e_a * e_b expanded in the degree-(da+db) basis, memoized.
    std::map<std::pair<std::size_t, std::size_t>, std::vector<Rat>> cache;
    auto product = [&](std::size_t a, std::size_t b) -> const std::vector<Rat>& {
        auto key = std::minmax(a, b);
        auto it = cache.find(key);
        if (it == cache.end()) {
            int d = cd[a] + cd[b];
            std::vector<Rat> v(static_cast<std::size_t>(d) + 1, Rat(0));
            v[static_cast<std::size_t>(d - cz[a] - cz[b])] = 1;
            it = cache.emplace(key, reduce(d, std::move(v))).first;
        }
        return it->second;
    };
    std::vector<Poly> cur(total);
    for (std::size_t i = 0; i < m; ++i) cur[i] = zeta[i];
    Poly acc;
    for (int k = 2; k <= nu_; ++k) {
        std::vector<Poly> nxt(total);
        for (std::size_t a = 0; a < total; ++a) {
            if (cur[a].is_zero()) continue;
            for (std::size_t b = 0; b < m; ++b) {
                int d = cd[a] + cd[b];
                if (d > nu_) continue;
                const std::vector<Rat>& coords = product(a, b);
                Poly factor = cur[a] * zeta[b];
                for (std::size_t idx = 0; idx < coords.size(); ++idx) {
                    if (coords[idx] == 0) continue;
                    nxt[off[static_cast<std::size_t>(d)] + idx] += coords[idx] * factor;
                }
            }
        }
        cur = std::move(nxt);
        acc += Rat(Int(1), factorial(static_cast<unsigned>(k))) * cur[socle];
    }
    return -acc;
}

BinaryForm associated_form(const BinaryForm& q) {
    MilnorAlgebra a = MilnorAlgebra::build(q);
    int nu = a.nil_index();
    Poly z = Poly::variable("z");
    Poly w = Poly::variable("w");
    std::vector<Poly> coeffs(static_cast<std::size_t>(nu) + 1);
    for (int i = 0; i <= nu; ++i) {
        Rat lam = a.top_coordinate(z.pow(static_cast<unsigned>(i)) *
                                   w.pow(static_cast<unsigned>(nu - i)));
        coeffs[static_cast<std::size_t>(i)] =
            Poly(Rat(binomial(static_cast<unsigned>(nu), static_cast<unsigned>(i))) * lam);
    }
    BinaryForm out(nu, std::move(coeffs));
    if (out.is_zero()) throw std::logic_error("associated_form: vanished unexpectedly");
    return out;
}

std::optional<Rat> proportional(const BinaryForm& p, const BinaryForm& s) {
    if (p.degree() != s.degree())
        throw std::invalid_argument("proportional: degrees differ");
    if (p.is_zero() && s.is_zero()) throw std::domain_error("proportional: both forms are zero");
    if (p.is_zero()) return Rat(0);
    if (s.is_zero()) return std::nullopt;
    int k = 0;
    while (s.coeff(k).is_zero()) ++k;
    auto c = Poly::divide_exact(p.coeff(k), s.coeff(k));
    if (!c || !c->is_constant()) return std::nullopt;
    Rat cv = c->constant_value();
    if (p == s.scaled(cv)) return cv;
    return std::nullopt;
}

}  // namespace curvex
