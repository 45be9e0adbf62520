#include "curvex/binary_form.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "curvex/linalg.hpp"

namespace curvex {

BinaryForm::BinaryForm(int degree, std::vector<Poly> coeffs)
    : degree_(degree), coeffs_(std::move(coeffs)) {
    if (degree_ < 0) throw std::invalid_argument("BinaryForm: negative degree");
    if (coeffs_.size() != static_cast<std::size_t>(degree_) + 1)
        throw std::invalid_argument("BinaryForm: expected degree+1 coefficients");
}

BinaryForm BinaryForm::zero(int degree) {
    return BinaryForm(degree, std::vector<Poly>(static_cast<std::size_t>(degree) + 1));
}

const Poly& BinaryForm::coeff(int i) const {
    if (i < 0 || i > degree_) throw std::out_of_range("BinaryForm::coeff");
    return coeffs_[static_cast<std::size_t>(i)];
}

Poly BinaryForm::abin(int i) const {
    Rat b(binomial(static_cast<unsigned>(degree_), static_cast<unsigned>(i)));
    return Rat(1) / b * coeff(i);
}

bool BinaryForm::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Poly& c) { return c.is_zero(); });
}

bool BinaryForm::has_rational_coeffs() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const Poly& c) { return c.is_constant(); });
}

std::vector<Rat> BinaryForm::rational_coeffs() const {
    std::vector<Rat> out;
    out.reserve(coeffs_.size());
    for (const Poly& c : coeffs_) out.push_back(c.constant_value());
    return out;
}

BinaryForm operator+(const BinaryForm& a, const BinaryForm& b) {
    if (a.degree_ != b.degree_)
        throw std::invalid_argument("BinaryForm sum: degree mismatch");
    std::vector<Poly> out(a.coeffs_);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += b.coeffs_[i];
    return BinaryForm(a.degree_, std::move(out));
}

BinaryForm operator-(const BinaryForm& a, const BinaryForm& b) {
    return a + b.scaled(Rat(-1));
}

BinaryForm operator*(const BinaryForm& a, const BinaryForm& b) {
    int n = a.degree_ + b.degree_;
    std::vector<Poly> out(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= a.degree_; ++i)
        for (int j = 0; j <= b.degree_; ++j)
            out[static_cast<std::size_t>(i + j)] += a.coeffs_[i] * b.coeffs_[j];
    return BinaryForm(n, std::move(out));
}

BinaryForm BinaryForm::scaled(const Poly& f) const {
    std::vector<Poly> out(coeffs_);
    for (Poly& c : out) c *= f;
    return BinaryForm(degree_, std::move(out));
}

BinaryForm BinaryForm::derivative(int dz, int dw) const {
    if (dz < 0 || dw < 0 || dz + dw > degree_)
        throw std::domain_error("BinaryForm::derivative: order exceeds degree");
    BinaryForm cur = *this;
    for (int k = 0; k < dz; ++k) {
        int n = cur.degree_;
        std::vector<Poly> out(static_cast<std::size_t>(n));
        for (int i = 1; i <= n; ++i) out[i - 1] = Rat(i) * cur.coeffs_[i];
        cur = BinaryForm(n - 1, std::move(out));
    }
    for (int k = 0; k < dw; ++k) {
        int n = cur.degree_;
        std::vector<Poly> out(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) out[i] = Rat(n - i) * cur.coeffs_[i];
        cur = BinaryForm(n - 1, std::move(out));
    }
    return cur;
}

Poly BinaryForm::to_poly(const std::string& z, const std::string& w) const {
    Poly zz = Poly::variable(z), ww = Poly::variable(w), acc;
    for (int i = 0; i <= degree_; ++i) {
        if (coeffs_[i].is_zero()) continue;
        acc += coeffs_[i] * zz.pow(static_cast<unsigned>(i)) *
               ww.pow(static_cast<unsigned>(degree_ - i));
    }
    return acc;
}

BinaryForm BinaryForm::from_poly(const Poly& p, const std::string& z, const std::string& w) {
    const auto& vars = p.vars();
    auto find = [&](const std::string& v) -> long {
        auto it = std::lower_bound(vars.begin(), vars.end(), v);
        return it != vars.end() && *it == v ? it - vars.begin() : -1;
    };
    long zi = find(z), wi = find(w);
    long n = -1;
    for (const auto& [m, c] : p.terms()) {
        long d = (zi >= 0 ? m[zi] : 0) + (wi >= 0 ? m[wi] : 0);
        if (n < 0) n = d;
        if (d != n)
            throw std::invalid_argument("from_poly: not homogeneous in {" + z + "," + w +
                                        "}: degrees " + std::to_string(n) + " and " +
                                        std::to_string(d) + " both occur");
    }
    if (n < 0) throw std::invalid_argument("from_poly: zero polynomial has no degree");
    std::vector<Poly> coeffs(static_cast<std::size_t>(n) + 1);
    for (const auto& [m, c] : p.terms()) {
        long ze = zi >= 0 ? m[zi] : 0;
        Mono rest = m;
        if (zi >= 0) rest[zi] = 0;
        if (wi >= 0) rest[wi] = 0;
        coeffs[ze] += Poly::from_terms(vars, {{rest, c}});
    }
    return BinaryForm(static_cast<int>(n), std::move(coeffs));
}

BinaryForm BinaryForm::substituted_params(const std::map<std::string, Poly>& bind) const {
    std::vector<Poly> out(coeffs_);
    for (Poly& c : out) c = c.substituted(bind);
    return BinaryForm(degree_, std::move(out));
}

BinaryForm BinaryForm::evaluated_params(const std::map<std::string, Rat>& bind) const {
    std::map<std::string, Poly> lift;
    for (const auto& [k, v] : bind) lift.emplace(k, Poly(v));
    return substituted_params(lift);
}

std::string BinaryForm::str(const std::string& z, const std::string& w) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree_; i >= 0; --i) {
        const Poly& c = coeffs_[i];
        if (c.is_zero()) continue;
        std::string mono;
        if (i > 0) mono += z + (i > 1 ? "^" + std::to_string(i) : "");
        if (i < degree_ && degree_ - i > 0) {
            if (!mono.empty()) mono += "*";
            mono += w + (degree_ - i > 1 ? "^" + std::to_string(degree_ - i) : "");
        }
        if (c.term_count() == 1) {
            Rat lc = c.leading_coefficient();
            Poly ac = lc < 0 ? -c : c;
            os << (first ? (lc < 0 ? "-" : "") : (lc < 0 ? " - " : " + "));
            bool unit = ac.is_constant() && ac.constant_value() == 1;
            if (!unit || mono.empty()) os << ac.str();
            if (!mono.empty()) os << (unit ? "" : "*") << mono;
        } else {
            os << (first ? "" : " + ") << "(" << c.str() << ")";
            if (!mono.empty()) os << "*" << mono;
        }
        first = false;
    }
    return os.str();
}

BinaryForm act(const LinearMap2& m, const BinaryForm& q) {
    Rat dt = m.det();
    if (dt == 0) throw std::domain_error("act: singular linear map");
    int n = q.degree();
    // Q(m^{-1} v) = Q(adj(m) v) / det^n with adj = [[d, -b], [-c, a]]:
    //   z -> d z - b w,  w -> -c z + a w.
    auto pows = [](const Rat& u, const Rat& v, int top) {
        // (u z + v w)^k for k = 0..top, as plain coefficient vectors.
        std::vector<std::vector<Rat>> p(static_cast<std::size_t>(top) + 1);
        p[0] = {Rat(1)};
        for (int k = 1; k <= top; ++k) {
            p[k].assign(static_cast<std::size_t>(k) + 1, Rat(0));
            for (int j = 0; j < k; ++j) {
                p[k][j + 1] += u * p[k - 1][j];
                p[k][j] += v * p[k - 1][j];
            }
        }
        return p;
    };
    auto zp = pows(m.d, -m.b, n), wp = pows(-m.c, m.a, n);
    std::vector<Poly> out(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        if (q.coeff(i).is_zero()) continue;
        const auto &a = zp[i], &b = wp[n - i];
        for (std::size_t ja = 0; ja < a.size(); ++ja)
            for (std::size_t jb = 0; jb < b.size(); ++jb) {
                Rat f = a[ja] * b[jb];
                if (f != 0) out[ja + jb] += f * q.coeff(i);
            }
    }
    Rat scale = Rat(1) / rat_pow(dt, n);
    for (Poly& c : out) c = scale * c;
    return BinaryForm(n, std::move(out));
}

BinaryForm from_roots(const std::vector<std::pair<Rat, Rat>>& root_pairs) {
    BinaryForm acc(0, {Poly(Rat(1))});
    for (const auto& [alpha, beta] : root_pairs) {
        if (alpha == 0 && beta == 0)
            throw std::domain_error("from_roots: (0:0) is not a projective point");
        acc = acc * BinaryForm(1, {Poly(-alpha), Poly(beta)});
    }
    return acc;
}

BinaryForm transvectant(const BinaryForm& p, const BinaryForm& s, int r) {
    if (r < 0 || r > std::min(p.degree(), s.degree()))
        throw std::domain_error("transvectant: order must satisfy 0 <= r <= min degree");
    BinaryForm acc = BinaryForm::zero(p.degree() + s.degree() - 2 * r);
    for (int i = 0; i <= r; ++i) {
        Rat c(binomial(static_cast<unsigned>(r), static_cast<unsigned>(i)));
        if (i % 2) c = -c;
        acc = acc + (p.derivative(r - i, i) * s.derivative(i, r - i)).scaled(c);
    }
    return acc;
}

BinaryForm hessian(const BinaryForm& q) {
    if (q.degree() < 2) throw std::domain_error("hessian: degree must be at least 2");
    return q.derivative(2, 0) * q.derivative(0, 2) -
           q.derivative(1, 1) * q.derivative(1, 1);
}

Poly resultant(const BinaryForm& p, const BinaryForm& s) {
    if (p.is_zero() || s.is_zero())
        throw std::domain_error("resultant: both forms must be nonzero");
    int m = p.degree(), l = s.degree();
    std::size_t n = static_cast<std::size_t>(m + l);
    PolyMatrix mat(n, std::vector<Poly>(n));
    for (int r = 0; r < l; ++r)                 // p-rows, highest z-power first
        for (int j = 0; j <= m; ++j) mat[r][r + j] = p.coeff(m - j);
    for (int r = 0; r < m; ++r)
        for (int j = 0; j <= l; ++j) mat[l + r][r + j] = s.coeff(l - j);
    return det_fraction_free(std::move(mat));
}

namespace {

std::string univ_var(int i) {
    std::ostringstream os;
    os << "#u" << (i < 10 ? "0" : "") << i;
    return os.str();
}

}  // namespace

const Poly& universal_discriminant(int degree) {
    if (degree < 2 || degree > 6)
        throw std::domain_error("universal_discriminant: degree must be in [2,6]");
    static std::mutex mu;
    static std::map<int, Poly> cache;
    std::scoped_lock lock(mu);
    auto it = cache.find(degree);
    if (it != cache.end()) return it->second;

    std::vector<Poly> coeffs;
    for (int i = 0; i <= degree; ++i) coeffs.push_back(Poly::variable(univ_var(i)));
    BinaryForm generic(degree, std::move(coeffs));
    Poly res = resultant(generic, generic.derivative(1, 0));
    Poly divisor = Rat(int_pow(Int(degree), static_cast<unsigned long>(degree))) *
                   Poly::variable(univ_var(degree));
    auto q = Poly::divide_exact(res, divisor);
    if (!q) throw std::logic_error("universal_discriminant: normalization not exact");
    return cache.emplace(degree, std::move(*q)).first->second;
}

Poly discriminant(const BinaryForm& q) {
    int n = q.degree();
    if (n == 0) throw std::domain_error("discriminant: undefined for degree 0");
    if (n == 1) return Poly(Rat(1));
    if (n <= 6) {
        std::map<std::string, Poly> bind;
        for (int i = 0; i <= n; ++i) bind.emplace(univ_var(i), q.coeff(i));
        return universal_discriminant(n).substituted(bind);
    }
    // Large degrees: keep only the leading coefficient symbolic, divide the
    // resultant by n^n * x (exact as a polynomial in x), then specialize
    // x -> c_n. Agrees with the all-symbolic discriminant, including c_n = 0.
    const std::string lead = "#x";
    std::vector<Poly> coeffs(q.coeffs());
    coeffs[static_cast<std::size_t>(n)] = Poly::variable(lead);
    BinaryForm qx(n, std::move(coeffs));
    Poly res = resultant(qx, qx.derivative(1, 0));
    Poly divisor =
        Rat(int_pow(Int(n), static_cast<unsigned long>(n))) * Poly::variable(lead);
    auto quot = Poly::divide_exact(res, divisor);
    if (!quot) throw std::logic_error("discriminant: normalization not exact");
    return quot->substituted({{lead, q.coeff(n)}});
}

bool is_square_free(const BinaryForm& q) {
    if (q.is_zero()) throw std::domain_error("is_square_free: zero form");
    if (q.degree() <= 1) return true;
    return !discriminant(q).is_zero();
}

}  // namespace curvex
