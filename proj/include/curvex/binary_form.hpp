#ifndef CURVEX_BINARY_FORM_HPP
#define CURVEX_BINARY_FORM_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "curvex/poly.hpp"
#include "curvex/rational.hpp"

namespace curvex {

// Homogeneous binary form of fixed degree n,
//
//   Q(z, w) = sum_{i=0..n} coeff(i) * z^i * w^(n-i).
//
// Coefficients are Poly so that forms may carry parameters. abin(i) is the
// coefficient in the binomial convention, coeff(i) = C(n,i) * abin(i).
class BinaryForm {
public:
    BinaryForm(int degree, std::vector<Poly> coeffs);
    static BinaryForm zero(int degree);

    int degree() const { return degree_; }
    const Poly& coeff(int i) const;
    Poly abin(int i) const;
    const std::vector<Poly>& coeffs() const { return coeffs_; }
    bool is_zero() const;
    bool has_rational_coeffs() const;
    std::vector<Rat> rational_coeffs() const;  // requires has_rational_coeffs()

    friend BinaryForm operator+(const BinaryForm& a, const BinaryForm& b);
    friend BinaryForm operator-(const BinaryForm& a, const BinaryForm& b);
    friend BinaryForm operator*(const BinaryForm& a, const BinaryForm& b);
    friend bool operator==(const BinaryForm& a, const BinaryForm& b) = default;
    BinaryForm scaled(const Poly& f) const;
    BinaryForm scaled(const Rat& f) const { return scaled(Poly(f)); }

    // Mixed partial d^(dz+dw) Q / dz^dz dw^dw; requires dz + dw <= degree.
    BinaryForm derivative(int dz, int dw) const;

    Poly to_poly(const std::string& z = "z", const std::string& w = "w") const;
    // p must be homogeneous of one degree in {z, w}; remaining variables
    // become parameters.
    static BinaryForm from_poly(const Poly& p, const std::string& z = "z",
                                const std::string& w = "w");

    BinaryForm substituted_params(const std::map<std::string, Poly>& bind) const;
    BinaryForm evaluated_params(const std::map<std::string, Rat>& bind) const;
    std::string str(const std::string& z = "z", const std::string& w = "w") const;

private:
    int degree_;
    std::vector<Poly> coeffs_;  // size degree_ + 1
};

// Invertible 2x2 matrix [[a, b], [c, d]] acting on column vectors (z, w).
struct LinearMap2 {
    Rat a, b, c, d;
    Rat det() const { return a * d - b * c; }
    friend bool operator==(const LinearMap2&, const LinearMap2&) = default;
};

// Left action (act(m, Q))(v) = Q(m^{-1} v); requires det(m) != 0.
BinaryForm act(const LinearMap2& m, const BinaryForm& q);

// prod_j (beta_j z - alpha_j w) for projective root pairs (alpha_j : beta_j).
BinaryForm from_roots(const std::vector<std::pair<Rat, Rat>>& root_pairs);

// r-th transvectant, bare Omega-process sum without outer normalization:
//   (p, s)^(r) = sum_{i=0..r} (-1)^i C(r,i) d^r p/dz^(r-i)dw^i * d^r s/dz^i dw^(r-i).
// Requires 0 <= r <= min(deg p, deg s); result degree deg p + deg s - 2r.
BinaryForm transvectant(const BinaryForm& p, const BinaryForm& s, int r);

// q_zz q_ww - q_zw^2, degree 2(deg q - 2); requires deg q >= 2.
BinaryForm hessian(const BinaryForm& q);

// Sylvester resultant of p, s taken as forms of their stated degrees
// (deg s rows of p-coefficients first, then deg p rows of s-coefficients,
// both written highest z-power leftmost). Requires p, s nonzero.
Poly resultant(const BinaryForm& p, const BinaryForm& s);

// Total discriminant, normalized so that for Q with leading coefficient
// c_n != 0,  disc(Q) = resultant(Q, dQ/dz) / (n^n * abin(n)).  Defined as a
// polynomial in all coefficients, hence valid also when c_n = 0.
// Degree 1 forms: 1. Degree 0: domain_error.
Poly discriminant(const BinaryForm& q);

// disc(q) != 0; for parametric q this reads "for generic parameter values".
// Requires q nonzero.
bool is_square_free(const BinaryForm& q);

// Discriminant of the generic degree-n form in coefficient variables
// "#u00".."#u0n"; cached per degree. Supported for 2 <= n <= 6; higher
// degrees go through the specialized path inside discriminant().
const Poly& universal_discriminant(int degree);

}  // namespace curvex

#endif
