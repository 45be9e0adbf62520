#ifndef CURVEX_MILNOR_HPP
#define CURVEX_MILNOR_HPP

#include <optional>
#include <vector>

#include "curvex/binary_form.hpp"
#include "curvex/linalg.hpp"

namespace curvex {

// Graded quotient C[z,w] / (dq/dz, dq/dw) for a square-free form q with
// rational coefficients. Graded pieces vanish above nu = 2(deg q - 2); the
// degree-nu piece (the socle) is one-dimensional and spanned by the Hessian.
class MilnorAlgebra {
public:
    // deg q >= 3. Throws domain_error when q is not square-free, detected by
    // the rank deficit surviving past degree nu; the discriminant is never
    // consulted.
    static MilnorAlgebra build(const BinaryForm& q);

    const BinaryForm& source() const { return source_; }
    int nil_index() const { return nu_; }
    const std::vector<int>& hilbert() const { return hilbert_; }
    int dimension() const;
    // Classes of degree 1..nu-1, the kernel of the socle coordinate inside
    // the maximal ideal; equals dimension() - 2.
    int kernel_dim() const;

    // Monomial basis of the degree-d piece: z-exponents e of the surviving
    // monomials z^e w^(d-e), e descending.
    const std::vector<std::vector<int>>& basis() const { return basis_; }

    // Coordinates in the degree-d basis of a dense degree-d vector
    // (coeffs[j] multiplies z^(d-j) w^j). Degrees above nu reduce to zero and
    // yield an empty vector.
    std::vector<Rat> reduce(int d, std::vector<Rat> coeffs) const;

    // Per-degree coordinates of the class of p; p may involve only z and w.
    std::vector<std::vector<Rat>> normal_form(const Poly& p) const;

    // Coordinate on the socle class.
    Rat top_coordinate(const Poly& p) const;

    // The socle is spanned by the Hessian and the degree-1 pairing into
    // degree nu-1 is nondegenerate.
    bool annihilator_check() const;

    // Nil-polynomial in zeta01..zeta<m>, m = kernel_dim():
    //   P(zeta) = -sum_{k=2..nu} pi(u^k) / k!,  u = sum_i zeta_i e_i
    // over the degree-1..nu-1 basis classes, pi the socle coordinate.
    Poly s_pi_polynomial() const;

private:
    MilnorAlgebra() = default;

    struct DegreeData {
        Rref red;
        std::vector<int> nonpivot;  // column indices, ascending
    };

    BinaryForm source_ = BinaryForm::zero(3);
    int nu_ = 0;
    std::vector<int> hilbert_;
    std::vector<std::vector<int>> basis_;
    std::vector<DegreeData> deg_;  // 0..nu+1
};

// Form of degree nu with coeff(i) = C(nu,i) * (socle coordinate of
// z^i w^(nu-i)); proportional to the associated form in any convention.
// Requires q square-free with rational coefficients.
BinaryForm associated_form(const BinaryForm& q);

// The scalar c with p = c * s, if one exists. Degrees must match; both zero
// is a domain_error.
std::optional<Rat> proportional(const BinaryForm& p, const BinaryForm& s);

}  // namespace curvex

#endif
