#ifndef CURVEX_POLY_HPP
#define CURVEX_POLY_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "curvex/rational.hpp"

namespace curvex {

// Exponent vector, aligned index-for-index with the owning Poly's vars().
using Mono = std::vector<std::uint16_t>;

// Sparse multivariate polynomial over Rat.
//
// Canonical representation: vars() is sorted and contains exactly the
// variables that occur in some term; terms are ordered graded-lex descending
// (total degree first, then earlier variable wins); no zero coefficients.
// Equality is therefore plain memberwise comparison.
class Poly {
public:
    Poly() = default;  // zero
    explicit Poly(const Rat& c);
    explicit Poly(long c);
    static Poly variable(const std::string& name);
    static Poly from_terms(std::vector<std::string> vars,
                           std::vector<std::pair<Mono, Rat>> terms);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    const Rat& constant_value() const;  // requires is_constant()
    long total_degree() const;          // zero polynomial: -1
    long degree_in(const std::string& var) const;
    std::size_t term_count() const { return terms_.size(); }
    const std::vector<std::string>& vars() const { return vars_; }
    const std::vector<std::pair<Mono, Rat>>& terms() const { return terms_; }
    Rat leading_coefficient() const;  // graded-lex leading term; zero: 0
    Rat content() const;              // positive gcd of coefficients; zero: 0

    Poly operator-() const;
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Rat& c, const Poly& p);
    Poly pow(unsigned e) const;
    friend bool operator==(const Poly& a, const Poly& b) = default;

    // Quotient num/den when division is exact over Rat[...]; nullopt otherwise.
    // den must be nonzero.
    static std::optional<Poly> divide_exact(const Poly& num, const Poly& den);

    Poly derivative(const std::string& var) const;
    Poly substituted(const std::map<std::string, Poly>& bind) const;
    Rat evaluate(const std::map<std::string, Rat>& bind) const;  // all vars bound
    std::string str() const;

private:
    std::vector<std::string> vars_;
    std::vector<std::pair<Mono, Rat>> terms_;

    void normalize();
};

bool grlex_less(const Mono& a, const Mono& b);

}  // namespace curvex

#endif
