#ifndef QWALK_LAURENT_HPP
#define QWALK_LAURENT_HPP

#include <optional>
#include <string>
#include <vector>

#include "qwalk/rational.hpp"

namespace qwalk {

enum class Var { x, y };

inline const char* var_name(Var v) { return v == Var::x ? "x" : "y"; }

/* Laurent polynomial in one variable over Q, stored densely on the exponent
 * range [lo, lo+size). Normalized so the first and last stored coefficients
 * are nonzero; the zero polynomial has an empty coefficient vector. The
 * variable tag only matters once a polynomial is non-constant: constants and
 * zero combine freely with either variable. */
class LaurentPolynomial {
  public:
    LaurentPolynomial() = default;
    explicit LaurentPolynomial(Var v) : var_(v) {}

    static LaurentPolynomial zero(Var v = Var::x) { return LaurentPolynomial(v); }
    static LaurentPolynomial constant(const Rational& c, Var v = Var::x);
    static LaurentPolynomial monomial(Var v, long exp, const Rational& c);
    /* coeffs[i] is the coefficient of v^(lo+i). */
    static LaurentPolynomial from_coeffs(Var v, long lo, std::vector<Rational> coeffs);

    Var var() const { return var_; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.empty() || (lo_ == 0 && coeffs_.size() == 1); }
    bool is_monomial() const { return coeffs_.size() == 1; }

    long lo() const;  // valuation; throws on zero
    long hi() const;  // degree; throws on zero
    const Rational& coeff(long exp) const;
    Rational constant_term() const { return coeff(0); }

    size_t term_count() const;

    LaurentPolynomial& operator+=(const LaurentPolynomial& o);
    LaurentPolynomial& operator-=(const LaurentPolynomial& o);
    friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
    friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
    friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
    LaurentPolynomial operator-() const;
    LaurentPolynomial& operator*=(const Rational& c);
    friend LaurentPolynomial operator*(LaurentPolynomial a, const Rational& c) { return a *= c; }

    bool operator==(const LaurentPolynomial& o) const;
    bool operator!=(const LaurentPolynomial& o) const { return !(*this == o); }

    /* v -> 1/v. */
    LaurentPolynomial mirror() const;
    /* Multiply by v^k. */
    LaurentPolynomial shifted(long k) const;
    /* Keep exponents in [from, to] only. */
    LaurentPolynomial restricted(long from, long to) const;
    LaurentPolynomial nonneg_part() const;
    LaurentPolynomial nonpos_part() const;

    /* Multiplicative inverse; only monomials have one in this ring. */
    std::optional<LaurentPolynomial> inverse() const;
    /* Exact division; nullopt if the quotient is not a Laurent polynomial. */
    std::optional<LaurentPolynomial> divide_exact(const LaurentPolynomial& d) const;
    /* Remainder of the polynomial part under division by a (non-Laurent)
     * divisor with invertible leading coefficient; requires lo() >= 0. */
    LaurentPolynomial poly_mod(const LaurentPolynomial& d) const;

    Rational evaluate(const Rational& v) const;
    bool symmetric_under_mirror() const { return *this == mirror(); }

    std::string str() const;

  private:
    void normalize();
    bool compatible(const LaurentPolynomial& o) const;

    Var var_ = Var::x;
    long lo_ = 0;
    std::vector<Rational> coeffs_;
};

}  // namespace qwalk

#endif
