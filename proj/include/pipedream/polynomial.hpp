#pragma once

// Exact polynomials in the deformation parameter beta, and polynomials in
// x_1..x_k whose coefficients are themselves beta-polynomials.

#include <cstddef>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "pipedream/integer.hpp"

namespace pipedream {

class NegativeExponent : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Polynomial in beta with exact integer coefficients, stored in ascending
/// powers without trailing zeros. The zero polynomial has no coefficients.
class BetaPolynomial {
 public:
  BetaPolynomial() = default;
  BetaPolynomial(Integer constant);  // NOLINT(google-explicit-constructor)
  BetaPolynomial(int constant) : BetaPolynomial(Integer(constant)) {}  // NOLINT
  explicit BetaPolynomial(std::vector<Integer> ascending);

  static BetaPolynomial beta_power(unsigned k);
  /// (1 + beta)^k
  static BetaPolynomial one_plus_beta_power(unsigned k);

  std::span<const Integer> coefficients() const { return coeffs_; }
  Integer coefficient(std::size_t power) const;
  Integer constant_term() const { return coefficient(0); }
  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool nonnegative() const;

  Integer evaluate(const Integer& beta) const;

  /// Divides by beta^k; throws NegativeExponent unless beta^k divides exactly.
  BetaPolynomial divided_by_beta_power(unsigned k) const;
  BetaPolynomial shifted(unsigned k) const;

  BetaPolynomial& operator+=(const BetaPolynomial& rhs);
  BetaPolynomial& operator-=(const BetaPolynomial& rhs);
  BetaPolynomial& operator*=(const BetaPolynomial& rhs);
  BetaPolynomial& operator*=(const Integer& scalar);
  friend BetaPolynomial operator+(BetaPolynomial a, const BetaPolynomial& b) { return a += b; }
  friend BetaPolynomial operator-(BetaPolynomial a, const BetaPolynomial& b) { return a -= b; }
  friend BetaPolynomial operator*(BetaPolynomial a, const BetaPolynomial& b) { return a *= b; }
  friend BetaPolynomial operator*(BetaPolynomial a, const Integer& s) { return a *= s; }
  friend bool operator==(const BetaPolynomial&, const BetaPolynomial&) = default;

  /// Text form with descending powers, e.g. "b^2+3b+3".
  std::string to_string() const;
  static BetaPolynomial parse(const std::string& text);

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const BetaPolynomial& p);

/// Exponent vector of a monomial in x_1..x_k.
using Exponents = std::vector<int>;

/// Orders monomials by ascending total degree, then with x_1 heaviest
/// (so x1 precedes x2 within a degree).
struct GradedMonomialOrder {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

class MultivariatePolynomial {
 public:
  explicit MultivariatePolynomial(int variables = 0) : variables_(variables) {}

  static MultivariatePolynomial constant(int variables, const BetaPolynomial& c);
  static MultivariatePolynomial monomial(const Exponents& exponents, const BetaPolynomial& c);

  int variables() const { return variables_; }
  const std::map<Exponents, BetaPolynomial, GradedMonomialOrder>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  BetaPolynomial coefficient(const Exponents& exponents) const;

  void add_term(const Exponents& exponents, const BetaPolynomial& c);
  MultivariatePolynomial& operator+=(const MultivariatePolynomial& rhs);
  MultivariatePolynomial& operator-=(const MultivariatePolynomial& rhs);
  MultivariatePolynomial& operator*=(const MultivariatePolynomial& rhs);
  friend MultivariatePolynomial operator+(MultivariatePolynomial a, const MultivariatePolynomial& b) { return a += b; }
  friend MultivariatePolynomial operator-(MultivariatePolynomial a, const MultivariatePolynomial& b) { return a -= b; }
  friend MultivariatePolynomial operator*(MultivariatePolynomial a, const MultivariatePolynomial& b) { return a *= b; }
  friend bool operator==(const MultivariatePolynomial&, const MultivariatePolynomial&) = default;

  /// Applies f(coefficient) to every beta-coefficient, e.g. division by beta^k.
  template <class F>
  MultivariatePolynomial map_coefficients(F&& f) const {
    MultivariatePolynomial out(variables_);
    for (const auto& [e, c] : terms_) out.add_term(e, f(c));
    return out;
  }

  /// Substitutes x_i := 1 for every i.
  BetaPolynomial at_all_ones() const;
  /// Substitutes beta := 0.
  MultivariatePolynomial at_beta_zero() const;

  /// Text form, e.g. "x1+x2+b*x1*x2".
  std::string to_string() const;

 private:
  int variables_;
  std::map<Exponents, BetaPolynomial, GradedMonomialOrder> terms_;
};

std::ostream& operator<<(std::ostream& os, const MultivariatePolynomial& p);

}  // namespace pipedream
