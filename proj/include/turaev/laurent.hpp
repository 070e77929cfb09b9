#pragma once

// Exact one-variable Laurent polynomials with 64-bit integer coefficients.

#include <cstdint>
#include <initializer_list>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace turaev {

class NonExactDivision : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class PolynomialParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Dense Laurent polynomial sum_i coeffs[i] * t^(min_exponent + i).
///
/// Always normalized: the first and last stored coefficients are nonzero, and
/// the zero polynomial has no coefficients (and min_exponent 0). Values are
/// immutable through the public interface, so they can be shared freely
/// between threads.
class LaurentPolynomial {
 public:
  using Coeff = std::int64_t;

  LaurentPolynomial() = default;

  /// Builds from dense coefficients starting at t^min_exponent; normalizes.
  LaurentPolynomial(std::int64_t min_exponent, std::vector<Coeff> coeffs);

  /// Sparse construction from (exponent, coefficient) pairs; repeated
  /// exponents are summed.
  static LaurentPolynomial from_terms(
      std::initializer_list<std::pair<std::int64_t, Coeff>> terms);
  static LaurentPolynomial from_terms(const std::vector<std::pair<std::int64_t, Coeff>>& terms);

  static LaurentPolynomial constant(Coeff c);
  static LaurentPolynomial monomial(std::int64_t exponent, Coeff c = 1);

  /// t^exponent - 1
  static LaurentPolynomial binomial(std::int64_t exponent);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  std::int64_t min_exponent() const noexcept { return min_exp_; }
  /// Highest exponent; equals min_exponent() - 1 for the zero polynomial.
  std::int64_t max_exponent() const noexcept {
    return min_exp_ + static_cast<std::int64_t>(coeffs_.size()) - 1;
  }
  const std::vector<Coeff>& coefficients() const noexcept { return coeffs_; }
  Coeff coeff(std::int64_t exponent) const noexcept;
  std::size_t term_count() const noexcept;

  /// Nonzero terms in ascending exponent order.
  std::vector<std::pair<std::int64_t, Coeff>> terms() const;
  std::map<std::int64_t, Coeff> term_map() const;

  LaurentPolynomial shifted(std::int64_t by) const;

  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

 private:
  void normalize();

  std::int64_t min_exp_ = 0;
  std::vector<Coeff> coeffs_;
};

LaurentPolynomial add(const LaurentPolynomial& a, const LaurentPolynomial& b);
LaurentPolynomial sub(const LaurentPolynomial& a, const LaurentPolynomial& b);
LaurentPolynomial mul(const LaurentPolynomial& a, const LaurentPolynomial& b);
LaurentPolynomial negate(const LaurentPolynomial& a);

/// Returns q with num == q * den. Throws NonExactDivision when the remainder
/// is nonzero or a quotient coefficient would not be an integer, and
/// std::invalid_argument when den is zero.
LaurentPolynomial exact_div(const LaurentPolynomial& num, const LaurentPolynomial& den);

bool is_palindromic(const LaurentPolynomial& p);

inline LaurentPolynomial operator+(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  return add(a, b);
}
inline LaurentPolynomial operator-(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  return sub(a, b);
}
inline LaurentPolynomial operator-(const LaurentPolynomial& a) { return negate(a); }
inline LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  return mul(a, b);
}

/// Renders in ascending exponent order, e.g. "t^{-6}-t^{-5}+t^{-2}-1+t^2-t^5+t^6".
/// Exponents are braced when negative or multi-digit; the zero polynomial is "0".
std::string to_string(const LaurentPolynomial& p);

/// Parses the to_string syntax. Also accepts unbraced exponents, whitespace,
/// an optional '*' between coefficient and t, and terms in any order.
LaurentPolynomial parse_laurent(std::string_view text);

}  // namespace turaev
