#pragma once

// Alexander polynomials of torus knots: the rational formula and the
// closed-form families for q = pn +- 1 and five-strand knots.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string_view>

#include "turaev/laurent.hpp"

namespace turaev {

class NotCoprime : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class UnsupportedFamily : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Torus knot parameters. Order is irrelevant (T_{p,q} = T_{q,p}).
struct TorusKnotParams {
  std::int64_t p = 1;
  std::int64_t q = 1;

  /// (min, max) of the pair.
  TorusKnotParams normalized() const noexcept;
  bool coprime() const noexcept;
  friend bool operator==(const TorusKnotParams&, const TorusKnotParams&) = default;
};

std::int64_t gcd(std::int64_t a, std::int64_t b) noexcept;

enum class Family {
  odd_p_plus,    // p = 2k+1, q = pn+1
  odd_p_minus,   // p = 2k+1, q = pn-1
  even_p_plus,   // p = 2k,   q = pn+1
  even_p_minus,  // p = 2k,   q = pn-1
  five_plus_two,    // T_{5,5n+2}
  five_plus_three,  // T_{5,5n+3}
};

std::string_view family_name(Family f) noexcept;

/// A member of one of the closed-form families. For the two five-strand
/// families p is always 5.
struct FamilyId {
  Family family = Family::odd_p_plus;
  std::int64_t p = 3;
  std::int64_t n = 1;

  /// k with p = 2k+1 (odd families) or p = 2k (even families).
  std::int64_t k() const noexcept { return p / 2; }
  /// Throws UnsupportedFamily when the parameters do not name a torus knot
  /// (parity mismatch, p < 1, n < 0, or q < 1).
  std::int64_t q() const;
  TorusKnotParams params() const { return {p, q()}; }
};

/// Families that contain T_{p,q}, trying both orders of the pair.
std::optional<FamilyId> classify(TorusKnotParams params);

/// Symmetrized Alexander polynomial from
/// t^{-(p-1)(q-1)/2} (t^{pq}-1)(t-1) / ((t^p-1)(t^q-1)).
/// Throws NotCoprime when gcd(p, q) != 1 and std::invalid_argument for p or q < 1.
LaurentPolynomial alexander_torus(TorusKnotParams params);

/// Closed-form Laurent expansion for a family member; n = 0 routes to
/// alexander_torus. Throws UnsupportedFamily for invalid parameters.
LaurentPolynomial alexander_closed_form(const FamilyId& family);

}  // namespace turaev
