#include "turaev/alexander.hpp"

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

namespace turaev {

std::int64_t gcd(std::int64_t a, std::int64_t b) noexcept {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b != 0) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

TorusKnotParams TorusKnotParams::normalized() const noexcept {
  return {std::min(p, q), std::max(p, q)};
}

bool TorusKnotParams::coprime() const noexcept { return gcd(p, q) == 1; }

std::string_view family_name(Family f) noexcept {
  switch (f) {
    case Family::odd_p_plus: return "odd-p q=pn+1";
    case Family::odd_p_minus: return "odd-p q=pn-1";
    case Family::even_p_plus: return "even-p q=pn+1";
    case Family::even_p_minus: return "even-p q=pn-1";
    case Family::five_plus_two: return "T(5,5n+2)";
    case Family::five_plus_three: return "T(5,5n+3)";
  }
  return "unknown";
}

std::int64_t FamilyId::q() const {
  auto reject = [&](const char* why) {
    throw UnsupportedFamily(std::string("family ") + std::string(family_name(family)) +
                            " with p=" + std::to_string(p) + ", n=" + std::to_string(n) + ": " +
                            why);
  };
  if (p < 1) reject("p must be positive");
  if (n < 0) reject("n must be non-negative");
  std::int64_t q = 0;
  switch (family) {
    case Family::odd_p_plus:
    case Family::odd_p_minus:
      if (p % 2 == 0) reject("p must be odd");
      q = family == Family::odd_p_plus ? p * n + 1 : p * n - 1;
      break;
    case Family::even_p_plus:
    case Family::even_p_minus:
      if (p % 2 != 0) reject("p must be even");
      q = family == Family::even_p_plus ? p * n + 1 : p * n - 1;
      break;
    case Family::five_plus_two:
    case Family::five_plus_three:
      if (p != 5) reject("p must be 5");
      q = family == Family::five_plus_two ? 5 * n + 2 : 5 * n + 3;
      break;
  }
  if (q < 1) reject("q must be positive");
  return q;
}

std::optional<FamilyId> classify(TorusKnotParams params) {
  const auto [lo, hi] = params.normalized();
  if (lo < 2 || gcd(lo, hi) != 1) return std::nullopt;
  for (auto [a, b] : {std::pair{lo, hi}, std::pair{hi, lo}}) {
    const bool odd = a % 2 == 1;
    if (b % a == 1) {
      return FamilyId{odd ? Family::odd_p_plus : Family::even_p_plus, a, b / a};
    }
    if (b % a == a - 1) {
      return FamilyId{odd ? Family::odd_p_minus : Family::even_p_minus, a, (b + 1) / a};
    }
    if (a == 5 && b % 5 == 2) return FamilyId{Family::five_plus_two, 5, b / 5};
    if (a == 5 && b % 5 == 3) return FamilyId{Family::five_plus_three, 5, b / 5};
  }
  return std::nullopt;
}

LaurentPolynomial alexander_torus(TorusKnotParams params) {
  const auto [p, q] = params;
  if (p < 1 || q < 1) throw std::invalid_argument("alexander_torus: p and q must be positive");
  if (gcd(p, q) != 1) {
    throw NotCoprime("alexander_torus: gcd(" + std::to_string(p) + ", " + std::to_string(q) +
                     ") != 1");
  }
  if (p == 1 || q == 1) return LaurentPolynomial::constant(1);
  // (t^{pq} - 1)(t - 1) = t^{pq+1} - t^{pq} - t + 1
  const auto num = mul(LaurentPolynomial::binomial(p * q), LaurentPolynomial::binomial(1));
  const auto partial = exact_div(num, LaurentPolynomial::binomial(p));
  const auto full = exact_div(partial, LaurentPolynomial::binomial(q));
  return full.shifted(-(p - 1) * (q - 1) / 2);
}

namespace {

using Terms = std::vector<std::pair<std::int64_t, LaurentPolynomial::Coeff>>;

// sign * t^base * (t^{eps*i} - 1)
void add_pair(Terms& out, std::int64_t base, std::int64_t step, std::int64_t sign = 1) {
  out.emplace_back(base + step, sign);
  out.emplace_back(base, -sign);
}

LaurentPolynomial odd_plus(std::int64_t p, std::int64_t n) {
  const std::int64_t k = p / 2;
  Terms t{{0, 1}};
  for (std::int64_t eps : {1, -1}) {
    for (std::int64_t i = 1; i <= k; ++i) {
      for (std::int64_t j = 0; j < n; ++j) {
        add_pair(t, eps * (p * ((k - i + 1) * n - j) - i), eps * i);
      }
    }
  }
  return LaurentPolynomial::from_terms(t);
}

LaurentPolynomial odd_minus(std::int64_t p, std::int64_t n) {
  const std::int64_t k = p / 2;
  Terms t{{0, 1}};
  for (std::int64_t eps : {1, -1}) {
    for (std::int64_t i = 1; i <= k; ++i) {
      for (std::int64_t j = 0; j < n; ++j) {
        add_pair(t, eps * p * ((k - i + 1) * n - j - 1), eps * i);
      }
    }
  }
  return LaurentPolynomial::from_terms(t);
}

// Even-p forms. The pair sums carry no global sign, and the alternating tail
// sum_{i} (-1)^{...} t^{eps*i*k} is anchored by a constant term; both were
// pinned against the rational formula.
LaurentPolynomial even_plus(std::int64_t p, std::int64_t n) {
  const std::int64_t k = p / 2;
  Terms t{{0, n % 2 == 0 ? 1 : -1}};
  for (std::int64_t eps : {1, -1}) {
    for (std::int64_t i = 1; i <= k - 1; ++i) {
      for (std::int64_t j = 0; j < n; ++j) {
        add_pair(t, eps * (p * ((k - i + 1) * n - j) - k * n - i), eps * i);
      }
    }
    for (std::int64_t i = 1; i <= n; ++i) {
      t.emplace_back(eps * i * k, (n - i) % 2 == 0 ? 1 : -1);
    }
  }
  return LaurentPolynomial::from_terms(t);
}

LaurentPolynomial even_minus(std::int64_t p, std::int64_t n) {
  const std::int64_t k = p / 2;
  Terms t{{0, (n - 1) % 2 == 0 ? 1 : -1}};
  for (std::int64_t eps : {1, -1}) {
    for (std::int64_t i = 1; i <= k - 1; ++i) {
      for (std::int64_t j = 0; j < n; ++j) {
        add_pair(t, eps * (p * ((k - i) * n - j - 1) + k * n), eps * i);
      }
    }
    for (std::int64_t i = 1; i <= n - 1; ++i) {
      t.emplace_back(eps * i * k, (n - i - 1) % 2 == 0 ? 1 : -1);
    }
  }
  return LaurentPolynomial::from_terms(t);
}

// t^{eps*base} (t^{4eps} - t^{3eps} + t^{eps} - 1)
void add_quad(Terms& out, std::int64_t base, std::int64_t eps) {
  out.emplace_back(base + 4 * eps, 1);
  out.emplace_back(base + 3 * eps, -1);
  out.emplace_back(base + eps, 1);
  out.emplace_back(base, -1);
}

LaurentPolynomial five_plus_two(std::int64_t n) {
  Terms t{{0, 1}};
  for (std::int64_t eps : {1, -1}) {
    for (std::int64_t j = 0; j <= n; ++j) add_pair(t, eps * (10 * n - 5 * j + 1), eps);
    for (std::int64_t j = 0; j <= n - 1; ++j) add_quad(t, eps * (5 * n - 5 * j - 4), eps);
  }
  return LaurentPolynomial::from_terms(t);
}

LaurentPolynomial five_plus_three(std::int64_t n) {
  Terms t{{0, 1}};
  for (std::int64_t eps : {1, -1}) {
    for (std::int64_t j = 0; j <= n - 1; ++j) add_pair(t, eps * (10 * n - 5 * j + 3), eps);
    for (std::int64_t j = 0; j <= n; ++j) add_quad(t, eps * (5 * n - 5 * j), eps);
  }
  return LaurentPolynomial::from_terms(t);
}

}  // namespace

LaurentPolynomial alexander_closed_form(const FamilyId& family) {
  const std::int64_t q = family.q();  // validates
  if (family.n == 0) return alexander_torus({family.p, q});
  switch (family.family) {
    case Family::odd_p_plus: return odd_plus(family.p, family.n);
    case Family::odd_p_minus: return odd_minus(family.p, family.n);
    case Family::even_p_plus: return even_plus(family.p, family.n);
    case Family::even_p_minus: return even_minus(family.p, family.n);
    case Family::five_plus_two: return five_plus_two(family.n);
    case Family::five_plus_three: return five_plus_three(family.n);
  }
  throw UnsupportedFamily("alexander_closed_form: unknown family");
}

}  // namespace turaev
