#include "turaev/laurent.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <cstdlib>
#include <span>

#include "turaev/kernels.hpp"

namespace turaev {

LaurentPolynomial::LaurentPolynomial(std::int64_t min_exponent, std::vector<Coeff> coeffs)
    : min_exp_(min_exponent), coeffs_(std::move(coeffs)) {
  normalize();
}

void LaurentPolynomial::normalize() {
  auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](Coeff c) { return c != 0; });
  if (first == coeffs_.end()) {
    coeffs_.clear();
    min_exp_ = 0;
    return;
  }
  auto last = std::find_if(coeffs_.rbegin(), coeffs_.rend(), [](Coeff c) { return c != 0; });
  coeffs_.erase(last.base(), coeffs_.end());
  const auto lead = first - coeffs_.begin();
  if (lead > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + lead);
    min_exp_ += lead;
  }
}

LaurentPolynomial LaurentPolynomial::from_terms(
    std::initializer_list<std::pair<std::int64_t, Coeff>> terms) {
  return from_terms(std::vector<std::pair<std::int64_t, Coeff>>(terms));
}

LaurentPolynomial LaurentPolynomial::from_terms(
    const std::vector<std::pair<std::int64_t, Coeff>>& terms) {
  if (terms.empty()) return {};
  std::int64_t lo = terms.front().first;
  std::int64_t hi = lo;
  for (const auto& [e, c] : terms) {
    lo = std::min(lo, e);
    hi = std::max(hi, e);
  }
  std::vector<Coeff> dense(static_cast<std::size_t>(hi - lo + 1), 0);
  for (const auto& [e, c] : terms) dense[static_cast<std::size_t>(e - lo)] += c;
  return LaurentPolynomial(lo, std::move(dense));
}

LaurentPolynomial LaurentPolynomial::constant(Coeff c) { return LaurentPolynomial(0, {c}); }

LaurentPolynomial LaurentPolynomial::monomial(std::int64_t exponent, Coeff c) {
  return LaurentPolynomial(exponent, {c});
}

LaurentPolynomial LaurentPolynomial::binomial(std::int64_t exponent) {
  return from_terms({{exponent, 1}, {0, -1}});
}

LaurentPolynomial::Coeff LaurentPolynomial::coeff(std::int64_t exponent) const noexcept {
  if (exponent < min_exp_ || exponent > max_exponent()) return 0;
  return coeffs_[static_cast<std::size_t>(exponent - min_exp_)];
}

std::size_t LaurentPolynomial::term_count() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(coeffs_.begin(), coeffs_.end(), [](Coeff c) { return c != 0; }));
}

std::vector<std::pair<std::int64_t, LaurentPolynomial::Coeff>> LaurentPolynomial::terms() const {
  std::vector<std::pair<std::int64_t, Coeff>> out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) out.emplace_back(min_exp_ + static_cast<std::int64_t>(i), coeffs_[i]);
  }
  return out;
}

std::map<std::int64_t, LaurentPolynomial::Coeff> LaurentPolynomial::term_map() const {
  auto t = terms();
  return {t.begin(), t.end()};
}

LaurentPolynomial LaurentPolynomial::shifted(std::int64_t by) const {
  if (is_zero()) return {};
  LaurentPolynomial out = *this;
  out.min_exp_ += by;
  return out;
}

namespace {

using Coeff = LaurentPolynomial::Coeff;

// Accumulates a and b (scaled by sign) into a fresh dense buffer.
LaurentPolynomial combine(const LaurentPolynomial& a, const LaurentPolynomial& b, bool subtract) {
  if (b.is_zero()) return a;
  if (a.is_zero()) return subtract ? negate(b) : b;
  const std::int64_t lo = std::min(a.min_exponent(), b.min_exponent());
  const std::int64_t hi = std::max(a.max_exponent(), b.max_exponent());
  std::vector<Coeff> out(static_cast<std::size_t>(hi - lo + 1), 0);
  const auto& k = kernels::active();
  std::span<Coeff> dst(out);
  const auto& ac = a.coefficients();
  const auto& bc = b.coefficients();
  k.add_into(dst.subspan(static_cast<std::size_t>(a.min_exponent() - lo), ac.size()), ac);
  auto bdst = dst.subspan(static_cast<std::size_t>(b.min_exponent() - lo), bc.size());
  if (subtract) {
    k.sub_into(bdst, bc);
  } else {
    k.add_into(bdst, bc);
  }
  return LaurentPolynomial(lo, std::move(out));
}

}  // namespace

LaurentPolynomial add(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  return combine(a, b, false);
}

LaurentPolynomial sub(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  return combine(a, b, true);
}

LaurentPolynomial negate(const LaurentPolynomial& a) {
  std::vector<Coeff> c = a.coefficients();
  for (auto& x : c) x = -x;
  return LaurentPolynomial(a.min_exponent(), std::move(c));
}

LaurentPolynomial mul(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  // Walk the nonzero terms of the sparser factor; each one is an axpy of the
  // other factor into the product.
  const bool a_sparser = a.term_count() <= b.term_count();
  const LaurentPolynomial& sparse = a_sparser ? a : b;
  const LaurentPolynomial& dense = a_sparser ? b : a;
  const auto& sc = sparse.coefficients();
  const auto& dc = dense.coefficients();
  std::vector<Coeff> out(sc.size() + dc.size() - 1, 0);
  const auto& k = kernels::active();
  std::span<Coeff> dst(out);
  for (std::size_t i = 0; i < sc.size(); ++i) {
    if (sc[i] == 0) continue;
    k.scaled_add_into(dst.subspan(i, dc.size()), dc, sc[i]);
  }
  return LaurentPolynomial(a.min_exponent() + b.min_exponent(), std::move(out));
}

LaurentPolynomial exact_div(const LaurentPolynomial& num, const LaurentPolynomial& den) {
  if (den.is_zero()) throw std::invalid_argument("exact_div: division by the zero polynomial");
  if (num.is_zero()) return {};
  const auto& dc = den.coefficients();
  const auto& nc = num.coefficients();
  const std::int64_t shift = num.min_exponent() - den.min_exponent();

  if (nc.size() < dc.size()) {
    throw NonExactDivision("exact_div: divisor has larger span than dividend");
  }

  if (dc.size() == 1) {
    std::vector<Coeff> q(nc.size());
    for (std::size_t i = 0; i < nc.size(); ++i) {
      if (nc[i] % dc[0] != 0) throw NonExactDivision("exact_div: non-integer quotient coefficient");
      q[i] = nc[i] / dc[0];
    }
    return LaurentPolynomial(shift, std::move(q));
  }

  const std::size_t qn = nc.size() - dc.size() + 1;
  std::vector<Coeff> q(qn, 0);

  // Fast path: den = u * t^a * (t^m - 1) with u = +-1.
  if (den.term_count() == 2 && (dc.back() == 1 || dc.back() == -1) && dc.front() == -dc.back()) {
    const std::size_t step = dc.size() - 1;
    if (!kernels::active().div_binomial(nc, step, q)) {
      throw NonExactDivision("exact_div: nonzero remainder");
    }
    if (dc.back() == -1) {
      for (auto& x : q) x = -x;
    }
    return LaurentPolynomial(shift, std::move(q));
  }

  // Long division from the top exponent, checking exactness at every step.
  std::vector<Coeff> rem = nc;
  const Coeff lead = dc.back();
  const auto& k = kernels::active();
  std::span<Coeff> rspan(rem);
  for (std::size_t j = qn; j-- > 0;) {
    const Coeff top = rem[j + dc.size() - 1];
    if (top == 0) continue;
    if (top % lead != 0) throw NonExactDivision("exact_div: non-integer quotient coefficient");
    const Coeff qc = top / lead;
    q[j] = qc;
    k.scaled_add_into(rspan.subspan(j, dc.size()), dc, -qc);
    assert(rem[j + dc.size() - 1] == 0);
  }
  for (std::size_t i = 0; i + 1 < dc.size(); ++i) {
    if (rem[i] != 0) throw NonExactDivision("exact_div: nonzero remainder");
  }
  return LaurentPolynomial(shift, std::move(q));
}

bool is_palindromic(const LaurentPolynomial& p) {
  if (p.is_zero()) return true;
  if (p.min_exponent() != -p.max_exponent()) return false;
  const auto& c = p.coefficients();
  return std::equal(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(c.size() / 2), c.rbegin());
}

std::string to_string(const LaurentPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    if (c < 0) {
      out += '-';
    } else if (!first) {
      out += '+';
    }
    first = false;
    const Coeff mag = c < 0 ? -c : c;
    if (e == 0) {
      out += std::to_string(mag);
      continue;
    }
    if (mag != 1) out += std::to_string(mag);
    out += 't';
    if (e == 1) continue;
    const std::string digits = std::to_string(e);
    if (e < 0 || digits.size() > 1) {
      out += "^{" + digits + "}";
    } else {
      out += "^" + digits;
    }
  }
  return out;
}

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string text) : s_(std::move(text)) {}

  LaurentPolynomial parse() {
    std::vector<std::pair<std::int64_t, Coeff>> terms;
    skip_ws();
    if (at_end()) fail("empty input");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = get() == '-' ? -1 : 1;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      terms.push_back(term(sign));
      skip_ws();
    }
    return LaurentPolynomial::from_terms(terms);
  }

 private:
  std::pair<std::int64_t, Coeff> term(int sign) {
    Coeff c = 1;
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      c = unsigned_int();
      have_coeff = true;
      skip_ws();
      if (peek() == '*') {
        get();
        skip_ws();
        if (peek() != 't') fail("expected 't' after '*'");
      }
    }
    std::int64_t e = 0;
    if (peek() == 't') {
      get();
      e = 1;
      skip_ws();
      if (peek() == '^') {
        get();
        skip_ws();
        if (peek() == '{') {
          get();
          skip_ws();
          e = signed_int();
          skip_ws();
          if (get() != '}') fail("expected '}'");
        } else {
          e = signed_int();
        }
      }
    } else if (!have_coeff) {
      fail("expected a coefficient or 't'");
    }
    return {e, sign * c};
  }

  std::int64_t signed_int() {
    int sign = 1;
    if (peek() == '-' || peek() == '+') sign = get() == '-' ? -1 : 1;
    return sign * unsigned_int();
  }

  std::int64_t unsigned_int() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected digits");
    std::int64_t v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      if (__builtin_mul_overflow(v, 10, &v) || __builtin_add_overflow(v, get() - '0', &v)) {
        fail("integer overflow");
      }
    }
    return v;
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }
  char get() { return at_end() ? '\0' : s_[pos_++]; }

  [[noreturn]] void fail(const std::string& why) const {
    throw PolynomialParseError("parse_laurent: " + why + " at offset " + std::to_string(pos_) +
                               " in \"" + s_ + "\"");
  }

  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPolynomial parse_laurent(std::string_view text) {
  // Accept the typographic minus sign (U+2212) as '-'.
  std::string ascii;
  ascii.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (i + 2 < text.size() && static_cast<unsigned char>(text[i]) == 0xE2 &&
        static_cast<unsigned char>(text[i + 1]) == 0x88 &&
        static_cast<unsigned char>(text[i + 2]) == 0x92) {
      ascii += '-';
      i += 2;
    } else {
      ascii += text[i];
    }
  }
  return PolyParser(std::move(ascii)).parse();
}

}  // namespace turaev
