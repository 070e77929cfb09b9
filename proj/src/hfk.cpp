#include "turaev/hfk.hpp"

#include <algorithm>
#include <cassert>
#include <string>

#include "turaev/parallel.hpp"

namespace turaev {

LaurentPolynomial Staircase::reconstruct() const {
  const std::int64_t kk = static_cast<std::int64_t>(k());
  std::vector<std::pair<std::int64_t, LaurentPolynomial::Coeff>> terms;
  terms.emplace_back(0, kk % 2 == 0 ? 1 : -1);
  for (std::int64_t l = 1; l <= kk; ++l) {
    const LaurentPolynomial::Coeff sign = (kk - l) % 2 == 0 ? 1 : -1;
    terms.emplace_back(s[static_cast<std::size_t>(l)], sign);
    terms.emplace_back(-s[static_cast<std::size_t>(l)], sign);
  }
  return LaurentPolynomial::from_terms(terms);
}

LaurentPolynomial HfkTable::euler_characteristic() const {
  std::vector<std::pair<std::int64_t, LaurentPolynomial::Coeff>> terms;
  for (const auto& g : generators) {
    terms.emplace_back(g.alexander, (g.maslov % 2 == 0 ? 1 : -1) * g.rank);
  }
  return LaurentPolynomial::from_terms(terms);
}

Staircase extract_staircase(const LaurentPolynomial& delta) {
  auto reject = [&](const std::string& why) {
    throw NotLSpaceForm("extract_staircase: " + why + " in " + to_string(delta));
  };
  if (delta.is_zero()) reject("zero polynomial");
  if (!is_palindromic(delta)) reject("not palindromic");
  if (delta.coeff(0) == 0) reject("vanishing constant term");
  if (delta.coefficients().back() != 1) reject("leading coefficient is not +1");

  Staircase st;
  st.s.clear();
  const auto& c = delta.coefficients();
  const std::int64_t lo = delta.min_exponent();
  LaurentPolynomial::Coeff previous = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    if (c[i] != 1 && c[i] != -1) reject("coefficient outside {-1, 0, 1}");
    if (previous == c[i]) reject("signs do not alternate");
    previous = c[i];
    const std::int64_t e = lo + static_cast<std::int64_t>(i);
    if (e >= 0) st.s.push_back(e);
  }
  return st;
}

std::vector<std::int64_t> maslov_gradings(const Staircase& st) {
  const std::size_t k = st.k();
  std::vector<std::int64_t> m(k + 1, 0);
  for (std::size_t l = k; l-- > 0;) {
    const std::int64_t gap = st.s[l + 1] - st.s[l];
    m[l] = (k - l) % 2 == 1 ? m[l + 1] - 2 * gap + 1 : m[l + 1] - 1;
  }
  return m;
}

HfkTable hfk_from_staircase(const Staircase& st) {
  const auto m = maslov_gradings(st);
  const std::size_t k = st.k();
  HfkTable table;
  table.generators.reserve(2 * k + 1);
  for (std::size_t l = k + 1; l-- > 0;) {
    table.generators.push_back({st.s[l], m[l], 1});
  }
  for (std::size_t l = 1; l <= k; ++l) {
    table.generators.push_back({-st.s[l], m[l] - 2 * st.s[l], 1});
  }
  return table;
}

WidthReport delta_sequence(const Staircase& st) {
  const std::size_t k = st.k();
  WidthReport r;
  r.deltas.assign(k + 1, 0);
  r.deltas[k] = st.s[k];
  for (std::size_t l = k; l-- > 0;) {
    const std::int64_t gap = st.s[l + 1] - st.s[l];
    r.deltas[l] = (k - l) % 2 == 1 ? r.deltas[l + 1] + gap - 1 : r.deltas[l + 1] - gap + 1;
  }
  const auto [mn, mx] = std::minmax_element(r.deltas.begin(), r.deltas.end());
  r.delta_min = *mn;
  r.delta_max = *mx;
  r.width = r.delta_max - r.delta_min + 1;
  return r;
}

WidthReport width_torus(TorusKnotParams params) {
  return delta_sequence(extract_staircase(alexander_torus(params)));
}

std::int64_t width_formula(const FamilyId& family) {
  family.q();  // validates
  const std::int64_t p = family.p;
  const std::int64_t n = family.n;
  const std::int64_t slope = (p - 1) * (p - 1) / 4;
  switch (family.family) {
    case Family::odd_p_plus:
    case Family::even_p_plus:
      return n * slope + 1;
    case Family::odd_p_minus:
    case Family::even_p_minus:
      return n * slope - (p - 1) / 2 + 1;
    case Family::five_plus_two:
      return 4 * n + 1;
    case Family::five_plus_three:
      return 4 * n + 2;
  }
  throw UnsupportedFamily("width_formula: unknown family");
}

WidthTable::WidthTable(std::int64_t bound, int jobs)
    : bound_(bound), widths_(static_cast<std::size_t>(bound * bound), 0) {
  std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
  for (std::int64_t a = 2; a < bound; ++a) {
    for (std::int64_t b = a + 1; b < bound; ++b) {
      if (gcd(a, b) == 1) pairs.emplace_back(a, b);
    }
  }
  // Largest products first so the long jobs do not straggle at the end.
  std::sort(pairs.begin(), pairs.end(), [](const auto& x, const auto& y) {
    return x.first * x.second > y.first * y.second ||
           (x.first * x.second == y.first * y.second && x < y);
  });
  // Each slot is written by exactly one task, so no synchronization is needed
  // beyond the join in parallel_for.
  parallel_for(pairs.size(), jobs, [&](std::size_t i) {
    const auto [a, b] = pairs[i];
    widths_[static_cast<std::size_t>(a * bound_ + b)] =
        static_cast<std::int32_t>(width_torus({a, b}).width);
  });
  computed_ = static_cast<std::int64_t>(pairs.size());
}

std::int64_t WidthTable::width(std::int64_t p, std::int64_t q) const {
  const auto [a, b] = TorusKnotParams{p, q}.normalized();
  if (a == 1) return 1;
  if (b >= bound_ || gcd(a, b) != 1) {
    throw std::out_of_range("WidthTable: pair (" + std::to_string(p) + ", " + std::to_string(q) +
                            ") not tabulated");
  }
  return widths_[static_cast<std::size_t>(a * bound_ + b)];
}

ScanResult scan_conjecture(std::int64_t bound, int jobs) {
  if (bound < 3) throw std::invalid_argument("scan_conjecture: bound must be at least 3");
  const WidthTable table(bound, jobs);
  ScanResult result;
  result.bound = bound;
  result.widths_computed = table.computed();
  for (std::int64_t p = 2; p < bound; ++p) {
    const std::int64_t gap = (p - 1) * (p - 1) / 4;
    for (std::int64_t q = p + 1; q < bound; ++q) {
      if (gcd(p, q) != 1) continue;
      ++result.pairs_checked;
      const std::int64_t upper = table.width(p, q);
      const std::int64_t lower = table.width(p, q - p);
      if (upper - lower != gap) result.violations.push_back({p, q, upper, lower, gap});
    }
  }
  return result;
}

}  // namespace turaev
