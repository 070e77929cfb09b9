#pragma once

// Knot Floer homology of L-space knots from the Alexander-polynomial
// staircase, the delta-grading width, and the recursive-width scan.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "turaev/alexander.hpp"
#include "turaev/laurent.hpp"

namespace turaev {

class NotLSpaceForm : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Exponents 0 = s_0 < s_1 < ... < s_k of an L-space Alexander polynomial
/// (-1)^k + sum_{l=1}^k (-1)^{k-l} (t^{s_l} + t^{-s_l}). Only l >= 0 is stored;
/// s_{-l} = -s_l.
struct Staircase {
  std::vector<std::int64_t> s{0};

  std::size_t k() const noexcept { return s.size() - 1; }
  LaurentPolynomial reconstruct() const;
  friend bool operator==(const Staircase&, const Staircase&) = default;
};

struct HfkGenerator {
  std::int64_t alexander = 0;  // s
  std::int64_t maslov = 0;     // m
  std::int64_t rank = 1;
  friend bool operator==(const HfkGenerator&, const HfkGenerator&) = default;
};

/// Bigraded generators, ordered by descending Alexander grading.
struct HfkTable {
  std::vector<HfkGenerator> generators;

  /// sum (-1)^m rank t^s
  LaurentPolynomial euler_characteristic() const;
};

struct WidthReport {
  std::int64_t delta_max = 0;
  std::int64_t delta_min = 0;
  std::int64_t width = 1;
  std::vector<std::int64_t> deltas;  // delta_0 .. delta_k
};

/// Throws NotLSpaceForm unless delta is palindromic, has unit coefficients,
/// a nonzero constant term, strictly alternating signs and leading
/// coefficient +1.
Staircase extract_staircase(const LaurentPolynomial& delta);

/// Maslov gradings m_0..m_k (m_k = 0) of the generators at s_0..s_k.
std::vector<std::int64_t> maslov_gradings(const Staircase& st);

/// Full table, including the l < 0 generators obtained from
/// HFK_m(K, s) = HFK_{m-2s}(K, -s).
HfkTable hfk_from_staircase(const Staircase& st);

WidthReport delta_sequence(const Staircase& st);

WidthReport width_torus(TorusKnotParams params);

/// Closed-form width for the q = pn +- 1 families and T_{5,5n+2}, T_{5,5n+3}.
std::int64_t width_formula(const FamilyId& family);

struct ConjectureViolation {
  std::int64_t p = 0;
  std::int64_t q = 0;
  std::int64_t width_pq = 0;
  std::int64_t width_reduced = 0;  // width of T_{p,q-p}
  std::int64_t expected_gap = 0;   // floor((p-1)^2 / 4)
};

struct ScanResult {
  std::int64_t bound = 0;
  std::int64_t pairs_checked = 0;
  std::int64_t widths_computed = 0;
  std::vector<ConjectureViolation> violations;  // sorted by (p, q)
};

/// Checks width(T_{p,q}) - width(T_{p,q-p}) = floor((p-1)^2/4) for every
/// coprime 1 < p < q < bound. jobs <= 0 picks the hardware concurrency.
ScanResult scan_conjecture(std::int64_t bound, int jobs = 1);

/// Width lookup shared by scan_conjecture: widths of every coprime pair
/// 1 <= a < b < bound, computed in parallel. Unknots have width 1.
class WidthTable {
 public:
  WidthTable(std::int64_t bound, int jobs);
  std::int64_t width(std::int64_t p, std::int64_t q) const;
  std::int64_t computed() const noexcept { return computed_; }

 private:
  std::int64_t bound_;
  std::int64_t computed_ = 0;
  std::vector<std::int32_t> widths_;
};

}  // namespace turaev
