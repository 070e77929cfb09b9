#include "turaev/bounds.hpp"

#include <string>

#include "turaev/alexander.hpp"
#include "turaev/hfk.hpp"

namespace turaev {

const char* invariant_name(Invariant inv) noexcept {
  return inv == Invariant::turaev_genus ? "turaev_genus" : "dealternating";
}

ReferenceBounds reference_bounds(Invariant inv, std::int64_t p, std::int64_t q) {
  const std::int64_t a = std::min(p, q);
  const std::int64_t b = std::max(p, q);
  ReferenceBounds ref;
  if (a < 4 || a > 6) return ref;
  const std::int64_t n = b / a;
  const std::int64_t r = b % a;
  if (n < 1) return ref;
  auto set = [&](std::optional<std::int64_t> lo, std::int64_t hi, bool wrap = false) {
    ref.lower = lo;
    ref.upper = hi;
    ref.upper_needs_wrap_diagram = wrap;
  };
  const bool genus = inv == Invariant::turaev_genus;
  if (a == 4) {
    switch (r) {
      case 0: genus ? set({}, 2 * n) : set({}, 2 * n + 1, true); break;
      case 1: genus ? set(2 * n, 2 * n) : set(2 * n, 2 * n + 1, true); break;
      case 2: genus ? set({}, 2 * n + 1) : set({}, 2 * n + 2, true); break;
      case 3: genus ? set(2 * n + 1, 2 * n + 1) : set(2 * n + 1, 2 * n + 2, true); break;
    }
  } else if (a == 5) {
    if (r == 0) {
      genus ? set({}, 4 * n) : set({}, 4 * n + 1, true);
    } else if (r == 1) {
      genus ? set(4 * n, 4 * n) : set(4 * n, 4 * n + 1, true);
    } else {
      genus ? set(4 * n + r - 2, 4 * n + r - 1) : set(4 * n + r - 2, 4 * n + r, true);
    }
  } else {
    if (r == 0) {
      set({}, genus ? 6 * n : 6 * n + 2);
    } else if (r == 1) {
      genus ? set(6 * n, 6 * n) : set(6 * n, 6 * n + 2);
    }
  }
  return ref;
}

namespace {

struct Candidate {
  std::string source;
  std::string name;
  Diagram diagram;
};

std::string pair_name(const char* kind, std::int64_t p, std::int64_t q) {
  return std::string(kind) + "(" + std::to_string(p) + "," + std::to_string(q) + ")";
}

std::vector<Candidate> candidates(std::int64_t p, std::int64_t q,
                                  const std::vector<ExtraDiagram>& extra) {
  std::vector<Candidate> out;
  for (auto [s, t] : {std::pair{p, q}, std::pair{q, p}}) {
    if (s < 4 || s > 6 || t < s) continue;
    try {
      const LemmaWord lw = lemma_word(static_cast<int>(s), static_cast<int>(t));
      out.push_back({"lemma-diagram", pair_name("lemma", s, t), closure_diagram(lw.word)});
    } catch (const UnsupportedTorusFamily&) {
    }
  }
  out.push_back({"standard-diagram", pair_name("standard", p, q),
                 closure_diagram(torus_braid(static_cast<int>(p), static_cast<int>(q)))});
  if (p != q) {
    out.push_back({"standard-diagram", pair_name("standard", q, p),
                   closure_diagram(torus_braid(static_cast<int>(q), static_cast<int>(p)))});
  }
  for (const auto& e : extra) out.push_back({"pd-input", e.name, e.diagram});
  return out;
}

}  // namespace

BoundsReport bounds(std::int64_t p, std::int64_t q, const std::vector<ExtraDiagram>& extra) {
  if (p < 1 || q < 1) {
    throw std::invalid_argument("bounds: p and q must be positive, got (" + std::to_string(p) +
                                ", " + std::to_string(q) + ")");
  }
  BoundsReport report;
  report.p = p;
  report.q = q;
  report.knot = gcd(p, q) == 1;
  if (report.knot) report.width = width_torus({p, q}).width;

  BoundBracket& genus = report.turaev_genus;
  BoundBracket& dalt = report.dealternating;
  genus.invariant = Invariant::turaev_genus;
  dalt.invariant = Invariant::dealternating;
  for (BoundBracket* b : {&genus, &dalt}) {
    b->lower = report.width ? *report.width - 1 : 0;
    b->lower_source = report.width ? "hfk-width" : "none";
    b->reference = reference_bounds(b->invariant, p, q);
  }

  bool first = true;
  for (const Candidate& c : candidates(p, q, extra)) {
    const std::int64_t g = turaev_genus_diagram(c.diagram);
    const std::int64_t d = dealternating_number_diagram(c.diagram).minimum_changes;
    if (first || g < genus.upper) {
      genus.upper = g;
      genus.upper_source = c.source;
      genus.upper_diagram = c.name;
    }
    if (first || d < dalt.upper) {
      dalt.upper = d;
      dalt.upper_source = c.source;
      dalt.upper_diagram = c.name;
    }
    first = false;
  }
  for (BoundBracket* b : {&genus, &dalt}) {
    b->needs_pd_input = b->reference.upper && b->upper > *b->reference.upper;
  }
  return report;
}

}  // namespace turaev
