#pragma once

// Lower/upper brackets for the Turaev genus and dealternating number of a
// torus knot or link, from the knot Floer width and from concrete diagrams.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "turaev/diagram.hpp"

namespace turaev {

enum class Invariant { turaev_genus, dealternating };
const char* invariant_name(Invariant inv) noexcept;

/// Published brackets for p in {4, 5, 6}, q = pn + r with n >= 1.
struct ReferenceBounds {
  std::optional<std::int64_t> lower;
  std::optional<std::int64_t> upper;
  /// The upper bound comes from a modified (wrapped) diagram that is not a
  /// positive braid closure and has to be supplied as a PD file.
  bool upper_needs_wrap_diagram = false;
};
ReferenceBounds reference_bounds(Invariant inv, std::int64_t p, std::int64_t q);

struct BoundBracket {
  Invariant invariant = Invariant::turaev_genus;
  std::int64_t lower = 0;
  std::int64_t upper = 0;
  std::string lower_source;  // "hfk-width" or "none"
  std::string upper_source;  // "lemma-diagram", "standard-diagram" or "pd-input"
  std::string upper_diagram;  // e.g. "lemma(5,7)" or a file name
  ReferenceBounds reference;
  /// Computed upper exceeds the reference upper because the witnessing
  /// diagram was not supplied.
  bool needs_pd_input = false;
};

struct BoundsReport {
  std::int64_t p = 0;
  std::int64_t q = 0;
  bool knot = false;
  std::optional<std::int64_t> width;
  BoundBracket turaev_genus;
  BoundBracket dealternating;
};

struct ExtraDiagram {
  std::string name;
  Diagram diagram;
};

/// Candidates: lemma diagrams in either order (p or q in {4, 5, 6}), the
/// standard closures (12...p-1)^q and (12...q-1)^p, and any extra diagrams,
/// which must represent T_{p,q}. Throws std::invalid_argument for p or q < 1.
BoundsReport bounds(std::int64_t p, std::int64_t q, const std::vector<ExtraDiagram>& extra = {});

}  // namespace turaev
