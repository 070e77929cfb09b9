#pragma once

// Link diagrams stored as planar-diagram crossings, closures of positive
// braids, Kauffman states and the diagram invariants built from them.

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "turaev/braid.hpp"

namespace turaev {

class MalformedPDCode : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};
class DisconnectedDiagram : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};
class InconsistentConstraints : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// X[a, b, c, d]: edge labels counterclockwise starting at the incoming
/// under-strand, so the under-strand runs a -> c. For sign +1 the
/// over-strand runs d -> b, for sign -1 it runs b -> d.
struct Crossing {
  std::array<int, 4> edges{};
  int sign = 1;

  friend bool operator==(const Crossing&, const Crossing&) = default;
};

/// Where an edge end meets a crossing.
struct EdgeEnd {
  int crossing = -1;
  int slot = -1;
};

class Diagram {
 public:
  Diagram() = default;
  /// Throws MalformedPDCode unless every label occurs exactly twice, once as
  /// an incoming and once as an outgoing end.
  Diagram(std::vector<Crossing> crossings, int free_loops = 0,
          std::optional<int> strands = std::nullopt);

  int crossing_count() const noexcept { return static_cast<int>(crossings_.size()); }
  const std::vector<Crossing>& crossings() const noexcept { return crossings_; }
  /// Crossingless unknotted circles disjoint from the rest of the diagram.
  int free_loops() const noexcept { return free_loops_; }
  /// Strand count when the diagram is a braid closure.
  std::optional<int> strands() const noexcept { return strands_; }

  int edge_count() const noexcept { return static_cast<int>(labels_.size()); }
  /// Dense index (0..edge_count-1) of the edge at a crossing slot.
  int edge_at(int crossing, int slot) const {
    return slot_edge_[static_cast<std::size_t>(4 * crossing + slot)];
  }
  /// The end where the edge enters / leaves a crossing.
  EdgeEnd head(int edge) const { return heads_[static_cast<std::size_t>(edge)]; }
  EdgeEnd tail(int edge) const { return tails_[static_cast<std::size_t>(edge)]; }

  friend bool operator==(const Diagram& a, const Diagram& b) {
    return a.crossings_ == b.crossings_ && a.free_loops_ == b.free_loops_ &&
           a.strands_ == b.strands_;
  }

 private:
  std::vector<Crossing> crossings_;
  int free_loops_ = 0;
  std::optional<int> strands_;
  std::vector<int> labels_;
  std::vector<int> slot_edge_;
  std::vector<EdgeEnd> heads_;
  std::vector<EdgeEnd> tails_;
};

/// True for the slots through which an edge enters the crossing.
bool is_incoming_slot(int sign, int slot) noexcept;

/// Closure of a positive braid with strands oriented upward. Crossing k is the
/// k-th letter; for sigma_i the over-strand runs from position i to i+1.
Diagram closure_diagram(const BraidWord& w);

struct Pass {
  int crossing = 0;
  bool over = false;

  friend bool operator==(const Pass&, const Pass&) = default;
};

/// One cyclic pass sequence per link component that meets a crossing.
std::vector<std::vector<Pass>> gauss_sequences(const Diagram& d);

/// Link components, free loops included.
int component_count(const Diagram& d);

/// Whether the underlying 4-valent graph (with free loops as extra
/// components) is connected.
bool is_connected(const Diagram& d);

enum class Smoothing : std::uint8_t { A, B };

struct KauffmanState {
  std::vector<Smoothing> assignment;
  int component_count = 0;
};

/// A joins (a,b) and (c,d); B joins (a,d) and (b,c). Throws
/// std::invalid_argument if the assignment size is not the crossing count.
KauffmanState state_components(const Diagram& d, std::vector<Smoothing> assignment);
KauffmanState all_a(const Diagram& d);
KauffmanState all_b(const Diagram& d);

/// (2 + c - s_A - s_B) / 2. Throws DisconnectedDiagram.
std::int64_t turaev_genus_diagram(const Diagram& d);

bool is_alternating(const Diagram& d);

/// Switches over and under at the listed crossings (duplicates toggle twice).
Diagram apply_crossing_changes(const Diagram& d, const std::vector<int>& crossings);

struct ConstraintComponent {
  std::vector<int> crossings;  // ascending
  int size = 0;
  int weight = 0;  // changes in the solution fixing the smallest crossing
  bool complemented = false;  // whether the witness uses the complement
};

struct DaltReport {
  int minimum_changes = 0;
  std::vector<int> witness;  // ascending crossing indices
  std::vector<ConstraintComponent> components;
};

/// Exact minimum number of crossing changes making d alternating. Throws
/// InconsistentConstraints if the pass sequences admit no alternating
/// assignment, which would indicate a corrupt diagram.
DaltReport dealternating_number_diagram(const Diagram& d);

/// Indices of the letters of w that are one of the given generators, which
/// are also the matching crossing indices of closure_diagram(w).
std::vector<int> crossings_of_generators(const BraidWord& w, const std::vector<int>& generators);

}  // namespace turaev
