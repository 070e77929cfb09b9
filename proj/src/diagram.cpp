#include "turaev/diagram.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>
#include <unordered_map>

namespace turaev {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[a] = b;
  }

  int groups() {
    int count = 0;
    for (std::size_t i = 0; i < parent_.size(); ++i) count += find(i) == i ? 1 : 0;
    return count;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

bool is_incoming_slot(int sign, int slot) noexcept {
  return slot == 0 || slot == (sign > 0 ? 3 : 1);
}

Diagram::Diagram(std::vector<Crossing> crossings, int free_loops, std::optional<int> strands)
    : crossings_(std::move(crossings)), free_loops_(free_loops), strands_(strands) {
  if (free_loops_ < 0) throw MalformedPDCode("Diagram: negative free loop count");
  std::unordered_map<int, int> index;
  slot_edge_.resize(4 * crossings_.size());
  for (std::size_t k = 0; k < crossings_.size(); ++k) {
    const Crossing& x = crossings_[k];
    if (x.sign != 1 && x.sign != -1) {
      throw MalformedPDCode("Diagram: crossing " + std::to_string(k) + " has sign " +
                            std::to_string(x.sign));
    }
    for (int s = 0; s < 4; ++s) {
      const int label = x.edges[static_cast<std::size_t>(s)];
      auto [it, fresh] = index.try_emplace(label, static_cast<int>(labels_.size()));
      if (fresh) {
        labels_.push_back(label);
        heads_.push_back({});
        tails_.push_back({});
      }
      const auto e = static_cast<std::size_t>(it->second);
      slot_edge_[4 * k + static_cast<std::size_t>(s)] = it->second;
      EdgeEnd& end = is_incoming_slot(x.sign, s) ? heads_[e] : tails_[e];
      if (end.crossing >= 0) {
        throw MalformedPDCode("Diagram: edge " + std::to_string(label) + " " +
                              (is_incoming_slot(x.sign, s) ? "enters" : "leaves") +
                              " more than one crossing");
      }
      end = {static_cast<int>(k), s};
    }
  }
  for (std::size_t e = 0; e < labels_.size(); ++e) {
    if (heads_[e].crossing < 0 || tails_[e].crossing < 0) {
      throw MalformedPDCode("Diagram: edge " + std::to_string(labels_[e]) +
                            " appears only once or with inconsistent orientation");
    }
  }
}

Diagram closure_diagram(const BraidWord& w) {
  const int p = w.strands;
  const std::size_t c = w.letters.size();
  // Crossing k emits edge 2k+1 at its upper-left end and 2k+2 at its
  // upper-right end; an edge runs to the next crossing at that position,
  // wrapping around the closure.
  std::vector<int> current(static_cast<std::size_t>(p), 0);
  for (std::size_t k = 0; k < c; ++k) {
    const auto left = static_cast<std::size_t>(w.letters[k] - 1);
    current[left] = static_cast<int>(2 * k + 1);
    current[left + 1] = static_cast<int>(2 * k + 2);
  }
  const int free_loops =
      static_cast<int>(std::count(current.begin(), current.end(), 0));
  std::vector<Crossing> crossings;
  crossings.reserve(c);
  for (std::size_t k = 0; k < c; ++k) {
    const auto left = static_cast<std::size_t>(w.letters[k] - 1);
    Crossing x;
    x.sign = 1;
    x.edges[0] = current[left + 1];          // under-strand in, lower right
    x.edges[1] = static_cast<int>(2 * k + 2);  // over-strand out, upper right
    x.edges[2] = static_cast<int>(2 * k + 1);  // under-strand out, upper left
    x.edges[3] = current[left];              // over-strand in, lower left
    current[left] = x.edges[2];
    current[left + 1] = x.edges[1];
    crossings.push_back(x);
  }
  return Diagram(std::move(crossings), free_loops, p);
}

std::vector<std::vector<Pass>> gauss_sequences(const Diagram& d) {
  std::vector<std::vector<Pass>> out;
  std::vector<bool> seen(static_cast<std::size_t>(d.edge_count()), false);
  for (int start = 0; start < d.edge_count(); ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    std::vector<Pass> seq;
    int e = start;
    do {
      seen[static_cast<std::size_t>(e)] = true;
      const EdgeEnd h = d.head(e);
      seq.push_back({h.crossing, h.slot != 0});
      e = d.edge_at(h.crossing, (h.slot + 2) % 4);
    } while (e != start);
    out.push_back(std::move(seq));
  }
  return out;
}

int component_count(const Diagram& d) {
  return static_cast<int>(gauss_sequences(d).size()) + d.free_loops();
}

bool is_connected(const Diagram& d) {
  if (d.crossing_count() == 0) return d.free_loops() == 1;
  if (d.free_loops() > 0) return false;
  DisjointSets sets(static_cast<std::size_t>(d.edge_count()));
  for (int k = 0; k < d.crossing_count(); ++k) {
    for (int s = 1; s < 4; ++s) {
      sets.unite(static_cast<std::size_t>(d.edge_at(k, 0)), static_cast<std::size_t>(d.edge_at(k, s)));
    }
  }
  return sets.groups() == 1;
}

KauffmanState state_components(const Diagram& d, std::vector<Smoothing> assignment) {
  if (assignment.size() != static_cast<std::size_t>(d.crossing_count())) {
    throw std::invalid_argument("state_components: assignment has " +
                                std::to_string(assignment.size()) + " entries for " +
                                std::to_string(d.crossing_count()) + " crossings");
  }
  DisjointSets sets(static_cast<std::size_t>(d.edge_count()));
  for (int k = 0; k < d.crossing_count(); ++k) {
    auto at = [&](int s) { return static_cast<std::size_t>(d.edge_at(k, s)); };
    if (assignment[static_cast<std::size_t>(k)] == Smoothing::A) {
      sets.unite(at(0), at(1));
      sets.unite(at(2), at(3));
    } else {
      sets.unite(at(0), at(3));
      sets.unite(at(1), at(2));
    }
  }
  KauffmanState state;
  state.assignment = std::move(assignment);
  state.component_count = sets.groups() + d.free_loops();
  return state;
}

KauffmanState all_a(const Diagram& d) {
  return state_components(d, std::vector<Smoothing>(static_cast<std::size_t>(d.crossing_count()), Smoothing::A));
}

KauffmanState all_b(const Diagram& d) {
  return state_components(d, std::vector<Smoothing>(static_cast<std::size_t>(d.crossing_count()), Smoothing::B));
}

std::int64_t turaev_genus_diagram(const Diagram& d) {
  if (!is_connected(d)) {
    throw DisconnectedDiagram("turaev_genus_diagram: diagram is not connected");
  }
  const std::int64_t numerator =
      2 + d.crossing_count() - all_a(d).component_count - all_b(d).component_count;
  if (numerator < 0 || numerator % 2 != 0) {
    throw std::logic_error("turaev_genus_diagram: 2 + c - s_A - s_B = " +
                           std::to_string(numerator));
  }
  return numerator / 2;
}

bool is_alternating(const Diagram& d) {
  for (const auto& seq : gauss_sequences(d)) {
    for (std::size_t i = 0; i < seq.size(); ++i) {
      if (seq[i].over == seq[(i + 1) % seq.size()].over) return false;
    }
  }
  return true;
}

Diagram apply_crossing_changes(const Diagram& d, const std::vector<int>& crossings) {
  std::vector<Crossing> xs = d.crossings();
  for (int k : crossings) {
    if (k < 0 || k >= d.crossing_count()) {
      throw std::out_of_range("apply_crossing_changes: no crossing " + std::to_string(k));
    }
    Crossing& x = xs[static_cast<std::size_t>(k)];
    const auto [a, b, c, e] = x.edges;
    // The old over-strand becomes the under-strand; relabel from its entry.
    x.edges = x.sign > 0 ? std::array<int, 4>{e, a, b, c} : std::array<int, 4>{b, c, e, a};
    x.sign = -x.sign;
  }
  return Diagram(std::move(xs), d.free_loops(), d.strands());
}

DaltReport dealternating_number_diagram(const Diagram& d) {
  const auto n = static_cast<std::size_t>(d.crossing_count());
  struct Link {
    int to;
    int parity;
  };
  std::vector<std::vector<Link>> graph(n);
  for (const auto& seq : gauss_sequences(d)) {
    for (std::size_t i = 0; i < seq.size(); ++i) {
      const Pass& u = seq[i];
      const Pass& v = seq[(i + 1) % seq.size()];
      // Passes must differ after changes: x_u + x_v = t_u + t_v + 1.
      const int parity = (u.over ? 1 : 0) ^ (v.over ? 1 : 0) ^ 1;
      if (u.crossing == v.crossing) {
        if (parity != 0) {
          throw InconsistentConstraints("dealternating_number_diagram: crossing " +
                                        std::to_string(u.crossing) +
                                        " is passed twice in a row on the same level");
        }
        continue;
      }
      graph[static_cast<std::size_t>(u.crossing)].push_back({v.crossing, parity});
      graph[static_cast<std::size_t>(v.crossing)].push_back({u.crossing, parity});
    }
  }

  DaltReport report;
  std::vector<int> value(n, -1);
  for (std::size_t root = 0; root < n; ++root) {
    if (value[root] >= 0) continue;
    ConstraintComponent comp;
    value[root] = 0;
    std::deque<std::size_t> queue{root};
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop_front();
      comp.crossings.push_back(static_cast<int>(u));
      for (const Link& l : graph[u]) {
        const auto v = static_cast<std::size_t>(l.to);
        const int want = value[u] ^ l.parity;
        if (value[v] < 0) {
          value[v] = want;
          queue.push_back(v);
        } else if (value[v] != want) {
          throw InconsistentConstraints(
              "dealternating_number_diagram: odd cycle through crossings " + std::to_string(u) +
              " and " + std::to_string(v));
        }
      }
    }
    std::sort(comp.crossings.begin(), comp.crossings.end());
    comp.size = static_cast<int>(comp.crossings.size());
    for (int k : comp.crossings) comp.weight += value[static_cast<std::size_t>(k)];
    // The root is the smallest crossing and is unchanged in the base
    // solution, so on a tie the complement is the lexicographically smaller
    // witness.
    comp.complemented = comp.size - comp.weight <= comp.weight;
    for (int k : comp.crossings) {
      if ((value[static_cast<std::size_t>(k)] == 1) != comp.complemented) report.witness.push_back(k);
    }
    report.minimum_changes += std::min(comp.weight, comp.size - comp.weight);
    report.components.push_back(std::move(comp));
  }
  std::sort(report.witness.begin(), report.witness.end());
  return report;
}

std::vector<int> crossings_of_generators(const BraidWord& w, const std::vector<int>& generators) {
  std::vector<int> out;
  for (std::size_t k = 0; k < w.letters.size(); ++k) {
    if (std::find(generators.begin(), generators.end(), w.letters[k]) != generators.end()) {
      out.push_back(static_cast<int>(k));
    }
  }
  return out;
}

}  // namespace turaev
