// Garside left normal form for positive braids. Simple elements are
// permutation braids, represented by their permutations; a factor A followed
// by a letter sigma_i stays simple iff i is not in the finishing set of A.

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "turaev/braid.hpp"

namespace turaev {

namespace {

bool is_half_twist(const Permutation& p) {
  const int n = p.size();
  for (int i = 0; i < n; ++i) {
    if (p.image[static_cast<std::size_t>(i)] != n - 1 - i) return false;
  }
  return true;
}

Permutation half_twist(int n) {
  Permutation p;
  p.image.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) p.image[static_cast<std::size_t>(i)] = n - 1 - i;
  return p;
}

// Crossing positions i, i+1 after the strands of `simple` have been permuted.
void append_letter(Permutation& simple, int i) {
  for (auto& img : simple.image) {
    if (img == i) {
      img = i + 1;
    } else if (img == i + 1) {
      img = i;
    }
  }
}

void strip_letter_front(Permutation& simple, int i) {
  std::swap(simple.image[static_cast<std::size_t>(i)], simple.image[static_cast<std::size_t>(i) + 1]);
}

// Moves letters from the front of `right` to the back of `left` until
// S(right) is contained in F(left). Returns whether anything moved.
bool make_left_weighted(Permutation& left, Permutation& right) {
  bool changed = false;
  const int n = left.size();
  while (true) {
    const Permutation left_inv = left.inverse();
    int move = -1;
    for (int i = 0; i + 1 < n; ++i) {
      const auto u = static_cast<std::size_t>(i);
      const bool starts_right = right.image[u] > right.image[u + 1];
      const bool finishes_left = left_inv.image[u] > left_inv.image[u + 1];
      if (starts_right && !finishes_left) {
        move = i;
        break;
      }
    }
    if (move < 0) return changed;
    append_letter(left, move);
    strip_letter_front(right, move);
    changed = true;
  }
}

// Writes a permutation braid as a positive word (bubble-sort order).
std::vector<int> simple_to_letters(const Permutation& simple) {
  std::vector<int> letters;
  // at[pos] = final position of the strand currently at pos.
  std::vector<int> at = simple.image;
  const std::size_t n = at.size();
  bool swapped = true;
  while (swapped) {
    swapped = false;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (at[i] > at[i + 1]) {
        std::swap(at[i], at[i + 1]);
        letters.push_back(static_cast<int>(i) + 1);
        swapped = true;
      }
    }
  }
  return letters;
}

}  // namespace

std::vector<bool> starting_set(const Permutation& simple) {
  std::vector<bool> s(static_cast<std::size_t>(std::max(simple.size() - 1, 0)));
  for (std::size_t i = 0; i < s.size(); ++i) s[i] = simple.image[i] > simple.image[i + 1];
  return s;
}

std::vector<bool> finishing_set(const Permutation& simple) {
  return starting_set(simple.inverse());
}

NormalForm normal_form(const BraidWord& w) {
  NormalForm nf;
  nf.strands = w.strands;
  std::vector<Permutation>& f = nf.factors;
  for (int letter : w.letters) {
    const int i = letter - 1;
    if (!f.empty()) {
      const auto fin = finishing_set(f.back());
      if (!fin[static_cast<std::size_t>(i)]) {
        // sigma_i extends the last factor; only the pair before it can change.
        append_letter(f.back(), i);
        for (std::size_t j = f.size() - 1; j-- > 0;) {
          if (!make_left_weighted(f[j], f[j + 1])) break;
        }
        continue;
      }
    }
    Permutation g = Permutation::identity(w.strands);
    append_letter(g, i);
    f.push_back(std::move(g));
    for (std::size_t j = f.size() - 1; j-- > 0;) {
      if (!make_left_weighted(f[j], f[j + 1])) break;
    }
    while (!f.empty() && f.back().is_identity()) f.pop_back();
  }
  while (!f.empty() && f.back().is_identity()) f.pop_back();
  auto first_non_delta =
      std::find_if(f.begin(), f.end(), [](const Permutation& p) { return !is_half_twist(p); });
  nf.infimum = static_cast<int>(first_non_delta - f.begin());
  f.erase(f.begin(), first_non_delta);
  return nf;
}

BraidWord to_word(const NormalForm& nf) {
  BraidWord w{nf.strands, {}};
  const auto delta = simple_to_letters(half_twist(nf.strands));
  for (int i = 0; i < nf.infimum; ++i) w.letters.insert(w.letters.end(), delta.begin(), delta.end());
  for (const auto& f : nf.factors) {
    const auto l = simple_to_letters(f);
    w.letters.insert(w.letters.end(), l.begin(), l.end());
  }
  return w;
}

bool is_left_weighted(const NormalForm& nf) {
  for (std::size_t j = 0; j < nf.factors.size(); ++j) {
    const auto& f = nf.factors[j];
    if (f.is_identity() || is_half_twist(f)) return false;
    if (j + 1 < nf.factors.size()) {
      const auto fin = finishing_set(f);
      const auto start = starting_set(nf.factors[j + 1]);
      for (std::size_t i = 0; i < start.size(); ++i) {
        if (start[i] && !fin[i]) return false;
      }
    }
  }
  return true;
}

namespace {

bool cheap_invariants_match(const BraidWord& a, const BraidWord& b) {
  // Relations are length-preserving on positive words, so length (which is
  // also the exponent sum) and the permutation are invariants.
  return a.letters.size() == b.letters.size() &&
         underlying_permutation(a) == underlying_permutation(b);
}

}  // namespace

bool words_equal(const BraidWord& a, const BraidWord& b) {
  if (a.strands != b.strands) {
    throw StrandMismatch("words_equal: B_" + std::to_string(a.strands) + " vs B_" +
                         std::to_string(b.strands));
  }
  if (!cheap_invariants_match(a, b)) return false;
  return normal_form(a) == normal_form(b);
}

namespace {

struct NormalFormKey {
  std::size_t operator()(const NormalForm& nf) const noexcept {
    std::size_t h = static_cast<std::size_t>(nf.infimum) * 0x9e3779b97f4a7c15ULL;
    for (const auto& f : nf.factors) {
      for (int v : f.image) h = (h ^ static_cast<std::size_t>(v)) * 0x100000001b3ULL;
    }
    return h;
  }
};

// Positive braids obtained by moving one generator from the end of some
// positive word for `nf` to its front, or from the front to the end.
std::vector<NormalForm> single_letter_cyclings(const NormalForm& nf) {
  std::vector<NormalForm> out;
  const int n = nf.strands;
  // A word ending (resp. starting) with sigma_{i+1}: re-spell the last
  // (resp. first) simple piece with that letter peeled off.
  std::vector<Permutation> pieces;
  for (int k = 0; k < nf.infimum; ++k) pieces.push_back(half_twist(n));
  pieces.insert(pieces.end(), nf.factors.begin(), nf.factors.end());
  if (pieces.empty()) return out;

  auto spell = [&](std::size_t skip, const Permutation& replacement) {
    std::vector<int> letters;
    for (std::size_t k = 0; k < pieces.size(); ++k) {
      const auto l = simple_to_letters(k == skip ? replacement : pieces[k]);
      letters.insert(letters.end(), l.begin(), l.end());
    }
    return letters;
  };

  const auto fin = finishing_set(pieces.back());
  for (int i = 0; i + 1 < n; ++i) {
    if (!fin[static_cast<std::size_t>(i)]) continue;
    Permutation last = pieces.back();
    append_letter(last, i);  // sigma_{i+1} is an involution on permutations
    std::vector<int> letters{i + 1};
    const auto rest = spell(pieces.size() - 1, last);
    letters.insert(letters.end(), rest.begin(), rest.end());
    out.push_back(normal_form(BraidWord(n, std::move(letters))));
  }
  const auto start = starting_set(pieces.front());
  for (int i = 0; i + 1 < n; ++i) {
    if (!start[static_cast<std::size_t>(i)]) continue;
    Permutation first = pieces.front();
    strip_letter_front(first, i);
    auto letters = spell(0, first);
    letters.push_back(i + 1);
    out.push_back(normal_form(BraidWord(n, std::move(letters))));
  }
  return out;
}

}  // namespace

bool cyclically_equal(const BraidWord& a, const BraidWord& b) {
  if (a.strands != b.strands) {
    throw StrandMismatch("cyclically_equal: B_" + std::to_string(a.strands) + " vs B_" +
                         std::to_string(b.strands));
  }
  if (a.letters.size() != b.letters.size()) return false;
  if (a.letters.empty()) return true;
  const auto cycle_type = [](const BraidWord& w) {
    auto c = underlying_permutation(w).cycles();
    std::sort(c.begin(), c.end());
    return c;
  };
  if (cycle_type(a) != cycle_type(b)) return false;

  const Permutation pb = underlying_permutation(b);
  const NormalForm nb = normal_form(b);
  for (std::size_t r = 0; r < a.letters.size(); ++r) {
    const BraidWord rot = a.rotated(r);
    if (underlying_permutation(rot) != pb) continue;
    if (normal_form(rot) == nb) return true;
  }

  // Letter rotations of a single spelling miss rotations that only become
  // available after applying braid relations, so search the closure.
  std::unordered_set<NormalForm, NormalFormKey> seen;
  std::deque<NormalForm> frontier;
  seen.insert(normal_form(a));
  frontier.push_back(*seen.begin());
  while (!frontier.empty() && seen.size() < kCyclingSearchLimit) {
    const NormalForm cur = std::move(frontier.front());
    frontier.pop_front();
    for (auto& next : single_letter_cyclings(cur)) {
      if (next == nb) return true;
      if (seen.insert(next).second) frontier.push_back(std::move(next));
    }
  }
  return false;
}

}  // namespace turaev
