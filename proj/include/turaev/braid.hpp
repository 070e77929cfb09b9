#pragma once

// Positive braid words in the Artin braid group B_p: parsing of the
// "(i_1 i_2 ... i_k)^j" notation, the permutation projection, equality via
// Garside left normal form, and the torus-braid identities for 4, 5 and 6
// strands.

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace turaev {

class BraidParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};
class IndexOutOfRange : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};
class UnknownMacro : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};
class StrandMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};
class UnsupportedTorusFamily : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Word in the positive generators sigma_1 .. sigma_{strands-1}; letters hold
/// the 1-based generator index. The empty word is the identity.
struct BraidWord {
  int strands = 1;
  std::vector<int> letters;

  BraidWord() = default;
  /// Throws IndexOutOfRange unless every letter lies in 1..strands-1.
  BraidWord(int strands, std::vector<int> letters);

  std::size_t length() const noexcept { return letters.size(); }
  BraidWord rotated(std::size_t by) const;
  friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

BraidWord concat(const BraidWord& a, const BraidWord& b);
BraidWord power(const BraidWord& w, int exponent);

/// Letters as digits, e.g. "113321322132".
std::string to_string(const BraidWord& w);

/// (1 2 ... p-1)^q in B_p.
BraidWord torus_braid(int strands, int twists);

/// Delta_p = (1 2 ... p-1)^p.
BraidWord full_twist(int strands);

/// Named subwords usable as {name} in braid text. "delta_p" always expands
/// to the full twist on the word's strand count.
class MacroTable {
 public:
  /// alpha, beta, gamma (B_5) and zeta, eta (B_6).
  static MacroTable standard();

  void define(std::string name, std::vector<int> letters);
  /// Throws UnknownMacro.
  std::vector<int> expand(std::string_view name, int strands) const;
  bool contains(std::string_view name) const;
  const std::map<std::string, std::vector<int>, std::less<>>& entries() const noexcept {
    return table_;
  }

 private:
  std::map<std::string, std::vector<int>, std::less<>> table_;
};

/// word := term+ ; term := atom ('^' exponent)* ;
/// atom := digit | '{' name '}' | '(' word ')' ; exponent := int | '{' int '}'.
/// Whitespace is ignored. Throws BraidParseError, IndexOutOfRange or
/// UnknownMacro.
BraidWord parse_braid(std::string_view text, int strands,
                      const MacroTable& macros = MacroTable::standard());

/// Image of each top position (0-based): strand starting at position i ends
/// at position image[i].
struct Permutation {
  std::vector<int> image;

  static Permutation identity(int n);
  int size() const noexcept { return static_cast<int>(image.size()); }
  Permutation inverse() const;
  bool is_identity() const noexcept;
  /// Cycle lengths in order of smallest element.
  std::vector<int> cycles() const;
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;
};

/// Apply `first`, then `second`.
Permutation then(const Permutation& first, const Permutation& second);

Permutation underlying_permutation(const BraidWord& w);

/// Left normal form Delta^infimum * A_1 * ... * A_r of a positive braid, each
/// A_i a permutation braid stored as its permutation.
struct NormalForm {
  int strands = 1;
  int infimum = 0;
  std::vector<Permutation> factors;

  friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

NormalForm normal_form(const BraidWord& w);

/// Positive word spelling the normal form (Delta's first, then each factor).
BraidWord to_word(const NormalForm& nf);

/// Starting set of a permutation braid: i (0-based) with sigma_{i+1} a prefix.
std::vector<bool> starting_set(const Permutation& simple);
/// Finishing set: i with sigma_{i+1} a suffix.
std::vector<bool> finishing_set(const Permutation& simple);
/// True when every adjacent pair satisfies S(A_{i+1}) subset of F(A_i) and no
/// factor is trivial or Delta.
bool is_left_weighted(const NormalForm& nf);

/// Equality in B_p. Throws StrandMismatch.
bool words_equal(const BraidWord& a, const BraidWord& b);

/// True when b is reached from a by repeatedly moving a letter between the
/// two ends of some positive word for the braid (rotations modulo braid
/// relations). The search visits at most kCyclingSearchLimit normal forms.
/// Throws StrandMismatch.
inline constexpr std::size_t kCyclingSearchLimit = 200000;
bool cyclically_equal(const BraidWord& a, const BraidWord& b);

enum class LemmaRelation { equal, cyclic };

struct LemmaWord {
  int strands = 0;
  int twists = 0;  // q
  int n = 0;
  int residue = 0;  // q mod p
  LemmaRelation relation = LemmaRelation::equal;
  std::string text;  // right-hand side with exponents substituted
  BraidWord word;
};

/// The right-hand-side word D_{p,q} for p in {4, 5, 6}, q >= p. Throws
/// UnsupportedTorusFamily for other (p, q), including q mod 6 in 2..5 for p = 6.
LemmaWord lemma_word(int strands, int twists);

struct LemmaCheck {
  int strands = 0;
  int residue = 0;
  int n = 0;
  int twists = 0;
  LemmaRelation relation = LemmaRelation::equal;
  std::string rhs;
  bool permutation_match = false;
  bool passed = false;
};

struct LemmaReport {
  std::vector<LemmaCheck> checks;
  bool all_passed() const;
};

/// Checks every identity for n = 1..n_max.
LemmaReport verify_lemmas(int n_max, int jobs = 1);

}  // namespace turaev
