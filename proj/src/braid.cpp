#include <algorithm>
#include <cctype>
#include <numeric>

#include "turaev/braid.hpp"
#include "turaev/parallel.hpp"

namespace turaev {

namespace {

void check_letters(int strands, const std::vector<int>& letters) {
  for (int l : letters) {
    if (l < 1 || l >= strands) {
      throw IndexOutOfRange("generator " + std::to_string(l) + " is not in B_" +
                            std::to_string(strands));
    }
  }
}

}  // namespace

BraidWord::BraidWord(int strands_, std::vector<int> letters_)
    : strands(strands_), letters(std::move(letters_)) {
  if (strands < 1) throw std::invalid_argument("BraidWord: strand count must be positive");
  check_letters(strands, letters);
}

BraidWord BraidWord::rotated(std::size_t by) const {
  BraidWord out = *this;
  if (!letters.empty()) {
    std::rotate(out.letters.begin(),
                out.letters.begin() + static_cast<std::ptrdiff_t>(by % letters.size()),
                out.letters.end());
  }
  return out;
}

BraidWord concat(const BraidWord& a, const BraidWord& b) {
  if (a.strands != b.strands) throw StrandMismatch("concat: words on different strand counts");
  BraidWord out = a;
  out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
  return out;
}

BraidWord power(const BraidWord& w, int exponent) {
  if (exponent < 0) throw std::invalid_argument("power: negative exponent on a positive word");
  BraidWord out{w.strands, {}};
  out.letters.reserve(w.letters.size() * static_cast<std::size_t>(exponent));
  for (int i = 0; i < exponent; ++i) {
    out.letters.insert(out.letters.end(), w.letters.begin(), w.letters.end());
  }
  return out;
}

std::string to_string(const BraidWord& w) {
  std::string out;
  for (int l : w.letters) out += std::to_string(l);
  return out;
}

BraidWord torus_braid(int strands, int twists) {
  std::vector<int> cycle(static_cast<std::size_t>(std::max(strands - 1, 0)));
  std::iota(cycle.begin(), cycle.end(), 1);
  return power(BraidWord(strands, cycle), twists);
}

BraidWord full_twist(int strands) { return torus_braid(strands, strands); }

// ---------------------------------------------------------------------------
// Macros and parsing

MacroTable MacroTable::standard() {
  MacroTable t;
  t.define("alpha", {3, 2, 3, 3, 1, 1});
  t.define("beta", {3, 1, 1, 2, 3, 1, 1, 2, 3, 3, 4, 3, 1, 1});
  t.define("gamma", {3, 1, 1, 2, 3, 1, 1, 2, 3, 1, 1});
  t.define("zeta", {1, 3, 3, 5, 4, 5, 3, 3, 2, 3, 3, 4, 5, 1, 3});
  t.define("eta", {3, 1, 5, 5, 3, 1, 2, 1, 3});
  return t;
}

void MacroTable::define(std::string name, std::vector<int> letters) {
  table_[std::move(name)] = std::move(letters);
}

bool MacroTable::contains(std::string_view name) const {
  return name == "delta_p" || table_.find(name) != table_.end();
}

std::vector<int> MacroTable::expand(std::string_view name, int strands) const {
  if (name == "delta_p") return full_twist(strands).letters;
  auto it = table_.find(name);
  if (it == table_.end()) throw UnknownMacro("unknown braid macro {" + std::string(name) + "}");
  return it->second;
}

namespace {

class BraidParser {
 public:
  BraidParser(std::string_view text, int strands, const MacroTable& macros)
      : text_(text), strands_(strands), macros_(macros) {}

  std::vector<int> parse() {
    auto letters = word();
    skip_ws();
    if (!at_end()) fail(peek() == ')' ? "unbalanced ')'" : "unexpected character");
    return letters;
  }

 private:
  std::vector<int> word() {
    std::vector<int> out;
    skip_ws();
    if (at_end() || peek() == ')') fail("expected a generator, '(' or '{'");
    while (true) {
      skip_ws();
      if (at_end() || peek() == ')') break;
      auto t = term();
      out.insert(out.end(), t.begin(), t.end());
    }
    return out;
  }

  std::vector<int> term() {
    std::vector<int> base = atom();
    skip_ws();
    while (peek() == '^') {
      get();
      const int e = exponent();
      std::vector<int> repeated;
      repeated.reserve(base.size() * static_cast<std::size_t>(e));
      for (int i = 0; i < e; ++i) repeated.insert(repeated.end(), base.begin(), base.end());
      base = std::move(repeated);
      skip_ws();
    }
    return base;
  }

  std::vector<int> atom() {
    skip_ws();
    const char c = peek();
    if (c == '(') {
      get();
      auto inner = word();
      skip_ws();
      if (get() != ')') fail("expected ')'");
      return inner;
    }
    if (c == '{') {
      get();
      std::string name;
      while (!at_end() && peek() != '}') {
        if (!std::isspace(static_cast<unsigned char>(peek()))) name += peek();
        get();
      }
      if (get() != '}') fail("unterminated macro name");
      if (name.empty()) fail("empty macro name");
      auto letters = macros_.expand(name, strands_);
      for (int l : letters) {
        if (l >= strands_) {
          throw IndexOutOfRange("macro {" + name + "} uses generator " + std::to_string(l) +
                                ", which is not in B_" + std::to_string(strands_));
        }
      }
      return letters;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      get();
      const int g = c - '0';
      if (g == 0) fail("generator index 0");
      if (g >= strands_) {
        throw IndexOutOfRange("generator " + std::to_string(g) + " is not in B_" +
                              std::to_string(strands_));
      }
      return {g};
    }
    fail("expected a generator, '(' or '{'");
  }

  int exponent() {
    skip_ws();
    bool braced = false;
    if (peek() == '{') {
      get();
      braced = true;
      skip_ws();
    }
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a non-negative exponent");
    long v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (get() - '0');
      if (v > 1'000'000) fail("exponent too large");
    }
    if (braced) {
      skip_ws();
      if (get() != '}') fail("expected '}' after exponent");
    }
    return static_cast<int>(v);
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  char get() { return at_end() ? '\0' : text_[pos_++]; }

  [[noreturn]] void fail(const std::string& why) const {
    throw BraidParseError("parse_braid: " + why + " at offset " + std::to_string(pos_) +
                          " in \"" + std::string(text_) + "\"");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int strands_;
  const MacroTable& macros_;
};

}  // namespace

BraidWord parse_braid(std::string_view text, int strands, const MacroTable& macros) {
  if (strands < 1) throw std::invalid_argument("parse_braid: strand count must be positive");
  return BraidWord(strands, BraidParser(text, strands, macros).parse());
}

// ---------------------------------------------------------------------------
// Permutations

Permutation Permutation::identity(int n) {
  Permutation p;
  p.image.resize(static_cast<std::size_t>(n));
  std::iota(p.image.begin(), p.image.end(), 0);
  return p;
}

Permutation Permutation::inverse() const {
  Permutation inv;
  inv.image.resize(image.size());
  for (std::size_t i = 0; i < image.size(); ++i) {
    inv.image[static_cast<std::size_t>(image[i])] = static_cast<int>(i);
  }
  return inv;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < image.size(); ++i) {
    if (image[i] != static_cast<int>(i)) return false;
  }
  return true;
}

std::vector<int> Permutation::cycles() const {
  std::vector<int> lengths;
  std::vector<bool> seen(image.size(), false);
  for (std::size_t i = 0; i < image.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(image[j])) {
      seen[j] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  return lengths;
}

Permutation then(const Permutation& first, const Permutation& second) {
  Permutation out;
  out.image.resize(first.image.size());
  for (std::size_t i = 0; i < first.image.size(); ++i) {
    out.image[i] = second.image[static_cast<std::size_t>(first.image[i])];
  }
  return out;
}

Permutation underlying_permutation(const BraidWord& w) {
  // at[pos] = starting position of the strand currently at pos.
  std::vector<int> at(static_cast<std::size_t>(w.strands));
  std::iota(at.begin(), at.end(), 0);
  for (int l : w.letters) std::swap(at[static_cast<std::size_t>(l - 1)], at[static_cast<std::size_t>(l)]);
  Permutation p;
  p.image.resize(at.size());
  for (std::size_t pos = 0; pos < at.size(); ++pos) p.image[static_cast<std::size_t>(at[pos])] = static_cast<int>(pos);
  return p;
}

// ---------------------------------------------------------------------------
// Torus-braid identities

namespace {

std::string pow_text(const std::string& base, int e) {
  return "(" + base + ")^{" + std::to_string(e) + "}";
}

}  // namespace

LemmaWord lemma_word(int strands, int twists) {
  const int p = strands;
  const int q = twists;
  if (p < 4 || p > 6 || q < p) {
    throw UnsupportedTorusFamily("lemma_word: no identity for (" + std::to_string(p) + ", " +
                                 std::to_string(q) + "); need p in {4,5,6} and q >= p");
  }
  const int n = q / p;
  const int r = q % p;
  LemmaWord lw;
  lw.strands = p;
  lw.twists = q;
  lw.n = n;
  lw.residue = r;
  std::string& s = lw.text;
  if (p == 4) {
    const std::string ones = "1^{" + std::to_string(r >= 2 ? 2 * n + 2 : 2 * n) + "}";
    const std::string threes = "3^{" + std::to_string(2 * n) + "}";
    switch (r) {
      case 0: s = ones + threes + pow_text("2132", 2 * n); break;
      case 1: s = ones + threes + pow_text("2132", 2 * n - 1) + "2131213"; break;
      case 2: s = ones + threes + pow_text("2132", 2 * n + 1); break;
      case 3: s = ones + threes + pow_text("2132", 2 * n) + "2131213"; break;
    }
  } else if (p == 5) {
    const std::string a = pow_text("{alpha}", n - 1);
    const std::string b = pow_text("{beta}", n - 1);
    switch (r) {
      case 0: s = "2311" + a + "234" + b + "{gamma}43"; break;
      case 1: s = "1323311" + a + "234" + b + "{gamma}343"; break;
      case 2: s = "1231323311" + a + "234" + b + "{gamma}3433"; break;
      case 3:
        s = "12131231323311" + a + "234" + b + "{gamma}3433";
        lw.relation = LemmaRelation::cyclic;
        break;
      case 4:
        s = "2311" + pow_text("{alpha}", n) + "234" + pow_text("{beta}", n) + "311231422";
        break;
    }
  } else {
    const std::string z = pow_text("{zeta}323", n - 1);
    const std::string e = pow_text("{eta}343", n - 1);
    switch (r) {
      case 0: s = "2" + z + "{zeta}234" + e + "{eta}43"; break;
      case 1: s = "1323" + z + "{zeta}234" + e + "{eta}3435"; break;
      default:
        throw UnsupportedTorusFamily("lemma_word: T(6, 6n+" + std::to_string(r) +
                                     ") has no known identity");
    }
  }
  lw.word = parse_braid(s, p);
  return lw;
}

bool LemmaReport::all_passed() const {
  return !checks.empty() &&
         std::all_of(checks.begin(), checks.end(), [](const LemmaCheck& c) { return c.passed; });
}

LemmaReport verify_lemmas(int n_max, int jobs) {
  if (n_max < 1) throw std::invalid_argument("verify_lemmas: n_max must be at least 1");
  struct Case {
    int p, r, n;
  };
  std::vector<Case> cases;
  for (int n = 1; n <= n_max; ++n) {
    for (int r = 0; r < 4; ++r) cases.push_back({4, r, n});
    for (int r = 0; r < 5; ++r) cases.push_back({5, r, n});
    for (int r = 0; r < 2; ++r) cases.push_back({6, r, n});
  }
  LemmaReport report;
  report.checks.resize(cases.size());
  parallel_for(cases.size(), jobs, [&](std::size_t i) {
    const auto [p, r, n] = cases[i];
    const int q = p * n + r;
    const LemmaWord rhs = lemma_word(p, q);
    const BraidWord lhs = torus_braid(p, q);
    LemmaCheck& c = report.checks[i];
    c.strands = p;
    c.residue = r;
    c.n = n;
    c.twists = q;
    c.relation = rhs.relation;
    c.rhs = rhs.text;
    if (rhs.relation == LemmaRelation::equal) {
      c.permutation_match = underlying_permutation(lhs) == underlying_permutation(rhs.word);
      c.passed = c.permutation_match && words_equal(lhs, rhs.word);
    } else {
      // Rotation conjugates the permutation, so only the cycle type must match.
      auto ca = underlying_permutation(lhs).cycles();
      auto cb = underlying_permutation(rhs.word).cycles();
      std::sort(ca.begin(), ca.end());
      std::sort(cb.begin(), cb.end());
      c.permutation_match = ca == cb;
      c.passed = c.permutation_match && cyclically_equal(lhs, rhs.word);
    }
  });
  return report;
}

}  // namespace turaev
