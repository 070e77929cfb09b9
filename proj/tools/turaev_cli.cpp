// turaev: command-line front end.
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <cstdint>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "turaev/alexander.hpp"
#include "turaev/bounds.hpp"
#include "turaev/braid.hpp"
#include "turaev/diagram.hpp"
#include "turaev/hfk.hpp"
#include "turaev/kernels.hpp"
#include "turaev/parallel.hpp"
#include "turaev/pd_code.hpp"
#include "turaev/verify.hpp"

namespace {

using nlohmann::json;
using namespace turaev;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

bool g_json = false;

void emit(const json& j) { std::cout << j.dump() << '\n'; }

json terms_json(const LaurentPolynomial& p) {
  json out = json::array();
  for (const auto& [e, c] : p.terms()) out.push_back({e, c});
  return out;
}

// ---- alexander / hfk / width / scan ---------------------------------------

int cmd_alexander(std::int64_t p, std::int64_t q, bool closed_form) {
  const LaurentPolynomial delta = alexander_torus({p, q});
  const auto family = classify({p, q});
  std::optional<LaurentPolynomial> closed;
  if (closed_form) {
    if (!family) {
      throw UsageError("no closed-form family contains T(" + std::to_string(p) + "," +
                       std::to_string(q) + ")");
    }
    closed = alexander_closed_form(*family);
  }
  if (g_json) {
    json j = {{"p", p}, {"q", q}, {"polynomial", to_string(delta)}, {"terms", terms_json(delta)}};
    j["family"] = family ? json{{"name", family_name(family->family)}, {"p", family->p}, {"n", family->n}}
                         : json(nullptr);
    if (closed) j["closed_form_matches"] = *closed == delta;
    emit(j);
  } else {
    std::cout << to_string(delta) << '\n';
    if (closed) {
      std::cout << "closed form (" << family_name(family->family) << ", n=" << family->n
                << "): " << (*closed == delta ? "matches" : "MISMATCH " + to_string(*closed)) << '\n';
    }
  }
  return closed && *closed != delta ? kExitFailed : kExitOk;
}

void print_hfk_grid(const HfkTable& table) {
  std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t> rank;
  std::int64_t s_max = 0;
  std::int64_t m_min = 0;
  std::int64_t m_max = 0;
  for (const auto& g : table.generators) {
    rank[{g.alexander, g.maslov}] += g.rank;
    s_max = std::max(s_max, g.alexander);
    m_min = std::min(m_min, g.maslov);
    m_max = std::max(m_max, g.maslov);
  }
  constexpr int w = 4;
  std::cout << std::setw(w) << "s\\m";
  for (std::int64_t m = m_min; m <= m_max; ++m) std::cout << std::setw(w) << m;
  std::cout << '\n';
  for (std::int64_t s = s_max; s >= -s_max; --s) {
    std::cout << std::setw(w) << s;
    for (std::int64_t m = m_min; m <= m_max; ++m) {
      const auto it = rank.find({s, m});
      std::string cell = ".";
      if (it != rank.end()) cell = it->second == 1 ? "Z" : "Z^" + std::to_string(it->second);
      std::cout << std::setw(w) << cell;
    }
    std::cout << '\n';
  }
}

int cmd_hfk(std::int64_t p, std::int64_t q) {
  const Staircase st = extract_staircase(alexander_torus({p, q}));
  const HfkTable table = hfk_from_staircase(st);
  if (g_json) {
    json gens = json::array();
    for (const auto& g : table.generators) {
      gens.push_back({{"s", g.alexander}, {"m", g.maslov}, {"rank", g.rank}});
    }
    emit({{"p", p}, {"q", q}, {"staircase", st.s}, {"generators", gens}});
    return kExitOk;
  }
  std::cout << "HFK of T(" << p << "," << q << "): " << table.generators.size() << " generators\n";
  // Wide tables are unreadable as grids; list them instead.
  if (table.generators.empty() || 2 * table.generators.front().alexander + 1 > 60) {
    for (const auto& g : table.generators) {
      std::cout << "  (s, m) = (" << g.alexander << ", " << g.maslov << ")\n";
    }
  } else {
    print_hfk_grid(table);
  }
  return kExitOk;
}

int cmd_width(std::int64_t p, std::int64_t q) {
  const WidthReport w = width_torus({p, q});
  if (g_json) {
    emit({{"delta_max", w.delta_max}, {"delta_min", w.delta_min}, {"width", w.width}});
  } else {
    std::cout << "width " << w.width << " (delta_max " << w.delta_max << ", delta_min "
              << w.delta_min << ")\n";
  }
  return kExitOk;
}

json violations_json(const ScanResult& r) {
  json v = json::array();
  for (const auto& x : r.violations) {
    v.push_back({{"p", x.p},
                 {"q", x.q},
                 {"width_pq", x.width_pq},
                 {"width_reduced", x.width_reduced},
                 {"expected_gap", x.expected_gap}});
  }
  return v;
}

int cmd_scan(std::int64_t bound, int jobs) {
  if (bound < 3) throw UsageError("--bound must be at least 3");
  const ScanResult r = scan_conjecture(bound, jobs);
  if (g_json) {
    emit({{"bound", r.bound},
          {"pairs_checked", r.pairs_checked},
          {"widths_computed", r.widths_computed},
          {"violations", violations_json(r)}});
  } else {
    std::cout << "scan p < q < " << r.bound << ": " << r.pairs_checked << " pairs checked, "
              << r.violations.size() << " violations\n"
              << violations_json(r).dump() << '\n';
  }
  return r.violations.empty() ? kExitOk : kExitFailed;
}

// ---- braids ----------------------------------------------------------------

json normal_form_json(const NormalForm& nf) {
  json factors = json::array();
  for (const auto& f : nf.factors) factors.push_back(to_string(to_word(NormalForm{nf.strands, 0, {f}})));
  return {{"infimum", nf.infimum}, {"factors", factors}};
}

int cmd_braid_eq(int strands, const std::string& a, const std::string& b, bool cyclic) {
  const BraidWord wa = parse_braid(a, strands);
  const BraidWord wb = parse_braid(b, strands);
  const bool equal = cyclic ? cyclically_equal(wa, wb) : words_equal(wa, wb);
  if (g_json) {
    emit({{"strands", strands},
          {"relation", cyclic ? "cyclic" : "equal"},
          {"equal", equal},
          {"lengths", {wa.length(), wb.length()}},
          {"normal_forms", {normal_form_json(normal_form(wa)), normal_form_json(normal_form(wb))}}});
  } else {
    std::cout << (equal ? (cyclic ? "cyclically equal" : "equal")
                        : (cyclic ? "not cyclically equal" : "not equal"))
              << " in B_" << strands << '\n';
  }
  return equal ? kExitOk : kExitFailed;
}

int cmd_verify_lemmas(int n_max, int jobs) {
  if (n_max < 1) throw UsageError("--n-max must be at least 1");
  const LemmaReport r = verify_lemmas(n_max, jobs);
  if (g_json) {
    json checks = json::array();
    for (const auto& c : r.checks) {
      checks.push_back({{"p", c.strands},
                        {"q", c.twists},
                        {"n", c.n},
                        {"residue", c.residue},
                        {"relation", c.relation == LemmaRelation::cyclic ? "cyclic" : "equal"},
                        {"rhs", c.rhs},
                        {"permutation_match", c.permutation_match},
                        {"passed", c.passed}});
    }
    emit({{"n_max", n_max}, {"all_passed", r.all_passed()}, {"checks", checks}});
  } else {
    for (const auto& c : r.checks) {
      std::cout << (c.passed ? "PASS " : "FAIL ") << "(1.." << c.strands - 1 << ")^" << c.twists
                << (c.relation == LemmaRelation::cyclic ? " ~ " : " = ") << c.rhs << '\n';
    }
    std::cout << r.checks.size() << " identities, " << (r.all_passed() ? "all passed" : "FAILURES")
              << '\n';
  }
  return r.all_passed() ? kExitOk : kExitFailed;
}

// ---- diagrams --------------------------------------------------------------

struct DiagramInput {
  int strands = 0;
  std::string word;
  std::string pd;
};

Diagram load_diagram(const DiagramInput& in) {
  if (!in.pd.empty()) {
    if (!in.word.empty()) throw UsageError("give either a braid word or --pd, not both");
    return import_pd_file(in.pd);
  }
  if (in.word.empty() && in.strands == 0) throw UsageError("need --strands and a braid word, or --pd");
  if (in.strands < 1) throw UsageError("--strands must be at least 1");
  return closure_diagram(parse_braid(in.word, in.strands));
}

void add_diagram_options(CLI::App* sub, DiagramInput& in, bool allow_pd) {
  sub->add_option("--strands,-s", in.strands, "Braid index p");
  sub->add_option("word", in.word, "Positive braid word, e.g. \"(123)^5\" or \"2{zeta}234{eta}43\"");
  if (allow_pd) sub->add_option("--pd", in.pd, "PD-code JSON file instead of a braid word");
}

int cmd_turaev_genus(const DiagramInput& in) {
  const Diagram d = load_diagram(in);
  const int sa = all_a(d).component_count;
  const int sb = all_b(d).component_count;
  const std::int64_t g = turaev_genus_diagram(d);
  if (g_json) {
    emit({{"crossings", d.crossing_count()}, {"s_A", sa}, {"s_B", sb}, {"turaev_genus", g}});
  } else {
    std::cout << "c = " << d.crossing_count() << ", s_A = " << sa << ", s_B = " << sb
              << ", g_T(D) = " << g << '\n';
  }
  return kExitOk;
}

int cmd_dalt(const DiagramInput& in) {
  const Diagram d = load_diagram(in);
  const DaltReport r = dealternating_number_diagram(d);
  const bool verified = is_alternating(apply_crossing_changes(d, r.witness));
  if (g_json) {
    json comps = json::array();
    for (const auto& c : r.components) {
      comps.push_back({{"crossings", c.crossings},
                       {"size", c.size},
                       {"weight", c.weight},
                       {"complemented", c.complemented}});
    }
    emit({{"crossings", d.crossing_count()},
          {"minimum_changes", r.minimum_changes},
          {"witness", r.witness},
          {"witness_alternates", verified},
          {"components", comps}});
  } else {
    std::cout << "dalt(D) = " << r.minimum_changes << " over " << r.components.size()
              << " constraint components\nwitness:";
    for (int k : r.witness) std::cout << ' ' << k;
    std::cout << '\n';
  }
  return verified ? kExitOk : kExitFailed;
}

int cmd_states(const DiagramInput& in, const std::string& assignment) {
  const Diagram d = load_diagram(in);
  std::vector<Smoothing> choice;
  if (assignment == "all-A" || assignment == "all-B") {
    choice.assign(static_cast<std::size_t>(d.crossing_count()),
                  assignment == "all-A" ? Smoothing::A : Smoothing::B);
  } else {
    for (char ch : assignment) {
      if (ch != 'A' && ch != 'B') throw UsageError("--assignment must be all-A, all-B or a string of A/B");
      choice.push_back(ch == 'A' ? Smoothing::A : Smoothing::B);
    }
    if (choice.size() != static_cast<std::size_t>(d.crossing_count())) {
      throw UsageError("--assignment has " + std::to_string(choice.size()) + " letters for " +
                       std::to_string(d.crossing_count()) + " crossings");
    }
  }
  const KauffmanState s = state_components(d, std::move(choice));
  if (g_json) {
    emit({{"crossings", d.crossing_count()}, {"assignment", assignment}, {"components", s.component_count}});
  } else {
    std::cout << s.component_count << '\n';
  }
  return kExitOk;
}

// ---- bounds / verify-paper -------------------------------------------------

json bracket_json(const BoundBracket& b) {
  json ref = {{"lower", b.reference.lower ? json(*b.reference.lower) : json(nullptr)},
              {"upper", b.reference.upper ? json(*b.reference.upper) : json(nullptr)},
              {"upper_needs_wrap_diagram", b.reference.upper_needs_wrap_diagram}};
  return {{"invariant", invariant_name(b.invariant)},
          {"lower", b.lower},
          {"upper", b.upper},
          {"lower_source", b.lower_source},
          {"upper_source", b.upper_source},
          {"upper_diagram", b.upper_diagram},
          {"reference", ref},
          {"needs_pd_input", b.needs_pd_input}};
}

void print_bracket(const BoundBracket& b) {
  std::cout << std::left << std::setw(14) << invariant_name(b.invariant) << std::right << " ["
            << b.lower << ", " << b.upper << "]  lower: " << b.lower_source
            << ", upper: " << b.upper_diagram;
  if (b.reference.upper) {
    std::cout << "  reference ["
              << (b.reference.lower ? std::to_string(*b.reference.lower) : std::string("-")) << ", "
              << *b.reference.upper << "]";
  }
  if (b.needs_pd_input) std::cout << "  needs wrap diagram via --pd";
  std::cout << '\n';
}

int cmd_bounds(std::int64_t p, std::int64_t q, const std::vector<std::string>& pd_files) {
  std::vector<ExtraDiagram> extra;
  for (const auto& f : pd_files) extra.push_back({f, import_pd_file(f)});
  const BoundsReport r = bounds(p, q, extra);
  if (g_json) {
    emit({{"p", r.p},
          {"q", r.q},
          {"knot", r.knot},
          {"width", r.width ? json(*r.width) : json(nullptr)},
          {"turaev_genus", bracket_json(r.turaev_genus)},
          {"dealternating", bracket_json(r.dealternating)}});
  } else {
    std::cout << "T(" << p << "," << q << ")" << (r.knot ? "" : " (link)");
    if (r.width) std::cout << ", HFK width " << *r.width;
    std::cout << '\n';
    print_bracket(r.turaev_genus);
    print_bracket(r.dealternating);
  }
  return kExitOk;
}

int cmd_verify_paper(const SuiteOptions& options) {
  const SuiteReport r = run_golden_suite(options);
  if (g_json) {
    json checks = json::array();
    for (const auto& c : r.checks) {
      checks.push_back({{"name", c.name},
                        {"passed", c.passed},
                        {"cases", c.cases},
                        {"elapsed_ms", c.elapsed_ms},
                        {"failures", c.failures}});
    }
    emit({{"scan_bound", options.scan_bound}, {"all_passed", r.all_passed()}, {"checks", checks}});
  } else {
    for (const auto& c : r.checks) {
      std::cout << (c.passed ? "PASS " : "FAIL ") << std::left << std::setw(22) << c.name
                << std::right << std::setw(7) << c.cases << " cases " << std::setw(7) << c.elapsed_ms
                << " ms\n";
      for (const auto& f : c.failures) std::cout << "     " << f << '\n';
    }
  }
  return r.all_passed() ? kExitOk : kExitFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Torus knot invariants: Alexander polynomials, knot Floer width, braid identities, "
               "Turaev genus and dealternating number of braid closures"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_flag("--json", g_json, "Machine-readable output");
  app.add_flag_callback(
      "--isa-info",
      [] { std::cerr << "kernels: " << kernels::isa_name(kernels::active().isa) << '\n'; },
      "Print the selected kernel ISA to stderr");

  std::int64_t p = 0;
  std::int64_t q = 0;
  auto add_pq = [&](CLI::App* sub) {
    sub->add_option("p", p, "First torus parameter")->required();
    sub->add_option("q", q, "Second torus parameter")->required();
  };
  int jobs = default_jobs();
  auto add_jobs = [&](CLI::App* sub) {
    sub->add_option("--jobs,-j", jobs, "Worker threads (0 = all cores; default $TURAEV_JOBS or 1)");
  };

  auto* alexander = app.add_subcommand("alexander", "Symmetrized Alexander polynomial of T(p,q)");
  add_pq(alexander);
  bool closed_form = false;
  alexander->add_flag("--closed-form", closed_form, "Also check the family's closed-form expansion");

  auto* hfk = app.add_subcommand("hfk", "Knot Floer homology of T(p,q)");
  add_pq(hfk);
  auto* width = app.add_subcommand("width", "Knot Floer width of T(p,q)");
  add_pq(width);

  auto* scan = app.add_subcommand("scan", "Check the width recursion for all coprime p < q < bound");
  std::int64_t bound = 250;
  scan->add_option("--bound", bound, "Exclusive upper bound on p and q")->capture_default_str();
  add_jobs(scan);

  auto* braid_eq = app.add_subcommand("braid-eq", "Decide equality of two positive braid words");
  int strands = 0;
  std::string word_a;
  std::string word_b;
  bool cyclic = false;
  braid_eq->add_option("--strands,-s", strands, "Braid index p")->required();
  braid_eq->add_option("word1", word_a)->required();
  braid_eq->add_option("word2", word_b)->required();
  braid_eq->add_flag("--cyclic", cyclic, "Equality up to cyclic permutation of the word");

  auto* verify_lemmas_cmd = app.add_subcommand("verify-lemmas", "Check the torus braid identities");
  int n_max = 4;
  verify_lemmas_cmd->add_option("--n-max", n_max, "Largest n")->capture_default_str();
  add_jobs(verify_lemmas_cmd);

  DiagramInput diagram_in;
  auto* genus = app.add_subcommand("turaev-genus", "Turaev genus of a braid-closure or PD diagram");
  add_diagram_options(genus, diagram_in, true);
  auto* dalt = app.add_subcommand("dalt", "Dealternating number of a diagram");
  add_diagram_options(dalt, diagram_in, true);
  auto* states = app.add_subcommand("states", "Component count of a Kauffman state");
  add_diagram_options(states, diagram_in, true);
  std::string assignment = "all-A";
  states->add_option("--assignment", assignment, "all-A, all-B, or one A/B letter per crossing")
      ->capture_default_str();

  auto* bounds_cmd = app.add_subcommand("bounds", "Turaev genus and dealternating brackets for T(p,q)");
  add_pq(bounds_cmd);
  std::vector<std::string> pd_files;
  bounds_cmd->add_option("--pd", pd_files, "Extra candidate diagram(s) of T(p,q) as PD JSON");

  auto* verify_paper = app.add_subcommand("verify-paper", "Run the full golden reproduction suite");
  SuiteOptions suite;
  verify_paper->add_option("--scan-bound", suite.scan_bound, "Bound for the conjecture scan")
      ->capture_default_str();
  add_jobs(verify_paper);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*alexander) return cmd_alexander(p, q, closed_form);
    if (*hfk) return cmd_hfk(p, q);
    if (*width) return cmd_width(p, q);
    if (*scan) return cmd_scan(bound, jobs);
    if (*braid_eq) return cmd_braid_eq(strands, word_a, word_b, cyclic);
    if (*verify_lemmas_cmd) return cmd_verify_lemmas(n_max, jobs);
    if (*genus) return cmd_turaev_genus(diagram_in);
    if (*dalt) return cmd_dalt(diagram_in);
    if (*states) return cmd_states(diagram_in, assignment);
    if (*bounds_cmd) return cmd_bounds(p, q, pd_files);
    if (*verify_paper) {
      suite.jobs = jobs;
      return cmd_verify_paper(suite);
    }
  } catch (const InconsistentConstraints& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitFailed;
  } catch (const std::invalid_argument& e) {
    // NotCoprime, parse errors, malformed PD files and other bad input.
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitFailed;
  }
  return kExitUsage;
}
