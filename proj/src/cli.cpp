#include "tmwords/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "tmwords/avoidance.hpp"
#include "tmwords/cache.hpp"
#include "tmwords/complexity.hpp"
#include "tmwords/enumerate.hpp"
#include "tmwords/errors.hpp"
#include "tmwords/interchange.hpp"
#include "tmwords/parallel.hpp"
#include "tmwords/sequences.hpp"
#include "tmwords/verify.hpp"
#include "tmwords/word.hpp"

namespace tmwords {

namespace {

constexpr std::size_t kMaxGenerateLength = std::size_t{1} << 26;
constexpr std::size_t kMaxInstructions = 26;
constexpr std::size_t kMaxEnumN = 4096;
constexpr std::size_t kMaxCircularN = 256;
constexpr std::size_t kMaxSeriesTerms = 1 << 20;

struct GlobalFlags {
  unsigned threads = 0;
  bool no_cache = false;
  std::string format;
  bool timings = false;
};

// Everything the subcommands parse into; one instance per run() call.
struct Args {
  GlobalFlags global;

  std::string family;
  std::size_t length = 0;
  int k = 2;
  std::string instructions;

  std::string pattern;
  std::string word;

  std::string enum_kind;
  std::size_t max_n = 0;
  bool check_formula = false;

  std::string analysis;
  std::string input;
  std::string builtin;
  std::size_t terms = 256;
  int order = 1;
  std::size_t max_pre = 0;
  std::size_t max_per = 0;
  std::int64_t value = 4;
  std::size_t max_order = 0;
  std::int64_t from_index = 1;

  unsigned base = 2;
  std::size_t window = 0;
  unsigned depth = 10;

  unsigned interchange_k = 1;
  std::string c = "1";
  bool all_splits = false;

  bool quick = false;
  std::vector<int> criteria;

  std::string cache_action;
};

class ThreadScope {
 public:
  explicit ThreadScope(unsigned n) : saved_(thread_count()), active_(n != 0) {
    if (active_) set_thread_count(n);
  }
  ~ThreadScope() {
    if (active_) set_thread_count(saved_);
  }
  ThreadScope(const ThreadScope&) = delete;
  ThreadScope& operator=(const ThreadScope&) = delete;

 private:
  unsigned saved_;
  bool active_;
};

Format format_of(const GlobalFlags& g) { return g.format == "csv" ? Format::kCsv : Format::kJson; }

SequenceCache cache_for(const GlobalFlags& g) {
  return g.no_cache ? SequenceCache::disabled() : SequenceCache::from_environment();
}

Json split_json(const Split& s) { return {s.prefix_len, s.mid_len, s.suffix_len}; }

// ---- generate -------------------------------------------------------------

std::string generated_word(const Args& a) {
  if (a.family == "paperfolding") {
    if (a.instructions.empty()) throw ParameterError("generate paperfolding needs --instructions BITS");
    if (a.instructions.size() > kMaxInstructions) {
      throw ResourceError("generate paperfolding: at most " + std::to_string(kMaxInstructions) + " instructions");
    }
    const FiniteWord w = paperfolding_prefix(InstructionSequence::parse(a.instructions));
    if (a.length == 0) return w.str();
    if (a.length > w.size()) {
      throw ParameterError("generate paperfolding: " + std::to_string(a.instructions.size()) +
                           " instructions give only " + std::to_string(w.size()) + " letters");
    }
    return w.prefix(a.length).str();
  }
  if (a.length == 0) throw ParameterError("generate " + a.family + " needs --length L >= 1");
  if (a.length > kMaxGenerateLength) throw ResourceError("generate: length above 2^26");
  const int k = a.family == "tm" ? 2 : a.k;
  if (k < 2 || k > 10) throw ParameterError("generate tmk: --k must lie in [2, 10] for digit output");
  std::string out(a.length, '0');
  for (std::size_t n = 0; n < a.length; ++n) out[n] = static_cast<char>('0' + tk_letter(n, k));
  return out;
}

int cmd_generate(const Args& a, std::ostream& out) {
  const std::string word = generated_word(a);
  if (a.global.format.empty()) {
    out << word << '\n';
    return 0;
  }
  ReportEnvelope r;
  r.claim_id = "generate." + a.family;
  r.parameters = {{"family", a.family}, {"length", word.size()}};
  if (a.family == "tmk") r.parameters["k"] = a.k;
  if (a.family == "paperfolding") r.parameters["instructions"] = a.instructions;
  if (format_of(a.global) == Format::kJson) {
    r.evidence = {{"word", word}};
  } else {
    Json rows = Json::array();
    for (std::size_t n = 0; n < word.size(); ++n) rows.push_back({n, word[n] - '0'});
    r.evidence = {{"columns", {"n", "letter"}}, {"rows", rows}};
  }
  out << emit(r, format_of(a.global), a.global.timings);
  return 0;
}

// ---- avoid ----------------------------------------------------------------

ReportEnvelope cmd_avoid(const Args& a) {
  const FiniteWord w = FiniteWord::parse(a.word);
  ReportEnvelope r;
  r.claim_id = "avoid." + a.pattern;
  r.parameters = {{"pattern", a.pattern}, {"word", a.word}};
  if (a.pattern == "overlap") {
    const auto occ = find_overlap(w);
    r.evidence = {{"word", a.word},
                  {"overlap", occ ? Json{{"position", occ->position}, {"period", occ->period}} : Json(nullptr)}};
    r.status = occ ? Status::kFail : Status::kPass;
  } else if (a.pattern == "square") {
    const auto squares = find_squares(w);
    Json list = Json::array();
    for (const auto& s : squares) list.push_back({{"position", s.position}, {"half_length", s.half_length}});
    r.evidence = {{"word", a.word}, {"squares", list}};
    r.status = squares.empty() ? Status::kPass : Status::kFail;
  } else {
    // The first conjugate that contains an overlap, if any.
    Json witness = nullptr;
    const auto rotations = conjugates(w);
    for (std::size_t i = 0; i < rotations.size() && witness.is_null(); ++i) {
      if (const auto occ = find_overlap(rotations[i])) {
        witness = {{"rotation", i},
                   {"conjugate", rotations[i].str()},
                   {"overlap", {{"position", occ->position}, {"period", occ->period}}}};
      }
    }
    r.evidence = {{"word", a.word}, {"circular_overlap_free", witness.is_null()}, {"witness", witness}};
    r.status = witness.is_null() ? Status::kPass : Status::kFail;
  }
  return r;
}

// ---- enum -----------------------------------------------------------------

ReportEnvelope cmd_enum(const Args& a) {
  ReportEnvelope r;
  const SequenceCache cache = cache_for(a.global);
  r.claim_id = "enum." + a.enum_kind;
  r.parameters = {{"max_n", a.max_n}};
  if (a.enum_kind == "overlap-free") {
    if (a.max_n > kMaxEnumN) throw ResourceError("enum overlap-free: --max above " + std::to_string(kMaxEnumN));
    const auto counts = cached_overlap_free_counts(a.max_n, cache);
    Json rows = Json::array();
    for (std::size_t n = 0; n < counts.size(); ++n) rows.push_back({n, counts[n]});
    r.evidence = {{"columns", {"n", "a_n"}}, {"rows", rows}, {"method", to_string(CountMethod::kPrunedDfs)}};
  } else {
    if (a.max_n < 1) throw ParameterError("enum circular: --max must be >= 1");
    if (a.max_n > kMaxCircularN) throw ResourceError("enum circular: --max above " + std::to_string(kMaxCircularN));
    const auto c = builtin_sequence("circular", a.max_n, cache);
    Json rows = Json::array();
    std::vector<std::int64_t> support;
    for (std::size_t i = 0; i < c.window.size(); ++i) {
      const auto n = c.window.offset + static_cast<std::int64_t>(i);
      rows.push_back({n, c.window.values[i]});
      if (c.window.values[i] != 0) support.push_back(n);
    }
    r.evidence = {{"columns", {"n", "c_n"}}, {"rows", rows}, {"support", support}};
  }
  return r;
}

// ---- complexity -----------------------------------------------------------

ReportEnvelope cmd_complexity(const Args& a) {
  if (a.max_n < 1) throw ParameterError("complexity: --max must be >= 1");
  ReportEnvelope r;
  r.claim_id = "complexity." + a.family;
  r.parameters = {{"family", a.family}, {"max_n", a.max_n}, {"check_formula", a.check_formula}};
  ComplexityTable brute, formula;
  if (a.family == "tm") {
    r.parameters["prefix_cap"] = kFactorPrefixCap;
    brute = brute_table(thue_morse_source(), a.max_n);
    if (a.check_formula) formula = tm_formula_table(a.max_n);
  } else if (a.family == "tmk") {
    r.parameters["k"] = a.k;
    r.parameters["prefix_cap"] = kFactorPrefixCap;
    brute = brute_table(tk_source(a.k), a.max_n);
    if (a.check_formula) formula = tk_formula_table(a.k, a.max_n);
  } else {
    r.parameters["max_instructions"] = kPaperfoldingMaxInstructions;
    brute = paperfolding_brute_table(a.max_n);
    if (a.check_formula) formula = paperfolding_formula_table(a.max_n);
  }
  Json rows = Json::array();
  bool all_match = true;
  for (std::size_t n = 1; n <= a.max_n; ++n) {
    if (a.check_formula) {
      const bool match = brute.values[n] == formula.values[n];
      all_match = all_match && match;
      rows.push_back({n, brute.values[n], formula.values[n], match});
    } else {
      rows.push_back({n, brute.values[n]});
    }
  }
  r.evidence = {{"columns", a.check_formula ? Json{"n", "p_brute", "p_formula", "match"} : Json{"n", "p_brute"}},
                {"rows", rows}};
  if (a.check_formula) r.evidence["all_match"] = all_match;
  r.status = all_match ? Status::kPass : Status::kFail;
  return r;
}

// ---- series ---------------------------------------------------------------

IntegerSequence load_series(const Args& a, const SequenceCache& cache) {
  if (!a.input.empty()) {
    std::ifstream in(a.input);
    if (!in) throw ParameterError("cannot read --input file '" + a.input + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    IntegerSequence s;
    s.id = "file:" + a.input;
    s.provenance = Provenance::kBrute;
    s.window = parse_sequence_text(buf.str());
    return s;
  }
  if (a.terms > kMaxSeriesTerms) throw ResourceError("series: --terms above 2^20");
  if (a.builtin == "overlap-free" && a.terms > kMaxEnumN + 1) {
    throw ResourceError("series: overlap-free builtin limited to " + std::to_string(kMaxEnumN + 1) + " terms");
  }
  if (a.builtin == "circular" && a.terms > kMaxCircularN) {
    throw ResourceError("series: circular builtin limited to " + std::to_string(kMaxCircularN) + " terms");
  }
  return builtin_sequence(a.builtin, a.terms, cache);
}

Json window_rows(const SequenceWindow& w) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < w.size(); ++i) rows.push_back({w.offset + static_cast<std::int64_t>(i), w.values[i]});
  return rows;
}

ReportEnvelope cmd_series(const Args& a) {
  const IntegerSequence seq = load_series(a, cache_for(a.global));
  const SequenceWindow& s = seq.window;
  ReportEnvelope r;
  r.claim_id = "series." + a.analysis;
  r.parameters = {{"sequence_id", seq.id}};
  if (a.input.empty()) r.parameters["terms"] = a.terms;
  Json result;
  Json extra = Json::object();
  if (a.analysis == "diff") {
    r.parameters["order"] = a.order;
    const SequenceWindow d = differences(s, a.order);
    result = d.values;
    extra = {{"columns", {"n", "value"}}, {"rows", window_rows(d)}};
  } else if (a.analysis == "period") {
    const std::size_t max_per = a.max_per != 0 ? a.max_per : std::max<std::size_t>(1, s.size() / 4);
    const std::size_t max_pre = a.max_pre != 0 ? a.max_pre : s.size() / 4;
    r.parameters["max_pre"] = max_pre;
    r.parameters["max_per"] = max_per;
    const auto g = detect_eventual_period(s, max_pre, max_per);
    result = g ? Json{{"preperiod", g->preperiod}, {"period", g->period}} : Json(nullptr);
  } else if (a.analysis == "run") {
    r.parameters["value"] = a.value;
    result = max_run(s, a.value);
  } else if (a.analysis == "recurrence") {
    const std::size_t max_order = a.max_order != 0 ? a.max_order : std::min<std::size_t>(10, s.size() / 3);
    r.parameters["max_order"] = max_order;
    const auto g = guess_linear_recurrence(s, max_order);
    if (g) {
      Json coeffs = Json::array();
      for (const auto& c : g->coefficients) coeffs.push_back(rational_string(c));
      result = {{"order", g->order}, {"coefficients", coeffs}};
    } else {
      result = nullptr;
    }
  } else {
    r.parameters["from_index"] = a.from_index;
    const GapSupport gs = support_and_gap_ratio(s, a.from_index);
    result = {{"support", gs.support}, {"min_ratio", rational_string(gs.min_ratio)}};
  }
  r.evidence = {{"sequence_id", seq.id},
                {"analysis", a.analysis},
                {"provenance", to_string(seq.provenance)},
                {"result", result},
                {"evidence_window", {{"offset", s.offset}, {"length", s.size()}}}};
  r.evidence.update(extra);
  return r;
}

// ---- kernel ---------------------------------------------------------------

ReportEnvelope cmd_kernel(const Args& a) {
  const KernelAutomaton aut = kernel_closure(builtin_indexed(a.builtin), a.base, a.depth, a.window);
  ReportEnvelope r;
  r.claim_id = "kernel";
  r.parameters = {{"builtin", a.builtin}, {"base", a.base}, {"window", a.window}, {"depth_limit", a.depth}};
  Json classes = Json::array();
  for (const auto& d : aut.classes) classes.push_back({{"exponent", d.exponent}, {"residue", d.residue}});
  Json transitions = Json::array();
  for (const auto& row : aut.transitions) {
    Json t = Json::array();
    for (auto c : row) t.push_back(c == KernelAutomaton::kUnresolved ? Json("unresolved") : Json(c));
    transitions.push_back(t);
  }
  r.evidence = {{"class_count", aut.classes.size()},
                {"classes", classes},
                {"transitions", transitions},
                {"complete", aut.complete},
                {"label", aut.complete ? "guessed" : "unresolved"}};
  r.status = aut.complete ? Status::kPass : Status::kInconclusive;
  return r;
}

// ---- verify-all / cache ---------------------------------------------------

int cmd_verify(const Args& a, std::ostream& out) {
  VerifyOptions o;
  o.quick = a.quick;
  o.cache = cache_for(a.global);
  const auto reports = run_acceptance(o, a.criteria);
  Status overall = Status::kPass;
  for (const auto& rep : reports) overall = combine(overall, rep.status);
  if (format_of(a.global) == Format::kCsv) {
    ReportEnvelope table;
    table.claim_id = "verify-all";
    Json rows = Json::array();
    for (const auto& rep : reports) {
      Json row = {rep.claim_id, rep.parameters.value("criterion", ""), to_string(rep.status)};
      if (a.global.timings) row.push_back(rep.elapsed_ms);
      rows.push_back(row);
    }
    table.evidence = {{"columns", a.global.timings ? Json{"claim_id", "criterion", "status", "elapsed_ms"}
                                                   : Json{"claim_id", "criterion", "status"}},
                      {"rows", rows}};
    out << emit(table, Format::kCsv);
  } else {
    for (const auto& rep : reports) out << emit(rep, Format::kJson, a.global.timings);
  }
  return exit_code_for(overall);
}

ReportEnvelope cmd_cache(const Args& a) {
  const SequenceCache cache = SequenceCache::from_environment();
  ReportEnvelope r;
  r.claim_id = "cache." + a.cache_action;
  r.parameters = {{"directory", cache.directory().string()}};
  if (a.cache_action == "clear") {
    r.evidence = {{"removed", cache.clear()}};
  } else {
    const auto s = cache.stat();
    r.evidence = {{"enabled", cache.enabled()}, {"entries", s.entries}, {"bytes", s.bytes}};
  }
  return r;
}

int print(const ReportEnvelope& r, const Args& a, std::ostream& out) {
  out << emit(r, format_of(a.global), a.global.timings);
  return exit_code_for(r.status);
}

}  // namespace

ReportEnvelope interchange_envelope(unsigned k, const Rational& c, bool exhaustive_splits) {
  ReportEnvelope r;
  r.claim_id = "interchange";
  const InterchangeReport rep = contradiction_report(k == 0 ? 1 : k, c);
  const WitnessInstance inst = build_witness(k);
  const bool harness = k >= 1 && k <= kMaxRK;
  const bool sampled = harness && k == 2 && !exhaustive_splits;
  r.parameters = {{"k", k}, {"c", rational_string(c)}, {"splits", harness ? (sampled ? "sample" : "all") : "none"}};

  Json evidence;
  evidence["k"] = k;
  evidence["n"] = inst.n;
  evidence["witness_minimal_overlap"] = minimal_overlap_check(inst.w);
  Status status = evidence["witness_minimal_overlap"].get<bool>() ? Status::kPass : Status::kFail;
  if (harness) {
    const auto R = build_R(k);
    const std::size_t bound = std::size_t{1} << ((inst.n - 1) / 8);
    bool all_overlap = true;
    for (const auto& z : R) all_overlap = all_overlap && find_overlap(z).has_value();
    const std::vector<Split> splits = sampled ? sampled_splits_k2() : all_splits(inst.n);
    std::size_t pairs = 0;
    std::size_t fixed_max = 0;
    Json violations = Json::array();
    Json over_bound = Json::array();
    for (const auto& split : splits) {
      pairs += swap_pairs(R, split);
      for (const auto& v : swap_check(R, split)) {
        violations.push_back({{"split", split_json(split)}, {"i", v.i}, {"j", v.j}, {"word", v.recombined.str()}});
      }
      const std::size_t f = fixed_middle_bound(R, split);
      fixed_max = std::max(fixed_max, f);
      if (f > bound) over_bound.push_back({{"split", split_json(split)}, {"fixed_middle", f}});
    }
    evidence["R_size"] = R.size();
    evidence["R_size_formula"] = rep.r_size.str();
    evidence["all_contain_overlap"] = all_overlap;
    evidence["splits_tested"] = splits.size();
    evidence["pairs_tested"] = pairs;
    evidence["violations"] = violations;
    evidence["fixed_middle_max"] = fixed_max;
    evidence["bound"] = bound;
    evidence["splits_over_bound"] = over_bound;
    const bool ok = BigInt(R.size()) == rep.r_size && all_overlap && violations.empty() && fixed_max <= bound;
    if (!ok) status = Status::kFail;
  } else {
    evidence["R_size"] = k == 0 ? Json(nullptr) : Json(rep.r_size.str());
    evidence["splits_tested"] = 0;
    evidence["pairs_tested"] = 0;
    evidence["violations"] = Json::array();
  }
  if (k >= 1) {
    evidence["contradiction"] = {{"c", rational_string(c)},
                                 {"lower", rational_string(rep.lower_bound)},
                                 {"upper", rep.upper_bound.str()},
                                 {"holds", rep.contradiction},
                                 {"threshold_k", rep.threshold_k ? Json(*rep.threshold_k) : Json(nullptr)}};
  } else {
    evidence["contradiction"] = nullptr;
  }
  r.evidence = evidence;
  r.status = status;
  return r;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Args a;
  CLI::App app{"Thue-Morse and overlap-free word toolkit", "tmwords"};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--threads", a.global.threads, "Worker threads (0 = hardware concurrency)");
  app.add_flag("--no-cache", a.global.no_cache, "Bypass the sequence cache");
  app.add_option("--format", a.global.format, "Report format")->check(CLI::IsMember({"json", "csv"}));
  app.add_flag("--timings", a.global.timings, "Include elapsed_ms in JSON reports");

  auto* gen = app.add_subcommand("generate", "Print a prefix of tm, tmk or a paperfolding word");
  gen->add_option("family", a.family)->required()->check(CLI::IsMember({"tm", "tmk", "paperfolding"}));
  gen->add_option("--length", a.length, "Prefix length");
  gen->add_option("--k", a.k, "Modulus for tmk");
  gen->add_option("--instructions", a.instructions, "Folding instructions as a bit string");

  auto* avoid = app.add_subcommand("avoid", "Test a word for overlaps, squares or circular overlaps");
  avoid->add_option("pattern", a.pattern)->required()->check(CLI::IsMember({"overlap", "square", "circular"}));
  avoid->add_option("word", a.word)->required();

  auto* en = app.add_subcommand("enum", "Count overlap-free or circularly overlap-free binary words");
  en->add_option("kind", a.enum_kind)->required()->check(CLI::IsMember({"overlap-free", "circular"}));
  en->add_option("--max", a.max_n, "Largest length")->required();

  auto* cx = app.add_subcommand("complexity", "Factor complexity by factor collection");
  cx->add_option("family", a.family)->required()->check(CLI::IsMember({"tm", "tmk", "paperfolding"}));
  cx->add_option("--max", a.max_n, "Largest factor length")->required();
  cx->add_option("--k", a.k, "Modulus for tmk");
  cx->add_flag("--check-formula", a.check_formula, "Compare against the closed form");

  auto* se = app.add_subcommand("series", "Analyze an integer sequence window");
  se->add_option("analysis", a.analysis)
      ->required()
      ->check(CLI::IsMember({"diff", "period", "run", "recurrence", "gaps"}));
  auto* in_opt = se->add_option("--input", a.input, "File with one integer per line or n,value lines");
  auto* bi_opt = se->add_option("--builtin", a.builtin, "Builtin sequence name")
                     ->check(CLI::IsMember(builtin_sequence_names()));
  in_opt->excludes(bi_opt);
  se->add_option("--terms", a.terms, "Number of builtin terms");
  se->add_option("--order", a.order, "Difference order");
  se->add_option("--max-pre", a.max_pre, "Largest preperiod");
  se->add_option("--max-per", a.max_per, "Largest period");
  se->add_option("--value", a.value, "Value whose longest run is measured");
  se->add_option("--max-order", a.max_order, "Largest recurrence order");
  se->add_option("--from", a.from_index, "First index for the support");

  auto* ke = app.add_subcommand("kernel", "Guess the k-kernel automaton of a builtin sequence");
  ke->add_option("--builtin", a.builtin)->required()->check(CLI::IsMember(builtin_indexed_names()));
  ke->add_option("--base", a.base)->required();
  ke->add_option("--window", a.window)->required();
  ke->add_option("--depth", a.depth, "Exponent limit for kernel descriptors");

  auto* ic = app.add_subcommand("interchange", "Witness, swap checks and counting contradiction");
  ic->add_option("--k", a.interchange_k)->required();
  ic->add_option("--c", a.c, "Lemma constant as p/q, integer or decimal");
  ic->add_flag("--all-splits", a.all_splits, "At k = 2 test every valid split instead of the fixed sample");

  auto* va = app.add_subcommand("verify-all", "Run the acceptance criteria");
  va->add_flag("--quick", a.quick, "Smaller ranges for the expensive criteria");
  va->add_option("--criteria", a.criteria, "Only these criterion numbers")->delimiter(',')->check(CLI::Range(1, 12));

  auto* ca = app.add_subcommand("cache", "Inspect or clear the sequence cache");
  ca->add_option("action", a.cache_action)->required()->check(CLI::IsMember({"clear", "stat"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << kToolVersion << '\n';
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsageExit;
  }

  const ThreadScope threads(a.global.threads);
  std::string claim = app.get_subcommands().front()->get_name();
  try {
    if (gen->parsed()) return cmd_generate(a, out);
    if (avoid->parsed()) return print(cmd_avoid(a), a, out);
    if (en->parsed()) return print(cmd_enum(a), a, out);
    if (cx->parsed()) return print(cmd_complexity(a), a, out);
    if (se->parsed()) {
      if (a.input.empty() && a.builtin.empty()) throw ParameterError("series needs --input FILE or --builtin NAME");
      return print(cmd_series(a), a, out);
    }
    if (ke->parsed()) return print(cmd_kernel(a), a, out);
    if (ic->parsed()) {
      return print(interchange_envelope(a.interchange_k, parse_positive_rational(a.c), a.all_splits), a, out);
    }
    if (va->parsed()) return cmd_verify(a, out);
    if (ca->parsed()) return print(cmd_cache(a), a, out);
  } catch (const InconclusiveError& e) {
    // Always JSON: the cap that was hit is not a table.
    ReportEnvelope r;
    r.claim_id = claim;
    r.status = Status::kInconclusive;
    r.evidence = {{"error", e.what()},
                  {"caps",
                   {{"factor_prefix", kFactorPrefixCap},
                    {"paperfolding_instructions", kPaperfoldingMaxInstructions}}}};
    out << emit(r, Format::kJson, a.global.timings);
    return exit_code_for(r.status);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageExit;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageExit;
  } catch (const FormatError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageExit;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 1;
  }
  err << app.help();
  return kUsageExit;
}

}  // namespace tmwords
