// Acceptance suite: runs each criterion in full mode with the cache off,
// re-checks the reported evidence against pinned values and the runtime
// budget, and prints one PASS/FAIL line per criterion.
//
//   tmwords_acceptance          all criteria
//   tmwords_acceptance 3 7      a subset

#include <cstdio>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "oracles.hpp"
#include "tmwords/verify.hpp"

using namespace tmwords;

namespace {

struct Check {
  std::vector<std::string> failures;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

// p/q or p as produced by the report layer; compared against a/b exactly.
bool rational_at_least(const std::string& s, long long a, long long b) {
  const auto slash = s.find('/');
  const long long p = std::stoll(s.substr(0, slash));
  const long long q = slash == std::string::npos ? 1 : std::stoll(s.substr(slash + 1));
  return p * b >= a * q;
}

#ifdef TMWORDS_CLI_PATH
struct Captured {
  int code = -1;
  std::string out;
};

Captured shell(const std::string& command) {
  Captured c;
  FILE* pipe = ::popen(command.c_str(), "r");
  if (pipe == nullptr) return c;
  char buf[4096];
  std::size_t got;
  while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) c.out.append(buf, got);
  const int status = ::pclose(pipe);
  c.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return c;
}

const std::string kCli = TMWORDS_CLI_PATH;
#endif

void thue_morse(const Json& e, Check& c) {
  c.require(e.value("generated", "") == "0110100110010110", "generated prefix");
  c.require(e.value("definitions_agree", false), "morphic and digit-sum definitions agree");
#ifdef TMWORDS_CLI_PATH
  const auto r = shell("'" + kCli + "' generate tm --length 16");
  c.require(r.code == 0 && r.out == "0110100110010110\n", "command-line output is the 16-letter prefix");
#endif
  // Independent check: iterate 0 -> 01, 1 -> 10 as strings.
  std::string w = "0";
  while (w.size() < (std::size_t{1} << 16)) {
    std::string next;
    next.reserve(2 * w.size());
    for (char ch : w) next += ch == '0' ? "01" : "10";
    w = std::move(next);
  }
  c.require(w == oracle::thue_morse(w.size()), "string morphism matches binary digit sums");
}

void enumeration(const Json& e, Check& c) {
  c.require(e.value("equal", false), "pruned DFS equals exhaustive filter");
  c.require(e["a_3"] == 6 && e["a_4"] == 10, "a_3 = 6 and a_4 = 10");
  const auto& dfs = e["pruned_dfs"];
  c.require(dfs.size() == 17, "counts cover n <= 16");
  for (std::size_t n = 0; n <= 16 && n < dfs.size(); ++n) {
    std::uint64_t count = 0;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << n); ++code) {
      count += oracle::overlap_free(oracle::binary(code, n)) ? 1 : 0;
    }
    c.require(dfs[n] == count, "a_" + std::to_string(n) + " matches a string-level filter");
  }
}

void growth(const Json& e, Check& c) {
  const double slope = e["slope"].get<double>();
  c.notes.push_back("slope " + std::to_string(slope));
  c.require(slope >= 1.1 && slope <= 1.5, "slope in [1.1, 1.5]");
}

void refutation(const Json& e, Check& c) {
  c.require(e["overlap_free"].is_null(), "no recurrence of order <= 10 for a_n");
  c.require(e["pt"].is_null(), "no recurrence of order <= 16 for p_t");
  const auto& fib = e["fib"];
  c.require(!fib.is_null() && fib["order"] == 2 && fib["coefficients"] == Json{"1", "1"},
            "Fibonacci recovered at order 2");
}

void squares(const Json& e, Check& c) {
  c.require(e.value("catalog_equals_scan", false), "catalog equals stabilized scan");
  c.require(e.value("unique_square_start", false), "unique_square_start(4096, 512)");
  // Every catalogued square must occur in a long prefix, checked with strings.
  const std::string t = oracle::thue_morse(1 << 14);
  std::set<std::string> seen;
  for (const auto& [pos, half] : oracle::squares(t)) {
    if (2 * half <= 24) seen.insert(t.substr(pos, 2 * half));
  }
  std::set<std::string> catalog;
  for (const auto& s : e["catalog"]) catalog.insert(s.get<std::string>());
  c.require(catalog == seen, "catalog equals the squares found by a string scan");
}

void circular(const Json& e, Check& c) {
  const Json expected = {1, 2, 3, 4, 6, 8, 12, 16, 24, 32, 48};
  c.require(e["support"] == expected, "support is {1,2,3,4,6,8,12,16,24,32,48}");
  c.require(rational_at_least(e["min_ratio"].get<std::string>(), 4, 3), "gap ratio >= 4/3");
}

void complexity(const Json& e, Check& c) {
  const std::vector<std::pair<std::string, int>> want{{"tm", 512}, {"tmk:2", 256}, {"tmk:3", 256}, {"tmk:4", 256},
                                                      {"tmk:5", 256}};
  c.require(e["families"].size() == want.size(), "five families checked");
  for (std::size_t i = 0; i < want.size() && i < e["families"].size(); ++i) {
    const auto& f = e["families"][i];
    c.require(f["family"] == want[i].first && f["max_n"] == want[i].second && f["match"] == true,
              want[i].first + " brute force equals closed form");
  }
  c.require(e.value("ptk_base2_equals_pt", false), "base-2 specialization");
}

void differences(const Json& e, Check& c) {
  c.require(e["eventual_period"].is_null(), "no eventual period");
  c.require(e["max_run_of_4"].get<long long>() >= 31, "run of 4 at least 31");
  c.require(rational_at_least(e["min_ratio"].get<std::string>(), 4, 3), "gap ratio >= 4/3");
}

void kernel(const Json& e, Check& c) {
  c.require(e["tm"]["classes"] == 2 && e["tm"]["complete"] == true, "Thue-Morse 2-kernel has 2 classes");
  const auto& d = e["dpt"];
  c.require(d.size() == 2 && d[0]["complete"] == true && d[1]["complete"] == true, "difference kernel closes");
  c.require(d.size() == 2 && d[0]["window"] == 2048 && d[1]["window"] == 4096 && d[0]["classes"] == d[1]["classes"],
            "class count stable from 2048 to 4096");
  if (d.size() == 2) c.notes.push_back("difference kernel classes " + d[1]["classes"].dump());
}

void paperfolding(const Json& e, Check& c) {
  c.require(e.value("match", false), "brute force equals formula up to 32");
  const std::vector<int> head{2, 4, 8, 12, 20, 28, 40};
  const auto& rows = e["rows"];
  c.require(rows.size() == 32, "32 rows");
  for (std::size_t i = 0; i < head.size() && i < rows.size(); ++i) {
    c.require(rows[i][1] == head[i] && rows[i][2] == head[i], "f(" + std::to_string(i + 1) + ")");
  }
}

void interchange(const Json& e, Check& c) {
  for (const auto& w : e["witnesses"]) {
    c.require(w["minimal_overlap"] == true, "witness k = " + w["k"].dump() + " is a minimal overlap");
  }
  for (const auto& h : e["harness"]) {
    const std::string k = h["k"].dump();
    c.require(h["R_size"].get<std::uint64_t>() == std::stoull(h["R_size_formula"].get<std::string>()),
              "|R| = 2^((n-1)/4) at k = " + k);
    c.require(h["all_contain_overlap"] == true, "every element of R has an overlap at k = " + k);
    c.require(h["violations"].empty(), "no swap violations at k = " + k);
    const auto fixed = h["fixed_middle_max"].get<std::uint64_t>();
    const auto bound = h["bound"].get<std::uint64_t>();
    if (fixed > bound) {
      c.require(false, "fixed-middle count " + std::to_string(fixed) + " <= " + std::to_string(bound) +
                           " at k = " + k + " (" + std::to_string(h["splits_over_bound"].size()) +
                           " splits over)");
    }
  }
  c.require(e["harness"].size() == 2 && e["harness"][1]["splits_tested"] == 20, "k = 2 uses 20 fixed splits");
  const auto& con = e["contradiction_k3"];
  c.require(con["holds"] == true && con["lower"] == "1073741824/4225" && con["upper"] == "65536",
            "contradiction at k = 3 with exact rationals");
}

void determinism(const Json& e, Check& c) {
  c.require(e.value("byte_identical", false), "in-process quick suite byte-identical");
  for (const auto& s : e["statuses_without_cache_max_threads"]) {
    if (s["status"] != "pass") c.notes.push_back(s["claim_id"].get<std::string>() + " " + s["status"].get<std::string>());
  }
#ifdef TMWORDS_CLI_PATH
  const unsigned threads = std::max(2u, std::thread::hardware_concurrency());
  const std::string base = "'" + kCli + "' verify-all --quick";
  const auto first = shell("TMWORDS_NO_CACHE=1 " + base + " --threads 1");
  const auto second = shell("TMWORDS_NO_CACHE=1 " + base + " --threads " + std::to_string(threads));
  c.require(!first.out.empty() && first.out == second.out, "command-line reports byte-identical");
  c.require(first.code == second.code, "command-line exit codes agree");
#endif
}

using Extra = void (*)(const Json&, Check&);
const Extra kExtras[] = {thue_morse, enumeration, growth,       refutation,  squares,     circular,
                         complexity, differences, kernel,       paperfolding, interchange, determinism};

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> ids;
  for (int i = 1; i < argc; ++i) ids.push_back(std::stoi(argv[i]));
  VerifyOptions options;
  options.quick = false;
  options.cache = SequenceCache::disabled();

  int failed = 0;
  for (const auto& crit : acceptance_criteria()) {
    if (!ids.empty() && std::find(ids.begin(), ids.end(), crit.id) == ids.end()) continue;
    const ReportEnvelope r = run_criterion(crit, options);
    Check c;
    c.require(r.status == Status::kPass, std::string("reported status ") + to_string(r.status));
    if (r.evidence.contains("error")) {
      c.require(false, r.evidence["error"].get<std::string>());
    } else {
      try {
        kExtras[crit.id - 1](r.evidence, c);
      } catch (const std::exception& ex) {
        c.require(false, std::string("evidence check threw: ") + ex.what());
      }
    }
    c.require(r.elapsed_ms < crit.limit_ms,
              "runtime " + std::to_string(r.elapsed_ms) + " ms within " + std::to_string(crit.limit_ms) + " ms");

    const bool ok = c.failures.empty();
    failed += ok ? 0 : 1;
    std::ostringstream line;
    line << "C" << crit.id << ' ' << (ok ? "PASS" : "FAIL") << ' ' << crit.name << " (" << r.elapsed_ms << " ms)";
    for (const auto& n : c.notes) line << " [" << n << ']';
    std::cout << line.str() << '\n';
    for (const auto& f : c.failures) std::cout << "    failed: " << f << '\n';
    if (!ok) std::cout << "    evidence: " << r.evidence.dump() << '\n';
  }
  return failed == 0 ? 0 : 1;
}
