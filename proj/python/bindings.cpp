#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "tmwords/avoidance.hpp"
#include "tmwords/cli.hpp"
#include "tmwords/complexity.hpp"
#include "tmwords/enumerate.hpp"
#include "tmwords/interchange.hpp"
#include "tmwords/report.hpp"
#include "tmwords/sequences.hpp"
#include "tmwords/series.hpp"
#include "tmwords/word.hpp"

namespace py = pybind11;
using namespace tmwords;

namespace {

std::optional<std::pair<std::size_t, std::size_t>> overlap_at(const std::string& word) {
  const auto o = find_overlap(FiniteWord::parse(word));
  if (!o) return std::nullopt;
  return std::make_pair(o->position, o->period);
}

SequenceWindow window(const std::vector<std::int64_t>& values, std::int64_t offset) { return {offset, values}; }

// Coefficients travel as "p/q" strings; the Python side turns them into Fractions.
std::optional<std::vector<std::string>> recurrence(const std::vector<std::int64_t>& values, std::size_t max_order,
                                                   std::int64_t offset) {
  const auto g = guess_linear_recurrence(window(values, offset), max_order);
  if (!g) return std::nullopt;
  std::vector<std::string> out;
  for (const auto& c : g->coefficients) out.push_back(rational_string(c));
  return out;
}

py::dict kernel(const std::string& name, unsigned base, std::size_t window_len, unsigned depth) {
  const auto a = kernel_closure(builtin_indexed(name), base, depth, window_len);
  py::list classes;
  for (const auto& c : a.classes) classes.append(py::make_tuple(c.exponent, c.residue));
  py::list transitions;
  for (const auto& row : a.transitions) {
    py::list r;
    for (std::size_t t : row) {
      if (t == KernelAutomaton::kUnresolved) {
        r.append(py::none());
      } else {
        r.append(t);
      }
    }
    transitions.append(r);
  }
  py::dict d;
  d["classes"] = classes;
  d["transitions"] = transitions;
  d["complete"] = a.complete;
  return d;
}

py::tuple run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code;
  {
    py::gil_scoped_release release;
    code = run(args, out, err);
  }
  return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Native core of the tmwords toolkit";
  m.attr("__version__") = kToolVersion;

  m.def("thue_morse", [](std::size_t n) { return thue_morse_prefix(n).str(); }, py::arg("length"),
        "First `length` letters of the Thue-Morse word.");
  m.def(
      "generalized_thue_morse",
      [](int k, std::size_t n) {
        if (k < 2 || k > 10) throw py::value_error("k must lie in [2, 10]");
        std::string out(n, '0');
        for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<char>('0' + tk_letter(i, k));
        return out;
      },
      py::arg("k"), py::arg("length"), "Prefix of t_k(n) = (binary digit sum of n) mod k, one digit per letter.");
  m.def("paperfolding", [](const std::string& bits) { return paperfolding_prefix(InstructionSequence::parse(bits)).str(); },
        py::arg("instructions"), "Paperfolding word of length 2^K - 1 for K instruction bits.");

  m.def("find_overlap", &overlap_at, py::arg("word"), "Least (position, period) of an overlap, or None.");
  m.def("is_overlap_free", [](const std::string& w) { return is_overlap_free(FiniteWord::parse(w)); }, py::arg("word"));
  m.def("is_circular_overlap_free", [](const std::string& w) { return is_circular_overlap_free(FiniteWord::parse(w)); },
        py::arg("word"));
  m.def(
      "find_squares",
      [](const std::string& w) {
        std::vector<std::pair<std::size_t, std::size_t>> out;
        for (const auto& s : find_squares(FiniteWord::parse(w))) out.emplace_back(s.position, s.half_length);
        return out;
      },
      py::arg("word"), "Every (position, half_length) with a square.");

  m.def(
      "count_overlap_free", [](std::size_t max_n) { return count_overlap_free(max_n).values; }, py::arg("max_n"),
      py::call_guard<py::gil_scoped_release>(), "Binary overlap-free word counts a_0 .. a_max_n.");
  m.def(
      "circular_counts", [](std::size_t max_n) { return circular_overlap_free_lengths(max_n).counts; },
      py::arg("max_n"), py::call_guard<py::gil_scoped_release>(),
      "Circularly overlap-free word counts; index 0 is unused.");

  m.def(
      "factor_count",
      [](int k, std::size_t n) { return factor_count(k == 2 ? thue_morse_source() : tk_source(k), n); }, py::arg("k"),
      py::arg("n"), py::call_guard<py::gil_scoped_release>(),
      "Distinct length-n factors of t_k, counted on stabilized prefixes.");
  m.def("pt_formula", &pt_formula, py::arg("n"));
  m.def("ptk_formula", &ptk_formula, py::arg("n"), py::arg("k"));
  m.def("pf_formula", &pf_formula, py::arg("n"));
  m.def("paperfolding_factor_count", &paperfolding_factor_count, py::arg("n"),
        py::call_guard<py::gil_scoped_release>());

  m.def("guess_linear_recurrence", &recurrence, py::arg("values"), py::arg("max_order"), py::arg("offset") = 0);
  m.def(
      "detect_eventual_period",
      [](const std::vector<std::int64_t>& values, std::size_t max_pre,
         std::size_t max_per) -> std::optional<std::pair<std::size_t, std::size_t>> {
        const auto p = detect_eventual_period(window(values, 0), max_pre, max_per);
        if (!p) return std::nullopt;
        return std::make_pair(p->preperiod, p->period);
      },
      py::arg("values"), py::arg("max_pre"), py::arg("max_per"));
  m.def("kernel", &kernel, py::arg("name"), py::arg("base") = 2, py::arg("window") = 4096, py::arg("depth") = 10,
        "k-kernel closure of a built-in sequence; classes are (exponent, residue) pairs.");
  m.def(
      "builtin_sequence", [](const std::string& name, std::size_t terms) { return builtin_sequence(name, terms).window.values; },
      py::arg("name"), py::arg("terms"));

  m.def(
      "interchange_report_json",
      [](unsigned k, const std::string& c, bool all_splits) {
        return emit(interchange_envelope(k, parse_positive_rational(c), all_splits), Format::kJson);
      },
      py::arg("k"), py::arg("c") = "1", py::arg("all_splits") = false, py::call_guard<py::gil_scoped_release>());

  m.def("run", &run_cli, py::arg("args"), "Runs the command-line tool in-process; returns (exit_code, stdout, stderr).");
}
