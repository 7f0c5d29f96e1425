#pragma once

// Problem files, report documents and their renderings.
//
//   ring ZZ | QQ | GF(p) | GF(p)[t] | QQ[t]
//   vars x y z
//   order lex|grlex|grevlex x z y        (optional variable ranking)
//   weights 2 1 1                        (weight refinement of the order)
//   grading 1 1 1                        (positive degrees of the variables)
//   module 2 0 1                         (rank and basis shifts)
//   gens:
//   2*x + y*e1 - {t^2 + 1}*z^2*e2
//
// '#' starts a comment. Each generator takes one line.

#include "gfree/degeneration.hpp"
#include "gfree/detgen.hpp"

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gfree {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t col, const std::string& msg)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(col) + ": " + msg), line_(line), col_(col) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return col_; }

 private:
  std::size_t line_, col_;
};

struct ProblemFile {
  FreeModule space;
  Grading grading;
  std::vector<FreeElem> gens;
};

ProblemFile parse_problem(std::string_view text);
/// Canonical text; parse_problem(print_problem(p)) reproduces p.
std::string print_problem(const ProblemFile& p);
bool same_problem(const ProblemFile& a, const ProblemFile& b);

/// One element of the problem's module, in generator syntax. Zero is allowed.
FreeElem parse_element(const ProblemFile& p, std::string_view text);
CoeffDomain parse_domain(std::string_view text);
/// Comma-separated integers or rationals: "5,7,11", "0,1/2".
std::vector<Point> parse_points(std::string_view text);
/// Optional "ring ..." line followed by rows of coefficient literals.
std::pair<CoeffDomain, std::vector<std::vector<RingElem>>> parse_coeff_matrix(std::string_view text,
                                                                             const CoeffDomain& fallback);

/// Ordered key/value document.
struct Report {
  std::string title;
  std::vector<std::pair<std::string, std::string>> entries;

  void add(std::string key, std::string value) { entries.emplace_back(std::move(key), std::move(value)); }
  void add(std::string key, const char* value) { add(std::move(key), std::string(value)); }
  void add(std::string key, bool value) { add(std::move(key), std::string(value ? "true" : "false")); }
  void add(std::string key, std::int64_t value) { add(std::move(key), std::to_string(value)); }
  void add(std::string key, std::size_t value) { add(std::move(key), std::to_string(value)); }
  void append(const Report& other);
  /// Value of the first entry with this key, or nullptr.
  const std::string* find(std::string_view key) const;
};

enum class Format { Text, Machine };
/// Machine: one "key = value" line per entry. Text: a title line and
/// aligned "key  value" lines.
std::string render(const Report& r, Format f);

Report gb_report(const GroebnerBasis& G);
Report check_report(const FreeModule& F, const GroebnerCheck& c);
Report initial_report(const GroebnerBasis& G);
Report witness_report(const FreeModule& F, const Witness& w);
Report reduce_report(const FreeModule& F, const ReductionTrace& t, bool verified);
Report stdmon_report(const FreeModule& F, const std::vector<StandardMonomial>& s);
Report hilbert_report(const HilbertTable& h, const std::string& prefix = "hilbert");
Report fiber_report(const FreeModule& F, const FiberReport& r);
Report degeneration_report(const DegenerationData& D, const DegenerationReport* check);
Report frobenius_report(const FreeModule& F, const FrobeniusReport& r);
Report squarefree_report_doc(const FreeModule& F, const SquarefreeReport& r);
Report det_report(const DetInstance& inst, const std::vector<FreeElem>& minors, const DetReport& r);

}  // namespace gfree
