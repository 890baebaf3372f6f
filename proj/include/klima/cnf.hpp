#ifndef KLIMA_CNF_HPP
#define KLIMA_CNF_HPP

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace klima {

/// A (possibly negated) variable. `var` is 0-based; DIMACS numbering is
/// only used by the parser and writer.
struct Literal {
  int var = 0;
  bool negated = false;

  int dimacs() const { return negated ? -(var + 1) : var + 1; }
  static Literal from_dimacs(int lit) { return {(lit < 0 ? -lit : lit) - 1, lit < 0}; }

  /// Truth value of the literal when the variable has value `bit`.
  bool holds(std::uint8_t bit) const { return (bit != 0) != negated; }

  friend bool operator==(const Literal&, const Literal&) = default;
};

using Clause = std::vector<Literal>;

/// One byte per variable, values 0 or 1. Bit i is the value of variable i.
using Assignment = std::vector<std::uint8_t>;

/// Conjunction of clauses over `num_vars` variables. Construction validates:
/// at least one clause, no empty clause, every variable in range, and no
/// variable repeated within a clause (which also rules out tautologies).
class CnfFormula {
 public:
  CnfFormula(int num_vars, std::vector<Clause> clauses);

  int num_vars() const { return num_vars_; }
  int num_clauses() const { return static_cast<int>(clauses_.size()); }
  /// Maximum clause length k.
  int order() const { return order_; }
  double ratio() const { return static_cast<double>(num_clauses()) / num_vars_; }
  /// Total number of literal occurrences.
  int num_literals() const { return num_literals_; }

  const std::vector<Clause>& clauses() const { return clauses_; }
  const Clause& clause(int i) const { return clauses_[static_cast<std::size_t>(i)]; }

  friend bool operator==(const CnfFormula&, const CnfFormula&) = default;

 private:
  int num_vars_;
  std::vector<Clause> clauses_;
  int order_ = 0;
  int num_literals_ = 0;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, int line, const std::string& source = {})
      : std::runtime_error((source.empty() ? "" : source + ":") + "line " + std::to_string(line) +
                           ": " + message),
        message_(message),
        line_(line) {}
  const std::string& message() const { return message_; }
  int line() const { return line_; }

 private:
  std::string message_;
  int line_;
};

/// Standard DIMACS CNF. Accepts `c` comment lines, clauses spanning lines,
/// and the SATLIB `%` end marker. Throws ParseError with the offending line.
CnfFormula parse_dimacs(std::istream& in);
CnfFormula parse_dimacs(std::string_view text);
/// As parse_dimacs, with the file path prefixed to error messages.
CnfFormula read_dimacs_file(const std::filesystem::path& path);

void write_dimacs(const CnfFormula& formula, std::ostream& out);
std::string to_dimacs(const CnfFormula& formula);

/// Uniform random k-SAT: round(alpha * V) clauses, each over k distinct
/// variables drawn without replacement, each literal negated with
/// probability 1/2. Deterministic in `seed`.
CnfFormula generate_random_ksat(int num_vars, int k, double alpha, std::uint64_t seed);

/// Literature values for the random k-SAT satisfiability threshold.
inline constexpr double kPhaseTransition3Sat = 4.267;
inline constexpr double kPhaseTransition4Sat = 9.93;

struct EvalResult {
  int unsat_count = 0;
  std::vector<std::uint8_t> unsat_mask;
};

EvalResult evaluate(const CnfFormula& formula, const Assignment& x);

inline bool satisfies(const CnfFormula& formula, const Assignment& x) {
  return evaluate(formula, x).unsat_count == 0;
}

}  // namespace klima

#endif  // KLIMA_CNF_HPP
