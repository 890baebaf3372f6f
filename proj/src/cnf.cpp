#include "klima/cnf.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <numeric>
#include <sstream>

#include "klima/rng.hpp"

namespace klima {

CnfFormula::CnfFormula(int num_vars, std::vector<Clause> clauses)
    : num_vars_(num_vars), clauses_(std::move(clauses)) {
  if (num_vars_ < 1) throw std::invalid_argument("formula needs at least one variable");
  if (clauses_.empty()) throw std::invalid_argument("formula needs at least one clause");
  std::vector<int> seen(static_cast<std::size_t>(num_vars_), -1);
  for (std::size_t i = 0; i < clauses_.size(); ++i) {
    const Clause& c = clauses_[i];
    if (c.empty()) throw std::invalid_argument("clause " + std::to_string(i) + " is empty");
    for (const Literal& l : c) {
      if (l.var < 0 || l.var >= num_vars_)
        throw std::invalid_argument("clause " + std::to_string(i) + " references variable " +
                                    std::to_string(l.var + 1) + " outside [1, " +
                                    std::to_string(num_vars_) + "]");
      auto& mark = seen[static_cast<std::size_t>(l.var)];
      if (mark == static_cast<int>(i))
        throw std::invalid_argument("clause " + std::to_string(i) + " repeats variable " +
                                    std::to_string(l.var + 1));
      mark = static_cast<int>(i);
    }
    order_ = std::max(order_, static_cast<int>(c.size()));
    num_literals_ += static_cast<int>(c.size());
  }
}

namespace {

std::string_view trim_left(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  return s;
}

}  // namespace

CnfFormula parse_dimacs(std::istream& in) {
  std::string line;
  int line_no = 0;
  bool have_header = false;
  long long declared_vars = 0, declared_clauses = 0;
  std::vector<Clause> clauses;
  Clause current;
  int current_line = 0;

  auto close_clause = [&](int at_line) {
    if (current.empty()) throw ParseError("empty clause", at_line);
    std::vector<int> vars;
    vars.reserve(current.size());
    for (const Literal& l : current) vars.push_back(l.var);
    std::sort(vars.begin(), vars.end());
    if (std::adjacent_find(vars.begin(), vars.end()) != vars.end())
      throw ParseError("clause repeats a variable (duplicate literal or tautology)", at_line);
    clauses.push_back(std::move(current));
    current.clear();
  };

  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = trim_left(line);
    if (view.empty() || view.front() == 'c') continue;
    if (view.front() == '%') break;  // SATLIB trailer
    if (view.front() == 'p') {
      if (have_header) throw ParseError("duplicate problem line", line_no);
      std::istringstream hs{std::string(view)};
      std::string p, fmt, extra;
      if (!(hs >> p >> fmt >> declared_vars >> declared_clauses) || p != "p" || fmt != "cnf" ||
          (hs >> extra))
        throw ParseError("malformed problem line, expected 'p cnf <vars> <clauses>'", line_no);
      if (declared_vars < 1 || declared_clauses < 1)
        throw ParseError("problem line needs positive variable and clause counts", line_no);
      have_header = true;
      continue;
    }
    if (!have_header) throw ParseError("clause data before problem line", line_no);

    const char* p = view.data();
    const char* end = view.data() + view.size();
    while (p < end) {
      while (p < end && std::isspace(static_cast<unsigned char>(*p))) ++p;
      if (p == end) break;
      long long lit = 0;
      auto [next, ec] = std::from_chars(p, end, lit);
      if (ec != std::errc{} || (next < end && !std::isspace(static_cast<unsigned char>(*next))))
        throw ParseError("invalid literal token", line_no);
      p = next;
      if (lit == 0) {
        close_clause(line_no);
        continue;
      }
      if (std::llabs(lit) > declared_vars)
        throw ParseError("literal " + std::to_string(lit) + " exceeds declared variable count " +
                             std::to_string(declared_vars),
                         line_no);
      if (static_cast<long long>(clauses.size()) >= declared_clauses)
        throw ParseError("more clauses than declared (" + std::to_string(declared_clauses) + ")",
                         line_no);
      if (current.empty()) current_line = line_no;
      current.push_back(Literal::from_dimacs(static_cast<int>(lit)));
    }
  }
  if (!have_header) throw ParseError("missing problem line", std::max(line_no, 1));
  if (!current.empty()) close_clause(current_line);  // unterminated final clause
  if (static_cast<long long>(clauses.size()) != declared_clauses)
    throw ParseError("clause count " + std::to_string(clauses.size()) +
                         " does not match declared " + std::to_string(declared_clauses),
                     line_no);
  return CnfFormula(static_cast<int>(declared_vars), std::move(clauses));
}

CnfFormula parse_dimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_dimacs(in);
}

CnfFormula read_dimacs_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error(path.string() + ": cannot open");
  try {
    return parse_dimacs(in);
  } catch (const ParseError& e) {
    throw ParseError(e.message(), e.line(), path.string());
  }
}

void write_dimacs(const CnfFormula& formula, std::ostream& out) {
  out << "p cnf " << formula.num_vars() << ' ' << formula.num_clauses() << '\n';
  for (const Clause& c : formula.clauses()) {
    for (const Literal& l : c) out << l.dimacs() << ' ';
    out << "0\n";
  }
}

std::string to_dimacs(const CnfFormula& formula) {
  std::ostringstream out;
  write_dimacs(formula, out);
  return out.str();
}

CnfFormula generate_random_ksat(int num_vars, int k, double alpha, std::uint64_t seed) {
  if (k < 1) throw std::invalid_argument("clause order k must be at least 1");
  if (num_vars < k) throw std::invalid_argument("need V >= k to draw k distinct variables");
  if (!(alpha > 0.0)) throw std::invalid_argument("clause ratio alpha must be positive");
  const long long count = std::llround(alpha * num_vars);
  if (count < 1) throw std::invalid_argument("alpha * V rounds to zero clauses");

  Rng rng(seed);
  std::vector<int> pool(static_cast<std::size_t>(num_vars));
  std::iota(pool.begin(), pool.end(), 0);
  std::vector<Clause> clauses;
  clauses.reserve(static_cast<std::size_t>(count));
  for (long long c = 0; c < count; ++c) {
    Clause clause;
    clause.reserve(static_cast<std::size_t>(k));
    // Partial Fisher-Yates: the first k slots become a uniform k-subset.
    for (int i = 0; i < k; ++i) {
      const auto j = i + static_cast<int>(rng.below(static_cast<std::uint64_t>(num_vars - i)));
      std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(j)]);
      clause.push_back({pool[static_cast<std::size_t>(i)], rng.coin()});
    }
    clauses.push_back(std::move(clause));
  }
  return CnfFormula(num_vars, std::move(clauses));
}

EvalResult evaluate(const CnfFormula& formula, const Assignment& x) {
  if (x.size() != static_cast<std::size_t>(formula.num_vars()))
    throw std::invalid_argument("assignment length " + std::to_string(x.size()) +
                                " does not match variable count " +
                                std::to_string(formula.num_vars()));
  EvalResult r;
  r.unsat_mask.assign(static_cast<std::size_t>(formula.num_clauses()), 0);
  for (int i = 0; i < formula.num_clauses(); ++i) {
    const Clause& c = formula.clause(i);
    const bool sat = std::any_of(c.begin(), c.end(), [&](const Literal& l) {
      return l.holds(x[static_cast<std::size_t>(l.var)]);
    });
    if (!sat) {
      r.unsat_mask[static_cast<std::size_t>(i)] = 1;
      ++r.unsat_count;
    }
  }
  return r;
}

}  // namespace klima
