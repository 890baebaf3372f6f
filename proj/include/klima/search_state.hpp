#ifndef KLIMA_SEARCH_STATE_HPP
#define KLIMA_SEARCH_STATE_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "klima/cnf.hpp"

namespace klima {

/// Flattened clause and occurrence lists for one formula. Shared read-only by
/// every try.
class ClauseIndex {
 public:
  explicit ClauseIndex(const CnfFormula& formula);

  int num_vars() const { return num_vars_; }
  int num_clauses() const { return static_cast<int>(clause_start_.size()) - 1; }
  int total_literals() const { return static_cast<int>(literals_.size()); }
  int max_occurrence() const { return max_occurrence_; }

  std::span<const Literal> clause(int i) const {
    return {literals_.data() + clause_start_[static_cast<std::size_t>(i)],
            literals_.data() + clause_start_[static_cast<std::size_t>(i) + 1]};
  }
  int clause_length(int i) const {
    return clause_start_[static_cast<std::size_t>(i) + 1] - clause_start_[static_cast<std::size_t>(i)];
  }

  struct Occurrence {
    int clause;
    bool negated;
  };
  std::span<const Occurrence> occurrences(int var) const {
    return {occurrences_.data() + occ_start_[static_cast<std::size_t>(var)],
            occurrences_.data() + occ_start_[static_cast<std::size_t>(var) + 1]};
  }

 private:
  int num_vars_;
  int max_occurrence_ = 0;
  std::vector<int> clause_start_;
  std::vector<Literal> literals_;
  std::vector<int> occ_start_;
  std::vector<Occurrence> occurrences_;
};

/// Current assignment with incrementally maintained make / break counts,
/// per-clause satisfied-literal counts (the TCAM distances δ_i) and the list
/// of violated clauses. Each flip costs O(occurrences * k).
class SearchState {
 public:
  SearchState(const ClauseIndex& index, Assignment x);

  const ClauseIndex& index() const { return *index_; }
  const Assignment& assignment() const { return x_; }
  int num_vars() const { return index_->num_vars(); }

  int num_unsat() const { return static_cast<int>(unsat_.size()); }
  const std::vector<int>& unsat_clauses() const { return unsat_; }

  int make(int v) const { return make_[static_cast<std::size_t>(v)]; }
  int breaks(int v) const { return break_[static_cast<std::size_t>(v)]; }
  int gain(int v) const { return make(v) - breaks(v); }
  std::span<const int> makes() const { return make_; }
  std::span<const int> breaks() const { return break_; }
  /// δ_i for clause i.
  int distance(int clause) const { return true_count_[static_cast<std::size_t>(clause)]; }

  void flip(int v);

  /// Σ_i δ_i: conducting cells across all match lines.
  long long satisfied_literals() const { return satisfied_literals_; }
  /// Σ over violated clauses of clause length: member cells on MLm-driven rows.
  long long violated_slots() const { return violated_slots_; }
  /// Σ over single-satisfied clauses of clause length: member cells on
  /// MLb-driven rows.
  long long single_sat_slots() const { return single_sat_slots_; }
  int num_single_sat() const { return num_single_sat_; }

 private:
  void mark_unsat(int c);
  void mark_sat(int c);

  const ClauseIndex* index_;
  Assignment x_;
  std::vector<int> true_count_;
  std::vector<int> crit_;  // XOR of the variables of true literals
  std::vector<int> make_;
  std::vector<int> break_;
  std::vector<int> unsat_;
  std::vector<int> unsat_pos_;
  long long satisfied_literals_ = 0;
  long long violated_slots_ = 0;
  long long single_sat_slots_ = 0;
  int num_single_sat_ = 0;
};

}  // namespace klima

#endif  // KLIMA_SEARCH_STATE_HPP
