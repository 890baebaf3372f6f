#include "klima/search_state.hpp"

#include <algorithm>
#include <stdexcept>

namespace klima {

ClauseIndex::ClauseIndex(const CnfFormula& formula) : num_vars_(formula.num_vars()) {
  clause_start_.reserve(static_cast<std::size_t>(formula.num_clauses()) + 1);
  literals_.reserve(static_cast<std::size_t>(formula.num_literals()));
  std::vector<int> counts(static_cast<std::size_t>(num_vars_), 0);
  for (const Clause& c : formula.clauses()) {
    clause_start_.push_back(static_cast<int>(literals_.size()));
    for (const Literal& l : c) {
      literals_.push_back(l);
      ++counts[static_cast<std::size_t>(l.var)];
    }
  }
  clause_start_.push_back(static_cast<int>(literals_.size()));

  occ_start_.assign(static_cast<std::size_t>(num_vars_) + 1, 0);
  for (int v = 0; v < num_vars_; ++v)
    occ_start_[static_cast<std::size_t>(v) + 1] =
        occ_start_[static_cast<std::size_t>(v)] + counts[static_cast<std::size_t>(v)];
  max_occurrence_ = *std::max_element(counts.begin(), counts.end());
  occurrences_.resize(literals_.size());
  std::vector<int> fill(occ_start_.begin(), occ_start_.end() - 1);
  for (int c = 0; c < num_clauses(); ++c)
    for (const Literal& l : clause(c))
      occurrences_[static_cast<std::size_t>(fill[static_cast<std::size_t>(l.var)]++)] = {c, l.negated};
}

SearchState::SearchState(const ClauseIndex& index, Assignment x) : index_(&index), x_(std::move(x)) {
  if (static_cast<int>(x_.size()) != index.num_vars())
    throw std::invalid_argument("SearchState: assignment length differs from variable count");
  const auto C = static_cast<std::size_t>(index.num_clauses());
  const auto V = static_cast<std::size_t>(index.num_vars());
  true_count_.assign(C, 0);
  crit_.assign(C, 0);
  make_.assign(V, 0);
  break_.assign(V, 0);
  unsat_pos_.assign(C, -1);

  for (int c = 0; c < index.num_clauses(); ++c) {
    auto& tc = true_count_[static_cast<std::size_t>(c)];
    for (const Literal& l : index.clause(c)) {
      if (l.holds(x_[static_cast<std::size_t>(l.var)])) {
        ++tc;
        crit_[static_cast<std::size_t>(c)] ^= l.var;
      }
    }
    satisfied_literals_ += tc;
    const int len = index.clause_length(c);
    if (tc == 0) {
      mark_unsat(c);
      violated_slots_ += len;
      for (const Literal& l : index.clause(c)) ++make_[static_cast<std::size_t>(l.var)];
    } else if (tc == 1) {
      ++break_[static_cast<std::size_t>(crit_[static_cast<std::size_t>(c)])];
      single_sat_slots_ += len;
      ++num_single_sat_;
    }
  }
}

void SearchState::mark_unsat(int c) {
  unsat_pos_[static_cast<std::size_t>(c)] = static_cast<int>(unsat_.size());
  unsat_.push_back(c);
}

void SearchState::mark_sat(int c) {
  const int pos = unsat_pos_[static_cast<std::size_t>(c)];
  const int last = unsat_.back();
  unsat_[static_cast<std::size_t>(pos)] = last;
  unsat_pos_[static_cast<std::size_t>(last)] = pos;
  unsat_.pop_back();
  unsat_pos_[static_cast<std::size_t>(c)] = -1;
}

void SearchState::flip(int v) {
  auto& bit = x_[static_cast<std::size_t>(v)];
  bit ^= 1;
  for (const auto& occ : index_->occurrences(v)) {
    const auto c = static_cast<std::size_t>(occ.clause);
    const int len = index_->clause_length(occ.clause);
    crit_[c] ^= v;
    if ((bit != 0) != occ.negated) {
      const int tc = ++true_count_[c];
      ++satisfied_literals_;
      if (tc == 1) {
        mark_sat(occ.clause);
        for (const Literal& l : index_->clause(occ.clause)) --make_[static_cast<std::size_t>(l.var)];
        ++break_[static_cast<std::size_t>(v)];
        violated_slots_ -= len;
        single_sat_slots_ += len;
        ++num_single_sat_;
      } else if (tc == 2) {
        --break_[static_cast<std::size_t>(crit_[c] ^ v)];
        single_sat_slots_ -= len;
        --num_single_sat_;
      }
    } else {
      const int tc = --true_count_[c];
      --satisfied_literals_;
      if (tc == 0) {
        mark_unsat(occ.clause);
        for (const Literal& l : index_->clause(occ.clause)) ++make_[static_cast<std::size_t>(l.var)];
        --break_[static_cast<std::size_t>(v)];
        violated_slots_ += len;
        single_sat_slots_ -= len;
        --num_single_sat_;
      } else if (tc == 1) {
        ++break_[static_cast<std::size_t>(crit_[c])];
        single_sat_slots_ += len;
        ++num_single_sat_;
      }
    }
  }
}

}  // namespace klima
