#ifndef KLIMA_ACCEL_HPP
#define KLIMA_ACCEL_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <stdexcept>

#include "klima/cnf.hpp"

namespace klima {

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// Per-line boolean outputs (sense-amplifier results), one byte per entry.
using Mask = Vector<std::uint8_t>;
/// Match-line Hamming distances, one per clause.
using MlVector = Vector<int>;

/// Stored TCAM state. A positive literal is stored as ZERO, a negative one as
/// ONE, and an absent variable as WILD, so a row matches (distance 0) exactly
/// when every literal of its clause is false.
enum class TernaryCell : std::uint8_t { Zero = 0, One = 1, Wild = 2 };

/// Sense-amplifier thresholds. Defaults are the single-satisfied-literal
/// window Θ_l = 0, Θ_h = 2.
struct Thresholds {
  int theta_l = 0;
  int theta_h = 2;
};

/// Compiled TCAM and DPE contents for one formula. Immutable after compile().
struct AcceleratorImage {
  int num_clauses = 0;
  int num_vars = 0;
  int order = 0;

  /// C x V, TernaryCell codes.
  Matrix<std::uint8_t> tcam;
  /// C x V, 1 where the variable is a member of the clause (matrix Q).
  Matrix<int> membership;
  /// C x V, +1 / -1 for positive / negative literal, 0 when absent.
  Matrix<int> signed_membership;
  /// Polarity-separated halves of the DPE: positive and negative literal
  /// indicators. membership = positive + negative.
  Matrix<int> positive;
  Matrix<int> negative;

  TernaryCell cell(int clause, int var) const {
    return static_cast<TernaryCell>(tcam(clause, var));
  }
  /// Largest number of clauses any variable appears in (full-scale BL fan-in).
  int max_occurrence() const { return membership.colwise().sum().maxCoeff(); }
};

AcceleratorImage compile(const CnfFormula& formula);

template <typename Scalar = int>
Vector<Scalar> to_vector(const Assignment& x) {
  Vector<Scalar> v(static_cast<Eigen::Index>(x.size()));
  for (std::size_t j = 0; j < x.size(); ++j) v(static_cast<Eigen::Index>(j)) = x[j] ? 1 : 0;
  return v;
}

/// δ_i: Hamming distance between x and TCAM row i over non-WILD cells. This
/// equals the number of satisfied literals in clause i.
MlVector match_distances(const AcceleratorImage& image, const Assignment& x);

/// MLm_i = (δ_i < Θ_h). With Θ_h = 1 this marks violated clauses.
Mask violated_mask(const MlVector& ml, int theta_h = 1);

/// MLb_i = (Θ_l < δ_i < Θ_h). Defaults mark clauses with exactly one
/// satisfied literal.
Mask single_sat_mask(const MlVector& ml, Thresholds thresholds = {});

/// m = Qᵀ·MLm: number of violated clauses containing each variable.
template <typename Scalar = int>
Vector<Scalar> make_values(const AcceleratorImage& image, const Mask& mlm) {
  if (mlm.size() != image.num_clauses)
    throw std::invalid_argument("make_values: mask length differs from clause count");
  return image.membership.transpose().cast<Scalar>() * mlm.cast<Scalar>();
}

/// b = (Pᵀ·MLb) ⊙ x + (Nᵀ·MLb) ⊙ (1 - x). The polarity-separated bit-line
/// currents are gated by the current state, so a clause contributes only to
/// the variable whose literal is its single satisfied one.
template <typename Scalar = int>
Vector<Scalar> break_values(const AcceleratorImage& image, const Mask& mlb, const Assignment& x) {
  if (mlb.size() != image.num_clauses)
    throw std::invalid_argument("break_values: mask length differs from clause count");
  if (static_cast<int>(x.size()) != image.num_vars)
    throw std::invalid_argument("break_values: assignment length differs from variable count");
  const Vector<Scalar> xv = to_vector<Scalar>(x);
  const Vector<Scalar> rows = mlb.cast<Scalar>();
  const Vector<Scalar> pos = image.positive.transpose().cast<Scalar>() * rows;
  const Vector<Scalar> neg = image.negative.transpose().cast<Scalar>() * rows;
  return pos.cwiseProduct(xv) + neg.cwiseProduct(Vector<Scalar>::Ones(xv.size()) - xv);
}

template <typename Derived1, typename Derived2>
auto gain_values(const Eigen::MatrixBase<Derived1>& make, const Eigen::MatrixBase<Derived2>& brk) {
  if (make.size() != brk.size())
    throw std::invalid_argument("gain_values: make and break lengths differ");
  return (make - brk).eval();
}

template <typename Scalar = int>
struct GradientVectors {
  Vector<Scalar> make;
  Vector<Scalar> brk;
  Vector<Scalar> gain;
};

/// Full datapath for one input: TCAM search, both sense passes, both DPE
/// passes and the subtraction.
template <typename Scalar = int>
GradientVectors<Scalar> gradients(const AcceleratorImage& image, const Assignment& x) {
  const MlVector ml = match_distances(image, x);
  GradientVectors<Scalar> g;
  g.make = make_values<Scalar>(image, violated_mask(ml));
  g.brk = break_values<Scalar>(image, single_sat_mask(ml), x);
  g.gain = gain_values(g.make, g.brk);
  return g;
}

}  // namespace klima

#endif  // KLIMA_ACCEL_HPP
