#include "klima/accel.hpp"

namespace klima {

AcceleratorImage compile(const CnfFormula& formula) {
  AcceleratorImage image;
  image.num_clauses = formula.num_clauses();
  image.num_vars = formula.num_vars();
  image.order = formula.order();

  const Eigen::Index rows = image.num_clauses, cols = image.num_vars;
  image.tcam.setConstant(rows, cols, static_cast<std::uint8_t>(TernaryCell::Wild));
  image.positive.setZero(rows, cols);
  image.negative.setZero(rows, cols);
  for (int i = 0; i < image.num_clauses; ++i) {
    for (const Literal& l : formula.clause(i)) {
      image.tcam(i, l.var) =
          static_cast<std::uint8_t>(l.negated ? TernaryCell::One : TernaryCell::Zero);
      (l.negated ? image.negative : image.positive)(i, l.var) = 1;
    }
  }
  image.membership = image.positive + image.negative;
  image.signed_membership = image.positive - image.negative;
  return image;
}

MlVector match_distances(const AcceleratorImage& image, const Assignment& x) {
  if (static_cast<int>(x.size()) != image.num_vars)
    throw std::invalid_argument("match_distances: assignment length differs from variable count");
  const Vector<int> xv = to_vector<int>(x);
  // A stored 0 mismatches an input 1; a stored 1 mismatches an input 0.
  return image.positive * xv + image.negative * (Vector<int>::Ones(xv.size()) - xv);
}

Mask violated_mask(const MlVector& ml, int theta_h) {
  return (ml.array() < theta_h).cast<std::uint8_t>().matrix();
}

Mask single_sat_mask(const MlVector& ml, Thresholds thresholds) {
  if (thresholds.theta_l >= thresholds.theta_h)
    throw std::invalid_argument("single_sat_mask: need theta_l < theta_h");
  return ((ml.array() > thresholds.theta_l) && (ml.array() < thresholds.theta_h))
      .cast<std::uint8_t>()
      .matrix();
}

}  // namespace klima
