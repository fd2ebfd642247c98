#ifndef MONIDEAL_LP_HPP
#define MONIDEAL_LP_HPP

#include <cstddef>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace mi {

using Rational = boost::multiprecision::cpp_rational;

enum class Relation { LessEqual, GreaterEqual, Equal };

struct LinearConstraint {
  std::vector<Rational> coeffs;
  Relation relation;
  Rational rhs;
};

/// minimize objective·x subject to the constraints and x >= 0.
struct LinearProgram {
  std::size_t num_vars = 0;
  std::vector<Rational> objective;
  std::vector<LinearConstraint> constraints;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Rational value;
  std::vector<Rational> x;
};

/// Two-phase tableau simplex over exact rationals with Bland's rule.
LpResult solve(const LinearProgram& lp);

} // namespace mi

#endif
