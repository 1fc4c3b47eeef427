#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "rtk/rational.hpp"

namespace rtk {

enum class Relation { kLessEqual, kGreaterEqual, kEqual };

struct LinearConstraint {
  RatVec coeffs;
  Relation relation = Relation::kLessEqual;
  Rat rhs;
};

/// A system of linear constraints over `num_vars` variables. Variables are
/// free unless flagged in `nonnegative` (empty means all free).
struct LinearSystem {
  std::size_t num_vars = 0;
  std::vector<LinearConstraint> constraints;
  std::vector<bool> nonnegative;

  void add(RatVec coeffs, Relation rel, Rat rhs) {
    constraints.push_back({std::move(coeffs), rel, std::move(rhs)});
  }
  bool is_nonnegative(std::size_t j) const {
    return !nonnegative.empty() && nonnegative[j];
  }
};

struct Feasible {
  RatVec solution;
};

/// Multipliers, one per constraint, applied to each constraint written as
/// `a.x <= b` (a >= row is negated first). Inequality multipliers are
/// nonnegative, equality multipliers are free. The combined row is zero on
/// free variables and nonnegative on nonnegative variables, while the
/// combined right-hand side is -1: the system implies 0 <= -1.
struct Infeasible {
  RatVec farkas;
};

class LpOutcome {
 public:
  LpOutcome(Feasible f) : value_(std::move(f)) {}
  LpOutcome(Infeasible i) : value_(std::move(i)) {}

  bool feasible() const { return std::holds_alternative<Feasible>(value_); }
  const RatVec& solution() const { return std::get<Feasible>(value_).solution; }
  const RatVec& farkas() const { return std::get<Infeasible>(value_).farkas; }

 private:
  std::variant<Feasible, Infeasible> value_;
};

/// Exact phase-one simplex with Bland's rule. Returns a basic feasible point
/// or a normalized Farkas certificate; both are re-checked before returning.
/// Throws InputError when a constraint's width differs from num_vars.
LpOutcome lp_feasible(const LinearSystem& system);

bool satisfies(const LinearSystem& system, const RatVec& x);

/// One exact matrix-vector product plus sign checks.
bool is_farkas_certificate(const LinearSystem& system, const RatVec& y);

}  // namespace rtk
