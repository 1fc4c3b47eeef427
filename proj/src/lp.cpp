#include "rtk/lp.hpp"

#include <string>

#include "rtk/errors.hpp"

namespace rtk {
namespace {

// Constraint i written as a.x <= b (or = b).
void normalized_row(const LinearConstraint& c, RatVec& a, Rat& b) {
  a = c.coeffs;
  b = c.rhs;
  if (c.relation == Relation::kGreaterEqual) {
    for (auto& v : a) v = -v;
    b = -b;
  }
}

void validate(const LinearSystem& sys) {
  if (!sys.nonnegative.empty() && sys.nonnegative.size() != sys.num_vars) {
    throw InputError("nonnegativity flags do not match the variable count");
  }
  for (std::size_t i = 0; i < sys.constraints.size(); ++i) {
    if (sys.constraints[i].coeffs.size() != sys.num_vars) {
      throw InputError("constraint " + std::to_string(i) + " has " +
                       std::to_string(sys.constraints[i].coeffs.size()) +
                       " coefficients, expected " + std::to_string(sys.num_vars));
    }
  }
}

class Tableau {
 public:
  explicit Tableau(const LinearSystem& sys) : sys_(sys) {
    m_ = sys.constraints.size();
    // Column layout: slacks, structural (+/-), artificials. Slacks come
    // first so Bland's rule tries the origin before moving structurals.
    std::size_t col = 0;
    slack_col_.assign(m_, npos);
    for (std::size_t i = 0; i < m_; ++i) {
      if (sys.constraints[i].relation != Relation::kEqual) slack_col_[i] = col++;
    }
    pos_col_.resize(sys.num_vars);
    neg_col_.assign(sys.num_vars, npos);
    for (std::size_t j = 0; j < sys.num_vars; ++j) {
      pos_col_[j] = col++;
      if (!sys.is_nonnegative(j)) neg_col_[j] = col++;
    }
    first_art_ = col;
    ncols_ = col + m_;

    rows_.assign(m_, RatVec(ncols_));
    rhs_.resize(m_);
    sign_.resize(m_);
    basis_.resize(m_);
    RatVec a;
    Rat b;
    for (std::size_t i = 0; i < m_; ++i) {
      normalized_row(sys.constraints[i], a, b);
      sign_[i] = sgn(b) < 0 ? -1 : 1;
      auto& row = rows_[i];
      for (std::size_t j = 0; j < sys.num_vars; ++j) {
        if (sgn(a[j]) == 0) continue;
        row[pos_col_[j]] = sign_[i] * a[j];
        if (neg_col_[j] != npos) row[neg_col_[j]] = -row[pos_col_[j]];
      }
      if (slack_col_[i] != npos) row[slack_col_[i]] = sign_[i];
      row[first_art_ + i] = 1;
      rhs_[i] = sign_[i] * b;
      basis_[i] = first_art_ + i;
    }
    cost_.assign(ncols_, Rat(0));
    for (std::size_t j = 0; j < first_art_; ++j) {
      for (std::size_t i = 0; i < m_; ++i) cost_[j] -= rows_[i][j];
    }
    objective_ = 0;
    for (const auto& v : rhs_) objective_ += v;
  }

  LpOutcome solve() {
    while (sgn(objective_) > 0) {
      std::size_t enter = npos;
      for (std::size_t j = 0; j < first_art_; ++j) {
        if (sgn(cost_[j]) < 0) {
          enter = j;
          break;
        }
      }
      if (enter == npos) return infeasible();
      std::size_t leave = npos;
      Rat best;
      Rat ratio;
      for (std::size_t i = 0; i < m_; ++i) {
        if (sgn(rows_[i][enter]) <= 0) continue;
        ratio = rhs_[i] / rows_[i][enter];
        if (leave == npos || ratio < best ||
            (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == npos) {
        // Unbounded direction in phase one cannot happen: the objective is
        // bounded below by zero.
        throw InvariantError("phase-one simplex found an unbounded column");
      }
      pivot(leave, enter);
    }
    return feasible();
  }

 private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  void pivot(std::size_t p, std::size_t q) {
    auto& prow = rows_[p];
    const Rat inv = 1 / prow[q];
    for (auto& v : prow) {
      if (sgn(v) != 0) v *= inv;
    }
    rhs_[p] *= inv;
    nonzero_.clear();
    for (std::size_t j = 0; j < ncols_; ++j) {
      if (sgn(prow[j]) != 0) nonzero_.push_back(j);
    }
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == p || sgn(rows_[i][q]) == 0) continue;
      eliminate(rows_[i], rhs_[i], q, prow, rhs_[p]);
    }
    const Rat f = cost_[q];
    for (std::size_t j : nonzero_) {
      mpq_mul(tmp_.get_mpq_t(), f.get_mpq_t(), prow[j].get_mpq_t());
      mpq_sub(cost_[j].get_mpq_t(), cost_[j].get_mpq_t(), tmp_.get_mpq_t());
    }
    mpq_mul(tmp_.get_mpq_t(), f.get_mpq_t(), rhs_[p].get_mpq_t());
    mpq_add(objective_.get_mpq_t(), objective_.get_mpq_t(), tmp_.get_mpq_t());
    basis_[p] = q;
  }

  void eliminate(RatVec& row, Rat& rhs, std::size_t q, const RatVec& prow,
                 const Rat& prhs) {
    const Rat f = row[q];
    for (std::size_t j : nonzero_) {
      mpq_mul(tmp_.get_mpq_t(), f.get_mpq_t(), prow[j].get_mpq_t());
      mpq_sub(row[j].get_mpq_t(), row[j].get_mpq_t(), tmp_.get_mpq_t());
    }
    mpq_mul(tmp_.get_mpq_t(), f.get_mpq_t(), prhs.get_mpq_t());
    mpq_sub(rhs.get_mpq_t(), rhs.get_mpq_t(), tmp_.get_mpq_t());
  }

  LpOutcome feasible() const {
    RatVec colval(ncols_);
    for (std::size_t i = 0; i < m_; ++i) colval[basis_[i]] = rhs_[i];
    RatVec x(sys_.num_vars);
    for (std::size_t j = 0; j < sys_.num_vars; ++j) {
      x[j] = colval[pos_col_[j]];
      if (neg_col_[j] != npos) x[j] -= colval[neg_col_[j]];
    }
    if (!satisfies(sys_, x)) throw InvariantError("simplex produced an infeasible point");
    return Feasible{std::move(x)};
  }

  LpOutcome infeasible() const {
    RatVec z(m_);
    for (std::size_t i = 0; i < m_; ++i) {
      const Rat y = 1 - cost_[first_art_ + i];
      z[i] = -sign_[i] * y / objective_;
    }
    if (!is_farkas_certificate(sys_, z)) {
      throw InvariantError("simplex produced an invalid Farkas certificate");
    }
    return Infeasible{std::move(z)};
  }

  const LinearSystem& sys_;
  std::size_t m_ = 0;
  std::size_t ncols_ = 0;
  std::size_t first_art_ = 0;
  std::vector<std::size_t> pos_col_, neg_col_, slack_col_, basis_;
  std::vector<int> sign_;
  std::vector<RatVec> rows_;
  RatVec rhs_, cost_;
  Rat objective_;
  Rat tmp_;
  std::vector<std::size_t> nonzero_;
};

}  // namespace

LpOutcome lp_feasible(const LinearSystem& system) {
  validate(system);
  Tableau t(system);
  return t.solve();
}

bool satisfies(const LinearSystem& sys, const RatVec& x) {
  if (x.size() != sys.num_vars) return false;
  for (std::size_t j = 0; j < sys.num_vars; ++j) {
    if (sys.is_nonnegative(j) && sgn(x[j]) < 0) return false;
  }
  for (const auto& c : sys.constraints) {
    const Rat lhs = dot(c.coeffs, x);
    switch (c.relation) {
      case Relation::kLessEqual:
        if (lhs > c.rhs) return false;
        break;
      case Relation::kGreaterEqual:
        if (lhs < c.rhs) return false;
        break;
      case Relation::kEqual:
        if (lhs != c.rhs) return false;
        break;
    }
  }
  return true;
}

bool is_farkas_certificate(const LinearSystem& sys, const RatVec& y) {
  if (y.size() != sys.constraints.size()) return false;
  RatVec combined(sys.num_vars);
  Rat rhs = 0;
  RatVec a;
  Rat b;
  for (std::size_t i = 0; i < y.size(); ++i) {
    const auto& c = sys.constraints[i];
    if (c.coeffs.size() != sys.num_vars) return false;
    if (c.relation != Relation::kEqual && sgn(y[i]) < 0) return false;
    if (sgn(y[i]) == 0) continue;
    normalized_row(c, a, b);
    for (std::size_t j = 0; j < sys.num_vars; ++j) combined[j] += y[i] * a[j];
    rhs += y[i] * b;
  }
  for (std::size_t j = 0; j < sys.num_vars; ++j) {
    const int s = sgn(combined[j]);
    if (sys.is_nonnegative(j) ? s < 0 : s != 0) return false;
  }
  return sgn(rhs) < 0;
}

}  // namespace rtk
