#include "ridesched/lp.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace ridesched::lp {

namespace {

constexpr double kCostTol = 1e-9;
constexpr double kPivTol = 1e-9;
constexpr double kFeasTol = 1e-8;

enum VarStat : unsigned char { kBasic, kAtLower, kAtUpper };

class Simplex {
 public:
  explicit Simplex(const LinearProgram& prob)
      : n_(prob.num_vars), m_(static_cast<int>(prob.rows.size())) {
    total_ = n_ + 2 * m_;  // structurals, slacks, artificials
    lower_.assign(total_, 0.0);
    upper_.assign(total_, 0.0);
    cost_.assign(total_, 0.0);
    acol_.assign(static_cast<size_t>(n_ + m_) * m_, 0.0);
    rhs_.resize(m_);

    for (int j = 0; j < n_; ++j) {
      lower_[j] = prob.lower[j];
      upper_[j] = prob.upper[j];
      cost_[j] = prob.objective[j];
    }
    for (int i = 0; i < m_; ++i) {
      const Row& row = prob.rows[i];
      rhs_[i] = row.rhs;
      for (int j = 0; j < n_; ++j) acol_[col_off(j) + i] = row.coeffs[j];
      int s = n_ + i;
      acol_[col_off(s) + i] = 1.0;
      switch (row.sense) {
        case Sense::LE: lower_[s] = 0.0; upper_[s] = kInf; break;
        case Sense::GE: lower_[s] = -kInf; upper_[s] = 0.0; break;
        case Sense::EQ: lower_[s] = 0.0; upper_[s] = 0.0; break;
      }
    }
    for (int i = 0; i < m_; ++i) {
      lower_[n_ + m_ + i] = 0.0;
      upper_[n_ + m_ + i] = kInf;
    }
  }

  Solution run(const LinearProgram& prob) {
    Solution sol;
    for (int j = 0; j < total_; ++j) {
      if (lower_[j] > upper_[j] + 1e-12) {
        sol.status = SolveStatus::Infeasible;
        return sol;
      }
    }
    init_basis();

    // phase 1: minimize the sum of artificials
    std::vector<double> phase1(total_, 0.0);
    for (int i = 0; i < m_; ++i) phase1[n_ + m_ + i] = 1.0;
    SolveStatus st = iterate(phase1);
    if (st != SolveStatus::Optimal) {
      sol.status = st == SolveStatus::Unbounded ? SolveStatus::IterationLimit : st;
      return sol;
    }
    double infeas = 0.0;
    for (int i = 0; i < m_; ++i) infeas += std::fabs(x_[n_ + m_ + i]);
    if (infeas > kFeasTol) {
      sol.status = SolveStatus::Infeasible;
      return sol;
    }

    // phase 2: pin artificials at zero, restore the real objective
    for (int i = 0; i < m_; ++i) {
      int a = n_ + m_ + i;
      upper_[a] = 0.0;
      if (stat_[a] != kBasic) x_[a] = 0.0;
    }
    st = iterate(cost_);
    if (st != SolveStatus::Optimal) {
      sol.status = st;
      return sol;
    }

    refactor();
    sol.status = SolveStatus::Optimal;
    sol.values.assign(x_.begin(), x_.begin() + n_);
    sol.objective = prob.objective_constant;
    for (int j = 0; j < n_; ++j) sol.objective += prob.objective[j] * x_[j];
    return sol;
  }

 private:
  size_t col_off(int j) const { return static_cast<size_t>(j) * m_; }

  // column j of the full constraint matrix into out
  void column(int j, std::vector<double>& out) const {
    std::fill(out.begin(), out.end(), 0.0);
    if (j < n_ + m_) {
      const double* c = &acol_[col_off(j)];
      for (int i = 0; i < m_; ++i) out[i] = c[i];
    } else {
      out[j - n_ - m_] = art_sign_[j - n_ - m_];
    }
  }

  void init_basis() {
    x_.assign(total_, 0.0);
    stat_.assign(total_, kAtLower);
    for (int j = 0; j < n_ + m_; ++j) {
      if (std::isfinite(lower_[j])) {
        x_[j] = lower_[j];
        stat_[j] = kAtLower;
      } else {
        x_[j] = upper_[j];
        stat_[j] = kAtUpper;
      }
    }
    std::vector<double> resid = rhs_;
    for (int j = 0; j < n_ + m_; ++j) {
      if (x_[j] == 0.0) continue;
      const double* c = &acol_[col_off(j)];
      for (int i = 0; i < m_; ++i) resid[i] -= c[i] * x_[j];
    }
    basis_.resize(m_);
    art_sign_.resize(m_);
    binv_.assign(static_cast<size_t>(m_) * m_, 0.0);
    for (int i = 0; i < m_; ++i) {
      art_sign_[i] = resid[i] >= 0.0 ? 1.0 : -1.0;
      int a = n_ + m_ + i;
      basis_[i] = a;
      stat_[a] = kBasic;
      x_[a] = std::fabs(resid[i]);
      binv_[static_cast<size_t>(i) * m_ + i] = art_sign_[i];
    }
  }

  // rebuild Binv from the basis columns and recompute basic values
  void refactor() {
    if (m_ == 0) return;
    std::vector<double> work(static_cast<size_t>(m_) * 2 * m_, 0.0);
    std::vector<double> col(m_);
    for (int k = 0; k < m_; ++k) {
      column(basis_[k], col);
      for (int i = 0; i < m_; ++i) work[static_cast<size_t>(i) * 2 * m_ + k] = col[i];
    }
    for (int i = 0; i < m_; ++i) work[static_cast<size_t>(i) * 2 * m_ + m_ + i] = 1.0;
    // Gauss-Jordan with partial pivoting
    for (int c = 0; c < m_; ++c) {
      int piv = c;
      double best = std::fabs(work[static_cast<size_t>(c) * 2 * m_ + c]);
      for (int r = c + 1; r < m_; ++r) {
        double v = std::fabs(work[static_cast<size_t>(r) * 2 * m_ + c]);
        if (v > best) { best = v; piv = r; }
      }
      if (piv != c)
        for (int k = 0; k < 2 * m_; ++k)
          std::swap(work[static_cast<size_t>(c) * 2 * m_ + k],
                    work[static_cast<size_t>(piv) * 2 * m_ + k]);
      double p = work[static_cast<size_t>(c) * 2 * m_ + c];
      if (std::fabs(p) < 1e-13) p = p >= 0 ? 1e-13 : -1e-13;
      double inv = 1.0 / p;
      for (int k = 0; k < 2 * m_; ++k) work[static_cast<size_t>(c) * 2 * m_ + k] *= inv;
      for (int r = 0; r < m_; ++r) {
        if (r == c) continue;
        double f = work[static_cast<size_t>(r) * 2 * m_ + c];
        if (f == 0.0) continue;
        for (int k = 0; k < 2 * m_; ++k)
          work[static_cast<size_t>(r) * 2 * m_ + k] -=
              f * work[static_cast<size_t>(c) * 2 * m_ + k];
      }
    }
    for (int i = 0; i < m_; ++i)
      for (int k = 0; k < m_; ++k)
        binv_[static_cast<size_t>(i) * m_ + k] =
            work[static_cast<size_t>(i) * 2 * m_ + m_ + k];
    recompute_basics();
  }

  void recompute_basics() {
    std::vector<double> resid = rhs_;
    for (int j = 0; j < total_; ++j) {
      if (stat_[j] == kBasic || x_[j] == 0.0) continue;
      if (j < n_ + m_) {
        const double* c = &acol_[col_off(j)];
        for (int i = 0; i < m_; ++i) resid[i] -= c[i] * x_[j];
      } else {
        resid[j - n_ - m_] -= art_sign_[j - n_ - m_] * x_[j];
      }
    }
    for (int i = 0; i < m_; ++i) {
      double v = 0.0;
      const double* bi = &binv_[static_cast<size_t>(i) * m_];
      for (int k = 0; k < m_; ++k) v += bi[k] * resid[k];
      x_[basis_[i]] = v;
    }
  }

  SolveStatus iterate(const std::vector<double>& cost) {
    const long max_iter = 20000L + 200L * (m_ + n_);
    std::vector<double> y(m_), alpha(m_), acolj(m_);
    int since_refactor = 0;

    for (long iter = 0; iter < max_iter; ++iter) {
      // duals for the current basis
      for (int i = 0; i < m_; ++i) {
        double v = 0.0;
        for (int k = 0; k < m_; ++k)
          v += cost[basis_[k]] * binv_[static_cast<size_t>(k) * m_ + i];
        y[i] = v;
      }
      // Bland: smallest improving nonbasic index
      int enter = -1;
      double d_enter = 0.0;
      for (int j = 0; j < total_; ++j) {
        if (stat_[j] == kBasic) continue;
        if (upper_[j] - lower_[j] < 1e-15) continue;  // fixed
        double d = cost[j];
        if (j < n_ + m_) {
          const double* c = &acol_[col_off(j)];
          for (int i = 0; i < m_; ++i) d -= y[i] * c[i];
        } else {
          d -= y[j - n_ - m_] * art_sign_[j - n_ - m_];
        }
        if ((stat_[j] == kAtLower && d < -kCostTol) ||
            (stat_[j] == kAtUpper && d > kCostTol)) {
          enter = j;
          d_enter = d;
          break;
        }
      }
      if (enter < 0) {
        refactor();
        return SolveStatus::Optimal;
      }
      (void)d_enter;

      column(enter, acolj);
      for (int i = 0; i < m_; ++i) {
        double v = 0.0;
        const double* bi = &binv_[static_cast<size_t>(i) * m_];
        for (int k = 0; k < m_; ++k) v += bi[k] * acolj[k];
        alpha[i] = v;
      }
      double s = stat_[enter] == kAtLower ? 1.0 : -1.0;

      double t_best = kInf;
      int leave_row = -1;
      double leave_delta = 0.0;
      for (int r = 0; r < m_; ++r) {
        double delta = -s * alpha[r];
        int bv = basis_[r];
        double t;
        if (delta > kPivTol) {
          if (!std::isfinite(upper_[bv])) continue;
          t = (upper_[bv] - x_[bv]) / delta;
        } else if (delta < -kPivTol) {
          if (!std::isfinite(lower_[bv])) continue;
          t = (lower_[bv] - x_[bv]) / delta;
        } else {
          continue;
        }
        if (t < 0.0) t = 0.0;
        if (t < t_best - 1e-12 ||
            (t <= t_best + 1e-12 && (leave_row < 0 || bv < basis_[leave_row]))) {
          t_best = t;
          leave_row = r;
          leave_delta = delta;
        }
      }
      double t_bound = upper_[enter] - lower_[enter];

      if (t_bound <= t_best) {
        if (!std::isfinite(t_bound)) return SolveStatus::Unbounded;
        // bound flip, basis unchanged
        for (int r = 0; r < m_; ++r) x_[basis_[r]] += -s * alpha[r] * t_bound;
        x_[enter] = stat_[enter] == kAtLower ? upper_[enter] : lower_[enter];
        stat_[enter] = stat_[enter] == kAtLower ? kAtUpper : kAtLower;
        continue;
      }
      if (leave_row < 0) return SolveStatus::Unbounded;

      // pivot
      for (int r = 0; r < m_; ++r) x_[basis_[r]] += -s * alpha[r] * t_best;
      x_[enter] += s * t_best;
      int lv = basis_[leave_row];
      stat_[lv] = leave_delta > 0.0 ? kAtUpper : kAtLower;
      x_[lv] = leave_delta > 0.0 ? upper_[lv] : lower_[lv];
      basis_[leave_row] = enter;
      stat_[enter] = kBasic;

      double piv = alpha[leave_row];
      double* prow = &binv_[static_cast<size_t>(leave_row) * m_];
      for (int k = 0; k < m_; ++k) prow[k] /= piv;
      for (int r = 0; r < m_; ++r) {
        if (r == leave_row) continue;
        double f = alpha[r];
        if (f == 0.0) continue;
        double* rr = &binv_[static_cast<size_t>(r) * m_];
        for (int k = 0; k < m_; ++k) rr[k] -= f * prow[k];
      }
      if (++since_refactor >= 64) {
        refactor();
        since_refactor = 0;
      }
    }
    return SolveStatus::IterationLimit;
  }

  int n_, m_, total_;
  std::vector<double> lower_, upper_, cost_, acol_, rhs_;
  std::vector<double> x_, binv_, art_sign_;
  std::vector<int> basis_;
  std::vector<unsigned char> stat_;
};

}  // namespace

Solution solve(const LinearProgram& prob) {
  Simplex sx(prob);
  return sx.run(prob);
}

}  // namespace ridesched::lp
