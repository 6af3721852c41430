#include "polyzcl/lp.hpp"

#include <cassert>
#include <stdexcept>

namespace polyzcl {

namespace {

// Rows hold the constraint body plus the rhs in the last column; basic columns
// are kept as unit vectors, objective row included.
struct Tableau {
  int num_vars = 0;   // structural variables
  int num_cols = 0;   // structural + slack + artificial (rhs excluded)
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> obj;  // size num_cols + 1; last entry = current value
  std::vector<int> basis;
  std::vector<bool> artificial;

  Rational& rhs(int r) { return rows[static_cast<std::size_t>(r)].back(); }

  void pivot(int r, int c) {
    auto& prow = rows[static_cast<std::size_t>(r)];
    const Rational p = prow[static_cast<std::size_t>(c)];
    for (auto& v : prow) v /= p;
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
      if (i == r) continue;
      auto& row = rows[static_cast<std::size_t>(i)];
      const Rational f = row[static_cast<std::size_t>(c)];
      if (f == 0) continue;
      for (std::size_t j = 0; j < row.size(); ++j) row[j] -= f * prow[j];
    }
    const Rational f = obj[static_cast<std::size_t>(c)];
    if (f != 0)
      for (std::size_t j = 0; j < obj.size(); ++j) obj[j] -= f * prow[j];
    basis[static_cast<std::size_t>(r)] = c;
  }

  // Maximizes the current objective row. Returns false on unboundedness.
  bool run(bool forbid_artificial_entering) {
    long iterations = 0;
    while (true) {
      ++iterations;
      const bool bland = iterations > 500;
      int enter = -1;
      for (int j = 0; j < num_cols; ++j) {
        if (forbid_artificial_entering && artificial[static_cast<std::size_t>(j)]) continue;
        const Rational& rj = obj[static_cast<std::size_t>(j)];
        if (rj > 0) {
          if (bland) {
            enter = j;
            break;
          }
          if (enter == -1 || rj > obj[static_cast<std::size_t>(enter)]) enter = j;
        }
      }
      if (enter == -1) return true;  // optimal

      int leave = -1;
      Rational best;
      for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
        const Rational& a = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(enter)];
        if (a <= 0) continue;
        Rational ratio = rhs(i) / a;
        if (leave == -1 || ratio < best ||
            (ratio == best && basis[static_cast<std::size_t>(i)] < basis[static_cast<std::size_t>(leave)])) {
          best = ratio;
          leave = i;
        }
      }
      if (leave == -1) return false;  // unbounded
      pivot(leave, enter);
    }
  }
};

}  // namespace

LpSolution lp_maximize(const std::vector<Rational>& objective,
                       const std::vector<LpConstraint>& constraints) {
  const int nv = static_cast<int>(objective.size());
  int num_slacks = 0, num_arts = 0;
  for (const auto& c : constraints) {
    // A flipped >= becomes <=; slack/artificial needs depend on the sign of rhs.
    bool flip = c.rhs < 0;
    LpRelation rel = c.rel;
    if (flip) rel = (rel == LpRelation::le) ? LpRelation::ge : (rel == LpRelation::ge ? LpRelation::le : LpRelation::eq);
    if (rel != LpRelation::eq) ++num_slacks;
    if (rel != LpRelation::le) ++num_arts;
  }

  Tableau t;
  t.num_vars = nv;
  t.num_cols = nv + num_slacks + num_arts;
  t.artificial.assign(static_cast<std::size_t>(t.num_cols), false);
  t.obj.assign(static_cast<std::size_t>(t.num_cols) + 1, Rational(0));

  int next_slack = nv;
  int next_art = nv + num_slacks;
  for (const auto& c : constraints) {
    if (static_cast<int>(c.coeffs.size()) != nv)
      throw std::logic_error("constraint arity mismatch");
    std::vector<Rational> row(static_cast<std::size_t>(t.num_cols) + 1, Rational(0));
    bool flip = c.rhs < 0;
    for (int j = 0; j < nv; ++j) row[static_cast<std::size_t>(j)] = flip ? -c.coeffs[static_cast<std::size_t>(j)] : c.coeffs[static_cast<std::size_t>(j)];
    row.back() = flip ? -c.rhs : c.rhs;
    LpRelation rel = c.rel;
    if (flip) rel = (rel == LpRelation::le) ? LpRelation::ge : (rel == LpRelation::ge ? LpRelation::le : LpRelation::eq);

    int basic = -1;
    if (rel == LpRelation::le) {
      row[static_cast<std::size_t>(next_slack)] = 1;
      basic = next_slack++;
    } else if (rel == LpRelation::ge) {
      row[static_cast<std::size_t>(next_slack)] = -1;
      ++next_slack;
      row[static_cast<std::size_t>(next_art)] = 1;
      t.artificial[static_cast<std::size_t>(next_art)] = true;
      basic = next_art++;
    } else {
      row[static_cast<std::size_t>(next_art)] = 1;
      t.artificial[static_cast<std::size_t>(next_art)] = true;
      basic = next_art++;
    }
    t.rows.push_back(std::move(row));
    t.basis.push_back(basic);
  }

  LpSolution sol;

  if (num_arts > 0) {
    // Phase 1: maximize -sum(artificials), expressed through the basic rows.
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
      if (!t.artificial[static_cast<std::size_t>(t.basis[i])]) continue;
      for (std::size_t j = 0; j < t.obj.size(); ++j) t.obj[j] += t.rows[i][j];
    }
    for (int j = 0; j < t.num_cols; ++j)
      if (t.artificial[static_cast<std::size_t>(j)]) t.obj[static_cast<std::size_t>(j)] = 0;
    if (!t.run(true)) throw std::logic_error("phase 1 cannot be unbounded");
    if (t.obj.back() != 0) {
      sol.status = LpStatus::infeasible;
      return sol;
    }
    // Pivot any artificial still basic (at zero) out, or drop its redundant row.
    for (int i = 0; i < static_cast<int>(t.rows.size());) {
      if (!t.artificial[static_cast<std::size_t>(t.basis[static_cast<std::size_t>(i)])]) {
        ++i;
        continue;
      }
      int c = -1;
      for (int j = 0; j < t.num_cols; ++j) {
        if (t.artificial[static_cast<std::size_t>(j)]) continue;
        if (t.rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] != 0) {
          c = j;
          break;
        }
      }
      if (c >= 0) {
        t.pivot(i, c);
        ++i;
      } else {
        t.rows.erase(t.rows.begin() + i);
        t.basis.erase(t.basis.begin() + i);
      }
    }
  }

  // Phase 2 objective, reduced against the current basis.
  std::fill(t.obj.begin(), t.obj.end(), Rational(0));
  for (int j = 0; j < nv; ++j) t.obj[static_cast<std::size_t>(j)] = objective[static_cast<std::size_t>(j)];
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    const Rational f = t.obj[static_cast<std::size_t>(t.basis[i])];
    if (f == 0) continue;
    for (std::size_t j = 0; j < t.obj.size(); ++j) t.obj[j] -= f * t.rows[i][j];
  }
  if (!t.run(true)) {
    sol.status = LpStatus::unbounded;
    return sol;
  }

  sol.status = LpStatus::optimal;
  sol.objective = -t.obj.back();
  sol.x.assign(static_cast<std::size_t>(nv), Rational(0));
  for (std::size_t i = 0; i < t.rows.size(); ++i)
    if (t.basis[i] < nv) sol.x[static_cast<std::size_t>(t.basis[i])] = t.rows[i].back();
  return sol;
}

}  // namespace polyzcl
