#include "monideal/lp.hpp"

#include "monideal/error.hpp"

namespace mi {

namespace {

// Tableau with rows = constraints, last column = rhs. `basis[r]` is the
// column basic in row r.
struct Tableau {
  std::vector<std::vector<Rational>> rows;
  std::vector<std::size_t> basis;
  std::size_t cols = 0; // excluding rhs

  Rational& rhs(std::size_t r) { return rows[r][cols]; }

  void pivot(std::size_t r, std::size_t c) {
    const Rational p = rows[r][c];
    for (auto& v : rows[r]) {
      v /= p;
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) {
        continue;
      }
      const Rational f = rows[i][c];
      for (std::size_t j = 0; j <= cols; ++j) {
        if (rows[r][j] != 0) {
          rows[i][j] -= f * rows[r][j];
        }
      }
    }
    basis[r] = c;
  }

  // Minimizes cost·x over the current basis, using only columns with
  // allowed[c]. Returns false when unbounded.
  bool optimize(const std::vector<Rational>& cost, const std::vector<bool>& allowed) {
    for (;;) {
      // Reduced costs: cost_c - cost_B · column_c.
      std::size_t entering = cols;
      for (std::size_t c = 0; c < cols && entering == cols; ++c) {
        if (!allowed[c]) {
          continue;
        }
        Rational reduced = cost[c];
        for (std::size_t r = 0; r < rows.size(); ++r) {
          if (rows[r][c] != 0) {
            reduced -= cost[basis[r]] * rows[r][c];
          }
        }
        if (reduced < 0) {
          entering = c; // Bland: lowest index
        }
      }
      if (entering == cols) {
        return true;
      }
      std::size_t leaving = rows.size();
      Rational best_ratio;
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r][entering] <= 0) {
          continue;
        }
        Rational ratio = rhs(r) / rows[r][entering];
        if (leaving == rows.size() || ratio < best_ratio ||
            (ratio == best_ratio && basis[r] < basis[leaving])) {
          leaving = r;
          best_ratio = ratio;
        }
      }
      if (leaving == rows.size()) {
        return false;
      }
      pivot(leaving, entering);
    }
  }
};

} // namespace

LpResult solve(const LinearProgram& lp) {
  const std::size_t n = lp.num_vars;
  if (lp.objective.size() != n) {
    throw InternalError("LP objective has the wrong length");
  }
  const std::size_t m = lp.constraints.size();
  // Columns: originals, one slack/surplus per inequality, one artificial per
  // row that lacks a slack basis.
  std::size_t slack_count = 0;
  for (const auto& c : lp.constraints) {
    if (c.coeffs.size() != n) {
      throw InternalError("LP constraint has the wrong length");
    }
    if (c.relation != Relation::Equal) {
      ++slack_count;
    }
  }
  const std::size_t art_begin = n + slack_count;
  const std::size_t cols = art_begin + m;
  Tableau t;
  t.cols = cols;
  t.rows.assign(m, std::vector<Rational>(cols + 1));
  t.basis.assign(m, 0);
  std::vector<bool> artificial_used(m, false);
  std::size_t slack = n;
  for (std::size_t r = 0; r < m; ++r) {
    const auto& c = lp.constraints[r];
    const bool flip = c.rhs < 0;
    const Rational sign = flip ? -1 : 1;
    for (std::size_t j = 0; j < n; ++j) {
      t.rows[r][j] = sign * c.coeffs[j];
    }
    t.rows[r][cols] = sign * c.rhs;
    Relation rel = c.relation;
    if (flip && rel == Relation::LessEqual) {
      rel = Relation::GreaterEqual;
    } else if (flip && rel == Relation::GreaterEqual) {
      rel = Relation::LessEqual;
    }
    if (rel == Relation::LessEqual) {
      t.rows[r][slack] = 1;
      t.basis[r] = slack++;
    } else {
      if (rel == Relation::GreaterEqual) {
        t.rows[r][slack++] = -1;
      }
      t.rows[r][art_begin + r] = 1;
      t.basis[r] = art_begin + r;
      artificial_used[r] = true;
    }
  }

  // Phase 1.
  std::vector<Rational> phase1(cols, 0);
  std::vector<bool> allowed(cols, true);
  for (std::size_t r = 0; r < m; ++r) {
    if (artificial_used[r]) {
      phase1[art_begin + r] = 1;
    } else {
      allowed[art_begin + r] = false;
    }
  }
  t.optimize(phase1, allowed);
  Rational infeasibility = 0;
  for (std::size_t r = 0; r < m; ++r) {
    if (t.basis[r] >= art_begin) {
      infeasibility += t.rhs(r);
    }
  }
  LpResult result;
  if (infeasibility != 0) {
    result.status = LpStatus::Infeasible;
    return result;
  }
  // Drive artificials at level zero out of the basis; drop redundant rows.
  for (std::size_t r = 0; r < t.rows.size();) {
    if (t.basis[r] < art_begin) {
      ++r;
      continue;
    }
    std::size_t c = 0;
    while (c < art_begin && t.rows[r][c] == 0) {
      ++c;
    }
    if (c < art_begin) {
      t.pivot(r, c);
      ++r;
    } else {
      t.rows.erase(t.rows.begin() + static_cast<std::ptrdiff_t>(r));
      t.basis.erase(t.basis.begin() + static_cast<std::ptrdiff_t>(r));
    }
  }

  // Phase 2.
  std::vector<Rational> cost(cols, 0);
  for (std::size_t j = 0; j < n; ++j) {
    cost[j] = lp.objective[j];
  }
  for (std::size_t c = art_begin; c < cols; ++c) {
    allowed[c] = false;
  }
  if (!t.optimize(cost, allowed)) {
    result.status = LpStatus::Unbounded;
    return result;
  }
  result.status = LpStatus::Optimal;
  result.x.assign(n, 0);
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    if (t.basis[r] < n) {
      result.x[t.basis[r]] = t.rhs(r);
    }
  }
  result.value = 0;
  for (std::size_t j = 0; j < n; ++j) {
    result.value += lp.objective[j] * result.x[j];
  }
  return result;
}

} // namespace mi
