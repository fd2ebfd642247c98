// Brute-force references used by the tests. Nothing here calls into the
// library's algorithms beyond the basic Monomial/MonomialIdeal containers.
#ifndef MI_TESTS_ORACLES_HPP
#define MI_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "monideal/lp.hpp"
#include "monideal/ring.hpp"

namespace oracle {

using mi::Exponent;
using mi::Monomial;
using mi::MonomialIdeal;
using mi::Rational;

inline std::vector<Monomial> box(std::size_t nvars, Exponent bound) {
  std::vector<Monomial> out;
  std::vector<Exponent> e(nvars, 0);
  for (;;) {
    out.emplace_back(e);
    std::size_t i = 0;
    while (i < nvars && e[i] == bound) {
      e[i++] = 0;
    }
    if (i == nvars) {
      return out;
    }
    ++e[i];
  }
}

inline bool divides(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) {
      return false;
    }
  }
  return true;
}

inline bool member(const std::vector<Monomial>& gens, const Monomial& m) {
  return std::any_of(gens.begin(), gens.end(), [&](const Monomial& g) { return divides(g, m); });
}

inline Monomial lcm_of(const std::vector<Monomial>& gens, std::uint32_t mask, std::size_t nvars) {
  std::vector<Exponent> e(nvars, 0);
  for (std::size_t k = 0; k < gens.size(); ++k) {
    if (mask >> k & 1u) {
      for (std::size_t i = 0; i < nvars; ++i) {
        e[i] = std::max(e[i], gens[k][i]);
      }
    }
  }
  return Monomial(e);
}

inline std::size_t rank_mod(std::vector<std::vector<std::int64_t>> rows, std::int64_t p) {
  auto power = [p](std::int64_t a, std::int64_t e) {
    std::int64_t r = 1;
    a %= p;
    while (e > 0) {
      if (e & 1) {
        r = r * a % p;
      }
      a = a * a % p;
      e >>= 1;
    }
    return r;
  };
  for (auto& row : rows) {
    for (auto& v : row) {
      v = ((v % p) + p) % p;
    }
  }
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) {
      ++pivot;
    }
    if (pivot == rows.size()) {
      continue;
    }
    std::swap(rows[pivot], rows[rank]);
    const std::int64_t inv = power(rows[rank][c], p - 2);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != rank && rows[r][c] != 0) {
        const std::int64_t f = rows[r][c] * inv % p;
        for (std::size_t k = c; k < cols; ++k) {
          rows[r][k] = ((rows[r][k] - f * rows[rank][k]) % p + p) % p;
        }
      }
    }
    ++rank;
  }
  return rank;
}

using BettiMap = std::map<std::pair<unsigned, std::vector<Exponent>>, std::uint64_t>;

// Multigraded Betti numbers of S/I from the Taylor complex tensored with k:
// in degree b only subsets with lcm exactly b survive, and the differential
// keeps the faces whose lcm stays b.
inline BettiMap taylor_betti(const MonomialIdeal& I, std::int64_t p) {
  const auto& gens = I.gens();
  const std::size_t r = gens.size();
  const std::size_t n = I.ring().size();
  std::map<std::vector<Exponent>, std::vector<std::uint32_t>> by_lcm;
  for (std::uint32_t mask = 0; mask < (1u << r); ++mask) {
    by_lcm[lcm_of(gens, mask, n).exponents()].push_back(mask);
  }
  BettiMap out;
  for (const auto& [b, masks] : by_lcm) {
    std::map<unsigned, std::vector<std::uint32_t>> by_size;
    for (auto m : masks) {
      by_size[static_cast<unsigned>(__builtin_popcount(m))].push_back(m);
    }
    auto boundary_rank = [&](unsigned i) -> std::size_t {
      if (i == 0 || !by_size.count(i) || !by_size.count(i - 1)) {
        return 0;
      }
      const auto& src = by_size[i];
      const auto& dst = by_size[i - 1];
      std::vector<std::vector<std::int64_t>> rows(src.size(), std::vector<std::int64_t>(dst.size(), 0));
      for (std::size_t s = 0; s < src.size(); ++s) {
        int sign = 1;
        for (std::size_t k = 0; k < r; ++k) {
          if (src[s] >> k & 1u) {
            const std::uint32_t face = src[s] & ~(1u << k);
            auto it = std::find(dst.begin(), dst.end(), face);
            if (it != dst.end()) {
              rows[s][static_cast<std::size_t>(it - dst.begin())] = sign;
            }
            sign = -sign;
          }
        }
      }
      return rank_mod(rows, p);
    };
    for (const auto& [i, faces] : by_size) {
      const std::size_t h = faces.size() - boundary_rank(i) - boundary_rank(i + 1);
      if (h > 0) {
        out[{i, b}] = h;
      }
    }
  }
  return out;
}

// min c.x subject to A x >= rhs and x >= 0, by enumerating every basic point
// (n tight constraints out of A and the coordinate planes). nullopt when no
// vertex is feasible. Assumes the optimum is attained at a vertex.
inline std::optional<Rational> lp_vertex_min(const std::vector<Rational>& c,
                                             const std::vector<std::vector<Rational>>& A,
                                             const std::vector<Rational>& rhs) {
  const std::size_t n = c.size();
  std::vector<std::vector<Rational>> rows = A;
  std::vector<Rational> b = rhs;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Rational> e(n, 0);
    e[i] = 1;
    rows.push_back(e);
    b.push_back(0);
  }
  const std::size_t m = rows.size();
  std::optional<Rational> best;
  std::vector<std::size_t> pick(n);
  // Enumerate n-subsets of the m constraints.
  std::vector<bool> chosen(m, false);
  std::fill(chosen.begin(), chosen.begin() + static_cast<std::ptrdiff_t>(std::min(n, m)), true);
  do {
    std::vector<std::vector<Rational>> M;
    for (std::size_t k = 0; k < m; ++k) {
      if (chosen[k]) {
        auto row = rows[k];
        row.push_back(b[k]);
        M.push_back(row);
      }
    }
    // Gauss-Jordan on the n x (n+1) system.
    bool singular = false;
    for (std::size_t col = 0; col < n && !singular; ++col) {
      std::size_t piv = col;
      while (piv < n && M[piv][col] == 0) {
        ++piv;
      }
      if (piv == n) {
        singular = true;
        break;
      }
      std::swap(M[piv], M[col]);
      const Rational d = M[col][col];
      for (auto& v : M[col]) {
        v /= d;
      }
      for (std::size_t r2 = 0; r2 < n; ++r2) {
        if (r2 != col && M[r2][col] != 0) {
          const Rational f = M[r2][col];
          for (std::size_t k = 0; k <= n; ++k) {
            M[r2][k] -= f * M[col][k];
          }
        }
      }
    }
    if (singular) {
      continue;
    }
    std::vector<Rational> x(n);
    for (std::size_t i = 0; i < n; ++i) {
      x[i] = M[i][n];
    }
    bool feasible = true;
    for (std::size_t k = 0; k < m && feasible; ++k) {
      Rational lhs = 0;
      for (std::size_t i = 0; i < n; ++i) {
        lhs += rows[k][i] * x[i];
      }
      feasible = lhs >= b[k];
    }
    if (feasible) {
      Rational v = 0;
      for (std::size_t i = 0; i < n; ++i) {
        v += c[i] * x[i];
      }
      if (!best || v < *best) {
        best = v;
      }
    }
  } while (std::prev_permutation(chosen.begin(), chosen.end()));
  return best;
}

// Two variables: a lies in conv(gens) + R^2_{>=0} iff it dominates a point on
// some segment [g, h] (a single generator is the degenerate segment).
inline bool newton_2d(const std::vector<Monomial>& gens, const Monomial& a) {
  for (const auto& g : gens) {
    for (const auto& h : gens) {
      // lambda in [0, 1] with lambda g_i + (1 - lambda) h_i <= a_i for i = 0, 1.
      Rational lo = 0;
      Rational hi = 1;
      for (std::size_t i = 0; i < 2; ++i) {
        const Rational gi = g[i];
        const Rational hv = h[i];
        const Rational ai = a[i];
        // lambda (g_i - h_i) <= a_i - h_i
        const Rational coef = gi - hv;
        const Rational bound = ai - hv;
        if (coef == 0) {
          if (bound < 0) {
            lo = 1;
            hi = 0;
          }
        } else if (coef > 0) {
          hi = std::min(hi, Rational(bound / coef));
        } else {
          lo = std::max(lo, Rational(bound / coef));
        }
      }
      if (lo <= hi) {
        return true;
      }
    }
  }
  return false;
}

} // namespace oracle

#endif
