#pragma once

// Minimal generating sets for semigroups { v in Z^n : A v >= 0 }.
//
// The lineality lattice L = { v : A v = 0 } is split off first: the result is
// +- a Hermite-normal-form basis of L together with canonical lifts of the
// Hilbert basis of the pointed image cone in Z^n / L.  The pointed part is
// computed classically: extreme-ray candidates from maximal row subsets,
// integer points of the fundamental parallelepipeds of full-rank ray subsets
// as generator candidates, then an exact irreducibility filter.
//
// A brute-force box oracle cross-checks any claimed basis against direct
// enumeration; it is deliberately independent of the computation above.

#include "polyptych/rational.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace polyptych {

using IntVec = std::vector<Int>;
using IntMat = std::vector<IntVec>;  // row-major

struct IneqSystem {
  std::size_t n = 0;
  IntMat rows;  // each of length n, nonzero
};

inline bool semigroup_member(const IneqSystem& sys, const IntVec& v) {
  for (const IntVec& r : sys.rows) {
    Int acc = 0;
    for (std::size_t i = 0; i < sys.n; ++i) acc += r[i] * v[i];
    if (acc < 0) return false;
  }
  return true;
}

namespace detail {

inline Int dot_vec(const IntVec& a, const IntVec& b) {
  Int acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

inline bool is_zero_vec(const IntVec& v) {
  for (const Int& x : v)
    if (x != 0) return false;
  return true;
}

inline IntVec primitive_vec(IntVec v) {
  Int g = 0;
  for (const Int& x : v) g = gcd_int(g, x);
  if (g > 1)
    for (Int& x : v) x /= g;
  return v;
}

// Column Hermite elimination of A (m x n).  Returns the unimodular column
// transform split into kernel columns (A * k = 0) and complement columns.
struct KernelSplit {
  IntMat kernel;      // columns of U spanning { v : A v = 0 }, saturated
  IntMat complement;  // remaining columns; [complement | kernel] is unimodular
};

inline KernelSplit kernel_split(const IntMat& a_in, std::size_t n) {
  IntMat a = a_in;                       // m x n, mutated
  IntMat u(n, IntVec(n, 0));             // columns tracked as u[col][coord]
  for (std::size_t i = 0; i < n; ++i) u[i][i] = 1;
  std::size_t m = a.size();

  auto col_axpy = [&](std::size_t dst, std::size_t src, const Int& q) {
    // column_dst -= q * column_src
    for (std::size_t r = 0; r < m; ++r) a[r][dst] -= q * a[r][src];
    for (std::size_t r = 0; r < n; ++r) u[dst][r] -= q * u[src][r];
  };
  auto col_swap = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < m; ++r) std::swap(a[r][i], a[r][j]);
    std::swap(u[i], u[j]);
  };
  auto col_negate = [&](std::size_t i) {
    for (std::size_t r = 0; r < m; ++r) a[r][i] = -a[r][i];
    for (std::size_t r = 0; r < n; ++r) u[i][r] = -u[i][r];
  };

  std::size_t c = 0;
  for (std::size_t row = 0; row < m && c < n; ++row) {
    for (;;) {
      std::size_t best = n;
      for (std::size_t j = c; j < n; ++j)
        if (a[row][j] != 0 && (best == n || abs(a[row][j]) < abs(a[row][best]))) best = j;
      if (best == n) break;  // row already zero on the free columns
      col_swap(c, best);
      bool others = false;
      for (std::size_t j = c + 1; j < n; ++j)
        if (a[row][j] != 0) {
          Int q = a[row][j] / a[row][c];
          col_axpy(j, c, q);
          if (a[row][j] != 0) others = true;
        }
      if (!others) break;
    }
    if (a[row][c] != 0) {
      if (a[row][c] < 0) col_negate(c);
      ++c;
    }
  }
  KernelSplit out;
  for (std::size_t j = 0; j < c; ++j) out.complement.push_back(u[j]);
  for (std::size_t j = c; j < n; ++j) out.kernel.push_back(u[j]);
  return out;
}

// Row-style Hermite normal form of the lattice spanned by the given vectors:
// pivot columns strictly increase, pivots positive, entries above a pivot
// reduced into [0, pivot).
inline IntMat row_hnf(IntMat rows) {
  std::size_t n = rows.empty() ? 0 : rows[0].size();
  IntMat basis;
  std::size_t col = 0, start = 0;
  // Gaussian gcd elimination by columns.
  for (col = 0; col < n; ++col) {
    std::size_t pivot = rows.size();
    for (;;) {
      pivot = rows.size();
      for (std::size_t i = start; i < rows.size(); ++i)
        if (rows[i][col] != 0 && (pivot == rows.size() || abs(rows[i][col]) < abs(rows[pivot][col])))
          pivot = i;
      if (pivot == rows.size()) break;
      bool reduced = true;
      for (std::size_t i = start; i < rows.size(); ++i) {
        if (i == pivot || rows[i][col] == 0) continue;
        Int q = rows[i][col] / rows[pivot][col];
        for (std::size_t j = 0; j < n; ++j) rows[i][j] -= q * rows[pivot][j];
        if (rows[i][col] != 0) reduced = false;
      }
      if (reduced) break;
    }
    if (pivot == rows.size()) continue;
    std::swap(rows[start], rows[pivot]);
    if (rows[start][col] < 0)
      for (std::size_t j = 0; j < n; ++j) rows[start][j] = -rows[start][j];
    ++start;
  }
  rows.resize(start);
  // Reduce entries above each pivot.
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::size_t pc = 0;
    while (pc < n && rows[i][pc] == 0) ++pc;
    for (std::size_t k = 0; k < i; ++k) {
      if (rows[i][pc] == 0) break;
      Int q = rows[k][pc] / rows[i][pc];
      if (rows[k][pc] - q * rows[i][pc] < 0) q -= 1;  // floor division
      if (q == 0) continue;
      for (std::size_t j = 0; j < n; ++j) rows[k][j] -= q * rows[i][j];
    }
  }
  return rows;
}

// Reduces v modulo the lattice with the given HNF basis, making the pivot
// coordinates lie in [0, pivot).
inline IntVec reduce_mod_lattice(IntVec v, const IntMat& hnf_basis) {
  std::size_t n = v.size();
  for (const IntVec& b : hnf_basis) {
    std::size_t pc = 0;
    while (pc < n && b[pc] == 0) ++pc;
    if (pc == n) continue;
    Int q = v[pc] / b[pc];
    if (v[pc] - q * b[pc] < 0) q -= 1;
    if (q == 0) continue;
    for (std::size_t j = 0; j < n; ++j) v[j] -= q * b[j];
  }
  return v;
}

// Exact inverse of a unimodular integer matrix (columns given).
inline IntMat unimodular_inverse(const IntMat& cols) {
  std::size_t n = cols.size();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(2 * n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = Rational(cols[j][i]);
    m[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) throw Error("unimodular_inverse: singular matrix");
    std::swap(m[p], m[c]);
    Rational inv = Rational(1) / m[c][c];
    for (std::size_t j = 0; j < 2 * n; ++j) m[c][j] *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || m[i][c] == 0) continue;
      Rational f = m[i][c];
      for (std::size_t j = 0; j < 2 * n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  IntMat inv(n, IntVec(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!is_integer(m[i][n + j])) throw Error("unimodular_inverse: non-integer inverse");
      inv[i][j] = numerator(m[i][n + j]);
    }
  return inv;
}

// One-dimensional rational null space of a set of row vectors, as a primitive
// integer vector; empty when the nullity differs from one.
inline std::optional<IntVec> null_direction(const IntMat& rows, std::size_t n) {
  std::vector<std::vector<Rational>> m;
  for (const IntVec& r : rows) {
    std::vector<Rational> q(n);
    for (std::size_t j = 0; j < n; ++j) q[j] = Rational(r[j]);
    m.push_back(std::move(q));
  }
  std::vector<std::size_t> pivot_col;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < n && rank < m.size(); ++c) {
    std::size_t p = rank;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[rank]);
    Rational inv = Rational(1) / m[rank][c];
    for (std::size_t j = 0; j < n; ++j) m[rank][j] *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == rank || m[i][c] == 0) continue;
      Rational f = m[i][c];
      for (std::size_t j = 0; j < n; ++j) m[i][j] -= f * m[rank][j];
    }
    pivot_col.push_back(c);
    ++rank;
  }
  if (rank + 1 != n) return std::nullopt;
  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : pivot_col) is_pivot[c] = true;
  std::size_t free_col = 0;
  while (is_pivot[free_col]) ++free_col;
  std::vector<Rational> sol(n, Rational(0));
  sol[free_col] = 1;
  for (std::size_t i = 0; i < rank; ++i) sol[pivot_col[i]] = -m[i][free_col];
  // clear denominators
  Int lcm = 1;
  for (const Rational& q : sol) lcm = lcm / gcd_int(lcm, denominator(q)) * denominator(q);
  IntVec out(n);
  for (std::size_t j = 0; j < n; ++j) out[j] = numerator(sol[j] * lcm);
  return primitive_vec(out);
}

inline std::size_t rank_of(const IntMat& rows, std::size_t n) {
  std::vector<std::vector<Rational>> m;
  for (const IntVec& r : rows) {
    std::vector<Rational> q(n);
    for (std::size_t j = 0; j < n; ++j) q[j] = Rational(r[j]);
    m.push_back(std::move(q));
  }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < n && rank < m.size(); ++c) {
    std::size_t p = rank;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t i = rank + 1; i < m.size(); ++i) {
      if (m[i][c] == 0) continue;
      Rational f = m[i][c] / m[rank][c];
      for (std::size_t j = 0; j < n; ++j) m[i][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

// Hilbert basis of the pointed cone { v in Z^d : A v >= 0 } (trivial
// lineality assumed).
inline IntMat pointed_hilbert(const IntMat& a, std::size_t d);

// Integer points of { V t : t in [0,1]^d } for an independent column set V.
inline void parallelepiped_points(const IntMat& cols, std::size_t d,
                                  std::set<IntVec>& out) {
  // Bounding box over the 2^d corner sums.
  IntVec lo(d, 0), hi(d, 0);
  for (std::size_t mask = 0; mask < (std::size_t(1) << cols.size()); ++mask) {
    IntVec corner(d, 0);
    for (std::size_t i = 0; i < cols.size(); ++i)
      if (mask & (std::size_t(1) << i))
        for (std::size_t j = 0; j < d; ++j) corner[j] += cols[i][j];
    for (std::size_t j = 0; j < d; ++j) {
      if (corner[j] < lo[j]) lo[j] = corner[j];
      if (corner[j] > hi[j]) hi[j] = corner[j];
    }
  }
  // Exact inverse of V for membership tests.
  std::size_t k = cols.size();
  std::vector<std::vector<Rational>> m(k, std::vector<Rational>(2 * k));
  if (k != d) throw Error("parallelepiped_points: expected a square system");
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) m[i][j] = Rational(cols[j][i]);
  for (std::size_t i = 0; i < d; ++i) m[i][d + i] = 1;
  for (std::size_t c = 0; c < d; ++c) {
    std::size_t p = c;
    while (p < d && m[p][c] == 0) ++p;
    if (p == d) throw Error("parallelepiped_points: singular column set");
    std::swap(m[p], m[c]);
    Rational inv = Rational(1) / m[c][c];
    for (std::size_t j = 0; j < 2 * d; ++j) m[c][j] *= inv;
    for (std::size_t i = 0; i < d; ++i) {
      if (i == c || m[i][c] == 0) continue;
      Rational f = m[i][c];
      for (std::size_t j = 0; j < 2 * d; ++j) m[i][j] -= f * m[c][j];
    }
  }

  IntVec x = lo;
  for (;;) {
    // t = V^{-1} x must lie in [0,1]^d
    bool inside = true;
    for (std::size_t i = 0; i < d && inside; ++i) {
      Rational t(0);
      for (std::size_t j = 0; j < d; ++j) t += m[i][d + j] * x[j];
      if (t < 0 || t > 1) inside = false;
    }
    if (inside && !is_zero_vec(x)) out.insert(x);
    std::size_t j = 0;
    for (; j < d; ++j) {
      if (x[j] < hi[j]) {
        ++x[j];
        break;
      }
      x[j] = lo[j];
    }
    if (j == d) break;
  }
}

inline IntMat pointed_hilbert(const IntMat& a, std::size_t d) {
  if (d == 0) return {};

  // Extreme-ray candidates from (d-1)-subsets of the rows.
  std::set<IntVec> rayset;
  auto try_dir = [&](const IntVec& r) {
    IneqSystem s{d, a};
    if (semigroup_member(s, r)) rayset.insert(r);
    IntVec neg(d);
    for (std::size_t j = 0; j < d; ++j) neg[j] = -r[j];
    if (semigroup_member(s, neg)) rayset.insert(neg);
  };
  if (d == 1) {
    try_dir(IntVec{1});
  } else {
    // enumerate all (d-1)-element subsets of rows
    std::vector<std::size_t> comb;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
      if (comb.size() == d - 1) {
        IntMat sub;
        for (std::size_t i : comb) sub.push_back(a[i]);
        if (auto dir = null_direction(sub, d)) try_dir(*dir);
        return;
      }
      for (std::size_t i = start; i < a.size(); ++i) {
        comb.push_back(i);
        rec(i + 1);
        comb.pop_back();
      }
    };
    rec(0);
  }
  if (rayset.empty()) return {};
  IntMat rays(rayset.begin(), rayset.end());

  // If the cone spans a proper subspace, restrict to a saturated basis of the
  // span and recurse.
  std::size_t rank = rank_of(rays, d);
  if (rank < d) {
    // forms vanishing on all rays
    KernelSplit forms = kernel_split(rays, d);
    IntMat vanishing;
    for (const IntVec& f : forms.kernel) vanishing.push_back(f);
    // saturated basis of the span = kernel of the vanishing forms
    KernelSplit span = kernel_split(vanishing, d);
    const IntMat& basis = span.kernel;  // d x rank columns
    // rewrite rows and rays in the basis coordinates
    IntMat arows;
    for (const IntVec& r : a) {
      IntVec rr(basis.size());
      for (std::size_t j = 0; j < basis.size(); ++j) rr[j] = dot_vec(r, basis[j]);
      if (!is_zero_vec(rr)) arows.push_back(rr);
    }
    IntMat sub = pointed_hilbert(arows, basis.size());
    IntMat out;
    for (const IntVec& h : sub) {
      IntVec v(d, 0);
      for (std::size_t j = 0; j < basis.size(); ++j)
        for (std::size_t i = 0; i < d; ++i) v[i] += basis[j][i] * h[j];
      out.push_back(v);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  // Generator candidates: parallelepiped points of every full-rank d-subset
  // of rays (their union covers the cone), plus the rays themselves.
  std::set<IntVec> cand(rays.begin(), rays.end());
  std::vector<std::size_t> comb;
  std::function<void(std::size_t)> rec2 = [&](std::size_t start) {
    if (comb.size() == d) {
      IntMat cols;
      for (std::size_t i : comb) cols.push_back(rays[i]);
      if (rank_of(cols, d) == d) parallelepiped_points(cols, d, cand);
      return;
    }
    for (std::size_t i = start; i < rays.size(); ++i) {
      comb.push_back(i);
      rec2(i + 1);
      comb.pop_back();
    }
  };
  rec2(0);

  // Keep semigroup members only, then filter to the irreducible elements.
  IneqSystem sys{d, a};
  std::vector<IntVec> members;
  for (const IntVec& v : cand)
    if (semigroup_member(sys, v)) members.push_back(v);

  IntMat basis;
  for (const IntVec& c : members) {
    bool reducible = false;
    for (const IntVec& g : members) {
      if (g == c) continue;
      IntVec diff(d);
      for (std::size_t j = 0; j < d; ++j) diff[j] = c[j] - g[j];
      if (is_zero_vec(diff)) continue;
      if (semigroup_member(sys, diff)) {
        reducible = true;
        break;
      }
    }
    if (!reducible) basis.push_back(c);
  }
  std::sort(basis.begin(), basis.end());
  return basis;
}

}  // namespace detail

// Lineality HNF basis of { v : rows . v = 0 }.
inline IntMat lineality_basis(const IneqSystem& sys) {
  detail::KernelSplit split = detail::kernel_split(sys.rows, sys.n);
  IntMat rows;
  for (const IntVec& k : split.kernel) rows.push_back(k);
  return detail::row_hnf(std::move(rows));
}

// Minimal generating set of { v in Z^n : rows . v >= 0 }: +-lineality basis
// plus canonical lifts (pivot coordinates reduced) of the pointed Hilbert
// basis of the image cone.
inline IntMat hilbert_basis(const IneqSystem& sys) {
  if (sys.rows.empty()) {
    IntMat out;
    for (std::size_t i = 0; i < sys.n; ++i) {
      IntVec e(sys.n, 0);
      e[i] = 1;
      out.push_back(e);
      e[i] = -1;
      out.push_back(e);
    }
    return out;
  }
  detail::KernelSplit split = detail::kernel_split(sys.rows, sys.n);
  IntMat lin = detail::row_hnf(split.kernel);

  // Quotient system on the complement coordinates.
  std::size_t d = split.complement.size();
  IntMat arows;
  for (const IntVec& r : sys.rows) {
    IntVec rr(d);
    for (std::size_t j = 0; j < d; ++j) rr[j] = detail::dot_vec(r, split.complement[j]);
    if (!detail::is_zero_vec(rr)) arows.push_back(rr);
  }
  IntMat pointed = detail::pointed_hilbert(arows, d);

  IntMat out;
  for (const IntVec& b : pointed) {
    IntVec v(sys.n, 0);
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t i = 0; i < sys.n; ++i) v[i] += split.complement[j][i] * b[j];
    out.push_back(detail::reduce_mod_lattice(std::move(v), lin));
  }
  std::sort(out.begin(), out.end(), std::greater<IntVec>());
  for (const IntVec& b : lin) {
    out.push_back(b);
    IntVec neg(sys.n);
    for (std::size_t i = 0; i < sys.n; ++i) neg[i] = -b[i];
    out.push_back(neg);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Brute-force box oracle.

struct HilbertOracleResult {
  bool ok = true;
  std::string detail;
};

// Checks a claimed basis against enumeration of the semigroup points in the
// box |v_i| <= box: (a) every generator is a semigroup member, (b) every box
// point is a nonnegative integer combination of the generators, (c) modulo
// the lineality lattice no pointed generator is a sum of two nonzero
// semigroup points of the box.
inline HilbertOracleResult hilbert_box_oracle(const IneqSystem& sys, const IntMat& basis,
                                              long long box) {
  auto fail = [](std::string why) { return HilbertOracleResult{false, std::move(why)}; };
  auto vec_str = [](const IntVec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].str();
    return s + ")";
  };

  for (const IntVec& g : basis)
    if (!semigroup_member(sys, g)) return fail("generator outside the semigroup: " + vec_str(g));

  // Quotient split, recomputed here independently of the basis computation.
  detail::KernelSplit split = detail::kernel_split(sys.rows, sys.n);
  std::size_t d = split.complement.size();
  IntMat cols = split.complement;
  for (const IntVec& kv : split.kernel) cols.push_back(kv);
  IntMat inv = detail::unimodular_inverse(cols);  // rows: first d give beta
  auto beta_of = [&](const IntVec& v) {
    IntVec b(d, 0);
    for (std::size_t i = 0; i < d; ++i) b[i] = detail::dot_vec(inv[i], v);
    return b;
  };
  IntMat arows;
  for (const IntVec& r : sys.rows) {
    IntVec rr(d);
    for (std::size_t j = 0; j < d; ++j) rr[j] = detail::dot_vec(r, split.complement[j]);
    if (!detail::is_zero_vec(rr)) arows.push_back(rr);
  }
  IneqSystem qsys{d, arows};

  // Lineality generators must come in opposite pairs spanning the kernel.
  IntMat lin_gens, pointed_gens;
  for (const IntVec& g : basis) {
    if (detail::is_zero_vec(beta_of(g))) lin_gens.push_back(g);
    else pointed_gens.push_back(g);
  }
  for (const IntVec& g : lin_gens) {
    IntVec neg(sys.n);
    for (std::size_t i = 0; i < sys.n; ++i) neg[i] = -g[i];
    if (std::find(lin_gens.begin(), lin_gens.end(), neg) == lin_gens.end())
      return fail("lineality generator without its negative: " + vec_str(g));
  }
  if (detail::row_hnf(lin_gens) != detail::row_hnf(split.kernel))
    return fail("lineality generators do not span the lineality lattice");

  std::vector<IntVec> pointed_betas;
  for (const IntVec& g : pointed_gens) pointed_betas.push_back(beta_of(g));

  // Enumerate semigroup points of the box and their quotient images.
  std::set<IntVec> box_betas;
  std::vector<IntVec> box_points;
  IntVec v(sys.n, Int(-box));
  for (;;) {
    if (semigroup_member(sys, v)) {
      box_points.push_back(v);
      box_betas.insert(beta_of(v));
    }
    std::size_t j = 0;
    for (; j < sys.n; ++j) {
      if (v[j] < box) {
        ++v[j];
        break;
      }
      v[j] = -box;
    }
    if (j == sys.n) break;
  }

  // (b) every box point decomposes: its quotient image must be a nonnegative
  // combination of the pointed generators' images (the lineality part then
  // follows from the +- pairs).
  std::map<IntVec, bool> memo;
  std::function<bool(const IntVec&)> decomposable = [&](const IntVec& b) -> bool {
    if (detail::is_zero_vec(b)) return true;
    auto it = memo.find(b);
    if (it != memo.end()) return it->second;
    memo[b] = false;  // guard against revisiting while unresolved
    bool ok = false;
    for (const IntVec& g : pointed_betas) {
      IntVec rest(d);
      for (std::size_t j = 0; j < d; ++j) rest[j] = b[j] - g[j];
      if (!semigroup_member(qsys, rest)) continue;
      if (decomposable(rest)) {
        ok = true;
        break;
      }
    }
    memo[b] = ok;
    return ok;
  };
  for (const IntVec& p : box_points)
    if (!decomposable(beta_of(p)))
      return fail("box point not generated: " + vec_str(p));

  // (c) pointed minimality within the box, in the quotient.
  for (const IntVec& b : pointed_betas) {
    for (const IntVec& u : box_betas) {
      if (detail::is_zero_vec(u)) continue;
      IntVec rest(d);
      for (std::size_t j = 0; j < d; ++j) rest[j] = b[j] - u[j];
      if (detail::is_zero_vec(rest)) continue;
      if (box_betas.count(rest))
        return fail("pointed generator decomposes in the quotient: " + vec_str(b));
    }
  }
  return {};
}

}  // namespace polyptych
