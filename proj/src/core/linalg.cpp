#include "linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace hamgraph {

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q, r;
  BigInt::divmod(a, b, q, r);
  if (!r.is_zero() && (r.is_negative() != b.is_negative())) q -= BigInt(1);
  return q;
}

IntMat hnf_rows(IntMat rows) {
  if (rows.empty()) return {};
  const size_t cols = rows[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows.size(); ++c) {
    // gcd-eliminate so at most one row in [r..) is non-zero at column c
    while (true) {
      size_t best = rows.size();
      for (size_t i = r; i < rows.size(); ++i) {
        if (rows[i][c].is_zero()) continue;
        if (best == rows.size() || rows[i][c].abs() < rows[best][c].abs()) best = i;
      }
      if (best == rows.size()) break;  // column is zero below r
      bool others = false;
      for (size_t i = r; i < rows.size(); ++i) {
        if (i == best || rows[i][c].is_zero()) continue;
        others = true;
        BigInt q = floor_div(rows[i][c], rows[best][c]);
        if (!q.is_zero())
          for (size_t j = 0; j < cols; ++j) rows[i][j] -= q * rows[best][j];
        // remainder now has |entry| < |pivot| (or zero)
      }
      if (!others) {
        std::swap(rows[r], rows[best]);
        if (rows[r][c].is_negative())
          for (size_t j = 0; j < cols; ++j) rows[r][j] = -rows[r][j];
        // reduce the rows already placed above
        for (size_t i = 0; i < r; ++i) {
          BigInt q = floor_div(rows[i][c], rows[r][c]);
          if (!q.is_zero())
            for (size_t j = 0; j < cols; ++j) rows[i][j] -= q * rows[r][j];
        }
        ++r;
        break;
      }
    }
  }
  rows.resize(r);
  return rows;
}

std::vector<size_t> hnf_pivots(const IntMat& hnf) {
  std::vector<size_t> piv;
  piv.reserve(hnf.size());
  for (const auto& row : hnf) {
    size_t c = 0;
    while (c < row.size() && row[c].is_zero()) ++c;
    piv.push_back(c);
  }
  return piv;
}

IntVec reduce_mod_lattice(IntVec v, const IntMat& hnf) {
  auto piv = hnf_pivots(hnf);
  for (size_t k = 0; k < hnf.size(); ++k) {
    size_t c = piv[k];
    if (c >= v.size()) continue;
    BigInt q = floor_div(v[c], hnf[k][c]);
    if (!q.is_zero())
      for (size_t j = 0; j < v.size(); ++j) v[j] -= q * hnf[k][j];
  }
  return v;
}

IntSolve solve_integer(const IntMat& A, const IntVec& b) {
  IntSolve out;
  const size_t m = A.size();
  const size_t n = m ? A[0].size() : 0;
  if (n == 0) {
    for (size_t i = 0; i < m; ++i)
      if (!b[i].is_zero()) return out;
    out.ok = true;
    return out;
  }
  // rows of M = columns of A, augmented with the identity to track the
  // unimodular transform
  IntMat M(n, IntVec(m + n, BigInt(0)));
  for (size_t j = 0; j < n; ++j) {
    for (size_t i = 0; i < m; ++i) M[j][i] = A[i][j];
    M[j][m + j] = BigInt(1);
  }
  // HNF restricted to the first m columns; rows whose leading m columns
  // vanish span the kernel
  size_t r = 0;
  const size_t cols = m + n;
  for (size_t c = 0; c < m && r < M.size(); ++c) {
    while (true) {
      size_t best = M.size();
      for (size_t i = r; i < M.size(); ++i) {
        if (M[i][c].is_zero()) continue;
        if (best == M.size() || M[i][c].abs() < M[best][c].abs()) best = i;
      }
      if (best == M.size()) break;
      bool others = false;
      for (size_t i = r; i < M.size(); ++i) {
        if (i == best || M[i][c].is_zero()) continue;
        others = true;
        BigInt q = floor_div(M[i][c], M[best][c]);
        if (!q.is_zero())
          for (size_t j = 0; j < cols; ++j) M[i][j] -= q * M[best][j];
      }
      if (!others) {
        std::swap(M[r], M[best]);
        if (M[r][c].is_negative())
          for (size_t j = 0; j < cols; ++j) M[r][j] = -M[r][j];
        ++r;
        break;
      }
    }
  }
  // forward-substitute b against the echelon rows
  IntVec rem = b;
  IntVec coef(r, BigInt(0));
  for (size_t k = 0; k < r; ++k) {
    size_t c = 0;
    while (c < m && M[k][c].is_zero()) ++c;
    if (c == m) break;
    BigInt q, rr;
    BigInt::divmod(rem[c], M[k][c], q, rr);
    if (!rr.is_zero()) return out;  // not divisible: no integer solution
    coef[k] = q;
    if (!q.is_zero())
      for (size_t j = 0; j < m; ++j) rem[j] -= q * M[k][j];
  }
  for (size_t j = 0; j < m; ++j)
    if (!rem[j].is_zero()) return out;
  out.ok = true;
  out.x.assign(n, BigInt(0));
  for (size_t k = 0; k < r; ++k) {
    if (coef[k].is_zero()) continue;
    for (size_t j = 0; j < n; ++j) out.x[j] += coef[k] * M[k][m + j];
  }
  for (size_t k = r; k < n; ++k) {
    IntVec kv(M[k].begin() + m, M[k].end());
    out.kernel.push_back(std::move(kv));
  }
  return out;
}

IntVec QuotientBasis::coords(const IntVec& x) const {
  IntVec z(dim, BigInt(0));
  for (size_t j = 0; j < dim; ++j)
    for (size_t c = 0; c < x.size(); ++c) z[j] += coord_rows[j][c] * x[c];
  return z;
}

IntVec QuotientBasis::section(const IntVec& z) const {
  const size_t n = section_rows.empty() ? 0 : section_rows[0].size();
  IntVec x(n, BigInt(0));
  for (size_t j = 0; j < dim; ++j)
    for (size_t c = 0; c < n; ++c) x[c] += z[j] * section_rows[j][c];
  return x;
}

QuotientBasis quotient_basis(const IntMat& relations, size_t n) {
  // Smith reduction of the relation matrix, tracking the right transform V
  // and its inverse.  In V-coordinates the lattice becomes diagonal.
  IntMat A = relations;
  const size_t m = A.size();
  IntMat V(n, IntVec(n, BigInt(0))), Vinv(n, IntVec(n, BigInt(0)));
  for (size_t i = 0; i < n; ++i) V[i][i] = Vinv[i][i] = BigInt(1);

  auto col_add = [&](size_t dst, size_t src, const BigInt& q) {
    // C_dst += q C_src on A and V; R_src -= q R_dst on Vinv
    for (size_t i = 0; i < m; ++i) A[i][dst] += q * A[i][src];
    for (size_t i = 0; i < n; ++i) V[i][dst] += q * V[i][src];
    for (size_t j = 0; j < n; ++j) Vinv[src][j] -= q * Vinv[dst][j];
  };
  auto col_swap = [&](size_t a, size_t b) {
    for (size_t i = 0; i < m; ++i) std::swap(A[i][a], A[i][b]);
    for (size_t i = 0; i < n; ++i) std::swap(V[i][a], V[i][b]);
    std::swap(Vinv[a], Vinv[b]);
  };
  auto col_neg = [&](size_t a) {
    for (size_t i = 0; i < m; ++i) A[i][a] = -A[i][a];
    for (size_t i = 0; i < n; ++i) V[i][a] = -V[i][a];
    for (size_t j = 0; j < n; ++j) Vinv[a][j] = -Vinv[a][j];
  };
  auto row_add = [&](size_t dst, size_t src, const BigInt& q) {
    for (size_t j = 0; j < n; ++j) A[dst][j] += q * A[src][j];
  };

  size_t t = 0;
  QuotientBasis out;
  std::vector<BigInt> diag;
  while (t < m && t < n) {
    // find a non-zero entry in the remaining block
    size_t pi = m, pj = n;
    for (size_t i = t; i < m; ++i)
      for (size_t j = t; j < n; ++j)
        if (!A[i][j].is_zero() && (pi == m || A[i][j].abs() < A[pi][pj].abs())) {
          pi = i;
          pj = j;
        }
    if (pi == m) break;
    if (pi != t) std::swap(A[pi], A[t]);
    if (pj != t) col_swap(pj, t);
    if (A[t][t].is_negative()) col_neg(t);
    bool dirty = false;
    for (size_t i = t + 1; i < m; ++i) {
      if (A[i][t].is_zero()) continue;
      BigInt q = floor_div(A[i][t], A[t][t]);
      if (!q.is_zero()) row_add(i, t, -q);
      if (!A[i][t].is_zero()) dirty = true;
    }
    for (size_t j = t + 1; j < n; ++j) {
      if (A[t][j].is_zero()) continue;
      BigInt q = floor_div(A[t][j], A[t][t]);
      if (!q.is_zero()) col_add(j, t, -q);
      if (!A[t][j].is_zero()) dirty = true;
    }
    if (dirty) continue;  // smaller remainders exist; repeat the pivot hunt
    diag.push_back(A[t][t]);
    ++t;
  }
  out.rank = diag.size();
  out.dim = n - out.rank;
  out.free = true;
  for (const auto& d : diag) out.free = out.free && d.is_one();
  out.coord_rows.assign(out.dim, IntVec(n, BigInt(0)));
  for (size_t j = 0; j < out.dim; ++j)
    for (size_t c = 0; c < n; ++c) out.coord_rows[j][c] = V[c][out.rank + j];
  out.section_rows.assign(out.dim, IntVec(n, BigInt(0)));
  for (size_t j = 0; j < out.dim; ++j) out.section_rows[j] = Vinv[out.rank + j];
  return out;
}

RatSolve solve_rational(RatMat A, RatVec b) {
  RatSolve out;
  const size_t m = A.size();
  const size_t n = m ? A[0].size() : 0;
  std::vector<size_t> pivot_col;
  size_t r = 0;
  for (size_t c = 0; c < n && r < m; ++c) {
    size_t sel = m;
    for (size_t i = r; i < m; ++i)
      if (!A[i][c].is_zero()) {
        sel = i;
        break;
      }
    if (sel == m) continue;
    std::swap(A[r], A[sel]);
    std::swap(b[r], b[sel]);
    Rat inv = A[r][c].inverse();
    for (size_t j = c; j < n; ++j) A[r][j] *= inv;
    b[r] *= inv;
    for (size_t i = 0; i < m; ++i) {
      if (i == r || A[i][c].is_zero()) continue;
      Rat f = A[i][c];
      for (size_t j = c; j < n; ++j) A[i][j] -= f * A[r][j];
      b[i] -= f * b[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (size_t i = r; i < m; ++i)
    if (!b[i].is_zero()) return out;  // inconsistent
  out.ok = true;
  out.x.assign(n, Rat(0));
  for (size_t k = 0; k < r; ++k) out.x[pivot_col[k]] = b[k];
  std::vector<bool> is_pivot(n, false);
  for (size_t c : pivot_col) is_pivot[c] = true;
  for (size_t c = 0; c < n; ++c) {
    if (is_pivot[c]) continue;
    RatVec kv(n, Rat(0));
    kv[c] = Rat(1);
    for (size_t k = 0; k < r; ++k) kv[pivot_col[k]] = -A[k][c];
    out.kernel.push_back(std::move(kv));
  }
  return out;
}

}  // namespace hamgraph
