#include "hext/homology.hpp"

#include <algorithm>
#include <limits>

#include <boost/multiprecision/cpp_int.hpp>

namespace hext {

namespace {

long long pow_ll(long long b, int e) {
  long long r = 1;
  while (e-- > 0) {
    if (b != 0 && r > limits().entry_budget / b + 1) return limits().entry_budget + 1;
    r *= b;
  }
  return r;
}

// Non-identity element for digit d in 0..|A|-2 and back.
inline int digit_to_elem(int d, int e) { return d < e ? d : d + 1; }
inline int elem_to_digit(int x, int e) { return x < e ? x : x - 1; }

// Decode a degree-j basis index into its tuple of non-identity elements.
void decode_tuple(long long idx, int j, int base, int e, std::vector<int>& out) {
  for (int i = j - 1; i >= 0; --i) {
    out[i] = digit_to_elem(static_cast<int>(idx % base), e);
    idx /= base;
  }
}

long long encode_tuple(const std::vector<int>& t, int base, int e) {
  long long idx = 0;
  for (int v : t) idx = idx * base + elem_to_digit(v, e);
  return idx;
}

// One column of d_j: alternating faces; faces producing an identity entry
// are dropped (normalization).
void boundary_column(const FinGroup& g, int j, long long col,
                     std::vector<std::pair<long long, long long>>& out) {
  int base = g.order() - 1;
  int e = g.identity();
  std::vector<int> t(j), face(j - 1);
  decode_tuple(col, j, base, e, t);
  for (int k = 0; k <= j; ++k) {
    long long sign = (k % 2 == 0) ? 1 : -1;
    if (k == 0) {
      for (int i = 0; i + 1 < j; ++i) face[i] = t[i + 1];
    } else if (k == j) {
      for (int i = 0; i + 1 < j; ++i) face[i] = t[i];
    } else {
      int prod = g.mul(t[k - 1], t[k]);
      if (prod == e) continue;  // degenerate face
      for (int i = 0; i + 1 < j; ++i)
        face[i] = i < k - 1 ? t[i] : (i == k - 1 ? prod : t[i + 1]);
    }
    out.emplace_back(encode_tuple(face, base, e), sign);
  }
}

MatZ bar_boundary_impl(const FinGroup& g, int j, bool parallel) {
  int base = g.order() - 1;
  long long rows = pow_ll(base, j - 1);
  long long cols = pow_ll(base, j);
  if (rows * std::max(cols, 1LL) > limits().entry_budget)
    throw BudgetExceeded("bar boundary exceeds entry budget");
  MatZ d(static_cast<int>(rows), static_cast<int>(cols));
  if (cols == 0) return d;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (parallel && cols > 256)
#endif
  for (long long c = 0; c < cols; ++c) {
    std::vector<std::pair<long long, long long>> entries;
    boundary_column(g, j, c, entries);
    for (auto& [r, s] : entries) d.at(static_cast<int>(r), static_cast<int>(c)) += s;
  }
  return d;
}

}  // namespace

MatZ bar_boundary(GroupPtr a, int j) {
  if (j < 1) throw ValidationError("boundary degree must be >= 1");
  return bar_boundary_impl(*a, j, true);
}

ChainComplexZ bar_complex(GroupPtr a, int top_degree) {
  if (top_degree < 0) throw ValidationError("negative degree");
  int base = a->order() - 1;
  ChainComplexZ cx;
  for (int j = 0; j <= top_degree; ++j) {
    long long r = pow_ll(base, j);
    if (r > limits().entry_budget) throw BudgetExceeded("bar rank exceeds budget");
    cx.ranks.push_back(r);
  }
  cx.boundaries.emplace_back(0, static_cast<int>(cx.ranks[0]));
  for (int j = 1; j <= top_degree; ++j) {
    cx.boundaries.push_back(bar_boundary(a, j));
    if (j >= 2) {
      MatZ sq = matmul(cx.boundaries[j - 1], cx.boundaries[j]);
      if (!is_zero(sq)) throw ConsistencyError("bar complex: d.d != 0");
    }
  }
  return cx;
}

AbelianInvariants integral_homology(GroupPtr a, int degree) {
  if (degree < 0) throw ValidationError("negative degree");
  if (degree > 3) throw BudgetExceeded("homology degree capped at 3");
  ChainComplexZ cx = bar_complex(a, degree + 1);
  // C_n = ker(d_n) + free complement; H_n = Z^(null(d_n) - rank(d_{n+1}))
  // + torsion from the elementary divisors of d_{n+1}.
  long long rank_dn = 0;
  if (degree >= 1) rank_dn = smith_normal_form(cx.boundaries[degree]).rank;
  SnfResult up = smith_normal_form(cx.boundaries[degree + 1]);
  AbelianInvariants h;
  h.free_rank = cx.ranks[degree] - rank_dn - up.rank;
  for (long long d : up.divisors)
    if (d > 1) h.divisors.push_back(d);
  return h;
}

AbelianInvariants abelianization_invariants(GroupPtr a) {
  GroupPtr ab = quotient(a, derived_subgroup(a)).group;
  AbelianInvariants inv;
  inv.divisors = abelian_divisors(ab);
  inv.free_rank = 0;
  return inv;
}

namespace reference {

MatZ bar_boundary(GroupPtr a, int j) {
  const FinGroup& g = *a;
  int base = g.order() - 1;
  int e = g.identity();
  long long rows = 1, cols = 1;
  for (int i = 0; i < j - 1; ++i) rows *= base;
  for (int i = 0; i < j; ++i) cols *= base;
  if (rows * std::max(cols, 1LL) > limits().entry_budget)
    throw BudgetExceeded("bar boundary exceeds entry budget");
  MatZ d(static_cast<int>(rows), static_cast<int>(cols));
  if (cols == 0 || base == 0) return d;

  // Walk tuples as explicit element vectors instead of encoded indices.
  std::vector<int> t(j, digit_to_elem(0, e));
  std::vector<int> digit(j, 0);
  for (long long c = 0; c < cols; ++c) {
    for (int k = 0; k <= j; ++k) {
      std::vector<int> face;
      face.reserve(j - 1);
      bool degenerate = false;
      for (int i = 0; i < j; ++i) {
        if (k == 0 && i == 0) continue;
        if (k == j && i == j - 1) continue;
        if (k > 0 && k < j && i == k - 1) {
          int prod = g.mul(t[k - 1], t[k]);
          if (prod == e) {
            degenerate = true;
            break;
          }
          face.push_back(prod);
          continue;
        }
        if (k > 0 && k < j && i == k) continue;
        face.push_back(t[i]);
      }
      if (degenerate) continue;
      long long r = 0;
      for (int v : face) r = r * base + elem_to_digit(v, e);
      d.at(static_cast<int>(r), static_cast<int>(c)) += (k % 2 == 0) ? 1 : -1;
    }
    for (int i = j - 1; i >= 0; --i) {  // odometer, last digit fastest
      if (digit[i] + 1 < base) {
        ++digit[i];
        t[i] = digit_to_elem(digit[i], e);
        break;
      }
      digit[i] = 0;
      t[i] = digit_to_elem(0, e);
    }
  }
  return d;
}

SnfResult smith_normal_form(const MatZ& m) {
  using Big = boost::multiprecision::cpp_int;
  std::vector<Big> a(m.a.begin(), m.a.end());
  int rows = m.rows, cols = m.cols;
  auto at = [&](int i, int j) -> Big& { return a[static_cast<size_t>(i) * cols + j]; };

  // Serial smallest-pivot elimination over arbitrary-precision integers.
  // Every pass either finishes the pivot position or strictly shrinks the
  // smallest nonzero absolute value of the trailing block.
  auto select_pivot = [&](int t) {
    int pr = -1, pc = -1;
    for (int i = t; i < rows; ++i)
      for (int j = t; j < cols; ++j) {
        if (at(i, j) == 0) continue;
        if (pr < 0 || abs(at(i, j)) < abs(at(pr, pc))) {
          pr = i;
          pc = j;
        }
      }
    if (pr < 0) return false;
    if (pr != t)
      for (int j = 0; j < cols; ++j) std::swap(at(t, j), at(pr, j));
    if (pc != t)
      for (int i = 0; i < rows; ++i) std::swap(at(i, t), at(i, pc));
    return true;
  };

  SnfResult res;
  int nmin = std::min(rows, cols);
  for (int t = 0; t < nmin; ++t) {
    if (!select_pivot(t)) break;
    for (;;) {
      bool residue = false;
      for (int i = t + 1; i < rows; ++i) {
        if (at(i, t) == 0) continue;
        Big q = at(i, t) / at(t, t);
        if (q != 0)
          for (int j = t; j < cols; ++j) at(i, j) -= q * at(t, j);
        if (at(i, t) != 0) residue = true;
      }
      for (int j = t + 1; j < cols; ++j) {
        if (at(t, j) == 0) continue;
        Big q = at(t, j) / at(t, t);
        if (q != 0)
          for (int i = t; i < rows; ++i) at(i, j) -= q * at(i, t);
        if (at(t, j) != 0) residue = true;
      }
      if (residue) {  // leftover remainders are smaller than the pivot
        select_pivot(t);
        continue;
      }
      int br = -1;
      for (int i = t + 1; i < rows && br < 0; ++i)
        for (int j = t + 1; j < cols; ++j)
          if (at(i, j) % at(t, t) != 0) {
            br = i;
            break;
          }
      if (br < 0) break;
      // Pull the offending row up and reduce it once against the pivot;
      // the non-divisible column leaves a remainder below the pivot.
      for (int j = t + 1; j < cols; ++j) at(t, j) += at(br, j);
      for (int j = t + 1; j < cols; ++j) {
        if (at(t, j) == 0) continue;
        Big q = at(t, j) / at(t, t);
        if (q != 0)
          for (int i = t; i < rows; ++i) at(i, j) -= q * at(i, t);
      }
      select_pivot(t);
    }
    if (at(t, t) < 0)
      for (int j = t; j < cols; ++j) at(t, j) = -at(t, j);
    if (at(t, t) > Big(std::numeric_limits<long long>::max()))
      throw OverflowDetected("elementary divisor exceeds int64");
    res.divisors.push_back(static_cast<long long>(at(t, t)));
  }
  res.rank = static_cast<int>(res.divisors.size());
  return res;
}

MatZ matmul(const MatZ& a, const MatZ& b) {
  if (a.cols != b.rows) throw ShapeMismatch("matmul shape mismatch");
  MatZ c(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < b.cols; ++j) {
      long long s = 0;
      for (int k = 0; k < a.cols; ++k) s += a.at(i, k) * b.at(k, j);
      c.at(i, j) = s;
    }
  return c;
}

}  // namespace reference

}  // namespace hext
