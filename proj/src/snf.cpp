#include "hext/snf.hpp"

#include <algorithm>
#include <cstdlib>
#include <atomic>
#include <limits>
#include <type_traits>

#include <boost/multiprecision/cpp_int.hpp>

namespace hext {

namespace {

using BigInt = boost::multiprecision::cpp_int;

// Checked int64 arithmetic; throws instead of wrapping.
inline long long mulc(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowDetected("int64 multiply overflow");
  return r;
}
inline long long subc(long long a, long long b) {
  long long r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowDetected("int64 subtract overflow");
  return r;
}
inline BigInt mulc(const BigInt& a, const BigInt& b) { return a * b; }
inline BigInt subc(const BigInt& a, const BigInt& b) { return a - b; }

template <class T>
T abs_of(const T& v) {
  return v < 0 ? T(-v) : v;
}

// Elimination core shared by the int64 and bigint passes.  Smallest-nonzero
// pivot, full row/column reduction, trailing divisibility fix-up.
template <class T>
SnfResult snf_core(std::vector<T> m, int rows, int cols) {
  auto at = [&](int i, int j) -> T& { return m[static_cast<size_t>(i) * cols + j]; };
  int nmin = std::min(rows, cols);
  std::vector<long long> divisors;

  for (int t = 0; t < nmin; ++t) {
    // Locate the smallest nonzero |entry| in the trailing block.
    int pr = -1, pc = -1;
    for (int i = t; i < rows; ++i)
      for (int j = t; j < cols; ++j) {
        if (at(i, j) == 0) continue;
        if (pr < 0 || abs_of(at(i, j)) < abs_of(at(pr, pc))) {
          pr = i;
          pc = j;
        }
      }
    if (pr < 0) break;  // trailing block is zero

    for (;;) {
      if (pr != t)
        for (int j = 0; j < cols; ++j) std::swap(at(t, j), at(pr, j));
      if (pc != t)
        for (int i = 0; i < rows; ++i) std::swap(at(i, t), at(i, pc));

      // Clear the pivot column, then the pivot row.  Exceptions must not
      // escape an OpenMP region, so overflow is latched and rethrown.
      bool dirty = false;
      std::atomic<bool> overflow{false};
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (rows - t > 64 && cols - t > 16)
#endif
      for (int i = t + 1; i < rows; ++i) {
        if (at(i, t) == 0 || overflow.load(std::memory_order_relaxed)) continue;
        try {
          T q = at(i, t) / at(t, t);
          if (q != 0)
            for (int j = t; j < cols; ++j)
              at(i, j) = subc(at(i, j), mulc(q, at(t, j)));
        } catch (const OverflowDetected&) {
          overflow.store(true, std::memory_order_relaxed);
        }
      }
      if (overflow.load()) throw OverflowDetected("int64 overflow in column clear");
      for (int i = t + 1; i < rows; ++i)
        if (at(i, t) != 0) dirty = true;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (cols - t > 64 && rows - t > 16)
#endif
      for (int j = t + 1; j < cols; ++j) {
        if (at(t, j) == 0 || overflow.load(std::memory_order_relaxed)) continue;
        try {
          T q = at(t, j) / at(t, t);
          if (q != 0)
            for (int i = t; i < rows; ++i)
              at(i, j) = subc(at(i, j), mulc(q, at(i, t)));
        } catch (const OverflowDetected&) {
          overflow.store(true, std::memory_order_relaxed);
        }
      }
      if (overflow.load()) throw OverflowDetected("int64 overflow in row clear");
      for (int j = t + 1; j < cols; ++j)
        if (at(t, j) != 0) dirty = true;

      if (dirty) {
        // Residues smaller than the pivot appeared; pick the new minimum.
        pr = t;
        pc = t;
        for (int i = t; i < rows; ++i)
          for (int j = t; j < cols; ++j) {
            if (at(i, j) == 0) continue;
            if (abs_of(at(i, j)) < abs_of(at(pr, pc))) {
              pr = i;
              pc = j;
            }
          }
        continue;
      }

      // Pivot alone in its row and column; enforce divisibility of the rest.
      int br = -1;
      for (int i = t + 1; i < rows && br < 0; ++i)
        for (int j = t + 1; j < cols; ++j)
          if (at(i, j) % at(t, t) != 0) {
            br = i;
            break;
          }
      if (br < 0) break;
      for (int j = 0; j < cols; ++j) at(t, j) = at(t, j) + at(br, j);
      pr = t;
      pc = t;
    }

    if (at(t, t) < 0)
      for (int j = t; j < cols; ++j) at(t, j) = -at(t, j);

    T d = at(t, t);
    if constexpr (std::is_same_v<T, long long>) {
      divisors.push_back(d);
    } else {
      if (d > BigInt(std::numeric_limits<long long>::max()))
        throw OverflowDetected("elementary divisor exceeds int64");
      divisors.push_back(static_cast<long long>(d));
    }
  }

  SnfResult res;
  res.divisors = std::move(divisors);
  res.rank = static_cast<int>(res.divisors.size());
  return res;
}

}  // namespace

SnfResult smith_normal_form(const MatZ& m, const SnfOptions& opts) {
  if (!opts.force_bigint) {
    try {
      return snf_core<long long>(m.a, m.rows, m.cols);
    } catch (const OverflowDetected&) {
      if (!opts.allow_bigint_fallback) throw;
    }
  }
  std::vector<BigInt> big(m.a.begin(), m.a.end());
  return snf_core<BigInt>(std::move(big), m.rows, m.cols);
}

MatZ matmul(const MatZ& a, const MatZ& b) {
  if (a.cols != b.rows) throw ShapeMismatch("matmul shape mismatch");
  MatZ c(a.rows, b.cols);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (a.rows > 8)
#endif
  for (int i = 0; i < a.rows; ++i)
    for (int k = 0; k < a.cols; ++k) {
      long long v = a.at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < b.cols; ++j) c.at(i, j) += v * b.at(k, j);
    }
  return c;
}

bool is_zero(const MatZ& m) {
  return std::all_of(m.a.begin(), m.a.end(), [](long long v) { return v == 0; });
}

}  // namespace hext
