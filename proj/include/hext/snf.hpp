#ifndef HEXT_SNF_HPP
#define HEXT_SNF_HPP

#include <cstdint>
#include <vector>

#include "hext/errors.hpp"

namespace hext {

/// Dense integer matrix, row-major int64.
struct MatZ {
  int rows = 0;
  int cols = 0;
  std::vector<long long> a;

  MatZ() = default;
  MatZ(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}
  long long& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  long long at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
};

struct SnfOptions {
  bool allow_bigint_fallback = true;  // retry with arbitrary precision on overflow
  bool force_bigint = false;          // skip the int64 pass entirely
};

struct SnfResult {
  std::vector<long long> divisors;  // d1 | d2 | ... | dr, including any 1s
  int rank = 0;
};

/// Smith normal form via smallest-pivot elimination with full reduction.
/// int64 with overflow checks; falls back to arbitrary-precision integers
/// unless disabled (then OverflowDetected propagates).  Row/column updates
/// run under OpenMP when available.
SnfResult smith_normal_form(const MatZ& m, const SnfOptions& opts = {});

/// a * b, OpenMP over rows of the result.
MatZ matmul(const MatZ& a, const MatZ& b);

bool is_zero(const MatZ& m);

}  // namespace hext

#endif
