#ifndef HEXT_HOMOLOGY_HPP
#define HEXT_HOMOLOGY_HPP

#include <vector>

#include "hext/fin_group.hpp"
#include "hext/snf.hpp"

namespace hext {

/// Chain complex of free Z-modules; boundaries[k] is d_k: C_k -> C_{k-1}
/// (rows = rank C_{k-1}, cols = rank C_k).  boundaries[0] is the empty map.
struct ChainComplexZ {
  std::vector<long long> ranks;
  std::vector<MatZ> boundaries;
};

/// Finite abelian group in canonical form: Z^free_rank + sum Z/d_i with
/// d1 | d2 | ... and every d_i > 1.
struct AbelianInvariants {
  std::vector<long long> divisors;
  long long free_rank = 0;
  bool operator==(const AbelianInvariants& o) const {
    return divisors == o.divisors && free_rank == o.free_rank;
  }
};

/// Normalized bar complex with trivial integer coefficients: degree j is
/// free on j-tuples of non-identity elements, rank (|A|-1)^j.  Construction
/// verifies d.d = 0 on every adjacent pair.  Boundary assembly is
/// OpenMP-parallel over columns.
ChainComplexZ bar_complex(GroupPtr a, int top_degree);

/// Single boundary matrix d_j of the normalized bar complex.
MatZ bar_boundary(GroupPtr a, int j);

/// H_n(A; Z) via Smith normal form of the bar complex (n <= 3).
AbelianInvariants integral_homology(GroupPtr a, int degree);

/// Group-theoretic abelianization invariants of A (the independent H_1 side).
AbelianInvariants abelianization_invariants(GroupPtr a);

namespace reference {
/// Serial, independently written boundary assembly kept for testing and
/// benchmarking against the parallel path.
MatZ bar_boundary(GroupPtr a, int j);
/// Serial textbook SNF over arbitrary-precision integers, first-nonzero
/// pivoting.
SnfResult smith_normal_form(const MatZ& m);
MatZ matmul(const MatZ& a, const MatZ& b);
}  // namespace reference

}  // namespace hext

#endif
