#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "hext/homology.hpp"
#include "hext/library.hpp"

using namespace hext;

namespace {

// Minor determinant by cofactor expansion; only used on tiny matrices.
long long det(const MatZ& m, const std::vector<int>& rows,
              const std::vector<int>& cols) {
  size_t k = rows.size();
  if (k == 1) return m.at(rows[0], cols[0]);
  long long s = 0;
  for (size_t i = 0; i < k; ++i) {
    std::vector<int> sub_rows(rows.begin() + 1, rows.end());
    std::vector<int> sub_cols;
    for (size_t j = 0; j < k; ++j)
      if (j != i) sub_cols.push_back(cols[j]);
    long long minor = det(m, sub_rows, sub_cols);
    s += ((i % 2 == 0) ? 1 : -1) * m.at(rows[0], cols[i]) * minor;
  }
  return s;
}

void combinations(int n, int k, std::vector<std::vector<int>>& out) {
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  for (;;) {
    out.push_back(idx);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// gcd of all k x k minors: the determinant-divisor oracle for the first k
// elementary divisors.
long long minor_gcd(const MatZ& m, int k) {
  std::vector<std::vector<int>> rsel, csel;
  combinations(m.rows, k, rsel);
  combinations(m.cols, k, csel);
  long long g = 0;
  for (const auto& r : rsel)
    for (const auto& c : csel) g = std::gcd(g, det(m, r, c));
  return g < 0 ? -g : g;
}

}  // namespace

TEST_CASE("snf on fixed matrices") {
  MatZ id3(3, 3);
  for (int i = 0; i < 3; ++i) id3.at(i, i) = 1;
  SnfResult r = smith_normal_form(id3);
  CHECK(r.divisors == std::vector<long long>{1, 1, 1});
  CHECK(r.rank == 3);

  MatZ d(2, 2);
  d.at(0, 0) = 2;
  d.at(1, 1) = 4;
  CHECK(smith_normal_form(d).divisors == std::vector<long long>{2, 4});

  MatZ m(2, 2);
  m.at(0, 0) = 2;
  m.at(0, 1) = 1;
  m.at(1, 1) = 2;
  CHECK(smith_normal_form(m).divisors == std::vector<long long>{1, 4});

  MatZ zero(3, 2);
  CHECK(smith_normal_form(zero).rank == 0);
}

TEST_CASE("snf against the determinant-divisor oracle") {
  Rng rng(20250810);
  for (int t = 0; t < 60; ++t) {
    int rows = 1 + static_cast<int>(rng.below(3));
    int cols = 1 + static_cast<int>(rng.below(3));
    MatZ m(rows, cols);
    for (auto& v : m.a) v = static_cast<long long>(rng.below(11)) - 5;
    SnfResult r = smith_normal_form(m);
    long long prod = 1;
    for (int k = 1; k <= std::min(rows, cols); ++k) {
      long long g = minor_gcd(m, k);
      if (k <= r.rank) {
        prod *= r.divisors[k - 1];
        CHECK(prod == g);
      } else {
        CHECK(g == 0);
      }
    }
  }
}

TEST_CASE("snf production matches the serial reference") {
  Rng rng(77);
  for (int t = 0; t < 40; ++t) {
    int rows = 1 + static_cast<int>(rng.below(8));
    int cols = 1 + static_cast<int>(rng.below(8));
    MatZ m(rows, cols);
    for (auto& v : m.a) v = static_cast<long long>(rng.below(41)) - 20;
    SnfResult prod = smith_normal_form(m);
    SnfResult ref = reference::smith_normal_form(m);
    CHECK(prod.divisors == ref.divisors);
    CHECK(prod.rank == ref.rank);
  }
}

TEST_CASE("snf bigint paths") {
  // Large entries overflow the int64 pass; with the fallback disabled the
  // overflow surfaces, and even with it the divisors exceed int64 here.
  MatZ m(2, 2);
  m.at(0, 0) = (1LL << 62);
  m.at(0, 1) = 1;
  m.at(1, 0) = 1;
  m.at(1, 1) = (1LL << 62);
  SnfOptions no_fallback;
  no_fallback.allow_bigint_fallback = false;
  CHECK_THROWS_AS(smith_normal_form(m, no_fallback), OverflowDetected);
  CHECK_THROWS_AS(smith_normal_form(m), OverflowDetected);

  // Forced bigint agrees with the int64 pass on ordinary input.
  Rng rng(99);
  for (int t = 0; t < 10; ++t) {
    MatZ s(3, 4);
    for (auto& v : s.a) v = static_cast<long long>(rng.below(9)) - 4;
    SnfOptions force;
    force.force_bigint = true;
    CHECK(smith_normal_form(s, force).divisors == smith_normal_form(s).divisors);
  }
}

TEST_CASE("matmul against reference") {
  Rng rng(5);
  for (int t = 0; t < 20; ++t) {
    int a = 1 + static_cast<int>(rng.below(6));
    int b = 1 + static_cast<int>(rng.below(6));
    int c = 1 + static_cast<int>(rng.below(6));
    MatZ x(a, b), y(b, c);
    for (auto& v : x.a) v = static_cast<long long>(rng.below(9)) - 4;
    for (auto& v : y.a) v = static_cast<long long>(rng.below(9)) - 4;
    CHECK(matmul(x, y).a == reference::matmul(x, y).a);
  }
}

TEST_CASE("bar complex ranks and d.d = 0") {
  ChainComplexZ triv = bar_complex(FinGroup::trivial(), 3);
  CHECK(triv.ranks == std::vector<long long>{1, 0, 0, 0});

  ChainComplexZ z2 = bar_complex(cyclic_group(2), 3);
  CHECK(z2.ranks == std::vector<long long>{1, 1, 1, 1});

  ChainComplexZ s3 = bar_complex(library_group("S3"), 3);
  CHECK(s3.ranks == std::vector<long long>{1, 5, 25, 125});

  // construction already verifies d.d = 0; check once more explicitly
  CHECK(is_zero(matmul(s3.boundaries[2], s3.boundaries[3])));
}

TEST_CASE("bar boundary parallel path matches the reference") {
  for (const char* name : {"Z4", "S3", "D4", "Z2xZ4"}) {
    GroupPtr g = library_group(name);
    for (int j = 1; j <= 3; ++j)
      CHECK(bar_boundary(g, j).a == reference::bar_boundary(g, j).a);
  }
}

TEST_CASE("homology of small groups") {
  AbelianInvariants h0 = integral_homology(library_group("S3"), 0);
  CHECK(h0.free_rank == 1);
  CHECK(h0.divisors.empty());

  AbelianInvariants h1 = integral_homology(library_group("D4"), 1);
  CHECK(h1.free_rank == 0);
  CHECK(h1.divisors == std::vector<long long>{2, 2});

  CHECK(integral_homology(cyclic_group(6), 2).divisors.empty());
  CHECK(integral_homology(library_group("Klein"), 2).divisors ==
        std::vector<long long>{2});
  CHECK(integral_homology(library_group("S3"), 2).divisors.empty());
  CHECK(integral_homology(library_group("D4"), 2).divisors ==
        std::vector<long long>{2});

  // Degree 3: H3(Z2) = Z2; H3(Klein) has invariants (2,2,2).
  AbelianInvariants h3 = integral_homology(cyclic_group(2), 3);
  CHECK(h3.free_rank == 0);
  CHECK(h3.divisors == std::vector<long long>{2});
  CHECK(integral_homology(library_group("Klein"), 3).divisors ==
        std::vector<long long>{2, 2, 2});
}

TEST_CASE("homology caps and budgets") {
  CHECK_THROWS_AS(integral_homology(cyclic_group(2), 4), BudgetExceeded);
  long long saved = limits().entry_budget;
  limits().entry_budget = 1000;
  CHECK_THROWS_AS(integral_homology(library_group("Z4xZ4"), 2), BudgetExceeded);
  limits().entry_budget = saved;
}

TEST_CASE("abelianization invariants cross-check") {
  for (const auto& e : group_library()) {
    if (e.group->order() > 12) continue;
    AbelianInvariants ab = abelianization_invariants(e.group);
    AbelianInvariants h1 = integral_homology(e.group, 1);
    CHECK(ab == h1);
  }
}
