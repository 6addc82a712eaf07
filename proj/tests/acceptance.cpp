// Acceptance suite: runs every criterion at its stated tolerance and prints
// one pass/fail line per criterion.  Exit code 0 iff all criteria hold.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "hext/library.hpp"

using namespace hext;

namespace {

constexpr std::uint64_t kSeed = 20250810;
int failures = 0;

struct SuiteRun {
  PropertyRunReport report;
  double seconds = 0;
};

SuiteRun timed_suite(const std::string& id, long long budget = 0) {
  auto t0 = std::chrono::steady_clock::now();
  SuiteRun run{run_one_suite(id, kSeed, budget), 0};
  run.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                    .count();
  return run;
}

void line(int criterion, bool pass, const std::string& detail) {
  std::printf("%s criterion %2d: %s\n", pass ? "PASS" : "FAIL", criterion,
              detail.c_str());
  if (!pass) ++failures;
}

std::string counts(const PropertyRunReport& r) {
  std::string s = std::to_string(r.passed) + "/" + std::to_string(r.attempted);
  if (!r.first_counterexample.empty()) s += " [" + r.first_counterexample + "]";
  return s;
}

bool clean(const PropertyRunReport& r) {
  return r.attempted > 0 && r.passed == r.attempted;
}

char buf[512];

}  // namespace

int main() {
  // 1. Oracle soundness: H0 = Z and H1 = abelianization for every library
  //    group of order <= 24, under 60 s.
  {
    SuiteRun r = timed_suite("oracle-h0-h1");
    bool pass = clean(r.report) && r.seconds < 60.0;
    std::snprintf(buf, sizeof buf, "oracle H0/H1 on %lld library groups, %.1fs (limit 60s): %s",
                  r.report.attempted, r.seconds, counts(r.report).c_str());
    line(1, pass, buf);
  }

  // 2. Schur multiplier oracle values, exact elementary divisors, under 5 min.
  {
    SuiteRun r = timed_suite("oracle-schur");
    bool pass = clean(r.report) && r.seconds < 300.0;
    std::snprintf(buf, sizeof buf, "Schur multipliers (Zm, Klein, Z2^3, Z3xZ3, S3, D4, Q8, A4), %.1fs (limit 300s): %s",
                  r.seconds, counts(r.report).c_str());
    line(2, pass, buf);
  }

  // 3. Central-extension equivalence over the full enumeration (>= 100 cases).
  {
    SuiteRun r = timed_suite("central-equivalence");
    bool pass = clean(r.report) && r.report.attempted >= 100;
    std::snprintf(buf, sizeof buf, "categorical centrality == K[f] in Z(A) on %s quotient projections",
                  counts(r.report).c_str());
    line(3, pass, buf);
  }

  // 4. Double-centrality equivalence and bracket agreement on every
  //    enumerated double extension with top vertex of order <= 16.
  {
    SuiteRun r = timed_suite("double-central-equivalence");
    bool pass = clean(r.report);
    std::snprintf(buf, sizeof buf, "Janelidze == categorical and explicit == categorical brackets on %s double extensions",
                  counts(r.report).c_str());
    line(4, pass, buf);
  }

  // 5. Symmetry suites over >= 1000 seeded random 2- and 3-cubes including
  //    mutated negatives.
  {
    SuiteRun r2 = timed_suite("symmetry-n2", 600);
    SuiteRun r3 = timed_suite("symmetry-n3", 400);
    long long total = r2.report.attempted + r3.report.attempted;
    bool pass = clean(r2.report) && clean(r3.report) && total >= 1000;
    std::snprintf(buf, sizeof buf, "delta/double/bracket symmetry on %lld cubes (n2 %s, n3 %s)",
                  total, counts(r2.report).c_str(), counts(r3.report).c_str());
    line(5, pass, buf);
  }

  // 6. E^1 axiom suite on >= 500 sampled configurations.
  {
    SuiteRun r = timed_suite("e1-axioms", 600);
    bool pass = clean(r.report) && r.report.attempted >= 500;
    std::snprintf(buf, sizeof buf, "split/composition/cancellation/pullback/kernel/short-five on %s configurations",
                  counts(r.report).c_str());
    line(6, pass, buf);
  }

  // 7. Rotation lemma on >= 200 squares of surjections.
  {
    SuiteRun r = timed_suite("rotation-lemma", 300);
    bool pass = clean(r.report) && r.report.attempted >= 200;
    std::snprintf(buf, sizeof buf, "double extension <=> induced kernel map surjective on %s squares",
                  counts(r.report).c_str());
    line(7, pass, buf);
  }

  // 8. rho/delta algebra: the s_j s_i identity exhaustively for i < j <= 6
  //    and the shift-commutation identities on >= 200 random 3-cubes.
  {
    SuiteRun rs = timed_suite("shift-identity");
    SuiteRun rc = timed_suite("shift-commutes", 220);
    bool pass = clean(rs.report) && clean(rc.report) && rc.report.attempted >= 200;
    std::snprintf(buf, sizeof buf, "s-identity %s pairs exhaustive, shift-commutes %s 3-cubes",
                  counts(rs.report).c_str(), counts(rc.report).c_str());
    line(8, pass, buf);
  }

  // 9. Hopf dual path for every enumerated surjection with domain of order
  //    <= 16 and both data (ab, ab-mod:2).
  {
    SuiteRun r = timed_suite("hopf-dual-path");
    bool pass = clean(r.report);
    std::snprintf(buf, sizeof buf, "trivialization kernel == Hopf quotient on %s (surjection, datum) pairs",
                  counts(r.report).c_str());
    line(9, pass, buf);
  }

  // 10. Universality of the centralization over exhaustive normal-subgroup
  //     enumeration.
  {
    SuiteRun r = timed_suite("centralize-universal");
    bool pass = clean(r.report);
    std::snprintf(buf, sizeof buf, "[K[f],A] minimal among central-quotient kernels on %s surjections",
                  counts(r.report).c_str());
    line(10, pass, buf);
  }

  // 11. trivial => normal => central chain and the strongly-Birkhoff square
  //     property for every sampled extension and both data.
  {
    SuiteRun rc = timed_suite("chain-trivial-normal-central");
    SuiteRun rb = timed_suite("strongly-birkhoff");
    bool pass = clean(rc.report) && clean(rb.report);
    std::snprintf(buf, sizeof buf, "status chain %s, strongly-Birkhoff squares %s",
                  counts(rc.report).c_str(), counts(rb.report).c_str());
    line(11, pass, buf);
  }

  if (failures == 0)
    std::printf("acceptance: all 11 criteria passed\n");
  else
    std::printf("acceptance: %d criterion(s) FAILED\n", failures);
  return failures == 0 ? 0 : 1;
}
