#ifndef HEXT_LIBRARY_HPP
#define HEXT_LIBRARY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "hext/cube.hpp"
#include "hext/fin_group.hpp"

namespace hext {

struct LibraryEntry {
  std::string name;
  GroupPtr group;
};

/// Fixed catalog of small groups (orders 1..24) used by the enumerators,
/// the random cube generator and the oracle checks.
const std::vector<LibraryEntry>& group_library();

/// Case-insensitive catalog lookup; UserError for unknown names.
GroupPtr library_group(const std::string& name);

/// All normal subgroups, by closure of conjugation-stable generated
/// subgroups; |G| <= 64.
std::vector<Subgroup> enumerate_normal_subgroups(GroupPtr g);

/// One quotient projection per normal subgroup; |G| <= 32.  Every surjection
/// factors as such a projection followed by an isomorphism, which suffices
/// for the isomorphism-invariant properties tested.
std::vector<GroupHom> enumerate_extensions_from(GroupPtr g);

/// All lattice squares G -> G/N, G -> G/M with corner G/(N*M); |G| <= 16.
std::vector<Cube> enumerate_double_extensions(GroupPtr g);

/// The n-cube of quotients of G by products of the given normal subgroups:
/// vertex S is G / prod_{i not in S} N_i, arrows the canonical projections.
Cube quotient_lattice_cube(GroupPtr g, const std::vector<Subgroup>& normals);

struct RandomCubeOptions {
  int max_top_order = 16;
  bool mutate = false;  // break surjectivity of a top arrow (negative case)
};

/// Seeded deterministic generation over the library; always an n-fold
/// extension unless mutate is set, in which case never one.
Cube random_cube(int dim, std::uint64_t seed, const RandomCubeOptions& opts = {});

struct PropertyRunReport {
  std::string property;
  long long attempted = 0;
  long long passed = 0;
  std::string first_counterexample;  // empty iff all passed
  std::uint64_t seed = 0;
};

std::vector<std::string> property_suite_ids();
bool is_property_suite(const std::string& id);

/// budget: random-case count for the sampled suites (0 = suite default);
/// exhaustive suites ignore it.  Deterministic under a fixed seed.
PropertyRunReport run_one_suite(const std::string& id, std::uint64_t seed,
                                long long budget);
std::vector<PropertyRunReport> run_property_suite(const std::vector<std::string>& ids,
                                                  std::uint64_t seed,
                                                  long long budget);

}  // namespace hext

#endif
