#ifndef HEXT_PARSE_HPP
#define HEXT_PARSE_HPP

#include <string>

#include <json.hpp>

#include "hext/cube.hpp"
#include "hext/fin_group.hpp"

namespace hext {

/// Group-spec grammar (case-insensitive library names):
///   spec    := product
///   product := atom ('x' atom)*
///   atom    := 'Z' INT | 'perm' INT ':' gens | 'table' JSONARRAY | NAME
///   gens    := cycles (',' cycles)* with cycles := '(' INT+ ')'+
/// Cycles need not be disjoint; they compose right to left.
GroupPtr parse_group(const std::string& text);

/// Cube documents:
/// {
///   "dim": n,
///   "vertices": {"{0,1}": <spec>, ...},      one entry per subset
///   "normals": {"N": [element ids...]},       subgroups of the top vertex
///   "arrows": {"{0,1}->{1}": [...]},          optional explicit maps
/// }
/// A vertex <spec> is a group-spec string, "top", "top / N0*N1...", or an
/// object {"table": [[...]], "label": "..."}.  Arrows between quotients of
/// the top default to the canonical projections; explicit maps are either a
/// full image array or a {"gen-id": image-id} object closed multiplicatively.
Cube parse_cube_document(const nlohmann::json& doc);
Cube load_cube_file(const std::string& path);

nlohmann::json cube_to_document(const Cube& c);

/// Sorted "{i,j}" form of a subset mask.
std::string subset_string(Mask s);
Mask parse_subset(const std::string& text);

/// Generators (deterministic greedy minimal set) and order of a subgroup.
nlohmann::json subgroup_json(const Subgroup& s);

}  // namespace hext

#endif
