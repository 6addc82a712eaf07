#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hext/homology.hpp"
#include "hext/hopf.hpp"
#include "hext/library.hpp"
#include "hext/parse.hpp"
#include "hext/version.hpp"

using nlohmann::json;

namespace {

// Exit codes: 1 parse/validation, 2 property/agreement failure, 3 resource caps.
constexpr int kExitUser = 1;
constexpr int kExitDisagree = 2;
constexpr int kExitCap = 3;

const hext::BirkhoffDatum& datum_by_name(const std::string& name,
                                         hext::BirkhoffDatum& storage) {
  if (name == "ab") return hext::BirkhoffDatum::AB();
  if (name.rfind("ab-mod:", 0) == 0) {
    storage = hext::BirkhoffDatum::ab_mod(std::stoi(name.substr(7)));
    return storage;
  }
  throw hext::UserError("unknown datum (use ab or ab-mod:m): " + name);
}

json base_report() {
  json j;
  j["version"] = hext::kVersion;
  j["order_cap"] = hext::limits().order_cap;
  return j;
}

void emit(const json& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::ofstream out(out_path);
    if (!out) throw hext::UserError("cannot write " + out_path);
    out << j.dump(2) << "\n";
  }
}

int run(int argc, char** argv) {
  CLI::App app{"finite-group calculator for higher extensions, centrality, "
               "Hopf quotients and bar-resolution homology"};
  app.require_subcommand(1);

  int order_cap = 0;
  app.add_option("--order-cap", order_cap,
                 "override the group order cap (default 512 or HEXT_ORDER_CAP)");

  std::string cube_path, datum_name = "ab", route = "both", out_path;
  std::string group_spec;
  int degree = 2;
  bool dim_report = false;
  std::uint64_t seed = 1;
  long long budget = 0;
  std::vector<std::string> suite_ids;

  CLI::App* ce = app.add_subcommand("check-extension", "recursive n-fold extension test");
  ce->add_option("cube", cube_path, "cube document (JSON)")->required();
  ce->add_flag("--dim-report", dim_report, "report the status through every direction");

  CLI::App* cc = app.add_subcommand("check-central", "n-fold centrality with bracket report");
  cc->add_option("cube", cube_path)->required();
  cc->add_option("--datum", datum_name, "ab or ab-mod:m");

  CLI::App* cz = app.add_subcommand("centralize", "write the centralized cube document");
  cz->add_option("cube", cube_path)->required();
  cz->add_option("-o,--output", out_path, "output file (default stdout)");

  CLI::App* br = app.add_subcommand("bracket", "bracket subgroup of the top vertex");
  br->add_option("cube", cube_path)->required();
  br->add_option("--route", route, "explicit | categorical | both");
  br->add_option("--datum", datum_name, "ab or ab-mod:m");

  CLI::App* ho = app.add_subcommand("hopf", "Hopf numerator/denominator/quotient");
  ho->add_option("cube", cube_path)->required();
  ho->add_option("--datum", datum_name, "ab or ab-mod:m");

  CLI::App* hm = app.add_subcommand("homology", "bar-resolution integral homology");
  hm->add_option("group", group_spec, "group spec, e.g. \"Z2 x Z2\"")->required();
  hm->add_option("--degree", degree, "homology degree (0..3)");

  CLI::App* ve = app.add_subcommand("verify", "run property suites");
  ve->add_option("--suite", suite_ids, "suite ids (default: all)");
  ve->add_option("--seed", seed, "RNG seed");
  ve->add_option("--budget", budget, "random-case budget per suite (0 = default)");
  bool list_suites = false;
  ve->add_flag("--list", list_suites, "list suite ids and exit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  if (const char* env = std::getenv("HEXT_ORDER_CAP"); env && order_cap == 0)
    order_cap = std::atoi(env);
  if (order_cap > 0) hext::limits().order_cap = order_cap;

  hext::BirkhoffDatum datum_storage = hext::BirkhoffDatum::ab_mod(1);

  if (ce->parsed()) {
    hext::Cube cube = hext::load_cube_file(cube_path);
    bool verdict = hext::is_n_fold_extension(cube);
    if (dim_report && cube.dim() >= 1) {
      json rep = base_report();
      rep["extension"] = verdict;
      json per = json::object();
      bool agree = true;
      for (int i = 0; i < cube.dim(); ++i) {
        bool s = hext::extension_status_via(cube, i);
        per["delta_" + std::to_string(i)] = s;
        agree = agree && s == verdict;
      }
      rep["per_direction"] = per;
      emit(rep, "");
      if (!agree) throw hext::AgreementFailure("delta statuses disagree");
    } else {
      std::cout << (verdict ? "true" : "false") << "\n";
    }
    return 0;
  }

  if (cc->parsed()) {
    const hext::BirkhoffDatum& d = datum_by_name(datum_name, datum_storage);
    hext::Cube cube = hext::load_cube_file(cube_path);
    bool central = hext::is_n_fold_central(cube, d);
    hext::BracketReport rep = hext::bracket_report(cube, d);
    json j = base_report();
    j["central"] = central;
    j["datum"] = d.name();
    json b;
    if (rep.explicit_route) b["explicit"] = hext::subgroup_json(*rep.explicit_route);
    json cats = json::array();
    for (const auto& s : rep.categorical_routes) cats.push_back(hext::subgroup_json(s));
    b["categorical"] = cats;
    b["agree"] = rep.agree;
    j["bracket"] = b;
    emit(j, "");
    if (!rep.agree) throw hext::AgreementFailure("bracket routes disagree");
    return 0;
  }

  if (cz->parsed()) {
    hext::Cube cube = hext::load_cube_file(cube_path);
    hext::Cube central = hext::centralize_n(cube, hext::BirkhoffDatum::AB());
    emit(hext::cube_to_document(central), out_path);
    return 0;
  }

  if (br->parsed()) {
    const hext::BirkhoffDatum& d = datum_by_name(datum_name, datum_storage);
    hext::Cube cube = hext::load_cube_file(cube_path);
    json j = base_report();
    j["datum"] = d.name();
    j["route"] = route;
    if (route == "explicit") {
      if (!d.is_ab())
        throw hext::UserError("the explicit product formula is specific to ab");
      j["bracket"] = hext::subgroup_json(
          cube.dim() == 1 ? hext::bracket1(cube.cover(1, 0), d)
                          : hext::bracket_n_explicit(cube));
    } else if (route == "categorical") {
      j["bracket"] = hext::subgroup_json(
          hext::bracket_n_categorical(cube, d, cube.dim() - 1));
    } else if (route == "both") {
      hext::BracketReport rep = hext::bracket_report(cube, d);
      if (rep.explicit_route) j["explicit"] = hext::subgroup_json(*rep.explicit_route);
      json cats = json::array();
      for (const auto& s : rep.categorical_routes) cats.push_back(hext::subgroup_json(s));
      j["categorical"] = cats;
      j["agree"] = rep.agree;
      emit(j, "");
      if (!rep.agree) throw hext::AgreementFailure("bracket routes disagree");
      return 0;
    } else {
      throw hext::UserError("unknown route: " + route);
    }
    emit(j, "");
    return 0;
  }

  if (ho->parsed()) {
    const hext::BirkhoffDatum& d = datum_by_name(datum_name, datum_storage);
    hext::Cube cube = hext::load_cube_file(cube_path);
    hext::HopfReport rep = hext::hopf_delta_n(cube, d);
    json j = base_report();
    j["datum"] = d.name();
    j["numerator"] = hext::subgroup_json(rep.numerator);
    j["denominator"] = hext::subgroup_json(rep.denominator);
    j["quotient_order"] = rep.quotient->order();
    j["abelian_invariants"] =
        rep.abelian_invariants ? json(*rep.abelian_invariants) : json(nullptr);
    j["presentation_conditions_met"] = rep.presentation_conditions_met;
    emit(j, "");
    return 0;
  }

  if (hm->parsed()) {
    hext::GroupPtr g = hext::parse_group(group_spec);
    hext::AbelianInvariants inv = hext::integral_homology(g, degree);
    json j = base_report();
    j["group"] = group_spec;
    j["degree"] = degree;
    j["divisors"] = inv.divisors;
    j["free_rank"] = inv.free_rank;
    emit(j, "");
    return 0;
  }

  if (ve->parsed()) {
    if (list_suites) {
      for (const std::string& id : hext::property_suite_ids()) std::cout << id << "\n";
      return 0;
    }
    std::vector<std::string> ids = suite_ids.empty() ? hext::property_suite_ids() : suite_ids;
    for (const std::string& id : ids)
      if (!hext::is_property_suite(id)) throw hext::UserError("unknown suite: " + id);
    std::vector<hext::PropertyRunReport> reports =
        hext::run_property_suite(ids, seed, budget);
    json j = base_report();
    j["seed"] = seed;
    j["budget"] = budget;
    json arr = json::array();
    bool all_pass = true;
    for (const auto& r : reports) {
      json e;
      e["property"] = r.property;
      e["attempted"] = r.attempted;
      e["passed"] = r.passed;
      e["seed"] = r.seed;
      if (!r.first_counterexample.empty())
        e["first_counterexample"] = r.first_counterexample;
      arr.push_back(std::move(e));
      all_pass = all_pass && r.passed == r.attempted;
    }
    j["suites"] = std::move(arr);
    j["all_passed"] = all_pass;
    emit(j, "");
    return all_pass ? 0 : kExitDisagree;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const hext::ConsistencyError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDisagree;
  } catch (const hext::CapError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCap;
  } catch (const hext::UserError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUser;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUser;
  }
}
