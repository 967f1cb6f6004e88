#include "cli.hpp"

#include <iomanip>
#include <ostream>
#include <random>
#include <regex>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "reflift/acceptance.hpp"
#include "reflift/arrangement.hpp"
#include "reflift/classify.hpp"
#include "reflift/lattice.hpp"
#include "reflift/lifting.hpp"
#include "reflift/report.hpp"

namespace reflift::cli {

namespace {

using nlohmann::json;

struct GridBounds {
  int d = 1, e = 1, r = 1;
};

GridBounds parse_grid(const std::string& text) {
  static const std::regex item(R"(\s*([der])\s*(?:<=|≤|=)\s*(\d+)\s*)");
  GridBounds g;
  bool seen[3] = {false, false, false};
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    std::smatch m;
    if (!std::regex_match(part, m, item)) throw ParseError("bad grid item '" + part + "' (expected d<=D,e<=E,r<=R)");
    const int v = std::stoi(m[2].str());
    if (v < 1) throw ParseError("grid bounds must be >= 1");
    const char key = m[1].str()[0];
    const int slot = key == 'd' ? 0 : key == 'e' ? 1 : 2;
    seen[slot] = true;
    (slot == 0 ? g.d : slot == 1 ? g.e : g.r) = v;
  }
  if (!seen[0] || !seen[1] || !seen[2]) throw ParseError("grid must bound d, e and r");
  return g;
}

std::string describe(const LiftReport& r) {
  std::string s = std::string(to_string(r.method)) + ": " + (r.lifts ? "lifts" : "does not lift");
  if (r.witness) {
    s += "; witness " + to_string(r.witness->hyperplane) + " power " + std::to_string(r.witness->power);
    if (r.witness->element) s += " element " + to_string(*r.witness->element);
  }
  return s;
}

int check_element(const std::string& group, const std::string& element, const std::string& method, bool as_json,
                  std::ostream& out) {
  const auto desc = parse_descriptor(group);
  const auto w = parse_element(desc, element);
  const Arrangement arr(desc);
  std::vector<LiftReport> reports;
  if (method == "oracle" || method == "both") reports.push_back(element_lifts_oracle(w, arr));
  if (method == "fast" || method == "both") reports.push_back(element_lifts_fast_report(w, arr));
  const bool agree = reports.front().lifts == reports.back().lifts;
  if (as_json) {
    if (reports.size() == 1) {
      out << to_json(reports.front()).dump(2) << "\n";
    } else {
      json j = json::array();
      for (const auto& r : reports) j.push_back(to_json(r));
      out << j.dump(2) << "\n";
    }
  } else {
    out << to_string(desc) << "  " << to_string(w) << "  order " << order(w) << "\n";
    for (const auto& r : reports) out << "  " << describe(r) << "\n";
    if (auto o = obstruction_shortcuts(w)) out << "  shortcut: " << to_string(*o) << "\n";
  }
  if (!agree) {
    throw InvariantViolation("oracle and fast criteria disagree on " + to_string(w) + " in " + to_string(desc));
  }
  return reports.front().lifts ? kLifts : kDoesNotLift;
}

int check_subgroup(const std::string& group, const std::string& generators, bool as_json, std::ostream& out) {
  const auto desc = parse_descriptor(group);
  const auto gens = parse_element_list(desc, generators);
  const auto g = Subgroup::closure(desc, gens);
  const Arrangement arr(desc);
  const auto report = subgroup_lifts(g, arr);
  const bool local = subgroup_lifts_local(g, arr);
  if (local != report.lifts) {
    throw InvariantViolation("subgroup criterion and element-wise criterion disagree");
  }
  const auto orbit_count = orbits(g, arr).size();
  std::optional<bool> faithful;
  if (arr.size() > 0) faithful = acts_faithfully_on_arrangement(g);
  if (as_json) {
    json j = to_json(report);
    j["order"] = g.size();
    j["orbits"] = orbit_count;
    j["faithful"] = faithful ? json(*faithful) : json(nullptr);
    out << j.dump(2) << "\n";
  } else {
    out << to_string(desc) << "  subgroup of order " << g.size() << "\n"
        << "  " << describe(report) << "\n"
        << "  orbits on arrangement: " << orbit_count << " of " << arr.size() << " hyperplanes\n"
        << "  acts faithfully: " << (faithful ? (*faithful ? "yes" : "no") : "n/a (empty arrangement)") << "\n";
  }
  return report.lifts ? kLifts : kDoesNotLift;
}

int classify(const std::string& group, bool as_json, std::ostream& out) {
  const auto row = classify_descriptor(parse_descriptor(group));
  if (as_json) {
    out << to_json(row).dump(2) << "\n";
  } else {
    out << format_table({row});
  }
  if (row.bieberbach_bruteforce && *row.bieberbach_bruteforce != row.bieberbach_formula) {
    throw InvariantViolation("Bieberbach formula and brute force disagree for " + group);
  }
  if (row.odd_lift_bruteforce && *row.odd_lift_bruteforce != row.odd_lift_property) {
    throw InvariantViolation("odd-lift formula and brute force disagree for " + group);
  }
  return kLifts;
}

int survey(const std::string& grid, std::size_t guard, bool as_json, std::ostream& out) {
  const auto bounds = parse_grid(grid);
  std::vector<ClassificationRow> rows;
  for (int d = 1; d <= bounds.d; ++d) {
    for (int e = 1; e <= bounds.e; ++e) {
      for (int r = 1; r <= bounds.r; ++r) {
        const auto desc = GroupDescriptor::make(d, e, r);
        std::uint64_t order = 0;
        try {
          order = desc.order();
        } catch (const GuardExceeded&) {
          order = guard + 1;
        }
        if (order > guard) {
          ClassificationRow row;
          row.desc = desc;
          row.bieberbach_formula = is_bieberbach_series(desc);
          row.odd_lift_property = has_odd_lift_property(desc);
          row.arrangement_size = hyperplanes(desc).size();
          rows.push_back(row);
        } else {
          rows.push_back(classify_descriptor(desc, guard));
        }
      }
    }
  }
  if (as_json) {
    json j = json::array();
    for (const auto& r : rows) j.push_back(to_json(r));
    out << j.dump(2) << "\n";
  } else {
    out << format_table(rows);
  }
  for (const auto& r : rows) {
    if ((r.bieberbach_bruteforce && *r.bieberbach_bruteforce != r.bieberbach_formula) ||
        (r.odd_lift_bruteforce && *r.odd_lift_bruteforce != r.odd_lift_property)) {
      throw InvariantViolation("formula and brute force disagree for " + to_string(r.desc));
    }
  }
  return kLifts;
}

int frobenius(int p, int q, bool as_json, std::ostream& out) {
  FrobeniusSpec spec;
  try {
    spec = FrobeniusSpec::with_smallest_multiplier(p, q);
  } catch (const std::invalid_argument& ex) {
    throw ParseError(ex.what());
  }
  const auto action = frobenius_coset_action(spec);
  const bool in_f = all_in_F_n(action.group);
  const auto lift = subgroup_lifts(as_symmetric_subgroup(action.group));
  std::size_t kernel = 0;
  for (const auto& c : action.checks) kernel += c.in_kernel;
  if (as_json) {
    out << json{{"p", spec.p},
                {"q", spec.q},
                {"m", spec.m},
                {"order", action.group.size()},
                {"kernel_size", kernel},
                {"faithful", action.faithful},
                {"kernel_fixed_point_free", action.kernel_fixed_point_free},
                {"complement_single_fixed_point", action.complement_single_fixed_point},
                {"cycle_structure_ok", action.cycle_structure_ok},
                {"in_F_p", in_f},
                {"lifts", lift.lifts}}
               .dump(2)
        << "\n";
  } else {
    auto line = [&](const std::string& label, bool ok) {
      out << "  " << std::left << std::setw(31) << (label + ":") << (ok ? "yes" : "no") << "\n";
    };
    out << "affine group x -> " << spec.m << "^j x + b mod " << spec.p << "  (order " << action.group.size()
        << ", kernel " << kernel << ")\n";
    line("faithful", action.faithful);
    line("kernel fixed-point free", action.kernel_fixed_point_free);
    line("complements fix one point", action.complement_single_fixed_point);
    line("cycle types as predicted", action.cycle_structure_ok);
    line("contained in F_" + std::to_string(spec.p), in_f);
    line("lifts in G(1,1," + std::to_string(spec.p) + ")", lift.lifts);
  }
  if (!action.cycle_structure_ok || !in_f || !lift.lifts) {
    throw InvariantViolation("Frobenius action failed its structural checks");
  }
  return kLifts;
}

int cocycle(const std::string& group, const std::string& generators, int trials, std::uint64_t seed, bool as_json,
            std::ostream& out) {
  const auto desc = parse_descriptor(group);
  const auto g = Subgroup::closure(desc, parse_element_list(desc, generators));
  const Arrangement arr(desc);
  const CocycleSolver solver(g, arr);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> coeff(-5, 5);
  int solved = 0;
  for (int k = 0; k < trials; ++k) {
    LatticeVector x(arr.size());
    for (auto& v : x) v = coeff(rng);
    const auto c = coboundary(x, g, arr);
    const auto y = solver.trivialize(c);
    if (coboundary(y, g, arr) == c) ++solved;
  }
  const auto rank = arr.size() - solver.stacked_rank();
  if (as_json) {
    out << json{{"group_order", g.size()}, {"arrangement_size", arr.size()}, {"trials", trials},
                {"solved", solved},        {"fixed_lattice_rank", rank}}
               .dump(2)
        << "\n";
  } else {
    out << to_string(desc) << "  subgroup of order " << g.size() << " on " << arr.size() << " hyperplanes\n"
        << "  cocycle round trips solved: " << solved << "/" << trials << "\n"
        << "  fixed lattice rank: " << rank << "\n";
  }
  if (solved != trials) throw InvariantViolation("some cocycles were not trivialised");
  return kLifts;
}

int verify(bool as_json, std::ostream& out) {
  const auto results = run_acceptance(as_json ? nullptr : &out);
  bool ok = true;
  json j = json::array();
  for (const auto& r : results) {
    ok = ok && r.passed;
    j.push_back({{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"detail", r.detail}, {"seconds", r.seconds}});
  }
  if (as_json) out << j.dump(2) << "\n";
  return ok ? kLifts : kInvariantViolation;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite-order liftings of G(de,e,r) elements and subgroups to B/[P,P]"};
  app.require_subcommand(1, 1);

  std::string group, element, generators, method = "both", grid;
  bool as_json = false;
  int p = 7, q = 3, trials = 100;
  std::uint64_t seed = 1;
  std::size_t guard = 100'000;

  auto* ce = app.add_subcommand("check-element", "Decide whether one element has a finite-order lifting");
  ce->add_option("--group", group, "G(de,e,r) or S(n)")->required();
  ce->add_option("--element", element, "perm=[..];exp=[..]")->required();
  ce->add_option("--method", method)->check(CLI::IsMember({"oracle", "fast", "both"}));

  auto* cs = app.add_subcommand("check-subgroup", "Decide whether a generated subgroup lifts");
  cs->add_option("--group", group)->required();
  cs->add_option("--generators", generators, "elements separated by ';'")->required();

  auto* cl = app.add_subcommand("classify", "Bieberbach and odd-order lifting classification of one group");
  cl->add_option("--group", group)->required();

  auto* sv = app.add_subcommand("survey", "Classification table over a range of descriptors");
  sv->add_option("--grid", grid, "d<=D,e<=E,r<=R")->required();
  sv->add_option("--guard", guard, "largest group order scanned by brute force");

  auto* fr = app.add_subcommand("frobenius", "Affine Frobenius group Z/p x| Z/q acting on Z/p");
  fr->add_option("--p", p)->required();
  fr->add_option("--q", q)->required();

  auto* cc = app.add_subcommand("cocycle", "Random cocycle generate-and-solve round trips");
  cc->add_option("--group", group)->required();
  cc->add_option("--generators", generators)->required();
  cc->add_option("--random", trials, "number of round trips")->check(CLI::NonNegativeNumber);
  cc->add_option("--seed", seed);

  auto* vf = app.add_subcommand("verify", "Run the acceptance suite");

  for (auto* sub : {ce, cs, cl, sv, fr, cc, vf}) sub->add_flag("--json", as_json, "emit one JSON document");

  std::vector<std::string> reversed(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  }

  try {
    if (*ce) return check_element(group, element, method, as_json, out);
    if (*cs) return check_subgroup(group, generators, as_json, out);
    if (*cl) return classify(group, as_json, out);
    if (*sv) return survey(grid, guard, as_json, out);
    if (*fr) return frobenius(p, q, as_json, out);
    if (*cc) return cocycle(group, generators, trials, seed, as_json, out);
    if (*vf) return verify(as_json, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const DescriptorMismatch& e) {
    err << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const GuardExceeded& e) {
    err << "guard exceeded: " << e.what() << "\n";
    return kGuardExceeded;
  } catch (const InvariantViolation& e) {
    err << "invariant violation: " << e.what() << "\n";
    return kInvariantViolation;
  } catch (const std::overflow_error& e) {
    err << "invariant violation: " << e.what() << "\n";
    return kInvariantViolation;
  } catch (const std::invalid_argument& e) {
    err << "parse error: " << e.what() << "\n";
    return kParseError;
  }
  return kParseError;
}

}  // namespace reflift::cli
