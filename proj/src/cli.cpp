#include "eac/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "eac/active_orders.hpp"
#include "eac/bulk.hpp"
#include "eac/complexes.hpp"
#include "eac/json_io.hpp"
#include "eac/worked_example.hpp"

namespace eac::cli {
namespace {

using json_io::Json;

int max_ground_cap() {
  const char* v = std::getenv("MATROID_MAX_N");
  if (v == nullptr || *v == '\0') return 12;
  char* end = nullptr;
  long parsed = std::strtol(v, &end, 10);
  if (end == v || *end != '\0' || parsed < 0 || parsed > ElemSet::kMaxGroundSize)
    fail(Errc::ParseError,
         std::string("MATROID_MAX_N must be an integer in 0..") +
             std::to_string(ElemSet::kMaxGroundSize));
  return static_cast<int>(parsed);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::ParseError, "cannot read file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

OrderedMatroid load_matroid(const std::string& path) {
  OrderedMatroid m = json_io::parse_matroid_text(read_file(path));
  const int cap = max_ground_cap();
  if (m.n() > cap)
    fail(Errc::GroundTooLarge,
         "ground size " + std::to_string(m.n()) +
             " exceeds MATROID_MAX_N=" + std::to_string(cap));
  return m;
}

SimplicialComplex build_complex(const OrderedMatroid& m,
                                const std::string& which, bool reduced) {
  SimplicialComplex k = which == "in" ? independence_complex(m)
                                      : external_activity_complex(m);
  return reduced ? reduced_complex(k) : k;
}

OrderKind parse_kind(const std::string& kind) {
  if (kind == "ext") return OrderKind::Ext;
  if (kind == "int") return OrderKind::Int;
  return OrderKind::ExtInt;
}

std::vector<int> identity_order(std::size_t count) {
  std::vector<int> ord(count);
  for (std::size_t i = 0; i < count; ++i) ord[i] = static_cast<int>(i);
  return ord;
}

Json basis_list_json(const OrderedMatroid& m, const std::vector<int>& indices) {
  Json out = Json::array();
  for (int idx : indices)
    out.push_back(
        json_io::elemset_to_json(m.bases()[static_cast<std::size_t>(idx)]));
  return out;
}

Json cmd_validate(const OrderedMatroid& m) {
  Json out = Json::object();
  out["valid"] = true;
  out["n"] = m.n();
  out["rank"] = m.rank();
  out["num_bases"] = static_cast<long long>(m.bases().size());
  out["loops"] = json_io::elemset_to_json(m.loops());
  out["coloops"] = json_io::elemset_to_json(m.coloops());
  return out;
}

Json cmd_activity(const OrderedMatroid& m) {
  Json out = Json::array();
  for (const BasisActivity& act : activity_table(m))
    out.push_back(json_io::activity_to_json(act));
  return out;
}

Json cmd_orders(const OrderedMatroid& m, const std::string& kind,
                int extensions, std::uint64_t seed) {
  BasisPoset poset(m, parse_kind(kind));
  Json out = Json::object();
  out["kind"] = kind;
  Json bases = Json::array();
  for (const ElemSet& b : m.bases())
    bases.push_back(json_io::elemset_to_json(b));
  out["bases"] = bases;
  Json hasse = Json::array();
  for (const auto& [lo, hi] : hasse_diagram(poset))
    hasse.push_back(Json::array({lo, hi}));
  out["hasse"] = hasse;
  if (extensions >= 0) {
    Json exts = Json::array();
    for (const std::vector<int>& ext : linear_extensions(
             poset, static_cast<std::size_t>(extensions), seed))
      exts.push_back(basis_list_json(m, ext));
    out["extensions"] = exts;
  }
  return out;
}

Json cmd_shell_check(const OrderedMatroid& m, const std::string& which,
                     bool reduced, const std::string& order_spec,
                     std::uint64_t seed) {
  SimplicialComplex k = build_complex(m, which, reduced);
  const std::size_t count = k.facets.size();

  auto single_report = [&](const std::vector<int>& ord) {
    ShellingReport report = shelling_check(k, ord);
    Json out = json_io::shelling_report_to_json(k, report, ord);
    out["which"] = which;
    out["order"] = basis_list_json(m, ord);
    return out;
  };

  if (order_spec == "lex") return single_report(identity_order(count));
  if (order_spec.rfind("file:", 0) == 0) {
    Json doc = Json::parse(read_file(order_spec.substr(5)), nullptr, false);
    if (doc.is_discarded() || !doc.is_array())
      fail(Errc::ParseError, "order file must hold a JSON array of bases");
    std::vector<int> ord;
    for (const auto& b : doc) {
      ElemSet basis;
      for (const auto& e : b) {
        if (!e.is_number_integer())
          fail(Errc::ParseError, "order file bases must hold integers");
        basis.add(e.get<int>());
      }
      int idx = m.basis_index(basis);
      if (idx < 0)
        fail(Errc::WrongBasisSet, basis.to_string() + " is not a basis");
      ord.push_back(idx);
    }
    return single_report(ord);
  }

  std::string prefix;
  OrderKind kind{};
  if (order_spec.rfind("sample-extint:", 0) == 0) {
    prefix = "sample-extint:";
    kind = OrderKind::ExtInt;
  } else if (order_spec.rfind("sample-int:", 0) == 0) {
    prefix = "sample-int:";
    kind = OrderKind::Int;
  } else {
    fail(Errc::ParseError,
         "--order must be lex, file:PATH, sample-extint:N or sample-int:N");
  }
  char* end = nullptr;
  const std::string num = order_spec.substr(prefix.size());
  long parsed = std::strtol(num.c_str(), &end, 10);
  if (end == num.c_str() || *end != '\0' || parsed < 0)
    fail(Errc::ParseError, "bad sample count in --order " + order_spec);

  BasisPoset poset(m, kind);
  std::vector<std::vector<int>> orders =
      linear_extensions(poset, static_cast<std::size_t>(parsed), seed);
  bulk::OrdersCheckResult result = bulk::check_orders(k, orders);
  Json out = Json::object();
  out["which"] = which;
  out["order_kind"] = order_kind_name(kind);
  out["orders_checked"] = static_cast<long long>(result.orders_checked);
  out["all_shellings"] = result.all_shellings;
  if (!result.all_shellings) {
    Json failure = Json::object();
    failure["order_index"] = static_cast<long long>(result.first_failure_order);
    failure["failure_index"] = result.failure_index;
    failure["order"] = basis_list_json(
        m, orders[static_cast<std::size_t>(result.first_failure_order)]);
    out["first_failure"] = failure;
  }
  return out;
}

Json cmd_hvector(const OrderedMatroid& m, const std::string& which,
                 bool reduced) {
  SimplicialComplex k = build_complex(m, which, reduced);
  Json out = Json::object();
  out["which"] = which;
  out["reduced"] = reduced;
  Json f = Json::array(), h = Json::array();
  for (long long v : f_vector(k)) f.push_back(v);
  for (long long v : h_vector(k)) h.push_back(v);
  out["f"] = f;
  out["h"] = h;
  EulerCharacteristic euler = euler_characteristic(k);
  out["euler"] = euler.chi;
  out["euler_reduced"] = euler.chi_reduced;
  return out;
}

Json cmd_topology(const OrderedMatroid& m) {
  Topology topo = classify_topology(m);
  Json out = Json::object();
  if (topo.cls == TopologyClass::ContractibleU31) {
    out["class"] = "contractible-u31";
  } else {
    out["class"] = "sphere";
    out["dim"] = topo.sphere_dim;
  }
  return out;
}

// Recomputes the worked example end to end and diffs every intermediate
// against the pinned values.
Json cmd_reproduce(int& exit_code) {
  Json checks = Json::array();
  bool all = true;
  auto check = [&](const char* name, bool pass) {
    Json row = Json::object();
    row["name"] = name;
    row["pass"] = pass;
    checks.push_back(row);
    all = all && pass;
  };

  const OrderedMatroid m = worked_example::matroid();

  {
    const auto& golden = worked_example::golden_activities();
    std::vector<BasisActivity> table = activity_table(m);
    bool ok = table.size() == golden.size();
    for (std::size_t i = 0; ok && i < table.size(); ++i)
      ok = table[i].basis == golden[i].basis && table[i].ea == golden[i].ea &&
           table[i].ep == golden[i].ep && table[i].ia == golden[i].ia &&
           table[i].ip == golden[i].ip;
    check("activity-table", ok);
  }

  check("tutte-polynomial",
        tutte_polynomial(m) == worked_example::golden_tutte());

  const SimplicialComplex act = external_activity_complex(m);
  auto mask_of = [&act](ElemSet plain, ElemSet barred) {
    std::uint64_t mask = 0;
    for (int e : plain)
      mask |= std::uint64_t{1} << act.slot_of_label(e);
    for (int e : barred)
      mask |= std::uint64_t{1} << act.slot_of_label(-e);
    return mask;
  };

  {
    const auto& golden = worked_example::golden_facets();
    bool ok = act.facets.size() == golden.size();
    for (std::size_t i = 0; ok && i < golden.size(); ++i)
      ok = act.facets[i] == mask_of(golden[i].plain, golden[i].barred);
    check("facets", ok);
  }

  check("cone-points",
        cone_points(act) == mask_of(worked_example::cone_plain(),
                                    worked_example::cone_barred()));

  const SimplicialComplex reduced = reduced_complex(act);
  {
    const auto& golden = worked_example::golden_facets();
    bool ok = true;
    for (std::size_t i = 0; ok && i < golden.size(); ++i)
      ok = reduced.facets[i] ==
           mask_of(golden[i].reduced_plain, golden[i].reduced_barred);
    check("reduced-facets", ok);
  }

  const std::vector<int> lex = identity_order(act.facets.size());
  {
    ShellingReport report = shelling_check(act, lex);
    const auto& golden = worked_example::golden_facets();
    bool ok = report.is_shelling;
    for (std::size_t i = 0; ok && i < golden.size(); ++i)
      ok = report.restriction_sets[i] ==
           mask_of(ElemSet(), golden[i].restriction_barred);
    // The reduced complex shares the restriction sets.
    ShellingReport reduced_report = shelling_check(reduced, lex);
    ok = ok && reduced_report.is_shelling &&
         reduced_report.restriction_sets == report.restriction_sets;
    // Predicted without running the checker.
    ok = ok && restriction_sets_predicted(
                   m, lex, WhichComplex::ExternalActivity) ==
                   report.restriction_sets;
    check("lex-shelling-activity", ok);
  }

  const SimplicialComplex in_complex = independence_complex(m);
  auto in_mask = [&in_complex](ElemSet plain) {
    std::uint64_t mask = 0;
    for (int e : plain)
      mask |= std::uint64_t{1} << in_complex.slot_of_label(e);
    return mask;
  };
  {
    ShellingReport report = shelling_check(in_complex, lex);
    const auto& golden = worked_example::golden_activities();
    bool ok = report.is_shelling;
    for (std::size_t i = 0; ok && i < golden.size(); ++i)
      ok = report.restriction_sets[i] == in_mask(golden[i].ip);
    ok = ok && restriction_sets_predicted(m, lex,
                                          WhichComplex::Independence) ==
                   report.restriction_sets;
    check("lex-shelling-independence", ok);
  }

  {
    // Control A extends the ext order yet fails on the independence complex
    // at step 2: facet 135 meets 124 in codimension two.
    std::vector<int> ctrl = worked_example::as_indices(
        m, worked_example::control_order_ext());
    BasisPoset ext(m, OrderKind::Ext);
    bool ok = is_linear_extension(ext, ctrl);
    ShellingReport report = shelling_check(in_complex, ctrl);
    ok = ok && !report.is_shelling && report.failure_index == 1;
    check("control-order-ext", ok);
  }

  {
    // Control B extends the int order, shells the independence complex, but
    // fails on the activity complex at its sixth facet (basis 345).
    std::vector<int> ctrl = worked_example::as_indices(
        m, worked_example::control_order_int());
    BasisPoset intp(m, OrderKind::Int);
    bool ok = is_linear_extension(intp, ctrl);
    ok = ok && shelling_check(in_complex, ctrl).is_shelling;
    ShellingReport report = shelling_check(act, ctrl);
    ok = ok && !report.is_shelling && report.failure_index == 5;
    ok = ok && m.bases()[static_cast<std::size_t>(ctrl[5])] ==
                   ElemSet::of({3, 4, 5});
    check("control-order-int", ok);
  }

  {
    std::vector<long long> h_in = h_vector(in_complex);
    std::vector<long long> h_act = h_vector(act);
    const auto& golden = worked_example::golden_h();
    bool ok = h_in == golden;
    for (std::size_t i = 0; ok && i < h_act.size(); ++i)
      ok = h_act[i] == (i < golden.size() ? golden[i] : 0);
    ShellingReport report = shelling_check(in_complex, lex);
    ok = ok && h_vector_from_shelling(in_complex, report) == golden;
    // T(x, 1) read backwards gives the same h-vector.
    std::vector<long long> marginal = tutte_polynomial(m).x_marginal();
    for (std::size_t i = 0; ok && i < golden.size(); ++i)
      ok = golden[i] ==
           marginal[static_cast<std::size_t>(m.rank()) - i];
    check("h-vectors", ok);
  }

  {
    std::vector<std::uint64_t> found = minimal_nonfaces(act);
    std::vector<std::uint64_t> expected;
    for (const auto& nf : worked_example::golden_nonfaces())
      expected.push_back(mask_of(nf.plain, nf.barred));
    std::sort(expected.begin(), expected.end());
    bool ok = found == expected && verify_stanley_reisner(m).ok;
    check("minimal-nonfaces", ok);
  }

  {
    AbsoluteElements abs = absolute_elements(m);
    check("absolute-elements", abs.aea == worked_example::golden_aea() &&
                                   abs.aep == worked_example::golden_aep());
  }

  check("topology", classify_topology(m).cls ==
                            TopologyClass::ContractibleU31 &&
                        m.has_u31_minor() && m.has_intersecting_circuits());

  check("graph-realization",
        worked_example::matroid_from_graph().bases() == m.bases());

  Json out = Json::object();
  out["checks"] = checks;
  out["all_pass"] = all;
  if (!all) exit_code = 1;
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"External activity complexes of ordered matroids"};
  app.require_subcommand(1);

  std::string input, which = "in", kind = "extint", order_spec = "lex";
  std::uint64_t seed = 0;
  int extensions = -1;
  bool reduced = false;

  auto add_input = [&input](CLI::App* cmd) {
    cmd->add_option("--input", input, "matroid descriptor (JSON file)")
        ->required();
  };
  auto add_which = [&which](CLI::App* cmd) {
    cmd->add_option("--which", which,
                    "complex: in (independence) or act (external activity)")
        ->check(CLI::IsMember({"in", "act"}))
        ->required();
  };

  CLI::App* validate = app.add_subcommand(
      "validate", "check the basis exchange axiom and report basic data");
  add_input(validate);

  CLI::App* activity = app.add_subcommand(
      "activity", "externally/internally active and passive elements per basis");
  add_input(activity);

  CLI::App* tutte = app.add_subcommand(
      "tutte", "Tutte polynomial as sparse coefficients");
  add_input(tutte);

  CLI::App* orders = app.add_subcommand(
      "orders", "an active order on the bases: Hasse diagram and extensions");
  add_input(orders);
  orders->add_option("--kind", kind, "ext, int or extint")
      ->check(CLI::IsMember({"ext", "int", "extint"}));
  orders->add_option("--extensions", extensions,
                     "list this many linear extensions (exhaustive when fewer exist)");
  orders->add_option("--seed", seed, "sampling seed");

  CLI::App* complex_cmd = app.add_subcommand(
      "complex", "facets of the independence or external activity complex");
  add_input(complex_cmd);
  add_which(complex_cmd);
  complex_cmd->add_flag("--reduced", reduced, "strip cone points");

  CLI::App* shell = app.add_subcommand(
      "shell-check", "verify that facet orders are shellings");
  add_input(shell);
  add_which(shell);
  shell->add_flag("--reduced", reduced, "strip cone points first");
  shell->add_option(
      "--order", order_spec,
      "lex | file:PATH | sample-extint:N | sample-int:N (default lex)");
  shell->add_option("--seed", seed, "sampling seed");

  CLI::App* hvector_cmd = app.add_subcommand(
      "hvector", "f-vector, h-vector and Euler characteristics");
  add_input(hvector_cmd);
  add_which(hvector_cmd);
  hvector_cmd->add_flag("--reduced", reduced, "strip cone points first");

  CLI::App* topology = app.add_subcommand(
      "topology", "homotopy type of the reduced external activity complex");
  add_input(topology);

  CLI::App* reproduce = app.add_subcommand(
      "selftest",
      "recompute the bundled worked example and diff against pinned values");

  std::vector<const char*> argv;
  argv.push_back("eac");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    // Malformed command lines land in the same exit class as malformed
    // input files; --help and --version stay successful.
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 3;
  }

  try {
    Json result;
    int exit_code = 0;
    if (reproduce->parsed()) {
      result = cmd_reproduce(exit_code);
    } else {
      OrderedMatroid m = load_matroid(input);
      if (validate->parsed()) result = cmd_validate(m);
      else if (activity->parsed()) result = cmd_activity(m);
      else if (tutte->parsed()) result = json_io::tutte_to_json(tutte_polynomial(m));
      else if (orders->parsed()) result = cmd_orders(m, kind, extensions, seed);
      else if (complex_cmd->parsed())
        result = json_io::complex_to_json(build_complex(m, which, reduced));
      else if (shell->parsed())
        result = cmd_shell_check(m, which, reduced, order_spec, seed);
      else if (hvector_cmd->parsed()) result = cmd_hvector(m, which, reduced);
      else if (topology->parsed()) result = cmd_topology(m);
    }
    out << result.dump(2) << "\n";
    return exit_code;
  } catch (const Error& e) {
    Json error = Json::object();
    error["error"] = e.code_name();
    error["detail"] = e.what();
    out << error.dump(2) << "\n";
    return e.code() == Errc::ParseError ? 3 : 2;
  } catch (const std::exception& e) {
    Json error = Json::object();
    error["error"] = "internal";
    error["detail"] = e.what();
    out << error.dump(2) << "\n";
    return 2;
  }
}

}  // namespace eac::cli
