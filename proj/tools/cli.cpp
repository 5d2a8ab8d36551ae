#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

namespace gres::cli {

namespace {

// Failure raised by the front end itself, already classified.
struct CliError {
  std::string kind;
  std::string message;
  std::optional<std::size_t> position;
  int exit_code = Exit::input_error;
};

[[noreturn]] void schema_error(const std::string& pointer, const std::string& what) {
  throw CliError{"schema_error", pointer + ": " + what, std::nullopt, Exit::input_error};
}

const Json& require(const Json& obj, const std::string& key, const std::string& pointer) {
  if (!obj.contains(key)) schema_error(pointer + "/" + key, "missing required key");
  return obj.at(key);
}

const Json& require_array(const Json& value, const std::string& pointer) {
  if (!value.is_array()) schema_error(pointer, "expected an array");
  return value;
}

std::string require_string(const Json& value, const std::string& pointer) {
  if (!value.is_string()) schema_error(pointer, "expected a string");
  return value.get<std::string>();
}

// Library errors met while reading a field are reported with its pointer.
template <class F>
auto at_pointer(const std::string& pointer, F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    throw Error(e.kind(), pointer + ": " + e.what(), e.position());
  }
}

Scalar scalar_field(const Json& value, const std::string& pointer) {
  const std::string text = require_string(value, pointer);
  return at_pointer(pointer, [&] { return parse_scalar(text); });
}

Monomial exponent_field(const Json& value, std::size_t n, const std::string& pointer) {
  require_array(value, pointer);
  if (value.size() != n) schema_error(pointer, "expected " + std::to_string(n) + " exponents");
  std::vector<Monomial::exponent_type> exps;
  for (std::size_t k = 0; k < n; ++k) {
    const Json& e = value[k];
    if (!e.is_number_unsigned()) schema_error(pointer + "/" + std::to_string(k), "expected a non-negative integer");
    exps.push_back(e.get<Monomial::exponent_type>());
  }
  return Monomial(std::move(exps));
}

Point point_field(const Json& value, std::size_t n, const std::string& pointer) {
  require_array(value, pointer);
  if (value.size() != n) schema_error(pointer, "expected " + std::to_string(n) + " coordinates");
  Point w;
  for (std::size_t k = 0; k < n; ++k) w.push_back(scalar_field(value[k], pointer + "/" + std::to_string(k)));
  return w;
}

MonomialOrder order_from_name(const std::string& name, const std::string& pointer) {
  if (name == "grevlex") return MonomialOrder::grevlex();
  if (name == "lex") return MonomialOrder::lex();
  schema_error(pointer, "order must be \"grevlex\" or \"lex\"");
}

Jet jet_field(const Json& value, std::size_t n, const std::string& pointer) {
  if (!value.is_object()) schema_error(pointer, "expected an object");
  const Point node = point_field(require(value, "node", pointer), n, pointer + "/node");
  const Json& terms = require_array(require(value, "terms", pointer), pointer + "/terms");
  std::map<Monomial, Scalar> coeffs;
  Monomial span(n);
  for (std::size_t k = 0; k < terms.size(); ++k) {
    const std::string tp = pointer + "/terms/" + std::to_string(k);
    if (!terms[k].is_object()) schema_error(tp, "expected an object");
    const Monomial l = exponent_field(require(terms[k], "exponents", tp), n, tp + "/exponents");
    const Scalar a = scalar_field(require(terms[k], "coeff", tp), tp + "/coeff");
    for (std::size_t j = 0; j < n; ++j) span[j] = std::max(span[j], l[j]);
    if (!coeffs.emplace(l, a).second) schema_error(tp + "/exponents", "repeated exponent");
  }
  // Listed terms fix the order of the jet even when their coefficient is 0.
  Monomial bound = span;
  if (value.contains("bound")) bound = exponent_field(value.at("bound"), n, pointer + "/bound");
  return at_pointer(pointer, [&] { return make_jet(node, std::move(coeffs), bound); });
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliError{"io_error", "cannot open " + path.string(), std::nullopt, Exit::input_error};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json format_basis(const std::vector<Monomial>& basis, const std::vector<std::string>& names) {
  Json out = Json::array();
  for (const auto& m : basis) out.push_back(format_monomial(m, names));
  return out;
}

Json scalars_json(const std::vector<Scalar>& xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(to_json(x));
  return out;
}

struct Options {
  std::string input;
  std::optional<std::string> poly;
  std::optional<std::string> node;
  std::string format = "json";
};

const IdealPresentation& presentation(const ProblemFile& file) { return *file.pres; }

MultiPoly poly_option(const Options& opt, const ProblemFile& file) {
  if (!opt.poly) throw CliError{"usage_error", "--poly is required for this command", std::nullopt, Exit::input_error};
  return at_pointer("--poly", [&] { return parse_poly(*opt.poly, file.variables); });
}

Point node_option(const Options& opt, std::size_t n) {
  if (!opt.node) throw CliError{"usage_error", "--node is required for this command", std::nullopt, Exit::input_error};
  Point w;
  std::string_view rest = *opt.node;
  while (true) {
    const auto comma = rest.find(',');
    const std::string_view piece = rest.substr(0, comma);
    w.push_back(at_pointer("--node", [&] { return parse_scalar(piece); }));
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  if (w.size() != n) {
    throw Error(ErrorKind::arity_mismatch,
                "--node: expected " + std::to_string(n) + " coordinates, got " + std::to_string(w.size()));
  }
  return w;
}

std::string poly_text(const MultiPoly& p, const ProblemFile& file) {
  return format_poly(p, presentation(file).order(), file.variables);
}

Json command_gb(const ProblemFile& file) {
  const GroebnerData gb = buchberger(presentation(file));
  Json basis = Json::array();
  for (const auto& g : gb.basis) basis.push_back(poly_text(g, file));
  Json out;
  out["order"] = std::string(gb.order.name());
  out["basis"] = std::move(basis);
  out["standard_monomials"] = format_basis(gb.standard_monomials, file.variables);
  out["N"] = gb.N();
  return out;
}

Json command_qmat(const ProblemFile& file) {
  const QpMatrix q = qp_matrix(ResidueSystem(presentation(file)));
  Json rows = Json::array();
  for (std::size_t r = 0; r < q.entries.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < q.entries.cols(); ++c) row.push_back(to_json(q.entries(r, c)));
    rows.push_back(std::move(row));
  }
  Json out;
  out["basis"] = format_basis(q.basis, file.variables);
  out["matrix"] = std::move(rows);
  return out;
}

Json command_lag(const Options& opt, const ProblemFile& file) {
  if (opt.poly) {
    const MultiPoly f = poly_option(opt, file);
    return poly_text(lagrange_poly(f, buchberger(presentation(file))), file);
  }
  if (file.jets.empty()) {
    throw CliError{"usage_error", "lag needs --poly or a problem file with jets", std::nullopt, Exit::input_error};
  }
  validate_problem(InterpolationProblem{*file.pres, file.jets, Scalar(0), file.flavor, file.nodes, file.multiplicities});
  const ResidueSystem sys(presentation(file));
  return poly_text(lagrange_jets(file.jets, sys), file);
}

Json command_tau(const ProblemFile& file) {
  if (!file.separated()) schema_error("/nodes", "tau needs a problem built from nodes and multiplicities");
  validate_problem(InterpolationProblem{*file.pres, file.jets, Scalar(0), file.flavor, file.nodes, file.multiplicities});
  const auto basis = euclid_basis(file.nodes, file.multiplicities);
  const auto tau = tau_coefficients(file.jets, file.nodes, file.multiplicities);
  MultiPoly poly(file.variables.size());
  for (std::size_t k = 0; k < basis.size(); ++k) poly.add_term(basis[k], tau[k]);
  Json out;
  out["basis"] = format_basis(basis, file.variables);
  out["coefficients"] = scalars_json(tau);
  out["polynomial"] = poly_text(poly, file);
  return out;
}

Json command_verify(const Options& opt, const ProblemFile& file) {
  const InterpolationProblem prob = to_problem(file);
  const MultiPoly f = poly_option(opt, file);
  const ResidueSystem sys(prob.pres);
  const SolutionSet sol = solve_problem(prob, sys);
  const auto alpha = coordinates(f, sys.groebner());
  const Scalar value = sol.lambda.size() == alpha.size() ? dot(sol.lambda, alpha) : Scalar(0);
  Json out;
  out["variant"] = to_string(sol.kind);
  out["satisfied"] = verify_solution(f, sol, sys.groebner());
  out["value"] = to_json(value);
  out["c"] = to_json(prob.c);
  return out;
}

Json dispatch(const std::string& command, const Options& opt) {
  const ProblemFile file = read_problem(opt.input);
  if (command == "gb") return command_gb(file);
  if (command == "residue") return to_json(global_residue(poly_option(opt, file), ResidueSystem(presentation(file))));
  if (command == "local-residue") {
    const MultiPoly h = poly_option(opt, file);
    const Point w = node_option(opt, file.variables.size());
    return to_json(local_residue(h, ResidueSystem(presentation(file)), w));
  }
  if (command == "qmat") return command_qmat(file);
  if (command == "lag") return command_lag(opt, file);
  if (command == "tau") return command_tau(file);
  if (command == "solve") return to_json(solve_problem(to_problem(file)), file.variables);
  return command_verify(opt, file);
}

Json error_json(const std::string& kind, const std::string& message, std::optional<std::size_t> position) {
  Json out;
  out["status"] = "error";
  out["kind"] = kind;
  out["message"] = message;
  out["position"] = position ? Json(*position) : Json(nullptr);
  return out;
}

}  // namespace

ProblemFile parse_problem(const Json& doc) {
  if (!doc.is_object()) schema_error("", "expected a JSON object");
  static const std::vector<std::string> known{"variables", "generators", "nodes", "multiplicities", "order",
                                              "jets",      "c",          "flavor"};
  for (const auto& [key, value] : doc.items()) {
    if (std::find(known.begin(), known.end(), key) == known.end()) schema_error("/" + key, "unknown key");
  }

  ProblemFile file;
  MonomialOrder order = MonomialOrder::grevlex();
  if (doc.contains("order")) order = order_from_name(require_string(doc.at("order"), "/order"), "/order");

  const bool has_generators = doc.contains("generators");
  const bool has_nodes = doc.contains("nodes");
  if (has_generators == has_nodes) schema_error("", "exactly one of \"generators\" and \"nodes\" is required");
  if (has_generators && doc.contains("multiplicities")) schema_error("/multiplicities", "only allowed with \"nodes\"");

  std::size_t n = 0;
  if (has_generators) {
    n = require_array(doc.at("generators"), "/generators").size();
  } else {
    const Json& nodes = require_array(doc.at("nodes"), "/nodes");
    if (nodes.empty()) schema_error("/nodes", "expected at least one node");
    n = require_array(nodes[0], "/nodes/0").size();
  }
  if (n == 0) schema_error(has_generators ? "/generators" : "/nodes/0", "expected at least one entry");

  if (doc.contains("variables")) {
    const Json& vars = require_array(doc.at("variables"), "/variables");
    for (std::size_t k = 0; k < vars.size(); ++k) file.variables.push_back(require_string(vars[k], "/variables/" + std::to_string(k)));
    if (file.variables.size() != n) {
      schema_error("/variables", "expected " + std::to_string(n) + " names, got " + std::to_string(file.variables.size()));
    }
    at_pointer("/variables", [&] { validate_variable_names(file.variables); return 0; });
  } else {
    file.variables = default_variable_names(n);
  }

  if (has_generators) {
    std::vector<MultiPoly> gens;
    const Json& list = doc.at("generators");
    for (std::size_t k = 0; k < n; ++k) {
      const std::string pointer = "/generators/" + std::to_string(k);
      const std::string text = require_string(list[k], pointer);
      gens.push_back(at_pointer(pointer, [&] { return parse_poly(text, file.variables); }));
    }
    file.pres = at_pointer("/generators", [&] { return IdealPresentation(std::move(gens), order); });
  } else {
    const Json& nodes = doc.at("nodes");
    const Json& mults = require_array(require(doc, "multiplicities", ""), "/multiplicities");
    if (mults.size() != nodes.size()) schema_error("/multiplicities", "expected one multiplicity vector per node");
    for (std::size_t k = 0; k < nodes.size(); ++k) {
      const std::string idx = std::to_string(k);
      file.nodes.push_back(point_field(nodes[k], n, "/nodes/" + idx));
      Monomial nu = exponent_field(mults[k], n, "/multiplicities/" + idx);
      for (std::size_t j = 0; j < n; ++j) {
        if (nu[j] == 0) schema_error("/multiplicities/" + idx + "/" + std::to_string(j), "multiplicities must be positive");
      }
      file.multiplicities.push_back(std::move(nu));
    }
    file.pres = at_pointer("/nodes", [&] { return separated_presentation(file.nodes, file.multiplicities, order); });
  }

  if (doc.contains("jets")) {
    const Json& jets = require_array(doc.at("jets"), "/jets");
    for (std::size_t k = 0; k < jets.size(); ++k) file.jets.push_back(jet_field(jets[k], n, "/jets/" + std::to_string(k)));
  }
  if (doc.contains("c")) file.c = scalar_field(doc.at("c"), "/c");
  if (doc.contains("flavor")) {
    const std::string name = require_string(doc.at("flavor"), "/flavor");
    if (name != "noetherian" && name != "derivative") schema_error("/flavor", "flavor must be \"noetherian\" or \"derivative\"");
    file.flavor = flavor_from_name(name);
  }
  return file;
}

ProblemFile read_problem(const std::filesystem::path& path) {
  const std::string text = read_file(path);
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw CliError{"json_error", "malformed JSON in " + path.filename().string(), e.byte, Exit::input_error};
  }
  return parse_problem(doc);
}

InterpolationProblem to_problem(const ProblemFile& file) {
  if (!file.c) schema_error("/c", "missing required key");
  InterpolationProblem prob{*file.pres, file.jets, *file.c, file.flavor, file.nodes, file.multiplicities};
  validate_problem(prob);
  return prob;
}

InterpolationProblem load_problem(const std::filesystem::path& path) { return to_problem(read_problem(path)); }

Json to_json(const Scalar& x) { return x.to_string(); }

Json to_json(const SolutionSet& sol, const std::vector<std::string>& names) {
  Json out;
  out["variant"] = to_string(sol.kind);
  if (sol.kind != SolutionKind::hyperplane) return out;
  out["lambda"] = scalars_json(sol.lambda);
  out["c"] = to_json(sol.c);
  out["basis"] = format_basis(sol.basis, names);
  return out;
}

std::string emit_result(const Json& value, bool pretty) { return value.dump(pretty ? 2 : -1) + "\n"; }

int run_command(const std::vector<std::string>& args, std::ostream& out) {
  static const std::vector<std::pair<std::string, std::string>> described{
      {"gb", "reduced Groebner basis and standard monomials"},
      {"residue", "global residue of --poly"},
      {"local-residue", "local residue of --poly at --node"},
      {"qmat", "matrix of the residue quadratic form"},
      {"lag", "Lagrange interpolator of --poly or of the file's jets"},
      {"tau", "tau coefficients of the jets over the Euclid basis"},
      {"solve", "solution set of the interpolation problem"},
      {"verify", "check whether --poly solves the problem"}};
  std::vector<std::string> commands;
  for (const auto& [name, what] : described) commands.push_back(name);
  CLI::App app{"Exact residue and interpolation toolkit over Q(i)", "gres"};
  app.require_subcommand(1);
  Options opt;
  for (const auto& [name, what] : described) {
    CLI::App* sub = app.add_subcommand(name, what);
    sub->add_option("--input", opt.input, "problem file (JSON)")->required();
    sub->add_option("--format", opt.format, "json or pretty")->check(CLI::IsMember({"json", "pretty"}));
    if (name == "residue" || name == "local-residue" || name == "lag" || name == "verify") {
      sub->add_option("--poly", opt.poly, "polynomial in the problem's variables");
    }
    if (name == "local-residue") sub->add_option("--node", opt.node, "comma-separated coordinates of a zero");
  }

  bool pretty = false;
  Json result;
  try {
    if (args.empty() || (args[0] != "--help" && args[0] != "-h" &&
                         std::find(commands.begin(), commands.end(), args[0]) == commands.end())) {
      std::string list;
      for (const auto& name : commands) list += (list.empty() ? "" : ", ") + name;
      const std::string head = args.empty() ? "missing command" : "unknown command '" + args[0] + "'";
      throw CliError{"usage_error", head + "; expected one of " + list, std::nullopt, Exit::input_error};
    }
    try {
      std::vector<std::string> reversed(args.rbegin(), args.rend());
      app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
      out << app.help();
      return Exit::ok;
    } catch (const CLI::ParseError& e) {
      throw CliError{"usage_error", e.what(), std::nullopt, Exit::input_error};
    }
    pretty = opt.format == "pretty";
    const std::string command = app.get_subcommands().front()->get_name();
    result = dispatch(command, opt);
  } catch (const CliError& e) {
    out << emit_result(error_json(e.kind, e.message, e.position), pretty);
    return e.exit_code;
  } catch (const Error& e) {
    out << emit_result(error_json(std::string(to_string(e.kind())), e.what(), e.position()), pretty);
    if (e.kind() == ErrorKind::invariant_violation) return Exit::internal;
    return is_precondition_failure(e.kind()) ? Exit::precondition : Exit::input_error;
  } catch (const std::exception& e) {
    out << emit_result(error_json("internal_error", e.what(), std::nullopt), pretty);
    return Exit::internal;
  }
  Json doc;
  doc["status"] = "ok";
  doc["result"] = std::move(result);
  out << emit_result(doc, pretty);
  return Exit::ok;
}

}  // namespace gres::cli
