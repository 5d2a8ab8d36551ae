#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "gres/gres.hpp"
#include "json.hpp"

namespace gres::cli {

using Json = nlohmann::ordered_json;

/// Exit codes of run_command.
enum Exit : int { ok = 0, internal = 1, input_error = 2, precondition = 3 };

/// An input problem as read from a JSON file: the system, either given by
/// generators or built from nodes and multiplicities, plus optional jets and
/// right-hand side.
struct ProblemFile {
  std::vector<std::string> variables;
  std::optional<IdealPresentation> pres;
  std::vector<Point> nodes;
  std::vector<Monomial> multiplicities;
  std::vector<Jet> jets;
  std::optional<Scalar> c;
  Flavor flavor = Flavor::noetherian;

  bool separated() const { return !nodes.empty(); }
};

/// Parses and schema-checks a problem document. Schema violations name the
/// offending JSON pointer.
ProblemFile parse_problem(const Json& doc);
ProblemFile read_problem(const std::filesystem::path& path);

/// A complete interpolation problem: requires c, checks every node.
InterpolationProblem load_problem(const std::filesystem::path& path);
InterpolationProblem to_problem(const ProblemFile& file);

/// JSON serialization of results.
Json to_json(const Scalar& x);
Json to_json(const SolutionSet& sol, const std::vector<std::string>& names);

/// Serialized document followed by a newline.
std::string emit_result(const Json& value, bool pretty = false);

/// Runs one subcommand; args excludes the program name. Writes exactly one
/// JSON document to out and returns the exit code.
int run_command(const std::vector<std::string>& args, std::ostream& out);

}  // namespace gres::cli
