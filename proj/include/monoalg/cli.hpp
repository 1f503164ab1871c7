#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "monoalg/oracle.hpp"

namespace monoalg::cli {

using json = nlohmann::json;

struct ProblemFile {
  std::size_t rank = 0;
  std::vector<LatticeVector> semigroup_generators;
  std::vector<LatticeVector> ideal_generators;
  std::optional<Integer> bound;
  std::optional<std::vector<LatticeVector>> basis_order_override;
};

/// Errors: invalid_input, with line and column for malformed JSON.
ProblemFile parse_problem(const std::string& text);

/// FNV-1a 64-bit, 16 hex digits.
std::string input_hash(const std::string& bytes);

struct Options {
  std::optional<Integer> bound;
  std::vector<Rational> torus;
  std::optional<Rational> param;
  std::optional<LatticeVector> alpha;
  std::optional<RationalDualVector> p;
  std::uint64_t seed = 1;
  std::size_t count = 20;
  std::size_t fuzz_rank = 2;
  std::size_t max_dim = default_max_complement;
};

/// Parsers for flag values: "1,-2,3" and "1/2,3".
LatticeVector parse_lattice_vector(const std::string& s);
std::vector<Rational> parse_rationals(const std::string& s);

// Each command returns the "results" object; warnings are appended to `warnings`.
json cmd_analyze(const ProblemFile& f, const Options& o, std::vector<std::string>& warnings);
json cmd_roots(const ProblemFile& f, const Options& o, std::vector<std::string>& warnings);
json cmd_lnds(const ProblemFile& f, const Options& o, std::vector<std::string>& warnings);
json cmd_aut(const ProblemFile& f, const Options& o, std::vector<std::string>& warnings);
json cmd_oracle(const ProblemFile& f, const Options& o, std::vector<std::string>& warnings);
json cmd_witness(const ProblemFile& f, const Options& o, std::vector<std::string>& warnings);
json cmd_exp(const ProblemFile& f, const Options& o, std::vector<std::string>& warnings);
json cmd_fuzz(const Options& o, std::vector<std::string>& warnings);

/// Full report {command, input_hash, results, warnings} or {command, input_hash, error, warnings}.
/// Sets exit_code to 0 or the ErrorKind value.
json run(const std::string& command, const std::string& input, const Options& o, int& exit_code);

/// Deterministic plain-text rendering of a report.
std::string render_text(const json& report);

// JSON encodings shared by the commands.
json to_json(const Integer& x);
json to_json(const Rational& q);
json to_json(const LatticeVector& v);
json to_json(const DualVector& v);
json to_json(const RationalDualVector& v);
json to_json(const RationalMatrix& m);
json to_json(const IntMatrix& m);
json to_json(const ParametricMatrix& m);

}  // namespace monoalg::cli
