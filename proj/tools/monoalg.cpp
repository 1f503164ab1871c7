// monoalg: command-line front end for the monomial-algebra library.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "monoalg/cli.hpp"

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) monoalg::fail(monoalg::ErrorKind::invalid_input, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::size_t max_dim_from_env() {
  const char* v = std::getenv("MONOALG_MAX_DIM");
  if (!v || !*v) return monoalg::default_max_complement;
  char* end = nullptr;
  const unsigned long long n = std::strtoull(v, &end, 10);
  if (*end != '\0' || n == 0) monoalg::fail(monoalg::ErrorKind::invalid_input, "MONOALG_MAX_DIM must be a positive integer");
  return static_cast<std::size_t>(n);
}

}  // namespace

int main(int argc, char** argv) {
  namespace mc = monoalg::cli;
  CLI::App app{"Automorphisms and derivations of zero-dimensional monomial algebras K[S]/I"};
  app.require_subcommand(1);

  std::string format = "json";
  std::string bound, torus, param, alpha, p;
  std::uint64_t seed = 1;
  std::size_t count = 20, rank = 2;
  std::string file;

  struct Sub {
    const char* name;
    const char* help;
  };
  const Sub subs[] = {
      {"analyze", "validate the semigroup and report ideal invariants"},
      {"roots", "Demazure roots and the roots of the ideal in a box"},
      {"lnds", "degrees of non-trivial homogeneous locally nilpotent derivations"},
      {"aut", "generators of the automorphism group"},
      {"oracle", "compare the classification with all derivations"},
      {"witness", "non-liftable derivation witness"},
      {"exp", "derivation and exponential matrices for one (alpha, p)"},
  };
  app.fallthrough();  // global options may follow the subcommand
  for (const auto& s : subs) {
    auto* cmd = app.add_subcommand(s.name, s.help);
    cmd->add_option("file", file, "problem file (JSON)")->required();
  }
  auto* fuzz = app.add_subcommand("fuzz", "oracle comparison on random full cofinite ideals");
  fuzz->add_option("--count", count, "number of ideals");
  fuzz->add_option("--rank", rank, "ambient rank");

  app.add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--bound", bound, "box bound for root and degree enumeration (default 8)");
  app.add_option("--torus", torus, "torus point, comma separated rationals");
  app.add_option("--param", param, "unipotent parameter s (default 1)");
  app.add_option("--alpha", alpha, "degree, comma separated integers");
  app.add_option("--p", p, "functional, comma separated rationals");
  app.add_option("--seed", seed, "random seed for fuzz");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  mc::Options opts;
  std::string input;
  int code = 0;
  nlohmann::json report;
  try {
    opts.seed = seed;
    opts.count = count;
    opts.fuzz_rank = rank;
    opts.max_dim = max_dim_from_env();
    if (!bound.empty()) {
      opts.bound = monoalg::Integer();
      if (opts.bound->set_str(bound, 10) != 0 || *opts.bound < 1)
        monoalg::fail(monoalg::ErrorKind::invalid_input, "--bound must be a positive integer");
    }
    if (!torus.empty()) opts.torus = mc::parse_rationals(torus);
    if (!param.empty()) {
      const auto v = mc::parse_rationals(param);
      if (v.size() != 1) monoalg::fail(monoalg::ErrorKind::invalid_input, "--param takes one rational");
      opts.param = v.front();
    }
    if (!alpha.empty()) opts.alpha = mc::parse_lattice_vector(alpha);
    if (!p.empty()) opts.p = monoalg::RationalDualVector(mc::parse_rationals(p));
    if (command != "fuzz") input = slurp(file);
    report = mc::run(command, input, opts, code);
  } catch (const monoalg::Error& e) {
    static const char* kind_names[] = {"", "invalid_input", "precondition", "internal"};
    report = {{"command", command},
              {"input_hash", mc::input_hash(input)},
              {"error", {{"kind", kind_names[static_cast<int>(e.kind())]},
                         {"message", e.what()},
                         {"witness", nullptr}}},
              {"warnings", nlohmann::json::array()}};
    code = static_cast<int>(e.kind());
  }

  if (format == "text")
    std::cout << mc::render_text(report);
  else
    std::cout << report.dump(2) << "\n";
  if (code != 0 && report.contains("error"))
    std::cerr << "monoalg: " << report["error"]["message"].get<std::string>() << "\n";
  return code;
}
