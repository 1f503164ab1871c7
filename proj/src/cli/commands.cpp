#include <set>

#include "monoalg/cli.hpp"

namespace monoalg::cli {

json to_json(const Integer& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

json to_json(const Rational& q) { return to_string(q); }

json to_json(const LatticeVector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

json to_json(const DualVector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

json to_json(const RationalDualVector& v) {
  json a = json::array();
  for (const auto& x : v.coords()) a.push_back(to_json(x));
  return a;
}

json to_json(const RationalMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json r = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(to_json(m(i, j)));
    rows.push_back(std::move(r));
  }
  return rows;
}

json to_json(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json r = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(to_json(m(i, j)));
    rows.push_back(std::move(r));
  }
  return rows;
}

// Entry (i, j) is the coefficient list of a polynomial in s, lowest degree first, trailing zeros dropped.
json to_json(const ParametricMatrix& m) {
  json rows = json::array();
  if (m.coefficients.empty()) return rows;
  const auto& c0 = m.coefficients.front();
  for (std::size_t i = 0; i < c0.rows(); ++i) {
    json r = json::array();
    for (std::size_t j = 0; j < c0.cols(); ++j) {
      std::size_t len = m.coefficients.size();
      while (len > 0 && m.coefficients[len - 1](i, j) == 0) --len;
      json poly = json::array();
      for (std::size_t k = 0; k < len; ++k) poly.push_back(to_json(m.coefficients[k](i, j)));
      r.push_back(std::move(poly));
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

namespace {

template <class V>
json list(const std::vector<V>& vs) {
  json a = json::array();
  for (const auto& v : vs) a.push_back(to_json(v));
  return a;
}

MonomialIdeal load(const ProblemFile& f) {
  AffineSemigroup s = AffineSemigroup::build(f.rank, f.semigroup_generators);
  return MonomialIdeal(std::move(s), f.ideal_generators);
}

Integer root_bound(const ProblemFile& f, const Options& o) {
  if (o.bound) return *o.bound;
  if (f.bound) return *f.bound;
  return 8;
}

/// Output position -> basis index.
std::vector<std::size_t> output_order(const QuotientAlgebra& q, const ProblemFile& f) {
  std::vector<std::size_t> order;
  if (!f.basis_order_override) {
    for (std::size_t i = 0; i < q.dim(); ++i) order.push_back(i);
    return order;
  }
  const auto& labels = *f.basis_order_override;
  std::set<std::size_t> used;
  for (const auto& m : labels) {
    const auto idx = m.size() == q.semigroup().rank() ? q.basis().index_of(m) : std::nullopt;
    if (!idx) fail(ErrorKind::invalid_input, "basis_order_override: " + to_string(m) + " is not a basis label");
    if (!used.insert(*idx).second)
      fail(ErrorKind::invalid_input, "basis_order_override: " + to_string(m) + " listed twice");
    order.push_back(*idx);
  }
  if (order.size() != q.dim())
    fail(ErrorKind::invalid_input, "basis_order_override must list all " + std::to_string(q.dim()) + " basis labels");
  return order;
}

RationalMatrix reorder(const RationalMatrix& m, const std::vector<std::size_t>& order) {
  RationalMatrix out(m.rows(), m.cols());
  for (std::size_t a = 0; a < order.size(); ++a)
    for (std::size_t b = 0; b < order.size(); ++b) out(a, b) = m(order[a], order[b]);
  return out;
}

ParametricMatrix reorder(const ParametricMatrix& m, const std::vector<std::size_t>& order) {
  ParametricMatrix out;
  for (const auto& c : m.coefficients) out.coefficients.push_back(reorder(c, order));
  return out;
}

json basis_labels(const QuotientAlgebra& q, const std::vector<std::size_t>& order) {
  json a = json::array();
  for (auto i : order) a.push_back(to_json(q.basis()[i]));
  return a;
}

json degree_json(const LndDegreeReport& r) {
  return json{{"alpha", to_json(r.alpha)},
              {"case", case_name(r.kind)},
              {"g_basis", list(r.g_basis)},
              {"k_basis", list(r.k_basis)},
              {"effective_basis", list(r.effective_basis)},
              {"effective_dim", r.effective_dim},
              {"bounded_search", r.bounded_search}};
}

json roots_json(const RootSet& r) {
  json a = json::array();
  for (std::size_t i = 0; i < r.rays.size(); ++i)
    a.push_back(json{{"rho", to_json(r.rays[i])}, {"roots", list(r.roots[i])}});
  return a;
}

std::vector<std::string> staircase(const MonomialIdeal& ideal, const ComplementBasis& c) {
  Integer xmax = 0, ymax = 0;
  for (const auto& m : c.elements()) {
    xmax = std::max(xmax, m[0]);
    ymax = std::max(ymax, m[1]);
  }
  std::vector<std::string> lines;
  for (long y = ymax.get_si() + 1; y >= 0; --y) {
    std::string line;
    for (long x = 0; x <= xmax.get_si() + 1; ++x) {
      const LatticeVector m{x, y};
      line += c.index_of(m) ? 'o' : ideal.in_supp(m) ? '#' : '.';
    }
    lines.push_back(line);
  }
  return lines;
}

}  // namespace

json cmd_analyze(const ProblemFile& f, const Options& o, std::vector<std::string>& warnings) {
  const MonomialIdeal ideal = load(f);
  const AffineSemigroup& s = ideal.semigroup();
  json sg{{"rank", s.rank()},
          {"generators", list(s.generators())},
          {"pointed", true},
          {"saturated", true},
          {"minimally_embedded", true},
          {"simplicial", s.is_simplicial()},
          {"first_octant", s.is_first_octant()},
          {"dual_rays", list(s.dual_rays())},
          {"ray_generators", list(s.ray_generators())},
          {"hilbert_basis", list(s.hilbert_basis())}};

  const auto cert = is_cofinite(ideal);
  json certificate = json::array();
  for (const auto& [ray, k] : cert.multiples) certificate.push_back(json{{"ray", to_json(ray)}, {"k", to_json(k)}});
  json id{{"generators", list(ideal.generators())},
          {"zero", ideal.is_zero()},
          {"full", is_full(ideal)},
          {"cofinite", cert.cofinite},
          {"certificate", certificate},
          {"failing_ray", cert.failing_ray ? to_json(*cert.failing_ray) : json(nullptr)},
          {"complement_size", nullptr},
          {"complement", nullptr}};
  if (cert.cofinite) {
    try {
      const ComplementBasis c = complement(ideal, o.max_dim);
      id["complement_size"] = c.size();
      id["complement"] = list(c.elements());
      if (s.rank() == 2) id["staircase"] = staircase(ideal, c);
    } catch (const Error& e) {
      warnings.push_back(e.what());
    }
  }
  return json{{"semigroup", sg}, {"ideal", id}};
}

json cmd_roots(const ProblemFile& f, const Options& o, std::vector<std::string>&) {
  const MonomialIdeal ideal = load(f);
  const Integer b = root_bound(f, o);
  const RootSet all = demazure_roots(ideal.semigroup(), b);
  const RootSet mine = roots_of_ideal(ideal, b);
  return json{{"bound", to_json(b)},
              {"demazure_roots", roots_json(all)},
              {"ideal_roots", roots_json(mine)},
              {"ideal_root_list", list(mine.all())}};
}

json cmd_lnds(const ProblemFile& f, const Options& o, std::vector<std::string>& warnings) {
  const MonomialIdeal ideal = load(f);
  const bool cofinite = is_cofinite(ideal).cofinite;
  std::optional<Integer> b;
  if (!cofinite) {
    b = root_bound(f, o);
    warnings.push_back("bounded search: support is not cofinite, degrees scanned in [-" + b->get_str() + ", " +
                       b->get_str() + "]^" + std::to_string(ideal.semigroup().rank()));
  }
  json degrees = json::array();
  for (const auto& r : lnd_degrees(ideal, b, o.max_dim)) degrees.push_back(degree_json(r));
  return json{{"exact", cofinite}, {"bound", b ? to_json(*b) : json(nullptr)}, {"degrees", degrees}};
}

json cmd_aut(const ProblemFile& f, const Options& o, std::vector<std::string>& warnings) {
  const QuotientAlgebra q = QuotientAlgebra::build(load(f), o.max_dim);
  const auto order = output_order(q, f);
  const std::size_t n = q.semigroup().rank();
  const std::vector<Rational> t = o.torus.empty() ? sample_torus(n) : o.torus;
  const Rational s = o.param.value_or(Rational(1));
  const AutGenerators gens = aut_generators(q);
  warnings.insert(warnings.end(), gens.warnings.begin(), gens.warnings.end());

  std::vector<std::size_t> position(q.dim());
  for (std::size_t a = 0; a < order.size(); ++a) position[order[a]] = a;

  json families = json::array();
  for (const auto& fam : gens.unipotent_families) {
    const ParametricMatrix pm = reorder(fam.matrix, order);
    families.push_back(json{{"alpha", to_json(fam.alpha)},
                            {"direction", to_json(fam.direction)},
                            {"parametric", to_json(pm)},
                            {"specialized", to_json(pm.specialize(s))}});
  }
  json toric = json::array();
  for (const auto& g : gens.toric) {
    json perm = json::array();
    for (std::size_t a = 0; a < order.size(); ++a) perm.push_back(position[g.permutation[order[a]]]);
    toric.push_back(json{{"lattice_map", to_json(g.lattice_map)},
                         {"permutation", perm},
                         {"matrix", to_json(reorder(g.matrix(), order))}});
  }
  json weights = json::array();
  for (auto i : order) weights.push_back(to_json(gens.torus_weights[i]));
  return json{{"dim", q.dim()},
              {"fullified", q.fullified()},
              {"basis", basis_labels(q, order)},
              {"torus_point", list(t)},
              {"torus_weights", weights},
              {"torus_matrix", to_json(reorder(torus_matrix(q, t), order))},
              {"param", to_json(s)},
              {"unipotent_families", families},
              {"toric", toric},
              {"first_octant_certified", gens.first_octant_certified},
              {"opposite_root_weights", list(gens.opposite_root_weights)}};
}

json cmd_oracle(const ProblemFile& f, const Options& o, std::vector<std::string>& warnings) {
  const QuotientAlgebra q = QuotientAlgebra::build(load(f), o.max_dim);
  warnings.insert(warnings.end(), q.notices().begin(), q.notices().end());
  const GradedComparisonReport r = compare_with_classification(q);
  json degrees = json::array();
  for (const auto& c : r.degrees)
    degrees.push_back(json{{"alpha", to_json(c.alpha)},
                           {"oracle_dim", c.oracle_dim},
                           {"classified_dim", c.classified_dim},
                           {"match", c.match}});
  if (!r.extras.empty()) warnings.push_back("non-liftable candidates: oracle finds more nilpotent derivations than "
                                            "the classification in " + std::to_string(r.extras.size()) + " degrees");
  return json{{"dim", q.dim()},
              {"derivation_dim", r.derivation_dim},
              {"first_octant", q.semigroup().is_first_octant()},
              {"degrees", degrees},
              {"extras", list(r.extras)},
              {"mismatch_count", r.mismatches().size()}};
}

json cmd_witness(const ProblemFile& f, const Options&, std::vector<std::string>&) {
  const AffineSemigroup s = AffineSemigroup::build(f.rank, f.semigroup_generators);
  const NonLiftableWitness w = non_liftable_witness(s);
  json violated = json::array();
  for (const auto& [rho, v] : w.violated) violated.push_back(json{{"rho", to_json(rho)}, {"value", to_json(v)}});
  return json{{"ideal_generators", list(w.ideal.generators())},
              {"source", to_json(w.source)},
              {"target", to_json(w.target)},
              {"alpha", to_json(w.alpha)},
              {"violated", violated},
              {"branch", w.simplicial_branch ? "simplicial" : "non-simplicial"}};
}

json cmd_exp(const ProblemFile& f, const Options& o, std::vector<std::string>& warnings) {
  if (!o.alpha || !o.p) fail(ErrorKind::invalid_input, "exp needs --alpha and --p");
  const QuotientAlgebra q = QuotientAlgebra::build(load(f), o.max_dim);
  warnings.insert(warnings.end(), q.notices().begin(), q.notices().end());
  const auto order = output_order(q, f);
  const LndVerdict v = classify_lnd(q.ideal(), *o.alpha, *o.p);
  const Rational s = o.param.value_or(Rational(1));
  const RationalMatrix d = derivation_matrix(q, *o.alpha, *o.p);
  const ParametricMatrix pm = exp_parametric(q, *o.alpha, *o.p);
  const RationalMatrix e = pm.specialize(s);
  return json{{"alpha", to_json(*o.alpha)},
              {"p", to_json(*o.p)},
              {"param", to_json(s)},
              {"basis", basis_labels(q, order)},
              {"locally_nilpotent", v.locally_nilpotent},
              {"case", case_name(v.branch)},
              {"derivation_matrix", to_json(reorder(d, order))},
              {"parametric", to_json(reorder(pm, order))},
              {"exp_matrix", to_json(reorder(e, order))},
              {"is_automorphism", is_algebra_automorphism(q, e)}};
}

json cmd_fuzz(const Options& o, std::vector<std::string>&) {
  std::mt19937_64 rng(o.seed);
  json cases = json::array();
  std::size_t mismatches = 0, extras = 0;
  for (std::size_t k = 0; k < o.count; ++k) {
    const MonomialIdeal ideal = random_full_cofinite_ideal(rng, o.fuzz_rank, 60);
    const GradedComparisonReport r = compare_with_classification(ideal);
    mismatches += r.mismatches().size();
    extras += r.extras.size();
    cases.push_back(json{{"ideal_generators", list(ideal.generators())},
                         {"derivation_dim", r.derivation_dim},
                         {"mismatch_count", r.mismatches().size()},
                         {"extras", list(r.extras)}});
  }
  return json{{"seed", o.seed},
              {"rank", o.fuzz_rank},
              {"count", o.count},
              {"cases", cases},
              {"total_mismatches", mismatches},
              {"total_extras", extras}};
}

json run(const std::string& command, const std::string& input, const Options& o, int& exit_code) {
  json report{{"command", command}, {"input_hash", input_hash(input)}};
  std::vector<std::string> warnings;
  auto error = [&](const std::string& kind, const std::string& message, const json& witness) {
    report["error"] = json{{"kind", kind}, {"message", message}, {"witness", witness}};
  };
  try {
    json results;
    if (command == "fuzz") {
      results = cmd_fuzz(o, warnings);
    } else {
      const ProblemFile f = parse_problem(input);
      if (command == "analyze")
        results = cmd_analyze(f, o, warnings);
      else if (command == "roots")
        results = cmd_roots(f, o, warnings);
      else if (command == "lnds")
        results = cmd_lnds(f, o, warnings);
      else if (command == "aut")
        results = cmd_aut(f, o, warnings);
      else if (command == "oracle")
        results = cmd_oracle(f, o, warnings);
      else if (command == "witness")
        results = cmd_witness(f, o, warnings);
      else if (command == "exp")
        results = cmd_exp(f, o, warnings);
      else
        fail(ErrorKind::invalid_input, "unknown command \"" + command + "\"");
    }
    report["results"] = std::move(results);
    exit_code = 0;
  } catch (const Error& e) {
    static const char* names[] = {"", "invalid_input", "precondition", "internal"};
    json witness = e.witness().empty() ? json(nullptr) : to_json(LatticeVector(e.witness()));
    error(names[static_cast<int>(e.kind())], e.what(), witness);
    exit_code = static_cast<int>(e.kind());
  } catch (const std::exception& e) {
    error("internal", e.what(), nullptr);
    exit_code = 3;
  }
  report["warnings"] = warnings;
  return report;
}

}  // namespace monoalg::cli
