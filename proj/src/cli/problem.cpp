#include <cstdio>
#include <sstream>

#include "monoalg/cli.hpp"

namespace monoalg::cli {

namespace {

std::pair<std::size_t, std::size_t> line_col(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

Integer parse_integer(const json& x, const std::string& where) {
  if (x.is_number_integer()) return Integer(x.dump());
  if (x.is_string()) {
    Integer v;
    if (v.set_str(x.get<std::string>(), 10) == 0) return v;
  }
  fail(ErrorKind::invalid_input, where + ": expected an integer, got " + x.dump());
}

LatticeVector parse_vector(const json& x, std::size_t rank, const std::string& where) {
  if (!x.is_array()) fail(ErrorKind::invalid_input, where + ": expected an array of integers");
  if (x.size() != rank)
    fail(ErrorKind::invalid_input,
         where + ": expected length " + std::to_string(rank) + ", got " + std::to_string(x.size()));
  LatticeVector v(rank);
  for (std::size_t i = 0; i < rank; ++i) v[i] = parse_integer(x[i], where);
  return v;
}

std::vector<LatticeVector> parse_vectors(const json& x, std::size_t rank, const std::string& key) {
  if (!x.is_array()) fail(ErrorKind::invalid_input, key + ": expected an array of vectors");
  std::vector<LatticeVector> out;
  for (std::size_t i = 0; i < x.size(); ++i)
    out.push_back(parse_vector(x[i], rank, key + "[" + std::to_string(i) + "]"));
  return out;
}

}  // namespace

ProblemFile parse_problem(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    const std::size_t byte = e.byte > 0 ? e.byte - 1 : 0;
    const auto [line, col] = line_col(text, byte);
    fail(ErrorKind::invalid_input, "parse error at line " + std::to_string(line) + ", column " +
                                       std::to_string(col) + ": " + e.what());
  }
  if (!doc.is_object()) fail(ErrorKind::invalid_input, "problem file must be a JSON object");
  for (const auto& [key, value] : doc.items()) {
    (void)value;
    if (key != "rank" && key != "semigroup_generators" && key != "ideal_generators" && key != "bound" &&
        key != "basis_order_override")
      fail(ErrorKind::invalid_input, "unknown key \"" + key + "\"");
  }
  for (const char* key : {"rank", "semigroup_generators", "ideal_generators"})
    if (!doc.contains(key)) fail(ErrorKind::invalid_input, std::string("missing key \"") + key + "\"");

  ProblemFile f;
  if (!doc["rank"].is_number_unsigned()) fail(ErrorKind::invalid_input, "rank: expected a non-negative integer");
  f.rank = doc["rank"].get<std::size_t>();
  if (f.rank > 6) fail(ErrorKind::invalid_input, "rank " + std::to_string(f.rank) + " exceeds the supported maximum 6");
  f.semigroup_generators = parse_vectors(doc["semigroup_generators"], f.rank, "semigroup_generators");
  if (f.semigroup_generators.empty() && f.rank > 0)
    fail(ErrorKind::invalid_input, "semigroup_generators: empty generating set");
  f.ideal_generators = parse_vectors(doc["ideal_generators"], f.rank, "ideal_generators");
  if (doc.contains("bound") && !doc["bound"].is_null()) {
    f.bound = parse_integer(doc["bound"], "bound");
    if (*f.bound < 1) fail(ErrorKind::invalid_input, "bound must be at least 1");
  }
  if (doc.contains("basis_order_override") && !doc["basis_order_override"].is_null())
    f.basis_order_override = parse_vectors(doc["basis_order_override"], f.rank, "basis_order_override");
  return f;
}

std::string input_hash(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

LatticeVector parse_lattice_vector(const std::string& s) {
  std::vector<Integer> coords;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    Integer v;
    if (item.empty() || v.set_str(item, 10) != 0) fail(ErrorKind::invalid_input, "bad integer \"" + item + "\"");
    coords.push_back(v);
  }
  return LatticeVector(std::move(coords));
}

std::vector<Rational> parse_rationals(const std::string& s) {
  std::vector<Rational> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    Rational q;
    if (item.empty() || q.set_str(item, 10) != 0 || q.get_den() == 0)
      fail(ErrorKind::invalid_input, "bad rational \"" + item + "\"");
    q.canonicalize();
    out.push_back(q);
  }
  return out;
}

}  // namespace monoalg::cli
