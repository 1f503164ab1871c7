#include <sstream>

#include "monoalg/cli.hpp"

namespace monoalg::cli {

namespace {

bool is_scalar(const json& x) { return !x.is_array() && !x.is_object(); }

std::string scalar(const json& x) {
  if (x.is_string()) return x.get<std::string>();
  if (x.is_null()) return "-";
  return x.dump();
}

bool flat_array(const json& x) {
  if (!x.is_array()) return false;
  for (const auto& e : x)
    if (!is_scalar(e)) return false;
  return true;
}

std::string inline_array(const json& x) {
  std::string s = "(";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) s += ", ";
    s += flat_array(x[i]) ? inline_array(x[i]) : scalar(x[i]);
  }
  return s + ")";
}

// An array whose elements are all flat arrays (vector lists, matrices, polynomial rows).
bool table(const json& x) {
  if (!x.is_array() || x.empty()) return false;
  for (const auto& e : x) {
    if (!e.is_array()) return false;
    for (const auto& f : e)
      if (!is_scalar(f) && !flat_array(f)) return false;
  }
  return true;
}

void emit(std::ostringstream& out, const json& x, int indent);

void emit_entry(std::ostringstream& out, const std::string& key, const json& v, int indent) {
  const std::string pad(indent, ' ');
  if (key == "staircase" && v.is_array()) {
    out << pad << key << ":\n";
    for (const auto& line : v) out << pad << "  " << line.get<std::string>() << "\n";
  } else if (is_scalar(v)) {
    out << pad << key << ": " << scalar(v) << "\n";
  } else if (v.empty()) {
    out << pad << key << ": " << (v.is_array() ? "[]" : "{}") << "\n";
  } else if (flat_array(v)) {
    out << pad << key << ": " << inline_array(v) << "\n";
  } else if (table(v)) {
    out << pad << key << ":\n";
    for (const auto& row : v) out << pad << "  " << inline_array(row) << "\n";
  } else {
    out << pad << key << ":\n";
    emit(out, v, indent + 2);
  }
}

void emit(std::ostringstream& out, const json& x, int indent) {
  const std::string pad(indent, ' ');
  if (x.is_object()) {
    for (const auto& [k, v] : x.items()) emit_entry(out, k, v, indent);
  } else if (x.is_array()) {
    for (std::size_t i = 0; i < x.size(); ++i) emit_entry(out, "[" + std::to_string(i) + "]", x[i], indent);
  } else {
    out << pad << scalar(x) << "\n";
  }
}

}  // namespace

std::string render_text(const json& report) {
  std::ostringstream out;
  out << "command: " << scalar(report.value("command", json(""))) << "\n";
  out << "input_hash: " << scalar(report.value("input_hash", json(""))) << "\n";
  if (report.contains("error")) {
    const auto& e = report["error"];
    out << "error (" << scalar(e["kind"]) << "): " << scalar(e["message"]) << "\n";
    if (!e["witness"].is_null()) out << "witness: " << inline_array(e["witness"]) << "\n";
  }
  if (report.contains("results")) {
    out << "results:\n";
    emit(out, report["results"], 2);
  }
  for (const auto& w : report.value("warnings", json::array())) out << "warning: " << scalar(w) << "\n";
  return out.str();
}

}  // namespace monoalg::cli
