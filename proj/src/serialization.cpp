#include "veesys/serialization.hpp"

#include <json.hpp>

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace veesys {
namespace {

using nlohmann::json;

[[noreturn]] void parse_error(const std::string& message) {
  throw Error(ErrorCode::ParseError, message);
}

/// Turns -0.0 into 0.0 so equal values print identically.
double clean(double x) { return x + 0.0; }

json vector_json(const Vector& v) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(clean(v[i]));
  return a;
}

json matrix_json(const Matrix& m) {
  json a = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) a.push_back(vector_json(m.row(i).transpose()));
  return a;
}

void write_rows(std::ostringstream& os, const json& rows) {
  os << "[";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    os << (i ? ",\n    " : "\n    ") << rows[i].dump();
  }
  os << (rows.empty() ? "]" : "\n  ]");
}

Vector read_vector(const json& j, int expected, const std::string& what) {
  if (!j.is_array()) parse_error(what + " must be an array of numbers");
  if (expected >= 0 && static_cast<int>(j.size()) != expected) {
    parse_error(what + " has " + std::to_string(j.size()) + " entries, expected " +
                std::to_string(expected));
  }
  Vector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number()) parse_error(what + " contains a non-number");
    v[static_cast<Eigen::Index>(i)] = j[i].get<double>();
    if (!std::isfinite(v[static_cast<Eigen::Index>(i)])) parse_error(what + " contains a non-finite value");
  }
  return v;
}

json certificate_object(const Certificate& c) {
  json pairing = json::array();
  for (const auto& p : c.pairing) pairing.push_back({{"target", p.target}, {"sign", p.sign}});
  return {{"map", matrix_json(c.map)}, {"pairing", pairing}, {"max_error", c.max_error}};
}

}  // namespace

std::string to_json(const CovectorSystem& system) {
  json params = json::object();
  for (const auto& [k, v] : system.params) params[k] = clean(v);
  json covectors = json::array();
  for (const auto& c : system.covectors) covectors.push_back(vector_json(c));

  std::ostringstream os;
  os << "{\n  \"covectors\": ";
  write_rows(os, covectors);
  os << ",\n  \"dim\": " << system.dim;
  if (system.embedding.size() != 0) {
    os << ",\n  \"embedding\": ";
    write_rows(os, matrix_json(system.embedding));
  }
  os << ",\n  \"name\": " << json(system.name).dump();
  os << ",\n  \"params\": " << params.dump() << "\n}\n";
  return os.str();
}

CovectorSystem from_json(std::string_view text, const TolerancePolicy& policy) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    parse_error(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) parse_error("system file must be a JSON object");
  if (!doc.contains("dim") || !doc["dim"].is_number_integer() || doc["dim"].get<int>() <= 0) {
    parse_error("field 'dim' must be a positive integer");
  }
  const int dim = doc["dim"].get<int>();
  if (!doc.contains("covectors") || !doc["covectors"].is_array()) {
    parse_error("field 'covectors' must be an array");
  }
  std::vector<Covector> covectors;
  for (std::size_t i = 0; i < doc["covectors"].size(); ++i) {
    covectors.push_back(read_vector(doc["covectors"][i], dim, "covector " + std::to_string(i)));
  }
  std::string name;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) parse_error("field 'name' must be a string");
    name = doc["name"].get<std::string>();
  }
  std::map<std::string, double> params;
  if (doc.contains("params")) {
    if (!doc["params"].is_object()) parse_error("field 'params' must be an object");
    for (const auto& [k, v] : doc["params"].items()) {
      if (!v.is_number()) parse_error("parameter '" + k + "' must be a number");
      params[k] = v.get<double>();
    }
  }
  CovectorSystem sys = make_system(std::move(name), dim, covectors, std::move(params), policy);
  if (doc.contains("embedding")) {
    const json& e = doc["embedding"];
    if (!e.is_array() || static_cast<int>(e.size()) != dim || e.empty()) {
      parse_error("field 'embedding' must have one row per dimension");
    }
    const int outer = e[0].is_array() ? static_cast<int>(e[0].size()) : 0;
    if (outer < dim) parse_error("embedding rows are shorter than dim");
    sys.embedding = Matrix(dim, outer);
    for (int r = 0; r < dim; ++r) {
      sys.embedding.row(r) = read_vector(e[r], outer, "embedding row " + std::to_string(r)).transpose();
    }
  }
  return sys;
}

CovectorSystem load_system(const std::string& path, const TolerancePolicy& policy) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return from_json(buf.str(), policy);
}

void save_system(const std::string& path, const CovectorSystem& system) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::IoError, "cannot write '" + path + "'");
  out << to_json(system);
  if (!out) throw Error(ErrorCode::IoError, "write to '" + path + "' failed");
}

Covector parse_covector_literal(std::string_view text, const CovectorSystem& system) {
  const int outer = system.ambient_dim();
  Vector v = Vector::Zero(outer);
  std::size_t pos = 0;
  int terms = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  const std::string quoted = "'" + std::string(text) + "'";
  skip();
  while (pos < text.size()) {
    double sign = 1.0;
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1.0 : 1.0;
      ++pos;
      skip();
    } else if (terms > 0) {
      parse_error("expected + or - between terms in " + quoted);
    }
    const std::size_t start = pos;
    while (pos < text.size() && (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '.')) ++pos;
    double coef = 1.0;
    if (pos > start) {
      auto [ptr, ec] = std::from_chars(text.data() + start, text.data() + pos, coef);
      if (ec != std::errc{} || ptr != text.data() + pos) parse_error("bad coefficient in " + quoted);
    }
    skip();
    if (pos < text.size() && text[pos] == '*') {
      ++pos;
      skip();
    }
    if (pos >= text.size() || text[pos] != 'e') parse_error("expected e<index> in " + quoted);
    ++pos;
    const std::size_t istart = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    int index = 0;
    auto [ptr, ec] = std::from_chars(text.data() + istart, text.data() + pos, index);
    if (pos == istart || ec != std::errc{}) parse_error("expected an index after e in " + quoted);
    if (index < 1 || index > outer) {
      parse_error("index e" + std::to_string(index) + " out of range 1.." + std::to_string(outer) +
                  " in " + quoted);
    }
    v[index - 1] += sign * coef;
    ++terms;
    skip();
  }
  if (terms == 0) parse_error("empty covector literal");
  if (system.embedding.size() == 0) return v;
  return system.embedding * v;
}

std::vector<Covector> parse_along(std::string_view text, const CovectorSystem& system) {
  std::vector<Covector> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    std::string_view item = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.front()))) item.remove_prefix(1);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.back()))) item.remove_suffix(1);
    if (item.empty()) parse_error("empty item in --along list");
    std::size_t index = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), index);
    if (ec == std::errc{} && ptr == item.data() + item.size()) {
      if (index >= system.size()) {
        parse_error("covector index " + std::to_string(index) + " out of range (system has " +
                    std::to_string(system.size()) + ")");
      }
      out.push_back(system.covectors[index]);
    } else {
      out.push_back(parse_covector_literal(item, system));
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string vee_report_json(const CovectorSystem& system, const VeeReport& report) {
  json violations = json::array();
  for (const auto& v : report.violations) {
    const auto& pc = report.planes[v.plane];
    violations.push_back({{"plane", v.plane},
                          {"plane_members", pc.members},
                          {"alpha", v.alpha},
                          {"residual", v.residual}});
  }
  json doc = {{"name", system.name},
              {"dim", system.dim},
              {"count", system.size()},
              {"is_vee", report.is_vee},
              {"planes", report.planes.size()},
              {"max_residual", report.max_residual},
              {"gram_condition_number", report.gram_condition_number},
              {"violations", violations}};
  return doc.dump();
}

std::string merge_log_json(const RestrictionResult& result) {
  json groups = json::array();
  for (const auto& g : result.merge_log) {
    groups.push_back({{"sources", g.sources},
                      {"source_scalars", g.source_scalars},
                      {"merged_scalar", g.merged_scalar}});
  }
  json doc = {{"subsystem", result.subsystem},
              {"dropped", result.dropped},
              {"sub_dim", result.subspace.sub_dim},
              {"dim", result.system.dim},
              {"count", result.system.size()},
              {"merged", groups}};
  return doc.dump();
}

std::string certificate_json(const Certificate& certificate) {
  return certificate_object(certificate).dump();
}

std::string catalog_jsonl(const std::vector<CatalogEntry>& entries) {
  std::ostringstream os;
  for (const auto& e : entries) {
    json covectors = json::array();
    for (const auto& c : e.system.covectors) covectors.push_back(vector_json(c));
    json doc = {{"group", std::string(group_name(e.parabolic.group))},
                {"subtype_label", e.parabolic.subtype_label},
                {"type_label", e.parabolic.type_label},
                {"class_index", e.parabolic.class_index},
                {"simple_root_subset", e.parabolic.simple_root_subset},
                {"corank", e.parabolic.corank},
                {"name", e.system.name},
                {"dim", e.dim},
                {"count", e.count},
                {"is_vee", e.is_vee},
                {"identified_as", e.identified_as ? json(*e.identified_as) : json(nullptr)},
                {"equivalent_to", e.equivalent_to},
                {"covectors", covectors}};
    os << doc.dump() << '\n';
  }
  return os.str();
}

std::string verification_json(const VerificationReport& report) {
  json lines = json::array();
  for (const auto& l : report.lines) {
    lines.push_back({{"statement", l.statement}, {"pass", l.pass}, {"detail", l.detail}});
  }
  return json{{"all_pass", report.all_pass()}, {"lines", lines}}.dump();
}

}  // namespace veesys
