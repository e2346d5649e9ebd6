#include "veesys/builders.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <sstream>

namespace veesys {
namespace {

struct FamilyName {
  Family family;
  std::string_view name;
};

constexpr std::array kFamilies{
    FamilyName{Family::A, "A"},
    FamilyName{Family::B, "B"},
    FamilyName{Family::C, "C"},
    FamilyName{Family::D, "D"},
    FamilyName{Family::E6, "E6"},
    FamilyName{Family::E7, "E7"},
    FamilyName{Family::E8, "E8"},
    FamilyName{Family::F4, "F4"},
    FamilyName{Family::H3, "H3"},
    FamilyName{Family::H4, "H4"},
    FamilyName{Family::I2, "I2"},
    FamilyName{Family::AnDeformed, "An_def"},
    FamilyName{Family::BnDeformed, "Bn_def"},
    FamilyName{Family::FnType, "Fn"},
    FamilyName{Family::Theorem4, "Thm4"},
    FamilyName{Family::Theorem4Raw, "Thm4_raw"},
    FamilyName{Family::Theorem4RestEij, "Thm4_eij"},
    FamilyName{Family::Theorem4RestLong, "Thm4_long"},
    FamilyName{Family::F3Variant1, "F3_1"},
    FamilyName{Family::F3Variant2, "F3_2"},
    FamilyName{Family::E8EvenSign, "E8_even"},
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

[[noreturn]] void bad(const std::string& message) { throw Error(ErrorCode::InvalidSpec, message); }

double plain_number(std::string_view s, std::string_view context) {
  s = trim(s);
  double value = 0.0;
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    bad("bad number '" + std::string(s) + "' for parameter '" + std::string(context) + "'");
  }
  return value;
}

/// decimal | a/b | sqrt(x) | -sqrt(x)
double parse_value(std::string_view s, std::string_view context) {
  s = trim(s);
  double sign = 1.0;
  if (!s.empty() && s.front() == '-') {
    sign = -1.0;
    s.remove_prefix(1);
  }
  if (s.starts_with("sqrt(") && s.ends_with(")")) {
    const double inner = parse_value(s.substr(5, s.size() - 6), context);
    if (inner < 0) bad("sqrt of a negative number for parameter '" + std::string(context) + "'");
    return sign * std::sqrt(inner);
  }
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    const double den = parse_value(s.substr(slash + 1), context);
    if (den == 0) bad("division by zero for parameter '" + std::string(context) + "'");
    return sign * parse_value(s.substr(0, slash), context) / den;
  }
  return sign * plain_number(s, context);
}

std::string canonical_key(std::string_view key) {
  if (key == "lambda" || key == "Lambda" || key == "L") return "lambda";
  if (key == "M" || key == "m_param") return "M";
  if (key == "K" || key == "k") return "K";
  if (key == "gamma") return "gamma";
  return std::string(key);
}

}  // namespace

std::string_view family_name(Family family) {
  for (const auto& f : kFamilies) {
    if (f.family == family) return f.name;
  }
  return "?";
}

SystemSpec parse_spec(std::string_view text) {
  text = trim(text);
  SystemSpec spec;
  const auto colon = text.find(':');
  const std::string_view head = trim(text.substr(0, colon));
  bool found = false;
  for (const auto& f : kFamilies) {
    if (f.name == head) {
      spec.family = f.family;
      found = true;
    }
  }
  if (!found) bad("unknown family '" + std::string(head) + "'");

  std::string current;  // last key seen, for bare list continuations ("c=2,1,1")
  if (colon != std::string_view::npos) {
    std::string_view rest = text.substr(colon + 1);
    while (!rest.empty()) {
      const auto comma = rest.find(',');
      std::string_view item = trim(rest.substr(0, comma));
      rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
      if (item.empty()) continue;
      const auto eq = item.find('=');
      if (eq == std::string_view::npos) {
        if (current != "c") bad("dangling value '" + std::string(item) + "'");
        spec.c.push_back(parse_value(item, "c"));
        continue;
      }
      const std::string key = canonical_key(trim(item.substr(0, eq)));
      const std::string_view value = item.substr(eq + 1);
      current = key;
      if (key == "n" || key == "m") {
        const double v = parse_value(value, key);
        if (v != std::floor(v)) bad("parameter '" + key + "' must be an integer");
        spec.rank = static_cast<int>(v);
      } else if (key == "c") {
        spec.c.push_back(parse_value(value, key));
      } else if (key == "lambda" || key == "M" || key == "K" || key == "gamma") {
        spec.params[key] = parse_value(value, key);
      } else {
        bad("unknown parameter '" + key + "'");
      }
    }
  }

  const bool ranked = spec.family == Family::A || spec.family == Family::B ||
                      spec.family == Family::C || spec.family == Family::D ||
                      spec.family == Family::FnType;
  if (ranked && spec.rank <= 0) bad("family " + std::string(head) + " needs n=<rank>");
  if (spec.family == Family::I2 && spec.rank < 3) {
    bad("I2 needs integer m >= 3 (parameter 'm'), got m=" + std::to_string(spec.rank));
  }
  if (spec.family == Family::AnDeformed && spec.c.size() < 2) bad("An_def needs c with at least 2 values");
  if (spec.family == Family::BnDeformed && spec.c.empty()) bad("Bn_def needs c with at least 1 value");
  return spec;
}

std::string format_spec(const SystemSpec& spec) {
  std::ostringstream os;
  os.precision(17);
  os << family_name(spec.family);
  bool first = true;
  auto sep = [&] {
    os << (first ? ':' : ',');
    first = false;
  };
  if (spec.rank > 0) {
    sep();
    os << (spec.family == Family::I2 ? "m=" : "n=") << spec.rank;
  }
  for (const auto& [k, v] : spec.params) {
    sep();
    os << k << '=' << v;
  }
  if (!spec.c.empty()) {
    sep();
    os << "c=";
    for (std::size_t i = 0; i < spec.c.size(); ++i) os << (i ? "," : "") << spec.c[i];
  }
  return os.str();
}

}  // namespace veesys
