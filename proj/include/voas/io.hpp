#pragma once

#include <cstdio>
#include <fstream>
#include <sstream>

#include "voas/genus_zero.hpp"
#include "voas/schottky.hpp"
#include "voas/serialize.hpp"

namespace voas {

/// Malformed or missing input; the CLI maps it to exit code 2.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Decimal with 17 significant digits.
inline std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

inline Json to_json(const Complex& c) { return Json::array({format_double(c.real()), format_double(c.imag())}); }

inline double double_from_json(const Json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s.find('/') != std::string::npos) return parse_rational(s).get_d();
    std::size_t used = 0;
    double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument("malformed number: " + s);
    return v;
  }
  throw std::invalid_argument("expected a number");
}

/// [re, im] or a single real.
inline Complex complex_from_json(const Json& j) {
  if (j.is_array()) {
    if (j.size() != 2) throw std::invalid_argument("complex number must be [re, im]");
    return {double_from_json(j[0]), double_from_json(j[1])};
  }
  return {double_from_json(j), 0.0};
}

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ConfigError(path + ": " + e.what());
  }
}

/// Parsed SchottkyConfig file: {genus, handles: [{w_plus, w_minus, rho}], mode, max_word_len}.
struct ConfigFile {
  int genus = 0;
  std::string mode = "numeric";
  SchottkyConfig numeric;
  ExactSchottkyConfig exact;  // filled in exact mode
};

inline ConfigFile config_from_json(const Json& j) {
  ConfigFile c;
  try {
    if (!j.is_object()) throw std::invalid_argument("config must be an object");
    c.mode = j.value("mode", std::string("numeric"));
    if (c.mode != "numeric" && c.mode != "exact") throw std::invalid_argument("mode must be numeric or exact");
    const Json& hs = j.at("handles");
    if (!hs.is_array()) throw std::invalid_argument("handles must be an array");
    c.genus = j.value("genus", static_cast<int>(hs.size()));
    if (c.genus != static_cast<int>(hs.size())) throw std::invalid_argument("genus does not match the number of handles");
    c.numeric.max_word_len = j.value("max_word_len", 6);
    if (c.numeric.max_word_len < 0) throw std::invalid_argument("max_word_len must be >= 0");
    for (auto& h : hs) {
      c.numeric.handles.push_back({complex_from_json(h.at("w_plus")), complex_from_json(h.at("w_minus")), complex_from_json(h.at("rho"))});
      if (c.mode == "exact")
        c.exact.handles.push_back({rational_from_json(h.at("w_plus")), rational_from_json(h.at("w_minus")), rational_from_json(h.at("rho"))});
    }
    c.exact.max_word_len = c.numeric.max_word_len;
    if (c.genus > 0) validate(c.numeric);
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception& e) {
    throw ConfigError(std::string("bad config: ") + e.what());
  }
  return c;
}

inline ConfigFile load_config(const std::string& path) { return config_from_json(read_json_file(path)); }

/// [{state, point}] where point names a variable ("y1") and state is a name or a term list.
inline std::vector<Insertion> insertions_from_json(const Json& j) {
  std::vector<Insertion> out;
  try {
    if (!j.is_array()) throw std::invalid_argument("insertions must be an array");
    for (auto& e : j) {
      std::string p = e.at("point").get<std::string>();
      if (p.empty()) throw std::invalid_argument("empty point name");
      out.push_back({fock_vector_from_json(e.at("state")), Polynomial(var(p))});
    }
  } catch (const std::exception& e) {
    throw ConfigError(std::string("bad insertions: ") + e.what());
  }
  return out;
}

inline Json to_json(const CorrelationForm& f) {
  Json w = Json::array();
  for (auto& x : f.weights) w.push_back(x ? Json(*x) : Json(nullptr));
  return {{"num", to_json(f.value.numerator())}, {"den", to_json(f.value.denominator())}, {"weights", w}, {"text", f.value.str()}};
}

}  // namespace voas
