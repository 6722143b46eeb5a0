#pragma once

#include <json.hpp>

#include <string>

#include "voas/fock.hpp"
#include "voas/rational_function.hpp"
#include "voas/truncated_series.hpp"

namespace voas {

using Json = nlohmann::ordered_json;

inline Json to_json(const Rational& q) { return q.get_str(); }

inline Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw std::invalid_argument("expected a rational as a \"p/q\" string");
}

inline Json to_json(const Polynomial& p) {
  Json arr = Json::array();
  for (auto& [m, c] : p.terms()) {
    Json mono = Json::object();
    for (auto& [id, e] : m.entries()) mono[var_name(Var{id})] = e;
    arr.push_back({{"monomial", mono}, {"coeff", c.get_str()}});
  }
  return arr;
}

inline Polynomial polynomial_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial must be an array of terms");
  Polynomial p;
  for (auto& t : j) {
    std::vector<Monomial::Entry> e;
    for (auto& [name, exp] : t.at("monomial").items()) e.push_back({var(name).id, exp.get<int>()});
    p.add_term(Monomial::from_entries(std::move(e)), rational_from_json(t.at("coeff")));
  }
  return p;
}

inline Json to_json(const RationalFunction& f) {
  Json den = Json::array();
  for (auto& [fac, e] : f.denominator_factors()) den.push_back({{"factor", to_json(fac)}, {"exp", e}});
  return {{"num", to_json(f.numerator())}, {"den", den}};
}

inline RationalFunction rational_function_from_json(const Json& j) {
  RationalFunction::Factors den;
  for (auto& d : j.at("den")) den[polynomial_from_json(d.at("factor"))] += d.at("exp").get<int>();
  return RationalFunction::from_factors(polynomial_from_json(j.at("num")), den);
}

inline Json to_json(const FockVector& v) {
  Json arr = Json::array();
  for (auto& [p, c] : v.terms()) arr.push_back({{"partition", p}, {"coeff", c.get_str()}});
  return arr;
}

inline FockVector fock_vector_from_json(const Json& j) {
  if (j.is_string()) {
    auto s = j.get<std::string>();
    if (s == "vacuum") return FockVector::vacuum();
    if (s == "a") return heisenberg_generator();
    if (s == "omega") return conformal_vector();
    throw std::invalid_argument("unknown named state: " + s);
  }
  if (!j.is_array()) throw std::invalid_argument("state must be a name or an array of terms");
  FockVector v;
  for (auto& t : j) {
    Partition p = normalize_partition(t.at("partition").get<Partition>());
    v.add(p, t.contains("coeff") ? rational_from_json(t.at("coeff")) : Rational(1));
  }
  return v;
}

/// Parses a key produced by TruncatedSeries::key back to half-unit exponents.
inline std::vector<int> series_key_exponents(const std::string& key, std::size_t nvars) {
  std::vector<int> e(nvars, 0);
  std::size_t pos = 0;
  while (pos < key.size()) {
    std::size_t end = key.find('*', pos);
    std::string f = key.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
    pos = end == std::string::npos ? key.size() : end + 1;
    if (f.rfind("rho", 0) != 0) throw std::invalid_argument("bad series key: " + key);
    std::size_t caret = f.find('^');
    std::size_t idx = std::stoul(f.substr(3, caret == std::string::npos ? std::string::npos : caret - 3));
    if (idx < 1 || idx > nvars) throw std::invalid_argument("series key index out of range: " + key);
    int half = 2;
    if (caret != std::string::npos) {
      std::string ex = f.substr(caret + 1);
      if (!ex.empty() && ex.front() == '(') {
        auto slash = ex.find('/');
        half = std::stoi(ex.substr(1, slash - 1));
      } else {
        half = 2 * std::stoi(ex);
      }
    }
    e[idx - 1] += half;
  }
  return e;
}

/// Plain coefficient map {"rho1^2*rho2": coeff, "": constant}.
template <class C, class F>
Json series_terms_json(const TruncatedSeries<C>& s, F&& coeff_json) {
  Json out = Json::object();
  for (auto& [e, c] : s.terms()) out[TruncatedSeries<C>::key(e)] = coeff_json(c);
  return out;
}

inline Json to_json(const TruncatedSeries<Rational>& s) {
  return series_terms_json(s, [](const Rational& q) { return to_json(q); });
}
inline Json to_json(const TruncatedSeries<RationalFunction>& s) {
  return series_terms_json(s, [](const RationalFunction& f) { return to_json(f); });
}

/// Self-describing form carrying the variable count and cutoff.
template <class C>
Json series_envelope(const TruncatedSeries<C>& s) {
  return {{"nvars", s.nvars()}, {"half_cutoff", s.half_cutoff()}, {"terms", to_json(s)}};
}

inline TruncatedSeries<Rational> rational_series_from_json(const Json& j) {
  TruncatedSeries<Rational> s(j.at("nvars").get<std::size_t>(), j.at("half_cutoff").get<int>());
  for (auto& [k, v] : j.at("terms").items()) s.add_term(series_key_exponents(k, s.nvars()), rational_from_json(v));
  return s;
}

inline TruncatedSeries<RationalFunction> function_series_from_json(const Json& j) {
  TruncatedSeries<RationalFunction> s(j.at("nvars").get<std::size_t>(), j.at("half_cutoff").get<int>());
  for (auto& [k, v] : j.at("terms").items()) s.add_term(series_key_exponents(k, s.nvars()), rational_function_from_json(v));
  return s;
}

}  // namespace voas
