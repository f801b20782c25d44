#pragma once

// JSON encoding of polynomials, factorizations and certificates.
// Polynomials are coefficient arrays, constant term first, of decimal strings.
// Certificate indices are 1-based like the text output.

#include <json.hpp>

#include <string>
#include <vector>

#include "ivfact/factorization.hpp"
#include "ivfact/ivp.hpp"

namespace ivfact::report {

using json = nlohmann::json;

inline json poly_to_json(const Poly& p) {
  json a = json::array();
  for (const auto& c : p.coeffs()) a.push_back(c.str());
  return a;
}

inline Poly poly_from_json(const json& j) {
  std::vector<Integer> coeffs;
  for (const auto& c : j) coeffs.emplace_back(c.get<std::string>());
  return Poly(std::move(coeffs));
}

inline json index_set_to_json(IndexSet s) {
  json a = json::array();
  for (auto i : s.members()) a.push_back(i + 1);
  return a;
}

inline IndexSet index_set_from_json(const json& j) {
  IndexSet s;
  for (const auto& i : j) s.insert(i.get<std::size_t>() - 1);
  return s;
}

inline json certificate_to_json(const Certificate& c) {
  json family = json::object();
  for (const auto& [p, J] : c.family) family[std::to_string(p)] = index_set_to_json(J);
  return {{"family", family}, {"partition", c.partition}};
}

inline Certificate certificate_from_json(const json& j) {
  Certificate c;
  for (const auto& [key, val] : j.at("family").items())
    c.family.emplace(std::stoull(key), index_set_from_json(val));
  c.partition = j.at("partition").get<std::vector<std::vector<Prime>>>();
  return c;
}

/// Parts as {sign, numerator_factors, denominator_primes}; the global unit
/// rides on the first part.
inline json factorization_to_json(const Factorization& fz) {
  json parts = json::array();
  for (std::size_t k = 0; k < fz.parts.size(); ++k) {
    const Part& part = fz.parts[k];
    json factors = json::array();
    for (const auto& g : part.numerator_factors) factors.push_back(poly_to_json(g));
    parts.push_back({{"sign", k == 0 ? fz.unit : 1},
                     {"numerator_factors", factors},
                     {"denominator_primes", part.denominator_primes}});
  }
  json out = {{"parts", parts}, {"length", fz.length()}};
  if (fz.certificate) out["certificate"] = certificate_to_json(*fz.certificate);
  return out;
}

inline Factorization factorization_from_json(const json& j) {
  Factorization fz;
  for (const auto& pj : j.at("parts")) {
    Part part;
    fz.unit *= pj.at("sign").get<int>();
    for (const auto& g : pj.at("numerator_factors")) part.numerator_factors.push_back(poly_from_json(g));
    std::sort(part.numerator_factors.begin(), part.numerator_factors.end());
    part.denominator_primes = pj.at("denominator_primes").get<std::vector<Prime>>();
    fz.parts.push_back(std::move(part));
  }
  if (j.contains("certificate")) fz.certificate = certificate_from_json(j.at("certificate"));
  fz.canonicalize();
  return fz;
}

inline json ivp_to_json(const FactoredIVP& f) {
  json factors = json::array();
  for (const auto& g : f.factors) factors.push_back(poly_to_json(g));
  return {{"sign", f.sign},
          {"constant", f.constant.str()},
          {"numerator_factors", factors},
          {"denominator_primes", f.primes}};
}

inline FactoredIVP ivp_from_json(const json& j) {
  FactoredIVP f;
  f.sign = j.at("sign").get<int>();
  f.constant = Integer(j.at("constant").get<std::string>());
  for (const auto& g : j.at("numerator_factors")) f.factors.push_back(poly_from_json(g));
  f.primes = j.at("denominator_primes").get<std::vector<Prime>>();
  return f;
}

/// Output of the `factor` command.
struct FactorReport {
  FactoredIVP input;
  std::vector<Factorization> factorizations;  // canonical order

  friend bool operator==(const FactorReport& a, const FactorReport& b) {
    if (a.input.sign != b.input.sign || a.input.constant != b.input.constant ||
        a.input.factors != b.input.factors || a.input.primes != b.input.primes)
      return false;
    if (a.factorizations.size() != b.factorizations.size()) return false;
    for (std::size_t k = 0; k < a.factorizations.size(); ++k)
      if (a.factorizations[k] != b.factorizations[k] ||
          a.factorizations[k].certificate != b.factorizations[k].certificate)
        return false;
    return true;
  }
};

inline json to_json(const FactorReport& r) {
  json list = json::array();
  std::vector<std::size_t> lens;
  for (const auto& fz : r.factorizations) {
    list.push_back(factorization_to_json(fz));
    lens.push_back(fz.length());
  }
  std::sort(lens.begin(), lens.end());
  return {{"command", "factor"}, {"input", ivp_to_json(r.input)}, {"factorizations", list},
          {"lengths", lens}};
}

inline FactorReport factor_report_from_json(const json& j) {
  FactorReport r;
  r.input = ivp_from_json(j.at("input"));
  for (const auto& fj : j.at("factorizations")) r.factorizations.push_back(factorization_from_json(fj));
  std::sort(r.factorizations.begin(), r.factorizations.end());
  return r;
}

}  // namespace ivfact::report
