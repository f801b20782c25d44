#pragma once

// Subcommand dispatch shared by the ivfact executable and the tests.
// Exit codes: 0 success, 1 property false, 2 input error, 3 oracle mismatch.

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ivfact/factorize.hpp"
#include "ivfact/oracle.hpp"
#include "ivfact/parse.hpp"
#include "ivfact/report.hpp"

namespace ivfact::cli {

enum ExitCode : int { kOk = 0, kFalse = 1, kInputError = 2, kMismatch = 3 };

struct Options {
  std::string command;
  std::string input;
  std::optional<Prime> prime;
  bool json = false;
  bool verify = false;
  bool certificates = false;
  int max_degree = kDefaultMaxDegree;
  long window = 10;
};

struct Result {
  int exit_code = kOk;
  std::string output;
};

inline const std::vector<std::string>& commands() {
  static const std::vector<std::string> names{"fixed-divisor", "roots",     "covers", "image-primitive",
                                              "irreducible",   "factor",    "lengths"};
  return names;
}

namespace detail {

using report::json;

inline std::string set_str(const std::vector<std::uint64_t>& s) {
  std::string out = "{";
  for (std::size_t k = 0; k < s.size(); ++k) out += (k ? "," : "") + std::to_string(s[k]);
  return out + "}";
}

inline std::string partition_str(const std::vector<std::vector<Prime>>& blocks) {
  std::string out;
  for (const auto& b : blocks) {
    out += out.empty() ? "{" : " {";
    for (std::size_t k = 0; k < b.size(); ++k) out += (k ? "," : "") + std::to_string(b[k]);
    out += "}";
  }
  return out;
}

inline std::string factor_list(const FactoredIVP& f) {
  std::string out;
  for (std::size_t i = 0; i < f.size(); ++i)
    out += "  g_" + std::to_string(i + 1) + " = " + f.factors[i].str() + "\n";
  return out;
}

inline Prime require_prime_option(const Options& o) {
  if (!o.prime) throw Error(ErrorKind::InvalidArgument, "--prime is required for " + o.command);
  require_prime(*o.prime);
  return *o.prime;
}

inline std::string render(const json& j) { return j.dump(2) + "\n"; }

inline Result fixed_divisor_cmd(const Options& o, const ParsedInput& in) {
  const Poly g = in.numerator();
  const Integer d = fixed_divisor(g);
  Result r;
  if (o.verify) {
    const Integer brute = oracle::brute_fixed_divisor(g, std::max<long>(o.window, g.degree() + 1));
    if (brute != d) {
      r.exit_code = kMismatch;
      r.output = "verification failed: windowed gcd is " + brute.str() + "\n";
      return r;
    }
  }
  r.output = o.json ? render({{"command", o.command},
                              {"numerator", report::poly_to_json(g)},
                              {"fixed_divisor", d.str()},
                              {"verified", o.verify}})
                    : "fixed divisor of " + g.str() + " is " + d.str() + "\n";
  return r;
}

inline Result roots_cmd(const Options& o, const ParsedInput& in) {
  const Prime p = require_prime_option(o);
  const FactoredIVP f = factor_numerator(in.factors, o.max_degree);
  json rows = json::array();
  std::string text;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const auto rs = root_set_mod_p(f.factors[i], p);
    rows.push_back({{"index", i + 1}, {"factor", report::poly_to_json(f.factors[i])}, {"roots", rs.members}});
    text += "C_{" + std::to_string(p) + ",g_" + std::to_string(i + 1) + "} = " + set_str(rs.members) +
            "    g_" + std::to_string(i + 1) + " = " + f.factors[i].str() + "\n";
  }
  return {kOk, o.json ? render({{"command", o.command}, {"prime", p}, {"root_sets", rows}}) : text};
}

inline Result covers_cmd(const Options& o, const ParsedInput& in) {
  const Prime p = require_prime_option(o);
  const FactoredIVP f = factor_numerator(in.factors, o.max_degree);
  const auto covers = minimal_covers(CoverInstance::of(f.factors, p));
  json list = json::array();
  std::string text = detail::factor_list(f);
  text += "minimal " + std::to_string(p) + "-coverings:";
  for (const auto& J : covers) {
    list.push_back(report::index_set_to_json(J));
    text += " " + J.str();
  }
  if (covers.empty()) text += " none";
  text += "\n";
  return {kOk, o.json ? render({{"command", o.command}, {"prime", p}, {"coverings", list}}) : text};
}

inline Result image_primitive_cmd(const Options& o, const ParsedInput& in) {
  const FactoredIVP f = to_ivp(in.factors, in.denominator, o.max_degree);
  const Integer fd = f.numerator_fixed_divisor();
  const bool ip = fd == f.denominator();
  Result r;
  std::string text = ip ? "image primitive" : "not image primitive";
  text += ": fixed divisor of numerator is " + fd.str() + ", denominator is " + f.denominator().str() + "\n";
  json per_prime = json::array();
  bool mismatch = false;
  for (auto p : f.primes) {
    const auto v = p_image_primitive_structural(f, p);
    const bool by_divisor = fd % (Integer(p) * p) != 0;
    mismatch = mismatch || v.holds != by_divisor;
    json row = {{"prime", p}, {"p_image_primitive", v.holds}};
    text += "  p=" + std::to_string(p) + ": " + (v.holds ? "p-image primitive" : "not p-image primitive");
    if (v.witness) {
      row["witness"] = {{"index", v.witness->index + 1}, {"residue", v.witness->residue}};
      text += " (only g_" + std::to_string(v.witness->index + 1) + " lies in M_{" + std::to_string(p) +
              "," + std::to_string(v.witness->residue) + "}, and not in its square)";
    }
    text += "\n";
    per_prime.push_back(row);
  }
  if (o.verify && mismatch) {
    return {kMismatch, "verification failed: structural test disagrees with the fixed divisor\n"};
  }
  r.exit_code = ip ? kOk : kFalse;
  r.output = o.json ? render({{"command", o.command},
                              {"image_primitive", ip},
                              {"numerator_fixed_divisor", fd.str()},
                              {"denominator", f.denominator().str()},
                              {"primes", per_prime}})
                    : text;
  return r;
}

inline Result irreducible_cmd(const Options& o, const ParsedInput& in) {
  const FactoredIVP f = to_ivp(in.factors, in.denominator, o.max_degree);
  Factorizer engine(f);
  const auto v = engine.is_irreducible();
  if (o.verify && !f.is_unit()) {
    oracle::BruteForce brute(f, o.window);
    const std::uint64_t J = f.all().bits();
    const std::uint64_t T = (std::uint64_t{1} << f.primes.size()) - 1;
    if (brute.irreducible(J, T) != v.irreducible)
      return {kMismatch, "verification failed: oracle disagrees on irreducibility\n"};
  }
  std::string text = v.irreducible ? "irreducible" : "reducible";
  text += " (" + describe(v) + ")\n";
  json j = {{"command", o.command}, {"irreducible", v.irreducible}, {"reason", describe(v)}};
  if (v.fast_prime) j["fast_prime"] = *v.fast_prime;
  if (v.family) {
    j["family"] = report::certificate_to_json({*v.family, {}})["family"];
  }
  if (v.split) {
    text += "  split: [" + v.split->first.str() + "] * [" + v.split->second.str() + "]\n";
    j["split"] = {v.split->first.str(), v.split->second.str()};
  }
  return {v.irreducible ? kOk : kFalse, o.json ? render(j) : detail::factor_list(f) + text};
}

inline Result factor_cmd(const Options& o, const ParsedInput& in, bool lengths_only) {
  const FactoredIVP f = to_ivp(in.factors, in.denominator, o.max_degree);
  const auto found = factorizations(f);
  if (o.verify) {
    const auto expected = oracle::brute_factorizations(f, o.window);
    if (expected != found) {
      std::string msg = "verification failed: oracle found " + std::to_string(expected.size()) +
                        " factorizations, algorithm found " + std::to_string(found.size()) + "\n";
      for (const auto& fz : expected)
        if (!found.count(fz)) msg += "  missing: " + fz.str() + "\n";
      for (const auto& fz : found)
        if (!expected.count(fz)) msg += "  extra:   " + fz.str() + "\n";
      return {kMismatch, msg};
    }
  }
  report::FactorReport rep{f, {found.begin(), found.end()}};
  if (!o.certificates)
    for (auto& fz : rep.factorizations) fz.certificate.reset();
  std::vector<std::size_t> lens;
  for (const auto& fz : rep.factorizations) lens.push_back(fz.length());
  std::sort(lens.begin(), lens.end());

  if (lengths_only) {
    if (o.json) return {kOk, render({{"command", o.command}, {"lengths", lens}})};
    std::string text = "lengths:";
    for (auto n : lens) text += " " + std::to_string(n);
    return {kOk, text + "\n"};
  }
  if (o.json) return {kOk, render(report::to_json(rep))};
  std::string text;
  if (o.certificates) text = detail::factor_list(f);
  for (const auto& fz : rep.factorizations) {
    text += fz.str() + "\n";
    if (fz.certificate)
      text += "    family " + to_string(fz.certificate->family) + "; partition " +
              partition_str(fz.certificate->partition) + "\n";
  }
  return {kOk, text};
}

}  // namespace detail

/// Run one subcommand on one input expression; never throws.
inline Result run(const Options& o) {
  try {
    const ParsedInput in = parse(o.input);
    if (o.command == "fixed-divisor") return detail::fixed_divisor_cmd(o, in);
    if (o.command == "roots") return detail::roots_cmd(o, in);
    if (o.command == "covers") return detail::covers_cmd(o, in);
    if (o.command == "image-primitive") return detail::image_primitive_cmd(o, in);
    if (o.command == "irreducible") return detail::irreducible_cmd(o, in);
    if (o.command == "factor") return detail::factor_cmd(o, in, false);
    if (o.command == "lengths") return detail::factor_cmd(o, in, true);
    return {kInputError, "error: unknown command '" + o.command + "'\n"};
  } catch (const Error& e) {
    return {kInputError, "error: " + std::string(e.what()) + "\n"};
  }
}

}  // namespace ivfact::cli
