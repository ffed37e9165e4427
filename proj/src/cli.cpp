/*
   Copyright 2026 The reciprodick Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "reciprodick/cli.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include <CLI11.hpp>

#include "reciprodick/classifier.hpp"
#include "reciprodick/codes.hpp"
#include "reciprodick/coterm.hpp"
#include "reciprodick/errors.hpp"
#include "reciprodick/family.hpp"
#include "reciprodick/json_io.hpp"

namespace reciprodick::cli {

namespace {

using u64 = std::uint64_t;
using i64 = std::int64_t;

enum class Format { json, csv };

struct RunConfig {
  std::string family = "f";
  std::optional<u64> n;
  std::optional<u64> n_min;
  std::optional<u64> n_max;
  std::optional<i64> k;
  std::optional<i64> k_min;
  std::optional<i64> k_max;
  std::string ring;
  std::optional<u64> p;
  std::vector<u64> p_list;
  std::string a = "1";
  std::string theorem;
  std::optional<u64> m;
  std::string divisors = "self-reciprocal";
  Format format = Format::json;
  std::string out_path;
};

const std::vector<u64> kDefaultPrimes{3, 5, 7, 11, 13};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void add_common_options(CLI::App& cmd, RunConfig& cfg) {
  auto* n = cmd.add_option("--n", cfg.n, "Single index n");
  auto* n_max = cmd.add_option("--n-max", cfg.n_max, "Largest n of a range");
  cmd.add_option("--n-min", cfg.n_min, "Smallest n of a range")->excludes(n);
  n->excludes(n_max);
  auto* k = cmd.add_option("--k", cfg.k, "Single kind parameter k");
  cmd.add_option("--k-min", cfg.k_min, "Smallest k of a range")->excludes(k);
  cmd.add_option("--k-max", cfg.k_max, "Largest k of a range")->excludes(k);
  cmd.add_option("--ring", cfg.ring, "Coefficient ring")->check(CLI::IsMember({"z", "fp"}));
  auto* p = cmd.add_option("--p", cfg.p, "Prime modulus");
  cmd.add_option("--p-list", cfg.p_list, "Comma-separated primes")->delimiter(',')->excludes(p);
  cmd.add_option("--format", cfg.format, "Output format")
      ->transform(CLI::CheckedTransformer(std::map<std::string, Format>{{"json", Format::json}, {"csv", Format::csv}}));
  cmd.add_option("--out", cfg.out_path, "Write records to PATH instead of standard output");
}

std::vector<u64> primes_of(const RunConfig& cfg, const std::vector<u64>& fallback) {
  std::vector<u64> primes;
  if (cfg.p) {
    primes = {*cfg.p};
  } else if (!cfg.p_list.empty()) {
    primes = cfg.p_list;
  } else {
    primes = fallback;
  }
  for (u64 q : primes) {
    if (!is_prime(q)) throw DomainError("p = " + std::to_string(q) + " is not prime");
  }
  return primes;
}

std::vector<u64> n_values(const RunConfig& cfg, u64 default_min, u64 default_max) {
  if (cfg.n) return {*cfg.n};
  const u64 lo = cfg.n_min.value_or(default_min);
  const u64 hi = cfg.n_max.value_or(default_max);
  if (lo > hi) throw UsageError("empty n range");
  std::vector<u64> out;
  for (u64 v = lo; v <= hi; ++v) out.push_back(v);
  return out;
}

std::pair<i64, i64> k_bounds(const RunConfig& cfg, i64 default_min, i64 default_max) {
  if (cfg.k) return {*cfg.k, *cfg.k};
  const i64 lo = cfg.k_min.value_or(default_min);
  const i64 hi = cfg.k_max.value_or(default_max);
  if (lo > hi) throw UsageError("empty k range");
  return {lo, hi};
}

std::string csv_coeffs(const Poly& a) {
  std::string s;
  for (const Integer& c : a.coeffs()) {
    if (!s.empty()) s += ' ';
    s += c.get_str();
  }
  return s;
}

std::string csv_p(const Ring& r) { return r.is_prime_field() ? std::to_string(r.modulus()) : ""; }

std::vector<Ring> rings_of(const RunConfig& cfg) {
  const bool field = cfg.ring == "fp" || (cfg.ring.empty() && (cfg.p || !cfg.p_list.empty()));
  if (!field) return {Ring::integers()};
  std::vector<Ring> out;
  for (u64 q : primes_of(cfg, {})) out.push_back(Ring::prime_field(q));
  if (out.empty()) throw UsageError("--ring fp needs --p or --p-list");
  return out;
}

// gen --------------------------------------------------------------------

int cmd_gen(const RunConfig& cfg, std::ostream& out) {
  const auto family = parse_family(cfg.family);
  if (!family) throw UsageError("unknown family \"" + cfg.family + "\"");
  Integer a;
  if (a.set_str(cfg.a, 10) != 0) throw UsageError("malformed --a \"" + cfg.a + "\"");
  const bool char2 = *family == Family::f_char2;
  const std::vector<Ring> rings = char2 ? std::vector<Ring>{Ring::prime_field(2)} : rings_of(cfg);
  const auto [k_lo, k_hi] = char2 ? std::pair<i64, i64>{1, 1} : k_bounds(cfg, 0, 0);
  const bool single = cfg.n.has_value() && k_lo == k_hi && rings.size() == 1;
  if (cfg.format == Format::csv) out << "family,n,k,p,coeffs\n";
  for (u64 n : n_values(cfg, 0, 10)) {
    for (i64 k = k_lo; k <= k_hi; ++k) {
      for (const Ring& ring : rings) {
        const FamilySpec spec{*family, n, k, a, ring};
        Poly poly;
        try {
          poly = build(spec);
        } catch (const DomainError&) {
          if (single) throw;
          continue;
        }
        if (cfg.format == Format::csv) {
          out << family_name(spec.family) << ',' << n << ',' << k << ',' << csv_p(ring) << ',' << csv_coeffs(poly)
              << '\n';
        } else {
          Json j = family_spec_to_json(spec);
          j["coeffs"] = poly_to_json(poly)["coeffs"];
          out << j.dump() << '\n';
        }
      }
    }
  }
  return kExitOk;
}

// classify -----------------------------------------------------------------

int cmd_classify(const RunConfig& cfg, std::ostream& out) {
  const auto family = parse_family(cfg.family);
  if (!family) throw UsageError("unknown family \"" + cfg.family + "\"");
  const bool char2 = *family == Family::f_char2;
  const std::vector<Ring> rings = char2 ? std::vector<Ring>{Ring::prime_field(2)} : rings_of(cfg);
  const auto [k_lo, k_hi] = char2 ? std::pair<i64, i64>{1, 1} : k_bounds(cfg, 0, 0);
  const bool single = cfg.n.has_value() && k_lo == k_hi && rings.size() == 1;
  if (cfg.format == Format::csv) out << "family,n,k,p,degree,self_reciprocal,theorem,predicted,match\n";
  for (u64 n : n_values(cfg, 0, 10)) {
    for (i64 k = k_lo; k <= k_hi; ++k) {
      for (const Ring& ring : rings) {
        const FamilySpec spec{*family, n, k, 1, ring};
        Poly poly;
        try {
          poly = build(spec);
        } catch (const DomainError&) {
          if (single) throw;
          continue;
        }
        const bool sr = is_self_reciprocal(poly);
        Json predictions = Json::array();
        std::ostringstream rows;
        for (TheoremId t : kAllTheorems) {
          if (is_corollary(t) || hypothesis_violation(t, spec)) continue;
          const bool predicted = predicate(t, spec);
          Json pj;
          pj["theorem"] = std::string(theorem_name(t));
          pj["predicted"] = predicted;
          pj["match"] = predicted == sr;
          predictions.push_back(pj);
          rows << family_name(spec.family) << ',' << n << ',' << k << ',' << csv_p(ring) << ','
               << (poly.degree() ? std::to_string(*poly.degree()) : "") << ',' << (sr ? "true" : "false") << ','
               << theorem_name(t) << ',' << (predicted ? "true" : "false") << ','
               << (predicted == sr ? "true" : "false") << '\n';
        }
        if (cfg.format == Format::csv) {
          if (predictions.empty()) {
            out << family_name(spec.family) << ',' << n << ',' << k << ',' << csv_p(ring) << ','
                << (poly.degree() ? std::to_string(*poly.degree()) : "") << ',' << (sr ? "true" : "false")
                << ",,,\n";
          }
          out << rows.str();
        } else {
          Json j = family_spec_to_json(spec);
          j["coeffs"] = poly_to_json(poly)["coeffs"];
          if (poly.degree()) {
            j["degree"] = *poly.degree();
          } else {
            j["degree"] = nullptr;
          }
          j["self_reciprocal"] = sr;
          j["predictions"] = predictions;
          out << j.dump() << '\n';
        }
      }
    }
  }
  return kExitOk;
}

// verify / table -------------------------------------------------------------

std::vector<TheoremId> theorems_of(const RunConfig& cfg) {
  if (cfg.theorem.empty() || cfg.theorem == "all") {
    return std::vector<TheoremId>(std::begin(kAllTheorems), std::end(kAllTheorems));
  }
  const auto t = parse_theorem(cfg.theorem);
  if (!t) throw UsageError("unknown theorem \"" + cfg.theorem + "\"");
  return {*t};
}

bool over_integers(TheoremId t) {
  return t == TheoremId::T2_1 || t == TheoremId::T2_3 || t == TheoremId::T2_4 || t == TheoremId::T2_7;
}

ScanRange scan_range(const RunConfig& cfg, TheoremId t) {
  ScanRange r;
  r.primes = primes_of(cfg, kDefaultPrimes);
  if (cfg.n) {
    r.n_min = r.n_max = *cfg.n;
  } else {
    r.n_min = cfg.n_min.value_or(0);
    r.n_max = cfg.n_max.value_or(200);
    if (r.n_min > r.n_max) throw UsageError("empty n range");
  }
  i64 default_hi = 6;
  if (!over_integers(t)) {
    for (u64 q : r.primes) default_hi = std::max<i64>(default_hi, static_cast<i64>(q) - 1);
  }
  std::tie(r.k_min, r.k_max) = k_bounds(cfg, over_integers(t) ? -5 : 0, default_hi);
  return r;
}

void write_verdict_csv_header(std::ostream& out) { out << "theorem,family,n,k,p,predicted,observed,match\n"; }

void write_verdict_csv(std::ostream& out, const Verdict& v) {
  out << theorem_name(v.theorem) << ',' << family_name(v.spec.family) << ',' << v.spec.n << ',' << v.spec.k << ','
      << csv_p(v.spec.ring) << ',' << (v.predicted ? "true" : "false") << ',' << (v.observed ? "true" : "false")
      << ',' << (v.match ? "true" : "false") << '\n';
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  bool any_mismatch = false;
  if (cfg.format == Format::csv) write_verdict_csv_header(out);
  for (TheoremId t : theorems_of(cfg)) {
    const std::vector<Verdict> verdicts = scan(t, scan_range(cfg, t));
    std::size_t mismatches = 0;
    for (const Verdict& v : verdicts) {
      if (v.match) continue;
      ++mismatches;
      if (cfg.format == Format::csv) {
        write_verdict_csv(out, v);
      } else {
        out << verdict_to_json(v).dump() << '\n';
      }
    }
    any_mismatch = any_mismatch || mismatches != 0;
    Json summary;
    summary["summary"] = std::string(theorem_name(t));
    summary["checked"] = verdicts.size();
    summary["mismatches"] = mismatches;
    summary["all_match"] = mismatches == 0;
    if (cfg.format == Format::csv) {
      err << summary.dump() << '\n';
    } else {
      out << summary.dump() << '\n';
    }
  }
  return any_mismatch ? kExitMismatch : kExitOk;
}

int cmd_table(const RunConfig& cfg, std::ostream& out) {
  if (cfg.format == Format::csv) write_verdict_csv_header(out);
  for (TheoremId t : theorems_of(cfg)) {
    for (const Verdict& v : scan(t, scan_range(cfg, t))) {
      if (cfg.format == Format::csv) {
        write_verdict_csv(out, v);
      } else {
        out << verdict_to_json(v).dump() << '\n';
      }
    }
  }
  return kExitOk;
}

// coterm -------------------------------------------------------------------

i64 required_k(CotermTheorem t) {
  switch (t) {
    case CotermTheorem::T5_1:
    case CotermTheorem::T5_3:
    case CotermTheorem::T5_7:
      return 0;
    case CotermTheorem::T5_2:
    case CotermTheorem::T5_8:
      return 2;
    default:
      return 1;
  }
}

void write_coterm(std::ostream& out, Format format, const std::string& label, u64 n, i64 k, const Coterm& c) {
  const bool ok = is_coterm(c.poly, c.ctx);
  if (format == Format::csv) {
    out << label << ',' << n << ',' << k << ',' << csv_p(c.ctx.ring) << ',' << c.ctx.m << ','
        << (c.degenerate ? "true" : "false") << ',' << (ok ? "true" : "false") << ',' << csv_coeffs(c.poly) << '\n';
    return;
  }
  Json j;
  j["theorem"] = label;
  j["n"] = n;
  j["k"] = k;
  const Json body = coterm_to_json(c);
  for (const auto& [key, value] : body.items()) j[key] = value;
  out << j.dump() << '\n';
}

int cmd_coterm(const RunConfig& cfg, std::ostream& out) {
  if (cfg.format == Format::csv) out << "theorem,n,k,p,m,degenerate,is_coterm,coeffs\n";
  if (cfg.theorem.empty() && cfg.family != "f") {
    // Derive from a self-reciprocal family member instead of a named construction.
    const auto family = parse_family(cfg.family);
    if (!family) throw UsageError("unknown family \"" + cfg.family + "\"");
    const bool char2 = *family == Family::f_char2;
    const std::vector<Ring> rings = char2 ? std::vector<Ring>{Ring::prime_field(2)} : rings_of(cfg);
    const auto [k_lo, k_hi] = char2 ? std::pair<i64, i64>{1, 1} : k_bounds(cfg, 0, 0);
    const bool single = cfg.n.has_value() && k_lo == k_hi && rings.size() == 1;
    for (u64 n : n_values(cfg, 0, 20)) {
      for (i64 k = k_lo; k <= k_hi; ++k) {
        for (const Ring& ring : rings) {
          try {
            const Poly parent = build(FamilySpec{*family, n, k, 1, ring});
            write_coterm(out, cfg.format, std::string(family_name(*family)), n, k, coterm_from_self_reciprocal(parent));
          } catch (const DomainError&) {
            if (single) throw;
          }
        }
      }
    }
    return kExitOk;
  }
  std::vector<CotermTheorem> theorems;
  if (cfg.theorem.empty() || cfg.theorem == "all") {
    theorems.assign(std::begin(kAllCotermTheorems), std::end(kAllCotermTheorems));
  } else {
    const auto t = parse_coterm_theorem(cfg.theorem);
    if (!t) throw UsageError("unknown coterm construction \"" + cfg.theorem + "\"");
    theorems = {*t};
  }
  const bool single = theorems.size() == 1 && cfg.n.has_value() && (cfg.p || !over_prime_field(theorems[0]));
  for (CotermTheorem t : theorems) {
    std::vector<Ring> rings;
    if (t == CotermTheorem::Char2) {
      rings = {Ring::prime_field(2)};
    } else if (over_prime_field(t)) {
      for (u64 q : primes_of(cfg, kDefaultPrimes)) rings.push_back(Ring::prime_field(q));
    } else {
      rings = {Ring::integers()};
    }
    const i64 k = cfg.k.value_or(required_k(t));
    for (u64 n : n_values(cfg, 0, 20)) {
      for (const Ring& ring : rings) {
        try {
          write_coterm(out, cfg.format, std::string(coterm_theorem_name(t)), n, k, coterm_construct(t, n, k, ring));
        } catch (const DomainError&) {
          if (single) throw;
        }
      }
    }
  }
  return kExitOk;
}

// code ---------------------------------------------------------------------

int cmd_code(const RunConfig& cfg, std::ostream& out) {
  if (!cfg.m) throw UsageError("code needs --m");
  const u64 p = cfg.p.value_or(2);
  const u64 m = *cfg.m;
  const auto factors = factor_xm_minus_1(p, m);
  const std::vector<Poly> generators =
      cfg.divisors == "all" ? monic_divisors(p, m) : self_reciprocal_divisors(p, m);
  bool disagreement = false;
  if (cfg.format == Format::csv) {
    out << "p,m,generator,dimension,reversible,self_reciprocal,enumeration_checked,enumerated_reversible\n";
  } else {
    Json fj;
    fj["p"] = p;
    fj["m"] = m;
    Json arr = Json::array();
    for (const auto& f : factors) {
      Json e;
      e["factor"] = poly_to_json(f.factor)["coeffs"];
      e["multiplicity"] = f.multiplicity;
      arr.push_back(e);
    }
    fj["factors"] = arr;
    out << fj.dump() << '\n';
  }
  for (const Poly& g : generators) {
    const CyclicCode code = build_cyclic_code(p, m, g);
    const bool checkable = codeword_count(code) <= kMaxEnumeratedCodewords;
    std::optional<bool> enumerated;
    if (checkable) {
      enumerated = verify_reversibility_by_enumeration(code);
      disagreement = disagreement || *enumerated != code.reversible;
    }
    if (cfg.format == Format::csv) {
      out << p << ',' << m << ',' << csv_coeffs(g) << ',' << code.dimension << ',' << (code.reversible ? "true" : "false")
          << ',' << (code.self_reciprocal ? "true" : "false") << ',' << (checkable ? "true" : "false") << ','
          << (enumerated ? (*enumerated ? "true" : "false") : "") << '\n';
    } else {
      Json j = code_to_json(code, checkable);
      if (enumerated) j["enumerated_reversible"] = *enumerated;
      out << j.dump() << '\n';
    }
  }
  return disagreement ? kExitMismatch : kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Self-reciprocal and coterm polynomials from reversed Dickson polynomials", "reciprodick"};
  app.require_subcommand(1, 1);
  RunConfig cfg;

  auto* gen = app.add_subcommand("gen", "Build family polynomials");
  auto* classify = app.add_subcommand("classify", "Self-reciprocality and theorem predictions per polynomial");
  auto* verify = app.add_subcommand("verify", "Scan theorems against the definition; exit 2 on mismatches");
  auto* coterm = app.add_subcommand("coterm", "Coterm constructions");
  auto* code = app.add_subcommand("code", "Reversible cyclic codes from divisors of x^m - 1");
  auto* table = app.add_subcommand("table", "Every verdict of a theorem scan");
  for (CLI::App* cmd : {gen, classify, verify, coterm, code, table}) {
    add_common_options(*cmd, cfg);
    cmd->add_option("--family", cfg.family, "f|g|h|gstar|hstar|dickson|fchar2|kind1|kind2|kind3");
    cmd->add_option("--a", cfg.a, "Parameter a of the Dickson family");
    cmd->add_option("--theorem", cfg.theorem, "Theorem id (t2.1, c3.5, t5.9, ...) or all");
    cmd->add_option("--m", cfg.m, "Code length / x^m - 1");
  }
  code->add_option("--divisors", cfg.divisors, "Which generators to report")
      ->check(CLI::IsMember({"self-reciprocal", "all"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code_value = app.exit(e, out, err);
    return code_value == 0 ? kExitOk : kExitError;
  }

  std::ofstream file;
  std::ostream* sink = &out;
  if (!cfg.out_path.empty()) {
    file.open(cfg.out_path);
    if (!file) {
      err << "error: cannot open " << cfg.out_path << '\n';
      return kExitError;
    }
    sink = &file;
  }

  try {
    if (gen->parsed()) return cmd_gen(cfg, *sink);
    if (classify->parsed()) return cmd_classify(cfg, *sink);
    if (verify->parsed()) return cmd_verify(cfg, *sink, err);
    if (coterm->parsed()) return cmd_coterm(cfg, *sink);
    if (code->parsed()) return cmd_code(cfg, *sink);
    if (table->parsed()) return cmd_table(cfg, *sink);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  } catch (const CapacityError& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}

}  // namespace reciprodick::cli
