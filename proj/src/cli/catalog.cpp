#include "rls/cli/catalog.hpp"

#include "rls/bigfloat/expr.hpp"

namespace rls::cli {

using namespace identities;
using bigfloat::parse_complex;
using bigfloat::parse_real;

namespace {

Prime prime(const IdentityArgs& a) { return Prime{*a.p}; }

std::vector<CatalogEntry> build() {
  return {
      {"euler", "zeta(2k) against the Bernoulli closed form", {"k"},
       [](const IdentityArgs& a, const VerifyOptions& o) { return verify_euler(*a.k, o); }},
      {"ramanujan", "odd zeta values, alpha beta = pi^2", {"k", "alpha"},
       [](const IdentityArgs& a, const VerifyOptions& o) { return verify_ramanujan(*a.k, parse_real(*a.alpha), o); }},
      {"lerch", "zeta(4k+3) at alpha = beta = pi", {"k"},
       [](const IdentityArgs& a, const VerifyOptions& o) { return verify_lerch(*a.k, o); }},
      {"tan_pf", "tan/tanh partial fractions", {"x", "y"},
       [](const IdentityArgs& a, const VerifyOptions& o) {
         return verify_tan_partial_fraction(parse_complex(*a.x), parse_complex(*a.y), o);
       }},
      {"cot_pf", "cot/coth partial fractions", {"x", "y"},
       [](const IdentityArgs& a, const VerifyOptions& o) {
         return verify_cot_coth_partial_fraction(parse_complex(*a.x), parse_complex(*a.y), o);
       }},
      {"odd_ramanujan", "odd-index series, alpha beta = pi^2/4", {"k", "alpha"},
       [](const IdentityArgs& a, const VerifyOptions& o) { return verify_odd_ramanujan(*a.k, parse_real(*a.alpha), o); }},
      {"tanh_sum", "sum tanh((2n+1) pi/2)/(2n+1)^{4k+3}", {"k"},
       [](const IdentityArgs& a, const VerifyOptions& o) { return verify_tanh_sum(*a.k, o); }},
      {"main", "twisted identity for L(2k+1, chi_1), alpha beta = pi^2/p^2", {"p", "k", "alpha"},
       [](const IdentityArgs& a, const VerifyOptions& o) {
         return verify_main(prime(a), *a.k, parse_real(*a.alpha), o);
       }},
      {"lerch_analogue", "L(4k+3, chi_1) at alpha = beta = pi/p", {"p", "k"},
       [](const IdentityArgs& a, const VerifyOptions& o) { return verify_lerch_analogue(prime(a), *a.k, o); }},
      {"negative_k", "positive divisor powers, alpha beta = pi^2/p^2", {"p", "k", "alpha"},
       [](const IdentityArgs& a, const VerifyOptions& o) {
         return verify_negative_k(prime(a), *a.k, parse_real(*a.alpha), o);
       }},
      {"ramanujan_positive", "sum n^{2k+1}/(e^{2n alpha} - 1), alpha beta = pi^2", {"k", "alpha"},
       [](const IdentityArgs& a, const VerifyOptions& o) { return verify_ramanujan_positive(*a.k, parse_real(*a.alpha), o); }},
      {"k0", "twisted series at k = 0 against a logarithm", {"p", "alpha"},
       [](const IdentityArgs& a, const VerifyOptions& o) { return verify_k0(prime(a), parse_real(*a.alpha), o); }},
      {"dedekind_analogue", "odd-index eta-type identity, alpha beta = pi^2/4", {"alpha"},
       [](const IdentityArgs& a, const VerifyOptions& o) { return verify_dedekind_analogue(parse_real(*a.alpha), o); }},
      {"dedekind", "log eta transformation, alpha beta = pi^2", {"alpha"},
       [](const IdentityArgs& a, const VerifyOptions& o) { return verify_dedekind(parse_real(*a.alpha), o); }},
      {"grosswald", "transformation of F_{2k+1} on the upper half-plane", {"k", "z"},
       [](const IdentityArgs& a, const VerifyOptions& o) { return verify_grosswald(*a.k, parse_complex(*a.z), o); }},
      {"grosswald_analogue", "twisted transformation of the frak F series", {"p", "k", "z"},
       [](const IdentityArgs& a, const VerifyOptions& o) {
         return verify_grosswald_analogue(prime(a), *a.k, parse_complex(*a.z), o);
       }},
      {"frak_G", "frak G from the series against its closed form", {"p", "k", "z"},
       [](const IdentityArgs& a, const VerifyOptions& o) {
         return verify_frak_G(prime(a), *a.k, parse_complex(*a.z), o);
       }},
  };
}

bool has(const IdentityArgs& a, const std::string& name) {
  if (name == "p") return a.p.has_value();
  if (name == "k") return a.k.has_value();
  if (name == "alpha") return a.alpha.has_value();
  if (name == "z") return a.z.has_value();
  if (name == "x") return a.x.has_value();
  return a.y.has_value();
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build();
  return entries;
}

const CatalogEntry* find_identity(const std::string& id) {
  for (const auto& e : catalog()) {
    if (e.id == id) return &e;
  }
  return nullptr;
}

std::vector<std::string> missing_params(const CatalogEntry& e, const IdentityArgs& args) {
  std::vector<std::string> out;
  for (const auto& name : e.required) {
    if (!has(args, name)) out.push_back(name);
  }
  return out;
}

VerificationReport run_identity(const CatalogEntry& e, const IdentityArgs& args, const VerifyOptions& opt) {
  bigfloat::PrecisionScope scope(opt.precision);
  return e.run(args, opt);
}

}  // namespace rls::cli
