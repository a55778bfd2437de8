#include "rls/rootfinder/table1.hpp"

#include <sstream>

#include "rls/polynomials/ramanujan.hpp"
#include "rls/rootfinder/conjectures.hpp"

namespace rls::rootfinder {

using bigfloat::PrecisionScope;

Table1Expectation table1_expectation_from_json(const nlohmann::ordered_json& j) {
  Table1Expectation row;
  row.p = j.at("p").get<long>();
  row.k = j.at("k").get<long>();
  row.scaled = polynomials::poly_from_json(j.at("poly"));
  row.printed = j.at("printed").get<std::string>();
  row.pm_i = j.at("pm_i").get<bool>();
  if (j.contains("quartic") && !j.at("quartic").is_null()) {
    const auto& q = j.at("quartic");
    row.quartic = QuarticForm{exact::parse_rational(q.at("a").get<std::string>()),
                              exact::parse_rational(q.at("b").get<std::string>()), q.at("d").get<long>()};
  }
  return row;
}

std::vector<BigComplex> closed_form_roots(const Table1Expectation& row) {
  std::vector<BigComplex> out{BigComplex(0L), BigComplex(0L)};
  if (row.pm_i) {
    out.emplace_back(BigReal(0L), BigReal(1L));
    out.emplace_back(BigReal(0L), BigReal(-1L));
  }
  if (row.quartic) {
    const BigReal a(row.quartic->a);
    const BigReal bs = BigReal(row.quartic->b) * bigfloat::sqrt(BigReal(row.quartic->d));
    for (long s : {1L, -1L}) {
      BigComplex w = sqrt(BigComplex(a, bs * s));
      out.push_back(w);
      out.push_back(-w);
    }
  }
  return out;
}

Table1RowResult check_table1_row(const Table1Expectation& row, const Precision& prec, const BigReal& root_tol) {
  const auto poly = polynomials::build_ramanujan_type(exact::Prime(row.p), row.k);
  Table1RowResult r{row.p, row.k, poly.scaled, poly.scaled == row.scaled, poly.scaled.to_string() == row.printed,
                    find_roots(poly.scaled, prec), BigReal(), false};

  PrecisionScope scope(prec);
  auto expected = closed_form_roots(row);
  r.max_root_error = BigReal(0L);
  if (expected.size() != r.roots.roots.size()) {
    mpfr_set_inf(r.max_root_error.get(), 1);
    return r;
  }
  std::vector<bool> used(r.roots.roots.size(), false);
  for (const auto& e : expected) {
    std::size_t best = used.size();
    BigReal best_d;
    for (std::size_t i = 0; i < used.size(); ++i) {
      if (used[i]) continue;
      BigReal d = abs(r.roots.roots[i] - e);
      if (best == used.size() || d < best_d) {
        best = i;
        best_d = d;
      }
    }
    used[best] = true;
    r.max_root_error = bigfloat::max(r.max_root_error, best_d);
  }
  r.roots_match = r.max_root_error < root_tol;
  return r;
}

nlohmann::ordered_json Table1RowResult::to_json() const {
  nlohmann::ordered_json j;
  j["p"] = p;
  j["k"] = k;
  j["scaled_poly"] = scaled.to_string();
  j["coefficients"] = polynomials::poly_to_json(scaled);
  auto roots_json = nlohmann::ordered_json::array();
  for (const auto& z : roots.roots) roots_json.push_back(complex_to_json(z, 30));
  j["roots"] = roots_json;
  j["max_root_error"] = max_root_error.to_scientific(6);
  j["coefficients_match"] = coefficients_match;
  j["printed_match"] = printed_match;
  j["roots_match"] = roots_match;
  j["pass"] = pass();
  return j;
}

std::string Table1RowResult::to_markdown() const {
  std::ostringstream os;
  os << "| " << p << " | " << k << " | " << scaled.to_string() << " | ";
  std::vector<std::string> real, nonreal;
  for (const auto& z : roots.roots) {
    if (z.re.is_zero() && z.im.is_zero()) {
      real.emplace_back("0");
    } else {
      nonreal.push_back(z.re.to_fixed(12) + (z.im.sign() < 0 ? " - " : " + ") + abs(z.im).to_fixed(12) + "i");
    }
  }
  auto join = [](const std::vector<std::string>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i];
    return s.empty() ? std::string("-") : s;
  };
  os << join(real) << " | " << join(nonreal) << " |";
  return os.str();
}

}  // namespace rls::rootfinder
