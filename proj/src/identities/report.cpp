#include "rls/identities/report.hpp"

#include <cmath>
#include <sstream>

namespace rls::identities {

using bigfloat::PrecisionScope;

void VerificationReport::finalize() {
  PrecisionScope scope(precision);
  abs_residual = abs(lhs - rhs);
  const BigReal scale = bigfloat::max(abs(lhs), abs(rhs));
  rel_residual = scale.is_zero() ? BigReal(0L) : abs_residual / scale;
  pass = abs_residual < threshold;
}

std::string decimal_string(const BigReal& x, int digits) {
  int sig = digits + 1;
  if (!x.is_zero() && x.is_finite()) {
    const double e = std::floor(x.log10_abs());
    if (e > 0) sig += static_cast<int>(e);
  }
  return x.to_scientific(sig);
}

nlohmann::ordered_json value_to_json(const BigComplex& v, bool complex_valued, int digits) {
  if (!complex_valued) return decimal_string(v.re, digits);
  return nlohmann::ordered_json::array({decimal_string(v.re, digits), decimal_string(v.im, digits)});
}

nlohmann::ordered_json VerificationReport::to_json() const {
  const int d = static_cast<int>(precision.digits);
  nlohmann::ordered_json j;
  j["identity_id"] = identity_id;
  j["params"] = params;
  j["lhs"] = value_to_json(lhs, complex_valued, d);
  j["rhs"] = value_to_json(rhs, complex_valued, d);
  j["abs_residual"] = abs_residual.to_scientific(6);
  j["rel_residual"] = rel_residual.to_scientific(6);
  j["threshold"] = threshold.to_scientific(6);
  j["pass"] = pass;
  if (n_used) {
    j["N_used"] = *n_used;
  } else {
    j["N_used"] = nullptr;
  }
  j["digits"] = precision.digits;
  if (!notes.empty()) j["notes"] = notes;
  return j;
}

namespace {

std::string param_summary(const nlohmann::ordered_json& params) {
  std::string s;
  for (auto it = params.begin(); it != params.end(); ++it) {
    if (!s.empty()) s += ";";
    s += it.key() + "=" + (it->is_string() ? it->get<std::string>() : it->dump());
  }
  return s;
}

std::string plain(const BigComplex& v, bool complex_valued, int digits) {
  if (!complex_valued) return v.re.to_scientific(digits);
  return v.to_scientific(digits);
}

}  // namespace

std::string VerificationReport::csv_header() {
  return "identity_id,params,lhs,rhs,abs_residual,rel_residual,threshold,pass,N_used,digits";
}

std::string VerificationReport::to_csv_row() const {
  const int d = static_cast<int>(precision.digits);
  std::ostringstream os;
  os << identity_id << ",\"" << param_summary(params) << "\",\"" << plain(lhs, complex_valued, d) << "\",\""
     << plain(rhs, complex_valued, d) << "\"," << abs_residual.to_scientific(6) << ','
     << rel_residual.to_scientific(6) << ',' << threshold.to_scientific(6) << ',' << (pass ? "true" : "false") << ','
     << (n_used ? std::to_string(*n_used) : "") << ',' << precision.digits;
  return os.str();
}

std::string VerificationReport::markdown_header() {
  return "| identity | params | left-hand side | right-hand side | residual | pass |\n"
         "|---|---|---|---|---|---|";
}

std::string VerificationReport::to_markdown_row() const {
  std::ostringstream os;
  os << "| " << identity_id << " | " << param_summary(params) << " | " << plain(lhs, complex_valued, 20) << " | "
     << plain(rhs, complex_valued, 20) << " | " << abs_residual.to_scientific(3) << " | " << (pass ? "yes" : "no")
     << " |";
  return os.str();
}

}  // namespace rls::identities
