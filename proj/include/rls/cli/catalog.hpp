#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "rls/identities/identities.hpp"

namespace rls::cli {

using identities::VerificationReport;
using identities::VerifyOptions;

/// Raw command-line parameters; expressions are evaluated at run time.
struct IdentityArgs {
  std::optional<long> p;
  std::optional<long> k;
  std::optional<std::string> alpha;
  std::optional<std::string> z;
  std::optional<std::string> x;
  std::optional<std::string> y;
};

struct CatalogEntry {
  std::string id;
  std::string summary;
  /// Names among p, k, alpha, z, x, y.
  std::vector<std::string> required;
  std::function<VerificationReport(const IdentityArgs&, const VerifyOptions&)> run;
};

const std::vector<CatalogEntry>& catalog();

/// nullptr when unknown.
const CatalogEntry* find_identity(const std::string& id);

/// Missing required parameters, in catalog order.
std::vector<std::string> missing_params(const CatalogEntry& e, const IdentityArgs& args);

/// Evaluates the expressions at opt.precision and runs the check.
VerificationReport run_identity(const CatalogEntry& e, const IdentityArgs& args, const VerifyOptions& opt);

}  // namespace rls::cli
