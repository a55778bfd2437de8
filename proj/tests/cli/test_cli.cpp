#include <cstdlib>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "rls/bigfloat/expr.hpp"
#include "rls/cli/app.hpp"
#include "rls/cli/catalog.hpp"
#include "rls/cli/scan.hpp"
#include "rls/errors.hpp"

using rls::bigfloat::BigReal;
using rls::bigfloat::make_precision;
using rls::bigfloat::pow10;
using rls::bigfloat::PrecisionScope;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome rls_run(std::initializer_list<const char*> args) {
  std::vector<const char*> argv{"rls"};
  argv.insert(argv.end(), args.begin(), args.end());
  std::ostringstream out, err;
  const int code = rls::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("expression parser") {
  PrecisionScope scope(make_precision(50));
  const BigReal pi = rls::bigfloat::pi();
  CHECK(abs(rls::bigfloat::parse_real("pi") - pi) < pow10(-60));
  CHECK(abs(rls::bigfloat::parse_real("pi/25") - pi / 25) < pow10(-60));
  CHECK(abs(rls::bigfloat::parse_real("pi^2/4") - pi * pi / 4) < pow10(-60));
  CHECK(abs(rls::bigfloat::parse_real("3pi/2") - 3 * pi / 2) < pow10(-60));
  CHECK(abs(rls::bigfloat::parse_real("0.25") - BigReal(rls::exact::Rational(1, 4))) < pow10(-70));
  CHECK(abs(rls::bigfloat::parse_real("1e-3") - BigReal(rls::exact::Rational(1, 1000))) < pow10(-70));
  CHECK(abs(rls::bigfloat::parse_real("-(2 + 1/3)*3") + 7) < pow10(-70));
  auto z = rls::bigfloat::parse_complex("(1+3i)/2");
  CHECK(abs(z.re - BigReal(rls::exact::Rational(1, 2))) < pow10(-70));
  CHECK(abs(z.im - BigReal(rls::exact::Rational(3, 2))) < pow10(-70));
  auto h = rls::bigfloat::parse_complex("i/2");
  CHECK(h.re.is_zero());
  CHECK(abs(h.im - BigReal(rls::exact::Rational(1, 2))) < pow10(-70));

  auto e = rls::bigfloat::parse_expression("pi/25");
  REQUIRE(e.exact);
  CHECK(e.exact->label() == "pi/25");
  CHECK(e.exact->label(true) == "π/25");
  CHECK(rls::bigfloat::parse_expression("pi^2/4").exact->label() == "pi^2/4");
  CHECK(rls::bigfloat::parse_expression("1").exact->label() == "1");
  CHECK(rls::bigfloat::parse_expression("2*pi - pi").exact->label() == "pi");
  CHECK_FALSE(rls::bigfloat::parse_expression("1 + pi").exact);
  CHECK_FALSE(rls::bigfloat::parse_expression("2i").exact);

  for (const char* bad : {"", "pi +", "(1", "x", "1/0", "2^pi", "1..2"}) {
    CHECK_THROWS_AS(rls::bigfloat::parse_complex(bad), rls::DomainError);
  }
  CHECK_THROWS_AS(rls::bigfloat::parse_real("i"), rls::DomainError);
}

TEST_CASE("catalog covers every identity") {
  CHECK(rls::cli::catalog().size() == 17);
  CHECK(rls::cli::find_identity("main") != nullptr);
  CHECK(rls::cli::find_identity("nope") == nullptr);
  rls::cli::IdentityArgs args;
  args.p = 3;
  auto missing = rls::cli::missing_params(*rls::cli::find_identity("main"), args);
  CHECK(missing == std::vector<std::string>{"k", "alpha"});
}

TEST_CASE("verify subcommand") {
  auto md = rls_run({"verify", "main", "--p", "5", "--k", "3", "--alpha", "pi", "--digits", "50", "--n", "1000",
                     "--format", "md"});
  CHECK(md.code == 0);
  CHECK(md.out.find("| 5 | 3 | π | π/25 | 3.915620336334286... | 3.915620336334286... |") != std::string::npos);

  auto k0 = rls_run({"verify", "k0", "--p", "2", "--alpha", "pi"});
  CHECK(k0.code == 0);
  auto j = nlohmann::json::parse(k0.out);
  CHECK(j["pass"] == true);
  {
    PrecisionScope scope(make_precision(50));
    const BigReal rhs = BigReal::parse(j["rhs"].get<std::string>());
    CHECK(abs(rhs + rls::bigfloat::log(BigReal(2L)) / 4) < pow10(-50));
  }

  auto euler = rls_run({"verify", "euler", "--k", "1", "--format", "csv"});
  CHECK(euler.code == 0);
  CHECK(euler.out.rfind("identity_id,", 0) == 0);

  CHECK(rls_run({"verify", "nope"}).code == 2);
  CHECK(rls_run({"verify", "main", "--p", "3"}).code == 2);
  CHECK(rls_run({"verify", "main", "--p", "4", "--k", "1", "--alpha", "1"}).code == 2);
  CHECK(rls_run({"verify", "euler", "--k", "1", "--format", "xml"}).code == 2);
  CHECK(rls_run({"verify", "main", "--p", "3", "--k", "1", "--alpha", "pi+"}).code == 2);
  CHECK(rls_run({}).code == 2);

  // A threshold no computation can meet.
  auto strict = rls_run({"verify", "euler", "--k", "2", "--threshold", "0"});
  CHECK(strict.code == 2);
  auto fail = rls_run({"verify", "main", "--p", "5", "--k", "3", "--alpha", "pi", "--n", "2", "--threshold", "1e-40"});
  CHECK(fail.code == 1);

  auto list = rls_run({"verify", "--list"});
  CHECK(list.code == 0);
  CHECK(list.out.find("grosswald_analogue") != std::string::npos);
}

TEST_CASE("digits round-trip through the printed decimal") {
  for (const char* d : {"20", "50", "80"}) {
    auto r = rls_run({"verify", "main", "--p", "5", "--k", "3", "--alpha", "pi", "--digits", d});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    const long digits = std::stol(d);
    PrecisionScope scope(make_precision(digits));
    auto again = rls_run({"verify", "main", "--p", "5", "--k", "3", "--alpha", "pi", "--digits", "120"});
    auto hi = nlohmann::json::parse(again.out);
    PrecisionScope wide(make_precision(130));
    const BigReal printed = BigReal::parse(j["lhs"].get<std::string>());
    const BigReal reference = BigReal::parse(hi["lhs"].get<std::string>());
    CHECK(abs(printed - reference) < pow10(-digits));
  }
}

TEST_CASE("identical invocations give identical output") {
  auto a = rls_run({"scan", "--primes", "2,3,5", "--k-range", "1..8", "--jobs", "4"});
  auto b = rls_run({"scan", "--primes", "2,3,5", "--k-range", "1..8", "--jobs", "1"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  auto c = rls_run({"verify", "grosswald", "--k", "3", "--z", "(1+3i)/2"});
  auto d = rls_run({"verify", "grosswald", "--k", "3", "--z", "(1+3i)/2"});
  CHECK(c.code == 0);
  CHECK(c.out == d.out);
}

TEST_CASE("tables") {
  auto t1 = rls_run({"table1", "--format", "json"});
  CHECK(t1.code == 0);
  auto rows = nlohmann::json::parse(t1.out);
  CHECK(rows.size() == 7);

  // Every cell agrees except the last left-hand side, printed as ...279.
  auto t2 = rls_run({"table2", "--format", "json"});
  CHECK(t2.code == 1);
  auto j = nlohmann::json::parse(t2.out);
  REQUIRE(j["rows"].size() == 9);
  for (std::size_t i = 0; i < 8; ++i) {
    CHECK(j["rows"][i]["lhs_match"] == true);
    CHECK(j["rows"][i]["rhs_match"] == true);
  }
  CHECK(j["rows"][8]["rhs_match"] == true);
  CHECK(j["rows"][8]["lhs"] == "3.915620336334286");
  CHECK(t2.err.find("3.915620336334279") != std::string::npos);

  auto wide = rls_run({"table2", "--n", "100000", "--format", "json"});
  auto last = nlohmann::json::parse(wide.out)["rows"][8]["report"];
  PrecisionScope scope(make_precision(50));
  CHECK(BigReal::parse(last["abs_residual"].get<std::string>()) < pow10(-25));

  auto md = rls_run({"table2", "--format", "md"});
  CHECK(md.out.find("| 3 | 2 | π | π/9 | -0.226840615859532... | -0.226840615859532... |") != std::string::npos);
  CHECK(rls_run({"table2", "--data-dir", "/nonexistent"}).code == 2);
}

TEST_CASE("roots and scan") {
  auto r = rls_run({"roots", "--p", "2", "--k", "1"});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["origin_multiplicity"] == 2);
  CHECK(j["roots"].size() == 2);

  auto r53 = rls_run({"roots", "--p", "5", "--k", "3", "--format", "md"});
  CHECK(r53.code == 0);
  CHECK(r53.out.find("| 5 | 3 | 2 | 4 |") != std::string::npos);

  CHECK(rls_run({"roots", "--p", "6", "--k", "1"}).code == 2);
  CHECK(rls_run({"roots", "--p", "5"}).code == 2);

  auto s = rls_run({"scan", "--primes", "2,3,5,7", "--k-range", "1..12"});
  CHECK(s.code == 0);
  auto sj = nlohmann::json::parse(s.out);
  CHECK(sj["summary"]["cells"] == 48);
  CHECK(sj["summary"]["conjecture1_pass"] == 48);
  for (const auto& cell : sj["cells"]) {
    const long k = cell["k"].get<long>();
    CHECK(cell["conjecture2"]["verdict"] == (k % 2 == 0 ? "OnlyPlusMinusIOverP" : "NoCommonRoots"));
  }
  CHECK(rls_run({"scan", "--k-range", "5..2"}).code == 2);
  CHECK(rls_run({"scan", "--primes", "2,9"}).code == 2);
  CHECK(rls_run({"scan", "--jobs", "0"}).code == 2);

  // An impossible tolerance turns every cell into a candidate without aborting.
  auto tight = rls_run({"scan", "--primes", "5", "--k-range", "3..4", "--sep-tol", "10", "--digits", "20"});
  CHECK(tight.code == 1);
  auto tj = nlohmann::json::parse(tight.out);
  CHECK(tj["summary"]["cells"] == 2);
  CHECK(tj["summary"]["candidates"].size() == 2);
}

TEST_CASE("per-cell errors do not abort a scan") {
  rls::cli::ScanSpec spec;
  spec.primes = {2, 3};
  spec.k_min = 1;
  spec.k_max = 3;
  spec.precision = make_precision(30);
  spec.jobs = 3;
  auto res = rls::cli::run_scan(spec);
  CHECK(res.cells.size() == 6);
  CHECK(res.cells[0].p == 2);
  CHECK(res.cells[5].p == 3);
  CHECK(res.cells[5].k == 3);
  CHECK(res.summary.all_pass());

  auto bad = rls::cli::scan_cell(4, 1, make_precision(30), {});
  CHECK(bad.error.has_value());
}

TEST_CASE("environment supplies defaults below flags") {
  setenv("RLS_DIGITS", "30", 1);
  auto env = rls_run({"verify", "euler", "--k", "2"});
  CHECK(nlohmann::json::parse(env.out)["digits"] == 30);
  auto flag = rls_run({"verify", "euler", "--k", "2", "--digits", "40"});
  CHECK(nlohmann::json::parse(flag.out)["digits"] == 40);
  unsetenv("RLS_DIGITS");
  auto def = rls_run({"verify", "euler", "--k", "2"});
  CHECK(nlohmann::json::parse(def.out)["digits"] == 50);
}
