#include <doctest.h>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "cli.hpp"
#include "dha/geometry.hpp"
#include "dha/solver.hpp"
#include "dha/special_functions.hpp"

using namespace dha;
using Json = nlohmann::json;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kD = 0.80794550659903442;

struct Run {
  int code;
  std::string out;
  std::string err;

  std::string first_line() const { return out.substr(0, out.find('\n')); }
  double first_value() const { return std::stod(first_line()); }
  Json json() const { return Json::parse(out); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

int significant_digits(const std::string& s) {
  int n = 0;
  bool leading = true;
  for (char c : s) {
    if (c == 'e' || c == 'E') break;
    if (c < '0' || c > '9') continue;
    if (leading && c == '0') continue;
    leading = false;
    ++n;
  }
  return n;
}

}  // namespace

TEST_SUITE("cli constant") {
  TEST_CASE("text") {
    const Run r = run({"constant", "--format", "text"});
    CHECK(r.code == 0);
    CHECK(r.first_line().find("0.807945506599034") == 0);
    CHECK(significant_digits(r.first_line()) >= 17);
  }

  TEST_CASE("json") {
    const Run r = run({"constant", "--format", "json"});
    REQUIRE(r.code == 0);
    const Json j = r.json();
    CHECK(j["command"] == "constant");
    for (const char* key : {"d_rootfind", "d_kepler", "d_archav", "d_invbeta"}) {
      CHECK(std::abs(j["result"][key].get<double>() - kD) <= 5e-13);
    }
    CHECK(j["result"]["max_pairwise_delta"].get<double>() <= 5e-13);
    CHECK(j["result"]["reference_digits_matched"].get<int>() >= 13);
    CHECK(j["diagnostics"]["reference"].get<std::string>().size() == 91);
  }

  TEST_CASE("payload equals the library report") {
    const Json j = run({"constant", "--format", "json"}).json();
    const MethodReport rep = dha_report();
    CHECK(j["result"]["d_kepler"].get<double>() == *rep.d_kepler);
    CHECK(j["result"]["d_rootfind"].get<double>() == *rep.d_rootfind);
    CHECK(j["result"]["max_pairwise_delta"].get<double>() == rep.max_pairwise_delta);
  }

  TEST_CASE("loose tolerance") {
    const Run r = run({"constant", "--tol", "1e-6", "--format", "json"});
    CHECK(r.code == 0);
    CHECK(r.json()["result"]["max_pairwise_delta"].get<double>() <= 1e-5);
  }

  TEST_CASE("bad arguments") {
    CHECK(run({"constant", "--format", "xml"}).code == 2);
    CHECK(run({"constant", "--tol", "abc"}).code == 2);
    CHECK(run({"constant", "--tol", "-1"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"nonsense"}).code == 2);
  }
}

TEST_SUITE("cli lens-area") {
  TEST_CASE("examples") {
    CHECK(run({"lens-area", "1", "1", "0"}).first_value() == kPi);
    CHECK(std::abs(run({"lens-area", "1", "1", "0.80794550659903442"}).first_value() -
                   1.5707963267948966) <= 1e-12);
    CHECK(std::abs(run({"lens-area", "1", "1", "1"}).first_value() -
                   1.2283696986087567) <= 1e-12);
  }

  TEST_CASE("json payload is the library value") {
    const Json j = run({"lens-area", "2", "1", "1.7", "--format", "json"}).json();
    CHECK(j["result"].get<double>() == lens_area({2.0, 1.0, 1.7}));
    CHECK(j["inputs"]["R"].get<double>() == 2.0);
    CHECK(j["diagnostics"].is_object());
  }

  TEST_CASE("invalid input") {
    CHECK(run({"lens-area", "1", "1"}).code == 2);
    CHECK(run({"lens-area", "1", "x", "1"}).code == 2);
    CHECK(run({"lens-area", "0", "1", "1"}).code == 2);
    CHECK(run({"lens-area", "1", "1", "-1"}).code == 2);
  }
}

TEST_SUITE("cli offset") {
  TEST_CASE("examples") {
    const Run half = run({"offset", "1", "1", "--fraction", "0.5"});
    CHECK(half.code == 0);
    CHECK(half.first_line().find("0.807945506599034") == 0);
    CHECK(run({"offset", "1", "1", "--fraction", "1"}).first_value() == 0.0);
    CHECK(std::abs(run({"offset", "1", "1", "--area", "1.2283696986087567"}).first_value() -
                   1.0) <= 1e-10);
  }

  TEST_CASE("json diagnostics") {
    const Json j = run({"offset", "2", "1", "--fraction", "0.3", "--format", "json"}).json();
    const double d = j["result"].get<double>();
    CHECK(d == offset_for_fraction(2.0, 1.0, 0.3));
    CHECK(j["diagnostics"]["residual"].get<double>() <= 1e-13);
    CHECK(j["inputs"]["fraction"].get<double>() == 0.3);
  }

  TEST_CASE("target flags") {
    CHECK(run({"offset", "1", "1"}).code == 2);
    CHECK(run({"offset", "1", "1", "--fraction", "0.5", "--area", "1"}).code == 2);
    CHECK(run({"offset", "1", "1", "--fraction", "1.5"}).code == 2);
    CHECK(run({"offset", "1", "1", "--area", "10"}).code == 2);
  }
}

TEST_SUITE("cli kepler") {
  TEST_CASE("examples") {
    const Run r = run({"kepler", "-1", "1.5707963267948966"});
    CHECK(r.code == 0);
    CHECK(std::abs(r.first_value() - 0.83171119357973598) <= 1e-13);
    const Json j = run({"kepler", "-1", "1.5707963267948966", "--format", "json"}).json();
    CHECK(j["diagnostics"]["residual"].get<double>() <= 1e-13);

    CHECK(run({"kepler", "0", "0.7"}).first_value() == 0.7);

    const double series =
        run({"kepler", "0.5", "0.3", "--method", "series", "--terms", "50"}).first_value();
    const double newton = run({"kepler", "0.5", "0.3"}).first_value();
    CHECK(std::abs(series - newton) <= 1e-10);
  }

  TEST_CASE("series at a = -1 reports its residual") {
    const Run r = run({"kepler", "-1", "1.5707963267948966", "--method", "series",
                       "--terms", "1000", "--format", "json"});
    CHECK(r.code == 0);
    const Json j = r.json();
    CHECK(j["diagnostics"]["method"] == "series");
    CHECK(j["diagnostics"]["residual"].get<double>() > 0.0);
    CHECK(j["result"].get<double>() ==
          kepler_e_series({-1.0, kPi / 2}, 1000).y);
  }

  TEST_CASE("domain") {
    CHECK(run({"kepler", "2", "0.5"}).code == 2);
    CHECK(run({"kepler", "0.5", "4"}).code == 2);
    CHECK(run({"kepler", "1", "0"}).code == 2);
    CHECK(run({"kepler", "0.5", "0.3", "--method", "magic"}).code == 2);
  }
}

TEST_SUITE("cli invbeta") {
  TEST_CASE("examples") {
    CHECK(run({"invbeta", "0.5", "0.5", "1.5"}).first_line().find("0.16319398") == 0);
    CHECK(run({"invbeta", "0", "2", "3"}).first_value() == 0.0);
    CHECK(std::abs(run({"invbeta", "0.5", "0.5", "0.5"}).first_value() - 0.5) <= 1e-14);
  }

  TEST_CASE("json includes the forward residual") {
    const Json j = run({"invbeta", "0.3", "2", "3", "--format", "json"}).json();
    const double x = j["result"].get<double>();
    CHECK(x == beta_regularized_inverse(0.3, {2.0, 3.0}));
    CHECK(j["diagnostics"]["residual"].get<double>() ==
          std::abs(beta_regularized(x, {2.0, 3.0}) - 0.3));
  }

  TEST_CASE("domain") {
    CHECK(run({"invbeta", "1.5", "1", "1"}).code == 2);
    CHECK(run({"invbeta", "0.5", "0", "1"}).code == 2);
    CHECK(run({"invbeta", "0.5", "1", "-1"}).code == 2);
  }
}

TEST_SUITE("cli verify") {
  TEST_CASE("default run passes") {
    const Run r = run({"verify", "--samples", "1000000", "--seed", "42"});
    CHECK(r.code == 0);
    CHECK(r.first_line().rfind("PASS", 0) == 0);
  }

  TEST_CASE("few samples widen the gate") {
    CHECK(run({"verify", "--samples", "100", "--seed", "42"}).code == 0);
  }

  TEST_CASE("json schema") {
    const Run r = run({"verify", "--samples", "20000", "--format", "json"});
    CHECK(r.code == 0);
    const Json j = r.json();
    CHECK(j["command"] == "verify");
    CHECK(j["result"]["failed"].get<int>() == 0);
    const Json& checks = j["diagnostics"]["checks"];
    REQUIRE(checks.is_array());
    CHECK(checks.size() >= 10);
    for (const auto& c : checks) {
      CHECK(c.contains("quadrature_delta"));
      CHECK(c.contains("montecarlo_delta"));
      CHECK(c["quadrature_pass"].get<bool>());
      CHECK(c["montecarlo_pass"].get<bool>());
    }
  }
}

TEST_SUITE("cli binary") {
  TEST_CASE("exit codes and single-object json from the executable") {
    const auto shell = [](const std::string& args, std::string* out = nullptr) {
      const std::string cmd = std::string(DHA_CLI_PATH) + " " + args + " 2>/dev/null";
      FILE* p = popen(cmd.c_str(), "r");
      REQUIRE(p != nullptr);
      std::string text;
      char buf[512];
      while (std::fgets(buf, sizeof buf, p) != nullptr) text += buf;
      const int status = pclose(p);
      if (out) *out = text;
      return WEXITSTATUS(status);
    };
    std::string out;
    CHECK(shell("constant --format json", &out) == 0);
    CHECK(Json::parse(out).is_object());
    CHECK(shell("kepler -1 1.5707963267948966") == 0);
    CHECK(shell("offset 1 1") == 2);
    CHECK(shell("lens-area 1 1") == 2);
  }
}
