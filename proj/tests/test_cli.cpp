#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "ramanujan/cli.hpp"

using nlohmann::json;
using ramanujan::cli::run;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome call(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

json call_json(std::vector<std::string> args, int expected_code = 0) {
  args.emplace_back("--format");
  args.emplace_back("json");
  const Outcome o = call(std::move(args));
  REQUIRE(o.code == expected_code);
  return json::parse(o.out);
}

double as_double(const json& v) { return std::stod(v.get<std::string>()); }

}  // namespace

TEST_CASE("solve") {
  const json cos2 = call_json({"solve", "--problem", "cos_fixed", "--order", "2"});
  CHECK(cos2["command"] == "solve");
  CHECK(cos2["summary"]["termination"] == "ResidualMet");
  const double published[] = {0.66666666666667, 0.73903926244631, 0.73908513321515, 0.73908513321516};
  REQUIRE(cos2["rows"].size() == 5);
  for (int m = 1; m <= 4; ++m) CHECK(std::abs(as_double(cos2["rows"][m]["z"]) - published[m - 1]) < 1e-13);

  const json newton = call_json({"solve", "--problem", "cubic_2_5", "--order", "1"});
  CHECK(std::abs(as_double(newton["summary"]["root"]) - 2.09455148154233) < 1e-14);

  const json exact = call_json({"solve", "--problem", "cubic_2_5", "--mode", "rational", "--max-iter", "2"}, 2);
  CHECK(exact["summary"]["termination"] == "MaxIterations");
  CHECK(exact["rows"][1]["fraction"] == json{{"num", "21"}, {"den", "10"}});

  const Outcome bad = call({"solve", "--problem", "cos_fixed", "--order", "0"});
  CHECK(bad.code == 1);
  CHECK_FALSE(bad.err.empty());
  CHECK(call({"solve", "--problem", "nope"}).code == 1);
  CHECK(call({"solve", "--problem", "cos_fixed", "--poly", "1,2"}).code == 1);

  // z^2 + 1 at 0: f' = 0, so the Newton step is undefined.
  const Outcome flat = call({"solve", "--poly", "1,0,1"});
  CHECK(flat.code == 3);
  CHECK(flat.out.find("StepUndefined") != std::string::npos);

  const json cond = call_json({"solve", "--problem", "cos_fixed", "--order", "2", "--condition"});
  CHECK(cond["columns"].back() == "condition");
}

TEST_CASE("converge") {
  const json sqrt2 = call_json({"converge", "--problem", "sqrt", "--a", "2", "--c", "1", "--mode", "rational",
                                "--nmax", "12"});
  const int digits[] = {3, 4, 4, 5, 7, 7, 8, 9};
  for (int n = 5; n <= 12; ++n) CHECK(sqrt2["rows"][n - 1]["digits"] == digits[n - 5]);
  CHECK(sqrt2["rows"][11]["fraction"] == json{{"num", "47321"}, {"den", "33461"}});

  const json sinh = call_json({"converge", "--problem", "sin_half", "--nmax", "23"});
  CHECK(std::abs(as_double(sinh["rows"][22]["value"]) - 1.49730038909589) < 1e-13);

  const json cubic = call_json({"converge", "--problem", "cubic_2_5", "--nmax", "1", "--digits", "1"});
  CHECK(cubic["rows"][0]["value"] == "2.1");

  // sin is not expandable exactly at 1.
  CHECK(call({"converge", "--problem", "sin_half", "--mode", "rational"}).code == 1);
  CHECK(call({"converge", "--problem", "cos_fixed", "--nmax", "0"}).code == 1);
}

TEST_CASE("series") {
  const json s = call_json({"series", "--coeffs", "1,0,1", "--n", "10"});
  CHECK(s["summary"]["last_convergent"] == "0.684211");
  CHECK(s["summary"]["last_convergent_fraction"] == json{{"num", "13"}, {"den", "19"}});
  std::vector<std::string> p;
  for (const auto& row : s["rows"]) p.push_back(row["P_k"]["num"]);
  CHECK(p == std::vector<std::string>{"1", "1", "1", "2", "3", "4", "6", "9", "13", "19"});

  const json q = call_json({"series", "--coeffs", "5,-6", "--n", "40", "--mode", "float"});
  CHECK(std::abs(as_double(q["summary"]["last_convergent"]) - 1.0 / 3.0) < 1e-4);

  CHECK(call({"series", "--n", "5"}).code == 1);
  CHECK(call({"series", "--coeffs", "0,0"}).code == 1);
}

TEST_CASE("tables") {
  for (const char* id : {"1", "2", "4"}) {
    CAPTURE(id);
    const Outcome o = call({"tables", "--table", id});
    CHECK(o.code == 0);
  }
  // The published sin column's row 0 disagrees with the start its rows need.
  const json t3 = call_json({"tables", "--table", "3"}, 2);
  CHECK(t3["summary"]["cells_within_tolerance"] == 29);
  for (const auto& row : t3["rows"]) {
    if (row["n"] != 0 || row["column"] != "x-sin(x)-1/2") CHECK(as_double(row["abs_deviation"]) <= 1e-13);
  }
  const json t4 = call_json({"tables", "--table", "4"});
  CHECK(t4["summary"]["cells"] == 14);
  CHECK(t4["summary"]["within_tolerance"] == true);
  const json t2 = call_json({"tables", "--table", "2"});
  CHECK(t2["summary"]["all_targets_met"] == true);
  CHECK(call({"tables", "--table", "5"}).code == 1);
}

TEST_CASE("order") {
  const json o = call_json({"order", "--problem", "cos_fixed", "--n", "1..3"});
  REQUIRE(o["rows"].size() == 3);
  for (int n = 1; n <= 3; ++n) {
    CHECK(std::abs(as_double(o["rows"][n - 1]["estimate"]) - (n + 1)) < 0.3);
    CHECK(o["rows"][n - 1]["flagged"] == false);
  }
  const json cubic = call_json({"order", "--problem", "cubic_2_5", "--n", "1"});
  CHECK(std::abs(as_double(cubic["rows"][0]["estimate"]) - 2.0) < 0.3);
  CHECK(call({"order", "--problem", "cos_fixed", "--n", "3..1"}).code == 1);
  CHECK(call({"order", "--problem", "cos_fixed", "--n", "0..2"}).code == 1);
}

TEST_CASE("formats carry the same numbers") {
  const std::vector<std::string> base = {"converge", "--problem", "sqrt", "--mode", "rational", "--nmax", "6"};
  auto with = [&](const char* f) {
    auto a = base;
    a.insert(a.end(), {"--format", f});
    return call(a);
  };
  const Outcome text = with("text");
  const Outcome csv = with("csv");
  const json doc = json::parse(with("json").out);
  for (const auto& row : doc["rows"]) {
    const std::string value = row["value"];
    const std::string frac = row["fraction"]["num"].get<std::string>() + "/" + row["fraction"]["den"].get<std::string>();
    CHECK(text.out.find(value) != std::string::npos);
    CHECK(text.out.find(frac) != std::string::npos);
    CHECK(csv.out.find(value + "," + frac) != std::string::npos);
  }
  CHECK(csv.out.rfind("n,value,fraction,digits\n", 0) == 0);
  CHECK(csv.out.find("# mode=rational") != std::string::npos);
  CHECK(call({"converge", "--problem", "sqrt", "--format", "xml"}).code == 1);
}

TEST_CASE("help and missing subcommand") {
  CHECK(call({"--help"}).code == 0);
  CHECK(call({}).code == 1);
}
