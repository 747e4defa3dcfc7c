#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "spherelab/cli.hpp"
#include "spherelab/io.hpp"
#include "test_util.hpp"

using namespace testutil;
using spherelab::io::Json;
namespace fs = std::filesystem;

namespace {

const char* kQuintic = R"({"n": 2, "numerator": {"mode": "gram", "entries": [
  {"alpha": [5,0], "beta": [5,0], "re": "1"}, {"alpha": [3,1], "beta": [3,1], "re": "5"},
  {"alpha": [1,2], "beta": [1,2], "re": "5"}, {"alpha": [0,5], "beta": [0,5], "re": "1"}]}})";

struct Run {
  int code;
  std::string out, err;
  Json json() const { return Json::parse(out); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream o, e;
  const int code = spherelab::cli::run(args, o, e);
  return {code, o.str(), e.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("spherelab_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                                        "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string file(const std::string& name, const std::string& text) {
    const auto p = (dir_ / name).string();
    std::ofstream(p) << text;
    return p;
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

}  // namespace

TEST(Io, ParseGramMap) {
  const auto in = io::parse_map(io::parse_text(kQuintic));
  EXPECT_EQ(in.n, 2);
  EXPECT_EQ(in.gram.d, 5);
  EXPECT_EQ(in.gram.rank, 4u);
  EXPECT_EQ(in.den.coeffs, (ExactPolynomial{{mi({0, 0}), S("1")}}));
  EXPECT_FALSE(in.explicit_map.has_value());
}

TEST(Io, ParseExplicitIdentity) {
  const auto in = io::parse_map(io::parse_text(R"({"n": 2, "numerator": {"mode": "explicit", "N": 2, "coefficients": [
    {"alpha": [1,0], "vector": [["1","0"],["0","0"]]}, {"alpha": [0,1], "vector": [["0","0"],["1","0"]]}]},
    "denominator": [{"alpha": [0,0], "re": "1"}]})"));
  EXPECT_EQ(in.gram.G, norm_power(2, 1));
  EXPECT_EQ(in.gram.rank, 2u);
  ASSERT_TRUE(in.explicit_map.has_value());
  EXPECT_TRUE(in.explicit_map->is_polynomial());
}

TEST(Io, RejectsZeroConstantTerm) {
  try {
    io::parse_map(io::parse_text(R"({"n": 2, "numerator": {"mode": "gram", "entries": [
      {"alpha": [1,0], "beta": [1,0], "re": "1"}]}, "denominator": [{"alpha": [1,0], "re": "1"}]})"));
    FAIL();
  } catch (const io::SchemaError& e) {
    EXPECT_EQ(e.where(), "/denominator");
  }
}

TEST(Io, SchemaPaths) {
  auto where = [](const std::string& text) {
    try {
      io::parse_map(io::parse_text(text));
    } catch (const io::SchemaError& e) {
      return e.where();
    }
    return std::string("none");
  };
  EXPECT_EQ(where(R"({"numerator": {}})"), "/n");
  EXPECT_EQ(where(R"({"n": 1, "numerator": {"mode": "x"}})"), "/numerator/mode");
  EXPECT_EQ(where(R"({"n": 1, "numerator": {"mode": "gram", "entries": [{"alpha": [1], "beta": [1], "re": 0.5}]}})"),
            "/numerator/entries/0/re");
  EXPECT_EQ(where(R"({"n": 1, "numerator": {"mode": "gram", "entries": [{"alpha": [1,0], "beta": [1], "re": "1"}]}})"),
            "/numerator/entries/0/alpha");
  EXPECT_EQ(where(R"({"n": 1, "numerator": {"mode": "gram", "entries": [{"alpha": [1], "beta": [1], "re": "1", "im": "1"}]}})"),
            "/numerator/entries/0");
  EXPECT_EQ(where("{\"n\": 1,"), "");
}

TEST(Io, ConflictingPairRejected) {
  EXPECT_THROW(io::parse_form(io::parse_text(R"({"n": 2, "entries": [
    {"alpha": [1,0], "beta": [0,1], "re": "1", "im": "1"},
    {"alpha": [0,1], "beta": [1,0], "re": "1", "im": "1"}]})")),
               io::SchemaError);
  // the conjugate is consistent
  EXPECT_NO_THROW(io::parse_form(io::parse_text(R"({"n": 2, "entries": [
    {"alpha": [1,0], "beta": [0,1], "re": "1", "im": "1"},
    {"alpha": [0,1], "beta": [1,0], "re": "1", "im": "-1"}]})")));
}

TEST(Io, FloatFormsAreExactBinary) {
  const auto r = io::parse_form(io::parse_text(R"({"n": 1, "mode": "float", "entries": [{"alpha": [1], "beta": [1], "re": 0.75}]})"));
  EXPECT_EQ(r.coeff(mi({1}), mi({1})), S("3/4"));
}

TEST(Io, RoundTrips) {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 20; ++t) {
    const auto r = random_form(rng, 2, 2);
    EXPECT_EQ(io::parse_form(io::form_to_json(r)), r);
  }
  const auto in = io::parse_map(io::parse_text(kQuintic));
  const auto back = io::parse_map(io::map_to_json(in.gram, in.den));
  EXPECT_EQ(back.gram.G, in.gram.G);
  EXPECT_EQ(back.den.coeffs, in.den.coeffs);
}

TEST_F(CliTest, CountExamples) {
  auto r = run({"count", "--n", "2", "--d", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.json()["diagnostics"]["K"], "34");
  r = run({"count", "--n", "3", "--d", "2"});
  EXPECT_EQ(r.json()["diagnostics"]["K"], "45");
  EXPECT_EQ(r.json()["diagnostics"]["polynomial_degree"], 5);
  EXPECT_EQ(r.json()["diagnostics"]["polynomial_degree_check"], true);
}

TEST_F(CliTest, ReportHeader) {
  const auto j = run({"count", "--n", "1", "--d", "1"}).json();
  EXPECT_EQ(j["tool"], "spherelab");
  EXPECT_EQ(j["version"], "0.1.0");
  EXPECT_TRUE(j["convention"].is_string());
  EXPECT_EQ(j["verb"], "count");
  EXPECT_EQ(j["status"], "pass");
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"count", "--n", "2", "--d", "3", "--bogus"}).code, 2);
  EXPECT_EQ(run({"count", "--n", "2"}).code, 2);
  EXPECT_EQ(run({"verify"}).code, 2);
  EXPECT_EQ(run({"verify", "--input", path("missing.json")}).code, 2);
  EXPECT_EQ(run({"verify", "--input", file("bad.json", "{not json")}).code, 2);
  EXPECT_EQ(run({"construct", "--automorphism", "--blaschke", "--a", "1/2"}).code, 2);
  EXPECT_EQ(run({"construct", "--linear-denom", "--a", "1/2", "--m", "1"}).code, 2);
  const auto r = run({"verify", "--input", file("schema.json", R"({"n": 1, "numerator": {"mode": "gram"}})")});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("/numerator/entries"), std::string::npos);
}

TEST_F(CliTest, VerifyPassAndFail) {
  auto r = run({"verify", "--input", file("ex.json", kQuintic)});
  EXPECT_EQ(r.code, 0);
  const auto d = r.json()["diagnostics"];
  EXPECT_EQ(d["verification"], "ok");
  EXPECT_EQ(d["map"]["N"], 4);
  EXPECT_EQ(d["map"]["deg_p"], 5);
  EXPECT_EQ(d["gap_identities"]["all_hold"], true);

  // z1 alone is not a sphere map in two variables
  r = run({"verify", "--input", file("z1.json", R"({"n": 2, "numerator": {"mode": "gram", "entries": [
    {"alpha": [1,0], "beta": [1,0], "re": "1"}]}})")});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.json()["diagnostics"]["verification"], "not a sphere map");
  EXPECT_FALSE(r.json()["diagnostics"]["residual_blocks"].empty());
}

TEST_F(CliTest, ReduceExample) {
  const auto r = run({"reduce", "--input", file("ex.json", kQuintic), "--output", path("chain.json")});
  EXPECT_EQ(r.code, 0);
  const auto j = r.json();
  EXPECT_EQ(j["diagnostics"]["steps"], 2);
  EXPECT_EQ(j["diagnostics"]["terminal"]["N"], 6);
  EXPECT_EQ(j["diagnostics"]["terminal"]["gram_is_norm_power"], true);
  const auto chain = io::read_json_file(path("chain.json"));
  ASSERT_EQ(chain.size(), 3u);
  EXPECT_EQ(chain, j["chain"]);
  // every stored link is itself a sphere map
  for (const auto& link : chain) {
    const auto in = io::parse_map(link["map"]);
    EXPECT_TRUE(verify_sphere_map(in.gram, in.den).ok());
  }
}

TEST_F(CliTest, ConstructThenVerify) {
  struct Case {
    std::vector<std::string> args;
  };
  const std::vector<Case> cases = {
      {{"construct", "--automorphism", "--a", "1/2,1/3"}},
      {{"construct", "--blaschke", "--m", "1", "--roots", "1/2,1/3i"}},
      {{"construct", "--linear-denom", "--a", "3/5", "--m", "1", "--M", "4/5"}},
      {{"construct", "--tensor-product", "--a", "1/2", "--a", "1/3"}},
  };
  for (std::size_t i = 0; i < cases.size(); ++i) {
    auto args = cases[i].args;
    const auto out = path("map" + std::to_string(i) + ".json");
    args.insert(args.end(), {"--output", out});
    const auto c = run(args);
    ASSERT_EQ(c.code, 0) << i << c.err << c.out;
    EXPECT_EQ(io::read_json_file(out), c.json()["map"]);
    const auto v = run({"verify", "--input", out});
    EXPECT_EQ(v.code, 0) << i;
  }
}

TEST_F(CliTest, ConstructRejected) {
  // ||M|| too large for the excess to stay positive
  const auto r = run({"construct", "--linear-denom", "--a", "9/10", "--m", "1", "--M", "3"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.json()["status"], "rejected");
}

TEST_F(CliTest, Deterministic) {
  const auto in = file("ex.json", kQuintic);
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"verify", "--input", in}, {"reduce", "--input", in}, {"bounds", "--input", in},
        {"volume", "--input", in, "--samples", "20000"}, {"stabilize", "--alpha-sq", "1/2,3,7/2"}}) {
    const auto a = run(args), b = run(args);
    EXPECT_EQ(a.out, b.out) << args[0];
    EXPECT_EQ(a.code, b.code);
  }
}

TEST_F(CliTest, StabilizeSweep) {
  auto r = run({"stabilize", "--alpha-sq", "3,7/2"});
  EXPECT_EQ(r.code, 0);
  const auto sweep = r.json()["diagnostics"]["sweep"];
  ASSERT_EQ(sweep.size(), 2u);
  EXPECT_EQ(sweep[0]["minimal_d"], 1);
  EXPECT_EQ(sweep[0]["bound"], 2);
  EXPECT_EQ(sweep[1]["minimal_d"], 5);
  EXPECT_EQ(sweep[1]["bound"], 6);
  r = run({"stabilize", "--alpha-sq", "3", "--format", "csv"});
  EXPECT_EQ(r.out, "alpha_sq,minimal_d,bound,bound_dominates\n3,1,2,true\n");
  EXPECT_EQ(run({"count", "--n", "1", "--d", "1", "--format", "csv"}).code, 2);
}

TEST_F(CliTest, StabilizeForm) {
  const auto f = file("form.json", R"({"n": 2, "entries": [
    {"alpha": [2,0], "beta": [2,0], "re": "1"}, {"alpha": [1,1], "beta": [1,1], "re": "-2"},
    {"alpha": [0,2], "beta": [0,2], "re": "1"}]})");
  const auto r = run({"stabilize", "--input", f, "--max-degree", "6"});
  EXPECT_EQ(r.code, 1);
  EXPECT_TRUE(r.json()["diagnostics"]["minimal_d"].is_null());
  EXPECT_EQ(r.json()["diagnostics"]["checked_range"], 6);
}

TEST_F(CliTest, TextFormat) {
  const auto r = run({"count", "--n", "2", "--d", "3", "--format", "text"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("status: pass\n"), std::string::npos);
  EXPECT_NE(r.out.find("diagnostics/K: 34\n"), std::string::npos);
}

TEST_F(CliTest, InvarianceAndBounds) {
  const auto in = file("ex.json", kQuintic);
  auto r = run({"invariance", "--input", in});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.json()["diagnostics"]["classification"], "counterexample");
  r = run({"bounds", "--input", in});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.json()["diagnostics"]["degree_bound"]["bound"], "6");
  EXPECT_EQ(r.json()["diagnostics"]["degree_bound"]["at_conjecture"], true);
}

TEST_F(CliTest, VolumeOfExample) {
  const auto r = run({"volume", "--input", file("ex.json", kQuintic), "--samples", "100000"});
  EXPECT_EQ(r.code, 0);
  const auto d = r.json()["diagnostics"];
  EXPECT_LT(d["value"].get<double>(), d["bound"].get<double>());
}
