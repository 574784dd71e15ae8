#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "../tools/cli.hpp"

using nlohmann::json;
namespace cli = densitygeom::cli;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& stdin_text = "") {
  args.insert(args.begin(), "densitygeom");
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args, const std::string& stdin_text = "") {
  const Result r = run(std::move(args), stdin_text);
  REQUIRE(r.code == cli::kSuccess);
  return json::parse(r.out);
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("densitygeom_test_" + name);
}

}  // namespace

TEST_CASE("basis") {
  const json b2 = run_json({"basis", "--n", "2"});
  CHECK(b2.size() == 3);
  const json b4 = run_json({"basis", "--n", "4"});
  REQUIRE(b4.size() == 15);
  const double d = 1.0 / std::sqrt(6.0);
  for (int i = 0; i < 4; ++i) {
    CHECK(std::abs(b4[14][i * 5][0].get<double>() - (i < 3 ? d : -3 * d)) < 1e-11);
  }
  CHECK(run({"basis", "--n", "1"}).code == cli::kUsage);
  CHECK(run({"basis"}).code == cli::kUsage);
  CHECK(run({}).code == cli::kUsage);
  CHECK(run({"frobnicate"}).code == cli::kUsage);
}

TEST_CASE("classify") {
  SUBCASE("maximally mixed qutrit") {
    const json r = run_json({"classify", "-"}, "[0.3333333333333333, 0.3333333333333333, 0.3333333333333334]");
    CHECK(r.at("stratum").at("partition") == json::array({3}));
    CHECK(r.at("entropy").get<double>() == doctest::Approx(std::log(3.0)).epsilon(1e-11));
    CHECK(r.at("casimirs").at("I")[1].get<double>() == doctest::Approx(1.0 / 3).epsilon(1e-11));
    CHECK(r.at("casimirs").at("I")[2].get<double>() == doctest::Approx(1.0 / 27).epsilon(1e-11));
    CHECK(r.at("pure") == false);
  }
  SUBCASE("pure ququart spectrum") {
    const json r = run_json({"classify"}, "[1, 0, 0, 0]");
    CHECK(r.at("stratum").at("orbit_dim") == 6);
    CHECK(r.at("stratum").at("partition") == json::array({3, 1}));
    CHECK(r.at("pure") == true);
    CHECK(r.at("entropy") == 0.0);
    CHECK(r.at("boundary").at("is_edge") == true);
  }
  SUBCASE("matrix input and bits") {
    const json r = run_json({"--log-base", "bits", "classify"},
                            R"({"n":2,"entries":[[0.5,0],[0,0],[0,0],[0.5,0]]})");
    CHECK(r.at("entropy").get<double>() == doctest::Approx(1.0));
    CHECK(r.at("entropy_unit") == "bits");
    CHECK(r.at("homogeneous_space") == "U(2)/U(2)");
  }
  SUBCASE("non-PSD matrix") {
    const Result r = run({"classify"}, R"({"n":2,"entries":[[1.2,0],[0,0],[0,0],[-0.2,0]]})");
    CHECK(r.code == cli::kInvalidState);
    CHECK(r.err.find("min eigenvalue -0.2") != std::string::npos);
  }
  SUBCASE("malformed input") {
    CHECK(run({"classify"}, "{not json").code == cli::kUsage);
    CHECK(run({"classify"}, R"({"foo": 1})").code == cli::kUsage);
    CHECK(run({"classify"}, "[0.5, 0.6]").code == cli::kInvalidState);
  }
}

TEST_CASE("encode, decode and casimirs") {
  const json n = run_json({"encode"}, "[1, 0]");
  CHECK(n.at("components") == json::array({0.0, 0.0, 1.0}));
  const json rho = run_json({"decode"}, n.dump());
  CHECK(rho.at("entries")[0][0] == 1.0);
  CHECK(rho.at("entries")[3][0] == 0.0);
  CHECK(run({"decode"}, R"({"n":2,"components":[0,0,1.5]})").code == cli::kInvalidState);
  CHECK(run({"decode"}, R"({"n":2,"components":[0,1]})").code == cli::kUsage);

  const json c = run_json({"casimirs"}, R"({"n":2,"entries":[[0.5,0],[0,0.5],[0,-0.5],[0.5,0]]})");
  CHECK(std::abs(c.at("I")[1].get<double>()) < 1e-12);
  CHECK(c.contains("I_from_traces"));
  CHECK(c.at("characteristic_residual").get<double>() < 1e-9);
  const Result csv = run({"--format", "csv", "casimirs"}, "[0.5, 0.5]");
  CHECK(csv.out == "k,I\n1,1\n2,0.25\n");
}

TEST_CASE("entropy") {
  CHECK(run_json({"entropy"}, "[0.5, 0.5]").at("entropy").get<double>() ==
        doctest::Approx(std::log(2.0)).epsilon(1e-11));
  CHECK(run({"--format", "csv", "--log-base", "bits", "entropy"}, "[0.5, 0.5]").out == "entropy\n1\n");
}

TEST_CASE("surface and profile") {
  const Result s = run({"surface", "--res", "10"});
  CHECK(s.code == cli::kSuccess);
  CHECK(s.out.rfind("x,y,z,eta\n", 0) == 0);
  CHECK(std::count(s.out.begin(), s.out.end(), '\n') == 67);
  CHECK(run({"surface", "--res", "1"}).code == cli::kUsage);

  const json p = run_json({"profile", "--from", "0.5,0.5", "--to", "1,0", "--samples", "5"});
  REQUIRE(p.at("profile").size() == 5);
  CHECK(p.at("profile")[0].at("eta").get<double>() == doctest::Approx(std::log(2.0)));
  CHECK(p.at("profile")[4].at("eta") == 0.0);
  CHECK(run({"profile", "--from", "0.5,0.5", "--to", "1,0,0"}).code == cli::kUsage);
  CHECK(run({"profile", "--from", "0.5,x", "--to", "1,0"}).code == cli::kUsage);
  CHECK(run({"profile", "--from", "0.9,0.9", "--to", "1,0"}).code == cli::kInvalidState);
}

TEST_CASE("contour") {
  SUBCASE("ln 2 passes near the rounded R point") {
    const Result r = run({"contour", "--level", "0.6931", "--res", "200"});
    REQUIRE(r.code == cli::kSuccess);
    const json j = json::parse(r.out);
    double best = 1.0;
    for (const auto& line : j.at("polylines")) {
      for (const auto& p : line) {
        best = std::min(best, std::hypot(p[0].get<double>() - 0.768, p[1].get<double>() - 0.116,
                                         p[2].get<double>() - 0.116));
      }
    }
    CHECK(best < 1e-2);
    CHECK(r.err.find("points: ") != std::string::npos);
    CHECK(r.err.find("max |eta - level|: ") != std::string::npos);
  }
  SUBCASE("level above ln 3") {
    const Result r = run({"contour", "--level", "1.2"});
    CHECK(r.code == cli::kSuccess);
    CHECK(r.err.find("warning") != std::string::npos);
    CHECK(json::parse(r.out).at("polylines").empty());
  }
  SUBCASE("refinement") {
    auto interp_error = [](const std::string& res) {
      const Result r = run({"contour", "--level", "0.5", "--res", res});
      const std::string key = "before bisection: ";
      return std::stod(r.err.substr(r.err.find(key) + key.size()));
    };
    CHECK(interp_error("400") < interp_error("50"));
  }
  SUBCASE("csv") {
    const Result r = run({"--format", "csv", "contour", "--level", "0.9", "--res", "20"});
    CHECK(r.out.rfind("polyline,x,y,z\n", 0) == 0);
  }
}

TEST_CASE("tables") {
  const json t4 = run_json({"tables", "--n", "4"});
  CHECK(t4.at("strata_count") == 5);
  std::vector<double> lengths;
  for (const auto& d : t4.at("distances")) lengths.push_back(d.at("length").get<double>());
  std::sort(lengths.begin(), lengths.end());
  const std::vector<double> expected = {1.0 / 3, std::sqrt(2.0) / 3, 1 / std::sqrt(3.0),
                                        std::sqrt(2.0 / 3), 2 * std::sqrt(2.0) / 3, 1.0};
  std::vector<double> sorted_expected = expected;
  std::sort(sorted_expected.begin(), sorted_expected.end());
  REQUIRE(lengths.size() == 6);
  for (std::size_t i = 0; i < 6; ++i) CHECK(std::abs(lengths[i] - sorted_expected[i]) < 1e-9);

  const json t3 = run_json({"tables", "--n", "3"});
  const auto& pts = t3.at("special_points");
  REQUIRE(pts.size() == 3);
  CHECK(pts[0].at("name") == "O");
  CHECK(pts[0].at("entropy").get<double>() == doctest::Approx(std::log(3.0)));
  CHECK(pts[1].at("entropy").get<double>() == doctest::Approx(std::log(2.0)));
  CHECK(pts[2].at("name") == "P");
  CHECK(pts[2].at("entropy") == 0.0);

  CHECK(run_json({"tables", "--n", "2"}).at("strata_count") == 2);
  CHECK(run({"tables", "--n", "9"}).code == cli::kUsage);
}

TEST_CASE("sample is deterministic") {
  const Result a = run({"--seed", "7", "sample", "--n", "3"});
  const Result b = run({"--seed", "7", "sample", "--n", "3"});
  const Result c = run({"--seed", "8", "sample", "--n", "3"});
  CHECK(a.code == cli::kSuccess);
  CHECK(a.out == b.out);
  CHECK(a.out != c.out);
  const json pure = run_json({"--seed", "3", "sample", "--n", "3", "--pure"});
  const json cls = run_json({"classify"}, pure.dump());
  CHECK(cls.at("pure") == true);
}

TEST_CASE("file input and output") {
  const auto in_path = temp_path("in.json");
  const auto out_path = temp_path("out.json");
  {
    std::ofstream f(in_path);
    f << "[0.7, 0.2, 0.1]";
  }
  const Result r = run({"--out", out_path.string(), "entropy", in_path.string()});
  CHECK(r.code == cli::kSuccess);
  CHECK(r.out.empty());
  std::ifstream f(out_path);
  const json j = json::parse(f);
  CHECK(j.at("entropy").get<double>() > 0.0);
  std::filesystem::remove(in_path);
  std::filesystem::remove(out_path);

  CHECK(run({"entropy", temp_path("missing.json").string()}).code == cli::kIoFailure);
  CHECK(run({"--out", "/nonexistent-dir/x.json", "basis", "--n", "2"}).code == cli::kIoFailure);
}

TEST_CASE("repeated runs are byte identical") {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"surface", "--res", "30"},
        std::vector<std::string>{"contour", "--level", "0.7", "--res", "60"},
        std::vector<std::string>{"tables", "--n", "5"}}) {
    CHECK(run(args).out == run(args).out);
  }
}
