#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <cstdlib>
#include <string>
#include <vector>

#include "doctest.h"
#include "galign/csv.hpp"
#include "galign/format.hpp"
#include "galign/generate.hpp"
#include "galign/report.hpp"
#include "json.hpp"
#include "oracles.hpp"

using namespace galign;
using nlohmann::json;

namespace {

const double kPi = std::acos(-1.0);

bool same_pairs(const std::vector<WeightedPair>& a, const std::vector<WeightedPair>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].u != b[i].u || a[i].v != b[i].v || a[i].w != b[i].w) return false;
  return true;
}

// Positions of quoted keys must be ascending in the serialized text.
void check_sorted_keys(const std::string& text, const std::vector<std::string>& keys) {
  std::size_t last = 0;
  for (const std::string& k : keys) {
    const std::size_t at = text.find("\"" + k + "\":");
    REQUIRE(at != std::string::npos);
    CHECK(at > last);
    last = at;
  }
}

}  // namespace

TEST_CASE("full-precision formatting survives a parse round trip") {
  const std::vector<double> values{0.0,   1.0,       0.5,     0.1,    1.0 / 3.0, kPi,
                                   1e300, 1e-300,    5e-324,  -2.5e-17, 123456789.123456789,
                                   -1.0,  0.30000000000000004};
  for (const double x : values) {
    const std::string s = g17(x);
    CHECK(std::strtod(s.c_str(), nullptr) == x);
  }
  CHECK(g17(1.0) == "1");
  CHECK(g17(0.5) == "0.5");
}

TEST_CASE("pair files round-trip every value exactly") {
  oracles::Rng rng(61);
  std::vector<WeightedPair> pairs{
      {{0.1, 1.0 / 3.0, kPi}, {1e300, 1e-300, -2.5e-17}, 0.30000000000000004},
      {{-1.0, 0.0, 5e-324}, {123456789.123456789, -7.25, 2.0}, 1.0},
  };
  for (int i = 0; i < 50; ++i)
    pairs.push_back({rng.vec(-1e3, 1e3), rng.vec(-1e-3, 1e-3), rng.uniform(1e-6, 1e6)});

  const std::string text = csv::format_pairs(pairs);
  CHECK(same_pairs(csv::parse_pairs(text), pairs));
  // writers emit the exact header
  CHECK(text.rfind("ux,uy,uz,vx,vy,vz,w\n", 0) == 0);

  // and through the filesystem
  const std::string path = "io_roundtrip_pairs.csv";
  csv::write_pairs(path, pairs);
  CHECK(same_pairs(csv::read_pairs(path), pairs));
  CHECK(csv::slurp_file(path) == text);
  std::remove(path.c_str());
}

TEST_CASE("prior files round-trip") {
  oracles::Rng rng(62);
  std::vector<RotorMeasurement> priors;
  for (int i = 0; i < 40; ++i) priors.push_back({rng.rotor(), rng.uniform(1e-3, 1e3)});

  const std::vector<RotorMeasurement> back = csv::parse_priors(csv::format_priors(priors));
  REQUIRE(back.size() == priors.size());
  for (std::size_t i = 0; i < priors.size(); ++i) {
    CHECK(back[i].w == priors[i].w);
    // reload renormalizes; anything past an ulp would be a real defect
    CHECK(std::abs(back[i].s.scalar() - priors[i].s.scalar()) <= 1e-15);
    CHECK(norm(back[i].s.bivec() - priors[i].s.bivec()) <= 1e-15);
  }
}

TEST_CASE("headers comments and line endings") {
  const std::vector<WeightedPair> want{{{1, 2, 3}, {4, 5, 6}, 7}};

  CHECK(same_pairs(csv::parse_pairs("1,2,3,4,5,6,7"), want));  // no header, no newline
  CHECK(same_pairs(csv::parse_pairs("ux,uy,uz,vx,vy,vz,w\n1,2,3,4,5,6,7\n"), want));
  CHECK(same_pairs(csv::parse_pairs("ux,uy,uz,vx,vy,vz,w\r\n1,2,3,4,5,6,7\r\n"), want));
  CHECK(same_pairs(csv::parse_pairs("# comment\n\n  \n  1, 2, 3, 4, 5, 6, 7\n\n"), want));
  CHECK(same_pairs(csv::parse_pairs("  # indented comment\n1,2,3,4,5,6,7"), want));

  const std::vector<RotorMeasurement> ps = csv::parse_priors("w,a,c1,c2,c3\n2,1,0,0,0\n");
  REQUIRE(ps.size() == 1);
  CHECK(ps[0].w == 2.0);
  CHECK(ps[0].s.scalar() == 1.0);
}

TEST_CASE("parse errors carry line and column") {
  const auto expect = [](const char* text, auto parse, std::size_t line, std::size_t column,
                         const char* fragment) {
    try {
      parse(text);
      FAIL_CHECK("expected ParseError for: " << text);
    } catch (const ParseError& e) {
      CHECK(e.line == line);
      CHECK(e.column == column);
      CHECK(std::string(e.what()).find(fragment) != std::string::npos);
    }
  };
  const auto pairs = [](std::string_view t) { csv::parse_pairs(t); };
  const auto priors = [](std::string_view t) { csv::parse_priors(t); };

  expect("1,2,3", pairs, 1, 6, "row ends after uz");
  expect("ux,uy,uz,vx,vy,vz,w\n1,2,3\n", pairs, 2, 6, "row ends after uz");
  expect("1,2,3,4,5,6,7\n\n1,2,3,4,5,6", pairs, 3, 12, "row ends after vz");
  expect("1,x,3,4,5,6,7", pairs, 1, 3, "expected a number");
  expect("1,nan,3,4,5,6,7", pairs, 1, 3, "not finite");
  expect("1,2,3,4,5,6,inf", pairs, 1, 13, "not finite");
  expect("1,2,3,4,5,6,0", pairs, 1, 13, "w must be positive");
  expect("1,2,3,4,5,6,-2", pairs, 1, 13, "w must be positive");
  expect("1,2,3,4,5,6,7 junk", pairs, 1, 15, "unexpected text");
  expect("foo,bar\n", pairs, 1, 1, "unexpected header");
  expect("w,a,c1,c2,c3\n1,2,3", priors, 2, 6, "row ends after c1");
  expect("1,0.5,0,0,0", priors, 1, 3, "not unit norm");
  expect("0,1,0,0,0", priors, 1, 1, "w must be positive");

  // mild drift renormalizes instead of erroring
  const auto ok = csv::parse_priors("2,1.0000002,0,0,0");
  REQUIRE(ok.size() == 1);
  const double n2 = ok[0].s.scalar() * ok[0].s.scalar() + norm2(ok[0].s.bivec());
  CHECK(std::abs(n2 - 1.0) <= 1e-12);
  CHECK(std::abs(ok[0].s.scalar() - 1.0) <= 1e-6);
}

TEST_CASE("file errors surface as IoError") {
  CHECK_THROWS_AS(csv::read_pairs("does_not_exist_7f3a.csv"), IoError);
  CHECK_THROWS_AS(csv::spew_file("no_such_dir_7f3a/file.csv", "x"), IoError);
}

TEST_CASE("report canonicalizes the rotor sign") {
  AlignmentSolution sol;
  sol.rotor = ga::Rotor(-0.6, {0.8, 0.0, 0.0});
  sol.lambda_max = 2.0;

  const SolutionReport rep = make_report(sol);
  CHECK(rep.quaternion[0] == 0.6);
  CHECK(rep.quaternion[1] == -0.8);
  CHECK(rep.rotor.scalar() == rep.quaternion[0]);
  CHECK(rep.rotor.bivec().x == rep.quaternion[1]);

  // flipping the sign names the same rotation
  const Mat3 want = ga::rotor_to_matrix(sol.rotor);
  for (int i = 0; i < 9; ++i)
    CHECK(std::abs(rep.rotation_matrix.m[static_cast<size_t>(i)] - want.m[static_cast<size_t>(i)]) <= 1e-15);

  // zero leading scalar: the tie-break moves to the first bivector component
  AlignmentSolution flat;
  flat.rotor = ga::Rotor(0.0, {-0.6, 0.8, 0.0});
  const SolutionReport rep2 = make_report(flat);
  CHECK(rep2.quaternion[0] == 0.0);
  CHECK(rep2.quaternion[1] == 0.6);
  CHECK(rep2.quaternion[2] == -0.8);
}

TEST_CASE("solution report serializes canonically") {
  oracles::Rng rng(63);
  const auto inst = oracles::random_rigid(rng, 12, 2.0);
  const AlignmentSolution sol = solve(inst.problem);
  const SolutionReport rep = make_report(sol);
  const std::string text = to_json(rep);

  CHECK(text == to_json(rep));  // byte-stable
  CHECK(text.back() == '\n');
  CHECK(text[text.size() - 2] == '}');
  CHECK(text.find(' ') == std::string::npos);
  CHECK(text.find('\n') == text.size() - 1);

  check_sorted_keys(text, {"ambiguous", "cost", "eigen_gap", "lambda_max", "n_pairs", "n_priors",
                           "quaternion", "rotation_matrix", "rotor", "translation"});

  const json j = json::parse(text);
  CHECK(j.at("ambiguous").get<bool>() == rep.ambiguous);
  CHECK(j.at("cost").get<double>() == rep.cost);
  CHECK(j.at("eigen_gap").get<double>() == rep.eigen_gap);
  CHECK(j.at("lambda_max").get<double>() == rep.lambda_max);
  CHECK(j.at("n_pairs").get<std::size_t>() == rep.n_pairs);
  CHECK(j.at("n_priors").get<std::size_t>() == rep.n_priors);

  REQUIRE(j.at("quaternion").size() == 4);
  CHECK(j.at("quaternion")[0].get<double>() == rep.quaternion[0]);
  CHECK(j.at("quaternion")[0].get<double>() == j.at("rotor").at("a").get<double>());
  for (int i = 0; i < 3; ++i)
    CHECK(j.at("quaternion")[static_cast<size_t>(i + 1)].get<double>() ==
          j.at("rotor").at("c")[static_cast<size_t>(i)].get<double>());

  REQUIRE(j.at("rotation_matrix").size() == 9);
  for (int i = 0; i < 9; ++i)
    CHECK(j.at("rotation_matrix")[static_cast<size_t>(i)].get<double>() == rep.rotation_matrix.m[static_cast<size_t>(i)]);

  // row-major consistency with the rotor
  const Mat3 m = ga::rotor_to_matrix(rep.rotor);
  for (int i = 0; i < 9; ++i)
    CHECK(std::abs(rep.rotation_matrix.m[static_cast<size_t>(i)] - m.m[static_cast<size_t>(i)]) <= 1e-12);

  REQUIRE(j.at("translation").size() == 3);
  CHECK(j.at("translation")[0].get<double>() == rep.translation.x);
}

TEST_CASE("error JSON is byte-exact") {
  CHECK(error_json("EmptyProblem", "no data") ==
        "{\"error\":\"EmptyProblem\",\"message\":\"no data\"}\n");
  CHECK(error_json("ParseError", "bad \"stuff\"\n", 3, 7) ==
        "{\"column\":7,\"error\":\"ParseError\",\"line\":3,\"message\":\"bad \\\"stuff\\\"\\n\"}\n");
}

TEST_CASE("generator is deterministic and validated") {
  GenerateParams p;
  p.n = 3;
  p.seed = 7;

  SUBCASE("identity transform copies the cloud") {
    const GeneratedProblem g = generate(p);
    REQUIRE(g.pairs.size() == 3);
    for (const WeightedPair& pr : g.pairs) {
      CHECK(pr.u == pr.v);
      CHECK(pr.w == 1.0);
      CHECK(std::abs(pr.v.x) <= 1.0);
    }
  }

  SUBCASE("same parameters give identical output, different seeds differ") {
    GenerateParams q = p;
    q.n = 50;
    q.noise_sigma = 0.05;
    q.angle = 1.25;
    q.axis = {1.0, 2.0, 3.0};
    q.translation = {0.5, -0.25, 4.0};
    const GeneratedProblem a = generate(q);
    const GeneratedProblem b = generate(q);
    CHECK(same_pairs(a.pairs, b.pairs));
    CHECK(truth_json(a.truth) == truth_json(b.truth));

    q.seed = 8;
    CHECK_FALSE(same_pairs(generate(q).pairs, a.pairs));
  }

  SUBCASE("transform is applied as u = R (v - t) R~") {
    GenerateParams q = p;
    q.n = 20;
    q.angle = kPi / 3.0;
    q.axis = {0.0, 0.0, 2.0};  // normalized internally
    q.translation = {1.0, 2.0, 3.0};
    const GeneratedProblem g = generate(q);
    CHECK(norm(g.truth.axis - Vec3{0.0, 0.0, 1.0}) == 0.0);
    const Mat3 m = ga::rotor_to_matrix(g.truth.rotor);
    for (const WeightedPair& pr : g.pairs) CHECK(pr.u == m * (pr.v - q.translation));

    const AlignmentSolution sol = solve({g.pairs, {}});
    CHECK(oracles::rotor_distance(sol.rotor, g.truth.rotor) <= 1e-9);
    CHECK(norm(sol.translation - q.translation) <= 1e-9);
  }

  SUBCASE("bad parameters are rejected") {
    const double nan = std::nan("");
    GenerateParams q = p;
    q.n = 0;
    CHECK_THROWS_AS(generate(q), InvalidParameter);
    q = p;
    q.noise_sigma = -1.0;
    CHECK_THROWS_AS(generate(q), InvalidParameter);
    q = p;
    q.noise_sigma = nan;
    CHECK_THROWS_AS(generate(q), InvalidParameter);
    q = p;
    q.angle = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(generate(q), InvalidParameter);
    q = p;
    q.axis = {0.0, 0.0, 0.0};
    CHECK_THROWS_AS(generate(q), InvalidParameter);
    q = p;
    q.translation = {0.0, nan, 0.0};
    CHECK_THROWS_AS(generate(q), InvalidParameter);
  }
}

TEST_CASE("ground-truth JSON is canonical and complete") {
  GenerateParams p;
  p.n = 5;
  p.seed = 42;
  p.noise_sigma = 0.25;
  p.angle = 0.75;
  p.axis = {1.0, 0.0, 0.0};
  p.translation = {-1.0, 0.5, 2.0};
  const GeneratedProblem g = generate(p);
  const std::string text = truth_json(g.truth);

  CHECK(text.back() == '\n');
  CHECK(text.find(' ') == std::string::npos);
  check_sorted_keys(text,
                    {"angle", "axis", "n", "noise_sigma", "quaternion", "rotor", "seed",
                     "translation"});

  const json j = json::parse(text);
  CHECK(j.at("angle").get<double>() == 0.75);
  CHECK(j.at("n").get<std::size_t>() == 5);
  CHECK(j.at("noise_sigma").get<double>() == 0.25);
  CHECK(j.at("seed").get<std::uint64_t>() == 42);
  CHECK(j.at("axis")[0].get<double>() == 1.0);
  CHECK(j.at("quaternion")[0].get<double>() == g.truth.rotor.scalar());
  CHECK(j.at("quaternion")[1].get<double>() == g.truth.rotor.bivec().x);
  CHECK(j.at("rotor").at("a").get<double>() == g.truth.rotor.scalar());
  CHECK(j.at("translation")[2].get<double>() == 2.0);
}
