#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "galign/align.hpp"
#include "galign/csv.hpp"
#include "galign/errors.hpp"
#include "galign/format.hpp"
#include "galign/generate.hpp"
#include "galign/report.hpp"

namespace {

galign::Vec3 parse_triple(const std::string& text, const char* flag) {
  galign::Vec3 out;
  int consumed = -1;
  if (std::sscanf(text.c_str(), " %lf , %lf , %lf %n", &out.x, &out.y, &out.z, &consumed) != 3 ||
      consumed < 0 || static_cast<std::size_t>(consumed) != text.size())
    throw galign::InvalidParameter(std::string(flag) + " expects three comma-separated numbers");
  return out;
}

std::vector<std::size_t> parse_size_list(const std::string& text) {
  std::vector<std::size_t> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::string item =
        text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    unsigned long long n = 0;
    int consumed = -1;
    if (std::sscanf(item.c_str(), " %llu %n", &n, &consumed) != 1 || consumed < 0 ||
        static_cast<std::size_t>(consumed) != item.size() || n < 1)
      throw galign::InvalidParameter("--n expects a comma-separated list of positive integers");
    out.push_back(static_cast<std::size_t>(n));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

const char* error_name(const galign::Error& e) {
  if (dynamic_cast<const galign::EmptyProblem*>(&e)) return "EmptyProblem";
  if (dynamic_cast<const galign::NoConvergence*>(&e)) return "NoConvergence";
  if (dynamic_cast<const galign::NonPositiveWeight*>(&e)) return "NonPositiveWeight";
  if (dynamic_cast<const galign::NoPointData*>(&e)) return "NoPointData";
  if (dynamic_cast<const galign::ZeroPrior*>(&e)) return "ZeroPrior";
  if (dynamic_cast<const galign::DegeneratePrior*>(&e)) return "DegeneratePrior";
  if (dynamic_cast<const galign::NonUnitRotor*>(&e)) return "NonUnitRotor";
  if (dynamic_cast<const galign::NonUnitAxis*>(&e)) return "NonUnitAxis";
  return "Error";
}

int run_solve(const std::string& input, const std::string& priors, const std::string& output) {
  galign::AlignmentProblem problem;
  problem.pairs = galign::csv::read_pairs(input);
  if (!priors.empty()) problem.priors = galign::csv::read_priors(priors);
  const galign::AlignmentSolution solution = galign::solve(problem);
  const std::string json = galign::to_json(galign::make_report(solution));
  if (output.empty() || output == "-")
    std::cout << json;
  else
    galign::csv::spew_file(output, json);
  return 0;
}

int run_generate(const galign::GenerateParams& params, const std::string& output) {
  const galign::GeneratedProblem generated = galign::generate(params);
  galign::csv::write_pairs(output, generated.pairs);
  galign::csv::spew_file(output + ".truth.json", galign::truth_json(generated.truth));
  return 0;
}

double median(std::vector<double> xs) {
  std::sort(xs.begin(), xs.end());
  const std::size_t mid = xs.size() / 2;
  return xs.size() % 2 == 1 ? xs[mid] : 0.5 * (xs[mid - 1] + xs[mid]);
}

int run_bench(const std::vector<std::size_t>& sizes, int repetitions, std::uint64_t seed) {
  using clock = std::chrono::steady_clock;
  const auto seconds = [](clock::duration d) {
    return std::chrono::duration_cast<std::chrono::duration<double>>(d).count();
  };
  static volatile double sink = 0.0;

  std::string out = "n,repetitions,summarize_median_s,solve_median_s,total_median_s\n";
  for (const std::size_t n : sizes) {
    galign::GenerateParams params;
    params.n = n;
    params.noise_sigma = 0.01;
    params.seed = seed;
    params.angle = 0.62831853071795865;
    params.axis = {1.0, 2.0, 3.0};
    params.translation = {0.1, -0.2, 0.3};
    const galign::AlignmentProblem problem{galign::generate(params).pairs, {}};

    std::vector<double> t_summarize, t_solve, t_total;
    for (int rep = 0; rep < repetitions; ++rep) {
      const auto t0 = clock::now();
      const galign::Summary s = galign::summarize(problem);
      const auto t1 = clock::now();
      const galign::RotationSolution rot = galign::solve_rotation(galign::build_k(s));
      const galign::Vec3 t = galign::solve_translation(rot.rotor, s);
      const double c = galign::cost(rot.rotor, t, problem.pairs);
      const auto t2 = clock::now();
      sink = sink + c + t.x + rot.lambda;
      t_summarize.push_back(seconds(t1 - t0));
      t_solve.push_back(seconds(t2 - t1));
      t_total.push_back(seconds(t2 - t0));
    }
    out += std::to_string(n);
    out += ',';
    out += std::to_string(repetitions);
    out += ',';
    galign::append_g17(out, median(t_summarize));
    out += ',';
    galign::append_g17(out, median(t_solve));
    out += ',';
    galign::append_g17(out, median(t_total));
    out += '\n';
  }
  std::cout << out;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Weighted pointcloud alignment: the rotation comes from the dominant eigenpair of the "
      "4x4 data matrix, the translation from the weighted centroids."};
  app.require_subcommand(1);

  auto* solve_cmd = app.add_subcommand("solve", "Solve an alignment problem read from CSV");
  std::string input, priors, output = "-";
  solve_cmd->add_option("--input", input, "point pairs CSV (ux,uy,uz,vx,vy,vz,w)")->required();
  solve_cmd->add_option("--priors", priors, "rotor measurements CSV (w,a,c1,c2,c3)");
  solve_cmd->add_option("--output", output, "report JSON path, or - for stdout");

  auto* gen_cmd = app.add_subcommand("generate", "Write a synthetic problem plus its ground truth");
  galign::GenerateParams gen;
  std::string gen_output, axis_text = "0,0,1", translation_text = "0,0,0";
  gen_cmd->add_option("--output", gen_output, "pairs CSV path; truth goes to <output>.truth.json")
      ->required();
  gen_cmd->add_option("--n", gen.n, "number of point pairs")->required();
  gen_cmd->add_option("--noise-sigma", gen.noise_sigma, "isotropic Gaussian noise on u");
  gen_cmd->add_option("--seed", gen.seed, "PRNG seed");
  gen_cmd->add_option("--angle", gen.angle, "rotation angle in radians");
  gen_cmd->add_option("--axis", axis_text, "rotation axis as x,y,z (normalized internally)");
  gen_cmd->add_option("--translation", translation_text, "translation as x,y,z");

  auto* bench_cmd = app.add_subcommand("bench", "Time summarize and solve over synthetic sizes");
  std::string n_list = "1000,10000,100000,1000000";
  int repetitions = 5;
  std::uint64_t bench_seed = 1;
  bench_cmd->add_option("--n", n_list, "comma-separated problem sizes");
  bench_cmd->add_option("--repetitions", repetitions, "samples per size (median reported)")
      ->check(CLI::PositiveNumber);
  bench_cmd->add_option("--seed", bench_seed, "PRNG seed for the synthetic data");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (solve_cmd->parsed()) return run_solve(input, priors, output);
    if (gen_cmd->parsed()) {
      gen.axis = parse_triple(axis_text, "--axis");
      gen.translation = parse_triple(translation_text, "--translation");
      return run_generate(gen, gen_output);
    }
    return run_bench(parse_size_list(n_list), repetitions, bench_seed);
  } catch (const galign::ParseError& e) {
    std::cerr << galign::error_json("ParseError", e.what(), e.line, e.column);
    return 2;
  } catch (const galign::InvalidParameter& e) {
    std::cerr << galign::error_json("InvalidParameter", e.what());
    return 2;
  } catch (const galign::IoError& e) {
    std::cerr << galign::error_json("IoError", e.what());
    return 2;
  } catch (const galign::Error& e) {
    std::cerr << galign::error_json(error_name(e), e.what());
    return 3;
  }
}
