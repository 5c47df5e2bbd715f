#include "galign/generate.hpp"

#include <cmath>
#include <numbers>

#include "galign/errors.hpp"
#include "galign/format.hpp"

namespace galign {

double GaussianStream::next() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  const double u1 = rng_.uniform01_positive();
  const double u2 = rng_.uniform01();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(theta);
  has_spare_ = true;
  return r * std::cos(theta);
}

GeneratedProblem generate(const GenerateParams& params) {
  if (params.n < 1) throw InvalidParameter("n must be at least 1");
  if (!(params.noise_sigma >= 0.0) || !std::isfinite(params.noise_sigma))
    throw InvalidParameter("noise-sigma must be finite and nonnegative");
  if (!std::isfinite(params.angle)) throw InvalidParameter("angle must be finite");
  const double axis_norm = norm(params.axis);
  if (!(axis_norm > 0.0) || !std::isfinite(axis_norm))
    throw InvalidParameter("axis must be a nonzero finite vector");
  if (!std::isfinite(params.translation.x) || !std::isfinite(params.translation.y) ||
      !std::isfinite(params.translation.z))
    throw InvalidParameter("translation must be finite");

  const Vec3 axis = params.axis / axis_norm;
  const ga::Rotor rotor = ga::Rotor::from_axis_angle(axis, params.angle);
  const Mat3 m = ga::rotor_to_matrix(rotor);

  GeneratedProblem out;
  out.truth = {params.n,    params.noise_sigma, params.seed, params.angle,
               axis,        rotor,              params.translation};
  out.pairs.reserve(params.n);

  SplitMix64 rng(params.seed);
  for (std::size_t i = 0; i < params.n; ++i) {
    const Vec3 v{rng.uniform_sym(), rng.uniform_sym(), rng.uniform_sym()};
    out.pairs.push_back({m * (v - params.translation), v, 1.0});
  }
  if (params.noise_sigma > 0.0) {
    GaussianStream gauss(rng);
    for (WeightedPair& p : out.pairs) {
      p.u += params.noise_sigma * Vec3{gauss.next(), gauss.next(), gauss.next()};
    }
  }
  return out;
}

std::string truth_json(const GroundTruth& truth) {
  std::string s;
  s.reserve(384);
  s += "{\"angle\":";
  append_g17(s, truth.angle);
  s += ",\"axis\":[";
  append_g17(s, truth.axis.x);
  s += ',';
  append_g17(s, truth.axis.y);
  s += ',';
  append_g17(s, truth.axis.z);
  s += "],\"n\":";
  s += std::to_string(truth.n);
  s += ",\"noise_sigma\":";
  append_g17(s, truth.noise_sigma);
  s += ",\"quaternion\":[";
  append_g17(s, truth.rotor.scalar());
  s += ',';
  append_g17(s, truth.rotor.bivec().x);
  s += ',';
  append_g17(s, truth.rotor.bivec().y);
  s += ',';
  append_g17(s, truth.rotor.bivec().z);
  s += "],\"rotor\":{\"a\":";
  append_g17(s, truth.rotor.scalar());
  s += ",\"c\":[";
  append_g17(s, truth.rotor.bivec().x);
  s += ',';
  append_g17(s, truth.rotor.bivec().y);
  s += ',';
  append_g17(s, truth.rotor.bivec().z);
  s += "]},\"seed\":";
  s += std::to_string(truth.seed);
  s += ",\"translation\":[";
  append_g17(s, truth.translation.x);
  s += ',';
  append_g17(s, truth.translation.y);
  s += ',';
  append_g17(s, truth.translation.z);
  s += "]}\n";
  return s;
}

}  // namespace galign
