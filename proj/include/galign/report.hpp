#pragma once

#include <array>
#include <cstddef>
#include <string>

#include "galign/align.hpp"

namespace galign {

// Serialization view of an AlignmentSolution. The quaternion is the rotor
// read as [w,x,y,z] = [a, c1, c2, c3]; both carry the canonical sign (first
// nonzero component positive), which names the same rotation either way.
struct SolutionReport {
  ga::Rotor rotor;
  std::array<double, 4> quaternion{1.0, 0.0, 0.0, 0.0};
  Mat3 rotation_matrix = Mat3::identity();
  Vec3 translation{};
  double lambda_max = 0.0;
  double cost = 0.0;
  double eigen_gap = 0.0;
  bool ambiguous = false;
  std::size_t n_pairs = 0;
  std::size_t n_priors = 0;
};

SolutionReport make_report(const AlignmentSolution& solution);

// Canonical JSON: keys sorted, numbers at 17 significant digits, no
// whitespace, single trailing newline. Byte-stable for identical inputs.
std::string to_json(const SolutionReport& report);

// {"error":"<name>","message":"..."} with line/column appended when present.
std::string error_json(const std::string& name, const std::string& message);
std::string error_json(const std::string& name, const std::string& message, std::size_t line,
                       std::size_t column);

}  // namespace galign
