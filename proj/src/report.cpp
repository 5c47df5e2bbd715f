#include "galign/report.hpp"

#include <cstdio>

#include "galign/format.hpp"

namespace galign {

namespace {

void append_vec3(std::string& s, const Vec3& v) {
  s += '[';
  append_g17(s, v.x);
  s += ',';
  append_g17(s, v.y);
  s += ',';
  append_g17(s, v.z);
  s += ']';
}

void append_escaped(std::string& s, const std::string& text) {
  s += '"';
  for (const char ch : text) {
    switch (ch) {
      case '"': s += "\\\""; break;
      case '\\': s += "\\\\"; break;
      case '\n': s += "\\n"; break;
      case '\t': s += "\\t"; break;
      case '\r': s += "\\r"; break;
      default:
        if (static_cast<unsigned char>(ch) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", ch);
          s += buf;
        } else {
          s += ch;
        }
    }
  }
  s += '"';
}

}  // namespace

SolutionReport make_report(const AlignmentSolution& solution) {
  double a = solution.rotor.scalar();
  Vec3 c = solution.rotor.bivec();
  const std::array<double, 4> q{a, c.x, c.y, c.z};
  for (const double component : q) {
    if (component == 0.0) continue;
    if (component < 0.0) {
      a = -a;
      c = -c;
    }
    break;
  }

  SolutionReport out;
  out.rotor = ga::Rotor(a, c);
  const Vec3& rc = out.rotor.bivec();
  out.quaternion = {out.rotor.scalar(), rc.x, rc.y, rc.z};
  out.rotation_matrix = ga::rotor_to_matrix(out.rotor);
  out.translation = solution.translation;
  out.lambda_max = solution.lambda_max;
  out.cost = solution.cost;
  out.eigen_gap = solution.eigen_gap;
  out.ambiguous = solution.ambiguous;
  out.n_pairs = solution.n_pairs;
  out.n_priors = solution.n_priors;
  return out;
}

std::string to_json(const SolutionReport& report) {
  std::string s;
  s.reserve(640);
  s += "{\"ambiguous\":";
  s += report.ambiguous ? "true" : "false";
  s += ",\"cost\":";
  append_g17(s, report.cost);
  s += ",\"eigen_gap\":";
  append_g17(s, report.eigen_gap);
  s += ",\"lambda_max\":";
  append_g17(s, report.lambda_max);
  s += ",\"n_pairs\":";
  s += std::to_string(report.n_pairs);
  s += ",\"n_priors\":";
  s += std::to_string(report.n_priors);
  s += ",\"quaternion\":[";
  for (int i = 0; i < 4; ++i) {
    if (i > 0) s += ',';
    append_g17(s, report.quaternion[static_cast<std::size_t>(i)]);
  }
  s += "],\"rotation_matrix\":[";
  for (int i = 0; i < 9; ++i) {
    if (i > 0) s += ',';
    append_g17(s, report.rotation_matrix.m[static_cast<std::size_t>(i)]);
  }
  s += "],\"rotor\":{\"a\":";
  append_g17(s, report.rotor.scalar());
  s += ",\"c\":";
  append_vec3(s, report.rotor.bivec());
  s += "},\"translation\":";
  append_vec3(s, report.translation);
  s += "}\n";
  return s;
}

std::string error_json(const std::string& name, const std::string& message) {
  std::string s = "{\"error\":";
  append_escaped(s, name);
  s += ",\"message\":";
  append_escaped(s, message);
  s += "}\n";
  return s;
}

std::string error_json(const std::string& name, const std::string& message, std::size_t line,
                       std::size_t column) {
  std::string s = "{\"column\":";
  s += std::to_string(column);
  s += ",\"error\":";
  append_escaped(s, name);
  s += ",\"line\":";
  s += std::to_string(line);
  s += ",\"message\":";
  append_escaped(s, message);
  s += "}\n";
  return s;
}

}  // namespace galign
