#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "galign/align.hpp"

namespace galign::csv {

// Point pair files: header "ux,uy,uz,vx,vy,vz,w", one row of 7 finite
// comma-separated numbers per pair, w > 0. Prior files: header
// "w,a,c1,c2,c3", rotor coefficients unit within 1e-6 (renormalized on
// load). Lines starting with '#' and blank lines are skipped; the header is
// optional on read. ParseError carries the 1-based line and column.
std::vector<WeightedPair> parse_pairs(std::string_view text);
std::vector<RotorMeasurement> parse_priors(std::string_view text);

std::vector<WeightedPair> read_pairs(const std::string& path);
std::vector<RotorMeasurement> read_priors(const std::string& path);

// Writers emit the header plus one row per record at 17 significant digits,
// so write-then-read reproduces every value exactly.
std::string format_pairs(const std::vector<WeightedPair>& pairs);
std::string format_priors(const std::vector<RotorMeasurement>& priors);

void write_pairs(const std::string& path, const std::vector<WeightedPair>& pairs);
void write_priors(const std::string& path, const std::vector<RotorMeasurement>& priors);

// Shared by the writers above and the report/truth emitters.
std::string slurp_file(const std::string& path);
void spew_file(const std::string& path, std::string_view content);

}  // namespace galign::csv
