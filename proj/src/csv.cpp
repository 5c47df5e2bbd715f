#include "galign/csv.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <string>

#include "galign/errors.hpp"
#include "galign/format.hpp"

namespace galign::csv {

namespace {

constexpr std::string_view kPairsHeader = "ux,uy,uz,vx,vy,vz,w";
constexpr std::string_view kPriorsHeader = "w,a,c1,c2,c3";

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

// Exactly N comma-separated finite numbers; cols[i] is the 1-based column
// where field i starts, used by the callers' own value checks.
template <std::size_t N>
void parse_row(std::string_view line, std::size_t line_no,
               const std::array<const char*, N>& names, std::array<double, N>& out,
               std::array<std::size_t, N>& cols) {
  std::size_t pos = 0;
  const auto skip_spaces = [&] {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
  };
  for (std::size_t i = 0; i < N; ++i) {
    skip_spaces();
    cols[i] = pos + 1;
    const auto r = std::from_chars(line.data() + pos, line.data() + line.size(), out[i]);
    if (r.ec != std::errc{})
      throw ParseError(std::string("expected a number for field ") + names[i], line_no, pos + 1);
    pos = static_cast<std::size_t>(r.ptr - line.data());
    if (!std::isfinite(out[i]))
      throw ParseError(std::string("field ") + names[i] + " is not finite", line_no, cols[i]);
    skip_spaces();
    if (i + 1 < N) {
      if (pos >= line.size() || line[pos] != ',')
        throw ParseError("expected " + std::to_string(N) + " comma-separated fields, row ends after " +
                             names[i],
                         line_no, pos + 1);
      ++pos;
    }
  }
  if (pos < line.size())
    throw ParseError(std::string("unexpected text after field ") + names[N - 1], line_no, pos + 1);
}

// Walks physical lines, skipping blanks and '#' comments and checking any
// header-looking line against `header`, and hands data lines to on_row.
template <typename OnRow>
void scan_lines(std::string_view text, std::string_view header, OnRow&& on_row) {
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    const std::size_t nl = text.find('\n', start);
    std::string_view line =
        text.substr(start, nl == std::string_view::npos ? std::string_view::npos : nl - start);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    std::size_t first = 0;
    while (first < line.size() && (line[first] == ' ' || line[first] == '\t')) ++first;
    if (first < line.size() && line[first] != '#') {
      if (std::isalpha(static_cast<unsigned char>(line[first]))) {
        if (trim(line) != header)
          throw ParseError("unexpected header; expected \"" + std::string(header) + "\"", line_no,
                           first + 1);
      } else {
        on_row(line, line_no);
      }
    }
    if (nl == std::string_view::npos) break;
    start = nl + 1;
  }
}

}  // namespace

std::vector<WeightedPair> parse_pairs(std::string_view text) {
  static constexpr std::array<const char*, 7> names = {"ux", "uy", "uz", "vx", "vy", "vz", "w"};
  std::vector<WeightedPair> out;
  scan_lines(text, kPairsHeader, [&](std::string_view line, std::size_t line_no) {
    std::array<double, 7> f;
    std::array<std::size_t, 7> cols;
    parse_row(line, line_no, names, f, cols);
    if (!(f[6] > 0.0)) throw ParseError("w must be positive", line_no, cols[6]);
    out.push_back({{f[0], f[1], f[2]}, {f[3], f[4], f[5]}, f[6]});
  });
  return out;
}

std::vector<RotorMeasurement> parse_priors(std::string_view text) {
  static constexpr std::array<const char*, 5> names = {"w", "a", "c1", "c2", "c3"};
  std::vector<RotorMeasurement> out;
  scan_lines(text, kPriorsHeader, [&](std::string_view line, std::size_t line_no) {
    std::array<double, 5> f;
    std::array<std::size_t, 5> cols;
    parse_row(line, line_no, names, f, cols);
    if (!(f[0] > 0.0)) throw ParseError("w must be positive", line_no, cols[0]);
    const double n2 = f[1] * f[1] + f[2] * f[2] + f[3] * f[3] + f[4] * f[4];
    if (std::abs(n2 - 1.0) > ga::Rotor::kNormTolerance)
      throw ParseError("rotor coefficients are not unit norm", line_no, cols[1]);
    out.push_back({ga::Rotor(f[1], {f[2], f[3], f[4]}), f[0]});
  });
  return out;
}

std::string format_pairs(const std::vector<WeightedPair>& pairs) {
  std::string out{kPairsHeader};
  out += '\n';
  for (const WeightedPair& p : pairs) {
    const std::array<double, 7> f = {p.u.x, p.u.y, p.u.z, p.v.x, p.v.y, p.v.z, p.w};
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (i > 0) out += ',';
      append_g17(out, f[i]);
    }
    out += '\n';
  }
  return out;
}

std::string format_priors(const std::vector<RotorMeasurement>& priors) {
  std::string out{kPriorsHeader};
  out += '\n';
  for (const RotorMeasurement& rm : priors) {
    const Vec3 c = rm.s.bivec();
    const std::array<double, 5> f = {rm.w, rm.s.scalar(), c.x, c.y, c.z};
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (i > 0) out += ',';
      append_g17(out, f[i]);
    }
    out += '\n';
  }
  return out;
}

std::string slurp_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw IoError("failed reading " + path);
  return text;
}

void spew_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  out.flush();
  if (!out) throw IoError("failed writing " + path);
}

std::vector<WeightedPair> read_pairs(const std::string& path) { return parse_pairs(slurp_file(path)); }

std::vector<RotorMeasurement> read_priors(const std::string& path) {
  return parse_priors(slurp_file(path));
}

void write_pairs(const std::string& path, const std::vector<WeightedPair>& pairs) {
  spew_file(path, format_pairs(pairs));
}

void write_priors(const std::string& path, const std::vector<RotorMeasurement>& priors) {
  spew_file(path, format_priors(priors));
}

}  // namespace galign::csv
