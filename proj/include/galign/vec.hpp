#pragma once

#include <array>
#include <cmath>

namespace galign {

// Plain 3-vector over double. Everything here is constexpr so the
// multivector product table and the convention audit can run at compile time.
struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr double operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }

  constexpr Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  constexpr Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  constexpr Vec3 operator-() const { return {-x, -y, -z}; }
  constexpr Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
  constexpr Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }

  constexpr Vec3& operator+=(const Vec3& o) {
    x += o.x;
    y += o.y;
    z += o.z;
    return *this;
  }
  constexpr Vec3& operator-=(const Vec3& o) {
    x -= o.x;
    y -= o.y;
    z -= o.z;
    return *this;
  }
  constexpr Vec3& operator*=(double s) {
    x *= s;
    y *= s;
    z *= s;
    return *this;
  }

  constexpr bool operator==(const Vec3&) const = default;
};

constexpr Vec3 operator*(double s, const Vec3& v) { return v * s; }

constexpr double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

constexpr Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

constexpr double norm2(const Vec3& v) { return dot(v, v); }

inline double norm(const Vec3& v) { return std::sqrt(norm2(v)); }

// Row-major 3x3 matrix. Just enough for the data matrix and rotor output.
struct Mat3 {
  std::array<double, 9> m{};

  constexpr double& operator()(int r, int c) { return m[static_cast<size_t>(3 * r + c)]; }
  constexpr double operator()(int r, int c) const { return m[static_cast<size_t>(3 * r + c)]; }

  static constexpr Mat3 zero() { return {}; }
  static constexpr Mat3 identity() {
    Mat3 out;
    out(0, 0) = out(1, 1) = out(2, 2) = 1.0;
    return out;
  }

  constexpr Mat3 transpose() const {
    Mat3 out;
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) out(r, c) = (*this)(c, r);
    return out;
  }

  constexpr double trace() const { return m[0] + m[4] + m[8]; }

  constexpr Mat3 operator+(const Mat3& o) const {
    Mat3 out;
    for (size_t i = 0; i < 9; ++i) out.m[i] = m[i] + o.m[i];
    return out;
  }
  constexpr Mat3 operator-(const Mat3& o) const {
    Mat3 out;
    for (size_t i = 0; i < 9; ++i) out.m[i] = m[i] - o.m[i];
    return out;
  }
  constexpr Mat3 operator*(double s) const {
    Mat3 out;
    for (size_t i = 0; i < 9; ++i) out.m[i] = m[i] * s;
    return out;
  }
  constexpr Mat3& operator+=(const Mat3& o) {
    for (size_t i = 0; i < 9; ++i) m[i] += o.m[i];
    return *this;
  }

  constexpr Vec3 operator*(const Vec3& v) const {
    return {m[0] * v.x + m[1] * v.y + m[2] * v.z,
            m[3] * v.x + m[4] * v.y + m[5] * v.z,
            m[6] * v.x + m[7] * v.y + m[8] * v.z};
  }

  constexpr Mat3 operator*(const Mat3& o) const {
    Mat3 out;
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) {
        double acc = 0.0;
        for (int k = 0; k < 3; ++k) acc += (*this)(r, k) * o(k, c);
        out(r, c) = acc;
      }
    return out;
  }

  constexpr double det() const {
    return m[0] * (m[4] * m[8] - m[5] * m[7]) - m[1] * (m[3] * m[8] - m[5] * m[6]) +
           m[2] * (m[3] * m[7] - m[4] * m[6]);
  }
};

// u v^T
constexpr Mat3 outer(const Vec3& u, const Vec3& v) {
  Mat3 out;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) out(r, c) = u[r] * v[c];
  return out;
}

}  // namespace galign
