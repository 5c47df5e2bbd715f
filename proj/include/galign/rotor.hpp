#pragma once

#include <cmath>

#include "galign/errors.hpp"
#include "galign/multivector.hpp"
#include "galign/vec.hpp"

namespace galign::ga {

// Element of the even subalgebra: scalar + I bivec.
struct EvenMultivector {
  double scalar = 0.0;
  Vec3 bivec{};

  constexpr EvenMultivector operator+(const EvenMultivector& o) const {
    return {scalar + o.scalar, bivec + o.bivec};
  }
  constexpr EvenMultivector operator-(const EvenMultivector& o) const {
    return {scalar - o.scalar, bivec - o.bivec};
  }
  constexpr EvenMultivector operator*(double s) const { return {scalar * s, bivec * s}; }
  constexpr EvenMultivector& operator+=(const EvenMultivector& o) {
    scalar += o.scalar;
    bivec += o.bivec;
    return *this;
  }
};

// Closed-form product on the even subalgebra:
// (a1 + I c1)(a2 + I c2) = (a1 a2 - c1.c2) + I (a1 c2 + a2 c1 - c1 x c2).
constexpr EvenMultivector even_product(const EvenMultivector& p, const EvenMultivector& q) {
  return {p.scalar * q.scalar - dot(p.bivec, q.bivec),
          p.scalar * q.bivec + q.scalar * p.bivec - cross(p.bivec, q.bivec)};
}

constexpr EvenMultivector reverse(const EvenMultivector& p) { return {p.scalar, -p.bivec}; }

constexpr Multivector embed(const EvenMultivector& p) {
  return Multivector::from_parts(p.scalar, Vec3{}, p.bivec, 0.0);
}

constexpr EvenMultivector even_part(const Multivector& m) {
  return {m.scalar_coeff(), m.bivector_part()};
}

// Unit-norm even multivector. Construction renormalizes mild float drift
// (|a^2 + c.c - 1| <= 1e-6) and rejects anything further off.
class Rotor {
 public:
  constexpr Rotor() : s_(1.0) {}

  Rotor(double scalar, const Vec3& bivec) : s_(scalar), b_(bivec) {
    const double n2 = s_ * s_ + norm2(b_);
    if (!(std::abs(n2 - 1.0) <= kNormTolerance))
      throw NonUnitRotor("rotor coefficients are not unit norm");
    const double inv = 1.0 / std::sqrt(n2);
    s_ *= inv;
    b_ *= inv;
  }

  static Rotor from_axis_angle(const Vec3& axis, double angle) {
    if (angle == 0.0) return Rotor{};
    if (std::abs(norm(axis) - 1.0) > 1e-9) throw NonUnitAxis("rotation axis is not unit length");
    return Rotor(std::cos(angle / 2.0), std::sin(angle / 2.0) * axis);
  }

  constexpr double scalar() const { return s_; }
  constexpr const Vec3& bivec() const { return b_; }

  constexpr Rotor reversed() const { return Rotor(Raw{}, s_, -b_); }

  constexpr EvenMultivector even() const { return {s_, b_}; }

  // Angle in [0, 2pi]; the identity rotor reports angle 0 with axis e3.
  double angle() const { return 2.0 * std::atan2(norm(b_), s_); }
  Vec3 axis() const {
    const double n = norm(b_);
    if (n == 0.0) return {0.0, 0.0, 1.0};
    return b_ / n;
  }

  static constexpr double kNormTolerance = 1e-6;

 private:
  struct Raw {};
  constexpr Rotor(Raw, double s, const Vec3& b) : s_(s), b_(b) {}

  double s_;
  Vec3 b_{};
};

// Rotor composition; renormalized to keep drift out of long chains.
inline Rotor compose(const Rotor& r1, const Rotor& r2) {
  const EvenMultivector p = even_product(r1.even(), r2.even());
  return Rotor(p.scalar, p.bivec);
}

namespace detail {

// Sandwich R v R~ through the full geometric product.
constexpr Multivector sandwich(const EvenMultivector& r, const Vec3& v) {
  const Multivector rm = embed(r);
  return rm * Multivector::vector(v) * embed(reverse(r));
}

// Convention audit, frozen at compile time: with the product table above,
// R v R~ for R = cos(phi/2) + sin(phi/2) I e3 and phi = pi/2 maps e1 to -e2.
// The sandwich therefore rotates vectors by -phi about the axis under the
// right-hand rule (equivalently R~ v R rotates by +phi).
constexpr bool convention_audit() {
  constexpr double half_sqrt2 = 0.70710678118654752440;
  constexpr EvenMultivector r{half_sqrt2, Vec3{0.0, 0.0, half_sqrt2}};
  constexpr Multivector out = sandwich(r, Vec3{1.0, 0.0, 0.0});
  constexpr auto near = [](double a, double b) {
    const double d = a - b;
    return (d < 0 ? -d : d) <= 1e-15;
  };
  return near(out.coeff[0], 0.0) && near(out.coeff[1], 0.0) && near(out.coeff[2], -1.0) &&
         near(out.coeff[3], 0.0) && near(out.coeff[4], 0.0) && near(out.coeff[5], 0.0) &&
         near(out.coeff[6], 0.0) && near(out.coeff[7], 0.0);
}

static_assert(convention_audit());

}  // namespace detail

// Rotate a vector with the sandwich product R v R~. The non-vector parts of
// the product vanish to rounding for a unit rotor and are truncated.
constexpr Vec3 rotate(const Rotor& r, const Vec3& v) {
  return detail::sandwich(r.even(), v).vector_part();
}

// Column k is rotate(r, e_k); orthogonal with determinant +1.
constexpr Mat3 rotor_to_matrix(const Rotor& r) {
  const Vec3 c0 = rotate(r, {1.0, 0.0, 0.0});
  const Vec3 c1 = rotate(r, {0.0, 1.0, 0.0});
  const Vec3 c2 = rotate(r, {0.0, 0.0, 1.0});
  Mat3 out;
  out(0, 0) = c0.x;
  out(1, 0) = c0.y;
  out(2, 0) = c0.z;
  out(0, 1) = c1.x;
  out(1, 1) = c1.y;
  out(2, 1) = c1.z;
  out(0, 2) = c2.x;
  out(1, 2) = c2.y;
  out(2, 2) = c2.z;
  return out;
}

}  // namespace galign::ga
