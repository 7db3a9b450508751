#pragma once

#include <array>
#include <cmath>

namespace hgrav {

using Vec3 = std::array<double, 3>;

[[nodiscard]] inline double norm(const Vec3& v) {
  return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
}

[[nodiscard]] inline double dot(const Vec3& a, const Vec3& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

/// A uniform field: non-negative magnitude (m/s^2) along a unit axis.
struct FieldSpec {
  double magnitude = 0.0;
  Vec3 axis{0.0, 0.0, 1.0};

  [[nodiscard]] static FieldSpec along_z(double magnitude) { return {magnitude, {0.0, 0.0, 1.0}}; }

  /// Field equal to the given vector; a zero vector yields magnitude 0 along z.
  [[nodiscard]] static FieldSpec from_vector(const Vec3& g);

  /// Throws InvalidArgument on a negative magnitude or a non-unit axis.
  void validate() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

}  // namespace hgrav
