#ifndef OSCUT_ANGLES_HPP
#define OSCUT_ANGLES_HPP

#include <cmath>
#include <cstddef>
#include <numbers>
#include <vector>

namespace oscut {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Reduces an angle into [0, 2*pi).
inline double wrap_angle(double x) {
  double r = std::fmod(x, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;  // fmod can round up to 2*pi
  return r;
}

/// One angle per vertex, each kept reduced into [0, 2*pi).
class AngleConfiguration {
 public:
  AngleConfiguration() = default;

  explicit AngleConfiguration(std::vector<double> angles)
      : angles_(std::move(angles)) {
    for (double& a : angles_) a = wrap_angle(a);
  }

  static AngleConfiguration zeros(std::size_t n) {
    return AngleConfiguration(std::vector<double>(n, 0.0));
  }

  std::size_t size() const noexcept { return angles_.size(); }
  bool empty() const noexcept { return angles_.empty(); }
  double operator[](std::size_t i) const { return angles_[i]; }
  const std::vector<double>& values() const noexcept { return angles_; }

  void set(std::size_t i, double value) { angles_[i] = wrap_angle(value); }

  /// Global rotation by s (used by the rotation-invariance properties).
  AngleConfiguration rotated(double s) const {
    std::vector<double> shifted(angles_);
    for (double& a : shifted) a = wrap_angle(a + s);
    return AngleConfiguration(std::move(shifted));
  }

  /// Global reflection theta -> -theta.
  AngleConfiguration reflected() const {
    std::vector<double> flipped(angles_);
    for (double& a : flipped) a = wrap_angle(-a);
    return AngleConfiguration(std::move(flipped));
  }

 private:
  std::vector<double> angles_;
};

}  // namespace oscut

#endif  // OSCUT_ANGLES_HPP
