#ifndef OSCUT_ENERGY_HPP
#define OSCUT_ENERGY_HPP

#include <string>
#include <string_view>
#include <vector>

#include "oscut/angles.hpp"
#include "oscut/graph.hpp"

namespace oscut {

/// Even coupling function g(x) = sum_k c_k cos(kx), k = 1..d, with g(0) = 1
/// and g(pi) = -1, maximum at 0 and minimum at pi. These are the conditions
/// under which minimizing f(theta) = sum a_ij g(theta_i - theta_j) and
/// rounding by a random line carries an approximation guarantee.
///
/// Restricting to finite cosine series keeps every one-coordinate restriction
/// of the energy a trigonometric polynomial of the same degree, which is what
/// makes exact coordinate descent possible; evenness and differentiability
/// come for free.
class CouplingFunction {
 public:
  /// g = cos, the rank-two relaxation kernel. Constant 0.8786.
  static CouplingFunction cosine();

  /// Normalized truncation of the tent kernel 1 - (2/pi) d_S1(0, x) to its
  /// first `harmonics` odd terms: c_k = (1/k^2) / sum_{odd j <= 2m-1} 1/j^2.
  /// The normalization pins g(0) = 1 and g(pi) = -1 simultaneously.
  /// harmonics = 1 degenerates to cosine; harmonics = 5 is the 5-term series
  /// with leading coefficient 99225/117469 and constant 0.973.
  static CouplingFunction fourier_tent(int harmonics);

  /// Arbitrary coefficient list, coefficients[k-1] multiplying cos(kx).
  /// Validated against the admissibility conditions; throws
  /// std::invalid_argument when g(0) != 1, g(pi) != -1 (tolerance 1e-9), or
  /// a 10^4-point grid finds |g| > 1 + 1e-9.
  static CouplingFunction custom(std::vector<double> coefficients);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()); }
  const std::vector<double>& coefficients() const noexcept { return coeffs_; }

  /// g(x).
  double operator()(double x) const;
  /// g'(x) = -sum_k k c_k sin(kx).
  double derivative(double x) const;
  /// sum_k k^2 |c_k|, a global bound on |g''|.
  double curvature_bound() const;

  /// Spec string this function round-trips through ("cosine", "tent:5",
  /// "custom:1:0.9,3:0.1").
  const std::string& spec() const noexcept { return spec_; }

 private:
  CouplingFunction(std::vector<double> coeffs, std::string spec);
  void validate() const;

  std::vector<double> coeffs_;
  std::string spec_;
};

/// Parses "cosine" | "tent:<m>" | "custom:<k:c,...>" (explicit harmonic
/// indices, e.g. "custom:1:0.9,3:0.1"). Throws std::invalid_argument.
CouplingFunction parse_coupling_spec(std::string_view spec);

/// Kuramoto-type energy in the ordered-pair convention,
/// f(theta) = sum_{i,j} a_ij g(theta_i - theta_j)
///          = 2 sum_{edges} w g(theta_u - theta_v),
/// double-counting each edge to match the displayed formulas it is checked
/// against. Throws std::invalid_argument on a length mismatch.
double energy(const Graph& graph, const CouplingFunction& g,
              const AngleConfiguration& theta);

/// Analytic gradient: component i equals 2 sum_j a_ij g'(theta_i - theta_j).
std::vector<double> energy_gradient(const Graph& graph,
                                    const CouplingFunction& g,
                                    const AngleConfiguration& theta);

/// Restriction of the energy to one coordinate: freezing all angles but
/// theta_i, f(theta with theta_i := t) = h(t) + C where
/// h(t) = sum_k A_k cos(kt) + B_k sin(kt).
struct LocalField {
  std::vector<double> a;  // A_k, k = 1..d
  std::vector<double> b;  // B_k, k = 1..d

  int degree() const noexcept { return static_cast<int>(a.size()); }
  bool is_zero() const noexcept;
  double value(double t) const;
  double derivative(double t) const;
};

/// A_k = 2 c_k sum_j a_ij cos(k theta_j), B_k likewise with sin.
/// An isolated vertex yields the all-zero field.
LocalField local_field(const Graph& graph, const CouplingFunction& g,
                       const AngleConfiguration& theta, int vertex);

/// min over (0, pi] of r(x) = (2/pi) x / (1 - g(x)) together with its argmin.
/// This is the rounding guarantee factor: the expected cut of a minimal
/// energy configuration is at least this fraction of Max-Cut. r -> infinity
/// as x -> 0+ (1 - g is quadratic at 0), so the minimum is interior or at
/// r(pi) = 1; found by a 10^5-point grid plus golden-section refinement of
/// the best bracket to 1e-10 in x.
struct ApproximationConstant {
  double value = 0.0;
  double argmin = 0.0;
};
ApproximationConstant approximation_constant(const CouplingFunction& g);

}  // namespace oscut

#endif  // OSCUT_ENERGY_HPP
