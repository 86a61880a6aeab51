#include "oscut/energy.hpp"

#include <algorithm>
#include <cmath>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace oscut {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kAdmissibilityTol = 1e-9;
constexpr int kValidationGridPoints = 10000;
constexpr int kConstantGridPoints = 100000;
// r(x) = (2/pi) x / (1 - g(x)) blows up like 1/x near 0; the excluded
// neighborhood avoids the 0/0 at the origin itself.
constexpr double kConstantGridStart = 1e-6;

double to_double(std::string_view token, const char* what) {
  double value = 0.0;
  const char* begin = token.data();
  const char* end = begin + token.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end) {
    throw std::invalid_argument(std::string("malformed ") + what + " '" +
                                std::string(token) + "'");
  }
  return value;
}

long to_long(std::string_view token, const char* what) {
  long value = 0;
  const char* begin = token.data();
  const char* end = begin + token.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end) {
    throw std::invalid_argument(std::string("malformed ") + what + " '" +
                                std::string(token) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t pos = text.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.push_back(text.substr(start));
      break;
    }
    parts.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
  return parts;
}

}  // namespace

CouplingFunction::CouplingFunction(std::vector<double> coeffs, std::string spec)
    : coeffs_(std::move(coeffs)), spec_(std::move(spec)) {
  validate();
}

CouplingFunction CouplingFunction::cosine() {
  return CouplingFunction({1.0}, "cosine");
}

CouplingFunction CouplingFunction::fourier_tent(int harmonics) {
  if (harmonics < 1) {
    throw std::invalid_argument("tent truncation needs at least one harmonic");
  }
  // Odd harmonics k = 1, 3, ..., 2m-1 with weights 1/k^2, normalized so that
  // g(0) = 1; since cos(k pi) = -1 on odd k, the same normalization gives
  // g(pi) = -1.
  const int top = 2 * harmonics - 1;
  std::vector<double> coeffs(static_cast<std::size_t>(top), 0.0);
  double norm = 0.0;
  for (int k = 1; k <= top; k += 2) norm += 1.0 / (double(k) * k);
  for (int k = 1; k <= top; k += 2) {
    coeffs[static_cast<std::size_t>(k - 1)] = 1.0 / (double(k) * k) / norm;
  }
  return CouplingFunction(std::move(coeffs),
                          "tent:" + std::to_string(harmonics));
}

CouplingFunction CouplingFunction::custom(std::vector<double> coefficients) {
  std::ostringstream spec;
  spec << "custom:";
  spec.precision(17);
  bool first = true;
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    if (coefficients[i] == 0.0) continue;
    if (!first) spec << ',';
    spec << (i + 1) << ':' << coefficients[i];
    first = false;
  }
  return CouplingFunction(std::move(coefficients), spec.str());
}

void CouplingFunction::validate() const {
  if (coeffs_.empty()) {
    throw std::invalid_argument("coupling function needs a coefficient");
  }
  double at_zero = 0.0;
  double at_pi = 0.0;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (!std::isfinite(coeffs_[i])) {
      throw std::invalid_argument("non-finite coefficient");
    }
    at_zero += coeffs_[i];
    at_pi += (i % 2 == 0) ? -coeffs_[i] : coeffs_[i];  // cos(k pi) = (-1)^k
  }
  if (std::abs(at_zero - 1.0) > kAdmissibilityTol) {
    throw std::invalid_argument("g(0) must equal 1");
  }
  if (std::abs(at_pi + 1.0) > kAdmissibilityTol) {
    throw std::invalid_argument("g(pi) must equal -1");
  }
  // Condition (3) has no closed-form test for general coefficient lists;
  // check |g| <= 1 on a dense grid. With g(0) = 1 and g(pi) = -1 pinned this
  // places the maximum at 0 and the minimum at pi.
  for (int i = 0; i <= kValidationGridPoints; ++i) {
    const double x = kTwoPi * i / kValidationGridPoints;
    const double gx = (*this)(x);
    if (gx > 1.0 + kAdmissibilityTol || gx < -1.0 - kAdmissibilityTol) {
      throw std::invalid_argument("g leaves [-1, 1] near x = " +
                                  std::to_string(x));
    }
  }
}

double CouplingFunction::operator()(double x) const {
  double sum = 0.0;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0.0) continue;
    sum += coeffs_[i] * std::cos(double(i + 1) * x);
  }
  return sum;
}

double CouplingFunction::derivative(double x) const {
  double sum = 0.0;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0.0) continue;
    const double k = double(i + 1);
    sum -= k * coeffs_[i] * std::sin(k * x);
  }
  return sum;
}

double CouplingFunction::curvature_bound() const {
  double sum = 0.0;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const double k = double(i + 1);
    sum += k * k * std::abs(coeffs_[i]);
  }
  return sum;
}

CouplingFunction parse_coupling_spec(std::string_view spec) {
  if (spec == "cosine" || spec == "cos") return CouplingFunction::cosine();
  if (spec.rfind("tent:", 0) == 0) {
    const long m = to_long(spec.substr(5), "harmonic count");
    if (m < 1 || m > 512) {
      throw std::invalid_argument("tent harmonic count out of range");
    }
    return CouplingFunction::fourier_tent(static_cast<int>(m));
  }
  if (spec.rfind("custom:", 0) == 0) {
    const auto body = spec.substr(7);
    if (body.empty()) throw std::invalid_argument("empty custom coefficients");
    std::vector<double> coeffs;
    std::vector<bool> given;
    for (std::string_view item : split(body, ',')) {
      const auto colon = item.find(':');
      if (colon == std::string_view::npos) {
        throw std::invalid_argument("custom entries are k:coefficient pairs");
      }
      const long k = to_long(item.substr(0, colon), "harmonic index");
      if (k < 1 || k > 1024) {
        throw std::invalid_argument("harmonic index out of range");
      }
      const double c = to_double(item.substr(colon + 1), "coefficient");
      if (coeffs.size() < static_cast<std::size_t>(k)) {
        coeffs.resize(static_cast<std::size_t>(k), 0.0);
        given.resize(static_cast<std::size_t>(k), false);
      }
      if (given[static_cast<std::size_t>(k - 1)]) {
        throw std::invalid_argument("harmonic " + std::to_string(k) +
                                    " given twice");
      }
      given[static_cast<std::size_t>(k - 1)] = true;
      coeffs[static_cast<std::size_t>(k - 1)] = c;
    }
    return CouplingFunction::custom(std::move(coeffs));
  }
  throw std::invalid_argument("unknown coupling spec '" + std::string(spec) +
                              "' (expected cosine | tent:<m> | custom:<k:c,...>)");
}

double energy(const Graph& graph, const CouplingFunction& g,
              const AngleConfiguration& theta) {
  if (theta.size() != static_cast<std::size_t>(graph.vertex_count())) {
    throw std::invalid_argument("angle configuration length mismatch");
  }
  double sum = 0.0;
  for (const Edge& e : graph.edges()) {
    sum += e.weight * g(theta[static_cast<std::size_t>(e.u)] -
                        theta[static_cast<std::size_t>(e.v)]);
  }
  return 2.0 * sum;  // ordered-pair convention counts every edge twice
}

std::vector<double> energy_gradient(const Graph& graph,
                                    const CouplingFunction& g,
                                    const AngleConfiguration& theta) {
  if (theta.size() != static_cast<std::size_t>(graph.vertex_count())) {
    throw std::invalid_argument("angle configuration length mismatch");
  }
  std::vector<double> grad(theta.size(), 0.0);
  for (const Edge& e : graph.edges()) {
    // g' is odd, so the v-side term is the negation of the u-side one.
    const double gp = g.derivative(theta[static_cast<std::size_t>(e.u)] -
                                   theta[static_cast<std::size_t>(e.v)]);
    grad[static_cast<std::size_t>(e.u)] += 2.0 * e.weight * gp;
    grad[static_cast<std::size_t>(e.v)] -= 2.0 * e.weight * gp;
  }
  return grad;
}

bool LocalField::is_zero() const noexcept {
  return std::all_of(a.begin(), a.end(), [](double x) { return x == 0.0; }) &&
         std::all_of(b.begin(), b.end(), [](double x) { return x == 0.0; });
}

double LocalField::value(double t) const {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0.0 && b[i] == 0.0) continue;
    const double kt = double(i + 1) * t;
    sum += a[i] * std::cos(kt) + b[i] * std::sin(kt);
  }
  return sum;
}

double LocalField::derivative(double t) const {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0.0 && b[i] == 0.0) continue;
    const double k = double(i + 1);
    sum += k * (-a[i] * std::sin(k * t) + b[i] * std::cos(k * t));
  }
  return sum;
}

LocalField local_field(const Graph& graph, const CouplingFunction& g,
                       const AngleConfiguration& theta, int vertex) {
  if (theta.size() != static_cast<std::size_t>(graph.vertex_count())) {
    throw std::invalid_argument("angle configuration length mismatch");
  }
  if (vertex < 0 || vertex >= graph.vertex_count()) {
    throw std::invalid_argument("vertex out of range");
  }
  const int d = g.degree();
  LocalField field;
  field.a.assign(static_cast<std::size_t>(d), 0.0);
  field.b.assign(static_cast<std::size_t>(d), 0.0);
  // Weighted neighbor moments sum_j a_ij cos(k theta_j) / sin(k theta_j),
  // built per neighbor by the angle-addition recurrence.
  for (const auto& [nbr, w] : graph.neighbors(vertex)) {
    const double t = theta[static_cast<std::size_t>(nbr)];
    const double c1 = std::cos(t), s1 = std::sin(t);
    double ck = c1, sk = s1;
    for (int k = 1; k <= d; ++k) {
      field.a[static_cast<std::size_t>(k - 1)] += w * ck;
      field.b[static_cast<std::size_t>(k - 1)] += w * sk;
      const double cn = ck * c1 - sk * s1;
      sk = sk * c1 + ck * s1;
      ck = cn;
    }
  }
  const auto& coeffs = g.coefficients();
  for (int k = 1; k <= d; ++k) {
    const double scale = 2.0 * coeffs[static_cast<std::size_t>(k - 1)];
    field.a[static_cast<std::size_t>(k - 1)] *= scale;
    field.b[static_cast<std::size_t>(k - 1)] *= scale;
  }
  return field;
}

ApproximationConstant approximation_constant(const CouplingFunction& g) {
  const auto ratio = [&](double x) {
    const double denom = 1.0 - g(x);
    if (denom <= 0.0) {
      throw std::invalid_argument(
          "1 - g(x) <= 0 away from the origin; g is not admissible");
    }
    return (2.0 / kPi) * x / denom;
  };

  const double lo = kConstantGridStart;
  const double step = (kPi - lo) / (kConstantGridPoints - 1);
  double best = ratio(kPi);  // r(pi) = 1 exactly when g(pi) = -1
  double best_x = kPi;
  int best_index = kConstantGridPoints - 1;
  for (int i = 0; i < kConstantGridPoints; ++i) {
    const double x = (i == kConstantGridPoints - 1) ? kPi : lo + i * step;
    const double r = ratio(x);
    if (r < best) {
      best = r;
      best_x = x;
      best_index = i;
    }
  }

  // Golden-section refinement of the bracket around the best grid point.
  double a = std::max(lo, lo + (best_index - 1) * step);
  double b = std::min(kPi, lo + (best_index + 1) * step);
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = ratio(x1);
  double f2 = ratio(x2);
  while (b - a > 1e-10) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = ratio(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = ratio(x2);
    }
  }
  const double xm = 0.5 * (a + b);
  ApproximationConstant result{ratio(xm), xm};
  if (f1 < result.value) result = {f1, x1};
  if (f2 < result.value) result = {f2, x2};
  if (best < result.value) result = {best, best_x};
  return result;
}

}  // namespace oscut
