#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

#include "polynet/activations.hpp"
#include "polynet/network.hpp"
#include "polynet/smooth_function.hpp"

namespace polynet {

// Localized Taylor polynomials of univariate Hölder functions and the
// sigma-networks that equal them.

// (1 - M |x - l/M|)_+  — the hat functions form a partition of unity on [0,1].
inline double hat_weight(int M, int l, double x) {
  const double w = 1.0 - M * std::abs(x - static_cast<double>(l) / M);
  return w > 0.0 ? w : 0.0;
}

// Taylor polynomial in centered form: sum_r c_r (x - center)^r with
// c_r = f^(r)(center) / r!.
struct TaylorPolynomial {
  double center = 0;
  std::vector<double> coefficients;

  double evaluate(double x) const {
    const double t = x - center;
    double out = 0;
    for (std::size_t r = coefficients.size(); r-- > 0;)
      out = out * t + coefficients[r];
    return out;
  }
};

inline TaylorPolynomial local_taylor(const SmoothFunctionSpec& f, double a) {
  if (a < 0.0 || a > 1.0)
    throw std::invalid_argument("local_taylor: expansion point outside [0,1]");
  TaylorPolynomial out;
  out.center = a;
  const std::vector<double> derivs = f.derivatives(a);
  out.coefficients.resize(derivs.size());
  for (std::size_t r = 0; r < derivs.size(); ++r)
    out.coefficients[r] = derivs[r] / factorial(static_cast<int>(r));
  return out;
}

// The grid table of Taylor coefficients blended by the hat partition of
// unity. Evaluation touches only the one or two hats overlapping x.
class LocalizedTaylor {
 public:
  LocalizedTaylor(const SmoothFunctionSpec& f, int M)
      : grid_count_(M), beta_(f.beta), terms_(f.derivative_count()) {
    if (M < 1) throw std::invalid_argument("localized_taylor: M must be >= 1");
    table_.reserve(static_cast<std::size_t>(M) + 1);
    for (int l = 0; l <= M; ++l) {
      std::vector<double> coefs = f.derivatives(static_cast<double>(l) / M);
      for (int r = 0; r < terms_; ++r) coefs[static_cast<std::size_t>(r)] /= factorial(r);
      table_.push_back(std::move(coefs));
    }
  }

  int grid_count() const { return grid_count_; }
  int term_count() const { return terms_; }
  double beta() const { return beta_; }
  const std::vector<std::vector<double>>& coefficient_table() const { return table_; }

  double evaluate(double x) const {
    const int l0 = static_cast<int>(std::floor(x * grid_count_));
    double out = 0;
    for (int l = l0; l <= l0 + 1; ++l) {
      if (l < 0 || l > grid_count_) continue;
      const double w = hat_weight(grid_count_, l, x);
      if (w <= 0.0) continue;
      const double t = x - static_cast<double>(l) / grid_count_;
      double taylor = 0;
      const auto& coefs = table_[static_cast<std::size_t>(l)];
      for (std::size_t r = coefs.size(); r-- > 0;) taylor = taylor * t + coefs[r];
      out += w * taylor;
    }
    return out;
  }

 private:
  int grid_count_;
  double beta_;
  int terms_;
  std::vector<std::vector<double>> table_;  // [l][r] = f^(r)(l/M) / r!
};

inline LocalizedTaylor localized_taylor(const SmoothFunctionSpec& f, int M) {
  return LocalizedTaylor(f, M);
}

inline double sup_deviation(const SmoothFunctionSpec& f,
                            const std::function<double(double)>& approx, int grid_size) {
  if (grid_size < 2) throw std::invalid_argument("sup_deviation: grid must have >= 2 points");
  double out = 0;
  for (int i = 0; i < grid_size; ++i) {
    const double x = static_cast<double>(i) / (grid_size - 1);
    out = std::max(out, std::abs(f.value(x) - approx(x)));
  }
  return out;
}

struct SupError {
  double measured;
  double bound;  // K M^-beta
};

inline SupError sup_error(const SmoothFunctionSpec& f, const LocalizedTaylor& approx,
                          int grid_size) {
  const double measured =
      sup_deviation(f, [&](double x) { return approx.evaluate(x); }, grid_size);
  const double bound = f.holder_radius * std::pow(approx.grid_count(), -f.beta);
  return {measured, bound};
}

// The f-independent hidden layer: unit (l, r) has weight 1 and bias
// k_{r,M} - l/M, where k_{r,M} is the sigma knot with a_k = r, b_k = M.
// Units are ordered l-major, r within.
struct HiddenLayer {
  std::vector<double> biases;
  std::vector<double> weights;  // all ones
};

inline HiddenLayer fixed_hidden_layer(double beta, int M) {
  if (M < 1) throw std::invalid_argument("fixed_hidden_layer: M must be >= 1");
  const int terms = taylor_term_count(beta);
  HiddenLayer layer;
  layer.biases.reserve(static_cast<std::size_t>((M + 1) * terms));
  for (int l = 0; l <= M; ++l)
    for (int r = 0; r < terms; ++r)
      layer.biases.push_back(static_cast<double>(sigma_knot_for(r, M)) -
                             static_cast<double>(l) / M);
  layer.weights.assign(layer.biases.size(), 1.0);
  return layer;
}

// Network parameter radius of the construction: K + (M + ceil(beta) + 1)^2.
inline double sigma_weight_radius(double beta, int M, double K) {
  const double shifted = M + taylor_term_count(beta) + 1;
  return K + shifted * shifted;
}

// Sup bound on the built networks: at most two hats overlap any x, each
// contributing ceil(beta) coordinates bounded by K.
inline double sigma_network_value_bound(double beta, double K) {
  return 2.0 * taylor_term_count(beta) * K;
}

// Width (M+1) ceil(beta) sigma-network equal to the localized Taylor
// polynomial of f: for x in [0,1], x - l/M lies in [-1,1], so
// sigma(k_{r,M} - l/M + x) = (x - l/M)^r (1 - M |x - l/M|)_+.
inline ShallowNetwork<double> build_sigma_network(const SmoothFunctionSpec& f, int M) {
  if (M < 1) throw std::invalid_argument("build_sigma_network: M must be >= 1");
  const int terms = f.derivative_count();
  ShallowNetwork<double> net;
  net.activation = Activation::sigma;
  net.input_dim = 1;
  HiddenLayer layer = fixed_hidden_layer(f.beta, M);
  net.biases = std::move(layer.biases);
  for (double w : layer.weights) net.input_weights.push_back({w});
  net.output_weights.reserve(net.biases.size());
  for (int l = 0; l <= M; ++l) {
    const std::vector<double> derivs = f.derivatives(static_cast<double>(l) / M);
    for (int r = 0; r < terms; ++r)
      net.output_weights.push_back(derivs[static_cast<std::size_t>(r)] / factorial(r));
  }
  return net;
}

}  // namespace polynet
