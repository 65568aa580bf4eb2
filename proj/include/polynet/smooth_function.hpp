#pragma once

#include <cmath>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace polynet {

// A univariate function on [0,1] carrying analytically supplied derivatives
// and a certified Hölder radius K, so approximation bounds can be checked
// against a K that is a genuine upper bound rather than a guess.

// Number of integers r with 0 <= r < beta (strict at integer beta). The
// tiny snap keeps parse noise like 2+1e-15 from adding a phantom term.
inline int taylor_term_count(double beta) {
  if (beta <= 0) throw std::invalid_argument("beta must be positive");
  return static_cast<int>(std::ceil(beta - 1e-9));
}

inline double factorial(int r) {
  double out = 1;
  for (int i = 2; i <= r; ++i) out *= i;
  return out;
}

struct SmoothFunctionSpec {
  std::string name;
  double beta = 1.0;
  double holder_radius = 1.0;  // K with f in C^beta(K)
  bool has_offgrid_values = true;
  std::function<double(double)> value;
  // f^(r)(a) for r = 0..taylor_term_count(beta)-1
  std::function<std::vector<double>(double)> derivatives;

  int derivative_count() const { return taylor_term_count(beta); }
};

// K from per-derivative sup-norm bounds: sum of ||f^(r)|| for r <= s plus
// the alpha-Hölder seminorm of f^(s), s = ceil(beta)-1, alpha = beta-s.
// The seminorm uses the interpolation bound min(||g'||, ||g'||^a (2||g||)^(1-a)).
inline double holder_radius_from_norms(const std::vector<double>& sup_norms, double beta) {
  const int s = taylor_term_count(beta) - 1;
  if (static_cast<int>(sup_norms.size()) < s + 2)
    throw std::invalid_argument("holder_radius_from_norms: need norms up to order s+1");
  const double alpha = beta - s;
  double total = 0;
  for (int r = 0; r <= s; ++r) total += sup_norms[static_cast<std::size_t>(r)];
  const double g = sup_norms[static_cast<std::size_t>(s)];
  const double gp = sup_norms[static_cast<std::size_t>(s) + 1];
  double seminorm = 0;
  if (gp > 0)
    seminorm = std::min(gp, std::pow(gp, alpha) * std::pow(2 * g, 1 - alpha));
  return total + seminorm;
}

namespace detail {

// cos/sin derivative cycle without accumulating r*pi/2 phase error.
inline double sin_derivative_cycle(int r, double t) {
  switch (r & 3) {
    case 0: return std::sin(t);
    case 1: return std::cos(t);
    case 2: return -std::sin(t);
    default: return -std::cos(t);
  }
}

}  // namespace detail

inline SmoothFunctionSpec make_sine(double beta, double amplitude = 1.0, double frequency = 1.0) {
  if (amplitude <= 0 || frequency <= 0)
    throw std::invalid_argument("sine: amplitude and frequency must be positive");
  const double omega = 2.0 * M_PI * frequency;
  SmoothFunctionSpec f;
  f.name = "sin";
  f.beta = beta;
  const int terms = taylor_term_count(beta);
  std::vector<double> norms;
  for (int r = 0; r <= terms; ++r) norms.push_back(amplitude * std::pow(omega, r));
  f.holder_radius = holder_radius_from_norms(norms, beta);
  f.value = [amplitude, omega](double x) { return amplitude * std::sin(omega * x); };
  f.derivatives = [amplitude, omega, terms](double a) {
    std::vector<double> out(static_cast<std::size_t>(terms));
    double scale = amplitude;
    for (int r = 0; r < terms; ++r) {
      out[static_cast<std::size_t>(r)] = scale * detail::sin_derivative_cycle(r, omega * a);
      scale *= omega;
    }
    return out;
  };
  return f;
}

inline SmoothFunctionSpec make_exponential(double beta, double amplitude = 1.0) {
  if (amplitude <= 0) throw std::invalid_argument("exp: amplitude must be positive");
  SmoothFunctionSpec f;
  f.name = "exp";
  f.beta = beta;
  const int terms = taylor_term_count(beta);
  std::vector<double> norms(static_cast<std::size_t>(terms) + 1, amplitude * std::exp(1.0));
  f.holder_radius = holder_radius_from_norms(norms, beta);
  f.value = [amplitude](double x) { return amplitude * std::exp(x); };
  f.derivatives = [amplitude, terms](double a) {
    return std::vector<double>(static_cast<std::size_t>(terms), amplitude * std::exp(a));
  };
  return f;
}

// p(x) = x^3 - (3/2)x^2 + x/2, roots at 0, 1/2, 1. Sup norms on [0,1] are
// analytic: ||p|| = 1/(12 sqrt 3), ||p'|| = 1/2, ||p''|| = 3, ||p'''|| = 6.
inline SmoothFunctionSpec make_cubic(double beta) {
  SmoothFunctionSpec f;
  f.name = "poly";
  f.beta = beta;
  const int terms = taylor_term_count(beta);
  std::vector<double> norms = {1.0 / (12.0 * std::sqrt(3.0)), 0.5, 3.0, 6.0};
  norms.resize(static_cast<std::size_t>(std::max(terms + 1, 4)), 0.0);
  f.holder_radius = holder_radius_from_norms(norms, beta);
  f.value = [](double x) { return ((x - 1.5) * x + 0.5) * x; };
  f.derivatives = [terms](double a) {
    std::vector<double> out(static_cast<std::size_t>(terms), 0.0);
    const double all[4] = {((a - 1.5) * a + 0.5) * a, (3.0 * a - 3.0) * a + 0.5, 6.0 * a - 3.0, 6.0};
    for (int r = 0; r < terms && r < 4; ++r) out[static_cast<std::size_t>(r)] = all[r];
    return out;
  };
  return f;
}

// Finite Weierstrass-type sum, rough at exactly the requested smoothness
// down to scale 2^-levels: f(x) = amp * sum_j 2^(-beta j) cos(2 pi 2^j x).
// K is analytic: termwise sup norms plus the seminorm bound
// amp (2 pi)^beta 2^(1-alpha) levels, using min(u,2) <= u^alpha 2^(1-alpha).
inline SmoothFunctionSpec make_weierstrass(double beta, int levels = 12, double amplitude = 1.0) {
  if (levels < 1) throw std::invalid_argument("weierstrass: need at least one level");
  SmoothFunctionSpec f;
  f.name = "weier";
  f.beta = beta;
  const int terms = taylor_term_count(beta);
  const int s = terms - 1;
  const double alpha = beta - s;
  double total = 0;
  for (int r = 0; r <= s; ++r) {
    double norm = 0;
    for (int j = 0; j < levels; ++j) norm += std::pow(2.0, (r - beta) * j);
    total += amplitude * std::pow(2.0 * M_PI, r) * norm;
  }
  f.holder_radius = total + amplitude * std::pow(2.0 * M_PI, beta) * std::pow(2.0, 1 - alpha) * levels;
  f.value = [amplitude, beta, levels](double x) {
    double out = 0;
    for (int j = 0; j < levels; ++j)
      out += std::pow(2.0, -beta * j) * std::cos(2.0 * M_PI * std::pow(2.0, j) * x);
    return amplitude * out;
  };
  f.derivatives = [amplitude, beta, levels, terms](double a) {
    std::vector<double> out(static_cast<std::size_t>(terms), 0.0);
    for (int j = 0; j < levels; ++j) {
      const double omega = 2.0 * M_PI * std::pow(2.0, j);
      const double weight = std::pow(2.0, -beta * j);
      double scale = weight;
      for (int r = 0; r < terms; ++r) {
        // d^r/dx^r cos(omega x) = omega^r * cos-cycle
        out[static_cast<std::size_t>(r)] +=
            amplitude * scale * detail::sin_derivative_cycle(r + 1, omega * a);
        scale *= omega;
      }
    }
    return out;
  };
  return f;
}

// External function supplied as a derivative table at the grid points l/M:
// rows (l, r) -> f^(r)(l/M). Off-grid values do not exist, so such a
// function can be compiled into a network but not error-measured.
inline SmoothFunctionSpec make_table_function(double beta, int M,
                                              std::map<std::pair<int, int>, double> table,
                                              double holder_radius) {
  SmoothFunctionSpec f;
  f.name = "table";
  f.beta = beta;
  f.holder_radius = holder_radius;
  f.has_offgrid_values = false;
  const int terms = taylor_term_count(beta);
  auto shared = std::make_shared<std::map<std::pair<int, int>, double>>(std::move(table));
  for (int l = 0; l <= M; ++l)
    for (int r = 0; r < terms; ++r)
      if (!shared->count({l, r}))
        throw std::invalid_argument("table function: missing entry for grid point " +
                                    std::to_string(l) + ", derivative " + std::to_string(r));
  f.value = [](double) -> double {
    throw std::invalid_argument("table function: values only known at grid points");
  };
  f.derivatives = [shared, M, terms](double a) {
    const double scaled = a * M;
    const int l = static_cast<int>(std::llround(scaled));
    if (std::abs(scaled - l) > 1e-9 || l < 0 || l > M)
      throw std::invalid_argument("table function: derivatives only known at grid points");
    std::vector<double> out(static_cast<std::size_t>(terms));
    for (int r = 0; r < terms; ++r) out[static_cast<std::size_t>(r)] = shared->at({l, r});
    return out;
  };
  return f;
}

inline SmoothFunctionSpec lookup_function(const std::string& name, double beta,
                                          double amplitude = 1.0, double frequency = 1.0) {
  if (name == "sin") return make_sine(beta, amplitude, frequency);
  if (name == "exp") return make_exponential(beta, amplitude);
  if (name == "poly") return make_cubic(beta);
  if (name == "weier") return make_weierstrass(beta, 12, amplitude);
  throw std::invalid_argument("unknown test function '" + name + "' (try sin, exp, poly, weier)");
}

// Dense-grid estimate of the C^beta norm, used to refuse configurations
// whose claimed K is smaller than what the function exhibits. A grid
// estimate can only undershoot the true norm, so it is a sound refusal
// criterion (never a certification).
inline double holder_norm_grid_estimate(const SmoothFunctionSpec& f, int grid_size = 512) {
  const int s = f.derivative_count() - 1;
  const double alpha = f.beta - s;
  std::vector<std::vector<double>> derivs;
  derivs.reserve(static_cast<std::size_t>(grid_size));
  for (int i = 0; i < grid_size; ++i)
    derivs.push_back(f.derivatives(static_cast<double>(i) / (grid_size - 1)));
  double total = 0;
  for (int r = 0; r <= s; ++r) {
    double m = 0;
    for (const auto& row : derivs) m = std::max(m, std::abs(row[static_cast<std::size_t>(r)]));
    total += m;
  }
  double quotient = 0;
  for (int i = 0; i < grid_size; ++i) {
    for (int j = i + 1; j < grid_size; ++j) {
      const double h = static_cast<double>(j - i) / (grid_size - 1);
      const double gap = std::abs(derivs[static_cast<std::size_t>(i)][static_cast<std::size_t>(s)] -
                                  derivs[static_cast<std::size_t>(j)][static_cast<std::size_t>(s)]);
      quotient = std::max(quotient, gap / std::pow(h, alpha));
    }
  }
  return total + quotient;
}

}  // namespace polynet
