#pragma once

#include <map>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "polynet/multi_index.hpp"
#include "polynet/rational.hpp"

namespace polynet {

// Sparse d-variate polynomial: a finite map from multi-indices to exact
// rational coefficients. Zero coefficients are never stored; the zero
// polynomial is the empty map and has degree 0.
class Polynomial {
 public:
  using TermMap = std::map<MultiIndex, Rational>;

  explicit Polynomial(int dimension) : dimension_(dimension) {
    if (dimension < 1) throw std::invalid_argument("polynomial: dimension must be >= 1");
  }

  int dimension() const { return dimension_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  int degree() const {
    int out = 0;
    for (const auto& [index, coef] : terms_) out = std::max(out, index.degree());
    return out;
  }

  Rational coefficient(const MultiIndex& index) const {
    auto it = terms_.find(index);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void set_coefficient(const MultiIndex& index, const Rational& value) {
    check_index(index);
    if (value == 0)
      terms_.erase(index);
    else
      terms_[index] = value;
  }

  void add_term(const MultiIndex& index, const Rational& value) {
    check_index(index);
    auto [it, inserted] = terms_.try_emplace(index, value);
    if (!inserted) {
      it->second += value;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Polynomial& operator+=(const Polynomial& other) {
    if (other.dimension_ != dimension_)
      throw std::invalid_argument("polynomial: dimension mismatch");
    for (const auto& [index, coef] : other.terms_) add_term(index, coef);
    return *this;
  }

  Polynomial& operator-=(const Polynomial& other) {
    if (other.dimension_ != dimension_)
      throw std::invalid_argument("polynomial: dimension mismatch");
    for (const auto& [index, coef] : other.terms_) add_term(index, -coef);
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.dimension_ == b.dimension_ && a.terms_ == b.terms_;
  }

  void scale(const Rational& factor) {
    if (factor == 0) {
      terms_.clear();
      return;
    }
    for (auto& [index, coef] : terms_) coef *= factor;
  }

  // Exact evaluation: Sum c_r * x^r, no rounding anywhere.
  Rational evaluate(std::span<const Rational> x) const {
    if (static_cast<int>(x.size()) != dimension_)
      throw std::invalid_argument("polynomial: point dimension mismatch");
    Rational out(0);
    for (const auto& [index, coef] : terms_) {
      Rational term = coef;
      for (int i = 0; i < dimension_; ++i) {
        int e = index[i];
        if (e > 0) term *= rational_pow(x[static_cast<std::size_t>(i)],
                                        static_cast<unsigned long>(e));
      }
      out += term;
    }
    return out;
  }

  double evaluate(std::span<const double> x) const {
    if (static_cast<int>(x.size()) != dimension_)
      throw std::invalid_argument("polynomial: point dimension mismatch");
    double out = 0;
    for (const auto& [index, coef] : terms_) {
      double term = to_double(coef);
      for (int i = 0; i < dimension_; ++i)
        for (int e = 0; e < index[i]; ++e) term *= x[static_cast<std::size_t>(i)];
      out += term;
    }
    return out;
  }

 private:
  void check_index(const MultiIndex& index) const {
    if (index.dimension() != dimension_)
      throw std::invalid_argument("polynomial: multi-index length mismatch");
  }

  int dimension_;
  TermMap terms_;
};

// (w_1 x_1 + ... + w_d x_d)^r expanded through the multinomial theorem.
// Serves as the closed-form route the symbolic representation check sums over.
inline Polynomial expand_power_of_linear_form(const std::vector<Rational>& weights, int r) {
  const int d = static_cast<int>(weights.size());
  Polynomial out(d);
  if (r < 0) throw std::invalid_argument("expand_power_of_linear_form: negative degree");
  for (const MultiIndex& index : enumerate_monomials(d, r)) {
    Rational coef(multinomial_coefficient(index));
    for (int i = 0; i < d; ++i) {
      int e = index[i];
      if (e > 0) coef *= rational_pow(weights[static_cast<std::size_t>(i)],
                                      static_cast<unsigned long>(e));
    }
    if (coef != 0) out.add_term(index, coef);
  }
  return out;
}

}  // namespace polynet
