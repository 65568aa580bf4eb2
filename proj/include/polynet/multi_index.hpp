#pragma once

#include <compare>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace polynet {

// Exponent tuple (r_1,...,r_d) of a d-variate monomial x^r = x_1^{r_1}...x_d^{r_d}.
// The degree is the entry sum.
struct MultiIndex {
  std::vector<int> exponents;

  MultiIndex() = default;
  explicit MultiIndex(std::vector<int> e) : exponents(std::move(e)) {
    for (int v : exponents)
      if (v < 0) throw std::invalid_argument("multi-index: negative exponent");
  }

  int dimension() const { return static_cast<int>(exponents.size()); }
  int degree() const { return std::accumulate(exponents.begin(), exponents.end(), 0); }
  int operator[](int i) const { return exponents[static_cast<std::size_t>(i)]; }

  auto operator<=>(const MultiIndex&) const = default;
};

inline long long binomial(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  long long out = 1;
  for (long long i = 1; i <= k; ++i) {
    out = out * (n - k + i) / i;  // exact at every step
  }
  return out;
}

// All multi-indices of degree exactly r in d variables, in lexicographic
// order. The list has C(r+d-1, d-1) entries.
inline std::vector<MultiIndex> enumerate_monomials(int d, int r) {
  if (d < 1) throw std::invalid_argument("enumerate_monomials: dimension must be >= 1");
  if (r < 0) throw std::invalid_argument("enumerate_monomials: negative degree");
  std::vector<MultiIndex> out;
  std::vector<int> current(static_cast<std::size_t>(d), 0);
  auto recurse = [&](auto&& self, int position, int remaining) -> void {
    if (position == d - 1) {
      current[static_cast<std::size_t>(position)] = remaining;
      out.push_back(MultiIndex{current});
      return;
    }
    for (int e = 0; e <= remaining; ++e) {
      current[static_cast<std::size_t>(position)] = e;
      self(self, position + 1, remaining - e);
    }
  };
  recurse(recurse, 0, r);
  return out;
}

// r! / (r_1! ... r_d!) where r = degree. Exact; the guarded range is far
// beyond anything the representation pipeline constructs.
inline long long multinomial_coefficient(const MultiIndex& index) {
  if (index.degree() > 40)
    throw std::invalid_argument("multinomial_coefficient: degree too large for exact 64-bit value");
  long long out = 1;
  long long partial = 0;
  for (int e : index.exponents) {
    partial += e;
    out *= binomial(partial, e);
  }
  return out;
}

}  // namespace polynet
