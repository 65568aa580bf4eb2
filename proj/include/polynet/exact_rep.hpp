#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "polynet/linsolve.hpp"
#include "polynet/multi_index.hpp"
#include "polynet/network.hpp"
#include "polynet/polynomial.hpp"
#include "polynet/rng.hpp"

namespace polynet {

// Exact compilation of polynomials on [0,1]^d into shallow rho-networks.
//
// A degree-r slice (r >= 2) becomes one block of N+1 units, N = C(r+d-1,d-1):
// unit j has bias r-1, input weights (b_j^{(r+1)^{i-1}})_i and output weight
// u_j, where the u_j solve a generalized Vandermonde system over the exact
// rationals. The exponents a_i reach r(r+1)^{d-1}, so the matrix entries
// b_j^{a_i} are far below float resolution; exact arithmetic is not an
// optimization here, it is the only way the construction works at all.
// Degree 0 and 1 terms are width-1 units on the identity pieces of rho.

// Injective code of a degree-r multi-index: digits base r+1.
inline long long exponent_code(const MultiIndex& index, int r) {
  if (index.degree() != r)
    throw std::invalid_argument("exponent_code: multi-index degree mismatch");
  long long code = 0;
  long long place = 1;
  for (int i = 0; i < index.dimension(); ++i) {
    code += index[i] * place;
    place *= (r + 1);
  }
  return code;
}

// N+1 pairwise distinct rational nodes b_j = (j+1) / ((N+1) d), strictly
// increasing inside (0, 1/d].
inline std::vector<Rational> choose_nodes(int N, int d) {
  if (N < 1) throw std::invalid_argument("choose_nodes: need at least two nodes");
  if (d < 1) throw std::invalid_argument("choose_nodes: dimension must be >= 1");
  std::vector<Rational> nodes;
  nodes.reserve(static_cast<std::size_t>(N) + 1);
  for (int j = 0; j <= N; ++j)
    nodes.push_back(make_rational(j + 1, static_cast<long>(N + 1) * d));
  return nodes;
}

struct DegreeBlockPlan {
  int degree = 0;      // r
  int dimension = 0;   // d
  int count = 0;       // N = C(r+d-1, d-1)
  std::vector<MultiIndex> monomials;   // lexicographic slice order, size N
  std::vector<long long> exponents;    // ascending, exponents[0] = 0, size N+1
  std::vector<Rational> nodes;         // b_0 < ... < b_N
  std::vector<Rational> solution;      // u_0 ... u_N
  Rational determinant;                // det [b_j^{a_i}], ascending rows
};

// Solves the block system: sum_j u_j = 0 and, for each degree-r monomial k,
// sum_j u_j b_j^{a_k} = c_k / multinomial(k). Rows are ordered by ascending
// exponent so the determinant is evaluated in the canonical orientation.
//
// Internally each row is scaled by D^{a_i}, D = (N+1)d, which turns the
// matrix into the integer generalized Vandermonde [(j+1)^{a_i}] and lets
// fraction-free Bareiss elimination run on big integers.
inline DegreeBlockPlan solve_degree_block(const std::vector<Rational>& coefficients,
                                          int r, int d) {
  if (r < 2) throw std::invalid_argument("solve_degree_block: degree must be >= 2");
  DegreeBlockPlan plan;
  plan.degree = r;
  plan.dimension = d;
  plan.monomials = enumerate_monomials(d, r);
  plan.count = static_cast<int>(plan.monomials.size());
  const int N = plan.count;
  if (static_cast<int>(coefficients.size()) != N)
    throw std::invalid_argument("solve_degree_block: coefficient count != monomial count");
  plan.nodes = choose_nodes(N, d);

  struct Row {
    long long exponent;
    Rational rhs;
  };
  std::vector<Row> rows;
  rows.reserve(static_cast<std::size_t>(N) + 1);
  rows.push_back({0, Rational(0)});
  for (int k = 0; k < N; ++k) {
    const MultiIndex& index = plan.monomials[static_cast<std::size_t>(k)];
    rows.push_back({exponent_code(index, r),
                    coefficients[static_cast<std::size_t>(k)] /
                        Rational(multinomial_coefficient(index))});
  }
  std::sort(rows.begin() + 1, rows.end(),
            [](const Row& a, const Row& b) { return a.exponent < b.exponent; });
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i].exponent <= rows[i - 1].exponent)
      throw internal_error("solve_degree_block: exponent codes not distinct");
    plan.exponents.push_back(rows[i - 1].exponent);
  }
  plan.exponents.push_back(rows.back().exponent);

  // Row scaling: b_j^a = (j+1)^a / D^a, so row i times D^{a_i} has integer
  // entries (j+1)^{a_i}. The common rhs denominator scales the solution.
  const mpz_class D(static_cast<long>(N + 1) * d);
  std::vector<std::vector<mpz_class>> matrix(static_cast<std::size_t>(N) + 1);
  std::vector<Rational> scaled_rhs(static_cast<std::size_t>(N) + 1);
  mpz_class rhs_denominator(1);
  for (int i = 0; i <= N; ++i) {
    const unsigned long a = static_cast<unsigned long>(rows[static_cast<std::size_t>(i)].exponent);
    auto& row = matrix[static_cast<std::size_t>(i)];
    row.reserve(static_cast<std::size_t>(N) + 1);
    for (int j = 0; j <= N; ++j) row.push_back(integer_pow(mpz_class(j + 1), a));
    scaled_rhs[static_cast<std::size_t>(i)] =
        rows[static_cast<std::size_t>(i)].rhs * Rational(integer_pow(D, a));
    mpz_lcm(rhs_denominator.get_mpz_t(), rhs_denominator.get_mpz_t(),
            mpq_denref(scaled_rhs[static_cast<std::size_t>(i)].get_mpq_t()));
  }
  std::vector<mpz_class> integer_rhs(static_cast<std::size_t>(N) + 1);
  for (int i = 0; i <= N; ++i) {
    Rational scaled = scaled_rhs[static_cast<std::size_t>(i)] * Rational(rhs_denominator);
    integer_rhs[static_cast<std::size_t>(i)] = rational_to_integer(scaled);
  }

  IntegerBareissSolve solved = solve_integer_bareiss(std::move(matrix), std::move(integer_rhs));
  plan.solution.reserve(static_cast<std::size_t>(N) + 1);
  for (Rational& v : solved.solution)
    plan.solution.push_back(v / Rational(rhs_denominator));

  // det of the scaled integer matrix is det([b_j^{a_i}]) * D^{sum a_i}.
  long long exponent_sum = 0;
  for (long long a : plan.exponents) exponent_sum += a;
  plan.determinant =
      Rational(solved.determinant) / Rational(integer_pow(D, static_cast<unsigned long>(exponent_sum)));
  if (sgn(plan.determinant) <= 0)
    throw internal_error("solve_degree_block: generalized Vandermonde determinant not positive");

  Rational sum(0);
  for (const Rational& u : plan.solution) sum += u;
  if (sum != 0) throw internal_error("solve_degree_block: solution does not sum to zero");
  return plan;
}

inline ShallowNetwork<Rational> block_to_network(const DegreeBlockPlan& plan) {
  ShallowNetwork<Rational> net;
  net.activation = Activation::rho;
  net.input_dim = plan.dimension;
  const int N = plan.count;
  for (int j = 0; j <= N; ++j) {
    net.output_weights.push_back(plan.solution[static_cast<std::size_t>(j)]);
    net.biases.push_back(Rational(plan.degree - 1));
    std::vector<Rational> row;
    row.reserve(static_cast<std::size_t>(plan.dimension));
    unsigned long place = 1;
    for (int i = 0; i < plan.dimension; ++i) {
      row.push_back(rational_pow(plan.nodes[static_cast<std::size_t>(j)], place));
      place *= static_cast<unsigned long>(plan.degree + 1);
    }
    net.input_weights.push_back(std::move(row));
  }
  return net;
}

// Shallow rho-network of width N+1 that equals the degree-r slice
// sum_k c_k x^{r_k} exactly on [0,1]^d.
inline ShallowNetwork<Rational> represent_monomial_block(const std::vector<Rational>& coefficients,
                                                         int r, int d) {
  return block_to_network(solve_degree_block(coefficients, r, d));
}

struct PolynomialRepresentation {
  ShallowNetwork<Rational> network;
  std::vector<DegreeBlockPlan> blocks;  // one per represented degree >= 2
};

// Compiles a full polynomial: one width-1 unit for a nonzero constant
// (rho(1) = 1), one width-1 unit per nonzero linear term (rho(x_i) = x_i on
// [0,1]), and one Vandermonde block per degree >= 2 with a nonzero slice.
inline PolynomialRepresentation represent_polynomial_with_plans(const Polynomial& poly) {
  const int d = poly.dimension();
  PolynomialRepresentation out;
  ShallowNetwork<Rational>& net = out.network;
  net.activation = Activation::rho;
  net.input_dim = d;

  const Rational constant = poly.coefficient(MultiIndex(std::vector<int>(static_cast<std::size_t>(d), 0)));
  if (constant != 0) {
    net.output_weights.push_back(constant);
    net.biases.push_back(Rational(1));
    net.input_weights.emplace_back(static_cast<std::size_t>(d), Rational(0));
  }
  for (int i = 0; i < d; ++i) {
    std::vector<int> e(static_cast<std::size_t>(d), 0);
    e[static_cast<std::size_t>(i)] = 1;
    const Rational c = poly.coefficient(MultiIndex(e));
    if (c == 0) continue;
    net.output_weights.push_back(c);
    net.biases.push_back(Rational(0));
    std::vector<Rational> row(static_cast<std::size_t>(d), Rational(0));
    row[static_cast<std::size_t>(i)] = 1;
    net.input_weights.push_back(std::move(row));
  }

  for (int r = 2; r <= poly.degree(); ++r) {
    const std::vector<MultiIndex> slice = enumerate_monomials(d, r);
    std::vector<Rational> coefficients;
    coefficients.reserve(slice.size());
    bool any = false;
    for (const MultiIndex& index : slice) {
      coefficients.push_back(poly.coefficient(index));
      any = any || coefficients.back() != 0;
    }
    if (!any) continue;
    DegreeBlockPlan plan = solve_degree_block(coefficients, r, d);
    ShallowNetwork<Rational> block = block_to_network(plan);
    out.blocks.push_back(std::move(plan));
    for (std::size_t j = 0; j < block.width(); ++j) {
      net.output_weights.push_back(std::move(block.output_weights[j]));
      net.biases.push_back(std::move(block.biases[j]));
      net.input_weights.push_back(std::move(block.input_weights[j]));
    }
  }
  return out;
}

inline ShallowNetwork<Rational> represent_polynomial(const Polynomial& poly) {
  return represent_polynomial_with_plans(poly).network;
}

struct WidthBound {
  long long bound;        // 2 (R+d)^d
  long long exact_count;  // d + 1 + sum_{r=2}^R [C(r+d-1,d-1) + 1]
};

inline WidthBound width_bound(int R, int d) {
  if (R < 0 || d < 1) throw std::invalid_argument("width_bound: need R >= 0, d >= 1");
  long long bound = 2;
  for (int i = 0; i < d; ++i) bound *= (R + d);
  long long count = d + 1;
  for (int r = 2; r <= R; ++r) count += binomial(r + d - 1, d - 1) + 1;
  return {bound, count};
}

// Symbolic reconstruction: if every unit has integer bias v >= 0 and
// non-negative weights with row sum <= 1, its preactivation stays inside
// [v, v+1] on [0,1]^d, where rho is the single piece t -> (t-v)^{v+1} + v.
// The unit then contributes u * [(w.x)^{v+1} + v] as a polynomial.
inline std::optional<Polynomial> network_to_polynomial(const ShallowNetwork<Rational>& net) {
  if (net.activation != Activation::rho) return std::nullopt;
  Polynomial out(net.input_dim);
  for (std::size_t j = 0; j < net.width(); ++j) {
    const Rational& bias = net.biases[j];
    if (sgn(bias) < 0 || bias.get_den() != 1) return std::nullopt;
    Rational weight_sum(0);
    for (const Rational& w : net.input_weights[j]) {
      if (sgn(w) < 0) return std::nullopt;
      weight_sum += w;
    }
    if (weight_sum > 1) return std::nullopt;
    const long long v = to_longlong(bias.get_num());
    Polynomial unit = expand_power_of_linear_form(net.input_weights[j],
                                                  static_cast<int>(v + 1));
    unit.scale(net.output_weights[j]);
    out += unit;
    if (v != 0) {
      MultiIndex constant(std::vector<int>(static_cast<std::size_t>(net.input_dim), 0));
      out.add_term(constant, net.output_weights[j] * Rational(static_cast<long>(v)));
    }
  }
  return out;
}

struct RepresentationReport {
  bool pointwise_exact = false;
  bool symbolic_applicable = false;
  bool symbolic_exact = false;
  std::size_t points_checked = 0;
  Rational max_discrepancy;             // 0 iff pointwise_exact
  std::vector<Rational> witness;        // first mismatching point, if any
  Polynomial symbolic_difference;       // expansion minus target
  RepresentationReport() : symbolic_difference(1) {}
  bool exact() const { return pointwise_exact && (!symbolic_applicable || symbolic_exact); }
};

// Checks network == polynomial two independent ways: exact evaluation at
// all corners of [0,1]^d plus pseudo-random rational interior points, and
// full symbolic expansion of every unit.
inline RepresentationReport verify_exact_representation(const Polynomial& poly,
                                                        const ShallowNetwork<Rational>& net,
                                                        int trials, std::uint64_t seed) {
  if (net.input_dim != poly.dimension())
    throw std::invalid_argument("verify: network/polynomial dimension mismatch");
  const int d = poly.dimension();
  RepresentationReport report;
  report.pointwise_exact = true;
  report.max_discrepancy = 0;

  auto check_point = [&](const std::vector<Rational>& x) {
    const Rational lhs = net.evaluate(std::span<const Rational>(x));
    const Rational rhs = poly.evaluate(std::span<const Rational>(x));
    ++report.points_checked;
    Rational gap = abs(lhs - rhs);
    if (gap != 0) {
      if (report.pointwise_exact) report.witness = x;
      report.pointwise_exact = false;
      if (gap > report.max_discrepancy) report.max_discrepancy = gap;
    }
  };

  // All 2^d corners.
  for (std::uint64_t mask = 0; mask < (1ULL << d); ++mask) {
    std::vector<Rational> corner;
    corner.reserve(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) corner.push_back(Rational((mask >> i) & 1U));
    check_point(corner);
  }
  RandomStream stream = named_stream(seed, "verify-points");
  for (int t = 0; t < trials; ++t) {
    std::vector<Rational> x;
    x.reserve(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) x.push_back(stream.uniform_rational(997));
    check_point(x);
  }

  std::optional<Polynomial> expansion = network_to_polynomial(net);
  report.symbolic_applicable = expansion.has_value();
  if (expansion) {
    report.symbolic_difference = *expansion - poly;
    report.symbolic_exact = report.symbolic_difference.is_zero();
  }
  return report;
}

// Rescales a shallow ReLU network into a rho-network that agrees with it
// exactly on [0,1]^d: positive homogeneity moves each unit's preactivation
// into [-1, 1], where rho is the ReLU.
template <typename T>
ShallowNetwork<T> relu_to_rho(const ShallowNetwork<T>& net) {
  using std::abs;
  if (net.activation != Activation::relu)
    throw std::invalid_argument("relu_to_rho: input network must use relu");
  ShallowNetwork<T> out = net;
  out.activation = Activation::rho;
  for (std::size_t j = 0; j < net.width(); ++j) {
    T reach = abs(net.biases[j]);
    for (const T& w : net.input_weights[j]) reach += abs(w);
    if (reach <= T(1)) continue;  // lambda = 1, unit already in range
    out.biases[j] = net.biases[j] / reach;
    for (T& w : out.input_weights[j]) w /= reach;
    out.output_weights[j] = net.output_weights[j] * reach;
  }
  return out;
}

}  // namespace polynet
