#pragma once

#include <algorithm>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "polynet/activations.hpp"
#include "polynet/rational.hpp"

namespace polynet {

enum class Activation { rho, sigma, relu };

inline std::string activation_name(Activation a) {
  switch (a) {
    case Activation::rho: return "rho";
    case Activation::sigma: return "sigma";
    case Activation::relu: return "relu";
  }
  throw std::invalid_argument("unknown activation");
}

inline Activation activation_from_name(const std::string& name) {
  if (name == "rho") return Activation::rho;
  if (name == "sigma") return Activation::sigma;
  if (name == "relu") return Activation::relu;
  throw std::invalid_argument("unknown activation '" + name + "'");
}

inline double activation_value(Activation a, double t) {
  switch (a) {
    case Activation::rho: return rho(t);
    case Activation::sigma: return sigma(t);
    case Activation::relu: return t > 0.0 ? t : 0.0;
  }
  throw std::invalid_argument("unknown activation");
}

inline Rational activation_value(Activation a, const Rational& t) {
  switch (a) {
    case Activation::rho: return rho_exact(t);
    case Activation::sigma: return sigma_exact(t);
    case Activation::relu: return sgn(t) > 0 ? t : Rational(0);
  }
  throw std::invalid_argument("unknown activation");
}

// One hidden layer: x -> Sum_j U_j act(V_j + Sum_i W_ji x_i).
// T is either Rational (exact mode) or double (float mode).
template <typename T>
struct ShallowNetwork {
  Activation activation = Activation::rho;
  int input_dim = 1;
  std::vector<T> output_weights;               // U, length P
  std::vector<T> biases;                       // V, length P
  std::vector<std::vector<T>> input_weights;   // W, P x d

  std::size_t width() const { return output_weights.size(); }

  void validate() const {
    const std::size_t p = output_weights.size();
    if (biases.size() != p || input_weights.size() != p)
      throw std::invalid_argument("network: U, V, W row counts differ");
    for (const auto& row : input_weights)
      if (static_cast<int>(row.size()) != input_dim)
        throw std::invalid_argument("network: weight row length != input dimension");
  }

  T evaluate(std::span<const T> x) const {
    if (static_cast<int>(x.size()) != input_dim)
      throw std::invalid_argument("network: point dimension mismatch");
    T out{};
    for (std::size_t j = 0; j < width(); ++j) {
      T pre = biases[j];
      for (int i = 0; i < input_dim; ++i)
        pre += input_weights[j][static_cast<std::size_t>(i)] * x[static_cast<std::size_t>(i)];
      out += output_weights[j] * activation_value(activation, pre);
    }
    return out;
  }

  T evaluate1(const T& x) const {
    std::span<const T> view(&x, 1);
    return evaluate(view);
  }
};

inline ShallowNetwork<double> to_float(const ShallowNetwork<Rational>& net) {
  ShallowNetwork<double> out;
  out.activation = net.activation;
  out.input_dim = net.input_dim;
  out.output_weights.reserve(net.width());
  out.biases.reserve(net.width());
  out.input_weights.reserve(net.width());
  for (std::size_t j = 0; j < net.width(); ++j) {
    out.output_weights.push_back(to_double(net.output_weights[j]));
    out.biases.push_back(to_double(net.biases[j]));
    std::vector<double> row;
    row.reserve(net.input_weights[j].size());
    for (const Rational& w : net.input_weights[j]) row.push_back(to_double(w));
    out.input_weights.push_back(std::move(row));
  }
  return out;
}

// JSON schema:
//   {"activation": "rho"|"sigma"|"relu", "mode": "exact"|"float",
//    "U": [...], "V": [...], "W": [[...],...]}
// Exact entries serialize as "num/den" strings; float entries as numbers.
// Extra keys (e.g. a "config" echo) are ignored on load.

inline nlohmann::json network_to_json(const ShallowNetwork<Rational>& net) {
  nlohmann::json j;
  j["activation"] = activation_name(net.activation);
  j["mode"] = "exact";
  j["U"] = nlohmann::json::array();
  j["V"] = nlohmann::json::array();
  j["W"] = nlohmann::json::array();
  for (std::size_t i = 0; i < net.width(); ++i) {
    j["U"].push_back(rational_to_string(net.output_weights[i]));
    j["V"].push_back(rational_to_string(net.biases[i]));
    nlohmann::json row = nlohmann::json::array();
    for (const Rational& w : net.input_weights[i]) row.push_back(rational_to_string(w));
    j["W"].push_back(row);
  }
  return j;
}

inline nlohmann::json network_to_json(const ShallowNetwork<double>& net) {
  nlohmann::json j;
  j["activation"] = activation_name(net.activation);
  j["mode"] = "float";
  j["U"] = net.output_weights;
  j["V"] = net.biases;
  j["W"] = net.input_weights;
  return j;
}

namespace detail {

inline Rational json_entry_to_rational(const nlohmann::json& v) {
  if (v.is_string()) return rational_from_string(v.get<std::string>());
  if (v.is_number_integer()) return Rational(static_cast<long>(v.get<long long>()));
  if (v.is_number()) return rational_from_double(v.get<double>());
  throw std::invalid_argument("network json: entry is neither string nor number");
}

inline double json_entry_to_double(const nlohmann::json& v) {
  if (v.is_string()) return to_double(rational_from_string(v.get<std::string>()));
  if (v.is_number()) return v.get<double>();
  throw std::invalid_argument("network json: entry is neither string nor number");
}

template <typename T, typename Conv>
ShallowNetwork<T> network_from_json_impl(const nlohmann::json& j, Conv conv) {
  ShallowNetwork<T> net;
  net.activation = activation_from_name(j.at("activation").get<std::string>());
  const auto& u = j.at("U");
  const auto& v = j.at("V");
  const auto& w = j.at("W");
  if (!u.is_array() || !v.is_array() || !w.is_array())
    throw std::invalid_argument("network json: U, V, W must be arrays");
  if (u.size() != v.size() || u.size() != w.size())
    throw std::invalid_argument("network json: U, V, W lengths differ");
  net.input_dim = w.empty() ? 1 : static_cast<int>(w.at(0).size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    net.output_weights.push_back(conv(u.at(i)));
    net.biases.push_back(conv(v.at(i)));
    std::vector<T> row;
    for (const auto& entry : w.at(i)) row.push_back(conv(entry));
    net.input_weights.push_back(std::move(row));
  }
  net.validate();
  return net;
}

}  // namespace detail

inline std::string network_mode(const nlohmann::json& j) {
  return j.value("mode", "float");
}

inline ShallowNetwork<Rational> network_from_json_exact(const nlohmann::json& j) {
  return detail::network_from_json_impl<Rational>(j, detail::json_entry_to_rational);
}

inline ShallowNetwork<double> network_from_json_float(const nlohmann::json& j) {
  return detail::network_from_json_impl<double>(j, detail::json_entry_to_double);
}

}  // namespace polynet
