#pragma once

#include <initializer_list>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "bergman/special_functions.hpp"

namespace bergman {

// Tuple of non-negative integer exponents.
class MultiIndex {
 public:
  MultiIndex() = default;

  explicit MultiIndex(std::vector<int> exps) : exps_(std::move(exps)) {
    for (int e : exps_)
      if (e < 0) throw std::invalid_argument("MultiIndex: negative exponent");
  }

  MultiIndex(std::initializer_list<int> exps)
      : MultiIndex(std::vector<int>(exps)) {}

  static MultiIndex zeros(int n) { return MultiIndex(std::vector<int>(n, 0)); }

  int dimension() const { return static_cast<int>(exps_.size()); }

  int operator[](int i) const { return exps_[i]; }

  int total() const { return std::accumulate(exps_.begin(), exps_.end(), 0); }

  const std::vector<int>& exps() const { return exps_; }

  // log(gamma_1! ... gamma_n!)
  double logFactorialProduct() const {
    double s = 0.0;
    for (int e : exps_) s += logFactorial(e);
    return s;
  }

  MultiIndex operator+(const MultiIndex& o) const {
    auto v = exps_;
    for (size_t i = 0; i < v.size(); ++i) v[i] += o.exps_[i];
    return MultiIndex(std::move(v));
  }

  MultiIndex scaled(int c) const {
    auto v = exps_;
    for (int& e : v) e *= c;
    return MultiIndex(std::move(v));
  }

  // Componentwise subtraction; requires *this >= o.
  MultiIndex operator-(const MultiIndex& o) const {
    auto v = exps_;
    for (size_t i = 0; i < v.size(); ++i) {
      v[i] -= o.exps_[i];
      if (v[i] < 0) throw std::invalid_argument("MultiIndex: negative result");
    }
    return MultiIndex(std::move(v));
  }

  // Componentwise partial order.
  bool leq(const MultiIndex& o) const {
    for (size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] > o.exps_[i]) return false;
    return true;
  }

  bool operator==(const MultiIndex& o) const { return exps_ == o.exps_; }
  bool operator<(const MultiIndex& o) const { return exps_ < o.exps_; }

  std::vector<double> asReal(double scale = 1.0) const {
    std::vector<double> v(exps_.size());
    for (size_t i = 0; i < v.size(); ++i) v[i] = scale * exps_[i];
    return v;
  }

 private:
  std::vector<int> exps_;
};

// All multi-indices of dimension n with total degree <= maxTotal, in
// (degree, lexicographic) order. Deterministic enumeration order matters:
// sweep reductions and kernel sums follow it.
std::vector<MultiIndex> enumerateMultiIndices(int n, int maxTotal);

}  // namespace bergman
