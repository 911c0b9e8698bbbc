#pragma once

// Doubly stochastic 5x5 matrices built as convex combinations of trace-zero
// (fixed-point-free) permutation matrices.  Matrix convention: row matrices,
// P[i][p(i)] = 1, so P_p * P_q = P_{compose(q, p)}.

#include <array>
#include <cmath>
#include <cstdint>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "omega5/perm.hpp"

namespace omega5 {

using Matrix5 = std::array<std::array<double, 5>, 5>;

inline constexpr double kDsTol = 1e-9;
inline constexpr double kWeightSumTol = 1e-12;

inline Matrix5 perm_matrix(const Perm& p) {
  if (p.degree() != 5) throw std::invalid_argument("perm_matrix: degree must be 5");
  Matrix5 m{};
  for (int i = 0; i < 5; ++i) m[i][p(i)] = 1.0;
  return m;
}

inline Matrix5 matmul(const Matrix5& a, const Matrix5& b) {
  Matrix5 c{};
  for (int i = 0; i < 5; ++i)
    for (int k = 0; k < 5; ++k)
      for (int j = 0; j < 5; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

inline Matrix5 matpow(const Matrix5& m, int k) {
  if (k < 1) throw std::invalid_argument("matpow: exponent must be positive");
  Matrix5 r = m;
  for (int i = 1; i < k; ++i) r = matmul(r, m);
  return r;
}

inline double trace(const Matrix5& m) {
  double t = 0;
  for (int i = 0; i < 5; ++i) t += m[i][i];
  return t;
}

inline bool is_doubly_stochastic(const Matrix5& m, double tol = kDsTol) {
  if (tol <= 0) throw std::invalid_argument("is_doubly_stochastic: tol must be positive");
  for (int i = 0; i < 5; ++i) {
    double row = 0, col = 0;
    for (int j = 0; j < 5; ++j) {
      if (m[i][j] < -tol) return false;
      row += m[i][j];
      col += m[j][i];
    }
    if (std::abs(row - 1.0) > tol || std::abs(col - 1.0) > tol) return false;
  }
  return true;
}

struct ConvexCombo {
  std::vector<Perm> support;
  std::vector<double> weights;

  ConvexCombo(std::vector<Perm> s, std::vector<double> w)
      : support(std::move(s)), weights(std::move(w)) {
    if (support.empty() || support.size() != weights.size())
      throw std::invalid_argument("ConvexCombo: support/weight size mismatch");
    std::set<Perm> distinct;
    double sum = 0;
    for (size_t i = 0; i < support.size(); ++i) {
      if (support[i].degree() != 5) throw std::invalid_argument("ConvexCombo: degree must be 5");
      if (fixed_point_count(support[i]) != 0)
        throw std::invalid_argument("ConvexCombo: support must be fixed-point-free");
      if (!distinct.insert(support[i]).second)
        throw std::invalid_argument("ConvexCombo: duplicate support member");
      if (!(weights[i] > 0)) throw std::invalid_argument("ConvexCombo: weights must be positive");
      sum += weights[i];
    }
    if (std::abs(sum - 1.0) > kWeightSumTol)
      throw std::invalid_argument("ConvexCombo: weights must sum to 1");
  }

  size_t size() const { return support.size(); }
};

inline Matrix5 to_matrix(const ConvexCombo& c) {
  Matrix5 m{};
  for (size_t a = 0; a < c.size(); ++a)
    for (int i = 0; i < 5; ++i) m[i][c.support[a](i)] += c.weights[a];
  return m;
}

inline double trace_power(const ConvexCombo& c, int k) {
  if (k < 1 || k > 5) throw std::invalid_argument("trace_power: k must be in 1..5");
  return trace(matpow(to_matrix(c), k));
}

// word expansion sum over ordered words (a_1..a_k) of w_{a_1}..w_{a_k} * fix(product);
// the matrix product P_{a_1}...P_{a_k} realizes the permutation a_k o ... o a_1
inline double trace_power_words(const ConvexCombo& c, int k) {
  if (k < 1 || k > 5) throw std::invalid_argument("trace_power_words: k must be in 1..5");
  double words = std::pow(static_cast<double>(c.size()), k);
  if (words > 2e6) throw std::invalid_argument("trace_power_words: word count too large");

  double total = 0;
  // depth-first over words, extending the running product one letter at a time
  std::vector<std::pair<Perm, double>> stack{{Perm::identity(5), 1.0}};
  std::vector<size_t> word;
  auto walk = [&](auto&& self) -> void {
    if (static_cast<int>(word.size()) == k) {
      total += stack.back().second * fixed_point_count(stack.back().first);
      return;
    }
    for (size_t a = 0; a < c.size(); ++a) {
      word.push_back(a);
      stack.emplace_back(compose(c.support[a], stack.back().first), stack.back().second * c.weights[a]);
      self(self);
      stack.pop_back();
      word.pop_back();
    }
  };
  walk(walk);
  return total;
}

// the 44 degree-5 derangements, lexicographic, cached
inline const std::vector<Perm>& derangements5() {
  static const std::vector<Perm> d = trace_zero_permutations(5);
  return d;
}

namespace detail {

// 53-bit mantissa draw in [0,1); fixed arithmetic keeps sampled output
// byte-identical across platforms for a given seed
inline double uniform01(std::mt19937_64& rng) { return (rng() >> 11) * 0x1.0p-53; }

}  // namespace detail

// uniform random support of the requested size over the 44 derangements
// (partial Fisher-Yates on indices), weights uniform on the simplex
// (sorted spacings of uniform draws)
inline ConvexCombo random_combo(int support_size, std::mt19937_64& rng) {
  const auto& all = derangements5();
  if (support_size < 1 || support_size > static_cast<int>(all.size()))
    throw std::invalid_argument("random_combo: support size out of range");

  std::vector<int> idx(all.size());
  std::iota(idx.begin(), idx.end(), 0);
  for (int i = 0; i < support_size; ++i) {
    size_t j = i + static_cast<size_t>(rng() % (idx.size() - i));
    std::swap(idx[i], idx[j]);
  }
  std::vector<Perm> support;
  for (int i = 0; i < support_size; ++i) support.push_back(all[idx[i]]);

  std::vector<double> weights;
  for (;;) {
    std::vector<double> cuts{0.0, 1.0};
    for (int i = 1; i < support_size; ++i) cuts.push_back(detail::uniform01(rng));
    std::sort(cuts.begin(), cuts.end());
    weights.clear();
    bool ok = true;
    for (size_t i = 1; i < cuts.size(); ++i) {
      double w = cuts[i] - cuts[i - 1];
      ok = ok && w > 1e-15;
      weights.push_back(w);
    }
    if (ok) break;  // re-draw on (measure-zero) degenerate spacings
  }
  return ConvexCombo(std::move(support), std::move(weights));
}

// 5 rows of 5 comma-separated entries
inline std::string matrix_csv(const Matrix5& m) {
  std::ostringstream out;
  out.precision(17);
  for (int i = 0; i < 5; ++i) {
    for (int j = 0; j < 5; ++j) out << (j ? "," : "") << m[i][j];
    out << '\n';
  }
  return out.str();
}

inline Matrix5 matrix_from_csv(const std::string& text) {
  Matrix5 m{};
  std::istringstream in(text);
  std::string line;
  int i = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (i >= 5) throw std::invalid_argument("matrix_from_csv: too many rows");
    std::istringstream row(line);
    std::string cell;
    int j = 0;
    while (std::getline(row, cell, ',')) {
      if (j >= 5) throw std::invalid_argument("matrix_from_csv: too many columns");
      m[i][j++] = std::stod(cell);
    }
    if (j != 5) throw std::invalid_argument("matrix_from_csv: need 5 columns");
    ++i;
  }
  if (i != 5) throw std::invalid_argument("matrix_from_csv: need 5 rows");
  return m;
}

}  // namespace omega5
