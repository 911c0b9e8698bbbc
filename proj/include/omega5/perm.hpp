#pragma once

// Permutation algebra on {1..n}: composition, cycle structure, conjugation,
// enumeration by cycle type, and the conjugacy-class size formula.
//
// Internal storage is 0-based one-line notation; all text I/O is 1-based.
// Convention: compose(p,q)(i) = p(q(i)).  With row matrices P[i][p(i)] = 1
// this gives P_p * P_q = P_of(compose(q,p)) and tr(P_q * P_p) equals the
// number of fixed points of compose(p,q).

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace omega5 {

// exhaustive enumeration guard: 10! is fine, beyond that is not desk-scale
inline constexpr int kMaxEnumDegree = 10;

using CycleType = std::vector<int>;  // parts sorted descending, sum = n

class Perm {
 public:
  Perm() = default;

  // 0-based one-line images; must be a bijection
  explicit Perm(std::vector<uint8_t> images) : map_(std::move(images)) {
    std::vector<bool> seen(map_.size(), false);
    for (uint8_t v : map_) {
      if (v >= map_.size() || seen[v]) throw std::invalid_argument("Perm: not a bijection");
      seen[v] = true;
    }
  }

  static Perm identity(int n) {
    std::vector<uint8_t> m(n);
    std::iota(m.begin(), m.end(), uint8_t{0});
    return Perm(std::move(m));
  }

  // 1-based one-line images, e.g. {2,3,1,5,4}
  static Perm from_one_line(const std::vector<int>& images) {
    std::vector<uint8_t> m(images.size());
    for (size_t i = 0; i < images.size(); ++i) {
      if (images[i] < 1 || images[i] > static_cast<int>(images.size()))
        throw std::invalid_argument("Perm: one-line value out of range");
      m[i] = static_cast<uint8_t>(images[i] - 1);
    }
    return Perm(std::move(m));
  }

  // 1-based cycles, e.g. {{1,2,3},{4,5}}; unlisted points are fixed
  static Perm from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
    std::vector<uint8_t> m(n);
    std::iota(m.begin(), m.end(), uint8_t{0});
    for (const auto& cyc : cycles)
      for (size_t i = 0; i < cyc.size(); ++i) {
        int a = cyc[i], b = cyc[(i + 1) % cyc.size()];
        if (a < 1 || a > n || b < 1 || b > n) throw std::invalid_argument("Perm: cycle label out of range");
        m[a - 1] = static_cast<uint8_t>(b - 1);
      }
    return Perm(std::move(m));
  }

  int degree() const { return static_cast<int>(map_.size()); }
  int operator()(int i) const { return map_[i]; }  // 0-based image

  bool operator==(const Perm& o) const { return map_ == o.map_; }
  bool operator!=(const Perm& o) const { return map_ != o.map_; }
  bool operator<(const Perm& o) const { return map_ < o.map_; }  // lex on one-line

  const std::vector<uint8_t>& images() const { return map_; }

 private:
  std::vector<uint8_t> map_;
};

inline void require_same_degree(const Perm& p, const Perm& q) {
  if (p.degree() != q.degree()) throw std::invalid_argument("degree mismatch");
}

// (p*q)(i) = p(q(i))
inline Perm compose(const Perm& p, const Perm& q) {
  require_same_degree(p, q);
  std::vector<uint8_t> m(p.degree());
  for (int i = 0; i < p.degree(); ++i) m[i] = static_cast<uint8_t>(p(q(i)));
  return Perm(std::move(m));
}

inline Perm inverse(const Perm& p) {
  std::vector<uint8_t> m(p.degree());
  for (int i = 0; i < p.degree(); ++i) m[p(i)] = static_cast<uint8_t>(i);
  return Perm(std::move(m));
}

// f p f^-1; relabels every cycle entry of p through f
inline Perm conjugate(const Perm& f, const Perm& p) {
  require_same_degree(f, p);
  std::vector<uint8_t> m(p.degree());
  for (int i = 0; i < p.degree(); ++i) m[f(i)] = static_cast<uint8_t>(f(p(i)));
  return Perm(std::move(m));
}

inline Perm power(const Perm& p, int k) {
  if (k < 0) throw std::invalid_argument("power: negative exponent");
  Perm r = Perm::identity(p.degree());
  for (int i = 0; i < k; ++i) r = compose(p, r);
  return r;
}

inline int fixed_point_count(const Perm& p) {
  int c = 0;
  for (int i = 0; i < p.degree(); ++i)
    if (p(i) == i) ++c;
  return c;
}

// nontrivial cycles, each rotated smallest-first, sorted by leading element (0-based labels)
inline std::vector<std::vector<int>> cycles_of(const Perm& p) {
  std::vector<bool> seen(p.degree(), false);
  std::vector<std::vector<int>> out;
  for (int i = 0; i < p.degree(); ++i) {
    if (seen[i] || p(i) == i) continue;
    std::vector<int> cyc;
    int j = i;
    while (!seen[j]) {
      seen[j] = true;
      cyc.push_back(j);
      j = p(j);
    }
    out.push_back(std::move(cyc));
  }
  return out;  // i ascending already orders cycles by smallest element
}

inline CycleType cycle_type(const Perm& p) {
  std::vector<bool> seen(p.degree(), false);
  CycleType parts;
  for (int i = 0; i < p.degree(); ++i) {
    if (seen[i]) continue;
    int len = 0, j = i;
    while (!seen[j]) {
      seen[j] = true;
      j = p(j);
      ++len;
    }
    parts.push_back(len);
  }
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return parts;
}

// n! / prod_over_distinct_lengths(m_i! * k_i^m_i) where length k_i occurs m_i times
inline uint64_t conjugacy_class_size(int n, const CycleType& ct) {
  if (std::accumulate(ct.begin(), ct.end(), 0) != n) throw std::invalid_argument("cycle type does not sum to n");
  uint64_t fact = 1;
  for (int i = 2; i <= n; ++i) fact *= static_cast<uint64_t>(i);
  std::map<int, int> mult;
  for (int k : ct) ++mult[k];
  uint64_t denom = 1;
  for (auto [k, m] : mult) {
    for (int i = 2; i <= m; ++i) denom *= static_cast<uint64_t>(i);
    for (int i = 0; i < m; ++i) denom *= static_cast<uint64_t>(k);
  }
  return fact / denom;
}

inline std::vector<Perm> all_permutations(int n) {
  if (n < 1 || n > kMaxEnumDegree) throw std::invalid_argument("all_permutations: degree out of range");
  std::vector<uint8_t> m(n);
  std::iota(m.begin(), m.end(), uint8_t{0});
  std::vector<Perm> out;
  do {
    out.emplace_back(m);
  } while (std::next_permutation(m.begin(), m.end()));
  return out;  // lexicographic by construction
}

inline std::vector<Perm> enumerate_by_cycle_type(int n, const CycleType& ct) {
  if (n < 1 || n > kMaxEnumDegree) throw std::invalid_argument("enumerate_by_cycle_type: degree out of range");
  CycleType want = ct;
  std::sort(want.begin(), want.end(), std::greater<>());
  if (std::accumulate(want.begin(), want.end(), 0) != n)
    throw std::invalid_argument("cycle type does not sum to n");
  std::vector<Perm> out;
  for (const Perm& p : all_permutations(n))
    if (cycle_type(p) == want) out.push_back(p);
  return out;
}

// fixed-point-free permutations (derangements), lexicographic
inline std::vector<Perm> trace_zero_permutations(int n) {
  if (n < 1 || n > kMaxEnumDegree) throw std::invalid_argument("trace_zero_permutations: degree out of range");
  std::vector<Perm> out;
  for (const Perm& p : all_permutations(n))
    if (fixed_point_count(p) == 0) out.push_back(p);
  return out;
}

// ---- text I/O: cycle notation "(1 2 3)(4 5)" and one-line "[2,3,1,5,4]" ----

inline std::string to_cycles(const Perm& p) {
  auto cycs = cycles_of(p);
  if (cycs.empty()) return "()";
  std::ostringstream os;
  for (const auto& cyc : cycs) {
    os << '(';
    for (size_t i = 0; i < cyc.size(); ++i) os << (i ? " " : "") << cyc[i] + 1;
    os << ')';
  }
  return os.str();
}

inline std::string to_one_line(const Perm& p) {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < p.degree(); ++i) os << (i ? "," : "") << p(i) + 1;
  os << ']';
  return os.str();
}

// parses either notation; cycle form needs the degree (labels may not cover {1..n})
inline std::optional<Perm> parse_perm(const std::string& text, int n = 0) {
  auto fail = std::optional<Perm>{};
  size_t i = 0;
  auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
  auto read_int = [&]() -> std::optional<int> {
    skip_ws();
    size_t s = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == s) return std::nullopt;
    return std::stoi(text.substr(s, i - s));
  };
  skip_ws();
  if (i < text.size() && text[i] == '[') {
    ++i;
    std::vector<int> ol;
    while (true) {
      auto v = read_int();
      if (!v) return fail;
      ol.push_back(*v);
      skip_ws();
      if (i < text.size() && text[i] == ',') { ++i; continue; }
      if (i < text.size() && text[i] == ']') { ++i; break; }
      return fail;
    }
    skip_ws();
    if (i != text.size()) return fail;
    try { return Perm::from_one_line(ol); } catch (const std::exception&) { return fail; }
  }
  if (i < text.size() && text[i] == '(') {
    std::vector<std::vector<int>> cycles;
    int maxlabel = 0;
    while (i < text.size() && text[i] == '(') {
      ++i;
      std::vector<int> cyc;
      while (true) {
        skip_ws();
        if (i < text.size() && text[i] == ')') { ++i; break; }
        auto v = read_int();
        if (!v) return fail;
        cyc.push_back(*v);
        maxlabel = std::max(maxlabel, *v);
      }
      if (!cyc.empty()) cycles.push_back(std::move(cyc));
      skip_ws();
    }
    if (i != text.size()) return fail;
    int deg = n > 0 ? n : maxlabel;
    if (deg == 0) return fail;  // "()" with unknown degree
    try { return Perm::from_cycles(deg, cycles); } catch (const std::exception&) { return fail; }
  }
  return fail;
}

}  // namespace omega5
