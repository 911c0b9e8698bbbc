#pragma once

// Weighted-digraph view of an ordered permutation pair (pi, tau) on {1..n}:
// vertex set {1..n}, edge i -> pi(i) with weight w_pi, edge i -> tau(i) with
// weight w_tau, and weight w_pi + w_tau where the two coincide.  Two pairs
// are isomorphic exactly when a single relabeling f conjugates pi1 to pi2
// and tau1 to tau2 simultaneously; equivalence classes are enumerated as
// orbits of the second component under conjugation by the stabilizer of a
// canonical first component.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "omega5/perm.hpp"

namespace omega5 {

inline constexpr int kMaxPairDegree = 8;

struct PairGraph {
  Perm pi, tau;
  double w_pi = 1.0, w_tau = 2.0;  // distinct defaults keep shared edges (sum 3) unambiguous

  PairGraph(Perm p, Perm t, double wp = 1.0, double wt = 2.0)
      : pi(std::move(p)), tau(std::move(t)), w_pi(wp), w_tau(wt) {
    require_same_degree(pi, tau);
  }

  // edge multiset as (from, to) -> weight, 0-based vertices
  std::map<std::pair<int, int>, double> edges() const {
    std::map<std::pair<int, int>, double> e;
    for (int i = 0; i < pi.degree(); ++i) {
      e[{i, pi(i)}] += w_pi;
      e[{i, tau(i)}] += w_tau;
    }
    return e;
  }
};

namespace detail {

inline bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// the permutation acting as one cycle of p, identity elsewhere
inline Perm cycle_part(const Perm& p, const std::vector<int>& cyc) {
  std::vector<uint8_t> m(p.degree());
  std::iota(m.begin(), m.end(), uint8_t{0});
  for (size_t i = 0; i < cyc.size(); ++i) m[cyc[i]] = static_cast<uint8_t>(cyc[(i + 1) % cyc.size()]);
  return Perm(std::move(m));
}

inline void dedup(std::vector<Perm>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace detail

// exact centralizer {f : f p f^-1 = p}, sorted.  Closed-form shapes are used
// where they are valid; anything else falls back to brute force (degree <= 8).
// The closed forms:
//   single n-cycle                    -> powers of p
//   two cycles of distinct lengths    -> products of powers of the two cycles
//   one k-cycle plus fixed points     -> powers of the cycle times the
//                                        symmetric group on the fixed points
// Repeated cycle lengths admit extra symmetry (cycles of equal length can be
// swapped), so those shapes take the brute-force path.
inline std::vector<Perm> stabilizer(const Perm& p) {
  const int n = p.degree();
  auto cycs = cycles_of(p);
  const int fixed = n - static_cast<int>([&] {
                      size_t s = 0;
                      for (auto& c : cycs) s += c.size();
                      return s;
                    }());

  std::vector<Perm> out;
  if (cycs.size() == 1 && fixed == 0) {
    Perm q = Perm::identity(n);
    for (size_t k = 0; k < cycs[0].size(); ++k) {
      out.push_back(q);
      q = compose(p, q);
    }
    detail::dedup(out);
    return out;
  }
  if (cycs.size() == 2 && fixed == 0 && cycs[0].size() != cycs[1].size()) {
    Perm a = detail::cycle_part(p, cycs[0]), b = detail::cycle_part(p, cycs[1]);
    Perm qa = Perm::identity(n);
    for (size_t i = 0; i < cycs[0].size(); ++i) {
      Perm qb = qa;
      for (size_t j = 0; j < cycs[1].size(); ++j) {
        out.push_back(qb);
        qb = compose(b, qb);
      }
      qa = compose(a, qa);
    }
    detail::dedup(out);
    return out;
  }
  if (cycs.size() == 1 && fixed > 0) {
    std::vector<int> fixed_pts;
    for (int i = 0; i < n; ++i)
      if (p(i) == i) fixed_pts.push_back(i);
    std::vector<int> img(fixed_pts.begin(), fixed_pts.end());
    Perm q = Perm::identity(n);
    for (size_t k = 0; k < cycs[0].size(); ++k) {
      std::sort(img.begin(), img.end());
      do {
        std::vector<uint8_t> m = q.images();
        for (size_t i = 0; i < fixed_pts.size(); ++i) m[fixed_pts[i]] = static_cast<uint8_t>(img[i]);
        out.emplace_back(std::move(m));
      } while (std::next_permutation(img.begin(), img.end()));
      q = compose(detail::cycle_part(p, cycs[0]), q);
    }
    detail::dedup(out);
    return out;
  }

  if (n > kMaxPairDegree) throw std::invalid_argument("stabilizer: degree too large for brute force");
  for (const Perm& f : all_permutations(n))
    if (conjugate(f, p) == p) out.push_back(f);
  return out;
}

// witness f with f pi1 f^-1 = pi2 and f tau1 f^-1 = tau2, if any.
// Search space: one transporter g (aligning pi1 to pi2 cycle by cycle)
// composed with the stabilizer of pi2.
inline std::optional<Perm> pair_isomorphic(const PairGraph& g1, const PairGraph& g2) {
  require_same_degree(g1.pi, g2.pi);
  if (g1.w_pi != g2.w_pi || g1.w_tau != g2.w_tau)
    throw std::invalid_argument("pair_isomorphic: weight mismatch");
  if (cycle_type(g1.pi) != cycle_type(g2.pi) || cycle_type(g1.tau) != cycle_type(g2.tau))
    return std::nullopt;

  // transporter: map cycles of pi1 onto equal-length cycles of pi2 in order.
  // grouping both by length and pairing them up gives one valid g; all
  // solutions of f pi1 f^-1 = pi2 are then s*g for s in stabilizer(pi2).
  const int n = g1.pi.degree();
  auto build_full = [&](const Perm& p) {
    auto cycs = cycles_of(p);
    for (int i = 0; i < n; ++i)
      if (p(i) == i) cycs.push_back({i});
    std::stable_sort(cycs.begin(), cycs.end(),
                     [](const auto& a, const auto& b) { return a.size() > b.size(); });
    return cycs;
  };
  auto c1 = build_full(g1.pi), c2 = build_full(g2.pi);
  std::vector<uint8_t> m(n);
  for (size_t c = 0; c < c1.size(); ++c)
    for (size_t i = 0; i < c1[c].size(); ++i) m[c1[c][i]] = static_cast<uint8_t>(c2[c][i]);
  Perm g(std::move(m));

  for (const Perm& s : stabilizer(g2.pi)) {
    Perm f = compose(s, g);
    if (conjugate(f, g1.pi) == g2.pi && conjugate(f, g1.tau) == g2.tau) return f;
  }
  return std::nullopt;
}

// canonical representative of a cycle type: consecutive labels, parts in the
// given (descending) order, e.g. (3,2) -> (1 2 3)(4 5)
inline Perm canonical_of_type(int n, const CycleType& ct) {
  CycleType parts = ct;
  std::sort(parts.begin(), parts.end(), std::greater<>());
  std::vector<std::vector<int>> cycles;
  int next = 1;
  for (int k : parts) {
    std::vector<int> cyc;
    for (int i = 0; i < k; ++i) cyc.push_back(next + i);
    next += k;
    if (k > 1) cycles.push_back(std::move(cyc));
  }
  if (next != n + 1) throw std::invalid_argument("cycle type does not sum to n");
  return Perm::from_cycles(n, cycles);
}

// O_beta = {f beta f^-1 : f in stabilizer(pi)}, sorted
inline std::vector<Perm> orbit_of_second(const Perm& pi, const Perm& beta) {
  require_same_degree(pi, beta);
  std::vector<Perm> orb;
  for (const Perm& f : stabilizer(pi)) orb.push_back(conjugate(f, beta));
  detail::dedup(orb);
  return orb;
}

struct PairClass {
  Perm pi;                  // canonical first component
  Perm representative;      // lex-smallest orbit member
  std::vector<Perm> orbit;  // all second components in the class, sorted
  int orbit_size = 0;
  int product_trace = 0;    // tr(P_beta * P_pi) = fixed points of pi∘beta, constant on the class
};

// classes of ordered pairs (ct1-type, ct2-type) under simultaneous conjugation:
// fix pi canonical of ct1, partition {beta : type ct2} into stabilizer orbits
inline std::vector<PairClass> enumerate_pair_classes(const CycleType& ct1, const CycleType& ct2, int n) {
  if (n > kMaxPairDegree) throw std::invalid_argument("enumerate_pair_classes: degree too large");
  Perm pi = canonical_of_type(n, ct1);
  auto stab = stabilizer(pi);
  std::vector<PairClass> out;
  std::set<Perm> seen;
  for (const Perm& beta : enumerate_by_cycle_type(n, ct2)) {
    if (seen.count(beta)) continue;
    PairClass cls;
    cls.pi = pi;
    for (const Perm& f : stab) cls.orbit.push_back(conjugate(f, beta));
    detail::dedup(cls.orbit);
    for (const Perm& b : cls.orbit) seen.insert(b);
    cls.representative = cls.orbit.front();
    cls.orbit_size = static_cast<int>(cls.orbit.size());
    cls.product_trace = fixed_point_count(compose(pi, cls.representative));
    out.push_back(std::move(cls));
  }
  return out;  // ordered by lexicographic first appearance of beta
}

// closed-form class counts where a formula applies:
//  (a) both types a single n-cycle, n prime:   n + ((n-1)! - (n-1))/n - 1
//  (b) first type a single n-cycle, n prime, second type anything whose
//      class avoids <pi> (i.e. neither (n) nor all-1s):   |class of beta| / n
//  (c) both types (k1)+(k2), k1 != k2, both prime, n = k1 + k2:
//      (k1-1)(k2-1) + (k1-1)k + (k2-1)l + m  with
//      k = ((k2-1)! - (k2-1))/k2,  l = ((k1-1)! - (k1-1))/k1,
//      m = (n!/(k1 k2) - (k1-1)(k2-1) - k2(k1-1)k - k1(k2-1)l) / (k1 k2)
inline std::optional<uint64_t> class_count_formula(const CycleType& ct1, const CycleType& ct2, int n) {
  auto sorted = [](CycleType ct) {
    std::sort(ct.begin(), ct.end(), std::greater<>());
    return ct;
  };
  CycleType a = sorted(ct1), b = sorted(ct2);
  auto factorial = [](int v) {
    uint64_t r = 1;
    for (int i = 2; i <= v; ++i) r *= static_cast<uint64_t>(i);
    return r;
  };

  if (a == CycleType{n} && detail::is_prime(n)) {
    if (b == CycleType{n}) {
      uint64_t k = (factorial(n - 1) - static_cast<uint64_t>(n - 1)) / n;
      return static_cast<uint64_t>(n) + k - 1;
    }
    bool all_ones = true;
    for (int part : b) all_ones = all_ones && part == 1;
    if (!all_ones) return conjugacy_class_size(n, b) / n;  // every orbit has full size n
    return std::nullopt;
  }

  if (a.size() == 2 && a == b && a[0] + a[1] == n && a[0] != a[1] &&
      detail::is_prime(a[0]) && detail::is_prime(a[1])) {
    uint64_t k1 = a[0], k2 = a[1];
    uint64_t k = (factorial(static_cast<int>(k2) - 1) - (k2 - 1)) / k2;
    uint64_t l = (factorial(static_cast<int>(k1) - 1) - (k1 - 1)) / k1;
    uint64_t m = (factorial(n) / (k1 * k2) - (k1 - 1) * (k2 - 1) - k2 * (k1 - 1) * k -
                  k1 * (k2 - 1) * l) /
                 (k1 * k2);
    return (k1 - 1) * (k2 - 1) + (k1 - 1) * k + (k2 - 1) * l + m;
  }
  return std::nullopt;
}

// the 17 ordered representative pairs over the three derangement type
// combinations at degree 5, in row order (5)x(5), (5)x(3,2), (3,2)x(3,2)
inline std::vector<std::pair<Perm, Perm>> table1_representatives() {
  Perm five = Perm::from_cycles(5, {{1, 2, 3, 4, 5}});
  Perm tt = Perm::from_cycles(5, {{1, 2, 3}, {4, 5}});
  std::vector<std::pair<Perm, Perm>> out;
  for (int k = 1; k <= 4; ++k) out.emplace_back(five, power(five, k));
  for (auto cycles : {std::vector<std::vector<int>>{{1, 2, 3, 5, 4}},
                      {{1, 2, 4, 5, 3}},
                      {{1, 2, 5, 4, 3}},
                      {{1, 3, 5, 4, 2}}})
    out.emplace_back(five, Perm::from_cycles(5, cycles));
  for (auto cycles : {std::vector<std::vector<int>>{{1, 2, 3}, {4, 5}},
                      {{1, 2, 4}, {3, 5}},
                      {{1, 3, 2}, {4, 5}},
                      {{1, 4, 2}, {3, 5}}})
    out.emplace_back(five, Perm::from_cycles(5, cycles));
  out.emplace_back(tt, tt);
  out.emplace_back(tt, power(tt, 5));  // the inverse: order of tt is 6
  for (auto cycles : {std::vector<std::vector<int>>{{1, 2, 4}, {3, 5}},
                      {{1, 4, 2}, {3, 5}},
                      {{1, 4, 5}, {2, 3}}})
    out.emplace_back(tt, Perm::from_cycles(5, cycles));
  return out;
}

// achievable traces of P_beta * P_pi over all ordered pairs with the given
// derangement types at degree 5 (one evaluation per class suffices)
inline std::set<int> trace_product_set(const CycleType& ct1, const CycleType& ct2) {
  for (const CycleType* ct : {&ct1, &ct2}) {
    bool derangement_type = !ct->empty();
    int sum = 0;
    for (int part : *ct) {
      derangement_type = derangement_type && part >= 2;
      sum += part;
    }
    if (!derangement_type || sum != 5) throw std::invalid_argument("trace_product_set: need degree-5 derangement types");
  }
  std::set<int> traces;
  for (const PairClass& cls : enumerate_pair_classes(ct1, ct2, 5)) traces.insert(cls.product_trace);
  return traces;
}

}  // namespace omega5
