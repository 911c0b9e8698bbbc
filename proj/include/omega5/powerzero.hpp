#pragma once

// Supports S of fixed-point-free degree-5 permutations for which every
// strictly positive convex combination A over S has tr(A^k) = 0.  Since all
// weights are positive, tr(A^k) = 0 holds exactly when every ordered k-word
// over S multiplies to a fixed-point-free permutation; the property is
// hereditary under taking subsets, which makes ascending-index growth from
// singletons enumerate every such support once.

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "omega5/dsmat.hpp"
#include "omega5/perm.hpp"

namespace omega5 {

struct ZeroPowerSupport {
  int k = 0;
  std::vector<Perm> support;  // sorted, set semantics

  friend bool operator==(const ZeroPowerSupport& a, const ZeroPowerSupport& b) {
    return a.k == b.k && a.support == b.support;
  }
};

inline bool support_is_zero_power(const std::vector<Perm>& support, int k) {
  if (support.empty()) throw std::invalid_argument("support_is_zero_power: empty support");
  if (k < 2 || k > 5) throw std::invalid_argument("support_is_zero_power: k must be in 2..5");
  for (const Perm& p : support) {
    if (p.degree() != 5) throw std::invalid_argument("support_is_zero_power: degree must be 5");
    if (fixed_point_count(p) != 0)
      throw std::invalid_argument("support_is_zero_power: support must be fixed-point-free");
  }
  // distinct products level by level; fix counts depend only on the product,
  // so collapsing equal prefixes loses nothing
  std::set<Perm> level{Perm::identity(5)};
  for (int depth = 0; depth < k; ++depth) {
    std::set<Perm> next;
    for (const Perm& q : level)
      for (const Perm& s : support) next.insert(compose(s, q));
    level = std::move(next);
  }
  for (const Perm& q : level)
    if (fixed_point_count(q) != 0) return false;
  return true;
}

// every inclusion-maximal zero-power support for the given k, sorted
inline std::vector<ZeroPowerSupport> maximal_zero_power_supports(int k) {
  if (k < 2 || k > 5) throw std::invalid_argument("maximal_zero_power_supports: k must be in 2..5");
  const auto& all = derangements5();
  const int n = static_cast<int>(all.size());

  std::vector<std::vector<int>> frontier, every;
  for (int i = 0; i < n; ++i)
    if (support_is_zero_power({all[i]}, k)) frontier.push_back({i});
  while (!frontier.empty()) {
    every.insert(every.end(), frontier.begin(), frontier.end());
    std::vector<std::vector<int>> next;
    for (const auto& s : frontier) {
      for (int j = s.back() + 1; j < n; ++j) {
        std::vector<int> t = s;
        t.push_back(j);
        std::vector<Perm> perms;
        for (int i : t) perms.push_back(all[i]);
        if (support_is_zero_power(perms, k)) next.push_back(std::move(t));
      }
    }
    frontier = std::move(next);
  }

  std::vector<ZeroPowerSupport> out;
  for (const auto& s : every) {
    bool extendable = false;
    for (int j = 0; j < n && !extendable; ++j) {
      if (std::binary_search(s.begin(), s.end(), j)) continue;
      std::vector<Perm> perms;
      for (int i : s) perms.push_back(all[i]);
      perms.push_back(all[j]);
      extendable = support_is_zero_power(perms, k);
    }
    if (extendable) continue;
    ZeroPowerSupport zp{k, {}};
    for (int i : s) zp.support.push_back(all[i]);
    std::sort(zp.support.begin(), zp.support.end());
    out.push_back(std::move(zp));
  }
  std::sort(out.begin(), out.end(),
            [](const ZeroPowerSupport& a, const ZeroPowerSupport& b) { return a.support < b.support; });
  return out;
}

// relabeling applied elementwise to a support set
inline std::vector<Perm> conjugate_support(const Perm& f, const std::vector<Perm>& support) {
  std::vector<Perm> out;
  for (const Perm& p : support) out.push_back(conjugate(f, p));
  std::sort(out.begin(), out.end());
  return out;
}

// witness relabeling carrying one support set onto another, if any
inline std::optional<Perm> supports_conjugate(const std::vector<Perm>& s1, const std::vector<Perm>& s2) {
  if (s1.size() != s2.size()) return std::nullopt;
  std::vector<Perm> want = s2;
  std::sort(want.begin(), want.end());
  for (const Perm& f : all_permutations(5))
    if (conjugate_support(f, s1) == want) return f;
  return std::nullopt;
}

// a size-3 support has square-zero structure when some relabeling sends one
// member to (1 2 3 4 5) and the other two into the 5-element conjugation
// orbit of (1 2 4 5 3) under powers of that cycle
inline bool matches_three_support_structure(const std::vector<Perm>& support) {
  if (support.size() != 3) return false;
  const Perm pi0 = Perm::from_cycles(5, {{1, 2, 3, 4, 5}});
  std::set<Perm> orbit;
  Perm beta = Perm::from_cycles(5, {{1, 2, 4, 5, 3}});
  Perm f = Perm::identity(5);
  for (int i = 0; i < 5; ++i) {
    orbit.insert(conjugate(f, beta));
    f = compose(pi0, f);
  }
  for (const Perm& g : all_permutations(5)) {
    auto image = conjugate_support(g, support);
    bool ok = false;
    for (size_t m = 0; m < 3 && !ok; ++m) {
      if (image[m] != pi0) continue;
      ok = true;
      for (size_t j = 0; j < 3; ++j)
        if (j != m && !orbit.count(image[j])) ok = false;
    }
    if (ok) return true;
  }
  return false;
}

struct ZeroPowerCensus {
  int k = 0;
  std::vector<ZeroPowerSupport> maximal;
  std::map<int, int> size_histogram;       // support size -> count
  std::set<CycleType> member_types;        // cycle types across all members
  bool largest_all_conjugate = false;      // all largest supports related by one relabeling orbit
};

inline ZeroPowerCensus census_zero_power(int k) {
  ZeroPowerCensus out;
  out.k = k;
  out.maximal = maximal_zero_power_supports(k);
  int largest = 0;
  for (const ZeroPowerSupport& s : out.maximal) {
    ++out.size_histogram[static_cast<int>(s.support.size())];
    for (const Perm& p : s.support) out.member_types.insert(cycle_type(p));
    largest = std::max(largest, static_cast<int>(s.support.size()));
  }
  out.largest_all_conjugate = true;
  const std::vector<Perm>* first = nullptr;
  for (const ZeroPowerSupport& s : out.maximal) {
    if (static_cast<int>(s.support.size()) != largest) continue;
    if (!first) {
      first = &s.support;
      continue;
    }
    if (!supports_conjugate(*first, s.support)) out.largest_all_conjugate = false;
  }
  return out;
}

}  // namespace omega5
