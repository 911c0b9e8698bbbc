#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <random>
#include <set>

#include "omega5/pairgraph.hpp"

using namespace omega5;

namespace {

Perm random_perm(int n, std::mt19937_64& rng) {
  std::vector<uint8_t> m(n);
  std::iota(m.begin(), m.end(), uint8_t{0});
  for (int i = n - 1; i > 0; --i) std::swap(m[i], m[rng() % (i + 1)]);
  return Perm(std::move(m));
}

std::vector<Perm> brute_stabilizer(const Perm& p) {
  std::vector<Perm> out;
  for (const Perm& f : all_permutations(p.degree()))
    if (conjugate(f, p) == p) out.push_back(f);
  return out;
}

std::optional<Perm> brute_pair_iso(const Perm& p1, const Perm& t1, const Perm& p2, const Perm& t2) {
  for (const Perm& f : all_permutations(p1.degree()))
    if (conjugate(f, p1) == p2 && conjugate(f, t1) == t2) return f;
  return std::nullopt;
}

}  // namespace

TEST_CASE("stabilizer matches brute force across shapes") {
  auto check = [](int n, std::vector<std::vector<int>> cycles, size_t order) {
    Perm p = Perm::from_cycles(n, cycles);
    auto fast = stabilizer(p);
    REQUIRE(fast.size() == order);
    REQUIRE(fast == brute_stabilizer(p));
    REQUIRE(std::is_sorted(fast.begin(), fast.end()));
    for (const Perm& f : fast) REQUIRE(conjugate(f, p) == p);
  };
  check(5, {{1, 2, 3, 4, 5}}, 5);
  check(5, {{1, 2, 3}, {4, 5}}, 6);
  check(5, {{1, 2, 3}}, 6);        // 3-cycle times S_2 on the fixed points
  check(5, {{1, 2}}, 12);          // 2-cycle times S_3
  check(5, {{1, 2}, {3, 4}}, 8);   // equal lengths: brute-force path, extra swap symmetry
  check(4, {{1, 2}, {3, 4}}, 8);   // dihedral, includes the cycle swap
  check(4, {}, 24);                // identity: whole S_4
  check(6, {{1, 2, 3, 4}, {5, 6}}, 8);
  check(6, {{1, 2, 3, 4, 5, 6}}, 6);
  check(7, {{1, 2, 3, 4, 5}, {6, 7}}, 10);
  check(8, {{1, 2, 3, 4, 5}, {6, 7, 8}}, 15);
}

TEST_CASE("stabilizer of equal-length double transposition includes the swap") {
  Perm p = Perm::from_cycles(4, {{1, 2}, {3, 4}});
  auto stab = stabilizer(p);
  Perm swap24 = Perm::from_cycles(4, {{1, 3}, {2, 4}});
  REQUIRE(std::find(stab.begin(), stab.end(), swap24) != stab.end());
  REQUIRE(conjugate(swap24, p) == p);
}

TEST_CASE("stabilizer closed-form shapes work past the brute-force cap") {
  REQUIRE(stabilizer(Perm::from_cycles(9, {{1, 2, 3, 4, 5, 6, 7, 8, 9}})).size() == 9);
  REQUIRE(stabilizer(Perm::from_cycles(9, {{1, 2, 3, 4, 5, 6, 7}, {8, 9}})).size() == 14);
  REQUIRE(stabilizer(Perm::from_cycles(9, {{1, 2, 3, 4, 5, 6, 7}})).size() == 14);  // 7 x 2!
  REQUIRE_THROWS_AS(stabilizer(Perm::from_cycles(9, {{1, 2, 3}, {4, 5, 6}, {7, 8, 9}})),
                    std::invalid_argument);
}

TEST_CASE("stabilizer is a group") {
  for (auto cycles : {std::vector<std::vector<int>>{{1, 2, 3, 4, 5}}, {{1, 2, 3}, {4, 5}}, {{1, 2}, {3, 4}}}) {
    Perm p = Perm::from_cycles(5, cycles);
    auto stab = stabilizer(p);
    std::set<Perm> members(stab.begin(), stab.end());
    REQUIRE(members.count(Perm::identity(5)) == 1);
    for (const Perm& a : stab)
      for (const Perm& b : stab) REQUIRE(members.count(compose(a, b)) == 1);
  }
}

TEST_CASE("pair graph edge weights") {
  Perm pi = Perm::from_cycles(5, {{1, 2, 3, 4, 5}});
  Perm tau = Perm::from_cycles(5, {{1, 3, 5, 2, 4}});
  PairGraph g(pi, tau);
  auto e = g.edges();
  REQUIRE(e.size() == 10);  // no shared edges
  for (auto& [k, w] : e) REQUIRE((w == 1.0 || w == 2.0));

  PairGraph shared(pi, pi);
  auto es = shared.edges();
  REQUIRE(es.size() == 5);
  for (auto& [k, w] : es) REQUIRE(w == 3.0);

  PairGraph partial(pi, power(pi, 2), 0.25, 0.5);
  for (auto& [k, w] : partial.edges()) REQUIRE((w == 0.25 || w == 0.5));
}

TEST_CASE("pair isomorphism agrees with brute force") {
  std::mt19937_64 rng(20260814);
  int positives = 0, negatives = 0;
  for (int trial = 0; trial < 500; ++trial) {
    Perm p1 = random_perm(5, rng), t1 = random_perm(5, rng);
    Perm p2, t2;
    if (trial % 2 == 0) {
      Perm f = random_perm(5, rng);
      p2 = conjugate(f, p1);
      t2 = conjugate(f, t1);
    } else {
      p2 = random_perm(5, rng);
      t2 = random_perm(5, rng);
    }
    auto got = pair_isomorphic(PairGraph(p1, t1), PairGraph(p2, t2));
    auto want = brute_pair_iso(p1, t1, p2, t2);
    REQUIRE(got.has_value() == want.has_value());
    if (got) {
      ++positives;
      REQUIRE(conjugate(*got, p1) == p2);
      REQUIRE(conjugate(*got, t1) == t2);
    } else {
      ++negatives;
    }
  }
  REQUIRE(positives >= 250);
  REQUIRE(negatives >= 100);
}

TEST_CASE("isomorphism witness relabels the weighted edge set") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    Perm p1 = random_perm(5, rng), t1 = random_perm(5, rng), f = random_perm(5, rng);
    PairGraph g1(p1, t1), g2(conjugate(f, p1), conjugate(f, t1));
    auto w = pair_isomorphic(g1, g2);
    REQUIRE(w.has_value());
    std::map<std::pair<int, int>, double> relabeled;
    for (auto& [k, wt] : g1.edges()) relabeled[{(*w)(k.first), (*w)(k.second)}] = wt;
    REQUIRE(relabeled == g2.edges());
  }
}

TEST_CASE("pair isomorphism argument checks") {
  Perm a = Perm::from_cycles(5, {{1, 2, 3, 4, 5}});
  Perm b = Perm::from_cycles(4, {{1, 2, 3, 4}});
  REQUIRE_THROWS_AS(pair_isomorphic(PairGraph(a, a), PairGraph(b, b)), std::invalid_argument);
  REQUIRE_THROWS_AS(pair_isomorphic(PairGraph(a, a, 1.0, 2.0), PairGraph(a, a, 1.0, 3.0)),
                    std::invalid_argument);
  // type mismatch is a clean negative, not an error
  REQUIRE_FALSE(pair_isomorphic(PairGraph(a, a), PairGraph(a, Perm::from_cycles(5, {{1, 2, 3}, {4, 5}}))));
}

TEST_CASE("canonical representative of a cycle type") {
  REQUIRE(to_cycles(canonical_of_type(5, {5})) == "(1 2 3 4 5)");
  REQUIRE(to_cycles(canonical_of_type(5, {3, 2})) == "(1 2 3)(4 5)");
  REQUIRE(to_cycles(canonical_of_type(5, {2, 3})) == "(1 2 3)(4 5)");  // parts get sorted
  REQUIRE(to_cycles(canonical_of_type(5, {2, 2, 1})) == "(1 2)(3 4)");
  REQUIRE(canonical_of_type(5, {1, 1, 1, 1, 1}) == Perm::identity(5));
  REQUIRE_THROWS_AS(canonical_of_type(5, {3, 3}), std::invalid_argument);
}

TEST_CASE("pair classes at degree 5: frozen census") {
  struct Row {
    CycleType ct1, ct2;
    std::vector<int> sizes, traces;
    std::vector<std::string> reps;
  };
  const std::vector<Row> rows = {
      {{5}, {5}, {1, 5, 5, 5, 5, 1, 1, 1}, {0, 1, 0, 2, 2, 0, 0, 5},
       {"[2,3,4,5,1]", "[2,3,5,1,4]", "[2,4,1,5,3]", "[2,5,1,3,4]",
        "[3,1,5,2,4]", "[3,4,5,1,2]", "[4,5,1,2,3]", "[5,1,2,3,4]"}},
      {{5}, {3, 2}, {5, 5, 5, 5}, {1, 3, 0, 1},
       {"[2,1,4,5,3]", "[2,1,5,3,4]", "[2,4,5,1,3]", "[3,5,1,2,4]"}},
      {{3, 2}, {3, 2}, {6, 1, 6, 1, 6}, {2, 2, 0, 5, 1},
       {"[2,1,4,5,3]", "[2,3,1,5,4]", "[2,4,5,1,3]", "[3,1,2,5,4]", "[3,4,5,2,1]"}},
  };
  for (const Row& row : rows) {
    auto classes = enumerate_pair_classes(row.ct1, row.ct2, 5);
    REQUIRE(classes.size() == row.sizes.size());
    std::set<Perm> all_members;
    uint64_t covered = 0;
    for (size_t i = 0; i < classes.size(); ++i) {
      const PairClass& cls = classes[i];
      CHECK(cls.orbit_size == row.sizes[i]);
      CHECK(cls.product_trace == row.traces[i]);
      CHECK(to_one_line(cls.representative) == row.reps[i]);
      REQUIRE(cls.pi == canonical_of_type(5, row.ct1));
      REQUIRE(cls.orbit.front() == cls.representative);  // sorted orbit, lex-min first
      REQUIRE(std::is_sorted(cls.orbit.begin(), cls.orbit.end()));
      for (const Perm& b : cls.orbit) {
        REQUIRE(cycle_type(b) == [&] { CycleType c = row.ct2; std::sort(c.begin(), c.end(), std::greater<>()); return c; }());
        REQUIRE(fixed_point_count(compose(cls.pi, b)) == cls.product_trace);
        REQUIRE(all_members.insert(b).second);  // classes are disjoint
      }
      covered += cls.orbit.size();
    }
    REQUIRE(covered == conjugacy_class_size(5, row.ct2));  // classes cover the whole type
  }
}

TEST_CASE("members of one class are pairwise isomorphic, distinct classes are not") {
  auto classes = enumerate_pair_classes({3, 2}, {3, 2}, 5);
  Perm pi = classes[0].pi;
  for (const PairClass& cls : classes)
    for (const Perm& b : cls.orbit)
      REQUIRE(pair_isomorphic(PairGraph(pi, cls.representative), PairGraph(pi, b)).has_value());
  for (size_t i = 0; i < classes.size(); ++i)
    for (size_t j = i + 1; j < classes.size(); ++j)
      REQUIRE_FALSE(pair_isomorphic(PairGraph(pi, classes[i].representative),
                                    PairGraph(pi, classes[j].representative)));
}

TEST_CASE("orbit of second component and orbit-stabilizer consistency") {
  std::mt19937_64 rng(99);
  for (auto cycles : {std::vector<std::vector<int>>{{1, 2, 3, 4, 5}}, {{1, 2, 3}, {4, 5}}}) {
    Perm pi = Perm::from_cycles(5, cycles);
    auto stab = stabilizer(pi);
    for (int trial = 0; trial < 40; ++trial) {
      Perm beta = random_perm(5, rng);
      auto orbit = orbit_of_second(pi, beta);
      size_t fixers = 0;
      for (const Perm& f : stab)
        if (conjugate(f, beta) == beta) ++fixers;
      REQUIRE(orbit.size() * fixers == stab.size());
      REQUIRE(std::binary_search(orbit.begin(), orbit.end(), beta));
    }
  }
}

TEST_CASE("closed-form class counts match enumeration") {
  auto agree = [](const CycleType& ct1, const CycleType& ct2, int n, uint64_t expect) {
    auto formula = class_count_formula(ct1, ct2, n);
    REQUIRE(formula.has_value());
    REQUIRE(*formula == expect);
    REQUIRE(enumerate_pair_classes(ct1, ct2, n).size() == expect);
  };
  agree({5}, {5}, 5, 8);
  agree({5}, {3, 2}, 5, 4);
  agree({3, 2}, {3, 2}, 5, 5);
  agree({5}, {3, 1, 1}, 5, 4);
  agree({5}, {2, 2, 1}, 5, 3);
  agree({3}, {3}, 3, 2);
  agree({7}, {7}, 7, 108);
  agree({5, 2}, {5, 2}, 7, 56);
  agree({7}, {5, 2}, 7, 72);  // 504 / 7
  agree({5, 3}, {5, 3}, 8, 192);
}

TEST_CASE("class count formula declines out-of-scope shapes") {
  REQUIRE_FALSE(class_count_formula({2, 2}, {2, 2}, 4));        // equal prime parts
  REQUIRE_FALSE(class_count_formula({4}, {4}, 4));              // composite full cycle
  REQUIRE_FALSE(class_count_formula({5}, {1, 1, 1, 1, 1}, 5));  // second component central
  REQUIRE_FALSE(class_count_formula({3, 2}, {5}, 5));           // mixed first component
  REQUIRE_FALSE(class_count_formula({6}, {3, 2, 1}, 6));
  REQUIRE_FALSE(class_count_formula({4, 2}, {4, 2}, 6));

  // the equal-parts gate is real: the formula applied blind would give a
  // non-integer class count for (2,2) x (2,2)
  REQUIRE(enumerate_pair_classes({2, 2}, {2, 2}, 4).size() == 2);
}

TEST_CASE("representative table covers every class exactly once") {
  auto table = table1_representatives();
  REQUIRE(table.size() == 17);
  Perm five = canonical_of_type(5, {5}), tt = canonical_of_type(5, {3, 2});
  for (size_t i = 0; i < table.size(); ++i) {
    REQUIRE(table[i].first == (i < 12 ? five : tt));
    REQUIRE(cycle_type(table[i].second) == (i < 8 ? CycleType{5} : CycleType{3, 2}));
  }
  auto cover = [&](size_t begin, size_t end, const CycleType& ct1, const CycleType& ct2) {
    auto classes = enumerate_pair_classes(ct1, ct2, 5);
    REQUIRE(classes.size() == end - begin);
    std::set<size_t> hit;
    for (size_t i = begin; i < end; ++i) {
      for (size_t c = 0; c < classes.size(); ++c)
        if (std::binary_search(classes[c].orbit.begin(), classes[c].orbit.end(), table[i].second))
          hit.insert(c);
    }
    REQUIRE(hit.size() == classes.size());
  };
  cover(0, 8, {5}, {5});
  cover(8, 12, {5}, {3, 2});
  cover(12, 17, {3, 2}, {3, 2});
  for (size_t i = 0; i < table.size(); ++i)
    for (size_t j = i + 1; j < table.size(); ++j)
      REQUIRE_FALSE(pair_isomorphic(PairGraph(table[i].first, table[i].second),
                                    PairGraph(table[j].first, table[j].second)));
}

TEST_CASE("achievable traces per derangement type combination") {
  REQUIRE(trace_product_set({5}, {5}) == std::set<int>{0, 1, 2, 5});
  REQUIRE(trace_product_set({5}, {3, 2}) == std::set<int>{0, 1, 3});
  REQUIRE(trace_product_set({3, 2}, {5}) == std::set<int>{0, 1, 3});
  REQUIRE(trace_product_set({3, 2}, {3, 2}) == std::set<int>{0, 1, 2, 5});
  REQUIRE_THROWS_AS(trace_product_set({3, 1, 1}, {5}), std::invalid_argument);
  REQUIRE_THROWS_AS(trace_product_set({3}, {3}), std::invalid_argument);
}

TEST_CASE("enumeration degree guard") {
  REQUIRE_THROWS_AS(enumerate_pair_classes({9}, {9}, 9), std::invalid_argument);
}
