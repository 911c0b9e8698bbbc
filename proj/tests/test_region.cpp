#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <set>

#include "omega5/region.hpp"

using namespace omega5;

namespace {

const double kTau = 8 * std::atan(1.0);

std::array<std::complex<double>, 5> perm_eigs(const Perm& p) {
  return roots(coeffs_direct(perm_matrix(p))).roots;
}

bool multiset_close(std::vector<std::complex<double>> got, std::vector<std::complex<double>> want,
                    double tol) {
  if (got.size() != want.size()) return false;
  for (const auto& w : want) {
    auto it = std::min_element(got.begin(), got.end(), [&](auto a, auto b) {
      return std::abs(a - w) < std::abs(b - w);
    });
    if (it == got.end() || std::abs(*it - w) > tol) return false;
    got.erase(it);
  }
  return true;
}

}  // namespace

TEST_CASE("hull_pi0 vertices are the unit roots with 1 isolated") {
  HullPi0 h2 = hull_pi0(2);
  REQUIRE(h2.vertices.size() == 2);
  CHECK(std::abs(h2.vertices[0] - std::complex<double>(1, 0)) < 1e-15);
  CHECK(std::abs(h2.vertices[1] - std::complex<double>(-1, 0)) < 1e-12);

  HullPi0 h5 = hull_pi0(5);
  REQUIRE(h5.vertices.size() == 5);
  for (size_t i = 0; i < 5; ++i) {
    CHECK(std::abs(std::abs(h5.vertices[i]) - 1.0) < 1e-12);
    CHECK(std::abs(h5.vertices[i] - std::polar(1.0, kTau * i / 5)) < 1e-12);
  }

  CHECK_THROWS_AS(hull_pi0(1), std::invalid_argument);
  CHECK_THROWS_AS(hull_pi0(0), std::invalid_argument);
}

TEST_CASE("inside_hull handles polygon, segment, and point cases") {
  HullPi0 h5 = hull_pi0(5);
  CHECK(inside_hull(h5, {0, 0}));
  CHECK(inside_hull(h5, {-0.5, 0.3}));
  CHECK_FALSE(inside_hull(h5, {1, 0}));                       // the isolated vertex
  CHECK_FALSE(inside_hull(h5, std::polar(1.0, kTau / 3)));    // on the circle between vertices
  CHECK(inside_hull(h5, std::polar(1.0, kTau / 5), 1e-9));    // a vertex itself

  HullPi0 h3 = hull_pi0(3);
  CHECK(inside_hull(h3, {-0.5, 0}, 1e-9));
  CHECK(inside_hull(h3, {-0.5, 0.8}, 1e-9));
  CHECK_FALSE(inside_hull(h3, {0, 0}, 1e-9));
  CHECK_FALSE(inside_hull(h3, {-0.5, 0.9}, 1e-9));  // past the endpoint

  HullPi0 h2 = hull_pi0(2);
  CHECK(inside_hull(h2, {-1, 0}, 1e-9));
  CHECK_FALSE(inside_hull(h2, {-0.99, 0}, 1e-9));
}

TEST_CASE("pair_curve validates its inputs") {
  Perm five = Perm::from_cycles(5, {{1, 2, 3, 4, 5}});
  Perm with_fixed = Perm::from_cycles(5, {{1, 2, 3}});
  CHECK_THROWS_AS(pair_curve({five, with_fixed}, {0.5}), std::invalid_argument);
  CHECK_THROWS_AS(pair_curve({with_fixed, five}, {0.5}), std::invalid_argument);
  CHECK_THROWS_AS(pair_curve({five, power(five, 2)}, {0.0}), std::invalid_argument);
  CHECK_THROWS_AS(pair_curve({five, power(five, 2)}, {1.0}), std::invalid_argument);
  CHECK_THROWS_AS(pair_curve({five, power(five, 2)}, {-0.2}), std::invalid_argument);
}

TEST_CASE("circulant mixture at c=1/2 has eigenvalues cos(2 pi j / 5)") {
  Perm five = Perm::from_cycles(5, {{1, 2, 3, 4, 5}});
  auto pts = pair_curve({five, power(five, 4)}, {0.5});
  REQUIRE(pts.size() == 5);
  std::vector<std::complex<double>> got;
  for (const auto& p : pts) {
    CHECK(std::abs(p.im) < 1e-7);
    got.push_back({p.re, p.im});
  }
  std::vector<std::complex<double>> want;
  for (int j = 0; j < 5; ++j) want.push_back({std::cos(kTau * j / 5), 0});
  CHECK(multiset_close(got, want, 1e-6));
}

TEST_CASE("endpoint spectra of the tracked mixture family") {
  // A(0) = P_(124)(35): eigenvalues {1, 1, -1, e^{+-2 pi i/3}}
  auto at0 = perm_eigs(Perm::from_cycles(5, {{1, 2, 4}, {3, 5}}));
  std::vector<std::complex<double>> got0(at0.begin(), at0.end());
  CHECK(multiset_close(got0,
                       {{1, 0}, {1, 0}, {-1, 0}, std::polar(1.0, kTau / 3), std::polar(1.0, -kTau / 3)},
                       1e-9));

  // A(1) = P_(12345): the fifth roots of unity
  auto at1 = perm_eigs(Perm::from_cycles(5, {{1, 2, 3, 4, 5}}));
  std::vector<std::complex<double>> got1(at1.begin(), at1.end());
  std::vector<std::complex<double>> want1;
  for (int j = 0; j < 5; ++j) want1.push_back(std::polar(1.0, kTau * j / 5));
  CHECK(multiset_close(got1, want1, 1e-9));
}

TEST_CASE("tracked eigenvalue pair crosses a hull edge near t = 0.2840") {
  BoundaryTransition bt = boundary_transition_detail();
  // the event is the pair entering the hull part of Pi_5^0, not an axis
  // collision or a merge, and it happens well before the second non-real
  // pair is born near t = 0.627
  CHECK(bt.event == TransitionEvent::hull_edge);
  CHECK(bt.t_star > 0.277);
  CHECK(bt.t_star < 0.287);
  CHECK(std::abs(bt.t_star - 0.2840396) < 5e-5);
  CHECK(std::abs(bt.eigenvalue - std::complex<double>(-0.3568, 0.7347)) < 2e-3);
  CHECK(std::abs(boundary_transition() - bt.t_star) < 1e-9);
}

TEST_CASE("sampler config validation") {
  SamplerConfig ok;
  ok.grid_step = 0.05;
  CHECK_NOTHROW(validate_config(ok));

  SamplerConfig bad = ok;
  bad.grid_step = 0.0;
  CHECK_THROWS_AS(validate_config(bad), std::invalid_argument);
  bad = ok;
  bad.grid_step = 0.11;
  CHECK_THROWS_AS(validate_config(bad), std::invalid_argument);
  bad = ok;
  bad.random_samples = -1;
  CHECK_THROWS_AS(validate_config(bad), std::invalid_argument);
  bad = ok;
  bad.support_size = 0;
  CHECK_THROWS_AS(validate_config(bad), std::invalid_argument);
  bad = ok;
  bad.support_size = 45;
  CHECK_THROWS_AS(validate_config(bad), std::invalid_argument);
}

TEST_CASE("sample_region emits a sorted, disk-contained, conjugate-symmetric cloud") {
  SamplerConfig cfg;
  cfg.grid_step = 0.05;
  cfg.random_samples = 50;
  cfg.support_size = 5;
  cfg.seed = 42;
  auto pts = sample_region(cfg);
  REQUIRE(!pts.empty());

  for (const auto& p : pts) CHECK(std::hypot(p.re, p.im) <= 1 + 1e-9);

  bool sorted = std::is_sorted(pts.begin(), pts.end(), [](const RegionPoint& a, const RegionPoint& b) {
    return std::tie(a.source, a.parameter, a.re, a.im) < std::tie(b.source, b.parameter, b.re, b.im);
  });
  CHECK(sorted);

  // each point's conjugate appears under the same source (hull vertices pair
  // up across different vertex indices, so the parameter may differ)
  for (const auto& p : pts) {
    bool found = false;
    for (const auto& q : pts) {
      if (q.source == p.source && std::abs(q.re - p.re) < 1e-9 && std::abs(q.im + p.im) < 1e-9) {
        found = true;
        break;
      }
    }
    CHECK(found);
  }

  std::set<std::string> pair_sources;
  int random_count = 0;
  for (const auto& p : pts) {
    if (p.source.rfind("pair:", 0) == 0) pair_sources.insert(p.source);
    if (p.source == "random") ++random_count;
  }
  CHECK(pair_sources.size() == 17);
  CHECK(random_count == 50 * 5);
}

TEST_CASE("hull vertices are always present; degenerate config emits only them") {
  SamplerConfig cfg;
  cfg.grid_step = 0.05;
  cfg.random_samples = 0;
  cfg.include_pairs = false;
  auto pts = sample_region(cfg);
  REQUIRE(pts.size() == 2 + 3 + 5);
  for (const auto& p : pts) CHECK(p.source.rfind("hull:P", 0) == 0);

  // the segment [-1, 1] endpoints are covered exactly by hull vertices
  bool has_minus_one = false, has_one = false;
  for (const auto& p : pts) {
    if (std::abs(p.re + 1) < 1e-12 && std::abs(p.im) < 1e-12) has_minus_one = true;
    if (std::abs(p.re - 1) < 1e-12 && std::abs(p.im) < 1e-12) has_one = true;
  }
  CHECK(has_minus_one);
  CHECK(has_one);
}

TEST_CASE("region_csv is byte-identical across runs of the same config") {
  SamplerConfig cfg;
  cfg.grid_step = 0.1;
  cfg.random_samples = 20;
  cfg.support_size = 7;
  cfg.seed = 987654321;
  std::string a = region_csv(sample_region(cfg));
  std::string b = region_csv(sample_region(cfg));
  CHECK(a == b);
  CHECK(a.rfind("re,im,source,parameter\n", 0) == 0);

  size_t rows = std::count(a.begin(), a.end(), '\n');
  CHECK(rows == sample_region(cfg).size() + 1);
}

TEST_CASE("envelope comparison bins pair and random points separately") {
  SamplerConfig cfg;
  cfg.grid_step = 0.05;
  cfg.random_samples = 40;
  cfg.support_size = 4;
  cfg.seed = 7;
  auto pts = sample_region(cfg);
  auto env = compare_envelopes(pts, 36);
  REQUIRE(env.bins == 36);
  REQUIRE(env.pair_max.size() == 36);
  REQUIRE(env.random_max.size() == 36);
  int pair_nonempty = 0, random_nonempty = 0;
  for (int i = 0; i < 36; ++i) {
    if (env.pair_max[i] >= 0) {
      ++pair_nonempty;
      CHECK(env.pair_max[i] <= 1 + 1e-9);
    }
    if (env.random_max[i] >= 0) {
      ++random_nonempty;
      CHECK(env.random_max[i] <= 1 + 1e-9);
    }
  }
  CHECK(pair_nonempty > 10);
  CHECK(random_nonempty > 0);
  CHECK_THROWS_AS(compare_envelopes(pts, 0), std::invalid_argument);
}

TEST_CASE("svg plot contains the overlays and the points") {
  SamplerConfig cfg;
  cfg.grid_step = 0.1;
  cfg.include_pairs = false;
  cfg.random_samples = 3;
  cfg.support_size = 6;
  cfg.seed = 1;
  std::string svg = region_svg(sample_region(cfg));
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("<polygon") != std::string::npos);
  CHECK(svg.find("<line") != std::string::npos);
  CHECK(std::count(svg.begin(), svg.end(), '\n') > 10);
}

TEST_CASE("pair curves stay inside the closed unit disk across the grid") {
  std::vector<double> grid;
  for (double c = 0.02; c < 0.999; c += 0.02) grid.push_back(c);
  for (const auto& pair : table1_representatives()) {
    auto pts = pair_curve(pair, grid);
    REQUIRE(pts.size() == grid.size() * 5);
    for (const auto& p : pts) CHECK(std::hypot(p.re, p.im) <= 1 + 1e-9);
  }
}
