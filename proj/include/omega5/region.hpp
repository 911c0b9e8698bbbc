#pragma once

// Sampling the eigenvalue region of trace-zero doubly stochastic matrices of
// order 5: eigenvalue curves of two-permutation mixtures, random interior
// samples, the Pi_j^0 hull geometry, and the qualitative transition of the
// tracked eigenvalue pair along t P_(12345) + (1-t) P_(124)(35).

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "omega5/charpoly.hpp"
#include "omega5/dsmat.hpp"
#include "omega5/pairgraph.hpp"
#include "omega5/perm.hpp"

namespace omega5 {

struct RegionPoint {
  double re = 0, im = 0;
  std::string source;    // "pair:<pi>|<beta>", "random", "hull:P<j>"
  double parameter = 0;  // mixture parameter c, sample index, or vertex index
};

// Pi_j^0 = {1} union the convex hull of the remaining j-th roots of unity.
// vertices[0] is the isolated point 1; the rest walk the hull by angle.
struct HullPi0 {
  int j = 0;
  std::vector<std::complex<double>> vertices;
};

inline HullPi0 hull_pi0(int j) {
  if (j < 2) throw std::invalid_argument("hull_pi0: j must be at least 2");
  const double tau = 8 * std::atan(1.0);
  HullPi0 out;
  out.j = j;
  out.vertices.push_back({1.0, 0.0});
  for (int i = 1; i < j; ++i) out.vertices.push_back(std::polar(1.0, tau * i / j));
  return out;
}

// membership in the hull part (the convex hull of vertices[1..]); the
// isolated point 1 is not part of the hull
inline bool inside_hull(const HullPi0& h, std::complex<double> z, double tol = 1e-12) {
  size_t m = h.vertices.size() - 1;
  if (m == 1) return std::abs(z - h.vertices[1]) <= tol;
  if (m == 2) {
    // segment
    std::complex<double> a = h.vertices[1], b = h.vertices[2], d = b - a;
    double len2 = std::norm(d);
    double t = std::clamp(((z - a) * std::conj(d)).real() / len2, 0.0, 1.0);
    return std::abs(z - (a + t * d)) <= tol;
  }
  // convex polygon, vertices in increasing-angle (counterclockwise) order
  for (size_t i = 1; i <= m; ++i) {
    std::complex<double> a = h.vertices[i], b = h.vertices[i == m ? 1 : i + 1];
    double cross = (b.real() - a.real()) * (z.imag() - a.imag()) -
                   (b.imag() - a.imag()) * (z.real() - a.real());
    if (cross < -tol) return false;
  }
  return true;
}

namespace detail {

inline Matrix5 mix_two(const Perm& pi, const Perm& beta, double c) {
  Matrix5 m{};
  for (int i = 0; i < 5; ++i) {
    m[i][pi(i)] += c;
    m[i][beta(i)] += 1 - c;
  }
  return m;
}

inline std::array<std::complex<double>, 5> eigs_of(const Matrix5& m) {
  return roots(coeffs_direct(m)).roots;
}

inline void require_fpf5(const Perm& p, const char* who) {
  if (p.degree() != 5 || fixed_point_count(p) != 0)
    throw std::invalid_argument(std::string(who) + ": need fixed-point-free degree-5 permutations");
}

}  // namespace detail

// eigenvalues of c P_pi + (1-c) P_beta for each grid value of c
inline std::vector<RegionPoint> pair_curve(const std::pair<Perm, Perm>& pair,
                                           const std::vector<double>& c_grid) {
  detail::require_fpf5(pair.first, "pair_curve");
  detail::require_fpf5(pair.second, "pair_curve");
  std::string source = "pair:" + to_cycles(pair.first) + "|" + to_cycles(pair.second);
  std::vector<RegionPoint> out;
  for (double c : c_grid) {
    if (!(c > 0 && c < 1)) throw std::invalid_argument("pair_curve: grid values must lie in (0,1)");
    std::array<std::complex<double>, 5> ev;
    try {
      ev = detail::eigs_of(detail::mix_two(pair.first, pair.second, c));
    } catch (const std::runtime_error& e) {
      throw std::runtime_error("pair_curve at c=" + std::to_string(c) + ": " + e.what());
    }
    for (const auto& z : ev) {
      if (std::abs(z) > 1 + 1e-9)
        throw std::runtime_error("pair_curve: eigenvalue escaped the unit disk at c=" + std::to_string(c));
      out.push_back({z.real(), z.imag(), source, c});
    }
  }
  return out;
}

enum class TransitionEvent { axis_collision, pair_merge, hull_edge };

struct BoundaryTransition {
  double t_star = 0;
  TransitionEvent event = TransitionEvent::hull_edge;
  std::complex<double> eigenvalue;  // tracked eigenvalue at t_star
};

// Follows the non-real eigenvalue pair of A(t) = t P_(12345) + (1-t) P_(124)(35)
// that starts at e^{+-2pi i/3}, marching t upward in steps of 1e-4 with
// nearest-neighbor continuation, and reports the first qualitative event:
// the tracked eigenvalue reaching the real axis, merging with another
// eigenvalue, or crossing into the hull part of Pi_5^0.  The bracketing step
// is bisected to |dt| <= 1e-6.
inline BoundaryTransition boundary_transition_detail() {
  const Perm pi = Perm::from_cycles(5, {{1, 2, 3, 4, 5}});
  const Perm beta = Perm::from_cycles(5, {{1, 2, 4}, {3, 5}});
  const HullPi0 hull5 = hull_pi0(5);
  const double step = 1e-4;
  const double axis_tol = 1e-9, merge_tol = 1e-6;

  auto track = [&](std::complex<double> from, double t) {
    auto ev = detail::eigs_of(detail::mix_two(pi, beta, t));
    std::complex<double> best = ev[0];
    for (const auto& z : ev)
      if (std::abs(z - from) < std::abs(best - from)) best = z;
    return std::pair<std::complex<double>, std::array<std::complex<double>, 5>>{best, ev};
  };
  auto merge_distance = [](std::complex<double> z, const std::array<std::complex<double>, 5>& ev) {
    double best = 1e300;
    for (const auto& w : ev) {
      if (std::abs(w - z) < 1e-14) continue;                  // itself
      if (std::abs(w - std::conj(z)) < 1e-14) continue;       // its conjugate partner
      best = std::min(best, std::abs(w - z));
    }
    return best;
  };

  std::complex<double> z(-0.5, std::sqrt(3.0) / 2);  // e^{2 pi i / 3} at t = 0
  bool was_inside = inside_hull(hull5, z, 0.0);
  double t_prev = 0.0;
  for (double t = step; t < 1.0; t += step) {
    auto [zt, ev] = track(z, t);

    TransitionEvent event{};
    bool fired = false;
    if (std::abs(zt.imag()) <= axis_tol) {
      event = TransitionEvent::axis_collision;
      fired = true;
    } else if (merge_distance(zt, ev) <= merge_tol) {
      event = TransitionEvent::pair_merge;
      fired = true;
    } else if (inside_hull(hull5, zt, 0.0) != was_inside) {
      event = TransitionEvent::hull_edge;
      fired = true;
    }

    if (fired) {
      // bisect the bracketing step on the event indicator
      double lo = t_prev, hi = t;
      std::complex<double> z_lo = z;
      while (hi - lo > 1e-6) {
        double mid = (lo + hi) / 2;
        auto [zm, evm] = track(z_lo, mid);
        bool mid_fired = false;
        switch (event) {
          case TransitionEvent::axis_collision: mid_fired = std::abs(zm.imag()) <= axis_tol; break;
          case TransitionEvent::pair_merge: mid_fired = merge_distance(zm, evm) <= merge_tol; break;
          case TransitionEvent::hull_edge: mid_fired = inside_hull(hull5, zm, 0.0) != was_inside; break;
        }
        if (mid_fired) {
          hi = mid;
        } else {
          lo = mid;
          z_lo = zm;
        }
      }
      double t_star = (lo + hi) / 2;
      return {t_star, event, track(z_lo, t_star).first};
    }

    z = zt;
    t_prev = t;
    was_inside = inside_hull(hull5, z, 0.0);
  }
  throw std::runtime_error("boundary_transition: no event found for t in (0,1)");
}

inline double boundary_transition() { return boundary_transition_detail().t_star; }

struct SamplerConfig {
  double grid_step = 0.01;   // c-grid spacing for pair curves, in (0, 0.1]
  int random_samples = 0;    // number of random mixtures
  int support_size = 3;      // support size of each random mixture, 1..44
  uint64_t seed = 0;
  std::string output_path;   // CLI destination; empty means stdout
  bool plot = false;
  bool include_pairs = true;
};

inline void validate_config(const SamplerConfig& cfg) {
  if (!(cfg.grid_step > 0 && cfg.grid_step <= 0.1))
    throw std::invalid_argument("sampler config: grid_step must lie in (0, 0.1]");
  if (cfg.random_samples < 0)
    throw std::invalid_argument("sampler config: random_samples must be nonnegative");
  if (cfg.support_size < 1 || cfg.support_size > 44)
    throw std::invalid_argument("sampler config: support_size must lie in 1..44");
}

// Deterministic point cloud: Pi_j^0 hull vertices (j = 2, 3, 5), the
// seventeen representative pair curves on a c-grid, and seeded random
// mixtures.  Output is sorted by (source, parameter, re, im) so the emitted
// order does not depend on generation order.
inline std::vector<RegionPoint> sample_region(const SamplerConfig& cfg) {
  validate_config(cfg);
  std::vector<RegionPoint> out;

  for (int j : {2, 3, 5}) {
    HullPi0 h = hull_pi0(j);
    for (size_t i = 0; i < h.vertices.size(); ++i)
      out.push_back({h.vertices[i].real(), h.vertices[i].imag(), "hull:P" + std::to_string(j),
                     static_cast<double>(i)});
  }

  if (cfg.include_pairs) {
    std::vector<double> grid;
    for (double c = cfg.grid_step; c < 1.0 - cfg.grid_step / 2; c += cfg.grid_step) grid.push_back(c);
    for (const auto& pair : table1_representatives()) {
      auto curve = pair_curve(pair, grid);
      out.insert(out.end(), curve.begin(), curve.end());
    }
  }

  std::mt19937_64 rng(cfg.seed);
  for (int s = 0; s < cfg.random_samples; ++s) {
    ConvexCombo combo = random_combo(cfg.support_size, rng);
    for (const auto& z : detail::eigs_of(to_matrix(combo))) {
      if (std::abs(z) > 1 + 1e-9)
        throw std::runtime_error("sample_region: eigenvalue escaped the unit disk");
      out.push_back({z.real(), z.imag(), "random", static_cast<double>(s)});
    }
  }

  std::sort(out.begin(), out.end(), [](const RegionPoint& a, const RegionPoint& b) {
    if (a.source != b.source) return a.source < b.source;
    if (a.parameter != b.parameter) return a.parameter < b.parameter;
    if (a.re != b.re) return a.re < b.re;
    return a.im < b.im;
  });
  return out;
}

namespace detail {

inline std::string g12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace detail

// CSV with 12 significant digits; byte-stable for a fixed configuration
inline std::string region_csv(const std::vector<RegionPoint>& points) {
  std::string out = "re,im,source,parameter\n";
  for (const RegionPoint& p : points) {
    out += detail::g12(p.re);
    out += ',';
    out += detail::g12(p.im);
    out += ',';
    out += p.source;
    out += ',';
    out += detail::g12(p.parameter);
    out += '\n';
  }
  return out;
}

// outer envelope by angular bin: max modulus of pair-curve points vs random
// points; -1 marks an empty bin.  Diagnostic output only — the comparison is
// reported, never asserted.
struct EnvelopeComparison {
  int bins = 0;
  std::vector<double> pair_max, random_max;
};

inline EnvelopeComparison compare_envelopes(const std::vector<RegionPoint>& points, int bins = 72) {
  if (bins < 1) throw std::invalid_argument("compare_envelopes: bins must be positive");
  EnvelopeComparison out;
  out.bins = bins;
  out.pair_max.assign(bins, -1.0);
  out.random_max.assign(bins, -1.0);
  const double tau = 8 * std::atan(1.0);
  for (const RegionPoint& p : points) {
    bool is_pair = p.source.rfind("pair:", 0) == 0;
    bool is_random = p.source == "random";
    if (!is_pair && !is_random) continue;
    double angle = std::atan2(p.im, p.re);
    int bin = std::min(bins - 1, static_cast<int>((angle + tau / 2) / tau * bins));
    bin = std::max(0, bin);
    double r = std::hypot(p.re, p.im);
    auto& slot = is_pair ? out.pair_max[bin] : out.random_max[bin];
    slot = std::max(slot, r);
  }
  return out;
}

// convenience plot: unit circle, Pi_5^0 and Pi_3^0 overlays, point cloud
inline std::string region_svg(const std::vector<RegionPoint>& points) {
  auto x = [](double re) { return 400 + 360 * re; };
  auto y = [](double im) { return 400 - 360 * im; };
  std::string svg =
      "<svg xmlns='http://www.w3.org/2000/svg' width='800' height='800' "
      "viewBox='0 0 800 800'>\n"
      "<rect width='800' height='800' fill='white'/>\n"
      "<circle cx='400' cy='400' r='360' fill='none' stroke='#888' stroke-width='1'/>\n";
  HullPi0 h5 = hull_pi0(5);
  svg += "<polygon points='";
  for (size_t i = 1; i < h5.vertices.size(); ++i)
    svg += detail::g12(x(h5.vertices[i].real())) + "," + detail::g12(y(h5.vertices[i].imag())) + " ";
  svg += "' fill='none' stroke='#2a7' stroke-width='1'/>\n";
  HullPi0 h3 = hull_pi0(3);
  svg += "<line x1='" + detail::g12(x(h3.vertices[1].real())) + "' y1='" +
         detail::g12(y(h3.vertices[1].imag())) + "' x2='" + detail::g12(x(h3.vertices[2].real())) +
         "' y2='" + detail::g12(y(h3.vertices[2].imag())) + "' stroke='#27a' stroke-width='1'/>\n";
  for (const RegionPoint& p : points) {
    const char* color = p.source.rfind("pair:", 0) == 0 ? "#d33"
                        : p.source == "random"          ? "#36c"
                                                        : "#000";
    svg += "<circle cx='" + detail::g12(x(p.re)) + "' cy='" + detail::g12(y(p.im)) + "' r='1.2' fill='" +
           color + "'/>\n";
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace omega5
