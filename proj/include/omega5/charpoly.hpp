#pragma once

// Characteristic polynomial x^5 + k1 x^4 + k2 x^3 + k3 x^2 + k4 x + k5 of a
// 5x5 matrix: coefficients from power-sum traces (trace-zero input), an
// independent direct expansion, and a closed-form root solver that deflates
// the known eigenvalue 1 of doubly stochastic input.

#include <array>
#include <cmath>
#include <complex>
#include <sstream>
#include <stdexcept>

#include "omega5/dsmat.hpp"
#include "omega5/perm.hpp"

namespace omega5 {

struct CharPolyCoeffs {
  double k1 = 0, k2 = 0, k3 = 0, k4 = 0, k5 = 0;

  // ascending powers: index d holds the coefficient of x^d
  std::array<double, 6> ascending() const { return {k5, k4, k3, k2, k1, 1.0}; }

  friend bool operator==(const CharPolyCoeffs& a, const CharPolyCoeffs& b) {
    return a.k1 == b.k1 && a.k2 == b.k2 && a.k3 == b.k3 && a.k4 == b.k4 && a.k5 == b.k5;
  }
};

struct RootSet {
  std::array<std::complex<double>, 5> roots;  // sorted by (re, im)
};

// Newton recursion k_i = -(1/i) [ k_{i-1} t_1 + ... + k_0 t_i ] specialized
// to t_1 = 0
inline CharPolyCoeffs coeffs_from_traces(double t2, double t3, double t4, double t5) {
  CharPolyCoeffs c;
  c.k1 = 0;
  c.k2 = -t2 / 2;
  c.k3 = -t3 / 3;
  c.k4 = (2 * c.k2 * c.k2 - t4) / 4;
  c.k5 = -(c.k3 * t2 + c.k2 * t3 + t5) / 5;
  return c;
}

// det(xI - M) by expansion over all 120 permutations; each term is a product
// of five linear polynomials, so this shares nothing with the trace route
inline CharPolyCoeffs coeffs_direct(const Matrix5& m) {
  std::array<double, 6> acc{};
  for (const Perm& s : all_permutations(5)) {
    std::array<double, 6> term{};
    term[0] = 1.0;
    int deg = 0;
    for (int i = 0; i < 5; ++i) {
      // row-i factor of the term: (x - m[i][i]) on the diagonal, else -m[i][s(i)]
      double a = -m[i][s(i)], b = (s(i) == i) ? 1.0 : 0.0;
      for (int d = deg + 1; d >= 0; --d)
        term[d] = term[d] * a + (d > 0 ? term[d - 1] * b : 0.0);
      deg += b != 0.0 ? 1 : 0;
    }
    int parity = (5 - static_cast<int>(cycle_type(s).size())) % 2;
    for (int d = 0; d <= 5; ++d) acc[d] += parity ? -term[d] : term[d];
  }
  return {acc[4], acc[3], acc[2], acc[1], acc[0]};
}

// traces of M..M^5 -> coefficients; requires trace-zero input
inline CharPolyCoeffs coeffs_of_trace_zero(const Matrix5& m) {
  if (std::abs(trace(m)) > 1e-9) throw std::invalid_argument("coeffs_of_trace_zero: trace must vanish");
  Matrix5 p = m;
  std::array<double, 6> t{};
  for (int k = 2; k <= 5; ++k) {
    p = matmul(p, m);
    t[k] = trace(p);
  }
  return coeffs_from_traces(t[2], t[3], t[4], t[5]);
}

namespace detail {

inline std::complex<double> horner(const std::array<double, 6>& asc, std::complex<double> x) {
  std::complex<double> v = asc[5];
  for (int d = 4; d >= 0; --d) v = v * x + asc[d];
  return v;
}

inline std::complex<double> horner_deriv(const std::array<double, 6>& asc, std::complex<double> x) {
  std::complex<double> v = 5.0 * asc[5];
  for (int d = 4; d >= 1; --d) v = v * x + static_cast<double>(d) * asc[d];
  return v;
}

// largest real root of z^3 + a z^2 + b z + c (exists: odd degree)
inline double cubic_largest_real_root(double a, double b, double c) {
  // depressed form t^3 + pt + q, z = t - a/3
  double p = b - a * a / 3;
  double q = 2 * a * a * a / 27 - a * b / 3 + c;
  double shift = -a / 3;
  double disc = q * q / 4 + p * p * p / 27;
  double root;
  if (disc >= 0) {
    double s = std::sqrt(disc);
    root = std::cbrt(-q / 2 + s) + std::cbrt(-q / 2 - s) + shift;
  } else {
    // three real roots; the largest uses the k=0 trigonometric branch
    double r = std::sqrt(-p * p * p / 27);
    double phi = std::acos(std::clamp(-q / (2 * r), -1.0, 1.0));
    root = 2 * std::cbrt(r) * std::cos(phi / 3) + shift;
  }
  // one Newton touch-up on the original cubic
  for (int it = 0; it < 3; ++it) {
    double f = ((root + a) * root + b) * root + c;
    double df = (3 * root + 2 * a) * root + b;
    if (df != 0) root -= f / df;
  }
  return root;
}

// x^4 + a x^3 + b x^2 + c x + d = 0 in closed form (resolvent cubic)
inline std::array<std::complex<double>, 4> quartic_roots(double a, double b, double c, double d) {
  // depress: x = y - a/4
  double p = b - 3 * a * a / 8;
  double q = c - a * b / 2 + a * a * a / 8;
  double r = d - a * c / 4 + a * a * b / 16 - 3 * a * a * a * a / 256;
  double scale = std::max({1.0, std::abs(p), std::abs(q), std::abs(r)});

  std::array<std::complex<double>, 4> y;
  if (std::abs(q) <= 1e-13 * scale) {
    // biquadratic: y^2 = (-p +/- sqrt(p^2 - 4r)) / 2
    std::complex<double> s = std::sqrt(std::complex<double>(p * p - 4 * r, 0));
    std::complex<double> y2a = (-p + s) / 2.0, y2b = (-p - s) / 2.0;
    y = {std::sqrt(y2a), -std::sqrt(y2a), std::sqrt(y2b), -std::sqrt(y2b)};
  } else {
    double z = cubic_largest_real_root(2 * p, p * p - 4 * r, -q * q);
    z = std::max(z, 0.0);
    double u = std::sqrt(z);
    if (u <= 1e-300) u = 1e-300;  // q != 0 keeps z > 0 in exact arithmetic
    double s = ((p + z) - q / u) / 2;
    double t = ((p + z) + q / u) / 2;
    // y^4 + p y^2 + q y + r = (y^2 + u y + s)(y^2 - u y + t)
    std::complex<double> d1 = std::sqrt(std::complex<double>(u * u - 4 * s, 0));
    std::complex<double> d2 = std::sqrt(std::complex<double>(u * u - 4 * t, 0));
    y = {(-u + d1) / 2.0, (-u - d1) / 2.0, (u + d2) / 2.0, (u - d2) / 2.0};
  }
  for (auto& v : y) v -= a / 4;
  return y;
}

// synthetic division of the monic quintic by (x - r); returns the monic quartic
inline std::array<double, 4> deflate(const CharPolyCoeffs& c, double r) {
  double b3 = c.k1 + r;
  double b2 = c.k2 + r * b3;
  double b1 = c.k3 + r * b2;
  double b0 = c.k4 + r * b1;
  return {b3, b2, b1, b0};  // x^4 + b3 x^3 + b2 x^2 + b1 x + b0
}

}  // namespace detail

// Closed-form root set.  With assume_root_one the eigenvalue 1 of doubly
// stochastic input is deflated first after snapping k5 to the trace identity
// -(1 + k1 + k2 + k3 + k4); otherwise a real root is located by bisection
// inside the Cauchy bound and deflated.  Every root gets a Newton polish on
// the full quintic; the residual gate is checked against the caller's
// coefficients and a failure raises a numerical error with the worst residual.
inline RootSet roots(const CharPolyCoeffs& input, bool assume_root_one = true) {
  for (double v : {input.k1, input.k2, input.k3, input.k4, input.k5})
    if (!std::isfinite(v)) throw std::invalid_argument("roots: coefficients must be finite");

  CharPolyCoeffs solved = input;
  std::array<std::complex<double>, 5> rt;
  if (assume_root_one) {
    solved.k5 = -(1 + solved.k1 + solved.k2 + solved.k3 + solved.k4);
    auto q = detail::deflate(solved, 1.0);
    auto y = detail::quartic_roots(q[0], q[1], q[2], q[3]);
    rt = {std::complex<double>(1, 0), y[0], y[1], y[2], y[3]};
  } else {
    // odd degree: bisect a sign change over the Cauchy bound
    auto asc = solved.ascending();
    double bound = 1 + std::max({std::abs(solved.k1), std::abs(solved.k2), std::abs(solved.k3),
                                 std::abs(solved.k4), std::abs(solved.k5)});
    double lo = -bound, hi = bound;
    for (int it = 0; it < 200; ++it) {
      double mid = (lo + hi) / 2;
      if (detail::horner(asc, mid).real() >= 0)
        hi = mid;
      else
        lo = mid;
    }
    double r0 = (lo + hi) / 2;
    auto q = detail::deflate(solved, r0);
    auto y = detail::quartic_roots(q[0], q[1], q[2], q[3]);
    rt = {std::complex<double>(r0, 0), y[0], y[1], y[2], y[3]};
  }

  // polish on the snapped quintic (well-posed), gate on the caller's input
  auto asc = solved.ascending();
  for (auto& z : rt) {
    std::complex<double> best = z;
    double best_abs = std::abs(detail::horner(asc, z));
    for (int it = 0; it < 8 && best_abs > 1e-15; ++it) {
      std::complex<double> dp = detail::horner_deriv(asc, z);
      if (std::abs(dp) < 1e-300) break;
      z -= detail::horner(asc, z) / dp;
      double a = std::abs(detail::horner(asc, z));
      if (a < best_abs) {
        best_abs = a;
        best = z;
      }
    }
    z = best;
  }

  // conjugate symmetrization: real coefficients force conjugate pairs
  double scale = std::max({1.0, std::abs(input.k1), std::abs(input.k2), std::abs(input.k3),
                           std::abs(input.k4), std::abs(input.k5)});
  std::array<bool, 5> used{};
  for (int i = 0; i < 5; ++i) {
    if (used[i]) continue;
    if (std::abs(rt[i].imag()) <= 1e-9 * scale) {
      rt[i] = {rt[i].real(), 0.0};
      used[i] = true;
      continue;
    }
    int mate = -1;
    double best = 1e300;
    for (int j = 0; j < 5; ++j) {
      if (j == i || used[j]) continue;
      double d = std::abs(std::conj(rt[i]) - rt[j]);
      if (d < best) {
        best = d;
        mate = j;
      }
    }
    if (mate >= 0 && best <= 1e-6 * scale) {
      std::complex<double> mean = (rt[i] + std::conj(rt[mate])) / 2.0;
      rt[i] = mean;
      rt[mate] = std::conj(mean);
      used[i] = used[mate] = true;
    } else {
      used[i] = true;  // leave as computed; the residual gate decides
    }
  }

  auto in_asc = input.ascending();
  double worst = 0;
  for (const auto& z : rt) worst = std::max(worst, std::abs(detail::horner(in_asc, z)));
  if (worst > 1e-8 * scale) {
    std::ostringstream msg;
    msg << "roots: residual " << worst << " exceeds gate " << 1e-8 * scale;
    throw std::runtime_error(msg.str());
  }

  std::sort(rt.begin(), rt.end(), [](const std::complex<double>& a, const std::complex<double>& b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  return {rt};
}

}  // namespace omega5
