#pragma once

// Necessary conditions on (k1..k5) for x^5 + k1 x^4 + ... + k5 to be the
// characteristic polynomial of a trace-zero doubly stochastic matrix of order
// 5: the trace condition (a), coefficient ranges (b), the row-sum eigenvalue
// identity (d), and a three-branch condition (c) on k3 and k4 whose bounds
// come from closed-form two-permutation mixtures.  Passing means "not ruled
// out" — the conditions are necessary, not sufficient.

#include <array>
#include <cmath>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "omega5/charpoly.hpp"
#include "omega5/dsmat.hpp"
#include "omega5/perm.hpp"

namespace omega5 {

inline constexpr double kNecessityTol = 1e-9;

// positive root of c^2 + (k4/k3) c - (k4/k3) = 0, in (0,1); written in
// rationalized form to stay accurate as the ratio approaches 0
inline double c_star(double k3, double k4) {
  if (k3 == 0) throw std::invalid_argument("c_star: k3 must be nonzero");
  double k = k4 / k3;
  if (!(k > 0)) throw std::invalid_argument("c_star: k4/k3 must be positive");
  return 2 * k / (k + std::sqrt(k * k + 4 * k));
}

// slack of k4 against the steep-side envelope f(c) = -5 c^3 (1-c) at c = c_*
inline double appendix_phi(double k3, double k4) {
  double cs = c_star(k3, k4);
  return k4 + 5 * cs * cs * cs * (1 - cs);
}

// slack of k3 against the shallow-side envelope g(c) = -5 c (1-c)^2 at c = c_*
inline double appendix_psi(double k3, double k4) {
  double cs = c_star(k3, k4);
  return k3 + 5 * cs * (1 - cs) * (1 - cs);
}

struct BranchResult {
  bool holds = false;
  std::string sub_case;
};

struct NecessityReport {
  bool passes = false;
  bool condition_a = false, condition_b = false, condition_d = false;
  std::array<BranchResult, 3> branch;  // (i), (ii), (iii)
  std::optional<double> c_star;        // set when the ratio sub-cases of (ii) engage
  std::vector<std::string> notes;
};

namespace detail {

inline std::string fmt(double v) {
  std::ostringstream out;
  out.precision(12);
  out << v;
  return out.str();
}

}  // namespace detail

// Every comparison carries tol slack and bounds are inclusive: several
// two-permutation families sit exactly on the envelopes.  No short-circuit:
// all three branches are evaluated and reported.
inline NecessityReport check_necessary(const CharPolyCoeffs& c, double tol = kNecessityTol) {
  if (!(tol > 0)) throw std::invalid_argument("check_necessary: tol must be positive");
  NecessityReport rep;
  const double k1 = c.k1, k2 = c.k2, k3 = c.k3, k4 = c.k4, k5 = c.k5;

  rep.condition_a = std::abs(k1) <= tol;
  if (!rep.condition_a) rep.notes.push_back("(a) failed: k1 = " + detail::fmt(k1));

  bool b_k2 = k2 > -2.5 - tol && k2 <= tol;
  bool b_k3 = k3 >= -5.0 / 3 - tol && k3 <= tol;
  rep.condition_b = b_k2 && b_k3;
  if (!b_k2) rep.notes.push_back("(b) failed: k2 = " + detail::fmt(k2) + " outside (-5/2, 0]");
  if (!b_k3) rep.notes.push_back("(b) failed: k3 = " + detail::fmt(k3) + " outside [-5/3, 0]");

  double row_sum = 1 + k1 + k2 + k3 + k4 + k5;
  rep.condition_d = std::abs(row_sum) <= tol;
  if (!rep.condition_d)
    rep.notes.push_back("(d) failed: 1 + sum of coefficients = " + detail::fmt(row_sum));

  // branch (i)
  {
    bool head = k3 >= std::max(k2, -2 - k2) - tol && k3 <= tol;
    bool pos_ok = k4 >= -tol && k4 <= 1 + k3 + tol;
    double neg_bound = std::max(-(1 + k2) * (4 + 5 * k2), -(1 + k3) * (2 + 5 * k3) / 9);
    bool neg_ok = k4 <= tol && k4 >= neg_bound - tol;
    rep.branch[0].holds = head && (pos_ok || neg_ok);
    if (!head)
      rep.branch[0].sub_case = "k3 range vs max{k2, -2-k2} failed";
    else if (pos_ok && neg_ok)
      rep.branch[0].sub_case = "k4~0: both sign clauses hold";
    else if (pos_ok)
      rep.branch[0].sub_case = "k4>=0: k4 <= 1+k3";
    else if (neg_ok)
      rep.branch[0].sub_case = "k4<=0: k4 above envelope";
    else
      rep.branch[0].sub_case = k4 > tol ? "k4>=0: k4 <= 1+k3 failed" : "k4<=0: envelope failed";
  }

  // branch (ii)
  {
    bool head = k2 >= -1.25 - tol && k2 <= tol && k3 >= -20.0 / 27 - tol && k3 <= tol;
    bool tail = false;
    std::string sc;
    if (k4 >= -tol) {
      tail = k4 <= k2 * k2 / 5 + tol;
      sc = tail ? "k4>=0: k4 <= k2^2/5" : "k4>=0: k4 <= k2^2/5 failed";
    } else if (std::abs(k3) <= tol) {
      tail = std::abs(k4 - 2 * k2) <= tol;
      sc = tail ? "k3=0: k4 = 2k2" : "k3=0: k4 = 2k2 failed";
    } else {
      double r = k4 / k3;
      if (!(r > 0)) {
        sc = "ratio k4/k3 not positive";
      } else {
        double cs = c_star(k3, k4);
        rep.c_star = cs;
        double shallow = -5 * cs * (1 - cs) * (1 - cs);
        double steep = -5 * cs * cs * cs * (1 - cs);
        if (r < 1.0 / 6) {
          tail = std::min(k3, k4) >= shallow - tol;
          sc = "ratio<1/6: min{k3,k4} vs -5c*(1-c*)^2";
        } else if (r <= 1.0) {
          tail = k4 >= shallow - tol;
          sc = "1/6<=ratio<=1: k4 vs -5c*(1-c*)^2";
          if (std::abs(r - 1.0) <= tol)
            rep.notes.push_back("(ii) ratio k4/k3 = 1 handled by the <=1 clause");
        } else if (r <= 2.25) {
          tail = k3 >= steep - tol;
          sc = "1<ratio<=9/4: k3 vs -5c*^3(1-c*)";
        } else {
          tail = std::min(k3, k4) >= steep - tol;
          sc = "ratio>9/4: min{k3,k4} vs -5c*^3(1-c*)";
        }
        if (!tail) sc += " failed";
      }
    }
    rep.branch[1].holds = head && tail;
    rep.branch[1].sub_case = head ? sc : "k2/k3 range failed";
  }

  // branch (iii)
  {
    double t = std::cbrt(-k3);
    bool head = k2 >= -t * (3 - 2 * t) - tol;
    double s = std::sqrt(std::max(0.0, -k2));
    bool neg_ok = k4 <= tol && k4 >= -3 * s * (1 - s) * (1 - s) - tol;
    bool pos_ok = k4 >= -tol && k4 <= -t * (1 - t) * (1 - 3 * t) + tol;
    rep.branch[2].holds = head && (neg_ok || pos_ok);
    if (!head)
      rep.branch[2].sub_case = "k2 vs cube-root envelope failed";
    else if (neg_ok && pos_ok)
      rep.branch[2].sub_case = "k4~0: both sign clauses hold";
    else if (neg_ok)
      rep.branch[2].sub_case = "k4<=0: k4 >= -3 sqrt(-k2)(1-sqrt(-k2))^2";
    else if (pos_ok)
      rep.branch[2].sub_case = "k4>=0: k4 <= cube-root bound";
    else
      rep.branch[2].sub_case = k4 > tol ? "k4>=0 bound failed" : "k4<=0 bound failed";
  }

  rep.passes = rep.condition_a && rep.condition_b && rep.condition_d &&
               (rep.branch[0].holds || rep.branch[1].holds || rep.branch[2].holds);
  if (rep.passes)
    rep.notes.push_back("not ruled out: the conditions are necessary, not sufficient");
  else if (rep.condition_a && rep.condition_b && rep.condition_d)
    rep.notes.push_back("rejected: no branch of the k3/k4 condition holds");
  return rep;
}

// ---- closed-form two-permutation families -------------------------------
// Mixture convention: A = c P_pi + (1-c) P_beta with c in (0,1).  The ids
// group by type combination: i.* are (3,2)x(3,2), ii.* are (5)x(5), iii.*
// are (5)x(3,2).

struct PairFamily {
  std::string case_id;
  Perm pi, beta;
};

inline const std::vector<std::string>& all_family_ids() {
  static const std::vector<std::string> ids = {"i.A",   "i.B",   "i.C",   "i.D",  "ii.A",
                                               "ii.B",  "ii.C",  "ii.D",  "ii.E", "ii.F",
                                               "ii.G",  "iii.A", "iii.B", "iii.C", "iii.D"};
  return ids;
}

inline PairFamily family(const std::string& case_id) {
  auto tt = [](const char* text) { return parse_perm(text, 5).value(); };
  const Perm five = tt("(1 2 3 4 5)");
  const Perm three_two = tt("(1 2 3)(4 5)");
  if (case_id == "i.A") return {case_id, three_two, tt("(1 3 2)(4 5)")};
  if (case_id == "i.B") return {case_id, three_two, tt("(1 2 4)(3 5)")};
  if (case_id == "i.C") return {case_id, three_two, tt("(1 4 2)(3 5)")};
  if (case_id == "i.D") return {case_id, three_two, tt("(1 4 5)(2 3)")};
  if (case_id == "ii.A") return {case_id, five, power(five, 2)};
  if (case_id == "ii.B") return {case_id, five, power(five, 3)};
  if (case_id == "ii.C") return {case_id, five, power(five, 4)};
  if (case_id == "ii.D") return {case_id, five, tt("(1 2 3 5 4)")};
  if (case_id == "ii.E") return {case_id, five, tt("(1 2 4 5 3)")};
  if (case_id == "ii.F") return {case_id, five, tt("(1 2 5 4 3)")};
  if (case_id == "ii.G") return {case_id, five, tt("(1 3 5 4 2)")};
  if (case_id == "iii.A") return {case_id, five, tt("(1 2 3)(4 5)")};
  if (case_id == "iii.B") return {case_id, five, tt("(1 2 4)(3 5)")};
  if (case_id == "iii.C") return {case_id, five, tt("(1 3 2)(4 5)")};
  if (case_id == "iii.D") return {case_id, five, tt("(1 4 2)(3 5)")};
  throw std::invalid_argument("family: unknown case id " + case_id);
}

// closed-form (k2, k3, k4) of the family mixture at parameter c
inline std::array<double, 3> family_coeffs(const std::string& case_id, double c) {
  if (!(c > 0 && c < 1)) throw std::invalid_argument("family_coeffs: c must lie in (0,1)");
  const double d = 1 - c, u = c * d, sq = c * c + d * d;
  if (case_id == "i.A") return {-(1 + 3 * u), -(1 - 3 * u), 3 * u};
  if (case_id == "i.B") return {-sq, -sq, 0};
  if (case_id == "i.C") return {u - 1, 3 * u - 1, u * (1 - 5 * u)};
  if (case_id == "i.D") return {-1, -sq, u};
  if (case_id == "ii.A") return {0, -5 * c * d * d, -5 * c * c * c * d};
  if (case_id == "ii.B") return {0, -5 * c * c * d, -5 * c * d * d * d};
  if (case_id == "ii.C") return {-5 * u, 0, 5 * u * u};
  if (case_id == "ii.D") return {-u, 0, -2 * u};
  if (case_id == "ii.E") return {0, -2 * u, -u};
  if (case_id == "ii.F") return {-2 * u, -2 * u, 0};
  if (case_id == "ii.G") return {-2 * u, -u, -u * (2 - 5 * u)};
  if (case_id == "iii.A") return {-d, -d, 0};
  if (case_id == "iii.B") return {-d * d, -d * (1 - u), -3 * c * c * d};
  if (case_id == "iii.C") return {-d * (1 + 2 * c), -d * d * d, -c * d * (3 * c - 2)};
  if (case_id == "iii.D") return {-d, -d * (3 * c * c + d * d), -c * d * (2 * c - 1)};
  throw std::invalid_argument("family_coeffs: unknown case id " + case_id);
}

// the family mixture as a concrete convex combination
inline ConvexCombo family_combo(const std::string& case_id, double c) {
  if (!(c > 0 && c < 1)) throw std::invalid_argument("family_combo: c must lie in (0,1)");
  PairFamily f = family(case_id);
  return ConvexCombo({f.pi, f.beta}, {c, 1 - c});
}

}  // namespace omega5
