#pragma once

// Emptiness of L_d(m^10) through the nine-component degeneration of the plane
// blown up at ten points (four points on V = P^2, six on Z = F_1, then 2-throws
// of the cubic L_3(2,1^6), two conics and four quartics).
//
// An extremal limit bundle is fixed by (d, m) and one integer a. L_d(m^10) is
// empty as soon as, for every a, either the V-side restriction or the Z-side
// restriction is empty. Both sides are tested on their Cremona-equivalent
// models:
//
//   V side: L_{a-2l}([l/2, l/2]^8) with the eight pairs on two conics
//           Gamma_1, Gamma_2. Effectivity forces L_V . Gamma >= 0, i.e. a >= 4l.
//   Z side: L_{76d-240m-3a}((13d-41m-a)^6, ((69/2)d-109m-a)^4). Effectivity
//           forces a nonnegative degree, i.e. 3a <= 76d - 240m.
//
// with alpha = d - 3m and l = 19m - 6d. Both constraints are linear in a, so
// the quantifier over all integers a collapses to one interval check.

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cremona.hpp"
#include "error.hpp"
#include "integer.hpp"
#include "lattice.hpp"
#include "rational_linalg.hpp"

namespace fatpoints {

struct Invariants {
   Integer alpha;  // d - 3m
   Integer ell;    // 19m - 6d
   bool operator==(const Invariants&) const = default;
};

inline Invariants invariants(const Integer& d, const Integer& m) { return {d - 3 * m, 19 * m - 6 * d}; }

// ---------------------------------------------------------------------------
// Twists of a 2-throw

/// Twist L(-uT - (u+v)S) of a 2-throw along a (-1)-curve E with L.E = -2h.
struct TwistSpec {
   Integer u;
   Integer v;
   Integer h;

   /// Central effectivity: u >= h, u >= v >= 0, u + v >= 2h.
   bool feasible() const { return u >= h && u >= v && v >= 0 && u + v >= 2 * h; }

   bool operator==(const TwistSpec&) const = default;
};

/// True iff the points of type [weaker.u, weaker.v] impose no more conditions
/// than [stronger.u, stronger.v]: u'(F+G) + v'F <= u(F+G) + vF coefficientwise.
inline bool imposes_no_more_conditions(const TwistSpec& weaker, const TwistSpec& stronger)
{
   return weaker.u <= stronger.u && weaker.u + weaker.v <= stronger.u + stronger.v;
}

struct TwistNormalization {
   TwistSpec input;
   TwistSpec clamped;     // u' = min(u, 2h), v' = 2h - u'
   TwistSpec normalized;  // (h, h)
   std::vector<TwistSpec> log;
};

inline TwistNormalization normalize_twist(const TwistSpec& t)
{
   if (!t.feasible())
      throw InfeasibleTwist("twist (u=" + t.u.str() + ", v=" + t.v.str() + ", h=" + t.h.str() +
                            ") violates u >= h, u >= v >= 0, u + v >= 2h");
   TwistNormalization out;
   out.input = t;
   const Integer two_h = 2 * t.h;
   const Integer u1 = t.u < two_h ? t.u : two_h;
   out.clamped = {u1, two_h - u1, t.h};
   out.normalized = {t.h, t.h, t.h};
   out.log = {out.input, out.clamped, out.normalized};
   return out;
}

// ---------------------------------------------------------------------------
// Extremal family

struct ExtremalFamily {
   Integer d, m, a;  // working values; d and m even
   bool scaled = false;
   Invariants inv;
   Integer d_Z, mu, q, x;
   Integer d_V, nu, y, z;
   Integer d_T;

   PlaneSystem L_Z() const
   {
      return PlaneSystem(d_Z, {PointSpec::free(mu), PointSpec::free(q, 6), PointSpec::pair(x, x, 2)});
   }
   PlaneSystem L_V() const
   {
      return PlaneSystem(d_V, {PointSpec::free(nu, 4), PointSpec::pair(y, y, 2), PointSpec::pair(z, z, 8)});
   }
   PlaneSystem L_T() const { return PlaneSystem(d_T, {PointSpec::pair(x, x, 2)}); }
   PlaneSystem L_U() const { return PlaneSystem(0, {}); }
   PlaneSystem L_Y() const { return PlaneSystem(0, {}); }

   /// Cremona-equivalent model of L_V: L_{a-2l}([l/2, l/2]^8).
   PlaneSystem V_model() const { return PlaneSystem(a - 2 * inv.ell, {PointSpec::pair(z, z, 8)}); }

   /// Cremona-equivalent model of L_Z: L_{76d-240m-3a}((13d-41m-a)^6, ((69/2)d-109m-a)^4).
   PlaneSystem Z_model() const
   {
      return PlaneSystem(76 * d - 240 * m - 3 * a,
                         {PointSpec::free(13 * d - 41 * m - a, 6), PointSpec::free(exact_half(69 * d) - 109 * m - a, 4)});
   }

   /// (d_Z, mu, q, x, d_V, nu, y, z), the unknowns of the matching system.
   std::array<Integer, 8> unknowns() const { return {d_Z, mu, q, x, d_V, nu, y, z}; }
};

/// Doubles (d, m) when either is odd; returns the working pair and whether it scaled.
inline std::pair<std::pair<Integer, Integer>, bool> even_working_pair(const Integer& d, const Integer& m)
{
   if (is_even(d) && is_even(m)) return {{d, m}, false};
   return {{2 * d, 2 * m}, true};
}

inline ExtremalFamily extremal_family(const Integer& d_in, const Integer& m_in, const Integer& a)
{
   const auto [pair, scaled] = even_working_pair(d_in, m_in);
   const auto& [d, m] = pair;
   ExtremalFamily f;
   f.d = d;
   f.m = m;
   f.a = a;
   f.scaled = scaled;
   f.inv = invariants(d, m);
   const Integer& alpha = f.inv.alpha;
   const Integer& ell = f.inv.ell;
   f.d_Z = 10 * alpha - 6 * a;
   f.mu = 6 * alpha - 3 * a;
   f.q = 3 * alpha - 2 * a;
   f.x = 5 * m - exact_half(3 * d) - a;
   f.d_V = 9 * a - 18 * ell;
   f.nu = 4 * a - 8 * ell;
   f.y = 2 * a - 4 * ell;
   f.z = exact_half(ell);
   f.d_T = 10 * m - 3 * d - 2 * a;
   return f;
}

// ---------------------------------------------------------------------------
// Matching equations

/// The seven linear equations on (d_Z, mu, q, x, d_V, nu, y, z):
///   3d_Z - 2mu - 6q = 0, 2d_V - 4nu - y = 0, 4d_V - 7nu - 4y = 0   (zero degree on thrown curves)
///   nu + 4x + 14z = m, q + 2x + 16z + 2y = m                       (multiplicity m on V and Z)
///   d_Z + 6y + 48z + 6x = d                                         (total degree)
///   d_V - 4y - mu + 4x = 0                                          (matching V with Z)
inline DenseMatrix<Integer> matching_coefficients()
{
   // clang-format off
   return {
      {3, -2, -6,  0, 0,  0,  0,  0},
      {0,  0,  0,  0, 2, -4, -1,  0},
      {0,  0,  0,  0, 4, -7, -4,  0},
      {0,  0,  0,  4, 0,  1,  0, 14},
      {0,  0,  1,  2, 0,  0,  2, 16},
      {1,  0,  0,  6, 0,  0,  6, 48},
      {0, -1,  0,  4, 1,  0, -4,  0},
   };
   // clang-format on
}

inline std::vector<Integer> matching_rhs(const Integer& d, const Integer& m) { return {0, 0, 0, m, m, d, 0}; }

/// A v - rhs at the closed-form family; identically zero.
inline std::array<Integer, 7> verify_matching_identities(const Integer& d, const Integer& m, const Integer& a)
{
   const auto fam = extremal_family(d, m, a);
   const auto v = fam.unknowns();
   const auto A = matching_coefficients();
   const auto b = matching_rhs(fam.d, fam.m);
   std::array<Integer, 7> res;
   for (std::size_t i = 0; i < 7; ++i) {
      Integer acc = 0;
      for (std::size_t j = 0; j < 8; ++j) acc += A[i][j] * v[j];
      res[i] = acc - b[i];
   }
   return res;
}

struct MatchingSolution {
   std::size_t rank;
   std::vector<Rational> particular;      // free variables set to zero
   DenseMatrix<Rational> kernel;          // basis of the homogeneous solutions
   std::vector<Rational> unit_direction;  // kernel vector scaled so its x entry is -1
};

/// Solves the seven equations for a given (d, m) by exact rational elimination,
/// independently of the closed forms.
inline MatchingSolution solve_matching_system(const Integer& d, const Integer& m)
{
   DenseMatrix<Rational> A;
   for (const auto& row : matching_coefficients()) {
      std::vector<Rational> r;
      for (const auto& v : row) r.emplace_back(v);
      A.push_back(std::move(r));
   }
   std::vector<Rational> b;
   for (const auto& v : matching_rhs(d, m)) b.emplace_back(v);
   MatchingSolution sol;
   sol.rank = reduced_row_echelon(A).rank();
   sol.particular = particular_solution(A, b).value();
   sol.kernel = nullspace(A);
   if (sol.kernel.size() == 1 && sol.kernel[0][3] != 0) {
      const Rational scale = Rational(-1) / sol.kernel[0][3];
      for (const auto& v : sol.kernel[0]) sol.unit_direction.push_back(v * scale);
   }
   return sol;
}

// ---------------------------------------------------------------------------
// The two emptiness tests

/// Gamma_1 + Gamma_2 on the 16 entries of the V model: each Gamma_i is a conic
/// (2; 1 at the p and q entries of its four pairs).
inline std::pair<LatticeClass, LatticeClass> gamma_conics()
{
   std::vector<Integer> first(16, 0), second(16, 0);
   for (std::size_t i = 0; i < 8; ++i) first[i] = 1;
   for (std::size_t i = 8; i < 16; ++i) second[i] = 1;
   return {LatticeClass(2, first), LatticeClass(2, second)};
}

inline constexpr int gamma_transversal_points = 4;

struct GammaTest {
   Integer value;  // L_V . Gamma on the V model
   bool pass;      // value >= 0
   Integer gamma_self_intersection;
   Integer gamma_cross;  // Gamma_1 . Gamma_2
   bool scaled;
};

inline GammaTest gamma_test(const Integer& d, const Integer& m, const Integer& a)
{
   const auto fam = extremal_family(d, m, a);
   const auto [g1, g2] = gamma_conics();
   const LatticeClass gamma = g1 + g2;
   GammaTest out;
   out.value = pairing(fam.V_model().expand(), gamma);
   out.pass = out.value >= 0;
   out.gamma_cross = pairing(g1, g2);
   out.gamma_self_intersection = self_intersection(g1) + self_intersection(g2) + 2 * out.gamma_cross;
   out.scaled = fam.scaled;
   return out;
}

struct ZDegreeTest {
   Integer degree;  // 76d - 240m - 3a
   bool pass;       // degree >= 0
};

inline ZDegreeTest z_degree_test(const Integer& d, const Integer& m, const Integer& a)
{
   if (!is_even(d)) throw OddDegreeInput("z_degree_test needs even d (got " + d.str() + "); scale (d, m) by 2 first");
   const Integer degree = 76 * d - 240 * m - 3 * a;
   return {degree, degree >= 0};
}

// ---------------------------------------------------------------------------
// Certificate

enum class CertificateVerdict { Empty, NotApplicable };

inline const char* to_string(CertificateVerdict v) { return v == CertificateVerdict::Empty ? "Empty" : "NotApplicable"; }

struct EmptinessCertificate {
   Integer d, m;                  // as given
   bool scaled = false;           // odd input doubled
   Integer working_d, working_m;  // the even pair all values refer to
   Integer alpha, ell;
   Integer v_threshold;            // 4l: the V side needs a >= v_threshold
   Integer z_threshold_numerator;  // 76d - 240m: the Z side needs 3a <= this
   Integer a_max;                  // floor(z_threshold_numerator / 3)
   std::optional<Integer> witness;  // an a passing both tests, when one exists
   CertificateVerdict verdict = CertificateVerdict::NotApplicable;
};

inline EmptinessCertificate emptiness_certificate(const Integer& d, const Integer& m)
{
   EmptinessCertificate c;
   c.d = d;
   c.m = m;
   const auto [pair, scaled] = even_working_pair(d, m);
   c.scaled = scaled;
   c.working_d = pair.first;
   c.working_m = pair.second;
   const auto inv = invariants(c.working_d, c.working_m);
   c.alpha = inv.alpha;
   c.ell = inv.ell;
   c.v_threshold = 4 * c.ell;
   c.z_threshold_numerator = 76 * c.working_d - 240 * c.working_m;
   c.a_max = floor_div(c.z_threshold_numerator, 3);
   if (c.v_threshold <= c.a_max) c.witness = c.v_threshold;
   // l <= 0 is outside the range where the conic pairing argument applies.
   c.verdict = (c.ell > 0 && !c.witness) ? CertificateVerdict::Empty : CertificateVerdict::NotApplicable;
   return c;
}

/// Independent O(1) re-check of a certificate's arithmetic and verdict.
inline bool recheck(const EmptinessCertificate& c)
{
   const bool doubled = !(is_even(c.d) && is_even(c.m));
   if (c.scaled != doubled) return false;
   const Integer k = doubled ? 2 : 1;
   if (c.working_d != k * c.d || c.working_m != k * c.m) return false;
   if (c.alpha != c.working_d - 3 * c.working_m || c.ell != 19 * c.working_m - 6 * c.working_d) return false;
   if (c.v_threshold != 4 * c.ell || c.z_threshold_numerator != 76 * c.working_d - 240 * c.working_m) return false;
   if (3 * c.a_max > c.z_threshold_numerator || 3 * (c.a_max + 1) <= c.z_threshold_numerator) return false;
   const bool interval_empty = 12 * c.ell > c.z_threshold_numerator;
   if (c.witness) {
      if (interval_empty) return false;
      if (*c.witness < c.v_threshold || 3 * *c.witness > c.z_threshold_numerator) return false;
   } else if (!interval_empty) {
      return false;
   }
   const bool empty = c.ell > 0 && interval_empty;
   return (c.verdict == CertificateVerdict::Empty) == empty;
}

}  // namespace fatpoints
