#pragma once

// Interpolation-matrix oracle for plane systems over a prime field.
//
// Soundness is one-sided: the rank of the conditions matrix at any sampled
// configuration over F_p is at most the rank at general points in
// characteristic zero. Full column rank (Certified) therefore proves the
// system empty for general points. A rank deficit (Inconclusive) proves
// nothing about the general system.

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <random>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "error.hpp"
#include "lattice.hpp"
#include "modular.hpp"

namespace fatpoints {

inline constexpr std::uint64_t default_prime = 65537;
inline constexpr std::size_t default_max_attempts = 64;

// ---------------------------------------------------------------------------
// Monomials and conics

/// Exponents (i, j) of x^i y^j, i + j <= d, ordered by total degree then
/// descending power of x: 1, x, y, x^2, xy, y^2, ...
inline std::vector<std::pair<std::size_t, std::size_t>> monomial_exponents(std::size_t d)
{
   std::vector<std::pair<std::size_t, std::size_t>> out;
   out.reserve((d + 1) * (d + 2) / 2);
   for (std::size_t k = 0; k <= d; ++k)
      for (std::size_t i = k + 1; i-- > 0;) out.emplace_back(i, k - i);
   return out;
}

inline std::size_t monomial_count(std::size_t d) { return (d + 1) * (d + 2) / 2; }

struct Point2 {
   std::uint64_t x = 0;
   std::uint64_t y = 0;
   bool operator==(const Point2&) const = default;
   auto operator<=>(const Point2&) const = default;
};

struct Direction {
   std::uint64_t dx = 0;
   std::uint64_t dy = 0;
   bool operator==(const Direction&) const = default;
};

/// c0 + c1 x + c2 y + c3 x^2 + c4 xy + c5 y^2.
struct Conic {
   std::array<std::uint64_t, 6> coeffs{};
   Point2 known_point;  // used to parametrize the conic rationally

   std::uint64_t eval(const PrimeField& f, Point2 P) const
   {
      const auto& c = coeffs;
      std::uint64_t v = c[0];
      v = f.add(v, f.mul(c[1], P.x));
      v = f.add(v, f.mul(c[2], P.y));
      v = f.add(v, f.mul(c[3], f.mul(P.x, P.x)));
      v = f.add(v, f.mul(c[4], f.mul(P.x, P.y)));
      v = f.add(v, f.mul(c[5], f.mul(P.y, P.y)));
      return v;
   }

   std::pair<std::uint64_t, std::uint64_t> gradient(const PrimeField& f, Point2 P) const
   {
      const auto& c = coeffs;
      const auto fx = f.add(c[1], f.add(f.mul(f.mul(2, c[3]), P.x), f.mul(c[4], P.y)));
      const auto fy = f.add(c[2], f.add(f.mul(c[4], P.x), f.mul(f.mul(2, c[5]), P.y)));
      return {fx, fy};
   }

   /// Direction of the tangent line at P.
   Direction tangent(const PrimeField& f, Point2 P) const
   {
      const auto [fx, fy] = gradient(f, P);
      return {f.neg(fy), fx};
   }

   /// Determinant of the symmetric 3x3 matrix of the homogenized conic; zero iff degenerate.
   std::uint64_t discriminant(const PrimeField& f) const
   {
      const auto& c = coeffs;
      const auto half = f.inv(2);
      const std::uint64_t m[3][3] = {{c[3], f.mul(c[4], half), f.mul(c[1], half)},
                                     {f.mul(c[4], half), c[5], f.mul(c[2], half)},
                                     {f.mul(c[1], half), f.mul(c[2], half), c[0]}};
      auto minor = [&](int a, int b, int cc, int d) { return f.sub(f.mul(m[1][a], m[2][b]), f.mul(m[1][cc], m[2][d])); };
      std::uint64_t det = f.mul(m[0][0], minor(1, 2, 2, 1));
      det = f.sub(det, f.mul(m[0][1], minor(0, 2, 2, 0)));
      det = f.add(det, f.mul(m[0][2], minor(0, 1, 1, 0)));
      return det;
   }
};

// ---------------------------------------------------------------------------
// Configuration recipes

enum class DirectionRule { General, Tangent };

struct Placement {
   enum class Kind { General, OnCurve, InfNear };
   Kind kind = Kind::General;
   std::optional<std::size_t> curve;  // OnCurve, or InfNear with Tangent
   std::optional<std::size_t> base;   // InfNear: index of the pair's p entry
   DirectionRule direction = DirectionRule::General;

   static Placement general() { return {}; }
   static Placement on_curve(std::size_t c) { return {Kind::OnCurve, c, std::nullopt, DirectionRule::General}; }
   static Placement inf_near(std::size_t base) { return {Kind::InfNear, std::nullopt, base, DirectionRule::General}; }
   static Placement inf_near_tangent(std::size_t base, std::size_t c)
   {
      return {Kind::InfNear, c, base, DirectionRule::Tangent};
   }
};

/// An auxiliary conic through some anchors; the rest of its five defining
/// points are drawn at random.
struct CurveSpec {
   std::vector<std::size_t> through;
};

struct Configuration {
   std::uint64_t prime = default_prime;
   std::uint64_t seed = 1;
   std::size_t anchors = 0;
   std::vector<Placement> placements;  // one per expanded entry
   std::vector<CurveSpec> curves;
   std::size_t max_attempts = default_max_attempts;

   /// All points general; infinitely near directions general.
   static Configuration general(const PlaneSystem& s, std::uint64_t prime = default_prime, std::uint64_t seed = 1)
   {
      Configuration c;
      c.prime = prime;
      c.seed = seed;
      for (const auto& role : s.layout())
         c.placements.push_back(role.kind == EntryRole::Kind::PairNear ? Placement::inf_near(role.partner)
                                                                        : Placement::general());
      return c;
   }

   /// Eight pairs [k,k] on two conics through four common anchors, four pairs
   /// per conic, each direction tangent to its conic.
   static Configuration two_conics(const PlaneSystem& s, std::uint64_t prime = default_prime, std::uint64_t seed = 1)
   {
      Configuration c;
      c.prime = prime;
      c.seed = seed;
      c.anchors = 4;
      c.curves = {CurveSpec{{0, 1, 2, 3}}, CurveSpec{{0, 1, 2, 3}}};
      std::size_t pair_no = 0;
      const auto roles = s.layout();
      std::size_t pairs = 0;
      for (const auto& r : roles) pairs += r.kind == EntryRole::Kind::PairBase;
      for (const auto& role : roles) {
         if (role.kind == EntryRole::Kind::Free) {
            c.placements.push_back(Placement::general());
         } else if (role.kind == EntryRole::Kind::PairBase) {
            c.placements.push_back(Placement::on_curve(pair_no < (pairs + 1) / 2 ? 0 : 1));
         } else {
            c.placements.push_back(Placement::inf_near_tangent(role.partner, c.placements[role.partner].curve.value()));
            ++pair_no;
         }
      }
      return c;
   }

   Configuration with_seed(std::uint64_t s) const
   {
      Configuration c = *this;
      c.seed = s;
      return c;
   }
};

/// Checks that a recipe fits a system; throws ConfigError otherwise.
inline void validate_configuration(const PlaneSystem& s, const Configuration& cfg)
{
   const auto roles = s.layout();
   if (cfg.placements.size() != roles.size())
      throw ConfigError("configuration has " + std::to_string(cfg.placements.size()) + " placements, system expands to " +
                        std::to_string(roles.size()) + " entries");
   for (std::size_t c = 0; c < cfg.curves.size(); ++c) {
      const auto& through = cfg.curves[c].through;
      if (through.size() > 5) throw ConfigError("conic " + std::to_string(c) + " passes through more than 5 anchors");
      std::set<std::size_t> seen;
      for (auto id : through) {
         if (id >= cfg.anchors) throw ConfigError("conic " + std::to_string(c) + " references missing anchor " + std::to_string(id));
         if (!seen.insert(id).second) throw ConfigError("conic " + std::to_string(c) + " repeats anchor " + std::to_string(id));
      }
   }
   for (std::size_t i = 0; i < roles.size(); ++i) {
      const auto& pl = cfg.placements[i];
      const auto where = "placement " + std::to_string(i);
      if (pl.curve && *pl.curve >= cfg.curves.size()) throw ConfigError(where + " references a missing curve");
      switch (roles[i].kind) {
      case EntryRole::Kind::Free:
      case EntryRole::Kind::PairBase:
         if (pl.kind == Placement::Kind::InfNear)
            throw ConfigError(where + ": inf_near placement on a proper point (only first-order infinitely near points are supported)");
         if (pl.kind == Placement::Kind::OnCurve && !pl.curve) throw ConfigError(where + ": on_curve needs a curve");
         break;
      case EntryRole::Kind::PairNear:
         if (pl.kind != Placement::Kind::InfNear) throw ConfigError(where + ": the q entry of a pair needs an inf_near placement");
         if (!pl.base || *pl.base != roles[i].partner)
            throw ConfigError(where + ": inf_near base must be the pair's p entry " + std::to_string(roles[i].partner));
         if (pl.direction == DirectionRule::Tangent) {
            if (!pl.curve) throw ConfigError(where + ": tangent direction needs a curve");
            const auto& base = cfg.placements[*pl.base];
            if (base.kind != Placement::Kind::OnCurve || base.curve != pl.curve)
               throw ConfigError(where + ": tangent direction needs its base point on the same curve");
         }
         break;
      }
   }
}

// ---------------------------------------------------------------------------
// Sampling

/// One expanded entry. For the q entry of a pair, `point` repeats the base
/// point and `direction` holds the tangent direction of q.
struct SampledEntry {
   Point2 point;
   std::optional<Direction> direction;
};

struct SampledConfiguration {
   std::uint64_t prime = default_prime;
   std::vector<Point2> anchors;
   std::vector<Conic> curves;
   std::vector<SampledEntry> entries;
   std::size_t attempts = 0;
};

namespace detail {

class FieldSampler {
public:
   FieldSampler(std::uint64_t seed, std::uint64_t p) : gen_(seed), p_(p), limit_(std::numeric_limits<std::uint64_t>::max() -
                                                                                  std::numeric_limits<std::uint64_t>::max() % p)
   {
   }

   std::uint64_t element()
   {
      std::uint64_t v;
      do v = gen_();
      while (v >= limit_);
      return v % p_;
   }

   Point2 point() { return {element(), element()}; }

private:
   std::mt19937_64 gen_;
   std::uint64_t p_;
   std::uint64_t limit_;
};

inline std::optional<Conic> conic_through(const PrimeField& f, const std::vector<Point2>& pts)
{
   ModMatrix m(pts.size(), 6);
   for (std::size_t r = 0; r < pts.size(); ++r) {
      const auto [x, y] = pts[r];
      const std::uint64_t row[6] = {1, x, y, f.mul(x, x), f.mul(x, y), f.mul(y, y)};
      for (std::size_t c = 0; c < 6; ++c) m(r, c) = row[c];
   }
   const auto ker = kernel_mod_p(m, f);
   if (ker.size() != 1) return std::nullopt;
   Conic conic;
   for (std::size_t c = 0; c < 6; ++c) conic.coeffs[c] = ker[0][c];
   conic.known_point = pts.front();
   if (conic.discriminant(f) == 0) return std::nullopt;
   return conic;
}

// Second intersection of the line through the known point with slope t.
inline std::optional<Point2> point_on_conic(const PrimeField& f, const Conic& conic, std::uint64_t t)
{
   const Point2 P = conic.known_point;
   const auto [fx, fy] = conic.gradient(f, P);
   const auto& c = conic.coeffs;
   const auto lin = f.add(fx, f.mul(t, fy));
   const auto quad = f.add(c[3], f.add(f.mul(c[4], t), f.mul(c[5], f.mul(t, t))));
   if (quad == 0 || lin == 0) return std::nullopt;
   const auto s = f.neg(f.mul(lin, f.inv(quad)));
   const Point2 Q{f.add(P.x, s), f.add(P.y, f.mul(s, t))};
   if (conic.eval(f, Q) != 0) throw std::logic_error("point_on_conic: parametrization left the conic");
   return Q;
}

inline bool conics_proportional(const PrimeField& f, const Conic& a, const Conic& b)
{
   for (std::size_t i = 0; i < 6; ++i)
      for (std::size_t j = i + 1; j < 6; ++j)
         if (f.mul(a.coeffs[i], b.coeffs[j]) != f.mul(a.coeffs[j], b.coeffs[i])) return false;
   return true;
}

inline std::optional<SampledConfiguration> try_sample(const PlaneSystem& s, const Configuration& cfg, const PrimeField& f,
                                                      FieldSampler& rng)
{
   SampledConfiguration out;
   out.prime = f.modulus();
   std::set<Point2> used;
   for (std::size_t i = 0; i < cfg.anchors; ++i) {
      const auto P = rng.point();
      if (!used.insert(P).second) return std::nullopt;
      out.anchors.push_back(P);
   }
   for (const auto& spec : cfg.curves) {
      std::vector<Point2> pts;
      for (auto id : spec.through) pts.push_back(out.anchors[id]);
      while (pts.size() < 5) {
         const auto P = rng.point();
         if (used.count(P)) return std::nullopt;
         pts.push_back(P);
      }
      auto conic = conic_through(f, pts);
      if (!conic) return std::nullopt;
      for (const auto& prev : out.curves)
         if (conics_proportional(f, prev, *conic)) return std::nullopt;
      out.curves.push_back(*conic);
   }

   const auto roles = s.layout();
   for (std::size_t i = 0; i < roles.size(); ++i) {
      const auto& pl = cfg.placements[i];
      SampledEntry entry;
      if (roles[i].kind == EntryRole::Kind::PairNear) {
         entry.point = out.entries[roles[i].partner].point;
         Direction dir;
         if (pl.direction == DirectionRule::Tangent) {
            dir = out.curves[*pl.curve].tangent(f, entry.point);
         } else {
            dir = {rng.element(), rng.element()};
         }
         if (dir.dx == 0 && dir.dy == 0) return std::nullopt;
         entry.direction = dir;
      } else {
         if (pl.kind == Placement::Kind::OnCurve) {
            const auto Q = point_on_conic(f, out.curves[*pl.curve], rng.element());
            if (!Q) return std::nullopt;
            entry.point = *Q;
            for (std::size_t c = 0; c < out.curves.size(); ++c)
               if (c != *pl.curve && out.curves[c].eval(f, *Q) == 0) return std::nullopt;
         } else {
            entry.point = rng.point();
         }
         if (!used.insert(entry.point).second) return std::nullopt;
      }
      out.entries.push_back(entry);
   }
   return out;
}

}  // namespace detail

/// Draws concrete coordinates for a recipe. Deterministic in cfg.seed.
/// Throws ResamplingExhausted when every attempt hits a coincidence.
inline SampledConfiguration sample_configuration(const PlaneSystem& s, const Configuration& cfg)
{
   validate_configuration(s, cfg);
   const PrimeField field(cfg.prime);
   detail::FieldSampler rng(cfg.seed, cfg.prime);
   for (std::size_t attempt = 1; attempt <= cfg.max_attempts; ++attempt) {
      if (auto sampled = detail::try_sample(s, cfg, field, rng)) {
         sampled->attempts = attempt;
         return *sampled;
      }
   }
   throw ResamplingExhausted("sampling failed after " + std::to_string(cfg.max_attempts) + " attempts over F_" +
                             std::to_string(cfg.prime) + " (prime too small?)");
}

// ---------------------------------------------------------------------------
// Conditions matrix

struct RowBlock {
   std::size_t entry;      // expanded entry index
   std::size_t first_row;
   std::size_t count;
};

struct ConditionsMatrix {
   std::uint64_t prime;
   std::size_t degree;
   ModMatrix entries;
   std::vector<RowBlock> blocks;

   std::size_t rows() const { return entries.rows(); }
   std::size_t cols() const { return entries.cols(); }
};

/// Marker returned instead of a matrix for negative degree.
struct EmptySystem {};

namespace detail {

inline std::size_t condition_mult(const Integer& m)
{
   if (m < 0) throw std::invalid_argument("interpolation needs nonnegative multiplicities, got " + m.str());
   if (m > Integer(100'000)) throw std::length_error("multiplicity too large for interpolation");
   return static_cast<std::size_t>(m);
}

inline std::size_t triangular(std::size_t m) { return m * (m + 1) / 2; }

inline std::vector<std::size_t> entry_row_counts(const PlaneSystem& s)
{
   const auto lattice = s.expand();
   std::vector<std::size_t> counts;
   for (const auto& m : lattice.mults()) counts.push_back(triangular(condition_mult(m)));
   return counts;
}

/// Generates condition rows entry by entry; `sink(entry, row)` returns false to stop.
class RowGenerator {
public:
   RowGenerator(const PrimeField& f, std::size_t d) : f_(f), d_(d), monos_(monomial_exponents(d)), binom_(d + 1)
   {
      for (std::size_t n = 0; n <= d; ++n) {
         binom_[n].assign(n + 1, 1);
         for (std::size_t k = 1; k < n; ++k) binom_[n][k] = f_.add(binom_[n - 1][k - 1], binom_[n - 1][k]);
      }
   }

   std::size_t cols() const { return monos_.size(); }

   /// Rows for multiplicity m at P: Taylor coefficients of order < m.
   template <class Sink>
   bool proper_point(std::size_t entry, Point2 P, std::size_t m, Sink& sink)
   {
      std::vector<std::uint64_t> row(cols());
      const auto px = powers(P.x), py = powers(P.y);
      for (std::size_t k = 0; k < m; ++k) {
         for (std::size_t r = k + 1; r-- > 0;) {
            const std::size_t s = k - r;
            std::fill(row.begin(), row.end(), 0);
            if (k <= d_) {
               for (std::size_t c = 0; c < cols(); ++c) {
                  const auto [i, j] = monos_[c];
                  if (i >= r && j >= s) row[c] = taylor(i, j, r, s, px, py);
               }
            }
            if (!sink(entry, std::span<const std::uint64_t>(row))) return false;
         }
      }
      return true;
   }

   /// Rows for multiplicity b at q, infinitely near P in direction D, after
   /// multiplicity a at P. Chart: (u, v) = s (D + w e), divide by s^a, then
   /// take coefficients of s^r w^t with r + t < b.
   template <class Sink>
   bool near_point(std::size_t entry, Point2 P, Direction D, std::size_t a, std::size_t b, Sink& sink)
   {
      std::vector<std::uint64_t> row(cols());
      const auto px = powers(P.x), py = powers(P.y);
      const auto dxp = powers(D.dx), dyp = powers(D.dy);
      const bool e_is_y = D.dx != 0;  // e = (0,1) when dx != 0, else e = (1,0)
      for (std::size_t rr = 0; rr < b; ++rr) {
         const std::size_t k = a + rr;
         for (std::size_t t = 0; t + rr < b; ++t) {
            std::fill(row.begin(), row.end(), 0);
            if (k <= d_) {
               for (std::size_t c = 0; c < cols(); ++c) {
                  const auto [i, j] = monos_[c];
                  std::uint64_t acc = 0;
                  for (std::size_t r = 0; r <= k; ++r) {
                     const std::size_t s = k - r;
                     if (r > i || s > j) continue;
                     std::uint64_t w;
                     if (e_is_y) {
                        if (t > s) continue;
                        w = f_.mul(dxp[r], f_.mul(binom_[s][t], dyp[s - t]));
                     } else {
                        if (t > r) continue;
                        w = f_.mul(f_.mul(binom_[r][t], dxp[r - t]), dyp[s]);
                     }
                     if (w == 0) continue;
                     acc = f_.add(acc, f_.mul(taylor(i, j, r, s, px, py), w));
                  }
                  row[c] = acc;
               }
            }
            if (!sink(entry, std::span<const std::uint64_t>(row))) return false;
         }
      }
      return true;
   }

private:
   std::vector<std::uint64_t> powers(std::uint64_t base) const
   {
      std::vector<std::uint64_t> out(d_ + 1, 1);
      for (std::size_t e = 1; e <= d_; ++e) out[e] = f_.mul(out[e - 1], base);
      return out;
   }

   // Coefficient of u^r v^s in (px + u)^i (py + v)^j.
   std::uint64_t taylor(std::size_t i, std::size_t j, std::size_t r, std::size_t s, const std::vector<std::uint64_t>& px,
                        const std::vector<std::uint64_t>& py) const
   {
      return f_.mul(f_.mul(binom_[i][r], px[i - r]), f_.mul(binom_[j][s], py[j - s]));
   }

   PrimeField f_;
   std::size_t d_;
   std::vector<std::pair<std::size_t, std::size_t>> monos_;
   std::vector<std::vector<std::uint64_t>> binom_;
};

inline std::size_t checked_degree(const PlaneSystem& s)
{
   if (s.degree() > Integer(2000)) throw std::length_error("degree too large for dense interpolation");
   return static_cast<std::size_t>(s.degree());
}

template <class Sink>
void for_each_condition_row(const PlaneSystem& s, const SampledConfiguration& pts, const PrimeField& f, Sink&& sink)
{
   const std::size_t d = checked_degree(s);
   const auto lattice = s.expand();
   const auto roles = s.layout();
   if (pts.entries.size() != roles.size()) throw ConfigError("sampled point list does not match the system");
   RowGenerator gen(f, d);
   for (std::size_t i = 0; i < roles.size(); ++i) {
      const std::size_t m = condition_mult(lattice.mults()[i]);
      bool more;
      if (roles[i].kind == EntryRole::Kind::PairNear) {
         const std::size_t a = condition_mult(lattice.mults()[roles[i].partner]);
         more = gen.near_point(i, pts.entries[i].point, pts.entries[i].direction.value(), a, m, sink);
      } else {
         more = gen.proper_point(i, pts.entries[i].point, m, sink);
      }
      if (!more) return;
   }
}

}  // namespace detail

/// Dense conditions matrix; EmptySystem for negative degree.
inline std::variant<ConditionsMatrix, EmptySystem> build_conditions_matrix(const PlaneSystem& s, const SampledConfiguration& pts,
                                                                           std::uint64_t prime)
{
   if (s.degree() < 0) return EmptySystem{};
   const PrimeField f(prime);
   const std::size_t d = detail::checked_degree(s);
   const auto counts = detail::entry_row_counts(s);
   std::size_t rows = 0;
   std::vector<RowBlock> blocks;
   for (std::size_t i = 0; i < counts.size(); ++i) {
      blocks.push_back({i, rows, counts[i]});
      rows += counts[i];
   }
   const std::size_t cols = monomial_count(d);
   if (static_cast<double>(rows) * static_cast<double>(cols) > 2e8)
      throw std::length_error("conditions matrix too large to materialize");
   ConditionsMatrix out{prime, d, ModMatrix(rows, cols), std::move(blocks)};
   std::size_t r = 0;
   detail::for_each_condition_row(s, pts, f, [&](std::size_t, std::span<const std::uint64_t> row) {
      std::copy(row.begin(), row.end(), out.entries.row(r).begin());
      ++r;
      return true;
   });
   return out;
}

inline std::size_t rank_mod_p(const ConditionsMatrix& m) { return rank_mod_p(m.entries, PrimeField(m.prime)); }

enum class InterpolationVerdict { Certified, Inconclusive };

inline const char* to_string(InterpolationVerdict v)
{
   return v == InterpolationVerdict::Certified ? "Certified" : "Inconclusive";
}

struct InterpolationResult {
   InterpolationVerdict verdict = InterpolationVerdict::Certified;
   std::size_t rows = 0;
   std::size_t cols = 0;
   std::size_t rank = 0;
   std::int64_t estimated_dimension = -1;  // cols - rank - 1
   std::uint64_t seed = 0;
};

namespace detail {

inline std::size_t streamed_rank(const PlaneSystem& s, const SampledConfiguration& pts, const PrimeField& f)
{
   RowGenerator probe(f, checked_degree(s));
   EchelonBasis basis(f, probe.cols());
   for_each_condition_row(s, pts, f, [&](std::size_t, std::span<const std::uint64_t> row) {
      basis.insert(row);
      return !basis.full();
   });
   return basis.rank();
}

}  // namespace detail

/// Certified iff the conditions matrix at the sampled configuration has full
/// column rank. Inconclusive carries cols - rank - 1.
inline InterpolationResult certify_empty_interpolation(const PlaneSystem& s, const Configuration& recipe)
{
   InterpolationResult res;
   res.seed = recipe.seed;
   if (s.degree() < 0) return res;
   const PrimeField f(recipe.prime);
   const auto pts = sample_configuration(s, recipe);
   const auto counts = detail::entry_row_counts(s);
   for (auto c : counts) res.rows += c;
   res.cols = monomial_count(detail::checked_degree(s));
   res.rank = detail::streamed_rank(s, pts, f);
   res.estimated_dimension = static_cast<std::int64_t>(res.cols) - static_cast<std::int64_t>(res.rank) - 1;
   res.verdict = res.rank == res.cols ? InterpolationVerdict::Certified : InterpolationVerdict::Inconclusive;
   return res;
}

/// Max over `trials` seeds (seed, seed+1, ...) of cols - rank - 1.
inline std::int64_t estimate_dimension(const PlaneSystem& s, const Configuration& recipe, std::size_t trials)
{
   if (trials < 1) throw std::invalid_argument("estimate_dimension: trials must be positive");
   std::int64_t best = std::numeric_limits<std::int64_t>::min();
   for (std::size_t t = 0; t < trials; ++t)
      best = std::max(best, certify_empty_interpolation(s, recipe.with_seed(recipe.seed + t)).estimated_dimension);
   return best;
}

/// Kernel of the materialized conditions matrix at the sampled configuration.
/// Each vector lists coefficients in monomial_exponents(d) order.
inline std::vector<std::vector<std::uint64_t>> kernel_vectors(const PlaneSystem& s, const SampledConfiguration& pts,
                                                             std::uint64_t prime)
{
   const auto built = build_conditions_matrix(s, pts, prime);
   if (std::holds_alternative<EmptySystem>(built)) return {};
   const auto& m = std::get<ConditionsMatrix>(built);
   return kernel_mod_p(m.entries, PrimeField(prime));
}

}  // namespace fatpoints
