#pragma once

// Degree/multiplicity vectors in the Picard lattice of an n-fold blow-up of
// the plane, with intersection form diag(1, -1, ..., -1).

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <variant>
#include <vector>

#include "integer.hpp"

namespace fatpoints {

struct FreePoint {
   Integer mult;
   bool operator==(const FreePoint&) const = default;
};

/// Multiplicity `a` at p and `b` at q infinitely near p (first order).
/// Lattice-wise this subtracts a(F+G) + bF, i.e. entries (a, b) against the
/// total transforms of the two exceptional curves.
struct InfNearPair {
   Integer a;
   Integer b;
   bool operator==(const InfNearPair&) const = default;
};

class PointSpec {
public:
   using Kind = std::variant<FreePoint, InfNearPair>;

   PointSpec(Kind kind, std::size_t count) : kind_(std::move(kind)), count_(count)
   {
      if (count_ == 0) throw std::invalid_argument("PointSpec: count must be at least 1");
   }

   static PointSpec free(Integer mult, std::size_t count = 1)
   {
      return PointSpec(FreePoint{std::move(mult)}, count);
   }
   static PointSpec pair(Integer a, Integer b, std::size_t count = 1)
   {
      return PointSpec(InfNearPair{std::move(a), std::move(b)}, count);
   }

   const Kind& kind() const noexcept { return kind_; }
   std::size_t count() const noexcept { return count_; }
   bool is_pair() const noexcept { return std::holds_alternative<InfNearPair>(kind_); }

   /// Lattice entries contributed by one copy.
   std::size_t width() const noexcept { return is_pair() ? 2 : 1; }

   /// a >= b >= 0 for pairs; free points always pass.
   bool proximity_ok() const
   {
      if (const auto* p = std::get_if<InfNearPair>(&kind_)) return p->a >= p->b && p->b >= 0;
      return true;
   }

   bool operator==(const PointSpec&) const = default;

private:
   Kind kind_;
   std::size_t count_;
};

/// Role of one expanded lattice entry.
struct EntryRole {
   enum class Kind { Free, PairBase, PairNear };
   Kind kind;
   std::size_t spec_index;  // index into PlaneSystem::points
   std::size_t partner;     // the other entry of a pair; equals own index for free points
};

class LatticeClass {
public:
   LatticeClass() = default;
   LatticeClass(Integer d, std::vector<Integer> mults) : d_(std::move(d)), mults_(std::move(mults)) {}

   /// K = (-3; -1^n).
   static LatticeClass canonical(std::size_t n) { return LatticeClass(-3, std::vector<Integer>(n, -1)); }
   static LatticeClass zero(std::size_t n) { return LatticeClass(0, std::vector<Integer>(n, 0)); }

   const Integer& degree() const noexcept { return d_; }
   const std::vector<Integer>& mults() const noexcept { return mults_; }
   std::vector<Integer>& mults() noexcept { return mults_; }
   Integer& degree() noexcept { return d_; }
   std::size_t size() const noexcept { return mults_.size(); }

   LatticeClass padded(std::size_t n) const
   {
      LatticeClass out = *this;
      if (out.mults_.size() < n) out.mults_.resize(n, Integer(0));
      return out;
   }

   LatticeClass operator+(const LatticeClass& other) const
   {
      const std::size_t n = std::max(size(), other.size());
      LatticeClass a = padded(n), b = other.padded(n);
      a.d_ += b.d_;
      for (std::size_t i = 0; i < n; ++i) a.mults_[i] += b.mults_[i];
      return a;
   }

   LatticeClass operator*(const Integer& k) const
   {
      LatticeClass out = *this;
      out.d_ *= k;
      for (auto& m : out.mults_) m *= k;
      return out;
   }

   bool operator==(const LatticeClass&) const = default;

private:
   Integer d_ = 0;
   std::vector<Integer> mults_;
};

/// dd' - sum m_i m_i', padding the shorter vector with zeros.
inline Integer pairing(const LatticeClass& x, const LatticeClass& y)
{
   Integer value = x.degree() * y.degree();
   const std::size_t n = std::min(x.size(), y.size());
   for (std::size_t i = 0; i < n; ++i) value -= x.mults()[i] * y.mults()[i];
   return value;
}

inline Integer self_intersection(const LatticeClass& x) { return pairing(x, x); }

/// L.K = -3d + sum m_i.
inline Integer canonical_degree(const LatticeClass& x) { return pairing(x, LatticeClass::canonical(x.size())); }

/// Riemann-Roch value (L^2 - L.K)/2; always an integer.
inline Integer virtual_dimension(const LatticeClass& x)
{
   return (self_intersection(x) - canonical_degree(x)) / 2;
}

class PlaneSystem {
public:
   PlaneSystem() = default;
   PlaneSystem(Integer degree, std::vector<PointSpec> points) : degree_(std::move(degree)), points_(std::move(points)) {}

   /// L_d(m^n).
   static PlaneSystem homogeneous(Integer d, Integer m, std::size_t n)
   {
      return PlaneSystem(std::move(d), {PointSpec::free(std::move(m), n)});
   }

   const Integer& degree() const noexcept { return degree_; }
   const std::vector<PointSpec>& points() const noexcept { return points_; }

   std::size_t expanded_size() const
   {
      std::size_t n = 0;
      for (const auto& p : points_) n += p.count() * p.width();
      return n;
   }

   /// Free(m) -> one entry m; InfNearPair(a,b) -> entries a then b.
   LatticeClass expand() const
   {
      std::vector<Integer> mults;
      mults.reserve(expanded_size());
      for (const auto& p : points_) {
         for (std::size_t c = 0; c < p.count(); ++c) {
            if (const auto* f = std::get_if<FreePoint>(&p.kind())) {
               mults.push_back(f->mult);
            } else {
               const auto& pr = std::get<InfNearPair>(p.kind());
               mults.push_back(pr.a);
               mults.push_back(pr.b);
            }
         }
      }
      return LatticeClass(degree_, std::move(mults));
   }

   std::vector<EntryRole> layout() const
   {
      std::vector<EntryRole> roles;
      roles.reserve(expanded_size());
      for (std::size_t s = 0; s < points_.size(); ++s) {
         for (std::size_t c = 0; c < points_[s].count(); ++c) {
            const std::size_t i = roles.size();
            if (points_[s].is_pair()) {
               roles.push_back({EntryRole::Kind::PairBase, s, i + 1});
               roles.push_back({EntryRole::Kind::PairNear, s, i});
            } else {
               roles.push_back({EntryRole::Kind::Free, s, i});
            }
         }
      }
      return roles;
   }

   bool proximity_ok() const
   {
      return std::all_of(points_.begin(), points_.end(), [](const PointSpec& p) { return p.proximity_ok(); });
   }

   bool operator==(const PlaneSystem&) const = default;

private:
   Integer degree_ = 0;
   std::vector<PointSpec> points_;
};

inline Integer virtual_dimension(const PlaneSystem& s) { return virtual_dimension(s.expand()); }

/// max{-1, d(d+3)/2 - n m(m+1)/2}.
inline Integer expected_dimension_homogeneous(const Integer& d, const Integer& m, const Integer& n)
{
   if (d < 0 || m < 0 || n < 0) throw std::invalid_argument("expected_dimension_homogeneous: negative input");
   const Integer value = d * (d + 3) / 2 - n * (m * (m + 1) / 2);
   return value < -1 ? Integer(-1) : value;
}

/// L^2 = L.K = -1.
inline bool is_minus_one_class(const LatticeClass& x)
{
   return self_intersection(x) == -1 && canonical_degree(x) == -1;
}

inline bool is_minus_one_class(const PlaneSystem& s) { return is_minus_one_class(s.expand()); }

/// Multiplies the degree and every multiplicity by k. If the scaled system is
/// empty for general points, so is the original.
inline PlaneSystem scale_system(const PlaneSystem& s, const Integer& k)
{
   if (k < 1) throw std::invalid_argument("scale_system: factor must be positive");
   std::vector<PointSpec> points;
   points.reserve(s.points().size());
   for (const auto& p : s.points()) {
      if (const auto* f = std::get_if<FreePoint>(&p.kind())) {
         points.push_back(PointSpec::free(f->mult * k, p.count()));
      } else {
         const auto& pr = std::get<InfNearPair>(p.kind());
         points.push_back(PointSpec::pair(pr.a * k, pr.b * k, p.count()));
      }
   }
   return PlaneSystem(s.degree() * k, std::move(points));
}

}  // namespace fatpoints
