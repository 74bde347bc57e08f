#pragma once

// Quadratic transformations acting on (d; m_1, ..., m_n) and reduction of a
// class to standard form.

#include <algorithm>
#include <array>
#include <cstddef>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lattice.hpp"

namespace fatpoints {

/// d' = 2d - m_i - m_j - m_k, m_i' = d - m_j - m_k (and cyclically).
inline LatticeClass quadratic_transform(const LatticeClass& c, std::size_t i, std::size_t j, std::size_t k)
{
   const std::size_t n = c.size();
   if (i >= n || j >= n || k >= n) throw std::out_of_range("quadratic_transform: index out of range");
   if (i == j || j == k || i == k) throw std::out_of_range("quadratic_transform: indices must be distinct");
   const auto& m = c.mults();
   const Integer& d = c.degree();
   LatticeClass out = c;
   out.degree() = 2 * d - m[i] - m[j] - m[k];
   out.mults()[i] = d - m[j] - m[k];
   out.mults()[j] = d - m[i] - m[k];
   out.mults()[k] = d - m[i] - m[j];
   return out;
}

struct TransformStep {
   enum class Kind { Quadratic, Clamp };
   Kind kind;
   std::vector<std::size_t> indices;  // three for Quadratic, one for Clamp
   LatticeClass before;
   LatticeClass after;
};

using TransformLog = std::vector<TransformStep>;

enum class ReductionVerdict { StandardForm, NegativeDegree };

inline const char* to_string(ReductionVerdict v)
{
   return v == ReductionVerdict::StandardForm ? "StandardForm" : "NegativeDegree";
}

struct ReductionResult {
   LatticeClass final_class;
   TransformLog log;
   ReductionVerdict verdict;
};

/// Re-applies every step to `start`; throws if a recorded class disagrees.
inline LatticeClass replay(const LatticeClass& start, const TransformLog& log)
{
   LatticeClass cur = start;
   for (const auto& step : log) {
      if (!(step.before == cur.padded(step.before.size()))) throw std::logic_error("replay: log does not match class");
      cur = step.before;
      if (step.kind == TransformStep::Kind::Quadratic) {
         cur = quadratic_transform(cur, step.indices.at(0), step.indices.at(1), step.indices.at(2));
      } else {
         cur.mults().at(step.indices.at(0)) = 0;
      }
      if (!(cur == step.after)) throw std::logic_error("replay: step result mismatch");
   }
   return cur;
}

namespace detail {

// `pair_of[i]` is the partner index for entries of an infinitely near pair,
// or i itself. `eligible[i]` marks entries allowed in a triple.
inline ReductionResult reduce_impl(LatticeClass c, std::vector<std::size_t> pair_of, std::vector<bool> eligible)
{
   while (c.size() < 3) {
      pair_of.push_back(c.size());
      eligible.push_back(true);
      c.mults().push_back(0);
   }
   ReductionResult res{c, {}, ReductionVerdict::StandardForm};
   const std::size_t n = c.size();
   while (true) {
      LatticeClass& cur = res.final_class;
      if (cur.degree() < 0) {
         res.verdict = ReductionVerdict::NegativeDegree;
         return res;
      }
      for (std::size_t i = 0; i < n; ++i) {
         if (cur.mults()[i] < 0) {
            LatticeClass before = cur;
            cur.mults()[i] = 0;
            res.log.push_back({TransformStep::Kind::Clamp, {i}, std::move(before), cur});
         }
      }
      std::vector<std::size_t> order;
      for (std::size_t i = 0; i < n; ++i)
         if (eligible[i]) order.push_back(i);
      std::stable_sort(order.begin(), order.end(),
                       [&](std::size_t a, std::size_t b) { return cur.mults()[a] > cur.mults()[b]; });
      std::optional<std::array<std::size_t, 3>> triple;
      const auto separates = [&](std::array<std::size_t, 3> t) {
         for (auto x : t) {
            if (pair_of[x] == x) continue;
            if (std::find(t.begin(), t.end(), pair_of[x]) == t.end()) return true;
         }
         return false;
      };
      for (std::size_t a = 0; a < order.size() && !triple; ++a)
         for (std::size_t b = a + 1; b < order.size() && !triple; ++b)
            for (std::size_t k = b + 1; k < order.size() && !triple; ++k) {
               const std::array<std::size_t, 3> t{order[a], order[b], order[k]};
               if (!separates(t)) triple = t;
            }
      if (!triple) return res;
      const auto [i, j, k] = *triple;
      if (cur.mults()[i] + cur.mults()[j] + cur.mults()[k] <= cur.degree()) return res;
      LatticeClass before = cur;
      cur = quadratic_transform(cur, i, j, k);
      res.log.push_back({TransformStep::Kind::Quadratic, {i, j, k}, std::move(before), cur});
   }
}

}  // namespace detail

/// Transforms at the three largest multiplicities (ties: lowest index) while
/// their sum exceeds the degree, clamping negative multiplicities to zero.
/// NegativeDegree means the system is empty for general points. Classes with
/// fewer than three entries are padded with zeros.
inline ReductionResult cremona_reduce(const LatticeClass& c)
{
   std::vector<std::size_t> pair_of(c.size());
   std::iota(pair_of.begin(), pair_of.end(), std::size_t{0});
   return detail::reduce_impl(c, std::move(pair_of), std::vector<bool>(c.size(), true));
}

/// As above, but entries of an infinitely near pair take part only when the
/// pair satisfies a >= b >= 0, and only together.
inline ReductionResult cremona_reduce(const PlaneSystem& s)
{
   const auto roles = s.layout();
   std::vector<std::size_t> pair_of(roles.size());
   std::vector<bool> eligible(roles.size());
   for (std::size_t i = 0; i < roles.size(); ++i) {
      pair_of[i] = roles[i].partner;
      eligible[i] = s.points()[roles[i].spec_index].proximity_ok();
   }
   return detail::reduce_impl(s.expand(), std::move(pair_of), std::move(eligible));
}

struct EquivalenceReport {
   Integer lhs_virtual_dimension;
   Integer rhs_virtual_dimension;
   Integer lhs_self_intersection;
   Integer rhs_self_intersection;
   Integer lhs_canonical_degree;
   Integer rhs_canonical_degree;
   bool virtual_dimension_equal;
   bool quadratic_form_equal;  // L^2 and L.K both agree
};

/// Necessary conditions for Cremona equivalence; equivalence itself is not re-derived.
inline EquivalenceReport check_equivalence_invariants(const PlaneSystem& lhs, const PlaneSystem& rhs)
{
   const auto l = lhs.expand(), r = rhs.expand();
   EquivalenceReport rep{virtual_dimension(l), virtual_dimension(r), self_intersection(l), self_intersection(r),
                         canonical_degree(l),  canonical_degree(r),  false,                false};
   rep.virtual_dimension_equal = rep.lhs_virtual_dimension == rep.rhs_virtual_dimension;
   rep.quadratic_form_equal =
      rep.lhs_self_intersection == rep.rhs_self_intersection && rep.lhs_canonical_degree == rep.rhs_canonical_degree;
   return rep;
}

}  // namespace fatpoints
