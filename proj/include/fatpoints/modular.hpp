#pragma once

// Dense linear algebra over a prime field F_p with p < 2^32.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace fatpoints {

inline bool is_prime(std::uint64_t n)
{
   if (n < 2) return false;
   for (std::uint64_t f = 2; f * f <= n; ++f)
      if (n % f == 0) return false;
   return true;
}

class PrimeField {
public:
   using Element = std::uint64_t;

   explicit PrimeField(std::uint64_t p) : p_(p)
   {
      if (p < 3 || p >= (std::uint64_t{1} << 32) || !is_prime(p))
         throw std::invalid_argument("PrimeField: modulus must be an odd prime below 2^32, got " + std::to_string(p));
   }

   std::uint64_t modulus() const noexcept { return p_; }

   Element reduce(std::int64_t v) const
   {
      const auto p = static_cast<std::int64_t>(p_);
      std::int64_t r = v % p;
      return static_cast<Element>(r < 0 ? r + p : r);
   }
   Element add(Element a, Element b) const { return (a + b) % p_; }
   Element sub(Element a, Element b) const { return (a + p_ - b) % p_; }
   Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
   Element mul(Element a, Element b) const { return (a * b) % p_; }

   Element pow(Element base, std::uint64_t e) const
   {
      Element result = 1;
      base %= p_;
      while (e) {
         if (e & 1) result = mul(result, base);
         base = mul(base, base);
         e >>= 1;
      }
      return result;
   }

   Element inv(Element a) const
   {
      if (a % p_ == 0) throw std::domain_error("PrimeField: inverse of zero");
      return pow(a, p_ - 2);
   }

   bool operator==(const PrimeField&) const = default;

private:
   std::uint64_t p_;
};

/// Row-major dense matrix of field elements.
class ModMatrix {
public:
   ModMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

   std::size_t rows() const noexcept { return rows_; }
   std::size_t cols() const noexcept { return cols_; }

   std::uint64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
   std::uint64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

   std::span<std::uint64_t> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
   std::span<const std::uint64_t> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

   bool operator==(const ModMatrix&) const = default;

private:
   std::size_t rows_;
   std::size_t cols_;
   std::vector<std::uint64_t> data_;
};

/// Incremental row echelon basis. Rows are inserted one at a time and reduced
/// against the current basis; full() turns true once the rank hits cols.
class EchelonBasis {
public:
   EchelonBasis(const PrimeField& field, std::size_t cols) : field_(field), cols_(cols)
   {
      const std::uint64_t p = field_.modulus();
      const std::uint64_t sq = (p - 1) * (p - 1);
      lazy_budget_ = std::max<std::uint64_t>(1, (std::numeric_limits<std::uint64_t>::max() - p) / sq);
   }

   std::size_t rank() const noexcept { return pivots_.size(); }
   std::size_t cols() const noexcept { return cols_; }
   bool full() const noexcept { return rank() == cols_; }

   /// Returns true iff the row was independent of the basis.
   bool insert(std::span<const std::uint64_t> row)
   {
      if (row.size() != cols_) throw std::invalid_argument("EchelonBasis: row length mismatch");
      if (full()) return false;
      const std::uint64_t p = field_.modulus();
      work_.assign(row.begin(), row.end());
      std::uint64_t pending = 0;
      // Basis rows are kept sorted by pivot column, so each pivot entry of
      // work_ is final by the time it is read.
      for (std::size_t k = 0; k < pivots_.size(); ++k) {
         const std::size_t c = pivots_[k];
         const std::uint64_t f = work_[c] % p;
         if (f == 0) continue;
         const std::uint64_t scale = p - f;
         const std::uint64_t* b = basis_.data() + k * cols_;
         if (pending == lazy_budget_) {
            for (std::size_t j = c; j < cols_; ++j) work_[j] %= p;
            pending = 0;
         }
         for (std::size_t j = c; j < cols_; ++j) work_[j] += scale * b[j];
         ++pending;
      }
      std::size_t lead = cols_;
      for (std::size_t j = 0; j < cols_; ++j) {
         work_[j] %= p;
         if (lead == cols_ && work_[j] != 0) lead = j;
      }
      if (lead == cols_) return false;
      const std::uint64_t inv = field_.inv(work_[lead]);
      for (std::size_t j = lead; j < cols_; ++j) work_[j] = field_.mul(work_[j], inv);
      const auto at = std::lower_bound(pivots_.begin(), pivots_.end(), lead) - pivots_.begin();
      pivots_.insert(pivots_.begin() + at, lead);
      basis_.insert(basis_.begin() + static_cast<std::ptrdiff_t>(at * cols_), work_.begin(), work_.end());
      return true;
   }

private:
   PrimeField field_;
   std::size_t cols_;
   std::uint64_t lazy_budget_;
   std::vector<std::size_t> pivots_;
   std::vector<std::uint64_t> basis_;
   std::vector<std::uint64_t> work_;
};

/// Exact rank by Gaussian elimination over F_p.
inline std::size_t rank_mod_p(const ModMatrix& m, const PrimeField& field)
{
   EchelonBasis basis(field, m.cols());
   for (std::size_t r = 0; r < m.rows() && !basis.full(); ++r) basis.insert(m.row(r));
   return basis.rank();
}

/// Basis of {v : M v = 0}, read off the reduced row echelon form.
inline std::vector<std::vector<std::uint64_t>> kernel_mod_p(const ModMatrix& m, const PrimeField& field)
{
   ModMatrix a = m;
   const std::size_t rows = a.rows(), cols = a.cols();
   std::vector<std::size_t> pivot_cols;
   std::size_t r = 0;
   for (std::size_t c = 0; c < cols && r < rows; ++c) {
      std::size_t sel = r;
      while (sel < rows && a(sel, c) == 0) ++sel;
      if (sel == rows) continue;
      if (sel != r)
         for (std::size_t j = 0; j < cols; ++j) std::swap(a(sel, j), a(r, j));
      const auto inv = field.inv(a(r, c));
      for (std::size_t j = 0; j < cols; ++j) a(r, j) = field.mul(a(r, j), inv);
      for (std::size_t i = 0; i < rows; ++i) {
         if (i == r || a(i, c) == 0) continue;
         const auto f = a(i, c);
         for (std::size_t j = 0; j < cols; ++j) a(i, j) = field.sub(a(i, j), field.mul(f, a(r, j)));
      }
      pivot_cols.push_back(c);
      ++r;
   }
   std::vector<bool> is_pivot(cols, false);
   for (auto c : pivot_cols) is_pivot[c] = true;
   std::vector<std::vector<std::uint64_t>> kernel;
   for (std::size_t free = 0; free < cols; ++free) {
      if (is_pivot[free]) continue;
      std::vector<std::uint64_t> v(cols, 0);
      v[free] = 1;
      for (std::size_t k = 0; k < pivot_cols.size(); ++k) v[pivot_cols[k]] = field.neg(a(k, free));
      kernel.push_back(std::move(v));
   }
   return kernel;
}

/// M v == 0 exactly.
inline bool annihilates(const ModMatrix& m, std::span<const std::uint64_t> v, const PrimeField& field)
{
   if (v.size() != m.cols()) return false;
   for (std::size_t r = 0; r < m.rows(); ++r) {
      std::uint64_t acc = 0;
      for (std::size_t c = 0; c < m.cols(); ++c) acc = field.add(acc, field.mul(m(r, c), v[c]));
      if (acc != 0) return false;
   }
   return true;
}

}  // namespace fatpoints
