#pragma once

// Exact linear algebra over a field type T (e.g. cpp_rational): reduced row
// echelon form, nullspace, and particular solutions of A x = b.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace fatpoints {

template <class T>
using DenseMatrix = std::vector<std::vector<T>>;

template <class T>
struct RowEchelon {
   DenseMatrix<T> reduced;
   std::vector<std::size_t> pivot_cols;
   std::size_t rank() const { return pivot_cols.size(); }
};

/// Gauss-Jordan elimination; `a` must be rectangular.
template <class T>
RowEchelon<T> reduced_row_echelon(DenseMatrix<T> a)
{
   RowEchelon<T> out;
   const std::size_t rows = a.size();
   const std::size_t cols = rows ? a[0].size() : 0;
   std::size_t r = 0;
   for (std::size_t c = 0; c < cols && r < rows; ++c) {
      std::size_t sel = r;
      while (sel < rows && a[sel][c] == T(0)) ++sel;
      if (sel == rows) continue;
      std::swap(a[sel], a[r]);
      const T pivot = a[r][c];
      for (auto& v : a[r]) v /= pivot;
      for (std::size_t i = 0; i < rows; ++i) {
         if (i == r || a[i][c] == T(0)) continue;
         const T f = a[i][c];
         for (std::size_t j = 0; j < cols; ++j) a[i][j] -= f * a[r][j];
      }
      out.pivot_cols.push_back(c);
      ++r;
   }
   out.reduced = std::move(a);
   return out;
}

/// Basis of {x : A x = 0}, one vector per free column.
template <class T>
DenseMatrix<T> nullspace(const DenseMatrix<T>& a)
{
   const std::size_t cols = a.empty() ? 0 : a[0].size();
   const auto ech = reduced_row_echelon(a);
   std::vector<bool> pivot(cols, false);
   for (auto c : ech.pivot_cols) pivot[c] = true;
   DenseMatrix<T> basis;
   for (std::size_t f = 0; f < cols; ++f) {
      if (pivot[f]) continue;
      std::vector<T> v(cols, T(0));
      v[f] = T(1);
      for (std::size_t k = 0; k < ech.pivot_cols.size(); ++k) v[ech.pivot_cols[k]] = -ech.reduced[k][f];
      basis.push_back(std::move(v));
   }
   return basis;
}

/// Some x with A x = b (free variables set to zero), or nullopt if inconsistent.
template <class T>
std::optional<std::vector<T>> particular_solution(const DenseMatrix<T>& a, const std::vector<T>& b)
{
   const std::size_t cols = a.empty() ? 0 : a[0].size();
   DenseMatrix<T> aug = a;
   for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
   const auto ech = reduced_row_echelon(std::move(aug));
   if (!ech.pivot_cols.empty() && ech.pivot_cols.back() == cols) return std::nullopt;
   std::vector<T> x(cols, T(0));
   for (std::size_t k = 0; k < ech.pivot_cols.size(); ++k) x[ech.pivot_cols[k]] = ech.reduced[k][cols];
   return x;
}

template <class T>
std::vector<T> multiply(const DenseMatrix<T>& a, const std::vector<T>& x)
{
   std::vector<T> out(a.size(), T(0));
   for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < x.size(); ++j) out[i] += a[i][j] * x[j];
   return out;
}

}  // namespace fatpoints
