#ifndef HCW_LINALG_HPP
#define HCW_LINALG_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace hcw
{

// Dense exact linear algebra over a field F. F must provide +, -, *, /,
// unary minus, construction from int, and an `is_zero(F const &)` overload
// found by argument-dependent lookup (or below for mpq_class).

inline bool is_zero(mpq_class const &x)
{ return sgn(x) == 0; }

template<typename F>
using Matrix = std::vector<std::vector<F>>;

// Brings `m` to reduced row echelon form in place and returns the pivot
// column of each nonzero row.
template<typename F>
std::vector<std::size_t> row_reduce(Matrix<F> &m)
{
  std::vector<std::size_t> pivots;
  if (m.empty())
    return pivots;

  std::size_t const cols = m[0].size();
  std::size_t row = 0;

  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.size() && is_zero(m[sel][col]))
      ++sel;
    if (sel == m.size())
      continue;

    std::swap(m[row], m[sel]);

    F const inv = F(1) / m[row][col];
    for (std::size_t j = col; j < cols; ++j)
      m[row][j] = m[row][j] * inv;

    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || is_zero(m[r][col]))
        continue;
      F const factor = m[r][col];
      for (std::size_t j = col; j < cols; ++j)
        m[r][j] = m[r][j] - factor * m[row][j];
    }

    pivots.push_back(col);
    ++row;
  }

  m.resize(row);
  return pivots;
}

template<typename F>
std::size_t rank(Matrix<F> m)
{ return row_reduce(m).size(); }

// Basis of {x : m x = 0}, one vector per free column.
template<typename F>
std::vector<std::vector<F>> nullspace(Matrix<F> m, std::size_t cols)
{
  auto const pivots = row_reduce(m);

  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots)
    is_pivot[p] = true;

  std::vector<std::vector<F>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free])
      continue;

    std::vector<F> v(cols, F(0));
    v[free] = F(1);
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = -m[r][free];

    basis.push_back(std::move(v));
  }

  return basis;
}

// Solves m x = b; returns false if the system is inconsistent. Free
// variables are set to zero.
template<typename F>
bool solve(Matrix<F> m, std::vector<F> const &b, std::vector<F> &x)
{
  std::size_t const cols = m.empty() ? 0 : m[0].size();
  for (std::size_t r = 0; r < m.size(); ++r)
    m[r].push_back(b[r]);

  auto const pivots = row_reduce(m);
  if (!pivots.empty() && pivots.back() == cols)
    return false;

  x.assign(cols, F(0));
  for (std::size_t r = 0; r < pivots.size(); ++r)
    x[pivots[r]] = m[r][cols];

  return true;
}

} // namespace hcw

#endif // HCW_LINALG_HPP
