#include "tambara/lattice.hpp"

#include <algorithm>
#include <cstdlib>

#include "tambara/checked.hpp"
#include "tambara/error.hpp"

namespace tambara {

namespace {

std::int64_t abs64(std::int64_t v) {
  if (v == INT64_MIN) throw OverflowError("integer overflow in absolute value");
  return v < 0 ? -v : v;
}

// row_i -= q * row_r over all columns.
void row_sub(IntVec& target, const IntVec& source, std::int64_t q) {
  if (q == 0) return;
  for (std::size_t j = 0; j < target.size(); ++j)
    target[j] = narrow_checked(static_cast<__int128>(target[j]) - static_cast<__int128>(q) * source[j]);
}

// Echelonizes the first ncols columns of rows (extra columns ride along).
// Returns the rank; rows [0, rank) are the Hermite rows.
std::size_t echelonize(IntMat& rows, std::size_t ncols) {
  std::size_t r = 0;
  const std::size_t m = rows.size();
  for (std::size_t c = 0; c < ncols && r < m; ++c) {
    while (true) {
      std::size_t best = m;
      for (std::size_t i = r; i < m; ++i)
        if (rows[i][c] != 0 && (best == m || abs64(rows[i][c]) < abs64(rows[best][c]))) best = i;
      if (best == m) break;
      std::swap(rows[r], rows[best]);
      bool clean = true;
      for (std::size_t i = r + 1; i < m; ++i) {
        if (rows[i][c] == 0) continue;
        row_sub(rows[i], rows[r], rows[i][c] / rows[r][c]);
        if (rows[i][c] != 0) clean = false;
      }
      if (clean) break;
    }
    if (rows[r][c] == 0) continue;
    if (rows[r][c] < 0)
      for (auto& v : rows[r]) v = sub_checked(0, v);
    for (std::size_t i = 0; i < r; ++i) row_sub(rows[i], rows[r], floor_div(rows[i][c], rows[r][c]));
    ++r;
  }
  return r;
}

std::size_t pivot_of(const IntVec& row) {
  for (std::size_t j = 0; j < row.size(); ++j)
    if (row[j] != 0) return j;
  return row.size();
}

}  // namespace

IntMat identity_matrix(std::size_t n) {
  IntMat m(n, IntVec(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntMat hermite_rows(IntMat rows, std::size_t ncols) {
  for (const auto& r : rows)
    if (r.size() != ncols) throw InputError("lattice vector has wrong length");
  const std::size_t rank = echelonize(rows, ncols);
  rows.resize(rank);
  return rows;
}

HermiteWithTransform hermite_with_transform(const IntMat& rows, std::size_t ncols) {
  const std::size_t m = rows.size();
  IntMat aug(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (rows[i].size() != ncols) throw InputError("lattice vector has wrong length");
    aug[i] = rows[i];
    aug[i].resize(ncols + m, 0);
    aug[i][ncols + i] = 1;
  }
  HermiteWithTransform out;
  out.rank = echelonize(aug, ncols);
  for (std::size_t i = 0; i < m; ++i) {
    if (i < out.rank) out.h.emplace_back(aug[i].begin(), aug[i].begin() + static_cast<std::ptrdiff_t>(ncols));
    out.transform.emplace_back(aug[i].begin() + static_cast<std::ptrdiff_t>(ncols), aug[i].end());
  }
  return out;
}

IntVec lattice_reduce(const IntMat& hnf, IntVec v) {
  for (const auto& row : hnf) {
    const std::size_t p = pivot_of(row);
    if (p == row.size()) continue;
    row_sub(v, row, floor_div(v[p], row[p]));
  }
  return v;
}

bool lattice_contains(const IntMat& hnf, const IntVec& v) { return vec_is_zero(lattice_reduce(hnf, v)); }

std::optional<IntVec> lattice_coordinates(const IntMat& hnf, const IntVec& v) {
  IntVec rest = v;
  IntVec coeffs(hnf.size(), 0);
  for (std::size_t i = 0; i < hnf.size(); ++i) {
    const std::size_t p = pivot_of(hnf[i]);
    if (p == hnf[i].size()) continue;
    coeffs[i] = floor_div(rest[p], hnf[i][p]);
    row_sub(rest, hnf[i], coeffs[i]);
  }
  if (!vec_is_zero(rest)) return std::nullopt;
  return coeffs;
}

IntMat lattice_sum(const IntMat& a, const IntMat& b, std::size_t ncols) {
  IntMat rows = a;
  rows.insert(rows.end(), b.begin(), b.end());
  return hermite_rows(std::move(rows), ncols);
}

bool lattice_subset(const IntMat& a, const IntMat& b) {
  return std::all_of(a.begin(), a.end(), [&](const IntVec& v) { return lattice_contains(b, v); });
}

IntMat left_kernel(const IntMat& m, std::size_t ncols) {
  HermiteWithTransform hw = hermite_with_transform(m, ncols);
  IntMat k(hw.transform.begin() + static_cast<std::ptrdiff_t>(hw.rank), hw.transform.end());
  return hermite_rows(std::move(k), m.size());
}

IntMat lattice_intersection(const IntMat& a, const IntMat& b, std::size_t ncols) {
  if (a.empty() || b.empty()) return {};
  IntMat stacked = a;
  stacked.insert(stacked.end(), b.begin(), b.end());
  IntMat k = left_kernel(stacked, ncols);
  IntMat out;
  for (const auto& row : k) {
    IntVec u(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(a.size()));
    out.push_back(vec_mat(u, a, ncols));
  }
  return hermite_rows(std::move(out), ncols);
}

IntMat lattice_preimage(const IntMat& m, std::size_t ncols, const IntMat& l) {
  IntMat stacked = m;
  stacked.insert(stacked.end(), l.begin(), l.end());
  IntMat k = left_kernel(stacked, ncols);
  IntMat out;
  for (const auto& row : k) out.emplace_back(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(m.size()));
  return hermite_rows(std::move(out), m.size());
}

IntVec vec_mat(const IntVec& x, const IntMat& m, std::size_t ncols) {
  std::vector<__int128> acc(ncols, 0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < ncols; ++j) acc[j] += static_cast<__int128>(x[i]) * m[i][j];
  }
  IntVec out(ncols);
  for (std::size_t j = 0; j < ncols; ++j) out[j] = narrow_checked(acc[j]);
  return out;
}

IntVec vec_add(const IntVec& a, const IntVec& b) {
  IntVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = add_checked(a[i], b[i]);
  return out;
}

IntVec vec_sub(const IntVec& a, const IntVec& b) {
  IntVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = sub_checked(a[i], b[i]);
  return out;
}

IntVec vec_scale(std::int64_t k, const IntVec& a) {
  IntVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = mul_checked(k, a[i]);
  return out;
}

bool vec_is_zero(const IntVec& a) {
  return std::all_of(a.begin(), a.end(), [](std::int64_t v) { return v == 0; });
}

SmithForm smith_form(const IntMat& a, std::size_t ncols) {
  const std::size_t m = a.size(), n = ncols;
  SmithForm s;
  s.d = a;
  s.u = identity_matrix(m);
  s.v = identity_matrix(n);
  s.v_inverse = identity_matrix(n);
  IntMat& d = s.d;

  auto swap_rows = [&](std::size_t i, std::size_t j) {
    std::swap(d[i], d[j]);
    std::swap(s.u[i], s.u[j]);
  };
  auto swap_cols = [&](std::size_t i, std::size_t j) {
    for (auto& row : d) std::swap(row[i], row[j]);
    for (auto& row : s.v) std::swap(row[i], row[j]);
    std::swap(s.v_inverse[i], s.v_inverse[j]);
  };
  // col_j -= q col_t
  auto col_sub = [&](std::size_t j, std::size_t t, std::int64_t q) {
    if (q == 0) return;
    for (auto& row : d) row[j] = narrow_checked(static_cast<__int128>(row[j]) - static_cast<__int128>(q) * row[t]);
    for (auto& row : s.v) row[j] = narrow_checked(static_cast<__int128>(row[j]) - static_cast<__int128>(q) * row[t]);
    row_sub(s.v_inverse[t], s.v_inverse[j], -q);
  };

  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    while (true) {
      std::size_t bi = m, bj = n;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (d[i][j] != 0 && (bi == m || abs64(d[i][j]) < abs64(d[bi][bj]))) {
            bi = i;
            bj = j;
          }
      if (bi == m) break;
      if (bi != t) swap_rows(bi, t);
      if (bj != t) swap_cols(bj, t);
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        const std::int64_t q = d[i][t] / d[t][t];
        row_sub(d[i], d[t], q);
        row_sub(s.u[i], s.u[t], q);
        if (d[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        col_sub(j, t, d[t][j] / d[t][t]);
        if (d[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      std::size_t bad = m;
      for (std::size_t i = t + 1; i < m && bad == m; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (d[i][j] % d[t][t] != 0) {
            bad = i;
            break;
          }
      if (bad == m) break;
      row_sub(d[t], d[bad], -1);
      row_sub(s.u[t], s.u[bad], -1);
    }
    if (t < m && t < n && d[t][t] < 0) {
      for (auto& v : d[t]) v = -v;
      for (auto& v : s.u[t]) v = -v;
    }
  }
  for (std::size_t t = 0; t < std::min(m, n); ++t)
    if (d[t][t] != 0) s.diagonal.push_back(d[t][t]);
  return s;
}

std::int64_t abs_determinant(const IntMat& m) {
  const std::size_t n = m.size();
  IntMat h = hermite_rows(m, n);
  if (h.size() < n) return 0;
  std::int64_t det = 1;
  for (std::size_t i = 0; i < n; ++i) det = mul_checked(det, h[i][i]);
  return det;
}

}  // namespace tambara
