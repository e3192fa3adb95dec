#include "oracle_forge/numeric/ffmatrix.hpp"

#include <stdexcept>
#include <string>

namespace oracle_forge::numeric {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(Residue p) : p_(p) {
  if (!is_prime(p) || p > kMaxPrime) {
    throw std::invalid_argument("unsupported field characteristic " + std::to_string(p) +
                                " (need a prime <= " + std::to_string(kMaxPrime) + ")");
  }
}

Residue PrimeField::reduce(std::int64_t x) const {
  const auto p = static_cast<std::int64_t>(p_);
  return static_cast<Residue>(((x % p) + p) % p);
}

Residue PrimeField::inv(Residue a) const {
  if (a % p_ == 0) throw std::domain_error("inverse of zero in GF(p)");
  // Fermat: a^(p-2).
  Residue result = 1;
  Residue base = a % p_;
  for (Residue e = p_ - 2; e > 0; e >>= 1) {
    if (e & 1U) result = mul(result, base);
    base = mul(base, base);
  }
  return result;
}

FFMatrix::FFMatrix(Residue prime, std::size_t rows, std::size_t cols)
    : field_(prime), rows_(rows), cols_(cols), entries_(rows * cols, 0) {}

FFMatrix::FFMatrix(Residue prime, std::size_t rows, std::size_t cols,
                   std::vector<Residue> entries)
    : field_(prime), rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols) {
    throw std::invalid_argument("FFMatrix: entry count does not match shape");
  }
  for (auto& x : entries_) x %= field_.prime();
}

FFMatrix FFMatrix::from_rows(Residue prime, std::size_t cols,
                             const std::vector<std::vector<Residue>>& rows) {
  std::vector<Residue> entries;
  entries.reserve(rows.size() * cols);
  for (const auto& row : rows) {
    if (row.size() != cols) {
      throw std::invalid_argument("FFMatrix::from_rows: row length " +
                                  std::to_string(row.size()) + " != " + std::to_string(cols));
    }
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return FFMatrix(prime, rows.size(), cols, std::move(entries));
}

FFMatrix FFMatrix::identity(Residue prime, std::size_t n) {
  FFMatrix m(prime, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

std::vector<std::vector<Residue>> FFMatrix::to_rows() const {
  std::vector<std::vector<Residue>> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.emplace_back(row(r).begin(), row(r).end());
  return out;
}

FFMatrix rref(const FFMatrix& m) {
  const PrimeField& f = m.field();
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::vector<Residue>> work = m.to_rows();

  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < cols && pivot_row < rows; ++c) {
    std::size_t sel = pivot_row;
    while (sel < rows && work[sel][c] == 0) ++sel;
    if (sel == rows) continue;
    std::swap(work[sel], work[pivot_row]);
    auto& pr = work[pivot_row];
    const Residue scale = f.inv(pr[c]);
    for (auto& x : pr) x = f.mul(x, scale);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == pivot_row || work[r][c] == 0) continue;
      const Residue factor = work[r][c];
      for (std::size_t k = 0; k < cols; ++k) {
        work[r][k] = f.sub(work[r][k], f.mul(factor, pr[k]));
      }
    }
    ++pivot_row;
  }
  work.resize(pivot_row);
  return FFMatrix::from_rows(m.prime(), cols, work);
}

std::size_t rank(const FFMatrix& m) { return rref(m).rows(); }

FFMatrix nullspace(const FFMatrix& m) {
  const PrimeField& f = m.field();
  const FFMatrix r = rref(m);
  const std::size_t n = m.cols();
  std::vector<std::size_t> pivot_of_col(n, n);  // row index of each pivot column
  for (std::size_t i = 0; i < r.rows(); ++i) {
    std::size_t c = 0;
    while (r(i, c) == 0) ++c;
    pivot_of_col[c] = i;
  }
  std::vector<std::vector<Residue>> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (pivot_of_col[free] != n) continue;
    std::vector<Residue> v(n, 0);
    v[free] = 1;
    for (std::size_t c = 0; c < n; ++c) {
      if (pivot_of_col[c] != n) v[c] = f.neg(r(pivot_of_col[c], free));
    }
    basis.push_back(std::move(v));
  }
  return rref(FFMatrix::from_rows(m.prime(), n, basis));
}

}  // namespace oracle_forge::numeric
