#ifndef ORACLE_FORGE_NUMERIC_FFMATRIX_HPP
#define ORACLE_FORGE_NUMERIC_FFMATRIX_HPP

#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace oracle_forge::numeric {

using Residue = std::uint32_t;

/// Largest supported field characteristic.
inline constexpr Residue kMaxPrime = 97;

/// Arithmetic in GF(p). Throws std::invalid_argument unless p is a prime <= kMaxPrime.
class PrimeField {
 public:
  explicit PrimeField(Residue p);

  Residue prime() const { return p_; }
  Residue reduce(std::int64_t x) const;
  Residue add(Residue a, Residue b) const { return (a + b) % p_; }
  Residue sub(Residue a, Residue b) const { return (a + p_ - b) % p_; }
  Residue mul(Residue a, Residue b) const { return (a * b) % p_; }
  Residue neg(Residue a) const { return (p_ - a) % p_; }
  /// Multiplicative inverse; throws std::domain_error for 0.
  Residue inv(Residue a) const;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  Residue p_;
};

bool is_prime(std::uint64_t n);

/// Dense matrix over GF(p), row-major, entries in [0, p).
class FFMatrix {
 public:
  FFMatrix(Residue prime, std::size_t rows, std::size_t cols);
  /// Entries are reduced mod p.
  FFMatrix(Residue prime, std::size_t rows, std::size_t cols, std::vector<Residue> entries);
  static FFMatrix from_rows(Residue prime, std::size_t cols,
                            const std::vector<std::vector<Residue>>& rows);
  static FFMatrix identity(Residue prime, std::size_t n);

  const PrimeField& field() const { return field_; }
  Residue prime() const { return field_.prime(); }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Residue operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, Residue value) {
    entries_[r * cols_ + c] = field_.reduce(value);
  }
  std::span<const Residue> row(std::size_t r) const {
    return std::span<const Residue>(entries_).subspan(r * cols_, cols_);
  }
  std::vector<std::vector<Residue>> to_rows() const;

  friend bool operator==(const FFMatrix&, const FFMatrix&) = default;

 private:
  PrimeField field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Residue> entries_;
};

/// Reduced row echelon form with unit pivots; zero rows are dropped.
FFMatrix rref(const FFMatrix& m);
std::size_t rank(const FFMatrix& m);
/// Basis (as rows, in RREF) of { x : m x = 0 }.
FFMatrix nullspace(const FFMatrix& m);

}  // namespace oracle_forge::numeric

#endif  // ORACLE_FORGE_NUMERIC_FFMATRIX_HPP
