#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace toricflow {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;

/// N holds one-parameter subgroups, M holds characters.
enum class Side { N, M };

constexpr Side opposite(Side side) { return side == Side::N ? Side::M : Side::N; }
const char* to_string(Side side);

class LatticeVector {
public:
  LatticeVector() = default;
  LatticeVector(Side side, IntVector entries) : side_(side), entries_(std::move(entries)) {}
  LatticeVector(Side side, std::initializer_list<long> entries);

  Side side() const { return side_; }
  std::size_t rank() const { return entries_.size(); }
  const IntVector& entries() const { return entries_; }
  const Integer& operator[](std::size_t i) const { return entries_[i]; }

  bool is_zero() const;
  bool is_primitive() const;
  Integer content() const;  // gcd of absolute values; 0 for the zero vector
  Integer l1_norm() const;
  Integer max_norm() const;

  /// Same vector, relabelled to the other lattice (used for the coordinate
  /// identification N = Z^d = M).
  LatticeVector on_side(Side side) const { return {side, entries_}; }

  LatticeVector operator-() const;
  LatticeVector& operator+=(const LatticeVector& other);
  LatticeVector& operator-=(const LatticeVector& other);
  friend LatticeVector operator+(LatticeVector a, const LatticeVector& b) { return a += b; }
  friend LatticeVector operator-(LatticeVector a, const LatticeVector& b) { return a -= b; }
  friend LatticeVector operator*(const Integer& k, const LatticeVector& v);

  friend bool operator==(const LatticeVector& a, const LatticeVector& b) {
    return a.side_ == b.side_ && a.entries_ == b.entries_;
  }
  // Plain lexicographic order (side first): the key for sets and maps.
  friend bool operator<(const LatticeVector& a, const LatticeVector& b);

  std::string to_string() const;  // "(1,-2,1)"

private:
  void require_compatible(const LatticeVector& other) const;

  Side side_ = Side::M;
  IntVector entries_;
};

/// Display order used for every vector set the library emits (rays, facet
/// normals, Hilbert bases): ascending L1 norm, ties broken by descending
/// lexicographic order so that e_1, e_2, ... come out in index order.
bool canonical_less(const LatticeVector& a, const LatticeVector& b);
void canonical_sort(std::vector<LatticeVector>& vs);

/// <n, m> for one N-side and one M-side vector, in either argument order.
Integer pairing(const LatticeVector& a, const LatticeVector& b);

/// v / content(v); never flips the direction.
LatticeVector primitive(const LatticeVector& v);

Integer gcd(const Integer& a, const Integer& b);

class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  /// Matrix whose j-th column is vs[j].
  static IntMatrix from_columns(const std::vector<LatticeVector>& vs, std::size_t rank);
  static IntMatrix from_rows(const std::vector<LatticeVector>& vs, std::size_t rank);
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntVector column(std::size_t j) const;
  IntVector apply(const IntVector& x) const;  // this * x

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  IntVector data_;
};

/// A * U = H with U unimodular and H in column echelon form: the first
/// `rank` columns of H carry the pivots (H(pivot_rows[k], k) > 0, zeros to
/// the right of each pivot); the remaining columns of H are zero.
struct ColumnEchelon {
  IntMatrix reduced;
  IntMatrix transform;
  std::vector<std::size_t> pivot_rows;
  std::size_t rank = 0;
};

ColumnEchelon column_echelon(const IntMatrix& a);

std::size_t matrix_rank(const IntMatrix& a);
std::size_t span_rank(const std::vector<LatticeVector>& vs, std::size_t rank);

/// Lattice basis of {x in Z^cols : A x = 0}; each vector has its first
/// nonzero entry positive. Empty iff A has full column rank.
std::vector<IntVector> integer_kernel(const IntMatrix& a);

/// Index of the sublattice spanned by the columns; 0 if they do not span
/// a full-rank sublattice.
Integer lattice_index(const std::vector<LatticeVector>& vs, std::size_t rank);

std::string to_string(const IntVector& v);

}  // namespace toricflow
