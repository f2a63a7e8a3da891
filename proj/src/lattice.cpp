#include "toricflow/lattice.hpp"

#include "toricflow/error.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace toricflow {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::RankMismatch: return "RankMismatch";
    case ErrorKind::SideMismatch: return "SideMismatch";
    case ErrorKind::ZeroVector: return "ZeroVector";
    case ErrorKind::NotPointed: return "NotPointed";
    case ErrorKind::NotFullDimensional: return "NotFullDimensional";
    case ErrorKind::NotNonnegative: return "NotNonnegative";
    case ErrorKind::NormalityRequired: return "NormalityRequired";
    case ErrorKind::NotParabolic: return "NotParabolic";
    case ErrorKind::NotARoot: return "NotARoot";
    case ErrorKind::IllDefinedRoot: return "IllDefinedRoot";
    case ErrorKind::RankLimitExceeded: return "RankLimitExceeded";
    case ErrorKind::BoundExceeded: return "BoundExceeded";
    case ErrorKind::SafetyBoundExceeded: return "SafetyBoundExceeded";
  }
  return "Unknown";
}

const char* to_string(Side side) { return side == Side::N ? "N" : "M"; }

LatticeVector::LatticeVector(Side side, std::initializer_list<long> entries) : side_(side) {
  entries_.reserve(entries.size());
  for (long x : entries) entries_.emplace_back(x);
}

bool LatticeVector::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Integer& x) { return sgn(x) == 0; });
}

Integer LatticeVector::content() const {
  Integer g = 0;
  for (const auto& x : entries_) g = gcd(g, x);
  return g;
}

bool LatticeVector::is_primitive() const { return content() == 1; }

Integer LatticeVector::l1_norm() const {
  Integer n = 0;
  for (const auto& x : entries_) n += abs(x);
  return n;
}

Integer LatticeVector::max_norm() const {
  Integer n = 0;
  for (const auto& x : entries_) {
    if (abs(x) > n) n = abs(x);
  }
  return n;
}

void LatticeVector::require_compatible(const LatticeVector& other) const {
  if (rank() != other.rank()) {
    throw Error(ErrorKind::RankMismatch, to_string() + " vs " + other.to_string());
  }
  if (side_ != other.side_) {
    throw Error(ErrorKind::SideMismatch, "cannot combine vectors from N and M");
  }
}

LatticeVector LatticeVector::operator-() const {
  LatticeVector out(*this);
  for (auto& x : out.entries_) x = -x;
  return out;
}

LatticeVector& LatticeVector::operator+=(const LatticeVector& other) {
  require_compatible(other);
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

LatticeVector& LatticeVector::operator-=(const LatticeVector& other) {
  require_compatible(other);
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

LatticeVector operator*(const Integer& k, const LatticeVector& v) {
  LatticeVector out(v);
  for (auto& x : out.entries_) x *= k;
  return out;
}

bool operator<(const LatticeVector& a, const LatticeVector& b) {
  if (a.side_ != b.side_) return a.side_ < b.side_;
  return a.entries_ < b.entries_;
}

std::string to_string(const IntVector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  os << ')';
  return os.str();
}

std::string LatticeVector::to_string() const { return toricflow::to_string(entries_); }

bool canonical_less(const LatticeVector& a, const LatticeVector& b) {
  const Integer na = a.l1_norm();
  const Integer nb = b.l1_norm();
  if (na != nb) return na < nb;
  return b.entries() < a.entries();
}

void canonical_sort(std::vector<LatticeVector>& vs) {
  std::sort(vs.begin(), vs.end(), canonical_less);
}

Integer pairing(const LatticeVector& a, const LatticeVector& b) {
  if (a.rank() != b.rank()) {
    throw Error(ErrorKind::RankMismatch,
                "pairing " + a.to_string() + " with " + b.to_string());
  }
  if (a.side() == b.side()) {
    throw Error(ErrorKind::SideMismatch, "pairing needs one N-side and one M-side vector");
  }
  Integer sum = 0;
  for (std::size_t i = 0; i < a.rank(); ++i) sum += a[i] * b[i];
  return sum;
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

LatticeVector primitive(const LatticeVector& v) {
  const Integer g = v.content();
  if (g == 0) throw Error(ErrorKind::ZeroVector, "the zero vector has no primitive generator");
  IntVector out(v.entries());
  for (auto& x : out) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return {v.side(), std::move(out)};
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw Error(ErrorKind::InvalidArgument, "ragged matrix literal");
    for (long x : row) data_.emplace_back(x);
  }
}

IntMatrix IntMatrix::from_columns(const std::vector<LatticeVector>& vs, std::size_t rank) {
  IntMatrix m(rank, vs.size());
  for (std::size_t j = 0; j < vs.size(); ++j) {
    if (vs[j].rank() != rank) throw Error(ErrorKind::RankMismatch, vs[j].to_string());
    for (std::size_t i = 0; i < rank; ++i) m(i, j) = vs[j][i];
  }
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<LatticeVector>& vs, std::size_t rank) {
  IntMatrix m(vs.size(), rank);
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (vs[i].rank() != rank) throw Error(ErrorKind::RankMismatch, vs[i].to_string());
    for (std::size_t j = 0; j < rank; ++j) m(i, j) = vs[i][j];
  }
  return m;
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntVector IntMatrix::column(std::size_t j) const {
  IntVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
  return out;
}

IntVector IntMatrix::apply(const IntVector& x) const {
  if (x.size() != cols_) throw Error(ErrorKind::RankMismatch, "matrix-vector size mismatch");
  IntVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * x[j];
  }
  return out;
}

namespace {

// Column operation on both H and U: (c_p, c_q) <- (c_p, c_q) * [[x, u], [y, v]].
void combine_columns(IntMatrix& m, std::size_t p, std::size_t q, const Integer& x,
                     const Integer& y, const Integer& u, const Integer& v) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer a = m(i, p);
    Integer b = m(i, q);
    m(i, p) = x * a + y * b;
    m(i, q) = u * a + v * b;
  }
}

void negate_column(IntMatrix& m, std::size_t p) {
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, p) = -m(i, p);
}

void swap_columns(IntMatrix& m, std::size_t p, std::size_t q) {
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, p), m(i, q));
}

}  // namespace

ColumnEchelon column_echelon(const IntMatrix& a) {
  ColumnEchelon out{a, IntMatrix::identity(a.cols()), {}, 0};
  IntMatrix& h = out.reduced;
  IntMatrix& u = out.transform;
  std::size_t pivot = 0;
  for (std::size_t row = 0; row < h.rows() && pivot < h.cols(); ++row) {
    for (std::size_t j = pivot + 1; j < h.cols(); ++j) {
      if (sgn(h(row, j)) == 0) continue;
      if (sgn(h(row, pivot)) == 0) {
        swap_columns(h, pivot, j);
        swap_columns(u, pivot, j);
        continue;
      }
      const Integer a_p = h(row, pivot);
      const Integer a_j = h(row, j);
      Integer g, x, y;
      mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a_p.get_mpz_t(), a_j.get_mpz_t());
      const Integer up = -a_j / g;
      const Integer vj = a_p / g;
      combine_columns(h, pivot, j, x, y, up, vj);
      combine_columns(u, pivot, j, x, y, up, vj);
    }
    if (sgn(h(row, pivot)) == 0) continue;
    if (sgn(h(row, pivot)) < 0) {
      negate_column(h, pivot);
      negate_column(u, pivot);
    }
    out.pivot_rows.push_back(row);
    ++pivot;
  }
  out.rank = pivot;
  return out;
}

std::size_t matrix_rank(const IntMatrix& a) { return column_echelon(a).rank; }

std::size_t span_rank(const std::vector<LatticeVector>& vs, std::size_t rank) {
  if (vs.empty()) return 0;
  return matrix_rank(IntMatrix::from_columns(vs, rank));
}

std::vector<IntVector> integer_kernel(const IntMatrix& a) {
  const ColumnEchelon ce = column_echelon(a);
  std::vector<IntVector> basis;
  for (std::size_t j = ce.rank; j < a.cols(); ++j) {
    IntVector k = ce.transform.column(j);
    auto first = std::find_if(k.begin(), k.end(), [](const Integer& x) { return sgn(x) != 0; });
    if (first != k.end() && sgn(*first) < 0) {
      for (auto& x : k) x = -x;
    }
    basis.push_back(std::move(k));
  }
  return basis;
}

Integer lattice_index(const std::vector<LatticeVector>& vs, std::size_t rank) {
  if (vs.empty()) return 0;
  const ColumnEchelon ce = column_echelon(IntMatrix::from_columns(vs, rank));
  if (ce.rank != rank) return 0;
  Integer index = 1;
  for (std::size_t k = 0; k < rank; ++k) index *= ce.reduced(ce.pivot_rows[k], k);
  return index;
}

}  // namespace toricflow
