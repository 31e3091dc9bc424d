#include "perihall/ffla/matrix.hpp"

#include <algorithm>
#include <ostream>

#include "perihall/error.hpp"

namespace perihall {

std::uint64_t Budget::power_or_saturate(std::uint32_t q, std::uint64_t dim) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < dim; ++i) {
    if (r > UINT64_MAX / q) return UINT64_MAX;
    r *= q;
  }
  return r;
}

void Budget::require(std::uint32_t q, std::uint64_t dim, const char* what) const {
  if (power_or_saturate(q, dim) > cap) throw CapExceeded(what, dim, cap);
}

}  // namespace perihall

namespace perihall::ffla {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldSpec::FieldSpec(std::uint32_t p) : p_(p) {
  if (!is_prime(p)) throw ContractViolation(std::to_string(p) + " is not prime");
  if (p >= kMaxPrime) throw ContractViolation("prime " + std::to_string(p) + " exceeds 2^15");
}

Elem FieldSpec::inv(Elem a) const {
  if (a % p_ == 0) throw ContractViolation("inverse of zero");
  // Fermat: a^(p-2)
  Elem r = 1, b = a % p_;
  for (std::uint32_t e = p_ - 2; e; e >>= 1) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
  }
  return r;
}

MatrixFp::MatrixFp(FieldSpec f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

MatrixFp MatrixFp::identity(FieldSpec f, std::size_t n) {
  MatrixFp m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = 1;
  return m;
}

MatrixFp MatrixFp::from_rows(FieldSpec f, std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  std::vector<std::vector<std::int64_t>> v;
  for (auto& r : rows) v.emplace_back(r);
  return from_rows(f, v);
}

MatrixFp MatrixFp::from_rows(FieldSpec f, const std::vector<std::vector<std::int64_t>>& rows,
                             std::size_t cols_if_empty) {
  std::size_t c = rows.empty() ? cols_if_empty : rows.front().size();
  MatrixFp m(f, rows.size(), c);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != c) throw ContractViolation("ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) m.data_[i * c + j] = f.reduce(rows[i][j]);
  }
  return m;
}

MatrixFp MatrixFp::from_flat(FieldSpec f, std::size_t rows, std::size_t cols, std::vector<Elem> entries) {
  if (entries.size() != rows * cols) throw ContractViolation("flat entry count mismatch");
  MatrixFp m;
  m.field_ = f;
  m.rows_ = rows;
  m.cols_ = cols;
  m.data_ = std::move(entries);
  for (auto& e : m.data_) e %= f.p();
  return m;
}

bool MatrixFp::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](Elem e) { return e == 0; });
}

MatrixFp MatrixFp::transpose() const {
  MatrixFp t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.data_[j * rows_ + i] = data_[i * cols_ + j];
  return t;
}

MatrixFp MatrixFp::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw ContractViolation("block out of range");
  MatrixFp b(field_, nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    std::copy_n(row_ptr(r0 + i) + c0, nc, b.row_ptr(i));
  return b;
}

void MatrixFp::set_block(std::size_t r0, std::size_t c0, const MatrixFp& b) {
  if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw ContractViolation("block out of range");
  for (std::size_t i = 0; i < b.rows_; ++i) std::copy_n(b.row_ptr(i), b.cols_, row_ptr(r0 + i) + c0);
}

void MatrixFp::add_block(std::size_t r0, std::size_t c0, const MatrixFp& b, Elem s) {
  if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw ContractViolation("block out of range");
  const std::uint32_t p = field_.p();
  for (std::size_t i = 0; i < b.rows_; ++i) {
    Elem* dst = row_ptr(r0 + i) + c0;
    const Elem* src = b.row_ptr(i);
    for (std::size_t j = 0; j < b.cols_; ++j) dst[j] = (dst[j] + s * src[j]) % p;
  }
}

MatrixFp MatrixFp::select_rows(std::span<const std::size_t> idx) const {
  MatrixFp m(field_, idx.size(), cols_);
  for (std::size_t i = 0; i < idx.size(); ++i) std::copy_n(row_ptr(idx[i]), cols_, m.row_ptr(i));
  return m;
}

MatrixFp MatrixFp::operator*(const MatrixFp& o) const {
  if (cols_ != o.rows_ || !(field_ == o.field_)) throw ContractViolation("matrix product shape mismatch");
  const std::uint32_t p = field_.p();
  MatrixFp r(field_, rows_, o.cols_);
  std::vector<std::uint64_t> acc(o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    std::fill(acc.begin(), acc.end(), 0);
    const Elem* a = row_ptr(i);
    for (std::size_t k = 0; k < cols_; ++k) {
      if (a[k] == 0) continue;
      const Elem* b = o.row_ptr(k);
      for (std::size_t j = 0; j < o.cols_; ++j) acc[j] += static_cast<std::uint64_t>(a[k]) * b[j];
    }
    Elem* out = r.row_ptr(i);
    for (std::size_t j = 0; j < o.cols_; ++j) out[j] = static_cast<Elem>(acc[j] % p);
  }
  return r;
}

MatrixFp MatrixFp::operator+(const MatrixFp& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || !(field_ == o.field_))
    throw ContractViolation("matrix sum shape mismatch");
  MatrixFp r = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = field_.add(r.data_[i], o.data_[i]);
  return r;
}

MatrixFp MatrixFp::operator-(const MatrixFp& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || !(field_ == o.field_))
    throw ContractViolation("matrix difference shape mismatch");
  MatrixFp r = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = field_.sub(r.data_[i], o.data_[i]);
  return r;
}

MatrixFp MatrixFp::operator-() const { return scaled(field_.neg(1)); }

MatrixFp MatrixFp::scaled(Elem s) const {
  MatrixFp r = *this;
  for (auto& e : r.data_) e = field_.mul(e, s);
  return r;
}

std::vector<Elem> MatrixFp::apply_row(std::span<const Elem> v) const {
  if (v.size() != rows_) throw ContractViolation("vector length mismatch");
  std::vector<std::uint64_t> acc(cols_, 0);
  for (std::size_t k = 0; k < rows_; ++k) {
    if (v[k] == 0) continue;
    const Elem* b = row_ptr(k);
    for (std::size_t j = 0; j < cols_; ++j) acc[j] += static_cast<std::uint64_t>(v[k]) * b[j];
  }
  std::vector<Elem> out(cols_);
  for (std::size_t j = 0; j < cols_; ++j) out[j] = static_cast<Elem>(acc[j] % field_.p());
  return out;
}

MatrixFp hstack(const MatrixFp& a, const MatrixFp& b) {
  if (a.rows() != b.rows()) throw ContractViolation("hstack row mismatch");
  MatrixFp m(a.field(), a.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(0, a.cols(), b);
  return m;
}

MatrixFp vstack(const MatrixFp& a, const MatrixFp& b) {
  if (a.cols() != b.cols()) throw ContractViolation("vstack column mismatch");
  MatrixFp m(a.field(), a.rows() + b.rows(), a.cols());
  m.set_block(0, 0, a);
  m.set_block(a.rows(), 0, b);
  return m;
}

MatrixFp diag(const MatrixFp& a, const MatrixFp& b) {
  MatrixFp m(a.field(), a.rows() + b.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(a.rows(), a.cols(), b);
  return m;
}

MatrixFp power(const MatrixFp& m, std::uint64_t e) {
  if (!m.is_square()) throw ContractViolation("power of non-square matrix");
  MatrixFp r = MatrixFp::identity(m.field(), m.rows());
  MatrixFp b = m;
  for (; e; e >>= 1) {
    if (e & 1) r = r * b;
    if (e > 1) b = b * b;
  }
  return r;
}

std::ostream& operator<<(std::ostream& os, const MatrixFp& m) {
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) os << ';';
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j);
  }
  return os << ']';
}

RrefResult rref(const MatrixFp& m) {
  RrefResult res{m, 0, {}};
  MatrixFp& a = res.matrix;
  const FieldSpec f = m.field();
  const std::uint32_t p = f.p();
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t piv = r;
    while (piv < a.rows() && a(piv, c) == 0) ++piv;
    if (piv == a.rows()) continue;
    if (piv != r) std::swap_ranges(a.row_ptr(piv), a.row_ptr(piv) + a.cols(), a.row_ptr(r));
    Elem* pr = a.row_ptr(r);
    const Elem s = f.inv(pr[c]);
    for (std::size_t j = c; j < a.cols(); ++j) pr[j] = f.mul(pr[j], s);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r) continue;
      Elem* ri = a.row_ptr(i);
      const Elem factor = ri[c];
      if (factor == 0) continue;
      const Elem nf = p - factor;
      for (std::size_t j = c; j < a.cols(); ++j) ri[j] = (ri[j] + nf * pr[j]) % p;
    }
    res.pivots.push_back(c);
    ++r;
  }
  res.rank = r;
  return res;
}

std::size_t rank(const MatrixFp& m) { return rref(m).rank; }

bool is_invertible(const MatrixFp& m) { return m.is_square() && rank(m) == m.rows(); }

std::optional<MatrixFp> inverse(const MatrixFp& m) {
  if (!m.is_square()) return std::nullopt;
  const std::size_t n = m.rows();
  auto r = rref(hstack(m, MatrixFp::identity(m.field(), n)));
  if (r.rank < n || (n > 0 && r.pivots[n - 1] != n - 1)) return std::nullopt;
  return r.matrix.block(0, n, n, n);
}

MatrixFp nullspace_columns(const MatrixFp& m) {
  auto r = rref(m);
  const FieldSpec f = m.field();
  const std::size_t n = m.cols();
  std::vector<bool> is_piv(n, false);
  for (auto c : r.pivots) is_piv[c] = true;
  MatrixFp k(f, n - r.rank, n);
  std::size_t row = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (is_piv[j]) continue;
    k.set(row, j, 1);
    for (std::size_t i = 0; i < r.rank; ++i) k.set(row, r.pivots[i], f.neg(r.matrix(i, j)));
    ++row;
  }
  return k;
}

MatrixFp kernel_basis(const MatrixFp& m) { return nullspace_columns(m.transpose()); }

std::optional<Solution> solve(const MatrixFp& a, std::span<const Elem> b) {
  if (b.size() != a.rows()) throw ContractViolation("solve: right-hand side length mismatch");
  const FieldSpec f = a.field();
  MatrixFp aug(f, a.rows(), a.cols() + 1);
  aug.set_block(0, 0, a);
  for (std::size_t i = 0; i < a.rows(); ++i) aug.set(i, a.cols(), b[i]);
  auto r = rref(aug);
  if (!r.pivots.empty() && r.pivots.back() == a.cols()) return std::nullopt;
  Solution s;
  s.particular.assign(a.cols(), 0);
  for (std::size_t i = 0; i < r.rank; ++i) s.particular[r.pivots[i]] = r.matrix(i, a.cols());
  s.kernel = nullspace_columns(a);
  return s;
}

RowSpace::RowSpace(FieldSpec f, std::size_t ambient) : field_(f), n_(ambient) {}

RowSpace::RowSpace(const MatrixFp& generators) : field_(generators.field()), n_(generators.cols()) {
  auto r = rref(generators);
  for (std::size_t i = 0; i < r.rank; ++i) {
    auto row = r.matrix.row(i);
    rows_.emplace_back(row.begin(), row.end());
  }
  pivots_ = r.pivots;
}

std::vector<Elem> RowSpace::reduce(std::span<const Elem> v) const {
  if (v.size() != n_) throw ContractViolation("RowSpace: vector length mismatch");
  std::vector<Elem> w(v.begin(), v.end());
  const std::uint32_t p = field_.p();
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Elem c = w[pivots_[i]];
    if (c == 0) continue;
    const Elem nf = p - c;
    const auto& r = rows_[i];
    for (std::size_t j = pivots_[i]; j < n_; ++j) w[j] = (w[j] + nf * r[j]) % p;
  }
  return w;
}

bool RowSpace::contains(std::span<const Elem> v) const {
  auto w = reduce(v);
  return std::all_of(w.begin(), w.end(), [](Elem e) { return e == 0; });
}

std::optional<std::vector<Elem>> RowSpace::coordinates(std::span<const Elem> v) const {
  if (!contains(v)) return std::nullopt;
  std::vector<Elem> c(rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) c[i] = v[pivots_[i]];
  return c;
}

bool RowSpace::add(std::span<const Elem> v) {
  auto w = reduce(v);
  std::size_t piv = 0;
  while (piv < n_ && w[piv] == 0) ++piv;
  if (piv == n_) return false;
  const std::uint32_t p = field_.p();
  const Elem s = field_.inv(w[piv]);
  for (auto& e : w) e = field_.mul(e, s);
  // eliminate the new pivot from existing rows
  for (auto& r : rows_) {
    const Elem c = r[piv];
    if (c == 0) continue;
    const Elem nf = p - c;
    for (std::size_t j = piv; j < n_; ++j) r[j] = (r[j] + nf * w[j]) % p;
  }
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), piv) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, piv);
  rows_.insert(rows_.begin() + pos, std::move(w));
  return true;
}

std::vector<std::size_t> RowSpace::free_columns() const {
  std::vector<bool> is_piv(n_, false);
  for (auto c : pivots_) is_piv[c] = true;
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < n_; ++j)
    if (!is_piv[j]) out.push_back(j);
  return out;
}

MatrixFp RowSpace::basis_matrix() const {
  MatrixFp m(field_, rows_.size(), n_);
  for (std::size_t i = 0; i < rows_.size(); ++i) std::copy(rows_[i].begin(), rows_[i].end(), m.row_ptr(i));
  return m;
}

std::uint64_t gaussian_binomial(std::uint64_t n, std::uint64_t k, std::uint64_t q) {
  if (k > n) return 0;
  // prod_{i<k} (q^{n-i} - 1) / (q^{i+1} - 1), exact at every step
  std::uint64_t num = 1, den = 1;
  auto pw = [q](std::uint64_t e) {
    std::uint64_t r = 1;
    while (e--) r *= q;
    return r;
  };
  for (std::uint64_t i = 0; i < k; ++i) {
    num *= pw(n - i) - 1;
    den *= pw(i + 1) - 1;
  }
  return num / den;
}

}  // namespace perihall::ffla
