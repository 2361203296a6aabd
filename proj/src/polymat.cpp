#include "polar/polymat.hpp"

#include <algorithm>
#include <cstdint>

#include "polar/errors.hpp"

namespace polar {

ConstMatrix::ConstMatrix(PrimeField field, int rows, int cols)
    : field_(field), rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw StructuralError("negative matrix shape");
  data_.assign(static_cast<std::size_t>(rows) * cols, Fq{});
}

ConstMatrix::ConstMatrix(PrimeField field, const std::vector<std::vector<std::int64_t>>& rows)
    : field_(field), rows_(static_cast<int>(rows.size())), cols_(rows.empty() ? 0 : static_cast<int>(rows[0].size())) {
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != cols_) throw StructuralError("ragged matrix rows");
    for (std::int64_t v : row) data_.push_back(field.from_int(v));
  }
}

ConstMatrix ConstMatrix::identity(PrimeField field, int n) {
  ConstMatrix m(field, n, n);
  for (int k = 0; k < n; ++k) m.at(k, k) = field.one();
  return m;
}

ConstMatrix ConstMatrix::top_rows(int k) const {
  if (k < 0 || k > rows_) throw StructuralError("row count out of range");
  ConstMatrix out(field_, k, cols_);
  std::copy_n(data_.begin(), static_cast<std::size_t>(k) * cols_, out.data_.begin());
  return out;
}

ConstMatrix ConstMatrix::submatrix(std::span<const int> rows, std::span<const int> cols) const {
  ConstMatrix out(field_, static_cast<int>(rows.size()), static_cast<int>(cols.size()));
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (rows[r] < 0 || rows[r] >= rows_ || cols[c] < 0 || cols[c] >= cols_) {
        throw StructuralError("submatrix index out of range");
      }
      out.at(static_cast<int>(r), static_cast<int>(c)) = at(rows[r], cols[c]);
    }
  return out;
}

ConstMatrix ConstMatrix::column_block(int first, int count) const {
  if (first < 0 || count < 0 || first + count > cols_) throw StructuralError("column block out of range");
  ConstMatrix out(field_, rows_, count);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < count; ++c) out.at(r, c) = at(r, first + c);
  return out;
}

ConstMatrix operator*(const ConstMatrix& a, const ConstMatrix& b) {
  if (a.cols_ != b.rows_) throw StructuralError("matrix product shape mismatch");
  if (!(a.field_ == b.field_)) throw StructuralError("coefficient fields differ");
  const PrimeField& k = a.field_;
  ConstMatrix out(k, a.rows_, b.cols_);
  for (int r = 0; r < a.rows_; ++r)
    for (int c = 0; c < b.cols_; ++c) {
      Fq s = k.zero();
      for (int t = 0; t < a.cols_; ++t) s = k.mul_add(a.at(r, t), b.at(t, c), s);
      out.at(r, c) = s;
    }
  return out;
}

namespace {

// Row echelon form in place; returns rank and the determinant sign/scale
// bookkeeping through `det` when requested.
int eliminate(ConstMatrix& m, Fq* det) {
  const PrimeField& k = m.field();
  int rank = 0;
  Fq d = k.one();
  for (int c = 0; c < m.cols() && rank < m.rows(); ++c) {
    int pivot = -1;
    for (int r = rank; r < m.rows(); ++r)
      if (m.at(r, c).v != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) {
      d = k.zero();
      continue;
    }
    if (pivot != rank) {
      for (int t = 0; t < m.cols(); ++t) std::swap(m.at(pivot, t), m.at(rank, t));
      d = k.neg(d);
    }
    Fq p = m.at(rank, c);
    d = k.mul(d, p);
    Fq pinv = k.inv(p);
    for (int r = rank + 1; r < m.rows(); ++r) {
      Fq f = m.at(r, c);
      if (f.v == 0) continue;
      f = k.mul(f, pinv);
      for (int t = c; t < m.cols(); ++t) m.at(r, t) = k.sub(m.at(r, t), k.mul(f, m.at(rank, t)));
    }
    ++rank;
  }
  if (det) *det = rank == m.rows() ? d : k.zero();
  return rank;
}

}  // namespace

int rank(const ConstMatrix& m) {
  ConstMatrix work = m;
  return eliminate(work, nullptr);
}

Fq determinant(const ConstMatrix& m) {
  if (m.rows() != m.cols()) throw StructuralError("determinant of a non-square matrix");
  if (m.rows() == 0) return m.field().one();
  ConstMatrix work = m;
  Fq d;
  eliminate(work, &d);
  return d;
}

std::vector<Point> kernel_basis(const ConstMatrix& m) {
  const PrimeField& k = m.field();
  ConstMatrix w = m;
  std::vector<int> pivot_cols;
  int row = 0;
  for (int c = 0; c < w.cols() && row < w.rows(); ++c) {
    int pivot = -1;
    for (int r = row; r < w.rows(); ++r)
      if (w.at(r, c).v != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    for (int t = 0; t < w.cols(); ++t) std::swap(w.at(pivot, t), w.at(row, t));
    Fq inv = k.inv(w.at(row, c));
    for (int t = 0; t < w.cols(); ++t) w.at(row, t) = k.mul(w.at(row, t), inv);
    for (int r = 0; r < w.rows(); ++r) {
      if (r == row || w.at(r, c).v == 0) continue;
      Fq f = w.at(r, c);
      for (int t = 0; t < w.cols(); ++t) w.at(r, t) = k.sub(w.at(r, t), k.mul(f, w.at(row, t)));
    }
    pivot_cols.push_back(c);
    ++row;
  }
  std::vector<Point> basis;
  std::vector<bool> is_pivot(w.cols(), false);
  for (int c : pivot_cols) is_pivot[c] = true;
  for (int free = 0; free < w.cols(); ++free) {
    if (is_pivot[free]) continue;
    Point v(w.cols(), k.zero());
    v[free] = k.one();
    for (std::size_t r = 0; r < pivot_cols.size(); ++r) v[pivot_cols[r]] = k.neg(w.at(static_cast<int>(r), free));
    basis.push_back(std::move(v));
  }
  return basis;
}

PolyMatrix::PolyMatrix(PrimeField field, int nvars, int rows, int cols)
    : field_(field), nvars_(nvars), rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw StructuralError("negative matrix shape");
  entries_.assign(static_cast<std::size_t>(rows) * cols, Polynomial(field, nvars));
}

PolyMatrix::PolyMatrix(int rows, int cols, std::vector<Polynomial> entries)
    : field_(entries.empty() ? PrimeField() : entries.front().field()),
      nvars_(entries.empty() ? 0 : entries.front().nvars()),
      rows_(rows),
      cols_(cols),
      entries_(std::move(entries)) {
  if (rows <= 0 || cols <= 0) throw StructuralError("matrix shape must be positive");
  if (entries_.size() != static_cast<std::size_t>(rows) * cols) {
    throw StructuralError("entry count does not match matrix shape");
  }
  for (const Polynomial& p : entries_) {
    if (p.nvars() != nvars_ || !(p.field() == field_)) {
      throw StructuralError("matrix entries live in different rings");
    }
  }
}

PolyMatrix PolyMatrix::from_constants(const ConstMatrix& m, int nvars) {
  PolyMatrix out(m.field(), nvars, m.rows(), m.cols());
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) out.set(r, c, Polynomial::constant(m.field(), nvars, m.at(r, c)));
  return out;
}

void PolyMatrix::set(int r, int c, Polynomial p) {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw StructuralError("matrix index out of range");
  if (p.nvars() != nvars_ || !(p.field() == field_)) throw StructuralError("entry lives in a different ring");
  entries_[static_cast<std::size_t>(r) * cols_ + c] = std::move(p);
}

PolyMatrix PolyMatrix::submatrix(std::span<const int> rows, std::span<const int> cols) const {
  PolyMatrix out(field_, nvars_, static_cast<int>(rows.size()), static_cast<int>(cols.size()));
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (rows[r] < 0 || rows[r] >= rows_ || cols[c] < 0 || cols[c] >= cols_) {
        throw StructuralError("submatrix index out of range");
      }
      out.set(static_cast<int>(r), static_cast<int>(c), at(rows[r], cols[c]));
    }
  return out;
}

ConstMatrix PolyMatrix::evaluated(std::span<const Fq> x) const {
  ConstMatrix out(field_, rows_, cols_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) out.at(r, c) = evaluate(at(r, c), x);
  return out;
}

PolyMatrix PolyMatrix::embedded(int nvars) const {
  PolyMatrix out(field_, nvars, rows_, cols_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) out.set(r, c, at(r, c).embedded(nvars));
  return out;
}

PolyMatrix stack(const PolyMatrix& top, const PolyMatrix& bottom) {
  if (top.cols() != bottom.cols()) throw StructuralError("stacked matrices need equal column counts");
  if (top.nvars() != bottom.nvars() || !(top.field() == bottom.field())) {
    throw StructuralError("stacked matrices live in different rings");
  }
  PolyMatrix out(top.field(), top.nvars(), top.rows() + bottom.rows(), top.cols());
  for (int r = 0; r < top.rows(); ++r)
    for (int c = 0; c < top.cols(); ++c) out.set(r, c, top.at(r, c));
  for (int r = 0; r < bottom.rows(); ++r)
    for (int c = 0; c < top.cols(); ++c) out.set(top.rows() + r, c, bottom.at(r, c));
  return out;
}

PolyMatrix jacobian(std::span<const Polynomial> polys) {
  if (polys.empty()) throw StructuralError("jacobian of an empty polynomial list");
  const int n = polys.front().nvars();
  PolyMatrix out(polys.front().field(), n, static_cast<int>(polys.size()), n);
  for (std::size_t k = 0; k < polys.size(); ++k) {
    if (polys[k].nvars() != n) throw StructuralError("ambient variable counts differ");
    for (int l = 0; l < n; ++l) out.set(static_cast<int>(k), l, differentiate(polys[k], l + 1));
  }
  return out;
}

Polynomial determinant(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw StructuralError("determinant of a non-square matrix");
  const int n = m.rows();
  const PrimeField& k = m.field();
  const int nv = m.nvars();
  if (n == 0) return Polynomial::constant(k, nv, k.one());

  // Coefficients of det(t*I - A_r) for the leading r x r block, highest first.
  std::vector<Polynomial> charpoly{Polynomial::constant(k, nv, k.one()), -m.at(0, 0)};
  for (int r = 1; r < n; ++r) {
    // Toeplitz column: 1, -a_rr, -R C, -R A C, ..., -R A^{r-1} C
    std::vector<Polynomial> toeplitz;
    toeplitz.reserve(r + 2);
    toeplitz.push_back(Polynomial::constant(k, nv, k.one()));
    toeplitz.push_back(-m.at(r, r));
    std::vector<Polynomial> v;  // A_r^j C
    v.reserve(r);
    for (int i = 0; i < r; ++i) v.push_back(m.at(i, r));
    for (int j = 0; j < r; ++j) {
      Polynomial rv(k, nv);
      for (int i = 0; i < r; ++i) rv = rv + m.at(r, i) * v[i];
      toeplitz.push_back(-rv);
      if (j + 1 < r) {
        std::vector<Polynomial> next;
        next.reserve(r);
        for (int i = 0; i < r; ++i) {
          Polynomial s(k, nv);
          for (int t = 0; t < r; ++t) s = s + m.at(i, t) * v[t];
          next.push_back(std::move(s));
        }
        v = std::move(next);
      }
    }
    std::vector<Polynomial> next_cp;
    next_cp.reserve(r + 2);
    for (int i = 0; i < r + 2; ++i) {
      Polynomial s(k, nv);
      for (int j = 0; j <= std::min(i, r); ++j) s = s + toeplitz[i - j] * charpoly[j];
      next_cp.push_back(std::move(s));
    }
    charpoly = std::move(next_cp);
  }
  // det(-A) = charpoly(0)
  return n % 2 == 0 ? charpoly[n] : -charpoly[n];
}

std::size_t minor_count(int rows, int cols, int r) {
  auto binom = [](int a, int b) -> std::size_t {
    if (b < 0 || b > a) return 0;
    std::size_t v = 1;
    for (int i = 1; i <= b; ++i) v = v * static_cast<std::size_t>(a - b + i) / static_cast<std::size_t>(i);
    return v;
  };
  return binom(rows, r) * binom(cols, r);
}

namespace {

// All k-subsets of [0, n) in lexicographic order, as bit masks.
std::vector<std::uint32_t> lex_subsets(int n, int k) {
  std::vector<std::uint32_t> out;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  if (k > n) return out;
  for (;;) {
    std::uint32_t mask = 0;
    for (int i : idx) mask |= std::uint32_t{1} << i;
    out.push_back(mask);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

struct MinorWalker {
  const PolyMatrix& m;
  int r;
  const std::function<bool(const MinorIndex&, const Polynomial&)>& visit;
  const MinorReducer& reduce;
  std::vector<std::vector<std::uint32_t>> subsets;      // per level k, lex order
  std::vector<std::vector<std::int32_t>> position;     // per level, mask -> index
  std::vector<std::vector<Polynomial>> level;           // minors of the current prefix
  std::vector<int> chosen;
  std::size_t visited = 0;
  bool stopped = false;

  MinorWalker(const PolyMatrix& mat, int size,
              const std::function<bool(const MinorIndex&, const Polynomial&)>& v, const MinorReducer& red)
      : m(mat), r(size), visit(v), reduce(red) {
    const int n = m.cols();
    subsets.resize(r + 1);
    position.resize(r + 1);
    level.resize(r + 1);
    for (int k = 0; k <= r; ++k) {
      subsets[k] = lex_subsets(n, k);
      position[k].assign(std::size_t{1} << n, -1);
      for (std::size_t i = 0; i < subsets[k].size(); ++i) position[k][subsets[k][i]] = static_cast<std::int32_t>(i);
    }
    level[0] = {Polynomial::constant(m.field(), m.nvars(), m.field().one())};
  }

  void fill_level(int k, int row) {
    const PrimeField& field = m.field();
    std::vector<Polynomial>& out = level[k];
    out.clear();
    out.reserve(subsets[k].size());
    for (std::uint32_t mask : subsets[k]) {
      Polynomial acc(field, m.nvars());
      int t = 0;
      for (int c = 0; c < m.cols(); ++c) {
        if (!(mask >> c & 1)) continue;
        const Polynomial& entry = m.at(row, c);
        const Polynomial& sub = level[k - 1][position[k - 1][mask & ~(std::uint32_t{1} << c)]];
        if (!entry.is_zero() && !sub.is_zero()) {
          Polynomial prod = entry * sub;
          acc = ((k - 1 + t) % 2 == 0) ? acc + prod : acc - prod;
        }
        ++t;
      }
      out.push_back(reduce && !acc.is_zero() ? reduce(acc) : std::move(acc));
    }
  }

  void walk(int k, int first_row) {
    if (stopped) return;
    if (k == r) {
      MinorIndex idx;
      idx.rows = chosen;
      for (std::size_t i = 0; i < subsets[r].size(); ++i) {
        std::uint32_t mask = subsets[r][i];
        idx.cols.clear();
        for (int c = 0; c < m.cols(); ++c)
          if (mask >> c & 1) idx.cols.push_back(c);
        ++visited;
        if (!visit(idx, level[r][i])) {
          stopped = true;
          return;
        }
      }
      return;
    }
    for (int row = first_row; row <= m.rows() - (r - k); ++row) {
      chosen.push_back(row);
      fill_level(k + 1, row);
      walk(k + 1, row + 1);
      chosen.pop_back();
      if (stopped) return;
    }
  }
};

}  // namespace

std::size_t for_each_minor(const PolyMatrix& m, int r,
                           const std::function<bool(const MinorIndex&, const Polynomial&)>& visit) {
  return for_each_minor(m, r, visit, MinorReducer{});
}

std::size_t for_each_minor(const PolyMatrix& m, int r,
                           const std::function<bool(const MinorIndex&, const Polynomial&)>& visit,
                           const MinorReducer& reduce) {
  if (r < 1 || r > std::min(m.rows(), m.cols())) throw StructuralError("minor size out of range");
  if (m.cols() > kMaxVars) throw StructuralError("minor enumeration supports at most 16 columns");
  MinorWalker walker(m, r, visit, reduce);
  walker.walk(0, 0);
  return walker.visited;
}

std::vector<Polynomial> enumerate_minors(const PolyMatrix& m, int r) {
  std::vector<Polynomial> out;
  for_each_minor(m, r, [&](const MinorIndex&, const Polynomial& p) {
    out.push_back(p);
    return true;
  });
  return out;
}

int rank_at_point(const PolyMatrix& m, std::span<const Fq> x) {
  if (x.size() != static_cast<std::size_t>(m.nvars())) {
    throw StructuralError("point length does not match ambient variable count");
  }
  return rank(m.evaluated(x));
}

}  // namespace polar
