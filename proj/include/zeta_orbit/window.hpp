#pragma once

// Leading blocks of infinite column-finite matrices.
//
// A WindowedMatrix stores columns 1..cols of an infinite matrix together with a
// growth factor w certifying that entry (i, j) vanishes whenever i > w*j, and
// optionally a band b certifying that it vanishes whenever i > j + b. Columns are
// sparse and sorted by row. Every entry written is checked against both bounds,
// so a matrix that exists satisfies its certificates on the stored window.
//
// Products never truncate silently: windowed_mul computes a block only when the
// operands are large enough to make every entry of that block exact.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "zeta_orbit/parallel.hpp"
#include "zeta_orbit/scalar.hpp"

namespace zeta_orbit {

using index_t = std::int64_t;

/// Raised when an operand window cannot support the requested exact block.
class InsufficientWindow : public std::runtime_error {
 public:
  InsufficientWindow(const std::string& what, index_t required_rows, index_t required_cols)
      : std::runtime_error(what + " (requires " + std::to_string(required_rows) + " rows x " +
                           std::to_string(required_cols) + " columns)"),
        required_rows_(required_rows),
        required_cols_(required_cols) {}

  index_t required_rows() const { return required_rows_; }
  index_t required_cols() const { return required_cols_; }

 private:
  index_t required_rows_;
  index_t required_cols_;
};

/// An entry that violates a matrix's declared growth or band certificate.
class CertificateViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

template <class Scalar>
class WindowedMatrix {
 public:
  struct Entry {
    index_t row;
    Scalar value;
  };
  using Column = std::vector<Entry>;

  WindowedMatrix(index_t rows, index_t cols, index_t growth, std::optional<index_t> band = std::nullopt)
      : rows_(rows), cols_(cols), growth_(growth), band_(band), columns_(static_cast<std::size_t>(cols)) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("WindowedMatrix: negative size");
    if (growth < 1) throw std::invalid_argument("WindowedMatrix: growth must be >= 1");
    if (band && *band < 0) throw std::invalid_argument("WindowedMatrix: band must be >= 0");
  }

  /// Builds every column from fn(j), which returns (row, value) pairs in any order.
  template <class Fn>
  static WindowedMatrix build(index_t rows, index_t cols, index_t growth, std::optional<index_t> band, Fn&& fn) {
    WindowedMatrix m(rows, cols, growth, band);
    for (index_t j = 1; j <= cols; ++j) m.set_column(j, fn(j));
    return m;
  }

  index_t rows() const { return rows_; }
  index_t cols() const { return cols_; }
  index_t growth() const { return growth_; }
  std::optional<index_t> band() const { return band_; }

  /// True when every stored column is known down to its last possible nonzero row.
  bool complete() const { return rows_ >= growth_ * cols_ || (band_ && rows_ >= cols_ + *band_); }

  const Column& column(index_t j) const {
    check_col(j);
    return columns_[static_cast<std::size_t>(j - 1)];
  }

  /// Largest row any entry of column j may occupy, from the certificates.
  index_t support_limit(index_t j) const {
    index_t limit = growth_ * j;
    if (band_) limit = std::min(limit, j + *band_);
    return limit;
  }

  void set_column(index_t j, Column col) {
    check_col(j);
    std::sort(col.begin(), col.end(), [](const Entry& a, const Entry& b) { return a.row < b.row; });
    Column kept;
    kept.reserve(col.size());
    const index_t limit = support_limit(j);
    for (auto& e : col) {
      if (is_zero(e.value)) continue;
      if (e.row < 1 || e.row > rows_) {
        throw std::out_of_range("WindowedMatrix: row " + std::to_string(e.row) + " outside 1.." +
                                std::to_string(rows_));
      }
      if (e.row > limit) {
        throw CertificateViolation("WindowedMatrix: nonzero entry at (" + std::to_string(e.row) + "," +
                                   std::to_string(j) + ") violates growth " + std::to_string(growth_) +
                                   (band_ ? " / band " + std::to_string(*band_) : std::string()));
      }
      if (!kept.empty() && kept.back().row == e.row) {
        throw std::invalid_argument("WindowedMatrix: duplicate row " + std::to_string(e.row));
      }
      kept.push_back(std::move(e));
    }
    columns_[static_cast<std::size_t>(j - 1)] = std::move(kept);
  }

  Scalar at(index_t i, index_t j) const {
    if (i < 1 || i > rows_) throw std::out_of_range("WindowedMatrix::at: row " + std::to_string(i));
    const Column& c = column(j);
    auto it = std::lower_bound(c.begin(), c.end(), i, [](const Entry& e, index_t r) { return e.row < r; });
    if (it != c.end() && it->row == i) return it->value;
    return Scalar(0);
  }

  std::size_t nonzeros() const {
    std::size_t n = 0;
    for (const auto& c : columns_) n += c.size();
    return n;
  }

  /// The leading rows x cols block. Certificates carry over unchanged.
  WindowedMatrix leading(index_t rows, index_t cols) const {
    if (rows > rows_ || cols > cols_) {
      throw InsufficientWindow("WindowedMatrix::leading: block exceeds window", rows, cols);
    }
    WindowedMatrix out(rows, cols, growth_, band_);
    for (index_t j = 1; j <= cols; ++j) {
      Column c;
      for (const auto& e : column(j)) {
        if (e.row <= rows) c.push_back(e);
      }
      out.columns_[static_cast<std::size_t>(j - 1)] = std::move(c);
    }
    return out;
  }

  /// Applies fn to every stored value (fn must map 0 to 0).
  template <class To = Scalar, class Fn>
  WindowedMatrix<To> transform(Fn&& fn) const {
    WindowedMatrix<To> out(rows_, cols_, growth_, band_);
    for (index_t j = 1; j <= cols_; ++j) {
      typename WindowedMatrix<To>::Column c;
      c.reserve(column(j).size());
      for (const auto& e : column(j)) c.push_back({e.row, fn(e.value)});
      out.set_column(j, std::move(c));
    }
    return out;
  }

  template <class To>
  WindowedMatrix<To> cast() const {
    return transform<To>([](const Scalar& v) { return scalar_cast<To>(v); });
  }

  WindowedMatrix negated() const {
    return transform([](const Scalar& v) { return Scalar(-v); });
  }

  /// Replaces the declared growth/band with tighter values; every entry is rechecked.
  WindowedMatrix with_certificates(index_t growth, std::optional<index_t> band) const {
    WindowedMatrix out(rows_, cols_, growth, band);
    for (index_t j = 1; j <= cols_; ++j) out.set_column(j, column(j));
    return out;
  }

 private:
  void check_col(index_t j) const {
    if (j < 1 || j > cols_) {
      throw std::out_of_range("WindowedMatrix: column " + std::to_string(j) + " outside 1.." +
                              std::to_string(cols_));
    }
  }

  index_t rows_;
  index_t cols_;
  index_t growth_;
  std::optional<index_t> band_;
  std::vector<Column> columns_;
};

using IntMatrix = WindowedMatrix<Integer>;
using RatMatrix = WindowedMatrix<Rational>;

/// Window sizes a product needs for out_cols exact columns.
struct ProductWindow {
  index_t left_rows;
  index_t left_cols;
  index_t right_rows;
  index_t right_cols;
};

inline ProductWindow product_window(index_t left_growth, index_t right_growth, index_t out_cols) {
  return {left_growth * right_growth * out_cols, right_growth * out_cols, right_growth * out_cols, out_cols};
}

/// The leading (w(A) w(B) N) x N block of the infinite product AB, exact.
///
/// Column j of B is supported on rows <= w(B) j, so it only meets columns of A up to
/// w(B) N, and those are supported on rows <= w(A) w(B) N.
template <class Scalar>
WindowedMatrix<Scalar> windowed_mul(const WindowedMatrix<Scalar>& a, const WindowedMatrix<Scalar>& b,
                                    index_t out_cols) {
  const ProductWindow need = product_window(a.growth(), b.growth(), out_cols);
  if (b.cols() < need.right_cols || b.rows() < need.right_rows) {
    throw InsufficientWindow("windowed_mul: right operand " + std::to_string(b.rows()) + "x" +
                                 std::to_string(b.cols()) + " too small",
                             need.right_rows, need.right_cols);
  }
  if (a.cols() < need.left_cols || a.rows() < need.left_rows) {
    throw InsufficientWindow("windowed_mul: left operand " + std::to_string(a.rows()) + "x" +
                                 std::to_string(a.cols()) + " too small",
                             need.left_rows, need.left_cols);
  }
  std::optional<index_t> band;
  if (a.band() && b.band()) band = *a.band() + *b.band();
  WindowedMatrix<Scalar> out(need.left_rows, out_cols, a.growth() * b.growth(), band);

  const unsigned workers = std::max(1u, worker_count());
  struct Scratch {
    std::vector<Scalar> acc;
    std::vector<char> touched;
    std::vector<index_t> rows;
  };
  std::vector<Scratch> scratch(workers);
  for (auto& s : scratch) {
    s.acc.assign(static_cast<std::size_t>(need.left_rows + 1), Scalar(0));
    s.touched.assign(static_cast<std::size_t>(need.left_rows + 1), 0);
  }
  std::vector<typename WindowedMatrix<Scalar>::Column> results(static_cast<std::size_t>(out_cols));

  parallel_for(1, out_cols + 1, [&](index_t j, unsigned w) {
    Scratch& s = scratch[w];
    s.rows.clear();
    for (const auto& bk : b.column(j)) {
      for (const auto& ak : a.column(bk.row)) {
        const auto i = static_cast<std::size_t>(ak.row);
        if (!s.touched[i]) {
          s.touched[i] = 1;
          s.rows.push_back(ak.row);
        }
        add_product(s.acc[i], ak.value, bk.value);
      }
    }
    std::sort(s.rows.begin(), s.rows.end());
    auto& col = results[static_cast<std::size_t>(j - 1)];
    for (index_t r : s.rows) {
      auto& v = s.acc[static_cast<std::size_t>(r)];
      if (!is_zero(v)) col.push_back({r, v});
      v = 0;
      s.touched[static_cast<std::size_t>(r)] = 0;
    }
  });

  for (index_t j = 1; j <= out_cols; ++j) out.set_column(j, std::move(results[static_cast<std::size_t>(j - 1)]));
  return out;
}

/// Entrywise a + sign*b on the common window; certificates take the weaker of the two.
template <class Scalar>
WindowedMatrix<Scalar> add(const WindowedMatrix<Scalar>& a, const WindowedMatrix<Scalar>& b, int sign = 1) {
  const index_t rows = std::min(a.rows(), b.rows());
  const index_t cols = std::min(a.cols(), b.cols());
  std::optional<index_t> band;
  if (a.band() && b.band()) band = std::max(*a.band(), *b.band());
  WindowedMatrix<Scalar> out(rows, cols, std::max(a.growth(), b.growth()), band);
  for (index_t j = 1; j <= cols; ++j) {
    typename WindowedMatrix<Scalar>::Column c;
    const auto& ca = a.column(j);
    const auto& cb = b.column(j);
    std::size_t p = 0, q = 0;
    while (p < ca.size() || q < cb.size()) {
      index_t r;
      Scalar v(0);
      if (q >= cb.size() || (p < ca.size() && ca[p].row < cb[q].row)) {
        r = ca[p].row;
        v = ca[p++].value;
      } else if (p >= ca.size() || cb[q].row < ca[p].row) {
        r = cb[q].row;
        v = sign > 0 ? Scalar(cb[q].value) : Scalar(-cb[q].value);
        ++q;
      } else {
        r = ca[p].row;
        v = sign > 0 ? Scalar(ca[p].value + cb[q].value) : Scalar(ca[p].value - cb[q].value);
        ++p;
        ++q;
      }
      if (r <= rows) c.push_back({r, std::move(v)});
    }
    out.set_column(j, std::move(c));
  }
  return out;
}

template <class Scalar>
WindowedMatrix<Scalar> operator-(const WindowedMatrix<Scalar>& a, const WindowedMatrix<Scalar>& b) {
  return add(a, b, -1);
}

template <class Scalar>
WindowedMatrix<Scalar> operator+(const WindowedMatrix<Scalar>& a, const WindowedMatrix<Scalar>& b) {
  return add(a, b, 1);
}

/// Position of the first entry where a and b differ on the leading rows x cols block.
struct Mismatch {
  index_t row;
  index_t col;
  std::string left;
  std::string right;
};

template <class Scalar>
std::optional<Mismatch> first_difference(const WindowedMatrix<Scalar>& a, const WindowedMatrix<Scalar>& b,
                                         index_t rows, index_t cols) {
  if (a.rows() < rows || b.rows() < rows || a.cols() < cols || b.cols() < cols) {
    throw InsufficientWindow("first_difference: block exceeds an operand", rows, cols);
  }
  for (index_t j = 1; j <= cols; ++j) {
    const auto& ca = a.column(j);
    const auto& cb = b.column(j);
    std::size_t p = 0, q = 0;
    while (true) {
      while (p < ca.size() && ca[p].row > rows) ++p;
      while (q < cb.size() && cb[q].row > rows) ++q;
      const bool ea = p >= ca.size() || ca[p].row > rows;
      const bool eb = q >= cb.size() || cb[q].row > rows;
      if (ea && eb) break;
      if (!ea && !eb && ca[p].row == cb[q].row) {
        if (ca[p].value != cb[q].value) return Mismatch{ca[p].row, j, to_string(ca[p].value), to_string(cb[q].value)};
        ++p;
        ++q;
      } else if (eb || (!ea && ca[p].row < cb[q].row)) {
        return Mismatch{ca[p].row, j, to_string(ca[p].value), "0"};
      } else {
        return Mismatch{cb[q].row, j, "0", to_string(cb[q].value)};
      }
    }
  }
  return std::nullopt;
}

/// Compares the first cols columns of the infinite matrices a and b, using each
/// certificate to fill in rows beyond its stored window. Throws when a row that
/// could be nonzero is missing from a window.
template <class Scalar>
std::optional<Mismatch> column_difference(const WindowedMatrix<Scalar>& a, const WindowedMatrix<Scalar>& b,
                                          index_t cols) {
  if (a.cols() < cols || b.cols() < cols) throw InsufficientWindow("column_difference: too few columns", 0, cols);
  for (index_t j = 1; j <= cols; ++j) {
    for (const auto* m : {&a, &b}) {
      if (m->support_limit(j) > m->rows()) {
        throw InsufficientWindow("column_difference: column " + std::to_string(j) + " not fully stored",
                                 m->support_limit(j), cols);
      }
    }
  }
  const index_t rows = std::max(a.rows(), b.rows());
  WindowedMatrix<Scalar> pa(rows, cols, a.growth(), a.band());
  WindowedMatrix<Scalar> pb(rows, cols, b.growth(), b.band());
  for (index_t j = 1; j <= cols; ++j) {
    pa.set_column(j, a.column(j));
    pb.set_column(j, b.column(j));
  }
  return first_difference(pa, pb, rows, cols);
}

/// c times the identity, stored as a rows x cols window.
template <class Scalar>
WindowedMatrix<Scalar> scalar_identity(index_t rows, index_t cols, const Scalar& c = Scalar(1)) {
  return WindowedMatrix<Scalar>::build(rows, cols, 1, 0, [&](index_t j) {
    typename WindowedMatrix<Scalar>::Column col;
    if (j <= rows) col.push_back({j, c});
    return col;
  });
}

/// Equality on the largest block both operands hold.
template <class Scalar>
bool equal_on_common_window(const WindowedMatrix<Scalar>& a, const WindowedMatrix<Scalar>& b) {
  return !first_difference(a, b, std::min(a.rows(), b.rows()), std::min(a.cols(), b.cols()));
}

/// Scans every stored entry against the declared growth factor; returns the first violator.
template <class Scalar>
std::optional<std::pair<index_t, index_t>> growth_violation(const WindowedMatrix<Scalar>& m, index_t growth) {
  for (index_t j = 1; j <= m.cols(); ++j) {
    for (const auto& e : m.column(j)) {
      if (e.row > growth * j) return std::make_pair(e.row, j);
    }
  }
  return std::nullopt;
}

}  // namespace zeta_orbit
