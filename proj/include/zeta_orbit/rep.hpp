#pragma once

// The representations tau_1, tau and rho of SL(2,Z), the GL(2,Z) letter W, and
// windowed evaluation of words in the generators.

#include <array>
#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "zeta_orbit/exactnum.hpp"
#include "zeta_orbit/matrices.hpp"
#include "zeta_orbit/pseries.hpp"
#include "zeta_orbit/report.hpp"
#include "zeta_orbit/window.hpp"

namespace zeta_orbit {

enum class Letter { S, SInv, T, TInv, W };

class WNotEnabled : public std::invalid_argument {
 public:
  WNotEnabled() : std::invalid_argument("letter W needs GL mode (use --gl)") {}
};

class WordSyntaxError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline const char* letter_name(Letter l) {
  switch (l) {
    case Letter::S: return "S";
    case Letter::SInv: return "S^-1";
    case Letter::T: return "T";
    case Letter::TInv: return "T^-1";
    case Letter::W: return "W";
  }
  return "?";
}

inline Letter letter_inverse(Letter l) {
  switch (l) {
    case Letter::S: return Letter::SInv;
    case Letter::SInv: return Letter::S;
    case Letter::T: return Letter::TInv;
    case Letter::TInv: return Letter::T;
    case Letter::W: return Letter::W;
  }
  return l;
}

/// Column growth of rho(letter): rho(T^{+-1}) is triangular, the others reach row 2j.
inline index_t letter_growth(Letter l) { return (l == Letter::T || l == Letter::TInv) ? 1 : 2; }

/// 2x2 integer matrix [a, b; c, d] stored row-major.
using Mat2 = std::array<long long, 4>;

inline Mat2 mat2_mul(const Mat2& x, const Mat2& y) {
  return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3], x[2] * y[0] + x[3] * y[2],
          x[2] * y[1] + x[3] * y[3]};
}

inline Mat2 letter_matrix(Letter l) {
  switch (l) {
    case Letter::S: return {0, -1, 1, 0};
    case Letter::SInv: return {0, 1, -1, 0};
    case Letter::T: return {1, 1, 0, 1};
    case Letter::TInv: return {1, -1, 0, 1};
    case Letter::W: return {0, 1, 1, 0};
  }
  return {1, 0, 0, 1};
}

class GroupWord {
 public:
  GroupWord() = default;
  explicit GroupWord(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  /// Whitespace-separated tokens S, S^-1, T, T^-1, W, or X^k for any integer k.
  /// "1", "I" and the empty string denote the identity.
  static GroupWord parse(const std::string& text, bool gl_mode = false) {
    std::istringstream in(text);
    std::string token;
    std::vector<Letter> out;
    while (in >> token) {
      if (token == "1" || token == "I") continue;
      const char base = token[0];
      if (base != 'S' && base != 'T' && base != 'W') throw WordSyntaxError("unknown letter in token '" + token + "'");
      long long exponent = 1;
      if (token.size() > 1) {
        if (token[1] != '^' || token.size() == 2) throw WordSyntaxError("malformed token '" + token + "'");
        const std::string digits = token.substr(2);
        std::size_t pos = 0;
        try {
          exponent = std::stoll(digits, &pos);
        } catch (const std::exception&) {
          throw WordSyntaxError("malformed exponent in '" + token + "'");
        }
        if (pos != digits.size()) throw WordSyntaxError("malformed exponent in '" + token + "'");
        if (exponent > 4096 || exponent < -4096) throw WordSyntaxError("exponent too large in '" + token + "'");
      }
      Letter l = base == 'S' ? Letter::S : base == 'T' ? Letter::T : Letter::W;
      if (l == Letter::W && !gl_mode) throw WNotEnabled();
      if (exponent < 0) l = letter_inverse(l);
      for (long long i = 0; i < (exponent < 0 ? -exponent : exponent); ++i) out.push_back(l);
    }
    return GroupWord(std::move(out));
  }

  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  std::size_t size() const { return letters_.size(); }

  bool uses_W() const {
    for (auto l : letters_) {
      if (l == Letter::W) return true;
    }
    return false;
  }

  GroupWord operator*(const GroupWord& o) const {
    std::vector<Letter> l = letters_;
    l.insert(l.end(), o.letters_.begin(), o.letters_.end());
    return GroupWord(std::move(l));
  }

  GroupWord inverse() const {
    std::vector<Letter> l;
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) l.push_back(letter_inverse(*it));
    return GroupWord(std::move(l));
  }

  /// The element of GL(2,Z) the word names.
  Mat2 matrix() const {
    Mat2 m{1, 0, 0, 1};
    for (auto l : letters_) m = mat2_mul(m, letter_matrix(l));
    return m;
  }

  /// Product of the letter growth factors, the growth of rho(word).
  index_t growth() const {
    index_t g = 1;
    for (auto l : letters_) g *= letter_growth(l);
    return g;
  }

  std::string to_string() const {
    if (letters_.empty()) return "1";
    std::string s;
    for (auto l : letters_) {
      if (!s.empty()) s += ' ';
      s += letter_name(l);
    }
    return s;
  }

 private:
  std::vector<Letter> letters_;
};

/// The 2x2 series matrix gamma(tau_1(letter)).
inline GammaMatrix gamma_of(Letter l, std::size_t order) {
  const GammaGenerators gens = gamma_generators(order);
  switch (l) {
    case Letter::S: return gens.s;
    case Letter::SInv: return -gens.s;
    case Letter::T: return gens.j;
    case Letter::TInv: return gens.j.inverse();
    case Letter::W: return gamma_W(order);
  }
  return GammaMatrix::identity(order);
}

/// tau_1(letter) on n columns: the block-Toeplitz expansion of its gamma image.
template <class Scalar = Integer>
WindowedMatrix<Scalar> tau1(Letter l, index_t n) {
  return expand_gamma<Scalar>(gamma_of(l, static_cast<std::size_t>(n / 2 + 1)), n);
}

/// tau(letter) = P tau_1(letter) Q on n columns.
template <class Scalar = Integer>
WindowedMatrix<Scalar> tau(Letter l, index_t n) {
  const auto t1 = tau1<Scalar>(l, n);
  const auto q = matrix_Q(n).template cast<Scalar>();
  const auto right = windowed_mul(t1, q, n);
  const auto p = matrix_P(t1.growth() * n).template cast<Scalar>();
  return windowed_mul(p, right, n);
}

/// Z^{-1} psi(tau(letter)) Z on n columns, built through the full pipeline.
template <class Scalar = Integer>
WindowedMatrix<Scalar> rho_pipeline(Letter l, index_t n, const FactorizationTable* table = nullptr) {
  detail::require_positive(n, "rho_pipeline");
  const index_t tau_cols = detail::floor_log2(n) + 2;
  const auto t = tau<Scalar>(l, tau_cols);
  const auto psi = psi_expand(t, n);
  const index_t inner_rows = psi.growth() * n;
  std::unique_ptr<FactorizationTable> own;
  if (!table || table->max_m() < static_cast<std::uint64_t>(inner_rows)) {
    own = std::make_unique<FactorizationTable>(static_cast<std::uint64_t>(inner_rows));
    table = own.get();
  }
  const auto z = matrix_Z(*table, n).template cast<Scalar>();
  const auto zinv = matrix_Zinv(*table, inner_rows).template cast<Scalar>();
  return windowed_mul(zinv, windowed_mul(psi, z, n), n);
}

/// Evaluates rho on words with a window budget fixed before any arithmetic.
///
/// Words are multiplied left to right. The i-th factor is needed on
/// out_cols * prod_{j>i} w_j columns, so the leftmost factor sets the source size
/// out_cols * prod_j w_j. Generator images are cached at the largest size built.
template <class Scalar = Integer>
class Representation {
 public:
  explicit Representation(bool gl_mode = false, std::optional<index_t> max_source = std::nullopt)
      : gl_mode_(gl_mode), max_source_(max_source) {
    if constexpr (std::is_same_v<Scalar, Integer>) {
      if (gl_mode) throw std::invalid_argument("Representation: GL mode needs rational scalars");
    }
  }

  bool gl_mode() const { return gl_mode_; }

  /// Columns the i-th factor is needed on when the product must be exact on out_cols columns.
  static std::vector<index_t> column_budget(const GroupWord& w, index_t out_cols) {
    const auto& l = w.letters();
    std::vector<index_t> cols(l.size(), out_cols);
    for (std::size_t i = l.size(); i-- > 1;) cols[i - 1] = cols[i] * letter_growth(l[i]);
    return cols;
  }

  /// Rows the leftmost factor must supply.
  static index_t source_rows(const GroupWord& w, index_t out_cols) { return w.growth() * out_cols; }

  /// Largest column count verifiable from a source of the given number of rows.
  static index_t affordable_cols(const GroupWord& w, index_t source) { return source / w.growth(); }

  WindowedMatrix<Scalar> generator(Letter l, index_t cols) {
    check_letter(l);
    const Letter key = (l == Letter::SInv) ? Letter::S : l;
    std::shared_ptr<const WindowedMatrix<Scalar>> cached;
    {
      std::lock_guard<std::mutex> lock(mutex_);
      auto it = cache_.find(key);
      if (it != cache_.end() && it->second->cols() >= cols) cached = it->second;
    }
    if (!cached) {
      auto built = std::make_shared<const WindowedMatrix<Scalar>>(build(key, cols));
      std::lock_guard<std::mutex> lock(mutex_);
      auto& slot = cache_[key];
      if (!slot || slot->cols() < built->cols()) slot = built;
      cached = slot;
    }
    auto m = cached->leading(cached->growth() * cols, cols);
    // S^2 = -I, so rho(S^-1) = -rho(S).
    return l == Letter::SInv ? m.negated() : m;
  }

  WindowedMatrix<Scalar> evaluate(const GroupWord& w, index_t out_cols) {
    detail::require_positive(out_cols, "Representation::evaluate");
    for (auto l : w.letters()) check_letter(l);
    if (w.empty()) return scalar_identity<Scalar>(out_cols, out_cols);
    const index_t source = source_rows(w, out_cols);
    if (max_source_ && source > *max_source_) {
      throw InsufficientWindow("word '" + w.to_string() + "' on " + std::to_string(out_cols) +
                                   " columns needs a source window of " + std::to_string(source) +
                                   " rows, above the cap " + std::to_string(*max_source_),
                               source, source / letter_growth(w.letters().front()));
    }
    const auto cols = column_budget(w, out_cols);
    const auto& l = w.letters();
    WindowedMatrix<Scalar> acc = generator(l[0], cols[0]);
    for (std::size_t i = 1; i < l.size(); ++i) acc = windowed_mul(acc, generator(l[i], cols[i]), cols[i]);
    return acc;
  }

  const FactorizationTable& table(index_t max_m) {
    std::lock_guard<std::mutex> lock(mutex_);
    if (!table_ || table_->max_m() < static_cast<std::uint64_t>(max_m)) {
      table_ = std::make_shared<FactorizationTable>(static_cast<std::uint64_t>(max_m));
    }
    return *table_;
  }

 private:
  void check_letter(Letter l) const {
    if (l == Letter::W && !gl_mode_) throw WNotEnabled();
  }

  WindowedMatrix<Scalar> build(Letter l, index_t cols) {
    switch (l) {
      case Letter::T: return divisor_matrix(cols).template cast<Scalar>();
      case Letter::TInv: return moebius_matrix(cols).template cast<Scalar>();
      default: {
        const auto& t = table(2 * cols);
        return rho_pipeline<Scalar>(l, cols, &t);
      }
    }
  }

  bool gl_mode_;
  std::optional<index_t> max_source_;
  std::mutex mutex_;
  std::map<Letter, std::shared_ptr<const WindowedMatrix<Scalar>>> cache_;
  std::shared_ptr<FactorizationTable> table_;
};

/// rho(word) on out_cols columns with integer entries.
inline IntMatrix rho(const GroupWord& w, index_t out_cols, std::optional<index_t> max_source = std::nullopt) {
  if (w.uses_W()) throw WNotEnabled();
  Representation<Integer> r(false, max_source);
  return r.evaluate(w, out_cols);
}

/// rho(W) on out_cols columns; its entries are rational.
inline RatMatrix rho_W(index_t out_cols) { return rho_pipeline<Rational>(Letter::W, out_cols); }

/// Checks S^4 = 1, (ST)^6 = 1 and S^2 = (ST)^3 under rho, each on the largest
/// column count whose leftmost factor fits in `source` rows.
inline SuiteReport verify_relations(index_t source) {
  SuiteReport report{"relations", {}};
  Representation<Integer> rep(false, source);
  const GroupWord s4 = GroupWord::parse("S^4");
  const GroupWord st6 = GroupWord::parse("S T S T S T S T S T S T");
  const GroupWord s2 = GroupWord::parse("S^2");
  const GroupWord st3 = GroupWord::parse("S T S T S T");

  auto one = [&](const std::string& name, const GroupWord& w) {
    const index_t cols = Representation<Integer>::affordable_cols(w, source);
    if (cols < 1) {
      report.add(name, 0, false, json{{"error", "source window too small"}});
      return;
    }
    const auto m = rep.evaluate(w, cols);
    add_matrix_check(report, name, m, scalar_identity<Integer>(cols, cols), cols);
  };
  one("rho(S)^4 = I", s4);
  one("(rho(S) D)^6 = I", st6);

  const index_t cols = std::min(Representation<Integer>::affordable_cols(s2, source),
                                Representation<Integer>::affordable_cols(st3, source));
  if (cols < 1) {
    report.add("rho(S)^2 = (rho(S) D)^3", 0, false, json{{"error", "source window too small"}});
  } else {
    add_matrix_check(report, "rho(S)^2 = (rho(S) D)^3", rep.evaluate(s2, cols), rep.evaluate(st3, cols), cols);
  }
  return report;
}

}  // namespace zeta_orbit
