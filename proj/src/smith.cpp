#include "mbposet/smith.hpp"

#include <cstdint>
#include <stdexcept>
#include <type_traits>
#include <utility>

namespace mbposet {
namespace {

struct Overflow {};

// Checked arithmetic: native words throw Overflow so the caller can restart
// the reduction in arbitrary precision.
inline std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Overflow{};
  return r;
}
inline std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
  return r;
}
inline std::int64_t neg(std::int64_t a) {
  if (a == INT64_MIN) throw Overflow{};
  return -a;
}
inline std::int64_t quot(std::int64_t a, std::int64_t b) {
  if (a == INT64_MIN && b == -1) throw Overflow{};
  return a / b;
}
inline Integer add(const Integer& a, const Integer& b) { return a + b; }
inline Integer mul(const Integer& a, const Integer& b) { return a * b; }
inline Integer neg(const Integer& a) { return -a; }
inline Integer quot(const Integer& a, const Integer& b) { return a / b; }

template <typename T>
T magnitude(const T& v) {
  return v < 0 ? neg(v) : v;
}

template <typename T>
struct Dense {
  std::size_t rows = 0, cols = 0;
  std::vector<T> data;
  Dense() = default;
  Dense(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, T(0)) {}
  T& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  const T& at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
  static Dense identity(std::size_t n) {
    Dense d(n, n);
    for (std::size_t i = 0; i < n; ++i) d.at(i, i) = T(1);
    return d;
  }
};

// Row/column reduction with smallest-magnitude pivots. When `track` is set,
// P A Q = D is maintained together with P^-1 and Q^-1.
template <typename T>
class Reducer {
 public:
  Reducer(Dense<T> a, bool track) : a_(std::move(a)), track_(track) {
    if (track_) {
      p_ = Dense<T>::identity(a_.rows);
      p_inv_ = Dense<T>::identity(a_.rows);
      q_ = Dense<T>::identity(a_.cols);
      q_inv_ = Dense<T>::identity(a_.cols);
    }
  }

  void run() {
    const std::size_t limit = std::min(a_.rows, a_.cols);
    for (std::size_t t = 0; t < limit; ++t) {
      auto pivot = smallest_in_block(t);
      if (!pivot) break;
      swap_rows(t, pivot->first);
      swap_cols(t, pivot->second);
      while (true) {
        clear_cross(t);
        auto bad = non_divisible_entry(t);
        if (!bad) break;
        add_row(t, *bad, T(1));
      }
      if (a_.at(t, t) < 0) negate_row(t);
    }
  }

  Dense<T> a_, p_, p_inv_, q_, q_inv_;

 private:
  bool track_;

  std::optional<std::pair<std::size_t, std::size_t>> smallest_in_block(std::size_t t) const {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    T best_value{};
    for (std::size_t i = t; i < a_.rows; ++i)
      for (std::size_t j = t; j < a_.cols; ++j) {
        const T& v = a_.at(i, j);
        if (v == 0) continue;
        T m = magnitude(v);
        if (!best || m < best_value) {
          best = {i, j};
          best_value = m;
          if (best_value == 1) return best;
        }
      }
    return best;
  }

  // Zeroes row t and column t off the pivot, re-pivoting on remainders.
  void clear_cross(std::size_t t) {
    while (true) {
      bool clean = true;
      for (std::size_t i = t + 1; i < a_.rows; ++i) {
        if (a_.at(i, t) == 0) continue;
        T q = quot(a_.at(i, t), a_.at(t, t));
        add_row(i, t, neg(q));
        if (a_.at(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < a_.cols; ++j) {
        if (a_.at(t, j) == 0) continue;
        T q = quot(a_.at(t, j), a_.at(t, t));
        add_col(j, t, neg(q));
        if (a_.at(t, j) != 0) clean = false;
      }
      if (clean) return;
      // A remainder smaller than the pivot survived; move it to the pivot.
      std::size_t bi = t, bj = t;
      T best = magnitude(a_.at(t, t));
      for (std::size_t i = t + 1; i < a_.rows; ++i)
        if (a_.at(i, t) != 0 && magnitude(a_.at(i, t)) < best) {
          best = magnitude(a_.at(i, t));
          bi = i;
          bj = t;
        }
      for (std::size_t j = t + 1; j < a_.cols; ++j)
        if (a_.at(t, j) != 0 && magnitude(a_.at(t, j)) < best) {
          best = magnitude(a_.at(t, j));
          bi = t;
          bj = j;
        }
      swap_rows(t, bi);
      swap_cols(t, bj);
    }
  }

  std::optional<std::size_t> non_divisible_entry(std::size_t t) const {
    const T& p = a_.at(t, t);
    for (std::size_t i = t + 1; i < a_.rows; ++i)
      for (std::size_t j = t + 1; j < a_.cols; ++j) {
        const T& v = a_.at(i, j);
        if (v != 0 && add(v, neg(mul(quot(v, p), p))) != 0) return i;
      }
    return std::nullopt;
  }

  // row_i += c * row_j
  void add_row(std::size_t i, std::size_t j, const T& c) {
    if (c == 0) return;
    for (std::size_t k = 0; k < a_.cols; ++k)
      if (a_.at(j, k) != 0) a_.at(i, k) = add(a_.at(i, k), mul(c, a_.at(j, k)));
    if (!track_) return;
    for (std::size_t k = 0; k < p_.cols; ++k)
      if (p_.at(j, k) != 0) p_.at(i, k) = add(p_.at(i, k), mul(c, p_.at(j, k)));
    T nc = neg(c);
    for (std::size_t k = 0; k < p_inv_.rows; ++k)
      if (p_inv_.at(k, i) != 0) p_inv_.at(k, j) = add(p_inv_.at(k, j), mul(nc, p_inv_.at(k, i)));
  }

  // col_i += c * col_j
  void add_col(std::size_t i, std::size_t j, const T& c) {
    if (c == 0) return;
    for (std::size_t k = 0; k < a_.rows; ++k)
      if (a_.at(k, j) != 0) a_.at(k, i) = add(a_.at(k, i), mul(c, a_.at(k, j)));
    if (!track_) return;
    for (std::size_t k = 0; k < q_.rows; ++k)
      if (q_.at(k, j) != 0) q_.at(k, i) = add(q_.at(k, i), mul(c, q_.at(k, j)));
    T nc = neg(c);
    for (std::size_t k = 0; k < q_inv_.cols; ++k)
      if (q_inv_.at(i, k) != 0) q_inv_.at(j, k) = add(q_inv_.at(j, k), mul(nc, q_inv_.at(i, k)));
  }

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < a_.cols; ++k) std::swap(a_.at(i, k), a_.at(j, k));
    if (!track_) return;
    for (std::size_t k = 0; k < p_.cols; ++k) std::swap(p_.at(i, k), p_.at(j, k));
    for (std::size_t k = 0; k < p_inv_.rows; ++k) std::swap(p_inv_.at(k, i), p_inv_.at(k, j));
  }

  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < a_.rows; ++k) std::swap(a_.at(k, i), a_.at(k, j));
    if (!track_) return;
    for (std::size_t k = 0; k < q_.rows; ++k) std::swap(q_.at(k, i), q_.at(k, j));
    for (std::size_t k = 0; k < q_inv_.cols; ++k) std::swap(q_inv_.at(i, k), q_inv_.at(j, k));
  }

  void negate_row(std::size_t i) {
    for (std::size_t k = 0; k < a_.cols; ++k) a_.at(i, k) = neg(a_.at(i, k));
    if (!track_) return;
    for (std::size_t k = 0; k < p_.cols; ++k) p_.at(i, k) = neg(p_.at(i, k));
    for (std::size_t k = 0; k < p_inv_.rows; ++k) p_inv_.at(k, i) = neg(p_inv_.at(k, i));
  }
};

template <typename T>
Dense<T> to_dense(const IntegerMatrix& m) {
  Dense<T> d(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if constexpr (std::is_same_v<T, std::int64_t>) {
        auto v = to_int64(m(r, c));
        if (!v) throw Overflow{};
        d.at(r, c) = *v;
      } else {
        d.at(r, c) = m(r, c);
      }
    }
  return d;
}

template <typename T>
IntegerMatrix to_matrix(const Dense<T>& d) {
  IntegerMatrix m(d.rows, d.cols);
  for (std::size_t r = 0; r < d.rows; ++r)
    for (std::size_t c = 0; c < d.cols; ++c) m(r, c) = Integer(d.at(r, c));
  return m;
}

template <typename T>
SmithDecomposition decompose(const IntegerMatrix& a, bool track) {
  Reducer<T> reducer(to_dense<T>(a), track);
  reducer.run();
  SmithDecomposition out;
  out.diagonal = to_matrix(reducer.a_);
  for (std::size_t i = 0; i < std::min(a.rows(), a.cols()); ++i) {
    if (out.diagonal(i, i) == 0) break;
    out.invariant_factors.push_back(out.diagonal(i, i));
  }
  if (track) {
    // P A Q = D, so A = P^-1 D Q^-1.
    out.left = to_matrix(reducer.p_inv_);
    out.left_inverse = to_matrix(reducer.p_);
    out.right = to_matrix(reducer.q_inv_);
    out.right_inverse = to_matrix(reducer.q_);
  }
  return out;
}

SmithDecomposition decompose_escalating(const IntegerMatrix& a, bool track) {
  try {
    return decompose<std::int64_t>(a, track);
  } catch (const Overflow&) {
    return decompose<Integer>(a, track);
  }
}

}  // namespace

SmithDecomposition smith_normal_form(const IntegerMatrix& a) { return decompose_escalating(a, true); }

std::vector<Integer> invariant_factors(const IntegerMatrix& a) {
  return decompose_escalating(a, false).invariant_factors;
}

IntegerMatrix kernel_basis(const IntegerMatrix& a) {
  if (a.cols() == 0) return IntegerMatrix(0, 0);
  if (a.rows() == 0) return IntegerMatrix::identity(a.cols());
  SmithDecomposition s = smith_normal_form(a);
  // A Q = P^-1 D: the trailing columns of Q span the kernel.
  return s.right_inverse.columns(s.rank(), a.cols() - s.rank());
}

std::optional<std::vector<Integer>> solve(const IntegerMatrix& a, const std::vector<Integer>& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("right-hand side length mismatch");
  if (a.cols() == 0) {
    for (const auto& v : b)
      if (v != 0) return std::nullopt;
    return std::vector<Integer>{};
  }
  if (a.rows() == 0) return std::vector<Integer>(a.cols());
  SmithDecomposition s = smith_normal_form(a);
  std::vector<Integer> c = s.left_inverse * b;
  std::vector<Integer> y(a.cols());
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i < s.rank()) {
      const Integer& d = s.invariant_factors[i];
      if (c[i] % d != 0) return std::nullopt;
      y[i] = c[i] / d;
    } else if (c[i] != 0) {
      return std::nullopt;
    }
  }
  return s.right_inverse * y;
}

std::optional<IntegerMatrix> solve(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (b.rows() != a.rows()) throw std::invalid_argument("right-hand side shape mismatch");
  IntegerMatrix x(a.cols(), b.cols());
  if (b.cols() == 0) return x;
  if (a.cols() == 0 || a.rows() == 0) {
    for (std::size_t c = 0; c < b.cols(); ++c) {
      auto col = solve(a, b.column(c));
      if (!col) return std::nullopt;
    }
    return x;
  }
  SmithDecomposition s = smith_normal_form(a);
  for (std::size_t col = 0; col < b.cols(); ++col) {
    std::vector<Integer> c = s.left_inverse * b.column(col);
    std::vector<Integer> y(a.cols());
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i < s.rank()) {
        const Integer& d = s.invariant_factors[i];
        if (c[i] % d != 0) return std::nullopt;
        y[i] = c[i] / d;
      } else if (c[i] != 0) {
        return std::nullopt;
      }
    }
    x.set_column(col, s.right_inverse * y);
  }
  return x;
}

}  // namespace mbposet
