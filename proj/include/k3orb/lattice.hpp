#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "k3orb/dynkin.hpp"
#include "k3orb/numeric.hpp"

namespace k3orb {

template <typename Scalar>
struct SnfResult {
  Matrix<Scalar> U;  // rows x rows, unimodular
  Matrix<Scalar> D;  // rows x cols, diagonal d_1 | d_2 | ... then zeros
  Matrix<Scalar> V;  // cols x cols, unimodular

  std::vector<Scalar> diagonal() const {
    std::vector<Scalar> d;
    for (Eigen::Index i = 0; i < std::min(D.rows(), D.cols()); ++i) d.push_back(D(i, i));
    return d;
  }
  Eigen::Index rank() const {
    Eigen::Index r = 0;
    while (r < std::min(D.rows(), D.cols()) && D(r, r) != Scalar(0)) ++r;
    return r;
  }
};

namespace detail {

template <typename Scalar>
Scalar abs_value(const Scalar& x) {
  return x < Scalar(0) ? Scalar(-x) : x;
}

}  // namespace detail

/// Smith normal form U*A*V = D of an arbitrary integer matrix, by elementary
/// unimodular row and column operations. Works for any exact integral scalar.
template <typename Scalar>
SnfResult<Scalar> smith_normal_form(const Matrix<Scalar>& A) {
  using detail::abs_value;
  const Eigen::Index m = A.rows();
  const Eigen::Index n = A.cols();
  SnfResult<Scalar> r{Matrix<Scalar>::Identity(m, m), A, Matrix<Scalar>::Identity(n, n)};
  auto& D = r.D;
  auto& U = r.U;
  auto& V = r.V;

  for (Eigen::Index t = 0; t < std::min(m, n); ++t) {
    for (;;) {
      // Bring the smallest nonzero entry of the trailing block to (t, t).
      Eigen::Index pi = -1, pj = -1;
      for (Eigen::Index i = t; i < m; ++i) {
        for (Eigen::Index j = t; j < n; ++j) {
          if (D(i, j) != Scalar(0) &&
              (pi < 0 || abs_value(D(i, j)) < abs_value(D(pi, pj)))) {
            pi = i;
            pj = j;
          }
        }
      }
      if (pi < 0) return r;
      if (pi != t) {
        D.row(t).swap(D.row(pi));
        U.row(t).swap(U.row(pi));
      }
      if (pj != t) {
        D.col(t).swap(D.col(pj));
        V.col(t).swap(V.col(pj));
      }

      bool clean = true;
      for (Eigen::Index i = t + 1; i < m; ++i) {
        if (D(i, t) == Scalar(0)) continue;
        const Scalar q = D(i, t) / D(t, t);
        D.row(i) -= q * D.row(t);
        U.row(i) -= q * U.row(t);
        if (D(i, t) != Scalar(0)) clean = false;
      }
      for (Eigen::Index j = t + 1; j < n; ++j) {
        if (D(t, j) == Scalar(0)) continue;
        const Scalar q = D(t, j) / D(t, t);
        D.col(j) -= q * D.col(t);
        V.col(j) -= q * V.col(t);
        if (D(t, j) != Scalar(0)) clean = false;
      }
      if (!clean) continue;

      // Pivot isolated; enforce divisibility of the remaining block.
      Eigen::Index bad = -1;
      for (Eigen::Index i = t + 1; i < m && bad < 0; ++i) {
        for (Eigen::Index j = t + 1; j < n; ++j) {
          if (D(i, j) % D(t, t) != Scalar(0)) {
            bad = i;
            break;
          }
        }
      }
      if (bad < 0) break;
      D.row(t) += D.row(bad);
      U.row(t) += U.row(bad);
    }
    if (D(t, t) < Scalar(0)) {
      D.row(t) = -D.row(t);
      U.row(t) = -U.row(t);
    }
  }
  return r;
}

/// Exact determinant by fraction-free (Bareiss) elimination.
template <typename Scalar>
Scalar determinant(Matrix<Scalar> a) {
  const Eigen::Index n = a.rows();
  if (n == 0) return Scalar(1);
  Scalar sign(1);
  Scalar prev(1);
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (a(k, k) == Scalar(0)) {
      Eigen::Index swap = k + 1;
      while (swap < n && a(swap, k) == Scalar(0)) ++swap;
      if (swap == n) return Scalar(0);
      a.row(k).swap(a.row(swap));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      }
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

/// Row Hermite normal form of a matrix whose rows are linearly independent:
/// upper echelon, positive pivots, entries above each pivot reduced to
/// [0, pivot). A canonical basis of the row lattice.
template <typename Scalar>
Matrix<Scalar> hermite_normal_form(Matrix<Scalar> b) {
  using detail::abs_value;
  const Eigen::Index rows = b.rows();
  const Eigen::Index cols = b.cols();
  Eigen::Index lead = 0;
  for (Eigen::Index col = 0; col < cols && lead < rows; ++col) {
    for (;;) {
      Eigen::Index pivot = -1;
      for (Eigen::Index i = lead; i < rows; ++i) {
        if (b(i, col) != Scalar(0) && (pivot < 0 || abs_value(b(i, col)) < abs_value(b(pivot, col)))) {
          pivot = i;
        }
      }
      if (pivot < 0) break;
      b.row(lead).swap(b.row(pivot));
      bool done = true;
      for (Eigen::Index i = lead + 1; i < rows; ++i) {
        if (b(i, col) == Scalar(0)) continue;
        const Scalar q = b(i, col) / b(lead, col);
        b.row(i) -= q * b.row(lead);
        if (b(i, col) != Scalar(0)) done = false;
      }
      if (!done) continue;
      if (b(lead, col) < Scalar(0)) b.row(lead) = -b.row(lead);
      for (Eigen::Index i = 0; i < lead; ++i) {
        Scalar q = b(i, col) / b(lead, col);
        if (b(i, col) - q * b(lead, col) < Scalar(0)) q -= Scalar(1);
        b.row(i) -= q * b.row(lead);
      }
      ++lead;
      break;
    }
  }
  return b;
}

/// Symmetric integer matrix representing a lattice.
class IntegerGram {
 public:
  IntegerGram() = default;
  /// Throws Error(InvalidInput) if `m` is not square and symmetric.
  explicit IntegerGram(Matrix<std::int64_t> m);

  const Matrix<std::int64_t>& matrix() const noexcept { return m_; }
  Eigen::Index dim() const noexcept { return m_.rows(); }
  bool is_even() const;
  BigInt det() const;
  IntMatrix to_big() const { return m_.cast<BigInt>(); }

 private:
  Matrix<std::int64_t> m_;
};

struct Signature {
  int positive = 0;
  int negative = 0;
  int null = 0;
  bool operator==(const Signature&) const = default;
};

/// Inertia by exact rational congruence diagonalization.
Signature signature(const IntegerGram& g);

/// Block-diagonal sum of negated Cartan matrices.
IntegerGram gram_of_config(const AdeConfig& c);

IntegerGram hyperbolic_plane();
/// Negative definite E8 lattice.
IntegerGram e8_negative();
/// U + U + U + E8(-1) + E8(-1): even, unimodular, signature (3,19).
IntegerGram k3_gram();

IntegerGram direct_sum(const IntegerGram& a, const IntegerGram& b);

/// Saturated integral basis (rows, in Hermite normal form) of the vectors
/// pairing to zero with every input vector. An empty input yields the
/// standard basis.
IntMatrix orthogonal_complement(const IntegerGram& ambient, std::span<const IntVector> vectors);

/// x^T G x in exact arithmetic.
BigInt quadratic_value(const IntegerGram& g, const Vector<std::int64_t>& x);

/// Bounded search for a nonzero x with |x_i| <= bound and x.x = 0.
///
/// The result is canonical: among solutions normalized so that their last
/// nonzero coordinate is positive, the one with the smallest max-norm, ties
/// broken by comparing coordinates from the last to the first under
/// 0 < 1 < -1 < 2 < -2 < ... . Returns nullopt when no solution exists in
/// the box (or the form is definite, which rules out any solution).
std::optional<Vector<std::int64_t>> isotropic_search(const IntegerGram& g, std::int64_t bound);

/// True iff x precedes y in the canonical isotropic-search order.
bool isotropic_order_less(const Vector<std::int64_t>& x, const Vector<std::int64_t>& y);

enum class MeyerStatus { Found, HypothesesHoldButExhausted, Exhausted };

struct MeyerReport {
  Signature sig;
  bool hypotheses_hold;  // indefinite and rank >= 5
  MeyerStatus status;
  std::optional<Vector<std::int64_t>> vector;
};

MeyerReport meyer_gate(const IntegerGram& g, std::int64_t bound);

}  // namespace k3orb
