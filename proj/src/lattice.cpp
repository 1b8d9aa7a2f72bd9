#include "k3orb/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace k3orb {

IntegerGram::IntegerGram(Matrix<std::int64_t> m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols()) {
    throw Error(ErrorCode::InvalidInput, "Gram matrix is not square");
  }
  if (m_ != m_.transpose()) {
    throw Error(ErrorCode::InvalidInput, "Gram matrix is not symmetric");
  }
}

bool IntegerGram::is_even() const {
  return m_.diagonal().unaryExpr([](std::int64_t v) { return v % 2 == 0; }).all();
}

BigInt IntegerGram::det() const { return determinant<BigInt>(to_big()); }

Signature signature(const IntegerGram& g) {
  const Eigen::Index n = g.dim();
  Matrix<Rational> a = g.matrix().cast<Rational>();
  std::vector<Eigen::Index> active(n);
  for (Eigen::Index i = 0; i < n; ++i) active[i] = i;

  Signature sig;
  while (!active.empty()) {
    auto pivot = std::find_if(active.begin(), active.end(),
                              [&](Eigen::Index i) { return a(i, i) != 0; });
    if (pivot == active.end()) {
      // Zero diagonal: replace e_i by e_i + e_j for some a(i, j) != 0, which
      // puts 2 a(i, j) on the diagonal.
      Eigen::Index pi = -1, pj = -1;
      for (auto i : active) {
        for (auto j : active) {
          if (i != j && a(i, j) != 0) {
            pi = i;
            pj = j;
            break;
          }
        }
        if (pi >= 0) break;
      }
      if (pi < 0) {
        sig.null += static_cast<int>(active.size());
        break;
      }
      a.row(pi) += a.row(pj);
      a.col(pi) += a.col(pj);
      pivot = std::find(active.begin(), active.end(), pi);
    }
    const Eigen::Index p = *pivot;
    const Rational d = a(p, p);
    (d > 0 ? sig.positive : sig.negative) += 1;
    active.erase(pivot);
    for (auto i : active) {
      if (a(i, p) == 0) continue;
      const Rational f = a(i, p) / d;
      for (auto j : active) a(i, j) -= f * a(p, j);
    }
    for (auto i : active) a(i, p) = a(p, i) = 0;
  }
  return sig;
}

IntegerGram direct_sum(const IntegerGram& a, const IntegerGram& b) {
  Matrix<std::int64_t> m = Matrix<std::int64_t>::Zero(a.dim() + b.dim(), a.dim() + b.dim());
  m.topLeftCorner(a.dim(), a.dim()) = a.matrix();
  m.bottomRightCorner(b.dim(), b.dim()) = b.matrix();
  return IntegerGram(std::move(m));
}

IntegerGram gram_of_config(const AdeConfig& c) {
  IntegerGram g{Matrix<std::int64_t>(0, 0)};
  for (const auto& t : c.entries()) g = direct_sum(g, IntegerGram(-cartan_matrix(t)));
  return g;
}

IntegerGram hyperbolic_plane() {
  Matrix<std::int64_t> u(2, 2);
  u << 0, 1, 1, 0;
  return IntegerGram(std::move(u));
}

IntegerGram e8_negative() { return IntegerGram(-cartan_matrix(DuValType::E(8))); }

IntegerGram k3_gram() {
  const auto u = hyperbolic_plane();
  const auto e8 = e8_negative();
  return direct_sum(direct_sum(direct_sum(direct_sum(u, u), u), e8), e8);
}

IntMatrix orthogonal_complement(const IntegerGram& ambient, std::span<const IntVector> vectors) {
  const Eigen::Index n = ambient.dim();
  if (vectors.empty()) return IntMatrix::Identity(n, n);
  IntMatrix pairing(static_cast<Eigen::Index>(vectors.size()), n);
  const IntMatrix g = ambient.to_big();
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].size() != n) {
      throw Error(ErrorCode::InvalidInput, "vector " + std::to_string(i) +
                                               " does not have the ambient dimension");
    }
    pairing.row(static_cast<Eigen::Index>(i)) = vectors[i].transpose() * g;
  }
  const auto snf = smith_normal_form<BigInt>(pairing);
  const Eigen::Index rank = snf.rank();
  IntMatrix basis = snf.V.rightCols(n - rank).transpose();
  return hermite_normal_form<BigInt>(std::move(basis));
}

BigInt quadratic_value(const IntegerGram& g, const Vector<std::int64_t>& x) {
  if (x.size() != g.dim()) throw Error(ErrorCode::InvalidInput, "vector has the wrong dimension");
  const IntVector big = x.cast<BigInt>();
  return big.dot(g.to_big() * big);
}

namespace {

using i128 = __int128;

int coordinate_key(std::int64_t x) {
  if (x == 0) return 0;
  return static_cast<int>(2 * std::llabs(x) - (x > 0 ? 1 : 0));
}

std::int64_t max_norm(const Vector<std::int64_t>& x) {
  std::int64_t m = 0;
  for (Eigen::Index i = 0; i < x.size(); ++i) m = std::max(m, std::abs(x[i]));
  return m;
}

// Exact integer square root of a nonnegative value, if it is a square.
std::optional<i128> exact_sqrt(i128 v) {
  if (v < 0) return std::nullopt;
  i128 s = static_cast<i128>(std::sqrt(static_cast<long double>(v)));
  while (s > 0 && s * s > v) --s;
  while ((s + 1) * (s + 1) <= v) ++s;
  if (s * s != v) return std::nullopt;
  return s;
}

class IsotropicSearch {
 public:
  IsotropicSearch(const Matrix<std::int64_t>& g, std::int64_t bound)
      : g_(g), n_(g.rows()), bound_(bound), x_(Vector<std::int64_t>::Zero(g.rows())) {}

  std::optional<Vector<std::int64_t>> run() {
    for (std::int64_t shell = 0; shell <= bound_; ++shell) {
      enumerate_shell(shell);
      if (best_ && max_norm(*best_) <= shell) return best_;
    }
    return best_;
  }

 private:
  // Visits every suffix (coordinates 1..n-1) of max-norm exactly `shell`
  // whose last nonzero coordinate is positive, splitting on the first
  // coordinate reaching the shell.
  void enumerate_shell(std::int64_t shell) {
    if (n_ == 1 || shell == 0) {
      if (shell == 0) {
        process_suffix();
      }
      return;
    }
    for (Eigen::Index first = 1; first < n_; ++first) fill(1, first, shell);
  }

  void fill(Eigen::Index pos, Eigen::Index first, std::int64_t shell) {
    if (pos == n_) {
      process_suffix();
      return;
    }
    if (pos == first) {
      for (std::int64_t v : {shell, -shell}) {
        x_[pos] = v;
        fill(pos + 1, first, shell);
      }
      x_[pos] = 0;
      return;
    }
    const std::int64_t lim = pos < first ? shell - 1 : shell;
    for (std::int64_t v = -lim; v <= lim; ++v) {
      x_[pos] = v;
      fill(pos + 1, first, shell);
    }
    x_[pos] = 0;
  }

  void process_suffix() {
    Eigen::Index last = n_ - 1;
    while (last >= 1 && x_[last] == 0) --last;
    const bool suffix_zero = last < 1;
    if (!suffix_zero && x_[last] < 0) return;

    // q(x) = a x0^2 + 2 b x0 + c
    const i128 a = g_(0, 0);
    i128 b = 0, c = 0;
    for (Eigen::Index i = 1; i < n_; ++i) {
      if (x_[i] == 0) continue;
      b += static_cast<i128>(g_(0, i)) * x_[i];
      i128 row = 0;
      for (Eigen::Index j = 1; j < n_; ++j) row += static_cast<i128>(g_(i, j)) * x_[j];
      c += row * x_[i];
    }

    auto offer = [&](i128 root) {
      if (root > bound_ || root < -bound_) return;
      if (suffix_zero && root <= 0) return;
      x_[0] = static_cast<std::int64_t>(root);
      if (!best_ || isotropic_order_less(x_, *best_)) best_ = x_;
      x_[0] = 0;
    };

    if (a == 0) {
      if (b == 0) {
        if (c == 0) offer(suffix_zero ? 1 : 0);
      } else if (c % (2 * b) == 0) {
        offer(-c / (2 * b));
      }
      return;
    }
    const auto s = exact_sqrt(b * b - a * c);
    if (!s) return;
    for (i128 num : {-b + *s, -b - *s}) {
      if (num % a == 0) offer(num / a);
    }
  }

  const Matrix<std::int64_t>& g_;
  Eigen::Index n_;
  std::int64_t bound_;
  Vector<std::int64_t> x_;
  std::optional<Vector<std::int64_t>> best_;
};

}  // namespace

bool isotropic_order_less(const Vector<std::int64_t>& x, const Vector<std::int64_t>& y) {
  const auto nx = max_norm(x);
  const auto ny = max_norm(y);
  if (nx != ny) return nx < ny;
  for (Eigen::Index i = x.size() - 1; i >= 0; --i) {
    const int kx = coordinate_key(x[i]);
    const int ky = coordinate_key(y[i]);
    if (kx != ky) return kx < ky;
  }
  return false;
}

std::optional<Vector<std::int64_t>> isotropic_search(const IntegerGram& g, std::int64_t bound) {
  if (bound < 1) throw Error(ErrorCode::InvalidInput, "search bound must be positive");
  if (bound > 1'000'000) throw Error(ErrorCode::InvalidInput, "search bound too large");
  if (g.dim() == 0) return std::nullopt;
  if (g.matrix().cwiseAbs().maxCoeff() > (std::int64_t{1} << 30)) {
    throw Error(ErrorCode::InvalidInput, "Gram entries too large for the search");
  }
  const auto sig = signature(g);
  if (sig.null == 0 && (sig.positive == 0 || sig.negative == 0)) return std::nullopt;
  return IsotropicSearch(g.matrix(), bound).run();
}

MeyerReport meyer_gate(const IntegerGram& g, std::int64_t bound) {
  MeyerReport report;
  report.sig = signature(g);
  report.hypotheses_hold = report.sig.positive > 0 && report.sig.negative > 0 &&
                           report.sig.positive + report.sig.negative >= 5;
  report.vector = isotropic_search(g, bound);
  if (report.vector) {
    report.status = MeyerStatus::Found;
  } else {
    report.status =
        report.hypotheses_hold ? MeyerStatus::HypothesesHoldButExhausted : MeyerStatus::Exhausted;
  }
  return report;
}

}  // namespace k3orb
