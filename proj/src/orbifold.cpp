#include "k3orb/orbifold.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace k3orb {

OrbifoldSignature::OrbifoldSignature(std::vector<int> orders) {
  for (int m : orders) {
    if (m < 1) {
      throw Error(ErrorCode::InvalidInput, "cone order " + std::to_string(m) + " is not positive");
    }
    if (m > 1) orders_.push_back(m);
  }
  std::sort(orders_.begin(), orders_.end());
}

OrbifoldSignature OrbifoldSignature::parse(std::string_view text) {
  std::vector<int> orders;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const auto item = text.substr(0, comma);
    int m = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), m);
    if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size()) {
      throw Error(ErrorCode::InvalidInput, "bad cone order '" + std::string(item) + "'");
    }
    orders.push_back(m);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
    if (text.empty()) throw Error(ErrorCode::InvalidInput, "trailing comma in signature");
  }
  return OrbifoldSignature(std::move(orders));
}

std::string OrbifoldSignature::to_string() const {
  std::string out;
  for (int m : orders_) {
    if (!out.empty()) out += ',';
    out += std::to_string(m);
  }
  return out;
}

Rational orbifold_euler_characteristic(const OrbifoldSignature& s) {
  Rational chi(2);
  for (int m : s.orders()) chi -= Rational(1) - make_rational(1, m);
  return chi;
}

std::string_view to_string(OrbifoldKind kind) {
  switch (kind) {
    case OrbifoldKind::SphericalOrBad: return "SphericalOrBad";
    case OrbifoldKind::Euclidean: return "Euclidean";
    case OrbifoldKind::Hyperbolic: return "Hyperbolic";
  }
  return "";
}

OrbifoldClass classify(const OrbifoldSignature& s) {
  const auto& m = s.orders();
  switch (m.size()) {
    case 0:
    case 1: return {OrbifoldKind::SphericalOrBad, 1};
    case 2: return {OrbifoldKind::SphericalOrBad, std::gcd(m[0], m[1])};
    default: break;
  }
  const Rational chi = orbifold_euler_characteristic(s);
  if (chi > 0) {
    const Rational order = Rational(2) / chi;
    if (denominator(order) != 1) throw std::logic_error("spherical order 2/chi is not integral");
    return {OrbifoldKind::SphericalOrBad, static_cast<std::int64_t>(numerator(order))};
  }
  if (chi == 0) {
    const bool known = m == std::vector{2, 3, 6} || m == std::vector{2, 4, 4} ||
                       m == std::vector{3, 3, 3} || m == std::vector{2, 2, 2, 2};
    if (!known) throw std::logic_error("chi = 0 outside the euclidean pattern table");
    return {OrbifoldKind::Euclidean, std::nullopt};
  }
  return {OrbifoldKind::Hyperbolic, std::nullopt};
}

namespace {

// Hasse-Lenz-Trotter style Todd-Coxeter enumeration with coincidence
// handling; the subgroup is trivial.
class CosetTable {
 public:
  CosetTable(int generators, const std::vector<std::vector<int>>& relators, std::int64_t limit)
      : columns_(2 * generators), relators_(relators), limit_(limit) {
    new_row();
  }

  std::optional<std::int64_t> run() {
    for (std::size_t alpha = 0; alpha < parent_.size(); ++alpha) {
      for (const auto& w : relators_) {
        if (!live(alpha)) break;
        if (!scan_and_fill(static_cast<int>(alpha), w)) return std::nullopt;
      }
      if (!live(alpha)) continue;
      for (int x = 0; x < columns_; ++x) {
        if (at(static_cast<int>(alpha), x) == -1 && !define(static_cast<int>(alpha), x)) {
          return std::nullopt;
        }
      }
    }
    std::int64_t count = 0;
    for (std::size_t c = 0; c < parent_.size(); ++c) count += live(c) ? 1 : 0;
    return count;
  }

 private:
  static int inverse(int x) { return x ^ 1; }
  int& at(int coset, int x) { return table_[static_cast<std::size_t>(coset) * columns_ + x]; }
  bool live(std::size_t c) const { return parent_[c] == static_cast<int>(c); }

  void new_row() {
    parent_.push_back(static_cast<int>(parent_.size()));
    table_.resize(table_.size() + columns_, -1);
  }

  bool define(int coset, int x) {
    if (static_cast<std::int64_t>(parent_.size()) >= limit_) return false;
    const int fresh = static_cast<int>(parent_.size());
    new_row();
    at(coset, x) = fresh;
    at(fresh, inverse(x)) = coset;
    return true;
  }

  int rep(int c) {
    int root = c;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[c] != root) {
      const int next = parent_[c];
      parent_[c] = root;
      c = next;
    }
    return root;
  }

  void merge(int k, int l, std::vector<int>& queue) {
    const int a = rep(k);
    const int b = rep(l);
    if (a == b) return;
    const int lo = std::min(a, b);
    const int hi = std::max(a, b);
    parent_[hi] = lo;
    queue.push_back(hi);
  }

  void coincidence(int a, int b) {
    std::vector<int> queue;
    merge(a, b, queue);
    for (std::size_t i = 0; i < queue.size(); ++i) {
      const int gamma = queue[i];
      for (int x = 0; x < columns_; ++x) {
        const int delta = at(gamma, x);
        if (delta == -1) continue;
        at(delta, inverse(x)) = -1;
        const int mu = rep(gamma);
        const int nu = rep(delta);
        if (at(mu, x) != -1) {
          merge(nu, at(mu, x), queue);
        } else if (at(nu, inverse(x)) != -1) {
          merge(mu, at(nu, inverse(x)), queue);
        } else {
          at(mu, x) = nu;
          at(nu, inverse(x)) = mu;
        }
      }
    }
  }

  bool scan_and_fill(int alpha, const std::vector<int>& w) {
    int f = alpha;
    int b = alpha;
    std::size_t i = 0;
    std::size_t j = w.size();  // w[i..j) still unscanned
    for (;;) {
      while (i < j && at(f, w[i]) != -1) f = at(f, w[i++]);
      if (i == j) {
        if (f != alpha) coincidence(f, alpha);
        return true;
      }
      while (j > i && at(b, inverse(w[j - 1])) != -1) b = at(b, inverse(w[--j]));
      if (j == i) {
        coincidence(f, b);
        return true;
      }
      if (j == i + 1) {
        at(f, w[i]) = b;
        at(b, inverse(w[i])) = f;
        return true;
      }
      if (!define(f, w[i])) return false;
    }
  }

  int columns_;
  const std::vector<std::vector<int>>& relators_;
  std::int64_t limit_;
  std::vector<int> table_;
  std::vector<int> parent_;
};

}  // namespace

std::optional<std::int64_t> enumerate_cosets(int generators,
                                             const std::vector<std::vector<int>>& relators,
                                             std::int64_t limit) {
  return CosetTable(generators, relators, limit).run();
}

std::optional<std::int64_t> group_order_oracle(const OrbifoldSignature& s, std::int64_t limit) {
  const auto& m = s.orders();
  const int k = static_cast<int>(m.size());
  std::vector<std::vector<int>> relators;
  for (int g = 0; g < k; ++g) relators.emplace_back(m[g], 2 * g);
  std::vector<int> product;
  for (int g = 0; g < k; ++g) product.push_back(2 * g);
  if (!product.empty()) relators.push_back(std::move(product));
  return enumerate_cosets(k, relators, limit);
}

}  // namespace k3orb
