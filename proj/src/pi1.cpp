#include "k3orb/pi1.hpp"

#include <algorithm>
#include <numeric>

#include "k3orb/lattice.hpp"

namespace k3orb {

std::string_view to_string(MonodromyBucket b) {
  switch (b) {
    case MonodromyBucket::Trivial: return "Trivial";
    case MonodromyBucket::Unipotent: return "I_n";
    case MonodromyBucket::NegativeUnipotent: return "I*_n";
    case MonodromyBucket::Order6: return "II/II*";
    case MonodromyBucket::Order4: return "III/III*";
    case MonodromyBucket::Order3: return "IV/IV*";
    case MonodromyBucket::Unrecognized: return "Unrecognized";
  }
  return "";
}

MonodromyBucket kodaira_class_of(const Mat2& t) {
  switch (t.trace()) {
    case 2: return t == Mat2::Identity() ? MonodromyBucket::Trivial : MonodromyBucket::Unipotent;
    case -2: return MonodromyBucket::NegativeUnipotent;
    case 1: return MonodromyBucket::Order6;
    case 0: return MonodromyBucket::Order4;
    case -1: return MonodromyBucket::Order3;
    default: return MonodromyBucket::Unrecognized;
  }
}

MonodromyBucket bucket_of(const KodairaType& t) {
  switch (t.family()) {
    case KodairaFamily::I: return MonodromyBucket::Unipotent;
    case KodairaFamily::IStar: return MonodromyBucket::NegativeUnipotent;
    case KodairaFamily::II:
    case KodairaFamily::IIStar: return MonodromyBucket::Order6;
    case KodairaFamily::III:
    case KodairaFamily::IIIStar: return MonodromyBucket::Order4;
    case KodairaFamily::IV:
    case KodairaFamily::IVStar: return MonodromyBucket::Order3;
  }
  return MonodromyBucket::Unrecognized;
}

std::optional<int> multiplicative_order(const Mat2& t) {
  // Finite-order elements of SL(2,Z) have order 1, 2, 3, 4 or 6.
  Mat2 p = t;
  for (int k = 1; k <= 6; ++k) {
    if (p == Mat2::Identity()) return k;
    p = p * t;
  }
  return std::nullopt;
}

namespace {

std::int64_t content(const Mat2& m) {
  std::int64_t g = 0;
  for (Eigen::Index i = 0; i < 4; ++i) g = std::gcd(g, m(i));
  return g;
}

}  // namespace

void validate_representation(const MonodromyRep& rep) {
  if (!rep.declared.empty() && rep.declared.size() != rep.matrices.size()) {
    throw Error(ErrorCode::InvalidInput, "declared labels do not match the number of matrices");
  }
  Mat2 product = Mat2::Identity();
  for (std::size_t j = 0; j < rep.matrices.size(); ++j) {
    const Mat2& t = rep.matrices[j];
    if (t(0, 0) * t(1, 1) - t(0, 1) * t(1, 0) != 1) {
      throw Error(ErrorCode::DetNotOne, "matrix " + std::to_string(j + 1) + " has determinant " +
                                            std::to_string(t(0, 0) * t(1, 1) - t(0, 1) * t(1, 0)) + ", expected 1");
    }
    product = product * t;
  }
  if (product != Mat2::Identity()) {
    throw Error(ErrorCode::ProductNotIdentity, "ordered product of the monodromies is not the identity");
  }
  for (std::size_t j = 0; j < rep.declared.size(); ++j) {
    if (!rep.declared[j]) continue;
    const KodairaType& type = *rep.declared[j];
    const Mat2& t = rep.matrices[j];
    bool ok = kodaira_class_of(t) == bucket_of(type);
    if (ok && type.family() == KodairaFamily::I) {
      ok = content(t - Mat2::Identity()) == type.index();
    } else if (ok && type.family() == KodairaFamily::IStar) {
      ok = content(t + Mat2::Identity()) == type.index();
    }
    if (!ok) {
      throw Error(ErrorCode::ClassMismatch, "matrix " + std::to_string(j + 1) +
                                                " is not a monodromy of type " + type.label());
    }
  }
}

bool AbelianGroup::is_finite() const {
  return std::none_of(invariant_factors.begin(), invariant_factors.end(),
                      [](const BigInt& d) { return d == 0; });
}

std::string AbelianGroup::to_string() const {
  if (invariant_factors.empty()) return "trivial";
  std::string out;
  int free_rank = 0;
  for (const auto& d : invariant_factors) {
    if (d == 0) {
      ++free_rank;
      continue;
    }
    if (!out.empty()) out += " x ";
    out += "Z/" + d.str();
  }
  if (free_rank > 0) {
    if (!out.empty()) out += " x ";
    out += free_rank == 1 ? "Z" : "Z^" + std::to_string(free_rank);
  }
  return out;
}

AbelianGroup coinvariant_quotient(const MonodromyRep& rep, std::span<const std::size_t> subset) {
  IntMatrix relations = IntMatrix::Zero(2, 2 * static_cast<Eigen::Index>(subset.size()));
  Eigen::Index col = 0;
  for (std::size_t j : subset) {
    if (j >= rep.matrices.size()) {
      throw Error(ErrorCode::InvalidInput,
                  "subset index " + std::to_string(j + 1) + " is out of range");
    }
    relations.middleCols(col, 2) = (Mat2::Identity() - rep.matrices[j]).cast<BigInt>();
    col += 2;
  }
  const auto snf = smith_normal_form<BigInt>(relations);
  AbelianGroup g;
  for (Eigen::Index i = 0; i < 2; ++i) {
    const BigInt d = i < std::min<Eigen::Index>(2, relations.cols()) ? snf.D(i, i) : BigInt(0);
    if (d != 1) g.invariant_factors.push_back(d);
  }
  // SNF puts zeros after the nonzero factors already.
  return g;
}

AbelianGroup coinvariant_quotient(const MonodromyRep& rep) {
  std::vector<std::size_t> all(rep.matrices.size());
  std::iota(all.begin(), all.end(), std::size_t{0});
  return coinvariant_quotient(rep, all);
}

}  // namespace k3orb
