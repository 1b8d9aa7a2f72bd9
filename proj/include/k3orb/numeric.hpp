#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>

// Eigen 3.4 declares `const_iterator = void` on matrices, which Boost's
// byte-container probe (reached from number's converting constructor during
// overload resolution) turns into a hard error. Such types are never byte
// containers.
namespace boost::multiprecision::detail {
template <class C>
  requires std::is_void_v<typename C::const_iterator>
struct is_byte_container_imp<C, true> : boost::false_type {};
}  // namespace boost::multiprecision::detail

namespace k3orb {

// Expression templates are disabled so that both types interoperate with
// Eigen expressions and `auto` without dangling proxies.
using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<
    boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = Matrix<BigInt>;
using IntVector = Vector<BigInt>;
using Mat2 = Eigen::Matrix<std::int64_t, 2, 2>;

enum class ErrorCode {
  InvalidType,
  NotAde,
  FullSupportRemoved,
  NotAdeRemovedSet,
  UnknownComponent,
  EulerSumMismatch,
  DetNotOne,
  ProductNotIdentity,
  ClassMismatch,
  InvalidInput,
};

std::string_view to_string(ErrorCode code);

// Every recoverable failure in the library is reported with this type; the
// CLI maps it to exit code 1.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Normalized "p/q" form, always with an explicit denominator ("0/1", "24/1").
std::string to_fraction_string(const Rational& q);
/// Human form: integers without denominator, otherwise "p/q".
std::string to_display_string(const Rational& q);

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  return Rational(BigInt(num), BigInt(den));
}

}  // namespace k3orb
