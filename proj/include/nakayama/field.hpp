#pragma once

// Exact scalar types usable as Eigen::Matrix coefficients.
//
// Rational is GMP-backed and is the default field.  ModP is a residue modulo
// a prime whose modulus lives in thread-local state (set with ModulusGuard),
// so that Eigen can default-construct and convert integer literals without
// knowing the modulus.

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <Eigen/Core>

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace nakayama {

using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

bool is_prime(std::uint64_t n);

class ModP {
 public:
  ModP() = default;
  ModP(long long v);  // NOLINT: implicit, Eigen builds literals from ints

  static std::uint32_t modulus();

  std::uint32_t value() const { return value_; }

  ModP& operator+=(ModP o);
  ModP& operator-=(ModP o);
  ModP& operator*=(ModP o);
  ModP& operator/=(ModP o);

  friend ModP operator+(ModP a, ModP b) { return a += b; }
  friend ModP operator-(ModP a, ModP b) { return a -= b; }
  friend ModP operator*(ModP a, ModP b) { return a *= b; }
  friend ModP operator/(ModP a, ModP b) { return a /= b; }
  ModP operator-() const { return ModP() - *this; }

  friend bool operator==(ModP a, ModP b) { return a.value_ == b.value_; }
  friend bool operator!=(ModP a, ModP b) { return a.value_ != b.value_; }

  ModP inverse() const;

 private:
  friend class ModulusGuard;
  std::uint32_t value_ = 0;
};

std::ostream& operator<<(std::ostream& os, ModP x);

// Sets the thread's modulus for ModP for the guard's lifetime.
class ModulusGuard {
 public:
  explicit ModulusGuard(std::uint32_t p);
  ~ModulusGuard();
  ModulusGuard(const ModulusGuard&) = delete;
  ModulusGuard& operator=(const ModulusGuard&) = delete;

 private:
  std::uint32_t previous_;
};

// Field descriptor carried by an algebra and by run configurations.
struct FieldSpec {
  enum class Kind { rationals, prime };
  Kind kind = Kind::rationals;
  std::uint32_t modulus = 0;

  static FieldSpec rationals() { return {}; }
  static FieldSpec prime(std::uint32_t p);
  // "q" or "fp:P"
  static FieldSpec parse(const std::string& text);
  std::string to_string() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

template <class Scalar>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static constexpr bool characteristic_zero = true;
  static std::uint64_t characteristic() { return 0; }
  static bool is_zero(const Rational& x) { return x == 0; }
  static std::string to_string(const Rational& x);
};

template <>
struct ScalarTraits<ModP> {
  static constexpr bool characteristic_zero = false;
  static std::uint64_t characteristic() { return ModP::modulus(); }
  static bool is_zero(ModP x) { return x.value() == 0; }
  static std::string to_string(ModP x) { return std::to_string(x.value()); }
};

template <class Scalar>
bool is_zero(const Scalar& x) {
  return ScalarTraits<Scalar>::is_zero(x);
}

}  // namespace nakayama

namespace Eigen {

template <>
struct NumTraits<nakayama::ModP> : GenericNumTraits<nakayama::ModP> {
  using Real = nakayama::ModP;
  using NonInteger = nakayama::ModP;
  using Nested = nakayama::ModP;
  using Literal = nakayama::ModP;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 0,
    ReadCost = 1,
    AddCost = 2,
    MulCost = 4
  };
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
