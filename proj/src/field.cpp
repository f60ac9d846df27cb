#include "nakayama/field.hpp"

#include <ostream>
#include <sstream>

namespace nakayama {

namespace {
thread_local std::uint32_t tls_modulus = 101;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint32_t ModP::modulus() { return tls_modulus; }

ModP::ModP(long long v) {
  const long long p = tls_modulus;
  long long r = v % p;
  if (r < 0) r += p;
  value_ = static_cast<std::uint32_t>(r);
}

ModP& ModP::operator+=(ModP o) {
  std::uint64_t s = std::uint64_t{value_} + o.value_;
  if (s >= tls_modulus) s -= tls_modulus;
  value_ = static_cast<std::uint32_t>(s);
  return *this;
}

ModP& ModP::operator-=(ModP o) {
  value_ = value_ >= o.value_ ? value_ - o.value_ : value_ + tls_modulus - o.value_;
  return *this;
}

ModP& ModP::operator*=(ModP o) {
  value_ = static_cast<std::uint32_t>(std::uint64_t{value_} * o.value_ % tls_modulus);
  return *this;
}

ModP ModP::inverse() const {
  if (value_ == 0) throw std::domain_error("ModP: division by zero");
  // Fermat: a^(p-2)
  std::uint64_t result = 1, base = value_, e = tls_modulus - 2;
  while (e > 0) {
    if (e & 1) result = result * base % tls_modulus;
    base = base * base % tls_modulus;
    e >>= 1;
  }
  ModP r;
  r.value_ = static_cast<std::uint32_t>(result);
  return r;
}

ModP& ModP::operator/=(ModP o) { return *this *= o.inverse(); }

std::ostream& operator<<(std::ostream& os, ModP x) { return os << x.value(); }

ModulusGuard::ModulusGuard(std::uint32_t p) : previous_(tls_modulus) {
  if (!is_prime(p)) throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
  tls_modulus = p;
}

ModulusGuard::~ModulusGuard() { tls_modulus = previous_; }

FieldSpec FieldSpec::prime(std::uint32_t p) {
  if (!is_prime(p)) throw std::invalid_argument("field modulus " + std::to_string(p) + " is not prime");
  return {Kind::prime, p};
}

FieldSpec FieldSpec::parse(const std::string& text) {
  if (text == "q" || text == "Q") return rationals();
  if (text.rfind("fp:", 0) == 0) {
    const std::string digits = text.substr(3);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 9)
      throw std::invalid_argument("bad field '" + text + "': expected fp:P with P a prime");
    return prime(static_cast<std::uint32_t>(std::stoul(digits)));
  }
  throw std::invalid_argument("bad field '" + text + "': expected q or fp:P");
}

std::string FieldSpec::to_string() const {
  return kind == Kind::rationals ? std::string("q") : "fp:" + std::to_string(modulus);
}

std::string ScalarTraits<Rational>::to_string(const Rational& x) {
  std::ostringstream os;
  os << numerator(x) << '/' << denominator(x);
  return os.str();
}

}  // namespace nakayama
