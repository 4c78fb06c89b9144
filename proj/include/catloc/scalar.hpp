#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace catloc {

/// Raised when two scalars (or matrices) from different fields meet.
class FieldMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Ground field descriptor: the rationals, or F_p for a prime p < 2^31.
class Field {
 public:
  static Field rationals() { return Field{0}; }
  static Field prime(std::uint32_t p);

  bool is_rational() const { return p_ == 0; }
  bool is_prime() const { return p_ != 0; }
  std::uint32_t modulus() const { return p_; }
  std::uint32_t characteristic() const { return p_; }
  std::string to_string() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_ = 0;
};

/// A residue modulo p, always reduced.
struct Residue {
  std::uint32_t value = 0;
  std::uint32_t p = 0;
  friend bool operator==(const Residue&, const Residue&) = default;
};

/// An exact field element: a reduced rational or a residue mod p.
class Scalar {
 public:
  Scalar() : v_(mpq_class(0)) {}
  explicit Scalar(const mpq_class& q) : v_(q) { std::get<mpq_class>(v_).canonicalize(); }
  explicit Scalar(Residue r) : v_(r) {}

  static Scalar zero(const Field& f);
  static Scalar one(const Field& f);
  static Scalar from_int(const Field& f, long long v);
  /// Parses "p/q", "p" (rationals) or a decimal residue (prime fields).
  static Scalar parse(const Field& f, const std::string& text);

  Field field() const;
  bool is_zero() const;
  bool is_one() const;
  std::string to_string() const;

  bool is_rational() const { return std::holds_alternative<mpq_class>(v_); }
  const mpq_class& rational() const { return std::get<mpq_class>(v_); }
  std::uint32_t residue() const { return std::get<Residue>(v_).value; }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  Scalar inverse() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

 private:
  std::variant<Residue, mpq_class> v_;
};

namespace fp {
std::uint32_t add(std::uint32_t a, std::uint32_t b, std::uint32_t p);
std::uint32_t sub(std::uint32_t a, std::uint32_t b, std::uint32_t p);
std::uint32_t mul(std::uint32_t a, std::uint32_t b, std::uint32_t p);
/// Modular inverse by the extended Euclidean algorithm; a must be nonzero.
std::uint32_t inv(std::uint32_t a, std::uint32_t p);
bool is_prime(std::uint64_t n);
}  // namespace fp

}  // namespace catloc
