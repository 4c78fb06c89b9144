#include "catloc/scalar.hpp"

#include <cctype>

namespace catloc {

namespace fp {

std::uint32_t add(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  std::uint64_t s = std::uint64_t{a} + b;
  return static_cast<std::uint32_t>(s >= p ? s - p : s);
}

std::uint32_t sub(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return a >= b ? a - b : static_cast<std::uint32_t>(std::uint64_t{a} + p - b);
}

std::uint32_t mul(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>((std::uint64_t{a} * b) % p);
}

std::uint32_t inv(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) throw std::domain_error("residue is not invertible");
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace fp

Field Field::prime(std::uint32_t p) {
  if (p >= (1u << 31) || !fp::is_prime(p))
    throw std::invalid_argument("F_p requires a prime p < 2^31, got " + std::to_string(p));
  return Field{p};
}

std::string Field::to_string() const {
  return is_rational() ? std::string("Q") : "F_" + std::to_string(p_);
}

Scalar Scalar::zero(const Field& f) { return from_int(f, 0); }
Scalar Scalar::one(const Field& f) { return from_int(f, 1); }

Scalar Scalar::from_int(const Field& f, long long v) {
  if (f.is_rational()) return Scalar(mpq_class(mpz_class(static_cast<long>(v))));
  long long p = f.modulus();
  long long r = v % p;
  if (r < 0) r += p;
  return Scalar(Residue{static_cast<std::uint32_t>(r), f.modulus()});
}

Scalar Scalar::parse(const Field& f, const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty scalar literal");
  if (f.is_rational()) {
    mpq_class q;
    if (q.set_str(text, 10) != 0) throw std::invalid_argument("bad rational literal '" + text + "'");
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
    return Scalar(q);
  }
  mpz_class z;
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    Scalar num = parse(f, text.substr(0, slash));
    Scalar den = parse(f, text.substr(slash + 1));
    return num / den;
  }
  if (z.set_str(text, 10) != 0) throw std::invalid_argument("bad residue literal '" + text + "'");
  mpz_class r = z % mpz_class(f.modulus());
  if (r < 0) r += f.modulus();
  return Scalar(Residue{static_cast<std::uint32_t>(r.get_ui()), f.modulus()});
}

Field Scalar::field() const {
  if (is_rational()) return Field::rationals();
  return Field::prime(std::get<Residue>(v_).p);
}

bool Scalar::is_zero() const {
  if (is_rational()) return sgn(rational()) == 0;
  return std::get<Residue>(v_).value == 0;
}

bool Scalar::is_one() const {
  if (is_rational()) return rational() == 1;
  return std::get<Residue>(v_).value == 1;
}

std::string Scalar::to_string() const {
  if (is_rational()) return rational().get_str();
  return std::to_string(std::get<Residue>(v_).value);
}

namespace {
[[noreturn]] void mismatch() { throw FieldMismatch("scalars from different fields"); }
}  // namespace

Scalar Scalar::operator-() const {
  if (is_rational()) return Scalar(mpq_class(-rational()));
  auto r = std::get<Residue>(v_);
  return Scalar(Residue{r.value == 0 ? 0 : r.p - r.value, r.p});
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (is_rational() != o.is_rational()) mismatch();
  if (is_rational()) {
    std::get<mpq_class>(v_) += o.rational();
    return *this;
  }
  auto& a = std::get<Residue>(v_);
  const auto& b = std::get<Residue>(o.v_);
  if (a.p != b.p) mismatch();
  a.value = fp::add(a.value, b.value, a.p);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  if (is_rational() != o.is_rational()) mismatch();
  if (is_rational()) {
    std::get<mpq_class>(v_) -= o.rational();
    return *this;
  }
  auto& a = std::get<Residue>(v_);
  const auto& b = std::get<Residue>(o.v_);
  if (a.p != b.p) mismatch();
  a.value = fp::sub(a.value, b.value, a.p);
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (is_rational() != o.is_rational()) mismatch();
  if (is_rational()) {
    std::get<mpq_class>(v_) *= o.rational();
    return *this;
  }
  auto& a = std::get<Residue>(v_);
  const auto& b = std::get<Residue>(o.v_);
  if (a.p != b.p) mismatch();
  a.value = fp::mul(a.value, b.value, a.p);
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  if (is_rational()) return Scalar(mpq_class(1 / rational()));
  auto r = std::get<Residue>(v_);
  return Scalar(Residue{fp::inv(r.value, r.p), r.p});
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (is_rational() != o.is_rational()) mismatch();
  return *this *= o.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.is_rational() != b.is_rational()) mismatch();
  if (a.is_rational()) return a.rational() == b.rational();
  const auto& x = std::get<Residue>(a.v_);
  const auto& y = std::get<Residue>(b.v_);
  if (x.p != y.p) mismatch();
  return x.value == y.value;
}

}  // namespace catloc
