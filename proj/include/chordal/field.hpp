#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace chordal {

// Runtime description of a coefficient field: the rationals, or Z/p for a
// prime p.  Parsed from "q", "f2", "f3", "fp:P".
struct FieldSpec {
  enum class Kind { rational, prime };
  Kind kind = Kind::rational;
  std::uint64_t p = 0;

  static FieldSpec rational() { return {Kind::rational, 0}; }
  static FieldSpec prime(std::uint64_t p);
  static FieldSpec parse(const std::string& s);
  std::string to_string() const;
  bool operator==(const FieldSpec&) const = default;
};

bool is_prime_u64(std::uint64_t n);

// Exact rational arithmetic carried by GMP.  All kernel code is templated on
// a field object exposing this interface; elements never carry the field.
struct RationalField {
  using Elem = mpq_class;

  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  Elem from_long(long n) const { return Elem(n); }
  bool is_zero(const Elem& a) const { return sgn(a) == 0; }
  bool eq(const Elem& a, const Elem& b) const { return cmp(a, b) == 0; }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem div(const Elem& a, const Elem& b) const { return a / b; }
  Elem neg(const Elem& a) const { return -a; }

  std::string str(const Elem& a) const { return a.get_str(); }
  std::optional<Elem> parse(const std::string& s) const {
    try {
      Elem e(s);
      e.canonicalize();
      return e;
    } catch (const std::invalid_argument&) {
      return std::nullopt;
    }
  }
  FieldSpec spec() const { return FieldSpec::rational(); }
};

// Z/p with p prime, p < 2^31 so products fit in 64 bits.
class PrimeField {
 public:
  using Elem = std::uint64_t;

  explicit PrimeField(std::uint64_t p) : p_(p) {
    if (p < 2 || p >= (std::uint64_t{1} << 31) || !is_prime_u64(p))
      throw std::runtime_error("PrimeField: modulus must be a prime below 2^31");
  }

  std::uint64_t modulus() const { return p_; }
  Elem zero() const { return 0; }
  Elem one() const { return 1 % p_; }
  Elem from_long(long n) const {
    long long r = n % static_cast<long long>(p_);
    if (r < 0) r += static_cast<long long>(p_);
    return static_cast<Elem>(r);
  }
  bool is_zero(const Elem& a) const { return a == 0; }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }
  Elem add(Elem a, Elem b) const {
    Elem s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
  Elem mul(Elem a, Elem b) const { return (a * b) % p_; }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem inv(Elem a) const {
    if (a == 0) throw std::runtime_error("PrimeField: division by zero");
    return pow(a, p_ - 2);
  }
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

  std::string str(const Elem& a) const { return std::to_string(a); }
  std::optional<Elem> parse(const std::string& s) const;
  FieldSpec spec() const { return FieldSpec::prime(p_); }

 private:
  Elem pow(Elem b, std::uint64_t e) const {
    Elem r = one();
    while (e) {
      if (e & 1) r = mul(r, b);
      b = mul(b, b);
      e >>= 1;
    }
    return r;
  }
  std::uint64_t p_;
};

// Dispatch a callable templated over the field type.
template <class Fn>
decltype(auto) with_field(const FieldSpec& fs, Fn&& fn) {
  if (fs.kind == FieldSpec::Kind::rational) return fn(RationalField{});
  return fn(PrimeField{fs.p});
}

}  // namespace chordal
