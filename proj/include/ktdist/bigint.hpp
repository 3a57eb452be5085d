#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>

namespace ktdist {

// Arbitrary-precision signed integer with plain value semantics.
//
// Wraps boost's cpp_int so that arithmetic never yields expression
// templates; Eigen's generic kernels then treat it like any other scalar.
// Division and remainder truncate toward zero.
class BigInt {
 public:
  using Rep = boost::multiprecision::cpp_int;

  BigInt() = default;
  template <std::integral T>
  BigInt(T value) : v_(value) {}  // NOLINT(google-explicit-constructor)
  explicit BigInt(Rep value) : v_(std::move(value)) {}

  // Parses an optionally signed decimal literal; nullopt on malformed input.
  static std::optional<BigInt> parse(std::string_view text);

  const Rep& rep() const { return v_; }

  bool is_zero() const { return v_.is_zero(); }
  int sign() const { return v_.sign(); }
  bool fits_int64() const;
  std::int64_t to_int64() const;  // requires fits_int64()
  std::string to_string() const { return v_.str(); }

  BigInt& operator+=(const BigInt& o) { v_ += o.v_; return *this; }
  BigInt& operator-=(const BigInt& o) { v_ -= o.v_; return *this; }
  BigInt& operator*=(const BigInt& o) { v_ *= o.v_; return *this; }
  BigInt& operator/=(const BigInt& o) { v_ /= o.v_; return *this; }
  BigInt& operator%=(const BigInt& o) { v_ %= o.v_; return *this; }

  friend BigInt operator+(BigInt a, const BigInt& b) { return a += b; }
  friend BigInt operator-(BigInt a, const BigInt& b) { return a -= b; }
  friend BigInt operator*(BigInt a, const BigInt& b) { return a *= b; }
  friend BigInt operator/(BigInt a, const BigInt& b) { return a /= b; }
  friend BigInt operator%(BigInt a, const BigInt& b) { return a %= b; }
  friend BigInt operator-(const BigInt& a) { return BigInt(Rep(-a.v_)); }

  friend bool operator==(const BigInt& a, const BigInt& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
    const int c = a.v_.compare(b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend BigInt abs(const BigInt& a) { return BigInt(Rep(boost::multiprecision::abs(a.v_))); }
  // Non-negative; gcd(0, 0) = 0.
  friend BigInt gcd(const BigInt& a, const BigInt& b) {
    return BigInt(Rep(boost::multiprecision::gcd(a.v_, b.v_)));
  }
  friend BigInt lcm(const BigInt& a, const BigInt& b) {
    if (a.is_zero() || b.is_zero()) return BigInt();
    return abs(a / gcd(a, b) * b);
  }
  friend BigInt pow(const BigInt& base, unsigned exponent) {
    return BigInt(Rep(boost::multiprecision::pow(base.v_, exponent)));
  }

  friend std::ostream& operator<<(std::ostream& os, const BigInt& a) { return os << a.v_; }

 private:
  Rep v_;
};

}  // namespace ktdist

template <>
struct std::hash<ktdist::BigInt> {
  std::size_t operator()(const ktdist::BigInt& x) const noexcept {
    return boost::multiprecision::hash_value(x.rep());
  }
};

namespace Eigen {

template <>
struct NumTraits<ktdist::BigInt> : GenericNumTraits<ktdist::BigInt> {
  using Real = ktdist::BigInt;
  using NonInteger = ktdist::BigInt;
  using Literal = ktdist::BigInt;
  using Nested = ktdist::BigInt;

  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 32,
    MulCost = 64
  };

  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
