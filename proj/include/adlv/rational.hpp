#pragma once

#include <Eigen/Core>

#include <compare>
#include <cstdint>
#include <functional>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace adlv {

using Int = std::int64_t;

namespace detail {

[[noreturn]] inline void overflow() { throw std::overflow_error("integer overflow in exact arithmetic"); }

inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) overflow();
  return r;
}

inline Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) overflow();
  return r;
}

inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) overflow();
  return r;
}

}  // namespace detail

// Exact fraction over int64 with overflow detection; always kept in lowest terms, den > 0.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(Int n) : num_(n) {}  // NOLINT: implicit from integers is intended
  Rational(Int n, Int d) : num_(n), den_(d) { normalize(); }

  Int num() const { return num_; }
  Int den() const { return den_; }
  bool is_integer() const { return den_ == 1; }

  Int floor() const {
    Int q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q;
  }
  Int ceil() const { return -Rational(-num_, den_).floor(); }

  Rational& operator+=(const Rational& o) {
    Int g = std::gcd(den_, o.den_);
    Int a = detail::checked_mul(num_, o.den_ / g);
    Int b = detail::checked_mul(o.num_, den_ / g);
    num_ = detail::checked_add(a, b);
    den_ = detail::checked_mul(den_, o.den_ / g);
    normalize();
    return *this;
  }
  Rational& operator-=(const Rational& o) { return *this += -o; }
  Rational& operator*=(const Rational& o) {
    Int g1 = std::gcd(num_, o.den_);
    Int g2 = std::gcd(o.num_, den_);
    if (g1 == 0) g1 = 1;
    if (g2 == 0) g2 = 1;
    num_ = detail::checked_mul(num_ / g1, o.num_ / g2);
    den_ = detail::checked_mul(den_ / g2, o.den_ / g1);
    normalize();
    return *this;
  }
  Rational& operator/=(const Rational& o) {
    if (o.num_ == 0) throw std::domain_error("division by zero");
    return *this *= Rational(o.den_, o.num_);
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const { return Rational(detail::checked_sub(0, num_), den_); }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    __int128 l = static_cast<__int128>(a.num_) * b.den_;
    __int128 r = static_cast<__int128>(b.num_) * a.den_;
    return l <=> r;
  }

  std::string to_string() const {
    return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
  }
  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

 private:
  void normalize() {
    if (den_ == 0) throw std::domain_error("zero denominator");
    if (den_ < 0) {
      num_ = detail::checked_sub(0, num_);
      den_ = detail::checked_sub(0, den_);
    }
    Int g = std::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  Int num_ = 0;
  Int den_ = 1;
};

inline Rational abs(const Rational& r) { return r < 0 ? -r : r; }

}  // namespace adlv

template <>
struct std::hash<adlv::Rational> {
  std::size_t operator()(const adlv::Rational& r) const noexcept {
    return std::hash<adlv::Int>{}(r.num()) * 1000003u ^ std::hash<adlv::Int>{}(r.den());
  }
};

namespace Eigen {
template <>
struct NumTraits<adlv::Rational> : GenericNumTraits<adlv::Rational> {
  using Real = adlv::Rational;
  using NonInteger = adlv::Rational;
  using Nested = adlv::Rational;
  using Literal = adlv::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 4,
    MulCost = 4
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};
}  // namespace Eigen
