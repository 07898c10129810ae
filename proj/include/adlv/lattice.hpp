#pragma once

#include "adlv/rational.hpp"

#include <Eigen/Core>

#include <cstddef>
#include <initializer_list>
#include <type_traits>
#include <string>
#include <vector>

namespace adlv {

inline constexpr int kMaxRank = 8;

template <typename Scalar>
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1, Eigen::ColMajor, kMaxRank, 1>;
template <typename Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::ColMajor, kMaxRank, kMaxRank>;

using IntVec = Vec<Int>;
using IntMat = Mat<Int>;
using RatVec = Vec<Rational>;
using RatMat = Mat<Rational>;

// Basis tags: simple roots, simple coroots, and pairing coordinates <alpha_i, .> of a coweight.
struct RootBasis {};
struct CorootBasis {};
struct PairingBasis {};

// A coordinate vector tagged with the basis it is written in, so that
// root, coroot and pairing coordinates cannot be mixed by accident.
template <typename Basis, typename Scalar>
struct Coords {
  using scalar_type = Scalar;
  Vec<Scalar> coeffs;

  Coords() = default;
  explicit Coords(Vec<Scalar> v) : coeffs(std::move(v)) {}

  static Coords zero(int n) { return Coords(Vec<Scalar>::Zero(n)); }
  static Coords unit(int n, int i) {
    Coords c = zero(n);
    c.coeffs[i] = Scalar(1);
    return c;
  }

  int size() const { return static_cast<int>(coeffs.size()); }
  Scalar& operator[](int i) { return coeffs[i]; }
  const Scalar& operator[](int i) const { return coeffs[i]; }

  Coords& operator+=(const Coords& o) {
    coeffs += o.coeffs;
    return *this;
  }
  Coords& operator-=(const Coords& o) {
    coeffs -= o.coeffs;
    return *this;
  }
  friend Coords operator+(Coords a, const Coords& b) { return a += b; }
  friend Coords operator-(Coords a, const Coords& b) { return a -= b; }
  Coords operator-() const { return Coords(Vec<Scalar>(-coeffs)); }
  friend Coords operator*(const Scalar& s, const Coords& c) { return Coords(Vec<Scalar>(s * c.coeffs)); }

  friend bool operator==(const Coords& a, const Coords& b) {
    return a.coeffs.size() == b.coeffs.size() && a.coeffs == b.coeffs;
  }
  friend bool operator<(const Coords& a, const Coords& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (int i = 0; i < a.size(); ++i) {
      if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
  }
};

using RootVec = Coords<RootBasis, Int>;
using CorootVec = Coords<CorootBasis, Int>;
using IntCoweight = Coords<PairingBasis, Int>;
using Coweight = Coords<PairingBasis, Rational>;
using RatCorootVec = Coords<CorootBasis, Rational>;

template <typename Basis, typename Scalar>
struct CoordsHash {
  std::size_t operator()(const Coords<Basis, Scalar>& c) const noexcept {
    std::size_t h = static_cast<std::size_t>(c.size());
    for (int i = 0; i < c.size(); ++i) h = h * 0x9E3779B97F4A7C15ull + std::hash<Scalar>{}(c[i]);
    return h;
  }
};

template <typename Scalar>
Vec<Scalar> make_vec(std::initializer_list<Scalar> xs) {
  Vec<Scalar> v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (const auto& x : xs) v[i++] = x;
  return v;
}

inline RootVec root_vec(std::initializer_list<Int> xs) { return RootVec(make_vec<Int>(xs)); }
inline CorootVec coroot_vec(std::initializer_list<Int> xs) { return CorootVec(make_vec<Int>(xs)); }
inline IntCoweight int_coweight(std::initializer_list<Int> xs) { return IntCoweight(make_vec<Int>(xs)); }

template <typename Basis>
Coords<Basis, Rational> to_rational(const Coords<Basis, Int>& c) {
  return Coords<Basis, Rational>(Vec<Rational>(c.coeffs.template cast<Rational>()));
}

// Exact Gauss-Jordan inverse; throws std::domain_error on a singular matrix.
RatMat inverse_exact(const RatMat& m);
// Exact rank over the rationals.
int rank_exact(RatMat m);

// Entries of a vector as "a,b,c".
template <typename Scalar>
std::string join(const Vec<Scalar>& v, const char* sep = ",") {
  std::string out;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    if constexpr (std::is_same_v<Scalar, Rational>) {
      out += v[i].to_string();
    } else {
      out += std::to_string(v[i]);
    }
  }
  return out;
}

}  // namespace adlv
