#ifndef CORAD_TENSOR_HPP
#define CORAD_TENSOR_HPP

#include <array>
#include <cmath>
#include <complex>

#include "corad/core.hpp"

namespace corad {

// Dense 3x3 tensor, row-major.  Instantiated for double and
// std::complex<double>; the Green's tensors of this library live here.
template <typename Scalar>
class Tensor3 {
 public:
  constexpr Tensor3() = default;

  static constexpr Tensor3 zero() { return Tensor3{}; }

  static constexpr Tensor3 identity() {
    Tensor3 t;
    t(0, 0) = Scalar(1);
    t(1, 1) = Scalar(1);
    t(2, 2) = Scalar(1);
    return t;
  }

  static constexpr Tensor3 diagonal(Scalar d0, Scalar d1, Scalar d2) {
    Tensor3 t;
    t(0, 0) = d0;
    t(1, 1) = d1;
    t(2, 2) = d2;
    return t;
  }

  constexpr Scalar& operator()(int i, int j) { return entries_[3 * i + j]; }
  constexpr const Scalar& operator()(int i, int j) const { return entries_[3 * i + j]; }

  constexpr Tensor3 transposed() const {
    Tensor3 t;
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) t(j, i) = (*this)(i, j);
    }
    return t;
  }

  constexpr Scalar trace() const { return entries_[0] + entries_[4] + entries_[8]; }

  constexpr Tensor3& operator+=(const Tensor3& o) {
    for (int n = 0; n < 9; ++n) entries_[n] += o.entries_[n];
    return *this;
  }

  constexpr Tensor3& operator-=(const Tensor3& o) {
    for (int n = 0; n < 9; ++n) entries_[n] -= o.entries_[n];
    return *this;
  }

  constexpr Tensor3& operator*=(Scalar s) {
    for (int n = 0; n < 9; ++n) entries_[n] *= s;
    return *this;
  }

  friend constexpr Tensor3 operator+(Tensor3 a, const Tensor3& b) { return a += b; }
  friend constexpr Tensor3 operator-(Tensor3 a, const Tensor3& b) { return a -= b; }
  friend constexpr Tensor3 operator*(Scalar s, Tensor3 t) { return t *= s; }
  friend constexpr Tensor3 operator*(Tensor3 t, Scalar s) { return t *= s; }

  // Matrix product.
  friend constexpr Tensor3 operator*(const Tensor3& a, const Tensor3& b) {
    Tensor3 r;
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        Scalar s{};
        for (int k = 0; k < 3; ++k) s += a(i, k) * b(k, j);
        r(i, j) = s;
      }
    }
    return r;
  }

 private:
  std::array<Scalar, 9> entries_{};
};

using RealTensor3 = Tensor3<double>;
using ComplexTensor3 = Tensor3<std::complex<double>>;

inline RealTensor3 real_part(const ComplexTensor3& t) {
  RealTensor3 r;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) r(i, j) = t(i, j).real();
  }
  return r;
}

inline RealTensor3 imag_part(const ComplexTensor3& t) {
  RealTensor3 r;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) r(i, j) = t(i, j).imag();
  }
  return r;
}

inline ComplexTensor3 combine(const RealTensor3& re, const RealTensor3& im) {
  ComplexTensor3 t;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) t(i, j) = {re(i, j), im(i, j)};
  }
  return t;
}

inline ComplexTensor3 to_complex(const RealTensor3& re) {
  return combine(re, RealTensor3::zero());
}

constexpr RealTensor3 outer(Vec3 a, Vec3 b) {
  RealTensor3 t;
  const double ax[3] = {a.x, a.y, a.z};
  const double bx[3] = {b.x, b.y, b.z};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) t(i, j) = ax[i] * bx[j];
  }
  return t;
}

constexpr Vec3 operator*(const RealTensor3& t, Vec3 v) {
  return {t(0, 0) * v.x + t(0, 1) * v.y + t(0, 2) * v.z,
          t(1, 0) * v.x + t(1, 1) * v.y + t(1, 2) * v.z,
          t(2, 0) * v.x + t(2, 1) * v.y + t(2, 2) * v.z};
}

/// a . T . b for a real tensor.
constexpr double bilinear(Vec3 a, const RealTensor3& t, Vec3 b) {
  return dot(a, t * b);
}

template <typename Scalar>
inline double max_abs_entry(const Tensor3<Scalar>& t) {
  double m = 0.0;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) m = std::max(m, std::abs(t(i, j)));
  }
  return m;
}

}  // namespace corad

#endif  // CORAD_TENSOR_HPP
