// Copyright 2026 The Dimerlab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DIMERLAB_GEOMETRY_HPP
#define DIMERLAB_GEOMETRY_HPP

#include <cstdint>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>

namespace dimerlab {

using i64 = long long;
using i128 = __int128;

inline i64 gcd_ll(i64 a, i64 b) { return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b); }

// Integer 2-vector. Used for lattice points, homology classes, slopes and
// height changes alike.
struct IVec {
  i64 x = 0, y = 0;

  friend IVec operator+(IVec a, IVec b) { return {a.x + b.x, a.y + b.y}; }
  friend IVec operator-(IVec a, IVec b) { return {a.x - b.x, a.y - b.y}; }
  friend IVec operator*(i64 k, IVec v) { return {k * v.x, k * v.y}; }
  IVec operator-() const { return {-x, -y}; }
  IVec& operator+=(IVec o) { x += o.x; y += o.y; return *this; }
  IVec& operator-=(IVec o) { x -= o.x; y -= o.y; return *this; }
  friend bool operator==(IVec a, IVec b) { return a.x == b.x && a.y == b.y; }
  friend bool operator!=(IVec a, IVec b) { return !(a == b); }
  friend bool operator<(IVec a, IVec b) {
    return a.x != b.x ? a.x < b.x : a.y < b.y;
  }
  bool is_zero() const { return x == 0 && y == 0; }
  std::string str() const {
    return "(" + std::to_string(x) + "," + std::to_string(y) + ")";
  }
};

inline i64 dot(IVec a, IVec b) { return a.x * b.x + a.y * b.y; }
inline i64 cross(IVec a, IVec b) { return a.x * b.y - a.y * b.x; }

// Rotate by +90 degrees: (x,y) -> (-y,x).
inline IVec rot90(IVec v) { return {-v.y, v.x}; }

// The height-change convention: rot(a,b) = (b,-a), i.e. rotation by -90.
inline IVec rot_neg90(IVec v) { return {v.y, -v.x}; }

inline IVec primitive(IVec v) {
  if (v.is_zero()) throw std::domain_error("zero has no primitive direction");
  i64 g = gcd_ll(v.x, v.y);
  return {v.x / g, v.y / g};
}

inline bool is_primitive(IVec v) {
  return !v.is_zero() && gcd_ll(v.x, v.y) == 1;
}

// Angle class for exact CCW ordering starting from the positive x-axis.
inline int angle_half(IVec v) {
  if (v.y > 0 || (v.y == 0 && v.x > 0)) return 0;
  return 1;
}

// True if a comes strictly before b going CCW from the positive x-axis.
inline bool angle_less(IVec a, IVec b) {
  int ha = angle_half(a), hb = angle_half(b);
  if (ha != hb) return ha < hb;
  return cross(a, b) > 0;
}

// Column-major 2x2 integer matrix acting on IVec.
struct IMat {
  i64 a = 1, b = 0, c = 0, d = 1;  // [[a b],[c d]]

  IVec apply(IVec v) const { return {a * v.x + b * v.y, c * v.x + d * v.y}; }
  friend IMat operator*(const IMat& m, const IMat& n) {
    return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d,
            m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
  }
  i64 det() const { return a * d - b * c; }
  bool unimodular() const { i64 t = det(); return t == 1 || t == -1; }
  IMat inverse() const {
    i64 t = det();
    if (t != 1 && t != -1) throw std::domain_error("matrix not unimodular");
    return {t * d, -t * b, -t * c, t * a};
  }
  friend bool operator==(const IMat& m, const IMat& n) {
    return m.a == n.a && m.b == n.b && m.c == n.c && m.d == n.d;
  }
};

// Exact rational over i64 with i128 intermediates. Values in this project
// stay tiny (polygon coordinates, dual vertices), so no bignum is needed;
// overflow would only come from a bug and is guarded in debug builds.
struct Rat {
  i64 num = 0, den = 1;

  Rat() = default;
  Rat(i64 n) : num(n), den(1) {}
  Rat(i64 n, i64 d) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    if (den < 0) { num = -num; den = -den; }
    i64 g = gcd_ll(num, den);
    if (g > 1) { num /= g; den /= g; }
    if (num == 0) den = 1;
  }
  static Rat make(i128 n, i128 d) {
    if (d < 0) { n = -n; d = -d; }
    i128 an = n < 0 ? -n : n;
    i128 g = 1;
    { // gcd on i128
      i128 x = an, y = d;
      while (y) { i128 t = x % y; x = y; y = t; }
      g = x == 0 ? 1 : x;
    }
    n /= g; d /= g;
    Rat r;
    r.num = static_cast<i64>(n);
    r.den = static_cast<i64>(d);
    if (r.num != n || r.den != d) throw std::overflow_error("rational overflow");
    return r;
  }
  friend Rat operator+(Rat a, Rat b) {
    return make(static_cast<i128>(a.num) * b.den + static_cast<i128>(b.num) * a.den,
                static_cast<i128>(a.den) * b.den);
  }
  friend Rat operator-(Rat a, Rat b) {
    return make(static_cast<i128>(a.num) * b.den - static_cast<i128>(b.num) * a.den,
                static_cast<i128>(a.den) * b.den);
  }
  friend Rat operator*(Rat a, Rat b) {
    return make(static_cast<i128>(a.num) * b.num, static_cast<i128>(a.den) * b.den);
  }
  friend Rat operator/(Rat a, Rat b) {
    if (b.num == 0) throw std::domain_error("rational division by zero");
    return make(static_cast<i128>(a.num) * b.den, static_cast<i128>(a.den) * b.num);
  }
  Rat operator-() const { Rat r; r.num = -num; r.den = den; return r; }
  friend bool operator==(Rat a, Rat b) { return a.num == b.num && a.den == b.den; }
  friend bool operator!=(Rat a, Rat b) { return !(a == b); }
  friend bool operator<(Rat a, Rat b) {
    return static_cast<i128>(a.num) * b.den < static_cast<i128>(b.num) * a.den;
  }
  friend bool operator<=(Rat a, Rat b) { return a < b || a == b; }
  bool is_integer() const { return den == 1; }
  int sign() const { return num > 0 ? 1 : num < 0 ? -1 : 0; }
  std::string str() const {
    return den == 1 ? std::to_string(num)
                    : std::to_string(num) + "/" + std::to_string(den);
  }
};

struct RVec {
  Rat x, y;

  RVec() = default;
  RVec(Rat px, Rat py) : x(px), y(py) {}
  explicit RVec(IVec v) : x(v.x), y(v.y) {}
  friend RVec operator+(RVec a, RVec b) { return {a.x + b.x, a.y + b.y}; }
  friend RVec operator-(RVec a, RVec b) { return {a.x - b.x, a.y - b.y}; }
  friend RVec operator*(Rat k, RVec v) { return {k * v.x, k * v.y}; }
  friend bool operator==(RVec a, RVec b) { return a.x == b.x && a.y == b.y; }
  friend bool operator!=(RVec a, RVec b) { return !(a == b); }
  friend bool operator<(RVec a, RVec b) {
    return a.x != b.x ? a.x < b.x : a.y < b.y;
  }
  bool is_lattice() const { return x.is_integer() && y.is_integer(); }
  IVec round_to_lattice() const {
    if (!is_lattice()) throw std::domain_error("point is not a lattice point");
    return {x.num, y.num};
  }
};

inline Rat dot(RVec a, RVec b) { return a.x * b.x + a.y * b.y; }
inline Rat dot(IVec a, RVec b) { return Rat(a.x) * b.x + Rat(a.y) * b.y; }
inline Rat cross(RVec a, RVec b) { return a.x * b.y - a.y * b.x; }

// Extended gcd: returns g and coefficients with s*a + t*b = g.
inline i64 ext_gcd(i64 a, i64 b, i64& s, i64& t) {
  if (b == 0) { s = a >= 0 ? 1 : -1; t = 0; return a >= 0 ? a : -a; }
  i64 s1, t1;
  i64 g = ext_gcd(b, a % b, s1, t1);
  s = t1;
  t = s1 - (a / b) * t1;
  return g;
}

}  // namespace dimerlab

#endif  // DIMERLAB_GEOMETRY_HPP
