// Copyright 2026 The genrig Authors
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

#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <type_traits>

#include <Eigen/Core>

namespace genrig {

// Element of Z/PZ for a prime P < 2^63, stored reduced in [0, P).
template <std::uint64_t P>
class ModInt {
  static_assert(P > 2 && P < (std::uint64_t{1} << 63));

 public:
  static constexpr std::uint64_t kModulus = P;

  constexpr ModInt() = default;
  // Reduces any 64-bit value.
  constexpr ModInt(std::uint64_t x) : v_(x % P) {}  // NOLINT(runtime/explicit)
  constexpr ModInt(int x)  // NOLINT(runtime/explicit)
      : v_(x >= 0 ? static_cast<std::uint64_t>(x) % P
                  : P - (static_cast<std::uint64_t>(-static_cast<std::int64_t>(x)) % P)) {
    if (v_ == P) v_ = 0;
  }

  static constexpr ModInt from_reduced(std::uint64_t x) {
    ModInt r;
    r.v_ = x;
    return r;
  }

  constexpr std::uint64_t value() const { return v_; }
  constexpr bool is_zero() const { return v_ == 0; }

  constexpr ModInt& operator+=(ModInt o) {
    v_ += o.v_;
    if (v_ >= P) v_ -= P;
    return *this;
  }
  constexpr ModInt& operator-=(ModInt o) {
    v_ = v_ >= o.v_ ? v_ - o.v_ : v_ + P - o.v_;
    return *this;
  }
  constexpr ModInt& operator*=(ModInt o) {
    v_ = mul(v_, o.v_);
    return *this;
  }
  constexpr ModInt& operator/=(ModInt o) { return *this *= o.inverse(); }

  friend constexpr ModInt operator+(ModInt a, ModInt b) { return a += b; }
  friend constexpr ModInt operator-(ModInt a, ModInt b) { return a -= b; }
  friend constexpr ModInt operator*(ModInt a, ModInt b) { return a *= b; }
  friend constexpr ModInt operator/(ModInt a, ModInt b) { return a /= b; }
  constexpr ModInt operator-() const { return from_reduced(v_ == 0 ? 0 : P - v_); }

  friend constexpr bool operator==(ModInt a, ModInt b) { return a.v_ == b.v_; }
  friend constexpr bool operator!=(ModInt a, ModInt b) { return a.v_ != b.v_; }

  constexpr ModInt pow(std::uint64_t e) const {
    ModInt base = *this;
    ModInt acc = from_reduced(1);
    while (e != 0) {
      if (e & 1) acc *= base;
      base *= base;
      e >>= 1;
    }
    return acc;
  }

  // Fermat inverse; zero maps to zero.
  constexpr ModInt inverse() const { return pow(P - 2); }

  friend std::ostream& operator<<(std::ostream& os, ModInt a) { return os << a.v_; }

 private:
  static constexpr std::uint64_t mul(std::uint64_t a, std::uint64_t b) {
    const unsigned __int128 t = static_cast<unsigned __int128>(a) * b;
    if constexpr (P == (std::uint64_t{1} << 61) - 1) {
      std::uint64_t r = (static_cast<std::uint64_t>(t) & P) + static_cast<std::uint64_t>(t >> 61);
      return r >= P ? r - P : r;
    } else {
      return static_cast<std::uint64_t>(t % P);
    }
  }

  std::uint64_t v_ = 0;
};

inline constexpr std::uint64_t kMersenne61 = (std::uint64_t{1} << 61) - 1;
// Largest prime below 2^62.
inline constexpr std::uint64_t kAltPrime62 = (std::uint64_t{1} << 62) - 57;

using Fp61 = ModInt<kMersenne61>;
using Fp62 = ModInt<kAltPrime62>;

enum class Modulus { kM61, kAlt };

constexpr std::uint64_t modulus_value(Modulus m) {
  return m == Modulus::kM61 ? kMersenne61 : kAltPrime62;
}
constexpr std::string_view modulus_name(Modulus m) {
  return m == Modulus::kM61 ? "m61" : "alt";
}
inline std::optional<Modulus> parse_modulus(std::string_view s) {
  if (s == "m61") return Modulus::kM61;
  if (s == "alt") return Modulus::kAlt;
  return std::nullopt;
}

// Calls fn.template operator()<F>() with the field type selected by m.
template <class Fn>
decltype(auto) visit_field(Modulus m, Fn&& fn) {
  if (m == Modulus::kM61) return fn.template operator()<Fp61>();
  return fn.template operator()<Fp62>();
}

}  // namespace genrig

namespace Eigen {

template <std::uint64_t P>
struct NumTraits<genrig::ModInt<P>> : GenericNumTraits<genrig::ModInt<P>> {
  using Real = genrig::ModInt<P>;
  using NonInteger = genrig::ModInt<P>;
  using Literal = genrig::ModInt<P>;
  using Nested = genrig::ModInt<P>;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 0,
    RequireInitialization = 0,
    ReadCost = 1,
    AddCost = 2,
    MulCost = 4
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
  static inline Real highest() { return Real::from_reduced(P - 1); }
  static inline Real lowest() { return Real(0); }
};

}  // namespace Eigen
