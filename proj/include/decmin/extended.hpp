// Copyright 2026 The Authors.
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

#ifndef DECMIN_EXTENDED_HPP_
#define DECMIN_EXTENDED_HPP_

#include <compare>
#include <stdexcept>
#include <string>
#include <utility>

namespace decmin {

// Scalar extended with both infinities. A supermodular function takes
// values in {-inf} + finite; +inf shows up only in derived quantities
// (complements and minimization targets). Infinity is a distinct state,
// never a large sentinel number, so mixed arithmetic traps instead of
// silently overflowing.
template <class T>
class Extended {
 public:
  enum class Kind { kNegInf = -1, kFinite = 0, kPosInf = 1 };

  Extended() : kind_(Kind::kFinite), v_{} {}
  Extended(T v) : kind_(Kind::kFinite), v_(std::move(v)) {}  // NOLINT

  static Extended neg_inf() { return Extended(Kind::kNegInf); }
  static Extended pos_inf() { return Extended(Kind::kPosInf); }

  bool is_finite() const { return kind_ == Kind::kFinite; }
  bool is_neg_inf() const { return kind_ == Kind::kNegInf; }
  bool is_pos_inf() const { return kind_ == Kind::kPosInf; }

  const T& value() const {
    if (!is_finite()) throw std::logic_error("Extended: value() on infinity");
    return v_;
  }

  friend bool operator==(const Extended& a, const Extended& b) {
    if (a.kind_ != b.kind_) return false;
    return !a.is_finite() || a.v_ == b.v_;
  }
  friend bool operator<(const Extended& a, const Extended& b) {
    if (a.kind_ != b.kind_) {
      return static_cast<int>(a.kind_) < static_cast<int>(b.kind_);
    }
    return a.is_finite() && a.v_ < b.v_;
  }
  friend bool operator>(const Extended& a, const Extended& b) { return b < a; }
  friend bool operator<=(const Extended& a, const Extended& b) {
    return !(b < a);
  }
  friend bool operator>=(const Extended& a, const Extended& b) {
    return !(a < b);
  }
  friend bool operator!=(const Extended& a, const Extended& b) {
    return !(a == b);
  }

  friend Extended operator+(const Extended& a, const Extended& b) {
    if (a.is_finite() && b.is_finite()) return Extended(a.v_ + b.v_);
    if (a.is_neg_inf() && b.is_pos_inf()) throw std::logic_error("inf - inf");
    if (a.is_pos_inf() && b.is_neg_inf()) throw std::logic_error("inf - inf");
    return a.is_finite() ? b : a;
  }
  friend Extended operator-(const Extended& a, const Extended& b) {
    return a + (-b);
  }
  Extended operator-() const {
    switch (kind_) {
      case Kind::kNegInf: return pos_inf();
      case Kind::kPosInf: return neg_inf();
      default: return Extended(-v_);
    }
  }

 private:
  explicit Extended(Kind k) : kind_(k), v_{} {}
  Kind kind_;
  T v_;
};

using ExtInt = Extended<long long>;

template <class T>
std::string ext_str(const Extended<T>& e) {
  if (e.is_neg_inf()) return "-inf";
  if (e.is_pos_inf()) return "+inf";
  return std::to_string(e.value());
}

}  // namespace decmin

#endif  // DECMIN_EXTENDED_HPP_
