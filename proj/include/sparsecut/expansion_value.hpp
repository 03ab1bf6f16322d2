#pragma once

#include <compare>
#include <ostream>
#include <stdexcept>
#include <string>

#include "sparsecut/rational.hpp"

namespace sparsecut {

/// Nonnegative exact rational extended with +infinity.
///
/// Used both for expansions (ratios) and for the cut weights stored in the DP
/// tables. Infinity absorbs addition and compares above every finite value.
class ExpansionValue {
 public:
  constexpr ExpansionValue() = default;
  ExpansionValue(Rational value) : value_(value) {  // NOLINT
    if (value.sign() < 0) throw std::domain_error("expansion value must be nonnegative: " + value.str());
  }
  ExpansionValue(std::int64_t value) : ExpansionValue(Rational(value)) {}  // NOLINT

  static ExpansionValue infinity() {
    ExpansionValue v;
    v.infinite_ = true;
    return v;
  }

  [[nodiscard]] bool is_infinite() const { return infinite_; }
  [[nodiscard]] bool is_finite() const { return !infinite_; }

  [[nodiscard]] const Rational& value() const {
    if (infinite_) throw std::logic_error("value() on infinite ExpansionValue");
    return value_;
  }

  friend ExpansionValue operator+(const ExpansionValue& a, const ExpansionValue& b) {
    if (a.infinite_ || b.infinite_) return infinity();
    return ExpansionValue(a.value_ + b.value_);
  }
  /// Subtracting a finite amount; the result must stay nonnegative.
  friend ExpansionValue operator-(const ExpansionValue& a, const Rational& b) {
    if (a.infinite_) return infinity();
    return ExpansionValue(a.value_ - b);
  }
  friend ExpansionValue operator/(const ExpansionValue& a, const Rational& b) {
    if (a.infinite_) return infinity();
    return ExpansionValue(a.value_ / b);
  }
  friend ExpansionValue operator*(const ExpansionValue& a, const Rational& b) {
    if (a.infinite_) return infinity();
    return ExpansionValue(a.value_ * b);
  }

  friend bool operator==(const ExpansionValue& a, const ExpansionValue& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const ExpansionValue& a, const ExpansionValue& b) {
    if (a.infinite_ || b.infinite_) return static_cast<int>(a.infinite_) <=> static_cast<int>(b.infinite_);
    return a.value_ <=> b.value_;
  }

  /// "num/den" or "inf".
  [[nodiscard]] std::string str() const { return infinite_ ? std::string("inf") : value_.str(); }

 private:
  Rational value_;
  bool infinite_ = false;
};

inline std::ostream& operator<<(std::ostream& os, const ExpansionValue& v) { return os << v.str(); }

}  // namespace sparsecut
