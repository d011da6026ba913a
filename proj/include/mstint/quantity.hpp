#ifndef MSTINT_QUANTITY_HPP
#define MSTINT_QUANTITY_HPP

#include <compare>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>

namespace mstint {

/// Exact nonnegative fixed-point value: decimal input scaled by 10^6.
///
/// Arithmetic is checked. Anything that would overflow or go negative throws
/// `std::overflow_error` / `std::domain_error` instead of wrapping.
class Quantity {
 public:
  static constexpr std::int64_t kScale = 1'000'000;
  static constexpr int kFractionDigits = 6;

  constexpr Quantity() = default;

  static Quantity from_units(std::int64_t units) {
    if (units < 0) throw std::domain_error("quantity must be nonnegative");
    Quantity q;
    q.units_ = units;
    return q;
  }

  static Quantity from_integer(std::int64_t whole) {
    std::int64_t units = 0;
    if (whole < 0) throw std::domain_error("quantity must be nonnegative");
    if (__builtin_mul_overflow(whole, kScale, &units)) {
      throw std::overflow_error("quantity overflow");
    }
    return from_units(units);
  }

  static constexpr Quantity zero() { return Quantity{}; }

  constexpr std::int64_t units() const { return units_; }
  constexpr bool is_zero() const { return units_ == 0; }

  friend Quantity operator+(Quantity a, Quantity b) {
    std::int64_t r = 0;
    if (__builtin_add_overflow(a.units_, b.units_, &r)) {
      throw std::overflow_error("quantity overflow in addition");
    }
    return from_units(r);
  }

  Quantity& operator+=(Quantity other) { return *this = *this + other; }

  /// Throws when the result would be negative.
  friend Quantity operator-(Quantity a, Quantity b) {
    if (b.units_ > a.units_) throw std::domain_error("quantity subtraction went negative");
    return from_units(a.units_ - b.units_);
  }

  friend Quantity operator*(Quantity a, std::int64_t factor) {
    std::int64_t r = 0;
    if (factor < 0) throw std::domain_error("negative scale factor");
    if (__builtin_mul_overflow(a.units_, factor, &r)) {
      throw std::overflow_error("quantity overflow in multiplication");
    }
    return from_units(r);
  }

  friend constexpr auto operator<=>(Quantity, Quantity) = default;
  friend constexpr bool operator==(Quantity, Quantity) = default;

 private:
  std::int64_t units_ = 0;
};

/// Either a finite Quantity or +infinity. Infinity absorbs addition and is
/// the unique maximum of the total order.
class Extended {
 public:
  constexpr Extended() = default;
  constexpr Extended(Quantity q) : value_(q) {}  // NOLINT: implicit by intent

  static constexpr Extended infinity() {
    Extended e;
    e.infinite_ = true;
    return e;
  }

  constexpr bool is_infinite() const { return infinite_; }
  constexpr bool is_finite() const { return !infinite_; }

  Quantity value() const {
    if (infinite_) throw std::logic_error("value() on infinite quantity");
    return value_;
  }

  friend Extended operator+(Extended a, Extended b) {
    if (a.infinite_ || b.infinite_) return infinity();
    return Extended(a.value_ + b.value_);
  }
  Extended& operator+=(Extended other) { return *this = *this + other; }

  friend constexpr bool operator==(Extended a, Extended b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
    return a.value_ == b.value_;
  }
  friend constexpr std::strong_ordering operator<=>(Extended a, Extended b) {
    if (a.infinite_ && b.infinite_) return std::strong_ordering::equal;
    if (a.infinite_) return std::strong_ordering::greater;
    if (b.infinite_) return std::strong_ordering::less;
    return a.value_ <=> b.value_;
  }

 private:
  Quantity value_{};
  bool infinite_ = false;
};

/// MST(after) - MST(before); infinity if `after` is infinite.
inline Extended increase(Extended after, Quantity before) {
  if (after.is_infinite()) return Extended::infinity();
  return after.value() - before;
}

/// Parses a nonnegative decimal with at most six fractional digits.
inline Quantity parse_quantity(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty number");
  if (text.front() == '-') throw std::invalid_argument("negative number '" + std::string(text) + "'");
  std::int64_t whole = 0;
  std::int64_t frac = 0;
  int frac_digits = 0;
  bool seen_point = false;
  bool seen_digit = false;
  for (char ch : text) {
    if (ch == '.') {
      if (seen_point) throw std::invalid_argument("malformed number '" + std::string(text) + "'");
      seen_point = true;
      continue;
    }
    if (ch < '0' || ch > '9') {
      throw std::invalid_argument("malformed number '" + std::string(text) + "'");
    }
    seen_digit = true;
    const int d = ch - '0';
    if (seen_point) {
      if (++frac_digits > Quantity::kFractionDigits) {
        throw std::invalid_argument("more than 6 fractional digits in '" + std::string(text) + "'");
      }
      frac = frac * 10 + d;
    } else if (__builtin_mul_overflow(whole, 10, &whole) || __builtin_add_overflow(whole, d, &whole)) {
      throw std::overflow_error("number too large '" + std::string(text) + "'");
    }
  }
  if (!seen_digit) throw std::invalid_argument("malformed number '" + std::string(text) + "'");
  for (int i = frac_digits; i < Quantity::kFractionDigits; ++i) frac *= 10;
  return Quantity::from_integer(whole) + Quantity::from_units(frac);
}

/// Shortest exact decimal, always with at least one fractional digit ("3.0", "4.5").
inline std::string to_string(Quantity q) {
  const std::int64_t whole = q.units() / Quantity::kScale;
  std::int64_t frac = q.units() % Quantity::kScale;
  std::string out = std::to_string(whole);
  out += '.';
  if (frac == 0) return out + '0';
  std::string digits = std::to_string(frac);
  digits.insert(0, static_cast<std::size_t>(Quantity::kFractionDigits) - digits.size(), '0');
  while (digits.back() == '0') digits.pop_back();
  return out + digits;
}

inline std::string to_string(Extended e) {
  return e.is_infinite() ? std::string("inf") : to_string(e.value());
}

inline Extended parse_extended(std::string_view text) {
  if (text == "inf") return Extended::infinity();
  return parse_quantity(text);
}

/// Exact comparison of p1/c1 against p2/c2 for positive denominators.
inline std::strong_ordering compare_ratio(std::int64_t p1, std::int64_t c1, std::int64_t p2, std::int64_t c2) {
  const __int128 lhs = static_cast<__int128>(p1) * c2;
  const __int128 rhs = static_cast<__int128>(p2) * c1;
  return lhs <=> rhs;
}

}  // namespace mstint

#endif  // MSTINT_QUANTITY_HPP
