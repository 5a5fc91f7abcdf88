#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>

#include "voganscan/errors.hpp"

namespace voganscan {

/// 64-bit signed integer whose arithmetic throws OverflowError instead of
/// wrapping. Used for every closed-form evaluation so that formulas can be
/// written with ordinary operators.
class CheckedInt {
public:
    constexpr CheckedInt() = default;
    constexpr CheckedInt(std::int64_t v) : v_(v) {}  // NOLINT: implicit by intent

    constexpr std::int64_t value() const noexcept { return v_; }

    friend CheckedInt operator+(CheckedInt a, CheckedInt b) {
        std::int64_t r;
        if (__builtin_add_overflow(a.v_, b.v_, &r)) throw OverflowError("integer overflow in addition");
        return r;
    }
    friend CheckedInt operator-(CheckedInt a, CheckedInt b) {
        std::int64_t r;
        if (__builtin_sub_overflow(a.v_, b.v_, &r)) throw OverflowError("integer overflow in subtraction");
        return r;
    }
    friend CheckedInt operator*(CheckedInt a, CheckedInt b) {
        std::int64_t r;
        if (__builtin_mul_overflow(a.v_, b.v_, &r)) throw OverflowError("integer overflow in multiplication");
        return r;
    }
    CheckedInt operator-() const { return CheckedInt(0) - *this; }

    CheckedInt& operator+=(CheckedInt o) { return *this = *this + o; }
    CheckedInt& operator-=(CheckedInt o) { return *this = *this - o; }

    friend constexpr bool operator==(CheckedInt, CheckedInt) = default;
    friend constexpr auto operator<=>(CheckedInt, CheckedInt) = default;

    friend std::ostream& operator<<(std::ostream& os, CheckedInt c) { return os << c.v_; }

private:
    std::int64_t v_ = 0;
};

/// (-1)^e for any integer exponent.
constexpr std::int64_t sign_power(std::int64_t e) noexcept { return (e % 2 == 0) ? 1 : -1; }

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) { return (CheckedInt(a) + b).value(); }
inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) { return (CheckedInt(a) * b).value(); }

}  // namespace voganscan
