// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace sublat {

using BigUint = boost::multiprecision::cpp_int;

/// Exact nonnegative value mantissa * 2^exponent.
///
/// The representation is kept as constructed (sigma values remember
/// |Sub| and subtrahend - n); equality and ordering compare values, so
/// 166*2^-1 == 83*2^0.
class DyadicValue {
public:
    DyadicValue() = default;
    DyadicValue(BigUint mantissa, std::int64_t exponent);
    static DyadicValue from_integer(std::uint64_t value) { return DyadicValue(BigUint(value), 0); }

    /// Accepts "83", "82.5", "331/4" (power-of-two denominator) and
    /// "166*2^-1". Non-dyadic or negative values are rejected.
    static DyadicValue parse(std::string_view text);

    const BigUint& mantissa() const noexcept { return mantissa_; }
    std::int64_t exponent() const noexcept { return exponent_; }

    /// Same value with odd mantissa (or zero mantissa and exponent 0).
    DyadicValue normalized() const;

    /// Fixed-point decimal with at least `min_fraction_digits` digits after
    /// the point, extended as far as needed to be exact.
    std::string to_decimal(unsigned min_fraction_digits) const;
    /// Shortest exact decimal, e.g. "83", "49.75".
    std::string to_string() const { return to_decimal(0); }
    /// "m*2^e" with the stored representation.
    std::string to_power_form() const;

    friend bool operator==(const DyadicValue& a, const DyadicValue& b) { return compare(a, b) == 0; }
    friend std::strong_ordering operator<=>(const DyadicValue& a, const DyadicValue& b)
    {
        const int c = compare(a, b);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    static int compare(const DyadicValue& a, const DyadicValue& b);

    BigUint mantissa_{0};
    std::int64_t exponent_ = 0;
};

}  // namespace sublat
