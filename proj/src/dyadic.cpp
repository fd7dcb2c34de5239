// SPDX-License-Identifier: Apache-2.0
#include "dyadic.hpp"

#include "error.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

namespace sublat {

namespace {

constexpr std::int64_t kMaxShift = 1 << 20;

bool all_digits(std::string_view s)
{
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

BigUint parse_uint(std::string_view s, std::string_view whole)
{
    if (!all_digits(s))
        throw Error(ErrorKind::InvalidArgument, "not a nonnegative dyadic number: '" + std::string(whole) + "'");
    return BigUint(std::string(s));
}

std::int64_t parse_int(std::string_view s, std::string_view whole)
{
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s) || s.size() > 9)
        throw Error(ErrorKind::InvalidArgument, "bad exponent in '" + std::string(whole) + "'");
    const std::int64_t v = std::stoll(std::string(s));
    return negative ? -v : v;
}

/// Returns k with value == 2^k, or -1.
std::int64_t log2_exact(const BigUint& value)
{
    if (value <= 0)
        return -1;
    const auto lsb = static_cast<std::int64_t>(boost::multiprecision::lsb(value));
    const auto msb = static_cast<std::int64_t>(boost::multiprecision::msb(value));
    return lsb == msb ? lsb : -1;
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

}  // namespace

DyadicValue::DyadicValue(BigUint mantissa, std::int64_t exponent) : mantissa_(std::move(mantissa)), exponent_(exponent)
{
    if (mantissa_ < 0)
        throw Error(ErrorKind::InvalidArgument, "dyadic mantissa must be nonnegative");
    if (exponent_ > kMaxShift || exponent_ < -kMaxShift)
        throw Error(ErrorKind::InvalidArgument, "dyadic exponent out of range");
}

DyadicValue DyadicValue::parse(std::string_view text)
{
    const std::string_view s = trim(text);
    if (const auto star = s.find("*2^"); star != std::string_view::npos)
        return DyadicValue(parse_uint(s.substr(0, star), s), parse_int(s.substr(star + 3), s));

    if (const auto slash = s.find('/'); slash != std::string_view::npos) {
        const BigUint num = parse_uint(s.substr(0, slash), s);
        const BigUint den = parse_uint(s.substr(slash + 1), s);
        const std::int64_t k = log2_exact(den);
        if (k < 0)
            throw Error(ErrorKind::InvalidArgument, "denominator is not a power of two: '" + std::string(s) + "'");
        return DyadicValue(num, -k);
    }

    if (const auto dot = s.find('.'); dot != std::string_view::npos) {
        const std::string_view int_part = s.substr(0, dot);
        std::string_view frac = s.substr(dot + 1);
        while (!frac.empty() && frac.back() == '0')
            frac.remove_suffix(1);
        if (!int_part.empty() && !all_digits(int_part))
            throw Error(ErrorKind::InvalidArgument, "not a nonnegative dyadic number: '" + std::string(s) + "'");
        if (frac.empty())
            return DyadicValue(parse_uint(int_part.empty() ? "0" : int_part, s), 0);
        // value = digits / 10^k = digits / (5^k 2^k); dyadic iff 5^k | digits.
        BigUint digits = parse_uint(std::string(int_part) + std::string(frac), s);
        const auto k = static_cast<std::int64_t>(frac.size());
        BigUint five_k = boost::multiprecision::pow(BigUint(5), static_cast<unsigned>(k));
        if (digits % five_k != 0)
            throw Error(ErrorKind::InvalidArgument, "decimal is not dyadic: '" + std::string(s) + "'");
        return DyadicValue(digits / five_k, -k);
    }

    return DyadicValue(parse_uint(s, s), 0);
}

DyadicValue DyadicValue::normalized() const
{
    if (mantissa_ == 0)
        return DyadicValue();
    const auto tz = static_cast<std::int64_t>(boost::multiprecision::lsb(mantissa_));
    return DyadicValue(mantissa_ >> static_cast<unsigned>(tz), exponent_ + tz);
}

int DyadicValue::compare(const DyadicValue& a, const DyadicValue& b)
{
    // Bring both to the smaller exponent; the shift is bounded by the
    // exponent range so this stays exact.
    const std::int64_t e = std::min(a.exponent_, b.exponent_);
    const BigUint lhs = a.mantissa_ << static_cast<unsigned>(a.exponent_ - e);
    const BigUint rhs = b.mantissa_ << static_cast<unsigned>(b.exponent_ - e);
    return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
}

std::string DyadicValue::to_decimal(unsigned min_fraction_digits) const
{
    std::string int_digits;
    std::string frac_digits;
    if (exponent_ >= 0) {
        int_digits = BigUint(mantissa_ << static_cast<unsigned>(exponent_)).str();
    } else {
        // m / 2^k == m * 5^k / 10^k
        const auto k = static_cast<unsigned>(-exponent_);
        const BigUint scaled = mantissa_ * boost::multiprecision::pow(BigUint(5), k);
        std::string all = scaled.str();
        if (all.size() <= k)
            all.insert(0, k + 1 - all.size(), '0');
        int_digits = all.substr(0, all.size() - k);
        frac_digits = all.substr(all.size() - k);
        while (!frac_digits.empty() && frac_digits.back() == '0')
            frac_digits.pop_back();
    }
    if (frac_digits.size() < min_fraction_digits)
        frac_digits.append(min_fraction_digits - frac_digits.size(), '0');
    return frac_digits.empty() ? int_digits : int_digits + "." + frac_digits;
}

std::string DyadicValue::to_power_form() const
{
    return mantissa_.str() + "*2^" + std::to_string(exponent_);
}

}  // namespace sublat
