#ifndef LADM_RATIONAL_HPP
#define LADM_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <numeric>
#include <string>

#include "ladm/errors.hpp"

namespace ladm {

/// Exact nonnegative rational, used for arc weights.  Arc synchronisation
/// compares label pairs for equality, so weights must never go through
/// floating point.  Values are created from integers or decimal strings;
/// a decimal string always yields a denominator of the form 2^a * 5^b,
/// which keeps to_string() total on everything the parser accepts.
class Weight {
public:
    Weight() : num_(0), den_(1) {}

    Weight(std::int64_t value) : num_(value), den_(1) {
        if (value < 0)
            throw Error(Errc::parse_error, "weight must be nonnegative");
    }

    static Weight fraction(std::int64_t num, std::int64_t den) {
        if (den <= 0)
            throw Error(Errc::parse_error, "weight denominator must be positive");
        if (num < 0)
            throw Error(Errc::parse_error, "weight must be nonnegative");
        Weight w;
        std::int64_t g = std::gcd(num, den);
        w.num_ = num / g;
        w.den_ = den / g;
        return w;
    }

    /// Parses a plain decimal string: digits with an optional fractional
    /// part ("1", "0.5", "12.250").  Signs, exponents and everything else
    /// are rejected so that label equality is an exact predicate.
    static Weight parse(const std::string& text) {
        if (text.empty())
            throw Error(Errc::parse_error, "empty weight");
        std::size_t dot = std::string::npos;
        for (std::size_t i = 0; i < text.size(); ++i) {
            char c = text[i];
            if (c == '.') {
                if (dot != std::string::npos)
                    throw Error(Errc::parse_error, "weight '" + text + "' has two decimal points");
                dot = i;
            } else if (c < '0' || c > '9') {
                throw Error(Errc::parse_error,
                            "weight '" + text + "' is not a plain decimal (signs and exponents are rejected)");
            }
        }
        std::string digits = text;
        std::size_t frac_len = 0;
        if (dot != std::string::npos) {
            if (dot == 0 || dot + 1 == text.size())
                throw Error(Errc::parse_error, "weight '" + text + "' needs digits on both sides of the point");
            frac_len = text.size() - dot - 1;
            digits.erase(dot, 1);
        }
        std::int64_t num = 0;
        for (char c : digits) {
            if (num > (INT64_MAX - 9) / 10)
                throw Error(Errc::parse_error, "weight '" + text + "' is too large");
            num = num * 10 + (c - '0');
        }
        std::int64_t den = 1;
        for (std::size_t i = 0; i < frac_len; ++i) {
            if (den > INT64_MAX / 10)
                throw Error(Errc::parse_error, "weight '" + text + "' is too precise");
            den *= 10;
        }
        return fraction(num, den);
    }

    /// Canonical decimal rendering; inverse of parse on canonical strings.
    std::string to_string() const {
        // Split den into 2^a * 5^b; scale both parts to a power of ten.
        std::int64_t den = den_;
        int twos = 0, fives = 0;
        while (den % 2 == 0) { den /= 2; ++twos; }
        while (den % 5 == 0) { den /= 5; ++fives; }
        if (den != 1)
            throw Error(Errc::parse_error, "weight has no finite decimal form");
        int digits = twos > fives ? twos : fives;
        std::int64_t scaled = num_;
        for (int i = twos; i < digits; ++i) scaled *= 2;
        for (int i = fives; i < digits; ++i) scaled *= 5;
        std::string s = std::to_string(scaled);
        if (digits == 0)
            return s;
        if (s.size() <= static_cast<std::size_t>(digits))
            s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
        s.insert(s.size() - static_cast<std::size_t>(digits), ".");
        return s;
    }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    friend bool operator==(const Weight& a, const Weight& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    friend std::strong_ordering operator<=>(const Weight& a, const Weight& b) {
        // a.num/a.den vs b.num/b.den; cross-multiply in 128 bits.
        __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
        __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

private:
    std::int64_t num_;
    std::int64_t den_;
};

} // namespace ladm

#endif
