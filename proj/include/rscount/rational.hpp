/*
   Copyright 2026 The rscount Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef RSCOUNT_RATIONAL_HPP
#define RSCOUNT_RATIONAL_HPP

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <type_traits>

#include <gmpxx.h>

namespace rscount {

/// Arbitrary-precision signed integer.
using BigInt = mpz_class;

inline std::string to_string(const BigInt& x) { return x.get_str(); }

inline BigInt parse_big_int(const std::string& text)
{
    BigInt out;
    if (text.empty() || out.set_str(text, 10) != 0) {
        throw std::invalid_argument("not a decimal integer: '" + text + "'");
    }
    return out;
}

/// Exact rational number, always stored in lowest terms with a positive
/// denominator. Zero is 0/1.
class Rational {
   public:
    Rational() = default;

    template <std::integral I>
    Rational(I value)
    {
        if constexpr (std::is_signed_v<I>) {
            value_ = static_cast<long>(value);
        } else {
            value_ = static_cast<unsigned long>(value);
        }
    }

    Rational(const BigInt& value) : value_(value) {}

    Rational(const BigInt& numerator, const BigInt& denominator)
    {
        if (denominator == 0) {
            throw std::domain_error("rational with zero denominator");
        }
        value_ = mpq_class(numerator, denominator);
        value_.canonicalize();
    }

    BigInt numerator() const { return value_.get_num(); }
    BigInt denominator() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    /// Integer value; throws if the denominator is not 1.
    BigInt to_integer() const
    {
        if (!is_integer()) {
            throw std::domain_error("rational " + to_string() + " is not an integer");
        }
        return value_.get_num();
    }

    std::string to_string() const
    {
        if (is_integer()) {
            return value_.get_num().get_str();
        }
        return value_.get_num().get_str() + "/" + value_.get_den().get_str();
    }

    Rational operator-() const { return from_mpq(-value_); }

    Rational& operator+=(const Rational& rhs)
    {
        value_ += rhs.value_;
        return *this;
    }
    Rational& operator-=(const Rational& rhs)
    {
        value_ -= rhs.value_;
        return *this;
    }
    Rational& operator*=(const Rational& rhs)
    {
        value_ *= rhs.value_;
        return *this;
    }
    Rational& operator/=(const Rational& rhs)
    {
        if (rhs.is_zero()) {
            throw std::domain_error("division by zero");
        }
        value_ /= rhs.value_;
        return *this;
    }

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& lhs, const Rational& rhs) { return lhs.value_ == rhs.value_; }
    friend bool operator<(const Rational& lhs, const Rational& rhs) { return lhs.value_ < rhs.value_; }
    friend bool operator>(const Rational& lhs, const Rational& rhs) { return rhs < lhs; }
    friend bool operator<=(const Rational& lhs, const Rational& rhs) { return !(rhs < lhs); }
    friend bool operator>=(const Rational& lhs, const Rational& rhs) { return !(lhs < rhs); }

    friend std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.to_string(); }

   private:
    static Rational from_mpq(mpq_class v)
    {
        Rational out;
        out.value_ = std::move(v);
        return out;
    }

    // gmpxx keeps results of arithmetic canonical; only the two-argument
    // constructor needs an explicit canonicalize().
    mpq_class value_;
};

inline Rational abs(const Rational& q) { return q.sign() < 0 ? -q : q; }

enum class ArithOp { add, sub, mul, div };

/// Checked arithmetic: std::nullopt signals division by zero.
inline std::optional<Rational> rational_arith(const Rational& x, const Rational& y, ArithOp op)
{
    switch (op) {
        case ArithOp::add:
            return x + y;
        case ArithOp::sub:
            return x - y;
        case ArithOp::mul:
            return x * y;
        case ArithOp::div:
            if (y.is_zero()) {
                return std::nullopt;
            }
            return x / y;
    }
    return std::nullopt;
}

/// Binomial coefficient C(n, k) via the multiplicative formula; 0 when k > n.
inline BigInt binomial(std::uint64_t n, std::uint64_t k)
{
    if (k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    BigInt result = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        result *= static_cast<unsigned long>(n - k + i);
        // exact: result now holds C(n-k+i, i) * i
        mpz_divexact_ui(result.get_mpz_t(), result.get_mpz_t(), static_cast<unsigned long>(i));
    }
    return result;
}

/// 2^e as a BigInt.
inline BigInt pow2(std::uint64_t e)
{
    BigInt out;
    mpz_ui_pow_ui(out.get_mpz_t(), 2, static_cast<unsigned long>(e));
    return out;
}

}  // namespace rscount

#endif  // RSCOUNT_RATIONAL_HPP
