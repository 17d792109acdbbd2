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

#ifndef RSCOUNT_POWER_SERIES_HPP
#define RSCOUNT_POWER_SERIES_HPP

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "rscount/multipoly.hpp"
#include "rscount/rational.hpp"

namespace rscount {

/// Hooks a coefficient type into the series engine. Ring elements that need
/// context (the variable count of a MultiPoly) are built "like" an existing
/// element.
template <class R>
struct ring_traits;

template <>
struct ring_traits<Rational> {
    static Rational from_rational(const Rational& q, const Rational&) { return q; }
    static std::optional<Rational> inverse(const Rational& x)
    {
        if (x.is_zero()) {
            return std::nullopt;
        }
        return Rational(1) / x;
    }
};

template <>
struct ring_traits<MultiPoly> {
    static MultiPoly from_rational(const Rational& q, const MultiPoly& like)
    {
        return MultiPoly::constant(like.num_vars(), q);
    }
    // Units of Q[a1..ar] are the nonzero constants.
    static std::optional<MultiPoly> inverse(const MultiPoly& x)
    {
        if (x.is_zero() || !x.is_constant()) {
            return std::nullopt;
        }
        return MultiPoly::constant(x.num_vars(), Rational(1) / x.constant_term());
    }
};

template <class R>
concept CoefficientRing = std::regular<R> && requires(const R& x, const Rational& q) {
    { x + x } -> std::convertible_to<R>;
    { x - x } -> std::convertible_to<R>;
    { x * x } -> std::convertible_to<R>;
    { -x } -> std::convertible_to<R>;
    { ring_traits<R>::from_rational(q, x) } -> std::convertible_to<R>;
    { ring_traits<R>::inverse(x) } -> std::convertible_to<std::optional<R>>;
};

template <CoefficientRing R>
R ring_from_rational(const Rational& q, const R& like)
{
    return ring_traits<R>::from_rational(q, like);
}

/// Truncated formal power series c_0 + c_1 h + ... + c_N h^N.
/// Binary operations truncate to the smaller of the two orders.
template <CoefficientRing R>
class PowerSeries {
   public:
    explicit PowerSeries(std::vector<R> coeffs) : coeffs_(std::move(coeffs))
    {
        if (coeffs_.empty()) {
            throw std::invalid_argument("power series needs at least one coefficient");
        }
    }

    static PowerSeries constant(const R& c, std::size_t order)
    {
        std::vector<R> coeffs(order + 1, ring_from_rational(Rational(0), c));
        coeffs[0] = c;
        return PowerSeries(std::move(coeffs));
    }

    /// Lifts rational coefficients into the ring of `like`.
    static PowerSeries from_rationals(std::span<const Rational> coeffs, const R& like)
    {
        std::vector<R> lifted;
        lifted.reserve(coeffs.size());
        for (const auto& q : coeffs) {
            lifted.push_back(ring_from_rational(q, like));
        }
        return PowerSeries(std::move(lifted));
    }

    std::size_t order() const { return coeffs_.size() - 1; }
    std::span<const R> coefficients() const { return coeffs_; }

    /// Coefficient of h^k; k beyond the truncation order is an error, never zero.
    const R& coefficient(std::size_t k) const
    {
        if (k > order()) {
            throw std::out_of_range("coefficient of h^" + std::to_string(k) + " requested from a series truncated at order " +
                                    std::to_string(order()));
        }
        return coeffs_[k];
    }

    PowerSeries truncated(std::size_t order) const
    {
        if (order > this->order()) {
            throw std::out_of_range("cannot extend a truncated series");
        }
        return PowerSeries(std::vector<R>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(order) + 1));
    }

    PowerSeries operator-() const
    {
        std::vector<R> out;
        out.reserve(coeffs_.size());
        for (const auto& c : coeffs_) {
            out.push_back(-c);
        }
        return PowerSeries(std::move(out));
    }

    friend PowerSeries operator+(const PowerSeries& f, const PowerSeries& g)
    {
        const std::size_t n = std::min(f.order(), g.order());
        std::vector<R> out;
        out.reserve(n + 1);
        for (std::size_t k = 0; k <= n; ++k) {
            out.push_back(f.coeffs_[k] + g.coeffs_[k]);
        }
        return PowerSeries(std::move(out));
    }

    friend PowerSeries operator-(const PowerSeries& f, const PowerSeries& g) { return f + (-g); }

    /// Cauchy product truncated at the common order.
    friend PowerSeries operator*(const PowerSeries& f, const PowerSeries& g)
    {
        const std::size_t n = std::min(f.order(), g.order());
        std::vector<R> out;
        out.reserve(n + 1);
        for (std::size_t k = 0; k <= n; ++k) {
            R acc = f.coeffs_[0] * g.coeffs_[k];
            for (std::size_t j = 1; j <= k; ++j) {
                acc = acc + f.coeffs_[j] * g.coeffs_[k - j];
            }
            out.push_back(std::move(acc));
        }
        return PowerSeries(std::move(out));
    }

    /// Coefficientwise multiplication by a ring element.
    friend PowerSeries operator*(const R& s, const PowerSeries& f)
    {
        std::vector<R> out;
        out.reserve(f.coeffs_.size());
        for (const auto& c : f.coeffs_) {
            out.push_back(s * c);
        }
        return PowerSeries(std::move(out));
    }

    PowerSeries& operator+=(const PowerSeries& g) { return *this = *this + g; }
    PowerSeries& operator-=(const PowerSeries& g) { return *this = *this - g; }
    PowerSeries& operator*=(const PowerSeries& g) { return *this = *this * g; }

    /// Equal when coefficients agree up to the common order.
    friend bool operator==(const PowerSeries& f, const PowerSeries& g)
    {
        const std::size_t n = std::min(f.order(), g.order());
        return std::equal(f.coeffs_.begin(), f.coeffs_.begin() + static_cast<std::ptrdiff_t>(n) + 1, g.coeffs_.begin());
    }

   private:
    std::vector<R> coeffs_;
};

template <CoefficientRing R>
PowerSeries<R> one_like(const PowerSeries<R>& f)
{
    return PowerSeries<R>::constant(ring_from_rational(Rational(1), f.coefficient(0)), f.order());
}

/// Multiplicative inverse via g_k = -(1/f_0) * sum_{j=1..k} f_j g_{k-j}.
/// Throws std::domain_error when f_0 is not a unit of the coefficient ring.
template <CoefficientRing R>
PowerSeries<R> invert(const PowerSeries<R>& f)
{
    auto inv0 = ring_traits<R>::inverse(f.coefficient(0));
    if (!inv0) {
        throw std::domain_error("series constant term is not invertible");
    }
    const auto c = f.coefficients();
    std::vector<R> g;
    g.reserve(c.size());
    g.push_back(*inv0);
    const R minus_inv0 = -*inv0;
    for (std::size_t k = 1; k < c.size(); ++k) {
        R acc = c[1] * g[k - 1];
        for (std::size_t j = 2; j <= k; ++j) {
            acc = acc + c[j] * g[k - j];
        }
        g.push_back(minus_inv0 * acc);
    }
    return PowerSeries<R>(std::move(g));
}

/// f^e by repeated squaring; negative exponents invert first.
template <CoefficientRing R>
PowerSeries<R> pow(const PowerSeries<R>& f, std::int64_t e)
{
    PowerSeries<R> base = e < 0 ? invert(f) : f;
    std::uint64_t n = e < 0 ? static_cast<std::uint64_t>(-(e + 1)) + 1 : static_cast<std::uint64_t>(e);
    PowerSeries<R> result = one_like(f);
    while (n != 0) {
        if (n & 1u) {
            result *= base;
        }
        n >>= 1;
        if (n != 0) {
            base *= base;
        }
    }
    return result;
}

/// Substitution h -> c*h: coefficient k is multiplied by c^k.
template <CoefficientRing R>
PowerSeries<R> scale_arg(const PowerSeries<R>& f, const R& c)
{
    const auto coeffs = f.coefficients();
    std::vector<R> out;
    out.reserve(coeffs.size());
    R power = ring_from_rational(Rational(1), c);
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        out.push_back(power * coeffs[k]);
        if (k + 1 < coeffs.size()) {
            power = power * c;
        }
    }
    return PowerSeries<R>(std::move(out));
}

enum class SeriesKind {
    exp,
    sinh,
    cosh,
    /// sinh(h/2) / (h/2)
    sinh_half_normalized,
};

/// Exact Taylor coefficients of a standard series as rationals.
inline std::vector<Rational> std_series_coefficients(SeriesKind kind, std::size_t order)
{
    std::vector<Rational> out(order + 1);
    BigInt factorial = 1;  // k!
    for (std::size_t k = 0; k <= order; ++k) {
        if (k > 0) {
            factorial *= static_cast<unsigned long>(k);
        }
        const bool even = k % 2 == 0;
        switch (kind) {
            case SeriesKind::exp:
                out[k] = Rational(1, factorial);
                break;
            case SeriesKind::sinh:
                out[k] = even ? Rational() : Rational(1, factorial);
                break;
            case SeriesKind::cosh:
                out[k] = even ? Rational(1, factorial) : Rational();
                break;
            case SeriesKind::sinh_half_normalized:
                // 1 / (2^k (k+1)!)
                out[k] = even ? Rational(1, pow2(k) * factorial * static_cast<unsigned long>(k + 1)) : Rational();
                break;
        }
    }
    return out;
}

template <CoefficientRing R>
PowerSeries<R> std_series(SeriesKind kind, std::size_t order, const R& like)
{
    const auto q = std_series_coefficients(kind, order);
    return PowerSeries<R>::from_rationals(q, like);
}

inline PowerSeries<Rational> std_series(SeriesKind kind, std::size_t order)
{
    return PowerSeries<Rational>(std_series_coefficients(kind, order));
}

}  // namespace rscount

#endif  // RSCOUNT_POWER_SERIES_HPP
