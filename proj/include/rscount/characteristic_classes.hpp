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

#ifndef RSCOUNT_CHARACTERISTIC_CLASSES_HPP
#define RSCOUNT_CHARACTERISTIC_CLASSES_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rscount/multipoly.hpp"
#include "rscount/power_series.hpp"
#include "rscount/rational.hpp"

namespace rscount {

/// A complete intersection M of complex dimension m in CP^{m+r}, cut out by
/// r hypersurfaces of degrees a_1..a_r. Degrees are kept sorted ascending.
class CompleteIntersection {
   public:
    CompleteIntersection(int complex_dim, std::vector<std::int64_t> degrees)
        : m_(complex_dim), degrees_(std::move(degrees))
    {
        if (m_ < 1) {
            throw std::invalid_argument("complex dimension must be positive");
        }
        if (degrees_.empty()) {
            throw std::invalid_argument("at least one degree is required");
        }
        if (std::any_of(degrees_.begin(), degrees_.end(), [](std::int64_t a) { return a < 1; })) {
            throw std::invalid_argument("degrees must be positive");
        }
        std::sort(degrees_.begin(), degrees_.end());
    }

    int complex_dim() const { return m_; }
    int real_dim() const { return 2 * m_; }
    std::size_t codim() const { return degrees_.size(); }
    std::span<const std::int64_t> degrees() const { return degrees_; }

    /// m + r + 1, the number of copies of the hyperplane bundle in the
    /// normal-bundle sequence.
    std::int64_t ambient_rank() const { return m_ + static_cast<std::int64_t>(degrees_.size()) + 1; }

    /// <h^m, [M]> = a_1 ... a_r.
    BigInt degree_product() const
    {
        BigInt p = 1;
        for (auto a : degrees_) {
            p *= static_cast<long>(a);
        }
        return p;
    }

    friend bool operator==(const CompleteIntersection&, const CompleteIntersection&) = default;

   private:
    int m_;
    std::vector<std::int64_t> degrees_;
};

/// Coefficients of a characteristic class in powers of h.
using ClassPolynomial = PowerSeries<Rational>;

enum class Curvature { fano, calabi_yau, general_type };

inline std::string_view to_string(Curvature c)
{
    switch (c) {
        case Curvature::fano:
            return "fano";
        case Curvature::calabi_yau:
            return "calabi_yau";
        case Curvature::general_type:
            return "general_type";
    }
    return "unknown";
}

/// c(TM) = (1+h)^{m+r+1} prod_j (1+a_j h)^{-1}, truncated at `order`.
inline ClassPolynomial chern_class(const CompleteIntersection& ci, std::size_t order)
{
    std::vector<Rational> linear(order + 1);
    linear[0] = 1;
    if (order >= 1) {
        linear[1] = 1;
    }
    ClassPolynomial c = pow(ClassPolynomial(linear), ci.ambient_rank());
    for (auto a : ci.degrees()) {
        if (order >= 1) {
            linear[1] = a;
        }
        c *= invert(ClassPolynomial(linear));
    }
    return c;
}

/// k with c_1(TM) = k h.
inline std::int64_t first_chern_coefficient(const CompleteIntersection& ci)
{
    const auto degrees = ci.degrees();
    return ci.ambient_rank() - std::accumulate(degrees.begin(), degrees.end(), std::int64_t{0});
}

inline bool is_spin(const CompleteIntersection& ci) { return first_chern_coefficient(ci) % 2 == 0; }

inline Curvature curvature_class(const CompleteIntersection& ci)
{
    const auto k = first_chern_coefficient(ci);
    if (k > 0) {
        return Curvature::fano;
    }
    return k == 0 ? Curvature::calabi_yau : Curvature::general_type;
}

/// p(TM) = (1+h^2)^{m+r+1} prod_j (1+a_j^2 h^2)^{-1}, truncated at `order`.
inline ClassPolynomial pontryagin_class(const CompleteIntersection& ci, std::size_t order)
{
    std::vector<Rational> quadratic(order + 1);
    quadratic[0] = 1;
    if (order >= 2) {
        quadratic[2] = 1;
    }
    ClassPolynomial p = pow(ClassPolynomial(quadratic), ci.ambient_rank());
    for (auto a : ci.degrees()) {
        if (order >= 2) {
            quadratic[2] = Rational(a) * Rational(a);
        }
        p *= invert(ClassPolynomial(quadratic));
    }
    return p;
}

namespace detail {

// Let S(h) = sinh(h/2)/(h/2). After cancelling the pole of
// (h/2)^{m+1} / sinh(h/2)^{m+r+1} * prod sinh(a_j h/2) against the
// monomials, the pairing with [M] becomes
//   A-hat:        (prod a_j)     * [h^m] S(h)^{-(m+r+1)} prod S(a_j h)
//   A-hat * ch:   2 (prod a_j)   * [h^m] S(h)^{-(m+r+1)} prod S(a_j h) B(h)
// with B(h) = (m+r+1) cosh(h) - 1 - sum_j cosh(a_j h).
// Everything is a unit series, so truncation at order m is exact.
template <CoefficientRing R>
R paired_coefficient(int m, std::span<const R> degrees, const R& one, bool with_chern_character)
{
    if (m < 1 || degrees.empty()) {
        throw std::invalid_argument("need m >= 1 and at least one degree");
    }
    const auto order = static_cast<std::size_t>(m);
    const auto rank = static_cast<std::int64_t>(m) + static_cast<std::int64_t>(degrees.size()) + 1;

    const auto s = std_series(SeriesKind::sinh_half_normalized, order, one);
    auto integrand = pow(s, -rank);
    R prefactor = one;
    for (const auto& a : degrees) {
        integrand *= scale_arg(s, a);
        prefactor = prefactor * a;
    }

    if (with_chern_character) {
        const auto cosh = std_series(SeriesKind::cosh, order, one);
        auto b = ring_from_rational(Rational(rank), one) * cosh - PowerSeries<R>::constant(one, order);
        for (const auto& a : degrees) {
            b -= scale_arg(cosh, a);
        }
        integrand *= b;
        prefactor = ring_from_rational(Rational(2), one) * prefactor;
    }
    return prefactor * integrand.coefficient(order);
}

inline std::vector<Rational> rational_degrees(const CompleteIntersection& ci)
{
    return {ci.degrees().begin(), ci.degrees().end()};
}

}  // namespace detail

/// <A-hat(TM) ch(T^C M), [M]> as an exact rational. Integral for spin M;
/// non-spin complete intersections can give fractions (CP^2 gives 5/2).
inline Rational char_number_exact(const CompleteIntersection& ci)
{
    const auto degrees = detail::rational_degrees(ci);
    return detail::paired_coefficient<Rational>(ci.complex_dim(), degrees, Rational(1), true);
}

/// <A-hat(TM) ch(T^C M), [M]> as an integer.
/// Throws std::logic_error if a spin manifold produces a fraction (an engine
/// bug) and std::domain_error for a fractional non-spin value.
inline BigInt char_number(const CompleteIntersection& ci)
{
    const Rational value = char_number_exact(ci);
    if (!value.is_integer()) {
        if (is_spin(ci)) {
            throw std::logic_error("internal consistency: non-integral characteristic number " + value.to_string() +
                                   " for a spin complete intersection");
        }
        throw std::domain_error("characteristic number " + value.to_string() +
                                " is not an integer (manifold is not spin)");
    }
    return value.numerator();
}

/// The characteristic number as a polynomial in symbolic degrees a1..ar.
inline MultiPoly char_number_polynomial(int m, std::size_t r)
{
    if (r == 0) {
        throw std::invalid_argument("codimension must be positive");
    }
    const MultiPoly one = MultiPoly::constant(r, Rational(1));
    std::vector<MultiPoly> degrees;
    degrees.reserve(r);
    for (std::size_t j = 0; j < r; ++j) {
        degrees.push_back(MultiPoly::variable(r, j));
    }
    return detail::paired_coefficient<MultiPoly>(m, degrees, one, true);
}

/// <A-hat(TM), [M]>.
inline Rational a_hat_genus(const CompleteIntersection& ci)
{
    const auto degrees = detail::rational_degrees(ci);
    return detail::paired_coefficient<Rational>(ci.complex_dim(), degrees, Rational(1), false);
}

enum class Chirality { plus, minus };

/// ind(Q^+-) = +-<A-hat(M) (ch(T^C M) + 1), [M]>. Requires a spin structure.
inline BigInt rs_index(const CompleteIntersection& ci, Chirality chirality)
{
    if (!is_spin(ci)) {
        throw std::domain_error("no spin structure: the Rarita-Schwinger index is undefined");
    }
    const Rational value = char_number_exact(ci) + a_hat_genus(ci);
    if (!value.is_integer()) {
        throw std::logic_error("internal consistency: non-integral index " + value.to_string());
    }
    return chirality == Chirality::plus ? value.numerator() : BigInt(-value.numerator());
}

}  // namespace rscount

#endif  // RSCOUNT_CHARACTERISTIC_CLASSES_HPP
