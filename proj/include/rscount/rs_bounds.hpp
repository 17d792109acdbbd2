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

#ifndef RSCOUNT_RS_BOUNDS_HPP
#define RSCOUNT_RS_BOUNDS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include "rscount/characteristic_classes.hpp"
#include "rscount/rational.hpp"

namespace rscount {

/// Raised when the lower-bound theorem does not apply to an input manifold.
class TheoremInapplicable : public std::domain_error {
   public:
    enum class Reason { not_spin, fano, low_dimension };

    TheoremInapplicable(Reason reason, const std::string& what) : std::domain_error(what), reason_(reason) {}

    Reason reason() const { return reason_; }

   private:
    Reason reason_;
};

/// Maximal dimension of the space of parallel spinors on a complete simply
/// connected n-manifold without flat factor (products of K3 surfaces and up
/// to three G2-manifolds).
inline BigInt max_parallel_spinors(std::int64_t n)
{
    if (n <= 0) {
        throw std::invalid_argument("dimension must be positive");
    }
    const auto u = static_cast<std::uint64_t>(n);
    switch (u % 4) {
        case 0:
            return pow2(u / 4);
        case 3:
            return u >= 7 ? pow2((u - 7) / 4) : BigInt(0);
        case 2:
            return u >= 14 ? pow2((u - 14) / 4 + 1) : BigInt(0);
        default:
            return u >= 21 ? pow2((u - 21) / 4 + 1) : BigInt(0);
    }
}

/// RS(T^n) = (n-1) 2^{floor(n/2)}: the rank of the 3/2-spinor bundle of a flat torus.
inline BigInt torus_rs_dimension(std::int64_t n)
{
    if (n <= 0) {
        throw std::invalid_argument("dimension must be positive");
    }
    const auto u = static_cast<std::uint64_t>(n);
    return BigInt(static_cast<unsigned long>(u - 1)) * pow2(u / 2);
}

/// Parallel spinors on T^k with its trivial spin structure; T^0 is a point.
inline BigInt torus_parallel_spinors(std::int64_t k)
{
    if (k < 0) {
        throw std::invalid_argument("torus dimension must be nonnegative");
    }
    return pow2(static_cast<std::uint64_t>(k) / 2);
}

struct RSBoundReport {
    CompleteIntersection ci;
    int real_dim;
    bool spin;
    Curvature curvature;
    BigInt charnum;
    /// N(n) on the Calabi-Yau branch, else 0.
    BigInt parallel_spinor_deduction;
    BigInt bound_plus;
    BigInt bound_minus;
    BigInt bound_total;
};

namespace detail {
inline BigInt clamp_nonnegative(BigInt x) { return x < 0 ? BigInt(0) : x; }
}  // namespace detail

/// Lower bounds on RS^+, RS^- and RS for an Einstein complete intersection.
/// Bounds below zero carry no information and are clamped to 0; the raw
/// characteristic number stays in `charnum`.
inline RSBoundReport rs_lower_bound(const CompleteIntersection& ci)
{
    using Reason = TheoremInapplicable::Reason;
    if (!is_spin(ci)) {
        throw TheoremInapplicable(Reason::not_spin, "not spin: no spin structure (c1 coefficient " +
                                                        std::to_string(first_chern_coefficient(ci)) + " is odd)");
    }
    const Curvature curvature = curvature_class(ci);
    if (curvature == Curvature::fano) {
        throw TheoremInapplicable(Reason::fano,
                                  "fano: theorem inapplicable (Kaehler-Einstein existence not guaranteed for c1 > 0)");
    }
    if (ci.real_dim() < 4) {
        throw TheoremInapplicable(Reason::low_dimension, "theorem requires n >= 4");
    }

    RSBoundReport report{ci, ci.real_dim(), true, curvature, char_number(ci), 0, 0, 0, 0};
    if (curvature == Curvature::calabi_yau) {
        report.parallel_spinor_deduction = max_parallel_spinors(ci.real_dim());
    }
    const BigInt& d = report.parallel_spinor_deduction;
    report.bound_plus = detail::clamp_nonnegative(report.charnum - d);
    report.bound_minus = detail::clamp_nonnegative(-report.charnum - d);
    report.bound_total = detail::clamp_nonnegative(BigInt(::abs(report.charnum)) - d);
    return report;
}

/// 2 [C(2m+3, m+1) + 1 - (m+2)^2], the characteristic number (up to sign) of
/// the degree-(m+2) Calabi-Yau hypersurface in CP^{m+1}.
inline BigInt cy_hypersurface_char_number_magnitude(std::int64_t m)
{
    const auto u = static_cast<std::uint64_t>(m);
    const BigInt m2 = static_cast<unsigned long>(u + 2);
    return 2 * (binomial(2 * u + 3, u + 1) + 1 - m2 * m2);
}

namespace detail {
inline void require_even_positive(std::int64_t m)
{
    if (m < 2 || m % 2 != 0) {
        throw std::invalid_argument("complex dimension must be even and >= 2, got " + std::to_string(m));
    }
}
}  // namespace detail

/// 2 [C(2m+3, m+1) + 1 - (m+2)^2] - 2^{m/2}.
inline BigInt cy_hypersurface_bound_closed_form(std::int64_t m)
{
    detail::require_even_positive(m);
    return cy_hypersurface_char_number_magnitude(m) - pow2(static_cast<std::uint64_t>(m) / 2);
}

/// RS(X x T^k) >= RS(X) * PS(T^k).
inline BigInt product_bound(const BigInt& rs_x, std::int64_t k) { return rs_x * torus_parallel_spinors(k); }

/// Smallest even degree a > m+2 whose hypersurface has |charnum| > threshold.
/// The characteristic number is a polynomial of degree m+1 in a with nonzero
/// leading coefficient, so the scan terminates.
inline std::int64_t find_degree_exceeding(std::int64_t m, const BigInt& threshold)
{
    detail::require_even_positive(m);
    if (threshold < 1) {
        throw std::invalid_argument("threshold must be positive");
    }
    for (std::int64_t a = m + 4;; a += 2) {
        if (::abs(char_number(CompleteIntersection(static_cast<int>(m), {a}))) > threshold) {
            return a;
        }
    }
}

/// Whether the Calabi-Yau hypersurface bound beats RS(T^{2m}).
inline bool exceeds_torus(std::int64_t m)
{
    detail::require_even_positive(m);
    return cy_hypersurface_bound_closed_form(m) > torus_rs_dimension(2 * m);
}

}  // namespace rscount

#endif  // RSCOUNT_RS_BOUNDS_HPP
