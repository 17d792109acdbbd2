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

#ifndef RSCOUNT_MULTIPOLY_HPP
#define RSCOUNT_MULTIPOLY_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rscount/rational.hpp"

namespace rscount {

/// Sparse multivariate polynomial over the rationals in variables
/// a1 ... a_r. Terms map exponent vectors to nonzero coefficients.
class MultiPoly {
   public:
    using Exponents = std::vector<unsigned>;
    using TermMap = std::map<Exponents, Rational>;

    explicit MultiPoly(std::size_t num_vars = 0) : num_vars_(num_vars) {}

    static MultiPoly constant(std::size_t num_vars, const Rational& c)
    {
        MultiPoly p(num_vars);
        p.add_term(Exponents(num_vars, 0), c);
        return p;
    }

    /// The variable a_{index+1}.
    static MultiPoly variable(std::size_t num_vars, std::size_t index)
    {
        if (index >= num_vars) {
            throw std::out_of_range("variable index out of range");
        }
        MultiPoly p(num_vars);
        Exponents e(num_vars, 0);
        e[index] = 1;
        p.add_term(std::move(e), Rational(1));
        return p;
    }

    /// Builds from (exponents, coefficient) pairs; zero coefficients are dropped
    /// and repeated exponents accumulate.
    static MultiPoly from_terms(std::size_t num_vars, const std::vector<std::pair<Exponents, Rational>>& terms)
    {
        MultiPoly p(num_vars);
        for (const auto& [e, c] : terms) {
            if (e.size() != num_vars) {
                throw std::invalid_argument("exponent vector length does not match variable count");
            }
            p.add_term(e, c);
        }
        return p;
    }

    std::size_t num_vars() const { return num_vars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const
    {
        return terms_.empty() || (terms_.size() == 1 && total_degree() == 0);
    }

    Rational constant_term() const { return coefficient(Exponents(num_vars_, 0)); }

    Rational coefficient(const Exponents& e) const
    {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rational() : it->second;
    }

    /// Total degree; -1 for the zero polynomial.
    int total_degree() const
    {
        int deg = -1;
        for (const auto& [e, c] : terms_) {
            deg = std::max(deg, static_cast<int>(std::accumulate(e.begin(), e.end(), 0u)));
        }
        return deg;
    }

    /// Degree in variable a_{index+1} alone; -1 for the zero polynomial.
    int degree_in(std::size_t index) const
    {
        if (index >= num_vars_) {
            throw std::out_of_range("variable index out of range");
        }
        int deg = -1;
        for (const auto& [e, c] : terms_) {
            deg = std::max(deg, static_cast<int>(e[index]));
        }
        return deg;
    }

    /// Largest power of any single variable; -1 for the zero polynomial.
    int max_variable_degree() const
    {
        int deg = terms_.empty() ? -1 : 0;
        for (const auto& [e, c] : terms_) {
            for (unsigned k : e) {
                deg = std::max(deg, static_cast<int>(k));
            }
        }
        return deg;
    }

    MultiPoly operator-() const
    {
        MultiPoly out(num_vars_);
        for (const auto& [e, c] : terms_) {
            out.terms_.emplace(e, -c);
        }
        return out;
    }

    MultiPoly& operator+=(const MultiPoly& rhs)
    {
        check_compatible(rhs);
        for (const auto& [e, c] : rhs.terms_) {
            add_term(e, c);
        }
        return *this;
    }

    MultiPoly& operator-=(const MultiPoly& rhs)
    {
        check_compatible(rhs);
        for (const auto& [e, c] : rhs.terms_) {
            add_term(e, -c);
        }
        return *this;
    }

    MultiPoly& operator*=(const Rational& s)
    {
        if (s.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, c] : terms_) {
            c *= s;
        }
        return *this;
    }

    friend MultiPoly operator+(MultiPoly lhs, const MultiPoly& rhs) { return lhs += rhs; }
    friend MultiPoly operator-(MultiPoly lhs, const MultiPoly& rhs) { return lhs -= rhs; }
    friend MultiPoly operator*(MultiPoly lhs, const Rational& s) { return lhs *= s; }
    friend MultiPoly operator*(const Rational& s, MultiPoly rhs) { return rhs *= s; }

    friend MultiPoly operator*(const MultiPoly& lhs, const MultiPoly& rhs)
    {
        lhs.check_compatible(rhs);
        MultiPoly out(lhs.num_vars_);
        Exponents e(lhs.num_vars_);
        for (const auto& [el, cl] : lhs.terms_) {
            for (const auto& [er, cr] : rhs.terms_) {
                for (std::size_t i = 0; i < e.size(); ++i) {
                    e[i] = el[i] + er[i];
                }
                out.add_term(e, cl * cr);
            }
        }
        return out;
    }

    MultiPoly& operator*=(const MultiPoly& rhs) { return *this = *this * rhs; }

    friend bool operator==(const MultiPoly& lhs, const MultiPoly& rhs)
    {
        return lhs.num_vars_ == rhs.num_vars_ && lhs.terms_ == rhs.terms_;
    }

    /// Exact evaluation at a point.
    Rational evaluate(std::span<const Rational> point) const
    {
        if (point.size() != num_vars_) {
            throw std::invalid_argument("evaluation point has " + std::to_string(point.size()) +
                                        " entries, polynomial has " + std::to_string(num_vars_) + " variables");
        }
        Rational sum;
        for (const auto& [e, c] : terms_) {
            Rational term = c;
            for (std::size_t i = 0; i < num_vars_; ++i) {
                for (unsigned k = 0; k < e[i]; ++k) {
                    term *= point[i];
                }
            }
            sum += term;
        }
        return sum;
    }

    /// Substitutes the engaged entries of `values`; the result is a polynomial
    /// in the remaining variables, kept in their original order.
    MultiPoly partial_evaluate(std::span<const std::optional<Rational>> values) const
    {
        if (values.size() != num_vars_) {
            throw std::invalid_argument("substitution length does not match variable count");
        }
        std::vector<std::size_t> kept;
        for (std::size_t i = 0; i < num_vars_; ++i) {
            if (!values[i]) {
                kept.push_back(i);
            }
        }
        MultiPoly out(kept.size());
        Exponents reduced(kept.size());
        for (const auto& [e, c] : terms_) {
            Rational term = c;
            for (std::size_t i = 0; i < num_vars_; ++i) {
                if (values[i]) {
                    for (unsigned k = 0; k < e[i]; ++k) {
                        term *= *values[i];
                    }
                }
            }
            for (std::size_t j = 0; j < kept.size(); ++j) {
                reduced[j] = e[kept[j]];
            }
            out.add_term(reduced, term);
        }
        return out;
    }

    /// Renames variables: variable i of the result is variable perm[i] of *this.
    MultiPoly permuted(std::span<const std::size_t> perm) const
    {
        if (perm.size() != num_vars_) {
            throw std::invalid_argument("permutation length does not match variable count");
        }
        MultiPoly out(num_vars_);
        Exponents moved(num_vars_);
        for (const auto& [e, c] : terms_) {
            for (std::size_t i = 0; i < num_vars_; ++i) {
                moved[i] = e[perm[i]];
            }
            out.add_term(moved, c);
        }
        return out;
    }

    /// Coefficients of the univariate polynomial in variable 0, indexed by
    /// power. Requires num_vars() == 1.
    std::vector<Rational> univariate_coefficients() const
    {
        if (num_vars_ != 1) {
            throw std::invalid_argument("univariate_coefficients requires exactly one variable");
        }
        std::vector<Rational> out(static_cast<std::size_t>(std::max(total_degree(), 0)) + 1);
        for (const auto& [e, c] : terms_) {
            out[e[0]] = c;
        }
        return out;
    }

    /// Human-readable form, highest total degree first, e.g. "-5/6*a1^3 + 10/3*a1".
    std::string to_string() const
    {
        if (terms_.empty()) {
            return "0";
        }
        std::vector<std::pair<Exponents, Rational>> sorted(terms_.begin(), terms_.end());
        std::stable_sort(sorted.begin(), sorted.end(), [](const auto& x, const auto& y) {
            auto dx = std::accumulate(x.first.begin(), x.first.end(), 0u);
            auto dy = std::accumulate(y.first.begin(), y.first.end(), 0u);
            if (dx != dy) {
                return dx > dy;
            }
            return x.first > y.first;
        });
        std::string out;
        bool first = true;
        for (const auto& [e, c] : sorted) {
            bool monomial = std::any_of(e.begin(), e.end(), [](unsigned k) { return k != 0; });
            Rational mag = abs(c);
            if (first) {
                out += c.sign() < 0 ? "-" : "";
            } else {
                out += c.sign() < 0 ? " - " : " + ";
            }
            first = false;
            bool need_star = false;
            if (!monomial || mag != Rational(1)) {
                out += mag.to_string();
                need_star = true;
            }
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) {
                    continue;
                }
                out += need_star ? "*" : "";
                out += "a" + std::to_string(i + 1);
                if (e[i] > 1) {
                    out += "^" + std::to_string(e[i]);
                }
                need_star = true;
            }
        }
        return out;
    }

    friend std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << p.to_string(); }

   private:
    void check_compatible(const MultiPoly& rhs) const
    {
        if (num_vars_ != rhs.num_vars_) {
            throw std::invalid_argument("polynomial variable-count mismatch: " + std::to_string(num_vars_) +
                                        " vs " + std::to_string(rhs.num_vars_));
        }
    }

    void add_term(const Exponents& e, const Rational& c)
    {
        if (c.is_zero()) {
            return;
        }
        auto [it, inserted] = terms_.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) {
                terms_.erase(it);
            }
        }
    }

    std::size_t num_vars_;
    TermMap terms_;
};

/// True iff p is invariant under all permutations of its variables. Checks
/// the transposition (1 2) and the cycle (1 2 ... r), which generate S_r.
inline bool is_symmetric(const MultiPoly& p)
{
    const std::size_t r = p.num_vars();
    if (r <= 1) {
        return true;
    }
    std::vector<std::size_t> swap(r);
    std::iota(swap.begin(), swap.end(), 0);
    std::swap(swap[0], swap[1]);
    std::vector<std::size_t> cycle(r);
    for (std::size_t i = 0; i < r; ++i) {
        cycle[i] = (i + 1) % r;
    }
    return p.permuted(swap) == p && p.permuted(cycle) == p;
}

}  // namespace rscount

#endif  // RSCOUNT_MULTIPOLY_HPP
