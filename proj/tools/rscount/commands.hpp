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

#ifndef RSCOUNT_TOOLS_COMMANDS_HPP
#define RSCOUNT_TOOLS_COMMANDS_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "output_document.hpp"
#include "rscount/rscount.hpp"

namespace rscount::cli {

/// Bad flag values that pass parsing but not the command's contract (exit 1).
class UsageError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

namespace detail {

inline std::string join(const std::vector<std::string>& parts, const std::string& sep)
{
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        out += (i ? sep : "") + parts[i];
    }
    return out;
}

inline std::string degrees_text(const CompleteIntersection& ci)
{
    std::vector<std::string> parts;
    for (auto a : ci.degrees()) {
        parts.push_back(std::to_string(a));
    }
    return join(parts, ";");
}

// Ordered (key, json value, flat text) triples keep the JSON and table views in step.
struct Record {
    nlohmann::ordered_json json = nlohmann::ordered_json::object();
    std::vector<std::string> columns;
    std::vector<std::string> cells;

    void add(const std::string& key, nlohmann::ordered_json value, std::string text)
    {
        json[key] = std::move(value);
        columns.push_back(key);
        cells.push_back(std::move(text));
    }
    void add_big(const std::string& key, const BigInt& value)
    {
        const auto s = to_string(value);
        add(key, s, s);
    }
    void add_int(const std::string& key, std::int64_t value) { add(key, value, std::to_string(value)); }
};

inline Record report_record(const RSBoundReport& report)
{
    Record rec;
    const auto& ci = report.ci;
    rec.add_int("m", ci.complex_dim());
    nlohmann::ordered_json degrees = nlohmann::ordered_json::array();
    for (auto a : ci.degrees()) {
        degrees.push_back(a);
    }
    rec.add("degrees", degrees, degrees_text(ci));
    rec.add_int("n", report.real_dim);
    rec.add("spin", report.spin, report.spin ? "true" : "false");
    rec.add("curvature", std::string(to_string(report.curvature)), std::string(to_string(report.curvature)));
    rec.add_big("charnum", report.charnum);
    const auto a_hat = a_hat_genus(ci).to_string();
    rec.add("aHatGenus", a_hat, a_hat);
    rec.add_big("rsIndexPlus", rs_index(ci, Chirality::plus));
    rec.add_big("deduction", report.parallel_spinor_deduction);
    rec.add_big("boundPlus", report.bound_plus);
    rec.add_big("boundMinus", report.bound_minus);
    rec.add_big("boundTotal", report.bound_total);
    return rec;
}

inline OutputDocument single_row(std::string command, Record rec)
{
    OutputDocument doc;
    doc.command = std::move(command);
    doc.result = std::move(rec.json);
    doc.columns = std::move(rec.columns);
    doc.rows.push_back(std::move(rec.cells));
    return doc;
}

}  // namespace detail

inline OutputDocument cmd_compute(int m, const std::vector<std::int64_t>& degrees)
{
    const CompleteIntersection ci(m, degrees);
    return detail::single_row("compute", detail::report_record(rs_lower_bound(ci)));
}

inline OutputDocument cmd_product(int m, const std::vector<std::int64_t>& degrees, std::int64_t torus_dim)
{
    if (torus_dim < 0) {
        throw UsageError("--torus-dim must be nonnegative");
    }
    const CompleteIntersection ci(m, degrees);
    const auto report = rs_lower_bound(ci);
    auto rec = detail::report_record(report);
    rec.add_int("torusDim", torus_dim);
    rec.add_big("productBound", product_bound(report.bound_total, torus_dim));
    rec.add_int("totalRealDimension", ci.real_dim() + torus_dim);
    return detail::single_row("product", std::move(rec));
}

inline OutputDocument cmd_search(int m, const BigInt& threshold)
{
    if (m < 2 || m % 2 != 0) {
        throw UsageError("--complex-dim must be even and >= 2");
    }
    if (threshold < 1) {
        throw UsageError("--threshold must be >= 1");
    }
    const auto degree = find_degree_exceeding(m, threshold);
    const CompleteIntersection ci(m, {degree});
    const auto report = rs_lower_bound(ci);

    OutputDocument doc;
    doc.command = "search";
    doc.result["m"] = m;
    doc.result["threshold"] = to_string(threshold);
    doc.result["degree"] = degree;
    doc.result["charnum"] = to_string(report.charnum);
    doc.result["report"] = detail::report_record(report).json;
    doc.columns = {"m", "threshold", "degree", "charnum", "boundTotal"};
    doc.rows.push_back({std::to_string(m), to_string(threshold), std::to_string(degree), to_string(report.charnum),
                        to_string(report.bound_total)});
    return doc;
}

inline OutputDocument cmd_table(const std::string& name, std::int64_t max_param)
{
    OutputDocument doc;
    doc.command = "table";
    doc.result["table"] = name;
    auto rows = nlohmann::ordered_json::array();
    if (name == "parallel-spinors") {
        if (max_param < 1) {
            throw UsageError("--max-n must be >= 1");
        }
        doc.columns = {"n", "maxParallelSpinors"};
        for (std::int64_t n = 1; n <= max_param; ++n) {
            const auto value = to_string(max_parallel_spinors(n));
            rows.push_back({{"n", n}, {"maxParallelSpinors", value}});
            doc.rows.push_back({std::to_string(n), value});
        }
    } else if (name == "calabi-yau") {
        if (max_param < 2 || max_param % 2 != 0) {
            throw UsageError("--max-m must be even and >= 2");
        }
        doc.columns = {"m", "rsBound", "torusRS"};
        for (std::int64_t m = 2; m <= max_param; m += 2) {
            const auto bound = to_string(cy_hypersurface_bound_closed_form(m));
            const auto torus = to_string(torus_rs_dimension(2 * m));
            rows.push_back({{"m", m}, {"rsBound", bound}, {"torusRS", torus}});
            doc.rows.push_back({std::to_string(m), bound, torus});
        }
    } else {
        throw UsageError("unknown table '" + name + "' (expected parallel-spinors or calabi-yau)");
    }
    doc.result["rows"] = std::move(rows);
    return doc;
}

struct VerifyParams {
    std::optional<int> m;
    std::optional<int> r;
    std::optional<int> max_m;
};

/// Verification outcome; `passed` decides the exit code.
struct VerifyOutcome {
    OutputDocument doc;
    bool passed = true;
};

namespace detail {

// Runtime caps keeping each suite interactive.
inline constexpr int kMaxPolyDim = 16;
inline constexpr int kMaxSymmetricDim = 8;
inline constexpr int kMaxSymmetricCodim = 4;
inline constexpr int kMaxClosedFormDim = 100;
inline constexpr int kMaxTorusDim = 2000;

class CheckList {
   public:
    void add(const std::string& name, bool passed, const std::string& detail)
    {
        checks_.push_back({{"name", name}, {"passed", passed}, {"detail", detail}});
        rows_.push_back({name, passed ? "pass" : "fail", detail});
        all_ &= passed;
    }

    VerifyOutcome finish(const std::string& suite, nlohmann::ordered_json params, const std::string& message)
    {
        VerifyOutcome out;
        out.doc.command = "verify";
        out.doc.result["suite"] = suite;
        out.doc.result["params"] = std::move(params);
        out.doc.result["message"] = message;
        out.doc.result["passed"] = all_;
        out.doc.result["checks"] = std::move(checks_);
        out.doc.columns = {"check", "status", "detail"};
        out.doc.rows = std::move(rows_);
        out.passed = all_;
        return out;
    }

   private:
    nlohmann::ordered_json checks_ = nlohmann::ordered_json::array();
    std::vector<std::vector<std::string>> rows_;
    bool all_ = true;
};

inline int require_in_range(const std::optional<int>& value, int fallback, int lo, int hi, const std::string& flag)
{
    const int v = value.value_or(fallback);
    if (v < lo || v > hi) {
        throw UsageError(flag + " must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    }
    return v;
}

/// 2^{-m} (2m+3 - 3^{m+1}) / (m+1)!
inline Rational hypersurface_leading_coefficient(int m)
{
    BigInt three_pow;
    mpz_ui_pow_ui(three_pow.get_mpz_t(), 3, static_cast<unsigned long>(m + 1));
    BigInt factorial;
    mpz_fac_ui(factorial.get_mpz_t(), static_cast<unsigned long>(m + 1));
    return Rational(BigInt(2 * m + 3) - three_pow, pow2(static_cast<std::uint64_t>(m)) * factorial);
}

inline VerifyOutcome verify_hypersurface_poly(const VerifyParams& params)
{
    const int m = require_in_range(params.m, 2, 1, kMaxPolyDim, "--m");
    CheckList checks;
    const MultiPoly poly = char_number_polynomial(m, 1);
    nlohmann::ordered_json p{{"m", m}};
    if (m % 2 != 0) {
        checks.add("vanishes", poly.is_zero(), poly.to_string());
        return checks.finish("hypersurface-poly", p, "identically zero (odd m)");
    }
    const int degree = poly.total_degree();
    checks.add("degree", degree == m + 1, "degree " + std::to_string(degree) + ", expected " + std::to_string(m + 1));
    const Rational expected = hypersurface_leading_coefficient(m);
    const Rational leading = poly.coefficient({static_cast<unsigned>(m + 1)});
    checks.add("leading-coefficient", leading == expected,
               "leading coefficient " + leading.to_string() + ", expected " + expected.to_string());
    // symbolic pipeline against the numeric one at concrete degrees
    bool agree = true;
    for (std::int64_t a = 1; a <= m + 4; ++a) {
        const Rational at = poly.evaluate(std::vector<Rational>{Rational(a)});
        agree &= at == char_number_exact(CompleteIntersection(m, {a}));
    }
    checks.add("numeric-agreement", agree, "a = 1.." + std::to_string(m + 4));
    const Rational at_cy = poly.evaluate(std::vector<Rational>{Rational(m + 2)});
    const BigInt closed = -cy_hypersurface_char_number_magnitude(m);
    checks.add("closed-form-at-a=m+2", at_cy == Rational(closed),
               at_cy.to_string() + " vs " + to_string(closed));
    auto outcome = checks.finish("hypersurface-poly", p, "polynomial of degree " + std::to_string(degree));
    outcome.doc.result["polynomial"] = poly.to_string();
    outcome.doc.result["degree"] = degree;
    outcome.doc.result["leadingCoefficient"] = leading.to_string();
    return outcome;
}

inline VerifyOutcome verify_symmetric_poly(const VerifyParams& params)
{
    const int m = require_in_range(params.m, 2, 1, kMaxSymmetricDim, "--m");
    const int r = require_in_range(params.r, 2, 1, kMaxSymmetricCodim, "--r");
    CheckList checks;
    const MultiPoly poly = char_number_polynomial(m, static_cast<std::size_t>(r));
    nlohmann::ordered_json p{{"m", m}, {"r", r}};
    if (m % 2 != 0) {
        checks.add("vanishes", poly.is_zero(), poly.to_string());
        return checks.finish("symmetric-poly", p, "identically zero (odd m)");
    }
    checks.add("nontrivial", !poly.is_zero(), std::to_string(poly.terms().size()) + " terms");
    checks.add("symmetric", is_symmetric(poly), "invariant under (1 2) and (1 2 ... r)");
    bool per_variable = true;
    std::string degrees;
    for (std::size_t j = 0; j < static_cast<std::size_t>(r); ++j) {
        const int d = poly.degree_in(j);
        per_variable &= d == m + 1;
        degrees += (j ? ", " : "") + std::to_string(d);
    }
    checks.add("degree", per_variable, "degree in each a_j: " + degrees + "; expected " + std::to_string(m + 1));
    const int total = poly.total_degree();
    checks.add("total-degree", total == m + r, "total degree " + std::to_string(total) + ", expected m + r = " +
                                                   std::to_string(m + r));
    std::vector<std::optional<Rational>> tail(static_cast<std::size_t>(r), Rational(1));
    tail[0] = std::nullopt;
    const MultiPoly specialized = poly.partial_evaluate(tail);
    const MultiPoly hypersurface = char_number_polynomial(m, 1);
    checks.add("specialization", specialized == hypersurface,
               "F_r(a,1,...,1) = " + specialized.to_string() + "; F_1(a) = " + hypersurface.to_string());
    auto outcome =
        checks.finish("symmetric-poly", p, "symmetric polynomial of degree " + std::to_string(m + 1) + " in each variable");
    outcome.doc.result["polynomial"] = poly.to_string();
    return outcome;
}

inline VerifyOutcome verify_closed_form(const VerifyParams& params)
{
    const int max_m = require_in_range(params.max_m, 30, 2, kMaxClosedFormDim, "--max-m");
    CheckList checks;
    for (int m = 2; m <= max_m; m += 2) {
        const CompleteIntersection ci(m, {m + 2});
        const BigInt series = char_number(ci);
        const BigInt closed = -cy_hypersurface_char_number_magnitude(m);
        const BigInt bound = rs_lower_bound(ci).bound_total;
        const BigInt closed_bound = cy_hypersurface_bound_closed_form(m);
        checks.add("m=" + std::to_string(m), series == closed && bound == closed_bound,
                   "charnum " + to_string(series) + " vs " + to_string(closed) + "; bound " + to_string(bound) +
                       " vs " + to_string(closed_bound));
    }
    return checks.finish("closed-form", {{"maxM", max_m}}, "series path vs closed form");
}

inline VerifyOutcome verify_torus_inequality(const VerifyParams& params)
{
    const int max_m = require_in_range(params.max_m, 60, 2, kMaxTorusDim, "--max-m");
    CheckList checks;
    for (int m = 2; m <= max_m; m += 2) {
        checks.add("m=" + std::to_string(m), exceeds_torus(m),
                   to_string(cy_hypersurface_bound_closed_form(m)) + " > " + to_string(torus_rs_dimension(2 * m)));
    }
    return checks.finish("torus-inequality", {{"maxM", max_m}}, "Calabi-Yau bound vs RS(T^{2m})");
}

}  // namespace detail

inline VerifyOutcome cmd_verify(const std::string& suite, const VerifyParams& params)
{
    if (suite == "hypersurface-poly") {
        return detail::verify_hypersurface_poly(params);
    }
    if (suite == "symmetric-poly") {
        return detail::verify_symmetric_poly(params);
    }
    if (suite == "closed-form") {
        return detail::verify_closed_form(params);
    }
    if (suite == "torus-inequality") {
        return detail::verify_torus_inequality(params);
    }
    throw UsageError("unknown suite '" + suite + "'");
}

}  // namespace rscount::cli

#endif  // RSCOUNT_TOOLS_COMMANDS_HPP
