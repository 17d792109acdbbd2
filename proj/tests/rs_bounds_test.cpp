#include <gtest/gtest.h>

#include <string>

#include "paper_tables.hpp"
#include "rscount/rs_bounds.hpp"

namespace rscount {
namespace {

using CI = CompleteIntersection;

TEST(MaxParallelSpinors, Table)
{
    for (int n = 1; n <= 28; ++n) {
        ASSERT_EQ(max_parallel_spinors(n), testing::kParallelSpinorTable[static_cast<std::size_t>(n - 1)]) << n;
    }
    EXPECT_EQ(max_parallel_spinors(4), 2);
    EXPECT_EQ(max_parallel_spinors(7), 1);
    EXPECT_EQ(max_parallel_spinors(28), 128);
    EXPECT_EQ(max_parallel_spinors(10), 0);
    EXPECT_THROW(max_parallel_spinors(0), std::invalid_argument);
}

TEST(MaxParallelSpinors, ProductRealization)
{
    // N(n) is realised by k K3 factors (2^k) and g <= 3 G2 factors (1, 1, 2, 2)
    for (int n = 1; n <= 200; ++n) {
        BigInt best = 0;
        for (int g = 0; g <= 3; ++g) {
            const int rest = n - 7 * g;
            if (rest < 0 || rest % 4 != 0) {
                continue;
            }
            BigInt value = pow2(static_cast<std::uint64_t>(rest / 4)) * (g >= 2 ? 2 : 1);
            if (value > best) {
                best = value;
            }
        }
        ASSERT_EQ(max_parallel_spinors(n), best) << n;
    }
}

TEST(Torus, Counts)
{
    EXPECT_EQ(torus_rs_dimension(4), 12);
    EXPECT_EQ(torus_rs_dimension(8), 112);
    EXPECT_EQ(torus_rs_dimension(1), 0);
    EXPECT_THROW(torus_rs_dimension(0), std::invalid_argument);
    EXPECT_EQ(torus_parallel_spinors(2), 2);
    EXPECT_EQ(torus_parallel_spinors(3), 2);
    EXPECT_EQ(torus_parallel_spinors(0), 1);
    EXPECT_THROW(torus_parallel_spinors(-1), std::invalid_argument);
}

TEST(RSLowerBound, K3)
{
    const auto report = rs_lower_bound(CI(2, {4}));
    EXPECT_EQ(report.charnum, -40);
    EXPECT_EQ(report.curvature, Curvature::calabi_yau);
    EXPECT_EQ(report.parallel_spinor_deduction, 2);
    EXPECT_EQ(report.bound_total, 38);
    EXPECT_EQ(report.bound_minus, 38);
    EXPECT_EQ(report.bound_plus, 0);
    EXPECT_EQ(report.real_dim, 4);
}

TEST(RSLowerBound, Examples)
{
    const auto sextic = rs_lower_bound(CI(2, {6}));
    EXPECT_EQ(sextic.bound_total, 160);
    EXPECT_EQ(sextic.parallel_spinor_deduction, 0);
    EXPECT_EQ(sextic.curvature, Curvature::general_type);

    // Calabi-Yau fourfold (sextic in CP^5) is the second row of the CY table
    EXPECT_EQ(rs_lower_bound(CI(4, {6})).bound_total, 850);
    // degree 8 in CP^5 is of general type: no deduction
    const auto octic = rs_lower_bound(CI(4, {8}));
    EXPECT_EQ(octic.charnum, -3752);
    EXPECT_EQ(octic.bound_total, 3752);
}

TEST(RSLowerBound, Rejections)
{
    using Reason = TheoremInapplicable::Reason;
    auto reason_of = [](const CI& ci) {
        try {
            rs_lower_bound(ci);
        } catch (const TheoremInapplicable& e) {
            return e.reason();
        }
        ADD_FAILURE() << "expected rejection";
        return Reason::low_dimension;
    };
    EXPECT_EQ(reason_of(CI(2, {5})), Reason::not_spin);
    EXPECT_EQ(reason_of(CI(2, {2})), Reason::fano);
    EXPECT_EQ(reason_of(CI(1, {3})), Reason::low_dimension);
}

TEST(RSLowerBound, BoundBookkeeping)
{
    for (int m = 2; m <= 6; ++m) {
        for (std::int64_t a = 1; a <= 12; ++a) {
            for (std::int64_t b = 1; b <= 4; ++b) {
                const CI ci(m, {a, b});
                if (!is_spin(ci) || curvature_class(ci) == Curvature::fano) {
                    continue;
                }
                const auto r = rs_lower_bound(ci);
                const BigInt d = r.parallel_spinor_deduction;
                const BigInt magnitude = abs(r.charnum);
                ASSERT_GE(r.bound_plus + r.bound_minus, magnitude - d);
                if (d == 0) {
                    ASSERT_EQ(r.bound_plus + r.bound_minus, magnitude);
                    ASSERT_EQ(r.bound_total, magnitude);
                }
                ASSERT_GE(r.bound_plus, 0);
                ASSERT_GE(r.bound_minus, 0);
                ASSERT_GE(r.bound_total, 0);
                ASSERT_EQ(d == 0, r.curvature == Curvature::general_type || max_parallel_spinors(2 * m) == 0);
            }
        }
    }
}

TEST(ClosedForm, TableValues)
{
    EXPECT_EQ(cy_hypersurface_bound_closed_form(2), 38);
    EXPECT_EQ(cy_hypersurface_bound_closed_form(12), 40116146);
    EXPECT_EQ(cy_hypersurface_bound_closed_form(30), BigInt("1832624140942555720"));
    EXPECT_THROW(cy_hypersurface_bound_closed_form(3), std::invalid_argument);
    for (const auto& row : testing::kCalabiYauTable) {
        ASSERT_EQ(to_string(cy_hypersurface_bound_closed_form(row.m)), row.rs_bound);
        ASSERT_EQ(to_string(torus_rs_dimension(2 * row.m)), row.torus_rs);
    }
}

TEST(ClosedForm, AgreesWithSeriesBound)
{
    for (int m = 2; m <= 30; m += 2) {
        ASSERT_EQ(rs_lower_bound(CI(m, {m + 2})).bound_total, cy_hypersurface_bound_closed_form(m)) << m;
    }
}

TEST(ProductBound, Examples)
{
    EXPECT_EQ(product_bound(38, 2), 76);
    EXPECT_EQ(product_bound(12345, 0), 12345);
    EXPECT_EQ(product_bound(160, 1), 160);
    EXPECT_EQ(product_bound(38, 3), 76);
}

TEST(FindDegreeExceeding, Examples)
{
    EXPECT_EQ(find_degree_exceeding(2, 100), 6);
    EXPECT_EQ(find_degree_exceeding(2, 1000), 12);
    EXPECT_EQ(find_degree_exceeding(4, 1), 8);
    EXPECT_EQ(find_degree_exceeding(2, 1), 6);
    EXPECT_THROW(find_degree_exceeding(3, 1), std::invalid_argument);
}

TEST(FindDegreeExceeding, IsTheSmallestAdmissibleDegree)
{
    for (int m : {2, 4, 6}) {
        for (const char* threshold : {"1", "100", "1000", "123456", "10000000"}) {
            const BigInt c(threshold);
            const auto a = find_degree_exceeding(m, c);
            ASSERT_EQ(a % 2, 0);
            ASSERT_GT(a, m + 2);
            ASSERT_GT(abs(char_number(CI(m, {a}))), c);
            for (std::int64_t smaller = m + 4; smaller < a; smaller += 2) {
                ASSERT_LE(abs(char_number(CI(m, {smaller}))), c);
            }
            const auto report = rs_lower_bound(CI(m, {a}));
            ASSERT_EQ(report.curvature, Curvature::general_type);
            ASSERT_GT(report.bound_total, c);
        }
    }
}

TEST(ExceedsTorus, Range)
{
    EXPECT_TRUE(exceeds_torus(2));
    EXPECT_TRUE(exceeds_torus(8));
    EXPECT_TRUE(exceeds_torus(30));
    for (int m = 2; m <= 60; m += 2) {
        ASSERT_TRUE(exceeds_torus(m)) << m;
        ASSERT_GT(cy_hypersurface_bound_closed_form(m), BigInt(2 * m - 1) * pow2(static_cast<std::uint64_t>(m)));
    }
    EXPECT_THROW(exceeds_torus(5), std::invalid_argument);
}

}  // namespace
}  // namespace rscount
