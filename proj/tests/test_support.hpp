// Shared helpers for the test suites: seeded random generators for property
// tests and a subprocess runner for CLI tests.

#ifndef RSCOUNT_TESTS_TEST_SUPPORT_HPP
#define RSCOUNT_TESTS_TEST_SUPPORT_HPP

#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "rscount/multipoly.hpp"
#include "rscount/power_series.hpp"
#include "rscount/rational.hpp"

namespace rscount::testing {

inline constexpr int kPropertyCases = 1000;

class Gen {
   public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

    Rational rational()
    {
        // occasionally large numerators to exercise multi-limb arithmetic
        BigInt num = integer(-50, 50);
        if (integer(0, 9) == 0) {
            num *= BigInt("123456789012345678901234567");
        }
        return Rational(num, BigInt(integer(1, 40)));
    }

    Rational nonzero_rational()
    {
        Rational q;
        while (q.is_zero()) {
            q = rational();
        }
        return q;
    }

    MultiPoly poly(std::size_t num_vars, int max_terms = 5, unsigned max_exp = 3)
    {
        std::vector<std::pair<MultiPoly::Exponents, Rational>> terms;
        const long n = integer(0, max_terms);
        for (long t = 0; t < n; ++t) {
            MultiPoly::Exponents e(num_vars);
            for (auto& x : e) {
                x = static_cast<unsigned>(integer(0, max_exp));
            }
            terms.emplace_back(std::move(e), rational());
        }
        return MultiPoly::from_terms(num_vars, terms);
    }

    PowerSeries<Rational> series(std::size_t order)
    {
        std::vector<Rational> c(order + 1);
        for (auto& x : c) {
            x = rational();
        }
        return PowerSeries<Rational>(std::move(c));
    }

    PowerSeries<Rational> unit_series(std::size_t order)
    {
        auto f = series(order);
        std::vector<Rational> c(f.coefficients().begin(), f.coefficients().end());
        c[0] = nonzero_rational();
        return PowerSeries<Rational>(std::move(c));
    }

   private:
    std::mt19937_64 rng_;
};

struct ProcessResult {
    int exit_code;
    std::string out;
    std::string err;
};

inline std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// Runs `binary args` through the shell, capturing stdout and stderr.
inline ProcessResult run_process(const std::string& binary, const std::string& args)
{
    char err_path[] = "/tmp/rscount_stderr_XXXXXX";
    const int fd = mkstemp(err_path);
    if (fd < 0) {
        throw std::runtime_error("mkstemp failed");
    }
    close(fd);
    const std::string cmd = "'" + binary + "' " + args + " 2>" + err_path;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) {
        throw std::runtime_error("popen failed");
    }
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
        out.append(buf.data(), n);
    }
    const int status = pclose(pipe);
    ProcessResult result{WIFEXITED(status) ? WEXITSTATUS(status) : -1, std::move(out), read_file(err_path)};
    std::remove(err_path);
    return result;
}

}  // namespace rscount::testing

#endif  // RSCOUNT_TESTS_TEST_SUPPORT_HPP
