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

// rscount: characteristic numbers of complete intersections and
// Rarita-Schwinger lower bounds.
//
// Exit codes: 0 success, 1 usage error, 2 theorem not applicable to the
// input, 3 a verification check failed.

#include <cstdint>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "commands.hpp"
#include "output_document.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInapplicable = 2;
constexpr int kExitVerifyFailed = 3;

}  // namespace

int main(int argc, char** argv)
{
    using namespace rscount;
    using namespace rscount::cli;

    CLI::App app{"Characteristic numbers of complete intersections and Rarita-Schwinger field bounds", "rscount"};
    app.require_subcommand(1);

    Format format = Format::json;
    bool quiet = false;
    bool meta = false;
    const std::map<std::string, Format> formats{{"json", Format::json}, {"csv", Format::csv}, {"markdown", Format::markdown}};
    app.add_option("--format", format, "Output format")->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    app.add_flag("--quiet", quiet, "Suppress normal output");
    app.add_flag("--meta", meta, "Attach tool provenance to JSON output");

    int complex_dim = 0;
    std::vector<std::int64_t> degrees;
    std::int64_t torus_dim = 0;
    std::string threshold;
    std::string name;
    VerifyParams verify_params;
    std::optional<std::int64_t> max_n;
    std::optional<std::int64_t> max_m;

    auto add_ci_flags = [&](CLI::App* sub) {
        sub->add_option("--complex-dim,-m", complex_dim, "Complex dimension m")->required()->check(CLI::PositiveNumber);
        sub->add_option("--degrees,-d", degrees, "Degrees a_1..a_r")
            ->required()
            ->delimiter(',')
            ->check(CLI::PositiveNumber);
    };

    auto* compute = app.add_subcommand("compute", "Characteristic number and RS lower bounds of a complete intersection");
    add_ci_flags(compute);

    auto* product = app.add_subcommand("product", "Bound for the product with a flat torus T^k");
    add_ci_flags(product);
    product->add_option("--torus-dim,-k", torus_dim, "Torus dimension k")->required()->check(CLI::NonNegativeNumber);

    auto* search = app.add_subcommand("search", "Smallest even hypersurface degree with |charnum| > threshold");
    search->add_option("--complex-dim,-m", complex_dim, "Even complex dimension m")->required()->check(CLI::PositiveNumber);
    search->add_option("--threshold,-C", threshold, "Positive integer C")->required();

    auto* table = app.add_subcommand("table", "Parallel-spinor or Calabi-Yau table");
    table->add_option("name", name, "parallel-spinors | calabi-yau")
        ->required()
        ->check(CLI::IsMember({"parallel-spinors", "calabi-yau"}));
    auto* max_n_opt = table->add_option("--max-n", max_n, "Largest n (parallel-spinors)");
    auto* max_m_opt = table->add_option("--max-m", max_m, "Largest even m (calabi-yau)");

    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("suite", name, "hypersurface-poly | symmetric-poly | closed-form | torus-inequality")
        ->required()
        ->check(CLI::IsMember({"hypersurface-poly", "symmetric-poly", "closed-form", "torus-inequality"}));
    verify->add_option("--m", verify_params.m, "Complex dimension");
    verify->add_option("--r", verify_params.r, "Codimension");
    verify->add_option("--max-m", verify_params.max_m, "Largest even m");

    for (auto* sub : {compute, product, search, table, verify}) {
        sub->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n\n" << app.help();
        return kExitUsage;
    }

    OutputDocument doc;
    int exit_code = kExitOk;
    try {
        if (*compute) {
            doc = cmd_compute(complex_dim, degrees);
        } else if (*product) {
            doc = cmd_product(complex_dim, degrees, torus_dim);
        } else if (*search) {
            BigInt c;
            try {
                c = parse_big_int(threshold);
            } catch (const std::invalid_argument& e) {
                throw UsageError(std::string("--threshold: ") + e.what());
            }
            doc = cmd_search(complex_dim, c);
        } else if (*table) {
            if (name == "parallel-spinors") {
                if (*max_m_opt) {
                    throw UsageError("--max-m does not apply to the parallel-spinors table");
                }
                doc = cmd_table(name, max_n.value_or(28));
            } else {
                if (*max_n_opt) {
                    throw UsageError("--max-n does not apply to the calabi-yau table");
                }
                doc = cmd_table(name, max_m.value_or(30));
            }
        } else if (*verify) {
            auto outcome = cmd_verify(name, verify_params);
            doc = std::move(outcome.doc);
            if (!outcome.passed) {
                std::cerr << "verification failed\n";
                exit_code = kExitVerifyFailed;
            }
        }
    } catch (const TheoremInapplicable& e) {
        std::cerr << e.what() << '\n';
        return kExitInapplicable;
    } catch (const std::invalid_argument& e) {
        // UsageError and invalid manifold descriptions
        std::cerr << "error: " << e.what() << "\n\n" << app.help();
        return kExitUsage;
    }

    if (!quiet) {
        const nlohmann::ordered_json provenance{{"tool", "rscount"}, {"version", RSCOUNT_VERSION}};
        std::cout << render(doc, format, meta ? &provenance : nullptr);
    }
    return exit_code;
}
