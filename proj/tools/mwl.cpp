/*
   Copyright 2026 The mwl authors

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

// mwl: command-line front end for the elliptic surface library

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "cli/commands.hpp"
#include "cli/parallel.hpp"
#include "cli/verify.hpp"
#include "mwl/error.hpp"

#ifndef MWL_SCENARIO_DIR
#define MWL_SCENARIO_DIR "scenarios"
#endif

using namespace mwl;
using namespace mwl::cli;

namespace {

int emit(const Output& out, const std::string& format, const std::string& path) {
    std::string body = format == "json" ? dump(out.json) : out.text;
    if (path.empty()) {
        std::cout << body;
        return 0;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) fail(ErrorKind::InvalidInput, "cannot write " + path);
    f << body;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Mordell-Weil lattices of elliptic surfaces and dihedral cover certificates"};
    app.require_subcommand(1);
    std::string scenario, out, format = "text";
    Options opts;
    long prime = 0;

    auto add_common = [&](CLI::App* sub, bool need_scenario) {
        auto* o = sub->add_option("--scenario", scenario, "scenario TOML file");
        if (need_scenario) o->required()->check(CLI::ExistingFile);
        sub->add_option("--jobs", opts.jobs, "parallel queries")->check(CLI::PositiveNumber);
        sub->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--out", out, "write the output here instead of stdout");
    };

    auto* fibers = app.add_subcommand("fibers", "singular fibers and the Euler sum");
    add_common(fibers, true);
    auto* height = app.add_subcommand("height", "heights, Gram matrix and presentation check");
    add_common(height, true);
    height->add_option("--section", opts.sections, "sections to use instead of queries.height");
    auto* dup = app.add_subcommand("dup", "duplication [2]s and tangent conics");
    add_common(dup, true);
    dup->add_option("--section", opts.sections, "sections to use instead of queries.dup");
    auto* divide = app.add_subcommand("divide", "cover multipliers for p");
    add_common(divide, true);
    divide->add_option("--section", opts.sections, "one section tuple instead of queries.divide");
    auto* p_opt = divide->add_option("--prime", prime, "an odd prime");
    auto* all_opt = divide->add_flag("--all-primes", opts.all_primes, "decide every odd prime at once");
    p_opt->excludes(all_opt);
    auto* certify = app.add_subcommand("certify-pair", "certificate for the declared pair");
    add_common(certify, true);
    auto* verify = app.add_subcommand("verify-examples", "replay bundled scenarios against golden files");
    add_common(verify, false);
    std::string dir = MWL_SCENARIO_DIR;
    verify->add_option("dir", dir, "scenario directory");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*verify) {
            std::vector<std::string> files = scenario.empty() ? bundled_scenarios(dir) : std::vector<std::string>{scenario};
            bool all_ok = true;
            Json summary = Json::array();
            std::ostringstream os;
            auto results = parallel_map(files.size(), opts.jobs, [&](size_t i) { return verify_scenario(files[i], 1); });
            for (auto& r : results) {
                all_ok = all_ok && r.ok();
                os << (r.ok() ? "PASS " : "FAIL ") << r.scenario << " (" << r.checked << " checks)\n";
                for (auto& x : r.failures) os << "  mismatch " << r.scenario << ": " << x << "\n";
                for (auto& x : r.notes) os << "  note " << r.scenario << ": " << x << "\n";
                summary.push_back(Json{{"scenario", r.scenario}, {"ok", r.ok()}, {"checked", r.checked}, {"failures", r.failures}, {"notes", r.notes}});
            }
            emit(Output{Json{{"results", summary}, {"ok", all_ok}}, os.str()}, format, out);
            return all_ok ? 0 : 1;
        }
        if (prime != 0) {
            if (prime < 3 || !is_prime(prime)) fail(ErrorKind::InvalidInput, "--prime must be an odd prime");
            opts.prime = prime;
        }
        Session s(load_scenario(scenario));
        if (*fibers) return emit(cmd_fibers(s), format, out);
        if (*height) return emit(cmd_height(s, opts), format, out);
        if (*dup) return emit(cmd_dup(s, opts), format, out);
        if (*divide) return emit(cmd_divide(s, opts), format, out);
        if (*certify) {
            // certificates are JSON whatever --format says, the summary goes to stderr
            Output o = cmd_certify_pair(s, opts);
            if (out.empty()) {
                std::cout << dump(o.json);
            } else {
                emit(o, "json", out);
            }
            std::cerr << o.text;
            return certified(o.json) ? 0 : 1;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code(e.kind());
    }
    return 0;
}
