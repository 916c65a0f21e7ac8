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

#ifndef MWL_CLI_VERIFY_HPP
#define MWL_CLI_VERIFY_HPP

#include <string>
#include <vector>

namespace mwl::cli {

struct VerifyResult {
    std::string scenario;
    std::vector<std::string> failures;
    std::vector<std::string> notes;  // informational comparisons, never failures
    int checked = 0;
    bool ok() const { return failures.empty(); }
};

// compares a scenario against <stem>.golden.toml next to it
VerifyResult verify_scenario(const std::string& scenario_path, int jobs = 1);
// every *.toml that is not a golden file, sorted by name
std::vector<std::string> bundled_scenarios(const std::string& dir);

}  // namespace mwl::cli

#endif
