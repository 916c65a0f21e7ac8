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

#ifndef MWL_CLI_COMMANDS_HPP
#define MWL_CLI_COMMANDS_HPP

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "mwl/error.hpp"
#include "scenario.hpp"

namespace mwl::cli {

using Json = nlohmann::json;

inline constexpr const char* kToolVersion = "0.1.0";

struct Options {
    int jobs = 1;
    std::optional<long> prime;
    bool all_primes = false;
    std::vector<std::string> sections;  // overrides the scenario's query list
};

struct Output {
    Json json;
    std::string text;
};

Output cmd_fibers(const Session& s);
Output cmd_height(const Session& s, const Options& o);
Output cmd_dup(const Session& s, const Options& o);
Output cmd_divide(const Session& s, const Options& o);
Output cmd_certify_pair(const Session& s, const Options& o);

Json certify_pair(const Session& s, const PairSpec& pair, int jobs);
bool certified(const Json& certificate);

// canonical serialization: sorted keys, two-space indent, trailing newline
std::string dump(const Json& j);
std::string sha256_hex(const std::string& bytes);

// process exit code for an error kind
int exit_code(ErrorKind k);

}  // namespace mwl::cli

#endif
