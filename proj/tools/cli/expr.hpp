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

#ifndef MWL_CLI_EXPR_HPP
#define MWL_CLI_EXPR_HPP

#include <map>
#include <string>

#include "mwl/bipoly.hpp"
#include "mwl/sections.hpp"

namespace mwl::cli {

// Polynomial expressions in t and x over k: + - * / ^, parentheses, rational
// literals, the generator name of k and sqrt(c) for constants c that are
// squares in k. Division only by nonzero constants.
BiPoly parse_bipoly(const std::string& text, const FieldPtr& k);
// same, but x must not occur
Poly parse_poly(const std::string& text, const FieldPtr& k);
FieldElem parse_constant(const std::string& text, const FieldPtr& k);

// integer combination of named sections, e.g. "2*sL3 - tau1"
Section parse_section_expr(const std::string& text, const std::map<std::string, Section>& named,
                           const ModelPtr& model);

}  // namespace mwl::cli

#endif
