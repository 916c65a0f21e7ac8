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

#ifndef MWL_QFACTOR_HPP
#define MWL_QFACTOR_HPP

#include <utility>
#include <vector>

#include "mwl/rational.hpp"

namespace mwl {

using ZVec = std::vector<Integer>;  // low to high

// f in Z[y], primitive, squarefree, positive leading coefficient.
// Irreducible factors over Z, each primitive with positive leading coefficient.
std::vector<ZVec> zassenhaus(const ZVec& f);

// Complete factorization over Q: monic irreducible factors with multiplicities.
std::vector<std::pair<QPoly, int>> factor_rational(const QPoly& f);

bool is_irreducible_rational(const QPoly& f);

// primitive integer multiple with positive leading coefficient
ZVec primitive_integer_part(const QPoly& f);

}  // namespace mwl

#endif
