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

#ifndef MWL_HEIGHTS_HPP
#define MWL_HEIGHTS_HPP

#include <optional>
#include <string>
#include <vector>

#include "mwl/kodaira.hpp"
#include "mwl/sections.hpp"

namespace mwl {

struct ComponentHit {
    Place place;
    std::string fiber_type;
    int component = 0;  // 0 is the identity component
    int geometric_count = 1;
    Rational contribution;  // per geometric fiber
    // false when the index is a representative up to a symmetry of the fiber
    bool canonical = true;
};

// local numbers of a section at a fiber, in the chart of that fiber
struct LocalData {
    int v_x = 0;
    int v_psi2 = 0;
    int v_psi3 = 0;
    bool through_singular_point = false;
};

LocalData local_data(const EllipticSurface& s, const Section& p, const FiberData& f);
ComponentHit component_at(const EllipticSurface& s, const Section& p, const FiberData& f);

// (P . O), summed over geometric places
Integer intersection_with_zero(const EllipticSurface& s, const Section& p);

struct HeightReport {
    Integer sO;
    std::vector<ComponentHit> hits;  // non-identity components only
    Rational correction;             // sum of contributions with multiplicity
    Rational height;
};

HeightReport height_report(const EllipticSurface& s, const Section& p);
Rational height(const EllipticSurface& s, const Section& p);
Rational pairing(const EllipticSurface& s, const Section& p, const Section& q);
RatMatrix gram(const EllipticSurface& s, const std::vector<Section>& ps);

// phi(P) = P - O - (sO + chi) F + sum theta coefficients
struct PhiTerm {
    Place place;
    int component = 0;
    int geometric_count = 1;
    Rational coefficient;
};
struct ShiodaPhi {
    Rational section = 1;
    Rational zero_section = -1;
    Rational fiber;
    std::vector<PhiTerm> theta;
};
ShiodaPhi shioda_phi(const EllipticSurface& s, const Section& p);
// -phi.phi evaluated with the intersection numbers of the surface
Rational formal_minus_self_intersection(const EllipticSurface& s, const Section& p, const ShiodaPhi& phi);

// least n <= 12 with [n]P = O
std::optional<int> torsion_order(const EllipticSurface& s, const Section& p);

}  // namespace mwl

#endif
