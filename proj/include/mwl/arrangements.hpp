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

#ifndef MWL_ARRANGEMENTS_HPP
#define MWL_ARRANGEMENTS_HPP

#include <optional>
#include <string>
#include <vector>

#include "mwl/bipoly.hpp"
#include "mwl/heights.hpp"

namespace mwl {

// affine chart (t, x) = (T/Z, X/Z); z_o = [0, 1, 0]; pencil lines t = const
struct PlaneCurve {
    std::string label;
    BiPoly f;
    int degree = 0;
    // checks f nonzero and squarefree
    static PlaneCurve make(std::string label, BiPoly f);
    bool passes_through_zo() const;
    PlaneCurve map(const FieldEmbedding& e) const;
};

// an irreducible zero-dimensional locus: t-factor pi with x = x0(t) mod pi, or z_o
struct PointClass {
    bool at_zo = false;
    Poly pi;  // monic irreducible in t
    Poly x0;  // degree < deg pi
    int geometric_count() const { return at_zo ? 1 : pi.degree(); }
    std::string key() const;
    std::string label() const;
};

struct Intersection {
    PointClass point;
    int multiplicity = 0;  // at each geometric point of the class
};

std::vector<Intersection> intersection_multiplicities(const PlaneCurve& c, const PlaneCurve& d);
bool all_even_tangency(const PlaneCurve& c, const PlaneCurve& branch);

struct PointEntry {
    PointClass point;
    std::vector<size_t> curves;                           // indices through the point
    std::vector<std::tuple<size_t, size_t, int>> pairs;   // (i, j, I_p)
};

struct ArrangementSummary {
    std::vector<std::string> labels;
    std::vector<int> degrees;
    std::vector<PointEntry> points;
};

ArrangementSummary summarize(const std::vector<PlaneCurve>& curves);
// degrees and per-point branch profiles agree
bool same_combinatorics(const ArrangementSummary& a, const ArrangementSummary& b);

struct TangentConic {
    std::optional<PlaneCurve> conic;
    std::string error;  // set when the section fails the preconditions
};

// x = x([2] s) for each s of height 1/2 with ([2]s . O) = 0
std::vector<TangentConic> tangent_conics_through(const EllipticSurface& s, const PlaneCurve& branch,
                                                 const std::vector<Section>& line_sections);

}  // namespace mwl

#endif
