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

#ifndef MWL_SECTIONS_HPP
#define MWL_SECTIONS_HPP

#include <optional>
#include <string>
#include <vector>

#include "mwl/weierstrass.hpp"

namespace mwl {

// a K(t)-point of the generic fiber, or the zero section
class Section {
   public:
    Section() = default;
    static Section zero(ModelPtr m);
    // checks y^2 = x^3 + a2 x^2 + a4 x + a6
    static Section make(ModelPtr m, RationalFunction x, RationalFunction y);
    static Section make_unchecked(ModelPtr m, RationalFunction x, RationalFunction y);

    bool is_zero() const { return zero_; }
    const RationalFunction& x() const;
    const RationalFunction& y() const;
    const ModelPtr& model() const { return model_; }
    bool is_two_torsion() const { return !zero_ && y_.is_zero(); }

    bool operator==(const Section& o) const;
    bool operator!=(const Section& o) const { return !(*this == o); }
    Section map(const FieldEmbedding& e, ModelPtr target) const;
    std::string to_string() const;

   private:
    ModelPtr model_;
    bool zero_ = true;
    RationalFunction x_, y_;
};

void require_same_model(const ModelPtr& a, const ModelPtr& b);

Section negate(const Section& p);
Section add(const Section& p, const Section& q);
Section sub(const Section& p, const Section& q);
Section smul(long n, const Section& p);
bool on_curve(const WeierstrassModel& m, const RationalFunction& x, const RationalFunction& y);

// sign convention: the leading coefficient of the numerator of y has positive first coordinate
Section canonical_sign(const Section& p);
bool is_plus(const Section& p);

// sections (r(t), 0) with r in K[t]
std::vector<Section> two_torsion(const ModelPtr& m);

// y^2 = branch(t, x) with branch monic of degree 3 in x
struct PencilSetup {
    BiPoly quartic;
    ModelPtr model;
};
PencilSetup pencil_setup(const BiPoly& quartic, std::optional<int> chi = std::nullopt);

// lift of the graph x = c(t): f(t, c(t)) = u h(t)^2
struct GraphLift {
    FieldEmbedding embedding;  // old field -> field containing sqrt(u)
    ModelPtr model;            // the model over the new field
    Section plus, minus;
    FieldElem unit;
    Poly h;
};
GraphLift section_from_graph(const ModelPtr& m, const Poly& c, int degree_cap = field_degree_cap());

}  // namespace mwl

#endif
