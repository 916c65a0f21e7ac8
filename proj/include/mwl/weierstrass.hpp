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

#ifndef MWL_WEIERSTRASS_HPP
#define MWL_WEIERSTRASS_HPP

#include <memory>
#include <string>

#include "mwl/bipoly.hpp"
#include "mwl/rational_function.hpp"

namespace mwl {

// a place of K(t): monic irreducible pi, or the place at infinity
struct Place {
    enum class Kind { Finite, Infinity };
    Kind kind = Kind::Infinity;
    Poly pi;

    static Place finite(const Poly& pi);
    static Place infinity();
    bool is_infinity() const { return kind == Kind::Infinity; }
    int degree() const { return is_infinity() ? 1 : pi.degree(); }
    std::string label() const;
    bool operator==(const Place& o) const;
    Place map(const FieldEmbedding& e) const;
};

// y^2 = x^3 + a2 x^2 + a4 x + a6 over K[var]
class WeierstrassModel {
   public:
    WeierstrassModel() = default;
    // checks deg a_i <= 2 i chi and Delta != 0
    static WeierstrassModel make(Poly a2, Poly a4, Poly a6, int chi = 1);

    const FieldPtr& field() const { return a2_.field(); }
    const Poly& a2() const { return a2_; }
    const Poly& a4() const { return a4_; }
    const Poly& a6() const { return a6_; }
    int chi() const { return chi_; }
    const std::string& var() const { return a2_.var(); }

    // x^3 + a2 x^2 + a4 x + a6 evaluated at x
    RationalFunction rhs(const RationalFunction& x) const;
    Poly rhs(const Poly& x) const;
    BiPoly cubic() const;
    WeierstrassModel map(const FieldEmbedding& e) const;
    bool operator==(const WeierstrassModel& o) const;
    std::string to_string() const;

   private:
    Poly a2_, a4_, a6_;
    int chi_ = 1;
};

using ModelPtr = std::shared_ptr<const WeierstrassModel>;

struct ModelInvariants {
    Poly b2, b4, b6, b8, c4, c6, delta;
    RationalFunction j;
};

ModelInvariants invariants(const WeierstrassModel& m);

// x_old = pi^(2e) x_new + shift, y_old = pi^(3e) y_new
struct MinimalizeResult {
    WeierstrassModel model;
    int exponent = 0;
    Poly scale;  // pi^(2e)
    Poly shift;
};

bool is_minimal_at(const WeierstrassModel& m, const Place& v);
MinimalizeResult minimalize_at(const WeierstrassModel& m, const Place& v);

// model in the variable u = 1/t: a_i'(u) = u^(2 i e) a_i(1/u)
struct InfinityChart {
    WeierstrassModel model;
    int twist = 0;
};

InfinityChart chart_at_infinity(const WeierstrassModel& m);

// order of vanishing, a large sentinel for the zero polynomial
constexpr int kInfiniteOrder = 1 << 20;
int order_at(const Poly& f, const Poly& pi);

}  // namespace mwl

#endif
