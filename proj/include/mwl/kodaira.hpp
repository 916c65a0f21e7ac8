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

#ifndef MWL_KODAIRA_HPP
#define MWL_KODAIRA_HPP

#include <string>
#include <vector>

#include "mwl/weierstrass.hpp"

namespace mwl {

enum class KodairaFamily { I, IStar, II, III, IV, IVStar, IIIStar, IIStar };

struct KodairaType {
    KodairaFamily family = KodairaFamily::I;
    int n = 0;  // for I_n and I_n^*

    std::string name() const;
    int components() const;  // m_v
    int euler() const;
    bool reducible() const { return components() > 1; }
    std::string component_group() const;
    int component_group_order() const;
    // number of non-identity simple (multiplicity one) components
    int simple_components() const;
    bool operator==(const KodairaType& o) const { return family == o.family && n == o.n; }
};

KodairaType parse_kodaira(const std::string& s);

using IntMatrix = std::vector<std::vector<long>>;
using RatMatrix = std::vector<std::vector<Rational>>;

// intersection matrix of the non-identity components, simple components first
IntMatrix intersection_matrix(const KodairaType& t);
// (-A)^{-1}
RatMatrix contribution_matrix(const KodairaType& t);
long determinant(const IntMatrix& m);
RatMatrix inverse(const RatMatrix& m);

// local data recorded while classifying a fiber
struct ChartData {
    std::string variable;   // "t" or "u"
    Poly pi;                // uniformiser in that variable
    Poly singular_x;        // x residue of the singular point of the reduction, mod pi
    bool additive = false;
    std::vector<std::string> steps;
};

struct FiberData {
    Place place;
    KodairaType type;
    int ord_c4 = 0, ord_c6 = 0, ord_delta = 0;
    int m_v = 1;
    int euler = 0;
    IntMatrix A;
    ChartData chart;
    // number of geometric fibers represented by this place
    int geometric_count() const { return place.degree(); }
};

KodairaType kodaira_from_orders(int ord_c4, int ord_c6, int ord_delta);

// model must be minimal at the place
FiberData classify_place(const WeierstrassModel& m, const Place& v);

class EllipticSurface;
using SurfacePtr = std::shared_ptr<const EllipticSurface>;

// a minimal model with its singular fibers
class EllipticSurface {
   public:
    // checks minimality everywhere and sum of Euler numbers = 12 chi
    static SurfacePtr make(ModelPtr m);

    const ModelPtr& model_ptr() const { return model_; }
    const WeierstrassModel& model() const { return *model_; }
    const InfinityChart& chart() const { return chart_; }
    const FieldPtr& field() const { return model_->field(); }
    int chi() const { return model_->chi(); }
    const std::vector<FiberData>& singular_fibers() const { return fibers_; }
    std::vector<const FiberData*> reducible_fibers() const;
    int euler_total() const;
    // r = rho - 2 - sum(m_v - 1), rho = 10 chi for chi = 1 (rational)
    int rational_rank() const;

   private:
    ModelPtr model_;
    InfinityChart chart_;
    std::vector<FiberData> fibers_;
};

}  // namespace mwl

#endif
