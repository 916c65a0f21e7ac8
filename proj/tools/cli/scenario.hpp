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

#ifndef MWL_CLI_SCENARIO_HPP
#define MWL_CLI_SCENARIO_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mwl/arrangements.hpp"
#include "mwl/divisibility.hpp"

namespace mwl::cli {

struct SectionSpec {
    std::string name;
    // exactly one of these
    std::string graph;          // a curve x - c(t) from [curves]
    std::string expr;           // integer combination of earlier sections
    std::string two_torsion_x;  // (r(t), 0)
    std::string sign = "plus";
};

struct PairSpec {
    std::vector<std::string> arrangement1, arrangement2;
    std::vector<std::string> sections1, sections2;
    std::vector<long> primes;
};

struct Scenario {
    std::string name, description;
    std::string path;
    std::string bytes;  // raw file contents, hashed into certificates

    std::vector<Rational> minimal_polynomial;  // low degree first; empty for Q
    std::string generator = "a";
    std::vector<std::pair<std::string, std::string>> curves;
    std::vector<std::string> branch;
    std::optional<int> chi;
    std::vector<SectionSpec> sections;

    bool has_presentation = false;
    std::vector<std::string> basis;
    std::vector<std::pair<std::string, int>> torsion;
    std::string lattice_label;

    std::vector<std::string> height, dup, conics;
    std::vector<std::vector<std::string>> divide;
    std::vector<long> primes;

    std::optional<PairSpec> pair;
};

Scenario parse_scenario(const std::string& text, const std::string& path = "<string>");
Scenario load_scenario(const std::string& path);

// the surface with every declared section, over the field they need
class Session {
   public:
    explicit Session(Scenario sc);

    const Scenario& scenario() const { return sc_; }
    const FieldPtr& base_field() const { return base_; }
    const FieldPtr& field() const { return model_->field(); }
    const FieldEmbedding& embedding() const { return emb_; }
    const ModelPtr& model() const { return model_; }
    const EllipticSurface& surface() const { return *surface_; }
    const std::map<std::string, Section>& sections() const { return sections_; }
    const Section& section(const std::string& name) const;
    std::vector<Section> sections(const std::vector<std::string>& names) const;
    bool has_presentation() const { return presentation_.has_value(); }
    const MWPresentation& presentation() const;

    // curve over the working field
    PlaneCurve curve(const std::string& name) const;
    PlaneCurve branch() const;
    bool is_branch_component(const std::string& name) const;
    BiPoly base_curve(const std::string& name) const;

   private:
    void adopt(const GraphLift& lift);

    Scenario sc_;
    FieldPtr base_;
    FieldEmbedding emb_;
    ModelPtr model_;
    SurfacePtr surface_;
    std::map<std::string, BiPoly> curves_;
    std::map<std::string, Section> sections_;
    std::optional<MWPresentation> presentation_;
};

}  // namespace mwl::cli

#endif
