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

#ifndef MWL_FACTOR_HPP
#define MWL_FACTOR_HPP

#include <optional>
#include <utility>
#include <vector>

#include "mwl/poly.hpp"

namespace mwl {

struct Factorization {
    FieldElem unit;
    std::vector<std::pair<Poly, int>> factors;  // monic irreducible, sorted
    Poly expand() const;
};

// complete factorization over the coefficient field
Factorization factor(const Poly& f);
bool is_irreducible(const Poly& f);
// roots in the coefficient field, sorted by FieldElem::compare
std::vector<FieldElem> roots(const Poly& f);
// N_{K/Q}(f) as a polynomial over Q
QPoly norm_poly(const Poly& f);

std::optional<FieldElem> field_sqrt(const FieldElem& u);

// f = unit * h^2 with h monic, when all multiplicities are even
struct PolySquareRoot {
    Poly h;
    FieldElem unit;
};
std::optional<PolySquareRoot> poly_square_root(const Poly& f);

// K -> L determined by the image of the generator of K
struct FieldEmbedding {
    FieldPtr source;
    FieldPtr target;
    FieldElem image;

    static FieldEmbedding identity(const FieldPtr& k);
    bool is_identity() const { return same_field(source, target); }
    FieldElem operator()(const FieldElem& a) const;
    Poly operator()(const Poly& p) const;
    // apply this, then next
    FieldEmbedding then(const FieldEmbedding& next) const;
};

struct SqrtExtension {
    FieldEmbedding embedding;
    FieldElem root;  // in the target field, root^2 = embedding(u)
};

// degree cap from MWL_FIELD_DEGREE_CAP, default 8
int field_degree_cap();

// K(sqrt(u)); if u is already a square the embedding is the identity
SqrtExtension adjoin_sqrt(const FieldElem& u, int degree_cap = field_degree_cap());

}  // namespace mwl

#endif
