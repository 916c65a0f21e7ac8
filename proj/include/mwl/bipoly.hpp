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

#ifndef MWL_BIPOLY_HPP
#define MWL_BIPOLY_HPP

#include <optional>
#include <string>
#include <vector>

#include "mwl/factor.hpp"
#include "mwl/rational_function.hpp"

namespace mwl {

enum class Variable { T, X };

// polynomial in (t, x): sum over i of c_i(t) x^i
class BiPoly {
   public:
    BiPoly() = default;
    explicit BiPoly(FieldPtr k);
    BiPoly(FieldPtr k, std::vector<Poly> cx);
    static BiPoly constant(const FieldElem& a);
    static BiPoly from_t(const Poly& p);
    static BiPoly var_t(FieldPtr k);
    static BiPoly var_x(FieldPtr k);

    const FieldPtr& field() const { return k_; }
    int deg_x() const { return static_cast<int>(c_.size()) - 1; }
    int deg_t() const;
    int total_degree() const;
    bool is_zero() const { return c_.empty(); }
    const std::vector<Poly>& coeffs_x() const { return c_; }
    Poly coeff_x(int i) const;
    FieldElem coeff(int i_t, int j_x) const;

    BiPoly operator+(const BiPoly& o) const;
    BiPoly operator-(const BiPoly& o) const;
    BiPoly operator-() const;
    BiPoly operator*(const BiPoly& o) const;
    BiPoly operator*(const FieldElem& a) const;
    BiPoly pow(int e) const;
    bool operator==(const BiPoly& o) const;

    // substitute x = c(t)
    Poly eval_x(const Poly& c) const;
    RationalFunction eval_x(const RationalFunction& c) const;
    // specialise t = t0, result is a polynomial in x
    Poly at_t(const FieldElem& t0) const;
    BiPoly swapped() const;
    // homogeneous part of top total degree, coefficient of t^i x^(d-i) at index i
    std::vector<FieldElem> top_form() const;
    // x - c(t) up to a constant factor
    std::optional<Poly> graph_function() const;
    BiPoly map(const FieldEmbedding& e) const;
    std::string to_string() const;

   private:
    void trim();
    FieldPtr k_;
    std::vector<Poly> c_;
};

// Res_x or Res_t; the result is a polynomial in the remaining variable
Poly resultant(const BiPoly& f, const BiPoly& g, Variable eliminate);

}  // namespace mwl

#endif
