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

#ifndef MWL_RATIONAL_FUNCTION_HPP
#define MWL_RATIONAL_FUNCTION_HPP

#include <string>

#include "mwl/factor.hpp"
#include "mwl/poly.hpp"

namespace mwl {

// num/den in lowest terms with den monic
class RationalFunction {
   public:
    RationalFunction() = default;
    explicit RationalFunction(Poly num);
    RationalFunction(Poly num, Poly den);
    // no gcd reduction; valuations stay correct, equality does not
    static RationalFunction unreduced(Poly num, Poly den);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    const FieldPtr& field() const { return num_.field(); }
    const std::string& var() const { return num_.var(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    RationalFunction operator+(const RationalFunction& o) const;
    RationalFunction operator-(const RationalFunction& o) const;
    RationalFunction operator-() const;
    RationalFunction operator*(const RationalFunction& o) const;
    RationalFunction operator/(const RationalFunction& o) const;
    RationalFunction operator*(const FieldElem& a) const;
    RationalFunction operator*(const Rational& a) const;
    RationalFunction pow(int e) const;
    bool operator==(const RationalFunction& o) const;
    bool operator!=(const RationalFunction& o) const { return !(*this == o); }

    // order of vanishing at an irreducible pi (negative for poles)
    int valuation(const Poly& pi) const;
    // deg den - deg num
    int valuation_at_infinity() const;
    // value modulo pi as a reduced polynomial, requires valuation >= 0
    Poly residue(const Poly& pi) const;
    // u^shift * f(1/u) in the variable newvar
    RationalFunction at_reciprocal(int shift, std::string newvar, bool reduce = true) const;
    RationalFunction map(const FieldEmbedding& e) const;

    std::string to_string() const;

   private:
    void normalize();
    static RationalFunction cross(const Poly& a, const Poly& b, const Poly& c, const Poly& d);
    static RationalFunction finish(Poly num, Poly den);
    Poly num_, den_;
};

}  // namespace mwl

#endif
