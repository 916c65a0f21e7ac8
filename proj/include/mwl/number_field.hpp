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

#ifndef MWL_NUMBER_FIELD_HPP
#define MWL_NUMBER_FIELD_HPP

#include <memory>
#include <string>
#include <vector>

#include "mwl/rational.hpp"

namespace mwl {

class NumberField;
using FieldPtr = std::shared_ptr<const NumberField>;

// K = Q[a]/(m(a)), m monic irreducible. Degree 1 is Q itself.
class NumberField {
   public:
    static FieldPtr rationals();
    // modulus low to high, will be made monic; irreducibility is checked
    static FieldPtr make(const QPoly& modulus, std::string generator_name, bool check_irreducible = true);

    int degree() const { return modulus_.degree(); }
    bool is_rationals() const { return degree() == 1; }
    const QPoly& modulus() const { return modulus_; }
    const std::string& generator_name() const { return gen_; }
    std::string describe() const;

    bool same_as(const NumberField& o) const;

    // reduce coefficients (any length) modulo m into a length-degree vector
    std::vector<Rational> reduce(const std::vector<Rational>& c) const;

   private:
    NumberField(QPoly m, std::string gen);
    QPoly modulus_;
    std::string gen_;
    // table_[k] = a^(n+k) in the power basis
    std::vector<std::vector<Rational>> table_;
};

bool same_field(const FieldPtr& a, const FieldPtr& b);
void require_same_field(const FieldPtr& a, const FieldPtr& b);

class FieldElem {
   public:
    FieldElem() = default;  // unusable placeholder
    explicit FieldElem(FieldPtr k);
    FieldElem(FieldPtr k, const Rational& a);
    FieldElem(FieldPtr k, const std::vector<Rational>& coeffs);
    static FieldElem generator(FieldPtr k);

    const FieldPtr& field() const { return k_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;
    Rational rational_value() const;

    FieldElem operator+(const FieldElem& o) const;
    FieldElem operator-(const FieldElem& o) const;
    FieldElem operator-() const;
    FieldElem operator*(const FieldElem& o) const;
    FieldElem operator*(const Rational& a) const;
    FieldElem operator/(const FieldElem& o) const;
    FieldElem& operator+=(const FieldElem& o);
    FieldElem& operator-=(const FieldElem& o);
    FieldElem& operator*=(const FieldElem& o);
    FieldElem inverse() const;
    FieldElem pow(long e) const;

    bool operator==(const FieldElem& o) const;
    bool operator!=(const FieldElem& o) const { return !(*this == o); }
    // lexicographic on the coordinate vector, coordinate 0 first
    int compare(const FieldElem& o) const;
    // sign of the first nonzero coordinate
    int sign() const;

    Rational norm() const;
    QPoly as_qpoly() const { return QPoly(c_); }
    std::string to_string() const;

   private:
    FieldPtr k_;
    std::vector<Rational> c_;
};

}  // namespace mwl

#endif
