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

#ifndef MWL_POLY_HPP
#define MWL_POLY_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mwl/number_field.hpp"

namespace mwl {

// univariate polynomial over a number field
class Poly {
   public:
    static constexpr int kZeroDegree = -1;

    Poly() = default;  // placeholder
    explicit Poly(FieldPtr k, std::string var = "t");
    Poly(FieldPtr k, std::vector<FieldElem> coeffs, std::string var = "t");
    static Poly constant(const FieldElem& a, std::string var = "t");
    static Poly constant(FieldPtr k, const Rational& a, std::string var = "t");
    static Poly variable(FieldPtr k, std::string var = "t");
    static Poly from_rational(FieldPtr k, const QPoly& q, std::string var = "t");

    const FieldPtr& field() const { return k_; }
    const std::string& var() const { return var_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    const std::vector<FieldElem>& coeffs() const { return c_; }
    FieldElem coeff(int i) const;
    const FieldElem& leading() const;
    FieldElem zero_elem() const { return FieldElem(k_); }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const FieldElem& a) const;
    Poly operator*(const Rational& a) const;
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    void divmod(const Poly& d, Poly& q, Poly& r) const;
    Poly operator/(const Poly& d) const;  // quotient
    Poly operator%(const Poly& d) const;
    // exact division, throws InternalInconsistency otherwise
    Poly exact_div(const Poly& d) const;
    bool divides(const Poly& f) const;

    Poly monic() const;
    Poly derivative() const;
    Poly pow(int e) const;
    FieldElem eval(const FieldElem& x) const;
    Poly compose(const Poly& g) const;
    // f(t + c)
    Poly shift(const FieldElem& c) const;
    // t^deg * f(1/t) padded to the given degree
    Poly reversed(int deg) const;
    Poly with_var(std::string v) const;

    bool is_rational() const;
    QPoly to_rational() const;

    std::string to_string() const;

   private:
    void trim();
    FieldPtr k_;
    std::string var_ = "t";
    std::vector<FieldElem> c_;
};

void require_compatible(const Poly& a, const Poly& b);

// monic gcd; multimodular with exact verification, falling back to euclid_gcd
Poly gcd(Poly a, Poly b);
Poly euclid_gcd(Poly a, Poly b);
// empty when no usable primes were found
std::optional<Poly> modular_gcd(const Poly& a, const Poly& b);
Poly xgcd(const Poly& a, const Poly& b, Poly& s, Poly& t);
std::vector<std::pair<Poly, int>> squarefree_decompose(const Poly& f);
// valuation at an irreducible polynomial pi; f must be nonzero
int valuation(const Poly& f, const Poly& pi);
// inverse of a modulo m (gcd must be 1)
Poly inverse_mod(const Poly& a, const Poly& m);
Poly interpolate(FieldPtr k, const std::vector<FieldElem>& xs, const std::vector<FieldElem>& ys,
                 std::string var = "t");
// univariate resultant, Sylvester convention Res(f,g) = lc(f)^deg g * prod g(roots of f)
FieldElem resultant(const Poly& f, const Poly& g);

}  // namespace mwl

#endif
