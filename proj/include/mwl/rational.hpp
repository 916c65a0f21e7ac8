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

#ifndef MWL_RATIONAL_HPP
#define MWL_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace mwl {

using Rational = mpq_class;
using Integer = mpz_class;

// "n" or "n/d", canonical
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);
Rational parse_rational(std::string_view s);

// dense polynomial over Q, c[i] is the coefficient of y^i, no trailing zeros
class QPoly {
   public:
    QPoly() = default;
    explicit QPoly(std::vector<Rational> c);
    static QPoly constant(const Rational& a);
    static QPoly monomial(const Rational& a, int k);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(int i) const;
    const Rational& leading() const;

    QPoly operator+(const QPoly& o) const;
    QPoly operator-(const QPoly& o) const;
    QPoly operator-() const;
    QPoly operator*(const QPoly& o) const;
    QPoly operator*(const Rational& a) const;
    bool operator==(const QPoly& o) const { return c_ == o.c_; }
    bool operator!=(const QPoly& o) const { return !(*this == o); }

    void divmod(const QPoly& d, QPoly& q, QPoly& r) const;
    QPoly operator/(const QPoly& d) const;
    QPoly operator%(const QPoly& d) const;

    QPoly monic() const;
    QPoly derivative() const;
    Rational eval(const Rational& x) const;
    std::string to_string(const std::string& var = "t") const;

   private:
    void trim();
    std::vector<Rational> c_;
};

QPoly gcd(QPoly a, QPoly b);
// returns g = s*a + t*b with g monic
QPoly xgcd(const QPoly& a, const QPoly& b, QPoly& s, QPoly& t);
// Yun; factors are monic, unit separated
std::vector<std::pair<QPoly, int>> squarefree_decompose(const QPoly& f);
// Newton interpolation through (xs[i], ys[i])
QPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);
Rational determinant(std::vector<std::vector<Rational>> m);

}  // namespace mwl

#endif
