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

#include "mwl/rational_function.hpp"

#include "mwl/error.hpp"

namespace mwl {

RationalFunction::RationalFunction(Poly num) : num_(std::move(num)) {
    den_ = Poly::constant(num_.field(), 1, num_.var());
}

RationalFunction::RationalFunction(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    require_compatible(num_, den_);
    if (den_.is_zero()) fail(ErrorKind::DivisionByZero, "rational function with zero denominator");
    normalize();
}

RationalFunction RationalFunction::unreduced(Poly num, Poly den) {
    require_compatible(num, den);
    if (den.is_zero()) fail(ErrorKind::DivisionByZero, "rational function with zero denominator");
    RationalFunction r;
    r.num_ = std::move(num);
    r.den_ = std::move(den);
    return r;
}

void RationalFunction::normalize() {
    if (num_.is_zero()) {
        den_ = Poly::constant(num_.field(), 1, num_.var());
        return;
    }
    if (den_.degree() > 0) {
        Poly g = gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = num_.exact_div(g);
            den_ = den_.exact_div(g);
        }
    }
    FieldElem l = den_.leading();
    if (!l.is_one()) {
        FieldElem il = l.inverse();
        num_ = num_ * il;
        den_ = den_ * il;
    }
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
    require_compatible(num_, o.num_);
    if (den_ == o.den_) return RationalFunction(num_ + o.num_, den_);
    // only the common part of the denominators can cancel
    Poly g = gcd(den_, o.den_);
    if (g.degree() == 0) return finish(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    Poly b = den_.exact_div(g), d = o.den_.exact_div(g);
    Poly n = num_ * d + o.num_ * b;
    if (n.is_zero()) return RationalFunction(n);
    Poly h = gcd(n, g);
    if (h.degree() > 0) return finish(n.exact_div(h), b * o.den_.exact_div(h));
    return finish(std::move(n), b * o.den_);
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const { return *this + (-o); }

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
    require_compatible(num_, o.num_);
    return cross(num_, den_, o.num_, o.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
    if (o.is_zero()) fail(ErrorKind::DivisionByZero, "division by zero rational function");
    require_compatible(num_, o.num_);
    return cross(num_, den_, o.den_, o.num_);
}

// (a/b)(c/d) with a/b and c/d reduced
RationalFunction RationalFunction::cross(const Poly& a, const Poly& b, const Poly& c, const Poly& d) {
    if (a.is_zero() || c.is_zero()) return RationalFunction(Poly(a.field(), a.var()));
    Poly g1 = gcd(a, d), g2 = gcd(c, b);
    Poly n1 = g1.degree() > 0 ? a.exact_div(g1) : a, d1 = g1.degree() > 0 ? d.exact_div(g1) : d;
    Poly n2 = g2.degree() > 0 ? c.exact_div(g2) : c, b2 = g2.degree() > 0 ? b.exact_div(g2) : b;
    return finish(n1 * n2, b2 * d1);
}

// num/den already coprime: only make den monic
RationalFunction RationalFunction::finish(Poly num, Poly den) {
    RationalFunction r = unreduced(std::move(num), std::move(den));
    if (r.num_.is_zero()) {
        r.den_ = Poly::constant(r.num_.field(), 1, r.num_.var());
        return r;
    }
    FieldElem l = r.den_.leading();
    if (!l.is_one()) {
        FieldElem il = l.inverse();
        r.num_ = r.num_ * il;
        r.den_ = r.den_ * il;
    }
    return r;
}

RationalFunction RationalFunction::operator*(const FieldElem& a) const {
    RationalFunction r = *this;
    r.num_ = r.num_ * a;
    if (r.num_.is_zero()) r.normalize();
    return r;
}

RationalFunction RationalFunction::operator*(const Rational& a) const {
    RationalFunction r = *this;
    r.num_ = r.num_ * a;
    if (r.num_.is_zero()) r.normalize();
    return r;
}

RationalFunction RationalFunction::pow(int e) const {
    if (e < 0) return RationalFunction(Poly::constant(field(), 1, var())) / pow(-e);
    RationalFunction r = *this;
    r.num_ = num_.pow(e);
    r.den_ = den_.pow(e);
    return r;
}

bool RationalFunction::operator==(const RationalFunction& o) const { return num_ == o.num_ && den_ == o.den_; }

int RationalFunction::valuation(const Poly& pi) const {
    if (is_zero()) fail(ErrorKind::ZeroPolynomial, "valuation of zero");
    return mwl::valuation(num_, pi) - mwl::valuation(den_, pi);
}

int RationalFunction::valuation_at_infinity() const {
    if (is_zero()) fail(ErrorKind::ZeroPolynomial, "valuation of zero");
    return den_.degree() - num_.degree();
}

Poly RationalFunction::residue(const Poly& pi) const {
    if (is_zero()) return num_;
    if (valuation(pi) < 0) fail(ErrorKind::Precondition, "residue at a pole");
    return (num_ % pi) * inverse_mod(den_, pi) % pi;
}

RationalFunction RationalFunction::at_reciprocal(int shift, std::string newvar, bool reduce) const {
    // f(1/u) = u^{dD - dN} N*(u)/D*(u)
    int dn = num_.degree(), dd = den_.degree();
    if (is_zero()) return RationalFunction(num_.with_var(newvar));
    Poly N = num_.reversed(dn).with_var(newvar);
    Poly D = den_.reversed(dd).with_var(newvar);
    int e = shift + dd - dn;
    Poly u = Poly::variable(field(), newvar);
    Poly num = e >= 0 ? N * u.pow(e) : N;
    Poly den = e >= 0 ? D : D * u.pow(-e);
    if (!reduce) return unreduced(std::move(num), std::move(den));
    return RationalFunction(std::move(num), std::move(den));
}

RationalFunction RationalFunction::map(const FieldEmbedding& e) const { return RationalFunction(e(num_), e(den_)); }

std::string RationalFunction::to_string() const {
    if (is_polynomial()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace mwl
