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

#include "mwl/poly.hpp"

#include <sstream>

#include "mwl/error.hpp"

namespace mwl {

Poly::Poly(FieldPtr k, std::string var) : k_(std::move(k)), var_(std::move(var)) {}

Poly::Poly(FieldPtr k, std::vector<FieldElem> coeffs, std::string var)
    : k_(std::move(k)), var_(std::move(var)), c_(std::move(coeffs)) {
    for (auto& a : c_) require_same_field(k_, a.field());
    trim();
}

Poly Poly::constant(const FieldElem& a, std::string var) {
    return Poly(a.field(), std::vector<FieldElem>{a}, std::move(var));
}

Poly Poly::constant(FieldPtr k, const Rational& a, std::string var) {
    FieldElem e(k, a);
    return Poly(k, std::vector<FieldElem>{e}, std::move(var));
}

Poly Poly::variable(FieldPtr k, std::string var) {
    std::vector<FieldElem> c{FieldElem(k), FieldElem(k, Rational(1))};
    return Poly(k, std::move(c), std::move(var));
}

Poly Poly::from_rational(FieldPtr k, const QPoly& q, std::string var) {
    std::vector<FieldElem> c;
    for (auto& a : q.coeffs()) c.emplace_back(k, a);
    return Poly(k, std::move(c), std::move(var));
}

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

FieldElem Poly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return FieldElem(k_);
    return c_[i];
}

const FieldElem& Poly::leading() const {
    if (c_.empty()) fail(ErrorKind::ZeroPolynomial, "leading coefficient of zero polynomial");
    return c_.back();
}

void require_compatible(const Poly& a, const Poly& b) {
    require_same_field(a.field(), b.field());
    if (a.var() != b.var()) fail(ErrorKind::VariableMismatch, a.var() + " vs " + b.var());
}

Poly Poly::operator+(const Poly& o) const {
    require_compatible(*this, o);
    std::vector<FieldElem> r;
    size_t n = std::max(c_.size(), o.c_.size());
    r.reserve(n);
    for (size_t i = 0; i < n; ++i) {
        if (i < c_.size() && i < o.c_.size()) r.push_back(c_[i] + o.c_[i]);
        else if (i < c_.size()) r.push_back(c_[i]);
        else r.push_back(o.c_[i]);
    }
    return Poly(k_, std::move(r), var_);
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& a : r.c_) a = -a;
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    require_compatible(*this, o);
    if (is_zero() || o.is_zero()) return Poly(k_, var_);
    std::vector<FieldElem> r(c_.size() + o.c_.size() - 1, FieldElem(k_));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (size_t j = 0; j < o.c_.size(); ++j)
            if (!o.c_[j].is_zero()) r[i + j] += c_[i] * o.c_[j];
    }
    return Poly(k_, std::move(r), var_);
}

Poly Poly::operator*(const FieldElem& a) const {
    require_same_field(k_, a.field());
    if (a.is_zero()) return Poly(k_, var_);
    Poly r = *this;
    for (auto& x : r.c_) x = x * a;
    return r;
}

Poly Poly::operator*(const Rational& a) const {
    if (a == 0) return Poly(k_, var_);
    Poly r = *this;
    for (auto& x : r.c_) x = x * a;
    return r;
}

bool Poly::operator==(const Poly& o) const {
    require_same_field(k_, o.k_);
    if (c_.size() != o.c_.size()) return false;
    for (size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != o.c_[i]) return false;
    return true;
}

void Poly::divmod(const Poly& d, Poly& q, Poly& r) const {
    require_compatible(*this, d);
    if (d.is_zero()) fail(ErrorKind::DivisionByZero, "polynomial division by zero");
    std::vector<FieldElem> rem = c_;
    int dd = d.degree(), n = degree();
    std::vector<FieldElem> quo(n >= dd ? n - dd + 1 : 0, FieldElem(k_));
    FieldElem inv = d.leading().inverse();
    for (int k = n; k >= dd; --k) {
        if (rem[k].is_zero()) continue;
        FieldElem f = rem[k] * inv;
        quo[k - dd] = f;
        for (int j = 0; j <= dd; ++j)
            if (!d.c_[j].is_zero()) rem[k - dd + j] -= f * d.c_[j];
    }
    q = Poly(k_, std::move(quo), var_);
    r = Poly(k_, std::move(rem), var_);
}

Poly Poly::operator/(const Poly& d) const {
    Poly q, r;
    divmod(d, q, r);
    return q;
}

Poly Poly::operator%(const Poly& d) const {
    Poly q, r;
    divmod(d, q, r);
    return r;
}

Poly Poly::exact_div(const Poly& d) const {
    Poly q, r;
    divmod(d, q, r);
    if (!r.is_zero()) fail(ErrorKind::InternalInconsistency, "inexact polynomial division");
    return q;
}

bool Poly::divides(const Poly& f) const { return (f % *this).is_zero(); }

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return *this * leading().inverse();
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly(k_, var_);
    std::vector<FieldElem> r;
    for (size_t i = 1; i < c_.size(); ++i) r.push_back(c_[i] * Rational(static_cast<long>(i)));
    return Poly(k_, std::move(r), var_);
}

Poly Poly::pow(int e) const {
    Poly r = Poly::constant(k_, 1, var_), b = *this;
    while (e > 0) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

FieldElem Poly::eval(const FieldElem& x) const {
    FieldElem acc(k_);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

Poly Poly::compose(const Poly& g) const {
    Poly acc(k_, g.var());
    for (size_t i = c_.size(); i-- > 0;) acc = acc * g + Poly::constant(c_[i], g.var());
    return acc;
}

Poly Poly::shift(const FieldElem& c) const {
    std::vector<FieldElem> lin{c, FieldElem(k_, Rational(1))};
    return compose(Poly(k_, std::move(lin), var_));
}

Poly Poly::reversed(int deg) const {
    if (degree() > deg) fail(ErrorKind::Precondition, "reversal degree too small");
    std::vector<FieldElem> r(deg + 1, FieldElem(k_));
    for (size_t i = 0; i < c_.size(); ++i) r[deg - i] = c_[i];
    return Poly(k_, std::move(r), var_);
}

Poly Poly::with_var(std::string v) const {
    Poly r = *this;
    r.var_ = std::move(v);
    return r;
}

bool Poly::is_rational() const {
    for (auto& a : c_)
        if (!a.is_rational()) return false;
    return true;
}

QPoly Poly::to_rational() const {
    std::vector<Rational> r;
    for (auto& a : c_) r.push_back(a.rational_value());
    return QPoly(std::move(r));
}

std::string Poly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const FieldElem& a = c_[i];
        if (a.is_zero()) continue;
        bool rat = a.is_rational();
        Rational q = rat ? a.rational_value() : Rational(0);
        if (rat) {
            Rational m = abs(q);
            if (!first) os << (q < 0 ? " - " : " + ");
            else if (q < 0) os << "-";
            if (i == 0 || m != 1) {
                os << mwl::to_string(m);
                if (i > 0) os << "*";
            }
        } else {
            if (!first) os << " + ";
            os << a.to_string();
            if (i > 0) os << "*";
        }
        first = false;
        if (i >= 1) os << var_;
        if (i >= 2) os << "^" << i;
    }
    return os.str();
}

Poly gcd(Poly a, Poly b) {
    require_compatible(a, b);
    if (a.degree() > 0 && b.degree() > 0)
        if (auto g = modular_gcd(a, b)) return *g;
    return euclid_gcd(std::move(a), std::move(b));
}

Poly euclid_gcd(Poly a, Poly b) {
    require_compatible(a, b);
    if (a.degree() < b.degree()) std::swap(a, b);
    if (b.is_zero()) return a.is_zero() ? a : a.monic();
    b = b.monic();
    while (!b.is_zero()) {
        if (b.degree() == 0) return Poly::constant(a.field(), 1, a.var());
        Poly r = a % b;
        a = std::move(b);
        b = r.is_zero() ? std::move(r) : r.monic();
    }
    return a;
}

Poly xgcd(const Poly& a, const Poly& b, Poly& s, Poly& t) {
    require_compatible(a, b);
    const FieldPtr& k = a.field();
    const std::string& v = a.var();
    Poly r0 = a, r1 = b;
    Poly s0 = Poly::constant(k, 1, v), s1(k, v), t0(k, v), t1 = Poly::constant(k, 1, v);
    while (!r1.is_zero()) {
        Poly q, r;
        r0.divmod(r1, q, r);
        Poly s2 = s0 - q * s1, t2 = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) {
        s = Poly(k, v);
        t = Poly(k, v);
        return r0;
    }
    FieldElem inv = r0.leading().inverse();
    s = s0 * inv;
    t = t0 * inv;
    return r0 * inv;
}

std::vector<std::pair<Poly, int>> squarefree_decompose(const Poly& f) {
    std::vector<std::pair<Poly, int>> out;
    if (f.is_zero()) fail(ErrorKind::ZeroPolynomial, "squarefree decomposition of zero");
    if (f.degree() <= 0) return out;
    Poly fm = f.monic();
    Poly d = fm.derivative();
    Poly a = gcd(fm, d);
    Poly b = fm.exact_div(a);
    Poly c = d.exact_div(a);
    Poly e = c - b.derivative();
    int i = 1;
    while (b.degree() > 0) {
        Poly g = gcd(b, e);
        if (g.degree() > 0) out.emplace_back(g, i);
        b = b.exact_div(g);
        c = e.exact_div(g);
        e = c - b.derivative();
        ++i;
    }
    return out;
}

int valuation(const Poly& f, const Poly& pi) {
    if (f.is_zero()) fail(ErrorKind::ZeroPolynomial, "valuation of zero");
    if (pi.degree() < 1) fail(ErrorKind::Precondition, "valuation at a constant");
    int v = 0;
    Poly g = f;
    for (;;) {
        Poly q, r;
        g.divmod(pi, q, r);
        if (!r.is_zero()) return v;
        g = std::move(q);
        ++v;
    }
}

Poly inverse_mod(const Poly& a, const Poly& m) {
    Poly s, t;
    Poly g = xgcd(a % m, m, s, t);
    if (g.degree() != 0) fail(ErrorKind::DivisionByZero, "not invertible modulo " + m.to_string());
    return s % m;
}

Poly interpolate(FieldPtr k, const std::vector<FieldElem>& xs, const std::vector<FieldElem>& ys, std::string var) {
    size_t n = xs.size();
    std::vector<FieldElem> dd = ys;
    for (size_t j = 1; j < n; ++j)
        for (size_t i = n - 1; i >= j; --i) {
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
            if (i == j) break;
        }
    Poly r(k, var);
    for (size_t kk = n; kk-- > 0;) {
        std::vector<FieldElem> lin{-xs[kk], FieldElem(k, Rational(1))};
        r = r * Poly(k, std::move(lin), var) + Poly::constant(dd[kk], var);
    }
    return r;
}

FieldElem resultant(const Poly& f, const Poly& g) {
    require_compatible(f, g);
    const FieldPtr& k = f.field();
    if (f.is_zero() || g.is_zero()) return FieldElem(k);
    Poly a = f, b = g;
    FieldElem acc(k, Rational(1));
    for (;;) {
        int m = a.degree(), n = b.degree();
        if (n == 0) return acc * b.leading().pow(m);
        if (m == 0) return acc * a.leading().pow(n);
        Poly r = a % b;
        if (r.is_zero()) return FieldElem(k);
        // Res(a,b) = (-1)^{mn} lc(b)^{m - deg r} Res(b, r)
        if ((m * n) % 2) acc = -acc;
        acc = acc * b.leading().pow(m - r.degree());
        a = std::move(b);
        b = std::move(r);
    }
}

}  // namespace mwl
