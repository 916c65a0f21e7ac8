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

#include "mwl/weierstrass.hpp"

#include <algorithm>

#include "mwl/error.hpp"

namespace mwl {

Place Place::finite(const Poly& pi) {
    if (pi.degree() < 1) fail(ErrorKind::Precondition, "place needs a non-constant polynomial");
    return Place{Kind::Finite, pi.monic()};
}

Place Place::infinity() { return Place{Kind::Infinity, Poly()}; }

std::string Place::label() const { return is_infinity() ? "inf" : pi.to_string(); }

bool Place::operator==(const Place& o) const {
    if (kind != o.kind) return false;
    return is_infinity() || pi == o.pi;
}

Place Place::map(const FieldEmbedding& e) const {
    if (is_infinity()) return *this;
    return Place{kind, e(pi)};
}

int order_at(const Poly& f, const Poly& pi) { return f.is_zero() ? kInfiniteOrder : valuation(f, pi); }

WeierstrassModel WeierstrassModel::make(Poly a2, Poly a4, Poly a6, int chi) {
    require_compatible(a2, a4);
    require_compatible(a2, a6);
    if (chi < 1) fail(ErrorKind::InvalidModel, "chi must be positive");
    const Poly* as[3] = {&a2, &a4, &a6};
    for (int i = 0; i < 3; ++i) {
        int bound = (i + 1) * 2 * chi;
        if (as[i]->degree() > bound)
            fail(ErrorKind::InvalidModel, "deg a" + std::to_string(2 * i + 2) + " = " +
                                              std::to_string(as[i]->degree()) + " exceeds " + std::to_string(bound));
    }
    WeierstrassModel m;
    m.a2_ = std::move(a2);
    m.a4_ = std::move(a4);
    m.a6_ = std::move(a6);
    m.chi_ = chi;
    if (invariants(m).delta.is_zero()) fail(ErrorKind::SingularModel, "discriminant vanishes identically");
    return m;
}

RationalFunction WeierstrassModel::rhs(const RationalFunction& x) const {
    return ((x + RationalFunction(a2_)) * x + RationalFunction(a4_)) * x + RationalFunction(a6_);
}

Poly WeierstrassModel::rhs(const Poly& x) const { return ((x + a2_) * x + a4_) * x + a6_; }

BiPoly WeierstrassModel::cubic() const {
    const FieldPtr& k = field();
    return BiPoly(k, {a6_.with_var("t"), a4_.with_var("t"), a2_.with_var("t"), Poly::constant(k, 1)});
}

WeierstrassModel WeierstrassModel::map(const FieldEmbedding& e) const {
    WeierstrassModel m;
    m.a2_ = e(a2_);
    m.a4_ = e(a4_);
    m.a6_ = e(a6_);
    m.chi_ = chi_;
    return m;
}

bool WeierstrassModel::operator==(const WeierstrassModel& o) const {
    return same_field(field(), o.field()) && chi_ == o.chi_ && a2_ == o.a2_ && a4_ == o.a4_ && a6_ == o.a6_;
}

std::string WeierstrassModel::to_string() const {
    return "y^2 = x^3 + (" + a2_.to_string() + ")*x^2 + (" + a4_.to_string() + ")*x + (" + a6_.to_string() + ")";
}

ModelInvariants invariants(const WeierstrassModel& m) {
    const Poly &a2 = m.a2(), &a4 = m.a4(), &a6 = m.a6();
    ModelInvariants r;
    r.b2 = a2 * Rational(4);
    r.b4 = a4 * Rational(2);
    r.b6 = a6 * Rational(4);
    r.b8 = a2 * a6 * Rational(4) - a4 * a4;
    Poly a22 = a2 * a2;
    r.c4 = a22 * Rational(16) - a4 * Rational(48);
    r.c6 = a22 * a2 * Rational(-64) + a2 * a4 * Rational(288) - a6 * Rational(864);
    r.delta = (a22 * a4 * a4 - a22 * a2 * a6 * Rational(4) - a4 * a4 * a4 * Rational(4) +
               a2 * a4 * a6 * Rational(18) - a6 * a6 * Rational(27)) *
              Rational(16);
    if (r.delta.is_zero()) {
        r.j = RationalFunction(Poly(m.field(), m.var()));
    } else {
        r.j = RationalFunction(r.c4 * r.c4 * r.c4, r.delta);
    }
    return r;
}

namespace {

bool nonminimal(const WeierstrassModel& m, const Poly& pi) {
    auto inv = invariants(m);
    return order_at(inv.c4, pi) >= 4 && order_at(inv.c6, pi) >= 6;
}

bool divisible_all(const WeierstrassModel& m, const Poly& pi) {
    return order_at(m.a2(), pi) >= 2 && order_at(m.a4(), pi) >= 4 && order_at(m.a6(), pi) >= 6;
}

}  // namespace

bool is_minimal_at(const WeierstrassModel& m, const Place& v) {
    if (v.is_infinity()) {
        auto ch = chart_at_infinity(m);
        return !nonminimal(ch.model, Poly::variable(m.field(), "u"));
    }
    return !nonminimal(m, v.pi);
}

MinimalizeResult minimalize_at(const WeierstrassModel& m, const Place& v) {
    if (v.is_infinity()) fail(ErrorKind::Precondition, "minimalize_at works on finite places; see chart_at_infinity");
    const FieldPtr& k = m.field();
    const std::string& var = m.var();
    Poly pi = v.pi.with_var(var);
    MinimalizeResult res{m, 0, Poly::constant(k, 1, var), Poly(k, var)};
    Poly a2 = m.a2(), a4 = m.a4(), a6 = m.a6();
    WeierstrassModel cur = m;
    while (nonminimal(cur, pi)) {
        Poly r(k, var);
        if (!divisible_all(cur, pi)) {
            r = a2 * Rational(-1, 3);
            Poly na4 = a4 + a2 * r * Rational(2) + r * r * Rational(3);
            Poly na6 = a6 + a4 * r + a2 * r * r + r * r * r;
            a2 = Poly(k, var);
            a4 = na4;
            a6 = na6;
            if (order_at(a4, pi) < 4 || order_at(a6, pi) < 6)
                fail(ErrorKind::InternalInconsistency, "translation did not expose a non-minimal model");
        }
        Poly p2 = pi * pi;
        a2 = a2.exact_div(p2);
        a4 = a4.exact_div(p2 * p2);
        a6 = a6.exact_div(p2 * p2 * p2);
        res.shift = res.shift + res.scale * r;
        res.scale = res.scale * p2;
        ++res.exponent;
        cur = WeierstrassModel::make(a2, a4, a6, m.chi());
    }
    res.model = cur;
    return res;
}

InfinityChart chart_at_infinity(const WeierstrassModel& m) {
    auto ceil_div = [](int a, int b) { return a <= 0 ? 0 : (a + b - 1) / b; };
    int e = 0;
    if (!m.a2().is_zero()) e = std::max(e, ceil_div(m.a2().degree(), 2));
    if (!m.a4().is_zero()) e = std::max(e, ceil_div(m.a4().degree(), 4));
    if (!m.a6().is_zero()) e = std::max(e, ceil_div(m.a6().degree(), 6));
    auto flip = [&](const Poly& a, int w) { return a.is_zero() ? a.with_var("u") : a.reversed(w * e).with_var("u"); };
    InfinityChart ch;
    ch.twist = e;
    ch.model = WeierstrassModel::make(flip(m.a2(), 2), flip(m.a4(), 4), flip(m.a6(), 6), std::max(1, e));
    return ch;
}

}  // namespace mwl
