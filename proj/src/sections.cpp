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

#include "mwl/sections.hpp"

#include "mwl/error.hpp"

namespace mwl {

void require_same_model(const ModelPtr& a, const ModelPtr& b) {
    if (!a || !b) fail(ErrorKind::ModelMismatch, "section without a model");
    if (a != b && !(*a == *b)) fail(ErrorKind::ModelMismatch, "sections live on different models");
}

Section Section::zero(ModelPtr m) {
    Section s;
    s.model_ = std::move(m);
    return s;
}

bool on_curve(const WeierstrassModel& m, const RationalFunction& x, const RationalFunction& y) {
    return y * y == m.rhs(x);
}

Section Section::make_unchecked(ModelPtr m, RationalFunction x, RationalFunction y) {
    Section s;
    s.model_ = std::move(m);
    s.zero_ = false;
    s.x_ = std::move(x);
    s.y_ = std::move(y);
    if (s.x_.var() != s.model_->var() || s.y_.var() != s.model_->var())
        fail(ErrorKind::VariableMismatch, "section coordinates must be in " + s.model_->var());
    return s;
}

Section Section::make(ModelPtr m, RationalFunction x, RationalFunction y) {
    require_same_field(m->field(), x.field());
    require_same_field(m->field(), y.field());
    if (!on_curve(*m, x, y)) fail(ErrorKind::InvalidInput, "point (" + x.to_string() + ", " + y.to_string() + ") is not on the curve");
    return make_unchecked(std::move(m), std::move(x), std::move(y));
}

const RationalFunction& Section::x() const {
    if (zero_) fail(ErrorKind::Precondition, "zero section has no affine coordinates");
    return x_;
}

const RationalFunction& Section::y() const {
    if (zero_) fail(ErrorKind::Precondition, "zero section has no affine coordinates");
    return y_;
}

bool Section::operator==(const Section& o) const {
    require_same_model(model_, o.model_);
    if (zero_ || o.zero_) return zero_ == o.zero_;
    return x_ == o.x_ && y_ == o.y_;
}

Section Section::map(const FieldEmbedding& e, ModelPtr target) const {
    if (zero_) return zero(std::move(target));
    return make_unchecked(std::move(target), x_.map(e), y_.map(e));
}

std::string Section::to_string() const {
    if (zero_) return "O";
    return "(" + x_.to_string() + ", " + y_.to_string() + ")";
}

Section negate(const Section& p) {
    if (p.is_zero()) return p;
    return Section::make_unchecked(p.model(), p.x(), -p.y());
}

Section add(const Section& p, const Section& q) {
    require_same_model(p.model(), q.model());
    if (p.is_zero()) return q;
    if (q.is_zero()) return p;
    const WeierstrassModel& m = *p.model();
    const RationalFunction &x1 = p.x(), &y1 = p.y(), &x2 = q.x(), &y2 = q.y();
    RationalFunction lambda;
    if (x1 == x2) {
        if (y1 == -y2) return Section::zero(p.model());
        RationalFunction a2(m.a2()), a4(m.a4());
        lambda = (x1 * x1 * Rational(3) + a2 * x1 * Rational(2) + a4) / (y1 * Rational(2));
    } else {
        lambda = (y2 - y1) / (x2 - x1);
    }
    RationalFunction x3 = lambda * lambda - RationalFunction(m.a2()) - x1 - x2;
    RationalFunction y3 = -(y1 + lambda * (x3 - x1));
    return Section::make_unchecked(p.model(), std::move(x3), std::move(y3));
}

Section sub(const Section& p, const Section& q) { return add(p, negate(q)); }

Section smul(long n, const Section& p) {
    if (n < 0) return smul(-n, negate(p));
    Section r = Section::zero(p.model()), b = p;
    while (n) {
        if (n & 1) r = add(r, b);
        n >>= 1;
        if (n) b = add(b, b);
    }
    return r;
}

bool is_plus(const Section& p) {
    if (p.is_zero() || p.y().is_zero()) return true;
    return p.y().num().leading().sign() > 0;
}

Section canonical_sign(const Section& p) { return is_plus(p) ? p : negate(p); }

std::vector<Section> two_torsion(const ModelPtr& mp) {
    const WeierstrassModel& m = *mp;
    const FieldPtr& k = m.field();
    auto inv = invariants(m);
    // pick t0 where the cubic in x is separable
    FieldElem t0(k);
    for (long i = 0;; ++i) {
        t0 = FieldElem(k, Rational(i));
        if (!inv.delta.eval(t0).is_zero()) break;
    }
    int prec = 2 * m.chi() + 1;
    Poly a2s = m.a2().shift(t0), a4s = m.a4().shift(t0), a6s = m.a6().shift(t0);
    auto cubic_at = [&](const Poly& r) { return ((r + a2s) * r + a4s) * r + a6s; };
    std::vector<FieldElem> c0{a6s.coeff(0), a4s.coeff(0), a2s.coeff(0), FieldElem(k, Rational(1))};
    std::vector<Section> out;
    for (auto& r0 : roots(Poly(k, c0, "x"))) {
        FieldElem deriv = r0 * r0 * Rational(3) + a2s.coeff(0) * r0 * Rational(2) + a4s.coeff(0);
        FieldElem dinv = deriv.inverse();
        std::vector<FieldElem> rc{r0};
        for (int j = 1; j <= prec; ++j) {
            Poly r(k, rc, m.var());
            FieldElem cj = cubic_at(r).coeff(j);
            rc.push_back(-cj * dinv);
        }
        Poly r = Poly(k, rc, m.var()).shift(-t0);
        if (!m.rhs(r).is_zero()) continue;
        out.push_back(Section::make_unchecked(mp, RationalFunction(r), RationalFunction(Poly(k, m.var()))));
    }
    return out;
}

PencilSetup pencil_setup(const BiPoly& quartic, std::optional<int> chi) {
    if (quartic.deg_x() != 3) fail(ErrorKind::WrongPencilShape, "branch curve must have degree 3 in x");
    Poly lead = quartic.coeff_x(3);
    if (lead.degree() != 0 || !lead.leading().is_one())
        fail(ErrorKind::WrongPencilShape, "coefficient of x^3 must be 1");
    Poly a2 = quartic.coeff_x(2), a4 = quartic.coeff_x(1), a6 = quartic.coeff_x(0);
    int c = 1;
    if (chi) {
        c = *chi;
    } else {
        auto need = [](const Poly& a, int w) { return a.is_zero() ? 0 : (a.degree() + w - 1) / w; };
        c = std::max({1, need(a2, 2), need(a4, 4), need(a6, 6)});
    }
    auto m = std::make_shared<WeierstrassModel>(WeierstrassModel::make(a2, a4, a6, c));
    return PencilSetup{quartic, m};
}

GraphLift section_from_graph(const ModelPtr& m, const Poly& c_in, int degree_cap) {
    const FieldPtr& k = m->field();
    Poly c = c_in.with_var(m->var());
    require_same_field(k, c.field());
    Poly g = m->rhs(c);
    if (g.is_zero()) {
        Section s = Section::make_unchecked(m, RationalFunction(c), RationalFunction(Poly(k, m->var())));
        return GraphLift{FieldEmbedding::identity(k), m, s, s, FieldElem(k), Poly(k, m->var())};
    }
    auto sq = poly_square_root(g);
    if (!sq) fail(ErrorKind::Precondition, "x = " + c.to_string() + " does not meet the branch curve with even multiplicities");
    auto ext = adjoin_sqrt(sq->unit, degree_cap);
    ModelPtr m2 = m;
    if (!ext.embedding.is_identity()) m2 = std::make_shared<WeierstrassModel>(m->map(ext.embedding));
    Poly h = ext.embedding(sq->h);
    RationalFunction x(ext.embedding(c)), y(h * ext.root);
    Section s = canonical_sign(Section::make(m2, x, y));
    return GraphLift{ext.embedding, m2, s, negate(s), sq->unit, sq->h};
}

}  // namespace mwl
