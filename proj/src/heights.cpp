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

#include "mwl/heights.hpp"

#include <algorithm>

#include "mwl/error.hpp"

namespace mwl {

namespace {

struct Localized {
    RationalFunction x, y;
    const WeierstrassModel* model;
    Poly pi;
};

Localized localize(const EllipticSurface& s, const Section& p, const FiberData& f) {
    if (f.place.is_infinity()) {
        int e = s.chart().twist;
        return Localized{p.x().at_reciprocal(2 * e, "u", false), p.y().at_reciprocal(3 * e, "u", false),
                         &s.chart().model, f.chart.pi};
    }
    return Localized{p.x(), p.y(), &s.model(), f.chart.pi};
}

// reduced form, needed for residues
RationalFunction reduced(const RationalFunction& f) { return RationalFunction(f.num(), f.den()); }

int val(const RationalFunction& f, const Poly& pi) { return f.is_zero() ? kInfiniteOrder : f.valuation(pi); }

bool poly_lex_le(const Poly& a, const Poly& b) {
    int n = std::max(a.degree(), b.degree());
    for (int i = 0; i <= n; ++i) {
        int c = a.coeff(i).compare(b.coeff(i));
        if (c != 0) return c < 0;
    }
    return true;
}

Rational valuation_contribution(const FiberData& f, const LocalData& d) {
    if (f.type.family == KodairaFamily::I) {
        int n = f.type.n;
        Rational i = std::min(Rational(d.v_psi2), Rational(n, 2));
        return i * (n - i) / n;
    }
    if (d.v_psi3 >= 3 * d.v_psi2) return Rational(2 * d.v_psi2, 3);
    Rational r(d.v_psi3, 4);
    r.canonicalize();
    return r;
}

}  // namespace

LocalData local_data(const EllipticSurface& s, const Section& p, const FiberData& f) {
    if (p.is_zero()) fail(ErrorKind::Precondition, "local data of the zero section");
    Localized L = localize(s, p, f);
    const WeierstrassModel& m = *L.model;
    const Poly& pi = L.pi;
    LocalData d;
    d.v_x = val(L.x, pi);
    if (d.v_x < 0) return d;
    // work with x = N/D at polynomial level
    const Poly &N = L.x.num(), &D = L.x.den();
    int vD = valuation(D, pi);
    d.v_psi2 = val(L.y, pi);
    if (d.v_psi2 == 0) return d;
    // only low pi-adic digits matter: work mod pi^cap, redo in full if the cap is reached
    int cap = 3 * std::min(d.v_psi2, 4 * f.ord_delta) + 4 * vD + 4 * f.ord_delta + 8;
    auto orders = [&](const Poly* M) {
        auto mul = [&](const Poly& a, const Poly& b) { return M ? (a * b) % *M : a * b; };
        Poly Nm = M ? N % *M : N, Dm = M ? D % *M : D;
        Poly N2 = mul(Nm, Nm), D2 = mul(Dm, Dm), ND = mul(Nm, Dm);
        Poly fx = N2 * Rational(3) + mul(m.a2(), ND) * Rational(2) + mul(m.a4(), D2);
        auto inv = invariants(m);
        Poly psi3 = mul(N2, N2) * Rational(3) + mul(inv.b2, mul(N2, ND)) + mul(inv.b4, mul(N2, D2)) * Rational(3) +
                    mul(inv.b6, mul(ND, D2)) * Rational(3) + mul(inv.b8, mul(D2, D2));
        if (M) psi3 = psi3 % *M;
        return std::make_pair(order_at(fx, pi), order_at(psi3, pi));
    };
    Poly M = pi.pow(cap);
    auto [vf, v3] = orders(&M);
    if (vf >= cap || v3 >= cap) std::tie(vf, v3) = orders(nullptr);
    d.through_singular_point = vf - 2 * vD > 0;
    if (!d.through_singular_point) return d;
    d.v_psi3 = v3 >= kInfiniteOrder ? kInfiniteOrder : v3 - 4 * vD;
    return d;
}

ComponentHit component_at(const EllipticSurface& s, const Section& p, const FiberData& f) {
    ComponentHit hit{f.place, f.type.name(), 0, f.geometric_count(), Rational(0), true};
    if (p.is_zero()) return hit;
    LocalData d = local_data(s, p, f);
    if (d.v_x < 0 || !d.through_singular_point) return hit;
    if (!f.type.reducible() || f.type.simple_components() == 0)
        fail(ErrorKind::InternalInconsistency, "section meets the singular point of a fiber of type " + f.type.name());
    Localized L = localize(s, p, f);
    const Poly& pi = L.pi;
    Rational vc = valuation_contribution(f, d);
    int idx = 0;
    switch (f.type.family) {
        case KodairaFamily::I: {
            int n = f.type.n;
            if (n % 2 == 1 && d.v_psi2 > (n - 1) / 2 && d.v_psi2 < kInfiniteOrder)
                fail(ErrorKind::InternalInconsistency, "ord y too large at a fiber of type " + f.type.name());
            idx = std::min(d.v_psi2, n / 2);
            hit.canonical = (2 * idx == n);
            break;
        }
        case KodairaFamily::III:
        case KodairaFamily::IIIStar: idx = 1; break;
        case KodairaFamily::IV:
        case KodairaFamily::IVStar: {
            int w = f.type.family == KodairaFamily::IV ? 1 : 2;
            RationalFunction yy = reduced(L.y) / RationalFunction(pi.pow(w));
            Poly r = yy.residue(pi);
            idx = poly_lex_le(r, -r) ? 1 : 2;
            break;
        }
        case KodairaFamily::IStar: {
            if (vc == 1 && f.type.n > 0) {
                idx = 1;
                break;
            }
            if (f.type.n > 0) {
                idx = 2;
                hit.canonical = false;
                break;
            }
            // I0*: residue of (x - r)/pi among the roots of the residual cubic
            if (pi.degree() != 1) {
                idx = 1;
                hit.canonical = false;
                break;
            }
            const WeierstrassModel& m = *L.model;
            Poly r = m.a2() * Rational(-1, 3);
            auto inv = invariants(m);
            Poly A = inv.c4 * Rational(-1, 48), B = inv.c6 * Rational(-1, 864);
            FieldElem t0 = -pi.coeff(0);
            Poly p2 = pi * pi;
            FieldElem a = A.exact_div(p2).eval(t0), b = B.exact_div(p2 * pi).eval(t0);
            const FieldPtr& k = m.field();
            Poly cubic(k, {b, a, FieldElem(k), FieldElem(k, Rational(1))}, "X");
            FieldElem X = ((reduced(L.x) - RationalFunction(r)) / RationalFunction(pi)).residue(pi).coeff(0);
            auto rs = roots(cubic);
            idx = 0;
            for (size_t i = 0; i < rs.size(); ++i)
                if (rs[i] == X) idx = static_cast<int>(i) + 1;
            if (idx == 0) fail(ErrorKind::InternalInconsistency, "I0* residue is not a root of the residual cubic");
            hit.canonical = rs.size() == 3;
            break;
        }
        default: fail(ErrorKind::InternalInconsistency, "unexpected fiber type " + f.type.name());
    }
    hit.component = idx;
    RatMatrix C = contribution_matrix(f.type);
    hit.contribution = C[idx - 1][idx - 1];
    if (hit.contribution != vc)
        fail(ErrorKind::InternalInconsistency, "component contribution " + to_string(hit.contribution) +
                                                   " disagrees with local valuation value " + to_string(vc) + " at " +
                                                   f.place.label());
    return hit;
}

Integer intersection_with_zero(const EllipticSurface& s, const Section& p) {
    if (p.is_zero()) fail(ErrorKind::Precondition, "(O . O) is not a section-zero intersection");
    const Poly& den = p.x().den();
    if (den.degree() % 2) fail(ErrorKind::InternalInconsistency, "denominator of x has odd degree");
    Integer total = den.degree() / 2;
    int e = s.chart().twist;
    int vinf = 2 * e + den.degree() - p.x().num().degree();
    if (p.x().is_zero()) vinf = kInfiniteOrder;
    if (vinf < 0) {
        if (vinf % 2) fail(ErrorKind::InternalInconsistency, "odd pole order at infinity");
        total += -vinf / 2;
    }
    return total;
}

HeightReport height_report(const EllipticSurface& s, const Section& p) {
    require_same_model(s.model_ptr(), p.model());
    HeightReport r;
    if (p.is_zero()) {
        r.sO = 0;
        r.height = 0;
        r.correction = 0;
        return r;
    }
    r.sO = intersection_with_zero(s, p);
    r.correction = 0;
    for (const FiberData* f : s.reducible_fibers()) {
        ComponentHit h = component_at(s, p, *f);
        if (h.component == 0) continue;
        r.correction += h.contribution * h.geometric_count;
        r.hits.push_back(std::move(h));
    }
    r.height = Rational(2 * s.chi()) + Rational(2 * r.sO) - r.correction;
    return r;
}

Rational height(const EllipticSurface& s, const Section& p) { return height_report(s, p).height; }

Rational pairing(const EllipticSurface& s, const Section& p, const Section& q) {
    Rational h = height(s, add(p, q)) - height(s, p) - height(s, q);
    return h / 2;
}

RatMatrix gram(const EllipticSurface& s, const std::vector<Section>& ps) {
    size_t n = ps.size();
    std::vector<Rational> h(n);
    for (size_t i = 0; i < n; ++i) h[i] = height(s, ps[i]);
    RatMatrix g(n, std::vector<Rational>(n));
    for (size_t i = 0; i < n; ++i) {
        g[i][i] = h[i];
        for (size_t j = i + 1; j < n; ++j) {
            Rational v = (height(s, add(ps[i], ps[j])) - h[i] - h[j]) / 2;
            g[i][j] = g[j][i] = v;
        }
    }
    return g;
}

ShiodaPhi shioda_phi(const EllipticSurface& s, const Section& p) {
    if (p.is_zero()) fail(ErrorKind::Precondition, "phi of the zero section");
    HeightReport r = height_report(s, p);
    ShiodaPhi phi;
    phi.fiber = -(Rational(r.sO) + s.chi());
    for (auto& h : r.hits) {
        const FiberData* fd = nullptr;
        for (auto& f : s.singular_fibers())
            if (f.place == h.place) fd = &f;
        RatMatrix C = contribution_matrix(fd->type);
        for (size_t j = 0; j < C.size(); ++j) {
            Rational c = C[j][h.component - 1];
            if (c != 0) phi.theta.push_back(PhiTerm{h.place, static_cast<int>(j) + 1, h.geometric_count, c});
        }
    }
    return phi;
}

Rational formal_minus_self_intersection(const EllipticSurface& s, const Section& p, const ShiodaPhi& phi) {
    HeightReport r = height_report(s, p);
    Rational chi = s.chi();
    Rational sO = r.sO;
    // basis P, O, F, Theta with P^2 = O^2 = -chi, PF = OF = 1, F^2 = 0
    Rational a = phi.section, b = phi.zero_section, c = phi.fiber;
    Rational total = a * a * (-chi) + b * b * (-chi) + 2 * a * b * sO + 2 * a * c + 2 * b * c;
    for (auto& t : phi.theta) {
        // P . Theta
        for (auto& h : r.hits)
            if (h.place == t.place && h.component == t.component) total += 2 * a * t.coefficient * t.geometric_count;
        for (auto& u : phi.theta) {
            if (!(u.place == t.place)) continue;
            const FiberData* fd = nullptr;
            for (auto& f : s.singular_fibers())
                if (f.place == t.place) fd = &f;
            total += t.coefficient * u.coefficient * fd->A[t.component - 1][u.component - 1] * t.geometric_count;
        }
    }
    return -total;
}

std::optional<int> torsion_order(const EllipticSurface& s, const Section& p) {
    if (p.is_zero()) return 1;
    if (height(s, p) != 0) return std::nullopt;
    Section q = p;
    for (int n = 1; n <= 12; ++n) {
        if (q.is_zero()) return n;
        q = add(q, p);
    }
    fail(ErrorKind::InternalInconsistency, "height zero section of order above 12");
}

}  // namespace mwl
