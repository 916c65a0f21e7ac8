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

#include "mwl/arrangements.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "mwl/error.hpp"

namespace mwl {

namespace {

BiPoly derivative_x(const BiPoly& f) {
    std::vector<Poly> c;
    for (int i = 1; i <= f.deg_x(); ++i) c.push_back(f.coeff_x(i) * Rational(i));
    return BiPoly(f.field(), c);
}

Poly content_t(const BiPoly& f) {
    Poly g(f.field());
    for (auto& c : f.coeffs_x()) g = gcd(g, c);
    return g;
}

// F_d(1, l): its roots are the points [1 : l : 0]
Poly infinite_points(const BiPoly& f) {
    auto top = f.top_form();
    int d = static_cast<int>(top.size()) - 1;
    std::vector<FieldElem> c(d + 1, FieldElem(f.field()));
    for (int i = 0; i <= d; ++i) c[d - i] = top[i];
    return Poly(f.field(), c, "l");
}

// (K[t]/pi)[x], coefficients reduced mod pi
struct Residue {
    Poly pi;
    using LPoly = std::vector<Poly>;

    void trim(LPoly& a) const {
        while (!a.empty() && a.back().is_zero()) a.pop_back();
    }
    LPoly from(const BiPoly& f) const {
        LPoly r;
        for (auto& c : f.coeffs_x()) r.push_back(c % pi);
        trim(r);
        return r;
    }
    LPoly monic(LPoly a) const {
        Poly il = inverse_mod(a.back(), pi);
        for (auto& c : a) c = (c * il) % pi;
        return a;
    }
    LPoly rem(LPoly a, const LPoly& b) const {
        Poly il = inverse_mod(b.back(), pi);
        trim(a);
        while (a.size() >= b.size()) {
            Poly f = (a.back() * il) % pi;
            size_t s = a.size() - b.size();
            for (size_t j = 0; j < b.size(); ++j) a[s + j] = (a[s + j] - f * b[j]) % pi;
            trim(a);
        }
        return a;
    }
    LPoly gcd(LPoly a, LPoly b) const {
        trim(a);
        trim(b);
        while (!b.empty()) {
            LPoly r = rem(a, b);
            a = std::move(b);
            b = std::move(r);
        }
        return a.empty() ? a : monic(a);
    }
    LPoly derivative(const LPoly& a) const {
        LPoly r;
        for (size_t i = 1; i < a.size(); ++i) r.push_back((a[i] * Rational(static_cast<long>(i))) % pi);
        trim(r);
        return r;
    }
};

void check_common_components(const PlaneCurve& c, const PlaneCurve& d) {
    if (gcd(content_t(c.f), content_t(d.f)).degree() > 0)
        fail(ErrorKind::CommonComponent, c.label + " and " + d.label + " share a component t = const");
}

// no common points at infinity besides z_o, no escape to z_o along a pencil line
void check_infinity(const PlaneCurve& c, const PlaneCurve& d) {
    if (gcd(infinite_points(c.f), infinite_points(d.f)).degree() > 0)
        fail(ErrorKind::Unsupported, c.label + " and " + d.label + " meet at infinity away from z_o");
    if (gcd(c.f.coeff_x(c.f.deg_x()), d.f.coeff_x(d.f.deg_x())).degree() > 0)
        fail(ErrorKind::Unsupported,
             c.label + " and " + d.label + " both have vertical asymptotes on one pencil line");
}

}  // namespace

PlaneCurve PlaneCurve::make(std::string label, BiPoly f) {
    if (f.is_zero()) fail(ErrorKind::InvalidInput, "curve " + label + " has zero equation");
    if (f.total_degree() == 0) fail(ErrorKind::InvalidInput, "curve " + label + " is a constant");
    Poly c = content_t(f);
    if (c.degree() > 0) {
        auto sf = squarefree_decompose(c);
        for (auto& [p, e] : sf)
            if (e > 1 && p.degree() > 0) fail(ErrorKind::InvalidInput, "curve " + label + " is not squarefree");
    }
    if (f.deg_x() > 0) {
        std::vector<Poly> prim;
        for (auto& a : f.coeffs_x()) prim.push_back(a.exact_div(c));
        BiPoly p(f.field(), prim);
        if (p.deg_x() > 1 && resultant(p, derivative_x(p), Variable::X).is_zero())
            fail(ErrorKind::InvalidInput, "curve " + label + " is not squarefree");
    }
    PlaneCurve out;
    out.label = std::move(label);
    out.degree = f.total_degree();
    out.f = std::move(f);
    return out;
}

bool PlaneCurve::passes_through_zo() const { return f.top_form()[0].is_zero(); }

PlaneCurve PlaneCurve::map(const FieldEmbedding& e) const {
    PlaneCurve r = *this;
    r.f = f.map(e);
    return r;
}

std::string PointClass::key() const { return at_zo ? "z_o" : pi.to_string() + "|" + x0.to_string(); }

std::string PointClass::label() const {
    if (at_zo) return "z_o";
    if (pi.degree() == 1) return "(" + (-pi.coeff(0)).to_string() + ", " + x0.coeff(0).to_string() + ")";
    return "{" + pi.to_string() + " = 0, x = " + x0.to_string() + "}";
}

std::vector<Intersection> intersection_multiplicities(const PlaneCurve& c, const PlaneCurve& d) {
    require_same_field(c.f.field(), d.f.field());
    check_common_components(c, d);
    check_infinity(c, d);
    Poly R = resultant(c.f, d.f, Variable::X);
    if (R.is_zero()) fail(ErrorKind::CommonComponent, c.label + " and " + d.label + " share a component");
    std::vector<Intersection> out;
    int affine = 0;
    if (R.degree() > 0) {
        for (auto& [pi, e] : factor(R).factors) {
            Residue L{pi};
            auto g = L.gcd(L.from(c.f), L.from(d.f));
            if (g.size() < 2)
                fail(ErrorKind::InternalInconsistency, "resultant factor " + pi.to_string() + " without common root");
            auto h = L.gcd(g, L.derivative(g));
            if (h.size() > 1) {
                // squarefree part
                auto q = g;
                Residue::LPoly quo(g.size() - h.size() + 1, Poly(pi.field()));
                Poly il = inverse_mod(h.back(), pi);
                while (q.size() >= h.size()) {
                    Poly f = (q.back() * il) % pi;
                    size_t s = q.size() - h.size();
                    quo[s] = f;
                    for (size_t j = 0; j < h.size(); ++j) q[s + j] = (q[s + j] - f * h[j]) % pi;
                    L.trim(q);
                }
                g = L.monic(quo);
            }
            if (g.size() != 2)
                fail(ErrorKind::Unsupported, "several intersection points of " + c.label + " and " + d.label +
                                                 " on the pencil line " + pi.to_string() + " = 0");
            PointClass p;
            p.pi = pi;
            p.x0 = (-g[0]) % pi;
            out.push_back({p, e});
            affine += e * pi.degree();
        }
    }
    std::sort(out.begin(), out.end(), [](const Intersection& a, const Intersection& b) {
        const Poly &p = a.point.pi, &q = b.point.pi;
        if (p.degree() != q.degree()) return p.degree() < q.degree();
        if (p.degree() == 1) return (-p.coeff(0)).compare(-q.coeff(0)) < 0;
        return a.point.key() < b.point.key();
    });
    int rest = c.degree * d.degree - affine;
    if (c.passes_through_zo() && d.passes_through_zo()) {
        if (rest <= 0) fail(ErrorKind::InternalInconsistency, "no room for the intersection at z_o");
        PointClass z;
        z.at_zo = true;
        out.push_back({z, rest});
    } else if (rest != 0) {
        fail(ErrorKind::InternalInconsistency, "Bezout count off by " + std::to_string(rest) + " for " + c.label +
                                                   " and " + d.label);
    }
    return out;
}

bool all_even_tangency(const PlaneCurve& c, const PlaneCurve& branch) {
    require_same_field(c.f.field(), branch.f.field());
    if (auto g = c.f.graph_function()) {
        check_infinity(c, branch);
        Poly r = branch.f.eval_x(*g);
        if (r.is_zero()) fail(ErrorKind::CommonComponent, c.label + " is a component of " + branch.label);
        if (r.degree() > 0 && !poly_square_root(r)) return false;
        int at_zo = c.degree * branch.degree - r.degree();
        return at_zo % 2 == 0;
    }
    for (auto& i : intersection_multiplicities(c, branch))
        if (i.multiplicity % 2) return false;
    return true;
}

ArrangementSummary summarize(const std::vector<PlaneCurve>& curves) {
    ArrangementSummary s;
    std::map<std::string, size_t> index;
    for (auto& c : curves) {
        s.labels.push_back(c.label);
        s.degrees.push_back(c.degree);
    }
    for (size_t i = 0; i < curves.size(); ++i)
        for (size_t j = i + 1; j < curves.size(); ++j)
            for (auto& in : intersection_multiplicities(curves[i], curves[j])) {
                auto [it, fresh] = index.emplace(in.point.key(), s.points.size());
                if (fresh) s.points.push_back(PointEntry{in.point, {}, {}});
                auto& e = s.points[it->second];
                for (size_t k : {i, j})
                    if (std::find(e.curves.begin(), e.curves.end(), k) == e.curves.end()) e.curves.push_back(k);
                e.pairs.emplace_back(i, j, in.multiplicity);
            }
    for (auto& e : s.points) std::sort(e.curves.begin(), e.curves.end());
    return s;
}

namespace {

using Profile = std::pair<std::vector<int>, std::vector<std::tuple<int, int, int>>>;

std::vector<Profile> profiles(const ArrangementSummary& s) {
    std::vector<Profile> out;
    for (auto& e : s.points) {
        Profile p;
        for (size_t k : e.curves) p.first.push_back(s.degrees[k]);
        std::sort(p.first.begin(), p.first.end());
        for (auto& [i, j, m] : e.pairs) {
            int a = s.degrees[i], b = s.degrees[j];
            p.second.emplace_back(std::min(a, b), std::max(a, b), m);
        }
        std::sort(p.second.begin(), p.second.end());
        for (int k = 0; k < e.point.geometric_count(); ++k) out.push_back(p);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

bool same_combinatorics(const ArrangementSummary& a, const ArrangementSummary& b) {
    auto da = a.degrees, db = b.degrees;
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return false;
    return profiles(a) == profiles(b);
}

std::vector<TangentConic> tangent_conics_through(const EllipticSurface& s, const PlaneCurve& branch,
                                                 const std::vector<Section>& line_sections) {
    require_same_field(s.field(), branch.f.field());
    std::vector<TangentConic> out;
    for (auto& sec : line_sections) {
        TangentConic tc;
        Rational h = height(s, sec);
        Section d = smul(2, sec);
        if (h != Rational(1, 2)) {
            tc.error = "height " + to_string(h) + ", expected 1/2";
        } else if (d.is_zero() || d.x().den().degree() > 0 || d.x().num().degree() > 2) {
            tc.error = "[2]s meets the zero section";
        } else {
            const FieldPtr& k = s.field();
            Poly q = d.x().num() * d.x().den().leading().inverse();
            PlaneCurve conic = PlaneCurve::make("x = " + q.to_string(), BiPoly::var_x(k) - BiPoly::from_t(q));
            if (!all_even_tangency(conic, branch))
                tc.error = "conic " + conic.label + " is not tangent to the branch curve";
            else
                tc.conic = std::move(conic);
        }
        out.push_back(std::move(tc));
    }
    return out;
}

}  // namespace mwl
