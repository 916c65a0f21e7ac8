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

#include "mwl/kodaira.hpp"

#include <algorithm>

#include "mwl/error.hpp"
#include "mwl/factor.hpp"

namespace mwl {

std::string KodairaType::name() const {
    switch (family) {
        case KodairaFamily::I: return "I" + std::to_string(n);
        case KodairaFamily::IStar: return "I" + std::to_string(n) + "*";
        case KodairaFamily::II: return "II";
        case KodairaFamily::III: return "III";
        case KodairaFamily::IV: return "IV";
        case KodairaFamily::IVStar: return "IV*";
        case KodairaFamily::IIIStar: return "III*";
        case KodairaFamily::IIStar: return "II*";
    }
    return "?";
}

KodairaType parse_kodaira(const std::string& s) {
    if (s == "II") return {KodairaFamily::II, 0};
    if (s == "III") return {KodairaFamily::III, 0};
    if (s == "IV") return {KodairaFamily::IV, 0};
    if (s == "IV*") return {KodairaFamily::IVStar, 0};
    if (s == "III*") return {KodairaFamily::IIIStar, 0};
    if (s == "II*") return {KodairaFamily::IIStar, 0};
    if (s.size() >= 2 && s[0] == 'I') {
        bool star = s.back() == '*';
        std::string num = s.substr(1, s.size() - 1 - (star ? 1 : 0));
        if (!num.empty() && std::all_of(num.begin(), num.end(), ::isdigit))
            return {star ? KodairaFamily::IStar : KodairaFamily::I, std::stoi(num)};
    }
    fail(ErrorKind::InvalidInput, "unknown Kodaira type '" + s + "'");
}

int KodairaType::components() const {
    switch (family) {
        case KodairaFamily::I: return n == 0 ? 1 : n;
        case KodairaFamily::IStar: return n + 5;
        case KodairaFamily::II: return 1;
        case KodairaFamily::III: return 2;
        case KodairaFamily::IV: return 3;
        case KodairaFamily::IVStar: return 7;
        case KodairaFamily::IIIStar: return 8;
        case KodairaFamily::IIStar: return 9;
    }
    return 1;
}

int KodairaType::euler() const {
    switch (family) {
        case KodairaFamily::I: return n;
        case KodairaFamily::IStar: return n + 6;
        case KodairaFamily::II: return 2;
        case KodairaFamily::III: return 3;
        case KodairaFamily::IV: return 4;
        case KodairaFamily::IVStar: return 8;
        case KodairaFamily::IIIStar: return 9;
        case KodairaFamily::IIStar: return 10;
    }
    return 0;
}

std::string KodairaType::component_group() const {
    switch (family) {
        case KodairaFamily::I: return n <= 1 ? "trivial" : "Z/" + std::to_string(n);
        case KodairaFamily::IStar: return n % 2 == 0 ? "Z/2 x Z/2" : "Z/4";
        case KodairaFamily::II:
        case KodairaFamily::IIStar: return "trivial";
        case KodairaFamily::III:
        case KodairaFamily::IIIStar: return "Z/2";
        case KodairaFamily::IV:
        case KodairaFamily::IVStar: return "Z/3";
    }
    return "?";
}

int KodairaType::component_group_order() const {
    switch (family) {
        case KodairaFamily::I: return std::max(n, 1);
        case KodairaFamily::IStar: return 4;
        case KodairaFamily::II:
        case KodairaFamily::IIStar: return 1;
        case KodairaFamily::III:
        case KodairaFamily::IIIStar: return 2;
        case KodairaFamily::IV:
        case KodairaFamily::IVStar: return 3;
    }
    return 1;
}

int KodairaType::simple_components() const { return component_group_order() - 1; }

IntMatrix intersection_matrix(const KodairaType& t) {
    if (!t.reducible()) fail(ErrorKind::IrreducibleFiber, "fiber of type " + t.name() + " is irreducible");
    int m = t.components() - 1;
    IntMatrix A(m, std::vector<long>(m, 0));
    for (int i = 0; i < m; ++i) A[i][i] = -2;
    auto edge = [&](int i, int j) { A[i][j] = A[j][i] = 1; };
    switch (t.family) {
        case KodairaFamily::I:
            for (int i = 0; i + 1 < m; ++i) edge(i, i + 1);
            break;
        case KodairaFamily::IStar: {
            // 0,1,2: simple components; 3..: chain c_0..c_n
            int n = t.n;
            edge(0, 3);
            edge(1, 3 + n);
            edge(2, 3 + n);
            for (int i = 0; i < n; ++i) edge(3 + i, 4 + i);
            break;
        }
        case KodairaFamily::III: break;
        case KodairaFamily::IV: edge(0, 1); break;
        case KodairaFamily::IVStar:
            // t1, t2, a0, a1, a2, c
            edge(0, 3);
            edge(1, 4);
            edge(2, 5);
            edge(3, 5);
            edge(4, 5);
            break;
        case KodairaFamily::IIIStar:
            // t1, b1, b2, c, a3, a2, s
            edge(0, 1);
            edge(1, 2);
            edge(2, 3);
            edge(3, 4);
            edge(4, 5);
            edge(3, 6);
            break;
        case KodairaFamily::IIStar:
            // c, l1..l4, m1, m2, s1
            edge(0, 1);
            edge(1, 2);
            edge(2, 3);
            edge(3, 4);
            edge(0, 5);
            edge(5, 6);
            edge(0, 7);
            break;
        case KodairaFamily::II: break;
    }
    return A;
}

RatMatrix inverse(const RatMatrix& m) {
    size_t n = m.size();
    RatMatrix a = m, inv(n, std::vector<Rational>(n));
    for (size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (size_t c = 0; c < n; ++c) {
        size_t p = c;
        while (p < n && a[p][c] == 0) ++p;
        if (p == n) fail(ErrorKind::DivisionByZero, "singular matrix");
        std::swap(a[p], a[c]);
        std::swap(inv[p], inv[c]);
        Rational piv = a[c][c];
        for (size_t j = 0; j < n; ++j) {
            a[c][j] /= piv;
            inv[c][j] /= piv;
        }
        for (size_t r = 0; r < n; ++r) {
            if (r == c || a[r][c] == 0) continue;
            Rational f = a[r][c];
            for (size_t j = 0; j < n; ++j) {
                a[r][j] -= f * a[c][j];
                inv[r][j] -= f * inv[c][j];
            }
        }
    }
    return inv;
}

RatMatrix contribution_matrix(const KodairaType& t) {
    IntMatrix A = intersection_matrix(t);
    RatMatrix neg(A.size(), std::vector<Rational>(A.size()));
    for (size_t i = 0; i < A.size(); ++i)
        for (size_t j = 0; j < A.size(); ++j) neg[i][j] = -A[i][j];
    return inverse(neg);
}

long determinant(const IntMatrix& m) {
    RatMatrix r(m.size(), std::vector<Rational>(m.size()));
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < m.size(); ++j) r[i][j] = m[i][j];
    Rational d = mwl::determinant(r);
    return d.get_num().get_si();
}

KodairaType kodaira_from_orders(int a, int b, int n) {
    auto bad = [&]() -> KodairaType {
        fail(ErrorKind::InternalInconsistency, "no Kodaira type for (ord c4, ord c6, ord Delta) = (" +
                                                   std::to_string(a) + ", " + std::to_string(b) + ", " +
                                                   std::to_string(n) + ")");
    };
    if (n == 0) return {KodairaFamily::I, 0};
    if (a == 0) {
        if (b != 0) bad();
        return {KodairaFamily::I, n};
    }
    if (b == 0) bad();
    if (a == 2 && b == 3 && n > 6) return {KodairaFamily::IStar, n - 6};
    switch (n) {
        case 2:
            if (b == 1) return {KodairaFamily::II, 0};
            break;
        case 3:
            if (a == 1 && b >= 2) return {KodairaFamily::III, 0};
            break;
        case 4:
            if (a >= 2 && b == 2) return {KodairaFamily::IV, 0};
            break;
        case 6:
            if (a >= 2 && b >= 3) return {KodairaFamily::IStar, 0};
            break;
        case 8:
            if (a >= 3 && b == 4) return {KodairaFamily::IVStar, 0};
            break;
        case 9:
            if (a == 3 && b >= 5) return {KodairaFamily::IIIStar, 0};
            break;
        case 10:
            if (a >= 4 && b == 5) return {KodairaFamily::IIStar, 0};
            break;
        default: break;
    }
    return bad();
}

FiberData classify_place(const WeierstrassModel& m, const Place& v) {
    WeierstrassModel local = m;
    Poly pi;
    ChartData chart;
    if (v.is_infinity()) {
        local = chart_at_infinity(m).model;
        pi = Poly::variable(m.field(), "u");
        chart.variable = "u";
        chart.steps.push_back("chart u = 1/t");
    } else {
        pi = v.pi.with_var(m.var());
        chart.variable = m.var();
    }
    chart.pi = pi;
    auto inv = invariants(local);
    FiberData fd;
    fd.place = v;
    fd.ord_c4 = order_at(inv.c4, pi);
    fd.ord_c6 = order_at(inv.c6, pi);
    fd.ord_delta = order_at(inv.delta, pi);
    if (fd.ord_c4 >= 4 && fd.ord_c6 >= 6)
        fail(ErrorKind::ModelNotMinimal, "model is not minimal at " + v.label());
    fd.type = kodaira_from_orders(fd.ord_c4, fd.ord_c6, fd.ord_delta);
    fd.m_v = fd.type.components();
    fd.euler = fd.type.euler();
    if (fd.type.reducible()) fd.A = intersection_matrix(fd.type);
    if (fd.ord_delta > 0) {
        const Poly &a2 = local.a2(), &a4 = local.a4(), &a6 = local.a6();
        if (fd.ord_c4 == 0) {
            // node of (x - r)^2 (x - s): r = (9 a6 - a2 a4) / (2 (a2^2 - 3 a4))
            Poly num = a6 * Rational(9) - a2 * a4;
            Poly den = (a2 * a2 - a4 * Rational(3)) * Rational(2);
            chart.singular_x = (num % pi) * inverse_mod(den, pi) % pi;
            chart.steps.push_back("node at x = " + chart.singular_x.to_string());
        } else {
            chart.additive = true;
            chart.singular_x = (a2 * Rational(-1, 3)) % pi;
            chart.steps.push_back("cusp at x = " + chart.singular_x.to_string());
        }
        chart.steps.push_back("type " + fd.type.name() + " from orders (" + std::to_string(fd.ord_c4) + ", " +
                              std::to_string(fd.ord_c6) + ", " + std::to_string(fd.ord_delta) + ")");
    }
    fd.chart = std::move(chart);
    return fd;
}

SurfacePtr EllipticSurface::make(ModelPtr m) {
    auto s = std::shared_ptr<EllipticSurface>(new EllipticSurface());
    s->model_ = m;
    s->chart_ = chart_at_infinity(*m);
    if (s->chart_.twist == 0) fail(ErrorKind::InvalidModel, "constant coefficients: not an elliptic surface");
    auto inv = invariants(*m);
    for (auto& [pi, e] : factor(inv.delta).factors) {
        Place v = Place::finite(pi);
        s->fibers_.push_back(classify_place(*m, v));
    }
    FiberData inf = classify_place(*m, Place::infinity());
    if (inf.ord_delta > 0) s->fibers_.push_back(std::move(inf));
    int total = s->euler_total();
    if (total != 12 * m->chi())
        fail(ErrorKind::InvalidModel, "sum of Euler numbers is " + std::to_string(total) + ", expected " +
                                          std::to_string(12 * m->chi()));
    return s;
}

std::vector<const FiberData*> EllipticSurface::reducible_fibers() const {
    std::vector<const FiberData*> r;
    for (auto& f : fibers_)
        if (f.type.reducible()) r.push_back(&f);
    return r;
}

int EllipticSurface::euler_total() const {
    int t = 0;
    for (auto& f : fibers_) t += f.euler * f.geometric_count();
    return t;
}

int EllipticSurface::rational_rank() const {
    if (chi() != 1) fail(ErrorKind::Unsupported, "rank formula needs a rational surface (chi = 1)");
    int r = 8;
    for (auto& f : fibers_) r -= (f.m_v - 1) * f.geometric_count();
    return r;
}

}  // namespace mwl
