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

#include "mwl/factor.hpp"

#include <algorithm>
#include <cstdlib>

#include "mwl/error.hpp"
#include "mwl/qfactor.hpp"

namespace mwl {

Poly Factorization::expand() const {
    Poly r = Poly::constant(unit);
    if (!factors.empty()) r = r.with_var(factors[0].first.var());
    for (auto& [p, e] : factors) r = r * p.pow(e);
    return r;
}

QPoly norm_poly(const Poly& f) {
    const FieldPtr& k = f.field();
    if (k->is_rationals()) return f.to_rational();
    int D = k->degree() * f.degree();
    std::vector<Rational> xs, ys;
    for (int i = 0; i <= D; ++i) {
        FieldElem t0(k, Rational(i));
        xs.emplace_back(i);
        ys.push_back(f.eval(t0).norm());
    }
    return interpolate(xs, ys);
}

namespace {

bool poly_less(const Poly& a, const Poly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = 0; i <= a.degree(); ++i) {
        int c = a.coeffs()[i].compare(b.coeffs()[i]);
        if (c != 0) return c < 0;
    }
    return false;
}

// g monic squarefree over K, K != Q
std::vector<Poly> trager(const Poly& g) {
    if (g.degree() <= 1) return {g};
    const FieldPtr& k = g.field();
    FieldElem alpha = FieldElem::generator(k);
    for (int step = 0; step < 40; ++step) {
        long s = (step + 1) / 2 * (step % 2 ? 1 : -1);
        FieldElem sa = alpha * Rational(s);
        Poly G = g.shift(-sa);
        QPoly N = norm_poly(G);
        if (gcd(N, N.derivative()).degree() != 0) continue;
        auto nf = factor_rational(N);
        if (nf.size() == 1) return {g};
        std::vector<Poly> out;
        for (auto& [ni, e] : nf) {
            Poly h = gcd(G, Poly::from_rational(k, ni, g.var()));
            out.push_back(h.shift(sa).monic());
        }
        return out;
    }
    fail(ErrorKind::FactorizationFailure, "no squarefree norm found for " + g.to_string());
}

}  // namespace

Factorization factor(const Poly& f) {
    if (f.is_zero()) fail(ErrorKind::ZeroPolynomial, "factor of zero polynomial");
    const FieldPtr& k = f.field();
    Factorization out{f.leading(), {}};
    if (f.degree() == 0) return out;
    if (f.is_rational()) {
        for (auto& [q, e] : factor_rational(f.to_rational())) {
            Poly qp = Poly::from_rational(k, q, f.var());
            if (k->is_rationals() || q.degree() == 1) {
                out.factors.emplace_back(qp, e);
            } else {
                for (auto& h : trager(qp)) out.factors.emplace_back(h, e);
            }
        }
    } else {
        for (auto& [part, e] : squarefree_decompose(f))
            for (auto& h : trager(part)) out.factors.emplace_back(h, e);
    }
    std::sort(out.factors.begin(), out.factors.end(),
              [](const auto& a, const auto& b) { return poly_less(a.first, b.first); });
    return out;
}

bool is_irreducible(const Poly& f) {
    if (f.degree() <= 0) return false;
    auto fs = factor(f);
    return fs.factors.size() == 1 && fs.factors[0].second == 1;
}

std::vector<FieldElem> roots(const Poly& f) {
    std::vector<FieldElem> r;
    for (auto& [p, e] : factor(f).factors)
        if (p.degree() == 1) r.push_back(-p.coeff(0));
    std::sort(r.begin(), r.end(), [](const FieldElem& a, const FieldElem& b) { return a.compare(b) < 0; });
    return r;
}

std::optional<FieldElem> field_sqrt(const FieldElem& u) {
    const FieldPtr& k = u.field();
    if (u.is_zero()) return u;
    if (u.is_rational()) {
        Rational q = u.rational_value();
        if (q > 0) {
            mpz_class n = q.get_num(), d = q.get_den();
            if (mpz_perfect_square_p(n.get_mpz_t()) && mpz_perfect_square_p(d.get_mpz_t())) {
                mpz_class rn, rd;
                mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
                mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
                return FieldElem(k, Rational(rn, rd));
            }
        }
        if (k->is_rationals()) return std::nullopt;
    }
    std::vector<FieldElem> c{-u, FieldElem(k), FieldElem(k, Rational(1))};
    auto rs = roots(Poly(k, std::move(c), "z"));
    if (rs.empty()) return std::nullopt;
    // canonical choice: the root with positive sign
    for (auto& r : rs)
        if (r.sign() > 0) return r;
    return rs.front();
}

std::optional<PolySquareRoot> poly_square_root(const Poly& f) {
    if (f.is_zero()) fail(ErrorKind::ZeroPolynomial, "square root of zero polynomial");
    Poly h = Poly::constant(f.field(), 1, f.var());
    for (auto& [g, e] : squarefree_decompose(f)) {
        if (e % 2) return std::nullopt;
        h = h * g.pow(e / 2);
    }
    return PolySquareRoot{h, f.leading()};
}

FieldEmbedding FieldEmbedding::identity(const FieldPtr& k) {
    return FieldEmbedding{k, k, k->is_rationals() ? FieldElem(k) : FieldElem::generator(k)};
}

FieldElem FieldEmbedding::operator()(const FieldElem& a) const {
    require_same_field(source, a.field());
    if (is_identity()) return a;
    const auto& c = a.coeffs();
    FieldElem acc(target);
    for (size_t i = c.size(); i-- > 0;) acc = acc * image + FieldElem(target, c[i]);
    return acc;
}

Poly FieldEmbedding::operator()(const Poly& p) const {
    std::vector<FieldElem> c;
    for (auto& a : p.coeffs()) c.push_back((*this)(a));
    return Poly(target, std::move(c), p.var());
}

FieldEmbedding FieldEmbedding::then(const FieldEmbedding& next) const {
    require_same_field(target, next.source);
    if (source->is_rationals()) return FieldEmbedding{source, next.target, FieldElem(next.target)};
    return FieldEmbedding{source, next.target, next(image)};
}

int field_degree_cap() {
    const char* env = std::getenv("MWL_FIELD_DEGREE_CAP");
    if (env && *env) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    return 8;
}

namespace {

// u = s^2 d with d a squarefree integer
void rational_square_split(const Rational& u, mpz_class& d, Rational& s) {
    mpz_class n = u.get_num() * u.get_den();
    mpz_class sq = 1;
    mpz_class sign = n < 0 ? -1 : 1;
    n = abs(n);
    for (unsigned long p = 2; p < 100000 && p * p <= n; ++p) {
        while (mpz_divisible_ui_p(n.get_mpz_t(), p * p)) {
            n /= p * p;
            sq *= p;
        }
    }
    if (mpz_perfect_square_p(n.get_mpz_t()) && n > 1) {
        mpz_class r;
        mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
        sq *= r;
        n = 1;
    }
    d = sign * n;
    // u = (num*den)/den^2 = sq^2 d / den^2
    s = Rational(sq, u.get_den());
    s.canonicalize();
}

}  // namespace

SqrtExtension adjoin_sqrt(const FieldElem& u, int degree_cap) {
    const FieldPtr& k = u.field();
    if (auto r = field_sqrt(u)) return SqrtExtension{FieldEmbedding::identity(k), *r};
    int n = k->degree();
    if (2 * n > degree_cap)
        fail(ErrorKind::FieldDegreeCap, "adjoining sqrt(" + u.to_string() + ") to " + k->describe() +
                                            " exceeds degree cap " + std::to_string(degree_cap));
    if (k->is_rationals()) {
        mpz_class d;
        Rational s;
        rational_square_split(u.rational_value(), d, s);
        FieldPtr L = NumberField::make(QPoly(std::vector<Rational>{Rational(-d), 0, 1}),
                                       "sqrt(" + d.get_str() + ")", false);
        FieldElem w = FieldElem::generator(L);
        return SqrtExtension{FieldEmbedding{k, L, FieldElem(L)}, w * s};
    }
    FieldElem alpha = FieldElem::generator(k);
    for (int step = 1; step < 40; ++step) {
        long c = (step + 1) / 2 * (step % 2 ? 1 : -1);
        // (z - c a)^2 - u
        FieldElem ca = alpha * Rational(c);
        std::vector<FieldElem> zc{ca * ca - u, -ca * Rational(2), FieldElem(k, Rational(1))};
        QPoly P = norm_poly(Poly(k, std::move(zc), "z"));
        if (gcd(P, P.derivative()).degree() != 0) continue;
        FieldPtr L = NumberField::make(P, "w" + std::to_string(P.degree()), false);
        FieldElem beta = FieldElem::generator(L);
        // alpha in L: common root of m(y) and (beta - c y)^2 - u(y)
        Poly mL = Poly::from_rational(L, k->modulus(), "y");
        Poly y = Poly::variable(L, "y");
        Poly lin = Poly::constant(beta, "y") - y * Rational(c);
        Poly uy = Poly::from_rational(L, u.as_qpoly(), "y");
        Poly h = gcd(mL, lin * lin - uy);
        if (h.degree() != 1) fail(ErrorKind::InternalInconsistency, "primitive element recovery failed");
        FieldElem aL = -h.coeff(0);
        FieldEmbedding emb{k, L, aL};
        FieldElem root = beta - aL * Rational(c);
        if (root * root != emb(u)) fail(ErrorKind::InternalInconsistency, "square root check failed");
        return SqrtExtension{emb, root};
    }
    fail(ErrorKind::FactorizationFailure, "no primitive element found");
}

}  // namespace mwl
