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

// Multimodular gcd over K = Q[a]/(m). Primes are used only when m stays
// squarefree mod l and all inputs are l-integral with unit leading
// coefficients; then deg gcd mod l >= deg gcd over K, so a degree 0 image
// proves coprimality and anything else is checked by exact division.

#include <gmp.h>

#include <cstdint>

#include "mwl/error.hpp"
#include "mwl/poly.hpp"

namespace mwl {

namespace {

using u64 = std::uint64_t;
using Vec = std::vector<u64>;  // F_l[y], low to high

const std::vector<u64>& gcd_primes() {
    static const std::vector<u64> primes = [] {
        std::vector<u64> out;
        mpz_class c = (1UL << 31) - 1;
        while (out.size() < 256) {
            if (mpz_probab_prime_p(c.get_mpz_t(), 30)) out.push_back(c.get_ui());
            c -= 2;
        }
        return out;
    }();
    return primes;
}

struct Zl {
    u64 l;
    u64 mul(u64 a, u64 b) const { return a * b % l; }
    u64 add(u64 a, u64 b) const { return (a + b) % l; }
    u64 sub(u64 a, u64 b) const { return (a + l - b) % l; }
    u64 pow(u64 a, u64 e) const {
        u64 r = 1;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    u64 inv(u64 a) const { return pow(a, l - 2); }

    // false when the denominator vanishes
    bool reduce(const Rational& q, u64& out) const {
        u64 d = mpz_fdiv_ui(q.get_den_mpz_t(), l);
        if (d == 0) return false;
        out = mul(mpz_fdiv_ui(q.get_num_mpz_t(), l), inv(d));
        return true;
    }

    void trim(Vec& a) const {
        while (!a.empty() && a.back() == 0) a.pop_back();
    }
    // remainder of a by b, b nonzero
    Vec rem(Vec a, const Vec& b) const {
        trim(a);
        u64 ib = inv(b.back());
        while (a.size() >= b.size()) {
            u64 f = mul(a.back(), ib);
            size_t s = a.size() - b.size();
            for (size_t j = 0; j < b.size(); ++j) a[s + j] = sub(a[s + j], mul(f, b[j]));
            trim(a);
        }
        return a;
    }
    Vec pgcd(Vec a, Vec b) const {
        trim(a);
        trim(b);
        while (!b.empty()) {
            Vec r = rem(a, b);
            a = std::move(b);
            b = std::move(r);
        }
        return a;
    }
};

// R = F_l[y]/(m)
struct Ring {
    Zl z;
    Vec m;  // monic, degree d
    size_t d;

    Vec mul(const Vec& a, const Vec& b) const {
        if (d == 1) return {z.mul(a[0], b[0])};
        Vec r(2 * d - 1, 0);
        for (size_t i = 0; i < d; ++i) {
            if (!a[i]) continue;
            for (size_t j = 0; j < d; ++j) r[i + j] = z.add(r[i + j], z.mul(a[i], b[j]));
        }
        for (size_t k = r.size() - 1; k >= d; --k) {
            u64 c = r[k];
            if (!c) continue;
            for (size_t j = 0; j < d; ++j) r[k - d + j] = z.sub(r[k - d + j], z.mul(c, m[j]));
        }
        r.resize(d);
        return r;
    }
    bool is_zero(const Vec& a) const {
        for (u64 c : a)
            if (c) return false;
        return true;
    }
    // empty when a is a zero divisor
    std::optional<Vec> inv(const Vec& a) const {
        if (d == 1) {
            if (!a[0]) return std::nullopt;
            return Vec{z.inv(a[0])};
        }
        // extended euclid on (a, m)
        Vec r0 = m, r1 = a, s0, s1 = {1};
        z.trim(r1);
        while (!r1.empty() && r1.size() > 1) {
            // q = r0 / r1
            Vec q(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 0, 0), r = r0;
            u64 ib = z.inv(r1.back());
            while (r.size() >= r1.size()) {
                u64 f = z.mul(r.back(), ib);
                size_t s = r.size() - r1.size();
                q[s] = f;
                for (size_t j = 0; j < r1.size(); ++j) r[s + j] = z.sub(r[s + j], z.mul(f, r1[j]));
                z.trim(r);
            }
            Vec qs(q.size() + s1.size(), 0);
            for (size_t i = 0; i < q.size(); ++i)
                for (size_t j = 0; j < s1.size(); ++j) qs[i + j] = z.add(qs[i + j], z.mul(q[i], s1[j]));
            Vec s2(std::max(s0.size(), qs.size()), 0);
            for (size_t i = 0; i < s2.size(); ++i)
                s2[i] = z.sub(i < s0.size() ? s0[i] : 0, i < qs.size() ? qs[i] : 0);
            z.trim(s2);
            r0 = std::move(r1);
            r1 = std::move(r);
            s0 = std::move(s1);
            s1 = std::move(s2);
        }
        if (r1.empty()) return std::nullopt;
        u64 c = z.inv(r1[0]);
        Vec out(d, 0);
        for (size_t i = 0; i < s1.size() && i < d; ++i) out[i] = z.mul(s1[i], c);
        // s1 has degree < d here
        return out;
    }
};

using RPoly = std::vector<Vec>;  // coefficients in R, low to high

bool reduce_poly(const Ring& R, const Poly& f, RPoly& out) {
    out.clear();
    for (auto& c : f.coeffs()) {
        Vec v(R.d, 0);
        auto& co = c.coeffs();
        for (size_t i = 0; i < co.size(); ++i)
            if (!R.z.reduce(co[i], v[i])) return false;
        out.push_back(std::move(v));
    }
    return true;
}

void trim(const Ring& R, RPoly& a) {
    while (!a.empty() && R.is_zero(a.back())) a.pop_back();
}

// monic gcd in R[t]; empty if a leading coefficient is a zero divisor
std::optional<RPoly> ring_gcd(const Ring& R, RPoly a, RPoly b) {
    auto make_monic = [&](RPoly& f) -> bool {
        auto il = R.inv(f.back());
        if (!il) return false;
        for (auto& c : f) c = R.mul(c, *il);
        return true;
    };
    trim(R, a);
    trim(R, b);
    if (a.size() < b.size()) std::swap(a, b);
    if (!make_monic(a)) return std::nullopt;
    if (b.empty()) return a;
    if (!make_monic(b)) return std::nullopt;
    while (!b.empty()) {
        // a mod b, b monic
        while (a.size() >= b.size()) {
            Vec f = a.back();
            size_t s = a.size() - b.size();
            for (size_t j = 0; j + 1 < b.size(); ++j) {
                Vec fb = R.mul(f, b[j]);
                for (size_t i = 0; i < R.d; ++i) a[s + j][i] = R.z.sub(a[s + j][i], fb[i]);
            }
            a.pop_back();
            trim(R, a);
        }
        std::swap(a, b);
        if (!b.empty() && !make_monic(b)) return std::nullopt;
    }
    return a;
}

std::optional<Rational> rational_reconstruct(const mpz_class& x, const mpz_class& M) {
    mpz_class r0 = M, r1 = x, s0 = 0, s1 = 1;
    while (2 * r1 * r1 > M) {
        mpz_class q = r0 / r1;
        mpz_class t = r0 - q * r1;
        r0 = r1;
        r1 = t;
        t = s0 - q * s1;
        s0 = s1;
        s1 = t;
    }
    if (s1 == 0 || 2 * s1 * s1 > M) return std::nullopt;
    if (gcd(r1, s1) != 1) return std::nullopt;
    Rational q(r1, s1);
    q.canonicalize();
    return q;
}

}  // namespace

std::optional<Poly> modular_gcd(const Poly& a, const Poly& b) {
    require_compatible(a, b);
    const FieldPtr& k = a.field();
    const QPoly& mod = k->modulus();
    size_t d = static_cast<size_t>(k->degree());

    int best_degree = -1;
    std::vector<std::vector<mpz_class>> acc;  // [coefficient][coordinate]
    mpz_class M = 1;
    std::optional<Poly> last;
    int used = 0;
    for (u64 l : gcd_primes()) {
        Ring R{Zl{l}, Vec(d + 1), d};
        bool ok = true;
        for (size_t i = 0; i <= d && ok; ++i) ok = R.z.reduce(mod.coeff(i), R.m[i]);
        if (!ok) continue;
        Vec dm(d);
        for (size_t i = 1; i <= d; ++i) dm[i - 1] = R.z.mul(R.m[i], i % l);
        if (R.z.pgcd(R.m, dm).size() != 1) continue;  // m not squarefree mod l
        RPoly ra, rb;
        if (!reduce_poly(R, a, ra) || !reduce_poly(R, b, rb)) continue;
        if (R.is_zero(ra.back()) || R.is_zero(rb.back())) continue;
        auto g = ring_gcd(R, ra, rb);
        if (!g) continue;
        int deg = static_cast<int>(g->size()) - 1;
        if (deg == 0) return Poly::constant(k, 1, a.var());
        if (++used > 64) break;
        if (best_degree != -1 && deg > best_degree) continue;  // unlucky prime
        if (deg < best_degree || best_degree == -1) {
            best_degree = deg;
            acc.assign(deg + 1, std::vector<mpz_class>(d, 0));
            M = 1;
            last.reset();
        }
        // CRT
        mpz_class Ml = M % l;
        u64 inv = R.z.inv(Ml.get_ui());
        for (size_t i = 0; i <= static_cast<size_t>(deg); ++i)
            for (size_t j = 0; j < d; ++j) {
                u64 old = mpz_fdiv_ui(acc[i][j].get_mpz_t(), l);
                u64 h = R.z.mul(R.z.sub((*g)[i][j], old), inv);
                acc[i][j] += M * h;
            }
        M *= l;

        std::vector<FieldElem> coeffs;
        bool recon = true;
        for (size_t i = 0; i <= static_cast<size_t>(deg) && recon; ++i) {
            std::vector<Rational> co(d);
            for (size_t j = 0; j < d && recon; ++j) {
                auto q = rational_reconstruct(acc[i][j], M);
                if (!q)
                    recon = false;
                else
                    co[j] = *q;
            }
            if (recon) coeffs.emplace_back(k, co);
        }
        if (!recon) {
            last.reset();
            continue;
        }
        Poly cand(k, coeffs, a.var());
        if (last && *last == cand) {
            if ((a % cand).is_zero() && (b % cand).is_zero()) return cand;
        }
        last = std::move(cand);
    }
    return std::nullopt;
}

}  // namespace mwl
