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

// Zassenhaus: Cantor-Zassenhaus mod p, linear Hensel lifting along a
// binary factor tree, then subset recombination.

#include "mwl/qfactor.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>

#include "mwl/error.hpp"

namespace mwl {
namespace {

using u64 = std::uint64_t;
using PVec = std::vector<u64>;

constexpr int kMaxDegree = 96;

struct ModP {
    u64 p;

    void trim(PVec& a) const {
        while (!a.empty() && a.back() == 0) a.pop_back();
    }
    u64 mulm(u64 a, u64 b) const { return (a * b) % p; }
    u64 inv(u64 a) const {
        // p prime
        u64 r = 1, e = p - 2, b = a % p;
        while (e) {
            if (e & 1) r = mulm(r, b);
            b = mulm(b, b);
            e >>= 1;
        }
        return r;
    }
    PVec from(const ZVec& f) const {
        PVec r(f.size());
        mpz_class pp = static_cast<unsigned long>(p);
        for (size_t i = 0; i < f.size(); ++i) {
            mpz_class m = f[i] % pp;
            if (m < 0) m += pp;
            r[i] = m.get_ui();
        }
        trim(r);
        return r;
    }
    PVec add(const PVec& a, const PVec& b) const {
        PVec r(std::max(a.size(), b.size()), 0);
        for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
        for (size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + b[i]) % p;
        trim(r);
        return r;
    }
    PVec sub(const PVec& a, const PVec& b) const {
        PVec r(std::max(a.size(), b.size()), 0);
        for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
        for (size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + p - b[i]) % p;
        trim(r);
        return r;
    }
    PVec mul(const PVec& a, const PVec& b) const {
        if (a.empty() || b.empty()) return {};
        PVec r(a.size() + b.size() - 1, 0);
        for (size_t i = 0; i < a.size(); ++i) {
            if (!a[i]) continue;
            for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
        }
        trim(r);
        return r;
    }
    void divmod(const PVec& a, const PVec& b, PVec& q, PVec& r) const {
        r = a;
        int db = static_cast<int>(b.size()) - 1;
        int da = static_cast<int>(a.size()) - 1;
        q.assign(da >= db ? da - db + 1 : 0, 0);
        u64 il = inv(b.back());
        for (int k = da; k >= db; --k) {
            u64 c = mulm(r[k], il);
            if (!c) continue;
            q[k - db] = c;
            for (int j = 0; j <= db; ++j) r[k - db + j] = (r[k - db + j] + p - mulm(c, b[j])) % p;
        }
        trim(q);
        trim(r);
    }
    PVec rem(const PVec& a, const PVec& b) const {
        PVec q, r;
        divmod(a, b, q, r);
        return r;
    }
    PVec quo(const PVec& a, const PVec& b) const {
        PVec q, r;
        divmod(a, b, q, r);
        return q;
    }
    PVec monic(const PVec& a) const {
        if (a.empty()) return a;
        u64 il = inv(a.back());
        PVec r = a;
        for (auto& x : r) x = mulm(x, il);
        return r;
    }
    PVec gcd(PVec a, PVec b) const {
        while (!b.empty()) {
            PVec r = rem(a, b);
            a = std::move(b);
            b = std::move(r);
        }
        return monic(a);
    }
    // s*a + t*b = 1, assuming coprime
    void xgcd(const PVec& a, const PVec& b, PVec& s, PVec& t) const {
        PVec r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
        while (!r1.empty()) {
            PVec q, r;
            divmod(r0, r1, q, r);
            PVec s2 = sub(s0, mul(q, s1)), t2 = sub(t0, mul(q, t1));
            r0 = std::move(r1);
            r1 = std::move(r);
            s0 = std::move(s1);
            s1 = std::move(s2);
            t0 = std::move(t1);
            t1 = std::move(t2);
        }
        u64 il = inv(r0.back());
        s = mul(s0, PVec{il});
        t = mul(t0, PVec{il});
    }
    PVec derivative(const PVec& a) const {
        if (a.size() <= 1) return {};
        PVec r(a.size() - 1);
        for (size_t i = 1; i < a.size(); ++i) r[i - 1] = mulm(a[i], i % p);
        trim(r);
        return r;
    }
    PVec powmod(PVec base, const mpz_class& e, const PVec& m) const {
        PVec r{1};
        base = rem(base, m);
        size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
        for (size_t i = bits; i-- > 0;) {
            r = rem(mul(r, r), m);
            if (mpz_tstbit(e.get_mpz_t(), i)) r = rem(mul(r, base), m);
        }
        return r;
    }
};

bool is_prime_small(u64 n) {
    if (n < 2) return false;
    for (u64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// distinct degree factorization of monic squarefree f
std::vector<std::pair<PVec, int>> ddf(const ModP& F, PVec f) {
    std::vector<std::pair<PVec, int>> out;
    PVec x{0, 1};
    PVec h = x;
    mpz_class pp = static_cast<unsigned long>(F.p);
    int i = 1;
    while (static_cast<int>(f.size()) - 1 >= 2 * i) {
        h = F.powmod(h, pp, f);
        PVec g = F.gcd(F.sub(h, x), f);
        if (g.size() > 1) {
            out.emplace_back(g, i);
            f = F.quo(f, g);
            h = F.rem(h, f);
        }
        ++i;
    }
    if (f.size() > 1) out.emplace_back(f, static_cast<int>(f.size()) - 1);
    return out;
}

void edf(const ModP& F, const PVec& g, int d, std::mt19937_64& rng, std::vector<PVec>& out) {
    int n = static_cast<int>(g.size()) - 1;
    if (n == d) {
        out.push_back(g);
        return;
    }
    mpz_class pp = static_cast<unsigned long>(F.p);
    mpz_class e;
    mpz_pow_ui(e.get_mpz_t(), pp.get_mpz_t(), d);
    e = (e - 1) / 2;
    std::uniform_int_distribution<u64> dist(0, F.p - 1);
    for (;;) {
        PVec a(n);
        for (auto& c : a) c = dist(rng);
        F.trim(a);
        if (a.size() <= 1) continue;
        PVec b = F.sub(F.powmod(a, e, g), PVec{1});
        PVec c = F.gcd(b, g);
        int dc = static_cast<int>(c.size()) - 1;
        if (dc > 0 && dc < n) {
            edf(F, c, d, rng, out);
            edf(F, F.quo(g, c), d, rng, out);
            return;
        }
    }
}

// ---- integer polynomial helpers mod q ----

void ztrim(ZVec& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

ZVec zmul(const ZVec& a, const ZVec& b) {
    if (a.empty() || b.empty()) return {};
    ZVec r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    ztrim(r);
    return r;
}

void zmod(ZVec& a, const mpz_class& q) {
    for (auto& c : a) {
        c %= q;
        if (c < 0) c += q;
    }
    ztrim(a);
}

void zsym(ZVec& a, const mpz_class& q) {
    mpz_class half = q / 2;
    for (auto& c : a) {
        c %= q;
        if (c < 0) c += q;
        if (c > half) c -= q;
    }
    ztrim(a);
}

ZVec from_p(const PVec& a) {
    ZVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = static_cast<unsigned long>(a[i]);
    return r;
}

// exact division in Z[y]; false if not divisible
bool zdivexact(const ZVec& a, const ZVec& b, ZVec& q) {
    ZVec r = a;
    int da = static_cast<int>(a.size()) - 1, db = static_cast<int>(b.size()) - 1;
    if (da < db) return false;
    q.assign(da - db + 1, 0);
    for (int k = da; k >= db; --k) {
        if (r[k] == 0) continue;
        if (!mpz_divisible_p(r[k].get_mpz_t(), b[db].get_mpz_t())) return false;
        mpz_class c = r[k] / b[db];
        q[k - db] = c;
        for (int j = 0; j <= db; ++j) r[k - db + j] -= c * b[j];
    }
    for (auto& c : r)
        if (c != 0) return false;
    ztrim(q);
    return true;
}

ZVec zprimitive(ZVec a) {
    mpz_class g = 0;
    for (auto& c : a) g = gcd(g, c);
    if (g == 0) return a;
    if (a.back() < 0) g = -g;
    for (auto& c : a) c /= g;
    return a;
}

struct Lifter {
    ModP F;
    mpz_class pbig;
    int K;
    mpz_class q;  // p^K

    // F0 monic mod q; g0,h0 monic mod p with F0 = g0*h0 mod p.
    void lift_pair(const ZVec& F0, const PVec& g0, const PVec& h0, ZVec& g, ZVec& h) const {
        PVec s, t;
        F.xgcd(g0, h0, s, t);
        g = from_p(g0);
        h = from_p(h0);
        mpz_class pj = pbig;
        for (int j = 1; j < K; ++j) {
            mpz_class pj1 = pj * pbig;
            ZVec e = zmul(g, h);
            ZVec diff(std::max(F0.size(), e.size()), 0);
            for (size_t i = 0; i < F0.size(); ++i) diff[i] = F0[i];
            for (size_t i = 0; i < e.size(); ++i) diff[i] -= e[i];
            zmod(diff, pj1);
            for (auto& c : diff) c /= pj;
            PVec ep = F.from(diff);
            PVec tau = F.rem(F.mul(t, ep), g0);
            PVec sig = F.rem(F.mul(s, ep), h0);
            ZVec zt = from_p(tau), zs = from_p(sig);
            g.resize(std::max(g.size(), zt.size()), 0);
            h.resize(std::max(h.size(), zs.size()), 0);
            for (size_t i = 0; i < zt.size(); ++i) g[i] += pj * zt[i];
            for (size_t i = 0; i < zs.size(); ++i) h[i] += pj * zs[i];
            zmod(g, pj1);
            zmod(h, pj1);
            pj = pj1;
        }
    }

    void lift_all(const ZVec& F0, const std::vector<PVec>& facs, size_t lo, size_t hi,
                  std::vector<ZVec>& out) const {
        if (hi - lo == 1) {
            out[lo] = F0;
            return;
        }
        size_t mid = (lo + hi) / 2;
        PVec g0{1}, h0{1};
        for (size_t i = lo; i < mid; ++i) g0 = F.mul(g0, facs[i]);
        for (size_t i = mid; i < hi; ++i) h0 = F.mul(h0, facs[i]);
        ZVec g, h;
        lift_pair(F0, g0, h0, g, h);
        lift_all(g, facs, lo, mid, out);
        lift_all(h, facs, mid, hi, out);
    }
};

}  // namespace

std::vector<ZVec> zassenhaus(const ZVec& f_in) {
    ZVec f = f_in;
    ztrim(f);
    int n = static_cast<int>(f.size()) - 1;
    if (n <= 0) fail(ErrorKind::Precondition, "zassenhaus: degree must be positive");
    if (n == 1) return {f};
    if (n > kMaxDegree) fail(ErrorKind::FactorizationFailure, "degree " + std::to_string(n) + " above factoring cap");

    // choose the prime with the fewest modular factors
    u64 best_p = 0;
    size_t best_count = SIZE_MAX;
    int good = 0;
    for (u64 p = 5; p < 20000 && good < 6; ++p) {
        if (!is_prime_small(p)) continue;
        ModP F{p};
        mpz_class lcm = f.back() % static_cast<unsigned long>(p);
        if (lcm == 0) continue;
        PVec fp = F.from(f);
        if (F.gcd(fp, F.derivative(fp)).size() != 1) continue;
        ++good;
        size_t count = 0;
        for (auto& [g, d] : ddf(F, F.monic(fp))) count += (g.size() - 1) / d;
        if (count < best_count) {
            best_count = count;
            best_p = p;
        }
        if (count == 1) break;
    }
    if (best_p == 0) fail(ErrorKind::FactorizationFailure, "no suitable prime found");
    if (best_count == 1) return {f};

    ModP F{best_p};
    std::mt19937_64 rng(0x5eedULL + best_p);
    std::vector<PVec> facs;
    for (auto& [g, d] : ddf(F, F.monic(F.from(f)))) edf(F, g, d, rng, facs);
    std::sort(facs.begin(), facs.end());

    // coefficient bound for any factor times lc
    mpz_class norm2 = 0;
    for (auto& c : f) norm2 += c * c;
    mpz_class nrm;
    mpz_sqrt(nrm.get_mpz_t(), norm2.get_mpz_t());
    nrm += 1;
    mpz_class bound = 2 * abs(f.back()) * nrm;
    mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), n);
    Lifter L{F, mpz_class(static_cast<unsigned long>(best_p)), 1, 0};
    L.q = L.pbig;
    while (L.q <= bound) {
        L.q *= L.pbig;
        ++L.K;
    }
    // monic image of f mod q
    mpz_class lcinv;
    mpz_class lcmod = f.back() % L.q;
    if (lcmod < 0) lcmod += L.q;
    mpz_invert(lcinv.get_mpz_t(), lcmod.get_mpz_t(), L.q.get_mpz_t());
    ZVec F0 = f;
    for (auto& c : F0) c *= lcinv;
    zmod(F0, L.q);

    std::vector<ZVec> lifted(facs.size());
    L.lift_all(F0, facs, 0, facs.size(), lifted);

    std::vector<ZVec> result;
    std::vector<ZVec> rem = lifted;
    ZVec cur = f;
    size_t s = 1;
    while (2 * s <= rem.size()) {
        bool found = false;
        std::vector<size_t> idx(s);
        for (size_t i = 0; i < s; ++i) idx[i] = i;
        while (true) {
            mpz_class lc = cur.back();
            // constant term prune
            mpz_class c0 = lc;
            for (size_t i : idx) c0 = (c0 * (rem[i].empty() ? mpz_class(0) : rem[i][0])) % L.q;
            ZVec cand{c0};
            zsym(cand, L.q);
            bool plausible = true;
            mpz_class f0 = cur[0];
            if (f0 != 0) {
                mpz_class cc = cand.empty() ? mpz_class(0) : cand[0];
                if (cc == 0 || !mpz_divisible_p(mpz_class(lc * f0).get_mpz_t(), cc.get_mpz_t())) plausible = false;
            }
            if (plausible) {
                ZVec g{lc};
                for (size_t i : idx) {
                    g = zmul(g, rem[i]);
                    zmod(g, L.q);
                }
                zsym(g, L.q);
                g = zprimitive(g);
                ZVec quo;
                if (g.size() > 1 && zdivexact(cur, g, quo)) {
                    result.push_back(g);
                    cur = quo;
                    std::vector<ZVec> keep;
                    for (size_t i = 0; i < rem.size(); ++i)
                        if (std::find(idx.begin(), idx.end(), i) == idx.end()) keep.push_back(rem[i]);
                    rem = std::move(keep);
                    found = true;
                    break;
                }
            }
            // next combination
            int k = static_cast<int>(s) - 1;
            while (k >= 0 && idx[k] == rem.size() - s + k) --k;
            if (k < 0) break;
            ++idx[k];
            for (size_t j = k + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
        }
        if (!found) ++s;
    }
    if (cur.size() > 1) result.push_back(zprimitive(cur));
    return result;
}

ZVec primitive_integer_part(const QPoly& f) {
    mpz_class den = 1;
    for (auto& c : f.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    ZVec z(f.coeffs().size());
    for (size_t i = 0; i < z.size(); ++i) {
        Rational v = f.coeffs()[i] * den;
        z[i] = v.get_num();
    }
    return zprimitive(z);
}

static QPoly to_monic_q(const ZVec& z) {
    std::vector<Rational> c(z.begin(), z.end());
    return QPoly(std::move(c)).monic();
}

std::vector<std::pair<QPoly, int>> factor_rational(const QPoly& f) {
    if (f.is_zero()) fail(ErrorKind::ZeroPolynomial, "factor of zero polynomial");
    std::vector<std::pair<QPoly, int>> out;
    for (auto& [part, mult] : squarefree_decompose(f)) {
        ZVec z = primitive_integer_part(part);
        for (auto& g : zassenhaus(z)) out.emplace_back(to_monic_q(g), mult);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
        return a.first.coeffs() < b.first.coeffs();
    });
    return out;
}

bool is_irreducible_rational(const QPoly& f) {
    if (f.degree() <= 0) return false;
    auto fs = factor_rational(f);
    return fs.size() == 1 && fs[0].second == 1;
}

}  // namespace mwl
