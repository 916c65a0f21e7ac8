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

#include "mwl/divisibility.hpp"

#include "mwl/error.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

namespace mwl {

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

namespace {

long mod(const Integer& a, long p) {
    Integer r = a % p;
    if (r < 0) r += p;
    return r.get_si();
}

long mod(long a, long p) { return ((a % p) + p) % p; }

long inv_mod(long a, long p) {
    long r = 1, b = mod(a, p), e = p - 2;
    while (e > 0) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

// gram x = v over Q, gram nonsingular
std::vector<Rational> solve(RatMatrix a, std::vector<Rational> v) {
    size_t n = a.size();
    for (size_t c = 0; c < n; ++c) {
        size_t piv = c;
        while (piv < n && a[piv][c] == 0) ++piv;
        if (piv == n) fail(ErrorKind::NotInSpan, "Gram matrix is singular");
        std::swap(a[piv], a[c]);
        std::swap(v[piv], v[c]);
        for (size_t r = 0; r < n; ++r) {
            if (r == c || a[r][c] == 0) continue;
            Rational f = a[r][c] / a[c][c];
            for (size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
            v[r] -= f * v[c];
        }
    }
    for (size_t i = 0; i < n; ++i) v[i] /= a[i][i];
    return v;
}

Section combine(const ModelPtr& m, const std::vector<Section>& gens, const std::vector<Integer>& coeffs) {
    Section acc = Section::zero(m);
    for (size_t i = 0; i < gens.size(); ++i) {
        if (coeffs[i] == 0) continue;
        require(coeffs[i].fits_slong_p(), ErrorKind::Unsupported, "coordinate too large");
        acc = add(acc, smul(coeffs[i].get_si(), gens[i]));
    }
    return acc;
}

long torsion_size(const MWPresentation& pres) {
    long n = 1;
    for (auto& t : pres.torsion) n *= t.order;
    return n;
}

// rows of the mod p system: free coordinates, then torsion factors of order divisible by p
std::vector<std::vector<long>> system_mod_p(const MWPresentation& pres, const std::vector<Coordinates>& coords,
                                            long p) {
    std::vector<std::vector<long>> rows;
    size_t r = pres.basis.size();
    for (size_t i = 0; i < r; ++i) {
        std::vector<long> row;
        for (auto& c : coords) row.push_back(mod(c.free[i], p));
        rows.push_back(row);
    }
    for (size_t j = 0; j < pres.torsion.size(); ++j) {
        if (pres.torsion[j].order % p != 0) continue;
        std::vector<long> row;
        for (auto& c : coords) row.push_back(mod(c.torsion[j], p));
        rows.push_back(row);
    }
    return rows;
}

// reduced row echelon form mod p, returns pivot columns
std::vector<size_t> rref(std::vector<std::vector<long>>& a, size_t cols, long p) {
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t c = 0; c < cols && row < a.size(); ++c) {
        size_t piv = row;
        while (piv < a.size() && a[piv][c] == 0) ++piv;
        if (piv == a.size()) continue;
        std::swap(a[piv], a[row]);
        long iv = inv_mod(a[row][c], p);
        for (auto& e : a[row]) e = e * iv % p;
        for (size_t r = 0; r < a.size(); ++r) {
            if (r == row || a[r][c] == 0) continue;
            long f = a[r][c];
            for (size_t k = 0; k < a[r].size(); ++k) a[r][k] = mod(a[r][k] - f * a[row][k], p);
        }
        pivots.push_back(c);
        ++row;
    }
    a.resize(row);
    return pivots;
}

std::vector<std::vector<long>> kernel_mod_p(std::vector<std::vector<long>> a, size_t cols, long p) {
    auto pivots = rref(a, cols, p);
    std::vector<std::vector<long>> basis;
    for (size_t f = 0; f < cols; ++f) {
        if (std::find(pivots.begin(), pivots.end(), f) != pivots.end()) continue;
        std::vector<long> v(cols, 0);
        v[f] = 1;
        for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = mod(-a[i][f], p);
        basis.push_back(v);
    }
    return basis;
}

// can the prefix be completed to a kernel vector with all remaining entries nonzero?
// exact for the forced entries only; the DFS backtracks on the rest
bool prefix_feasible(const std::vector<std::vector<long>>& rows, const std::vector<long>& prefix, size_t n,
                     long p) {
    size_t k = prefix.size();
    size_t m = n - k;
    std::vector<std::vector<long>> a;
    for (auto& row : rows) {
        std::vector<long> e(m + 1, 0);
        long rhs = 0;
        for (size_t i = 0; i < k; ++i) rhs = mod(rhs - row[i] * prefix[i], p);
        for (size_t i = 0; i < m; ++i) e[i] = row[k + i];
        e[m] = rhs;
        a.push_back(e);
    }
    auto pivots = rref(a, m + 1, p);
    if (!pivots.empty() && pivots.back() == m) return false;  // inconsistent
    for (size_t i = 0; i < pivots.size(); ++i) {
        bool has_free = false;
        for (size_t c = pivots[i] + 1; c < m; ++c)
            if (a[i][c] != 0) has_free = true;
        if (!has_free && a[i][m] == 0) return false;  // entry forced to 0
    }
    return true;
}

std::string vec_str(const std::vector<long>& v) {
    std::ostringstream o;
    o << "(";
    for (size_t i = 0; i < v.size(); ++i) o << (i ? ", " : "") << v[i];
    o << ")";
    return o.str();
}

}  // namespace

MWPresentation make_presentation(const EllipticSurface& s, std::vector<std::string> names, std::vector<Section> basis,
                                 std::vector<TorsionGenerator> torsion, std::string label) {
    require(names.size() == basis.size(), ErrorKind::InvalidInput, "basis names and sections differ in length");
    for (auto& b : basis) require_same_model(b.model(), s.model_ptr());
    for (auto& t : torsion) {
        require_same_model(t.section.model(), s.model_ptr());
        require(t.order >= 1, ErrorKind::InvalidInput, "torsion order must be positive");
    }
    MWPresentation pres;
    pres.basis_names = std::move(names);
    pres.basis = std::move(basis);
    pres.torsion = std::move(torsion);
    pres.lattice_label = std::move(label);
    pres.gram = gram(s, pres.basis);

    std::vector<long> e(pres.torsion.size(), 0);
    while (true) {
        Section acc = Section::zero(s.model_ptr());
        for (size_t j = 0; j < e.size(); ++j)
            if (e[j]) acc = add(acc, smul(e[j], pres.torsion[j].section));
        pres.torsion_elements.emplace_back(e, acc);
        size_t j = 0;
        while (j < e.size() && ++e[j] == pres.torsion[j].order) e[j++] = 0;
        if (j == e.size()) break;
    }
    return pres;
}

PresentationReport verify_presentation(const EllipticSurface& s, const MWPresentation& pres) {
    PresentationReport rep;
    auto check = [&](std::string name, bool ok, std::string detail) {
        rep.checks.push_back({std::move(name), ok, std::move(detail)});
    };
    size_t r = pres.basis.size();

    bool nonzero = std::none_of(pres.basis.begin(), pres.basis.end(), [](auto& b) { return b.is_zero(); });
    check("basis sections nonzero", nonzero, "");

    // leading principal minors
    bool posdef = true;
    for (size_t k = 1; k <= r; ++k) {
        RatMatrix minor(k, std::vector<Rational>(k));
        for (size_t i = 0; i < k; ++i)
            for (size_t j = 0; j < k; ++j) minor[i][j] = pres.gram[i][j];
        if (determinant(minor) <= 0) posdef = false;
    }
    rep.det_gram = r ? determinant(pres.gram) : Rational(1);
    check("gram positive definite", posdef, "det = " + to_string(rep.det_gram));

    bool orders_ok = true;
    std::string order_detail;
    for (auto& t : pres.torsion) {
        auto o = torsion_order(s, t.section);
        bool ok = o && *o == t.order;
        if (!ok) {
            orders_ok = false;
            order_detail += t.name + " claimed " + std::to_string(t.order) + " found " +
                            (o ? std::to_string(*o) : std::string("infinite")) + "; ";
        }
    }
    check("torsion orders", orders_ok, order_detail);

    bool distinct = true;
    for (size_t i = 0; i < pres.torsion_elements.size() && distinct; ++i)
        for (size_t j = i + 1; j < pres.torsion_elements.size(); ++j)
            if (pres.torsion_elements[i].second == pres.torsion_elements[j].second) {
                distinct = false;
                break;
            }
    check("torsion generators independent", distinct,
          std::to_string(pres.torsion_elements.size()) + " elements enumerated");

    bool orth = true;
    for (auto& b : pres.basis)
        for (auto& t : pres.torsion)
            if (pairing(s, b, t.section) != 0) orth = false;
    check("basis orthogonal to torsion", orth, "");

    if (s.chi() == 1) {
        rep.expected_rank = s.rational_rank();
        check("rank", static_cast<int>(r) == rep.expected_rank,
              "basis size " + std::to_string(r) + ", expected " + std::to_string(rep.expected_rank));
        Rational fibers = 1;
        for (auto* f : s.reducible_fibers()) {
            long d = determinant(f->A);
            for (int i = 0; i < f->geometric_count(); ++i) fibers *= d < 0 ? -d : d;
        }
        long ts = torsion_size(pres);
        rep.predicted_det = Rational(ts * ts) / fibers;
        rep.predicted_det.canonicalize();
        rep.index_squared = rep.det_gram / rep.predicted_det;
        check("discriminant", rep.det_gram == rep.predicted_det,
              "det(gram) = " + to_string(rep.det_gram) + ", expected " + to_string(rep.predicted_det) +
                  ", ratio " + to_string(rep.index_squared));
    } else {
        check("discriminant", false, "no discriminant prediction for chi > 1");
    }
    rep.ok = std::all_of(rep.checks.begin(), rep.checks.end(), [](auto& c) { return c.ok; });
    return rep;
}

Coordinates coordinates_of(const EllipticSurface& s, const MWPresentation& pres, const Section& p) {
    require_same_model(p.model(), s.model_ptr());
    size_t r = pres.basis.size();
    std::vector<Rational> v(r);
    for (size_t i = 0; i < r; ++i) v[i] = pairing(s, p, pres.basis[i]);
    auto x = r ? solve(pres.gram, v) : std::vector<Rational>{};
    Coordinates c;
    for (auto& xi : x) {
        if (xi.get_den() != 1)
            fail(ErrorKind::NotInSpan, "non-integral coordinate " + to_string(xi) + " for " + p.to_string());
        c.free.push_back(xi.get_num());
    }
    Section rest = sub(p, combine(s.model_ptr(), pres.basis, c.free));
    for (auto& [e, t] : pres.torsion_elements) {
        if (t == rest) {
            c.torsion = e;
            return c;
        }
    }
    fail(ErrorKind::NotInSpan, "remainder is not in the presented torsion group: " + rest.to_string());
}

Section from_coordinates(const MWPresentation& pres, const Coordinates& c, const ModelPtr& m) {
    Section acc = combine(m, pres.basis, c.free);
    for (size_t j = 0; j < c.torsion.size(); ++j)
        if (c.torsion[j]) acc = add(acc, smul(c.torsion[j], pres.torsion[j].section));
    return acc;
}

namespace {

std::optional<Coordinates> divide_coordinates(const MWPresentation& pres, const Coordinates& c, long p) {
    Coordinates q;
    for (auto& x : c.free) {
        if (mod(x, p) != 0) return std::nullopt;
        q.free.push_back(x / p);
    }
    for (size_t j = 0; j < c.torsion.size(); ++j) {
        long n = pres.torsion[j].order;
        std::optional<long> e;
        for (long k = 0; k < n && !e; ++k)
            if (mod(p * k - c.torsion[j], n) == 0) e = k;
        if (!e) return std::nullopt;
        q.torsion.push_back(*e);
    }
    return q;
}

}  // namespace

bool p_divisible(const EllipticSurface& s, const MWPresentation& pres, const Section& p, long prime) {
    return divide_coordinates(pres, coordinates_of(s, pres, p), prime).has_value();
}

std::optional<Section> divide_by(const EllipticSurface& s, const MWPresentation& pres, const Section& p, long prime) {
    auto q = divide_coordinates(pres, coordinates_of(s, pres, p), prime);
    if (!q) return std::nullopt;
    Section s0 = from_coordinates(pres, *q, s.model_ptr());
    if (smul(prime, s0) != p) fail(ErrorKind::InternalInconsistency, "[p] s0 differs from the target section");
    return s0;
}

CoverResult cover_from_coordinates(const MWPresentation& pres, const std::vector<Coordinates>& coords, long prime) {
    require(prime > 2 && is_prime(prime), ErrorKind::Precondition, "p must be an odd prime");
    require(!coords.empty(), ErrorKind::Precondition, "no sections given");
    CoverResult res;
    res.prime = prime;
    size_t n = coords.size();
    res.matrix = system_mod_p(pres, coords, prime);
    res.kernel_basis = kernel_mod_p(res.matrix, n, prime);
    res.kernel_dimension = static_cast<int>(res.kernel_basis.size());

    std::ostringstream tr;
    tr << "p = " << prime << "; coordinate matrix mod p:";
    for (auto& row : res.matrix) tr << " " << vec_str(row);
    tr << "; kernel dimension " << res.kernel_dimension;
    for (auto& v : res.kernel_basis) tr << " " << vec_str(v);

    std::vector<long> prefix;
    std::function<bool()> dfs = [&]() -> bool {
        if (!prefix_feasible(res.matrix, prefix, n, prime)) return false;
        if (prefix.size() == n) return true;
        for (long a = 1; a < prime; ++a) {
            prefix.push_back(a);
            if (dfs()) return true;
            prefix.pop_back();
        }
        return false;
    };
    if (dfs()) {
        res.exists = true;
        res.multipliers = prefix;
        tr << "; least witness " << vec_str(prefix);
    } else {
        tr << "; no kernel vector with all entries in [1, p-1]";
    }
    res.trace = tr.str();
    return res;
}

bool exhaustive_cover_search(const MWPresentation& pres, const std::vector<Coordinates>& coords, long prime) {
    auto rows = system_mod_p(pres, coords, prime);
    size_t n = coords.size();
    std::vector<long> a(n, 1);
    while (true) {
        bool zero = true;
        for (auto& row : rows) {
            long acc = 0;
            for (size_t i = 0; i < n; ++i) acc = (acc + row[i] * a[i]) % prime;
            if (acc) {
                zero = false;
                break;
            }
        }
        if (zero) return true;
        size_t i = 0;
        while (i < n && ++a[i] == prime) a[i++] = 1;
        if (i == n) return false;
    }
}

CoverResult exists_cover_multipliers(const EllipticSurface& s, const MWPresentation& pres,
                                     const std::vector<Section>& cs, long prime) {
    require(!cs.empty(), ErrorKind::Precondition, "no sections given");
    for (size_t i = 0; i < cs.size(); ++i)
        for (size_t j = 0; j < cs.size(); ++j)
            if ((i != j && cs[i] == cs[j]) || cs[i] == negate(cs[j]))
                fail(ErrorKind::CommonComponent,
                     "sections " + std::to_string(i + 1) + " and " + std::to_string(j + 1) + " come from one curve");
    std::vector<Coordinates> coords;
    for (auto& c : cs) coords.push_back(coordinates_of(s, pres, c));
    return cover_from_coordinates(pres, coords, prime);
}

SmithForm smith_normal_form(const std::vector<std::vector<Integer>>& M, size_t cols) {
    auto a = M;
    size_t rows = a.size();
    std::vector<std::vector<Integer>> V(cols, std::vector<Integer>(cols, 0));
    for (size_t i = 0; i < cols; ++i) V[i][i] = 1;
    auto col_swap = [&](size_t i, size_t j) {
        for (auto& r : a) std::swap(r[i], r[j]);
        for (auto& r : V) std::swap(r[i], r[j]);
    };
    // column j -= q * column i
    auto col_sub = [&](size_t j, size_t i, const Integer& q) {
        for (auto& r : a) r[j] -= q * r[i];
        for (auto& r : V) r[j] -= q * r[i];
    };
    auto row_sub = [&](size_t j, size_t i, const Integer& q) {
        for (size_t k = 0; k < cols; ++k) a[j][k] -= q * a[i][k];
    };
    SmithForm out;
    for (size_t t = 0; t < std::min(rows, cols); ++t) {
        while (true) {
            // smallest nonzero entry into (t, t)
            size_t bi = rows, bj = cols;
            for (size_t i = t; i < rows; ++i)
                for (size_t j = t; j < cols; ++j)
                    if (a[i][j] != 0 && (bi == rows || abs(a[i][j]) < abs(a[bi][bj]))) bi = i, bj = j;
            if (bi == rows) break;
            std::swap(a[t], a[bi]);
            col_swap(t, bj);
            bool clean = true;
            for (size_t i = t + 1; i < rows; ++i) {
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), a[i][t].get_mpz_t(), a[t][t].get_mpz_t());
                row_sub(i, t, q);
                if (a[i][t] != 0) clean = false;
            }
            for (size_t j = t + 1; j < cols; ++j) {
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), a[t][j].get_mpz_t(), a[t][t].get_mpz_t());
                col_sub(j, t, q);
                if (a[t][j] != 0) clean = false;
            }
            if (!clean) continue;
            size_t bad = rows;
            for (size_t i = t + 1; i < rows && bad == rows; ++i)
                for (size_t j = t + 1; j < cols; ++j)
                    if (a[i][j] % a[t][t] != 0) {
                        bad = i;
                        break;
                    }
            if (bad == rows) break;
            row_sub(t, bad, -1);
        }
        if (a[t][t] == 0) break;
        if (a[t][t] < 0) {
            for (auto& r : a) r[t] = -r[t];
            for (auto& r : V) r[t] = -r[t];
        }
        out.invariants.push_back(a[t][t]);
    }
    out.V = V;
    return out;
}

OddPrimeAnalysis odd_prime_analysis_from_coordinates(const MWPresentation& pres,
                                                     const std::vector<Coordinates>& coords) {
    size_t n = coords.size();
    size_t r = pres.basis.size();
    std::vector<std::vector<Integer>> M(r, std::vector<Integer>(n));
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < n; ++j) M[i][j] = coords[j].free[i];
    auto snf = smith_normal_form(M, n);
    OddPrimeAnalysis out;
    out.invariant_factors = snf.invariants;
    size_t k = snf.invariants.size();
    for (size_t i = 0; i < n; ++i) {
        std::vector<Integer> row;
        for (size_t c = k; c < n; ++c) row.push_back(snf.V[i][c]);
        out.kernel_basis.push_back(row);
    }

    std::vector<Integer> bad;  // integers whose odd prime divisors must be checked directly
    if (k > 0) bad.push_back(snf.invariants.back());
    for (auto& t : pres.torsion) bad.push_back(t.order);
    if (k == n) {
        // kernel mod p is zero away from the invariant factors
        out.default_exists = false;
    } else {
        bool zero_row = false;
        for (auto& row : out.kernel_basis) {
            Integer g = 0;
            for (auto& e : row) g = gcd(g, e);
            if (g == 0)
                zero_row = true;
            else
                bad.push_back(g);
        }
        out.default_exists = !zero_row;
        if (out.default_exists)
            for (long p = 3; p <= static_cast<long>(n); p += 2) bad.push_back(p);
    }
    std::set<long> primes;
    for (auto& b : bad) {
        Integer m = abs(b);
        for (long p = 3; m > 1 && p <= 1000000; p += 2) {
            if (m % p != 0) continue;
            if (is_prime(p)) primes.insert(p);
            while (m % p == 0) m /= p;
        }
        while (m % 2 == 0 && m > 1) m /= 2;
        require(m == 1 || m.fits_slong_p(), ErrorKind::Unsupported, "exceptional prime too large");
        if (m > 1) primes.insert(m.get_si());
    }
    for (long p : primes) out.checked[p] = cover_from_coordinates(pres, coords, p).exists;
    return out;
}

OddPrimeAnalysis all_odd_p_analysis(const EllipticSurface& s, const MWPresentation& pres,
                                    const std::vector<Section>& cs) {
    require(!cs.empty(), ErrorKind::Precondition, "no sections given");
    std::vector<Coordinates> coords;
    for (auto& c : cs) coords.push_back(coordinates_of(s, pres, c));
    return odd_prime_analysis_from_coordinates(pres, coords);
}

bool OddPrimeAnalysis::exists_for(long p) const {
    auto it = checked.find(p);
    return it == checked.end() ? default_exists : it->second;
}

std::string OddPrimeAnalysis::describe() const {
    std::vector<long> except;
    for (auto& [p, e] : checked)
        if (e != default_exists) except.push_back(p);
    std::string s = default_exists ? "exists for all odd p" : "exists for no odd p";
    if (except.empty()) return s;
    s += " except {";
    for (size_t i = 0; i < except.size(); ++i) s += (i ? ", " : "") + std::to_string(except[i]);
    return s + "}";
}

}  // namespace mwl
