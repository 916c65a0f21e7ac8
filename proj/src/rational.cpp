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

#include "mwl/rational.hpp"

#include <sstream>

#include "mwl/error.hpp"

namespace mwl {

std::string to_string(const Rational& q) { return q.get_str(); }
std::string to_string(const Integer& z) { return z.get_str(); }

Rational parse_rational(std::string_view s) {
    std::string str(s);
    Rational q;
    if (str.empty() || q.set_str(str, 10) != 0 || q.get_den() == 0)
        fail(ErrorKind::InvalidInput, "not a rational number: '" + str + "'");
    q.canonicalize();
    return q;
}

QPoly::QPoly(std::vector<Rational> c) : c_(std::move(c)) { trim(); }

QPoly QPoly::constant(const Rational& a) { return QPoly(std::vector<Rational>{a}); }

QPoly QPoly::monomial(const Rational& a, int k) {
    std::vector<Rational> c(k + 1);
    c[k] = a;
    return QPoly(std::move(c));
}

void QPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational QPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
    return c_[i];
}

const Rational& QPoly::leading() const {
    if (c_.empty()) fail(ErrorKind::ZeroPolynomial, "leading coefficient of zero polynomial");
    return c_.back();
}

QPoly QPoly::operator+(const QPoly& o) const {
    std::vector<Rational> r(std::max(c_.size(), o.c_.size()));
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return QPoly(std::move(r));
}

QPoly QPoly::operator-() const {
    QPoly r = *this;
    for (auto& a : r.c_) a = -a;
    return r;
}

QPoly QPoly::operator-(const QPoly& o) const { return *this + (-o); }

QPoly QPoly::operator*(const QPoly& o) const {
    if (is_zero() || o.is_zero()) return QPoly();
    std::vector<Rational> r(c_.size() + o.c_.size() - 1);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    }
    return QPoly(std::move(r));
}

QPoly QPoly::operator*(const Rational& a) const {
    if (a == 0) return QPoly();
    QPoly r = *this;
    for (auto& x : r.c_) x *= a;
    return r;
}

void QPoly::divmod(const QPoly& d, QPoly& q, QPoly& r) const {
    if (d.is_zero()) fail(ErrorKind::DivisionByZero, "polynomial division by zero");
    std::vector<Rational> rem = c_;
    int dd = d.degree();
    int n = degree();
    std::vector<Rational> quo(n >= dd ? n - dd + 1 : 0);
    Rational inv = 1 / d.leading();
    for (int k = n; k >= dd; --k) {
        if (rem[k] == 0) continue;
        Rational f = rem[k] * inv;
        quo[k - dd] = f;
        for (int j = 0; j <= dd; ++j) rem[k - dd + j] -= f * d.c_[j];
    }
    q = QPoly(std::move(quo));
    r = QPoly(std::move(rem));
}

QPoly QPoly::operator/(const QPoly& d) const {
    QPoly q, r;
    divmod(d, q, r);
    return q;
}

QPoly QPoly::operator%(const QPoly& d) const {
    QPoly q, r;
    divmod(d, q, r);
    return r;
}

QPoly QPoly::monic() const {
    if (is_zero()) return *this;
    return *this * (1 / leading());
}

QPoly QPoly::derivative() const {
    if (c_.size() <= 1) return QPoly();
    std::vector<Rational> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<long>(i);
    return QPoly(std::move(r));
}

Rational QPoly::eval(const Rational& x) const {
    Rational acc = 0;
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

std::string QPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rational& a = c_[i];
        if (a == 0) continue;
        Rational m = abs(a);
        if (!first) os << (a < 0 ? " - " : " + ");
        else if (a < 0) os << "-";
        first = false;
        if (i == 0 || m != 1) {
            os << mwl::to_string(m);
            if (i > 0) os << "*";
        }
        if (i >= 1) os << var;
        if (i >= 2) os << "^" << i;
    }
    return os.str();
}

QPoly gcd(QPoly a, QPoly b) {
    while (!b.is_zero()) {
        QPoly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

QPoly xgcd(const QPoly& a, const QPoly& b, QPoly& s, QPoly& t) {
    QPoly r0 = a, r1 = b;
    QPoly s0 = QPoly::constant(1), s1, t0, t1 = QPoly::constant(1);
    while (!r1.is_zero()) {
        QPoly q, r;
        r0.divmod(r1, q, r);
        QPoly s2 = s0 - q * s1, t2 = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) {
        s = QPoly();
        t = QPoly();
        return r0;
    }
    Rational inv = 1 / r0.leading();
    s = s0 * inv;
    t = t0 * inv;
    return r0 * inv;
}

std::vector<std::pair<QPoly, int>> squarefree_decompose(const QPoly& f) {
    std::vector<std::pair<QPoly, int>> out;
    if (f.degree() <= 0) return out;
    QPoly fm = f.monic();
    QPoly d = fm.derivative();
    QPoly a = gcd(fm, d);
    QPoly b = fm / a;
    QPoly c = d / a;
    QPoly e = c - b.derivative();
    int i = 1;
    while (b.degree() > 0) {
        QPoly g = gcd(b, e);
        if (g.degree() > 0) out.emplace_back(g, i);
        b = b / g;
        c = e / g;
        e = c - b.derivative();
        ++i;
    }
    return out;
}

QPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
    size_t n = xs.size();
    std::vector<Rational> dd = ys;
    for (size_t j = 1; j < n; ++j)
        for (size_t i = n - 1; i >= j; --i) {
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
            if (i == j) break;
        }
    QPoly r;
    for (size_t k = n; k-- > 0;) {
        r = r * QPoly(std::vector<Rational>{-xs[k], 1}) + QPoly::constant(dd[k]);
    }
    return r;
}

Rational determinant(std::vector<std::vector<Rational>> m) {
    size_t n = m.size();
    Rational det = 1;
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && m[piv][col] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != col) {
            std::swap(m[piv], m[col]);
            det = -det;
        }
        det *= m[col][col];
        Rational inv = 1 / m[col][col];
        for (size_t r = col + 1; r < n; ++r) {
            if (m[r][col] == 0) continue;
            Rational f = m[r][col] * inv;
            for (size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
        }
    }
    return det;
}

}  // namespace mwl
