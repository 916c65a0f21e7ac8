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

#include "mwl/number_field.hpp"

#include <sstream>

#include "mwl/error.hpp"
#include "mwl/qfactor.hpp"

namespace mwl {

NumberField::NumberField(QPoly m, std::string gen) : modulus_(std::move(m)), gen_(std::move(gen)) {
    int n = degree();
    // a^n = -sum m_i a^i
    std::vector<Rational> cur(n);
    for (int i = 0; i < n; ++i) cur[i] = -modulus_.coeff(i);
    for (int k = 0; k <= n - 2; ++k) {
        table_.push_back(cur);
        // multiply by a
        Rational top = cur[n - 1];
        for (int i = n - 1; i > 0; --i) cur[i] = cur[i - 1];
        cur[0] = 0;
        if (top != 0)
            for (int i = 0; i < n; ++i) cur[i] -= top * modulus_.coeff(i);
    }
}

FieldPtr NumberField::rationals() {
    static FieldPtr q(new NumberField(QPoly(std::vector<Rational>{0, 1}), "a"));
    return q;
}

FieldPtr NumberField::make(const QPoly& modulus, std::string generator_name, bool check_irreducible) {
    if (modulus.degree() < 1) fail(ErrorKind::InvalidInput, "field modulus must have positive degree");
    QPoly m = modulus.monic();
    if (m.degree() == 1 && m.coeff(0) == 0) return rationals();
    if (m.degree() == 1) fail(ErrorKind::InvalidInput, "degree-1 modulus must be the variable itself");
    if (check_irreducible && !is_irreducible_rational(m))
        fail(ErrorKind::InvalidInput, "modulus " + m.to_string(generator_name) + " is reducible over Q");
    return FieldPtr(new NumberField(std::move(m), std::move(generator_name)));
}

std::string NumberField::describe() const {
    if (is_rationals()) return "Q";
    return "Q[" + gen_ + "]/(" + modulus_.to_string(gen_) + ")";
}

bool NumberField::same_as(const NumberField& o) const {
    return this == &o || (modulus_ == o.modulus_ && gen_ == o.gen_);
}

std::vector<Rational> NumberField::reduce(const std::vector<Rational>& c) const {
    int n = degree();
    std::vector<Rational> r(n);
    for (int i = 0; i < n && i < static_cast<int>(c.size()); ++i) r[i] = c[i];
    for (int k = n; k < static_cast<int>(c.size()); ++k) {
        if (c[k] == 0) continue;
        if (k - n >= static_cast<int>(table_.size())) {
            // fall back to long division for very long inputs
            QPoly rem = QPoly(c) % modulus_;
            std::vector<Rational> out(n);
            for (int i = 0; i < n; ++i) out[i] = rem.coeff(i);
            return out;
        }
        const auto& row = table_[k - n];
        for (int i = 0; i < n; ++i) r[i] += c[k] * row[i];
    }
    return r;
}

bool same_field(const FieldPtr& a, const FieldPtr& b) { return a == b || (a && b && a->same_as(*b)); }

void require_same_field(const FieldPtr& a, const FieldPtr& b) {
    if (!a || !b) fail(ErrorKind::FieldMismatch, "uninitialised field element");
    if (!same_field(a, b)) fail(ErrorKind::FieldMismatch, a->describe() + " vs " + b->describe());
}

FieldElem::FieldElem(FieldPtr k) : k_(std::move(k)), c_(k_->degree()) {}

FieldElem::FieldElem(FieldPtr k, const Rational& a) : k_(std::move(k)), c_(k_->degree()) { c_[0] = a; }

FieldElem::FieldElem(FieldPtr k, const std::vector<Rational>& coeffs) : k_(std::move(k)) {
    if (k_->is_rationals()) {
        // Q: evaluate at a = 0
        c_.assign(1, coeffs.empty() ? Rational(0) : coeffs[0]);
    } else {
        c_ = k_->reduce(coeffs);
    }
}

FieldElem FieldElem::generator(FieldPtr k) {
    if (k->is_rationals()) fail(ErrorKind::Precondition, "Q has no generator");
    std::vector<Rational> c(k->degree());
    c[1] = 1;
    return FieldElem(k, c);
}

bool FieldElem::is_zero() const {
    for (auto& a : c_)
        if (a != 0) return false;
    return true;
}

bool FieldElem::is_one() const {
    if (c_.empty() || c_[0] != 1) return false;
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

bool FieldElem::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

Rational FieldElem::rational_value() const {
    if (!is_rational()) fail(ErrorKind::Precondition, "element " + to_string() + " is not rational");
    return c_[0];
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
    FieldElem r = *this;
    r += o;
    return r;
}

FieldElem& FieldElem::operator+=(const FieldElem& o) {
    require_same_field(k_, o.k_);
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

FieldElem& FieldElem::operator-=(const FieldElem& o) {
    require_same_field(k_, o.k_);
    for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

FieldElem FieldElem::operator-(const FieldElem& o) const {
    FieldElem r = *this;
    r -= o;
    return r;
}

FieldElem FieldElem::operator-() const {
    FieldElem r = *this;
    for (auto& a : r.c_) a = -a;
    return r;
}

FieldElem FieldElem::operator*(const FieldElem& o) const {
    require_same_field(k_, o.k_);
    size_t n = c_.size();
    if (n == 1) return FieldElem(k_, c_[0] * o.c_[0]);
    std::vector<Rational> prod(2 * n - 1);
    for (size_t i = 0; i < n; ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < n; ++j)
            if (o.c_[j] != 0) prod[i + j] += c_[i] * o.c_[j];
    }
    return FieldElem(k_, prod);
}

FieldElem& FieldElem::operator*=(const FieldElem& o) {
    *this = *this * o;
    return *this;
}

FieldElem FieldElem::operator*(const Rational& a) const {
    FieldElem r = *this;
    for (auto& x : r.c_) x *= a;
    return r;
}

FieldElem FieldElem::inverse() const {
    if (is_zero()) fail(ErrorKind::DivisionByZero, "inverse of zero in " + k_->describe());
    if (c_.size() == 1) return FieldElem(k_, 1 / c_[0]);
    QPoly s, t;
    QPoly g = xgcd(QPoly(c_), k_->modulus(), s, t);
    if (g.degree() != 0) fail(ErrorKind::DivisionByZero, "non-invertible element, modulus not irreducible");
    return FieldElem(k_, s.coeffs());
}

FieldElem FieldElem::operator/(const FieldElem& o) const { return *this * o.inverse(); }

FieldElem FieldElem::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    FieldElem r(k_, Rational(1)), b = *this;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

bool FieldElem::operator==(const FieldElem& o) const {
    require_same_field(k_, o.k_);
    return c_ == o.c_;
}

int FieldElem::compare(const FieldElem& o) const {
    require_same_field(k_, o.k_);
    for (size_t i = 0; i < c_.size(); ++i) {
        int s = cmp(c_[i], o.c_[i]);
        if (s != 0) return s < 0 ? -1 : 1;
    }
    return 0;
}

int FieldElem::sign() const {
    for (auto& a : c_)
        if (a != 0) return sgn(a);
    return 0;
}

Rational FieldElem::norm() const {
    size_t n = c_.size();
    if (n == 1) return c_[0];
    // determinant of multiplication by this element
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
    FieldElem basis(k_, Rational(1));
    FieldElem a = FieldElem::generator(k_);
    for (size_t j = 0; j < n; ++j) {
        FieldElem col = *this * basis;
        for (size_t i = 0; i < n; ++i) m[i][j] = col.c_[i];
        basis *= a;
    }
    return determinant(std::move(m));
}

std::string FieldElem::to_string() const {
    if (is_rational()) return mwl::to_string(c_[0]);
    std::ostringstream os;
    os << "(";
    bool first = true;
    for (size_t i = c_.size(); i-- > 0;) {
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
        if (i >= 1) os << k_->generator_name();
        if (i >= 2) os << "^" << i;
    }
    os << ")";
    return os.str();
}

}  // namespace mwl
