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

#include "mwl/bipoly.hpp"

#include <sstream>

#include "mwl/error.hpp"

namespace mwl {

BiPoly::BiPoly(FieldPtr k) : k_(std::move(k)) {}

BiPoly::BiPoly(FieldPtr k, std::vector<Poly> cx) : k_(std::move(k)), c_(std::move(cx)) {
    for (auto& p : c_) {
        require_same_field(k_, p.field());
        if (p.var() != "t") fail(ErrorKind::VariableMismatch, "bivariate coefficients must be in t");
    }
    trim();
}

void BiPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

BiPoly BiPoly::constant(const FieldElem& a) { return BiPoly(a.field(), {Poly::constant(a)}); }
BiPoly BiPoly::from_t(const Poly& p) { return BiPoly(p.field(), {p.with_var("t")}); }
BiPoly BiPoly::var_t(FieldPtr k) { return from_t(Poly::variable(k)); }
BiPoly BiPoly::var_x(FieldPtr k) { return BiPoly(k, {Poly(k), Poly::constant(k, 1)}); }

int BiPoly::deg_t() const {
    int d = -1;
    for (auto& p : c_) d = std::max(d, p.degree());
    return d;
}

int BiPoly::total_degree() const {
    int d = -1;
    for (size_t i = 0; i < c_.size(); ++i)
        if (!c_[i].is_zero()) d = std::max(d, static_cast<int>(i) + c_[i].degree());
    return d;
}

Poly BiPoly::coeff_x(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return Poly(k_);
    return c_[i];
}

FieldElem BiPoly::coeff(int i_t, int j_x) const { return coeff_x(j_x).coeff(i_t); }

BiPoly BiPoly::operator+(const BiPoly& o) const {
    require_same_field(k_, o.k_);
    std::vector<Poly> r(std::max(c_.size(), o.c_.size()), Poly(k_));
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] = r[i] + o.c_[i];
    return BiPoly(k_, std::move(r));
}

BiPoly BiPoly::operator-() const {
    BiPoly r = *this;
    for (auto& p : r.c_) p = -p;
    return r;
}

BiPoly BiPoly::operator-(const BiPoly& o) const { return *this + (-o); }

BiPoly BiPoly::operator*(const BiPoly& o) const {
    require_same_field(k_, o.k_);
    if (is_zero() || o.is_zero()) return BiPoly(k_);
    std::vector<Poly> r(c_.size() + o.c_.size() - 1, Poly(k_));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] = r[i + j] + c_[i] * o.c_[j];
    return BiPoly(k_, std::move(r));
}

BiPoly BiPoly::operator*(const FieldElem& a) const {
    BiPoly r = *this;
    for (auto& p : r.c_) p = p * a;
    r.trim();
    return r;
}

BiPoly BiPoly::pow(int e) const {
    BiPoly r = constant(FieldElem(k_, Rational(1)));
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
}

bool BiPoly::operator==(const BiPoly& o) const {
    if (c_.size() != o.c_.size()) return false;
    for (size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != o.c_[i]) return false;
    return true;
}

Poly BiPoly::eval_x(const Poly& c) const {
    Poly cc = c.with_var("t");
    Poly acc(k_);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * cc + c_[i];
    return acc;
}

RationalFunction BiPoly::eval_x(const RationalFunction& c) const {
    RationalFunction acc{Poly(k_)};
    for (size_t i = c_.size(); i-- > 0;) acc = acc * c + RationalFunction(c_[i]);
    return acc;
}

Poly BiPoly::at_t(const FieldElem& t0) const {
    std::vector<FieldElem> r;
    for (auto& p : c_) r.push_back(p.eval(t0));
    return Poly(k_, std::move(r), "x");
}

BiPoly BiPoly::swapped() const {
    int dt = deg_t();
    std::vector<Poly> r;
    for (int i = 0; i <= dt; ++i) {
        std::vector<FieldElem> col;
        for (auto& p : c_) col.push_back(p.coeff(i));
        r.emplace_back(k_, std::move(col));
    }
    return BiPoly(k_, std::move(r));
}

std::vector<FieldElem> BiPoly::top_form() const {
    int d = total_degree();
    std::vector<FieldElem> r(d + 1, FieldElem(k_));
    for (int j = 0; j <= deg_x(); ++j) {
        int i = d - j;
        r[i] = c_[j].coeff(i);
    }
    return r;
}

std::optional<Poly> BiPoly::graph_function() const {
    if (deg_x() != 1 || c_[1].degree() != 0) return std::nullopt;
    return -c_[0] * c_[1].leading().inverse();
}

BiPoly BiPoly::map(const FieldEmbedding& e) const {
    std::vector<Poly> r;
    for (auto& p : c_) r.push_back(e(p));
    return BiPoly(e.target, std::move(r));
}

std::string BiPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int j = deg_x(); j >= 0; --j) {
        if (c_[j].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        if (j == 0) {
            os << "(" << c_[j].to_string() << ")";
            continue;
        }
        if (!(c_[j].degree() == 0 && c_[j].leading().is_one())) os << "(" << c_[j].to_string() << ")*";
        os << "x";
        if (j > 1) os << "^" << j;
    }
    return os.str();
}

Poly resultant(const BiPoly& f, const BiPoly& g, Variable eliminate) {
    require_same_field(f.field(), g.field());
    if (eliminate == Variable::T) return resultant(f.swapped(), g.swapped(), Variable::X).with_var("x");
    const FieldPtr& k = f.field();
    if (f.is_zero() || g.is_zero()) return Poly(k);
    int D = f.deg_x() * std::max(g.deg_t(), 0) + g.deg_x() * std::max(f.deg_t(), 0);
    Poly lf = f.coeff_x(f.deg_x()), lg = g.coeff_x(g.deg_x());
    std::vector<FieldElem> xs, ys;
    for (long i = 0; static_cast<int>(xs.size()) <= D; ++i) {
        FieldElem t0(k, Rational(i));
        if (lf.eval(t0).is_zero() || lg.eval(t0).is_zero()) continue;
        xs.push_back(t0);
        ys.push_back(resultant(f.at_t(t0), g.at_t(t0)));
    }
    return interpolate(k, xs, ys);
}

}  // namespace mwl
