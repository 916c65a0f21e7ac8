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

#include "expr.hpp"

#include <cctype>

#include "mwl/error.hpp"
#include "mwl/factor.hpp"

namespace mwl::cli {

namespace {

class Parser {
   public:
    Parser(const std::string& s, const FieldPtr& k) : s_(s), k_(k) {}

    BiPoly parse() {
        BiPoly v = expr();
        skip();
        if (pos_ != s_.size()) error("unexpected '" + s_.substr(pos_, 1) + "'");
        return v;
    }

   private:
    const std::string& s_;
    FieldPtr k_;
    size_t pos_ = 0;

    [[noreturn]] void error(const std::string& what) const {
        fail(ErrorKind::InvalidInput, "cannot parse '" + s_ + "' at " + std::to_string(pos_) + ": " + what);
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool accept(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    FieldElem as_constant(const BiPoly& v, const std::string& what) const {
        if (v.is_zero()) return FieldElem(k_);
        if (v.deg_x() > 0 || v.coeff_x(0).degree() > 0) error(what + " must be a constant");
        return v.coeff_x(0).coeff(0);
    }

    BiPoly expr() {
        BiPoly v = term();
        while (true) {
            if (accept('+'))
                v = v + term();
            else if (accept('-'))
                v = v - term();
            else
                return v;
        }
    }
    BiPoly term() {
        BiPoly v = unary();
        while (true) {
            if (accept('*')) {
                v = v * unary();
            } else if (accept('/')) {
                FieldElem c = as_constant(unary(), "divisor");
                if (c.is_zero()) error("division by zero");
                v = v * c.inverse();
            } else {
                return v;
            }
        }
    }
    BiPoly unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }
    BiPoly power() {
        BiPoly base = atom();
        if (!accept('^')) return base;
        skip();
        size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) error("exponent must be a nonnegative integer");
        int e = std::stoi(s_.substr(start, pos_ - start));
        return base.pow(e);
    }
    BiPoly atom() {
        skip();
        if (pos_ >= s_.size()) error("unexpected end");
        char c = s_[pos_];
        if (accept('(')) {
            BiPoly v = expr();
            if (!accept(')')) error("missing ')'");
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return BiPoly::constant(FieldElem(k_, Rational(mpz_class(s_.substr(start, pos_ - start)))));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            // the generator name may itself look like sqrt(2)
            const std::string& gen = k_->generator_name();
            if (k_->degree() > 1 && s_.compare(pos_, gen.size(), gen) == 0) {
                size_t end = pos_ + gen.size();
                bool boundary = end >= s_.size() || !(std::isalnum(static_cast<unsigned char>(s_[end])) || s_[end] == '_');
                if (boundary) {
                    pos_ = end;
                    return BiPoly::constant(FieldElem::generator(k_));
                }
            }
            size_t start = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
            std::string id = s_.substr(start, pos_ - start);
            if (id == "t") return BiPoly::var_t(k_);
            if (id == "x") return BiPoly::var_x(k_);
            if (id == "sqrt") {
                if (!accept('(')) error("sqrt needs an argument");
                FieldElem a = as_constant(expr(), "sqrt argument");
                if (!accept(')')) error("missing ')'");
                auto r = field_sqrt(a);
                if (!r) error("sqrt(" + a.to_string() + ") is not in " + k_->describe());
                return BiPoly::constant(*r);
            }
            error("unknown name '" + id + "'");
        }
        error("unexpected '" + std::string(1, c) + "'");
    }
};

}  // namespace

BiPoly parse_bipoly(const std::string& text, const FieldPtr& k) {
    Parser p(text, k);
    return p.parse();
}

Poly parse_poly(const std::string& text, const FieldPtr& k) {
    BiPoly b = parse_bipoly(text, k);
    if (b.deg_x() > 0) fail(ErrorKind::InvalidInput, "'" + text + "' must not involve x");
    return b.is_zero() ? Poly(k) : b.coeff_x(0);
}

FieldElem parse_constant(const std::string& text, const FieldPtr& k) {
    Poly p = parse_poly(text, k);
    if (p.degree() > 0) fail(ErrorKind::InvalidInput, "'" + text + "' must be a constant");
    return p.coeff(0);
}

Section parse_section_expr(const std::string& text, const std::map<std::string, Section>& named,
                           const ModelPtr& model) {
    Section acc = Section::zero(model);
    size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    bool first = true;
    while (true) {
        skip();
        if (i >= text.size()) break;
        long sign = 1;
        if (text[i] == '+' || text[i] == '-') {
            sign = text[i] == '-' ? -1 : 1;
            ++i;
            skip();
        } else if (!first) {
            fail(ErrorKind::InvalidInput, "expected + or - in '" + text + "'");
        }
        long n = 1;
        if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            size_t start = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            n = std::stol(text.substr(start, i - start));
            skip();
            if (i < text.size() && text[i] == '*') {
                ++i;
                skip();
            } else {
                fail(ErrorKind::InvalidInput, "expected '*' after the multiplier in '" + text + "'");
            }
        }
        size_t start = i;
        while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_' || text[i] == '\''))
            ++i;
        std::string name = text.substr(start, i - start);
        if (name == "O" && !named.count("O")) {
            first = false;
            continue;
        }
        auto it = named.find(name);
        if (it == named.end()) fail(ErrorKind::InvalidInput, "unknown section '" + name + "' in '" + text + "'");
        acc = add(acc, smul(sign * n, it->second));
        first = false;
    }
    if (first) fail(ErrorKind::InvalidInput, "empty section expression");
    return acc;
}

}  // namespace mwl::cli
