// Shared models for the unit tests.
#pragma once

#include "mwl/error.hpp"
#include "mwl/heights.hpp"
#include "mwl/weierstrass.hpp"

namespace testex {

using namespace mwl;

inline Poly P(const FieldPtr& k, std::initializer_list<Rational> c, const std::string& var = "t") {
    std::vector<FieldElem> v;
    for (auto& a : c) v.emplace_back(k, a);
    return Poly(k, v, var);
}

// monic cubic in x given as a bivariate polynomial
inline WeierstrassModel model_from_cubic(const BiPoly& f, int chi = 1) {
    return WeierstrassModel::make(f.coeff_x(2), f.coeff_x(1), f.coeff_x(0), chi);
}

inline BiPoly X(const FieldPtr& k) { return BiPoly::var_x(k); }
inline BiPoly T(const FieldPtr& k) { return BiPoly::var_t(k); }
inline BiPoly C(const FieldPtr& k, const Rational& a) { return BiPoly::constant(FieldElem(k, a)); }

// y^2 = (x - t^2)(x - 3t + 2)(x + 3t + 2)
inline BiPoly line_conic1_quartic(const FieldPtr& k) {
    auto x = X(k), t = T(k);
    return (x - t * t) * (x - t * C(k, 3) + C(k, 2)) * (x + t * C(k, 3) + C(k, 2));
}

// y^2 = (x - t^2 + 2)(x^2 - 2x + t^2 - 4)
inline BiPoly line_conic2_quartic(const FieldPtr& k) {
    auto x = X(k), t = T(k);
    return (x - t * t + C(k, 2)) * (x * x - x * C(k, 2) + t * t - C(k, 4));
}

// y^2 = (x - t^2 - 1/2)(x^2 - x + t^2)
inline BiPoly line_conic2c_quartic(const FieldPtr& k) {
    auto x = X(k), t = T(k);
    return (x - t * t - C(k, Rational(1, 2))) * (x * x - x + t * t);
}

inline BiPoly eg3_quartic(const FieldPtr& k) {
    auto x = X(k), t = T(k);
    return x * x * x + (t * t * C(k, Rational(847, 64)) + t * C(k, Rational(12, 7))) * x * x +
           (t * t * C(k, Rational(6, 7)) + t * t * t * C(k, Rational(161, 16))) * x +
           t * t * t * t * C(k, Rational(35, 16)) + t * t * t * C(k, Rational(1, 7));
}

}  // namespace testex

namespace testex {
inline mwl::Rational R(long a, long b = 1) {
    mwl::Rational q(a, b);
    q.canonicalize();
    return q;
}
}  // namespace testex

namespace testex {

// s_L3 over y^2 = (x - t^2)(x - 3t + 2)(x + 3t + 2) needs sqrt2, s_L4 is rational
struct LineConic1 {
    ModelPtr model;
    SurfacePtr surface;
    Section sL3, sL4;
    FieldPtr k;
};

inline LineConic1 build_lc1() {
    auto Q = NumberField::rationals();
    auto setup = pencil_setup(line_conic1_quartic(Q));
    auto l3 = section_from_graph(setup.model, P(Q, {2, 1}));
    auto k = l3.model->field();
    auto l4 = section_from_graph(l3.model, P(k, {1}));
    if (!l4.embedding.is_identity()) fail(ErrorKind::InternalInconsistency, "L4 lift grew the field");
    LineConic1 r{l3.model, EllipticSurface::make(l3.model), l3.plus, l4.plus, k};
    return r;
}

}  // namespace testex
