// Weierstrass invariants, minimal models, Kodaira classification.

#include <random>

#include "doctest.h"
#include "examples.hpp"
#include "mwl/error.hpp"
#include "mwl/kodaira.hpp"

using namespace mwl;
using namespace testex;

namespace {

FieldPtr Q() { return NumberField::rationals(); }

// cofactor expansion, independent of the library determinant
long cofactor_det(const IntMatrix& m) {
    size_t n = m.size();
    if (n == 1) return m[0][0];
    long d = 0;
    for (size_t j = 0; j < n; ++j) {
        if (m[0][j] == 0) continue;
        IntMatrix sub;
        for (size_t i = 1; i < n; ++i) {
            std::vector<long> row;
            for (size_t c = 0; c < n; ++c)
                if (c != j) row.push_back(m[i][c]);
            sub.push_back(row);
        }
        d += (j % 2 ? -1 : 1) * m[0][j] * cofactor_det(sub);
    }
    return d;
}

IntMatrix negate(const IntMatrix& a) {
    IntMatrix r = a;
    for (auto& row : r)
        for (auto& x : row) x = -x;
    return r;
}

Poly rand_poly(std::mt19937& rng, int deg) {
    std::uniform_int_distribution<int> d(-4, 4);
    std::vector<Rational> c;
    for (int i = 0; i <= deg; ++i) c.emplace_back(d(rng));
    return Poly::from_rational(Q(), QPoly(c));
}

}  // namespace

TEST_CASE("discriminant of y^2 = x^3 + t") {
    auto k = Q();
    auto m = WeierstrassModel::make(Poly(k), Poly(k), P(k, {0, 1}));
    auto inv = invariants(m);
    // oracle for a2 = 0: Delta = -16 (4 a4^3 + 27 a6^2)
    CHECK(inv.delta == P(k, {0, 0, -432}));
    CHECK(inv.c4.is_zero());
}

TEST_CASE("invariant identities on random models") {
    std::mt19937 rng(1);
    for (int trial = 0; trial < 15; ++trial) {
        Poly a2 = rand_poly(rng, 2), a4 = rand_poly(rng, 4), a6 = rand_poly(rng, 6);
        if (invariants(WeierstrassModel::make(Poly(Q()), Poly(Q()), Poly::constant(Q(), 1))).delta.is_zero()) continue;
        WeierstrassModel m;
        try {
            m = WeierstrassModel::make(a2, a4, a6);
        } catch (const Error&) {
            continue;
        }
        auto inv = invariants(m);
        CHECK(inv.c4 * inv.c4 * inv.c4 - inv.c6 * inv.c6 == inv.delta * Rational(1728));
        // x -> x + r leaves c4, c6, Delta unchanged
        Poly r = rand_poly(rng, 1);
        Poly na2 = a2 + r * Rational(3);
        Poly na4 = a4 + a2 * r * Rational(2) + r * r * Rational(3);
        Poly na6 = a6 + a4 * r + a2 * r * r + r * r * r;
        auto inv2 = invariants(WeierstrassModel::make(na2, na4, na6, 2));
        CHECK(inv2.c4 == inv.c4);
        CHECK(inv2.c6 == inv.c6);
        CHECK(inv2.delta == inv.delta);
    }
}

TEST_CASE("discriminant of a product of three roots") {
    auto k = Q();
    auto m = model_from_cubic(line_conic1_quartic(k));
    Poly t = Poly::variable(k);
    Poly e1 = t * t, e2 = t * Rational(3) - Poly::constant(k, 2), e3 = t * Rational(-3) - Poly::constant(k, 2);
    Poly v = (e1 - e2) * (e1 - e3) * (e2 - e3);
    CHECK(invariants(m).delta == v * v * Rational(16));
}

TEST_CASE("degree bound and singular models") {
    auto k = Q();
    CHECK_THROWS_AS(WeierstrassModel::make(P(k, {0, 0, 0, 1}), Poly(k), P(k, {1})), Error);
    CHECK_THROWS_AS(WeierstrassModel::make(Poly(k), Poly(k), Poly(k)), Error);
}

TEST_CASE("minimalization") {
    auto k = Q();
    Place v = Place::finite(P(k, {0, 1}));
    // y^2 = x^3 + t^12 (t + 1)
    std::vector<Rational> c(14);
    c[12] = 1;
    c[13] = 1;
    auto m = WeierstrassModel::make(Poly(k), Poly(k), Poly::from_rational(k, QPoly(c)), 3);
    CHECK_FALSE(is_minimal_at(m, v));
    auto r = minimalize_at(m, v);
    CHECK(r.exponent == 2);
    CHECK(r.model.a6() == P(k, {1, 1}));
    CHECK(minimalize_at(r.model, v).exponent == 0);

    // non-minimal only after a translation: x -> x + 1 applied to y^2 = x^3 + t^4 x + t^6 (t + 1)
    Poly a4 = P(k, {0, 0, 0, 0, 1}), a6 = P(k, {0, 0, 0, 0, 0, 0, 1, 1});
    Poly one = Poly::constant(k, 1);
    auto shifted = WeierstrassModel::make(one * Rational(3), a4 + one * Rational(3), a6 + a4 + one, 2);
    auto r2 = minimalize_at(shifted, v);
    CHECK(r2.exponent == 1);
    CHECK(invariants(r2.model).c4 * P(k, {0, 0, 0, 0, 1}) == invariants(shifted).c4);

    auto lc1 = model_from_cubic(line_conic1_quartic(k));
    for (long a : {0, 1, -1, 2, -2}) CHECK(minimalize_at(lc1, Place::finite(P(k, {Rational(-a), 1}))).exponent == 0);
}

TEST_CASE("Kodaira types of standard local models") {
    auto k = Q();
    Place v = Place::finite(P(k, {0, 1}));
    auto t = [&](int e) {
        std::vector<Rational> c(e + 1);
        c[e] = 1;
        return Poly::from_rational(k, QPoly(c));
    };
    Poly z(k);
    struct Case {
        Poly a2, a4, a6;
        std::string expect;
    };
    std::vector<Case> cases = {
        {Poly::constant(k, 1), z, t(1), "I1"},
        {Poly::constant(k, 1), z, t(5), "I5"},
        {z, z, t(1), "II"},
        {z, t(1), z, "III"},
        {z, z, t(2), "IV"},
        {z, t(2) * Rational(-1), z, "I0*"},
        {t(1), z, t(5), "I2*"},
        {z, z, t(4), "IV*"},
        {z, t(3), z, "III*"},
        {z, z, t(5), "II*"},
    };
    for (auto& cs : cases) {
        auto m = WeierstrassModel::make(cs.a2, cs.a4, cs.a6, 2);
        CHECK(classify_place(m, v).type.name() == cs.expect);
    }
    // translation does not change the type
    auto m = WeierstrassModel::make(Poly::constant(k, 3), t(2) * Rational(-1) + Poly::constant(k, 3),
                                    t(2) * Rational(-1) + Poly::constant(k, 1), 2);
    CHECK(classify_place(m, Place::finite(P(k, {0, 1}))).type.name() == "I0*");
}

TEST_CASE("intersection matrices") {
    std::vector<std::string> types = {"I2", "I3", "I6", "I0*", "I1*", "I4*", "III", "IV", "IV*", "III*", "II*"};
    for (auto& s : types) {
        auto ty = parse_kodaira(s);
        auto A = intersection_matrix(ty);
        CHECK(static_cast<int>(A.size()) == ty.components() - 1);
        CHECK(cofactor_det(negate(A)) == ty.component_group_order());
        CHECK(determinant(negate(A)) == ty.component_group_order());
    }
    CHECK_THROWS_AS(intersection_matrix(parse_kodaira("II")), Error);
    CHECK_THROWS_AS(intersection_matrix(parse_kodaira("I1")), Error);
    // E8 determinant 1, D4 determinant 4
    CHECK(cofactor_det(negate(intersection_matrix(parse_kodaira("II*")))) == 1);
    CHECK(cofactor_det(negate(intersection_matrix(parse_kodaira("I0*")))) == 4);

    for (int n = 2; n <= 7; ++n) {
        auto C = contribution_matrix({KodairaFamily::I, n});
        for (int i = 1; i < n; ++i) CHECK(C[i - 1][i - 1] == R(i * (n - i), n));
    }
    for (int n = 0; n <= 4; ++n) {
        auto C = contribution_matrix({KodairaFamily::IStar, n});
        CHECK(C[0][0] == 1);
        CHECK(C[1][1] == 1 + R(n, 4));
        CHECK(C[2][2] == 1 + R(n, 4));
    }
    CHECK(contribution_matrix(parse_kodaira("IV"))[0][0] == Rational(2, 3));
    CHECK(contribution_matrix(parse_kodaira("III"))[0][0] == Rational(1, 2));
    CHECK(contribution_matrix(parse_kodaira("IV*"))[0][0] == Rational(4, 3));
    CHECK(contribution_matrix(parse_kodaira("IV*"))[1][1] == Rational(4, 3));
    CHECK(contribution_matrix(parse_kodaira("III*"))[0][0] == Rational(3, 2));
}

TEST_CASE("fiber configurations of the example surfaces") {
    auto k = Q();
    auto s1 = EllipticSurface::make(std::make_shared<WeierstrassModel>(model_from_cubic(line_conic1_quartic(k))));
    auto red = s1->reducible_fibers();
    CHECK(red.size() == 6);
    for (auto* f : red) CHECK(f->type.name() == "I2");
    CHECK(s1->euler_total() == 12);
    CHECK(s1->rational_rank() == 2);

    auto s2 = EllipticSurface::make(std::make_shared<WeierstrassModel>(model_from_cubic(line_conic2_quartic(k))));
    int i2 = 0, i1 = 0;
    for (auto& f : s2->singular_fibers()) {
        if (f.type.name() == "I2") i2 += f.geometric_count();
        if (f.type.name() == "I1") i1 += f.geometric_count();
    }
    CHECK(i2 == 5);
    CHECK(i1 == 2);
    CHECK(s2->rational_rank() == 3);

    auto s3 = EllipticSurface::make(std::make_shared<WeierstrassModel>(model_from_cubic(eg3_quartic(k))));
    bool i0s = false, i2inf = false;
    for (auto& f : s3->singular_fibers()) {
        if (f.type.name() == "I0*" && !f.place.is_infinity() && f.place.pi == P(k, {0, 1})) i0s = true;
        if (f.type.name() == "I2" && f.place.is_infinity()) i2inf = true;
    }
    CHECK(i0s);
    CHECK(i2inf);
    CHECK(s3->rational_rank() == 3);

    // constant coefficients are not an elliptic surface
    auto cst = std::make_shared<WeierstrassModel>(WeierstrassModel::make(Poly(k), Poly::constant(k, -1), Poly(k)));
    CHECK_THROWS_AS(EllipticSurface::make(cst), Error);
}
