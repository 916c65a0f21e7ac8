// Group law, graph lifts, heights on the example surfaces.

#include <random>

#include "doctest.h"
#include "examples.hpp"
#include "mwl/error.hpp"
#include "mwl/heights.hpp"

using namespace mwl;
using namespace testex;

namespace {

bool same_up_to_sign(const Section& s, const RationalFunction& x, const RationalFunction& y) {
    return s.x() == x && (s.y() == y || s.y() == -y);
}

RationalFunction rf(const Poly& p) { return RationalFunction(p); }

}  // namespace

TEST_CASE("graph lifts and duplication on the first line-conic surface") {
    auto lc = build_lc1();
    auto k = lc.k;
    CHECK(k->degree() == 2);
    FieldElem r2 = *field_sqrt(FieldElem(k, Rational(2)));
    Poly t = Poly::variable(k);
    // s_L3 = (t + 2, 2 sqrt2 (t - 2)(t + 1))
    CHECK(same_up_to_sign(lc.sL3, rf(t + Poly::constant(k, 2)),
                          rf((t - Poly::constant(k, 2)) * (t + Poly::constant(k, 1)) * (r2 * Rational(2)))));
    CHECK(same_up_to_sign(lc.sL4, rf(Poly::constant(k, 1)),
                          rf((t - Poly::constant(k, 1)) * (t + Poly::constant(k, 1)) * Rational(3))));
    Section d3 = smul(2, lc.sL3);
    CHECK(same_up_to_sign(d3, rf(t * t * R(9, 8)), rf(t * (t * t * Rational(9) - Poly::constant(k, 16)) * (r2 * R(1, 32)))));
    Section d4 = smul(2, lc.sL4);
    CHECK(same_up_to_sign(d4, rf(t * t + Poly::constant(k, R(1, 4))), rf(t * t * R(1, 2) - Poly::constant(k, R(9, 8)))));
    CHECK(is_plus(lc.sL3));
    CHECK_FALSE(is_plus(negate(lc.sL3)));
}

TEST_CASE("group law properties") {
    auto lc = build_lc1();
    auto tors = two_torsion(lc.model);
    REQUIRE(tors.size() == 3);
    std::vector<Section> gens = {lc.sL3, lc.sL4, tors[0], tors[1]};
    std::mt19937 rng(42);
    std::uniform_int_distribution<int> d(-1, 1);
    auto rnd = [&]() {
        Section s = Section::zero(lc.model);
        for (auto& g : gens) s = add(s, smul(d(rng), g));
        return s;
    };
    for (int i = 0; i < 12; ++i) {
        Section a = rnd(), b = rnd(), c = rnd();
        CHECK(add(add(a, b), c) == add(a, add(b, c)));
        CHECK(add(a, b) == add(b, a));
        CHECK(add(a, negate(a)).is_zero());
        if (!a.is_zero()) CHECK(on_curve(*lc.model, a.x(), a.y()));
    }
    CHECK(smul(5, lc.sL3) == add(smul(2, lc.sL3), smul(3, lc.sL3)));
    CHECK(smul(-3, lc.sL4) == negate(smul(3, lc.sL4)));
    CHECK(smul(2, tors[0]).is_zero());
}

TEST_CASE("two torsion") {
    auto Q = NumberField::rationals();
    auto setup = pencil_setup(line_conic1_quartic(Q));
    auto tors = two_torsion(setup.model);
    REQUIRE(tors.size() == 3);
    std::vector<Poly> xs;
    for (auto& s : tors) {
        CHECK(s.y().is_zero());
        xs.push_back(s.x().num());
    }
    Poly t = Poly::variable(Q);
    CHECK(std::find(xs.begin(), xs.end(), t * t) != xs.end());
    CHECK(std::find(xs.begin(), xs.end(), t * Rational(3) - Poly::constant(Q, 2)) != xs.end());
    CHECK(std::find(xs.begin(), xs.end(), t * Rational(-3) - Poly::constant(Q, 2)) != xs.end());
    auto setup2 = pencil_setup(line_conic2_quartic(Q));
    CHECK(two_torsion(setup2.model).size() == 1);
}

TEST_CASE("heights on the first line-conic surface") {
    auto lc = build_lc1();
    const auto& S = *lc.surface;
    CHECK(height(S, lc.sL3) == R(1, 2));
    CHECK(height(S, lc.sL4) == R(1, 2));
    CHECK(pairing(S, lc.sL3, lc.sL4) == 0);
    CHECK(height(S, smul(2, lc.sL3)) == 2);
    CHECK(height(S, smul(3, lc.sL4)) == R(9, 2));
    for (auto& tau : two_torsion(lc.model)) {
        CHECK(height(S, tau) == 0);
        CHECK(torsion_order(S, tau) == 2);
    }
    CHECK_FALSE(torsion_order(S, lc.sL3).has_value());
    auto rep = height_report(S, lc.sL3);
    CHECK(rep.sO == 0);
    CHECK(rep.hits.size() == 3);
    for (auto& h : rep.hits) CHECK(h.component == 1);
    // Shioda's phi gives the height back
    for (auto& s : {lc.sL3, lc.sL4, smul(2, lc.sL3), add(lc.sL3, lc.sL4)}) {
        auto phi = shioda_phi(S, s);
        CHECK(formal_minus_self_intersection(S, s, phi) == height(S, s));
    }
    auto phi = shioda_phi(S, lc.sL3);
    CHECK(phi.fiber == -1);
    CHECK(phi.zero_section == -1);
    // bilinearity
    Section a = lc.sL3, b = lc.sL4, c = smul(2, lc.sL4);
    CHECK(pairing(S, add(a, b), c) == pairing(S, a, c) + pairing(S, b, c));
    CHECK(pairing(S, a, c) == pairing(S, c, a));
    CHECK_THROWS_AS(intersection_with_zero(S, Section::zero(lc.model)), Error);
}

TEST_CASE("second line-conic surface, duplications") {
    auto Q = NumberField::rationals();
    auto setup = pencil_setup(line_conic2_quartic(Q));
    // L1: x = t needs sqrt(-2)
    auto l1 = section_from_graph(setup.model, P(Q, {0, 1}));
    auto k = l1.model->field();
    FieldElem sm2 = *field_sqrt(FieldElem(k, Rational(-2)));
    Poly t = Poly::variable(k);
    CHECK(same_up_to_sign(l1.plus, rf(t), rf((t + Poly::constant(k, 1)) * (t - Poly::constant(k, 2)) * sm2)));
    CHECK(same_up_to_sign(smul(2, l1.plus), rf(t * t * R(1, 2) - Poly::constant(k, 2)),
                          rf(t * (t * t - Poly::constant(k, 4)) * (sm2 * R(-1, 4)))));
    // L2: x = 3t - 4 needs sqrt(-10)
    auto l2 = section_from_graph(l1.model, P(k, {-4, 3}));
    auto k2 = l2.model->field();
    CHECK(k2->degree() == 4);
    FieldElem sm10 = *field_sqrt(FieldElem(k2, Rational(-10)));
    Poly t2 = Poly::variable(k2);
    CHECK(same_up_to_sign(smul(2, l2.plus), rf(t2 * t2 * R(1, 10) - Poly::constant(k2, 2)),
                          rf(t2 * (t2 * t2 + Poly::constant(k2, 20)) * (sm10 * R(3, 100)))));
    // type (b): x = -1
    auto lb = section_from_graph(l2.model, P(k2, {-1}));
    auto k3 = lb.model->field();
    CHECK(k3->degree() == 8);
    FieldElem i = *field_sqrt(FieldElem(k3, Rational(-1)));
    Poly t3 = Poly::variable(k3);
    CHECK(same_up_to_sign(smul(2, lb.plus), rf(t3 * t3 - Poly::constant(k3, R(17, 4))),
                          rf((t3 * t3 * Rational(4) - Poly::constant(k3, 19)) * (i * R(3, 8)))));
    auto S = EllipticSurface::make(lb.model);
    Section s1 = l1.plus.map(l2.embedding.then(lb.embedding), lb.model);
    Section s2 = l2.plus.map(lb.embedding, lb.model);
    CHECK(height(*S, s1) == R(1, 2));
    CHECK(height(*S, s2) == R(1, 2));
    CHECK(pairing(*S, s1, s2) == 0);
}

TEST_CASE("line-conic type (c) duplication") {
    auto K = NumberField::make(QPoly(std::vector<Rational>{-2, 0, 1}), "r");
    auto setup = pencil_setup(line_conic2c_quartic(K));
    FieldElem r(K, std::vector<Rational>{0, 1});
    auto l1 = section_from_graph(setup.model, Poly::constant(r * R(1, 2)));
    auto k = l1.model->field();
    CHECK(k->degree() == 4);
    Poly t = Poly::variable(k);
    FieldElem c = *field_sqrt(FieldElem(k, R(-1, 2)));
    CHECK(same_up_to_sign(smul(2, l1.plus), rf(t * t), rf(t * t * c)));
}

TEST_CASE("eg-3 surface") {
    auto K = NumberField::make(QPoly(std::vector<Rational>{1, 1, 1}), "z");
    FieldElem z(K, std::vector<Rational>{0, 1});
    auto setup = pencil_setup(eg3_quartic(K));
    auto l1 = section_from_graph(setup.model, P(K, {0, -1}));
    auto k = l1.model->field();
    CHECK(k->degree() == 4);
    FieldElem zk = l1.embedding(z);
    FieldElem lam2 = (zk - FieldElem(k, Rational(2))) * R(1, 7);
    FieldElem lam3 = (-zk - FieldElem(k, Rational(3))) * R(1, 7);  // conjugate: zbar = -1 - z
    Poly t = Poly::variable(k);
    auto l2 = section_from_graph(l1.model, t * lam2);
    CHECK(l2.embedding.is_identity());
    auto l3 = section_from_graph(l1.model, t * lam3);
    CHECK(l3.embedding.is_identity());
    auto S = EllipticSurface::make(l1.model);
    std::vector<Section> ss = {l1.plus, l2.plus, l3.plus};
    auto g = gram(*S, ss);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(g[i][j] == (i == j ? R(1, 2) : R(0)));
    auto rep = height_report(*S, l1.plus);
    bool hit_i0s = false;
    for (auto& h : rep.hits)
        if (h.fiber_type == "I0*") {
            hit_i0s = true;
            CHECK(h.contribution == 1);
        }
    CHECK(hit_i0s);
}

TEST_CASE("pencil shape") {
    auto Q = NumberField::rationals();
    auto x = X(Q), t = T(Q);
    CHECK_THROWS_AS(pencil_setup(x * x - t), Error);
    CHECK_THROWS_AS(pencil_setup(x * x * x * C(Q, 2) + t), Error);
}
