// Intersection multiplicities, even tangency, combinatorics and tangent conics.

#include <functional>
#include <random>

#include "doctest.h"
#include "examples.hpp"
#include "mwl/arrangements.hpp"
#include "mwl/error.hpp"

using namespace mwl;
using namespace testex;

namespace {

// x - c(t)
PlaneCurve graph(const std::string& label, const Poly& c) {
    return PlaneCurve::make(label, BiPoly::var_x(c.field()) - BiPoly::from_t(c));
}

int total(const std::vector<Intersection>& v) {
    int s = 0;
    for (auto& i : v) s += i.multiplicity * i.point.geometric_count();
    return s;
}

// multiplicity of the rational root t0 of f, by repeated division
int root_order(Poly f, const FieldElem& t0) {
    Poly lin = Poly::variable(f.field()) - Poly::constant(t0);
    int n = 0;
    while (!f.is_zero() && f.eval(t0).is_zero()) {
        f = f / lin;
        ++n;
    }
    return n;
}

ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    return ErrorKind::InternalInconsistency;
}

}  // namespace

TEST_CASE("intersections of the line-conic curves") {
    auto Q = NumberField::rationals();
    auto C1 = graph("C1", P(Q, {0, 0, 1}));
    auto C2 = graph("C2", P(Q, {0, 0, R(9, 8)}));
    auto L1 = graph("L1", P(Q, {-2, 3}));
    auto I = intersection_multiplicities(C1, C2);
    REQUIRE(I.size() == 2);
    CHECK(I[0].point.label() == "(0, 0)");
    CHECK(I[0].multiplicity == 2);
    CHECK(I[1].point.at_zo);
    CHECK(I[1].multiplicity == 2);
    // res_x(x - t^2, x - 9/8 t^2) in the Sylvester convention
    auto xc = BiPoly::var_x(Q);
    CHECK(resultant(C1.f, C2.f, Variable::X) == P(Q, {0, 0, R(-1, 8)}));

    I = intersection_multiplicities(C1, L1);
    REQUIRE(I.size() == 2);
    CHECK(I[0].point.label() == "(1, 1)");
    CHECK(I[1].point.label() == "(2, 4)");
    CHECK(I[0].multiplicity == 1);
    CHECK(I[1].multiplicity == 1);
    CHECK(total(I) == 2);

    CHECK(kind_of([&] { intersection_multiplicities(C1, C1); }) == ErrorKind::CommonComponent);
    auto C1x2 = PlaneCurve::make("2C1", C1.f * FieldElem(Q, Rational(2)));
    CHECK(kind_of([&] { intersection_multiplicities(C1, C1x2); }) == ErrorKind::CommonComponent);
    // x = t + 1 and x = t meet only at [1 : 1 : 0]
    CHECK(kind_of([&] { intersection_multiplicities(graph("a", P(Q, {1, 1})), graph("b", P(Q, {0, 1}))); }) ==
          ErrorKind::Unsupported);
    // x^2 = 1 and x^2 = t share the pencil line t = 1 at two points
    auto A = PlaneCurve::make("A", xc * xc - C(Q, 1));
    auto B = PlaneCurve::make("B", xc * xc - T(Q));
    CHECK(kind_of([&] { intersection_multiplicities(A, B); }) == ErrorKind::Unsupported);
    CHECK_THROWS_AS(PlaneCurve::make("sq", (xc - T(Q)) * (xc - T(Q))), Error);
}

TEST_CASE("Bezout and local multiplicities of random graphs") {
    auto Q = NumberField::rationals();
    std::mt19937 rng(23);
    std::uniform_int_distribution<int> d(-3, 3), r(-2, 2);
    for (int trial = 0; trial < 30; ++trial) {
        // a - b = lead * prod (t - r_i): known roots
        std::vector<int> rts;
        Poly diff = Poly::constant(Q, Rational(1 + trial % 3));
        int n = 1 + trial % 2;
        for (int i = 0; i < n; ++i) {
            rts.push_back(r(rng));
            diff = diff * P(Q, {Rational(-rts.back()), 1});
        }
        Poly b = P(Q, {Rational(d(rng)), Rational(d(rng))});
        Poly a = b + diff;
        auto Ca = graph("a", a), Cb = graph("b", b);
        auto I = intersection_multiplicities(Ca, Cb);
        CHECK(total(I) == Ca.degree * Cb.degree);
        for (auto& i : I) {
            if (i.point.at_zo) {
                CHECK((Ca.degree == 2 && Cb.degree == 2) == false);
                continue;
            }
            FieldElem t0 = -i.point.pi.coeff(0);
            CHECK(i.multiplicity == root_order(diff, t0));
            CHECK(i.point.x0.coeff(0) == b.eval(t0));
        }
    }
}

TEST_CASE("conic pairs and irrational points") {
    auto Q = NumberField::rationals();
    // x = t^2 and x = 2: the point class t^2 - 2 carries two geometric points
    auto I = intersection_multiplicities(graph("C", P(Q, {0, 0, 1})), graph("L", P(Q, {2})));
    REQUIRE(I.size() == 1);
    CHECK(I[0].point.pi == P(Q, {-2, 0, 1}));
    CHECK(I[0].point.x0 == P(Q, {2}));
    CHECK(I[0].point.geometric_count() == 2);
    // two conics x = t^2 and x = -t^2 + 2t: affine points t = 0, 1 plus z_o with I = 2
    auto J = intersection_multiplicities(graph("C", P(Q, {0, 0, 1})), graph("D", P(Q, {0, 2, -1})));
    CHECK(total(J) == 4);
    CHECK(J.back().point.at_zo);
    CHECK(J.back().multiplicity == 2);
}

TEST_CASE("even tangency") {
    auto Q = NumberField::rationals();
    auto branch = PlaneCurve::make("Q", line_conic2_quartic(Q));
    auto C3 = graph("C3", P(Q, {-2, 0, R(1, 2)}));
    CHECK(all_even_tangency(C3, branch));
    // x = t: restriction -2 (t - 2)^2 (t + 1)^2
    auto L1 = graph("L1", P(Q, {0, 1}));
    Poly res = branch.f.eval_x(P(Q, {0, 1}));
    CHECK(res == P(Q, {-2, 1}) * P(Q, {-2, 1}) * P(Q, {1, 1}) * P(Q, {1, 1}) * R(-2));
    CHECK(all_even_tangency(L1, branch));
    CHECK_FALSE(all_even_tangency(graph("secant", P(Q, {5})), branch));
    // graph path against the multiplicity path
    for (auto* c : {&C3, &L1}) {
        bool even = true;
        for (auto& i : intersection_multiplicities(*c, branch)) even = even && i.multiplicity % 2 == 0;
        CHECK(even == all_even_tangency(*c, branch));
    }
    auto comp = graph("C1", P(Q, {-2, 0, 1}));
    CHECK(kind_of([&] { all_even_tangency(comp, branch); }) == ErrorKind::CommonComponent);
}

TEST_CASE("combinatorics of the first line-conic arrangements") {
    auto Q = NumberField::rationals();
    auto C1 = graph("C1", P(Q, {0, 0, 1}));
    auto C2 = graph("C2", P(Q, {0, 0, R(9, 8)}));
    auto L1 = graph("L1", P(Q, {-2, 3}));
    auto L2 = graph("L2", P(Q, {-2, -3}));
    auto L3 = graph("L3", P(Q, {2, 1}));
    auto L4 = graph("L4", P(Q, {1}));
    auto B1 = summarize({C1, C2, L1, L2, L3});
    auto B2 = summarize({C1, C2, L1, L2, L4});
    CHECK(same_combinatorics(B1, B2));
    CHECK(same_combinatorics(B2, B1));
    CHECK(same_combinatorics(B1, B1));
    auto quartic = summarize({C1, C2});
    CHECK_FALSE(same_combinatorics(B1, quartic));
    // a line through C1 n C2 changes the profile
    auto L0 = graph("L0", P(Q, {0, 1}));
    CHECK_FALSE(same_combinatorics(B1, summarize({C1, C2, L1, L2, L0})));
    // Bezout per pair
    for (auto& e : B1.points) CHECK(!e.curves.empty());
    int sum = 0;
    for (auto& e : B1.points)
        for (auto& [i, j, m] : e.pairs) sum += m * e.point.geometric_count();
    // 4 + 4*2*2 + 3*1
    CHECK(sum == 4 + 2 * 2 * 3 + 3);
}

TEST_CASE("tangent conics from line sections") {
    auto lc = build_lc1();
    auto k = lc.k;
    auto branch = PlaneCurve::make("Q", line_conic1_quartic(k));
    auto out = tangent_conics_through(*lc.surface, branch, {lc.sL3, lc.sL4});
    REQUIRE(out.size() == 2);
    REQUIRE(out[0].conic);
    REQUIRE(out[1].conic);
    CHECK(out[0].conic->f.graph_function() == P(k, {0, 0, R(9, 8)}));
    CHECK(out[1].conic->f.graph_function() == P(k, {R(1, 4), 0, 1}));
    auto bad = tangent_conics_through(*lc.surface, branch, {smul(2, lc.sL3)});
    CHECK_FALSE(bad[0].conic);
    CHECK(bad[0].error.find("height") != std::string::npos);

    auto Q = NumberField::rationals();
    auto setup = pencil_setup(line_conic2_quartic(Q));
    auto l1 = section_from_graph(setup.model, P(Q, {0, 1}));
    auto l2 = section_from_graph(l1.model, P(l1.model->field(), {-4, 3}));
    auto k2 = l2.model->field();
    auto S = EllipticSurface::make(l2.model);
    auto br2 = PlaneCurve::make("Q", line_conic2_quartic(k2));
    auto res = tangent_conics_through(*S, br2, {l1.plus.map(l2.embedding, l2.model), l2.plus});
    REQUIRE(res[0].conic);
    REQUIRE(res[1].conic);
    CHECK(res[0].conic->f.graph_function() == P(k2, {-2, 0, R(1, 2)}));
    CHECK(res[1].conic->f.graph_function() == P(k2, {-2, 0, R(1, 10)}));
    // type (b): x = -1
    auto lb = section_from_graph(l2.model, P(k2, {-1}));
    auto k3 = lb.model->field();
    auto S3 = EllipticSurface::make(lb.model);
    auto rb = tangent_conics_through(*S3, PlaneCurve::make("Q", line_conic2_quartic(k3)), {lb.plus});
    REQUIRE(rb[0].conic);
    CHECK(rb[0].conic->f.graph_function() == P(k3, {R(-17, 4), 0, 1}));
}
