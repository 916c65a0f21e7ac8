// Unit tests: exact arithmetic, factorization, resultants, square-root towers.

#include <random>

#include "doctest.h"
#include "examples.hpp"
#include "mwl/bipoly.hpp"
#include "mwl/error.hpp"
#include "mwl/factor.hpp"
#include "mwl/qfactor.hpp"

using namespace mwl;
using testex::R;

namespace {

QPoly qp(std::initializer_list<long> c) {
    std::vector<Rational> v;
    for (long x : c) v.emplace_back(x);
    return QPoly(v);
}

FieldPtr quad(long d, const std::string& name) {
    return NumberField::make(QPoly(std::vector<Rational>{Rational(-d), 0, 1}), name);
}

// oracle: Sylvester determinant, computed independently of the Euclidean resultant
FieldElem sylvester(const Poly& f, const Poly& g) {
    int m = f.degree(), n = g.degree();
    int N = m + n;
    const FieldPtr& k = f.field();
    std::vector<std::vector<FieldElem>> M(N, std::vector<FieldElem>(N, FieldElem(k)));
    for (int r = 0; r < n; ++r)
        for (int i = 0; i <= m; ++i) M[r][r + i] = f.coeff(m - i);
    for (int r = 0; r < m; ++r)
        for (int i = 0; i <= n; ++i) M[n + r][r + i] = g.coeff(n - i);
    FieldElem det(k, Rational(1));
    for (int c = 0; c < N; ++c) {
        int p = c;
        while (p < N && M[p][c].is_zero()) ++p;
        if (p == N) return FieldElem(k);
        if (p != c) {
            std::swap(M[p], M[c]);
            det = -det;
        }
        det *= M[c][c];
        FieldElem inv = M[c][c].inverse();
        for (int r = c + 1; r < N; ++r) {
            FieldElem f2 = M[r][c] * inv;
            for (int cc = c; cc < N; ++cc) M[r][cc] -= f2 * M[c][cc];
        }
    }
    return det;
}

Poly random_poly(const FieldPtr& k, int deg, std::mt19937& rng) {
    std::uniform_int_distribution<int> d(-5, 5);
    std::vector<FieldElem> c;
    for (int i = 0; i <= deg; ++i) {
        std::vector<Rational> v(k->degree());
        for (auto& x : v) x = d(rng);
        c.emplace_back(k, v);
    }
    return Poly(k, c);
}

}  // namespace

TEST_CASE("rational polynomial gcd and factorization") {
    auto Q = NumberField::rationals();
    Poly a = Poly::from_rational(Q, qp({-4, 0, 1}));
    Poly b = Poly::from_rational(Q, qp({2, -3, 1}));
    CHECK(gcd(a, b) == Poly::from_rational(Q, qp({-2, 1})));

    auto fs = factor_rational(qp({4, 0, -5, 0, 1}));
    REQUIRE(fs.size() == 4);
    CHECK(fs[0].first == qp({-2, 1}));
    CHECK(fs[1].first == qp({-1, 1}));
    CHECK(fs[2].first == qp({1, 1}));
    CHECK(fs[3].first == qp({2, 1}));
}

TEST_CASE("Swinnerton-Dyer polynomial is irreducible") {
    // minimal polynomial of sqrt2+sqrt3+sqrt5, splits into low degree factors mod every prime
    QPoly s = qp({576, 0, -960, 0, 352, 0, -40, 0, 1});
    CHECK(is_irreducible_rational(s));
    QPoly prod = s * qp({-3, 0, 1}) * qp({1, 1}) * qp({1, 1});
    auto fs = factor_rational(prod);
    REQUIRE(fs.size() == 3);
    CHECK(fs[0].first == qp({1, 1}));
    CHECK(fs[0].second == 2);
    CHECK(fs[1].first == qp({-3, 0, 1}));
    CHECK(fs[2].first == s);
}

TEST_CASE("factorization round trip on random products") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> d(-9, 9);
    for (int trial = 0; trial < 20; ++trial) {
        QPoly prod = QPoly::constant(3);
        for (int j = 0; j < 3; ++j) {
            std::vector<Rational> c;
            int deg = 1 + trial % 3;
            for (int i = 0; i < deg; ++i) c.emplace_back(d(rng));
            c.emplace_back(1 + (trial % 4));
            prod = prod * QPoly(c);
        }
        auto fs = factor_rational(prod);
        QPoly back = QPoly::constant(prod.leading());
        for (auto& [f, e] : fs) {
            CHECK(is_irreducible_rational(f));
            for (int i = 0; i < e; ++i) back = back * f;
        }
        CHECK(back == prod);
    }
}

TEST_CASE("modular gcd agrees with euclid over number fields") {
    // b = a/2 with a^3 - a + 1 = 0 is not integral
    std::vector<FieldPtr> fields = {NumberField::rationals(), NumberField::make(qp({-2, 0, 1}), "r"),
                                    NumberField::make(QPoly(std::vector<Rational>{R(1, 8), R(-1, 4), 0, 1}), "b")};
    std::mt19937 rng(19);
    std::uniform_int_distribution<int> d(-20, 20);
    for (auto& K : fields) {
        auto rnd = [&](int deg) {
            std::vector<FieldElem> c;
            for (int i = 0; i <= deg; ++i) {
                std::vector<Rational> co;
                for (int j = 0; j < K->degree(); ++j) co.push_back(R(d(rng), 1 + std::abs(d(rng)) % 5));
                c.emplace_back(K, co);
            }
            if (c.back().is_zero()) c.back() = FieldElem(K, Rational(1));
            return Poly(K, c);
        };
        for (int trial = 0; trial < 12; ++trial) {
            Poly h = rnd(trial % 4), f = rnd(2 + trial % 5) * h, g = rnd(1 + trial % 3) * h;
            Poly e = euclid_gcd(f, g);
            auto m = modular_gcd(f, g);
            REQUIRE(m);
            CHECK(*m == e);
            CHECK(gcd(f, g) == e);
            CHECK(h.monic().divides(e));
        }
    }
}

TEST_CASE("number field arithmetic") {
    auto K = NumberField::make(qp({1, 1, 0, 1}), "a");  // a^3 + a + 1
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> d(-7, 7);
    for (int i = 0; i < 30; ++i) {
        FieldElem x(K, std::vector<Rational>{Rational(d(rng)), Rational(d(rng)), Rational(d(rng))});
        FieldElem y(K, std::vector<Rational>{Rational(d(rng)), Rational(d(rng)), Rational(1 + i)});
        if (!x.is_zero()) CHECK((x * x.inverse()).is_one());
        CHECK((x * y).norm() == x.norm() * y.norm());
    }
    CHECK_THROWS_AS(FieldElem(K).inverse(), Error);
    CHECK_THROWS_AS(NumberField::make(qp({-4, 0, 1}), "b"), Error);
    auto L = quad(2, "r");
    CHECK_THROWS_AS(FieldElem(K, Rational(1)) + FieldElem(L, Rational(1)), Error);
}

TEST_CASE("factorization over number fields") {
    auto K = quad(2, "r");
    Poly f = Poly::from_rational(K, qp({1, 0, 0, 0, 1}));  // t^4 + 1
    auto fs = factor(f);
    CHECK(fs.factors.size() == 2);
    CHECK(fs.expand() == f);
    for (auto& [p, e] : fs.factors) CHECK(p.degree() == 2);

    auto I = quad(-1, "i");
    Poly g = Poly::from_rational(I, qp({1, 0, 1}));
    auto rs = roots(g);
    REQUIRE(rs.size() == 2);
    for (auto& r : rs) CHECK((r * r + FieldElem(I, Rational(1))).is_zero());

    std::mt19937 rng(11);
    auto K3 = NumberField::make(qp({-2, 0, 0, 1}), "c");
    for (int trial = 0; trial < 5; ++trial) {
        Poly a = random_poly(K3, 2, rng), b = random_poly(K3, 1 + trial % 2, rng);
        Poly prod = a * b;
        auto fp = factor(prod);
        CHECK(fp.expand() == prod);
        for (auto& [p, e] : fp.factors) CHECK(p.divides(prod));
    }
}

TEST_CASE("poly square root") {
    auto Q = NumberField::rationals();
    Poly f = Poly::from_rational(Q, qp({9, 0, -18, 0, 9}));  // 9(1-t^2)^2
    auto r = poly_square_root(f);
    REQUIRE(r.has_value());
    CHECK(r->h == Poly::from_rational(Q, qp({-1, 0, 1})));
    CHECK(r->unit == FieldElem(Q, Rational(9)));
    CHECK_FALSE(poly_square_root(Poly::from_rational(Q, qp({-1, 0, 1}))).has_value());
}

TEST_CASE("resultant agrees with the Sylvester determinant") {
    std::mt19937 rng(5);
    auto K = quad(-3, "z");
    for (int trial = 0; trial < 10; ++trial) {
        Poly f = random_poly(K, 1 + trial % 4, rng), g = random_poly(K, 1 + (trial / 2) % 3, rng);
        if (f.degree() < 1 || g.degree() < 1) continue;
        CHECK(resultant(f, g) == sylvester(f, g));
    }
}

TEST_CASE("bivariate resultants") {
    auto Q = NumberField::rationals();
    BiPoly t = BiPoly::var_t(Q), x = BiPoly::var_x(Q);
    Poly tt = Poly::variable(Q);
    CHECK(resultant(x - t, x + t, Variable::X) == tt * Rational(2));
    BiPoly c1 = x - t * t;
    BiPoly c2 = x - t * t * FieldElem(Q, Rational(9, 8));
    // Sylvester convention: Res(x - a, x - b) = a - b
    CHECK(resultant(c1, c2, Variable::X) == tt * tt * Rational(-1, 8));
    // conic pair C1, C2 of the line-conic arrangement
    BiPoly two = BiPoly::constant(FieldElem(Q, Rational(2)));
    BiPoly four = BiPoly::constant(FieldElem(Q, Rational(4)));
    BiPoly C1 = x - t * t + two;
    BiPoly C2 = x * x - x * two + t * t - four;
    Poly r = resultant(C1, C2, Variable::X);
    CHECK(r == Poly::from_rational(Q, qp({4, 0, -5, 0, 1})));
}

TEST_CASE("square root towers") {
    auto Q = NumberField::rationals();
    auto e1 = adjoin_sqrt(FieldElem(Q, Rational(-8)));
    CHECK(e1.embedding.target->degree() == 2);
    CHECK(e1.root * e1.root == FieldElem(e1.embedding.target, Rational(-8)));
    auto L = e1.embedding.target;
    auto e2 = adjoin_sqrt(FieldElem(L, Rational(-10)));
    auto M = e2.embedding.target;
    CHECK(M->degree() == 4);
    FieldElem old_root = e2.embedding(e1.root);
    CHECK(old_root * old_root == FieldElem(M, Rational(-8)));
    CHECK(e2.root * e2.root == FieldElem(M, Rational(-10)));
    // sqrt(5) = sqrt(-10)/sqrt(-2) is already there
    auto e3 = adjoin_sqrt(FieldElem(M, Rational(5)));
    CHECK(e3.embedding.is_identity());
    auto e4 = adjoin_sqrt(FieldElem(M, Rational(-1)));
    CHECK(e4.embedding.target->degree() == 8);
    CHECK_THROWS_AS(adjoin_sqrt(FieldElem(e4.embedding.target, Rational(7))), Error);
}
