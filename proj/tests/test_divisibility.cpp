// Coordinates, p-divisibility and cover multipliers on the first line-conic surface.

#include <random>

#include "doctest.h"
#include "examples.hpp"
#include "mwl/divisibility.hpp"
#include "mwl/error.hpp"

using namespace mwl;
using namespace testex;

namespace {

struct Fixture {
    LineConic1 lc = build_lc1();
    std::vector<Section> tors = two_torsion(lc.model);
    MWPresentation pres = make_presentation(*lc.surface, {"sL3", "sL4"}, {lc.sL3, lc.sL4},
                                            {{"tau1", tors.at(0), 2}, {"tau2", tors.at(1), 2}}, "(A1*)^2 + (Z/2)^2");
    Section sC2 = smul(2, lc.sL3);
};

Fixture& fx() {
    static Fixture f;
    return f;
}

// lexicographically first a in [1, p-1]^n with sum a_i v_i = 0 mod p, by brute force
std::optional<std::vector<long>> brute_force(const std::vector<std::vector<long>>& cols, long p) {
    size_t n = cols.size();
    std::vector<long> a(n, 1);
    while (true) {
        bool ok = true;
        for (size_t r = 0; r < cols[0].size(); ++r) {
            long acc = 0;
            for (size_t i = 0; i < n; ++i) acc += a[i] * cols[i][r];
            if (acc % p != 0) ok = false;
        }
        if (ok) return a;
        // lexicographic: last index moves fastest
        size_t i = n;
        while (i > 0 && ++a[i - 1] == p) a[--i] = 1;
        if (i == 0) return std::nullopt;
    }
}

}  // namespace

TEST_CASE("presentation of the first line-conic surface") {
    auto& f = fx();
    auto rep = verify_presentation(*f.lc.surface, f.pres);
    for (auto& c : rep.checks) {
        INFO(c.name << ": " << c.detail);
        CHECK(c.ok);
    }
    CHECK(rep.ok);
    // six I2: prod det(-A) = 2^6, |T| = 4, so det = 16/64
    CHECK(rep.det_gram == R(1, 4));
    CHECK(rep.predicted_det == R(1, 4));
    CHECK(rep.index_squared == 1);
    CHECK(rep.expected_rank == 2);
}

TEST_CASE("bad presentations are rejected") {
    auto& f = fx();
    auto S = f.lc.surface;
    auto scaled = make_presentation(*S, {"a", "b"}, {smul(2, f.lc.sL3), f.lc.sL4}, f.pres.torsion);
    auto rep = verify_presentation(*S, scaled);
    CHECK_FALSE(rep.ok);
    CHECK(rep.index_squared == 4);
    auto twice = make_presentation(*S, {"a", "b"}, {f.lc.sL3, f.lc.sL3}, f.pres.torsion);
    rep = verify_presentation(*S, twice);
    CHECK_FALSE(rep.ok);
    CHECK(rep.det_gram == 0);
    auto short_basis = make_presentation(*S, {"a"}, {f.lc.sL3}, f.pres.torsion);
    CHECK_FALSE(verify_presentation(*S, short_basis).ok);
    auto wrong_order = make_presentation(*S, {"a", "b"}, {f.lc.sL3, f.lc.sL4},
                                         {{"tau1", f.tors[0], 4}, {"tau2", f.tors[1], 2}});
    CHECK_FALSE(verify_presentation(*S, wrong_order).ok);
    auto dependent = make_presentation(*S, {"a", "b"}, {f.lc.sL3, f.lc.sL4},
                                       {{"tau1", f.tors[0], 2}, {"tau2", f.tors[0], 2}});
    CHECK_FALSE(verify_presentation(*S, dependent).ok);
}

TEST_CASE("coordinates") {
    auto& f = fx();
    auto& S = *f.lc.surface;
    auto c = coordinates_of(S, f.pres, f.sC2);
    CHECK(c.free == std::vector<Integer>{2, 0});
    CHECK(c.torsion == std::vector<long>{0, 0});
    c = coordinates_of(S, f.pres, f.lc.sL3);
    CHECK(c.free == std::vector<Integer>{1, 0});
    c = coordinates_of(S, f.pres, f.tors[0]);
    CHECK(c.free == std::vector<Integer>{0, 0});
    CHECK(c.torsion == std::vector<long>{1, 0});
    c = coordinates_of(S, f.pres, f.tors[2]);
    CHECK(c.torsion == std::vector<long>{1, 1});

    // missing torsion generator
    auto partial = make_presentation(S, {"a", "b"}, {f.lc.sL3, f.lc.sL4}, {{"tau1", f.tors[0], 2}});
    CHECK_THROWS_AS(coordinates_of(S, partial, f.tors[1]), Error);
    // sublattice: sL3 has coordinate 1/2 in {[2]sL3, sL4}
    auto sub = make_presentation(S, {"a", "b"}, {f.sC2, f.lc.sL4}, f.pres.torsion);
    try {
        coordinates_of(S, sub, f.lc.sL3);
        FAIL("expected NotInSpan");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotInSpan);
    }
}

TEST_CASE("coordinates round trip") {
    auto& f = fx();
    auto& S = *f.lc.surface;
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> d(-3, 3), e(0, 1);
    for (int i = 0; i < 20; ++i) {
        Coordinates c{{d(rng), d(rng)}, {e(rng), e(rng)}};
        Section P = from_coordinates(f.pres, c, f.lc.model);
        auto back = coordinates_of(S, f.pres, P);
        CHECK(back.free == c.free);
        CHECK(back.torsion == c.torsion);
    }
}

TEST_CASE("p-divisibility") {
    auto& f = fx();
    auto& S = *f.lc.surface;
    for (long p : {3, 5, 7}) {
        CAPTURE(p);
        CHECK(p_divisible(S, f.pres, smul(p, f.lc.sL3), p));
        CHECK(p_divisible(S, f.pres, add(f.sC2, smul(p - 2, f.lc.sL3)), p));
        for (long k = 1; k < p; ++k) CHECK_FALSE(p_divisible(S, f.pres, add(f.sC2, smul(k, f.lc.sL4)), p));
        CHECK(p_divisible(S, f.pres, f.tors[0], p));
    }
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> d(-2, 2);
    for (int i = 0; i < 4; ++i) {
        Section s = add(add(smul(d(rng), f.lc.sL3), smul(d(rng), f.lc.sL4)), f.tors[i % 3]);
        CHECK(p_divisible(S, f.pres, smul(3, s), 3));
        auto s0 = divide_by(S, f.pres, smul(3, s), 3);
        REQUIRE(s0);
        CHECK(smul(3, *s0) == smul(3, s));
    }
    CHECK_FALSE(divide_by(S, f.pres, f.lc.sL4, 3));
}

TEST_CASE("cover multipliers") {
    auto& f = fx();
    auto& S = *f.lc.surface;
    auto res = exists_cover_multipliers(S, f.pres, {f.sC2, f.lc.sL3}, 5);
    REQUIRE(res.exists);
    CHECK(res.multipliers == std::vector<long>{1, 3});
    for (long p : {3, 5, 7, 11, 13}) {
        CAPTURE(p);
        auto yes = exists_cover_multipliers(S, f.pres, {f.sC2, f.lc.sL3}, p);
        auto oracle = brute_force({{2, 0}, {1, 0}}, p);
        REQUIRE(oracle);
        CHECK(yes.exists);
        CHECK(yes.multipliers == *oracle);
        auto no = exists_cover_multipliers(S, f.pres, {f.sC2, f.lc.sL4}, p);
        CHECK_FALSE(no.exists);
        CHECK_FALSE(brute_force({{2, 0}, {0, 1}}, p));
        std::vector<Coordinates> cs = {coordinates_of(S, f.pres, f.sC2), coordinates_of(S, f.pres, f.lc.sL4)};
        CHECK_FALSE(exhaustive_cover_search(f.pres, cs, p));
        // (p - 2) s1 + [2] s1 is divisible
        CHECK(p_divisible(S, f.pres, add(smul(p - 2, f.lc.sL3), f.sC2), p));
    }
    CHECK_THROWS_AS(exists_cover_multipliers(S, f.pres, {f.sC2, f.lc.sL3}, 9), Error);
    CHECK_THROWS_AS(exists_cover_multipliers(S, f.pres, {f.sC2, f.lc.sL3}, 2), Error);
    try {
        exists_cover_multipliers(S, f.pres, {f.lc.sL3, negate(f.lc.sL3)}, 3);
        FAIL("expected CommonComponent");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::CommonComponent);
    }
}

TEST_CASE("search agrees with brute force on random coordinate matrices") {
    MWPresentation pres;
    pres.basis.resize(3);
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> d(-6, 6);
    for (int trial = 0; trial < 60; ++trial) {
        size_t n = 1 + trial % 3;
        std::vector<Coordinates> cs(n);
        std::vector<std::vector<long>> cols(n);
        for (size_t i = 0; i < n; ++i)
            for (int r = 0; r < 3; ++r) {
                long v = trial % 4 == 0 && r == 2 ? 0 : d(rng);
                cs[i].free.push_back(v);
                cols[i].push_back(v);
            }
        for (long p : {3, 5, 7}) {
            auto res = cover_from_coordinates(pres, cs, p);
            auto oracle = brute_force(cols, p);
            CHECK(res.exists == oracle.has_value());
            if (oracle) CHECK(res.multipliers == *oracle);
            CHECK(exhaustive_cover_search(pres, cs, p) == res.exists);
        }
    }
}

TEST_CASE("all odd primes") {
    auto& f = fx();
    auto& S = *f.lc.surface;
    auto yes = all_odd_p_analysis(S, f.pres, {f.sC2, f.lc.sL3});
    CHECK(yes.default_exists);
    CHECK(yes.describe() == "exists for all odd p");
    auto no = all_odd_p_analysis(S, f.pres, {f.sC2, f.lc.sL4});
    CHECK_FALSE(no.default_exists);
    CHECK(no.describe() == "exists for no odd p");

    // (s, [15] s): blocked exactly at 3 and 5
    auto n15 = all_odd_p_analysis(S, f.pres, {f.lc.sL4, smul(15, f.lc.sL4)});
    CHECK(n15.describe() == "exists for all odd p except {3, 5}");
    for (long p : {3, 5, 7, 11, 13, 17, 19}) {
        std::vector<Coordinates> cs = {{{0, 1}, {0, 0}}, {{0, 15}, {0, 0}}};
        CHECK(n15.exists_for(p) == exhaustive_cover_search(f.pres, cs, p));
    }
}

TEST_CASE("all odd primes against brute force on random matrices") {
    MWPresentation pres;
    pres.basis.resize(2);
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> d(-12, 12);
    for (int trial = 0; trial < 40; ++trial) {
        size_t n = 2 + trial % 2;
        std::vector<Coordinates> cs(n);
        for (auto& c : cs) c.free = {d(rng), d(rng)};
        auto an = odd_prime_analysis_from_coordinates(pres, cs);
        for (long p : {3, 5, 7, 11, 13, 17, 19, 23, 29, 31}) {
            INFO(an.describe() << " p=" << p);
            CHECK(an.exists_for(p) == exhaustive_cover_search(pres, cs, p));
        }
    }
}

TEST_CASE("smith normal form") {
    std::vector<std::vector<Integer>> m = {{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
    auto s = smith_normal_form(m, 3);
    CHECK(s.invariants == std::vector<Integer>{2, 6, 12});
    // rank deficient: kernel column of V is killed by M
    std::vector<std::vector<Integer>> k = {{1, 15}, {2, 30}};
    auto sk = smith_normal_form(k, 2);
    REQUIRE(sk.invariants.size() == 1);
    Integer a = sk.V[0][1], b = sk.V[1][1];
    CHECK(a + 15 * b == 0);
    CHECK(abs(b) == 1);
}
