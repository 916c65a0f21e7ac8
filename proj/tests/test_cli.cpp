// Expression parser, scenario validation and the CLI helpers.

#include <functional>

#include "cli/commands.hpp"
#include "cli/expr.hpp"
#include "cli/parallel.hpp"
#include "cli/scenario.hpp"
#include "doctest.h"
#include "examples.hpp"
#include "mwl/error.hpp"

using namespace mwl;
using namespace mwl::cli;
using namespace testex;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("no error raised");
    return ErrorKind::InternalInconsistency;
}

const char* kMinimal = R"(
name = "m"
[curves]
C1 = "x - t^2"
L1 = "x - 3*t + 2"
L2 = "x + 3*t + 2"
L4 = "x - 1"
[branch]
components = ["C1", "L1", "L2"]
[[sections]]
name = "sL4"
graph = "L4"
)";

}  // namespace

TEST_CASE("expression parser") {
    auto Q = NumberField::rationals();
    CHECK(parse_bipoly("(x - t^2)*(x - 3*t + 2)*(x + 3*t + 2)", Q) == line_conic1_quartic(Q));
    CHECK(parse_bipoly("x - 9/8*t^2", Q) == X(Q) - T(Q) * T(Q) * C(Q, R(9, 8)));
    CHECK(parse_bipoly("-(-x)", Q) == X(Q));
    CHECK(parse_poly("t^2/2 - 2", Q) == P(Q, {-2, 0, R(1, 2)}));
    CHECK(parse_constant("sqrt(9/4)", Q) == FieldElem(Q, R(3, 2)));
    auto K = NumberField::make(QPoly(std::vector<Rational>{-2, 0, 1}), "r");
    FieldElem r = FieldElem::generator(K);
    CHECK(parse_constant("r/2", K) == r * R(1, 2));
    CHECK(parse_constant("sqrt(8)", K) * parse_constant("sqrt(8)", K) == FieldElem(K, Rational(8)));
    // generator names that look like calls
    auto S = NumberField::make(QPoly(std::vector<Rational>{-2, 0, 1}), "sqrt(2)");
    CHECK(parse_constant("sqrt(2)^2", S) == FieldElem(S, Rational(2)));

    CHECK(kind_of([&] { parse_bipoly("x - t^", Q); }) == ErrorKind::InvalidInput);
    CHECK(kind_of([&] { parse_bipoly("x / t", Q); }) == ErrorKind::InvalidInput);
    CHECK(kind_of([&] { parse_bipoly("x / 0", Q); }) == ErrorKind::InvalidInput);
    CHECK(kind_of([&] { parse_bipoly("y + 1", Q); }) == ErrorKind::InvalidInput);
    CHECK(kind_of([&] { parse_bipoly("sqrt(2)", Q); }) == ErrorKind::InvalidInput);
    CHECK(kind_of([&] { parse_bipoly("(x + 1", Q); }) == ErrorKind::InvalidInput);
    CHECK(kind_of([&] { parse_poly("x*t", Q); }) == ErrorKind::InvalidInput);
}

TEST_CASE("section expressions") {
    Session s(parse_scenario(kMinimal));
    const Section& l4 = s.section("sL4");
    CHECK(parse_section_expr("2*sL4", s.sections(), s.model()) == smul(2, l4));
    CHECK(parse_section_expr("sL4 - 3*sL4", s.sections(), s.model()) == smul(-2, l4));
    CHECK(parse_section_expr("-sL4 + O", s.sections(), s.model()) == negate(l4));
    CHECK(kind_of([&] { parse_section_expr("2 sL4", s.sections(), s.model()); }) == ErrorKind::InvalidInput);
    CHECK(kind_of([&] { parse_section_expr("sL5", s.sections(), s.model()); }) == ErrorKind::InvalidInput);
    CHECK(kind_of([&] { parse_section_expr("", s.sections(), s.model()); }) == ErrorKind::InvalidInput);
}

TEST_CASE("scenario validation") {
    std::string base = kMinimal;
    CHECK_NOTHROW(parse_scenario(base));
    auto bad = [&](const std::string& extra) {
        return kind_of([&] { parse_scenario(base + extra); });
    };
    CHECK(bad("[[sections]]\nname = \"sL4\"\ngraph = \"L4\"\n") == ErrorKind::InvalidInput);     // duplicate label
    CHECK(bad("[[sections]]\nname = \"L4\"\nexpr = \"sL4\"\n") == ErrorKind::InvalidInput);      // clashes with a curve
    CHECK(bad("[[sections]]\nname = \"s\"\ngraph = \"L9\"\n") == ErrorKind::InvalidInput);       // unknown curve
    CHECK(bad("[[sections]]\nname = \"s\"\n") == ErrorKind::InvalidInput);                      // no construction
    CHECK(bad("[queries]\nheight = [\"sX\"]\n") == ErrorKind::InvalidInput);                    // unknown section
    CHECK(bad("[queries]\ndivide = [[\"sL4\"]]\n") == ErrorKind::InvalidInput);                 // no presentation
    CHECK(bad("[pair]\narrangement1 = [\"Z\"]\n") == ErrorKind::InvalidInput);
    CHECK(kind_of([&] { parse_scenario("name = 1"); }) == ErrorKind::InvalidInput);
    CHECK(kind_of([&] { parse_scenario("name = \"x\"\n[curves\n"); }) == ErrorKind::InvalidInput);

    Session s(parse_scenario(base));
    CHECK(s.field()->degree() == 1);
    CHECK(s.curve("L4").degree == 1);
    CHECK(s.branch().degree == 4);
    CHECK(kind_of([&] { s.presentation(); }) == ErrorKind::Precondition);
    CHECK(height(s.surface(), s.section("sL4")) == R(1, 2));
}

TEST_CASE("cli helpers") {
    CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
    auto sq = parallel_map(100, 8, [](size_t i) { return static_cast<long>(i * i); });
    REQUIRE(sq.size() == 100);
    for (size_t i = 0; i < 100; ++i) CHECK(sq[i] == static_cast<long>(i * i));
    CHECK_THROWS_AS(parallel_map(10, 4,
                                 [](size_t i) {
                                     if (i == 7) fail(ErrorKind::InvalidInput, "seven");
                                     return 0;
                                 }),
                    Error);
    CHECK(exit_code(ErrorKind::InvalidInput) == 2);
    CHECK(exit_code(ErrorKind::NotInSpan) == 3);
    CHECK(exit_code(ErrorKind::FieldDegreeCap) == 4);
    Json j{{"b", 1}, {"a", "1/2"}};
    CHECK(dump(j) == "{\n  \"a\": \"1/2\",\n  \"b\": 1\n}\n");
}
