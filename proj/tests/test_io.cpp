#include "doctest.h"

#include "kodaira/io.hpp"

#include <cstdio>
#include <fstream>

using namespace kodaira;
using namespace kodaira::io;

TEST_CASE("rationals and matrices")
{
    CHECK(rational_to_json(make_rational(-6, 4)) == "-3/2");
    CHECK(rational_from_json(json("10/4")) == make_rational(5, 2));
    CHECK(rational_from_json(json(7)) == 7);
    CHECK_THROWS_AS(rational_from_json(json(0.5)), std::invalid_argument);
    CHECK_THROWS_AS(rational_from_json(json("1/0")), std::invalid_argument);

    const linalg::RatMatrix m{{1, 0}, {0, -1}};
    CHECK(matrix_from_json(matrix_to_json(m)) == m);
    CHECK_THROWS_AS(matrix_from_json(json::parse(R"([["1"],["1","2"]])")), std::invalid_argument);
}

TEST_CASE("Lie algebra JSON round trip")
{
    for (const auto& name : {"h3", "oscillator", "r_x_h3", "example_sec3", "aff", "abelian3"}) {
        const auto alg = lie::builtin::by_name(name);
        CHECK(algebra_from_json(algebra_to_json(alg)) == alg);
    }
    const auto j = json::parse(R"({"dim": 3, "labels": ["X","Y","Z"], "brackets": [{"i":0,"j":1,"coeffs":["0","0","1"]}]})");
    const auto alg = algebra_from_json(j);
    CHECK(lie::betti(alg) == std::vector<std::size_t>{1, 2, 2, 1});
    CHECK(alg.dual_labels()[0] == "e1");

    // Reversed index order negates.
    const auto rev = algebra_from_json(
        json::parse(R"({"dim": 3, "brackets": [{"i":1,"j":0,"coeffs":["0","0","-1"]}]})"));
    CHECK(rev.bracket(0, 1) == RatVector{0, 0, 1});

    CHECK_THROWS_AS(algebra_from_json(json::parse(R"({"dim": 0})")), std::invalid_argument);
    CHECK_THROWS_AS(algebra_from_json(json::parse(R"({"dim": 2, "brackets": [{"i":0,"j":2,"coeffs":["0","0"]}]})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(algebra_from_json(json::parse(R"({"dim": 2, "brackets": [{"i":0,"j":1,"coeffs":["1"]}]})")),
                    std::invalid_argument);
    // [e0,e1] = e2, [e0,e2] = e0 fails Jacobi.
    CHECK_THROWS_AS(algebra_from_json(json::parse(
                        R"({"dim": 3, "brackets": [{"i":0,"j":1,"coeffs":["0","0","1"]},{"i":0,"j":2,"coeffs":["1","0","0"]},{"i":1,"j":2,"coeffs":["0","1","0"]}]})")),
                    lie::StructureError);
}

TEST_CASE("loading algebras from files")
{
    const std::string path = "test_io_algebra.json";
    {
        std::ofstream out(path);
        out << algebra_to_json(lie::builtin::oscillator()).dump();
    }
    CHECK(load_algebra(path) == lie::builtin::oscillator());
    std::remove(path.c_str());
    CHECK_THROWS_AS(load_algebra("no_such_algebra"), std::invalid_argument);
}

TEST_CASE("elements")
{
    const auto g = osc::make_element(1, make_rational(1, 2), -3, make_rational(2, 3));
    CHECK(element_to_json(g) == json::parse(R"({"q":1,"x":"1/2","y":"-3","z":"2/3"})"));
    CHECK(element_from_json(element_to_json(g)) == g);
    CHECK(parse_element(R"({"q":0,"x":"1","y":"0","z":"0"})") == osc::make_element(0, 1, 0, 0));
    CHECK(parse_element("(2, 1/2, 0, -1/4)") == osc::make_element(2, make_rational(1, 2), 0, make_rational(-1, 4)));
    CHECK_THROWS_AS(parse_element("1,2,3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_element(R"({"q":"1/2","x":"0","y":"0","z":"0"})"), std::invalid_argument);
    CHECK_THROWS_AS(parse_element(R"({"q":0,"x":"0","y":"0"})"), std::invalid_argument);
}

TEST_CASE("complex structures and 2-forms")
{
    CHECK(load_structure("builtin").matrix() == geom::standard_structure().matrix());
    CHECK(load_structure("[[0,-1],[1,0]]").dim() == 2);
    CHECK_THROWS_AS(load_structure("[[1,0],[0,1]]"), std::invalid_argument);

    const auto ce = lie::ce_algebra(lie::builtin::line_times_heisenberg());
    const auto f = lie::Form::monomial(0b0011) + lie::Form::monomial(0b1100);
    const json j = two_form_to_json(ce, f);
    CHECK(j["expression"] == "tau*alpha + beta*gamma");
    CHECK(j["coefficients"] == json::parse(R"(["1","0","0","0","0","1"])"));
    CHECK(j["monomials"][5] == "beta*gamma");
}
