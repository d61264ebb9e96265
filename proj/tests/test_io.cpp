#include <catch2/catch.hpp>

#include <yangian/json.hpp>
#include <yangian/parse.hpp>

using namespace yangian;

TEST_CASE("parsing single generators and products") {
    auto x = parse_element("T[1,1,2]", 2);
    REQUIRE(x.terms().size() == 1);
    CHECK(x.terms().begin()->first == Monomial{GenId{1, 1, 2}});

    auto y = parse_element("1/2 * T[-2,1,1] * T[1,2,2]", 2, 3);
    REQUIRE(y.terms().size() == 1);
    CHECK(y.terms().begin()->second == Rational(1, 2));
    CHECK(y.str() == "1/2 * T[-2,1,1] * T[1,2,2]");

    auto z = parse_element("-3 + 1/2 * T[-2,1,1] * T[1,2,2]", 2, 3);
    CHECK(z.str() == "-3 + 1/2 * T[-2,1,1] * T[1,2,2]");
    CHECK(z.tag() == AlgebraTag::DY);
}

TEST_CASE("parsing rewrites to normal form") {
    auto x = parse_element("T[1,1,2] * T[-1,2,1]", 2, 3);
    auto y = AlgElement::t(2, 1, 1, 2, 3) * AlgElement::t(2, -1, 2, 1, 3);
    CHECK(x == y);
    CHECK(parse_element("(T[1,1,1] + 2) * 3 - 6", 2) == AlgElement::t(2, 1, 1, 1) * Rational(3));
    CHECK(parse_element("T[2,1,2] - T[2,1,2]", 2).is_zero());
}

TEST_CASE("parse errors report positions") {
    auto position = [](const std::string& text, int n) -> long {
        try {
            parse_element(text, n);
        } catch (const ParseError& e) {
            return static_cast<long>(e.position());
        }
        return -1;
    };
    CHECK(position("T[0,1,1]", 2) == 0);
    CHECK(position("2 * T[0,1,1]", 2) == 4);
    CHECK(position("T[1,3,1]", 2) == 0);
    CHECK(position("T[1,1,1] +", 2) == 10);
    CHECK(position("T[1,1 1]", 2) == 6);
    CHECK(position("1/ * T[1,1,1]", 2) == 2);
    CHECK(position("T[1,1,1] )", 2) == 9);
    CHECK(position("X", 2) == 0);
    CHECK_THROWS_AS(parse_generator("2 * T[1,1,1]", 2), ParseError);
}

TEST_CASE("central atoms parse to the series coefficients") {
    CHECK(parse_element("Z[0]", 2) == AlgElement::one(2));
    CHECK(parse_element("Z[1]", 2).is_zero());
    CHECK(parse_element("Z[2]", 2) == z_series(2, 2)[2]);
}

TEST_CASE("monomials parse without reordering") {
    Monomial m = parse_monomial("T[1,1,2] * T[-1,2,1]", 2);
    CHECK(m == Monomial{GenId{1, 1, 2}, GenId{-1, 2, 1}});
    CHECK(parse_monomial("1", 2).empty());
    CHECK_THROWS_AS(parse_monomial("T[1,1,2] * 3", 2), ParseError);
}

TEST_CASE("element JSON round trip") {
    auto x = parse_element("1/3 * T[-1,2,1] * T[1,1,2] - 5/7", 2, 5);
    json j = x;
    CHECK(j["N"] == 2);
    CHECK(j["D"] == 5);
    CHECK(j["tag"] == "DY");
    CHECK(element_from_json(j) == x);
    CHECK(parse_element(x.str(), 2, 5) == x);

    json spec = json::parse(R"({"N":2,"D":5,"tag":"DY","terms":[{"coeff":"1/3","mono":[[-1,2,1],[1,1,2]]}]})");
    CHECK(element_from_json(spec) == parse_element("1/3 * T[-1,2,1] * T[1,1,2]", 2, 5));

    json y = parse_element("T[2,1,1]", 2);
    CHECK(y["D"].is_null());
}

TEST_CASE("series, operators and tensors serialize") {
    RSeries s = RSeries::monomial(desc("u", 4), 2, Rational(-3, 2));
    json j = s;
    CHECK(j.dump() == R"({"terms":[{"coeff":"-3/2","exp":[2]}],"vars":[{"K":4,"dir":"desc","name":"u"}]})");
    CHECK(j.get<RSeries>() == s);

    json op = unit_op(2, 3, 2, 1, 1);
    CHECK(op["entries"].size() == 4);
    CHECK(op["arity"] == 3);

    TensorElement t = delta(AlgElement::t(2, 1, 1, 2), CoproductSide::yangian);
    json tj = t;
    CHECK(tj["terms"][0].contains("monoL"));
    CHECK(tensor_element_from_json(tj) == t);
}

TEST_CASE("representation specs serialize") {
    json j = json::parse(R"({"kind":"sigma","c":"2","N":2})");
    RepSpec s = j.get<RepSpec>();
    CHECK(s.kind == RepKind::sigma);
    CHECK(std::get<Rational>(s.param) == Rational(2));
    CHECK(json(s) == j);
    json w = SeparationWitness{2, {Rational(1), Rational(-1)}};
    CHECK(w.dump() == R"({"n":2,"params":["1","-1"]})");
    CHECK_THROWS(json::parse(R"({"kind":"covector","c":"2","N":2})").get<RepSpec>());
}
