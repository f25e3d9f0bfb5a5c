#include <doctest.h>

#include "gen.hpp"
#include "toric/centering.hpp"
#include "toric/errors.hpp"
#include "toric/json_io.hpp"

using namespace toric;

TEST_CASE("scalar JSON") {
    SUBCASE("shorthands round trip") {
        for (const char* s : {"1", "-1", "i", "-i"}) {
            ExactScalar v = scalar_from_json(json(s));
            CHECK(scalar_to_json(v) == json(s));
        }
    }

    SUBCASE("full form") {
        json j = {{"modulus", {{"2", "1/2"}, {"3", "-1"}}}, {"turns", "1/4"}};
        ExactScalar v = scalar_from_json(j);
        CHECK(v.modulus_exponents().at(2) == mpq_class(1, 2));
        CHECK(v.modulus_exponents().at(3) == -1);
        CHECK(v.turns() == mpq_class(1, 4));
        CHECK(scalar_from_json(scalar_to_json(v)) == v);
    }

    SUBCASE("rational form folds the sign into turns") {
        ExactScalar v = scalar_from_json(json{{"rational", "-3/4"}});
        CHECK(v == ExactScalar::from_parts({{2, -2}, {3, 1}}, mpq_class(1, 2)));
    }

    SUBCASE("rejects junk") {
        CHECK_THROWS_AS(scalar_from_json(json("2")), ParseError);
        CHECK_THROWS_AS(scalar_from_json(json{{"rational", "0"}}), ParseError);
        CHECK_THROWS_AS(scalar_from_json(json{{"rational", "1/0"}}), ParseError);
        CHECK_THROWS_AS(scalar_from_json(json{{"modulus", {{"4", "1"}}}, {"turns", "0"}}), ParseError);
        CHECK_THROWS_AS(scalar_from_json(json{{"modulus", {{"2", "x"}}}, {"turns", "0"}}), ParseError);
        CHECK_THROWS_AS(scalar_from_json(json(3)), ParseError);
    }
}

TEST_CASE("matrix JSON") {
    IntMatrix m(2, 3, {1, -2, 3, 4, 5, -6});
    CHECK(matrix_from_json(matrix_to_json(m)) == m);

    SUBCASE("huge entries become strings") {
        IntMatrix big(1, 1);
        big(0, 0) = mpz_class("123456789012345678901234567890");
        json j = matrix_to_json(big);
        CHECK(j["entries"][0][0].is_string());
        CHECK(matrix_from_json(j) == big);
    }

    SUBCASE("accepts string entries") {
        json j = {{"rows", 1}, {"cols", 2}, {"entries", json::array({json::array({"-7", 9})})}};
        IntMatrix p = matrix_from_json(j);
        CHECK(p(0, 0) == -7);
        CHECK(p(0, 1) == 9);
    }

    SUBCASE("rejects shape lies") {
        json j = {{"rows", 2}, {"cols", 2}, {"entries", {{1, 2}}}};
        CHECK_THROWS_AS(matrix_from_json(j), ParseError);
        CHECK_THROWS_AS(matrix_from_json(json{{"rows", 1}, {"cols", 1}, {"entries", {{1.5}}}}), ParseError);
    }
}

TEST_CASE("arrangement JSON round trips bit-exactly") {
    testgen::Rng rng(71);
    for (int t = 0; t < 25; ++t) {
        ToricArrangement a = testgen::random_arrangement(rng);
        ToricArrangement back = arrangement_from_json(arrangement_to_json(a));
        CHECK(back == a);
        CHECK(associated_matrix(back) == associated_matrix(a));
    }

    json canonical = {
        {"ambient_dim", 2},
        {"equations",
         {{{"exponents", {2, 4}}, {"constant", "-1"}}, {{"exponents", {1, 1}}, {"constant", "1"}}}}};
    ToricArrangement a = arrangement_from_json(canonical);
    CHECK(a.ambient_dim() == 2);
    CHECK(a.size() == 2);
    CHECK(a.equation(0).constant == ExactScalar::from_parts({}, mpq_class(1, 2)));

    CHECK_THROWS_AS(arrangement_from_json(json{{"ambient_dim", 2}}), ParseError);
    CHECK_THROWS_AS(
        arrangement_from_json(json{{"ambient_dim", 2}, {"equations", {{{"exponents", {1}}, {"constant", "1"}}}}}),
        ParseError);
}

TEST_CASE("chain and certificate JSON") {
    testgen::Rng rng(72);
    for (int t = 0; t < 15; ++t) {
        ToricArrangement a = testgen::random_arrangement(rng, 4);
        CenteringCertificate cert = center(a);

        json j = certificate_to_json(cert);
        CenteringCertificate back = certificate_from_json(j);

        CHECK(back.sigma == cert.sigma);
        CHECK(back.h == cert.h);
        CHECK(back.k == cert.k);
        CHECK(back.u == cert.u);
        CHECK(back.gammas == cert.gammas);
        CHECK(back.gamma_roots_of == cert.gamma_roots_of);
        CHECK(back.gamma_degrees == cert.gamma_degrees);
        CHECK(back.branch_indices == cert.branch_indices);
        CHECK(back.chain == cert.chain);
        CHECK(back.source == cert.source);
        CHECK(back.target == cert.target);

        CHECK(verify_certificate_exact(back).ok);
        // serialization is canonical
        CHECK(certificate_to_json(back).dump() == j.dump());
    }
}

TEST_CASE("equation without exponents is rejected") {
    CHECK_THROWS_AS(equation_from_json(json{{"exponents", json::array()}, {"constant", "1"}}), ParseError);
    CHECK_THROWS_AS(equation_from_json(json{{"constant", "1"}}), ParseError);
}
