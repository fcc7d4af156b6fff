#include "doctest.h"

#include <map>
#include <random>

#include "zdg/errors.hpp"
#include "zdg/formulas.hpp"
#include "zdg/matring.hpp"
#include "zdg/qcount.hpp"

#include "test_helpers.hpp"

using namespace zdg;

TEST_CASE("parse_ring_spec accepts the grammar") {
    RingSpec r1 = parse_ring_spec("M2(2)");
    CHECK(r1.factors.size() == 1);
    CHECK(r1.factors[0].n == 2);
    CHECK(r1.factors[0].field.q == 2);

    RingSpec r2 = parse_ring_spec("M2(2)xM1(3)");
    CHECK(r2.factors.size() == 2);
    CHECK(r2.factors[0].n == 2);
    CHECK(r2.factors[1].n == 1);
    CHECK(r2.factors[1].field.q == 3);

    RingSpec r3 = parse_ring_spec("M2(2^3)");
    CHECK(r3.factors[0].field.q == 8);
    CHECK(r3.factors[0].field.p == 2);

    RingSpec r4 = parse_ring_spec("M1(9)");
    CHECK(r4.factors[0].field.p == 3);
    CHECK(r4.factors[0].field.m == 2);
}

TEST_CASE("parse_ring_spec rejects bad input") {
    CHECK_THROWS_AS(parse_ring_spec("M2(6)"), invalid_parameter);
    CHECK_THROWS_AS(parse_ring_spec("M2(12)"), invalid_parameter);
    CHECK_THROWS_AS(parse_ring_spec("M2(4^2)"), invalid_parameter); // 4 is not prime
    CHECK_THROWS_AS(parse_ring_spec(""), parse_error);
    CHECK_THROWS_AS(parse_ring_spec("m2(2)"), parse_error);
    CHECK_THROWS_AS(parse_ring_spec("M2(2) x M1(3)"), parse_error); // whitespace
    CHECK_THROWS_AS(parse_ring_spec("M2(2)x"), parse_error);
    CHECK_THROWS_AS(parse_ring_spec("M0(2)"), parse_error);
    CHECK_THROWS_AS(parse_ring_spec("M2(2)y"), parse_error);

    try {
        parse_ring_spec("M2(2)xM2(6)");
        FAIL("expected invalid_parameter");
    } catch (const invalid_parameter& e) {
        CHECK(std::string(e.what()).find("factor 2") != std::string::npos);
    }
    try {
        parse_ring_spec("M2");
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        CHECK(e.position() == 2);
    }
}

TEST_CASE("ring spec text round-trips") {
    for (const char* text : {"M2(2)", "M2(2)xM1(3)", "M1(4)xM3(2)", "M2(9)xM2(9)"}) {
        RingSpec r = parse_ring_spec(text);
        CHECK(r.to_string() == text);
        RingSpec again = parse_ring_spec(r.to_string());
        CHECK(again.to_string() == r.to_string());
    }
    // canonical_key sorts factors by (n, q)
    CHECK(parse_ring_spec("M2(3)xM1(5)xM2(2)").canonical_key() == "M1(5)xM2(2)xM2(3)");
}

TEST_CASE("derived ring cardinalities") {
    RingSpec r = parse_ring_spec("M2(2)xM2(3)");
    CHECK(r.order() == 16 * 81);
    CHECK(r.unit_count() == 6 * 48);
    CHECK(r.zero_divisor_count() == 1296 - 288);
    CHECK(r.vertex_count() == 1007);
}

TEST_CASE("mat_mul fixtures") {
    RingSpec r = testing::matrix_ring(2, 2);
    const FieldSpec& f = r.factors[0].field;
    Matrix id = mat_identity(2);
    Matrix e11 = mat_unit(2, 0, 0);
    Matrix e12 = mat_unit(2, 0, 1);
    CHECK(mat_mul(id, e11, f) == e11);
    CHECK(mat_mul(e11, e12, f) == e12);
    CHECK(mat_mul(mat_zero(2), e11, f) == mat_zero(2));
    CHECK_THROWS_AS(mat_mul(mat_zero(2), mat_zero(3), f), invalid_parameter);
}

TEST_CASE("mat_rank fixtures") {
    RingSpec r = testing::matrix_ring(2, 2);
    const FieldSpec& f = r.factors[0].field;
    CHECK(mat_rank(mat_zero(2), f) == 0);
    CHECK(mat_rank(mat_identity(2), f) == 2);
    Matrix ones{2, {1, 1, 1, 1}};
    CHECK(mat_rank(ones, f) == 1);

    RingSpec r5 = testing::matrix_ring(3, 5);
    CHECK(mat_rank(mat_identity(3), r5.factors[0].field) == 3);
}

TEST_CASE("rank is invariant under invertible row and column actions") {
    std::mt19937_64 rng(20240805);
    for (std::uint64_t q : {2, 3, 4}) {
        RingSpec r = testing::matrix_ring(3, q);
        const FieldSpec& f = r.factors[0].field;
        auto random_matrix = [&]() {
            Matrix m = mat_zero(3);
            for (auto& e : m.entries) e = static_cast<FieldElem>(rng() % q);
            return m;
        };
        auto random_invertible = [&]() {
            Matrix m = random_matrix();
            while (mat_rank(m, f) != 3) m = random_matrix();
            return m;
        };
        for (int i = 0; i < 25; ++i) {
            Matrix a = random_matrix();
            Matrix p = random_invertible();
            Matrix s = random_invertible();
            CHECK(mat_rank(mat_mul(p, mat_mul(a, s, f), f), f) == mat_rank(a, f));
        }
    }
}

TEST_CASE("ring_mul is componentwise") {
    RingSpec r = parse_ring_spec("M2(2)xM2(2)");
    RingElem ones{{mat_identity(2), mat_identity(2)}};
    RingElem ab{{mat_unit(2, 0, 0), mat_unit(2, 1, 0)}};
    CHECK(ring_mul(ones, ab, r) == ab);

    RingElem x{{mat_unit(2, 0, 0), mat_identity(2)}};
    RingElem y{{mat_unit(2, 0, 1), mat_zero(2)}};
    RingElem expected{{mat_unit(2, 0, 1), mat_zero(2)}};
    CHECK(ring_mul(x, y, r) == expected);

    RingSpec r3 = parse_ring_spec("M1(2)xM1(2)xM1(2)");
    RingElem a{{Matrix{1, {1}}, Matrix{1, {1}}, Matrix{1, {0}}}};
    RingElem b{{Matrix{1, {0}}, Matrix{1, {0}}, Matrix{1, {1}}}};
    CHECK(ring_is_zero(ring_mul(a, b, r3)));

    CHECK_THROWS_AS(ring_mul(a, y, r3), invalid_parameter);
}

TEST_CASE("classify_element") {
    RingSpec r = parse_ring_spec("M2(2)xM2(2)");
    RingElem unit{{mat_identity(2), mat_identity(2)}};
    RingElem zd{{mat_unit(2, 0, 0), mat_identity(2)}};
    CHECK(classify_element(unit, r) == ElementKind::unit);
    CHECK(classify_element(zd, r) == ElementKind::zero_divisor);
    CHECK(classify_element(ring_zero(r), r) == ElementKind::zero);
}

TEST_CASE("classification partitions the ring") {
    for (const char* text : {"M2(2)", "M1(2)xM2(2)", "M1(3)xM1(3)", "M2(3)"}) {
        RingSpec r = parse_ring_spec(text);
        Count zeros = 0, units = 0, zds = 0;
        for (ElementEnumerator it(r); it.valid(); it.next()) {
            switch (classify_element(it.current(), r)) {
            case ElementKind::zero: ++zeros; break;
            case ElementKind::unit: ++units; break;
            case ElementKind::zero_divisor: ++zds; break;
            }
        }
        CHECK(zeros == 1);
        CHECK(units == r.unit_count());
        CHECK(zeros + units + zds == r.order());
        CHECK(zds == r.vertex_count());
    }
}

TEST_CASE("rank_profile") {
    RingSpec r = parse_ring_spec("M2(2)xM2(2)");
    VertexClass zero_class = rank_profile(ring_zero(r), r);
    CHECK(zero_class.ks == std::vector<unsigned>{0, 0});
    CHECK(zero_class.squarezero);

    RingElem x{{mat_unit(2, 0, 1), mat_identity(2)}};
    VertexClass c = rank_profile(x, r);
    CHECK(c.ks == std::vector<unsigned>{1, 2});
    CHECK_FALSE(c.squarezero); // E12^2 = 0 but I^2 != 0

    RingSpec simple = testing::matrix_ring(2, 2);
    RingElem e12{{mat_unit(2, 0, 1)}};
    VertexClass cs = rank_profile(e12, simple);
    CHECK(cs.ks == std::vector<unsigned>{1});
    CHECK(cs.squarezero);
    CHECK(cs.to_string() == "1|sq");
}

TEST_CASE("element codec fixtures") {
    RingSpec r = parse_ring_spec("M1(2)xM1(2)");
    auto tuple_of = [&](std::uint64_t i) {
        RingElem x = element_from_index(i, r);
        return std::pair<FieldElem, FieldElem>{x.parts[0].entries[0], x.parts[1].entries[0]};
    };
    CHECK(tuple_of(0) == std::pair<FieldElem, FieldElem>{0, 0});
    CHECK(tuple_of(1) == std::pair<FieldElem, FieldElem>{1, 0});
    CHECK(tuple_of(2) == std::pair<FieldElem, FieldElem>{0, 1});
    CHECK(tuple_of(3) == std::pair<FieldElem, FieldElem>{1, 1});

    CHECK(ring_is_zero(element_from_index(0, parse_ring_spec("M2(3)xM1(2)"))));
    CHECK_THROWS_AS(element_from_index(4, r), invalid_parameter);
}

TEST_CASE("element codec round-trips and matches the enumerator") {
    std::mt19937_64 rng(20240806);
    for (const char* text : {"M1(2)xM1(2)", "M2(3)", "M1(4)xM2(2)", "M1(5)xM1(7)"}) {
        RingSpec r = parse_ring_spec(text);
        std::uint64_t order = r.order_within(Budget{});
        for (int i = 0; i < 200; ++i) {
            std::uint64_t idx = rng() % order;
            CHECK(element_index(element_from_index(idx, r), r) == idx);
        }
        ElementEnumerator it(r);
        for (std::uint64_t idx = 0; idx < order; ++idx, it.next()) {
            REQUIRE(it.valid());
            if (element_index(it.current(), r) != idx) {
                CHECK(element_index(it.current(), r) == idx);
            }
        }
        it.next();
        CHECK_FALSE(it.valid());
    }
}

TEST_CASE("annihilator census fixtures") {
    RingSpec r = testing::matrix_ring(2, 2);
    RingElem e11{{mat_unit(2, 0, 0)}};
    AnnCensus census = annihilator_census(e11, r);
    CHECK(census.left == 4);
    CHECK(census.right == 4);
    CHECK(census.twosided == 2);

    RingElem unit{{mat_identity(2)}};
    AnnCensus unit_census = annihilator_census(unit, r);
    CHECK(unit_census.left == 1);
    CHECK(unit_census.right == 1);
    CHECK(unit_census.twosided == 1);

    AnnCensus zero_census = annihilator_census(ring_zero(r), r);
    CHECK(zero_census.left == r.order());
    CHECK(zero_census.right == r.order());
    CHECK(zero_census.twosided == r.order());
}

TEST_CASE("annihilator census matches the closed form") {
    // Whole ring for M2(GF(2)); strided sample for M2(GF(3)). The full
    // corpus sweep lives in the acceptance suite.
    for (auto [q, stride] : std::vector<std::pair<std::uint64_t, std::uint64_t>>{{2, 1}, {3, 97}}) {
        RingSpec r = testing::matrix_ring(2, q);
        for (ElementEnumerator it(r); it.valid(); it.next()) {
            if (it.index() % stride != 0) continue;
            unsigned k = mat_rank(it.current().parts[0], r.factors[0].field);
            AnnCensus census = annihilator_census(it.current(), r);
            AnnCensus predicted = annihilator_sizes(2, q, k);
            if (!(census == predicted)) {
                CAPTURE(q);
                CAPTURE(it.index());
                CHECK(census == predicted);
            }
        }
    }
}

TEST_CASE("census bounds hold on random elements") {
    std::mt19937_64 rng(20240808);
    RingSpec r = parse_ring_spec("M1(3)xM2(2)");
    std::uint64_t order = r.order_within(Budget{});
    for (int i = 0; i < 20; ++i) {
        RingElem x = element_from_index(rng() % order, r);
        AnnCensus c = annihilator_census(x, r);
        CHECK(c.twosided >= 1);
        CHECK(c.twosided <= c.left);
        CHECK(c.twosided <= c.right);
    }
}

TEST_CASE("enumeration budget is enforced") {
    Budget tiny;
    tiny.max_ring_order = 100;
    RingSpec r = parse_ring_spec("M2(2)xM2(2)"); // order 256
    RingElem x = ring_zero(r);
    CHECK_THROWS_AS(annihilator_census(x, r, tiny), resource_limit);
    CHECK_THROWS_AS(ElementEnumerator(r, tiny), resource_limit);
}

TEST_CASE("factor count is capped") {
    std::string text = "M1(2)";
    for (int i = 0; i < 32; ++i) text += "xM1(2)";
    CHECK_THROWS_AS(parse_ring_spec(text), resource_limit);
    text.resize(text.size() - 6); // 32 factors parse fine
    CHECK(parse_ring_spec(text).factors.size() == 32);
}

TEST_CASE("rank census equals rank_count on sample rings") {
    for (auto [n, q] : std::vector<std::pair<unsigned, std::uint64_t>>{{2, 2}, {2, 3}, {3, 2}}) {
        auto census = testing::rank_census(n, q);
        for (unsigned k = 0; k <= n; ++k) {
            CHECK(Count(census[k]) == rank_count(n, q, k));
        }
    }
}
