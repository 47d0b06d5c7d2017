#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace qh;
using qhtest::polymul_mod_oracle;

TEST_CASE("prime fields enumerate in index order") {
    Fq f2 = make_field(2, 1);
    auto e2 = enumerate(f2);
    REQUIRE(e2.size() == 2);
    CHECK(e2[0] == f2.zero());
    CHECK(e2[1] == f2.one());

    Fq f3 = make_field(3, 1);
    auto e3 = enumerate(f3);
    REQUIRE(e3.size() == 3);
    CHECK(f3.to_string(e3[2]) == "2");
    CHECK(f3.mul(e3[2], e3[2]) == f3.one());  // 2*2 = 1 in F_3
}

TEST_CASE("default modulus is the first irreducible in enumeration order") {
    // Independent oracle: scan monic quadratics over F_2 for one without
    // roots; it must be t^2+t+1, the only irreducible quadratic.
    Fq f4 = make_field(2, 2);
    CHECK(f4.modulus() == std::vector<uint8_t>{1, 1, 1});

    // Over F_2 degree 5, brute-force divisibility by all lower-degree
    // monic polynomials, scanning little-endian enumeration order.
    auto divides = [](const std::vector<uint8_t>& g, const std::vector<uint8_t>& f) {
        std::vector<uint8_t> r = f;
        while (r.size() >= g.size()) {
            if (r.back()) {
                size_t shift = r.size() - g.size();
                for (size_t i = 0; i < g.size(); ++i) r[shift + i] ^= g[i];
            }
            while (!r.empty() && !r.back()) r.pop_back();
            if (r.empty()) return true;
            if (r.size() < g.size()) break;
        }
        return r.empty();
    };
    std::vector<uint8_t> expected;
    for (uint32_t idx = 0; idx < 32 && expected.empty(); ++idx) {
        std::vector<uint8_t> f(6, 0);
        f[5] = 1;
        for (int i = 0; i < 5; ++i) f[i] = (idx >> i) & 1;
        bool irred = true;
        for (uint32_t gidx = 0; gidx < 8 && irred; ++gidx) {
            for (size_t d = 1; d <= 2 && irred; ++d) {
                if (gidx >= (1u << d)) continue;
                std::vector<uint8_t> g(d + 1, 0);
                g[d] = 1;
                for (size_t i = 0; i < d; ++i) g[i] = (gidx >> i) & 1;
                if (divides(g, f)) irred = false;
            }
        }
        if (irred) expected = f;
    }
    Fq f32 = make_field(2, 5);
    CHECK(f32.modulus() == expected);
    CHECK(f32.modulus() == std::vector<uint8_t>{1, 0, 1, 0, 0, 1});  // t^5+t^2+1
}

TEST_CASE("field arithmetic against the polynomial oracle") {
    Fq f32 = make_field(2, 5, {1, 0, 1, 0, 0, 1});
    FqElem g = f32.from_index(2);
    FqElem g4 = f32.pow(g, 4);
    // gamma^4 * gamma = gamma^2 + 1
    CHECK(f32.to_string(f32.mul(g4, g)) == "10100");

    std::mt19937 rng(7);
    std::uniform_int_distribution<uint32_t> dist(0, 31);
    for (int trial = 0; trial < 200; ++trial) {
        FqElem a{dist(rng)}, b{dist(rng)};
        auto da = f32.digits(a);
        auto db = f32.digits(b);
        auto expect = polymul_mod_oracle({da.begin(), da.end()}, {db.begin(), db.end()},
                                         f32.modulus(), 2);
        CHECK(f32.mul(a, b) == f32.from_digits(expect));
    }

    SECTION("inv(1) is 1 in several fields") {
        for (auto& f : {make_field(2, 1), make_field(3, 1), make_field(7, 1), make_field(2, 5),
                        make_field(3, 3)})
            CHECK(f.inv(f.one()) == f.one());
    }
    SECTION("inversion of zero throws") {
        CHECK_THROWS_AS(f32.inv(f32.zero()), std::invalid_argument);
    }
}

TEST_CASE("field axioms exhaustively on small fields") {
    for (auto [p, m] : std::vector<std::pair<uint32_t, uint32_t>>{
             {2, 1}, {3, 1}, {5, 1}, {7, 1}, {2, 2}, {2, 3}, {2, 4}, {2, 5}, {2, 8},
             {3, 2}, {3, 3}, {3, 5}, {5, 2}, {7, 2}}) {
        Fq f = make_field(p, m);
        for (uint32_t i = 1; i < f.q(); ++i) {
            FqElem a{i};
            REQUIRE(f.mul(a, f.inv(a)) == f.one());
            REQUIRE(f.pow(a, f.q() - 1) == f.one());
        }
        // additive structure: a + (-a) = 0 on a sample
        for (uint32_t i = 0; i < f.q(); i += 3) CHECK(f.add(FqElem{i}, f.neg(FqElem{i})) == f.zero());
    }
}

TEST_CASE("F4 nonzero elements cube to one") {
    Fq f4 = make_field(2, 2);
    auto elems = enumerate(f4);
    REQUIRE(elems.size() == 4);
    int nonzero = 0;
    for (auto a : elems) {
        if (a == f4.zero()) continue;
        ++nonzero;
        CHECK(f4.pow(a, 3) == f4.one());
    }
    CHECK(nonzero == 3);
}

TEST_CASE("make_field rejects bad input") {
    CHECK_THROWS_AS(make_field(4, 1), std::invalid_argument);   // p not prime
    CHECK_THROWS_AS(make_field(9, 2), std::invalid_argument);
    CHECK_THROWS_AS(make_field(2, 2, {1, 0, 1}), std::invalid_argument);  // t^2+1 reducible
    CHECK_THROWS_AS(make_field(2, 3, {1, 1, 1}), std::invalid_argument);  // wrong degree
}

TEST_CASE("embeddings are injective ring homomorphisms") {
    SECTION("prime subfield") {
        Fq f2 = make_field(2, 1);
        Embedding e = embed(f2, 2);
        CHECK(e(f2.zero()) == e.ext.zero());
        CHECK(e(f2.one()) == e.ext.one());
    }
    SECTION("F4 into F16") {
        Fq f4 = make_field(2, 2);
        Embedding e = embed(f4, 2);
        CHECK(e.ext.q() == 16);
        // the image of gamma satisfies gamma^2 + gamma + 1 = 0 in F16
        FqElem g = e(f4.from_index(2));
        CHECK(e.ext.add(e.ext.add(e.ext.mul(g, g), g), e.ext.one()) == e.ext.zero());
        // full homomorphism + injectivity check
        std::set<uint32_t> images;
        for (uint32_t a = 0; a < 4; ++a) {
            images.insert(e(FqElem{a}).v);
            for (uint32_t b = 0; b < 4; ++b) {
                CHECK(e(f4.mul(FqElem{a}, FqElem{b})) == e.ext.mul(e(FqElem{a}), e(FqElem{b})));
                CHECK(e(f4.add(FqElem{a}, FqElem{b})) == e.ext.add(e(FqElem{a}), e(FqElem{b})));
            }
        }
        CHECK(images.size() == 4);
    }
    SECTION("exhaustive on bases up to 32 elements") {
        for (auto [p, m, d] : std::vector<std::array<uint32_t, 3>>{
                 {2, 5, 2}, {3, 2, 2}, {5, 1, 3}, {2, 3, 3}}) {
            Fq base = make_field(p, m);
            Embedding e = embed(base, d);
            std::set<uint32_t> im;
            for (uint32_t a = 0; a < base.q(); ++a) {
                im.insert(e(FqElem{a}).v);
                for (uint32_t b = 0; b < base.q(); ++b)
                    REQUIRE(e(base.mul(FqElem{a}, FqElem{b})) ==
                            e.ext.mul(e(FqElem{a}), e(FqElem{b})));
            }
            REQUIRE(im.size() == base.q());
        }
    }
}

TEST_CASE("polynomial factorization by trial division") {
    Fq f2 = make_field(2, 1);
    Fq f3 = make_field(3, 1);

    SECTION("t^7 - 1 over F_2") {
        Poly f = poly_parse(f2, "10000001");
        auto fac = factor_poly(f);
        REQUIRE(fac.size() == 3);
        std::multiset<std::string> got;
        for (auto& [g, m] : fac) {
            CHECK(m == 1);
            got.insert(poly_to_string(g));
        }
        CHECK(got == std::multiset<std::string>{"11", "1101", "1011"});
    }
    SECTION("t^3 over F_2") {
        auto fac = factor_poly(poly_monomial(f2, 3));
        REQUIRE(fac.size() == 1);
        CHECK(poly_to_string(fac[0].first) == "01");
        CHECK(fac[0].second == 3);
    }
    SECTION("t^2 - 1 over F_3") {
        auto fac = factor_poly(poly_parse(f3, "201"));
        REQUIRE(fac.size() == 2);
        CHECK(poly_to_string(fac[0].first) == "11");  // t + 1
        CHECK(poly_to_string(fac[1].first) == "21");  // t + 2
    }
    SECTION("factors re-multiply to the input") {
        std::mt19937 rng(11);
        for (uint32_t q : {2u, 3u, 5u}) {
            Fq f = make_field(q, 1);
            for (int trial = 0; trial < 40; ++trial) {
                size_t deg = 1 + rng() % 8;
                Poly poly = poly_from_enum_index(f, deg, rng() % 1000000);
                auto fac = factor_poly(poly);
                Poly prod = poly_monomial(f, 0);
                for (auto& [g, m] : fac)
                    for (uint32_t i = 0; i < m; ++i) prod = poly_mul(prod, g);
                REQUIRE(prod.c == poly.c);
            }
        }
    }
    SECTION("non-monic input rejected") {
        Poly f{f3, {f3.one(), FqElem{2}}};
        CHECK_THROWS_AS(factor_poly(f), std::invalid_argument);
    }
}

TEST_CASE("polynomial serialization") {
    Fq f2 = make_field(2, 1);
    Poly f = poly_parse(f2, "101001");
    CHECK(f.degree() == 5);
    CHECK(poly_to_string(f) == "101001");
    CHECK(poly_eval(f, f2.zero()) == f2.one());
}
