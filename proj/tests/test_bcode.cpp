#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace qh;
using qhtest::f7_example_generator;
using qhtest::projective_points;
using qhtest::random_matrix;

TEST_CASE("square codes") {
    Algebra a4 = make_gfext(2, 2);
    Mat unitrow(a4.field, 1, 2);
    unitrow.set_row(0, a4.unit);
    BCode one = make_bcode(a4, unitrow);
    Subspace sq = square_code(one);
    CHECK(sq.dim() == 1);
    CHECK(member(sq, a4.unit));

    SECTION("del Pezzo code squares to the full space") {
        Fq f2 = make_field(2, 1);
        BCode c = bcode_from_generator(delpezzo_paper_phi(f2));
        CHECK(square_code(c).dim() == 13);
        // cross-check via the kernel dimension formula
        CHECK(square_code(c).dim() == sym_dim(5) - i2_code(c).dim());
        CHECK(i2_code(c).dim() == 2);
    }
    SECTION("dimension formula on random codes") {
        std::mt19937 rng(47);
        for (uint32_t q : {2u, 3u}) {
            Fq f = make_field(q, 1);
            for (int t = 0; t < 40; ++t) {
                size_t k = 2 + rng() % 3, n = k + rng() % 6;
                Mat g = random_matrix(rng, f, k, n);
                if (rank(g) != k) continue;
                BCode c = bcode_from_generator(g);
                REQUIRE(square_code(c).dim() + i2_code(c).dim() == sym_dim(k));
            }
        }
    }
}

TEST_CASE("quadratic kernel of the full code") {
    for (uint32_t q : {2u, 3u}) {
        for (size_t k : {3u, 4u}) {
            BCode c = bcode_from_generator(Mat::identity(make_field(q, 1), k));
            CHECK(i2_code(c).dim() == sym_dim(k) - k);
        }
    }
}

TEST_CASE("the F_7 worked example") {
    Fq f7 = make_field(7, 1);
    BCode c = bcode_from_generator(f7_example_generator(f7));
    Subspace i2 = i2_code(c);
    REQUIRE(i2.dim() == 3);

    SymIndex sx(4);
    auto form = [&](std::initializer_list<std::tuple<size_t, size_t, int>> terms) {
        Vec q(sx.dim(), f7.zero());
        for (auto [i, j, co] : terms) q[sx.index(i, j)] = FqElem{uint32_t((co % 7 + 7) % 7)};
        return q;
    };
    // x^2 - xw, y^2 - yw, x^2 + y^2 - z^2 in variables (w,x,y,z)
    Subspace expect = span_of(
        f7,
        {form({{1, 1, 1}, {0, 1, -1}}), form({{2, 2, 1}, {0, 2, -1}}),
         form({{1, 1, 1}, {2, 2, 1}, {3, 3, -1}})},
        sx.dim());
    CHECK(i2 == expect);
}

TEST_CASE("non-degeneracy") {
    Algebra tr = make_truncated(2, 3);
    Mat unitrow(tr.field, 1, 3);
    unitrow.set_row(0, tr.unit);
    CHECK(nondegenerate(make_bcode(tr, unitrow)));

    Fq f2 = make_field(2, 1);
    Mat g(f2, 1, 3);
    g.at(0, 0) = f2.one();
    g.at(0, 1) = f2.one();
    CHECK_FALSE(nondegenerate(bcode_from_generator(g)));  // third coordinate zero

    CHECK(nondegenerate(bcode_from_generator(delpezzo_paper_phi(f2))));

    SECTION("raw algebras have no factor list") {
        Algebra a4 = make_gfext(2, 2);
        Algebra raw = make_raw(a4.field, 2, a4.sc);
        Mat row(raw.field, 1, 2);
        row.set_row(0, raw.unit);
        CHECK_THROWS_AS(nondegenerate(make_bcode(raw, row)), std::invalid_argument);
    }
    SECTION("enumeration cap") {
        Fq f3 = make_field(3, 1);
        Mat big = Mat::identity(f3, 9);
        CHECK_THROWS_AS(nondegenerate(bcode_from_generator(big)), BudgetExceeded);
    }
}

TEST_CASE("extensions") {
    Fq f2 = make_field(2, 1);
    BCode dp = bcode_from_generator(delpezzo_paper_phi(f2));

    SECTION("repeating a generator column preserves the square") {
        Vec col(5);
        for (size_t r = 0; r < 5; ++r) col[r] = dp.basis.at(r, 0);
        BCode ext = extend_code(dp, col);
        CHECK(square_code(ext).dim() == square_code(dp).dim());
        CHECK(ext.ambient() == 14);
    }
    SECTION("zero point rejected") {
        CHECK_THROWS_AS(extend_code(dp, Vec(5, f2.zero())), std::invalid_argument);
    }
    SECTION("dichotomy over all points for small codes") {
        std::mt19937 rng(53);
        for (uint32_t q : {2u, 3u}) {
            Fq f = make_field(q, 1);
            for (int t = 0; t < 8; ++t) {
                size_t k = 2 + rng() % 3, n = k + 1 + rng() % 4;
                Mat g = random_matrix(rng, f, k, n);
                if (rank(g) != k) continue;
                BCode c = bcode_from_generator(g);
                size_t base = square_code(c).dim();
                for (const auto& p : projective_points(f, k)) {
                    size_t d = square_code(extend_code(c, p)).dim();
                    REQUIRE((d == base || d == base + 1));
                }
            }
        }
    }
    SECTION("square-preserving extension of the F_7 code at a system point") {
        Fq f7 = make_field(7, 1);
        BCode c = bcode_from_generator(f7_example_generator(f7));
        Vec p1{f7.one(), f7.zero(), f7.zero(), f7.zero()};
        CHECK(square_code(extend_code(c, p1)).dim() == square_code(c).dim());
    }
}

TEST_CASE("hyperplane data") {
    Fq f7 = make_field(7, 1);
    BCode c = bcode_from_generator(f7_example_generator(f7));
    size_t dim_sq = square_code(c).dim();
    Subspace i2 = i2_code(c);
    SymIndex sx(4);

    bool unit_in_code = false;
    {
        Mat aug(f7, c.k() + 1, c.ambient());
        for (size_t r = 0; r < c.k(); ++r) aug.set_row(r, c.basis.row(r));
        aug.set_row(c.k(), c.b.unit);
        unit_in_code = rank(aug) == c.k();
    }
    REQUIRE(unit_in_code);  // the all-ones row is in the code

    size_t in_hull = 0;
    for (const auto& p : projective_points(f7, 4)) {
        auto hd = hyperplane_data(c, p);
        CHECK(hd.h.dim() == 3);
        CHECK(subspace_leq(hd.h, hd.hc));   // needs 1 in C
        CHECK(subspace_leq(hd.hc, square_code(c)));
        bool hull_point = true;
        for (size_t r = 0; r < i2.dim(); ++r)
            if (sym_eval(f7, sx, i2.basis.row(r), p) != f7.zero()) hull_point = false;
        if (hull_point) ++in_hull;
        // Prop 8.2 dichotomy
        REQUIRE((hd.hc.dim() < dim_sq) == hull_point);
    }
    CHECK(in_hull == 7);
}

TEST_CASE("minimum distance") {
    Fq f2 = make_field(2, 1);
    Mat rep(f2, 1, 5);
    for (size_t c = 0; c < 5; ++c) rep.at(0, c) = f2.one();
    CHECK(min_distance(bcode_from_generator(rep)) == 5);

    CHECK(min_distance(bcode_from_generator(delpezzo_paper_phi(f2))) == 5);

    Mat parity(f2, 2, 3);
    parity.at(0, 0) = parity.at(0, 2) = f2.one();
    parity.at(1, 1) = parity.at(1, 2) = f2.one();
    CHECK(min_distance(bcode_from_generator(parity)) == 2);

    SECTION("requires a coordinatewise algebra") {
        Algebra a4 = make_gfext(2, 2);
        Mat row(a4.field, 1, 2);
        row.set_row(0, a4.unit);
        CHECK_THROWS_AS(min_distance(make_bcode(a4, row)), std::invalid_argument);
    }
}

TEST_CASE("code serialization with local factors") {
    // a code inside F_2[t]/(t^7-1) round-trips through the per-factor format
    Algebra b = parse_algebra_spec("quot:2:10000001");
    Fq f2 = b.field;
    Mat basis(f2, 2, 7);
    basis.at(0, 0) = f2.one();
    basis.at(0, 3) = f2.one();
    basis.at(1, 1) = f2.one();
    basis.at(1, 5) = f2.one();
    BCode c = make_bcode(b, basis, "quot:2:10000001");
    std::string text = bcode_to_text(c);
    BCode back = bcode_from_text(text);
    CHECK(back.basis == c.basis);
    CHECK(back.b_spec == c.b_spec);

    SECTION("plain codes too") {
        BCode dp = bcode_from_generator(delpezzo_paper_phi(f2));
        BCode back2 = bcode_from_text(bcode_to_text(dp));
        CHECK(back2.basis == dp.basis);
    }
}
