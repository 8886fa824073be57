#include "surgery/mcg.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <sstream>

using namespace surgery;

static word w(const std::string& text, int g = 2) { return parse_word(text, g); }

TEST_CASE("word parsing, printing, reduction") {
    word x = w("a1 a2^-1 a5");
    REQUIRE(x.size() == 3);
    CHECK(x[0].idx == 1);
    CHECK(x[1].exp == -1);
    CHECK(show_word(x) == "a1 a2^-1 a5");
    CHECK(parse_word(show_word(x), 2) == x);

    CHECK(reduce(w("a1 a1^-1 a2")) == w("a2"));
    CHECK(reduce(w("a1 a2 a2^-1 a1^-1")).empty());
    CHECK(inverse_word(w("a1 a2^-1")) == w("a2 a1^-1"));
    CHECK(exponent_sum(w("a1 a2^-1 a3 a4")) == 2);

    CHECK_THROWS_AS(parse_word("a6", 2), parse_error);    // 2g+1 = 5 tops
    CHECK_THROWS_AS(parse_word("a0", 2), parse_error);
    CHECK_THROWS_AS(parse_word("b1", 2), parse_error);
    CHECK_THROWS_AS(parse_word("a1^2", 2), parse_error);
}

TEST_CASE("standard chain homology classes") {
    for (int g = 2; g <= 4; ++g) {
        chain_homology hom = standard_chain(g);
        REQUIRE(static_cast<int>(hom.c.size()) == 2 * g + 1);
        for (int i = 0; i < 2 * g + 1; ++i) {
            for (int j = i + 1; j < 2 * g + 1; ++j) {
                Int s = sympl(hom.c[static_cast<size_t>(i)], hom.c[static_cast<size_t>(j)]);
                if (j == i + 1)
                    CHECK((s == 1 || s == -1));
                else
                    CHECK(s == 0);
            }
        }
    }
    // g = 2 classes, written in the x1,y1,x2,y2 basis.
    chain_homology h2 = standard_chain(2);
    CHECK(h2.c[0] == std::vector<Int>{1, 0, 0, 0});
    CHECK(h2.c[1] == std::vector<Int>{0, 1, 0, -1});
    CHECK(h2.c[2] == std::vector<Int>{0, 0, 1, 0});
    CHECK(h2.c[3] == std::vector<Int>{0, 0, 0, 1});
    CHECK(h2.c[4] == std::vector<Int>{1, 0, 1, 0});
}

TEST_CASE("transvections and word matrices") {
    chain_homology hom = standard_chain(2);
    int_matrix t1 = transvection(hom.c[0]);
    // With <x1,y1> = +1: T_{x1}(y1) = y1 + <y1,x1> x1 = y1 - x1; x1, x2, y2
    // are fixed.
    std::vector<Int> y1{0, 1, 0, 0};
    std::vector<Int> img = oracle::apply_word(w("a1"), hom, y1);
    CHECK(img == std::vector<Int>{-1, 1, 0, 0});
    CHECK(oracle::apply_word(w("a1"), hom, hom.c[0]) == hom.c[0]);
    CHECK(mul(t1, int_matrix::identity(4)) == t1);

    // Library matrix vs direct per-vector application on all basis vectors.
    word x = w("a1 a2 a1^-1 a4 a3^-1");
    int_matrix m = word_to_matrix(x, hom);
    for (int j = 0; j < 4; ++j) {
        std::vector<Int> b(4, Int(0));
        b[static_cast<size_t>(j)] = 1;
        std::vector<Int> viaM(4, Int(0));
        for (int i = 0; i < 4; ++i) viaM[static_cast<size_t>(i)] = m.at(i, j);
        CHECK(viaM == oracle::apply_word(x, hom, b));
    }

    // Conjugation: M(w c w^-1) = M(w) M(c) M(w)^-1, so leftmost-outermost.
    word conj = w("a2 a1 a2^-1");
    word plain = w("a1");
    int_matrix mc = word_to_matrix(conj, hom);
    int_matrix mw = word_to_matrix(w("a2"), hom);
    int_matrix rhs = mul(mul(mw, word_to_matrix(plain, hom)), word_to_matrix(w("a2^-1"), hom));
    CHECK(mc == rhs);

    // Opposite-sign convention inverts the single twist.
    CHECK(mul(transvection(hom.c[0], 1), transvection(hom.c[0], -1)) ==
          int_matrix::identity(4));
}

TEST_CASE("hyperelliptic and chain relators act trivially") {
    for (int g = 2; g <= 3; ++g) {
        chain_homology hom = standard_chain(g);
        word h = h_relator(g);
        word i = i_relator(g);
        CHECK(static_cast<int>(h.size()) == 2 * (4 * g + 2));
        CHECK(static_cast<int>(i.size()) == (2 * g + 1) * (2 * g + 2));
        CHECK(word_to_matrix(h, hom) == int_matrix::identity(2 * g));
        CHECK(word_to_matrix(i, hom) == int_matrix::identity(2 * g));
        CHECK(oracle::acts_trivially(h, hom));
        CHECK(oracle::acts_trivially(i, hom));
    }
}

TEST_CASE("elementary moves") {
    int g = 2;
    SUBCASE("HR and HL Hurwitz rotations undo with CANCEL") {
        word x = w("a1 a2");
        word hr = apply_move(x, parse_move("HR 1", g), g);
        CHECK(hr == w("a1 a2 a1^-1 a1"));
        CHECK(apply_move(hr, parse_move("CANCEL 3", g), g) == x);
        word hl = apply_move(x, parse_move("HL 1", g), g);
        CHECK(hl == w("a2 a2^-1 a1 a2"));
        CHECK(apply_move(hl, parse_move("CANCEL 1", g), g) == x);
    }
    SUBCASE("braid rewrites, all derivable sign patterns") {
        CHECK(apply_move(w("a1 a2 a1"), parse_move("BRAID 1", g), g) == w("a2 a1 a2"));
        CHECK(apply_move(w("a1^-1 a2^-1 a1^-1"), parse_move("BRAID 1", g), g) ==
              w("a2^-1 a1^-1 a2^-1"));
        CHECK(apply_move(w("a1 a2 a1^-1"), parse_move("BRAID 1", g), g) == w("a2^-1 a1 a2"));
        CHECK(apply_move(w("a1^-1 a2 a1"), parse_move("BRAID 1", g), g) == w("a2 a1 a2^-1"));
        CHECK(apply_move(w("a1 a2^-1 a1^-1"), parse_move("BRAID 1", g), g) ==
              w("a2^-1 a1^-1 a2"));
        CHECK(apply_move(w("a1^-1 a2^-1 a1"), parse_move("BRAID 1", g), g) ==
              w("a2 a1^-1 a2^-1"));
        // The two patterns that are not braid-derivable.
        CHECK_THROWS_AS(apply_move(w("a1 a2^-1 a1"), parse_move("BRAID 1", g), g), check_error);
        CHECK_THROWS_AS(apply_move(w("a1^-1 a2 a1^-1"), parse_move("BRAID 1", g), g),
                        check_error);
        // Non-adjacent generators cannot braid.
        CHECK_THROWS_AS(apply_move(w("a1 a3 a1"), parse_move("BRAID 1", g), g), check_error);
        CHECK_THROWS_AS(apply_move(w("a1 a1 a1"), parse_move("BRAID 1", g), g), check_error);
    }
    SUBCASE("commutation needs distant generators") {
        CHECK(apply_move(w("a1 a3"), parse_move("COMM 1", g), g) == w("a3 a1"));
        CHECK(apply_move(w("a4^-1 a2"), parse_move("COMM 1", g), g) == w("a2 a4^-1"));
        CHECK_THROWS_AS(apply_move(w("a1 a2"), parse_move("COMM 1", g), g), check_error);
        CHECK_THROWS_AS(apply_move(w("a1 a1"), parse_move("COMM 1", g), g), check_error);
    }
    SUBCASE("insertion and cancellation") {
        CHECK(apply_move(w("a1 a2"), parse_move("INS 2 a3", g), g) == w("a1 a3^-1 a3 a2"));
        CHECK(apply_move(w("a1 a2"), parse_move("INS 3 a3^-1", g), g) == w("a1 a2 a3 a3^-1"));
        CHECK(apply_move(w("a1 a1^-1"), parse_move("CANCEL 1", g), g).empty());
        CHECK_THROWS_AS(apply_move(w("a1 a2"), parse_move("CANCEL 1", g), g), check_error);
        CHECK_THROWS_AS(apply_move(w("a1 a1"), parse_move("CANCEL 1", g), g), check_error);
    }
    SUBCASE("positions are validated") {
        CHECK_THROWS_AS(apply_move(w("a1 a2"), parse_move("HR 2", g), g), check_error);
        CHECK_THROWS_AS(apply_move(w("a1 a2"), parse_move("BRAID 1", g), g), check_error);
        CHECK_THROWS_AS(apply_move(w("a1"), parse_move("INS 3 a1", g), g), check_error);
        CHECK_THROWS_AS(apply_move(w("a1"), parse_move("CANCEL 1", g), g), check_error);
    }
    SUBCASE("move parse/print") {
        CHECK(show_move(parse_move("INS 4 a3^-1", g)) == "INS 4 a3^-1");
        CHECK(show_move(parse_move("BRAID 2", g)) == "BRAID 2");
        CHECK_THROWS_AS(parse_move("TWIST 1", g), parse_error);
        CHECK_THROWS_AS(parse_move("HR", g), parse_error);
        CHECK_THROWS_AS(parse_move("INS 1", g), parse_error);
        CHECK_THROWS_AS(parse_move("HR 1 extra", g), parse_error);
    }
}

TEST_CASE("derivation files parse, replay and preserve the matrix") {
    const char* names[] = {
        "twonodal_pair_g2",     "twonodal_pair_nodal_g2", "threenodal_pair_nodal_g3",
        "odd_prefix_g2",        "odd_prefix_g3",          "odd_prefix_g4",
        "odd_prefix_full_g2",   "odd_prefix_full_g3",     "odd_prefix_full_g4",
    };
    for (const char* n : names) {
        CAPTURE(n);
        derivation d = parse_derivation_file(std::string(SURGERY_SOURCE_DIR) +
                                             "/derivations/" + n + ".deriv");
        CHECK_NOTHROW(verify_derivation(d));
        chain_homology hom = standard_chain(d.g);
        CHECK(word_to_matrix(d.start, hom) == word_to_matrix(d.end, hom));
    }
}

TEST_CASE("tampered derivations are rejected") {
    derivation d = parse_derivation_file(std::string(SURGERY_SOURCE_DIR) +
                                         "/derivations/twonodal_pair_g2.deriv");
    derivation wrong_end = d;
    wrong_end.end[0].exp = -wrong_end.end[0].exp;
    CHECK_THROWS_AS(verify_derivation(wrong_end), check_error);

    derivation wrong_move = d;
    wrong_move.moves[1].pos = 3;   // COMM 3 hits adjacent twists here
    CHECK_THROWS_AS(verify_derivation(wrong_move), check_error);

    std::istringstream bad("genus 2\nstart a1\nHR 7\n");
    CHECK_THROWS_AS(parse_derivation(bad), parse_error);   // missing end line
}

TEST_CASE("block classification") {
    chain_homology h2 = standard_chain(2);

    block_class b1 = classify_block(w("a4^-1 a1 a3 a4"), h2);
    CHECK(b1.kind == block_class::n_nodal_spherical);
    CHECK(b1.n == 2);

    block_class b2 = classify_block(w("a4^-1 a3^-1 a2 a4 a3 a4"), h2);
    CHECK(b2.kind == block_class::n_nodal_spherical);
    CHECK(b2.n == 2);

    block_class b3 = classify_block(w("a1 a4"), h2);
    CHECK(b3.kind == block_class::n_nodal_spherical);
    CHECK(b3.n == 2);
    REQUIRE(b3.classes.size() == 2);
    CHECK(sympl(b3.classes[0], b3.classes[1]) == 0);

    block_class b4 = classify_block(w("a2 a5"), h2);
    CHECK(b4.kind == block_class::n_nodal_spherical);
    CHECK(b4.n == 2);

    block_class b5 = classify_block(w("a5^-1 a3 a4 a3^-1 a5"), h2);
    CHECK(b5.kind == block_class::lefschetz_nodal);
    CHECK(b5.n == 1);

    // a1 and a2 intersect once: not a disjoint pair.
    block_class b6 = classify_block(w("a1 a2"), h2);
    CHECK(b6.kind == block_class::other);

    // A single positive twist is a nodal fiber.
    block_class b7 = classify_block(w("a3"), h2);
    CHECK(b7.kind == block_class::lefschetz_nodal);
}
