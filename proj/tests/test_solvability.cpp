#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "pcube/bfs.hpp"
#include "pcube/errors.hpp"
#include "pcube/solvability.hpp"

using namespace pcube;
using pcube::testing::a5_spec;
using pcube::testing::coin_spec;

TEST_CASE("parity matrix") {
    const PuzzleSpec spec = cube_spec(2, 2);
    const ParityMatrix ident = parity_matrix(identity_configuration(spec));
    for (int v : ident.signs) CHECK(v == 1);

    Configuration single = identity_configuration(cube_spec(1, 1));
    single.at(1, 1) = spec.u;
    const ParityMatrix odd = parity_matrix(single);
    CHECK(odd.at(1, 1) == -1);

    Configuration even = identity_configuration(spec);
    even.at(1, 2) = s4().index_of(parse_cycles("(123)"));
    for (int v : parity_matrix(even).signs) CHECK(v == 1);
}

TEST_CASE("product form") {
    ParityMatrix p{2, 2, {1, 1, 1, 1}};
    CHECK(is_product_form(p));

    for (int k = 0; k < 4; ++k) {
        ParityMatrix one{2, 2, {1, 1, 1, 1}};
        one.signs[k] = -1;
        CHECK_FALSE(is_product_form(one));
    }

    ParityMatrix row{3, 2, {1, 1, -1, -1, 1, 1}};
    CHECK(is_product_form(row));
}

TEST_CASE("solvability for the cube puzzle") {
    const PuzzleSpec spec = cube_spec(2, 2);
    CHECK(is_solvable(spec, identity_configuration(spec)));

    Configuration bad = identity_configuration(spec);
    bad.at(1, 1) = spec.u;
    CHECK_FALSE(is_solvable(spec, bad));

    for (uint64_t seed = 0; seed < 50; ++seed)
        CHECK(is_solvable(spec, scramble_walk(spec, seed, 15).first));

    const PuzzleSpec coin = coin_spec(2, 2);
    CHECK_THROWS_AS(is_solvable(coin, identity_configuration(coin)), unsupported_spec_error);
}

TEST_CASE("solvability is move invariant") {
    const PuzzleSpec spec = cube_spec(2, 2);
    std::mt19937_64 rng(11);
    for (int t = 0; t < 50; ++t) {
        Configuration c = identity_configuration(spec);
        for (int& e : c.entries) e = static_cast<int>(rng() % 24);
        const bool before = is_solvable(spec, c);
        for (const Move& mv : enumerate_moves(spec))
            CHECK(is_solvable(spec, apply_move(spec, c, mv)) == before);
    }
}

TEST_CASE("order of H") {
    CHECK(order_of_H(cube_spec(3, 1)) == 13824);
    CHECK(order_of_H(cube_spec(3, 2)) == 47775744);
    CHECK(order_of_H(cube_spec(2, 2)) == 165888);
    CHECK(order_of_H(cube_spec(6, 1)) == 191102976);
    CHECK(order_of_H(coin_spec(3, 3)) == 32);
    CHECK(order_of_H(a5_spec(2, 1)) == 3600);

    // S4 with restricted one-sided move sets fits none of the closed forms.
    const S4Data& s = s4();
    const PuzzleSpec odd_spec = make_spec(s.table, {s.u}, {s.l}, 2, 2);
    CHECK_THROWS_AS(order_of_H(odd_spec), unsupported_spec_error);
}

TEST_CASE("parity criterion counts exactly |H|") {
    // Enumerate the full configuration space and count accepted states.
    for (const auto& [m, n] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {3, 1}, {2, 2}}) {
        const PuzzleSpec spec = cube_spec(m, n);
        const CodeSpace space(spec);
        uint64_t accepted = 0;
        for (uint64_t code = 0; code < space.size(); ++code)
            accepted += is_solvable(spec, space.decode(code));
        CHECK(BigInt(accepted) == order_of_H(spec));
    }
}

TEST_CASE("abelian factorization") {
    const PuzzleSpec coin = coin_spec(3, 3);
    std::mt19937_64 rng(12);
    for (int t = 0; t < 50; ++t) {
        Configuration c = identity_configuration(coin);
        std::vector<int> a(3), b(3);
        for (int& v : a) v = static_cast<int>(rng() % 2);
        for (int& v : b) v = static_cast<int>(rng() % 2);
        for (int i = 1; i <= 3; ++i)
            for (int j = 1; j <= 3; ++j) c.at(i, j) = coin.group.mul(a[i - 1], b[j - 1]);
        const auto split = abelian_factorize(coin, c);
        REQUIRE(split.has_value());
        for (int i = 1; i <= 3; ++i)
            for (int j = 1; j <= 3; ++j)
                CHECK(coin.group.mul(split->row_factors[i - 1], split->col_factors[j - 1]) ==
                      c.at(i, j));
    }

    Configuration lone = identity_configuration(coin);
    lone.at(2, 2) = 1;
    CHECK_FALSE(abelian_factorize(coin, lone).has_value());
}

TEST_CASE("abelian solve on the coin puzzle") {
    const PuzzleSpec coin = coin_spec(3, 3);
    CHECK(abelian_solve(coin, identity_configuration(coin)).empty());

    Configuration row_flipped = identity_configuration(coin);
    for (int j = 1; j <= 3; ++j) row_flipped.at(2, j) = 1;
    const MoveSequence fix = abelian_solve(coin, row_flipped);
    CHECK(fix.size() == 1);
    CHECK(apply_sequence(coin, row_flipped, fix) == identity_configuration(coin));

    const std::vector<Move> moves = enumerate_moves(coin);
    std::mt19937_64 rng(13);
    for (int t = 0; t < 100; ++t) {
        Configuration c = identity_configuration(coin);
        for (int k = 0; k < 10; ++k) c = apply_move(coin, c, moves[rng() % moves.size()]);
        const MoveSequence word = abelian_solve(coin, c);
        CHECK(word.size() <= 5);  // m + n - 1
        CHECK(apply_sequence(coin, c, word) == identity_configuration(coin));
    }

    Configuration lone = identity_configuration(coin);
    lone.at(2, 2) = 1;
    CHECK_THROWS_AS(abelian_solve(coin, lone), unsolvable_error);
}

TEST_CASE("abelian solve on a larger cyclic group") {
    const GeneratedGroup z4 = group_from_generators(4, {Permutation{1, 2, 3, 0}});
    const PuzzleSpec spec = make_spec(z4.table, {1, 2, 3}, {1, 2, 3}, 2, 3);
    CHECK(order_of_H(spec) == 256);  // 4^{2+3-1}

    const std::vector<Move> moves = enumerate_moves(spec);
    std::mt19937_64 rng(14);
    for (int t = 0; t < 100; ++t) {
        Configuration c = identity_configuration(spec);
        for (int k = 0; k < 12; ++k) c = apply_move(spec, c, moves[rng() % moves.size()]);
        const MoveSequence word = abelian_solve(spec, c);
        CHECK(word.size() <= 4);
        CHECK(apply_sequence(spec, c, word) == identity_configuration(spec));
    }
}

TEST_CASE("coin solvability matches the minor criterion") {
    const PuzzleSpec coin = coin_spec(3, 3);
    std::mt19937_64 rng(15);
    for (int t = 0; t < 200; ++t) {
        Configuration c = identity_configuration(coin);
        for (int& e : c.entries) e = static_cast<int>(rng() % 2);
        ParityMatrix p{3, 3, {}};
        p.signs.resize(9);
        for (int k = 0; k < 9; ++k) p.signs[k] = c.entries[k] == 0 ? 1 : -1;
        bool solvable = true;
        try {
            abelian_solve(coin, c);
        } catch (const unsolvable_error&) {
            solvable = false;
        }
        CHECK(solvable == is_product_form(p));
    }
}

TEST_CASE("parity normalization") {
    const PuzzleSpec spec = cube_spec(3, 3);
    CHECK(parity_normalize(spec, identity_configuration(spec)).empty());

    const PuzzleSpec one = cube_spec(1, 1);
    Configuration c = identity_configuration(one);
    c.at(1, 1) = one.u;
    const MoveSequence fix = parity_normalize(one, c);
    CHECK(fix.size() == 1);
    CHECK(s4().parity[apply_sequence(one, c, fix).at(1, 1)] == 1);

    for (uint64_t seed = 0; seed < 500; ++seed) {
        const Configuration scr = scramble_uniform_cube(3, 3, 7000 + seed);
        const MoveSequence word = parity_normalize(spec, scr);
        CHECK(word.size() <= 5);  // m + n - 1
        const Configuration after = apply_sequence(spec, scr, word);
        for (int e : after.entries) CHECK(s4().parity[e] == 1);
    }

    Configuration bad = identity_configuration(spec);
    bad.at(2, 2) = spec.u;
    CHECK_THROWS_AS(parity_normalize(spec, bad), unsolvable_error);
}
