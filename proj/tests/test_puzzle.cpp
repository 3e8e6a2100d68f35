#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <map>
#include <random>
#include <sstream>

#include "doctest.h"
#include "helpers.hpp"
#include "pcube/errors.hpp"
#include "pcube/puzzle.hpp"
#include "pcube/solvability.hpp"

using namespace pcube;

namespace {

Configuration random_config(const PuzzleSpec& spec, std::mt19937_64& rng) {
    Configuration c = identity_configuration(spec);
    for (int& e : c.entries) e = static_cast<int>(rng() % spec.group.order);
    return c;
}

}  // namespace

TEST_CASE("move counts") {
    CHECK(cube_spec(3, 2).move_count() == 10);
    CHECK(cube_spec(1, 1).move_count() == 4);
    CHECK(cube_spec(3, 3).move_count() == 12);
}

TEST_CASE("apply move") {
    const PuzzleSpec one = cube_spec(1, 1);
    Configuration c = identity_configuration(one);
    c = apply_move(one, c, {Axis::row, 1, one.u, 1});
    CHECK(c.at(1, 1) == one.u);

    const PuzzleSpec spec = cube_spec(3, 3);
    std::mt19937_64 rng(1);
    for (int t = 0; t < 20; ++t) {
        const Configuration start = random_config(spec, rng);
        for (int i = 1; i <= 3; ++i) {
            Configuration moved = apply_move(spec, start, {Axis::row, i, spec.u, 1});
            moved = apply_move(spec, moved, {Axis::row, i, spec.d, 1});
            CHECK(moved == start);
        }
    }

    const PuzzleSpec two = cube_spec(2, 2);
    Configuration left = apply_move(two, identity_configuration(two), {Axis::column, 1, two.l, 1});
    CHECK(left.at(1, 1) == two.l);
    CHECK(left.at(2, 1) == two.l);
    CHECK(left.at(1, 2) == 0);
    CHECK(left.at(2, 2) == 0);
}

TEST_CASE("move validation") {
    const PuzzleSpec spec = cube_spec(2, 2);
    const Configuration c = identity_configuration(spec);
    CHECK_THROWS_AS(apply_move(spec, c, {Axis::row, 3, spec.u, 1}), std::invalid_argument);
    CHECK_THROWS_AS(apply_move(spec, c, {Axis::row, 1, spec.l, 1}), std::invalid_argument);
    CHECK_THROWS_AS(apply_move(spec, c, {Axis::row, 1, spec.u, 2}), std::invalid_argument);
    const PuzzleSpec half = cube_spec(2, 2, Metric::half_turn);
    CHECK_NOTHROW(apply_move(half, c, {Axis::row, 1, half.u, 2}));
}

TEST_CASE("apply sequence") {
    const PuzzleSpec spec = cube_spec(3, 2);
    std::mt19937_64 rng(2);
    const Configuration start = random_config(spec, rng);
    CHECK(apply_sequence(spec, start, {}) == start);
    CHECK(apply_sequence(spec, start,
                         {{Axis::row, 1, spec.u, 1}, {Axis::row, 1, spec.d, 1}}) == start);

    const Configuration rolled = apply_sequence(
        spec, identity_configuration(spec),
        {{Axis::row, 1, spec.u, 1}, {Axis::row, 2, spec.u, 1}, {Axis::row, 3, spec.u, 1}});
    for (int e : rolled.entries) CHECK(e == spec.u);
}

TEST_CASE("invert sequence") {
    const PuzzleSpec spec = cube_spec(2, 2);
    CHECK(invert_sequence(spec, {}).empty());

    const MoveSequence up{{Axis::row, 1, spec.u, 1}};
    const MoveSequence down = invert_sequence(spec, up);
    REQUIRE(down.size() == 1);
    CHECK(down[0] == Move{Axis::row, 1, spec.d, 1});

    const MoveSequence word{{Axis::row, 1, spec.u, 1}, {Axis::column, 2, spec.l, 1}};
    const MoveSequence back = invert_sequence(spec, word);
    REQUIRE(back.size() == 2);
    CHECK(back[0] == Move{Axis::column, 2, spec.r, 1});
    CHECK(back[1] == Move{Axis::row, 1, spec.d, 1});

    std::mt19937_64 rng(3);
    const std::vector<Move> moves = enumerate_moves(spec);
    for (int t = 0; t < 50; ++t) {
        MoveSequence seq;
        for (int k = 0; k < 12; ++k) seq.push_back(moves[rng() % moves.size()]);
        const Configuration start = random_config(spec, rng);
        const Configuration there = apply_sequence(spec, start, seq);
        CHECK(apply_sequence(spec, there, invert_sequence(spec, seq)) == start);
    }
}

TEST_CASE("enumerate moves") {
    const PuzzleSpec two = cube_spec(2, 1);
    const std::vector<Move> moves = enumerate_moves(two);
    REQUIRE(moves.size() == 6);
    CHECK(moves[0] == Move{Axis::row, 1, two.u, 1});
    CHECK(moves[1] == Move{Axis::row, 1, two.d, 1});
    CHECK(moves[2] == Move{Axis::row, 2, two.u, 1});
    CHECK(moves[3] == Move{Axis::row, 2, two.d, 1});
    CHECK(moves[4] == Move{Axis::column, 1, two.l, 1});
    CHECK(moves[5] == Move{Axis::column, 1, two.r, 1});

    CHECK(enumerate_moves(cube_spec(1, 1)).size() == 4);

    const PuzzleSpec coin = pcube::testing::coin_spec(2, 3);
    CHECK(enumerate_moves(coin).size() == 5);
}

TEST_CASE("enumerate moves in the half-turn metric") {
    const PuzzleSpec spec = cube_spec(2, 1, Metric::half_turn);
    const std::vector<Move> moves = enumerate_moves(spec);
    // 6 quarter moves, then one deduplicated double per line (u^2 = d^2).
    REQUIRE(moves.size() == 9);
    for (int k = 0; k < 6; ++k) CHECK(moves[k].power == 1);
    CHECK(moves[6] == Move{Axis::row, 1, spec.u, 2});
    CHECK(moves[7] == Move{Axis::row, 2, spec.u, 2});
    CHECK(moves[8] == Move{Axis::column, 1, spec.l, 2});

    // The double acts as the same entry change whichever quarter generates it.
    const Configuration from_u = apply_move(spec, identity_configuration(spec), moves[6]);
    Configuration two_d = identity_configuration(spec);
    two_d = apply_move(spec, two_d, {Axis::row, 1, spec.d, 1});
    two_d = apply_move(spec, two_d, {Axis::row, 1, spec.d, 1});
    CHECK(from_u == two_d);
}

TEST_CASE("row moves commute and column moves commute") {
    const PuzzleSpec spec = cube_spec(2, 2);
    std::mt19937_64 rng(4);
    const Configuration start = random_config(spec, rng);
    std::vector<Move> rows, cols;
    for (const Move& mv : enumerate_moves(spec))
        (mv.axis == Axis::row ? rows : cols).push_back(mv);
    for (const Move& a : rows)
        for (const Move& b : rows)
            CHECK(apply_move(spec, apply_move(spec, start, a), b) ==
                  apply_move(spec, apply_move(spec, start, b), a));
    for (const Move& a : cols)
        for (const Move& b : cols)
            CHECK(apply_move(spec, apply_move(spec, start, a), b) ==
                  apply_move(spec, apply_move(spec, start, b), a));
}

TEST_CASE("moves toggle the parity of exactly one line") {
    const PuzzleSpec spec = cube_spec(3, 2);
    std::mt19937_64 rng(5);
    const Configuration start = random_config(spec, rng);
    const ParityMatrix before = parity_matrix(start);

    const ParityMatrix after_row = parity_matrix(apply_move(spec, start, {Axis::row, 2, spec.u, 1}));
    int flipped = 0;
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 2; ++j) flipped += before.at(i, j) != after_row.at(i, j);
    CHECK(flipped == 2);
    CHECK(before.at(2, 1) == -after_row.at(2, 1));

    const ParityMatrix after_col =
        parity_matrix(apply_move(spec, start, {Axis::column, 1, spec.l, 1}));
    flipped = 0;
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 2; ++j) flipped += before.at(i, j) != after_col.at(i, j);
    CHECK(flipped == 3);
}

TEST_CASE("a commutator word touches exactly one cell") {
    const PuzzleSpec spec = cube_spec(3, 3);
    const GroupTable& g = spec.group;
    std::mt19937_64 rng(6);
    const Configuration start = random_config(spec, rng);
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j)
            for (int x : {spec.u, spec.d})
                for (int y : {spec.l, spec.r}) {
                    const MoveSequence word{{Axis::row, i, x, 1},
                                            {Axis::column, j, y, 1},
                                            {Axis::row, i, g.inv(x), 1},
                                            {Axis::column, j, g.inv(y), 1}};
                    const Configuration after = apply_sequence(spec, start, word);
                    for (int a = 1; a <= 3; ++a)
                        for (int b = 1; b <= 3; ++b) {
                            if (a == i && b == j)
                                CHECK(after.at(a, b) == g.mul(start.at(a, b), commutator(g, x, y)));
                            else
                                CHECK(after.at(a, b) == start.at(a, b));
                        }
                }
}

TEST_CASE("scramble walk") {
    const PuzzleSpec spec = cube_spec(3, 2);
    CHECK(scramble_walk(spec, 9, 0).first == identity_configuration(spec));
    for (uint64_t seed : {1u, 2u, 3u, 4u}) {
        const auto [config, word] = scramble_walk(spec, seed, 25);
        CHECK(word.size() == 25);
        CHECK(is_solvable(spec, config));
        CHECK(apply_sequence(spec, identity_configuration(spec), word) == config);
        CHECK(scramble_walk(spec, seed, 25).first == config);
    }
}

TEST_CASE("uniform cube scramble is solvable and uniform per cell") {
    for (int t = 0; t < 100; ++t)
        CHECK(is_solvable(cube_spec(3, 2), scramble_uniform_cube(3, 2, 100 + t)));

    // 1x1: H is all of S4, so the single entry is uniform over 24 elements.
    std::map<int, int> counts;
    const int draws = 4800;
    for (int t = 0; t < draws; ++t) ++counts[scramble_uniform_cube(1, 1, 50000 + t).at(1, 1)];
    double chi2 = 0;
    const double expect = draws / 24.0;
    for (int e = 0; e < 24; ++e) {
        const double diff = counts[e] - expect;
        chi2 += diff * diff / expect;
    }
    CHECK(chi2 < 60.0);  // 23 degrees of freedom

    // 2x2: the (1,1) entry is uniform within its 12-element parity class.
    std::map<int, int> class_counts[2];
    for (int t = 0; t < draws; ++t) {
        const Configuration c = scramble_uniform_cube(2, 2, 90000 + t);
        const int e = c.at(1, 1);
        ++class_counts[perm_parity(s4().perms[e]) == 1 ? 0 : 1][e];
    }
    for (int cls = 0; cls < 2; ++cls) {
        int total = 0;
        for (const auto& [e, n] : class_counts[cls]) total += n;
        CHECK(class_counts[cls].size() == 12);
        double chi = 0;
        const double exp_class = total / 12.0;
        for (const auto& [e, n] : class_counts[cls]) {
            const double diff = n - exp_class;
            chi += diff * diff / exp_class;
        }
        CHECK(chi < 40.0);  // 11 degrees of freedom
    }
}

TEST_CASE("configuration text round trip") {
    const std::string text = "2 2\n3124 1342\n1243 4123\n";
    const Configuration c = parse_configuration(text);
    CHECK(c.rows == 2);
    CHECK(c.cols == 2);
    CHECK(c.at(1, 1) == s4().index_of(Perm4{std::array<int, 4>{3, 1, 2, 4}}));
    CHECK(format_configuration(c) == text);

    const Configuration ident = parse_configuration("1 1\n1234\n");
    CHECK(is_identity(ident));
    CHECK(format_configuration(ident) == "1 1\n1234\n");

    std::mt19937_64 rng(7);
    const PuzzleSpec spec = cube_spec(3, 2);
    for (int t = 0; t < 20; ++t) {
        const Configuration start = random_config(spec, rng);
        CHECK(parse_configuration(format_configuration(start)) == start);
    }
}

TEST_CASE("configuration parsing rejects malformed input") {
    CHECK_THROWS_AS(parse_configuration("1 2\n1234\n"), parse_error);        // too few tokens
    CHECK_THROWS_AS(parse_configuration("1 1\n1123\n"), parse_error);        // not a permutation
    CHECK_THROWS_AS(parse_configuration("1 1\n1235\n"), parse_error);        // digit out of range
    CHECK_THROWS_AS(parse_configuration("1 1\n123\n"), parse_error);         // short token
    CHECK_THROWS_AS(parse_configuration("1 1\n1234 4321\n"), parse_error);   // trailing token
    CHECK_THROWS_AS(parse_configuration("1 1\n1234\nx\n"), parse_error);     // trailing garbage
    CHECK_THROWS_AS(parse_configuration("0 1\n"), parse_error);              // bad dimensions
    CHECK_THROWS_AS(parse_configuration(""), parse_error);
}

TEST_CASE("move tokens") {
    const PuzzleSpec spec = cube_spec(2, 2);
    CHECK(move_token(spec, {Axis::row, 1, spec.u, 1}) == "U1");
    CHECK(move_token(spec, {Axis::row, 2, spec.d, 1}) == "D2");
    CHECK(move_token(spec, {Axis::column, 1, spec.l, 1}) == "L1");
    CHECK(move_token(spec, {Axis::column, 2, spec.r, 1}) == "R2");
    const PuzzleSpec half = cube_spec(1, 1, Metric::half_turn);
    CHECK(move_token(half, {Axis::row, 1, half.u, 2}) == "U1²");
    CHECK(format_sequence(spec, {{Axis::row, 1, spec.u, 1}, {Axis::column, 2, spec.r, 1}}) ==
          "U1 R2");
}

TEST_CASE("inverse configuration") {
    const PuzzleSpec spec = cube_spec(2, 2);
    std::mt19937_64 rng(8);
    for (int t = 0; t < 20; ++t) {
        const Configuration c = random_config(spec, rng);
        const Configuration inv = inverse_configuration(spec, c);
        for (size_t k = 0; k < c.entries.size(); ++k)
            CHECK(spec.group.mul(c.entries[k], inv.entries[k]) == 0);
    }
}
