#pragma once
#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "pcube/group.hpp"

namespace pcube {

enum class Metric { quarter_turn, half_turn };
enum class Axis { row, column };

// A single line rotation. line is 1-based; element must belong to the spec's
// R (rows) or C (columns); power 2 is only legal in the half-turn metric.
struct Move {
    Axis axis = Axis::row;
    int line = 1;
    int element = 0;
    int power = 1;
    friend bool operator==(const Move&, const Move&) = default;
};
using MoveSequence = std::vector<Move>;

// The generalized puzzle (G, R, C, m, n). Configurations live in G^{m x n}
// and moves right-multiply whole lines by a generator. Immutable in use;
// safe to share across threads.
struct PuzzleSpec {
    GroupTable group;
    std::vector<int> row_elements;  // R
    std::vector<int> col_elements;  // C
    int rows = 1;
    int cols = 1;
    Metric metric = Metric::quarter_turn;

    // Set by cube_spec(): S4 with R = {u, d}, C = {l, r}.
    bool cube = false;
    int u = -1, d = -1, l = -1, r = -1;

    // Quarter-turn generator count m|R| + n|C|.
    int move_count() const {
        return rows * static_cast<int>(row_elements.size()) +
               cols * static_cast<int>(col_elements.size());
    }
};

struct Configuration {
    int rows = 0;
    int cols = 0;
    std::vector<int> entries;  // row-major element indices

    int& at(int i, int j) { return entries[static_cast<size_t>(i - 1) * cols + (j - 1)]; }
    int at(int i, int j) const { return entries[static_cast<size_t>(i - 1) * cols + (j - 1)]; }
    friend bool operator==(const Configuration&, const Configuration&) = default;
};

PuzzleSpec cube_spec(int m, int n, Metric metric = Metric::quarter_turn);
PuzzleSpec make_spec(GroupTable group, std::vector<int> row_elements, std::vector<int> col_elements,
                     int m, int n, Metric metric = Metric::quarter_turn);

Configuration identity_configuration(const PuzzleSpec& spec);
bool is_identity(const Configuration& c);
Configuration inverse_configuration(const PuzzleSpec& spec, const Configuration& c);

void apply_move_in_place(const PuzzleSpec& spec, Configuration& config, const Move& mv);
Configuration apply_move(const PuzzleSpec& spec, Configuration config, const Move& mv);
Configuration apply_sequence(const PuzzleSpec& spec, Configuration config, const MoveSequence& seq);

// Reversed order with each move inverted. An element whose inverse is not in
// the legal move set is undone by repeating the same move until its order
// wraps, so inversion is total.
MoveSequence invert_sequence(const PuzzleSpec& spec, const MoveSequence& seq);

// Deterministic order: row moves by row index then R order, then column moves
// by column index then C order. In the half-turn metric the distinct power-2
// moves follow, in the same line order.
std::vector<Move> enumerate_moves(const PuzzleSpec& spec);

// Seeded random walk from the identity configuration. The generator is
// mt19937_64 seeded directly; bounded draws use the modulo of the raw output,
// so the same seed reproduces on every platform.
std::pair<Configuration, MoveSequence> scramble_walk(const PuzzleSpec& spec, uint64_t seed,
                                                     int length);

// Exactly uniform sample of a reachable cube configuration: random signs
// a_2..a_m, b_1..b_n (a_1 = +1) fix the parity pattern e_ij = a_i b_j, then
// each entry is uniform over the 12 elements of S4 with that parity.
Configuration scramble_uniform_cube(int m, int n, uint64_t seed);

// Configuration text format (cube puzzle):
//   line 1: "m n"
//   lines 2..m+1: n tokens, each 4 digits of one-line notation ("4321" maps
//   1->4, 2->3, 3->2, 4->1); the identity is "1234".
// Parsing rejects wrong token counts, non-permutation tokens and trailing
// garbage.
Configuration parse_configuration(std::istream& in);
Configuration parse_configuration(const std::string& text);
std::string format_configuration(const Configuration& c);

// "U2", "L1", half-turn doubles as "U1²"; generic specs fall back to
// r/c + line + element label.
std::string move_token(const PuzzleSpec& spec, const Move& mv);
std::string format_sequence(const PuzzleSpec& spec, const MoveSequence& seq);

}  // namespace pcube
