#pragma once
#include <vector>

#include "pcube/group.hpp"
#include "pcube/puzzle.hpp"

namespace pcube::testing {

// Z2 as the swap of two points; R = C = {flip}, the coin puzzle.
inline PuzzleSpec coin_spec(int m, int n, Metric metric = Metric::quarter_turn) {
    const GeneratedGroup z2 = group_from_generators(2, {Permutation{1, 0}});
    return make_spec(z2.table, {1}, {1}, m, n, metric);
}

// A5 from x = (12345), y = (123); R = C = {x, y, x^-1, y^-1} generate.
inline PuzzleSpec a5_spec(int m, int n) {
    const Permutation x{1, 2, 3, 4, 0};
    const Permutation y{1, 2, 0, 3, 4};
    const GeneratedGroup a5 = group_from_generators(60, {x, y});
    const int ix = *a5.find(x);
    const int iy = *a5.find(y);
    const std::vector<int> gens{ix, iy, a5.table.inv(ix), a5.table.inv(iy)};
    return make_spec(a5.table, gens, gens, m, n);
}

}  // namespace pcube::testing
