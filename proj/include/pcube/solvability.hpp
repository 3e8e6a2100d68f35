#pragma once
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "pcube/puzzle.hpp"

namespace pcube {

using BigInt = boost::multiprecision::cpp_int;

struct ParityMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<int> signs;  // +1 / -1, row-major

    int at(int i, int j) const { return signs[static_cast<size_t>(i - 1) * cols + (j - 1)]; }
    int& at(int i, int j) { return signs[static_cast<size_t>(i - 1) * cols + (j - 1)]; }
    friend bool operator==(const ParityMatrix&, const ParityMatrix&) = default;
};

// Factorization g_ij = a_i * b_j of an Abelian-reachable configuration.
struct AbelianSolution {
    std::vector<int> row_factors;  // a_1..a_m
    std::vector<int> col_factors;  // b_1..b_n
};

// Entrywise permutation sign of a cube-puzzle configuration.
ParityMatrix parity_matrix(const Configuration& config);

// True iff e_ij * e_1j * e_i1 * e_11 = +1 for all i, j > 1, i.e. the signs
// split as e_ij = a_i * b_j.
bool is_product_form(const ParityMatrix& p);

// Membership in H for the cube puzzle, decided by the parity criterion.
// Throws unsupported_spec_error for non-cube specs.
bool is_solvable(const PuzzleSpec& spec, const Configuration& config);

// Closed-form |H| for the three analyzed regimes: the cube puzzle
// (2^{m+n-1} * 12^{mn}), Abelian G with R and C generating (|G|^{m+n-1}),
// and perfect G with R and C generating (|G|^{mn}).
BigInt order_of_H(const PuzzleSpec& spec);

// Splits config as (a_i b_j) when possible; nullopt means not reachable.
// Requires an Abelian group.
std::optional<AbelianSolution> abelian_factorize(const PuzzleSpec& spec,
                                                 const Configuration& config);

// Line-by-line solve for Abelian G where every non-identity element is a
// legal row and column move: first row by column moves, then rows 2..m by row
// moves. At most m+n-1 moves; throws unsolvable_error if a residue remains.
MoveSequence abelian_solve(const PuzzleSpec& spec, const Configuration& config);

// Cube puzzle: at most m+n-1 quarter moves after which every entry is even.
// Toggles use u for rows and l for columns.
MoveSequence parity_normalize(const PuzzleSpec& spec, const Configuration& config);

}  // namespace pcube
