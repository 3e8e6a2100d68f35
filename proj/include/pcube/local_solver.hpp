#pragma once
#include <map>
#include <string>
#include <vector>

#include "pcube/puzzle.hpp"

namespace pcube {

// A move template not yet pinned to a board position: row moves take the row
// index of the cell being fixed, column moves the column index.
struct AbstractMove {
    Axis axis = Axis::row;
    int element = 0;
    friend bool operator==(const AbstractMove&, const AbstractMove&) = default;
};

struct CommutatorRecipe {
    int target = 0;                  // element this word cancels (word effect = target inverse)
    std::vector<AbstractMove> word;  // at most 2 commutators, 8 quarter moves
    int commutators = 0;
    friend bool operator==(const CommutatorRecipe&, const CommutatorRecipe&) = default;
};

struct RecipeTable {
    std::map<int, CommutatorRecipe> by_element;  // keyed by target element index
};

// Brute-force search over products of at most two of the eight commutator
// words [x,y], [y,x] for x in {u,d}, y in {l,r}. Covers all twelve even
// elements; ties broken by shortest word, then lexicographic move order.
RecipeTable build_recipe_table();

MoveSequence instantiate(const CommutatorRecipe& recipe, int row, int col);

// One line per even element, ascending element index: the element's one-line
// token followed by the abstract word as letters U D L R.
std::string format_recipe_table(const RecipeTable& table);

// Parity normalization, then per-cell recipe application in row-major order.
// Length at most 8mn + m + n - 1.
MoveSequence solve_local(const PuzzleSpec& spec, const Configuration& config);

// Same strategy for a perfect group with generating rows and columns: every
// cell value lies in the commutator closure, so no parity phase is needed.
struct GenericRecipes {
    std::map<int, std::vector<AbstractMove>> by_element;
};
GenericRecipes build_generic_recipes(const PuzzleSpec& spec, int max_factor_word = 4,
                                     int max_commutators = 3);
MoveSequence solve_local_generic(const PuzzleSpec& spec, const Configuration& config);

}  // namespace pcube
