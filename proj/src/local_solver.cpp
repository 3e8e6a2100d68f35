#include "pcube/local_solver.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "pcube/errors.hpp"
#include "pcube/solvability.hpp"

namespace pcube {

namespace {

// Fixed letter order for lexicographic word comparison: u < d < l < r.
int letter_rank(const S4Data& s4, const AbstractMove& mv) {
    if (mv.element == s4.u) return 0;
    if (mv.element == s4.d) return 1;
    if (mv.element == s4.l) return 2;
    return 3;
}

bool word_less(const S4Data& s4, const std::vector<AbstractMove>& a,
               const std::vector<AbstractMove>& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (size_t k = 0; k < a.size(); ++k) {
        const int ra = letter_rank(s4, a[k]);
        const int rb = letter_rank(s4, b[k]);
        if (ra != rb) return ra < rb;
    }
    return false;
}

std::vector<AbstractMove> commutator_word(const S4Data& s4, bool row_first, int x, int y) {
    const int xi = s4.table.inv(x);
    const int yi = s4.table.inv(y);
    if (row_first)
        return {{Axis::row, x}, {Axis::column, y}, {Axis::row, xi}, {Axis::column, yi}};
    return {{Axis::column, y}, {Axis::row, x}, {Axis::column, yi}, {Axis::row, xi}};
}

// Every move of these words passes through the target cell, so the cell's
// entry is right-multiplied by the plain product of the word's elements.
int word_effect(const GroupTable& g, const std::vector<AbstractMove>& word) {
    int eff = g.identity;
    for (const AbstractMove& mv : word) eff = g.mul(eff, mv.element);
    return eff;
}

}  // namespace

RecipeTable build_recipe_table() {
    const S4Data& s4 = pcube::s4();

    std::vector<std::vector<AbstractMove>> basis;
    for (int x : {s4.u, s4.d})
        for (int y : {s4.l, s4.r}) basis.push_back(commutator_word(s4, true, x, y));
    for (int x : {s4.u, s4.d})
        for (int y : {s4.l, s4.r}) basis.push_back(commutator_word(s4, false, x, y));

    std::vector<std::pair<std::vector<AbstractMove>, int>> candidates;
    candidates.emplace_back(std::vector<AbstractMove>{}, 0);
    for (const auto& word : basis) candidates.emplace_back(word, 1);
    for (const auto& first : basis)
        for (const auto& second : basis) {
            std::vector<AbstractMove> word = first;
            word.insert(word.end(), second.begin(), second.end());
            candidates.emplace_back(std::move(word), 2);
        }

    RecipeTable table;
    for (const auto& [word, count] : candidates) {
        const int target = s4.table.inv(word_effect(s4.table, word));
        auto it = table.by_element.find(target);
        if (it == table.by_element.end())
            table.by_element.emplace(target, CommutatorRecipe{target, word, count});
        else if (word_less(s4, word, it->second.word))
            it->second = CommutatorRecipe{target, word, count};
    }

    for (int a : s4.even_elements)
        if (!table.by_element.count(a))
            throw std::logic_error("commutator search left an even element uncovered");
    for (const auto& [target, recipe] : table.by_element)
        if (s4.parity[target] != 1 || recipe.word.size() > 8)
            throw std::logic_error("commutator search produced an invalid recipe");
    return table;
}

MoveSequence instantiate(const CommutatorRecipe& recipe, int row, int col) {
    MoveSequence seq;
    seq.reserve(recipe.word.size());
    for (const AbstractMove& mv : recipe.word)
        seq.push_back({mv.axis, mv.axis == Axis::row ? row : col, mv.element, 1});
    return seq;
}

std::string format_recipe_table(const RecipeTable& table) {
    const S4Data& s4 = pcube::s4();
    std::ostringstream out;
    for (const auto& [target, recipe] : table.by_element) {
        out << s4.table.label(target);
        for (const AbstractMove& mv : recipe.word) out << ' ' << "UDLR"[letter_rank(s4, mv)];
        out << '\n';
    }
    return out.str();
}

MoveSequence solve_local(const PuzzleSpec& spec, const Configuration& config) {
    if (!spec.cube) throw unsupported_spec_error("the local method applies to the cube puzzle");
    if (!is_solvable(spec, config))
        throw unsolvable_error("parity pattern is not of product form");

    static const RecipeTable table = build_recipe_table();

    MoveSequence word = parity_normalize(spec, config);
    Configuration work = apply_sequence(spec, config, word);

    for (int i = 1; i <= spec.rows; ++i)
        for (int j = 1; j <= spec.cols; ++j) {
            const int entry = work.at(i, j);
            if (entry == spec.group.identity) continue;
            const MoveSequence fix = instantiate(table.by_element.at(entry), i, j);
            work = apply_sequence(spec, work, fix);
            word.insert(word.end(), fix.begin(), fix.end());
        }

    if (!is_identity(work)) throw std::logic_error("local method left a residue");
    return word;
}

namespace {

struct LineWords {
    // element -> shortest generator word realizing it, radius-limited
    std::map<int, std::vector<int>> words;
};

LineWords line_ball(const GroupTable& g, const std::vector<int>& generators, int radius) {
    LineWords ball;
    ball.words[g.identity] = {};
    std::vector<int> frontier = {g.identity};
    for (int depth = 0; depth < radius && !frontier.empty(); ++depth) {
        std::vector<int> next;
        for (int elem : frontier)
            for (int gen : generators) {
                const int reached = g.mul(elem, gen);
                if (ball.words.count(reached)) continue;
                std::vector<int> word = ball.words[elem];
                word.push_back(gen);
                ball.words.emplace(reached, std::move(word));
                next.push_back(reached);
            }
        frontier = std::move(next);
    }
    return ball;
}

std::vector<AbstractMove> as_moves(Axis axis, const std::vector<int>& word) {
    std::vector<AbstractMove> moves;
    for (int elem : word) moves.push_back({axis, elem});
    return moves;
}

std::vector<AbstractMove> inverse_moves(const GroupTable& g, const std::vector<AbstractMove>& word) {
    std::vector<AbstractMove> inv;
    for (auto it = word.rbegin(); it != word.rend(); ++it)
        inv.push_back({it->axis, g.inv(it->element)});
    return inv;
}

}  // namespace

GenericRecipes build_generic_recipes(const PuzzleSpec& spec, int max_factor_word,
                                     int max_commutators) {
    const GroupTable& g = spec.group;
    for (int elem : spec.row_elements)
        if (std::find(spec.row_elements.begin(), spec.row_elements.end(), g.inv(elem)) ==
            spec.row_elements.end())
            throw unsupported_spec_error("row move set must be closed under inverses");
    for (int elem : spec.col_elements)
        if (std::find(spec.col_elements.begin(), spec.col_elements.end(), g.inv(elem)) ==
            spec.col_elements.end())
            throw unsupported_spec_error("column move set must be closed under inverses");

    const LineWords rows = line_ball(g, spec.row_elements, max_factor_word);
    const LineWords cols = line_ball(g, spec.col_elements, max_factor_word);

    // Single-commutator building blocks [a,b] and [b,a], keyed by effect.
    std::map<int, std::vector<AbstractMove>> basis;
    auto offer = [&g](std::map<int, std::vector<AbstractMove>>& into, int effect,
                      std::vector<AbstractMove> word) {
        auto it = into.find(effect);
        if (it == into.end())
            into.emplace(effect, std::move(word));
        else if (word.size() < it->second.size())
            it->second = std::move(word);
    };
    for (const auto& [a, wa] : rows.words)
        for (const auto& [b, wb] : cols.words) {
            if (a == g.identity && b == g.identity) continue;
            const std::vector<AbstractMove> ra = as_moves(Axis::row, wa);
            const std::vector<AbstractMove> cb = as_moves(Axis::column, wb);
            const std::vector<AbstractMove> rai = inverse_moves(g, ra);
            const std::vector<AbstractMove> cbi = inverse_moves(g, cb);

            std::vector<AbstractMove> word = ra;
            word.insert(word.end(), cb.begin(), cb.end());
            word.insert(word.end(), rai.begin(), rai.end());
            word.insert(word.end(), cbi.begin(), cbi.end());
            offer(basis, commutator(g, a, b), std::move(word));

            std::vector<AbstractMove> flipped = cb;
            flipped.insert(flipped.end(), ra.begin(), ra.end());
            flipped.insert(flipped.end(), cbi.begin(), cbi.end());
            flipped.insert(flipped.end(), rai.begin(), rai.end());
            offer(basis, commutator(g, b, a), std::move(flipped));
        }

    const std::vector<int> targets = subgroup_closure(g, [&g] {
        std::vector<int> comms;
        for (int a = 0; a < g.order; ++a)
            for (int b = 0; b < g.order; ++b) comms.push_back(commutator(g, a, b));
        std::sort(comms.begin(), comms.end());
        comms.erase(std::unique(comms.begin(), comms.end()), comms.end());
        return comms;
    }());

    std::map<int, std::vector<AbstractMove>> covered;
    covered[g.identity] = {};
    std::map<int, std::vector<AbstractMove>> frontier = covered;
    for (int depth = 0; depth < max_commutators; ++depth) {
        std::map<int, std::vector<AbstractMove>> next;
        for (const auto& [effect, word] : frontier)
            for (const auto& [beffect, bword] : basis) {
                const int combined = g.mul(effect, beffect);
                if (covered.count(combined)) continue;
                std::vector<AbstractMove> joined = word;
                joined.insert(joined.end(), bword.begin(), bword.end());
                offer(next, combined, std::move(joined));
            }
        for (auto& [effect, word] : next) covered.emplace(effect, std::move(word));
        frontier = std::move(next);
        if (frontier.empty()) break;
    }

    GenericRecipes recipes;
    for (int target : targets) {
        auto it = covered.find(g.inv(target));
        if (it == covered.end())
            throw unsupported_spec_error(
                "commutator words do not cover the derived subgroup within the search bounds");
        recipes.by_element[target] = it->second;
    }
    return recipes;
}

MoveSequence solve_local_generic(const PuzzleSpec& spec, const Configuration& config) {
    const GroupTable& g = spec.group;
    if (!is_perfect(g) || !generates(g, spec.row_elements) || !generates(g, spec.col_elements))
        throw unsupported_spec_error(
            "the generic local method needs a perfect group generated by both move sets");

    const GenericRecipes recipes = build_generic_recipes(spec);

    Configuration work = config;
    MoveSequence word;
    for (int i = 1; i <= spec.rows; ++i)
        for (int j = 1; j <= spec.cols; ++j) {
            const int entry = work.at(i, j);
            if (entry == g.identity) continue;
            MoveSequence fix;
            for (const AbstractMove& mv : recipes.by_element.at(entry))
                fix.push_back({mv.axis, mv.axis == Axis::row ? i : j, mv.element, 1});
            work = apply_sequence(spec, work, fix);
            word.insert(word.end(), fix.begin(), fix.end());
        }

    if (!is_identity(work)) throw std::logic_error("generic local method left a residue");
    return word;
}

}  // namespace pcube
