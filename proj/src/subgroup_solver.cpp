#include "pcube/subgroup_solver.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <stdexcept>

#include "pcube/errors.hpp"

namespace pcube {

namespace {

uint64_t apply_action(const CodeSpace& space, uint64_t code, const PhaseAction& action,
                      const std::vector<int>& move_index) {
    for (size_t k = 0; k < action.moves.size(); ++k) code = space.apply(code, move_index[k]);
    return code;
}

}  // namespace

Subgroup::Subgroup(const PuzzleSpec& spec, std::vector<int> k_rows, uint64_t state_budget)
    : spec_(spec), space_(spec), k_rows_(std::move(k_rows)) {
    if (!spec_.cube)
        throw unsupported_spec_error("row-restricted subgroups are defined for the cube puzzle");
    std::sort(k_rows_.begin(), k_rows_.end());
    k_rows_.erase(std::unique(k_rows_.begin(), k_rows_.end()), k_rows_.end());
    for (int row : k_rows_)
        if (row < 1 || row > spec_.rows)
            throw std::invalid_argument("restricted row index out of range");

    const auto restricted = [this](int row) {
        return std::binary_search(k_rows_.begin(), k_rows_.end(), row);
    };
    for (const Move& mv : space_.moves()) {
        if (mv.axis == Axis::row && restricted(mv.line) && mv.power != 2) continue;
        actions_.push_back({{mv}, 1});
    }
    if (spec_.metric == Metric::quarter_turn)
        for (int row : k_rows_) {
            const Move up{Axis::row, row, spec_.u, 1};
            actions_.push_back({{up, up}, 2});
        }

    if (k_rows_.empty()) return;  // H1 = H, membership by the parity predicate

    // Per-action move indices into the code space's enumeration, so Dial
    // expansion is pure table lookups.
    std::vector<std::vector<int>> action_moves;
    for (const PhaseAction& action : actions_) {
        std::vector<int> indices;
        for (const Move& mv : action.moves) {
            const auto& all = space_.moves();
            const auto it = std::find(all.begin(), all.end(), mv);
            if (it == all.end()) throw std::logic_error("phase action uses an unknown move");
            indices.push_back(static_cast<int>(it - all.begin()));
        }
        action_moves.push_back(std::move(indices));
    }

    // Dial's algorithm over costs {1, 2}; lazy deletion handles the rare
    // improvement of a first-touch distance.
    enumerated_ = true;
    std::vector<std::vector<uint64_t>> buckets(2);
    members_[0] = 0;
    buckets[0].push_back(0);
    for (int d = 0; d < static_cast<int>(buckets.size()); ++d) {
        for (size_t at = 0; at < buckets[d].size(); ++at) {
            const uint64_t code = buckets[d][at];
            const auto settled = members_.find(code);
            if (settled == members_.end() || settled->second != d) continue;
            for (size_t a = 0; a < actions_.size(); ++a) {
                const uint64_t next = apply_action(space_, code, actions_[a], action_moves[a]);
                const int nd = d + actions_[a].cost;
                const auto it = members_.find(next);
                if (it != members_.end() && it->second <= nd) continue;
                if (it == members_.end() && members_.size() >= state_budget)
                    throw budget_exceeded_error("subgroup enumeration exceeded the state budget");
                members_[next] = nd;
                if (nd >= static_cast<int>(buckets.size())) buckets.resize(nd + 1);
                buckets[nd].push_back(next);
            }
        }
        buckets[d].clear();
        buckets[d].shrink_to_fit();
    }
}

bool Subgroup::contains(uint64_t code) const {
    if (enumerated_) return members_.count(code) != 0;
    return is_solvable(spec_, space_.decode(code));
}

bool Subgroup::contains(const Configuration& config) const {
    return contains(space_.encode(config));
}

int Subgroup::distance(uint64_t code) const {
    if (!enumerated_) throw std::logic_error("distances require an enumerated subgroup");
    return members_.at(code);
}

MoveSequence TwoPhaseSolution::whole() const {
    MoveSequence seq = phase1;
    seq.insert(seq.end(), phase2.begin(), phase2.end());
    return seq;
}

namespace {

// Shortest all-moves word from start into the accepted set, first hit in
// level order with neighbors expanded in move enumeration order.
MoveSequence search_into(const CodeSpace& space, uint64_t start,
                         const std::function<bool(uint64_t)>& accept, uint64_t state_budget) {
    if (accept(start)) return {};

    std::unordered_map<uint64_t, std::pair<uint64_t, int>> parent;
    std::deque<uint64_t> queue;
    parent.emplace(start, std::make_pair(start, -1));
    queue.push_back(start);

    while (!queue.empty()) {
        const uint64_t code = queue.front();
        queue.pop_front();
        for (size_t mv = 0; mv < space.moves().size(); ++mv) {
            const uint64_t next = space.apply(code, static_cast<int>(mv));
            if (parent.count(next)) continue;
            if (parent.size() >= state_budget)
                throw budget_exceeded_error("search frontier exceeded the state budget");
            parent.emplace(next, std::make_pair(code, static_cast<int>(mv)));
            if (accept(next)) {
                MoveSequence word;
                for (uint64_t at = next; at != start;) {
                    const auto& [prev, via] = parent.at(at);
                    word.push_back(space.moves()[via]);
                    at = prev;
                }
                std::reverse(word.begin(), word.end());
                return word;
            }
            queue.push_back(next);
        }
    }
    throw unsolvable_error("no word reaches the subgroup from this configuration");
}

}  // namespace

TwoPhaseSolution solve_two_phase_detailed(const Subgroup& sub, const Configuration& config,
                                          uint64_t state_budget) {
    const CodeSpace& space = sub.space();
    TwoPhaseSolution solution;
    solution.phase1 = search_into(
        space, space.encode(config), [&sub](uint64_t code) { return sub.contains(code); },
        state_budget);

    uint64_t code = space.encode(config);
    for (const Move& mv : solution.phase1) {
        const auto& all = space.moves();
        const auto it = std::find(all.begin(), all.end(), mv);
        code = space.apply(code, static_cast<int>(it - all.begin()));
    }

    if (sub.enumerated()) {
        // Descend the stored H1 distances; the action set is inverse-closed
        // with matching costs, so a strictly decreasing step always exists.
        std::vector<std::vector<int>> action_moves;
        for (const PhaseAction& action : sub.actions()) {
            std::vector<int> indices;
            for (const Move& mv : action.moves) {
                const auto& all = space.moves();
                indices.push_back(
                    static_cast<int>(std::find(all.begin(), all.end(), mv) - all.begin()));
            }
            action_moves.push_back(std::move(indices));
        }
        int d = sub.distance(code);
        while (code != 0) {
            bool stepped = false;
            for (size_t a = 0; a < sub.actions().size(); ++a) {
                const uint64_t next = apply_action(space, code, sub.actions()[a], action_moves[a]);
                if (!sub.contains(next) || sub.distance(next) != d - sub.actions()[a].cost)
                    continue;
                const MoveSequence& step = sub.actions()[a].moves;
                solution.phase2.insert(solution.phase2.end(), step.begin(), step.end());
                code = next;
                d -= sub.actions()[a].cost;
                stepped = true;
                break;
            }
            if (!stepped) throw std::logic_error("subgroup distances admit no descending step");
        }
        return solution;
    }

    // Predicate oracle (K empty): the restricted move set is the full one,
    // so finishing is a plain search to the identity.
    solution.phase2 =
        search_into(space, code, [](uint64_t c) { return c == 0; }, state_budget);
    return solution;
}

MoveSequence solve_two_phase(const PuzzleSpec& spec, const Configuration& config,
                             const std::vector<int>& k_rows, uint64_t state_budget) {
    const Subgroup sub(spec, k_rows, state_budget);
    return solve_two_phase_detailed(sub, config, state_budget).whole();
}

std::vector<KBenchRow> bench_k(const PuzzleSpec& spec,
                               const std::vector<std::vector<int>>& k_sets, uint64_t seed,
                               int count, uint64_t state_budget) {
    std::vector<Configuration> scrambles;
    scrambles.reserve(count);
    for (int t = 0; t < count; ++t)
        scrambles.push_back(scramble_uniform_cube(spec.rows, spec.cols, seed + t));

    std::vector<KBenchRow> rows;
    for (const std::vector<int>& k : k_sets) {
        const Subgroup sub(spec, k, state_budget);
        KBenchRow row;
        row.k_rows = sub.k_rows();
        row.subgroup_size = sub.enumerated() ? sub.size() : 0;
        uint64_t total = 0;
        for (const Configuration& config : scrambles) {
            const size_t len = solve_two_phase_detailed(sub, config, state_budget).whole().size();
            total += len;
            row.max_length = std::max(row.max_length, static_cast<int>(len));
        }
        row.mean_length = count > 0 ? static_cast<double>(total) / count : 0.0;
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace pcube
