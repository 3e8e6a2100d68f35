#pragma once
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "pcube/bfs.hpp"

namespace pcube {

inline constexpr uint64_t kDefaultSubgroupBudget = uint64_t{1} << 26;  // states

// A phase-2 step: one legal move, or the two-quarter double on a restricted
// row. cost is the step's length in the spec's metric.
struct PhaseAction {
    MoveSequence moves;
    int cost = 1;
};

// The subgroup H1 of a cube puzzle obtained by restricting the rows in K to
// double moves u^2 = d^2. Membership is by an enumerated set of state codes
// with their H1-distances; the empty K keeps H1 = H, whose membership test
// is the solvability predicate instead of an enumeration.
class Subgroup {
  public:
    Subgroup(const PuzzleSpec& spec, std::vector<int> k_rows,
             uint64_t state_budget = kDefaultSubgroupBudget);

    const PuzzleSpec& spec() const { return spec_; }
    const CodeSpace& space() const { return space_; }
    const std::vector<int>& k_rows() const { return k_rows_; }
    const std::vector<PhaseAction>& actions() const { return actions_; }
    bool enumerated() const { return enumerated_; }
    uint64_t size() const { return members_.size(); }

    bool contains(uint64_t code) const;
    bool contains(const Configuration& config) const;
    // Metric distance to identity inside H1 (enumerated mode only).
    int distance(uint64_t code) const;

  private:
    PuzzleSpec spec_;
    CodeSpace space_;
    std::vector<int> k_rows_;
    std::vector<PhaseAction> actions_;
    bool enumerated_ = false;
    std::unordered_map<uint64_t, int> members_;
};

struct TwoPhaseSolution {
    MoveSequence phase1;  // all legal moves, shortest word into H1
    MoveSequence phase2;  // restricted moves, finishes inside H1
    MoveSequence whole() const;
};

TwoPhaseSolution solve_two_phase_detailed(const Subgroup& sub, const Configuration& config,
                                          uint64_t state_budget = kDefaultSubgroupBudget);
MoveSequence solve_two_phase(const PuzzleSpec& spec, const Configuration& config,
                             const std::vector<int>& k_rows,
                             uint64_t state_budget = kDefaultSubgroupBudget);

// The K-selection experiment: mean and maximum solution length per candidate
// K over a shared set of seeded uniform scrambles.
struct KBenchRow {
    std::vector<int> k_rows;
    uint64_t subgroup_size = 0;  // 0 for the predicate oracle
    double mean_length = 0.0;
    int max_length = 0;
};
std::vector<KBenchRow> bench_k(const PuzzleSpec& spec,
                               const std::vector<std::vector<int>>& k_sets, uint64_t seed,
                               int count, uint64_t state_budget = kDefaultSubgroupBudget);

}  // namespace pcube
