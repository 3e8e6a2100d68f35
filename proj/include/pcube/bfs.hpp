#pragma once
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "pcube/solvability.hpp"

namespace pcube {

inline constexpr uint8_t kUnreached = 255;
inline constexpr uint64_t kDefaultBfsBudget = uint64_t{1} << 29;  // bytes

// Mixed-radix packing of a configuration, base |G| per entry in row-major
// order with entry (1,1) least significant, plus pre-stored per-move element
// maps so neighbors come from table lookups instead of group multiplication.
class CodeSpace {
  public:
    explicit CodeSpace(const PuzzleSpec& spec);  // throws std::overflow_error past 2^63 states

    const PuzzleSpec& spec() const { return spec_; }
    uint64_t size() const { return size_; }
    int cells() const { return cells_; }
    const std::vector<Move>& moves() const { return moves_; }
    // Element maps per move: move_tables()[k][g] = g * move element (with power).
    const std::vector<std::vector<int>>& move_tables() const { return tables_; }

    uint64_t encode(const Configuration& config) const;
    Configuration decode(uint64_t code) const;
    uint64_t apply(uint64_t code, int move_index) const;
    // Same transition when the caller maintains the digit expansion of code.
    uint64_t apply_digits(uint64_t code, const std::vector<int>& digits, int move_index) const;

  private:
    PuzzleSpec spec_;
    int cells_ = 0;
    uint64_t size_ = 0;
    std::vector<uint64_t> place_;              // |G|^k per digit
    std::vector<Move> moves_;
    std::vector<std::vector<int>> tables_;
    std::vector<std::vector<int>> affected_;   // digit indices touched per move
};

struct CayleyStats {
    uint64_t reachable_count = 0;
    std::vector<uint64_t> histogram;  // histogram[d] = states at distance d
    int diameter = 0;
    uint64_t total_distance = 0;      // exact mean = total_distance / reachable_count
    int median_distance = 0;          // smallest d with at least half at distance <= d

    std::string mean_2dp() const;     // exact rational rounded half-up to 2 decimals
    std::vector<std::pair<int, uint64_t>> histogram_pairs() const;
    friend bool operator==(const CayleyStats&, const CayleyStats&) = default;
};

struct DistanceTable {
    int rows = 0;
    int cols = 0;
    int group_order = 0;
    std::vector<uint8_t> dist;  // indexed by state code, kUnreached if not in H
};

// Exact single-source breadth-first search from the identity over all moves.
// Frontiers are found by scanning the distance array level by level.
DistanceTable compute_distance_table(const PuzzleSpec& spec, uint64_t budget = kDefaultBfsBudget);
CayleyStats stats_from_table(const DistanceTable& table);
CayleyStats bfs_analyze(const PuzzleSpec& spec, uint64_t budget = kDefaultBfsBudget);

// Shortest word to the identity by greedy descent: at each state take the
// first move in enumeration order that decreases the stored distance.
MoveSequence optimal_solve(const PuzzleSpec& spec, const DistanceTable& table,
                           const Configuration& config);

struct CountReport {
    BigInt formula;
    uint64_t bfs = 0;
    bool match = false;
};
CountReport verify_counts(const PuzzleSpec& spec, uint64_t budget = kDefaultBfsBudget);

// Raw byte-array persistence: 16-byte header ("PCDT", u32 m, u32 n,
// u32 group order, little endian) followed by the distance bytes.
void save_distance_table(const DistanceTable& table, const std::string& path);
DistanceTable load_distance_table(const std::string& path);

// Worst-case length of the commutator-local method, 8mn + m + n - 1.
int local_bound(int m, int n);

std::string stats_table_header();
std::string stats_table_row(const PuzzleSpec& spec, const CayleyStats& stats);

}  // namespace pcube
