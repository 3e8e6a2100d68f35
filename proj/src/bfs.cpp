#include "pcube/bfs.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "pcube/errors.hpp"

namespace pcube {

CodeSpace::CodeSpace(const PuzzleSpec& spec) : spec_(spec) {
    cells_ = spec_.rows * spec_.cols;
    const uint64_t order = spec_.group.order;
    const uint64_t limit = uint64_t{1} << 63;
    uint64_t size = 1;
    place_.resize(cells_);
    for (int k = 0; k < cells_; ++k) {
        place_[k] = size;
        if (size > limit / order)
            throw std::overflow_error("state space exceeds 2^63 codes");
        size *= order;
    }
    size_ = size;

    moves_ = enumerate_moves(spec_);
    tables_.reserve(moves_.size());
    affected_.reserve(moves_.size());
    for (const Move& mv : moves_) {
        std::vector<int> table(order);
        for (int g = 0; g < static_cast<int>(order); ++g) {
            int x = spec_.group.mul(g, mv.element);
            if (mv.power == 2) x = spec_.group.mul(x, mv.element);
            table[g] = x;
        }
        tables_.push_back(std::move(table));

        std::vector<int> touched;
        if (mv.axis == Axis::row) {
            for (int j = 0; j < spec_.cols; ++j)
                touched.push_back((mv.line - 1) * spec_.cols + j);
        } else {
            for (int i = 0; i < spec_.rows; ++i)
                touched.push_back(i * spec_.cols + (mv.line - 1));
        }
        affected_.push_back(std::move(touched));
    }
}

uint64_t CodeSpace::encode(const Configuration& config) const {
    if (config.rows != spec_.rows || config.cols != spec_.cols)
        throw std::invalid_argument("configuration size does not match spec");
    uint64_t code = 0;
    for (int k = 0; k < cells_; ++k)
        code += static_cast<uint64_t>(config.entries[k]) * place_[k];
    return code;
}

Configuration CodeSpace::decode(uint64_t code) const {
    Configuration config = identity_configuration(spec_);
    const uint64_t order = spec_.group.order;
    for (int k = 0; k < cells_; ++k) {
        config.entries[k] = static_cast<int>(code % order);
        code /= order;
    }
    return config;
}

uint64_t CodeSpace::apply(uint64_t code, int move_index) const {
    const uint64_t order = spec_.group.order;
    const std::vector<int>& table = tables_[move_index];
    for (int k : affected_[move_index]) {
        const uint64_t digit = (code / place_[k]) % order;
        code += (static_cast<uint64_t>(table[digit]) - digit) * place_[k];
    }
    return code;
}

uint64_t CodeSpace::apply_digits(uint64_t code, const std::vector<int>& digits,
                                 int move_index) const {
    const std::vector<int>& table = tables_[move_index];
    for (int k : affected_[move_index]) {
        const uint64_t digit = digits[k];
        code += (static_cast<uint64_t>(table[digit]) - digit) * place_[k];
    }
    return code;
}

DistanceTable compute_distance_table(const PuzzleSpec& spec, uint64_t budget) {
    CodeSpace space(spec);
    if (space.size() > budget) {
        std::ostringstream msg;
        msg << "distance table needs " << space.size() << " bytes, budget is " << budget;
        throw budget_exceeded_error(msg.str());
    }

    DistanceTable table;
    table.rows = spec.rows;
    table.cols = spec.cols;
    table.group_order = spec.group.order;
    table.dist.assign(space.size(), kUnreached);
    table.dist[0] = 0;

    const int move_count = static_cast<int>(space.moves().size());
    const uint64_t size = space.size();
    const int order = spec.group.order;
    std::vector<int> digits(space.cells(), 0);

    for (uint8_t level = 0;; ++level) {
        bool grew = false;
        std::fill(digits.begin(), digits.end(), 0);
        for (uint64_t code = 0; code < size; ++code) {
            if (table.dist[code] == level) {
                for (int mv = 0; mv < move_count; ++mv) {
                    const uint64_t next = space.apply_digits(code, digits, mv);
                    if (table.dist[next] == kUnreached) {
                        table.dist[next] = level + 1;
                        grew = true;
                    }
                }
            }
            for (int k = 0; k < space.cells(); ++k) {
                if (++digits[k] < order) break;
                digits[k] = 0;
            }
        }
        if (!grew) break;
        if (level + 1 == kUnreached)
            throw std::logic_error("distance exceeded byte sentinel");
    }
    return table;
}

CayleyStats stats_from_table(const DistanceTable& table) {
    CayleyStats stats;
    for (uint8_t d : table.dist) {
        if (d == kUnreached) continue;
        if (d >= stats.histogram.size()) stats.histogram.resize(d + 1, 0);
        ++stats.histogram[d];
        ++stats.reachable_count;
        stats.total_distance += d;
    }
    stats.diameter = static_cast<int>(stats.histogram.size()) - 1;
    uint64_t cumulative = 0;
    for (int d = 0; d <= stats.diameter; ++d) {
        cumulative += stats.histogram[d];
        if (2 * cumulative >= stats.reachable_count) {
            stats.median_distance = d;
            break;
        }
    }
    return stats;
}

CayleyStats bfs_analyze(const PuzzleSpec& spec, uint64_t budget) {
    return stats_from_table(compute_distance_table(spec, budget));
}

std::string CayleyStats::mean_2dp() const {
    const uint64_t hundredths =
        (200 * total_distance + reachable_count) / (2 * reachable_count);
    std::ostringstream out;
    out << hundredths / 100 << '.' << std::setw(2) << std::setfill('0') << hundredths % 100;
    return out.str();
}

std::vector<std::pair<int, uint64_t>> CayleyStats::histogram_pairs() const {
    std::vector<std::pair<int, uint64_t>> pairs;
    for (int d = 0; d < static_cast<int>(histogram.size()); ++d)
        pairs.emplace_back(d, histogram[d]);
    return pairs;
}

MoveSequence optimal_solve(const PuzzleSpec& spec, const DistanceTable& table,
                           const Configuration& config) {
    CodeSpace space(spec);
    if (table.rows != spec.rows || table.cols != spec.cols ||
        table.group_order != spec.group.order || table.dist.size() != space.size())
        throw std::invalid_argument("distance table does not match spec");

    uint64_t code = space.encode(config);
    if (table.dist[code] == kUnreached)
        throw unsolvable_error("configuration is outside the reachable set");

    MoveSequence word;
    while (code != 0) {
        const uint8_t here = table.dist[code];
        bool stepped = false;
        for (size_t mv = 0; mv < space.moves().size(); ++mv) {
            const uint64_t next = space.apply(code, static_cast<int>(mv));
            if (table.dist[next] == here - 1) {
                word.push_back(space.moves()[mv]);
                code = next;
                stepped = true;
                break;
            }
        }
        if (!stepped)
            throw std::logic_error("no distance-decreasing move; table is inconsistent");
    }
    return word;
}

CountReport verify_counts(const PuzzleSpec& spec, uint64_t budget) {
    CountReport report;
    report.formula = order_of_H(spec);
    report.bfs = bfs_analyze(spec, budget).reachable_count;
    report.match = report.formula == BigInt(report.bfs);
    return report;
}

namespace {

constexpr char kTableMagic[4] = {'P', 'C', 'D', 'T'};

void put_u32(std::ostream& out, uint32_t value) {
    char bytes[4];
    for (int i = 0; i < 4; ++i) bytes[i] = static_cast<char>((value >> (8 * i)) & 0xff);
    out.write(bytes, 4);
}

uint32_t get_u32(std::istream& in) {
    char bytes[4];
    in.read(bytes, 4);
    uint32_t value = 0;
    for (int i = 0; i < 4; ++i)
        value |= static_cast<uint32_t>(static_cast<unsigned char>(bytes[i])) << (8 * i);
    return value;
}

}  // namespace

void save_distance_table(const DistanceTable& table, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out.write(kTableMagic, 4);
    put_u32(out, static_cast<uint32_t>(table.rows));
    put_u32(out, static_cast<uint32_t>(table.cols));
    put_u32(out, static_cast<uint32_t>(table.group_order));
    out.write(reinterpret_cast<const char*>(table.dist.data()),
              static_cast<std::streamsize>(table.dist.size()));
    if (!out) throw std::runtime_error("write failed for " + path);
}

DistanceTable load_distance_table(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    char magic[4];
    in.read(magic, 4);
    if (!in || !std::equal(magic, magic + 4, kTableMagic))
        throw parse_error(path + ": not a distance table");

    DistanceTable table;
    table.rows = static_cast<int>(get_u32(in));
    table.cols = static_cast<int>(get_u32(in));
    table.group_order = static_cast<int>(get_u32(in));
    if (!in || table.rows < 1 || table.cols < 1 || table.group_order < 1)
        throw parse_error(path + ": corrupt header");

    uint64_t size = 1;
    for (int k = 0; k < table.rows * table.cols; ++k)
        size *= static_cast<uint64_t>(table.group_order);
    table.dist.resize(size);
    in.read(reinterpret_cast<char*>(table.dist.data()), static_cast<std::streamsize>(size));
    if (!in || in.gcount() != static_cast<std::streamsize>(size))
        throw parse_error(path + ": truncated distance data");
    return table;
}

int local_bound(int m, int n) { return 8 * m * n + m + n - 1; }

std::string stats_table_header() {
    return "Size    Diameter  Average  Median  Local est.  Nr. of conf.";
}

std::string stats_table_row(const PuzzleSpec& spec, const CayleyStats& stats) {
    std::ostringstream size_text;
    size_text << spec.rows << 'x' << spec.cols;
    char row[128];
    std::snprintf(row, sizeof(row), "%-7s %8d %8s %7d %11d %13llu",
                  size_text.str().c_str(), stats.diameter, stats.mean_2dp().c_str(),
                  stats.median_distance, local_bound(spec.rows, spec.cols),
                  static_cast<unsigned long long>(stats.reachable_count));
    return row;
}

}  // namespace pcube
