#include "pcube/puzzle.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

namespace pcube {

namespace {

bool contains(const std::vector<int>& v, int x) {
    return std::find(v.begin(), v.end(), x) != v.end();
}

void validate_move(const PuzzleSpec& spec, const Move& mv) {
    const int lines = (mv.axis == Axis::row) ? spec.rows : spec.cols;
    if (mv.line < 1 || mv.line > lines) throw std::invalid_argument("move line out of range");
    const auto& legal = (mv.axis == Axis::row) ? spec.row_elements : spec.col_elements;
    if (!contains(legal, mv.element)) throw std::invalid_argument("move element not in move set");
    if (mv.power != 1 && !(mv.power == 2 && spec.metric == Metric::half_turn))
        throw std::invalid_argument("move power not legal in this metric");
}

uint64_t draw(std::mt19937_64& rng, uint64_t n) { return rng() % n; }

}  // namespace

PuzzleSpec cube_spec(int m, int n, Metric metric) {
    if (m < 1 || n < 1) throw std::invalid_argument("board dimensions must be positive");
    const S4Data& s = s4();
    PuzzleSpec spec;
    spec.group = s.table;
    spec.row_elements = {s.u, s.d};
    spec.col_elements = {s.l, s.r};
    spec.rows = m;
    spec.cols = n;
    spec.metric = metric;
    spec.cube = true;
    spec.u = s.u;
    spec.d = s.d;
    spec.l = s.l;
    spec.r = s.r;
    return spec;
}

PuzzleSpec make_spec(GroupTable group, std::vector<int> row_elements, std::vector<int> col_elements,
                     int m, int n, Metric metric) {
    if (m < 1 || n < 1) throw std::invalid_argument("board dimensions must be positive");
    for (int e : row_elements)
        if (e < 0 || e >= group.order) throw std::invalid_argument("row element out of range");
    for (int e : col_elements)
        if (e < 0 || e >= group.order) throw std::invalid_argument("column element out of range");
    PuzzleSpec spec;
    spec.group = std::move(group);
    spec.row_elements = std::move(row_elements);
    spec.col_elements = std::move(col_elements);
    spec.rows = m;
    spec.cols = n;
    spec.metric = metric;
    return spec;
}

Configuration identity_configuration(const PuzzleSpec& spec) {
    Configuration c;
    c.rows = spec.rows;
    c.cols = spec.cols;
    c.entries.assign(static_cast<size_t>(spec.rows) * spec.cols, spec.group.identity);
    return c;
}

bool is_identity(const Configuration& c) {
    return std::all_of(c.entries.begin(), c.entries.end(), [](int e) { return e == 0; });
}

Configuration inverse_configuration(const PuzzleSpec& spec, const Configuration& c) {
    Configuration r = c;
    for (int& e : r.entries) e = spec.group.inv(e);
    return r;
}

void apply_move_in_place(const PuzzleSpec& spec, Configuration& config, const Move& mv) {
    validate_move(spec, mv);
    if (config.rows != spec.rows || config.cols != spec.cols)
        throw std::invalid_argument("configuration dimensions do not match spec");
    int g = mv.element;
    if (mv.power == 2) g = spec.group.mul(g, mv.element);
    if (mv.axis == Axis::row) {
        for (int j = 1; j <= spec.cols; ++j)
            config.at(mv.line, j) = spec.group.mul(config.at(mv.line, j), g);
    } else {
        for (int i = 1; i <= spec.rows; ++i)
            config.at(i, mv.line) = spec.group.mul(config.at(i, mv.line), g);
    }
}

Configuration apply_move(const PuzzleSpec& spec, Configuration config, const Move& mv) {
    apply_move_in_place(spec, config, mv);
    return config;
}

Configuration apply_sequence(const PuzzleSpec& spec, Configuration config, const MoveSequence& seq) {
    for (const Move& mv : seq) apply_move_in_place(spec, config, mv);
    return config;
}

MoveSequence invert_sequence(const PuzzleSpec& spec, const MoveSequence& seq) {
    MoveSequence out;
    out.reserve(seq.size());
    for (auto it = seq.rbegin(); it != seq.rend(); ++it) {
        const Move& mv = *it;
        const auto& legal = (mv.axis == Axis::row) ? spec.row_elements : spec.col_elements;
        int inv = spec.group.inv(mv.element);
        if (contains(legal, inv)) {
            out.push_back({mv.axis, mv.line, inv, mv.power});
            continue;
        }
        // Fall back to repeating the move until the element's order wraps.
        int k = spec.group.element_order(mv.element);
        int repeats = (k - mv.power % k) % k;
        for (int t = 0; t < repeats; ++t) out.push_back({mv.axis, mv.line, mv.element, 1});
    }
    return out;
}

std::vector<Move> enumerate_moves(const PuzzleSpec& spec) {
    std::vector<Move> moves;
    for (int i = 1; i <= spec.rows; ++i)
        for (int e : spec.row_elements) moves.push_back({Axis::row, i, e, 1});
    for (int j = 1; j <= spec.cols; ++j)
        for (int e : spec.col_elements) moves.push_back({Axis::column, j, e, 1});
    if (spec.metric == Metric::half_turn) {
        auto add_doubles = [&](Axis axis, int lines, const std::vector<int>& elems) {
            for (int i = 1; i <= lines; ++i) {
                std::vector<int> seen;
                for (int e : elems) {
                    int sq = spec.group.mul(e, e);
                    if (sq == spec.group.identity || contains(seen, sq)) continue;
                    seen.push_back(sq);
                    moves.push_back({axis, i, e, 2});
                }
            }
        };
        add_doubles(Axis::row, spec.rows, spec.row_elements);
        add_doubles(Axis::column, spec.cols, spec.col_elements);
    }
    return moves;
}

std::pair<Configuration, MoveSequence> scramble_walk(const PuzzleSpec& spec, uint64_t seed,
                                                     int length) {
    if (length < 0) throw std::invalid_argument("scramble length must be non-negative");
    std::mt19937_64 rng(seed);
    const auto moves = enumerate_moves(spec);
    Configuration config = identity_configuration(spec);
    MoveSequence word;
    word.reserve(length);
    for (int t = 0; t < length; ++t) {
        const Move& mv = moves[draw(rng, moves.size())];
        apply_move_in_place(spec, config, mv);
        word.push_back(mv);
    }
    return {std::move(config), std::move(word)};
}

Configuration scramble_uniform_cube(int m, int n, uint64_t seed) {
    if (m < 1 || n < 1) throw std::invalid_argument("board dimensions must be positive");
    const S4Data& s = s4();
    std::mt19937_64 rng(seed);
    std::vector<int> row_sign(m + 1, +1), col_sign(n + 1, +1);
    for (int i = 2; i <= m; ++i) row_sign[i] = draw(rng, 2) ? -1 : +1;
    for (int j = 1; j <= n; ++j) col_sign[j] = draw(rng, 2) ? -1 : +1;
    Configuration c;
    c.rows = m;
    c.cols = n;
    c.entries.resize(static_cast<size_t>(m) * n);
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= n; ++j) {
            const auto& pool =
                (row_sign[i] * col_sign[j] > 0) ? s.even_elements : s.odd_elements;
            c.at(i, j) = pool[draw(rng, pool.size())];
        }
    return c;
}

Configuration parse_configuration(std::istream& in) {
    int m = 0, n = 0;
    if (!(in >> m >> n)) throw parse_error("expected board dimensions \"m n\"");
    if (m < 1 || n < 1 || m > 4096 || n > 4096) throw parse_error("bad board dimensions");
    Configuration c;
    c.rows = m;
    c.cols = n;
    c.entries.reserve(static_cast<size_t>(m) * n);
    const S4Data& s = s4();
    for (int k = 0; k < m * n; ++k) {
        std::string tok;
        if (!(in >> tok)) throw parse_error("too few entry tokens");
        if (tok.size() != 4) throw parse_error("entry token must have 4 digits: " + tok);
        Perm4 p;
        for (int i = 0; i < 4; ++i) {
            if (tok[i] < '1' || tok[i] > '4') throw parse_error("bad digit in token: " + tok);
            p.images[i] = tok[i] - '0';
        }
        if (!is_valid_perm4(p)) throw parse_error("token is not a permutation: " + tok);
        c.entries.push_back(s.index_of(p));
    }
    std::string extra;
    if (in >> extra) throw parse_error("trailing garbage after configuration: " + extra);
    return c;
}

Configuration parse_configuration(const std::string& text) {
    std::istringstream in(text);
    return parse_configuration(in);
}

std::string format_configuration(const Configuration& c) {
    const S4Data& s = s4();
    std::ostringstream out;
    out << c.rows << ' ' << c.cols << '\n';
    for (int i = 1; i <= c.rows; ++i) {
        for (int j = 1; j <= c.cols; ++j) {
            if (j > 1) out << ' ';
            out << one_line_token(s.perms[c.at(i, j)]);
        }
        out << '\n';
    }
    return out.str();
}

std::string move_token(const PuzzleSpec& spec, const Move& mv) {
    std::string t;
    if (spec.cube) {
        if (mv.axis == Axis::row)
            t = (mv.element == spec.u) ? "U" : "D";
        else
            t = (mv.element == spec.l) ? "L" : "R";
    } else {
        t = (mv.axis == Axis::row) ? "r" : "c";
    }
    t += std::to_string(mv.line);
    if (!spec.cube) {
        const std::string& lbl = spec.group.label(mv.element);
        t += ':' + (lbl.empty() ? std::to_string(mv.element) : lbl);
    }
    if (mv.power == 2) t += "²";
    return t;
}

std::string format_sequence(const PuzzleSpec& spec, const MoveSequence& seq) {
    std::string out;
    for (const Move& mv : seq) {
        if (!out.empty()) out += ' ';
        out += move_token(spec, mv);
    }
    return out;
}

}  // namespace pcube
