#include "pcube/solvability.hpp"

#include <algorithm>

namespace pcube {

ParityMatrix parity_matrix(const Configuration& config) {
    const S4Data& s = s4();
    ParityMatrix p;
    p.rows = config.rows;
    p.cols = config.cols;
    p.signs.reserve(config.entries.size());
    for (int e : config.entries) p.signs.push_back(s.parity[e]);
    return p;
}

bool is_product_form(const ParityMatrix& p) {
    for (int i = 2; i <= p.rows; ++i)
        for (int j = 2; j <= p.cols; ++j)
            if (p.at(i, j) * p.at(1, j) * p.at(i, 1) * p.at(1, 1) != 1) return false;
    return true;
}

bool is_solvable(const PuzzleSpec& spec, const Configuration& config) {
    if (!spec.cube) throw unsupported_spec_error("membership test requires the cube puzzle");
    if (config.rows != spec.rows || config.cols != spec.cols)
        throw std::invalid_argument("configuration dimensions do not match spec");
    return is_product_form(parity_matrix(config));
}

namespace {

BigInt big_pow(BigInt base, int e) {
    BigInt r = 1;
    for (int k = 0; k < e; ++k) r *= base;
    return r;
}

// Every non-identity correction must be available as a single move.
bool single_move_complete(const GroupTable& g, const std::vector<int>& elems) {
    std::vector<bool> have(g.order, false);
    for (int e : elems) have[e] = true;
    for (int x = 0; x < g.order; ++x)
        if (x != g.identity && !have[x]) return false;
    return true;
}

}  // namespace

BigInt order_of_H(const PuzzleSpec& spec) {
    const int m = spec.rows, n = spec.cols;
    if (spec.cube) return big_pow(2, m + n - 1) * big_pow(12, m * n);
    const bool row_gen = generates(spec.group, spec.row_elements);
    const bool col_gen = generates(spec.group, spec.col_elements);
    if (spec.group.is_abelian() && row_gen && col_gen)
        return big_pow(spec.group.order, m + n - 1);
    if (is_perfect(spec.group) && row_gen && col_gen)
        return big_pow(spec.group.order, m * n);
    throw unsupported_spec_error("no closed-form |H| for this spec");
}

std::optional<AbelianSolution> abelian_factorize(const PuzzleSpec& spec,
                                                 const Configuration& config) {
    if (!spec.group.is_abelian()) throw unsupported_spec_error("factorization requires Abelian G");
    const GroupTable& g = spec.group;
    AbelianSolution sol;
    sol.row_factors.resize(spec.rows);
    sol.col_factors.resize(spec.cols);
    // a_i = g_i1, b_j = g_11^-1 * g_1j (so b_1 = e).
    for (int i = 1; i <= spec.rows; ++i) sol.row_factors[i - 1] = config.at(i, 1);
    for (int j = 1; j <= spec.cols; ++j)
        sol.col_factors[j - 1] = g.mul(g.inv(config.at(1, 1)), config.at(1, j));
    for (int i = 1; i <= spec.rows; ++i)
        for (int j = 1; j <= spec.cols; ++j)
            if (g.mul(sol.row_factors[i - 1], sol.col_factors[j - 1]) != config.at(i, j))
                return std::nullopt;
    return sol;
}

MoveSequence abelian_solve(const PuzzleSpec& spec, const Configuration& config) {
    if (!spec.group.is_abelian()) throw unsupported_spec_error("solver requires Abelian G");
    if (!single_move_complete(spec.group, spec.row_elements) ||
        !single_move_complete(spec.group, spec.col_elements))
        throw unsupported_spec_error("solver requires every correction as a single move");
    if (config.rows != spec.rows || config.cols != spec.cols)
        throw std::invalid_argument("configuration dimensions do not match spec");

    const GroupTable& g = spec.group;
    Configuration work = config;
    MoveSequence seq;
    for (int j = 1; j <= spec.cols; ++j) {
        int e = work.at(1, j);
        if (e == g.identity) continue;
        Move mv{Axis::column, j, g.inv(e), 1};
        apply_move_in_place(spec, work, mv);
        seq.push_back(mv);
    }
    for (int i = 2; i <= spec.rows; ++i) {
        int e = work.at(i, 1);
        if (e == g.identity) continue;
        Move mv{Axis::row, i, g.inv(e), 1};
        apply_move_in_place(spec, work, mv);
        seq.push_back(mv);
    }
    if (!is_identity(work))
        throw unsolvable_error("residue after first row and column; not reachable");
    return seq;
}

MoveSequence parity_normalize(const PuzzleSpec& spec, const Configuration& config) {
    if (!spec.cube) throw unsupported_spec_error("parity normalization requires the cube puzzle");
    if (config.rows != spec.rows || config.cols != spec.cols)
        throw std::invalid_argument("configuration dimensions do not match spec");

    ParityMatrix p = parity_matrix(config);
    MoveSequence seq;
    for (int j = 1; j <= spec.cols; ++j) {
        if (p.at(1, j) == 1) continue;
        seq.push_back({Axis::column, j, spec.l, 1});
        for (int i = 1; i <= spec.rows; ++i) p.at(i, j) = -p.at(i, j);
    }
    for (int i = 2; i <= spec.rows; ++i) {
        if (p.at(i, 1) == 1) continue;
        seq.push_back({Axis::row, i, spec.u, 1});
        for (int j = 1; j <= spec.cols; ++j) p.at(i, j) = -p.at(i, j);
    }
    for (int v : p.signs)
        if (v != 1) throw unsolvable_error("parity pattern is not of product form");
    return seq;
}

}  // namespace pcube
