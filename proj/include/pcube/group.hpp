#pragma once
#include <array>
#include <optional>
#include <string>
#include <vector>

#include "pcube/errors.hpp"

namespace pcube {

// One-line permutation of {1,2,3,4}: images[k] is where k+1 maps.
struct Perm4 {
    std::array<int, 4> images{1, 2, 3, 4};
    friend auto operator<=>(const Perm4&, const Perm4&) = default;
};

bool is_valid_perm4(const Perm4& p);
int perm_parity(const Perm4& p);  // +1 even, -1 odd

// Composition is "a then b": compose(a,b)(x) = b(a(x)). Applying a move on
// the right of a word composes in this order.
Perm4 compose(const Perm4& a, const Perm4& b);
Perm4 inverse(const Perm4& p);

// Disjoint-cycle notation over 1..4, e.g. "(1423)", "(12)(34)", "()" for the
// identity. Fixed points are omitted on output.
Perm4 parse_cycles(const std::string& text);
std::string format_cycles(const Perm4& p);
std::string one_line_token(const Perm4& p);  // "4312" style

// Generic small permutation in 0-based one-line form, for building groups on
// up to 8 points.
using Permutation = std::vector<int>;
Permutation compose(const Permutation& a, const Permutation& b);
Permutation inverse_perm(const Permutation& p);

// A finite group as explicit tables. Element 0 is the identity in every table
// built by this module. Immutable after construction; safe to share.
struct GroupTable {
    int order = 0;
    std::vector<int> mul_table;  // order*order, row-major
    std::vector<int> inverse;
    int identity = 0;
    std::vector<std::string> labels;

    int mul(int a, int b) const { return mul_table[static_cast<size_t>(a) * order + b]; }
    int inv(int a) const { return inverse[static_cast<size_t>(a)]; }
    int power(int a, int e) const;
    int element_order(int a) const;
    bool is_abelian() const;
    const std::string& label(int a) const;
};

// Exhaustive check of the group laws (range, identity, inverses,
// associativity). Meant for orders <= 64.
bool validate_group_table(const GroupTable& g);

// a * b * a^-1 * b^-1
int commutator(const GroupTable& g, int a, int b);

struct GeneratedGroup {
    GroupTable table;
    std::vector<Permutation> elements;  // discovery order, identity first
    std::optional<int> find(const Permutation& p) const;
};

// Breadth-first closure of the generators under multiplication. Throws
// budget_exceeded_error if the closure grows past order_bound.
GeneratedGroup group_from_generators(int order_bound, const std::vector<Permutation>& generators);

// Closure of seed elements inside an existing table; sorted element indices.
std::vector<int> subgroup_closure(const GroupTable& g, const std::vector<int>& seeds);
bool generates(const GroupTable& g, const std::vector<int>& seeds);
// G' = G, i.e. the commutators of G generate all of G.
bool is_perfect(const GroupTable& g);

// S4 under the canonical indexing: elements enumerated in lexicographic order
// of their one-line form, so index 0 is the identity 1234. u, d, l, r are the
// four distinguished rotations u=(1423), d=(1324), l=(1342), r=(1243).
struct S4Data {
    GroupTable table;
    std::array<Perm4, 24> perms;
    std::array<int, 24> parity;      // +1 / -1 per element
    std::vector<int> even_elements;  // ascending indices
    std::vector<int> odd_elements;
    int u = 0, d = 0, l = 0, r = 0;

    int index_of(const Perm4& p) const;
};

const S4Data& s4();
GroupTable s4_table();

}  // namespace pcube
