#include "pcube/group.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace pcube {

bool is_valid_perm4(const Perm4& p) {
    std::array<bool, 4> seen{};
    for (int v : p.images) {
        if (v < 1 || v > 4 || seen[v - 1]) return false;
        seen[v - 1] = true;
    }
    return true;
}

int perm_parity(const Perm4& p) {
    int inversions = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (p.images[i] > p.images[j]) ++inversions;
    return (inversions % 2 == 0) ? +1 : -1;
}

Perm4 compose(const Perm4& a, const Perm4& b) {
    Perm4 r;
    for (int i = 0; i < 4; ++i) r.images[i] = b.images[a.images[i] - 1];
    return r;
}

Perm4 inverse(const Perm4& p) {
    Perm4 r;
    for (int i = 0; i < 4; ++i) r.images[p.images[i] - 1] = i + 1;
    return r;
}

Perm4 parse_cycles(const std::string& text) {
    Perm4 result;
    std::array<bool, 4> mapped{};
    size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip_ws();
    if (pos == text.size()) throw parse_error("empty cycle expression");
    bool any = false;
    while (pos < text.size()) {
        if (text[pos] != '(') throw parse_error("expected '(' in cycle notation: " + text);
        ++pos;
        std::vector<int> cycle;
        while (pos < text.size() && text[pos] != ')') {
            char c = text[pos];
            if (c < '1' || c > '4')
                throw parse_error(std::string("symbol outside 1-4 in cycle: '") + c + "'");
            cycle.push_back(c - '0');
            ++pos;
        }
        if (pos == text.size()) throw parse_error("unterminated cycle: " + text);
        ++pos;  // ')'
        for (int v : cycle) {
            if (mapped[v - 1]) throw parse_error("repeated symbol in cycles: " + text);
            mapped[v - 1] = true;
        }
        for (size_t k = 0; k < cycle.size(); ++k)
            result.images[cycle[k] - 1] = cycle[(k + 1) % cycle.size()];
        any = true;
        skip_ws();
    }
    if (!any) throw parse_error("no cycles found: " + text);
    return result;
}

std::string format_cycles(const Perm4& p) {
    std::string out;
    std::array<bool, 4> visited{};
    for (int s = 1; s <= 4; ++s) {
        if (visited[s - 1] || p.images[s - 1] == s) continue;
        out += '(';
        int c = s;
        do {
            visited[c - 1] = true;
            out += static_cast<char>('0' + c);
            c = p.images[c - 1];
        } while (c != s);
        out += ')';
    }
    if (out.empty()) out = "()";
    return out;
}

std::string one_line_token(const Perm4& p) {
    std::string t(4, '0');
    for (int i = 0; i < 4; ++i) t[i] = static_cast<char>('0' + p.images[i]);
    return t;
}

Permutation compose(const Permutation& a, const Permutation& b) {
    Permutation r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = b[a[i]];
    return r;
}

Permutation inverse_perm(const Permutation& p) {
    Permutation r(p.size());
    for (size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<int>(i);
    return r;
}

int GroupTable::power(int a, int e) const {
    int r = identity;
    for (int k = 0; k < e; ++k) r = mul(r, a);
    return r;
}

int GroupTable::element_order(int a) const {
    int r = a, k = 1;
    while (r != identity) {
        r = mul(r, a);
        ++k;
    }
    return k;
}

bool GroupTable::is_abelian() const {
    for (int a = 0; a < order; ++a)
        for (int b = a + 1; b < order; ++b)
            if (mul(a, b) != mul(b, a)) return false;
    return true;
}

const std::string& GroupTable::label(int a) const {
    static const std::string empty;
    if (a >= 0 && static_cast<size_t>(a) < labels.size()) return labels[a];
    return empty;
}

bool validate_group_table(const GroupTable& g) {
    const int n = g.order;
    if (n <= 0) return false;
    if (g.mul_table.size() != static_cast<size_t>(n) * n) return false;
    if (g.inverse.size() != static_cast<size_t>(n)) return false;
    for (int v : g.mul_table)
        if (v < 0 || v >= n) return false;
    for (int x = 0; x < n; ++x) {
        if (g.mul(g.identity, x) != x || g.mul(x, g.identity) != x) return false;
        if (g.inv(x) < 0 || g.inv(x) >= n) return false;
        if (g.mul(x, g.inv(x)) != g.identity || g.mul(g.inv(x), x) != g.identity) return false;
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c))) return false;
    return true;
}

int commutator(const GroupTable& g, int a, int b) {
    return g.mul(g.mul(g.mul(a, b), g.inv(a)), g.inv(b));
}

std::optional<int> GeneratedGroup::find(const Permutation& p) const {
    for (size_t i = 0; i < elements.size(); ++i)
        if (elements[i] == p) return static_cast<int>(i);
    return std::nullopt;
}

namespace {

std::string perm_label(const Permutation& p) {
    std::string s;
    for (int v : p) s += static_cast<char>('1' + v);
    return s;
}

GroupTable table_from_elements(const std::vector<Permutation>& elems) {
    const int n = static_cast<int>(elems.size());
    std::map<Permutation, int> index;
    for (int i = 0; i < n; ++i) index[elems[i]] = i;
    GroupTable g;
    g.order = n;
    g.identity = 0;
    g.mul_table.resize(static_cast<size_t>(n) * n);
    g.inverse.resize(n);
    g.labels.resize(n);
    for (int a = 0; a < n; ++a) {
        g.labels[a] = perm_label(elems[a]);
        for (int b = 0; b < n; ++b) {
            auto it = index.find(compose(elems[a], elems[b]));
            if (it == index.end()) throw std::logic_error("element set is not closed");
            g.mul_table[static_cast<size_t>(a) * n + b] = it->second;
            if (it->second == 0) g.inverse[a] = b;
        }
    }
    return g;
}

}  // namespace

GeneratedGroup group_from_generators(int order_bound, const std::vector<Permutation>& generators) {
    size_t points = generators.empty() ? 1 : generators.front().size();
    for (const auto& gen : generators) {
        if (gen.size() != points) throw std::invalid_argument("generators act on different sets");
        Permutation sorted = gen;
        std::sort(sorted.begin(), sorted.end());
        for (size_t i = 0; i < points; ++i)
            if (sorted[i] != static_cast<int>(i))
                throw std::invalid_argument("generator is not a permutation");
    }
    Permutation id(points);
    for (size_t i = 0; i < points; ++i) id[i] = static_cast<int>(i);

    GeneratedGroup out;
    out.elements.push_back(id);
    std::map<Permutation, int> index{{id, 0}};
    for (size_t head = 0; head < out.elements.size(); ++head) {
        for (const auto& gen : generators) {
            Permutation p = compose(out.elements[head], gen);
            if (index.emplace(p, static_cast<int>(out.elements.size())).second) {
                out.elements.push_back(std::move(p));
                if (static_cast<int>(out.elements.size()) > order_bound)
                    throw budget_exceeded_error("generator closure exceeds order bound");
            }
        }
    }
    out.table = table_from_elements(out.elements);
    return out;
}

std::vector<int> subgroup_closure(const GroupTable& g, const std::vector<int>& seeds) {
    std::vector<bool> in(g.order, false);
    std::vector<int> list;
    auto add = [&](int x) {
        if (!in[x]) {
            in[x] = true;
            list.push_back(x);
        }
    };
    add(g.identity);
    for (int s : seeds) add(s);
    for (size_t head = 0; head < list.size(); ++head)
        for (int s : seeds) add(g.mul(list[head], s));
    std::sort(list.begin(), list.end());
    return list;
}

bool generates(const GroupTable& g, const std::vector<int>& seeds) {
    return static_cast<int>(subgroup_closure(g, seeds).size()) == g.order;
}

bool is_perfect(const GroupTable& g) {
    std::vector<int> comms;
    for (int a = 0; a < g.order; ++a)
        for (int b = 0; b < g.order; ++b) comms.push_back(commutator(g, a, b));
    return static_cast<int>(subgroup_closure(g, comms).size()) == g.order;
}

namespace {

S4Data build_s4() {
    S4Data d;
    std::array<int, 4> line{1, 2, 3, 4};
    int idx = 0;
    do {
        d.perms[idx].images = line;
        ++idx;
    } while (std::next_permutation(line.begin(), line.end()));

    std::map<std::array<int, 4>, int> index;
    for (int i = 0; i < 24; ++i) index[d.perms[i].images] = i;

    GroupTable& g = d.table;
    g.order = 24;
    g.identity = 0;
    g.mul_table.resize(24 * 24);
    g.inverse.resize(24);
    g.labels.resize(24);
    for (int a = 0; a < 24; ++a) {
        g.labels[a] = one_line_token(d.perms[a]);
        for (int b = 0; b < 24; ++b) {
            int c = index.at(compose(d.perms[a], d.perms[b]).images);
            g.mul_table[static_cast<size_t>(a) * 24 + b] = c;
            if (c == 0) g.inverse[a] = b;
        }
    }
    for (int i = 0; i < 24; ++i) {
        d.parity[i] = perm_parity(d.perms[i]);
        (d.parity[i] > 0 ? d.even_elements : d.odd_elements).push_back(i);
    }
    d.u = index.at(parse_cycles("(1423)").images);
    d.d = index.at(parse_cycles("(1324)").images);
    d.l = index.at(parse_cycles("(1342)").images);
    d.r = index.at(parse_cycles("(1243)").images);
    return d;
}

}  // namespace

const S4Data& s4() {
    static const S4Data data = build_s4();
    return data;
}

GroupTable s4_table() { return s4().table; }

int S4Data::index_of(const Perm4& p) const {
    for (int i = 0; i < 24; ++i)
        if (perms[i] == p) return i;
    throw std::invalid_argument("not a permutation of 1..4");
}

}  // namespace pcube
