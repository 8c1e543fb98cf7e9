#include "serre/circulant.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace serre {

Graph::Graph(int n) : n_(n) {
    if (n < 1 || n > kMaxVertices)
        throw std::invalid_argument("graph must have between 1 and 63 vertices");
    adj_.assign(static_cast<size_t>(n), 0);
}

void Graph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("loops are not allowed");
    adj_[static_cast<size_t>(u)] |= std::uint64_t{1} << v;
    adj_[static_cast<size_t>(v)] |= std::uint64_t{1} << u;
}

bool Graph::has_edge(int u, int v) const {
    return (adj_[static_cast<size_t>(u)] >> v) & 1;
}

int Graph::degree(int v) const {
    return std::popcount(adj_[static_cast<size_t>(v)]);
}

int Graph::edge_count() const {
    int twice = 0;
    for (auto row : adj_) twice += std::popcount(row);
    return twice / 2;
}

std::uint64_t Graph::vertex_mask() const {
    if (n_ == 64) return ~std::uint64_t{0};
    return (std::uint64_t{1} << n_) - 1;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u) {
        std::uint64_t higher = adj_[static_cast<size_t>(u)] >> (u + 1);
        while (higher) {
            int v = u + 1 + std::countr_zero(higher);
            out.emplace_back(u, v);
            higher &= higher - 1;
        }
    }
    return out;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
    int n = g.vertex_count() + h.vertex_count();
    Graph out(n);
    for (auto [u, v] : g.edges()) out.add_edge(u, v);
    int off = g.vertex_count();
    for (auto [u, v] : h.edges()) out.add_edge(u + off, v + off);
    return out;
}

std::string edges_csv(const Graph& g) {
    std::ostringstream os;
    for (auto [u, v] : g.edges()) os << u << ',' << v << '\n';
    return os.str();
}

std::string CirculantGraph::id() const {
    std::ostringstream os;
    os << 'C' << n << '(';
    for (size_t i = 0; i < gens.size(); ++i) {
        if (i) os << ',';
        os << gens[i];
    }
    os << ')';
    return os.str();
}

CirculantGraph make_circulant(int n, std::vector<int> gens) {
    if (n < 1) throw std::invalid_argument("circulant graph needs n >= 1");
    if (n > kMaxVertices) throw std::invalid_argument("vertex budget is 63");
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    for (int s : gens)
        if (s < 1 || s > n / 2)
            throw std::invalid_argument("generator outside 1..floor(n/2)");

    CirculantGraph c;
    c.n = n;
    c.gens = gens;
    c.graph = Graph(n);
    for (int v = 0; v < n; ++v)
        for (int s : c.gens) {
            int w = (v + s) % n;
            if (w != v) c.graph.add_edge(v, w);
        }
    return c;
}

std::string family_name(Family f) {
    switch (f) {
        case Family::PowerOfCycle: return "power-of-cycle";
        case Family::UpperInterval: return "upper-interval";
        case Family::OmitOne: return "omit-one";
        case Family::OnePaired: return "one-paired";
        case Family::Cubic: return "cubic";
        case Family::PlainCycle: return "cycle";
    }
    return "?";
}

std::optional<Family> family_from_name(const std::string& name) {
    for (Family f : {Family::PowerOfCycle, Family::UpperInterval, Family::OmitOne,
                     Family::OnePaired, Family::Cubic, Family::PlainCycle})
        if (family_name(f) == name) return f;
    return std::nullopt;
}

FamilyInstance power_of_cycle(int n, int d) {
    if (d < 1 || n < 2 * d)
        throw std::invalid_argument("power_of_cycle needs n >= 2d >= 2");
    std::vector<int> gens(static_cast<size_t>(d));
    std::iota(gens.begin(), gens.end(), 1);
    return {Family::PowerOfCycle, {{"n", n}, {"d", d}}, make_circulant(n, gens)};
}

FamilyInstance upper_interval(int n, int d) {
    if (d < 1 || n < 2 * d + 2)
        throw std::invalid_argument("upper_interval needs n >= 2d+2 and d >= 1");
    std::vector<int> gens;
    for (int s = d + 1; s <= n / 2; ++s) gens.push_back(s);
    return {Family::UpperInterval, {{"n", n}, {"d", d}}, make_circulant(n, gens)};
}

FamilyInstance omit_one(int n, int i) {
    if (n < 3) throw std::invalid_argument("omit_one needs n >= 3");
    if (i < 1 || i > n / 2)
        throw std::invalid_argument("omitted distance outside 1..floor(n/2)");
    std::vector<int> gens;
    for (int s = 1; s <= n / 2; ++s)
        if (s != i) gens.push_back(s);
    return {Family::OmitOne, {{"n", n}, {"i", i}}, make_circulant(n, gens)};
}

FamilyInstance one_paired(int n, int a, int b) {
    if (a < 1 || b < 2) throw std::invalid_argument("one_paired needs a >= 1, b >= 2");
    if (n < 1 || n % (a * b) != 0)
        throw std::invalid_argument("one_paired needs ab | n");
    std::vector<int> gens;
    for (int s = 1; s <= n / 2; ++s)
        if (s % a == 0 && s % (a * b) != 0) gens.push_back(s);
    return {Family::OnePaired, {{"n", n}, {"a", a}, {"b", b}}, make_circulant(n, gens)};
}

FamilyInstance cubic(int two_n, int a) {
    if (two_n < 4 || two_n % 2 != 0)
        throw std::invalid_argument("cubic needs an even vertex count >= 4");
    int half = two_n / 2;
    if (a < 1 || a >= half)
        throw std::invalid_argument("cubic needs 1 <= a < n");
    return {Family::Cubic, {{"two_n", two_n}, {"a", a}}, make_circulant(two_n, {a, half})};
}

FamilyInstance plain_cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
    return {Family::PlainCycle, {{"n", n}}, make_circulant(n, {1})};
}

std::vector<Component> connected_components(const Graph& g) {
    int n = g.vertex_count();
    std::vector<Component> out;
    std::uint64_t seen = 0;
    for (int start = 0; start < n; ++start) {
        if ((seen >> start) & 1) continue;
        std::uint64_t comp = std::uint64_t{1} << start;
        std::uint64_t frontier = comp;
        while (frontier) {
            std::uint64_t next = 0;
            std::uint64_t f = frontier;
            while (f) {
                int v = std::countr_zero(f);
                f &= f - 1;
                next |= g.neighbors(v);
            }
            frontier = next & ~comp;
            comp |= next;
        }
        seen |= comp;

        Component c;
        std::vector<int> pos(static_cast<size_t>(n), -1);
        std::uint64_t m = comp;
        while (m) {
            int v = std::countr_zero(m);
            m &= m - 1;
            pos[static_cast<size_t>(v)] = static_cast<int>(c.vertices.size());
            c.vertices.push_back(v);
        }
        c.induced = Graph(static_cast<int>(c.vertices.size()));
        for (int v : c.vertices) {
            std::uint64_t nb = g.neighbors(v) & comp;
            while (nb) {
                int w = std::countr_zero(nb);
                nb &= nb - 1;
                if (v < w) c.induced.add_edge(pos[static_cast<size_t>(v)], pos[static_cast<size_t>(w)]);
            }
        }
        out.push_back(std::move(c));
    }
    return out;
}

bool is_isomorphism(const Graph& g, const Graph& h, const std::vector<int>& map) {
    int n = g.vertex_count();
    if (h.vertex_count() != n || static_cast<int>(map.size()) != n) return false;
    if (g.edge_count() != h.edge_count()) return false;
    std::uint64_t hit = 0;
    for (int v : map) {
        if (v < 0 || v >= n) return false;
        hit |= std::uint64_t{1} << v;
    }
    if (std::popcount(hit) != n) return false;
    for (auto [u, v] : g.edges())
        if (!h.has_edge(map[static_cast<size_t>(u)], map[static_cast<size_t>(v)])) return false;
    return true;
}

namespace {

// Refined vertex signature: degree plus sorted neighbor degrees.
std::vector<std::vector<int>> degree_signatures(const Graph& g) {
    int n = g.vertex_count();
    std::vector<std::vector<int>> sig(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) {
        std::vector<int> s{g.degree(v)};
        std::uint64_t nb = g.neighbors(v);
        std::vector<int> nd;
        while (nb) {
            int w = std::countr_zero(nb);
            nb &= nb - 1;
            nd.push_back(g.degree(w));
        }
        std::sort(nd.begin(), nd.end());
        s.insert(s.end(), nd.begin(), nd.end());
        sig[static_cast<size_t>(v)] = std::move(s);
    }
    return sig;
}

bool extend(const Graph& g, const Graph& h, const std::vector<std::vector<int>>& sg,
            const std::vector<std::vector<int>>& sh, std::vector<int>& map,
            std::uint64_t used, int depth) {
    int n = g.vertex_count();
    if (depth == n) return true;
    for (int cand = 0; cand < n; ++cand) {
        if ((used >> cand) & 1) continue;
        if (sg[static_cast<size_t>(depth)] != sh[static_cast<size_t>(cand)]) continue;
        bool ok = true;
        for (int prev = 0; prev < depth && ok; ++prev)
            if (g.has_edge(prev, depth) != h.has_edge(map[static_cast<size_t>(prev)], cand)) ok = false;
        if (!ok) continue;
        map[static_cast<size_t>(depth)] = cand;
        if (extend(g, h, sg, sh, map, used | (std::uint64_t{1} << cand), depth + 1)) return true;
    }
    return false;
}

}  // namespace

std::optional<std::vector<int>> graphs_isomorphic(const Graph& g, const Graph& h) {
    if (g.vertex_count() > kIsomorphismVertexBudget ||
        h.vertex_count() > kIsomorphismVertexBudget)
        throw std::invalid_argument("isomorphism search limited to 16 vertices");
    if (g.vertex_count() != h.vertex_count()) return std::nullopt;
    if (g.edge_count() != h.edge_count()) return std::nullopt;

    auto sg = degree_signatures(g);
    auto sh = degree_signatures(h);
    {
        auto a = sg;
        auto b = sh;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) return std::nullopt;
    }
    std::vector<int> map(static_cast<size_t>(g.vertex_count()), -1);
    if (extend(g, h, sg, sh, map, 0, 0)) return map;
    return std::nullopt;
}

}  // namespace serre
