#ifndef SERRE_CIRCULANT_HPP
#define SERRE_CIRCULANT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace serre {

// One 64-bit adjacency row per vertex; everything downstream (faces, links,
// independent sets) reuses the same word-sized set representation.
inline constexpr int kMaxVertices = 63;

class Graph {
public:
    explicit Graph(int n);

    int vertex_count() const { return n_; }
    int edge_count() const;

    void add_edge(int u, int v);
    bool has_edge(int u, int v) const;
    int degree(int v) const;
    std::uint64_t neighbors(int v) const { return adj_[static_cast<size_t>(v)]; }
    std::uint64_t vertex_mask() const;

    // Edge list in lexicographic (u,v) order with u < v.
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph&) const = default;

private:
    int n_;
    std::vector<std::uint64_t> adj_;
};

Graph disjoint_union(const Graph& g, const Graph& h);

// "u,v" rows, one per edge, lexicographically sorted.
std::string edges_csv(const Graph& g);

// C_n(S): vertices 0..n-1, i ~ j iff the cyclic distance between i and j
// lies in S, with S subset of {1,...,floor(n/2)}.
struct CirculantGraph {
    int n = 0;
    std::vector<int> gens;  // ascending
    Graph graph{1};

    std::string id() const;  // e.g. "C12(2,4)"
};

CirculantGraph make_circulant(int n, std::vector<int> gens);

enum class Family {
    PowerOfCycle,
    UpperInterval,
    OmitOne,
    OnePaired,
    Cubic,
    PlainCycle,
};

std::string family_name(Family f);
std::optional<Family> family_from_name(const std::string& name);

struct FamilyInstance {
    Family family;
    std::vector<std::pair<std::string, int>> params;
    CirculantGraph graph;
};

FamilyInstance power_of_cycle(int n, int d);  // C_n(1,...,d), n >= 2d >= 2
FamilyInstance upper_interval(int n, int d);  // C_n(d+1,...,floor(n/2)), n >= 2d+2, d >= 1
FamilyInstance omit_one(int n, int i);        // C_n(1,...,^i,...,floor(n/2))
FamilyInstance one_paired(int n, int a, int b);  // gens = {d : a|d, ab∤d}, ab | n, b >= 2
FamilyInstance cubic(int two_n, int a);       // C_{2n}(a,n), 1 <= a < n
FamilyInstance plain_cycle(int n);            // C_n(1), n >= 3

struct Component {
    std::vector<int> vertices;  // ascending original labels
    Graph induced{1};           // relabeled 0..k-1 preserving that order
};

// Components ordered by smallest original vertex.
std::vector<Component> connected_components(const Graph& g);

inline constexpr int kIsomorphismVertexBudget = 16;

// Backtracking search, degree and neighborhood-degree pruning. Returns the
// vertex map g -> h when the graphs are isomorphic. Rejects inputs with more
// than kIsomorphismVertexBudget vertices.
std::optional<std::vector<int>> graphs_isomorphic(const Graph& g, const Graph& h);

// O(|E|) certificate check: `map` is an edge-preserving bijection g -> h.
bool is_isomorphism(const Graph& g, const Graph& h, const std::vector<int>& map);

}  // namespace serre

#endif
