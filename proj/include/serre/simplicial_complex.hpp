#ifndef SERRE_SIMPLICIAL_COMPLEX_HPP
#define SERRE_SIMPLICIAL_COMPLEX_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "serre/circulant.hpp"

namespace serre {

// A face is a vertex set packed into one word (bit i = vertex i).
using Face = std::uint64_t;

Face face_from_vertices(const std::vector<int>& vs);
std::vector<int> face_vertices(Face f);
int face_size(Face f);

// Lexicographic order on ascending vertex sequences; a proper prefix sorts
// first. This is the canonical facet-list order.
bool face_lex_less(Face a, Face b);

Face rotate_face(Face f, int shift, int n);

// Facet-list representation. The void complex (no faces) is an empty facet
// list; the irrelevant complex {∅} is the single facet ∅. Facet lists are
// antichains kept in canonical order.
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    static SimplicialComplex void_complex(int n_vertices);
    static SimplicialComplex irrelevant(int n_vertices);

    // Deduplicates, drops faces contained in other faces, canonicalizes.
    static SimplicialComplex from_facets(int n_vertices, std::vector<Face> facets);
    static SimplicialComplex from_vertex_lists(int n_vertices,
                                               const std::vector<std::vector<int>>& facets);

    int vertex_universe() const { return n_vertices_; }
    const std::vector<Face>& facets() const { return facets_; }

    bool is_void() const { return facets_.empty(); }
    bool is_irrelevant() const { return facets_.size() == 1 && facets_[0] == 0; }

    Face support() const;
    int support_size() const;

    bool is_face(Face f) const;

    int dim() const;  // throws on the void complex; dim {∅} = -1
    bool is_pure() const;

    // f_{-1}=1 first, then faces per dimension.
    std::vector<long long> f_vector() const;

    // Every face, ordered by (size, lex).
    std::vector<Face> all_faces() const;

    SimplicialComplex link(Face f) const;  // throws when f is not a face
    SimplicialComplex shifted(int offset) const;

    // "n=..;facets=v v v|v v|...": memoization and cache key.
    std::string canonical_key() const;

    bool operator==(const SimplicialComplex&) const = default;

private:
    friend SimplicialComplex independence_complex(const Graph&);
    static SimplicialComplex trusted(int n_vertices, std::vector<Face> antichain);

    int n_vertices_ = 0;
    std::vector<Face> facets_;
};

// Facets of the join are all unions of one facet per factor. The supports
// must be disjoint (callers relabel with shifted()).
SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b);

// Facets are the maximal independent sets of g (pivoting clique enumeration
// on the complement graph).
SimplicialComplex independence_complex(const Graph& g);

// 1-skeleton connectivity over the support. Throws on void and {∅}.
bool is_connected(const SimplicialComplex& c);

// Facet-ridge graph connectivity; defined for pure complexes only.
bool is_strongly_connected(const SimplicialComplex& c);

bool rotation_invariant(const SimplicialComplex& c, int order);

// Faces that are minimal in their orbit under v -> v+1 (mod n).
std::vector<Face> orbit_representatives(const std::vector<Face>& faces, int n);

// --- raw-mask helpers shared by the scan-heavy deciders ---

// Facets of link(f) as masks (not an antichain, not normalized).
std::vector<Face> link_facet_masks(const std::vector<Face>& facets, Face f);

// 1-skeleton connectivity of the complex spanned by `facets` (each facet a
// clique of its vertices); a complex with >= 2 support vertices and no edges
// is disconnected. Returns true for <= 1 support vertex.
bool masks_connected(const std::vector<Face>& facets);

int masks_dim(const std::vector<Face>& facets);  // -2 when empty (void)

}  // namespace serre

#endif
