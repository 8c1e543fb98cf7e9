#include "serre/simplicial_complex.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace serre {

Face face_from_vertices(const std::vector<int>& vs) {
    Face f = 0;
    for (int v : vs) {
        if (v < 0 || v > kMaxVertices) throw std::invalid_argument("vertex outside 0..62");
        f |= Face{1} << v;
    }
    return f;
}

std::vector<int> face_vertices(Face f) {
    std::vector<int> vs;
    while (f) {
        vs.push_back(std::countr_zero(f));
        f &= f - 1;
    }
    return vs;
}

int face_size(Face f) { return std::popcount(f); }

bool face_lex_less(Face a, Face b) {
    while (a && b) {
        int va = std::countr_zero(a);
        int vb = std::countr_zero(b);
        if (va != vb) return va < vb;
        a &= a - 1;
        b &= b - 1;
    }
    return a == 0 && b != 0;
}

Face rotate_face(Face f, int shift, int n) {
    shift %= n;
    if (shift < 0) shift += n;
    Face mask = (n == 64) ? ~Face{0} : (Face{1} << n) - 1;
    return ((f << shift) | (f >> (n - shift))) & mask;
}

namespace {

void canonicalize(std::vector<Face>& fs) {
    std::sort(fs.begin(), fs.end(), face_lex_less);
    fs.erase(std::unique(fs.begin(), fs.end()), fs.end());
}

// Keep only maximal sets.
void maximalize(std::vector<Face>& fs) {
    std::sort(fs.begin(), fs.end(),
              [](Face a, Face b) { return face_size(a) > face_size(b); });
    std::vector<Face> keep;
    keep.reserve(fs.size());
    for (Face f : fs) {
        bool covered = false;
        for (Face g : keep)
            if ((f | g) == g) {
                covered = true;
                break;
            }
        if (!covered) keep.push_back(f);
    }
    fs = std::move(keep);
}

}  // namespace

SimplicialComplex SimplicialComplex::void_complex(int n_vertices) {
    SimplicialComplex c;
    c.n_vertices_ = n_vertices;
    return c;
}

SimplicialComplex SimplicialComplex::irrelevant(int n_vertices) {
    SimplicialComplex c;
    c.n_vertices_ = n_vertices;
    c.facets_ = {0};
    return c;
}

SimplicialComplex SimplicialComplex::trusted(int n_vertices, std::vector<Face> antichain) {
    SimplicialComplex c;
    c.n_vertices_ = n_vertices;
    c.facets_ = std::move(antichain);
    canonicalize(c.facets_);
    return c;
}

SimplicialComplex SimplicialComplex::from_facets(int n_vertices, std::vector<Face> facets) {
    if (n_vertices < 0 || n_vertices > kMaxVertices)
        throw std::invalid_argument("vertex universe outside 0..63");
    Face universe = (n_vertices == 0) ? 0 : ((Face{1} << n_vertices) - 1);
    for (Face f : facets)
        if (f & ~universe) throw std::invalid_argument("facet outside the vertex universe");
    maximalize(facets);
    return trusted(n_vertices, std::move(facets));
}

SimplicialComplex SimplicialComplex::from_vertex_lists(
    int n_vertices, const std::vector<std::vector<int>>& facets) {
    std::vector<Face> fs;
    fs.reserve(facets.size());
    for (const auto& vs : facets) fs.push_back(face_from_vertices(vs));
    return from_facets(n_vertices, std::move(fs));
}

Face SimplicialComplex::support() const {
    Face s = 0;
    for (Face f : facets_) s |= f;
    return s;
}

int SimplicialComplex::support_size() const { return face_size(support()); }

bool SimplicialComplex::is_face(Face f) const {
    for (Face g : facets_)
        if ((f | g) == g) return true;
    return false;
}

int SimplicialComplex::dim() const {
    if (is_void()) throw std::domain_error("dimension of the void complex is undefined");
    int best = 0;
    for (Face f : facets_) best = std::max(best, face_size(f));
    return best - 1;
}

bool SimplicialComplex::is_pure() const {
    if (facets_.size() <= 1) return true;
    int k = face_size(facets_[0]);
    for (Face f : facets_)
        if (face_size(f) != k) return false;
    return true;
}

std::vector<Face> SimplicialComplex::all_faces() const {
    if (is_void()) return {};
    int top = dim() + 1;
    std::vector<std::vector<Face>> by_size(static_cast<size_t>(top) + 1);
    for (Face f : facets_) by_size[static_cast<size_t>(face_size(f))].push_back(f);
    for (int k = top; k >= 1; --k) {
        auto& level = by_size[static_cast<size_t>(k)];
        std::sort(level.begin(), level.end());
        level.erase(std::unique(level.begin(), level.end()), level.end());
        auto& below = by_size[static_cast<size_t>(k) - 1];
        for (Face f : level) {
            Face m = f;
            while (m) {
                Face bit = m & (~m + 1);
                below.push_back(f & ~bit);
                m &= m - 1;
            }
        }
    }
    by_size[0] = {0};
    std::vector<Face> out;
    for (auto& level : by_size) {
        std::sort(level.begin(), level.end(), face_lex_less);
        level.erase(std::unique(level.begin(), level.end()), level.end());
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

std::vector<long long> SimplicialComplex::f_vector() const {
    if (is_void()) return {};
    std::vector<long long> f(static_cast<size_t>(dim()) + 2, 0);
    for (Face face : all_faces()) ++f[static_cast<size_t>(face_size(face))];
    return f;
}

SimplicialComplex SimplicialComplex::link(Face f) const {
    if (!is_face(f)) throw std::invalid_argument("link of a non-face");
    std::vector<Face> fs;
    for (Face g : facets_)
        if ((f | g) == g) fs.push_back(g & ~f);
    maximalize(fs);
    return trusted(n_vertices_, std::move(fs));
}

SimplicialComplex SimplicialComplex::shifted(int offset) const {
    if (offset < 0) throw std::invalid_argument("negative shift");
    int n = n_vertices_ + offset;
    if (n > kMaxVertices) throw std::invalid_argument("shift exceeds the vertex budget");
    std::vector<Face> fs;
    fs.reserve(facets_.size());
    for (Face f : facets_) fs.push_back(f << offset);
    return trusted(n, std::move(fs));
}

std::string SimplicialComplex::canonical_key() const {
    std::ostringstream os;
    os << "n=" << n_vertices_ << ";facets=";
    for (size_t i = 0; i < facets_.size(); ++i) {
        if (i) os << '|';
        auto vs = face_vertices(facets_[i]);
        for (size_t j = 0; j < vs.size(); ++j) {
            if (j) os << ' ';
            os << vs[j];
        }
    }
    return os.str();
}

SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b) {
    if (a.support() & b.support())
        throw std::invalid_argument("join factors must have disjoint supports");
    if (a.is_void() || b.is_void())
        return SimplicialComplex::void_complex(std::max(a.vertex_universe(), b.vertex_universe()));
    std::vector<Face> fs;
    fs.reserve(a.facets().size() * b.facets().size());
    for (Face fa : a.facets())
        for (Face fb : b.facets()) fs.push_back(fa | fb);
    return SimplicialComplex::from_facets(std::max(a.vertex_universe(), b.vertex_universe()),
                                          std::move(fs));
}

namespace {

// Tomita-style Bron-Kerbosch with pivoting; cliques of `adj` are reported.
void bron_kerbosch(const std::vector<Face>& adj, Face r, Face p, Face x,
                   std::vector<Face>& out) {
    if (!p && !x) {
        out.push_back(r);
        return;
    }
    Face px = p | x;
    int pivot = -1, best = -1;
    Face m = px;
    while (m) {
        int u = std::countr_zero(m);
        m &= m - 1;
        int c = std::popcount(p & adj[static_cast<size_t>(u)]);
        if (c > best) {
            best = c;
            pivot = u;
        }
    }
    Face cand = p & ~adj[static_cast<size_t>(pivot)];
    while (cand) {
        int v = std::countr_zero(cand);
        cand &= cand - 1;
        Face bit = Face{1} << v;
        bron_kerbosch(adj, r | bit, p & adj[static_cast<size_t>(v)],
                      x & adj[static_cast<size_t>(v)], out);
        p &= ~bit;
        x |= bit;
    }
}

}  // namespace

SimplicialComplex independence_complex(const Graph& g) {
    int n = g.vertex_count();
    Face full = g.vertex_mask();
    std::vector<Face> comp(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v)
        comp[static_cast<size_t>(v)] = full & ~g.neighbors(v) & ~(Face{1} << v);
    std::vector<Face> facets;
    bron_kerbosch(comp, 0, full, 0, facets);
    return SimplicialComplex::trusted(n, std::move(facets));
}

bool masks_connected(const std::vector<Face>& facets) {
    Face supp = 0;
    for (Face f : facets) supp |= f;
    int count = face_size(supp);
    if (count <= 1) return true;

    int parent[64];
    for (int i = 0; i < 64; ++i) parent[i] = i;
    auto find = [&](int v) {
        while (parent[v] != v) {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        return v;
    };
    for (Face f : facets) {
        if (face_size(f) < 2) continue;
        int first = std::countr_zero(f);
        Face m = f & (f - 1);
        while (m) {
            int v = std::countr_zero(m);
            m &= m - 1;
            parent[static_cast<size_t>(find(v))] = find(first);
        }
    }
    int roots = 0;
    Face m = supp;
    while (m) {
        int v = std::countr_zero(m);
        m &= m - 1;
        if (find(v) == v) ++roots;
    }
    return roots == 1;
}

int masks_dim(const std::vector<Face>& facets) {
    if (facets.empty()) return -2;
    int best = 0;
    for (Face f : facets) best = std::max(best, face_size(f));
    return best - 1;
}

std::vector<Face> link_facet_masks(const std::vector<Face>& facets, Face f) {
    std::vector<Face> out;
    for (Face g : facets)
        if ((f | g) == g) out.push_back(g & ~f);
    return out;
}

bool is_connected(const SimplicialComplex& c) {
    if (c.is_void() || c.is_irrelevant())
        throw std::domain_error("connectivity needs at least one vertex");
    return masks_connected(c.facets());
}

bool is_strongly_connected(const SimplicialComplex& c) {
    if (c.is_void()) throw std::domain_error("strong connectivity of the void complex");
    if (!c.is_pure()) throw std::invalid_argument("strong connectivity is defined for pure complexes");
    const auto& fs = c.facets();
    size_t s = fs.size();
    if (s <= 1) return true;

    std::vector<size_t> parent(s);
    for (size_t i = 0; i < s; ++i) parent[i] = i;
    auto find = [&](size_t v) {
        while (parent[v] != v) {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        return v;
    };
    // Group facets by ridge (facet minus one vertex).
    std::vector<std::pair<Face, size_t>> ridges;
    ridges.reserve(s * static_cast<size_t>(face_size(fs[0])));
    for (size_t i = 0; i < s; ++i) {
        Face m = fs[i];
        while (m) {
            Face bit = m & (~m + 1);
            ridges.emplace_back(fs[i] & ~bit, i);
            m &= m - 1;
        }
    }
    std::sort(ridges.begin(), ridges.end());
    for (size_t i = 1; i < ridges.size(); ++i)
        if (ridges[i].first == ridges[i - 1].first)
            parent[find(ridges[i].second)] = find(ridges[i - 1].second);
    size_t root = find(0);
    for (size_t i = 1; i < s; ++i)
        if (find(i) != root) return false;
    return true;
}

bool rotation_invariant(const SimplicialComplex& c, int order) {
    if (order < 1 || order > kMaxVertices || c.vertex_universe() != order) return false;
    std::vector<Face> rotated;
    rotated.reserve(c.facets().size());
    for (Face f : c.facets()) rotated.push_back(rotate_face(f, 1, order));
    std::sort(rotated.begin(), rotated.end(), face_lex_less);
    return rotated == c.facets();
}

std::vector<Face> orbit_representatives(const std::vector<Face>& faces, int n) {
    std::vector<Face> reps;
    for (Face f : faces) {
        Face best = f;
        Face r = f;
        for (int s = 1; s < n; ++s) {
            r = rotate_face(r, 1, n);
            if (r < best) best = r;
        }
        if (best == f) reps.push_back(f);
    }
    return reps;
}

}  // namespace serre
