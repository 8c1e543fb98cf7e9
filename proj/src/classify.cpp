#include "serre/classify.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_set>

namespace serre {

std::string decision_name(Decision3 d) {
    switch (d) {
        case Decision3::True: return "true";
        case Decision3::False: return "false";
        case Decision3::Timeout: return "timeout";
    }
    return "?";
}

std::string witness_kind_name(WitnessKind k) {
    switch (k) {
        case WitnessKind::DisconnectedLinkFace: return "disconnected-link-face";
        case WitnessKind::ImpureFacetPair: return "impure-facet-pair";
        case WitnessKind::NonvanishingLinkHomology: return "nonvanishing-link-homology";
        case WitnessKind::ShellingOrder: return "shelling-order";
        case WitnessKind::NoShellingExists: return "no-shelling-exists";
    }
    return "?";
}

std::optional<WitnessKind> witness_kind_from_name(const std::string& s) {
    for (WitnessKind k : {WitnessKind::DisconnectedLinkFace, WitnessKind::ImpureFacetPair,
                          WitnessKind::NonvanishingLinkHomology, WitnessKind::ShellingOrder,
                          WitnessKind::NoShellingExists})
        if (witness_kind_name(k) == s) return k;
    return std::nullopt;
}

bool validate_witness(const SimplicialComplex& c, const Witness& w) {
    switch (w.kind) {
        case WitnessKind::ImpureFacetPair: {
            const auto& fs = c.facets();
            bool a = std::find(fs.begin(), fs.end(), w.facet_a) != fs.end();
            bool b = std::find(fs.begin(), fs.end(), w.facet_b) != fs.end();
            return a && b && face_size(w.facet_a) != face_size(w.facet_b);
        }
        case WitnessKind::DisconnectedLinkFace: {
            if (!c.is_face(w.face)) return false;
            auto lf = link_facet_masks(c.facets(), w.face);
            return masks_dim(lf) >= 1 && !masks_connected(lf);
        }
        case WitnessKind::NonvanishingLinkHomology: {
            if (!c.is_face(w.face)) return false;
            auto lf = link_facet_masks(c.facets(), w.face);
            int dl = masks_dim(lf);
            if (w.dimension >= dl) return false;
            HomologyScan scan(lf, c.vertex_universe());
            FieldSpec k{w.characteristic};
            long long b = scan.group(w.dimension).free_rank;
            if (k.characteristic != 0) {
                for (long long t : scan.group(w.dimension).torsion)
                    if (t % k.characteristic == 0) ++b;
                if (w.dimension - 1 >= -1)
                    for (long long t : scan.group(w.dimension - 1).torsion)
                        if (t % k.characteristic == 0) ++b;
            }
            return b != 0;
        }
        case WitnessKind::ShellingOrder:
            return check_shelling(c, w.order);
        case WitnessKind::NoShellingExists: {
            Classifier cl;
            return cl.is_shellable(c).decided == Decision3::False;
        }
    }
    return false;
}

// --- join factorization ---

std::vector<SimplicialComplex> join_factorize(const SimplicialComplex& c) {
    const auto& fs = c.facets();
    if (fs.size() <= 1) return {};
    auto verts = face_vertices(c.support());
    if (verts.size() <= 1) return {};

    // Vertices joined by a non-face pair can never be separated.
    std::vector<int> parent(64);
    for (int i = 0; i < 64; ++i) parent[static_cast<size_t>(i)] = i;
    auto find = [&](int v) {
        while (parent[static_cast<size_t>(v)] != v) {
            parent[static_cast<size_t>(v)] = parent[static_cast<size_t>(parent[static_cast<size_t>(v)])];
            v = parent[static_cast<size_t>(v)];
        }
        return v;
    };
    for (size_t i = 0; i < verts.size(); ++i)
        for (size_t j = i + 1; j < verts.size(); ++j) {
            Face pair = (Face{1} << verts[i]) | (Face{1} << verts[j]);
            if (!c.is_face(pair)) parent[static_cast<size_t>(find(verts[i]))] = find(verts[j]);
        }

    std::vector<Face> parts;
    {
        std::vector<Face> by_root(64, 0);
        for (int v : verts) by_root[static_cast<size_t>(find(v))] |= Face{1} << v;
        for (Face p : by_root)
            if (p) parts.push_back(p);
    }
    if (parts.size() <= 1) return {};
    std::sort(parts.begin(), parts.end(), face_lex_less);

    // Product test certifies the candidate partition is a join.
    std::vector<std::vector<Face>> restrictions(parts.size());
    size_t prod = 1;
    for (size_t j = 0; j < parts.size(); ++j) {
        auto& rs = restrictions[j];
        rs.reserve(fs.size());
        for (Face f : fs) rs.push_back(f & parts[j]);
        std::sort(rs.begin(), rs.end());
        rs.erase(std::unique(rs.begin(), rs.end()), rs.end());
        prod *= rs.size();
        if (prod > fs.size()) return {};
    }
    if (prod != fs.size()) return {};

    std::vector<SimplicialComplex> factors;
    factors.reserve(parts.size());
    for (auto& rs : restrictions)
        factors.push_back(SimplicialComplex::from_facets(c.vertex_universe(), std::move(rs)));
    return factors;
}

// --- S2 by the connectivity corollary ---

namespace {

Witness impure_pair_witness(const SimplicialComplex& c) {
    const auto& fs = c.facets();
    Face small = fs[0], big = fs[0];
    for (Face f : fs) {
        if (face_size(f) < face_size(small)) small = f;
        if (face_size(f) > face_size(big)) big = f;
    }
    Witness w;
    w.kind = WitnessKind::ImpureFacetPair;
    w.facet_a = small;
    w.facet_b = big;
    return w;
}

}  // namespace

bool Classifier::s2_scan(const SimplicialComplex& c, std::optional<int> rotation, Witness* w) {
    if (c.is_void()) throw std::domain_error("S2 of the void complex is undefined");
    if (!c.is_pure()) {
        if (w) *w = impure_pair_witness(c);
        return false;
    }
    auto faces = c.all_faces();
    if (rotation) faces = orbit_representatives(faces, *rotation);
    for (Face f : faces) {
        auto lf = link_facet_masks(c.facets(), f);
        if (masks_dim(lf) < 1) continue;
        if (!masks_connected(lf)) {
            if (w) {
                w->kind = WitnessKind::DisconnectedLinkFace;
                w->face = f;
            }
            return false;
        }
    }
    return true;
}

bool Classifier::is_s2(const SimplicialComplex& c, Witness* w) { return s2_scan(c, std::nullopt, w); }

bool Classifier::s2_orbit_scan(const SimplicialComplex& c, int rotation_order, Witness* w) {
    if (!rotation_invariant(c, rotation_order))
        throw std::invalid_argument("complex is not invariant under the stated rotation");
    return s2_scan(c, rotation_order, w);
}

bool Classifier::is_well_covered(const Graph& g, Witness* w) {
    auto ind = independence_complex(g);
    if (ind.is_pure()) return true;
    if (w) *w = impure_pair_witness(ind);
    return false;
}

// --- Terai's homological criterion ---

std::map<int, bool> Classifier::sr_terai_chars(const SimplicialComplex& c, SerreLevel r,
                                               const std::vector<int>& characteristics,
                                               Witness* w, std::optional<int> rotation) {
    if (c.is_void()) throw std::domain_error("Serre condition of the void complex is undefined");
    if (r.r < 1) throw std::invalid_argument("Serre level must be >= 1");
    for (int ch : characteristics) validate_field(FieldSpec{ch});
    if (rotation && !rotation_invariant(c, *rotation))
        throw std::invalid_argument("complex is not invariant under the stated rotation");

    std::map<int, bool> result;
    for (int ch : characteristics) result[ch] = true;
    bool witness_set = false;

    auto faces = c.all_faces();
    if (rotation) faces = orbit_representatives(faces, *rotation);
    for (Face f : faces) {
        auto lf = link_facet_masks(c.facets(), f);
        int dl = masks_dim(lf);
        int bound = std::min(r.r - 1, dl);
        if (bound <= -1) continue;
        HomologyScan scan(lf, c.vertex_universe());
        for (int i = -1; i < bound; ++i) {
            const auto& gi = scan.group(i);
            for (int ch : characteristics) {
                long long b = gi.free_rank;
                if (ch != 0) {
                    for (long long t : gi.torsion)
                        if (t % ch == 0) ++b;
                    if (i - 1 >= -1)
                        for (long long t : scan.group(i - 1).torsion)
                            if (t % ch == 0) ++b;
                }
                if (b != 0 && result[ch]) {
                    result[ch] = false;
                    if (w && !witness_set) {
                        w->kind = WitnessKind::NonvanishingLinkHomology;
                        w->face = f;
                        w->dimension = i;
                        w->characteristic = ch;
                        witness_set = true;
                    }
                }
            }
        }
        bool all_false = true;
        for (auto& [ch, ok] : result) all_false = all_false && !ok;
        if (all_false) break;
    }
    return result;
}

bool Classifier::is_sr_terai(const SimplicialComplex& c, SerreLevel r, FieldSpec k, Witness* w,
                             std::optional<int> rotation) {
    validate_field(k);
    return sr_terai_chars(c, r, {k.characteristic}, w, rotation).at(k.characteristic);
}

// --- Cohen-Macaulay via Reisner's criterion ---

namespace {

void collect_primes(long long v, std::set<long long>& out) {
    for (long long p = 2; p * p <= v; ++p)
        while (v % p == 0) {
            out.insert(p);
            v /= p;
        }
    if (v > 1) out.insert(v);
}

}  // namespace

Classifier::CmEntry Classifier::cm_compute(const SimplicialComplex& c,
                                           std::optional<int> rotation) {
    CmEntry entry;
    if (c.facets().size() <= 1) return entry;  // simplexes and {∅} are Cohen-Macaulay

    if (!c.is_pure()) {
        entry.free_ok = false;
        entry.witness = impure_pair_witness(c);
        return entry;
    }

    auto factors = join_factorize(c);
    if (factors.size() > 1) {
        for (size_t j = 0; j < factors.size(); ++j) {
            const CmEntry& child = cm_entry(factors[j], std::nullopt);
            entry.free_ok = entry.free_ok && child.free_ok;
            entry.bad_primes.insert(child.bad_primes.begin(), child.bad_primes.end());
            if (child.witness && !entry.witness) {
                Witness lifted = *child.witness;
                Face padding = 0;
                for (size_t jj = 0; jj < factors.size(); ++jj)
                    if (jj != j) padding |= factors[jj].facets().front();
                if (lifted.kind == WitnessKind::ImpureFacetPair) {
                    lifted.facet_a |= padding;
                    lifted.facet_b |= padding;
                } else {
                    lifted.face |= padding;
                }
                entry.witness = lifted;
            }
            if (!entry.free_ok) return entry;
        }
        return entry;
    }

    int d = c.dim();
    {
        HomologyScan scan(c);
        for (int i = -1; i < d; ++i) {
            const auto& g = scan.group(i);
            if (g.free_rank > 0) {
                entry.free_ok = false;
                if (!entry.witness) {
                    Witness w;
                    w.kind = WitnessKind::NonvanishingLinkHomology;
                    w.face = 0;
                    w.dimension = i;
                    w.characteristic = 0;
                    entry.witness = w;
                }
                return entry;
            }
            for (long long t : g.torsion) {
                std::set<long long> ps;
                collect_primes(t, ps);
                if (!entry.witness && !ps.empty()) {
                    Witness w;
                    w.kind = WitnessKind::NonvanishingLinkHomology;
                    w.face = 0;
                    w.dimension = i;
                    w.characteristic = static_cast<int>(*ps.begin());
                    entry.witness = w;
                }
                entry.bad_primes.insert(ps.begin(), ps.end());
            }
        }
    }

    Face supp = c.support();
    if (rotation && (supp & 1)) supp = 1;  // links of rotated vertices are isomorphic
    Face m = supp;
    while (m) {
        int v = std::countr_zero(m);
        m &= m - 1;
        Face vbit = Face{1} << v;
        const CmEntry& child = cm_entry(c.link(vbit), std::nullopt);
        entry.free_ok = entry.free_ok && child.free_ok;
        entry.bad_primes.insert(child.bad_primes.begin(), child.bad_primes.end());
        if (child.witness && !entry.witness) {
            Witness lifted = *child.witness;
            if (lifted.kind == WitnessKind::ImpureFacetPair) {
                lifted.facet_a |= vbit;
                lifted.facet_b |= vbit;
            } else {
                lifted.face |= vbit;
            }
            entry.witness = lifted;
        }
        if (!entry.free_ok) return entry;
    }
    return entry;
}

const Classifier::CmEntry& Classifier::cm_entry(const SimplicialComplex& c,
                                                std::optional<int> rotation) {
    std::string key = c.canonical_key();
    auto it = cm_memo_.find(key);
    if (it != cm_memo_.end()) return it->second;
    CmEntry e = cm_compute(c, rotation);
    return cm_memo_.emplace(std::move(key), std::move(e)).first->second;
}

bool Classifier::is_cohen_macaulay(const SimplicialComplex& c, FieldSpec k,
                                   std::optional<int> rotation, Witness* w) {
    validate_field(k);
    if (c.is_void()) throw std::domain_error("Cohen-Macaulayness of the void complex is undefined");
    if (rotation && !rotation_invariant(c, *rotation))
        throw std::invalid_argument("complex is not invariant under the stated rotation");
    const CmEntry& e = cm_entry(c, rotation);
    bool ok = e.free_ok && (k.characteristic == 0 ||
                            !e.bad_primes.count(static_cast<long long>(k.characteristic)));
    if (!ok && w && e.witness) *w = *e.witness;
    return ok;
}

bool Classifier::is_cohen_macaulay_all_fields(const SimplicialComplex& c,
                                              std::optional<int> rotation, Witness* w) {
    if (c.is_void()) throw std::domain_error("Cohen-Macaulayness of the void complex is undefined");
    if (rotation && !rotation_invariant(c, *rotation))
        throw std::invalid_argument("complex is not invariant under the stated rotation");
    const CmEntry& e = cm_entry(c, rotation);
    bool ok = e.free_ok && e.bad_primes.empty();
    if (!ok && w && e.witness) *w = *e.witness;
    return ok;
}

// --- Buchsbaum: pure with Cohen-Macaulay vertex links ---

std::map<int, bool> Classifier::buchsbaum_chars(const SimplicialComplex& c,
                                                const std::vector<int>& characteristics,
                                                std::optional<int> rotation, Witness* w) {
    if (c.is_void()) throw std::domain_error("Buchsbaumness of the void complex is undefined");
    for (int ch : characteristics) validate_field(FieldSpec{ch});
    if (rotation && !rotation_invariant(c, *rotation))
        throw std::invalid_argument("complex is not invariant under the stated rotation");

    std::map<int, bool> result;
    if (!c.is_pure()) {
        if (w) *w = impure_pair_witness(c);
        for (int ch : characteristics) result[ch] = false;
        return result;
    }
    CmEntry merged;
    Face supp = c.support();
    if (rotation && (supp & 1)) supp = 1;
    Face m = supp;
    while (m) {
        int v = std::countr_zero(m);
        m &= m - 1;
        Face vbit = Face{1} << v;
        const CmEntry& child = cm_entry(c.link(vbit), std::nullopt);
        merged.free_ok = merged.free_ok && child.free_ok;
        merged.bad_primes.insert(child.bad_primes.begin(), child.bad_primes.end());
        if (child.witness && !merged.witness) {
            Witness lifted = *child.witness;
            if (lifted.kind == WitnessKind::ImpureFacetPair) {
                lifted.facet_a |= vbit;
                lifted.facet_b |= vbit;
            } else {
                lifted.face |= vbit;
            }
            merged.witness = lifted;
        }
        if (!merged.free_ok) break;
    }
    for (int ch : characteristics)
        result[ch] = merged.free_ok &&
                     (ch == 0 || !merged.bad_primes.count(static_cast<long long>(ch)));
    bool any_false = false;
    for (auto& [ch, ok] : result) any_false = any_false || !ok;
    if (any_false && w && merged.witness) *w = *merged.witness;
    return result;
}

bool Classifier::is_buchsbaum(const SimplicialComplex& c, FieldSpec k,
                              std::optional<int> rotation, Witness* w) {
    validate_field(k);
    return buchsbaum_chars(c, {k.characteristic}, rotation, w).at(k.characteristic);
}

bool Classifier::is_buchsbaum_all_fields(const SimplicialComplex& c, std::optional<int> rotation) {
    if (c.is_void()) throw std::domain_error("Buchsbaumness of the void complex is undefined");
    if (!c.is_pure()) return false;
    CmEntry merged;
    Face supp = c.support();
    if (rotation) {
        if (!rotation_invariant(c, *rotation))
            throw std::invalid_argument("complex is not invariant under the stated rotation");
        if (supp & 1) supp = 1;
    }
    Face m = supp;
    while (m) {
        int v = std::countr_zero(m);
        m &= m - 1;
        const CmEntry& child = cm_entry(c.link(Face{1} << v), std::nullopt);
        if (!child.free_ok || !child.bad_primes.empty()) return false;
    }
    return true;
}

// --- shellability ---

bool check_shelling(const SimplicialComplex& c, const std::vector<Face>& order) {
    auto sorted = order;
    std::sort(sorted.begin(), sorted.end(), face_lex_less);
    if (sorted != c.facets()) throw std::invalid_argument("order is not a permutation of the facets");
    size_t s = order.size();
    for (size_t j = 1; j < s; ++j) {
        Face mj = 0;
        for (size_t l = 0; l < j; ++l) {
            Face d = order[j] & ~order[l];
            if (face_size(d) == 1) mj |= d;
        }
        for (size_t i = 0; i < j; ++i)
            if ((order[j] & ~order[i] & mj) == 0) return false;
    }
    return true;
}

namespace {

enum class DfsOutcome { Found, Exhausted, TimedOut };

struct ShellSearch {
    const std::vector<Face>& fs;
    long long budget;
    long long nodes = 0;
    std::unordered_set<std::uint64_t> dead;
    std::vector<int> order;

    DfsOutcome dfs(std::uint64_t used, int placed) {
        int s = static_cast<int>(fs.size());
        if (placed == s) return DfsOutcome::Found;
        if (dead.count(used)) return DfsOutcome::Exhausted;
        for (int j = 0; j < s; ++j) {
            if ((used >> j) & 1) continue;
            if (++nodes > budget) return DfsOutcome::TimedOut;
            if (used != 0) {
                Face mj = 0;
                for (int l = 0; l < s; ++l)
                    if ((used >> l) & 1) {
                        Face d = fs[static_cast<size_t>(j)] & ~fs[static_cast<size_t>(l)];
                        if (face_size(d) == 1) mj |= d;
                    }
                bool ok = true;
                for (int i = 0; i < s && ok; ++i)
                    if ((used >> i) & 1)
                        if ((fs[static_cast<size_t>(j)] & ~fs[static_cast<size_t>(i)] & mj) == 0)
                            ok = false;
                if (!ok) continue;
            }
            order.push_back(j);
            DfsOutcome r = dfs(used | (std::uint64_t{1} << j), placed + 1);
            if (r != DfsOutcome::Exhausted) return r;
            order.pop_back();
        }
        dead.insert(used);
        return DfsOutcome::Exhausted;
    }
};

}  // namespace

ShellResult Classifier::is_shellable(const SimplicialComplex& c, const SearchBudgets& budgets) {
    if (!c.is_pure()) throw std::invalid_argument("pure shellability needs a pure complex");
    ShellResult res;
    const auto& fs = c.facets();
    if (fs.size() <= 1) {
        res.decided = Decision3::True;
        res.order = fs;
        return res;
    }
    if (static_cast<int>(fs.size()) > std::min(budgets.shelling_max_facets, 63)) {
        res.decided = Decision3::Timeout;
        return res;
    }
    ShellSearch search{fs, budgets.shelling_nodes, 0, {}, {}};
    DfsOutcome out = search.dfs(0, 0);
    res.nodes = search.nodes;
    switch (out) {
        case DfsOutcome::Found:
            res.decided = Decision3::True;
            for (int j : search.order) res.order.push_back(fs[static_cast<size_t>(j)]);
            break;
        case DfsOutcome::Exhausted:
            res.decided = Decision3::False;
            break;
        case DfsOutcome::TimedOut:
            res.decided = Decision3::Timeout;
            break;
    }
    return res;
}

// --- vertex decomposability ---

namespace {

struct VdContext {
    long long budget;
    long long nodes = 0;
    std::unordered_map<std::string, bool> memo;

    Decision3 rec(const SimplicialComplex& c) {
        if (c.facets().size() <= 1) return Decision3::True;
        std::string key = c.canonical_key();
        auto it = memo.find(key);
        if (it != memo.end()) return it->second ? Decision3::True : Decision3::False;
        if (++nodes > budget) return Decision3::Timeout;

        bool any_timeout = false;
        Face supp = c.support();
        Face m = supp;
        while (m) {
            int v = std::countr_zero(m);
            m &= m - 1;
            Face vbit = Face{1} << v;

            std::vector<Face> del_facets;
            del_facets.reserve(c.facets().size());
            for (Face f : c.facets()) del_facets.push_back(f & ~vbit);
            auto del = SimplicialComplex::from_facets(c.vertex_universe(), std::move(del_facets));

            // Shedding: every facet of the deletion is a facet of the complex.
            bool shedding = true;
            for (Face f : del.facets())
                if (!std::binary_search(c.facets().begin(), c.facets().end(), f, face_lex_less)) {
                    shedding = false;
                    break;
                }
            if (!shedding) continue;

            Decision3 a = rec(del);
            if (a == Decision3::Timeout) {
                any_timeout = true;
                continue;
            }
            if (a == Decision3::False) continue;
            Decision3 b = rec(c.link(vbit));
            if (b == Decision3::Timeout) {
                any_timeout = true;
                continue;
            }
            if (b == Decision3::False) continue;
            memo[key] = true;
            return Decision3::True;
        }
        if (any_timeout) return Decision3::Timeout;
        memo[key] = false;
        return Decision3::False;
    }
};

}  // namespace

Decision3 Classifier::is_vertex_decomposable(const SimplicialComplex& c,
                                             const SearchBudgets& budgets) {
    if (!c.is_pure()) throw std::invalid_argument("vertex decomposability needs a pure complex");
    if (static_cast<int>(c.facets().size()) > budgets.vd_max_facets) return Decision3::Timeout;
    VdContext ctx{budgets.vd_nodes, 0, {}};
    return ctx.rec(c);
}

// --- full reports ---

ClassificationReport Classifier::classify_graph(const Graph& g, const std::string& subject,
                                                const ClassificationOptions& opts) {
    ClassificationReport rep;
    rep.subject = subject;
    rep.n = g.vertex_count();

    auto ind = independence_complex(g);
    rep.complex_key = ind.canonical_key();
    auto rot = opts.rotation_order;
    if (rot && !rotation_invariant(ind, *rot))
        throw std::invalid_argument("complex is not invariant under the stated rotation");

    Witness w;
    rep.well_covered = ind.is_pure();
    if (!rep.well_covered) rep.witnesses.push_back(impure_pair_witness(ind));

    rep.s2 = s2_scan(ind, rot, &w);
    if (!rep.s2 && w.kind == WitnessKind::DisconnectedLinkFace) rep.witnesses.push_back(w);

    rep.strongly_connected = rep.well_covered ? is_strongly_connected(ind) : false;

    for (int r : opts.serre_levels) {
        Witness tw;
        rep.sr[r] = is_sr_terai(ind, SerreLevel{r}, FieldSpec{0}, &tw, rot);
        if (!rep.sr[r] && r == opts.serre_levels.back()) rep.witnesses.push_back(tw);
    }

    {
        for (int ch : opts.characteristics)
            rep.cohen_macaulay[ch] = is_cohen_macaulay(ind, FieldSpec{ch}, rot);
        Witness cw;
        rep.cm_all_fields = is_cohen_macaulay_all_fields(ind, rot, &cw);
        if (!rep.cm_all_fields && cw.kind == WitnessKind::NonvanishingLinkHomology)
            rep.witnesses.push_back(cw);
    }
    rep.buchsbaum = buchsbaum_chars(ind, opts.characteristics, rot);

    if (!ind.is_pure()) {
        rep.shellable = Decision3::False;
        rep.vertex_decomposable = Decision3::False;
    } else {
        ShellResult sr = is_shellable(ind, opts.budgets);
        rep.shellable = sr.decided;
        if (sr.decided == Decision3::True) {
            Witness sw;
            sw.kind = WitnessKind::ShellingOrder;
            sw.order = sr.order;
            rep.witnesses.push_back(sw);
        } else if (sr.decided == Decision3::False) {
            Witness sw;
            sw.kind = WitnessKind::NoShellingExists;
            sw.nodes_searched = sr.nodes;
            rep.witnesses.push_back(sw);
        }
        rep.vertex_decomposable = is_vertex_decomposable(ind, opts.budgets);
    }
    return rep;
}

ClassificationReport Classifier::classify_circulant(const CirculantGraph& g,
                                                    ClassificationOptions opts) {
    opts.rotation_order = g.n;
    ClassificationReport rep = classify_graph(g.graph, g.id(), opts);
    rep.gens = g.gens;
    return rep;
}

// --- wrappers ---

bool is_well_covered(const Graph& g, Witness* w) { return Classifier{}.is_well_covered(g, w); }
bool is_s2(const SimplicialComplex& c, Witness* w) { return Classifier{}.is_s2(c, w); }
bool s2_orbit_scan(const SimplicialComplex& c, int rotation_order, Witness* w) {
    return Classifier{}.s2_orbit_scan(c, rotation_order, w);
}
bool is_sr_terai(const SimplicialComplex& c, SerreLevel r, FieldSpec k, Witness* w) {
    return Classifier{}.is_sr_terai(c, r, k, w);
}
bool is_cohen_macaulay(const SimplicialComplex& c, FieldSpec k) {
    return Classifier{}.is_cohen_macaulay(c, k);
}
bool is_cohen_macaulay_all_fields(const SimplicialComplex& c) {
    return Classifier{}.is_cohen_macaulay_all_fields(c);
}
bool is_buchsbaum(const SimplicialComplex& c, FieldSpec k) {
    return Classifier{}.is_buchsbaum(c, k);
}
ShellResult is_shellable(const SimplicialComplex& c, const SearchBudgets& budgets) {
    return Classifier{}.is_shellable(c, budgets);
}
Decision3 is_vertex_decomposable(const SimplicialComplex& c, const SearchBudgets& budgets) {
    return Classifier{}.is_vertex_decomposable(c, budgets);
}

}  // namespace serre
