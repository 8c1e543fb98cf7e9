#ifndef SERRE_CLASSIFY_HPP
#define SERRE_CLASSIFY_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "serre/homology.hpp"
#include "serre/simplicial_complex.hpp"

namespace serre {

struct SerreLevel {
    int r = 1;
};

enum class Decision3 { True, False, Timeout };
std::string decision_name(Decision3 d);

enum class WitnessKind {
    DisconnectedLinkFace,
    ImpureFacetPair,
    NonvanishingLinkHomology,
    ShellingOrder,
    NoShellingExists,
};
std::string witness_kind_name(WitnessKind k);
std::optional<WitnessKind> witness_kind_from_name(const std::string& s);

struct Witness {
    WitnessKind kind = WitnessKind::DisconnectedLinkFace;
    Face face = 0;            // DisconnectedLinkFace / NonvanishingLinkHomology
    Face facet_a = 0;         // ImpureFacetPair
    Face facet_b = 0;
    int dimension = 0;        // NonvanishingLinkHomology
    int characteristic = 0;
    std::vector<Face> order;  // ShellingOrder
    long long nodes_searched = 0;  // NoShellingExists
};

// Independent re-validation of a witness against the complex it talks about.
bool validate_witness(const SimplicialComplex& c, const Witness& w);

struct ShellResult {
    Decision3 decided = Decision3::Timeout;
    std::vector<Face> order;    // when True
    long long nodes = 0;
};

// Pairwise check of the shelling condition: for every i<j some v in Fj\Fi
// has Fj\Fl = {v} for an earlier l. Throws when `order` is not a permutation
// of the facets.
bool check_shelling(const SimplicialComplex& c, const std::vector<Face>& order);

struct SearchBudgets {
    long long shelling_nodes = 10'000'000;
    int shelling_max_facets = 63;  // DFS state is one word
    long long vd_nodes = 10'000'000;
    int vd_max_facets = 40;
};

struct ClassificationOptions {
    std::vector<int> characteristics{0, 2, 3, 5};
    std::vector<int> serre_levels{1, 2};
    SearchBudgets budgets;
    std::optional<int> rotation_order;  // orbit-reduced scans when set
};

struct ClassificationReport {
    std::string subject;
    int n = 0;
    std::vector<int> gens;            // empty for non-circulant subjects
    std::string complex_key;
    bool well_covered = false;
    bool s2 = false;
    bool strongly_connected = false;
    std::map<int, bool> sr;           // Terai, characteristic 0
    std::map<int, bool> cohen_macaulay;
    bool cm_all_fields = false;
    std::map<int, bool> buchsbaum;
    Decision3 shellable = Decision3::Timeout;
    Decision3 vertex_decomposable = Decision3::Timeout;
    std::vector<Witness> witnesses;
};

// Memoizing session. All deciders are pure functions of their inputs; the
// session only caches results.
class Classifier {
public:
    bool is_well_covered(const Graph& g, Witness* w = nullptr);

    // Purity plus connectivity of every link of dimension >= 1.
    bool is_s2(const SimplicialComplex& c, Witness* w = nullptr);

    // Same decision scanning one face per rotation orbit; the complex must be
    // invariant under v -> v+1 (mod rotation_order).
    bool s2_orbit_scan(const SimplicialComplex& c, int rotation_order, Witness* w = nullptr);

    // Homological route (Terai): betti_k of every link vanishes below
    // min{r-1, dim link}. Kept free of the connectivity machinery above.
    bool is_sr_terai(const SimplicialComplex& c, SerreLevel r, FieldSpec k, Witness* w = nullptr,
                     std::optional<int> rotation_order = std::nullopt);
    std::map<int, bool> sr_terai_chars(const SimplicialComplex& c, SerreLevel r,
                                       const std::vector<int>& characteristics,
                                       Witness* w = nullptr,
                                       std::optional<int> rotation_order = std::nullopt);

    bool is_cohen_macaulay(const SimplicialComplex& c, FieldSpec k,
                           std::optional<int> rotation_order = std::nullopt,
                           Witness* w = nullptr);
    bool is_cohen_macaulay_all_fields(const SimplicialComplex& c,
                                      std::optional<int> rotation_order = std::nullopt,
                                      Witness* w = nullptr);

    // Pure with every vertex link Cohen-Macaulay over k.
    bool is_buchsbaum(const SimplicialComplex& c, FieldSpec k,
                      std::optional<int> rotation_order = std::nullopt,
                      Witness* w = nullptr);
    std::map<int, bool> buchsbaum_chars(const SimplicialComplex& c,
                                        const std::vector<int>& characteristics,
                                        std::optional<int> rotation_order = std::nullopt,
                                        Witness* w = nullptr);
    bool is_buchsbaum_all_fields(const SimplicialComplex& c,
                                 std::optional<int> rotation_order = std::nullopt);

    ShellResult is_shellable(const SimplicialComplex& c, const SearchBudgets& budgets = {});
    Decision3 is_vertex_decomposable(const SimplicialComplex& c, const SearchBudgets& budgets = {});

    ClassificationReport classify_graph(const Graph& g, const std::string& subject,
                                        const ClassificationOptions& opts = {});
    ClassificationReport classify_circulant(const CirculantGraph& g,
                                            ClassificationOptions opts = {});

private:
    struct CmEntry {
        bool free_ok = true;
        std::set<long long> bad_primes;
        std::optional<Witness> witness;  // face relative to the queried complex
    };

    const CmEntry& cm_entry(const SimplicialComplex& c, std::optional<int> rotation_order);
    CmEntry cm_compute(const SimplicialComplex& c, std::optional<int> rotation_order);

    bool s2_scan(const SimplicialComplex& c, std::optional<int> rotation, Witness* w);

    std::unordered_map<std::string, CmEntry> cm_memo_;
};

// Convenience wrappers over a scratch Classifier.
bool is_well_covered(const Graph& g, Witness* w = nullptr);
bool is_s2(const SimplicialComplex& c, Witness* w = nullptr);
bool s2_orbit_scan(const SimplicialComplex& c, int rotation_order, Witness* w = nullptr);
bool is_sr_terai(const SimplicialComplex& c, SerreLevel r, FieldSpec k, Witness* w = nullptr);
bool is_cohen_macaulay(const SimplicialComplex& c, FieldSpec k);
bool is_cohen_macaulay_all_fields(const SimplicialComplex& c);
bool is_buchsbaum(const SimplicialComplex& c, FieldSpec k);
ShellResult is_shellable(const SimplicialComplex& c, const SearchBudgets& budgets = {});
Decision3 is_vertex_decomposable(const SimplicialComplex& c, const SearchBudgets& budgets = {});

// Finest join factorization compatible with the non-face relation; empty
// result means no split. Exact for independence complexes and every link of
// one (the only shapes the deciders feed it).
std::vector<SimplicialComplex> join_factorize(const SimplicialComplex& c);

inline constexpr const char* kClassifierVersion = "1";

}  // namespace serre

#endif
