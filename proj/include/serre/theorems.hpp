#ifndef SERRE_THEOREMS_HPP
#define SERRE_THEOREMS_HPP

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "serre/classify.hpp"

namespace serre {

enum class TheoremId {
    WcPowerOfCycle,
    S2PowerOfCycle,
    S2Cycles,
    BuchsNotS2PowerOfCycle,
    WcUpperInterval,
    CmUpperInterval,
    S2UpperInterval,
    EquivUpperInterval,
    S2OmitOne,
    StructureOnePaired,
    S2OnePaired,
    BuchsNotCmOnePaired,
    S2CubicConnected,
    DavisDomke,
    S2Cubic,
    S2NotBuchsFamilies,
    JoinS2,
    DisjointUnionS2,
    UnionNotBuchsbaum,
};

std::string theorem_name(TheoremId t);
std::optional<TheoremId> theorem_from_name(const std::string& s);
const std::vector<TheoremId>& all_theorems();

struct TheoremParams {
    int n = -1, d = -1, i = -1, a = -1, b = -1, two_n = -1;
};

// Closed forms only; no shared logic with the deciders.
bool predict_wc_power_of_cycle(int n, int d);        // n <= 3d+2 or n = 4d+3
bool predict_s2_power_of_cycle(int n, int d);        // (n <= 3d+2 and n != 2d+2) or n = 4d+3
bool predict_s2_cycle(int n);                        // n in {3,5,7}
bool predict_cm_cycle(int n);                        // n in {3,5}
bool predict_buchs_not_s2_power_of_cycle(int n, int d);  // n = 2d+2
bool predict_wc_upper_interval(int n, int d);        // n > 3d or n = 2d+2
bool predict_cm_upper_interval(int n, int d);        // n = 2d+2 or d = 1
bool predict_s2_upper_interval(int n, int d);        // same as well-covered
bool predict_s2_omit_one(int n, int i);              // gcd(i,n) = 1
int predict_dim_omit_one(int n, int i);              // 1, except 2 when i = n/3
bool predict_s2_one_paired(int n, int a, int b);     // n = ab
bool predict_cm_one_paired(int n, int a, int b);     // n = ab
bool predict_buchs_not_cm_one_paired(int n, int a, int b);  // a = 1 and ab < n
bool predict_s2_cubic(int two_n, int a);             // 2n/t in {3,4,5,8}, t = gcd(a,2n)

struct OnePairedStructure {
    int components = 0;  // a
    int parts = 0;       // b
    int part_size = 0;   // n/(ab)
};
OnePairedStructure predict_structure_one_paired(int n, int a, int b);

struct DdPrediction {
    int copies = 0;
    int model_n = 0;
    std::vector<int> model_gens;
};
DdPrediction predict_davis_domke(int two_n, int a);

// String rendering of any theorem's closed form at the given parameters.
std::string predict(TheoremId t, const TheoremParams& p);

// --- sweep harness ---

struct Mismatch {
    std::string instance;
    std::string predicted;
    std::string computed;
};

struct IsoCertificate {
    std::string instance;
    std::vector<std::vector<int>> component_vertices;
    // map_model_to_original[c][x]: original vertex carrying model vertex x.
    std::vector<std::vector<int>> maps;
};

struct SweepResult {
    TheoremId theorem = TheoremId::WcPowerOfCycle;
    long long instances_checked = 0;
    std::vector<Mismatch> mismatches;
    std::vector<std::string> timeouts;
    long long runtime_ms = 0;
    std::vector<std::string> notes;
    std::vector<IsoCertificate> certificates;

    bool passed() const { return mismatches.empty() && timeouts.empty(); }
};

// Per-graph computed properties, shared across sweeps and with the CLI cache.
struct GraphRecord {
    CirculantGraph graph;
    std::optional<bool> well_covered, s2, strongly_connected, cm_all_fields;
    std::map<int, bool> cohen_macaulay;      // characteristic -> value
    std::map<int, bool> buchsbaum;
    std::map<int, std::map<int, bool>> sr_terai;  // r -> characteristic -> value
    std::optional<int> dim_ind;
    std::optional<Decision3> shellable;
    bool from_cache = false;
    bool dirty = false;  // computed or extended this run
};

class Session {
public:
    Session() = default;

    bool well_covered(const CirculantGraph& g);
    bool s2(const CirculantGraph& g);
    bool strongly_connected(const CirculantGraph& g);
    std::map<int, bool> sr_terai(const CirculantGraph& g, int r, const std::vector<int>& chars);
    bool cm_all_fields(const CirculantGraph& g);
    std::map<int, bool> cohen_macaulay(const CirculantGraph& g, const std::vector<int>& chars);
    std::map<int, bool> buchsbaum(const CirculantGraph& g, const std::vector<int>& chars);
    int dim_ind(const CirculantGraph& g);
    Decision3 shellable(const CirculantGraph& g, const SearchBudgets& budgets);

    std::vector<std::string> graph_keys() const;           // deterministic order
    const GraphRecord& record_for(const std::string& key) const;
    GraphRecord& mutable_record(const CirculantGraph& g);

    // Cache hygiene: number of record fields served from a loaded cache that
    // were re-verified against recomputation this run.
    int spot_checks_done = 0;

    long long cache_hits() const { return cache_hits_; }

private:
    GraphRecord& record_locked(const CirculantGraph& g);
    bool hit(const GraphRecord& r) {
        if (r.from_cache) ++cache_hits_;
        return true;
    }

    mutable std::mutex mu_;
    std::map<std::string, GraphRecord> records_;
    long long cache_hits_ = 0;
};

// Report assembled through the session so sweep- or cache-computed values are
// reused; witnesses are recomputed deterministically.
ClassificationReport session_report(Session& session, const CirculantGraph& g,
                                    const ClassificationOptions& opts = {});

struct SweepSettings {
    int max_n = -1;  // -1: theorem default
    std::vector<int> characteristics{0, 2, 3, 5};
    SearchBudgets budgets;
    int jobs = 1;
    bool certify = false;
};

SweepResult verify_theorem(TheoremId t, Session& session, const SweepSettings& settings = {});

// Structure theorem check: a components, each with independence complex a
// disjoint union of b simplices of cardinality n/(ab).
bool verify_structure_one_paired(int n, int a, int b);

struct IntervalLinkReport {
    bool ok = false;
    bool complex_not_shellable = false;
    bool facets_are_cyclic_intervals = false;
    long long nonempty_links_checked = 0;
    long long links_strongly_connected_dim_le_d = 0;  // faces with 0 < dim link <= d
    long long links_strongly_connected_dim_lt_d = 0;  // faces with 0 < dim link < d
    long long faces_dim_le_d = 0;
    long long faces_dim_lt_d = 0;
};

// n > 3d, d > 1: the full complex is not shellable but the link of every
// nonempty face is; facets are the n cyclic windows {i,...,i+d}.
IntervalLinkReport verify_interval_links(int n, int d, const SearchBudgets& budgets = {});

}  // namespace serre

#endif
