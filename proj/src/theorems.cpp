#include "serre/theorems.hpp"

#include <atomic>
#include <chrono>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace serre {

std::string theorem_name(TheoremId t) {
    switch (t) {
        case TheoremId::WcPowerOfCycle: return "wc-power-of-cycle";
        case TheoremId::S2PowerOfCycle: return "s2-power-of-cycle";
        case TheoremId::S2Cycles: return "s2-cycles";
        case TheoremId::BuchsNotS2PowerOfCycle: return "buchs-not-s2-power-of-cycle";
        case TheoremId::WcUpperInterval: return "wc-upper-interval";
        case TheoremId::CmUpperInterval: return "cm-upper-interval";
        case TheoremId::S2UpperInterval: return "s2-upper-interval";
        case TheoremId::EquivUpperInterval: return "equiv-upper-interval";
        case TheoremId::S2OmitOne: return "s2-omit-one";
        case TheoremId::StructureOnePaired: return "structure-one-paired";
        case TheoremId::S2OnePaired: return "s2-one-paired";
        case TheoremId::BuchsNotCmOnePaired: return "buchs-not-cm-one-paired";
        case TheoremId::S2CubicConnected: return "s2-cubic-connected";
        case TheoremId::DavisDomke: return "davis-domke";
        case TheoremId::S2Cubic: return "s2-cubic";
        case TheoremId::S2NotBuchsFamilies: return "s2-not-buchs-families";
        case TheoremId::JoinS2: return "join-s2";
        case TheoremId::DisjointUnionS2: return "disjoint-union-s2";
        case TheoremId::UnionNotBuchsbaum: return "union-not-buchsbaum";
    }
    return "?";
}

const std::vector<TheoremId>& all_theorems() {
    static const std::vector<TheoremId> ids = {
        TheoremId::WcPowerOfCycle,     TheoremId::S2PowerOfCycle,
        TheoremId::S2Cycles,           TheoremId::BuchsNotS2PowerOfCycle,
        TheoremId::WcUpperInterval,    TheoremId::CmUpperInterval,
        TheoremId::S2UpperInterval,    TheoremId::EquivUpperInterval,
        TheoremId::S2OmitOne,          TheoremId::StructureOnePaired,
        TheoremId::S2OnePaired,        TheoremId::BuchsNotCmOnePaired,
        TheoremId::S2CubicConnected,   TheoremId::DavisDomke,
        TheoremId::S2Cubic,            TheoremId::S2NotBuchsFamilies,
        TheoremId::JoinS2,             TheoremId::DisjointUnionS2,
        TheoremId::UnionNotBuchsbaum,
    };
    return ids;
}

std::optional<TheoremId> theorem_from_name(const std::string& s) {
    for (TheoremId t : all_theorems())
        if (theorem_name(t) == s) return t;
    return std::nullopt;
}

// --- closed forms ---

bool predict_wc_power_of_cycle(int n, int d) {
    if (d < 1 || n < 2 * d) throw std::invalid_argument("power-of-cycle domain is n >= 2d >= 2");
    return n <= 3 * d + 2 || n == 4 * d + 3;
}

bool predict_s2_power_of_cycle(int n, int d) {
    if (d < 1 || n < 2 * d) throw std::invalid_argument("power-of-cycle domain is n >= 2d >= 2");
    return (n <= 3 * d + 2 && n != 2 * d + 2) || n == 4 * d + 3;
}

bool predict_s2_cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle domain is n >= 3");
    return n == 3 || n == 5 || n == 7;
}

bool predict_cm_cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle domain is n >= 3");
    return n == 3 || n == 5;
}

bool predict_buchs_not_s2_power_of_cycle(int n, int d) {
    if (d < 1 || n < 2 * d) throw std::invalid_argument("power-of-cycle domain is n >= 2d >= 2");
    return n == 2 * d + 2;
}

bool predict_wc_upper_interval(int n, int d) {
    if (d < 1 || n < 2 * d + 2)
        throw std::invalid_argument("upper-interval domain is n >= 2d+2, d >= 1");
    return n > 3 * d || n == 2 * d + 2;
}

bool predict_cm_upper_interval(int n, int d) {
    if (d < 1 || n < 2 * d + 2)
        throw std::invalid_argument("upper-interval domain is n >= 2d+2, d >= 1");
    return n == 2 * d + 2 || d == 1;
}

bool predict_s2_upper_interval(int n, int d) { return predict_wc_upper_interval(n, d); }

bool predict_s2_omit_one(int n, int i) {
    if (n < 3 || i < 1 || i > n / 2) throw std::invalid_argument("omit-one domain violated");
    return std::gcd(i, n) == 1;
}

int predict_dim_omit_one(int n, int i) {
    if (n < 3 || i < 1 || i > n / 2) throw std::invalid_argument("omit-one domain violated");
    return (3 * i == n) ? 2 : 1;
}

bool predict_s2_one_paired(int n, int a, int b) {
    if (a < 1 || b < 2 || n % (a * b) != 0) throw std::invalid_argument("one-paired domain violated");
    return n == a * b;
}

bool predict_cm_one_paired(int n, int a, int b) { return predict_s2_one_paired(n, a, b); }

bool predict_buchs_not_cm_one_paired(int n, int a, int b) {
    if (a < 1 || b < 2 || n % (a * b) != 0) throw std::invalid_argument("one-paired domain violated");
    return a == 1 && a * b < n;
}

bool predict_s2_cubic(int two_n, int a) {
    if (two_n < 4 || two_n % 2 != 0 || a < 1 || a >= two_n / 2)
        throw std::invalid_argument("cubic domain violated");
    int t = std::gcd(a, two_n);
    int m = two_n / t;
    return m == 3 || m == 4 || m == 5 || m == 8;
}

OnePairedStructure predict_structure_one_paired(int n, int a, int b) {
    if (a < 1 || b < 2 || n % (a * b) != 0) throw std::invalid_argument("one-paired domain violated");
    return {a, b, n / (a * b)};
}

DdPrediction predict_davis_domke(int two_n, int a) {
    if (two_n < 4 || two_n % 2 != 0 || a < 1 || a >= two_n / 2)
        throw std::invalid_argument("cubic domain violated");
    int t = std::gcd(a, two_n);
    int m = two_n / t;
    DdPrediction p;
    if (m % 2 == 0) {
        p.copies = t;
        p.model_n = m;
        p.model_gens = {1, m / 2};
    } else {
        p.copies = t / 2;
        p.model_n = 2 * m;
        p.model_gens = {2, m};
    }
    return p;
}

std::string predict(TheoremId t, const TheoremParams& p) {
    auto b2s = [](bool b) { return std::string(b ? "true" : "false"); };
    switch (t) {
        case TheoremId::WcPowerOfCycle: return b2s(predict_wc_power_of_cycle(p.n, p.d));
        case TheoremId::S2PowerOfCycle: return b2s(predict_s2_power_of_cycle(p.n, p.d));
        case TheoremId::S2Cycles: return b2s(predict_s2_cycle(p.n));
        case TheoremId::BuchsNotS2PowerOfCycle:
            return b2s(predict_buchs_not_s2_power_of_cycle(p.n, p.d));
        case TheoremId::WcUpperInterval: return b2s(predict_wc_upper_interval(p.n, p.d));
        case TheoremId::CmUpperInterval: return b2s(predict_cm_upper_interval(p.n, p.d));
        case TheoremId::S2UpperInterval: return b2s(predict_s2_upper_interval(p.n, p.d));
        case TheoremId::EquivUpperInterval: return b2s(predict_s2_upper_interval(p.n, p.d));
        case TheoremId::S2OmitOne: return b2s(predict_s2_omit_one(p.n, p.i));
        case TheoremId::StructureOnePaired: {
            auto s = predict_structure_one_paired(p.n, p.a, p.b);
            std::ostringstream os;
            os << s.components << " components, each Ind = " << s.parts
               << " disjoint simplices of size " << s.part_size;
            return os.str();
        }
        case TheoremId::S2OnePaired: return b2s(predict_s2_one_paired(p.n, p.a, p.b));
        case TheoremId::BuchsNotCmOnePaired:
            return b2s(predict_buchs_not_cm_one_paired(p.n, p.a, p.b));
        case TheoremId::S2CubicConnected:
            return b2s(!(p.two_n == 6 && p.a == 1));
        case TheoremId::DavisDomke: {
            auto d = predict_davis_domke(p.two_n, p.a);
            std::ostringstream os;
            os << d.copies << " copies of C" << d.model_n << "(" << d.model_gens[0] << ","
               << d.model_gens[1] << ")";
            return os.str();
        }
        case TheoremId::S2Cubic: return b2s(predict_s2_cubic(p.two_n, p.a));
        case TheoremId::S2NotBuchsFamilies: return "s2 and not buchsbaum";
        case TheoremId::JoinS2: return "s2(join) = s2(a) and s2(b)";
        case TheoremId::DisjointUnionS2: return "s2(union) = s2(h) and s2(k)";
        case TheoremId::UnionNotBuchsbaum: return "not buchsbaum";
    }
    return "?";
}

// --- session ---

GraphRecord& Session::record_locked(const CirculantGraph& g) {
    auto it = records_.find(g.id());
    if (it == records_.end()) {
        GraphRecord r;
        r.graph = g;
        it = records_.emplace(g.id(), std::move(r)).first;
    }
    return it->second;
}

GraphRecord& Session::mutable_record(const CirculantGraph& g) {
    std::lock_guard<std::mutex> lock(mu_);
    return record_locked(g);
}

std::vector<std::string> Session::graph_keys() const {
    std::lock_guard<std::mutex> lock(mu_);
    std::vector<std::string> keys;
    keys.reserve(records_.size());
    for (const auto& [k, _] : records_) keys.push_back(k);
    return keys;
}

const GraphRecord& Session::record_for(const std::string& key) const {
    std::lock_guard<std::mutex> lock(mu_);
    return records_.at(key);
}

bool Session::well_covered(const CirculantGraph& g) {
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto& r = record_locked(g);
        if (r.well_covered && hit(r)) return *r.well_covered;
    }
    bool v = independence_complex(g.graph).is_pure();
    std::lock_guard<std::mutex> lock(mu_);
    auto& r = record_locked(g);
    if (!r.well_covered) {
        r.well_covered = v;
        r.dirty = true;
    }
    return *r.well_covered;
}

bool Session::s2(const CirculantGraph& g) {
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto& r = record_locked(g);
        if (r.s2 && hit(r)) return *r.s2;
    }
    Classifier cl;
    bool v = cl.s2_orbit_scan(independence_complex(g.graph), g.n);
    std::lock_guard<std::mutex> lock(mu_);
    auto& r = record_locked(g);
    if (!r.s2) {
        r.s2 = v;
        r.dirty = true;
    }
    return *r.s2;
}

bool Session::strongly_connected(const CirculantGraph& g) {
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto& r = record_locked(g);
        if (r.strongly_connected && hit(r)) return *r.strongly_connected;
    }
    auto ind = independence_complex(g.graph);
    bool v = ind.is_pure() ? is_strongly_connected(ind) : false;
    std::lock_guard<std::mutex> lock(mu_);
    auto& r = record_locked(g);
    if (!r.strongly_connected) {
        r.strongly_connected = v;
        r.dirty = true;
    }
    return *r.strongly_connected;
}

std::map<int, bool> Session::sr_terai(const CirculantGraph& g, int rr,
                                      const std::vector<int>& chars) {
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto& r = record_locked(g);
        auto it = r.sr_terai.find(rr);
        if (it != r.sr_terai.end()) {
            bool all = true;
            for (int ch : chars) all = all && it->second.count(ch);
            if (all) {
                hit(r);
                std::map<int, bool> out;
                for (int ch : chars) out[ch] = it->second.at(ch);
                return out;
            }
        }
    }
    Classifier cl;
    auto v = cl.sr_terai_chars(independence_complex(g.graph), SerreLevel{rr}, chars, nullptr, g.n);
    std::lock_guard<std::mutex> lock(mu_);
    auto& r = record_locked(g);
    for (auto& [ch, val] : v) r.sr_terai[rr][ch] = val;
    r.dirty = true;
    return v;
}

std::map<int, bool> Session::cohen_macaulay(const CirculantGraph& g,
                                            const std::vector<int>& chars) {
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto& r = record_locked(g);
        bool all = r.cm_all_fields.has_value();
        for (int ch : chars) all = all && r.cohen_macaulay.count(ch);
        if (all && !r.buchsbaum.empty()) {
            hit(r);
            std::map<int, bool> out;
            for (int ch : chars) out[ch] = r.cohen_macaulay.at(ch);
            return out;
        }
    }
    // One classifier for CM, CM-over-Z and Buchsbaum: the vertex-link entries
    // are shared.
    Classifier cl;
    auto ind = independence_complex(g.graph);
    std::map<int, bool> cm;
    for (int ch : chars) cm[ch] = cl.is_cohen_macaulay(ind, FieldSpec{ch}, g.n);
    bool cm_all = cl.is_cohen_macaulay_all_fields(ind, g.n);
    auto buchs = cl.buchsbaum_chars(ind, chars, g.n);
    std::lock_guard<std::mutex> lock(mu_);
    auto& r = record_locked(g);
    for (auto& [ch, val] : cm) r.cohen_macaulay[ch] = val;
    if (!r.cm_all_fields) r.cm_all_fields = cm_all;
    for (auto& [ch, val] : buchs) r.buchsbaum[ch] = val;
    r.dirty = true;
    return cm;
}

bool Session::cm_all_fields(const CirculantGraph& g) {
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto& r = record_locked(g);
        if (r.cm_all_fields && hit(r)) return *r.cm_all_fields;
    }
    cohen_macaulay(g, {0, 2, 3, 5});
    std::lock_guard<std::mutex> lock(mu_);
    return *record_locked(g).cm_all_fields;
}

std::map<int, bool> Session::buchsbaum(const CirculantGraph& g, const std::vector<int>& chars) {
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto& r = record_locked(g);
        bool all = true;
        for (int ch : chars) all = all && r.buchsbaum.count(ch);
        if (all) {
            hit(r);
            std::map<int, bool> out;
            for (int ch : chars) out[ch] = r.buchsbaum.at(ch);
            return out;
        }
    }
    cohen_macaulay(g, chars);
    std::map<int, bool> out;
    std::lock_guard<std::mutex> lock(mu_);
    auto& r = record_locked(g);
    for (int ch : chars) out[ch] = r.buchsbaum.at(ch);
    return out;
}

int Session::dim_ind(const CirculantGraph& g) {
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto& r = record_locked(g);
        if (r.dim_ind && hit(r)) return *r.dim_ind;
    }
    int v = independence_complex(g.graph).dim();
    std::lock_guard<std::mutex> lock(mu_);
    auto& r = record_locked(g);
    if (!r.dim_ind) {
        r.dim_ind = v;
        r.dirty = true;
    }
    return *r.dim_ind;
}

Decision3 Session::shellable(const CirculantGraph& g, const SearchBudgets& budgets) {
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto& r = record_locked(g);
        if (r.shellable && hit(r)) return *r.shellable;
    }
    Classifier cl;
    auto ind = independence_complex(g.graph);
    Decision3 v =
        ind.is_pure() ? cl.is_shellable(ind, budgets).decided : Decision3::False;
    std::lock_guard<std::mutex> lock(mu_);
    auto& r = record_locked(g);
    if (!r.shellable) {
        r.shellable = v;
        r.dirty = true;
    }
    return *r.shellable;
}

// --- sweep harness ---

namespace {

struct InstanceOutcome {
    std::vector<Mismatch> mismatches;
    std::vector<std::string> timeouts;
    std::optional<IsoCertificate> certificate;
};

void run_instances(size_t count, int jobs,
                   const std::function<InstanceOutcome(size_t)>& fn,
                   std::vector<InstanceOutcome>& out) {
    out.resize(count);
    if (jobs <= 1) {
        for (size_t i = 0; i < count; ++i) out[i] = fn(i);
        return;
    }
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= count) return;
            out[i] = fn(i);
        }
    };
    std::vector<std::thread> pool;
    int threads = std::min<int>(jobs, static_cast<int>(count));
    pool.reserve(static_cast<size_t>(threads));
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

std::string b2s(bool b) { return b ? "true" : "false"; }

void expect(InstanceOutcome& o, const std::string& instance, const std::string& what,
            bool predicted, bool computed) {
    if (predicted != computed)
        o.mismatches.push_back({instance, what + "=" + b2s(predicted), what + "=" + b2s(computed)});
}

int default_max_n(TheoremId t) {
    switch (t) {
        case TheoremId::S2Cycles: return 12;
        case TheoremId::S2OmitOne: return 20;
        case TheoremId::StructureOnePaired:
        case TheoremId::S2OnePaired:
        case TheoremId::BuchsNotCmOnePaired:
        case TheoremId::S2CubicConnected:
        case TheoremId::DavisDomke:
        case TheoremId::S2Cubic:
        case TheoremId::S2NotBuchsFamilies:
            return 24;
        default: return 26;
    }
}

// Fixed pool of small corpus graphs for the join/union properties.
std::vector<CirculantGraph> property_pool() {
    std::vector<CirculantGraph> pool;
    pool.push_back(make_circulant(4, {1, 2}));
    pool.push_back(make_circulant(5, {1}));
    pool.push_back(make_circulant(6, {1, 3}));
    pool.push_back(make_circulant(6, {2, 3}));
    pool.push_back(make_circulant(7, {1}));
    pool.push_back(make_circulant(8, {4}));
    pool.push_back(make_circulant(8, {1, 4}));
    pool.push_back(make_circulant(8, {1, 2, 3}));
    return pool;
}

}  // namespace

bool verify_structure_one_paired(int n, int a, int b) {
    auto inst = one_paired(n, a, b);
    auto expected = predict_structure_one_paired(n, a, b);
    auto comps = connected_components(inst.graph.graph);
    if (static_cast<int>(comps.size()) != expected.components) return false;
    for (const auto& comp : comps) {
        if (static_cast<int>(comp.vertices.size()) != expected.parts * expected.part_size)
            return false;
        auto ind = independence_complex(comp.induced);
        const auto& fs = ind.facets();
        if (static_cast<int>(fs.size()) != expected.parts) return false;
        Face seen = 0;
        for (Face f : fs) {
            if (face_size(f) != expected.part_size) return false;
            if (f & seen) return false;  // simplices must be disjoint
            seen |= f;
        }
        if (face_size(seen) != static_cast<int>(comp.vertices.size())) return false;
    }
    return true;
}

IntervalLinkReport verify_interval_links(int n, int d, const SearchBudgets& budgets) {
    if (d <= 1 || n <= 3 * d)
        throw std::invalid_argument("interval-link check needs n > 3d and d > 1");
    IntervalLinkReport rep;
    auto inst = upper_interval(n, d);
    auto ind = independence_complex(inst.graph.graph);

    std::vector<Face> expected;
    for (int i = 0; i < n; ++i) {
        Face f = 0;
        for (int j = 0; j <= d; ++j) f |= Face{1} << ((i + j) % n);
        expected.push_back(f);
    }
    std::sort(expected.begin(), expected.end(), face_lex_less);
    rep.facets_are_cyclic_intervals = (expected == ind.facets());

    Classifier cl;
    rep.complex_not_shellable = (cl.is_shellable(ind, budgets).decided == Decision3::False);

    bool all_links_shellable = true;
    bool all_le_d_strong = true;
    for (Face f : ind.all_faces()) {
        auto link = ind.link(f);
        int dl = link.is_void() ? -2 : link.dim();
        if (f != 0) {
            ++rep.nonempty_links_checked;
            if (cl.is_shellable(link, budgets).decided != Decision3::True)
                all_links_shellable = false;
        }
        if (dl > 0 && dl <= d) {
            ++rep.faces_dim_le_d;
            bool strong = is_strongly_connected(link);
            if (strong) ++rep.links_strongly_connected_dim_le_d;
            else all_le_d_strong = false;
            if (dl < d) {
                ++rep.faces_dim_lt_d;
                if (strong) ++rep.links_strongly_connected_dim_lt_d;
            }
        }
    }
    rep.ok = rep.facets_are_cyclic_intervals && rep.complex_not_shellable &&
             all_links_shellable && all_le_d_strong;
    return rep;
}

namespace {

InstanceOutcome check_davis_domke(int two_n, int a) {
    InstanceOutcome o;
    auto inst = cubic(two_n, a);
    std::string name = inst.graph.id();
    auto pred = predict_davis_domke(two_n, a);
    auto comps = connected_components(inst.graph.graph);
    std::ostringstream predicted;
    predicted << pred.copies << " copies of C" << pred.model_n << "(" << pred.model_gens[0]
              << "," << pred.model_gens[1] << ")";
    if (static_cast<int>(comps.size()) != pred.copies) {
        std::ostringstream got;
        got << comps.size() << " components";
        o.mismatches.push_back({name, predicted.str(), got.str()});
        return o;
    }
    auto model = make_circulant(pred.model_n, pred.model_gens);
    IsoCertificate cert;
    cert.instance = name;
    for (const auto& comp : comps) {
        if (static_cast<int>(comp.vertices.size()) != pred.model_n) {
            o.mismatches.push_back({name, predicted.str(), "component of wrong size"});
            return o;
        }
        std::optional<std::vector<int>> map;
        if (pred.model_n <= kIsomorphismVertexBudget) {
            map = graphs_isomorphic(model.graph, comp.induced);
        } else {
            // Components of a circulant are circulant in the relabeling that
            // preserves cyclic order; a unit multiplier carries the model
            // generators onto the component's.
            int M = pred.model_n;
            std::vector<int> comp_gens;
            for (int p = 1; p <= M / 2; ++p)
                if (comp.induced.has_edge(0, p)) comp_gens.push_back(p);
            auto fold = [M](long long x) {
                x %= M;
                if (x < 0) x += M;
                return static_cast<int>(std::min(x, static_cast<long long>(M) - x));
            };
            for (int u = 1; u < M && !map; ++u) {
                if (std::gcd(u, M) != 1) continue;
                std::vector<int> image;
                for (int s : pred.model_gens) image.push_back(fold(static_cast<long long>(u) * s));
                std::sort(image.begin(), image.end());
                image.erase(std::unique(image.begin(), image.end()), image.end());
                if (image == comp_gens) {
                    std::vector<int> m(static_cast<size_t>(M));
                    for (int x = 0; x < M; ++x)
                        m[static_cast<size_t>(x)] =
                            static_cast<int>((static_cast<long long>(u) * x) % M);
                    map = std::move(m);
                }
            }
        }
        if (!map || !is_isomorphism(model.graph, comp.induced, *map)) {
            o.mismatches.push_back({name, predicted.str(), "component not isomorphic to model"});
            return o;
        }
        cert.component_vertices.push_back(comp.vertices);
        std::vector<int> to_original(static_cast<size_t>(pred.model_n));
        for (int x = 0; x < pred.model_n; ++x)
            to_original[static_cast<size_t>(x)] =
                comp.vertices[static_cast<size_t>((*map)[static_cast<size_t>(x)])];
        cert.maps.push_back(std::move(to_original));
    }
    o.certificate = std::move(cert);
    return o;
}

}  // namespace

SweepResult verify_theorem(TheoremId t, Session& session, const SweepSettings& settings) {
    SweepResult result;
    result.theorem = t;
    auto start = std::chrono::steady_clock::now();
    int max_n = settings.max_n > 0 ? settings.max_n : default_max_n(t);
    const auto& chars = settings.characteristics;

    std::vector<TheoremParams> instances;
    std::function<InstanceOutcome(size_t)> run;

    auto char_consistent = [](const std::map<int, bool>& m, const std::string& inst,
                              const std::string& what, InstanceOutcome& o) {
        bool first = m.begin()->second;
        for (auto& [ch, v] : m)
            if (v != first) {
                o.mismatches.push_back(
                    {inst, what + " independent of characteristic", what + " varies with characteristic"});
                return first;
            }
        return first;
    };

    switch (t) {
        case TheoremId::WcPowerOfCycle:
        case TheoremId::S2PowerOfCycle:
        case TheoremId::BuchsNotS2PowerOfCycle: {
            for (int d = 1; 2 * d <= max_n; ++d)
                for (int n = 2 * d; n <= max_n; ++n)
                    instances.push_back({.n = n, .d = d});
            run = [&, t](size_t idx) {
                InstanceOutcome o;
                auto [n, d] = std::pair(instances[idx].n, instances[idx].d);
                auto g = power_of_cycle(n, d).graph;
                std::string name = g.id();
                if (t == TheoremId::WcPowerOfCycle) {
                    expect(o, name, "well-covered", predict_wc_power_of_cycle(n, d),
                           session.well_covered(g));
                } else if (t == TheoremId::S2PowerOfCycle) {
                    bool pred = predict_s2_power_of_cycle(n, d);
                    expect(o, name, "s2", pred, session.s2(g));
                    for (auto& [ch, v] : session.sr_terai(g, 2, chars))
                        expect(o, name, "terai-s2(char " + std::to_string(ch) + ")", pred, v);
                } else {
                    bool buchs = char_consistent(session.buchsbaum(g, chars), name, "buchsbaum", o);
                    bool nots2 = !session.s2(g);
                    expect(o, name, "buchsbaum-and-not-s2",
                           predict_buchs_not_s2_power_of_cycle(n, d), buchs && nots2);
                }
                return o;
            };
            break;
        }
        case TheoremId::S2Cycles: {
            for (int n = 3; n <= max_n; ++n) instances.push_back({.n = n});
            run = [&](size_t idx) {
                InstanceOutcome o;
                int n = instances[idx].n;
                auto g = plain_cycle(n).graph;
                std::string name = g.id();
                expect(o, name, "s2", predict_s2_cycle(n), session.s2(g));
                expect(o, name, "cm", predict_cm_cycle(n), session.cm_all_fields(g));
                expect(o, name, "s2-not-cm", n == 7,
                       session.s2(g) && !session.cm_all_fields(g));
                return o;
            };
            break;
        }
        case TheoremId::WcUpperInterval:
        case TheoremId::CmUpperInterval:
        case TheoremId::S2UpperInterval:
        case TheoremId::EquivUpperInterval: {
            for (int d = 1; 2 * d + 2 <= max_n; ++d)
                for (int n = 2 * d + 2; n <= max_n; ++n)
                    instances.push_back({.n = n, .d = d});
            run = [&, t](size_t idx) {
                InstanceOutcome o;
                auto [n, d] = std::pair(instances[idx].n, instances[idx].d);
                auto g = upper_interval(n, d).graph;
                std::string name = g.id();
                if (t == TheoremId::WcUpperInterval) {
                    expect(o, name, "well-covered", predict_wc_upper_interval(n, d),
                           session.well_covered(g));
                } else if (t == TheoremId::S2UpperInterval) {
                    expect(o, name, "s2", predict_s2_upper_interval(n, d), session.s2(g));
                } else if (t == TheoremId::CmUpperInterval) {
                    bool pred = predict_cm_upper_interval(n, d);
                    expect(o, name, "cm", pred, session.cm_all_fields(g));
                    // Shellability and vertex decomposability carry the same
                    // classification; cross-checked where the search is small.
                    Decision3 sh = session.shellable(g, settings.budgets);
                    if (sh != Decision3::Timeout)
                        expect(o, name, "shellable", pred, sh == Decision3::True);
                } else {
                    bool pred = predict_s2_upper_interval(n, d);
                    bool buchs = char_consistent(session.buchsbaum(g, chars), name, "buchsbaum", o);
                    expect(o, name, "s2", pred, session.s2(g));
                    expect(o, name, "buchsbaum", pred, buchs);
                    expect(o, name, "well-covered", pred, session.well_covered(g));
                }
                return o;
            };
            break;
        }
        case TheoremId::S2OmitOne: {
            for (int n = 3; n <= max_n; ++n)
                for (int i = 1; i <= n / 2; ++i)
                    instances.push_back({.n = n, .i = i});
            run = [&](size_t idx) {
                InstanceOutcome o;
                auto [n, i] = std::pair(instances[idx].n, instances[idx].i);
                auto g = omit_one(n, i).graph;
                std::string name = g.id() + " (omit " + std::to_string(i) + ")";
                bool pred = predict_s2_omit_one(n, i);
                expect(o, name, "s2", pred, session.s2(g));
                expect(o, name, "cm", pred, session.cm_all_fields(g));
                int dim = session.dim_ind(g);
                int dim_pred = predict_dim_omit_one(n, i);
                if (dim != dim_pred)
                    o.mismatches.push_back({name, "dim=" + std::to_string(dim_pred),
                                            "dim=" + std::to_string(dim)});
                return o;
            };
            break;
        }
        case TheoremId::StructureOnePaired:
        case TheoremId::S2OnePaired:
        case TheoremId::BuchsNotCmOnePaired: {
            for (int n = 2; n <= max_n; ++n)
                for (int a = 1; a <= n; ++a)
                    for (int b = 2; a * b <= n; ++b)
                        if (n % (a * b) == 0) instances.push_back({.n = n, .a = a, .b = b});
            run = [&, t](size_t idx) {
                InstanceOutcome o;
                auto p = instances[idx];
                auto g = one_paired(p.n, p.a, p.b).graph;
                std::ostringstream os;
                os << "C(" << p.n << ";" << p.a << "," << p.b << ")";
                std::string name = os.str();
                if (t == TheoremId::StructureOnePaired) {
                    if (!verify_structure_one_paired(p.n, p.a, p.b))
                        o.mismatches.push_back({name, predict(t, p), "structure mismatch"});
                } else if (t == TheoremId::S2OnePaired) {
                    expect(o, name, "s2", predict_s2_one_paired(p.n, p.a, p.b), session.s2(g));
                    expect(o, name, "pure", true, session.well_covered(g));
                } else {
                    bool buchs = char_consistent(session.buchsbaum(g, chars), name, "buchsbaum", o);
                    bool cm = session.cm_all_fields(g);
                    expect(o, name, "buchsbaum-not-cm",
                           predict_buchs_not_cm_one_paired(p.n, p.a, p.b), buchs && !cm);
                    expect(o, name, "cm", predict_cm_one_paired(p.n, p.a, p.b), cm);
                }
                return o;
            };
            break;
        }
        case TheoremId::S2CubicConnected:
        case TheoremId::DavisDomke:
        case TheoremId::S2Cubic: {
            for (int two_n = 4; two_n <= max_n; two_n += 2)
                for (int a = 1; a < two_n / 2; ++a) {
                    if (t == TheoremId::S2CubicConnected && std::gcd(a, two_n / 2) != 1) continue;
                    instances.push_back({.a = a, .two_n = two_n});
                }
            run = [&, t](size_t idx) {
                InstanceOutcome o;
                auto [a, two_n] = std::pair(instances[idx].a, instances[idx].two_n);
                if (t == TheoremId::DavisDomke) return check_davis_domke(two_n, a);
                auto g = cubic(two_n, a).graph;
                std::string name = g.id();
                if (t == TheoremId::S2CubicConnected) {
                    // Connected cubic circulants are well-covered exactly when
                    // isomorphic to C4(1,2), C6(1,3), C6(2,3), C8(1,4) or
                    // C10(2,5); among those, only C6(1,3) fails S2.
                    bool wc_closed_form =
                        two_n <= 6 || two_n == 8 || (two_n == 10 && a % 2 == 0);
                    expect(o, name, "well-covered", wc_closed_form, session.well_covered(g));
                    expect(o, name, "s2", wc_closed_form && !(two_n == 6 && a == 1),
                           session.s2(g));
                } else {
                    expect(o, name, "s2", predict_s2_cubic(two_n, a), session.s2(g));
                }
                return o;
            };
            break;
        }
        case TheoremId::S2NotBuchsFamilies: {
            for (int tt = 2; 8 * tt <= max_n; ++tt)
                instances.push_back({.n = 8 * tt, .a = tt, .b = 4 * tt});
            for (int tt = 2; 10 * tt <= max_n; ++tt) {
                instances.push_back({.n = 10 * tt, .a = 2 * tt, .b = 5 * tt});
                instances.push_back({.n = 10 * tt, .a = 4 * tt, .b = 5 * tt});
            }
            run = [&](size_t idx) {
                InstanceOutcome o;
                auto p = instances[idx];
                auto g = make_circulant(p.n, {p.a, p.b});
                std::string name = g.id();
                expect(o, name, "s2", true, session.s2(g));
                for (auto& [ch, v] : session.buchsbaum(g, chars))
                    expect(o, name, "buchsbaum(char " + std::to_string(ch) + ")", false, v);
                return o;
            };
            break;
        }
        case TheoremId::JoinS2: {
            auto pool = property_pool();
            for (size_t i = 0; i < pool.size(); ++i)
                for (size_t j = i; j < pool.size(); ++j)
                    instances.push_back({.a = static_cast<int>(i), .b = static_cast<int>(j)});
            run = [&, pool](size_t idx) {
                InstanceOutcome o;
                const auto& ga = pool[static_cast<size_t>(instances[idx].a)];
                const auto& gb = pool[static_cast<size_t>(instances[idx].b)];
                auto A = independence_complex(ga.graph);
                auto B = independence_complex(gb.graph).shifted(ga.n);
                auto J = join(A, B);
                Classifier cl;
                std::string name = "Ind(" + ga.id() + ") * Ind(" + gb.id() + ")";
                expect(o, name, "s2(join)", cl.is_s2(A) && cl.is_s2(B), cl.is_s2(J));
                return o;
            };
            break;
        }
        case TheoremId::DisjointUnionS2: {
            auto pool = property_pool();
            for (size_t i = 0; i < pool.size(); ++i)
                for (size_t j = i; j < pool.size(); ++j)
                    instances.push_back({.a = static_cast<int>(i), .b = static_cast<int>(j)});
            run = [&, pool](size_t idx) {
                InstanceOutcome o;
                const auto& gh = pool[static_cast<size_t>(instances[idx].a)];
                const auto& gk = pool[static_cast<size_t>(instances[idx].b)];
                auto u = disjoint_union(gh.graph, gk.graph);
                Classifier cl;
                std::string name = gh.id() + " + " + gk.id();
                bool lhs = cl.is_s2(independence_complex(u));
                bool rhs = cl.is_s2(independence_complex(gh.graph)) &&
                           cl.is_s2(independence_complex(gk.graph));
                expect(o, name, "s2(disjoint union)", rhs, lhs);
                return o;
            };
            break;
        }
        case TheoremId::UnionNotBuchsbaum: {
            std::vector<CirculantGraph> pool = {
                make_circulant(7, {1}),
                make_circulant(8, {1, 4}),
                make_circulant(10, {2, 5}),
            };
            for (size_t i = 0; i < pool.size(); ++i)
                for (size_t j = i; j < pool.size(); ++j)
                    instances.push_back({.a = static_cast<int>(i), .b = static_cast<int>(j)});
            run = [&, pool](size_t idx) {
                InstanceOutcome o;
                const auto& gh = pool[static_cast<size_t>(instances[idx].a)];
                const auto& gk = pool[static_cast<size_t>(instances[idx].b)];
                std::string name = gh.id() + " + " + gk.id();
                Classifier cl;
                // Hypothesis: both parts Buchsbaum but not Cohen-Macaulay.
                for (const auto* g : {&gh, &gk}) {
                    auto ind = independence_complex(g->graph);
                    for (int ch : chars)
                        expect(o, name, g->id() + " buchsbaum", true,
                               cl.is_buchsbaum(ind, FieldSpec{ch}));
                    expect(o, name, g->id() + " cm", false, cl.is_cohen_macaulay_all_fields(ind));
                }
                auto u = independence_complex(disjoint_union(gh.graph, gk.graph));
                for (int ch : chars)
                    expect(o, name, "union buchsbaum(char " + std::to_string(ch) + ")", false,
                           cl.is_buchsbaum(u, FieldSpec{ch}));
                return o;
            };
            break;
        }
    }

    std::vector<InstanceOutcome> outcomes;
    run_instances(instances.size(), settings.jobs, run, outcomes);
    result.instances_checked = static_cast<long long>(instances.size());
    for (auto& o : outcomes) {
        result.mismatches.insert(result.mismatches.end(), o.mismatches.begin(), o.mismatches.end());
        result.timeouts.insert(result.timeouts.end(), o.timeouts.begin(), o.timeouts.end());
        if (o.certificate && (settings.certify || t == TheoremId::DavisDomke))
            result.certificates.push_back(*o.certificate);
    }
    result.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    return result;
}

ClassificationReport session_report(Session& session, const CirculantGraph& g,
                                    const ClassificationOptions& opts) {
    ClassificationReport rep;
    rep.subject = g.id();
    rep.n = g.n;
    rep.gens = g.gens;
    auto ind = independence_complex(g.graph);
    rep.complex_key = ind.canonical_key();

    rep.well_covered = session.well_covered(g);
    rep.s2 = session.s2(g);
    rep.strongly_connected = session.strongly_connected(g);
    for (int r : opts.serre_levels)
        rep.sr[r] = session.sr_terai(g, r, {0}).at(0);
    rep.cohen_macaulay = session.cohen_macaulay(g, opts.characteristics);
    rep.cm_all_fields = session.cm_all_fields(g);
    rep.buchsbaum = session.buchsbaum(g, opts.characteristics);
    rep.shellable = session.shellable(g, opts.budgets);

    Classifier cl;
    rep.vertex_decomposable =
        ind.is_pure() ? cl.is_vertex_decomposable(ind, opts.budgets) : Decision3::False;

    Witness w;
    if (!rep.well_covered && !cl.is_well_covered(g.graph, &w)) rep.witnesses.push_back(w);
    if (rep.well_covered && !rep.s2 && !cl.s2_orbit_scan(ind, g.n, &w))
        rep.witnesses.push_back(w);
    if (!opts.serre_levels.empty()) {
        int top_r = opts.serre_levels.back();
        if (!rep.sr[top_r] &&
            !cl.is_sr_terai(ind, SerreLevel{top_r}, FieldSpec{0}, &w, g.n))
            rep.witnesses.push_back(w);
    }
    if (!rep.cm_all_fields && !cl.is_cohen_macaulay_all_fields(ind, g.n, &w) &&
        w.kind == WitnessKind::NonvanishingLinkHomology)
        rep.witnesses.push_back(w);
    if (ind.is_pure() && rep.shellable != Decision3::Timeout) {
        auto res = cl.is_shellable(ind, opts.budgets);
        if (res.decided == Decision3::True) {
            Witness sw;
            sw.kind = WitnessKind::ShellingOrder;
            sw.order = res.order;
            rep.witnesses.push_back(sw);
        } else if (res.decided == Decision3::False) {
            Witness sw;
            sw.kind = WitnessKind::NoShellingExists;
            sw.nodes_searched = res.nodes;
            rep.witnesses.push_back(sw);
        }
    }
    return rep;
}

}  // namespace serre
