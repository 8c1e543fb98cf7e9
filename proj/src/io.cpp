#include "serre/io.hpp"

#include <sstream>
#include <stdexcept>

namespace serre {

namespace {

Json face_to_json(Face f) {
    Json a = Json::array();
    for (int v : face_vertices(f)) a.push_back(v);
    return a;
}

Face face_from_json(const Json& j) {
    std::vector<int> vs;
    for (const auto& v : j) vs.push_back(v.get<int>());
    return face_from_vertices(vs);
}

std::string d3(Decision3 d) { return decision_name(d); }

}  // namespace

Json to_json(const CirculantGraph& g) {
    Json j;
    j["n"] = g.n;
    j["gens"] = g.gens;
    return j;
}

CirculantGraph circulant_from_json(const Json& j) {
    return make_circulant(j.at("n").get<int>(), j.at("gens").get<std::vector<int>>());
}

Json to_json(const SimplicialComplex& c) {
    Json j;
    j["n"] = c.vertex_universe();
    Json fs = Json::array();
    for (Face f : c.facets()) fs.push_back(face_to_json(f));
    j["facets"] = fs;
    return j;
}

SimplicialComplex complex_from_json(const Json& j) {
    std::vector<std::vector<int>> facets;
    for (const auto& f : j.at("facets")) facets.push_back(f.get<std::vector<int>>());
    return SimplicialComplex::from_vertex_lists(j.at("n").get<int>(), facets);
}

SimplicialComplex complex_from_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument("empty complex file");
    int n = std::stoi(line);
    std::vector<std::vector<int>> facets;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::vector<int> vs;
        int v;
        while (ls >> v) vs.push_back(v);
        ls.clear();
        std::string rest;
        ls >> rest;
        if (!rest.empty()) throw std::invalid_argument("unparseable facet line: " + line);
        facets.push_back(vs);
    }
    return SimplicialComplex::from_vertex_lists(n, facets);
}

Json to_json(const HomologyProfile& p) {
    Json dims = Json::array();
    for (int i = -1; i <= p.dim; ++i) {
        Json d;
        d["i"] = i;
        d["rank"] = p.at(i).free_rank;
        d["torsion"] = p.at(i).torsion;
        dims.push_back(d);
    }
    Json j;
    j["dims"] = dims;
    return j;
}

std::string homology_table(const HomologyProfile& p) {
    std::ostringstream os;
    os << "  i  rank  torsion\n";
    for (int i = -1; i <= p.dim; ++i) {
        os << (i < 0 ? " " : "  ") << i << "  " << p.at(i).free_rank << "     ";
        if (p.at(i).torsion.empty()) {
            os << "-";
        } else {
            for (size_t k = 0; k < p.at(i).torsion.size(); ++k) {
                if (k) os << ",";
                os << "Z/" << p.at(i).torsion[k];
            }
        }
        os << "\n";
    }
    return os.str();
}

Json witness_to_json(const Witness& w) {
    Json j;
    j["kind"] = witness_kind_name(w.kind);
    switch (w.kind) {
        case WitnessKind::DisconnectedLinkFace:
            j["face"] = face_to_json(w.face);
            break;
        case WitnessKind::ImpureFacetPair:
            j["facet_a"] = face_to_json(w.facet_a);
            j["facet_b"] = face_to_json(w.facet_b);
            break;
        case WitnessKind::NonvanishingLinkHomology:
            j["face"] = face_to_json(w.face);
            j["dimension"] = w.dimension;
            j["characteristic"] = w.characteristic;
            break;
        case WitnessKind::ShellingOrder: {
            Json order = Json::array();
            for (Face f : w.order) order.push_back(face_to_json(f));
            j["order"] = order;
            break;
        }
        case WitnessKind::NoShellingExists:
            j["nodes_searched"] = w.nodes_searched;
            break;
    }
    return j;
}

Witness witness_from_json(const Json& j) {
    auto kind = witness_kind_from_name(j.at("kind").get<std::string>());
    if (!kind) throw std::invalid_argument("unknown witness kind");
    Witness w;
    w.kind = *kind;
    switch (w.kind) {
        case WitnessKind::DisconnectedLinkFace:
            w.face = face_from_json(j.at("face"));
            break;
        case WitnessKind::ImpureFacetPair:
            w.facet_a = face_from_json(j.at("facet_a"));
            w.facet_b = face_from_json(j.at("facet_b"));
            break;
        case WitnessKind::NonvanishingLinkHomology:
            w.face = face_from_json(j.at("face"));
            w.dimension = j.at("dimension").get<int>();
            w.characteristic = j.at("characteristic").get<int>();
            break;
        case WitnessKind::ShellingOrder:
            for (const auto& f : j.at("order")) w.order.push_back(face_from_json(f));
            break;
        case WitnessKind::NoShellingExists:
            w.nodes_searched = j.at("nodes_searched").get<long long>();
            break;
    }
    return w;
}

Json to_json(const ClassificationReport& r) {
    Json j;
    j["subject"] = r.subject;
    j["n"] = r.n;
    if (!r.gens.empty()) j["gens"] = r.gens;
    j["well_covered"] = r.well_covered;
    j["s2"] = r.s2;
    j["strongly_connected"] = r.strongly_connected;
    Json sr;
    for (auto& [rr, v] : r.sr) sr[std::to_string(rr)] = v;
    j["sr"] = sr;
    Json cm;
    for (auto& [ch, v] : r.cohen_macaulay) cm[std::to_string(ch)] = v;
    cm["all_fields"] = r.cm_all_fields;
    j["cohen_macaulay"] = cm;
    Json bb;
    for (auto& [ch, v] : r.buchsbaum) bb[std::to_string(ch)] = v;
    j["buchsbaum"] = bb;
    j["shellable"] = d3(r.shellable);
    j["vertex_decomposable"] = d3(r.vertex_decomposable);
    Json ws = Json::array();
    for (const auto& w : r.witnesses) ws.push_back(witness_to_json(w));
    j["witnesses"] = ws;
    return j;
}

std::string report_table(const ClassificationReport& r) {
    std::ostringstream os;
    auto row = [&](const std::string& k, const std::string& v) {
        os << "  " << k;
        for (size_t i = k.size(); i < 22; ++i) os << ' ';
        os << v << "\n";
    };
    os << r.subject << "\n";
    row("well-covered", r.well_covered ? "true" : "false");
    row("s2", r.s2 ? "true" : "false");
    row("strongly-connected", r.strongly_connected ? "true" : "false");
    for (auto& [rr, v] : r.sr) row("s" + std::to_string(rr) + " (terai, char 0)", v ? "true" : "false");
    for (auto& [ch, v] : r.cohen_macaulay)
        row("cohen-macaulay char " + std::to_string(ch), v ? "true" : "false");
    row("cohen-macaulay (Z)", r.cm_all_fields ? "true" : "false");
    for (auto& [ch, v] : r.buchsbaum)
        row("buchsbaum char " + std::to_string(ch), v ? "true" : "false");
    row("shellable", d3(r.shellable));
    row("vertex-decomposable", d3(r.vertex_decomposable));
    row("witnesses", std::to_string(r.witnesses.size()));
    return os.str();
}

Json sweep_to_json(const SweepResult& r, bool with_runtime) {
    Json j;
    j["theorem"] = theorem_name(r.theorem);
    j["instances_checked"] = r.instances_checked;
    Json ms = Json::array();
    for (const auto& m : r.mismatches) {
        Json e;
        e["instance"] = m.instance;
        e["predicted"] = m.predicted;
        e["computed"] = m.computed;
        ms.push_back(e);
    }
    j["mismatches"] = ms;
    j["timeouts"] = r.timeouts;
    if (with_runtime) j["runtime_ms"] = r.runtime_ms;
    if (!r.notes.empty()) j["notes"] = r.notes;
    if (!r.certificates.empty()) {
        Json cs = Json::array();
        for (const auto& c : r.certificates) {
            Json e;
            e["instance"] = c.instance;
            e["components"] = c.component_vertices;
            e["maps"] = c.maps;
            cs.push_back(e);
        }
        j["certificates"] = cs;
    }
    return j;
}

std::string sweep_table(const SweepResult& r) {
    std::ostringstream os;
    os << (r.passed() ? "pass" : "FAIL") << "  " << theorem_name(r.theorem) << "  instances="
       << r.instances_checked << "  mismatches=" << r.mismatches.size()
       << "  timeouts=" << r.timeouts.size() << "\n";
    for (const auto& m : r.mismatches)
        os << "    mismatch " << m.instance << ": predicted " << m.predicted << ", computed "
           << m.computed << "\n";
    for (const auto& s : r.timeouts) os << "    timeout " << s << "\n";
    return os.str();
}

std::string sweep_csv_row(const SweepResult& r) {
    std::ostringstream os;
    os << theorem_name(r.theorem) << ',' << r.instances_checked << ',' << r.mismatches.size()
       << ',' << r.timeouts.size() << '\n';
    return os.str();
}

Json record_to_json(const GraphRecord& r) {
    Json j;
    j["graph"] = to_json(r.graph);
    if (r.well_covered) j["well_covered"] = *r.well_covered;
    if (r.s2) j["s2"] = *r.s2;
    if (r.strongly_connected) j["strongly_connected"] = *r.strongly_connected;
    if (r.cm_all_fields) j["cm_all_fields"] = *r.cm_all_fields;
    if (!r.cohen_macaulay.empty()) {
        Json cm;
        for (auto& [ch, v] : r.cohen_macaulay) cm[std::to_string(ch)] = v;
        j["cohen_macaulay"] = cm;
    }
    if (!r.buchsbaum.empty()) {
        Json bb;
        for (auto& [ch, v] : r.buchsbaum) bb[std::to_string(ch)] = v;
        j["buchsbaum"] = bb;
    }
    if (!r.sr_terai.empty()) {
        Json sr;
        for (auto& [rr, m] : r.sr_terai) {
            Json inner;
            for (auto& [ch, v] : m) inner[std::to_string(ch)] = v;
            sr[std::to_string(rr)] = inner;
        }
        j["sr_terai"] = sr;
    }
    if (r.dim_ind) j["dim_ind"] = *r.dim_ind;
    if (r.shellable) j["shellable"] = d3(*r.shellable);
    return j;
}

void record_merge_from_json(GraphRecord& r, const Json& j) {
    if (j.contains("well_covered")) r.well_covered = j["well_covered"].get<bool>();
    if (j.contains("s2")) r.s2 = j["s2"].get<bool>();
    if (j.contains("strongly_connected"))
        r.strongly_connected = j["strongly_connected"].get<bool>();
    if (j.contains("cm_all_fields")) r.cm_all_fields = j["cm_all_fields"].get<bool>();
    if (j.contains("cohen_macaulay"))
        for (auto& [k, v] : j["cohen_macaulay"].items())
            r.cohen_macaulay[std::stoi(k)] = v.get<bool>();
    if (j.contains("buchsbaum"))
        for (auto& [k, v] : j["buchsbaum"].items()) r.buchsbaum[std::stoi(k)] = v.get<bool>();
    if (j.contains("sr_terai"))
        for (auto& [rk, m] : j["sr_terai"].items())
            for (auto& [ck, v] : m.items())
                r.sr_terai[std::stoi(rk)][std::stoi(ck)] = v.get<bool>();
    if (j.contains("dim_ind")) r.dim_ind = j["dim_ind"].get<int>();
    if (j.contains("shellable")) {
        std::string s = j["shellable"].get<std::string>();
        if (s == "true") r.shellable = Decision3::True;
        else if (s == "false") r.shellable = Decision3::False;
        else r.shellable = Decision3::Timeout;
    }
}

}  // namespace serre
