#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "serre/cache.hpp"
#include "serre/io.hpp"

using namespace serre;

namespace {

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name) : path("/tmp/serre-test-" + name) {
        std::remove(path.c_str());
    }
    ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("graph json round trip") {
    auto g = make_circulant(12, {2, 4, 6});
    auto j = to_json(g);
    CHECK(j.dump() == R"({"gens":[2,4,6],"n":12})");
    auto back = circulant_from_json(j);
    CHECK(back.id() == g.id());
    CHECK(back.graph == g.graph);
}

TEST_CASE("complex json and text round trip") {
    auto ind = independence_complex(make_circulant(8, {1, 4}).graph);
    auto back = complex_from_json(to_json(ind));
    CHECK(back == ind);

    auto c = complex_from_text("5\n0 1 2\n2 3 4\n");
    CHECK(c.vertex_universe() == 5);
    CHECK(c.facets().size() == 2);
    CHECK(c.is_face(face_from_vertices({2, 3})));
    CHECK_THROWS(complex_from_text(""));
    CHECK_THROWS(complex_from_text("3\n0 x\n"));

    // The irrelevant complex: a blank facet line.
    auto irr = complex_from_text("2\n\n");
    CHECK(irr.is_irrelevant());
}

TEST_CASE("homology profile json") {
    auto p = reduced_homology(SimplicialComplex::from_vertex_lists(
        6, {{0, 1, 4}, {0, 1, 5}, {0, 2, 3}, {0, 2, 5}, {0, 3, 4},
            {1, 2, 3}, {1, 2, 4}, {1, 3, 5}, {2, 4, 5}, {3, 4, 5}}));
    auto j = to_json(p);
    REQUIRE(j.at("dims").size() == 4);
    CHECK(j["dims"][2]["i"] == 1);
    CHECK(j["dims"][2]["rank"] == 0);
    CHECK(j["dims"][2]["torsion"] == Json::array({2}));
}

TEST_CASE("witness json round trips") {
    std::vector<Witness> ws;
    {
        Witness w;
        w.kind = WitnessKind::DisconnectedLinkFace;
        w.face = face_from_vertices({1, 3});
        ws.push_back(w);
    }
    {
        Witness w;
        w.kind = WitnessKind::ImpureFacetPair;
        w.facet_a = face_from_vertices({0, 1});
        w.facet_b = face_from_vertices({2, 3, 4});
        ws.push_back(w);
    }
    {
        Witness w;
        w.kind = WitnessKind::NonvanishingLinkHomology;
        w.face = face_from_vertices({2});
        w.dimension = 1;
        w.characteristic = 2;
        ws.push_back(w);
    }
    {
        Witness w;
        w.kind = WitnessKind::ShellingOrder;
        w.order = {face_from_vertices({0, 1}), face_from_vertices({1, 2})};
        ws.push_back(w);
    }
    {
        Witness w;
        w.kind = WitnessKind::NoShellingExists;
        w.nodes_searched = 42;
        ws.push_back(w);
    }
    for (const auto& w : ws) {
        auto back = witness_from_json(witness_to_json(w));
        CHECK(back.kind == w.kind);
        CHECK(back.face == w.face);
        CHECK(back.facet_a == w.facet_a);
        CHECK(back.facet_b == w.facet_b);
        CHECK(back.dimension == w.dimension);
        CHECK(back.characteristic == w.characteristic);
        CHECK(back.order == w.order);
        CHECK(back.nodes_searched == w.nodes_searched);
    }
}

TEST_CASE("sweep json omits runtime by default") {
    Session session;
    SweepSettings s;
    s.max_n = 8;
    auto r = verify_theorem(TheoremId::S2Cycles, session, s);
    auto j = sweep_to_json(r);
    CHECK(!j.contains("runtime_ms"));
    CHECK(sweep_to_json(r, true).contains("runtime_ms"));
    CHECK(j["theorem"] == "s2-cycles");
}

TEST_CASE("cache store and lookup round trip") {
    TempFile tmp("cache1.jsonl");
    auto g = make_circulant(8, {1, 4});
    std::string serialized;
    {
        Session session;
        session.s2(g);
        session.cohen_macaulay(g, {0, 2, 3, 5});
        serialized = record_to_json(session.record_for(g.id())).dump();
        CHECK(flush_cache(tmp.path, session) == 1);
    }
    {
        Session session;
        auto stats = load_cache(tmp.path, session);
        CHECK(stats.records_loaded == 1);
        CHECK(stats.lines_skipped == 0);
        // Identical serialized record after the round trip.
        CHECK(record_to_json(session.record_for(g.id())).dump() == serialized);
        // Served values, not recomputed: the hit counter moves.
        CHECK(session.s2(g));
        CHECK(session.cache_hits() == 1);
        CHECK(spot_check_cache(session) == 1);
    }
}

TEST_CASE("cache miss and corrupt lines") {
    TempFile tmp("cache2.jsonl");
    {
        std::ofstream out(tmp.path);
        out << "this is not json\n";
        out << R"({"key":"C4(1,2);v)" << kClassifierVersion
            << R"(","record":{"graph":{"n":4,"gens":[1,2]},"s2":true}})" << "\n";
        out << R"({"key":"stale;v0","record":{"graph":{"n":5,"gens":[1]},"s2":false}})" << "\n";
    }
    Session session;
    auto stats = load_cache(tmp.path, session);
    CHECK(stats.records_loaded == 1);
    CHECK(stats.lines_skipped == 2);  // corrupt + version mismatch
    CHECK(session.graph_keys() == std::vector<std::string>{"C4(1,2)"});
    // Unknown key: nothing served, computed fresh (hit counter untouched).
    auto h = make_circulant(6, {2, 3});
    CHECK(session.s2(h));
    CHECK(session.cache_hits() == 0);
}

TEST_CASE("session report matches direct classification") {
    Classifier cl;
    Session session;
    for (auto& g : {make_circulant(6, {1, 3}), make_circulant(10, {2, 5}),
                    make_circulant(9, {1, 2})}) {
        auto direct = cl.classify_circulant(g);
        auto via_session = session_report(session, g);
        CHECK(to_json(direct).dump() == to_json(via_session).dump());
    }
}

TEST_CASE("report json determinism") {
    Classifier cl;
    auto a = to_json(cl.classify_circulant(make_circulant(8, {1, 4}))).dump(2);
    Classifier cl2;
    auto b = to_json(cl2.classify_circulant(make_circulant(8, {1, 4}))).dump(2);
    CHECK(a == b);
}
