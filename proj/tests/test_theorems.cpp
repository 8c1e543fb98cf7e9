#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "serre/theorems.hpp"

using namespace serre;

TEST_CASE("closed-form predictions") {
    CHECK(predict_s2_power_of_cycle(11, 2));       // n = 4d+3
    CHECK(!predict_s2_power_of_cycle(8, 3));       // n = 2d+2
    CHECK(predict_s2_power_of_cycle(6, 3));        // n = 2d
    CHECK(!predict_s2_power_of_cycle(9, 2));
    CHECK(predict_wc_power_of_cycle(9, 3));
    CHECK(!predict_wc_power_of_cycle(12, 3));

    CHECK(predict_s2_cycle(7));
    CHECK(!predict_s2_cycle(9));
    CHECK(predict_cm_cycle(5));
    CHECK(!predict_cm_cycle(7));

    CHECK(predict_s2_upper_interval(8, 3));   // n = 2d+2
    CHECK(predict_s2_upper_interval(10, 3));  // n > 3d
    CHECK(!predict_s2_upper_interval(9, 3));
    CHECK(predict_cm_upper_interval(8, 3));
    CHECK(predict_cm_upper_interval(9, 1));
    CHECK(!predict_cm_upper_interval(10, 3));

    CHECK(predict_s2_omit_one(9, 2));
    CHECK(!predict_s2_omit_one(9, 3));
    CHECK(predict_dim_omit_one(9, 3) == 2);
    CHECK(predict_dim_omit_one(9, 2) == 1);

    CHECK(!predict_s2_one_paired(12, 2, 3));
    CHECK(predict_s2_one_paired(6, 2, 3));
    CHECK(predict_buchs_not_cm_one_paired(8, 1, 2));
    CHECK(!predict_buchs_not_cm_one_paired(8, 2, 2));

    CHECK(predict_s2_cubic(16, 2));   // t=2, 2n/t=8
    CHECK(!predict_s2_cubic(6, 1));   // C6(1,3)
    CHECK(predict_s2_cubic(6, 2));    // t=2, 2n/t=3
    CHECK(predict_s2_cubic(8, 1));
    CHECK(!predict_s2_cubic(14, 1));  // 2n/t=14

    auto dd = predict_davis_domke(16, 2);
    CHECK(dd.copies == 2);
    CHECK(dd.model_n == 8);
    CHECK(dd.model_gens == std::vector<int>{1, 4});
    auto dd2 = predict_davis_domke(20, 8);  // t=4, 2n/t=5 odd
    CHECK(dd2.copies == 2);
    CHECK(dd2.model_n == 10);
    CHECK(dd2.model_gens == std::vector<int>{2, 5});

    auto st = predict_structure_one_paired(12, 2, 3);
    CHECK(st.components == 2);
    CHECK(st.parts == 3);
    CHECK(st.part_size == 2);

    CHECK_THROWS_AS(predict_s2_power_of_cycle(3, 2), std::invalid_argument);
    CHECK_THROWS_AS(predict_s2_one_paired(10, 2, 2), std::invalid_argument);

    TheoremParams p;
    p.n = 11;
    p.d = 2;
    CHECK(predict(TheoremId::S2PowerOfCycle, p) == "true");
}

TEST_CASE("theorem names round-trip") {
    for (TheoremId t : all_theorems()) {
        auto back = theorem_from_name(theorem_name(t));
        REQUIRE(back.has_value());
        CHECK(*back == t);
    }
    CHECK(!theorem_from_name("nonsense").has_value());
}

TEST_CASE("one-paired structure verification") {
    CHECK(verify_structure_one_paired(12, 2, 3));
    CHECK(verify_structure_one_paired(6, 1, 3));
    CHECK(verify_structure_one_paired(4, 2, 2));
    CHECK(verify_structure_one_paired(24, 2, 3));
    CHECK_THROWS_AS(verify_structure_one_paired(10, 2, 2), std::invalid_argument);
    // Vertex pairing for C(6;1,3): Ind = 3 disjoint edges {0,3},{1,4},{2,5}.
    auto ind = independence_complex(one_paired(6, 1, 3).graph.graph);
    std::vector<Face> expected = {face_from_vertices({0, 3}), face_from_vertices({1, 4}),
                                  face_from_vertices({2, 5})};
    std::sort(expected.begin(), expected.end(), face_lex_less);
    CHECK(ind.facets() == expected);
}

TEST_CASE("interval link structure") {
    auto rep = verify_interval_links(7, 2);
    CHECK(rep.ok);
    CHECK(rep.complex_not_shellable);
    CHECK(rep.facets_are_cyclic_intervals);
    CHECK(rep.faces_dim_le_d == rep.links_strongly_connected_dim_le_d);
    CHECK(rep.faces_dim_lt_d == rep.links_strongly_connected_dim_lt_d);
    CHECK(rep.faces_dim_le_d > rep.faces_dim_lt_d);  // the empty face sits in the gap

    auto rep2 = verify_interval_links(10, 3);
    CHECK(rep2.ok);

    CHECK_THROWS_AS(verify_interval_links(8, 3), std::invalid_argument);
    CHECK_THROWS_AS(verify_interval_links(9, 1), std::invalid_argument);
}

TEST_CASE("small sweeps pass") {
    Session session;
    SweepSettings s;
    s.max_n = 14;
    for (TheoremId t : {TheoremId::WcPowerOfCycle, TheoremId::S2PowerOfCycle,
                        TheoremId::BuchsNotS2PowerOfCycle, TheoremId::WcUpperInterval,
                        TheoremId::S2UpperInterval, TheoremId::CmUpperInterval,
                        TheoremId::EquivUpperInterval}) {
        auto r = verify_theorem(t, session, s);
        INFO(theorem_name(t));
        CHECK(r.mismatches.empty());
        CHECK(r.timeouts.empty());
        CHECK(r.instances_checked > 0);
    }

    SweepSettings cyc;
    cyc.max_n = 12;
    auto r = verify_theorem(TheoremId::S2Cycles, session, cyc);
    CHECK(r.passed());
    CHECK(r.instances_checked == 10);

    SweepSettings omit;
    omit.max_n = 12;
    CHECK(verify_theorem(TheoremId::S2OmitOne, session, omit).passed());

    SweepSettings op;
    op.max_n = 16;
    CHECK(verify_theorem(TheoremId::StructureOnePaired, session, op).passed());
    CHECK(verify_theorem(TheoremId::S2OnePaired, session, op).passed());
    CHECK(verify_theorem(TheoremId::BuchsNotCmOnePaired, session, op).passed());

    SweepSettings cub;
    cub.max_n = 16;
    CHECK(verify_theorem(TheoremId::S2CubicConnected, session, cub).passed());
    CHECK(verify_theorem(TheoremId::S2Cubic, session, cub).passed());
    CHECK(verify_theorem(TheoremId::S2NotBuchsFamilies, session, cub).passed());
}

TEST_CASE("davis-domke certificates revalidate") {
    Session session;
    SweepSettings s;
    s.max_n = 16;
    auto r = verify_theorem(TheoremId::DavisDomke, session, s);
    CHECK(r.passed());
    CHECK(!r.certificates.empty());
    for (const auto& cert : r.certificates) {
        // Re-derive the instance from its name "C{2n}(a,n)".
        int two_n, a, half;
        REQUIRE(std::sscanf(cert.instance.c_str(), "C%d(%d,%d)", &two_n, &a, &half) == 3);
        auto g = cubic(two_n, a).graph;
        auto pred = predict_davis_domke(two_n, a);
        auto model = make_circulant(pred.model_n, pred.model_gens);
        REQUIRE(cert.maps.size() == static_cast<size_t>(pred.copies));
        for (const auto& m : cert.maps) {
            REQUIRE(static_cast<int>(m.size()) == pred.model_n);
            // Edge-preserving into the big graph, injective onto a component.
            std::set<int> image(m.begin(), m.end());
            CHECK(image.size() == m.size());
            for (auto [x, y] : model.graph.edges())
                CHECK(g.graph.has_edge(m[static_cast<size_t>(x)], m[static_cast<size_t>(y)]));
        }
    }
}

TEST_CASE("property sweeps") {
    Session session;
    SweepSettings s;
    CHECK(verify_theorem(TheoremId::JoinS2, session, s).passed());
    CHECK(verify_theorem(TheoremId::DisjointUnionS2, session, s).passed());
    CHECK(verify_theorem(TheoremId::UnionNotBuchsbaum, session, s).passed());
}

TEST_CASE("sweeps are deterministic across jobs") {
    Session s1, s2;
    SweepSettings a, b;
    a.max_n = 12;
    b.max_n = 12;
    b.jobs = 4;
    for (TheoremId t : {TheoremId::S2PowerOfCycle, TheoremId::S2Cubic, TheoremId::DavisDomke}) {
        auto r1 = verify_theorem(t, s1, a);
        auto r2 = verify_theorem(t, s2, b);
        CHECK(r1.instances_checked == r2.instances_checked);
        CHECK(r1.mismatches.size() == r2.mismatches.size());
        CHECK(r1.certificates.size() == r2.certificates.size());
        for (size_t i = 0; i < r1.certificates.size(); ++i)
            CHECK(r1.certificates[i].maps == r2.certificates[i].maps);
    }
}
