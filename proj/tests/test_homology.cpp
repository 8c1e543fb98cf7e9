#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "serre/homology.hpp"

using namespace serre;

namespace {

SimplicialComplex complex_of(int n, std::vector<std::vector<int>> facets) {
    return SimplicialComplex::from_vertex_lists(n, facets);
}

std::vector<std::vector<int>> facet_lists(const SimplicialComplex& c) {
    std::vector<std::vector<int>> out;
    for (Face f : c.facets()) out.push_back(face_vertices(f));
    return out;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix r(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < a.cols; ++k)
            if (a.at(i, k) != 0)
                for (int j = 0; j < b.cols; ++j) r.at(i, j) += a.at(i, k) * b.at(k, j);
    return r;
}

bool all_zero(const IntMatrix& m) {
    for (long long v : m.a)
        if (v != 0) return false;
    return true;
}

std::vector<SimplicialComplex> homology_corpus() {
    return {
        complex_of(3, {{0, 1}, {0, 2}, {1, 2}}),
        complex_of(6, {{0, 2, 4}, {1, 3, 5}}),
        complex_of(6, oracle::projective_plane()),
        independence_complex(make_circulant(8, {1, 4}).graph),
        independence_complex(make_circulant(10, {2, 5}).graph),
        independence_complex(make_circulant(7, {1}).graph),
        independence_complex(make_circulant(9, {1, 2}).graph),
        complex_of(4, {{0, 1, 2, 3}}),
        complex_of(4, {{0}, {1}, {2}, {3}}),
        SimplicialComplex::irrelevant(2),
    };
}

}  // namespace

TEST_CASE("boundary matrices") {
    auto points = complex_of(3, {{0}, {1}, {2}});
    auto d0 = boundary_matrix(points, 0);
    CHECK(d0.rows == 1);
    CHECK(d0.cols == 3);
    for (int c = 0; c < 3; ++c) CHECK(d0.at(0, c) == 1);

    auto hollow = complex_of(3, {{0, 1}, {0, 2}, {1, 2}});
    auto h0 = boundary_matrix(hollow, 0);
    auto h1 = boundary_matrix(hollow, 1);
    CHECK(h1.rows == 3);
    CHECK(h1.cols == 3);
    for (int c = 0; c < 3; ++c) {
        long long sum = 0;
        for (int r = 0; r < 3; ++r) sum += h1.at(r, c);
        CHECK(sum == 0);
    }
    CHECK(all_zero(multiply(h0, h1)));

    auto solid = complex_of(3, {{0, 1, 2}});
    auto d2 = boundary_matrix(solid, 2);
    REQUIRE(d2.rows == 3);
    REQUIRE(d2.cols == 1);
    // Rows are the edges {0,1},{0,2},{1,2} in canonical order.
    CHECK(d2.at(0, 0) == 1);
    CHECK(d2.at(1, 0) == -1);
    CHECK(d2.at(2, 0) == 1);

    CHECK_THROWS_AS(boundary_matrix(solid, 5), std::out_of_range);
}

TEST_CASE("boundary of boundary vanishes on the corpus") {
    for (const auto& c : homology_corpus()) {
        if (c.dim() < 1) continue;
        for (int i = 1; i <= c.dim(); ++i)
            CHECK(all_zero(multiply(boundary_matrix(c, i - 1), boundary_matrix(c, i))));
    }
}

TEST_CASE("smith normal form basics") {
    IntMatrix id(3, 3);
    for (int i = 0; i < 3; ++i) id.at(i, i) = 1;
    auto r = smith_normal_form(id);
    CHECK(r.rank == 3);
    CHECK(r.invariant_factors == std::vector<long long>{1, 1, 1});

    auto z = smith_normal_form(IntMatrix(4, 2));
    CHECK(z.rank == 0);
    CHECK(z.invariant_factors.empty());
}

TEST_CASE("smith normal form of a scrambled diagonal") {
    // diag(2,4) hit with explicit unimodular row/column operations.
    IntMatrix m(2, 2);
    m.at(0, 0) = 2;
    m.at(1, 1) = 4;
    // r0 += 3*r1; c1 += 5*c0; swap rows.
    for (int c = 0; c < 2; ++c) m.at(0, c) += 3 * m.at(1, c);
    for (int r = 0; r < 2; ++r) m.at(r, 1) += 5 * m.at(r, 0);
    std::swap(m.at(0, 0), m.at(1, 0));
    std::swap(m.at(0, 1), m.at(1, 1));
    auto r = smith_normal_form(m);
    CHECK(r.rank == 2);
    CHECK(r.invariant_factors == std::vector<long long>{2, 4});
}

TEST_CASE("smith normal form properties on pseudo-random matrices") {
    std::uint64_t state = 12345;
    auto next = [&] {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return static_cast<long long>((state >> 33) % 19) - 9;
    };
    for (int trial = 0; trial < 40; ++trial) {
        int rows = 2 + static_cast<int>(trial % 4);
        int cols = 2 + static_cast<int>((trial / 4) % 4);
        IntMatrix m(rows, cols);
        for (auto& v : m.a) v = next();
        std::vector<std::vector<long long>> plain(static_cast<size_t>(rows),
                                                  std::vector<long long>(static_cast<size_t>(cols)));
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c) plain[static_cast<size_t>(r)][static_cast<size_t>(c)] = m.at(r, c);
        auto snf = smith_normal_form(m);
        CHECK(snf.rank == oracle::rank_rational(plain));
        for (size_t i = 1; i < snf.invariant_factors.size(); ++i)
            CHECK(snf.invariant_factors[i] % snf.invariant_factors[i - 1] == 0);
        for (long long d : snf.invariant_factors) CHECK(d >= 1);
    }
}

TEST_CASE("reduced homology of standard shapes") {
    auto hollow = reduced_homology(complex_of(3, {{0, 1}, {0, 2}, {1, 2}}));
    CHECK(hollow.at(-1).trivial());
    CHECK(hollow.at(0).trivial());
    CHECK(hollow.at(1).free_rank == 1);
    CHECK(hollow.at(1).torsion.empty());

    auto two_triangles = reduced_homology(complex_of(6, {{0, 2, 4}, {1, 3, 5}}));
    CHECK(two_triangles.at(0).free_rank == 1);
    CHECK(two_triangles.at(1).trivial());
    CHECK(two_triangles.at(2).trivial());

    auto rp2 = reduced_homology(complex_of(6, oracle::projective_plane()));
    CHECK(rp2.at(0).trivial());
    CHECK(rp2.at(1).free_rank == 0);
    CHECK(rp2.at(1).torsion == std::vector<long long>{2});
    CHECK(rp2.at(2).trivial());

    auto irr = reduced_homology(SimplicialComplex::irrelevant(1));
    CHECK(irr.at(-1).free_rank == 1);

    auto pt = reduced_homology(complex_of(1, {{0}}));
    CHECK(pt.at(-1).trivial());
    CHECK(pt.at(0).trivial());
}

TEST_CASE("cones are acyclic") {
    for (const auto& c : homology_corpus()) {
        if (c.is_void() || c.vertex_universe() + 1 > 63) continue;
        int apex = c.vertex_universe();
        auto cone = join(c, complex_of(apex + 1, {{apex}}));
        auto p = reduced_homology(cone);
        for (int i = -1; i <= p.dim; ++i) CHECK(p.at(i).trivial());
    }
}

TEST_CASE("join of point sets matches the Kunneth rank") {
    auto pts = [](int k) {
        std::vector<std::vector<int>> fs;
        for (int i = 0; i < k; ++i) fs.push_back({i});
        return complex_of(k, fs);
    };
    auto j = join(pts(3), pts(4).shifted(3));
    auto p = reduced_homology(j);
    CHECK(p.at(0).trivial());
    CHECK(p.at(1).free_rank == 6);  // (3-1)*(4-1)
    CHECK(p.at(1).torsion.empty());
}

TEST_CASE("Euler-Poincare on the corpus") {
    for (const auto& c : homology_corpus()) {
        auto p = reduced_homology(c);
        auto fv = c.f_vector();
        long long euler = 0;
        for (size_t k = 0; k < fv.size(); ++k)
            euler += ((static_cast<int>(k) % 2) == 0 ? -1 : 1) * fv[k];  // reduced: starts at f_{-1}
        long long betti_sum = 0;
        for (int i = -1; i <= p.dim; ++i)
            betti_sum += ((i % 2 == 0) ? 1 : -1) * p.betti(i, FieldSpec{0});
        CHECK(euler == betti_sum);
    }
}

TEST_CASE("betti numbers via universal coefficients") {
    auto rp2 = reduced_homology(complex_of(6, oracle::projective_plane()));
    CHECK(rp2.betti(1, FieldSpec{0}) == 0);
    CHECK(rp2.betti(1, FieldSpec{2}) == 1);
    CHECK(rp2.betti(2, FieldSpec{2}) == 1);
    CHECK(rp2.betti(1, FieldSpec{3}) == 0);

    auto hollow = reduced_homology(complex_of(3, {{0, 1}, {0, 2}, {1, 2}}));
    CHECK(hollow.betti(1, FieldSpec{3}) == 1);
    CHECK(hollow.betti(1, FieldSpec{0}) == hollow.at(1).free_rank);

    CHECK_THROWS_AS(rp2.betti(1, FieldSpec{4}), std::invalid_argument);
    CHECK_THROWS_AS(rp2.betti(1, FieldSpec{-3}), std::invalid_argument);
}

TEST_CASE("betti agrees with the field-elimination oracle") {
    for (const auto& c : homology_corpus()) {
        auto facets = facet_lists(c);
        for (int ch : {0, 2, 3, 5})
            for (int i = -1; i <= c.dim(); ++i)
                CHECK(betti_number(c, i, FieldSpec{ch}) == oracle::betti_oracle(facets, i, ch));
    }
}
