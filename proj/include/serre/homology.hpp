#ifndef SERRE_HOMOLOGY_HPP
#define SERRE_HOMOLOGY_HPP

#include <memory>
#include <vector>

#include "serre/simplicial_complex.hpp"

namespace serre {

struct FieldSpec {
    int characteristic = 0;  // 0 or a prime
};

bool is_prime(long long p);
void validate_field(const FieldSpec& k);  // throws on non-prime nonzero characteristic

struct HomologyGroup {
    long long free_rank = 0;
    std::vector<long long> torsion;  // invariant factors > 1, divisibility chain

    bool trivial() const { return free_rank == 0 && torsion.empty(); }
    bool operator==(const HomologyGroup&) const = default;
};

// Reduced integral homology per dimension i = -1 .. dim.
struct HomologyProfile {
    int dim = -1;
    std::vector<HomologyGroup> groups;  // index 0 holds dimension -1

    const HomologyGroup& at(int i) const { return groups.at(static_cast<size_t>(i + 1)); }

    // Universal coefficients: betti over char 0 is the free rank; over char p
    // add the p-divisible invariant factors at i and i-1.
    long long betti(int i, const FieldSpec& k) const;
};

struct IntMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<long long> a;  // row-major

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * static_cast<size_t>(c), 0) {}
    long long& at(int r, int c) { return a[static_cast<size_t>(r) * static_cast<size_t>(cols) + static_cast<size_t>(c)]; }
    long long at(int r, int c) const { return a[static_cast<size_t>(r) * static_cast<size_t>(cols) + static_cast<size_t>(c)]; }
};

struct SnfResult {
    long long rank = 0;
    std::vector<long long> invariant_factors;  // d1 | d2 | ..., positive, length == rank
};

// Smallest-pivot elimination; int64 with overflow checks, arbitrary-precision
// retry when an intermediate value would overflow.
SnfResult smith_normal_form(IntMatrix m);

// Rows are (i-1)-faces, columns are i-faces, canonical face order, entries
// alternate sign over the sorted vertex list. The reduced convention puts the
// rank-1 chain group generated by ∅ at dimension -1, so ∂0 is a row of ones.
IntMatrix boundary_matrix(const SimplicialComplex& c, int i);

// Lazily computes the profile bottom-up so deciders can stop at the first
// nonvanishing group. Works from raw facet masks; redundant (non-maximal)
// masks are harmless since faces are deduplicated.
class HomologyScan {
public:
    explicit HomologyScan(const SimplicialComplex& c);
    HomologyScan(std::vector<Face> facet_masks, int n_vertices);
    ~HomologyScan();
    HomologyScan(HomologyScan&&) noexcept;
    HomologyScan& operator=(HomologyScan&&) noexcept;

    int dim() const;
    long long face_count(int i) const;
    const HomologyGroup& group(int i);  // i in [-1, dim]

private:
    friend IntMatrix boundary_matrix(const SimplicialComplex&, int);
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

HomologyProfile reduced_homology(const SimplicialComplex& c);  // throws on void

long long betti_number(const SimplicialComplex& c, int i, const FieldSpec& k);

}  // namespace serre

#endif
