#include "serre/homology.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <stdexcept>
#include <unordered_map>

namespace serre {

bool is_prime(long long p) {
    if (p < 2) return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

void validate_field(const FieldSpec& k) {
    if (k.characteristic != 0 && !is_prime(k.characteristic))
        throw std::invalid_argument("field characteristic must be 0 or prime");
}

long long HomologyProfile::betti(int i, const FieldSpec& k) const {
    validate_field(k);
    if (i < -1 || i > dim) return 0;
    long long b = at(i).free_rank;
    if (k.characteristic != 0) {
        long long p = k.characteristic;
        for (long long t : at(i).torsion)
            if (t % p == 0) ++b;
        if (i - 1 >= -1)
            for (long long t : at(i - 1).torsion)
                if (t % p == 0) ++b;
    }
    return b;
}

namespace {

struct Overflow {};

inline long long cadd(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r)) throw Overflow{};
    return r;
}
inline long long csub(long long a, long long b) {
    long long r;
    if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
    return r;
}
inline long long cmul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
    return r;
}

template <class Z>
struct Ops;

template <>
struct Ops<long long> {
    static long long from(long long v) { return v; }
    static long long add(long long a, long long b) { return cadd(a, b); }
    static long long sub(long long a, long long b) { return csub(a, b); }
    static long long mul(long long a, long long b) { return cmul(a, b); }
    static long long quot(long long a, long long b) { return a / b; }
    static bool zero(long long a) { return a == 0; }
    static bool abs_less(long long a, long long b) {
        unsigned long long ua = a < 0 ? -static_cast<unsigned long long>(a) : static_cast<unsigned long long>(a);
        unsigned long long ub = b < 0 ? -static_cast<unsigned long long>(b) : static_cast<unsigned long long>(b);
        return ua < ub;
    }
    static long long to_ll(long long a) { return a; }
};

template <>
struct Ops<mpz_class> {
    static mpz_class from(long long v) { return mpz_class(static_cast<long>(v)); }
    static mpz_class add(const mpz_class& a, const mpz_class& b) { return a + b; }
    static mpz_class sub(const mpz_class& a, const mpz_class& b) { return a - b; }
    static mpz_class mul(const mpz_class& a, const mpz_class& b) { return a * b; }
    static mpz_class quot(const mpz_class& a, const mpz_class& b) {
        mpz_class q;
        mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        return q;
    }
    static bool zero(const mpz_class& a) { return sgn(a) == 0; }
    static bool abs_less(const mpz_class& a, const mpz_class& b) {
        return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()) < 0;
    }
    static long long to_ll(const mpz_class& a) {
        if (!a.fits_slong_p()) throw std::overflow_error("invariant factor exceeds int64");
        return a.get_si();
    }
};

template <class Z>
SnfResult snf_impl(const IntMatrix& in) {
    using O = Ops<Z>;
    int rows = in.rows, cols = in.cols;
    std::vector<Z> m(static_cast<size_t>(rows) * static_cast<size_t>(cols));
    for (size_t i = 0; i < m.size(); ++i) m[i] = O::from(in.a[i]);
    auto at = [&](int r, int c) -> Z& {
        return m[static_cast<size_t>(r) * static_cast<size_t>(cols) + static_cast<size_t>(c)];
    };

    SnfResult out;
    int t = 0;
    while (t < rows && t < cols) {
        // Smallest-magnitude nonzero pivot in the trailing submatrix.
        int pr = -1, pc = -1;
        for (int r = t; r < rows; ++r)
            for (int c = t; c < cols; ++c)
                if (!O::zero(at(r, c)) && (pr < 0 || O::abs_less(at(r, c), at(pr, pc)))) {
                    pr = r;
                    pc = c;
                }
        if (pr < 0) break;
        if (pr != t)
            for (int c = t; c < cols; ++c) std::swap(at(pr, c), at(t, c));
        if (pc != t)
            for (int r = t; r < rows; ++r) std::swap(at(r, pc), at(r, t));

        bool clean = false;
        while (!clean) {
            clean = true;
            for (int r = t + 1; r < rows; ++r) {
                if (O::zero(at(r, t))) continue;
                Z q = O::quot(at(r, t), at(t, t));
                if (!O::zero(q))
                    for (int c = t; c < cols; ++c)
                        at(r, c) = O::sub(at(r, c), O::mul(q, at(t, c)));
                if (!O::zero(at(r, t))) {
                    // Remainder smaller than the pivot; promote it.
                    for (int c = t; c < cols; ++c) std::swap(at(r, c), at(t, c));
                    clean = false;
                }
            }
            if (!clean) continue;
            for (int c = t + 1; c < cols; ++c) {
                if (O::zero(at(t, c))) continue;
                Z q = O::quot(at(t, c), at(t, t));
                if (!O::zero(q))
                    for (int r = t; r < rows; ++r)
                        at(r, c) = O::sub(at(r, c), O::mul(q, at(r, t)));
                if (!O::zero(at(t, c))) {
                    for (int r = t; r < rows; ++r) std::swap(at(r, c), at(r, t));
                    clean = false;
                }
            }
            if (!clean) continue;
            // Force the divisibility chain: absorb any entry the pivot does
            // not divide and re-reduce.
            for (int r = t + 1; r < rows && clean; ++r)
                for (int c = t + 1; c < cols && clean; ++c) {
                    Z q = O::quot(at(r, c), at(t, t));
                    if (!O::zero(O::sub(at(r, c), O::mul(q, at(t, t))))) {
                        for (int cc = t; cc < cols; ++cc)
                            at(t, cc) = O::add(at(t, cc), at(r, cc));
                        clean = false;
                    }
                }
        }
        ++t;
    }

    out.rank = t;
    out.invariant_factors.reserve(static_cast<size_t>(t));
    for (int i = 0; i < t; ++i) {
        long long d = O::to_ll(at(i, i));
        out.invariant_factors.push_back(d < 0 ? -d : d);
    }
    return out;
}

}  // namespace

SnfResult smith_normal_form(IntMatrix m) {
    try {
        return snf_impl<long long>(m);
    } catch (const Overflow&) {
        return snf_impl<mpz_class>(m);
    }
}

// --- chain complex bookkeeping ---

struct HomologyScan::Impl {
    int n_vertices = 0;
    int top = -2;                                   // dim of the complex; -2 when void
    std::vector<std::vector<Face>> faces_by_size;   // index k = face cardinality
    std::vector<SnfResult> snf_boundary;            // index i: SNF of ∂_i, i in [0, top]
    std::vector<bool> snf_done;
    std::vector<HomologyGroup> groups;              // index i+1
    std::vector<bool> group_done;

    void init(std::vector<Face> facets) {
        if (facets.empty()) {
            top = -2;
            return;
        }
        int max_k = 0;
        for (Face f : facets) max_k = std::max(max_k, face_size(f));
        top = max_k - 1;
        faces_by_size.assign(static_cast<size_t>(max_k) + 1, {});
        for (Face f : facets) faces_by_size[static_cast<size_t>(face_size(f))].push_back(f);
        for (int k = max_k; k >= 1; --k) {
            auto& level = faces_by_size[static_cast<size_t>(k)];
            std::sort(level.begin(), level.end());
            level.erase(std::unique(level.begin(), level.end()), level.end());
            auto& below = faces_by_size[static_cast<size_t>(k) - 1];
            for (Face f : level) {
                Face m = f;
                while (m) {
                    Face bit = m & (~m + 1);
                    below.push_back(f & ~bit);
                    m &= m - 1;
                }
            }
        }
        faces_by_size[0] = {0};
        for (auto& level : faces_by_size)
            std::sort(level.begin(), level.end(), face_lex_less);
        snf_boundary.assign(static_cast<size_t>(top) + 1, {});
        snf_done.assign(static_cast<size_t>(top) + 1, false);
        groups.assign(static_cast<size_t>(top) + 2, {});
        group_done.assign(static_cast<size_t>(top) + 2, false);
    }

    long long count(int i) const {
        if (i == -1) return 1;
        if (i < -1 || i > top) return 0;
        return static_cast<long long>(faces_by_size[static_cast<size_t>(i) + 1].size());
    }

    IntMatrix boundary(int i) const {
        // ∂_i : C_i -> C_{i-1}; columns are the i-faces.
        const auto& colsf = faces_by_size[static_cast<size_t>(i) + 1];
        if (i == 0) {
            IntMatrix m(1, static_cast<int>(colsf.size()));
            for (int c = 0; c < m.cols; ++c) m.at(0, c) = 1;
            return m;
        }
        const auto& rowsf = faces_by_size[static_cast<size_t>(i)];
        std::unordered_map<Face, int> row_index;
        row_index.reserve(rowsf.size() * 2);
        for (size_t r = 0; r < rowsf.size(); ++r) row_index[rowsf[r]] = static_cast<int>(r);
        IntMatrix m(static_cast<int>(rowsf.size()), static_cast<int>(colsf.size()));
        for (size_t c = 0; c < colsf.size(); ++c) {
            Face f = colsf[c];
            Face rest = f;
            int sign = 1;
            while (rest) {
                Face bit = rest & (~rest + 1);
                m.at(row_index.at(f & ~bit), static_cast<int>(c)) = sign;
                sign = -sign;
                rest &= rest - 1;
            }
        }
        return m;
    }

    const SnfResult& snf(int i) {
        auto idx = static_cast<size_t>(i);
        if (!snf_done[idx]) {
            snf_boundary[idx] = smith_normal_form(boundary(i));
            snf_done[idx] = true;
        }
        return snf_boundary[idx];
    }

    const HomologyGroup& group(int i) {
        if (i < -1 || i > top) throw std::out_of_range("homology dimension out of range");
        auto idx = static_cast<size_t>(i + 1);
        if (!group_done[idx]) {
            long long rank_i = (i >= 0) ? snf(i).rank : 0;
            long long rank_up = (i + 1 <= top) ? snf(i + 1).rank : 0;
            HomologyGroup g;
            g.free_rank = count(i) - rank_i - rank_up;
            if (i + 1 <= top)
                for (long long d : snf(i + 1).invariant_factors)
                    if (d > 1) g.torsion.push_back(d);
            groups[idx] = std::move(g);
            group_done[idx] = true;
        }
        return groups[idx];
    }
};

HomologyScan::HomologyScan(const SimplicialComplex& c)
    : HomologyScan(c.facets(), c.vertex_universe()) {}

HomologyScan::HomologyScan(std::vector<Face> facet_masks, int n_vertices)
    : impl_(std::make_unique<Impl>()) {
    impl_->n_vertices = n_vertices;
    impl_->init(std::move(facet_masks));
    if (impl_->top == -2) throw std::domain_error("homology of the void complex is undefined");
}

HomologyScan::~HomologyScan() = default;
HomologyScan::HomologyScan(HomologyScan&&) noexcept = default;
HomologyScan& HomologyScan::operator=(HomologyScan&&) noexcept = default;

int HomologyScan::dim() const { return impl_->top; }
long long HomologyScan::face_count(int i) const { return impl_->count(i); }
const HomologyGroup& HomologyScan::group(int i) { return impl_->group(i); }

IntMatrix boundary_matrix(const SimplicialComplex& c, int i) {
    if (c.is_void()) throw std::domain_error("boundary matrix of the void complex");
    if (i < -1 || i > c.dim()) throw std::out_of_range("boundary dimension out of range");
    if (i == -1) return IntMatrix(0, 1);  // C_{-1} -> 0
    HomologyScan::Impl impl;
    impl.init(c.facets());
    return impl.boundary(i);
}

HomologyProfile reduced_homology(const SimplicialComplex& c) {
    HomologyScan scan(c);
    HomologyProfile p;
    p.dim = scan.dim();
    for (int i = -1; i <= p.dim; ++i) p.groups.push_back(scan.group(i));
    return p;
}

long long betti_number(const SimplicialComplex& c, int i, const FieldSpec& k) {
    validate_field(k);
    HomologyScan scan(c);
    if (i < -1 || i > scan.dim()) return 0;
    long long b = scan.group(i).free_rank;
    if (k.characteristic != 0) {
        long long pch = k.characteristic;
        for (long long t : scan.group(i).torsion)
            if (t % pch == 0) ++b;
        if (i - 1 >= -1)
            for (long long t : scan.group(i - 1).torsion)
                if (t % pch == 0) ++b;
    }
    return b;
}

}  // namespace serre
