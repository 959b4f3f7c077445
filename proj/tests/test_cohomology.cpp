#include <gtest/gtest.h>

#include "hcc/cohomology.hpp"
#include "hcc/corpus.hpp"
#include "oracle.hpp"

using namespace hcc;

namespace {

CocyclicModule trivial_complex(int N)
{
    auto k = trivial_hopf();
    return build_comodule_algebra_complex(trivial_comodule_algebra(k), trivial_coefficients(k), N).complex;
}

CocyclicModule group_complex(const FiniteGroup& G, int N, std::uint64_t p = 0)
{
    auto h = group_algebra(G);
    if (p)
        h = to_field(h, p);
    return algebra_cyclic_complex(G.name(), h.space, h.mult, h.unit, N);
}

// dim of the trace space {φ : φ(ab) = φ(ba)} = dim A − rank of the commutators.
std::size_t trace_dim(const HopfAlgebra& h)
{
    std::vector<SparseVec> comm;
    for (Index a = 0; a < h.dim(); ++a)
        for (Index b = 0; b < h.dim(); ++b)
            comm.push_back(h.basis_product(a, b) - h.basis_product(b, a));
    return h.dim() - oracle::rank_of_rows(comm, h.dim());
}

} // namespace

// With every C^n = k and every coface the identity, b_n = Σ_{i ≤ n+1} (−1)^i
// is 1 for odd n and 0 for even n; λ = (−1)^n.
TEST(Trivial, TablesFromTheFaceCount)
{
    const int N = 4;
    std::vector<std::size_t> rank_b(N);
    for (int n = 0; n < N; ++n)
        rank_b[n] = n % 2 == 1;
    std::vector<std::size_t> hh, hc;
    for (int n = 0; n < N; ++n) {
        std::size_t into = n ? rank_b[n - 1] : 0;
        hh.push_back(1 - rank_b[n] - into);
        // λ-invariant cochains exist only in even degrees, where b vanishes.
        hc.push_back(n % 2 == 0 ? 1 : 0);
    }
    auto X = trivial_complex(N);
    EXPECT_EQ(cohomology(X, Theory::hochschild).dims, hh);
    EXPECT_EQ(cohomology(X, Theory::cyclic).dims, hc);
    EXPECT_EQ(hh, (std::vector<std::size_t>{1, 0, 0, 0}));
    EXPECT_EQ(hc, (std::vector<std::size_t>{1, 0, 1, 0}));
}

// B = N σ τ (1 − λ): on odd n, 1 − λ = 2 and N sums n copies of λ = 1.
TEST(Trivial, ConnesOperatorValues)
{
    auto X = trivial_complex(5);
    for (int n = 1; n <= 5; ++n) {
        Scalar expect = n % 2 == 1 ? Scalar(2 * n) : Scalar(0);
        EXPECT_EQ(connes_B(X, n).entry(0, 0), expect) << n;
    }
}

TEST(Trivial, TableRange)
{
    auto X = trivial_complex(3);
    auto t = cohomology(X, Theory::hochschild);
    EXPECT_EQ(t.computed_up_to, 2);
    EXPECT_EQ(t.dims.size(), 3u);
    EXPECT_THROW(hochschild_b(X, 3), PreconditionError);
}

TEST(MixedComplex, RelationsOnAlgebraComplexes)
{
    for (const auto& G : {cyclic_group(2), symmetric_group(3)}) {
        auto X = group_complex(G, 3);
        auto r = check_mixed_complex(X);
        EXPECT_TRUE(r.pass) << r;
        for (int n = 0; n + 2 <= 3; ++n)
            EXPECT_TRUE(compose(hochschild_b(X, n + 1), hochschild_b(X, n)) == LinMap::zero(X.spaces[n], X.spaces[n + 2]));
        for (int n = 2; n <= 3; ++n)
            EXPECT_TRUE(compose(connes_B(X, n - 1), connes_B(X, n)) == LinMap::zero(X.spaces[n], X.spaces[n - 2]));
        for (int n = 1; n + 1 <= 3; ++n) {
            LinMap bB = compose(hochschild_b(X, n - 1), connes_B(X, n));
            LinMap Bb = compose(connes_B(X, n + 1), hochschild_b(X, n));
            EXPECT_TRUE(bB + Bb == LinMap::zero(X.spaces[n], X.spaces[n]));
        }
    }
}

TEST(MixedComplex, CorpusComplexes)
{
    std::size_t checked = 0;
    for (const auto& e : corpus::evaluations())
        if (e.mixed) {
            ++checked;
            EXPECT_TRUE(e.mixed->pass) << corpus::pair_name(e) << ": " << *e.mixed;
        }
    EXPECT_GT(checked, 0u);
}

// HH⁰ = HC⁰ = traces.
TEST(DegreeZero, TracesOfGroupAlgebras)
{
    for (const auto& G : {cyclic_group(3), symmetric_group(3)}) {
        auto h = group_algebra(G);
        auto X = group_complex(G, 1);
        EXPECT_EQ(cohomology(X, Theory::hochschild).dims.at(0), trace_dim(h)) << G.name();
        EXPECT_EQ(cohomology(X, Theory::cyclic).dims.at(0), trace_dim(h)) << G.name();
        for (const auto& z : corpus::lambda_cocycles(X, 0)) {
            SparseVec phi = X.embed(0, z);
            for (Index a = 0; a < h.dim(); ++a)
                for (Index b = 0; b < h.dim(); ++b)
                    EXPECT_EQ(phi.dot(h.basis_product(a, b)), phi.dot(h.basis_product(b, a)));
        }
    }
    // class functions on S3
    EXPECT_EQ(trace_dim(group_algebra(symmetric_group(3))), 3u);
}

// A separable algebra has no higher Hochschild cohomology with dual
// coefficients, and HC is HH⁰ in even degrees.
TEST(Separable, GroupAlgebrasOverQ)
{
    for (const auto& G : {cyclic_group(2), cyclic_group(3), symmetric_group(3)}) {
        auto X = group_complex(G, 3);
        std::size_t t = trace_dim(group_algebra(G));
        EXPECT_EQ(cohomology(X, Theory::hochschild).dims, (std::vector<std::size_t>{t, 0, 0})) << G.name();
        EXPECT_EQ(cohomology(X, Theory::cyclic).dims, (std::vector<std::size_t>{t, 0, t})) << G.name();
    }
}

// F₃[Z/3] ≅ F₃[t]/t³ with 3 | 3: every HH^n has dimension 3.
TEST(PrimeField, ModularGroupAlgebra)
{
    auto X = group_complex(cyclic_group(3), 3, 3);
    EXPECT_EQ(characteristic(X), 3u);
    EXPECT_EQ(cohomology(X, Theory::hochschild).dims, (std::vector<std::size_t>{3, 3, 3}));
    EXPECT_THROW(cohomology(X, Theory::cyclic), PreconditionError);
    // Same algebra over Q is separable.
    EXPECT_EQ(cohomology(group_complex(cyclic_group(3), 3), Theory::hochschild).dims, (std::vector<std::size_t>{3, 0, 0}));
}

TEST(Tables, RankNullityBookkeeping)
{
    auto X = group_complex(symmetric_group(3), 3);
    auto t = cohomology(X, Theory::hochschild);
    for (std::size_t n = 0; n < t.dims.size(); ++n) {
        std::size_t into = n ? t.ranks[n - 1] : 0;
        EXPECT_EQ(t.dims[n], t.cochain_dims[n] - t.ranks[n] - into);
        EXPECT_EQ(t.ranks[n], oracle::rank(oracle::dense(hochschild_b(X, static_cast<int>(n)))));
    }
}
