#include <gtest/gtest.h>

#include "hcc/corpus.hpp"
#include "oracle.hpp"

using namespace hcc;

namespace {

std::size_t trace_dim(const Space& s, const LinMap& mult)
{
    const std::size_t d = s.dim();
    std::vector<SparseVec> comm;
    for (Index a = 0; a < d; ++a)
        for (Index b = 0; b < d; ++b)
            comm.push_back(mult.column(a * d + b) - mult.column(b * d + a));
    return d - oracle::rank_of_rows(comm, d);
}

SparseVec product(const CrossedProduct& P, const SparseVec& x, const SparseVec& y)
{
    return P.mult.apply(kron(x, y, P.dim()));
}

corpus::CupInstance group_pair()
{
    auto s3 = group_algebra(symmetric_group(3)), z3 = group_algebra(cyclic_group(3));
    return corpus::trivial_cup_instance("k[S3]", s3.space, s3.mult, s3.unit, "k[Z/3]", z3.space, z3.mult, z3.unit, 1);
}

} // namespace

TEST(CrossedProduct, AssociativeAndUnital)
{
    auto insts = corpus::cup_instances();
    insts.push_back(group_pair());
    for (const auto& inst : insts) {
        auto P = crossed_product(inst.A, as_left(inst.B));
        ASSERT_EQ(P.dim(), inst.A.dim() * inst.B.dim());
        for (Index i = 0; i < P.dim(); ++i) {
            SparseVec x = SparseVec::unit(i);
            EXPECT_EQ(product(P, P.unit, x), x);
            EXPECT_EQ(product(P, x, P.unit), x);
            for (Index j = 0; j < P.dim(); ++j)
                for (Index k = 0; k < P.dim(); ++k) {
                    SparseVec y = SparseVec::unit(j), z = SparseVec::unit(k);
                    ASSERT_EQ(product(P, product(P, x, y), z), product(P, x, product(P, y, z))) << inst.name;
                }
        }
    }
}

// (a⋊1)(1⋊b) = a⋊b and (1⋊b)(a⋊1) = (b₋₁▷a)⋊b₀.
TEST(CrossedProduct, MixedProducts)
{
    auto A = inversion_module_algebra(3);
    auto B = regular_comodule_algebra(A.hopf);
    auto P = crossed_product(A, B);
    const std::size_t db = B.dim();
    for (Index a = 0; a < A.dim(); ++a)
        for (Index b = 0; b < db; ++b) {
            EXPECT_EQ(product(P, SparseVec::unit(a * db), SparseVec::unit(b)), SparseVec::unit(a * db + b));
            // b is group-like, so Δ(b) = b ⊗ b
            SparseVec act = A.act(b, a);
            VecBuilder want;
            for (const auto& [i, c] : act)
                want.add(i * db + b, c);
            EXPECT_EQ(product(P, SparseVec::unit(b), SparseVec::unit(a * db)), want.build());
        }
}

// k[Z/3] ⋊ Z/2 by inversion is k[S3]: three conjugacy classes.
TEST(CrossedProduct, InversionGivesS3)
{
    auto A = inversion_module_algebra(3);
    auto P = crossed_product(A, regular_comodule_algebra(A.hopf));
    EXPECT_EQ(P.dim(), 6u);
    EXPECT_EQ(trace_dim(P.space, P.mult), 3u);
}

TEST(CrossedProduct, Preconditions)
{
    auto A = inversion_module_algebra(3);
    EXPECT_THROW(crossed_product(A, regular_comodule_algebra(sweedler_h4())), PreconditionError);
}

// Over H = k, the cup of two traces is φ ⊗ ψ on A ⊗ B.
TEST(Cup, TracesOverTrivialHopf)
{
    auto inst = group_pair();
    auto s = make_cup_setup(inst.A, inst.B, inst.M, 1);
    auto phis = corpus::lambda_cocycles(s.X, 0), psis = corpus::lambda_cocycles(s.Y, 0);
    EXPECT_EQ(phis.size(), 3u);
    EXPECT_EQ(psis.size(), 3u);
    const std::size_t db = inst.B.dim();
    for (const auto& x : phis)
        for (const auto& y : psis) {
            SparseVec phi = s.X.embed(0, x), psi = s.Y.embed(0, y);
            auto c = cup(s, 0, x, 0, y);
            EXPECT_TRUE(c.b_closed.pass);
            SparseVec got = s.Z.embed(0, c.cochain);
            for (Index a = 0; a < inst.A.dim(); ++a)
                for (Index b = 0; b < db; ++b)
                    ASSERT_EQ(got.at(a * db + b), phi.at(a) * psi.at(b));
        }
}

// In degree 0 the cup of λ-cocycles vanishes on commutators of A ⋊ B.
TEST(Cup, DegreeZeroIsATrace)
{
    std::size_t count = 0;
    for (const auto& inst : corpus::cup_instances()) {
        auto s = make_cup_setup(inst.A, inst.B, inst.M, 1);
        const auto& P = s.AB;
        for (const auto& x : corpus::lambda_cocycles(s.X, 0))
            for (const auto& y : corpus::lambda_cocycles(s.Y, 0)) {
                SparseVec f = s.Z.embed(0, cup(s, 0, x, 0, y).cochain);
                ++count;
                for (Index i = 0; i < P.dim(); ++i)
                    for (Index j = 0; j < P.dim(); ++j) {
                        SparseVec comm =
                            product(P, SparseVec::unit(i), SparseVec::unit(j)) - product(P, SparseVec::unit(j), SparseVec::unit(i));
                        ASSERT_TRUE(f.dot(comm).is_zero()) << inst.name;
                    }
            }
    }
    EXPECT_GT(count, 0u);
}

TEST(Psi, IntertwinesOnSweedlerInstance)
{
    auto inst = corpus::cup_instances().back();
    auto s = make_cup_setup(inst.A, inst.B, inst.M, 2);
    auto r = check_psi_cocyclic(s, 2);
    EXPECT_TRUE(r.pass) << r;
    // The other leg numbering is not a cochain map here.
    EXPECT_FALSE(check_psi_cocyclic(s, 2, LegOrder::outermost_first).pass);
}

TEST(Psi, IntertwinesOverTrivialHopf)
{
    auto inst = group_pair();
    auto s = make_cup_setup(inst.A, inst.B, inst.M, 1);
    EXPECT_TRUE(check_psi_cocyclic(s, 1).pass);
}

TEST(Cup, RefusesNonCocycles)
{
    auto inst = corpus::cup_instances().front();
    auto s = make_cup_setup(inst.A, inst.B, inst.M, 2);
    auto y = corpus::lambda_cocycles(s.Y, 0).front();
    bool tried = false;
    for (Index j = 0; j < s.X.dim(1) && !tried; ++j) {
        SparseVec x = SparseVec::unit(j);
        if (lambda_cocycle_defect(s.X, 1, x).empty())
            continue;
        tried = true;
        EXPECT_THROW(cup(s, 1, x, 0, y), PreconditionError);
    }
    EXPECT_TRUE(tried);
    // Top-degree inputs cannot be checked for b-closedness.
    EXPECT_THROW(corpus::lambda_cocycles(s.X, 2), PreconditionError);
}

TEST(Cup, RefusesNonSaydCoefficients)
{
    auto A = sweedler_dual_numbers();
    EXPECT_THROW(make_cup_setup(A, regular_comodule_algebra(A.hopf), trivial_coefficients(A.hopf), 1), PreconditionError);
}

TEST(Cup, HigherDegreeIsBClosed)
{
    auto inst = corpus::cup_instances()[1];
    auto s = make_cup_setup(inst.A, inst.B, inst.M, 2);
    std::size_t count = 0;
    for (const auto& x : corpus::lambda_cocycles(s.X, 1))
        for (const auto& y : corpus::lambda_cocycles(s.Y, 0)) {
            auto c = cup(s, 1, x, 0, y);
            EXPECT_EQ(c.degree, 1);
            EXPECT_TRUE(c.b_closed.pass) << c.b_closed;
            ++count;
        }
    for (const auto& x : corpus::lambda_cocycles(s.X, 0))
        for (const auto& y : corpus::lambda_cocycles(s.Y, 1)) {
            EXPECT_TRUE(cup(s, 0, x, 1, y).b_closed.pass);
            ++count;
        }
    RecordProperty("cups", static_cast<int>(count));
}

TEST(AlexanderWhitney, DegreeBound)
{
    auto inst = corpus::cup_instances().front();
    auto s = make_cup_setup(inst.A, inst.B, inst.M, 1);
    SparseVec x = SparseVec::unit(0), y = SparseVec::unit(0);
    EXPECT_THROW(aw_map(s, 1, x, 1, y), PreconditionError);
    EXPECT_EQ(aw_map(s, 0, x, 0, y), kron(x, y, s.Y.dim(0)));
}
