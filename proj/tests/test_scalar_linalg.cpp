#include <gtest/gtest.h>

#include <climits>
#include <random>

#include "hcc/error.hpp"
#include "hcc/linalg.hpp"
#include "oracle.hpp"

using namespace hcc;

TEST(Scalar, FractionsNormalize)
{
    EXPECT_EQ(Scalar::fraction(3, 6), Scalar::fraction(1, 2));
    EXPECT_EQ(Scalar::fraction(-2, -4).str(), "1/2");
    EXPECT_EQ(Scalar::fraction(2, -4).str(), "-1/2");
    EXPECT_EQ(Scalar::parse("6/3"), Scalar(2));
    EXPECT_EQ(Scalar::parse("-7").str(), "-7");
}

TEST(Scalar, DivisionByZeroLiteral)
{
    try {
        Scalar::parse("1/0");
        FAIL() << "1/0 parsed";
    } catch (const ScalarError& e) {
        EXPECT_NE(std::string(e.what()).find("division by zero in scalar literal"), std::string::npos);
    }
    EXPECT_THROW(Scalar(0).inverse(), ScalarError);
}

TEST(Scalar, MalformedLiterals)
{
    for (const char* s : {"", "1/", "/2", "1.5", "abc", "1/2/3", "--1"})
        EXPECT_THROW(Scalar::parse(s), ScalarError) << s;
}

TEST(Scalar, PromotesPastInt64)
{
    Scalar a(LLONG_MAX);
    Scalar sq = a * a;
    mpq_class m(std::to_string(LLONG_MAX));
    mpq_class expect = m * m;
    EXPECT_EQ(sq.to_mpq(), expect);
    EXPECT_EQ((sq / a), a);
    EXPECT_EQ(sq - sq, Scalar(0));
    EXPECT_TRUE((sq - sq).is_zero());
}

// Field axioms and agreement with mpq_class on random rationals.
TEST(Scalar, MatchesGmpOnRandomRationals)
{
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> num(-1000000007L, 1000000007L), den(1, 1000000007L);
    for (int trial = 0; trial < 500; ++trial) {
        long an = num(rng), ad = den(rng), bn = num(rng), bd = den(rng);
        Scalar a = Scalar::fraction(an, ad), b = Scalar::fraction(bn, bd);
        mpq_class qa(an, ad), qb(bn, bd);
        qa.canonicalize();
        qb.canonicalize();
        ASSERT_EQ((a + b).to_mpq(), qa + qb);
        ASSERT_EQ((a - b).to_mpq(), qa - qb);
        ASSERT_EQ((a * b).to_mpq(), qa * qb);
        if (bn != 0)
            ASSERT_EQ((a / b).to_mpq(), qa / qb);
        ASSERT_EQ(a * (b + a), a * b + a * a);
    }
}

TEST(Scalar, PrimeField)
{
    const std::uint64_t p = 7;
    for (long long v = 1; v < 7; ++v) {
        Scalar x = Scalar::modular(v, p);
        EXPECT_TRUE((x * x.inverse()).is_one()) << v;
    }
    EXPECT_TRUE(Scalar::modular(7, p).is_zero());
    EXPECT_EQ(Scalar::modular(-1, p), Scalar::modular(6, p));
    EXPECT_EQ(Scalar::fraction(1, 2).to_field(p), Scalar::modular(4, p));
    EXPECT_THROW(Scalar::fraction(1, 7).to_field(p), ScalarError);
}

TEST(Space, TensorLabelsAndSplit)
{
    Space a({"1", "g"}), b({"x", "y", "z"});
    Space t = Space::tensor(a, b);
    EXPECT_EQ(t.dim(), 6u);
    EXPECT_EQ(t.label(4), "g⊗y");
    EXPECT_EQ(t.split(4), (std::vector<Index>{1, 1}));
    EXPECT_EQ(Space::power(a, 3).dim(), 8u);
    EXPECT_EQ(tuple_index(tuple_digits(13, 3, 4), 3), 13u);
}

TEST(LinMap, ComposeMatchesDenseProduct)
{
    std::mt19937 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        auto f = oracle::random_map(rng, 5, 4);
        auto g = oracle::random_map(rng, 3, 5);
        g = g.relabeled(f.codomain(), g.codomain());
        EXPECT_EQ(oracle::dense(compose(g, f)), oracle::multiply(oracle::dense(g), oracle::dense(f)));
    }
}

// (f⊗g)[(i1,i2),(j1,j2)] = f[i1,j1]·g[i2,j2], row-major, first factor most significant.
TEST(LinMap, TensorMapEntrywise)
{
    std::mt19937 rng(5);
    auto f = oracle::random_map(rng, 3, 2, 0.6), g = oracle::random_map(rng, 2, 4, 0.6);
    auto fg = oracle::dense(tensor_map(f, g));
    auto df = oracle::dense(f), dg = oracle::dense(g);
    for (std::size_t i1 = 0; i1 < 3; ++i1)
        for (std::size_t i2 = 0; i2 < 2; ++i2)
            for (std::size_t j1 = 0; j1 < 2; ++j1)
                for (std::size_t j2 = 0; j2 < 4; ++j2)
                    ASSERT_EQ(fg[i1 * 2 + i2][j1 * 4 + j2], df[i1][j1] * dg[i2][j2]);
}

TEST(LinMap, FlipSwapsFactors)
{
    Space a = Space::numbered(2, "a"), b = Space::numbered(3, "b");
    LinMap s = flip(a, b);
    for (Index i = 0; i < 2; ++i)
        for (Index j = 0; j < 3; ++j)
            EXPECT_EQ(s.apply(SparseVec::unit(i * 3 + j)), SparseVec::unit(j * 2 + i));
    EXPECT_EQ(compose(flip(b, a), s), LinMap::identity(Space::tensor(a, b)));
}

TEST(LinMap, RankNullity)
{
    std::mt19937 rng(3);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t r = 1 + trial % 7, c = 1 + (trial * 5) % 8;
        auto f = oracle::random_map(rng, r, c, trial % 3 == 0 ? 0.2 : 0.5);
        auto k = kernel(f);
        EXPECT_EQ(rank(f) + k.dim(), c);
        EXPECT_EQ(rank(f), oracle::rank(oracle::dense(f)));
        for (const auto& v : k.basis)
            EXPECT_TRUE(f.apply(v).is_zero());
        EXPECT_EQ(rank_of(c, k.basis), k.dim());
    }
}

TEST(LinMap, MembershipAgreesWithRank)
{
    std::mt19937 rng(19);
    std::uniform_int_distribution<int> coin(0, 1);
    for (int trial = 0; trial < 50; ++trial) {
        auto f = oracle::random_map(rng, 6, 3, 0.5);
        std::vector<SparseVec> basis = f.columns();
        SparseVec v;
        if (coin(rng)) {
            VecBuilder b;
            b.add(basis[0], Scalar::fraction(2, 3));
            b.add(basis[2], Scalar(-5));
            v = b.build();
        } else {
            v = oracle::random_map(rng, 6, 1, 0.5).column(0);
        }
        auto m = membership(v, basis, 6);
        auto with = basis;
        with.push_back(v);
        bool in_span = oracle::rank_of_rows(with, 6) == oracle::rank_of_rows(basis, 6);
        EXPECT_EQ(m.member, in_span);
        if (m.member) {
            VecBuilder b;
            for (std::size_t j = 0; j < basis.size(); ++j)
                b.add(basis[j], m.coefficients[j]);
            EXPECT_EQ(b.build(), v);
        }
    }
}

TEST(LinMap, InverseOfRandomInvertible)
{
    std::mt19937 rng(23);
    int done = 0;
    for (int trial = 0; trial < 40 && done < 10; ++trial) {
        auto f = oracle::random_map(rng, 4, 4, 0.7).relabeled(Space::numbered(4, "e"), Space::numbered(4, "e"));
        if (rank(f) < 4) {
            EXPECT_THROW(inverse(f), Error);
            continue;
        }
        ++done;
        EXPECT_EQ(compose(inverse(f), f), LinMap::identity(f.domain()));
    }
    EXPECT_EQ(done, 10);
}

TEST(Subspace, CoordinatesRoundTrip)
{
    std::mt19937 rng(29);
    auto f = oracle::random_map(rng, 3, 6, 0.5);
    auto k = kernel(f);
    ASSERT_GT(k.dim(), 0u);
    SparseVec coords = SparseVec::from_entries({{0, Scalar(3)}, {k.dim() - 1, Scalar::fraction(-1, 2)}});
    SparseVec v = k.embed(coords);
    EXPECT_EQ(k.coordinate_vector(v), coords);
    EXPECT_FALSE(k.coordinates(SparseVec::unit(k.coordinate_index[0]) + SparseVec::unit(99)).has_value());
}
