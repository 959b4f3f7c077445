#include <gtest/gtest.h>

#include "hcc/cocyclic.hpp"
#include "hcc/cohomology.hpp"
#include "hcc/zoo.hpp"
#include "oracle.hpp"

using namespace hcc;

namespace {

HopfAlgebra z2() { return group_algebra(cyclic_group(2)); }

ModuleComodule g_eps(const HopfAlgebra& h4)
{
    return sigma_delta_coefficients(h4, counit_character(h4), grouplike(h4, basis_vector(h4.space, "g")));
}

CocyclicModule s3_algebra_complex(int N)
{
    auto h = group_algebra(symmetric_group(3));
    return algebra_cyclic_complex("k[S3]", h.space, h.mult, h.unit, N);
}

// Cochain of Hom(A^{⊗(n+1)}, k) as a function of a basis tuple.
using Fn = std::function<Scalar(const std::vector<Index>&)>;

SparseVec tabulate(std::size_t d, int n, const Fn& f)
{
    std::vector<SparseVec::Entry> e;
    for (Index t = 0; t < ipow(d, n + 1); ++t)
        e.emplace_back(t, f(tuple_digits(t, d, n + 1)));
    return SparseVec::from_entries(std::move(e));
}

// φ evaluated on a ⊗ (linear combination in one slot).
Scalar eval(const SparseVec& phi, std::size_t d, std::vector<Index> t, std::size_t slot, const SparseVec& v)
{
    Scalar s = 0;
    for (const auto& [i, c] : v) {
        t[slot] = i;
        s += c * phi.at(tuple_index(t, d));
    }
    return s;
}

} // namespace

// Faces, degeneracies and τ of the bare algebra complex against their
// textbook formulas, on the noncommutative k[S3].
TEST(AlgebraComplex, OperatorsMatchFormulas)
{
    auto h = group_algebra(symmetric_group(3));
    const std::size_t d = h.dim();
    auto X = s3_algebra_complex(2);
    std::mt19937 rng(1);
    std::uniform_int_distribution<int> val(-3, 3);
    for (int n = 0; n < 2; ++n) {
        // a random φ ∈ C^n in ambient form
        std::vector<SparseVec::Entry> e;
        for (Index t = 0; t < ipow(d, n + 1); ++t)
            e.emplace_back(t, Scalar(val(rng)));
        SparseVec phi = SparseVec::from_entries(std::move(e));
        SparseVec x = X.coordinates(n, phi);
        for (int i = 0; i <= n + 1; ++i) {
            SparseVec got = X.embed(n + 1, X.coface(n + 1, i).apply(x));
            SparseVec want = tabulate(d, n + 1, [&](const std::vector<Index>& a) {
                std::vector<Index> t;
                if (i <= n) {
                    for (int j = 0; j < i; ++j)
                        t.push_back(a[j]);
                    t.push_back(0);
                    for (int j = i + 2; j <= n + 1; ++j)
                        t.push_back(a[j]);
                    return eval(phi, d, t, i, h.basis_product(a[i], a[i + 1]));
                }
                // δ_{n+1} φ(a₀, …, a_{n+1}) = φ(a_{n+1}a₀, a₁, …, a_n)
                t.push_back(0);
                for (int j = 1; j <= n; ++j)
                    t.push_back(a[j]);
                return eval(phi, d, t, 0, h.basis_product(a[n + 1], a[0]));
            });
            EXPECT_EQ(got, want) << "δ" << i << " into degree " << n + 1;
        }
    }
    // σ_i φ(a₀, …, a_n) = φ(a₀, …, a_i, 1, a_{i+1}, …, a_n) and τφ(a₀, …, a_n) = φ(a_n, a₀, …, a_{n−1})
    const int n = 1;
    std::vector<SparseVec::Entry> e;
    for (Index t = 0; t < ipow(d, n + 2); ++t)
        e.emplace_back(t, Scalar(val(rng)));
    SparseVec phi = SparseVec::from_entries(std::move(e));
    for (int i = 0; i <= n; ++i) {
        SparseVec got = X.embed(n, X.codegeneracy(n, i).apply(X.coordinates(n + 1, phi)));
        SparseVec want = tabulate(d, n, [&](const std::vector<Index>& a) {
            std::vector<Index> t(a.begin(), a.begin() + i + 1);
            t.push_back(0);
            t.insert(t.end(), a.begin() + i + 1, a.end());
            return phi.at(tuple_index(t, d));
        });
        EXPECT_EQ(got, want) << "σ" << i;
    }
    SparseVec psi = tabulate(d, n, [&](const std::vector<Index>& a) { return Scalar(static_cast<long long>(a[0] * 7 + a[1])); });
    SparseVec got = X.embed(n, X.tau(n).apply(X.coordinates(n, psi)));
    SparseVec want = tabulate(d, n, [&](const std::vector<Index>& a) { return psi.at(tuple_index({a[1], a[0]}, d)); });
    EXPECT_EQ(got, want);
}

TEST(AlgebraComplex, IdentitiesHold)
{
    auto X = s3_algebra_complex(3);
    auto r = verify_cocyclic_identities(X);
    EXPECT_TRUE(r.pass) << r;
    for (int n = 0; n <= 3; ++n)
        EXPECT_EQ(power(X.tau(n), n + 1), LinMap::identity(X.spaces[n]));
}

TEST(AlgebraComplex, CorruptedTauIsCaught)
{
    auto X = s3_algebra_complex(2);
    X.cyclic[1] = LinMap::identity(X.spaces[1]);
    auto r = verify_cocyclic_identities(X);
    ASSERT_FALSE(r.pass);
    EXPECT_NE(r.condition.find("τ1δ0 = δ1"), std::string::npos) << r;
    ASSERT_TRUE(r.witness.has_value());
    EXPECT_EQ(r.witness->degree, 1);
}

TEST(AlgebraComplex, CorruptedFaceIsCaught)
{
    auto X = s3_algebra_complex(2);
    X.cofaces[2][1] = X.cofaces[2][0];
    EXPECT_FALSE(verify_cocyclic_identities(X).pass);
}

// Hom^H(k[G]^{⊗(n+1)}, k) has one basis cochain per tuple with product 1.
TEST(ComoduleAlgebraComplex, GroupAlgebraDimensions)
{
    auto G = symmetric_group(3);
    auto h = group_algebra(G);
    auto b = build_comodule_algebra_complex(regular_comodule_algebra(h), trivial_coefficients(h), 2);
    ASSERT_TRUE(b.well_defined.pass);
    EXPECT_EQ(b.complex.dim(0), 1u);
    EXPECT_EQ(b.complex.dim(1), 6u);
    EXPECT_EQ(b.complex.dim(2), 36u);
}

TEST(ComoduleAlgebraComplex, SweedlerIdentities)
{
    auto h = sweedler_h4();
    auto b = build_comodule_algebra_complex(regular_comodule_algebra(h), g_eps(h), 3);
    ASSERT_TRUE(b.well_defined.pass) << b.well_defined;
    auto r = verify_cocyclic_identities(b.complex);
    EXPECT_TRUE(r.pass) << r;
}

TEST(ComoduleAlgebraComplex, RightCarrierViaCop)
{
    auto B = bicrossed_s3();
    auto F = bicrossed_F_comodule_algebra(B);
    auto hc = cop(B.hopf);
    auto b = build_comodule_algebra_complex(F, trivial_coefficients(hc), 2);
    ASSERT_TRUE(b.well_defined.pass) << b.well_defined;
    EXPECT_TRUE(verify_cocyclic_identities(b.complex).pass);
    // bicrossed-s3 is cocommutative, so H^cop = H there; the swapped one is not.
    auto S = bicrossed_s3_swapped();
    EXPECT_THROW(build_comodule_algebra_complex(bicrossed_F_comodule_algebra(S), trivial_coefficients(S.hopf), 1),
                 PreconditionError);
}

TEST(ComoduleCoalgebraComplex, SweedlerAdjointIdentities)
{
    auto h = sweedler_h4();
    auto b = build_comodule_coalgebra_complex(adjoint_comodule_coalgebra(h), g_eps(h), 3);
    ASSERT_TRUE(b.well_defined.pass) << b.well_defined;
    EXPECT_TRUE(verify_cocyclic_identities(b.complex).pass);
    for (int n = 0; n <= 3; ++n)
        EXPECT_EQ(b.complex.dim(n), cotensor_space(adjoint_comodule_coalgebra(h), g_eps(h), n).dim());
}

// Over H = k the cotensor chains are all of C^{⊗(n+1)}.
TEST(ComoduleCoalgebraComplex, TrivialHopfDimensions)
{
    auto k = trivial_hopf();
    auto C = trivial_comodule_coalgebra(k);
    auto b = build_comodule_coalgebra_complex(C, trivial_coefficients(k), 3);
    ASSERT_TRUE(b.well_defined.pass);
    for (int n = 0; n <= 3; ++n)
        EXPECT_EQ(b.complex.dim(n), 1u);
}

TEST(ComoduleCoalgebraComplex, RegularComoduleIsNotWellDefined)
{
    auto h = z2();
    auto b = build_comodule_coalgebra_complex(regular_right_comodule(h), trivial_coefficients(h), 1);
    EXPECT_FALSE(b.well_defined.pass);
    EXPECT_FALSE(hcc_verdict(b).pass);
}

TEST(ModuleAlgebraComplex, InvarianceConventionsAgree)
{
    auto h = sweedler_h4();
    auto A = adjoint_module_algebra(h);
    for (const auto& M : {g_eps(h), trivial_coefficients(h)}) {
        auto t = build_module_algebra_complex(A, M, 2, Invariance::twisted);
        auto b = build_module_algebra_complex(A, M, 2, Invariance::balanced);
        for (int n = 0; n <= 2; ++n)
            EXPECT_EQ(t.complex.dim(n), b.complex.dim(n)) << M.name << " n = " << n;
    }
}

TEST(ModuleAlgebraComplex, DualNumbersIdentities)
{
    auto A = sweedler_dual_numbers();
    auto b = build_module_algebra_complex(A, g_eps(A.hopf), 3);
    ASSERT_TRUE(b.well_defined.pass) << b.well_defined;
    EXPECT_TRUE(verify_cocyclic_identities(b.complex).pass);
}

// Invariant functionals on M ⊗ A for a group acting: those constant on orbits.
TEST(ModuleAlgebraComplex, InversionInvariantsInDegreeZero)
{
    auto A = inversion_module_algebra(3);
    auto b = build_module_algebra_complex(A, trivial_coefficients(A.hopf), 1);
    ASSERT_TRUE(b.well_defined.pass);
    // orbits of a ↦ a⁻¹ on Z/3: {1}, {a, a²}
    EXPECT_EQ(b.complex.dim(0), 2u);
    // on pairs: 9 tuples, 1 fixed, 4 swapped pairs
    EXPECT_EQ(b.complex.dim(1), 5u);
}

TEST(Verdict, CoefficientFailuresAreReported)
{
    auto h = sweedler_h4();
    auto good = check_hcc(regular_comodule_algebra(h), g_eps(h), 2);
    EXPECT_TRUE(good.pass) << good;
    EXPECT_EQ(good.notes.size(), 3u);
}
