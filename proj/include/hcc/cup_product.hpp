#pragma once

// Crossed products A ⋊ B of a module algebra by a comodule algebra, the
// diagonal complex, the map Ψ into the cyclic complex of A ⋊ B, and the cup
// product Ψ ∘ AW.

#include <map>
#include <string>
#include <vector>

#include "hcc/cohomology.hpp"

namespace hcc {

struct CrossedProduct {
    ModuleAlgebra A;
    ComoduleAlgebra B; // left
    Space space;       // A ⊗ B, index a·dim B + b
    LinMap mult;
    SparseVec unit;

    std::size_t dim() const { return space.dim(); }
};

/// (a ⋊ b)(a' ⋊ b') = a (b₋₁ ▷ a') ⋊ b₀ b'
inline CrossedProduct crossed_product(const ModuleAlgebra& A, const ComoduleAlgebra& Bin)
{
    if (Bin.side != Side::left)
        throw PreconditionError("the crossed product needs a left comodule algebra");
    const ComoduleAlgebra& B = Bin;
    if (!same_hopf(A.hopf, B.hopf))
        throw PreconditionError("A and B live over different Hopf algebras");
    const std::size_t da = A.dim(), db = B.dim(), n = da * db;
    std::vector<std::string> labels;
    for (const auto& a : A.space.labels())
        for (const auto& b : B.space.labels())
            labels.push_back(a + "⋊" + b);
    Space P(labels);
    LinMap mult = build_map(Space::tensor(P, P), P, [&](Index j) {
        Index x = j / n, y = j % n;
        Index a = x / db, b = x % db, a2 = y / db, b2 = y % db;
        VecBuilder out;
        for (const auto& [u, c] : B.coaction.column(b)) {
            SparseVec left = A.product(SparseVec::unit(a), A.act(u / db, a2));
            SparseVec right = B.product(SparseVec::unit(u % db), SparseVec::unit(b2));
            out.add(kron(left, right, db), c);
        }
        return out.build();
    });
    CrossedProduct cp{A, B, P, mult, kron(A.unit, B.unit, db)};
    auto ok = detail::algebra_axioms(P, mult, cp.unit);
    if (!ok.pass)
        throw Error("crossed product is not an associative unital algebra: " + ok.condition +
                    (ok.witness ? " at " + ok.witness->element : ""));
    return cp;
}

// ---------------------------------------------------------------------------
// Diagonal complex
// ---------------------------------------------------------------------------

/// Degree n space X^n ⊗ Y^n with tensor-product operators.
inline CocyclicModule diagonal_complex(const CocyclicModule& X, const CocyclicModule& Y)
{
    if (X.max_degree != Y.max_degree)
        throw PreconditionError("diagonal complex of complexes with different max degrees");
    CocyclicModule D;
    D.name = X.name + " × " + Y.name;
    D.max_degree = X.max_degree;
    const int N = D.max_degree;
    for (int n = 0; n <= N; ++n)
        D.spaces.push_back(Space::tensor(X.spaces[n], Y.spaces[n]));
    D.cofaces.resize(N + 1);
    D.codegeneracies.resize(N);
    for (int n = 0; n <= N; ++n) {
        if (n >= 1)
            for (int i = 0; i <= n; ++i)
                D.cofaces[n].push_back(tensor_map(X.coface(n, i), Y.coface(n, i)));
        if (n < N)
            for (int i = 0; i <= n; ++i)
                D.codegeneracies[n].push_back(tensor_map(X.codegeneracy(n, i), Y.codegeneracy(n, i)));
        D.cyclic.push_back(tensor_map(X.tau(n), Y.tau(n)));
    }
    return D;
}

// ---------------------------------------------------------------------------
// Ψ
// ---------------------------------------------------------------------------

/// Everything the cup product needs, built and gated once.
struct CupSetup {
    CrossedProduct AB;
    ModuleComodule M;
    CocyclicModule X; // Hom_H(M ⊗ A^{⊗(n+1)}, k)
    CocyclicModule Y; // Hom^H(B^{⊗(n+1)}, M)
    CocyclicModule D; // diagonal
    CocyclicModule Z; // Hom((A⋊B)^{⊗(n+1)}, k), one degree higher
    int max_degree = 0;
};

/// Builds the complexes up to degree N and refuses coefficients that fail the
/// B-relative SAYD checker or do not give a well-defined module algebra complex.
inline CupSetup make_cup_setup(const ModuleAlgebra& A, const ComoduleAlgebra& B, const ModuleComodule& M, int N)
{
    if (!same_hopf(A.hopf, M.hopf))
        throw PreconditionError("coefficients live over a different Hopf algebra");
    auto bs = check_ah_sayd(B, M, N);
    if (!bs.pass)
        throw PreconditionError("coefficients fail the B-relative SAYD checker: " + bs.condition);
    auto xb = build_module_algebra_complex(A, M, N);
    if (auto r = hcc_verdict(xb); !r.pass)
        throw PreconditionError("coefficients do not give a cocyclic module on A: " + r.condition);
    auto yb = build_comodule_algebra_complex(B, M, N);
    if (auto r = hcc_verdict(yb); !r.pass)
        throw PreconditionError("coefficients do not give a cocyclic module on B: " + r.condition);
    CupSetup s{crossed_product(A, B), M, xb.complex, yb.complex, {}, {}, N};
    s.D = diagonal_complex(s.X, s.Y);
    s.Z = algebra_cyclic_complex(A.name + " ⋊ " + B.name, s.AB.space, s.AB.mult, s.AB.unit, N + 1);
    return s;
}

/// Which factor of the iterated coaction b ↦ h₁ ⊗ … ⊗ hₖ ⊗ b₀ (built by
/// coacting again on the B-leg) is called b₋₁.
enum class LegOrder {
    nearest_first, // b₋₁ = hₖ, next to b₀ (Sweedler convention)
    outermost_first,
};

/// Ψ at degree n as a map from the diagonal complex into the cyclic complex of A ⋊ B:
/// Ψ(φ⊗ψ)(a₀⋊b₀ ⊗ … ⊗ aₙ⋊bₙ) = φ(ψ(b₀₀ ⊗ … ⊗ bₙ₀) ⊗ S⁻¹(b₀₋₁ b₁₋₁ ⋯ bₙ₋₁) ▷ a₀ ⊗ … ⊗ S⁻¹(bₙ₋₍ₙ₊₁₎) ▷ aₙ).
/// aⱼ is twisted by the product of the depth-(j+1) legs of bⱼ, …, bₙ.
inline LinMap psi_map(const CupSetup& s, int n, LegOrder order = LegOrder::nearest_first)
{
    const ModuleAlgebra& A = s.AB.A;
    const ComoduleAlgebra& B = s.AB.B;
    const HopfAlgebra& h = A.hopf;
    const std::size_t da = A.dim(), db = B.dim(), dm = s.M.dim(), dh = h.dim();
    const std::size_t dab = da * db;
    const std::size_t Da = ipow(da, n + 1), T = ipow(dab, n + 1);
    const LinMap& sinv = h.s_inv();

    // Iterated coaction of depth k, in H^{⊗k} ⊗ B.
    std::vector<LinMap> iter{LinMap::identity(B.space)};
    for (int k = 1; k <= n + 1; ++k)
        iter.push_back(compose(tensor_map(LinMap::identity(Space::power(h.space, k - 1)), B.coaction), iter.back())
                           .relabeled(B.space, Space::tensor(Space::power(h.space, k), B.space)));

    // Ψ is bilinear; for each target tuple list the terms (b̃₀, ã, c) with
    // Ψ(φ⊗ψ)(t) = Σ c · Σ_m ψ(b̃₀)_m φ(m ⊗ ã).
    struct Term {
        Index tb, ta;
        Scalar c;
    };
    struct Partial {
        std::vector<SparseVec> legs; // twist of each a-slot
        std::vector<Index> b0;
        Scalar c;
    };
    std::vector<std::vector<Term>> terms(T);
    for (Index t = 0; t < T; ++t) {
        auto pairs = tuple_digits(t, dab, n + 1);
        std::vector<Partial> parts{{std::vector<SparseVec>(n + 1, h.unit), {}, Scalar(1)}};
        for (int i = 0; i <= n; ++i) {
            std::vector<Partial> next;
            for (const auto& p : parts)
                for (const auto& [u, c] : iter[i + 1].column(pairs[i] % db)) {
                    auto legs = tuple_digits(u / db, dh, i + 1);
                    Partial q = p;
                    for (int k = 1; k <= i + 1; ++k) {
                        Index leg = order == LegOrder::nearest_first ? legs[i + 1 - k] : legs[k - 1];
                        q.legs[k - 1] = h.product(q.legs[k - 1], SparseVec::unit(leg));
                    }
                    q.b0.push_back(u % db);
                    q.c = p.c * c;
                    next.push_back(std::move(q));
                }
            parts = std::move(next);
        }
        std::map<std::pair<Index, Index>, Scalar> acc;
        for (const auto& p : parts) {
            SparseVec at = SparseVec::unit(0);
            for (int j = 0; j <= n; ++j) {
                VecBuilder aj;
                for (const auto& [y, c] : sinv.apply(p.legs[j]))
                    aj.add(A.act(y, pairs[j] / db), c);
                at = kron(at, aj.build(), da);
            }
            Index tb = tuple_index(p.b0, db);
            for (const auto& [ta, c] : at)
                acc[{tb, ta}] = acc[{tb, ta}] + p.c * c;
        }
        for (const auto& [key, c] : acc)
            if (!c.is_zero())
                terms[t].push_back({key.first, key.second, c});
    }

    const Subspace& xs = s.X.cochains[n];
    const Subspace& ys = s.Y.cochains[n];
    const std::size_t dy = ys.dim();
    return build_map(s.D.spaces[n], s.Z.spaces[n], [&](Index j) {
        const SparseVec& phi = xs.basis[j / dy];
        const SparseVec& psi = ys.basis[j % dy];
        VecBuilder out;
        for (Index t = 0; t < T; ++t) {
            Scalar v;
            for (const auto& term : terms[t])
                for (Index m = 0; m < dm; ++m) {
                    Scalar y = psi.at(term.tb * dm + m);
                    if (y.is_zero())
                        continue;
                    v = v + term.c * y * phi.at(m * Da + term.ta);
                }
            out.add(t, v);
        }
        return s.Z.coordinates(n, out.build());
    });
}

/// Ψ(φ ⊗ ψ) for cochains given in coordinates of their complexes at degree n.
inline SparseVec psi(const CupSetup& s, int n, const SparseVec& phi, const SparseVec& psi_c)
{
    return psi_map(s, n).apply(kron(phi, psi_c, s.Y.dim(n)));
}

/// Ψ ∘ (δ×d)ᵢ = δᵢ ∘ Ψ, likewise for σᵢ and τ, at degrees ≤ n_max.
inline CheckResult check_psi_cocyclic(const CupSetup& s, int n_max, LegOrder order = LegOrder::nearest_first)
{
    std::vector<LinMap> P;
    for (int n = 0; n <= n_max; ++n)
        P.push_back(psi_map(s, n, order));
    auto str = [](int i) { return std::to_string(i); };
    CheckResult ok = CheckResult::ok("Ψ is a cocyclic map");
    for (int n = 0; n <= n_max; ++n) {
        if (auto r = compare_maps("Ψτ = τΨ", compose(P[n], s.D.tau(n)), compose(s.Z.tau(n), P[n]), n); !r.pass)
            return r;
        if (n >= 1)
            for (int i = 0; i <= n; ++i)
                if (auto r = compare_maps("Ψδ" + str(i) + " = δ" + str(i) + "Ψ", compose(P[n], s.D.coface(n, i)),
                                          compose(s.Z.coface(n, i), P[n - 1]), n);
                    !r.pass)
                    return r;
        if (n < n_max)
            for (int i = 0; i <= n; ++i)
                if (auto r = compare_maps("Ψσ" + str(i) + " = σ" + str(i) + "Ψ",
                                          compose(P[n], s.D.codegeneracy(n, i)),
                                          compose(s.Z.codegeneracy(n, i), P[n + 1]), n);
                    !r.pass)
                    return r;
        ok.notes.push_back("degree " + str(n) + ": Ψ intertwines every operator");
    }
    return ok;
}

// ---------------------------------------------------------------------------
// Alexander–Whitney and the cup product
// ---------------------------------------------------------------------------

/// AW(φ ⊗ ψ) = δ_last^q φ ⊗ δ₀^p ψ in the diagonal complex at degree p+q.
inline SparseVec aw_map(const CupSetup& s, int p, const SparseVec& phi, int q, const SparseVec& psi_c)
{
    if (p + q > s.max_degree)
        throw PreconditionError("AW lands in degree " + std::to_string(p + q) + " above the complexes' max degree " +
                                std::to_string(s.max_degree));
    SparseVec x = phi;
    for (int n = p + 1; n <= p + q; ++n)
        x = s.X.coface(n, n).apply(x);
    SparseVec y = psi_c;
    for (int n = q + 1; n <= p + q; ++n)
        y = s.Y.coface(n, 0).apply(y);
    return kron(x, y, s.Y.dim(p + q));
}

/// Names the first way x fails to be a λ-cocycle of X at degree n, or "".
inline std::string lambda_cocycle_defect(const CocyclicModule& X, int n, const SparseVec& x)
{
    if (cyclic_lambda(X, n).apply(x) != x)
        return "not invariant under λ = (−1)^n τ";
    if (n + 1 > X.max_degree)
        return "b-closedness needs the complex up to degree " + std::to_string(n + 1);
    if (!hochschild_b(X, n).apply(x).is_zero())
        return "not b-closed";
    return "";
}

struct CupResult {
    int degree = 0;
    SparseVec cochain; // in Hom((A⋊B)^{⊗(p+q+1)}, k)
    CheckResult b_closed;
    CheckResult lambda_invariant; // reported, not required
};

inline CupResult cup(const CupSetup& s, int p, const SparseVec& phi, int q, const SparseVec& psi_c)
{
    if (auto d = lambda_cocycle_defect(s.X, p, phi); !d.empty())
        throw PreconditionError("φ is not a λ-cocycle: " + d);
    if (auto d = lambda_cocycle_defect(s.Y, q, psi_c); !d.empty())
        throw PreconditionError("ψ is not a λ-cocycle: " + d);
    const int n = p + q;
    CupResult r;
    r.degree = n;
    r.cochain = psi_map(s, n).apply(aw_map(s, p, phi, q, psi_c));
    SparseVec bc = hochschild_b(s.Z, n).apply(r.cochain);
    r.b_closed = bc.is_zero() ? CheckResult::ok("cup product is b-closed")
                              : CheckResult::mismatch("cup product is b-closed", "Ψ(AW(φ⊗ψ))", bc, SparseVec(),
                                                      s.Z.spaces[n + 1], n);
    SparseVec lc = cyclic_lambda(s.Z, n).apply(r.cochain);
    r.lambda_invariant = lc == r.cochain ? CheckResult::ok("cup product is λ-invariant")
                                         : CheckResult::mismatch("cup product is λ-invariant", "Ψ(AW(φ⊗ψ))", lc,
                                                                 r.cochain, s.Z.spaces[n], n);
    return r;
}

} // namespace hcc
