#pragma once

// Hochschild and cyclic cohomology of a cocyclic module at small degree.

#include <string>
#include <vector>

#include "hcc/cocyclic.hpp"

namespace hcc {

/// b = Σ_{i=0}^{n+1} (−1)^i δ_i : C^n → C^{n+1}.
inline LinMap hochschild_b(const CocyclicModule& X, int n)
{
    if (n < 0 || n + 1 > X.max_degree)
        throw PreconditionError("b from degree " + std::to_string(n) + " needs a complex up to degree " +
                                std::to_string(n + 1) + "; this one stops at " + std::to_string(X.max_degree));
    LinMap b = LinMap::zero(X.spaces[n], X.spaces[n + 1]);
    for (int i = 0; i <= n + 1; ++i)
        b = i % 2 == 0 ? b + X.coface(n + 1, i) : b - X.coface(n + 1, i);
    return b;
}

/// λ = (−1)^n τ_n.
inline LinMap cyclic_lambda(const CocyclicModule& X, int n)
{
    return n % 2 == 0 ? X.tau(n) : X.tau(n).scaled(Scalar(-1));
}

/// B = N ∘ σ_{n−1}τ_n ∘ (1 − λ) : C^n → C^{n−1}, with N = Σ_{j=0}^{n−1} λ^j on C^{n−1}.
inline LinMap connes_B(const CocyclicModule& X, int n)
{
    if (n < 1 || n > X.max_degree)
        throw PreconditionError("B is defined from degrees 1.." + std::to_string(X.max_degree) + ", not " +
                                std::to_string(n));
    const LinMap one = LinMap::identity(X.spaces[n]);
    LinMap extra = compose(X.codegeneracy(n - 1, n - 1), X.tau(n));
    LinMap lam = cyclic_lambda(X, n - 1);
    LinMap norm = LinMap::identity(X.spaces[n - 1]);
    LinMap power = norm;
    for (int j = 1; j < n; ++j) {
        power = compose(lam, power);
        norm = norm + power;
    }
    return compose(norm, compose(extra, one - cyclic_lambda(X, n)));
}

/// Field characteristic of the operator entries (0 for ℚ).
inline std::uint64_t characteristic(const CocyclicModule& X)
{
    auto scan = [](const LinMap& f) -> std::uint64_t {
        for (const auto& col : f.columns())
            for (const auto& [i, c] : col)
                if (!c.is_rational())
                    return c.modulus();
        return 0;
    };
    for (const auto& t : X.cyclic)
        if (auto p = scan(t))
            return p;
    for (const auto& faces : X.cofaces)
        for (const auto& f : faces)
            if (auto p = scan(f))
                return p;
    return 0;
}

enum class Theory { hochschild, cyclic };

inline std::string to_string(Theory t) { return t == Theory::hochschild ? "hochschild" : "cyclic"; }

struct CohomologyTable {
    Theory theory = Theory::hochschild;
    int computed_up_to = -1;         // degrees 0..computed_up_to
    std::vector<std::size_t> dims;   // dim H^n
    std::vector<std::size_t> cochain_dims; // dim C^n, or of the λ-invariant part
    std::vector<std::size_t> ranks;  // rank of b : C^n → C^{n+1} on those cochains
};

namespace detail {

inline CohomologyTable table_from(Theory th, const CocyclicModule& X, const std::vector<Subspace>& cochains)
{
    const int N = X.max_degree;
    CohomologyTable t;
    t.theory = th;
    t.computed_up_to = N - 1;
    for (int n = 0; n < N; ++n) {
        LinMap b = hochschild_b(X, n);
        std::vector<SparseVec> images;
        for (const auto& v : cochains[n].basis)
            images.push_back(b.apply(v));
        t.cochain_dims.push_back(cochains[n].dim());
        t.ranks.push_back(rank_of(X.dim(n + 1), images));
    }
    for (int n = 0; n < N; ++n) {
        std::size_t kernel = t.cochain_dims[n] - t.ranks[n];
        std::size_t image = n == 0 ? 0 : t.ranks[n - 1];
        t.dims.push_back(kernel - image);
    }
    return t;
}

} // namespace detail

/// Hochschild dims of X in degrees 0..max_degree−1.
inline CohomologyTable hochschild_dims(const CocyclicModule& X)
{
    std::vector<Subspace> all;
    for (int n = 0; n <= X.max_degree; ++n)
        all.push_back(Subspace::whole(X.dim(n)));
    return detail::table_from(Theory::hochschild, X, all);
}

/// The λ-invariant cochains {x : τ_n x = (−1)^n x}.
inline Subspace lambda_cochains(const CocyclicModule& X, int n)
{
    return kernel(cyclic_lambda(X, n) - LinMap::identity(X.spaces[n]));
}

/// Cyclic dims via Connes' λ-subcomplex in degrees 0..max_degree−1.
inline CohomologyTable cyclic_cohomology_dims(const CocyclicModule& X)
{
    if (auto p = characteristic(X))
        throw PreconditionError("cyclic cohomology through the λ-complex needs characteristic 0, not " +
                                std::to_string(p));
    std::vector<Subspace> lam;
    for (int n = 0; n <= X.max_degree; ++n)
        lam.push_back(lambda_cochains(X, n));
    return detail::table_from(Theory::cyclic, X, lam);
}

inline CohomologyTable cohomology(const CocyclicModule& X, Theory th)
{
    return th == Theory::hochschild ? hochschild_dims(X) : cyclic_cohomology_dims(X);
}

/// b² = 0, B² = 0 and bB + Bb = 0 wherever the degrees allow.
inline CheckResult check_mixed_complex(const CocyclicModule& X)
{
    const int N = X.max_degree;
    auto s = [](int i) { return std::to_string(i); };
    for (int n = 0; n + 2 <= N; ++n) {
        LinMap bb = compose(hochschild_b(X, n + 1), hochschild_b(X, n));
        if (auto r = compare_maps("b² = 0 from degree " + s(n), bb, LinMap::zero(X.spaces[n], X.spaces[n + 2]), n);
            !r.pass)
            return r;
    }
    for (int n = 2; n <= N; ++n) {
        LinMap BB = compose(connes_B(X, n - 1), connes_B(X, n));
        if (auto r = compare_maps("B² = 0 from degree " + s(n), BB, LinMap::zero(X.spaces[n], X.spaces[n - 2]), n);
            !r.pass)
            return r;
    }
    // At the top degree only bB exists, which alone need not vanish.
    for (int n = 0; n < N; ++n) {
        LinMap sum = compose(connes_B(X, n + 1), hochschild_b(X, n));
        if (n >= 1)
            sum = sum + compose(hochschild_b(X, n - 1), connes_B(X, n));
        if (auto r = compare_maps("bB + Bb = 0 on degree " + s(n), sum, LinMap::zero(X.spaces[n], X.spaces[n]), n);
            !r.pass)
            return r;
    }
    return CheckResult::ok("mixed complex identities");
}

} // namespace hcc
