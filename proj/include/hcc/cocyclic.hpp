#pragma once

// Cocyclic modules: the complexes of comodule algebras, comodule coalgebras
// and module algebras with coefficients, and the identity verifier.

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "hcc/symmetries.hpp"

namespace hcc {

/// Degrees 0..max_degree. cofaces[n] (n ≥ 1) holds δ_0..δ_n : C^{n-1} → C^n,
/// codegeneracies[n] (n < max_degree) holds σ_0..σ_n : C^{n+1} → C^n,
/// cyclic[n] is τ_n on C^n.
struct CocyclicModule {
    std::string name;
    int max_degree = 0;
    std::vector<Space> spaces;
    std::vector<std::vector<LinMap>> cofaces;
    std::vector<std::vector<LinMap>> codegeneracies;
    std::vector<LinMap> cyclic;

    /// Where the cochains live, when the complex was cut out of an ambient
    /// space (empty for complexes assembled from other complexes).
    std::vector<Space> ambient;
    std::vector<Subspace> cochains;

    const LinMap& coface(int n, int i) const { return cofaces.at(n).at(i); }
    const LinMap& codegeneracy(int n, int i) const { return codegeneracies.at(n).at(i); }
    const LinMap& tau(int n) const { return cyclic.at(n); }
    std::size_t dim(int n) const { return spaces.at(n).dim(); }
    bool has_ambient() const { return !cochains.empty(); }

    /// Ambient vector of a cochain given in coordinates at degree n.
    SparseVec embed(int n, const SparseVec& coords) const { return cochains.at(n).embed(coords); }
    SparseVec coordinates(int n, const SparseVec& v) const { return cochains.at(n).coordinate_vector(v); }
};

/// A complex together with the verdict on whether every operator preserved
/// the cochain subspaces. When well_defined fails the offending operators are
/// left as zero maps and the complex must not be used further.
struct BuiltComplex {
    CocyclicModule complex;
    CheckResult well_defined;
};

namespace detail {

inline std::string short_label(const SparseVec& v, const Space& ambient, std::size_t j)
{
    std::string s = format_vector(v, ambient);
    if (s.size() > 60)
        return "v" + std::to_string(j);
    if (s.find(' ') != std::string::npos)
        return "(" + s + ")";
    return s;
}

inline Space cochain_space(const Subspace& s, const Space& ambient)
{
    std::vector<std::string> labels;
    labels.reserve(s.dim());
    for (std::size_t j = 0; j < s.dim(); ++j)
        labels.push_back(short_label(s.basis[j], ambient, j));
    // Labels must be distinct; fall back to numbering on the rare collision.
    std::vector<std::string> sorted = labels;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        return Space::numbered(s.dim(), "v");
    return Space(labels);
}

/// Induced map between cochain subspaces. Records the first basis vector
/// whose image leaves the target subspace.
inline LinMap restrict_map(const LinMap& op, const CocyclicModule& X, int from, int to, const std::string& what,
                           CheckResult& verdict)
{
    const Subspace& src = X.cochains[from];
    const Subspace& tgt = X.cochains[to];
    std::vector<SparseVec> cols(src.dim());
    for (std::size_t j = 0; j < src.dim(); ++j) {
        SparseVec img = op.apply(src.basis[j]);
        auto c = tgt.coordinates(img);
        if (!c) {
            if (verdict.pass) {
                std::vector<SparseVec::Entry> e;
                for (std::size_t k = 0; k < tgt.dim(); ++k)
                    e.emplace_back(k, img.at(tgt.coordinate_index[k]));
                SparseVec nearest = tgt.embed(SparseVec::from_entries(std::move(e)));
                verdict = CheckResult::mismatch(what + " preserves the cochains", X.spaces[from].label(j), img,
                                                nearest, X.ambient[to], to);
            }
            return LinMap::zero(X.spaces[from], X.spaces[to]);
        }
        std::vector<SparseVec::Entry> e;
        for (std::size_t k = 0; k < c->size(); ++k)
            e.emplace_back(k, (*c)[k]);
        cols[j] = SparseVec::from_entries(std::move(e));
    }
    return LinMap::from_columns(X.spaces[from], X.spaces[to], std::move(cols));
}

/// Ambient operators of a complex: coface(n, i) : amb(n-1) → amb(n),
/// codegeneracy(n, i) : amb(n+1) → amb(n), cyclic(n) on amb(n).
struct AmbientOps {
    std::function<LinMap(int, int)> coface;
    std::function<LinMap(int, int)> codegeneracy;
    std::function<LinMap(int)> cyclic;
};

inline BuiltComplex assemble(std::string name, int N, std::vector<Space> ambient, std::vector<Subspace> cochains,
                             const AmbientOps& ops)
{
    BuiltComplex out;
    out.well_defined = CheckResult::ok("operators preserve the cochains");
    CocyclicModule& X = out.complex;
    X.name = std::move(name);
    X.max_degree = N;
    X.ambient = std::move(ambient);
    X.cochains = std::move(cochains);
    for (int n = 0; n <= N; ++n)
        X.spaces.push_back(cochain_space(X.cochains[n], X.ambient[n]));
    X.cofaces.resize(N + 1);
    X.codegeneracies.resize(N);
    auto& v = out.well_defined;
    for (int n = 0; n <= N; ++n) {
        if (n >= 1)
            for (int i = 0; i <= n; ++i)
                X.cofaces[n].push_back(restrict_map(ops.coface(n, i), X, n - 1, n,
                                                    "δ_" + std::to_string(i) + " into degree " + std::to_string(n), v));
        if (n < N)
            for (int i = 0; i <= n; ++i)
                X.codegeneracies[n].push_back(restrict_map(ops.codegeneracy(n, i), X, n + 1, n,
                                                           "σ_" + std::to_string(i) + " onto degree " + std::to_string(n), v));
        X.cyclic.push_back(restrict_map(ops.cyclic(n), X, n, n, "τ_" + std::to_string(n), v));
    }
    return out;
}

/// Pullback f ↦ (t ↦ Σ f(t')◁h) on Hom(A^{⊗(n+1)}, M) from a kernel listing
/// (t', h, c) for every target tuple t.
template <class Kernel>
LinMap hom_pullback(const ModuleComodule& M, std::size_t src_tuples, std::size_t tgt_tuples, const Space& src_amb,
                    const Space& tgt_amb, Kernel&& kernel)
{
    const std::size_t dm = M.dim();
    std::vector<std::tuple<Index, Index, Scalar>> trip;
    for (Index t = 0; t < tgt_tuples; ++t)
        kernel(t, [&](Index t2, Index h, const Scalar& c) {
            for (Index k = 0; k < dm; ++k)
                for (const auto& [k2, a] : M.act(k, h))
                    trip.emplace_back(t * dm + k2, t2 * dm + k, c * a);
        });
    (void)src_tuples;
    return LinMap::from_triplets(src_amb, tgt_amb, trip);
}

} // namespace detail

// ---------------------------------------------------------------------------
// Comodule algebra complex on Hom^H(A^{⊗(n+1)}, M)
// ---------------------------------------------------------------------------

inline BuiltComplex build_comodule_algebra_complex(const ComoduleAlgebra& Ain, const ModuleComodule& M, int N)
{
    ComoduleAlgebra A = as_left(Ain);
    if (!same_hopf(A.hopf, M.hopf))
        throw PreconditionError("carrier and coefficients live over different Hopf algebras");
    const HopfAlgebra& h = A.hopf;
    const std::size_t d = A.dim();
    std::vector<Space> amb;
    std::vector<Subspace> sub;
    for (int n = 0; n <= N; ++n) {
        amb.push_back(hom_space(A.space, M.space, n));
        sub.push_back(colinear_hom_space(A, M, n));
    }
    auto tuples = [&](int n) { return ipow(d, n + 1); };
    auto with_unit = [&](auto&& emit, Index t2, const Scalar& c) {
        for (const auto& [u, cu] : h.unit)
            emit(t2, u, c * cu);
    };

    detail::AmbientOps ops;
    ops.coface = [&](int n, int i) {
        return detail::hom_pullback(M, tuples(n - 1), tuples(n), amb[n - 1], amb[n], [&](Index t, auto&& emit) {
            auto a = tuple_digits(t, d, n + 1);
            if (i < n) {
                for (const auto& [x, c] : A.mult.column(a[i] * d + a[i + 1])) {
                    std::vector<Index> b(a.begin(), a.begin() + i);
                    b.push_back(x);
                    b.insert(b.end(), a.begin() + i + 2, a.end());
                    with_unit(emit, tuple_index(b, d), c);
                }
                return;
            }
            // f(aₙ₀ a₀ ⊗ a₁ ⊗ … ⊗ aₙ₋₁) ◁ aₙ₋₁
            for (const auto& [u, c] : A.coaction.column(a[n]))
                for (const auto& [x, c2] : A.mult.column((u % d) * d + a[0])) {
                    std::vector<Index> b{x};
                    b.insert(b.end(), a.begin() + 1, a.begin() + n);
                    emit(tuple_index(b, d), u / d, c * c2);
                }
        });
    };
    ops.codegeneracy = [&](int n, int i) {
        return detail::hom_pullback(M, tuples(n + 1), tuples(n), amb[n + 1], amb[n], [&](Index t, auto&& emit) {
            auto a = tuple_digits(t, d, n + 1);
            for (const auto& [e, c] : A.unit) {
                std::vector<Index> b(a.begin(), a.begin() + i + 1);
                b.push_back(e);
                b.insert(b.end(), a.begin() + i + 1, a.end());
                with_unit(emit, tuple_index(b, d), c);
            }
        });
    };
    ops.cyclic = [&](int n) {
        return detail::hom_pullback(M, tuples(n), tuples(n), amb[n], amb[n], [&](Index t, auto&& emit) {
            auto a = tuple_digits(t, d, n + 1);
            for (const auto& [u, c] : A.coaction.column(a[n])) {
                std::vector<Index> b{u % d};
                b.insert(b.end(), a.begin(), a.begin() + n);
                emit(tuple_index(b, d), u / d, c);
            }
        });
    };
    return detail::assemble("C(" + A.name + ", " + M.name + ")", N, amb, std::move(sub), ops);
}

// ---------------------------------------------------------------------------
// Comodule coalgebra complex on C^{⊗(n+1)} □_H M
// ---------------------------------------------------------------------------

inline BuiltComplex build_comodule_coalgebra_complex(const ComoduleCoalgebra& C, const ModuleComodule& M, int N)
{
    if (!same_hopf(C.hopf, M.hopf))
        throw PreconditionError("carrier and coefficients live over different Hopf algebras");
    const std::size_t d = C.dim(), dm = M.dim(), dh = C.hopf.dim();
    std::vector<Space> amb;
    std::vector<Subspace> sub;
    for (int n = 0; n <= N; ++n) {
        amb.push_back(Space::tensor(Space::power(C.space, n + 1), M.space));
        sub.push_back(cotensor_space(C, M, n));
    }
    // Column builder over source basis (tuple, m) of length len.
    auto push = [&](int src_deg, int tgt_deg, auto&& body) {
        return build_map(amb[src_deg], amb[tgt_deg], [&](Index j) {
            VecBuilder out;
            body(tuple_digits(j / dm, d, src_deg + 1), j % dm, [&](const std::vector<Index>& b, Index m, const Scalar& c) {
                out.add(tuple_index(b, d) * dm + m, c);
            });
            return out.build();
        });
    };

    detail::AmbientOps ops;
    ops.coface = [&](int n, int i) {
        return push(n - 1, n, [&](std::vector<Index> c, Index m, auto&& emit) {
            if (i < n) {
                for (const auto& [p, v] : C.comult.column(c[i])) {
                    std::vector<Index> b(c.begin(), c.begin() + i);
                    b.push_back(p / d);
                    b.push_back(p % d);
                    b.insert(b.end(), c.begin() + i + 1, c.end());
                    emit(b, m, v);
                }
                return;
            }
            // c₀⁽²⁾ ⊗ c₁ ⊗ … ⊗ cₙ₋₁ ⊗ c₀⁽¹⁾₀ ⊗ m ◁ c₀⁽¹⁾₁
            for (const auto& [p, v] : C.comult.column(c[0]))
                for (const auto& [q, w] : C.coaction.column(p / d))
                    for (const auto& [m2, x] : M.act(m, q % dh)) {
                        std::vector<Index> b{p % d};
                        b.insert(b.end(), c.begin() + 1, c.end());
                        b.push_back(q / dh);
                        emit(b, m2, v * w * x);
                    }
        });
    };
    ops.codegeneracy = [&](int n, int i) {
        return push(n + 1, n, [&](std::vector<Index> c, Index m, auto&& emit) {
            Scalar e = C.counit.column(c[i + 1]).at(0);
            if (e.is_zero())
                return;
            c.erase(c.begin() + i + 1);
            emit(c, m, e);
        });
    };
    ops.cyclic = [&](int n) {
        return push(n, n, [&](std::vector<Index> c, Index m, auto&& emit) {
            for (const auto& [q, w] : C.coaction.column(c[0]))
                for (const auto& [m2, x] : M.act(m, q % dh)) {
                    std::vector<Index> b(c.begin() + 1, c.end());
                    b.push_back(q / dh);
                    emit(b, m2, w * x);
                }
        });
    };
    return detail::assemble("C(" + C.name + ", " + M.name + ")", N, amb, std::move(sub), ops);
}

// ---------------------------------------------------------------------------
// Module algebra complex on Hom_H(M ⊗ A^{⊗(n+1)}, k)
// ---------------------------------------------------------------------------

/// How H-linearity of a functional on M ⊗ A^{⊗(n+1)} is imposed.
enum class Invariance {
    /// φ(m◁S(h⁽¹⁾) ⊗ h⁽²⁾▷ã) = ε(h) φ(m ⊗ ã)
    twisted,
    /// φ(m◁h ⊗ ã) = φ(m ⊗ h▷ã)
    balanced,
};

/// h ▷ (a₀ ⊗ … ⊗ aₙ) = h⁽¹⁾▷a₀ ⊗ … ⊗ h⁽ⁿ⁺¹⁾▷aₙ as a map H ⊗ A^{⊗(n+1)} → A^{⊗(n+1)}.
inline LinMap diagonal_action(const ModuleAlgebra& A, int n)
{
    const HopfAlgebra& h = A.hopf;
    LinMap r = A.action;
    Space P = A.space;
    for (int i = 1; i <= n; ++i) {
        // H ⊗ P ⊗ A: Δ, then (h₁ ▷ p) ⊗ (h₂ ▷ a)
        LinMap spread = compose(permute_factors({h.space, h.space, P, A.space}, {0, 2, 1, 3}),
                                tensor_map(h.comult, LinMap::identity(Space::tensor(P, A.space))));
        r = compose(tensor_map(r, A.action), spread);
        P = Space::tensor(P, A.space);
    }
    return r.relabeled(Space::tensor(h.space, Space::power(A.space, n + 1)), Space::power(A.space, n + 1));
}

inline Subspace invariant_functionals(const ModuleAlgebra& A, const ModuleComodule& M, int n, Invariance inv)
{
    const HopfAlgebra& h = A.hopf;
    const std::size_t dh = h.dim(), dm = M.dim();
    const std::size_t D = ipow(A.dim(), n + 1);
    require_within_cap(n, D * dm, "invariant functionals");
    note_system_size(D * dm * dh, "invariant functionals");
    LinMap act = diagonal_action(A, n);
    std::vector<SparseVec> rows;
    rows.reserve(dh * dm * D);
    for (Index x = 0; x < dh; ++x)
        for (Index m = 0; m < dm; ++m)
            for (Index t = 0; t < D; ++t) {
                VecBuilder r;
                if (inv == Invariance::balanced) {
                    for (const auto& [m2, c] : M.act(m, x))
                        r.add(m2 * D + t, c);
                    for (const auto& [t2, c] : act.column(x * D + t))
                        r.add(m * D + t2, -c);
                } else {
                    for (const auto& [p, c] : h.coproduct(x)) {
                        SparseVec ms = M.act(SparseVec::unit(m), h.antipode.column(p / dh));
                        SparseVec at = act.column((p % dh) * D + t);
                        for (const auto& [m2, c2] : ms)
                            for (const auto& [t2, c3] : at)
                                r.add(m2 * D + t2, c * c2 * c3);
                    }
                    r.add(m * D + t, -h.epsilon(x));
                }
                SparseVec row = r.build();
                if (!row.is_zero())
                    rows.push_back(std::move(row));
            }
    return kernel_of_rows(D * dm, rows);
}

inline BuiltComplex build_module_algebra_complex(const ModuleAlgebra& A, const ModuleComodule& M, int N,
                                                 Invariance inv = Invariance::twisted)
{
    if (!same_hopf(A.hopf, M.hopf))
        throw PreconditionError("carrier and coefficients live over different Hopf algebras");
    const HopfAlgebra& h = A.hopf;
    const std::size_t d = A.dim(), dm = M.dim(), dh = h.dim();
    const LinMap& sinv = h.s_inv();
    std::vector<Space> amb;
    std::vector<Subspace> sub;
    for (int n = 0; n <= N; ++n) {
        amb.push_back(Space::tensor(M.space, Space::power(A.space, n + 1)));
        sub.push_back(invariant_functionals(A, M, n, inv));
    }
    // φ ↦ φ∘K where K sends the target basis (m, t) to a combination of (m', t').
    auto pull = [&](int src_deg, int tgt_deg, auto&& kernel) {
        const std::size_t Ds = ipow(d, src_deg + 1), Dt = ipow(d, tgt_deg + 1);
        std::vector<std::tuple<Index, Index, Scalar>> trip;
        for (Index m = 0; m < dm; ++m)
            for (Index t = 0; t < Dt; ++t)
                kernel(m, tuple_digits(t, d, tgt_deg + 1), [&](Index m2, const std::vector<Index>& b, const Scalar& c) {
                    trip.emplace_back(m * Dt + t, m2 * Ds + tuple_index(b, d), c);
                });
        return LinMap::from_triplets(amb[src_deg], amb[tgt_deg], trip);
    };
    // m₀ ⊗ S⁻¹(m₋₁) ▷ a, as (m₀, element of A) pairs
    auto untwist = [&](Index m, Index a, auto&& emit) {
        for (const auto& [u, c] : M.coaction.column(m))
            for (const auto& [y, c2] : sinv.column(u / dm))
                for (const auto& [x, c3] : A.act(y, a))
                    emit(u % dm, x, c * c2 * c3);
    };

    detail::AmbientOps ops;
    ops.coface = [&](int n, int i) {
        return pull(n - 1, n, [&](Index m, const std::vector<Index>& a, auto&& emit) {
            if (i < n) {
                for (const auto& [x, c] : A.mult.column(a[i] * d + a[i + 1])) {
                    std::vector<Index> b(a.begin(), a.begin() + i);
                    b.push_back(x);
                    b.insert(b.end(), a.begin() + i + 2, a.end());
                    emit(m, b, c);
                }
                return;
            }
            untwist(m, a[n], [&](Index m0, Index x, const Scalar& c) {
                for (const auto& [y, c2] : A.mult.column(x * d + a[0])) {
                    std::vector<Index> b{y};
                    b.insert(b.end(), a.begin() + 1, a.begin() + n);
                    emit(m0, b, c * c2);
                }
            });
        });
    };
    ops.codegeneracy = [&](int n, int i) {
        return pull(n + 1, n, [&](Index m, const std::vector<Index>& a, auto&& emit) {
            for (const auto& [e, c] : A.unit) {
                std::vector<Index> b(a.begin(), a.begin() + i + 1);
                b.push_back(e);
                b.insert(b.end(), a.begin() + i + 1, a.end());
                emit(m, b, c);
            }
        });
    };
    ops.cyclic = [&](int n) {
        return pull(n, n, [&](Index m, const std::vector<Index>& a, auto&& emit) {
            untwist(m, a[n], [&](Index m0, Index x, const Scalar& c) {
                std::vector<Index> b{x};
                b.insert(b.end(), a.begin(), a.begin() + n);
                emit(m0, b, c);
            });
        });
    };
    (void)dh;
    return detail::assemble("C_H(" + A.name + ", " + M.name + ")", N, amb, std::move(sub), ops);
}

/// The cyclic cochain complex Hom(A^{⊗(n+1)}, k) of a bare algebra.
inline CocyclicModule algebra_cyclic_complex(const std::string& name, const Space& space, const LinMap& mult,
                                             const SparseVec& unit, int N)
{
    HopfAlgebra k = trivial_hopf();
    ComoduleAlgebra A{name, k, space, mult, unit,
                      tensor_map(k.unit_map(), LinMap::identity(space)).relabeled(space, Space::tensor(k.space, space)),
                      Side::left};
    auto built = build_comodule_algebra_complex(A, trivial_coefficients(k), N);
    if (!built.well_defined.pass)
        throw Error("cyclic complex of " + name + " is not well defined: " + built.well_defined.condition);
    built.complex.name = "C(" + name + ")";
    return built.complex;
}

// ---------------------------------------------------------------------------
// Identities
// ---------------------------------------------------------------------------

inline CheckResult verify_cocyclic_identities(const CocyclicModule& X)
{
    const int N = X.max_degree;
    auto s = [](int i) { return std::to_string(i); };
    auto cmp = [&](const std::string& name, const LinMap& l, const LinMap& r, int n) {
        return compare_maps(name, l, r, n);
    };
    CheckResult ok = CheckResult::ok("cocyclic identities");
    // δ_j δ_i = δ_i δ_{j-1}, i < j, from degree n-1 to n+1
    for (int n = 1; n + 1 <= N; ++n)
        for (int j = 1; j <= n + 1; ++j)
            for (int i = 0; i < j; ++i)
                if (auto r = cmp("δ" + s(j) + "δ" + s(i) + " = δ" + s(i) + "δ" + s(j - 1),
                                 compose(X.coface(n + 1, j), X.coface(n, i)),
                                 compose(X.coface(n + 1, i), X.coface(n, j - 1)), n + 1);
                    !r.pass)
                    return r;
    // σ_j σ_i = σ_i σ_{j+1}, i ≤ j, from degree n+2 to n
    for (int n = 0; n + 2 <= N; ++n)
        for (int j = 0; j <= n; ++j)
            for (int i = 0; i <= j; ++i)
                if (auto r = cmp("σ" + s(j) + "σ" + s(i) + " = σ" + s(i) + "σ" + s(j + 1),
                                 compose(X.codegeneracy(n, j), X.codegeneracy(n + 1, i)),
                                 compose(X.codegeneracy(n, i), X.codegeneracy(n + 1, j + 1)), n);
                    !r.pass)
                    return r;
    // σ_j δ_i on degree n, with δ_i : n → n+1 and σ_j : n+1 → n
    for (int n = 0; n + 1 <= N; ++n)
        for (int j = 0; j <= n; ++j)
            for (int i = 0; i <= n + 1; ++i) {
                LinMap lhs = compose(X.codegeneracy(n, j), X.coface(n + 1, i));
                LinMap rhs;
                std::string name = "σ" + s(j) + "δ" + s(i) + " = ";
                if (i < j) {
                    rhs = compose(X.coface(n, i), X.codegeneracy(n - 1, j - 1));
                    name += "δ" + s(i) + "σ" + s(j - 1);
                } else if (i == j || i == j + 1) {
                    rhs = LinMap::identity(X.spaces[n]);
                    name += "id";
                } else {
                    rhs = compose(X.coface(n, i - 1), X.codegeneracy(n - 1, j));
                    name += "δ" + s(i - 1) + "σ" + s(j);
                }
                if (auto r = cmp(name, lhs, rhs, n); !r.pass)
                    return r;
            }
    for (int n = 1; n <= N; ++n) {
        if (auto r = cmp("τ" + s(n) + "δ0 = δ" + s(n), compose(X.tau(n), X.coface(n, 0)), X.coface(n, n), n); !r.pass)
            return r;
        for (int i = 1; i <= n; ++i)
            if (auto r = cmp("τ" + s(n) + "δ" + s(i) + " = δ" + s(i - 1) + "τ" + s(n - 1),
                             compose(X.tau(n), X.coface(n, i)), compose(X.coface(n, i - 1), X.tau(n - 1)), n);
                !r.pass)
                return r;
    }
    for (int n = 0; n + 1 <= N; ++n) {
        if (auto r = cmp("τ" + s(n) + "σ0 = σ" + s(n) + "τ" + s(n + 1) + "²", compose(X.tau(n), X.codegeneracy(n, 0)),
                         compose(X.codegeneracy(n, n), compose(X.tau(n + 1), X.tau(n + 1))), n);
            !r.pass)
            return r;
        for (int i = 1; i <= n; ++i)
            if (auto r = cmp("τ" + s(n) + "σ" + s(i) + " = σ" + s(i - 1) + "τ" + s(n + 1),
                             compose(X.tau(n), X.codegeneracy(n, i)), compose(X.codegeneracy(n, i - 1), X.tau(n + 1)),
                             n);
                !r.pass)
                return r;
    }
    for (int n = 0; n <= N; ++n) {
        LinMap p = LinMap::identity(X.spaces[n]);
        for (int k = 0; k <= n; ++k)
            p = compose(X.tau(n), p);
        if (auto r = cmp("τ" + s(n) + "^" + s(n + 1) + " = id", p, LinMap::identity(X.spaces[n]), n); !r.pass)
            return r;
        ok.notes.push_back("degree " + s(n) + ": dim " + std::to_string(X.dim(n)) + ", identities hold");
    }
    return ok;
}

enum class Flavor { comodule_algebra, comodule_coalgebra, module_algebra };

inline CheckResult hcc_verdict(const BuiltComplex& b)
{
    if (!b.well_defined.pass)
        return b.well_defined;
    auto r = verify_cocyclic_identities(b.complex);
    if (!r.pass)
        return r;
    CheckResult ok = CheckResult::ok("Hopf cyclic coefficients");
    ok.notes = r.notes;
    return ok;
}

inline CheckResult check_hcc(const ComoduleAlgebra& A, const ModuleComodule& M, int N)
{
    return hcc_verdict(build_comodule_algebra_complex(A, M, N));
}

inline CheckResult check_hcc(const ComoduleCoalgebra& C, const ModuleComodule& M, int N)
{
    return hcc_verdict(build_comodule_coalgebra_complex(C, M, N));
}

inline CheckResult check_hcc(const ModuleAlgebra& A, const ModuleComodule& M, int N,
                             Invariance inv = Invariance::twisted)
{
    return hcc_verdict(build_module_algebra_complex(A, M, N, inv));
}

} // namespace hcc
