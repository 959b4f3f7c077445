#pragma once

// (Co)module algebras and coalgebras over a Hopf algebra, module-comodule
// coefficients, and decision procedures for the coefficient conditions.

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "hcc/hopf.hpp"
#include "hcc/zoo.hpp"

namespace hcc {

/// Hard bounds on the size of the linear systems the kit is willing to build.
struct Limits {
    int degree_cap = 6;
    std::size_t max_unknowns = 4'000'000;
    std::size_t warn_rows = 100'000;
    std::function<void(const std::string&)> warn;
};

inline Limits& limits()
{
    static Limits l;
    return l;
}

inline void require_within_cap(int n, std::size_t unknowns, const std::string& what)
{
    const auto& l = limits();
    if (n > l.degree_cap)
        throw DegreeCapError(what + ": degree " + std::to_string(n) + " exceeds the cap " +
                             std::to_string(l.degree_cap));
    if (unknowns > l.max_unknowns)
        throw DegreeCapError(what + ": " + std::to_string(unknowns) + " unknowns at degree " + std::to_string(n) +
                             " exceed the bound " + std::to_string(l.max_unknowns));
}

inline void note_system_size(std::size_t rows, const std::string& what)
{
    const auto& l = limits();
    if (rows > l.warn_rows && l.warn)
        l.warn(what + ": " + std::to_string(rows) + " constraint rows");
}

enum class Side { left, right };

struct ComoduleAlgebra {
    std::string name;
    HopfAlgebra hopf;
    Space space;
    LinMap mult;
    SparseVec unit;
    LinMap coaction; // left: A → H⊗A, right: A → A⊗H
    Side side = Side::left;

    std::size_t dim() const { return space.dim(); }
    SparseVec product(const SparseVec& a, const SparseVec& b) const { return mult.apply(kron(a, b, dim())); }
};

/// Right comodule coalgebra.
struct ComoduleCoalgebra {
    std::string name;
    HopfAlgebra hopf;
    Space space;
    LinMap comult;
    LinMap counit;
    LinMap coaction; // C → C⊗H

    std::size_t dim() const { return space.dim(); }
};

/// Left module algebra.
struct ModuleAlgebra {
    std::string name;
    HopfAlgebra hopf;
    Space space;
    LinMap mult;
    SparseVec unit;
    LinMap action; // H⊗A → A

    std::size_t dim() const { return space.dim(); }
    SparseVec product(const SparseVec& a, const SparseVec& b) const { return mult.apply(kron(a, b, dim())); }
    SparseVec act(Index h, Index a) const { return action.column(h * dim() + a); }
};

/// Right module, left comodule; no compatibility assumed.
struct ModuleComodule {
    std::string name;
    HopfAlgebra hopf;
    Space space;
    LinMap action;   // M⊗H → M
    LinMap coaction; // M → H⊗M

    std::size_t dim() const { return space.dim(); }
    SparseVec act(Index m, Index h) const { return action.column(m * hopf.dim() + h); }
    SparseVec act(const SparseVec& m, const SparseVec& h) const { return action.apply(kron(m, h, hopf.dim())); }
};

inline bool same_hopf(const HopfAlgebra& a, const HopfAlgebra& b)
{
    return a.dim() == b.dim() && a.mult == b.mult && a.comult == b.comult && a.antipode == b.antipode;
}

namespace detail {

inline CheckResult first_failure(std::vector<std::function<CheckResult()>> steps, const std::string& ok_name)
{
    for (auto& s : steps) {
        auto r = s();
        if (!r.pass)
            return r;
    }
    return CheckResult::ok(ok_name);
}

inline CheckResult with_context(CheckResult r, const std::string& prefix, std::optional<int> degree = std::nullopt)
{
    if (!r.pass && r.witness) {
        if (!prefix.empty())
            r.witness->element = prefix + " at " + r.witness->element;
        if (degree)
            r.witness->degree = degree;
    }
    return r;
}

inline CheckResult algebra_axioms(const Space& A, const LinMap& mult, const SparseVec& unit)
{
    const LinMap id = LinMap::identity(A);
    const LinMap u = LinMap::from_columns(Space::ground(), A, {unit});
    return first_failure(
        {[&] {
             return compare_maps("associativity", compose(mult, tensor_map(mult, id)),
                                 compose(mult, tensor_map(id, mult)));
         },
         [&] { return compare_maps("left unit", compose(mult, tensor_map(u, id)).relabeled(A, A), id); },
         [&] { return compare_maps("right unit", compose(mult, tensor_map(id, u)).relabeled(A, A), id); }},
        "algebra");
}

inline CheckResult coalgebra_axioms(const Space& C, const LinMap& comult, const LinMap& counit)
{
    const LinMap id = LinMap::identity(C);
    return first_failure({[&] {
                              return compare_maps("coassociativity", compose(tensor_map(comult, id), comult),
                                                  compose(tensor_map(id, comult), comult));
                          },
                          [&] {
                              return compare_maps("left counit",
                                                  onto(compose(tensor_map(counit, id), comult), C), id);
                          },
                          [&] {
                              return compare_maps("right counit",
                                                  onto(compose(tensor_map(id, counit), comult), C), id);
                          }},
                         "coalgebra");
}

inline CheckResult left_comodule_axioms(const HopfAlgebra& h, const Space& X, const LinMap& coaction)
{
    const LinMap id = LinMap::identity(X);
    return first_failure(
        {[&] {
             return compare_maps("coaction coassociativity", compose(tensor_map(h.comult, id), coaction),
                                 compose(tensor_map(LinMap::identity(h.space), coaction), coaction));
         },
         [&] { return compare_maps("coaction counit", onto(compose(tensor_map(h.counit, id), coaction), X), id); }},
        "left comodule");
}

inline CheckResult right_comodule_axioms(const HopfAlgebra& h, const Space& X, const LinMap& coaction)
{
    const LinMap id = LinMap::identity(X);
    return first_failure(
        {[&] {
             return compare_maps("coaction coassociativity", compose(tensor_map(coaction, LinMap::identity(h.space)), coaction),
                                 compose(tensor_map(id, h.comult), coaction));
         },
         [&] { return compare_maps("coaction counit", onto(compose(tensor_map(id, h.counit), coaction), X), id); }},
        "right comodule");
}

} // namespace detail

inline CheckResult verify_comodule_algebra(const ComoduleAlgebra& A)
{
    const HopfAlgebra& h = A.hopf;
    const Space& X = A.space;
    const Space& H = h.space;
    bool left = A.side == Side::left;
    detail::require_shape(A.mult, X.dim(), X.dim() * X.dim(), "algebra multiplication");
    detail::require_shape(A.coaction, X.dim() * H.dim(), X.dim(), "coaction");
    return detail::first_failure(
        {[&] { return detail::algebra_axioms(X, A.mult, A.unit); },
         [&] {
             return left ? detail::left_comodule_axioms(h, X, A.coaction)
                         : detail::right_comodule_axioms(h, X, A.coaction);
         },
         [&] {
             // ∇(ab) = a₋₁b₋₁ ⊗ a₀b₀, mirrored for a right coaction.
             LinMap both = tensor_map(A.coaction, A.coaction);
             LinMap rhs = left ? compose(tensor_map(h.mult, A.mult), compose(permute_factors({H, X, H, X}, {0, 2, 1, 3}), both))
                               : compose(tensor_map(A.mult, h.mult), compose(permute_factors({X, H, X, H}, {0, 2, 1, 3}), both));
             return compare_maps("coaction is multiplicative", compose(A.coaction, A.mult), rhs);
         },
         [&] {
             SparseVec one = left ? kron(h.unit, A.unit, X.dim()) : kron(A.unit, h.unit, H.dim());
             SparseVec img = A.coaction.apply(A.unit);
             if (img != one)
                 return CheckResult::mismatch("coaction is unital", "1", img, one, A.coaction.codomain());
             return CheckResult::ok("coaction is unital");
         }},
        "comodule algebra");
}

inline CheckResult verify_comodule_coalgebra(const ComoduleCoalgebra& C)
{
    const HopfAlgebra& h = C.hopf;
    const Space& X = C.space;
    const Space& H = h.space;
    detail::require_shape(C.comult, X.dim() * X.dim(), X.dim(), "coalgebra comultiplication");
    detail::require_shape(C.coaction, X.dim() * H.dim(), X.dim(), "coaction");
    return detail::first_failure(
        {[&] { return detail::coalgebra_axioms(X, C.comult, C.counit); },
         [&] { return detail::right_comodule_axioms(h, X, C.coaction); },
         [&] {
             // c⁽¹⁾₀ ⊗ c⁽²⁾₀ ⊗ c⁽¹⁾₁c⁽²⁾₁ = Δ(c₀) ⊗ c₁
             LinMap lhs = compose(tensor_map(LinMap::identity(Space::tensor(X, X)), h.mult),
                                  compose(permute_factors({X, H, X, H}, {0, 2, 1, 3}),
                                          compose(tensor_map(C.coaction, C.coaction), C.comult)));
             LinMap rhs = compose(tensor_map(C.comult, LinMap::identity(H)), C.coaction);
             return compare_maps("comultiplication is colinear", lhs, rhs);
         },
         [&] {
             LinMap lhs = detail::onto(compose(tensor_map(C.counit, LinMap::identity(H)), C.coaction), H);
             LinMap rhs = compose(h.unit_map(), C.counit);
             return compare_maps("counit is colinear", lhs, rhs);
         }},
        "comodule coalgebra");
}

inline CheckResult verify_module_algebra(const ModuleAlgebra& A)
{
    const HopfAlgebra& h = A.hopf;
    const Space& X = A.space;
    const Space& H = h.space;
    const LinMap idX = LinMap::identity(X);
    detail::require_shape(A.action, X.dim(), H.dim() * X.dim(), "action");
    return detail::first_failure(
        {[&] { return detail::algebra_axioms(X, A.mult, A.unit); },
         [&] {
             return compare_maps("action associativity", compose(A.action, tensor_map(h.mult, idX)),
                                 compose(A.action, tensor_map(LinMap::identity(H), A.action)));
         },
         [&] {
             return compare_maps("action unit", compose(A.action, tensor_map(h.unit_map(), idX)).relabeled(X, X), idX);
         },
         [&] {
             // h ▷ (ab) = (h⁽¹⁾ ▷ a)(h⁽²⁾ ▷ b)
             LinMap lhs = compose(A.action, tensor_map(LinMap::identity(H), A.mult));
             LinMap rhs = compose(A.mult, compose(tensor_map(A.action, A.action),
                                                  compose(permute_factors({H, H, X, X}, {0, 2, 1, 3}),
                                                          tensor_map(h.comult, LinMap::identity(Space::tensor(X, X))))));
             return compare_maps("action is measuring", lhs, rhs);
         },
         [&] {
             LinMap lhs = compose(A.action, tensor_map(LinMap::identity(H), LinMap::from_columns(Space::ground(), X, {A.unit})));
             LinMap rhs = compose(LinMap::from_columns(Space::ground(), X, {A.unit}), h.counit);
             return compare_maps("action on the unit", lhs.relabeled(H, X), rhs);
         }},
        "module algebra");
}

inline CheckResult verify_module_comodule(const ModuleComodule& M)
{
    const HopfAlgebra& h = M.hopf;
    const Space& X = M.space;
    const Space& H = h.space;
    const LinMap idX = LinMap::identity(X);
    detail::require_shape(M.action, X.dim(), X.dim() * H.dim(), "action");
    detail::require_shape(M.coaction, H.dim() * X.dim(), X.dim(), "coaction");
    return detail::first_failure(
        {[&] {
             return compare_maps("action associativity", compose(M.action, tensor_map(M.action, LinMap::identity(H))),
                                 compose(M.action, tensor_map(idX, h.mult)));
         },
         [&] {
             return compare_maps("action unit", compose(M.action, tensor_map(idX, h.unit_map())).relabeled(X, X), idX);
         },
         [&] { return detail::left_comodule_axioms(h, X, M.coaction); }},
        "module-comodule");
}

// ---------------------------------------------------------------------------
// Side conversion
// ---------------------------------------------------------------------------

/// A right H-comodule algebra as a left H^cop-comodule algebra, a ↦ a₁ ⊗ a₀.
/// Left comodule algebras are returned unchanged.
inline ComoduleAlgebra as_left(const ComoduleAlgebra& A)
{
    if (A.side == Side::left)
        return A;
    ComoduleAlgebra r = A;
    r.hopf = cop(A.hopf);
    r.coaction = compose(flip(A.space, A.hopf.space), A.coaction);
    r.side = Side::left;
    r.name = A.name + " (left over " + r.hopf.name + ")";
    return r;
}

/// A left H-comodule algebra as a right H^cop-comodule algebra.
inline ComoduleAlgebra as_right(const ComoduleAlgebra& A)
{
    if (A.side == Side::right)
        return A;
    ComoduleAlgebra r = A;
    r.hopf = cop(A.hopf);
    r.coaction = compose(flip(A.hopf.space, A.space), A.coaction);
    r.side = Side::right;
    r.name = A.name + " (right over " + r.hopf.name + ")";
    return r;
}

/// The same structure maps regarded over another Hopf algebra on the same
/// space (used to move coefficients to H^cop along with their carrier).
inline ModuleComodule over(const ModuleComodule& M, const HopfAlgebra& h)
{
    if (h.dim() != M.hopf.dim())
        throw DimensionError("coefficients moved to a Hopf algebra of another dimension");
    ModuleComodule r = M;
    r.hopf = h;
    return r;
}

// ---------------------------------------------------------------------------
// Standard carriers and coefficients
// ---------------------------------------------------------------------------

/// H as a left comodule algebra over itself via Δ.
inline ComoduleAlgebra regular_comodule_algebra(const HopfAlgebra& h)
{
    return ComoduleAlgebra{h.name + " (Δ)", h, h.space, h.mult, h.unit, h.comult, Side::left};
}

/// H with the right coaction Δ. This is a comodule but in general not a
/// comodule coalgebra (verify_comodule_coalgebra fails unless H is trivial);
/// it serves the checks that only see the coaction.
inline ComoduleCoalgebra regular_right_comodule(const HopfAlgebra& h)
{
    return ComoduleCoalgebra{h.name + " (Δ)", h, h.space, h.comult, h.counit, h.comult};
}

/// H as a right comodule coalgebra over itself by c ↦ c⁽²⁾ ⊗ S(c⁽¹⁾) c⁽³⁾.
inline ComoduleCoalgebra adjoint_comodule_coalgebra(const HopfAlgebra& h)
{
    const std::size_t n = h.dim();
    LinMap d2 = h.iterated_comult(2);
    LinMap coaction = build_map(h.space, Space::tensor(h.space, h.space), [&](Index c) {
        VecBuilder b;
        for (const auto& [t, v] : d2.column(c)) {
            Index c1 = t / (n * n), c2 = (t / n) % n, c3 = t % n;
            b.add(kron(SparseVec::unit(c2), h.product(h.antipode.column(c1), SparseVec::unit(c3)), n), v);
        }
        return b.build();
    });
    return ComoduleCoalgebra{h.name + " (adjoint)", h, h.space, h.comult, h.counit, coaction};
}

/// H as a left module algebra over itself by the adjoint action h ▷ a = h⁽¹⁾ a S(h⁽²⁾).
inline ModuleAlgebra adjoint_module_algebra(const HopfAlgebra& h)
{
    const std::size_t n = h.dim();
    LinMap action = build_map(Space::tensor(h.space, h.space), h.space, [&](Index j) {
        Index x = j / n, a = j % n;
        VecBuilder b;
        for (const auto& [t, c] : h.coproduct(x))
            b.add(h.product(h.product(SparseVec::unit(t / n), SparseVec::unit(a)), h.antipode.column(t % n)), c);
        return b.build();
    });
    return ModuleAlgebra{h.name + " (adjoint)", h, h.space, h.mult, h.unit, action};
}

/// A group algebra k[G] acting on an algebra through one automorphism per
/// group element (indexed like the basis of k[G]).
inline ModuleAlgebra group_module_algebra(const HopfAlgebra& kG, const std::string& name, const Space& space,
                                          const LinMap& mult, const SparseVec& unit, const std::vector<LinMap>& by)
{
    if (by.size() != kG.dim())
        throw DimensionError("one automorphism per group element is needed");
    const std::size_t d = space.dim();
    LinMap action = build_map(Space::tensor(kG.space, space), space,
                              [&](Index j) { return by[j / d].column(j % d); });
    ModuleAlgebra A{name, kG, space, mult, unit, action};
    auto ok = verify_module_algebra(A);
    if (!ok.pass)
        throw Error(name + " is not a module algebra: " + ok.condition);
    return A;
}

/// k[Z/n] with Z/2 acting by inversion a ↦ a⁻¹.
inline ModuleAlgebra inversion_module_algebra(int n)
{
    HopfAlgebra z2 = group_algebra(cyclic_group(2));
    FiniteGroup G = cyclic_group(n);
    HopfAlgebra kG = group_algebra(G);
    std::vector<SparseVec> inv;
    for (int g = 0; g < n; ++g)
        inv.push_back(SparseVec::unit(G.inv(g)));
    LinMap flip_map = LinMap::from_columns(kG.space, kG.space, inv);
    return group_module_algebra(z2, kG.name + " (inversion)", kG.space, kG.mult, kG.unit,
                                {LinMap::identity(kG.space), flip_map});
}

/// k[t]/(t²) as an H4 module algebra: g ▷ t = −t, x ▷ t = 1, gx ▷ t = 1.
inline ModuleAlgebra sweedler_dual_numbers()
{
    HopfAlgebra h = sweedler_h4();
    Space A({"1", "t"});
    LinMap mult = LinMap::from_columns(Space::tensor(A, A), A,
                                       {SparseVec::unit(0), SparseVec::unit(1), SparseVec::unit(1), SparseVec()});
    // columns (h, a) for h in {1, g, x, gx}, a in {1, t}
    LinMap action = LinMap::from_columns(Space::tensor(h.space, A), A,
                                         {SparseVec::unit(0), SparseVec::unit(1), SparseVec::unit(0),
                                          SparseVec::unit(1, Scalar(-1)), SparseVec(), SparseVec::unit(0), SparseVec(),
                                          SparseVec::unit(0)});
    ModuleAlgebra M{"k[t]/t²", h, A, mult, SparseVec::unit(0), action};
    auto ok = verify_module_algebra(M);
    if (!ok.pass)
        throw Error("k[t]/t² is not an H4 module algebra: " + ok.condition);
    return M;
}

/// The ground field as a left comodule algebra with trivial coaction.
inline ComoduleAlgebra trivial_comodule_algebra(const HopfAlgebra& h)
{
    Space k({"1"});
    return ComoduleAlgebra{"k", h, k, LinMap::from_columns(Space::tensor(k, k), k, {SparseVec::unit(0)}),
                           SparseVec::unit(0), LinMap::from_columns(k, Space::tensor(h.space, k), {h.unit}),
                           Side::left};
}

inline ComoduleCoalgebra trivial_comodule_coalgebra(const HopfAlgebra& h)
{
    Space k({"1"});
    return ComoduleCoalgebra{"k", h, k, LinMap::from_columns(k, Space::tensor(k, k), {SparseVec::unit(0)}),
                             LinMap::from_columns(k, Space::ground(), {SparseVec::unit(0)}),
                             LinMap::from_columns(k, Space::tensor(k, h.space), {h.unit})};
}

inline ModuleAlgebra trivial_module_algebra(const HopfAlgebra& h)
{
    Space k({"1"});
    return ModuleAlgebra{"k", h, k, LinMap::from_columns(Space::tensor(k, k), k, {SparseVec::unit(0)}),
                         SparseVec::unit(0), h.counit.relabeled(Space::tensor(h.space, k), k)};
}

/// ^σC_δ: the ground field with m ◁ h = δ(h) m and coaction 1 ↦ σ ⊗ 1.
inline ModuleComodule sigma_delta_coefficients(const HopfAlgebra& h, const Character& d, const GroupLike& s)
{
    auto mp = check_modular_pair(h, d, s);
    if (!mp.pass)
        throw PreconditionError("coefficients need a modular pair: δ(σ) ≠ 1");
    Space m({"m"});
    return ModuleComodule{"C(σ,δ)", h, m, d.delta.relabeled(Space::tensor(m, h.space), m),
                          LinMap::from_columns(m, Space::tensor(h.space, m), {s.sigma})};
}

inline ModuleComodule trivial_coefficients(const HopfAlgebra& h)
{
    auto M = sigma_delta_coefficients(h, counit_character(h), unit_grouplike(h));
    M.name = "k";
    return M;
}

/// A left comodule with the trivial action m ◁ h = ε(h) m.
inline ModuleComodule with_trivial_action(const HopfAlgebra& h, const std::string& name, const Space& space,
                                          const LinMap& coaction)
{
    LinMap action = tensor_map(LinMap::identity(space), h.counit).relabeled(Space::tensor(space, h.space), space);
    return ModuleComodule{name, h, space, action, coaction};
}

/// A right module with the trivial coaction m ↦ 1 ⊗ m.
inline ModuleComodule with_trivial_coaction(const HopfAlgebra& h, const std::string& name, const Space& space,
                                            const LinMap& action)
{
    LinMap coaction = tensor_map(h.unit_map(), LinMap::identity(space)).relabeled(space, Space::tensor(h.space, space));
    return ModuleComodule{name, h, space, action, coaction};
}

// ---------------------------------------------------------------------------
// Bicrossed product carriers
// ---------------------------------------------------------------------------

/// k^F as a right comodule algebra: e_f ↦ Σ_{f₁f₂ = f} e_{f₁} ⊗ (e_{f₂} # 1).
inline ComoduleAlgebra bicrossed_F_comodule_algebra(const BicrossedProduct& B)
{
    const FiniteGroup& F = B.F;
    const int nf = F.size();
    HopfAlgebra kF = function_hopf(F);
    const std::size_t dh = B.hopf.dim();
    Space X = kF.space;
    LinMap coaction = build_map(X, Space::tensor(X, B.hopf.space), [&](Index f) {
        std::vector<SparseVec::Entry> e;
        for (int f1 = 0; f1 < nf; ++f1) {
            int f2 = F.mul(F.inv(f1), static_cast<int>(f));
            e.emplace_back(f1 * dh + B.index(f2, B.U.identity()), Scalar(1));
        }
        return SparseVec::from_entries(std::move(e));
    });
    ComoduleAlgebra A{"k^F", B.hopf, X, kF.mult, kF.unit, coaction, Side::right};
    auto ok = verify_comodule_algebra(A);
    if (!ok.pass)
        throw Error("k^F comodule algebra axioms fail: " + ok.condition);
    return A;
}

/// k[U] as a right comodule coalgebra: u ↦ Σ_f (f ▷ u) ⊗ (e_f # 1).
inline ComoduleCoalgebra bicrossed_U_comodule_coalgebra(const BicrossedProduct& B)
{
    const FiniteGroup& U = B.U;
    const int nf = B.F.size();
    HopfAlgebra kU = group_algebra(U);
    const std::size_t dh = B.hopf.dim();
    Space X = kU.space;
    LinMap coaction = build_map(X, Space::tensor(X, B.hopf.space), [&](Index u) {
        std::vector<SparseVec::Entry> e;
        for (int f = 0; f < nf; ++f)
            e.emplace_back(B.act[f][u] * dh + B.index(f, U.identity()), Scalar(1));
        return SparseVec::from_entries(std::move(e));
    });
    ComoduleCoalgebra C{"k[U]", B.hopf, X, kU.comult, kU.counit, coaction};
    auto ok = verify_comodule_coalgebra(C);
    if (!ok.pass)
        throw Error("k[U] comodule coalgebra axioms fail: " + ok.condition);
    return C;
}

// ---------------------------------------------------------------------------
// Diagonal coactions on tensor powers
// ---------------------------------------------------------------------------

/// a₀⊗…⊗aₙ ↦ a₀₋₁⋯aₙ₋₁ ⊗ a₀₀⊗…⊗aₙ₀ on A^{⊗(n+1)}, for a left comodule algebra.
inline LinMap diagonal_left_coaction(const ComoduleAlgebra& A, int n)
{
    const Space& H = A.hopf.space;
    LinMap r = A.coaction;
    Space P = A.space;
    for (int i = 1; i <= n; ++i) {
        // (h ⊗ ã) ⊗ (h' ⊗ a) ↦ hh' ⊗ ã ⊗ a
        LinMap step = compose(tensor_map(A.hopf.mult, LinMap::identity(Space::tensor(P, A.space))),
                              permute_factors({H, P, H, A.space}, {0, 2, 1, 3}));
        r = compose(step, tensor_map(r, A.coaction));
        P = Space::tensor(P, A.space);
    }
    return r.relabeled(Space::power(A.space, n + 1), Space::tensor(H, Space::power(A.space, n + 1)));
}

/// c₀⊗…⊗cₙ ↦ c₀₀⊗…⊗cₙ₀ ⊗ c₀₁⋯cₙ₁ on C^{⊗(n+1)} for a right coaction.
inline LinMap diagonal_right_coaction(const Space& C, const HopfAlgebra& h, const LinMap& coaction, int n)
{
    const Space& H = h.space;
    LinMap r = coaction;
    Space P = C;
    for (int i = 1; i <= n; ++i) {
        LinMap step = compose(tensor_map(LinMap::identity(Space::tensor(P, C)), h.mult),
                              permute_factors({P, H, C, H}, {0, 2, 1, 3}));
        r = compose(step, tensor_map(r, coaction));
        P = Space::tensor(P, C);
    }
    return r.relabeled(Space::power(C, n + 1), Space::tensor(Space::power(C, n + 1), H));
}

inline LinMap diagonal_right_coaction(const ComoduleCoalgebra& C, int n)
{
    return diagonal_right_coaction(C.space, C.hopf, C.coaction, n);
}

// ---------------------------------------------------------------------------
// Cochain spaces
// ---------------------------------------------------------------------------

/// Maps A^{⊗(n+1)} → M stored as vectors with index tuple·dim M + k.
inline Space hom_space(const Space& A, const Space& M, int n) { return Space::tensor(Space::power(A, n + 1), M); }

/// Basis (in normal form) of the left-colinear maps A^{⊗(n+1)} → M.
inline Subspace colinear_hom_space(const ComoduleAlgebra& Ain, const ModuleComodule& M, int n)
{
    if (Ain.side != Side::left)
        throw PreconditionError("colinear cochains need a left comodule algebra; convert with as_left");
    const ComoduleAlgebra& A = Ain;
    const std::size_t dm = M.dim(), dh = A.hopf.dim();
    const std::size_t D = ipow(A.dim(), n + 1);
    require_within_cap(n, D * dm, "colinear cochains");
    note_system_size(D * dh * dm, "colinear cochains");
    LinMap diag = diagonal_left_coaction(A, n);
    RowEchelon e(D * dm);
    for (Index t = 0; t < D; ++t) {
        // Row (h, k) of the identity ∇_M(f(t)) = Σ t₋₁ ⊗ f(t₀).
        std::map<Index, std::vector<SparseVec::Entry>> rows;
        for (Index k2 = 0; k2 < dm; ++k2)
            for (const auto& [idx, v] : M.coaction.column(k2))
                rows[idx].emplace_back(t * dm + k2, v);
        for (const auto& [idx, c] : diag.column(t)) {
            Index h = idx / D, t2 = idx % D;
            for (Index k = 0; k < dm; ++k)
                rows[h * dm + k].emplace_back(t2 * dm + k, -c);
        }
        for (auto& [key, r] : rows)
            e.add(SparseVec::from_entries(std::move(r)));
    }
    Subspace s;
    s.ambient_dim = D * dm;
    s.basis = e.null_space(&s.coordinate_index);
    return s;
}

/// Basis of C^{⊗(n+1)} □_H M inside C^{⊗(n+1)} ⊗ M.
inline Subspace cotensor_space(const ComoduleCoalgebra& C, const ModuleComodule& M, int n)
{
    const std::size_t dm = M.dim(), dh = C.hopf.dim();
    const std::size_t D = ipow(C.dim(), n + 1);
    require_within_cap(n, D * dm, "cotensor chains");
    note_system_size(D * dh * dm, "cotensor chains");
    Space P = Space::power(C.space, n + 1);
    LinMap rho = tensor_map(diagonal_right_coaction(C, n), LinMap::identity(M.space));
    LinMap lam = tensor_map(LinMap::identity(P), M.coaction);
    return kernel(rho - lam.relabeled(rho.domain(), rho.codomain()));
}

inline LinMap as_map(const SparseVec& f, const Space& A, const Space& M)
{
    const std::size_t dm = M.dim();
    std::vector<std::vector<SparseVec::Entry>> cols(A.dim());
    for (const auto& [i, c] : f)
        cols[i / dm].emplace_back(i % dm, c);
    std::vector<SparseVec> v;
    for (auto& c : cols)
        v.push_back(SparseVec::from_entries(std::move(c)));
    return LinMap::from_columns(A, M, std::move(v));
}

// ---------------------------------------------------------------------------
// Coefficient conditions
// ---------------------------------------------------------------------------

/// Both sides of the anti-Yetter-Drinfeld identity as maps M⊗H → H⊗M:
/// ∇(m◁h) and S(h⁽³⁾) m₋₁ h⁽¹⁾ ⊗ m₀ ◁ h⁽²⁾.
inline std::pair<LinMap, LinMap> ayd_sides(const ModuleComodule& M)
{
    const HopfAlgebra& h = M.hopf;
    const std::size_t dh = h.dim(), dm = M.dim();
    Space dom = Space::tensor(M.space, h.space), cod = Space::tensor(h.space, M.space);
    LinMap lhs = compose(M.coaction, M.action);
    LinMap d2 = h.iterated_comult(2);
    LinMap rhs = build_map(dom, cod, [&](Index j) {
        Index m = j / dh, x = j % dh;
        VecBuilder b;
        for (const auto& [t, c] : d2.column(x)) {
            Index h1 = t / (dh * dh), h2 = (t / dh) % dh, h3 = t % dh;
            for (const auto& [u, d] : M.coaction.column(m)) {
                Index y = u / dm, m0 = u % dm;
                SparseVec left = h.product(h.antipode.column(h3), h.basis_product(y, h1));
                SparseVec right = M.act(m0, h2);
                b.add(kron(left, right, dm), c * d);
            }
        }
        return b.build();
    });
    return {lhs, rhs};
}

inline CheckResult check_sayd(const ModuleComodule& M)
{
    auto [lhs, rhs] = ayd_sides(M);
    auto r = compare_maps("AYD condition", lhs, rhs);
    if (!r.pass)
        return r;
    LinMap stab = compose(M.action, compose(flip(M.hopf.space, M.space), M.coaction));
    r = compare_maps("stability condition", stab, LinMap::identity(M.space));
    if (!r.pass)
        return r;
    return CheckResult::ok("SAYD");
}

/// The carrier-relative conditions through colinear cochains, degree by degree.
inline CheckResult check_ah_sayd(const ComoduleAlgebra& Ain, const ModuleComodule& M, int n_max)
{
    ComoduleAlgebra A = as_left(Ain);
    if (!same_hopf(A.hopf, M.hopf))
        throw PreconditionError("carrier and coefficients live over different Hopf algebras");
    auto [ayd_l, ayd_r] = ayd_sides(M);
    const Space& H = A.hopf.space;
    CheckResult ok = CheckResult::ok("A-relative SAYD");
    for (int n = 0; n <= n_max; ++n) {
        Subspace hom = colinear_hom_space(A, M, n);
        Space P = Space::power(A.space, n + 1);
        Space rest = Space::power(A.space, n);
        LinMap first = n == 0 ? A.coaction : tensor_map(A.coaction, LinMap::identity(rest));
        first = first.relabeled(P, Space::tensor(H, P));
        LinMap diag = diagonal_left_coaction(A, n);
        for (std::size_t j = 0; j < hom.dim(); ++j) {
            LinMap phi = as_map(hom.basis[j], P, M.space);
            // ã ↦ Σ φ(a₀ ⊗ b̃) ⊗ a₋₁ in M⊗H
            LinMap x = compose(flip(H, M.space), compose(tensor_map(LinMap::identity(H), phi), first));
            auto r = compare_maps("A-relative AYD condition", compose(ayd_l, x), compose(ayd_r, x), n);
            if (!r.pass)
                return detail::with_context(r, "φ" + std::to_string(j), n);
            LinMap stab = compose(M.action, compose(flip(H, M.space), compose(tensor_map(LinMap::identity(H), phi), diag)));
            r = compare_maps("A-relative stability condition", stab, phi, n);
            if (!r.pass)
                return detail::with_context(r, "φ" + std::to_string(j), n);
        }
        ok.notes.push_back("degree " + std::to_string(n) + ": " + std::to_string(hom.dim()) +
                           " colinear cochains, both conditions hold");
    }
    return ok;
}

inline CheckResult check_hc_sayd(const ComoduleCoalgebra& C, const ModuleComodule& M, int n_max)
{
    if (!same_hopf(C.hopf, M.hopf))
        throw PreconditionError("carrier and coefficients live over different Hopf algebras");
    const Space& H = C.hopf.space;
    auto [ayd_l, ayd_r] = ayd_sides(M);
    CheckResult ok = CheckResult::ok("C-relative SAYD");
    // c₀ ⊗ (m ⊗ c₁)
    LinMap spread = compose(permute_factors({C.space, H, M.space}, {0, 2, 1}), tensor_map(C.coaction, LinMap::identity(M.space)));
    LinMap idC = LinMap::identity(C.space);
    auto r = compare_maps("C-relative AYD condition", compose(tensor_map(idC, ayd_l), spread),
                          compose(tensor_map(idC, ayd_r), spread));
    if (!r.pass)
        return r;
    ok.notes.push_back("AYD condition holds on C⊗M");
    for (int n = 0; n <= n_max; ++n) {
        Subspace cot = cotensor_space(C, M, n);
        Space P = Space::power(C.space, n + 1);
        LinMap twist = compose(tensor_map(LinMap::identity(P), M.action),
                               compose(permute_factors({P, H, M.space}, {0, 2, 1}),
                                       tensor_map(diagonal_right_coaction(C, n), LinMap::identity(M.space))));
        for (std::size_t j = 0; j < cot.dim(); ++j) {
            SparseVec img = twist.apply(cot.basis[j]);
            if (img != cot.basis[j]) {
                auto w = CheckResult::mismatch("C-relative stability condition", format_vector(cot.basis[j], twist.domain()),
                                               img, cot.basis[j], twist.codomain(), n);
                return w;
            }
        }
        ok.notes.push_back("degree " + std::to_string(n) + ": " + std::to_string(cot.dim()) +
                           " cotensor chains are stable");
    }
    return ok;
}

/// h ↦ σ⁻¹ S_δ²(h) σ
inline LinMap twisted_square(const HopfAlgebra& h, const Character& d, const GroupLike& s)
{
    LinMap sd = twisted_antipode(h, d);
    return compose(h.left_mult(s.sigma_inverse), compose(compose(sd, sd), h.right_mult(s.sigma)));
}

inline CheckResult check_ah_involution(const HopfAlgebra& h, const ComoduleAlgebra& Ain, const Character& d,
                                       const GroupLike& s)
{
    ComoduleAlgebra A = as_left(Ain);
    if (!same_hopf(A.hopf, h))
        throw PreconditionError("carrier lives over a different Hopf algebra");
    if (!check_modular_pair(h, d, s).pass)
        throw PreconditionError("involution condition needs a modular pair");
    LinMap t = twisted_square(h, d, s);
    return compare_maps("A-relative involution", compose(tensor_map(t, LinMap::identity(A.space)), A.coaction),
                        A.coaction);
}

inline CheckResult check_hc_involution(const HopfAlgebra& h, const ComoduleCoalgebra& C, const Character& d,
                                       const GroupLike& s)
{
    if (!same_hopf(C.hopf, h))
        throw PreconditionError("carrier lives over a different Hopf algebra");
    if (!check_modular_pair(h, d, s).pass)
        throw PreconditionError("involution condition needs a modular pair");
    LinMap sd = twisted_antipode(h, d);
    LinMap idC = LinMap::identity(C.space);
    return compare_maps("C-relative involution", compose(tensor_map(idC, compose(sd, sd)), C.coaction),
                        compose(tensor_map(idC, conjugation(h, s)), C.coaction));
}

struct Subalgebra {
    ComoduleAlgebra algebra;
    Subspace inclusion; // basis of B inside A
};

/// B = {a : σ⁻¹ S_δ²(a₋₁) σ ⊗ a₀ = a₋₁ ⊗ a₀} with its induced structure.
inline Subalgebra compute_B(const ComoduleAlgebra& Ain, const Character& d, const GroupLike& s)
{
    ComoduleAlgebra A = as_left(Ain);
    const HopfAlgebra& h = A.hopf;
    if (!check_modular_pair(h, d, s).pass)
        throw PreconditionError("B needs a modular pair");
    LinMap t = twisted_square(h, d, s);
    LinMap defect = compose(tensor_map(t - LinMap::identity(h.space), LinMap::identity(A.space)), A.coaction);
    Subspace B = kernel(defect);

    std::vector<std::string> labels;
    for (const auto& v : B.basis)
        labels.push_back(format_vector(v, A.space));
    Space X(labels);
    const std::size_t db = B.dim(), da = A.dim();
    auto coords = [&](const SparseVec& v, const std::string& what) {
        auto c = B.coordinates(v);
        if (!c)
            throw Error("B is not closed: " + what + " = " + format_vector(v, A.space) + " leaves B");
        std::vector<SparseVec::Entry> e;
        for (std::size_t j = 0; j < c->size(); ++j)
            e.emplace_back(j, (*c)[j]);
        return SparseVec::from_entries(std::move(e));
    };
    LinMap mult = build_map(Space::tensor(X, X), X, [&](Index j) {
        return coords(A.product(B.basis[j / db], B.basis[j % db]), X.label(j / db) + "·" + X.label(j % db));
    });
    SparseVec unit = coords(A.unit, "1");
    LinMap coaction = build_map(X, Space::tensor(h.space, X), [&](Index j) {
        std::map<Index, std::vector<SparseVec::Entry>> legs;
        for (const auto& [idx, c] : A.coaction.apply(B.basis[j]))
            legs[idx / da].emplace_back(idx % da, c);
        VecBuilder b;
        for (auto& [hh, e] : legs)
            b.add(kron(SparseVec::unit(hh), coords(SparseVec::from_entries(std::move(e)), "a coaction leg of " + X.label(j)), db));
        return b.build();
    });
    ComoduleAlgebra out{"B ⊂ " + A.name, h, X, mult, unit, coaction, Side::left};
    auto ok = verify_comodule_algebra(out);
    if (!ok.pass)
        throw Error("B fails the comodule algebra axioms: " + ok.condition);
    return Subalgebra{out, B};
}

/// ã₀ ⊗ ã₋₁ g = ã₀ ⊗ g ã₋₁ on A^{⊗(n+1)} for n = 0 (and up to n_strict when given).
inline CheckResult check_commutative_coaction_algebra(const ComoduleAlgebra& Ain, int n_strict = 0)
{
    ComoduleAlgebra A = as_left(Ain);
    const HopfAlgebra& h = A.hopf;
    const std::size_t dh = h.dim();
    for (int n = 0; n <= n_strict; ++n) {
        const std::size_t D = ipow(A.dim(), n + 1);
        LinMap diag = diagonal_left_coaction(A, n);
        Space dom = Space::tensor(Space::power(A.space, n + 1), h.space);
        Space cod = diag.codomain();
        auto side = [&](bool right_mult) {
            return build_map(dom, cod, [&](Index j) {
                Index t = j / dh, g = j % dh;
                VecBuilder b;
                for (const auto& [idx, c] : diag.column(t)) {
                    SparseVec leg = right_mult ? h.basis_product(idx / D, g) : h.basis_product(g, idx / D);
                    b.add(kron(leg, SparseVec::unit(idx % D), D), c);
                }
                return b.build();
            });
        };
        auto r = compare_maps("commutative coaction", side(true), side(false), n);
        if (!r.pass)
            return r;
    }
    return CheckResult::ok("commutative coaction");
}

/// c̃₀ ⊗ h c̃₁ = c̃₀ ⊗ c̃₁ h on C^{⊗(n+1)} for n = 0 (and up to n_strict when given).
inline CheckResult check_commutative_coaction_coalgebra(const ComoduleCoalgebra& C, int n_strict = 0)
{
    const HopfAlgebra& h = C.hopf;
    const std::size_t dh = h.dim();
    for (int n = 0; n <= n_strict; ++n) {
        LinMap diag = diagonal_right_coaction(C, n);
        Space dom = Space::tensor(Space::power(C.space, n + 1), h.space);
        auto side = [&](bool left_mult) {
            return build_map(dom, diag.codomain(), [&](Index j) {
                Index t = j / dh, g = j % dh;
                VecBuilder b;
                for (const auto& [idx, c] : diag.column(t)) {
                    SparseVec leg = left_mult ? h.basis_product(g, idx % dh) : h.basis_product(idx % dh, g);
                    b.add(kron(SparseVec::unit(idx / dh), leg, dh), c);
                }
                return b.build();
            });
        };
        auto r = compare_maps("commutative coaction", side(true), side(false), n);
        if (!r.pass)
            return r;
    }
    return CheckResult::ok("commutative coaction");
}

/// b̃₋₁ a₋₁⁽¹⁾ ⊗ a₋₁⁽²⁾ ⊗ a₀ ⊗ b̃₀ = a₋₁⁽²⁾ b̃₋₁ ⊗ a₋₁⁽¹⁾ ⊗ a₀ ⊗ b̃₀ for a ∈ A and
/// b̃ ∈ A^{⊗n}, 1 ≤ n ≤ n_max. A right comodule algebra is checked through as_left.
inline CheckResult check_cocommutative_coaction_algebra(const ComoduleAlgebra& Ain, int n_max)
{
    ComoduleAlgebra A = as_left(Ain);
    const HopfAlgebra& h = A.hopf;
    const std::size_t dh = h.dim(), da = A.dim();
    for (int n = 1; n <= n_max; ++n) {
        require_within_cap(n, ipow(da, n + 1), "cocommutative coaction");
        const std::size_t D = ipow(da, n);
        LinMap diag = diagonal_left_coaction(A, n - 1);
        Space dom = Space::power(A.space, n + 1);
        Space cod = Space::tensor(Space::tensor(Space::tensor(h.space, h.space), A.space), Space::power(A.space, n));
        auto side = [&](bool lhs) {
            return build_map(dom, cod, [&](Index j) {
                Index a = j / D, bt = j % D;
                VecBuilder out;
                for (const auto& [u, c1] : A.coaction.column(a)) {
                    Index x = u / da, a0 = u % da;
                    for (const auto& [v, c2] : diag.column(bt)) {
                        Index hb = v / D, b0 = v % D;
                        for (const auto& [w, c3] : h.coproduct(x)) {
                            Index h1 = w / dh, h2 = w % dh;
                            SparseVec first = lhs ? h.basis_product(hb, h1) : h.basis_product(h2, hb);
                            Index second = lhs ? h2 : h1;
                            SparseVec tail = SparseVec::unit((second * da + a0) * D + b0);
                            out.add(kron(first, tail, dh * da * D), c1 * c2 * c3);
                        }
                    }
                }
                return out.build();
            });
        };
        auto r = compare_maps("cocommutative coaction", side(true), side(false), n);
        if (!r.pass)
            return r;
    }
    return CheckResult::ok("cocommutative coaction");
}

/// c̃₀ ⊗ d₀ ⊗ c̃₁ d₁⁽¹⁾ ⊗ d₁⁽²⁾ = c̃₀ ⊗ d₀ ⊗ d₁⁽²⁾ c̃₁ ⊗ d₁⁽¹⁾ for c̃ ∈ C^{⊗n},
/// d ∈ C, 0 ≤ n ≤ n_max.
inline CheckResult check_cocommutative_coaction_coalgebra(const ComoduleCoalgebra& C, int n_max)
{
    const HopfAlgebra& h = C.hopf;
    const std::size_t dh = h.dim(), dc = C.dim();
    for (int n = 0; n <= n_max; ++n) {
        require_within_cap(n, ipow(dc, n + 1), "cocommutative coaction");
        const std::size_t D = ipow(dc, n);
        // Diagonal coaction on C^{⊗n}; for n = 0 the empty tensor coacts by 1.
        LinMap diag = n == 0 ? LinMap::from_columns(Space::ground(), h.space, {h.unit})
                             : diagonal_right_coaction(C, n - 1);
        Space dom = Space::power(C.space, n + 1);
        Space cod = Space::tensor(dom, Space::tensor(h.space, h.space));
        auto side = [&](bool lhs) {
            return build_map(dom, cod, [&](Index j) {
                Index ct = j / dc, d = j % dc;
                VecBuilder out;
                for (const auto& [v, c1] : diag.column(ct)) {
                    Index c0 = v / dh, hc = v % dh;
                    for (const auto& [u, c2] : C.coaction.column(d)) {
                        Index d0 = u / dh, x = u % dh;
                        for (const auto& [w, c3] : h.coproduct(x)) {
                            Index h1 = w / dh, h2 = w % dh;
                            SparseVec third = lhs ? h.basis_product(hc, h1) : h.basis_product(h2, hc);
                            Index fourth = lhs ? h2 : h1;
                            Index head = c0 * dc + d0;
                            out.add(kron(SparseVec::unit(head), kron(third, SparseVec::unit(fourth), dh), dh * dh),
                                    c1 * c2 * c3);
                        }
                    }
                }
                return out.build();
            });
        };
        auto r = compare_maps("cocommutative coaction", side(true), side(false), n);
        if (!r.pass)
            return r;
    }
    return CheckResult::ok("cocommutative coaction");
}

} // namespace hcc
