#pragma once

// Finite-dimensional Hopf algebras given by structure constants, their axiom
// check, characters, group-likes and twisted antipodes.

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hcc/check.hpp"
#include "hcc/linalg.hpp"

namespace hcc {

struct HopfAlgebra {
    std::string name;
    Space space;
    LinMap mult;     // H⊗H → H
    SparseVec unit;  // 1 ∈ H
    LinMap comult;   // H → H⊗H
    LinMap counit;   // H → k
    LinMap antipode; // H → H
    /// S⁻¹, filled by make_hopf when S is invertible.
    std::optional<LinMap> antipode_inv;

    std::size_t dim() const { return space.dim(); }

    SparseVec product(const SparseVec& a, const SparseVec& b) const { return mult.apply(kron(a, b, dim())); }
    const SparseVec& basis_product(Index i, Index j) const { return mult.column(i * dim() + j); }
    const SparseVec& coproduct(Index i) const { return comult.column(i); }
    Scalar epsilon(Index i) const { return counit.column(i).at(0); }
    Scalar epsilon(const SparseVec& v) const { return counit.apply(v).at(0); }

    const LinMap& s_inv() const
    {
        if (!antipode_inv)
            throw PreconditionError(name + ": antipode is not invertible");
        return *antipode_inv;
    }

    LinMap unit_map() const
    {
        return LinMap::from_columns(Space::ground(), space, {unit});
    }

    /// x ↦ h·x
    LinMap left_mult(const SparseVec& h) const
    {
        std::vector<SparseVec> cols;
        for (Index j = 0; j < dim(); ++j)
            cols.push_back(product(h, SparseVec::unit(j)));
        return LinMap::from_columns(space, space, std::move(cols));
    }

    /// x ↦ x·h
    LinMap right_mult(const SparseVec& h) const
    {
        std::vector<SparseVec> cols;
        for (Index j = 0; j < dim(); ++j)
            cols.push_back(product(SparseVec::unit(j), h));
        return LinMap::from_columns(space, space, std::move(cols));
    }

    /// Δ^{(k)}: H → H^{⊗(k+1)}, with Δ^{(0)} = id.
    LinMap iterated_comult(int k) const
    {
        LinMap r = LinMap::identity(space);
        for (int i = 0; i < k; ++i)
            r = compose(tensor_map(comult, LinMap::identity(Space::power(space, i))), r);
        return r;
    }

    /// Multiplication of k factors, H^{⊗k} → H, with the empty product the unit.
    LinMap iterated_mult(int k) const
    {
        if (k == 0)
            return unit_map();
        LinMap r = LinMap::identity(space);
        for (int i = 1; i < k; ++i)
            r = compose(mult, tensor_map(r, LinMap::identity(space)));
        return r;
    }
};

/// Builds a Hopf algebra and precomputes S⁻¹ when it exists.
inline HopfAlgebra make_hopf(std::string name, Space space, LinMap mult, SparseVec unit, LinMap comult, LinMap counit,
                             LinMap antipode)
{
    HopfAlgebra h{std::move(name), std::move(space), std::move(mult), std::move(unit),
                  std::move(comult), std::move(counit), std::move(antipode), std::nullopt};
    if (h.antipode.rows() == h.antipode.cols() && h.antipode.rows() == h.space.dim()) {
        try {
            h.antipode_inv = inverse(h.antipode);
        } catch (const PreconditionError&) {
        }
    }
    return h;
}

inline HopfAlgebra to_field(const HopfAlgebra& h, std::uint64_t p)
{
    return make_hopf(h.name, h.space, h.mult.to_field(p), h.unit.to_field(p), h.comult.to_field(p),
                     h.counit.to_field(p), h.antipode.to_field(p));
}

namespace detail {

inline void require_shape(const LinMap& f, std::size_t rows, std::size_t cols, const char* what)
{
    if (f.rows() != rows || f.cols() != cols)
        throw DimensionError(std::string(what) + " has shape " + std::to_string(f.rows()) + "x" +
                             std::to_string(f.cols()) + ", expected " + std::to_string(rows) + "x" +
                             std::to_string(cols));
}

/// The same map with the codomain identified with `cod` (e.g. k⊗H ≅ H).
inline LinMap onto(const LinMap& f, const Space& cod) { return f.relabeled(f.domain(), cod); }

} // namespace detail

inline void require_hopf_shapes(const HopfAlgebra& h)
{
    const std::size_t d = h.dim();
    if (d == 0)
        throw DimensionError("Hopf algebra of dimension 0");
    detail::require_shape(h.mult, d, d * d, "multiplication");
    detail::require_shape(h.comult, d * d, d, "comultiplication");
    detail::require_shape(h.counit, 1, d, "counit");
    detail::require_shape(h.antipode, d, d, "antipode");
    if (!h.unit.is_zero() && h.unit.max_index() >= d)
        throw DimensionError("unit vector out of range");
}

/// Checks every Hopf algebra axiom as an exact matrix identity. The first
/// failing axiom is reported with the basis tuple where it fails.
inline CheckResult verify_hopf(const HopfAlgebra& h)
{
    require_hopf_shapes(h);
    const Space& H = h.space;
    const LinMap id = LinMap::identity(H);
    const LinMap u = h.unit_map();
    const Space k = Space::ground();

    std::vector<CheckResult> steps;
    steps.push_back(compare_maps("associativity", compose(h.mult, tensor_map(h.mult, id)),
                                 compose(h.mult, tensor_map(id, h.mult))));
    steps.push_back(compare_maps("left unit", detail::onto(compose(h.mult, tensor_map(u, id)), H).relabeled(H, H), id));
    steps.push_back(
        compare_maps("right unit", detail::onto(compose(h.mult, tensor_map(id, u)), H).relabeled(H, H), id));
    steps.push_back(compare_maps("coassociativity", compose(tensor_map(h.comult, id), h.comult),
                                 compose(tensor_map(id, h.comult), h.comult)));
    steps.push_back(compare_maps("left counit", detail::onto(compose(tensor_map(h.counit, id), h.comult), H), id));
    steps.push_back(compare_maps("right counit", detail::onto(compose(tensor_map(id, h.counit), h.comult), H), id));

    LinMap middle_flip = tensor_map(tensor_map(id, flip(H, H)), id);
    steps.push_back(compare_maps("comultiplication is multiplicative", compose(h.comult, h.mult),
                                 compose(tensor_map(h.mult, h.mult), compose(middle_flip, tensor_map(h.comult, h.comult)))));
    steps.push_back(compare_maps("comultiplication is unital", compose(h.comult, u), tensor_map(u, u).relabeled(k, Space::tensor(H, H))));
    steps.push_back(compare_maps("counit is multiplicative", compose(h.counit, h.mult),
                                 detail::onto(tensor_map(h.counit, h.counit), k)));
    steps.push_back(compare_maps("counit is unital", compose(h.counit, u), LinMap::identity(k)));

    LinMap ue = compose(u, h.counit);
    steps.push_back(compare_maps("antipode", compose(h.mult, compose(tensor_map(h.antipode, id), h.comult)), ue));
    steps.push_back(compare_maps("antipode", compose(h.mult, compose(tensor_map(id, h.antipode), h.comult)), ue));

    for (auto& r : steps)
        if (!r.pass)
            return r;
    auto ok = CheckResult::ok("Hopf algebra axioms");
    ok.notes.push_back(h.name + ": all axioms hold");
    return ok;
}

inline CheckResult check_commutative(const HopfAlgebra& h)
{
    return compare_maps("commutativity", h.mult, compose(h.mult, flip(h.space, h.space)));
}

inline CheckResult check_cocommutative(const HopfAlgebra& h)
{
    return compare_maps("cocommutativity", compose(flip(h.space, h.space), h.comult), h.comult);
}

// ---------------------------------------------------------------------------
// Characters and group-likes
// ---------------------------------------------------------------------------

struct Character {
    LinMap delta; // H → k

    Scalar operator()(Index i) const { return delta.column(i).at(0); }
    Scalar operator()(const SparseVec& v) const { return delta.apply(v).at(0); }
};

struct GroupLike {
    SparseVec sigma;
    SparseVec sigma_inverse;
};

inline Character character_from_values(const HopfAlgebra& h, const std::vector<Scalar>& values)
{
    if (values.size() != h.dim())
        throw DimensionError("character needs one value per basis element");
    std::vector<SparseVec> cols;
    for (const auto& v : values)
        cols.push_back(v.is_zero() ? SparseVec() : SparseVec::unit(0, v));
    return Character{LinMap::from_columns(h.space, Space::ground(), std::move(cols))};
}

inline Character counit_character(const HopfAlgebra& h) { return Character{h.counit}; }

inline CheckResult check_character(const HopfAlgebra& h, const Character& d)
{
    detail::require_shape(d.delta, 1, h.dim(), "character");
    auto r = compare_maps("character is multiplicative", compose(d.delta, h.mult),
                          detail::onto(tensor_map(d.delta, d.delta), Space::ground()));
    if (!r.pass)
        return r;
    Scalar at_one = d(h.unit);
    if (!at_one.is_one())
        return CheckResult::mismatch("character is unital", "1", SparseVec::unit(0, at_one), SparseVec::unit(0),
                                     Space::ground());
    return CheckResult::ok("character");
}

inline CheckResult check_grouplike(const HopfAlgebra& h, const GroupLike& s)
{
    const Space HH = Space::tensor(h.space, h.space);
    SparseVec ds = h.comult.apply(s.sigma);
    SparseVec ss = kron(s.sigma, s.sigma, h.dim());
    if (ds != ss)
        return CheckResult::mismatch("group-like coproduct", "σ", ds, ss, HH);
    Scalar e = h.epsilon(s.sigma);
    if (!e.is_one())
        return CheckResult::mismatch("group-like counit", "σ", SparseVec::unit(0, e), SparseVec::unit(0),
                                     Space::ground());
    SparseVec l = h.product(s.sigma, s.sigma_inverse), r = h.product(s.sigma_inverse, s.sigma);
    if (l != h.unit)
        return CheckResult::mismatch("group-like inverse", "σ·σ⁻¹", l, h.unit, h.space);
    if (r != h.unit)
        return CheckResult::mismatch("group-like inverse", "σ⁻¹·σ", r, h.unit, h.space);
    return CheckResult::ok("group-like");
}

/// σ with σ⁻¹ = S(σ).
inline GroupLike grouplike(const HopfAlgebra& h, const SparseVec& sigma)
{
    GroupLike g{sigma, h.antipode.apply(sigma)};
    auto r = check_grouplike(h, g);
    if (!r.pass)
        throw PreconditionError("not a group-like element: " + r.condition);
    return g;
}

inline GroupLike unit_grouplike(const HopfAlgebra& h) { return GroupLike{h.unit, h.unit}; }

/// Index of a basis element by label.
inline Index basis_index(const Space& s, const std::string& label)
{
    auto labels = s.labels();
    for (Index i = 0; i < labels.size(); ++i)
        if (labels[i] == label)
            return i;
    throw PreconditionError("no basis element named \"" + label + "\"");
}

inline SparseVec basis_vector(const Space& s, const std::string& label) { return SparseVec::unit(basis_index(s, label)); }

// ---------------------------------------------------------------------------
// Twisted antipode and modular pairs
// ---------------------------------------------------------------------------

enum class TwistConvention {
    first_leg,  // S_δ(h) = δ(h⁽¹⁾) S(h⁽²⁾)
    second_leg, // S_δ(h) = δ(h⁽²⁾) S(h⁽¹⁾)
};

#ifdef HCC_TWIST_MIRROR
inline constexpr TwistConvention default_twist = TwistConvention::second_leg;
#else
inline constexpr TwistConvention default_twist = TwistConvention::first_leg;
#endif

inline LinMap twisted_antipode(const HopfAlgebra& h, const Character& d, TwistConvention conv = default_twist)
{
    auto ok = check_character(h, d);
    if (!ok.pass)
        throw PreconditionError("twisted antipode needs a character: " + ok.condition + " fails");
    const std::size_t n = h.dim();
    std::vector<SparseVec> cols(n);
    for (Index j = 0; j < n; ++j) {
        VecBuilder b;
        for (const auto& [t, c] : h.coproduct(j)) {
            Index first = t / n, second = t % n;
            Index twisted = conv == TwistConvention::first_leg ? first : second;
            Index other = conv == TwistConvention::first_leg ? second : first;
            Scalar w = c * d(twisted);
            if (!w.is_zero())
                b.add(h.antipode.column(other), w);
        }
        cols[j] = b.build();
    }
    return LinMap::from_columns(h.space, h.space, std::move(cols));
}

inline CheckResult check_modular_pair(const HopfAlgebra& h, const Character& d, const GroupLike& s)
{
    Scalar v = d(s.sigma);
    if (!v.is_one())
        return CheckResult::mismatch("modular pair δ(σ) = 1", "σ", SparseVec::unit(0, v), SparseVec::unit(0),
                                     Space::ground());
    (void)h;
    return CheckResult::ok("modular pair δ(σ) = 1");
}

/// h ↦ σ h σ⁻¹
inline LinMap conjugation(const HopfAlgebra& h, const GroupLike& s)
{
    return compose(h.left_mult(s.sigma), h.right_mult(s.sigma_inverse));
}

// ---------------------------------------------------------------------------
// Derived Hopf algebras
// ---------------------------------------------------------------------------

/// Co-opposite: flipped comultiplication and antipode S⁻¹.
inline HopfAlgebra cop(const HopfAlgebra& h)
{
    return make_hopf(h.name + "^cop", h.space, h.mult, h.unit, compose(flip(h.space, h.space), h.comult), h.counit,
                     h.s_inv());
}

/// Linear dual with the transposed structure maps on the dual basis.
inline HopfAlgebra dual(const HopfAlgebra& h)
{
    std::vector<std::string> labels;
    for (const auto& l : h.space.labels())
        labels.push_back(l + "*");
    Space D(labels);
    Space DD = Space::tensor(D, D);
    Space k = Space::ground();
    LinMap mult = h.comult.transpose().relabeled(DD, D);
    LinMap comult = h.mult.transpose().relabeled(D, DD);
    SparseVec unit = h.counit.transpose().column(0);
    LinMap counit = h.unit_map().transpose().relabeled(D, k);
    LinMap s = h.antipode.transpose().relabeled(D, D);
    return make_hopf(h.name + "*", D, mult, unit, comult, counit, s);
}

inline HopfAlgebra tensor_hopf(const HopfAlgebra& a, const HopfAlgebra& b)
{
    Space s = Space::tensor(a.space, b.space);
    LinMap swap_mid = permute_factors({a.space, b.space, a.space, b.space}, {0, 2, 1, 3});
    LinMap mult = compose(tensor_map(a.mult, b.mult), swap_mid).relabeled(Space::tensor(s, s), s);
    LinMap comult = compose(permute_factors({a.space, a.space, b.space, b.space}, {0, 2, 1, 3}),
                            tensor_map(a.comult, b.comult))
                        .relabeled(s, Space::tensor(s, s));
    LinMap counit = tensor_map(a.counit, b.counit).relabeled(s, Space::ground());
    return make_hopf(a.name + "⊗" + b.name, s, mult, kron(a.unit, b.unit, b.dim()), comult, counit,
                     tensor_map(a.antipode, b.antipode));
}

/// All characters whose values on the basis lie in {-1, 0, 1}, found by
/// backtracking over basis elements in order.
inline std::vector<Character> enumerate_characters(const HopfAlgebra& h)
{
    const std::size_t n = h.dim();
    std::vector<Character> out;
    std::vector<int> val(n, 0);
    auto consistent = [&](Index upto) {
        // Every relation e_i e_j = Σ c_k e_k with all indices ≤ upto.
        for (Index i = 0; i <= upto; ++i) {
            for (Index j = 0; j <= upto; ++j) {
                if (i != upto && j != upto)
                    continue;
                const SparseVec& p = h.basis_product(i, j);
                if (!p.is_zero() && p.max_index() > upto)
                    continue;
                Scalar s;
                for (const auto& [k, c] : p)
                    s += c * Scalar(val[k]);
                if (s != Scalar(val[i] * val[j]))
                    return false;
            }
        }
        if (!h.unit.is_zero() && h.unit.max_index() == upto) {
            Scalar s;
            for (const auto& [k, c] : h.unit)
                s += c * Scalar(val[k]);
            if (!s.is_one())
                return false;
        }
        return true;
    };
    std::function<void(Index)> go = [&](Index i) {
        if (i == n) {
            std::vector<Scalar> v(val.begin(), val.end());
            out.push_back(character_from_values(h, v));
            return;
        }
        for (int x : {1, -1, 0}) {
            val[i] = x;
            if (consistent(i))
                go(i + 1);
        }
        val[i] = 0;
    };
    go(0);
    return out;
}

/// Group-likes are the characters of the dual; same value restriction.
inline std::vector<GroupLike> enumerate_grouplikes(const HopfAlgebra& h)
{
    std::vector<GroupLike> out;
    for (const auto& c : enumerate_characters(dual(h))) {
        std::vector<SparseVec::Entry> e;
        for (Index i = 0; i < h.dim(); ++i)
            e.emplace_back(i, c(i));
        SparseVec s = SparseVec::from_entries(std::move(e));
        out.push_back(GroupLike{s, h.antipode.apply(s)});
    }
    return out;
}

} // namespace hcc
