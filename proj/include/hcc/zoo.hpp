#pragma once

// Finite groups and the Hopf algebras built from them: group algebras,
// function algebras, bicrossed products of exact factorizations, and
// Sweedler's four-dimensional algebra.

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "hcc/hopf.hpp"

namespace hcc {

class FiniteGroup {
public:
    FiniteGroup() = default;

    /// Validates the table: closure, associativity, a two-sided identity and inverses.
    FiniteGroup(std::string name, std::vector<std::string> elements, std::vector<std::vector<int>> table)
        : name_(std::move(name)), elements_(std::move(elements)), table_(std::move(table))
    {
        const int n = size();
        if (n == 0)
            throw PreconditionError("a group has at least one element");
        if (static_cast<int>(table_.size()) != n)
            throw PreconditionError("multiplication table has wrong number of rows");
        for (const auto& row : table_) {
            if (static_cast<int>(row.size()) != n)
                throw PreconditionError("multiplication table has a short row");
            for (int v : row)
                if (v < 0 || v >= n)
                    throw PreconditionError("multiplication table is not closed");
        }
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
                        throw PreconditionError("multiplication table is not associative at (" + elements_[a] + ", " +
                                                elements_[b] + ", " + elements_[c] + ")");
        identity_ = -1;
        for (int e = 0; e < n && identity_ < 0; ++e) {
            bool ok = true;
            for (int a = 0; a < n && ok; ++a)
                ok = table_[e][a] == a && table_[a][e] == a;
            if (ok)
                identity_ = e;
        }
        if (identity_ < 0)
            throw PreconditionError("multiplication table has no identity");
        inverse_.assign(n, -1);
        for (int a = 0; a < n; ++a) {
            for (int b = 0; b < n; ++b)
                if (table_[a][b] == identity_ && table_[b][a] == identity_)
                    inverse_[a] = b;
            if (inverse_[a] < 0)
                throw PreconditionError("element " + elements_[a] + " has no inverse");
        }
    }

    const std::string& name() const { return name_; }
    int size() const { return static_cast<int>(elements_.size()); }
    int mul(int a, int b) const { return table_[a][b]; }
    int inv(int a) const { return inverse_[a]; }
    int identity() const { return identity_; }
    const std::string& element(int a) const { return elements_[a]; }
    const std::vector<std::string>& elements() const { return elements_; }

    int index_of(const std::string& e) const
    {
        auto it = std::find(elements_.begin(), elements_.end(), e);
        if (it == elements_.end())
            throw PreconditionError("no element " + e + " in " + name_);
        return static_cast<int>(it - elements_.begin());
    }

    bool is_abelian() const
    {
        for (int a = 0; a < size(); ++a)
            for (int b = 0; b < size(); ++b)
                if (mul(a, b) != mul(b, a))
                    return false;
        return true;
    }

    /// Checks that `elems` is closed under products and inverses.
    bool is_subgroup(const std::vector<int>& elems) const
    {
        std::vector<bool> in(size(), false);
        for (int e : elems)
            in[e] = true;
        if (!in[identity_])
            return false;
        for (int a : elems) {
            if (!in[inv(a)])
                return false;
            for (int b : elems)
                if (!in[mul(a, b)])
                    return false;
        }
        return true;
    }

    /// The group formed by a subset, relabelled 0..k-1 in the given order.
    FiniteGroup subgroup(const std::vector<int>& elems, const std::string& name) const
    {
        if (!is_subgroup(elems))
            throw PreconditionError("subset is not a subgroup of " + name_);
        std::map<int, int> pos;
        for (std::size_t i = 0; i < elems.size(); ++i)
            pos[elems[i]] = static_cast<int>(i);
        std::vector<std::string> names;
        std::vector<std::vector<int>> t(elems.size(), std::vector<int>(elems.size()));
        for (std::size_t i = 0; i < elems.size(); ++i) {
            names.push_back(elements_[elems[i]]);
            for (std::size_t j = 0; j < elems.size(); ++j)
                t[i][j] = pos.at(mul(elems[i], elems[j]));
        }
        return FiniteGroup(name, names, t);
    }

private:
    std::string name_;
    std::vector<std::string> elements_;
    std::vector<std::vector<int>> table_;
    std::vector<int> inverse_;
    int identity_ = 0;
};

/// ℤ/n with elements 1, a, a^2, ...
inline FiniteGroup cyclic_group(int n, const std::string& gen = "a")
{
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i)
        names.push_back(i == 0 ? "1" : i == 1 ? gen : gen + "^" + std::to_string(i));
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            t[i][j] = (i + j) % n;
    return FiniteGroup("Z/" + std::to_string(n), names, t);
}

inline FiniteGroup trivial_group() { return FiniteGroup("1", {"1"}, {{0}}); }

namespace detail {

inline std::string cycle_notation(const std::vector<int>& p)
{
    std::string s;
    std::vector<bool> seen(p.size(), false);
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (seen[i] || p[i] == static_cast<int>(i))
            continue;
        s += "(";
        for (std::size_t j = i; !seen[j]; j = p[j]) {
            seen[j] = true;
            s += std::to_string(j + 1);
        }
        s += ")";
    }
    return s.empty() ? "()" : s;
}

} // namespace detail

/// Symmetric group on n letters; elements in lexicographic order of their
/// images, named in cycle notation. The product is composition: (pq)(i) = p(q(i)).
inline FiniteGroup symmetric_group(int n)
{
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> perms;
    do
        perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    std::map<std::vector<int>, int> index;
    for (std::size_t i = 0; i < perms.size(); ++i)
        index[perms[i]] = static_cast<int>(i);
    std::vector<std::string> names;
    for (const auto& q : perms)
        names.push_back(detail::cycle_notation(q));
    std::vector<std::vector<int>> t(perms.size(), std::vector<int>(perms.size()));
    for (std::size_t a = 0; a < perms.size(); ++a)
        for (std::size_t b = 0; b < perms.size(); ++b) {
            std::vector<int> c(n);
            for (int i = 0; i < n; ++i)
                c[i] = perms[a][perms[b][i]];
            t[a][b] = index.at(c);
        }
    return FiniteGroup("S" + std::to_string(n), names, t);
}

inline FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b)
{
    const int na = a.size(), nb = b.size();
    std::vector<std::string> names;
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < nb; ++j)
            names.push_back("(" + a.element(i) + "," + b.element(j) + ")");
    std::vector<std::vector<int>> t(na * nb, std::vector<int>(na * nb));
    for (int x = 0; x < na * nb; ++x)
        for (int y = 0; y < na * nb; ++y)
            t[x][y] = a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb);
    return FiniteGroup(a.name() + "x" + b.name(), names, t);
}

// ---------------------------------------------------------------------------
// Hopf algebras from groups
// ---------------------------------------------------------------------------

/// k[G]: Δg = g⊗g, ε(g) = 1, S(g) = g⁻¹.
inline HopfAlgebra group_algebra(const FiniteGroup& G)
{
    const int n = G.size();
    Space H(G.elements());
    Space HH = Space::tensor(H, H);
    std::vector<SparseVec> mult(n * n), comult(n), counit(n), s(n);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b)
            mult[a * n + b] = SparseVec::unit(G.mul(a, b));
        comult[a] = SparseVec::unit(static_cast<Index>(a) * n + a);
        counit[a] = SparseVec::unit(0);
        s[a] = SparseVec::unit(G.inv(a));
    }
    return make_hopf("k[" + G.name() + "]", H, LinMap::from_columns(HH, H, mult), SparseVec::unit(G.identity()),
                     LinMap::from_columns(H, HH, comult), LinMap::from_columns(H, Space::ground(), counit),
                     LinMap::from_columns(H, H, s));
}

/// k^G: delta functions e_g, pointwise product, Δ(e_g) = Σ_{ab=g} e_a⊗e_b.
inline HopfAlgebra function_hopf(const FiniteGroup& G)
{
    const int n = G.size();
    std::vector<std::string> labels;
    for (const auto& e : G.elements())
        labels.push_back("e_" + e);
    Space H(labels);
    Space HH = Space::tensor(H, H);
    std::vector<SparseVec> mult(n * n), comult(n), counit(n), s(n);
    std::vector<std::vector<SparseVec::Entry>> co(n);
    for (int a = 0; a < n; ++a) {
        mult[a * n + a] = SparseVec::unit(a);
        for (int b = 0; b < n; ++b)
            co[G.mul(a, b)].emplace_back(static_cast<Index>(a) * n + b, Scalar(1));
        if (a == G.identity())
            counit[a] = SparseVec::unit(0);
        s[a] = SparseVec::unit(G.inv(a));
    }
    for (int g = 0; g < n; ++g)
        comult[g] = SparseVec::from_entries(co[g]);
    std::vector<SparseVec::Entry> unit;
    for (int a = 0; a < n; ++a)
        unit.emplace_back(a, Scalar(1));
    return make_hopf("k^" + G.name(), H, LinMap::from_columns(HH, H, mult), SparseVec::from_entries(unit),
                     LinMap::from_columns(H, HH, comult), LinMap::from_columns(H, Space::ground(), counit),
                     LinMap::from_columns(H, H, s));
}

inline HopfAlgebra trivial_hopf()
{
    auto h = group_algebra(trivial_group());
    h.name = "k";
    return h;
}

/// Sweedler's algebra on {1, g, x, gx}: g² = 1, x² = 0, xg = −gx,
/// Δg = g⊗g, Δx = x⊗1 + g⊗x, S(g) = g, S(x) = −gx.
inline HopfAlgebra sweedler_h4()
{
    Space H({"1", "g", "x", "gx"});
    Space HH = Space::tensor(H, H);
    enum { one, g, x, gx };
    // Words in normal form g^i x^j; an element is (sign, g-power, x-power).
    auto prod = [](int a, int b) -> SparseVec {
        int ga = (a == g || a == gx), xa = (a == x || a == gx);
        int gb = (b == g || b == gx), xb = (b == x || b == gx);
        if (xa && xb)
            return {};
        // g^ga x^xa g^gb x^xb: moving x past g flips the sign.
        Scalar sign = (xa && gb) ? Scalar(-1) : Scalar(1);
        int gp = (ga + gb) % 2, xp = xa + xb;
        int idx = xp ? (gp ? gx : x) : (gp ? g : one);
        return SparseVec::unit(idx, sign);
    };
    std::vector<SparseVec> mult(16);
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            mult[a * 4 + b] = prod(a, b);
    auto t = [](int a, int b) { return static_cast<Index>(a) * 4 + b; };
    std::vector<SparseVec> comult(4);
    comult[one] = SparseVec::unit(t(one, one));
    comult[g] = SparseVec::unit(t(g, g));
    comult[x] = SparseVec::from_entries({{t(x, one), 1}, {t(g, x), 1}});
    // Δ(gx) = (g⊗g)(x⊗1 + g⊗x) = gx⊗g + 1⊗gx
    comult[gx] = SparseVec::from_entries({{t(gx, g), 1}, {t(one, gx), 1}});
    std::vector<SparseVec> counit = {SparseVec::unit(0), SparseVec::unit(0), {}, {}};
    // S(gx) = S(x)S(g) = −gx·g = −g·(−g x) = x
    std::vector<SparseVec> s = {SparseVec::unit(one), SparseVec::unit(g), SparseVec::unit(gx, Scalar(-1)),
                                SparseVec::unit(x)};
    return make_hopf("H4", H, LinMap::from_columns(HH, H, mult), SparseVec::unit(one),
                     LinMap::from_columns(H, HH, comult), LinMap::from_columns(H, Space::ground(), counit),
                     LinMap::from_columns(H, H, s));
}

// ---------------------------------------------------------------------------
// Bicrossed products
// ---------------------------------------------------------------------------

/// k^F ⋈ k[U] for an exact factorization G = U·F. For f ∈ F, u ∈ U the
/// product f·u refactors uniquely as (f ▷ u)(f ◁ u) with f ▷ u ∈ U, f ◁ u ∈ F.
struct BicrossedProduct {
    HopfAlgebra hopf;
    FiniteGroup group;
    FiniteGroup F;
    FiniteGroup U;
    std::vector<std::vector<int>> act;   // act[f][u] = f ▷ u (index in U)
    std::vector<std::vector<int>> coact; // coact[f][u] = f ◁ u (index in F)

    /// Basis index of e_f # u.
    Index index(int f, int u) const { return static_cast<Index>(f) * U.size() + u; }
};

inline BicrossedProduct bicrossed_product(const FiniteGroup& G, const std::vector<int>& f_elems,
                                          const std::vector<int>& u_elems)
{
    BicrossedProduct B;
    B.group = G;
    B.F = G.subgroup(f_elems, "F");
    B.U = G.subgroup(u_elems, "U");
    const int nf = B.F.size(), nu = B.U.size();
    // Unique factorization g = u·f.
    std::vector<std::pair<int, int>> split(G.size(), {-1, -1});
    for (int u = 0; u < nu; ++u)
        for (int f = 0; f < nf; ++f) {
            int g = G.mul(u_elems[u], f_elems[f]);
            if (split[g].first >= 0)
                throw PreconditionError("factorization of " + G.element(g) + " is not unique");
            split[g] = {u, f};
        }
    for (int g = 0; g < G.size(); ++g)
        if (split[g].first < 0)
            throw PreconditionError(G.element(g) + " does not factor through the two subgroups");
    B.act.assign(nf, std::vector<int>(nu));
    B.coact.assign(nf, std::vector<int>(nu));
    for (int f = 0; f < nf; ++f)
        for (int u = 0; u < nu; ++u) {
            auto [u2, f2] = split[G.mul(f_elems[f], u_elems[u])];
            B.act[f][u] = u2;
            B.coact[f][u] = f2;
        }

    const FiniteGroup& F = B.F;
    const FiniteGroup& U = B.U;
    std::vector<std::string> labels;
    for (int f = 0; f < nf; ++f)
        for (int u = 0; u < nu; ++u)
            labels.push_back("e_" + F.element(f) + "#" + U.element(u));
    Space H(labels);
    Space HH = Space::tensor(H, H);
    const std::size_t n = H.dim();
    auto idx = [&](int f, int u) { return B.index(f, u); };

    std::vector<SparseVec> mult(n * n), comult(n), counit(n), s(n);
    for (int f = 0; f < nf; ++f)
        for (int u = 0; u < nu; ++u) {
            // (e_f#u)(e_f'#u') = δ_{f◁u, f'} e_f#uu'
            for (int f2 = 0; f2 < nf; ++f2)
                for (int u2 = 0; u2 < nu; ++u2)
                    if (B.coact[f][u] == f2)
                        mult[idx(f, u) * n + idx(f2, u2)] = SparseVec::unit(idx(f, U.mul(u, u2)));
            // Δ(e_f#u) = Σ_{f1 f2 = f} (e_f1 # f2▷u) ⊗ (e_f2 # u)
            std::vector<SparseVec::Entry> co;
            for (int f1 = 0; f1 < nf; ++f1) {
                int f2 = F.mul(F.inv(f1), f);
                co.emplace_back(idx(f1, B.act[f2][u]) * n + idx(f2, u), Scalar(1));
            }
            comult[idx(f, u)] = SparseVec::from_entries(co);
            if (f == F.identity())
                counit[idx(f, u)] = SparseVec::unit(0);
            // S(e_f#u) = e_{(f◁u)⁻¹} # (f▷u)⁻¹
            s[idx(f, u)] = SparseVec::unit(idx(F.inv(B.coact[f][u]), U.inv(B.act[f][u])));
        }
    std::vector<SparseVec::Entry> unit;
    for (int f = 0; f < nf; ++f)
        unit.emplace_back(idx(f, U.identity()), Scalar(1));
    B.hopf = make_hopf("k^F#k[U] (" + G.name() + ")", H, LinMap::from_columns(HH, H, mult),
                       SparseVec::from_entries(unit), LinMap::from_columns(H, HH, comult),
                       LinMap::from_columns(H, Space::ground(), counit), LinMap::from_columns(H, H, s));
    return B;
}

/// S3 = U·F with F = A3 = {(), (123), (132)} and U = {(), (12)}.
inline BicrossedProduct bicrossed_s3()
{
    FiniteGroup S3 = symmetric_group(3);
    std::vector<int> f = {S3.index_of("()"), S3.index_of("(123)"), S3.index_of("(132)")};
    std::vector<int> u = {S3.index_of("()"), S3.index_of("(12)")};
    return bicrossed_product(S3, f, u);
}

/// The same group with the roles swapped: F = {(), (12)}, U = A3.
inline BicrossedProduct bicrossed_s3_swapped()
{
    FiniteGroup S3 = symmetric_group(3);
    std::vector<int> f = {S3.index_of("()"), S3.index_of("(12)")};
    std::vector<int> u = {S3.index_of("()"), S3.index_of("(123)"), S3.index_of("(132)")};
    return bicrossed_product(S3, f, u);
}

/// S4 = U·F with F = ⟨(1234)⟩ and U = S3 fixing 4. Neither factor is normal,
/// so both actions are nontrivial and the result is neither commutative nor
/// cocommutative.
inline BicrossedProduct bicrossed_s4()
{
    FiniteGroup S4 = symmetric_group(4);
    std::vector<int> f, u;
    for (const char* e : {"()", "(1234)", "(13)(24)", "(1432)"})
        f.push_back(S4.index_of(e));
    for (const char* e : {"()", "(12)", "(13)", "(23)", "(123)", "(132)"})
        u.push_back(S4.index_of(e));
    return bicrossed_product(S4, f, u);
}

/// Direct product factorization, where both actions are trivial.
inline BicrossedProduct bicrossed_direct(const FiniteGroup& F, const FiniteGroup& U)
{
    FiniteGroup G = direct_product(F, U);
    std::vector<int> f, u;
    for (int i = 0; i < F.size(); ++i)
        f.push_back(i * U.size() + U.identity());
    for (int j = 0; j < U.size(); ++j)
        u.push_back(F.identity() * U.size() + j);
    return bicrossed_product(G, f, u);
}

} // namespace hcc
