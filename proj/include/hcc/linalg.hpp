#pragma once

// Finite-dimensional linear algebra over exact scalars: labelled spaces,
// sparse vectors and maps, tensor products, and exact elimination.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "hcc/error.hpp"
#include "hcc/scalar.hpp"

namespace hcc {

using Index = std::size_t;

// ---------------------------------------------------------------------------
// Sparse vectors
// ---------------------------------------------------------------------------

/// Sorted list of (index, nonzero scalar) pairs.
class SparseVec {
public:
    using Entry = std::pair<Index, Scalar>;

    SparseVec() = default;

    static SparseVec unit(Index i, Scalar c = 1)
    {
        SparseVec v;
        if (!c.is_zero())
            v.entries_.emplace_back(i, std::move(c));
        return v;
    }

    /// Builds from unsorted, possibly repeated entries; repeated indices are summed.
    static SparseVec from_entries(std::vector<Entry> raw)
    {
        std::stable_sort(raw.begin(), raw.end(), [](const Entry& a, const Entry& b) { return a.first < b.first; });
        SparseVec v;
        for (auto& [i, c] : raw) {
            if (!v.entries_.empty() && v.entries_.back().first == i)
                v.entries_.back().second += c;
            else
                v.entries_.emplace_back(i, std::move(c));
        }
        v.drop_zeros();
        return v;
    }

    const std::vector<Entry>& entries() const { return entries_; }
    auto begin() const { return entries_.begin(); }
    auto end() const { return entries_.end(); }
    std::size_t nnz() const { return entries_.size(); }
    bool is_zero() const { return entries_.empty(); }

    Scalar at(Index i) const
    {
        auto it = std::lower_bound(entries_.begin(), entries_.end(), i,
                                   [](const Entry& e, Index k) { return e.first < k; });
        return (it != entries_.end() && it->first == i) ? it->second : Scalar();
    }

    Index max_index() const { return entries_.empty() ? 0 : entries_.back().first; }

    /// this += c * other
    void axpy(const Scalar& c, const SparseVec& other)
    {
        if (c.is_zero() || other.is_zero())
            return;
        std::vector<Entry> out;
        out.reserve(entries_.size() + other.entries_.size());
        auto a = entries_.begin(), ae = entries_.end();
        auto b = other.entries_.begin(), be = other.entries_.end();
        while (a != ae || b != be) {
            if (b == be || (a != ae && a->first < b->first)) {
                out.push_back(std::move(*a++));
            } else if (a == ae || b->first < a->first) {
                out.emplace_back(b->first, c * b->second);
                ++b;
            } else {
                Scalar s = a->second + c * b->second;
                if (!s.is_zero())
                    out.emplace_back(a->first, std::move(s));
                ++a;
                ++b;
            }
        }
        entries_ = std::move(out);
    }

    SparseVec scaled(const Scalar& c) const
    {
        if (c.is_zero())
            return {};
        SparseVec r = *this;
        for (auto& e : r.entries_)
            e.second *= c;
        return r;
    }

    friend SparseVec operator+(SparseVec a, const SparseVec& b)
    {
        a.axpy(Scalar(1), b);
        return a;
    }
    friend SparseVec operator-(SparseVec a, const SparseVec& b)
    {
        a.axpy(Scalar(-1), b);
        return a;
    }
    SparseVec to_field(std::uint64_t p) const
    {
        std::vector<Entry> e;
        e.reserve(entries_.size());
        for (const auto& [i, c] : entries_)
            e.emplace_back(i, c.to_field(p));
        return from_entries(std::move(e));
    }

    friend bool operator==(const SparseVec& a, const SparseVec& b) { return a.entries_ == b.entries_; }
    friend bool operator!=(const SparseVec& a, const SparseVec& b) { return !(a == b); }

    Scalar dot(const SparseVec& o) const
    {
        Scalar s;
        auto a = entries_.begin();
        auto b = o.entries_.begin();
        while (a != entries_.end() && b != o.entries_.end()) {
            if (a->first < b->first)
                ++a;
            else if (b->first < a->first)
                ++b;
            else
                s += (a++)->second * (b++)->second;
        }
        return s;
    }

private:
    void drop_zeros()
    {
        entries_.erase(std::remove_if(entries_.begin(), entries_.end(), [](const Entry& e) { return e.second.is_zero(); }),
                       entries_.end());
    }

    std::vector<Entry> entries_;
};

/// Accumulates terms in arbitrary order; cheaper than repeated axpy for scattered sums.
class VecBuilder {
public:
    void add(Index i, const Scalar& c)
    {
        if (!c.is_zero())
            terms_.emplace_back(i, c);
    }
    void add(const SparseVec& v, const Scalar& c = 1)
    {
        if (c.is_zero())
            return;
        for (const auto& [i, x] : v)
            terms_.emplace_back(i, c.is_one() ? x : x * c);
    }
    SparseVec build() { return SparseVec::from_entries(std::move(terms_)); }

private:
    std::vector<SparseVec::Entry> terms_;
};

// ---------------------------------------------------------------------------
// Spaces
// ---------------------------------------------------------------------------

/// A vector space with a labelled basis. Tensor products keep their factors
/// (flattened, so reassociation is the identity) and render labels on demand.
class Space {
public:
    Space() = default;

    explicit Space(std::vector<std::string> labels) : labels_(std::move(labels)), dim_(labels_.size())
    {
        std::vector<std::string> sorted = labels_;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw DimensionError("basis labels must be distinct");
    }

    /// Space with labels prefix0, prefix1, ...
    static Space numbered(std::size_t dim, const std::string& prefix)
    {
        std::vector<std::string> l;
        l.reserve(dim);
        for (std::size_t i = 0; i < dim; ++i)
            l.push_back(prefix + std::to_string(i));
        return Space(std::move(l));
    }

    /// The ground field as a one-dimensional space.
    static Space ground() { return Space({"1"}); }

    static Space tensor(const Space& a, const Space& b)
    {
        Space r;
        auto append = [&r](const Space& s) {
            if (s.factors_.empty())
                r.factors_.push_back(s);
            else
                r.factors_.insert(r.factors_.end(), s.factors_.begin(), s.factors_.end());
        };
        append(a);
        append(b);
        r.dim_ = a.dim_ * b.dim_;
        return r;
    }

    static Space power(const Space& a, int k)
    {
        if (k <= 0)
            return ground();
        Space r = a;
        for (int i = 1; i < k; ++i)
            r = tensor(r, a);
        return r;
    }

    std::size_t dim() const { return dim_; }
    bool is_product() const { return !factors_.empty(); }
    const std::vector<Space>& factors() const { return factors_; }

    /// Basis indices of each tensor factor for a flattened row-major index.
    std::vector<Index> split(Index i) const
    {
        if (factors_.empty())
            return {i};
        std::vector<Index> out(factors_.size());
        for (std::size_t f = factors_.size(); f-- > 0;) {
            out[f] = i % factors_[f].dim();
            i /= factors_[f].dim();
        }
        return out;
    }

    std::string label(Index i) const
    {
        if (i >= dim_)
            throw DimensionError("basis index out of range");
        if (factors_.empty())
            return labels_[i];
        auto parts = split(i);
        std::string s;
        for (std::size_t f = 0; f < parts.size(); ++f) {
            if (f)
                s += "⊗";
            s += factors_[f].label(parts[f]);
        }
        return s;
    }

    std::vector<std::string> labels() const
    {
        if (factors_.empty())
            return labels_;
        std::vector<std::string> out;
        out.reserve(dim_);
        for (Index i = 0; i < dim_; ++i)
            out.push_back(label(i));
        return out;
    }

    friend bool operator==(const Space& a, const Space& b)
    {
        return a.dim_ == b.dim_ && a.labels_ == b.labels_ && a.factors_ == b.factors_;
    }
    friend bool operator!=(const Space& a, const Space& b) { return !(a == b); }

private:
    std::vector<std::string> labels_;
    std::vector<Space> factors_;
    std::size_t dim_ = 0;
};

/// a ⊗ b as a vector, b indexed in a space of dimension `dim_b`.
inline SparseVec kron(const SparseVec& a, const SparseVec& b, std::size_t dim_b)
{
    std::vector<SparseVec::Entry> e;
    e.reserve(a.nnz() * b.nnz());
    for (const auto& [i, x] : a)
        for (const auto& [j, y] : b)
            e.emplace_back(i * dim_b + j, x * y);
    return SparseVec::from_entries(std::move(e));
}

/// Digits of a row-major tuple index, most significant first.
inline std::vector<Index> tuple_digits(Index t, std::size_t base, int len)
{
    std::vector<Index> d(len);
    for (int i = len; i-- > 0;) {
        d[i] = t % base;
        t /= base;
    }
    return d;
}

inline Index tuple_index(const std::vector<Index>& digits, std::size_t base)
{
    Index t = 0;
    for (Index d : digits)
        t = t * base + d;
    return t;
}

inline std::size_t ipow(std::size_t b, int e)
{
    std::size_t r = 1;
    for (int i = 0; i < e; ++i)
        r *= b;
    return r;
}

/// Human-readable rendering of a vector in a labelled space.
inline std::string format_vector(const SparseVec& v, const Space& s)
{
    if (v.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [i, c] : v) {
        std::string cs = c.str();
        bool neg = !cs.empty() && cs[0] == '-';
        if (!first)
            os << (neg ? " - " : " + ");
        else if (neg)
            os << "-";
        std::string mag = neg ? cs.substr(1) : cs;
        if (mag != "1")
            os << mag << "·";
        os << (i < s.dim() ? s.label(i) : "#" + std::to_string(i));
        first = false;
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Linear maps
// ---------------------------------------------------------------------------

/// Sparse matrix between labelled spaces, stored by columns.
class LinMap {
public:
    LinMap() = default;
    LinMap(Space domain, Space codomain)
        : dom_(std::move(domain)), cod_(std::move(codomain)), cols_(dom_.dim())
    {
    }

    static LinMap identity(const Space& s)
    {
        LinMap m(s, s);
        for (Index i = 0; i < s.dim(); ++i)
            m.cols_[i] = SparseVec::unit(i);
        return m;
    }

    static LinMap zero(const Space& dom, const Space& cod) { return LinMap(dom, cod); }

    static LinMap from_columns(Space dom, Space cod, std::vector<SparseVec> cols)
    {
        LinMap m(std::move(dom), std::move(cod));
        if (cols.size() != m.dom_.dim())
            throw DimensionError("column count does not match domain dimension");
        m.cols_ = std::move(cols);
        for (const auto& c : m.cols_)
            m.check_column(c);
        return m;
    }

    /// Entries given as (row, column, value); repeated positions are summed.
    static LinMap from_triplets(Space dom, Space cod, const std::vector<std::tuple<Index, Index, Scalar>>& t)
    {
        LinMap m(std::move(dom), std::move(cod));
        std::vector<std::vector<SparseVec::Entry>> raw(m.dom_.dim());
        for (const auto& [r, c, v] : t) {
            if (r >= m.cod_.dim() || c >= m.dom_.dim())
                throw DimensionError("matrix entry index out of range");
            raw[c].emplace_back(r, v);
        }
        for (Index c = 0; c < raw.size(); ++c)
            m.cols_[c] = SparseVec::from_entries(std::move(raw[c]));
        return m;
    }

    const Space& domain() const { return dom_; }
    const Space& codomain() const { return cod_; }
    std::size_t rows() const { return cod_.dim(); }
    std::size_t cols() const { return dom_.dim(); }

    const SparseVec& column(Index j) const { return cols_.at(j); }
    void set_column(Index j, SparseVec v)
    {
        check_column(v);
        cols_.at(j) = std::move(v);
    }
    const std::vector<SparseVec>& columns() const { return cols_; }

    Scalar entry(Index i, Index j) const { return cols_.at(j).at(i); }

    SparseVec apply(const SparseVec& v) const
    {
        VecBuilder b;
        for (const auto& [j, c] : v) {
            if (j >= cols_.size())
                throw DimensionError("vector index exceeds map domain");
            b.add(cols_[j], c);
        }
        return b.build();
    }

    std::size_t nnz() const
    {
        std::size_t n = 0;
        for (const auto& c : cols_)
            n += c.nnz();
        return n;
    }

    LinMap transpose() const
    {
        std::vector<std::tuple<Index, Index, Scalar>> t;
        for (Index j = 0; j < cols_.size(); ++j)
            for (const auto& [i, c] : cols_[j])
                t.emplace_back(j, i, c);
        return from_triplets(cod_, dom_, t);
    }

    LinMap scaled(const Scalar& c) const
    {
        LinMap r(dom_, cod_);
        for (Index j = 0; j < cols_.size(); ++j)
            r.cols_[j] = cols_[j].scaled(c);
        return r;
    }

    friend LinMap operator+(const LinMap& a, const LinMap& b)
    {
        a.require_same_shape(b);
        LinMap r = a;
        for (Index j = 0; j < r.cols_.size(); ++j)
            r.cols_[j].axpy(Scalar(1), b.cols_[j]);
        return r;
    }
    friend LinMap operator-(const LinMap& a, const LinMap& b) { return a + b.scaled(Scalar(-1)); }

    /// Entrywise equality of matrices; domains and codomains must agree in dimension.
    friend bool operator==(const LinMap& a, const LinMap& b)
    {
        return a.cols_.size() == b.cols_.size() && a.cod_.dim() == b.cod_.dim() && a.cols_ == b.cols_;
    }
    friend bool operator!=(const LinMap& a, const LinMap& b) { return !(a == b); }

    /// First column where two equally shaped maps differ.
    std::optional<Index> first_difference(const LinMap& other) const
    {
        require_same_shape(other);
        for (Index j = 0; j < cols_.size(); ++j)
            if (cols_[j] != other.cols_[j])
                return j;
        return std::nullopt;
    }

    /// Same matrix viewed between other spaces of equal dimensions.
    LinMap relabeled(Space dom, Space cod) const
    {
        if (dom.dim() != dom_.dim() || cod.dim() != cod_.dim())
            throw DimensionError("relabeling must preserve dimensions");
        LinMap r(std::move(dom), std::move(cod));
        r.cols_ = cols_;
        return r;
    }

    /// Image of every entry in GF(p); p = 0 leaves the map unchanged.
    LinMap to_field(std::uint64_t p) const
    {
        LinMap r(dom_, cod_);
        for (Index j = 0; j < cols_.size(); ++j)
            r.cols_[j] = cols_[j].to_field(p);
        return r;
    }

    void require_same_shape(const LinMap& b) const
    {
        if (cols_.size() != b.cols_.size() || cod_.dim() != b.cod_.dim())
            throw DimensionError("maps have different shapes");
    }

private:
    void check_column(const SparseVec& v) const
    {
        if (!v.is_zero() && v.max_index() >= cod_.dim())
            throw DimensionError("matrix entry index out of range");
    }

    Space dom_, cod_;
    std::vector<SparseVec> cols_;
};

/// Map whose j-th column is column(j).
template <class F>
LinMap build_map(Space dom, Space cod, F&& column)
{
    std::vector<SparseVec> cols(dom.dim());
    for (Index j = 0; j < cols.size(); ++j)
        cols[j] = column(j);
    return LinMap::from_columns(std::move(dom), std::move(cod), std::move(cols));
}

/// g ∘ f
inline LinMap compose(const LinMap& g, const LinMap& f)
{
    if (g.cols() != f.rows())
        throw DimensionError("composition of maps with mismatched inner spaces");
    std::vector<SparseVec> cols;
    cols.reserve(f.cols());
    for (Index j = 0; j < f.cols(); ++j)
        cols.push_back(g.apply(f.column(j)));
    return LinMap::from_columns(f.domain(), g.codomain(), std::move(cols));
}

/// f ⊗ g with row-major indexing on both domain and codomain.
inline LinMap tensor_map(const LinMap& f, const LinMap& g)
{
    Space dom = Space::tensor(f.domain(), g.domain());
    Space cod = Space::tensor(f.codomain(), g.codomain());
    std::vector<SparseVec> cols(dom.dim());
    const std::size_t gr = g.rows(), gc = g.cols();
    for (Index a = 0; a < f.cols(); ++a) {
        for (Index b = 0; b < gc; ++b) {
            std::vector<SparseVec::Entry> e;
            for (const auto& [i, x] : f.column(a))
                for (const auto& [k, y] : g.column(b))
                    e.emplace_back(i * gr + k, x * y);
            cols[a * gc + b] = SparseVec::from_entries(std::move(e));
        }
    }
    return LinMap::from_columns(std::move(dom), std::move(cod), std::move(cols));
}

/// Matrix power with the identity as zeroth power.
inline LinMap power(const LinMap& f, int k)
{
    if (f.rows() != f.cols())
        throw DimensionError("power of a non-square map");
    LinMap r = LinMap::identity(f.domain());
    for (int i = 0; i < k; ++i)
        r = compose(f, r);
    return r;
}

/// Reorders tensor factors: output factor j is input factor perm[j].
inline LinMap permute_factors(const std::vector<Space>& factors, const std::vector<int>& perm)
{
    if (perm.size() != factors.size())
        throw DimensionError("permutation length does not match factor count");
    Space dom = factors.empty() ? Space::ground() : factors[0];
    for (std::size_t f = 1; f < factors.size(); ++f)
        dom = Space::tensor(dom, factors[f]);
    Space cod = factors.empty() ? Space::ground() : factors[perm[0]];
    for (std::size_t f = 1; f < perm.size(); ++f)
        cod = Space::tensor(cod, factors[perm[f]]);
    std::vector<SparseVec> cols(dom.dim());
    std::vector<Index> idx(factors.size());
    for (Index i = 0; i < dom.dim(); ++i) {
        Index rest = i;
        for (std::size_t f = factors.size(); f-- > 0;) {
            idx[f] = rest % factors[f].dim();
            rest /= factors[f].dim();
        }
        Index out = 0;
        for (std::size_t j = 0; j < perm.size(); ++j)
            out = out * factors[perm[j]].dim() + idx[perm[j]];
        cols[i] = SparseVec::unit(out);
    }
    return LinMap::from_columns(std::move(dom), std::move(cod), std::move(cols));
}

/// The flip a⊗b ↦ b⊗a.
inline LinMap flip(const Space& a, const Space& b) { return permute_factors({a, b}, {1, 0}); }

// ---------------------------------------------------------------------------
// Elimination
// ---------------------------------------------------------------------------

/// Incrementally maintained reduced row echelon form of a set of sparse rows.
/// Pivot rows are normalized (pivot entry 1) and contain no other pivot column.
class RowEchelon {
public:
    explicit RowEchelon(std::size_t ncols) : ncols_(ncols), row_of_pivot_(ncols, npos) {}

    std::size_t ncols() const { return ncols_; }
    std::size_t rank() const { return rows_.size(); }

    /// Reduces `row` against the current pivots; returns the remainder.
    SparseVec reduce(SparseVec row) const
    {
        std::vector<std::pair<Index, Scalar>> hits;
        for (const auto& [c, v] : row)
            if (row_of_pivot_[c] != npos)
                hits.emplace_back(c, v);
        for (const auto& [c, v] : hits)
            row.axpy(-v, rows_[row_of_pivot_[c]]);
        return row;
    }

    /// Adds a row; returns true when it increased the rank.
    bool add(SparseVec row)
    {
        if (!row.is_zero() && row.max_index() >= ncols_)
            throw DimensionError("row index exceeds column count");
        row = reduce(std::move(row));
        if (row.is_zero())
            return false;
        Index p = row.begin()->first;
        row = row.scaled(row.begin()->second.inverse());
        for (auto& r : rows_) {
            Scalar c = r.at(p);
            if (!c.is_zero())
                r.axpy(-c, row);
        }
        row_of_pivot_[p] = rows_.size();
        pivots_.push_back(p);
        rows_.push_back(std::move(row));
        return true;
    }

    bool is_pivot(Index c) const { return row_of_pivot_[c] != npos; }
    const std::vector<Index>& pivots() const { return pivots_; }
    const SparseVec& pivot_row(Index c) const { return rows_[row_of_pivot_[c]]; }

    /// Null space basis: one vector per free column j, with 1 at j, 0 at every
    /// other free column, and the pivot entries forced by the rows.
    std::vector<SparseVec> null_space(std::vector<Index>* free_columns = nullptr) const
    {
        std::vector<std::vector<SparseVec::Entry>> raw(ncols_);
        std::vector<Index> free;
        std::vector<Index> position(ncols_, npos);
        for (Index c = 0; c < ncols_; ++c)
            if (row_of_pivot_[c] == npos) {
                position[c] = free.size();
                free.push_back(c);
                raw[c].emplace_back(c, Scalar(1));
            }
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            Index p = pivots_[r];
            for (const auto& [c, v] : rows_[r])
                if (c != p)
                    raw[c].emplace_back(p, -v);
        }
        std::vector<SparseVec> out;
        out.reserve(free.size());
        for (Index c : free)
            out.push_back(SparseVec::from_entries(std::move(raw[c])));
        if (free_columns)
            *free_columns = free;
        return out;
    }

private:
    static constexpr Index npos = static_cast<Index>(-1);
    std::size_t ncols_;
    std::vector<SparseVec> rows_;
    std::vector<Index> pivots_;
    std::vector<Index> row_of_pivot_;
};

/// A subspace of an ambient space in normal form: every basis vector has a
/// distinguished coordinate where it is 1 and all other basis vectors are 0,
/// so coordinates of a member are read off directly.
struct Subspace {
    std::size_t ambient_dim = 0;
    std::vector<SparseVec> basis;
    std::vector<Index> coordinate_index;

    std::size_t dim() const { return basis.size(); }

    /// Coordinates of `v` when it lies in the subspace.
    std::optional<std::vector<Scalar>> coordinates(const SparseVec& v) const
    {
        std::vector<Scalar> c(basis.size());
        VecBuilder rebuilt;
        for (std::size_t j = 0; j < basis.size(); ++j) {
            c[j] = v.at(coordinate_index[j]);
            rebuilt.add(basis[j], c[j]);
        }
        if (rebuilt.build() != v)
            return std::nullopt;
        return c;
    }

    SparseVec coordinate_vector(const SparseVec& v) const
    {
        auto c = coordinates(v);
        if (!c)
            throw PreconditionError("vector is not in the subspace");
        std::vector<SparseVec::Entry> e;
        for (std::size_t j = 0; j < c->size(); ++j)
            e.emplace_back(j, (*c)[j]);
        return SparseVec::from_entries(std::move(e));
    }

    SparseVec embed(const SparseVec& coords) const
    {
        VecBuilder b;
        for (const auto& [j, c] : coords)
            b.add(basis.at(j), c);
        return b.build();
    }

    static Subspace whole(std::size_t n)
    {
        Subspace s;
        s.ambient_dim = n;
        for (Index i = 0; i < n; ++i) {
            s.basis.push_back(SparseVec::unit(i));
            s.coordinate_index.push_back(i);
        }
        return s;
    }
};

/// Kernel of the linear system whose rows are given.
inline Subspace kernel_of_rows(std::size_t ncols, const std::vector<SparseVec>& rows)
{
    RowEchelon e(ncols);
    for (const auto& r : rows)
        e.add(r);
    Subspace s;
    s.ambient_dim = ncols;
    s.basis = e.null_space(&s.coordinate_index);
    return s;
}

inline Subspace kernel(const LinMap& f)
{
    LinMap t = f.transpose();
    return kernel_of_rows(f.cols(), t.columns());
}

/// Exact basis of ker f.
inline std::vector<SparseVec> kernel_basis(const LinMap& f) { return kernel(f).basis; }

inline std::size_t rank(const LinMap& f)
{
    // Row rank equals column rank; eliminate whichever side is shorter.
    RowEchelon e(f.rows());
    for (const auto& c : f.columns())
        e.add(c);
    return e.rank();
}

/// Rank of a family of vectors of length n.
inline std::size_t rank_of(std::size_t n, const std::vector<SparseVec>& vs)
{
    RowEchelon e(n);
    for (const auto& v : vs)
        e.add(v);
    return e.rank();
}

struct Membership {
    bool member = false;
    std::vector<Scalar> coefficients;
};

/// Decides whether v lies in span(basis); on success returns exact coefficients
/// with v = Σ coefficients[j]·basis[j].
inline Membership membership(const SparseVec& v, const std::vector<SparseVec>& basis, std::size_t dim)
{
    if (!v.is_zero() && v.max_index() >= dim)
        throw DimensionError("vector does not live in the stated space");
    for (const auto& b : basis)
        if (!b.is_zero() && b.max_index() >= dim)
            throw DimensionError("basis vector does not live in the stated space");
    // Unknowns c_0..c_{k-1}, and column k carries the right-hand side.
    const std::size_t k = basis.size();
    std::vector<std::vector<SparseVec::Entry>> rows(dim);
    for (std::size_t j = 0; j < k; ++j)
        for (const auto& [i, x] : basis[j])
            rows[i].emplace_back(j, x);
    for (const auto& [i, x] : v)
        rows[i].emplace_back(k, x);
    RowEchelon e(k + 1);
    for (auto& r : rows)
        if (!r.empty())
            e.add(SparseVec::from_entries(std::move(r)));
    Membership m;
    if (e.is_pivot(k))
        return m;
    m.member = true;
    m.coefficients.assign(k, Scalar());
    for (Index p : e.pivots())
        m.coefficients[p] = e.pivot_row(p).at(k);
    return m;
}

/// Inverse of a square invertible map.
inline LinMap inverse(const LinMap& f)
{
    const std::size_t n = f.rows();
    if (n != f.cols())
        throw DimensionError("inverse of a non-square map");
    // Row-reduce [f | I] to [I | f^{-1}].
    LinMap ft = f.transpose();
    RowEchelon e(2 * n);
    for (Index r = 0; r < n; ++r) {
        std::vector<SparseVec::Entry> row;
        // Row r of f: entries f(r, c) for all c.
        for (const auto& [c, x] : ft.column(r))
            row.emplace_back(c, x);
        row.emplace_back(n + r, Scalar(1));
        e.add(SparseVec::from_entries(std::move(row)));
    }
    for (Index c = 0; c < n; ++c)
        if (!e.is_pivot(c))
            throw PreconditionError("map is not invertible");
    std::vector<std::tuple<Index, Index, Scalar>> t;
    for (Index c = 0; c < n; ++c)
        for (const auto& [j, x] : e.pivot_row(c))
            if (j >= n)
                t.emplace_back(c, j - n, x);
    return LinMap::from_triplets(f.codomain(), f.domain(), t);
}

} // namespace hcc
