#pragma once

// Structure files: JSON with sparse structure tensors, rationals as strings,
// and SHA-256 references from (co)module files to their Hopf algebra.

#include <openssl/evp.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hcc/cocyclic.hpp"
#include "hcc/cohomology.hpp"

namespace hcc::io {

using json = nlohmann::json;

inline constexpr const char* schema_version = "hcc-structure/1";

inline std::string canonical(const json& j) { return j.dump(2) + "\n"; }

inline std::string sha256_hex(const std::string& text)
{
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_MD_CTX* ctx = EVP_MD_CTX_new();
    if (!ctx || EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr) != 1 ||
        EVP_DigestUpdate(ctx, text.data(), text.size()) != 1 || EVP_DigestFinal_ex(ctx, md, &len) != 1) {
        EVP_MD_CTX_free(ctx);
        throw Error("SHA-256 failed");
    }
    EVP_MD_CTX_free(ctx);
    std::string out;
    char buf[3];
    for (unsigned i = 0; i < len; ++i) {
        std::snprintf(buf, sizeof buf, "%02x", md[i]);
        out += buf;
    }
    return out;
}

/// Hash of the canonical form, so whitespace and key order in a file do not matter.
inline std::string content_hash(const json& j) { return sha256_hex(canonical(j)); }

// ---------------------------------------------------------------------------
// Field handling
// ---------------------------------------------------------------------------

inline std::uint64_t field_of(const std::string& f)
{
    if (f == "Q")
        return 0;
    if (f.size() > 4 && f.rfind("GF(", 0) == 0 && f.back() == ')') {
        std::string digits = f.substr(3, f.size() - 4);
        if (digits.find_first_not_of("0123456789") == std::string::npos && digits.size() < 19) {
            std::uint64_t p = std::stoull(digits);
            bool prime = p >= 2;
            for (std::uint64_t q = 2; q * q <= p && prime; ++q)
                prime = p % q != 0;
            if (prime)
                return p;
        }
    }
    throw ParseError("unsupported field \"" + f + "\" (expected \"Q\" or \"GF(p)\" with p prime)");
}

inline std::string field_name(std::uint64_t p) { return p == 0 ? "Q" : "GF(" + std::to_string(p) + ")"; }

inline std::uint64_t field_of(const HopfAlgebra& h)
{
    for (const auto& col : h.mult.columns())
        for (const auto& [i, c] : col)
            if (!c.is_rational())
                return c.modulus();
    for (const auto& col : h.comult.columns())
        for (const auto& [i, c] : col)
            if (!c.is_rational())
                return c.modulus();
    return 0;
}

// ---------------------------------------------------------------------------
// Tensors
// ---------------------------------------------------------------------------

/// A multi-index position: an integer for a single factor, an array otherwise.
inline json position(Index i, const std::vector<std::size_t>& dims)
{
    if (dims.size() == 1)
        return i;
    json a = json::array();
    std::vector<Index> d(dims.size());
    for (std::size_t k = dims.size(); k-- > 0;) {
        d[k] = i % dims[k];
        i /= dims[k];
    }
    for (auto x : d)
        a.push_back(x);
    return a;
}

inline Index read_position(const json& p, const std::vector<std::size_t>& dims, const std::string& where)
{
    std::vector<Index> d;
    if (p.is_number_unsigned() || p.is_number_integer()) {
        if (dims.size() != 1)
            throw ParseError(where + ": expected an index array of length " + std::to_string(dims.size()));
        if (p.is_number_integer() && p.get<long long>() < 0)
            throw ParseError(where + ": negative index");
        d.push_back(p.get<Index>());
    } else if (p.is_array()) {
        if (p.size() != dims.size())
            throw ParseError(where + ": expected an index array of length " + std::to_string(dims.size()));
        for (const auto& x : p) {
            if (!x.is_number_integer() || x.get<long long>() < 0)
                throw ParseError(where + ": indices must be nonnegative integers");
            d.push_back(x.get<Index>());
        }
    } else {
        throw ParseError(where + ": malformed index");
    }
    Index r = 0;
    for (std::size_t k = 0; k < dims.size(); ++k) {
        if (d[k] >= dims[k])
            throw ParseError(where + ": index " + std::to_string(d[k]) + " out of range (dimension " +
                             std::to_string(dims[k]) + ")");
        r = r * dims[k] + d[k];
    }
    return r;
}

inline Scalar read_scalar(const json& v, std::uint64_t p, const std::string& where)
{
    if (!v.is_string())
        throw ParseError(where + ": scalars are written as strings \"p/q\"");
    try {
        Scalar s = Scalar::parse(v.get<std::string>());
        return p ? s.to_field(p) : s;
    } catch (const ScalarError& e) {
        throw ParseError(where + ": " + e.what());
    }
}

/// [[row, col, "value"], ...] in column order.
inline json map_to_json(const LinMap& f, const std::vector<std::size_t>& row_dims,
                        const std::vector<std::size_t>& col_dims)
{
    json a = json::array();
    for (Index c = 0; c < f.cols(); ++c)
        for (const auto& [r, v] : f.column(c))
            a.push_back(json::array({position(r, row_dims), position(c, col_dims), v.str()}));
    return a;
}

inline LinMap map_from_json(const json& a, const Space& dom, const Space& cod, const std::vector<std::size_t>& row_dims,
                            const std::vector<std::size_t>& col_dims, std::uint64_t p, const std::string& where)
{
    if (!a.is_array())
        throw ParseError(where + ": expected an array of [row, col, value] entries");
    std::vector<std::tuple<Index, Index, Scalar>> t;
    for (std::size_t k = 0; k < a.size(); ++k) {
        const auto& e = a[k];
        std::string at = where + " entry " + std::to_string(k);
        if (!e.is_array() || e.size() != 3)
            throw ParseError(at + ": expected [row, col, value]");
        t.emplace_back(read_position(e[0], row_dims, at), read_position(e[1], col_dims, at), read_scalar(e[2], p, at));
    }
    return LinMap::from_triplets(dom, cod, t);
}

/// [[index, "value"], ...]
inline json vec_to_json(const SparseVec& v, const std::vector<std::size_t>& dims)
{
    json a = json::array();
    for (const auto& [i, c] : v)
        a.push_back(json::array({position(i, dims), c.str()}));
    return a;
}

inline SparseVec vec_from_json(const json& a, const std::vector<std::size_t>& dims, std::uint64_t p,
                               const std::string& where)
{
    if (!a.is_array())
        throw ParseError(where + ": expected an array of [index, value] entries");
    VecBuilder b;
    for (std::size_t k = 0; k < a.size(); ++k) {
        const auto& e = a[k];
        std::string at = where + " entry " + std::to_string(k);
        if (!e.is_array() || e.size() != 2)
            throw ParseError(at + ": expected [index, value]");
        b.add(read_position(e[0], dims, at), read_scalar(e[1], p, at));
    }
    return b.build();
}

// ---------------------------------------------------------------------------
// Objects
// ---------------------------------------------------------------------------

namespace detail {

inline json header(const std::string& kind, const std::string& name, std::uint64_t p, const Space& s)
{
    return json{{"schema", schema_version}, {"kind", kind}, {"name", name}, {"field", field_name(p)},
                {"dim", s.dim()}, {"basis", s.labels()}};
}

inline const json& need(const json& j, const std::string& key)
{
    if (!j.contains(key))
        throw ParseError("missing field \"" + key + "\"");
    return j.at(key);
}

inline Space read_basis(const json& j)
{
    const json& b = need(j, "basis");
    if (!b.is_array())
        throw ParseError("\"basis\" must be an array of labels");
    std::vector<std::string> labels;
    for (const auto& l : b) {
        if (!l.is_string())
            throw ParseError("basis labels must be strings");
        labels.push_back(l.get<std::string>());
    }
    if (j.contains("dim") && (!j["dim"].is_number_unsigned() || j["dim"].get<std::size_t>() != labels.size()))
        throw ParseError("\"dim\" disagrees with the number of basis labels");
    try {
        return Space(labels);
    } catch (const Error& e) {
        throw ParseError(std::string("basis: ") + e.what());
    }
}

inline std::string read_kind(const json& j)
{
    if (!j.is_object())
        throw ParseError("a structure file holds one JSON object");
    const json& s = need(j, "schema");
    if (!s.is_string() || s.get<std::string>() != schema_version)
        throw ParseError("unsupported schema version (expected \"" + std::string(schema_version) + "\")");
    const json& k = need(j, "kind");
    if (!k.is_string())
        throw ParseError("\"kind\" must be a string");
    return k.get<std::string>();
}

inline std::string read_name(const json& j) { return j.contains("name") ? j["name"].get<std::string>() : "unnamed"; }

inline std::uint64_t read_field(const json& j) { return field_of(need(j, "field").get<std::string>()); }

inline std::string witness_text(const CheckResult& r)
{
    std::ostringstream os;
    os << r;
    return os.str();
}

} // namespace detail

inline json to_json(const HopfAlgebra& h)
{
    const std::size_t n = h.dim();
    json j = detail::header("hopf", h.name, field_of(h), h.space);
    j["unit"] = vec_to_json(h.unit, {n});
    j["mult"] = map_to_json(h.mult, {n}, {n, n});
    j["comult"] = map_to_json(h.comult, {n, n}, {n});
    j["counit"] = vec_to_json(h.counit.transpose().column(0), {n});
    j["antipode"] = map_to_json(h.antipode, {n}, {n});
    return j;
}

inline json hopf_ref(const HopfAlgebra& h) { return json{{"name", h.name}, {"sha256", content_hash(to_json(h))}}; }

/// Parses and validates a Hopf algebra; axiom failures are reported with their
/// witness. Without `validate` only the shapes are checked.
inline HopfAlgebra hopf_from_json(const json& j, bool validate = true)
{
    if (detail::read_kind(j) != "hopf")
        throw ParseError("expected a file of kind \"hopf\"");
    const std::uint64_t p = detail::read_field(j);
    Space H = detail::read_basis(j);
    const std::size_t n = H.dim();
    Space HH = Space::tensor(H, H);
    SparseVec unit = vec_from_json(detail::need(j, "unit"), {n}, p, "unit");
    LinMap mult = map_from_json(detail::need(j, "mult"), HH, H, {n}, {n, n}, p, "mult");
    LinMap comult = map_from_json(detail::need(j, "comult"), H, HH, {n, n}, {n}, p, "comult");
    SparseVec eps = vec_from_json(detail::need(j, "counit"), {n}, p, "counit");
    std::vector<SparseVec> ecols;
    for (Index i = 0; i < n; ++i)
        ecols.push_back(eps.at(i).is_zero() ? SparseVec() : SparseVec::unit(0, eps.at(i)));
    LinMap counit = LinMap::from_columns(H, Space::ground(), ecols);
    LinMap antipode = map_from_json(detail::need(j, "antipode"), H, H, {n}, {n}, p, "antipode");
    HopfAlgebra h{detail::read_name(j), H, mult, unit, comult, counit, antipode, std::nullopt};
    if (!validate)
        return make_hopf(h.name, H, mult, unit, comult, counit, antipode);
    auto ok = verify_hopf(h);
    if (!ok.pass)
        throw ParseError("Hopf algebra axioms fail: " + detail::witness_text(ok));
    return make_hopf(h.name, H, mult, unit, comult, counit, antipode);
}

namespace detail {

inline void check_ref(const json& j, const HopfAlgebra& h, const std::string& key = "hopf")
{
    const json& r = need(j, key);
    if (!r.is_object() || !r.contains("sha256"))
        throw ParseError("\"" + key + "\" must reference a Hopf file by {\"sha256\": ...}");
    std::string want = r["sha256"].get<std::string>();
    std::string have = content_hash(to_json(h));
    if (want != have)
        throw ParseError("hash mismatch: file references Hopf algebra " + want.substr(0, 12) + "…, given " +
                         have.substr(0, 12) + "… (" + h.name + ")");
}

} // namespace detail

inline json to_json(const ComoduleAlgebra& A)
{
    const std::size_t n = A.dim(), dh = A.hopf.dim();
    json j = detail::header("comodule-algebra", A.name, field_of(A.hopf), A.space);
    j["hopf"] = hopf_ref(A.hopf);
    j["side"] = A.side == Side::left ? "left" : "right";
    j["unit"] = vec_to_json(A.unit, {n});
    j["mult"] = map_to_json(A.mult, {n}, {n, n});
    j["coaction"] = A.side == Side::left ? map_to_json(A.coaction, {dh, n}, {n}) : map_to_json(A.coaction, {n, dh}, {n});
    return j;
}

inline ComoduleAlgebra comodule_algebra_from_json(const json& j, const HopfAlgebra& h)
{
    if (detail::read_kind(j) != "comodule-algebra")
        throw ParseError("expected a file of kind \"comodule-algebra\"");
    detail::check_ref(j, h);
    const std::uint64_t p = detail::read_field(j);
    Space A = detail::read_basis(j);
    const std::size_t n = A.dim(), dh = h.dim();
    std::string side = detail::need(j, "side").get<std::string>();
    if (side != "left" && side != "right")
        throw ParseError("\"side\" must be \"left\" or \"right\"");
    bool left = side == "left";
    ComoduleAlgebra out{detail::read_name(j), h, A,
                        map_from_json(detail::need(j, "mult"), Space::tensor(A, A), A, {n}, {n, n}, p, "mult"),
                        vec_from_json(detail::need(j, "unit"), {n}, p, "unit"),
                        left ? map_from_json(detail::need(j, "coaction"), A, Space::tensor(h.space, A), {dh, n}, {n}, p,
                                             "coaction")
                             : map_from_json(detail::need(j, "coaction"), A, Space::tensor(A, h.space), {n, dh}, {n}, p,
                                             "coaction"),
                        left ? Side::left : Side::right};
    auto ok = verify_comodule_algebra(out);
    if (!ok.pass)
        throw ParseError("comodule algebra axioms fail: " + detail::witness_text(ok));
    return out;
}

inline json to_json(const ComoduleCoalgebra& C)
{
    const std::size_t n = C.dim(), dh = C.hopf.dim();
    json j = detail::header("comodule-coalgebra", C.name, field_of(C.hopf), C.space);
    j["hopf"] = hopf_ref(C.hopf);
    j["comult"] = map_to_json(C.comult, {n, n}, {n});
    j["counit"] = vec_to_json(C.counit.transpose().column(0), {n});
    j["coaction"] = map_to_json(C.coaction, {n, dh}, {n});
    return j;
}

/// With `strict`, the comodule coalgebra axioms must hold; otherwise only the
/// coalgebra and comodule axioms are required (carriers such as H with Δ).
inline ComoduleCoalgebra comodule_coalgebra_from_json(const json& j, const HopfAlgebra& h, bool strict = true)
{
    if (detail::read_kind(j) != "comodule-coalgebra")
        throw ParseError("expected a file of kind \"comodule-coalgebra\"");
    detail::check_ref(j, h);
    const std::uint64_t p = detail::read_field(j);
    Space C = detail::read_basis(j);
    const std::size_t n = C.dim(), dh = h.dim();
    SparseVec eps = vec_from_json(detail::need(j, "counit"), {n}, p, "counit");
    std::vector<SparseVec> ecols;
    for (Index i = 0; i < n; ++i)
        ecols.push_back(eps.at(i).is_zero() ? SparseVec() : SparseVec::unit(0, eps.at(i)));
    ComoduleCoalgebra out{
        detail::read_name(j), h, C,
        map_from_json(detail::need(j, "comult"), C, Space::tensor(C, C), {n, n}, {n}, p, "comult"),
        LinMap::from_columns(C, Space::ground(), ecols),
        map_from_json(detail::need(j, "coaction"), C, Space::tensor(C, h.space), {n, dh}, {n}, p, "coaction")};
    auto ok = strict ? verify_comodule_coalgebra(out)
                     : hcc::detail::first_failure(
                           {[&] { return hcc::detail::coalgebra_axioms(C, out.comult, out.counit); },
                            [&] { return hcc::detail::right_comodule_axioms(h, C, out.coaction); }},
                           "comodule");
    if (!ok.pass)
        throw ParseError("comodule coalgebra axioms fail: " + detail::witness_text(ok));
    return out;
}

inline json to_json(const ModuleAlgebra& A)
{
    const std::size_t n = A.dim(), dh = A.hopf.dim();
    json j = detail::header("module-algebra", A.name, field_of(A.hopf), A.space);
    j["hopf"] = hopf_ref(A.hopf);
    j["unit"] = vec_to_json(A.unit, {n});
    j["mult"] = map_to_json(A.mult, {n}, {n, n});
    j["action"] = map_to_json(A.action, {n}, {dh, n});
    return j;
}

inline ModuleAlgebra module_algebra_from_json(const json& j, const HopfAlgebra& h)
{
    if (detail::read_kind(j) != "module-algebra")
        throw ParseError("expected a file of kind \"module-algebra\"");
    detail::check_ref(j, h);
    const std::uint64_t p = detail::read_field(j);
    Space A = detail::read_basis(j);
    const std::size_t n = A.dim(), dh = h.dim();
    ModuleAlgebra out{detail::read_name(j), h, A,
                      map_from_json(detail::need(j, "mult"), Space::tensor(A, A), A, {n}, {n, n}, p, "mult"),
                      vec_from_json(detail::need(j, "unit"), {n}, p, "unit"),
                      map_from_json(detail::need(j, "action"), Space::tensor(h.space, A), A, {n}, {dh, n}, p, "action")};
    auto ok = verify_module_algebra(out);
    if (!ok.pass)
        throw ParseError("module algebra axioms fail: " + detail::witness_text(ok));
    return out;
}

inline json to_json(const ModuleComodule& M)
{
    const std::size_t n = M.dim(), dh = M.hopf.dim();
    json j = detail::header("module-comodule", M.name, field_of(M.hopf), M.space);
    j["hopf"] = hopf_ref(M.hopf);
    j["action"] = map_to_json(M.action, {n}, {n, dh});
    j["coaction"] = map_to_json(M.coaction, {dh, n}, {n});
    return j;
}

inline ModuleComodule module_comodule_from_json(const json& j, const HopfAlgebra& h)
{
    if (detail::read_kind(j) != "module-comodule")
        throw ParseError("expected a file of kind \"module-comodule\"");
    detail::check_ref(j, h);
    const std::uint64_t p = detail::read_field(j);
    Space M = detail::read_basis(j);
    const std::size_t n = M.dim(), dh = h.dim();
    ModuleComodule out{
        detail::read_name(j), h, M,
        map_from_json(detail::need(j, "action"), Space::tensor(M, h.space), M, {n}, {n, dh}, p, "action"),
        map_from_json(detail::need(j, "coaction"), M, Space::tensor(h.space, M), {dh, n}, {n}, p, "coaction")};
    auto ok = verify_module_comodule(out);
    if (!ok.pass)
        throw ParseError("module-comodule axioms fail: " + detail::witness_text(ok));
    return out;
}

/// Which Hopf algebra a (co)module file references, without validating it.
inline std::string referenced_hash(const json& j)
{
    if (!j.contains("hopf") || !j["hopf"].is_object() || !j["hopf"].contains("sha256"))
        throw ParseError("file does not reference a Hopf algebra");
    return j["hopf"]["sha256"].get<std::string>();
}

// ---------------------------------------------------------------------------
// Cochains and complexes
// ---------------------------------------------------------------------------

/// A cochain of the module algebra complex (values on m ⊗ a₀ ⊗ … ⊗ aₙ) or of
/// the comodule algebra complex (values f(a₀ ⊗ … ⊗ aₙ) ∈ M, keyed by a₀…aₙ, m).
struct Cochain {
    std::string complex; // "module-algebra" | "comodule-algebra"
    int degree = 0;
    SparseVec values; // in the ambient space of the complex
};

inline json to_json(const Cochain& c, const json& carrier, const json& coefficients, std::size_t dim_carrier,
                    std::size_t dim_m, std::uint64_t p)
{
    std::vector<std::size_t> dims;
    if (c.complex == "module-algebra")
        dims.push_back(dim_m);
    for (int i = 0; i <= c.degree; ++i)
        dims.push_back(dim_carrier);
    if (c.complex == "comodule-algebra")
        dims.push_back(dim_m);
    return json{{"schema", schema_version},
                {"kind", "cochain"},
                {"field", field_name(p)},
                {"complex", c.complex},
                {"degree", c.degree},
                {"carrier", {{"sha256", content_hash(carrier)}}},
                {"coefficients", {{"sha256", content_hash(coefficients)}}},
                {"values", vec_to_json(c.values, dims)}};
}

inline Cochain cochain_from_json(const json& j, const json& carrier, const json& coefficients, std::size_t dim_carrier,
                                 std::size_t dim_m)
{
    if (detail::read_kind(j) != "cochain")
        throw ParseError("expected a file of kind \"cochain\"");
    const std::uint64_t p = detail::read_field(j);
    Cochain c;
    c.complex = detail::need(j, "complex").get<std::string>();
    if (c.complex != "module-algebra" && c.complex != "comodule-algebra")
        throw ParseError("cochain \"complex\" must be \"module-algebra\" or \"comodule-algebra\"");
    c.degree = detail::need(j, "degree").get<int>();
    if (c.degree < 0)
        throw ParseError("negative cochain degree");
    auto ref = [&](const char* key, const json& target) {
        const json& r = detail::need(j, key);
        if (!r.is_object() || !r.contains("sha256") || r["sha256"].get<std::string>() != content_hash(target))
            throw ParseError(std::string("hash mismatch for the cochain's ") + key);
    };
    ref("carrier", carrier);
    ref("coefficients", coefficients);
    std::vector<std::size_t> dims;
    if (c.complex == "module-algebra")
        dims.push_back(dim_m);
    for (int i = 0; i <= c.degree; ++i)
        dims.push_back(dim_carrier);
    if (c.complex == "comodule-algebra")
        dims.push_back(dim_m);
    c.values = vec_from_json(detail::need(j, "values"), dims, p, "values");
    return c;
}

inline json to_json(const CheckResult& r)
{
    json j{{"pass", r.pass}, {"condition", r.condition}, {"notes", r.notes}};
    if (r.witness) {
        json w{{"element", r.witness->element}, {"lhs", r.witness->lhs}, {"rhs", r.witness->rhs}};
        if (r.witness->degree)
            w["degree"] = *r.witness->degree;
        j["witness"] = w;
    }
    return j;
}

inline json to_json(const CohomologyTable& t)
{
    return json{{"theory", to_string(t.theory)},
                {"computed_up_to", t.computed_up_to},
                {"dims", t.dims},
                {"cochain_dims", t.cochain_dims},
                {"ranks", t.ranks}};
}

/// Spaces as label lists, operators as sparse [row, col, value] triples.
inline json to_json(const CocyclicModule& X)
{
    auto op = [](const LinMap& f) { return map_to_json(f, {f.rows()}, {f.cols()}); };
    json degrees = json::array();
    for (int n = 0; n <= X.max_degree; ++n) {
        json d{{"degree", n}, {"basis", X.spaces[n].labels()}, {"tau", op(X.tau(n))}};
        json cof = json::array(), cod = json::array();
        if (n >= 1)
            for (const auto& f : X.cofaces[n])
                cof.push_back(op(f));
        if (n < X.max_degree)
            for (const auto& f : X.codegeneracies[n])
                cod.push_back(op(f));
        d["cofaces_into"] = cof;
        d["codegeneracies_onto"] = cod;
        degrees.push_back(d);
    }
    return json{{"schema", schema_version}, {"kind", "cocyclic-module"}, {"name", X.name},
                {"max_degree", X.max_degree}, {"degrees", degrees}};
}

// ---------------------------------------------------------------------------
// Files
// ---------------------------------------------------------------------------

inline json read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
}

inline void write_file(const std::string& path, const json& j)
{
    std::ofstream out(path);
    if (!out)
        throw Error("cannot write " + path);
    out << canonical(j);
}

} // namespace hcc::io
