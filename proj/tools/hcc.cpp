// hcc: command-line front end for the structure-constant toolkit.
//
// Exit codes: 0 all checks pass, 1 a check failed, 2 usage or parse error.

#include <unistd.h>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "hcc/examples.hpp"

using namespace hcc;
using io::json;

namespace {

struct Options {
    bool json_out = false;
    std::string field = "Q";
    std::uint64_t p = 0;
};

Options opts;

bool use_color()
{
    const char* nc = std::getenv("NO_COLOR");
    return !(nc && *nc) && isatty(STDOUT_FILENO);
}

std::string verdict(bool pass)
{
    if (!use_color())
        return pass ? "PASS" : "FAIL";
    return pass ? "\033[32mPASS\033[0m" : "\033[31mFAIL\033[0m";
}

/// Bad input that is not a failed check.
struct UsageError : Error {
    using Error::Error;
};

// ---------------------------------------------------------------------------
// Loading
// ---------------------------------------------------------------------------

/// A file path, or "example:NAME" for a built-in structure.
json load(const std::string& where)
{
    if (where.rfind("example:", 0) == 0) {
        const auto* e = examples::find(where.substr(8));
        if (!e)
            throw UsageError("unknown example \"" + where.substr(8) + "\"");
        return e->emit();
    }
    return io::read_file(where);
}

std::string kind_of(const json& j)
{
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        throw ParseError("not a structure file (missing \"kind\")");
    return j["kind"].get<std::string>();
}

/// A Hopf algebra as read (hashes of dependents refer to this) and after
/// any change of field.
struct LoadedHopf {
    HopfAlgebra raw;
    HopfAlgebra h;
    std::string file_hash;
};

HopfAlgebra convert(const HopfAlgebra& h) { return opts.p ? to_field(h, opts.p) : h; }

LoadedHopf load_hopf(const std::string& where)
{
    json j = load(where);
    if (kind_of(j) != "hopf")
        throw ParseError(where + ": expected a file of kind \"hopf\"");
    HopfAlgebra h = io::hopf_from_json(j);
    return {h, convert(h), io::content_hash(j)};
}

/// The Hopf algebra a dependent file lives over: H itself, or H^cop for
/// coefficients of a right comodule algebra. Under --field the file is
/// rewritten to the new field and its reference redirected accordingly.
HopfAlgebra resolve(json& j, const LoadedHopf& H, const std::string& where)
{
    std::string ref = io::referenced_hash(j);
    std::optional<HopfAlgebra> target;
    if (ref == H.file_hash)
        target = H.h;
    else if (ref == io::content_hash(io::to_json(cop(H.raw))))
        target = cop(H.h);
    if (!target)
        throw ParseError(where + ": references a Hopf algebra other than the one given by --hopf (or its co-opposite)");
    if (opts.p) {
        j["field"] = io::field_name(opts.p);
        j["hopf"]["sha256"] = io::content_hash(io::to_json(*target));
    }
    return *target;
}

ComoduleAlgebra load_comodule_algebra(const std::string& where, const LoadedHopf& H)
{
    json j = load(where);
    HopfAlgebra h = resolve(j, H, where);
    return io::comodule_algebra_from_json(j, h);
}

ComoduleCoalgebra load_comodule_coalgebra(const std::string& where, const LoadedHopf& H)
{
    json j = load(where);
    HopfAlgebra h = resolve(j, H, where);
    return io::comodule_coalgebra_from_json(j, h, false);
}

ModuleAlgebra load_module_algebra(const std::string& where, const LoadedHopf& H)
{
    json j = load(where);
    HopfAlgebra h = resolve(j, H, where);
    return io::module_algebra_from_json(j, h);
}

ModuleComodule load_coefficients(const std::string& where, const LoadedHopf& H)
{
    json j = load(where);
    HopfAlgebra h = resolve(j, H, where);
    return io::module_comodule_from_json(j, h);
}

/// Coefficients for a carrier: over H, or over H^cop when the carrier is a
/// right comodule algebra.
ModuleComodule coefficients_for(const std::string& where, const LoadedHopf& H, const HopfAlgebra& carrier_hopf)
{
    ModuleComodule M = load_coefficients(where, H);
    if (!same_hopf(M.hopf, carrier_hopf)) {
        std::string side = same_hopf(carrier_hopf, H.h) ? "H" : "H^cop";
        throw UsageError("the coefficients must live over " + side + " for this carrier");
    }
    return M;
}

struct Carrier {
    std::string kind;
    std::optional<ComoduleAlgebra> algebra; // converted to a left comodule algebra
    std::optional<ComoduleCoalgebra> coalgebra;
    std::optional<ModuleAlgebra> module;
    json file;

    const HopfAlgebra& hopf() const
    {
        return algebra ? algebra->hopf : coalgebra ? coalgebra->hopf : module->hopf;
    }
};

Carrier load_carrier(const std::string& where, const LoadedHopf& H)
{
    Carrier c;
    c.file = load(where);
    c.kind = kind_of(c.file);
    if (c.kind == "comodule-algebra")
        c.algebra = as_left(load_comodule_algebra(where, H));
    else if (c.kind == "comodule-coalgebra")
        c.coalgebra = load_comodule_coalgebra(where, H);
    else if (c.kind == "module-algebra")
        c.module = load_module_algebra(where, H);
    else
        throw ParseError(where + ": a carrier is a comodule-algebra, comodule-coalgebra or module-algebra file");
    return c;
}

BuiltComplex build(const Carrier& c, const ModuleComodule& M, int N)
{
    if (c.algebra)
        return build_comodule_algebra_complex(*c.algebra, M, N);
    if (c.coalgebra)
        return build_comodule_coalgebra_complex(*c.coalgebra, M, N);
    return build_module_algebra_complex(*c.module, M, N);
}

// ---------------------------------------------------------------------------
// Reporting
// ---------------------------------------------------------------------------

void print_check(const std::string& title, const CheckResult& r)
{
    if (opts.json_out) {
        json j = io::to_json(r);
        j["check"] = title;
        std::cout << io::canonical(j);
        return;
    }
    std::cout << verdict(r.pass) << " " << title << ": " << r.condition << "\n";
    if (r.witness) {
        const auto& w = *r.witness;
        std::cout << "  at " << w.element;
        if (w.degree)
            std::cout << " (degree " << *w.degree << ")";
        std::cout << "\n  lhs = " << w.lhs << "\n  rhs = " << w.rhs << "\n";
    }
    for (const auto& n : r.notes)
        std::cout << "  " << n << "\n";
}

int code(bool pass) { return pass ? 0 : 1; }

// ---------------------------------------------------------------------------
// Commands
// ---------------------------------------------------------------------------

int examples_list()
{
    if (opts.json_out) {
        json a = json::array();
        for (const auto& e : examples::all())
            a.push_back({{"name", e.name}, {"kind", e.kind}, {"description", e.description}});
        std::cout << io::canonical(a);
        return 0;
    }
    for (const auto& e : examples::all())
        std::cout << e.name << std::string(e.name.size() < 28 ? 28 - e.name.size() : 1, ' ') << e.kind
                  << std::string(e.kind.size() < 20 ? 20 - e.kind.size() : 1, ' ') << e.description << "\n";
    return 0;
}

int examples_emit(const std::string& name, const std::string& out)
{
    const auto* e = examples::find(name);
    if (!e)
        throw UsageError("unknown example \"" + name + "\" (see `hcc examples list`)");
    json j = e->emit();
    if (out.empty())
        std::cout << io::canonical(j);
    else
        io::write_file(out, j);
    return 0;
}

int check_hopf(const std::string& file)
{
    json j = load(file);
    if (kind_of(j) != "hopf")
        throw ParseError(file + ": expected a file of kind \"hopf\"");
    HopfAlgebra h = convert(io::hopf_from_json(j, false));
    auto r = verify_hopf(h);
    if (r.pass) {
        LinMap s2 = compose(h.antipode, h.antipode);
        r.notes.push_back("dim " + std::to_string(h.dim()) + ", field " + io::field_name(opts.p));
        r.notes.push_back(std::string("commutative: ") + (check_commutative(h).pass ? "yes" : "no") +
                          ", cocommutative: " + (check_cocommutative(h).pass ? "yes" : "no"));
        r.notes.push_back(std::string("S² = id: ") + (s2 == LinMap::identity(h.space) ? "yes" : "no") +
                          ", S⁴ = id: " + (compose(s2, s2) == LinMap::identity(h.space) ? "yes" : "no"));
        r.notes.push_back("sha256 " + io::content_hash(j));
    }
    print_check("Hopf algebra " + h.name, r);
    return code(r.pass);
}

struct CoefficientArgs {
    std::string flavor, hopf, carrier, coeff;
    int max_degree = 3;
};

int check_coefficient(const CoefficientArgs& a)
{
    LoadedHopf H = load_hopf(a.hopf);
    if (a.flavor == "sayd") {
        ModuleComodule M = load_coefficients(a.coeff, H);
        auto r = check_sayd(M);
        print_check("SAYD " + M.name, r);
        return code(r.pass);
    }
    if (a.carrier.empty())
        throw UsageError("--flavor " + a.flavor + " needs --carrier");
    Carrier c = load_carrier(a.carrier, H);
    ModuleComodule M = coefficients_for(a.coeff, H, c.hopf());
    CheckResult r;
    if (a.flavor == "ah-sayd") {
        if (!c.algebra)
            throw UsageError("--flavor ah-sayd needs a comodule-algebra carrier");
        r = check_ah_sayd(*c.algebra, M, a.max_degree);
    } else if (a.flavor == "hc-sayd") {
        if (!c.coalgebra)
            throw UsageError("--flavor hc-sayd needs a comodule-coalgebra carrier");
        r = check_hc_sayd(*c.coalgebra, M, a.max_degree);
    } else {
        r = hcc_verdict(build(c, M, a.max_degree));
    }
    print_check(a.flavor + " " + M.name + " over " + c.file.value("name", c.kind), r);
    return code(r.pass);
}

struct ComplexArgs {
    std::string kind, hopf, carrier, coeff, emit;
    int max_degree = 3;
    bool verify = false;
};

int complex_build(const ComplexArgs& a)
{
    LoadedHopf H = load_hopf(a.hopf);
    Carrier c = load_carrier(a.carrier, H);
    if (c.kind != a.kind)
        throw UsageError("--kind " + a.kind + " but the carrier file is a " + c.kind);
    ModuleComodule M = coefficients_for(a.coeff, H, c.hopf());
    BuiltComplex b = build(c, M, a.max_degree);
    if (!a.emit.empty())
        io::write_file(a.emit, io::to_json(b.complex));
    CheckResult r = a.verify ? hcc_verdict(b) : b.well_defined;
    if (opts.json_out) {
        json j{{"complex", b.complex.name}, {"max_degree", a.max_degree}, {"verdict", io::to_json(r)}};
        json dims = json::array();
        for (int n = 0; n <= a.max_degree; ++n)
            dims.push_back(b.complex.dim(n));
        j["dims"] = dims;
        std::cout << io::canonical(j);
        return code(r.pass);
    }
    std::cout << b.complex.name << "\n";
    for (int n = 0; n <= a.max_degree; ++n)
        std::cout << "  degree " << n << ": dim " << b.complex.dim(n) << "\n";
    print_check(a.verify ? "cocyclic identities" : "well defined", r);
    return code(r.pass);
}

struct CohomologyArgs {
    std::string theory, hopf, carrier, coeff;
    int max_degree = 3;
};

int cohomology_cmd(const CohomologyArgs& a)
{
    Theory th = a.theory == "hochschild" ? Theory::hochschild : Theory::cyclic;
    if (th == Theory::cyclic && opts.p)
        throw UsageError("cyclic cohomology through the λ-complex needs characteristic 0, not " +
                         std::to_string(opts.p));
    LoadedHopf H = load_hopf(a.hopf);
    Carrier c = load_carrier(a.carrier, H);
    ModuleComodule M = coefficients_for(a.coeff, H, c.hopf());
    // Degree n needs b into degree n + 1.
    BuiltComplex b = build(c, M, a.max_degree + 1);
    auto v = hcc_verdict(b);
    if (!v.pass) {
        print_check("coefficients", v);
        return 1;
    }
    CohomologyTable t = cohomology(b.complex, th);
    if (opts.json_out) {
        json j = io::to_json(t);
        j["complex"] = b.complex.name;
        std::cout << io::canonical(j);
        return 0;
    }
    std::cout << (th == Theory::hochschild ? "HH" : "HC") << " of " << b.complex.name << ", computed up to degree "
              << t.computed_up_to << "\n";
    std::cout << "  degree  cochains  rank b  dim\n";
    for (std::size_t n = 0; n < t.dims.size(); ++n) {
        std::ostringstream row;
        row << "  " << n;
        auto pad = [&](std::size_t width) {
            std::string s = row.str();
            if (s.size() < width)
                row << std::string(width - s.size(), ' ');
        };
        pad(10);
        row << t.cochain_dims[n];
        pad(20);
        row << t.ranks[n];
        pad(28);
        row << t.dims[n];
        std::cout << row.str() << "\n";
    }
    std::cout << "  dims:";
    for (auto d : t.dims)
        std::cout << " " << d;
    std::cout << "\n";
    return 0;
}

struct CupArgs {
    std::string hopf, module_algebra, comodule_algebra, coeff, phi, psi;
};

int cup_cmd(const CupArgs& a)
{
    LoadedHopf H = load_hopf(a.hopf);
    json ja = load(a.module_algebra), jb = load(a.comodule_algebra), jm = load(a.coeff);
    json ja_raw = ja, jb_raw = jb, jm_raw = jm;
    ModuleAlgebra A = io::module_algebra_from_json(ja, resolve(ja, H, a.module_algebra));
    ComoduleAlgebra B = as_left(io::comodule_algebra_from_json(jb, resolve(jb, H, a.comodule_algebra)));
    ModuleComodule M = io::module_comodule_from_json(jm, resolve(jm, H, a.coeff));
    if (!same_hopf(A.hopf, B.hopf))
        throw UsageError("the cup product needs a left comodule algebra over the same H as the module algebra");
    io::Cochain phi = io::cochain_from_json(load(a.phi), ja_raw, jm_raw, A.dim(), M.dim());
    io::Cochain psi_c = io::cochain_from_json(load(a.psi), jb_raw, jm_raw, B.dim(), M.dim());
    if (phi.complex != "module-algebra" || psi_c.complex != "comodule-algebra")
        throw UsageError("--phi must be a module-algebra cochain and --psi a comodule-algebra cochain");
    if (opts.p) {
        phi.values = phi.values.to_field(opts.p);
        psi_c.values = psi_c.values.to_field(opts.p);
    }
    const int p = phi.degree, q = psi_c.degree;
    const int N = std::max(p + q, std::max(p, q) + 1);
    CupSetup s = make_cup_setup(A, B, M, N);
    auto coords = [](const CocyclicModule& X, int n, const SparseVec& v, const char* what) {
        auto c = X.cochains.at(n).coordinates(v);
        if (!c)
            throw UsageError(std::string(what) + " is not a cochain of its complex (fails invariance or colinearity)");
        std::vector<SparseVec::Entry> e;
        for (std::size_t j = 0; j < c->size(); ++j)
            e.emplace_back(j, (*c)[j]);
        return SparseVec::from_entries(std::move(e));
    };
    SparseVec x = coords(s.X, p, phi.values, "φ"), y = coords(s.Y, q, psi_c.values, "ψ");
    for (auto [d, what] : {std::pair{lambda_cocycle_defect(s.X, p, x), "φ"}, {lambda_cocycle_defect(s.Y, q, y), "ψ"}})
        if (!d.empty()) {
            CheckResult r;
            r.pass = false;
            r.condition = std::string(what) + " is a λ-cocycle: " + d;
            print_check("cup product", r);
            return 1;
        }
    CupResult r = cup(s, p, x, q, y);
    if (opts.json_out) {
        json j{{"degree", r.degree},
               {"values", io::vec_to_json(r.cochain, {r.cochain.is_zero() ? 1 : s.Z.dim(r.degree)})},
               {"b_closed", io::to_json(r.b_closed)},
               {"lambda_invariant", io::to_json(r.lambda_invariant)}};
        std::cout << io::canonical(j);
        return code(r.b_closed.pass);
    }
    std::cout << "cup product in degree " << r.degree << " on " << s.AB.A.name << " ⋊ " << s.AB.B.name << "\n";
    std::cout << "  " << format_vector(r.cochain, s.Z.spaces[r.degree]) << "\n";
    print_check("b-closed", r.b_closed);
    print_check("λ-invariant (reported)", r.lambda_invariant);
    return code(r.b_closed.pass);
}

int corpus_list()
{
    for (const auto& s : corpus::scenarios())
        std::cout << s.id << "\n";
    return 0;
}

int corpus_run(const std::string& id)
{
    std::vector<corpus::Scenario> todo;
    if (id == "all")
        todo = corpus::scenarios();
    else if (auto s = corpus::find_scenario(id))
        todo.push_back(*s);
    else
        throw UsageError("unknown scenario \"" + id + "\" (see `hcc corpus list`)");
    bool all_pass = true;
    json out = json::array();
    for (const auto& s : todo) {
        auto r = s.run();
        all_pass = all_pass && r.pass;
        if (opts.json_out) {
            out.push_back({{"id", r.id},
                           {"statement", r.statement},
                           {"pass", r.pass},
                           {"instances", r.instances},
                           {"quantified", r.quantified},
                           {"lines", r.lines}});
            continue;
        }
        std::cout << verdict(r.pass) << " " << r.id << ": " << r.statement << "\n";
        for (const auto& l : r.lines)
            std::cout << "  " << l << "\n";
    }
    if (opts.json_out)
        std::cout << io::canonical(out);
    return code(all_pass);
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Hopf cyclic coefficients: structure checks, cocyclic modules, cohomology and cup products"};
    app.require_subcommand(1);
    app.add_flag("--json", opts.json_out, "machine-readable reports");
    app.add_option("--field", opts.field, "ground field: Q (default) or GF(p)");
    std::size_t warn_rows = limits().warn_rows;
    app.add_option("--warn-rows", warn_rows, "warn when a linear system exceeds this many rows");

    auto* ex = app.add_subcommand("examples", "built-in structure files");
    ex->require_subcommand(1);
    ex->add_subcommand("list", "list example names")->callback([] { std::exit(examples_list()); });
    auto* emit = ex->add_subcommand("emit", "print an example structure file");
    std::string emit_name, emit_out;
    emit->add_option("name", emit_name, "example name")->required();
    emit->add_option("-o,--output", emit_out, "write to a file instead of stdout");

    auto* check = app.add_subcommand("check", "verify a structure");
    check->require_subcommand(1);
    auto* chk_hopf = check->add_subcommand("hopf", "Hopf algebra axioms");
    std::string hopf_file;
    chk_hopf->add_option("file", hopf_file, "Hopf structure file")->required();
    auto* chk_coeff = check->add_subcommand("coefficient", "coefficient conditions");
    CoefficientArgs ca;
    chk_coeff->add_option("--flavor", ca.flavor, "sayd | ah-sayd | hc-sayd | hcc")
        ->required()
        ->check(CLI::IsMember({"sayd", "ah-sayd", "hc-sayd", "hcc"}));
    chk_coeff->add_option("--hopf", ca.hopf, "Hopf structure file")->required();
    chk_coeff->add_option("--carrier", ca.carrier, "comodule algebra, comodule coalgebra or module algebra file");
    chk_coeff->add_option("--coeff", ca.coeff, "module-comodule file")->required();
    chk_coeff->add_option("--max-degree", ca.max_degree, "degree bound (default 3)")->check(CLI::Range(0, 6));

    auto* cx = app.add_subcommand("complex", "cocyclic modules");
    cx->require_subcommand(1);
    auto* cx_build = cx->add_subcommand("build", "build a complex and check it");
    ComplexArgs xa;
    cx_build->add_option("--kind", xa.kind, "comodule-algebra | comodule-coalgebra | module-algebra")
        ->required()
        ->check(CLI::IsMember({"comodule-algebra", "comodule-coalgebra", "module-algebra"}));
    cx_build->add_option("--hopf", xa.hopf, "Hopf structure file")->required();
    cx_build->add_option("--carrier", xa.carrier, "carrier file")->required();
    cx_build->add_option("--coeff", xa.coeff, "module-comodule file")->required();
    cx_build->add_option("--max-degree", xa.max_degree, "top degree (default 3)")->check(CLI::Range(0, 6));
    cx_build->add_flag("--verify", xa.verify, "run every cocyclic identity");
    cx_build->add_option("--emit", xa.emit, "write the complex as JSON to this file");

    auto* co = app.add_subcommand("cohomology", "Hochschild or cyclic cohomology dimensions");
    CohomologyArgs ha;
    co->add_option("--theory", ha.theory, "hochschild | cyclic")
        ->required()
        ->check(CLI::IsMember({"hochschild", "cyclic"}));
    co->add_option("--max-degree", ha.max_degree, "report degrees 0..N (default 3)")->check(CLI::Range(0, 5));
    co->add_option("--hopf", ha.hopf, "Hopf structure file")->required();
    co->add_option("--carrier", ha.carrier, "carrier file")->required();
    co->add_option("--coeff", ha.coeff, "module-comodule file")->required();

    auto* cu = app.add_subcommand("cup", "cup product of a module algebra and a comodule algebra cocycle");
    CupArgs ua;
    cu->add_option("--hopf", ua.hopf, "Hopf structure file")->required();
    cu->add_option("--module-algebra", ua.module_algebra, "module algebra file A")->required();
    cu->add_option("--comodule-algebra", ua.comodule_algebra, "left comodule algebra file B")->required();
    cu->add_option("--coeff", ua.coeff, "module-comodule file")->required();
    cu->add_option("--phi", ua.phi, "cochain on A")->required();
    cu->add_option("--psi", ua.psi, "cochain on B")->required();

    auto* cp = app.add_subcommand("corpus", "named scenarios over the built-in corpus");
    cp->require_subcommand(1);
    cp->add_subcommand("list", "list scenario ids")->callback([] { std::exit(corpus_list()); });
    auto* run = cp->add_subcommand("run", "run one scenario or all");
    std::string run_id;
    run->add_option("id", run_id, "scenario id or \"all\"")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        opts.p = io::field_of(opts.field);
        limits().warn_rows = warn_rows;
        limits().warn = [](const std::string& m) { std::cerr << "warning: large linear system, " << m << "\n"; };
        if (emit->parsed())
            return examples_emit(emit_name, emit_out);
        if (chk_hopf->parsed())
            return check_hopf(hopf_file);
        if (chk_coeff->parsed())
            return check_coefficient(ca);
        if (cx_build->parsed())
            return complex_build(xa);
        if (co->parsed())
            return cohomology_cmd(ha);
        if (cu->parsed())
            return cup_cmd(ua);
        if (run->parsed())
            return corpus_run(run_id);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const DegreeCapError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const json::exception& e) {
        std::cerr << "error: malformed structure file: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
