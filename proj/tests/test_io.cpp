#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "hcc/examples.hpp"

using namespace hcc;
using io::json;

namespace {

json emit(const std::string& name)
{
    const auto* e = examples::find(name);
    if (!e)
        throw std::runtime_error("no example " + name);
    return e->emit();
}

/// Hopf algebra referenced by a dependent file, looked up among the examples.
HopfAlgebra referenced_hopf(const json& j)
{
    std::string ref = io::referenced_hash(j);
    for (const auto& e : examples::all())
        if (e.kind == "hopf") {
            json h = e.emit();
            if (io::content_hash(h) == ref)
                return io::hopf_from_json(h);
        }
    throw std::runtime_error("unresolved reference " + ref);
}

json reemit(const json& j)
{
    std::string kind = j.at("kind");
    if (kind == "hopf")
        return io::to_json(io::hopf_from_json(j));
    if (kind == "comodule-algebra")
        return io::to_json(io::comodule_algebra_from_json(j, referenced_hopf(j)));
    if (kind == "comodule-coalgebra")
        return io::to_json(io::comodule_coalgebra_from_json(j, referenced_hopf(j)));
    if (kind == "module-algebra")
        return io::to_json(io::module_algebra_from_json(j, referenced_hopf(j)));
    if (kind == "module-comodule")
        return io::to_json(io::module_comodule_from_json(j, referenced_hopf(j)));
    throw std::runtime_error("unexpected kind " + kind);
}

template <class F>
std::string parse_error(F&& f)
{
    try {
        f();
    } catch (const ParseError& e) {
        return e.what();
    }
    return "";
}

} // namespace

TEST(Hash, Sha256KnownVectors)
{
    EXPECT_EQ(io::sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
    EXPECT_EQ(io::sha256_hex(""), "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
}

TEST(RoundTrip, EveryStructureExample)
{
    std::size_t n = 0;
    for (const auto& e : examples::all()) {
        if (e.kind == "cochain")
            continue;
        json j = e.emit();
        EXPECT_EQ(j.at("schema"), io::schema_version);
        EXPECT_EQ(io::canonical(reemit(j)), io::canonical(j)) << e.name;
        ++n;
    }
    EXPECT_GE(n, 25u);
}

TEST(RoundTrip, SweedlerTextIsStable)
{
    json j = emit("sweedler-h4");
    std::string text = io::canonical(j);
    EXPECT_EQ(io::canonical(json::parse(text)), text);
    EXPECT_EQ(io::canonical(io::to_json(io::hopf_from_json(json::parse(text)))), text);
}

TEST(RoundTrip, Cochains)
{
    auto inst = corpus::cup_instances().front();
    json a = io::to_json(inst.A), b = io::to_json(inst.B), m = io::to_json(inst.M);
    json phi = emit("cup-phi"), psi = emit("cup-psi");
    auto c = io::cochain_from_json(phi, a, m, inst.A.dim(), inst.M.dim());
    EXPECT_EQ(c.complex, "module-algebra");
    EXPECT_EQ(c.degree, 0);
    EXPECT_EQ(io::canonical(io::to_json(c, a, m, inst.A.dim(), inst.M.dim(), 0)), io::canonical(phi));
    auto d = io::cochain_from_json(psi, b, m, inst.B.dim(), inst.M.dim());
    EXPECT_EQ(d.complex, "comodule-algebra");
    // the carriers must match the references
    EXPECT_NE(parse_error([&] { io::cochain_from_json(phi, b, m, inst.B.dim(), inst.M.dim()); }), "");
}

TEST(Parse, DivisionByZero)
{
    json j = emit("k-z2");
    j["mult"][0][2] = "1/0";
    std::string msg = parse_error([&] { io::hopf_from_json(j); });
    EXPECT_NE(msg.find("division by zero in scalar literal"), std::string::npos) << msg;
}

TEST(Parse, MalformedScalar)
{
    json j = emit("k-z2");
    j["counit"][0][1] = "one";
    EXPECT_NE(parse_error([&] { io::hopf_from_json(j); }), "");
    j = emit("k-z2");
    j["counit"][0][1] = 1;
    EXPECT_NE(parse_error([&] { io::hopf_from_json(j); }), "");
}

TEST(Parse, IndexOutOfRange)
{
    json j = emit("k-z2");
    j["antipode"][0][0] = 7;
    std::string msg = parse_error([&] { io::hopf_from_json(j); });
    EXPECT_NE(msg.find("range"), std::string::npos) << msg;
}

TEST(Parse, BrokenAntipodeCarriesWitness)
{
    json j = emit("k-z2");
    j["antipode"] = json::array({json::array({0, 0, "1"}), json::array({1, 1, "2"})});
    std::string msg = parse_error([&] { io::hopf_from_json(j); });
    EXPECT_NE(msg.find("antipode"), std::string::npos) << msg;
    // Without validation the structure loads and verify_hopf names the witness.
    auto h = io::hopf_from_json(j, false);
    auto r = verify_hopf(h);
    ASSERT_FALSE(r.pass);
    ASSERT_TRUE(r.witness.has_value());
    EXPECT_NE(r.witness->element, "");
}

TEST(Parse, HashMismatch)
{
    json j = emit("sweedler-h4-C-g-eps");
    HopfAlgebra h4 = referenced_hopf(j);
    j["hopf"]["sha256"] = std::string(64, '0');
    std::string msg = parse_error([&] { io::module_comodule_from_json(j, h4); });
    EXPECT_NE(msg.find("hash mismatch"), std::string::npos) << msg;
    // the right coefficients against the wrong algebra
    json k = emit("k-z2-C-1-eps");
    EXPECT_NE(parse_error([&] { io::module_comodule_from_json(k, h4); }), "");
}

TEST(Parse, SchemaAndKind)
{
    json j = emit("k-z2");
    j["schema"] = "hcc-structure/99";
    EXPECT_NE(parse_error([&] { io::hopf_from_json(j); }), "");
    j = emit("k-z2");
    j["kind"] = "module-algebra";
    EXPECT_NE(parse_error([&] { io::hopf_from_json(j); }), "");
    j = emit("k-z2");
    j.erase("comult");
    EXPECT_NE(parse_error([&] { io::hopf_from_json(j); }), "");
}

TEST(Parse, AxiomFailureInDependents)
{
    json j = emit("sweedler-h4-C-g-eps");
    HopfAlgebra h4 = referenced_hopf(j);
    j["coaction"] = json::array({json::array({json::array({2, 0}), 0, "1"})});
    std::string msg = parse_error([&] { io::module_comodule_from_json(j, h4); });
    EXPECT_NE(msg, "");
}

TEST(Fields, NamesAndConversion)
{
    EXPECT_EQ(io::field_of("Q"), 0u);
    EXPECT_EQ(io::field_of("GF(7)"), 7u);
    EXPECT_EQ(io::field_name(7), "GF(7)");
    for (const char* bad : {"GF(4)", "GF(1)", "R", "GF()", "GF(x)"})
        EXPECT_THROW(io::field_of(bad), ParseError) << bad;

    json j = emit("sweedler-h4");
    j["field"] = "GF(5)";
    auto h = io::hopf_from_json(j);
    EXPECT_EQ(io::field_of(h), 5u);
    EXPECT_TRUE(verify_hopf(h).pass);
    // −1 is written as 4 over GF(5)
    EXPECT_EQ(io::canonical(io::to_json(h)).find("\"-1\""), std::string::npos);
}

TEST(Files, ReadWrite)
{
    auto dir = std::filesystem::temp_directory_path() / "hcc-io-test";
    std::filesystem::create_directories(dir);
    auto path = (dir / "h4.json").string();
    json j = emit("sweedler-h4");
    io::write_file(path, j);
    EXPECT_EQ(io::canonical(io::read_file(path)), io::canonical(j));
    EXPECT_THROW(io::read_file((dir / "missing.json").string()), ParseError);
    std::ofstream(dir / "junk.json") << "{ not json";
    EXPECT_THROW(io::read_file((dir / "junk.json").string()), ParseError);
    std::filesystem::remove_all(dir);
}

TEST(Reports, CheckResultJson)
{
    auto r = check_sayd(trivial_coefficients(sweedler_h4()));
    json j = io::to_json(r);
    EXPECT_EQ(j.at("pass"), false);
    EXPECT_TRUE(j.contains("witness"));
    EXPECT_EQ(j["witness"]["element"], r.witness->element);
}

TEST(Reports, ComplexJson)
{
    auto k = trivial_hopf();
    auto b = build_comodule_algebra_complex(trivial_comodule_algebra(k), trivial_coefficients(k), 2);
    json j = io::to_json(b.complex);
    EXPECT_EQ(j.at("degrees").size(), 3u);
}
