#pragma once

// Named structure files the CLI can emit: the Hopf zoo, carriers,
// coefficients and a pair of cup product inputs.

#include <functional>
#include <string>
#include <vector>

#include "hcc/corpus.hpp"
#include "hcc/io.hpp"

namespace hcc::examples {

using io::json;

struct Example {
    std::string name;
    std::string kind;
    std::string description;
    std::function<json()> emit;
};

namespace detail {

inline HopfAlgebra h4() { return sweedler_h4(); }
inline HopfAlgebra z2() { return group_algebra(cyclic_group(2)); }

inline ModuleComodule named(ModuleComodule M, const std::string& name)
{
    M.name = name;
    return M;
}

inline GroupLike g_of_h4()
{
    HopfAlgebra h = h4();
    return grouplike(h, basis_vector(h.space, "g"));
}

/// The cup instance used for the sample cochains: Z/2 acting on k[Z/3] by
/// inversion, B = k[Z/2] with Δ, trivial coefficients.
inline corpus::CupInstance cup_instance() { return corpus::cup_instances().front(); }

/// First basis λ-cocycle in degree 0, as a cochain file.
inline json sample_cochain(bool module_side)
{
    auto inst = cup_instance();
    auto s = make_cup_setup(inst.A, inst.B, inst.M, 1);
    const CocyclicModule& X = module_side ? s.X : s.Y;
    auto zs = corpus::lambda_cocycles(X, 0);
    if (zs.empty())
        throw Error("the sample instance has no degree-0 λ-cocycle");
    io::Cochain c{module_side ? "module-algebra" : "comodule-algebra", 0, X.embed(0, zs.front())};
    json carrier = module_side ? io::to_json(inst.A) : io::to_json(inst.B);
    std::size_t dim = module_side ? inst.A.dim() : inst.B.dim();
    return io::to_json(c, carrier, io::to_json(inst.M), dim, inst.M.dim(), 0);
}

} // namespace detail

inline const std::vector<Example>& all()
{
    using namespace detail;
    static const std::vector<Example> v = {
        {"trivial", "hopf", "the ground field k as a Hopf algebra", [] { return io::to_json(trivial_hopf()); }},
        {"k-z2", "hopf", "group algebra of Z/2", [] { return io::to_json(z2()); }},
        {"k-z3", "hopf", "group algebra of Z/3", [] { return io::to_json(group_algebra(cyclic_group(3))); }},
        {"k-s3", "hopf", "group algebra of S3", [] { return io::to_json(group_algebra(symmetric_group(3))); }},
        {"k^z3", "hopf", "functions on Z/3", [] { return io::to_json(function_hopf(cyclic_group(3))); }},
        {"k^s3", "hopf", "functions on S3", [] { return io::to_json(function_hopf(symmetric_group(3))); }},
        {"sweedler-h4", "hopf", "Sweedler's four-dimensional Hopf algebra", [] { return io::to_json(h4()); }},
        {"bicrossed-s3", "hopf", "k^F ⋈ k[U] for S3 = U·F, F = A3", [] { return io::to_json(bicrossed_s3().hopf); }},
        {"bicrossed-s3-swapped", "hopf", "k^F ⋈ k[U] for S3 = U·F, U = A3",
         [] { return io::to_json(bicrossed_s3_swapped().hopf); }},
        {"bicrossed-s3-cop", "hopf", "co-opposite of bicrossed-s3 (coefficients for its k^F)",
         [] { return io::to_json(cop(bicrossed_s3().hopf)); }},
        {"bicrossed-s4", "hopf", "k^F ⋈ k[U] for S4 = S3·Z/4, neither commutative nor cocommutative",
         [] { return io::to_json(bicrossed_s4().hopf); }},

        {"trivial-comodule-algebra", "comodule-algebra", "k over k",
         [] { return io::to_json(trivial_comodule_algebra(trivial_hopf())); }},
        {"k-z2-regular", "comodule-algebra", "k[Z/2] coacting on itself by Δ",
         [] { return io::to_json(regular_comodule_algebra(z2())); }},
        {"sweedler-h4-regular", "comodule-algebra", "H4 coacting on itself by Δ",
         [] { return io::to_json(regular_comodule_algebra(h4())); }},
        {"bicrossed-s3-F", "comodule-algebra", "k^F with the right coaction f ↦ f(1) ⊗ (f(2) ⋈ 1)",
         [] { return io::to_json(bicrossed_F_comodule_algebra(bicrossed_s3())); }},

        {"trivial-comodule-coalgebra", "comodule-coalgebra", "k over k",
         [] { return io::to_json(trivial_comodule_coalgebra(trivial_hopf())); }},
        {"k-z2-adjoint", "comodule-coalgebra", "k[Z/2] with the right adjoint coaction",
         [] { return io::to_json(adjoint_comodule_coalgebra(z2())); }},
        {"sweedler-h4-adjoint", "comodule-coalgebra", "H4 with the right adjoint coaction",
         [] { return io::to_json(adjoint_comodule_coalgebra(h4())); }},
        {"bicrossed-s3-U", "comodule-coalgebra", "k[U] with the right coaction u ↦ (f ▷ u) ⊗ (e_f ⋈ 1)",
         [] { return io::to_json(bicrossed_U_comodule_coalgebra(bicrossed_s3())); }},

        {"trivial-module-algebra", "module-algebra", "k over k",
         [] { return io::to_json(trivial_module_algebra(trivial_hopf())); }},
        {"z2-on-k-z3", "module-algebra", "Z/2 acting on k[Z/3] by inversion",
         [] { return io::to_json(inversion_module_algebra(3)); }},
        {"sweedler-h4-dual-numbers", "module-algebra", "H4 acting on k[t]/t²",
         [] { return io::to_json(sweedler_dual_numbers()); }},

        {"trivial-coefficients", "module-comodule", "k over k", [] { return io::to_json(trivial_coefficients(trivial_hopf())); }},
        {"k-z2-C-1-eps", "module-comodule", "C(1,ε) over k[Z/2]", [] { return io::to_json(trivial_coefficients(z2())); }},
        {"k-z2-C-1-sign", "module-comodule", "C(1,sign) over k[Z/2]",
         [] {
             auto h = z2();
             return io::to_json(named(sigma_delta_coefficients(h, character_from_values(h, {Scalar(1), Scalar(-1)}),
                                                               unit_grouplike(h)),
                                      "C(1,sign)"));
         }},
        {"sweedler-h4-C-1-eps", "module-comodule", "C(1,ε) over H4 (not SAYD)",
         [] { return io::to_json(named(trivial_coefficients(h4()), "C(1,ε)")); }},
        {"sweedler-h4-C-g-eps", "module-comodule", "C(g,ε) over H4",
         [] {
             auto h = h4();
             return io::to_json(named(sigma_delta_coefficients(h, counit_character(h), g_of_h4()), "C(g,ε)"));
         }},
        {"bicrossed-s3-cop-trivial", "module-comodule", "k over the co-opposite of bicrossed-s3",
         [] { return io::to_json(trivial_coefficients(cop(bicrossed_s3().hopf))); }},

        {"cup-phi", "cochain", "a degree-0 λ-cocycle of the module algebra complex of z2-on-k-z3",
         [] { return sample_cochain(true); }},
        {"cup-psi", "cochain", "a degree-0 λ-cocycle of the comodule algebra complex of k-z2-regular",
         [] { return sample_cochain(false); }},
    };
    return v;
}

inline const Example* find(const std::string& name)
{
    for (const auto& e : all())
        if (e.name == name)
            return &e;
    return nullptr;
}

} // namespace hcc::examples
