#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "hcc/linalg.hpp"

namespace hcc {

/// Where and how an identity failed: the basis element (or tuple) it was
/// evaluated on and both sides of the identity.
struct Witness {
    std::string element;
    std::string lhs;
    std::string rhs;
    SparseVec lhs_vec;
    SparseVec rhs_vec;
    std::optional<int> degree;
};

struct CheckResult {
    bool pass = true;
    std::string condition;
    std::optional<Witness> witness;
    /// Per-degree or per-sub-condition verdict lines, in evaluation order.
    std::vector<std::string> notes;

    explicit operator bool() const { return pass; }

    static CheckResult ok(std::string condition)
    {
        CheckResult r;
        r.condition = std::move(condition);
        return r;
    }

    static CheckResult failure(std::string condition, Witness w)
    {
        CheckResult r;
        r.pass = false;
        r.condition = std::move(condition);
        r.witness = std::move(w);
        return r;
    }

    /// Failure built from the two sides of an identity evaluated at `element`.
    static CheckResult mismatch(std::string condition, std::string element, const SparseVec& lhs, const SparseVec& rhs,
                                const Space& target, std::optional<int> degree = std::nullopt)
    {
        Witness w;
        w.element = std::move(element);
        w.lhs_vec = lhs;
        w.rhs_vec = rhs;
        w.lhs = format_vector(lhs, target);
        w.rhs = format_vector(rhs, target);
        w.degree = degree;
        return failure(std::move(condition), std::move(w));
    }
};

inline std::ostream& operator<<(std::ostream& os, const CheckResult& r)
{
    os << (r.pass ? "PASS " : "FAIL ") << r.condition;
    if (r.witness) {
        const auto& w = *r.witness;
        os << "\n  at " << w.element;
        if (w.degree)
            os << " (degree " << *w.degree << ")";
        os << "\n  lhs = " << w.lhs << "\n  rhs = " << w.rhs;
    }
    return os;
}

/// Compares two equally shaped maps column by column and reports the first
/// basis element of the domain where they disagree.
inline CheckResult compare_maps(const std::string& condition, const LinMap& lhs, const LinMap& rhs,
                                std::optional<int> degree = std::nullopt)
{
    if (auto j = lhs.first_difference(rhs))
        return CheckResult::mismatch(condition, lhs.domain().label(*j), lhs.column(*j), rhs.column(*j), lhs.codomain(),
                                     degree);
    return CheckResult::ok(condition);
}

} // namespace hcc
