#pragma once

#include <vector>

#include "lazcad/multipoly.hpp"

namespace lazcad {

// Canonical form: integer-primitive (coefficients are coprime integers) with
// positive leading coefficient under the graded-lexicographic term order.
// Two polynomials equal up to a nonzero rational factor share one canonical
// form, which is what makes set dedup and old/new comparison well defined.
MultiPoly canonicalize(const MultiPoly& p);

// Content and primitive part with respect to var: content is the gcd of the
// var-coefficients (a polynomial in the remaining variables), and
// content * primitive == p exactly. For p constant in var the content is p
// itself and the primitive part is 1.
struct ContentPrimitive {
    MultiPoly content;
    MultiPoly primitive;
};
ContentPrimitive content_primitive(const MultiPoly& p, std::size_t var);

// Multivariate gcd, canonical (integer-primitive, positive leading
// coefficient); gcd with a nonzero constant is 1. Primitive PRS underneath.
MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b);

// Square-free part with respect to var: p / gcd(p, dp/dvar), canonicalized.
MultiPoly square_free_part(const MultiPoly& p, std::size_t var);

// Duplicate-free collection of canonical, non-constant polynomials kept in a
// deterministic order.
class PolySet {
public:
    PolySet() = default;

    // Canonicalizes, drops constants, deduplicates.
    void insert(const MultiPoly& p);
    void insert_all(const PolySet& other);
    bool contains(const MultiPoly& canonical_p) const;

    const std::vector<MultiPoly>& members() const { return members_; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }

    auto begin() const { return members_.begin(); }
    auto end() const { return members_.end(); }

    bool operator==(const PolySet& rhs) const;

    // Set difference (members of this absent from other).
    PolySet difference(const PolySet& other) const;

private:
    std::vector<MultiPoly> members_;  // sorted by MultiPoly::compare
};

// Drops constants, canonicalizes, deduplicates members equal up to a nonzero
// rational multiple.
PolySet remove_constant_multiples(const std::vector<MultiPoly>& polys);

// Set of square-free parts of the members (per-member decomposition, then
// canonical set union). Preserves the real-root set of the input.
PolySet square_free_factor_set(const PolySet& s, std::size_t var);

}  // namespace lazcad
