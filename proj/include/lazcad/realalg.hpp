#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lazcad/interval.hpp"
#include "lazcad/multipoly.hpp"
#include "lazcad/numbers.hpp"

namespace lazcad {

// Dense univariate polynomial over Z, ascending coefficients. The workhorse
// for real root isolation and algebraic-number defining polynomials.
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(std::vector<Int> coeffs);

    static UPoly from_multipoly(const MultiPoly& p, std::size_t var);
    MultiPoly to_multipoly(const VarOrderPtr& order, std::size_t var) const;

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Int>& coeffs() const { return c_; }
    const Int& leading() const { return c_.back(); }

    int sign_at(const Rat& x) const;
    Rat value_at(const Rat& x) const;

    UPoly derivative() const;
    UPoly primitive() const;  // integer content removed, leading coefficient > 0
    UPoly negate_variable() const;  // p(-x)
    UPoly reverse() const;          // x^n p(1/x)
    UPoly shift1() const;           // p(x+1)
    UPoly scale_den2() const;       // 2^n p(x/2)
    // Integer-primitive image of p(a + (b-a) x).
    UPoly map_to_unit(const Rat& a, const Rat& b) const;
    // Exact quotient by (x - r) for a rational root r.
    UPoly divide_linear(const Rat& r) const;

    static UPoly gcd(const UPoly& a, const UPoly& b);
    UPoly square_free_part() const;

    int sign_variations() const;
    // Strict bound B with all real roots in (-B, B).
    Rat cauchy_bound() const;

    bool operator==(const UPoly& rhs) const { return c_ == rhs.c_; }

    std::string to_string(const std::string& var = "x") const;

private:
    void normalize();
    std::vector<Int> c_;
};

// Exact real algebraic number: either an exact rational, or a square-free
// integer defining polynomial with an open isolating interval (lo, hi)
// containing exactly one real root, with defining(lo), defining(hi) nonzero.
class RealAlg {
public:
    RealAlg() : rational_(0), is_rational_(true) {}
    static RealAlg from_rational(Rat v);
    // Normalizes to the rational representation when the root is detected
    // rational (degree-1 defining polynomial, midpoint hits, simple probes).
    static RealAlg from_root(UPoly defining, Rat lo, Rat hi);

    bool is_rational() const { return is_rational_; }
    const Rat& rational() const { return rational_; }
    const UPoly& defining() const { return defining_; }
    // Enclosing interval; degenerate (v, v) for rationals.
    Rat lo() const { return is_rational_ ? rational_ : lo_; }
    Rat hi() const { return is_rational_ ? rational_ : hi_; }

    // Shrinks the isolating interval below width. May discover rationality.
    RealAlg refined(const Rat& width) const;
    RealAlg refined_once() const;

    RealAlg negated() const;
    RealAlg shifted_by(const Int& n) const;  // value + n
    RealAlg reciprocal() const;              // requires nonzero value

    int sign() const;

    // Decimal approximation, marked with '~' when inexact.
    std::string to_decimal(unsigned digits) const;
    std::string to_exact_string(const std::string& var = "x") const;
    // Representation-independent text: equal values always print alike
    // (exact rational form, or a certified floor at `digits` fraction digits).
    std::string canonical_digest(unsigned digits) const;

private:
    Rat rational_;
    bool is_rational_ = false;
    UPoly defining_;
    Rat lo_, hi_;
};

enum class Cmp { Less = -1, Equal = 0, Greater = 1 };

Cmp compare(const RealAlg& a, const RealAlg& b);
inline bool alg_less(const RealAlg& a, const RealAlg& b) { return compare(a, b) == Cmp::Less; }
inline bool alg_eq(const RealAlg& a, const RealAlg& b) { return compare(a, b) == Cmp::Equal; }

// Exact sign of the univariate p at a.
int sign_at(const UPoly& p, const RealAlg& a);
int sign_at(const MultiPoly& p, std::size_t var, const RealAlg& a);

// Real root isolation (Descartes/VCA bisection on the square-free part).
// Roots sorted ascending, pairwise disjoint isolating intervals; constants
// yield the empty sequence; throws on the zero polynomial.
std::vector<RealAlg> isolate_real_roots(const UPoly& p);
std::vector<RealAlg> isolate_real_roots(const MultiPoly& p, std::size_t var);

struct MergedRoots {
    std::vector<RealAlg> roots;
    std::vector<bool> is_new;  // parallel to roots: absent from the old input
};
// Sorted union with exact duplicate elimination.
MergedRoots merge_roots(const std::vector<RealAlg>& old_roots,
                        const std::vector<RealAlg>& new_roots);

enum class CadMode { Open, Full };

// Simplest rational strictly between two reals (Stern-Brocot descent with
// exact endpoint comparisons). Representation-independent and deterministic.
Rat simplest_rational_in(const RealAlg& a, const RealAlg& b);

// Sample points for the decomposition of the line by sorted distinct roots.
// Full mode: 2k+1 points alternating sector witnesses and the roots
// themselves. Open mode: the k+1 sector witnesses only. Unbounded sectors
// use (root bound + 1) on either side.
std::vector<RealAlg> gen_sample_points(const std::vector<RealAlg>& roots, CadMode mode);

// A CAD sample point: one coordinate per lifted variable.
using SamplePoint = std::vector<RealAlg>;

}  // namespace lazcad
