#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "lazcad/numbers.hpp"
#include "lazcad/varorder.hpp"

namespace lazcad {

// Exponent vector; length always equals the session's variable count.
using Monomial = std::vector<std::uint32_t>;

// Graded lexicographic order: total degree first, then exponents compared
// from the highest variable down. Used for term storage and for the sign
// convention of the canonical form.
struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

// Sparse multivariate polynomial with exact rational coefficients under a
// fixed variable order. Immutable in spirit: all operations return new
// values. The zero polynomial is the empty term map.
class MultiPoly {
public:
    using TermMap = std::map<Monomial, Rat, GrlexLess>;

    MultiPoly() = default;
    explicit MultiPoly(VarOrderPtr order);
    MultiPoly(VarOrderPtr order, const Rat& constant);

    static MultiPoly zero(VarOrderPtr order) { return MultiPoly(std::move(order)); }
    static MultiPoly constant(VarOrderPtr order, const Rat& c) { return MultiPoly(std::move(order), c); }
    static MultiPoly variable(VarOrderPtr order, std::size_t var, std::uint32_t exp = 1);
    static MultiPoly from_terms(VarOrderPtr order, TermMap terms);

    const VarOrderPtr& order() const { return order_; }
    const TermMap& terms() const { return terms_; }
    std::size_t nvars() const { return order_ ? order_->size() : 0; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Constant term value; the whole value when is_constant().
    Rat constant_value() const;

    // Max exponent of var across terms; 0 for the zero polynomial.
    std::uint32_t degree(std::size_t var) const;
    std::uint32_t total_degree() const;
    bool contains_var(std::size_t var) const { return degree(var) > 0; }
    // Highest variable index with positive degree, or nullopt for constants.
    std::optional<std::size_t> main_variable() const;

    // Coefficient of var^k as a polynomial in the remaining variables.
    MultiPoly coeff_of(std::size_t var, std::uint32_t k) const;
    MultiPoly leading_coefficient(std::size_t var) const { return coeff_of(var, degree(var)); }
    MultiPoly trailing_coefficient(std::size_t var) const { return coeff_of(var, 0); }

    MultiPoly derivative(std::size_t var) const;
    MultiPoly substitute(std::size_t var, const Rat& value) const;
    Rat evaluate(const std::vector<Rat>& point) const;

    MultiPoly operator-() const;
    MultiPoly operator+(const MultiPoly& rhs) const;
    MultiPoly operator-(const MultiPoly& rhs) const;
    MultiPoly operator*(const MultiPoly& rhs) const;
    MultiPoly operator*(const Rat& c) const;
    MultiPoly operator/(const Rat& c) const;
    bool operator==(const MultiPoly& rhs) const;
    bool operator!=(const MultiPoly& rhs) const { return !(*this == rhs); }

    MultiPoly pow(std::uint32_t e) const;

    // Total deterministic order (by term maps); used for canonical sets.
    static int compare(const MultiPoly& a, const MultiPoly& b);

    // Human-readable canonical text, highest terms first.
    std::string to_string() const;

private:
    void insert_term(const Monomial& m, const Rat& c);

    VarOrderPtr order_;
    TermMap terms_;

    friend MultiPoly poly_add_scaled(const MultiPoly&, const MultiPoly&, const Rat&);
};

MultiPoly operator*(const Rat& c, const MultiPoly& p);

// Pseudo-remainder and pseudo-quotient of a by b with respect to var:
// lc(b)^(deg a - deg b + 1) * a = pquo * b + prem. Requires deg(a) >= deg(b)
// in var and b with positive degree in var.
struct PseudoDivision {
    MultiPoly quotient;
    MultiPoly remainder;
};
PseudoDivision pseudo_divide(const MultiPoly& a, const MultiPoly& b, std::size_t var);

// Exact multivariate division. divides() reports whether p = d * q for some
// polynomial q; exact_div returns q and throws if no such q exists.
bool divides(const MultiPoly& p, const MultiPoly& d);
MultiPoly exact_div(const MultiPoly& p, const MultiPoly& d);

}  // namespace lazcad
