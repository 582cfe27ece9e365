#include "lazcad/polyset.hpp"

#include <algorithm>
#include <stdexcept>

namespace lazcad {

MultiPoly canonicalize(const MultiPoly& p) {
    if (p.is_zero()) return p;
    Int den_lcm(1);
    for (const auto& [m, c] : p.terms())
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    Int num_gcd(0);
    for (const auto& [m, c] : p.terms()) {
        Int scaled_num = c.get_num() * (den_lcm / c.get_den());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled_num.get_mpz_t());
    }
    Rat scale(den_lcm, num_gcd);
    scale.canonicalize();
    // Positive leading coefficient under grlex.
    if (p.terms().rbegin()->second * scale < 0) scale = -scale;
    return p * scale;
}

namespace {

MultiPoly primitive_positive(const MultiPoly& p) { return canonicalize(p); }

// Primitive PRS gcd of primitive inputs with positive degree in var.
MultiPoly prs_gcd(MultiPoly a, MultiPoly b, std::size_t var) {
    if (a.degree(var) < b.degree(var)) std::swap(a, b);
    while (true) {
        std::uint32_t db = b.degree(var);
        if (db == 0) {
            // Primitive parts are coprime in var unless b vanished.
            return b.is_zero() ? primitive_positive(a) : MultiPoly::constant(a.order(), Rat(1));
        }
        MultiPoly r = pseudo_divide(a, b, var).remainder;
        a = std::move(b);
        if (r.is_zero())
            b = MultiPoly::zero(a.order());
        else
            b = content_primitive(r, var).primitive;
    }
}

}  // namespace

ContentPrimitive content_primitive(const MultiPoly& p, std::size_t var) {
    if (p.is_zero()) throw std::invalid_argument("content_primitive: zero polynomial");
    std::uint32_t d = p.degree(var);
    if (d == 0) return {p, MultiPoly::constant(p.order(), Rat(1))};
    MultiPoly cont = MultiPoly::zero(p.order());
    for (std::uint32_t k = 0; k <= d; ++k) {
        MultiPoly c = p.coeff_of(var, k);
        if (c.is_zero()) continue;
        cont = cont.is_zero() ? canonicalize(c) : poly_gcd(cont, c);
        if (cont.is_constant()) break;
    }
    MultiPoly prim =
        cont.is_constant() ? canonicalize(p) : canonicalize(exact_div(p, cont));
    // Content absorbs the numeric factor so content * primitive == p exactly.
    return {exact_div(p, prim), prim};
}

MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b) {
    if (a.is_zero()) return b.is_zero() ? b : canonicalize(b);
    if (b.is_zero()) return canonicalize(a);
    if (a.is_constant() || b.is_constant()) return MultiPoly::constant(a.order(), Rat(1));
    auto va = a.main_variable(), vb = b.main_variable();
    std::size_t v = std::max(*va, *vb);
    if (a.degree(v) == 0 || b.degree(v) == 0) {
        // One side is free of the top variable: gcd divides its content side.
        const MultiPoly& free = a.degree(v) == 0 ? a : b;
        const MultiPoly& other = a.degree(v) == 0 ? b : a;
        return poly_gcd(free, content_primitive(other, v).content);
    }
    auto [ca, pa] = content_primitive(a, v);
    auto [cb, pb] = content_primitive(b, v);
    MultiPoly cg = poly_gcd(ca, cb);
    MultiPoly g = prs_gcd(pa, pb, v);
    return canonicalize(cg * g);
}

MultiPoly square_free_part(const MultiPoly& p, std::size_t var) {
    if (p.is_zero()) throw std::invalid_argument("square_free_part: zero polynomial");
    if (p.degree(var) == 0) return canonicalize(p);
    MultiPoly g = poly_gcd(p, p.derivative(var));
    if (g.is_constant()) return canonicalize(p);
    return canonicalize(exact_div(canonicalize(p), g));
}

void PolySet::insert(const MultiPoly& p) {
    if (p.is_zero()) return;
    MultiPoly c = canonicalize(p);
    if (c.is_constant()) return;
    auto it = std::lower_bound(members_.begin(), members_.end(), c,
                               [](const MultiPoly& x, const MultiPoly& y) {
                                   return MultiPoly::compare(x, y) < 0;
                               });
    if (it != members_.end() && *it == c) return;
    members_.insert(it, std::move(c));
}

void PolySet::insert_all(const PolySet& other) {
    for (const auto& p : other.members_) insert(p);
}

bool PolySet::contains(const MultiPoly& canonical_p) const {
    auto it = std::lower_bound(members_.begin(), members_.end(), canonical_p,
                               [](const MultiPoly& x, const MultiPoly& y) {
                                   return MultiPoly::compare(x, y) < 0;
                               });
    return it != members_.end() && *it == canonical_p;
}

bool PolySet::operator==(const PolySet& rhs) const { return members_ == rhs.members_; }

PolySet PolySet::difference(const PolySet& other) const {
    PolySet out;
    for (const auto& p : members_)
        if (!other.contains(p)) out.insert(p);
    return out;
}

PolySet remove_constant_multiples(const std::vector<MultiPoly>& polys) {
    PolySet out;
    for (const auto& p : polys) out.insert(p);
    return out;
}

PolySet square_free_factor_set(const PolySet& s, std::size_t var) {
    PolySet out;
    for (const auto& p : s) out.insert(square_free_part(p, var));
    return out;
}

}  // namespace lazcad
