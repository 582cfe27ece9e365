#include "lazcad/elim.hpp"

#include <stdexcept>
#include <utility>

#include "lazcad/instrumentation.hpp"
#include "lazcad/polyset.hpp"

namespace lazcad {

Counters& counters() {
    static Counters c;
    return c;
}

MultiPoly resultant(const MultiPoly& p, const MultiPoly& q, std::size_t var) {
    counters().resultant_calls++;
    if (p.is_zero() || q.is_zero()) throw std::invalid_argument("resultant: zero input");
    const auto& order = p.order();
    std::uint32_t da = p.degree(var), db = q.degree(var);
    if (da == 0) return p.pow(db);
    if (db == 0) return q.pow(da);

    MultiPoly a = p, b = q;
    bool negate = false;
    if (da < db) {
        std::swap(a, b);
        std::swap(da, db);
        if ((std::uint64_t(da) * db) % 2 != 0) negate = !negate;
    }

    // Subresultant PRS with the running identity
    //   res(p, q) = sign * num / den * res(a, b).
    MultiPoly one = MultiPoly::constant(order, Rat(1));
    MultiPoly num = one, den = one;
    MultiPoly psi = MultiPoly::constant(order, Rat(-1));
    std::uint32_t delta_prev = 0;
    bool first = true;

    while (true) {
        if (db == 0) {
            MultiPoly total = b.pow(da) * num;
            if (negate) total = -total;
            return den.is_constant() && den.constant_value() == 1 ? total : exact_div(total, den);
        }
        std::uint32_t delta = da - db;
        MultiPoly lcb = b.leading_coefficient(var);
        MultiPoly beta;
        if (first) {
            beta = MultiPoly::constant(order, Rat(delta % 2 == 0 ? -1 : 1));
            first = false;
        } else {
            MultiPoly neg_lca = -a.leading_coefficient(var);
            if (delta_prev == 0)
                ;  // psi unchanged
            else if (delta_prev == 1)
                psi = neg_lca;
            else
                psi = exact_div(neg_lca.pow(delta_prev), psi.pow(delta_prev - 1));
            beta = -a.leading_coefficient(var) * psi.pow(delta);
        }

        MultiPoly r = pseudo_divide(a, b, var).remainder;
        if (r.is_zero()) return MultiPoly::zero(order);
        MultiPoly next = exact_div(r, beta);
        std::uint32_t dn = next.degree(var);

        // res(a,b) = (-1)^(da db) lc(b)^(da - dn - (delta+1) db) beta^db res(b, next)
        if ((std::uint64_t(da) * db) % 2 != 0) negate = !negate;
        std::int64_t e =
            std::int64_t(da) - std::int64_t(dn) - std::int64_t(delta + 1) * std::int64_t(db);
        if (e >= 0)
            num = num * lcb.pow(static_cast<std::uint32_t>(e));
        else
            den = den * lcb.pow(static_cast<std::uint32_t>(-e));
        num = num * beta.pow(db);

        delta_prev = delta;
        a = std::move(b);
        b = std::move(next);
        da = a.degree(var);
        db = dn;
    }
}

MultiPoly discriminant(const MultiPoly& p, std::size_t var) {
    counters().discriminant_calls++;
    if (p.is_zero()) throw std::invalid_argument("discriminant: zero input");
    std::uint32_t d = p.degree(var);
    if (d <= 1) return MultiPoly::constant(p.order(), Rat(1));
    MultiPoly res = resultant(p, p.derivative(var), var);
    MultiPoly quo = exact_div(res, p.leading_coefficient(var));
    std::uint64_t half = (std::uint64_t(d) * (d - 1)) / 2;
    return half % 2 == 0 ? quo : -quo;
}

std::vector<MultiPoly> lazard_coefficient_set(const MultiPoly& p, std::size_t var) {
    if (p.is_zero()) return {};
    std::vector<MultiPoly> out;
    MultiPoly lead = canonicalize(p.leading_coefficient(var));
    MultiPoly trail = canonicalize(p.trailing_coefficient(var));
    if (!lead.is_constant() && !lead.is_zero()) out.push_back(lead);
    if (!trail.is_constant() && !trail.is_zero() && trail != lead) out.push_back(trail);
    return out;
}

}  // namespace lazcad
