#include "lazcad/multipoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace lazcad {

bool GrlexLess::operator()(const Monomial& a, const Monomial& b) const {
    std::uint64_t da = 0, db = 0;
    for (auto e : a) da += e;
    for (auto e : b) db += e;
    if (da != db) return da < db;
    // Same total degree: compare from the highest variable down.
    std::size_t n = std::max(a.size(), b.size());
    for (std::size_t i = n; i-- > 0;) {
        std::uint32_t ea = i < a.size() ? a[i] : 0;
        std::uint32_t eb = i < b.size() ? b[i] : 0;
        if (ea != eb) return ea < eb;
    }
    return false;
}

MultiPoly::MultiPoly(VarOrderPtr order) : order_(std::move(order)) {
    if (!order_) throw std::invalid_argument("null variable order");
}

MultiPoly::MultiPoly(VarOrderPtr order, const Rat& constant) : MultiPoly(std::move(order)) {
    if (constant != 0) terms_.emplace(Monomial(order_->size(), 0), constant);
}

MultiPoly MultiPoly::variable(VarOrderPtr order, std::size_t var, std::uint32_t exp) {
    MultiPoly p(std::move(order));
    if (var >= p.nvars()) throw std::invalid_argument("variable index out of range");
    Monomial m(p.nvars(), 0);
    m[var] = exp;
    if (exp == 0) m.assign(p.nvars(), 0);
    p.terms_.emplace(std::move(m), Rat(1));
    return p;
}

MultiPoly MultiPoly::from_terms(VarOrderPtr order, TermMap terms) {
    MultiPoly p(std::move(order));
    for (auto it = terms.begin(); it != terms.end();) {
        if (it->first.size() != p.nvars()) throw std::invalid_argument("bad exponent vector length");
        if (it->second == 0)
            it = terms.erase(it);
        else
            ++it;
    }
    p.terms_ = std::move(terms);
    return p;
}

bool MultiPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const Monomial& m = terms_.begin()->first;
    return std::all_of(m.begin(), m.end(), [](std::uint32_t e) { return e == 0; });
}

Rat MultiPoly::constant_value() const {
    Monomial zero(nvars(), 0);
    auto it = terms_.find(zero);
    return it == terms_.end() ? Rat(0) : it->second;
}

std::uint32_t MultiPoly::degree(std::size_t var) const {
    std::uint32_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m[var]);
    return d;
}

std::uint32_t MultiPoly::total_degree() const {
    std::uint32_t d = 0;
    for (const auto& [m, c] : terms_) {
        std::uint32_t t = 0;
        for (auto e : m) t += e;
        d = std::max(d, t);
    }
    return d;
}

std::optional<std::size_t> MultiPoly::main_variable() const {
    for (std::size_t i = nvars(); i-- > 0;)
        if (degree(i) > 0) return i;
    return std::nullopt;
}

MultiPoly MultiPoly::coeff_of(std::size_t var, std::uint32_t k) const {
    MultiPoly out(order_);
    for (const auto& [m, c] : terms_) {
        if (m[var] != k) continue;
        Monomial reduced = m;
        reduced[var] = 0;
        out.insert_term(reduced, c);
    }
    return out;
}

MultiPoly MultiPoly::derivative(std::size_t var) const {
    MultiPoly out(order_);
    for (const auto& [m, c] : terms_) {
        if (m[var] == 0) continue;
        Monomial reduced = m;
        reduced[var] -= 1;
        out.insert_term(reduced, c * Rat(m[var]));
    }
    return out;
}

MultiPoly MultiPoly::substitute(std::size_t var, const Rat& value) const {
    MultiPoly out(order_);
    for (const auto& [m, c] : terms_) {
        Monomial reduced = m;
        reduced[var] = 0;
        out.insert_term(reduced, c * rat_pow(value, m[var]));
    }
    return out;
}

Rat MultiPoly::evaluate(const std::vector<Rat>& point) const {
    if (point.size() != nvars()) throw std::invalid_argument("point dimension mismatch");
    Rat acc(0);
    for (const auto& [m, c] : terms_) {
        Rat t = c;
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i] != 0) t *= rat_pow(point[i], m[i]);
        acc += t;
    }
    return acc;
}

void MultiPoly::insert_term(const Monomial& m, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly out(order_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

MultiPoly poly_add_scaled(const MultiPoly& a, const MultiPoly& b, const Rat& s) {
    MultiPoly out = a;
    for (const auto& [m, c] : b.terms_) out.insert_term(m, c * s);
    return out;
}

MultiPoly MultiPoly::operator+(const MultiPoly& rhs) const { return poly_add_scaled(*this, rhs, Rat(1)); }
MultiPoly MultiPoly::operator-(const MultiPoly& rhs) const { return poly_add_scaled(*this, rhs, Rat(-1)); }

MultiPoly MultiPoly::operator*(const MultiPoly& rhs) const {
    MultiPoly out(order_);
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : rhs.terms_) {
            Monomial m(nvars());
            for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
            out.insert_term(m, ca * cb);
        }
    }
    return out;
}

MultiPoly MultiPoly::operator*(const Rat& c) const {
    MultiPoly out(order_);
    if (c == 0) return out;
    for (const auto& [m, coeff] : terms_) out.terms_.emplace(m, coeff * c);
    return out;
}

MultiPoly MultiPoly::operator/(const Rat& c) const {
    if (c == 0) throw std::invalid_argument("division by zero");
    return *this * Rat(1 / c);
}

MultiPoly operator*(const Rat& c, const MultiPoly& p) { return p * c; }

bool MultiPoly::operator==(const MultiPoly& rhs) const { return terms_ == rhs.terms_; }

MultiPoly MultiPoly::pow(std::uint32_t e) const {
    MultiPoly acc = MultiPoly::constant(order_, Rat(1));
    MultiPoly base = *this;
    while (e > 0) {
        if (e & 1u) acc = acc * base;
        base = (e >>= 1) ? base * base : base;
    }
    return acc;
}

int MultiPoly::compare(const MultiPoly& a, const MultiPoly& b) {
    auto ia = a.terms_.rbegin(), ib = b.terms_.rbegin();
    GrlexLess less;
    for (; ia != a.terms_.rend() && ib != b.terms_.rend(); ++ia, ++ib) {
        if (less(ia->first, ib->first)) return -1;
        if (less(ib->first, ia->first)) return 1;
        int cs = cmp(ia->second, ib->second);
        if (cs != 0) return cs;
    }
    if (ia != a.terms_.rend()) return 1;
    if (ib != b.terms_.rend()) return -1;
    return 0;
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        Rat a = c;
        if (first) {
            if (a < 0) {
                out << "-";
                a = -a;
            }
        } else {
            out << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool has_vars = std::any_of(m.begin(), m.end(), [](std::uint32_t e) { return e > 0; });
        bool coeff_shown = (a != 1) || !has_vars;
        if (coeff_shown) out << rat_to_string(a);
        bool need_star = coeff_shown;
        for (std::size_t i = m.size(); i-- > 0;) {
            if (m[i] == 0) continue;
            if (need_star) out << "*";
            out << order_->name(i);
            if (m[i] > 1) out << "^" << m[i];
            need_star = true;
        }
    }
    return out.str();
}

PseudoDivision pseudo_divide(const MultiPoly& a, const MultiPoly& b, std::size_t var) {
    std::uint32_t db = b.degree(var);
    if (b.is_zero() || db == 0)
        throw std::invalid_argument("pseudo_divide: divisor must have positive degree");
    std::uint32_t da = a.degree(var);
    if (da < db) throw std::invalid_argument("pseudo_divide: dividend degree too small");
    MultiPoly lcb = b.leading_coefficient(var);
    MultiPoly rem = a;
    MultiPoly quo = MultiPoly::zero(a.order());
    std::uint32_t steps = da - db + 1;
    std::uint32_t dr = rem.degree(var);
    while (!rem.is_zero() && dr >= db) {
        MultiPoly t = rem.coeff_of(var, dr) * MultiPoly::variable(a.order(), var, dr - db);
        quo = quo * lcb + t;
        rem = rem * lcb - t * b;
        --steps;
        std::uint32_t nd = rem.degree(var);
        if (!rem.is_zero() && nd >= dr) throw std::logic_error("pseudo_divide: degree did not drop");
        dr = nd;
    }
    // Pad so the multiplier is exactly lc(b)^(da-db+1).
    for (; steps > 0; --steps) {
        quo = quo * lcb;
        rem = rem * lcb;
    }
    return {std::move(quo), std::move(rem)};
}

bool divides(const MultiPoly& p, const MultiPoly& d) {
    if (d.is_zero()) return false;
    if (p.is_zero()) return true;
    MultiPoly rem = p;
    const auto& dlead = *d.terms().rbegin();
    while (!rem.is_zero()) {
        const auto& rlead = *rem.terms().rbegin();
        Monomial q(rem.nvars());
        for (std::size_t i = 0; i < q.size(); ++i) {
            if (rlead.first[i] < dlead.first[i]) return false;
            q[i] = rlead.first[i] - dlead.first[i];
        }
        MultiPoly t = MultiPoly::from_terms(rem.order(), {{q, rlead.second / dlead.second}});
        rem = rem - t * d;
    }
    return true;
}

MultiPoly exact_div(const MultiPoly& p, const MultiPoly& d) {
    if (d.is_zero()) throw std::invalid_argument("exact_div: zero divisor");
    MultiPoly quo = MultiPoly::zero(p.order());
    MultiPoly rem = p;
    const auto& dlead = *d.terms().rbegin();
    while (!rem.is_zero()) {
        const auto& rlead = *rem.terms().rbegin();
        Monomial q(rem.nvars());
        for (std::size_t i = 0; i < q.size(); ++i) {
            if (rlead.first[i] < dlead.first[i])
                throw std::invalid_argument("exact_div: not divisible");
            q[i] = rlead.first[i] - dlead.first[i];
        }
        MultiPoly t = MultiPoly::from_terms(rem.order(), {{q, rlead.second / dlead.second}});
        quo = quo + t;
        rem = rem - t * d;
    }
    return quo;
}

}  // namespace lazcad
