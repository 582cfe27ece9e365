// Independent oracles for the test suites. These deliberately avoid the
// library's own subresultant / Descartes code paths: the resultant oracle is
// a dense Sylvester determinant via fraction-free elimination, and the root
// counting oracle is a classical Sturm sequence over exact rationals.
#pragma once

#include <random>
#include <vector>

#include "lazcad/multipoly.hpp"
#include "lazcad/polyset.hpp"

namespace oracles {

using lazcad::Int;
using lazcad::MultiPoly;
using lazcad::Rat;
using lazcad::VarOrderPtr;

// Dense Sylvester matrix determinant by Bareiss fraction-free elimination.
inline MultiPoly sylvester_resultant(const MultiPoly& p, const MultiPoly& q, std::size_t var) {
    std::uint32_t m = p.degree(var), n = q.degree(var);
    auto order = p.order();
    if (m == 0) return p.pow(n);
    if (n == 0) return q.pow(m);
    std::size_t size = m + n;
    std::vector<std::vector<MultiPoly>> a(size,
                                          std::vector<MultiPoly>(size, MultiPoly::zero(order)));
    for (std::size_t row = 0; row < n; ++row)
        for (std::uint32_t k = 0; k <= m; ++k) a[row][row + (m - k)] = p.coeff_of(var, k);
    for (std::size_t row = 0; row < m; ++row)
        for (std::uint32_t k = 0; k <= n; ++k) a[n + row][row + (n - k)] = q.coeff_of(var, k);

    MultiPoly prev = MultiPoly::constant(order, Rat(1));
    int sign = 1;
    for (std::size_t k = 0; k + 1 < size; ++k) {
        if (a[k][k].is_zero()) {
            std::size_t swap_row = k + 1;
            while (swap_row < size && a[swap_row][k].is_zero()) ++swap_row;
            if (swap_row == size) return MultiPoly::zero(order);
            std::swap(a[k], a[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < size; ++i)
            for (std::size_t j = k + 1; j < size; ++j)
                a[i][j] = lazcad::exact_div(a[i][j] * a[k][k] - a[i][k] * a[k][j], prev);
        prev = a[k][k];
    }
    MultiPoly det = a[size - 1][size - 1];
    return sign < 0 ? -det : det;
}

// Classical Sturm chain over Q (true remainders), counting distinct real
// roots of p in (a, b] or over the whole line.
struct SturmChain {
    std::vector<std::vector<Rat>> seq;  // ascending dense coefficients

    static std::vector<Rat> trim(std::vector<Rat> v) {
        while (!v.empty() && v.back() == 0) v.pop_back();
        return v;
    }
    static std::vector<Rat> derivative(const std::vector<Rat>& p) {
        std::vector<Rat> out;
        for (std::size_t i = 1; i < p.size(); ++i) out.push_back(p[i] * Rat(static_cast<long>(i)));
        return trim(std::move(out));
    }
    static std::vector<Rat> neg_rem(std::vector<Rat> a, const std::vector<Rat>& b) {
        while (a.size() >= b.size() && !a.empty()) {
            Rat f = a.back() / b.back();
            std::size_t off = a.size() - b.size();
            for (std::size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
            a = trim(std::move(a));
        }
        for (auto& c : a) c = -c;
        return a;
    }

    explicit SturmChain(std::vector<Rat> p) {
        p = trim(std::move(p));
        seq.push_back(p);
        std::vector<Rat> d = derivative(p);
        if (d.empty()) return;
        seq.push_back(d);
        while (true) {
            std::vector<Rat> r = neg_rem(seq[seq.size() - 2], seq.back());
            if (r.empty()) break;
            seq.push_back(std::move(r));
        }
    }

    static Rat eval(const std::vector<Rat>& p, const Rat& x) {
        Rat acc(0);
        for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
        return acc;
    }
    int variations_at(const Rat& x) const {
        int v = 0, last = 0;
        for (const auto& p : seq) {
            int s = sgn(eval(p, x));
            if (s == 0) continue;
            if (last != 0 && s != last) ++v;
            last = s;
        }
        return v;
    }
    int variations_at_inf(int dir) const {
        int v = 0, last = 0;
        for (const auto& p : seq) {
            if (p.empty()) continue;
            int s = sgn(p.back());
            if (dir < 0 && (p.size() - 1) % 2 == 1) s = -s;
            if (s == 0) continue;
            if (last != 0 && s != last) ++v;
            last = s;
        }
        return v;
    }

    int count_all() const { return variations_at_inf(-1) - variations_at_inf(+1); }
    int count_in(const Rat& a, const Rat& b) const { return variations_at(a) - variations_at(b); }
};

inline std::vector<Rat> dense_coeffs(const MultiPoly& p, std::size_t var) {
    std::vector<Rat> out(p.degree(var) + 1, Rat(0));
    for (const auto& [m, c] : p.terms()) out[m[var]] = c;
    return out;
}

// Deterministic random polynomials for property tests.
class PolyGen {
public:
    PolyGen(VarOrderPtr order, std::uint64_t seed) : order_(std::move(order)), rng_(seed) {}

    MultiPoly poly(unsigned max_terms, unsigned max_degree, long coeff_bound) {
        MultiPoly::TermMap terms;
        unsigned n = 1 + static_cast<unsigned>(rng_() % max_terms);
        for (unsigned t = 0; t < n; ++t) {
            lazcad::Monomial m(order_->size(), 0);
            for (auto& e : m) e = static_cast<std::uint32_t>(rng_() % (max_degree + 1));
            long c = static_cast<long>(rng_() % (2 * coeff_bound + 1)) - coeff_bound;
            if (c == 0) c = 1;
            auto [it, fresh] = terms.emplace(m, Rat(c));
            if (!fresh) it->second += Rat(c);
        }
        for (auto it = terms.begin(); it != terms.end();)
            it = it->second == 0 ? terms.erase(it) : std::next(it);
        return MultiPoly::from_terms(order_, std::move(terms));
    }

    MultiPoly nonzero(unsigned max_terms, unsigned max_degree, long coeff_bound) {
        while (true) {
            MultiPoly p = poly(max_terms, max_degree, coeff_bound);
            if (!p.is_zero()) return p;
        }
    }

    std::uint64_t raw() { return rng_(); }

private:
    VarOrderPtr order_;
    std::mt19937_64 rng_;
};

}  // namespace oracles
