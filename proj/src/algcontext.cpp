#include "lazcad/algcontext.hpp"

#include <algorithm>
#include <stdexcept>

#include "lazcad/elim.hpp"
#include "lazcad/interval.hpp"
#include "lazcad/polyset.hpp"

namespace lazcad {

void AlgPoint::bind(std::size_t var, RealAlg value) {
    if (value.is_rational())
        throw std::invalid_argument("AlgPoint::bind: substitute rationals directly");
    bindings_.emplace(var, std::move(value));
}

namespace {

std::vector<std::size_t> vars_of(const MultiPoly& g) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < g.nvars(); ++i)
        if (g.degree(i) > 0) out.push_back(i);
    return out;
}

}  // namespace

int AlgPoint::sign_of(const MultiPoly& g) const {
    if (g.is_zero()) return 0;
    std::vector<std::size_t> vars = vars_of(g);
    for (auto v : vars)
        if (!is_bound(v)) throw std::invalid_argument("sign_of: unbound variable in polynomial");
    if (vars.empty()) return rat_sign(g.constant_value());
    if (vars.size() == 1) return sign_at(UPoly::from_multipoly(g, vars[0]), bindings_.at(vars[0]));
    return sign_by_certificate(g, vars);
}

int AlgPoint::sign_by_certificate(const MultiPoly& g, const std::vector<std::size_t>& vars) const {
    // Quick interval pass before building the certificate.
    auto box_of = [&]() {
        std::vector<RatInterval> box(order_->size(), RatInterval::point(Rat(0)));
        for (const auto& [v, a] : bindings_) box[v] = RatInterval(a.lo(), a.hi());
        return box;
    };
    for (int round = 0; round < 4; ++round) {
        RatInterval iv = interval_evaluate(g, box_of());
        if (!iv.contains_zero()) return iv.lo > 0 ? 1 : -1;
        for (auto v : vars) bindings_.at(v) = bindings_.at(v).refined_once();
    }

    // Candidate polynomial for the value c = g(point): eliminate each bound
    // variable against its defining polynomial from z - g. Then c is a root
    // of M(z), and the nonzero roots of M separate c from the rest.
    std::vector<std::string> names = order_->names();
    names.push_back("__val");
    VarOrderPtr ext = make_order(std::move(names));
    std::size_t zvar = ext->size() - 1;

    auto extend = [&](const MultiPoly& p) {
        MultiPoly::TermMap terms;
        for (const auto& [m, c] : p.terms()) {
            Monomial em = m;
            em.push_back(0);
            terms.emplace(std::move(em), c);
        }
        return MultiPoly::from_terms(ext, std::move(terms));
    };

    MultiPoly M = MultiPoly::variable(ext, zvar) - extend(g);
    for (auto v : vars) {
        if (M.degree(v) == 0) continue;
        MultiPoly def = bindings_.at(v).defining().to_multipoly(ext, v);
        M = resultant(def, M, v);
    }
    UPoly Mz = UPoly::from_multipoly(M, zvar);
    // Strip the z^k factor; if M is a pure power of z the value must be 0.
    std::size_t k = 0;
    const auto& mc = Mz.coeffs();
    while (k < mc.size() && mc[k] == 0) ++k;
    if (k == mc.size() || Mz.is_zero()) return 0;
    if (k == static_cast<std::size_t>(Mz.degree())) return 0;
    UPoly N = UPoly(std::vector<Int>(mc.begin() + k, mc.end())).square_free_part();
    std::vector<RealAlg> nroots = isolate_real_roots(N);

    while (true) {
        RatInterval iv = interval_evaluate(g, box_of());
        if (!iv.contains_zero()) return iv.lo > 0 ? 1 : -1;
        // c = 0 once every nonzero candidate root is excluded from the box.
        bool all_excluded = true;
        for (auto& r : nroots) {
            if (r.is_rational() && r.rational() == 0) continue;
            RealAlg rr = r;
            for (int i = 0; i < 4 && !(rr.hi() < iv.lo || rr.lo() > iv.hi); ++i)
                rr = rr.refined_once();
            r = rr;
            if (!(rr.hi() < iv.lo || rr.lo() > iv.hi)) {
                if (rr.is_rational() && rr.rational() == 0) continue;
                all_excluded = false;
                break;
            }
        }
        if (all_excluded) return 0;
        for (auto v : vars) bindings_.at(v) = bindings_.at(v).refined_once();
    }
}

bool AlgPoint::value_is_zero(const MultiPoly& g) const {
    if (g.is_zero()) return true;
    // Group by the unbound part of each monomial; every group's bound-variable
    // coefficient must vanish at the point.
    std::map<Monomial, MultiPoly::TermMap, GrlexLess> groups;
    for (const auto& [m, c] : g.terms()) {
        Monomial free = m, bound = m;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (is_bound(i))
                free[i] = 0;
            else
                bound[i] = 0;
        }
        groups[free].emplace(std::move(bound), c);
    }
    for (auto& [free, terms] : groups) {
        MultiPoly coeff = MultiPoly::from_terms(g.order(), std::move(terms));
        if (sign_of(coeff) != 0) return false;
    }
    return true;
}

namespace {

// Value-level leading-coefficient normalization: drop var-leading terms whose
// coefficients vanish at the point.
MultiPoly normalize_leading(const AlgPoint& pt, MultiPoly f, std::size_t var) {
    while (!f.is_zero()) {
        std::uint32_t d = f.degree(var);
        MultiPoly lead = f.coeff_of(var, d);
        if (!pt.value_is_zero(lead)) return f;
        f = f - lead * MultiPoly::variable(f.order(), var, d);
        if (d == 0) return f;  // became the zero value
    }
    return f;
}

struct SturmChain {
    std::vector<MultiPoly> s;
    const AlgPoint* pt;
    std::size_t var;

    // Sign variations at var = t.
    int variations(const Rat& t) const {
        int v = 0, last = 0;
        for (const auto& p : s) {
            MultiPoly ev = p.substitute(var, t);
            int sg = pt->sign_of(ev);
            if (sg == 0) continue;
            if (last != 0 && sg != last) ++v;
            last = sg;
        }
        return v;
    }

    // Distinct roots in (a, b], requiring F(a) != 0 and F(b) != 0 for the
    // exactness of the bound (callers arrange root-free endpoints).
    int count(const Rat& a, const Rat& b) const { return variations(a) - variations(b); }
};

SturmChain build_chain(const AlgPoint& pt, const MultiPoly& f, std::size_t var) {
    SturmChain chain{{}, &pt, var};
    MultiPoly s0 = normalize_leading(pt, f, var);
    if (s0.is_zero() || pt.value_is_zero(s0))
        throw std::logic_error("sturm chain of a vanishing polynomial");
    chain.s.push_back(s0);
    if (s0.degree(var) == 0) return chain;
    MultiPoly s1 = normalize_leading(pt, s0.derivative(var), var);
    if (s1.is_zero() || pt.value_is_zero(s1)) return chain;
    chain.s.push_back(s1);
    while (true) {
        const MultiPoly& a = chain.s[chain.s.size() - 2];
        const MultiPoly& b = chain.s.back();
        std::uint32_t da = a.degree(var), db = b.degree(var);
        if (db == 0) break;
        MultiPoly r = pseudo_divide(a, b, var).remainder;
        r = normalize_leading(pt, r, var);
        if (r.is_zero() || pt.value_is_zero(r)) break;
        // prem multiplier is lc(b)^(da-db+1); fix the Sturm sign by values.
        int lcsign = pt.sign_of(b.coeff_of(var, db));
        int msign = ((da - db + 1) % 2 == 0) ? 1 : lcsign;
        chain.s.push_back(msign > 0 ? -r : r);
    }
    return chain;
}

}  // namespace

std::vector<RealAlg> AlgPoint::isolate_roots(const MultiPoly& F, std::size_t var) const {
    // Fast path: nothing bound appears, plain univariate isolation.
    bool needs_point = false;
    for (std::size_t i = 0; i < F.nvars(); ++i)
        if (i != var && F.degree(i) > 0) {
            if (!is_bound(i)) throw std::invalid_argument("isolate_roots: unbound variable");
            needs_point = true;
        }
    if (!needs_point) {
        if (F.is_zero()) throw std::logic_error("isolate_roots: zero polynomial");
        if (F.degree(var) == 0) return {};
        return isolate_real_roots(F, var);
    }

    MultiPoly f = normalize_leading(*this, F, var);
    if (f.is_zero() || value_is_zero(f))
        throw std::logic_error("isolate_roots: polynomial vanishes at the point");
    std::uint32_t deg = f.degree(var);
    if (deg == 0) return {};

    SturmChain chain = build_chain(*this, f, var);

    // Root bound from certified coefficient enclosures.
    auto box_of = [&]() {
        std::vector<RatInterval> box(order_->size(), RatInterval::point(Rat(0)));
        for (const auto& [v, a] : bindings_) box[v] = RatInterval(a.lo(), a.hi());
        return box;
    };
    MultiPoly lead = f.coeff_of(var, deg);
    Rat lead_low(0);
    while (true) {
        RatInterval iv = interval_evaluate(lead, box_of());
        if (!iv.contains_zero()) {
            lead_low = std::min(rat_abs(iv.lo), rat_abs(iv.hi));
            break;
        }
        for (auto& [v, a] : bindings_) a = a.refined_once();
    }
    Rat maxc(0);
    for (std::uint32_t k = 0; k < deg; ++k) {
        RatInterval iv = interval_evaluate(f.coeff_of(var, k), box_of());
        Rat m = std::max(rat_abs(iv.lo), rat_abs(iv.hi));
        if (m > maxc) maxc = m;
    }
    Rat bound = maxc / lead_low + 1;
    Int bi = rat_ceil(bound);
    Rat B(bi);

    // Ensure the outer endpoints are not roots (they cannot be: |roots| < B).
    struct Window {
        Rat a, b;
        int count;
    };
    std::vector<std::pair<Rat, Rat>> isolated;  // open intervals, one root each
    std::vector<Rat> exact;                     // rational roots
    std::vector<Window> work;
    int total = chain.count(-B, B);
    if (total > 0) work.push_back({-B, B, total});
    while (!work.empty()) {
        Window w = work.back();
        work.pop_back();
        if (w.count == 1) {
            // One distinct root in (a, b]; b is not a root by construction.
            isolated.emplace_back(w.a, w.b);
            continue;
        }
        Rat mid = (w.a + w.b) / 2;
        MultiPoly fm = f.substitute(var, mid);
        if (sign_of(fm) == 0) {
            exact.push_back(mid);
            // Shield the midpoint with a root-free gap, then recurse outside.
            Rat delta = (w.b - w.a) / 4;
            while (true) {
                Rat gl = mid - delta, gr = mid + delta;
                if (sign_of(f.substitute(var, gl)) != 0 && sign_of(f.substitute(var, gr)) != 0 &&
                    chain.count(gl, gr) == 1) {
                    int left = chain.count(w.a, gl);
                    int right = chain.count(gr, w.b);
                    if (left > 0) work.push_back({w.a, gl, left});
                    if (right > 0) work.push_back({gr, w.b, right});
                    break;
                }
                delta = delta / 2;
            }
            continue;
        }
        int left = chain.count(w.a, mid);
        int right = w.count - left;
        if (left > 0) work.push_back({w.a, mid, left});
        if (right > 0) work.push_back({mid, w.b, right});
    }

    // Defining polynomial over Q by eliminating the bound variables.
    MultiPoly elim = f;
    for (const auto& [v, a] : bindings_) {
        if (elim.degree(v) == 0) continue;
        // Strip the pure-v content so the resultant cannot vanish.
        std::map<Monomial, MultiPoly::TermMap, GrlexLess> groups;
        for (const auto& [m, c] : elim.terms()) {
            Monomial rest = m, vpart(m.size(), 0);
            vpart[v] = m[v];
            rest[v] = 0;
            groups[rest].emplace(std::move(vpart), c);
        }
        MultiPoly content = MultiPoly::zero(order_);
        for (auto& [rest, terms] : groups) {
            MultiPoly c = MultiPoly::from_terms(order_, std::move(terms));
            content = content.is_zero() ? canonicalize(c) : poly_gcd(content, c);
            if (content.is_constant()) break;
        }
        if (!content.is_constant()) elim = exact_div(elim, content);
        MultiPoly def = a.defining().to_multipoly(order_, v);
        elim = resultant(def, elim, v);
        if (elim.is_zero()) throw std::logic_error("isolate_roots: degenerate elimination");
    }
    UPoly D = UPoly::from_multipoly(elim, var).square_free_part();
    std::vector<RealAlg> droots = isolate_real_roots(D);

    std::vector<RealAlg> out;
    for (const auto& r : exact) out.push_back(RealAlg::from_rational(r));
    for (auto [a, b] : isolated) {
        // Refine the window until it fits inside a single isolating interval
        // of the eliminated defining polynomial.
        std::optional<RealAlg> placed;
        for (int spins = 0; !placed; ++spins) {
            if (spins > 4000)
                throw std::logic_error("isolate_roots: eliminated polynomial misses a root");
            for (auto& dr : droots) {
                if (dr.is_rational()) {
                    if (a < dr.rational() && dr.rational() < b &&
                        sign_of(f.substitute(var, dr.rational())) == 0) {
                        // The window root is this rational.
                        placed = dr;
                        break;
                    }
                    continue;
                }
                if (dr.lo() <= a && b <= dr.hi()) {
                    placed = dr;
                    break;
                }
            }
            if (placed) break;
            // Shrink (a, b) around its root, keeping endpoints root-free.
            Rat mid = (a + b) / 2;
            if (sign_of(f.substitute(var, mid)) == 0) {
                placed = RealAlg::from_rational(mid);
                break;
            }
            if (chain.count(a, mid) == 1)
                b = mid;
            else
                a = mid;
            for (auto& dr : droots)
                if (!dr.is_rational()) dr = dr.refined_once();
        }
        out.push_back(*placed);
    }
    std::sort(out.begin(), out.end(), alg_less);
    return out;
}

}  // namespace lazcad
