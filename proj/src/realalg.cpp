#include "lazcad/realalg.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace lazcad {

// ---------------------------------------------------------------------------
// UPoly

UPoly::UPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { normalize(); }

void UPoly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UPoly UPoly::from_multipoly(const MultiPoly& p, std::size_t var) {
    for (std::size_t i = 0; i < p.nvars(); ++i)
        if (i != var && p.degree(i) > 0)
            throw std::invalid_argument("from_multipoly: polynomial is not univariate in var");
    // Clear denominators first.
    Int den_lcm(1);
    for (const auto& [m, c] : p.terms())
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    std::vector<Int> coeffs(p.degree(var) + 1, Int(0));
    for (const auto& [m, c] : p.terms()) {
        Rat scaled = c * Rat(den_lcm);
        coeffs[m[var]] = scaled.get_num();
    }
    return UPoly(std::move(coeffs));
}

MultiPoly UPoly::to_multipoly(const VarOrderPtr& order, std::size_t var) const {
    MultiPoly::TermMap terms;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        Monomial m(order->size(), 0);
        m[var] = static_cast<std::uint32_t>(i);
        terms.emplace(std::move(m), Rat(c_[i]));
    }
    return MultiPoly::from_terms(order, std::move(terms));
}

Rat UPoly::value_at(const Rat& x) const {
    Rat acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + Rat(c_[i]);
    return acc;
}

int UPoly::sign_at(const Rat& x) const {
    if (c_.empty()) return 0;
    // Integer Horner on numerator/denominator: sign of sum c_i a^i b^(n-i).
    const Int& a = x.get_num();
    const Int& b = x.get_den();
    Int acc = c_.back();
    for (std::size_t i = c_.size() - 1; i-- > 0;) acc = acc * a + c_[i] * int_pow(b, c_.size() - 1 - i);
    return sgn(acc);
}

UPoly UPoly::derivative() const {
    if (c_.size() <= 1) return UPoly();
    std::vector<Int> out(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) out[i - 1] = c_[i] * Int(static_cast<long>(i));
    return UPoly(std::move(out));
}

UPoly UPoly::primitive() const {
    if (c_.empty()) return *this;
    Int g(0);
    for (const auto& v : c_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (c_.back() < 0) g = -g;
    std::vector<Int> out(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) out[i] = c_[i] / g;
    return UPoly(std::move(out));
}

UPoly UPoly::negate_variable() const {
    std::vector<Int> out = c_;
    for (std::size_t i = 1; i < out.size(); i += 2) out[i] = -out[i];
    return UPoly(std::move(out));
}

UPoly UPoly::reverse() const {
    std::vector<Int> out(c_.rbegin(), c_.rend());
    return UPoly(std::move(out));
}

UPoly UPoly::shift1() const {
    // Taylor shift by 1 via repeated synthetic addition.
    std::vector<Int> out = c_;
    for (std::size_t i = 0; i + 1 < out.size(); ++i)
        for (std::size_t j = out.size() - 1; j-- > i;) out[j] += out[j + 1];
    return UPoly(std::move(out));
}

UPoly UPoly::scale_den2() const {
    std::vector<Int> out = c_;
    std::size_t n = out.empty() ? 0 : out.size() - 1;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] <<= static_cast<unsigned>(n - i);
    return UPoly(std::move(out));
}

UPoly UPoly::map_to_unit(const Rat& a, const Rat& b) const {
    // q(x) = p(a + (b-a) x), then integer-primitivized.
    // Horner in (a + w x) with exact rational arithmetic on a dense vector.
    Rat w = b - a;
    std::vector<Rat> acc;  // ascending in x
    acc.reserve(c_.size());
    for (std::size_t i = c_.size(); i-- > 0;) {
        // acc <- acc * (a + w x) + c_i
        std::vector<Rat> next(acc.size() + 1, Rat(0));
        for (std::size_t j = 0; j < acc.size(); ++j) {
            next[j] += acc[j] * a;
            next[j + 1] += acc[j] * w;
        }
        if (next.empty()) next.push_back(Rat(0));
        next[0] += Rat(c_[i]);
        acc = std::move(next);
    }
    Int den_lcm(1);
    for (const auto& v : acc) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), v.get_den().get_mpz_t());
    std::vector<Int> out(acc.size());
    for (std::size_t i = 0; i < acc.size(); ++i) {
        Rat scaled = acc[i] * Rat(den_lcm);
        out[i] = scaled.get_num();
    }
    return UPoly(std::move(out)).primitive();
}

UPoly UPoly::divide_linear(const Rat& r) const {
    // p(x) = (x - r) q(x); synthetic division, exactness required.
    if (c_.empty()) return UPoly();
    std::vector<Rat> q(c_.size() - 1, Rat(0));
    Rat carry(c_.back());
    for (std::size_t i = c_.size() - 1; i-- > 0;) {
        q[i] = carry;
        carry = Rat(c_[i]) + carry * r;
    }
    if (carry != 0) throw std::invalid_argument("divide_linear: not a root");
    Int den_lcm(1);
    for (const auto& v : q) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), v.get_den().get_mpz_t());
    std::vector<Int> out(q.size());
    for (std::size_t i = 0; i < q.size(); ++i) out[i] = Rat(q[i] * Rat(den_lcm)).get_num();
    return UPoly(std::move(out)).primitive();
}

namespace {

// Pseudo-remainder of a by b (univariate, integer).
UPoly upoly_prem(const UPoly& a, const UPoly& b) {
    std::vector<Int> r = a.coeffs();
    const std::vector<Int>& d = b.coeffs();
    int dr = a.degree(), db = b.degree();
    const Int& lcb = d.back();
    while (dr >= db && !(dr == 0 && r.empty())) {
        // r <- lcb * r - lead(r) x^(dr-db) * b
        Int lead = r[dr];
        for (auto& v : r) v *= lcb;
        for (int i = 0; i <= db; ++i) r[dr - db + i] -= lead * d[i];
        while (!r.empty() && r.back() == 0) r.pop_back();
        if (r.empty()) break;
        dr = static_cast<int>(r.size()) - 1;
    }
    return UPoly(std::move(r));
}

}  // namespace

UPoly UPoly::gcd(const UPoly& a, const UPoly& b) {
    if (a.is_zero()) return b.primitive();
    if (b.is_zero()) return a.primitive();
    UPoly x = a.primitive(), y = b.primitive();
    if (x.degree() < y.degree()) std::swap(x, y);
    while (true) {
        if (y.degree() == 0) return UPoly({Int(1)});
        UPoly r = upoly_prem(x, y);
        if (r.is_zero()) return y.primitive();
        x = std::move(y);
        y = r.primitive();
    }
}

UPoly UPoly::square_free_part() const {
    if (degree() <= 1) return primitive();
    UPoly g = gcd(*this, derivative());
    if (g.degree() == 0) return primitive();
    // Exact division via rational synthetic division is overkill; use the
    // subresultant-free route: repeatedly divide out g with exact division.
    // Dense exact division p / g over Q, then primitivize.
    const std::vector<Int>& gc = g.coeffs();
    std::vector<Rat> rem(c_.begin(), c_.end());
    std::vector<Rat> quo(c_.size() - gc.size() + 1, Rat(0));
    int dg = g.degree();
    for (int i = static_cast<int>(rem.size()) - 1; i >= dg; --i) {
        Rat f = rem[i] / Rat(gc.back());
        if (f == 0) continue;
        quo[i - dg] = f;
        for (int j = 0; j <= dg; ++j) rem[i - dg + j] -= f * Rat(gc[j]);
    }
    for (int i = 0; i < dg; ++i)
        if (rem[i] != 0) throw std::logic_error("square_free_part: division not exact");
    Int den_lcm(1);
    for (const auto& v : quo) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), v.get_den().get_mpz_t());
    std::vector<Int> out(quo.size());
    for (std::size_t i = 0; i < quo.size(); ++i) out[i] = Rat(quo[i] * Rat(den_lcm)).get_num();
    return UPoly(std::move(out)).primitive();
}

int UPoly::sign_variations() const {
    int v = 0, last = 0;
    for (const auto& x : c_) {
        int s = sgn(x);
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

Rat UPoly::cauchy_bound() const {
    if (c_.empty()) return Rat(1);
    Rat maxr(0);
    for (std::size_t i = 0; i + 1 < c_.size(); ++i) {
        Rat r = rat_abs(Rat(c_[i]) / Rat(c_.back()));
        if (r > maxr) maxr = r;
    }
    return maxr + 1;
}

std::string UPoly::to_string(const std::string& var) const {
    if (c_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0) continue;
        Int a = c_[i];
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
        if (a != 1 || i == 0) out << a.get_str();
        if (i > 0) {
            if (a != 1) out << "*";
            out << var;
            if (i > 1) out << "^" << i;
        }
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// Root isolation (Descartes / VCA bisection)

namespace {

// Number of sign variations of (x+1)^n q(1/(x+1)), bounding roots in (0,1).
int descartes_01(const UPoly& q) { return q.reverse().shift1().sign_variations(); }

struct IsolationSink {
    std::vector<RealAlg> out;
    void exact(const Rat& r) { out.push_back(RealAlg::from_rational(r)); }
    void interval(const UPoly& defining, const Rat& lo, const Rat& hi) {
        out.push_back(RealAlg::from_root(defining, lo, hi));
    }
};

// Isolates roots of the square-free p inside the open interval (lo, hi);
// p(lo) != 0 and p(hi) != 0 on entry.
void isolate_open(const UPoly& p, const Rat& lo, const Rat& hi, IsolationSink& sink) {
    UPoly q = p.map_to_unit(lo, hi);
    int v = descartes_01(q);
    if (v == 0) return;
    if (v == 1) {
        sink.interval(p, lo, hi);
        return;
    }
    Rat mid = (lo + hi) / 2;
    if (p.sign_at(mid) == 0) {
        sink.exact(mid);
        UPoly reduced = p.divide_linear(mid);
        isolate_open(reduced, lo, mid, sink);
        isolate_open(reduced, mid, hi, sink);
        return;
    }
    isolate_open(p, lo, mid, sink);
    isolate_open(p, mid, hi, sink);
}

}  // namespace

std::vector<RealAlg> isolate_real_roots(const UPoly& input) {
    if (input.is_zero()) throw std::invalid_argument("isolate_real_roots: zero polynomial");
    if (input.degree() == 0) return {};
    UPoly p = input.square_free_part();
    IsolationSink sink;
    // Root at zero.
    std::size_t k = 0;
    const auto& cs = p.coeffs();
    while (k < cs.size() && cs[k] == 0) ++k;
    if (k > 0) {
        sink.exact(Rat(0));
        std::vector<Int> shifted(cs.begin() + k, cs.end());
        p = UPoly(std::move(shifted));
    }
    if (p.degree() >= 1) {
        Rat bound = p.cauchy_bound();
        Int b = rat_ceil(bound);
        Rat B(b);
        isolate_open(p, Rat(0), B, sink);
        UPoly neg = p.negate_variable();
        IsolationSink negsink;
        isolate_open(neg, Rat(0), B, negsink);
        for (auto& r : negsink.out) sink.out.push_back(r.negated());
    }
    std::sort(sink.out.begin(), sink.out.end(), alg_less);
    return sink.out;
}

std::vector<RealAlg> isolate_real_roots(const MultiPoly& p, std::size_t var) {
    return isolate_real_roots(UPoly::from_multipoly(p, var));
}

// ---------------------------------------------------------------------------
// RealAlg

RealAlg RealAlg::from_rational(Rat v) {
    RealAlg a;
    a.is_rational_ = true;
    a.rational_ = std::move(v);
    return a;
}

RealAlg RealAlg::from_root(UPoly defining, Rat lo, Rat hi) {
    if (defining.degree() < 1) throw std::invalid_argument("from_root: constant defining polynomial");
    if (!(lo < hi)) throw std::invalid_argument("from_root: empty interval");
    if (defining.degree() == 1) {
        const auto& c = defining.coeffs();
        return from_rational(Rat(-c[0], c[1]));
    }
    if (defining.sign_at(lo) == 0 || defining.sign_at(hi) == 0)
        throw std::invalid_argument("from_root: root at interval endpoint");
    RealAlg a;
    a.is_rational_ = false;
    a.defining_ = std::move(defining);
    a.lo_ = std::move(lo);
    a.hi_ = std::move(hi);
    // Rationality probe: refine a little, then test the simplest rational in
    // the interval. Catches dyadic midpoints and small-denominator roots.
    for (int i = 0; i < 8; ++i) {
        Rat mid = (a.lo_ + a.hi_) / 2;
        int s = a.defining_.sign_at(mid);
        if (s == 0) return from_rational(mid);
        if (s == a.defining_.sign_at(a.lo_))
            a.lo_ = mid;
        else
            a.hi_ = mid;
    }
    Rat probe = simplest_rational_between(a.lo_, true, a.hi_, true);
    if (a.defining_.sign_at(probe) == 0) return from_rational(probe);
    return a;
}

RealAlg RealAlg::refined_once() const {
    if (is_rational_) return *this;
    RealAlg a = *this;
    Rat mid = (a.lo_ + a.hi_) / 2;
    int s = a.defining_.sign_at(mid);
    if (s == 0) return from_rational(mid);
    if (s == a.defining_.sign_at(a.lo_))
        a.lo_ = mid;
    else
        a.hi_ = mid;
    return a;
}

RealAlg RealAlg::refined(const Rat& width) const {
    RealAlg a = *this;
    while (!a.is_rational_ && a.hi_ - a.lo_ > width) a = a.refined_once();
    return a;
}

RealAlg RealAlg::negated() const {
    if (is_rational_) return from_rational(-rational_);
    RealAlg a;
    a.is_rational_ = false;
    a.defining_ = defining_.negate_variable();
    a.lo_ = -hi_;
    a.hi_ = -lo_;
    return a;
}

RealAlg RealAlg::shifted_by(const Int& n) const {
    if (is_rational_) return from_rational(rational_ + Rat(n));
    // q(x) = p(x - n) has root value+n.
    const auto& cs = defining_.coeffs();
    std::vector<Rat> acc;
    Rat shift(-n);
    for (std::size_t i = cs.size(); i-- > 0;) {
        std::vector<Rat> next(acc.size() + 1, Rat(0));
        for (std::size_t j = 0; j < acc.size(); ++j) {
            next[j] += acc[j] * shift;
            next[j + 1] += acc[j];
        }
        if (next.empty()) next.push_back(Rat(0));
        next[0] += Rat(cs[i]);
        acc = std::move(next);
    }
    std::vector<Int> out(acc.size());
    for (std::size_t i = 0; i < acc.size(); ++i) out[i] = acc[i].get_num();
    RealAlg a;
    a.is_rational_ = false;
    a.defining_ = UPoly(std::move(out)).primitive();
    a.lo_ = lo_ + Rat(n);
    a.hi_ = hi_ + Rat(n);
    return a;
}

RealAlg RealAlg::reciprocal() const {
    if (is_rational_) {
        if (rational_ == 0) throw std::invalid_argument("reciprocal of zero");
        return from_rational(1 / rational_);
    }
    RealAlg a = *this;
    // Make the interval sign-definite first.
    while (a.lo_ <= 0 && a.hi_ >= 0) a = a.refined_once();
    if (a.is_rational_) return a.reciprocal();
    RealAlg r;
    r.is_rational_ = false;
    r.defining_ = a.defining_.reverse().primitive();
    r.lo_ = 1 / a.hi_;
    r.hi_ = 1 / a.lo_;
    return r;
}

int RealAlg::sign() const {
    if (is_rational_) return rat_sign(rational_);
    RealAlg a = *this;
    while (a.lo_ <= 0 && a.hi_ >= 0) {
        // 0 inside the isolating interval and a root of the defining
        // polynomial is the represented root itself (uniqueness).
        if (a.lo_ < 0 && a.hi_ > 0 && a.defining_.sign_at(Rat(0)) == 0) return 0;
        a = a.refined_once();
        if (a.is_rational_) return rat_sign(a.rational_);
    }
    return a.lo_ > 0 ? 1 : -1;
}

std::string RealAlg::to_decimal(unsigned digits) const {
    if (is_rational_) {
        Rat scale = rat_pow(Rat(10), digits);
        if (rational_ * scale == Rat(rat_floor(rational_ * scale)))
            return rat_to_decimal(rational_, digits);
        return "~" + rat_to_decimal(rational_, digits);
    }
    Rat eps = 1 / rat_pow(Rat(10), digits + 2);
    RealAlg a = refined(eps);
    if (a.is_rational_) return a.to_decimal(digits);
    return "~" + rat_to_decimal((a.lo_ + a.hi_) / 2, digits);
}

std::string RealAlg::to_exact_string(const std::string& var) const {
    if (is_rational_) return rat_to_string(rational_);
    std::ostringstream out;
    out << "root(" << defining_.to_string(var) << ", (" << rat_to_string(lo_) << ", "
        << rat_to_string(hi_) << "))";
    return out.str();
}

std::string RealAlg::canonical_digest(unsigned digits) const {
    // Certified floor of value*10^digits, identical for every representation
    // of the same real number.
    Rat scale = rat_pow(Rat(10), digits);
    if (is_rational_)
        return "~" + rat_to_decimal(Rat(rat_floor(rational_ * scale)) / scale, digits);
    RealAlg a = *this;
    while (true) {
        if (a.is_rational_) return a.canonical_digest(digits);
        Int dlo = rat_floor(a.lo_ * scale);
        Int dhi = rat_floor(a.hi_ * scale);
        if (dlo == dhi) return "~" + rat_to_decimal(Rat(dlo) / scale, digits);
        // Straddling a grid point: either the value is that grid rational
        // (its floor is then the grid index) or refinement separates them.
        Rat q = Rat(dhi) / scale;
        if (a.lo_ < q && q < a.hi_ && a.defining_.sign_at(q) == 0)
            return "~" + rat_to_decimal(q, digits);
        a = a.refined_once();
    }
}

Cmp compare(const RealAlg& a, const RealAlg& b) {
    if (a.is_rational() && b.is_rational()) {
        int c = cmp(a.rational(), b.rational());
        return c < 0 ? Cmp::Less : (c == 0 ? Cmp::Equal : Cmp::Greater);
    }
    if (a.is_rational()) {
        Cmp r = compare(b, a);
        return r == Cmp::Less ? Cmp::Greater : (r == Cmp::Greater ? Cmp::Less : Cmp::Equal);
    }
    if (b.is_rational()) {
        const Rat& q = b.rational();
        if (q <= a.lo()) return Cmp::Greater;
        if (q >= a.hi()) return Cmp::Less;
        int s = a.defining().sign_at(q);
        if (s == 0) return Cmp::Equal;
        return s == a.defining().sign_at(a.hi()) ? Cmp::Greater : Cmp::Less;
    }
    // Both algebraic. Fast interval separation first.
    if (a.hi() <= b.lo()) return Cmp::Less;
    if (b.hi() <= a.lo()) return Cmp::Greater;
    // Shared-root test on the gcd of the defining polynomials. Equality is
    // decidable without refinement: the intersection of the two isolating
    // intervals contains the common root iff g changes sign across it (g is
    // square-free, has no roots at any of the four endpoints because it
    // divides both defining polynomials, and at most one root in either
    // isolating interval).
    UPoly g = UPoly::gcd(a.defining(), b.defining());
    if (g.degree() >= 1) {
        bool a_is_g_root = g.sign_at(a.lo()) * g.sign_at(a.hi()) < 0;
        bool b_is_g_root = g.sign_at(b.lo()) * g.sign_at(b.hi()) < 0;
        if (a_is_g_root && b_is_g_root) {
            Rat ilo = std::max(a.lo(), b.lo());
            Rat ihi = std::min(a.hi(), b.hi());
            if (g.sign_at(ilo) * g.sign_at(ihi) < 0) return Cmp::Equal;
            // Roots sit on opposite sides of the overlap.
            return a.lo() < b.lo() ? Cmp::Less : Cmp::Greater;
        }
    }
    // Distinct values: refine until the intervals separate.
    RealAlg x = a, y = b;
    while (true) {
        if (x.hi() <= y.lo()) return Cmp::Less;
        if (y.hi() <= x.lo()) return Cmp::Greater;
        x = x.refined_once();
        y = y.refined_once();
        if (x.is_rational() || y.is_rational()) return compare(x, y);
    }
}

int sign_at(const UPoly& p, const RealAlg& a) {
    if (p.is_zero()) return 0;
    if (a.is_rational()) return p.sign_at(a.rational());
    UPoly g = UPoly::gcd(p, a.defining());
    if (g.degree() >= 1 && g.sign_at(a.lo()) * g.sign_at(a.hi()) < 0) return 0;
    // p(a) != 0: refine until the interval evaluation is sign-definite.
    RealAlg x = a;
    while (true) {
        int slo = p.sign_at(x.lo());
        int shi = p.sign_at(x.hi());
        if (slo == shi && slo != 0) {
            // No p-root may separate them; certify via a root-free interval.
            UPoly sf = p.square_free_part();
            // Descartes count of sf over (lo, hi): zero variations certify.
            UPoly q = sf.map_to_unit(x.lo(), x.hi());
            if (q.reverse().shift1().sign_variations() == 0) return slo;
        }
        x = x.refined_once();
        if (x.is_rational()) return p.sign_at(x.rational());
    }
}

int sign_at(const MultiPoly& p, std::size_t var, const RealAlg& a) {
    return sign_at(UPoly::from_multipoly(p, var), a);
}

MergedRoots merge_roots(const std::vector<RealAlg>& old_roots,
                        const std::vector<RealAlg>& new_roots) {
    MergedRoots out;
    std::size_t i = 0, j = 0;
    while (i < old_roots.size() || j < new_roots.size()) {
        if (i == old_roots.size()) {
            out.roots.push_back(new_roots[j++]);
            out.is_new.push_back(true);
            continue;
        }
        if (j == new_roots.size()) {
            out.roots.push_back(old_roots[i++]);
            out.is_new.push_back(false);
            continue;
        }
        Cmp c = compare(old_roots[i], new_roots[j]);
        if (c == Cmp::Less) {
            out.roots.push_back(old_roots[i++]);
            out.is_new.push_back(false);
        } else if (c == Cmp::Greater) {
            out.roots.push_back(new_roots[j++]);
            out.is_new.push_back(true);
        } else {
            out.roots.push_back(old_roots[i++]);
            out.is_new.push_back(false);
            ++j;
        }
    }
    return out;
}

namespace {

// Smallest integer strictly greater than a.
Int strict_ceil_above(const RealAlg& a) {
    if (a.is_rational()) {
        Int c = rat_ceil(a.rational());
        if (Rat(c) == a.rational()) c += 1;
        return c;
    }
    RealAlg x = a;
    while (!x.is_rational()) {
        Int fl = rat_floor(x.lo()), fh = rat_floor(x.hi());
        // Value in (lo, hi) with both in [fl, fl+1): strictly above is fl+1
        // (an irrational value never equals fl).
        if (fl == fh) return fl + 1;
        x = x.refined_once();
    }
    return strict_ceil_above(x);
}

// Largest integer strictly less than b.
Int strict_floor_below(const RealAlg& b) { return -strict_ceil_above(b.negated()); }

}  // namespace

Rat simplest_rational_in(const RealAlg& a, const RealAlg& b) {
    if (a.is_rational() && b.is_rational())
        return simplest_rational_between(a.rational(), true, b.rational(), true);
    // Integer candidates first: the minimal-|n| integer strictly inside.
    Int n_lo = strict_ceil_above(a);
    if (compare(RealAlg::from_rational(Rat(n_lo)), b) == Cmp::Less) {
        if (n_lo >= 0) return Rat(n_lo);
        if (compare(a, RealAlg::from_rational(Rat(0))) == Cmp::Less &&
            compare(RealAlg::from_rational(Rat(0)), b) == Cmp::Less)
            return Rat(0);
        // All candidates negative: the largest integer below b is nearest 0.
        return Rat(strict_floor_below(b));
    }
    // No integer inside: descend into the fractional part over [m, m+1].
    Int m = n_lo - 1;
    RealAlg as = a.shifted_by(-m);
    RealAlg bs = b.shifted_by(-m);
    // 0 <= as < bs <= 1 with no integer inside (as, bs).
    if (as.is_rational() && as.rational() == 0) {
        // Interval (0, bs): the simplest value is 1/k for the least valid k.
        Int k = strict_ceil_above(bs.reciprocal());
        return Rat(m) + Rat(1, k);
    }
    Rat inner = simplest_rational_in(bs.reciprocal(), as.reciprocal());
    return Rat(m) + 1 / inner;
}

std::vector<RealAlg> gen_sample_points(const std::vector<RealAlg>& roots, CadMode mode) {
    std::vector<RealAlg> out;
    if (roots.empty()) {
        out.push_back(RealAlg::from_rational(Rat(0)));
        return out;
    }
    // Outer witnesses from an integer bound on all root intervals.
    Int bound(0);
    for (const auto& r : roots) {
        Int c1 = rat_ceil(rat_abs(r.lo()));
        Int c2 = rat_ceil(rat_abs(r.hi()));
        if (c1 > bound) bound = c1;
        if (c2 > bound) bound = c2;
    }
    Rat left = Rat(-(bound + 1));
    Rat right = Rat(bound + 1);

    out.push_back(RealAlg::from_rational(left));
    for (std::size_t i = 0; i + 1 < roots.size(); ++i) {
        if (mode == CadMode::Full) out.push_back(roots[i]);
        out.push_back(RealAlg::from_rational(simplest_rational_in(roots[i], roots[i + 1])));
    }
    if (mode == CadMode::Full) out.push_back(roots.back());
    out.push_back(RealAlg::from_rational(right));
    return out;
}

}  // namespace lazcad
