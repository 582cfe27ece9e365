#include "lazcad/numbers.hpp"

#include <cctype>
#include <stdexcept>

namespace lazcad {

std::optional<Rat> rat_from_string(const std::string& text) {
    if (text.empty()) return std::nullopt;
    std::size_t slash = text.find('/');
    auto is_int = [](const std::string& s) {
        if (s.empty()) return false;
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        return true;
    };
    if (slash == std::string::npos) {
        if (!is_int(text)) return std::nullopt;
        return Rat(Int(text));
    }
    std::string num = text.substr(0, slash);
    std::string den = text.substr(slash + 1);
    if (!is_int(num) || !is_int(den)) return std::nullopt;
    Int d(den);
    if (d == 0) return std::nullopt;
    Rat r(Int(num), d);
    r.canonicalize();
    return r;
}

std::string rat_to_string(const Rat& a) {
    if (a.get_den() == 1) return a.get_num().get_str();
    return a.get_num().get_str() + "/" + a.get_den().get_str();
}

std::string rat_to_decimal(const Rat& a, unsigned digits) {
    Int num = a.get_num();
    Int den = a.get_den();
    bool neg = num < 0;
    if (neg) num = -num;
    Int scale = int_pow(Int(10), digits);
    Int scaled = (num * scale) / den;  // truncation toward zero
    Int ip = scaled / scale;
    Int fp = scaled % scale;
    std::string out = ip.get_str();
    if (digits > 0) {
        std::string frac = fp.get_str();
        if (frac.size() < digits) frac.insert(0, digits - frac.size(), '0');
        out += "." + frac;
    }
    if (neg && scaled != 0) out.insert(0, 1, '-');
    return out;
}

namespace {

// Minimal-|p| numerator with denominator q strictly/weakly inside the bounds.
std::optional<Int> pick_numerator(const Int& q, const Rat& lo, bool lo_open, const Rat& hi,
                                  bool hi_open) {
    Rat lq = lo * q;
    Rat hq = hi * q;
    Int pmin = rat_ceil(lq);
    if (lo_open && Rat(pmin) == lq) pmin += 1;
    Int pmax = rat_floor(hq);
    if (hi_open && Rat(pmax) == hq) pmax -= 1;
    if (pmin > pmax) return std::nullopt;
    // Closest admissible numerator to zero.
    Int best;
    if (pmin > 0)
        best = pmin;
    else if (pmax < 0)
        best = pmax;
    else
        best = 0;
    return best;
}

}  // namespace

Rat simplest_rational_between(const Rat& lo, bool lo_open, const Rat& hi, bool hi_open) {
    if (lo > hi || (lo == hi && (lo_open || hi_open)))
        throw std::invalid_argument("simplest_rational_between: empty interval");
    // Denominator 1 always admits a candidate when the interval has length
    // >= 1; otherwise walk the Stern-Brocot tree.
    if (auto p = pick_numerator(1, lo, lo_open, hi, hi_open)) return Rat(*p);

    // Continued-fraction descent: no integer is admissible, so the interval
    // sits inside [n, n+1] for n = floor(lo).
    Int n = rat_floor(lo);
    Rat a = lo - Rat(n);
    Rat b = hi - Rat(n);
    // 0 <= a < b <= 1 with no admissible integer; recurse on reciprocals.
    // simplest in (a,b) = 1 / (simplest in (1/b, 1/a)).
    if (a == 0) {
        // interval (0, b): simplest is 1/ceil-ish: smallest k with 1/k inside
        Rat inv = 1 / b;
        Int k = rat_floor(inv) + 1;
        if (!hi_open && Rat(1) / Rat(rat_floor(inv)) == b && rat_floor(inv) > 0) k = rat_floor(inv);
        // ensure strictly > a side (always, since 1/k > 0)
        Rat cand = Rat(1) / Rat(k);
        return Rat(n) + cand;
    }
    Rat sub = simplest_rational_between(1 / b, hi_open, 1 / a, lo_open);
    return Rat(n) + 1 / sub;
}

}  // namespace lazcad
