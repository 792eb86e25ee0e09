#pragma once

// Exact arbitrary-precision scalars. Everything downstream (linear algebra,
// LP, lattice enumeration) is built on these; no floating point is used in
// any decision path.

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace latnorm {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

struct format_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Int num(const Rat& q) { return numerator(q); }
inline Int den(const Rat& q) { return denominator(q); }

inline bool is_integer(const Rat& q) { return denominator(q) == 1; }

// Floor division with sign convention floor(a/b), b != 0.
inline Int floor_div(const Int& a, const Int& b) {
    if (b == 0) throw std::domain_error("floor_div: zero divisor");
    Int q = a / b, r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}

inline Int floor_rat(const Rat& q) { return floor_div(numerator(q), denominator(q)); }
inline Int ceil_rat(const Rat& q) { return -floor_div(-numerator(q), denominator(q)); }

inline double approx(const Rat& q) { return q.convert_to<double>(); }

// Canonical text form: "n" when the denominator is 1, else "n/d".
inline std::string rat_str(const Rat& q) {
    if (is_integer(q)) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

inline std::string int_str(const Int& n) { return n.str(); }

// Accepts "n" or "n/d" with optional leading '-'. Throws format_error on
// anything else (including d == 0).
inline Rat parse_rat(const std::string& s) {
    auto is_int_token = [](const std::string& t) {
        if (t.empty()) return false;
        std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            if (!is_int_token(s)) throw format_error("bad rational: '" + s + "'");
            return Rat(Int(s));
        }
        std::string ns = s.substr(0, slash), ds = s.substr(slash + 1);
        if (!is_int_token(ns) || !is_int_token(ds)) throw format_error("bad rational: '" + s + "'");
        Int n(ns), d(ds);
        if (d == 0) throw format_error("bad rational (zero denominator): '" + s + "'");
        return Rat(n, d);
    } catch (const format_error&) {
        throw;
    } catch (const std::exception&) {
        throw format_error("bad rational: '" + s + "'");
    }
}

namespace detail {
// Integer candidates honoring an open/closed bound, used by the Stern-Brocot
// descent below.
inline Int lowest_int_geq(const Rat& a, bool open) {
    return open ? floor_rat(a) + 1 : ceil_rat(a);
}
inline Int highest_int_leq(const Rat& b, bool open) {
    return open ? ceil_rat(b) - 1 : floor_rat(b);
}
}  // namespace detail

// Simplest rational in the interval between lo and hi (each side optionally
// strict). "Simplest" = minimal denominator, ties broken toward 0 among
// integers and via the continued-fraction descent otherwise. Requires the
// interval to be nonempty.
inline Rat simplest_between(const Rat& lo, bool open_lo, const Rat& hi, bool open_hi) {
    if (lo > hi || (lo == hi && (open_lo || open_hi)))
        throw std::invalid_argument("simplest_between: empty interval");
    Int ilo = detail::lowest_int_geq(lo, open_lo);
    Int ihi = detail::highest_int_leq(hi, open_hi);
    if (ilo <= ihi) {
        if (ilo > 0) return Rat(ilo);
        if (ihi < 0) return Rat(ihi);
        return Rat(0);
    }
    // No integer fits: lo and hi share the same floor n with fractional
    // parts in [0,1). Recurse on reciprocals of the fractional parts.
    Int n = floor_rat(lo);
    Rat fl = lo - Rat(n), fh = hi - Rat(n);
    if (fl == 0) {
        // Interval (n, n + fh): the simplest element is n + 1/q for the
        // smallest admissible q.
        Int q = detail::lowest_int_geq(Rat(1) / fh, open_hi);
        return Rat(n) + Rat(Int(1), q);
    }
    Rat inner = simplest_between(Rat(1) / fh, open_hi, Rat(1) / fl, open_lo);
    return Rat(n) + Rat(1) / inner;
}

}  // namespace latnorm
