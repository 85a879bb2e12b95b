#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>

#include <gmpxx.h>

namespace planedraw::geom {

// Exact scalar of the default kernel. Values produced by the layout engine
// are dyadic (power-of-two denominators), which keeps gcd reduction cheap.
using Rat = mpq_class;

enum class Sign : int { negative = -1, zero = 0, positive = 1 };

inline Sign sign_of(const Rat& v) {
    int s = sgn(v);
    return s < 0 ? Sign::negative : (s > 0 ? Sign::positive : Sign::zero);
}

// Floating-kernel sign with a tolerance band: anything within |tol| of zero
// is reported as zero, which downstream checks treat as a degeneracy.
inline Sign sign_of(double v, double tol) {
    if (v > tol) return Sign::positive;
    if (v < -tol) return Sign::negative;
    return Sign::zero;
}

inline Sign opposite(Sign s) { return static_cast<Sign>(-static_cast<int>(s)); }

template <typename S>
struct Pt {
    S x{};
    S y{};

    friend Pt operator+(const Pt& a, const Pt& b) { return {a.x + b.x, a.y + b.y}; }
    friend Pt operator-(const Pt& a, const Pt& b) { return {a.x - b.x, a.y - b.y}; }
    friend Pt operator-(const Pt& a) { return {-a.x, -a.y}; }
    friend Pt operator*(const S& c, const Pt& a) { return {c * a.x, c * a.y}; }
    friend bool operator==(const Pt& a, const Pt& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator!=(const Pt& a, const Pt& b) { return !(a == b); }
};

using RatPt = Pt<Rat>;
using DblPt = Pt<double>;

template <typename S>
S cross(const Pt<S>& a, const Pt<S>& b) {
    return a.x * b.y - a.y * b.x;
}

template <typename S>
S dot(const Pt<S>& a, const Pt<S>& b) {
    return a.x * b.x + a.y * b.y;
}

template <typename S>
S norm2(const Pt<S>& a) {
    return a.x * a.x + a.y * a.y;
}

// Rotates a vector a quarter turn counterclockwise (y-up coordinates).
template <typename S>
Pt<S> perp(const Pt<S>& v) {
    return {-v.y, v.x};
}

// Sign of the signed area of triangle (a, b, c): positive when c lies to the
// left of the directed line a->b (counterclockwise turn, y-up).
template <typename S>
S orient_value(const Pt<S>& a, const Pt<S>& b, const Pt<S>& c) {
    return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

inline Sign orient(const RatPt& a, const RatPt& b, const RatPt& c) {
    return sign_of(orient_value(a, b, c));
}

// ---------------------------------------------------------------------------
// Conservative double intervals.
//
// Used as a filter in front of the exact predicates: every interval is a
// superset enclosure of the exact value, maintained by padding each result
// outward by one ulp (rounding to nearest introduces at most half an ulp).
// A sign that the interval determines is trusted; anything else falls back
// to exact arithmetic.
// ---------------------------------------------------------------------------

inline double pad_down(double v) {
    return std::nextafter(v, -std::numeric_limits<double>::infinity());
}
inline double pad_up(double v) {
    return std::nextafter(v, std::numeric_limits<double>::infinity());
}

struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    bool valid() const { return lo <= hi && std::isfinite(lo) && std::isfinite(hi); }

    friend Interval operator+(const Interval& a, const Interval& b) {
        return {pad_down(a.lo + b.lo), pad_up(a.hi + b.hi)};
    }
    friend Interval operator-(const Interval& a, const Interval& b) {
        return {pad_down(a.lo - b.hi), pad_up(a.hi - b.lo)};
    }
    friend Interval operator*(const Interval& a, const Interval& b) {
        double p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
        double lo = std::fmin(std::fmin(p1, p2), std::fmin(p3, p4));
        double hi = std::fmax(std::fmax(p1, p2), std::fmax(p3, p4));
        return {pad_down(lo), pad_up(hi)};
    }

    // Sign if certain, nullopt-style: zero means "interval straddles zero".
    bool sign_known() const { return valid() && (lo > 0.0 || hi < 0.0); }
    Sign sign() const { return lo > 0.0 ? Sign::positive : Sign::negative; }
};

// mpq_get_d truncates toward zero, so the true value lies within one ulp of
// the conversion; a one-ulp pad on each side encloses it.
inline Interval enclose(const Rat& q) {
    double d = q.get_d();
    if (std::isnan(d)) return {-std::numeric_limits<double>::max(), std::numeric_limits<double>::max()};
    if (std::isinf(d)) {
        return d > 0 ? Interval{std::numeric_limits<double>::max(), std::numeric_limits<double>::max()}
                     : Interval{-std::numeric_limits<double>::max(), -std::numeric_limits<double>::max()};
    }
    return {pad_down(d), pad_up(d)};
}

struct BoxPt {
    Interval x, y;
};

inline BoxPt enclose(const RatPt& p) { return {enclose(p.x), enclose(p.y)}; }

inline Interval orient_interval(const BoxPt& a, const BoxPt& b, const BoxPt& c) {
    return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

// ---------------------------------------------------------------------------
// Rational formatting and dyadic helpers.
// ---------------------------------------------------------------------------

// Exact power of two, positive or negative exponent.
inline Rat pow2(int e) {
    mpz_class n = 1;
    if (e >= 0) {
        mpz_mul_2exp(n.get_mpz_t(), n.get_mpz_t(), e);
        return Rat(n);
    }
    mpz_mul_2exp(n.get_mpz_t(), n.get_mpz_t(), -e);
    Rat r(1);
    r /= Rat(n);
    return r;
}

// Rough base-2 logarithm of |q|, within +-2. Zero input returns 0.
inline long approx_log2(const Rat& q) {
    if (sgn(q) == 0) return 0;
    long nbits = static_cast<long>(mpz_sizeinbase(q.get_num_mpz_t(), 2));
    long dbits = static_cast<long>(mpz_sizeinbase(q.get_den_mpz_t(), 2));
    return nbits - dbits;
}

// Nearest dyadic rational with `bits` fractional bits. Exact (mpz rounding).
inline Rat snap_dyadic(const Rat& q, int bits) {
    mpz_class scaled_num = q.get_num();
    mpz_mul_2exp(scaled_num.get_mpz_t(), scaled_num.get_mpz_t(), bits);
    mpz_class quot, rem;
    mpz_fdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), scaled_num.get_mpz_t(), q.get_den_mpz_t());
    // Round half up: q = quot + rem/den with 0 <= rem < den.
    mpz_class rem2 = rem * 2;
    if (rem2 >= q.get_den()) quot += 1;
    Rat r(quot);
    r *= pow2(-bits);
    return r;
}

// "num/den" in lowest terms; the denominator is always written explicitly.
inline std::string to_fraction_string(const Rat& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// Every finite double is an exact rational; no precision is lost here.
inline Rat rat_from_double(double d) {
    Rat r;
    mpq_set_d(r.get_mpq_t(), d);
    return r;
}

// Accepts "num/den" or a bare integer "num". Throws ArgumentError.
Rat parse_rational(const std::string& text);

}  // namespace planedraw::geom
