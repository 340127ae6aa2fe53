#pragma once

#include <algorithm>
#include <cstdlib>

#include "annulus/diagonal.hpp"

namespace annulus {

namespace detail {

// Integers t with lo/den < t < hi/den (den > 0, lo <= hi): strictly between
// two rationals sharing a positive denominator.
inline long long ints_strictly_between(long long lo, long long hi, long long den) {
    // smallest integer > lo/den is floor(lo/den)+1; largest < hi/den is ceil(hi/den)-1
    long long first = floordiv(lo, den) + 1;
    long long last = ceildiv(hi, den) - 1;
    return std::max(0LL, last - first + 1);
}

// Multiples of step inside the inclusive integer range [lo, hi].
inline long long multiples_in(long long lo, long long hi, long long step) {
    if (lo > hi) return 0;
    return std::max(0LL, floordiv(hi, step) - ceildiv(lo, step) + 1);
}

// Chords {a1,b1}, {a2,b2} on a line (a<b) cross exactly when their four
// endpoints strictly interleave.  Shared endpoints never cross.
inline bool interleaves(long long a1, long long b1, long long a2, long long b2) {
    return (a1 < a2 && a2 < b1 && b1 < b2) || (a2 < a1 && a1 < b2 && b2 < b1);
}

// Same-boundary peripheral pair: count deck translates of the second path
// whose endpoint interval interleaves the first.  M is the boundary period.
inline long long peripheral_pair_crossings(long long i1, long long k1, long long i2, long long k2,
                                           long long M) {
    const long long a1 = i1, b1 = i1 + k1 - 1;
    long long count = 0;
    // Overlap needs i2 + k2 - 1 + tM > a1 and i2 + tM < b1; pad the range by
    // one translate on each side rather than trusting the boundary algebra.
    long long t_lo = floordiv(a1 - (i2 + k2 - 1), M) - 1;
    long long t_hi = ceildiv(b1 - i2, M) + 1;
    for (long long t = t_lo; t <= t_hi; ++t)
        if (interleaves(a1, b1, i2 + t * M, i2 + k2 - 1 + t * M)) ++count;
    return count;
}

}  // namespace detail

// Minimal interior intersection count e(a,b) of two diagonals, computed in
// the universal-cover strip:
//
//   S-S   with A = (u1-u2)/mp and B = (v1-v2)/mq, e = #{t in Z strictly
//         between A and B}.  Equal endpoint offsets (t = A or t = B) are
//         shared lifts and do not count.
//   S-P   e = #{t : i < u + t*M < i+k-1} for the boundary carrying the
//         peripheral path (strict: a spanning arc out of an endpoint of the
//         path slips free).
//   P-P   same boundary: translates of one endpoint interval that strictly
//         interleave the other (nesting and shared endpoints are free).
//   O-I   0: disjoint boundary collars.
//
// Symmetric, shift-invariant, and deck-invariant by construction.
inline long long crossing_number(const Diagonal& x, const Diagonal& y, const AnnulusConfig& cfg) {
    const long long mp = cfg.outer_count(), mq = cfg.inner_count();

    if (x.is_spanning() && y.is_spanning()) {
        const long long du = x.a - y.a, dv = x.b - y.b;
        // Compare du/mp with dv/mq via the common denominator mp*mq.
        long long lo = du * mq, hi = dv * mp;
        if (lo > hi) std::swap(lo, hi);
        return detail::ints_strictly_between(lo, hi, mp * mq);
    }

    if (x.is_peripheral() && y.is_peripheral()) {
        if (x.kind != y.kind) return 0;  // opposite collars never meet
        const long long M = (x.kind == DiagKind::OuterPeripheral) ? mp : mq;
        return detail::peripheral_pair_crossings(x.a, x.b, y.a, y.b, M);
    }

    // Mixed spanning/peripheral: orient so s spans and p is peripheral.
    const Diagonal& s = x.is_spanning() ? x : y;
    const Diagonal& p = x.is_spanning() ? y : x;
    const bool outer = (p.kind == DiagKind::OuterPeripheral);
    const long long M = outer ? mp : mq;
    const long long e = outer ? s.a : s.b;  // spanning endpoint lift on that boundary
    // i < e + t*M < i + k - 1  <=>  t*M in [i+1-e, i+k-2-e]
    return detail::multiples_in(p.a + 1 - e, p.a + p.b - 2 - e, M);
}

}  // namespace annulus
