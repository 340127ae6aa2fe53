#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

#include "annulus/config.hpp"

namespace annulus {

namespace detail {

// Floor/ceil division and positive modulus for possibly negative operands.
inline long long floordiv(long long a, long long b) {
    long long d = a / b, r = a % b;
    return (r != 0 && ((r < 0) != (b < 0))) ? d - 1 : d;
}
inline long long ceildiv(long long a, long long b) { return -floordiv(-a, b); }
inline long long pmod(long long a, long long b) { return a - b * floordiv(a, b); }

}  // namespace detail

enum class DiagKind : std::uint8_t { Spanning = 0, OuterPeripheral = 1, InnerPeripheral = 2 };

// A diagonal of P_{p,q,m}: the homotopy class (rel endpoints) of an arc
// between marked points, encoded by universal-cover lift coordinates.
//
//   Spanning          lift pair (u,v): outer lift u at real coordinate
//                     u/(mp) on the outer line, inner lift v at v/(mq) on
//                     the inner line.  The deck transformation adds 1 to
//                     both real coordinates, i.e. (u,v) ~ (u+mp, v+mq);
//                     the stored representative has 0 <= u < mp.
//   OuterPeripheral   delta_{i,k}: boundary path from O_i through k
//                     vertices (counting both ends), 0 <= i < mp, k >= 3.
//                     Crosses itself exactly when k > mp+1.
//   InnerPeripheral   gamma_{i,k}: same on the inner boundary.
//
// Values are immutable; construct via the factories, which normalize.
struct Diagonal {
    DiagKind kind = DiagKind::Spanning;
    long long a = 0;  // Spanning: u (canonical).  Peripheral: start index i.
    long long b = 0;  // Spanning: v.              Peripheral: vertex count k.

    static Diagonal spanning(long long u, long long v, const AnnulusConfig& cfg) {
        const long long mp = cfg.outer_count(), mq = cfg.inner_count();
        long long t = detail::floordiv(u, mp);  // deck translate bringing u into [0, mp)
        Diagonal d;
        d.kind = DiagKind::Spanning;
        d.a = u - t * mp;
        d.b = v - t * mq;
        return d;
    }
    static Diagonal outer_peripheral(long long i, long long k, const AnnulusConfig& cfg) {
        if (k < 3) throw std::invalid_argument("peripheral diagonal needs k >= 3, got k=" + std::to_string(k));
        Diagonal d;
        d.kind = DiagKind::OuterPeripheral;
        d.a = detail::pmod(i, cfg.outer_count());
        d.b = k;
        return d;
    }
    static Diagonal inner_peripheral(long long i, long long k, const AnnulusConfig& cfg) {
        if (k < 3) throw std::invalid_argument("peripheral diagonal needs k >= 3, got k=" + std::to_string(k));
        Diagonal d;
        d.kind = DiagKind::InnerPeripheral;
        d.a = detail::pmod(i, cfg.inner_count());
        d.b = k;
        return d;
    }

    bool is_spanning() const { return kind == DiagKind::Spanning; }
    bool is_peripheral() const { return kind != DiagKind::Spanning; }

    friend auto operator<=>(const Diagonal&, const Diagonal&) = default;

    friend std::ostream& operator<<(std::ostream& os, const Diagonal& d) {
        switch (d.kind) {
            case DiagKind::Spanning: return os << "S(" << d.a << "," << d.b << ")";
            case DiagKind::OuterPeripheral: return os << "O(" << d.a << "," << d.b << ")";
            case DiagKind::InnerPeripheral: return os << "I(" << d.a << "," << d.b << ")";
        }
        return os;
    }
};

// ---------------------------------------------------------------------------
// Symmetry operators.
// ---------------------------------------------------------------------------

// [s]: rotate both boundaries s label steps.  Spanning (u,v) -> (u-s, v-s),
// peripheral start index i -> i-s.  shift(. , m) is the translation tau.
inline Diagonal shift(const Diagonal& d, long long s, const AnnulusConfig& cfg) {
    switch (d.kind) {
        case DiagKind::Spanning: return Diagonal::spanning(d.a - s, d.b - s, cfg);
        case DiagKind::OuterPeripheral: return Diagonal::outer_peripheral(d.a - s, d.b, cfg);
        case DiagKind::InnerPeripheral: return Diagonal::inner_peripheral(d.a - s, d.b, cfg);
    }
    throw std::logic_error("unreachable");
}

// r_O^s: rotate only the outer boundary.  Twists spanning diagonals.
inline Diagonal rotate_outer(const Diagonal& d, long long s, const AnnulusConfig& cfg) {
    switch (d.kind) {
        case DiagKind::Spanning: return Diagonal::spanning(d.a - s, d.b, cfg);
        case DiagKind::OuterPeripheral: return Diagonal::outer_peripheral(d.a - s, d.b, cfg);
        case DiagKind::InnerPeripheral: return d;
    }
    throw std::logic_error("unreachable");
}

// r_I^s: rotate only the inner boundary.  rotate_outer(rotate_inner(d,1),1) == shift(d,1).
inline Diagonal rotate_inner(const Diagonal& d, long long s, const AnnulusConfig& cfg) {
    switch (d.kind) {
        case DiagKind::Spanning: return Diagonal::spanning(d.a, d.b - s, cfg);
        case DiagKind::OuterPeripheral: return d;
        case DiagKind::InnerPeripheral: return Diagonal::inner_peripheral(d.a - s, d.b, cfg);
    }
    throw std::logic_error("unreachable");
}

// epsilon: exchange the two boundaries, landing in P_{q,p,m}.  The sign
// choice keeps every lift coordinate, so the strip map is (x, y) |->
// (x, 1-y): the annulus orientation reverses, which is what makes
// quivers reverse arrow-for-arrow under the flip.  flip(flip(d)) == d.
inline Diagonal flip(const Diagonal& d, const AnnulusConfig& cfg) {
    const AnnulusConfig fc = cfg.flipped();
    switch (d.kind) {
        case DiagKind::Spanning: return Diagonal::spanning(d.b, d.a, fc);
        case DiagKind::OuterPeripheral: return Diagonal::inner_peripheral(d.a, d.b, fc);
        case DiagKind::InnerPeripheral: return Diagonal::outer_peripheral(d.a, d.b, fc);
    }
    throw std::logic_error("unreachable");
}

// The point reflection (x, y) |-> (-x, y) of the strip: stays inside
// P_{p,q,m}, reverses both boundary orientations, and composes with flip
// to the orientation-preserving boundary swap flip(reflect(d)) used by
// the p == q equivalence.  reflect(reflect(d)) == d.
inline Diagonal reflect(const Diagonal& d, const AnnulusConfig& cfg) {
    switch (d.kind) {
        case DiagKind::Spanning: return Diagonal::spanning(-d.a, -d.b, cfg);
        case DiagKind::OuterPeripheral: return Diagonal::outer_peripheral(-(d.a + d.b - 1), d.b, cfg);
        case DiagKind::InnerPeripheral: return Diagonal::inner_peripheral(-(d.a + d.b - 1), d.b, cfg);
    }
    throw std::logic_error("unreachable");
}

// ---------------------------------------------------------------------------
// m-diagonal predicate, level, self-crossing.
// ---------------------------------------------------------------------------

// Spanning arcs are m-diagonals when u + v == 0 (mod m): with the inner
// labels running in the same rotational direction as the outer ones, the
// outer-congruent-to-inner condition picks up a sign.  (The mutation
// rule confirms the sign: the m+1 diameters of a merged (2m+2)-gon all
// share the same value of u + v.)  Peripheral arcs are m-diagonals when
// k == 2 (mod m), i.e. k = jm+2.
inline bool is_m_diagonal(const Diagonal& d, const AnnulusConfig& cfg) {
    if (d.kind == DiagKind::Spanning) return detail::pmod(d.a + d.b, cfg.m) == 0;
    return detail::pmod(d.b - 2, cfg.m) == 0;
}

// Every m-diagonal lives in a level d in [0, m): u mod m for spanning arcs,
// i mod m for peripheral ones.  Levels are preserved by shift-by-m and by
// elementary moves.
inline int level(const Diagonal& d, const AnnulusConfig& cfg) {
    if (!is_m_diagonal(d, cfg))
        throw std::invalid_argument("level() requires an m-diagonal");
    return static_cast<int>(detail::pmod(d.a, cfg.m));
}

// A peripheral path crosses itself exactly when it runs more than once
// around its boundary polygon; spanning arcs never self-cross.
inline bool is_self_crossing(const Diagonal& d, const AnnulusConfig& cfg) {
    switch (d.kind) {
        case DiagKind::Spanning: return false;
        case DiagKind::OuterPeripheral: return d.b > cfg.outer_count() + 1;
        case DiagKind::InnerPeripheral: return d.b > cfg.inner_count() + 1;
    }
    throw std::logic_error("unreachable");
}

}  // namespace annulus
