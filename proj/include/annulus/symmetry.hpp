#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "annulus/angulation.hpp"
#include "annulus/quiver.hpp"

namespace annulus {

namespace detail {
template <typename F>
Angulation map_diagonals(const Angulation& a, const AnnulusConfig& target_cfg, F&& f) {
    Angulation out{target_cfg, a.strict, {}};
    out.diagonals.reserve(a.diagonals.size());
    for (const auto& d : a.diagonals) out.diagonals.push_back(f(d));
    return out;
}
}  // namespace detail

inline Angulation shift(const Angulation& a, long long s) {
    return detail::map_diagonals(a, a.cfg, [&](const Diagonal& d) { return shift(d, s, a.cfg); });
}

inline Angulation rotate_outer(const Angulation& a, long long s) {
    return detail::map_diagonals(a, a.cfg,
                                 [&](const Diagonal& d) { return rotate_outer(d, s, a.cfg); });
}

inline Angulation rotate_inner(const Angulation& a, long long s) {
    return detail::map_diagonals(a, a.cfg,
                                 [&](const Diagonal& d) { return rotate_inner(d, s, a.cfg); });
}

inline Angulation flip(const Angulation& a) {
    return detail::map_diagonals(a, a.cfg.flipped(),
                                 [&](const Diagonal& d) { return flip(d, a.cfg); });
}

inline Angulation reflect(const Angulation& a) {
    return detail::map_diagonals(a, a.cfg, [&](const Diagonal& d) { return reflect(d, a.cfg); });
}

// The orientation-preserving boundary swap: leaves the coloured quiver
// equal arrow for arrow, so for p == q it always joins angulation
// classes that carry the same quiver.
inline Angulation flip_reflect(const Angulation& a) { return flip(reflect(a)); }

// An angulation is reflection-symmetric when its quiver is isomorphic to
// the arrow-reversed quiver (equivalently, to the quiver of the flipped
// angulation).
inline bool is_reflection_symmetric(const Angulation& a) {
    ColouredQuiver q = quiver_of(faces(a));
    return is_isomorphic(q, reverse_arrows(q));
}

// Canonical representative of the rotation (and, when permitted, flip)
// equivalence class.  Candidates are the finitely many rotations carrying
// some spanning diagonal of the angulation onto S(0,0); the sorted
// diagonal list of the least candidate is a class invariant.  For p == q
// the quiver-preserving boundary swap flip_reflect contributes its
// rotations as well, which is exactly the identification under which
// angulation classes match quiver classes.
inline Angulation canonical_form(const Angulation& a, bool use_flip) {
    std::optional<Angulation> best;
    auto consider_rotations = [&](const Angulation& cand) {
        for (const auto& d : cand.diagonals) {
            if (!d.is_spanning()) continue;
            Angulation rot = rotate_inner(rotate_outer(cand, d.a), d.b);
            std::sort(rot.diagonals.begin(), rot.diagonals.end());
            if (!best || rot.diagonals < best->diagonals) best = std::move(rot);
        }
    };
    consider_rotations(a);
    if (use_flip && a.cfg.p == a.cfg.q) consider_rotations(flip_reflect(a));
    if (!best) throw ValidationError("no spanning diagonal to canonicalize against");
    return *best;
}

// Stable string key of the class of a (used for deduplication).
inline std::string canonical_key(const Angulation& a, bool use_flip) {
    Angulation c = canonical_form(a, use_flip);
    std::ostringstream os;
    for (const auto& d : c.diagonals) os << d << ";";
    return os.str();
}

}  // namespace annulus
