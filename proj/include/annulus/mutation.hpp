#pragma once

#include <algorithm>
#include <vector>

#include "annulus/angulation.hpp"
#include "annulus/faces.hpp"

namespace annulus {

// Rotation direction for the diameter of the merged (2m+2)-gon, in units
// of the gon's corner list: mutation replaces the removed diagonal by the
// diameter one corner over in this direction.  The sign is pinned by the
// requirement that diagonal mutation commute with coloured quiver
// mutation; m = 1 cannot tell the directions apart (both give the single
// other diameter), m >= 2 forces +1 (the walk suite fails at the first
// asymmetric state with -1).
inline constexpr int MUTATION_DIR = 1;

namespace detail {

inline Diagonal diagonal_between(const PolyVertex& a, const PolyVertex& b,
                                 const AnnulusConfig& cfg) {
    if (a.outer != b.outer) {
        const PolyVertex& out = a.outer ? a : b;
        const PolyVertex& in = a.outer ? b : a;
        return Diagonal::spanning(out.lift, in.lift, cfg);
    }
    long long x = std::min(a.lift, b.lift), y = std::max(a.lift, b.lift);
    return a.outer ? Diagonal::outer_peripheral(x, y - x + 1, cfg)
                   : Diagonal::inner_peripheral(x, y - x + 1, cfg);
}

// Corners of the (2m+2)-gon obtained by removing the diagonal in `slot`,
// counterclockwise, arranged so the removed diagonal joins entries 0 and
// m+1.  When the slot is the cut, the face on the CutB side is glued in
// after a deck translation.
inline std::vector<PolyVertex> merged_gon(const FaceMap& fm, int slot) {
    const auto& cfg = fm.config();
    const auto fpair = fm.faces_of(slot);
    const Face* f1 = &fm.faces()[static_cast<std::size_t>(fpair[0])];
    const Face* f2 = &fm.faces()[static_cast<std::size_t>(fpair[1])];
    const bool through_cut = (slot == fm.cut_slot());
    if (through_cut) {
        // f1 is the face walking CutA (forward side of the glueing).
        auto has_cut_a = [&](const Face& f) {
            for (const auto& s : f.sides)
                if (s.kind == FaceSide::Kind::Cut && !s.cut_b) return true;
            return false;
        };
        if (!has_cut_a(*f1)) std::swap(f1, f2);
    }

    auto side_index = [&](const Face& f, bool want_cut_b) {
        for (std::size_t i = 0; i < f.sides.size(); ++i) {
            const auto& s = f.sides[i];
            if (s.slot != slot) continue;
            if (through_cut && s.cut_b != want_cut_b) continue;
            return i;
        }
        throw std::logic_error("mutated slot missing from its face");
    };
    const std::size_t i1 = side_index(*f1, false);
    const std::size_t i2 = side_index(*f2, true);
    const std::size_t k = f1->corners.size();

    auto corner = [&](const Face& f, std::size_t i, bool translate) {
        PolyVertex v = fm.position(f.corners[i % f.corners.size()]);
        if (translate) v.lift -= v.outer ? cfg.outer_count() : cfg.inner_count();
        return v;
    };

    std::vector<PolyVertex> gon;
    gon.reserve(2 * k - 2);
    // all of f1, starting just past the removed diagonal and ending at it
    for (std::size_t t = 0; t < k; ++t) gon.push_back(corner(*f1, i1 + 1 + t, false));
    // f2's corners strictly between its two endpoints of the diagonal
    for (std::size_t t = 0; t + 2 < f2->corners.size(); ++t)
        gon.push_back(corner(*f2, i2 + 2 + t, through_cut));

    // glueing consistency: f2 walks the removed diagonal oppositely
    const PolyVertex y = gon.front(), x = gon[k - 1];
    const PolyVertex x2 = corner(*f2, i2 + 1, through_cut), y2 = corner(*f2, i2, through_cut);
    if (x.outer != x2.outer || x.lift != x2.lift || y.outer != y2.outer || y.lift != y2.lift)
        throw std::logic_error("face glueing mismatch while merging");
    return gon;
}

}  // namespace detail

// The m+1 diagonals (diameters of the merged (2m+2)-gon) that can replace
// the diagonal in `slot`; entry 0 is that diagonal itself, successive
// entries step counterclockwise.
inline std::vector<Diagonal> mutation_diameters(const Angulation& ang, int slot) {
    FaceMap fm(ang.cfg, ang.diagonals);
    auto gon = detail::merged_gon(fm, slot);
    const int m = ang.cfg.m;
    std::vector<Diagonal> out;
    out.reserve(static_cast<std::size_t>(m) + 1);
    for (int w = 0; w <= m; ++w)
        out.push_back(detail::diagonal_between(gon[static_cast<std::size_t>(w)],
                                               gon[static_cast<std::size_t>(w + m + 1)],
                                               ang.cfg));
    return out;
}

// Mutation of the angulation at a slot: the diagonal is replaced in place
// by the neighbouring diameter of its (2m+2)-gon, so vertex numbering of
// the corresponding quiver is preserved.
inline Angulation mutate(const Angulation& ang, int slot, int dir = MUTATION_DIR) {
    if (slot < 0 || slot >= static_cast<int>(ang.diagonals.size()))
        throw std::invalid_argument("mutation slot out of range");
    auto diameters = mutation_diameters(ang, slot);
    const int m = ang.cfg.m;
    Angulation out = ang;
    out.diagonals[static_cast<std::size_t>(slot)] =
        diameters[static_cast<std::size_t>(detail::pmod(dir, m + 1))];
    validate(out);
    return out;
}

}  // namespace annulus
