#pragma once

#include <algorithm>
#include <variant>
#include <vector>

#include "annulus/angulation.hpp"
#include "annulus/faces.hpp"
#include "annulus/quiver.hpp"

// Factoring a diagonal out of an angulation (the geometric counterpart of
// deleting the vertex from the quiver).  Three shapes arise:
//  - a close-to-border peripheral (k = m+2) bounds an (m+2)-gon of boundary
//    edges; removing that gon shrinks the boundary by m marked points and
//    leaves an angulation of the smaller annulus;
//  - a spanning diagonal cuts the annulus open into a disc, leaving a
//    dissection of an (mp+mq+2)-gon by the remaining p+q-1 chords;
//  - any other peripheral would disconnect the face complex, which the
//    quiver deletion does not model, so it is rejected.

namespace annulus {

struct PolygonDissection {
    int size = 0;  // marked points on the polygon
    int m = 1;
    // chords in the inherited slot order (positions on the polygon, ccw)
    std::vector<std::pair<int, int>> chords;
};

// Quiver of a polygon dissection under the same face rule as the annulus;
// every polygon side between consecutive positions is a border edge.
inline ColouredQuiver dissection_quiver(const PolygonDissection& pd) {
    auto faces = detail::polygon_faces(pd.size, pd.chords);
    std::map<std::pair<int, int>, int> owner;
    for (std::size_t s = 0; s < pd.chords.size(); ++s) {
        auto key = std::minmax(pd.chords[s].first, pd.chords[s].second);
        owner[{key.first, key.second}] = static_cast<int>(s);
    }
    ColouredQuiver q(static_cast<int>(pd.chords.size()), pd.m);
    for (const auto& corners : faces) {
        const int k = static_cast<int>(corners.size());
        std::vector<std::pair<int, int>> spots;
        for (int pos = 0; pos < k; ++pos) {
            int a = corners[static_cast<std::size_t>(pos)];
            int b = corners[static_cast<std::size_t>((pos + 1) % k)];
            if ((a + 1) % pd.size == b) continue;  // border edge
            auto key = std::minmax(a, b);
            spots.emplace_back(pos, owner.at({key.first, key.second}));
        }
        for (const auto& [pi, si] : spots)
            for (const auto& [pj, sj] : spots) {
                if (pi == pj) continue;
                q.add_arrows(si, sj, static_cast<int>(detail::pmod(pj - pi - 1, k)), 1);
            }
    }
    return q;
}

using FactorResult = std::variant<Angulation, PolygonDissection>;

inline bool is_close_to_border(const Diagonal& d, const AnnulusConfig& cfg) {
    (void)cfg;
    return d.is_peripheral() && d.b == cfg.m + 2;
}

namespace detail {

// Lift relabeling after deleting the m marked points strictly inside the
// arc (anchor, anchor + m+1) on a boundary of M points: equivariant map
// sending kept lift x to its index in the thinned boundary (M - m points).
inline long long drop_arc(long long x, long long anchor, long long span_m, long long M) {
    long long t = floordiv(x - anchor - 1, M);
    long long base = x - t * M;  // in (anchor, anchor + M]
    if (base <= anchor + span_m)
        throw std::logic_error("relabeling a deleted marked point");
    return base - span_m + t * (M - span_m);
}

}  // namespace detail

// Factors the diagonal in `slot` out of a valid angulation.
inline FactorResult factor_out(const Angulation& ang, int slot) {
    if (slot < 0 || slot >= static_cast<int>(ang.diagonals.size()))
        throw std::invalid_argument("factor slot out of range");
    const auto& cfg = ang.cfg;
    const Diagonal d = ang.diagonals[static_cast<std::size_t>(slot)];

    if (d.is_spanning()) {
        // cut the annulus open along d
        FaceMap fm(cfg, ang.diagonals, slot);
        PolygonDissection pd;
        pd.size = fm.polygon_size();
        pd.m = cfg.m;
        for (std::size_t s = 0; s < ang.diagonals.size(); ++s) {
            if (static_cast<int>(s) == slot) continue;
            pd.chords.push_back(fm.chord(static_cast<int>(s)));
        }
        return pd;
    }

    if (!is_close_to_border(d, cfg))
        throw ValidationError("factoring a non-border peripheral disconnects the annulus");

    const bool outer = d.kind == DiagKind::OuterPeripheral;
    if ((outer ? cfg.p : cfg.q) - 1 < 2)
        throw ValidationError("factoring would shrink a boundary below two");
    const long long M = outer ? cfg.outer_count() : cfg.inner_count();
    AnnulusConfig smaller(outer ? cfg.p - 1 : cfg.p, outer ? cfg.q : cfg.q - 1, cfg.m);

    Angulation out{smaller, ang.strict, {}};
    for (std::size_t s = 0; s < ang.diagonals.size(); ++s) {
        if (static_cast<int>(s) == slot) continue;
        const Diagonal& e = ang.diagonals[s];
        auto relabel = [&](long long x) { return detail::drop_arc(x, d.a, cfg.m, M); };
        switch (e.kind) {
            case DiagKind::Spanning:
                out.diagonals.push_back(Diagonal::spanning(outer ? relabel(e.a) : e.a,
                                                           outer ? e.b : relabel(e.b), smaller));
                break;
            case DiagKind::OuterPeripheral:
                out.diagonals.push_back(outer ? Diagonal::outer_peripheral(
                                                    relabel(e.a), relabel(e.a + e.b - 1) - relabel(e.a) + 1,
                                                    smaller)
                                              : Diagonal::outer_peripheral(e.a, e.b, smaller));
                break;
            case DiagKind::InnerPeripheral:
                out.diagonals.push_back(outer ? Diagonal::inner_peripheral(e.a, e.b, smaller)
                                              : Diagonal::inner_peripheral(
                                                    relabel(e.a), relabel(e.a + e.b - 1) - relabel(e.a) + 1,
                                                    smaller));
                break;
        }
    }
    validate(out);
    return out;
}

// Inverse of close-to-border factoring: adds m marked points inside the
// boundary edge whose lower lift is `edge_lift` on the named boundary, and
// appends the close-to-border diagonal spanning the widened gap.
inline Angulation extend(const Angulation& ang, bool outer, long long edge_lift) {
    const auto& cfg = ang.cfg;
    AnnulusConfig larger(outer ? cfg.p + 1 : cfg.p, outer ? cfg.q : cfg.q + 1, cfg.m);
    const long long M = outer ? cfg.outer_count() : cfg.inner_count();
    const long long x = detail::pmod(edge_lift, M);
    // lifts in (x, x+M] move up by m (the anchor x stays), equivariantly
    auto shifted = [&](long long y) {
        long long t = detail::floordiv(y - x - 1, M);
        long long base = y - t * M;
        return base + cfg.m + t * (M + cfg.m);
    };

    Angulation out{larger, ang.strict, {}};
    for (const auto& e : ang.diagonals) {
        switch (e.kind) {
            case DiagKind::Spanning:
                out.diagonals.push_back(Diagonal::spanning(outer ? shifted(e.a) : e.a,
                                                           outer ? e.b : shifted(e.b), larger));
                break;
            case DiagKind::OuterPeripheral:
                out.diagonals.push_back(
                    outer ? Diagonal::outer_peripheral(shifted(e.a),
                                                       shifted(e.a + e.b - 1) - shifted(e.a) + 1,
                                                       larger)
                          : Diagonal::outer_peripheral(e.a, e.b, larger));
                break;
            case DiagKind::InnerPeripheral:
                out.diagonals.push_back(
                    outer ? Diagonal::inner_peripheral(e.a, e.b, larger)
                          : Diagonal::inner_peripheral(shifted(e.a),
                                                       shifted(e.a + e.b - 1) - shifted(e.a) + 1,
                                                       larger));
                break;
        }
    }
    out.diagonals.push_back(outer ? Diagonal::outer_peripheral(x, cfg.m + 2, larger)
                                  : Diagonal::inner_peripheral(x, cfg.m + 2, larger));
    validate(out);
    return out;
}

}  // namespace annulus
