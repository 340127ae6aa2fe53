#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "annulus/config.hpp"
#include "annulus/crossing.hpp"
#include "annulus/diagonal.hpp"
#include "annulus/errors.hpp"

// Cut-and-unfold face extraction.
//
// A maximal (or candidate) set of pairwise noncrossing diagonals always
// contains at least one spanning diagonal once validated.  Cutting the
// annulus along the lexicographically least spanning diagonal a0 = (u0, v0)
// unrolls it into a convex polygon with
//
//     N = mp + mq + 2
//
// marked positions.  Positions 0..mp are the outer lifts u0..u0+mp in
// increasing order; positions mp+1..mp+1+mq are the inner lifts v0+mq down
// to v0.  Between consecutive positions sit the polygon sides: mp outer
// boundary edges, then one copy of the cut (CutB, joining the lifts
// u0+mp / v0+mq), then mq inner boundary edges, and finally the second cut
// copy (CutA, joining u0 / v0) closing the cycle.  Every other diagonal of
// the annulus has a unique deck translate that fits inside the cut window,
// giving a chord of the polygon; faces of the annulus are the interior
// faces of this chord diagram, with the two cut copies identified.

namespace annulus {

// Identity of a marked position on the cut polygon.
struct PolyVertex {
    bool outer = true;   // outer boundary lift vs inner boundary lift
    long long lift = 0;  // universal-cover coordinate
};

struct FaceSide {
    enum class Kind : std::uint8_t { OuterEdge, InnerEdge, Cut, Chord };
    Kind kind = Kind::Chord;
    long long lift = 0;  // boundary edges: the lower lift of the two endpoints
    int slot = -1;       // Chord / Cut: index into the diagonal list
    bool cut_b = false;  // Cut: true for the deck-translated copy
};

struct Face {
    std::vector<int> corners;     // polygon positions, counterclockwise
    std::vector<FaceSide> sides;  // sides[i] joins corners[i] -> corners[(i+1) % size]
};

namespace detail {

// Interior faces of a convex N-gon with noncrossing chords, via the planar
// rotation system.  At each position the neighbours are ordered
// counterclockwise by (w - v) mod N; the successor of a directed edge u->v
// is (v, predecessor of u in the cyclic order at v).  The orbit containing
// 0 -> N-1 walks the outer boundary clockwise and is dropped.
inline std::vector<std::vector<int>> polygon_faces(int n,
                                                   const std::vector<std::pair<int, int>>& chords) {
    std::vector<std::vector<int>> nbr(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        nbr[v].push_back((v + 1) % n);
        nbr[v].push_back((v + n - 1) % n);
    }
    for (const auto& [a, b] : chords) {
        nbr[a].push_back(b);
        nbr[b].push_back(a);
    }
    for (int v = 0; v < n; ++v) {
        std::sort(nbr[v].begin(), nbr[v].end(),
                  [&](int x, int y) { return pmod(x - v, n) < pmod(y - v, n); });
        // A repeated neighbour would make the rotation system ambiguous;
        // distinct noncrossing diagonals never produce parallel chords.
        for (std::size_t i = 1; i < nbr[v].size(); ++i)
            if (nbr[v][i] == nbr[v][i - 1])
                throw ValidationError("duplicate chord in cut polygon");
    }

    auto edge_id = [n](int a, int b) { return static_cast<long long>(a) * n + b; };
    std::map<long long, bool> seen;
    for (int v = 0; v < n; ++v)
        for (int w : nbr[v]) seen[edge_id(v, w)] = false;

    std::vector<std::vector<int>> faces;
    for (auto& [id, used] : seen) {
        if (used) continue;
        int a = static_cast<int>(id / n), b = static_cast<int>(id % n);
        std::vector<int> corners;
        int ca = a, cb = b;
        do {
            seen[edge_id(ca, cb)] = true;
            corners.push_back(cb);
            const auto& ring = nbr[cb];
            auto it = std::find(ring.begin(), ring.end(), ca);
            std::size_t idx = static_cast<std::size_t>(it - ring.begin());
            int nxt = ring[(idx + ring.size() - 1) % ring.size()];
            ca = cb;
            cb = nxt;
        } while (!(ca == a && cb == b));
        bool outer_face = false;
        for (std::size_t i = 0; i < corners.size(); ++i)
            if (corners[i] == 0 && corners[(i + corners.size() - 1) % corners.size()] == 1) {
                // contains the clockwise boundary step 1 -> 0
                outer_face = true;
                break;
            }
        if (!outer_face) faces.push_back(std::move(corners));
    }
    return faces;
}

}  // namespace detail

class FaceMap {
public:
    // Extracts the faces of the diagonal set.  The set must be pairwise
    // noncrossing and contain at least one spanning diagonal; callers are
    // expected to have checked that already (Angulation::validate does).
    // By default the cut runs along the least spanning diagonal; a caller
    // may force a different spanning slot.
    FaceMap(const AnnulusConfig& cfg, const std::vector<Diagonal>& diags, int force_cut = -1)
        : cfg_(cfg) {
        const long long mp = cfg.outer_count(), mq = cfg.inner_count();
        n_ = static_cast<int>(mp + mq + 2);

        cut_slot_ = -1;
        if (force_cut >= 0) {
            if (force_cut >= static_cast<int>(diags.size()) ||
                !diags[static_cast<std::size_t>(force_cut)].is_spanning())
                throw std::invalid_argument("forced cut slot is not a spanning diagonal");
            cut_slot_ = force_cut;
        } else {
            for (std::size_t i = 0; i < diags.size(); ++i) {
                if (!diags[i].is_spanning()) continue;
                if (cut_slot_ < 0 || diags[i] < diags[static_cast<std::size_t>(cut_slot_)])
                    cut_slot_ = static_cast<int>(i);
            }
            if (cut_slot_ < 0) throw ValidationError("no spanning diagonal to cut along");
        }
        cut_u_ = diags[static_cast<std::size_t>(cut_slot_)].a;
        cut_v_ = diags[static_cast<std::size_t>(cut_slot_)].b;

        positions_.resize(static_cast<std::size_t>(n_));
        for (long long j = 0; j <= mp; ++j)
            positions_[static_cast<std::size_t>(j)] = PolyVertex{true, cut_u_ + j};
        for (long long j = 0; j <= mq; ++j)
            positions_[static_cast<std::size_t>(mp + 1 + j)] = PolyVertex{false, cut_v_ + mq - j};

        chord_pos_.assign(diags.size(), {-1, -1});
        std::vector<std::pair<int, int>> chords;
        std::map<std::pair<int, int>, int> chord_owner;
        for (std::size_t s = 0; s < diags.size(); ++s) {
            if (static_cast<int>(s) == cut_slot_) continue;
            auto pr = place(diags[s]);
            chord_pos_[s] = pr;
            auto key = std::minmax(pr.first, pr.second);
            auto [it, fresh] = chord_owner.emplace(std::make_pair(key.first, key.second),
                                                   static_cast<int>(s));
            if (!fresh) throw ValidationError("two diagonals share a chord in the cut polygon");
            chords.push_back(pr);
        }

        auto raw = detail::polygon_faces(n_, chords);
        faces_.reserve(raw.size());
        for (auto& corners : raw) {
            Face f;
            f.corners = std::move(corners);
            const std::size_t k = f.corners.size();
            for (std::size_t i = 0; i < k; ++i)
                f.sides.push_back(classify(f.corners[i], f.corners[(i + 1) % k], chord_owner));
            faces_.push_back(std::move(f));
        }

        slot_faces_.assign(diags.size(), {-1, -1});
        for (std::size_t fi = 0; fi < faces_.size(); ++fi)
            for (const auto& s : faces_[fi].sides) {
                if (s.kind != FaceSide::Kind::Chord && s.kind != FaceSide::Kind::Cut) continue;
                auto& pair = slot_faces_[static_cast<std::size_t>(s.slot)];
                if (pair[0] < 0)
                    pair[0] = static_cast<int>(fi);
                else if (pair[1] < 0)
                    pair[1] = static_cast<int>(fi);
                else
                    throw ValidationError("diagonal bounds more than two faces");
            }
        for (std::size_t s = 0; s < diags.size(); ++s) {
            if (slot_faces_[s][0] < 0 || slot_faces_[s][1] < 0)
                throw ValidationError("diagonal fails to bound two faces");
            if (slot_faces_[s][0] == slot_faces_[s][1])
                throw ValidationError("diagonal bounds the same face on both sides");
        }
    }

    const AnnulusConfig& config() const { return cfg_; }
    int cut_slot() const { return cut_slot_; }
    long long cut_u() const { return cut_u_; }
    long long cut_v() const { return cut_v_; }
    int polygon_size() const { return n_; }
    const std::vector<PolyVertex>& positions() const { return positions_; }
    const PolyVertex& position(int i) const { return positions_[static_cast<std::size_t>(i)]; }
    const std::vector<Face>& faces() const { return faces_; }

    // The two interior faces bounded by the diagonal in the given slot.
    const std::array<int, 2>& faces_of(int slot) const {
        return slot_faces_[static_cast<std::size_t>(slot)];
    }

    // Polygon endpoints of a non-cut slot's chord.
    const std::pair<int, int>& chord(int slot) const {
        return chord_pos_[static_cast<std::size_t>(slot)];
    }

private:
    // Unique deck translate of d fitting inside the cut window
    // [u0, u0+mp] x [v0, v0+mq]; returns its polygon positions.
    std::pair<int, int> place(const Diagonal& d) const {
        const long long mp = cfg_.outer_count(), mq = cfg_.inner_count();
        std::optional<std::pair<int, int>> found;
        auto record = [&](int x, int y) {
            if (found) throw ValidationError("diagonal has two placements in the cut polygon");
            if ((x + 1) % n_ == y || (y + 1) % n_ == x)
                throw ValidationError("diagonal degenerates to a polygon side");
            found = std::make_pair(x, y);
        };
        if (d.is_spanning()) {
            // u + t*mp in [u0, u0+mp] allows at most two t; the v-window
            // filter leaves exactly one for any diagonal noncrossing with
            // the cut.
            for (long long t = detail::ceildiv(cut_u_ - d.a, mp);
                 t <= detail::floordiv(cut_u_ + mp - d.a, mp); ++t) {
                long long u = d.a + t * mp, v = d.b + t * mq;
                if (v < cut_v_ || v > cut_v_ + mq) continue;
                record(outer_pos(u), inner_pos(v));
            }
        } else if (d.kind == DiagKind::OuterPeripheral) {
            for (long long t = detail::ceildiv(cut_u_ - d.a, mp);
                 t <= detail::floordiv(cut_u_ + mp - (d.a + d.b - 1), mp); ++t)
                record(outer_pos(d.a + t * mp), outer_pos(d.a + d.b - 1 + t * mp));
        } else {
            for (long long t = detail::ceildiv(cut_v_ - d.a, mq);
                 t <= detail::floordiv(cut_v_ + mq - (d.a + d.b - 1), mq); ++t)
                record(inner_pos(d.a + d.b - 1 + t * mq), inner_pos(d.a + t * mq));
        }
        if (!found) throw ValidationError("diagonal has no placement in the cut polygon");
        return *found;
    }

    int outer_pos(long long lift) const { return static_cast<int>(lift - cut_u_); }
    int inner_pos(long long lift) const {
        return static_cast<int>(cfg_.outer_count() + 1 + (cut_v_ + cfg_.inner_count() - lift));
    }

    FaceSide classify(int a, int b, const std::map<std::pair<int, int>, int>& chord_owner) const {
        const long long mp = cfg_.outer_count(), mq = cfg_.inner_count();
        if ((a + 1) % n_ == b) {
            // forward boundary step a -> a+1: polygon side index a
            FaceSide s;
            if (a < mp) {
                s.kind = FaceSide::Kind::OuterEdge;
                s.lift = cut_u_ + a;
            } else if (a == mp) {
                s.kind = FaceSide::Kind::Cut;
                s.slot = cut_slot_;
                s.cut_b = true;
            } else if (a < mp + 1 + mq) {
                s.kind = FaceSide::Kind::InnerEdge;
                s.lift = cut_v_ + mq + mp - a;  // lower endpoint of the edge
            } else {
                s.kind = FaceSide::Kind::Cut;
                s.slot = cut_slot_;
                s.cut_b = false;
            }
            return s;
        }
        auto key = std::minmax(a, b);
        auto it = chord_owner.find(std::make_pair(key.first, key.second));
        if (it == chord_owner.end()) throw ValidationError("face walk met an unknown chord");
        FaceSide s;
        s.kind = FaceSide::Kind::Chord;
        s.slot = it->second;
        return s;
    }

    AnnulusConfig cfg_;
    int n_ = 0;
    int cut_slot_ = -1;
    long long cut_u_ = 0, cut_v_ = 0;
    std::vector<PolyVertex> positions_;
    std::vector<Face> faces_;
    std::vector<std::array<int, 2>> slot_faces_;
    std::vector<std::pair<int, int>> chord_pos_;
};

}  // namespace annulus
