#pragma once

#include <algorithm>
#include <sstream>
#include <vector>

#include "annulus/config.hpp"
#include "annulus/crossing.hpp"
#include "annulus/diagonal.hpp"
#include "annulus/errors.hpp"
#include "annulus/faces.hpp"

namespace annulus {

// A candidate (m+2)-angulation: p+q diagonals of P_{p,q,m}.  The strict
// flag records whether membership is restricted to m-diagonals (the
// default combinatorial model) or widened to arbitrary diagonals.
struct Angulation {
    AnnulusConfig cfg;
    bool strict = true;
    std::vector<Diagonal> diagonals;

    bool operator==(const Angulation& o) const {
        if (!(cfg == o.cfg) || strict != o.strict) return false;
        auto mine = diagonals, theirs = o.diagonals;
        std::sort(mine.begin(), mine.end());
        std::sort(theirs.begin(), theirs.end());
        return mine == theirs;
    }
};

// Full validity check; throws ValidationError naming the first violated
// invariant.  Checks are ordered cheapest-first so the reported reason is
// deterministic.
inline void validate(const Angulation& ang) {
    const auto& cfg = ang.cfg;
    const auto& ds = ang.diagonals;
    const int expected = cfg.vertex_count();
    if (static_cast<int>(ds.size()) != expected) {
        std::ostringstream os;
        os << "expected " << expected << " diagonals, got " << ds.size();
        throw ValidationError(os.str());
    }
    for (std::size_t i = 0; i < ds.size(); ++i)
        for (std::size_t j = i + 1; j < ds.size(); ++j)
            if (ds[i] == ds[j]) {
                std::ostringstream os;
                os << "duplicate diagonal " << ds[i];
                throw ValidationError(os.str());
            }
    if (ang.strict)
        for (const auto& d : ds)
            if (!is_m_diagonal(d, cfg)) {
                std::ostringstream os;
                os << d << " is not an m-diagonal";
                throw ValidationError(os.str());
            }
    for (const auto& d : ds)
        if (is_self_crossing(d, cfg)) {
            std::ostringstream os;
            os << d << " crosses itself";
            throw ValidationError(os.str());
        }
    for (std::size_t i = 0; i < ds.size(); ++i)
        for (std::size_t j = i + 1; j < ds.size(); ++j)
            if (long long c = crossing_number(ds[i], ds[j], cfg); c != 0) {
                std::ostringstream os;
                os << ds[i] << " and " << ds[j] << " cross (" << c << ")";
                throw ValidationError(os.str());
            }
    if (std::none_of(ds.begin(), ds.end(), [](const Diagonal& d) { return d.is_spanning(); }))
        throw ValidationError("no spanning diagonal");

    FaceMap fm(cfg, ds);
    for (const auto& f : fm.faces())
        if (static_cast<int>(f.sides.size()) != cfg.m + 2) {
            std::ostringstream os;
            os << "face with " << f.sides.size() << " sides (want " << cfg.m + 2 << ")";
            throw ValidationError(os.str());
        }
    // Euler count: p+q interior faces once every face is an (m+2)-gon.
    if (static_cast<int>(fm.faces().size()) != expected) {
        std::ostringstream os;
        os << "expected " << expected << " faces, got " << fm.faces().size();
        throw ValidationError(os.str());
    }
}

inline bool is_valid(const Angulation& ang) {
    try {
        validate(ang);
        return true;
    } catch (const ValidationError&) {
        return false;
    }
}

inline FaceMap faces(const Angulation& ang) { return FaceMap(ang.cfg, ang.diagonals); }

// The fan-shaped base angulation.  All its diagonals are spanning, all of
// level 0, and its quiver is the bipartite-free double chain
//   0 -> 1 -> ... -> p-1 -> p+q-1   and   0 -> p -> ... -> p+q-2 -> p+q-1
// in colour 0 with colour-m reverses.
inline Angulation delta0(const AnnulusConfig& cfg) {
    Angulation ang{cfg, true, {}};
    const long long m = cfg.m, p = cfg.p, q = cfg.q;
    ang.diagonals.reserve(static_cast<std::size_t>(cfg.vertex_count()));
    ang.diagonals.push_back(Diagonal::spanning(p * m, 0, cfg));
    for (long long t = 1; t <= p - 1; ++t)
        ang.diagonals.push_back(Diagonal::spanning((p - t) * m, 0, cfg));
    for (long long t = 0; t <= q - 2; ++t)
        ang.diagonals.push_back(Diagonal::spanning(p * m, (1 + t) * m, cfg));
    ang.diagonals.push_back(Diagonal::spanning(0, 0, cfg));
    return ang;
}

}  // namespace annulus
