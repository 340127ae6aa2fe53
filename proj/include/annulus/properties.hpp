#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "annulus/angulation.hpp"
#include "annulus/crossing.hpp"
#include "annulus/diagcat.hpp"
#include "annulus/factor.hpp"
#include "annulus/json_io.hpp"
#include "annulus/mutation.hpp"
#include "annulus/quiver.hpp"
#include "annulus/symmetry.hpp"

// Seeded property suites shared by the verify command and the acceptance
// harness.  Each check returns nullopt on success or a minimal, loadable
// counterexample on the first violation.

namespace annulus {

struct PropertyFailure {
    std::string suite;
    nlohmann::json detail;
};

using PropertyOutcome = std::optional<PropertyFailure>;

inline Diagonal random_diagonal(const AnnulusConfig& cfg, std::mt19937_64& rng) {
    const long long m = cfg.m;
    std::uniform_int_distribution<int> kind(0, 2);
    std::uniform_int_distribution<long long> twist(-3 * m, 3 * m);
    std::uniform_int_distribution<long long> outer_pos(0, m * cfg.p - 1);
    std::uniform_int_distribution<long long> inner_pos(0, m * cfg.q - 1);
    std::uniform_int_distribution<long long> span(3, m * cfg.p + 1 + 2 * m);
    switch (kind(rng)) {
        case 0: {
            long long u = outer_pos(rng);
            return Diagonal::spanning(u, u + twist(rng), cfg);
        }
        case 1: return Diagonal::outer_peripheral(outer_pos(rng), span(rng), cfg);
        default: return Diagonal::inner_peripheral(inner_pos(rng), span(rng), cfg);
    }
}

inline Angulation random_angulation(const AnnulusConfig& cfg, std::mt19937_64& rng,
                                    int max_steps = 12) {
    Angulation a = delta0(cfg);
    std::uniform_int_distribution<int> steps(0, max_steps);
    std::uniform_int_distribution<int> slot(0, cfg.p + cfg.q - 1);
    int n = steps(rng);
    for (int i = 0; i < n; ++i) a = mutate(a, slot(rng));
    return a;
}

// Crossing numbers: symmetric, invariant under both rotations (hence
// shift and deck), compatible with the flip, and zero between
// peripherals on opposite boundaries.
inline PropertyOutcome check_crossing_properties(const AnnulusConfig& cfg, std::mt19937_64& rng,
                                                 int samples) {
    std::uniform_int_distribution<long long> amount(-2 * cfg.m * (cfg.p + cfg.q),
                                                    2 * cfg.m * (cfg.p + cfg.q));
    const AnnulusConfig fcfg = cfg.flipped();
    for (int t = 0; t < samples; ++t) {
        Diagonal a = random_diagonal(cfg, rng), b = random_diagonal(cfg, rng);
        long long n = crossing_number(a, b, cfg);
        auto fail = [&](const std::string& what, long long got) -> PropertyFailure {
            return {"crossing/" + what,
                    {{"a", to_json(a)}, {"b", to_json(b)}, {"expected", n}, {"got", got}}};
        };
        long long sym = crossing_number(b, a, cfg);
        if (sym != n) return fail("symmetry", sym);
        long long s = amount(rng);
        long long ro = crossing_number(rotate_outer(a, s, cfg), rotate_outer(b, s, cfg), cfg);
        if (ro != n) return fail("rotate_outer", ro);
        long long ri = crossing_number(rotate_inner(a, s, cfg), rotate_inner(b, s, cfg), cfg);
        if (ri != n) return fail("rotate_inner", ri);
        long long sh = crossing_number(shift(a, s, cfg), shift(b, s, cfg), cfg);
        if (sh != n) return fail("shift", sh);
        long long fl = crossing_number(flip(a, cfg), flip(b, cfg), fcfg);
        if (fl != n) return fail("flip", fl);
        if (a.kind != DiagKind::Spanning && b.kind != DiagKind::Spanning && a.kind != b.kind &&
            n != 0)
            return fail("opposite_peripherals", n);
    }
    return std::nullopt;
}

// One mutation step with all the midpoint checks: the quiver of the
// mutated angulation must equal the mutated quiver arrow for arrow, the
// quiver axioms must hold, and m+1 repeats at the same position must
// come back to the start on both sides.
inline PropertyOutcome check_walk_properties(const AnnulusConfig& cfg, std::mt19937_64& rng,
                                             int walks, int max_len) {
    std::uniform_int_distribution<int> len(0, max_len);
    std::uniform_int_distribution<int> slot(0, cfg.p + cfg.q - 1);
    for (int w = 0; w < walks; ++w) {
        Angulation a = delta0(cfg);
        int n = len(rng);
        for (int step = 0; step < n; ++step) {
            int j = slot(rng);
            ColouredQuiver qa = quiver_of(faces(a));
            Angulation am = mutate(a, j);
            ColouredQuiver qm = mutate(qa, j);
            ColouredQuiver qam = quiver_of(faces(am));
            auto dump = [&](const std::string& what) -> PropertyFailure {
                return {"walk/" + what,
                        {{"angulation", to_json(a)}, {"position", j}, {"walk", w}, {"step", step}}};
            };
            if (!(qam == qm)) return dump("commutation");
            if (!quiver_ok(qm)) return dump("axioms");
            Angulation back = am;
            ColouredQuiver qback = qm;
            for (int r = 0; r < cfg.m; ++r) {
                back = mutate(back, j);
                qback = mutate(qback, j);
            }
            if (!(back == a)) return dump("periodicity_angulation");
            if (!(qback == qa)) return dump("periodicity_quiver");
            a = am;
        }
    }
    return std::nullopt;
}

// Exhaustive translate duality over the AR window.
inline PropertyOutcome check_translate_duality(const AnnulusConfig& cfg, long long W, long long L) {
    ARQuiver ar = build_ar_quiver(cfg, W, L);
    for (const auto& va : ar.vertices)
        for (const auto& vb : ar.vertices)
            if (!translate_dual_check(va.diag, vb.diag, cfg))
                return PropertyFailure{"translate_duality",
                                       {{"a", to_json(va.diag)}, {"b", to_json(vb.diag)}}};
    return std::nullopt;
}

// The flip reverses every arrow and keeps its colour.
inline PropertyOutcome check_flip_reversal(const AnnulusConfig& cfg, std::mt19937_64& rng,
                                           int samples) {
    for (int t = 0; t < samples; ++t) {
        Angulation a = random_angulation(cfg, rng);
        ColouredQuiver q = quiver_of(faces(a));
        ColouredQuiver qf = quiver_of(faces(flip(a)));
        if (!(qf == reverse_arrows(q)))
            return PropertyFailure{"flip_reversal", {{"angulation", to_json(a)}}};
    }
    return std::nullopt;
}

// Factoring lemmas: deleting diagonal alpha from the angulation deletes
// vertex v_alpha from the quiver; a spanning diagonal factors to a
// polygon dissection with p+q-1 chords; a peripheral that is not close
// to the border disconnects and is rejected.
inline PropertyOutcome check_factoring(const AnnulusConfig& cfg, std::mt19937_64& rng,
                                       int samples) {
    std::uniform_int_distribution<int> slot_dist(0, cfg.p + cfg.q - 1);
    for (int t = 0; t < samples; ++t) {
        Angulation a = random_angulation(cfg, rng);
        int j = slot_dist(rng);
        const Diagonal& d = a.diagonals[static_cast<std::size_t>(j)];
        ColouredQuiver expect = delete_vertex(quiver_of(faces(a)), j);
        auto fail = [&](const std::string& what) -> PropertyFailure {
            return {"factoring/" + what, {{"angulation", to_json(a)}, {"position", j}}};
        };
        if (d.is_spanning()) {
            auto res = factor_out(a, j);
            const auto* pd = std::get_if<PolygonDissection>(&res);
            if (!pd) return fail("spanning_shape");
            if (static_cast<int>(pd->chords.size()) != cfg.p + cfg.q - 1)
                return fail("spanning_chord_count");
            if (!(dissection_quiver(*pd) == expect)) return fail("spanning_quiver");
        } else if (is_close_to_border(d, cfg)) {
            bool outer = d.kind == DiagKind::OuterPeripheral;
            if ((outer && cfg.p == 2) || (!outer && cfg.q == 2)) {
                try {
                    factor_out(a, j);
                    return fail("boundary_guard_missing");
                } catch (const ValidationError&) {
                }
                continue;
            }
            auto res = factor_out(a, j);
            const auto* sm = std::get_if<Angulation>(&res);
            if (!sm) return fail("border_shape");
            if (!(quiver_of(faces(*sm)) == expect)) return fail("border_quiver");
        } else {
            try {
                factor_out(a, j);
                return fail("disconnect_not_rejected");
            } catch (const ValidationError&) {
            }
        }
    }
    return std::nullopt;
}

}  // namespace annulus
