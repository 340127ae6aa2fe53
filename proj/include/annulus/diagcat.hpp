#pragma once

#include <algorithm>
#include <cstdlib>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "annulus/angulation.hpp"
#include "annulus/diagonal.hpp"
#include "annulus/errors.hpp"

// Elementary moves between m-diagonals and the windowed AR quiver built
// from them.  Moves are the irreducible maps of the diagram category:
//
//   S(u,v)   ->  S(u+m, v), S(u, v+m)
//   O(i,m+2) ->  O(i, 2m+2)
//   O(i,k)   ->  O(i, k+m), O(i+m, k-m)        (k > m+2)
//
// and the same shape on the inner boundary.  tau is shift by m; the
// translate duality Hom(a, b) ~ Hom(tau b, a) holds move-by-move.
//
// Peripheral arcs of large k are legitimate objects here even when they
// wind past themselves, so no self-crossing restriction applies.

namespace annulus {

inline std::vector<Diagonal> elementary_moves(const Diagonal& d, const AnnulusConfig& cfg) {
    if (!is_m_diagonal(d, cfg))
        throw std::invalid_argument("elementary moves are only defined for m-diagonals");
    std::vector<Diagonal> out;
    if (d.is_spanning()) {
        out.push_back(Diagonal::spanning(d.a + cfg.m, d.b, cfg));
        out.push_back(Diagonal::spanning(d.a, d.b + cfg.m, cfg));
        return out;
    }
    auto make = d.kind == DiagKind::OuterPeripheral ? Diagonal::outer_peripheral
                                                    : Diagonal::inner_peripheral;
    out.push_back(make(d.a, d.b + cfg.m, cfg));
    if (d.b > cfg.m + 2) out.push_back(make(d.a + cfg.m, d.b - cfg.m, cfg));
    return out;
}

inline bool has_move(const Diagonal& a, const Diagonal& b, const AnnulusConfig& cfg) {
    for (const auto& t : elementary_moves(a, cfg))
        if (t == b) return true;
    return false;
}

// Hom(a, b) != 0 along a move iff Hom(tau b, a) != 0 along one.
inline bool translate_dual_check(const Diagonal& a, const Diagonal& b, const AnnulusConfig& cfg) {
    return has_move(a, b, cfg) == has_move(shift(b, cfg.m, cfg), a, cfg);
}

// ---------------------------------------------------------------------------
// Labels:  S^d : tau^s P_i        transjective, degree d
//          Tp^d : Q(i, j)         rank-p tube, quasi-simple index i, length j
//          Tq^d : Q(i, j)         rank-q tube
//
// A spanning m-diagonal of level d is tau^s applied to the degree-d copy
// of a fan diagonal delta_i of the initial angulation.  The degree shift
// acts on coordinates as (u, v) -> (u+1, v-1) (one step of outer
// rotation against inner rotation): it raises the level by one and
// preserves the congruence u + v == 0, so delta_i[d] = (u_i+d, v_i-d)
// and the labelled object is shift(delta_i[d], m*s).  The decomposition
// is found by bounded search and canonicalised by least i, then least
// |s| with ties to s >= 0.  For p == q the twist v - u is invariant
// under every shift, so spanning diagonals whose twist differs from the
// finitely many anchor twists admit no such decomposition;
// functor_label throws and callers fall back to raw coordinates.

struct ARLabel {
    enum class Kind { Transjective, TubeP, TubeQ };
    Kind kind = Kind::Transjective;
    long long i = 0;  // fan index (transjective) or quasi-simple index (tube)
    long long s = 0;  // tau power (transjective) or quasi-length j (tube)
    int d = 0;        // degree = level
    auto operator<=>(const ARLabel&) const = default;
};

inline std::string label_string(const ARLabel& l) {
    std::ostringstream os;
    switch (l.kind) {
        case ARLabel::Kind::Transjective:
            os << "S^" << l.d << ":";
            if (l.s != 0) os << "tau^" << l.s << " ";
            os << "P_" << l.i;
            break;
        case ARLabel::Kind::TubeP:
            os << "Tp^" << l.d << ":Q(" << l.i << "," << l.s << ")";
            break;
        case ARLabel::Kind::TubeQ:
            os << "Tq^" << l.d << ":Q(" << l.i << "," << l.s << ")";
            break;
    }
    return os.str();
}

inline ARLabel functor_label(const Diagonal& a, const AnnulusConfig& cfg, long long W = 8) {
    if (!is_m_diagonal(a, cfg))
        throw std::invalid_argument("only m-diagonals carry AR labels");
    const long long m = cfg.m;
    if (!a.is_spanning()) {
        bool outer = a.kind == DiagKind::OuterPeripheral;
        long long rank = outer ? cfg.p : cfg.q;
        int d = static_cast<int>(detail::pmod(a.a, m));
        long long i = detail::pmod((a.a - d) / m, rank);
        long long j = (a.b - 2) / m;
        return ARLabel{outer ? ARLabel::Kind::TubeP : ARLabel::Kind::TubeQ, i, j, d};
    }
    int d = static_cast<int>(detail::pmod(a.a, m));
    const auto fan = delta0(cfg).diagonals;
    const long long bound = (cfg.p + cfg.q + W + 2) * std::max(cfg.p, cfg.q);
    for (long long i = 0; i < static_cast<long long>(fan.size()); ++i) {
        Diagonal anchor =
            rotate_inner(rotate_outer(fan[static_cast<std::size_t>(i)], -d, cfg), d, cfg);
        for (long long abs_s = 0; abs_s <= bound; ++abs_s) {
            for (long long s : {abs_s, -abs_s}) {
                if (shift(anchor, m * s, cfg) == a)
                    return ARLabel{ARLabel::Kind::Transjective, i, s, d};
                if (abs_s == 0) break;
            }
        }
    }
    std::ostringstream os;
    os << "no transjective decomposition of " << a << " within tau^" << bound;
    throw std::runtime_error(os.str());
}

// ---------------------------------------------------------------------------
// Windowed AR quiver.  Vertices are the m-diagonals with
//   spanning:    u in [0, mp), |v - u| <= m*W   (canonical representatives)
//   peripheral:  quasi-length j in [1, L]
// Move edges and tau edges are kept only when both ends lie inside the
// window.  Components are taken over move edges; a component is "core"
// when it reaches the inner half of the window (|v - u| <= m*ceil(W/2),
// j <= ceil(L/2)), which filters out fragments an enlarged window would
// reattach.  Core components are named S^d / Tp^d / Tq^d by the common
// kind and level of their vertices.

struct ARQuiver {
    AnnulusConfig cfg;
    long long window_w = 0, window_l = 0;

    struct Vertex {
        Diagonal diag;
        std::optional<ARLabel> label;
        int component = -1;
    };
    std::vector<Vertex> vertices;
    std::vector<std::pair<int, int>> moves;      // directed: from -> to
    std::vector<std::pair<int, int>> tau_edges;  // a -> tau(a)
    int component_count = 0;                     // over move edges
    int core_component_count = 0;
    std::map<int, std::string> component_names;  // core components only

    int index_of(const Diagonal& d) const {
        auto it = index_.find(d);
        return it == index_.end() ? -1 : it->second;
    }

    std::map<Diagonal, int> index_;
};

namespace detail {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
        for (int i = 0; i < n; ++i) parent[static_cast<std::size_t>(i)] = i;
    }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

}  // namespace detail

inline ARQuiver build_ar_quiver(const AnnulusConfig& cfg, long long W, long long L) {
    if (W < 1 || L < 1) throw std::invalid_argument("window bounds must be positive");
    const long long m = cfg.m;
    ARQuiver ar;
    ar.cfg = cfg;
    ar.window_w = W;
    ar.window_l = L;

    std::set<Diagonal> pool;
    for (long long u = 0; u < m * cfg.p; ++u)
        for (long long v = u - m * W; v <= u + m * W; ++v)
            if (detail::pmod(u + v, m) == 0) pool.insert(Diagonal::spanning(u, v, cfg));
    for (long long x = 0; x < m * cfg.p; ++x)
        for (long long j = 1; j <= L; ++j)
            pool.insert(Diagonal::outer_peripheral(x, j * m + 2, cfg));
    for (long long x = 0; x < m * cfg.q; ++x)
        for (long long j = 1; j <= L; ++j)
            pool.insert(Diagonal::inner_peripheral(x, j * m + 2, cfg));

    for (const auto& d : pool) {
        ar.index_.emplace(d, static_cast<int>(ar.vertices.size()));
        ARQuiver::Vertex v;
        v.diag = d;
        try {
            v.label = functor_label(d, cfg, W);
        } catch (const std::runtime_error&) {
            v.label = std::nullopt;  // p == q: raw coordinates are the honest answer
        }
        ar.vertices.push_back(std::move(v));
    }

    detail::UnionFind uf(static_cast<int>(ar.vertices.size()));
    for (const auto& [d, idx] : ar.index_) {
        for (const auto& t : elementary_moves(d, cfg)) {
            int j = ar.index_of(t);
            if (j < 0) continue;
            ar.moves.emplace_back(idx, j);
            uf.unite(idx, j);
        }
        int tj = ar.index_of(shift(d, m, cfg));
        if (tj >= 0) ar.tau_edges.emplace_back(idx, tj);
    }

    std::map<int, int> roots;  // root -> component id in first-vertex order
    for (std::size_t v = 0; v < ar.vertices.size(); ++v) {
        int r = uf.find(static_cast<int>(v));
        auto [it, fresh] = roots.emplace(r, static_cast<int>(roots.size()));
        ar.vertices[v].component = it->second;
        (void)fresh;
    }
    ar.component_count = static_cast<int>(roots.size());

    const long long half_w = (W + 1) / 2, half_l = (L + 1) / 2;
    std::set<int> core;
    for (const auto& v : ar.vertices) {
        const Diagonal& d = v.diag;
        bool inner_half = d.is_spanning() ? std::abs(d.b - d.a) <= m * half_w
                                          : (d.b - 2) / m <= half_l;
        if (inner_half) core.insert(v.component);
    }
    ar.core_component_count = static_cast<int>(core.size());

    for (const auto& v : ar.vertices) {
        if (!core.count(v.component)) continue;
        std::ostringstream name;
        switch (v.diag.kind) {
            case DiagKind::Spanning: name << "S^"; break;
            case DiagKind::OuterPeripheral: name << "Tp^"; break;
            case DiagKind::InnerPeripheral: name << "Tq^"; break;
        }
        name << level(v.diag, cfg);
        auto [it, fresh] = ar.component_names.emplace(v.component, name.str());
        if (!fresh && it->second != name.str())
            throw std::logic_error("move edge joins diagonals of different kind or level");
    }
    return ar;
}

inline std::string ar_vertex_text(const ARQuiver& ar, int idx) {
    const auto& v = ar.vertices[static_cast<std::size_t>(idx)];
    if (v.label) return label_string(*v.label);
    std::ostringstream os;
    os << "S^" << level(v.diag, ar.cfg) << ":" << v.diag;
    return os.str();
}

inline std::string ar_dot(const ARQuiver& ar) {
    std::ostringstream os;
    os << "digraph ar {\n  rankdir=LR;\n  node [shape=box];\n";
    for (std::size_t i = 0; i < ar.vertices.size(); ++i)
        os << "  v" << i << " [label=\"" << ar_vertex_text(ar, static_cast<int>(i)) << "\"];\n";
    for (const auto& [a, b] : ar.moves) os << "  v" << a << " -> v" << b << ";\n";
    for (const auto& [a, b] : ar.tau_edges)
        os << "  v" << a << " -> v" << b << " [style=dashed, constraint=false];\n";
    os << "}\n";
    return os.str();
}

}  // namespace annulus
