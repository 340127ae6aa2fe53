#pragma once

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "annulus/diagonal.hpp"
#include "annulus/errors.hpp"
#include "annulus/faces.hpp"

namespace annulus {

// An m-coloured quiver on vertices 0..n-1.  Arrows carry a colour in
// {0,...,m} and a multiplicity.  A well-formed quiver has no loops, all
// arrows between an ordered pair sharing one colour, and r arrows i -> j
// of colour c matched by r arrows j -> i of colour m-c; the intermediate
// states inside mutation step 1/2 may break the single-colour rule, so
// the representation keeps a full colour -> multiplicity map per pair.
class ColouredQuiver {
public:
    struct Arrow {
        int from = 0, to = 0, colour = 0;
        long long mult = 0;
        auto operator<=>(const Arrow&) const = default;
    };

    ColouredQuiver(int n, int m) : n_(n), m_(m) {
        if (n < 1 || m < 1) throw std::invalid_argument("quiver needs n >= 1 and m >= 1");
    }

    int size() const { return n_; }
    int max_colour() const { return m_; }

    void add_arrows(int i, int j, int colour, long long mult) {
        if (mult == 0) return;
        if (i == j) throw std::invalid_argument("loop arrow");
        if (i < 0 || i >= n_ || j < 0 || j >= n_) throw std::invalid_argument("vertex out of range");
        if (colour < 0 || colour > m_) throw std::invalid_argument("colour out of range");
        auto& cell = arr_[{i, j}];
        auto it = cell.find(colour);
        long long next = (it == cell.end() ? 0 : it->second) + mult;
        if (next < 0) throw std::invalid_argument("negative multiplicity");
        if (next == 0) {
            if (it != cell.end()) cell.erase(it);
            if (cell.empty()) arr_.erase({i, j});
        } else {
            cell[colour] = next;
        }
    }

    long long multiplicity(int i, int j, int colour) const {
        auto it = arr_.find({i, j});
        if (it == arr_.end()) return 0;
        auto jt = it->second.find(colour);
        return jt == it->second.end() ? 0 : jt->second;
    }

    // All arrows, sorted by (from, to, colour).
    std::vector<Arrow> arrows() const {
        std::vector<Arrow> out;
        for (const auto& [key, cell] : arr_)
            for (const auto& [c, r] : cell) out.push_back({key.first, key.second, c, r});
        return out;
    }

    bool operator==(const ColouredQuiver& o) const {
        return n_ == o.n_ && m_ == o.m_ && arr_ == o.arr_;
    }

    // Collapses mixed-colour pairs: cancel equal numbers of arrows of each
    // colour until at most one colour remains (mutation step 2).
    void reduce() {
        for (auto it = arr_.begin(); it != arr_.end();) {
            auto& cell = it->second;
            if (cell.size() > 2)
                throw std::logic_error("more than two colours between one vertex pair");
            if (cell.size() == 2) {
                auto first = cell.begin(), second = std::next(first);
                long long k = std::min(first->second, second->second);
                first->second -= k;
                second->second -= k;
                if (first->second == 0) cell.erase(first);
                if (second->second == 0) cell.erase(second->first);
            }
            if (cell.empty())
                it = arr_.erase(it);
            else
                ++it;
        }
    }

private:
    int n_, m_;
    std::map<std::pair<int, int>, std::map<int, long long>> arr_;
};

// Well-formedness of a (post-mutation / freshly built) coloured quiver;
// throws naming the violated condition.
inline void check_quiver(const ColouredQuiver& q) {
    const int m = q.max_colour();
    auto as = q.arrows();
    for (std::size_t i = 1; i < as.size(); ++i)
        if (as[i].from == as[i - 1].from && as[i].to == as[i - 1].to) {
            std::ostringstream os;
            os << "arrows " << as[i].from << " -> " << as[i].to << " in two colours ("
               << as[i - 1].colour << ", " << as[i].colour << ")";
            throw ValidationError(os.str());
        }
    for (const auto& a : as)
        if (q.multiplicity(a.to, a.from, m - a.colour) != a.mult) {
            std::ostringstream os;
            os << "arrow " << a.from << " -> " << a.to << " (" << a.colour << ") x" << a.mult
               << " lacks its colour-" << m - a.colour << " opposite";
            throw ValidationError(os.str());
        }
}

inline bool quiver_ok(const ColouredQuiver& q) {
    try {
        check_quiver(q);
        return true;
    } catch (const ValidationError&) {
        return false;
    }
}

// Quiver of a face map: vertices are the diagonal slots; for each face and
// each ordered pair of its diagonal sides, an arrow whose colour counts
// the sides of that face lying strictly between them, counterclockwise
// from the source.
inline ColouredQuiver quiver_of(const FaceMap& fm) {
    int n = 0;
    for (const auto& f : fm.faces())
        for (const auto& s : f.sides)
            if (s.slot >= 0) n = std::max(n, s.slot + 1);
    ColouredQuiver q(n, fm.config().m);
    for (const auto& f : fm.faces()) {
        const int k = static_cast<int>(f.sides.size());
        std::vector<std::pair<int, int>> spots;  // (position in face, slot)
        for (int pos = 0; pos < k; ++pos) {
            const auto& s = f.sides[static_cast<std::size_t>(pos)];
            if (s.kind == FaceSide::Kind::Chord || s.kind == FaceSide::Kind::Cut)
                spots.emplace_back(pos, s.slot);
        }
        for (const auto& [pi, si] : spots)
            for (const auto& [pj, sj] : spots) {
                if (pi == pj) continue;
                q.add_arrows(si, sj, static_cast<int>(detail::pmod(pj - pi - 1, k)), 1);
            }
    }
    return q;
}

// Coloured quiver mutation at vertex j (all three steps; compositions are
// taken in the unmutated quiver).
inline ColouredQuiver mutate(const ColouredQuiver& q, int j) {
    const int m = q.max_colour();
    if (j < 0 || j >= q.size()) throw std::invalid_argument("mutation vertex out of range");
    ColouredQuiver r = q;
    auto as = q.arrows();
    for (const auto& in : as) {
        if (in.to != j) continue;
        for (const auto& out : as) {
            if (out.from != j || out.colour != 0 || out.to == in.from) continue;
            r.add_arrows(in.from, out.to, in.colour, in.mult * out.mult);
            r.add_arrows(out.to, in.from, m - in.colour, in.mult * out.mult);
        }
    }
    r.reduce();
    ColouredQuiver s(q.size(), m);
    for (const auto& a : r.arrows()) {
        int c = a.colour;
        if (a.to == j) c = static_cast<int>(detail::pmod(c + 1, m + 1));
        if (a.from == j) c = static_cast<int>(detail::pmod(c - 1, m + 1));
        s.add_arrows(a.from, a.to, c, a.mult);
    }
    return s;
}

// Opposite quiver: direction reversed, colours kept.
inline ColouredQuiver reverse_arrows(const ColouredQuiver& q) {
    ColouredQuiver r(q.size(), q.max_colour());
    for (const auto& a : q.arrows()) r.add_arrows(a.to, a.from, a.colour, a.mult);
    return r;
}

inline ColouredQuiver delete_vertex(const ColouredQuiver& q, int v) {
    if (q.size() < 2) throw std::invalid_argument("cannot delete the last vertex");
    if (v < 0 || v >= q.size()) throw std::invalid_argument("vertex out of range");
    ColouredQuiver r(q.size() - 1, q.max_colour());
    for (const auto& a : q.arrows()) {
        if (a.from == v || a.to == v) continue;
        r.add_arrows(a.from > v ? a.from - 1 : a.from, a.to > v ? a.to - 1 : a.to, a.colour,
                     a.mult);
    }
    return r;
}

inline bool is_connected(const ColouredQuiver& q) {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(q.size()));
    for (const auto& a : q.arrows()) {
        adj[static_cast<std::size_t>(a.from)].push_back(a.to);
        adj[static_cast<std::size_t>(a.to)].push_back(a.from);
    }
    std::vector<char> seen(static_cast<std::size_t>(q.size()), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[static_cast<std::size_t>(v)])
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                stack.push_back(w);
            }
    }
    return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

namespace detail {

// Lex-least adjacency encoding over all vertex relabelings, restricted to
// permutations matching local signatures.  The encoding appends, when new
// position k is filled, the colour-multiplicity profiles of the pairs
// (0,k),(k,0),(1,k),(k,1),...,(k-1,k),(k,k-1), which makes prefixes
// comparable during backtracking.
class QuiverCanonicalizer {
public:
    explicit QuiverCanonicalizer(const ColouredQuiver& q) : q_(q), n_(q.size()), w_(q.max_colour() + 1) {}

    std::vector<long long> run() {
        std::vector<std::string> sig(static_cast<std::size_t>(n_));
        for (int v = 0; v < n_; ++v) {
            std::vector<std::string> parts;
            for (const auto& a : q_.arrows()) {
                std::ostringstream os;
                if (a.from == v)
                    os << "o" << a.colour << "x" << a.mult;
                else if (a.to == v)
                    os << "i" << a.colour << "x" << a.mult;
                else
                    continue;
                parts.push_back(os.str());
            }
            std::sort(parts.begin(), parts.end());
            std::string s;
            for (auto& p : parts) s += p + ";";
            sig[static_cast<std::size_t>(v)] = s;
        }
        // New positions are grouped by signature, groups ordered by their
        // signature string so the grouping itself is label-independent.
        std::map<std::string, std::vector<int>> groups;
        for (int v = 0; v < n_; ++v) groups[sig[static_cast<std::size_t>(v)]].push_back(v);
        slot_group_.clear();
        pool_.clear();
        for (auto& [s, vs] : groups) {
            for (std::size_t i = 0; i < vs.size(); ++i)
                slot_group_.push_back(static_cast<int>(pool_.size()));
            pool_.push_back(vs);
        }
        assign_.assign(static_cast<std::size_t>(n_), -1);
        used_.assign(static_cast<std::size_t>(n_), 0);
        best_.clear();
        current_.clear();
        extend(0);
        return best_;
    }

private:
    void profile(int i, int j, std::vector<long long>& out) const {
        for (int c = 0; c < w_; ++c) out.push_back(q_.multiplicity(i, j, c));
    }

    void extend(int k) {
        if (k == n_) {
            if (best_.empty() || current_ < best_) best_ = current_;
            return;
        }
        for (int v : pool_[static_cast<std::size_t>(slot_group_[static_cast<std::size_t>(k)])]) {
            if (used_[static_cast<std::size_t>(v)]) continue;
            std::size_t mark = current_.size();
            assign_[static_cast<std::size_t>(k)] = v;
            for (int t = 0; t < k; ++t) {
                profile(assign_[static_cast<std::size_t>(t)], v, current_);
                profile(v, assign_[static_cast<std::size_t>(t)], current_);
            }
            // prune only when the prefix already exceeds the best full code
            bool viable = best_.empty() ||
                          !std::lexicographical_compare(best_.begin(),
                                                        best_.begin() + static_cast<long>(current_.size()),
                                                        current_.begin(), current_.end());
            if (viable) {
                used_[static_cast<std::size_t>(v)] = 1;
                extend(k + 1);
                used_[static_cast<std::size_t>(v)] = 0;
            }
            current_.resize(mark);
        }
    }

    const ColouredQuiver& q_;
    int n_, w_;
    std::vector<int> slot_group_;
    std::vector<std::vector<int>> pool_;
    std::vector<int> assign_;
    std::vector<char> used_;
    std::vector<long long> best_, current_;
};

}  // namespace detail

// Canonical key: equal exactly for isomorphic quivers (same n, m, and an
// arrow-preserving vertex bijection).
inline std::string quiver_canonical_key(const ColouredQuiver& q) {
    auto code = detail::QuiverCanonicalizer(q).run();
    std::ostringstream os;
    os << q.size() << "|" << q.max_colour() << "|";
    for (long long x : code) os << x << ",";
    return os.str();
}

inline bool is_isomorphic(const ColouredQuiver& a, const ColouredQuiver& b) {
    if (a.size() != b.size() || a.max_colour() != b.max_colour()) return false;
    return quiver_canonical_key(a) == quiver_canonical_key(b);
}

}  // namespace annulus
