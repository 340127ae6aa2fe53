#pragma once

#include <deque>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "annulus/angulation.hpp"
#include "annulus/errors.hpp"
#include "annulus/mutation.hpp"
#include "annulus/quiver.hpp"
#include "annulus/symmetry.hpp"

namespace annulus {

inline constexpr std::size_t DEFAULT_CLASS_LIMIT = 1'000'000;

// One enumerated mutation class: canonical key plus a concrete witness.
template <typename Witness>
struct ClassDatabase {
    AnnulusConfig cfg{2, 2, 1};
    std::map<std::string, Witness> classes;  // canonical key -> witness

    bool contains(const std::string& key) const { return classes.count(key) != 0; }
    std::size_t size() const { return classes.size(); }
};

// BFS over angulation mutation classes from delta0.  Deduplication is by
// canonical_form; witnesses are stored in canonical coordinates, so lift
// values stay bounded no matter how long the walk gets.
inline ClassDatabase<Angulation> enumerate_angulation_classes(
    const AnnulusConfig& cfg, bool use_flip, std::size_t limit = DEFAULT_CLASS_LIMIT) {
    ClassDatabase<Angulation> db;
    db.cfg = cfg;
    Angulation start = canonical_form(delta0(cfg), use_flip);
    db.classes.emplace(canonical_key(start, use_flip), start);
    std::deque<Angulation> frontier{start};
    while (!frontier.empty()) {
        Angulation a = std::move(frontier.front());
        frontier.pop_front();
        for (int slot = 0; slot < static_cast<int>(a.diagonals.size()); ++slot) {
            Angulation next = canonical_form(mutate(a, slot), use_flip);
            std::string key = canonical_key(next, use_flip);
            if (db.classes.count(key)) continue;
            if (db.classes.size() >= limit) {
                std::ostringstream os;
                os << "angulation class count exceeded the bound " << limit;
                throw ResourceLimitError(os.str());
            }
            db.classes.emplace(std::move(key), next);
            frontier.push_back(std::move(next));
        }
    }
    return db;
}

// BFS over coloured quiver mutation classes from the quiver of delta0.
inline ClassDatabase<ColouredQuiver> enumerate_quiver_classes(
    const AnnulusConfig& cfg, std::size_t limit = DEFAULT_CLASS_LIMIT) {
    ClassDatabase<ColouredQuiver> db;
    db.cfg = cfg;
    ColouredQuiver start = quiver_of(faces(delta0(cfg)));
    db.classes.emplace(quiver_canonical_key(start), start);
    std::deque<ColouredQuiver> frontier{start};
    while (!frontier.empty()) {
        ColouredQuiver q = std::move(frontier.front());
        frontier.pop_front();
        for (int v = 0; v < q.size(); ++v) {
            ColouredQuiver next = mutate(q, v);
            std::string key = quiver_canonical_key(next);
            if (db.classes.count(key)) continue;
            if (db.classes.size() >= limit) {
                std::ostringstream os;
                os << "quiver class count exceeded the bound " << limit;
                throw ResourceLimitError(os.str());
            }
            db.classes.emplace(std::move(key), next);
            frontier.push_back(std::move(next));
        }
    }
    return db;
}

struct BijectionReport {
    bool ok = false;
    std::size_t angulation_classes = 0;
    std::size_t quiver_classes = 0;
    std::string failure;  // first failure, with witnesses
};

// Checks that Δ -> Q_Δ induces a bijection between the enumerated
// angulation classes (flip used exactly when p = q) and quiver classes:
// well-defined on classes (canonical quiver key invariant under sampled
// symmetries of each witness), injective, and surjective.
inline BijectionReport verify_bijection(const AnnulusConfig& cfg, std::mt19937_64& rng,
                                        std::size_t limit = DEFAULT_CLASS_LIMIT) {
    const bool use_flip = cfg.p == cfg.q;
    auto aside = enumerate_angulation_classes(cfg, use_flip, limit);
    auto qside = enumerate_quiver_classes(cfg, limit);
    BijectionReport rep;
    rep.angulation_classes = aside.size();
    rep.quiver_classes = qside.size();

    std::uniform_int_distribution<long long> spin(-3 * cfg.outer_count(), 3 * cfg.outer_count());
    std::map<std::string, std::string> image;  // quiver key -> angulation key
    for (const auto& [akey, wit] : aside.classes) {
        std::string qkey = quiver_canonical_key(quiver_of(faces(wit)));
        // well-definedness: the quiver key may not depend on the chosen
        // representative of the class
        for (int t = 0; t < 10; ++t) {
            Angulation moved = rotate_inner(rotate_outer(wit, spin(rng)), spin(rng));
            if (use_flip && (t & 1)) moved = flip_reflect(moved);
            std::string other = quiver_canonical_key(quiver_of(faces(moved)));
            if (other != qkey) {
                rep.failure = "quiver key varies across the orbit of witness " + akey;
                return rep;
            }
        }
        auto [it, fresh] = image.emplace(qkey, akey);
        if (!fresh) {
            rep.failure = "collision: angulation classes " + it->second + " and " + akey +
                          " share the quiver class " + qkey;
            return rep;
        }
        if (!qside.contains(qkey)) {
            rep.failure = "angulation class " + akey + " maps outside the quiver BFS (" + qkey + ")";
            return rep;
        }
    }
    if (image.size() != qside.size()) {
        for (const auto& [qkey, wit] : qside.classes)
            if (!image.count(qkey)) {
                rep.failure = "quiver class not hit by any angulation class: " + qkey;
                return rep;
            }
    }
    rep.ok = true;
    return rep;
}

namespace detail {

// Exact rational with small denominators; enough for the counting
// formulas, which only ever divide by 2, 4p and p+q.
struct Fraction {
    long long num = 0, den = 1;
    void reduce() {
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) num /= g, den /= g;
    }
    Fraction& operator+=(const Fraction& o) {
        num = num * o.den + o.num * den;
        den *= o.den;
        reduce();
        return *this;
    }
};

inline long long binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

inline long long totient(long long n) {
    long long result = n;
    for (long long f = 2; f * f <= n; ++f) {
        if (n % f) continue;
        while (n % f == 0) n /= f;
        result -= result / f;
    }
    if (n > 1) result -= result / n;
    return result;
}

}  // namespace detail

// Triangulation-class counts (m = 1), by the totient-weighted binomial
// sums; the divisor set is read as k | gcd(p,q) and the p = q denominator
// as 4p.  Exact arithmetic; a non-integer value means the interpretation
// is wrong for these inputs, and that is reported as an error rather than
// rounded away.
inline long long closed_form_count(int p, int q, bool with_flip) {
    if (p < 2 || q < 2) throw std::invalid_argument("need p, q >= 2");
    using detail::binomial;
    using detail::Fraction;
    using detail::totient;

    auto rotation_only = [&] {
        Fraction total;
        long long g = std::gcd(p, q);
        for (long long k = 1; k <= g; ++k) {
            if (g % k) continue;
            Fraction term{totient(k) * binomial(2 * p / k, p / k) * binomial(2 * q / k, q / k),
                          2LL * (p + q)};
            total += term;
        }
        return total;
    };

    Fraction result;
    if (!with_flip || p != q) {
        // the printed count is the same expression with or without the
        // flip when p != q (flipping lands in P_{q,p})
        result = rotation_only();
    } else {
        Fraction half_necklace;
        for (long long k = 1; k <= p; ++k) {
            if (p % k) continue;
            long long b = binomial(2 * p / k, p / k);
            half_necklace += Fraction{totient(k) * b * b, 8LL * p};
        }
        result = half_necklace;
        result += Fraction{binomial(2 * p, p), 4};
    }
    result.reduce();
    if (result.den != 1) {
        std::ostringstream os;
        os << "count formula for p=" << p << " q=" << q << (with_flip ? " (flip)" : "")
           << " is not an integer: " << result.num << "/" << result.den;
        throw std::logic_error(os.str());
    }
    return result.num;
}

}  // namespace annulus
