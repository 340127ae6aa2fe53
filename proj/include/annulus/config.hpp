#pragma once

#include <stdexcept>
#include <string>

namespace annulus {

// Parameters of the annulus P_{p,q,m}: an outer boundary carrying m*p marked
// points O_0..O_{mp-1} and an inner boundary carrying m*q marked points
// I_0..I_{mq-1}.  Both label systems advance in the same rotational
// direction, so lift coordinates of the two boundaries increase together.
struct AnnulusConfig {
    int p = 2;
    int q = 2;
    int m = 1;

    AnnulusConfig() = default;
    AnnulusConfig(int p_, int q_, int m_) : p(p_), q(q_), m(m_) {
        if (p < 2 || q < 2 || m < 1)
            throw std::invalid_argument("AnnulusConfig requires p >= 2, q >= 2, m >= 1 (got p=" +
                                        std::to_string(p_) + " q=" + std::to_string(q_) +
                                        " m=" + std::to_string(m_) + ")");
    }

    // Marked-point counts on the two boundaries.
    long long outer_count() const { return static_cast<long long>(m) * p; }
    long long inner_count() const { return static_cast<long long>(m) * q; }

    int vertex_count() const { return p + q; }  // diagonals in any (m+2)-angulation

    bool operator==(const AnnulusConfig&) const = default;

    // The flipped annulus: outer and inner boundaries exchange roles.
    AnnulusConfig flipped() const { return AnnulusConfig(q, p, m); }
};

}  // namespace annulus
