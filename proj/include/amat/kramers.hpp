#pragma once

#include <vector>

#include "amat/embedding.hpp"
#include "amat/principal_vectors.hpp"

namespace amat {

/// One Kramers doublet of complex principal vectors: second = T(first),
/// both principal vectors of the embedded pair at the same angle.
struct KramersEntry {
    double angle = 0.0;
    MatC first;
    MatC second;
};

/// Principal-vector doublets of a quaternionic pair viewed in C^{2n}.
/// Every quaternionic principal angle shows up twice in the complex list.
struct KramersPairs {
    std::vector<KramersEntry> entries;

    std::vector<double> complex_angles() const {
        std::vector<double> a;
        a.reserve(2 * entries.size());
        for (const auto& e : entries) {
            a.push_back(e.angle);
            a.push_back(e.angle);
        }
        std::sort(a.begin(), a.end());
        return a;
    }
};

/// Kramers structure of the principal vectors of a quaternionic pair:
/// each quaternionic principal vector v embeds to a complex column c and
/// (c, T c) are principal vectors of (chi(P), chi(Q)) sharing the angle.
inline KramersPairs kramers_principal_pairs(const Projection<Quat>& p,
                                            const Projection<Quat>& q) {
    const auto pairs = principal_vectors_svd(p, q);
    KramersPairs out;
    out.entries.reserve(pairs.size());
    for (const auto& pr : pairs) {
        KramersEntry e;
        e.angle = pr.angle;
        e.first = embed_column(pr.v);
        e.second = apply_antiunitary_T(e.first);
        out.entries.push_back(std::move(e));
    }
    return out;
}

}  // namespace amat
