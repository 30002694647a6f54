#include "branchlab/weyl.hpp"
#include "branchlab/error.hpp"

#include <unordered_map>
#include <unordered_set>

namespace branchlab {

Weight reflect(const Weight& w, const Weight& alpha) {
    const Rational norm = dot(alpha, alpha);
    if (norm == 0) throw DomainError("reflection in a zero root");
    Weight out = w;
    out.add_scaled(Rational(-2) * dot(w, alpha) / norm, alpha);
    return out;
}

DominantForm to_dominant(const Weight& w, const RootSystem& rs) {
    const std::size_t r = rs.rank();
    const auto& cartan = rs.cartan_matrix();
    Weight x = w;
    auto labels = rs.dynkin_labels(w);
    int parity = 1;
    for (;;) {
        std::size_t i = 0;
        while (i < r && labels[i] >= 0) ++i;
        if (i == r) break;
        const Rational li = labels[i];
        x.add_scaled(-li, rs.simple_roots()[i]);
        for (std::size_t j = 0; j < r; ++j)
            if (cartan[i][j] != 0) labels[j] -= li * Rational(cartan[i][j]);
        parity = -parity;
    }
    bool regular = true;
    for (const auto& l : labels)
        if (l == 0) regular = false;
    return {std::move(x), regular ? parity : 0, regular};
}

std::vector<SignedWeight> signed_orbit(const Weight& w, const RootSystem& rs) {
    if (!rs.is_strictly_dominant(w))
        throw DomainError("signed orbit needs a strictly dominant weight, got " + to_string(w));
    std::vector<SignedWeight> out{{w, 1}};
    std::unordered_map<Weight, int, WeightHash> seen{{w, 1}};
    for (std::size_t head = 0; head < out.size(); ++head) {
        for (std::size_t i = 0; i < rs.rank(); ++i) {
            Weight y = out[head].weight;
            y.add_scaled(-rs.coroot_pairing(y, i), rs.simple_roots()[i]);
            const int sign = -out[head].sign;
            auto [it, inserted] = seen.emplace(y, sign);
            if (inserted) {
                out.push_back({std::move(y), sign});
            } else if (it->second != sign) {
                throw InvariantViolation("inconsistent orbit sign at " + to_string(y));
            }
        }
    }
    return out;
}

std::vector<Weight> orbit(const Weight& w, const RootSystem& rs) {
    std::vector<Weight> out{w};
    std::unordered_set<Weight, WeightHash> seen{w};
    for (std::size_t head = 0; head < out.size(); ++head) {
        for (std::size_t i = 0; i < rs.rank(); ++i) {
            const Rational l = rs.coroot_pairing(out[head], i);
            if (l == 0) continue;
            Weight y = out[head];
            y.add_scaled(-l, rs.simple_roots()[i]);
            if (seen.insert(y).second) out.push_back(std::move(y));
        }
    }
    return out;
}

} // namespace branchlab
