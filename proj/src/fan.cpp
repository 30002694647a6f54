#include "branchlab/fan.hpp"
#include "branchlab/error.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

namespace branchlab {

std::string to_string(Method m) {
    switch (m) {
    case Method::Splint: return "splint";
    case Method::Fan: return "fan";
    case Method::Oracle: return "oracle";
    }
    return "?";
}

Fan compute_fan(const RootSystem& rs, const RootSystem& sub) {
    if (sub.ambient_dim() != rs.ambient_dim()) throw InvalidSubsystem("subsystem lives in a different space");
    std::vector<Weight> complement;
    for (const auto& a : sub.positive_roots())
        if (!rs.is_positive_root(a))
            throw InvalidSubsystem("subsystem root " + to_string(a) + " is not a positive root of " + rs.label());
    for (const auto& a : rs.positive_roots())
        if (!sub.is_root(a)) complement.push_back(a);

    const FormalSum product = product_expand(complement, rs.ambient_dim());
    Fan fan;
    for (const auto& [w, c] : product.terms()) fan.carrier.emplace(-w, -c);

    // Lowest carrier element: minimal height, ties broken lexicographically.
    fan.gamma0 = fan.carrier.begin()->first;
    for (const auto& [g, s] : fan.carrier) {
        const Rational hg = rs.height(g), h0 = rs.height(fan.gamma0);
        if (hg < h0 || (hg == h0 && g < fan.gamma0)) fan.gamma0 = g;
    }
    for (const auto& [g, s] : fan.carrier)
        if (g != fan.gamma0) fan.gamma_set.push_back(g - fan.gamma0);
    std::sort(fan.gamma_set.begin(), fan.gamma_set.end(), CanonicalOrder{&rs});
    std::reverse(fan.gamma_set.begin(), fan.gamma_set.end());

    // Re-verify the defining identity.
    FormalSum check;
    for (const auto& [g, s] : fan.carrier) check.add(-g, -s);
    if (!(check == product)) throw InvariantViolation("fan does not reproduce its defining product");
    for (const auto& g : fan.gamma_set)
        if (rs.height(g) <= 0) throw InvariantViolation("fan element below gamma0: " + to_string(g));
    return fan;
}

std::map<Weight, long long> BranchingResult::coefficients() const {
    std::map<Weight, long long> out;
    for (const auto& row : rows) out.emplace(row.weight, row.coeff);
    return out;
}

long long BranchingResult::coefficient(const Weight& nu) const {
    for (const auto& row : rows)
        if (row.weight == nu) return row.coeff;
    return 0;
}

BranchingResult make_branching_result(const RootSystem& parent, const EmbeddedSubsystem& sub, const Weight& mu,
                                      Method method, const std::map<Weight, long long>& coefficients) {
    BranchingResult out;
    out.parent_label = parent.label();
    for (const auto& l : parent.dynkin_labels(mu)) out.parent_dynkin.push_back(l.numerator());
    out.sub_label = sub.label;
    out.parent_weight = mu;
    out.method = method;

    std::vector<Weight> order;
    for (const auto& [nu, c] : coefficients) {
        if (c < 0) throw InvariantViolation("negative branching coefficient at " + to_string(nu));
        if (c > 0) order.push_back(nu);
    }
    std::sort(order.begin(), order.end(), CanonicalOrder{&parent});
    for (const auto& nu : order) {
        BranchingRow row;
        row.weight = nu;
        for (const auto& l : sub.roots.dynkin_labels(nu)) {
            if (!is_integer(l)) throw InvariantViolation("non-integral a-weight " + to_string(nu));
            row.dynkin.push_back(l.numerator());
        }
        row.charges = sub.charges(nu);
        row.coeff = coefficients.at(nu);
        out.rows.push_back(std::move(row));
    }
    return out;
}

long long branching_dimension(const BranchingResult& result, const EmbeddedSubsystem& sub) {
    long long total = 0;
    for (const auto& row : result.rows) total += row.coeff * weyl_dimension(sub.roots, row.weight);
    return total;
}

FormalSum singular_branching_coefficients(const RootSystem& rs, const EmbeddedSubsystem& sub, const Weight& mu) {
    if (sub.total_rank() != rs.rank())
        throw UnsupportedCase("fan recurrence needs a rank-preserving injection (" + sub.label + " in " +
                              rs.label() + ")");
    const Fan fan = compute_fan(rs, sub.roots);
    const long long s0 = fan.carrier.at(fan.gamma0);
    std::vector<long long> s_gamma;
    for (const auto& g : fan.gamma_set) s_gamma.push_back(fan.carrier.at(g + fan.gamma0));

    const FormalSum psi = singular_element(rs, mu);

    // Pending weights in descending canonical order; every k_{xi + gamma} is
    // final before xi is reached because each gamma has positive height.
    struct Key {
        Rational height;
        Weight w;
        bool operator<(const Key& o) const {
            if (height != o.height) return height > o.height;
            return o.w < w;
        }
    };
    std::set<Key> pending;
    for (const auto& [w, c] : psi.terms()) {
        Weight xi = w + fan.gamma0;
        pending.insert({rs.height(xi), std::move(xi)});
    }

    std::unordered_map<Weight, long long, WeightHash> k;
    FormalSum out;
    while (!pending.empty()) {
        Key key = *pending.begin();
        pending.erase(pending.begin());
        const Weight& xi = key.w;
        long long acc = psi.coefficient(xi - fan.gamma0);
        for (std::size_t j = 0; j < fan.gamma_set.size(); ++j) {
            auto it = k.find(xi + fan.gamma_set[j]);
            if (it != k.end()) acc += s_gamma[j] * it->second;
        }
        if (acc == 0) continue;
        if (acc % s0 != 0) throw InvariantViolation("fan recurrence: non-integral coefficient at " + to_string(xi));
        const long long value = -acc / s0;
        k.emplace(xi, value);
        out.add(xi, value);
        for (const auto& g : fan.gamma_set) {
            Weight next = xi - g;
            Rational h = rs.height(next);
            pending.insert({std::move(h), std::move(next)});
        }
    }
    return out;
}

BranchingResult fan_branching(const RootSystem& rs, const EmbeddedSubsystem& sub, const Weight& mu) {
    const FormalSum k = singular_branching_coefficients(rs, sub, mu);
    std::map<Weight, long long> b;
    for (const auto& [xi, c] : k.terms()) {
        if (!sub.roots.is_dominant(xi)) continue;
        if (c < 0) throw InvariantViolation("negative singular coefficient in the a-chamber at " + to_string(xi));
        b.emplace(xi, c);
    }
    return make_branching_result(rs, sub, mu, Method::Fan, b);
}

} // namespace branchlab
