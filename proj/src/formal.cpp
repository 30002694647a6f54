#include "branchlab/formal.hpp"
#include "branchlab/error.hpp"
#include "branchlab/weyl.hpp"

#include <algorithm>
#include <unordered_map>

namespace branchlab {

namespace {

void require_dominant_integral(const RootSystem& rs, const Weight& mu, const char* what) {
    if (mu.dim() != rs.ambient_dim())
        throw DomainError(std::string(what) + ": weight has wrong dimension");
    if (!rs.is_integral(mu) || !rs.is_dominant(mu))
        throw DomainError(std::string(what) + ": " + to_string(mu) + " is not dominant integral for " +
                          rs.label());
}

} // namespace

FormalSum FormalSum::monomial(const Weight& w, long long coeff) {
    FormalSum f;
    f.add(w, coeff);
    return f;
}

void FormalSum::add(const Weight& w, long long coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(w, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

long long FormalSum::coefficient(const Weight& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? 0 : it->second;
}

long long FormalSum::total() const {
    long long s = 0;
    for (const auto& [w, c] : terms_) s += c;
    return s;
}

FormalSum FormalSum::shifted(const Weight& shift) const {
    FormalSum out;
    for (const auto& [w, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), w + shift, c);
    return out;
}

FormalSum& FormalSum::operator+=(const FormalSum& other) {
    for (const auto& [w, c] : other.terms_) add(w, c);
    return *this;
}

FormalSum& FormalSum::operator-=(const FormalSum& other) {
    for (const auto& [w, c] : other.terms_) add(w, -c);
    return *this;
}

FormalSum& FormalSum::operator*=(long long factor) {
    if (factor == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, c] : terms_) c *= factor;
    return *this;
}

FormalSum operator*(const FormalSum& a, const FormalSum& b) {
    FormalSum out;
    for (const auto& [wa, ca] : a.terms_)
        for (const auto& [wb, cb] : b.terms_) out.add(wa + wb, ca * cb);
    return out;
}

bool CanonicalOrder::operator()(const Weight& a, const Weight& b) const {
    const Rational ha = rs->height(a), hb = rs->height(b);
    if (ha != hb) return ha > hb;
    return b < a;
}

std::vector<std::pair<Weight, long long>> canonical_terms(const FormalSum& f, const RootSystem& rs) {
    std::vector<std::pair<Weight, long long>> out(f.terms().begin(), f.terms().end());
    CanonicalOrder order{&rs};
    std::sort(out.begin(), out.end(), [&order](const auto& a, const auto& b) { return order(a.first, b.first); });
    return out;
}

FormalSum singular_element(const RootSystem& rs, const Weight& mu) {
    return unshifted_singular_element(rs, mu).shifted(-rs.rho());
}

FormalSum unshifted_singular_element(const RootSystem& rs, const Weight& mu) {
    require_dominant_integral(rs, mu, "singular element");
    FormalSum out;
    for (const auto& sw : signed_orbit(mu + rs.rho(), rs)) out.add(sw.weight, sw.sign);
    return out;
}

FormalSum product_expand(std::span<const Weight> roots, std::size_t dim) {
    FormalSum out = FormalSum::monomial(Weight(dim));
    for (const auto& a : roots) {
        FormalSum factor = FormalSum::monomial(Weight(dim));
        factor.add(-a, -1);
        out = out * factor;
    }
    return out;
}

std::map<Weight, long long> dominant_multiplicities(const RootSystem& rs, const Weight& mu) {
    require_dominant_integral(rs, mu, "Freudenthal");

    // Dominant weights below mu: closed under subtracting positive roots while
    // staying dominant (covering relations of the dominance order).
    std::vector<Weight> dominant{mu};
    std::unordered_map<Weight, long long, WeightHash> mult{{mu, 0}};
    for (std::size_t head = 0; head < dominant.size(); ++head) {
        for (const auto& a : rs.positive_roots()) {
            Weight nu = dominant[head] - a;
            if (!rs.is_dominant(nu)) continue;
            if (mult.emplace(nu, 0).second) dominant.push_back(std::move(nu));
        }
    }
    CanonicalOrder order{&rs};
    std::sort(dominant.begin(), dominant.end(), order);

    const Weight top = mu + rs.rho();
    const Rational top_norm = dot(top, top);
    mult[mu] = 1;
    for (std::size_t idx = 1; idx < dominant.size(); ++idx) {
        const Weight& nu = dominant[idx];
        Rational sum(0);
        for (const auto& a : rs.positive_roots()) {
            Weight x = nu + a;
            for (;;) {
                auto it = mult.find(to_dominant(x, rs).dominant);
                if (it == mult.end()) break;
                if (it->second != 0) sum += Rational(it->second) * dot(x, a);
                x += a;
            }
        }
        const Weight shifted = nu + rs.rho();
        const Rational denom = top_norm - dot(shifted, shifted);
        if (denom <= 0) throw InvariantViolation("Freudenthal denominator vanished at " + to_string(nu));
        const Rational m = Rational(2) * sum / denom;
        if (!is_integer(m) || m < 0)
            throw InvariantViolation("non-integral Freudenthal multiplicity at " + to_string(nu));
        mult[nu] = m.numerator();
    }

    std::map<Weight, long long> out;
    for (const auto& nu : dominant)
        if (mult[nu] != 0) out.emplace(nu, mult[nu]);
    return out;
}

FormalSum freudenthal_character(const RootSystem& rs, const Weight& mu) {
    FormalSum out;
    for (const auto& [nu, m] : dominant_multiplicities(rs, mu))
        for (const auto& x : orbit(nu, rs)) out.add(x, m);
    return out;
}

FormalSum character_via_weyl(const RootSystem& rs, const Weight& mu) {
    const FormalSum psi = singular_element(rs, mu);
    const FormalSum denominator = product_expand(rs.positive_roots(), rs.ambient_dim());
    // The denominator is 1 - (strictly lower terms), so long division from the
    // top is exact and unique.
    if (denominator.coefficient(Weight(rs.ambient_dim())) != 1)
        throw InvariantViolation("Weyl denominator does not start with 1");

    CanonicalOrder order{&rs};
    std::map<Weight, long long, CanonicalOrder> remainder(order);
    Rational lowest(0);
    bool first = true;
    for (const auto& [w, c] : psi.terms()) {
        remainder.emplace(w, c);
        Rational h = rs.height(w);
        if (first || h < lowest) lowest = h;
        first = false;
    }

    FormalSum quotient;
    while (!remainder.empty()) {
        const auto [lead, c] = *remainder.begin();
        if (rs.height(lead) < lowest)
            throw InvariantViolation("Weyl character division left a remainder at " + to_string(lead));
        quotient.add(lead, c);
        for (const auto& [d, dc] : denominator.terms()) {
            Weight w = lead + d;
            auto [it, inserted] = remainder.try_emplace(std::move(w), -c * dc);
            if (!inserted) {
                it->second -= c * dc;
                if (it->second == 0) remainder.erase(it);
            }
        }
    }
    return quotient;
}

} // namespace branchlab
