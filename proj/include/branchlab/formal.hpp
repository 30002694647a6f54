#pragma once

#include "branchlab/rootsys.hpp"
#include "branchlab/weight.hpp"

#include <cstddef>
#include <map>
#include <span>
#include <utility>
#include <vector>

namespace branchlab {

/// Element of the formal algebra: a finite sum  sum_w c_w e^w  with integer
/// coefficients. Zero coefficients are never stored.
class FormalSum {
public:
    using Terms = std::map<Weight, long long>;

    FormalSum() = default;
    static FormalSum monomial(const Weight& w, long long coeff = 1);

    void add(const Weight& w, long long coeff);
    long long coefficient(const Weight& w) const;
    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool empty() const { return terms_.empty(); }
    // sum of all coefficients (the dimension, for a character)
    long long total() const;

    // e^shift * this
    FormalSum shifted(const Weight& shift) const;

    FormalSum& operator+=(const FormalSum& other);
    FormalSum& operator-=(const FormalSum& other);
    FormalSum& operator*=(long long factor);
    friend FormalSum operator+(FormalSum a, const FormalSum& b) { return a += b; }
    friend FormalSum operator-(FormalSum a, const FormalSum& b) { return a -= b; }
    friend FormalSum operator*(const FormalSum& a, const FormalSum& b);
    friend bool operator==(const FormalSum& a, const FormalSum& b) { return a.terms_ == b.terms_; }

private:
    Terms terms_;
};

// Canonical order: height (in simple roots of rs) descending, ties broken by
// lexicographically descending coordinates. Highest weight comes first.
struct CanonicalOrder {
    const RootSystem* rs;
    bool operator()(const Weight& a, const Weight& b) const;
};

std::vector<std::pair<Weight, long long>> canonical_terms(const FormalSum& f, const RootSystem& rs);

// Psi^(mu) = sum_{w in W} eps(w) e^{w(mu + rho) - rho}
FormalSum singular_element(const RootSystem& rs, const Weight& mu);

// Phi^(mu) = Psi^(mu) e^rho
FormalSum unshifted_singular_element(const RootSystem& rs, const Weight& mu);

// prod_{a in roots} (1 - e^{-a}); the empty product is e^0 in dimension `dim`.
FormalSum product_expand(std::span<const Weight> roots, std::size_t dim);

// Weight multiplicities of the dominant weights of L^mu by Freudenthal's
// recursion, keyed by dominant weight.
std::map<Weight, long long> dominant_multiplicities(const RootSystem& rs, const Weight& mu);

// Full weight diagram of L^mu (Freudenthal, fanned out over W-orbits).
FormalSum freudenthal_character(const RootSystem& rs, const Weight& mu);

// ch(L^mu) recovered as the exact quotient Psi^(mu) / prod_{a>0}(1 - e^{-a}).
FormalSum character_via_weyl(const RootSystem& rs, const Weight& mu);

} // namespace branchlab
