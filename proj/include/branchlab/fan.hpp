#pragma once

#include "branchlab/formal.hpp"
#include "branchlab/rootsys.hpp"
#include "branchlab/weight.hpp"

#include <map>
#include <string>
#include <vector>

namespace branchlab {

/// Injection fan of a -> g. The carrier holds s(gamma) from
///   prod_{a in D+ \ Da+} (1 - e^{-a}) = - sum_gamma s(gamma) e^{-gamma},
/// gamma0 is the lowest carrier element and gamma_set = {gamma - gamma0} \ {0}.
struct Fan {
    std::map<Weight, long long> carrier;
    Weight gamma0;
    std::vector<Weight> gamma_set;  // canonical order
};

Fan compute_fan(const RootSystem& rs, const RootSystem& sub);

enum class Method { Splint, Fan, Oracle };

std::string to_string(Method m);

struct BranchingRow {
    Weight weight;                 // a-highest weight in parent coordinates
    std::vector<long long> dynkin; // labels with respect to the simple roots of a
    std::vector<Rational> charges; // (weight, q) for each u(1) direction q
    long long coeff;
};

/// Branching coefficients b_nu of L^mu restricted to a, rows in canonical order
/// (parent height descending). Zero coefficients are omitted.
struct BranchingResult {
    std::string parent_label;
    std::vector<long long> parent_dynkin;
    std::string sub_label;
    Weight parent_weight;
    Method method;
    std::vector<BranchingRow> rows;

    std::map<Weight, long long> coefficients() const;
    long long coefficient(const Weight& nu) const;
};

BranchingResult make_branching_result(const RootSystem& parent, const EmbeddedSubsystem& sub, const Weight& mu,
                                      Method method, const std::map<Weight, long long>& coefficients);

// sum_nu b_nu dim L_a^nu; u(1) factors contribute dimension one.
long long branching_dimension(const BranchingResult& result, const EmbeddedSubsystem& sub);

// Singular branching coefficients k_xi on the whole weight lattice, i.e. the
// expansion  Psi^(mu) / prod_{a in D+ \ Da+}(1 - e^{-a}) = sum_xi k_xi e^xi,
// computed by the fan recurrence in descending canonical order.
FormalSum singular_branching_coefficients(const RootSystem& rs, const EmbeddedSubsystem& sub, const Weight& mu);

// Restriction of the singular branching coefficients to the closed a-chamber.
BranchingResult fan_branching(const RootSystem& rs, const EmbeddedSubsystem& sub, const Weight& mu);

} // namespace branchlab
