#pragma once

#include "branchlab/fan.hpp"
#include "branchlab/rootsys.hpp"
#include "branchlab/splint.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace branchlab {

/// Highest weight of the auxiliary module of the coimage: same Dynkin labels
/// as mu, distributed over the coimage simple roots by the descriptor's
/// label map.
struct TildeModule {
    RootSystem coimage;
    Weight highest_weight;
    std::vector<long long> dynkin;
};

// Throws UnsupportedSplint for ii* descriptors, a failed chamber condition or
// an unknown label correspondence.
TildeModule tilde_highest_weight(const Weight& mu, const SplintDescriptor& sd);

// b_nu for nu = mu - phi(mu~ - nu~) equals the multiplicity of nu~ in L_s^{mu~}.
BranchingResult splint_branching(const Weight& mu, const SplintDescriptor& sd);

// Independent reference: peel a-characters off ch(L^mu), highest weight first,
// separately in each u(1) charge sector.
BranchingResult oracle_branching(const RootSystem& parent, const Weight& mu, const EmbeddedSubsystem& sub);

struct MethodOutcome {
    Method method;
    bool ran = false;
    std::string error;   // set when the method refused or failed
    double millis = 0.0;
    std::optional<BranchingResult> result;
    bool dimension_ok = false;
};

struct DiffEntry {
    Weight weight;
    std::vector<long long> dynkin;
    std::vector<Rational> charges;
    std::map<Method, long long> coeffs;  // methods that produced a result
};

struct CompareReport {
    std::string case_name;     // e.g. "B2>A1+u1[3,2]"
    long long parent_dimension = 0;
    std::vector<MethodOutcome> outcomes;  // splint, fan, oracle
    bool agree = false;                   // every method that ran produced the same map
    std::vector<DiffEntry> table;  // every weight produced by some method, canonical order
    std::vector<DiffEntry> diff;   // the entries of table where methods differ
};

// Runs all three methods on the same input. The splint method is attempted
// only when a descriptor is supplied.
CompareReport compare_methods(const RootSystem& parent, const EmbeddedSubsystem& sub, const Weight& mu,
                              const std::optional<SplintDescriptor>& sd);

// Catalog lookup by labels; mu given by parent Dynkin labels.
CompareReport compare_methods(const std::vector<long long>& dynkin, const std::string& parent_label,
                              const std::string& sub_label);

std::string case_name(const std::string& parent, const std::string& sub, const std::vector<long long>& dynkin);

} // namespace branchlab
