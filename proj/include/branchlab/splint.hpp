#pragma once

#include "branchlab/rootsys.hpp"
#include "branchlab/weight.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace branchlab {

enum class SplintType { I, II, IIStar, III };

std::string to_string(SplintType t);

/// An injective splint  Delta = Delta_a (disjoint) phi(Delta_s0).
///
/// stem_a is a regular subsystem (the first stem); the second stem is the
/// complement Delta_s = Delta \ Delta_a, presented as the image of the
/// abstract root system `coimage` under the additive map phi. phi is stored
/// by the images of the coimage simple roots and extended linearly.
struct SplintDescriptor {
    RootSystem parent;
    EmbeddedSubsystem stem_a;
    std::vector<Weight> stem_s_image;  // all roots of Delta_s, positive ones first
    RootSystem coimage;
    std::vector<Weight> phi_simple;    // phi(k-th coimage simple root)
    // label_map[k] = index of the parent simple root whose Dynkin label the
    // k-th coimage simple root inherits. Empty if unknown.
    std::vector<std::size_t> label_map;
    SplintType type = SplintType::I;
    bool a_metric = true;
    bool s_metric = true;

    // phi on the coimage root lattice. Throws DomainError off the lattice.
    Weight phi(const Weight& coimage_vector) const;
    // (coimage positive root, image) in the coimage's canonical root order.
    std::vector<std::pair<Weight, Weight>> phi_pairs() const;
    std::vector<Weight> stem_s_positive() const;
};

struct CatalogRow {
    std::string parent;
    std::string sub;
    SplintType type;
};

// Rows of the injective splint table with parent rank <= max_rank, including
// the starred C_r row.
std::vector<CatalogRow> catalog_rows(int max_rank);

// Accepts aliases "D2" (= A1+A1), "D3" (= A3), "u(1)" for "u1".
// Throws NotASplint for pairs that are not catalog rows.
SplintDescriptor splint_catalog(std::string_view parent_label, std::string_view sub_label);

// Exhaustive search for an additive bijection from an abstract root system
// of rank <= rank(parent) onto Delta \ Delta_a. Returns nullopt if none exists.
std::optional<SplintDescriptor> detect_injective_splint(const RootSystem& parent, const EmbeddedSubsystem& sub);

// Throws InvariantViolation unless the descriptor is a genuine splint:
// disjoint union, phi additive and bijective on positive roots, rank bound.
void validate_descriptor(const SplintDescriptor& sd);

/// beta = alpha + beta_prime with alpha in S_c (parent simple roots of the
/// first stem) and beta_prime a simple root of Delta_s or a phi-image of a
/// coimage simple root.
struct PairingWitness {
    std::size_t coimage_index;
    Weight beta;
    Weight alpha;
    std::size_t alpha_index;  // index among the parent simple roots
    Weight beta_prime;
};

// One witness per phi-image of a coimage simple root that is not itself a
// parent simple root. Throws InvariantViolation when some image has none.
std::vector<PairingWitness> stem_pairing_witnesses(const SplintDescriptor& sd);

// Dynkin label correspondence implied by the witnesses: a simple root of the
// parent keeps its own index, any other image inherits the index of alpha.
std::vector<std::size_t> witness_label_map(const SplintDescriptor& sd);

// True iff rho - phi(rho_s0 - w rho_s0) lies in the closed a-chamber for every
// w in the Weyl group of the coimage.
bool chamber_condition(const SplintDescriptor& sd);

} // namespace branchlab
