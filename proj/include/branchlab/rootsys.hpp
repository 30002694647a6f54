#pragma once

#include "branchlab/rational.hpp"
#include "branchlab/weight.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace branchlab {

enum class Series { A, B, C, D, E, F, G };

/// One simple summand of a semisimple root system, e.g. {B, 3} or {G, 2}.
struct Component {
    Series series;
    int rank;
    friend bool operator==(const Component&, const Component&) = default;
};

std::string to_string(const Component& c);

/// A (possibly reducible, possibly embedded) root system in orthogonal
/// ambient coordinates. The simple roots fix the positive system; everything
/// else (roots, Cartan matrix, fundamental weights, rho) is derived and
/// immutable after construction.
///
/// When the ambient dimension exceeds the rank, fundamental weights and rho
/// live in the span of the roots; the orthogonal complement is where u(1)
/// charges of an embedding live.
class RootSystem {
public:
    RootSystem() = default;

    // Throws DomainError if the simple roots are linearly dependent or do not
    // generate a finite root system.
    static RootSystem from_simple_roots(std::vector<Weight> simple_roots, std::size_t ambient_dim);

    const std::string& label() const { return label_; }
    // Component types sorted by (series, rank); equal for isomorphic systems.
    std::string type_signature() const;
    const std::vector<Component>& components() const { return components_; }

    std::size_t rank() const { return simple_.size(); }
    std::size_t ambient_dim() const { return ambient_dim_; }

    const std::vector<Weight>& simple_roots() const { return simple_; }
    const std::vector<Weight>& positive_roots() const { return positive_; }
    const std::vector<Weight>& roots() const { return roots_; }
    const std::vector<Weight>& fundamental_weights() const { return fundamental_; }
    const Weight& rho() const { return rho_; }
    const std::vector<Weight>& coroots() const { return coroots_; }
    // cartan_matrix()[i][j] = 2(a_i, a_j) / (a_j, a_j)
    const std::vector<std::vector<long long>>& cartan_matrix() const { return cartan_; }

    bool is_root(const Weight& w) const { return root_set_.count(w) != 0; }
    bool is_positive_root(const Weight& w) const;

    // (w, a_i^vee)
    Rational coroot_pairing(const Weight& w, std::size_t i) const { return dot(w, coroots_[i]); }
    std::vector<Rational> dynkin_labels(const Weight& w) const;
    Weight from_dynkin(std::span<const long long> labels) const;
    // Coefficients of the projection of w onto span(simple roots).
    std::vector<Rational> simple_root_coefficients(const Weight& w) const;
    Rational height(const Weight& w) const { return dot(w, height_vector_); }
    // True iff w lies in span(simple roots).
    bool in_root_span(const Weight& w) const;

    bool is_integral(const Weight& w) const;
    bool is_dominant(const Weight& w) const;
    bool is_strictly_dominant(const Weight& w) const;

    unsigned long long weyl_order() const;

private:
    void classify();

    std::string label_;
    std::vector<Component> components_;
    std::size_t ambient_dim_ = 0;
    std::vector<Weight> simple_;
    std::vector<Weight> coroots_;
    std::vector<Weight> positive_;
    std::vector<Weight> roots_;
    std::vector<Weight> fundamental_;
    Weight rho_;
    Weight height_vector_;
    std::vector<std::vector<long long>> cartan_;
    std::vector<std::vector<Rational>> gram_inverse_;
    std::unordered_set<Weight, WeightHash> root_set_;
};

// Conventional orthogonal realizations:
//   A_r  e_i - e_{i+1} in r+1 coordinates          B_r  ..., e_{r-1} - e_r, e_r
//   C_r  ..., e_{r-1} - e_r, 2 e_r                 D_r  ..., e_{r-1} - e_r, e_{r-1} + e_r
//   G2   a1 = -2e1 + e2 + e3 (long), a2 = e1 - e2 (short)
//   F4   e2 - e3, e3 - e4, e4, (e1 - e2 - e3 - e4)/2
// Supported ranks: A 1..8, B 2..8, C 2..8, D 3..8, G2, F4.
RootSystem build_root_system(Series series, int rank);

// Parses "B3", "G2", "A1+A1+A1", ... Summands occupy consecutive coordinate blocks.
RootSystem build_root_system(std::string_view label);

// prod_{a > 0} (mu + rho, a) / (rho, a). Requires mu dominant integral.
long long weyl_dimension(const RootSystem& rs, const Weight& mu);

/// Which roots of a parent system span the regular subalgebra.
struct SubsystemSpec {
    std::vector<std::size_t> kept_simple;  // indices into parent simple roots
    std::vector<Weight> kept_roots;        // explicit parent roots
    std::vector<Weight> u1_charges;        // empty: orthogonal complement is computed
};

/// Root system of a rank-preserving reductive subalgebra a = a^s + u(1) + ...,
/// with roots given as literal parent weights.
struct EmbeddedSubsystem {
    RootSystem roots;
    std::vector<Weight> u1_charges;
    std::string label;  // e.g. "A1+u1", "A2", "u1+u1"

    std::vector<Rational> charges(const Weight& w) const;
    std::size_t total_rank() const { return roots.rank() + u1_charges.size(); }
};

EmbeddedSubsystem regular_subsystem(const RootSystem& parent, const SubsystemSpec& spec);

} // namespace branchlab
