#pragma once

#include "branchlab/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace branchlab {

/// A vector of the real weight space written in the orthogonal ambient basis.
/// Roots, weights, Weyl vectors and u(1) charge directions are all Weights.
class Weight {
public:
    Weight() = default;
    explicit Weight(std::size_t dim) : coords_(dim, Rational(0)) {}
    explicit Weight(std::vector<Rational> coords) : coords_(std::move(coords)) {}
    Weight(std::initializer_list<Rational> coords) : coords_(coords) {}

    static Weight from_ints(std::initializer_list<long long> values);

    std::size_t dim() const { return coords_.size(); }
    const std::vector<Rational>& coords() const { return coords_; }
    const Rational& operator[](std::size_t i) const { return coords_[i]; }
    Rational& operator[](std::size_t i) { return coords_[i]; }

    bool is_zero() const;

    Weight& operator+=(const Weight& other);
    Weight& operator-=(const Weight& other);
    Weight& operator*=(const Rational& factor);
    // this += factor * other, without a temporary
    Weight& add_scaled(const Rational& factor, const Weight& other);

    friend Weight operator+(Weight a, const Weight& b) { return a += b; }
    friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
    friend Weight operator*(const Rational& f, Weight a) { return a *= f; }
    friend Weight operator-(Weight a) { return a *= Rational(-1); }

    friend bool operator==(const Weight& a, const Weight& b) { return a.coords_ == b.coords_; }
    friend bool operator!=(const Weight& a, const Weight& b) { return !(a == b); }
    // Lexicographic on coordinates. Storage order only; see canonical ordering in formal.hpp.
    friend bool operator<(const Weight& a, const Weight& b) {
        return std::lexicographical_compare(a.coords_.begin(), a.coords_.end(), b.coords_.begin(),
                                            b.coords_.end());
    }
    friend bool operator>(const Weight& a, const Weight& b) { return b < a; }

private:
    std::vector<Rational> coords_;
};

Rational dot(const Weight& a, const Weight& b);

// "(p/q, p/q, ...)"
std::string to_string(const Weight& w);

struct WeightHash {
    std::size_t operator()(const Weight& w) const noexcept;
};

} // namespace branchlab
