#include "branchlab/rootsys.hpp"
#include "branchlab/error.hpp"
#include "linalg.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

namespace branchlab {

namespace {

using detail::Matrix;

Matrix invert(const Matrix& m) {
    try {
        return detail::invert(m);
    } catch (const DomainError&) {
        throw DomainError("simple roots are linearly dependent");
    }
}

Weight reflect_in(const Weight& w, const Weight& root, const Weight& coroot) {
    Weight out = w;
    out.add_scaled(-dot(w, coroot), root);
    return out;
}

char series_letter(Series s) {
    switch (s) {
    case Series::A: return 'A';
    case Series::B: return 'B';
    case Series::C: return 'C';
    case Series::D: return 'D';
    case Series::E: return 'E';
    case Series::F: return 'F';
    case Series::G: return 'G';
    }
    return '?';
}

unsigned long long factorial(int n) {
    unsigned long long f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<unsigned long long>(i);
    return f;
}

std::size_t block_dim(Series s, int rank) {
    switch (s) {
    case Series::A: return static_cast<std::size_t>(rank) + 1;
    case Series::G: return 3;
    default: return static_cast<std::size_t>(rank);
    }
}

std::vector<Weight> simple_block(Series s, int r) {
    std::vector<Weight> out;
    const std::size_t n = block_dim(s, r);
    auto unit = [n](std::size_t i) {
        Weight w(n);
        w[i] = 1;
        return w;
    };
    switch (s) {
    case Series::A:
        for (int i = 0; i < r; ++i) out.push_back(unit(i) - unit(i + 1));
        break;
    case Series::B:
        for (int i = 0; i + 1 < r; ++i) out.push_back(unit(i) - unit(i + 1));
        out.push_back(unit(r - 1));
        break;
    case Series::C:
        for (int i = 0; i + 1 < r; ++i) out.push_back(unit(i) - unit(i + 1));
        out.push_back(Rational(2) * unit(r - 1));
        break;
    case Series::D:
        for (int i = 0; i + 1 < r; ++i) out.push_back(unit(i) - unit(i + 1));
        out.push_back(unit(r - 2) + unit(r - 1));
        break;
    case Series::G:
        out.push_back(Weight::from_ints({-2, 1, 1}));
        out.push_back(Weight::from_ints({1, -1, 0}));
        break;
    case Series::F: {
        const Rational h(1, 2);
        out.push_back(Weight::from_ints({0, 1, -1, 0}));
        out.push_back(Weight::from_ints({0, 0, 1, -1}));
        out.push_back(Weight::from_ints({0, 0, 0, 1}));
        out.push_back(Weight{h, -h, -h, -h});
        break;
    }
    case Series::E:
        throw ConfigError("E series is not supported");
    }
    return out;
}

void check_rank(Series s, int rank) {
    bool ok = false;
    switch (s) {
    case Series::A: ok = rank >= 1 && rank <= 8; break;
    case Series::B: ok = rank >= 2 && rank <= 8; break;
    case Series::C: ok = rank >= 2 && rank <= 8; break;
    case Series::D: ok = rank >= 3 && rank <= 8; break;
    case Series::G: ok = rank == 2; break;
    case Series::F: ok = rank == 4; break;
    case Series::E: ok = false; break;
    }
    if (!ok)
        throw ConfigError("unsupported root system " + std::string(1, series_letter(s)) +
                          std::to_string(rank));
}

Component parse_component(std::string_view text) {
    if (text.size() < 2) throw ConfigError("malformed root system label '" + std::string(text) + "'");
    Series s;
    switch (text[0]) {
    case 'A': s = Series::A; break;
    case 'B': s = Series::B; break;
    case 'C': s = Series::C; break;
    case 'D': s = Series::D; break;
    case 'E': s = Series::E; break;
    case 'F': s = Series::F; break;
    case 'G': s = Series::G; break;
    default: throw ConfigError("unknown series in '" + std::string(text) + "'");
    }
    int rank = 0;
    for (char ch : text.substr(1)) {
        if (ch < '0' || ch > '9') throw ConfigError("malformed rank in '" + std::string(text) + "'");
        rank = rank * 10 + (ch - '0');
        if (rank > 99) throw ConfigError("rank too large in '" + std::string(text) + "'");
    }
    check_rank(s, rank);
    return {s, rank};
}

// Scale a rational vector to a primitive integer vector with positive leading entry.
Weight primitive(Weight w) {
    long long l = 1;
    for (const auto& c : w.coords()) l = std::lcm(l, c.denominator());
    w *= Rational(l);
    long long g = 0;
    for (const auto& c : w.coords()) g = std::gcd(g, c.numerator());
    if (g != 0) w *= Rational(1, g);
    for (const auto& c : w.coords()) {
        if (c == 0) continue;
        if (c < 0) w *= Rational(-1);
        break;
    }
    return w;
}

} // namespace

std::string to_string(const Component& c) { return std::string(1, series_letter(c.series)) + std::to_string(c.rank); }

RootSystem RootSystem::from_simple_roots(std::vector<Weight> simple_roots, std::size_t ambient_dim) {
    RootSystem rs;
    rs.ambient_dim_ = ambient_dim;
    rs.simple_ = std::move(simple_roots);
    const std::size_t r = rs.simple_.size();
    for (const auto& a : rs.simple_) {
        if (a.dim() != ambient_dim) throw DomainError("simple root has wrong dimension");
        if (a.is_zero()) throw DomainError("zero simple root");
    }

    Matrix gram(r, std::vector<Rational>(r));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) gram[i][j] = dot(rs.simple_[i], rs.simple_[j]);
    rs.gram_inverse_ = invert(gram);

    rs.cartan_.assign(r, std::vector<long long>(r, 0));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            Rational c = Rational(2) * gram[i][j] / gram[j][j];
            if (!is_integer(c) || (i != j && c > 0))
                throw DomainError("simple roots do not form a root basis");
            rs.cartan_[i][j] = c.numerator();
        }

    for (std::size_t i = 0; i < r; ++i) rs.coroots_.push_back(Rational(2) / gram[i][i] * rs.simple_[i]);

    // All roots: closure of the simple roots under simple reflections.
    std::deque<Weight> queue(rs.simple_.begin(), rs.simple_.end());
    for (const auto& a : rs.simple_) rs.root_set_.insert(a);
    while (!queue.empty()) {
        Weight x = std::move(queue.front());
        queue.pop_front();
        for (std::size_t i = 0; i < r; ++i) {
            Weight y = reflect_in(x, rs.simple_[i], rs.coroots_[i]);
            if (rs.root_set_.insert(y).second) {
                if (rs.root_set_.size() > 100000) throw DomainError("root system is not finite");
                queue.push_back(std::move(y));
            }
        }
    }

    rs.height_vector_ = Weight(ambient_dim);
    for (std::size_t j = 0; j < r; ++j) {
        Rational s(0);
        for (std::size_t i = 0; i < r; ++i) s += rs.gram_inverse_[i][j];
        rs.height_vector_.add_scaled(s, rs.simple_[j]);
    }

    for (const auto& x : rs.root_set_) {
        auto c = rs.simple_root_coefficients(x);
        bool nonneg = std::all_of(c.begin(), c.end(), [](const Rational& q) { return q >= 0; });
        bool nonpos = std::all_of(c.begin(), c.end(), [](const Rational& q) { return q <= 0; });
        if (!nonneg && !nonpos) throw DomainError("simple roots do not form a root basis");
        if (nonneg) rs.positive_.push_back(x);
    }
    // Canonical order: height ascending, then lexicographically descending coordinates.
    std::sort(rs.positive_.begin(), rs.positive_.end(), [&rs](const Weight& a, const Weight& b) {
        Rational ha = rs.height(a), hb = rs.height(b);
        if (ha != hb) return ha < hb;
        return b < a;
    });
    for (const auto& p : rs.positive_) rs.roots_.push_back(p);
    for (const auto& p : rs.positive_) rs.roots_.push_back(-p);

    // w_i = sum_k (a_i, a_i)/2 * Ginv_ik a_k
    rs.rho_ = Weight(ambient_dim);
    for (std::size_t i = 0; i < r; ++i) {
        Weight w(ambient_dim);
        for (std::size_t k = 0; k < r; ++k) w.add_scaled(gram[i][i] / 2 * rs.gram_inverse_[i][k], rs.simple_[k]);
        rs.rho_ += w;
        rs.fundamental_.push_back(std::move(w));
    }

    rs.classify();
    return rs;
}

void RootSystem::classify() {
    const std::size_t r = rank();
    std::vector<int> comp(r, -1);
    int ncomp = 0;
    for (std::size_t s = 0; s < r; ++s) {
        if (comp[s] >= 0) continue;
        std::vector<std::size_t> stack{s};
        comp[s] = ncomp;
        while (!stack.empty()) {
            std::size_t i = stack.back();
            stack.pop_back();
            for (std::size_t j = 0; j < r; ++j)
                if (comp[j] < 0 && cartan_[i][j] != 0) {
                    comp[j] = ncomp;
                    stack.push_back(j);
                }
        }
        ++ncomp;
    }

    components_.clear();
    for (int c = 0; c < ncomp; ++c) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < r; ++i)
            if (comp[i] == c) idx.push_back(i);
        const int n = static_cast<int>(idx.size());
        std::size_t npos = 0;
        for (const auto& p : positive_) {
            const auto coeff = simple_root_coefficients(p);
            if (std::any_of(idx.begin(), idx.end(), [&](std::size_t i) { return coeff[i] != 0; })) ++npos;
        }
        Rational longest(0);
        for (auto i : idx) longest = std::max(longest, dot(simple_[i], simple_[i]));
        int nlong = 0;
        for (auto i : idx)
            if (dot(simple_[i], simple_[i]) == longest) ++nlong;

        Component out{Series::A, n};
        const auto N = static_cast<std::size_t>(n);
        if (nlong == n) {
            if (npos == N * (N + 1) / 2) out.series = Series::A;
            else if (npos == N * (N - 1)) out.series = Series::D;
            else out.series = Series::E;
        } else if (n == 2 && npos == 6) {
            out.series = Series::G;
        } else if (n == 4 && npos == 24) {
            out.series = Series::F;
        } else if (n == 2 || nlong == n - 1) {
            out.series = Series::B;
        } else {
            out.series = Series::C;
        }
        components_.push_back(out);
    }

    label_.clear();
    for (const auto& c : components_) {
        if (!label_.empty()) label_ += "+";
        label_ += to_string(c);
    }
}

std::string RootSystem::type_signature() const {
    std::vector<std::string> parts;
    for (const auto& c : components_) parts.push_back(to_string(c));
    std::sort(parts.begin(), parts.end());
    std::string out;
    for (const auto& p : parts) {
        if (!out.empty()) out += "+";
        out += p;
    }
    return out;
}

bool RootSystem::is_positive_root(const Weight& w) const { return is_root(w) && height(w) > 0; }

std::vector<Rational> RootSystem::dynkin_labels(const Weight& w) const {
    std::vector<Rational> out(rank());
    for (std::size_t i = 0; i < rank(); ++i) out[i] = coroot_pairing(w, i);
    return out;
}

Weight RootSystem::from_dynkin(std::span<const long long> labels) const {
    if (labels.size() != rank())
        throw ConfigError("expected " + std::to_string(rank()) + " Dynkin labels, got " +
                          std::to_string(labels.size()));
    Weight w(ambient_dim_);
    for (std::size_t i = 0; i < rank(); ++i) w.add_scaled(Rational(labels[i]), fundamental_[i]);
    return w;
}

std::vector<Rational> RootSystem::simple_root_coefficients(const Weight& w) const {
    const std::size_t r = rank();
    std::vector<Rational> pairings(r);
    for (std::size_t j = 0; j < r; ++j) pairings[j] = dot(w, simple_[j]);
    std::vector<Rational> out(r, Rational(0));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            if (gram_inverse_[i][j] != 0) out[i] += gram_inverse_[i][j] * pairings[j];
    return out;
}

bool RootSystem::in_root_span(const Weight& w) const {
    auto c = simple_root_coefficients(w);
    Weight back(ambient_dim_);
    for (std::size_t i = 0; i < rank(); ++i) back.add_scaled(c[i], simple_[i]);
    return back == w;
}

bool RootSystem::is_integral(const Weight& w) const {
    for (std::size_t i = 0; i < rank(); ++i)
        if (!is_integer(coroot_pairing(w, i))) return false;
    return true;
}

bool RootSystem::is_dominant(const Weight& w) const {
    for (std::size_t i = 0; i < rank(); ++i)
        if (coroot_pairing(w, i) < 0) return false;
    return true;
}

bool RootSystem::is_strictly_dominant(const Weight& w) const {
    for (std::size_t i = 0; i < rank(); ++i)
        if (coroot_pairing(w, i) <= 0) return false;
    return true;
}

unsigned long long RootSystem::weyl_order() const {
    unsigned long long order = 1;
    for (const auto& c : components_) {
        switch (c.series) {
        case Series::A: order *= factorial(c.rank + 1); break;
        case Series::B:
        case Series::C: order *= (1ULL << c.rank) * factorial(c.rank); break;
        case Series::D: order *= (1ULL << (c.rank - 1)) * factorial(c.rank); break;
        case Series::G: order *= 12; break;
        case Series::F: order *= 1152; break;
        case Series::E:
            order *= c.rank == 6 ? 51840ULL : c.rank == 7 ? 2903040ULL : 696729600ULL;
            break;
        }
    }
    return order;
}

RootSystem build_root_system(Series series, int rank) {
    check_rank(series, rank);
    return RootSystem::from_simple_roots(simple_block(series, rank), block_dim(series, rank));
}

RootSystem build_root_system(std::string_view label) {
    std::vector<Component> parts;
    std::size_t start = 0;
    while (start <= label.size()) {
        std::size_t plus = label.find('+', start);
        if (plus == std::string_view::npos) plus = label.size();
        parts.push_back(parse_component(label.substr(start, plus - start)));
        start = plus + 1;
    }
    std::size_t total = 0;
    for (const auto& c : parts) total += block_dim(c.series, c.rank);

    std::vector<Weight> simple;
    std::size_t offset = 0;
    for (const auto& c : parts) {
        for (const auto& a : simple_block(c.series, c.rank)) {
            Weight w(total);
            for (std::size_t i = 0; i < a.dim(); ++i) w[offset + i] = a[i];
            simple.push_back(std::move(w));
        }
        offset += block_dim(c.series, c.rank);
    }
    return RootSystem::from_simple_roots(std::move(simple), total);
}

long long weyl_dimension(const RootSystem& rs, const Weight& mu) {
    if (!rs.is_integral(mu) || !rs.is_dominant(mu))
        throw DomainError("weyl_dimension needs a dominant integral weight, got " + to_string(mu));
    const Weight shifted = mu + rs.rho();
    Rational d(1);
    for (const auto& a : rs.positive_roots()) d *= dot(shifted, a) / dot(rs.rho(), a);
    if (!is_integer(d)) throw InvariantViolation("Weyl dimension is not an integer");
    return d.numerator();
}

std::vector<Rational> EmbeddedSubsystem::charges(const Weight& w) const {
    std::vector<Rational> out;
    out.reserve(u1_charges.size());
    for (const auto& q : u1_charges) out.push_back(dot(w, q));
    return out;
}

EmbeddedSubsystem regular_subsystem(const RootSystem& parent, const SubsystemSpec& spec) {
    std::vector<Weight> gens;
    for (auto i : spec.kept_simple) {
        if (i >= parent.rank()) throw InvalidSubsystem("simple root index out of range");
        gens.push_back(parent.simple_roots()[i]);
    }
    for (const auto& r : spec.kept_roots) {
        if (r.dim() != parent.ambient_dim() || !parent.is_root(r))
            throw InvalidSubsystem("kept root " + to_string(r) + " is not a root of " + parent.label());
        gens.push_back(r);
    }

    // Subsystem generated by the kept roots: closure under their reflections.
    std::vector<Weight> gen_coroots;
    for (const auto& g : gens) gen_coroots.push_back(Rational(2) / dot(g, g) * g);
    std::unordered_set<Weight, WeightHash> sub;
    std::deque<Weight> queue;
    for (const auto& g : gens)
        for (const auto& x : {g, -g})
            if (sub.insert(x).second) queue.push_back(x);
    while (!queue.empty()) {
        Weight x = std::move(queue.front());
        queue.pop_front();
        for (std::size_t k = 0; k < gens.size(); ++k) {
            Weight y = reflect_in(x, gens[k], gen_coroots[k]);
            if (sub.insert(y).second) queue.push_back(std::move(y));
        }
    }
    for (const auto& a : sub)
        for (const auto& b : sub) {
            Weight s = a + b;
            if (parent.is_root(s) && !sub.count(s))
                throw InvalidSubsystem("kept roots are not additively closed: " + to_string(a) + " + " +
                                       to_string(b) + " is a root outside the subsystem");
        }

    std::vector<Weight> positive;
    for (const auto& a : sub)
        if (parent.height(a) > 0) positive.push_back(a);
    std::unordered_set<Weight, WeightHash> pos_set(positive.begin(), positive.end());
    std::vector<Weight> simple;
    for (const auto& a : positive) {
        bool decomposable = false;
        for (const auto& b : positive)
            if (b != a && pos_set.count(a - b)) {
                decomposable = true;
                break;
            }
        if (!decomposable) simple.push_back(a);
    }

    // Keep the caller's order when the kept roots are exactly the simple roots.
    bool caller_order = gens.size() == simple.size() &&
                        std::all_of(gens.begin(), gens.end(), [&](const Weight& g) {
                            return std::find(simple.begin(), simple.end(), g) != simple.end();
                        });
    if (caller_order) {
        simple = gens;
    } else {
        std::sort(simple.begin(), simple.end(), [&](const Weight& a, const Weight& b) {
            Rational ha = parent.height(a), hb = parent.height(b);
            if (ha != hb) return ha < hb;
            auto ca = parent.simple_root_coefficients(a), cb = parent.simple_root_coefficients(b);
            return cb < ca;
        });
    }

    EmbeddedSubsystem out;
    out.roots = RootSystem::from_simple_roots(simple, parent.ambient_dim());
    const std::size_t missing = parent.rank() - out.roots.rank();

    if (spec.u1_charges.empty()) {
        // Gram-Schmidt of the parent simple roots against the subsystem.
        std::vector<Weight> basis;
        for (const auto& a : simple) {
            Weight v = a;
            for (const auto& b : basis) v.add_scaled(-dot(v, b) / dot(b, b), b);
            basis.push_back(std::move(v));
        }
        for (const auto& a : parent.simple_roots()) {
            Weight v = a;
            for (const auto& b : basis) v.add_scaled(-dot(v, b) / dot(b, b), b);
            if (v.is_zero()) continue;
            basis.push_back(v);
            out.u1_charges.push_back(primitive(v));
        }
    } else {
        out.u1_charges = spec.u1_charges;
        if (out.u1_charges.size() != missing)
            throw InvalidSubsystem("expected " + std::to_string(missing) + " u(1) charges, got " +
                                   std::to_string(out.u1_charges.size()));
        std::vector<Weight> all = simple;
        for (const auto& q : out.u1_charges) {
            if (q.dim() != parent.ambient_dim() || !parent.in_root_span(q))
                throw InvalidSubsystem("u(1) charge " + to_string(q) + " is outside the weight space");
            for (const auto& a : simple)
                if (dot(q, a) != 0)
                    throw InvalidSubsystem("u(1) charge " + to_string(q) + " is not orthogonal to " +
                                           to_string(a));
            all.push_back(q);
        }
        Matrix gram(all.size(), std::vector<Rational>(all.size()));
        for (std::size_t i = 0; i < all.size(); ++i)
            for (std::size_t j = 0; j < all.size(); ++j) gram[i][j] = dot(all[i], all[j]);
        try {
            invert(gram);
        } catch (const DomainError&) {
            throw InvalidSubsystem("u(1) charges are linearly dependent");
        }
    }

    out.label = out.roots.label();
    for (std::size_t i = 0; i < out.u1_charges.size(); ++i) out.label += out.label.empty() ? "u1" : "+u1";
    return out;
}

} // namespace branchlab
