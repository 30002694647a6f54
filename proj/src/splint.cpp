#include "branchlab/splint.hpp"
#include "branchlab/error.hpp"
#include "branchlab/formal.hpp"
#include "branchlab/weyl.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <unordered_set>

namespace branchlab {

namespace {

Weight unit(std::size_t i, std::size_t n) {
    Weight w(n);
    w[i] = 1;
    return w;
}

std::string normalize_sub_label(std::string_view raw) {
    std::string s;
    for (char ch : raw)
        if (ch != ' ') s += ch;
    for (std::size_t pos; (pos = s.find("u(1)")) != std::string::npos;) s.replace(pos, 4, "u1");
    std::string out;
    std::size_t start = 0;
    while (start <= s.size()) {
        std::size_t plus = s.find('+', start);
        if (plus == std::string::npos) plus = s.size();
        std::string part = s.substr(start, plus - start);
        if (part == "D2") part = "A1+A1";
        else if (part == "D3") part = "A3";
        if (!out.empty()) out += "+";
        out += part;
        start = plus + 1;
    }
    return out;
}

// Gram matrices of the coimage simple roots and of their images proportional.
bool phi_is_metric(const RootSystem& coimage, const std::vector<Weight>& images) {
    const auto& simple = coimage.simple_roots();
    std::optional<Rational> scale;
    for (std::size_t i = 0; i < simple.size(); ++i)
        for (std::size_t j = 0; j < simple.size(); ++j) {
            const Rational src = dot(simple[i], simple[j]);
            const Rational dst = dot(images[i], images[j]);
            if (src == 0) {
                if (dst != 0) return false;
                continue;
            }
            const Rational ratio = dst / src;
            if (!scale) scale = ratio;
            else if (*scale != ratio) return false;
        }
    return true;
}

SplintDescriptor assemble(const RootSystem& parent, EmbeddedSubsystem stem_a, RootSystem coimage,
                          std::vector<Weight> phi_simple, std::vector<std::size_t> label_map, SplintType type) {
    SplintDescriptor sd;
    sd.parent = parent;
    for (const auto& r : parent.roots())
        if (!stem_a.roots.is_root(r)) sd.stem_s_image.push_back(r);
    sd.stem_a = std::move(stem_a);
    sd.coimage = std::move(coimage);
    sd.phi_simple = std::move(phi_simple);
    sd.label_map = std::move(label_map);
    sd.type = type;
    sd.a_metric = true;
    sd.s_metric = phi_is_metric(sd.coimage, sd.phi_simple);
    validate_descriptor(sd);
    return sd;
}

std::string repeat_a1(int r) {
    std::string out;
    for (int i = 0; i < r; ++i) out += i ? "+A1" : "A1";
    return out;
}

std::vector<std::size_t> identity_map(std::size_t r) {
    std::vector<std::size_t> m(r);
    std::iota(m.begin(), m.end(), 0);
    return m;
}

std::vector<SplintDescriptor> catalog_for(const RootSystem& parent) {
    const Component pc = parent.components().front();
    const int r = pc.rank;
    const std::size_t n = parent.ambient_dim();
    const auto& s = parent.simple_roots();
    std::vector<SplintDescriptor> rows;

    switch (pc.series) {
    case Series::G: {
        SubsystemSpec spec{{0}, {s[0] + Rational(3) * s[1]}, {}};
        rows.push_back(assemble(parent, regular_subsystem(parent, spec), build_root_system("A2"),
                                {s[0] + s[1], s[1]}, {0, 1}, SplintType::I));
        break;
    }
    case Series::F: {
        SubsystemSpec spec{{}, {unit(0, 4) - unit(1, 4), unit(1, 4) - unit(2, 4), unit(2, 4) - unit(3, 4),
                                unit(2, 4) + unit(3, 4)}, {}};
        // D4 coimage: node 1 is the branch node and goes to the spinor root.
        rows.push_back(assemble(parent, regular_subsystem(parent, spec), build_root_system("D4"),
                                {unit(1, 4), s[3], unit(2, 4), unit(3, 4)}, {0, 3, 1, 2}, SplintType::I));
        break;
    }
    case Series::B: {
        SubsystemSpec spec;
        for (int i = 0; i + 1 < r; ++i) spec.kept_simple.push_back(static_cast<std::size_t>(i));
        spec.kept_roots.push_back(unit(r - 2, n) + unit(r - 1, n));
        std::vector<Weight> images;
        for (int i = 0; i < r; ++i) images.push_back(unit(i, n));
        rows.push_back(assemble(parent, regular_subsystem(parent, spec), build_root_system(repeat_a1(r)), images,
                                identity_map(r), SplintType::II));
        if (r == 2) {
            SubsystemSpec spec3{{0}, {}, {}};
            rows.push_back(assemble(parent, regular_subsystem(parent, spec3), build_root_system("A2"),
                                    {unit(0, 2), unit(1, 2)}, {0, 1}, SplintType::III));
        }
        break;
    }
    case Series::C: {
        if (r < 3) break;
        SubsystemSpec spec;
        for (int i = 0; i < r; ++i) spec.kept_roots.push_back(Rational(2) * unit(i, n));
        RootSystem coimage = build_root_system("D" + std::to_string(r));
        std::vector<Weight> images = coimage.simple_roots();
        rows.push_back(assemble(parent, regular_subsystem(parent, spec), std::move(coimage), images, identity_map(r),
                                SplintType::IIStar));
        break;
    }
    case Series::A: {
        if (r < 2) break;
        SubsystemSpec spec;
        for (int i = 0; i + 1 < r; ++i) spec.kept_simple.push_back(static_cast<std::size_t>(i));
        std::vector<Weight> images;
        for (int i = 0; i < r; ++i) images.push_back(unit(i, n) - unit(r, n));
        rows.push_back(assemble(parent, regular_subsystem(parent, spec), build_root_system(repeat_a1(r)), images,
                                identity_map(r), SplintType::III));
        break;
    }
    default:
        break;
    }
    return rows;
}

struct CandidateComponent {
    std::string label;
    int rank;
    int positive;
};

std::vector<CandidateComponent> candidate_components(int max_rank) {
    std::vector<CandidateComponent> out;
    for (int n = 1; n <= max_rank; ++n) out.push_back({"A" + std::to_string(n), n, n * (n + 1) / 2});
    for (int n = 2; n <= max_rank; ++n) out.push_back({"B" + std::to_string(n), n, n * n});
    for (int n = 3; n <= max_rank; ++n) out.push_back({"C" + std::to_string(n), n, n * n});
    for (int n = 4; n <= max_rank; ++n) out.push_back({"D" + std::to_string(n), n, n * (n - 1)});
    if (max_rank >= 2) out.push_back({"G2", 2, 6});
    if (max_rank >= 4) out.push_back({"F4", 4, 24});
    return out;
}

// Labels of semisimple root systems with rank <= max_rank and the given
// number of positive roots, in a fixed enumeration order.
std::vector<std::string> candidate_coimages(int max_rank, int positive) {
    const auto comps = candidate_components(max_rank);
    std::vector<std::string> out;
    std::vector<std::size_t> chosen;
    std::function<void(std::size_t, int, int)> rec = [&](std::size_t from, int rank_left, int pos_left) {
        if (pos_left == 0 && !chosen.empty()) {
            std::string label;
            for (auto i : chosen) label += (label.empty() ? "" : "+") + comps[i].label;
            out.push_back(label);
            return;
        }
        for (std::size_t i = from; i < comps.size(); ++i) {
            if (comps[i].rank > rank_left || comps[i].positive > pos_left) continue;
            chosen.push_back(i);
            rec(i, rank_left - comps[i].rank, pos_left - comps[i].positive);
            chosen.pop_back();
        }
    };
    rec(0, max_rank, positive);
    return out;
}

} // namespace

std::string to_string(SplintType t) {
    switch (t) {
    case SplintType::I: return "i";
    case SplintType::II: return "ii";
    case SplintType::IIStar: return "ii*";
    case SplintType::III: return "iii";
    }
    return "?";
}

Weight SplintDescriptor::phi(const Weight& v) const {
    if (v.dim() != coimage.ambient_dim() || !coimage.in_root_span(v))
        throw DomainError("phi is defined on the coimage root lattice only: " + to_string(v));
    const auto c = coimage.simple_root_coefficients(v);
    Weight out(parent.ambient_dim());
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (!is_integer(c[k])) throw DomainError("phi: " + to_string(v) + " is not in the root lattice");
        out.add_scaled(c[k], phi_simple[k]);
    }
    return out;
}

std::vector<std::pair<Weight, Weight>> SplintDescriptor::phi_pairs() const {
    std::vector<std::pair<Weight, Weight>> out;
    for (const auto& x : coimage.positive_roots()) out.emplace_back(x, phi(x));
    return out;
}

std::vector<Weight> SplintDescriptor::stem_s_positive() const {
    std::vector<Weight> out;
    for (const auto& r : stem_s_image)
        if (parent.height(r) > 0) out.push_back(r);
    return out;
}

std::vector<CatalogRow> catalog_rows(int max_rank) {
    std::vector<CatalogRow> out;
    if (max_rank >= 2) out.push_back({"G2", "A2", SplintType::I});
    if (max_rank >= 4) out.push_back({"F4", "D4", SplintType::I});
    for (int r = 2; r <= std::min(max_rank, 8); ++r) {
        std::string d = r == 2 ? "A1+A1" : r == 3 ? "A3" : "D" + std::to_string(r);
        out.push_back({"B" + std::to_string(r), d, SplintType::II});
    }
    for (int r = 3; r <= std::min(max_rank, 8); ++r)
        out.push_back({"C" + std::to_string(r), repeat_a1(r), SplintType::IIStar});
    for (int r = 2; r <= std::min(max_rank, 8); ++r)
        out.push_back({"A" + std::to_string(r), "A" + std::to_string(r - 1) + "+u1", SplintType::III});
    if (max_rank >= 2) out.push_back({"B2", "A1+u1", SplintType::III});
    return out;
}

SplintDescriptor splint_catalog(std::string_view parent_label, std::string_view sub_label) {
    const RootSystem parent = build_root_system(parent_label);
    if (parent.components().size() != 1) throw NotASplint("parent must be simple: " + std::string(parent_label));
    const std::string wanted = normalize_sub_label(sub_label);
    for (auto& sd : catalog_for(parent))
        if (sd.stem_a.label == wanted) return std::move(sd);
    throw NotASplint("(" + parent.label() + ", " + std::string(sub_label) + ") is not in the splint catalog");
}

void validate_descriptor(const SplintDescriptor& sd) {
    const auto fail = [](const std::string& what) { throw InvariantViolation("invalid splint descriptor: " + what); };
    if (sd.coimage.rank() > sd.parent.rank()) fail("coimage rank exceeds parent rank");
    if (sd.phi_simple.size() != sd.coimage.rank()) fail("phi needs one image per coimage simple root");
    if (!sd.label_map.empty()) {
        if (sd.label_map.size() != sd.coimage.rank()) fail("label map has wrong length");
        std::unordered_set<std::size_t> seen;
        for (auto i : sd.label_map)
            if (i >= sd.parent.rank() || !seen.insert(i).second) fail("label map is not injective");
    }

    std::unordered_set<Weight, WeightHash> s_set(sd.stem_s_image.begin(), sd.stem_s_image.end());
    for (const auto& r : sd.stem_a.roots.roots())
        if (s_set.count(r)) fail("stems intersect at " + to_string(r));
    if (s_set.size() != sd.stem_s_image.size()) fail("duplicate roots in the second stem");
    if (sd.stem_a.roots.roots().size() + sd.stem_s_image.size() != sd.parent.roots().size())
        fail("stems do not cover the parent root system");
    for (const auto& r : sd.stem_s_image)
        if (!sd.parent.is_root(r)) fail(to_string(r) + " is not a parent root");

    const auto positive = sd.stem_s_positive();
    std::unordered_set<Weight, WeightHash> pos_set(positive.begin(), positive.end());
    std::unordered_set<Weight, WeightHash> images;
    for (const auto& [x, y] : sd.phi_pairs()) {
        if (!pos_set.count(y)) fail("phi(" + to_string(x) + ") = " + to_string(y) + " is not in the second stem");
        if (!images.insert(y).second) fail("phi is not injective at " + to_string(y));
    }
    if (images.size() != positive.size()) fail("phi is not onto the second stem");

    const auto& cpos = sd.coimage.positive_roots();
    for (const auto& a : cpos)
        for (const auto& b : cpos) {
            const Weight c = a + b;
            if (sd.coimage.is_root(c) && sd.phi(c) != sd.phi(a) + sd.phi(b)) fail("phi is not additive");
        }
}

std::optional<SplintDescriptor> detect_injective_splint(const RootSystem& parent, const EmbeddedSubsystem& sub) {
    if (sub.roots.rank() == 0) return std::nullopt;
    std::vector<Weight> positive;
    for (const auto& a : parent.positive_roots())
        if (!sub.roots.is_root(a)) positive.push_back(a);
    if (positive.empty()) return std::nullopt;
    std::unordered_set<Weight, WeightHash> pos_set(positive.begin(), positive.end());
    std::unordered_set<Weight, WeightHash> s_set;
    for (const auto& a : parent.roots())
        if (!sub.roots.is_root(a)) s_set.insert(a);

    std::vector<Weight> indecomposable;
    for (const auto& a : positive) {
        bool split = false;
        for (const auto& b : positive)
            if (b != a && pos_set.count(a - b)) {
                split = true;
                break;
            }
        if (!split) indecomposable.push_back(a);
    }

    const int max_rank = static_cast<int>(parent.rank());
    for (const auto& label : candidate_coimages(max_rank, static_cast<int>(positive.size()))) {
        const RootSystem model = build_root_system(label);
        const std::size_t k = model.rank();
        if (k > indecomposable.size()) continue;
        const auto& cartan = model.cartan_matrix();

        std::vector<std::size_t> assign;
        std::vector<bool> used(indecomposable.size(), false);
        std::optional<std::vector<Weight>> found;

        auto strings_ok = [&](std::size_t i) {
            const Weight& bi = indecomposable[assign[i]];
            for (std::size_t j = 0; j < i; ++j) {
                const Weight& bj = indecomposable[assign[j]];
                // a_i-string through a_j has length -C[j][i], and vice versa.
                for (long long m = 1; m <= -cartan[j][i]; ++m)
                    if (!s_set.count(bj + Rational(m) * bi)) return false;
                for (long long m = 1; m <= -cartan[i][j]; ++m)
                    if (!s_set.count(bi + Rational(m) * bj)) return false;
                if (cartan[i][j] == 0 && s_set.count(bi + bj)) return false;
            }
            return true;
        };

        std::function<bool()> search = [&]() -> bool {
            if (assign.size() == k) {
                std::vector<Weight> images;
                for (auto idx : assign) images.push_back(indecomposable[idx]);
                std::unordered_set<Weight, WeightHash> hit;
                for (const auto& x : model.positive_roots()) {
                    const auto c = model.simple_root_coefficients(x);
                    Weight y(parent.ambient_dim());
                    for (std::size_t t = 0; t < k; ++t) y.add_scaled(c[t], images[t]);
                    if (!pos_set.count(y) || !hit.insert(y).second) return false;
                }
                found = std::move(images);
                return true;
            }
            for (std::size_t c = 0; c < indecomposable.size(); ++c) {
                if (used[c]) continue;
                used[c] = true;
                assign.push_back(c);
                if (strings_ok(assign.size() - 1) && search()) return true;
                assign.pop_back();
                used[c] = false;
            }
            return false;
        };
        if (!search()) continue;

        // Canonical labelling: coimage simple roots ordered by their images.
        std::vector<std::size_t> perm(k);
        std::iota(perm.begin(), perm.end(), 0);
        CanonicalOrder order{&parent};
        std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) { return order((*found)[a], (*found)[b]); });
        std::vector<Weight> coimage_simple, images;
        for (auto p : perm) {
            coimage_simple.push_back(model.simple_roots()[p]);
            images.push_back((*found)[p]);
        }
        RootSystem coimage = RootSystem::from_simple_roots(coimage_simple, model.ambient_dim());

        SplintType type;
        if (!phi_is_metric(coimage, images)) type = SplintType::III;
        // type i: equivalent stems, each a simple root system (B2 > D2 has
        // equivalent but reducible stems and belongs to the B_r family)
        else if (coimage.type_signature() == sub.roots.type_signature() && coimage.components().size() == 1)
            type = SplintType::I;
        else if (sub.roots.positive_roots().size() < positive.size()) type = SplintType::IIStar;
        else type = SplintType::II;

        SplintDescriptor sd = assemble(parent, sub, std::move(coimage), std::move(images), {}, type);
        try {
            sd.label_map = witness_label_map(sd);
            validate_descriptor(sd);
        } catch (const InvariantViolation&) {
            sd.label_map.clear();
        }
        return sd;
    }
    return std::nullopt;
}

std::vector<PairingWitness> stem_pairing_witnesses(const SplintDescriptor& sd) {
    const auto& simple = sd.parent.simple_roots();
    std::vector<std::size_t> s_c;
    std::unordered_set<Weight, WeightHash> targets;
    for (std::size_t i = 0; i < simple.size(); ++i) {
        if (sd.stem_a.roots.is_root(simple[i])) s_c.push_back(i);
        else targets.insert(simple[i]);
    }
    for (const auto& b : sd.phi_simple) targets.insert(b);

    std::vector<PairingWitness> out;
    for (std::size_t k = 0; k < sd.phi_simple.size(); ++k) {
        const Weight& beta = sd.phi_simple[k];
        if (std::find(simple.begin(), simple.end(), beta) != simple.end()) continue;
        bool found = false;
        for (auto i : s_c) {
            Weight rest = beta - simple[i];
            if (targets.count(rest)) {
                if (simple[i] + rest != beta) throw InvariantViolation("pairing sum identity failed");
                out.push_back({k, beta, simple[i], i, std::move(rest)});
                found = true;
                break;
            }
        }
        if (!found) throw InvariantViolation("no stem pairing witness for " + to_string(beta));
    }
    return out;
}

std::vector<std::size_t> witness_label_map(const SplintDescriptor& sd) {
    const auto& simple = sd.parent.simple_roots();
    std::vector<std::size_t> out(sd.phi_simple.size(), simple.size());
    for (std::size_t k = 0; k < sd.phi_simple.size(); ++k) {
        auto it = std::find(simple.begin(), simple.end(), sd.phi_simple[k]);
        if (it != simple.end()) out[k] = static_cast<std::size_t>(it - simple.begin());
    }
    for (const auto& w : stem_pairing_witnesses(sd)) out[w.coimage_index] = w.alpha_index;
    return out;
}

bool chamber_condition(const SplintDescriptor& sd) {
    const Weight& rho_s = sd.coimage.rho();
    for (const auto& sw : signed_orbit(rho_s, sd.coimage)) {
        const Weight x = sd.parent.rho() - sd.phi(rho_s - sw.weight);
        if (!sd.stem_a.roots.is_dominant(x)) return false;
    }
    return true;
}

} // namespace branchlab
