#include "branchlab/branching.hpp"
#include "branchlab/error.hpp"
#include "branchlab/formal.hpp"

#include <chrono>
#include <set>

namespace branchlab {

TildeModule tilde_highest_weight(const Weight& mu, const SplintDescriptor& sd) {
    if (sd.type == SplintType::IIStar)
        throw UnsupportedSplint("splint (" + sd.parent.label() + ", " + sd.stem_a.label +
                                ") of type ii* does not define a unique auxiliary module");
    if (sd.label_map.empty())
        throw UnsupportedSplint("no Dynkin label correspondence for (" + sd.parent.label() + ", " + sd.stem_a.label +
                                ")");
    if (!chamber_condition(sd))
        throw UnsupportedSplint("chamber condition fails for (" + sd.parent.label() + ", " + sd.stem_a.label + ")");
    if (!sd.parent.is_integral(mu) || !sd.parent.is_dominant(mu))
        throw DomainError("splint branching needs a dominant integral weight, got " + to_string(mu));

    const auto labels = sd.parent.dynkin_labels(mu);
    TildeModule out;
    out.coimage = sd.coimage;
    for (auto idx : sd.label_map) out.dynkin.push_back(labels[idx].numerator());
    out.highest_weight = sd.coimage.from_dynkin(out.dynkin);
    return out;
}

BranchingResult splint_branching(const Weight& mu, const SplintDescriptor& sd) {
    const TildeModule tilde = tilde_highest_weight(mu, sd);
    std::map<Weight, long long> b;
    const FormalSum tilde_character = freudenthal_character(sd.coimage, tilde.highest_weight);
    for (const auto& [nu_tilde, m] : tilde_character.terms()) {
        const Weight nu = mu - sd.phi(tilde.highest_weight - nu_tilde);
        if (!sd.stem_a.roots.is_dominant(nu))
            throw InvariantViolation("splint image " + to_string(nu) + " of " + to_string(nu_tilde) +
                                     " is not a-dominant");
        if (!b.emplace(nu, m).second)
            throw InvariantViolation("two coimage weights map to " + to_string(nu));
    }
    return make_branching_result(sd.parent, sd.stem_a, mu, Method::Splint, b);
}

BranchingResult oracle_branching(const RootSystem& parent, const Weight& mu, const EmbeddedSubsystem& sub) {
    if (sub.total_rank() != parent.rank())
        throw UnsupportedCase("oracle needs a rank-preserving subalgebra");
    const FormalSum ch = freudenthal_character(parent, mu);

    CanonicalOrder order{&parent};
    using Residual = std::map<Weight, long long, CanonicalOrder>;
    std::map<std::vector<Rational>, Residual> sectors;
    for (const auto& [w, m] : ch.terms()) sectors.try_emplace(sub.charges(w), order).first->second.emplace(w, m);

    std::map<Weight, long long> b;
    for (auto& [charge, residual] : sectors) {
        while (!residual.empty()) {
            const auto [nu, m] = *residual.begin();
            if (m < 0) throw InvariantViolation("negative residual multiplicity at " + to_string(nu));
            if (!sub.roots.is_dominant(nu))
                throw InvariantViolation("highest residual weight " + to_string(nu) + " is not a-dominant");
            b[nu] += m;
            const FormalSum sub_character = freudenthal_character(sub.roots, nu);
            for (const auto& [w, c] : sub_character.terms()) {
                auto [it, inserted] = residual.try_emplace(w, -m * c);
                if (!inserted) {
                    it->second -= m * c;
                    if (it->second == 0) residual.erase(it);
                }
            }
        }
    }
    return make_branching_result(parent, sub, mu, Method::Oracle, b);
}

std::string case_name(const std::string& parent, const std::string& sub, const std::vector<long long>& dynkin) {
    std::string out = parent + ">" + sub + "[";
    for (std::size_t i = 0; i < dynkin.size(); ++i) out += (i ? "," : "") + std::to_string(dynkin[i]);
    return out + "]";
}

CompareReport compare_methods(const RootSystem& parent, const EmbeddedSubsystem& sub, const Weight& mu,
                              const std::optional<SplintDescriptor>& sd) {
    CompareReport report;
    std::vector<long long> dynkin;
    for (const auto& l : parent.dynkin_labels(mu)) dynkin.push_back(l.numerator());
    report.case_name = case_name(parent.label(), sub.label, dynkin);
    report.parent_dimension = weyl_dimension(parent, mu);

    auto run = [&](Method method, auto&& fn) {
        MethodOutcome outcome;
        outcome.method = method;
        const auto start = std::chrono::steady_clock::now();
        try {
            outcome.result = fn();
            outcome.ran = true;
            outcome.dimension_ok = branching_dimension(*outcome.result, sub) == report.parent_dimension;
        } catch (const UnsupportedSplint& e) {
            outcome.error = e.what();
        } catch (const NotASplint& e) {
            outcome.error = e.what();
        }
        outcome.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        report.outcomes.push_back(std::move(outcome));
    };

    run(Method::Splint, [&]() -> BranchingResult {
        if (!sd) throw NotASplint("no splint descriptor for " + report.case_name);
        return splint_branching(mu, *sd);
    });
    run(Method::Fan, [&] { return fan_branching(parent, sub, mu); });
    run(Method::Oracle, [&] { return oracle_branching(parent, mu, sub); });

    std::set<Weight, CanonicalOrder> weights(CanonicalOrder{&parent});
    std::vector<std::map<Weight, long long>> maps;
    for (const auto& o : report.outcomes)
        if (o.result) {
            maps.push_back(o.result->coefficients());
            for (const auto& [w, c] : maps.back()) weights.insert(w);
        }
    report.agree = !maps.empty();
    for (const auto& w : weights) {
        DiffEntry entry;
        entry.weight = w;
        for (const auto& l : sub.roots.dynkin_labels(w)) entry.dynkin.push_back(l.numerator());
        entry.charges = sub.charges(w);
        std::set<long long> seen;
        std::size_t mi = 0;
        for (const auto& o : report.outcomes) {
            if (!o.result) continue;
            auto it = maps[mi].find(w);
            const long long c = it == maps[mi].end() ? 0 : it->second;
            entry.coeffs[o.method] = c;
            seen.insert(c);
            ++mi;
        }
        if (seen.size() > 1) {
            report.agree = false;
            report.diff.push_back(entry);
        }
        report.table.push_back(std::move(entry));
    }
    for (const auto& o : report.outcomes)
        if (o.ran && !o.dimension_ok) report.agree = false;
    return report;
}

CompareReport compare_methods(const std::vector<long long>& dynkin, const std::string& parent_label,
                              const std::string& sub_label) {
    const SplintDescriptor sd = splint_catalog(parent_label, sub_label);
    const Weight mu = sd.parent.from_dynkin(dynkin);
    return compare_methods(sd.parent, sd.stem_a, mu, sd);
}

} // namespace branchlab
