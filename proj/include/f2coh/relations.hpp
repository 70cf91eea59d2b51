#pragma once

#include <cctype>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "f2coh/named_basis.hpp"
#include "f2coh/report.hpp"

namespace f2coh {

// Defining relations of the cohomology ring in the named generators.
inline std::vector<std::string> ring_relations(const FamilySpec& s) {
    switch (s.family) {
        case Family::Dihedral:
            if (s.n == 2) return {};
            return {"X2+XY"};
        case Family::Quaternion:
            if (s.n == 3) return {"X2+XY+Y2", "X2Y+XY2"};
            return {"X2+XY", "Y3"};
        case Family::Semidihedral: return {"X2+XY", "XU", "X3", "U2+X2V+Y2V"};
        case Family::Cyclic:
            if (s.n == 1) return {};
            return {"X2"};
    }
    return {};
}

namespace detail {

// Sum of monomials in single-letter generators with power suffixes, e.g. "U2+X2V+Y2V".
// Letters are looked up in `gens`, so substitutes for U and V can be passed in.
inline std::optional<CohClass> evaluate_polynomial(const std::string& expr, const std::map<char, CohClass>& gens) {
    std::optional<CohClass> total;
    std::size_t start = 0;
    while (start <= expr.size()) {
        std::size_t end = expr.find('+', start);
        if (end == std::string::npos) end = expr.size();
        const std::string term = expr.substr(start, end - start);
        std::optional<CohClass> mono;
        for (std::size_t i = 0; i < term.size();) {
            const auto it = gens.find(term[i++]);
            if (it == gens.end()) throw std::invalid_argument("unknown generator in relation " + expr);
            std::size_t j = i;
            while (j < term.size() && std::isdigit(static_cast<unsigned char>(term[j]))) ++j;
            const int power = j > i ? std::stoi(term.substr(i, j - i)) : 1;
            i = j;
            for (int p = 0; p < power; ++p) mono = mono ? cup(*mono, it->second) : it->second;
        }
        if (!mono) throw std::invalid_argument("empty term in relation " + expr);
        if (total) *total += *mono; else total = std::move(mono);
        start = end + 1;
    }
    return total;
}

}  // namespace detail

// U and V are defined only modulo U -> U + aY^3, V -> V + bY^4 + cYU. The semidihedral check
// looks for a normalisation satisfying every relation and reports the one found.
inline ReportItems check_ring_relations(const NamedCohomology& nc) {
    const auto rels = ring_relations(nc.spec());
    const int top = nc.complex()->max_cohomology_degree();
    const std::string grp = to_string(nc.spec());
    std::map<char, CohClass> gens;
    for (const auto& g : nc.generators()) gens.emplace(g.name.front(), nc.generator(g.name));

    std::vector<std::pair<std::string, std::string>> normalisations{{"U", "V"}};
    if (nc.spec().family == Family::Semidihedral)
        normalisations = {{"U", "V"}, {"U", "V+YU"}, {"U", "V+Y4"}, {"U", "V+Y4+YU"},
                          {"U+Y3", "V"}, {"U+Y3", "V+YU"}, {"U+Y3", "V+Y4"}, {"U+Y3", "V+Y4+YU"}};
    ReportItems items;
    for (const auto& [u, v] : normalisations) {
        auto subst = gens;
        if (gens.count('U')) subst.insert_or_assign('U', nc.evaluate(u));
        if (gens.count('V')) subst.insert_or_assign('V', nc.evaluate(v));
        const std::string note = (u == "U" && v == "V") ? std::string{} : "with U := " + u + ", V := " + v;
        ReportItems trial;
        bool all = true;
        for (const auto& rel : rels) {
            std::optional<CohClass> value;
            std::string detail = note;
            try {
                value = detail::evaluate_polynomial(rel, subst);
            } catch (const std::out_of_range&) {
                detail = "degree beyond window " + std::to_string(top);
            }
            const bool ok = value && value->is_zero();
            if (value && !ok) detail = "equals " + nc.name(*value) + (note.empty() ? "" : " " + note);
            all = all && ok;
            trial.push_back(make_item(grp + " relation " + rel + "=0", "defining relation of the cohomology ring", ok, detail));
        }
        if (all || items.empty()) items = std::move(trial);
        if (all) break;
    }
    return items;
}

}  // namespace f2coh
