#pragma once

#include <algorithm>
#include <chrono>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "f2coh/bar_oracle.hpp"
#include "f2coh/dwyer.hpp"
#include "f2coh/massey.hpp"
#include "f2coh/maxclass.hpp"
#include "f2coh/named_basis.hpp"
#include "f2coh/relations.hpp"
#include "f2coh/report.hpp"
#include "f2coh/resolution.hpp"
#include "f2coh/resolution_cache.hpp"
#include "f2coh/verify.hpp"

namespace f2coh::cli {

using Json = nlohmann::ordered_json;

struct Report {
    std::string command;
    Json group;  // null when the command is not about one group
    Json results = Json::object();
    ReportItems items;
    double timing_ms = 0;
};

inline Json report_to_json(const Report& r) {
    Json j;
    j["command"] = r.command;
    j["group"] = r.group;
    j["results"] = r.results;
    Json items = Json::array();
    for (const auto& i : r.items)
        items.push_back({{"label", i.label}, {"ref", i.ref}, {"status", i.passed ? "pass" : "fail"}, {"detail", i.detail}});
    j["items"] = std::move(items);
    j["timing_ms"] = r.timing_ms;
    return j;
}

inline std::string report_to_text(const Report& r) {
    std::ostringstream out;
    out << "command: " << r.command << "\n";
    if (!r.group.is_null()) out << "group: " << r.group.value("label", std::string{}) << "\n";
    for (const auto& [k, v] : r.results.items()) out << k << ": " << v.dump() << "\n";
    std::size_t passed = 0;
    for (const auto& i : r.items) {
        passed += i.passed;
        out << (i.passed ? "PASS " : "FAIL ") << i.label;
        if (!i.detail.empty()) out << "  [" << i.detail << "]";
        out << "\n";
    }
    out << passed << "/" << r.items.size() << " items passed in " << r.timing_ms << " ms\n";
    return out.str();
}

inline int exit_code(const Report& r) { return all_passed(r.items) ? 0 : 1; }

// Where resolutions come from; every lookup is logged into the report.
struct Context {
    std::optional<std::filesystem::path> cache_dir;  // unset: default_cache_dir()
    bool use_cache = true;
};

class Source {
public:
    explicit Source(const Context& ctx) : ctx_(ctx), cache_(ctx.cache_dir.value_or(default_cache_dir())) {}

    ResolutionPtr operator()(const GroupPtr& g, const std::string& builder, int window) {
        if (!ctx_.use_cache) {
            log_.push_back({{"file", nullptr}, {"outcome", to_string(CacheOutcome::Disabled)}, {"note", ""}});
            return build_resolution(g, builder, window);
        }
        auto c = cache_.get(g, builder, window);
        log_.push_back({{"file", cache_.file_for(*g, builder, window).filename().string()}, {"outcome", to_string(c.outcome)}, {"note", c.note}});
        return c.resolution;
    }

    ResolutionSource function() {
        return [this](const GroupPtr& g, const std::string& b, int w) { return (*this)(g, b, w); };
    }
    const Json& log() const { return log_; }

private:
    Context ctx_;
    ResolutionCache cache_;
    Json log_ = Json::array();
};

inline FamilySpec parse_group_or_throw(const std::string& s) {
    const auto spec = parse_group_spec(s);
    if (!spec) throw std::invalid_argument("unsupported group '" + s + "' (expected D4..D64, Q8..Q64, SD16..SD64, C2..C64)");
    if (spec->n > 6) throw std::invalid_argument("group order above 64 is not supported: " + s);
    return *spec;
}

inline Json group_json(const FamilySpec& s) {
    return {{"label", to_string(s)}, {"family", family_name(s.family)}, {"order", std::uint64_t{1} << s.n}};
}

// "3", "1..5"
inline std::pair<int, int> parse_range(const std::string& s) {
    const auto dots = s.find("..");
    try {
        if (dots == std::string::npos) {
            const int v = std::stoi(s);
            return {v, v};
        }
        const int lo = std::stoi(s.substr(0, dots)), hi = std::stoi(s.substr(dots + 2));
        if (lo > hi) throw std::invalid_argument("empty range");
        return {lo, hi};
    } catch (const std::logic_error&) {
        throw std::invalid_argument("bad range '" + s + "' (expected N or A..B)");
    }
}

class Stopwatch {
public:
    double ms() const { return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0_).count(); }

private:
    std::chrono::steady_clock::time_point t0_ = std::chrono::steady_clock::now();
};

inline double round_ms(double ms) { return static_cast<double>(static_cast<long long>(ms * 1000 + 0.5)) / 1000; }

struct CohomologyOptions {
    int max_degree = 4;
    std::optional<int> window;
    std::optional<std::string> builder;
};

inline Report cmd_cohomology(const std::string& command, const std::string& group, const CohomologyOptions& opt, const Context& ctx) {
    Stopwatch sw;
    const auto spec = parse_group_or_throw(group);
    if (opt.max_degree < 1 || opt.max_degree > 12) throw std::invalid_argument("--max-degree must lie in 1..12");
    const auto g = make_group(spec);
    const std::string builder = opt.builder.value_or(default_builder(*g));
    // relations reach degree 6 (semidihedral U^2), so the window always covers them
    const int window = std::max({opt.window.value_or(0), opt.max_degree + 1, 7});
    Source src(ctx);
    const auto cx = make_complex(src(g, builder, window));
    NamedCohomology nc(cx, opt.max_degree);

    Report r{command, group_json(spec)};
    Json betti = Json::array();
    for (int d = 0; d <= opt.max_degree; ++d) betti.push_back(cx->dim(d));
    r.results["builder"] = builder;
    r.results["window"] = window;
    r.results["betti"] = betti;
    Json gens = Json::array();
    for (const auto& gen : nc.generators()) gens.push_back({{"name", gen.name}, {"degree", gen.degree}});
    r.results["generators"] = gens;
    Json basis = Json::object();
    for (int d = 1; d <= nc.named_degree(); ++d) {
        Json names = Json::array();
        for (const auto& m : nc.basis_monomials(d)) names.push_back(nc.monomial_name(m));
        basis[std::to_string(d)] = names;
    }
    r.results["basis"] = basis;
    Json rels = Json::array();
    for (const auto& rel : ring_relations(spec)) rels.push_back(rel);
    r.results["relations"] = rels;
    r.results["cache"] = src.log();

    const auto rep = verify_resolution(cx->resolution());
    r.items.push_back(make_item(to_string(spec) + " resolution", "free resolution, exact inside the window", rep.ok, rep.message));
    append(r.items, check_ring_relations(nc));
    r.timing_ms = round_ms(sw.ms());
    return r;
}

struct MasseyOptions {
    std::optional<HomSearchMode> mode;  // degree-one products through homomorphisms into Ubar
    EnumerationPolicy policy = EnumerationPolicy::ClassShifts;
    std::uint64_t seed = 1;
    std::optional<int> window;
    std::optional<std::vector<std::string>> expect;
};

inline std::string joined(const std::vector<std::string>& v, const std::string& sep) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
    return s;
}

inline Report cmd_massey(const std::string& command, const std::string& group, const std::vector<std::string>& names,
                         const MasseyOptions& opt, const Context& ctx) {
    Stopwatch sw;
    const auto spec = parse_group_or_throw(group);
    if (names.size() < 2) throw std::invalid_argument("a Massey product needs at least two classes");
    const auto g = make_group(spec);

    // Degrees first, on a small complex, to size the window.
    int product_degree = 0;
    {
        Source probe(ctx);
        NamedCohomology small(make_complex(probe(g, default_builder(*g), 7)));
        for (const auto& n : names) product_degree += small.evaluate(n).degree();
        product_degree -= static_cast<int>(names.size()) - 2;
    }
    const int window = std::max(opt.window.value_or(0), std::max(10, product_degree + 4));
    Source src(ctx);
    const auto cx = make_complex(src(g, default_builder(*g), window));
    NamedCohomology nc(cx, std::max(4, product_degree));
    const auto args = classes_of(nc, names);

    Report r{command, group_json(spec)};
    r.results["arguments"] = names;
    r.results["degree"] = product_degree;
    std::vector<CohClass> values;
    bool defined = false;
    std::string verdict;
    if (opt.mode) {
        for (const auto& a : args)
            if (a.degree() != 1) throw std::invalid_argument("--mode applies to products of degree-one classes only");
        const auto homs = hom_with_near_diagonal(args, *opt.mode);
        values = massey1_value_set(cx, homs);
        defined = !homs.empty();
        r.results["method"] = *opt.mode == HomSearchMode::Witness ? "witness" : "exhaustive";
        r.results["homomorphisms"] = homs.size();
    } else {
        ValueSetOptions vo;
        vo.policy = opt.policy;
        vo.seed = opt.seed;
        const auto vs = massey_value_set(args, vo);
        values = vs.values;
        defined = vs.defined;
        r.results["method"] = opt.policy == EnumerationPolicy::ClassShifts ? "class-shifts" : "sampled";
        r.results["systems"] = vs.systems;
        r.results["obstructed"] = vs.obstructed;
    }
    if (defined) {
        verdict = "defined";
    } else {
        bool degree_one = true;
        for (const auto& a : args) degree_one = degree_one && a.degree() == 1;
        std::optional<OrderObstruction> ob;
        if (degree_one) ob = order_obstruction(*g, hom_tables(args));
        verdict = ob ? "undefined (obstruction-proved: a run of length " + std::to_string(ob->length) + " forces order " +
                           std::to_string(ob->forced_order) + " on an element of order " + std::to_string(ob->element_order) + ")"
                     : "undefined (search-proved)";
    }
    r.results["defined"] = defined;
    r.results["verdict"] = verdict;
    Json vals = Json::array();
    for (const auto& v : values) vals.push_back(nc.name(v));
    r.results["values"] = vals;
    r.results["cache"] = src.log();

    const std::string label = "<" + joined(names, ",") + "> " + to_string(spec);
    if (opt.expect) {
        std::vector<CohClass> want;
        for (const auto& e : *opt.expect) want.push_back(nc.evaluate(e, product_degree));
        const bool ok = defined && same_set(values, want);
        r.items.push_back(make_item(label, label.substr(0, label.find(' ')) + " = {" + joined(*opt.expect, ", ") + "}", ok,
                                    "found " + names_of(nc, values)));
    } else {
        r.items.push_back(make_item(label, "value set computed", true, verdict + ", " + names_of(nc, values)));
    }
    r.timing_ms = round_ms(sw.ms());
    return r;
}

inline std::pair<int, int> default_verify_range(const std::string& scope) {
    if (scope == "appendix-a") return {1, 5};
    if (scope == "appendix-b") return {3, 6};
    return {3, 5};
}

inline Report cmd_verify(const std::string& command, const std::string& scope, std::optional<std::pair<int, int>> range, const Context& ctx) {
    Stopwatch sw;
    if (scope != "appendix-a" && scope != "appendix-b" && scope != "section-4" && scope != "all")
        throw std::invalid_argument("unknown scope '" + scope + "' (appendix-a, appendix-b, section-4, all)");
    Source src(ctx);
    Report r{command, nullptr};
    auto run = [&](const std::string& s) {
        const auto [lo, hi] = range.value_or(default_verify_range(s));
        if (s == "appendix-a") {
            if (lo < 0 || hi > 6) throw std::invalid_argument("appendix-a: n must lie in 0..6");
            append(r.items, verify_appendix_a_scope(lo, hi));
        } else if (s == "appendix-b") {
            append(r.items, verify_appendix_b_scope(lo, hi, src.function()));
        } else {
            append(r.items, verify_massey_scope(lo, hi, src.function()));
        }
        r.results["ranges"][s] = std::to_string(lo) + ".." + std::to_string(hi);
    };
    if (scope == "all") {
        for (const char* s : {"appendix-a", "appendix-b", "section-4"}) run(s);
    } else {
        run(scope);
    }
    r.results["scope"] = scope;
    r.results["cache"] = src.log();
    r.timing_ms = round_ms(sw.ms());
    return r;
}

inline int default_oracle_degree(std::size_t order) { return order <= 8 ? 4 : order <= 16 ? 3 : 2; }

inline Report cmd_oracle_betti(const std::string& command, const std::string& group, std::optional<int> max_degree, const Context& ctx) {
    Stopwatch sw;
    const auto spec = parse_group_or_throw(group);
    const auto g = make_group(spec);
    const int d = max_degree.value_or(default_oracle_degree(g->order()));
    const auto bar = bar_betti_oracle(*g, d);
    Source src(ctx);
    const auto res = src(g, "minimal", d + 1);
    Report r{command, group_json(spec)};
    r.results["bar"] = bar;
    r.results["minimal"] = std::vector<std::size_t>(res->ranks.begin(), res->ranks.begin() + d + 1);
    r.results["cache"] = src.log();
    for (int i = 0; i <= d; ++i) {
        const auto a = bar[static_cast<std::size_t>(i)], b = res->ranks[static_cast<std::size_t>(i)];
        r.items.push_back(make_item(to_string(spec) + " degree " + std::to_string(i), "bar complex and minimal resolution agree", a == b,
                                    "bar " + std::to_string(a) + ", minimal " + std::to_string(b)));
    }
    r.timing_ms = round_ms(sw.ms());
    return r;
}

inline Json matrix_rows(const F2Matrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        std::string s;
        for (std::size_t j = 0; j < m.cols(); ++j) s += m.get(i, j) ? '1' : '0';
        rows.push_back(s);
    }
    return rows;
}

inline Report cmd_rep(const std::string& command, std::optional<int> n, std::optional<std::size_t> m) {
    Stopwatch sw;
    if (!n && !m) throw std::invalid_argument("rep needs --n or --m");
    Report r{command, nullptr};
    if (n) {
        const auto a = build_appendix_a(*n);
        r.results["n"] = *n;
        Json mats;
        auto put = [&](const char* name, const F2Matrix& x, bool with_order) {
            Json e{{"size", x.rows()}, {"rows", matrix_rows(x)}};
            if (with_order) e["order"] = matrix_order(x);
            mats[name] = e;
        };
        put("A", a.A, true);
        put("B", a.B, true);
        put("C", a.C, false);
        put("x", a.x, true);
        put("y", a.y, true);
        if (a.z) put("z", *a.z, true);
        if (a.t) put("t", *a.t, true);
        r.results["matrices"] = mats;
        append(r.items, verify_appendix_a(*n));
    }
    if (m) {
        const auto o = order_of_B(*m);
        r.results["order_of_B"] = {{"m", *m}, {"order", o.order}};
        r.items.push_back(make_item("orderB m=" + std::to_string(*m), "order 2^ceil(log2 m) with B^(2^l) = Id + ones at distance 2^l",
                                    o.order == std::bit_ceil(*m) && o.pattern_ok, "order " + std::to_string(o.order)));
    }
    r.timing_ms = round_ms(sw.ms());
    return r;
}

}  // namespace f2coh::cli
