#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "f2coh/cli.hpp"

using namespace f2coh;
using namespace f2coh::cli;

namespace {

std::string echo(int argc, char** argv) {
    std::string s;
    for (int i = 1; i < argc; ++i) s += (i > 1 ? " " : "") + std::string(argv[i]);
    return s;
}

int emit(const Report& r, const std::string& format) {
    if (format == "json") std::cout << report_to_json(r).dump(2) << "\n";
    else std::cout << report_to_text(r);
    return exit_code(r);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Mod-2 cohomology and Massey products of 2-groups of maximal class"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "text";
    std::string cache_dir;
    bool no_cache = false;
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--cache-dir", cache_dir, "Resolution cache directory (default: $F2COH_CACHE_DIR or the user cache dir)");
    app.add_flag("--no-cache", no_cache, "Build every resolution from scratch");

    std::string group;
    std::optional<int> window;

    auto* coh = app.add_subcommand("cohomology", "Betti numbers, named basis and ring relations");
    CohomologyOptions coh_opt;
    std::string builder;
    coh->add_option("group", group, "D4..D64, Q8..Q64, SD16..SD64, C2..C64")->required();
    coh->add_option("--max-degree", coh_opt.max_degree, "Top degree")->check(CLI::Range(1, 12));
    coh->add_option("--window", window, "Resolution window");
    coh->add_option("--builder", builder, "minimal, quaternion or semidihedral")->check(CLI::IsMember({"minimal", "quaternion", "semidihedral"}));

    auto* mas = app.add_subcommand("massey", "Value set of a Massey product");
    std::vector<std::string> classes, expect;
    std::string mode, policy = "class-shifts";
    std::uint64_t seed = 1;
    mas->add_option("group", group, "Group")->required();
    mas->add_option("classes", classes, "Class names, e.g. X X2 Y or X+Y")->required();
    mas->add_option("--mode", mode, "Degree-one products through homomorphisms into Ubar")->check(CLI::IsMember({"witness", "exhaustive"}));
    mas->add_option("--policy", policy, "Enumeration of defining systems")->check(CLI::IsMember({"class-shifts", "sampled"}));
    mas->add_option("--seed", seed, "Seed of the sampled policy");
    mas->add_option("--window", window, "Resolution window");
    mas->add_option("--expect", expect, "Expected value set; the item fails on a mismatch")->delimiter(',');

    auto* ver = app.add_subcommand("verify", "Run the registered checks");
    std::string scope, range;
    ver->add_option("scope", scope, "appendix-a, appendix-b, section-4 or all")
        ->required()
        ->check(CLI::IsMember({"appendix-a", "appendix-b", "section-4", "all"}));
    ver->add_option("--n", range, "N or A..B");

    auto* ora = app.add_subcommand("oracle", "Independent oracles");
    auto* betti = ora->add_subcommand("betti", "Bar-complex Betti numbers against the minimal resolution");
    ora->require_subcommand(1);
    std::optional<int> max_degree;
    betti->add_option("group", group, "Group")->required();
    betti->add_option("--max-degree", max_degree, "Top degree");

    auto* rep = app.add_subcommand("rep", "Unitriangular matrices of the witness representations");
    std::optional<int> rep_n;
    std::optional<std::size_t> rep_m;
    rep->add_option("--n", rep_n, "Build x, y, z, t of size 2^n+1")->check(CLI::Range(0, 6));
    rep->add_option("--m", rep_m, "Order of the superdiagonal matrix of size m")->check(CLI::Range(1, 4096));

    auto* cache = app.add_subcommand("cache", "Resolution cache");
    cache->require_subcommand(1);
    auto* cache_path = cache->add_subcommand("path", "Print the cache directory");
    auto* cache_clear = cache->add_subcommand("clear", "Delete cached resolutions");

    CLI11_PARSE(app, argc, argv);

    Context ctx;
    if (!cache_dir.empty()) ctx.cache_dir = cache_dir;
    ctx.use_cache = !no_cache;
    const std::string command = echo(argc, argv);

    try {
        if (*coh) {
            if (!builder.empty()) coh_opt.builder = builder;
            coh_opt.window = window;
            return emit(cmd_cohomology(command, group, coh_opt, ctx), format);
        }
        if (*mas) {
            MasseyOptions mo;
            if (!mode.empty()) mo.mode = mode == "witness" ? HomSearchMode::Witness : HomSearchMode::Exhaustive;
            mo.policy = policy == "sampled" ? EnumerationPolicy::SampledCoboundaries : EnumerationPolicy::ClassShifts;
            mo.seed = seed;
            mo.window = window;
            if (!expect.empty()) mo.expect = expect;
            return emit(cmd_massey(command, group, classes, mo, ctx), format);
        }
        if (*ver) {
            std::optional<std::pair<int, int>> r;
            if (!range.empty()) r = parse_range(range);
            return emit(cmd_verify(command, scope, r, ctx), format);
        }
        if (*betti) return emit(cmd_oracle_betti(command, group, max_degree, ctx), format);
        if (*rep) return emit(cmd_rep(command, rep_n, rep_m), format);
        if (*cache_path) {
            std::cout << ResolutionCache(ctx.cache_dir.value_or(default_cache_dir())).dir().string() << "\n";
            return 0;
        }
        if (*cache_clear) {
            const auto n = ResolutionCache(ctx.cache_dir.value_or(default_cache_dir())).clear();
            std::cout << "removed " << n << " cached resolution" << (n == 1 ? "" : "s") << "\n";
            return 0;
        }
    } catch (const std::exception& e) {
        if (format == "json") {
            Json j;
            j["command"] = command;
            j["error"] = e.what();
            std::cout << j.dump(2) << "\n";
        } else {
            std::cerr << "error: " << e.what() << "\n";
        }
        return 2;
    }
    return 0;
}
