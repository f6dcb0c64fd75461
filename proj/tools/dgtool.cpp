// Command-line front end: group-file analysis, clique/coclique/density
// queries, block systems, special-hypergraph colouring, covering-subgroup
// verification, conjugacy-class counting, the exceptional-group search, and
// catalog verification.
//
// Exit codes: 0 pass, 1 property failure, 2 usage or parse error, 3 cap
// exceeded.
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dg/action.hpp"
#include "dg/blocks.hpp"
#include "dg/catalog.hpp"
#include "dg/classes.hpp"
#include "dg/covering.hpp"
#include "dg/derangement.hpp"
#include "dg/error.hpp"
#include "dg/hypergraph.hpp"
#include "dg/search.hpp"

namespace {

// Accumulates key/value rows; prints aligned "key: value" lines or
// machine-readable "key=value" lines.
class Report {
  public:
    explicit Report(bool kv) : kv_(kv) {}

    void add(const std::string& key, const std::string& value) {
        rows_.emplace_back(key, value);
    }
    void add(const std::string& key, std::size_t value) {
        add(key, std::to_string(value));
    }
    void add(const std::string& key, int value) {
        add(key, std::to_string(value));
    }
    void add(const std::string& key, bool value) {
        add(key, std::string(value ? "true" : "false"));
    }

    void print(std::ostream& out) const {
        std::size_t width = 0;
        for (const auto& [k, v] : rows_) width = std::max(width, k.size());
        for (const auto& [k, v] : rows_) {
            if (kv_) {
                out << k << "=" << v << "\n";
            } else {
                out << k << std::string(width - k.size(), ' ') << " : " << v
                    << "\n";
            }
        }
    }

  private:
    bool kv_;
    std::vector<std::pair<std::string, std::string>> rows_;
};

std::string witness_string(const dg::CliqueWitness& w) {
    std::string s;
    for (const dg::Perm& p : w) {
        if (!s.empty()) s += " | ";
        s += dg::format_cycles(p);
    }
    return s;
}

std::string blocks_string(
    const std::vector<std::pair<std::size_t, std::size_t>>& profile) {
    if (profile.empty()) return "none (primitive)";
    std::string s;
    for (const auto& [count, size] : profile) {
        if (!s.empty()) s += ",";
        s += std::to_string(count) + "x" + std::to_string(size);
    }
    return s;
}

std::string join(const std::vector<std::string>& parts,
                 const std::string& sep) {
    std::string s;
    for (const std::string& p : parts) {
        if (!s.empty()) s += sep;
        s += p;
    }
    return s;
}

int run_analyze(const std::string& file, bool kv) {
    dg::GroupRecord rec = dg::load_group_file(file);
    dg::AnalyzeReport rep = dg::analyze(rec);
    Report out(kv);
    out.add("name", rep.name.empty() ? std::string("(unnamed)") : rep.name);
    out.add("degree", rep.degree);
    out.add("transitive", rep.transitive);
    if (rep.transitive) {
        out.add("order", rep.order);
        out.add("derangements", rep.derangement_count);
        out.add("block_systems", blocks_string(rep.block_profile));
        out.add("omega", rep.omega);
        out.add("omega_exact", rep.omega_exact);
        out.add("witness", witness_string(rep.witness));
        if (rep.alpha_known) {
            out.add("alpha", rep.alpha);
            out.add("stabilizer_order", rep.stabilizer_order);
            out.add("rho", rep.rho.str());
            out.add("rho_bound", rep.rho_bound.str());
            out.add("product_bound_holds", rep.product_bound_holds);
            out.add("product_bound_tight", rep.product_bound_tight);
            out.add("density_bound_holds", rep.density_bound_holds);
            out.add("density_bound_tight", rep.density_bound_tight);
        }
    }
    out.add("classification", rep.classification);
    if (!rep.notes.empty()) out.add("notes", join(rep.notes, "; "));
    out.print(std::cout);
    if (rep.classification == "undecided") return 3;
    if (rep.alpha_known &&
        (!rep.product_bound_holds || !rep.density_bound_holds))
        return 1;
    return 0;
}

int run_clique(const std::string& file, std::size_t size, bool kv) {
    dg::GroupRecord rec = dg::load_group_file(file);
    dg::DerangementGraph graph(dg::group_of(rec));
    std::optional<dg::CliqueWitness> witness = dg::has_kclique(graph, size);
    Report out(kv);
    out.add("size", size);
    out.add("found", witness.has_value());
    if (witness) out.add("witness", witness_string(*witness));
    out.print(std::cout);
    return witness ? 0 : 1;
}

int run_coclique(const std::string& file, bool kv) {
    dg::GroupRecord rec = dg::load_group_file(file);
    dg::DerangementGraph graph(dg::group_of(rec));
    std::vector<dg::Perm> witness = dg::max_coclique(graph);
    Report out(kv);
    out.add("alpha", witness.size());
    out.add("witness", witness_string(witness));
    out.print(std::cout);
    return 0;
}

int run_density(const std::string& file, bool kv) {
    dg::GroupRecord rec = dg::load_group_file(file);
    dg::CliqueCocliqueReport rep = dg::clique_coclique_check(dg::group_of(rec));
    Report out(kv);
    out.add("degree", rep.degree);
    out.add("order", rep.order);
    out.add("alpha", rep.alpha);
    out.add("omega", rep.omega);
    out.add("stabilizer_order", rep.stabilizer_order);
    out.add("rho", rep.rho.str());
    out.add("rho_bound", rep.rho_bound.str());
    out.add("product_bound_holds", rep.product_bound_holds);
    out.add("product_bound_tight", rep.product_bound_tight);
    out.add("density_bound_holds", rep.density_bound_holds);
    out.add("density_bound_tight", rep.density_bound_tight);
    out.print(std::cout);
    return rep.product_bound_holds && rep.density_bound_holds ? 0 : 1;
}

int run_blocks(const std::string& file, bool kv) {
    dg::GroupRecord rec = dg::load_group_file(file);
    dg::PermGroup g = dg::group_of(rec);
    std::vector<dg::BlockSystem> systems = dg::minimal_block_systems(g);
    Report out(kv);
    out.add("count", systems.size());
    for (std::size_t i = 0; i < systems.size(); ++i) {
        std::ostringstream row;
        for (const auto& block : systems[i].blocks()) {
            row << "{";
            for (std::size_t j = 0; j < block.size(); ++j) {
                if (j) row << ",";
                row << block[j];
            }
            row << "}";
        }
        out.add("system_" + std::to_string(i), row.str());
        dg::BlocksAction act = dg::blocks_action(g, systems[i]);
        out.add("system_" + std::to_string(i) + "_image_order",
                act.image.order());
        out.add("system_" + std::to_string(i) + "_kernel_order",
                act.kernel.order());
    }
    out.print(std::cout);
    return 0;
}

int run_hypergraph(const std::string& file, int a, int b, int colours,
                   std::uint64_t trials, std::uint64_t seed, bool exact,
                   bool kv) {
    dg::GroupRecord rec = dg::load_group_file(file);
    dg::PermGroup g = dg::group_of(rec);
    dg::PermGroup stab = dg::stabilizer_point(g, 0);
    std::vector<dg::ABHypergraph> hypergraphs =
        dg::enumerate_special_hypergraphs(g, a, b);
    Report out(kv);
    out.add("special_hypergraphs", hypergraphs.size());
    bool all_claimed_coloured = true;
    for (std::size_t i = 0; i < hypergraphs.size(); ++i) {
        const dg::ABHypergraph& h = hypergraphs[i];
        std::string key = "hypergraph_" + std::to_string(i);
        out.add(key + "_edges", h.edges().size());
        bool fixed = dg::point_stabilizer_fixes_edge(stab, h).has_value();
        out.add(key + "_stabilizer_fixes_edge", fixed);
        std::optional<dg::Colouring> colouring =
            dg::random_colouring_search(h, colours, trials, seed);
        out.add(key + "_coloured", colouring.has_value());
        if (fixed && !colouring) all_claimed_coloured = false;
        if (exact && h.vertex_count() <= 32)
            out.add(key + "_chromatic", dg::exact_chromatic_number(h));
    }
    out.print(std::cout);
    return all_claimed_coloured ? 0 : 1;
}

dg::PermGroup resolve_subgroup(const dg::PermGroup& ambient,
                               const std::string& ref) {
    if (ref == "sigma1-kernel") return dg::index3_kernel(ambient);
    if (ref.rfind("stabilizer:", 0) == 0) {
        int point = std::stoi(ref.substr(11));
        return dg::stabilizer_point(ambient, point);
    }
    dg::GroupRecord rec = dg::load_group_file(ref);
    if (rec.degree != ambient.degree())
        throw dg::PreconditionViolation(
            "subgroup file degree does not match the ambient group");
    return dg::group_of(rec);
}

int run_covering(const std::string& ambient_file, const std::string& normal_ref,
                 const std::string& subgroup_ref, bool kv) {
    dg::GroupRecord rec = dg::load_group_file(ambient_file);
    dg::PermGroup ambient = dg::group_of(rec);
    dg::PermGroup normal = resolve_subgroup(ambient, normal_ref);
    dg::PermGroup subgroup = resolve_subgroup(ambient, subgroup_ref);
    dg::CoveringInstance inst(ambient, normal, subgroup);
    Report out(kv);
    out.add("index_ambient_normal", inst.index());
    bool covering = dg::is_covering_subgroup(inst);
    out.add("is_covering", covering);
    if (!covering || inst.index() != 3) {
        out.print(std::cout);
        return covering ? 0 : 1;
    }
    dg::CoveringReport rep = dg::verify_neumann_praeger_n3(inst);
    out.add("index_normal_subgroup", rep.index_normal_subgroup);
    out.add("coset_degree", rep.coset_degree);
    out.add("omega", rep.omega);
    out.add("omega_bound_holds", rep.omega_bound_holds);
    out.add("degree_bound_holds", rep.degree_bound_holds);
    out.add("subgroup_bound_holds", rep.subgroup_bound_holds);
    out.add("subgroup_bound_attained", rep.subgroup_bound_attained);
    out.print(std::cout);
    return rep.omega_bound_holds && rep.degree_bound_holds &&
                   rep.subgroup_bound_holds
               ? 0
               : 1;
}

int run_classes(const std::string& group_file, const std::string& ambient_file,
                int kappa, bool kv) {
    dg::GroupRecord grec = dg::load_group_file(group_file);
    dg::GroupRecord arec = dg::load_group_file(ambient_file);
    dg::PermGroup n = dg::group_of(grec);
    dg::PermGroup a = dg::group_of(arec);
    std::size_t t = dg::aut_class_count(n, a);
    Report out(kv);
    out.add("classes", t);
    bool match = true;
    if (kappa >= 1) {
        std::uint64_t formula =
            dg::stars_and_bars(t, static_cast<std::uint64_t>(kappa));
        std::size_t walked = dg::brute_force_power_classes(n, a, kappa);
        out.add("kappa", kappa);
        out.add("multiset_formula", static_cast<std::size_t>(formula));
        out.add("orbit_walk", walked);
        match = formula == walked;
        out.add("match", match);
    }
    out.print(std::cout);
    return match ? 0 : 1;
}

int run_search(int p, std::uint64_t budget, std::uint64_t seed,
               std::size_t stop_after, const std::string& emit_dir, bool kv) {
    if (stop_after == SIZE_MAX) stop_after = dg::expected_exceptional_classes(p);
    dg::SearchOutcome outcome =
        dg::search_exceptional(p, budget, seed, stop_after);
    Report out(kv);
    out.add("p", p);
    out.add("budget", static_cast<std::size_t>(budget));
    out.add("seed", static_cast<std::size_t>(seed));
    out.add("restarts_used", static_cast<std::size_t>(outcome.restarts_used));
    out.add("classes_found", outcome.records.size());
    for (std::size_t i = 0; i < outcome.records.size(); ++i) {
        const dg::GroupRecord& rec = outcome.records[i];
        const dg::GroupFingerprint& fp = outcome.fingerprints[i];
        std::string key = "class_" + std::to_string(i);
        out.add(key + "_name", rec.name);
        out.add(key + "_order", fp.order);
        out.add(key + "_derangements", fp.derangement_count);
        out.add(key + "_omega", fp.omega);
        out.add(key + "_blocks", blocks_string(fp.block_profile));
    }
    if (!emit_dir.empty()) {
        std::filesystem::create_directories(emit_dir);
        for (const dg::GroupRecord& rec : outcome.records) {
            std::string path = emit_dir + "/" + rec.name + ".grp";
            dg::save_group_file(path, rec);
            out.add("written", path);
        }
    }
    out.print(std::cout);
    return outcome.records.size() >= dg::expected_exceptional_classes(p) ? 0
                                                                         : 1;
}

int run_verify_catalog(const std::string& dir, bool kv) {
    dg::CatalogSummary summary = dg::verify_catalog(dir);
    Report out(kv);
    out.add("records", summary.records.size());
    out.add("failures", summary.failures);
    for (const dg::RecordCheck& check : summary.records) {
        std::string label = check.name.empty()
                                ? std::filesystem::path(check.file)
                                      .filename()
                                      .string()
                                : check.name;
        std::string value = check.pass ? "pass" : "FAIL";
        if (!check.messages.empty()) value += " (" + join(check.messages, "; ") + ")";
        out.add(label, value);
    }
    out.print(std::cout);
    return summary.failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"derangement-graph verification toolkit"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "text";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "kv"}));

    std::string file, ambient_file, normal_ref, subgroup_ref, emit_dir, dir;
    std::size_t clique_size = 4;
    int a = 2, b = 1, colours = 4, kappa = 0, p = 3;
    std::uint64_t trials = 1000000, seed = 0, budget = 10000;
    std::size_t stop_after = SIZE_MAX;
    bool exact = false;

    auto* analyze_cmd =
        app.add_subcommand("analyze", "full report for one group file");
    analyze_cmd->add_option("file", file, "group file")->required();

    auto* clique_cmd =
        app.add_subcommand("clique", "decide a k-clique in the derangement graph");
    clique_cmd->add_option("file", file, "group file")->required();
    clique_cmd->add_option("--size", clique_size, "clique size")
        ->default_val(4);

    auto* coclique_cmd = app.add_subcommand(
        "coclique", "maximum intersecting family (independent set)");
    coclique_cmd->add_option("file", file, "group file")->required();

    auto* density_cmd = app.add_subcommand(
        "density", "intersection density and the clique-coclique bounds");
    density_cmd->add_option("file", file, "group file")->required();

    auto* blocks_cmd =
        app.add_subcommand("blocks", "minimal invariant block systems");
    blocks_cmd->add_option("file", file, "group file")->required();

    auto* hyper_cmd = app.add_subcommand(
        "hypergraph-chroma",
        "colour the special hypergraphs of a group action");
    hyper_cmd->add_option("--group", file, "group file")->required();
    hyper_cmd->add_option("--a", a, "part size")->required();
    hyper_cmd->add_option("--b", b, "part count")->required();
    hyper_cmd->add_option("--colours", colours, "colour count")->default_val(4);
    hyper_cmd->add_option("--trials", trials, "random maps to try")
        ->default_val(1000000);
    hyper_cmd->add_option("--seed", seed, "random seed")->default_val(0);
    hyper_cmd->add_flag("--exact", exact, "also compute exact chromatic numbers");

    auto* covering_cmd = app.add_subcommand(
        "covering", "covering-subgroup checks and the index-3 bound");
    covering_cmd->add_option("--ambient", ambient_file, "ambient group file")
        ->required();
    covering_cmd
        ->add_option("--normal", normal_ref,
                     "group file, or 'sigma1-kernel'")
        ->required();
    covering_cmd
        ->add_option("--subgroup", subgroup_ref,
                     "group file, or 'stabilizer:<point>'")
        ->required();

    auto* classes_cmd = app.add_subcommand(
        "classes", "conjugation-orbit counts and the multiset identity");
    classes_cmd->add_option("--group", file, "group file")->required();
    classes_cmd->add_option("--ambient", ambient_file, "conjugating group file")
        ->required();
    classes_cmd->add_option("--kappa", kappa, "tuple length to verify");

    auto* search_cmd = app.add_subcommand(
        "search-exceptional", "randomized search for the 4-clique-free groups");
    search_cmd->add_option("--p", p, "block size prime (3 or 5)")->required();
    search_cmd->add_option("--budget", budget, "restart budget")
        ->default_val(10000);
    search_cmd->add_option("--seed", seed, "random seed")->default_val(0);
    search_cmd->add_option("--stop-after", stop_after,
                           "stop after this many classes (0 = full budget)");
    search_cmd->add_option("--emit-dir", emit_dir,
                           "write found groups to this directory");

    auto* verify_cmd = app.add_subcommand(
        "verify-catalog", "check every catalog record against its tags");
    verify_cmd->add_option("dir", dir, "catalog directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    bool kv = format == "kv";
    try {
        if (analyze_cmd->parsed()) return run_analyze(file, kv);
        if (clique_cmd->parsed()) return run_clique(file, clique_size, kv);
        if (coclique_cmd->parsed()) return run_coclique(file, kv);
        if (density_cmd->parsed()) return run_density(file, kv);
        if (blocks_cmd->parsed()) return run_blocks(file, kv);
        if (hyper_cmd->parsed())
            return run_hypergraph(file, a, b, colours, trials, seed, exact, kv);
        if (covering_cmd->parsed())
            return run_covering(ambient_file, normal_ref, subgroup_ref, kv);
        if (classes_cmd->parsed())
            return run_classes(file, ambient_file, kappa, kv);
        if (search_cmd->parsed())
            return run_search(p, budget, seed, stop_after, emit_dir, kv);
        if (verify_cmd->parsed()) return run_verify_catalog(dir, kv);
    } catch (const dg::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const dg::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const dg::PreconditionViolation& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const dg::CapExceeded& e) {
        std::cerr << "cap exceeded: " << e.what() << "\n";
        return 3;
    } catch (const dg::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
