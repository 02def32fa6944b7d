// Command-line workbench over the clutterkit library: analysis reports,
// blockers, cycle covers, packings, and projective-geometry embeddings for
// clutters, graphs, and binary matroids stored in plain-text files.

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <clutterkit/clutterkit.hpp>

using namespace clutterkit;
using ordered_json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitNone = 2;

struct Caps {
    int vertex_ground = kVertexEnumGroundCap;
    int vertex_members = kVertexEnumMemberCap;
    int cover_rank = kThreeCoverRankCap;
    int pg_width = kPgWidthCap;
    long embed_nodes = kEmbedNodeCap;
};

std::string weight_list(const Clutter& c, const FractionalPacking& p) {
    std::ostringstream os;
    write_packing(os, c, p);
    return os.str();
}

ordered_json packing_json(const Clutter& c, const FractionalPacking& p) {
    ordered_json out;
    out["value"] = p.value.str();
    out["denominator"] = p.denominator.str();
    ordered_json members = ordered_json::array();
    auto labels = c.member_labels();
    for (std::size_t j = 0; j < labels.size(); ++j) {
        ordered_json row;
        row["member"] = labels[j];
        row["weight"] = p.weights[j].str();
        members.push_back(std::move(row));
    }
    out["weights"] = std::move(members);
    return out;
}

ordered_json analyze_clutter(const Clutter& c, const Caps& caps) {
    ordered_json out;
    out["ground_size"] = c.ground_size();
    out["members"] = c.member_count();

    auto tau = covering_number(c);
    out["tau"] = tau ? ordered_json(*tau) : ordered_json("infinity");
    if (!c.has_empty_member()) {
        int nu = packing_number(c);
        out["nu"] = nu;
        out["packs"] = tau && *tau == nu;
    } else {
        out["nu"] = "undefined: empty member";
        out["packs"] = false;
    }
    out["tangled"] = is_tangled(c);
    out["binary"] = is_binary(c);

    ordered_json kwise;
    for (int k = 2; k <= 5; ++k) kwise[std::to_string(k)] = is_k_wise_intersecting(c, k);
    out["k_wise_intersecting"] = std::move(kwise);

    bool small_members = false;
    for (const auto& m : c.members())
        if (m.popcount() <= 1) small_members = true;
    if (small_members || c.member_count() == 0)
        out["chromatic_number"] = "undefined: member of cardinality at most one";
    else
        out["chromatic_number"] = chromatic_number(c).chi;

    if (!c.has_empty_member() && c.member_count() > 0)
        out["lp_value"] = max_fractional_packing(c).value.str();
    else
        out["lp_value"] = tau ? "0" : "undefined: empty member";

    try {
        auto ideal = is_ideal(c, caps.vertex_ground, caps.vertex_members);
        out["ideal"] = ideal.ideal;
        if (!ideal.ideal) {
            std::vector<std::string> witness;
            for (const auto& x : *ideal.fractional_vertex) witness.push_back(x.str());
            out["fractional_vertex"] = witness;
        }
    } catch (const CapExceeded&) {
        out["ideal"] = "skipped: cap";
    }
    return out;
}

void print_report(std::ostream& os, const ordered_json& j, const std::string& indent = "") {
    for (const auto& [key, value] : j.items()) {
        if (value.is_object()) {
            os << indent << key << ":\n";
            print_report(os, value, indent + "  ");
        } else if (value.is_array() && !value.empty() && value.front().is_object()) {
            os << indent << key << ":\n";
            for (const auto& item : value) {
                os << indent << "  -\n";
                print_report(os, item, indent + "    ");
            }
        } else {
            os << indent << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump())
               << "\n";
        }
    }
}

void emit(const ordered_json& j, bool as_json) {
    if (as_json)
        std::cout << j.dump(2) << "\n";
    else
        print_report(std::cout, j);
}

int cmd_analyze(const std::vector<std::string>& files, bool as_json, int jobs, const Caps& caps,
                const std::string& emit_lp_path) {
    std::vector<std::string> outputs(files.size());
    std::vector<int> codes(files.size(), kExitOk);
    std::atomic<std::size_t> cursor{0};

    auto work = [&]() {
        for (;;) {
            std::size_t i = cursor.fetch_add(1);
            if (i >= files.size()) return;
            std::ostringstream os;
            try {
                Clutter c = read_clutter_file(files[i]).clutter;
                ordered_json report;
                report["file"] = files[i];
                ordered_json body = analyze_clutter(c, caps);
                for (auto& [k, v] : body.items()) report[k] = v;
                if (as_json)
                    os << report.dump(2) << "\n";
                else
                    print_report(os, report);
                if (!emit_lp_path.empty()) {
                    std::ofstream lp(emit_lp_path);
                    write_lp(lp, covering_lp(c));
                }
            } catch (const std::exception& e) {
                os << "error: " << files[i] << ": " << e.what() << "\n";
                codes[i] = kExitError;
            }
            outputs[i] = os.str();
        }
    };

    int thread_count = std::max(1, std::min<int>(jobs, static_cast<int>(files.size())));
    std::vector<std::thread> pool;
    for (int t = 0; t < thread_count; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();

    int code = kExitOk;
    for (std::size_t i = 0; i < files.size(); ++i) {
        std::cout << outputs[i];
        if (codes[i] != kExitOk) code = codes[i];
    }
    return code;
}

int cmd_blocker(const std::string& file, bool as_json, const std::string& out_path) {
    Clutter c = read_clutter_file(file).clutter;
    Clutter b = blocker(c);
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        write_clutter(out, b);
        return kExitOk;
    }
    if (as_json) {
        ordered_json j;
        j["ground_size"] = b.ground_size();
        j["members"] = b.member_labels();
        std::cout << j.dump(2) << "\n";
    } else {
        write_clutter(std::cout, b);
    }
    return kExitOk;
}

int cmd_cover(const std::string& file, int k, bool as_json, const Caps& caps) {
    Graph g = read_graph_file(file);
    auto cover = k_cycle_cover(g, k, caps.cover_rank);
    ordered_json j;
    j["k"] = k;
    if (!cover) {
        j["cover"] = "none";
        emit(j, as_json);
        return kExitNone;
    }
    ordered_json cycles = ordered_json::array();
    for (const auto& c : *cover) {
        std::vector<int> labels;
        for (int e : c.support()) labels.push_back(e + 1);
        cycles.push_back(labels);
    }
    j["cover"] = std::move(cycles);
    emit(j, as_json);
    return kExitOk;
}

int cmd_seven_four(const std::string& file, bool as_json, const Caps& caps) {
    Graph g = read_graph_file(file);
    auto bad = bridges(g);
    if (!bad.empty()) {
        std::cerr << "error: graph has a bridge, edge " << bad.front() << "\n";
        return kExitError;
    }
    CycleCover cover = seven_cycle_four_cover(g, caps.cover_rank);
    bool verified = verify_cycle_cover(g, cover, 4);
    ordered_json j;
    ordered_json cycles = ordered_json::array();
    for (const auto& c : cover.cycles) {
        std::vector<int> labels;
        for (int e : c.support()) labels.push_back(e + 1);
        cycles.push_back(labels);
    }
    j["cycles"] = std::move(cycles);
    j["edge_multiplicity"] = 4;
    j["verified"] = verified;
    emit(j, as_json);
    return verified ? kExitOk : kExitError;
}

int cmd_pack(const std::string& file, bool assume_ideal, bool as_json, const Caps& caps) {
    Clutter c = read_clutter_file(file).clutter;
    QuarterPackingResult r =
        quarter_packing(c, assume_ideal, caps.vertex_ground, caps.vertex_members, caps.pg_width);
    if (as_json) {
        ordered_json j = packing_json(c, r.packing);
        j["idealness_assumed"] = r.idealness_assumed;
        j["pg_rank"] = r.pg_rank;
        j["deleted_elements"] = r.deleted;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << weight_list(c, r.packing);
        std::cout << "idealness_assumed: " << (r.idealness_assumed ? "true" : "false") << "\n";
    }
    return kExitOk;
}

int cmd_embed(const std::string& file, int lmax, bool as_json, const Caps& caps) {
    Clutter c = read_clutter_file(file).clutter;
    auto e = embeds_pg(c, lmax, caps.embed_nodes, caps.pg_width);
    ordered_json j;
    if (!e) {
        j["embeds"] = "none";
        emit(j, as_json);
        return kExitNone;
    }
    j["geometry_order"] = e->ell;  // PG(ell-1, 2)
    ordered_json members = ordered_json::array();
    auto labels = c.member_labels();
    for (std::size_t idx : e->member_indices) members.push_back(labels[idx]);
    j["members"] = std::move(members);
    j["element_classes"] = e->element_classes;
    j["validated"] = validate_embedding(c, *e);
    emit(j, as_json);
    return kExitOk;
}

int cmd_demo(const std::string& which, int ell, bool as_json, const Caps& caps) {
    ordered_json j;
    if (which == "petersen") {
        Graph g = petersen();
        j["vertices"] = g.vertex_count;
        j["edges"] = g.edge_count();
        j["cycle_space_rank"] = cycle_space(g).rank();
        j["bridgeless"] = bridges(g).empty();
        j["two_cycle_cover"] = k_cycle_cover(g, 2).has_value();
        j["three_cycle_cover"] = k_cycle_cover(g, 3).has_value();
    } else if (which == "q6") {
        Clutter c = Clutter::from_members(6, {{1, 3, 6}, {1, 4, 5}, {2, 3, 5}, {2, 4, 6}});
        j = analyze_clutter(c, caps);
        j["blocker"] = blocker(c).member_labels();
    } else if (which == "fano") {
        BinaryMatroid m = fano();
        j["elements"] = m.element_count();
        j["rank"] = m.rank();
        j["circuits"] = circuits(m).size();
        auto cover = three_cycle_cover(m);
        ordered_json cycles = ordered_json::array();
        if (cover)
            for (const auto& c : cover->cycles) cycles.push_back(m.labels_of(c));
        j["three_cycle_cover"] = std::move(cycles);
    } else if (which == "wagner") {
        BinaryMatroid w = wagner_dual();
        j["elements"] = w.element_count();
        j["rank"] = w.rank();
        Graph v8 = wagner_graph();
        ThreeCycleCover cuts{{cut(v8, {1, 6, 7, 8}), cut(v8, {1, 7}), cut(v8, {2, 4})}};
        j["cut_cover_verified"] = is_three_cycle_cover(w, cuts);
        ordered_json cycles = ordered_json::array();
        for (const auto& c : cuts.cycles) cycles.push_back(w.labels_of(c));
        j["cut_cover"] = std::move(cycles);
    } else if (which == "pg") {
        BinaryMatroid m = projective_geometry(ell);
        j["order"] = ell;
        j["elements"] = m.element_count();
        j["rank"] = m.rank();
        auto cocycles = m.cocycles().enumerate_points();
        j["cocycles"] = cocycles.size();
        std::vector<int> sizes;
        for (const auto& d : cocycles)
            if (!d.zero()) sizes.push_back(d.popcount());
        j["nonempty_cocycle_sizes"] = sizes;
        Clutter c = cuboid(ZeroOneSet::from_space(m.cocycles()));
        j["cuboid_members"] = c.member_count();
        j["ell_wise_intersecting"] = is_k_wise_intersecting(c, ell);
        if (ell <= 3) {
            PgPackingResult pk = pg_packing(ell - 1);
            j["uniform_packing_value"] = pk.packing.value.str();
            j["uniform_packing_denominator"] = pk.packing.denominator.str();
        }
    } else {
        std::cerr << "error: unknown fixture '" << which << "'\n";
        return kExitError;
    }
    emit(j, as_json);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"clutterkit: exact workbench for clutters, cuboids, binary matroids and cycle covers"};
    app.require_subcommand(1);
    app.fallthrough();

    Caps caps;
    bool as_json = false;
    app.add_flag("--json", as_json, "mirror every report as JSON with stable key order");
    app.add_option("--vertex-cap", caps.vertex_ground, "ground-size cap for vertex enumeration")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    app.add_option("--member-cap", caps.vertex_members, "member-count cap for vertex enumeration")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    app.add_option("--cover-rank-cap", caps.cover_rank, "cycle-space rank cap for cover searches")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    app.add_option("--pg-width-cap", caps.pg_width, "width cap for projective-geometry subspaces")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    app.add_option("--embed-node-cap", caps.embed_nodes, "candidate-subset cap for embedding searches")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);

    auto* analyze = app.add_subcommand("analyze", "clutter report: tau, nu, binary, k-wise, chromatic, ideal");
    std::vector<std::string> analyze_files;
    int jobs = 1;
    std::string emit_lp_path;
    analyze->add_option("files", analyze_files, "clutter files")->required()->check(CLI::ExistingFile);
    analyze->add_option("--jobs", jobs, "parallel workers across input files")->capture_default_str();
    analyze->add_option("--emit-lp", emit_lp_path, "write the covering LP of the (last) input");

    auto* blocker_cmd = app.add_subcommand("blocker", "minimal covers of a clutter");
    std::string blocker_file, blocker_out;
    blocker_cmd->add_option("file", blocker_file)->required()->check(CLI::ExistingFile);
    blocker_cmd->add_option("--out", blocker_out, "write the blocker to a clutter file");

    auto* cover = app.add_subcommand("cover", "k cycles of a graph covering every edge");
    std::string cover_file;
    int cover_k = 3;
    cover->add_option("file", cover_file)->required()->check(CLI::ExistingFile);
    cover->add_option("--k", cover_k, "number of cycles")->required();

    auto* seven = app.add_subcommand("seven-four", "seven cycles using every edge exactly four times");
    std::string seven_file;
    seven->add_option("file", seven_file)->required()->check(CLI::ExistingFile);

    auto* pack = app.add_subcommand("pack", "value-two packing with weights in {0, 1/4, 1/2, 1}");
    std::string pack_file;
    bool assume_ideal = false;
    pack->add_option("file", pack_file)->required()->check(CLI::ExistingFile);
    pack->add_flag("--assume-ideal", assume_ideal, "trust idealness above the verification caps");

    auto* embed = app.add_subcommand("embed", "smallest projective geometry embedded in a clutter");
    std::string embed_file;
    int lmax = 3;
    embed->add_option("file", embed_file)->required()->check(CLI::ExistingFile);
    embed->add_option("--lmax", lmax, "largest geometry order to try")->capture_default_str();

    auto* demo = app.add_subcommand("demo", "built-in fixtures: petersen, q6, fano, wagner, pg <order>");
    std::string demo_which;
    int demo_ell = 3;
    demo->add_option("fixture", demo_which)->required();
    demo->add_option("order", demo_ell, "projective geometry order (pg fixture)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);  // prints help or the parse error
        return code == 0 ? kExitOk : kExitError;
    }

    try {
        if (*analyze) return cmd_analyze(analyze_files, as_json, jobs, caps, emit_lp_path);
        if (*blocker_cmd) return cmd_blocker(blocker_file, as_json, blocker_out);
        if (*cover) return cmd_cover(cover_file, cover_k, as_json, caps);
        if (*seven) return cmd_seven_four(seven_file, as_json, caps);
        if (*pack) return cmd_pack(pack_file, assume_ideal, as_json, caps);
        if (*embed) return cmd_embed(embed_file, lmax, as_json, caps);
        if (*demo) return cmd_demo(demo_which, demo_ell, as_json, caps);
    } catch (const CapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
