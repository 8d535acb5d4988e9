#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "subgroups/bivalent_tree.hpp"
#include "subgroups/pipeline.hpp"
#include "subgroups/reduction.hpp"

using namespace subgroups;

namespace {

int run_trees(int internal, int valence) {
    auto trees = enumerate_trees(internal, valence);
    std::cout << trees.size() << " trees in Bi(" << internal << "," << valence << ")\n";
    for (std::size_t i = 0; i < trees.size(); ++i) {
        const BivalentTree& t = trees[i];
        std::cout << "#" << i + 1 << " vertices=" << t.vertex_count() << " edges=";
        bool first = true;
        for (int v = 0; v < t.vertex_count(); ++v)
            for (int w : t.adj[v])
                if (v < w) {
                    if (!first) std::cout << ' ';
                    std::cout << v + 1 << '-' << w + 1;
                    first = false;
                }
        std::cout << " code=" << internal_canonical_code(t) << '\n';
    }
    return 0;
}

int run_enumerate(const RunConfig& cfg) {
    auto records = enumerate_subgroups(cfg);
    std::ostream* out = &std::cout;
    std::ofstream file;
    if (!cfg.out_path.empty()) {
        file.open(cfg.out_path);
        if (!file) {
            std::cerr << "error: cannot open " << cfg.out_path << '\n';
            return 1;
        }
        out = &file;
    }
    if (cfg.format == Format::Csv) {
        *out << csv_header() << '\n';
        for (const auto& r : records) *out << to_csv(r) << '\n';
    } else {
        for (const auto& r : records) *out << to_jsonl(r) << '\n';
    }
    std::cerr << records.size() << " records\n";
    return 0;
}

void print_record(const SubgroupRecord& r) {
    std::cout << "index: " << r.index << '\n';
    std::cout << "key: " << r.key << '\n';
    std::cout << "gfs:";
    for (const auto& c : r.gfs) std::cout << ' ' << c;
    std::cout << '\n';
    std::cout << "passport: sigma_s=" << r.sigma_s << " sigma_r=" << r.sigma_r
              << " sigma_t=" << r.sigma_t << '\n';
    std::cout << "genus: " << r.genus << "  e2: " << r.e2 << "  e3: " << r.e3
              << "  level: " << r.level << '\n';
    std::cout << "cusps:";
    for (const auto& c : r.cusps) {
        std::cout << " ({";
        for (std::size_t i = 0; i < c.members.size(); ++i) {
            if (i) std::cout << ',';
            std::cout << c.members[i];
        }
        std::cout << "}," << c.width << ")";
    }
    std::cout << '\n';
    std::cout << "generators:";
    for (const auto& g : r.generators) std::cout << ' ' << to_string(g);
    std::cout << '\n';
    std::cout << "congruence: " << (r.congruence ? "yes" : "no") << '\n';
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Finite-index subgroups of the modular group"};
    app.require_subcommand(1);
    int jobs = default_jobs_from_env();

    auto* trees_cmd = app.add_subcommand("trees", "enumerate bi-valent trees");
    int internal = 1, valence = 3;
    trees_cmd->add_option("--internal", internal, "number of internal vertices")->required();
    trees_cmd->add_option("--valence", valence, "internal valence");

    auto* enum_cmd = app.add_subcommand("enumerate", "enumerate subgroups of one index");
    int index = 2;
    std::string mode = "sl2", out_path, format = "jsonl";
    enum_cmd->add_option("--index", index, "subgroup index")->required();
    enum_cmd->add_option("--mode", mode, "diagrams | sl2 | gl2");
    enum_cmd->add_option("--out", out_path, "output path (default stdout)");
    enum_cmd->add_option("--format", format, "jsonl | csv");
    enum_cmd->add_option("--jobs", jobs, "worker count");

    auto* table_cmd = app.add_subcommand("table1", "diagram/sl2/gl2 counts per index");
    int max_index = 12;
    table_cmd->add_option("--max", max_index, "largest index")->required();
    table_cmd->add_option("--jobs", jobs, "worker count");

    auto* describe_cmd = app.add_subcommand("describe", "print one subgroup record");
    std::string key;
    describe_cmd->add_option("--key", key, "canonical passport key (hex)")->required();

    auto* member_cmd = app.add_subcommand("member", "matrix membership query");
    std::string matrix;
    member_cmd->add_option("--key", key, "canonical passport key (hex)")->required();
    member_cmd->add_option("--matrix", matrix, "matrix as [[a,b],[c,d]]")->required();

    auto* cong_cmd = app.add_subcommand("congruence", "congruence flag of a subgroup");
    cong_cmd->add_option("--key", key, "canonical passport key (hex)")->required();

    auto* over_cmd = app.add_subcommand("overgroups", "block systems / overgroups");
    int blocks = 1;
    over_cmd->add_option("--key", key, "canonical passport key (hex)")->required();
    over_cmd->add_option("--blocks", blocks, "number of blocks (overgroup index)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (trees_cmd->parsed()) return run_trees(internal, valence);
        if (enum_cmd->parsed()) {
            RunConfig cfg;
            cfg.indices = {index};
            cfg.mode = parse_mode(mode);
            cfg.format = parse_format(format);
            cfg.jobs = jobs;
            cfg.out_path = out_path;
            return run_enumerate(cfg);
        }
        if (table_cmd->parsed()) {
            std::cout << "index,diagrams,sl2,gl2\n";
            for (const auto& row : table1(max_index, jobs))
                std::cout << row.index << ',' << row.diagrams << ',' << row.sl2 << ',' << row.gl2
                          << '\n';
            return 0;
        }
        auto record = find_by_key(key, jobs);
        if (!record) {
            std::cerr << "error: no record with key " << key << '\n';
            return 1;
        }
        if (describe_cmd->parsed()) {
            print_record(*record);
            return 0;
        }
        if (member_cmd->parsed()) {
            ProjMatrix g = parse_matrix(matrix);
            KulkarniDiagram k = kulkarni_from_record(*record);
            bool member = is_member(k, g);
            std::cout << (member ? "true" : "false") << '\n';
            return 0;
        }
        if (cong_cmd->parsed()) {
            std::cout << (record->congruence ? "true" : "false") << '\n';
            return 0;
        }
        if (over_cmd->parsed()) {
            Passport p;
            p.degree = record->index;
            p.sigma_s = parse_cycles(record->sigma_s, p.degree);
            p.sigma_t = parse_cycles(record->sigma_t, p.degree);
            p.sigma_r = parse_cycles(record->sigma_r, p.degree);
            auto systems = block_systems(p, blocks);
            for (const auto& system : systems) {
                for (std::size_t i = 0; i < system.size(); ++i) {
                    if (i) std::cout << ' ';
                    std::cout << '{';
                    for (std::size_t j = 0; j < system[i].size(); ++j) {
                        if (j) std::cout << ',';
                        std::cout << system[i][j];
                    }
                    std::cout << '}';
                }
                std::cout << '\n';
            }
            std::cerr << systems.size() << " block systems\n";
            return 0;
        }
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 2;
    }
}
