#include "subgroups/pipeline.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <stdexcept>

#include <json.hpp>

#include "subgroups/reduction.hpp"

#if defined(SUBGROUPS_HAVE_OPENMP)
#include <omp.h>
#endif

namespace subgroups {

using nlohmann::json;

Mode parse_mode(const std::string& s) {
    if (s == "diagrams") return Mode::Diagrams;
    if (s == "sl2") return Mode::Sl2;
    if (s == "gl2") return Mode::Gl2;
    throw std::invalid_argument("mode must be diagrams, sl2 or gl2");
}

Format parse_format(const std::string& s) {
    if (s == "jsonl") return Format::Jsonl;
    if (s == "csv") return Format::Csv;
    throw std::invalid_argument("format must be jsonl or csv");
}

int default_jobs_from_env() {
    if (const char* env = std::getenv("SUBGROUPS_JOBS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    return 1;
}

SubgroupRecord classify_diagram(const TreeDiagram& d) {
    SubgroupRecord r;
    const BivalentTree& t = d.oriented.tree;
    r.index = d.index();
    for (int v = 0; v < t.vertex_count(); ++v)
        for (int w : t.adj[v])
            if (v < w) r.tree_edges.emplace_back(v + 1, w + 1);
    for (int v = 0; v < t.internal_count; ++v) {
        auto cyc = d.oriented.cycle_at(v);
        r.orientation.push_back({cyc[0] + 1, cyc[1] + 1, cyc[2] + 1});
    }
    for (int v : d.coloring.blue) r.blue.push_back(v + 1);
    for (int v : d.coloring.red) r.red.push_back(v + 1);
    for (auto [x, y] : d.coloring.pairs) r.pairs.emplace_back(x + 1, y + 1);

    KulkarniDiagram k = attach_farey_symbol(d);
    r.gfs = gfs_strings(k);
    GroupInvariants inv = invariants(k);
    r.genus = inv.genus;
    r.e2 = inv.e2;
    r.e3 = inv.e3;
    r.level = inv.level;

    auto orbs = cusp_orbits(k);
    for (const auto& orb : orbs) {
        CuspClass cc;
        for (int pos : orb)
            cc.members.push_back(pos == 1 ? to_string(make_cusp(1, 0)) : to_string(k.gfs[pos - 1]));
        cc.width = cusp_width(k, orb);
        r.cusps.push_back(std::move(cc));
    }
    r.generators = side_pairing_generators(k);

    auto reps = coset_representatives(k);
    Passport p = passport(k, reps);
    r.sigma_s = cycle_string(p.sigma_s);
    r.sigma_r = cycle_string(p.sigma_r);
    r.sigma_t = cycle_string(p.sigma_t);
    r.key = key_hex(canonical_passport(p));
    Perm sigma_lower = theta(k, reps, mat_lower());
    r.congruence = is_congruence(p.sigma_t, sigma_lower);
    return r;
}

namespace {

std::string gl2_hex_of(const SubgroupRecord& r) {
    int degree = r.index;
    Passport p;
    p.degree = degree;
    p.sigma_s = parse_cycles(r.sigma_s, degree);
    p.sigma_t = parse_cycles(r.sigma_t, degree);
    p.sigma_r = parse_cycles(r.sigma_r, degree);
    return key_hex(gl2_key(p));
}

std::vector<SubgroupRecord> classify_all(const std::vector<TreeDiagram>& diagrams, int jobs) {
    std::vector<SubgroupRecord> records(diagrams.size());
    if (jobs <= 1) {
        for (std::size_t i = 0; i < diagrams.size(); ++i) records[i] = classify_diagram(diagrams[i]);
        return records;
    }
#if defined(SUBGROUPS_HAVE_OPENMP)
    int n = static_cast<int>(diagrams.size());
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
    for (int i = 0; i < n; ++i) records[static_cast<std::size_t>(i)] = classify_diagram(diagrams[static_cast<std::size_t>(i)]);
#else
    for (std::size_t i = 0; i < diagrams.size(); ++i) records[i] = classify_diagram(diagrams[i]);
#endif
    return records;
}

} // namespace

std::vector<SubgroupRecord> enumerate_subgroups(const RunConfig& cfg) {
    std::vector<int> indices = cfg.indices;
    std::sort(indices.begin(), indices.end());
    indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
    std::vector<SubgroupRecord> out;
    for (int index : indices) {
        if (index < 2) throw std::invalid_argument("enumerate_subgroups: index must be at least 2");
        auto diagrams = enumerate_tree_diagrams(index);
        auto records = classify_all(diagrams, cfg.jobs);
        if (cfg.mode != Mode::Diagrams) {
            std::map<std::string, SubgroupRecord> byKey;
            for (auto& r : records) {
                std::string key = cfg.mode == Mode::Sl2 ? r.key : gl2_hex_of(r);
                auto it = byKey.find(key);
                if (it == byKey.end()) byKey.emplace(std::move(key), std::move(r));
            }
            records.clear();
            for (auto& [key, r] : byKey) records.push_back(std::move(r));
        }
        std::sort(records.begin(), records.end(),
                  [](const SubgroupRecord& x, const SubgroupRecord& y) {
                      if (x.key != y.key) return x.key < y.key;
                      return to_jsonl(x) < to_jsonl(y);
                  });
        for (auto& r : records) out.push_back(std::move(r));
    }
    return out;
}

std::vector<Table1Row> table1(int max_index, int jobs) {
    if (max_index < 2) throw std::invalid_argument("table1: max index must be at least 2");
    std::vector<Table1Row> rows;
    for (int index = 2; index <= max_index; ++index) {
        auto diagrams = enumerate_tree_diagrams(index);
        auto records = classify_all(diagrams, jobs);
        std::vector<std::string> sl2, gl2;
        for (const auto& r : records) {
            sl2.push_back(r.key);
            gl2.push_back(gl2_hex_of(r));
        }
        std::sort(sl2.begin(), sl2.end());
        sl2.erase(std::unique(sl2.begin(), sl2.end()), sl2.end());
        std::sort(gl2.begin(), gl2.end());
        gl2.erase(std::unique(gl2.begin(), gl2.end()), gl2.end());
        rows.push_back({index, static_cast<long long>(records.size()),
                        static_cast<long long>(sl2.size()), static_cast<long long>(gl2.size())});
    }
    return rows;
}

namespace {

json matrix_json(const ProjMatrix& m) {
    return json::array({json::array({m.a, m.b}), json::array({m.c, m.d})});
}

} // namespace

std::string to_jsonl(const SubgroupRecord& r) {
    json j;
    j["index"] = r.index;
    j["tree"] = json::array();
    for (auto [a, b] : r.tree_edges) j["tree"].push_back(json::array({a, b}));
    j["orientation"] = r.orientation;
    j["coloring"] = {{"blue", r.blue}, {"red", r.red}, {"pairs", json::array()}};
    for (auto [a, b] : r.pairs) j["coloring"]["pairs"].push_back(json::array({a, b}));
    j["gfs"] = r.gfs;
    j["sigma_s"] = r.sigma_s;
    j["sigma_r"] = r.sigma_r;
    j["sigma_t"] = r.sigma_t;
    j["genus"] = r.genus;
    j["e2"] = r.e2;
    j["e3"] = r.e3;
    j["cusps"] = json::array();
    for (const auto& c : r.cusps) j["cusps"].push_back({{"members", c.members}, {"width", c.width}});
    j["level"] = r.level;
    j["generators"] = json::array();
    for (const auto& g : r.generators) j["generators"].push_back(matrix_json(g));
    j["congruence"] = r.congruence;
    j["key"] = r.key;
    return j.dump();
}

SubgroupRecord record_from_json(const std::string& line) {
    json j = json::parse(line);
    SubgroupRecord r;
    r.index = j.at("index").get<int>();
    for (const auto& e : j.at("tree")) r.tree_edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    r.orientation = j.at("orientation").get<std::vector<std::vector<int>>>();
    r.blue = j.at("coloring").at("blue").get<std::vector<int>>();
    r.red = j.at("coloring").at("red").get<std::vector<int>>();
    for (const auto& e : j.at("coloring").at("pairs"))
        r.pairs.emplace_back(e[0].get<int>(), e[1].get<int>());
    r.gfs = j.at("gfs").get<std::vector<std::string>>();
    r.sigma_s = j.at("sigma_s").get<std::string>();
    r.sigma_r = j.at("sigma_r").get<std::string>();
    r.sigma_t = j.at("sigma_t").get<std::string>();
    r.genus = j.at("genus").get<int>();
    r.e2 = j.at("e2").get<int>();
    r.e3 = j.at("e3").get<int>();
    for (const auto& e : j.at("cusps")) {
        CuspClass c;
        c.members = e.at("members").get<std::vector<std::string>>();
        c.width = e.at("width").get<i64>();
        r.cusps.push_back(std::move(c));
    }
    r.level = j.at("level").get<i64>();
    for (const auto& e : j.at("generators")) {
        r.generators.push_back(normalize(e[0][0].get<i64>(), e[0][1].get<i64>(),
                                         e[1][0].get<i64>(), e[1][1].get<i64>()));
    }
    r.congruence = j.at("congruence").get<bool>();
    r.key = j.at("key").get<std::string>();
    return r;
}

std::string csv_header() {
    return "index,key,gfs,sigma_s,sigma_r,sigma_t,genus,e2,e3,cusp_widths,level,congruence";
}

std::string to_csv(const SubgroupRecord& r) {
    std::string gfs;
    for (const auto& c : r.gfs) {
        if (!gfs.empty()) gfs += ' ';
        gfs += c;
    }
    std::string widths;
    for (const auto& c : r.cusps) {
        if (!widths.empty()) widths += ' ';
        widths += std::to_string(c.width);
    }
    std::string out;
    out += std::to_string(r.index);
    out += ',' + r.key;
    out += ",\"" + gfs + "\"";
    out += ",\"" + r.sigma_s + "\"";
    out += ",\"" + r.sigma_r + "\"";
    out += ",\"" + r.sigma_t + "\"";
    out += ',' + std::to_string(r.genus);
    out += ',' + std::to_string(r.e2);
    out += ',' + std::to_string(r.e3);
    out += ",\"" + widths + "\"";
    out += ',' + std::to_string(r.level);
    out += r.congruence ? ",true" : ",false";
    return out;
}

KulkarniDiagram kulkarni_from_record(const SubgroupRecord& r) {
    KulkarniDiagram k;
    for (const auto& s : r.gfs) k.gfs.push_back(parse_cusp(s));
    if (r.orientation.empty()) {
        k.sides = {{SideType::Odd}, {SideType::Odd}};
        return k;
    }
    // rebuild the oriented tree and its external cycle
    BivalentTree t;
    t.valence = 3;
    t.internal_count = static_cast<int>(r.orientation.size());
    int n = 0;
    for (auto [a, b] : r.tree_edges) n = std::max({n, a, b});
    t.adj.resize(static_cast<std::size_t>(n));
    for (auto [a, b] : r.tree_edges) {
        t.adj[a - 1].push_back(b - 1);
        t.adj[b - 1].push_back(a - 1);
    }
    for (auto& nb : t.adj) std::sort(nb.begin(), nb.end());
    OrientedTree ot{t, std::vector<bool>(static_cast<std::size_t>(t.internal_count), false)};
    for (int v = 0; v < t.internal_count; ++v) {
        std::vector<int> want = {r.orientation[v][0] - 1, r.orientation[v][1] - 1,
                                 r.orientation[v][2] - 1};
        ot.flipped[v] = false;
        auto got = ot.cycle_at(v);
        auto rot_eq = [](const std::vector<int>& x, const std::vector<int>& y) {
            for (int s = 0; s < 3; ++s)
                if (x[0] == y[s] && x[1] == y[(s + 1) % 3] && x[2] == y[(s + 2) % 3]) return true;
            return false;
        };
        if (!rot_eq(got, want)) {
            ot.flipped[v] = true;
            if (!rot_eq(ot.cycle_at(v), want))
                throw std::invalid_argument("kulkarni_from_record: orientation is not a cyclic order of the neighbours");
        }
    }
    auto order = cyclic_order(ot);
    std::vector<int> pos(static_cast<std::size_t>(n), -1);
    for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);
    k.sides.assign(order.size(), {SideType::Even});
    for (int v : r.blue) k.sides[pos[v - 1]] = {SideType::Odd};
    for (auto [x, y] : r.pairs) {
        k.sides[pos[x - 1]] = {SideType::Free, pos[y - 1]};
        k.sides[pos[y - 1]] = {SideType::Free, pos[x - 1]};
    }
    return k;
}

std::optional<SubgroupRecord> find_by_key(const std::string& hex_key, int jobs) {
    auto key = key_from_hex(hex_key);
    if (key.empty()) return std::nullopt;
    int index = key[0];
    if (index < 2) return std::nullopt;
    RunConfig cfg;
    cfg.indices = {index};
    cfg.mode = Mode::Diagrams;
    cfg.jobs = jobs;
    for (auto& r : enumerate_subgroups(cfg))
        if (r.key == hex_key) return r;
    return std::nullopt;
}

} // namespace subgroups
