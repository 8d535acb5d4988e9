// Acceptance suite: prints one PASS/FAIL line per criterion and exits
// nonzero if any executed criterion fails. Criteria 2 and 4 are the long
// runs; they execute only with --long.

#include <algorithm>
#include <cstring>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "subgroups/classify.hpp"
#include "subgroups/pipeline.hpp"
#include "subgroups/reduction.hpp"
#include "table2_data.hpp"

using namespace subgroups;

namespace {

int failures = 0;

void report(const std::string& name, bool ok) {
    std::cout << (ok ? "PASS" : "FAIL") << "  " << name << std::endl;
    if (!ok) ++failures;
}

void report_skip(const std::string& name) { std::cout << "SKIP  " << name << " (run with --long)" << std::endl; }

const std::vector<Table1Row> kTable1 = {
    {2, 1, 1, 1},    {3, 2, 2, 2},    {4, 2, 2, 2},   {5, 1, 1, 1},    {6, 9, 8, 8},
    {7, 8, 6, 4},    {8, 8, 7, 6},    {9, 54, 14, 12}, {10, 101, 27, 19}, {11, 80, 26, 16},
    {12, 440, 80, 63}};

bool criterion1() {
    auto rows = table1(12);
    return rows == kTable1;
}

bool criterion2() {
    auto rows = table1(14);
    return rows.size() == 13 && rows[11] == Table1Row{13, 790, 133, 73} &&
           rows[12] == Table1Row{14, 770, 170, 106};
}

Passport fixture_passport(const table2::Row& row) {
    Passport p;
    p.degree = row.index;
    p.sigma_s = parse_cycles(row.sigma_s, row.index);
    p.sigma_r = parse_cycles(row.sigma_r, row.index);
    p.sigma_t = parse_cycles(row.sigma_t, row.index);
    check_passport(p);
    return p;
}

bool criterion3() {
    bool ok = true;
    std::map<int, std::vector<table2::Row>> byIndex;
    for (const auto& row : table2::rows()) byIndex[row.index].push_back(row);
    for (auto& [index, rows] : byIndex) {
        RunConfig cfg;
        cfg.indices = {index};
        cfg.mode = Mode::Sl2;
        auto records = enumerate_subgroups(cfg);
        if (records.size() != rows.size()) {
            ok = false;
            continue;
        }
        cfg.mode = Mode::Diagrams;
        auto diagram_records = enumerate_subgroups(cfg);
        std::set<std::string> enumerated_keys;
        for (const auto& r : records) enumerated_keys.insert(r.key);
        for (const auto& row : rows) {
            Passport fixture = fixture_passport(row);
            std::string key = key_hex(canonical_passport(fixture));
            // the hand-entered class is one of the enumerated classes
            if (!enumerated_keys.count(key)) {
                ok = false;
                continue;
            }
            const SubgroupRecord* mine = nullptr;
            for (const auto& r : records)
                if (r.key == key) mine = &r;
            // invariants match the fixture columns
            ok = ok && mine->genus == row.genus && mine->e2 == row.e2 && mine->e3 == row.e3 &&
                 mine->congruence == row.congruence;
            // width multisets = sigma_t cycle lengths (documented erratum in
            // the transcribed width column)
            std::vector<i64> widths;
            for (const auto& c : mine->cusps) widths.push_back(c.width);
            std::sort(widths.rbegin(), widths.rend());
            std::vector<int> cycles_sorted = cycle_type(fixture.sigma_t);
            ok = ok && widths.size() == cycles_sorted.size();
            for (std::size_t i = 0; ok && i < widths.size(); ++i)
                ok = widths[i] == cycles_sorted[i];
            // some enumerated diagram of this class carries the fixture gfs
            bool gfs_found = false;
            for (const auto& r : diagram_records)
                if (r.key == key && r.gfs == row.gfs) gfs_found = true;
            ok = ok && gfs_found;
            // the anchored diagram reproduces the fixture generator set, and
            // every fixture generator is a member
            KulkarniDiagram k = table2::diagram_of(row);
            ok = ok && key_hex(canonical_passport(passport(k))) == key;
            auto gens = side_pairing_generators(k);
            ok = ok && gens.size() == row.generators.size();
            for (std::size_t i = 0; ok && i < gens.size(); ++i) {
                ProjMatrix fixture_gen = parse_matrix(row.generators[i]);
                ok = gens[i] == fixture_gen && is_member(k, fixture_gen);
            }
        }
    }
    return ok;
}

bool criterion4() {
    struct GenusTwo {
        const char* ss;
        const char* st;
        bool has_nine_blocks;
    };
    const GenusTwo reference[] = {
        {"(1,5)(2,8)(3,15)(4,9)(6,12)(7,16)(10,14)(11,17)(13,18)",
         "(1,2,3,13,14,15,16,17,18,10,11,12,4,5,6,7,8,9)", true},
        {"(1,5)(2,8)(3,15)(4,18)(6,12)(7,16)(9,13)(10,14)(11,17)",
         "(1,2,3,4,5,6,7,8,18,10,11,12,13,14,15,16,17,9)", true},
        {"(1,5)(2,8)(3,15)(4,10)(6,12)(7,16)(9,14)(11,17)(13,18)",
         "(1,2,3,13,4,5,6,7,8,10,11,12,14,15,16,17,18,9)", false},
        {"(1,5)(2,8)(3,15)(4,14)(6,12)(7,16)(9,13)(10,18)(11,17)",
         "(1,2,3,10,11,12,13,18,4,5,6,7,8,14,15,16,17,9)", false},
        {"(1,10)(2,8)(3,15)(4,18)(5,13)(6,12)(7,16)(9,14)(11,17)",
         "(1,2,3,4,10,11,12,14,15,16,17,5,6,7,8,18,9,13)", true},
        {"(1,10)(2,8)(3,15)(4,13)(5,14)(6,12)(7,16)(9,18)(11,17)",
         "(1,2,3,9,14,15,16,17,4,10,11,12,18,5,6,7,8,13)", true},
        {"(1,14)(2,8)(3,15)(4,18)(5,10)(6,12)(7,16)(9,13)(11,17)",
         "(1,2,3,4,14,15,16,17,9,10,11,12,13,5,6,7,8,18)", true},
        {"(1,7)(2,10)(3,14)(4,17)(5,18)(6,11)(8,13)(9,15)(12,16)",
         "(1,2,3,4,5,6,7,18,12,13,14,15,16,17,8,9,10,11)", false},
        {"(1,7)(2,10)(3,14)(4,17)(5,16)(6,11)(8,13)(9,15)(12,18)",
         "(1,2,3,4,12,13,14,15,18,5,6,7,16,17,8,9,10,11)", false},
    };

    RunConfig cfg;
    cfg.indices = {18};
    cfg.mode = Mode::Sl2;
    auto records = enumerate_subgroups(cfg);
    std::set<std::string> genus2_keys;
    for (const auto& r : records)
        if (r.genus == 2) genus2_keys.insert(r.key);
    bool ok = genus2_keys.size() == 9;

    std::set<std::string> reference_keys;
    for (const auto& g2 : reference) {
        Passport p;
        p.degree = 18;
        p.sigma_s = parse_cycles(g2.ss, 18);
        p.sigma_t = parse_cycles(g2.st, 18);
        p.sigma_r = perm_compose(p.sigma_s, p.sigma_t);
        check_passport(p);
        reference_keys.insert(key_hex(canonical_passport(p)));
        auto systems = block_systems(p, 9);
        ok = ok && (!systems.empty() == g2.has_nine_blocks);
    }
    return ok && genus2_keys == reference_keys;
}

bool criterion5() {
    for (int m = 1; m <= 5; ++m)
        if (static_cast<long>(enumerate_trees(m, 3).size()) !=
            oracle::brute_force_tree_class_count(m, 3))
            return false;
    for (int m = 1; m <= 5; ++m)
        for (const BivalentTree& t : enumerate_trees(m, 3)) {
            if (t.vertex_count() > 12) continue;
            if (aut_group(t).order !=
                static_cast<std::uint64_t>(oracle::brute_force_automorphism_count(t)))
                return false;
        }
    for (int m = 1; m <= 3; ++m)
        for (const BivalentTree& t : enumerate_trees(m, 4)) {
            if (t.vertex_count() > 12) continue;
            if (aut_group(t).order !=
                static_cast<std::uint64_t>(oracle::brute_force_automorphism_count(t)))
                return false;
        }
    return true;
}

bool criterion6() {
    for (int d = 2; d <= 10; ++d)
        for (const TreeDiagram& td : enumerate_tree_diagrams(d)) {
            KulkarniDiagram k = attach_farey_symbol(td);
            GroupInvariants inv = invariants(k);
            auto reps = coset_representatives(k);
            Passport p = passport(k, reps);  // throws unless valid
            if (static_cast<int>(fixed_points(p.sigma_s).size()) != inv.e2) return false;
            if (static_cast<int>(fixed_points(p.sigma_r).size()) != inv.e3) return false;
            auto cycles = cycle_type(p.sigma_t);
            if (static_cast<int>(cycles.size()) != inv.t) return false;
            std::vector<int> widths;
            i64 width_sum = 0;
            for (const auto& orb : cusp_orbits(k)) {
                i64 w = cusp_width(k, orb);
                widths.push_back(static_cast<int>(w));
                width_sum += w;
            }
            std::sort(widths.rbegin(), widths.rend());
            if (widths != cycles) return false;
            int b = static_cast<int>(td.coloring.blue.size());
            int m = td.internal_count();
            if (width_sum != d || inv.index != d || 3 * m + b != d) return false;
            if (static_cast<int>(reps.size()) != d) return false;
            // gfs unimodularity
            for (std::size_t i = 0; i + 1 < k.gfs.size(); ++i) {
                i64 det =
                    k.gfs[i].num * k.gfs[i + 1].den - k.gfs[i].den * k.gfs[i + 1].num;
                if (det != 1 && det != -1) return false;
            }
            // 2g + t - 1 = f with integral non-negative genus
            int f = static_cast<int>(td.coloring.pairs.size());
            if (2 * inv.genus + inv.t - 1 != f || inv.genus < 0) return false;
        }
    return true;
}

bool criterion7() {
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> letter(0, 2);
    std::uniform_int_distribution<int> length(0, 12);
    for (int d = 2; d <= 7; ++d) {
        // one representative diagram per SL2 class
        std::map<std::string, KulkarniDiagram> classes;
        for (const TreeDiagram& td : enumerate_tree_diagrams(d)) {
            KulkarniDiagram k = attach_farey_symbol(td);
            classes.emplace(key_hex(canonical_passport(passport(k))), k);
        }
        for (auto& [key, k] : classes) {
            auto reps = coset_representatives(k);
            for (std::size_t i = 0; i < reps.size(); ++i)
                for (std::size_t j = 0; j < reps.size(); ++j)
                    if (i != j && is_member(k, mat_mul(mat_inverse(reps[j]), reps[i])))
                        return false;
            std::vector<ProjMatrix> inv;
            for (const auto& r : reps) inv.push_back(mat_inverse(r));
            for (int trial = 0; trial < 200; ++trial) {
                ProjMatrix w = mat_identity();
                int len = length(rng);
                for (int step = 0; step < len; ++step) {
                    switch (letter(rng)) {
                        case 0: w = mat_mul(w, mat_S()); break;
                        case 1: w = mat_mul(w, mat_T()); break;
                        default: w = mat_mul(w, mat_inverse(mat_T())); break;
                    }
                }
                int hits = 0;
                for (std::size_t i = 0; i < reps.size(); ++i)
                    if (is_member(k, mat_mul(inv[i], w))) ++hits;
                if (hits != 1) return false;
            }
        }
    }
    return true;
}

bool criterion8() {
    // all congruence through index 6; exactly the first two classes at 7
    std::map<std::string, bool> expected;
    for (const auto& row : table2::rows())
        expected[key_hex(canonical_passport(fixture_passport(row)))] = row.congruence;
    for (int d = 2; d <= 7; ++d) {
        RunConfig cfg;
        cfg.indices = {d};
        cfg.mode = Mode::Sl2;
        int yes = 0;
        for (const auto& r : enumerate_subgroups(cfg)) {
            auto it = expected.find(r.key);
            if (it == expected.end() || it->second != r.congruence) return false;
            if (r.congruence) ++yes;
        }
        if (d <= 6 && yes != static_cast<int>(table1(d).back().sl2)) return false;
        if (d == 7 && yes != 2) return false;
    }
    return true;
}

} // namespace

int main(int argc, char** argv) {
    bool run_long = false;
    for (int i = 1; i < argc; ++i)
        if (std::strcmp(argv[i], "--long") == 0) run_long = true;

    report("criterion 1: table of diagram/sl2/gl2 counts, indices 2..12", criterion1());
    if (run_long)
        report("criterion 2: extended count table, indices 13..14", criterion2());
    else
        report_skip("criterion 2: extended count table, indices 13..14");
    report("criterion 3: per-class reference data, indices 2..7", criterion3());
    if (run_long)
        report("criterion 4: genus-2 census at index 18", criterion4());
    else
        report_skip("criterion 4: genus-2 census at index 18");
    report("criterion 5: tree enumeration and automorphism oracles", criterion5());
    report("criterion 6: invariant suite over all diagrams up to index 10", criterion6());
    report("criterion 7: coset soundness and random-word uniqueness", criterion7());
    report("criterion 8: congruence census, indices 2..7", criterion8());

    if (failures) {
        std::cout << failures << " criterion(s) failed" << std::endl;
        return 1;
    }
    std::cout << "all executed criteria passed" << std::endl;
    return 0;
}
