#pragma once

#include <optional>
#include <string>
#include <vector>

#include "subgroups/classify.hpp"
#include "subgroups/kulkarni.hpp"
#include "subgroups/tree_diagram.hpp"

namespace subgroups {

enum class Mode { Diagrams, Sl2, Gl2 };
enum class Format { Jsonl, Csv };

Mode parse_mode(const std::string& s);
Format parse_format(const std::string& s);

struct RunConfig {
    std::vector<int> indices;  // subgroup indices to enumerate
    Mode mode = Mode::Sl2;
    int jobs = 1;              // 1 = serial reference path, >1 = parallel
    Format format = Format::Jsonl;
    std::string out_path;      // empty = stdout
};

struct CuspClass {
    std::vector<std::string> members;  // cusp values; the infinity class prints "1/0"
    i64 width = 0;
    friend bool operator==(const CuspClass&, const CuspClass&) = default;
};

struct SubgroupRecord {
    int index = 0;
    std::vector<std::pair<int, int>> tree_edges;        // 1-based vertex labels
    std::vector<std::vector<int>> orientation;          // 3-cycles at internal vertices
    std::vector<int> blue, red;                         // 1-based external labels
    std::vector<std::pair<int, int>> pairs;
    std::vector<std::string> gfs;
    std::string sigma_s, sigma_r, sigma_t;              // cycle strings
    int genus = 0, e2 = 0, e3 = 0;
    std::vector<CuspClass> cusps;
    i64 level = 1;
    std::vector<ProjMatrix> generators;
    bool congruence = false;
    std::string key;                                    // hex canonical passport
    friend bool operator==(const SubgroupRecord&, const SubgroupRecord&) = default;
};

/// Classify one diagram end to end.
SubgroupRecord classify_diagram(const TreeDiagram& d);

/// Enumerate, classify, deduplicate per mode, sort by (index, key, payload).
std::vector<SubgroupRecord> enumerate_subgroups(const RunConfig& cfg);

struct Table1Row {
    int index;
    long long diagrams, sl2, gl2;
    friend bool operator==(const Table1Row&, const Table1Row&) = default;
};

std::vector<Table1Row> table1(int max_index, int jobs = 1);

std::string to_jsonl(const SubgroupRecord& r);
SubgroupRecord record_from_json(const std::string& line);
std::string csv_header();
std::string to_csv(const SubgroupRecord& r);

/// Rebuild the Kulkarni diagram (gfs + side labels) a record was computed
/// from; everything downstream (membership, theta, ...) runs off this.
KulkarniDiagram kulkarni_from_record(const SubgroupRecord& r);

/// Locate a record by canonical-passport key: the key's first byte is the
/// degree, so the search enumerates that single index.
std::optional<SubgroupRecord> find_by_key(const std::string& hex_key, int jobs = 1);

int default_jobs_from_env();

} // namespace subgroups
