#include "scd/partition.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>

#include "scd/error.hpp"

namespace scd {

Partition Partition::singletons(std::size_t n) {
    std::vector<std::int64_t> raw(n);
    for (std::size_t i = 0; i < n; ++i) raw[i] = static_cast<std::int64_t>(i);
    return from_labels(raw);
}

std::vector<std::size_t> Partition::community_sizes() const {
    std::vector<std::size_t> sizes(num_communities_, 0);
    for (auto l : labels_) ++sizes[l];
    return sizes;
}

void write_partition(const Partition& p, const NodeIdMap& ids, std::ostream& out) {
    for (std::size_t i = 0; i < p.size(); ++i) out << ids.token(static_cast<NodeId>(i)) << '\t' << p[i] << '\n';
}

Partition load_partition(std::istream& in, const NodeIdMap& ids) {
    constexpr std::int64_t unset = -1;
    std::vector<std::int64_t> raw(ids.size(), unset);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::vector<std::string> fields;
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
            if (i >= line.size()) break;
            std::size_t j = i;
            while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
            fields.emplace_back(line.substr(i, j - i));
            i = j;
        }
        if (fields.empty() || fields[0][0] == '#') continue;
        if (fields.size() != 2)
            throw DataError("partition line " + std::to_string(lineno) + ": expected 'node label'");
        NodeId id;
        if (!ids.find(fields[0], id))
            throw DataError("partition line " + std::to_string(lineno) + ": unknown node '" + fields[0] + "'");
        std::int64_t label = 0;
        auto [ptr, ec] = std::from_chars(fields[1].data(), fields[1].data() + fields[1].size(), label);
        if (ec != std::errc() || ptr != fields[1].data() + fields[1].size() || label < 0)
            throw DataError("partition line " + std::to_string(lineno) + ": invalid label '" + fields[1] + "'");
        if (raw[id] != unset)
            throw DataError("partition line " + std::to_string(lineno) + ": node '" + fields[0] +
                            "' assigned twice");
        raw[id] = label;
    }
    for (std::size_t i = 0; i < raw.size(); ++i)
        if (raw[i] == unset)
            throw DataError("partition is missing node '" + ids.token(static_cast<NodeId>(i)) + "'");
    return Partition::from_labels(raw);
}

Partition load_partition_file(const std::string& path, const NodeIdMap& ids) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open partition file '" + path + "'");
    return load_partition(in, ids);
}

} // namespace scd
