#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "scd/graph.hpp"

namespace scd {

using Label = std::uint32_t;

/// Non-overlapping assignment of every node to one community. Labels are
/// always canonical: consecutive from 0 in order of first appearance.
class Partition {
public:
    Partition() = default;

    /// Canonicalizes arbitrary integer labels.
    template <class T>
    static Partition from_labels(std::span<const T> raw);
    static Partition from_labels(const std::vector<std::int64_t>& raw) {
        return from_labels(std::span<const std::int64_t>(raw));
    }
    static Partition singletons(std::size_t n);

    std::size_t size() const { return labels_.size(); }
    std::size_t num_communities() const { return num_communities_; }
    Label operator[](std::size_t i) const { return labels_[i]; }
    std::span<const Label> labels() const { return labels_; }
    std::vector<std::size_t> community_sizes() const;

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<Label> labels_;
    std::size_t num_communities_ = 0;
};

template <class T>
Partition Partition::from_labels(std::span<const T> raw) {
    Partition p;
    p.labels_.resize(raw.size());
    std::map<T, Label> mapping;
    for (std::size_t i = 0; i < raw.size(); ++i) {
        auto [it, inserted] = mapping.try_emplace(raw[i], static_cast<Label>(mapping.size()));
        p.labels_[i] = it->second;
    }
    p.num_communities_ = mapping.size();
    return p;
}

/// "token<TAB>label" per node, in node-id order.
void write_partition(const Partition& p, const NodeIdMap& ids, std::ostream& out);

/// Reads "token<sep>label" lines. Throws DataError on unknown tokens, nodes
/// listed twice, or nodes of @a ids without a label (the message names the
/// first missing node).
Partition load_partition(std::istream& in, const NodeIdMap& ids);
Partition load_partition_file(const std::string& path, const NodeIdMap& ids);

} // namespace scd
