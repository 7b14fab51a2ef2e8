#include "scd/report.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

namespace scd {

std::uint64_t fnv1a(std::string_view data) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

void write_report_header(std::ostream& out, std::string_view command, std::uint64_t config_hash,
                         std::uint64_t seed) {
    char hex[17];
    std::snprintf(hex, sizeof(hex), "%016llx", static_cast<unsigned long long>(config_hash));
    out << "# scd " << SCD_VERSION << '\n'
        << "# command " << command << '\n'
        << "# config " << hex << '\n'
        << "# seed " << seed << '\n';
}

namespace {

std::string fixed(double v, int digits = 6) {
    if (std::isnan(v)) return "-";
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
    return buf;
}

} // namespace

void write_search_report(const SearchReport& report, std::ostream& out, bool timings) {
    out << "# K " << report.max_k << '\n'
        << "# gamma " << report.gamma << '\n'
        << "# k_min " << report.k_min << '\n'
        << "# fine_radius " << report.fine_radius << '\n'
        << "# isolated_nodes " << report.isolated_nodes << '\n';
    for (std::size_t i = 0; i < report.param_sets.size(); ++i) {
        const auto& s = report.param_sets[i];
        out << "# param_set " << i << ' ' << s.params.describe() << ' '
            << (s.embedded ? (s.improved ? "improved" : "embedded") : "failed: " + s.error);
        if (timings) out << " embed_ms " << fixed(s.embed_millis, 3) << " search_ms " << fixed(s.search_millis, 3);
        out << '\n';
    }
    out << "# best param_set " << report.best_param << " k " << report.best_k << " silhouette "
        << fixed(report.best_quality, 9) << '\n';
    if (timings) out << "# total_ms " << fixed(report.total_millis, 3) << '\n';
    out << "param_set\tk\tsilhouette\tnormalized\tphase\tmillis\n";
    for (const auto& r : report.records) {
        out << r.param_index << '\t' << r.k << '\t' << (r.ok ? fixed(r.silhouette, 9) : "-") << '\t'
            << (r.ok ? fixed(r.normalized, 9) : "-") << '\t' << to_string(r.phase) << '\t'
            << (timings ? fixed(r.millis, 3) : "-") << '\n';
    }
}

void write_sweep_trace(std::span<const SweepRecord> trace, std::ostream& out) {
    std::vector<std::pair<std::size_t, double>> ok;
    for (const auto& r : trace)
        if (r.ok) ok.emplace_back(r.k, r.silhouette);
    auto norm = normalize_scores(ok);
    std::size_t j = 0;
    for (const auto& r : trace) {
        out << r.k << '\t';
        if (r.ok) {
            out << fixed(r.silhouette, 9) << '\t' << fixed(norm.scores[j++].second, 9) << '\n';
        } else {
            out << "-\t-\n";
        }
    }
}

} // namespace scd
