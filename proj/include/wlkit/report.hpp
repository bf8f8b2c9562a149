#pragma once

#include <sstream>
#include <string>

#include <json.hpp>

#include "wlkit/cfi.hpp"
#include "wlkit/coloring.hpp"
#include "wlkit/cycles.hpp"

namespace wlkit {

/// Machine-readable coloring report with the fixed field names
/// "dimension", "rounds", "histogram", "stable".
inline nlohmann::json coloring_report(const Coloring& c) {
    nlohmann::json rounds = nlohmann::json::array();
    for (const auto& table : c.rounds) {
        nlohmann::json round = nlohmann::json::array();
        for (const auto& def : table)
            round.push_back({{"previous", def.previous}, {"multiset", def.multiset}});
        rounds.push_back(std::move(round));
    }
    nlohmann::json histogram = nlohmann::json::array();
    for (auto [color, count] : c.histogram()) histogram.push_back({color, count});
    return {{"dimension", c.dimension},
            {"rounds", std::move(rounds)},
            {"histogram", std::move(histogram)},
            {"stable", c.stable}};
}

inline std::string census_tsv(const CycleCensus& census) {
    std::ostringstream out;
    for (int len = 1; len <= census.max_length; ++len) out << len << '\t' << census.at(len) << '\n';
    return out.str();
}

inline std::string formula_census_tsv(const std::vector<std::pair<int, std::int64_t>>& rows) {
    std::ostringstream out;
    for (auto [len, count] : rows) out << len << '\t' << count << '\t' << "formula" << '\n';
    return out.str();
}

inline std::string clique_tsv(int k, std::int64_t count) {
    std::ostringstream out;
    out << k << '\t' << count << '\n';
    return out.str();
}

/// Cycle censuses of the canonical CFI(K4) pair, lengths 1..16, as TSV with
/// a "not twisted" column (no flips) and a "twisted" column (one flip).
inline std::string render_cycle_table() {
    GlobalGraph k4 = k4_global();
    CfiGraph plain = build_cfi(k4);
    CfiGraph twisted = build_cfi(k4, {{1, 3}});
    const int n = plain.product.vertex_count();
    CycleCensus a = count_cycles_brute(plain.product, n);
    CycleCensus b = count_cycles_brute(twisted.product, n);
    std::ostringstream out;
    out << "n\tnot_twisted\ttwisted\n";
    for (int len = 1; len <= n; ++len)
        out << len << '\t' << a.at(len) << '\t' << b.at(len) << '\n';
    return out.str();
}

}  // namespace wlkit
