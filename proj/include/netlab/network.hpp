#pragma once

#include <algorithm>
#include <cstdint>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "netlab/errors.hpp"
#include "netlab/text.hpp"
#include "netlab/transaction.hpp"

namespace netlab {

/// One directed aggregated edge: total amount lent src -> dst over the year.
struct Edge {
    int src = 0;
    int dst = 0;
    double weight = 0.0;  // sum of trade amounts, million EUR
    std::int64_t trade_count = 0;
    double rate_sum = 0.0;  // sum of per-trade rates, for mean-rate queries

    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Per-trade detail retained alongside an edge for tick-level pricing queries.
struct EdgeObservation {
    Date date;
    double amount = 0.0;
    double rate = 0.0;

    friend auto operator<=>(const EdgeObservation&, const EdgeObservation&) = default;
};

/// Per-edge observation lists, parallel to YearNetwork::edges().
struct EdgeObservationBundle {
    std::vector<std::vector<EdgeObservation>> per_edge;
};

/// Immutable weighted directed network for one calendar year. Nodes are the
/// banks that traded in the year, ordered lexicographically by bank code;
/// edges are sorted by (src, dst).
class YearNetwork {
public:
    YearNetwork(int year, std::vector<BankId> nodes, std::vector<Edge> edges)
        : year_(year), nodes_(std::move(nodes)), edges_(std::move(edges)) {
        build_indexes();
    }

    int year() const { return year_; }
    int node_count() const { return static_cast<int>(nodes_.size()); }
    std::int64_t arc_count() const { return static_cast<std::int64_t>(edges_.size()); }
    const std::vector<BankId>& nodes() const { return nodes_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const BankId& node(int i) const { return nodes_[static_cast<std::size_t>(i)]; }

    /// Index of a bank in node order, or -1 if it did not trade this year.
    int index_of(const BankId& id) const {
        auto it = std::lower_bound(nodes_.begin(), nodes_.end(), id);
        if (it == nodes_.end() || *it != id) return -1;
        return static_cast<int>(it - nodes_.begin());
    }

    std::span<const Edge> out_edges(int node) const {
        return std::span<const Edge>(edges_).subspan(
            out_begin_[static_cast<std::size_t>(node)],
            out_begin_[static_cast<std::size_t>(node) + 1] - out_begin_[static_cast<std::size_t>(node)]);
    }

    /// Edge ids entering `node`, ordered by source.
    std::span<const std::int32_t> in_edge_ids(int node) const {
        return std::span<const std::int32_t>(in_ids_).subspan(
            in_begin_[static_cast<std::size_t>(node)],
            in_begin_[static_cast<std::size_t>(node) + 1] - in_begin_[static_cast<std::size_t>(node)]);
    }

    const Edge& edge(std::int32_t id) const { return edges_[static_cast<std::size_t>(id)]; }

    bool has_edge(int src, int dst) const {
        auto span = out_edges(src);
        auto it = std::lower_bound(span.begin(), span.end(), dst,
                                   [](const Edge& e, int d) { return e.dst < d; });
        return it != span.end() && it->dst == dst;
    }

    double total_volume() const {
        double sum = 0.0;
        for (const auto& e : edges_) sum += e.weight;
        return sum;
    }

    friend bool operator==(const YearNetwork& a, const YearNetwork& b) {
        return a.year_ == b.year_ && a.nodes_ == b.nodes_ && a.edges_ == b.edges_;
    }

private:
    void build_indexes() {
        const auto n = nodes_.size();
        out_begin_.assign(n + 1, 0);
        for (const auto& e : edges_) ++out_begin_[static_cast<std::size_t>(e.src) + 1];
        for (std::size_t i = 0; i < n; ++i) out_begin_[i + 1] += out_begin_[i];

        in_ids_.resize(edges_.size());
        std::iota(in_ids_.begin(), in_ids_.end(), 0);
        std::sort(in_ids_.begin(), in_ids_.end(), [this](std::int32_t a, std::int32_t b) {
            const Edge& ea = edges_[static_cast<std::size_t>(a)];
            const Edge& eb = edges_[static_cast<std::size_t>(b)];
            return std::pair(ea.dst, ea.src) < std::pair(eb.dst, eb.src);
        });
        in_begin_.assign(n + 1, 0);
        for (std::int32_t id : in_ids_)
            ++in_begin_[static_cast<std::size_t>(edges_[static_cast<std::size_t>(id)].dst) + 1];
        for (std::size_t i = 0; i < n; ++i) in_begin_[i + 1] += in_begin_[i];
    }

    int year_;
    std::vector<BankId> nodes_;
    std::vector<Edge> edges_;
    std::vector<std::size_t> out_begin_;
    std::vector<std::int32_t> in_ids_;
    std::vector<std::size_t> in_begin_;
};

namespace detail {

/// Sums values in ascending order so the result is independent of the input
/// permutation (bit-exact, not just to rounding).
inline double canonical_sum(std::vector<double>& values) {
    std::sort(values.begin(), values.end());
    double sum = 0.0;
    for (double v : values) sum += v;
    return sum;
}

}  // namespace detail

struct BuiltYearNetwork {
    YearNetwork network;
    EdgeObservationBundle observations;
};

/// Aggregates the trades dated in `year` into a YearNetwork. Edge weight is
/// the annual amount lent on that (lender, borrower) pair. Aggregation order
/// is canonical, so any permutation of the trade list builds the identical
/// network.
inline BuiltYearNetwork build_year_network_with_observations(
    std::span<const DirectedTrade> trades, int year) {
    std::map<std::pair<BankId, BankId>, std::vector<const DirectedTrade*>> groups;
    for (const auto& t : trades) {
        if (t.trade_date.year != year) continue;
        groups[{t.lender, t.borrower}].push_back(&t);
    }
    if (groups.empty())
        throw EmptyNetworkError("empty network: no trades in year " + std::to_string(year));

    std::vector<BankId> nodes;
    for (const auto& [key, _] : groups) {
        nodes.push_back(key.first);
        nodes.push_back(key.second);
    }
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());

    auto index_of = [&](const BankId& id) {
        return static_cast<int>(std::lower_bound(nodes.begin(), nodes.end(), id) - nodes.begin());
    };

    std::vector<Edge> edges;
    EdgeObservationBundle bundle;
    edges.reserve(groups.size());
    bundle.per_edge.reserve(groups.size());
    std::vector<double> scratch;
    for (const auto& [key, trade_ptrs] : groups) {
        Edge e;
        e.src = index_of(key.first);
        e.dst = index_of(key.second);
        e.trade_count = static_cast<std::int64_t>(trade_ptrs.size());
        scratch.clear();
        for (const auto* t : trade_ptrs) scratch.push_back(t->amount);
        e.weight = detail::canonical_sum(scratch);
        scratch.clear();
        for (const auto* t : trade_ptrs) scratch.push_back(t->rate);
        e.rate_sum = detail::canonical_sum(scratch);
        edges.push_back(e);

        std::vector<EdgeObservation> obs;
        obs.reserve(trade_ptrs.size());
        for (const auto* t : trade_ptrs)
            obs.push_back(EdgeObservation{t->trade_date, t->amount, t->rate});
        std::sort(obs.begin(), obs.end());
        bundle.per_edge.push_back(std::move(obs));
    }
    // groups is keyed by (lender, borrower), already the (src, dst) order.
    return BuiltYearNetwork{YearNetwork(year, std::move(nodes), std::move(edges)),
                            std::move(bundle)};
}

inline YearNetwork build_year_network(std::span<const DirectedTrade> trades, int year) {
    return build_year_network_with_observations(trades, year).network;
}

/// Calendar years present in a trade list, ascending.
inline std::vector<int> years_present(std::span<const DirectedTrade> trades) {
    std::vector<int> years;
    for (const auto& t : trades) years.push_back(t.trade_date.year);
    std::sort(years.begin(), years.end());
    years.erase(std::unique(years.begin(), years.end()), years.end());
    return years;
}

inline constexpr std::string_view kEdgeListHeader =
    "year,lender,borrower,weight,trade_count,rate_sum";

/// Edge-list CSV, one row per directed edge, weights as full-precision
/// decimal strings so load(save(net)) reproduces the network exactly.
inline void save_network(const YearNetwork& net, std::ostream& out) {
    out << kEdgeListHeader << '\n';
    for (const auto& e : net.edges()) {
        out << net.year() << ',' << net.node(e.src).str() << ',' << net.node(e.dst).str() << ','
            << format_double(e.weight) << ',' << e.trade_count << ',' << format_double(e.rate_sum)
            << '\n';
    }
}

inline YearNetwork load_network(std::istream& in) {
    std::string line;
    std::int64_t line_no = 0;
    bool saw_header = false;
    std::vector<std::string_view> fields;

    struct Row {
        BankId lender, borrower;
        double weight, rate_sum;
        std::int64_t trade_count;
    };
    std::vector<Row> rows;
    int year = 0;

    while (std::getline(in, line)) {
        ++line_no;
        std::string_view sv = strip_cr(line);
        if (!saw_header) {
            if (sv != kEdgeListHeader)
                throw ParseError("expected header '" + std::string(kEdgeListHeader) + "'", line_no);
            saw_header = true;
            continue;
        }
        if (sv.empty()) continue;
        split_fields(sv, ',', fields);
        if (fields.size() != 6) throw ParseError("expected 6 fields", line_no);
        auto y = parse_int<int>(fields[0]);
        if (!y) throw ParseError("invalid year", line_no, "year");
        if (rows.empty()) {
            year = *y;
        } else if (*y != year) {
            throw ParseError("mixed years in edge list", line_no, "year");
        }
        auto lender = BankId::try_parse(fields[1]);
        if (!lender) throw ParseError("invalid bank code", line_no, "lender");
        auto borrower = BankId::try_parse(fields[2]);
        if (!borrower) throw ParseError("invalid bank code", line_no, "borrower");
        if (*lender == *borrower) throw ParseError("self-loop edge", line_no, "borrower");
        auto weight = parse_double(fields[3]);
        if (!weight || !(*weight > 0.0)) throw ParseError("weight must be positive", line_no, "weight");
        auto count = parse_int<std::int64_t>(fields[4]);
        if (!count || *count <= 0) throw ParseError("trade_count must be positive", line_no, "trade_count");
        auto rate_sum = parse_double(fields[5]);
        if (!rate_sum) throw ParseError("invalid rate_sum", line_no, "rate_sum");
        rows.push_back(Row{*lender, *borrower, *weight, *rate_sum, *count});
    }
    if (!saw_header) throw ParseError("empty input: missing header row");
    if (rows.empty()) throw EmptyNetworkError("empty network: edge list has no rows");

    std::vector<BankId> nodes;
    for (const auto& r : rows) {
        nodes.push_back(r.lender);
        nodes.push_back(r.borrower);
    }
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
    auto index_of = [&](const BankId& id) {
        return static_cast<int>(std::lower_bound(nodes.begin(), nodes.end(), id) - nodes.begin());
    };

    std::vector<Edge> edges;
    edges.reserve(rows.size());
    for (const auto& r : rows)
        edges.push_back(Edge{index_of(r.lender), index_of(r.borrower), r.weight, r.trade_count,
                             r.rate_sum});
    std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
        return std::pair(a.src, a.dst) < std::pair(b.src, b.dst);
    });
    for (std::size_t i = 1; i < edges.size(); ++i)
        if (edges[i - 1].src == edges[i].src && edges[i - 1].dst == edges[i].dst)
            throw ParseError("duplicate edge " + nodes[static_cast<std::size_t>(edges[i].src)].str() +
                             "->" + nodes[static_cast<std::size_t>(edges[i].dst)].str());
    return YearNetwork(year, std::move(nodes), std::move(edges));
}

}  // namespace netlab
