#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "netlab/bank_id.hpp"
#include "netlab/date.hpp"

namespace netlab {

/// e-MID sub-market of the tick. In the bid market the aggressor lends; in the
/// ask market the aggressor borrows.
enum class Side { Ask, Bid };

inline std::string_view to_string(Side s) { return s == Side::Ask ? "ask" : "bid"; }

struct Maturity {
    bool overnight = true;
    std::string tag = "ON";  // verbatim input tag for non-overnight contracts

    static Maturity on() { return Maturity{true, "ON"}; }
    static Maturity other(std::string t) { return Maturity{false, std::move(t)}; }

    friend bool operator==(const Maturity&, const Maturity&) = default;
};

/// One raw tick as recorded by the platform.
struct TransactionRecord {
    Date trade_date;
    std::optional<TimeOfDay> trade_time;
    Side side = Side::Bid;
    BankId aggressor;
    BankId quoter;
    double rate = 0.0;    // percent per annum
    double amount = 0.0;  // million EUR
    Maturity maturity;

    friend bool operator==(const TransactionRecord&, const TransactionRecord&) = default;
};

/// Aggressor/quoter pair normalized to the money-flow direction.
struct DirectedTrade {
    BankId lender;
    BankId borrower;
    double amount = 0.0;
    double rate = 0.0;
    Date trade_date;
    Side side = Side::Bid;  // provenance

    friend bool operator==(const DirectedTrade&, const DirectedTrade&) = default;
};

/// Bid: the aggressor lends to the quoter. Ask: the quoter lends to the
/// aggressor. Amount, rate and date are copied unchanged.
inline DirectedTrade to_directed_trade(const TransactionRecord& r) {
    if (r.aggressor == r.quoter) throw std::invalid_argument("self-trade");
    DirectedTrade t;
    if (r.side == Side::Bid) {
        t.lender = r.aggressor;
        t.borrower = r.quoter;
    } else {
        t.lender = r.quoter;
        t.borrower = r.aggressor;
    }
    t.amount = r.amount;
    t.rate = r.rate;
    t.trade_date = r.trade_date;
    t.side = r.side;
    return t;
}

/// Keeps exactly the overnight records, original order preserved.
inline std::vector<TransactionRecord> filter_overnight(
    const std::vector<TransactionRecord>& records) {
    std::vector<TransactionRecord> out;
    out.reserve(records.size());
    for (const auto& r : records)
        if (r.maturity.overnight) out.push_back(r);
    return out;
}

inline std::vector<DirectedTrade> to_directed_trades(
    const std::vector<TransactionRecord>& records) {
    std::vector<DirectedTrade> out;
    out.reserve(records.size());
    for (const auto& r : records) out.push_back(to_directed_trade(r));
    return out;
}

}  // namespace netlab
