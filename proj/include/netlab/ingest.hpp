#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "netlab/errors.hpp"
#include "netlab/text.hpp"
#include "netlab/transaction.hpp"

namespace netlab {

/// Canonical transaction CSV dialect:
/// `date,time,side,aggressor,quoter,rate,amount,maturity`, header required,
/// UTF-8, comma-separated, no quoting.
struct CsvDialect {
    char delimiter = ',';
    bool require_header = true;
};

inline constexpr std::string_view kTransactionHeader =
    "date,time,side,aggressor,quoter,rate,amount,maturity";

enum class ParseMode { Strict, Lenient };

struct RejectedRow {
    std::int64_t line = 0;
    std::string reason;
};

struct ParseReport {
    std::vector<TransactionRecord> records;
    std::vector<RejectedRow> rejects;
    std::int64_t rows_read = 0;  // data rows, header excluded

    std::int64_t reject_count() const { return static_cast<std::int64_t>(rejects.size()); }
};

namespace detail {

inline bool iequals(std::string_view a, std::string_view b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (std::tolower(static_cast<unsigned char>(a[i])) !=
            std::tolower(static_cast<unsigned char>(b[i])))
            return false;
    return true;
}

inline TransactionRecord parse_row(const std::vector<std::string_view>& f, std::int64_t line) {
    if (f.size() != 8) throw ParseError("expected 8 fields, got " + std::to_string(f.size()), line);

    TransactionRecord r;
    auto date = Date::try_parse(f[0]);
    if (!date) throw ParseError("invalid date '" + std::string(f[0]) + "'", line, "date");
    r.trade_date = *date;

    if (!f[1].empty()) {
        auto t = TimeOfDay::try_parse(f[1]);
        if (!t) throw ParseError("invalid time '" + std::string(f[1]) + "'", line, "time");
        r.trade_time = *t;
    }

    if (iequals(f[2], "ask")) {
        r.side = Side::Ask;
    } else if (iequals(f[2], "bid")) {
        r.side = Side::Bid;
    } else {
        throw ParseError("unknown side '" + std::string(f[2]) + "'", line, "side");
    }

    auto aggressor = BankId::try_parse(f[3]);
    if (!aggressor) throw ParseError("invalid bank code '" + std::string(f[3]) + "'", line, "aggressor");
    r.aggressor = *aggressor;

    auto quoter = BankId::try_parse(f[4]);
    if (!quoter) throw ParseError("invalid bank code '" + std::string(f[4]) + "'", line, "quoter");
    r.quoter = *quoter;

    if (r.aggressor == r.quoter) throw ParseError("self-trade", line, "quoter");

    auto rate = parse_double(f[5]);
    if (!rate || !(*rate >= 0.0)) throw ParseError("rate must be a non-negative number", line, "rate");
    r.rate = *rate;

    auto amount = parse_double(f[6]);
    if (!amount || !(*amount > 0.0)) throw ParseError("amount must be positive", line, "amount");
    r.amount = *amount;

    if (f[7].empty()) throw ParseError("missing maturity tag", line, "maturity");
    if (iequals(f[7], "ON")) {
        r.maturity = Maturity::on();
    } else {
        r.maturity = Maturity::other(std::string(f[7]));
    }
    return r;
}

}  // namespace detail

/// Parses the canonical transaction CSV. Strict mode throws on the first bad
/// row; lenient mode skips bad rows and records them in the report.
inline ParseReport parse_transactions(std::istream& in, ParseMode mode = ParseMode::Strict,
                                      const CsvDialect& dialect = {}) {
    ParseReport report;
    std::string line;
    std::int64_t line_no = 0;
    bool saw_header = !dialect.require_header;
    std::vector<std::string_view> fields;

    while (std::getline(in, line)) {
        ++line_no;
        std::string_view sv = strip_cr(line);
        if (!saw_header) {
            if (sv != kTransactionHeader)
                throw ParseError("expected header '" + std::string(kTransactionHeader) + "'", line_no);
            saw_header = true;
            continue;
        }
        if (sv.empty()) continue;
        ++report.rows_read;
        split_fields(sv, dialect.delimiter, fields);
        try {
            report.records.push_back(detail::parse_row(fields, line_no));
        } catch (const ParseError& e) {
            if (mode == ParseMode::Strict) throw;
            report.rejects.push_back(RejectedRow{line_no, e.what()});
        }
    }
    if (!saw_header) throw ParseError("empty input: missing header row");
    return report;
}

/// Canonical rendering of one record. Numbers use shortest round-trip form;
/// re-serializing a parsed canonical file is a fixpoint.
inline std::string serialize_transaction(const TransactionRecord& r) {
    std::string out;
    out += r.trade_date.str();
    out += ',';
    if (r.trade_time) out += r.trade_time->str();
    out += ',';
    out += to_string(r.side);
    out += ',';
    out += r.aggressor.str();
    out += ',';
    out += r.quoter.str();
    out += ',';
    out += format_double(r.rate);
    out += ',';
    out += format_double(r.amount);
    out += ',';
    out += r.maturity.overnight ? "ON" : r.maturity.tag;
    return out;
}

inline void serialize_transactions(const std::vector<TransactionRecord>& records,
                                   std::ostream& out) {
    out << kTransactionHeader << '\n';
    for (const auto& r : records) out << serialize_transaction(r) << '\n';
}

}  // namespace netlab
