#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "netlab/errors.hpp"

namespace netlab {

/// Six-character bank code: a two-letter country prefix and a four-digit
/// zero-padded serial, e.g. "IT0187". Ordering matches the rendered string.
class BankId {
public:
    BankId() = default;
    BankId(char c0, char c1, std::uint16_t serial)
        : country_{c0, c1}, serial_(serial) {}

    static std::optional<BankId> try_parse(std::string_view s) {
        if (s.size() != 6) return std::nullopt;
        if (s[0] < 'A' || s[0] > 'Z' || s[1] < 'A' || s[1] > 'Z') return std::nullopt;
        std::uint16_t serial = 0;
        for (int i = 2; i < 6; ++i) {
            if (s[i] < '0' || s[i] > '9') return std::nullopt;
            serial = static_cast<std::uint16_t>(serial * 10 + (s[i] - '0'));
        }
        return BankId(s[0], s[1], serial);
    }

    static BankId parse(std::string_view s) {
        auto id = try_parse(s);
        if (!id) throw ParseError("invalid bank code '" + std::string(s) + "'");
        return *id;
    }

    std::string str() const {
        std::string out(6, '0');
        out[0] = country_[0];
        out[1] = country_[1];
        std::uint16_t s = serial_;
        for (int i = 5; i >= 2; --i) {
            out[i] = static_cast<char>('0' + s % 10);
            s /= 10;
        }
        return out;
    }

    std::string_view country() const { return std::string_view(country_.data(), 2); }
    std::uint16_t serial() const { return serial_; }

    friend auto operator<=>(const BankId&, const BankId&) = default;

private:
    std::array<char, 2> country_{'?', '?'};
    std::uint16_t serial_ = 0;
};

}  // namespace netlab
