#include "iclc/rational.hpp"

#include <cctype>
#include <cstdlib>

namespace iclc {

std::string Rat::decimal_or_fraction() const {
    std::int64_t d = den_;
    int twos = 0, fives = 0;
    while (d % 2 == 0) { d /= 2; ++twos; }
    while (d % 5 == 0) { d /= 5; ++fives; }
    if (d != 1) return str();
    // Scale to 10^k with k = max(twos, fives).
    int k = twos > fives ? twos : fives;
    __int128 scaled = num_;
    for (int i = 0; i < k; ++i) scaled *= 10;
    scaled /= den_;
    bool neg = scaled < 0;
    if (neg) scaled = -scaled;
    std::string digits;
    if (scaled == 0) digits = "0";
    while (scaled > 0) {
        digits.insert(digits.begin(), static_cast<char>('0' + static_cast<int>(scaled % 10)));
        scaled /= 10;
    }
    while (static_cast<int>(digits.size()) <= k) digits.insert(digits.begin(), '0');
    std::string out = neg ? "-" : "";
    if (k == 0) return out + digits;
    out += digits.substr(0, digits.size() - k);
    out += ".";
    out += digits.substr(digits.size() - k);
    return out;
}

std::optional<Rat> Rat::parse(const std::string& text) {
    if (text.empty()) return std::nullopt;
    std::size_t pos = 0;
    bool neg = false;
    if (text[pos] == '+' || text[pos] == '-') {
        neg = text[pos] == '-';
        ++pos;
    }
    if (pos >= text.size()) return std::nullopt;

    auto read_digits = [&](std::int64_t& out) -> bool {
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) return false;
        out = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            if (out > (INT64_MAX - 9) / 10) return false;
            out = out * 10 + (text[pos] - '0');
            ++pos;
        }
        return true;
    };

    std::int64_t intpart = 0;
    if (!read_digits(intpart)) return std::nullopt;

    if (pos == text.size()) return Rat(neg ? -intpart : intpart);

    if (text[pos] == '/') {
        ++pos;
        std::int64_t d = 0;
        if (!read_digits(d) || pos != text.size() || d == 0) return std::nullopt;
        return Rat(neg ? -intpart : intpart, d);
    }

    if (text[pos] == '.') {
        ++pos;
        std::int64_t den = 1;
        std::int64_t frac = 0;
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            if (den > INT64_MAX / 10) return std::nullopt;
            den *= 10;
            frac = frac * 10 + (text[pos] - '0');
            ++pos;
        }
        if (pos != text.size() || pos == start) return std::nullopt;
        if (intpart > (INT64_MAX - frac) / den) return std::nullopt;
        std::int64_t n = intpart * den + frac;
        return Rat(neg ? -n : n, den);
    }

    return std::nullopt;
}

}  // namespace iclc
