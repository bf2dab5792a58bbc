#pragma once

// Tableau entries: positive integers and their primed versions i' = i - 1/2,
// totally ordered 1' < 1 < 2' < 2 < ...  Encoded as 2*value - (primed ? 1 : 0)
// so the integer order is the entry order.

#include <string>
#include <stdexcept>

namespace kschur {

struct Entry {
    int value = 1;
    bool primed = false;

    int code() const { return 2 * value - (primed ? 1 : 0); }
    static Entry from_code(int c) {
        if (c < 1) throw std::invalid_argument("Entry code must be positive");
        return Entry{(c + 1) / 2, c % 2 == 1};
    }
    friend bool operator==(const Entry& a, const Entry& b) { return a.code() == b.code(); }
    friend bool operator!=(const Entry& a, const Entry& b) { return !(a == b); }
    friend bool operator<(const Entry& a, const Entry& b) { return a.code() < b.code(); }
    friend bool operator<=(const Entry& a, const Entry& b) { return a.code() <= b.code(); }

    std::string str() const { return std::to_string(value) + (primed ? "'" : ""); }
    static Entry parse(const std::string& s) {
        if (s.empty()) throw std::invalid_argument("empty entry");
        bool primed = s.back() == '\'';
        std::string num = primed ? s.substr(0, s.size() - 1) : s;
        size_t pos = 0;
        int v = std::stoi(num, &pos);
        if (pos != num.size() || v < 1) throw std::invalid_argument("bad entry '" + s + "'");
        return Entry{v, primed};
    }
};

} // namespace kschur
