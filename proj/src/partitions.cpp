#include "kschur/partitions.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace kschur {

bool is_strict_partition(const StrictPartition& p) {
    for (size_t i = 0; i < p.size(); ++i) {
        if (p[i] <= 0) return false;
        if (i + 1 < p.size() && p[i] <= p[i + 1]) return false;
    }
    return true;
}

bool is_partition(const std::vector<int>& p) {
    for (size_t i = 0; i < p.size(); ++i) {
        if (p[i] <= 0) return false;
        if (i + 1 < p.size() && p[i] < p[i + 1]) return false;
    }
    return true;
}

int partition_size(const StrictPartition& p) {
    int s = 0;
    for (int x : p) s += x;
    return s;
}

int part(const StrictPartition& p, int i) {
    return (i >= 1 && i <= static_cast<int>(p.size())) ? p[i - 1] : 0;
}

bool contains(const StrictPartition& outer, const StrictPartition& inner) {
    for (size_t i = 0; i < inner.size(); ++i)
        if (inner[i] > part(outer, static_cast<int>(i) + 1)) return false;
    return true;
}

bool precedes(const StrictPartition& a, const StrictPartition& b) {
    int sa = partition_size(a), sb = partition_size(b);
    if (sa != sb) return sa < sb;
    size_t n = std::max(a.size(), b.size());
    for (size_t i = 0; i < n; ++i) {
        int pa = part(a, static_cast<int>(i) + 1), pb = part(b, static_cast<int>(i) + 1);
        if (pa != pb) return pa > pb;
    }
    return false;
}

namespace {
void gen_strict(int rest, int max_part, StrictPartition& cur, std::vector<StrictPartition>& out) {
    if (rest == 0) {
        out.push_back(cur);
        return;
    }
    for (int p = std::min(rest, max_part); p >= 1; --p) {
        if (rest - p > 0 && rest - p >= p) {
            // need the remaining parts strictly smaller; the largest sum of
            // distinct parts below p is p(p-1)/2
            if (rest - p > p * (p - 1) / 2) continue;
        }
        if (rest - p > p * (p - 1) / 2) continue;
        cur.push_back(p);
        gen_strict(rest - p, p - 1, cur, out);
        cur.pop_back();
    }
}
} // namespace

std::vector<StrictPartition> strict_partitions_of(int n) {
    std::vector<StrictPartition> out;
    if (n < 0) return out;
    StrictPartition cur;
    gen_strict(n, n, cur, out);
    std::sort(out.begin(), out.end(), precedes);
    return out;
}

std::vector<StrictPartition> strict_partitions_up_to(int max_size) {
    std::vector<StrictPartition> out;
    for (int n = 0; n <= max_size; ++n) {
        auto part_n = strict_partitions_of(n);
        out.insert(out.end(), part_n.begin(), part_n.end());
    }
    return out;
}

std::string partition_str(const StrictPartition& p) {
    if (p.empty()) return "-";
    std::ostringstream os;
    for (size_t i = 0; i < p.size(); ++i) {
        if (i) os << ",";
        os << p[i];
    }
    return os.str();
}

StrictPartition parse_strict_partition(const std::string& s) {
    StrictPartition p;
    if (s.empty() || s == "-") return p;
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        size_t pos = 0;
        int v = std::stoi(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument("bad partition entry '" + tok + "'");
        p.push_back(v);
    }
    if (!is_strict_partition(p))
        throw std::invalid_argument("not a strict partition: " + s);
    return p;
}

} // namespace kschur
