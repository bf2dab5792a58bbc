#pragma once

// Strict partitions, boxes, and the total order used for deterministic
// iteration (size first, then the first differing index has the larger part).

#include <string>
#include <vector>

namespace kschur {

using StrictPartition = std::vector<int>; // strictly decreasing positive parts

struct Box {
    int row = 0;
    int col = 0;
    friend bool operator==(const Box& a, const Box& b) { return a.row == b.row && a.col == b.col; }
    friend bool operator<(const Box& a, const Box& b) {
        if (a.row != b.row) return a.row < b.row;
        return a.col < b.col;
    }
};

bool is_strict_partition(const StrictPartition& p);
// Weakly decreasing positive parts (the unshifted outer/inner shapes).
bool is_partition(const std::vector<int>& p);

int partition_size(const StrictPartition& p);
int part(const StrictPartition& p, int i); // 1-based, 0 beyond the length

// mu_i <= lambda_i for all i.
bool contains(const StrictPartition& outer, const StrictPartition& inner);

// The iteration order: by size, then the first differing index has the
// larger part.
bool precedes(const StrictPartition& a, const StrictPartition& b);

std::vector<StrictPartition> strict_partitions_of(int n);
std::vector<StrictPartition> strict_partitions_up_to(int max_size);

std::string partition_str(const StrictPartition& p);
// Comma separated decreasing integers; the empty partition is spelled "-".
StrictPartition parse_strict_partition(const std::string& s);

} // namespace kschur
