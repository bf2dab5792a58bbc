#pragma once

// The three filling families on shifted skew shapes: set-valued tableaux,
// plane partitions, and bar tableaux, with validation, weights, and bounded
// alphabet enumeration.

#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "kschur/entry.hpp"
#include "kschur/monomial.hpp"
#include "kschur/shapes.hpp"

namespace kschur {

enum class DiagonalFamily { P, Q };

struct SetValuedTableau {
    SkewShape shape;
    std::map<Box, std::set<int>> cells; // box -> nonempty set of entry codes

    friend bool operator==(const SetValuedTableau& a, const SetValuedTableau& b) {
        return a.shape.boxes == b.shape.boxes && a.cells == b.cells;
    }
};

struct PlanePartition {
    SkewShape shape;
    std::map<Box, int> cells; // box -> entry code

    friend bool operator==(const PlanePartition& a, const PlanePartition& b) {
        return a.shape.boxes == b.shape.boxes && a.cells == b.cells;
    }
};

using Bar = std::vector<Box>; // sorted boxes of one bar

struct BarTableau {
    SkewShape shape;
    std::map<Box, int> cells;  // box -> entry code
    std::vector<Bar> bars;     // partition of the box set, canonically sorted

    void normalize(); // sort boxes within bars and bars by first box
    friend bool operator==(const BarTableau& a, const BarTableau& b) {
        return a.shape.boxes == b.shape.boxes && a.cells == b.cells && a.bars == b.bars;
    }
};

struct Weight {
    Monomial monomial; // x-alphabet
    int size = 0;      // |T| for SVT/BT, |wt_PP| for plane partitions
};

struct ValidationReport {
    bool ok = true;
    std::vector<std::string> violations;
    void fail(const std::string& why) {
        ok = false;
        violations.push_back(why);
    }
};

ValidationReport validate(const SetValuedTableau& t, DiagonalFamily family);
ValidationReport validate(const PlanePartition& t, DiagonalFamily family);
ValidationReport validate(const BarTableau& t, DiagonalFamily family);

Weight weight(const SetValuedTableau& t);
Weight weight(const PlanePartition& t);
Weight weight(const BarTableau& t);

enum class TableauFamily { SVT_P, SVT_Q, PP_P, PP_Q, BT_P, BT_Q };

// Callback enumeration in an unspecified internal order; return false to stop.
void enumerate_svt(const SkewShape& shape, DiagonalFamily family, int max_value,
                   const std::function<bool(const SetValuedTableau&)>& fn);
void enumerate_pp(const SkewShape& shape, DiagonalFamily family, int max_value,
                  const std::function<bool(const PlanePartition&)>& fn);
void enumerate_bt(const SkewShape& shape, DiagonalFamily family, int max_value,
                  const std::function<bool(const BarTableau&)>& fn);

// Materialized streams in the documented deterministic order: lexicographic
// on the cell entry sequence in row reading order, then (for bar tableaux)
// on the bar partition signature.
std::vector<SetValuedTableau> all_svt(const SkewShape& shape, DiagonalFamily family, int max_value);
std::vector<PlanePartition> all_pp(const SkewShape& shape, DiagonalFamily family, int max_value);
std::vector<BarTableau> all_bt(const SkewShape& shape, DiagonalFamily family, int max_value);

// Boxes in row reading order: higher rows first, then left to right.
std::vector<Box> reading_order(const SkewShape& shape);

} // namespace kschur
