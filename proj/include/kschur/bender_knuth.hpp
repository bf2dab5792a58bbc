#pragma once

// Bender-Knuth involutions for shifted bar tableaux on the alphabet
// {1', 1, 2', 2}: sortedness, ascending/descending swaps, conjugation,
// group classification, weight reversal, and the composed involution tau
// extended to arbitrary adjacent letter pairs.

#include <optional>
#include <utility>
#include <vector>

#include "kschur/tableaux.hpp"

namespace kschur {

// Bars are referenced by index into BarTableau::bars; the step operations
// keep indices stable and return the new index of the threaded 2'-bar.
using BarRef = int;

bool is_sorted(const BarTableau& t);

// One ascending/descending swap of a 2'-bar against a 1-bar; case (c)
// returns the input unchanged.
std::pair<BarTableau, BarRef> swap_step(const BarTableau& t, BarRef v, BarRef h);
std::pair<BarTableau, BarRef> unswap_step(const BarTableau& t, BarRef v, BarRef h);

// Full sweeps: every 2'-bar (bottom to top) against every 1-bar (right to
// left), and the inverse order.  The optional trace collects each tableau
// produced by a step that changed something.
BarTableau swap_all(const BarTableau& t, std::vector<BarTableau>* trace = nullptr);
BarTableau unswap_all(const BarTableau& t, std::vector<BarTableau>* trace = nullptr);

// (i,j) -> (N-j, N-i) with entries v -> 3' - v; N = 0 picks the smallest
// legal bound 1 + max(row, col).
BarTableau conjugate(const BarTableau& t, int N = 0);

enum class GroupKind { one_row, one_column, two_row, two_column };

struct Group {
    GroupKind kind = GroupKind::one_row;
    std::vector<BarRef> bars;
    std::set<Box> boxes;
};

// Requires a sorted tableau; every bar lands in exactly one group.
std::vector<Group> classify_groups(const BarTableau& t);

// Shape-preserving weight-reversing involution of sorted tableaux.
BarTableau reverse_weight(const BarTableau& t);

// unswap o reverse_weight o swap on the {k', k, (k+1)', k+1} subtableau.
BarTableau tau(const BarTableau& t, int k);

// Weight vector (a_1, ..., a_m): a_i = number of bars containing i or i'.
std::vector<int> weight_vector(const BarTableau& t, int max_value);

// Count of primed entries in diagonal boxes.
int primed_diagonal_count(const BarTableau& t);

} // namespace kschur
