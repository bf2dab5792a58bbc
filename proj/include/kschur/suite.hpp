#pragma once

// The verification battery: one entry per acceptance criterion, each a
// residual-zero or exhaustive check at pinned sizes.

#include <string>
#include <vector>

namespace kschur {

struct SuiteParams {
    // criterion-specific sweep bounds; the defaults are the pinned values
    int cauchy_deg_2v = 6;   // degree with nx = ny = 2
    int cauchy_deg_3v = 5;   // degree with nx = ny = 3
    int skew_part_max = 3;   // |mu|, |nu| bound for the dual Cauchy sweep
    int skew_deg = 5;
    int one_var_max_n = 10;
    int ribbon_max = 9;      // |Lambda| bound for ribbon closed forms and tables
    int bk_max = 8;          // |lambda| bound for the Bender-Knuth battery
    int sym_max = 7;         // |lambda| bound for symmetry and beta = 0 collapse
    int sym_vars = 4;
    int pieri_max = 7;       // |nu| bound for the Pieri two-sided oracle
    int product_max = 5;     // |lambda| bound for the product formulas
    int product_n = 3;
    int product_vars = 3;
    int struct_max = 5;      // |lambda|+|mu| bound for structure constants
    int op_size_cap = 5;
    int op_deg_cap = 3;

    // cap every sweep bound (for quicker partial runs)
    void cap_sizes(int max_size);
    void cap_vars(int vars);
};

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    bool inconclusive = false;
    std::string detail;
    long long millis = 0;
};

std::vector<CriterionResult> run_suite(const SuiteParams& params);

// Single criterion by id (1-11); throws on unknown id.
CriterionResult run_criterion(int id, const SuiteParams& params);

} // namespace kschur
