#pragma once

// The verification suite: every equidistribution theorem, lemma and
// observation as an executable check over exhaustive desk-scale enumeration,
// plus the distribution tables behind the CLI.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "fishlab/fishburn.hpp"

namespace fishlab {

struct VerifyReport {
    std::string name;
    std::string params;
    bool pass = false;
    std::string counterexample;  // present when an existential check fails
    double elapsed_ms = 0.0;
};

struct SuiteOptions {
    int max_weight = 7;     // exhaustive Fishburn-matrix bound
    int max_dyck_order = 8;
    int series_degree = 8;
    int jobs = 1;
};

// Exhaustive bound cap, FISHLAB_MAX_WEIGHT in the environment (default 8).
int max_weight_cap();

// Deterministically ordered reports covering every invariant of every module.
// Throws std::invalid_argument when a bound exceeds the cap.
std::vector<VerifyReport> run_suite(const SuiteOptions& options);

using PhiFn = std::function<FishburnMatrix(const FishburnMatrix&)>;

namespace checks {

// relcore
VerifyReport poset_minmax_nonempty(int max_weight);
VerifyReport contains_reflexive_transitive(int max_weight);
VerifyReport canonical_iso_invariant(int max_weight);
VerifyReport avoids_iso_invariant(int max_weight);
VerifyReport c1_union_linear(int max_order);

// fishmat
VerifyReport matrix_counts(int max_weight);
VerifyReport matrix_order_bijection(int max_weight);
VerifyReport lem_swse(int max_weight);
VerifyReport obs_fish(int max_weight);
VerifyReport extension_calculus(int max_dim);
VerifyReport obs_extend(int max_parent_dim);
VerifyReport inflate_deflate_roundtrip(int max_weight);
VerifyReport extreme_cell_containment(int max_weight);
VerifyReport antidiagonal_transpose_laws(int max_weight);
VerifyReport catalan_restriction_counts(int max_weight);
VerifyReport motzkin_restriction_counts(int max_weight);

// catalan
VerifyReport dyck_counts(int max_order);
VerifyReport obs_stat_c1(int max_order);
VerifyReport obs_stat_c2(int max_order);
VerifyReport catalan_pair_axioms(int max_order);
VerifyReport encoding_injectivity(int max_order);
VerifyReport ballot_narayana_counts(int max_order);
VerifyReport catstat_joint_symmetry(int max_order);
VerifyReport catstat_deutsch_multiset(int max_order);
VerifyReport pro_cat1(int max_order, int psi_order);
VerifyReport pro_cat2(int max_order);

// ftriples
VerifyReport lem_fish(int max_weight);
VerifyReport lem_fsft(int max_weight);
VerifyReport lem_c1mat_c2enum(int max_weight);
VerifyReport obs_extreme(int max_weight);
VerifyReport trivial_involution_laws(int max_weight);
VerifyReport thm_fish1(int max_weight, const PhiFn& phi_fn = phi);
VerifyReport thm_fish1_restriction(int max_weight);
VerifyReport thm_fish2_table(int max_weight);

// series
VerifyReport series_formula_vs_brute(int degree);
VerifyReport series_f_symmetry(int degree);
VerifyReport series_p_checks(int degree);
VerifyReport series_p_recurrence(int max_dim, int degree);
VerifyReport series_g_formulas(int degree);
VerifyReport series_ring_laws(int degree);

// permlab
VerifyReport avoider_counts(int max_size);
VerifyReport inverse_corner_stats(int max_size);
VerifyReport con_pat2_report(int max_size);
VerifyReport con_pat1_report(int max_size);

// cli
VerifyReport output_determinism();

}  // namespace checks

// -- distribution tables ---------------------------------------------------

enum class ObjectKind { Matrices, Dyck, Perms };

struct StatTable {
    std::vector<std::string> columns;  // stat names, then "count"
    std::vector<std::pair<std::vector<int>, std::int64_t>> rows;  // sorted by tuple
};

// Counts objects of size n per tuple of named statistics. An empty stat list
// yields a single total-count row. Matrix stats: w, lc, fr, pc, ne, wse, sne,
// sse, snew, ssew, diag. Dyck stats: asc, des, ret, pea. Permutation stats:
// lrmax, lrmin, rlmax, rlmin.
StatTable distribution_table(ObjectKind object, int n, const std::vector<std::string>& stats,
                             const EnumOptions& options = {});

std::string table_to_csv(const StatTable& t);
std::string table_to_json(const StatTable& t);
std::string table_to_text(const StatTable& t);

}  // namespace fishlab
