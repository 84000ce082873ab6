#pragma once
// Integer-relation detection: exact-integer LLL with floating Gram-Schmidt
// data, the scaled-column relation lattice, iterated rank extraction for
// dimension tables, and membership hunts against the zeta basis.

#include "mtv/bigreal.hpp"
#include "mtv/indices.hpp"
#include "mtv/rational.hpp"
#include "mtv/values.hpp"

#include <string>
#include <vector>

namespace mtv {

struct IntegerLattice {
    std::vector<std::vector<Integer>> rows;

    size_t nrows() const { return rows.size(); }
    size_t ncols() const { return rows.empty() ? 0 : rows[0].size(); }
};

// Lovasz-reduced basis of the row lattice (delta-LLL, exact integer rows,
// floating Gram-Schmidt bookkeeping). Requires linearly independent rows.
IntegerLattice lll_reduce(const IntegerLattice& basis, double delta = 0.99);

// Canonical row Hermite form (pivots positive, entries above a pivot
// reduced into [0, pivot), zero rows dropped). Two row-equivalent bases
// have equal Hermite forms; used as the lattice-preservation oracle.
IntegerLattice hermite_normal_form(const IntegerLattice& basis);

// Exact determinant of a square integer matrix (fraction-free Bareiss).
Integer lattice_determinant(const IntegerLattice& basis);

// ---------------------------------------------------------------------------

struct RelationOptions {
    long digits = 60;          // decimal working precision of the inputs
    int coeff_bound_digits = 6; // accept only |a_i| < 10^this
    int guard_digits = 10;      // scale C = 10^(digits - coeff - guard)
};

enum class RelationStatus { Found, None, Inconclusive };

// A single integer relation sum a_i x_i ~ 0. Coefficients are primitive
// (gcd 1) with the first nonzero entry positive.
struct RelationResult {
    RelationStatus status = RelationStatus::None;
    std::vector<Integer> coeffs; // empty unless Found
    double residual_log10 = 0.0; // best combination's |residual|
    double accept_log10 = 0.0;   // accept: residual below this
    double reject_log10 = 0.0;   // none: best residual above this
};

// Inputs must carry >= prec_bits_for_digits(opt.digits) bits.
RelationResult find_integer_relation(const std::vector<BigReal>& xs,
                                     const RelationOptions& opt);

// Every reduced row that passes both gates (coefficient bound and
// re-verified residual), for rank extraction.
struct RelationHarvest {
    RelationStatus status = RelationStatus::None;
    std::vector<std::vector<Integer>> accepted;
    double best_residual_log10 = 0.0;
};

RelationHarvest harvest_relations(const std::vector<BigReal>& xs,
                                  const RelationOptions& opt);

// ---------------------------------------------------------------------------

enum class ValueFamily { T, t, Union };

struct RankOptions {
    long digits = 300;
    int coeff_bound_digits = 6;
    int guard_digits = 10;
    ValueCache* cache = nullptr;
    int jobs = 1;
};

struct DimensionReport {
    std::string family; // "T", "t", "union", "intersection"
    int weight = 0;
    int count = 0;     // values spanning the space
    int relations = 0; // independent integer relations found
    int dimension = 0; // count - relations
    bool inconclusive = false;
    std::vector<std::string> labels; // value names, parallel to columns
    std::vector<std::vector<Integer>> relation_rows;
};

// Evaluates every admissible value of the family at the given weight and
// repeatedly harvests relations, removing pivot columns after each pass,
// until no further relation is found.
DimensionReport relation_lattice_rank(ValueFamily family, int weight,
                                      const RankOptions& opt);

// Returns (union, intersection) reports for T + t at the given weight.
// The intersection dimension is derived as dim T + dim t - dim union;
// its report reuses the union run's relation rows. Optionally hands back
// the T-only and t-only reports computed along the way.
std::pair<DimensionReport, DimensionReport> dims_union_intersection(
    int weight, const RankOptions& opt, DimensionReport* outT = nullptr,
    DimensionReport* outt = nullptr);

// ---------------------------------------------------------------------------

// All compositions of the weight with parts in {2,3} (the conjectural
// zeta basis), deterministic order.
std::vector<Index> zeta_basis_compositions(int weight);

struct MembershipResult {
    bool found = false;
    Integer target_coeff;        // nonzero coefficient on x when found
    std::vector<Integer> coeffs; // parallel to basis, when found
    std::vector<Index> basis;    // the compositions searched against
    double residual_log10 = 0.0;
};

// Hunts for an integer relation between x and the zeta basis of the given
// weight; basis elements that relate among themselves are pruned and the
// hunt retried until x participates or nothing is found.
MembershipResult membership_in_Z(const BigReal& x, int weight,
                                 const RelationOptions& opt,
                                 const ValueContext& ctx);

} // namespace mtv
