#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "kneadlab/model.hpp"

namespace kneadlab {

using BranchWord = std::vector<Branch>;

std::string word_string(const BranchWord& w);  // e.g. "-++"
BranchWord parse_word(const std::string& s);
// Shorter first, then letterwise with minus < plus.
bool word_less(const BranchWord& lhs, const BranchWord& rhs);

// Identity of a partition point: one of the two critical points, a labeled
// preimage, or a boundary marker (-1 or +1, encoded by the side).
struct PointLabel {
    enum class Kind { boundary, critical, preimage };
    Kind kind = Kind::critical;
    Branch side = Branch::minus;  // critical: which zero; boundary: -1 or +1
    BranchWord word;              // preimage labels only

    static PointLabel boundary(Branch side);
    static PointLabel critical(Branch side);
    static PointLabel preimage(BranchWord w);
};

std::string label_string(const PointLabel& label);  // "-1", "+1", "0-", "0+", or the word
// Dedup/report priority: critical labels first, then shorter words, then
// letterwise; boundary markers are never merged.
bool label_less(const PointLabel& lhs, const PointLabel& rhs);
bool label_equal(const PointLabel& lhs, const PointLabel& rhs);

struct LabeledPreimage {
    PointLabel label;
    SignedCoordinate x;
    double y = 0.0;
};

// All points of the fiber whose first n-1 images meet the critical line,
// sorted by x, plus the boundary markers. The two zero-width seams around
// 0^-/0^+ count as intervals like any consecutive pair.
struct FiberPartition {
    double y = 0.0;
    std::size_t n = 0;
    std::vector<LabeledPreimage> points;
    std::size_t interval_count() const { return points.empty() ? 0 : points.size() - 1; }
};

// Backward enumeration over branch words of length < n: pull the signed zero
// through the inverse-branch chain along the base fibers, discard chains
// whose true inverse does not exist, deduplicate coincident points (shortest
// then letterwise-smallest word wins).
FiberPartition preimage_set(const ToyModel& model, double y, std::size_t n);

// Full inverse-branch chain for a word at base fiber y: the innermost letter
// pulls back the signed zero, each further letter pulls back through its
// branch one fiber up. fell_back reports a fallback at any stage.
struct ChainResult {
    SignedCoordinate x;
    bool fell_back = false;
};
ChainResult pullback_chain(const ToyModel& model, const BranchWord& word, double y);

struct ConjugacyPair {
    PointLabel label;
    SignedCoordinate x_F;
    SignedCoordinate x_G;
};

// Depth-n pairing between the two fiber partitions, matched by label and
// verified strictly order-preserving.
struct ConjugacyTable {
    double y = 0.0;
    double psi_y = 0.0;
    std::size_t n = 0;
    std::vector<ConjugacyPair> pairs;  // ascending in x_F, boundary markers included
};

// Pairs every label of the depth-n partition of F at fiber y with the
// identically labeled point of G at fiber psi(y). Checks kneading agreement
// to depth n along the visited fiber tree first; throws
// combinatorial_inequivalence on kneading mismatch, label-set mismatch, or
// order disagreement, carrying the offending label.
ConjugacyTable build_Hn(const ToyModel& F, const ToyModel& G, double y, std::size_t n,
                        std::size_t psi_depth = 40);

struct CurveSample {
    double w = 0.0;
    SignedCoordinate x;
    bool fallback = false;
};
struct PreimageCurve {
    BranchWord word;
    std::vector<CurveSample> samples;
};

// The continuous preimage curve w -> x(w) of a fixed word across base
// fibers; fallback samples are kept and flagged.
PreimageCurve trace_curve(const ToyModel& model, const BranchWord& word,
                          const std::vector<double>& w_grid);

// Piecewise-linear fiber map through the table pairs, pinned at +-1.
// Exact on table nodes; both zeros map to 0.
double pl_conjugacy(const ConjugacyTable& table, const SignedCoordinate& x);
double pl_conjugacy(const ToyModel& F, const ToyModel& G, double y, std::size_t n,
                    const SignedCoordinate& x, std::size_t psi_depth = 40);

// Sup over the grid of |H~_n - H~_m|, m > n.
double convergence_estimate(const ToyModel& F, const ToyModel& G, std::size_t n, std::size_t m,
                            const std::vector<double>& x_grid, const std::vector<double>& y_grid,
                            std::size_t psi_depth = 40);

struct ModulusRow {
    double delta = 0.0;
    double modulus = 0.0;
};
// For each delta: max over fiber pairs closer than delta and depths <= n_max
// of the Hausdorff distance between the x-projections of the two preimage
// sets (boundary markers excluded).
std::vector<ModulusRow> equicontinuity_modulus(const ToyModel& model, std::size_t n_max,
                                               const std::vector<double>& delta_grid,
                                               const std::vector<double>& y_grid);

struct GapRow {
    std::size_t n = 0;
    double max_gap = 0.0;
};
// Largest gap between consecutive partition points (markers included) per
// depth; stalling gaps signal that the preimage set is not dense.
std::vector<GapRow> density_report(const ToyModel& model, double y,
                                   const std::vector<std::size_t>& n_list);

}  // namespace kneadlab
