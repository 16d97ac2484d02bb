#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "kneadlab/equivalence.hpp"
#include "kneadlab/model.hpp"

namespace kneadlab {

// Entries of the upper-triangular Jacobian of the m-th iterate:
//   A = product of fiber derivatives (expansion along x),
//   B = shear term mixing fiber and base,
//   D = product of base-branch derivatives (contraction, |D| < gamma^-m).
// A critical hit (some iterate on the turning point before step m) makes the
// fiber derivative undefined; the entry is reported as 0 with the flag set.
struct CocycleEntries {
    double A = 1.0;
    double B = 0.0;
    double D = 1.0;
    std::size_t m = 0;
    bool critical_hit = false;
};

CocycleEntries cocycle(const ToyModel& model, const Point& p, std::size_t m);

// Central finite differences of the m-th iterate, the comparison oracle for
// cocycle. cell_violation reports that a perturbed orbit changed its branch
// word, which invalidates the difference quotient.
struct Jacobian2 {
    double dxdx = 1.0, dxdy = 0.0;
    double dydx = 0.0, dydy = 1.0;
    bool cell_violation = false;
};

Jacobian2 jacobian_fd(const ToyModel& model, const Point& p, std::size_t m, double h = 1e-6);

// D3f/Df - (3/2)(D2f/Df)^2; -infinity at the turning point and wherever
// Df vanishes.
double schwarzian(const UnimodalFamily& family, double y, double x);

// Sf < 0 at every grid point farther than turn_exclusion from the turning
// point. Hypothesis gate for the basin alternative below.
bool negative_schwarzian(const UnimodalFamily& family, double y, const std::vector<double>& x_grid,
                         double turn_exclusion = 1e-6);

// Max residual of S(g o f) = Sg(f) (Df)^2 + Sf over the grid, for the
// composition of the fiber maps along y_chain (applied first to last). Grid
// points whose partial images come within turn_exclusion of a turning point
// are skipped.
double schwarzian_composition_check(const UnimodalFamily& family,
                                    const std::vector<double>& y_chain,
                                    const std::vector<double>& x_grid,
                                    double turn_exclusion = 1e-6);

enum class PrincipleStatus { holds, fails, precondition_failed };
std::string principle_status_string(PrincipleStatus s);

struct PrincipleReport {
    PrincipleStatus status = PrincipleStatus::precondition_failed;
    double endpoint_min = 0.0;  // min(|Dg| at the two interval endpoints)
    double interior_min = 0.0;  // worst interior |Dg|
    double witness_x = 0.0;     // interior argmin, or the bad-derivative point
};

// Checks |Dg(x)| > min(|Dg(a)|, |Dg(b)|) at the interior grid points for the
// fiber composition g along word starting at base fiber y. A vanishing or
// undefined Dg anywhere on the grid is a precondition failure, not a verdict.
PrincipleReport minimum_principle_check(const ToyModel& model, const BranchWord& word, double y,
                                        double ax, double bx, std::size_t grid_count = 129);

enum class OrbitClass { strongly_attracting, repelling, neutral, on_critical_line };
std::string orbit_class_string(OrbitClass c);

struct PeriodicOrbitRecord {
    BranchWord word;  // canonical (lexicographically least rotation), length = period
    double y_star = 0.0;
    SignedCoordinate x_star;
    double multiplier_A = 0.0;  // one-sided fiber derivatives on the critical line
    double multiplier_D = 0.0;
    OrbitClass classification = OrbitClass::neutral;
};

// Enumerates primitive canonical words up to length m_max: the base fiber is
// the contraction fixed point of the word's inverse-branch composition; the
// fiber fixed points come from sign-change bisection plus exact grid roots on
// a 257-node grid; solutions whose orbit sign sequence differs from the word
// are dropped. Families with intervals of fixed points yield one record per
// grid node on the interval.
std::vector<PeriodicOrbitRecord> find_periodic_orbits(const ToyModel& model, std::size_t m_max);

struct BasinReport {
    PeriodicOrbitRecord orbit;
    double lo = 0.0;  // open immediate-basin interval on the fiber of y_star
    double hi = 0.0;
    bool touches_critical_line = false;
    bool touches_boundary = false;
    bool conclusive = false;
    std::size_t probe_rounds = 0;
};

// Grows the fiber interval around x_star by endpoint probing (64 probes per
// round, each iterated up to expansion_steps through the full two-dimensional
// map) and tests the closure for contact with the turning point or with the
// +-1 boundary. Contact resolution is limited by the probe refinement
// (1e-6); holes thinner than that pass unnoticed. Requires a strongly
// attracting orbit off the critical line.
BasinReport singer_check(const ToyModel& model, const PeriodicOrbitRecord& orbit,
                         std::size_t expansion_steps = 10000);

}  // namespace kneadlab
