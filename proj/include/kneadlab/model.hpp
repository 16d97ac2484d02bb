#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace kneadlab {

// Branch label. minus selects the increasing half [-1,0] of a fiber map and
// the base inverse branch onto [b,1]; plus selects the decreasing half [0,1]
// and the base inverse branch onto [0,a].
enum class Branch { minus, plus };

char branch_char(Branch j);
Branch branch_from_char(char c);  // accepts '-' and '+'

// x in [-1,1] with the turning point 0 duplicated into 0^- and 0^+.
// Invariant: zero_sign is present iff value == 0 exactly.
// Total order: x<0 < 0^- < 0^+ < x>0.
struct SignedCoordinate {
    double value = 0.0;
    std::optional<Branch> zero_sign;

    static SignedCoordinate regular(double v);  // v must be nonzero
    static SignedCoordinate zero(Branch j);
    // |v| <= eps collapses to the signed zero 0^j, otherwise a regular point.
    static SignedCoordinate snapped(double v, Branch j, double eps);

    bool is_zero() const { return zero_sign.has_value(); }
    // Side of the fiber domain this point lies on (the tag at zero).
    Branch side() const;
};

int compare(const SignedCoordinate& lhs, const SignedCoordinate& rhs);  // -1/0/+1
bool operator<(const SignedCoordinate& lhs, const SignedCoordinate& rhs);
bool operator==(const SignedCoordinate& lhs, const SignedCoordinate& rhs);
std::string coordinate_string(const SignedCoordinate& x);  // "0-", "0+", or the value

struct Point {
    SignedCoordinate x;
    double y = 0.0;  // base fiber in [0,1]
};

enum class FamilyKind { tent, quadratic, example3_q, example3_f, example3_g };

// Fiber family f(y): [-1,1] -> [-1,1], strictly increasing on [-1,0],
// strictly decreasing on [0,1], with f(y)(-1) = f(y)(1) = -1.
// tent: s(y)*(1-|x|)-1, quadratic: c(y)*(1-x^2)-1, with the parameter affine
// in the fiber: p(y) = p0 + p1*y. The example3 kinds are fixed maps sharing
// the turning value 0: q(x) = -x^2, f(x) = -|x| (fixes [-1,0] pointwise),
// g(x) = -sqrt(|x|).
struct UnimodalFamily {
    FamilyKind kind = FamilyKind::tent;
    double p0 = 2.0;
    double p1 = 0.0;

    double param(double y) const { return p0 + p1 * y; }
    double eval(double y, double x) const;
    double turning_value(double y) const { return eval(y, 0.0); }

    // d/dx. NaN at x == 0 for kinds with a kink or a cusp there.
    double deriv_x(double y, double x) const;
    // One-sided d/dx, meaningful at x == 0; +-infinity for example3_g.
    double deriv_x_from(double y, double x, Branch from) const;
    double deriv_x2(double y, double x) const;
    double deriv_x3(double y, double x) const;
    double deriv_y(double y, double x) const;
    bool smooth_at_turning_point() const;  // quadratic-type kinds only
};

enum class CantorKind { affine };

// Expanding two-branch base map k: [0,a] u [b,1] -> [0,1] with
// k(0) = k(1) = 0, k(a) = k(b) = 1 and |k'| > gamma > 1. K_plus/K_minus are
// the inverse branches onto [0,a] and [b,1]; both contract by < 1/gamma.
struct CantorMapSpec {
    CantorKind kind = CantorKind::affine;
    double a = 1.0 / 3.0;
    double b = 2.0 / 3.0;
    double gamma = 0.0;  // declared expansion bound; 0 means "use default"

    static CantorMapSpec affine(double a, double b);

    bool in_gap(double y) const { return y > a && y < b; }
    double k(double y) const;        // NaN inside the open gap (a,b)
    double k_prime(double y) const;  // signed; negative on [b,1]
    double K(Branch j, double z) const;
    double K_prime(Branch j, double z) const;  // signed
    // Declared bound if set, otherwise just below the worst branch slope so
    // the strict inequalities hold for constant-slope branches.
    double expansion_bound() const;
};

struct Tolerances {
    double zero_epsilon = 1e-12;  // snap width for the turning point
    double root_tol = 1e-13;      // bisection interval width
    int grid_density = 256;       // validation grid resolution
};

struct ToyModel {
    UnimodalFamily family;
    CantorMapSpec cantor;
    Tolerances tol;
    std::string name;  // fixture/config name used in reports
};

// One step of F(x,y) = (f(y)(x), K_j(y)) with j the side of x. An image
// x-value within zero_epsilon of 0 becomes the signed zero 0^j.
Point eval_step(const ToyModel& model, const Point& p);

struct Orbit {
    std::vector<Point> points;  // length n+1, element 0 is the start
    std::vector<Branch> word;   // branch applied at each step, length n
};
Orbit eval_orbit(const ToyModel& model, const Point& p, std::size_t n);

// xi_j: inverse of the branch-j half of f(y). Returns the unique preimage of
// x in the branch domain when x lies in the image [-1, f(y)(0)], found by
// bisection to root_tol; otherwise falls back to the signed zero 0^j, which
// makes the map total and continuous.
SignedCoordinate branch_inverse(const ToyModel& model, Branch j, double x, double y);
// Same, plus whether the true inverse existed (no fallback).
struct BranchInverseResult {
    SignedCoordinate x;
    bool exists;
};
BranchInverseResult branch_inverse_checked(const ToyModel& model, Branch j, double x, double y);

struct ValidationCheck {
    std::string name;
    bool pass = false;
    double residual = 0.0;  // worst-case residual, or the estimate named in note
    std::string note;
};
struct ValidationReport {
    std::vector<ValidationCheck> checks;
    bool pass = false;
};
// Grid checks of the standing model hypotheses. Failures are report entries,
// never exceptions. grid_density 0 uses the model default.
ValidationReport validate_model(const ToyModel& model, int grid_density = 0);

std::vector<double> linspace(double lo, double hi, std::size_t count);
// count-2 even samples of [0,1] plus the Cantor endpoints a and b, sorted and
// deduplicated (count is nominal when a or b collides with a sample).
std::vector<double> base_grid(const CantorMapSpec& spec, std::size_t count);

}  // namespace kneadlab
