#include "kneadlab/model.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace kneadlab {

char branch_char(Branch j) { return j == Branch::minus ? '-' : '+'; }

Branch branch_from_char(char c) {
    if (c == '-') return Branch::minus;
    if (c == '+') return Branch::plus;
    throw std::invalid_argument(std::string("not a branch letter: ") + c);
}

SignedCoordinate SignedCoordinate::regular(double v) {
    assert(v != 0.0);
    return SignedCoordinate{v, std::nullopt};
}

SignedCoordinate SignedCoordinate::zero(Branch j) { return SignedCoordinate{0.0, j}; }

SignedCoordinate SignedCoordinate::snapped(double v, Branch j, double eps) {
    if (std::fabs(v) <= eps) return zero(j);
    return SignedCoordinate{v, std::nullopt};
}

Branch SignedCoordinate::side() const {
    if (zero_sign) return *zero_sign;
    return value < 0.0 ? Branch::minus : Branch::plus;
}

int compare(const SignedCoordinate& lhs, const SignedCoordinate& rhs) {
    if (lhs.value < rhs.value) return -1;
    if (lhs.value > rhs.value) return 1;
    if (lhs.is_zero() && rhs.is_zero()) {
        int l = *lhs.zero_sign == Branch::minus ? 0 : 1;
        int r = *rhs.zero_sign == Branch::minus ? 0 : 1;
        return l < r ? -1 : (l > r ? 1 : 0);
    }
    // Equal nonzero values; a lone tagged zero against an untagged equal value
    // cannot occur for coordinates built through the factories.
    return 0;
}

bool operator<(const SignedCoordinate& lhs, const SignedCoordinate& rhs) {
    return compare(lhs, rhs) < 0;
}

bool operator==(const SignedCoordinate& lhs, const SignedCoordinate& rhs) {
    return compare(lhs, rhs) == 0;
}

std::string coordinate_string(const SignedCoordinate& x) {
    if (x.is_zero()) return *x.zero_sign == Branch::minus ? "0-" : "0+";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x.value);
    return buf;
}

double UnimodalFamily::eval(double y, double x) const {
    switch (kind) {
        case FamilyKind::tent:
            return param(y) * (1.0 - std::fabs(x)) - 1.0;
        case FamilyKind::quadratic:
            return param(y) * (1.0 - x * x) - 1.0;
        case FamilyKind::example3_q:
            return -x * x;
        case FamilyKind::example3_f:
            return -std::fabs(x);
        case FamilyKind::example3_g:
            return -std::sqrt(std::fabs(x));
    }
    return 0.0;
}

double UnimodalFamily::deriv_x(double y, double x) const {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    switch (kind) {
        case FamilyKind::tent:
            if (x == 0.0) return nan;
            return x < 0.0 ? param(y) : -param(y);
        case FamilyKind::quadratic:
            return -2.0 * param(y) * x;
        case FamilyKind::example3_q:
            return -2.0 * x;
        case FamilyKind::example3_f:
            if (x == 0.0) return nan;
            return x < 0.0 ? 1.0 : -1.0;
        case FamilyKind::example3_g:
            if (x == 0.0) return nan;
            return x < 0.0 ? 0.5 / std::sqrt(-x) : -0.5 / std::sqrt(x);
    }
    return nan;
}

double UnimodalFamily::deriv_x_from(double y, double x, Branch from) const {
    if (x != 0.0) return deriv_x(y, x);
    const double inf = std::numeric_limits<double>::infinity();
    switch (kind) {
        case FamilyKind::tent:
            return from == Branch::minus ? param(y) : -param(y);
        case FamilyKind::quadratic:
        case FamilyKind::example3_q:
            return 0.0;
        case FamilyKind::example3_f:
            return from == Branch::minus ? 1.0 : -1.0;
        case FamilyKind::example3_g:
            return from == Branch::minus ? inf : -inf;
    }
    return 0.0;
}

double UnimodalFamily::deriv_x2(double y, double x) const {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    switch (kind) {
        case FamilyKind::tent:
            return x == 0.0 ? nan : 0.0;
        case FamilyKind::quadratic:
            return -2.0 * param(y);
        case FamilyKind::example3_q:
            return -2.0;
        case FamilyKind::example3_f:
            return x == 0.0 ? nan : 0.0;
        case FamilyKind::example3_g: {
            if (x == 0.0) return nan;
            double ax = std::fabs(x);
            return 0.25 / (ax * std::sqrt(ax));
        }
    }
    return nan;
}

double UnimodalFamily::deriv_x3(double y, double x) const {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    switch (kind) {
        case FamilyKind::tent:
            return x == 0.0 ? nan : 0.0;
        case FamilyKind::quadratic:
        case FamilyKind::example3_q:
            return 0.0;
        case FamilyKind::example3_f:
            return x == 0.0 ? nan : 0.0;
        case FamilyKind::example3_g: {
            if (x == 0.0) return nan;
            double ax = std::fabs(x);
            double third = 0.375 / (ax * ax * std::sqrt(ax));
            return x < 0.0 ? third : -third;
        }
    }
    return nan;
}

double UnimodalFamily::deriv_y(double y, double x) const {
    (void)y;
    switch (kind) {
        case FamilyKind::tent:
            return p1 * (1.0 - std::fabs(x));
        case FamilyKind::quadratic:
            return p1 * (1.0 - x * x);
        case FamilyKind::example3_q:
        case FamilyKind::example3_f:
        case FamilyKind::example3_g:
            return 0.0;
    }
    return 0.0;
}

bool UnimodalFamily::smooth_at_turning_point() const {
    return kind == FamilyKind::quadratic || kind == FamilyKind::example3_q;
}

CantorMapSpec CantorMapSpec::affine(double a, double b) {
    CantorMapSpec s;
    s.kind = CantorKind::affine;
    s.a = a;
    s.b = b;
    return s;
}

double CantorMapSpec::k(double y) const {
    if (y <= a) return y / a;
    if (y >= b) return (1.0 - y) / (1.0 - b);
    return std::numeric_limits<double>::quiet_NaN();
}

double CantorMapSpec::k_prime(double y) const {
    if (y <= a) return 1.0 / a;
    if (y >= b) return -1.0 / (1.0 - b);
    return std::numeric_limits<double>::quiet_NaN();
}

double CantorMapSpec::K(Branch j, double z) const {
    return j == Branch::plus ? a * z : 1.0 - (1.0 - b) * z;
}

double CantorMapSpec::K_prime(Branch j, double z) const {
    (void)z;
    return j == Branch::plus ? a : -(1.0 - b);
}

double CantorMapSpec::expansion_bound() const {
    if (gamma > 0.0) return gamma;
    double worst = std::min(1.0 / a, 1.0 / (1.0 - b));
    // Constant-slope branches: back off so |k'| > gamma stays strict.
    return worst * (1.0 - 1e-6);
}

Point eval_step(const ToyModel& model, const Point& p) {
    const Branch j = p.x.side();
    const double fx = model.family.eval(p.y, p.x.value);
    const double ny = model.cantor.K(j, p.y);
    return Point{SignedCoordinate::snapped(fx, j, model.tol.zero_epsilon), ny};
}

Orbit eval_orbit(const ToyModel& model, const Point& p, std::size_t n) {
    Orbit orbit;
    orbit.points.reserve(n + 1);
    orbit.word.reserve(n);
    orbit.points.push_back(p);
    for (std::size_t i = 0; i < n; ++i) {
        const Point& cur = orbit.points.back();
        orbit.word.push_back(cur.x.side());
        orbit.points.push_back(eval_step(model, cur));
    }
    return orbit;
}

BranchInverseResult branch_inverse_checked(const ToyModel& model, Branch j, double x, double y) {
    const UnimodalFamily& f = model.family;
    const double v = f.turning_value(y);
    if (x > v) return {SignedCoordinate::zero(j), false};  // outside the image

    // Monotone half: increasing on [-1,0] for minus, decreasing on [0,1] for
    // plus. Bisection keeps f(lo) <= x <= f(hi) in the increasing frame.
    double lo, hi;
    if (j == Branch::minus) {
        lo = -1.0;
        hi = 0.0;
    } else {
        lo = 1.0;
        hi = 0.0;
    }
    while (std::fabs(hi - lo) > model.tol.root_tol) {
        const double mid = 0.5 * (lo + hi);
        if (f.eval(y, mid) < x)
            lo = mid;
        else
            hi = mid;
    }
    const double t = 0.5 * (lo + hi);
    return {SignedCoordinate::snapped(t, j, model.tol.zero_epsilon), true};
}

SignedCoordinate branch_inverse(const ToyModel& model, Branch j, double x, double y) {
    return branch_inverse_checked(model, j, x, y).x;
}

namespace {

void push_check(ValidationReport& rep, std::string name, bool pass, double residual,
                std::string note = "") {
    rep.checks.push_back({std::move(name), pass, residual, std::move(note)});
}

}  // namespace

ValidationReport validate_model(const ToyModel& model, int grid_density) {
    const int n = grid_density > 0 ? grid_density : model.tol.grid_density;
    const UnimodalFamily& f = model.family;
    const CantorMapSpec& c = model.cantor;
    ValidationReport rep;

    const auto ys = linspace(0.0, 1.0, static_cast<std::size_t>(n));
    const auto xs = linspace(-1.0, 1.0, static_cast<std::size_t>(n) | 1);  // odd count keeps 0 on the grid

    double worst_end = 0.0;
    for (double y : ys) {
        worst_end = std::max(worst_end, std::fabs(f.eval(y, -1.0) + 1.0));
        worst_end = std::max(worst_end, std::fabs(f.eval(y, 1.0) + 1.0));
    }
    push_check(rep, "family/endpoints", worst_end <= 1e-12, worst_end);

    // Strict unimodality via finite-difference signs on each half.
    double worst_mono = std::numeric_limits<double>::infinity();
    for (double y : ys) {
        for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
            const double x0 = xs[i], x1 = xs[i + 1];
            if (x1 <= 0.0)
                worst_mono = std::min(worst_mono, f.eval(y, x1) - f.eval(y, x0));
            else if (x0 >= 0.0)
                worst_mono = std::min(worst_mono, f.eval(y, x0) - f.eval(y, x1));
        }
    }
    push_check(rep, "family/unimodal", worst_mono > 0.0, worst_mono,
               "worst increment along the monotone halves");

    double lipschitz = 0.0;
    for (std::size_t i = 0; i + 1 < ys.size(); ++i) {
        const double dy = ys[i + 1] - ys[i];
        for (double x : xs)
            lipschitz = std::max(lipschitz, std::fabs(f.eval(ys[i + 1], x) - f.eval(ys[i], x)) / dy);
    }
    push_check(rep, "family/y-continuity", std::isfinite(lipschitz) && lipschitz < 1e8, lipschitz,
               "grid Lipschitz estimate");

    double range_excess = 0.0;
    for (double y : ys)
        for (double x : xs) range_excess = std::max(range_excess, std::fabs(f.eval(y, x)) - 1.0);
    push_check(rep, "family/range", range_excess <= 1e-12, std::max(0.0, range_excess));

    const bool structure_ok = 0.0 < c.a && c.a < c.b && c.b < 1.0;
    push_check(rep, "cantor/structure", structure_ok, structure_ok ? 0.0 : 1.0,
               structure_ok ? "" : "requires 0 < a < b < 1");

    if (structure_ok) {
        double worst_fix = std::max(std::fabs(c.k(0.0)), std::fabs(c.k(1.0)));
        worst_fix = std::max(worst_fix, std::fabs(c.k(c.a) - 1.0));
        worst_fix = std::max(worst_fix, std::fabs(c.k(c.b) - 1.0));
        push_check(rep, "cantor/endpoints", worst_fix <= 1e-12, worst_fix);

        double min_slope = std::numeric_limits<double>::infinity();
        for (double z : linspace(0.0, c.a, 64)) min_slope = std::min(min_slope, std::fabs(c.k_prime(z)));
        for (double z : linspace(c.b, 1.0, 64)) min_slope = std::min(min_slope, std::fabs(c.k_prime(z)));
        const double gamma = c.expansion_bound();
        push_check(rep, "cantor/expansion", gamma > 1.0 && min_slope > gamma, min_slope,
                   "gamma estimate (min |k'|)");

        double max_contraction = 0.0;
        for (double z : linspace(0.0, 1.0, 64)) {
            max_contraction = std::max(max_contraction, std::fabs(c.K_prime(Branch::plus, z)));
            max_contraction = std::max(max_contraction, std::fabs(c.K_prime(Branch::minus, z)));
        }
        push_check(rep, "cantor/contraction", max_contraction < 1.0 / gamma, max_contraction,
                   "max |K'|, bound 1/gamma");
    } else {
        push_check(rep, "cantor/endpoints", false, 0.0, "skipped: invalid a,b");
        push_check(rep, "cantor/expansion", false, 0.0, "skipped: invalid a,b");
        push_check(rep, "cantor/contraction", false, 0.0, "skipped: invalid a,b");
    }

    rep.pass = std::all_of(rep.checks.begin(), rep.checks.end(),
                           [](const ValidationCheck& ch) { return ch.pass; });
    return rep;
}

std::vector<double> linspace(double lo, double hi, std::size_t count) {
    std::vector<double> grid(count);
    if (count == 0) return grid;
    if (count == 1) {
        grid[0] = lo;
        return grid;
    }
    for (std::size_t i = 0; i < count; ++i)
        grid[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1);
    return grid;
}

std::vector<double> base_grid(const CantorMapSpec& spec, std::size_t count) {
    std::vector<double> grid = linspace(0.0, 1.0, count >= 4 ? count - 2 : count);
    grid.push_back(spec.a);
    grid.push_back(spec.b);
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    return grid;
}

}  // namespace kneadlab
