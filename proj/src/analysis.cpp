#include "kneadlab/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "kneadlab/errors.hpp"

namespace kneadlab {

CocycleEntries cocycle(const ToyModel& model, const Point& p, std::size_t m) {
    CocycleEntries e;
    e.m = m;
    Point cur = p;
    for (std::size_t step = 0; step < m; ++step) {
        const Branch j = cur.x.side();
        double fx;
        if (cur.x.is_zero()) {
            e.critical_hit = true;
            fx = 0.0;  // undefined fiber derivative, reported as 0 with the flag
        } else {
            fx = model.family.deriv_x(cur.y, cur.x.value);
        }
        const double fy = model.family.deriv_y(cur.y, cur.x.value);
        const double Ky = model.cantor.K_prime(j, cur.y);
        e.B = fx * e.B + fy * e.D;  // uses D before this step's base factor
        e.A = fx * e.A;
        e.D = Ky * e.D;
        cur = eval_step(model, cur);
    }
    return e;
}

Jacobian2 jacobian_fd(const ToyModel& model, const Point& p, std::size_t m, double h) {
    auto run = [&](double x, double y) {
        SignedCoordinate c = x == 0.0 ? SignedCoordinate::zero(p.x.side())
                                      : SignedCoordinate::regular(x);
        return eval_orbit(model, Point{c, y}, m);
    };
    const Orbit base = run(p.x.value, p.y);
    const Orbit xp = run(p.x.value + h, p.y);
    const Orbit xm = run(p.x.value - h, p.y);
    const Orbit yp = run(p.x.value, p.y + h);
    const Orbit ym = run(p.x.value, p.y - h);

    Jacobian2 jac;
    for (const Orbit* o : {&xp, &xm, &yp, &ym})
        jac.cell_violation = jac.cell_violation || o->word != base.word;

    const Point& fxp = xp.points.back();
    const Point& fxm = xm.points.back();
    const Point& fyp = yp.points.back();
    const Point& fym = ym.points.back();
    jac.dxdx = (fxp.x.value - fxm.x.value) / (2.0 * h);
    jac.dydx = (fxp.y - fxm.y) / (2.0 * h);
    jac.dxdy = (fyp.x.value - fym.x.value) / (2.0 * h);
    jac.dydy = (fyp.y - fym.y) / (2.0 * h);
    return jac;
}

double schwarzian(const UnimodalFamily& family, double y, double x) {
    const double neg_inf = -std::numeric_limits<double>::infinity();
    if (x == 0.0) return neg_inf;  // turning point
    const double d1 = family.deriv_x(y, x);
    if (!std::isfinite(d1) || d1 == 0.0) return neg_inf;
    const double d2 = family.deriv_x2(y, x);
    const double d3 = family.deriv_x3(y, x);
    const double r = d2 / d1;
    return d3 / d1 - 1.5 * r * r;
}

bool negative_schwarzian(const UnimodalFamily& family, double y, const std::vector<double>& x_grid,
                         double turn_exclusion) {
    for (double x : x_grid) {
        if (std::fabs(x) < turn_exclusion) continue;
        if (!(schwarzian(family, y, x) < 0.0)) return false;
    }
    return true;
}

double schwarzian_composition_check(const UnimodalFamily& family,
                                    const std::vector<double>& y_chain,
                                    const std::vector<double>& x_grid, double turn_exclusion) {
    double residual = 0.0;
    for (double x : x_grid) {
        // Forward pass: composed derivatives up to order three, and the
        // composition rule folded alongside them.
        double t = x;
        double g1 = 1.0, g2 = 0.0, g3 = 0.0;
        double s_folded = 0.0;
        bool skip = false;
        for (double y : y_chain) {
            if (std::fabs(t) < turn_exclusion) {
                skip = true;
                break;
            }
            const double d1 = family.deriv_x(y, t);
            const double d2 = family.deriv_x2(y, t);
            const double d3 = family.deriv_x3(y, t);
            s_folded += schwarzian(family, y, t) * g1 * g1;
            g3 = d3 * g1 * g1 * g1 + 3.0 * d2 * g1 * g2 + d1 * g3;
            g2 = d2 * g1 * g1 + d1 * g2;
            g1 = d1 * g1;
            t = family.eval(y, t);
        }
        if (skip || g1 == 0.0) continue;
        const double r = g2 / g1;
        const double s_direct = g3 / g1 - 1.5 * r * r;
        residual = std::max(residual, std::fabs(s_direct - s_folded));
    }
    return residual;
}

std::string principle_status_string(PrincipleStatus s) {
    switch (s) {
        case PrincipleStatus::holds: return "holds";
        case PrincipleStatus::fails: return "fails";
        case PrincipleStatus::precondition_failed: return "precondition_failed";
    }
    return "?";
}

namespace {

// Base fibers visited while composing the fiber maps along word from y.
std::vector<double> word_fibers(const ToyModel& model, const BranchWord& word, double y) {
    std::vector<double> fibers(word.size());
    double u = y;
    for (std::size_t i = 0; i < word.size(); ++i) {
        fibers[i] = u;
        u = model.cantor.K(word[i], u);
    }
    return fibers;
}

double compose_along(const ToyModel& model, const std::vector<double>& fibers, double x) {
    double t = x;
    for (double u : fibers) t = model.family.eval(u, t);
    return t;
}

double compose_deriv(const ToyModel& model, const std::vector<double>& fibers, double x) {
    double t = x;
    double d = 1.0;
    for (double u : fibers) {
        d *= model.family.deriv_x(u, t);
        t = model.family.eval(u, t);
    }
    return d;
}

}  // namespace

PrincipleReport minimum_principle_check(const ToyModel& model, const BranchWord& word, double y,
                                        double ax, double bx, std::size_t grid_count) {
    const std::vector<double> fibers = word_fibers(model, word, y);
    const std::vector<double> grid = linspace(ax, bx, grid_count);

    PrincipleReport rep;
    std::vector<double> mag(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double d = compose_deriv(model, fibers, grid[i]);
        if (!std::isfinite(d) || std::fabs(d) <= 1e-12) {
            rep.status = PrincipleStatus::precondition_failed;
            rep.witness_x = grid[i];
            return rep;
        }
        mag[i] = std::fabs(d);
    }

    rep.endpoint_min = std::min(mag.front(), mag.back());
    rep.interior_min = std::numeric_limits<double>::infinity();
    for (std::size_t i = 1; i + 1 < grid.size(); ++i) {
        if (mag[i] < rep.interior_min) {
            rep.interior_min = mag[i];
            rep.witness_x = grid[i];
        }
    }
    rep.status = rep.interior_min > rep.endpoint_min ? PrincipleStatus::holds
                                                     : PrincipleStatus::fails;
    return rep;
}

std::string orbit_class_string(OrbitClass c) {
    switch (c) {
        case OrbitClass::strongly_attracting: return "strongly_attracting";
        case OrbitClass::repelling: return "repelling";
        case OrbitClass::neutral: return "neutral";
        case OrbitClass::on_critical_line: return "on_critical_line";
    }
    return "?";
}

namespace {

bool is_primitive(const BranchWord& w) {
    const std::size_t m = w.size();
    for (std::size_t d = 1; d < m; ++d) {
        if (m % d != 0) continue;
        bool repeats = true;
        for (std::size_t i = d; i < m && repeats; ++i) repeats = w[i] == w[i % d];
        if (repeats) return false;
    }
    return true;
}

bool is_canonical_rotation(const BranchWord& w) {
    BranchWord rot = w;
    for (std::size_t r = 1; r < w.size(); ++r) {
        std::rotate(rot.begin(), rot.begin() + 1, rot.end());
        if (std::lexicographical_compare(rot.begin(), rot.end(), w.begin(), w.end())) return false;
    }
    return true;
}

// Fixed base fiber of K_{j_m} o ... o K_{j_1}; the composition contracts by
// at least gamma^-m, so plain iteration converges fast.
double base_fixed_point(const ToyModel& model, const BranchWord& word) {
    double z = 0.5;
    for (int it = 0; it < 400; ++it) {
        double next = z;
        for (Branch j : word) next = model.cantor.K(j, next);
        if (std::fabs(next - z) <= 1e-15) return next;
        z = next;
    }
    return z;
}

}  // namespace

std::vector<PeriodicOrbitRecord> find_periodic_orbits(const ToyModel& model, std::size_t m_max) {
    std::vector<PeriodicOrbitRecord> records;
    const double zero_eps = model.tol.zero_epsilon;

    for (std::size_t m = 1; m <= m_max; ++m) {
        std::vector<BranchWord> words = {{}};
        for (std::size_t i = 0; i < m; ++i) {
            std::vector<BranchWord> next;
            next.reserve(words.size() * 2);
            for (const BranchWord& w : words) {
                for (Branch j : {Branch::minus, Branch::plus}) {
                    BranchWord ext = w;
                    ext.push_back(j);
                    next.push_back(std::move(ext));
                }
            }
            words = std::move(next);
        }

        for (const BranchWord& w : words) {
            if (!is_primitive(w) || !is_canonical_rotation(w)) continue;
            const double y_star = base_fixed_point(model, w);
            const std::vector<double> fibers = word_fibers(model, w, y_star);

            // Roots of g(x) - x: exact grid roots plus sign-change bisection.
            const std::vector<double> grid = linspace(-1.0, 1.0, 257);
            std::vector<double> gap_values(grid.size());
            for (std::size_t i = 0; i < grid.size(); ++i)
                gap_values[i] = compose_along(model, fibers, grid[i]) - grid[i];

            std::vector<double> roots;
            auto add_root = [&](double r) {
                for (double seen : roots)
                    if (std::fabs(seen - r) <= 1e-9) return;
                roots.push_back(r);
            };
            for (std::size_t i = 0; i < grid.size(); ++i)
                if (std::fabs(gap_values[i]) <= 1e-12) add_root(grid[i]);
            for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
                if (gap_values[i] == 0.0 || gap_values[i + 1] == 0.0) continue;
                if ((gap_values[i] < 0.0) == (gap_values[i + 1] < 0.0)) continue;
                double lo = grid[i], hi = grid[i + 1];
                double flo = gap_values[i];
                while (hi - lo > model.tol.root_tol) {
                    const double mid = 0.5 * (lo + hi);
                    const double fmid = compose_along(model, fibers, mid) - mid;
                    if ((fmid < 0.0) == (flo < 0.0)) {
                        lo = mid;
                        flo = fmid;
                    } else {
                        hi = mid;
                    }
                }
                add_root(0.5 * (lo + hi));
            }

            for (double r : roots) {
                SignedCoordinate x0 = SignedCoordinate::snapped(r, w.front(), zero_eps);
                const Orbit orbit = eval_orbit(model, Point{x0, y_star}, m);
                if (orbit.word != w) continue;  // sign sequence must spell the word
                if (std::fabs(orbit.points.back().x.value - x0.value) > 1e-9) continue;

                PeriodicOrbitRecord rec;
                rec.word = w;
                rec.y_star = y_star;
                rec.x_star = x0;
                rec.multiplier_A = 1.0;
                rec.multiplier_D = 1.0;
                bool critical = false;
                for (std::size_t i = 0; i < m; ++i) {
                    const Point& pt = orbit.points[i];
                    critical = critical || pt.x.is_zero();
                    rec.multiplier_A *=
                        model.family.deriv_x_from(pt.y, pt.x.value, pt.x.side());
                    rec.multiplier_D *= model.cantor.K_prime(pt.x.side(), pt.y);
                }
                const double mag = std::fabs(rec.multiplier_A);
                if (critical)
                    rec.classification = OrbitClass::on_critical_line;
                else if (mag < 1.0 - 1e-9)
                    rec.classification = OrbitClass::strongly_attracting;
                else if (mag > 1.0 + 1e-9)
                    rec.classification = OrbitClass::repelling;
                else
                    rec.classification = OrbitClass::neutral;
                records.push_back(std::move(rec));
            }
        }
    }

    std::sort(records.begin(), records.end(),
              [](const PeriodicOrbitRecord& lhs, const PeriodicOrbitRecord& rhs) {
                  if (lhs.word.size() != rhs.word.size()) return lhs.word.size() < rhs.word.size();
                  if (lhs.word != rhs.word)
                      return std::lexicographical_compare(lhs.word.begin(), lhs.word.end(),
                                                          rhs.word.begin(), rhs.word.end());
                  return lhs.x_star < rhs.x_star;
              });
    return records;
}

namespace {

// Whether the two-dimensional orbit of (x, y_star) locks onto the periodic
// orbit within the step budget.
bool converges_to_orbit(const ToyModel& model, const std::vector<Point>& cycle, double x,
                        double y, std::size_t steps, Branch zero_side) {
    Point p{x == 0.0 ? SignedCoordinate::zero(zero_side) : SignedCoordinate::regular(x), y};
    for (std::size_t i = 0; i <= steps; ++i) {
        double dist = std::numeric_limits<double>::infinity();
        for (const Point& q : cycle)
            dist = std::min(dist, std::fabs(p.x.value - q.x.value) + std::fabs(p.y - q.y));
        if (dist < 1e-8) return true;
        p = eval_step(model, p);
    }
    return false;
}

}  // namespace

BasinReport singer_check(const ToyModel& model, const PeriodicOrbitRecord& orbit,
                         std::size_t expansion_steps) {
    if (orbit.classification != OrbitClass::strongly_attracting)
        throw precondition_violation(
            "basin verification needs a strongly attracting orbit off the critical line, got " +
            orbit_class_string(orbit.classification));

    BasinReport rep;
    rep.orbit = orbit;
    const std::size_t m = orbit.word.size();
    const Orbit cycle = eval_orbit(model, Point{orbit.x_star, orbit.y_star}, m - 1);

    auto probe = [&](double x) {
        return converges_to_orbit(model, cycle.points, x, orbit.y_star, expansion_steps,
                                  orbit.word.front());
    };

    // Seed interval around the attractor, clamped to the fiber domain.
    double eps = 1e-4;
    const auto lo_seed = [&] { return std::max(orbit.x_star.value - eps, -1.0); };
    const auto hi_seed = [&] { return std::min(orbit.x_star.value + eps, 1.0); };
    while (eps > 1e-9 && !(probe(lo_seed()) && probe(hi_seed())))
        eps *= 0.01;
    if (eps <= 1e-9) {
        rep.lo = rep.hi = orbit.x_star.value;
        rep.conclusive = false;
        return rep;
    }
    rep.conclusive = true;

    // Push each endpoint outward: per round, 64 probes between the current
    // endpoint and the barrier; the barrier moves to the first failure.
    auto expand = [&](double start, double barrier) {
        double good = start;
        for (int round = 0; round < 12; ++round) {
            if (std::fabs(barrier - good) < 1e-7) break;
            ++rep.probe_rounds;
            bool failed = false;
            for (int i = 1; i <= 64; ++i) {
                const double x = good + (barrier - good) * (static_cast<double>(i) / 65.0);
                if (probe(x)) {
                    good = x;
                } else {
                    barrier = x;
                    failed = true;
                    break;
                }
            }
            if (!failed && std::fabs(barrier - good) < 1e-7) break;
        }
        return good;
    };
    rep.lo = expand(lo_seed(), -1.0);
    rep.hi = expand(hi_seed(), 1.0);

    const double contact_tol = 1e-6;
    rep.touches_critical_line =
        rep.lo <= contact_tol && rep.hi >= -contact_tol;  // closure meets the turning point
    rep.touches_boundary = rep.lo <= -1.0 + contact_tol || rep.hi >= 1.0 - contact_tol;
    return rep;
}

}  // namespace kneadlab
