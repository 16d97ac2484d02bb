#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kneadlab/model.hpp"

namespace kneadlab {

// Model description as read from a config file or picked from the built-in
// registry. Parameters p0/p1 mean s0/s1 for tent and c0/c1 for quadratic;
// the example3 kinds fix their own form and ignore them.
struct ModelDescriptor {
    std::string family_kind = "tent";  // tent | quadratic | example3-q | example3-f | example3-g
    double p0 = 2.0;
    double p1 = 0.0;
    std::string cantor_kind = "affine";
    double a = 1.0 / 3.0;
    double b = 2.0 / 3.0;
    std::optional<double> gamma;
    std::string name;
};

ToyModel make_model(const ModelDescriptor& desc, const Tolerances& tol = {});

// Built-in fixtures: tent2, quad2, quad1.2, example3-q, example3-f,
// example3-g, coupled (quadratic with c(y) = 1.5 + 0.4 y). All use the
// affine(1/3, 2/3) base map.
ToyModel make_fixture(const std::string& name, const Tolerances& tol = {});
const std::vector<std::string>& fixture_names();
bool is_fixture(const std::string& name);

}  // namespace kneadlab
