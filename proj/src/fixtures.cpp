#include "kneadlab/fixtures.hpp"

#include <algorithm>
#include <stdexcept>

namespace kneadlab {

namespace {

FamilyKind family_kind_from(const std::string& s) {
    if (s == "tent") return FamilyKind::tent;
    if (s == "quadratic") return FamilyKind::quadratic;
    if (s == "example3-q") return FamilyKind::example3_q;
    if (s == "example3-f") return FamilyKind::example3_f;
    if (s == "example3-g") return FamilyKind::example3_g;
    throw std::invalid_argument("unknown family kind: " + s);
}

}  // namespace

ToyModel make_model(const ModelDescriptor& desc, const Tolerances& tol) {
    if (desc.cantor_kind != "affine")
        throw std::invalid_argument("unknown cantor kind: " + desc.cantor_kind);
    ToyModel m;
    m.family.kind = family_kind_from(desc.family_kind);
    m.family.p0 = desc.p0;
    m.family.p1 = desc.p1;
    m.cantor = CantorMapSpec::affine(desc.a, desc.b);
    if (desc.gamma) m.cantor.gamma = *desc.gamma;
    m.tol = tol;
    m.name = desc.name;
    return m;
}

ToyModel make_fixture(const std::string& name, const Tolerances& tol) {
    ModelDescriptor d;
    d.name = name;
    if (name == "tent2") {
        d.family_kind = "tent";
        d.p0 = 2.0;
    } else if (name == "quad2") {
        d.family_kind = "quadratic";
        d.p0 = 2.0;
    } else if (name == "quad1.2") {
        d.family_kind = "quadratic";
        d.p0 = 1.2;
    } else if (name == "example3-q" || name == "example3-f" || name == "example3-g") {
        d.family_kind = name;
    } else if (name == "coupled") {
        d.family_kind = "quadratic";
        d.p0 = 1.5;
        d.p1 = 0.4;
    } else {
        throw std::invalid_argument("unknown fixture: " + name);
    }
    return make_model(d, tol);
}

const std::vector<std::string>& fixture_names() {
    static const std::vector<std::string> names = {
        "tent2", "quad2", "quad1.2", "example3-q", "example3-f", "example3-g", "coupled"};
    return names;
}

bool is_fixture(const std::string& name) {
    const auto& names = fixture_names();
    return std::find(names.begin(), names.end(), name) != names.end();
}

}  // namespace kneadlab
