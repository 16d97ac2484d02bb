#include "kneadlab/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "kneadlab/analysis.hpp"
#include "kneadlab/cantor.hpp"
#include "kneadlab/equivalence.hpp"
#include "kneadlab/errors.hpp"
#include "kneadlab/fixtures.hpp"
#include "kneadlab/io.hpp"
#include "kneadlab/model.hpp"
#include "kneadlab/symbolic.hpp"

namespace kneadlab::cli {

namespace {

struct FileConfig {
    std::map<std::string, ModelDescriptor> models;
    std::map<std::string, std::string> run;
};

[[noreturn]] void config_error(const std::string& msg) {
    throw std::runtime_error(msg);
}

FileConfig load_file_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) config_error("cannot open config file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();

    FileConfig fc;
    for (const auto& [key, value] : parse_toml_subset(buf.str())) {
        if (key.rfind("run.", 0) == 0) {
            fc.run[key.substr(4)] = value;
            continue;
        }
        if (key.rfind("model.", 0) != 0)
            config_error("unrecognized config key: " + key +
                         " (expected [model.<name>] or [run])");
        const std::string rest = key.substr(6);
        const std::size_t dot = rest.rfind('.');
        if (dot == std::string::npos || dot == 0 || dot + 1 == rest.size())
            config_error("malformed model key: " + key);
        const std::string name = rest.substr(0, dot);
        const std::string field = rest.substr(dot + 1);
        ModelDescriptor& d = fc.models[name];
        d.name = name;
        if (field == "family")
            d.family_kind = value;
        else if (field == "cantor")
            d.cantor_kind = value;
        else if (field == "p0" || field == "p1" || field == "a" || field == "b" ||
                 field == "gamma") {
            char* end = nullptr;
            const double v = std::strtod(value.c_str(), &end);
            if (end == value.c_str() || *end != '\0')
                config_error("model." + name + "." + field + " is not a number: " + value);
            if (field == "p0") d.p0 = v;
            else if (field == "p1") d.p1 = v;
            else if (field == "a") d.a = v;
            else if (field == "b") d.b = v;
            else d.gamma = v;
        } else {
            config_error("unknown model field: " + key);
        }
    }
    return fc;
}

ToyModel resolve_model(const std::string& name, const FileConfig& fc) {
    const auto it = fc.models.find(name);
    if (it != fc.models.end()) return make_model(it->second);
    if (is_fixture(name)) return make_fixture(name);
    config_error("unknown model '" + name + "': not a built-in fixture and no [model." + name +
                 "] table in the config");
}

// CLI flag wins, then the [run] table, then the built-in fallback.
class ParamResolver {
  public:
    ParamResolver(const CLI::App* cmd, const FileConfig& fc) : cmd_(cmd), fc_(fc) {}

    double num(const std::string& flag, double cli_value, double fallback) const {
        if (given(flag)) return cli_value;
        if (const std::string* v = from_file(flag)) {
            char* end = nullptr;
            const double parsed = std::strtod(v->c_str(), &end);
            if (end == v->c_str() || *end != '\0')
                config_error("run." + key(flag) + " is not a number: " + *v);
            return parsed;
        }
        return fallback;
    }

    std::size_t count(const std::string& flag, std::size_t cli_value,
                      std::size_t fallback) const {
        if (given(flag)) return cli_value;
        if (const std::string* v = from_file(flag)) {
            char* end = nullptr;
            const unsigned long parsed = std::strtoul(v->c_str(), &end, 10);
            if (end == v->c_str() || *end != '\0')
                config_error("run." + key(flag) + " is not a count: " + *v);
            return static_cast<std::size_t>(parsed);
        }
        return fallback;
    }

    std::string text(const std::string& flag, const std::string& cli_value,
                     const std::string& fallback) const {
        if (given(flag)) return cli_value;
        if (const std::string* v = from_file(flag)) return *v;
        return fallback;
    }

  private:
    static std::string key(const std::string& flag) { return flag.substr(2); }

    bool given(const std::string& flag) const {
        const CLI::Option* opt = cmd_->get_option_no_throw(flag);
        return opt != nullptr && opt->count() > 0;
    }

    const std::string* from_file(const std::string& flag) const {
        const auto it = fc_.run.find(key(flag));
        return it == fc_.run.end() ? nullptr : &it->second;
    }

    const CLI::App* cmd_;
    const FileConfig& fc_;
};

std::vector<double> parse_delta_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        char* end = nullptr;
        const double v = std::strtod(item.c_str(), &end);
        if (end == item.c_str() || *end != '\0')
            config_error("bad delta value: " + item);
        out.push_back(v);
    }
    if (out.empty()) config_error("empty delta list");
    return out;
}

void check_unit_interval(const char* what, double v) {
    if (!(v >= 0.0 && v <= 1.0))
        config_error(std::string(what) + " must lie in [0,1], got " + g17(v));
}

// Every value bindable by some subcommand; each subcommand binds only its
// own flags, and only one subcommand parses per invocation.
struct Opts {
    std::string config;
    std::string format;
    std::string out;
    std::string model, model_a, model_b;
    double y = 0.0;
    double x = 0.0;
    std::string x_sign;
    std::string word;
    std::string deltas;
    std::size_t depth = 0, grid = 0, psi_depth = 0;
    std::size_t n = 0, m = 0, n_max = 0, m_max = 0;
    std::size_t samples = 0, x_count = 0, y_count = 0;
    std::size_t expansion_steps = 0;
};

void add_common(CLI::App* cmd, Opts& o) {
    cmd->add_option("--config", o.config, "TOML config file with [model.*] and [run] tables");
    cmd->add_option("--format", o.format, "Output format: csv or json (default csv)");
    cmd->add_option("--out", o.out, "Write output to this file instead of stdout");
}

struct CommandResult {
    std::vector<Row> rows;
    int exit_code = 0;
};

CommandResult cmd_validate(const ToyModel& model, std::size_t grid, std::ostream& err) {
    const ValidationReport report = validate_model(model, static_cast<int>(grid));
    CommandResult res;
    for (const ValidationCheck& c : report.checks)
        res.rows.push_back({text_field("check", c.name), bool_field("pass", c.pass),
                            num_field("residual", c.residual), text_field("note", c.note)});
    if (!report.pass) {
        err << "model '" << model.name << "' failed validation\n";
        res.exit_code = 1;
    }
    return res;
}

CommandResult cmd_kneading(const ToyModel& model, std::size_t depth, std::size_t grid) {
    CommandResult res;
    for (double y : base_grid(model.cantor, grid)) {
        for (Branch side : {Branch::minus, Branch::plus}) {
            const Itinerary it = kneading(model, y, side, depth);
            res.rows.push_back({num_field("y", y), text_field("side", {branch_char(side)}),
                                num_field("depth", depth),
                                text_field("sequence", itinerary_string(it))});
        }
    }
    return res;
}

CommandResult cmd_equiv(const ToyModel& F, const ToyModel& G, std::size_t depth,
                        std::size_t grid, std::size_t psi_depth, std::ostream& err) {
    const std::vector<double> y_grid = base_grid(F.cantor, grid);
    const EquivalenceVerdict v = kneading_equal(F, G, y_grid, depth, psi_depth);

    Row row{bool_field("equal", v.equal), num_field("depth", v.depth),
            num_field("grid_size", v.grid_size)};
    if (v.mismatch) {
        const KneadingMismatch& m = *v.mismatch;
        row.push_back(num_field("y_index", m.y_index));
        row.push_back(text_field("side", {branch_char(m.side)}));
        row.push_back(num_field("symbol_index", m.symbol_index));
        row.push_back(num_field("y", m.y));
        row.push_back(num_field("psi_y", m.psi_y));
        row.push_back(text_field("lhs", symbol_string(m.lhs)));
        row.push_back(text_field("rhs", symbol_string(m.rhs)));
    } else {
        for (const char* k : {"y_index", "side", "symbol_index", "y", "psi_y", "lhs", "rhs"})
            row.push_back(text_field(k, ""));
    }

    CommandResult res;
    res.rows.push_back(std::move(row));
    if (v.equal) {
        err << "equivalent to depth " << v.depth << " on " << v.grid_size << " fibers\n";
    } else {
        const KneadingMismatch& m = *v.mismatch;
        err << "kneading sequences differ: fiber y=" << g17(m.y) << " (psi(y)=" << g17(m.psi_y)
            << "), side " << branch_char(m.side) << ", symbol " << m.symbol_index << ": "
            << symbol_string(m.lhs) << " vs " << symbol_string(m.rhs) << "\n";
        res.exit_code = 1;
    }
    return res;
}

CommandResult cmd_psi(const ToyModel& F, const ToyModel& G, std::size_t grid,
                      std::size_t depth) {
    CommandResult res;
    for (double y : base_grid(F.cantor, grid)) {
        const PsiValue v = psi_extended(F.cantor, G.cantor, y, depth);
        res.rows.push_back({num_field("y", y), num_field("psi_y", v.value),
                            num_field("certified_width", v.certified_width),
                            text_field("code_prefix", code_string(v.code))});
    }
    return res;
}

CommandResult cmd_partition(const ToyModel& model, double y, std::size_t n) {
    const FiberPartition part = preimage_set(model, y, n);
    CommandResult res;
    for (const LabeledPreimage& p : part.points)
        res.rows.push_back({num_field("y", part.y), num_field("n", part.n),
                            text_field("word", label_string(p.label)),
                            num_field("x", p.x.value)});
    return res;
}

CommandResult cmd_conjugacy(const ToyModel& F, const ToyModel& G, double y, std::size_t n,
                            std::size_t samples, std::size_t psi_depth) {
    const ConjugacyTable table = build_Hn(F, G, y, n, psi_depth);
    CommandResult res;
    for (const ConjugacyPair& p : table.pairs)
        res.rows.push_back({text_field("label", label_string(p.label)),
                            num_field("x_F", p.x_F.value), num_field("x_G", p.x_G.value),
                            num_field("psi_y", table.psi_y)});
    for (double x : samples > 0 ? linspace(-1.0, 1.0, samples) : std::vector<double>{}) {
        const SignedCoordinate c =
            x == 0.0 ? SignedCoordinate::zero(Branch::plus) : SignedCoordinate::regular(x);
        res.rows.push_back({text_field("label", "pl"), num_field("x_F", x),
                            num_field("x_G", pl_conjugacy(table, c)),
                            num_field("psi_y", table.psi_y)});
    }
    return res;
}

CommandResult cmd_converge(const ToyModel& F, const ToyModel& G, std::size_t n, std::size_t m,
                           std::size_t x_count, std::size_t y_count, std::size_t psi_depth) {
    if (!(m > n && n >= 1)) config_error("converge needs m > n >= 1");
    const double d = convergence_estimate(F, G, n, m, linspace(-1.0, 1.0, x_count),
                                          base_grid(F.cantor, y_count), psi_depth);
    CommandResult res;
    res.rows.push_back(
        {num_field("n", n), num_field("m", m), num_field("sup_difference", d)});
    return res;
}

CommandResult cmd_equicont(const ToyModel& model, std::size_t n_max,
                           const std::vector<double>& deltas, std::size_t y_count) {
    CommandResult res;
    for (const ModulusRow& r :
         equicontinuity_modulus(model, n_max, deltas, base_grid(model.cantor, y_count)))
        res.rows.push_back({num_field("delta", r.delta), num_field("modulus", r.modulus)});
    return res;
}

CommandResult cmd_density(const ToyModel& model, double y, std::size_t n_max) {
    if (n_max < 1) config_error("density needs --n-max >= 1");
    std::vector<std::size_t> n_list(n_max);
    for (std::size_t i = 0; i < n_max; ++i) n_list[i] = i + 1;
    CommandResult res;
    for (const GapRow& r : density_report(model, y, n_list))
        res.rows.push_back({num_field("n", r.n), num_field("max_gap", r.max_gap)});
    return res;
}

Row orbit_row_prefix(const PeriodicOrbitRecord& rec) {
    return {text_field("word", word_string(rec.word)),
            num_field("period", rec.word.size()), num_field("y_star", rec.y_star),
            text_field("x_star", coordinate_string(rec.x_star))};
}

CommandResult cmd_orbits(const ToyModel& model, std::size_t m_max) {
    CommandResult res;
    for (const PeriodicOrbitRecord& rec : find_periodic_orbits(model, m_max)) {
        Row row = orbit_row_prefix(rec);
        row.push_back(num_field("A", rec.multiplier_A));
        row.push_back(num_field("D", rec.multiplier_D));
        row.push_back(text_field("classification", orbit_class_string(rec.classification)));
        res.rows.push_back(std::move(row));
    }
    return res;
}

CommandResult cmd_singer(const ToyModel& model, std::size_t m_max,
                         std::size_t expansion_steps, std::ostream& err) {
    CommandResult res;
    std::size_t attracting = 0;
    for (const PeriodicOrbitRecord& rec : find_periodic_orbits(model, m_max)) {
        if (rec.classification != OrbitClass::strongly_attracting) continue;
        ++attracting;
        const BasinReport rep = singer_check(model, rec, expansion_steps);
        Row row = orbit_row_prefix(rec);
        row.push_back(num_field("lo", rep.lo));
        row.push_back(num_field("hi", rep.hi));
        row.push_back(bool_field("touches_critical_line", rep.touches_critical_line));
        row.push_back(bool_field("touches_boundary", rep.touches_boundary));
        row.push_back(bool_field("conclusive", rep.conclusive));
        row.push_back(num_field("probe_rounds", rep.probe_rounds));
        res.rows.push_back(std::move(row));
    }
    if (attracting == 0)
        err << "no strongly attracting orbits up to period " << m_max << " in '" << model.name
            << "'\n";
    return res;
}

CommandResult cmd_cocycle(const ToyModel& model, const SignedCoordinate& x, double y,
                          std::size_t m) {
    const CocycleEntries e = cocycle(model, Point{x, y}, m);
    CommandResult res;
    res.rows.push_back({text_field("x", coordinate_string(x)), num_field("y", y),
                        num_field("m", e.m), num_field("A", e.A), num_field("B", e.B),
                        num_field("D", e.D), bool_field("critical_hit", e.critical_hit)});
    return res;
}

void write_result(const std::string& command, const std::string& format,
                  const std::string& out_path, const std::vector<Row>& rows,
                  std::ostream& fallback) {
    std::ofstream file;
    std::ostream* sink = &fallback;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) config_error("cannot open output file: " + out_path);
        sink = &file;
    }
    if (format == "csv")
        emit_csv(*sink, rows);
    else
        emit_json(*sink, command, rows);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Opts o;
    CLI::App app{"Kneading, conjugacy and basin toolkit for unimodal skew products"};
    app.name("kneadlab");
    app.require_subcommand(1);

    CLI::App* validate = app.add_subcommand("validate", "Check the model hypotheses on a grid");
    validate->add_option("--model", o.model, "Model name");
    validate->add_option("--grid", o.grid, "Validation grid density");

    CLI::App* kneading_cmd =
        app.add_subcommand("kneading", "Kneading sequences over a fiber grid");
    kneading_cmd->add_option("--model", o.model, "Model name");
    kneading_cmd->add_option("--depth", o.depth, "Symbols per sequence (default 32)");
    kneading_cmd->add_option("--grid", o.grid, "Fiber grid size (default 33)");

    CLI::App* equiv = app.add_subcommand("equiv", "Compare kneading data of two models");
    equiv->add_option("--model-a", o.model_a, "First model");
    equiv->add_option("--model-b", o.model_b, "Second model");
    equiv->add_option("--depth", o.depth, "Comparison depth (default 32)");
    equiv->add_option("--grid", o.grid, "Fiber grid size (default 33)");
    equiv->add_option("--psi-depth", o.psi_depth, "Base conjugacy coding depth (default 40)");

    CLI::App* psi_cmd = app.add_subcommand("psi", "Sample the base conjugacy");
    psi_cmd->add_option("--model-a", o.model_a, "First model");
    psi_cmd->add_option("--model-b", o.model_b, "Second model");
    psi_cmd->add_option("--grid", o.grid, "Sample grid size (default 65)");
    psi_cmd->add_option("--depth", o.depth, "Coding depth (default 40)");

    CLI::App* partition =
        app.add_subcommand("partition", "Turning-point preimages on one fiber");
    partition->add_option("--model", o.model, "Model name");
    partition->add_option("--y", o.y, "Base fiber (default 0.5)");
    partition->add_option("--depth", o.depth, "Preimage depth (default 3)");

    CLI::App* conjugacy =
        app.add_subcommand("conjugacy", "Depth-n pairing table and its piecewise-linear map");
    conjugacy->add_option("--model-a", o.model_a, "First model");
    conjugacy->add_option("--model-b", o.model_b, "Second model");
    conjugacy->add_option("--y", o.y, "Base fiber (default 0.5)");
    conjugacy->add_option("--depth", o.depth, "Pairing depth (default 3)");
    conjugacy->add_option("--samples", o.samples, "Also sample the PL map at this many x values");
    conjugacy->add_option("--psi-depth", o.psi_depth, "Base conjugacy coding depth (default 40)");

    CLI::App* converge =
        app.add_subcommand("converge", "Sup distance between depth-n and depth-m PL maps");
    converge->add_option("--model-a", o.model_a, "First model");
    converge->add_option("--model-b", o.model_b, "Second model");
    converge->add_option("--n", o.n, "Lower depth (default 4)");
    converge->add_option("--m", o.m, "Higher depth (default 8)");
    converge->add_option("--x-count", o.x_count, "Fiber sample count (default 65)");
    converge->add_option("--y-count", o.y_count, "Base sample count (default 9)");
    converge->add_option("--psi-depth", o.psi_depth, "Base conjugacy coding depth (default 40)");

    CLI::App* equicont =
        app.add_subcommand("equicont", "Hausdorff modulus of the preimage sets across fibers");
    equicont->add_option("--model", o.model, "Model name");
    equicont->add_option("--n-max", o.n_max, "Max preimage depth (default 6)");
    equicont->add_option("--deltas", o.deltas, "Comma-separated fiber distances");
    equicont->add_option("--y-count", o.y_count, "Base sample count (default 33)");

    CLI::App* density = app.add_subcommand("density", "Largest partition gap per depth");
    density->add_option("--model", o.model, "Model name");
    density->add_option("--y", o.y, "Base fiber (default 0.5)");
    density->add_option("--n-max", o.n_max, "Max depth (default 8)");

    CLI::App* orbits = app.add_subcommand("orbits", "Periodic orbits by base word");
    orbits->add_option("--model", o.model, "Model name");
    orbits->add_option("--m-max", o.m_max, "Max period (default 3)");

    CLI::App* singer = app.add_subcommand("singer", "Basin reach of attracting orbits");
    singer->add_option("--model", o.model, "Model name");
    singer->add_option("--m-max", o.m_max, "Max period (default 3)");
    singer->add_option("--expansion-steps", o.expansion_steps,
                       "Iteration budget per probe (default 10000)");

    CLI::App* cocycle_cmd = app.add_subcommand("cocycle", "Derivative cocycle at a point");
    cocycle_cmd->add_option("--model", o.model, "Model name");
    cocycle_cmd->add_option("--x", o.x, "Fiber coordinate (default 0.5)");
    cocycle_cmd->add_option("--x-sign", o.x_sign, "Side tag when x is 0: + or - (default +)");
    cocycle_cmd->add_option("--y", o.y, "Base coordinate (default 0.2)");
    cocycle_cmd->add_option("--m", o.m, "Number of steps (default 3)");

    for (CLI::App* sub : app.get_subcommands({})) add_common(sub, o);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    const CLI::App* cmd = app.get_subcommands().front();
    const std::string cmd_name = cmd->get_name();

    try {
        const FileConfig fc = o.config.empty() ? FileConfig{} : load_file_config(o.config);
        const ParamResolver R(cmd, fc);

        const std::string format = R.text("--format", o.format, "csv");
        if (format != "csv" && format != "json")
            config_error("unknown format '" + format + "' (expected csv or json)");
        const std::string out_path = R.text("--out", o.out, "");

        auto need_model = [&](const char* flag, const std::string& cli_value) {
            const std::string name = R.text(flag, cli_value, "");
            if (name.empty())
                config_error(std::string("missing ") + flag +
                             " (flag or the matching [run] key)");
            return resolve_model(name, fc);
        };

        CommandResult result;
        if (cmd_name == "validate") {
            result = cmd_validate(need_model("--model", o.model),
                                  R.count("--grid", o.grid, 0), err);
        } else if (cmd_name == "kneading") {
            result = cmd_kneading(need_model("--model", o.model),
                                  R.count("--depth", o.depth, 32), R.count("--grid", o.grid, 33));
        } else if (cmd_name == "equiv") {
            result = cmd_equiv(need_model("--model-a", o.model_a),
                               need_model("--model-b", o.model_b),
                               R.count("--depth", o.depth, 32), R.count("--grid", o.grid, 33),
                               R.count("--psi-depth", o.psi_depth, 40), err);
        } else if (cmd_name == "psi") {
            result = cmd_psi(need_model("--model-a", o.model_a),
                             need_model("--model-b", o.model_b), R.count("--grid", o.grid, 65),
                             R.count("--depth", o.depth, 40));
        } else if (cmd_name == "partition") {
            const double y = R.num("--y", o.y, 0.5);
            check_unit_interval("--y", y);
            result = cmd_partition(need_model("--model", o.model), y,
                                   R.count("--depth", o.depth, 3));
        } else if (cmd_name == "conjugacy") {
            const double y = R.num("--y", o.y, 0.5);
            check_unit_interval("--y", y);
            result = cmd_conjugacy(need_model("--model-a", o.model_a),
                                   need_model("--model-b", o.model_b), y,
                                   R.count("--depth", o.depth, 3),
                                   R.count("--samples", o.samples, 0),
                                   R.count("--psi-depth", o.psi_depth, 40));
        } else if (cmd_name == "converge") {
            result = cmd_converge(need_model("--model-a", o.model_a),
                                  need_model("--model-b", o.model_b), R.count("--n", o.n, 4),
                                  R.count("--m", o.m, 8), R.count("--x-count", o.x_count, 65),
                                  R.count("--y-count", o.y_count, 9),
                                  R.count("--psi-depth", o.psi_depth, 40));
        } else if (cmd_name == "equicont") {
            const std::string deltas =
                R.text("--deltas", o.deltas, "0,0.015625,0.03125,0.0625,0.125,0.25");
            result = cmd_equicont(need_model("--model", o.model),
                                  R.count("--n-max", o.n_max, 6), parse_delta_list(deltas),
                                  R.count("--y-count", o.y_count, 33));
        } else if (cmd_name == "density") {
            const double y = R.num("--y", o.y, 0.5);
            check_unit_interval("--y", y);
            result = cmd_density(need_model("--model", o.model), y,
                                 R.count("--n-max", o.n_max, 8));
        } else if (cmd_name == "orbits") {
            result = cmd_orbits(need_model("--model", o.model), R.count("--m-max", o.m_max, 3));
        } else if (cmd_name == "singer") {
            result = cmd_singer(need_model("--model", o.model), R.count("--m-max", o.m_max, 3),
                                R.count("--expansion-steps", o.expansion_steps, 10000), err);
        } else if (cmd_name == "cocycle") {
            const double xv = R.num("--x", o.x, 0.5);
            const double yv = R.num("--y", o.y, 0.2);
            check_unit_interval("--y", yv);
            const std::string sign = R.text("--x-sign", o.x_sign, "+");
            if (sign != "+" && sign != "-") config_error("--x-sign must be + or -");
            const SignedCoordinate x =
                xv == 0.0 ? SignedCoordinate::zero(branch_from_char(sign[0]))
                          : SignedCoordinate::regular(xv);
            result = cmd_cocycle(need_model("--model", o.model), x, yv,
                                 R.count("--m", o.m, 3));
        } else {
            config_error("unhandled subcommand: " + cmd_name);
        }

        write_result(cmd_name, format, out_path, result.rows, out);
        return result.exit_code;
    } catch (const domain_failure& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        err << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::runtime_error& e) {
        err << "config error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace kneadlab::cli
