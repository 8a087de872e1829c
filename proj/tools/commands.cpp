#include "commands.hpp"

#include <charconv>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "mace/capacity.hpp"
#include "mace/diagnostics.hpp"
#include "mace/errors.hpp"
#include "mace/families.hpp"
#include "mace/family_spec.hpp"
#include "mace/format.hpp"
#include "mace/measures.hpp"
#include "mace/records.hpp"
#include "mace/state_io.hpp"

namespace mace::cli {

const std::vector<std::string> kDefaultReportStates{"ghz", "cluster", "chi", "w", "w2", "ss", "rvb"};

nlohmann::json report_row_record(const ReportRow& row, const std::vector<std::string>& labels) {
    return {{"state_name", row.state_name},
            {"c_assisted", bracket_record(row.c_assisted, labels)},
            {"c_unassisted", bracket_record(row.c_unassisted, labels)},
            {"ggm", row.ggm},
            {"gm", row.gm}};
}

namespace {

struct Options {
    std::uint64_t seed = GmOptions{}.seed;
    unsigned threads = 0;

    std::string which;
    std::string spec;
    std::string file;
    std::string split;
    int restarts = GmOptions{}.restarts;
    double tol = GmOptions{}.tol;
    bool json = false;

    std::string kind = "unassisted";
    std::string grid = "101x101";
    std::string out;
    bool independent = false;

    std::vector<std::string> states;
};

struct Resolved {
    std::string name;
    PureState state;
};

Resolved resolve_state(const std::string& spec, const std::string& file) {
    if (!spec.empty() && !file.empty()) throw SpecError("give either a state spec or --file, not both");
    if (spec.empty() && file.empty()) throw SpecError("no state given; pass a spec such as 'w2' or --file PATH");
    const FamilySpec parsed = file.empty() ? parse_family_spec(spec) : FamilySpec{family::Raw{file}};
    return {family_name(parsed), make_state(parsed)};
}

SweepGrid parse_grid(const std::string& text, bool independent) {
    const auto x = text.find('x');
    auto number = [&](std::string_view part) {
        int value = 0;
        const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
        if (ec != std::errc{} || ptr != part.data() + part.size() || value < 2)
            throw SpecError("grid must look like NxM with N, M >= 2, got '" + text + "'");
        return value;
    };
    if (x == std::string::npos) throw SpecError("grid must look like NxM, got '" + text + "'");
    const std::string_view view(text);
    return SweepGrid{number(view.substr(0, x)), number(view.substr(x + 1)), independent};
}

GmOptions gm_options(const Options& o) {
    GmOptions g;
    g.restarts = o.restarts;
    g.tol = o.tol;
    g.seed = o.seed;
    g.threads = o.threads;
    return g;
}

void print_numbers(std::ostream& out, const std::vector<double>& values) {
    for (std::size_t k = 0; k < values.size(); ++k) out << (k ? " " : "") << format_number(values[k]);
    out << '\n';
}

std::vector<double> nonzero(const SchmidtSpectrum& spectrum) {
    std::vector<double> values;
    for (double v : spectrum.squared_coeffs)
        if (v > 0.0) values.push_back(v);
    return values;
}

int cmd_measure(const Options& o, std::ostream& out) {
    const auto [name, state] = resolve_state(o.spec, o.file);
    nlohmann::json record{{"state", name}, {"measure", o.which}};

    if (o.which == "ggm") {
        const double value = ggm(state);
        record["value"] = value;
        if (!o.json) out << format_number(value) << '\n';
    } else if (o.which == "gm") {
        const auto r = gm(state, gm_options(o));
        if (!r.converged) warn("gm: iteration cap reached before convergence; reporting best value so far");
        record["value"] = r.value;
        record["best_overlap"] = r.best_overlap;
        record["converged"] = r.converged;
        record["restarts"] = r.restarts_used;
        record["iterations"] = r.iterations;
        if (!o.json) out << format_number(r.value) << '\n';
    } else if (o.which == "schmidt") {
        const auto& labels = state.party_labels();
        std::vector<Bipartition> splits;
        if (o.split.empty()) {
            splits = all_bipartitions(state.num_parties());
        } else {
            try {
                splits.push_back(Bipartition::parse(o.split, labels));
            } catch (const std::invalid_argument& e) {
                throw SpecError(e.what());
            }
        }
        nlohmann::json spectra = nlohmann::json::object();
        for (const auto& split : splits) {
            const auto values = nonzero(schmidt_spectrum(state, split));
            spectra[split.to_string(labels)] = values;
            if (o.json) continue;
            if (splits.size() > 1) out << split.to_string(labels) << ' ';
            print_numbers(out, values);
        }
        record["spectra"] = spectra;
    } else {
        const auto c = bipartite_capacities(state);
        record["classical"] = c.classical;
        record["quantum"] = c.quantum;
        record["entanglement"] = c.entanglement;
        if (!o.json) {
            out << "classical " << format_number(c.classical) << '\n'
                << "quantum " << format_number(c.quantum) << '\n'
                << "entanglement " << format_number(c.entanglement) << '\n';
        }
    }
    if (o.json) out << record.dump() << '\n';
    return kExitOk;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream file(path);
    if (!file) throw IoError("cannot write '" + path + "'");
    file << content;
    if (!file) throw IoError("failed writing '" + path + "'");
}

int cmd_capacity(const Options& o, std::ostream& out) {
    const auto [name, state] = resolve_state(o.spec, o.file);
    const CapacityKind kind = [&] {
        try {
            return parse_capacity_kind(o.kind);
        } catch (const std::invalid_argument& e) {
            throw SpecError(e.what());
        }
    }();
    const SweepGrid grid = parse_grid(o.grid, o.independent);
    if (!state.all_qubits() || state.num_parties() != 4)
        throw ShapeError("capacity brackets need a 4-qubit state, '" + name + "' is not one");

    const SweepResult sweep = sweep_unassisted(state, grid, {}, o.threads);
    const CapacityBracket bracket = capacity_bracket(state, kind, sweep);
    if (!o.out.empty()) {
        std::ostringstream csv;
        write_sweep_csv(csv, sweep, state.party_labels());
        write_file(o.out, csv.str());
    }
    if (o.json)
        out << bracket_record(bracket, state.party_labels()).dump() << '\n';
    else
        out << format_number(bracket.lower) << ' ' << format_number(bracket.upper) << '\n';
    return kExitOk;
}

std::string bracket_cell(const CapacityBracket& b) {
    return "[" + format_number(b.lower) + ", " + format_number(b.upper) + "]";
}

int cmd_report(const Options& o, std::ostream& out, std::ostream& err) {
    const SweepGrid grid = parse_grid(o.grid, o.independent);
    const auto& specs = o.states.empty() ? kDefaultReportStates : o.states;

    nlohmann::json rows = nlohmann::json::array();
    nlohmann::json failed = nlohmann::json::array();
    std::vector<ReportRow> table;
    for (const auto& spec : specs) {
        try {
            const auto [name, state] = resolve_state(spec, "");
            const SweepResult sweep = sweep_unassisted(state, grid, {}, o.threads);
            ReportRow row{name, capacity_bracket(state, CapacityKind::Assisted, sweep),
                          capacity_bracket(state, CapacityKind::Unassisted, sweep), ggm(state),
                          gm(state, gm_options(o)).value};
            rows.push_back(report_row_record(row, state.party_labels()));
            table.push_back(std::move(row));
        } catch (const std::exception& e) {
            err << "report: " << spec << ": " << e.what() << '\n';
            failed.push_back({{"state_name", spec}, {"error", e.what()}});
        }
    }

    const nlohmann::json document{{"rows", rows}, {"failed", failed}};
    if (!o.out.empty()) write_file(o.out, document.dump(2) + "\n");

    if (o.json) {
        out << document.dump() << '\n';
    } else {
        auto cell = [&](const std::string& text, int width) { out << std::setw(width) << text << ' '; };
        out << std::left;
        cell("state", 11);
        cell("C_a", 33);
        cell("C_ua", 33);
        cell("GGM", 15);
        out << "GM\n";
        for (const auto& row : table) {
            cell(row.state_name, 11);
            cell(bracket_cell(row.c_assisted), 33);
            cell(bracket_cell(row.c_unassisted), 33);
            cell(format_number(row.ggm), 15);
            out << format_number(row.gm) << '\n';
        }
    }
    return failed.empty() ? kExitOk : kExitFailure;
}

int cmd_state_show(const Options& o, std::ostream& out) {
    const auto [name, state] = resolve_state(o.spec, o.file);
    if (!o.out.empty()) {
        write_state_file(o.out, state);
        return kExitOk;
    }
    if (o.json) {
        write_state_document(out, state);
        out << '\n';
        return kExitOk;
    }
    out << name << ": parties";
    for (std::size_t k = 0; k < state.num_parties(); ++k) out << ' ' << state.label(k) << '(' << state.local_dim(k) << ')';
    out << '\n';
    for (std::size_t i = 0; i < state.size(); ++i) {
        const Complex a = state.amplitude(i);
        if (std::abs(a) < 1e-15) continue;
        out << state.basis_label(i) << ' ' << format_number(a.real()) << ' ' << format_number(a.imag()) << '\n';
    }
    return kExitOk;
}

class ScopedWarnings {
  public:
    explicit ScopedWarnings(std::ostream& err)
        : previous_(set_warning_handler([&err](std::string_view m) { err << "warning: " << m << '\n'; })) {}
    ~ScopedWarnings() { set_warning_handler(previous_); }
    ScopedWarnings(const ScopedWarnings&) = delete;
    ScopedWarnings& operator=(const ScopedWarnings&) = delete;

  private:
    WarningHandler previous_;
};

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    ScopedWarnings warnings(err);
    Options o;

    CLI::App app{"Multipartite entanglement measures and multi-access capacity brackets"};
    app.require_subcommand(1);
    app.add_option("--seed", o.seed, "Seed for the GM restarts")->capture_default_str();
    app.add_option("--threads", o.threads, "Worker threads; 0 uses the machine's parallelism")->capture_default_str();

    const std::string spec_help = "State spec, e.g. w2, ghz:beta2=0.3, rvb:mu=2\n" + family_spec_help();

    auto* measure = app.add_subcommand("measure", "Entanglement measures of a state");
    measure->add_option("which", o.which, "ggm | gm | schmidt | bipartite")
        ->required()
        ->check(CLI::IsMember({"ggm", "gm", "schmidt", "bipartite"}));
    measure->add_option("spec", o.spec, spec_help);
    measure->add_option("--file", o.file, "Raw state file (JSON)");
    measure->add_option("--split", o.split, "Bipartition for schmidt, e.g. A:BCD or AB:CD");
    measure->add_option("--restarts", o.restarts, "GM random restarts")->capture_default_str();
    measure->add_option("--tol", o.tol, "GM convergence tolerance")->capture_default_str();
    measure->add_flag("--json", o.json, "Structured output");

    auto* capacity = app.add_subcommand("capacity", "Capacity bracket of a 4-qubit state");
    capacity->add_option("spec", o.spec, spec_help);
    capacity->add_option("--file", o.file, "Raw state file (JSON)");
    capacity->add_option("--kind", o.kind, "assisted | unassisted")->capture_default_str();
    capacity->add_option("--grid", o.grid, "Sweep grid NxM over (x, phi)")->capture_default_str();
    capacity->add_option("--out", o.out, "Write the sweep table as CSV");
    capacity->add_flag("--independent", o.independent, "Let the second party's basis vary independently");
    capacity->add_flag("--json", o.json, "Structured bracket record");

    auto* report = app.add_subcommand("report", "Capacities and measures for a list of states");
    report->add_option("--states", o.states, "State specs (default: ghz cluster chi w w2 ss rvb)");
    report->add_option("--out", o.out, "Write the structured report (JSON)");
    report->add_option("--grid", o.grid, "Sweep grid NxM over (x, phi)")->capture_default_str();
    report->add_option("--restarts", o.restarts, "GM random restarts")->capture_default_str();
    report->add_flag("--json", o.json, "Print the structured report instead of the table");

    auto* state = app.add_subcommand("state", "State utilities");
    state->require_subcommand(1);
    auto* show = state->add_subcommand("show", "Print a state's nonzero amplitudes");
    show->add_option("spec", o.spec, spec_help);
    show->add_option("--file", o.file, "Raw state file (JSON)");
    show->add_option("--out", o.out, "Write the state as a raw file instead");
    show->add_flag("--json", o.json, "Print the raw JSON document");

    std::vector<std::string> argv_storage{"mace"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_storage) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitSpec;
    }

    try {
        if (measure->parsed()) return cmd_measure(o, out);
        if (capacity->parsed()) return cmd_capacity(o, out);
        if (report->parsed()) return cmd_report(o, out, err);
        return cmd_state_show(o, out);
    } catch (const SpecError& e) {
        err << "error: " << e.what() << '\n';
        return kExitSpec;
    } catch (const ShapeError& e) {
        err << "error: " << e.what() << '\n';
        return kExitShape;
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitSpec;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitFailure;
    }
}

} // namespace mace::cli
