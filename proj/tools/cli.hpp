#pragma once

// Command implementations for the `billiards` executable. Every command writes
// exactly one JSON document to `out`; SVG bytes only ever go to --out files.
//
// Exit codes: 0 ok, 1 consistency check failed, 2 bad input, 3 budget exceeded, 4 I/O error.

#include <billiards/arithmetic_billiards.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <fstream>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace billiards::cli {

using json = nlohmann::ordered_json;

inline constexpr const char* schema_version = "1";

enum ExitCode : int { ok = 0, inconsistent = 1, bad_input = 2, over_budget = 3, io_error = 4 };

class io_failure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline std::vector<Int> parse_int_list(const std::string& text, const char* what)
{
    std::vector<Int> values;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        Int v = 0;
        try {
            v = std::stoll(item, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument(std::string("cannot parse ") + what + " entry '" + item + "'");
        }
        if (used != item.size()) {
            throw std::invalid_argument(std::string("cannot parse ") + what + " entry '" + item + "'");
        }
        values.push_back(v);
    }
    if (values.empty()) {
        throw std::invalid_argument(std::string(what) + " must not be empty");
    }
    return values;
}

/// "+" (or "0") is forward, "-" (or "1") is backward, one character per coordinate.
inline DirectionMask parse_mask(const std::string& text)
{
    DirectionMask mask;
    for (char c : text) {
        if (c == '+' || c == '0') {
            mask.signs.push_back(0);
        } else if (c == '-' || c == '1') {
            mask.signs.push_back(1);
        } else {
            throw std::invalid_argument(std::string("mask characters must be '+' or '-', got '") + c + "'");
        }
    }
    return mask;
}

inline std::string format_mask(const DirectionMask& mask)
{
    std::string s;
    for (auto b : mask.signs) {
        s += b ? '-' : '+';
    }
    return s;
}

inline Sign parse_sign(const std::string& text)
{
    if (text == "+" || text == "pos" || text == "positive") {
        return Sign::Positive;
    }
    if (text == "-" || text == "neg" || text == "negative") {
        return Sign::Negative;
    }
    throw std::invalid_argument("sign must be '+' or '-', got '" + text + "'");
}

inline Point parse_point(const GridSpec& grid, const std::string& text, const char* what)
{
    Point pt{parse_int_list(text, what)};
    validate(grid, pt);
    return pt;
}

inline json to_json(const ReachAnswer& a)
{
    json j;
    j["reachable"] = a.reachable;
    j["witness_steps"] = a.witness_steps ? json(*a.witness_steps) : json(nullptr);
    j["sign_choice"] = a.sign_choice ? json(*a.sign_choice) : json(nullptr);
    return j;
}

/// Collected flag values; filled in by CLI11 and consumed by the command bodies.
struct Args {
    std::string dims;
    std::string start;
    std::string mask;
    std::string from;
    std::string to;
    std::string sign = "+";
    std::string out_file;
    std::string which_paths = "all";
    std::string palette;
    Int steps = 0;
    Int t = 0;
    Int m = 1;
    std::optional<Int> expand;
    Int budget = default_state_budget;
    Int cell_size = 40;
    Int margin = 20;
    bool any_direction = false;
    bool verify = false;
};

struct Outcome {
    json payload;
    int code = ok;
};

inline GridSpec parse_grid(const Args& a)
{
    return GridSpec(parse_int_list(a.dims, "dims"));
}

inline Outcome cmd_count(const Args& a)
{
    const GridSpec grid = parse_grid(a);
    Outcome o;
    json& p = o.payload;
    p["closed"] = count_closed(grid);
    p["open"] = count_open(grid);
    p["step_length"] = step_length(grid);
    p["geometric_length"] = {{"steps", step_length(grid)},
                             {"per_step", "sqrt(" + std::to_string(grid.arity()) + ")"},
                             {"approx", geometric_length(grid)}};
    json details{{"lcm", grid.lcm()}};
    if (grid.arity() == 2) {
        details["gcd"] = std::gcd(grid.dim(0), grid.dim(1));
    }
    p["gcd_or_lcm_details"] = details;
    try {
        const auto paths = enumerate_paths(grid, a.budget);
        Int closed = 0, open = 0, segments = 0;
        for (const auto& path : paths) {
            (path.kind == PathKind::Closed ? closed : open) += 1;
            segments += path.distinct_segments;
        }
        const bool consistent = closed == count_closed(grid) && open == count_open(grid);
        p["enumeration"] = {{"performed", true},
                            {"closed", closed},
                            {"open", open},
                            {"total_segments", segments},
                            {"consistent", consistent}};
        if (!consistent) {
            o.code = inconsistent;
        }
    } catch (const budget_exceeded& e) {
        p["enumeration"] = {{"performed", false}, {"reason", e.what()}};
        o.code = over_budget;
    }
    return o;
}

inline Outcome cmd_simulate(const Args& a)
{
    const GridSpec grid = parse_grid(a);
    const Point start = parse_point(grid, a.start, "start");
    const DirectionMask mask = a.mask.empty() ? DirectionMask::forward(grid.arity()) : parse_mask(a.mask);
    const Trajectory traj = simulate(grid, start, mask, a.steps);

    Outcome o;
    json points = json::array();
    for (const auto& pt : traj.points) {
        points.push_back(pt.coords);
    }
    json closed_at = nullptr;
    json position_return = nullptr;
    for (std::size_t k = 1; k < traj.states.size(); ++k) {
        if (position_return.is_null() && traj.points[k] == traj.points[0]) {
            position_return = k;
        }
        // State equality is equivalent to both return conditions.
        if (closed_at.is_null() && traj.states[k] == traj.states[0]) {
            closed_at = k;
        }
    }
    o.payload = {{"mask", format_mask(mask)},
                 {"steps", a.steps},
                 {"points", points},
                 {"closed_at", closed_at},
                 {"position_returns_at", position_return}};
    return o;
}

inline Outcome cmd_reach(const Args& a)
{
    const GridSpec grid = parse_grid(a);
    const Point from = parse_point(grid, a.from, "from");
    const Point to = parse_point(grid, a.to, "to");
    if (a.any_direction && !a.mask.empty()) {
        throw std::invalid_argument("--mask and --any-direction are mutually exclusive");
    }
    std::vector<DirectionMask> masks;
    if (a.any_direction) {
        masks = DirectionMask::all(grid.arity());
    } else {
        masks.push_back(a.mask.empty() ? DirectionMask::forward(grid.arity()) : parse_mask(a.mask));
    }

    Outcome o;
    ReachAnswer best;
    DirectionMask best_mask = masks.front();
    bool agree = true;
    for (const auto& mask : masks) {
        const ReachAnswer ans = light_reachable(grid, from, mask, to);
        if (a.verify) {
            const ReachAnswer check = light_reachable_oracle(grid, from, mask, to);
            agree = agree && check.reachable == ans.reachable && check.witness_steps == ans.witness_steps
                    && check.sign_choice == ans.sign_choice;
        }
        if (ans.reachable && (!best.reachable || *ans.witness_steps < *best.witness_steps)) {
            best = ans;
            best_mask = mask;
        }
    }
    o.payload = to_json(best);
    o.payload["mask"] = best.reachable ? json(format_mask(best_mask)) : json(nullptr);
    o.payload["any_direction"] = a.any_direction;
    o.payload["oracle_checked"] = a.verify;
    if (a.verify) {
        o.payload["oracle_agrees"] = agree;
        if (!agree) {
            o.code = inconsistent;
        }
    }
    return o;
}

inline Outcome cmd_orbits(const Args& a)
{
    const GridSpec grid = parse_grid(a);
    Outcome o;
    const auto summaries = orbit_partition(grid);
    std::optional<Connectivity> conn;
    std::vector<Int> brute(summaries.size(), 0);
    bool index_consistent = true;
    try {
        conn = diagonal_connectivity(grid, a.budget);
        // Each BFS component must carry a single index; tally component sizes per index.
        const detail::PointCodec codec(grid);
        std::vector<std::optional<OrbitIndex>> comp_index(static_cast<std::size_t>(conn->component_count));
        for (Int id = 0; id < codec.count(); ++id) {
            const auto c = static_cast<std::size_t>(conn->component[static_cast<std::size_t>(id)]);
            const OrbitIndex idx = index_of(codec.decode(id));
            if (!comp_index[c]) {
                comp_index[c] = idx;
            } else if (*comp_index[c] != idx) {
                index_consistent = false;
            }
            for (std::size_t k = 0; k < summaries.size(); ++k) {
                if (summaries[k].index == idx) {
                    ++brute[k];
                }
            }
        }
    } catch (const budget_exceeded&) {
        o.code = over_budget;
    }

    json orbits = json::array();
    Int total = 0;
    bool all_agree = true;
    for (std::size_t k = 0; k < summaries.size(); ++k) {
        json entry{{"index", summaries[k].index.bits}, {"sample", summaries[k].sample.coords},
                   {"size_formula", summaries[k].size}};
        if (conn) {
            entry["size_bruteforce"] = brute[k];
            entry["agree"] = brute[k] == summaries[k].size;
            all_agree = all_agree && brute[k] == summaries[k].size;
        }
        total += summaries[k].size;
        orbits.push_back(entry);
    }
    o.payload["orbits"] = orbits;
    o.payload["total_points"] = total;
    if (conn) {
        const bool partition_ok = index_consistent && conn->component_count == static_cast<Int>(summaries.size());
        o.payload["bfs_components"] = conn->component_count;
        o.payload["partition_matches_index"] = partition_ok;
        if (!partition_ok || !all_agree || total != grid.point_count()) {
            o.code = inconsistent;
        }
    }
    return o;
}

inline Outcome cmd_genfunc(const Args& a)
{
    const SeqSpec spec{parse_sign(a.sign), a.t, a.m};
    const RationalGF gf = gen_function(spec);
    Outcome o;
    o.payload = {{"sign", spec.sign == Sign::Positive ? "+" : "-"},
                 {"t", spec.first},
                 {"m", spec.height},
                 {"numerator_coeffs", gf.numerator.coeffs()},
                 {"period", gf.period}};
    if (a.expand) {
        o.payload["expansion"] = series_expand(gf, *a.expand);
    }
    return o;
}

inline Outcome cmd_render(const Args& a)
{
    const GridSpec grid = parse_grid(a);
    if (grid.arity() != 2) {
        throw std::invalid_argument("render supports plane grids only (p = 2)");
    }
    if (a.which_paths != "all" && a.which_paths != "open" && a.which_paths != "closed") {
        throw std::invalid_argument("--paths must be all, open or closed");
    }
    RenderOptions opts;
    opts.cell_size = a.cell_size;
    opts.margin = a.margin;
    if (!a.palette.empty()) {
        opts.palette.clear();
        std::stringstream ss(a.palette);
        std::string color;
        while (std::getline(ss, color, ',')) {
            opts.palette.push_back(color);
        }
    }
    std::vector<Path> selected;
    for (auto& path : enumerate_paths(grid, a.budget)) {
        if (a.which_paths == "all" || a.which_paths == to_string(path.kind)) {
            selected.push_back(std::move(path));
        }
    }
    const std::string svg = render_grid(grid, selected, opts);

    std::ofstream file(a.out_file, std::ios::binary);
    if (!file) {
        throw io_failure("cannot open '" + a.out_file + "' for writing");
    }
    file << svg;
    file.close();
    if (!file) {
        throw io_failure("failed writing '" + a.out_file + "'");
    }
    Outcome o;
    o.payload = {{"file", a.out_file}, {"path_count", selected.size()}, {"bytes", svg.size()}};
    return o;
}

/// Parse argv, dispatch, and print one JSON document. Returns the process exit code.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Arithmetic billiards on integer grids", "billiards"};
    app.require_subcommand(1);
    Args a;

    auto* count = app.add_subcommand("count", "Count open and closed billiard paths");
    count->add_option("--dims", a.dims, "Grid dimensions, e.g. 6,4")->required();
    count->add_option("--budget", a.budget, "Maximum phase states to enumerate");

    auto* sim = app.add_subcommand("simulate", "Trace the light ray from a start point");
    sim->add_option("--dims", a.dims, "Grid dimensions")->required();
    sim->add_option("--start", a.start, "Start point, e.g. 2,2")->required();
    sim->add_option("--mask", a.mask, "Initial direction per coordinate, e.g. +- or 10");
    sim->add_option("--steps", a.steps, "Number of unit steps")->required();

    auto* reach = app.add_subcommand("reach", "Does the ray from one point pass through another?");
    reach->add_option("--dims", a.dims, "Grid dimensions")->required();
    reach->add_option("--from", a.from)->required();
    reach->add_option("--to", a.to)->required();
    reach->add_option("--mask", a.mask);
    reach->add_flag("--any-direction", a.any_direction, "Try every initial direction");
    reach->add_flag("--verify", a.verify, "Cross-check against step-by-step iteration");

    auto* orbits = app.add_subcommand("orbits", "Partition the lattice into diagonal-walk orbits");
    orbits->add_option("--dims", a.dims, "Grid dimensions")->required();
    orbits->add_option("--budget", a.budget, "Maximum lattice points for the brute-force check");

    auto* gen = app.add_subcommand("genfunc", "Generating function of a circular sequence");
    gen->add_option("--sign", a.sign, "+ or -");
    gen->add_option("--t", a.t, "First term")->required();
    gen->add_option("--m", a.m, "Height")->required();
    gen->add_option("--expand", a.expand, "Also expand the series up to x^N");

    auto* render = app.add_subcommand("render", "Write an SVG drawing of a plane grid and its paths");
    render->add_option("--dims", a.dims, "Plane grid dimensions")->required();
    render->add_option("--out", a.out_file, "Output SVG file")->required();
    render->add_option("--paths", a.which_paths, "all, open or closed");
    render->add_option("--cell-size", a.cell_size, "Pixels per unit");
    render->add_option("--margin", a.margin, "Border in pixels");
    render->add_option("--palette", a.palette, "Comma-separated colours");
    render->add_option("--budget", a.budget, "Maximum phase states to enumerate");

    // CLI11 reads argv[1..]; keep the arguments in a vector so tests can pass literals.
    std::vector<std::string> args(argv + 1, argv + argc);
    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        out << json{{"schema_version", schema_version}, {"command", nullptr},
                    {"error", {{"code", bad_input}, {"message", e.what()}}}}
                   .dump()
            << '\n';
        return bad_input;
    }

    const auto* chosen = app.get_subcommands().front();
    const std::string name = chosen->get_name();
    json doc{{"schema_version", schema_version}, {"command", name}};
    json grid_echo = nullptr;
    try {
        grid_echo = parse_int_list(a.dims, "dims");
    } catch (const std::exception&) {
    }
    doc["grid"] = name == "genfunc" ? json(nullptr) : grid_echo;

    const auto started = std::chrono::steady_clock::now();
    Outcome result;
    std::string error;
    try {
        if (name == "count") {
            result = cmd_count(a);
        } else if (name == "simulate") {
            result = cmd_simulate(a);
        } else if (name == "reach") {
            result = cmd_reach(a);
        } else if (name == "orbits") {
            result = cmd_orbits(a);
        } else if (name == "genfunc") {
            result = cmd_genfunc(a);
        } else {
            result = cmd_render(a);
        }
    } catch (const budget_exceeded& e) {
        result.code = over_budget;
        error = e.what();
    } catch (const io_failure& e) {
        result.code = io_error;
        error = e.what();
    } catch (const std::invalid_argument& e) {
        result.code = bad_input;
        error = e.what();
    } catch (const std::overflow_error& e) {
        result.code = bad_input;
        error = e.what();
    }
    const auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started);

    if (error.empty()) {
        doc["payload"] = result.payload;
    } else {
        doc["payload"] = nullptr;
        doc["error"] = {{"code", result.code}, {"message", error}};
        err << name << ": " << error << '\n';
    }
    doc["elapsed_ms"] = elapsed.count();
    out << doc.dump() << '\n';
    return result.code;
}

} // namespace billiards::cli
