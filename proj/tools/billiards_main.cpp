#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "billiards/blocking.hpp"
#include "billiards/family.hpp"
#include "billiards/json_io.hpp"
#include "billiards/svg_render.hpp"

namespace {

using namespace billiards;

Rational parse_rat(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) return rational_from_strings(text, "1");
    return rational_from_strings(text.substr(0, slash), text.substr(slash + 1));
}

struct ShapeFlags {
    std::string alpha_u = "2";
    std::string alpha_v = "0";
    std::string l1 = "2";
    std::string l2 = "2";

    void attach(CLI::App* cmd) {
        cmd->add_option("--alpha-u", alpha_u, "u in alpha^2 = u + v*alpha (rational, e.g. 5/2)");
        cmd->add_option("--alpha-v", alpha_v, "v in alpha^2 = u + v*alpha");
        cmd->add_option("--l1", l1, "lower chamber depth (> 1)");
        cmd->add_option("--l2", l2, "upper chamber height (> 1)");
    }

    FamilyParams params() const {
        return FamilyParams{AlphaSpec::make(parse_rat(alpha_u), parse_rat(alpha_v)),
                            parse_rat(l1), parse_rat(l2)};
    }
};

Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidParams("cannot open file: " + path);
    return Json::parse(in);
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw InvalidParams("cannot write file: " + out_path);
    out << text;
}

Table table_for(const ShapeFlags& shape, const std::string& table_path) {
    if (table_path.empty()) return build_polygon(shape.params());
    return table_from_json(load_json(table_path));
}

int run(int argc, char** argv) {
    CLI::App app{"Exact billiard simulator for two-chamber quadratic-irrational tables"};
    app.require_subcommand(1);

    ShapeFlags shape;

    auto* cmd_build = app.add_subcommand("build", "emit the table as JSON");
    shape.attach(cmd_build);

    auto* cmd_verify = app.add_subcommand("verify", "trace and check the whole launch family");
    long long verify_n = 200;
    unsigned jobs = 1;
    std::string table_path;
    shape.attach(cmd_verify);
    cmd_verify->add_option("--n", verify_n, "largest family index")->check(CLI::NonNegativeNumber);
    cmd_verify->add_option("--jobs", jobs, "worker threads");
    cmd_verify->add_option("--table", table_path, "table JSON file overriding the shape flags");

    auto* cmd_evade = app.add_subcommand("evade", "find a path avoiding a blocking set");
    std::string blockers_path;
    long long n_max = 200;
    std::string evade_table_path;
    shape.attach(cmd_evade);
    cmd_evade->add_option("--blockers", blockers_path, "blocking set JSON file")->required();
    cmd_evade->add_option("--n-max", n_max, "scan budget")->check(CLI::NonNegativeNumber);
    cmd_evade->add_option("--table", evade_table_path, "table JSON file overriding the shape flags");

    auto* cmd_render = app.add_subcommand("render", "emit an SVG figure");
    std::string what = "table";
    long long render_index = 0;
    int digits = 12;
    std::string out_path;
    shape.attach(cmd_render);
    cmd_render->add_option("--what", what, "table | gamma | unfolded")
        ->check(CLI::IsMember({"table", "gamma", "unfolded"}));
    cmd_render->add_option("--index", render_index, "family index for gamma/unfolded")
        ->check(CLI::NonNegativeNumber);
    cmd_render->add_option("--digits", digits, "decimal places in coordinates")
        ->check(CLI::PositiveNumber);
    cmd_render->add_option("-o,--output", out_path, "output file (default stdout)");

    auto* cmd_report = app.add_subcommand("report", "emit the approximant list as JSON");
    long long report_n = 200;
    shape.attach(cmd_report);
    cmd_report->add_option("--n", report_n, "largest family index")->check(CLI::NonNegativeNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (cmd_build->parsed()) {
        Table table = build_polygon(shape.params());
        emit(json_of(table).dump(2) + "\n", "");
        return 0;
    }

    if (cmd_verify->parsed()) {
        FamilyParams params = shape.params();
        Table table = table_for(shape, table_path);
        auto indices = approximants(params, verify_n);
        auto reports = verify_family(table, indices, jobs);
        Json out = Json::array();
        long long first_bad = -1;
        for (const GammaReport& r : reports) {
            out.push_back(json_of(r));
            if (!r.ok && first_bad < 0) first_bad = r.index.n;
        }
        emit(out.dump(2) + "\n", "");
        if (first_bad >= 0) {
            std::cerr << "verification failed at n=" << first_bad << "\n";
            return 1;
        }
        return 0;
    }

    if (cmd_evade->parsed()) {
        FamilyParams params = shape.params();
        Table table = table_for(shape, evade_table_path);
        BlockingSet set = blocking_set_from_json(load_json(blockers_path), params.alpha);
        auto outcome = evade(table, approximants(params, n_max), set);
        emit(json_of(outcome).dump(2) + "\n", "");
        return std::holds_alternative<EvasionResult>(outcome) ? 0 : 3;
    }

    if (cmd_render->parsed()) {
        FamilyParams params = shape.params();
        Table table = build_polygon(params);
        std::string svg;
        if (what == "table") {
            svg = render_table_svg(table, digits);
        } else {
            FamilyIndex idx = make_index(params.alpha, render_index, render_index + 1);
            Trajectory traj = gamma(table, idx);
            svg = what == "gamma" ? render_gamma_svg(table, traj, digits)
                                  : render_unfolded_svg(table, traj, digits);
        }
        emit(svg, out_path);
        return 0;
    }

    // report
    FamilyParams params = shape.params();
    Json out = Json::array();
    for (const FamilyIndex& idx : approximants(params, report_n)) out.push_back(json_of(idx));
    emit(out.dump(2) + "\n", "");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const InvalidParams& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const InvalidBlockingPoint& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const SpecMismatch& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const PointOutsideTable& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const CoincidentMarkedPoints& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: malformed JSON: " << e.what() << "\n";
        return 2;
    } catch (const billiards::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
