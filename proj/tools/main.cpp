#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "folia/chordal.hpp"
#include "folia/equivalence.hpp"
#include "folia/expr.hpp"
#include "folia/foliation.hpp"
#include "folia/json_io.hpp"
#include "folia/render.hpp"

namespace {

using folia::Json;

struct InputFileError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Expression arguments starting with '@' are read from the named file.
std::string load_expression(const std::string& arg) {
    std::string text = arg;
    if (!arg.empty() && arg[0] == '@') {
        std::ifstream in(arg.substr(1));
        if (!in) throw InputFileError("cannot read expression file: " + arg.substr(1));
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    size_t first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) return "";
    size_t last = text.find_last_not_of(" \t\r\n");
    return text.substr(first, last - first + 1);
}

folia::Configuration load_configuration(const std::string& arg) {
    return folia::build_configuration(folia::to_linear_like(folia::parse(load_expression(arg))));
}

int fail(const std::string& code, const std::string& message, int exit_code,
         Json extra = Json::object()) {
    Json e = Json::object();
    e["code"] = code;
    e["message"] = message;
    for (auto& [key, value] : extra.items()) e[key] = value;
    Json top = Json::object();
    top["error"] = std::move(e);
    std::cerr << top.dump() << "\n";
    return exit_code;
}

std::string submersion_code(folia::SubmersionFailure::Kind kind) {
    switch (kind) {
        case folia::SubmersionFailure::Kind::SimpleZero: return "SIMPLE_ZERO";
        case folia::SubmersionFailure::Kind::CriticalValueOnFiber:
            return "CRITICAL_VALUE_ON_FIBER";
        case folia::SubmersionFailure::Kind::OutOfScope: return "OUT_OF_SCOPE";
    }
    return "INTERNAL";
}

const char* obstruction_explanation(const std::string& code) {
    if (code == "K_MISMATCH") return "the maps have different numbers of vertical lines";
    if (code == "TOKEN_MISMATCH")
        return "no admissible coordinate change matches the strip data";
    if (code == "SIGMA_ILL_DEFINED")
        return "the induced pairing of vertical-line values is not a bijection";
    if (code == "SIGMA_NOT_MONOTONE")
        return "the induced pairing of vertical-line values is not monotone";
    if (code == "SIGMA_NOT_INCREASING")
        return "no orientation witness pairs the vertical-line values increasingly";
    if (code == "EXTENSION_FAILS")
        return "the value pairing cannot extend to an increasing line homeomorphism";
    if (code == "TRIVIAL_VS_NONTRIVIAL") return "only one of the maps has vertical lines";
    return "";
}

void print_verdict_table(const Json& verdict) {
    std::cout << "\n";
    std::cout << "part           result  witness    obstruction\n";
    for (const char* part : {"foliation_o", "foliation_top", "function_o", "function_top"}) {
        const Json& p = verdict.at(part);
        std::string witness = "-";
        if (p.contains("witness"))
            witness = p.at("witness").at("transformation").get<std::string>();
        std::string obstruction = "-";
        if (p.contains("obstruction")) obstruction = p.at("obstruction").get<std::string>();
        std::printf("%-14s %-7s %-10s %s\n", part,
                    p.at("value").get<bool>() ? "yes" : "no", witness.c_str(),
                    obstruction.c_str());
    }
    for (const char* part : {"foliation_o", "foliation_top", "function_o", "function_top"}) {
        const Json& p = verdict.at(part);
        if (!p.contains("obstruction")) continue;
        std::string code = p.at("obstruction").get<std::string>();
        std::cout << "  " << code << ": " << obstruction_explanation(code) << "\n";
    }
}

folia::Rat parse_rational(const std::string& text) {
    try {
        return folia::Rat(text);
    } catch (...) {
        throw CLI::ValidationError("viewport", "not a rational number: " + text);
    }
}

folia::Viewport parse_viewport(const std::string& window, const std::string& size) {
    folia::Viewport vp = folia::Viewport::standard();
    std::vector<std::string> parts;
    std::stringstream ss(window);
    std::string item;
    while (std::getline(ss, item, ',')) parts.push_back(item);
    if (parts.size() != 4)
        throw CLI::ValidationError("viewport", "expected four comma-separated rationals");
    vp.x_min = parse_rational(parts[0]);
    vp.x_max = parse_rational(parts[1]);
    vp.y_min = parse_rational(parts[2]);
    vp.y_max = parse_rational(parts[3]);
    size_t x = size.find('x');
    if (x == std::string::npos)
        throw CLI::ValidationError("size", "expected WIDTHxHEIGHT");
    try {
        vp.width_px = static_cast<unsigned>(std::stoul(size.substr(0, x)));
        vp.height_px = static_cast<unsigned>(std::stoul(size.substr(x + 1)));
    } catch (...) {
        throw CLI::ValidationError("size", "expected WIDTHxHEIGHT");
    }
    return vp;
}

folia::Transformation parse_transformation(const std::string& name) {
    for (folia::Transformation t : folia::kAllTransformations)
        if (name == folia::transformation_name(t)) return t;
    throw CLI::ValidationError("transformation",
                               "expected identity, hflip, vflip or rotation");
}

void emit(const Json& j, bool pretty) {
    std::cout << (pretty ? j.dump(2) : j.dump()) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Classifier for planar maps of the form r(x) + s(x)*y"};
    app.require_subcommand(1);

    std::string expr_a, expr_b, transformation_arg;
    bool with_oracle = false, pretty = false;
    unsigned budget = 32;
    std::string window = "-4,4,-4,4", size = "800x600", out_path = "foliation.svg";

    CLI::App* analyze = app.add_subcommand(
        "analyze", "Print the combinatorial invariant of one map as JSON");
    analyze->add_option("expr", expr_a, "map expression or @file")->required();
    analyze->add_flag("--pretty", pretty, "indent the JSON output");

    CLI::App* compare =
        app.add_subcommand("compare", "Decide the four equivalence verdicts for two maps");
    compare->add_option("expr_p", expr_a, "first map or @file")->required();
    compare->add_option("expr_q", expr_b, "second map or @file")->required();
    compare->add_flag("--oracle", with_oracle,
                      "cross-check every admissible coordinate change by sampling");
    compare->add_option("--budget", budget, "cap on frame growth while locating leaves");
    compare->add_flag("--pretty", pretty, "indent the JSON and append a verdict table");

    CLI::App* render = app.add_subcommand("render", "Write an SVG portrait of one map");
    render->add_option("expr", expr_a, "map expression or @file")->required();
    render->add_option("--viewport", window, "world window as x0,x1,y0,y1 (rationals)");
    render->add_option("--size", size, "raster size as WIDTHxHEIGHT");
    render->add_option("--out", out_path, "output SVG path");

    CLI::App* oracle = app.add_subcommand(
        "oracle", "Sample leaves of two maps and cross-check one correspondence");
    oracle->add_option("expr_p", expr_a, "first map or @file")->required();
    oracle->add_option("expr_q", expr_b, "second map or @file")->required();
    oracle
        ->add_option("transformation", transformation_arg,
                     "identity | hflip | vflip | rotation")
        ->required();
    oracle->add_option("--budget", budget, "cap on frame growth while locating leaves");
    oracle->add_flag("--pretty", pretty, "indent the JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return fail("USAGE", e.what(), 2);
    }

    try {
        if (analyze->parsed()) {
            emit(folia::json_of(load_configuration(expr_a)), pretty);
            return 0;
        }
        if (compare->parsed()) {
            folia::Configuration p = load_configuration(expr_a);
            folia::Configuration q = load_configuration(expr_b);
            Json j = folia::json_of(folia::decide(p, q));
            if (with_oracle) {
                Json reports = Json::array();
                for (folia::Transformation t : folia::token_match(p, q)) {
                    Json r = Json::object();
                    r["transformation"] = folia::transformation_name(t);
                    r.update(folia::json_of(folia::check_correspondence(p, q, t, 1, budget)));
                    reports.push_back(std::move(r));
                }
                j["oracle"] = std::move(reports);
            }
            emit(j, pretty);
            if (pretty) print_verdict_table(j);
            return 0;
        }
        if (render->parsed()) {
            folia::Configuration conf = load_configuration(expr_a);
            std::string svg = folia::render_svg(conf, parse_viewport(window, size));
            std::ofstream out(out_path, std::ios::binary);
            if (!out) return fail("IO_ERROR", "cannot write " + out_path, 2);
            out << svg;
            Json j = Json::object();
            j["written"] = out_path;
            emit(j, pretty);
            return 0;
        }
        if (oracle->parsed()) {
            folia::Configuration p = load_configuration(expr_a);
            folia::Configuration q = load_configuration(expr_b);
            folia::Transformation t = parse_transformation(transformation_arg);
            Json j = Json::object();
            j["transformation"] = folia::transformation_name(t);
            j.update(folia::json_of(folia::check_correspondence(p, q, t, 1, budget)));
            emit(j, pretty);
            return 0;
        }
        return fail("USAGE", "no subcommand given", 2);
    } catch (const CLI::ValidationError& e) {
        return fail("USAGE", e.what(), 2);
    } catch (const folia::SyntaxError& e) {
        Json extra = Json::object();
        extra["position"] = e.position;
        extra["expected"] = e.expected;
        return fail("SYNTAX_ERROR", e.what(), 2, extra);
    } catch (const folia::NonPolynomial& e) {
        return fail("NON_POLYNOMIAL", e.what(), 2);
    } catch (const folia::NotLinearInY& e) {
        return fail("NOT_LINEAR_IN_Y", e.what(), 2);
    } catch (const folia::SubmersionError& e) {
        Json extra = Json::object();
        if (e.failure.root) extra["root"] = folia::to_float(*e.failure.root, 12);
        return fail(submersion_code(e.failure.kind), e.what(), 2, extra);
    } catch (const folia::EmptyViewport& e) {
        return fail("EMPTY_VIEWPORT", e.what(), 2);
    } catch (const folia::OracleScope& e) {
        return fail("ORACLE_SCOPE", e.what(), 3);
    } catch (const folia::PreconditionViolated& e) {
        return fail("PRECONDITION", e.what(), 2);
    } catch (const InputFileError& e) {
        return fail("IO_ERROR", e.what(), 2);
    } catch (const std::exception& e) {
        return fail("INTERNAL", e.what(), 1);
    }
}
