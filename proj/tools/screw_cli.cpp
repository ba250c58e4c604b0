// screw: JSON-in, JSON-out analyses of robot Jacobians over se(3).
//
// Reads a JacobianDocument from stdin or --input, runs one subcommand through
// the shared library, and writes the AnalysisReport to stdout or --json.
// Exit codes: 0 success, 2 requested inverse does not exist, 3 bad input.

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "screwpinv.h"

namespace {

struct CommonArgs {
    std::string input_path;
    std::string output_path;
    std::string mode;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
    cmd->set_help_flag("--help", "print usage");
    cmd->add_option("--input", args.input_path, "JacobianDocument JSON file (default: stdin)");
    cmd->add_option("--json", args.output_path, "write the report to this file instead of stdout");
    cmd->add_option("--mode", args.mode, "override the document mode")
        ->check(CLI::IsMember({"rational", "float"}));
}

int fail_input(const std::string& message) {
    std::cerr << "error: " << message << "\n";
    return 3;
}

// Returns 3 (and prints to stderr) on unreadable or unparseable input.
int load_document(const CommonArgs& args, sp_document** doc) {
    std::string text;
    if (args.input_path.empty()) {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        text = buf.str();
    } else {
        std::ifstream in(args.input_path);
        if (!in) return fail_input("cannot open '" + args.input_path + "'");
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    if (!args.mode.empty()) {
        try {
            nlohmann::json parsed = nlohmann::json::parse(text);
            parsed["mode"] = args.mode;
            text = parsed.dump();
        } catch (const std::exception& e) {
            return fail_input(std::string("invalid JSON: ") + e.what());
        }
    }
    if (sp_document_parse(text.c_str(), doc) != SP_OK) return fail_input(sp_last_error());
    return 0;
}

int emit(const CommonArgs& args, sp_status status, char* report) {
    if (!report) return fail_input(sp_last_error());
    std::unique_ptr<char, decltype(&sp_string_free)> guard(report, &sp_string_free);
    if (args.output_path.empty()) {
        std::cout << report << "\n";
    } else {
        std::ofstream out(args.output_path);
        if (!out) return fail_input("cannot write '" + args.output_path + "'");
        out << report << "\n";
    }
    return static_cast<int>(status);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"screw-theoretic Jacobian analysis"};
    // long-form help only: the short -h would collide with the pitch option
    app.set_help_flag("--help", "print usage");
    app.require_subcommand(1);

    CommonArgs pinv_args, classify_args, involution_args, reciprocal_args, project_args;
    std::string pinv_h = "0", reciprocal_h = "0", classify_rec_h;
    std::string project_h = "0", project_damp, project_point, project_direction;
    std::vector<std::string> project_twist;

    CLI::App* pinv = app.add_subcommand("pinv", "h-pseudoinverse of the Jacobian");
    add_common(pinv, pinv_args);
    pinv->add_option("--h", pinv_h, "pitch: rational, decimal, or 'inf'");

    CLI::App* classify = app.add_subcommand("classify", "Gibson-Hunt class of the column span");
    add_common(classify, classify_args);
    classify->add_option("--reciprocal", classify_rec_h,
                         "also report the basis of the h-reciprocal system");

    CLI::App* involution = app.add_subcommand("involution", "Sylvester analysis of line columns");
    add_common(involution, involution_args);

    CLI::App* reciprocal = app.add_subcommand("reciprocal", "basis of the h-reciprocal system");
    add_common(reciprocal, reciprocal_args);
    reciprocal->add_option("--h", reciprocal_h, "pitch: rational, decimal, or 'inf'");

    CLI::App* project = app.add_subcommand("project", "project a twist onto the column span");
    add_common(project, project_args);
    project->add_option("--twist", project_twist, "six twist components")->expected(6);
    project->add_option("--h", project_h, "pitch: rational or decimal");
    project->add_option("--damp", project_damp, "damping epsilon (Lambda = eps*I)");
    project->add_option("--point", project_point, "end-effector point x,y,z");
    project->add_option("--direction", project_direction, "direction x,y,z");

    CLI11_PARSE(app, argc, argv);

    const CommonArgs* args = nullptr;
    if (pinv->parsed()) args = &pinv_args;
    else if (classify->parsed()) args = &classify_args;
    else if (involution->parsed()) args = &involution_args;
    else if (reciprocal->parsed()) args = &reciprocal_args;
    else args = &project_args;

    sp_document* doc = nullptr;
    if (int rc = load_document(*args, &doc); rc != 0) return rc;
    std::unique_ptr<sp_document, decltype(&sp_document_free)> guard(doc, &sp_document_free);

    char* report = nullptr;
    sp_status status = SP_INVALID_INPUT;
    if (pinv->parsed()) {
        status = sp_pinv(doc, pinv_h.c_str(), &report);
    } else if (classify->parsed()) {
        status = sp_classify(doc, classify_rec_h.empty() ? nullptr : classify_rec_h.c_str(),
                             &report);
    } else if (involution->parsed()) {
        status = sp_involution(doc, &report);
    } else if (reciprocal->parsed()) {
        status = sp_reciprocal(doc, reciprocal_h.c_str(), &report);
    } else {
        nlohmann::json opts;
        opts["h"] = project_h;
        if (!project_twist.empty()) opts["twist"] = project_twist;
        if (!project_damp.empty()) opts["damp"] = project_damp;
        auto split3 = [](const std::string& csv) {
            std::vector<std::string> parts;
            std::stringstream ss(csv);
            std::string part;
            while (std::getline(ss, part, ',')) parts.push_back(part);
            return parts;
        };
        if (!project_point.empty()) opts["point"] = split3(project_point);
        if (!project_direction.empty()) opts["direction"] = split3(project_direction);
        status = sp_project(doc, opts.dump().c_str(), &report);
    }
    return emit(*args, status, report);
}
