#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "kforms/document.hpp"
#include "kforms/render.hpp"
#include "kforms/verify.hpp"

namespace {

using nlohmann::ordered_json;
using namespace kforms;

void emit(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

InvPoly parse_poly(const std::string& name) {
    if (name == "ctot")
        return InvPoly::total_chern();
    if (name == "ch")
        return InvPoly::chern_char();
    if (name.rfind("ck:", 0) == 0) {
        const std::string digits = name.substr(3);
        if (digits.empty())
            throw UsageError("missing component index in \"" + name + "\"");
        for (char c : digits)
            if (c < '0' || c > '9')
                throw UsageError("invalid component index in \"" + name + "\"");
        return InvPoly::chern_component(static_cast<unsigned>(std::stoul(digits)));
    }
    throw UsageError("unknown polynomial \"" + name + "\" (ctot, ch, ck:K)");
}

int cmd_curvature(const std::string& doc_path, const std::string& output) {
    Document doc = load_document(doc_path);
    FormMatrix f = curvature(document_connection(doc));
    if (output == "json") {
        ordered_json j;
        j["dimension"] = doc.dimension;
        j["rank"] = doc.rank;
        ordered_json rows = ordered_json::array();
        for (unsigned i = 0; i < f.rows(); ++i) {
            ordered_json row = ordered_json::array();
            for (unsigned k = 0; k < f.cols(); ++k)
                row.push_back(render_form(f.at(i, k)));
            rows.push_back(std::move(row));
        }
        j["entries"] = std::move(rows);
        emit(j);
    } else {
        for (unsigned i = 0; i < f.rows(); ++i)
            for (unsigned k = 0; k < f.cols(); ++k)
                std::cout << "F[" << i + 1 << "][" << k + 1
                          << "] = " << render_form(f.at(i, k)) << "\n";
    }
    return 0;
}

int cmd_chern(const std::string& doc_path, const std::string& poly,
              const std::string& output) {
    Document doc = load_document(doc_path);
    Form value = eval_poly(parse_poly(poly), curvature(document_connection(doc)));
    if (output == "json") {
        ordered_json j;
        j["poly"] = poly;
        j["value"] = render_form(value);
        emit(j);
    } else {
        std::cout << render_form(value) << "\n";
    }
    return 0;
}

int cmd_transgress(const std::string& doc0_path, const std::string& doc1_path,
                   const std::string& mode, const std::string& poly,
                   const std::string& path, const std::string& output) {
    Connection c0 = document_connection(load_document(doc0_path));
    Connection c1 = document_connection(load_document(doc1_path));
    InvPoly p = parse_poly(poly);
    Form value;
    if (path == "affine") {
        value = mode == "additive" ? cs_additive(p, c0, c1)
                                   : cs_multiplicative(p, c0, c1);
    } else {
        ConnectionPath cp = document_path(load_document(path));
        value = mode == "additive" ? cs_additive(p, c0, c1, cp)
                                   : cs_multiplicative(p, c0, c1, cp);
    }
    if (output == "json") {
        ordered_json j;
        j["mode"] = mode;
        j["poly"] = poly;
        j["value"] = render_form(value);
        emit(j);
    } else {
        std::cout << render_form(value) << "\n";
    }
    return 0;
}

int cmd_normalize(const std::vector<std::string>& doc_paths,
                  const std::string& flavor, const std::string& output) {
    std::vector<SignedTriple> terms;
    for (const std::string& p : doc_paths)
        terms.push_back(document_signed_triple(load_document(p)));
    int rank;
    Form alpha;
    if (flavor == "mult") {
        KClassMult k = normalize_mult(terms);
        rank = k.rank;
        alpha = k.alpha;
    } else {
        KClassAdd k = normalize_add(terms);
        rank = k.rank;
        alpha = k.alpha;
    }
    if (output == "json") {
        ordered_json j;
        j["flavor"] = flavor;
        j["rank"] = rank;
        j["alpha"] = render_form(alpha);
        emit(j);
    } else {
        std::cout << "rank: " << rank << "\n";
        std::cout << "alpha: " << render_form(alpha) << "\n";
    }
    return 0;
}

int cmd_borel(const std::string& doc_path, const std::string& metric_path,
              const std::string& output) {
    Document doc = load_document(doc_path);
    Triple t = document_triple(doc);
    Metric m = !metric_path.empty() ? document_metric(load_document(metric_path))
               : doc.metric         ? document_metric(doc)
                                    : Metric::identity(t.rank(), t.dim());
    Form star = borel_star(t, m);
    Form add = borel_additive(t, m);
    if (output == "json") {
        ordered_json j;
        j["star"] = render_form(star);
        j["additive"] = render_form(add);
        emit(j);
    } else {
        std::cout << "star: " << render_form(star) << "\n";
        std::cout << "additive: " << render_form(add) << "\n";
    }
    return 0;
}

int cmd_primitive(const std::string& form_path, const std::string& output) {
    Form prim = poincare_primitive(load_form_file(form_path));
    if (output == "json") {
        ordered_json j;
        j["value"] = render_form(prim);
        emit(j);
    } else {
        std::cout << render_form(prim) << "\n";
    }
    return 0;
}

int cmd_verify(const std::string& suite, std::uint64_t seed,
               const std::string& profile, const std::string& output) {
    VerifyReport report = run_verify(suite, seed, Profile::by_name(profile));
    std::cout << (output == "json" ? report_json(report) : report_text(report));
    return report.passed ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact exterior calculus for a multiplicative smooth K-theory"};
    app.require_subcommand(1);
    std::string output = "text";
    app.add_option("--output", output, "output format")
        ->check(CLI::IsMember({"text", "json"}));

    std::string doc_path, doc1_path, poly = "ctot", mode, path = "affine";
    std::string flavor, metric_path, suite = "all", profile = "default";
    std::vector<std::string> doc_paths;
    std::uint64_t seed = 0;

    CLI::App* curvature_cmd =
        app.add_subcommand("curvature", "curvature matrix of a connection document");
    curvature_cmd->add_option("doc", doc_path, "connection document")->required();

    CLI::App* chern_cmd =
        app.add_subcommand("chern", "characteristic form of a connection document");
    chern_cmd->add_option("doc", doc_path, "connection document")->required();
    chern_cmd->add_option("--poly", poly, "ctot, ch, or ck:K");

    CLI::App* transgress_cmd =
        app.add_subcommand("transgress", "transgression between two connections");
    transgress_cmd->add_option("doc0", doc_path, "start document")->required();
    transgress_cmd->add_option("doc1", doc1_path, "end document")->required();
    transgress_cmd->add_option("--mode", mode, "additive or multiplicative")
        ->required()
        ->check(CLI::IsMember({"additive", "multiplicative"}));
    transgress_cmd->add_option("--poly", poly, "ctot, ch, or ck:K");
    transgress_cmd->add_option("--path", path, "affine, or a cylinder document");

    CLI::App* normalize_cmd =
        app.add_subcommand("normalize", "normal form of a signed list of triples");
    normalize_cmd->add_option("docs", doc_paths, "triple documents")->required();
    normalize_cmd->add_option("--flavor", flavor, "mult or add")
        ->required()
        ->check(CLI::IsMember({"mult", "add"}));

    CLI::App* borel_cmd =
        app.add_subcommand("borel", "obstruction classes of a triple document");
    borel_cmd->add_option("doc", doc_path, "triple document")->required();
    borel_cmd->add_option("--metric", metric_path, "metric factor document");

    CLI::App* primitive_cmd =
        app.add_subcommand("primitive", "primitive of a closed positive-degree form");
    primitive_cmd->add_option("form-file", doc_path, "form file")->required();

    CLI::App* verify_cmd =
        app.add_subcommand("verify", "run seeded property-verification suites");
    verify_cmd->add_option("--suite", suite, "suite name or all");
    verify_cmd->add_option("--seed", seed, "random seed");
    verify_cmd->add_option("--profile", profile, "small, default, or large");

    // The global --output flag may follow the subcommand arguments.
    for (CLI::App* sub : {curvature_cmd, chern_cmd, transgress_cmd, normalize_cmd,
                          borel_cmd, primitive_cmd, verify_cmd})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(curvature_cmd))
            return cmd_curvature(doc_path, output);
        if (app.got_subcommand(chern_cmd))
            return cmd_chern(doc_path, poly, output);
        if (app.got_subcommand(transgress_cmd))
            return cmd_transgress(doc_path, doc1_path, mode, poly, path, output);
        if (app.got_subcommand(normalize_cmd))
            return cmd_normalize(doc_paths, flavor, output);
        if (app.got_subcommand(borel_cmd))
            return cmd_borel(doc_path, metric_path, output);
        if (app.got_subcommand(primitive_cmd))
            return cmd_primitive(doc_path, output);
        if (app.got_subcommand(verify_cmd))
            return cmd_verify(suite, seed, profile, output);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
