// End-to-end acceptance: each criterion prints exactly one [PASS]/[FAIL]
// line. Exit status 0 iff every criterion passed. argv[1] names the CLI
// binary used for the tooling criterion.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <initializer_list>
#include <string>

#include <json.hpp>

#include "kforms/cap.hpp"
#include "kforms/chern.hpp"
#include "kforms/document.hpp"
#include "kforms/errors.hpp"
#include "kforms/ktheory.hpp"
#include "kforms/parse.hpp"
#include "kforms/randomgen.hpp"
#include "kforms/render.hpp"
#include "kforms/transgression.hpp"
#include "kforms/verify.hpp"

using namespace kforms;

namespace {

int failures = 0;

void criterion(int id, const char* label, bool ok, const std::string& note) {
    std::printf("[%s] %2d %s%s%s\n", ok ? "PASS" : "FAIL", id, label,
                note.empty() ? "" : ": ", note.c_str());
    std::fflush(stdout);
    if (!ok)
        ++failures;
}

double secs_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
}

std::string fmt_secs(double s) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1fs", s);
    return buf;
}

struct SuiteOutcome {
    bool ok = true;
    unsigned checks = 0;
    unsigned min_instances = ~0u;
    double secs = 0;
    std::string why;
};

SuiteOutcome run_suites(std::initializer_list<const char*> names,
                        std::uint64_t seed, const char* profile,
                        unsigned floor) {
    SuiteOutcome out;
    Profile p = Profile::by_name(profile);
    auto t0 = std::chrono::steady_clock::now();
    for (const char* name : names) {
        VerifyReport r = run_verify(name, seed, p);
        for (const SuiteResult& s : r.suites)
            for (const CheckResult& c : s.checks) {
                ++out.checks;
                if (c.instances < out.min_instances)
                    out.min_instances = c.instances;
                if (!c.passed && out.why.empty()) {
                    out.ok = false;
                    out.why = s.name + "/" + c.name + ": " + c.detail;
                }
                if (c.instances < floor && out.why.empty()) {
                    out.ok = false;
                    out.why = s.name + "/" + c.name + " ran " +
                              std::to_string(c.instances) + " < " +
                              std::to_string(floor) + " instances";
                }
            }
    }
    out.secs = secs_since(t0);
    return out;
}

void suite_criterion(int id, const char* label,
                     std::initializer_list<const char*> names,
                     std::uint64_t seed, const char* profile, unsigned floor,
                     double budget = 0) {
    SuiteOutcome o = run_suites(names, seed, profile, floor);
    if (budget > 0 && o.secs > budget && o.ok) {
        o.ok = false;
        o.why = "took " + fmt_secs(o.secs) + " > " + fmt_secs(budget);
    }
    std::string note = o.ok ? std::to_string(o.checks) + " checks, >=" +
                                  std::to_string(o.min_instances) +
                                  " instances each, " + fmt_secs(o.secs)
                            : o.why;
    criterion(id, label, o.ok, note);
}

struct CliResult {
    int status = -1;
    std::string out;
};

CliResult run_cli(const std::string& cli, const std::string& args,
                  bool merge_stderr = false) {
    CliResult r;
    std::string cmd = "\"" + cli + "\" " + args +
                      (merge_stderr ? " 2>&1" : " 2>/dev/null");
    FILE* p = popen(cmd.c_str(), "r");
    if (!p)
        return r;
    char buf[4096];
    std::size_t n;
    while ((n = std::fread(buf, 1, sizeof buf, p)) > 0)
        r.out.append(buf, n);
    int rc = pclose(p);
    if (rc >= 0 && WIFEXITED(rc))
        r.status = WEXITSTATUS(rc);
    return r;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    out << text;
}

// Temp documents for the CLI round trip.
const char* kDocA = "acceptance_doc_a.json";
const char* kDocB = "acceptance_doc_b.json";
const char* kDocZero = "acceptance_doc_zero.json";
const char* kDocEnd = "acceptance_doc_end.json";
const char* kDocPath = "acceptance_doc_path.json";
const char* kDocMetric = "acceptance_doc_metric.json";
const char* kFormClosed = "acceptance_form_closed.json";
const char* kFormOpen = "acceptance_form_open.json";

void write_documents() {
    write_file(kDocA, R"({
  "dimension": 3,
  "rank": 2,
  "entries": [["x2*dx1", "i*dx3"], ["0", "x1*dx2"]],
  "alpha": "x1*dx2"
})");
    write_file(kDocB, R"({
  "dimension": 3,
  "rank": 2,
  "entries": [["0", "x3*dx2"], ["dx1", "0"]],
  "alpha": "x2*dx3",
  "sign": -1
})");
    write_file(kDocZero, R"({
  "dimension": 2,
  "rank": 1,
  "entries": [["0"]]
})");
    write_file(kDocEnd, R"({
  "dimension": 2,
  "rank": 1,
  "entries": [["x1*dx2"]]
})");
    write_file(kDocPath, R"({
  "dimension": 2,
  "rank": 1,
  "entries": [["t^2*x1*dx2"]]
})");
    write_file(kDocMetric, R"({
  "dimension": 3,
  "rank": 2,
  "entries": [["1", "x1"], ["0", "1"]]
})");
    write_file(kFormClosed, R"({"dimension": 2, "form": "dx1*dx2"})");
    write_file(kFormOpen, R"({"dimension": 2, "form": "x1*dx2"})");
}

void remove_documents() {
    for (const char* p : {kDocA, kDocB, kDocZero, kDocEnd, kDocPath, kDocMetric,
                          kFormClosed, kFormOpen})
        std::remove(p);
}

// One named sub-check of the tooling criterion; returns true and appends to
// why on failure.
bool tooling_fail(std::string& why, const std::string& what) {
    if (why.empty())
        why = what;
    return false;
}

bool check_roundtrips(std::string& why) {
    Profile p = Profile::by_name("default");
    for (unsigned i = 0; i < 500; ++i) {
        Sampler s(derive_seed(7, "acceptance", "roundtrip", i), p);
        bool cylinder = (i % 2) == 1;
        Form f = s.arbitrary_form(cylinder);
        std::string text = render_form(f);
        Form back = cylinder ? parse_form_cylinder(text, f.dim())
                             : parse_form(text, f.dim());
        if (back != f)
            return tooling_fail(why, "parse(render) mismatch at form " +
                                         std::to_string(i) + ": " + text);
        if (render_form(back) != text)
            return tooling_fail(why, "render not idempotent at form " +
                                         std::to_string(i));
    }
    return true;
}

bool check_cli_verify(const std::string& cli, std::string& why) {
    auto t0 = std::chrono::steady_clock::now();
    CliResult first =
        run_cli(cli, "verify --suite all --profile small --seed 7 --output json");
    double secs = secs_since(t0);
    if (first.status != 0)
        return tooling_fail(why, "verify all/small/7 exited " +
                                     std::to_string(first.status));
    if (secs >= 60)
        return tooling_fail(why, "verify all/small/7 took " + fmt_secs(secs));
    CliResult second =
        run_cli(cli, "verify --suite all --profile small --seed 7 --output json");
    if (second.status != 0 || second.out != first.out)
        return tooling_fail(why, "verify report is not byte deterministic");
    nlohmann::json j = nlohmann::json::parse(first.out);
    if (j.at("passed") != true || j.at("suites").size() != suite_names().size())
        return tooling_fail(why, "verify report shape unexpected");
    return true;
}

bool check_cli_documents(const std::string& cli, std::string& why) {
    Document da = load_document(kDocA);
    Connection ca = document_connection(da);
    Triple ta = document_triple(da);

    // curvature: every printed entry matches the library value.
    CliResult cur = run_cli(cli, std::string("curvature ") + kDocA + " --output json");
    if (cur.status != 0)
        return tooling_fail(why, "curvature exited " + std::to_string(cur.status));
    {
        nlohmann::json j = nlohmann::json::parse(cur.out);
        FormMatrix f = curvature(ca);
        if (j.at("rank") != 2 || j.at("dimension") != 3)
            return tooling_fail(why, "curvature header mismatch");
        for (unsigned r = 0; r < 2; ++r)
            for (unsigned c = 0; c < 2; ++c) {
                Form got = parse_form(j.at("entries")[r][c].get<std::string>(), 3);
                if (got != f.at(r, c))
                    return tooling_fail(why, "curvature entry mismatch");
            }
    }

    // chern: default poly is the total class; ck:K slices it.
    CliResult ch = run_cli(cli, std::string("chern ") + kDocA + " --output json");
    if (ch.status != 0)
        return tooling_fail(why, "chern exited " + std::to_string(ch.status));
    {
        nlohmann::json j = nlohmann::json::parse(ch.out);
        Form got = parse_form(j.at("value").get<std::string>(), 3);
        if (got != eval_poly(InvPoly::total_chern(), curvature(ca)))
            return tooling_fail(why, "chern ctot mismatch");
    }
    CliResult c1 = run_cli(cli, std::string("chern ") + kDocA +
                                    " --poly ck:1 --output json");
    {
        nlohmann::json j = nlohmann::json::parse(c1.out);
        Form got = parse_form(j.at("value").get<std::string>(), 3);
        if (got != eval_poly(InvPoly::chern_component(1), curvature(ca)))
            return tooling_fail(why, "chern ck:1 mismatch");
    }

    // transgress, affine and explicit path.
    Connection cb = document_connection(load_document(kDocB));
    CliResult tr = run_cli(cli, std::string("transgress ") + kDocA + " " + kDocB +
                                    " --mode additive --poly ch --output json");
    if (tr.status != 0)
        return tooling_fail(why, "transgress exited " + std::to_string(tr.status));
    {
        nlohmann::json j = nlohmann::json::parse(tr.out);
        Form got = parse_form(j.at("value").get<std::string>(), 3);
        if (got != cs_additive(InvPoly::chern_char(), ca, cb))
            return tooling_fail(why, "additive transgression mismatch");
    }
    CliResult tm = run_cli(cli, std::string("transgress ") + kDocZero + " " +
                                    kDocEnd + " --mode multiplicative --path " +
                                    kDocPath + " --output json");
    if (tm.status != 0)
        return tooling_fail(why, "transgress --path exited " +
                                     std::to_string(tm.status));
    {
        nlohmann::json j = nlohmann::json::parse(tm.out);
        Form got = parse_form(j.at("value").get<std::string>(), 2);
        ConnectionPath cp = document_path(load_document(kDocPath));
        if (got != cs_multiplicative(InvPoly::total_chern(), cp))
            return tooling_fail(why, "multiplicative path transgression mismatch");
    }

    // normalize: signs feed the difference class.
    CliResult nm = run_cli(cli, std::string("normalize ") + kDocA + " " + kDocB +
                                    " --flavor mult --output json");
    if (nm.status != 0)
        return tooling_fail(why, "normalize exited " + std::to_string(nm.status));
    {
        nlohmann::json j = nlohmann::json::parse(nm.out);
        KClassMult k = normalize_mult({document_signed_triple(da),
                                       document_signed_triple(load_document(kDocB))});
        if (j.at("rank") != k.rank)
            return tooling_fail(why, "normalize rank mismatch");
        Form got = parse_form(j.at("alpha").get<std::string>(), 3);
        if (got != k.alpha)
            return tooling_fail(why, "normalize alpha mismatch");
    }

    // borel: metric defaults to the identity, --metric reads a factor.
    CliResult bo = run_cli(cli, std::string("borel ") + kDocA + " --output json");
    if (bo.status != 0)
        return tooling_fail(why, "borel exited " + std::to_string(bo.status));
    {
        nlohmann::json j = nlohmann::json::parse(bo.out);
        Metric id = Metric::identity(2, 3);
        if (parse_form(j.at("star").get<std::string>(), 3) != borel_star(ta, id))
            return tooling_fail(why, "borel star mismatch");
        if (parse_form(j.at("additive").get<std::string>(), 3) !=
            borel_additive(ta, id))
            return tooling_fail(why, "borel additive mismatch");
    }
    CliResult bm = run_cli(cli, std::string("borel ") + kDocA + " --metric " +
                                    kDocMetric + " --output json");
    {
        nlohmann::json j = nlohmann::json::parse(bm.out);
        Metric m = document_metric(load_document(kDocMetric));
        if (parse_form(j.at("star").get<std::string>(), 3) != borel_star(ta, m))
            return tooling_fail(why, "borel --metric mismatch");
    }

    // primitive: succeeds on closed input, exits 2 on non-closed input.
    CliResult pr = run_cli(cli, std::string("primitive ") + kFormClosed +
                                    " --output json");
    if (pr.status != 0)
        return tooling_fail(why, "primitive exited " + std::to_string(pr.status));
    {
        nlohmann::json j = nlohmann::json::parse(pr.out);
        Form got = parse_form(j.at("value").get<std::string>(), 2);
        if (got != parse_form("1/2*x1*dx2 - 1/2*x2*dx1", 2))
            return tooling_fail(why, "primitive value mismatch");
    }
    CliResult bad = run_cli(cli, std::string("primitive ") + kFormOpen, true);
    if (bad.status != 2)
        return tooling_fail(why, "primitive on a non-closed form exited " +
                                     std::to_string(bad.status) + ", want 2");

    // text mode stays available.
    CliResult txt = run_cli(cli, std::string("curvature ") + kDocA);
    if (txt.status != 0 || txt.out.find("F[1][2] = ") == std::string::npos)
        return tooling_fail(why, "curvature text output missing entries");

    return true;
}

bool check_cli_usage_errors(const std::string& cli, std::string& why) {
    struct Case {
        const char* what;
        std::string args;
    };
    const Case cases[] = {
        {"unknown suite", "verify --suite no-such-suite"},
        {"bad poly", std::string("chern ") + kDocA + " --poly ck:x"},
        {"missing mode", std::string("transgress ") + kDocA + " " + kDocB},
        {"bad output", std::string("--output yaml curvature ") + kDocA},
        {"missing file", "curvature acceptance_no_such_doc.json"},
        {"bad flavor", std::string("normalize ") + kDocA + " --flavor odd"},
        {"no subcommand", ""},
    };
    for (const Case& c : cases) {
        CliResult r = run_cli(cli, c.args, true);
        if (r.status != 2)
            return tooling_fail(why, std::string(c.what) + " exited " +
                                         std::to_string(r.status) + ", want 2");
    }
    return true;
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: %s <path-to-cli>\n", argv[0]);
        return 2;
    }
    const std::string cli = argv[1];

    suite_criterion(1, "modified sum on odd forms is an exact group law",
                    {"cap-laws"}, 2026, "default", 200, 30.0);
    suite_criterion(2, "unit-series calculus (inverse, root, exponential)",
                    {"omega-plus"}, 2026, "default", 100);
    suite_criterion(3, "curvature and characteristic forms on rank <= 2, R^4",
                    {"chern-weil"}, 2026, "default", 100);
    suite_criterion(4, "additive transgression identities",
                    {"transgression-additive"}, 2026, "default", 50);
    suite_criterion(5, "multiplicative transgression identities",
                    {"transgression-multiplicative"}, 2026, "default", 50);
    suite_criterion(6, "normal-form correspondence of the two group models",
                    {"maitresse"}, 2026, "default", 50, 120.0);

    // The K-group criterion also needs 100 gauge-substitution applications,
    // delivered by the isomorphism-invariance check.
    {
        SuiteOutcome o = run_suites({"ktheory-mult", "ktheory-add", "borel",
                                     "legacy"},
                                    2026, "small", 50);
        VerifyReport r = run_verify("ktheory-mult", 2026, Profile::by_name("small"));
        bool reldeq_ok = false;
        for (const CheckResult& c : r.suites.at(0).checks)
            if (c.name == "isomorphism-invariance")
                reldeq_ok = c.passed && c.instances >= 100;
        if (!reldeq_ok && o.why.empty()) {
            o.ok = false;
            o.why = "gauge substitution ran under 100 instances";
        }
        std::string note = o.ok ? std::to_string(o.checks) + " checks, " +
                                      fmt_secs(o.secs)
                                : o.why;
        criterion(7, "k-group normal forms, obstruction classes, legacy slot",
                  o.ok && reldeq_ok, note);
    }

    suite_criterion(8, "comparison squares between the two theories",
                    {"virginia"}, 2026, "small", 50);
    suite_criterion(9, "differential character models on the patch",
                    {"angelique-model", "karen-model"}, 2026, "small", 50);

    {
        write_documents();
        std::string why;
        auto t0 = std::chrono::steady_clock::now();
        bool ok = true;
        try {
            ok = check_roundtrips(why) && check_cli_verify(cli, why) &&
                 check_cli_documents(cli, why) && check_cli_usage_errors(cli, why);
        } catch (const std::exception& e) {
            ok = false;
            why = std::string("exception: ") + e.what();
        }
        remove_documents();
        std::string note = ok ? "500 round trips, deterministic CLI reports, " +
                                    fmt_secs(secs_since(t0))
                              : why;
        criterion(10, "parser, renderer, and CLI round trips", ok, note);
    }

    std::printf("acceptance: %d/10 criteria passed\n", 10 - failures);
    return failures == 0 ? 0 : 1;
}
