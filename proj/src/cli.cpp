#include "laterproof/cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "laterproof/json_io.hpp"
#include "laterproof/render.hpp"
#include "laterproof/search.hpp"

namespace laterproof {

namespace {

struct Options {
    LogicId logic = LogicId::Lc;
    std::string format = "text";
    bool verify = true;
    bool oracle = false;
    bool stats = false;
};

struct Goal {
    std::string text;
    std::string source;  // "goal" for the inline argument, else the file path
    int line = 1;
};

std::string indent(const std::string& block, const std::string& prefix) {
    std::istringstream in(block);
    std::ostringstream out;
    std::string line;
    while (std::getline(in, line)) out << prefix << line << "\n";
    return out.str();
}

std::string stats_line(const SearchStats& st) {
    std::ostringstream out;
    out << "stats: visited=" << st.sequents_visited << " max-branch=" << st.max_branch_length
        << " max-steps-per-branch=" << st.step_applications_max_per_branch
        << " backtracks=" << st.backtracks;
    return out.str();
}

// Handles one goal end to end; returns this goal's exit-code contribution
// and appends to the text stream and, in json mode, to the result array.
int process_goal(const Goal& g, const Options& opt, std::ostream& out, std::ostream& err,
                 nlohmann::json& jresults) {
    nlohmann::json jr = nlohmann::json::object();
    Formula f = Formula::top();
    try {
        f = parse(g.text);
    } catch (const ParseError& pe) {
        err << g.source << ":" << g.line << ":" << (pe.pos + 1) << ": " << pe.what() << "\n";
        jr["goal"] = g.text;
        jr["error"] = pe.what();
        jresults.push_back(std::move(jr));
        return 2;
    }

    int code = 0;
    SearchOutcome outcome = prove_formula(f, opt.logic);
    code = outcome.provable ? 0 : 1;

    jr["goal"] = f.text();
    jr["logic"] = logic_text(opt.logic);
    jr["provable"] = outcome.provable;

    std::ostringstream text;
    text << (outcome.provable ? "provable: " : "not provable: ") << f.text() << "\n";

    if (outcome.provable) {
        if (opt.format == "latex")
            text << render_latex(*outcome.derivation);
        else
            text << indent(render_text(*outcome.derivation), "  ");
        jr["derivation"] = to_json(*outcome.derivation);
    } else {
        text << "countermodel:\n" << indent(render_text(*outcome.model, outcome.refuting_world), "  ");
        jr["model"] = to_json(*outcome.model);
        jr["refuting_world"] = outcome.refuting_world;
        if (opt.verify) {
            bool frame_ok = frame_check(*outcome.model, opt.logic).empty();
            bool refuted = !forces(*outcome.model, outcome.refuting_world, f);
            bool ok = frame_ok && refuted;
            jr["verified"] = ok;
            if (ok) {
                text << "countermodel verified: refutes the goal at world "
                     << outcome.refuting_world << "\n";
            } else {
                text << "countermodel verification FAILED\n";
                err << "self-check failed: returned countermodel does not certify '" << f.text()
                    << "' (frame " << (frame_ok ? "ok" : "bad") << ", goal "
                    << (refuted ? "refuted" : "not refuted") << ")\n";
                code = 3;
            }
        }
    }

    if (opt.oracle) {
        try {
            bool valid = lc_validity_oracle(f);
            bool agrees = valid == outcome.provable;
            jr["oracle"] = {{"valid", valid}, {"agrees", agrees}};
            text << "oracle: " << (valid ? "valid" : "invalid")
                 << (agrees ? " (agrees)" : " (DISAGREES with prover)") << "\n";
            if (!agrees) {
                err << "oracle disagreement on '" << f.text() << "': prover says "
                    << (outcome.provable ? "provable" : "not provable") << ", oracle says "
                    << (valid ? "valid" : "invalid") << "\n";
                code = 3;
            }
        } catch (const std::runtime_error& e) {
            err << "oracle unavailable for '" << f.text() << "': " << e.what() << "\n";
            code = std::max(code, 2);
        }
    }

    if (opt.stats) {
        text << stats_line(outcome.stats) << "\n";
        jr["stats"] = to_json(outcome.stats);
    }

    if (opt.format == "latex" && !outcome.provable) {
        // Countermodels have no proof tree; keep the .tex compilable.
        out << indent(text.str(), "% ");
    } else if (opt.format != "json") {
        out << text.str();
    }
    jresults.push_back(std::move(jr));
    return code;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Decision procedure and countermodel generator for intuitionistic modal "
                 "logics with the 'later' modality"};
    app.name("laterproof");

    std::string inline_goal, file, logic_name = "lc", format = "text", verify = "on";
    bool oracle = false, stats = false;

    app.add_option("formula", inline_goal, "goal formula, e.g. \"(@p -> p) -> p\"");
    app.add_option("--file", file, "file with one goal formula per line; '#' starts a comment")
        ->check(CLI::ExistingFile);
    app.add_option("--logic", logic_name, "lc (linear frames) or km (branching frames)")
        ->check(CLI::IsMember({"lc", "km"}));
    app.add_option("--format", format, "text, json or latex")
        ->check(CLI::IsMember({"text", "json", "latex"}));
    app.add_flag("--verify-countermodel{on}", verify,
                 "re-check every countermodel semantically (on by default; pass "
                 "--verify-countermodel=off to skip)");
    app.add_flag("--oracle", oracle,
                 "cross-check each verdict against the brute-force validity oracle (lc only)");
    app.add_flag("--stats", stats, "report search statistics per goal");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    if (inline_goal.empty() == file.empty()) {
        err << "error: provide exactly one goal source: an inline formula or --file\n";
        return 2;
    }
    if (verify != "on" && verify != "off") {
        err << "error: --verify-countermodel takes 'on' or 'off', got '" << verify << "'\n";
        return 2;
    }

    Options opt;
    opt.logic = *logic_from_text(logic_name);
    opt.format = format;
    opt.verify = verify == "on";
    opt.oracle = oracle;
    opt.stats = stats;
    if (opt.oracle && opt.logic != LogicId::Lc) {
        err << "error: --oracle cross-checks linear-frame validity; it requires --logic lc\n";
        return 2;
    }

    std::vector<Goal> goals;
    if (!file.empty()) {
        std::ifstream in(file);
        if (!in) {
            err << "error: cannot read " << file << "\n";
            return 2;
        }
        std::string line;
        int lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            auto first = line.find_first_not_of(" \t\r");
            if (first == std::string::npos || line[first] == '#') continue;
            goals.push_back({line, file, lineno});
        }
        if (goals.empty()) {
            err << "error: " << file << " contains no goals\n";
            return 2;
        }
    } else {
        goals.push_back({inline_goal, "goal", 1});
    }

    int code = 0;
    nlohmann::json jresults = nlohmann::json::array();
    for (std::size_t i = 0; i < goals.size(); ++i) {
        if (i && opt.format != "json") out << "\n";
        code = std::max(code, process_goal(goals[i], opt, out, err, jresults));
    }
    if (opt.format == "json") out << jresults.dump(2) << "\n";
    return code;
}

}  // namespace laterproof
