#pragma once

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "olp/driver.hpp"

namespace olp::cli {

inline constexpr int kExitFound = 0;
inline constexpr int kExitNone = 1;
inline constexpr int kExitError = 2;

namespace detail {

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline std::vector<Literal> sorted_by_name(const LiteralSet& ls) {
    std::vector<Literal> lits(ls.begin(), ls.end());
    std::sort(lits.begin(), lits.end(), [](const Literal& a, const Literal& b) {
        const std::string &na = Symbols::name(a.atom), &nb = Symbols::name(b.atom);
        return na != nb ? na < nb : a.positive > b.positive;
    });
    return lits;
}

inline std::string text_form(const LiteralSet& ls) {
    std::string s = "{";
    const char* sep = " ";
    for (const Literal& l : sorted_by_name(ls)) {
        s += sep;
        s += l.to_string();
        sep = ", ";
    }
    return s + " }";
}

inline nlohmann::json labels_json(const Program& p, const LabelSet& ks) {
    nlohmann::json arr = nlohmann::json::array();
    for (RuleIdx k : ks) arr.push_back(p[k].label);
    return arr;
}

}  // namespace detail

// Command line front end; returns the process exit code.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"solver for ordered logic programs"};
    app.name("olps");

    std::string input, constraints_path;
    std::string mode_name = "proper", dialect_name = "olp", format_name = "text";
    std::size_t max_answers = 0;
    bool use_oracle = false, print_only = false, prune = false;

    app.add_option("input", input, "program file")->required();
    app.add_option("--mode", mode_name, "extended | preferred | proper (default proper)")
        ->check(CLI::IsMember({"extended", "preferred", "proper"}));
    app.add_option("--dialect", dialect_name, "olp | lpod | cr | repair (default olp)")
        ->check(CLI::IsMember({"olp", "lpod", "cr", "repair"}));
    app.add_option("--constraints", constraints_path, "constraint file (repair dialect)");
    app.add_option("--max", max_answers, "report at most N answer sets");
    app.add_flag("--oracle", use_oracle, "answer with the brute-force reference instead");
    app.add_option("--format", format_name, "text | json (default text)")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_flag("--print", print_only, "echo the parsed program in canonical form and exit");
    app.add_flag("--prune", prune, "enable search-tree pruning (same answers, fewer nodes)");

    std::vector<std::string> argv = args;
    std::reverse(argv.begin(), argv.end());
    try {
        app.parse(argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return kExitFound;
        }
        err << "olps: " << e.what() << "\n";
        return kExitError;
    }

    try {
        driver::Mode mode = mode_name == "extended"    ? driver::Mode::extended
                            : mode_name == "preferred" ? driver::Mode::preferred
                                                       : driver::Mode::proper;
        olps::Dialect dialect = dialect_name == "lpod"     ? olps::Dialect::lpod
                                : dialect_name == "cr"     ? olps::Dialect::cr
                                : dialect_name == "repair" ? olps::Dialect::repair
                                                           : olps::Dialect::olp;

        driver::Elaboration elab;
        LiteralSet db_facts;
        if (dialect == olps::Dialect::repair) {
            if (print_only) throw std::invalid_argument("--print applies to module-format dialects");
            if (constraints_path.empty())
                throw std::invalid_argument("repair dialect needs --constraints FILE");
            transforms::Database db(olps::parse_database(detail::read_file(input)));
            db_facts = db.facts;
            std::vector<transforms::ConstraintClause> cs;
            for (auto& clause : olps::parse_constraints(detail::read_file(constraints_path)))
                cs.push_back(transforms::ConstraintClause(std::move(clause)));
            elab = driver::elaborate_repair(db, cs);
        } else {
            olps::SourceDocument doc = olps::parse(detail::read_file(input), dialect);
            if (print_only) {
                out << olps::print(doc);
                return kExitFound;
            }
            elab = driver::elaborate(doc);
        }

        driver::SolveOptions opts;
        opts.use_oracle = use_oracle;
        opts.search.prune = prune;
        std::vector<driver::Answer> answers = driver::solve(elab, mode, opts);
        if (max_answers > 0 && answers.size() > max_answers) answers.resize(max_answers);

        if (format_name == "json") {
            nlohmann::json doc;
            doc["dialect"] = olps::to_string(elab.dialect);
            doc["mode"] = driver::to_string(mode);
            doc["count"] = answers.size();
            doc["answer_sets"] = nlohmann::json::array();
            for (const driver::Answer& a : answers) {
                nlohmann::json rec;
                rec["literals"] = nlohmann::json::array();
                for (const Literal& l : detail::sorted_by_name(a.shown))
                    rec["literals"].push_back(l.to_string());
                rec["reduct"] = detail::labels_json(elab.ordered.program, a.reduct);
                rec["satisfied"] = detail::labels_json(elab.ordered.program, a.reduct);
                rec["defeated"] = detail::labels_json(elab.ordered.program, a.defeated);
                if (elab.dialect == olps::Dialect::repair) {
                    LiteralSet delta;
                    for (const Literal& l : a.shown)
                        if (!db_facts.count(l)) delta.insert(l);
                    rec["delta"] = nlohmann::json::array();
                    for (const Literal& l : detail::sorted_by_name(delta))
                        rec["delta"].push_back(l.to_string());
                }
                doc["answer_sets"].push_back(std::move(rec));
            }
            out << doc.dump(2) << "\n";
        } else {
            for (const driver::Answer& a : answers) out << detail::text_form(a.shown) << "\n";
        }
        return answers.empty() ? kExitNone : kExitFound;
    } catch (const olps::ParseError& e) {
        err << "olps: " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        err << "olps: " << e.what() << "\n";
        return kExitError;
    }
}

inline int run_main(int argc, char** argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run(args, out, err);
}

}  // namespace olp::cli
