#include "seforget/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "seforget/forgetting.hpp"
#include "seforget/parser.hpp"
#include "seforget/semantics.hpp"

namespace seforget::cli {

namespace {

class InputError : public Error {
public:
    using Error::Error;
};

std::string read_source(const std::string& path, std::istream& in) {
    std::ostringstream buf;
    if (path == "-") {
        buf << in.rdbuf();
        return buf.str();
    }
    std::ifstream file(path, std::ios::binary);
    if (!file)
        throw InputError("cannot open '" + path + "'");
    buf << file.rdbuf();
    return buf.str();
}

Signature atoms_of(const std::vector<std::string>& names) {
    std::vector<Atom> atoms;
    for (const auto& n : names)
        atoms.emplace_back(n);
    return Signature(std::move(atoms));
}

void print_program(std::ostream& out, const Program& p, bool as_json) {
    if (as_json)
        out << encode_json(p) << '\n';
    else if (!p.empty())
        out << format_program(p) << '\n';
}

AgentSuite load_suite(const std::string& path, std::istream& in) {
    const std::string text = read_source(path, in);
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw DecodeError(std::string("malformed manifest: ") + e.what());
    }
    if (!doc.is_object() || doc.size() != 1 || !doc.contains("agents") || !doc["agents"].is_array())
        throw DecodeError("manifest must be {\"agents\": [...]}");
    const std::filesystem::path base =
        path == "-" ? std::filesystem::current_path() : std::filesystem::path(path).parent_path();
    std::vector<Program> programs;
    std::vector<Signature> forget;
    for (const auto& agent : doc["agents"]) {
        if (!agent.is_object() || !agent.contains("program") || !agent["program"].is_string())
            throw DecodeError("each agent needs a \"program\" file");
        for (const auto& [key, _] : agent.items())
            if (key != "program" && key != "forget")
                throw DecodeError("unexpected agent field '" + key + "'");
        std::vector<std::string> names;
        if (agent.contains("forget")) {
            if (!agent["forget"].is_array())
                throw DecodeError("\"forget\" must be an array of atoms");
            for (const auto& n : agent["forget"]) {
                if (!n.is_string())
                    throw DecodeError("\"forget\" must be an array of atoms");
                names.push_back(n.get<std::string>());
            }
        }
        std::filesystem::path prog = agent["program"].get<std::string>();
        if (prog.is_relative())
            prog = base / prog;
        programs.push_back(parse_program(read_source(prog.string(), in)));
        forget.push_back(atoms_of(names));
    }
    return AgentSuite(std::move(programs), std::move(forget));
}

struct Options {
    std::vector<std::string> files;
    std::vector<std::string> atoms;
    std::vector<std::string> sig;
    std::string mode = "sound";
    std::string rule;
    bool no_saturate = false;
    bool no_minimize = false;
    bool keep_local = false;
    bool json = false;
    bool verify = false;
    std::size_t limit = 0;
};

EnumerationLimits limits_from(const Options& o) {
    EnumerationLimits l;
    if (o.limit != 0)
        l.answer_set_atoms = l.se_model_atoms = o.limit;
    return l;
}

int cmd_forget(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
    const Program p = parse_program(read_source(o.files.at(0), in));
    const Signature forget = atoms_of(o.atoms);
    ForgetOptions opts;
    opts.step1_mode = o.mode == "paper-literal" ? Step1Mode::paper_literal : Step1Mode::sound;
    opts.saturate = !o.no_saturate;
    opts.minimize_output = !o.no_minimize;
    opts.keep_local_rules = o.keep_local;
    const Program result = forget_set(p, forget, opts);
    print_program(out, result, o.json);
    if (!o.verify)
        return success;

    const Signature sig = program_signature(p);
    const Signature rest = sig.minus(forget);
    const auto limits = limits_from(o);
    const SEModelSet expected = project_models(se_models(p, sig, limits), rest);
    const SEModelSet actual = se_models(result, rest, limits);
    if (expected == actual)
        return success;
    err << "verify: SE models of the result differ from the projected SE models of the input\n";
    if (!expressible_by_disjunctive_program(expected))
        err << "verify: the projected model set is not expressible by any disjunctive program\n";
    return negative;
}

int cmd_models(const Options& o, std::istream& in, std::ostream& out) {
    const Program p = parse_program(read_source(o.files.at(0), in));
    const Signature sig = program_signature(p).unite(atoms_of(o.sig));
    const SEModelSet models = se_models(p, sig, limits_from(o));
    if (o.json)
        out << encode_json(models) << '\n';
    else if (!models.empty())
        out << format_models(models) << '\n';
    return models.empty() ? negative : success;
}

int cmd_answersets(const Options& o, std::istream& in, std::ostream& out) {
    const Program p = parse_program(read_source(o.files.at(0), in));
    const auto sets = answer_sets(p, limits_from(o));
    if (o.json)
        out << encode_json(sets) << '\n';
    else if (!sets.empty())
        out << format_answer_sets(sets) << '\n';
    return sets.empty() ? negative : success;
}

int cmd_equiv(const Options& o, std::istream& in, std::ostream& out) {
    const Program p = parse_program(read_source(o.files.at(0), in));
    const Program q = parse_program(read_source(o.files.at(1), in));
    const Signature sig = program_signature(p).unite(program_signature(q)).unite(atoms_of(o.sig));
    const bool eq = strongly_equivalent(p, q, sig, limits_from(o));
    out << (eq ? "equivalent" : "not equivalent") << '\n';
    return eq ? success : negative;
}

int cmd_entails(const Options& o, std::istream& in, std::ostream& out) {
    const Program p = parse_program(read_source(o.files.at(0), in));
    const Rule r = parse_rule(o.rule);
    const Signature sig = program_signature(p).unite(r.signature()).unite(atoms_of(o.sig));
    const bool yes = se_entails(p, r, sig, limits_from(o));
    out << (yes ? "entailed" : "not entailed") << '\n';
    return yes ? success : negative;
}

int cmd_agree(const Options& o, std::istream& in, std::ostream& out) {
    const AgentSuite suite = load_suite(o.files.at(0), in);
    const auto sets = agreements(suite, agreement_options(), limits_from(o));
    if (o.json)
        out << encode_json(sets) << '\n';
    else if (!sets.empty())
        out << format_answer_sets(sets) << '\n';
    return sets.empty() ? negative : success;
}

int cmd_forget_pc(const Options& o, std::istream& in, std::ostream& out) {
    ClauseSet clauses = parse_clauses(read_source(o.files.at(0), in));
    for (const auto& p : atoms_of(o.atoms))
        clauses = forget_pc(clauses, p);
    if (!clauses.empty())
        out << format_clauses(clauses) << '\n';
    return success;
}

} // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Forgetting in disjunctive logic programs under SE semantics", "seforget"};
    app.require_subcommand(1);
    Options o;

    auto add_limit = [&](CLI::App* c) {
        c->add_option("--limit", o.limit, "Override the enumeration atom limit");
    };

    auto* forget = app.add_subcommand("forget", "Forget atoms from a program");
    forget->add_option("file", o.files, "Program file ('-' for stdin)")->required()->expected(1);
    forget->add_option("--atoms", o.atoms, "Atoms to forget")->required()->delimiter(',');
    forget->add_option("--mode", o.mode, "Step-1 normalization")
        ->check(CLI::IsMember({"sound", "paper-literal"}));
    forget->add_flag("--no-saturate", o.no_saturate, "Single resolution pass");
    forget->add_flag("--no-minimize", o.no_minimize, "Skip the final subsumption cleanup");
    forget->add_flag("--keep-local", o.keep_local, "Keep locally redundant rules");
    forget->add_flag("--json", o.json, "JSON output");
    forget->add_flag("--verify", o.verify, "Check the result against the SE-model projection");
    add_limit(forget);

    auto* models = app.add_subcommand("models", "List SE models");
    models->add_option("file", o.files)->required()->expected(1);
    models->add_option("--sig", o.sig, "Extra signature atoms")->delimiter(',');
    models->add_flag("--json", o.json);
    add_limit(models);

    auto* answersets = app.add_subcommand("answersets", "List answer sets");
    answersets->add_option("file", o.files)->required()->expected(1);
    answersets->add_flag("--json", o.json);
    add_limit(answersets);

    auto* equiv = app.add_subcommand("equiv", "Strong equivalence of two programs");
    equiv->add_option("files", o.files)->required()->expected(2);
    equiv->add_option("--sig", o.sig)->delimiter(',');
    add_limit(equiv);

    auto* entails = app.add_subcommand("entails", "SE consequence of a rule");
    entails->add_option("file", o.files)->required()->expected(1);
    entails->add_option("--rule", o.rule)->required();
    entails->add_option("--sig", o.sig)->delimiter(',');
    add_limit(entails);

    auto* agree = app.add_subcommand("agree", "Agreements of an agent suite");
    agree->add_option("manifest", o.files)->required()->expected(1);
    agree->add_flag("--json", o.json);
    add_limit(agree);

    auto* forget_pc = app.add_subcommand("forget-pc", "Forget atoms from a clause file");
    forget_pc->add_option("file", o.files)->required()->expected(1);
    forget_pc->add_option("--atoms", o.atoms)->required()->delimiter(',');

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return success;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    }

    try {
        if (forget->parsed())
            return cmd_forget(o, in, out, err);
        if (models->parsed())
            return cmd_models(o, in, out);
        if (answersets->parsed())
            return cmd_answersets(o, in, out);
        if (equiv->parsed())
            return cmd_equiv(o, in, out);
        if (entails->parsed())
            return cmd_entails(o, in, out);
        if (agree->parsed())
            return cmd_agree(o, in, out);
        if (forget_pc->parsed())
            return cmd_forget_pc(o, in, out);
    } catch (const SignatureTooLarge& e) {
        err << "error: " << e.what() << '\n';
        return guard_tripped;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    }
    return usage_error;
}

} // namespace seforget::cli
