#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "xasp/corpus.hpp"
#include "xasp/engine.hpp"
#include "xasp/explain.hpp"
#include "xasp/instrument.hpp"
#include "xasp/oracle.hpp"
#include "xasp/parser.hpp"
#include "xasp/render.hpp"

namespace {

using namespace xasp;

// Stable, documented exit codes (see README).
namespace exit_code {
constexpr int ok = 0;
constexpr int usage = 1;
constexpr int io = 2;
constexpr int syntax = 3;
constexpr int unsafe = 4;
constexpr int unstratifiable = 5;
constexpr int unknown_const = 6;
constexpr int reserved_predicate = 7;
constexpr int not_in_answer_set = 8;
constexpr int solver_spawn = 9;
constexpr int solver_output = 10;
constexpr int model_mismatch = 11;
constexpr int depth_exceeded = 12;
}  // namespace exit_code

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UnsafeProgramError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string readFile(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

Program parseChecked(const std::string& path) {
    Program program = parseProgram(readFile(path));
    auto violations = safetyCheck(program);
    if (!violations.empty()) {
        std::ostringstream oss;
        oss << "unsafe program:";
        for (const auto& violation : violations) oss << "\n  " << violation.message();
        throw UnsafeProgramError(oss.str());
    }
    return program;
}

OutputFormat parseFormat(const std::string& name) {
    if (name == "text") return OutputFormat::Text;
    if (name == "json") return OutputFormat::Json;
    return OutputFormat::Dot;
}

std::set<Predicate> parseSelect(const std::string& spec) {
    std::set<Predicate> out;
    std::istringstream in(spec);
    std::string item;
    while (std::getline(in, item, ',')) {
        auto slash = item.rfind('/');
        if (slash == std::string::npos || slash == 0 || slash + 1 >= item.size()) {
            throw UsageError("--select expects entries like name/arity, got '" + item + "'");
        }
        try {
            out.insert({item.substr(0, slash), std::stoi(item.substr(slash + 1))});
        } catch (const std::exception&) {
            throw UsageError("--select expects an integer arity in '" + item + "'");
        }
    }
    return out;
}

GroundAtom parseAtomArgument(const std::string& text) {
    try {
        return parseGroundAtom(text);
    } catch (const Error& e) {
        throw UsageError("--atom expects a ground atom like a(1,2): " + std::string(e.what()));
    }
}

struct CommonOptions {
    std::string inputPath;
    std::string format = "text";
    std::string recordingPredicate = "rule_fired";
    bool numberFacts = false;
    bool hideTests = false;
    std::optional<int> maxWidth;
};

AnswerSet shownSubset(const AnswerSet& answer, const std::set<GroundAtom>& shown) {
    AnswerSet out;
    out.atoms = shown;
    for (const GroundAtom& atom : shown) {
        auto it = answer.meta.find(atom);
        if (it != answer.meta.end()) out.meta.emplace(atom, it->second);
    }
    return out;
}

int runSolve(const CommonOptions& opts) {
    Program program = parseChecked(opts.inputPath);
    AnswerSet answer = evaluate(expandIntervals(resolveConsts(program)));
    std::set<GroundAtom> shown = filterShown(answer, program);
    if (parseFormat(opts.format) == OutputFormat::Json) {
        std::cout << toJson(shownSubset(answer, shown)) << "\n";
    } else {
        for (const GroundAtom& atom : shown) std::cout << toText(atom) << "\n";
    }
    return exit_code::ok;
}

int runInstrument(const CommonOptions& opts) {
    Program program = parseProgram(readFile(opts.inputPath));
    InstrumentedProgram inst =
        instrumentProgram(program, {opts.recordingPredicate, opts.numberFacts});
    std::cout << programToSource(inst.extended);
    return exit_code::ok;
}

struct ExplainData {
    InstrumentedProgram instrumented;
    AnswerSet extendedAnswer;
    AnswerSet stripped;
    std::vector<Explanation> explanations;
};

ExplainData explainPipeline(const CommonOptions& opts) {
    Program program = parseChecked(opts.inputPath);
    ExplainData data;
    data.instrumented = instrumentProgram(program, {opts.recordingPredicate, opts.numberFacts});
    data.extendedAnswer = evaluate(expandIntervals(resolveConsts(data.instrumented.extended)));
    data.stripped = stripExtension(data.extendedAnswer, opts.recordingPredicate);
    data.explanations = buildExplanations(data.extendedAnswer, data.instrumented);
    return data;
}

int runExplain(const CommonOptions& opts, const std::string& select, const std::string& atomText) {
    ExplainData data = explainPipeline(opts);

    ExplanationFilter filter;
    if (!select.empty()) filter.predicates = parseSelect(select);
    if (!atomText.empty()) {
        GroundAtom atom = parseAtomArgument(atomText);
        if (!data.stripped.contains(atom)) {
            throw NotInAnswerSetError("atom '" + toText(atom) + "' is not in the answer set");
        }
        filter.atom = atom;
    }
    std::vector<Explanation> selected = selectExplanations(data.explanations, filter);

    RenderOptions render;
    render.format = parseFormat(opts.format);
    render.showTestLeaves = !opts.hideTests;
    render.maxWidth = opts.maxWidth;
    switch (render.format) {
        case OutputFormat::Json: std::cout << toJson(std::span(selected)) << "\n"; break;
        case OutputFormat::Dot: std::cout << explanationsToDot(selected, render); break;
        case OutputFormat::Text:
            for (const Explanation& e : selected) {
                std::cout << explanationToText(e, render) << "\n";
            }
            break;
    }
    return exit_code::ok;
}

int runTree(const CommonOptions& opts, const std::string& atomText, std::optional<int> maxDepth) {
    ExplainData data = explainPipeline(opts);
    GroundAtom atom = parseAtomArgument(atomText);
    JustificationTree tree =
        buildJustificationTree(atom, data.explanations, data.stripped, maxDepth);

    RenderOptions render;
    render.format = parseFormat(opts.format);
    render.showTestLeaves = !opts.hideTests;
    switch (render.format) {
        case OutputFormat::Json: std::cout << toJson(tree) << "\n"; break;
        case OutputFormat::Dot: std::cout << treeToDot(tree, render); break;
        case OutputFormat::Text: std::cout << treeToText(tree, render); break;
    }
    return exit_code::ok;
}

int runOracleCommand(const CommonOptions& opts, const std::string& solverPath, bool instrumented,
                     int timeoutSeconds) {
    Program program = parseChecked(opts.inputPath);
    OracleOptions oracle;
    oracle.solverPath = solverPath;
    oracle.instrumented = instrumented;
    oracle.timeoutSeconds = timeoutSeconds;
    oracle.instrument = {opts.recordingPredicate, opts.numberFacts};
    OracleReport report = runOracle(program, oracle);
    if (report.match) {
        std::cout << "MATCH\n";
        return exit_code::ok;
    }
    std::cout << "MISMATCH\n";
    for (const GroundAtom& atom : report.missingInOurs) {
        std::cout << "missing in ours: " << toText(atom) << "\n";
    }
    for (const GroundAtom& atom : report.extraInOurs) {
        std::cout << "extra in ours: " << toText(atom) << "\n";
    }
    return exit_code::model_mismatch;
}

int runExamples(const std::string& dumpName) {
    if (!dumpName.empty()) {
        const CorpusEntry* entry = findCorpusEntry(dumpName);
        if (!entry) throw UsageError("no bundled example named '" + dumpName + "'");
        std::cout << entry->text;
        return exit_code::ok;
    }
    for (const CorpusEntry& entry : corpus()) {
        Program program = parseProgram(entry.text);
        std::size_t facts = 0;
        for (const Rule& rule : program.statements) facts += rule.isFact() ? 1 : 0;
        std::size_t statements =
            program.consts.size() + program.statements.size() + program.shows.size();
        std::cout << entry.name << "  (" << statements << " statements: "
                  << program.consts.size() << " consts, " << facts << " facts, "
                  << program.statements.size() - facts << " rules)\n";
        std::cout << "    " << entry.description << "\n";
    }
    return exit_code::ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"explanation engine for stratified answer set programs"};
    app.require_subcommand(1);

    CommonOptions opts;
    std::string select;
    std::string atomText;
    std::string solverPath;
    std::string dumpName;
    bool instrumented = false;
    int timeoutSeconds = 30;
    int maxDepth = -1;
    int maxWidth = -1;

    auto addInput = [&](CLI::App* cmd) {
        cmd->add_option("file", opts.inputPath, "program file")->required();
    };
    auto addFormat = [&](CLI::App* cmd, std::vector<std::string> formats) {
        cmd->add_option("--format", opts.format, "output format")
            ->check(CLI::IsMember(formats))
            ->capture_default_str();
    };
    auto addInstrumentOpts = [&](CLI::App* cmd) {
        cmd->add_option("--pred", opts.recordingPredicate, "recording predicate name")
            ->capture_default_str();
        cmd->add_flag("--number-facts", opts.numberFacts,
                      "number and instrument facts as well");
    };

    CLI::App* solve = app.add_subcommand("solve", "evaluate a program and print its shown atoms");
    addInput(solve);
    addFormat(solve, {"text", "json"});

    CLI::App* instrument =
        app.add_subcommand("instrument", "print the extended program that records fired rules");
    addInput(instrument);
    addInstrumentOpts(instrument);

    CLI::App* explain = app.add_subcommand("explain", "print explanations of derived atoms");
    addInput(explain);
    addFormat(explain, {"text", "json", "dot"});
    addInstrumentOpts(explain);
    explain->add_option("--select", select, "comma-separated predicate filter, e.g. p/2,q/1");
    explain->add_option("--atom", atomText, "explain one ground atom, e.g. a(1,2)");
    explain->add_option("--width", maxWidth, "wrap explanation lines at this width");
    explain->add_flag("--hide-tests", opts.hideTests, "omit tested literals");

    CLI::App* tree = app.add_subcommand("tree", "print the justification tree of one atom");
    addInput(tree);
    addFormat(tree, {"text", "json", "dot"});
    addInstrumentOpts(tree);
    tree->add_option("--atom", atomText, "ground atom to justify, e.g. a(1,2)")->required();
    tree->add_option("--max-depth", maxDepth, "fail when the tree exceeds this depth");
    tree->add_flag("--hide-tests", opts.hideTests, "omit tested literals");

    CLI::App* oracle =
        app.add_subcommand("oracle", "cross-check the answer set against an external solver");
    addInput(oracle);
    addInstrumentOpts(oracle);
    oracle->add_option("--solver", solverPath, "solver executable")
        ->envname("XASP_SOLVER")
        ->required();
    oracle->add_flag("--instrumented", instrumented, "cross-check the extended program");
    oracle->add_option("--timeout", timeoutSeconds, "solver timeout in seconds")
        ->capture_default_str();

    CLI::App* examples = app.add_subcommand("examples", "list the bundled example programs");
    examples->add_option("--dump", dumpName, "print one bundled program");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "xasp: " << e.what() << "\n";
        return exit_code::usage;
    }

    if (maxWidth >= 0) opts.maxWidth = maxWidth;

    try {
        if (solve->parsed()) return runSolve(opts);
        if (instrument->parsed()) return runInstrument(opts);
        if (explain->parsed()) return runExplain(opts, select, atomText);
        if (tree->parsed()) {
            return runTree(opts, atomText,
                           maxDepth >= 0 ? std::optional<int>(maxDepth) : std::nullopt);
        }
        if (oracle->parsed()) {
            return runOracleCommand(opts, solverPath, instrumented, timeoutSeconds);
        }
        if (examples->parsed()) return runExamples(dumpName);
    } catch (const UsageError& e) {
        std::cerr << "xasp: " << e.what() << "\n";
        return exit_code::usage;
    } catch (const IoError& e) {
        std::cerr << "xasp: " << e.what() << "\n";
        return exit_code::io;
    } catch (const IllegalCharacterError& e) {
        std::cerr << "xasp: " << e.what() << "\n";
        return exit_code::syntax;
    } catch (const SyntaxError& e) {
        std::cerr << "xasp: " << e.what() << "\n";
        return exit_code::syntax;
    } catch (const UnsafeProgramError& e) {
        std::cerr << "xasp: " << e.what() << "\n";
        return exit_code::unsafe;
    } catch (const UnstratifiableError& e) {
        std::cerr << "xasp: " << e.what() << "\n";
        return exit_code::unstratifiable;
    } catch (const UnknownConstError& e) {
        std::cerr << "xasp: " << e.what() << "\n";
        return exit_code::unknown_const;
    } catch (const ReservedPredicateError& e) {
        std::cerr << "xasp: " << e.what() << "\n";
        return exit_code::reserved_predicate;
    } catch (const NotInAnswerSetError& e) {
        std::cerr << "xasp: " << e.what() << "\n";
        return exit_code::not_in_answer_set;
    } catch (const DepthExceededError& e) {
        std::cerr << "xasp: " << e.what() << "\n";
        return exit_code::depth_exceeded;
    } catch (const SolverSpawnError& e) {
        std::cerr << "xasp: " << e.what() << "\n";
        return exit_code::solver_spawn;
    } catch (const SolverOutputParseError& e) {
        std::cerr << "xasp: " << e.what() << "\n";
        return exit_code::solver_output;
    } catch (const std::exception& e) {
        std::cerr << "xasp: internal error: " << e.what() << "\n";
        return exit_code::usage;
    }
    return exit_code::ok;
}
