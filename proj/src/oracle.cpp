#include "xasp/oracle.hpp"

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <chrono>
#include <cstdio>
#include <cstring>
#include <sstream>

#include "xasp/engine.hpp"
#include "xasp/parser.hpp"
#include "xasp/render.hpp"

namespace xasp {

namespace {

struct TempFile {
    std::string path;

    explicit TempFile(const std::string& content) {
        char name[] = "/tmp/xasp-oracle-XXXXXX";
        int fd = mkstemp(name);
        if (fd < 0) throw SolverSpawnError("cannot create temporary program file");
        path = name;
        ssize_t written = write(fd, content.data(), content.size());
        close(fd);
        if (written != static_cast<ssize_t>(content.size())) {
            unlink(name);
            throw SolverSpawnError("cannot write temporary program file");
        }
    }
    ~TempFile() { unlink(path.c_str()); }
    TempFile(const TempFile&) = delete;
    TempFile& operator=(const TempFile&) = delete;
};

std::string runSolver(const std::string& solverPath, const std::string& programFile,
                      int timeoutSeconds) {
    if (access(solverPath.c_str(), X_OK) != 0) {
        throw SolverSpawnError("solver '" + solverPath + "' is not executable: " +
                               std::strerror(errno));
    }

    int fds[2];
    if (pipe(fds) != 0) throw SolverSpawnError("cannot create pipe for the solver");

    pid_t pid = fork();
    if (pid < 0) {
        close(fds[0]);
        close(fds[1]);
        throw SolverSpawnError("cannot fork for the solver");
    }
    if (pid == 0) {
        close(fds[0]);
        dup2(fds[1], STDOUT_FILENO);
        close(fds[1]);
        int devnull = open("/dev/null", O_RDONLY);
        if (devnull >= 0) {
            dup2(devnull, STDIN_FILENO);
            close(devnull);
        }
        execl(solverPath.c_str(), solverPath.c_str(), programFile.c_str(),
              static_cast<char*>(nullptr));
        _exit(127);
    }

    close(fds[1]);
    std::string output;
    char buffer[4096];
    auto deadline = std::chrono::steady_clock::now() + std::chrono::seconds(timeoutSeconds);
    bool timedOut = false;
    for (;;) {
        auto left = std::chrono::duration_cast<std::chrono::milliseconds>(
                        deadline - std::chrono::steady_clock::now())
                        .count();
        if (left <= 0) {
            timedOut = true;
            break;
        }
        struct pollfd pfd{fds[0], POLLIN, 0};
        int ready = poll(&pfd, 1, static_cast<int>(left));
        if (ready < 0) {
            if (errno == EINTR) continue;
            break;
        }
        if (ready == 0) {
            timedOut = true;
            break;
        }
        ssize_t got = read(fds[0], buffer, sizeof buffer);
        if (got <= 0) break;
        output.append(buffer, static_cast<std::size_t>(got));
    }
    close(fds[0]);

    if (timedOut) {
        kill(pid, SIGKILL);
        waitpid(pid, nullptr, 0);
        throw SolverSpawnError("solver '" + solverPath + "' timed out after " +
                               std::to_string(timeoutSeconds) + "s");
    }

    int status = 0;
    waitpid(pid, &status, 0);
    if (WIFEXITED(status) && WEXITSTATUS(status) == 127) {
        throw SolverSpawnError("solver '" + solverPath + "' could not be executed");
    }
    // A nonzero exit alone is not an error: several solvers encode
    // satisfiability in the exit status.
    return output;
}

std::set<GroundAtom> parseModelLine(const std::string& output) {
    std::istringstream in(output);
    std::string line;
    std::string modelLine;
    int nonEmpty = 0;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        ++nonEmpty;
        modelLine = line;
    }
    if (nonEmpty > 1) {
        throw SolverOutputParseError("expected one whitespace-separated atom line, got " +
                                     std::to_string(nonEmpty) + " lines of solver output");
    }
    std::set<GroundAtom> atoms;
    std::istringstream tokens(modelLine);
    std::string token;
    while (tokens >> token) {
        try {
            atoms.insert(parseGroundAtom(token));
        } catch (const Error& e) {
            throw SolverOutputParseError("cannot parse solver atom '" + token +
                                         "': " + e.what());
        }
    }
    return atoms;
}

}  // namespace

OracleReport runOracle(const Program& program, const OracleOptions& options) {
    Program prepared = program;
    if (options.instrumented) {
        prepared = instrumentProgram(program, options.instrument).extended;
    }

    AnswerSet ours = evaluate(expandIntervals(resolveConsts(prepared)));
    std::set<GroundAtom> ourShown = filterShown(ours, prepared);

    TempFile file(programToSource(prepared));
    std::string output = runSolver(options.solverPath, file.path, options.timeoutSeconds);
    std::set<GroundAtom> theirs = parseModelLine(output);

    OracleReport report;
    for (const GroundAtom& atom : theirs) {
        if (!ourShown.contains(atom)) report.missingInOurs.insert(atom);
    }
    for (const GroundAtom& atom : ourShown) {
        if (!theirs.contains(atom)) report.extraInOurs.insert(atom);
    }
    report.match = report.missingInOurs.empty() && report.extraInOurs.empty();
    return report;
}

}  // namespace xasp
