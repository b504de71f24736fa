#include "indshape/prover/tptp_bridge.hpp"

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cctype>
#include <chrono>
#include <cstdlib>
#include <fstream>

#include "indshape/fol/print.hpp"

namespace indshape::prover {

namespace {

fol::FormulaPtr closed(const fol::FormulaPtr& f) {
  fol::FormulaPtr out = f;
  auto frees = fol::free_vars(f);
  for (auto it = frees.rbegin(); it != frees.rend(); ++it) out = fol::forall(*it, out);
  return out;
}

}  // namespace

std::string tptp_problem(const std::vector<fol::FormulaPtr>& axioms,
                         const fol::FormulaPtr& goal) {
  std::string out;
  for (std::size_t i = 0; i < axioms.size(); ++i) {
    out += fol::print_tptp("ax" + std::to_string(i + 1), "axiom", closed(axioms[i]));
    out += "\n";
  }
  out += fol::print_tptp("goal", "conjecture", closed(goal));
  out += "\n";
  return out;
}

std::optional<std::string> parse_szs_status(const std::string& output) {
  const std::string tag = "SZS status";
  std::size_t pos = output.find(tag);
  if (pos == std::string::npos) return std::nullopt;
  pos += tag.size();
  while (pos < output.size() && output[pos] == ' ') ++pos;
  std::size_t end = pos;
  while (end < output.size() && std::isalnum(static_cast<unsigned char>(output[end]))) ++end;
  if (end == pos) return std::nullopt;
  return output.substr(pos, end - pos);
}

namespace {

struct TempProblem {
  std::string dir, file;
  bool ok = false;

  explicit TempProblem(const std::string& content) {
    char tmpl[] = "/tmp/indshape.XXXXXX";
    char* d = mkdtemp(tmpl);
    if (!d) return;
    dir = d;
    file = dir + "/problem.p";
    std::ofstream out(file);
    out << content;
    ok = out.good();
  }

  ~TempProblem() {
    if (!file.empty()) ::unlink(file.c_str());
    if (!dir.empty()) ::rmdir(dir.c_str());
  }
};

std::string instantiate_command(const std::string& tmpl, const std::string& path) {
  const std::string placeholder = "{file}";
  std::string cmd = tmpl;
  bool found = false;
  std::size_t pos = 0;
  while ((pos = cmd.find(placeholder, pos)) != std::string::npos) {
    cmd.replace(pos, placeholder.size(), path);
    pos += path.size();
    found = true;
  }
  if (!found) cmd += " " + path;
  return cmd;
}

Verdict map_status(const std::string& status) {
  if (status == "Theorem" || status == "Unsatisfiable") {
    Verdict v = Verdict::proved({"SZS status " + status});
    v.detail = "SZS status " + status;
    return v;
  }
  if (status == "CounterSatisfiable" || status == "Satisfiable")
    return Verdict::refuted(false, "SZS status " + status);
  return Verdict::unknown("external-error: SZS status " + status);
}

}  // namespace

Verdict run_external(const std::string& command_template,
                     const std::vector<fol::FormulaPtr>& axioms, const fol::FormulaPtr& goal,
                     double timeout_seconds) {
  if (command_template.empty()) return Verdict::unknown("external-error: empty command");

  TempProblem temp(tptp_problem(axioms, goal));
  if (!temp.ok) return Verdict::unknown("external-error: cannot write problem file");
  std::string cmd = instantiate_command(command_template, temp.file);

  int fds[2];
  if (pipe(fds) != 0) return Verdict::unknown("external-error: pipe failed");

  pid_t pid = fork();
  if (pid < 0) {
    close(fds[0]);
    close(fds[1]);
    return Verdict::unknown("external-error: fork failed");
  }
  if (pid == 0) {
    setpgid(0, 0);
    dup2(fds[1], STDOUT_FILENO);
    dup2(fds[1], STDERR_FILENO);
    close(fds[0]);
    close(fds[1]);
    execl("/bin/sh", "sh", "-c", cmd.c_str(), static_cast<char*>(nullptr));
    _exit(127);
  }

  close(fds[1]);
  const auto deadline = std::chrono::steady_clock::now() +
                        std::chrono::microseconds(static_cast<long>(timeout_seconds * 1e6));
  std::string output;
  bool timed_out = false;
  char buf[4096];
  while (true) {
    auto left = std::chrono::duration_cast<std::chrono::milliseconds>(
                    deadline - std::chrono::steady_clock::now())
                    .count();
    if (left <= 0) {
      timed_out = true;
      break;
    }
    struct pollfd pfd {fds[0], POLLIN, 0};
    int pr = poll(&pfd, 1, static_cast<int>(left > 200 ? 200 : left));
    if (pr < 0) break;
    if (pr == 0) continue;
    ssize_t n = read(fds[0], buf, sizeof buf);
    if (n <= 0) break;  // tool closed its end
    if (output.size() < (1u << 20)) output.append(buf, static_cast<std::size_t>(n));
  }
  close(fds[0]);

  if (timed_out) kill(-pid, SIGKILL);
  int status = 0;
  waitpid(pid, &status, 0);

  if (timed_out) return Verdict::unknown("timeout");
  if (WIFEXITED(status) && WEXITSTATUS(status) == 127)
    return Verdict::unknown("external-error: command not found");

  auto szs = parse_szs_status(output);
  if (!szs) return Verdict::unknown("external-error: no SZS status in output");
  return map_status(*szs);
}

}  // namespace indshape::prover
