#include "ddrt/relative_termination.hpp"

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cctype>
#include <cerrno>
#include <cstdlib>
#include <cstring>

#include "ddrt/tpdb.hpp"

namespace ddrt {

const char* to_string(ExternalAnswer a) {
  switch (a) {
    case ExternalAnswer::Yes:
      return "YES";
    case ExternalAnswer::No:
      return "NO";
    case ExternalAnswer::Unknown:
      return "MAYBE";
  }
  return "?";
}

namespace {

Trs without(const Trs& trs, const std::vector<Rule>& removed) {
  std::vector<Rule> kept;
  for (const Rule& r : trs)
    if (std::none_of(removed.begin(), removed.end(), [&](const Rule& x) { return x.index == r.index; }))
      kept.push_back(r);
  return Trs(std::move(kept));
}

/// Rule removal until the strict side is empty or no interpretation helps.
/// Returns the remaining problem.
RelativeProblem removal_loop(RelativeProblem current, const RelativeTerminationConfig& config,
                             std::vector<RemovalStep>& steps, std::vector<std::string>& diagnostics) {
  while (!current.strict.empty()) {
    bool progress = false;
    for (std::size_t dim = 1; dim <= config.dim_max && !progress; ++dim) {
      SearchOutcome outcome = search_interpretation(current, dim, config.coef_max, config.search);
      if (outcome.status == SearchStatus::BudgetExhausted)
        diagnostics.push_back("interpretation search at dimension " + std::to_string(dim) + " exhausted its budget");
      if (outcome.status != SearchStatus::Found) continue;
      RelativeProblem next{without(current.strict, outcome.found->strict_removed),
                           without(current.weak, outcome.found->weak_removed)};
      steps.push_back({std::move(current), std::move(*outcome.found)});
      current = std::move(next);
      progress = true;
    }
    if (!progress) break;
  }
  return current;
}

}  // namespace

RelativeTerminationProof prove_termination(const Trs& trs, const RelativeTerminationConfig& config) {
  RelativeTerminationProof proof;
  RelativeProblem rest = removal_loop({trs, Trs()}, config, proof.steps, proof.diagnostics);
  proof.proved = rest.strict.empty();
  if (!proof.proved)
    proof.diagnostics.push_back(std::to_string(rest.strict.size()) + " rules could not be oriented strictly");
  return proof;
}

RelativeTerminationProof prove_relative_termination(const RelativeProblem& problem,
                                                    const RelativeTerminationConfig& config) {
  RelativeTerminationProof proof;
  RelativeProblem rest = removal_loop(problem, config, proof.steps, proof.diagnostics);
  if (rest.strict.empty()) {
    proof.proved = true;
    return proof;
  }
  proof.diagnostics.push_back("rule removal stuck with " + std::to_string(rest.strict.size()) +
                              " strict and " + std::to_string(rest.weak.size()) + " weak rules");

  // Termination of the union of the remaining rules suffices.  With no weak
  // rules left that is what the loop above already tried.
  Trs all = merge_distinct({&rest.strict, &rest.weak});
  if (!rest.weak.empty()) {
    RelativeTerminationProof inner = prove_termination(all, config);
    proof.termination_steps = std::move(inner.steps);
    for (std::string& d : inner.diagnostics) proof.diagnostics.push_back("termination: " + d);
    if (inner.proved) {
      proof.proved = true;
      return proof;
    }
  }
  if (!config.external_prover.empty()) {
    auto timeout = config.external_timeout;
    if (auto left = config.search.deadline.remaining()) timeout = std::min(timeout, *left);
    proof.external = external_termination_check(all, config.external_prover, timeout);
    proof.diagnostics.push_back(std::string("external prover answered ") + to_string(*proof.external));
    proof.proved = *proof.external == ExternalAnswer::Yes;
  }
  return proof;
}

ExternalAnswer external_termination_check(const Trs& trs, const std::string& command,
                                          std::chrono::milliseconds timeout) {
  if (trs.empty()) return ExternalAnswer::Yes;
  if (command.empty()) return ExternalAnswer::Unknown;

  const char* tmpdir = std::getenv("TMPDIR");
  std::string path = std::string(tmpdir && *tmpdir ? tmpdir : "/tmp") + "/ddrt-XXXXXX.trs";
  int fd = mkstemps(path.data(), 4);
  if (fd < 0) return ExternalAnswer::Unknown;
  const std::string text = format_trs(trs);
  bool written = ::write(fd, text.data(), text.size()) == static_cast<ssize_t>(text.size());
  ::close(fd);
  struct Cleanup {
    std::string path;
    ~Cleanup() { ::unlink(path.c_str()); }
  } cleanup{path};
  if (!written) return ExternalAnswer::Unknown;

  int out[2];
  if (::pipe(out) != 0) return ExternalAnswer::Unknown;
  const std::string shell_command = command + " '" + path + "'";
  pid_t pid = ::fork();
  if (pid < 0) {
    ::close(out[0]);
    ::close(out[1]);
    return ExternalAnswer::Unknown;
  }
  if (pid == 0) {
    ::setpgid(0, 0);
    ::dup2(out[1], STDOUT_FILENO);
    int devnull = ::open("/dev/null", O_RDWR);
    if (devnull >= 0) {
      ::dup2(devnull, STDIN_FILENO);
      ::dup2(devnull, STDERR_FILENO);
    }
    ::close(out[0]);
    ::close(out[1]);
    ::execl("/bin/sh", "sh", "-c", shell_command.c_str(), static_cast<char*>(nullptr));
    ::_exit(127);
  }
  ::setpgid(pid, pid);
  ::close(out[1]);

  const auto end = std::chrono::steady_clock::now() + timeout;
  std::string output;
  bool timed_out = false;
  while (output.find('\n') == std::string::npos) {
    auto left = std::chrono::duration_cast<std::chrono::milliseconds>(end - std::chrono::steady_clock::now());
    if (left.count() <= 0) {
      timed_out = true;
      break;
    }
    pollfd p{out[0], POLLIN, 0};
    int ready = ::poll(&p, 1, static_cast<int>(left.count()));
    if (ready < 0 && errno == EINTR) continue;
    if (ready <= 0) {
      timed_out = ready == 0;
      if (ready < 0) break;
      continue;
    }
    char buf[512];
    ssize_t n = ::read(out[0], buf, sizeof buf);
    if (n <= 0) break;
    output.append(buf, static_cast<std::size_t>(n));
  }
  ::close(out[0]);
  ::kill(-pid, SIGKILL);
  int status = 0;
  while (::waitpid(pid, &status, 0) < 0 && errno == EINTR) {
  }
  if (timed_out && output.find('\n') == std::string::npos) return ExternalAnswer::Unknown;

  std::string first = output.substr(0, output.find('\n'));
  while (!first.empty() && std::isspace(static_cast<unsigned char>(first.back()))) first.pop_back();
  if (first == "YES") return ExternalAnswer::Yes;
  if (first == "NO") return ExternalAnswer::No;
  return ExternalAnswer::Unknown;
}

}  // namespace ddrt
