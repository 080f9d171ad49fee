// Copyright 2026 The listrank Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "listrank/external_judge.hpp"

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <spawn.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <chrono>
#include <csignal>
#include <cstring>
#include <filesystem>

#include "listrank/errors.hpp"
#include "listrank/serialization.hpp"

extern char** environ;

namespace listrank {

namespace {

constexpr std::size_t kStderrKeep = 4096;

void close_fd(int& fd) {
  if (fd >= 0) ::close(fd);
  fd = -1;
}

}  // namespace

// A child process with piped stdin/stdout/stderr. stdout is read line by
// line; stderr is drained opportunistically and its tail kept for diagnostics.
class ChildProcess {
 public:
  enum class ReadStatus { kLine, kTimeout, kEof };

  explicit ChildProcess(const std::vector<std::string>& command) {
    int in_pipe[2], out_pipe[2], err_pipe[2];
    if (::pipe2(in_pipe, O_CLOEXEC) != 0 || ::pipe2(out_pipe, O_CLOEXEC) != 0 ||
        ::pipe2(err_pipe, O_CLOEXEC) != 0) {
      throw JudgeFailure("cannot create pipes for judge process",
                         std::strerror(errno));
    }
    posix_spawn_file_actions_t actions;
    posix_spawn_file_actions_init(&actions);
    posix_spawn_file_actions_adddup2(&actions, in_pipe[0], STDIN_FILENO);
    posix_spawn_file_actions_adddup2(&actions, out_pipe[1], STDOUT_FILENO);
    posix_spawn_file_actions_adddup2(&actions, err_pipe[1], STDERR_FILENO);

    std::vector<char*> argv;
    for (const auto& arg : command) argv.push_back(const_cast<char*>(arg.c_str()));
    argv.push_back(nullptr);

    const int rc =
        ::posix_spawnp(&pid_, argv[0], &actions, nullptr, argv.data(), environ);
    posix_spawn_file_actions_destroy(&actions);
    ::close(in_pipe[0]);
    ::close(out_pipe[1]);
    ::close(err_pipe[1]);
    in_fd_ = in_pipe[1];
    out_fd_ = out_pipe[0];
    err_fd_ = err_pipe[0];
    if (rc != 0) {
      pid_ = -1;
      close_fd(in_fd_);
      close_fd(out_fd_);
      close_fd(err_fd_);
      throw JudgeFailure("cannot launch judge command " + command.front(),
                         std::strerror(rc));
    }
    ::fcntl(err_fd_, F_SETFL, ::fcntl(err_fd_, F_GETFL) | O_NONBLOCK);
  }

  ~ChildProcess() {
    close_fd(in_fd_);
    close_fd(out_fd_);
    close_fd(err_fd_);
    if (pid_ > 0 && !exited_) {
      // Give a well-behaved child the chance to exit on EOF first.
      for (int i = 0; i < 20; ++i) {
        if (::waitpid(pid_, &status_, WNOHANG) == pid_) return;
        ::usleep(5000);
      }
      ::kill(pid_, SIGKILL);
      ::waitpid(pid_, &status_, 0);
    }
  }

  ChildProcess(const ChildProcess&) = delete;
  ChildProcess& operator=(const ChildProcess&) = delete;

  bool write_line(std::string_view line) {
    std::string data(line);
    data.push_back('\n');
    std::size_t off = 0;
    while (off < data.size()) {
      const ssize_t n = ::write(in_fd_, data.data() + off, data.size() - off);
      if (n < 0) {
        if (errno == EINTR) continue;
        return false;
      }
      off += static_cast<std::size_t>(n);
    }
    return true;
  }

  ReadStatus read_line(int timeout_ms, std::string* line) {
    using Clock = std::chrono::steady_clock;
    const auto deadline = Clock::now() + std::chrono::milliseconds(timeout_ms);
    while (true) {
      if (auto pos = out_buf_.find('\n'); pos != std::string::npos) {
        *line = out_buf_.substr(0, pos);
        out_buf_.erase(0, pos + 1);
        if (!line->empty() && line->back() == '\r') line->pop_back();
        return ReadStatus::kLine;
      }
      if (out_eof_) return ReadStatus::kEof;
      const auto remaining = std::chrono::duration_cast<std::chrono::milliseconds>(
          deadline - Clock::now());
      if (remaining.count() <= 0) return ReadStatus::kTimeout;

      pollfd fds[2] = {{out_fd_, POLLIN, 0}, {err_fd_, POLLIN, 0}};
      const int nfds = err_fd_ >= 0 ? 2 : 1;
      const int rc = ::poll(fds, nfds, static_cast<int>(remaining.count()));
      if (rc < 0) {
        if (errno == EINTR) continue;
        return ReadStatus::kEof;
      }
      if (nfds == 2 && fds[1].revents != 0) drain_stderr();
      if (fds[0].revents != 0) {
        char buf[4096];
        const ssize_t n = ::read(out_fd_, buf, sizeof(buf));
        if (n > 0) {
          out_buf_.append(buf, static_cast<std::size_t>(n));
        } else if (n == 0 || errno != EINTR) {
          out_eof_ = true;
        }
      }
    }
  }

  std::string diagnostics() {
    drain_stderr();
    std::string out = describe_exit();
    if (!err_buf_.empty()) out += (out.empty() ? "" : "; ") + ("stderr: " + err_buf_);
    return out;
  }

 private:
  void drain_stderr() {
    if (err_fd_ < 0) return;
    char buf[4096];
    while (true) {
      const ssize_t n = ::read(err_fd_, buf, sizeof(buf));
      if (n > 0) {
        err_buf_.append(buf, static_cast<std::size_t>(n));
        if (err_buf_.size() > kStderrKeep) {
          err_buf_.erase(0, err_buf_.size() - kStderrKeep);
        }
        continue;
      }
      if (n == 0) close_fd(err_fd_);
      return;
    }
  }

  std::string describe_exit() {
    if (pid_ <= 0) return {};
    if (!exited_) {
      // The child may still be closing down after EOF on stdout.
      for (int i = 0; i < 20 && !exited_; ++i) {
        if (::waitpid(pid_, &status_, WNOHANG) == pid_) {
          exited_ = true;
        } else {
          ::usleep(5000);
        }
      }
    }
    if (!exited_) return {};
    if (WIFEXITED(status_)) {
      return "exit status " + std::to_string(WEXITSTATUS(status_));
    }
    if (WIFSIGNALED(status_)) {
      return "killed by signal " + std::to_string(WTERMSIG(status_));
    }
    return {};
  }

  pid_t pid_ = -1;
  int in_fd_ = -1;
  int out_fd_ = -1;
  int err_fd_ = -1;
  int status_ = 0;
  bool exited_ = false;
  bool out_eof_ = false;
  std::string out_buf_;
  std::string err_buf_;
};

std::string encode_request(const JudgeRequest& request, int attempt) {
  Json j;
  j["type"] = "rank";
  j["iteration"] = request.iteration;
  j["attempt"] = attempt;
  j["rubric"] = request.rubric ? Json(*request.rubric) : Json(nullptr);
  j["prior_ordering"] =
      request.prior_ordering ? Json(*request.prior_ordering) : Json(nullptr);
  Json candidates = Json::array();
  for (const auto& c : request.candidates) {
    Json item;
    item["id"] = c.id;
    item["label"] = c.label;
    item["dossier"] = c.dossier ? Json(*c.dossier) : Json(nullptr);
    candidates.push_back(std::move(item));
  }
  j["candidates"] = std::move(candidates);
  return j.dump(-1, ' ', false, Json::error_handler_t::replace);
}

JudgeResponse decode_response(std::string_view line) {
  Json j;
  try {
    j = Json::parse(line);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("response is not JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("response is not a JSON object");
  auto ranking = j.find("ranking");
  if (ranking == j.end() || !ranking->is_array()) {
    throw ParseError("response lacks a \"ranking\" array");
  }
  JudgeResponse response;
  for (const auto& id : *ranking) {
    if (!id.is_string()) throw ParseError("ranking holds a non-string id");
    response.ranking.push_back(id.get<std::string>());
  }
  if (auto meta = j.find("meta"); meta != j.end() && !meta->is_null()) {
    if (!meta->is_string()) throw ParseError("meta must be a string or null");
    response.meta = meta->get<std::string>();
  }
  return response;
}

ExternalProcessJudge::ExternalProcessJudge(std::vector<std::string> command,
                                           int retries, int timeout_ms)
    : command_(std::move(command)), retries_(retries), timeout_ms_(timeout_ms) {
  if (command_.empty()) throw ConfigError("external judge needs a command");
  if (retries_ < 0) throw ConfigError("retries must be >= 0");
  if (timeout_ms_ < 1) throw ConfigError("timeout_ms must be positive");
  // A dead child must surface as a failed write, not kill the process.
  std::signal(SIGPIPE, SIG_IGN);
}

ExternalProcessJudge::~ExternalProcessJudge() = default;

void ExternalProcessJudge::ensure_started() {
  if (!child_) child_ = std::make_unique<ChildProcess>(command_);
}

JudgeResponse ExternalProcessJudge::rank(const JudgeRequest& request) {
  validate_request(request);
  std::string log;
  const int attempts = retries_ + 1;
  for (int attempt = 1; attempt <= attempts; ++attempt) {
    ensure_started();
    ++requests_sent_;
    if (!child_->write_line(encode_request(request, attempt))) {
      const std::string diag = child_->diagnostics();
      child_.reset();
      throw JudgeFailure("judge process closed its input", log + diag);
    }
    std::string line;
    switch (child_->read_line(timeout_ms_, &line)) {
      case ChildProcess::ReadStatus::kEof: {
        const std::string diag = child_->diagnostics();
        child_.reset();
        throw JudgeFailure("judge process exited", log + diag);
      }
      case ChildProcess::ReadStatus::kTimeout:
        log += "attempt " + std::to_string(attempt) + ": no reply within " +
               std::to_string(timeout_ms_) + " ms; ";
        child_.reset();
        continue;
      case ChildProcess::ReadStatus::kLine:
        break;
    }
    try {
      JudgeResponse response = decode_response(line);
      if (auto violation = response_violation(request, response)) {
        log += "attempt " + std::to_string(attempt) + ": " + *violation + "; ";
        continue;
      }
      return response;
    } catch (const ParseError& e) {
      log += "attempt " + std::to_string(attempt) + ": " + e.what() + "; ";
    }
  }
  std::string diag = log;
  if (child_) diag += child_->diagnostics();
  throw JudgeFailure("judge gave no valid ranking after " +
                         std::to_string(attempts) + " attempts",
                     diag);
}

std::string ExternalProcessJudge::tag() const {
  std::string out = "external:";
  for (std::size_t i = 0; i < command_.size(); ++i) {
    if (i) out += ' ';
    out += std::filesystem::path(command_[i]).filename().string();
  }
  return out;
}

}  // namespace listrank
