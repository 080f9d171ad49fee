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

#ifndef LISTRANK_EXTERNAL_JUDGE_HPP_
#define LISTRANK_EXTERNAL_JUDGE_HPP_

// Judge backed by a child process speaking JSON lines on stdin/stdout.
//
// request:  {"type":"rank","iteration":int,"attempt":int,"rubric":str|null,
//            "prior_ordering":[ids]|null,
//            "candidates":[{"id","label","dossier"}]}
// response: {"ranking":[ids],"meta":str|null}
//
// One object per newline-terminated UTF-8 line. Unknown response fields are
// ignored. attempt starts at 1 and grows on every retry of the same request.

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "listrank/judges.hpp"

namespace listrank {

std::string encode_request(const JudgeRequest& request, int attempt);
// Throws ParseError on anything but a JSON object with a "ranking" array of
// strings.
JudgeResponse decode_response(std::string_view line);

class ChildProcess;

class ExternalProcessJudge : public Judge {
 public:
  // The child is started lazily on the first request and kept alive between
  // requests. It is restarted after a timeout so a late reply cannot be read
  // as the answer to the next attempt.
  ExternalProcessJudge(std::vector<std::string> command, int retries,
                       int timeout_ms);
  ~ExternalProcessJudge() override;

  ExternalProcessJudge(const ExternalProcessJudge&) = delete;
  ExternalProcessJudge& operator=(const ExternalProcessJudge&) = delete;

  // Retries malformed, non-permutation or late replies up to `retries` times,
  // then throws JudgeFailure. Child exit fails immediately.
  JudgeResponse rank(const JudgeRequest& request) override;
  std::string tag() const override;

  // Total requests written to the child, retries included.
  int requests_sent() const { return requests_sent_; }

 private:
  void ensure_started();

  std::vector<std::string> command_;
  int retries_;
  int timeout_ms_;
  int requests_sent_ = 0;
  std::unique_ptr<ChildProcess> child_;
};

}  // namespace listrank

#endif  // LISTRANK_EXTERNAL_JUDGE_HPP_
