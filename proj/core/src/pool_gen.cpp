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

#include "listrank/pool_gen.hpp"

#include <algorithm>
#include <charconv>
#include <random>
#include <string>

#include <fmt/format.h>

#include "listrank/errors.hpp"
#include "listrank/random.hpp"

namespace listrank {
namespace {

double to_real(std::string_view text, std::string_view spec) {
  double value = 0.0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw ConfigError("bad number '" + std::string(text) +
                      "' in utility generator " + std::string(spec));
  }
  return value;
}

std::vector<std::string_view> split_commas(std::string_view s) {
  std::vector<std::string_view> out;
  while (!s.empty()) {
    const auto comma = s.find(',');
    out.push_back(s.substr(0, comma));
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace

UtilityGenerator parse_utility_generator(std::string_view spec) {
  const auto colon = spec.find(':');
  const std::string_view kind = spec.substr(0, colon);
  const std::string_view params =
      colon == std::string_view::npos ? std::string_view() : spec.substr(colon + 1);

  UtilityGenerator gen;
  gen.sd = kind == "tiered" ? 0.5 : 1.0;
  if (kind == "normal") {
    gen.kind = UtilityGenerator::Kind::kNormal;
  } else if (kind == "uniform") {
    gen.kind = UtilityGenerator::Kind::kUniform;
  } else if (kind == "tiered") {
    gen.kind = UtilityGenerator::Kind::kTiered;
  } else {
    throw ConfigError("unknown utility generator " + std::string(spec));
  }

  std::vector<double> positional;
  for (std::string_view item : split_commas(params)) {
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) {
      positional.push_back(to_real(item, spec));
      continue;
    }
    const std::string_view key = item.substr(0, eq);
    const double value = to_real(item.substr(eq + 1), spec);
    if (key == "sd") {
      gen.sd = value;
    } else if (key == "lo") {
      gen.lo = value;
    } else if (key == "hi") {
      gen.hi = value;
    } else if (key == "tiers") {
      gen.tiers = static_cast<int>(value);
    } else if (key == "gap") {
      gen.gap = value;
    } else {
      throw ConfigError("unknown parameter " + std::string(key) +
                        " in utility generator " + std::string(spec));
    }
  }
  if (gen.kind == UtilityGenerator::Kind::kUniform && positional.size() == 2) {
    gen.lo = positional[0];
    gen.hi = positional[1];
  } else if (!positional.empty()) {
    throw ConfigError("unexpected positional values in " + std::string(spec));
  }
  if (!(gen.sd >= 0.0)) throw ConfigError("sd must be >= 0");
  if (gen.kind == UtilityGenerator::Kind::kUniform && !(gen.lo < gen.hi)) {
    throw ConfigError("uniform generator needs lo < hi");
  }
  if (gen.kind == UtilityGenerator::Kind::kTiered && gen.tiers < 1) {
    throw ConfigError("tiered generator needs tiers >= 1");
  }
  return gen;
}

std::vector<double> generate_utilities(const UtilityGenerator& gen, int n,
                                       std::uint64_t seed) {
  Rng rng(seed);
  std::vector<double> u(static_cast<std::size_t>(n));
  switch (gen.kind) {
    case UtilityGenerator::Kind::kNormal: {
      std::normal_distribution<double> d(0.0, gen.sd);
      for (double& v : u) v = d(rng);
      break;
    }
    case UtilityGenerator::Kind::kUniform: {
      std::uniform_real_distribution<double> d(gen.lo, gen.hi);
      for (double& v : u) v = d(rng);
      break;
    }
    case UtilityGenerator::Kind::kTiered: {
      std::normal_distribution<double> jitter(0.0, 1.0);
      for (int i = 0; i < n; ++i) {
        const int tier = static_cast<int>(static_cast<long long>(i) * gen.tiers / n);
        u[i] = gen.gap * (gen.tiers - 1 - tier) + gen.sd * jitter(rng);
      }
      std::shuffle(u.begin(), u.end(), rng);
      break;
    }
  }
  return u;
}

CandidatePool synthesize_pool(const UtilityGenerator& gen, int n,
                              std::uint64_t seed) {
  const std::vector<double> u = generate_utilities(gen, n, seed);
  const int width =
      std::max(3, static_cast<int>(std::to_string(std::max(n - 1, 0)).size()));
  std::vector<Candidate> candidates;
  candidates.reserve(u.size());
  for (int i = 0; i < n; ++i) {
    candidates.push_back({fmt::format("c{:0{}d}", i, width),
                          fmt::format("Candidate {}", i), std::nullopt, u[i]});
  }
  return CandidatePool(std::move(candidates));
}

}  // namespace listrank
