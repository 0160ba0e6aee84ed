// Copyright 2026 The tqi Authors
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

#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace tqi::cli {

struct ValidationOptions {
  /// Test fixture: flips the sign of the oscillating term of A(t) so the
  /// propagator-oracle group must fail.
  bool mutate_propagator_sign = false;
};

struct GroupResult {
  std::string name;
  bool passed = false;
  double seconds = 0.0;
  std::string detail;
};

/// Fast subset of the invariant suite, one entry per group.
std::vector<GroupResult> run_validation(const ValidationOptions& opts = {});

nlohmann::json validation_report(const std::vector<GroupResult>& groups);

}  // namespace tqi::cli
