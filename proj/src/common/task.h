/* Copyright 2026 The Templum Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#ifndef TEMPLUM_COMMON_TASK_H_
#define TEMPLUM_COMMON_TASK_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "common/ids.h"

namespace templum {

enum class TaskKind : std::uint8_t {
  kCompute = 0,
  kSend = 1,
  kReceive = 2,
  kCommit = 3,
};

const char* TaskKindName(TaskKind kind);

// One schedulable unit. Send tasks read exactly one object and write none;
// receive tasks write exactly one object and read none. reads and writes may
// intersect (in-place mutation).
struct Task {
  TaskId id = kInvalidTaskId;
  TaskKind kind = TaskKind::kCompute;
  std::string stage;
  std::vector<ObjectId> reads;
  std::vector<ObjectId> writes;
  std::vector<TaskId> before;
  std::string params;
  std::optional<WorkerId> assigned_worker;

  // Transfer metadata, set on send/receive tasks only.
  std::optional<WorkerId> peer;
  std::optional<TaskId> pair_task;
  // Version the source copy must hold when a send runs. A mismatch means a
  // placement assumption was violated and is surfaced as a fault.
  std::optional<std::uint64_t> expected_version;

  bool Reads(ObjectId o) const;
  bool Writes(ObjectId o) const;
  bool DependsOn(TaskId t) const;
  void AddDep(TaskId t);

  // Structural + metadata checks for the per-kind invariants above.
  bool WellFormed(std::string* why = nullptr) const;
};

}  // namespace templum

#endif  // TEMPLUM_COMMON_TASK_H_
