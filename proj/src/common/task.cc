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

#include "common/task.h"

#include <algorithm>

namespace templum {

const char* TaskKindName(TaskKind kind) {
  switch (kind) {
    case TaskKind::kCompute:
      return "compute";
    case TaskKind::kSend:
      return "send";
    case TaskKind::kReceive:
      return "receive";
    case TaskKind::kCommit:
      return "commit";
  }
  return "unknown";
}

bool Task::Reads(ObjectId o) const {
  return std::find(reads.begin(), reads.end(), o) != reads.end();
}

bool Task::Writes(ObjectId o) const {
  return std::find(writes.begin(), writes.end(), o) != writes.end();
}

bool Task::DependsOn(TaskId t) const {
  return std::find(before.begin(), before.end(), t) != before.end();
}

void Task::AddDep(TaskId t) {
  if (!DependsOn(t)) before.push_back(t);
}

bool Task::WellFormed(std::string* why) const {
  auto fail = [&](const char* msg) {
    if (why != nullptr) *why = msg;
    return false;
  };
  if (id == kInvalidTaskId) return fail("task id unset");
  switch (kind) {
    case TaskKind::kSend:
      if (reads.size() != 1 || !writes.empty())
        return fail("send must read exactly one object and write none");
      if (!peer.has_value() || !pair_task.has_value())
        return fail("send missing peer / paired receive");
      break;
    case TaskKind::kReceive:
      if (writes.size() != 1 || !reads.empty())
        return fail("receive must write exactly one object and read none");
      break;
    default:
      break;
  }
  return true;
}

}  // namespace templum
