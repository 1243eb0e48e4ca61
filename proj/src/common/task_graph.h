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

#ifndef TEMPLUM_COMMON_TASK_GRAPH_H_
#define TEMPLUM_COMMON_TASK_GRAPH_H_

#include <cstddef>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "common/ids.h"
#include "common/task.h"

namespace templum {

using TaskIdSet = std::unordered_set<TaskId>;

// Ordered collection of tasks plus an id index. Edges into tasks that are not
// in the graph (prior-block dependencies) are tracked as external: callers
// list them as pre-satisfied when computing readiness.
class TaskGraph {
 public:
  TaskGraph() = default;

  Task& Add(Task task);
  bool Contains(TaskId id) const { return index_.count(id) != 0; }
  const Task& Get(TaskId id) const { return tasks_[index_.at(id)]; }
  Task& GetMutable(TaskId id) { return tasks_[index_.at(id)]; }
  std::size_t size() const { return tasks_.size(); }
  bool empty() const { return tasks_.empty(); }

  const std::vector<Task>& tasks() const { return tasks_; }
  std::vector<Task>& tasks_mutable() { return tasks_; }

  // Dependencies referenced by tasks in the graph but not present in it.
  std::vector<TaskId> ExternalDeps() const;

 private:
  std::vector<Task> tasks_;
  std::unordered_map<TaskId, std::size_t> index_;
};

struct DagCheck {
  bool ok = true;
  // One witness cycle, in edge order, when ok is false.
  std::vector<TaskId> cycle;
};

// Cycle check over `before` edges restricted to tasks in the graph.
DagCheck ValidateDag(const TaskGraph& graph);

// Tasks not yet completed whose dependencies are all completed; receive
// tasks additionally require their payload to have arrived. Dependencies on
// tasks outside the graph must be listed in `completed` by the caller to
// count as satisfied. Pure function.
std::vector<TaskId> ReadyTasks(const TaskGraph& graph, const TaskIdSet& completed,
                               const TaskIdSet& arrived);

struct TransferPair {
  TaskId send = kInvalidTaskId;
  TaskId recv = kInvalidTaskId;
};

// Inserts a send task on the producer's worker and a receive task on the
// consumer's worker realizing a cross-worker read of `object`, and threads
// the consumer behind the receive. Rejects same-worker pairs.
// Returns the ids of the new tasks.
bool InsertTransferPair(TaskGraph& graph, TaskId producer, TaskId consumer,
                        ObjectId object, CopyIdAllocator& ids, TransferPair* out,
                        std::string* error = nullptr);

}  // namespace templum

#endif  // TEMPLUM_COMMON_TASK_GRAPH_H_
