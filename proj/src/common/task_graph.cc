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

#include "common/task_graph.h"

#include <algorithm>
#include <cassert>

namespace templum {

Task& TaskGraph::Add(Task task) {
  assert(index_.count(task.id) == 0 && "duplicate task id");
  index_[task.id] = tasks_.size();
  tasks_.push_back(std::move(task));
  return tasks_.back();
}

std::vector<TaskId> TaskGraph::ExternalDeps() const {
  std::vector<TaskId> out;
  TaskIdSet seen;
  for (const Task& t : tasks_) {
    for (TaskId dep : t.before) {
      if (!Contains(dep) && seen.insert(dep).second) out.push_back(dep);
    }
  }
  return out;
}

namespace {

enum class Mark : unsigned char { kWhite, kGray, kBlack };

bool CycleDfs(const TaskGraph& graph, TaskId at, std::vector<Mark>& marks,
              std::vector<TaskId>& stack, std::vector<TaskId>* cycle) {
  const std::size_t pos = &graph.Get(at) - graph.tasks().data();
  marks[pos] = Mark::kGray;
  stack.push_back(at);
  for (TaskId dep : graph.Get(at).before) {
    if (!graph.Contains(dep)) continue;  // external: cannot close a cycle
    const std::size_t dpos = &graph.Get(dep) - graph.tasks().data();
    if (marks[dpos] == Mark::kGray) {
      // Unwind the stack back to `dep` to report one witness cycle.
      auto it = std::find(stack.begin(), stack.end(), dep);
      cycle->assign(it, stack.end());
      return true;
    }
    if (marks[dpos] == Mark::kWhite &&
        CycleDfs(graph, dep, marks, stack, cycle)) {
      return true;
    }
  }
  marks[pos] = Mark::kBlack;
  stack.pop_back();
  return false;
}

}  // namespace

DagCheck ValidateDag(const TaskGraph& graph) {
  DagCheck result;
  std::vector<Mark> marks(graph.size(), Mark::kWhite);
  std::vector<TaskId> stack;
  for (const Task& t : graph.tasks()) {
    const std::size_t pos = &t - graph.tasks().data();
    if (marks[pos] == Mark::kWhite &&
        CycleDfs(graph, t.id, marks, stack, &result.cycle)) {
      result.ok = false;
      return result;
    }
  }
  return result;
}

std::vector<TaskId> ReadyTasks(const TaskGraph& graph, const TaskIdSet& completed,
                               const TaskIdSet& arrived) {
  std::vector<TaskId> ready;
  for (const Task& t : graph.tasks()) {
    if (completed.count(t.id) != 0) continue;
    if (t.kind == TaskKind::kReceive && arrived.count(t.id) == 0) continue;
    bool deps_ok = true;
    for (TaskId dep : t.before) {
      // External (prior-block) dependencies count only when the caller lists
      // them as completed.
      if (completed.count(dep) == 0) {
        deps_ok = false;
        break;
      }
    }
    if (deps_ok) ready.push_back(t.id);
  }
  return ready;
}

bool InsertTransferPair(TaskGraph& graph, TaskId producer, TaskId consumer,
                        ObjectId object, CopyIdAllocator& ids, TransferPair* out,
                        std::string* error) {
  const Task& prod = graph.Get(producer);
  const Task& cons = graph.Get(consumer);
  if (!prod.assigned_worker || !cons.assigned_worker) {
    if (error) *error = "transfer endpoints must be assigned";
    return false;
  }
  if (*prod.assigned_worker == *cons.assigned_worker) {
    if (error) *error = "producer and consumer are on the same worker";
    return false;
  }
  if (!prod.Writes(object)) {
    if (error) *error = "producer does not write the object";
    return false;
  }
  if (!cons.Reads(object)) {
    if (error) *error = "consumer does not read the object";
    return false;
  }

  Task send;
  send.id = ids.Next();
  send.kind = TaskKind::kSend;
  send.reads = {object};
  send.before = {producer};
  send.assigned_worker = prod.assigned_worker;
  send.peer = cons.assigned_worker;

  Task recv;
  recv.id = ids.Next();
  recv.kind = TaskKind::kReceive;
  recv.writes = {object};
  recv.before = {send.id};
  recv.assigned_worker = cons.assigned_worker;
  recv.peer = prod.assigned_worker;
  recv.pair_task = send.id;

  send.pair_task = recv.id;

  if (out) *out = TransferPair{send.id, recv.id};
  const TaskId recv_id = recv.id;
  graph.Add(std::move(send));
  graph.Add(std::move(recv));
  graph.GetMutable(consumer).AddDep(recv_id);
  return true;
}

}  // namespace templum
