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

#ifndef TEMPLUM_COMMON_IDS_H_
#define TEMPLUM_COMMON_IDS_H_

#include <cstdint>
#include <functional>
#include <string>

namespace templum {

using TaskId = std::uint64_t;
using ObjectId = std::uint64_t;
using WorkerId = std::uint32_t;
using BlockId = std::uint64_t;

inline constexpr TaskId kInvalidTaskId = 0;
inline constexpr WorkerId kInvalidWorkerId = 0xffffffffu;

// Copy-task ids live in a controller-owned high range so driver-assigned
// compute ids can never collide with them. Patch deliveries additionally set
// bit 62 so a worker can tell an unsolicited patch transfer from an
// in-template receive.
inline constexpr TaskId kCopyIdBit = 1ull << 63;
inline constexpr TaskId kPatchIdBit = 1ull << 62;

inline bool IsCopyTaskId(TaskId id) { return (id & kCopyIdBit) != 0; }
inline bool IsPatchTaskId(TaskId id) {
  return (id & (kCopyIdBit | kPatchIdBit)) == (kCopyIdBit | kPatchIdBit);
}

// Monotonic allocator for the controller's copy-task id space.
class CopyIdAllocator {
 public:
  TaskId Next() { return kCopyIdBit | next_++; }
  TaskId NextPatch() { return kCopyIdBit | kPatchIdBit | next_++; }

 private:
  std::uint64_t next_ = 1;
};

// Identifies one cached worker template: the basic block, the hash of its
// precondition signature, and the assignment epoch it was generated for.
// Epochs are canonical per active-worker set, so returning to a previous
// worker set reuses the old epoch and hits the cache.
struct TemplateKey {
  BlockId block = 0;
  std::uint64_t signature = 0;
  std::uint64_t epoch = 0;

  bool operator==(const TemplateKey&) const = default;
};

struct TemplateKeyHash {
  std::size_t operator()(const TemplateKey& k) const {
    std::uint64_t h = k.block * 0x9e3779b97f4a7c15ull;
    h ^= k.signature + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h ^= k.epoch + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

std::string TemplateKeyToString(const TemplateKey& key);

}  // namespace templum

#endif  // TEMPLUM_COMMON_IDS_H_
