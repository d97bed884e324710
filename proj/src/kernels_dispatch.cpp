// Copyright 2026 The Holonomy Simulator Authors
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

#include <atomic>
#include <cstdlib>
#include <string>

#include "holo/errors.hpp"
#include "holo/kernels.hpp"

namespace holo::kernels {

#if defined(HOLO_HAVE_AVX2)
const KernelTable* avx2_table_impl();
#endif

namespace {

std::atomic<const KernelTable*> g_active{nullptr};

const KernelTable* table_for(Backend b) {
  switch (b) {
    case Backend::kScalar: return &scalar_table();
    case Backend::kAvx2: return available(Backend::kAvx2) ? avx2_table() : nullptr;
  }
  return nullptr;
}

const KernelTable* automatic() {
  if (const char* env = std::getenv("HOLO_KERNELS")) {
    const std::string s(env);
    if (s == "scalar") return &scalar_table();
    if (s == "avx2" && available(Backend::kAvx2)) return avx2_table();
  }
  if (available(Backend::kAvx2)) return avx2_table();
  return &scalar_table();
}

}  // namespace

const KernelTable* avx2_table() {
#if defined(HOLO_HAVE_AVX2)
  return avx2_table_impl();
#else
  return nullptr;
#endif
}

bool cpu_supports_avx2() {
#if defined(__x86_64__) || defined(__i386__)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

bool available(Backend b) {
  if (b == Backend::kScalar) return true;
  return avx2_table() != nullptr && cpu_supports_avx2();
}

const KernelTable& active() {
  const KernelTable* t = g_active.load(std::memory_order_acquire);
  if (t == nullptr) {
    const KernelTable* chosen = automatic();
    g_active.compare_exchange_strong(t, chosen, std::memory_order_acq_rel);
    t = g_active.load(std::memory_order_acquire);
  }
  return *t;
}

void select(Backend b) {
  const KernelTable* t = table_for(b);
  if (t == nullptr) {
    throw Error(ErrorKind::kInvalidArgument, std::string("kernel backend unavailable: ") + std::string(name(b)));
  }
  g_active.store(t, std::memory_order_release);
}

void select_auto() { g_active.store(automatic(), std::memory_order_release); }

std::string_view name(Backend b) {
  switch (b) {
    case Backend::kScalar: return "scalar";
    case Backend::kAvx2: return "avx2";
  }
  return "unknown";
}

Backend parse_backend(std::string_view s) {
  if (s == "scalar") return Backend::kScalar;
  if (s == "avx2") return Backend::kAvx2;
  throw Error(ErrorKind::kInvalidArgument, "unknown kernel backend '" + std::string(s) + "'");
}

}  // namespace holo::kernels
