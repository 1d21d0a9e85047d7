// Copyright 2026 The sidefuzz Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sidefuzz/bytes.h"

#include <cstdio>

namespace sidefuzz {

std::string HexList(ByteView bytes) {
  std::string out = "[";
  char buf[4];
  for (size_t i = 0; i < bytes.size(); ++i) {
    if (i) out += ", ";
    std::snprintf(buf, sizeof(buf), "%02x", bytes[i]);
    out += buf;
  }
  out += "]";
  return out;
}

std::string HexString(ByteView bytes) {
  std::string out;
  out.reserve(bytes.size() * 2);
  char buf[4];
  for (uint8_t b : bytes) {
    std::snprintf(buf, sizeof(buf), "%02x", b);
    out += buf;
  }
  return out;
}

}  // namespace sidefuzz
