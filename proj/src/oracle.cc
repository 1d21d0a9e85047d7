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

#include "sidefuzz/oracle.h"

#include <algorithm>
#include <sstream>
#include <thread>
#include <vector>

#include "json.hpp"

namespace sidefuzz {
namespace {

struct Best {
  uint64_t delta = 0;
  uint64_t index = 0;
  bool any = false;
  uint64_t evaluated = 0;

  void Offer(uint64_t d, uint64_t idx) {
    if (!any || d > delta || (d == delta && idx < index)) {
      delta = d;
      index = idx;
      any = true;
    }
  }
};

// Tuple `index` in base |alphabet|, most significant digit first, laid out
// as pub ++ sec1 ++ sec2.
void DecodeIndex(uint64_t index, ByteView alphabet, Bytes& out) {
  const uint64_t base = alphabet.size();
  for (size_t k = out.size(); k-- > 0;) {
    out[k] = alphabet[index % base];
    index /= base;
  }
}

std::string AlphabetLabel(ByteView alphabet) {
  if (alphabet.size() == 2 && alphabet[0] == 0 && alphabet[1] == 1) {
    return "binary";
  }
  if (alphabet.size() == 256) return "byte";
  return HexList(alphabet);
}

OracleResult Finish(const DriverSpec& spec, std::string method,
                    size_t segment_len, ByteView alphabet, uint64_t max_delta,
                    Bytes witness_bytes, uint64_t evaluated) {
  OracleResult r;
  r.driver = spec.name;
  r.method = std::move(method);
  r.segment_len = segment_len;
  r.alphabet = AlphabetLabel(alphabet);
  r.max_delta = max_delta;
  r.dimension = spec.dimension;
  r.witness = Segments{
      Bytes(witness_bytes.begin(), witness_bytes.begin() + segment_len),
      Bytes(witness_bytes.begin() + segment_len,
            witness_bytes.begin() + 2 * segment_len),
      Bytes(witness_bytes.begin() + 2 * segment_len, witness_bytes.end())};
  r.witness_bytes = std::move(witness_bytes);
  r.evaluated = evaluated;
  return r;
}

}  // namespace

std::optional<Bytes> AlphabetByName(std::string_view name) {
  if (name == "binary") return Bytes{0, 1};
  if (name == "byte") {
    Bytes all(256);
    for (int i = 0; i < 256; ++i) all[i] = static_cast<uint8_t>(i);
    return all;
  }
  return std::nullopt;
}

DriverSpec OracleSpec(const DriverSpec& spec, size_t segment_len) {
  DriverSpec s = spec;
  s.constraints.segment_cap = segment_len;
  s.constraints.charset = Charset::kAny;
  return s;
}

OracleResult ExhaustiveMaxDelta(const DriverSpec& input_spec,
                                size_t segment_len, ByteView alphabet,
                                uint64_t budget, unsigned threads) {
  if (segment_len == 0) throw ConfigError("segment length must be >= 1");
  if (alphabet.empty()) throw ConfigError("alphabet must be non-empty");
  const size_t digits = 3 * segment_len;
  uint64_t cardinality = 1;
  for (size_t i = 0; i < digits; ++i) {
    if (__builtin_mul_overflow(cardinality, alphabet.size(), &cardinality)) {
      throw DomainTooLargeError(
          "domain too large: " + std::to_string(alphabet.size()) + "^" +
              std::to_string(digits) + " driver runs exceeds budget " +
              std::to_string(budget),
          std::nullopt);
    }
  }
  if (cardinality > budget) {
    throw DomainTooLargeError(
        "domain too large: " + std::to_string(cardinality) +
            " driver runs exceeds budget " + std::to_string(budget),
        cardinality);
  }

  const DriverSpec spec = OracleSpec(input_spec, segment_len);
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(
      std::min<uint64_t>(threads, std::max<uint64_t>(1, cardinality / 4096)));

  std::vector<Best> partial(threads);
  auto work = [&](unsigned t) {
    DriverRunner runner(spec, /*record_coverage=*/false);
    Bytes input(digits);
    const uint64_t lo = cardinality * t / threads;
    const uint64_t hi = cardinality * (t + 1) / threads;
    Best& best = partial[t];
    for (uint64_t idx = lo; idx < hi; ++idx) {
      DecodeIndex(idx, alphabet, input);
      const DiffResult r = runner.Run(input);
      ++best.evaluated;
      if (r.outcome == Outcome::kParseReject ||
          r.outcome == Outcome::kHarnessError) {
        continue;
      }
      best.Offer(r.delta_for(spec.dimension), idx);
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }

  Best best;
  for (const auto& p : partial) {
    best.evaluated += p.evaluated;
    if (p.any) best.Offer(p.delta, p.index);
  }
  Bytes witness(digits);
  DecodeIndex(best.index, alphabet, witness);
  return Finish(spec, "exhaustive", segment_len, alphabet, best.delta,
                std::move(witness), best.evaluated);
}

OracleResult StructuredMaxDelta(const DriverSpec& input_spec,
                                const bench::StructuredDomain& domain,
                                size_t segment_len, ByteView alphabet) {
  if (segment_len == 0) throw ConfigError("segment length must be >= 1");
  if (alphabet.empty()) throw ConfigError("alphabet must be non-empty");
  const DriverSpec spec = OracleSpec(input_spec, segment_len);
  DriverRunner runner(spec, /*record_coverage=*/false);

  uint64_t best = 0;
  uint64_t evaluated = 0;
  Bytes best_input;
  for (const auto& c : domain.cases(segment_len, alphabet)) {
    for (size_t i = 0; i < c.secrets.size(); ++i) {
      for (size_t j = 0; j < c.secrets.size(); ++j) {
        Bytes input = c.pub;
        input.insert(input.end(), c.secrets[i].begin(), c.secrets[i].end());
        input.insert(input.end(), c.secrets[j].begin(), c.secrets[j].end());
        const DiffResult r = runner.Run(input);
        ++evaluated;
        if (!r.executed() || r.outcome == Outcome::kHarnessError) continue;
        const uint64_t d = r.delta_for(spec.dimension);
        if (best_input.empty() || d > best) {
          best = d;
          best_input = std::move(input);
        }
      }
    }
  }
  if (best_input.empty()) {
    throw ConfigError("structured domain produced no executable case");
  }
  return Finish(spec, "structured:" + domain.statistic, segment_len, alphabet,
                best, std::move(best_input), evaluated);
}

OracleResult StructuredMaxDelta(const DriverSpec& spec, size_t segment_len,
                                ByteView alphabet) {
  const bench::Benchmark* b = bench::Find(spec.name);
  if (!b || !b->structured) {
    throw ConfigError("driver " + spec.name +
                      " declares no cost statistic; use exhaustive mode");
  }
  return StructuredMaxDelta(spec, *b->structured, segment_len, alphabet);
}

std::string RenderOracleText(const OracleResult& r) {
  std::ostringstream out;
  out << "driver: " << r.driver << '\n'
      << "method: " << r.method << '\n'
      << "domain: segment_len=" << r.segment_len << " alphabet=" << r.alphabet
      << '\n'
      << "evaluated: " << r.evaluated << '\n'
      << "max_delta: " << r.max_delta << " (" << DimensionName(r.dimension)
      << ")\n"
      << "pub=" << HexList(r.witness.pub) << '\n'
      << "sec_1=" << HexList(r.witness.sec1) << '\n'
      << "sec_2=" << HexList(r.witness.sec2) << '\n';
  return out.str();
}

std::string RenderOracleJson(const OracleResult& r) {
  nlohmann::json j = {
      {"driver", r.driver},
      {"method", r.method},
      {"segment_len", r.segment_len},
      {"alphabet", r.alphabet},
      {"dimension", DimensionName(r.dimension)},
      {"max_delta", r.max_delta},
      {"evaluated", r.evaluated},
      {"pub", HexString(r.witness.pub)},
      {"sec1", HexString(r.witness.sec1)},
      {"sec2", HexString(r.witness.sec2)},
  };
  return j.dump();
}

}  // namespace sidefuzz
