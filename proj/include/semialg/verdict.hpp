// Report plumbing shared by the certificate and the Clifford verifier:
// per-check verdicts, deterministic work budgets, and scan aggregation
// that is stable under any chunking of the index range.

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "universe.hpp"

namespace semialg {

struct Verdict {
  enum class State { pass, fail, skipped };
  std::string name;
  State state = State::pass;
  std::string detail;
};

inline const char* to_string(Verdict::State s) {
  switch (s) {
    case Verdict::State::pass: return "pass";
    case Verdict::State::fail: return "fail";
    case Verdict::State::skipped: return "skipped";
  }
  return "";
}

namespace detail {

// Outcome of a per-element scan: overall flag, the smallest failing id
// (stable under any chunking), and a running maximum.
struct Scan {
  bool ok = true;
  std::optional<std::size_t> witness;
  std::size_t max_value = 0;
};

inline Scan combine_scans(Scan a, Scan b) {
  Scan out;
  out.ok = a.ok && b.ok;
  if (a.witness && b.witness) {
    out.witness = std::min(*a.witness, *b.witness);
  } else if (a.witness) {
    out.witness = a.witness;
  } else {
    out.witness = b.witness;
  }
  out.max_value = std::max(a.max_value, b.max_value);
  return out;
}

// Either every id in [0, count) or a fixed-seed sample. The decision and
// the sample depend only on the arguments, never on thread count.
struct IdTargets {
  std::vector<std::size_t> list;
  bool exhaustive = true;
};

inline IdTargets budget_ids(std::size_t count, std::size_t unit_cost,
                            std::size_t work_cap, std::size_t sample_size,
                            std::uint32_t seed) {
  IdTargets t;
  if (unit_cost == 0) unit_cost = 1;
  if (count <= work_cap / unit_cost) {
    t.list.resize(count);
    for (std::size_t i = 0; i < count; ++i) t.list[i] = i;
    return t;
  }
  t.exhaustive = false;
  std::size_t k =
      std::min({std::max<std::size_t>(1, work_cap / unit_cost), sample_size,
                count});
  std::mt19937_64 gen(seed);
  t.list.reserve(k);
  for (std::size_t i = 0; i < k; ++i) t.list.push_back(gen() % count);
  return t;
}

inline std::string mode_detail(const IdTargets& t, std::size_t count) {
  if (t.exhaustive) return "exhaustive " + std::to_string(count);
  return "sampled " + std::to_string(t.list.size()) + " of " +
         std::to_string(count);
}

}  // namespace detail

}  // namespace semialg
