#include "wood/crooked.hpp"

#include <algorithm>
#include <istream>
#include <limits>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>

#include "wood/error.hpp"
#include "wood/parallel.hpp"

namespace wood {

FunctionTable::FunctionTable(int n, std::vector<Gf2Elem> values) : n_(n), values_(std::move(values)) {
  if (n < 1 || n > kMaxExtensionDegree)
    throw ParameterError("function table degree must lie in [1, 13], got " + std::to_string(n));
  const std::size_t q = std::size_t{1} << n;
  if (values_.size() != q)
    throw ParameterError("function table for n=" + std::to_string(n) + " needs " + std::to_string(q) +
                         " entries, got " + std::to_string(values_.size()));
  for (std::size_t i = 0; i < q; ++i)
    if (values_[i].bits >= q)
      throw ParameterError("function table entry " + std::to_string(i) + " = " +
                           std::to_string(values_[i].bits) + " does not fit in " + std::to_string(n) +
                           " bits");
}

FunctionTable tabulate_power_map(const FieldCtx& ctx, std::uint64_t d) {
  if (d == 0) throw ParameterError("power map exponent must be >= 1");
  std::vector<Gf2Elem> values(ctx.size());
  for (std::uint32_t x = 0; x < ctx.size(); ++x) values[x] = ctx.pow(Gf2Elem{x}, d);
  return FunctionTable(ctx.n(), std::move(values));
}

FunctionTable read_function_table(std::istream& in) {
  long long n = 0;
  if (!(in >> n)) throw ParameterError("function table: missing degree line");
  if (n < 1 || n > kMaxExtensionDegree)
    throw ParameterError("function table: degree must lie in [1, 13], got " + std::to_string(n));
  const std::size_t q = std::size_t{1} << n;
  std::vector<Gf2Elem> values;
  values.reserve(q);
  long long v = 0;
  while (values.size() < q && in >> v) {
    if (v < 0 || static_cast<unsigned long long>(v) >= q)
      throw ParameterError("function table: value " + std::to_string(v) + " out of range");
    values.emplace_back(static_cast<std::uint32_t>(v));
  }
  if (values.size() != q)
    throw ParameterError("function table: expected " + std::to_string(q) + " values, read " +
                         std::to_string(values.size()));
  std::string extra;
  if (in >> extra) throw ParameterError("function table: trailing data '" + extra + "'");
  return FunctionTable(static_cast<int>(n), std::move(values));
}

void write_function_table(const FunctionTable& table, std::ostream& out) {
  out << table.n() << '\n';
  for (Gf2Elem v : table.values()) out << v.bits << '\n';
}

namespace {

using Quad = std::array<std::uint32_t, 4>;

// A nonzero derivative x -> Q(x) + Q(x+s) is always constant on {x, x+s}; APN
// fails for s iff some value is hit more than twice.
bool derivative_is_two_to_one(const std::vector<std::uint32_t>& q_vals, std::uint32_t s,
                              std::vector<std::uint32_t>& hits, std::vector<std::uint32_t>& stamp) {
  const auto q = static_cast<std::uint32_t>(q_vals.size());
  for (std::uint32_t x = 0; x < q; ++x) {
    const std::uint32_t v = q_vals[x] ^ q_vals[x ^ s];
    if (stamp[v] != s) {
      stamp[v] = s;
      hits[v] = 0;
    }
    if (++hits[v] > 2) return false;
  }
  return true;
}

// Least sorted quadruple {x1<x2<x3<x4} with zero sum and zero image sum. In such
// a quadruple x1^x2 = x3^x4 = s and both pairs share the derivative value at s.
std::optional<Quad> least_apn_witness(const std::vector<std::uint32_t>& q_vals) {
  const auto q = static_cast<std::uint32_t>(q_vals.size());
  std::optional<Quad> best;
  struct Pair {
    std::uint32_t value, lo, hi;
  };
  std::vector<Pair> pairs;
  pairs.reserve(q / 2);
  for (std::uint32_t s = 1; s < q; ++s) {
    pairs.clear();
    for (std::uint32_t lo = 0; lo < q; ++lo) {
      const std::uint32_t hi = lo ^ s;
      if (hi > lo) pairs.push_back({q_vals[lo] ^ q_vals[hi], lo, hi});
    }
    std::sort(pairs.begin(), pairs.end(),
              [](const Pair& a, const Pair& b) { return a.value != b.value ? a.value < b.value : a.lo < b.lo; });
    for (std::size_t g = 0; g < pairs.size();) {
      std::size_t end = g;
      while (end < pairs.size() && pairs[end].value == pairs[g].value) ++end;
      for (std::size_t i = g; i + 1 < end; ++i) {
        const auto it = std::upper_bound(pairs.begin() + static_cast<std::ptrdiff_t>(i) + 1,
                                         pairs.begin() + static_cast<std::ptrdiff_t>(end), pairs[i].hi,
                                         [](std::uint32_t key, const Pair& p) { return key < p.lo; });
        if (it == pairs.begin() + static_cast<std::ptrdiff_t>(end)) continue;
        const Quad cand{pairs[i].lo, pairs[i].hi, it->lo, it->hi};
        if (!best || cand < *best) best = cand;
      }
      g = end;
    }
  }
  return best;
}

std::vector<std::uint32_t> raw_values(const FunctionTable& table) {
  std::vector<std::uint32_t> out(table.size());
  for (std::uint32_t x = 0; x < table.size(); ++x) out[x] = table.at(x).bits;
  return out;
}

// In-place Walsh-Hadamard transform.
void walsh_hadamard(std::vector<std::int64_t>& f) {
  const std::size_t q = f.size();
  for (std::size_t len = 1; len < q; len <<= 1)
    for (std::size_t i = 0; i < q; i += len << 1)
      for (std::size_t j = i; j < i + len; ++j) {
        const std::int64_t u = f[j], v = f[j + len];
        f[j] = u + v;
        f[j + len] = u - v;
      }
}

// Condition 3 for fixed a reads: no t1, t2, t3 in T_a = {Q(x)+Q(x+a)} with
// t1^t2^t3 = 0. The number of such ordered triples is (1/q) sum_w F(w)^3 with F
// the Walsh transform of T_a's indicator, so it suffices that this sum vanish.
bool condition3_holds_for(const std::vector<std::uint32_t>& q_vals, std::uint32_t a,
                          std::vector<std::int64_t>& buf) {
  const auto q = static_cast<std::uint32_t>(q_vals.size());
  std::fill(buf.begin(), buf.end(), 0);
  for (std::uint32_t x = 0; x < q; ++x) buf[q_vals[x] ^ q_vals[x ^ a]] = 1;
  walsh_hadamard(buf);
  std::int64_t total = 0;
  for (std::int64_t f : buf) total += f * f * f;
  return total == 0;
}

Quad least_condition3_witness(const std::vector<std::uint32_t>& q_vals, std::uint32_t a) {
  const auto q = static_cast<std::uint32_t>(q_vals.size());
  constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> deriv(q), least_preimage(q, kNone);
  for (std::uint32_t x = 0; x < q; ++x) {
    deriv[x] = q_vals[x] ^ q_vals[x ^ a];
    if (least_preimage[deriv[x]] == kNone) least_preimage[deriv[x]] = x;
  }
  for (std::uint32_t x1 = 0; x1 < q; ++x1)
    for (std::uint32_t x2 = 0; x2 < q; ++x2) {
      const std::uint32_t x3 = least_preimage[deriv[x1] ^ deriv[x2]];
      if (x3 != kNone) return {x1, x2, x3, a};
    }
  throw std::logic_error("condition 3 witness search found nothing for a failing a");
}

// Runs pred(v) for v in [1, q) split across workers; returns the least v for
// which pred is false, or 0 if none. Each chunk stops at its first failure.
template <typename MakeState, typename Pred>
std::uint32_t least_failing_nonzero(std::uint32_t q, unsigned workers, MakeState make_state, Pred pred) {
  const std::size_t count = q - 1;
  std::vector<std::uint32_t> first_fail(chunk_count(count, workers), 0);
  parallel_chunks(count, workers, [&](std::size_t begin, std::size_t end, std::size_t chunk) {
    auto state = make_state();
    for (std::size_t i = begin; i < end; ++i) {
      const auto v = static_cast<std::uint32_t>(i + 1);
      if (!pred(v, state)) {
        first_fail[chunk] = v;
        return;
      }
    }
  });
  for (std::uint32_t v : first_fail)
    if (v != 0) return v;
  return 0;
}

}  // namespace

ApnResult is_apn(const FunctionTable& table, unsigned workers) {
  const auto q_vals = raw_values(table);
  const std::uint32_t q = table.size();
  struct State {
    std::vector<std::uint32_t> hits, stamp;
  };
  const std::uint32_t bad = least_failing_nonzero(
      q, workers, [q] { return State{std::vector<std::uint32_t>(q), std::vector<std::uint32_t>(q, 0)}; },
      [&](std::uint32_t s, State& st) { return derivative_is_two_to_one(q_vals, s, st.hits, st.stamp); });
  if (bad == 0) return {};
  return {false, least_apn_witness(q_vals)};
}

Condition3Result check_condition3(const FunctionTable& table, unsigned workers) {
  const auto q_vals = raw_values(table);
  const std::uint32_t q = table.size();
  const std::uint32_t bad = least_failing_nonzero(
      q, workers, [q] { return std::vector<std::int64_t>(q); },
      [&](std::uint32_t a, std::vector<std::int64_t>& buf) { return condition3_holds_for(q_vals, a, buf); });
  if (bad == 0) return {};
  return {false, least_condition3_witness(q_vals, bad)};
}

CrookedVerdict is_crooked(const FunctionTable& table, unsigned workers) {
  CrookedVerdict v;
  v.condition1 = table.at(0).bits == 0;
  v.condition2 = is_apn(table, workers);
  v.condition3 = check_condition3(table, workers);
  return v;
}

CrookedVerdict is_crooked_naive(const FunctionTable& table) {
  if (table.n() > kNaiveCrookedMaxDegree)
    throw ParameterError("naive crookedness oracle is limited to n <= 5, got n=" + std::to_string(table.n()));
  const std::uint32_t q = table.size();
  const auto Q = [&](std::uint32_t x) { return table.at(x).bits; };

  CrookedVerdict v;
  v.condition1 = Q(0) == 0;

  [&] {
    for (std::uint32_t x1 = 0; x1 < q; ++x1)
      for (std::uint32_t x2 = x1 + 1; x2 < q; ++x2)
        for (std::uint32_t x3 = x2 + 1; x3 < q; ++x3)
          for (std::uint32_t x4 = x3 + 1; x4 < q; ++x4)
            if ((x1 ^ x2 ^ x3 ^ x4) == 0 && (Q(x1) ^ Q(x2) ^ Q(x3) ^ Q(x4)) == 0) {
              v.condition2 = {false, Quad{x1, x2, x3, x4}};
              return;
            }
  }();

  [&] {
    for (std::uint32_t a = 1; a < q; ++a)
      for (std::uint32_t x1 = 0; x1 < q; ++x1)
        for (std::uint32_t x2 = 0; x2 < q; ++x2)
          for (std::uint32_t x3 = 0; x3 < q; ++x3)
            if ((Q(x1) ^ Q(x1 ^ a) ^ Q(x2) ^ Q(x2 ^ a) ^ Q(x3) ^ Q(x3 ^ a)) == 0) {
              v.condition3 = {false, Quad{x1, x2, x3, a}};
              return;
            }
  }();
  return v;
}

bool is_condition2_violation(const FunctionTable& table, const Quad& w) {
  for (std::uint32_t x : w)
    if (x >= table.size()) return false;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (w[i] == w[j]) return false;
  const auto Q = [&](std::uint32_t x) { return table.at(x).bits; };
  return (w[0] ^ w[1] ^ w[2] ^ w[3]) == 0 && (Q(w[0]) ^ Q(w[1]) ^ Q(w[2]) ^ Q(w[3])) == 0;
}

bool is_condition3_violation(const FunctionTable& table, const Quad& w) {
  for (std::uint32_t x : w)
    if (x >= table.size()) return false;
  const std::uint32_t a = w[3];
  if (a == 0) return false;
  const auto D = [&](std::uint32_t x) { return table.at(x).bits ^ table.at(x ^ a).bits; };
  return (D(w[0]) ^ D(w[1]) ^ D(w[2])) == 0;
}

bool is_pinned_crooked_power_map(int n, std::uint64_t d) {
  if (n != 3 && n != 5 && n != 7 && n != 9) return false;
  for (int k = 1; k < n; ++k)
    if (std::gcd(k, n) == 1 && d == (std::uint64_t{1} << k) + 1) return true;
  return false;
}

}  // namespace wood
