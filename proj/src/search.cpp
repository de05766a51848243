#include "likepowers/search.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <string>
#include <thread>

namespace likepowers::search {

namespace {

// Guardrails keep every power sum below 5 * 100^4 < 2^63, so signatures are
// exact in int64.
using Subset = std::array<std::uint8_t, kMaxSize>;
using Signature = std::array<std::int64_t, kMaxSize - 1>;

struct Entry {
  Signature sig;
  Subset subset;
  auto operator<=>(const Entry&) const = default;
};

constexpr std::size_t kEntriesPerPass = std::size_t{1} << 22;

Signature signature_of(const Subset& s, unsigned size, unsigned degree) {
  Signature sig{};
  for (unsigned i = 0; i < size; ++i) {
    std::int64_t power = 1;
    for (unsigned e = 0; e < degree; ++e) {
      power *= s[i];
      sig[e] += power;
    }
  }
  return sig;
}

// Calls visit(subset) for every increasing (or nondecreasing) sequence whose
// first element is `lead`.
template <class Visit>
void enumerate_from(const SearchSpec& spec, unsigned lead, Visit&& visit) {
  Subset s{};
  s[0] = static_cast<std::uint8_t>(lead);
  auto rec = [&](auto&& self, unsigned pos) -> void {
    if (pos == spec.size) {
      visit(s);
      return;
    }
    const unsigned start = spec.allow_repeats ? s[pos - 1] : s[pos - 1] + 1u;
    for (unsigned v = start; v <= spec.bound; ++v) {
      s[pos] = static_cast<std::uint8_t>(v);
      self(self, pos + 1);
    }
  };
  rec(rec, 1);
}

std::size_t count_subsets(const SearchSpec& spec) {
  // C(n, m) or C(n + m - 1, m) with n = bound + 1
  const std::size_t n = spec.bound + 1u + (spec.allow_repeats ? spec.size - 1u : 0u);
  std::size_t c = 1;
  for (unsigned i = 0; i < spec.size; ++i) c = c * (n - i) / (i + 1);
  return c;
}

pte::IntMultiset to_multiset(const Subset& s, unsigned size, long offset) {
  std::vector<Integer> v;
  v.reserve(size);
  for (unsigned i = 0; i < size; ++i) v.emplace_back(static_cast<long>(s[i]) - offset);
  return pte::IntMultiset(std::move(v));
}

bool lex_less(const std::vector<Integer>& a, const std::vector<Integer>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

void validate(const SearchSpec& spec) {
  if (spec.size < 1 || spec.size > kMaxSize) {
    throw GuardrailViolation("size must be between 1 and " + std::to_string(kMaxSize));
  }
  if (spec.bound > kMaxBound) throw GuardrailViolation("bound must be at most " + std::to_string(kMaxBound));
  if (spec.target_degree < 1 || spec.target_degree >= spec.size) {
    throw GuardrailViolation("target degree must satisfy 1 <= degree < size");
  }
}

std::vector<pte::PTEPair> find_ideal(const SearchSpec& spec) {
  validate(spec);
  const unsigned size = spec.size;
  const unsigned degree = spec.target_degree;

  // Split the p_1 range into passes so memory stays bounded; matching pairs
  // share p_1 and therefore land in the same pass.
  const std::int64_t max_sum = static_cast<std::int64_t>(size) * spec.bound;
  const std::size_t passes = std::max<std::size_t>(1, count_subsets(spec) / kEntriesPerPass + 1);
  const std::int64_t width = max_sum / static_cast<std::int64_t>(passes) + 1;
  const unsigned workers = std::max(1u, std::min(spec.workers, spec.bound + 1));

  std::vector<std::pair<Subset, Subset>> raw;
  for (std::int64_t lo = 0; lo <= max_sum; lo += width) {
    const std::int64_t hi = lo + width;
    std::vector<std::vector<Entry>> parts(workers);
    auto work = [&](unsigned w) {
      for (unsigned lead = w; lead <= spec.bound; lead += workers) {
        enumerate_from(spec, lead, [&](const Subset& s) {
          Signature sig = signature_of(s, size, degree);
          if (sig[0] >= lo && sig[0] < hi) parts[w].push_back({sig, s});
        });
      }
    };
    if (workers == 1) {
      work(0);
    } else {
      std::vector<std::thread> threads;
      for (unsigned w = 0; w < workers; ++w) threads.emplace_back(work, w);
      for (auto& t : threads) t.join();
    }
    std::vector<Entry> entries;
    for (auto& p : parts) entries.insert(entries.end(), p.begin(), p.end());
    std::sort(entries.begin(), entries.end());

    for (std::size_t i = 0; i < entries.size();) {
      std::size_t j = i + 1;
      while (j < entries.size() && entries[j].sig == entries[i].sig) ++j;
      for (std::size_t x = i; x < j; ++x) {
        for (std::size_t y = x + 1; y < j; ++y) raw.emplace_back(entries[x].subset, entries[y].subset);
      }
      i = j;
    }
  }

  std::vector<pte::PTEPair> out;
  out.reserve(raw.size());
  for (const auto& [first, second] : raw) {
    long offset = 0;
    if (spec.translate_to_zero) offset = std::min(first[0], second[0]);
    pte::IntMultiset a = to_multiset(first, size, offset);
    pte::IntMultiset b = to_multiset(second, size, offset);
    if (lex_less(b.values(), a.values())) std::swap(a, b);
    pte::PTEPair pair = pte::make_pair(std::move(a), std::move(b));
    if (pair.degree.is_identical() || pair.degree.degree < degree) {
      throw std::logic_error("search emitted an uncertified pair " + pair.a.to_string() + " vs " +
                             pair.b.to_string());
    }
    out.push_back(std::move(pair));
  }
  auto key_less = [](const pte::PTEPair& x, const pte::PTEPair& y) {
    if (x.a.values() != y.a.values()) return lex_less(x.a.values(), y.a.values());
    return lex_less(x.b.values(), y.b.values());
  };
  std::sort(out.begin(), out.end(), key_less);
  out.erase(std::unique(out.begin(), out.end(),
                        [](const pte::PTEPair& x, const pte::PTEPair& y) { return x.a == y.a && x.b == y.b; }),
            out.end());
  return out;
}

}  // namespace likepowers::search
