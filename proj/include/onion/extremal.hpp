#pragma once

// Bipartite extremal searches (complete / anti-complete n x n pairs,
// K_{k,k} subgraphs) and exact big-integer evaluation of the bound functions.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include "onion/errors.hpp"

namespace onion {

class BipartiteGraph {
 public:
  using Row = boost::dynamic_bitset<>;

  BipartiteGraph() = default;
  BipartiteGraph(std::size_t left, std::size_t right)
      : right_size_(right), rows_(left, Row(right)) {}

  std::size_t left_size() const noexcept { return rows_.size(); }
  std::size_t right_size() const noexcept { return right_size_; }

  void add_edge(std::size_t l, std::size_t r) { rows_.at(l).set(r); }
  bool has_edge(std::size_t l, std::size_t r) const {
    return rows_.at(l).test(r);
  }
  const Row& row(std::size_t l) const { return rows_.at(l); }

  std::size_t edge_count() const {
    std::size_t m = 0;
    for (const auto& r : rows_) m += r.count();
    return m;
  }

 private:
  std::size_t right_size_ = 0;
  std::vector<Row> rows_;
};

struct SidePair {
  std::vector<std::size_t> left;
  std::vector<std::size_t> right;
};

struct ThomasonOutcome {
  enum class Tag { biclique, anticomplete };
  Tag tag;
  std::vector<std::size_t> left;   // A
  std::vector<std::size_t> right;  // B
};

namespace detail {

// Enumerates n-subsets of `order` (in lexicographic position order) whose
// common row intersection keeps at least n bits; returns the first hit.
inline std::optional<SidePair> common_neighbourhood_search(
    const std::vector<BipartiteGraph::Row>& rows,
    const std::vector<std::size_t>& order, std::size_t n,
    std::size_t right_size) {
  std::vector<std::size_t> chosen;
  std::optional<SidePair> found;
  std::function<void(std::size_t, const BipartiteGraph::Row&)> rec =
      [&](std::size_t from, const BipartiteGraph::Row& common) {
        if (found) return;
        if (chosen.size() == n) {
          SidePair sp;
          sp.left = chosen;
          std::sort(sp.left.begin(), sp.left.end());
          for (auto b = common.find_first();
               b != BipartiteGraph::Row::npos && sp.right.size() < n;
               b = common.find_next(b)) {
            sp.right.push_back(b);
          }
          found = std::move(sp);
          return;
        }
        for (std::size_t i = from; i < order.size(); ++i) {
          if (order.size() - i < n - chosen.size()) return;
          BipartiteGraph::Row next = common & rows[order[i]];
          if (next.count() < n) continue;
          chosen.push_back(order[i]);
          rec(i + 1, next);
          chosen.pop_back();
          if (found) return;
        }
      };
  BipartiteGraph::Row all(right_size);
  all.set();
  if (all.count() >= n) rec(0, all);
  return found;
}

}  // namespace detail

// Exact search for an n x n pair of sides that is complete (tried first) or
// anti-complete. Left vertices are branched in order of decreasing degree
// discrepancy |2 deg - right|, which makes hits show up early.
inline std::optional<ThomasonOutcome> thomason_search(const BipartiteGraph& g,
                                                      std::size_t n) {
  if (n == 0) throw contract_violation("thomason_search needs n >= 1");
  if (g.left_size() < n || g.right_size() < n) return std::nullopt;

  std::vector<std::size_t> order(g.left_size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  auto discrepancy = [&](std::size_t l) {
    auto deg = static_cast<long>(g.row(l).count());
    return std::labs(2 * deg - static_cast<long>(g.right_size()));
  };
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) {
    return discrepancy(a) > discrepancy(b);
  });

  std::vector<BipartiteGraph::Row> rows, complements;
  for (std::size_t l = 0; l < g.left_size(); ++l) {
    rows.push_back(g.row(l));
    complements.push_back(~g.row(l));
  }
  if (auto hit =
          detail::common_neighbourhood_search(rows, order, n, g.right_size())) {
    return ThomasonOutcome{ThomasonOutcome::Tag::biclique,
                           std::move(hit->left), std::move(hit->right)};
  }
  if (auto hit = detail::common_neighbourhood_search(complements, order, n,
                                                     g.right_size())) {
    return ThomasonOutcome{ThomasonOutcome::Tag::anticomplete,
                           std::move(hit->left), std::move(hit->right)};
  }
  return std::nullopt;
}

// Exact search for a (not necessarily induced) K_{k,k}.
inline std::optional<SidePair> biclique_search(const BipartiteGraph& g,
                                               std::size_t k) {
  if (k == 0) return SidePair{};
  std::vector<std::size_t> order;
  std::vector<BipartiteGraph::Row> rows;
  for (std::size_t l = 0; l < g.left_size(); ++l) {
    rows.push_back(g.row(l));
    if (g.row(l).count() >= k) order.push_back(l);
  }
  return detail::common_neighbourhood_search(rows, order, k, g.right_size());
}

// Anti-complete k x k pair only.
inline std::optional<SidePair> anticomplete_search(const BipartiteGraph& g,
                                                   std::size_t k) {
  if (k == 0) return SidePair{};
  std::vector<std::size_t> order;
  std::vector<BipartiteGraph::Row> rows;
  for (std::size_t l = 0; l < g.left_size(); ++l) {
    rows.push_back(~g.row(l));
    if (rows.back().count() >= k) order.push_back(l);
  }
  return detail::common_neighbourhood_search(rows, order, k, g.right_size());
}

inline bool is_biclique(const BipartiteGraph& g, const SidePair& s) {
  for (auto l : s.left)
    for (auto r : s.right)
      if (!g.has_edge(l, r)) return false;
  return true;
}

inline bool is_anticomplete(const BipartiteGraph& g, const SidePair& s) {
  for (auto l : s.left)
    for (auto r : s.right)
      if (g.has_edge(l, r)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Bound functions

using BigInt = boost::multiprecision::cpp_int;

inline constexpr std::size_t kDefaultDigitCap = 1'000'000;

// Exact nonnegative integer, or Overflow once its decimal length would exceed
// the digit cap. Overflow is absorbing and compares above every exact value.
// The residue mod 3 is tracked through the arithmetic so divisibility stays
// decidable after overflow wherever the formula determines it.
class BigBound {
 public:
  static BigBound exact(BigInt v, std::size_t cap = kDefaultDigitCap) {
    BigBound b;
    b.cap_ = cap;
    if (digits(v) > cap) {
      b.mod3_ = static_cast<unsigned>(v % 3);
      return b;
    }
    b.mod3_ = static_cast<unsigned>(v % 3);
    b.value_ = std::move(v);
    return b;
  }
  static BigBound overflow(std::optional<unsigned> mod3, std::size_t cap) {
    BigBound b;
    b.cap_ = cap;
    b.mod3_ = mod3;
    return b;
  }

  bool is_overflow() const noexcept { return !value_.has_value(); }
  const BigInt& value() const {
    if (!value_) throw contract_violation("bound overflowed the digit cap");
    return *value_;
  }
  std::size_t cap() const noexcept { return cap_; }
  std::optional<unsigned> residue_mod3() const noexcept { return mod3_; }

  std::string to_string() const {
    if (!value_) return "overflow(>" + std::to_string(cap_) + " digits)";
    return value_->str();
  }

  static std::size_t digits(const BigInt& v) {
    if (v == 0) return 1;
    // Estimate from the bit length, then settle exactly near the edge.
    double est = static_cast<double>(boost::multiprecision::msb(v)) *
                 0.30102999566398120;
    if (est < 1e5) return v.str().size();
    return static_cast<std::size_t>(est) + 1;
  }

  // -1, 0, 1 against an exact value.
  int compare(const BigInt& rhs) const {
    if (!value_) return 1;
    return *value_ < rhs ? -1 : (*value_ == rhs ? 0 : 1);
  }

  friend BigBound operator+(const BigBound& a, const BigBound& b) {
    auto cap = std::min(a.cap_, b.cap_);
    if (a.value_ && b.value_) return exact(*a.value_ + *b.value_, cap);
    return overflow(combine(a.mod3_, b.mod3_, [](unsigned x, unsigned y) {
                      return (x + y) % 3;
                    }),
                    cap);
  }

  friend BigBound operator*(const BigBound& a, const BigBound& b) {
    auto cap = std::min(a.cap_, b.cap_);
    if (a.value_ && b.value_) {
      if (*a.value_ == 0 || *b.value_ == 0) return exact(0, cap);
      if (digits(*a.value_) + digits(*b.value_) > cap + 1) {
        return overflow((a.mod3_.value() * b.mod3_.value()) % 3, cap);
      }
      return exact(*a.value_ * *b.value_, cap);
    }
    if (a.mod3_ == 0u || b.mod3_ == 0u) return overflow(0u, cap);
    return overflow(combine(a.mod3_, b.mod3_, [](unsigned x, unsigned y) {
                      return (x * y) % 3;
                    }),
                    cap);
  }

  // a - b for exact b <= a (used for N - 1).
  friend BigBound operator-(const BigBound& a, unsigned long b) {
    if (a.value_) return exact(*a.value_ - b, a.cap_);
    return overflow(a.mod3_ ? std::optional<unsigned>((*a.mod3_ + 3 - b % 3) % 3)
                            : std::nullopt,
                    a.cap_);
  }

  static BigBound pow(const BigBound& base, const BigBound& exponent) {
    auto cap = std::min(base.cap_, exponent.cap_);
    if (base.value_ && (*base.value_ == 0 || *base.value_ == 1)) {
      if (exponent.value_ && *exponent.value_ == 0) return exact(1, cap);
      return exact(*base.value_, cap);
    }
    auto residue = [&]() -> std::optional<unsigned> {
      if (!base.mod3_) return std::nullopt;
      if (*base.mod3_ == 0) return 0u;  // exponent >= 1 here
      if (*base.mod3_ == 1) return 1u;
      if (!exponent.mod3_ && !exponent.value_) return std::nullopt;
      // 2^e mod 3 depends on the parity of e; parity is only known exactly.
      if (exponent.value_) {
        return (*exponent.value_ % 2 == 0) ? 1u : 2u;
      }
      return std::nullopt;
    };
    if (!base.value_ || !exponent.value_) return overflow(residue(), cap);
    const BigInt& e = *exponent.value_;
    if (e == 0) return exact(1, cap);
    double log10_base = static_cast<double>(boost::multiprecision::msb(*base.value_)) *
                        0.30102999566398120;
    // msb underestimates log2 by < 1; use it as a lower bound on the length.
    if (e > BigInt(cap) * 4 + 64 ||
        static_cast<double>(e) * log10_base > static_cast<double>(cap) + 1) {
      return overflow(residue(), cap);
    }
    return exact(boost::multiprecision::pow(*base.value_,
                                            static_cast<unsigned>(e)),
                 cap);
  }

  // ceil(a / b) for an exact positive divisor.
  static BigBound ceil_div(const BigBound& a, unsigned long b) {
    if (a.value_) return exact((*a.value_ + (b - 1)) / b, a.cap_);
    return overflow(std::nullopt, a.cap_);
  }

  static BigBound max(const BigBound& a, const BigBound& b) {
    auto cap = std::min(a.cap_, b.cap_);
    if (a.value_ && b.value_) {
      return exact(*a.value_ < *b.value_ ? *b.value_ : *a.value_, cap);
    }
    if (!a.value_ && !b.value_) {
      return overflow(a.mod3_ == b.mod3_ ? a.mod3_ : std::nullopt, cap);
    }
    const BigBound& o = a.value_ ? b : a;
    return overflow(o.mod3_, cap);
  }

 private:
  template <class F>
  static std::optional<unsigned> combine(std::optional<unsigned> x,
                                         std::optional<unsigned> y, F f) {
    if (!x || !y) return std::nullopt;
    return f(*x, *y);
  }

  std::optional<BigInt> value_;
  std::optional<unsigned> mod3_;
  std::size_t cap_ = kDefaultDigitCap;
};

// Bound functions. c(k) = k is the Kovari-Sos-Turan constant used
// throughout; every other function is built from it exactly.
class Bounds {
 public:
  explicit Bounds(std::size_t digit_cap = kDefaultDigitCap) : cap_(digit_cap) {
    if (cap_ == 0) throw contract_violation("digit cap must be positive");
  }

  std::size_t digit_cap() const noexcept { return cap_; }

  BigBound lit(const BigInt& v) const { return BigBound::exact(v, cap_); }

  // b(n) = 2^n (n - 1) + 1
  BigBound b(const BigBound& n) const {
    require_positive(n);
    return BigBound::pow(lit(2), n) * (n - 1) + lit(1);
  }

  BigBound c(const BigBound& k) const {
    require_positive(k);
    return k;
  }

  // g(n) = max{8, ceil((16 c(2n))^{2n} / 2)}
  BigBound g(const BigBound& n) const {
    require_positive(n);
    auto two_n = lit(2) * n;
    auto inner = BigBound::pow(lit(16) * c(two_n), two_n);
    return BigBound::max(lit(8), BigBound::ceil_div(inner, 2));
  }

  // f(n) = max{6n, 3 ceil((36 c(g(n)))^{g(n)} / 4)}
  BigBound f(const BigBound& n) const {
    require_positive(n);
    auto gn = g(n);
    auto inner = BigBound::pow(lit(36) * c(gn), gn);
    return BigBound::max(lit(6) * n, lit(3) * BigBound::ceil_div(inner, 4));
  }

  // F(t) = f^{4t}(1)
  BigBound F(const BigBound& t) const {
    require_positive(t);
    return iterate([this](const BigBound& x) { return f(x); }, 4 * small(t),
                   lit(1));
  }

  // g(t, k) = 2^N (N - 1) + 1 with N = max{k, F(t)}
  BigBound g_tk(const BigBound& t, const BigBound& k) const {
    require_positive(k);
    auto N = BigBound::max(k, F(t));
    return b(N);
  }

  // f(t) = 2t * g_t^{4t^2}(2)
  BigBound f_thm(const BigBound& t) const {
    require_positive(t);
    auto tt = small(t);
    auto chain = iterate([&](const BigBound& k) { return g_tk(t, k); },
                         4 * tt * tt, lit(2));
    return lit(2) * t * chain;
  }

  BigBound b(std::uint64_t n) const { return b(lit(n)); }
  BigBound g(std::uint64_t n) const { return g(lit(n)); }
  BigBound f(std::uint64_t n) const { return f(lit(n)); }
  BigBound F(std::uint64_t t) const { return F(lit(t)); }
  BigBound g_tk(std::uint64_t t, std::uint64_t k) const {
    return g_tk(lit(t), lit(k));
  }
  BigBound f_thm(std::uint64_t t) const { return f_thm(lit(t)); }

  // Dispatch by name: b, c, f, g, F, g_tk, f_thm.
  BigBound evaluate(const std::string& name,
                    const std::vector<BigInt>& args) const {
    auto arg = [&](std::size_t i) {
      if (args.size() <= i) {
        throw contract_violation("bound '" + name + "' needs more arguments");
      }
      return lit(args[i]);
    };
    auto arity = [&](std::size_t n) {
      if (args.size() != n) {
        throw contract_violation("bound '" + name + "' takes " +
                                 std::to_string(n) + " argument(s)");
      }
    };
    if (name == "g_tk") {
      arity(2);
      return g_tk(arg(0), arg(1));
    }
    using Unary = BigBound (Bounds::*)(const BigBound&) const;
    static const std::pair<const char*, Unary> unary[] = {
        {"b", &Bounds::b}, {"c", &Bounds::c},         {"g", &Bounds::g},
        {"f", &Bounds::f}, {"F", &Bounds::F}, {"f_thm", &Bounds::f_thm}};
    for (const auto& [key, fn] : unary) {
      if (name == key) {
        arity(1);
        return (this->*fn)(arg(0));
      }
    }
    throw contract_violation("unknown bound '" + name + "'");
  }

 private:
  static void require_positive(const BigBound& x) {
    if (!x.is_overflow() && x.value() <= 0) {
      throw contract_violation("bound arguments must be positive");
    }
  }

  static std::uint64_t small(const BigBound& x) {
    if (x.is_overflow() || x.value() > 1'000'000) {
      throw contract_violation("iteration count argument too large");
    }
    return static_cast<std::uint64_t>(x.value());
  }

  template <class Fn>
  static BigBound iterate(Fn fn, std::uint64_t times, BigBound x) {
    for (std::uint64_t i = 0; i < times; ++i) x = fn(x);
    return x;
  }

  std::size_t cap_;
};

inline BigBound bounds(const std::string& name, const std::vector<BigInt>& args,
                       std::size_t digit_cap = kDefaultDigitCap) {
  return Bounds(digit_cap).evaluate(name, args);
}

}  // namespace onion
