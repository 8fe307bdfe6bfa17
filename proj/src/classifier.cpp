#include "ccg/classifier.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "ccg/local_fields.hpp"
#include "ccg/nt.hpp"

#include "json.hpp"

namespace ccg {

namespace {

constexpr unsigned kR2 = 1u << 0;
constexpr unsigned kR3 = 1u << 1;
constexpr unsigned kR4 = 1u << 2;
constexpr unsigned kR5 = 1u << 3;
constexpr unsigned kR6 = 1u << 4;
constexpr unsigned kR7 = 1u << 5;

std::string interval_str(const DiameterInterval& iv) {
  return "[" + std::to_string(iv.lo) + "," + std::to_string(iv.hi) + "]";
}

}  // namespace

std::string DiameterVerdict::glyph() const {
  if (!connected) return "X";
  if (bounds.lo == bounds.hi) return std::to_string(bounds.lo);
  if (bounds.lo == 4 && bounds.hi == 5) return "\u22645";  // <=5
  if (bounds.lo == 5 && bounds.hi == 6) return "\u22655";  // >=5
  return "?";
}

KnownFFDiameters KnownFFDiameters::defaults() {
  KnownFFDiameters k;
  k.add({2, 15, true, 5, "literature: diam Gamma(F_2,15) = 5"});
  return k;
}

void KnownFFDiameters::add(FFDiameterEntry e) {
  for (auto& old : entries_)
    if (old.p == e.p && old.n == e.n) {
      old = std::move(e);
      return;
    }
  entries_.push_back(std::move(e));
}

std::optional<FFDiameterEntry> KnownFFDiameters::lookup(std::uint64_t p, int n) const {
  for (const auto& e : entries_)
    if (e.p == p && e.n == n) return e;
  return std::nullopt;
}

std::optional<std::string> nonclique_annotation(std::uint64_t p, int n) {
  if (n < 3) throw std::invalid_argument("nonclique_annotation: n >= 3 required");
  if (is_connected(p, static_cast<std::uint64_t>(n)))
    throw std::domain_error("nonclique_annotation: graph is connected");
  if (is_prime_u64(static_cast<std::uint64_t>(n))) return "non-clique diameter 4";
  if (static_cast<std::uint64_t>(n) == p * p) return "non-clique diameter \u2265 5";
  return "unknown";  // n = p^k, k >= 3
}

DiameterVerdict classify(std::uint64_t p, int n, const KnownFFDiameters& known, unsigned rule_mask) {
  require_prime(p);
  if (n < 2) throw std::invalid_argument("n must be >= 2");
  const std::uint64_t un = static_cast<std::uint64_t>(n);

  DiameterVerdict v;
  v.p = p;
  v.n = n;
  v.connected = is_connected(p, un);

  if (!v.connected) {
    RuleContribution r1;
    r1.rule = "R1";
    r1.citation = "Gamma(Q_p,n) is disconnected iff n = 2, n prime, or n a power of p";
    r1.disconnects = true;
    if (n == 2)
      r1.detail = "n = 2";
    else if (is_prime_u64(un))
      r1.detail = "n prime";
    else
      r1.detail = "n is a power of p";
    v.trace.push_back(std::move(r1));
    if (n >= 3) v.nonclique_note = nonclique_annotation(p, n);
    return v;
  }

  auto apply = [&](RuleContribution rc) {
    v.bounds.lo = std::max(v.bounds.lo, rc.contribution.lo);
    v.bounds.hi = std::min(v.bounds.hi, rc.contribution.hi);
    v.trace.push_back(std::move(rc));
  };

  apply({"R0", "a connected commuting graph over a field has diameter 4, 5 or 6",
         "base interval", false, {4, 6}});

  // R2: n = 4 and p odd -> exactly 4.
  if ((rule_mask & kR2) && n == 4 && p != 2)
    apply({"R2", "a connected Gamma(F,4) has diameter 4 over any field", "n = 4, p odd", false, {4, 4}});

  // R3: n = q^2 for a prime q >= 3, q != p -> at least 5.
  if (rule_mask & kR3) {
    std::uint64_t q = 0;
    for (std::uint64_t c = 3; c * c <= un; ++c)
      if (c * c == un && is_prime_u64(c) && c != p) q = c;
    if (q != 0)
      apply({"R3",
             "n = q^2 with q != p an odd prime: diameter >= 5 (cyclic degree-n extension exists)",
             "q = " + std::to_string(q), false, {5, 6}});
  }

  // R4: a known finite-field diameter is a lower bound (reduction mod p).
  if (rule_mask & kR4) {
    if (auto e = known.lookup(p, n); e && e->connected)
      apply({"R4", "diam Gamma(Q_p,n) >= diam Gamma(F_p,n)",
             "diam Gamma(F_" + std::to_string(p) + "," + std::to_string(n) + ") = " + std::to_string(e->diameter) +
                 " [" + e->provenance + "]",
             false,
             {std::max(4, e->diameter), 6}});
  }

  // R5: largest prime factor below sqrt(n) -> at most 5.
  if ((rule_mask & kR5) && small_prime_factor_criterion(p, un)) {
    std::uint64_t lpf = largest_prime_factor(un);
    apply({"R5", "largest prime factor of n below sqrt(n), n not a power of p: diameter <= 5",
           "largest prime factor " + std::to_string(lpf), false, {4, 5}});
  }

  // R6: some prime q | n with q != p, q^2 < n satisfying congruence
  // condition (a), (b) or (c) -> at most 5.
  if (rule_mask & kR6) {
    for (const auto& [q, e] : factorize_u64(un)) {
      (void)e;
      if (q == p || q * q >= un) continue;
      auto ca = condition_a(p, un, q);
      auto cb = condition_b(p, q);
      auto cc = condition_c(p, un);
      if (ca.holds || cb.holds || cc.holds) {
        std::string held;
        for (const auto* c : {&ca, &cb, &cc})
          if (c->holds) held += held.empty() ? std::string(1, c->tag) : std::string(",") + c->tag;
        apply({"R6",
               "a degree-q subextension below sqrt(n) exists in every degree-n extension: diameter <= 5",
               "q = " + std::to_string(q) + ", condition(s) " + held + " hold", false, {4, 5}});
        break;  // first succeeding q
      }
    }
  }

  // R7: p = 2, n = 2q with q >= 7 prime -> exactly 6.
  if ((rule_mask & kR7) && p == 2 && n % 2 == 0 && is_prime_u64(un / 2) && un / 2 >= 7)
    apply({"R7", "Gamma(Q_2,2q) has diameter 6 for every prime q >= 7",
           "q = " + std::to_string(un / 2), false, {6, 6}});

  if (v.bounds.lo > v.bounds.hi) {
    std::ostringstream os;
    os << "classifier soundness failure at p=" << p << ", n=" << n << ": empty intersection; trace:";
    for (const auto& t : v.trace) os << " " << t.rule << interval_str(t.contribution);
    throw std::logic_error(os.str());
  }
  return v;
}

const std::vector<int>& table1_default_ns() {
  static const std::vector<int> ns = {4, 6, 8, 9, 10, 12, 14, 15, 16, 18};
  return ns;
}

const std::vector<std::uint64_t>& table1_default_ps() {
  static const std::vector<std::uint64_t> ps = {2, 3, 5, 7, 11, 13, 17, 19, 23};
  return ps;
}

std::string render_table(const std::vector<int>& ns, const std::vector<std::uint64_t>& ps, TableFormat format,
                         const KnownFFDiameters& known) {
  std::vector<std::vector<std::string>> cells;
  for (int n : ns) {
    std::vector<std::string> row;
    for (std::uint64_t p : ps) row.push_back(classify(p, n, known).glyph());
    cells.push_back(std::move(row));
  }

  std::ostringstream os;
  switch (format) {
    case TableFormat::kMarkdown: {
      os << "|  n  |";
      for (std::uint64_t p : ps) os << " Q_" << p << " |";
      os << "\n|" << std::string(5, '-') << "|";
      for (std::size_t i = 0; i < ps.size(); ++i) os << ":---:|";
      os << "\n";
      for (std::size_t r = 0; r < ns.size(); ++r) {
        os << "| " << ns[r] << " |";
        for (const auto& c : cells[r]) os << " " << c << " |";
        os << "\n";
      }
      break;
    }
    case TableFormat::kTex: {
      os << "\\begin{tabular}{c|";
      for (std::size_t i = 0; i < ps.size(); ++i) os << "c|";
      os << "}\n & ";
      for (std::size_t i = 0; i < ps.size(); ++i) os << "$\\mathbb{Q}_{" << ps[i] << "}$" << (i + 1 < ps.size() ? " & " : " \\\\ \\hline\n");
      for (std::size_t r = 0; r < ns.size(); ++r) {
        os << "$n=" << ns[r] << "$ & ";
        for (std::size_t c = 0; c < cells[r].size(); ++c) {
          std::string g = cells[r][c];
          if (g == "\u22645")
            g = "$\\leq 5$";
          else if (g == "\u22655")
            g = "$\\geq 5$";
          os << g << (c + 1 < cells[r].size() ? " & " : " \\\\ \\hline\n");
        }
      }
      os << "\\end{tabular}\n";
      break;
    }
    case TableFormat::kJson: {
      nlohmann::ordered_json j;
      j["ns"] = ns;
      j["ps"] = ps;
      j["cells"] = cells;
      os << j.dump(2) << "\n";
      break;
    }
  }
  return os.str();
}

}  // namespace ccg
