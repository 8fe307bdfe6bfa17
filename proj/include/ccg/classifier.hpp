#pragma once

// Maps (p, n) to a connectivity/diameter verdict for the commuting graph of
// n-by-n matrices over Q_p by intersecting the intervals contributed by
// every applicable known result, with a full rule trace.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ccg {

struct DiameterInterval {
  int lo = 4;
  int hi = 6;
};

struct RuleContribution {
  std::string rule;      // "R0".."R7"
  std::string citation;  // the mathematical fact applied
  std::string detail;    // instance-specific evidence
  bool disconnects = false;
  DiameterInterval contribution;  // meaningful when !disconnects
};

struct DiameterVerdict {
  std::uint64_t p = 0;
  int n = 0;
  bool connected = false;
  DiameterInterval bounds;  // valid when connected
  std::optional<std::string> nonclique_note;
  std::vector<RuleContribution> trace;

  bool exact() const { return connected && bounds.lo == bounds.hi; }
  // Table glyph: "X", exact digit, half-bounded, or "?".
  std::string glyph() const;
};

struct FFDiameterEntry {
  std::uint64_t p = 0;
  int n = 0;
  bool connected = false;
  int diameter = 0;  // meaningful when connected
  std::string provenance;
};

// Registry of known finite-field commuting-graph diameters. Ships with a
// single literature value, Gamma(F_2,15) = 5; everything else must be
// added explicitly (normally from graph-engine output).
class KnownFFDiameters {
 public:
  static KnownFFDiameters defaults();
  static KnownFFDiameters empty() { return KnownFFDiameters(); }

  void add(FFDiameterEntry e);
  std::optional<FFDiameterEntry> lookup(std::uint64_t p, int n) const;
  const std::vector<FFDiameterEntry>& entries() const { return entries_; }

 private:
  std::vector<FFDiameterEntry> entries_;
};

// Bitmask hook for ablation tests: bit i enables rule R(i+2), i = 0..5.
inline constexpr unsigned kAllRules = 0x3F;

DiameterVerdict classify(std::uint64_t p, int n, const KnownFFDiameters& known = KnownFFDiameters::defaults(),
                         unsigned rule_mask = kAllRules);

// Component annotation for disconnected graphs with n >= 3: all but one
// component is a clique; the remaining one has diameter 4 (n prime),
// at least 5 (n = p^2), or is not pinned down by known results (n = p^k,
// k >= 3).
std::optional<std::string> nonclique_annotation(std::uint64_t p, int n);

enum class TableFormat { kMarkdown, kTex, kJson };

std::string render_table(const std::vector<int>& ns, const std::vector<std::uint64_t>& ps, TableFormat format,
                         const KnownFFDiameters& known = KnownFFDiameters::defaults());

const std::vector<int>& table1_default_ns();
const std::vector<std::uint64_t>& table1_default_ps();

}  // namespace ccg
