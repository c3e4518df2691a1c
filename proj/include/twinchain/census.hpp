#pragma once

// Exhaustive enumeration of small posets and comparability graphs, the
// bound census over all pairs of a given size, and table reproduction.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "twinchain/canonical.hpp"
#include "twinchain/error.hpp"
#include "twinchain/poset.hpp"
#include "twinchain/twinned.hpp"

namespace twinchain {

/// Poset enumeration covers d <= 7, or d <= 8 when extended.
inline constexpr std::size_t kMaxEnumerated = 7;
inline constexpr std::size_t kMaxEnumeratedExtended = 8;
/// All labeled posets are materialized only up to this size.
inline constexpr std::size_t kMaxLabeled = 6;
/// The census runs for 2 <= d <= 5, or d = 6 when extended.
inline constexpr std::size_t kMaxCensus = 5;
inline constexpr std::size_t kMaxCensusExtended = 6;

/// One representative per isomorphism class, ordered by canonical code.
/// Throws SizeError outside 1 <= d <= 7 (8 with extended).
std::vector<Poset> enumerate_posets(std::size_t d, bool extended = false);

/// Every poset on [d] (every labeling of every class), sorted by the
/// below-mask vector. The position in this list is a stable labeling id.
/// Throws SizeError outside 1 <= d <= 6.
std::vector<Poset> enumerate_labeled_posets(std::size_t d);

struct GraphClass {
  CanonicalCode graph_code;
  /// The class member with the smallest poset code.
  Poset representative;
};

/// Comparability graphs of d-element posets up to isomorphism, ordered by
/// graph code.
std::vector<GraphClass> comparability_graph_classes(std::size_t d, bool extended = false);

struct GraphCount {
  std::uint64_t graphs = 0;
  /// Unordered pairs with repetition, g(g+1)/2.
  std::uint64_t pairs = 0;
};

/// Throws SizeError outside 2 <= d <= 6, or d <= 8 with extended.
GraphCount count_comparability_graphs(std::size_t d, bool extended = false);

struct CensusRecord {
  std::size_t d = 0;
  /// Code of the comparability graph of P.
  CanonicalCode p_code;
  /// Position of Q in enumerate_labeled_posets(d).
  std::uint64_t q_relabel_id = 0;
  Poset p;
  Poset q;
  std::uint64_t n_facets = 0;
  BoundValue bound;
  bool is_max = false;
  bool equality = false;
};

struct CensusOptions {
  std::size_t d = 0;
  bool extended = false;
  /// Skip Q unless it has the smallest labeling id in its orbit under the
  /// automorphisms of G_P. Facet counts are constant on these orbits.
  bool prune_automorphisms = true;
  unsigned jobs = 1;
  /// When set, shards, the manifest and merged records are written here and
  /// shards already listed in the manifest are loaded instead of recomputed.
  std::filesystem::path out_dir;
  /// Replaces the bound; only useful to exercise the violation path.
  std::optional<BoundValue> bound_override;
};

struct CensusReport {
  std::size_t d = 0;
  BoundValue bound;
  std::uint64_t pairs_checked = 0;
  std::uint64_t shards = 0;
  std::uint64_t shards_resumed = 0;
  std::uint64_t max_count = 0;
  std::vector<CensusRecord> maxima;
  std::uint64_t equality_pairs = 0;
  /// Even d: every pair attaining the bound is an equality case and every
  /// equality case attains it. Odd d: always true.
  bool equality_verified = true;
  /// All records, sorted by (p_code, q_relabel_id).
  std::vector<CensusRecord> records;
};

class BoundViolation : public Error {
 public:
  BoundViolation(const std::string& what, Poset p, Poset q, std::uint64_t n_facets)
      : Error(ErrorCode::kBoundViolation, what), p_(std::move(p)), q_(std::move(q)), n_facets_(n_facets) {}
  const Poset& p() const noexcept { return p_; }
  const Poset& q() const noexcept { return q_; }
  std::uint64_t n_facets() const noexcept { return n_facets_; }

 private:
  Poset p_;
  Poset q_;
  std::uint64_t n_facets_;
};

/// Evaluates every pair (graph class of P, labeled Q). Throws SizeError,
/// BoundViolation or IoError.
CensusReport verify_theorem(const CensusOptions& options);

/// Aligned text summary of a census run.
std::string census_summary(const CensusReport& report);
/// One JSON object per line.
std::string census_record_json(const CensusRecord& record);

enum class TableId { kT1, kT3, kT4, kD2, kEX23 };

struct TableCell {
  std::string label;
  std::string computed;
  std::string golden;
  bool pass = false;
};

struct TableReport {
  TableId id;
  std::vector<TableCell> cells;
  bool passed() const noexcept;
};

std::string table_name(TableId id);
/// Accepts T1, T3, T4, D2, EX23 (any case). Throws ParseError.
TableId parse_table_id(const std::string& name);

/// Recomputes one table. long_run extends T1 to d = 7, 8.
TableReport reproduce_table(TableId id, bool long_run = false);
std::vector<TableReport> reproduce_tables(bool long_run = false);
/// Throws GoldenMismatch listing every failed cell.
void require_golden(const TableReport& report);

std::string format_table(const TableReport& report);
std::string table_json(const TableReport& report);

/// Σ_{i=0}^{d} C(d, i)·⌊3^{i/3}⌋.
std::uint64_t chain_side_sum(std::size_t d);

}  // namespace twinchain
