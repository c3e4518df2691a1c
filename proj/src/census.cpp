#include "twinchain/census.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <fstream>
#include <iomanip>
#include <map>
#include <mutex>
#include <nlohmann/json.hpp>
#include <set>
#include <sstream>
#include <thread>
#include <unordered_map>

#include "twinchain/chains.hpp"
#include "twinchain/hull.hpp"

namespace twinchain {

namespace {

using Json = nlohmann::ordered_json;
using Perm = std::vector<std::size_t>;

void require_range(std::size_t d, std::size_t lo, std::size_t hi, std::size_t hi_extended, bool extended,
                   const std::string& what) {
  const std::size_t top = extended ? hi_extended : hi;
  if (d < lo || d > top) {
    std::string msg = what + " supports " + std::to_string(lo) + " <= d <= " + std::to_string(top) + ", got " +
                      std::to_string(d);
    if (!extended && d > hi && d <= hi_extended) msg += " (needs the extended flag)";
    throw SizeError(msg);
  }
}

// Posets of size d+1 are grown from class representatives of size d by adding
// a new maximal element above a down-set. Results are cached per size.
std::mutex cache_mutex;
std::map<std::size_t, std::vector<Poset>> class_cache;
std::map<std::size_t, std::vector<Poset>> labeled_cache;

const std::vector<Poset>& classes_of_size(std::size_t d) {
  auto it = class_cache.find(d);
  if (it != class_cache.end()) return it->second;
  std::map<CanonicalCode, Poset> found;
  if (d == 1) {
    found.emplace(canonical_code(Poset::antichain(1)), Poset::antichain(1));
  } else {
    for (const Poset& base : classes_of_size(d - 1)) {
      std::vector<Mask> below = base.below_masks();
      for (Mask a : antichains(base).members) {
        Mask down = a;
        for (Mask m = a; m != 0; m &= m - 1) down |= base.below(static_cast<std::size_t>(std::countr_zero(m)));
        below.push_back(down);
        Poset grown = Poset::from_below_masks(below);
        below.pop_back();
        found.try_emplace(canonical_code(grown), std::move(grown));
      }
    }
  }
  std::vector<Poset> out;
  out.reserve(found.size());
  for (auto& [code, p] : found) out.push_back(std::move(p));
  return class_cache.emplace(d, std::move(out)).first->second;
}

std::uint64_t labeled_key(const Poset& p) {
  std::uint64_t key = 0;
  for (std::size_t i = 0; i < p.size(); ++i) key |= static_cast<std::uint64_t>(p.below(i)) << (8 * i);
  return key;
}

// A small generating set of the automorphism group: keep an automorphism
// only if it is not already generated.
std::vector<Perm> group_generators(const std::vector<Perm>& group) {
  if (group.empty()) return {};
  const std::size_t d = group.front().size();
  std::set<Perm> generated;
  Perm identity(d);
  for (std::size_t i = 0; i < d; ++i) identity[i] = i;
  generated.insert(identity);
  std::vector<Perm> gens;
  for (const Perm& s : group) {
    if (generated.count(s) != 0) continue;
    gens.push_back(s);
    std::vector<Perm> frontier(generated.begin(), generated.end());
    while (!frontier.empty()) {
      std::vector<Perm> next;
      for (const Perm& x : frontier) {
        for (const Perm& g : gens) {
          Perm y(d);
          for (std::size_t i = 0; i < d; ++i) y[i] = g[x[i]];
          if (generated.insert(y).second) next.push_back(std::move(y));
        }
      }
      frontier = std::move(next);
    }
  }
  return gens;
}

Json relation_json(const Poset& p) {
  Json rel = Json::array();
  for (auto [i, j] : p.relation()) rel.push_back({i, j});
  return rel;
}

std::string shard_name(std::size_t index) {
  std::ostringstream s;
  s << "shard-" << std::setw(4) << std::setfill('0') << index << ".jsonl";
  return s.str();
}

std::string manifest_header(const CensusOptions& o) {
  return "twinchain census d=" + std::to_string(o.d) + " prune=" + (o.prune_automorphisms ? "1" : "0");
}

struct ShardContext {
  std::size_t d;
  BoundValue bound;
  const std::vector<GraphClass>* classes;
  const std::vector<Poset>* labeled;
  const std::vector<ChainTable>* tables;
  const std::unordered_map<std::uint64_t, std::uint32_t>* index;
  bool prune;
};

void check_bound(const BoundValue& bound, const CensusRecord& r) {
  if (!bound.admits(r.n_facets)) {
    throw BoundViolation("pair with " + std::to_string(r.n_facets) + " facets exceeds the bound " +
                             bound.to_string() + " for d = " + std::to_string(r.d),
                         r.p, r.q, r.n_facets);
  }
}

std::vector<CensusRecord> run_shard(const ShardContext& ctx, std::size_t s) {
  const GraphClass& cls = (*ctx.classes)[s];
  const std::vector<Poset>& labeled = *ctx.labeled;
  std::vector<char> skip(labeled.size(), 0);
  std::vector<Perm> gens;
  if (ctx.prune) gens = group_generators(graph_automorphisms(comparability_graph(cls.representative)));

  const ChainTable p_table(cls.representative);
  FacetCounter counter(ctx.d);
  const bool even = ctx.d % 2 == 0;
  std::vector<CensusRecord> out;
  for (std::size_t id = 0; id < labeled.size(); ++id) {
    if (skip[id]) continue;
    if (!gens.empty()) {
      // id is the smallest member of its orbit; mark the rest.
      std::vector<std::size_t> stack{id};
      skip[id] = 1;
      while (!stack.empty()) {
        const std::size_t cur = stack.back();
        stack.pop_back();
        for (const Perm& g : gens) {
          const std::uint32_t img = ctx.index->at(labeled_key(labeled[cur].relabeled(g)));
          if (!skip[img]) {
            skip[img] = 1;
            stack.push_back(img);
          }
        }
      }
    }
    CensusRecord r;
    r.d = ctx.d;
    r.p_code = cls.graph_code;
    r.q_relabel_id = id;
    r.p = cls.representative;
    r.q = labeled[id];
    r.n_facets = counter.count(p_table, (*ctx.tables)[id]);
    r.bound = ctx.bound;
    r.equality = even && is_equality_case(r.p, r.q);
    check_bound(ctx.bound, r);
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<CensusRecord> load_shard(const ShardContext& ctx, std::size_t s, const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw IoError("cannot read " + file.string());
  const GraphClass& cls = (*ctx.classes)[s];
  std::vector<CensusRecord> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    Json j;
    try {
      j = Json::parse(line);
      CensusRecord r;
      r.d = j.at("d").get<std::size_t>();
      r.q_relabel_id = j.at("q_relabel_id").get<std::uint64_t>();
      r.n_facets = j.at("n_facets").get<std::uint64_t>();
      r.equality = j.at("equality").get<bool>();
      if (r.d != ctx.d || j.at("p_code").get<std::string>() != cls.graph_code.hex() ||
          r.q_relabel_id >= ctx.labeled->size()) {
        throw IoError(file.string() + " does not match this census");
      }
      r.p_code = cls.graph_code;
      r.p = cls.representative;
      r.q = (*ctx.labeled)[r.q_relabel_id];
      r.bound = ctx.bound;
      check_bound(ctx.bound, r);
      out.push_back(std::move(r));
    } catch (const Json::exception& e) {
      throw IoError(file.string() + ": malformed record: " + e.what());
    }
  }
  return out;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw IoError("cannot write " + tmp.string());
    out << text;
    if (!out) throw IoError("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

std::set<std::size_t> read_manifest(const std::filesystem::path& path, const std::string& header) {
  std::set<std::size_t> done;
  std::ifstream in(path);
  if (!in) return done;
  std::string line;
  if (!std::getline(in, line)) return done;
  if (line != header) throw IoError(path.string() + " belongs to a different census (" + line + ")");
  while (std::getline(in, line)) {
    std::istringstream fields(line);
    std::string word;
    std::size_t index = 0;
    if (fields >> word >> index && word == "shard") done.insert(index);
  }
  return done;
}

}  // namespace

std::vector<Poset> enumerate_posets(std::size_t d, bool extended) {
  require_range(d, 1, kMaxEnumerated, kMaxEnumeratedExtended, extended, "poset enumeration");
  std::lock_guard lock(cache_mutex);
  return classes_of_size(d);
}

std::vector<Poset> enumerate_labeled_posets(std::size_t d) {
  require_range(d, 1, kMaxLabeled, kMaxLabeled, false, "labeled poset enumeration");
  std::lock_guard lock(cache_mutex);
  auto it = labeled_cache.find(d);
  if (it != labeled_cache.end()) return it->second;
  std::set<std::vector<Mask>> seen;
  Perm perm(d);
  for (const Poset& p : classes_of_size(d)) {
    for (std::size_t i = 0; i < d; ++i) perm[i] = i;
    do {
      seen.insert(p.relabeled(perm).below_masks());
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  std::vector<Poset> out;
  out.reserve(seen.size());
  for (const auto& below : seen) out.push_back(Poset::from_below_masks(below));
  return labeled_cache.emplace(d, std::move(out)).first->second;
}

std::vector<GraphClass> comparability_graph_classes(std::size_t d, bool extended) {
  std::map<CanonicalCode, std::pair<CanonicalCode, Poset>> best;
  for (const Poset& p : enumerate_posets(d, extended)) {
    CanonicalCode g = graph_canonical_code(comparability_graph(p));
    CanonicalCode c = canonical_code(p);
    auto it = best.find(g);
    if (it == best.end()) {
      best.emplace(std::move(g), std::make_pair(std::move(c), p));
    } else if (c < it->second.first) {
      it->second = {std::move(c), p};
    }
  }
  std::vector<GraphClass> out;
  out.reserve(best.size());
  for (auto& [g, entry] : best) out.push_back({g, entry.second});
  return out;
}

GraphCount count_comparability_graphs(std::size_t d, bool extended) {
  require_range(d, 2, kMaxLabeled, kMaxEnumeratedExtended, extended, "comparability graph counting");
  const std::uint64_t g = comparability_graph_classes(d, extended).size();
  return {g, g * (g + 1) / 2};
}

CensusReport verify_theorem(const CensusOptions& options) {
  require_range(options.d, 2, kMaxCensus, kMaxCensusExtended, options.extended, "the census");
  const std::size_t d = options.d;
  const BoundValue bnd = options.bound_override.value_or(bound(d));
  const std::vector<GraphClass> classes = comparability_graph_classes(d);
  const std::vector<Poset> labeled = enumerate_labeled_posets(d);

  std::unordered_map<std::uint64_t, std::uint32_t> index;
  index.reserve(labeled.size());
  std::vector<ChainTable> tables;
  tables.reserve(labeled.size());
  for (std::size_t i = 0; i < labeled.size(); ++i) {
    index.emplace(labeled_key(labeled[i]), static_cast<std::uint32_t>(i));
    tables.emplace_back(labeled[i]);
  }
  const ShardContext ctx{d, bnd, &classes, &labeled, &tables, &index, options.prune_automorphisms};

  const bool persist = !options.out_dir.empty();
  const std::string header = manifest_header(options);
  const std::filesystem::path manifest = options.out_dir / "manifest.txt";
  std::set<std::size_t> done;
  if (persist) {
    std::error_code ec;
    std::filesystem::create_directories(options.out_dir, ec);
    if (ec) throw IoError("cannot create " + options.out_dir.string() + ": " + ec.message());
    done = read_manifest(manifest, header);
    if (!std::filesystem::exists(manifest)) write_file(manifest, header + "\n");
  }

  const std::size_t n_shards = classes.size();
  std::vector<std::vector<CensusRecord>> results(n_shards);
  std::vector<std::exception_ptr> failures(n_shards);
  std::vector<char> resumed(n_shards, 0);
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};
  std::mutex manifest_mutex;

  auto worker = [&] {
    while (!stop.load()) {
      const std::size_t s = next.fetch_add(1);
      if (s >= n_shards) return;
      try {
        const std::filesystem::path file = options.out_dir / shard_name(s);
        if (persist && done.count(s) != 0 && std::filesystem::exists(file)) {
          results[s] = load_shard(ctx, s, file);
          resumed[s] = 1;
          continue;
        }
        results[s] = run_shard(ctx, s);
        if (persist) {
          std::string text;
          for (const auto& r : results[s]) text += census_record_json(r) + "\n";
          write_file(file, text);
          std::lock_guard lock(manifest_mutex);
          std::ofstream m(manifest, std::ios::app);
          m << "shard " << s << ' ' << classes[s].graph_code.hex() << ' ' << results[s].size() << '\n';
          if (!m) throw IoError("cannot append to " + manifest.string());
        }
      } catch (...) {
        failures[s] = std::current_exception();
        stop.store(true);
      }
    }
  };

  const unsigned jobs = std::max(1U, std::min<unsigned>(options.jobs, static_cast<unsigned>(n_shards)));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (const auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }

  CensusReport report;
  report.d = d;
  report.bound = bnd;
  report.shards = n_shards;
  for (std::size_t s = 0; s < n_shards; ++s) {
    report.shards_resumed += resumed[s];
    for (auto& r : results[s]) report.records.push_back(std::move(r));
  }
  // Classes are ordered by graph code and shards list Q by id already.
  std::sort(report.records.begin(), report.records.end(), [](const CensusRecord& a, const CensusRecord& b) {
    return std::tie(a.p_code, a.q_relabel_id) < std::tie(b.p_code, b.q_relabel_id);
  });
  report.pairs_checked = report.records.size();
  for (const auto& r : report.records) report.max_count = std::max(report.max_count, r.n_facets);
  for (auto& r : report.records) {
    r.is_max = r.n_facets == report.max_count;
    if (r.is_max) report.maxima.push_back(r);
    if (r.equality) ++report.equality_pairs;
    if (d % 2 == 0 && bnd.attained_by(r.n_facets) != r.equality) report.equality_verified = false;
  }

  if (persist) {
    std::string text;
    for (const auto& r : report.records) text += census_record_json(r) + "\n";
    write_file(options.out_dir / "records.jsonl", text);
    write_file(options.out_dir / "summary.txt", census_summary(report));
  }
  return report;
}

std::string census_record_json(const CensusRecord& r) {
  Json j;
  j["d"] = r.d;
  j["p_code"] = r.p_code.hex();
  j["q_relabel_id"] = r.q_relabel_id;
  j["p"] = relation_json(r.p);
  j["q"] = relation_json(r.q);
  j["n_facets"] = r.n_facets;
  j["bound"] = r.bound.to_string();
  j["is_max"] = r.is_max;
  j["equality"] = r.equality;
  return j.dump();
}

std::string census_summary(const CensusReport& r) {
  std::ostringstream out;
  std::set<CanonicalCode> max_classes;
  for (const auto& m : r.maxima) max_classes.insert(m.p_code);
  out << "d = " << r.d << '\n';
  out << "bound = " << r.bound.to_string() << '\n';
  out << "pairs checked = " << r.pairs_checked << '\n';
  out << "shards = " << r.shards << " (resumed " << r.shards_resumed << ")\n";
  out << "max = " << r.max_count << " at " << r.maxima.size() << (r.maxima.size() == 1 ? " pair" : " pairs")
      << " over " << max_classes.size() << (max_classes.size() == 1 ? " class of P" : " classes of P") << '\n';
  out << "bound attained: " << (r.bound.attained_by(r.max_count) ? "yes" : "no") << '\n';
  if (r.d % 2 == 0) {
    out << "equality pairs = " << r.equality_pairs << '\n';
    out << "equality <=> stacked I_2 twin condition: " << (r.equality_verified ? "verified" : "FAILED") << '\n';
  }
  return out.str();
}

// Tables.

namespace {

std::string set_text(const std::set<std::uint64_t>& values) {
  if (values.size() == 1) return std::to_string(*values.begin());
  std::string s = "{";
  for (auto v : values) s += (s.size() > 1 ? ", " : "") + std::to_string(v);
  return s + "}";
}

std::string chain_text(const SignedChain& c) {
  std::string s = "{";
  auto add = [&](Mask m, char side) {
    for (int i : mask_to_indices(m)) s += (s.size() > 1 ? "," : "") + std::string(1, side) + std::to_string(i);
  };
  add(c.p, 'p');
  add(c.q, 'q');
  return s + "}";
}

std::string chains_text(std::vector<SignedChain> chains) {
  std::sort(chains.begin(), chains.end(), output_order);
  std::string s;
  for (const auto& c : chains) s += (s.empty() ? "" : " ") + chain_text(c);
  return s;
}

// "p1 q3" -> SignedChain.
SignedChain chain_from(const std::string& spec) {
  SignedChain c;
  std::istringstream in(spec);
  std::string tok;
  while (in >> tok) (tok[0] == 'p' ? c.p : c.q) |= bit(static_cast<std::size_t>(std::stoi(tok.substr(1)) - 1));
  return c;
}

void add_cell(TableReport& t, std::string label, std::string computed, std::string golden) {
  const bool pass = computed == golden;
  t.cells.push_back({std::move(label), std::move(computed), std::move(golden), pass});
}

TableReport table_t1(bool long_run) {
  static const std::uint64_t graphs[] = {2, 4, 11, 33, 144, 824, 6793};
  static const std::uint64_t pairs[] = {3, 10, 66, 561, 10440, 339900, 23075821};
  TableReport t{TableId::kT1, {}};
  const std::size_t top = long_run ? 8 : 6;
  for (std::size_t d = 2; d <= top; ++d) {
    const GraphCount c = count_comparability_graphs(d, long_run);
    add_cell(t, "d=" + std::to_string(d) + " graphs", std::to_string(c.graphs), std::to_string(graphs[d - 2]));
    add_cell(t, "d=" + std::to_string(d) + " pairs", std::to_string(c.pairs), std::to_string(pairs[d - 2]));
  }
  return t;
}

TableReport table_t3() {
  static const std::uint64_t sums[] = {13, 82, 496, 2971, 17756, 106522, 640651};
  static const std::uint64_t bounds[] = {14, 84, 504, 3024, 18144, 108864, 653184};
  TableReport t{TableId::kT3, {}};
  for (std::size_t k = 0; k < 7; ++k) {
    const std::size_t d = 3 + 2 * k;
    const std::uint64_t sum = chain_side_sum(d);
    const BoundValue b = bound(d);
    const std::string tag = "d=" + std::to_string(d);
    add_cell(t, tag + " sum", std::to_string(sum), std::to_string(sums[k]));
    add_cell(t, tag + " bound", b.to_string(), std::to_string(bounds[k]));
    add_cell(t, tag + " sum < bound", b.admits(sum) && !b.attained_by(sum) ? "true" : "false", "true");
  }
  return t;
}

// Cells of the d = 3 table: the set of facet counts of Γ(P, Q) over every
// labeled Q in the given comparability class.
TableReport table_t4() {
  struct Named {
    std::string name;
    Poset poset;
  };
  const Named posets[] = {
      {"1+C2", disjoint_union(Poset::chain(1), Poset::chain(2))},
      {"C3", Poset::chain(3)},
      {"I3", Poset::antichain(3)},
      {"1(+)I2", ordinal_sum(Poset::chain(1), Poset::antichain(2))},
  };
  // golden[row = Q][col = P]; "<=12" is an upper bound on every labeling.
  const char* golden[4][4] = {
      {"<=12", "11", "<=12", "<=12"},
      {"", "8", "13", "10"},
      {"", "", "12", "13"},
      {"", "", "", "{11, 12}"},
  };
  const std::vector<Poset> labeled = enumerate_labeled_posets(3);
  TableReport t{TableId::kT4, {}};
  for (std::size_t row = 0; row < 4; ++row) {
    const CanonicalCode q_class = graph_canonical_code(comparability_graph(posets[row].poset));
    for (std::size_t col = row; col < 4; ++col) {
      std::set<std::uint64_t> values;
      for (const Poset& q : labeled) {
        if (graph_canonical_code(comparability_graph(q)) == q_class) values.insert(facet_count(posets[col].poset, q));
      }
      const std::string label = "P=" + posets[col].name + ", Q=" + posets[row].name;
      const std::string g = golden[row][col];
      if (g.rfind("<=", 0) == 0) {
        const std::uint64_t cap = std::stoull(g.substr(2));
        t.cells.push_back({label, set_text(values), g, *values.rbegin() <= cap});
      } else {
        add_cell(t, label, set_text(values), g);
      }
    }
  }
  return t;
}

TableReport table_d2() {
  struct Case {
    std::string name;
    Poset p;
    Poset q;
    std::uint64_t golden;
  };
  const Case cases[] = {
      {"C2,C2", Poset::chain(2), Poset::chain(2), 4},
      {"I2,C2", Poset::antichain(2), Poset::chain(2), 5},
      {"I2,I2", Poset::antichain(2), Poset::antichain(2), 6},
  };
  TableReport t{TableId::kD2, {}};
  for (const Case& c : cases) {
    const GeometryReport g = verify_geometry(c.p, c.q, CheckLevel::kComplete);
    add_cell(t, c.name + " facets", std::to_string(facet_count(c.p, c.q)), std::to_string(c.golden));
    add_cell(t, c.name + " vertices", std::to_string(g.vertex_count), std::to_string(c.golden));
    add_cell(t, c.name + " hull agrees", g.passed() ? "true" : "false", "true");
  }
  return t;
}

TableReport table_ex23() {
  // p3 below p1 and p2; Q differs between the two cases.
  const Cover p_covers[] = {{3, 1}, {3, 2}};
  const Cover qa_covers[] = {{3, 1}, {3, 2}};
  const Cover qb_covers[] = {{2, 1}, {2, 3}};
  const Poset p = Poset::from_covers(3, p_covers);
  struct Case {
    std::string name;
    Poset q;
    std::uint64_t count;
    std::vector<std::vector<std::string>> columns;  // indexed by W as a mask
  };
  const Case cases[] = {
      {"(a)",
       Poset::from_covers(3, qa_covers),
       12,
       {{"q1 q3", "q2 q3"},
        {"p1 q2 q3"},
        {"p2 q1 q3"},
        {"p1 q3", "p2 q3"},
        {"p3 q1", "p3 q2"},
        {"p1 p3 q2"},
        {"p2 p3 q1"},
        {"p1 p3", "p2 p3"}}},
      {"(b)",
       Poset::from_covers(3, qb_covers),
       11,
       {{"q1 q2", "q2 q3"},
        {"p1 q2 q3"},
        {"p2 q1", "p2 q3"},
        {"p1 q3", "p2 q3"},
        {"p3 q1 q2"},
        {"p1 p3 q2"},
        {"p2 p3 q1"},
        {"p1 p3", "p2 p3"}}},
  };
  TableReport t{TableId::kEX23, {}};
  for (const Case& c : cases) {
    std::set<SignedChain> golden_union;
    std::uint64_t listed = 0;
    for (Mask w = 0; w < 8; ++w) {
      std::vector<SignedChain> golden;
      for (const auto& spec : c.columns[w]) golden.push_back(chain_from(spec));
      golden_union.insert(golden.begin(), golden.end());
      const auto computed = delta_maximal_chains(p, c.q, w);
      listed += computed.size();
      std::string wname = "{";
      for (int i : mask_to_indices(w)) wname += (wname.size() > 1 ? "," : "") + std::to_string(i);
      add_cell(t, c.name + " W=" + wname + "}", chains_text(computed), chains_text(golden));
    }
    const FacetFamily family = facet_chains(p, c.q);
    add_cell(t, c.name + " union", chains_text(family.members),
             chains_text({golden_union.begin(), golden_union.end()}));
    add_cell(t, c.name + " N", std::to_string(family.size()), std::to_string(c.count));
    add_cell(t, c.name + " listed over W", std::to_string(listed), "12");
  }
  return t;
}

}  // namespace

bool TableReport::passed() const noexcept {
  return std::all_of(cells.begin(), cells.end(), [](const TableCell& c) { return c.pass; });
}

std::string table_name(TableId id) {
  switch (id) {
    case TableId::kT1:
      return "T1";
    case TableId::kT3:
      return "T3";
    case TableId::kT4:
      return "T4";
    case TableId::kD2:
      return "D2";
    case TableId::kEX23:
      return "EX23";
  }
  return "?";
}

TableId parse_table_id(const std::string& name) {
  std::string upper = name;
  std::transform(upper.begin(), upper.end(), upper.begin(), [](unsigned char ch) { return std::toupper(ch); });
  for (TableId id : {TableId::kT1, TableId::kT3, TableId::kT4, TableId::kD2, TableId::kEX23}) {
    if (table_name(id) == upper) return id;
  }
  throw ParseError("unknown table '" + name + "' (expected T1, T3, T4, D2 or EX23)");
}

TableReport reproduce_table(TableId id, bool long_run) {
  switch (id) {
    case TableId::kT1:
      return table_t1(long_run);
    case TableId::kT3:
      return table_t3();
    case TableId::kT4:
      return table_t4();
    case TableId::kD2:
      return table_d2();
    case TableId::kEX23:
      return table_ex23();
  }
  throw ParseError("unknown table id");
}

std::vector<TableReport> reproduce_tables(bool long_run) {
  std::vector<TableReport> out;
  for (TableId id : {TableId::kT1, TableId::kT3, TableId::kT4, TableId::kD2, TableId::kEX23}) {
    out.push_back(reproduce_table(id, long_run));
  }
  return out;
}

void require_golden(const TableReport& report) {
  std::string diff;
  for (const auto& c : report.cells) {
    if (!c.pass) diff += "\n  " + c.label + ": computed " + c.computed + ", expected " + c.golden;
  }
  if (!diff.empty()) throw GoldenMismatch(table_name(report.id) + " differs from the reference values:" + diff);
}

std::string format_table(const TableReport& report) {
  std::size_t w_label = 5;
  std::size_t w_computed = 8;
  std::size_t w_golden = 8;
  for (const auto& c : report.cells) {
    w_label = std::max(w_label, c.label.size());
    w_computed = std::max(w_computed, c.computed.size());
    w_golden = std::max(w_golden, c.golden.size());
  }
  std::ostringstream out;
  out << table_name(report.id) << '\n';
  out << "  " << std::left << std::setw(static_cast<int>(w_label)) << "cell" << "  "
      << std::setw(static_cast<int>(w_computed)) << "computed" << "  " << std::setw(static_cast<int>(w_golden))
      << "expected" << "  result\n";
  for (const auto& c : report.cells) {
    out << "  " << std::setw(static_cast<int>(w_label)) << c.label << "  " << std::setw(static_cast<int>(w_computed))
        << c.computed << "  " << std::setw(static_cast<int>(w_golden)) << c.golden << "  " << (c.pass ? "PASS" : "FAIL")
        << '\n';
  }
  return out.str();
}

std::string table_json(const TableReport& report) {
  std::string out;
  for (const auto& c : report.cells) {
    Json j;
    j["table"] = table_name(report.id);
    j["cell"] = c.label;
    j["computed"] = c.computed;
    j["expected"] = c.golden;
    j["pass"] = c.pass;
    out += j.dump() + "\n";
  }
  return out;
}

std::uint64_t chain_side_sum(std::size_t d) {
  std::uint64_t total = 0;
  std::uint64_t binom = 1;
  for (std::size_t i = 0; i <= d; ++i) {
    total += binom * moon_moser_cap(i);
    binom = binom * (d - i) / (i + 1);
  }
  return total;
}

}  // namespace twinchain
