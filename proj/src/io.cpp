#include "twinchain/io.hpp"

#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <vector>

#include "twinchain/error.hpp"

namespace twinchain {

namespace {

using Json = nlohmann::json;

struct RawPoset {
  long long d = -1;
  std::vector<Cover> covers;
};

// Re-throws construction errors with the record name in front.
Poset build(const RawPoset& raw, const std::string& field) {
  if (raw.d < 0) throw ParseError(field + ".d: missing");
  if (raw.d > static_cast<long long>(kMaxGround)) {
    throw ParseError(field + ".d: " + std::to_string(raw.d) + " exceeds " + std::to_string(kMaxGround));
  }
  try {
    return Poset::from_covers(static_cast<std::size_t>(raw.d), raw.covers);
  } catch (const CycleError& e) {
    throw CycleError(field + ".covers: " + e.what());
  } catch (const IndexError& e) {
    throw IndexError(field + ".covers: " + e.what());
  }
}

PosetPair finish(const Poset& p, const Poset& q) {
  if (p.size() != q.size()) {
    throw DimensionMismatch("Q.d: " + std::to_string(q.size()) + " differs from P.d = " + std::to_string(p.size()));
  }
  return {p, q};
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

bool parse_int(const std::string& s, long long& out) {
  if (s.empty()) return false;
  std::size_t used = 0;
  try {
    out = std::stoll(s, &used);
  } catch (const std::exception&) {
    return false;
  }
  return used == s.size();
}

PosetPair parse_lines(std::string_view text) {
  std::vector<RawPoset> records;
  std::istringstream in{std::string(text)};
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const std::string body = trim(line);
    if (body.empty()) continue;
    if (auto eq = body.find('='); eq != std::string::npos) {
      if (trim(body.substr(0, eq)) != "d") throw ParseError("line " + std::to_string(number) + ": expected 'd = <n>'");
      if (records.size() == 2) throw ParseError("line " + std::to_string(number) + ": more than two posets");
      RawPoset r;
      const std::string field = (records.empty() ? "P" : "Q") + std::string(".d");
      if (!parse_int(trim(body.substr(eq + 1)), r.d) || r.d < 0) {
        throw ParseError(field + ": '" + trim(body.substr(eq + 1)) + "' is not a nonnegative integer (line " +
                         std::to_string(number) + ")");
      }
      records.push_back(std::move(r));
      continue;
    }
    if (records.empty()) throw ParseError("P.d: a cover appears before 'd = <n>' (line " + std::to_string(number) + ")");
    const std::string field = (records.size() == 1 ? "P" : "Q") + std::string(".covers");
    const auto lt = body.find('<');
    long long i = 0;
    long long j = 0;
    if (lt == std::string::npos || !parse_int(trim(body.substr(0, lt)), i) ||
        !parse_int(trim(body.substr(lt + 1)), j)) {
      throw ParseError(field + ": expected 'i < j' on line " + std::to_string(number) + ", got '" + body + "'");
    }
    if (i < 1 || j < 1 || i > records.back().d || j > records.back().d) {
      throw IndexError(field + ": index outside [1, " + std::to_string(records.back().d) + "] on line " +
                       std::to_string(number));
    }
    records.back().covers.emplace_back(static_cast<int>(i), static_cast<int>(j));
  }
  if (records.empty()) throw ParseError("P.d: missing");
  if (records.size() == 1) throw ParseError("Q.d: missing");
  Poset p = build(records[0], "P");
  return finish(p, build(records[1], "Q"));
}

RawPoset raw_from_json(const Json& j, const std::string& field) {
  if (!j.is_object()) throw ParseError(field + ": expected an object");
  RawPoset r;
  if (!j.contains("d")) throw ParseError(field + ".d: missing");
  const Json& d = j["d"];
  if (!d.is_number_integer() || d.get<long long>() < 0) throw ParseError(field + ".d: expected a nonnegative integer");
  r.d = d.get<long long>();
  const bool has_covers = j.contains("covers");
  const bool has_relation = j.contains("relation");
  if (has_covers && has_relation) throw ParseError(field + ": give either covers or relation, not both");
  const std::string key = has_relation ? "relation" : "covers";
  if (!has_covers && !has_relation) return r;
  const Json& list = j[key];
  if (!list.is_array()) throw ParseError(field + "." + key + ": expected a list of [i, j] pairs");
  for (std::size_t k = 0; k < list.size(); ++k) {
    const Json& pair = list[k];
    const std::string at = field + "." + key + "[" + std::to_string(k) + "]";
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() || !pair[1].is_number_integer()) {
      throw ParseError(at + ": expected [i, j] with integers");
    }
    const long long i = pair[0].get<long long>();
    const long long b = pair[1].get<long long>();
    if (i < 1 || b < 1 || i > r.d || b > r.d) throw IndexError(at + ": index outside [1, " + std::to_string(r.d) + "]");
    r.covers.emplace_back(static_cast<int>(i), static_cast<int>(b));
  }
  return r;
}

PosetPair parse_json(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  const Json* p = nullptr;
  const Json* q = nullptr;
  if (j.is_array()) {
    if (j.size() != 2) throw ParseError("expected exactly two poset records, got " + std::to_string(j.size()));
    p = &j[0];
    q = &j[1];
  } else if (j.is_object()) {
    if (!j.contains("P")) throw ParseError("P: missing");
    if (!j.contains("Q")) throw ParseError("Q: missing");
    p = &j["P"];
    q = &j["Q"];
  } else {
    throw ParseError("expected an object with P and Q, or a list of two records");
  }
  const RawPoset rp = raw_from_json(*p, "P");
  const RawPoset rq = raw_from_json(*q, "Q");
  Poset pp = build(rp, "P");
  return finish(pp, build(rq, "Q"));
}

std::string index_list(Mask m) {
  std::string s = "[";
  for (int i : mask_to_indices(m)) s += (s.size() > 1 ? ", " : "") + std::to_string(i);
  return s + "]";
}

}  // namespace

PosetPair parse_pair(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && (text[first] == '{' || text[first] == '[')) return parse_json(text);
  return parse_lines(text);
}

PosetPair read_pair_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_pair(buf.str());
}

std::string format_pair(const Poset& p, const Poset& q) {
  std::ostringstream out;
  for (const Poset* x : {&p, &q}) {
    out << "d = " << x->size() << '\n';
    for (auto [i, j] : x->covers()) out << i << " < " << j << '\n';
  }
  return out.str();
}

std::string format_family(const FacetFamily& family, bool json) {
  std::string out;
  for (const SignedChain& c : family.members) {
    if (json) {
      out += R"({"P": )" + index_list(c.p) + R"(, "Q": )" + index_list(c.q) + "}\n";
    } else {
      out += "P: " + index_list(c.p) + " Q: " + index_list(c.q) + "\n";
    }
  }
  return out;
}

}  // namespace twinchain
