#include "xmc/config_detect.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "xmc/errors.hpp"

namespace xmc {

std::string_view to_string(ConfigKind kind) {
  switch (kind) {
    case ConfigKind::Type1: return "type1";
    case ConfigKind::Type2: return "type2";
    case ConfigKind::Type3: return "type3";
    case ConfigKind::CrossingClique: return "clique";
  }
  return "?";
}

ConfigKind parse_config_kind(std::string_view text) {
  if (text == "1" || text == "type1") return ConfigKind::Type1;
  if (text == "2" || text == "type2") return ConfigKind::Type2;
  if (text == "3" || text == "type3") return ConfigKind::Type3;
  if (text == "clique") return ConfigKind::CrossingClique;
  throw Error(ErrorCode::InvalidArgument, "unknown configuration kind '" + std::string(text) + "'");
}

std::vector<int> ConfigWitness::tuple() const {
  std::vector<int> out(K1.begin(), K1.end());
  if (q) out.push_back(*q);
  out.insert(out.end(), K2.begin(), K2.end());
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::string join(const std::vector<int>& values) {
  if (values.empty()) return "-";
  std::string out;
  for (int v : values) out += (out.empty() ? "" : ",") + std::to_string(v);
  return out;
}

std::vector<int> split_list(std::string_view text) {
  std::vector<int> out;
  if (text == "-" || text.empty()) return out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto comma = text.find(',', start);
    std::string item(text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
    try {
      out.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, "bad index '" + item + "'");
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

// Cliques of `size` among `candidates` (ascending) in lexicographic order;
// stops as soon as `visit` returns true.
bool for_each_clique(const OrderedGraph& graph, const std::vector<int>& candidates, int size,
                     const std::function<bool(const std::vector<int>&)>& visit) {
  std::vector<int> current;
  std::function<bool(std::size_t)> extend = [&](std::size_t from) {
    if (static_cast<int>(current.size()) == size) return visit(current);
    for (std::size_t i = from; i < candidates.size(); ++i) {
      if (candidates.size() - i < static_cast<std::size_t>(size) - current.size()) return false;
      int v = candidates[i];
      bool fits = std::all_of(current.begin(), current.end(), [&](int u) { return graph.adjacent(u, v); });
      if (!fits) continue;
      current.push_back(v);
      if (extend(i + 1)) return true;
      current.pop_back();
    }
    return false;
  };
  return extend(0);
}

bool disjoint_from_all(const OrderedGraph& graph, int q, const std::vector<int>& set) {
  return std::none_of(set.begin(), set.end(), [&](int v) { return graph.adjacent(q, v); });
}

bool strictly_ascending(const std::vector<int>& v) {
  return std::adjacent_find(v.begin(), v.end(), [](int a, int b) { return a >= b; }) == v.end();
}

}  // namespace

std::string to_string(const ConfigWitness& w) {
  std::ostringstream out;
  out << "witness " << to_string(w.kind) << " k=" << w.k() << " K1=" << join(w.K1) << " K2=" << join(w.K2)
      << " q=" << (w.q ? std::to_string(*w.q) : "-");
  return out.str();
}

ConfigWitness parse_witness(std::string_view line) {
  std::istringstream in{std::string(line)};
  std::string head, kind;
  in >> head >> kind;
  if (head != "witness") throw Error(ErrorCode::ParseError, "expected 'witness'");
  ConfigWitness w;
  w.kind = parse_config_kind(kind);
  std::string field;
  int k = -1;
  while (in >> field) {
    auto eq = field.find('=');
    if (eq == std::string::npos) throw Error(ErrorCode::ParseError, "bad field '" + field + "'");
    std::string key = field.substr(0, eq);
    std::string value = field.substr(eq + 1);
    if (key == "k") {
      k = std::stoi(value);
    } else if (key == "K1") {
      w.K1 = split_list(value);
    } else if (key == "K2") {
      w.K2 = split_list(value);
    } else if (key == "q") {
      if (value != "-") w.q = std::stoi(value);
    } else {
      throw Error(ErrorCode::ParseError, "unknown field '" + key + "'");
    }
  }
  if (k >= 0 && k != w.k()) throw Error(ErrorCode::ParseError, "k does not match |K1|");
  return w;
}

std::vector<std::vector<int>> enumerate_cliques(const OrderedGraph& graph, std::span<const int> candidates, int size) {
  std::vector<int> sorted(candidates.begin(), candidates.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::vector<int>> out;
  for_each_clique(graph, sorted, size, [&](const std::vector<int>& c) {
    out.push_back(c);
    return false;
  });
  return out;
}

std::optional<ConfigWitness> detect_config(const CurveFamily& family, const OrderedGraph& graph, ConfigKind kind,
                                           int k, const DetectOptions& options) {
  if (k < 2) throw Error(ErrorCode::KTooSmall, "k must be at least 2");
  if (graph.size() > options.max_vertices) {
    throw Error(ErrorCode::BudgetExceeded, "detector capped at " + std::to_string(options.max_vertices) + " curves");
  }
  const std::vector<int>& all = graph.labels();
  auto x = [&](int label) -> const Rational& { return family.right_end_x(label); };
  auto x_min = [&](const std::vector<int>& set) { return min_right_end_x(family, set); };

  std::optional<ConfigWitness> found;
  switch (kind) {
    case ConfigKind::CrossingClique:
      for_each_clique(graph, all, k, [&](const std::vector<int>& clique) {
        found = ConfigWitness{kind, clique, {}, std::nullopt};
        return true;
      });
      break;

    case ConfigKind::Type1:
      for_each_clique(graph, all, k, [&](const std::vector<int>& clique) {
        const Rational bound = x_min(clique);
        for (int q : all) {
          if (q <= clique.back() || !disjoint_from_all(graph, q, clique) || !(x(q) < bound)) continue;
          found = ConfigWitness{kind, clique, {}, q};
          return true;
        }
        return false;
      });
      break;

    case ConfigKind::Type2:
      for (int q : all) {
        std::vector<int> candidates;
        for (int v : all) {
          if (v > q && !graph.adjacent(q, v) && x(q) < x(v)) candidates.push_back(v);
        }
        bool hit = for_each_clique(graph, candidates, k, [&](const std::vector<int>& clique) {
          found = ConfigWitness{kind, clique, {}, q};
          return true;
        });
        if (hit) break;
      }
      break;

    case ConfigKind::Type3:
      for_each_clique(graph, all, k, [&](const std::vector<int>& first) {
        const Rational bound = x_min(first);
        for (int q : all) {
          if (q <= first.back() || !disjoint_from_all(graph, q, first) || x(q) > bound) continue;
          std::vector<int> candidates;
          for (int v : all) {
            if (v > q && !graph.adjacent(q, v) && x(q) <= x(v)) candidates.push_back(v);
          }
          bool hit = for_each_clique(graph, candidates, k, [&](const std::vector<int>& second) {
            found = ConfigWitness{kind, first, second, q};
            return true;
          });
          if (hit) return true;
        }
        return false;
      });
      break;
  }
  return found;
}

bool verify_witness(const CurveFamily& family, const OrderedGraph& graph, const ConfigWitness& w) {
  auto valid = [&](int label) { return label >= 1 && static_cast<std::size_t>(label) <= family.size() && graph.contains(label); };
  auto all_valid = [&](const std::vector<int>& set) { return std::all_of(set.begin(), set.end(), valid); };
  if (w.K1.empty() || !all_valid(w.K1) || !all_valid(w.K2)) return false;
  if (!strictly_ascending(w.K1) || !strictly_ascending(w.K2)) return false;
  if (!is_clique(graph, w.K1)) return false;

  if (w.kind == ConfigKind::CrossingClique) return !w.q && w.K2.empty();
  if (!w.q || !valid(*w.q)) return false;
  const int q = *w.q;
  const Rational& xq = family.right_end_x(q);

  switch (w.kind) {
    case ConfigKind::Type1:
      return w.K2.empty() && q > w.K1.back() && disjoint_from_all(graph, q, w.K1) &&
             xq < min_right_end_x(family, w.K1);
    case ConfigKind::Type2:
      return w.K2.empty() && q < w.K1.front() && disjoint_from_all(graph, q, w.K1) &&
             xq < min_right_end_x(family, w.K1);
    case ConfigKind::Type3: {
      if (w.K2.size() != w.K1.size() || !is_clique(graph, w.K2)) return false;
      if (!(w.K1.back() < q && q < w.K2.front())) return false;
      if (!disjoint_from_all(graph, q, w.K1) || !disjoint_from_all(graph, q, w.K2)) return false;
      std::vector<int> both(w.K1);
      both.insert(both.end(), w.K2.begin(), w.K2.end());
      return xq <= min_right_end_x(family, both);
    }
    case ConfigKind::CrossingClique:
      break;
  }
  return false;
}

bool lemma_short_check(const CurveFamily& family, const OrderedGraph& graph, std::span<const int> K, int j) {
  std::vector<int> clique(K.begin(), K.end());
  std::sort(clique.begin(), clique.end());
  if (clique.size() < 2 || !is_clique(graph, clique)) {
    throw Error(ErrorCode::PreconditionFailed, "K must be a set of at least two pairwise crossing curves");
  }
  if (!(clique.front() < j && j < clique.back())) {
    throw Error(ErrorCode::PreconditionFailed, "j must lie strictly between min(K) and max(K)");
  }
  if (!graph.contains(j) || !disjoint_from_all(graph, j, clique)) {
    throw Error(ErrorCode::PreconditionFailed, "C_j must be disjoint from every member of K");
  }
  return family.right_end_x(j) <= min_right_end_x(family, clique);
}

}  // namespace xmc
