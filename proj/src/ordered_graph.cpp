#include "xmc/ordered_graph.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "xmc/errors.hpp"

namespace xmc {

OrderedGraph::OrderedGraph(std::vector<int> labels, std::span<const Edge> edges) : labels_(std::move(labels)) {
  std::sort(labels_.begin(), labels_.end());
  labels_.erase(std::unique(labels_.begin(), labels_.end()), labels_.end());
  const std::size_t n = labels_.size();
  matrix_.assign(n * n, 0);
  adjacency_.assign(n, {});
  for (const auto& [u, v] : edges) {
    if (u == v) throw Error(ErrorCode::InvalidArgument, "self-loop at " + std::to_string(u));
    int i = position(u);
    int j = position(v);
    if (i < 0 || j < 0) {
      throw Error(ErrorCode::InvalidArgument, "edge " + std::to_string(u) + "-" + std::to_string(v) + " leaves the vertex set");
    }
    char& cell = matrix_[static_cast<std::size_t>(i) * n + j];
    if (cell) continue;
    cell = 1;
    matrix_[static_cast<std::size_t>(j) * n + i] = 1;
    ++edge_count_;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (matrix_[i * n + j]) adjacency_[i].push_back(static_cast<int>(j));
    }
  }
}

OrderedGraph OrderedGraph::with_vertices(int n, std::span<const Edge> edges) {
  std::vector<int> labels(static_cast<std::size_t>(std::max(n, 0)));
  for (int i = 0; i < n; ++i) labels[static_cast<std::size_t>(i)] = i + 1;
  return OrderedGraph(std::move(labels), edges);
}

OrderedGraph OrderedGraph::complete(int n) {
  std::vector<Edge> edges;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) edges.emplace_back(i, j);
  }
  return with_vertices(n, edges);
}

int OrderedGraph::position(int label) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
  if (it == labels_.end() || *it != label) return -1;
  return static_cast<int>(it - labels_.begin());
}

bool OrderedGraph::contains(int label) const { return position(label) >= 0; }

bool OrderedGraph::adjacent(int u, int v) const {
  int i = position(u);
  int j = position(v);
  return i >= 0 && j >= 0 && adjacent_at(i, j);
}

std::vector<int> OrderedGraph::neighbors(int label) const {
  std::vector<int> out;
  int i = position(label);
  if (i < 0) return out;
  for (int j : adjacency_[static_cast<std::size_t>(i)]) out.push_back(labels_[static_cast<std::size_t>(j)]);
  return out;
}

int OrderedGraph::degree(int label) const {
  int i = position(label);
  return i < 0 ? 0 : static_cast<int>(adjacency_[static_cast<std::size_t>(i)].size());
}

std::vector<Edge> OrderedGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    for (int j : adjacency_[i]) {
      if (static_cast<std::size_t>(j) > i) out.emplace_back(labels_[i], labels_[static_cast<std::size_t>(j)]);
    }
  }
  return out;
}

OrderedGraph OrderedGraph::induced(std::span<const int> labels) const {
  std::vector<int> keep;
  for (int l : labels) {
    if (contains(l)) keep.push_back(l);
  }
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  std::vector<Edge> sub_edges;
  for (std::size_t a = 0; a < keep.size(); ++a) {
    int i = position(keep[a]);
    for (std::size_t b = a + 1; b < keep.size(); ++b) {
      if (adjacent_at(i, position(keep[b]))) sub_edges.emplace_back(keep[a], keep[b]);
    }
  }
  return OrderedGraph(std::move(keep), sub_edges);
}

bool IntervalSpec::contains(int i) const {
  if (lo && (lo_closed ? i < *lo : i <= *lo)) return false;
  if (hi && (hi_closed ? i > *hi : i >= *hi)) return false;
  return true;
}

OrderedGraph build_intersection_graph(std::span<const PolyCurve> curves) {
  std::vector<int> labels;
  labels.reserve(curves.size());
  for (const PolyCurve& c : curves) labels.push_back(c.id);
  auto pairs = pairwise_crossing_pairs(curves);
  std::vector<Edge> edges(pairs.begin(), pairs.end());
  return OrderedGraph(std::move(labels), edges);
}

OrderedGraph build_intersection_graph(const CurveFamily& family) { return build_intersection_graph(family.curves()); }

OrderedGraph induced_interval(const OrderedGraph& graph, const IntervalSpec& interval) {
  std::vector<int> keep;
  for (int l : graph.labels()) {
    if (interval.contains(l)) keep.push_back(l);
  }
  return graph.induced(keep);
}

std::set<Edge> pairwise_crossing_pairs(std::span<const PolyCurve> curves) {
  std::set<Edge> out;
  for (std::size_t i = 0; i < curves.size(); ++i) {
    for (std::size_t j = i + 1; j < curves.size(); ++j) {
      if (curves_cross(curves[i], curves[j])) {
        out.emplace(std::min(curves[i].id, curves[j].id), std::max(curves[i].id, curves[j].id));
      }
    }
  }
  return out;
}

namespace {

struct Segment {
  int id;
  Point a;
  Point b;
  Rational slope;

  Rational y_at(const Rational& x) const { return a.y + slope * (x - a.x); }
};

// Orders active segments by height at the current event abscissa; segments
// through the event point itself are ordered as they leave it (by slope).
struct StatusOrder {
  const std::vector<Segment>* segments;
  const Point* event;

  bool operator()(int s, int t) const {
    const Segment& u = (*segments)[static_cast<std::size_t>(s)];
    const Segment& v = (*segments)[static_cast<std::size_t>(t)];
    if (s == t) return false;
    int c = cmp(u.y_at(event->x), v.y_at(event->x));
    if (c != 0) return c < 0;
    c = cmp(u.slope, v.slope);
    if (c != 0) return c < 0;
    return u.id < v.id;
  }
};

struct EventBucket {
  std::vector<int> starts;
  std::vector<int> ends;
  std::vector<std::pair<int, int>> crossings;
};

}  // namespace

std::set<Edge> sweep_segment_pairs(std::span<const PolyCurve> curves) {
  std::vector<Segment> segs;
  segs.reserve(curves.size());
  for (const PolyCurve& c : curves) {
    require_x_monotone(c);
    if (c.vertices.size() != 2) {
      throw Error(ErrorCode::InvalidArgument, "sweep expects single-segment curves; curve " + std::to_string(c.id));
    }
    const Point& a = c.vertices[0];
    const Point& b = c.vertices[1];
    segs.push_back(Segment{c.id, a, b, (b.y - a.y) / (b.x - a.x)});
  }

  std::map<Point, EventBucket> events;
  for (std::size_t i = 0; i < segs.size(); ++i) {
    events[segs[i].a].starts.push_back(static_cast<int>(i));
    events[segs[i].b].ends.push_back(static_cast<int>(i));
  }

  Point current{Rational(0), Rational(0)};
  StatusOrder order{&segs, &current};
  std::set<int, StatusOrder> status(order);
  std::vector<std::set<int, StatusOrder>::iterator> handle(segs.size(), status.end());
  std::set<Edge> found;

  auto schedule = [&](int s, int t) {
    const Segment& u = segs[static_cast<std::size_t>(s)];
    const Segment& v = segs[static_cast<std::size_t>(t)];
    Edge key{std::min(u.id, v.id), std::max(u.id, v.id)};
    if (found.count(key)) return;
    PolyCurve cu{u.id, {u.a, u.b}};
    PolyCurve cv{v.id, {v.a, v.b}};
    auto pts = crossing_points(cu, cv);
    if (pts.empty() || !(current < pts.front())) return;
    found.insert(key);
    events[pts.front()].crossings.emplace_back(s, t);
  };
  auto check_around = [&](std::set<int, StatusOrder>::iterator it) {
    if (it == status.end()) return;
    if (it != status.begin()) schedule(*std::prev(it), *it);
    if (auto next = std::next(it); next != status.end()) schedule(*it, *next);
  };

  while (!events.empty()) {
    auto node = events.begin();
    current = node->first;
    EventBucket bucket = std::move(node->second);
    events.erase(node);

    for (int s : bucket.ends) {
      auto it = handle[static_cast<std::size_t>(s)];
      auto next = status.erase(it);
      handle[static_cast<std::size_t>(s)] = status.end();
      if (next != status.end() && next != status.begin()) schedule(*std::prev(next), *next);
    }
    for (const auto& [s, t] : bucket.crossings) {
      status.erase(handle[static_cast<std::size_t>(s)]);
      status.erase(handle[static_cast<std::size_t>(t)]);
      handle[static_cast<std::size_t>(s)] = status.insert(s).first;
      handle[static_cast<std::size_t>(t)] = status.insert(t).first;
      check_around(handle[static_cast<std::size_t>(s)]);
      check_around(handle[static_cast<std::size_t>(t)]);
    }
    for (int s : bucket.starts) {
      handle[static_cast<std::size_t>(s)] = status.insert(s).first;
      check_around(handle[static_cast<std::size_t>(s)]);
    }
  }
  return found;
}

std::string to_adjacency_list(const OrderedGraph& graph) {
  std::ostringstream out;
  for (int v : graph.labels()) {
    out << v << ':';
    for (int w : graph.neighbors(v)) out << ' ' << w;
    out << '\n';
  }
  return out.str();
}

std::string to_dot(const OrderedGraph& graph, const std::string& name) {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (int v : graph.labels()) out << "  " << v << ";\n";
  for (const auto& [u, v] : graph.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace xmc
