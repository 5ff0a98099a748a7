#include "thompson/plmap.hpp"

#include <algorithm>
#include <cstring>

namespace thompson {

PLMap PLMap::from_nodes(std::vector<Breakpoint> nodes, std::int64_t tail) {
  PLMap f;
  f.tail_ = tail;
  if (nodes.empty()) {
    if (tail != 0) throw std::invalid_argument("nonzero tail without nodes");
    return f;
  }
  if (nodes.front().a != nodes.front().b) {
    throw std::invalid_argument("map is not the identity left of its first node");
  }
  if (nodes.front().a.sign() < 0) {
    throw std::invalid_argument("map is not the identity on (-inf, 0]");
  }
  if (nodes.back().b - nodes.back().a != Dyadic(tail)) {
    throw std::invalid_argument("last node inconsistent with tail offset");
  }
  std::vector<int> slopes{0};
  for (std::size_t i = 1; i < nodes.size(); ++i) {
    Dyadic da = nodes[i].a - nodes[i - 1].a;
    Dyadic db = nodes[i].b - nodes[i - 1].b;
    if (da.sign() <= 0 || db.sign() <= 0) {
      throw std::invalid_argument("nodes not strictly increasing");
    }
    auto s = log2_ratio(db, da);
    if (!s) throw std::invalid_argument("slope is not a power of two");
    slopes.push_back(*s);
  }
  slopes.push_back(0);
  for (std::size_t i = 1; i < slopes.size(); ++i) {
    if (slopes[i] == slopes[i - 1]) {
      throw std::invalid_argument("redundant collinear node");
    }
  }
  f.nodes_ = std::move(nodes);
  f.slopes_ = std::move(slopes);
  return f;
}

Dyadic PLMap::evaluate(const Dyadic& t) const {
  auto it = std::upper_bound(
      nodes_.begin(), nodes_.end(), t,
      [](const Dyadic& v, const Breakpoint& n) { return v < n.a; });
  auto p = static_cast<std::size_t>(it - nodes_.begin());
  if (p == 0) return t;
  const Breakpoint& n = nodes_[p - 1];
  return n.b + (t - n.a).ldexp(slopes_[p]);
}

Derivatives PLMap::derivatives(const Dyadic& a) const {
  auto lo = std::lower_bound(
      nodes_.begin(), nodes_.end(), a,
      [](const Breakpoint& n, const Dyadic& v) { return n.a < v; });
  auto hi = std::upper_bound(
      nodes_.begin(), nodes_.end(), a,
      [](const Dyadic& v, const Breakpoint& n) { return v < n.a; });
  return {slopes_[static_cast<std::size_t>(lo - nodes_.begin())],
          slopes_[static_cast<std::size_t>(hi - nodes_.begin())]};
}

namespace {

template <class T>
void put(std::string& out, T v) {
  char buf[sizeof(T)];
  std::memcpy(buf, &v, sizeof(T));
  out.append(buf, sizeof(T));
}

template <class T>
T take(std::string_view& in) {
  if (in.size() < sizeof(T)) throw std::invalid_argument("truncated map key");
  T v;
  std::memcpy(&v, in.data(), sizeof(T));
  in.remove_prefix(sizeof(T));
  return v;
}

// tag 0: int64 numerator; tag 1: decimal string numerator.
void put_dyadic(std::string& out, const Dyadic& d) {
  if (auto small = d.small_numerator()) {
    out.push_back('\0');
    put(out, *small);
  } else {
    std::string s = d.numerator().str();
    out.push_back('\1');
    put(out, static_cast<std::uint32_t>(s.size()));
    out += s;
  }
  put(out, d.exponent());
}

Dyadic take_dyadic(std::string_view& in) {
  char tag = take<char>(in);
  BigInt m;
  if (tag == '\0') {
    m = take<std::int64_t>(in);
  } else if (tag == '\1') {
    auto len = take<std::uint32_t>(in);
    if (in.size() < len) throw std::invalid_argument("truncated map key");
    m = BigInt(std::string(in.substr(0, len)).c_str());
    in.remove_prefix(len);
  } else {
    throw std::invalid_argument("bad map key tag");
  }
  auto e = take<std::uint32_t>(in);
  return Dyadic(std::move(m), e);
}

}  // namespace

std::string PLMap::key() const {
  std::string out;
  out.reserve(8 + nodes_.size() * 26);
  put(out, tail_);
  for (const Breakpoint& n : nodes_) {
    put_dyadic(out, n.a);
    put_dyadic(out, n.b);
  }
  return out;
}

PLMap PLMap::from_key(std::string_view key) {
  auto tail = take<std::int64_t>(key);
  std::vector<Breakpoint> nodes;
  while (!key.empty()) {
    Dyadic a = take_dyadic(key);
    Dyadic b = take_dyadic(key);
    nodes.push_back({std::move(a), std::move(b)});
  }
  return from_nodes(std::move(nodes), tail);
}

PLMap generator(Index k) {
  if (k < 0) throw std::invalid_argument("generator index must be nonnegative");
  PLMap f;
  f.nodes_ = {{Dyadic(k), Dyadic(k)}, {Dyadic(k + 1), Dyadic(k + 2)}};
  f.slopes_ = {0, 1, 0};
  f.tail_ = 1;
  return f;
}

// Sweep over the intermediate coordinate u = f(t). The breakpoints of g∘f are
// among the images of f's nodes and the domain nodes of g; at each one the
// slope of the composite is the sum of the current slope exponents.
PLMap compose(const PLMap& f, const PLMap& g) {
  const auto& fn = f.nodes_;
  const auto& gn = g.nodes_;
  PLMap h;
  h.tail_ = f.tail_ + g.tail_;
  h.nodes_.reserve(fn.size() + gn.size());
  h.slopes_.clear();
  h.slopes_.reserve(fn.size() + gn.size() + 1);

  std::size_t p = 0;  // f pieces passed
  std::size_t q = 0;  // g pieces passed
  int current = 0;
  while (p < fn.size() || q < gn.size()) {
    bool from_f = false;
    bool from_g = false;
    if (p < fn.size() && q < gn.size()) {
      auto c = fn[p].b <=> gn[q].a;
      from_f = c <= 0;
      from_g = c >= 0;
    } else {
      from_f = p < fn.size();
      from_g = !from_f;
    }
    const Dyadic& u = from_f ? fn[p].b : gn[q].a;
    int next = f.slopes_[p + (from_f ? 1 : 0)] + g.slopes_[q + (from_g ? 1 : 0)];
    if (next != current) {
      Dyadic t;
      if (from_f) {
        t = fn[p].a;
      } else if (p == 0) {
        t = u;
      } else {
        t = fn[p - 1].a + (u - fn[p - 1].b).ldexp(-f.slopes_[p]);
      }
      Dyadic v;
      if (from_g) {
        v = gn[q].b;
      } else if (q == 0) {
        v = u;
      } else {
        v = gn[q - 1].b + (u - gn[q - 1].a).ldexp(g.slopes_[q]);
      }
      h.nodes_.push_back({std::move(t), std::move(v)});
      h.slopes_.push_back(current);  // slope left of the new node
      current = next;
    }
    if (from_f) ++p;
    if (from_g) ++q;
  }
  h.slopes_.push_back(current);
  return h;
}

PLMap invert(const PLMap& f) {
  PLMap r;
  r.tail_ = -f.tail_;
  r.nodes_.reserve(f.nodes_.size());
  for (const Breakpoint& n : f.nodes_) r.nodes_.push_back({n.b, n.a});
  r.slopes_.clear();
  r.slopes_.reserve(f.slopes_.size());
  for (int s : f.slopes_) r.slopes_.push_back(-s);
  return r;
}

std::optional<Interval> support(const PLMap& f) {
  if (f.tail() != 0) {
    throw UnboundedSupportError("map is a translation near +infinity");
  }
  if (f.nodes().empty()) return std::nullopt;
  return Interval{f.nodes().front().a, f.nodes().back().a};
}

PLMap from_word(const Word& w) { return from_word(w, generator); }

PLMap from_word(const Word& w, const GeneratorFn& generators) {
  PLMap acc;
  for (Letter l : w) {
    PLMap g = generators(l.index);
    acc = compose(acc, l.sign > 0 ? g : invert(g));
  }
  return acc;
}

PLMap commutator(const PLMap& f, const PLMap& g) {
  return compose(compose(compose(invert(f), invert(g)), f), g);
}

}  // namespace thompson
