#include "braidverify/fpgroup.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <map>
#include <sstream>

namespace braidverify {

namespace {

void check_relator(const std::vector<int>& relator, int ngens) {
  for (int l : relator)
    if (l == 0 || std::abs(l) > ngens)
      throw std::invalid_argument("relator letter out of range");
}

} // namespace

Presentation::Presentation(std::vector<std::string> gens,
                           std::vector<std::vector<int>> rels)
    : generators(std::move(gens)), relators(std::move(rels)) {
  if (generators.empty())
    throw std::invalid_argument("presentation needs at least one generator");
  for (const std::string& g : generators)
    if (g.empty()) throw std::invalid_argument("empty generator name");
  for (const auto& r : relators) check_relator(r, generator_count());
}

Presentation Presentation::with_relator(std::vector<int> relator) const {
  Presentation out = *this;
  check_relator(relator, generator_count());
  out.relators.push_back(std::move(relator));
  return out;
}

Presentation Presentation::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<std::string> gens;
  std::vector<std::vector<int>> rels;
  bool saw_generators = false, in_relators = false;
  while (std::getline(in, line)) {
    std::string_view v(line);
    while (!v.empty() && (v.back() == '\r' || v.back() == ' ')) v.remove_suffix(1);
    while (!v.empty() && v.front() == ' ') v.remove_prefix(1);
    if (v.empty() || v.front() == '#') continue;
    if (!saw_generators) {
      if (!v.starts_with("generators:"))
        throw std::invalid_argument("expected 'generators:' line");
      std::istringstream gs{std::string(v.substr(11))};
      std::string name;
      while (gs >> name) gens.push_back(name);
      saw_generators = true;
    } else if (!in_relators) {
      if (v != "relators:")
        throw std::invalid_argument("expected 'relators:' line");
      in_relators = true;
    } else {
      std::istringstream rs{std::string(v)};
      std::vector<int> rel;
      int letter = 0;
      while (rs >> letter) rel.push_back(letter);
      if (!rs.eof()) throw std::invalid_argument("bad relator line: " + line);
      rels.push_back(std::move(rel));
    }
  }
  if (!saw_generators || !in_relators)
    throw std::invalid_argument("presentation text is incomplete");
  return Presentation(std::move(gens), std::move(rels));
}

Presentation Presentation::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open presentation file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

std::string Presentation::serialize() const {
  std::ostringstream out;
  out << "generators:";
  for (const std::string& g : generators) out << ' ' << g;
  out << "\nrelators:\n";
  for (const auto& r : relators) {
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (i) out << ' ';
      out << r[i];
    }
    out << '\n';
  }
  return out.str();
}

namespace {

std::vector<std::string> numbered_names(const std::string& stem, int count) {
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(count));
  for (int i = 1; i <= count; ++i) names.push_back(stem + std::to_string(i));
  return names;
}

std::vector<std::vector<int>> braid_relators(int n) {
  std::vector<std::vector<int>> rels;
  for (int i = 1; i <= n - 2; ++i)
    rels.push_back({i, i + 1, i, -(i + 1), -i, -(i + 1)});
  for (int i = 1; i <= n - 3; ++i)
    for (int j = i + 2; j <= n - 1; ++j) rels.push_back({i, j, -i, -j});
  return rels;
}

} // namespace

Presentation braid_presentation(int n) {
  if (n < 2) throw std::invalid_argument("need n >= 2");
  return Presentation(numbered_names("s", n - 1), braid_relators(n));
}

Presentation mcg_sphere_presentation(int n) {
  if (n < 3) throw std::invalid_argument("need n >= 3");
  auto rels = braid_relators(n);
  std::vector<int> sphere;
  for (int i = 1; i <= n - 2; ++i) sphere.push_back(i);
  sphere.push_back(n - 1);
  sphere.push_back(n - 1);
  for (int i = n - 2; i >= 1; --i) sphere.push_back(i);
  rels.push_back(std::move(sphere));
  std::vector<int> twist;
  for (int rep = 0; rep < n; ++rep)
    for (int i = 1; i <= n - 1; ++i) twist.push_back(i);
  rels.push_back(std::move(twist));
  return Presentation(numbered_names("s", n - 1), std::move(rels));
}

Presentation coxeter_symmetric_presentation(int n) {
  if (n < 2) throw std::invalid_argument("need n >= 2");
  std::vector<std::vector<int>> rels;
  for (int i = 1; i <= n - 1; ++i) rels.push_back({i, i});
  for (const auto& r : braid_relators(n)) rels.push_back(r);
  return Presentation(numbered_names("s", n - 1), std::move(rels));
}

Presentation free_product_three_involutions() {
  return Presentation({"t1", "t2", "t3"}, {{1, 1}, {2, 2}, {3, 3}});
}

Presentation builtin_presentation(std::string_view name) {
  auto parse_arg = [&](std::string_view stem) -> int {
    std::string tail(name.substr(stem.size()));
    std::size_t used = 0;
    int v = std::stoi(tail, &used);
    if (used != tail.size()) throw std::invalid_argument("bad builtin name");
    return v;
  };
  if (name == "free222") return free_product_three_involutions();
  if (name.starts_with("braid:")) return braid_presentation(parse_arg("braid:"));
  if (name.starts_with("mcg:")) return mcg_sphere_presentation(parse_arg("mcg:"));
  if (name.starts_with("symmetric:"))
    return coxeter_symmetric_presentation(parse_arg("symmetric:"));
  throw std::invalid_argument("unknown builtin presentation: " + std::string(name));
}

std::vector<std::string> builtin_presentation_names() {
  return {"braid:N", "mcg:N", "symmetric:N", "free222"};
}

CosetTable::CosetTable(int generator_count, std::vector<std::vector<int>> forward,
                       std::vector<std::vector<int>> backward)
    : ngens_(generator_count), fwd_(std::move(forward)), bwd_(std::move(backward)) {
  if (ngens_ < 1) throw std::invalid_argument("need at least one generator");
  if (fwd_.empty() || fwd_.size() != bwd_.size())
    throw std::invalid_argument("table shape mismatch");
  int n = size();
  for (int c = 0; c < n; ++c) {
    const auto& f = fwd_[static_cast<std::size_t>(c)];
    const auto& b = bwd_[static_cast<std::size_t>(c)];
    if (f.size() != static_cast<std::size_t>(ngens_) ||
        b.size() != static_cast<std::size_t>(ngens_))
      throw std::invalid_argument("table row shape mismatch");
    for (int g = 0; g < ngens_; ++g) {
      int d = f[static_cast<std::size_t>(g)];
      int e = b[static_cast<std::size_t>(g)];
      if (d < 0 || d >= n || e < 0 || e >= n)
        throw std::invalid_argument("table entry out of range");
      if (bwd_[static_cast<std::size_t>(d)][static_cast<std::size_t>(g)] != c ||
          fwd_[static_cast<std::size_t>(e)][static_cast<std::size_t>(g)] != c)
        throw std::invalid_argument("table is not a permutation action");
    }
  }
}

int CosetTable::act(int coset, int signed_gen) const {
  if (coset < 0 || coset >= size())
    throw std::out_of_range("coset out of range");
  int g = std::abs(signed_gen);
  if (g < 1 || g > ngens_) throw std::out_of_range("generator out of range");
  const auto& row = signed_gen > 0 ? fwd_[static_cast<std::size_t>(coset)]
                                   : bwd_[static_cast<std::size_t>(coset)];
  return row[static_cast<std::size_t>(g - 1)];
}

int CosetTable::trace(int coset, std::span<const int> word) const {
  int c = coset;
  for (int l : word) c = act(c, l);
  return c;
}

bool CosetTable::is_consistent_with(const Presentation& p) const {
  if (p.generator_count() != ngens_) return false;
  for (int c = 0; c < size(); ++c)
    for (const auto& r : p.relators)
      if (trace(c, r) != c) return false;
  return true;
}

namespace {

struct NeedLookahead {};

// HLT coset enumerator with union-find coincidence handling. Table
// entries may point at dead cosets; every read resolves to the class
// representative.
class Enumerator {
public:
  Enumerator(const Presentation& p, int max_cosets)
      : p_(p), ngens_(p.generator_count()), max_live_(max_cosets) {
    if (max_cosets < 1) throw std::invalid_argument("max_cosets must be >= 1");
    total_cap_ = std::max(50L * max_cosets, max_cosets + 10000L);
    new_coset();
  }

  void run(const std::vector<std::vector<int>>& subgroup_words) {
    for (const auto& w : subgroup_words) {
      check_relator(w, ngens_);
      scan_with_retry(0, w);
    }
    std::size_t c = 0;
    while (c < table_.size()) {
      if (rep(static_cast<int>(c)) != static_cast<int>(c)) {
        ++c;
        continue;
      }
      bool died = false;
      for (const auto& r : p_.relators) {
        scan_with_retry(static_cast<int>(c), r);
        if (rep(static_cast<int>(c)) != static_cast<int>(c)) {
          died = true;
          break;
        }
      }
      if (!died) {
        for (int g = 1; g <= ngens_ && !died; ++g) {
          for (int sign : {+1, -1}) {
            int cc = rep(static_cast<int>(c));
            if (cc != static_cast<int>(c)) {
              died = true;
              break;
            }
            if (get(cc, sign * g) != -1) continue;
            int d;
            try {
              d = new_coset();
            } catch (const NeedLookahead&) {
              lookahead();
              cc = rep(static_cast<int>(c));
              if (cc != static_cast<int>(c)) {
                died = true;
                break;
              }
              if (get(cc, sign * g) != -1) continue;
              d = new_coset(); // cannot throw: lookahead left room
            }
            set_entry(cc, sign * g, d);
          }
        }
      }
      ++c;
    }
  }

  CosetTable finish() const {
    std::vector<int> index(table_.size(), -1);
    int live = 0;
    for (std::size_t c = 0; c < table_.size(); ++c)
      if (parent_[c] == static_cast<int>(c)) index[c] = live++;
    std::vector<std::vector<int>> fwd(static_cast<std::size_t>(live),
                                      std::vector<int>(static_cast<std::size_t>(ngens_), -1));
    auto bwd = fwd;
    for (std::size_t c = 0; c < table_.size(); ++c) {
      if (index[c] < 0) continue;
      for (int g = 1; g <= ngens_; ++g) {
        int d = get_checked(static_cast<int>(c), g);
        int e = get_checked(static_cast<int>(c), -g);
        fwd[static_cast<std::size_t>(index[c])][static_cast<std::size_t>(g - 1)] =
            index[static_cast<std::size_t>(d)];
        bwd[static_cast<std::size_t>(index[c])][static_cast<std::size_t>(g - 1)] =
            index[static_cast<std::size_t>(e)];
      }
    }
    return CosetTable(ngens_, std::move(fwd), std::move(bwd));
  }

private:
  static std::size_t column(int signed_gen) {
    int g = std::abs(signed_gen);
    return 2 * static_cast<std::size_t>(g - 1) + (signed_gen > 0 ? 0 : 1);
  }

  int rep(int c) {
    while (parent_[static_cast<std::size_t>(c)] != c) {
      parent_[static_cast<std::size_t>(c)] =
          parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(c)])];
      c = parent_[static_cast<std::size_t>(c)];
    }
    return c;
  }

  int get(int c, int signed_gen) {
    int raw = table_[static_cast<std::size_t>(c)][column(signed_gen)];
    return raw == -1 ? -1 : rep(raw);
  }

  int get_checked(int c, int signed_gen) const {
    int raw = table_[static_cast<std::size_t>(c)][column(signed_gen)];
    if (raw == -1) throw std::logic_error("incomplete coset table");
    int r = raw;
    while (parent_[static_cast<std::size_t>(r)] != r)
      r = parent_[static_cast<std::size_t>(r)];
    return r;
  }

  void set_entry(int c, int signed_gen, int d) {
    table_[static_cast<std::size_t>(c)][column(signed_gen)] = d;
    table_[static_cast<std::size_t>(d)][column(-signed_gen)] = c;
  }

  int new_coset() {
    if (static_cast<long>(table_.size()) >= total_cap_)
      throw CosetLimitExceeded("allocation cap exceeded; raise max_cosets");
    if (live_ >= max_live_) throw NeedLookahead{};
    table_.emplace_back(2 * static_cast<std::size_t>(ngens_), -1);
    parent_.push_back(static_cast<int>(table_.size()) - 1);
    ++live_;
    return static_cast<int>(table_.size()) - 1;
  }

  void scan_with_retry(int c, const std::vector<int>& word) {
    while (true) {
      try {
        scan(rep(c), word, true);
        process_coincidences();
        return;
      } catch (const NeedLookahead&) {
        process_coincidences();
        lookahead();
      }
    }
  }

  void lookahead() {
    for (std::size_t c = 0; c < table_.size(); ++c) {
      if (parent_[c] != static_cast<int>(c)) continue;
      for (const auto& r : p_.relators) {
        if (parent_[c] != static_cast<int>(c)) break;
        scan(static_cast<int>(c), r, false);
        process_coincidences();
      }
    }
    if (live_ >= max_live_)
      throw CosetLimitExceeded("coset limit " + std::to_string(max_live_) +
                               " exceeded during enumeration");
  }

  void scan(int c, const std::vector<int>& word, bool fill) {
    if (word.empty()) return;
    int f = c, b = c;
    int i = 0, j = static_cast<int>(word.size()) - 1;
    while (true) {
      while (i <= j) {
        int t = get(f, word[static_cast<std::size_t>(i)]);
        if (t == -1) break;
        f = t;
        ++i;
      }
      if (i > j) {
        if (f != b) coincidences_.emplace_back(f, b);
        return;
      }
      while (j >= i) {
        int t = get(b, -word[static_cast<std::size_t>(j)]);
        if (t == -1) break;
        b = t;
        --j;
      }
      if (j < i) {
        coincidences_.emplace_back(f, b);
        return;
      }
      if (i == j) {
        set_entry(f, word[static_cast<std::size_t>(i)], b);
        return;
      }
      if (!fill) return;
      int d = new_coset();
      set_entry(f, word[static_cast<std::size_t>(i)], d);
      f = d;
      ++i;
    }
  }

  void process_coincidences() {
    while (!coincidences_.empty()) {
      auto [x, y] = coincidences_.front();
      coincidences_.pop_front();
      x = rep(x);
      y = rep(y);
      if (x == y) continue;
      if (x > y) std::swap(x, y); // smaller index survives
      parent_[static_cast<std::size_t>(y)] = x;
      --live_;
      for (int g = 1; g <= ngens_; ++g) {
        for (int sign : {+1, -1}) {
          int raw = table_[static_cast<std::size_t>(y)][column(sign * g)];
          if (raw == -1) continue;
          int d = rep(raw);
          int e = get(x, sign * g);
          if (e == -1)
            set_entry(x, sign * g, d);
          else if (e != d)
            coincidences_.emplace_back(e, d);
        }
      }
    }
  }

  const Presentation& p_;
  int ngens_;
  int max_live_;
  long total_cap_;
  int live_ = 0;
  std::vector<std::vector<int>> table_;
  std::vector<int> parent_;
  std::deque<std::pair<int, int>> coincidences_;
};

} // namespace

CosetTable todd_coxeter(const Presentation& p,
                        const std::vector<std::vector<int>>& subgroup_words,
                        int max_cosets) {
  Enumerator e(p, max_cosets);
  e.run(subgroup_words);
  return e.finish();
}

GroupHom::GroupHom(Presentation source, Images images)
    : source_(std::move(source)), images_(std::move(images)) {
  std::size_t arity = 0;
  std::visit([&](const auto& t) { arity = t.images.size(); }, images_);
  if (arity != static_cast<std::size_t>(source_.generator_count()))
    throw std::invalid_argument("need one image per generator");
  if (const auto* pi = std::get_if<PermImages>(&images_)) {
    for (const Perm& q : pi->images)
      if (q.degree() != pi->images.front().degree())
        throw std::invalid_argument("mixed image degrees");
  } else if (const auto* bi = std::get_if<BraidImages>(&images_)) {
    for (const BraidWord& w : bi->images)
      if (w.strands() != bi->images.front().strands())
        throw std::invalid_argument("mixed image strand counts");
  }
}

bool GroupHom::verify() {
  bool ok = true;
  for (const auto& r : source_.relators) {
    if (std::holds_alternative<PermImages>(images_))
      ok = eval_perm(r).is_identity();
    else if (std::holds_alternative<BraidImages>(images_))
      ok = is_trivial(eval_braid(r));
    else
      ok = eval_fp(r).is_identity();
    if (!ok) break;
  }
  verified_ = ok;
  return ok;
}

Perm GroupHom::eval_perm(std::span<const int> word) const {
  const auto* t = std::get_if<PermImages>(&images_);
  if (!t) throw std::invalid_argument("not a permutation-valued homomorphism");
  Perm acc(t->images.front().degree());
  for (int l : word) {
    const Perm& g = t->images[static_cast<std::size_t>(std::abs(l) - 1)];
    acc = acc * (l > 0 ? g : g.inverse());
  }
  return acc;
}

BraidWord GroupHom::eval_braid(std::span<const int> word) const {
  const auto* t = std::get_if<BraidImages>(&images_);
  if (!t) throw std::invalid_argument("not a braid-valued homomorphism");
  BraidWord acc(t->images.front().strands());
  for (int l : word) {
    const BraidWord& g = t->images[static_cast<std::size_t>(std::abs(l) - 1)];
    acc = acc * (l > 0 ? g : g.inverse());
  }
  return acc;
}

FPWord GroupHom::eval_fp(std::span<const int> word) const {
  const auto* t = std::get_if<FreeProductImages>(&images_);
  if (!t) throw std::invalid_argument("not a free-product-valued homomorphism");
  FPWord acc;
  for (int l : word) {
    const FPWord& g = t->images[static_cast<std::size_t>(std::abs(l) - 1)];
    acc = acc * (l > 0 ? g : g.inverse());
  }
  return acc;
}

bool GroupHom::is_perm_target() const {
  return std::holds_alternative<PermImages>(images_);
}

const std::vector<Perm>& GroupHom::perm_images() const {
  const auto* t = std::get_if<PermImages>(&images_);
  if (!t) throw std::invalid_argument("not a permutation-valued homomorphism");
  return t->images;
}

CosetTable coset_table_from_quotient(const Presentation& p, const GroupHom& q) {
  if (!q.verified())
    throw std::invalid_argument("quotient homomorphism must be verified");
  if (&q.source() != &p && q.source().generator_count() != p.generator_count())
    throw std::invalid_argument("generator count mismatch");
  const std::vector<Perm>& images = q.perm_images();
  std::vector<Perm> elements = closure_elements(PermTuple(images));
  std::map<Perm, int> index;
  for (std::size_t i = 0; i < elements.size(); ++i)
    index[elements[i]] = static_cast<int>(i);
  int n = static_cast<int>(elements.size());
  int k = p.generator_count();
  std::vector<std::vector<int>> fwd(static_cast<std::size_t>(n),
                                    std::vector<int>(static_cast<std::size_t>(k)));
  auto bwd = fwd;
  for (int c = 0; c < n; ++c)
    for (int g = 0; g < k; ++g) {
      const Perm& img = images[static_cast<std::size_t>(g)];
      fwd[static_cast<std::size_t>(c)][static_cast<std::size_t>(g)] =
          index.at(elements[static_cast<std::size_t>(c)] * img);
      bwd[static_cast<std::size_t>(c)][static_cast<std::size_t>(g)] =
          index.at(elements[static_cast<std::size_t>(c)] * img.inverse());
    }
  return CosetTable(k, std::move(fwd), std::move(bwd));
}

Presentation reidemeister_schreier(const Presentation& p, const CosetTable& t,
                                   TreePolicy policy) {
  if (t.generator_count() != p.generator_count())
    throw std::invalid_argument("table does not match presentation");
  const int n = t.size();
  const int k = p.generator_count();

  // Breadth-first spanning tree; tree_edge marks positive edges used.
  std::vector<std::vector<bool>> tree_edge(
      static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(k), false));
  std::vector<bool> visited(static_cast<std::size_t>(n), false);
  std::deque<int> queue{0};
  visited[0] = true;
  std::vector<int> gen_order(static_cast<std::size_t>(k));
  for (int g = 0; g < k; ++g)
    gen_order[static_cast<std::size_t>(g)] =
        policy == TreePolicy::bfs_smallest_first ? g + 1 : k - g;
  while (!queue.empty()) {
    int c = queue.front();
    queue.pop_front();
    for (int g : gen_order) {
      for (int sign : {+1, -1}) {
        int d = t.act(c, sign * g);
        if (visited[static_cast<std::size_t>(d)]) continue;
        visited[static_cast<std::size_t>(d)] = true;
        // The positive form of the edge is (c -g-> d) or (d -g-> c).
        if (sign > 0)
          tree_edge[static_cast<std::size_t>(c)][static_cast<std::size_t>(g - 1)] = true;
        else
          tree_edge[static_cast<std::size_t>(d)][static_cast<std::size_t>(g - 1)] = true;
        queue.push_back(d);
      }
    }
  }
  for (bool v : visited)
    if (!v) throw std::invalid_argument("coset table is not connected");

  // One Schreier generator per non-tree positive edge.
  std::vector<std::vector<int>> gen_index(
      static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(k), 0));
  std::vector<std::string> names;
  for (int c = 0; c < n; ++c)
    for (int g = 1; g <= k; ++g)
      if (!tree_edge[static_cast<std::size_t>(c)][static_cast<std::size_t>(g - 1)]) {
        names.push_back(p.generators[static_cast<std::size_t>(g - 1)] + "_" +
                        std::to_string(c));
        gen_index[static_cast<std::size_t>(c)][static_cast<std::size_t>(g - 1)] =
            static_cast<int>(names.size());
      }

  auto rewrite = [&](int start, const std::vector<int>& word) {
    std::vector<int> out;
    int cur = start;
    for (int l : word) {
      int g = std::abs(l);
      if (l > 0) {
        int idx = gen_index[static_cast<std::size_t>(cur)][static_cast<std::size_t>(g - 1)];
        if (idx != 0) out.push_back(idx);
        cur = t.act(cur, l);
      } else {
        int prev = t.act(cur, l);
        int idx = gen_index[static_cast<std::size_t>(prev)][static_cast<std::size_t>(g - 1)];
        if (idx != 0) out.push_back(-idx);
        cur = prev;
      }
    }
    if (cur != start) throw std::logic_error("relator does not fix coset");
    return out;
  };

  std::vector<std::vector<int>> rels;
  for (int c = 0; c < n; ++c)
    for (const auto& r : p.relators) rels.push_back(rewrite(c, r));
  return Presentation(std::move(names), std::move(rels));
}

IntMatrix relator_exponent_matrix(const Presentation& p) {
  int rows = p.generator_count();
  int cols = std::max<int>(1, static_cast<int>(p.relators.size()));
  IntMatrix m(rows, cols);
  for (std::size_t j = 0; j < p.relators.size(); ++j)
    for (int l : p.relators[j])
      m.at(std::abs(l) - 1, static_cast<int>(j)) += l > 0 ? 1 : -1;
  return m;
}

AbelianGroup abelianization(const Presentation& p) {
  return cokernel(relator_exponent_matrix(p));
}

} // namespace braidverify
