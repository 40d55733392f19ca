#include "braidverify/hom_enum.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace braidverify {

namespace {

long factorial(int m) {
  long f = 1;
  for (int i = 2; i <= m; ++i) f *= i;
  return f;
}

std::vector<int> cycle_type(const Perm& p) {
  std::vector<bool> seen(static_cast<std::size_t>(p.degree()) + 1, false);
  std::vector<int> lengths;
  for (int s = 1; s <= p.degree(); ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    int len = 0, x = s;
    do {
      seen[static_cast<std::size_t>(x)] = true;
      x = p.apply(x);
      ++len;
    } while (x != s);
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

Perm eval_partial(const std::vector<Perm>& images, const std::vector<int>& word,
                  int degree) {
  Perm acc(degree);
  for (int l : word) {
    const Perm& g = images[static_cast<std::size_t>(std::abs(l) - 1)];
    acc = acc * (l > 0 ? g : g.inverse());
  }
  return acc;
}

} // namespace

HomClassification enumerate_homs(const Presentation& p, int m,
                                 bool surjective_only,
                                 const EnumOptions& options) {
  if (m < 1) throw std::invalid_argument("degree must be positive");
  if (m > 6) throw std::invalid_argument("degree above 6 is not supported");
  if (m == 6 && !options.allow_degree_6)
    throw std::invalid_argument("degree 6 requires allow_degree_6");

  const std::vector<Perm> all = all_perms(m);
  std::map<std::vector<int>, std::vector<Perm>> by_type;
  for (const Perm& q : all) by_type[cycle_type(q)].push_back(q);
  std::vector<Perm> reps;
  for (const auto& [type, members] : by_type) reps.push_back(members.front());

  const int k = p.generator_count();
  // relators become checkable once their highest generator is assigned
  std::vector<std::vector<const std::vector<int>*>> due(
      static_cast<std::size_t>(k) + 1);
  for (const auto& r : p.relators) {
    int top = 0;
    for (int l : r) top = std::max(top, std::abs(l));
    due[static_cast<std::size_t>(top)].push_back(&r);
  }

  const long target_order = factorial(m);
  std::uint64_t nodes = 0;
  std::vector<Perm> images;
  images.reserve(static_cast<std::size_t>(k));
  std::set<PermTuple> found;

  auto consistent_at = [&](int depth) {
    for (const auto* r : due[static_cast<std::size_t>(depth)])
      if (!eval_partial(images, *r, m).is_identity()) return false;
    return true;
  };

  auto search = [&](auto&& self, int depth) -> void {
    if (depth == k) {
      PermTuple t(images);
      if (surjective_only && closure_order(t) != target_order) return;
      found.insert(canonical_under_conjugation(t));
      return;
    }
    const std::vector<Perm>& candidates =
        depth == 0 ? reps
                   : (options.assume_generators_conjugate
                          ? by_type.at(cycle_type(images.front()))
                          : all);
    for (const Perm& q : candidates) {
      if (++nodes > options.node_budget)
        throw std::runtime_error("hom enumeration budget exceeded");
      images.push_back(q);
      if (consistent_at(depth + 1)) self(self, depth + 1);
      images.pop_back();
    }
  };
  search(search, 0);

  HomClassification out;
  out.degree = m;
  for (const PermTuple& rep : found) {
    for (const auto* r : due[0])
      if (!r->empty()) throw std::logic_error("empty-relator bucket corrupted");
    for (const auto& r : p.relators)
      if (!eval_partial(rep.entries(), r, m).is_identity())
        throw std::logic_error("classified tuple fails a relator");
    std::set<PermTuple> orbit;
    for (const Perm& g : all) orbit.insert(conjugate(rep, g));
    out.classes.push_back(HomClass{rep, static_cast<long>(orbit.size())});
    out.total += static_cast<long>(orbit.size());
  }
  return out;
}

bool kernel_contains(const GroupHom& h, std::span<const int> word) {
  if (!h.verified())
    throw std::invalid_argument("homomorphism must be verified");
  return h.eval_perm(word).is_identity();
}

bool kernels_equal(const GroupHom& f, const GroupHom& g) {
  if (!f.verified() || !g.verified())
    throw std::invalid_argument("homomorphisms must be verified");
  if (f.source().generators != g.source().generators ||
      f.source().relators != g.source().relators)
    throw std::invalid_argument("homomorphisms must share a source");

  const std::vector<Perm>& fi = f.perm_images();
  const std::vector<Perm>& gi = g.perm_images();
  long order_f = closure_order(PermTuple(fi));
  long order_g = closure_order(PermTuple(gi));
  if (order_f != order_g) return false;

  // Closure of the paired images inside Im(f) x Im(g); it is the graph of
  // a bijection exactly when its size matches the image orders.
  std::set<std::pair<Perm, Perm>> closure;
  std::vector<std::pair<Perm, Perm>> frontier;
  std::pair<Perm, Perm> id{Perm(fi.front().degree()), Perm(gi.front().degree())};
  closure.insert(id);
  frontier.push_back(id);
  while (!frontier.empty()) {
    auto [a, b] = frontier.back();
    frontier.pop_back();
    for (std::size_t i = 0; i < fi.size(); ++i) {
      std::pair<Perm, Perm> next{a * fi[i], b * gi[i]};
      if (closure.insert(next).second) {
        if (static_cast<long>(closure.size()) > order_f) return false;
        frontier.push_back(next);
      }
    }
  }
  return static_cast<long>(closure.size()) == order_f;
}

} // namespace braidverify
