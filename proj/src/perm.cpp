#include "braidverify/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace braidverify {

namespace {

void check_degree(int degree) {
  if (degree < 1) throw std::invalid_argument("degree must be positive");
}

} // namespace

Perm::Perm(int degree) {
  check_degree(degree);
  images_.resize(static_cast<std::size_t>(degree));
  std::iota(images_.begin(), images_.end(), 1);
}

Perm::Perm(int degree, std::vector<int> images) : images_(std::move(images)) {
  check_degree(degree);
  if (images_.size() != static_cast<std::size_t>(degree))
    throw std::invalid_argument("image list length does not match degree");
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 1 || v > degree)
      throw std::invalid_argument("image out of range");
    if (seen[static_cast<std::size_t>(v - 1)])
      throw std::invalid_argument("images are not a bijection");
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
}

Perm Perm::transposition(int degree, int a, int b) {
  check_degree(degree);
  if (a < 1 || a > degree || b < 1 || b > degree || a == b)
    throw std::invalid_argument("bad transposition points");
  Perm p(degree);
  std::swap(p.images_[static_cast<std::size_t>(a - 1)],
            p.images_[static_cast<std::size_t>(b - 1)]);
  return p;
}

Perm Perm::parse_cycles(std::string_view text, int degree) {
  check_degree(degree);
  Perm result(degree);
  std::set<int> mentioned;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  while (pos < text.size()) {
    if (text[pos] != '(')
      throw std::invalid_argument("expected '(' in cycle notation");
    ++pos;
    std::vector<int> cycle;
    while (true) {
      skip_ws();
      if (pos >= text.size())
        throw std::invalid_argument("unterminated cycle");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[pos])))
        throw std::invalid_argument("expected point or ')' in cycle");
      int value = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + (text[pos] - '0');
        ++pos;
      }
      if (value < 1 || value > degree)
        throw std::invalid_argument("cycle point out of range");
      if (!mentioned.insert(value).second)
        throw std::invalid_argument("repeated point in cycles");
      cycle.push_back(value);
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      int from = cycle[i];
      int to = cycle[(i + 1) % cycle.size()];
      result.images_[static_cast<std::size_t>(from - 1)] = to;
    }
    skip_ws();
  }
  return result;
}

int Perm::apply(int point) const {
  if (point < 1 || point > degree())
    throw std::invalid_argument("point out of range");
  return images_[static_cast<std::size_t>(point - 1)];
}

bool Perm::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (images_[static_cast<std::size_t>(i)] != i + 1) return false;
  return true;
}

Perm Perm::inverse() const {
  Perm out(degree());
  for (int i = 0; i < degree(); ++i)
    out.images_[static_cast<std::size_t>(images_[static_cast<std::size_t>(i)] - 1)] = i + 1;
  return out;
}

Perm operator*(const Perm& p, const Perm& q) {
  if (p.degree() != q.degree())
    throw std::invalid_argument("degree mismatch in product");
  Perm out(p.degree());
  for (int i = 0; i < p.degree(); ++i)
    out.images_[static_cast<std::size_t>(i)] =
        q.images_[static_cast<std::size_t>(p.images_[static_cast<std::size_t>(i)] - 1)];
  return out;
}

std::string Perm::cycle_string() const {
  std::vector<bool> done(images_.size(), false);
  std::ostringstream out;
  bool any = false;
  for (int start = 1; start <= degree(); ++start) {
    if (done[static_cast<std::size_t>(start - 1)]) continue;
    std::vector<int> cycle;
    int cur = start;
    do {
      done[static_cast<std::size_t>(cur - 1)] = true;
      cycle.push_back(cur);
      cur = apply(cur);
    } while (cur != start);
    if (cycle.size() < 2) continue;
    any = true;
    out << '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i) out << ' ';
      out << cycle[i];
    }
    out << ')';
  }
  if (!any) return "()";
  return out.str();
}

PermTuple::PermTuple(std::vector<Perm> entries) : entries_(std::move(entries)) {
  if (entries_.empty())
    throw std::invalid_argument("tuple must be nonempty");
  for (const Perm& p : entries_)
    if (p.degree() != entries_.front().degree())
      throw std::invalid_argument("mixed degrees in tuple");
}

Perm conjugate(const Perm& p, const Perm& g) { return g.inverse() * p * g; }

PermTuple conjugate(const PermTuple& t, const Perm& g) {
  std::vector<Perm> out;
  out.reserve(t.size());
  for (const Perm& p : t.entries()) out.push_back(conjugate(p, g));
  return PermTuple(std::move(out));
}

std::vector<Perm> all_perms(int degree) {
  check_degree(degree);
  if (degree > 8)
    throw std::invalid_argument("degree too large for exhaustive listing");
  std::vector<int> images(static_cast<std::size_t>(degree));
  std::iota(images.begin(), images.end(), 1);
  std::vector<Perm> out;
  do {
    out.emplace_back(degree, images);
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

PermTuple canonical_under_conjugation(const PermTuple& t) {
  if (t.degree() > 8)
    throw std::invalid_argument("degree too large for canonicalization");
  PermTuple best = t;
  for (const Perm& g : all_perms(t.degree())) {
    PermTuple candidate = conjugate(t, g);
    if (candidate < best) best = candidate;
  }
  return best;
}

std::vector<Perm> closure_elements(const PermTuple& t) {
  std::set<Perm> seen;
  std::vector<Perm> frontier{Perm(t.degree())};
  seen.insert(frontier.front());
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const Perm& p : frontier) {
      for (const Perm& g : t.entries()) {
        Perm q = p * g;
        if (seen.insert(q).second) next.push_back(std::move(q));
      }
    }
    frontier = std::move(next);
  }
  return std::vector<Perm>(seen.begin(), seen.end());
}

long closure_order(const PermTuple& t) {
  return static_cast<long>(closure_elements(t).size());
}

} // namespace braidverify
