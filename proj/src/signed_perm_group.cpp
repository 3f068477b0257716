#include "softgrp/signed_perm_group.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

#include "softgrp/error.hpp"

namespace softgrp {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "invalid argument";
    case ErrorCode::Parse: return "parse error";
    case ErrorCode::DegreeMismatch: return "degree mismatch";
    case ErrorCode::NotSubgroup: return "not a subgroup";
    case ErrorCode::NotHomomorphism: return "not a homomorphism";
    case ErrorCode::DiagramViolation: return "diagram violation";
    case ErrorCode::NotComposable: return "not composable";
    case ErrorCode::ScaleBound: return "scale bound exceeded";
    case ErrorCode::KernelUndefined: return "soft kernel undefined";
    case ErrorCode::Internal: return "internal error";
  }
  return "unknown error";
}

// ---------------------------------------------------------------------------
// SignedPermutation

SignedPermutation::SignedPermutation(std::vector<int> window) : window_(std::move(window)) {
  const int n = degree();
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "signed permutation of degree 0");
  std::vector<bool> hit(static_cast<std::size_t>(n) + 1, false);
  for (int x : window_) {
    const int a = std::abs(x);
    if (x == 0 || a > n || hit[a]) {
      throw Error(ErrorCode::InvalidArgument,
                  "window " + to_string() + " is not a signed permutation");
    }
    hit[a] = true;
  }
}

SignedPermutation SignedPermutation::identity(int degree) {
  if (degree < 1) throw Error(ErrorCode::InvalidArgument, "degree must be positive");
  std::vector<int> w(static_cast<std::size_t>(degree));
  std::iota(w.begin(), w.end(), 1);
  return SignedPermutation(Unchecked{}, std::move(w));
}

int SignedPermutation::operator()(int point) const {
  const int a = std::abs(point);
  if (point == 0 || a > degree()) {
    throw Error(ErrorCode::InvalidArgument, "point " + std::to_string(point) + " out of range");
  }
  const int image = window_[static_cast<std::size_t>(a - 1)];
  return point > 0 ? image : -image;
}

SignedPermutation SignedPermutation::inverse() const {
  std::vector<int> inv(window_.size());
  for (std::size_t i = 0; i < window_.size(); ++i) {
    const int x = window_[i];
    const int pos = static_cast<int>(i) + 1;
    inv[static_cast<std::size_t>(std::abs(x) - 1)] = x > 0 ? pos : -pos;
  }
  return SignedPermutation(Unchecked{}, std::move(inv));
}

bool SignedPermutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < window_.size(); ++i) {
    if (window_[i] != static_cast<int>(i) + 1) return false;
  }
  return true;
}

int SignedPermutation::order() const {
  int k = 1;
  SignedPermutation x = *this;
  while (!x.is_identity()) {
    x = compose(*this, x);
    ++k;
  }
  return k;
}

std::string SignedPermutation::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < window_.size(); ++i) {
    if (i) os << ',';
    os << window_[i];
  }
  os << ']';
  return os.str();
}

SignedPermutation compose(const SignedPermutation& u, const SignedPermutation& v) {
  if (u.degree() != v.degree()) {
    throw Error(ErrorCode::DegreeMismatch, "cannot compose degree " +
                                               std::to_string(u.degree()) + " with degree " +
                                               std::to_string(v.degree()));
  }
  std::vector<int> w(v.window_.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    const int x = v.window_[i];
    const int image = u.window_[static_cast<std::size_t>(std::abs(x) - 1)];
    w[i] = x > 0 ? image : -image;
  }
  return SignedPermutation(SignedPermutation::Unchecked{}, std::move(w));
}

SignedPermutation power(const SignedPermutation& u, int k) {
  if (k < 0) throw Error(ErrorCode::InvalidArgument, "negative exponent");
  SignedPermutation x = SignedPermutation::identity(u.degree());
  for (int i = 0; i < k; ++i) x = compose(u, x);
  return x;
}

SignedPermutation standard_generator_r(int degree, int index) {
  if (index < 1 || index > degree - 1) {
    throw Error(ErrorCode::InvalidArgument, "r_" + std::to_string(index) +
                                                " undefined at degree " + std::to_string(degree));
  }
  std::vector<int> w(static_cast<std::size_t>(degree));
  std::iota(w.begin(), w.end(), 1);
  std::swap(w[static_cast<std::size_t>(index - 1)], w[static_cast<std::size_t>(index)]);
  return SignedPermutation(std::move(w));
}

SignedPermutation standard_generator_v(int degree, int index) {
  if (index < 1 || index > degree) {
    throw Error(ErrorCode::InvalidArgument, "v_" + std::to_string(index) +
                                                " undefined at degree " + std::to_string(degree));
  }
  std::vector<int> w(static_cast<std::size_t>(degree));
  std::iota(w.begin(), w.end(), 1);
  w[static_cast<std::size_t>(index - 1)] = -index;
  return SignedPermutation(std::move(w));
}

SignedPermutation join_blocks(std::span<const SignedPermutation> blocks) {
  std::vector<int> w;
  int shift = 0;
  for (const auto& b : blocks) {
    for (int x : b.window_) w.push_back(x > 0 ? x + shift : x - shift);
    shift += b.degree();
  }
  if (w.empty()) throw Error(ErrorCode::InvalidArgument, "join of zero blocks");
  return SignedPermutation(SignedPermutation::Unchecked{}, std::move(w));
}

std::vector<SignedPermutation> split_blocks(const SignedPermutation& w,
                                            std::span<const int> degrees) {
  const auto win = w.window();
  std::vector<SignedPermutation> out;
  std::size_t pos = 0;
  int shift = 0;
  for (int d : degrees) {
    std::vector<int> block;
    for (int i = 0; i < d; ++i, ++pos) {
      if (pos >= win.size()) throw Error(ErrorCode::DegreeMismatch, "block layout exceeds degree");
      const int x = win[pos];
      block.push_back(x > 0 ? x - shift : x + shift);
    }
    out.emplace_back(std::move(block));  // validates the block stays inside its range
    shift += d;
  }
  if (pos != win.size()) throw Error(ErrorCode::DegreeMismatch, "block layout short of degree");
  return out;
}

void normalize(ElementSet& set) {
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());
}

// ---------------------------------------------------------------------------
// FiniteGroup

namespace {

ElementSet closure_elements(int degree, std::span<const SignedPermutation> generators) {
  for (const auto& g : generators) {
    if (g.degree() != degree) {
      throw Error(ErrorCode::DegreeMismatch, "generator " + g.to_string() +
                                                 " does not have degree " + std::to_string(degree));
    }
  }
  std::set<SignedPermutation> seen;
  std::deque<SignedPermutation> queue;
  auto e = SignedPermutation::identity(degree);
  seen.insert(e);
  queue.push_back(e);
  while (!queue.empty()) {
    const SignedPermutation x = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : generators) {
      auto y = compose(g, x);
      if (seen.insert(y).second) queue.push_back(std::move(y));
    }
  }
  // Inverse pass; positive powers already supply inverses in a finite group.
  for (const auto& x : std::vector<SignedPermutation>(seen.begin(), seen.end())) {
    if (!seen.contains(x.inverse())) {
      throw Error(ErrorCode::Internal, "closure is missing an inverse");
    }
  }
  return ElementSet(seen.begin(), seen.end());
}

bool sorted_contains(const ElementSet& set, const SignedPermutation& w) {
  return std::binary_search(set.begin(), set.end(), w);
}

std::vector<SignedPermutation> dedupe_generators(std::vector<SignedPermutation> gens) {
  std::vector<SignedPermutation> out;
  for (auto& g : gens) {
    if (std::find(out.begin(), out.end(), g) == out.end()) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace

FiniteGroup FiniteGroup::closure(int degree, std::vector<SignedPermutation> generators) {
  if (degree < 1) throw Error(ErrorCode::InvalidArgument, "degree must be positive");
  auto data = std::make_shared<Data>();
  data->degree = degree;
  data->generators = dedupe_generators(std::move(generators));
  data->elements = closure_elements(degree, data->generators);
  data->identity_index = static_cast<std::size_t>(
      std::lower_bound(data->elements.begin(), data->elements.end(),
                       SignedPermutation::identity(degree)) -
      data->elements.begin());
  return FiniteGroup(std::move(data));
}

FiniteGroup FiniteGroup::trivial(int degree) { return closure(degree, {}); }

FiniteGroup FiniteGroup::from_elements(int degree, ElementSet elements,
                                       std::vector<SignedPermutation> generators) {
  normalize(elements);
  auto data = std::make_shared<Data>();
  data->degree = degree;
  for (const auto& x : elements) {
    if (x.degree() != degree) throw Error(ErrorCode::DegreeMismatch, "element degree mismatch");
  }
  const auto e = SignedPermutation::identity(degree);
  if (!sorted_contains(elements, e)) {
    throw Error(ErrorCode::NotSubgroup, "element set lacks the identity");
  }
  for (const auto& x : elements) {
    if (!sorted_contains(elements, x.inverse())) {
      throw Error(ErrorCode::NotSubgroup, "element set is not closed under inverse");
    }
    for (const auto& y : elements) {
      if (!sorted_contains(elements, compose(x, y))) {
        throw Error(ErrorCode::NotSubgroup, "element set is not closed under composition");
      }
    }
  }
  for (const auto& g : generators) {
    if (!sorted_contains(elements, g)) {
      throw Error(ErrorCode::NotSubgroup, "generator " + g.to_string() + " outside element set");
    }
  }
  data->generators = dedupe_generators(std::move(generators));
  data->identity_index = static_cast<std::size_t>(
      std::lower_bound(elements.begin(), elements.end(), e) - elements.begin());
  data->elements = std::move(elements);
  return FiniteGroup(std::move(data));
}

std::optional<std::size_t> FiniteGroup::index_of(const SignedPermutation& w) const {
  const auto& els = data_->elements;
  auto it = std::lower_bound(els.begin(), els.end(), w);
  if (it == els.end() || *it != w) return std::nullopt;
  return static_cast<std::size_t>(it - els.begin());
}

bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
  if (a.data_ == b.data_) return true;
  return a.data_->degree == b.data_->degree && a.data_->elements == b.data_->elements;
}

bool is_subgroup(const ElementSet& candidate, const FiniteGroup& ambient) {
  for (const auto& x : candidate) {
    if (!ambient.contains(x)) {
      throw Error(ErrorCode::InvalidArgument,
                  "element " + x.to_string() + " lies outside the ambient group");
    }
  }
  ElementSet set = candidate;
  normalize(set);
  if (!sorted_contains(set, ambient.identity())) return false;
  for (const auto& x : set) {
    if (!sorted_contains(set, x.inverse())) return false;
    for (const auto& y : set) {
      if (!sorted_contains(set, compose(x, y))) return false;
    }
  }
  return true;
}

ElementSet subgroup_closure(const FiniteGroup& ambient,
                            std::span<const SignedPermutation> generators) {
  for (const auto& g : generators) {
    if (!ambient.contains(g)) {
      throw Error(ErrorCode::InvalidArgument,
                  "generator " + g.to_string() + " lies outside the ambient group");
    }
  }
  return closure_elements(ambient.degree(), generators);
}

std::vector<SignedPermutation> greedy_generating_set(const ElementSet& subgroup) {
  std::vector<SignedPermutation> gens;
  if (subgroup.empty()) return gens;
  const int degree = subgroup.front().degree();
  ElementSet span = closure_elements(degree, gens);
  for (const auto& x : subgroup) {
    if (sorted_contains(span, x)) continue;
    gens.push_back(x);
    span = closure_elements(degree, gens);
  }
  return gens;
}

std::vector<ElementSet> all_subgroups(const FiniteGroup& group) {
  std::vector<SignedPermutation> cyclic_gens(group.elements().begin(), group.elements().end());
  std::set<ElementSet> found;
  std::vector<ElementSet> frontier;
  for (const auto& g : cyclic_gens) {
    auto c = closure_elements(group.degree(), std::span(&g, 1));
    if (found.insert(c).second) frontier.push_back(std::move(c));
  }
  // Every subgroup is a join of cyclic subgroups; grow joins until stable.
  while (!frontier.empty()) {
    std::vector<ElementSet> next;
    for (const auto& h : frontier) {
      auto gens = greedy_generating_set(h);
      for (const auto& g : cyclic_gens) {
        if (sorted_contains(h, g)) continue;
        gens.push_back(g);
        auto j = closure_elements(group.degree(), gens);
        gens.pop_back();
        if (found.insert(j).second) next.push_back(std::move(j));
      }
    }
    frontier = std::move(next);
  }
  return {found.begin(), found.end()};
}

// ---------------------------------------------------------------------------
// GroupHom

bool GroupHom::respects_products(const FiniteGroup& domain, const FiniteGroup& codomain,
                                 const std::vector<std::uint32_t>& table) {
  const std::size_t n = domain.order();
  if (table[domain.identity_index()] != codomain.identity_index()) return false;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto gh = domain.index_of(compose(domain.element(i), domain.element(j)));
      const auto image = codomain.index_of(
          compose(codomain.element(table[i]), codomain.element(table[j])));
      if (!gh || !image || table[*gh] != *image) return false;
    }
  }
  return true;
}

GroupHom GroupHom::from_table(FiniteGroup domain, FiniteGroup codomain,
                              std::vector<std::uint32_t> table) {
  if (table.size() != domain.order()) {
    throw Error(ErrorCode::NotHomomorphism, "table is not total on the domain");
  }
  for (auto t : table) {
    if (t >= codomain.order()) throw Error(ErrorCode::NotHomomorphism, "table leaves codomain");
  }
  if (!respects_products(domain, codomain, table)) {
    throw Error(ErrorCode::NotHomomorphism, "map does not respect products");
  }
  return GroupHom(std::move(domain), std::move(codomain), std::move(table));
}

std::optional<GroupHom> GroupHom::try_from_images(const FiniteGroup& domain,
                                                  const FiniteGroup& codomain,
                                                  std::span<const SignedPermutation> gens,
                                                  std::span<const SignedPermutation> images) {
  if (images.size() != gens.size()) return std::nullopt;
  std::vector<std::uint32_t> gen_images;
  for (const auto& img : images) {
    auto idx = codomain.index_of(img);
    if (!idx) return std::nullopt;
    gen_images.push_back(static_cast<std::uint32_t>(*idx));
  }
  constexpr auto kUnset = static_cast<std::uint32_t>(-1);
  std::vector<std::uint32_t> table(domain.order(), kUnset);
  std::deque<std::size_t> queue;
  table[domain.identity_index()] = static_cast<std::uint32_t>(codomain.identity_index());
  queue.push_back(domain.identity_index());
  while (!queue.empty()) {
    const std::size_t x = queue.front();
    queue.pop_front();
    for (std::size_t k = 0; k < gens.size(); ++k) {
      const auto y = domain.index_of(compose(gens[k], domain.element(x)));
      const auto image =
          codomain.index_of(compose(codomain.element(gen_images[k]), codomain.element(table[x])));
      if (!y || !image) return std::nullopt;
      if (table[*y] == kUnset) {
        table[*y] = static_cast<std::uint32_t>(*image);
        queue.push_back(*y);
      } else if (table[*y] != *image) {
        return std::nullopt;
      }
    }
  }
  if (std::find(table.begin(), table.end(), kUnset) != table.end()) return std::nullopt;
  if (!respects_products(domain, codomain, table)) return std::nullopt;
  return GroupHom(domain, codomain, std::move(table));
}

GroupHom GroupHom::from_generator_images(FiniteGroup domain, FiniteGroup codomain,
                                         std::span<const SignedPermutation> images) {
  if (images.size() != domain.generators().size()) {
    throw Error(ErrorCode::NotHomomorphism, "every domain generator needs an image");
  }
  auto h = try_from_images(domain, codomain, domain.generators(), images);
  if (!h) {
    throw Error(ErrorCode::NotHomomorphism,
                "generator images do not extend to a homomorphism");
  }
  return *std::move(h);
}

GroupHom GroupHom::from_generator_images(
    FiniteGroup domain, FiniteGroup codomain,
    const std::map<SignedPermutation, SignedPermutation>& images) {
  std::vector<SignedPermutation> ordered;
  for (const auto& g : domain.generators()) {
    auto it = images.find(g);
    if (it == images.end()) {
      throw Error(ErrorCode::NotHomomorphism, "generator " + g.to_string() + " has no image");
    }
    ordered.push_back(it->second);
  }
  return from_generator_images(std::move(domain), std::move(codomain), ordered);
}

GroupHom GroupHom::identity(const FiniteGroup& group) {
  std::vector<std::uint32_t> table(group.order());
  std::iota(table.begin(), table.end(), 0u);
  return GroupHom(group, group, std::move(table));
}

GroupHom GroupHom::trivial(FiniteGroup domain, FiniteGroup codomain) {
  std::vector<std::uint32_t> table(domain.order(),
                                   static_cast<std::uint32_t>(codomain.identity_index()));
  return GroupHom(std::move(domain), std::move(codomain), std::move(table));
}

GroupHom GroupHom::inclusion(FiniteGroup domain, FiniteGroup codomain) {
  std::vector<std::uint32_t> table;
  for (const auto& x : domain.elements()) {
    auto idx = codomain.index_of(x);
    if (!idx) throw Error(ErrorCode::NotHomomorphism, "inclusion domain is not a subset");
    table.push_back(static_cast<std::uint32_t>(*idx));
  }
  return GroupHom(std::move(domain), std::move(codomain), std::move(table));
}

SignedPermutation GroupHom::operator()(const SignedPermutation& g) const {
  auto idx = domain_.index_of(g);
  if (!idx) throw Error(ErrorCode::InvalidArgument, g.to_string() + " is not in the domain");
  return at_index(*idx);
}

ElementSet GroupHom::image_of(const ElementSet& subset) const {
  ElementSet out;
  out.reserve(subset.size());
  for (const auto& g : subset) out.push_back((*this)(g));
  normalize(out);
  return out;
}

bool GroupHom::is_injective() const {
  std::vector<std::uint32_t> t = table_;
  std::sort(t.begin(), t.end());
  return std::adjacent_find(t.begin(), t.end()) == t.end();
}

bool GroupHom::is_surjective() const {
  std::vector<bool> hit(codomain_.order(), false);
  for (auto t : table_) hit[t] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

GroupHom compose(const GroupHom& second, const GroupHom& first) {
  if (!(first.codomain() == second.domain())) {
    throw Error(ErrorCode::NotComposable, "codomain of the first map is not the domain of the second");
  }
  std::vector<std::uint32_t> table;
  table.reserve(first.table().size());
  for (auto t : first.table()) table.push_back(second.table()[t]);
  return GroupHom::from_table(first.domain(), second.codomain(), std::move(table));
}

FiniteGroup kernel(const GroupHom& h) {
  ElementSet els;
  const auto e = h.codomain().identity_index();
  for (std::size_t i = 0; i < h.table().size(); ++i) {
    if (h.table()[i] == e) els.push_back(h.domain().element(i));
  }
  auto gens = greedy_generating_set(els);
  return FiniteGroup::from_elements(h.domain().degree(), std::move(els), std::move(gens));
}

// ---------------------------------------------------------------------------
// Direct products

DirectProduct direct_product(std::span<const FiniteGroup> factors) {
  if (factors.empty()) throw Error(ErrorCode::InvalidArgument, "direct product of no factors");
  DirectProduct out{FiniteGroup::trivial(), {}, {}, {}};
  int degree = 0;
  for (const auto& f : factors) {
    out.block_degrees.push_back(f.degree());
    degree += f.degree();
  }

  std::vector<SignedPermutation> identities;
  for (const auto& f : factors) identities.push_back(f.identity());

  std::vector<SignedPermutation> generators;
  for (std::size_t k = 0; k < factors.size(); ++k) {
    for (const auto& g : factors[k].generators()) {
      auto blocks = identities;
      blocks[k] = g;
      generators.push_back(join_blocks(blocks));
    }
  }

  ElementSet elements;
  std::vector<std::size_t> digit(factors.size(), 0);
  bool more = true;
  while (more) {
    std::vector<SignedPermutation> blocks;
    for (std::size_t k = 0; k < factors.size(); ++k) blocks.push_back(factors[k].element(digit[k]));
    elements.push_back(join_blocks(blocks));
    more = false;
    for (std::size_t k = factors.size(); k-- > 0;) {
      if (++digit[k] < factors[k].order()) {
        more = true;
        break;
      }
      digit[k] = 0;
    }
  }
  normalize(elements);

  // Generated closure must coincide with the block-wise product.
  out.group = FiniteGroup::closure(degree, generators);
  if (out.group.elements() != elements) {
    throw Error(ErrorCode::Internal, "direct product closure disagrees with block product");
  }

  for (std::size_t k = 0; k < factors.size(); ++k) {
    std::vector<std::uint32_t> table;
    table.reserve(out.group.order());
    for (const auto& w : out.group.elements()) {
      auto parts = split_blocks(w, out.block_degrees);
      table.push_back(static_cast<std::uint32_t>(*factors[k].index_of(parts[k])));
    }
    out.projections.push_back(GroupHom::from_table(out.group, factors[k], std::move(table)));

    std::vector<std::uint32_t> embed;
    for (const auto& x : factors[k].elements()) {
      auto blocks = identities;
      blocks[k] = x;
      embed.push_back(static_cast<std::uint32_t>(*out.group.index_of(join_blocks(blocks))));
    }
    out.embeddings.push_back(GroupHom::from_table(factors[k], out.group, std::move(embed)));
  }
  return out;
}

DirectProduct direct_product(const FiniteGroup& first, const FiniteGroup& second) {
  const FiniteGroup factors[] = {first, second};
  return direct_product(factors);
}

// ---------------------------------------------------------------------------
// Hyperoctahedral groups

FiniteGroup hyperoctahedral_group(int degree) {
  std::vector<SignedPermutation> gens;
  for (int i = 1; i < degree; ++i) gens.push_back(standard_generator_r(degree, i));
  gens.push_back(standard_generator_v(degree, 1));
  return FiniteGroup::closure(degree, std::move(gens));
}

FiniteGroup symmetric_group(int degree) {
  std::vector<SignedPermutation> gens;
  for (int i = 1; i < degree; ++i) gens.push_back(standard_generator_r(degree, i));
  return FiniteGroup::closure(degree, std::move(gens));
}

std::vector<RelationCheck> check_presentation(int degree) {
  if (degree < 1) throw Error(ErrorCode::InvalidArgument, "degree must be positive");
  const int n = degree;
  auto r = [n](int i) { return standard_generator_r(n, i); };
  auto v = [n](int i) { return standard_generator_v(n, i); };
  auto is_e = [](const SignedPermutation& w) { return w.is_identity(); };
  auto idx = [](const char* name, int i) { return std::string(name) + "_" + std::to_string(i); };

  std::vector<RelationCheck> out;
  for (int i = 1; i < n; ++i) {
    out.push_back({"(" + idx("r", i) + ")^2 = e", is_e(power(r(i), 2))});
  }
  for (int i = 1; i + 1 < n; ++i) {
    out.push_back({"(" + idx("r", i) + " " + idx("r", i + 1) + ")^3 = e",
                   is_e(power(compose(r(i), r(i + 1)), 3))});
  }
  for (int i = 1; i < n; ++i) {
    for (int j = i + 2; j < n; ++j) {
      out.push_back({"(" + idx("r", i) + " " + idx("r", j) + ")^2 = e",
                     is_e(power(compose(r(i), r(j)), 2))});
    }
  }
  for (int i = 1; i <= n; ++i) {
    out.push_back({"(" + idx("v", i) + ")^2 = e", is_e(power(v(i), 2))});
  }
  if (n >= 2) {
    out.push_back({"(v_1 r_1)^4 = e", is_e(power(compose(v(1), r(1)), 4))});
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      out.push_back({idx("v", i) + " " + idx("v", j) + " = " + idx("v", j) + " " + idx("v", i),
                     compose(v(i), v(j)) == compose(v(j), v(i))});
    }
  }
  for (int i = 1; i < n; ++i) {
    out.push_back({idx("r", i) + " " + idx("v", i) + " " + idx("r", i) + " = " + idx("v", i + 1),
                   compose(r(i), compose(v(i), r(i))) == v(i + 1)});
  }
  for (int i = 1; i < n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (j == i || j == i + 1) continue;
      out.push_back({idx("r", i) + " " + idx("v", j) + " = " + idx("v", j) + " " + idx("r", i),
                     compose(r(i), v(j)) == compose(v(j), r(i))});
    }
  }
  return out;
}

}  // namespace softgrp
