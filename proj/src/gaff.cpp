#include "toral/gaff.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <thread>

#include "toral/error.hpp"
#include "toral/zlattice.hpp"

namespace toral {

AffineLatticeMap::AffineLatticeMap(IntMatrix linear, LatticeVector translation)
    : linear_(std::move(linear)), translation_(std::move(translation)) {
  if (!linear_.is_square() || linear_.rows() != translation_.size())
    throw DimensionError("affine map: linear part and translation do not match");
  if (!is_unimodular(linear_)) throw DimensionError("affine map: linear part is not unimodular");
}

AffineLatticeMap AffineLatticeMap::identity(std::size_t rank) {
  return {IntMatrix::identity(rank), LatticeVector(rank)};
}

LatticeVector AffineLatticeMap::apply(const LatticeVector &m) const { return linear_.apply(m) + translation_; }

AffineLatticeMap AffineLatticeMap::inverse() const {
  IntMatrix inv = unimodular_inverse(linear_);
  LatticeVector t = -inv.apply(translation_);
  return {std::move(inv), std::move(t)};
}

AffineLatticeMap operator*(const AffineLatticeMap &a, const AffineLatticeMap &b) {
  return {a.linear_ * b.linear_, a.linear_.apply(b.translation_) + a.translation_};
}

Permutation compose_permutations(const Permutation &a, const Permutation &b) {
  Permutation c(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) c[i] = a[b[i]];
  return c;
}

Permutation invert_permutation(const Permutation &p) {
  Permutation inv(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) inv[p[i]] = i;
  return inv;
}

std::size_t permutation_order(const Permutation &p) {
  std::vector<bool> seen(p.size(), false);
  std::size_t order = 1;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      ++len;
    }
    order = std::lcm(order, len);
  }
  return order;
}

std::string cycle_notation(const Permutation &p) {
  std::vector<bool> seen(p.size(), false);
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == i) continue;
    out += '(';
    for (std::size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      if (j != i) out += ' ';
      out += std::to_string(j + 1);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

bool GaffGroup::is_abelian() const {
  for (std::size_t a = 0; a < perm_action.size(); ++a)
    for (std::size_t b = a + 1; b < perm_action.size(); ++b)
      if (compose_permutations(perm_action[a], perm_action[b]) != compose_permutations(perm_action[b], perm_action[a]))
        return false;
  return true;
}

std::vector<std::size_t> GaffGroup::element_orders() const {
  std::vector<std::size_t> orders;
  orders.reserve(perm_action.size());
  for (const auto &p : perm_action) orders.push_back(permutation_order(p));
  std::sort(orders.begin(), orders.end());
  return orders;
}

std::vector<LatticeVector> relation_lattice_basis(std::span<const LatticeVector> support) {
  if (support.empty()) throw InputError("relation lattice of an empty support");
  const std::size_t r = support.front().size();
  IntMatrix A(r + 1, support.size());
  for (std::size_t j = 0; j < support.size(); ++j) {
    if (support[j].size() != r) throw DimensionError("support points of different rank");
    for (std::size_t i = 0; i < r; ++i) A(i, j) = static_cast<long>(support[j][i]);
    A(r, j) = 1;
  }
  return kernel_basis(A);
}

namespace {

// prod_i (alpha_{sigma(i)} / alpha_i)^{a_i} == 1 for every relation a.
bool coefficient_relations_hold(std::span<const GaussianRational> alpha, const Permutation &sigma,
                                std::span<const LatticeVector> relations) {
  for (const auto &a : relations) {
    GaussianRational ratio(1);
    for (std::size_t i = 0; i < alpha.size(); ++i)
      if (a[i] != 0) ratio *= (alpha[sigma[i]] / alpha[i]).pow(a[i]);
    if (!ratio.is_one()) return false;
  }
  return true;
}

std::vector<GaussianRational> coefficients_in_support_order(const LaurentPoly &h) {
  std::vector<GaussianRational> alpha;
  alpha.reserve(h.size());
  for (const auto &[m, c] : h.terms()) alpha.push_back(c);
  return alpha;
}

// The permutation of the sorted support induced by phi, if phi preserves it.
std::optional<Permutation> induced_permutation(std::span<const LatticeVector> support, const AffineLatticeMap &phi) {
  Permutation sigma(support.size());
  std::vector<bool> hit(support.size(), false);
  for (std::size_t i = 0; i < support.size(); ++i) {
    const LatticeVector image = phi.apply(support[i]);
    auto it = std::lower_bound(support.begin(), support.end(), image);
    if (it == support.end() || *it != image) return std::nullopt;
    const auto j = static_cast<std::size_t>(it - support.begin());
    if (hit[j]) return std::nullopt;
    hit[j] = true;
    sigma[i] = j;
  }
  return sigma;
}

/// An affine basis p_{b_0}, ..., p_{b_r} of the support together with the
/// rational inverse of the matrix whose columns are p_{b_k} - p_{b_0}.
struct AffineFrame {
  std::vector<std::size_t> basis;
  std::vector<mpq_class> difference_inverse; // r x r, row-major
  std::size_t rank = 0;
};

AffineFrame make_frame(std::span<const LatticeVector> support) {
  if (support.empty()) throw InputError("empty support");
  const std::size_t r = support.front().size();
  AffineFrame frame;
  frame.rank = r;
  frame.basis.push_back(0);
  std::vector<LatticeVector> diffs;
  for (std::size_t j = 1; j < support.size() && diffs.size() < r; ++j) {
    diffs.push_back(support[j] - support[0]);
    if (hnf(IntMatrix::from_rows(diffs, r)).rank == diffs.size())
      frame.basis.push_back(j);
    else
      diffs.pop_back();
  }
  if (diffs.size() < r)
    throw ScopeError("support differences span rank " + std::to_string(diffs.size()) + " < " + std::to_string(r) +
                     "; split off the torus factor first");

  // Gauss-Jordan on [D | I] over Q, D having the differences as columns.
  std::vector<mpq_class> aug(r * 2 * r);
  auto at = [&](std::size_t i, std::size_t j) -> mpq_class & { return aug[i * 2 * r + j]; };
  for (std::size_t k = 0; k < r; ++k)
    for (std::size_t i = 0; i < r; ++i) at(i, k) = static_cast<long>(diffs[k][i]);
  for (std::size_t i = 0; i < r; ++i) at(i, r + i) = 1;
  for (std::size_t c = 0; c < r; ++c) {
    std::size_t p = c;
    while (sgn(at(p, c)) == 0) ++p;
    if (p != c)
      for (std::size_t j = 0; j < 2 * r; ++j) std::swap(at(p, j), at(c, j));
    const mpq_class pivot = at(c, c);
    for (std::size_t j = 0; j < 2 * r; ++j) at(c, j) /= pivot;
    for (std::size_t i = 0; i < r; ++i) {
      if (i == c || sgn(at(i, c)) == 0) continue;
      const mpq_class f = at(i, c);
      for (std::size_t j = 0; j < 2 * r; ++j) at(i, j) -= f * at(c, j);
    }
  }
  frame.difference_inverse.resize(r * r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) frame.difference_inverse[i * r + j] = at(i, r + j);
  return frame;
}

// The affine map sending the frame points to `images` (indices into the
// support), if it is integral and unimodular.
std::optional<AffineLatticeMap> map_from_frame(const AffineFrame &frame, std::span<const LatticeVector> support,
                                               std::span<const std::size_t> images) {
  const std::size_t r = frame.rank;
  IntMatrix L(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      mpq_class acc = 0;
      for (std::size_t k = 0; k < r; ++k) {
        const std::int64_t d = support[images[k + 1]][i] - support[images[0]][i];
        if (d != 0) acc += frame.difference_inverse[k * r + j] * d;
      }
      if (acc.get_den() != 1) return std::nullopt;
      L(i, j) = acc.get_num();
    }
  if (!is_unimodular(L)) return std::nullopt;
  LatticeVector t = support[images[0]] - L.apply(support[frame.basis[0]]);
  return AffineLatticeMap(std::move(L), std::move(t));
}

mpz_class content(const LatticeVector &v) {
  mpz_class g = 0;
  for (auto x : v) {
    mpz_class a = static_cast<long>(x);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
  }
  return g;
}

struct Candidate {
  Permutation sigma;
  AffineLatticeMap phi;
};

class GaffSearch {
public:
  GaffSearch(const LaurentPoly &h, std::span<const LatticeVector> support)
      : support_(support), frame_(make_frame(support)), alpha_(coefficients_in_support_order(h)),
        relations_(relation_lattice_basis(support)) {
    const std::size_t n = support.size();
    content_.assign(n, std::vector<mpz_class>(n));
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) content_[a][b] = content(support[a] - support[b]);
    signature_.resize(n);
    for (std::size_t a = 0; a < n; ++a) {
      signature_[a] = content_[a];
      std::sort(signature_[a].begin(), signature_[a].end());
    }
  }

  // Images allowed for the first frame point; each is one top-level branch.
  std::vector<std::size_t> root_branches() const { return compatible(0, {}); }

  void search_branch(std::size_t root_image, std::vector<Candidate> &out) const {
    std::vector<std::size_t> images{root_image};
    extend(images, out);
  }

private:
  // Support points that frame point `k` may map to, given earlier images.
  std::vector<std::size_t> compatible(std::size_t k, const std::vector<std::size_t> &images) const {
    const std::size_t src = frame_.basis[k];
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < support_.size(); ++j) {
      if (std::find(images.begin(), images.end(), j) != images.end()) continue;
      if (signature_[j] != signature_[src]) continue;
      bool ok = true;
      for (std::size_t e = 0; e < images.size() && ok; ++e)
        ok = content_[j][images[e]] == content_[src][frame_.basis[e]];
      if (ok) out.push_back(j);
    }
    return out;
  }

  void extend(std::vector<std::size_t> &images, std::vector<Candidate> &out) const {
    if (images.size() == frame_.basis.size()) {
      auto phi = map_from_frame(frame_, support_, images);
      if (!phi) return;
      auto sigma = induced_permutation(support_, *phi);
      if (!sigma) return;
      if (!coefficient_relations_hold(alpha_, *sigma, relations_)) return;
      out.push_back({std::move(*sigma), std::move(*phi)});
      return;
    }
    for (std::size_t j : compatible(images.size(), images)) {
      images.push_back(j);
      extend(images, out);
      images.pop_back();
    }
  }

  std::span<const LatticeVector> support_;
  AffineFrame frame_;
  std::vector<GaussianRational> alpha_;
  std::vector<LatticeVector> relations_;
  std::vector<std::vector<mpz_class>> content_;
  std::vector<std::vector<mpz_class>> signature_;
};

} // namespace

bool eq2_holds(const LaurentPoly &h, const AffineLatticeMap &phi, std::span<const LatticeVector> relations) {
  const auto support = h.support();
  if (phi.rank() != h.rank()) throw DimensionError("affine map and polynomial differ in rank");
  auto sigma = induced_permutation(support, phi);
  if (!sigma) throw InconsistencyError("affine map does not preserve the support");
  for (const auto &a : relations)
    if (a.size() != support.size()) throw DimensionError("relation length differs from the support size");
  return coefficient_relations_hold(coefficients_in_support_order(h), *sigma, relations);
}

std::optional<AffineLatticeMap> affine_extension(std::span<const LatticeVector> support, const Permutation &sigma) {
  if (sigma.size() != support.size()) throw DimensionError("permutation length differs from the support size");
  {
    std::vector<bool> hit(sigma.size(), false);
    for (auto j : sigma) {
      if (j >= sigma.size() || hit[j]) throw InputError("not a permutation");
      hit[j] = true;
    }
  }
  const AffineFrame frame = make_frame(support);
  std::vector<std::size_t> images;
  for (auto b : frame.basis) images.push_back(sigma[b]);
  auto phi = map_from_frame(frame, support, images);
  if (!phi) return std::nullopt;
  for (std::size_t i = 0; i < support.size(); ++i)
    if (phi->apply(support[i]) != support[sigma[i]]) return std::nullopt;
  return phi;
}

GaffGroup enumerate_gaff(const LaurentPoly &h, const GaffOptions &options) {
  if (h.is_zero()) throw InputError("GAff of the zero polynomial");
  if (h.size() > options.max_support)
    throw ScopeError("support has " + std::to_string(h.size()) + " points; the enumeration bound is " +
                     std::to_string(options.max_support) + " (raise --max-support)");

  GaffGroup group;
  group.support = h.support();
  const GaffSearch search(h, group.support);
  const auto roots = search.root_branches();

  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(options.threads, roots.size()));
  std::vector<std::vector<Candidate>> found(workers);
  if (workers == 1) {
    for (auto root : roots) search.search_branch(root, found[0]);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        for (std::size_t k = w; k < roots.size(); k += workers) search.search_branch(roots[k], found[w]);
      });
    for (auto &t : pool) t.join();
  }

  std::vector<Candidate> all;
  for (auto &part : found)
    for (auto &c : part) all.push_back(std::move(c));
  std::sort(all.begin(), all.end(), [](const Candidate &a, const Candidate &b) { return a.sigma < b.sigma; });
  for (auto &c : all) {
    group.perm_action.push_back(std::move(c.sigma));
    group.elements.push_back(std::move(c.phi));
  }
  return group;
}

} // namespace toral
