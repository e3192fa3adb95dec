#include "oracle_forge/groups/enumeration.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <optional>
#include <queue>
#include <set>
#include <stdexcept>

namespace oracle_forge::groups {

namespace {

constexpr Element kUnset = std::numeric_limits<Element>::max();

std::size_t count_members(const std::vector<char>& in) {
  return static_cast<std::size_t>(std::count(in.begin(), in.end(), 1));
}

// Extends generator images to the subgroup they generate. Returns false on
// an inconsistency, i.e. when no homomorphism has these generator images.
bool extend_images(const FiniteGroup& g, const FiniteGroup& target,
                   const std::vector<Element>& gens, const std::vector<Element>& gen_images,
                   std::vector<Element>& map) {
  map.assign(g.order(), kUnset);
  map[0] = 0;
  std::queue<Element> todo;
  todo.push(0);
  while (!todo.empty()) {
    const Element x = todo.front();
    todo.pop();
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const Element y = g.mul(x, gens[i]);
      const Element fy = target.mul(map[x], gen_images[i]);
      if (map[y] == kUnset) {
        map[y] = fy;
        todo.push(y);
      } else if (map[y] != fy) {
        return false;
      }
    }
  }
  return true;
}

void dfs_homs(const FiniteGroup& g, const FiniteGroup& target, const std::vector<Element>& gens,
              std::vector<Element>& gen_images, std::vector<std::vector<Element>>& out) {
  const std::size_t depth = gen_images.size();
  std::vector<Element> map;
  if (depth > 0) {
    const std::vector<Element> prefix(gens.begin(), gens.begin() + depth);
    if (!extend_images(g, target, prefix, gen_images, map)) return;
  }
  if (depth == gens.size()) {
    if (depth == 0) map.assign(g.order(), 0);
    out.push_back(std::move(map));
    return;
  }
  const std::size_t gen_order = g.element_order(gens[depth]);
  for (Element y = 0; y < target.order(); ++y) {
    if (gen_order % target.element_order(y) != 0) continue;
    gen_images.push_back(y);
    dfs_homs(g, target, gens, gen_images, out);
    gen_images.pop_back();
  }
}

// max over primes p of log_p |A / A^p| for the abelianization A; a lower
// bound on the number of generators of g.
std::size_t generator_lower_bound(const FiniteGroup& g) {
  const FiniteGroup q = abelianization(g).quotient;
  const std::size_t n = q.order();
  std::size_t best = 0;
  std::size_t rest = n;
  for (std::size_t p = 2; p <= rest; ++p) {
    if (rest % p != 0) continue;
    while (rest % p == 0) rest /= p;
    std::vector<char> image(n, 0);
    for (Element x = 0; x < n; ++x) image[q.power(x, p)] = 1;
    std::size_t quotient = n / count_members(image);
    std::size_t rank = 0;
    while (quotient > 1) {
      quotient /= p;
      ++rank;
    }
    best = std::max(best, rank);
  }
  return best;
}

std::vector<Element> greedy_generators(const FiniteGroup& g) {
  std::vector<Element> gens;
  std::vector<char> current = generated_subgroup(g, gens);
  while (count_members(current) < g.order()) {
    Element best = 0;
    std::size_t best_size = 0;
    for (Element x = 1; x < g.order(); ++x) {
      if (current[x]) continue;
      auto trial = gens;
      trial.push_back(x);
      const std::size_t size = count_members(generated_subgroup(g, trial));
      if (size > best_size) {
        best = x;
        best_size = size;
      }
    }
    gens.push_back(best);
    current = generated_subgroup(g, gens);
  }
  return gens;
}

// Searches irredundant ascending sequences of exactly k elements.
bool search_generators(const FiniteGroup& g, std::size_t k, Element start,
                       std::vector<Element>& chosen) {
  const std::vector<char> current = generated_subgroup(g, chosen);
  if (count_members(current) == g.order()) return true;
  if (chosen.size() == k) return false;
  for (Element x = start; x < g.order(); ++x) {
    if (current[x]) continue;
    chosen.push_back(x);
    if (search_generators(g, k, x + 1, chosen)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

Abelianization abelianization(const FiniteGroup& g) {
  const std::size_t n = g.order();
  std::set<Element> commutators;
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) commutators.insert(g.commutator(a, b));
  }
  const std::vector<char> derived =
      generated_subgroup(g, std::vector<Element>(commutators.begin(), commutators.end()));

  std::vector<Element> coset_of(n, kUnset);
  std::vector<Element> reps;
  for (Element x = 0; x < n; ++x) {
    if (coset_of[x] != kUnset) continue;
    const Element id = reps.size();
    reps.push_back(x);
    for (Element h = 0; h < n; ++h) {
      if (derived[h]) coset_of[g.mul(x, h)] = id;
    }
  }
  const std::size_t m = reps.size();
  Table t(m, std::vector<Element>(m));
  for (Element a = 0; a < m; ++a) {
    for (Element b = 0; b < m; ++b) t[a][b] = coset_of[g.mul(reps[a], reps[b])];
  }
  FiniteGroup quotient = FiniteGroup::from_table(std::move(t));
  GroupHom projection = GroupHom::create(g, quotient, coset_of);
  return {std::move(quotient), std::move(projection), derived};
}

std::vector<CyclicCharacter> one_dim_characters(const FiniteGroup& g) {
  const std::size_t e = abelianization(g).quotient.exponent();
  std::vector<CyclicCharacter> out;
  for (const GroupHom& f : enumerate_homs(g, cyclic(e))) {
    out.push_back(CyclicCharacter::create(g, e, f.images()));
  }
  return out;
}

std::vector<Element> generating_sequence(const FiniteGroup& g) {
  std::vector<Element> gens;
  std::vector<char> current = generated_subgroup(g, gens);
  for (Element x = 1; x < g.order(); ++x) {
    if (current[x]) continue;
    gens.push_back(x);
    current = generated_subgroup(g, gens);
  }
  return gens;
}

std::vector<GroupHom> enumerate_homs(const FiniteGroup& g, const FiniteGroup& target) {
  const std::vector<Element> gens = generating_sequence(g);
  std::vector<std::vector<Element>> maps;
  std::vector<Element> gen_images;
  dfs_homs(g, target, gens, gen_images, maps);
  std::sort(maps.begin(), maps.end());
  std::vector<GroupHom> out;
  out.reserve(maps.size());
  for (auto& m : maps) out.push_back(GroupHom::create(g, target, std::move(m)));
  return out;
}

std::vector<GroupHom> enumerate_homs(const FiniteGroup& g, const AbelianFactors& target) {
  return enumerate_homs(g, target.group());
}

std::vector<Element> small_generating_set(const FiniteGroup& g) {
  std::vector<Element> best = greedy_generators(g);
  if (g.order() > kExactGeneratorLimit) return best;
  const std::size_t lower = generator_lower_bound(g);
  for (std::size_t k = lower; k < best.size(); ++k) {
    std::vector<Element> chosen;
    if (search_generators(g, k, 1, chosen)) return chosen;
  }
  return best;
}

std::size_t classical_baseline_queries(const FiniteGroup& g) {
  return small_generating_set(g).size();
}

}  // namespace oracle_forge::groups
