#include "oracle_forge/groups/finite_group.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <sstream>

namespace oracle_forge::groups {

namespace {

std::string triple(Element a, Element b, Element c) {
  std::ostringstream os;
  os << "(" << a << ", " << b << ", " << c << ")";
  return os.str();
}

}  // namespace

FiniteGroup FiniteGroup::from_table(Table table, std::vector<std::string> labels) {
  const std::size_t n = table.size();
  if (n == 0) throw GroupAxiomError("group table is empty");
  if (!labels.empty() && labels.size() != n) {
    throw GroupAxiomError("label count " + std::to_string(labels.size()) +
                          " does not match order " + std::to_string(n));
  }
  for (std::size_t g = 0; g < n; ++g) {
    if (table[g].size() != n) {
      throw GroupAxiomError("row " + std::to_string(g) + " has " +
                            std::to_string(table[g].size()) + " entries, expected " +
                            std::to_string(n));
    }
    for (std::size_t h = 0; h < n; ++h) {
      if (table[g][h] >= n) {
        throw GroupAxiomError("entry " + std::to_string(g) + "*" + std::to_string(h) + " = " +
                              std::to_string(table[g][h]) + " is out of range");
      }
    }
  }
  for (std::size_t g = 0; g < n; ++g) {
    if (table[0][g] != g || table[g][0] != g) {
      throw GroupAxiomError("element 0 is not the identity: fails at element " +
                            std::to_string(g));
    }
  }
  // Latin square: each row and each column is a permutation.
  for (std::size_t g = 0; g < n; ++g) {
    std::vector<char> row_seen(n, 0), col_seen(n, 0);
    for (std::size_t h = 0; h < n; ++h) {
      if (row_seen[table[g][h]]++) {
        throw GroupAxiomError("not a Latin square: row " + std::to_string(g) + " repeats " +
                              std::to_string(table[g][h]));
      }
      if (col_seen[table[h][g]]++) {
        throw GroupAxiomError("not a Latin square: column " + std::to_string(g) + " repeats " +
                              std::to_string(table[h][g]));
      }
    }
  }
  if (n <= kAssociativityCheckLimit) {
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        const Element ab = table[a][b];
        for (std::size_t c = 0; c < n; ++c) {
          if (table[ab][c] != table[a][table[b][c]]) {
            throw GroupAxiomError("not associative at triple " + triple(a, b, c));
          }
        }
      }
    }
  }

  auto data = std::make_shared<Data>();
  data->inverses.resize(n);
  for (std::size_t g = 0; g < n; ++g) {
    for (std::size_t h = 0; h < n; ++h) {
      if (table[g][h] == 0) data->inverses[g] = h;
    }
  }
  data->orders.resize(n);
  for (std::size_t g = 0; g < n; ++g) {
    std::size_t k = 1;
    Element x = g;
    while (x != 0) {
      x = table[x][g];
      ++k;
    }
    data->orders[g] = k;
  }
  data->table = std::move(table);
  data->labels = std::move(labels);
  return FiniteGroup(std::move(data));
}

Element FiniteGroup::commutator(Element g, Element h) const {
  return mul(mul(g, h), mul(inverse(g), inverse(h)));
}

Element FiniteGroup::power(Element g, std::size_t k) const {
  Element x = 0;
  for (std::size_t i = 0; i < k % element_order(g); ++i) x = mul(x, g);
  return x;
}

std::size_t FiniteGroup::exponent() const {
  std::size_t e = 1;
  for (std::size_t o : data_->orders) e = std::lcm(e, o);
  return e;
}

bool FiniteGroup::is_abelian() const {
  const std::size_t n = order();
  for (std::size_t g = 0; g < n; ++g) {
    for (std::size_t h = g + 1; h < n; ++h) {
      if (mul(g, h) != mul(h, g)) return false;
    }
  }
  return true;
}

std::string FiniteGroup::label(Element g) const {
  return data_->labels.empty() ? std::to_string(g) : data_->labels[g];
}

FiniteGroup cyclic(std::size_t n) {
  if (n == 0) throw std::invalid_argument("cyclic group order must be positive");
  Table t(n, std::vector<Element>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  }
  return FiniteGroup::from_table(std::move(t));
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  const std::size_t m = g.order();
  const std::size_t n = h.order();
  Table t(m * n, std::vector<Element>(m * n));
  for (std::size_t a = 0; a < m * n; ++a) {
    for (std::size_t b = 0; b < m * n; ++b) {
      t[a][b] = g.mul(a / n, b / n) * n + h.mul(a % n, b % n);
    }
  }
  std::vector<std::string> labels;
  if (!g.labels().empty() || !h.labels().empty()) {
    for (std::size_t a = 0; a < m * n; ++a) {
      labels.push_back("(" + g.label(a / n) + "," + h.label(a % n) + ")");
    }
  }
  return FiniteGroup::from_table(std::move(t), std::move(labels));
}

FiniteGroup symmetric(std::size_t n) {
  if (n == 0 || n > 5) throw std::invalid_argument("symmetric group degree must be in 1..5");
  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  const std::size_t order = perms.size();
  auto index_of = [&](const std::vector<std::size_t>& q) {
    return static_cast<Element>(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
  };
  Table t(order, std::vector<Element>(order));
  std::vector<std::size_t> prod(n);
  for (std::size_t a = 0; a < order; ++a) {
    for (std::size_t b = 0; b < order; ++b) {
      for (std::size_t i = 0; i < n; ++i) prod[i] = perms[a][perms[b][i]];
      t[a][b] = index_of(prod);
    }
  }
  std::vector<std::string> labels;
  for (const auto& q : perms) {
    std::string s = "[";
    for (std::size_t i = 0; i < n; ++i) s += (i ? " " : "") + std::to_string(q[i]);
    labels.push_back(s + "]");
  }
  return FiniteGroup::from_table(std::move(t), std::move(labels));
}

FiniteGroup dihedral(std::size_t n) {
  if (n == 0 || n > 12) throw std::invalid_argument("dihedral parameter must be in 1..12");
  const std::size_t order = 2 * n;
  Table t(order, std::vector<Element>(order));
  for (std::size_t x = 0; x < order; ++x) {
    const std::size_t a = x % n, i = x / n;
    for (std::size_t y = 0; y < order; ++y) {
      const std::size_t b = y % n, j = y / n;
      // r^a s^i . r^b s^j = r^(a + (-1)^i b) s^(i+j)
      const std::size_t k = i == 0 ? (a + b) % n : (a + n - b) % n;
      t[x][y] = k + n * ((i + j) % 2);
    }
  }
  std::vector<std::string> labels;
  for (std::size_t x = 0; x < order; ++x) {
    labels.push_back("r" + std::to_string(x % n) + (x / n ? "s" : ""));
  }
  return FiniteGroup::from_table(std::move(t), std::move(labels));
}

std::vector<char> generated_subgroup(const FiniteGroup& g,
                                     const std::vector<Element>& generators) {
  std::vector<char> in(g.order(), 0);
  std::queue<Element> todo;
  in[0] = 1;
  todo.push(0);
  while (!todo.empty()) {
    const Element x = todo.front();
    todo.pop();
    for (Element s : generators) {
      const Element y = g.mul(x, s);
      if (!in[y]) {
        in[y] = 1;
        todo.push(y);
      }
    }
  }
  return in;
}

}  // namespace oracle_forge::groups
