#include "oracle_forge/homid/algorithm.hpp"

#include <cmath>
#include <numeric>

#include "oracle_forge/frobenius/oracle.hpp"
#include "oracle_forge/groups/enumeration.hpp"
#include "oracle_forge/numeric/kernels.hpp"

namespace oracle_forge::homid {

using groups::Element;

std::string to_string(SimulationMode mode) {
  return mode == SimulationMode::kExact ? "exact" : "float";
}

std::string to_string(OracleKind kind) {
  return kind == OracleKind::kDiagram ? "diagram" : "operational";
}

namespace {

void check_dimensions(const FiniteGroup& g, const OracleAccess& oracle,
                      const CyclicCharacter& rho) {
  if (oracle.left_dim() != g.order() || oracle.right_dim() != rho.group().order()) {
    throw std::invalid_argument("oracle dimension mismatch: oracle acts on C^" +
                                std::to_string(oracle.left_dim()) + " (x) C^" +
                                std::to_string(oracle.right_dim()));
  }
}

// Right register amplitude of basis state a, before the 1/sqrt|A| factor.
Complex fourier_amplitude(const CyclicCharacter& rho, Element a, FourierConvention c) {
  const Complex v = rho.value(a);
  return c == FourierConvention::kConjugate ? std::conj(v) : v;
}

std::vector<Complex> prepare_state(std::size_t left, const CyclicCharacter& rho,
                                   FourierConvention c) {
  const std::size_t right = rho.group().order();
  const double norm = 1.0 / std::sqrt(static_cast<double>(left * right));
  std::vector<Complex> state(left * right);
  for (std::size_t x = 0; x < left; ++x) {
    for (std::size_t a = 0; a < right; ++a) state[x * right + a] = norm * fourier_amplitude(rho, a, c);
  }
  return state;
}

SingleQueryOutcome run_float(const FiniteGroup& g, OracleAccess& oracle,
                             const CyclicCharacter& rho, const RunOptions& options,
                             std::span<const CyclicCharacter> basis) {
  const std::size_t left = g.order();
  const std::size_t right = rho.group().order();
  const std::vector<Complex> out = oracle.apply(prepare_state(left, rho, options.convention));

  std::vector<double> distribution(basis.size());
  const double norm = 1.0 / std::sqrt(static_cast<double>(left));
  for (std::size_t k = 0; k < basis.size(); ++k) {
    double p = 0.0;
    for (std::size_t b = 0; b < right; ++b) {
      Complex amp{};
      for (std::size_t x = 0; x < left; ++x) {
        amp += std::conj(basis[k].value(x)) * out[x * right + b];
      }
      p += std::norm(norm * amp);
    }
    distribution[k] = p;
  }
  std::size_t best = 0;
  for (std::size_t k = 1; k < distribution.size(); ++k) {
    if (distribution[k] > distribution[best]) best = k;
  }
  if (basis.empty() || !(distribution[best] >= 1.0 - options.tol)) {
    throw NonDeterministicOutcome(
        "non-deterministic outcome: no character reaches probability 1 - tol");
  }
  return {basis[best], distribution[best], std::move(distribution)};
}

SingleQueryOutcome run_exact(const FiniteGroup& g, OracleAccess& oracle,
                             const CyclicCharacter& rho, const RunOptions& options) {
  const std::size_t left = g.order();
  const std::size_t right = rho.group().order();
  const std::size_t m = rho.modulus();
  PhaseState in{m, std::vector<std::size_t>(left * right)};
  for (std::size_t x = 0; x < left; ++x) {
    for (std::size_t a = 0; a < right; ++a) {
      const std::size_t e = rho.exponent(a);
      in.exponents[x * right + a] =
          options.convention == FourierConvention::kConjugate ? (m - e) % m : e;
    }
  }
  const PhaseState out = oracle.apply(in);
  auto at = [&](std::size_t x, std::size_t b) { return out.exponents[x * right + b]; };

  // Product state iff e(x,b) - e(x,0) - e(0,b) + e(0,0) = 0 mod m everywhere.
  for (std::size_t x = 0; x < left; ++x) {
    for (std::size_t b = 0; b < right; ++b) {
      if ((at(x, b) + at(0, 0) + 2 * m - at(x, 0) - at(0, b)) % m != 0) {
        throw NonDeterministicOutcome("non-deterministic outcome: registers are entangled");
      }
    }
  }
  std::vector<std::size_t> chi(left);
  for (std::size_t x = 0; x < left; ++x) chi[x] = (at(x, 0) + m - at(0, 0)) % m;
  try {
    return {CyclicCharacter::create(g, m, std::move(chi)), 1.0, {}};
  } catch (const std::invalid_argument&) {
    throw NonDeterministicOutcome(
        "non-deterministic outcome: left register is not a character state");
  }
}

}  // namespace

SingleQueryOutcome run_single_query(const FiniteGroup& g, OracleAccess& oracle,
                                    const CyclicCharacter& rho, const RunOptions& options,
                                    std::span<const CyclicCharacter> basis) {
  check_dimensions(g, oracle, rho);
  if (options.mode == SimulationMode::kExact) return run_exact(g, oracle, rho, options);
  if (basis.empty()) {
    const std::vector<CyclicCharacter> chars = groups::one_dim_characters(g);
    return run_float(g, oracle, rho, options, chars);
  }
  return run_float(g, oracle, rho, options, basis);
}

GroupHom recover_cyclic_hom(const CyclicCharacter& measured, const CyclicCharacter& rho,
                            FourierConvention convention) {
  if (!rho.is_faithful()) throw std::invalid_argument("recover_cyclic_hom: rho is not faithful");
  const CyclicCharacter target =
      convention == FourierConvention::kConjugate ? measured : measured.conjugate();
  const FiniteGroup& g = measured.group();
  const std::size_t q = rho.group().order();
  const std::size_t mr = rho.modulus();
  const std::size_t mt = target.modulus();
  std::vector<Element> images(g.order());
  for (Element x = 0; x < g.order(); ++x) {
    // rho(y) = target(x)  <=>  e_rho(y) * mt = e_t(x) * mr  (mod mr * mt)
    const std::size_t want = (target.exponent(x) * mr) % (mr * mt);
    std::optional<Element> found;
    for (Element y = 0; y < q; ++y) {
      if ((rho.exponent(y) * mt) % (mr * mt) == want) {
        found = y;
        break;
      }
    }
    if (!found) {
      throw InconsistentMeasurement("inconsistent measurement: value at element " +
                                    std::to_string(x) + " is not in the image of rho");
    }
    images[x] = *found;
  }
  try {
    return GroupHom::create(g, rho.group(), std::move(images));
  } catch (const std::invalid_argument& e) {
    throw InconsistentMeasurement(std::string("inconsistent measurement: ") + e.what());
  }
}

RunResult identify_hom(const FiniteGroup& g, const AbelianFactors& a, OracleAccess& oracle,
                       const RunOptions& options) {
  const std::size_t before = oracle.ledger().count;
  std::vector<CyclicCharacter> basis;
  if (options.mode == SimulationMode::kFloat) basis = groups::one_dim_characters(g);

  std::vector<std::vector<std::size_t>> components(g.order(),
                                                   std::vector<std::size_t>(a.count()));
  std::vector<FactorOutcome> per_factor;
  for (std::size_t i = 0; i < a.count(); ++i) {
    const std::size_t q = a.factors()[i];
    const CyclicCharacter fundamental = groups::fundamental_character(q);
    std::vector<Element> proj(a.order());
    for (Element x = 0; x < a.order(); ++x) proj[x] = a.project(x, i);
    const GroupHom projection = GroupHom::create(a.group(), fundamental.group(), proj);
    const CyclicCharacter rho = groups::pullback(fundamental, projection);

    SingleQueryOutcome outcome = run_single_query(g, oracle, rho, options, basis);
    const GroupHom part = recover_cyclic_hom(outcome.measured, fundamental, options.convention);
    for (Element x = 0; x < g.order(); ++x) components[x][i] = part(x);
    per_factor.push_back({i, std::move(outcome.measured), outcome.probability});
  }
  std::vector<Element> images(g.order());
  for (Element x = 0; x < g.order(); ++x) images[x] = a.compose(components[x]);
  return {GroupHom::create(g, a.group(), std::move(images)), std::move(per_factor),
          QueryLedger{oracle.ledger().count - before}, options.mode};
}

CMatrix final_state(const GroupHom& f, const CyclicCharacter& rho, FourierConvention convention) {
  if (!(rho.group() == f.codomain())) {
    throw std::invalid_argument("final_state: rho is not a character of the target");
  }
  const CMatrix u = frobenius::build_oracle_operational(f);
  return CMatrix::column(
      numeric::kernels::apply_serial(u, prepare_state(f.domain().order(), rho, convention)));
}

QueryComparison classical_vs_quantum_report(const FiniteGroup& g, const AbelianFactors& a) {
  return {a.count(), groups::classical_baseline_queries(g)};
}

OracleAccess make_oracle(const GroupHom& f, OracleKind kind, double tol) {
  CMatrix u = kind == OracleKind::kDiagram
                  ? frobenius::build_oracle_diagram(f.images(), f.codomain(), tol)
                  : frobenius::build_oracle_operational(f);
  return OracleAccess(std::move(u), f.domain().order(), f.codomain().order(), tol);
}

std::vector<SweepEntry> identify_all(const FiniteGroup& g, const AbelianFactors& a,
                                     const RunOptions& options, OracleKind kind) {
  const std::vector<GroupHom> homs = groups::enumerate_homs(g, a);
  std::vector<std::optional<SweepEntry>> slots(homs.size());
  const auto n = static_cast<std::ptrdiff_t>(homs.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const GroupHom& hidden = homs[static_cast<std::size_t>(i)];
    SweepEntry entry{hidden, std::nullopt, {}, false};
    try {
      OracleAccess oracle = make_oracle(hidden, kind, options.tol);
      RunResult r = identify_hom(g, a, oracle, options);
      entry.correct = r.recovered == hidden && r.queries.count == a.count();
      entry.result = std::move(r);
    } catch (const std::exception& e) {
      entry.error = e.what();
    }
    slots[static_cast<std::size_t>(i)] = std::move(entry);
  }
  std::vector<SweepEntry> out;
  out.reserve(slots.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

}  // namespace oracle_forge::homid
