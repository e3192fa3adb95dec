#ifndef ORACLE_FORGE_HOMID_ALGORITHM_HPP
#define ORACLE_FORGE_HOMID_ALGORITHM_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "oracle_forge/groups/abelian_factors.hpp"
#include "oracle_forge/groups/character.hpp"
#include "oracle_forge/groups/finite_group.hpp"
#include "oracle_forge/groups/homomorphism.hpp"
#include "oracle_forge/homid/oracle_access.hpp"

namespace oracle_forge::homid {

using groups::AbelianFactors;
using groups::CyclicCharacter;
using groups::FiniteGroup;
using groups::GroupHom;

enum class SimulationMode { kExact, kFloat };

/// How the target register is prepared from rho. With kConjugate the state
/// is sum_a conj(rho(a)) |a> / sqrt|A| and the left register ends in the
/// character rho o f; with kDirect it ends in conj(rho o f).
enum class FourierConvention { kConjugate, kDirect };

std::string to_string(SimulationMode mode);

/// Raised when the left register is not in a single character state, which
/// happens exactly when the oracle does not encode a homomorphism.
class NonDeterministicOutcome : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a measured character is not rho o f for any f.
class InconsistentMeasurement : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunOptions {
  SimulationMode mode = SimulationMode::kFloat;
  double tol = numeric::kDefaultTol;
  FourierConvention convention = FourierConvention::kConjugate;
};

struct SingleQueryOutcome {
  CyclicCharacter measured;
  double probability = 0.0;
  /// Float mode: outcome probability of each character in the measurement
  /// basis, in one_dim_characters order. Empty in exact mode.
  std::vector<double> distribution;
};

/**
 * One run of the single-query circuit: uniform superposition on the left,
 * Fourier state of rho on the right, one oracle call, measurement of the
 * left register in the basis of one-dimensional characters of g.
 *
 * Float mode simulates the state vector and projects onto every character
 * in `basis` (defaults to one_dim_characters(g)). Exact mode pushes an
 * exact phase state through the (permutation) oracle and reads the
 * left-register character off the phase-kickback identity.
 */
SingleQueryOutcome run_single_query(const FiniteGroup& g, OracleAccess& oracle,
                                    const CyclicCharacter& rho, const RunOptions& options = {},
                                    std::span<const CyclicCharacter> basis = {});

/// The unique f : g -> Z_q with rho o f equal to the measured character
/// (conj(rho o f) under kDirect). rho must be a faithful character of Z_q.
GroupHom recover_cyclic_hom(const CyclicCharacter& measured, const CyclicCharacter& rho,
                            FourierConvention convention = FourierConvention::kConjugate);

struct FactorOutcome {
  std::size_t factor;
  CyclicCharacter measured;
  double probability;
};

struct RunResult {
  GroupHom recovered;
  std::vector<FactorOutcome> per_factor;
  QueryLedger queries;
  SimulationMode mode;
};

/// Recovers a hidden homomorphism g -> a behind `oracle` with one query per
/// factor of a: factor i is probed with the fundamental character of Z_{q_i}
/// pulled back along the projection onto that factor.
RunResult identify_hom(const FiniteGroup& g, const AbelianFactors& a, OracleAccess& oracle,
                       const RunOptions& options = {});

/// Joint state after one application of the operational oracle for f.
CMatrix final_state(const GroupHom& f, const CyclicCharacter& rho,
                    FourierConvention convention = FourierConvention::kConjugate);

struct QueryComparison {
  std::size_t quantum;
  std::size_t classical;
};

/// (number of factors of a, size of a smallest generating set of g).
QueryComparison classical_vs_quantum_report(const FiniteGroup& g, const AbelianFactors& a);

enum class OracleKind { kOperational, kDiagram };

std::string to_string(OracleKind kind);

OracleAccess make_oracle(const GroupHom& f, OracleKind kind = OracleKind::kOperational,
                         double tol = numeric::kDefaultTol);

struct SweepEntry {
  GroupHom hidden;
  std::optional<RunResult> result;
  std::string error;
  bool correct = false;
};

/// identify_hom against every homomorphism g -> a, one fresh oracle each.
/// Runs are independent and may execute in parallel; the output follows
/// enumerate_homs order.
std::vector<SweepEntry> identify_all(const FiniteGroup& g, const AbelianFactors& a,
                                     const RunOptions& options = {},
                                     OracleKind kind = OracleKind::kOperational);

}  // namespace oracle_forge::homid

#endif  // ORACLE_FORGE_HOMID_ALGORITHM_HPP
