#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "zkqbc/graph.hpp"
#include "zkqbc/optics.hpp"
#include "zkqbc/qbc.hpp"
#include "zkqbc/random.hpp"

/// Zero-knowledge proof of 3-colorability over coherent-state commitments.
///
/// Each round: the prover commits one state per vertex under a fresh color
/// permutation, the verifier measures every commitment and challenges a
/// uniformly random edge, the prover names the two committed states, and the
/// verifier checks they differ, are in range and agree with its clicks.
namespace zkqbc::protocol {

using graph::Graph;
using optics::ApparatusParams;
using optics::ClickRecord;
using optics::PolarizedState;
using qbc::Claim;
using qbc::VerificationPolicy;

namespace detail {
struct IdealCommitment;
}

/// One round's worth of states in flight, one per vertex. Nothing on this
/// type reveals amplitudes; the only way to learn about the contents is to
/// measure, which consumes the bundle.
class CommitBundle {
 public:
  /// Prepares protocol state `state_indices[w]` for every vertex w.
  static CommitBundle prepare(std::span<const int> state_indices, const ApparatusParams& params);
  /// Arbitrary states, for adversarial provers.
  static CommitBundle from_states(std::vector<PolarizedState> states);

  std::size_t size() const { return states_.size(); }

  /// Runs the receiver's apparatus on every state.
  friend std::vector<ClickRecord> measure_bundle(CommitBundle&& bundle, const ApparatusParams& params,
                                                 Rng& rng);

 private:
  friend struct detail::IdealCommitment;

  std::vector<PolarizedState> states_;
  std::vector<int> indices_;  ///< -1 for states not prepared from an index
};

std::vector<ClickRecord> measure_bundle(CommitBundle&& bundle, const ApparatusParams& params, Rng& rng);

struct Challenge {
  std::size_t edge_index = 0;
  bool operator==(const Challenge&) const = default;
};

/// Claims for the two endpoints of the challenged edge (u < v).
struct Unveil {
  Claim claim_u;
  Claim claim_v;
  bool operator==(const Unveil&) const = default;
};

enum class RejectReason { Consistency, EqualClaims, OutOfSetClaim };

std::string_view to_string(RejectReason reason);

struct RoundVerdict {
  bool accepted = true;
  std::optional<RejectReason> reason;  ///< set iff !accepted

  static RoundVerdict accept() { return {}; }
  static RoundVerdict reject(RejectReason r) { return {false, r}; }
  bool operator==(const RoundVerdict&) const = default;
};

struct RoundTranscript {
  std::vector<ClickRecord> click_records;
  std::optional<Challenge> challenge;  ///< empty only for edgeless graphs
  std::optional<Unveil> unveil;
  RoundVerdict verdict;

  bool operator==(const RoundTranscript&) const = default;
};

struct ProtocolConfig {
  std::optional<std::uint64_t> rounds;  ///< defaults to m^2
  std::uint64_t seed = 0;
  VerificationPolicy policy = VerificationPolicy::ImpossibilityOnly;
  ApparatusParams params;
  /// When set, a lie passes the consistency check with this probability
  /// instead of being judged from clicks; truthful claims always pass.
  std::optional<double> synthetic_escape;
  bool keep_transcripts = true;

  /// Rounds for graph g; throws std::invalid_argument when that is zero.
  std::uint64_t resolved_rounds(const Graph& g) const;
};

struct ProtocolResult {
  bool accepted = true;
  std::uint64_t rounds = 0;
  std::uint64_t rejected_rounds = 0;
  std::vector<RoundTranscript> transcripts;
};

/// Step-4 checks in order: distinct claims, claims in range, click consistency.
RoundVerdict verifier_check(const Unveil& unveil, const ClickRecord& record_u, const ClickRecord& record_v,
                            VerificationPolicy policy);

/// Same ordering with the consistency outcome already decided per endpoint.
RoundVerdict verifier_check(const Unveil& unveil, bool consistent_u, bool consistent_v);

class Prover {
 public:
  virtual ~Prover() = default;

  /// Step 1.
  virtual CommitBundle commit(const ApparatusParams& params, Rng& rng) = 0;
  /// Step 3.
  virtual Unveil unveil(const Challenge& challenge, Rng& rng) = 0;
};

/// Knows a valid coloring; commits a uniformly permuted copy each round and
/// unveils truthfully.
class HonestProver : public Prover {
 public:
  /// Throws std::invalid_argument unless `coloring` is a valid 3-coloring of g.
  HonestProver(const Graph& g, graph::Coloring coloring);

  CommitBundle commit(const ApparatusParams& params, Rng& rng) override;
  Unveil unveil(const Challenge& challenge, Rng& rng) override;

  std::size_t last_permutation_index() const { return perm_index_; }
  const std::vector<int>& committed() const { return committed_; }

 private:
  const Graph* graph_;
  graph::Coloring coloring_;
  std::size_t perm_index_ = 0;
  std::vector<int> committed_;
};

/// Works from a minimum-violation coloring. On a bad edge it lies about one
/// endpoint chosen uniformly, claiming a state one angular step away from
/// the committed one.
class CheatingProver : public Prover {
 public:
  /// Throws std::invalid_argument if g is 3-colorable.
  explicit CheatingProver(const Graph& g);
  CheatingProver(const Graph& g, graph::NearColoring near);

  CommitBundle commit(const ApparatusParams& params, Rng& rng) override;
  Unveil unveil(const Challenge& challenge, Rng& rng) override;

  const graph::NearColoring& near_coloring() const { return near_; }
  const std::vector<int>& committed() const { return committed_; }

  struct Lie {
    int endpoint = 0;  ///< 0 for u, 1 for v
    int sent = 0;
    int claimed = 0;
  };
  /// The lie told at the most recent unveil, if any.
  const std::optional<Lie>& last_lie() const { return last_lie_; }

  /// Escape probability of this strategy's lie, averaged over its distribution.
  static double expected_escape(const ApparatusParams& params,
                                VerificationPolicy policy = VerificationPolicy::ImpossibilityOnly);

 private:
  const Graph* graph_;
  graph::NearColoring near_;
  std::vector<int> committed_;
  std::optional<Lie> last_lie_;
};

/// Honest verifier. Sees commitments only through click records.
class Verifier {
 public:
  virtual ~Verifier() = default;

  /// Step 1, receiving side.
  void receive(CommitBundle&& bundle, const ApparatusParams& params, Rng& rng);
  /// Step 2: a uniformly random edge.
  Challenge challenge(const Graph& g, Rng& rng) const;

  const std::vector<ClickRecord>& records() const { return records_; }

 protected:
  virtual void on_records(std::span<const ClickRecord> records) { (void)records; }

 private:
  std::vector<ClickRecord> records_;
};

/// Follows the protocol, and in addition tries to identify every vertex's
/// state from its own clicks each round.
class CuriousVerifier : public Verifier {
 public:
  bool succeeded() const { return successful_rounds_ > 0; }
  std::uint64_t successful_rounds() const { return successful_rounds_; }
  const std::vector<std::optional<int>>& last_identification() const { return last_identification_; }

 protected:
  void on_records(std::span<const ClickRecord> records) override;

 private:
  std::uint64_t successful_rounds_ = 0;
  std::vector<std::optional<int>> last_identification_;
};

/// Runs all rounds (no early exit). Deterministic in (cfg.seed, execution).
ProtocolResult run_protocol(const Graph& g, Prover& prover, Verifier& verifier, const ProtocolConfig& cfg,
                            std::uint64_t execution = 0);

}  // namespace zkqbc::protocol
