#include "zkqbc/protocol.hpp"

#include <stdexcept>
#include <utility>

#include "zkqbc/analysis.hpp"

namespace zkqbc::protocol {

namespace detail {
// Referee-side view of a bundle, used only to decide lies in synthetic mode.
struct IdealCommitment {
  static const std::vector<int>& indices(const CommitBundle& b) { return b.indices_; }
};
}  // namespace detail

CommitBundle CommitBundle::prepare(std::span<const int> state_indices, const ApparatusParams& params) {
  CommitBundle b;
  b.states_.reserve(state_indices.size());
  b.indices_.assign(state_indices.begin(), state_indices.end());
  for (int k : state_indices) b.states_.push_back(qbc::commit(k, params));
  return b;
}

CommitBundle CommitBundle::from_states(std::vector<PolarizedState> states) {
  CommitBundle b;
  b.indices_.assign(states.size(), -1);
  b.states_ = std::move(states);
  return b;
}

std::vector<ClickRecord> measure_bundle(CommitBundle&& bundle, const ApparatusParams& params, Rng& rng) {
  std::vector<ClickRecord> out;
  out.reserve(bundle.states_.size());
  for (const auto& s : bundle.states_) out.push_back(qbc::measure_commitment(s, params, rng));
  bundle.states_.clear();
  bundle.indices_.clear();
  return out;
}

std::string_view to_string(RejectReason reason) {
  switch (reason) {
    case RejectReason::Consistency: return "consistency";
    case RejectReason::EqualClaims: return "equal claims";
    case RejectReason::OutOfSetClaim: return "out-of-set claim";
  }
  return "unknown";
}

std::uint64_t ProtocolConfig::resolved_rounds(const Graph& g) const {
  const std::uint64_t m = g.edge_count();
  const std::uint64_t r = rounds.value_or(m * m);
  if (r == 0) throw std::invalid_argument("protocol needs at least one round (graph has no edges; set rounds)");
  return r;
}

RoundVerdict verifier_check(const Unveil& unveil, bool consistent_u, bool consistent_v) {
  if (unveil.claim_u == unveil.claim_v) return RoundVerdict::reject(RejectReason::EqualClaims);
  if (!unveil.claim_u.in_range() || !unveil.claim_v.in_range()) {
    return RoundVerdict::reject(RejectReason::OutOfSetClaim);
  }
  if (!consistent_u || !consistent_v) return RoundVerdict::reject(RejectReason::Consistency);
  return RoundVerdict::accept();
}

RoundVerdict verifier_check(const Unveil& unveil, const ClickRecord& record_u, const ClickRecord& record_v,
                            VerificationPolicy policy) {
  if (unveil.claim_u == unveil.claim_v) return RoundVerdict::reject(RejectReason::EqualClaims);
  if (!unveil.claim_u.in_range() || !unveil.claim_v.in_range()) {
    return RoundVerdict::reject(RejectReason::OutOfSetClaim);
  }
  const bool ok_u = qbc::verify_unveil(unveil.claim_u, record_u, policy) == qbc::UnveilResult::Accept;
  const bool ok_v = qbc::verify_unveil(unveil.claim_v, record_v, policy) == qbc::UnveilResult::Accept;
  return verifier_check(unveil, ok_u, ok_v);
}

// ---------------------------------------------------------------------------

HonestProver::HonestProver(const Graph& g, graph::Coloring coloring) : graph_(&g), coloring_(std::move(coloring)) {
  if (!graph::is_valid_3coloring(g, coloring_)) {
    throw std::invalid_argument("honest prover needs a valid 3-coloring");
  }
}

CommitBundle HonestProver::commit(const ApparatusParams& params, Rng& rng) {
  const auto& perms = graph::Permutation::all();
  perm_index_ = uniform_index(rng, perms.size());
  const auto& p = perms[perm_index_];
  committed_.resize(coloring_.size());
  for (std::size_t w = 0; w < coloring_.size(); ++w) committed_[w] = graph::color_index(p(coloring_[w]));
  return CommitBundle::prepare(committed_, params);
}

Unveil HonestProver::unveil(const Challenge& challenge, Rng&) {
  const auto& e = graph_->edge(challenge.edge_index);
  return {Claim{committed_[e.u]}, Claim{committed_[e.v]}};
}

namespace {

// States one angular step from `sent`; the middle state has two.
std::span<const int> adjacent_states(int sent) {
  static constexpr int kFrom0[] = {1};
  static constexpr int kFrom1[] = {0, 2};
  static constexpr int kFrom2[] = {1};
  switch (sent) {
    case 0: return kFrom0;
    case 1: return kFrom1;
    default: return kFrom2;
  }
}

}  // namespace

CheatingProver::CheatingProver(const Graph& g) : CheatingProver(g, graph::best_near_coloring(g)) {}

CheatingProver::CheatingProver(const Graph& g, graph::NearColoring near) : graph_(&g), near_(std::move(near)) {
  if (near_.bad_edges.empty()) {
    throw std::invalid_argument("cheating prover needs a graph that is not 3-colorable");
  }
  if (near_.coloring.size() != g.vertex_count()) {
    throw std::invalid_argument("near-coloring size does not match the graph");
  }
}

CommitBundle CheatingProver::commit(const ApparatusParams& params, Rng& rng) {
  const auto& perms = graph::Permutation::all();
  const auto& p = perms[uniform_index(rng, perms.size())];
  committed_.resize(near_.coloring.size());
  for (std::size_t w = 0; w < near_.coloring.size(); ++w) {
    committed_[w] = graph::color_index(p(near_.coloring[w]));
  }
  return CommitBundle::prepare(committed_, params);
}

Unveil CheatingProver::unveil(const Challenge& challenge, Rng& rng) {
  const auto& e = graph_->edge(challenge.edge_index);
  Unveil out{Claim{committed_[e.u]}, Claim{committed_[e.v]}};
  last_lie_.reset();
  if (committed_[e.u] != committed_[e.v]) return out;

  Lie lie;
  lie.endpoint = static_cast<int>(uniform_index(rng, 2));
  lie.sent = committed_[e.u];
  const auto options = adjacent_states(lie.sent);
  lie.claimed = options[uniform_index(rng, options.size())];
  (lie.endpoint == 0 ? out.claim_u : out.claim_v) = Claim{lie.claimed};
  last_lie_ = lie;
  return out;
}

double CheatingProver::expected_escape(const ApparatusParams& params, VerificationPolicy policy) {
  // The committed color of a bad edge is uniform over the three states.
  double total = 0.0;
  for (int sent = 0; sent < optics::kStateCount; ++sent) {
    const auto options = adjacent_states(sent);
    double avg = 0.0;
    for (int claimed : options) avg += analysis::analytic_escape(sent, claimed, params, policy);
    total += avg / static_cast<double>(options.size());
  }
  return total / optics::kStateCount;
}

// ---------------------------------------------------------------------------

void Verifier::receive(CommitBundle&& bundle, const ApparatusParams& params, Rng& rng) {
  records_ = measure_bundle(std::move(bundle), params, rng);
  on_records(records_);
}

Challenge Verifier::challenge(const Graph& g, Rng& rng) const {
  return Challenge{uniform_index(rng, g.edge_count())};
}

void CuriousVerifier::on_records(std::span<const ClickRecord> records) {
  last_identification_.resize(records.size());
  bool all = true;
  for (std::size_t w = 0; w < records.size(); ++w) {
    last_identification_[w] = qbc::discriminate_unaided(records[w]);
    all = all && last_identification_[w].has_value();
  }
  if (all) ++successful_rounds_;
}

// ---------------------------------------------------------------------------

ProtocolResult run_protocol(const Graph& g, Prover& prover, Verifier& verifier, const ProtocolConfig& cfg,
                            std::uint64_t execution) {
  cfg.params.validate();
  if (cfg.synthetic_escape && !(*cfg.synthetic_escape >= 0.0 && *cfg.synthetic_escape <= 1.0)) {
    throw std::invalid_argument("synthetic escape probability must lie in [0, 1]");
  }
  const std::uint64_t rounds = cfg.resolved_rounds(g);

  Rng prover_rng = make_stream(cfg.seed, execution, StreamRole::Prover);
  Rng verifier_rng = make_stream(cfg.seed, execution, StreamRole::Verifier);
  Rng channel_rng = make_stream(cfg.seed, execution, StreamRole::Channel);

  ProtocolResult result;
  result.rounds = rounds;
  if (cfg.keep_transcripts) result.transcripts.reserve(rounds);

  for (std::uint64_t r = 0; r < rounds; ++r) {
    CommitBundle bundle = prover.commit(cfg.params, prover_rng);
    if (bundle.size() != g.vertex_count()) {
      throw std::logic_error("prover committed to the wrong number of vertices");
    }
    std::vector<int> ideal;
    if (cfg.synthetic_escape) ideal = detail::IdealCommitment::indices(bundle);

    verifier.receive(std::move(bundle), cfg.params, channel_rng);

    RoundTranscript t;
    if (g.edge_count() > 0) {
      const Challenge ch = verifier.challenge(g, verifier_rng);
      const Unveil un = prover.unveil(ch, prover_rng);
      const auto& e = g.edge(ch.edge_index);
      if (cfg.synthetic_escape) {
        auto judged = [&](Claim claim, graph::Vertex w) {
          return claim.state_index == ideal[w] || bernoulli(channel_rng, *cfg.synthetic_escape);
        };
        const bool ok_u = judged(un.claim_u, e.u);
        const bool ok_v = judged(un.claim_v, e.v);
        t.verdict = verifier_check(un, ok_u, ok_v);
      } else {
        t.verdict = verifier_check(un, verifier.records()[e.u], verifier.records()[e.v], cfg.policy);
      }
      t.challenge = ch;
      t.unveil = un;
    }

    if (!t.verdict.accepted) {
      result.accepted = false;
      ++result.rejected_rounds;
    }
    if (cfg.keep_transcripts) {
      t.click_records = verifier.records();
      result.transcripts.push_back(std::move(t));
    }
  }
  return result;
}

}  // namespace zkqbc::protocol
