#ifndef DCSP_NETSIM_HPP
#define DCSP_NETSIM_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "dcsp/refinement.hpp"
#include "dcsp/types.hpp"

namespace dcsp {

enum class NodeKind { variable, constraint };

/// Everything an agent knows at start: its kind, the public counts n and m,
/// and its incident channel labels (with multiplicity, sorted). No ids.
struct AgentInit {
    NodeKind kind = NodeKind::variable;
    int n = 0;
    int m = 0;
    int domain_size = 0;
    std::vector<EdgeLabel> incident;
};

/// Received messages, grouped by channel label. Per label the distinct
/// payloads are sorted, each with the number of channels that delivered it;
/// channel identity is not observable beyond the label.
using Inbox = std::map<EdgeLabel, std::vector<std::pair<std::string, int>>>;

/// One outgoing payload per label: identically-labelled channels necessarily
/// carry identical messages.
using Outbox = std::map<EdgeLabel, std::string>;

struct AgentStatus {
    enum class Verdict { none, sat, unsat, failure };
    bool terminated = false;
    Verdict verdict = Verdict::none;
    int value = -1;  // assigned domain value, for search programs
    int refinement_end_round = -1;
    int consistency_end_round = -1;
};

class AgentProgram {
public:
    virtual ~AgentProgram() = default;
    virtual void init(const AgentInit& context) = 0;
    virtual Outbox step(int round, const Inbox& inbox) = 0;
    virtual bool terminated() const = 0;
    virtual AgentStatus status() const = 0;
    /// Canonical bytes of the semantic agent state; drives trace digests and
    /// the anonymity audit.
    virtual std::string state_dump() const = 0;
};

class LocalAlgorithm {
public:
    virtual ~LocalAlgorithm() = default;
    virtual std::unique_ptr<AgentProgram> make_agent() const = 0;
    virtual uint64_t max_rounds_hint(int n, int m, int domain_size) const = 0;
    virtual std::string name() const = 0;
};

/// One agent per factor-graph node, one channel per labelled edge.
struct Network {
    FactorGraph graph;
    int domain_size = 0;

    int n() const { return graph.num_variables; }
    int m() const { return graph.num_constraints; }
};

Network build_network(const Instance& instance);

struct TraceOptions {
    /// Record per-round per-agent state digests (memory-heavy on large
    /// networks). Negative: auto, on iff n+m <= 512.
    int record_round_states = -1;
};

struct Trace {
    int rounds = 0;
    bool timed_out = false;
    std::vector<AgentStatus> final_status;            // per agent (= node index)
    std::vector<std::string> final_state;             // per agent
    std::vector<uint64_t> chained_digest;             // per agent, over all rounds
    std::vector<std::vector<uint64_t>> round_digests; // per round, per agent (optional)
    std::vector<uint64_t> max_payload_per_round;      // bytes, before length prefix
    uint64_t max_message_bytes = 0;                   // prefix included
    uint64_t total_message_bytes = 0;
    uint64_t work = 0;  // deterministic time proxy: bytes moved + steps
};

/// Executes synchronous rounds until every agent terminates or max_rounds is
/// reached (timeout is a trace status, not an error). Messages sent at round
/// r are received at round r+1; terminated agents neither run nor receive.
Trace run(const Network& network, const LocalAlgorithm& algorithm, uint64_t max_rounds,
          TraceOptions options = {});

/// True iff iterated-degree-equivalent agents walked through identical state
/// sequences: per-round digests when recorded, chained digests otherwise,
/// plus final statuses either way.
bool anonymity_audit(const Trace& trace, const DegreePartition& partition);

uint64_t fnv1a(const std::string& bytes, uint64_t seed = 14695981039346656037ull);

std::string trace_to_json(const Trace& trace);

}  // namespace dcsp

#endif
