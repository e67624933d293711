// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "covsketch/distsim.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <tuple>
#include <utility>
#include <variant>

#include "absl/container/flat_hash_map.h"
#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "greedy_state.h"

namespace covsketch {
namespace {

constexpr int32_t kCoordinator = 0;
constexpr int32_t kUntagged = -1;

// Messages.
struct HashTuple {
  ElementId element;
  double hash;
  int64_t degree;
};
struct Notify {
  ElementId element;
  int32_t tag;
};
struct EdgeBatch {
  ElementId element;
  int32_t tag;
  std::vector<SetId> sets;
};
using Message = std::variant<HashTuple, Notify, EdgeBatch>;

int64_t Units(const Message& message) {
  struct {
    int64_t operator()(const HashTuple&) const { return 3; }
    int64_t operator()(const Notify& n) const {
      return n.tag == kUntagged ? 1 : 2;
    }
    int64_t operator()(const EdgeBatch& b) const {
      return static_cast<int64_t>(b.sets.size()) + (b.tag == kUntagged ? 0 : 1);
    }
  } visitor;
  return std::visit(visitor, message);
}

struct Envelope {
  int32_t from;
  Message message;
};

// Configuration every machine receives with the job.
struct JobConfig {
  int32_t machines = 0;
  int32_t num_sets = 0;
  int32_t num_elements = 0;
  uint64_t seed = 0;
  int64_t edge_budget = 0;
  int64_t non_isolated = 0;
  // One entry per guess; k-cover jobs have a single untagged entry.
  std::vector<SketchParams> params;
  bool tagged = false;

  int32_t OwnerOf(ElementId v) const { return 1 + v % (machines - 1); }
  double HashThreshold() const {
    return 2.0 * static_cast<double>(edge_budget) / num_elements;
  }
  const SketchParams& ParamsFor(int32_t tag) const {
    return params[tag == kUntagged ? 0 : tag];
  }
};

// Element-hosting state: the edge lists of v = owner-1, owner-1 + (M-1), ...
struct HostStorage {
  std::vector<ElementId> elements;
  std::vector<std::vector<SetId>> edges;
  int64_t edge_units = 0;
};

struct CoordinatorStorage {
  // Per guess: kept elements in selection order and their capped mass.
  std::vector<std::vector<ElementId>> selected;
  std::vector<int64_t> mass;
  bool divergence = false;
  int64_t tuples = 0;
};

struct Machine {
  int32_t id = 0;
  std::vector<Envelope> inbox;
  HostStorage host;
  CoordinatorStorage coordinator;
};

// The view of a machine during one round: its own state, its inbox and a
// way to send. Nothing else is reachable from a step function.
class RoundContext {
 public:
  RoundContext(Machine& self, std::vector<std::pair<int32_t, Message>>* out)
      : self_(self), out_(out) {}

  Machine& self() { return self_; }
  const std::vector<Envelope>& inbox() const { return self_.inbox; }
  void Send(int32_t to, Message message) {
    out_->emplace_back(to, std::move(message));
  }
  void Scan(int64_t units) { scanned_ += units; }
  void Hold(int64_t units) { held_ = std::max(held_, units); }

  int64_t scanned() const { return scanned_; }
  int64_t held() const { return held_; }

 private:
  Machine& self_;
  std::vector<std::pair<int32_t, Message>>* out_;
  int64_t scanned_ = 0;
  int64_t held_ = 0;
};

class Network {
 public:
  Network(int32_t machines, std::optional<uint64_t> schedule_seed)
      : machines_(machines), schedule_seed_(schedule_seed) {
    for (int32_t i = 0; i < machines; ++i) machines_[i].id = i;
  }

  Machine& machine(int32_t id) { return machines_[id]; }

  // Runs one synchronous round and delivers its messages at the barrier.
  template <typename Step>
  void RunRound(Step&& step) {
    ++round_;
    const int32_t count = static_cast<int32_t>(machines_.size());
    std::vector<int32_t> order(count);
    std::iota(order.begin(), order.end(), 0);
    if (schedule_seed_.has_value()) {
      std::mt19937_64 rng(*schedule_seed_ + static_cast<uint64_t>(round_));
      std::shuffle(order.begin(), order.end(), rng);
    }
    std::vector<std::vector<std::pair<int32_t, Message>>> outboxes(count);
    std::vector<MachineRound> records(count);
    for (const int32_t id : order) {
      Machine& machine = machines_[id];
      RoundContext context(machine, &outboxes[id]);
      int64_t units_in = 0;
      for (const Envelope& envelope : machine.inbox) {
        units_in += Units(envelope.message);
      }
      step(context);
      MachineRound& record = records[id];
      record.machine = id;
      record.round = round_;
      record.units_in = units_in;
      record.storage_peak = context.held();
      record.load = units_in + context.scanned();
    }
    // Barrier: inboxes are rebuilt in (sender, send order), independent of
    // the execution order above.
    for (Machine& machine : machines_) machine.inbox.clear();
    for (int32_t from = 0; from < count; ++from) {
      for (auto& [to, message] : outboxes[from]) {
        const int64_t units = Units(message);
        records[from].units_out += units;
        total_units_ += units;
        ++total_messages_;
        machines_[to].inbox.push_back({from, std::move(message)});
      }
    }
    for (const MachineRound& record : records) records_.push_back(record);
  }

  SimReport Report() const {
    SimReport report;
    report.machines = static_cast<int32_t>(machines_.size());
    report.rounds_executed = round_;
    report.records = records_;
    std::sort(report.records.begin(), report.records.end(),
              [](const MachineRound& a, const MachineRound& b) {
                return std::tie(a.machine, a.round) <
                       std::tie(b.machine, b.round);
              });
    for (const MachineRound& record : report.records) {
      report.max_load = std::max(report.max_load, record.load);
      if (record.machine == kCoordinator) {
        report.coordinator_load += record.load;
      }
    }
    report.total_messages = total_messages_;
    report.total_units = total_units_;
    return report;
  }

 private:
  std::vector<Machine> machines_;
  std::optional<uint64_t> schedule_seed_;
  int round_ = 0;
  std::vector<MachineRound> records_;
  int64_t total_messages_ = 0;
  int64_t total_units_ = 0;
};

// Round 1 at a host: hash every element, report the low ones.
void HashRound(const JobConfig& config, RoundContext& context) {
  const HostStorage& host = context.self().host;
  context.Hold(host.edge_units);
  context.Scan(host.edge_units);
  const HashSource source(config.seed);
  const double threshold = config.HashThreshold();
  for (size_t i = 0; i < host.elements.size(); ++i) {
    const int64_t degree = static_cast<int64_t>(host.edges[i].size());
    if (degree == 0) continue;
    const double hash = source.ElementHash(host.elements[i]);
    if (hash <= threshold) {
      context.Send(kCoordinator, HashTuple{host.elements[i], hash, degree});
    }
  }
}

// Round 2 at the coordinator: choose the hash-order prefix for every guess.
void SelectRound(const JobConfig& config, RoundContext& context) {
  std::vector<HashTuple> tuples;
  for (const Envelope& envelope : context.inbox()) {
    tuples.push_back(std::get<HashTuple>(envelope.message));
  }
  CoordinatorStorage& state = context.self().coordinator;
  state.tuples = static_cast<int64_t>(tuples.size());
  context.Hold(3 * state.tuples);
  std::sort(tuples.begin(), tuples.end(),
            [](const HashTuple& a, const HashTuple& b) {
              return std::tie(a.hash, a.element) < std::tie(b.hash, b.element);
            });
  const int32_t guesses = static_cast<int32_t>(config.params.size());
  state.selected.assign(guesses, {});
  state.mass.assign(guesses, 0);
  for (int32_t g = 0; g < guesses; ++g) {
    const int64_t cap = config.params[g].degree_cap;
    const int32_t tag = config.tagged ? g : kUntagged;
    for (const HashTuple& tuple : tuples) {
      if (state.mass[g] >= config.edge_budget) break;
      state.mass[g] += std::min(cap, tuple.degree);
      state.selected[g].push_back(tuple.element);
      context.Send(config.OwnerOf(tuple.element), Notify{tuple.element, tag});
    }
    if (state.mass[g] < config.edge_budget &&
        state.tuples < config.non_isolated) {
      state.divergence = true;
    }
  }
}

// Round 3 at a host: ship the capped edge lists that were asked for.
void ShipRound(const JobConfig& config, RoundContext& context) {
  const HostStorage& host = context.self().host;
  context.Hold(host.edge_units);
  const int32_t workers = config.machines - 1;
  for (const Envelope& envelope : context.inbox()) {
    const Notify& notify = std::get<Notify>(envelope.message);
    const std::vector<SetId>& sets = host.edges[notify.element / workers];
    const int64_t take = std::min<int64_t>(
        config.ParamsFor(notify.tag).degree_cap, sets.size());
    context.Scan(take);
    context.Send(kCoordinator,
                 EdgeBatch{notify.element, notify.tag,
                           std::vector<SetId>(sets.begin(),
                                              sets.begin() + take)});
  }
}

// Round 4 at the coordinator: rebuild each guess's sketch in selection
// order.
absl::StatusOr<std::vector<Sketch>> AssembleRound(const JobConfig& config,
                                                  RoundContext& context) {
  const CoordinatorStorage& state = context.self().coordinator;
  const int32_t guesses = static_cast<int32_t>(config.params.size());
  std::vector<absl::flat_hash_map<ElementId, const EdgeBatch*>> batches(
      guesses);
  int64_t received = 0;
  for (const Envelope& envelope : context.inbox()) {
    const EdgeBatch& batch = std::get<EdgeBatch>(envelope.message);
    batches[batch.tag == kUntagged ? 0 : batch.tag][batch.element] = &batch;
    received += static_cast<int64_t>(batch.sets.size());
  }
  context.Hold(received + config.num_sets);
  std::vector<Sketch> sketches(guesses);
  for (int32_t g = 0; g < guesses; ++g) {
    Sketch& sketch = sketches[g];
    sketch.hash_seed = config.seed;
    sketch.params = config.params[g];
    sketch.original_num_elements = config.num_elements;
    sketch.exhausted = state.mass[g] < config.edge_budget;
    std::vector<Edge> edges;
    for (const ElementId v : state.selected[g]) {
      const auto it = batches[g].find(v);
      if (it == batches[g].end()) {
        return absl::InternalError(
            absl::StrFormat("no edges arrived for element %d", v));
      }
      const auto local = static_cast<ElementId>(sketch.selected_elements.size());
      for (const SetId s : it->second->sets) edges.push_back({s, local});
      sketch.selected_elements.push_back(v);
      sketch.selected_copies.push_back(0);
    }
    auto graph = CoverageInstance::FromEdges(
        config.num_sets, static_cast<int32_t>(sketch.selected_elements.size()),
        std::move(edges));
    if (!graph.ok()) return graph.status();
    sketch.graph = *std::move(graph);
  }
  return sketches;
}

absl::StatusOr<Solution> SolveKCover(const CoverageInstance& target,
                                     const KCoverJob& job) {
  Solution solution;
  if (job.solver == RoundSolver::kGreedy) {
    solution = LazyGreedy(target, job.k);
  } else {
    auto stochastic = StochasticGreedy(target, job.k, job.eps, job.seed);
    if (!stochastic.ok()) return stochastic.status();
    solution = *std::move(stochastic);
  }
  solution.evaluated_on = EvaluatedOn::kSketch;
  return solution;
}

absl::Status ValidateMachines(int32_t machines) {
  if (machines < 2) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "need at least 2 machines (a coordinator and a worker), got %d",
        machines));
  }
  return absl::OkStatus();
}

// Places the input and runs rounds 1 to 3.
void RunSketchRounds(const CoverageInstance& instance, const JobConfig& config,
                     Network& network) {
  for (ElementId v = 0; v < instance.num_elements(); ++v) {
    HostStorage& host = network.machine(config.OwnerOf(v)).host;
    const auto sets = instance.sets_of(v);
    host.elements.push_back(v);
    host.edges.emplace_back(sets.begin(), sets.end());
    host.edge_units += static_cast<int64_t>(sets.size());
  }
  auto hosts = [&config](auto&& body) {
    return [&config, body](RoundContext& context) {
      if (context.self().id != kCoordinator) body(config, context);
    };
  };
  network.RunRound(hosts(HashRound));
  network.RunRound([&config](RoundContext& context) {
    if (context.self().id == kCoordinator) SelectRound(config, context);
  });
  network.RunRound(hosts(ShipRound));
}

JobConfig BaseConfig(const CoverageInstance& instance, int32_t machines,
                     uint64_t seed) {
  JobConfig config;
  config.machines = machines;
  config.num_sets = instance.num_sets();
  config.num_elements = instance.num_elements();
  config.seed = seed;
  config.non_isolated =
      instance.num_elements() - instance.CountIsolatedElements();
  return config;
}

void FinishReport(Network& network, const JobConfig& config,
                  const CoverageInstance& instance, SimReport* report) {
  *report = network.Report();
  report->edge_budget = config.edge_budget;
  report->num_sets = config.num_sets;
  report->guesses = static_cast<int32_t>(config.params.size());
  const CoordinatorStorage& state = network.machine(kCoordinator).coordinator;
  report->tuples_received = state.tuples;
  report->divergence = state.divergence;
  report->elements_per_machine.assign(config.machines, 0);
  for (ElementId v = 0; v < instance.num_elements(); ++v) {
    ++report->elements_per_machine[config.OwnerOf(v)];
  }
}

}  // namespace

absl::StatusOr<std::vector<int32_t>> PartitionInput(
    const CoverageInstance& instance, int32_t machines) {
  if (absl::Status status = ValidateMachines(machines); !status.ok()) {
    return status;
  }
  std::vector<int32_t> owner(instance.num_elements());
  for (ElementId v = 0; v < instance.num_elements(); ++v) {
    owner[v] = 1 + v % (machines - 1);
  }
  return owner;
}

std::string FormatSimReport(const SimReport& report) {
  std::string out;
  for (const MachineRound& r : report.records) {
    absl::StrAppendFormat(
        &out,
        "machine=%d round=%d units_in=%d units_out=%d storage_peak=%d "
        "load=%d\n",
        r.machine, r.round, r.units_in, r.units_out, r.storage_peak, r.load);
  }
  absl::StrAppendFormat(
      &out,
      "summary rounds=%d machines=%d max_load=%d total_messages=%d "
      "total_units=%d coordinator_load=%d edge_budget=%d tuples=%d "
      "divergence=%d guesses=%d sketch_edges=%d",
      report.rounds_executed, report.machines, report.max_load,
      report.total_messages, report.total_units, report.coordinator_load,
      report.edge_budget, report.tuples_received, report.divergence ? 1 : 0,
      report.guesses, report.sketch_edges);
  if (report.sketch_edges_reference > 0.0) {
    absl::StrAppendFormat(&out, " sketch_edges_reference=%.1f",
                          report.sketch_edges_reference);
  }
  out += "\n";
  return out;
}

absl::StatusOr<KCoverRun> RunKCoverReference(const CoverageInstance& instance,
                                             const KCoverJob& job) {
  auto params = TheoryParams(instance.num_sets(), instance.num_elements(),
                             instance.num_edges(), job.k, job.eps,
                             job.delta_dprime);
  if (!params.ok()) return params.status();
  KCoverRun run;
  auto sketch = BuildSketch(instance, *params, HashSource(job.seed));
  if (!sketch.ok()) return sketch.status();
  run.sketch = *std::move(sketch);
  auto solution = SolveKCover(run.sketch.graph, job);
  if (!solution.ok()) return solution.status();
  run.solution = *std::move(solution);
  return run;
}

absl::StatusOr<KCoverRun> RunKCoverMapReduce(const CoverageInstance& instance,
                                             const KCoverJob& job) {
  if (absl::Status status = ValidateMachines(job.machines); !status.ok()) {
    return status;
  }
  auto params = TheoryParams(instance.num_sets(), instance.num_elements(),
                             instance.num_edges(), job.k, job.eps,
                             job.delta_dprime);
  if (!params.ok()) return params.status();
  if (job.solver == RoundSolver::kStochastic &&
      !(job.eps > 0.0 && job.eps < 1.0)) {
    return absl::InvalidArgumentError("stochastic solver needs 0 < eps < 1");
  }
  JobConfig config = BaseConfig(instance, job.machines, job.seed);
  config.edge_budget = params->edge_budget;
  config.params = {*params};

  Network network(job.machines, job.schedule_seed);
  RunSketchRounds(instance, config, network);

  KCoverRun run;
  absl::Status failure;
  network.RunRound([&](RoundContext& context) {
    if (context.self().id != kCoordinator) return;
    auto sketches = AssembleRound(config, context);
    if (!sketches.ok()) {
      failure = sketches.status();
      return;
    }
    run.sketch = std::move(sketches->front());
    context.Scan(config.num_sets);
    auto solution = SolveKCover(run.sketch.graph, job);
    if (!solution.ok()) {
      failure = solution.status();
      return;
    }
    run.solution = *std::move(solution);
  });
  if (!failure.ok()) return failure;
  FinishReport(network, config, instance, &run.report);
  run.report.sketch_edges = run.sketch.graph.num_edges();
  return run;
}

absl::StatusOr<SetCoverRun> RunSetCoverMapReduce(
    const CoverageInstance& instance, const SetCoverJob& job) {
  if (absl::Status status = ValidateMachines(job.machines); !status.ok()) {
    return status;
  }
  if (!(job.lambda > 0.0 && job.lambda < 1.0)) {
    return absl::InvalidArgumentError(
        absl::StrFormat("lambda = %g must lie in (0, 1)", job.lambda));
  }
  JobConfig config = BaseConfig(instance, job.machines, job.seed);
  config.tagged = true;
  const std::vector<int32_t> guesses =
      OutlierGuesses(instance.num_sets(), job.eps);
  for (const int32_t guess : guesses) {
    auto params = TheoryParams(instance.num_sets(), instance.num_elements(),
                               instance.num_edges(), guess, job.eps,
                               job.delta_dprime);
    if (!params.ok()) return params.status();
    config.params.push_back(*params);
  }
  // The edge budget does not depend on the guess.
  config.edge_budget = config.params.front().edge_budget;

  Network network(job.machines, job.schedule_seed);
  RunSketchRounds(instance, config, network);

  SetCoverRun run;
  int64_t sketch_edges = 0;
  absl::Status failure;
  network.RunRound([&](RoundContext& context) {
    if (context.self().id != kCoordinator) return;
    auto sketches = AssembleRound(config, context);
    if (!sketches.ok()) {
      failure = sketches.status();
      return;
    }
    std::vector<const CoverageInstance*> targets;
    for (const Sketch& sketch : *sketches) {
      targets.push_back(&sketch.graph);
      sketch_edges += sketch.graph.num_edges();
    }
    context.Scan(static_cast<int64_t>(config.num_sets) *
                 static_cast<int64_t>(guesses.size()));
    if (config.non_isolated <
        internal::CoverTarget(config.num_elements, job.lambda)) {
      failure = absl::FailedPreconditionError("infeasible outlier fraction");
      return;
    }
    auto solution =
        SelectOutlierCover(targets, guesses, job.lambda, job.eps, &run.guess);
    if (!solution.ok()) {
      failure = solution.status();
      return;
    }
    run.solution = *std::move(solution);
  });
  if (!failure.ok()) return failure;
  FinishReport(network, config, instance, &run.report);
  run.report.sketch_edges = sketch_edges;
  const double n = instance.num_sets();
  run.report.sketch_edges_reference =
      24.0 * n * std::log(std::max(n, 2.0)) / std::pow(job.lambda, 3);
  return run;
}

}  // namespace covsketch
