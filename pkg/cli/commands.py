"""
Subcommand handlers. Each handler takes the parsed argparse namespace and
returns the process exit code:

    0  success / STABLE / dynamics reached an equilibrium
    1  UNSTABLE, a failed bound check, or dynamics without an equilibrium
    2  bad parameters, unreadable instance file, invalid player (raised as ValueError)
    3  resource limit / UNKNOWN verdict

ValueError and ResourceLimitError propagate to run.main, which maps them.
"""

import json
import logging
from typing import Optional

import jsonschema
import networkx as nx

from analysis.bounds import CheckVerdict
from analysis.report import report
from config import Config
from core.cover import SolverBudget
from core.errors import InvalidPlayerError
from core.graph import Graph
from game.best_response import best_response
from game.costs import player_cost
from game.dynamics import Outcome, Schedule, best_response_dynamics
from game.equilibrium import heuristic_records, is_equilibrium
from game.model import StrategyProfile, Variant, Verdict, cost_to_json
from instances import gadgets, generators, reductions, ring
from instances.instance import Instance
from instances.io import load_instance, save_instance, to_dot, to_edgelist
from schemas import BEST_RESPONSE_SCHEMA, BOUND_REPORT_SCHEMA, DYNAMICS_SCHEMA, EQUILIBRIUM_REPORT_SCHEMA
from storage import StorageBackend, get_storage_backend

logger = logging.getLogger(__name__)

FAMILIES = ['star', 'complete', 'clique-pendant', 'path-hub', 'prime-tree', 'multipartite', 'ring',
            'gadget', 'reduce-domset', 'reduce-kmedian', 'bound-one-hubs']

VERDICT_EXIT = {Verdict.STABLE: 0, Verdict.UNSTABLE: 1, Verdict.UNKNOWN: 3}


# =============================================================================
# SHARED HELPERS
# =============================================================================

def solver_budget(args) -> SolverBudget:
    expansions = args.budget if args.budget is not None else Config.BUDGET
    timeout = args.timeout if args.timeout is not None else Config.TIMEOUT
    if expansions <= 0:
        raise ValueError("--budget must be positive")
    if timeout is not None and timeout < 0:
        raise ValueError("--timeout must not be negative")
    return SolverBudget(max_expansions=expansions, timeout=timeout)


def worker_count(args) -> int:
    jobs = args.jobs if args.jobs is not None else Config.JOBS
    if jobs < 1:
        raise ValueError("--jobs must be at least 1")
    return jobs


def emit_json(data: dict, schema: dict):
    jsonschema.validate(instance=data, schema=schema)
    print(json.dumps(data, sort_keys=True, indent=2))


def _require(args, *names):
    missing = [f"--{n.replace('_', '-')}" for n in names if getattr(args, n, None) is None]
    if missing:
        raise ValueError(f"{args.family} needs {', '.join(missing)}")


def sum_bound(args, n: int) -> Optional[int]:
    """--B as given, or --D converted with B = round(D*n) (echoed)."""
    if args.B is not None and args.D is not None:
        raise ValueError("give either --B or --D, not both")
    if args.D is not None:
        b = int(round(args.D * n))
        print(f"Using B = round({args.D} * {n}) = {b}")
        return b
    return args.B


def parse_base_graph(text: str, storage: StorageBackend) -> Graph:
    """
    Embedded graph for the reductions: 'cycle:N', 'path:N', 'complete:N',
    'star:N' (N nodes in total), 'petersen', or 'file:PATH' (graph of an instance file).
    """
    kind, _, arg = text.partition(':')
    if kind == 'file':
        return load_instance(storage, arg).graph
    if kind == 'petersen':
        return gadgets.petersen()
    builders = {
        'cycle': nx.cycle_graph,
        'path': nx.path_graph,
        'complete': nx.complete_graph,
        'star': lambda n: nx.star_graph(n - 1),
    }
    if kind not in builders:
        raise ValueError(f"unknown base graph {text!r}")
    try:
        size = int(arg)
    except ValueError:
        raise ValueError(f"base graph {text!r} needs a node count, e.g. {kind}:4") from None
    if size < 1:
        raise ValueError("base graph needs at least one node")
    return Graph.from_networkx(builders[kind](size))


# =============================================================================
# GEN
# =============================================================================

def build_instance(args, storage: StorageBackend) -> Instance:
    family = args.family
    variant = Variant(args.variant)

    if family == 'star':
        _require(args, 'n')
        bound = args.R if variant is Variant.MAX else sum_bound(args, args.n)
        return generators.star(args.n, args.owner, variant, bound)
    if family == 'complete':
        _require(args, 'n')
        bound = args.R if variant is Variant.MAX else sum_bound(args, args.n)
        return generators.complete(args.n, variant, bound)
    if family == 'clique-pendant':
        _require(args, 'k')
        return generators.nonuniform_clique_pendant(args.k, variant)
    if family == 'path-hub':
        _require(args, 'R', 'h')
        return generators.path_hub(args.R, args.h)
    if family == 'prime-tree':
        _require(args, 'p')
        return generators.prime_tree(args.p)
    if family == 'multipartite':
        _require(args, 'n', 'k')
        return generators.multipartite_sum(args.n, args.k)
    if family == 'ring':
        _require(args, 'k', 'h')
        if args.k < 2 or args.h < 1:
            raise ValueError("ring needs --k >= 2 and --h >= 1")
        costs = ring.ring_family_costs(args.k, args.h)
        b = sum_bound(args, costs.n_k)
        if b is not None and b not in costs.window:
            logger.warning(f"B={b} lies outside the stability window [{costs.lam}, {costs.lam_prime})")
        return ring.ring_family(args.k, args.h, b)
    if family == 'gadget':
        _require(args, 'R', 'pendants')
        graph = load_instance(storage, args.gadget_file).graph if args.gadget_file else gadgets.petersen()
        return gadgets.gadget_with_pendants(graph, args.pendants, args.R, args.attach, args.anchor)
    if family == 'reduce-domset':
        _require(args, 'base', 'R')
        return reductions.reduction_from_dominating_set(parse_base_graph(args.base, storage), args.R)
    if family == 'reduce-kmedian':
        _require(args, 'base', 'beta')
        return reductions.reduction_from_kmedian(parse_base_graph(args.base, storage), args.beta)
    if family == 'bound-one-hubs':
        _require(args, 'n', 'ones')
        return generators.bound_one_hubs(args.n, args.ones)
    raise ValueError(f"unknown family {family!r}")


def cmd_gen(args) -> int:
    storage = get_storage_backend()
    instance = build_instance(args, storage)
    save_instance(storage, args.output, instance)
    graph = instance.graph
    print(f"{instance.provenance.label()}: n={instance.n} edges={graph.num_edges} "
          f"purchases={instance.profile.purchases} -> {args.output}")
    return 0


# =============================================================================
# CHECK / BEST RESPONSE
# =============================================================================

def cmd_check(args) -> int:
    instance = load_instance(get_storage_backend(), args.input)
    result = is_equilibrium(instance.spec, instance.profile, solver_budget(args), worker_count(args))
    if args.json:
        emit_json(result.to_dict(), EQUILIBRIUM_REPORT_SCHEMA)
    else:
        print(f"Instance:    {instance.provenance.label()} (n={instance.n}, {instance.spec.variant.value})")
        print(f"Verdict:     {result.verdict.value.upper()}")
        print(f"Social cost: {cost_to_json(result.social_cost)} (purchases {result.purchases})")
        if result.witness is not None:
            w = result.witness
            print(f"Witness:     player {w.player} pays {cost_to_json(w.current_cost)}, "
                  f"best {cost_to_json(w.best_cost) if w.best_cost is not None else '?'} "
                  f"via {list(w.deviation) if w.deviation is not None else 'no feasible strategy'}")
        unresolved = [r.player for r in result.players if not r.resolved]
        if unresolved:
            print(f"Unresolved:  players {unresolved}")
        heuristic = heuristic_records(result)
        if heuristic:
            print(f"Heuristic:   {len(heuristic)} best responses are upper bounds only")
    return VERDICT_EXIT[result.verdict]


def resolve_player(text: str, n: int) -> int:
    if text == 'last':
        return n - 1
    try:
        player = int(text)
    except ValueError:
        raise InvalidPlayerError(f"player must be an integer or 'last', got {text!r}") from None
    if not 0 <= player < n:
        raise InvalidPlayerError(f"player {player} out of range [0, {n})")
    return player


def cmd_best_response(args) -> int:
    instance = load_instance(get_storage_backend(), args.input)
    v = resolve_player(args.player, instance.n)
    current = player_cost(instance.spec, instance.profile, v)
    br = best_response(instance.spec, instance.profile, v, solver_budget(args))
    if args.json:
        data = br.to_dict()
        data['current_cost'] = cost_to_json(current)
        emit_json(data, BEST_RESPONSE_SCHEMA)
    else:
        print(f"Player {v}: current cost {cost_to_json(current)}")
        print(f"Best response: {list(br.strategy)} (cost {cost_to_json(br.cost)}, {br.status.value})")
    return 0


# =============================================================================
# DYNAMICS
# =============================================================================

def cmd_dynamics(args) -> int:
    storage = get_storage_backend()
    instance = load_instance(storage, args.input)
    initial = instance.profile
    if args.from_empty:
        initial = StrategyProfile.empty(instance.n)

    on_step = None
    if args.trace:
        if not storage.save_text(args.trace, ''):
            raise OSError(f"could not write trace {args.trace}")

        def on_step(step):
            if not storage.append_line(args.trace, json.dumps(step.to_dict(), sort_keys=True)):
                raise OSError(f"could not append to trace {args.trace}")

    result = best_response_dynamics(instance.spec, initial, Schedule(args.schedule), args.seed,
                                     args.max_rounds, solver_budget(args), on_step)

    if args.output:
        final = Instance(instance.spec, result.profile, instance.provenance, instance.expected)
        save_instance(storage, args.output, final)

    if args.json:
        emit_json(result.to_dict(), DYNAMICS_SCHEMA)
    else:
        print(f"Outcome: {result.outcome.value.upper()} after {result.rounds} rounds, "
              f"{len(result.trace)} deviations")
        if result.outcome is Outcome.CYCLE:
            print(f"Repeated state {result.repeated_hash[:16]} first seen at step {result.first_seen}")
    return 0 if result.outcome is Outcome.EQUILIBRIUM else 1


# =============================================================================
# ANALYZE / EXPORT
# =============================================================================

def cmd_analyze(args) -> int:
    storage = get_storage_backend()
    instance = load_instance(storage, args.input)
    budget = solver_budget(args)
    equilibrium = is_equilibrium(instance.spec, instance.profile, budget, worker_count(args))
    bounds = report(instance, equilibrium, budget)

    if args.csv:
        if not storage.save_text(args.csv, bounds.to_csv()):
            raise OSError(f"could not write {args.csv}")
    if args.json:
        emit_json(bounds.to_dict(), BOUND_REPORT_SCHEMA)
    else:
        ratio = 'n/a' if bounds.ratio is None else f"{bounds.ratio:.4f}"
        optimum = 'n/a' if bounds.optimum is None else f"{bounds.optimum.value} ({bounds.optimum.kind.value})"
        print(f"Instance: {bounds.instance}")
        print(f"Verdict:  {bounds.verdict.value.upper()}")
        print(f"SC={cost_to_json(bounds.social_cost)} optimum={optimum} ratio={ratio}")
        for c in bounds.checks:
            print(f"  {c.check:<20} {c.verdict.value:<15} bound={c.bound} {c.detail}")

    if bounds.verdict is Verdict.UNKNOWN:
        return 3
    if bounds.verdict is Verdict.UNSTABLE or any(c.verdict is CheckVerdict.FAIL for c in bounds.checks):
        return 1
    return 0


def cmd_export(args) -> int:
    storage = get_storage_backend()
    instance = load_instance(storage, args.input)
    text = to_dot(instance) if args.format == 'dot' else to_edgelist(instance)
    if args.output:
        if not storage.save_text(args.output, text):
            raise OSError(f"could not write {args.output}")
        print(f"Exported {instance.provenance.label()} as {args.format} to {args.output}")
    else:
        print(text, end='')
    return 0
