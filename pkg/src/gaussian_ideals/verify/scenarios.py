"""Named verification scenarios, each run under its own effort budget."""

from __future__ import annotations

import json
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from contextlib import contextmanager
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Callable, Iterator, Mapping, Sequence

from gaussian_ideals.algebra.field import FieldSpec, parse_field
from gaussian_ideals.algebra.poly import PolyRing
from gaussian_ideals.combinat.monomial import (
    DEFAULT_ENUMERATION_LIMIT,
    MonomialIdeal,
    edge_ideal,
    is_normal_up_to,
    join,
    product_ideal,
)
from gaussian_ideals.config import AppConfig
from gaussian_ideals.errors import (
    BudgetExceededError,
    NotAReductionError,
    NotArtinianError,
    ParseError,
)
from gaussian_ideals.io.graph_reader import resolve_graph
from gaussian_ideals.utils.budget import EffortBudget, use_budget
from gaussian_ideals.verify import claims as C
from gaussian_ideals.verify.fiber import (
    check_fiber_reduction,
    check_minors_equal_kernel,
    check_noether_normalization,
)
from gaussian_ideals.verify.gauss import (
    GenericSetup,
    check_decomposition3_chain,
    check_dedekind_mertens,
    check_primary_decomposition2,
    check_primary_decomposition3,
    check_sharpness,
    hu_check,
)
from gaussian_ideals.verify.report import Claim, Report, Scenario
from gaussian_ideals.verify.structure import check_struct_content, make_algebra

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RunSettings:
    field: str = "gf:32003"
    max_reductions: int = 10_000_000
    timeout_seconds: float = 120.0
    enumeration_limit: int = DEFAULT_ENUMERATION_LIMIT

    @classmethod
    def from_config(cls, config: AppConfig) -> RunSettings:
        return cls(
            field=config.default_field,
            max_reductions=config.max_reductions,
            timeout_seconds=config.scenario_timeout_seconds,
            enumeration_limit=config.enumeration_limit,
        )


@dataclass(frozen=True)
class ScenarioRequest:
    command: str
    params: dict[str, Any] = field(default_factory=dict)


class ScenarioContext:
    def __init__(self, scenario: Scenario, settings: RunSettings, field: FieldSpec) -> None:
        self.scenario = scenario
        self.settings = settings
        self.field = field

    @contextmanager
    def step(self, name: str) -> Iterator[None]:
        started = time.perf_counter()
        try:
            yield
        finally:
            self.scenario.timings[name] = time.perf_counter() - started

    def record(self, claims: Sequence[Claim]) -> None:
        self.scenario.claims.extend(claims)

    def fresh_budget(self) -> EffortBudget:
        params = self.scenario.parameters
        timeout = float(params.get("timeout", self.settings.timeout_seconds))
        return EffortBudget(self.settings.max_reductions, timeout or None)


@dataclass(frozen=True)
class Command:
    run: Callable[[Mapping[str, Any], ScenarioContext], None]
    statement: str
    defaults: Mapping[str, Any]


def _setup(params: Mapping[str, Any], ctx: ScenarioContext, count: int = 2) -> GenericSetup:
    degrees = [int(params["m"]), int(params["n"])]
    if count == 3:
        degrees.append(int(params["p"]))
    return GenericSetup.build(*degrees, field=ctx.field)


def _dedekind_mertens(params: Mapping[str, Any], ctx: ScenarioContext) -> None:
    with ctx.step("dedekind_mertens"):
        ctx.record(check_dedekind_mertens(_setup(params, ctx)))


def _sharpness(params: Mapping[str, Any], ctx: ScenarioContext) -> None:
    with ctx.step("reduction_number"):
        ctx.record(check_sharpness(_setup(params, ctx)))


def _primary_decomp2(params: Mapping[str, Any], ctx: ScenarioContext) -> None:
    with ctx.step("decomposition"):
        ctx.record(check_primary_decomposition2(_setup(params, ctx)))


def _primary_decomp3(params: Mapping[str, Any], ctx: ScenarioContext) -> None:
    s = _setup(params, ctx, count=3)
    try:
        with ctx.step("seven_factor"):
            ctx.record(check_primary_decomposition3(s))
        return
    except BudgetExceededError as exc:
        logger.warning("Seven-factor intersection ran out of budget (%s); checking the chain", exc)
        ctx.record([Claim.budget_exceeded("decomposition", C.PRIMARY_DECOMPOSITION3, str(exc))])
    with use_budget(ctx.fresh_budget()), ctx.step("chain"):
        ctx.record(check_decomposition3_chain(s))


def _hu_specialization(params: Mapping[str, Any], ctx: ScenarioContext) -> None:
    with ctx.step("identities"):
        ctx.record(hu_check(_setup(params, ctx)))


def _toric_kernel(params: Mapping[str, Any], ctx: ScenarioContext) -> None:
    with ctx.step("kernel"):
        ctx.record(check_minors_equal_kernel(int(params["m"]), int(params["n"]), ctx.field))


def _noether(params: Mapping[str, Any], ctx: ScenarioContext) -> None:
    with ctx.step("normalization"):
        ctx.record(check_noether_normalization(int(params["m"]), int(params["n"]), ctx.field))


def _fiber_reduction(params: Mapping[str, Any], ctx: ScenarioContext) -> None:
    degrees = [int(params["m"]), int(params["n"])]
    if params.get("p") is not None:
        degrees.append(int(params["p"]))
    with ctx.step("fiber"):
        ctx.record(check_fiber_reduction(tuple(degrees), ctx.field, cross_check=bool(params["cross_check"])))


def _monomial_ideal(params: Mapping[str, Any], ctx: ScenarioContext) -> MonomialIdeal:
    kind = params["ideal"]
    if kind == "product":
        return product_ideal(int(params["m"]), int(params["n"]), int(params["p"]), ctx.field)
    if kind == "graph":
        if not params.get("graph"):
            raise ValueError("--ideal graph needs --graph")
        return edge_ideal(resolve_graph(str(params["graph"])), "x", ctx.field)
    if kind == "example":
        ring = PolyRing(("x", "y"), ctx.field)
        return MonomialIdeal.from_exponents(ring, [(2, 0), (0, 2)])
    raise ValueError(f"unknown ideal kind {kind!r}; expected product, graph or example")


def _normality(params: Mapping[str, Any], ctx: ScenarioContext) -> None:
    I = _monomial_ideal(params, ctx)
    up_to = int(params["up_to"])
    with ctx.step("normality"):
        verdict = is_normal_up_to(I, up_to, ctx.settings.enumeration_limit)
    witness = I.ring.format_monomial(verdict.witness) if verdict.witness else None
    if params["ideal"] == "example":
        ok = not verdict.normal and verdict.failed_at == 1 and verdict.witness == (1, 1)
        control = Claim.check(
            "non_normal_control", C.NON_NORMAL_CONTROL, ok, failed_at=verdict.failed_at, witness=witness
        )
        ctx.record([control])
        return
    ctx.record(
        [
            Claim.check(
                "normal",
                C.NORMALITY.format(up_to=up_to),
                verdict.normal,
                ideal=str(I),
                failed_at=verdict.failed_at,
                witness=witness,
            )
        ]
    )


def _join_normality(params: Mapping[str, Any], ctx: ScenarioContext) -> None:
    up_to = int(params["up_to"])
    I = edge_ideal(resolve_graph(str(params["left"])), "x", ctx.field)
    J = edge_ideal(resolve_graph(str(params["right"])), "y", ctx.field)
    limit = ctx.settings.enumeration_limit
    sides = [side for side in (I, J) if not side.is_zero()]
    with ctx.step("factors"):
        degrees = {side.squarefree_degree() for side in sides}
        factors_normal = all(is_normal_up_to(side, up_to, limit).normal for side in sides)
    # equal square-free degree t >= 2 on both sides, or one side zero
    hypothesis = (
        bool(sides)
        and len(degrees) == 1
        and None not in degrees
        and min(degrees) >= 2
        and factors_normal
    )
    L = join(I, J)
    with ctx.step("join"):
        verdict = is_normal_up_to(L, up_to, limit)
    witness = L.ring.format_monomial(verdict.witness) if verdict.witness else None
    ctx.record(
        [
            Claim.check(
                "join_normal",
                C.JOIN_NORMALITY.format(up_to=up_to),
                verdict.normal,
                exploratory=not hypothesis,
                generators=len(L.gens),
                factors_normal=factors_normal,
                failed_at=verdict.failed_at,
                witness=witness,
            )
        ]
    )


def _struct_content(params: Mapping[str, Any], ctx: ScenarioContext) -> None:
    algebra = make_algebra(str(params["kind"]), int(params["rank"]), ctx.field)
    with ctx.step("probes"):
        ctx.record(check_struct_content(algebra))


COMMANDS: dict[str, Command] = {
    "dedekind-mertens": Command(_dedekind_mertens, C.DEDEKIND_MERTENS, {"m": 1, "n": 1}),
    "sharpness": Command(_sharpness, C.REDUCTION_NUMBER, {"m": 1, "n": 1}),
    "primary-decomp2": Command(_primary_decomp2, C.PRIMARY_DECOMPOSITION2, {"m": 1, "n": 1}),
    "primary-decomp3": Command(_primary_decomp3, C.PRIMARY_DECOMPOSITION3, {"m": 1, "n": 1, "p": 1}),
    "hu-specialization": Command(_hu_specialization, C.HU_PRODUCT, {"m": 1, "n": 1}),
    "toric-kernel": Command(_toric_kernel, C.TORIC_EQUALS_MINORS, {"m": 1, "n": 1}),
    "noether": Command(_noether, C.NOETHER_INDEPENDENT, {"m": 1, "n": 1}),
    "fiber-reduction": Command(
        _fiber_reduction, C.CROSS_ROUTE, {"m": 1, "n": 1, "p": None, "cross_check": True}
    ),
    "normality": Command(
        _normality, C.NORMALITY, {"ideal": "product", "m": 1, "n": 1, "p": 1, "graph": None, "up_to": 2}
    ),
    "join-normality": Command(
        _join_normality, C.JOIN_NORMALITY, {"left": "cycle:4", "right": "cycle:4", "up_to": 2}
    ),
    "struct-content": Command(_struct_content, C.STRUCT_REDUCTION, {"kind": "capped", "rank": 3}),
}

ALIASES = {"reduction-number": "sharpness"}

SCENARIO_NAMES = sorted([*COMMANDS, *ALIASES])


def _resolve(command: str) -> tuple[str, Command]:
    name = ALIASES.get(command, command)
    if name not in COMMANDS:
        raise ValueError(f"unknown scenario {command!r}; expected one of {SCENARIO_NAMES}")
    return name, COMMANDS[name]


def run_scenario(request: ScenarioRequest, settings: RunSettings) -> Scenario:
    name, command = _resolve(request.command)
    params = {**command.defaults, **{k: v for k, v in request.params.items() if v is not None}}
    unknown = set(params) - set(command.defaults) - {"field", "timeout"}
    if unknown:
        raise ValueError(f"{request.command} does not take {sorted(unknown)}")
    field = parse_field(str(params.get("field") or settings.field))
    params["field"] = str(field)
    scenario = Scenario(name=request.command, parameters=params)
    ctx = ScenarioContext(scenario, settings, field)

    logger.info("Starting %s with %s", request.command, params)
    started = time.perf_counter()
    try:
        with use_budget(ctx.fresh_budget()):
            command.run(params, ctx)
    except BudgetExceededError as exc:
        logger.warning("%s ran out of budget: %s", request.command, exc)
        scenario.claims.append(Claim.budget_exceeded(name, command.statement, str(exc)))
    except (NotArtinianError, NotAReductionError) as exc:
        logger.error("%s failed: %s", request.command, exc)
        scenario.claims.append(Claim.check(name, command.statement, False, error=str(exc)))
    scenario.timings["total"] = time.perf_counter() - started
    logger.info(
        "Finished %s: %s in %.2fs", request.command, scenario.status.value, scenario.timings["total"]
    )
    return scenario


def _run_job(job: tuple[ScenarioRequest, RunSettings]) -> Scenario:
    request, settings = job
    return run_scenario(request, settings)


def run_suite(requests: Sequence[ScenarioRequest], settings: RunSettings, workers: int = 1) -> Report:
    for request in requests:
        _resolve(request.command)
    if workers <= 1 or len(requests) <= 1:
        return Report([run_scenario(r, settings) for r in requests])
    logger.info("Running %d scenarios on %d workers", len(requests), workers)
    with ProcessPoolExecutor(max_workers=workers) as pool:
        scenarios = list(pool.map(_run_job, [(r, settings) for r in requests]))
    return Report(scenarios)


def _requests(command: str, sizes: Sequence[tuple[int, ...]], **extra: Any) -> list[ScenarioRequest]:
    keys = ("m", "n", "p")
    return [ScenarioRequest(command, {**dict(zip(keys, size)), **extra}) for size in sizes]


def default_suite(quick: bool = False) -> list[ScenarioRequest]:
    """The acceptance battery; ``quick`` keeps the smallest size of every check."""
    if quick:
        return [
            *_requests("dedekind-mertens", [(1, 1), (1, 2)]),
            *_requests("dedekind-mertens", [(1, 1)], field="q"),
            *_requests("sharpness", [(1, 1), (1, 2)]),
            *_requests("toric-kernel", [(1, 1), (1, 2)]),
            *_requests("noether", [(1, 1)]),
            *_requests("primary-decomp2", [(1, 1)]),
            *_requests("hu-specialization", [(1, 1)]),
            *_requests("fiber-reduction", [(1, 1), (1, 2)]),
            ScenarioRequest("normality", {"ideal": "product", "m": 1, "n": 1, "p": 1, "up_to": 2}),
            ScenarioRequest("normality", {"ideal": "example", "up_to": 1}),
            ScenarioRequest("join-normality", {"left": "path:2", "right": "path:2", "up_to": 2}),
            ScenarioRequest("struct-content", {"kind": "capped", "rank": 2}),
        ]
    return [
        *_requests("dedekind-mertens", [(1, 1), (1, 2), (1, 3), (1, 4), (2, 2), (2, 3)]),
        *_requests("dedekind-mertens", [(1, 1), (1, 2), (1, 3), (2, 2)], field="q"),
        *_requests("sharpness", [(1, 1), (1, 2), (2, 2), (1, 3)]),
        *_requests("toric-kernel", [(1, 1), (1, 2), (2, 2)]),
        *_requests("noether", [(1, 1), (1, 2), (2, 2)]),
        *_requests("primary-decomp2", [(1, 1), (1, 2), (2, 2)]),
        *_requests("hu-specialization", [(1, 1), (1, 2)]),
        *_requests("primary-decomp3", [(1, 1, 1)], timeout=600),
        *_requests("fiber-reduction", [(1, 1, 1)]),
        ScenarioRequest("normality", {"ideal": "product", "m": 1, "n": 1, "p": 1, "up_to": 4}),
        ScenarioRequest("normality", {"ideal": "product", "m": 1, "n": 1, "p": 2, "up_to": 4}),
        ScenarioRequest("normality", {"ideal": "example", "up_to": 1}),
        ScenarioRequest("join-normality", {"left": "cycle:4", "right": "cycle:4", "up_to": 3}),
        ScenarioRequest("join-normality", {"left": "cycle:4", "right": "empty:2", "up_to": 3}),
        ScenarioRequest("struct-content", {"kind": "capped", "rank": 3}),
        ScenarioRequest("struct-content", {"kind": "cyclic", "rank": 2}),
    ]


def load_suite_file(path: Path) -> tuple[str | None, list[ScenarioRequest]]:
    """Sweep file: ``{"field": ..., "scenarios": [{"command": ..., "m": .., ...}]}``."""
    if not path.exists():
        raise FileNotFoundError(f"Suite config not found: {path}")
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON ({exc})") from exc
    if not isinstance(data, dict) or not isinstance(data.get("scenarios"), list):
        raise ParseError(f"{path}: suite config must include a 'scenarios' list")
    requests = []
    for entry in data["scenarios"]:
        if not isinstance(entry, dict) or "command" not in entry:
            raise ParseError(f"{path}: every scenario needs a 'command'")
        params = {k: v for k, v in entry.items() if k != "command"}
        requests.append(ScenarioRequest(str(entry["command"]), params))
    field = data.get("field")
    return (str(field) if field else None), requests
