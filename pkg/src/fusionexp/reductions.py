"""Oracle reductions between the scalar and tuple discrete-log problem families.

Each reduction solves one problem using an oracle for another as a black
box.  Oracles are wrapped in counting adapters so that the advertised query
budgets (a single query for the embedding reductions, 2n scalar queries for
the generator-relative tuple solver) are measurable facts rather than
claims.  `run_reduction_matrix` exercises every implemented arrow on random
instances with exhaustive-scan oracles behind them and reports success
rates and mean query counts.
"""

from __future__ import annotations

import random
import threading
from dataclasses import dataclass, field as dc_field
from typing import Callable

from .dlp import (
    DlogInstance,
    DlogOracle,
    FdlogInstance,
    FdlogOracle,
    dlog_bruteforce,
    fdlog_bruteforce,
    fdlog_solve,
)
from .errors import IdentityBase, OracleInconsistent
from .field import FieldParams, fe_add, fe_mul, fe_random
from .fusion import FusionBase, fusion_pow, scalar_embed, unit_embed
from .group import GroupElement, GroupParams, g_pow, generator_element, identity

DhOracle = Callable[[GroupElement, GroupElement, GroupElement], GroupElement]
FdhOracle = Callable[[FusionBase, FusionBase, FusionBase], FusionBase]
DdhOracle = Callable[[GroupElement, GroupElement, GroupElement, GroupElement], bool]
FddhOracle = Callable[[FusionBase, FusionBase, FusionBase, FusionBase], bool]


class CountingOracle:
    """Wraps a callable and counts invocations; safe under concurrent trials."""

    def __init__(self, fn: Callable):
        self._fn = fn
        self._lock = threading.Lock()
        self._calls = 0

    def __call__(self, *args, **kwargs):
        with self._lock:
            self._calls += 1
        return self._fn(*args, **kwargs)

    @property
    def calls(self) -> int:
        return self._calls

    def reset(self) -> None:
        with self._lock:
            self._calls = 0


@dataclass
class OracleSuite:
    """One counting oracle per problem, for reduction experiments."""

    dlog: CountingOracle
    fdlog: CountingOracle
    dh: CountingOracle
    fdh: CountingOracle
    ddh: CountingOracle
    fddh: CountingOracle


def bruteforce_suite(group: GroupParams, field: FieldParams) -> OracleSuite:
    """Exact oracles for every problem, backed by exhaustive scans."""
    return OracleSuite(
        dlog=CountingOracle(dlog_bruteforce),
        fdlog=CountingOracle(fdlog_bruteforce),
        dh=CountingOracle(dh_from_dlog(dlog_bruteforce)),
        fdh=CountingOracle(fdh_from_fdlog(fdlog_bruteforce)),
        ddh=CountingOracle(ddh_from_dh(dh_from_dlog(dlog_bruteforce))),
        fddh=CountingOracle(fddh_from_fdh(fdh_from_fdlog(fdlog_bruteforce))),
    )


# ---------------------------------------------------------------------------
# Embedding reductions: scalar problems solved by one tuple-oracle query
# ---------------------------------------------------------------------------


def _first_component_embed(y: GroupElement, fld: FieldParams) -> FusionBase:
    comps = (y,) + tuple(identity(y.params) for _ in range(fld.n - 1))
    return FusionBase(y.params, fld, comps)


def _diagonal_embed(y: GroupElement, fld: FieldParams) -> FusionBase:
    return FusionBase(y.params, fld, (y,) * fld.n)


def reduce_dlp_to_fdlp(
    y: GroupElement, g: GroupElement, fld: FieldParams, fdlog: FdlogOracle
) -> int:
    """Scalar dlog from a single tuple-dlog query.

    Embeds the target diagonally and the base into the first component;
    the oracle's answer must be the constant vector (x, ..., x).
    """
    if g.residue == 1:
        raise IdentityBase("dlog base must not be the identity")
    base = unit_embed(g, fld)
    target = _diagonal_embed(y, fld)
    ans = fdlog(FdlogInstance(base, target))
    if len(set(ans.coeffs)) != 1:
        raise OracleInconsistent(f"expected a constant vector, got {ans.coeffs}")
    return ans.coeffs[0]


def reduce_dhp_to_fdhp(
    y1: GroupElement,
    y2: GroupElement,
    g: GroupElement,
    fld: FieldParams,
    fdh: FdhOracle,
) -> GroupElement:
    """Scalar Diffie-Hellman value from a single tuple-DH query.

    First-component embedding keeps all the structure in coordinate 0, so
    the answer tuple must be (g^(x1*x2), 1, ..., 1).
    """
    if g.residue == 1:
        raise IdentityBase("base must not be the identity")
    ans = fdh(
        _first_component_embed(y1, fld),
        _first_component_embed(y2, fld),
        unit_embed(g, fld),
    )
    if any(c.residue != 1 for c in ans.components[1:]):
        raise OracleInconsistent("trailing components of the answer are not 1")
    return ans.components[0]


def reduce_ddp_to_fddp(
    y1: GroupElement,
    y2: GroupElement,
    y3: GroupElement,
    g: GroupElement,
    fld: FieldParams,
    fddh: FddhOracle,
) -> bool:
    """Scalar decision-DH from a single tuple-decision query, answered verbatim."""
    if g.residue == 1:
        raise IdentityBase("base must not be the identity")
    return fddh(
        _first_component_embed(y1, fld),
        _first_component_embed(y2, fld),
        _first_component_embed(y3, fld),
        unit_embed(g, fld),
    )


# ---------------------------------------------------------------------------
# Downhill adapters: a dlog oracle answers DH; a DH oracle answers decision-DH
# ---------------------------------------------------------------------------


def dh_from_dlog(dlog: DlogOracle) -> DhOracle:
    def dh(y1: GroupElement, y2: GroupElement, g: GroupElement) -> GroupElement:
        x1 = dlog(DlogInstance(g, y1))
        return g_pow(y2, x1)

    return dh


def ddh_from_dh(dh: DhOracle) -> DdhOracle:
    def ddh(
        y1: GroupElement, y2: GroupElement, y3: GroupElement, g: GroupElement
    ) -> bool:
        return dh(y1, y2, g) == y3

    return ddh


def fdh_from_fdlog(fdlog: FdlogOracle) -> FdhOracle:
    def fdh(y1: FusionBase, y2: FusionBase, base: FusionBase) -> FusionBase:
        x1 = fdlog(FdlogInstance(base, y1))
        return fusion_pow(y2, x1)

    return fdh


def fddh_from_fdh(fdh: FdhOracle) -> FddhOracle:
    def fddh(
        y1: FusionBase, y2: FusionBase, y3: FusionBase, base: FusionBase
    ) -> bool:
        return fdh(y1, y2, base) == y3

    return fddh


# ---------------------------------------------------------------------------
# Experiment runner
# ---------------------------------------------------------------------------


@dataclass
class ArrowStats:
    trials: int = 0
    successes: int = 0
    oracle_calls: int = 0

    @property
    def mean_oracle_calls(self) -> float:
        return self.oracle_calls / self.trials if self.trials else 0.0


@dataclass
class ReductionReport:
    arrows: dict[str, ArrowStats] = dc_field(default_factory=dict)

    def all_successful(self) -> bool:
        return all(s.successes == s.trials for s in self.arrows.values())

    def to_json_dict(self) -> dict:
        return {
            name: {
                "trials": s.trials,
                "successes": s.successes,
                "mean_oracle_calls": s.mean_oracle_calls,
            }
            for name, s in self.arrows.items()
        }


def run_reduction_matrix(
    group: GroupParams, fld: FieldParams, trials: int, seed: int
) -> ReductionReport:
    """Run every implemented reduction arrow on seeded random instances.

    All oracles are exact (exhaustive-scan backed), so on correct code every
    arrow succeeds on every trial; per-arrow query counts are accumulated
    from the counting wrappers.  Desk-scale parameters only.
    """
    report = ReductionReport()
    if trials <= 0:
        return report
    rng = random.Random(seed)
    g = generator_element(group)
    q = group.q

    def record(name: str, run_trial: Callable[[CountingOracle], bool], oracle_fn):
        oracle = CountingOracle(oracle_fn)
        stats = ArrowStats()
        for _ in range(trials):
            stats.trials += 1
            if run_trial(oracle):
                stats.successes += 1
        stats.oracle_calls = oracle.calls
        report.arrows[name] = stats

    def trial_dlp_le_fdlp(oracle):
        x = rng.randrange(q)
        return reduce_dlp_to_fdlp(g_pow(g, x), g, fld, oracle) == x

    record("dlp_le_fdlp", trial_dlp_le_fdlp, fdlog_bruteforce)

    def trial_fdlp_le_dlp(oracle):
        base = scalar_embed(g, fe_random(fld, rng, nonzero=True))
        x = fe_random(fld, rng)
        return fdlog_solve(FdlogInstance(base, fusion_pow(base, x)), oracle) == x

    record("fdlp_le_dlp", trial_fdlp_le_dlp, dlog_bruteforce)

    def trial_dhp_le_fdhp(oracle):
        x1, x2 = rng.randrange(q), rng.randrange(q)
        got = reduce_dhp_to_fdhp(g_pow(g, x1), g_pow(g, x2), g, fld, oracle)
        return got == g_pow(g, x1 * x2)

    record("dhp_le_fdhp", trial_dhp_le_fdhp, fdh_from_fdlog(fdlog_bruteforce))

    def trial_ddp_le_fddp(oracle):
        x1, x2 = rng.randrange(q), rng.randrange(q)
        genuine = rng.random() < 0.5
        x3 = x1 * x2 % q if genuine else (x1 * x2 + rng.randrange(1, q)) % q
        got = reduce_ddp_to_fddp(
            g_pow(g, x1), g_pow(g, x2), g_pow(g, x3), g, fld, oracle
        )
        return got == genuine

    record(
        "ddp_le_fddp",
        trial_ddp_le_fddp,
        fddh_from_fdh(fdh_from_fdlog(fdlog_bruteforce)),
    )

    def trial_dhp_le_dlp(oracle):
        dh = dh_from_dlog(oracle)
        x1, x2 = rng.randrange(q), rng.randrange(q)
        return dh(g_pow(g, x1), g_pow(g, x2), g) == g_pow(g, x1 * x2)

    record("dhp_le_dlp", trial_dhp_le_dlp, dlog_bruteforce)

    def trial_ddp_le_dhp(oracle):
        ddh = ddh_from_dh(oracle)
        x1, x2 = rng.randrange(q), rng.randrange(q)
        genuine = rng.random() < 0.5
        x3 = x1 * x2 % q if genuine else (x1 * x2 + rng.randrange(1, q)) % q
        return ddh(g_pow(g, x1), g_pow(g, x2), g_pow(g, x3), g) == genuine

    record("ddp_le_dhp", trial_ddp_le_dhp, dh_from_dlog(dlog_bruteforce))

    def trial_fdhp_le_fdlp(oracle):
        fdh = fdh_from_fdlog(oracle)
        base = scalar_embed(g, fe_random(fld, rng, nonzero=True))
        x1, x2 = fe_random(fld, rng), fe_random(fld, rng)
        got = fdh(fusion_pow(base, x1), fusion_pow(base, x2), base)
        return got == fusion_pow(base, fe_mul(x1, x2))

    record("fdhp_le_fdlp", trial_fdhp_le_fdlp, fdlog_bruteforce)

    def trial_fddp_le_fdhp(oracle):
        fddh = fddh_from_fdh(oracle)
        base = scalar_embed(g, fe_random(fld, rng, nonzero=True))
        x1, x2 = fe_random(fld, rng), fe_random(fld, rng)
        genuine = rng.random() < 0.5
        x3 = fe_mul(x1, x2)
        if not genuine:
            x3 = fe_add(x3, fe_random(fld, rng, nonzero=True))
        got = fddh(
            fusion_pow(base, x1),
            fusion_pow(base, x2),
            fusion_pow(base, x3),
            base,
        )
        return got == genuine

    record("fddp_le_fdhp", trial_fddp_le_fdhp, fdh_from_fdlog(fdlog_bruteforce))

    return report
