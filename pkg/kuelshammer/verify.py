"""
Batch verification of the closed-form results against independent computation.

Every check goes through the global CheckLogger; a job that raises is
recorded as a failed check, never skipped. Per-q jobs run concurrently and
results are reported sorted by q.
"""
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional

import numpy as np

from .blocks import cyclic_jmodj2, radical_chain
from .check_logger import CheckLogger, get_global_logger, log_check, set_global_logger
from .class_algebra import (
    center_of_group_algebra,
    class_square_zbar,
    classsum_product_zbar,
    closed_form_radical_basis,
    closed_form_radical_square_basis,
    expected_class_square,
    expected_classsum_product,
    kuelshammer_perp_group,
    quotient_zbar,
)
from .decider import check_applicable, decide_scalar, decide_scalar_presented
from .exceptions import MethodInapplicable
from .ffield import field_create
from .group import Group, a3_family_mismatches, direct_product, pgl2
from .linalg2 import Subspace
from .report import Report
from .symalg import direct_sum, group_algebra_table
from .utilities import DEFAULT_SEED, StageTimer

logger = logging.getLogger("kuelshammer")

F2 = field_create(2, 1)

SUITE = (7, 9, 17, 23, 25, 31, 41, 47, 49)
INAPPLICABLE = (3, 5, 11, 13)
SQUARE_IDENTITY_Q = (17, 23, 41)
PRODUCT_IDENTITY_Q = (17, 23)
CLOSED_FORM_BASIS_Q = (17, 23, 41)
PRESENTED = ((4, 0), (4, 1), (8, 0), (8, 1))
CROSS_PATH_GROUPS = (
    ("PGL_2(3)", lambda: pgl2(3)),
    ("PGL_2(5)", lambda: pgl2(5)),
    ("PGL_2(7)", lambda: pgl2(7)),
    ("S4", lambda: Group("symmetric", 4)),
    ("C16", lambda: Group("cyclic", 16)),
    ("D16", lambda: Group("dihedral", 16)),
)
PRODUCT_PAIRS = (
    ("S4 x C2", lambda: (Group("symmetric", 4), Group("cyclic", 2))),
    ("C4 x C4", lambda: (Group("cyclic", 4), Group("cyclic", 4))),
)


@dataclass(order=True)
class Job:
    q: int
    name: str
    run: Callable[[], Dict[str, Any]] = field(compare=False)


# ------------------------------------------------------------------ jobs


def _scalar_job(q: int, seed: int) -> Dict[str, Any]:
    sr = decide_scalar(q, depth=2, seed=seed)
    context = f"q={q}"
    log_check(context, "routes_agree", sr.routes["direct"], sr.routes["subtraction"])
    log_check(context, "a3_families", [], a3_family_mismatches(sr.group))
    log_check(context, "ledger_additivity", sr.ledger.whole, sr.ledger.totals())
    if q == 9:
        column = (sr.dims["center"], sr.dims["t1perp"], sr.dims["zbar"])
        log_check(context, "pgl2_9_column", (11, 6, 5), column)
        log_check(context, "pgl2_9_principal_zbar", 3, sr.principal["zbar"])
    return {"dims": sr.dims, "c": sr.c, "blocks": sr.block_count, "timings": sr.timings}


def _inapplicable_job(q: int) -> Dict[str, Any]:
    try:
        check_applicable(q)
        raised = False
    except MethodInapplicable:
        raised = True
    log_check(f"q={q}", "method_inapplicable", True, raised)
    return {}


def _zbar_of(q: int):
    G = pgl2(q)
    z = center_of_group_algebra(G)
    return z, quotient_zbar(z, kuelshammer_perp_group(G, 1))


def _family_range(q: int) -> range:
    return range(1, (q - 1) // 2 + 1) if q % 8 == 1 else range(1, (q + 1) // 2 + 1)


def _square_identity_job(q: int) -> Dict[str, Any]:
    _, zbar = _zbar_of(q)
    bad = [
        i for i in _family_range(q)
        if not np.array_equal(class_square_zbar(zbar, i), expected_class_square(zbar, i))
    ]
    log_check(f"q={q}", "class_square_identity", [], bad)
    return {}


def _product_identity_job(q: int) -> Dict[str, Any]:
    _, zbar = _zbar_of(q)
    bad, tested = [], 0
    indices = list(_family_range(q))
    for a, i in enumerate(indices):
        for j in indices[a + 1:]:
            try:
                product = classsum_product_zbar(zbar, i, j)
            except ValueError:
                # (i, j) outside the range of the two-term identity
                continue
            tested += 1
            if not np.array_equal(product, expected_classsum_product(zbar, i, j)):
                bad.append((i, j))
    log_check(f"q={q}", "classsum_product_identity", [], bad, f"{tested} pairs")
    return {}


def _closed_form_basis_job(q: int) -> Dict[str, Any]:
    z, zbar = _zbar_of(q)
    chain = radical_chain(zbar)
    context = f"q={q}"
    for name, vectors, power in (
        ("closed_form_radical_basis", closed_form_radical_basis(z), 1),
        ("closed_form_radical_square_basis", closed_form_radical_square_basis(z), 2),
    ):
        computed = chain.power(power)
        spanned = zbar.span_of_ambient(vectors)
        log_check(context, name, True, spanned == computed)
        log_check(context, f"{name}_size", computed.dim, len(vectors))
    return {}


def _cyclic_ladder_job() -> Dict[str, Any]:
    for m in range(1, 6):
        order = 2**m
        G = Group("cyclic", order)
        z = center_of_group_algebra(G)
        t1 = kuelshammer_perp_group(G, 1)
        chain = radical_chain(quotient_zbar(z, t1))
        half = order // 2
        expected = (half, half - 1, max(0, half - 2))
        computed = (t1.dim, chain.power(1).dim, chain.power(2).dim)
        log_check(f"C{order}", "cyclic_ladder", expected, computed)
        log_check(f"C{order}", "cyclic_jmodj2", expected[1] - expected[2], cyclic_jmodj2(order))
    return {}


def _cross_path_job() -> Dict[str, Any]:
    for name, build in CROSS_PATH_GROUPS:
        G = build()
        class_of = G.conjugacy.partition.class_of
        by_class = kuelshammer_perp_group(G, 1)
        lifted = [np.asarray(v)[class_of] for v in by_class.basis()]
        generic = group_algebra_table(G).tn_perp(1)
        log_check(name, "t1perp_cross_path", True, generic == Subspace.from_vectors(F2, G.order, lifted))
    return {}


def _multiplicativity_job() -> Dict[str, Any]:
    for name, build in PRODUCT_PAIRS:
        A, B = build()
        product = direct_product(A, B)
        tables = direct_sum(group_algebra_table(A), group_algebra_table(B))
        for n in (1, 2):
            a, b = kuelshammer_perp_group(A, n).dim, kuelshammer_perp_group(B, n).dim
            # kG (x) kH for the group product, kG x kH for the direct sum of tables
            log_check(name, f"t{n}perp_group_product", a * b, kuelshammer_perp_group(product, n).dim)
            log_check(name, f"t{n}perp_direct_sum", a + b, tables.tn_perp(n).dim)
    return {}


def _presented_job(seed: int) -> Dict[str, Any]:
    out = {}
    for s, c in PRESENTED:
        report = decide_scalar_presented(s, c, seed)
        log_check(f"D(2A)^{s}({c})", "dichotomy", 3 if c == 0 else 2, report.jmodj2)
        out[f"{s},{c}"] = report.jmodj2
    return out


def _semilinearity_job(q: int, seed: int) -> Dict[str, Any]:
    """(u + v)^2 = u^2 + v^2 and the packaged squaring map agree on Zbar."""
    _, zbar = _zbar_of(q)
    rng = np.random.default_rng(seed)
    f = zbar.squaring_map()
    bad = 0
    for _ in range(32):
        u, v = rng.integers(0, 2, size=(2, zbar.dim))
        if not np.array_equal(zbar.square(u ^ v), zbar.square(u) ^ zbar.square(v)):
            bad += 1
        if not np.array_equal(f.apply(u), zbar.square(u)):
            bad += 1
    log_check(f"q={q}", "squaring_semilinear", 0, bad)
    return {}


def build_jobs(qmax: int, seed: int = DEFAULT_SEED) -> List[Job]:
    jobs = []
    for q in SUITE:
        if q <= qmax:
            jobs.append(Job(q, "scalar", lambda q=q: _scalar_job(q, seed)))
            jobs.append(Job(q, "semilinear", lambda q=q: _semilinearity_job(q, seed)))
    for q in INAPPLICABLE:
        if q <= qmax:
            jobs.append(Job(q, "inapplicable", lambda q=q: _inapplicable_job(q)))
    for q in SQUARE_IDENTITY_Q:
        if q <= qmax:
            jobs.append(Job(q, "class_square", lambda q=q: _square_identity_job(q)))
    for q in PRODUCT_IDENTITY_Q:
        if q <= qmax:
            jobs.append(Job(q, "classsum_product", lambda q=q: _product_identity_job(q)))
    for q in CLOSED_FORM_BASIS_Q:
        if q <= qmax:
            jobs.append(Job(q, "closed_form_bases", lambda q=q: _closed_form_basis_job(q)))
    jobs.append(Job(0, "cyclic_ladder", _cyclic_ladder_job))
    jobs.append(Job(0, "cross_path", _cross_path_job))
    jobs.append(Job(0, "multiplicativity", _multiplicativity_job))
    jobs.append(Job(0, "presented", lambda: _presented_job(seed)))
    return sorted(jobs)


def _run(job: Job) -> Dict[str, Any]:
    try:
        return job.run()
    except Exception as exc:
        logger.exception("job %s at q=%d raised", job.name, job.q)
        check_logger = get_global_logger()
        if check_logger is not None:
            check_logger.log_error(f"q={job.q}", job.name, exc)
        return {"error": f"{type(exc).__name__}: {exc}"}


def verify_formulas(
    qmax: int,
    threads: int = 4,
    seed: int = DEFAULT_SEED,
    check_logger: Optional[CheckLogger] = None,
    command: str = "",
) -> Report:
    """
    Run every check that applies to q <= qmax; the report fails iff one check fails.

    :param threads: Worker threads for the per-q jobs.
    """
    if qmax < 9:
        raise ValueError(f"qmax must be at least 9, got {qmax}")
    if threads < 1:
        raise ValueError("threads must be positive")
    check_logger = check_logger or CheckLogger(f"verify_q{qmax}")
    previous = get_global_logger()
    set_global_logger(check_logger)
    timer = StageTimer()
    jobs = build_jobs(qmax, seed)
    try:
        with timer.stage("jobs"), ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(_run, jobs))
    finally:
        set_global_logger(previous)

    dims, scalar, errors = {}, {}, {}
    for job, result in zip(jobs, results):
        if "error" in result:
            errors[f"{job.name}@{job.q}"] = result["error"]
        if job.name == "scalar" and "dims" in result:
            dims[str(job.q)] = result["dims"]
            scalar[str(job.q)] = {"c": result["c"], "block_count": result["blocks"]}
        if job.name == "presented":
            scalar["presented"] = result
    assertions = [
        {k: entry[k] for k in ("context", "name", "expected", "actual", "passed", "details")}
        for entry in check_logger.checks
    ]
    return Report(
        input={"command": command or f"verify-paper --qmax {qmax}", "qmax": qmax, "threads": threads, "seed": seed},
        dims=dims,
        blocks={"errors": errors, "jobs": [f"{j.name}@{j.q}" for j in jobs]},
        scalar=scalar,
        assertions=assertions,
        timings=timer.as_dict(),
    )
