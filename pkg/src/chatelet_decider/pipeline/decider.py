from __future__ import annotations

import logging

from chatelet_decider.chatelet.blocks import BlockStructure, h1_closed_form
from chatelet_decider.chatelet.picard import (
    RootGenerator,
    build_contracted_picard,
    build_resolved_picard,
    split_core_summand,
)
from chatelet_decider.delpezzo.conics import enumerate_conic_classes, pairing_table
from chatelet_decider.delpezzo.descent import descent_exhaust
from chatelet_decider.delpezzo.fibers import fiber_infeasible
from chatelet_decider.domain.models import (
    CohomologyReport,
    Criterion,
    ReasonStep,
    Status,
    Verdict,
    VerdictReport,
)
from chatelet_decider.errors import InputError, LatticeError, ResourceCapError
from chatelet_decider.lattice.cohomology import fixed_sublattice, h1_via_dual, tate_h_minus1
from chatelet_decider.pipeline.conditions import check_conditions
from chatelet_decider.pipeline.low_degree import decide_low_degree
from chatelet_decider.pipeline.problem import CanonicalProblem, Problem
from chatelet_decider.pipeline.reduction import reduce_problem
from chatelet_decider.settings.settings import AppSettings

log = logging.getLogger(__name__)


def _certificate_generators(
    problem: Problem, canonical: CanonicalProblem
) -> list[RootGenerator] | None:
    cert = problem.certificates.galois_group if problem.certificates else None
    if cert is None:
        return None
    if len(cert.generators) != len(cert.in_n):
        raise InputError("one N-flag per certificate generator required")
    base = canonical.odd_form or canonical
    if cert.degree != base.degree:
        raise InputError(
            f"certificate acts on {cert.degree} roots, canonical P has {base.degree}"
        )
    gens = []
    for images, flag in zip(cert.generators, cert.in_n):
        if sorted(images) != list(range(cert.degree)):
            raise InputError(f"not a permutation of {cert.degree} roots: {images}")
        gens.append((canonical.lift_root_action(images), flag))
    return gens


def lattice_cohomology(
    blocks: BlockStructure,
    generators: list[RootGenerator] | None = None,
    cap: int = 4096,
) -> CohomologyReport:
    """Cohomology of the core summand of the Picard lattice, checked against the closed form."""
    model = build_resolved_picard(blocks, generators, cap=cap)
    core, perm = split_core_summand(model)
    h_minus1 = tate_h_minus1(core.lattice)
    h1 = h1_via_dual(core.lattice)
    j = h1_closed_form(blocks)
    if h1.length != j or h_minus1.length != j or any(d != 2 for d in h1.divisors + h_minus1.divisors):
        raise LatticeError(
            f"closed form j={j} disagrees with lattice H^1={h1.divisors}, H^-1={h_minus1.divisors}"
        )
    if not tate_h_minus1(perm.lattice).is_trivial or not h1_via_dual(perm.lattice).is_trivial:
        raise LatticeError("permutation summand has nonzero cohomology")
    return CohomologyReport(
        h1=h1.divisors,
        h_minus1=h_minus1.divisors,
        closed_form_j=j,
        group_order=model.lattice.group.order,
        group_source=model.source,
    )


def _fiber_step(canonical: CanonicalProblem, settings: AppSettings) -> ReasonStep:
    r = canonical.degree
    nu = settings.fiber_nu_bound
    search = fiber_infeasible(
        r, settings.fiber_m_max, (-nu, nu), settings.fiber_len_max, progress=settings.progress
    )
    if not (search.infeasible and search.symbolic_infeasible):
        raise LatticeError(f"fiber class found for r = {r}: {search.witness}")
    return ReasonStep(
        step="no invariant curve class of the contracted model",
        criterion=Criterion.FIBER_INFEASIBILITY,
        primary=True,
        data={"r": r, "omega": 8 - r, "search": search.model_dump(mode="json")},
    )


def _descent_step(
    canonical: CanonicalProblem, generators: list[RootGenerator] | None, settings: AppSettings
) -> ReasonStep:
    r = canonical.degree
    blocks = canonical.blocks
    pic_y = build_contracted_picard(blocks, generators, cap=settings.group_cap)
    summary = descent_exhaust(r, settings.descent_m0, settings.descent_depth_cap)
    points = r + 1
    return ReasonStep(
        step="del Pezzo descent exhausts every invariant curve class",
        criterion=Criterion.DEL_PEZZO_DESCENT,
        primary=True,
        data={
            "r": r,
            "fixed_rank": len(fixed_sublattice(pic_y.lattice)),
            "descent": summary.model_dump(mode="json"),
            "conic_classes": len(enumerate_conic_classes(points)),
            "partner_pairs": len(pairing_table(points)),
        },
    )


def _decide(problem: Problem, settings: AppSettings) -> VerdictReport:
    backend = settings.create_backend()
    conditions = check_conditions(problem, backend)
    if conditions.cond1.status == Status.FAILS:
        return VerdictReport(
            verdict=Verdict.RATIONAL,
            reason_chain=[
                ReasonStep(
                    step="a is a rational square",
                    criterion=Criterion.SQUARE_COEFFICIENT,
                    primary=True,
                    data={"evidence": conditions.cond1.evidence},
                )
            ],
            conditions=conditions,
        )

    canonical, trace = reduce_problem(problem, backend)
    supporting = [
        ReasonStep(step=step.step, criterion=step.criterion, data=step.detail)
        for step in trace
    ]
    if canonical.degree <= 2:
        report = decide_low_degree(
            canonical.a, canonical.poly, settings.norm_bound, progress=settings.progress
        )
        return report.model_copy(
            update={
                "reason_chain": supporting + report.reason_chain,
                "conditions": conditions,
                "reduction_trace": trace,
                "canonical": canonical.summary(),
            }
        )

    generators = _certificate_generators(problem, canonical)
    blocks = canonical.blocks
    log.info(f"Computing lattice cohomology for blocks {blocks.block_degrees}")
    invariants = lattice_cohomology(blocks, generators, cap=settings.group_cap)
    notes = []
    if canonical.odd_form is not None:
        odd_j = h1_closed_form(canonical.odd_form.blocks)
        if odd_j != invariants.closed_form_j:
            raise LatticeError("evenization changed the closed-form invariant")
        notes.append(f"odd degree {canonical.odd_form.degree} evenized to {canonical.degree}")
    if generators is None:
        notes.append("model group used; no Galois group certificate supplied")
    if conditions.cond3.status != Status.HOLDS:
        notes.append(
            f"cond3 is {conditions.cond3.status.value}; the splitting-field branch "
            "also concludes NOT_RATIONAL"
        )

    if invariants.closed_form_j > 0:
        primary = ReasonStep(
            step="H^1 of the Picard lattice is nonzero",
            criterion=Criterion.COHOMOLOGY,
            primary=True,
            data={"h1": invariants.h1, "j": invariants.closed_form_j},
        )
    elif canonical.degree >= 8:
        primary = _fiber_step(canonical, settings)
    else:
        primary = _descent_step(canonical, generators, settings)

    return VerdictReport(
        verdict=Verdict.NOT_RATIONAL,
        reason_chain=supporting + [primary],
        conditions=conditions,
        invariants=invariants,
        reduction_trace=trace,
        canonical=canonical.summary(),
        notes=notes,
    )


def decide(problem: Problem, settings: AppSettings | None = None) -> VerdictReport:
    settings = settings or AppSettings()
    log.info(f"Deciding a={problem.a}, P={problem.poly}")
    try:
        report = _decide(problem, settings)
    except ResourceCapError as e:
        log.warning(f"Resource cap reached: {e}")
        report = VerdictReport(
            verdict=Verdict.UNDECIDED,
            notes=[f"{e.__class__.__name__}: {e}"],
        )
    report = report.model_copy(update={"problem": problem.summary()})
    log.info(f"Verdict: {report.verdict.value}")
    return report
