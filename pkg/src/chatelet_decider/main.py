import argparse
import json
import logging
import sys
from itertools import combinations_with_replacement
from typing import Any, Sequence

from pydantic import ValidationError
from tqdm import tqdm

from chatelet_decider.chatelet.blocks import BlockStructure, block_sublattice_quotients
from chatelet_decider.delpezzo.conics import pairing_table
from chatelet_decider.delpezzo.descent import descent_exhaust
from chatelet_decider.delpezzo.fibers import fiber_infeasible
from chatelet_decider.domain.models import (
    Certificates,
    CohomologyReport,
    LatticeScenario,
    ProblemInput,
    SurfaceScenario,
)
from chatelet_decider.errors import InputError, LatticeError, PreconditionError, ResourceCapError
from chatelet_decider.lattice.cohomology import h1_via_dual, tate_h_minus1
from chatelet_decider.lattice.group import GLattice, close_group
from chatelet_decider.pipeline import storage
from chatelet_decider.pipeline.decider import decide, lattice_cohomology
from chatelet_decider.pipeline.problem import Problem
from chatelet_decider.settings.settings import AppSettings, parse_args
from chatelet_decider.surface.model import new_quadric
from chatelet_decider.surface.steps import (
    apply_steps,
    contraction_steps,
    resolution_steps,
    step_from_input,
)

log = logging.getLogger(__name__)


def _validated(model_cls, data: Any):
    try:
        return model_cls.model_validate(data)
    except ValidationError as e:
        raise InputError(f"Malformed {model_cls.__name__}: {e}") from e


def _parse_blocks(text: str) -> BlockStructure:
    try:
        degrees = [int(part) for part in text.split(",") if part.strip()]
    except ValueError as e:
        raise InputError(f"Not a list of block degrees: {text!r}") from e
    if not degrees or any(d < 1 for d in degrees):
        raise InputError(f"Block degrees must be positive: {text!r}")
    return BlockStructure.of(degrees)


def run_decide(args: argparse.Namespace, settings: AppSettings) -> dict:
    if args.json_in is not None:
        problem = Problem.from_input(_validated(ProblemInput, storage.read_json(args.json_in)))
    else:
        if args.a is None or args.poly is None:
            raise InputError("decide needs --a and --poly, or --json-in")
        problem = Problem.from_input(ProblemInput(a=args.a, poly=args.poly.split(",")))
    if args.cert is not None:
        certificates = _validated(Certificates, storage.read_json(args.cert))
        problem = Problem(problem.a, problem.poly, certificates)
    return decide(problem, settings).model_dump(mode="json")


def run_cohomology(args: argparse.Namespace, settings: AppSettings) -> dict:
    if args.blocks is not None:
        blocks = _parse_blocks(args.blocks)
        report = lattice_cohomology(blocks, cap=settings.group_cap)
        quotients = block_sublattice_quotients(blocks)
        return {
            "blocks": list(blocks.block_degrees),
            "invariants": report.model_dump(mode="json"),
            "sublattice_quotients": quotients.model_dump(mode="json"),
        }
    scenario = _validated(LatticeScenario, storage.read_json(args.json_in))
    group = close_group(scenario.generators, scenario.in_n, cap=settings.group_cap)
    lattice = GLattice(group)
    report = CohomologyReport(
        h1=h1_via_dual(lattice).divisors,
        h_minus1=tate_h_minus1(lattice).divisors,
        group_order=group.order,
        group_source="scenario",
    )
    return {"invariants": report.model_dump(mode="json")}


def run_surface(args: argparse.Namespace, settings: AppSettings) -> dict:
    if args.resolve is not None:
        steps = resolution_steps(args.resolve)
    elif args.contract is not None:
        steps = contraction_steps(args.contract)
    else:
        scenario = _validated(SurfaceScenario, storage.read_json(args.json_in))
        steps = [step_from_input(step) for step in scenario.steps]
    model, squares = apply_steps(new_quadric(), steps)
    return {
        "steps": [step.__class__.__name__ for step in steps],
        "canonical_squares": squares,
        "rank": model.rank,
        "model": model.model_dump(mode="json"),
    }


def run_delpezzo(args: argparse.Namespace, settings: AppSettings) -> dict:
    table = pairing_table(args.points)
    return {
        "points": args.points,
        "count": len(table),
        "classes": [str(g) for g, _ in table],
        "pairing": [[str(g), str(partner)] for g, partner in table],
    }


def run_descent(args: argparse.Namespace, settings: AppSettings) -> dict:
    summary = descent_exhaust(args.r, settings.descent_m0, settings.descent_depth_cap)
    return summary.model_dump(mode="json")


def run_fiber(args: argparse.Namespace, settings: AppSettings) -> dict:
    nu = settings.fiber_nu_bound
    return fiber_infeasible(
        args.r, settings.fiber_m_max, (-nu, nu), settings.fiber_len_max, progress=settings.progress
    ).model_dump(mode="json")


def _block_structures(max_r: int, max_blocks: int, max_degree: int) -> list[BlockStructure]:
    found = []
    for count in range(1, max_blocks + 1):
        for degrees in combinations_with_replacement(range(max_degree, 0, -1), count):
            if sum(degrees) <= max_r and sum(degrees) >= 2:
                found.append(BlockStructure.of(degrees))
    return found


def run_sweep(args: argparse.Namespace, settings: AppSettings) -> dict:
    rows = []
    structures = _block_structures(args.max_r, args.max_blocks, args.max_block_degree)
    with tqdm(
        total=len(structures),
        desc="Sweeping block structures",
        unit="case",
        dynamic_ncols=True,
        disable=not settings.progress,
    ) as pbar:
        for blocks in structures:
            pbar.set_postfix(blocks=str(blocks.block_degrees))
            try:
                report = lattice_cohomology(blocks, cap=settings.group_cap)
                rows.append(
                    {
                        "blocks": list(blocks.block_degrees),
                        "j": report.closed_form_j,
                        "h1": report.h1,
                        "group_order": report.group_order,
                    }
                )
            except ResourceCapError as e:
                rows.append({"blocks": list(blocks.block_degrees), "skipped": str(e)})
            pbar.update(1)
    return {"cases": len(rows), "rows": rows}


COMMANDS = {
    "decide": run_decide,
    "cohomology": run_cohomology,
    "surface": run_surface,
    "delpezzo": run_delpezzo,
    "descent": run_descent,
    "fiber": run_fiber,
    "sweep": run_sweep,
}


def _emit_error(kind: str, e: Exception) -> None:
    print(json.dumps({"error": kind, "message": str(e)}, ensure_ascii=False))


def run_cli(argv: Sequence[str] | None = None) -> int:
    try:
        settings, args = parse_args(argv)
    except InputError as e:
        _emit_error("input", e)
        return 2
    logging.basicConfig(level=logging.DEBUG if settings.debug else logging.INFO)
    log.debug(f"Running {args.command} with {settings.model_dump()}")

    try:
        result = COMMANDS[args.command](args, settings)
    except (InputError, PreconditionError) as e:
        log.error(f"Rejected input: {e}", exc_info=settings.debug)
        _emit_error("input", e)
        return 2
    except ResourceCapError as e:
        log.error(f"Resource cap reached: {e}", exc_info=settings.debug)
        _emit_error("resource", e)
        return 3
    except LatticeError:
        log.error("Internal invariant broken", exc_info=True)
        raise

    print(json.dumps(result, ensure_ascii=False, indent=2))
    if args.output is not None:
        storage.save(args.output, result)
    return 0


def main():
    sys.exit(run_cli(sys.argv[1:]))


if __name__ == "__main__":
    main()
