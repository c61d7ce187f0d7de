"""``ergolab`` command line.

Exit codes: 0 success, 1 validation error, 2 property failure, 3 I/O error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .daemonic import daemonic_ergotropy, selective_weak_work, super_ergotropy
from .ergotropy import ergotropy, qubit_hamiltonian
from .errors import ErgolabError
from .measurement import MINUS, PLUS, WeakMeasurement, computational_projectors
from .nonlocal_work import nonlocal_report
from .scenarios import (
    DEFAULT_TOLERANCE,
    FIG1_GRID,
    RATIO_GRID,
    THETA_GRID,
    ScenarioConfig,
    Sweep,
    run_fig1,
    run_fig2,
    run_fig3,
    run_fig4,
    run_verify,
    state_from_descriptor,
    to_csv,
)
from .states import NAMED_STATES, reduced_state

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_PROPERTY = 2
EXIT_IO = 3

SCENARIOS = ("fig1", "fig2", "fig3", "fig4", "ergotropy", "daemonic", "super", "nonlocal", "verify")


class PropertyFailure(Exception):
    pass


def build_parser():
    p = argparse.ArgumentParser(prog="ergolab", description=__doc__.splitlines()[0])
    p.add_argument("scenario", choices=SCENARIOS)
    src = p.add_mutually_exclusive_group()
    src.add_argument("--state", metavar="FILE", help="JSON state descriptor")
    src.add_argument("--name", choices=sorted(NAMED_STATES), help="named example state")
    p.add_argument("--energies", default="0,1", help="system levels e0,e1 (default 0,1)")
    p.add_argument("--sweep", action="append", default=[], metavar="VAR:START:STOP:COUNT")
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--out", metavar="FILE")
    p.add_argument("--count", type=int, default=1000)
    p.add_argument("--x", type=float, default=1.0, help="measurement strength for 'super'")
    p.add_argument("--c2", type=float, default=-0.5, help="fixed c2 for fig2")
    return p


def _parse_energies(text):
    try:
        e0, e1 = (float(v) for v in text.split(","))
    except ValueError as exc:
        raise ErgolabError(f"--energies expects 'e0,e1', got {text!r}") from exc
    return e0, e1


def _load_state_descriptor(args):
    if args.state:
        with open(args.state, encoding="utf-8") as fh:
            try:
                return json.load(fh)
            except json.JSONDecodeError as exc:
                raise ErgolabError(f"invalid JSON in {args.state}: {exc}") from exc
    if args.name:
        return {"kind": "example", "name": args.name}
    return None


def config_from_args(args):
    if args.count < 0:
        raise ErgolabError("--count must be non-negative")
    return ScenarioConfig(
        scenario=args.scenario,
        state=_load_state_descriptor(args),
        energies=_parse_energies(args.energies),
        sweeps=tuple(Sweep.parse(s) for s in args.sweep),
        seed=args.seed,
        output=args.out,
        count=args.count,
        x=args.x,
        c2=args.c2,
    )


def _tolerance():
    raw = os.environ.get("ERGOLAB_TOLERANCE")
    if raw is None:
        return DEFAULT_TOLERANCE
    try:
        return float(raw)
    except ValueError as exc:
        raise ErgolabError(f"ERGOLAB_TOLERANCE must be a number, got {raw!r}") from exc


def _state(cfg):
    desc = cfg.state if cfg.state is not None else {"kind": "example", "name": "third-mixture"}
    return state_from_descriptor(desc)


def _json(obj):
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _branches(report):
    return [
        {"label": b.label, "probability": b.probability, "final_energy": b.final_energy, "weight": w}
        for b, w in zip(report.branches, report.weights)
    ]


def run(cfg):
    """Execute a scenario and return its text output."""
    sc = cfg.scenario
    if sc == "fig1":
        return to_csv(*run_fig1(cfg.sweep("x", FIG1_GRID).grid(), cfg.energies))
    if sc == "fig2":
        return to_csv(*run_fig2(
            cfg.sweep("ratio1", RATIO_GRID).grid(), cfg.sweep("ratio3", RATIO_GRID).grid(), cfg.c2,
        ))
    if sc == "fig3":
        return to_csv(*run_fig3(cfg.sweep("theta", THETA_GRID).grid(), cfg.energies))
    if sc == "fig4":
        return to_csv(*run_fig4(cfg.sweep("theta", THETA_GRID).grid()))
    if sc == "verify":
        extra = (_state(cfg),) if cfg.state is not None else ()
        report = run_verify(cfg.seed, cfg.count, _tolerance(), cfg.energies, extra)
        text = "\n".join(report.lines()) + "\n"
        if not report.passed:
            raise PropertyFailure(text)
        return text

    h = qubit_hamiltonian(*cfg.energies)
    rho = _state(cfg)
    if sc == "ergotropy":
        if rho.dim == 2:
            res = ergotropy(rho, h)
            return _json({"work": res.work, "initial_energy": res.initial_energy,
                          "passive_energy": res.passive_energy})
        rep = nonlocal_report(rho, h)
        local = ergotropy(reduced_state(rho), h)
        return _json({"local_work": local.work, "total_work": rep.total_work})
    if sc == "daemonic":
        rep = daemonic_ergotropy(rho, h)
        return _json({"work": rep.work, "baseline_ergotropy": rep.baseline_ergotropy,
                      "gain": rep.work - rep.baseline_ergotropy, "branches": _branches(rep)})
    if sc == "super":
        proj = computational_projectors()
        w_d = daemonic_ergotropy(rho, h, proj).work
        sweep = cfg.sweep("x", None)
        if sweep is None:
            rep = super_ergotropy(rho, h, WeakMeasurement(cfg.x, proj))
            return _json({"x": cfg.x, "sign": rep.sign, "work": rep.work, "delta": rep.delta,
                          "daemonic": w_d, "branches": _branches(rep)})
        rows = []
        for x in sweep.grid():
            w = WeakMeasurement(x, proj)
            rep = super_ergotropy(rho, h, w)
            rows.append((float(x), selective_weak_work(rho, h, w, PLUS).work,
                         selective_weak_work(rho, h, w, MINUS).work, rep.work, rep.sign, w_d))
        return to_csv(("x", "W_plus", "W_minus", "W_super", "sign", "W_daemonic"), rows)
    if sc == "nonlocal":
        rep = nonlocal_report(rho, h)
        return _json(dict(vars(rep)))
    raise ErgolabError(f"unknown scenario {sc!r}")


def _emit(text, path):
    if path is None:
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        cfg = config_from_args(args)
        _emit(run(cfg), cfg.output)
    except PropertyFailure as exc:
        try:
            _emit(str(exc), args.out)
        except OSError:
            pass
        print("ergolab: property verification failed", file=sys.stderr)
        return EXIT_PROPERTY
    except OSError as exc:
        print(f"ergolab: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (ErgolabError, ValueError, KeyError, TypeError) as exc:
        print(f"ergolab: validation error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
