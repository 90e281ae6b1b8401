"""Command-line front end.

Four commands, selected with --command:

  report    witness, bounds, and three-route moments for one state (JSON)
  scatter   Monte Carlo sweep of (w, negativity, concurrence) rows (CSV)
  verify    internal consistency suites, one PASS/FAIL line each (text)
  simulate  finite-shot estimation with a bootstrap interval (JSON)

Exit codes: 0 success, 1 a verification suite or state validation failed,
2 usage or file I/O error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

import numpy as np

from . import states
from .collective import (
    COPY_COUNTS,
    moment_cycle,
    moment_via_observable,
    moments_collective,
    observable_spectrum,
    outcome_probabilities,
    parity_projector,
    projection_count,
    swap_layer,
    symmetrized_copies,
)
from .invariants import apply_local_unitary, decompose, makhlin, moments_via_invariants
from .linalg import hermitian_eig, partial_transpose, tensor_power
from .simulate import estimate, sample_shots
from .witness import (
    bounds,
    concurrence,
    moments_direct,
    negativity,
    rescaled_witness,
    witness_report,
    witness_value,
)

BOUND_SLACK = 1e-9


class UsageError(Exception):
    """Bad flags, bad state grammar, unreadable or malformed files (exit 2)."""


class CheckFailure(Exception):
    """A state failed validation or a verification check failed (exit 1)."""


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="uwitness",
        description="Two-qubit entanglement witness from partial-transpose moments.",
    )
    p.add_argument(
        "--command",
        required=True,
        choices=("report", "scatter", "verify", "simulate"),
        help="what to run",
    )
    p.add_argument(
        "--state",
        help="named state ('singlet', 'phi_plus', 'werner:0.5', 'product:0.7', "
        "'pure_schmidt:0.8') or path to a JSON state file",
    )
    p.add_argument("--ensemble", choices=("hs", "pure"), default="hs",
                   help="random ensemble for scatter/verify (default: hs)")
    p.add_argument("--samples", type=int, default=100,
                   help="number of random states (default: 100)")
    p.add_argument("--shots", type=int, help="total shot budget for simulate")
    p.add_argument("--seed", type=int,
                   help="base RNG seed; required for scatter and simulate")
    p.add_argument("--bootstrap", type=int, default=1000,
                   help="bootstrap resamples for simulate (default: 1000)")
    p.add_argument("--split", default="1,1,1",
                   help="relative shot weights for the n=2,3,4 moments (default: 1,1,1)")
    p.add_argument("--out", help="output path (default: stdout)")
    p.add_argument("--format", choices=("csv", "json"),
                   help="output format where a choice exists")
    return p


def _load_state(spec):
    """Resolve --state into (rho, label).  Named states and files are split by
    grammar: anything matching a known name (with optional :param) is named."""
    if spec is None:
        raise UsageError("--state is required for this command")
    head = spec.partition(":")[0].strip()
    if head in states.NAMED_STATES:
        try:
            return states.named_state(spec), spec
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    if not os.path.exists(spec):
        raise UsageError(f"state {spec!r} is neither a known name nor an existing file")
    try:
        raw = states.load_state(spec)
    except (OSError, ValueError, json.JSONDecodeError) as exc:
        raise UsageError(f"could not read state file {spec!r}: {exc}") from None
    try:
        return states.validate(raw), spec
    except ValueError as exc:
        raise CheckFailure(str(exc)) from None


def _require_seed(args) -> int:
    if args.seed is None:
        raise UsageError(f"--seed is required for {args.command} (no silent nondeterminism)")
    return args.seed


def _check_format(args, allowed, default):
    fmt = args.format or default
    if fmt not in allowed:
        raise UsageError(f"--format {fmt} is not supported by {args.command}")
    return fmt


def _sample_state(kind: str, seed: int, index: int) -> np.ndarray:
    # per-sample derived seed: independent of batch size, safe to parallelize
    rng = np.random.default_rng(seed + index)
    if kind == "pure":
        return states.random_pure_state(rng)
    return states.random_mixed_state(rng)


def _moment_triples(rho):
    m_direct = moments_direct(rho)
    m_coll = moments_collective(rho)
    m_inv = moments_via_invariants(rho)
    sets = (m_direct, m_coll, m_inv)
    dev = max(
        abs(a - b)
        for s1 in sets
        for s2 in sets
        for a, b in zip(s1.as_tuple(), s2.as_tuple())
    )
    return sets, dev


def cmd_report(args):
    rho, label = _load_state(args.state)
    _check_format(args, allowed=("json",), default="json")
    rep = witness_report(rho)
    (m_direct, m_coll, m_inv), dev = _moment_triples(rho)
    doc = {"state": label}
    doc.update(rep.as_dict())
    doc["moments"] = {
        m.source: {"pi2": m.pi2, "pi3": m.pi3, "pi4": m.pi4}
        for m in (m_direct, m_coll, m_inv)
    }
    doc["max_moment_deviation"] = dev
    return json.dumps(doc, indent=2) + "\n", 0


def cmd_scatter(args):
    seed = _require_seed(args)
    _check_format(args, allowed=("csv",), default="csv")
    if args.samples < 1:
        raise UsageError(f"--samples must be >= 1, got {args.samples}")
    lines = ["w,negativity,concurrence"]
    for i in range(args.samples):
        rho = _sample_state(args.ensemble, seed, i)
        w = min(1.0, rescaled_witness(witness_value(moments_direct(rho))))
        n = negativity(rho)
        c = concurrence(rho)
        lo, hi = bounds(w)
        ok = (lo - BOUND_SLACK <= n) and (n <= c + BOUND_SLACK) and (c <= hi + BOUND_SLACK)
        if not ok:
            raise CheckFailure(
                f"bound violation at sample {i} (seed {seed + i}): "
                f"f(w)={lo!r} N={n!r} C={c!r} w^(1/4)={hi!r} w={w!r}"
            )
        lines.append(f"{w!r},{n!r},{c!r}")
    return "\n".join(lines) + "\n", 0


def cmd_simulate(args) -> str:
    rho, label = _load_state(args.state)
    seed = _require_seed(args)
    _check_format(args, allowed=("json",), default="json")
    if args.shots is None or args.shots < 1:
        raise UsageError("--shots must be a positive total shot budget")
    if args.bootstrap < 1:
        raise UsageError(f"--bootstrap must be >= 1, got {args.bootstrap}")
    try:
        weights = [float(x) for x in args.split.split(",")]
    except ValueError:
        raise UsageError(f"could not parse --split {args.split!r}") from None
    if len(weights) != 3 or any(x <= 0 for x in weights):
        raise UsageError("--split needs three positive numbers, e.g. 1,1,2")

    # largest-remainder allocation so the per-moment shots sum to the budget
    raw = args.shots * np.asarray(weights) / sum(weights)
    alloc = np.floor(raw).astype(int)
    for k in np.argsort(raw - np.floor(raw))[::-1][: args.shots - alloc.sum()]:
        alloc[k] += 1
    if alloc.min() < 1:
        raise UsageError(f"shot budget {args.shots} with split {args.split} starves a moment")

    records = [
        sample_shots(rho, n, int(alloc[k]), seed + k)
        for k, n in enumerate(COPY_COUNTS)
    ]
    est = estimate(records, resamples=args.bootstrap, seed=seed + len(COPY_COUNTS))
    truth = witness_value(moments_direct(rho))
    doc = {
        "state": label,
        "seed": seed,
        "shots": args.shots,
        "split": weights,
        "counts": {str(r.n_copies): [int(c) for c in r.counts] for r in records},
        "estimate": est.as_dict(),
        "true_witness": truth,
        "ci_covers_truth": bool(est.ci_low <= truth <= est.ci_high),
    }
    return json.dumps(doc, indent=2) + "\n", 0


def _verify_suites(kind: str, samples: int, seed: int):
    """Yield (name, detail, passed) rows for the consistency suites."""
    sampler = states.StateSampler(kind, seed)
    batch = [sampler.sample() for _ in range(samples)]

    dev = 0.0
    for rho in batch:
        m = moments_direct(rho)
        for n, direct in zip(COPY_COUNTS, m.as_tuple()):
            probs = outcome_probabilities(rho, n)
            routes = [moment_cycle(rho, n), probs.moment]
            if n >= 3:
                routes.append(moment_via_observable(rho, n))
            dev = max(dev, max(abs(r - direct) for r in routes))
            dev = max(dev, abs(probs.as_vector().sum() - 1.0))
    yield ("moment routes agree (direct/cycle/observable/sequential)", f"max dev {dev:.2e}", dev < 1e-10)

    dev = 0.0
    for n in COPY_COUNTS:
        for stage in (1, 2):
            layer = swap_layer(n, stage)
            eye = np.eye(layer.shape[0])
            for sign in (1, -1):
                proj = parity_projector(n, stage, sign)
                dev = max(dev, np.abs(proj - (eye + sign * layer) / 2.0).max())
    yield ("pairwise-composed projectors equal (I +/- layer)/2", f"max dev {dev:.2e}", dev < 1e-12)

    s3, s4 = observable_spectrum(3), observable_spectrum(4)
    ok = s3 == (1.0, 4.0) and s4 == (0.0, 2.0, 4.0) and projection_count() == 7
    yield (
        "observable spectra and projection count",
        f"n=3 {list(s3)}, n=4 {list(s4)}, count {projection_count()}",
        ok,
    )

    dev = 0.0
    for rho in batch[: max(1, samples // 10)]:
        for n in COPY_COUNTS:
            rp = symmetrized_copies(rho, n)
            layer = swap_layer(n, 1)
            dev = max(dev, np.abs(layer @ rp - rp @ layer).max())
            rn = tensor_power(rho, n)
            for sign in (1, -1):
                proj = parity_projector(n, 1, sign)
                dev = max(dev, np.abs(proj @ rp @ proj - proj @ rn @ proj).max())
    yield ("stage-1 parity is nondemolition on the symmetrized stack", f"max dev {dev:.2e}", dev < 1e-12)

    dev = 0.0
    for rho in batch:
        m = moments_direct(rho)
        mi = moments_via_invariants(rho)
        dev = max(dev, max(abs(a - b) for a, b in zip(m.as_tuple(), mi.as_tuple())))
    yield ("invariant combinations reproduce the moments", f"max dev {dev:.2e}", dev < 1e-10)

    rng = np.random.default_rng(seed + 1)
    dev = 0.0
    for rho in batch[: max(1, samples // 20)]:
        base = makhlin(decompose(rho))
        for _ in range(10):
            rotated = apply_local_unitary(rho, states.haar_unitary(rng), states.haar_unitary(rng))
            inv = makhlin(decompose(rotated))
            dev = max(
                dev,
                max(abs(getattr(inv, f) - getattr(base, f)) for f in vars(inv)),
            )
    yield ("invariants unchanged under local unitaries", f"max dev {dev:.2e}", dev < 1e-9)

    dev = 0.0
    for rho in batch:
        det = float(np.prod(hermitian_eig(partial_transpose(rho))))
        dev = max(dev, abs(witness_value(moments_direct(rho)) - det))
    yield ("witness polynomial equals det of the partial transpose", f"max dev {dev:.2e}", dev < 1e-10)

    worst = 0.0
    ok = True
    for rho in batch:
        w = min(1.0, rescaled_witness(witness_value(moments_direct(rho))))
        n = negativity(rho)
        c = concurrence(rho)
        lo, hi = bounds(w)
        slack = max(lo - n, n - c, c - hi)
        worst = max(worst, slack)
        ok = ok and slack <= BOUND_SLACK
    yield ("bound corridor f(w) <= N <= C <= w^(1/4)", f"worst slack {worst:.2e}", ok)


def cmd_verify(args):
    if args.format is not None:
        raise UsageError("verify writes plain text; --format is not supported")
    if args.samples < 1:
        raise UsageError(f"--samples must be >= 1, got {args.samples}")
    seed = args.seed if args.seed is not None else 0
    lines = []
    all_ok = True
    for name, detail, ok in _verify_suites(args.ensemble, args.samples, seed):
        all_ok = all_ok and ok
        lines.append(f"{'PASS' if ok else 'FAIL'}  {name}: {detail}")
    lines.append(f"overall: {'PASS' if all_ok else 'FAIL'}")
    return "\n".join(lines) + "\n", 0 if all_ok else 1


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    handler = {
        "report": cmd_report,
        "scatter": cmd_scatter,
        "verify": cmd_verify,
        "simulate": cmd_simulate,
    }[args.command]
    try:
        text, code = handler(args)
    except UsageError as exc:
        print(f"uwitness: error: {exc}", file=sys.stderr)
        return 2
    except CheckFailure as exc:
        print(f"uwitness: {exc}", file=sys.stderr)
        return 1
    if args.out:
        try:
            with open(args.out, "w") as fh:
                fh.write(text)
        except OSError as exc:
            print(f"uwitness: error: could not write {args.out!r}: {exc}", file=sys.stderr)
            return 2
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
