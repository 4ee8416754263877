"""Command-line interface over JSON state files.

A state file describes one Gaussian state:

    {
      "modes": 1,
      "mean": [[0.5, -0.3]],            # one [re, im] pair per mode
      "covariance": [[...], ...],       # real 2n x 2n, (x..., y...) ordering
      "label": "optional display name"
    }

Exit codes: 0 for success with a finite result, 2 when a divergence is
infinite, 1 for any error (parse failure, invalid state, refused request).
Values are reported in nats unless ``--bits`` is given; infinities are
encoded as the JSON string "inf".
"""

from __future__ import annotations

import argparse
import hashlib
import json
import math
import sys

import numpy as np

from . import entropy as ent
from . import fock
from .states import GaussianState, standard_form
from .symplectic import (
    DEFAULT_TOL,
    NumericalError,
    symplectic_form,
    williamson,
)

#: Default comparison tolerance for ``verify``.
VERIFY_TOL = 1e-5

#: Tolerance for the identity between the four-term Petz-Renyi sum and the
#: trace-power overlap (two code paths over the same inputs).
IDENTITY_TOL = 1e-10

_LN2 = math.log(2)


class CommandError(Exception):
    """A user-facing CLI failure (bad file, refused request, mismatch)."""


# ---------------------------------------------------------------------------
# state files


def _parse_state_file(path: str) -> tuple[np.ndarray, np.ndarray, str, str]:
    """Read and shape-check a state file without enforcing validity.

    Returns:
        (mean, covariance, label, digest) with the digest taken over the raw
        file bytes.
    """
    try:
        with open(path, "rb") as fh:
            raw = fh.read()
    except OSError as exc:
        raise CommandError(f"cannot read state file {path}: {exc}") from exc
    digest = hashlib.sha256(raw).hexdigest()[:16]
    try:
        doc = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise CommandError(f"{path}: not valid JSON ({exc})") from exc
    if not isinstance(doc, dict):
        raise CommandError(f"{path}: expected a JSON object at top level")
    for key in ("modes", "mean", "covariance"):
        if key not in doc:
            raise CommandError(f"{path}: missing required field '{key}'")
    nmodes = doc["modes"]
    if not isinstance(nmodes, int) or nmodes < 1:
        raise CommandError(f"{path}: 'modes' must be a positive integer")
    mean_raw = doc["mean"]
    if (
        not isinstance(mean_raw, list)
        or len(mean_raw) != nmodes
        or not all(isinstance(p, list) and len(p) == 2 for p in mean_raw)
    ):
        raise CommandError(
            f"{path}: 'mean' must be a list of {nmodes} [re, im] pairs"
        )
    try:
        mean = np.array([complex(p[0], p[1]) for p in mean_raw])
    except TypeError as exc:
        raise CommandError(f"{path}: non-numeric entry in 'mean'") from exc
    cov_raw = doc["covariance"]
    try:
        cov = np.array(cov_raw, dtype=float)
    except (TypeError, ValueError) as exc:
        raise CommandError(f"{path}: non-numeric entry in 'covariance'") from exc
    if cov.shape != (2 * nmodes, 2 * nmodes):
        raise CommandError(
            f"{path}: 'covariance' must be {2 * nmodes} x {2 * nmodes}, "
            f"got shape {cov.shape}"
        )
    label = doc.get("label", path)
    if not isinstance(label, str):
        raise CommandError(f"{path}: 'label' must be a string")
    return mean, cov, label, digest


def load_state_file(path: str) -> tuple[GaussianState, str, str]:
    """Parse a state file and construct the validated state.

    Returns:
        (state, label, digest).

    Raises:
        CommandError: naming the violated requirement (parse error, shape
            mismatch, asymmetry, uncertainty violation).
    """
    mean, cov, label, digest = _parse_state_file(path)
    try:
        state = GaussianState(mean=mean, cov=cov)
    except ValueError as exc:
        raise CommandError(f"{path}: {exc}") from exc
    return state, label, digest


# ---------------------------------------------------------------------------
# output helpers


def _jsonable(x):
    """Convert a result tree to JSON-safe types; infinities become 'inf'."""
    if isinstance(x, dict):
        return {k: _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, np.ndarray):
        return _jsonable(x.tolist())
    if isinstance(x, complex):
        return [x.real, x.imag]
    if isinstance(x, (np.floating, float)):
        f = float(x)
        if math.isinf(f):
            return "inf" if f > 0 else "-inf"
        return f
    if isinstance(x, (np.integer,)):
        return int(x)
    return x


def _emit(record: dict, args, human_lines: list[str]) -> None:
    if getattr(args, "json", False):
        print(json.dumps(_jsonable(record), indent=2, sort_keys=True))
    else:
        for line in human_lines:
            print(line)


def _fmt(v: float) -> str:
    if math.isinf(v):
        return "inf" if v > 0 else "-inf"
    return f"{v:.12g}"


def _scale(v: float, bits: bool) -> float:
    return v / _LN2 if bits and math.isfinite(v) else v


def _units(bits: bool) -> str:
    return "bits" if bits else "nats"


# ---------------------------------------------------------------------------
# commands


def cmd_validate(args) -> int:
    mean, cov, label, digest = _parse_state_file(args.state)
    tol = args.tol
    n = cov.shape[0] // 2
    symmetric = bool(np.abs(cov - cov.T).max() <= tol)
    finite = bool(np.all(np.isfinite(cov)) and np.all(np.isfinite(mean.view(float))))
    sym_cov = (cov + cov.T) / 2
    if finite:
        J = symplectic_form(n)
        min_eig = float(np.linalg.eigvalsh(sym_cov + 0.5j * J)[0])
    else:
        min_eig = math.nan
    valid = symmetric and finite and min_eig >= -tol
    record = {
        "command": "validate",
        "file": args.state,
        "digest": digest,
        "label": label,
        "modes": n,
        "finite": finite,
        "symmetric": symmetric,
        "uncertainty_eigenvalue": min_eig,
        "tolerance": tol,
        "valid": valid,
    }
    _emit(
        record,
        args,
        [
            f"state: {label} ({args.state})",
            f"modes: {n}",
            f"symmetric: {'yes' if symmetric else 'NO'}",
            f"finite entries: {'yes' if finite else 'NO'}",
            f"min eigenvalue of C + (i/2)J: {_fmt(min_eig)}",
            f"valid covariance: {'yes' if valid else 'NO'}",
        ],
    )
    return 0 if valid else 1


def cmd_williamson(args) -> int:
    state, label, digest = load_state_file(args.state)
    form = williamson(state.cov)
    J = symplectic_form(state.n)
    res_sympl = float(np.abs(form.L.T @ J @ form.L - J).max())
    res_recon = float(np.abs(form.L.T @ form.diagonal() @ form.L - state.cov).max())
    record = {
        "command": "williamson",
        "file": args.state,
        "digest": digest,
        "label": label,
        "modes": state.n,
        "symplectic_eigenvalues": form.nu,
        "L": form.L,
        "residual_symplectic": res_sympl,
        "residual_reconstruction": res_recon,
    }
    lines = [
        f"state: {label} ({args.state})",
        "symplectic eigenvalues (descending): "
        + ", ".join(_fmt(v) for v in form.nu),
        f"residual |L^T J L - J|: {res_sympl:.3e}",
        f"residual |L^T D L - C|: {res_recon:.3e}",
        "L:",
    ]
    lines += ["  " + "  ".join(f"{v: .9f}" for v in row) for row in form.L]
    _emit(record, args, lines)
    return 0


def cmd_standard_form(args) -> int:
    state, label, digest = load_state_file(args.state)
    sf = standard_form(state)
    record = {
        "command": "standard-form",
        "file": args.state,
        "digest": digest,
        "label": label,
        "modes": state.n,
        "displacement": list(sf.displacement),
        "s": sf.s,
        "L": sf.L,
    }
    lines = [
        f"state: {label} ({args.state})",
        "thermal parameters s (ascending, inf = pure): "
        + ", ".join(_fmt(v) for v in sf.s),
        "displacement: "
        + ", ".join(f"{z.real:.9g}{z.imag:+.9g}j" for z in sf.displacement),
        "L:",
    ]
    lines += ["  " + "  ".join(f"{v: .9f}" for v in row) for row in sf.L]
    _emit(record, args, lines)
    return 0


def cmd_vn_entropy(args) -> int:
    state, label, digest = load_state_file(args.state)
    value = ent.von_neumann_entropy(state)
    shown = _scale(value, args.bits)
    record = {
        "command": "vn-entropy",
        "file": args.state,
        "digest": digest,
        "label": label,
        "modes": state.n,
        "value": shown,
        "units": _units(args.bits),
    }
    _emit(
        record,
        args,
        [
            f"state: {label} ({args.state})",
            f"von Neumann entropy: {_fmt(shown)} {_units(args.bits)}",
        ],
    )
    return 0


def _load_pair(args) -> tuple[GaussianState, GaussianState, dict]:
    rho, rho_label, rho_digest = load_state_file(args.rho)
    sigma, sigma_label, sigma_digest = load_state_file(args.sigma)
    if rho.n != sigma.n:
        raise CommandError(
            f"mode count mismatch: {args.rho} has {rho.n}, {args.sigma} has {sigma.n}"
        )
    meta = {
        "rho": {"file": args.rho, "digest": rho_digest, "label": rho_label},
        "sigma": {"file": args.sigma, "digest": sigma_digest, "label": sigma_label},
    }
    return rho, sigma, meta


def cmd_rel_entropy(args) -> int:
    rho, sigma, meta = _load_pair(args)
    result = ent.relative_entropy(rho, sigma)
    bits = args.bits
    record = {
        "command": "rel-entropy",
        "inputs": meta,
        "modes": rho.n,
        "value": _scale(result.value, bits),
        "classical_part": _scale(result.classical_part, bits),
        "quantum_part": _scale(result.quantum_part, bits),
        "per_mode": [
            [_scale(c, bits), _scale(q, bits)] for c, q in result.per_mode_terms
        ],
        "units": _units(bits),
    }
    lines = [
        f"rho:   {meta['rho']['label']} ({args.rho})",
        f"sigma: {meta['sigma']['label']} ({args.sigma})",
        f"relative entropy: {_fmt(_scale(result.value, bits))} {_units(bits)}",
        f"  classical part: {_fmt(_scale(result.classical_part, bits))}",
        f"  quantum part:   {_fmt(_scale(result.quantum_part, bits))}",
    ]
    for k, (c, q) in enumerate(result.per_mode_terms):
        lines.append(
            f"  mode {k}: classical {_fmt(_scale(c, bits))}, "
            f"quantum {_fmt(_scale(q, bits))}"
        )
    _emit(record, args, lines)
    return 2 if math.isinf(result.value) else 0


def _parse_sweep(text: str) -> list[float]:
    parts = text.split(":")
    if len(parts) != 3:
        raise CommandError("--sweep expects START:STOP:STEPS, e.g. 0.1:0.9:9")
    try:
        start, stop = float(parts[0]), float(parts[1])
        steps = int(parts[2])
    except ValueError as exc:
        raise CommandError(f"bad --sweep value: {exc}") from exc
    if steps < 1:
        raise CommandError("--sweep needs at least one step")
    alphas = [float(a) for a in np.linspace(start, stop, steps)]
    for a in alphas:
        if not 0 < a < 1:
            raise CommandError(f"sweep alpha {a} outside (0, 1)")
    return alphas


def cmd_petz_renyi(args) -> int:
    rho, sigma, meta = _load_pair(args)
    bits = args.bits
    if args.sweep:
        alphas = _parse_sweep(args.sweep)
        rows = []
        for a in alphas:
            res = ent.petz_renyi(rho, sigma, a)
            rows.append({"alpha": a, "value": _scale(res.value, bits)})
        record = {
            "command": "petz-renyi",
            "inputs": meta,
            "modes": rho.n,
            "sweep": rows,
            "units": _units(bits),
        }
        lines = [
            f"rho:   {meta['rho']['label']} ({args.rho})",
            f"sigma: {meta['sigma']['label']} ({args.sigma})",
            f"{'alpha':>8}  value ({_units(bits)})",
        ]
        lines += [f"{r['alpha']:>8.4f}  {_fmt(r['value'])}" for r in rows]
        _emit(record, args, lines)
        return 0
    res = ent.petz_renyi(rho, sigma, args.alpha)
    record = {
        "command": "petz-renyi",
        "inputs": meta,
        "modes": rho.n,
        "alpha": args.alpha,
        "value": _scale(res.value, bits),
        "terms": [_scale(t, bits) for t in res.terms],
        "units": _units(bits),
    }
    lines = [
        f"rho:   {meta['rho']['label']} ({args.rho})",
        f"sigma: {meta['sigma']['label']} ({args.sigma})",
        f"Petz-Renyi entropy (alpha={args.alpha:g}): "
        f"{_fmt(_scale(res.value, bits))} {_units(bits)}",
        "  terms (rho spectral, sigma spectral, mean, determinant): "
        + ", ".join(_fmt(_scale(t, bits)) for t in res.terms),
    ]
    _emit(record, args, lines)
    return 0


# ---------------------------------------------------------------------------
# verify: closed forms against the oracle


def _one_mode_recipe_parts(mean_k: complex, cov2: np.ndarray):
    """Thermal parameter and steps reproducing a single-mode state."""
    det = float(np.linalg.det(cov2))
    nu = math.sqrt(det)
    s = float(np.log((nu + 0.5) / (nu - 0.5))) if nu > 0.5 + 1e-10 else math.inf
    shape = cov2 / nu
    lam, vec = np.linalg.eigh(shape)
    steps: list[fock.Generator] = []
    r = 0.5 * math.log(float(lam[1]))
    if r > 1e-9:
        v = vec[:, 1]
        phi = math.atan2(float(v[1]), float(v[0]))
        steps.append(fock.Squeeze(mode=0, r=r, phi=phi))
    if abs(mean_k) > 0:
        steps.append(fock.Displacement(mode=0, beta=-mean_k))
    return s, steps


def _build_recipe(state: GaussianState, name: str, dim: int) -> fock.OracleState:
    """Express a state file as an oracle recipe, or refuse with a reason."""
    n = state.n
    if n > 2:
        raise CommandError(
            f"{name}: verify supports 1 or 2 modes (the Fock oracle's "
            f"representable set); got {n} modes"
        )
    if n == 1:
        s, steps = _one_mode_recipe_parts(complex(state.mean[0]), state.cov)
        recipe = fock.OracleState(thermal=(s,), steps=tuple(steps), dim=dim)
    else:
        cross = state.cov[np.ix_([0, 2], [1, 3])]
        if np.abs(cross).max() > 1e-9:
            raise CommandError(
                f"{name}: modes are correlated (max cross-covariance "
                f"{np.abs(cross).max():.3e}); oracle recipes cover products of "
                "single-mode states only, so this input is refused"
            )
        thermal = []
        steps: list[fock.Generator] = []
        for k in range(2):
            idx = [k, k + 2]
            s, mode_steps = _one_mode_recipe_parts(
                complex(state.mean[k]), state.cov[np.ix_(idx, idx)]
            )
            thermal.append(s)
            for st in mode_steps:
                steps.append(
                    fock.Squeeze(mode=k, r=st.r, phi=st.phi)
                    if isinstance(st, fock.Squeeze)
                    else fock.Displacement(mode=k, beta=st.beta)
                )
        recipe = fock.OracleState(thermal=tuple(thermal), steps=tuple(steps), dim=dim)
    rebuilt = recipe.gaussian_state()
    err = max(
        float(np.abs(rebuilt.mean - state.mean).max()),
        float(np.abs(rebuilt.cov - state.cov).max()),
    )
    if err > 1e-8 * (1 + float(np.abs(state.cov).max())):
        raise NumericalError(
            f"{name}: recipe reconstruction residual {err:.3e} too large"
        )
    return recipe


def _check_row(name: str, closed: float, oracle: float, gap: float, tol: float):
    if math.isinf(closed) and math.isinf(oracle):
        diff = 0.0
    else:
        diff = abs(closed - oracle)
    ok = bool(diff <= tol and gap <= tol)
    return {
        "check": name,
        "closed": closed,
        "oracle": oracle,
        "diff": diff,
        "truncation_gap": gap,
        "tol": tol,
        "pass": ok,
    }


def cmd_verify(args) -> int:
    rho, sigma, meta = _load_pair(args)
    dim = args.truncation
    tol = args.tol
    try:
        alphas = [float(a) for a in args.alpha_list.split(",") if a.strip()]
    except ValueError as exc:
        raise CommandError(f"bad --alpha-list: {exc}") from exc
    for a in alphas:
        if not 0 < a < 1:
            raise CommandError(f"alpha {a} outside (0, 1)")

    rho_rec = _build_recipe(rho, "rho", dim)
    sigma_rec = _build_recipe(sigma, "sigma", dim)
    rows = []

    for name, state, rec in (("rho", rho, rho_rec), ("sigma", sigma, sigma_rec)):
        closed = ent.von_neumann_entropy(state)
        oracle = fock.oracle_von_neumann_entropy(rec)
        rows.append(_check_row(f"vn-entropy({name})", closed, oracle, 0.0, tol))

    closed_rel = ent.relative_entropy(rho, sigma).value
    oracle_rel, gap = fock.truncation_gated(rho_rec, sigma_rec)
    rows.append(_check_row("rel-entropy", closed_rel, oracle_rel, gap, tol))

    for a in alphas:
        res = ent.petz_renyi(rho, sigma, a)
        oracle_val, gap = fock.truncation_gated(rho_rec, sigma_rec, alpha=a)
        rows.append(_check_row(f"petz-renyi(alpha={a:g})", res.value, oracle_val, gap, tol))
        overlap = ent.trace_power_overlap(rho, sigma, a)
        ident = math.log(overlap) / (a - 1)
        rows.append(
            _check_row(
                f"petz-overlap-identity(alpha={a:g})",
                res.value,
                ident,
                0.0,
                IDENTITY_TOL,
            )
        )

    passed = all(r["pass"] for r in rows)
    record = {
        "command": "verify",
        "inputs": meta,
        "modes": rho.n,
        "truncation": dim,
        "tail_mass": {"rho": rho_rec.tail_mass(), "sigma": sigma_rec.tail_mass()},
        "checks": rows,
        "passed": passed,
    }
    lines = [
        f"rho:   {meta['rho']['label']} ({args.rho})",
        f"sigma: {meta['sigma']['label']} ({args.sigma})",
        f"cutoff {dim} (convergence gate at {2 * dim}); "
        f"tail mass rho {rho_rec.tail_mass():.2e}, sigma {sigma_rec.tail_mass():.2e}",
        f"{'check':<34}{'closed':>16}{'oracle':>16}{'|diff|':>11}{'gap':>11}  status",
    ]
    for r in rows:
        lines.append(
            f"{r['check']:<34}{_fmt(r['closed']):>16}{_fmt(r['oracle']):>16}"
            f"{r['diff']:>11.2e}{r['truncation_gap']:>11.2e}  "
            + ("PASS" if r["pass"] else "FAIL")
        )
    lines.append(
        f"result: {'PASS' if passed else 'FAIL'} "
        f"({sum(r['pass'] for r in rows)}/{len(rows)} checks)"
    )
    _emit(record, args, lines)
    return 0 if passed else 1


# ---------------------------------------------------------------------------
# argument parsing


def _add_state_arg(p: argparse.ArgumentParser) -> None:
    p.add_argument("state", help="path to a JSON state file")


def _add_pair_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("rho", help="path to the first state file")
    p.add_argument("sigma", help="path to the second state file")


def _add_json_flag(p: argparse.ArgumentParser) -> None:
    p.add_argument("--json", action="store_true", help="machine-readable output")


def _add_bits_flag(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "--bits", action="store_true", help="report values in bits instead of nats"
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gaussent",
        description="Entropies and divergences of Gaussian bosonic states.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a state file's covariance")
    _add_state_arg(p)
    _add_json_flag(p)
    p.add_argument(
        "--tol", type=float, default=DEFAULT_TOL, help="validity tolerance"
    )
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("williamson", help="Williamson normal form of a state")
    _add_state_arg(p)
    _add_json_flag(p)
    p.set_defaults(func=cmd_williamson)

    p = sub.add_parser(
        "standard-form", help="displaced rotated product-thermal decomposition"
    )
    _add_state_arg(p)
    _add_json_flag(p)
    p.set_defaults(func=cmd_standard_form)

    p = sub.add_parser("vn-entropy", help="von Neumann entropy of a state")
    _add_state_arg(p)
    _add_json_flag(p)
    _add_bits_flag(p)
    p.set_defaults(func=cmd_vn_entropy)

    p = sub.add_parser("rel-entropy", help="relative entropy between two states")
    _add_pair_args(p)
    _add_json_flag(p)
    _add_bits_flag(p)
    p.set_defaults(func=cmd_rel_entropy)

    p = sub.add_parser(
        "petz-renyi", help="Petz-Renyi relative entropy of order alpha in (0,1)"
    )
    _add_pair_args(p)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--alpha", type=float, help="a single order in (0, 1)")
    group.add_argument(
        "--sweep", help="sweep of orders as START:STOP:STEPS, e.g. 0.1:0.9:9"
    )
    _add_json_flag(p)
    _add_bits_flag(p)
    p.set_defaults(func=cmd_petz_renyi)

    p = sub.add_parser(
        "verify", help="cross-check the closed forms against the Fock oracle"
    )
    _add_pair_args(p)
    p.add_argument(
        "--truncation",
        type=int,
        default=fock.DEFAULT_DIM,
        help="Fock cutoff (the gate re-evaluates at twice this)",
    )
    p.add_argument(
        "--alpha-list",
        default="0.3,0.5,0.9",
        help="comma-separated Petz-Renyi orders to check",
    )
    p.add_argument(
        "--tol", type=float, default=VERIFY_TOL, help="comparison tolerance"
    )
    _add_json_flag(p)
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "petz-renyi" and args.alpha is not None:
        if not 0 < args.alpha < 1:
            print(
                f"error: alpha must lie strictly between 0 and 1, got {args.alpha}",
                file=sys.stderr,
            )
            return 1
    try:
        return args.func(args)
    except (CommandError, ValueError, NumericalError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
