"""Batch command-line front end; JSON in, JSON out.

Every command reads exact scalars as "p/q" strings and prints one JSON
document to stdout (or --output).  Exit status: 0 on success or a passing
check, 1 when a verification command finds a violation, 2 on usage or
domain errors.  Identical flags and seed produce byte-identical output.

Structured arguments (--char, --block, ...) take either inline JSON or
@path to read a file.  QCHAR_THREADS, when set, caps internal parallelism;
all current computations are single-threaded, which respects any cap.
"""

import argparse
import json
import os
import random
import sys
from fractions import Fraction

from . import blocks, boundary, characters, jsonio, schur
from .combinatorics import Signature
from .schur import check_q


def _json_arg(text: str):
    if text.startswith("@"):
        with open(text[1:], encoding="utf-8") as fh:
            text = fh.read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"malformed JSON argument: {exc}") from None


def _q_arg(text: str):
    return check_q(jsonio.parse_scalar(text))


def _sig_arg(text: str) -> Signature:
    return jsonio.signature_from_json(_json_arg(text))


def _char_arg(text: str) -> characters.LevelCharacter:
    return jsonio.character_from_json(_json_arg(text))


def _block_arg(text: str) -> blocks.BlockElement:
    return jsonio.block_from_json(_json_arg(text))


def _points_arg(text: str) -> tuple:
    data = _json_arg(text)
    if not isinstance(data, list):
        raise ValueError("points are a JSON array of 'p/q' strings")
    return tuple(jsonio.parse_scalar(p) for p in data)


def _torus_arg(text: str) -> list[complex]:
    data = _json_arg(text)
    if not isinstance(data, list) or not all(
        isinstance(z, list)
        and len(z) == 2
        and all(isinstance(v, (int, float)) for v in z)
        for z in data
    ):
        raise ValueError("torus points are a JSON array of [re, im] pairs")
    return [complex(float(z[0]), float(z[1])) for z in data]


def _emit(payload, path: str | None) -> None:
    text = jsonio.dumps(payload)
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _cmd_qdim(args):
    value = schur.qdim(_sig_arg(args.sig), _q_arg(args.q))
    return 0, {"value": jsonio.format_scalar(value)}


def _cmd_schur_eval(args):
    value = schur.schur_eval(_sig_arg(args.sig), _points_arg(args.points))
    return 0, {"value": jsonio.format_scalar(value)}


def _cmd_lr(args):
    coeffs = schur.lr_coefficients(_sig_arg(args.left), _sig_arg(args.right))
    terms = [
        {"sig": jsonio.signature_to_json(nu), "coeff": c}
        for nu, c in sorted(coeffs.items(), key=lambda kv: kv[0].parts)
    ]
    return 0, {"terms": terms}


def _cmd_cotransition(args):
    rows = characters.cotransition(_sig_arg(args.sig), _q_arg(args.q))
    return 0, {
        "rows": [
            {"sig": jsonio.signature_to_json(lam), "prob": jsonio.format_scalar(p)}
            for lam, p in rows.items()
        ]
    }


def _cmd_restrict(args):
    chi = characters.restrict(_char_arg(args.char))
    return 0, jsonio.character_to_json(chi)


def _cmd_tensor(args):
    chi = characters.tensor(_char_arg(args.left), _char_arg(args.right))
    return 0, jsonio.character_to_json(chi)


def _cmd_sgf_eval(args):
    value = characters.sgf_eval(_char_arg(args.char), _points_arg(args.points))
    return 0, {"value": jsonio.format_scalar(value)}


def _cmd_sgf_torus(args):
    value = characters.sgf_eval_torus(
        _char_arg(args.char), _torus_arg(args.z), precision=args.precision
    )
    return 0, {
        "value": {"re": value.real, "im": value.imag},
        "abs": abs(value),
    }


def _cmd_coherent_check(args):
    family = jsonio.family_from_json(_json_arg(args.family))
    report = characters.is_coherent(family)
    violation = None
    if not report.ok:
        lower = family.measures[report.level - 1]
        pushed = characters.restrict(family.measures[report.level])
        violation = {
            "level": report.level,
            "sig": jsonio.signature_to_json(report.sig),
            "restricted_mass": jsonio.format_scalar(
                pushed.weights.get(report.sig, Fraction(0))
            ),
            "stored_mass": jsonio.format_scalar(
                lower.weights.get(report.sig, Fraction(0))
            ),
        }
    return (0 if report.ok else 1), {"pass": report.ok, "violation": violation}


def _cmd_extreme(args):
    approx = boundary.extreme_character(
        jsonio.theta_from_json(_json_arg(args.theta)),
        args.level,
        args.trunc,
        _q_arg(args.q),
    )
    return 0, jsonio.approximant_to_json(approx)


def _cmd_ak(args):
    if (args.theta is None) == (args.char is None):
        raise ValueError("pass exactly one of --theta or --char")
    if args.theta is not None:
        shifted = boundary.ak_on_theta(jsonio.theta_from_json(_json_arg(args.theta)), args.k)
        return 0, jsonio.theta_to_json(shifted)
    shifted = boundary.ak_on_measure(_char_arg(args.char), args.k)
    return 0, jsonio.character_to_json(shifted)


def _cmd_verify_corollary(args):
    report = boundary.verify_corollary(
        jsonio.theta_from_json(_json_arg(args.theta)),
        args.k,
        args.level,
        args.trunc,
        _q_arg(args.q),
    )
    payload = {
        "pass": report.ok,
        "lhs": jsonio.character_to_json(report.tensored),
        "rhs": jsonio.character_to_json(report.shifted),
        "gap": jsonio.format_scalar(report.gap),
        "discrepancy": (
            None
            if report.discrepancy is None
            else jsonio.signature_to_json(report.discrepancy)
        ),
    }
    return (0 if report.ok else 1), payload


def _cmd_kms_check(args):
    chi = _char_arg(args.state)
    if args.x is not None or args.y is not None:
        if args.x is None or args.y is None:
            raise ValueError("pass both --x and --y, or neither")
        x = _block_arg(args.x)
        y = _block_arg(args.y)
        lhs = blocks.char_state_eval(chi, x @ blocks.scaling(y, 1))
        rhs = blocks.char_state_eval(chi, y @ x)
        ok = lhs == rhs
        return (0 if ok else 1), {
            "pass": ok,
            "lhs": jsonio.format_scalar(lhs),
            "rhs": jsonio.format_scalar(rhs),
        }
    rng = random.Random(args.seed)
    sigs = chi.support()
    first_failure = None
    for trial in range(args.trials):
        x = blocks.random_block_element(chi.level, chi.q, sigs, rng)
        y = blocks.random_block_element(chi.level, chi.q, sigs, rng)
        if not blocks.kms_check(chi, x, y):
            first_failure = trial
            break
    ok = first_failure is None
    return (0 if ok else 1), {
        "pass": ok,
        "trials": args.trials,
        "first_failure": first_failure,
    }


def _cmd_f_compat(args):
    report = blocks.check_f_compatibility(_sig_arg(args.sig), _q_arg(args.q))
    violation = None
    if not report.ok:
        violation = {
            "sig": jsonio.signature_to_json(report.sig),
            "index": report.index,
        }
    return (0 if report.ok else 1), {"pass": report.ok, "violation": violation}


def _cmd_decompose(args):
    carrier = _block_arg(args.densities)
    report = blocks.decompose_state(carrier.blocks, carrier.q, tol=args.tolerance)
    if report.ok:
        coeffs = [
            {"sig": jsonio.signature_to_json(sig), "coeff": jsonio.format_scalar(c)}
            for sig, c in report.coefficients.items()
        ]
        return 0, {"accepted": True, "coefficients": coeffs}
    return 1, {"accepted": False, "reason": report.reason}


def _cmd_embed(args):
    x = _block_arg(args.block)
    raw = _json_arg(args.targets)
    if not isinstance(raw, list):
        raise ValueError("targets are a JSON array of signatures")
    targets = [jsonio.signature_from_json(t) for t in raw]
    return 0, jsonio.block_to_json(blocks.embed(x, targets))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qchar",
        description="Exact finite-level calculus of quantized characters.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, handler, help_text):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(handler=handler)
        p.add_argument("--output", help="write the JSON result to this path")
        return p

    p = add("qdim", _cmd_qdim, "quantum dimension of a signature")
    p.add_argument("--q", required=True)
    p.add_argument("--sig", required=True)

    p = add("schur-eval", _cmd_schur_eval, "exact Schur evaluation")
    p.add_argument("--sig", required=True)
    p.add_argument("--points", required=True)

    p = add("lr", _cmd_lr, "Littlewood-Richardson expansion of a product")
    p.add_argument("--left", required=True)
    p.add_argument("--right", required=True)

    p = add("cotransition", _cmd_cotransition, "stochastic cotransition row")
    p.add_argument("--q", required=True)
    p.add_argument("--sig", required=True)

    p = add("restrict", _cmd_restrict, "push a character one level down")
    p.add_argument("--char", required=True)

    p = add("tensor", _cmd_tensor, "tensor product of two characters")
    p.add_argument("--left", required=True)
    p.add_argument("--right", required=True)

    p = add("sgf-eval", _cmd_sgf_eval, "exact generating-function value")
    p.add_argument("--char", required=True)
    p.add_argument("--points", required=True)

    p = add("sgf-torus", _cmd_sgf_torus, "generating function on the torus")
    p.add_argument("--char", required=True)
    p.add_argument("--z", required=True, help="JSON array of [re, im] unit-modulus pairs")
    p.add_argument("--precision", type=float, default=1e-12)

    p = add("coherent-check", _cmd_coherent_check, "verify a coherent family")
    p.add_argument("--family", required=True)

    p = add("extreme", _cmd_extreme, "finite-level extreme-character approximant")
    p.add_argument("--q", required=True)
    p.add_argument("--theta", required=True)
    p.add_argument("--level", type=int, required=True)
    p.add_argument("--trunc", type=int, required=True)

    p = add("ak", _cmd_ak, "shift a boundary parameter or pushforward a measure")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--theta")
    p.add_argument("--char")

    p = add("verify-corollary", _cmd_verify_corollary, "determinant absorption check")
    p.add_argument("--q", required=True)
    p.add_argument("--theta", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--level", type=int, required=True)
    p.add_argument("--trunc", type=int, required=True)

    p = add("kms-check", _cmd_kms_check, "twisted-trace KMS identity check")
    p.add_argument("--state", required=True)
    p.add_argument("--x")
    p.add_argument("--y")
    p.add_argument("--trials", type=int, default=50)
    p.add_argument("--seed", type=int, default=0)

    p = add("f-compat", _cmd_f_compat, "F restriction versus cotransition power")
    p.add_argument("--q", required=True)
    p.add_argument("--sig", required=True)

    p = add("decompose", _cmd_decompose, "classify a blockwise density")
    p.add_argument("--densities", required=True, help="block-element JSON carrying the densities")
    p.add_argument("--tolerance", type=float, default=1e-10)

    p = add("embed", _cmd_embed, "embed a block element one level up")
    p.add_argument("--block", required=True)
    p.add_argument("--targets", required=True, help="JSON array of target signatures")

    return parser


def _check_thread_cap() -> None:
    cap = os.environ.get("QCHAR_THREADS")
    if cap is None:
        return
    try:
        value = int(cap)
    except ValueError:
        raise ValueError(f"QCHAR_THREADS must be a positive integer, got {cap!r}")
    if value < 1:
        raise ValueError(f"QCHAR_THREADS must be a positive integer, got {cap!r}")


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        _check_thread_cap()
        code, payload = args.handler(args)
    except (ValueError, OSError) as exc:
        _emit({"error": str(exc)}, None)
        return 2
    _emit(payload, args.output)
    return code


if __name__ == "__main__":
    sys.exit(main())
