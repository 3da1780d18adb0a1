"""``wtab`` command line.

Exit codes: 0 success, 1 the requested result is undefined, 2 bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Optional, Sequence

from . import perms, sgnperm
from .enumerate import EnumerationCapError, enumerate_stables, enumerate_tables
from .frames import Frame, FrameError, SFrame, pyramid, symmetric_pyramid
from .io import InputError, dumps, from_json, load_json, load_stable, load_table, to_json
from .render import render
from .rs import rs_class, rs_tableau
from .stables import (
    UndefinedError,
    c_central,
    component_orbit,
    is_fd_evenmult,
    iso_evenmult,
    restricted_weyl_data,
    sharp_element,
    wstar_act,
)
from .swaps import fd_report, iso_typeA, star_act, swap_adjacent

EXIT_OK, EXIT_UNDEFINED, EXIT_INVALID = 0, 1, 2


class Undefined(Exception):
    pass


def _emit(args, value: Any, extra: Optional[dict] = None) -> None:
    if args.format == "json":
        payload = {"result": to_json(value)}
        if extra:
            payload.update(extra)
        print(json.dumps(payload, sort_keys=True, separators=(",", ":"), ensure_ascii=False))
        return
    if isinstance(value, (bool, str, int)) or value is None:
        print(str(value).lower() if isinstance(value, bool) else value)
    else:
        try:
            print(render(value))
        except TypeError:
            print(value)
    for key, val in (extra or {}).items():
        print(f"{key}: {val}")


def _defined(value):
    if value is None:
        raise Undefined()
    return value


def _perm(text: str, m: int) -> tuple[int, ...]:
    try:
        return perms.parse_cycles(text, m)
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def _sperm(text: str, m: int) -> sgnperm.SignedPerm:
    try:
        return sgnperm.parse_signed_perm(text, m)
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def _split_label(text: str) -> tuple[str, str]:
    """``"σ,B"``: split after the last ')' if there is one, else at the first comma."""
    close = text.rfind(")")
    cut = text.find(",", close + 1) if close >= 0 else text.find(",")
    if cut < 0:
        raise InputError(f"expected 'sigma,table', got {text!r}")
    return text[:cut].strip(), text[cut + 1 :].strip()


def _parts(text: str) -> list[int]:
    try:
        obj = json.loads(text) if text.strip().startswith("[") else [int(t) for t in text.split(",") if t.strip()]
    except (ValueError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read partition {text!r}") from exc
    if not isinstance(obj, list) or not all(isinstance(x, int) for x in obj):
        raise InputError(f"cannot read partition {text!r}")
    return obj


def _phi_for(args) -> Optional[str]:
    if getattr(args, "phi", None):
        return args.phi
    kind = getattr(args, "type", "A")
    return {"C": "-", "D": "+"}.get(kind)


# ---------------------------------------------------------------- commands


def cmd_validate(args):
    obj = load_json(args.input)
    value = from_json(obj)
    _emit(args, value)


def cmd_rs(args):
    if args.word is not None:
        word = load_json(args.word)
        if not isinstance(word, list):
            raise InputError("--word must be a JSON list")
        tab = rs_tableau([from_json(x) for x in word])
    else:
        tab = rs_class(load_table(args.table))
    _emit(args, tab, {"shape": list(tab.shape)})


def cmd_swap(args):
    table = load_table(args.table)
    try:
        out = swap_adjacent(table, args.k)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    _emit(args, _defined(out))


def cmd_star(args):
    table = load_table(args.table)
    _emit(args, _defined(star_act(_perm(args.perm, table.m), table)))


def cmd_fd(args):
    phi = _phi_for(args)
    if phi is None:
        table = load_table(args.table)
        sigma = _perm(args.sigma, table.m)
        report = fd_report(table, sigma)
        _emit(args, report.fd, {"rs_shape": list(report.rs_shape), "partition": list(report.partition)})
    else:
        args.phi = phi
        cmd_sfd(args)


def cmd_sfd(args):
    st = load_stable(args.table, args.phi)
    sigma = _sperm(args.sigma, st.m)
    _emit(args, is_fd_evenmult(st, sigma))


def cmd_iso(args):
    phi = _phi_for(args)
    (s1, t1), (s2, t2) = _split_label(args.a), _split_label(args.b)
    if phi is None:
        b1, b2 = load_table(t1), load_table(t2)
        _emit(args, iso_typeA(_perm(s1, b1.m), b1, _perm(s2, b2.m), b2))
    else:
        b1, b2 = load_stable(t1, phi), load_stable(t2, phi)
        _emit(args, iso_evenmult(_sperm(s1, b1.m), b1, _sperm(s2, b2.m), b2))


def cmd_sharp(args):
    xs = load_json(args.list)
    if not isinstance(xs, list):
        raise InputError("--list must be a JSON list")
    _emit(args, _defined(sharp_element([from_json(x) for x in xs])))


def cmd_orbit(args):
    st = load_stable(args.table, args.phi)
    orbit = component_orbit(st)
    if args.format == "json":
        _emit(args, orbit)
    else:
        print("\n\n".join(render(b) for b in orbit))
        print(f"size: {len(orbit)}")


def cmd_c(args):
    st = load_stable(args.table, args.phi)
    try:
        _emit(args, c_central(st))
    except UndefinedError:
        raise Undefined()


def cmd_wstar(args):
    st = load_stable(args.table, args.phi)
    _emit(args, _defined(wstar_act(_sperm(args.w, st.m), st)))


def cmd_enumerate(args):
    alphabet = [from_json(x) for x in load_json(args.alphabet)]
    if args.phi:
        sframe = (
            symmetric_pyramid(_parts(args.partition))
            if args.partition
            else from_json(load_json(args.frame))
        )
        if not isinstance(sframe, SFrame):
            raise InputError("an s-table enumeration needs an sframe")
        items = enumerate_stables(sframe, alphabet, args.phi, sorted_only=True, fd=args.fd)
    else:
        frame = pyramid(_parts(args.partition)) if args.partition else from_json(load_json(args.frame))
        if not isinstance(frame, Frame):
            raise InputError("a table enumeration needs a frame")
        items = enumerate_tables(
            frame, alphabet, row_classes=args.classes, fd=args.fd, single_coset=args.single_coset
        )
    count = 0
    for item in items:
        count += 1
        if not args.count:
            if args.format == "json":
                print(dumps(item))
            else:
                print(render(item) + "\n")
    if args.count or args.format != "json":
        print(count if args.count else f"count: {count}")


def cmd_render(args):
    print(render(from_json(load_json(args.input))))


def cmd_weyl(args):
    data = restricted_weyl_data(_parts(args.partition), args.phi)
    result = {
        "partition": list(data.partition),
        "phi": "+" if data.phi == 1 else "-",
        "multiplicities": [list(x) for x in data.multiplicities],
        "factor_types": list(data.factor_types),
        "d": data.d,
        "generators": [{"index": i, "part": p, "row": r} for i, p, r in data.generators],
        "rules": [list(r) for r in data.rules],
    }
    if args.format == "json":
        print(json.dumps({"result": result}, sort_keys=True, separators=(",", ":")))
    else:
        for key in ("partition", "phi", "multiplicities", "factor_types", "d", "generators", "rules"):
            print(f"{key}: {result[key]}")


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="wtab", description=__doc__.splitlines()[0])
    parser.add_argument("--format", choices=["ascii", "json"], default="ascii")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--format", choices=["ascii", "json"], default=argparse.SUPPRESS)
        p.set_defaults(func=func)
        return p

    p = add("validate", cmd_validate, "check a frame, s-frame, table or s-table")
    p.add_argument("input", help="inline JSON or a file path")

    p = add("rs", cmd_rs, "Robinson-Schensted tableau of a word or table")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--word")
    g.add_argument("--table")

    p = add("swap", cmd_swap, "row swap s_k on rows k, k+1")
    p.add_argument("--table", required=True)
    p.add_argument("--k", type=int, required=True)

    p = add("star", cmd_star, "star action of a permutation")
    p.add_argument("--table", required=True)
    p.add_argument("--perm", required=True, help='cycle notation, e.g. "(1 2 3)"')

    p = add("fd", cmd_fd, "finite dimensionality of a label")
    p.add_argument("--type", choices=["A", "C", "D"], default="A")
    p.add_argument("--table", required=True)
    p.add_argument("--sigma", default="id")
    p.add_argument("--phi", choices=["+", "-"])

    p = add("iso", cmd_iso, "isomorphism of two labels")
    p.add_argument("--type", choices=["A", "C", "D"], default="A")
    p.add_argument("--a", required=True, help="sigma,TABLE")
    p.add_argument("--b", required=True, help="sigma',TABLE'")
    p.add_argument("--phi", choices=["+", "-"])

    p = add("sharp", cmd_sharp, "sharp element of a list")
    p.add_argument("--list", required=True)

    for name, func, text in (
        ("orbit", cmd_orbit, "component-group orbit of an s-table"),
        ("c", cmd_c, "the central component-group operator"),
    ):
        p = add(name, func, text)
        p.add_argument("--table", required=True)
        p.add_argument("--phi", choices=["+", "-"])

    p = add("wstar", cmd_wstar, "star action of a signed permutation")
    p.add_argument("--table", required=True)
    p.add_argument("--w", required=True, help='word "r s1 r" or cycles "(1 -2)(2 -1)"')
    p.add_argument("--phi", choices=["+", "-"])

    p = add("sfd", cmd_sfd, "finite dimensionality of an s-table label")
    p.add_argument("--table", required=True)
    p.add_argument("--sigma", default="id")
    p.add_argument("--phi", choices=["+", "-"])

    p = add("enumerate", cmd_enumerate, "list tables on a pyramid or s-tables on a symmetric pyramid")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--partition", help='e.g. "2,1" or "[3,3,2,2]"')
    src.add_argument("--frame", help="frame or sframe JSON")
    p.add_argument("--alphabet", required=True, help='JSON list, e.g. "[0,1,2]"')
    p.add_argument("--phi", choices=["+", "-"], help="enumerate s-tables (sTab<= only)")
    p.add_argument("--classes", action="store_true", help="row classes instead of fillings")
    p.add_argument("--fd", action="store_true", help="keep finite-dimensional labels only")
    p.add_argument("--single-coset", action="store_true")
    p.add_argument("--count", action="store_true", help="print only the number of results")

    p = add("render", cmd_render, "draw a frame or table as ASCII boxes")
    p.add_argument("input")

    p = add("weyl", cmd_weyl, "restricted Weyl group data of an even-multiplicity partition")
    p.add_argument("--partition", required=True)
    p.add_argument("--phi", choices=["+", "-"], required=True)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INVALID if exc.code else EXIT_OK
    try:
        args.func(args)
    except Undefined:
        if args.format == "json":
            print(json.dumps({"result": None, "undefined": True}, sort_keys=True, separators=(",", ":")))
        else:
            print("undefined")
        return EXIT_UNDEFINED
    except (InputError, FrameError, EnumerationCapError, ValueError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
