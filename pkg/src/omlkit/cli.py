"""Command-line front end.

One verb per pipeline; lattice, poset and morphism files travel in the
canonical JSON formats, so verbs compose through pipes (`-` or no path
means stdin).  Usage errors exit 2, domain errors print to stderr and
exit 1, success is exit 0 with byte-deterministic output.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from . import fileio, selftest
from .errors import OmlkitError
from .functorial import classify_recovery
from .iso_lifting import lift_bsub_iso, lift_sub_iso, verify_determination
from .lattice_core import ORTHOMODULAR, catalog
from .reconstruction import build_frame, classify_atoms, reconstruct
from .sachs_boolean import (
    dual_decomposition,
    dual_order_test,
    partition_to_subalgebra,
    pd_order_test,
    principal_element,
    subalgebra_to_partition,
)
from .subalgebra_posets import enumerate_subalgebras


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _write(text: str, path: Optional[str]):
    if path and path != "-":
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _load_lattice(path: str):
    return fileio.parse_lattice(_read(path))


def _flavor_text(L) -> str:
    if L.flavor == ORTHOMODULAR:
        return "orthomodular"
    return "ortholattice (NOT orthomodular)"


def _add_poset_flags(p: argparse.ArgumentParser):
    p.add_argument("lattice", nargs="?", default="-", help="lattice file (default stdin)")
    p.add_argument("--dot", action="store_true", help="shorthand for --format dot")
    p.add_argument("--format", choices=("text", "dot"), default="text")
    p.add_argument("--threads", type=int, default=None, metavar="N",
                   help="fan closure work out over N threads")
    p.add_argument("-o", "--output", default=None)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="omlkit",
        description="finite ortholattice toolkit: subalgebra posets, "
                    "reconstruction, isomorphism lifting")
    verbs = parser.add_subparsers(dest="verb", required=True)

    p = verbs.add_parser("validate", help="validate a lattice file, report its flavor")
    p.add_argument("lattice", nargs="?", default="-")

    p = verbs.add_parser("catalog", help="emit a named catalog lattice")
    p.add_argument("name")
    p.add_argument("-o", "--output", default=None)

    _add_poset_flags(verbs.add_parser("sub", help="enumerate all subalgebras"))
    _add_poset_flags(verbs.add_parser("bsub", help="enumerate Boolean subalgebras"))

    p = verbs.add_parser("blocks", help="list the maximal Boolean subalgebras")
    p.add_argument("lattice", nargs="?", default="-")

    p = verbs.add_parser("reconstruct",
                         help="rebuild a lattice from a Boolean-subalgebra poset file")
    p.add_argument("poset", nargs="?", default="-")
    p.add_argument("--frame", action="store_true",
                   help="also print the intermediate orthogonality frame")
    p.add_argument("-o", "--output", default=None)

    for verb, blurb in (("lift-bsub", "lift a Boolean-subalgebra poset isomorphism"),
                        ("lift-sub", "lift a full subalgebra lattice isomorphism")):
        p = verbs.add_parser(verb, help=blurb)
        p.add_argument("source")
        p.add_argument("target")
        p.add_argument("iso", help="node map file: pairs of subalgebra element lists")
        group = p.add_mutually_exclusive_group()
        group.add_argument("--all", action="store_true", default=True,
                           help="emit every consistent lift (default)")
        group.add_argument("--canonical", action="store_true",
                           help="emit only the canonical lift")
        p.add_argument("-o", "--output", default=None)

    p = verbs.add_parser("check-sachs",
                         help="order tests vs direct definitions on a Boolean lattice")
    p.add_argument("lattice", nargs="?", default="-")

    p = verbs.add_parser("check-determination",
                         help="compare two lattices through their subalgebra posets")
    p.add_argument("source")
    p.add_argument("target")

    p = verbs.add_parser("classify-hom",
                         help="how much a homomorphism's preimage map determines it")
    p.add_argument("source")
    p.add_argument("target")
    p.add_argument("morphism")

    verbs.add_parser("selftest", help="run the full acceptance suite")
    return parser


def _cmd_validate(args) -> int:
    L = _load_lattice(args.lattice)
    if L.name:
        print(f"name: {L.name}")
    print(f"size: {L.n}")
    print(f"flavor: {_flavor_text(L)}")
    return 0


def _cmd_catalog(args) -> int:
    _write(fileio.dump_lattice(catalog(args.name)), args.output)
    return 0


def _cmd_enumerate(args, boolean_only: bool) -> int:
    L = _load_lattice(args.lattice)
    poset = enumerate_subalgebras(L, boolean_only=boolean_only, threads=args.threads)
    if args.dot or args.format == "dot":
        _write(fileio.poset_to_dot(poset), args.output)
    else:
        _write(fileio.dump_poset(poset), args.output)
    return 0


def _cmd_blocks(args) -> int:
    L = _load_lattice(args.lattice)
    for blk in L.blocks():
        print("{" + ",".join(str(e) for e in blk.elements) + "}")
    return 0


def _cmd_reconstruct(args) -> int:
    poset, _ = fileio.parse_poset(_read(args.poset))
    lines = []
    if args.frame:
        if poset.size > 1:
            u, v = classify_atoms(poset)
            lines.extend(fileio.frame_lines(build_frame(poset, u, v)))
        else:
            lines.append("frame: 0 points")
    out = reconstruct(poset)
    if lines:
        # the frame is informational; the output target gets a clean document
        print("\n".join(lines))
    _write(fileio.dump_lattice(out), args.output)
    return 0


def _cmd_lift(args, boolean_only: bool) -> int:
    L = _load_lattice(args.source)
    M = _load_lattice(args.target)
    sub_l = enumerate_subalgebras(L, boolean_only=boolean_only)
    sub_m = enumerate_subalgebras(M, boolean_only=boolean_only)
    phi = fileio.parse_node_map(_read(args.iso), sub_l, sub_m)
    lift = lift_bsub_iso if boolean_only else lift_sub_iso
    result = lift(L, M, phi, sub_l, sub_m, canonical_only=args.canonical)
    if args.canonical:
        _write(fileio.dump_morphism(result[0]), args.output)
    else:
        _write(fileio.dump_morphisms(result), args.output)
    return 0


def _cmd_check_sachs(args) -> int:
    L = _load_lattice(args.lattice)
    s = enumerate_subalgebras(L)
    dual_ok = pd_ok = 0
    for i, node in enumerate(s.nodes):
        if dual_order_test(s, i) == (dual_decomposition(L, node) is not None):
            dual_ok += 1
        if pd_order_test(s, i) == (principal_element(L, node) is not None):
            pd_ok += 1
    part_ok = 0
    for i, node in enumerate(s.nodes):
        p = subalgebra_to_partition(L, node)
        if partition_to_subalgebra(L, p).members == node.members:
            part_ok += 1
    n = s.size
    print(f"dual order test agrees: {dual_ok}/{n}")
    print(f"principal dual order test agrees: {pd_ok}/{n}")
    print(f"partition round trip: {part_ok}/{n}")
    return 0 if dual_ok == pd_ok == part_ok == n else 1


def _cmd_check_determination(args) -> int:
    report = verify_determination(_load_lattice(args.source), _load_lattice(args.target))
    for line in report.lines():
        print(line)
    return 0 if report.consistent else 1


def _cmd_classify_hom(args) -> int:
    L = _load_lattice(args.source)
    M = _load_lattice(args.target)
    f = fileio.parse_morphism(_read(args.morphism), L, M)
    for line in classify_recovery(f).lines():
        print(line)
    return 0


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        if args.verb == "validate":
            return _cmd_validate(args)
        if args.verb == "catalog":
            return _cmd_catalog(args)
        if args.verb == "sub":
            return _cmd_enumerate(args, boolean_only=False)
        if args.verb == "bsub":
            return _cmd_enumerate(args, boolean_only=True)
        if args.verb == "blocks":
            return _cmd_blocks(args)
        if args.verb == "reconstruct":
            return _cmd_reconstruct(args)
        if args.verb == "lift-bsub":
            return _cmd_lift(args, boolean_only=True)
        if args.verb == "lift-sub":
            return _cmd_lift(args, boolean_only=False)
        if args.verb == "check-sachs":
            return _cmd_check_sachs(args)
        if args.verb == "check-determination":
            return _cmd_check_determination(args)
        if args.verb == "classify-hom":
            return _cmd_classify_hom(args)
        if args.verb == "selftest":
            return 0 if selftest.run(sys.stdout) else 1
    except OmlkitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    raise AssertionError(f"unhandled verb {args.verb!r}")


def run():
    sys.exit(main())


if __name__ == "__main__":
    run()
