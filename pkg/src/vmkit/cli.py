"""Command-line surface: transforms, solvers, verifiers, and the pipeline.

Exit codes carry the decision: 0 YES, 1 NO, 2 UNKNOWN or budget exhausted,
64 usage errors, 65 validation errors.  Artifacts go to stdout (or the -o
target); human diagnostics go to stderr, so redirected output stays clean
and re-parseable.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .errors import ResourceLimitError
from .euler import find_euler_tour, induced_word, is_soet, iso_soet_decide, tour_from_word
from .formats import (
    bundle_chain_for,
    parse_graph,
    parse_subset,
    parse_tour,
    parse_witness,
    parse_word,
    serialize_bundle,
    serialize_graph,
    serialize_subset,
    serialize_tour,
    serialize_witness,
    serialize_word,
    verify_bundle_chain,
)
from .graphs import MultiGraph, SimpleGraph
from .lc import DEFAULT_NODE_CAP, lc_orbit
from .reduction import build_soet_from_ham, k3_expand, reduce_starvm_to_isovm
from .solvers import (
    hamiltonian_decide,
    iso_vm_decide,
    star_vm_decide,
    verify_vm_witness,
)
from .words import alternance_graph


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _read(path):
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as e:
        raise ValueError(f"cannot read {path}: {e.strerror}") from None


def _simple(path):
    G = parse_graph(_read(path))
    if not isinstance(G, SimpleGraph):
        raise ValueError(f"{path} must hold a simple graph")
    return G


def _multi(path):
    G = parse_graph(_read(path))
    if not isinstance(G, MultiGraph):
        raise ValueError(f"{path} must hold a multigraph")
    return G


def _budget(args):
    if args.budget is not None:
        return args.budget
    env = os.environ.get("VMKIT_BUDGET")
    if env:
        try:
            return int(env)
        except ValueError:
            raise ValueError(f"VMKIT_BUDGET must be a number, got {env!r}") from None
    return None


def _emit(args, artifact, status, detail="", extras=None):
    """Write the artifact (text mode) or a status object (json mode)."""
    if args.format == "json":
        obj = {"status": status, "detail": detail}
        if artifact is not None:
            obj["artifact"] = artifact
        if extras:
            obj.update(extras)
        blob = json.dumps(obj, sort_keys=True, indent=2) + "\n"
    else:
        blob = artifact if artifact is not None else ""
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(blob)
        print(f"wrote {args.out}", file=sys.stderr)
    elif blob:
        sys.stdout.write(blob)
    if detail:
        print(detail, file=sys.stderr)


_EXIT = {"yes": 0, "no": 1, "unknown": 2}


def cmd_expand(args):
    R = _simple(args.graph)
    F = k3_expand(R)
    _emit(args, serialize_graph(F), "yes", f"k = {2 * len(R.vertices)}")
    return 0


def cmd_euler(args):
    F = _multi(args.multigraph)
    U = find_euler_tour(F)
    _emit(args, serialize_tour(U), "yes",
          "word: " + serialize_word(induced_word(U)).strip())
    return 0


def cmd_alternance(args):
    w = parse_word(_read(args.word))
    _emit(args, serialize_graph(alternance_graph(w)), "yes")
    return 0


def cmd_soet_solve(args):
    F = _multi(args.multigraph)
    try:
        found = iso_soet_decide(
            F,
            args.k,
            budget=_budget(args),
            deterministic=args.deterministic,
            workers=args.workers,
        )
    except ResourceLimitError as e:
        _emit(args, None, "unknown", str(e))
        return 2
    if found is None:
        _emit(args, None, "no", "no subset admits a semi-ordered tour")
        return 1
    subset, cert = found
    artifact = f"subset {serialize_subset(subset)}\n" + serialize_tour(cert.tour)
    _emit(args, artifact, "yes",
          "visit word: " + " ".join(cert.visit_word),
          extras={"subset": serialize_subset(subset)})
    return 0


def _sniff_tour(text, F):
    """Accept a tour file, a bare word file, or a solve certificate."""
    lines = text.splitlines()
    first_idx = next((i for i, ln in enumerate(lines) if ln.strip()), None)
    if first_idx is None:
        raise ValueError("empty tour file")
    first = lines[first_idx].strip()
    if first == "tour":
        return parse_tour(text, F), None
    if first.split()[0] == "subset":
        parts = first.split(None, 1)
        if len(parts) != 2:
            raise ValueError("the subset line of a certificate names the vertices")
        subset = parse_subset(parts[1], F.vertices)
        body = "\n".join(lines[first_idx + 1 :])
        return parse_tour(body, F), subset
    return tour_from_word(F, parse_word(text)), None


def cmd_soet_verify(args):
    F = _multi(args.multigraph)
    U, embedded = _sniff_tour(_read(args.tourfile), F)
    Vp = parse_subset(args.subset, F.vertices)
    if embedded is not None and embedded != Vp:
        raise ValueError(
            f"the certificate names V' = {serialize_subset(embedded)}, "
            f"the command line says {serialize_subset(Vp)}"
        )
    s = is_soet(U, Vp)
    if s is None:
        _emit(args, None, "no", "the tour is not semi-ordered over that subset")
        return 1
    _emit(args, None, "yes", "visit word: " + " ".join(s))
    return 0


def cmd_vm_solve(args):
    G = _simple(args.graph)
    H = _simple(args.target)
    dec = iso_vm_decide(
        G,
        H,
        budget=_budget(args),
        deterministic=args.deterministic,
        workers=args.workers,
        orbit_cap=args.limit or DEFAULT_NODE_CAP,
    )
    if dec.is_yes:
        subset, w = dec.witness
        _emit(args, serialize_witness(w), "yes", dec.detail,
              extras={"subset": serialize_subset(subset)})
    else:
        _emit(args, None, dec.status, dec.detail)
    return _EXIT[dec.status]


def cmd_vm_solve_star(args):
    G = _simple(args.graph)
    dec = star_vm_decide(
        G,
        args.k,
        budget=_budget(args),
        deterministic=args.deterministic,
        workers=args.workers,
    )
    _, H = reduce_starvm_to_isovm(G, args.k)
    if args.target:
        with open(args.target, "w") as fh:
            fh.write(serialize_graph(H))
        print(f"wrote {args.target}", file=sys.stderr)
    if dec.is_yes:
        subset, w = dec.witness
        _emit(args, serialize_witness(w), "yes", dec.detail,
              extras={"subset": serialize_subset(subset),
                      "target": serialize_graph(H)})
    else:
        _emit(args, None, dec.status, dec.detail)
    return _EXIT[dec.status]


def cmd_vm_verify(args):
    G = _simple(args.graph)
    H = _simple(args.target)
    w = parse_witness(_read(args.witness))
    if verify_vm_witness(G, H, w):
        _emit(args, None, "yes", "witness verified")
        return 0
    _emit(args, None, "no", "witness does not prove the claim")
    return 1


def cmd_ham(args):
    R = _simple(args.graph)
    dec = hamiltonian_decide(R)
    if dec.is_yes:
        _emit(args, " ".join(dec.witness) + "\n", "yes", dec.detail)
    else:
        _emit(args, None, "no", dec.detail)
    return _EXIT[dec.status]


def cmd_orbit(args):
    G = _simple(args.graph)
    try:
        orbit = lc_orbit(G, args.limit or DEFAULT_NODE_CAP)
    except ResourceLimitError as e:
        _emit(args, None, "unknown", str(e))
        return 2
    lines = [f"orbit {len(orbit)}"]
    rows = sorted(
        (" ".join(f"{u}-{v}" for u, v in M.sorted_edges()) or "-") for M in orbit
    )
    lines.extend(rows)
    _emit(args, "\n".join(lines) + "\n", "yes", f"{len(orbit)} graphs")
    return 0


def cmd_pipeline(args):
    R = _simple(args.graph)
    dec = hamiltonian_decide(R)
    chain = bundle_chain_for(R)
    verify_bundle_chain(chain)
    outdir = args.out or "pipeline_out"
    os.makedirs(outdir, exist_ok=True)
    names = ("01_cubham.json", "02_isosoet.json", "03_starvm.json", "04_isovm.json")
    written = []
    for name, b in zip(names, chain):
        path = os.path.join(outdir, name)
        with open(path, "w") as fh:
            fh.write(serialize_bundle(b))
        written.append(path)
    with open(os.path.join(outdir, "expected.txt"), "w") as fh:
        fh.write(dec.status + "\n")
    written.append(os.path.join(outdir, "expected.txt"))
    if dec.is_yes:
        cycle = dec.witness
        with open(os.path.join(outdir, "ham_cycle.txt"), "w") as fh:
            fh.write(" ".join(cycle) + "\n")
        written.append(os.path.join(outdir, "ham_cycle.txt"))
        cert = build_soet_from_ham(R, cycle)
        cert_text = f"subset {serialize_subset(cert.subset)}\n" + serialize_tour(cert.tour)
        with open(os.path.join(outdir, "soet_cert.txt"), "w") as fh:
            fh.write(cert_text)
        written.append(os.path.join(outdir, "soet_cert.txt"))
    if args.format == "json":
        obj = {"status": dec.status, "files": written}
        sys.stdout.write(json.dumps(obj, sort_keys=True, indent=2) + "\n")
    else:
        for path in written:
            print(f"wrote {path}")
        print(f"expected: {dec.status}")
    return _EXIT[dec.status]


_HANDLERS = {
    "expand": cmd_expand,
    "euler": cmd_euler,
    "alternance": cmd_alternance,
    "soet-solve": cmd_soet_solve,
    "soet-verify": cmd_soet_verify,
    "vm-solve": cmd_vm_solve,
    "vm-solve-star": cmd_vm_solve_star,
    "vm-verify": cmd_vm_verify,
    "ham": cmd_ham,
    "orbit": cmd_orbit,
    "pipeline": cmd_pipeline,
}


def _add_common(sub, solver=False):
    sub.add_argument("-o", "--out", help="write the artifact here instead of stdout")
    sub.add_argument("--format", choices=("text", "json"), default="text")
    if solver:
        sub.add_argument("--budget", type=int, default=None,
                         help="search step cap (default: VMKIT_BUDGET)")
        sub.add_argument("--deterministic", action="store_true",
                         help="least witness, byte-stable across worker counts")
        sub.add_argument("--workers", type=int, default=1)


def build_parser():
    p = _Parser(prog="vmkit", description="vertex-minor toolkit")
    sp = p.add_subparsers(dest="cmd", required=True)

    s = sp.add_parser("expand", help="cubic graph to its triangle expansion")
    s.add_argument("graph")
    _add_common(s)

    s = sp.add_parser("euler", help="Eulerian tour and word of a multigraph")
    s.add_argument("multigraph")
    _add_common(s)

    s = sp.add_parser("alternance", help="alternance graph of a word")
    s.add_argument("word")
    _add_common(s)

    s = sp.add_parser("soet-solve", help="find a subset admitting a semi-ordered tour")
    s.add_argument("multigraph")
    s.add_argument("k", type=int)
    _add_common(s, solver=True)

    s = sp.add_parser("soet-verify", help="check a tour, word or certificate file")
    s.add_argument("multigraph")
    s.add_argument("tourfile")
    s.add_argument("subset")
    _add_common(s)

    s = sp.add_parser("vm-solve", help="vertex-minor isomorphic to a target")
    s.add_argument("graph")
    s.add_argument("target")
    s.add_argument("--limit", type=int, default=None, help="orbit state cap")
    _add_common(s, solver=True)

    s = sp.add_parser("vm-solve-star", help="star vertex-minor on k vertices")
    s.add_argument("graph")
    s.add_argument("k", type=int)
    s.add_argument("--target", help="also write the target star graph here")
    _add_common(s, solver=True)

    s = sp.add_parser("vm-verify", help="replay a witness against graph and target")
    s.add_argument("graph")
    s.add_argument("target")
    s.add_argument("witness")
    _add_common(s)

    s = sp.add_parser("ham", help="exact Hamiltonicity of a cubic graph")
    s.add_argument("graph")
    _add_common(s)

    s = sp.add_parser("orbit", help="local complementation orbit of a graph")
    s.add_argument("graph")
    s.add_argument("--limit", type=int, default=None, help="orbit state cap")
    _add_common(s)

    s = sp.add_parser("pipeline", help="full reduction chain with bundles and certs")
    s.add_argument("graph")
    _add_common(s)

    return p


def run_command(argv) -> int:
    try:
        args = build_parser().parse_args(argv)
        return _HANDLERS[args.cmd](args)
    except _UsageError as e:
        print(f"usage error: {e}", file=sys.stderr)
        return 64
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 65
    except ResourceLimitError as e:
        print(f"unsettled: {e}", file=sys.stderr)
        return 2


def main():
    sys.exit(run_command(sys.argv[1:]))


if __name__ == "__main__":
    main()
