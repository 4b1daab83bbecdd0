"""``qchromatic`` command line.

Exit status: 0 on success, 1 on invalid input, 2 when ``verify`` finds an
identity that does not hold.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import __version__
from .apps import DIGEST_ALG, fingerprint, g_major_polynomial, min_sum_coloring, tree_degree_bounds
from .genfunc import (
    brute_chi,
    chi_ones_qbinom,
    chi_tilde,
    chung_graham,
    leading_coeff_formula,
    numerator_ones,
    ones,
    perm_terms,
    powers,
    series_chi,
)
from .graph import DEFAULT_MAX_D, Graph, GraphError, read_graph
from .gstats import format_partition, g_sequence, g_statistics, iter_ascent_sets, rank_of_permutation
from .orient import phi, scheme_from_name
from .verify import SUITES, Context, run_suites

EXIT_OK, EXIT_INPUT, EXIT_IDENTITY = 0, 1, 2
DENOMINATOR = "prod_{i=0}^{d} (1-q^i z)"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad flags; 2 is reserved for failed identities here
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def parse_lambda(text: str, d: int) -> tuple[int, ...]:
    text = text.strip()
    if text == "ones":
        return ones(d)
    if text.startswith("powers:"):
        try:
            k = int(text.split(":", 1)[1])
        except ValueError:
            raise UsageError(f"bad --lambda {text!r}; expected powers:K") from None
        if k < 1:
            raise UsageError("powers:K needs K >= 1")
        return powers(k, d)
    try:
        lam = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"bad --lambda {text!r}; use ones, powers:K or a comma list") from None
    if len(lam) != d:
        raise UsageError(f"--lambda has {len(lam)} entries but the graph has {d} vertices")
    if any(x <= 0 for x in lam):
        raise UsageError("--lambda entries must be positive")
    return lam


def parse_perm(text: str, d: int) -> tuple[int, ...]:
    try:
        pi = tuple(int(x) for x in text.split(",")) if "," in text or d >= 10 else tuple(int(c) for c in text)
    except ValueError:
        raise UsageError(f"bad --perm {text!r}") from None
    if sorted(pi) != list(range(1, d + 1)):
        raise UsageError(f"--perm {text!r} is not a permutation of 1..{d}")
    return pi


def _max_d(args) -> int | None:
    return None if args.max_d is not None and args.max_d <= 0 else (args.max_d or DEFAULT_MAX_D)


def _graphs(args, count: int) -> list[Graph]:
    paths = args.graph or []
    if len(paths) != count:
        raise UsageError(f"{args.verb} needs exactly {count} --graph file(s), got {len(paths)}")
    out = []
    for p in paths:
        try:
            out.append(read_graph(p))
        except OSError as exc:
            raise UsageError(f"cannot read graph file {p!r}: {exc.strerror}") from None
    return out


# -- verbs --------------------------------------------------------------------------
# each returns (json_payload, text_lines, exit_code)


def cmd_stats(args):
    (G,) = _graphs(args, 1)
    perms = [parse_perm(args.perm, G.d)] if args.perm else [pi for pi, _ in iter_ascent_sets(G, _max_d(args))]
    scheme = scheme_from_name(args.scheme)
    rows = []
    for pi in perms:
        st = g_statistics(G, pi)
        pair = phi(G, pi, scheme)
        rows.append(
            {
                "perm": list(pi),
                "rank": list(rank_of_permutation(G, pi)),
                "asc": sorted(st.asc),
                "des": sorted(st.des),
                "maj": st.maj,
                "g_sequence": [list(b) for b in g_sequence(G, pi)],
                "orientation": sorted([list(a) for a in pair.rho]),
                "sigma": list(pair.sigma),
            }
        )
    lines = [
        f"pi={''.join(map(str, r['perm'])) if G.d < 10 else r['perm']}  rk={r['rank']}  asc={r['asc']}  "
        f"maj={r['maj']}  seq={format_partition(tuple(map(tuple, r['g_sequence'])))}  sigma={r['sigma']}"
        for r in rows
    ]
    return {"d": G.d, "permutations": rows}, lines, EXIT_OK


def cmd_genfunc(args):
    (G,) = _graphs(args, 1)
    lam = parse_lambda(args.lam, G.d)
    payload: dict = {"d": G.d, "lambda": list(lam)}
    lines: list[str] = []
    if lam == ones(G.d):
        N = numerator_ones(G, _max_d(args))
        payload.update(N.to_json())
        lines += [f"a_{i}(q) = {a}" for i, a in N.coeffs.items()]
        lines.append(f"denominator: {DENOMINATOR}")
    if args.terms:
        terms = perm_terms(G, lam, _max_d(args))
        payload["terms"] = [
            {"perm": list(t.perm), "alpha": str(t.alpha), "ascnum": t.ascnum, "partial_sums": [str(s) for s in t.partial_sums]}
            for t in terms
        ]
        lines += [
            f"{list(t.perm)}: q^{t.alpha} z^{t.ascnum + 1} / prod over s in {list(t.partial_sums)} of (1 - q^s z)"
            for t in terms
        ]
    elif lam != ones(G.d):
        upto = G.d + 1 if args.trunc is None else args.trunc
        series = series_chi(G, lam, upto, _max_d(args))
        payload["series"] = [p.to_json() for p in series]
        lines += [f"z^{n}: {p}" for n, p in enumerate(series)]
    return payload, lines, EXIT_OK


def cmd_chi(args):
    (G,) = _graphs(args, 1)
    if args.n is None:
        raise UsageError("chi needs --n")
    if args.n < 0:
        raise UsageError("--n must be non-negative")
    lam = parse_lambda(args.lam, G.d)
    if args.method == "brute":
        value = brute_chi(G, lam, args.n)
    else:
        value = series_chi(G, lam, args.n, _max_d(args))[args.n]
    return {"d": G.d, "lambda": list(lam), "n": args.n, "chi": value.to_json()}, [str(value)], EXIT_OK


def cmd_qbinom_basis(args):
    (G,) = _graphs(args, 1)
    N = numerator_ones(G, _max_d(args))
    counts = chung_graham(G, _max_d(args))
    d = G.d
    payload = {
        "d": d,
        "basis": {str(j): N[d - j].to_json() for j in range(d) if N[d - j]},
        "chung_graham": {str(j): c for j, c in counts.items()},
    }
    lines = [f"[n+{j} choose {d}]_q * ({N[d - j]})" for j in range(d) if N[d - j]]
    lines.append("q=1 counts by G-descent number: " + ", ".join(f"{j}:{c}" for j, c in counts.items()))
    if args.n is not None:
        if args.n < 0:
            raise UsageError("--n must be non-negative")
        value = chi_ones_qbinom(G, args.n, N)
        payload["n"] = args.n
        payload["chi"] = value.to_json()
        lines.append(f"chi(q,{args.n}) = {value}")
    return payload, lines, EXIT_OK


def cmd_chi_tilde(args):
    (G,) = _graphs(args, 1)
    ct = chi_tilde(G, _max_d(args))
    lead = leading_coeff_formula(G, _max_d(args))
    payload = {"d": G.d, **ct.to_json(), "leading_formula": lead.to_json()}
    lines = [f"c_{k} = {c}" for k, c in enumerate(ct.coefficients)]
    lines.append(f"leading coefficient from the major-index sum: {lead}")
    return payload, lines, EXIT_OK


def cmd_gmajor(args):
    (G,) = _graphs(args, 1)
    poly = g_major_polynomial(G, _max_d(args))
    payload = {"d": G.d, "poly": poly.to_json(), "degree": poly.degree, "leading": poly.leading_coefficient}
    lines = [str(poly), f"degree {poly.degree}, leading coefficient {poly.leading_coefficient}"]
    if G.d >= 2 and G.is_tree():
        b = tree_degree_bounds(G, _max_d(args))
        payload["tree_bounds"] = {"lower": b.lower, "upper": b.upper}
        lines.append(f"tree degree bounds: {b.lower} <= {b.actual} <= {b.upper}")
    return payload, lines, EXIT_OK


def cmd_minsum(args):
    (G,) = _graphs(args, 1)
    res = min_sum_coloring(G)
    payload = {"d": G.d, "sigma": res.sigma, "count": res.count, "witnesses": [list(w) for w in res.witnesses]}
    lines = [f"minimum color sum {res.sigma}, attained by {res.count} coloring(s)"]
    lines += [" ".join(map(str, w)) for w in res.witnesses]
    return payload, lines, EXIT_OK


def cmd_fingerprint(args):
    (G,) = _graphs(args, 1)
    fp = fingerprint(G, args.k)
    return fp.to_json(), [str(fp.poly), f"{DIGEST_ALG}:{fp.digest}"], EXIT_OK


def cmd_distinguish(args):
    G, H = _graphs(args, 2)
    a, b = fingerprint(G, args.k), fingerprint(H, args.k)
    same = a.poly == b.poly
    payload = {"equal": same, "fingerprints": [a.to_json(), b.to_json()]}
    verdict = "identical labeled graphs" if same else "different labeled graphs"
    return payload, [verdict], EXIT_OK


def cmd_verify(args):
    (G,) = _graphs(args, 1)
    names = None if args.suite in (None, "all") else [s.strip() for s in args.suite.split(",") if s.strip()]
    if names:
        unknown = [n for n in names if n not in SUITES]
        if unknown:
            raise UsageError(f"unknown suite(s) {', '.join(unknown)}; choose from all, {', '.join(SUITES)}")
    lam = parse_lambda(args.lam, G.d)
    ctx = Context(G, lam, scheme_from_name(args.scheme), 4 if args.trunc is None else args.trunc, _max_d(args))
    results = run_suites(ctx, names)
    width = max(len(r.name) for r in results)
    lines = [f"{r.name:<{width}}  {'PASS' if r.ok else 'FAIL'}  {r.detail}" for r in results]
    payload = {"d": G.d, "results": [{"name": r.name, "ok": r.ok, "detail": r.detail} for r in results]}
    return payload, lines, EXIT_OK if all(r.ok for r in results) else EXIT_IDENTITY


VERBS = {
    "stats": (cmd_stats, "ranks, G-statistics, G-sequences and the orientation pair of permutations"),
    "genfunc": (cmd_genfunc, "generating function numerator, or per-permutation terms with --terms"),
    "chi": (cmd_chi, "the q-chromatic polynomial at one n"),
    "qbinom-basis": (cmd_qbinom_basis, "expansion in q-binomials and its q=1 descent counts"),
    "chi-tilde": (cmd_chi_tilde, "coefficients in powers of [n]_q"),
    "gmajor": (cmd_gmajor, "G-major index polynomial"),
    "minsum": (cmd_minsum, "minimum sum colorings"),
    "fingerprint": (cmd_fingerprint, "base-k fingerprint of a labeled graph"),
    "distinguish": (cmd_distinguish, "compare the fingerprints of two graphs"),
    "verify": (cmd_verify, "check identities on a graph"),
}


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="qchromatic", description="Exact q-chromatic polynomials of graphs.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="verb", metavar="VERB", parser_class=_Parser)
    sub.required = True
    for verb, (_, help_text) in VERBS.items():
        p = sub.add_parser(verb, help=help_text, description=help_text)
        p.add_argument("--graph", action="append", metavar="FILE", help="graph file; give it twice for distinguish")
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--max-d", type=int, default=None, metavar="INT", help=f"enumeration cap (default {DEFAULT_MAX_D}, 0 disables)")
        if verb in ("genfunc", "chi", "verify"):
            p.add_argument("--lambda", dest="lam", default="ones", metavar="LIST|ones|powers:K")
        if verb in ("chi", "qbinom-basis"):
            p.add_argument("--n", type=int, default=None, metavar="INT")
        if verb in ("genfunc", "verify"):
            p.add_argument("--trunc", type=int, default=None, metavar="INT", help="highest power of z (or n) to check")
        if verb in ("stats", "verify"):
            p.add_argument("--scheme", default="rank", metavar="rank|random:SEED")
        if verb == "stats":
            p.add_argument("--perm", default=None, help="one permutation, e.g. 31254 or 3,1,2,5,4")
        if verb == "genfunc":
            p.add_argument("--terms", action="store_true", help="list the summand of every permutation")
        if verb == "chi":
            p.add_argument("--method", choices=("brute", "series"), default="brute")
        if verb in ("fingerprint", "distinguish"):
            p.add_argument("--k", type=int, default=None, help="base of the linear form (default d)")
        if verb == "verify":
            p.add_argument("--suite", default="all", help=f"all, or a comma list of: {', '.join(SUITES)}")
    return parser


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    handler = VERBS[args.verb][0]
    try:
        payload, lines, code = handler(args)
    except (UsageError, GraphError, ValueError) as exc:
        print(f"qchromatic {args.verb}: error: {exc}", file=err)
        return EXIT_INPUT
    if args.format == "json":
        json.dump(payload, out, indent=2, sort_keys=True)
        out.write("\n")
    else:
        for line in lines:
            print(line, file=out)
    return code


def main() -> None:
    sys.exit(run())
