"""Command-line front end.

Exit status: 0 when a conclusion was reached and every oracle agreed,
2 when a criterion was not applicable, 1 on any error or mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import assoc, criteria, errors
from .criteria import ColonCriterionRequest, ColonStep, Conclusion
from .errors import MonassError, ParseError
from .graphs import cover_ideal, edge_ideal
from .ideal import (
    MonomialIdeal,
    MonomialPrime,
    colon_ideal,
    colon_monomial,
    delete_variable,
    format_ideal,
    intersect,
    power,
    radical,
    saturate,
)
from .parsing import infer_ring, parse_graph, parse_ideal, parse_ring, parse_script
from .properties import run_all
from .reproduce import REPRODUCTIONS, reproduce
from .ring import RingContext, parse_monomial

EXIT_OK, EXIT_ERROR, EXIT_NA = 0, 1, 2


class Outcome:
    def __init__(self, payload: dict, text: str, status: int = EXIT_OK):
        self.payload = payload
        self.text = text
        self.status = status


def _ring(args, *texts: str) -> RingContext:
    if args.ring:
        return parse_ring(args.ring)
    return infer_ring(*texts)


def _prime(ctx: RingContext, text: str | None) -> MonomialPrime:
    if not text or text in ("m", "max"):
        return MonomialPrime.maximal(ctx)
    names = [s for s in text.strip("() ").replace(",", " ").split() if s]
    return MonomialPrime(ctx, names)


def _report_outcome(rep: criteria.CriterionReport) -> Outcome:
    if rep.conclusion is Conclusion.NOT_APPLICABLE:
        status = EXIT_NA
    elif rep.oracle_agreement is False:
        status = EXIT_ERROR
    else:
        status = EXIT_OK
    return Outcome(rep.to_dict(), rep.transcript(), status)


def _ass_payload(I: MonomialIdeal, oracle: bool = True) -> Outcome:
    A = assoc.ass_primes(I)
    payload = {"ideal": format_ideal(I), "ass": A.to_lists(), "maximal": A.contains_maximal()}
    text = f"Ass(R/{I}) = {A}"
    status = EXIT_OK
    if oracle:
        B = assoc.ass_from_decomposition(I)
        payload["oracle_agreement"] = A == B
        if A != B:
            status = EXIT_ERROR
            text += f"\nORACLE DISAGREES: decomposition gives {B}"
    return Outcome(payload, text, status)


# -- subcommands ------------------------------------------------------------------


def cmd_mingen(args):
    ctx = _ring(args, args.ideal)
    I = parse_ideal(ctx, args.ideal)
    return Outcome({"ideal": format_ideal(I), "generators": [str(g) for g in I]}, str(I))


def cmd_power(args):
    ctx = _ring(args, args.ideal)
    P = power(parse_ideal(ctx, args.ideal), args.s)
    return Outcome({"ideal": format_ideal(P), "count": len(P)}, str(P))


def cmd_colon(args):
    ctx = _ring(args, args.ideal, args.by)
    I = parse_ideal(ctx, args.ideal)
    if args.by.strip().startswith("("):
        C = colon_ideal(I, parse_ideal(ctx, args.by))
    else:
        C = colon_monomial(I, parse_monomial(ctx, args.by))
    return Outcome({"ideal": format_ideal(C)}, str(C))


def cmd_intersect(args):
    ctx = _ring(args, *args.ideals)
    C = intersect([parse_ideal(ctx, t) for t in args.ideals])
    return Outcome({"ideal": format_ideal(C)}, str(C))


def cmd_radical(args):
    ctx = _ring(args, args.ideal)
    C = radical(parse_ideal(ctx, args.ideal))
    return Outcome({"ideal": format_ideal(C)}, str(C))


def cmd_decompose(args):
    ctx = _ring(args, args.ideal)
    I = parse_ideal(ctx, args.ideal)
    comps = assoc.irreducible_decomposition(I)
    back = intersect([c.as_ideal() for c in comps]) == I
    payload = {
        "ideal": format_ideal(I),
        "components": [str(c) for c in comps],
        "oracle_agreement": back,
    }
    text = " ∩ ".join(str(c) for c in comps)
    return Outcome(payload, text, EXIT_OK if back else EXIT_ERROR)


def cmd_ass(args):
    ctx = _ring(args, args.ideal)
    return _ass_payload(parse_ideal(ctx, args.ideal), oracle=not args.no_oracle)


def cmd_ass_seq(args):
    ctx = _ring(args, args.ideal)
    I = parse_ideal(ctx, args.ideal)
    seq = assoc.ass_sequence(I, args.smax)
    payload = {
        "ideal": format_ideal(I),
        "sequence": [A.to_lists() for A in seq.sets],
        "maximal": seq.maximal_pattern(),
        "observed_stable_from": seq.observed_stable_from,
    }
    lines = [f"s={s}: {A}" for s, A in enumerate(seq.sets, 1)]
    lines.append(f"observed (not certified) stable from s={seq.observed_stable_from}")
    if args.plot:
        path = _plot_seq(seq.sets, args.plot, f"Ass(R/I^s), I = {I}")
        payload["figure"] = str(path)
        lines.append(f"figure written to {path}")
    return Outcome(payload, "\n".join(lines))


def cmd_socle(args):
    ctx = _ring(args, args.ideal)
    I = parse_ideal(ctx, args.ideal)
    S = assoc.socle_colon(I)
    m = S != I
    return Outcome(
        {"ideal": format_ideal(I), "socle_colon": format_ideal(S), "maximal": m},
        f"(I : m) = {S}\nm {'is' if m else 'is not'} associated",
    )


def cmd_corners(args):
    ctx = _ring(args, args.ideal)
    I = parse_ideal(ctx, args.ideal)
    gen = [str(w) for w in assoc.corner_elements(I)]
    payload = {"ideal": format_ideal(I), "corners": gen}
    lines = ["corners (socle generators outside I): " + (", ".join(gen) or "none")]
    status = EXIT_OK
    if args.exhaustive:
        brute = [str(w) for w in assoc.corner_elements_exhaustive(I)]
        agree = set(gen) <= set(brute) and bool(gen) == bool(brute)
        payload["exhaustive"] = brute
        payload["oracle_agreement"] = agree
        lines.append("all corners: " + (", ".join(brute) or "none"))
        status = EXIT_OK if agree else EXIT_ERROR
    if args.plot:
        from .plotting import plot_staircase

        path = plot_staircase(I, args.plot)
        payload["figure"] = str(path)
        lines.append(f"figure written to {path}")
    return Outcome(payload, "\n".join(lines), status)


def _steps(ctx: RingContext, items: list[str], with_aux: bool) -> list[ColonStep]:
    out = []
    for item in items:
        parts = item.split(":", 2)
        if len(parts) < 2:
            raise ParseError("a step looks like VAR:ALPHA or VAR:ALPHA:(ideal)", item, 0)
        var, alpha = parts[0].strip(), parts[1].strip()
        if not alpha.isdigit():
            raise ParseError(f"bad exponent {alpha!r}", item, len(parts[0]) + 1)
        aux = parse_ideal(ctx, parts[2]) if len(parts) == 3 else None
        if with_aux and aux is None:
            raise ParseError("this criterion needs VAR:ALPHA:(J)", item, len(item))
        out.append(ColonStep(ctx.index(var), int(alpha), aux))
    return out


def cmd_check(args):
    kind = args.kind
    texts = [args.ideal] + list(getattr(args, "step", None) or []) + [args.u or "", args.z or ""]
    ctx = _ring(args, *texts)
    I = parse_ideal(ctx, args.ideal)
    t = args.t or 1
    if kind == "chain":
        return _report_outcome(criteria.chain_report(I))
    if kind == "squarefree":
        return _report_outcome(criteria.check_squarefree_maximal(I))
    if kind in ("split", "dichotomy"):
        if not args.u:
            raise ParseError("--u MONOMIAL is required", "", 0)
        d = criteria.infer_split(I, parse_monomial(ctx, args.u))
        rep = criteria.verify_split_identities(d, t) if kind == "split" else criteria.check_dichotomy(d, t)
        rep.witness("I", d.I)
        rep.witness("J", d.J)
        return _report_outcome(rep)
    if kind in ("colon-a", "colon-b"):
        steps = _steps(ctx, args.step or [], with_aux=kind == "colon-a")
        req = ColonCriterionRequest(I, t, _prime(ctx, args.prime), steps, args.ell)
        fn = criteria.check_colon_criterion_A if kind == "colon-a" else criteria.check_colon_criterion_B
        return _report_outcome(fn(req))
    if kind == "corner-div":
        if not args.z or not args.var:
            raise ParseError("--z MONOMIAL and --var NAME are required", "", 0)
        rep = criteria.check_corner_divisibility(I, t, parse_monomial(ctx, args.z), args.var)
        return _report_outcome(rep)
    raise ValueError(kind)


def cmd_graph(args):
    G = parse_graph(args.graph)
    ctx = parse_ring(args.ring) if args.ring else None
    I = edge_ideal(G, ctx) if args.kind == "edge" else cover_ideal(G, ctx)
    return Outcome({"graph": str(G), "kind": args.kind, "ideal": format_ideal(I)}, str(I))


def _plot_seq(sets, path, title):
    from .plotting import plot_ass_sequence

    return plot_ass_sequence(sets, path, title)


def cmd_reproduce(args):
    params = {}
    names = REPRODUCTIONS[args.id].__code__.co_varnames[: REPRODUCTIONS[args.id].__code__.co_argcount]
    for key in ("t", "smax", "n", "k"):
        val = getattr(args, key)
        if val is not None:
            if key not in names:
                raise ValueError(f"reproduce {args.id} takes no --{key}")
            params[key] = val
    rep = reproduce(args.id, **params)
    payload = rep.to_dict()
    text = rep.transcript()
    if args.plot and rep.sequences:
        base = Path(args.plot)
        figs = []
        for k, (label, seq) in enumerate(rep.sequences.items()):
            path = base if k == 0 else base.with_name(f"{base.stem}-{k}{base.suffix}")
            figs.append(str(_plot_seq(seq, path, f"{args.id}: Ass(R/{label}^s)")))
        payload["figures"] = figs
        text += "\nfigures: " + ", ".join(figs)
    return Outcome(payload, text, EXIT_OK if rep.ok else EXIT_ERROR)


def cmd_proptest(args):
    results = run_all(seed=args.seed, scale=args.scale)
    payload = {
        "seed": args.seed,
        "suites": [
            {"name": r.name, "cases": r.cases, "violations": r.violations, "ok": r.ok} for r in results
        ],
    }
    ok = all(r.ok for r in results)
    return Outcome(payload, "\n".join(str(r) for r in results), EXIT_OK if ok else EXIT_ERROR)


# -- scripts ----------------------------------------------------------------------


def run_script(text: str) -> list[dict]:
    script = parse_script(text)
    ctx = script.ring
    env: dict[str, MonomialIdeal] = {}
    results = []

    def ideal(word: str, st) -> MonomialIdeal:
        if word.startswith("("):
            return parse_ideal(ctx, word, line=st.line)
        if word not in env:
            raise ParseError(f"unbound identifier {word!r}", st.text, max(st.text.find(word), 0), st.line)
        return env[word]

    def need(st, k):
        if len(st.words) < k:
            raise ParseError(f"{st.words[0]!r} needs {k - 1} argument(s)", st.text, len(st.text), st.line)

    for st in script.statements:
        w = st.words
        if st.target is not None:
            op = w[0]
            if len(w) == 1:
                val = ideal(op, st)
            elif op == "power":
                need(st, 3)
                val = power(ideal(w[1], st), int(w[2]))
            elif op in ("sum", "product", "intersect"):
                need(st, 3)
                parts = [ideal(x, st) for x in w[1:]]
                if op == "intersect":
                    val = intersect(parts)
                else:
                    val = parts[0]
                    for p in parts[1:]:
                        val = val + p if op == "sum" else val * p
            elif op == "colon":
                need(st, 3)
                A = ideal(w[1], st)
                if w[2].startswith("(") or w[2] in env:
                    val = colon_ideal(A, ideal(w[2], st))
                else:
                    val = colon_monomial(A, parse_monomial(ctx, w[2], line=st.line))
            elif op == "saturate":
                need(st, 3)
                val = saturate(ideal(w[1], st), parse_monomial(ctx, w[2], line=st.line))
            elif op == "radical":
                need(st, 2)
                val = radical(ideal(w[1], st))
            elif op == "delete":
                need(st, 3)
                val = delete_variable(ideal(w[1], st), w[2])
            elif op == "socle":
                need(st, 2)
                val = assoc.socle_colon(ideal(w[1], st))
            elif op in ("edge", "cover"):
                need(st, 2)
                G = parse_graph(" ".join(w[1:]), line=st.line)
                val = edge_ideal(G, ctx) if op == "edge" else cover_ideal(G, ctx)
            else:
                raise ParseError(f"unknown operation {op!r}", st.text, st.text.find(op), st.line)
            env[st.target] = val
            results.append({"line": st.line, "bind": st.target, "ideal": format_ideal(val)})
            continue
        cmd = w[0]
        if cmd in ("print", "mingen"):
            need(st, 2)
            out = {"ideal": format_ideal(ideal(w[1], st))}
        elif cmd == "ass":
            need(st, 2)
            out = _ass_payload(ideal(w[1], st)).payload
        elif cmd == "ass-seq":
            need(st, 3)
            seq = assoc.ass_sequence(ideal(w[1], st), int(w[2]))
            out = {"sequence": [A.to_lists() for A in seq.sets], "observed_stable_from": seq.observed_stable_from}
        elif cmd == "socle":
            need(st, 2)
            I = ideal(w[1], st)
            S = assoc.socle_colon(I)
            out = {"socle_colon": format_ideal(S), "maximal": S != I}
        elif cmd == "corners":
            need(st, 2)
            out = {"corners": [str(c) for c in assoc.corner_elements(ideal(w[1], st))]}
        elif cmd == "decompose":
            need(st, 2)
            out = {"components": [str(c) for c in assoc.irreducible_decomposition(ideal(w[1], st))]}
        elif cmd == "check" and len(w) >= 3 and w[1] in ("chain", "squarefree"):
            I = ideal(w[2], st)
            rep = criteria.chain_report(I) if w[1] == "chain" else criteria.check_squarefree_maximal(I)
            out = rep.to_dict()
        else:
            raise ParseError(f"unknown command {cmd!r}", st.text, max(st.text.find(cmd), 0), st.line)
        out = {"line": st.line, "command": " ".join(w), **out}
        results.append(out)
    return results


def cmd_script(args):
    text = Path(args.file).read_text() if args.file != "-" else sys.stdin.read()
    results = run_script(text)
    bad = any(r.get("oracle_agreement") is False for r in results)
    lines = []
    for r in results:
        body = {k: v for k, v in r.items() if k not in ("line", "command", "bind")}
        head = f"{r['bind']} =" if "bind" in r else r["command"]
        lines.append(f"[{r['line']}] {head} {json.dumps(body) if 'bind' not in r else r['ideal']}")
    return Outcome({"results": results}, "\n".join(lines), EXIT_ERROR if bad else EXIT_OK)


# -- argument parsing -------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    d = errors.Limits()
    common.add_argument("--ring", help="variables, e.g. 'x,y,z' or 'x1..x6' (default: inferred)")
    common.add_argument("--json", action="store_true", help="emit the structured document")
    common.add_argument("--cap-gens", type=int, default=d.gens,
                        help=f"max minimal generators of any intermediate ideal (default {d.gens})")
    common.add_argument("--cap-subsets", type=int, default=d.subsets,
                        help=f"max support size for prime enumeration (default {d.subsets})")
    common.add_argument("--cap-corners", type=int, default=d.corner_search,
                        help=f"max monomials scanned by exhaustive corner search (default {d.corner_search})")

    p = argparse.ArgumentParser(prog="monass", description="Associated primes of powers of monomial ideals.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help):
        sp = sub.add_parser(name, parents=[common], help=help)
        sp.set_defaults(fn=fn)
        return sp

    sp = add("mingen", cmd_mingen, "minimal generators")
    sp.add_argument("ideal")
    sp = add("power", cmd_power, "I^s")
    sp.add_argument("ideal")
    sp.add_argument("s", type=int)
    sp = add("colon", cmd_colon, "(I : f) or (I : J)")
    sp.add_argument("ideal")
    sp.add_argument("by", help="a monomial or an ideal")
    sp = add("intersect", cmd_intersect, "intersection of ideals")
    sp.add_argument("ideals", nargs="+")
    sp = add("radical", cmd_radical, "radical")
    sp.add_argument("ideal")
    sp = add("decompose", cmd_decompose, "irredundant irreducible decomposition")
    sp.add_argument("ideal")
    sp = add("ass", cmd_ass, "associated primes (both algorithms)")
    sp.add_argument("ideal")
    sp.add_argument("--no-oracle", action="store_true", help="skip the decomposition cross-check")
    sp = add("ass-seq", cmd_ass_seq, "Ass(R/I^s) for s = 1..smax")
    sp.add_argument("ideal")
    sp.add_argument("--smax", type=int, default=4)
    sp.add_argument("--plot", metavar="FILE", help="write a membership grid figure")
    sp = add("socle", cmd_socle, "(I : m) and the maximal-ideal test")
    sp.add_argument("ideal")
    sp = add("corners", cmd_corners, "corner elements")
    sp.add_argument("ideal")
    sp.add_argument("--exhaustive", action="store_true", help="also run the brute-force search")
    sp.add_argument("--plot", metavar="FILE", help="staircase figure (two variables only)")

    sp = add("check", cmd_check, "run a criterion checker")
    sp.add_argument("kind", choices=["chain", "split", "dichotomy", "colon-a", "colon-b", "squarefree", "corner-div"])
    sp.add_argument("ideal", help="the ideal I (or L for split/dichotomy)")
    sp.add_argument("--t", type=int, help="power (default 1)")
    sp.add_argument("--u", help="split monomial for split/dichotomy")
    sp.add_argument("--prime", help="prime as variable list, default m")
    sp.add_argument("--step", action="append", help="VAR:ALPHA[:(J)], repeatable, in order")
    sp.add_argument("--ell", type=int, help="membership exponent for the product (default t)")
    sp.add_argument("--z", help="candidate corner for corner-div")
    sp.add_argument("--var", help="variable for corner-div")

    sp = add("graph", cmd_graph, "edge or cover ideal of a graph")
    sp.add_argument("kind", choices=["edge", "cover"])
    sp.add_argument("graph", help="'graph N; 1-2 2-3 ...', 'cycle:k' or 'wheel:k'")

    sp = add("reproduce", cmd_reproduce, "re-derive a worked example and compare with golden data")
    sp.add_argument("id", choices=sorted(REPRODUCTIONS))
    for key in ("t", "smax", "n", "k"):
        sp.add_argument(f"--{key}", type=int)
    sp.add_argument("--plot", metavar="FILE", help="write Ass-sequence figures")

    sp = add("script", cmd_script, "run a session script")
    sp.add_argument("file", help="script path or '-' for stdin")

    sp = add("proptest", cmd_proptest, "run the seeded randomized property suites")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--scale", type=float, default=1.0, help="multiply the number of cases per suite")
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        with errors.override_limits(gens=args.cap_gens, subsets=args.cap_subsets,
                                    corner_search=args.cap_corners):
            out = args.fn(args)
    except errors.CapExceeded as exc:
        _fail(args, f"cap exceeded: {exc.cap} (limit {exc.limit}); raise it with --cap-{exc.cap.replace('_', '-')}",
              {"error": "cap", "cap": exc.cap, "limit": exc.limit})
        return EXIT_ERROR
    except ParseError as exc:
        _fail(args, f"parse error: {exc}", {"error": "parse", "line": exc.line, "column": exc.column,
                                             "message": exc.message})
        return EXIT_ERROR
    except (MonassError, ValueError) as exc:
        _fail(args, f"error: {exc}", {"error": type(exc).__name__, "message": str(exc)})
        return EXIT_ERROR
    if args.json:
        print(json.dumps(out.payload, indent=2))
    else:
        print(out.text)
    return out.status


def _fail(args, text: str, payload: dict) -> None:
    if getattr(args, "json", False):
        print(json.dumps(payload, indent=2))
    else:
        print(text, file=sys.stderr)


if __name__ == "__main__":
    sys.exit(main())
