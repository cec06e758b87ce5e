"""The ``parmon`` command line program.

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys
import time
from fractions import Fraction
from importlib import resources

from . import bijections, bratteli, hrunits, monoid, young
from .algebra import PartitionAlgebra
from .arith import RationalFunction, parse_rf, rf_to_str
from .diagram import DEFAULT_MAX_K, bell, enumerate_diagrams, identity, reverse
from .errors import InvalidVertex, ParmonError, ResourceLimit, UsageError


class VerificationFailure(Exception):
    def __init__(self, report: dict):
        super().__init__(report["check"])
        self.report = report


# ---------------------------------------------------------------------------
# formatting helpers


def _coeff_str(c) -> str:
    if isinstance(c, RationalFunction):
        return rf_to_str(c)
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _path_json(p) -> list:
    return [list(mu) for mu in p]


def _element_json(x) -> list:
    return [{"diagram": [list(b) for b in d.blocks], "coeff": _coeff_str(c)} for d, c in x.terms.items()]


def _element_text(x) -> str:
    if not x.terms:
        return "0"
    return " + ".join(f"({_coeff_str(c)}) d{d}" for d, c in x.terms.items())


def _parse_end(text: str) -> tuple:
    try:
        value = json.loads(text)
    except json.JSONDecodeError as e:
        raise UsageError(f"--end must be a JSON list of parts: {e}") from None
    if not isinstance(value, list) or not all(isinstance(x, int) for x in value):
        raise UsageError("--end must be a JSON list of integers")
    return tuple(value)


def _algebra(args, rng: random.Random) -> PartitionAlgebra:
    if args.mode == "symbolic":
        return PartitionAlgebra(args.k)
    return PartitionAlgebra(args.k, monoid.random_parameter(rng, args.k))


# ---------------------------------------------------------------------------
# commands


def cmd_enumerate(args) -> str:
    k = args.k
    if args.what == "diagrams":
        items = enumerate_diagrams(k, args.max_k)
        if args.format == "json":
            return json.dumps([[list(b) for b in d.blocks] for d in items])
        return "\n".join(str(d) for d in items)
    if args.what == "vt":
        level = Fraction(args.level) if args.level is not None else Fraction(k)
        ends = [_parse_end(args.end)] if args.end is not None else list(bratteli.vertices_at(bratteli.twice(level)))
        paths = [p for mu in ends for p in bratteli.enumerate_vt(level, mu)]
        if args.format == "json":
            return json.dumps([_path_json(p) for p in paths])
        return "\n".join(" ".join(str(list(mu)) for mu in p) for p in paths)
    if args.what == "spt":
        items = bijections.enumerate_spt(k)
        if args.format == "json":
            return json.dumps([t.to_json() for t in items])
        return "\n".join(str(t) for t in items)
    raise UsageError(f"unknown --what {args.what!r}")


def cmd_units(args) -> str:
    rng = random.Random(args.seed)
    alg = _algebra(args, rng)
    system = hrunits.build_system(args.k, alg, args.max_k)
    if args.format == "json":
        units = [
            {"p": _path_json(p), "q": _path_json(q), "element": _element_json(u)}
            for (p, q), u in system.units.items()
        ]
        head = {"k": args.k, "n": "n" if alg.symbolic else _coeff_str(alg.param)}
        head["blocks"] = [{"shape": list(mu), "size": len(ps)} for mu, ps in system.blocks.items()]
        head["units"] = units
        return json.dumps(head)
    lines = [f"k = {args.k}, n = {'n' if alg.symbolic else _coeff_str(alg.param)}"]
    for mu, ps in system.blocks.items():
        lines.append(f"block {list(mu)}: {len(ps)} paths")
    for (p, q), u in system.units.items():
        lines.append(f"e[{_path_json(p)}, {_path_json(q)}] = {_element_text(u)}")
    return "\n".join(lines)


def cmd_table(args) -> str:
    if args.verify:
        rng = random.Random(args.seed)
        alg = _algebra(args, rng)
        system = hrunits.build_system(args.k, alg, args.max_k)
        if args.mode == "symbolic":
            table = monoid.multiplication_table(args.k, system, True, args.max_k)
        else:
            basis = monoid.monoid_basis(args.k, system, args.max_k)
            bad = monoid.closure_check_randomized(basis, rng)
            if bad:
                raise VerificationFailure(
                    {"check": "table", "inputs": {"row": str(bad[0]), "n": _coeff_str(alg.param)},
                     "expected": "rule product", "got": "different algebra product"}
                )
            table = monoid.rule_table(args.k, args.max_k)
    else:
        table = monoid.rule_table(args.k, args.max_k)
    if args.format == "json":
        return json.dumps(table)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow([""] + list(range(1, len(table) + 1)))
    for i, row in enumerate(table, start=1):
        w.writerow([i] + row)
    return buf.getvalue().rstrip("\n")


def cmd_matrix(args) -> str:
    rng = random.Random(args.seed)
    alg = _algebra(args, rng)
    system = hrunits.build_system(args.k, alg, args.max_k)
    m = monoid.transition_matrix(args.k, system, args.max_k)
    cells = [[_coeff_str(c) for c in row] for row in m]
    if args.format == "json":
        return json.dumps({"k": args.k, "n": "n" if alg.symbolic else _coeff_str(alg.param),
                           "determinant": _coeff_str(monoid.determinant(m)), "rows": cells})
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    for row in cells:
        w.writerow(row)
    return buf.getvalue().rstrip("\n")


# ---------------------------------------------------------------------------
# verification suite


def _fail(check, inputs, expected, got):
    raise VerificationFailure({"check": check, "inputs": inputs, "expected": expected, "got": got})


def _fixture(name: str) -> str:
    return resources.files("parmon.fixtures").joinpath(name).read_text()


def verify_structure(k: int, max_k: int) -> list:
    """Checks that do not need the matrix units."""
    done = []
    counts = bratteli.dimension_decomposition(k)
    total = sum(c * c for c in counts.values())
    if total != bell(2 * k):
        _fail("dimension", {"k": k}, bell(2 * k), total)
    done.append("dimension")

    for m in range(1, k + 1):
        for shape in young.partitions(m):
            f = young.num_syt(shape)
            for i in range(1, f + 1):
                for j in range(1, f + 1):
                    for r in range(1, f + 1):
                        for s in range(1, f + 1):
                            got = young.gmul(young.young_unit_group(shape, i, j), young.young_unit_group(shape, r, s))
                            exp = young.young_unit_group(shape, i, s) if j == r else {}
                            if got != exp:
                                _fail("young", {"shape": list(shape), "i": i, "j": j, "r": r, "s": s}, "unit rule", "mismatch")
    done.append("young")

    diagrams = enumerate_diagrams(k, max_k)
    for d in diagrams:
        t1, t2 = bijections.diagram_rsk(d)
        if bijections.diagram_rsk_inverse(t1, t2) != d:
            _fail("rsk_roundtrip", {"diagram": str(d)}, str(d), "different diagram")
        p, q = bijections.diagram_to_pair(d)
        if p[-1] != q[-1]:
            _fail("pair_shape", {"diagram": str(d)}, "equal final partitions", [list(p[-1]), list(q[-1])])
    for t in bijections.enumerate_spt(k):
        if bijections.bh_inverse(bijections.bh_forward(t)) != t:
            _fail("bh_roundtrip", {"tableau": t.to_json()}, t.to_json(), "different tableau")
    done.append("bijections")

    rng = random.Random(0)
    idx = list(diagrams)
    triples = (
        [(a, b, c) for a in idx for b in idx for c in idx]
        if k <= 2
        else [(rng.choice(idx), rng.choice(idx), rng.choice(idx)) for _ in range(10**4)]
    )
    rp = monoid.rule_product
    for a, b, c in triples:
        if rp(rp(a, b), c) != rp(a, rp(b, c)):
            _fail("associativity", {"a": str(a), "b": str(b), "c": str(c)}, str(rp(a, rp(b, c))), str(rp(rp(a, b), c)))
    one, z = identity(k), reverse(k)
    for a in idx:
        if rp(one, a) != a or rp(a, one) != a:
            _fail("identity_law", {"a": str(a)}, str(a), "different diagram")
        # at k = 1 the reverse diagram is the identity and has no absorbing role
        if z != one and (rp(z, a) != z or rp(a, z) != z):
            _fail("absorbing_law", {"a": str(a)}, str(z), "different diagram")
    done.append("monoid_axioms")
    return done


def verify_system(k: int, alg: PartitionAlgebra, rng: random.Random, max_k: int) -> list:
    done = []
    system = hrunits.build_system(k, alg, max_k)
    if hrunits.completeness_defect(system):
        _fail("completeness", {"k": k}, "sum of diagonal units = one", "different element")
    bad = hrunits.check_axioms(system) if alg.symbolic else hrunits.check_axioms_randomized(system, rng)
    if bad:
        _fail("matrix_units", {"k": k, "key": repr(bad[0])}, "unit rule", "mismatch")
    done.append("matrix_units")

    basis = monoid.monoid_basis(k, system, max_k)
    if alg.symbolic:
        try:
            monoid.multiplication_table(k, system, True, max_k)
        except monoid.RuleMismatch as e:
            _fail("closure", {"k": k}, "rule product", str(e))
    else:
        bad = monoid.closure_check_randomized(basis, rng)
        if bad:
            _fail("closure", {"k": k, "row": str(bad[0]), "n": _coeff_str(alg.param)}, "rule product", "mismatch")
    done.append("closure")

    m = [[basis[a].coeff(d) for d in basis.elements] for a in basis.elements]
    det = monoid.determinant(m)
    if not det:
        _fail("invertible", {"k": k}, "nonzero determinant", "0")
    done.append("invertible")

    if k == 2 and alg.symbolic:
        fixture = [[int(x) for x in row[1:]] for row in list(csv.reader(io.StringIO(_fixture("k2_multiplication_table.csv"))))[1:]]
        table = monoid.rule_table(2)
        if table != fixture:
            _fail("reference_table", {"k": 2}, fixture, table)
        ref = json.loads(_fixture("k2_transition_matrix.json"))
        diagrams = list(basis.elements)
        for i, d in enumerate(diagrams):
            p, q = bijections.diagram_to_pair(d)
            if p != q:
                continue
            exp = [parse_rf(c) for c in ref["rows"][i]]
            if m[i] != exp:
                _fail("reference_matrix_row", {"row": i + 1}, ref["rows"][i], [_coeff_str(c) for c in m[i]])
        done.append("reference_data")
    return done


def cmd_verify(args) -> str:
    t0 = time.time()
    done = verify_structure(args.k, args.max_k)
    rng = random.Random(args.seed)
    if args.mode == "symbolic":
        done += verify_system(args.k, PartitionAlgebra(args.k), rng, args.max_k)
    else:
        for t in range(args.trials):
            n = monoid.random_parameter(rng, args.k)
            done += [f"{c}@{_coeff_str(n)}" for c in verify_system(args.k, PartitionAlgebra(args.k, n), rng, args.max_k)]
    lines = [f"ok {c}" for c in done]
    lines.append(f"all {len(done)} checks passed for k = {args.k} in {time.time() - t0:.1f}s")
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# entry point


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="parmon", description="Monoid bases of partition algebras.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, formats, default_format):
        p.add_argument("--k", type=int, required=True)
        p.add_argument("--max-k", type=int, default=DEFAULT_MAX_K)
        p.add_argument("--format", choices=formats, default=default_format)
        p.add_argument("--out", default=None)
        p.add_argument("--mode", choices=["symbolic", "randomized"], default="symbolic")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--trials", type=int, default=1)

    p = sub.add_parser("enumerate", help="list diagrams, vacillating tableaux or set-partition tableaux")
    common(p, ["text", "json"], "text")
    p.add_argument("--what", choices=["diagrams", "vt", "spt"], required=True)
    p.add_argument("--end", default=None, help="final partition as a JSON list, e.g. '[1]'")
    p.add_argument("--level", default=None, help="level for --what vt (default k)")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("units", help="dump the matrix units")
    common(p, ["text", "json"], "json")
    p.set_defaults(func=cmd_units)

    p = sub.add_parser("table", help="emit the monoid multiplication table")
    common(p, ["csv", "json"], "csv")
    p.add_argument("--no-verify", dest="verify", action="store_false", help="skip the algebraic cross-check")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("matrix", help="emit the transition matrix to the diagram basis")
    common(p, ["csv", "json"], "json")
    p.set_defaults(func=cmd_matrix)

    p = sub.add_parser("verify", help="run the verification suite")
    common(p, ["text"], "text")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.k < 1:
            raise UsageError("--k must be positive")
        if args.trials < 1:
            raise UsageError("--trials must be at least 1")
        if args.k > args.max_k:
            raise ResourceLimit(f"k = {args.k} exceeds the limit {args.max_k}; raise --max-k to override")
        text = args.func(args)
    except VerificationFailure as e:
        print(json.dumps(e.report, default=str), file=sys.stderr)
        return 1
    except ParmonError as e:
        if isinstance(e, (UsageError, ResourceLimit, InvalidVertex)):
            print(f"parmon: error: {e}", file=sys.stderr)
            return 2
        print(json.dumps({"check": args.command, "inputs": vars_for_report(args), "expected": "success", "got": str(e)}), file=sys.stderr)
        return 1
    if args.out:
        with open(args.out, "w") as f:
            f.write(text + "\n")
    else:
        print(text)
    return 0


def vars_for_report(args) -> dict:
    return {k: v for k, v in vars(args).items() if k != "func"}


if __name__ == "__main__":
    sys.exit(main())
