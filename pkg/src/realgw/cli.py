"""Command-line entry point.

Subcommands: transform, invert, coeff, sign, dim, graph-check, verify,
schema.  All numeric output is exact (rationals as p/q strings), JSON goes
to stdout with sorted keys so identical inputs give byte-identical output.
Exit codes: 0 success, 1 domain or input error (structured JSON on stderr),
2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Callable

from . import graphs, multicover, schemas, signs, verify
from .multicover import Convention, InvariantVector
from .series import format_rational
from .signs import RelSpinVariant, Route


def _emit(doc) -> None:
    sys.stdout.write(json.dumps(doc, sort_keys=True, indent=2) + "\n")


def _fail(doc) -> int:
    sys.stderr.write(json.dumps(doc, sort_keys=True) + "\n")
    return 1


def _read_input_doc(args) -> dict:
    if getattr(args, "infile", None):
        with open(args.infile, "r", encoding="utf-8") as handle:
            text = handle.read()
    else:
        text = sys.stdin.read()
    doc = json.loads(text)
    if not isinstance(doc, dict):
        raise ValueError("input document must be a JSON object")
    return doc


def _parse_kv(text: str | None, what: str) -> dict[str, str]:
    params: dict[str, str] = {}
    if not text:
        return params
    for chunk in text.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        if "=" not in chunk:
            raise ValueError(f"{what} entries must look like key=value, got {chunk!r}")
        key, value = chunk.split("=", 1)
        params[key.strip()] = value.strip()
    return params


class _Params:
    """Typed access to --params key=value pairs with leftover detection."""

    def __init__(self, raw: dict[str, str], predicate: str):
        self.raw = dict(raw)
        self.predicate = predicate

    def take_int(self, name: str) -> int:
        if name not in self.raw:
            raise ValueError(f"{self.predicate} needs --params {name}=<int>")
        value = self.raw.pop(name)
        try:
            return int(value)
        except ValueError:
            raise ValueError(f"{self.predicate}: {name} must be an integer, got {value!r}")

    def take_opt_int(self, name: str) -> int | None:
        if name not in self.raw:
            return None
        return self.take_int(name)

    def take_str(self, name: str, default: str | None = None) -> str:
        if name not in self.raw:
            if default is None:
                raise ValueError(f"{self.predicate} needs --params {name}=...")
            return default
        return self.raw.pop(name)

    def take_bool(self, name: str, default: bool = False) -> bool:
        if name not in self.raw:
            return default
        value = self.raw.pop(name).lower()
        if value in ("true", "1", "yes"):
            return True
        if value in ("false", "0", "no"):
            return False
        raise ValueError(f"{self.predicate}: {name} must be true or false, got {value!r}")

    def route(self) -> Route:
        return Route.from_string(self.take_str("variant", "projection"))

    def done(self) -> None:
        if self.raw:
            raise ValueError(
                f"{self.predicate}: unknown params {sorted(self.raw)}"
            )


def _sign_cvc(p: _Params):
    g, k, d = p.take_int("g"), p.take_int("k"), p.take_int("d")
    p.done()
    return signs.cvc_parity(g, k, d)


def _sign_conj_pullback(p: _Params):
    g, k, d = p.take_int("g"), p.take_int("k"), p.take_int("d")
    p.done()
    return signs.conj_pullback_parity(g, k, d)


def _sign_union_determinant(p: _Params):
    args = (p.take_int("g1"), p.take_int("g2"), p.take_int("k"),
            p.take_int("d1"), p.take_int("d2"), p.route())
    p.done()
    return signs.union_determinant(*args)


def _sign_doublet_determinant(p: _Params):
    args = (p.take_int("g"), p.take_int("k"), p.take_int("d2"), p.route())
    p.done()
    return signs.doublet_determinant(*args)


def _sign_conj_node_determinant(p: _Params):
    args = (p.take_int("k"), p.route())
    p.done()
    return signs.conj_node_determinant(*args)


def _sign_e_node_determinant(p: _Params):
    args = (p.take_int("g"), p.take_int("k"), p.take_int("d"), p.route())
    p.done()
    return signs.e_node_determinant(*args)


def _sign_union_induced(p: _Params):
    args = (p.take_int("g1"), p.take_int("g2"),
            p.take_int("d1"), p.take_int("d2"), p.route())
    p.done()
    return signs.union_induced(*args)


def _sign_doublet_induced(p: _Params):
    args = (p.take_int("g"), p.take_int("d2"), p.route())
    p.done()
    return signs.doublet_induced(*args)


def _sign_conj_node_induced(p: _Params):
    route = p.route()
    p.done()
    return signs.conj_node_induced(route)


def _sign_e_node_induced(p: _Params):
    args = (p.take_int("g"), p.take_int("d"), p.route())
    p.done()
    return signs.e_node_induced(*args)


def _sign_relspin(p: _Params):
    deg_v = p.take_int("degv")
    variant = RelSpinVariant.from_string(p.take_str("variant"))
    p.done()
    return signs.relspin_determinant(deg_v, variant)


def _sign_union_moduli(p: _Params):
    args = (p.take_int("n"), p.take_int("g1"), p.take_int("g2"),
            p.take_int("c1b1"), p.take_int("c1b2"), p.route())
    p.done()
    return signs.union_moduli(*args)


def _sign_doublet_moduli(p: _Params):
    g = p.take_int("g")
    s_minus = p.take_int("sminus")
    route = p.route()
    c1l_phi_b = p.take_opt_int("c1lphib")
    p.done()
    return signs.doublet_moduli(g, s_minus, route, c1l_phi_b)


def _sign_conj_node_moduli(p: _Params):
    route = p.route()
    p.done()
    return signs.conj_node_moduli(route)


def _sign_e_node_moduli(p: _Params):
    args = (p.take_int("g"), p.take_int("c1b"), p.route())
    p.done()
    return signs.e_node_moduli(*args)


def _sign_relspin_moduli(p: _Params):
    c1b = p.take_int("c1b")
    variant = RelSpinVariant.from_string(p.take_str("variant"))
    orientable = p.take_bool("orientable")
    p.done()
    return signs.relspin_moduli(c1b, variant, orientable_fixed_line=orientable)


def _sign_forget_boundary(p: _Params):
    side = p.take_str("side")
    route = Route.from_string(p.take_str("variant", "projection"))
    p.done()
    return signs.forget_boundary_sign(side, route)


SIGN_PREDICATES: dict[str, Callable[[_Params], signs.Comparison]] = {
    "cvc-parity": _sign_cvc,
    "conj-pullback-parity": _sign_conj_pullback,
    "union-determinant": _sign_union_determinant,
    "doublet-determinant": _sign_doublet_determinant,
    "conj-node-determinant": _sign_conj_node_determinant,
    "e-node-determinant": _sign_e_node_determinant,
    "union-induced": _sign_union_induced,
    "doublet-induced": _sign_doublet_induced,
    "conj-node-induced": _sign_conj_node_induced,
    "e-node-induced": _sign_e_node_induced,
    "relspin": _sign_relspin,
    "union-moduli": _sign_union_moduli,
    "doublet-moduli": _sign_doublet_moduli,
    "conj-node-moduli": _sign_conj_node_moduli,
    "e-node-moduli": _sign_e_node_moduli,
    "relspin-moduli": _sign_relspin_moduli,
    "forget-boundary": _sign_forget_boundary,
}


def _cmd_coeff(args) -> int:
    convention = Convention.from_string(args.conv)
    value = multicover.multicover_coefficient(args.h, args.c1b, args.g, convention)
    _emit({"value": format_rational(value)})
    return 0


def _cmd_dim(args) -> int:
    descriptor = signs.ModuliDescriptor(g=args.g, ell=args.ell, n=args.n, c1b=args.c1b)
    _emit({"dim": signs.virtual_dimension(descriptor)})
    return 0


def _cmd_sign(args) -> int:
    if args.predicate not in SIGN_PREDICATES:
        raise ValueError(
            f"unknown predicate {args.predicate!r}; known: "
            + ", ".join(sorted(SIGN_PREDICATES))
        )
    params = _Params(_parse_kv(args.params, "--params"), args.predicate)
    comparison = SIGN_PREDICATES[args.predicate](params)
    _emit(
        {
            "preserves": comparison.preserves,
            "sign": comparison.sign,
            "condition": comparison.condition,
        }
    )
    return 0


def _vector_from_doc(doc: dict, key: str) -> tuple[InvariantVector, Convention]:
    for required in ("c1B", "convention", key):
        if required not in doc:
            raise ValueError(f"input document is missing {required!r}")
    if not isinstance(doc["c1B"], int):
        raise ValueError("c1B must be an integer")
    convention = Convention.from_string(doc["convention"])
    mapping = doc[key]
    if not isinstance(mapping, dict):
        raise ValueError(f"{key!r} must be an object of genus -> p/q strings")
    max_genus = doc.get("max_genus")
    vector = InvariantVector.from_string_map(mapping, doc["c1B"], max_genus)
    return vector, convention


def _cmd_transform(args) -> int:
    doc = _read_input_doc(args)
    counts, convention = _vector_from_doc(doc, "E")
    gw = multicover.forward_transform(counts, convention)
    _emit(
        {
            "c1B": gw.c1b,
            "convention": convention.value,
            "gw": gw.to_string_map(),
        }
    )
    return 0


def _cmd_invert(args) -> int:
    doc = _read_input_doc(args)
    gw, convention = _vector_from_doc(doc, "gw")
    counts = multicover.invert_transform(gw, convention)
    violations = multicover.integrality_check(counts)
    _emit(
        {
            "E": counts.to_string_map(),
            "c1B": counts.c1b,
            "convention": convention.value,
            "integral": not violations,
            "violations": [
                [genus, format_rational(value)] for genus, value in violations
            ],
        }
    )
    return 0


def _parse_seed_range(text: str) -> range:
    if ".." in text:
        lo, hi = text.split("..", 1)
        try:
            return range(int(lo), int(hi) + 1)
        except ValueError:
            raise ValueError(f"--seeds must look like A..B, got {text!r}")
    try:
        n = int(text)
    except ValueError:
        raise ValueError(f"--seeds must look like A..B or N, got {text!r}")
    return range(1, n + 1)


def _bounds_from_kv(text: str | None) -> graphs.GraphBounds:
    raw = _parse_kv(text, "--bounds")
    fields = {f for f in graphs.GraphBounds.__dataclass_fields__}
    kwargs = {}
    for key, value in raw.items():
        if key not in fields:
            raise ValueError(
                f"unknown bound {key!r}; known: {', '.join(sorted(fields))}"
            )
        try:
            kwargs[key] = int(value)
        except ValueError:
            raise ValueError(f"bound {key} must be an integer, got {value!r}")
    return graphs.GraphBounds(**kwargs)


def _check_one_graph(graph: graphs.DecoratedGraph) -> dict:
    result = graphs.congruence_identity_check(graph)
    g, d = graphs.derive_genus_degree(graph)
    return {
        "holds": result.holds,
        "lhs": result.lhs,
        "rhs": result.rhs,
        "genus": g,
        "degree": d,
    }


def _cmd_graph_check(args) -> int:
    if args.infile:
        doc = _read_input_doc(args)
        graph = graphs.graph_from_json_dict(doc)
        outcome = _check_one_graph(graph)
        _emit(outcome)
        return 0 if outcome["holds"] else 1

    seeds = _parse_seed_range(args.seeds)
    bounds = _bounds_from_kv(args.bounds)
    passed = failed = 0
    first_counterexample = None
    for seed in seeds:
        graph = graphs.generate_random_graph(seed, bounds)
        result = graphs.congruence_identity_check(graph)
        if result.holds:
            passed += 1
        else:
            failed += 1
            if first_counterexample is None:
                first_counterexample = {
                    "seed": seed,
                    "lhs": result.lhs,
                    "rhs": result.rhs,
                    "graph": graphs.graph_to_json_dict(graph),
                }
    _emit(
        {
            "checked": len(seeds),
            "passed": passed,
            "failed": failed,
            "first_counterexample": first_counterexample,
        }
    )
    return 0 if failed == 0 else 1


def _cmd_verify(args) -> int:
    if args.identity and args.all:
        raise ValueError("pass either --all or one identity id, not both")
    identity_ids = None if (args.all or not args.identity) else [args.identity]
    reports = verify.run_checks(identity_ids)
    _emit([r.to_json_dict() for r in reports])
    return 0 if all(r.holds for r in reports) else 1


def _cmd_schema(args) -> int:
    _emit(schemas.SCHEMAS[args.kind])
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="realgw",
        description=(
            "Exact sign calculus, localization-graph congruences and the "
            "multiple-cover transform for real Gromov-Witten invariants."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("coeff", help="one multiple-cover coefficient")
    p.add_argument("--h", type=int, required=True, help="embedded-curve genus h")
    p.add_argument("--c1b", type=int, required=True, help="even pairing <c1,B>")
    p.add_argument("--g", type=int, required=True, help="cover genus shift g")
    p.add_argument("--conv", default="sinh", help="sinh or sin")
    p.set_defaults(func=_cmd_coeff)

    p = sub.add_parser("dim", help="virtual dimension of a real map moduli space")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--c1b", type=int, required=True)
    p.set_defaults(func=_cmd_dim)

    p = sub.add_parser("sign", help="evaluate one orientation-comparison predicate")
    p.add_argument("predicate", help=", ".join(sorted(SIGN_PREDICATES)))
    p.add_argument("--params", default="", help="comma-separated key=value pairs")
    p.set_defaults(func=_cmd_sign)

    p = sub.add_parser("transform", help="integer counts E -> GW invariants")
    p.add_argument("--in", dest="infile", default=None, help="JSON file (default stdin)")
    p.set_defaults(func=_cmd_transform)

    p = sub.add_parser("invert", help="GW invariants -> integer counts E")
    p.add_argument("--in", dest="infile", default=None, help="JSON file (default stdin)")
    p.set_defaults(func=_cmd_invert)

    p = sub.add_parser(
        "graph-check", help="fuzz the localization-graph sign congruence"
    )
    p.add_argument("--seeds", default="1..1000", help="seed range A..B (or a count N)")
    p.add_argument("--bounds", default="", help="generator caps as key=value pairs")
    p.add_argument(
        "--in", dest="infile", default=None, help="check one explicit graph document"
    )
    p.set_defaults(func=_cmd_graph_check)

    p = sub.add_parser("verify", help="run the derivation identity suite")
    p.add_argument("identity", nargs="?", default=None,
                   help=", ".join(verify.ALL_CHECKS))
    p.add_argument("--all", action="store_true", help="run every identity")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("schema", help="print a wire-format schema")
    p.add_argument("kind", choices=sorted(schemas.SCHEMAS))
    p.set_defaults(func=_cmd_schema)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except json.JSONDecodeError as exc:
        return _fail(
            {
                "error": f"malformed JSON: {exc.msg}",
                "line": exc.lineno,
                "column": exc.colno,
            }
        )
    except FileNotFoundError as exc:
        return _fail({"error": f"cannot read input: {exc}"})
    except (ValueError, ZeroDivisionError) as exc:
        return _fail({"error": str(exc)})


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
