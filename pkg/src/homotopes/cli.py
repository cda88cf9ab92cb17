"""Command-line front end.

Every command prints one JSON report: the command, a digest of its inputs,
the arithmetic mode, the package version and the result. Exit status is 0 on
success, 1 on a domain error and 2 on unparsable input or bad usage.
"""
import argparse
import hashlib
import json
import sys
from fractions import Fraction

from . import __version__
from .errors import DomainError
from .scalars import LiteralError, format_scalar, parse_scalar


class InputError(Exception):
    """Unreadable or malformed input (exit status 2)."""


COMMANDS = {
    "graph": ["basis", "mul", "psi"],
    "laplacian": ["det", "strata", "corank"],
    "snf": [],
    "config": ["check", "sclass", "minimalize", "from-character", "dualize"],
    "hadamard": ["check", "involution", "dephase", "cartan"],
    "mub": ["check", "family"],
    "homotope": ["build", "well-tempered", "quiver", "ext1"],
    "perverse": ["disc", "z-check", "sphere"],
}


def _common(p):
    p.add_argument("--graph", metavar="FILE", help="graph description (JSON)")
    p.add_argument("--matrix", metavar="FILE", help="matrix description (JSON)")
    p.add_argument("--config", metavar="FILE", help="projector configuration (JSON)")
    p.add_argument("--s", metavar="LIST", help="comma-separated edge parameters")
    p.add_argument("--chi", metavar="LIST", help="comma-separated character values")
    p.add_argument("--n", type=int)
    p.add_argument("--p", type=int)
    p.add_argument("--max-len", type=int, default=2)
    p.add_argument("--mode", choices=["exact", "approx"], default="exact")
    p.add_argument("--eps", default="1/10000000000", metavar="RATIONAL")
    p.add_argument("--pretty", action="store_true", help="human-readable output")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--a", metavar="PATH", help="first path, comma-separated vertices")
    p.add_argument("--b", metavar="PATH", help="second path, comma-separated vertices")
    p.add_argument("--which", type=int, choices=[1, 2], default=1)
    p.add_argument("--at", metavar="SCALAR", help="evaluation point for corank")
    p.add_argument("--corank", type=int, help="corank of a diagonal Delta in Mat_n")
    p.add_argument("--algebra", choices=["matrix", "product"], default="matrix")
    p.add_argument("--n-disc", type=int)
    p.add_argument("--n-cyc", type=int)


def build_parser():
    parser = argparse.ArgumentParser(prog="homotopes", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    top = parser.add_subparsers(dest="group", required=True)
    for group, verbs in COMMANDS.items():
        gp = top.add_parser(group)
        if verbs:
            sub = gp.add_subparsers(dest="verb", required=True)
            for verb in verbs:
                _common(sub.add_parser(verb))
        else:
            _common(gp)
            gp.set_defaults(verb=None)
    return parser


# -- input helpers -----------------------------------------------------------------

def _read_json(path):
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return json.loads(text), text
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON ({exc.msg})") from None


def _need(args, name):
    value = getattr(args, name.replace("-", "_"))
    if value is None:
        raise InputError(f"--{name} is required for this command")
    return value


def _scalars(text, conductor=None):
    try:
        return [parse_scalar(t.strip(), conductor=conductor) for t in text.split(",") if t.strip()]
    except LiteralError as exc:
        raise InputError(str(exc)) from None


def _entry(v, conductor=None):
    try:
        return parse_scalar(str(v), conductor=conductor)
    except LiteralError as exc:
        raise InputError(str(exc)) from None


def _fraction(text):
    v = _scalars(text)
    if len(v) != 1 or not isinstance(v[0], Fraction):
        raise InputError(f"expected a rational number, got {text!r}")
    return v[0]


class Context:
    def __init__(self, args):
        self.args = args
        self.files = {}
        self.conductor = None

    def json(self, flag):
        path = _need(self.args, flag)
        data, text = _read_json(path)
        self.files[flag] = hashlib.sha256(text.encode()).hexdigest()
        return data

    def graph(self):
        from .graph import GraphError, from_dict
        data = self.json("graph")
        try:
            g = from_dict(data)
        except (GraphError, LiteralError) as exc:
            raise InputError(f"bad graph: {exc}") from None
        if self.args.s is not None:
            values = _scalars(self.args.s)
            if len(values) != len(g.edges):
                raise InputError(f"--s needs {len(g.edges)} values, got {len(values)}")
            g = g.with_params({g.edge_label(k): v for k, v in
                               enumerate(_edge_values_in_file_order(g, data, values))})
        return g

    def path(self, g, flag):
        text = _need(self.args, flag)
        names = {str(v): v for v in g.vertices}
        out = []
        for t in text.split(","):
            t = t.strip()
            if t not in names:
                raise InputError(f"unknown vertex {t!r} in --{flag}")
            out.append(names[t])
        return out

    def digest(self):
        args = {k: v for k, v in sorted(vars(self.args).items()) if k != "pretty"}
        for k in ("graph", "matrix", "config"):
            if k in self.files:
                args[k] = self.files[k]
        blob = json.dumps(args, sort_keys=True, default=str)
        return hashlib.sha256(blob.encode()).hexdigest()


def _edge_values_in_file_order(g, data, values):
    """Values of --s are listed in the order edges appear in the file; return
    them in the graph's internal edge order."""
    order = {}
    for pos, e in enumerate(data.get("edges", [])):
        i, j = sorted(g.dense((e["u"], e["v"])))
        order[g.edge_id[i, j]] = pos
    return [values[order[k]] for k in range(len(g.edges))]


def _path_ids(g, dense):
    return list(g.ids(dense))


def _matrix_strings(rows):
    return [[format_scalar(v) for v in r] for r in rows]


# -- commands ----------------------------------------------------------------------

def cmd_graph(ctx, verb):
    from . import balgebra
    from .graph import enumerate_contracted_dense
    args = ctx.args
    g = ctx.graph()
    if verb == "basis":
        paths = enumerate_contracted_dense(g, args.max_len)
        return {"max_len": args.max_len, "count": len(paths),
                "paths": [_path_ids(g, p) for p in paths]}
    if verb == "mul":
        if args.a is None and args.b is None:
            table = balgebra.multiplication_table(g, args.max_len)
            return {"max_len": args.max_len, "nonzero_products": len(table),
                    "table": [{"a": _path_ids(g, a), "b": _path_ids(g, b),
                               "product": _path_ids(g, r), "coefficient": format_scalar(c)}
                              for a, b, r, c in table]}
        a = balgebra.x(g, *ctx.path(g, "a"))
        b = balgebra.x(g, *ctx.path(g, "b"))
        return {"a": str(a), "b": str(b), "product": str(a * b)}
    if verb == "psi":
        a = balgebra.x(g, *ctx.path(g, "a"))
        return {"which": args.which, "element": str(a), "image": str(balgebra.psi(args.which, a))}
    raise InputError(f"unknown verb {verb}")


def _cycle_order(g):
    """Vertex order around a cycle graph, starting at the first vertex."""
    if g.n < 3 or len(g.edges) != g.n or any(g.degree(i) != 2 for i in range(g.n)) \
            or not g.is_connected():
        raise DomainError("graph is not a simple cycle")
    order = [0]
    prev = None
    while len(order) < g.n:
        cur = order[-1]
        nxt = [j for j in g.neighbors[cur] if j != prev]
        nxt = min(nxt)
        prev = cur
        order.append(nxt)
    return order


def cmd_laplacian(ctx, verb):
    from .groupoid import laplacian, to_matrix
    from .laurent_linalg import corank_at, cyclic_strata, det
    from . import linalg
    from .graph import cycle_basis
    args = ctx.args
    g = ctx.graph()
    if g.is_symbolic() and verb != "det":
        raise DomainError("edge parameters must be numeric (use --s)")
    if verb == "strata":
        order = _cycle_order(g)
        s = [g.s(order[k], order[(k + 1) % g.n]) for k in range(g.n)]
        rep = cyclic_strata(g.n, s)
        out = rep.to_dict()
        out["cycle"] = [g.vertices[i] for i in order]
        return out
    basis = cycle_basis(g)
    m = to_matrix(laplacian(g), basis)
    if verb == "det":
        return {"variables": basis.variables(), "matrix": m.to_strings(), "det": str(det(m))}
    if verb == "corank":
        if args.at is not None:
            if basis.rank != 1:
                raise DomainError("--at needs a graph with one independent cycle; use --chi")
            x0 = _scalars(args.at)
            if len(x0) != 1:
                raise InputError("--at takes one scalar")
            return {"at": format_scalar(x0[0]), "corank": corank_at(m, x0[0])}
        chi = _scalars(_need(args, "chi"))
        if len(chi) != basis.rank:
            raise InputError(f"--chi needs {basis.rank} values, got {len(chi)}")
        if any(v == 0 for v in chi):
            raise DomainError("character values must be nonzero")
        ev = m.evaluate(dict(zip(basis.variables(), chi)))
        return {"chi": [format_scalar(v) for v in chi], "corank": g.n - linalg.rank(ev)}
    raise InputError(f"unknown verb {verb}")


def _laurent_matrix(ctx):
    from .laurent_linalg import LaurentMatrix
    data = ctx.json("matrix")
    try:
        return LaurentMatrix.from_dict(data)
    except (ValueError, KeyError, TypeError) as exc:
        raise InputError(f"bad matrix: {exc}") from None


def cmd_snf(ctx, verb):
    from .laurent_linalg import smith_normal_form
    m = _laurent_matrix(ctx)
    res = smith_normal_form(m)
    return {"variable": res.var, "factors": [str(f) for f in res.factors],
            "torsion": [str(f) for f in res.torsion()], "free_rank": res.free_rank(),
            "U": res.U.to_strings(), "V": res.V.to_strings()}


def cmd_config(ctx, verb):
    from . import configurations as cf
    args = ctx.args
    g = ctx.graph()
    if verb == "from-character":
        chi = _scalars(_need(args, "chi"))
        c = cf.from_character(g, chi)
        out = cf_report(c)
        out["sclass"] = [format_scalar(v) for v in cf.sclass(c)]
        return out
    data = ctx.json("config")
    try:
        c = cf.config_from_dict(g, data, conductor=data.get("conductor"))
    except (LiteralError, KeyError, TypeError) as exc:
        raise InputError(f"bad configuration: {exc}") from None
    if verb == "check":
        return cf.check_config(c)
    if verb == "sclass":
        if g.is_symbolic():
            raise DomainError("S invariants need numeric edge parameters")
        return {"sclass": [format_scalar(v) for v in cf.sclass(c)]}
    if verb == "minimalize":
        return cf_report(cf.minimalize(c), data.get("conductor"))
    if verb == "dualize":
        return cf_report(cf.dualize(c), data.get("conductor"))
    raise InputError(f"unknown verb {verb}")


def cf_report(c, conductor=None):
    out = c.to_dict()
    if conductor:
        out["conductor"] = conductor
    return out


def _scalar_matrix(ctx):
    data = ctx.json("matrix")
    rows = data.get("rows") if isinstance(data, dict) else None
    if not isinstance(rows, list):
        raise InputError("matrix file needs a 'rows' list")
    conductor = data.get("conductor")
    ctx.conductor = conductor
    if ctx.args.mode == "approx":
        try:
            return [[complex(str(v).replace(" ", "").replace("i", "j")) for v in r] for r in rows]
        except ValueError:
            pass
    out = [[_entry(v, conductor) for v in r] for r in rows]
    if ctx.args.mode == "approx":
        out = [[complex(v) for v in r] for r in out]
    return out


def cmd_hadamard(ctx, verb):
    from . import hadamard as hd
    args = ctx.args
    a = _scalar_matrix(ctx)
    eps = float(_fraction(args.eps)) if args.mode == "approx" else None
    if verb == "check":
        out = {"generalized_hadamard": hd.is_generalized_hadamard(a, eps),
               "complex_hadamard": hd.is_complex_hadamard(a, eps),
               "convention": "modulus 1 entries"}
        if eps is None:
            out["h_equals_inverse"] = hd.involution_inverse_check(a)
        return out
    if args.mode == "approx":
        raise DomainError(f"hadamard {verb} is exact only")
    conductor = ctx.conductor
    if verb == "involution":
        return {"conductor": conductor, "h": _matrix_strings(hd.hadamard_involution(a))}
    if verb == "dephase":
        return {"conductor": conductor, "dephased": _matrix_strings(hd.dephase(a))}
    if verb == "cartan":
        return {"cartan_pair": hd.cartan_pair_check(a),
                "generalized_hadamard": hd.is_generalized_hadamard(a)}
    raise InputError(f"unknown verb {verb}")


def cmd_mub(ctx, verb):
    from . import hadamard as hd
    args = ctx.args
    if verb == "family":
        fam = hd.prime_mub_family(_need(args, "p"))
        ok = hd.mub_check(fam)
        return {"p": args.p, "conductor": 4 if args.p == 2 else args.p, "count": len(fam),
                "bases": [_matrix_strings(b) for b in fam],
                "mub_check": "pass" if ok else "fail"}
    data = ctx.json("matrix")
    bases = data.get("bases") if isinstance(data, dict) else None
    if not isinstance(bases, list):
        raise InputError("MUB file needs a 'bases' list")
    conductor = data.get("conductor")
    fam = [[[_entry(v, conductor) for v in vec] for vec in b] for b in bases]
    eps = None
    if args.mode == "approx":
        eps = float(_fraction(args.eps))
        fam = [[[complex(v) for v in vec] for vec in b] for b in fam]
    ok = hd.mub_check(fam, eps)
    return {"count": len(fam), "mub_check": "pass" if ok else "fail"}


def _homotope(ctx):
    from . import homotope as hm
    args = ctx.args
    if args.algebra == "product":
        n = _need(args, "n")
        a = hm.product_algebra(n)
        if args.chi is None:
            raise InputError("--chi gives Delta in the product algebra")
        delta = _scalars(args.chi)
        if len(delta) != n:
            raise InputError(f"Delta needs {n} coordinates")
        return hm.Homotope(a, delta), None
    if args.matrix is not None:
        data = ctx.json("matrix")
        rows = [[_entry(v) for v in r] for r in data.get("rows", [])]
        n = len(rows)
        if any(len(r) != n for r in rows) or n == 0:
            raise InputError("Delta must be a nonempty square rational matrix")
        if any(not isinstance(v, Fraction) for r in rows for v in r):
            raise InputError("Delta must have rational entries")
    else:
        n = _need(args, "n")
        k = args.corank or 0
        if not 0 <= k <= n:
            raise InputError("--corank must lie in 0..n")
        rows = [[Fraction(1 if i == j and i < n - k else 0) for j in range(n)] for i in range(n)]
    return hm.Homotope(hm.matrix_algebra(n), hm.matrix_to_vector(rows)), rows


def cmd_homotope(ctx, verb):
    from . import homotope as hm
    h, rows = _homotope(ctx)
    if verb == "build":
        alg = h.as_algebra(verify=h.dim <= 10)
        return {"dim_A": h.base.dim, "dim_B": h.dim,
                "delta": [format_scalar(v) for v in h.delta],
                "structure_constants": alg.to_dict()["products"],
                "split": h.split_idempotent() is not None}
    if verb == "well-tempered":
        return {"well_tempered": hm.is_well_tempered_findim(h),
                "span_rank": hm.products_span_rank(h), "dim_A": h.base.dim}
    if verb == "quiver":
        if rows is None:
            raise DomainError("quiver class needs a matrix algebra")
        return hm.quiver_class(rows).to_dict()
    if verb == "ext1":
        lhs, rhs = hm.ext1_dim_check(h)
        return {"ext1": lhs, "A_mod_DeltaA": rhs, "equal": lhs == rhs,
                "well_tempered": hm.is_well_tempered_findim(h)}
    raise InputError(f"unknown verb {verb}")


def cmd_perverse(ctx, verb):
    from . import perverse as pv
    from .laurent_linalg import det
    args = ctx.args
    if verb == "disc":
        n = _need(args, "n")
        d = pv.disc_operator(n)
        res = pv.disc_cokernel(n)
        return {"n": n, "matrix": d.to_strings(), "det": str(det(d)),
                "factors": [str(f) for f in res.factors],
                "torsion": [str(f) for f in res.torsion()]}
    if verb == "z-check":
        n = _need(args, "n")
        if n < 2:
            raise DomainError("n must be at least 2")
        return {"n": n, "z_relations": pv.z_relations_check(n)}
    if verb == "sphere":
        n_disc = _need(args, "n-disc")
        n_cyc = _need(args, "n-cyc")
        s = _scalars(_need(args, "s"))
        return {"n_disc": n_disc, "n_cyc": n_cyc, "s": [format_scalar(v) for v in s],
                "cokernels_isomorphic": pv.sphere_comparison(n_disc, n_cyc, s)}
    raise InputError(f"unknown verb {verb}")


HANDLERS = {
    "graph": cmd_graph, "laplacian": cmd_laplacian, "snf": cmd_snf, "config": cmd_config,
    "hadamard": cmd_hadamard, "mub": cmd_mub, "homotope": cmd_homotope,
    "perverse": cmd_perverse,
}


def _pretty(obj, indent=0):
    pad = "  " * indent
    lines = []
    if isinstance(obj, dict):
        for k, v in obj.items():
            if isinstance(v, (dict, list)) and v:
                lines.append(f"{pad}{k}:")
                lines.extend(_pretty(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {v}")
    elif isinstance(obj, list):
        for v in obj:
            if isinstance(v, list) and all(not isinstance(x, (list, dict)) for x in v):
                lines.append(pad + "  ".join(str(x) for x in v))
            elif isinstance(v, (dict, list)):
                lines.append(pad + "-")
                lines.extend(_pretty(v, indent + 1))
            else:
                lines.append(f"{pad}{v}")
    else:
        lines.append(f"{pad}{obj}")
    return lines


# flags whose values may start with a minus sign
SIGNED_FLAGS = {"--s", "--chi", "--at", "--eps"}


def _glue_signed(argv):
    """Rewrite ``--chi -2/7`` as ``--chi=-2/7`` so argparse does not read the
    value as an option."""
    out = []
    i = 0
    while i < len(argv):
        a = argv[i]
        if a in SIGNED_FLAGS and i + 1 < len(argv) and argv[i + 1].startswith("-"):
            out.append(f"{a}={argv[i + 1]}")
            i += 2
        else:
            out.append(a)
            i += 1
    return out


def run(argv=None, out=None):
    out = out or sys.stdout
    parser = build_parser()
    argv = _glue_signed(list(sys.argv[1:] if argv is None else argv))
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    ctx = Context(args)
    command = args.group + (f" {args.verb}" if args.verb else "")
    report = {"command": command, "mode": args.mode, "version": __version__}
    code = 0
    try:
        result = HANDLERS[args.group](ctx, args.verb)
        report["result"] = result
    except InputError as exc:
        report["error"] = {"kind": "input", "message": str(exc)}
        code = 2
    except DomainError as exc:
        report["error"] = {"kind": "domain", "message": str(exc)}
        code = 1
    report["input_digest"] = ctx.digest()
    if args.pretty:
        out.write("\n".join(_pretty(report)) + "\n")
    else:
        out.write(json.dumps(report, sort_keys=True, default=_json_default) + "\n")
    return code


def _json_default(v):
    return format_scalar(v)


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
