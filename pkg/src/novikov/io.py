"""Algebra and module documents, and text/machine rendering of reports.

Algebra documents are line oriented, ``#`` starts a comment::

    field gf 5          # or: field rational
    dims 1 2            # d0 d1, even basis first
    p 1 2 0 1           # e1 o e2 += 1 * e0
    p 2 1 0 -1/2

Unlisted constants are zero and a repeated ``(i, j, k)`` is an error.
Module documents use the same lines for the base algebra (optional when
the base is supplied separately) plus::

    module 2            # module dimension
    l 0 1 0 3           # L(e0)[1][0] = 3
    r 0 1 0 1           # R(e0)[1][0] = 1
"""
from __future__ import annotations

from fractions import Fraction

from .core import SuperAlgebra, parity
from .errors import DocumentError, NotPrime
from .modules import NovikovModule
from .scalars import Field

ALGEBRA_DIRECTIVES = ("field", "dims", "p")
MODULE_DIRECTIVES = ALGEBRA_DIRECTIVES + ("module", "l", "r")


def _tokens(line):
    """``(column, token)`` pairs, columns 1-based; comments stripped."""
    body = line.split("#", 1)[0]
    out, col = [], 0
    while col < len(body):
        if body[col].isspace():
            col += 1
            continue
        start = col
        while col < len(body) and not body[col].isspace():
            col += 1
        out.append((start + 1, body[start:col]))
    return out


def _int(tok, lineno, what):
    col, text = tok
    try:
        return int(text)
    except ValueError:
        raise DocumentError(f"{what} must be an integer, got {text!r}", lineno, col) from None


def _value(tok, field, lineno):
    col, text = tok
    try:
        frac = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise DocumentError(f"bad coefficient {text!r}", lineno, col) from None
    if "." in text or "e" in text.lower():
        raise DocumentError(f"coefficients are integers or fractions, got {text!r}", lineno, col)
    try:
        return field(frac)
    except ZeroDivisionError:
        raise DocumentError(f"{text} has no image in {field!r}", lineno, col) from None


class _Parsed:
    def __init__(self):
        self.field = None
        self.dims = None
        self.products = {}
        self.module_dim = None
        self.actions = {"l": {}, "r": {}}


def _parse(text, allowed):
    doc = _Parsed()
    for lineno, line in enumerate(text.splitlines(), start=1):
        toks = _tokens(line)
        if not toks:
            continue
        (col, head), args = toks[0], toks[1:]
        if head not in allowed:
            raise DocumentError(f"unknown directive {head!r}", lineno, col)

        def need(count):
            if len(args) != count:
                raise DocumentError(f"{head!r} takes {count} arguments, got {len(args)}", lineno, col)

        if head == "field":
            if doc.field is not None:
                raise DocumentError("field given twice", lineno, col)
            if len(args) == 1 and args[0][1] == "rational":
                doc.field = Field.rational()
            elif len(args) == 2 and args[0][1] == "gf":
                p = _int(args[1], lineno, "characteristic")
                try:
                    doc.field = Field.gf(p)
                except NotPrime:
                    raise DocumentError(f"{p} is not prime", lineno, args[1][0]) from None
            else:
                raise DocumentError("expected 'field rational' or 'field gf <p>'", lineno, col)
        elif head == "dims":
            need(2)
            if doc.dims is not None:
                raise DocumentError("dims given twice", lineno, col)
            d0, d1 = (_int(a, lineno, "dimension") for a in args)
            if d0 < 0 or d1 < 0:
                raise DocumentError("dimensions must be non-negative", lineno, args[0][0])
            doc.dims = (d0, d1)
        elif head == "module":
            need(1)
            if doc.module_dim is not None:
                raise DocumentError("module dimension given twice", lineno, col)
            doc.module_dim = _int(args[0], lineno, "module dimension")
        else:
            if doc.field is None:
                raise DocumentError("'field' must come before coefficient lines", lineno, col)
            need(4)
            idx = tuple(_int(a, lineno, "index") for a in args[:3])
            value = _value(args[3], doc.field, lineno)
            if head == "p":
                if doc.dims is None:
                    raise DocumentError("'dims' must come before product lines", lineno, col)
                n = sum(doc.dims)
                for (c, _), i in zip(args, idx):
                    if not 0 <= i < n:
                        raise DocumentError(f"index {i} out of range for dimension {n}", lineno, c)
                store = doc.products
            else:
                if doc.module_dim is None:
                    raise DocumentError("'module' must come before action lines", lineno, col)
                for (c, _), i in zip(args[1:3], idx[1:]):
                    if not 0 <= i < doc.module_dim:
                        raise DocumentError(f"index {i} out of range for module dimension {doc.module_dim}", lineno, c)
                store = doc.actions[head]
            if idx in store:
                raise DocumentError(f"duplicate coefficient line for {idx}", lineno, col)
            store[idx] = (value, lineno, col)
    return doc


def _algebra(doc, require=True):
    if doc.field is None:
        raise DocumentError("missing 'field' line")
    if doc.dims is None:
        if require:
            raise DocumentError("missing 'dims' line")
        return None
    d0, d1 = doc.dims
    A = SuperAlgebra.from_products(d0, d1, {k: v[0] for k, v in doc.products.items()}, doc.field)
    for (i, j, k), (value, lineno, col) in sorted(doc.products.items(), key=lambda kv: kv[1][1]):
        if value and parity(A, k) != (parity(A, i) + parity(A, j)) % 2:
            raise DocumentError(
                f"grading violation: e{i} o e{j} -> e{k} has the wrong parity (offending (i,j,k) = ({i},{j},{k}))",
                lineno,
                col,
            )
    return A


def parse(text: str) -> SuperAlgebra:
    return _algebra(_parse(text, ALGEBRA_DIRECTIVES))


def _fmt(x):
    return str(x.value)


def emit(A: SuperAlgebra) -> str:
    """Canonical document: fixed header, sorted nonzero products, reduced values."""
    lines = [f"field {A.field.spelling()}", f"dims {A.d0} {A.d1}"]
    for (i, j, k), v in sorted(A.nonzero_products().items()):
        lines.append(f"p {i} {j} {k} {_fmt(v)}")
    return "\n".join(lines) + "\n"


def parse_module(text: str, base: SuperAlgebra | None = None) -> NovikovModule:
    doc = _parse(text, MODULE_DIRECTIVES)
    own = _algebra(doc, require=base is None)
    if base is None:
        base = own
    elif own is not None and own != base:
        raise DocumentError("module document declares a different base algebra")
    if doc.field is not None and doc.field != base.field:
        raise DocumentError(f"module is over {doc.field!r} but its base is over {base.field!r}")
    if doc.module_dim is None:
        raise DocumentError("missing 'module' line")
    m = doc.module_dim
    mats = {}
    for kind in ("l", "r"):
        mats[kind] = [[[base.field.zero()] * m for _ in range(m)] for _ in range(base.n)]
        for (x, r, c), (value, lineno, col) in doc.actions[kind].items():
            if not 0 <= x < base.n:
                raise DocumentError(f"base index {x} out of range for dimension {base.n}", lineno, col)
            mats[kind][x][r][c] = value
    return NovikovModule(base, mats["l"], mats["r"])


def emit_module(M: NovikovModule, include_base=True) -> str:
    lines = []
    if include_base:
        lines.extend(emit(M.base).splitlines())
    else:
        lines.append(f"field {M.field.spelling()}")
    lines.append(f"module {M.m}")
    for kind, mats in (("l", M.L), ("r", M.R)):
        for x, mat in enumerate(mats):
            for r, row in enumerate(mat):
                for c, v in enumerate(row):
                    if v:
                        lines.append(f"{kind} {x} {r} {c} {_fmt(v)}")
    return "\n".join(lines) + "\n"


# --------------------------------------------------------------------------- rendering


def _vec(v):
    if hasattr(v, "coeffs"):
        return "(" + ", ".join(str(c) for c in v.coeffs) + ")"
    if isinstance(v, tuple) and v and isinstance(v[0], tuple):
        return "[" + "; ".join(" ".join(str(x) for x in row) for row in v) + "]"
    return str(v)


def _describe(x):
    if isinstance(x, SuperAlgebra):
        return "{" + ", ".join(f"e{i}e{j}->{v}e{k}" for (i, j, k), v in sorted(x.nonzero_products().items())) + "}"
    if isinstance(x, tuple) and len(x) == 2 and all(isinstance(m, tuple) for m in x):
        if x and x[0] and isinstance(x[0][0], tuple):
            return f"L={_vec(x[0])} R={_vec(x[1])}"
    return _vec(x)


def render_report(report, machine=False, limit=20) -> str:
    lines = []
    if machine:
        lines.append(
            f"record=law law={report.law} pass={int(report.passed)} "
            f"checked={report.checked} violations={len(report.violations)}"
        )
        for v in report.violations[:limit]:
            lines.append(
                f"record=violation law={v.law or report.law} i={v.i} j={v.j} k={v.k} "
                f"residual={_describe(v.residual).replace(' ', '')}"
            )
        for note in report.notes:
            lines.append(f"record=note law={report.law} text={note.replace(' ', '_')}")
        return "\n".join(lines)
    lines.append(f"{report.summary()} [{report.checked} instances checked]")
    for v in report.violations[:limit]:
        lines.append(f"  {v.law or report.law} at ({v.i}, {v.j}, {v.k}): {_describe(v.residual)}")
    if len(report.violations) > limit:
        lines.append(f"  ... {len(report.violations) - limit} more")
    for note in report.notes:
        lines.append(f"  note: {note}")
    return "\n".join(lines)


def render_table(A: SuperAlgebra, symbol="o") -> str:
    prods = sorted(A.nonzero_products().items())
    if not prods:
        return "  (all products zero)"
    return "\n".join(f"  e{i} {symbol} e{j} += {v} e{k}" for (i, j, k), v in prods)


def render_search(report, machine=False) -> str:
    from .search import DISCLAIMER

    spec = report.spec
    fields = {
        "d0": spec.d0,
        "d1": spec.d1,
        "field": f"gf:{spec.p}",
        "mode": spec.mode,
        "prune": int(spec.prune_odd_square),
        "candidates": report.candidates,
        "graded": report.graded,
        "novikov_super": report.novikov_super,
        "type_N": report.type_N,
        "type_S": report.type_S,
        "witnesses": len(report.witnesses),
        "witnesses_truncated": int(report.witnesses_truncated),
        "elapsed": f"{report.elapsed:.3f}",
    }
    if spec.mode == "random":
        fields["samples"] = spec.samples
        fields["seed"] = spec.seed
    if machine:
        lines = ["record=search " + " ".join(f"{k}={v}" for k, v in fields.items())]
        if report.skipped:
            lines.append(f"record=note text={report.skipped.replace(' ', '_')}")
        for W in report.witnesses:
            lines.append("record=witness document=" + emit(W).strip().replace("\n", ";").replace(" ", "_"))
        return "\n".join(lines)
    lines = [f"search over GF({spec.p}), signature ({spec.d0},{spec.d1}), {spec.mode}"]
    lines.extend(f"  {k}: {v}" for k, v in fields.items() if k not in ("d0", "d1", "field", "mode"))
    if report.skipped:
        lines.append(f"  skipped: {report.skipped}")
    lines.append(f"  note: {DISCLAIMER.format(p=spec.p)}")
    for n, W in enumerate(report.witnesses):
        lines.append(f"  witness {n}:")
        lines.extend("    " + ln for ln in emit(W).splitlines())
    return "\n".join(lines)


def matrix_text(M) -> str:
    return _vec(M)

