"""Command line front end.

Commands communicate through the algebra JSON document on files or standard
streams ("-" means stdin), so builds and checks compose into pipelines:

    axial build ns:2A | axial verify - --law M:1/4,1/32

Exit codes: 0 pass, 1 verification failure, 2 invalid input, 3 unsupported
computation.  Diagnostics go to stderr, reports to stdout, and --json swaps
the human report for a machine one.  Output is deterministic for fixed input.
"""

import json
import sys
from concurrent.futures import ThreadPoolExecutor

import click

from .algebra import form_value
from .axes import (
    DEFAULT_AXIS_CAP,
    check_axis,
    classify_2gen_axet,
    close_axes,
    miyamoto_group,
)
from .catalog import (
    NORTON_SAKUMA_NAMES,
    ThreeTranspositionGroup,
    flip_subalgebra,
    matsuo,
    norton_sakuma,
    spin_factor,
    split_spin_factor,
)
from .errors import (
    AxialError,
    ClosureCapExceeded,
    ConsistencyFailure,
    GroupCapExceeded,
    MalformedInput,
    Unsupported,
)
from .fields import QQ
from .frobenius import radical as compute_radical
from .frobenius import solve_frobenius
from .fusion import law_A, law_J, law_M, law_to_obj
from .highwater import (
    HighwaterElement,
    hw_ideal_window_contains,
    hw_periodic_quotient,
    ideal_type_info,
)
from .perms import format_cycles, parse_cycles
from .serialize import (
    vec_to_obj,
    dump_algebra,
    load_algebra,
    load_gram,
)
from .structure import (
    is_slender,
    non_annihilating_graph,
    spine,
    sum_decomposition,
)

_INPUT_ERRORS = 2
_UNSUPPORTED = 3


def _diag(msg: str):
    click.echo(msg, err=True)


def _exit_code(exc: AxialError) -> int:
    if isinstance(exc, (Unsupported, ClosureCapExceeded, GroupCapExceeded)):
        return _UNSUPPORTED
    if isinstance(exc, ConsistencyFailure):
        return 1
    return _INPUT_ERRORS


def _guard(fn):
    """Translate tool errors into diagnostics + exit codes; see module doc."""

    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except AxialError as exc:
            _diag(f"error: {exc}")
            sys.exit(_exit_code(exc))
        except OSError as exc:
            _diag(f"error: {exc}")
            sys.exit(_INPUT_ERRORS)

    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    return wrapper


def _read_algebra(handle):
    return load_algebra(handle.read())


def _parse_law(field, text):
    head, _, rest = text.partition(":")
    kind = head.strip().upper()
    try:
        if kind == "A" and not rest:
            return law_A(field)
        if kind == "J":
            return law_J(field, field.parse(rest))
        if kind == "M":
            a, b = rest.split(",")
            return law_M(field, field.parse(a), field.parse(b))
    except (ValueError, AxialError) as exc:
        raise MalformedInput(f"bad law {text!r}: {exc}") from exc
    raise MalformedInput(f"bad law {text!r} (want A, J:<eta> or M:<alpha>,<beta>)")


def _build_catalog(spec: str):
    parts = spec.split(":")
    kind = parts[0]
    if kind == "ns" and len(parts) == 2:
        return norton_sakuma(parts[1])
    if kind == "matsuo" and len(parts) == 4 and parts[1] == "Sn":
        try:
            degree = int(parts[2])
        except ValueError as exc:
            raise MalformedInput(f"bad symmetric-group degree {parts[2]!r}") from exc
        return matsuo(ThreeTranspositionGroup.symmetric(degree), QQ.parse(parts[3]))
    if kind == "spin" and len(parts) == 2:
        with open(parts[1], "r", encoding="utf-8") as fh:
            gram = load_gram(fh.read(), QQ)
        return spin_factor(gram).algebra
    if kind == "splitspin" and len(parts) == 3:
        with open(parts[1], "r", encoding="utf-8") as fh:
            gram = load_gram(fh.read(), QQ)
        return split_spin_factor(gram, QQ.parse(parts[2])).algebra
    if kind == "flip" and len(parts) >= 3:
        inner = ":".join(parts[1:-1])
        cycles = parts[-1]
        ip = inner.split(":")
        if len(ip) != 4 or ip[0] != "matsuo" or ip[1] != "Sn":
            raise MalformedInput(f"flip needs a matsuo:Sn spec, got {inner!r}")
        try:
            degree = int(ip[2])
        except ValueError as exc:
            raise MalformedInput(f"bad symmetric-group degree {ip[2]!r}") from exc
        group = ThreeTranspositionGroup.symmetric(degree)
        sigma = parse_cycles(cycles, degree)
        return flip_subalgebra(group, QQ.parse(ip[3]), sigma).algebra
    raise MalformedInput(
        f"unknown catalog spec {spec!r} (want ns:<name>, matsuo:Sn:<n>:<eta>, "
        f"spin:<gram-file>, splitspin:<gram-file>:<alpha>, "
        f"flip:matsuo:Sn:<n>:<eta>:<cycles>)"
    )


@click.group()
def main():
    """Exact tools for axial algebras: build, verify, close, decompose."""


@main.command()
@click.argument("spec")
@click.option("-o", "--out", type=click.File("w"), default="-",
              help="Destination file (default stdout).")
@_guard
def build(spec, out):
    """Construct a catalog algebra and write its JSON document."""
    alg = _build_catalog(spec)
    out.write(dump_algebra(alg))
    out.write("\n")


def _violation_obj(field, viol):
    lam, mu, u, v = viol
    return {
        "lam": field.fmt(lam),
        "mu": field.fmt(mu),
        "u": vec_to_obj(field, u),
        "v": vec_to_obj(field, v),
    }


@main.command()
@click.argument("file", type=click.File("r"), default="-")
@click.option("--law", "law_text", default=None,
              help="Fusion law A, J:<eta> or M:<alpha>,<beta> (default: the document's).")
@click.option("--json", "as_json", is_flag=True, help="Machine-readable report.")
@click.option("--parallel", is_flag=True, help="Check axes concurrently.")
@_guard
def verify(file, law_text, as_json, parallel):
    """Run the axis checks on every designated axis; exit 1 on any failure."""
    alg = _read_algebra(file)
    law = _parse_law(alg.field, law_text) if law_text else alg.law
    if law is None:
        raise MalformedInput("the document carries no fusion law; pass --law")
    if not alg.axes:
        raise MalformedInput("the document designates no axes")
    if parallel:
        with ThreadPoolExecutor() as pool:
            reports = list(pool.map(lambda av: check_axis(alg, av[1], law), alg.axes))
    else:
        reports = [check_axis(alg, v, law) for _, v in alg.axes]
    named = list(zip((name for name, _ in alg.axes), reports))
    all_passed = all(r.passed for _, r in named)
    if as_json:
        payload = {
            "law": law_to_obj(law),
            "axes": [
                {
                    "name": name,
                    "passed": r.passed,
                    "idempotent": r.is_idempotent,
                    "semisimple": r.is_semisimple,
                    "primitive": r.is_primitive,
                    "eigen_dims": list(r.eigen_dims),
                    "violations": [
                        _violation_obj(alg.field, w) for w in r.fusion_violations
                    ],
                }
                for name, r in named
            ],
            "all_passed": all_passed,
        }
        click.echo(json.dumps(payload, indent=2))
    else:
        for name, r in named:
            click.echo(f"{name}: {r.describe()}")
            for lam, mu, _, _ in r.fusion_violations:
                click.echo(
                    f"  violation at ({alg.field.fmt(lam)}, {alg.field.fmt(mu)})"
                )
        click.echo(f"verdict: {'pass' if all_passed else 'FAIL'} under {law.name}")
    if not all_passed:
        sys.exit(1)


@main.command()
@click.argument("file", type=click.File("r"), default="-")
@click.option("--cap", type=int, default=DEFAULT_AXIS_CAP,
              help="Abort if the closed axis set grows past this.")
@click.option("--group-cap", type=int, default=None,
              help="Abort if the group enumeration grows past this.")
@click.option("--json", "as_json", is_flag=True, help="Machine-readable report.")
@_guard
def miyamoto(file, cap, group_cap, as_json):
    """Close the designated axes under their tau maps and report the group."""
    alg = _read_algebra(file)
    if not alg.axes:
        raise MalformedInput("the document designates no axes")
    axet = close_axes(alg, alg.axis_vectors(), cap=cap)
    group = miyamoto_group(axet, cap=group_cap)
    if as_json:
        payload = {
            "axes": [
                {"name": axet.names[k], "v": vec_to_obj(alg.field, axet.axes[k])}
                for k in range(axet.size)
            ],
            "orbits": [sorted(o) for o in axet.orbits],
            "tau": [format_cycles(p) for p in axet.tau_perms],
            "group_order": group.order,
        }
        click.echo(json.dumps(payload, indent=2))
    else:
        click.echo(f"closed axes: {axet.size}")
        for k in range(axet.size):
            click.echo(f"  [{k}] {axet.names[k]}")
        click.echo(f"orbits: {[sorted(o) for o in axet.orbits]}")
        for k, p in enumerate(axet.tau_perms):
            click.echo(f"tau[{k}] = {format_cycles(p)}")
        click.echo(f"group order: {group.order}")


def _gram_rows(alg, gram):
    return [[alg.field.fmt(x) for x in row] for row in gram.data]


@main.command()
@click.argument("file", type=click.File("r"), default="-")
@click.option("--json", "as_json", is_flag=True, help="Machine-readable report.")
@_guard
def frobenius(file, as_json):
    """Solve for the Frobenius form: canonical Gram, space dimension, radical."""
    alg = _read_algebra(file)
    sol = solve_frobenius(alg)
    radical_basis = None
    radical_note = None
    if sol.canonical is not None:
        try:
            rad = compute_radical(alg, sol)
            radical_basis = [vec_to_obj(alg.field, v) for v in rad.basis_vectors()]
        except Unsupported as exc:
            radical_note = str(exc)
    else:
        radical_note = "no canonical form"
    norms = []
    for name, v in alg.axes:
        if sol.canonical is None:
            norms.append((name, None))
        else:
            norms.append((name, alg.field.fmt(form_value(sol.canonical, v, v))))
    if as_json:
        payload = {
            "solution_dim": sol.space.dim,
            "has_form": sol.has_form,
            "ambiguous": sol.ambiguous,
            "canonical": None if sol.canonical is None
            else _gram_rows(alg, sol.canonical),
            "axis_norms": [{"name": n, "norm": x} for n, x in norms],
            "radical": radical_basis,
            "radical_note": radical_note,
        }
        click.echo(json.dumps(payload, indent=2))
    else:
        click.echo(f"solution space dimension: {sol.space.dim}")
        if not sol.has_form:
            click.echo("NO Frobenius form (zero solution space) - noteworthy")
        if sol.ambiguous:
            click.echo("normalization ambiguous: reporting one representative")
        if sol.canonical is not None:
            click.echo("canonical Gram:")
            for row in _gram_rows(alg, sol.canonical):
                click.echo("  [" + ", ".join(row) + "]")
        for n, x in norms:
            click.echo(f"  ({n}, {n}) = {x}")
        if radical_basis is not None:
            click.echo(f"radical dimension: {len(radical_basis)}")
            for v in radical_basis:
                click.echo(f"  {v}")
        elif radical_note:
            click.echo(f"radical: {radical_note}")


@main.command("radical")
@click.argument("file", type=click.File("r"), default="-")
@click.option("--json", "as_json", is_flag=True, help="Machine-readable report.")
@_guard
def radical_cmd(file, as_json):
    """Compute the radical of the canonical Frobenius form (exit 3 if unsupported)."""
    alg = _read_algebra(file)
    rad = compute_radical(alg)
    basis = [vec_to_obj(alg.field, v) for v in rad.basis_vectors()]
    if as_json:
        click.echo(json.dumps({"dim": rad.dim, "basis": basis}, indent=2))
    else:
        click.echo(f"radical dimension: {rad.dim}")
        for v in basis:
            click.echo(f"  {v}")


@main.command()
@click.argument("file", type=click.File("r"), default="-")
@click.option("--json", "as_json", is_flag=True, help="Machine-readable report.")
@_guard
def decompose(file, as_json):
    """Axis components of the non-annihilating graph and the sum decomposition."""
    alg = _read_algebra(file)
    if not alg.axes:
        raise MalformedInput("the document designates no axes")
    vecs = alg.axis_vectors()
    graph = non_annihilating_graph(alg, vecs)
    dec = sum_decomposition(alg, vecs)
    names = [name for name, _ in alg.axes]
    comps = [sorted(c) for c in dec.components]
    # a component is slender when its axes' spine fills its subalgebra
    slender = [
        spine(alg, [vecs[i] for i in comp]).dim == sub.dim
        for comp, sub in zip(comps, dec.subalgebras)
    ]
    whole = is_slender(alg, vecs)
    if as_json:
        payload = {
            "components": [[names[i] for i in c] for c in comps],
            "subalgebra_dims": [s.dim for s in dec.subalgebras],
            "pairwise_zero": dec.pairwise_zero,
            "direct": dec.direct,
            "slender": slender,
            "slender_whole": whole,
            "edges": sorted([names[a], names[b]] for a, b in graph.edges),
        }
        click.echo(json.dumps(payload, indent=2))
    else:
        for k, c in enumerate(comps):
            club = ", ".join(names[i] for i in c)
            click.echo(
                f"component {k}: {{{club}}} spans dim {dec.subalgebras[k].dim}"
                f"{' (slender)' if slender[k] else ''}"
            )
        click.echo(f"pairwise products zero: {dec.pairwise_zero}")
        click.echo(f"direct sum: {dec.direct}")
        click.echo(f"whole algebra slender: {whole}")


@main.command()
@click.argument("file", type=click.File("r"), default="-")
@click.option("--gens", default="0,1", show_default=True,
              help="Indices of the two generating axes.")
@click.option("--json", "as_json", is_flag=True, help="Machine-readable report.")
@_guard
def axet(file, gens, as_json):
    """Classify the closed axis set generated by two axes: X(n) or X'(k+2k)."""
    alg = _read_algebra(file)
    try:
        i, j = (int(x) for x in gens.split(","))
    except ValueError as exc:
        raise MalformedInput(f"bad --gens {gens!r}: want two comma-separated indices") from exc
    if not (0 <= i < len(alg.axes) and 0 <= j < len(alg.axes)):
        raise MalformedInput(f"--gens {gens!r} out of range for {len(alg.axes)} axes")
    closed = close_axes(alg, [alg.axes[i][1], alg.axes[j][1]])
    shape = classify_2gen_axet(closed)
    if as_json:
        payload = {
            "label": shape.label,
            "total": shape.total,
            "skew": shape.skew,
            "orbit_sizes": list(shape.orbit_sizes),
        }
        click.echo(json.dumps(payload, indent=2))
    else:
        click.echo(f"shape: {shape.label} (axes {shape.total}, skew {shape.skew})")


@main.group()
def hw():
    """Infinite-basis arithmetic: periodic quotients, tuples, membership."""


@hw.command()
@click.argument("period", type=int)
@click.option("-o", "--out", type=click.File("w"), default="-",
              help="Destination file (default stdout).")
@_guard
def quotient(period, out):
    """Build the finite quotient with PERIOD axes as an algebra document."""
    alg = hw_periodic_quotient(period)
    out.write(dump_algebra(alg))
    out.write("\n")


@hw.command("check-tuple")
@click.argument("csv")
@click.option("--json", "as_json", is_flag=True, help="Machine-readable report.")
@_guard
def check_tuple(csv, as_json):
    """Decide whether a comma-separated coefficient tuple is of ideal type."""
    try:
        items = [QQ.parse(x) for x in csv.split(",")]
    except AxialError as exc:
        raise MalformedInput(f"bad tuple {csv!r}: {exc}") from exc
    info = ideal_type_info(items)
    if as_json:
        click.echo(json.dumps({
            "ok": info.ok,
            "epsilons": list(info.epsilons),
            "divergent_readings": info.divergent_readings,
        }, indent=2))
    else:
        click.echo("ideal type" if info.ok else "NOT ideal type")
        if info.ok:
            click.echo(f"epsilon: {list(info.epsilons)}")
            if info.divergent_readings:
                click.echo("note: passes only with epsilon = -1 (not a palindrome)")
    if not info.ok:
        sys.exit(1)


@hw.command()
@click.argument("csv")
@click.argument("element", type=click.File("r"), default="-")
@click.option("--window", type=int, default=None,
              help="Index bound for the generated span (default 3x tuple degree).")
@click.option("--rounds", type=int, default=10, show_default=True)
@click.option("--json", "as_json", is_flag=True, help="Machine-readable report.")
@_guard
def member(csv, element, window, rounds, as_json):
    """Window-bounded ideal membership: answers yes or unknown, never no."""
    try:
        items = [QQ.parse(x) for x in csv.split(",")]
    except AxialError as exc:
        raise MalformedInput(f"bad tuple {csv!r}: {exc}") from exc
    text = element.read()
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedInput(f"element is not valid JSON: {exc}") from exc
    try:
        elem = HighwaterElement.from_json(QQ, obj)
    except (AxialError, ValueError, TypeError, AttributeError) as exc:
        raise MalformedInput(f"bad element document: {exc}") from exc
    answer = hw_ideal_window_contains(items, elem, window=window, rounds=rounds)
    if as_json:
        click.echo(json.dumps({"answer": answer}))
    else:
        click.echo(answer)


if __name__ == "__main__":
    main()
