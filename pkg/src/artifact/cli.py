"""Command-line interface.

Exit status: 0 on success, 1 when a check fails or an ``--assert``ed
decision is false, 2 on parse or usage errors.  Every command prints its
result in the module text format, or as JSON with ``--format structured``.
Set ``ARTIFACT_MAX_STATES`` to change the default Hurwitz search budget.
"""

from __future__ import annotations

import functools
import json
import os
import sys
from typing import Any, Callable

import click

from . import btilde, extension, g9tower, monodromy, suite, vankampen, words

DEFAULT_MAX_STATES = 10_000


def _emit(ctx_format: str, text: str, data: Any) -> None:
    if ctx_format == "structured":
        click.echo(json.dumps(data, indent=2, sort_keys=True))
    else:
        click.echo(text)


def _command(group: click.Group, name: str, *, strands: bool = False) -> Callable:
    """Register a leaf command carrying the shared ``--format`` option."""

    def decorate(fn: Callable) -> click.Command:
        @functools.wraps(fn)
        def wrapper(*args: Any, **kwargs: Any) -> int:
            return fn(*args, **kwargs) or 0

        cmd = click.option("--format", "fmt", type=click.Choice(["text", "structured"]),
                           default="text", show_default=True,
                           help="Output format.")(wrapper)
        if strands:
            cmd = click.option("--strands", "-n", type=click.IntRange(min=2),
                               required=True, help="Number of strands.")(cmd)
        return group.command(name)(cmd)

    return decorate


def _decision(fmt: str, value: bool, asserted: bool, extra: dict | None = None) -> int:
    data = {"result": value}
    data.update(extra or {})
    _emit(fmt, "true" if value else "false", data)
    return 1 if asserted and not value else 0


_assert_option = click.option("--assert", "asserted", is_flag=True,
                              help="Exit with status 1 when the answer is false.")


def _default_budget() -> int:
    raw = os.environ.get("ARTIFACT_MAX_STATES")
    if raw is None:
        return DEFAULT_MAX_STATES
    try:
        value = int(raw)
    except ValueError:
        raise click.UsageError(f"ARTIFACT_MAX_STATES must be an integer, got {raw!r}")
    if value < 1:
        raise click.UsageError("ARTIFACT_MAX_STATES must be positive")
    return value


@click.group()
def cli() -> None:
    """Braid groups, their quotients and the G9 tower."""


# ---------------------------------------------------------------------------
# braid


@cli.group()
def braid() -> None:
    """Words in the braid group B_n."""


@_command(braid, "eq", strands=True)
@_assert_option
@click.argument("left")
@click.argument("right")
def braid_eq_cmd(strands: int, left: str, right: str, asserted: bool, fmt: str) -> int:
    """Decide whether two braid words are equal in B_n."""
    a, b = words.parse_braid(left, strands), words.parse_braid(right, strands)
    return _decision(fmt, words.braid_eq(a, b), asserted)


@_command(braid, "act", strands=True)
@click.argument("word")
@click.argument("free")
def braid_act_cmd(strands: int, word: str, free: str, fmt: str) -> None:
    """Apply the Artin action of WORD to the free word FREE (letters g1..gn)."""
    w = words.parse_braid(word, strands)
    x = words.parse_free(free, strands)
    image = words.artin_act(w, x)
    _emit(fmt, str(image), {"result": str(image)})


@_command(braid, "psi", strands=True)
@click.argument("word")
def braid_psi_cmd(strands: int, word: str, fmt: str) -> None:
    """Print the permutation of a braid word as a list of images."""
    perm = words.psi(words.parse_braid(word, strands))
    _emit(fmt, str(list(perm.images)), {"result": list(perm.images)})


@_command(braid, "degree", strands=True)
@click.argument("word")
def braid_degree_cmd(strands: int, word: str, fmt: str) -> None:
    """Print the exponent sum of a braid word."""
    d = words.degree(words.parse_braid(word, strands))
    _emit(fmt, str(d), {"result": d})


# ---------------------------------------------------------------------------
# btilde


@cli.group("btilde")
def btilde_group() -> None:
    """The quotient B~_n and the map to G(n)."""


@_command(btilde_group, "nf", strands=True)
@click.argument("word")
def btilde_nf_cmd(strands: int, word: str, fmt: str) -> None:
    """Print the normal form of a braid word in B~_n."""
    nf = btilde.btilde_nf(words.parse_braid(word, strands))
    _emit(fmt, str(nf), {"perm": list(nf.perm.images), "coords": str(nf.coords)})


@_command(btilde_group, "eq", strands=True)
@_assert_option
@click.argument("left")
@click.argument("right")
def btilde_eq_cmd(strands: int, left: str, right: str, asserted: bool, fmt: str) -> int:
    """Decide whether two braid words are equal in B~_n."""
    a, b = words.parse_braid(left, strands), words.parse_braid(right, strands)
    return _decision(fmt, btilde.btilde_eq(a, b), asserted)


@_command(btilde_group, "comb", strands=True)
@click.argument("word")
def btilde_comb_cmd(strands: int, word: str, fmt: str) -> None:
    """Write a pure braid as a product of the squares Z_ij^(+-2)."""
    f = btilde.comb(words.parse_braid(word, strands))
    _emit(fmt, str(f), {"factors": [list(x) for x in f.factors], "text": str(f)})


@_command(btilde_group, "lambda", strands=True)
@click.argument("word")
def btilde_lambda_cmd(strands: int, word: str, fmt: str) -> None:
    """Print the G(n) image of a pure braid."""
    x = btilde.lambda_hat(words.parse_braid(word, strands))
    _emit(fmt, str(x), _gn_dict(x))


# ---------------------------------------------------------------------------
# gn


def _gn_dict(x: extension.GnElement) -> dict:
    return {"n": x.n, "eps": x.eps, "a": x.a, "b": list(x.b), "text": str(x)}


@cli.group()
def gn() -> None:
    """The central extension G(n)."""


@_command(gn, "mul", strands=True)
@click.argument("elements", nargs=-1, required=True)
def gn_mul_cmd(strands: int, elements: tuple[str, ...], fmt: str) -> None:
    """Multiply G(n) elements left to right."""
    out = extension.gn_identity(strands)
    for text in elements:
        out = extension.gn_mul(out, extension.parse_gn(text, strands))
    _emit(fmt, str(out), _gn_dict(out))


@_command(gn, "act", strands=True)
@click.argument("word")
@click.argument("element")
def gn_act_cmd(strands: int, word: str, element: str, fmt: str) -> None:
    """Act on a G(n) element by a braid word."""
    w = words.parse_braid(word, strands)
    out = extension.gn_act_word(w, extension.parse_gn(element, strands))
    _emit(fmt, str(out), _gn_dict(out))


@_command(gn, "sij", strands=True)
@click.argument("i", type=int)
@click.argument("j", type=int)
def gn_sij_cmd(strands: int, i: int, j: int, fmt: str) -> None:
    """Print s_ij, the image of Z_ij^2."""
    out = extension.gn_s_ij(i, j, strands)
    _emit(fmt, str(out), _gn_dict(out))


# ---------------------------------------------------------------------------
# g0


def _g0_dict(x: extension.G0GraphElement) -> dict:
    return {"eps": x.eps, "b": dict(zip((f"g{i}" for i in extension.G0_INDICES), x.b)),
            "text": str(x)}


@cli.group()
def g0() -> None:
    """The group G0(9) generated by tau and g_i, i != 4."""


@_command(g0, "mul")
@click.argument("elements", nargs=-1, required=True)
def g0_mul_cmd(elements: tuple[str, ...], fmt: str) -> None:
    """Multiply G0(9) elements left to right."""
    out = extension.g0g_identity()
    for text in elements:
        out = extension.g0g_mul(out, extension.parse_g0(text))
    _emit(fmt, str(out), _g0_dict(out))


@_command(g0, "act")
@click.argument("word")
@click.argument("element")
def g0_act_cmd(word: str, element: str, fmt: str) -> None:
    """Act on a G0(9) element by a 9-strand braid word (x- or t-letters)."""
    w = words.parse_braid(word, 9)
    out = extension.g0g_act_braid(w, extension.parse_g0(element))
    _emit(fmt, str(out), _g0_dict(out))


# ---------------------------------------------------------------------------
# fact


def _load_expr(stream) -> monodromy.FactorizedExpr:
    try:
        return monodromy.loads_expr(stream.read())
    except (json.JSONDecodeError, KeyError, TypeError) as exc:
        raise ValueError(f"bad factorization file: {exc}") from exc


def _hurwitz_dict(res: monodromy.HurwitzResult) -> dict:
    return {"status": res.status, "path": [list(m) for m in res.path],
            "states": res.states, "reason": res.reason}


def _hurwitz_text(res: monodromy.HurwitzResult) -> str:
    lines = [res.status]
    if res.path:
        lines.append("path: " + " ".join(f"{p}{'+' if d > 0 else '-'}" for p, d in res.path))
    lines.append(f"states: {res.states}")
    if res.reason:
        lines.append(f"reason: {res.reason}")
    return "\n".join(lines)


@cli.group()
def fact() -> None:
    """Factorization files: validation, Hurwitz moves and invariance."""


@_command(fact, "validate")
@_assert_option
@click.argument("file", type=click.File("r"))
def fact_validate_cmd(file, asserted: bool, fmt: str) -> int:
    """Decide whether the factors multiply to the full twist."""
    e = _load_expr(file)
    return _decision(fmt, monodromy.validate_full_twist(e), asserted,
                     {"strands": e.strands, "factors": len(e)})


@_command(fact, "move")
@click.argument("file", type=click.File("r"))
@click.option("--position", "-p", type=int, required=True,
              help="Move the factors at positions p and p+1 (1-based).")
@click.option("--inverse", is_flag=True, help="Apply the inverse move.")
def fact_move_cmd(file, position: int, inverse: bool, fmt: str) -> None:
    """Apply one Hurwitz move and print the new factorization file."""
    e = _load_expr(file)
    try:
        out = monodromy.hurwitz_move(e, position, -1 if inverse else 1)
    except IndexError as exc:
        raise ValueError(str(exc)) from exc
    text = monodromy.dumps_expr(out)
    _emit(fmt, text, monodromy.to_dict(out))


@_command(fact, "invariance")
@_assert_option
@click.argument("file", type=click.File("r"))
@click.option("--by", "by", required=True, help="Conjugating braid word.")
@click.option("--max-states", type=click.IntRange(min=1), default=None,
              help="Search budget (default: ARTIFACT_MAX_STATES or 10000).")
@click.option("--max-depth", type=click.IntRange(min=0), default=None)
def fact_invariance_cmd(file, by: str, max_states: int | None, max_depth: int | None,
                        asserted: bool, fmt: str) -> int:
    """Search for Hurwitz moves taking the factorization to its conjugate."""
    e = _load_expr(file)
    h = words.parse_braid(by, e.strands)
    budget = max_states if max_states is not None else _default_budget()
    res = monodromy.invariance_check(e, h, budget, max_depth)
    _emit(fmt, _hurwitz_text(res), _hurwitz_dict(res))
    return 1 if asserted and not res.found else 0


# ---------------------------------------------------------------------------
# vk


def _load_presentation(stream) -> vankampen.Presentation:
    return vankampen.loads_presentation(stream.read())


def _emit_presentation(fmt: str, p: vankampen.Presentation, extra: dict | None = None,
                       comments: list[str] | None = None) -> None:
    text = "\n".join([f"# {c}" for c in comments or []] + [p.to_text()])
    data = p.to_dict()
    data.update(extra or {})
    _emit(fmt, text, data)


@cli.group()
def vk() -> None:
    """Presentations read off factorizations."""


@_command(vk, "present")
@click.argument("file", type=click.File("r"))
@click.option("--mode", type=click.Choice(["cuspidal", "general"]), default="cuspidal",
              show_default=True)
@click.option("--projective", is_flag=True, help="Also add Gamma_1 ... Gamma_m = 1.")
def vk_present_cmd(file, mode: str, projective: bool, fmt: str) -> None:
    """Print the presentation of a factorization file."""
    p = vankampen.presentation(_load_expr(file), mode)
    if projective:
        p = vankampen.projectivize(p)
    _emit_presentation(fmt, p)


@_command(vk, "projectivize")
@click.argument("file", type=click.File("r"))
def vk_projectivize_cmd(file, fmt: str) -> None:
    """Add the relator Gamma_1 ... Gamma_m to a presentation file."""
    _emit_presentation(fmt, vankampen.projectivize(_load_presentation(file)))


@_command(vk, "simplify")
@click.argument("file", type=click.File("r"))
@click.option("--passes", type=click.IntRange(min=0), default=10, show_default=True)
def vk_simplify_cmd(file, passes: int, fmt: str) -> None:
    """Apply Tietze moves; the log is printed as comment lines."""
    p, log = vankampen.tietze_simplify(_load_presentation(file), passes)
    _emit_presentation(fmt, p, {"log": log}, log)


@_command(vk, "abelianize")
@click.argument("file", type=click.File("r"))
def vk_abelianize_cmd(file, fmt: str) -> None:
    """Print the abelianization as a sum of cyclic groups."""
    factors = vankampen.abelianization(_load_presentation(file))
    text = vankampen.format_abelian(factors)
    _emit(fmt, text, {"invariant_factors": list(factors), "text": text})


# ---------------------------------------------------------------------------
# g9


@cli.group()
def g9() -> None:
    """The quotient Q of B~_9 x G0(9) by tau = c, and the G9 presentation."""


@_command(g9, "dict")
def g9_dict_cmd(fmt: str) -> None:
    """Print the Q images of t_i, a_i, xi_i and v1."""
    entries = g9tower.dictionary()
    lines = [f"{name}: {'unsupported' if x is None else x.describe()}" for name, x in entries]
    data = {name: None if x is None else x.describe() for name, x in entries}
    _emit(fmt, "\n".join(lines), data)


@_command(g9, "relators")
def g9_relators_cmd(fmt: str) -> None:
    """Print the N9 relators evaluated in Q, with their permutation and degree."""
    rows = []
    for name, x in g9tower.n9_relators():
        rows.append({"name": name, "element": x.describe(),
                     "trivial": g9tower.q_eq(x, g9tower.q_identity()),
                     "perm": list(g9tower.psi9(x).images), "degree": g9tower.ab9(x)})
    lines = [f"{r['name']}: trivial={str(r['trivial']).lower()} degree={r['degree']} "
             f"{r['element']}" for r in rows]
    _emit(fmt, "\n".join(lines), {"relators": rows})


@_command(g9, "presentation")
def g9_presentation_cmd(fmt: str) -> None:
    """Print the G9 presentation over T1..T9, g_i (i != 4) and tau."""
    p = g9tower.g9_presentation()
    _emit(fmt, p.to_text(), p.to_dict())


# ---------------------------------------------------------------------------
# verify


@cli.group()
def verify() -> None:
    """Verification suites."""


@_command(verify, "paper-suite")
@click.option("--filter", "filters", multiple=True, metavar="CHECK-ID",
              help="Run only these checks (repeatable), e.g. AC07.")
@click.option("--threads", type=click.IntRange(min=1), default=4, show_default=True)
@click.option("--seed", type=int, default=suite.DEFAULT_SEED, show_default=True)
def verify_suite_cmd(filters: tuple[str, ...], threads: int, seed: int, fmt: str) -> int:
    """Run the acceptance checks and print a report sorted by check id."""
    known = {cid for cid, _, _ in suite.CHECKS} | {"AC18"}
    filters = tuple(f.upper() for f in filters)
    unknown = sorted(set(filters) - known)
    if unknown:
        raise click.UsageError(f"unknown check id(s): {', '.join(unknown)}")
    reports = suite.run_suite(seed=seed, threads=threads, filter_ids=filters)
    if fmt == "structured":
        click.echo(suite.render_structured(reports), nl=False)
    else:
        click.echo(suite.render_text(reports), nl=False)
    return 0 if all(r.status == "pass" for r in reports) else 1


# ---------------------------------------------------------------------------
# entry point


def main(argv: list[str] | None = None) -> int:
    try:
        status = cli.main(args=argv, prog_name="artifact", standalone_mode=False)
    except click.exceptions.Exit as exc:
        return exc.exit_code
    except click.ClickException as exc:
        exc.show()
        return exc.exit_code
    except click.exceptions.Abort:
        click.echo("aborted", err=True)
        return 1
    except ValueError as exc:
        click.echo(f"error: {exc}", err=True)
        return 2
    return status if isinstance(status, int) else 0


if __name__ == "__main__":
    sys.exit(main())
