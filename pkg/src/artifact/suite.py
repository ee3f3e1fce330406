"""The acceptance verification suite.

Each check returns a status and a list of detail lines.  Reports are
rendered without timings so that repeated runs, serial or threaded,
produce byte-identical output.
"""

from __future__ import annotations

import json
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable

from .btilde import (
    CheckResult, G0Module, GnModule, XI_TRANSPORTS, btilde_eq, c_word, comb,
    lambda_hat, lemma_u, prime_axioms_check, prime_criterion_check, recompose,
    xi, xi_alternates, z_word,
)
from .extension import (
    GnElement, adjacency_table, g0g_gen, gn_act_word, gn_commutator,
    gn_identity, gn_inv, gn_mul, gn_nu, gn_s1, gn_s_ij, gn_u,
)
from .g9tower import (
    verify_action_table, verify_action_well_defined, verify_lemmaV1,
)
from .monodromy import (
    Factor, FactorizedExpr, hurwitz_equivalent, hurwitz_move, product,
)
from .vankampen import (
    abelianization, format_abelian, presentation, projectivize,
)
from .words import (
    BraidWord, HalfTwist, braid_eq, catalog_T, catalog_word, commutator,
    full_twist, psi, triple,
)

__all__ = ["DEFAULT_SEED", "CheckReport", "CHECKS", "run_suite",
           "render_text", "render_structured", "random_word", "random_pure_word"]

DEFAULT_SEED = 20240601


@dataclass(frozen=True)
class CheckReport:
    id: str
    anchor: str
    status: str
    details: tuple[str, ...] = field(default=())

    @property
    def passed(self) -> bool:
        return self.status == "pass"


# ---------------------------------------------------------------------------
# Random generators shared with the tests


def random_word(rng: random.Random, n: int, length: int) -> BraidWord:
    letters = [rng.choice((1, -1)) * rng.randint(1, n - 1) for _ in range(length)]
    return BraidWord(n, tuple(letters))


def random_pure_word(rng: random.Random, n: int, max_length: int) -> BraidWord:
    """A product of conjugated squares of generators, at most max_length letters."""
    letters: list[int] = []
    while True:
        k = rng.randint(1, n - 1)
        e = rng.choice((1, -1))
        conj = random_word(rng, n, rng.randint(0, 3)).letters
        piece = tuple(-x for x in reversed(conj)) + (e * k, e * k) + conj
        if len(letters) + len(piece) > max_length:
            break
        letters.extend(piece)
    return BraidWord(n, tuple(letters))


def _random_gn(rng: random.Random, n: int) -> GnElement:
    return GnElement(n, rng.randint(0, 1), rng.randint(-3, 3),
                     tuple(rng.randint(-3, 3) for _ in range(n - 1)))


Outcome = tuple[bool, list[str]]


def _from_results(results: list[CheckResult]) -> Outcome:
    failed = [f"{r.name}: {r.detail}" for r in results if r.status == "fail"]
    counted = sum(1 for r in results if r.status != "not checked")
    skipped = [f"{r.name}: not checked" for r in results if r.status == "not checked"]
    return not failed, [f"{counted} identities checked"] + skipped + failed


# ---------------------------------------------------------------------------
# The checks


def _artin_soundness(rng: random.Random) -> Outcome:
    bad = []
    count = 0
    for n in range(2, 10):
        for i in range(1, n):
            for j in range(i + 1, n):
                a, b = BraidWord.gen(n, i), BraidWord.gen(n, j)
                lhs, rhs = (a * b * a, b * a * b) if j == i + 1 else (a * b, b * a)
                count += 1
                if not braid_eq(lhs, rhs):
                    bad.append(f"n={n} X{i},X{j}")
    for _ in range(500):
        n = rng.randint(2, 9)
        w = random_word(rng, n, rng.randint(0, 30))
        if not braid_eq(w * w.inverse(), BraidWord.identity(n)):
            bad.append(f"w w^-1 nontrivial for {w}")
    return not bad, [f"{count} relations and 500 inverse pairs"] + bad


def _b9_spot_checks(rng: random.Random) -> Outcome:
    x = lambda *l: BraidWord(9, l)
    details = []
    ok = braid_eq(x(1, 2, 1), x(2, 1, 2)) and not braid_eq(x(1, 2), x(2, 1))
    details.append(f"x1x2x1 = x2x1x2 and x1x2 != x2x1: {ok}")
    table = adjacency_table()
    rels = []
    others = [i for i in range(1, 10) if i != 4]
    for i in others:
        for j in others:
            if i < j:
                a, b = catalog_T(i).word(), catalog_T(j).word()
                if table[(i, j)].endswith("adjacent"):
                    rels.append((f"<T{i},T{j}>", triple(a, b)))
                elif table[(i, j)] == "disjoint":
                    rels.append((f"[T{i},T{j}]", commutator(a, b)))
    rels.append(("[T1,T2^-1 T3 T2]",
                 commutator(catalog_word((1,)), catalog_word((-2, 3, 2)))))
    rels.append(("[T5,T8^-1 T9 T8]",
                 commutator(catalog_word((5,)), catalog_word((-8, 9, 8)))))
    for name, w in rels:
        if not braid_eq(w, BraidWord.identity(9)):
            ok = False
            details.append(f"relator {name} nontrivial")
    details.append(f"{len(rels)} relator words evaluated")
    return ok, details


def _combing_round_trip(rng: random.Random) -> Outcome:
    bad = []
    for _ in range(500):
        n = rng.randint(2, 9)
        w = random_pure_word(rng, n, 40)
        if not braid_eq(recompose(comb(w)), w):
            bad.append(f"round trip failed for {w}")
    return not bad, ["500 pure words"] + bad


def _gn_relations(rng: random.Random) -> Outcome:
    n = 9
    s1, u, nu, one = gn_s1(n), (lambda i: gn_u(n, i)), gn_nu(n), gn_identity(n)
    bad = []

    def expect(name: str, got: GnElement, want: GnElement) -> None:
        if got != want:
            bad.append(f"{name}: {got} != {want}")

    for i in [1] + list(range(3, n)):
        expect(f"[s1,u{i}]", gn_commutator(s1, u(i)), one)
    for i in range(1, n):
        for j in range(i + 2, n):
            expect(f"[u{i},u{j}]", gn_commutator(u(i), u(j)), one)
    expect("[u1,u2] = v", gn_commutator(u(1), u(2)), nu)
    expect("[s1,u2] = v", gn_commutator(s1, u(2)), nu)
    for i in range(2, n - 1):
        expect(f"[u{i},u{i + 1}] = v", gn_commutator(u(i), u(i + 1)), nu)
    gens = [s1] + [u(i) for i in range(1, n)]
    for k, g in enumerate(gens):
        expect(f"v central ({k})", gn_mul(g, nu), gn_mul(nu, g))
    expect("v^2", gn_mul(nu, nu), one)
    for _ in range(1000):
        x, y, z = (_random_gn(rng, n) for _ in range(3))
        if gn_mul(gn_mul(x, y), z) != gn_mul(x, gn_mul(y, z)):
            bad.append(f"associativity: {x}, {y}, {z}")
        if gn_mul(x, gn_inv(x)) != one:
            bad.append(f"inverse: {x}")
    return not bad, ["generator relations and 1000 random triples"] + bad


def _lambda_table(rng: random.Random) -> Outcome:
    n = 9
    bad = []
    pairs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    for i, j in pairs:
        got = lambda_hat(z_word(i, j, n) ** 2)
        if got != gn_s_ij(i, j, n):
            bad.append(f"Z{i}{j}^2 -> {got} != s{i}{j}")
    ordered = 0
    for p in pairs:
        for q in pairs:
            if p == q:
                continue
            ordered += 1
            shared = len(set(p) & set(q))
            want = gn_nu(n) if shared == 1 else gn_identity(n)
            got = gn_commutator(gn_s_ij(*p, n), gn_s_ij(*q, n))
            if got != want:
                bad.append(f"[s{p},s{q}] = {got}")
    return not bad, [f"{len(pairs)} pairs, {ordered} ordered commutators"
                     f" ({ordered // 2} unordered)"] + bad


def _lambda_equivariance(rng: random.Random) -> Outcome:
    n = 9
    bad = []
    for _ in range(200):
        p = random_pure_word(rng, n, 24)
        w = random_word(rng, n, rng.randint(0, 8))
        lhs = lambda_hat(p.conj(w))
        rhs = gn_act_word(w, lambda_hat(p))
        if lhs != rhs:
            bad.append(f"p={p} w={w}: {lhs} != {rhs}")
    return not bad, ["200 random pairs"] + bad


def _quadrangles(rng: random.Random) -> Outcome:
    details = []
    ok = True
    for n in (4, 9):
        X1, X2, X3 = (BraidWord.gen(n, k) for k in (1, 2, 3))
        X = X1.conj(X2 * X3)
        first = btilde_eq(X1 ** 2 * X3 ** 2, X2 ** 2 * X ** 2)
        Y2, Y4 = X3.conj(X2.inverse()), X1.conj(X2.inverse())
        second = btilde_eq(X1 ** 2 * X3 ** 2, Y2 ** 2 * Y4 ** 2)
        details.append(f"n={n}: X1^2 X3^2 = X2^2 X^2 {first}; "
                       f"X1^2 X3^2 = Y2^2 Y4^2 {second}")
        ok = ok and first and second
    return ok, details


def _discriminator(rng: random.Random) -> Outcome:
    t4 = catalog_T(4).word()
    details = []
    ok = True
    for i in (1, 3, 5, 9, 8):
        r = btilde_eq(commutator(t4, catalog_T(i).word()), BraidWord.identity(9))
        details.append(f"[T4,T{i}] = 1 in B~9: {r}")
        ok = ok and r
    r = braid_eq(commutator(t4, catalog_T(3).word()), BraidWord.identity(9))
    details.append(f"[T4,T3] = 1 in B9: {r}")
    return ok and not r, details


_CONJUGATIONS = (
    (4, (-2, 3, -7, 8), 5),
    (2, (4, 3, -5, -7), 8),
    (3, (-2, 4, -5, 8), 7),
)


def _conjugation_identities(rng: random.Random) -> Outcome:
    details = []
    ok = True
    for src, tword, dst in _CONJUGATIONS:
        b = catalog_word(tword)
        lhs, rhs = catalog_T(src).word().conj(b), catalog_T(dst).word()
        in_b9, in_bt = braid_eq(lhs, rhs), btilde_eq(lhs, rhs)
        ends = sorted(catalog_T(src).endpoints)
        image = tuple(psi(b)(p) for p in ends)
        polar = image == tuple(sorted(catalog_T(dst).endpoints))
        details.append(f"(T{src}) conjugated to T{dst}: in B9 {in_b9}; in B~9 {in_bt}; "
                       f"endpoints {ends[0]}->{image[0]}, {ends[1]}->{image[1]}; "
                       f"polarization kept {polar}")
        ok = ok and in_b9 and polar
    return ok, details


def _xi_identities(rng: random.Random) -> Outcome:
    details = []
    ok = True
    c = lambda_hat(c_word(9))
    for i in range(1, 10):
        main = xi(i).coords
        for name, entry, relation in xi_alternates(i):
            want = {"equal": main,
                    "c-times": gn_mul(c, main),
                    "inverse-times-c": gn_mul(c, gn_inv(main))}[relation]
            good = entry.coords == want
            details.append(f"xi{i} {name} ({relation}): {good}")
            ok = ok and good
    for src, tword, dst in XI_TRANSPORTS:
        good = btilde_eq(xi(src).expression.conj(catalog_word(tword)), xi(dst).expression)
        details.append(f"xi{src} transported to xi{dst}: {good}")
        ok = ok and good
    return ok, details


def _xi_commutators(rng: random.Random) -> Outcome:
    table = adjacency_table()
    nu, one = gn_nu(9), gn_identity(9)
    bad = []
    count = 0
    for i in range(1, 10):
        for j in range(i + 1, 10):
            count += 1
            want = nu if table[(i, j)].endswith("adjacent") else one
            got = gn_commutator(xi(i).coords, xi(j).coords)
            if got != want:
                bad.append(f"[xi{i},xi{j}] = {got}, classification {table[(i, j)]}")
    return not bad, [f"{count} pairs"] + bad


def _prime_suite(rng: random.Random) -> Outcome:
    n = 9
    X = HalfTwist.simple(n, 1)
    adj = [HalfTwist.simple(n, 2)]
    dis = [HalfTwist.simple(n, k) for k in range(3, n)]
    details = []
    ok = True
    for label, module, g in (("u in G(9)", GnModule(n), lambda_hat(lemma_u(n))),
                             ("g1 in G0(9)", G0Module(), g0g_gen(1))):
        good, lines = _from_results(prime_axioms_check(module, g, X, adj, dis)
                                    + prime_criterion_check(module, g))
        details += [f"{label}: {line}" for line in lines]
        ok = ok and good
    probe = prime_axioms_check(GnModule(n), gn_s1(n), X, adj, dis)[0]
    details.append(f"s1 probe axiom (1): {probe.status}")
    return ok and probe.status == "fail", details


def _action_well_defined(rng: random.Random) -> Outcome:
    return _from_results(verify_action_well_defined())


def _action_table(rng: random.Random) -> Outcome:
    return _from_results(verify_action_table())


def _hurwitz(rng: random.Random) -> Outcome:
    details = []
    bad = []
    base = FactorizedExpr(3, tuple(Factor.make(3, (), k) for k in (1, 2, 1, 2, 1, 2)))
    b4 = FactorizedExpr(4, tuple(Factor.make(4, (), k, p)
                                 for k, p in ((1, 1), (2, 2), (3, 1), (1, 1), (2, 1), (3, 2))))
    moves = 0
    for start in (base, b4):
        target = product(start)
        for _ in range(25):
            e = start
            for _ in range(20):
                p = rng.randint(1, len(e) - 1)
                d = rng.choice((1, -1))
                nxt = hurwitz_move(e, p, d)
                moves += 1
                if hurwitz_move(nxt, p, -d) != e:
                    bad.append(f"round trip failed at {p},{d}")
                if not braid_eq(product(nxt), target):
                    bad.append(f"product changed at {p},{d}")
                e = nxt
    details.append(f"{moves} random moves")
    full = braid_eq(product(base), full_twist(3))
    details.append(f"(X1,X2)^3 multiplies to the full twist: {full}")
    variant = hurwitz_move(base, 3, 1)
    res = hurwitz_equivalent(base, variant, max_states=10_000)
    details.append(f"one-move variant: {res.status}, path {list(res.path)}")
    return not bad and full and res.found, details + bad


def _van_kampen(rng: random.Random) -> Outcome:
    golden = {1: "g1 g2^-1", 2: "g1 g2 g1^-1 g2^-1", 3: "g1 g2 g1 g2^-1 g1^-1 g2^-1"}
    details = []
    ok = True
    for p in (1, 2, 3):
        e = FactorizedExpr(2, (Factor.make(2, (), 1, p),))
        P = presentation(e)
        shape = [str(r) for r in P.relators] == [golden[p]]
        ab = abelianization(projectivize(P))
        details.append(f"power {p}: relator {P.relators[0]} golden {shape}; "
                       f"projective abelianization {format_abelian(ab)} (expected Z)")
        ok = ok and shape and ab == (0,)
    return ok, details


def _lemma_a(rng: random.Random) -> Outcome:
    return _from_results(verify_lemmaV1())


CHECKS: tuple[tuple[str, str, Callable[[random.Random], Outcome]], ...] = (
    ("AC01", "Artin relations and inverse words in B_n, n <= 9", _artin_soundness),
    ("AC02", "B9 word problem and the T-presentation relators", _b9_spot_checks),
    ("AC03", "combing round trip on pure braids", _combing_round_trip),
    ("AC04", "G(9) relations and associativity", _gn_relations),
    ("AC05", "Lambda(Z_ij^2) = s_ij and the s_ij commutator table", _lambda_table),
    ("AC06", "Lambda equivariance under conjugation", _lambda_equivariance),
    ("AC07", "good quadrangle identities in B~_n", _quadrangles),
    ("AC08", "T4 commutators separate B~9 from B9", _discriminator),
    ("AC09", "conjugation identities among T2, T3, T4, T5, T7, T8", _conjugation_identities),
    ("AC10", "xi alternate expressions and transports", _xi_identities),
    ("AC11", "xi commutators follow the catalog classification", _xi_commutators),
    ("AC12", "prime-element axioms and criterion", _prime_suite),
    ("AC13", "B~9 relations act consistently on G0(9)", _action_well_defined),
    ("AC14", "four-case action table on G0(9)", _action_table),
    ("AC15", "Hurwitz moves and a one-move search", _hurwitz),
    ("AC16", "van Kampen relators for single B2 factors", _van_kampen),
    ("AC17", "conjugates of a_i by t_i in Q", _lemma_a),
)

DETERMINISM_ID = "AC18"
DETERMINISM_ANCHOR = "suite output independent of run and thread count"


def _run_one(entry, seed: int) -> CheckReport:
    cid, anchor, fn = entry
    rng = random.Random(f"{seed}:{cid}")
    try:
        ok, details = fn(rng)
        status = "pass" if ok else "fail"
    except Exception as exc:  # reported, never swallowed silently
        status, details = "error", [f"{type(exc).__name__}: {exc}"]
    return CheckReport(cid, anchor, status, tuple(details))


def _run_checks(entries, seed: int, threads: int) -> list[CheckReport]:
    if threads <= 1:
        reports = [_run_one(e, seed) for e in entries]
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            reports = list(pool.map(lambda e: _run_one(e, seed), entries))
    return sorted(reports, key=lambda r: r.id)


def run_suite(seed: int = DEFAULT_SEED, threads: int = 1,
              filter_ids: tuple[str, ...] = ()) -> list[CheckReport]:
    """Run the checks; the determinism check compares the rendered reports
    of the requested run with 1-thread and 4-thread runs."""
    wanted = {f.upper() for f in filter_ids}
    entries = [e for e in CHECKS if not wanted or e[0] in wanted]
    reports = _run_checks(entries, seed, threads)
    if not wanted or DETERMINISM_ID in wanted:
        # Asked for on its own, the determinism check covers every check.
        base = entries or list(CHECKS)
        runs = {threads: reports} if entries else {}
        for count in (1, 4):
            if count not in runs:
                runs[count] = _run_checks(base, seed, count)
        same = len({render_text(r) for r in runs.values()}) == 1
        reports.append(CheckReport(
            DETERMINISM_ID, DETERMINISM_ANCHOR, "pass" if same else "fail",
            (f"{len(base)} checks run with 1 and 4 threads and as requested: "
             f"{'identical' if same else 'different'} reports",)))
    return sorted(reports, key=lambda r: r.id)


def render_text(reports: list[CheckReport]) -> str:
    lines = []
    for r in reports:
        lines.append(f"{r.id} {r.status.upper()} {r.anchor}")
        lines += [f"    {d}" for d in r.details]
    passed = sum(r.passed for r in reports)
    lines.append(f"summary: {passed}/{len(reports)} passed")
    return "\n".join(lines) + "\n"


def render_structured(reports: list[CheckReport]) -> str:
    doc = {"checks": [{"id": r.id, "anchor": r.anchor, "status": r.status,
                       "trace": list(r.details)} for r in reports],
           "passed": sum(r.passed for r in reports),
           "total": len(reports)}
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"
