"""Independent cross-checks for the completion pipeline.

Two kinds of evidence live here, both deliberately built on different
machinery than the thing they check.

The truncation witness spans the graded left ideal up to a degree bound
by brute force: every monomial multiple of every generator, swept into
row echelon form over the scalar field.  The pivot exponents are then
exactly the leading exponents the ideal achieves below the bound, with
no completion logic involved.  Comparing them against a computed
staircase is the closest thing to ground truth available without a
second implementation.

The fuzz driver replays the algebra's defining identities on seeded
random inputs.  Its multiplication entry points can be swapped out,
which is how the tests confirm the suite actually has teeth: a mutated
product must make it fail.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import OracleSizeError
from .division import RegionPartition, divide
from .homogenize import dehomogenize, graded_degree, homogenize, is_homogeneous, project_exponent
from .orders import LinearForm, OrderContext, TieBreak, TIEBREAK_KINDS, leading_term, principal_symbol, is_graded_commutative
from .scalars import QQ
from .standard_basis import minimal_staircase
from .weyl import HomogOperator, Polynomial, WeylOperator, vec_add, vec_leq


@dataclass(frozen=True)
class TruncationWitness:
    """Every leading exponent the graded ideal achieves up to a degree."""

    degree_bound: int
    leading_exponents: frozenset
    matrix_rank: int


def _monomials_up_to(width, total):
    if width == 1:
        for k in range(total + 1):
            yield (k,)
        return
    for k in range(total + 1):
        for rest in _monomials_up_to(width - 1, total - k):
            yield (k,) + rest


def truncation_witness(ctx, ops, degree_bound, max_rows=50_000) -> TruncationWitness:
    """Echelonize all monomial multiples of the homogenized generators
    with product degree at most ``degree_bound``."""
    ops = [op for op in ops if not op.is_zero()]
    gens = [homogenize(op) for op in ops]
    for g in gens:
        if graded_degree(g) > degree_bound:
            raise ValueError("degree bound is below a generator's degree")

    n = ctx.n
    width = 2 * n + 1
    jobs = []
    for g in gens:
        room = degree_bound - graded_degree(g)
        jobs.extend((m, g) for m in _monomials_up_to(width, room))
    if len(jobs) > max_rows:
        raise OracleSizeError(
            f"{len(jobs)} candidate rows exceed the limit of {max_rows}; "
            "lower the degree bound"
        )

    pivots = {}
    for m, g in jobs:
        row = dict((HomogOperator.monomial(n, m) * g).terms)
        while row:
            lead = max(row, key=ctx.graded_key)
            hit = pivots.get(lead)
            if hit is None:
                c = row[lead]
                pivots[lead] = {k: v / c for k, v in row.items()}
                break
            c = row[lead]
            for k, v in hit.items():
                s = row.get(k, 0) - c * v
                if s == 0:
                    row.pop(k, None)
                else:
                    row[k] = s
    return TruncationWitness(degree_bound, frozenset(pivots), len(pivots))


def staircase_oracle(ctx, ops, degree_bound, max_rows=50_000):
    """Project the witness exponents down to the plain algebra: the set of
    weighted leading exponents the ideal provably achieves up to degree."""
    witness = truncation_witness(ctx, ops, degree_bound, max_rows=max_rows)
    return {project_exponent(m) for m in witness.leading_exponents}


@dataclass(frozen=True)
class AgreementReport:
    """Outcome of checking a computed staircase against the witness.

    Containment of the witness exponents in the computed staircase holds
    with no caveats.  The reverse direction is only decidable below the
    window: an exponent of weight w is certified reachable by shifting a
    basis element, which needs w plus the largest basis degree to fit
    under the witness bound.
    """

    ok: bool
    window: int
    mismatches: tuple
    witness: TruncationWitness


def _in_upper_set(m, corners):
    return any(vec_leq(c, m) for c in corners)


def oracle_pipeline_agree(ctx, ops, report, degree_bound, max_rows=50_000) -> AgreementReport:
    """Compare a pipeline report's staircase with the truncation witness."""
    witness = truncation_witness(ctx, ops, degree_bound, max_rows=max_rows)
    projected = {project_exponent(m) for m in witness.leading_exponents}
    oracle_corners = minimal_staircase(projected)
    mismatches = []

    for m in sorted(projected):
        if not _in_upper_set(m, report.staircase):
            mismatches.append(("witness exponent outside computed staircase", m))

    top = max((graded_degree(g) for g in report.homog_basis), default=0)
    window = degree_bound - top
    for m in _monomials_up_to(2 * ctx.n, max(window, 0)):
        in_computed = _in_upper_set(m, report.staircase)
        in_witness = _in_upper_set(m, oracle_corners)
        if in_computed != in_witness:
            mismatches.append(("staircase membership differs below window", m))

    return AgreementReport(not mismatches, window, tuple(mismatches), witness)


def random_weyl(rng, n, terms=3, degree=3, coeff=5, fld=QQ):
    """Random operator with up to ``terms`` monomials; may be zero."""
    out = {}
    for _ in range(rng.randint(0, terms)):
        m = _random_exponent(rng, 2 * n, degree)
        out[m] = fld.from_int(rng.randint(-coeff, coeff))
    return WeylOperator(n, out)


def random_homog(rng, n, terms=3, degree=3, coeff=5, fld=QQ):
    """Random graded-algebra element, not necessarily homogeneous."""
    out = {}
    for _ in range(rng.randint(0, terms)):
        m = _random_exponent(rng, 2 * n + 1, degree)
        out[m] = fld.from_int(rng.randint(-coeff, coeff))
    return HomogOperator(n, out)


def random_homogeneous(rng, n, degree, terms=3, coeff=5, fld=QQ):
    """Random homogeneous element of the given graded degree; may be zero."""
    out = {}
    for _ in range(rng.randint(1, terms)):
        m = _random_split(rng, 2 * n + 1, degree)
        out[m] = fld.from_int(rng.randint(-coeff, coeff))
    return HomogOperator(n, out)


def random_polynomial(rng, n, terms=3, degree=3, coeff=5):
    out = {}
    for _ in range(rng.randint(0, terms)):
        out[_random_exponent(rng, n, degree)] = Fraction(rng.randint(-coeff, coeff))
    return Polynomial(n, out)


def random_linear_form(rng, n, bound=2):
    p = []
    q = []
    for _ in range(n):
        pi = rng.randint(-bound, bound)
        p.append(pi)
        q.append(rng.randint(max(-pi, -bound), bound))
    return LinearForm(tuple(p), tuple(q))


def random_tiebreak(rng, n):
    perm = list(range(2 * n))
    rng.shuffle(perm)
    return TieBreak(rng.choice(TIEBREAK_KINDS), tuple(perm))


def _random_exponent(rng, width, degree):
    return tuple(rng.randint(0, degree) for _ in range(width))


def _random_split(rng, width, total):
    cuts = sorted(rng.randint(0, total) for _ in range(width - 1))
    parts = []
    prev = 0
    for c in cuts:
        parts.append(c - prev)
        prev = c
    parts.append(total - prev)
    return tuple(parts)


@dataclass(frozen=True)
class FuzzSizes:
    trials: int = 50
    n_max: int = 2
    terms: int = 3
    degree: int = 3
    coeff: int = 4


@dataclass
class FuzzReport:
    checks: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.failures


DEFAULT_OPS = {
    "weyl_mul": lambda a, b: a * b,
    "homog_mul": lambda a, b: a * b,
    "apply": lambda op, f: op.apply(f),
}


def algebra_fuzz(seed, sizes=FuzzSizes(), ops=None) -> FuzzReport:
    """Replay the algebra's defining identities on seeded random inputs.

    ``ops`` overrides the product and action entry points, so a test can
    inject a wrong multiplication and confirm the suite notices.
    """
    table = dict(DEFAULT_OPS)
    if ops:
        table.update(ops)
    rng = random.Random(seed)
    rep = FuzzReport()

    for _ in range(sizes.trials):
        n = rng.randint(1, sizes.n_max)
        ctx = OrderContext(random_linear_form(rng, n), random_tiebreak(rng, n))
        _fuzz_products(rng, rep, table, n, sizes)
        _fuzz_homogenization(rng, rep, table, n, sizes)
        _fuzz_orders(rng, rep, ctx, n, sizes)
        _fuzz_symbols(rng, rep, table, ctx, n, sizes)
        _fuzz_division(rng, rep, ctx, n, sizes)
    return rep


def _note(rep, condition, label, *payload):
    rep.checks += 1
    if not condition:
        rep.failures.append((label,) + tuple(str(p) for p in payload))


def _fuzz_products(rng, rep, table, n, sizes):
    mk = lambda: random_weyl(rng, n, sizes.terms, sizes.degree, sizes.coeff)
    mul = table["weyl_mul"]
    a, b, c = mk(), mk(), mk()
    _note(rep, mul(mul(a, b), c) == mul(a, mul(b, c)), "weyl product associativity", a, b, c)
    _note(rep, mul(a, b + c) == mul(a, b) + mul(a, c), "weyl left distributivity", a, b, c)

    f = random_polynomial(rng, n, sizes.terms, sizes.degree, sizes.coeff)
    act = table["apply"]
    _note(
        rep,
        act(mul(a, b), f) == act(a, act(b, f)),
        "operator action is a homomorphism", a, b, f,
    )

    hk = lambda: random_homog(rng, n, sizes.terms, sizes.degree, sizes.coeff)
    hmul = table["homog_mul"]
    ha, hb, hc = hk(), hk(), hk()
    _note(rep, hmul(hmul(ha, hb), hc) == hmul(ha, hmul(hb, hc)), "graded associativity", ha, hb, hc)
    t = HomogOperator.t(n)
    _note(rep, hmul(t, ha) == hmul(ha, t), "t is central", ha)

    d1, d2 = rng.randint(0, sizes.degree), rng.randint(0, sizes.degree)
    g1 = random_homogeneous(rng, n, d1, sizes.terms, sizes.coeff)
    g2 = random_homogeneous(rng, n, d2, sizes.terms, sizes.coeff)
    prod = hmul(g1, g2)
    _note(rep, is_homogeneous(prod), "homogeneous elements close under product", g1, g2)
    if not g1.is_zero() and not g2.is_zero():
        ok = not prod.is_zero() and graded_degree(prod) == d1 + d2
        _note(rep, ok, "graded degrees add", g1, g2)

    for op in (a, b, ha, hb):
        _note(rep, all(coeff != 0 for coeff in op.terms.values()), "no stored zeros", op)


def _fuzz_homogenization(rng, rep, table, n, sizes):
    mul = table["weyl_mul"]
    hmul = table["homog_mul"]
    mk = lambda: random_weyl(rng, n, sizes.terms, sizes.degree, sizes.coeff)
    p, q = mk(), mk()
    if not p.is_zero() and not q.is_zero():
        _note(
            rep,
            homogenize(mul(p, q)) == hmul(homogenize(p), homogenize(q)),
            "homogenization is multiplicative", p, q,
        )
        s = p + q
        if not s.is_zero():
            b, c, d = p.total_degree(), q.total_degree(), s.total_degree()
            e = max(b, c)
            _note(
                rep,
                homogenize(s).t_shift(e - d)
                == homogenize(p).t_shift(e - b) + homogenize(q).t_shift(e - c),
                "homogenization sum law", p, q,
            )
    if not p.is_zero():
        _note(rep, dehomogenize(homogenize(p)) == p, "dehomogenize undoes homogenize", p)

    d = rng.randint(0, sizes.degree)
    g = random_homogeneous(rng, n, d, sizes.terms, sizes.coeff)
    if not g.is_zero():
        down = dehomogenize(g)
        _note(rep, not down.is_zero(), "homogeneous elements survive t = 1", g)
        if not down.is_zero():
            _note(
                rep,
                homogenize(down).t_shift(d - down.total_degree()) == g,
                "t power recovers a homogeneous element", g,
            )


def _fuzz_orders(rng, rep, ctx, n, sizes):
    mk = lambda: _random_exponent(rng, 2 * n, sizes.degree)
    u, v, w = mk(), mk(), mk()
    ku, kv = ctx.weighted_key(u), ctx.weighted_key(v)
    _note(rep, (ku == kv) == (u == v), "weighted key separates exponents", u, v)
    _note(
        rep,
        (ku < kv) == (ctx.weighted_key(vec_add(u, w)) < ctx.weighted_key(vec_add(v, w))),
        "weighted order is translation invariant", u, v, w,
    )
    hu, hv = (rng.randint(0, sizes.degree),) + u, (rng.randint(0, sizes.degree),) + v
    _note(
        rep,
        ctx.graded_key((0,) * (2 * n + 1)) <= ctx.graded_key(hu),
        "unit exponent is graded-minimal", hu,
    )
    if vec_leq(hu, hv) and hu != hv:
        _note(rep, ctx.graded_key(hu) < ctx.graded_key(hv), "graded order refines divisibility", hu, hv)


def _fuzz_symbols(rng, rep, table, ctx, n, sizes):
    mul = table["weyl_mul"]
    mk = lambda: random_weyl(rng, n, sizes.terms, sizes.degree, sizes.coeff)
    p, q = mk(), mk()
    if p.is_zero() or q.is_zero():
        return
    form = ctx.form
    prod = mul(p, q)
    if prod.is_zero():
        _note(rep, False, "product of nonzero operators vanished", p, q)
        return
    _note(
        rep,
        form.weight(prod) == form.weight(p) + form.weight(q),
        "weights add under the product", p, q,
    )
    _note(
        rep,
        leading_term(ctx, prod).exponent
        == vec_add(leading_term(ctx, p).exponent, leading_term(ctx, q).exponent),
        "leading exponents add under the product", p, q,
    )
    sp, sq = principal_symbol(ctx, p), principal_symbol(ctx, q)
    spq = mul(sp, sq)
    if spq.is_zero():
        _note(rep, False, "product of principal symbols vanished", p, q)
        return
    _note(
        rep,
        principal_symbol(ctx, prod) == principal_symbol(ctx, spq),
        "principal symbols are multiplicative", p, q,
    )
    if is_graded_commutative(form):
        comm = spq - mul(sq, sp)
        _note(
            rep,
            form.weight(comm) < form.weight(p) + form.weight(q),
            "symbols commute in the graded algebra", p, q,
        )
    hp = homogenize(p)
    _note(
        rep,
        project_exponent(leading_term(ctx, hp).exponent) == leading_term(ctx, p).exponent,
        "projection sends the graded lead to the weighted lead", p,
    )
    s = p + q
    if not s.is_zero():
        top = max(ctx.weighted_key(leading_term(ctx, p).exponent), ctx.weighted_key(leading_term(ctx, q).exponent))
        ks = ctx.weighted_key(leading_term(ctx, s).exponent)
        _note(rep, ks <= top, "lead of a sum is bounded by the leads", p, q)
        if leading_term(ctx, p).exponent != leading_term(ctx, q).exponent:
            _note(rep, ks == top, "distinct leads survive addition", p, q)


def _fuzz_division(rng, rep, ctx, n, sizes):
    divisors = []
    for _ in range(rng.randint(1, 3)):
        g = random_homogeneous(rng, n, rng.randint(0, sizes.degree), sizes.terms, sizes.coeff)
        if not g.is_zero():
            divisors.append(g)
    if not divisors:
        return
    h = random_homog(rng, n, sizes.terms, sizes.degree, sizes.coeff)
    divide(ctx, h, divisors)  # raises if its own certificates fail
    _note(rep, True, "division certificates verified")

    # uniqueness probe: a decomposition that already satisfies the support
    # conditions is the one divide returns
    leads = [leading_term(ctx, d).exponent for d in divisors]
    partition = RegionPartition(tuple(leads))
    quotients = []
    for i in range(len(divisors)):
        q = random_homog(rng, n, sizes.terms, sizes.degree, sizes.coeff)
        kept = {
            m: c
            for m, c in q.terms.items()
            if partition.classify(vec_add(leads[i], m)) == i
        }
        quotients.append(HomogOperator(n, kept))
    remainder = divide(ctx, random_homog(rng, n, sizes.terms, sizes.degree, sizes.coeff), divisors).remainder
    built = remainder
    for q, d in zip(quotients, divisors):
        built = built + q * d
    redo = divide(ctx, built, divisors)
    _note(
        rep,
        tuple(redo.quotients) == tuple(quotients) and redo.remainder == remainder,
        "division output is the unique valid decomposition", built,
    )
