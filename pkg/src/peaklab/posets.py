"""Labeled posets, their signed-symmetric cousins, and the counting oracles.

The central objects are totally ordered image alphabets whose elements carry
a sign flag epsilon.  A map f from a labeled poset into such an alphabet is
admissible when, for every strict relation i <_P j,

    f(i) <  f(j),             or
    f(i) == f(j)  with  epsilon == +  if i < j as integers,
                        epsilon == -  if i > j as integers.

With an all-plus alphabet this is the classical weak/strict rule, so one
comparator drives both the ordinary and the enriched counts.  Chains get a
linear-time scan with prefix sums; general posets get backtracking.  These
enumerators are deliberately naive in structure: they are the oracle that
every closed formula in the package is tested against.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .exact import MultiPoly
from .limits import IMAGE_SET_MAX_K, LINEXT_MAX, POSET_ORACLE_MAX_N, check_limit
from .perms import Perm, hyperoctahedral_group, validate_perm


@dataclass(frozen=True)
class Alphabet:
    """A finite totally ordered image set with sign flags and variable slots.

    slots are implicit: element i is the i-th smallest.  eps[i] is its sign
    flag, exps[i] the exponent vector it contributes in monomial mode (over
    `arity` variables), labels[i] a display string.  neg maps an element to
    its negation and zero names the self-negative anchor; both are None for
    alphabets with no sign symmetry.  mags[i] is the magnitude used for
    support bookkeeping, None for product alphabets.
    """

    name: str
    eps: tuple[int, ...]
    arity: int
    exps: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...]
    mags: tuple[int, ...] | None = None
    neg: tuple[int, ...] | None = None
    zero: int | None = None

    def __post_init__(self):
        if len(self.exps) != len(self.eps) or len(self.labels) != len(self.eps):
            raise ValueError("slot arrays disagree in length")
        if self.neg is not None:
            # the only order-reversing involution of a chain is full reversal
            m = len(self.eps)
            if list(self.neg) != [m - 1 - i for i in range(m)]:
                raise ValueError("negation must reverse the alphabet order")
            if any(self.eps[m - 1 - i] != self.eps[i] for i in range(m)):
                raise ValueError("negation must preserve sign flags")
            if self.zero is None or 2 * self.zero != m - 1:
                raise ValueError("sign-symmetric alphabet needs a central zero element")

    @property
    def size(self) -> int:
        return len(self.eps)

    def le(self, a: int, b: int, need: int) -> bool:
        """a before b, with ties broken by the sign flag `need`."""
        return a < b or (a == b and self.eps[a] == need)


def _unit(arity: int, at: int) -> tuple[int, ...]:
    e = [0] * arity
    e[at] = 1
    return tuple(e)


def ordinary_alphabet(k: int) -> Alphabet:
    """The chain 1 < 2 < ... < k, all flags +."""
    return Alphabet(
        name=f"ordinary[{k}]",
        eps=(1,) * k,
        arity=k + 1,
        exps=tuple(_unit(k + 1, v) for v in range(1, k + 1)),
        labels=tuple(str(v) for v in range(1, k + 1)),
        mags=tuple(range(1, k + 1)),
    )


def ordinary_b_alphabet(k: int) -> Alphabet:
    """The chain -k < ... < 0 < ... < k, all flags +, with negation."""
    vals = list(range(-k, k + 1))
    return Alphabet(
        name=f"ordinaryB[{k}]",
        eps=(1,) * (2 * k + 1),
        arity=k + 1,
        exps=tuple(_unit(k + 1, abs(v)) for v in vals),
        labels=tuple(str(v) for v in vals),
        mags=tuple(abs(v) for v in vals),
        neg=tuple(2 * k - i for i in range(2 * k + 1)),
        zero=k,
    )


def enriched_alphabet(k: int) -> Alphabet:
    """-1 < 1 < -2 < 2 < ... < -k < k; the flag of -m is -, of m is +."""
    eps, exps, labels, mags = [], [], [], []
    for m in range(1, k + 1):
        for e in (-1, 1):
            eps.append(e)
            exps.append(_unit(k + 1, m))
            labels.append(str(-m if e < 0 else m))
            mags.append(m)
    return Alphabet(f"enriched[{k}]", tuple(eps), k + 1, tuple(exps), tuple(labels), tuple(mags))


def left_enriched_alphabet(k: int) -> Alphabet:
    """0 < -1 < 1 < ... < -k < k, with the flag of 0 forced to +."""
    base = enriched_alphabet(k)
    return Alphabet(
        name=f"left_enriched[{k}]",
        eps=(1,) + base.eps,
        arity=k + 1,
        exps=(_unit(k + 1, 0),) + base.exps,
        labels=("0",) + base.labels,
        mags=(0,) + base.mags,
    )


def right_enriched_alphabet(k: int) -> Alphabet:
    """-1 < 1 < ... < -k < k < -(k+1): one extra minus-flagged top element."""
    base = enriched_alphabet(k)
    pad = tuple(e + (0,) for e in base.exps)
    return Alphabet(
        name=f"right_enriched[{k}]",
        eps=base.eps + (-1,),
        arity=k + 2,
        exps=pad + (_unit(k + 2, k + 1),),
        labels=base.labels + (str(-(k + 1)),),
        mags=base.mags + (k + 1,),
    )


def exterior_enriched_alphabet(k: int) -> Alphabet:
    """0 < -1 < 1 < ... < -(k-1) < k-1 < -k; empty when k = 0."""
    if k == 0:
        return Alphabet("exterior_enriched[0]", (), 1, (), (), ())
    base = left_enriched_alphabet(k - 1)
    pad = tuple(e + (0,) for e in base.exps)
    return Alphabet(
        name=f"exterior_enriched[{k}]",
        eps=base.eps + (-1,),
        arity=k + 1,
        exps=pad + (_unit(k + 1, k),),
        labels=base.labels + (str(-k),),
        mags=base.mags + (k,),
    )


def b_enriched_alphabet(k: int) -> Alphabet:
    """-k < -k' < ... < -1 < -1' < 0 < 1' < 1 < ... < k' < k.

    m' denotes the minus-flagged copy of m; negation sends m' to (-m)' and
    m to -m, so it preserves flags while reversing the order.
    """
    eps, exps, labels, mags = [], [], [], []
    for m in range(-k, k + 1):
        if m == 0:
            eps.append(1)
            exps.append(_unit(k + 1, 0))
            labels.append("0")
            mags.append(0)
            continue
        # below zero the plus copy comes first, above zero last
        order = (1, -1) if m < 0 else (-1, 1)
        for e in order:
            eps.append(e)
            exps.append(_unit(k + 1, abs(m)))
            labels.append(f"{m}'" if e < 0 else str(m))
            mags.append(abs(m))
    size = 4 * k + 1
    idx = {(labels[i]): i for i in range(size)}
    neg = []
    for i in range(size):
        lab = labels[i]
        if lab == "0":
            neg.append(i)
        elif lab.endswith("'"):
            neg.append(idx[f"{-int(lab[:-1])}'"])
        else:
            neg.append(idx[str(-int(lab))])
    return Alphabet(
        name=f"B_enriched[{k}]",
        eps=tuple(eps),
        arity=k + 1,
        exps=tuple(exps),
        labels=tuple(labels),
        mags=tuple(mags),
        neg=tuple(neg),
        zero=2 * k,
    )


IMAGE_SET_KINDS = {
    "ordinary": ordinary_alphabet,
    "ordinaryB": ordinary_b_alphabet,
    "enriched": enriched_alphabet,
    "left_enriched": left_enriched_alphabet,
    "right_enriched": right_enriched_alphabet,
    "exterior_enriched": exterior_enriched_alphabet,
    "B_enriched": b_enriched_alphabet,
}

_SIGNED_KINDS = {"ordinaryB", "B_enriched"}


@dataclass(frozen=True)
class ImageSetSpec:
    """Which alphabet family, at which size parameter k."""

    kind: str
    k: int

    def __post_init__(self):
        if self.kind not in IMAGE_SET_KINDS:
            raise ValueError(f"unknown image-set kind {self.kind!r}")
        if self.k < 0:
            raise ValueError("k must be nonnegative")

    @property
    def signed(self) -> bool:
        return self.kind in _SIGNED_KINDS

    def alphabet(self) -> Alphabet:
        return IMAGE_SET_KINDS[self.kind](self.k)


def product_alphabet(first: Alphabet, second: Alphabet, mode: str) -> Alphabet:
    """Pair alphabet in the up-down or lexicographic order.

    up-down: pairs sorted by the first coordinate, the second rising when
    the first coordinate's flag is + and falling when it is -; the pair's
    flag is the product of the two.  lex: second coordinate always rising,
    pair flag taken from the second coordinate.  Negation (when both
    factors have one) acts coordinatewise.
    """
    if mode not in ("updown", "lex"):
        raise ValueError(f"unknown product mode {mode!r}")
    pairs: list[tuple[int, int]] = []
    for a in range(first.size):
        rng = range(second.size)
        if mode == "updown" and first.eps[a] < 0:
            rng = reversed(rng)
        pairs.extend((a, b) for b in rng)
    arity = first.arity + second.arity
    eps, exps, labels = [], [], []
    for a, b in pairs:
        if mode == "updown":
            eps.append(first.eps[a] * second.eps[b])
        else:
            eps.append(second.eps[b])
        exps.append(first.exps[a] + second.exps[b])
        labels.append(f"({first.labels[a]},{second.labels[b]})")
    neg = zero = None
    if first.neg is not None and second.neg is not None:
        index = {p: i for i, p in enumerate(pairs)}
        neg = tuple(index[(first.neg[a], second.neg[b])] for a, b in pairs)
        zero = index[(first.zero, second.zero)]
    return Alphabet(
        name=f"{first.name}x{second.name}:{mode}",
        eps=tuple(eps),
        arity=arity,
        exps=tuple(exps),
        labels=tuple(labels),
        neg=neg,
        zero=zero,
    )


# --- chains ------------------------------------------------------------------


def chain_weight_sum(
    alphabet: Alphabet,
    labels: Sequence[int],
    anchored: bool = False,
    mode: str = "count",
):
    """Admissible maps from the chain labels[0] <_P labels[1] <_P ... .

    anchored pins a virtual bottom element labeled 0 to the alphabet's zero;
    this is how sign-symmetric chains reduce to their positive half.  mode
    'count' returns an integer, 'poly' the sum of exponent monomials.
    """
    size = alphabet.size
    if mode == "count":
        weights = [1] * size
        zero_v = 0
    elif mode == "poly":
        weights = [MultiPoly.monomial(alphabet.arity, e) for e in alphabet.exps]
        zero_v = MultiPoly.zero(alphabet.arity)
    else:
        raise ValueError(f"unknown mode {mode!r}")

    if anchored:
        if alphabet.zero is None:
            raise ValueError("anchored chain needs a zero element")
        state = [zero_v] * size
        one = 1 if mode == "count" else MultiPoly.constant(alphabet.arity, 1)
        state[alphabet.zero] = one
        prev = 0
        todo = list(labels)
    else:
        if not labels:
            return 1 if mode == "count" else MultiPoly.constant(alphabet.arity, 1)
        state = list(weights)
        prev = labels[0]
        todo = list(labels[1:])

    eps = alphabet.eps
    for lab in todo:
        need = 1 if prev < lab else -1
        run = zero_v
        new = []
        for j in range(size):
            stay = state[j] if eps[j] == need else zero_v
            new.append(weights[j] * (run + stay))
            run = run + state[j]
        state = new
        prev = lab
    total = zero_v
    for s in state:
        total = total + s
    return total


# --- posets ------------------------------------------------------------------


class Poset:
    """Strict partial order on the labels 1..n, stored transitively closed."""

    __slots__ = ("n", "lt")

    def __init__(self, n: int, lt: tuple[int, ...]):
        self.n = n
        self.lt = lt  # lt[i] bit j set <=> label i+1 <_P label j+1

    @classmethod
    def from_covers(cls, n: int, covers: Sequence[Sequence[int]]) -> "Poset":
        lt = [0] * n
        for a, b in covers:
            if not (1 <= a <= n and 1 <= b <= n) or a == b:
                raise ValueError(f"bad cover relation ({a},{b})")
            lt[a - 1] |= 1 << (b - 1)
        lt = _close(lt)
        for i in range(n):
            if lt[i] >> i & 1:
                raise ValueError("relation has a cycle")
        return cls(n, tuple(lt))

    def less(self, a: int, b: int) -> bool:
        return bool(self.lt[a - 1] >> (b - 1) & 1)

    def relations(self) -> Iterator[tuple[int, int]]:
        for i in range(self.n):
            m = self.lt[i]
            while m:
                j = (m & -m).bit_length() - 1
                yield (i + 1, j + 1)
                m &= m - 1

    def relation_count(self) -> int:
        return sum(m.bit_count() for m in self.lt)

    def chain_sequence(self) -> tuple[int, ...] | None:
        """The labels bottom-up if this is a total order, else None."""
        if self.relation_count() != self.n * (self.n - 1) // 2:
            return None
        order = sorted(range(1, self.n + 1), key=lambda v: -self.lt[v - 1].bit_count())
        return tuple(order)

    def linear_extensions(self, force: bool = False) -> list[Perm]:
        """All pi with a <_P b implying a placed before b in pi.

        The result lists one-line tuples: pi(s) is the label in position s.
        """
        check_limit("linear extensions", self.n, LINEXT_MAX["A"], force)
        n = self.n
        below = [0] * (n + 1)
        for a, b in self.relations():
            below[b] |= 1 << a
        out: list[Perm] = []
        seq: list[int] = []

        def rec(used: int):
            if len(seq) == n:
                out.append(tuple(seq))
                return
            for v in range(1, n + 1):
                if used >> v & 1:
                    continue
                if below[v] & ~used:
                    continue
                seq.append(v)
                rec(used | (1 << v))
                seq.pop()

        rec(0)
        return out

    def __repr__(self) -> str:
        rels = ", ".join(f"{a}<{b}" for a, b in self.relations())
        return f"Poset(n={self.n}, {{{rels}}})"


class BPoset:
    """Strict partial order on {-n..n} with i <_P j forcing -j <_P -i.

    Cover input is given on any mix of signed labels (0 allowed); the
    mirror relations are added automatically before closing.
    """

    __slots__ = ("n", "lt")

    def __init__(self, n: int, lt: tuple[int, ...]):
        self.n = n
        self.lt = lt  # index label+n; bit (label'+n)

    @classmethod
    def from_covers(cls, n: int, covers: Sequence[Sequence[int]]) -> "BPoset":
        size = 2 * n + 1
        lt = [0] * size
        for a, b in covers:
            if not (-n <= a <= n and -n <= b <= n) or a == b:
                raise ValueError(f"bad cover relation ({a},{b})")
            lt[a + n] |= 1 << (b + n)
            lt[-b + n] |= 1 << (-a + n)
        lt = _close(lt)
        for i in range(size):
            if lt[i] >> i & 1:
                raise ValueError("relation has a cycle")
        p = cls(n, tuple(lt))
        for a, b in p.relations():
            if not p.less(-b, -a):
                raise AssertionError("sign symmetry broken after closure")
        return p

    def less(self, a: int, b: int) -> bool:
        return bool(self.lt[a + self.n] >> (b + self.n) & 1)

    def relations(self) -> Iterator[tuple[int, int]]:
        n = self.n
        for i in range(2 * n + 1):
            m = self.lt[i]
            while m:
                j = (m & -m).bit_length() - 1
                yield (i - n, j - n)
                m &= m - 1

    def relation_count(self) -> int:
        return sum(m.bit_count() for m in self.lt)

    def chain_sequence(self) -> tuple[int, ...] | None:
        """Labels above 0, bottom-up, if this is a total order on {-n..n}."""
        size = 2 * self.n + 1
        if self.relation_count() != size * (size - 1) // 2:
            return None
        order = sorted(range(-self.n, self.n + 1), key=lambda v: -self.lt[v + self.n].bit_count())
        at = order.index(0)
        return tuple(order[at + 1 :])

    def linear_extensions(self, force: bool = False) -> list[Perm]:
        """Signed permutations whose induced total order refines this one.

        pi induces -pi(n) < ... < -pi(1) < 0 < pi(1) < ... < pi(n); the
        extension test compares positions in that order.
        """
        check_limit("signed linear extensions", self.n, LINEXT_MAX["B"], force)
        out = []
        for pi in hyperoctahedral_group(self.n, force=True):
            pos = {0: 0}
            for s, v in enumerate(pi, start=1):
                pos[v] = s
                pos[-v] = -s
            if all(pos[a] < pos[b] for a, b in self.relations()):
                out.append(pi)
        return out

    def __repr__(self) -> str:
        rels = ", ".join(f"{a}<{b}" for a, b in self.relations())
        return f"BPoset(n={self.n}, {{{rels}}})"


def _close(lt: list[int]) -> list[int]:
    """Transitive closure, Warshall on bit rows."""
    size = len(lt)
    for k in range(size):
        row = lt[k]
        for i in range(size):
            if lt[i] >> k & 1:
                lt[i] |= row
    return lt


def zigzag_poset(pi, positions, signed: bool | None = None):
    """Chain-shaped poset on the values of pi, bent at the given positions.

    Consecutive values satisfy pi(s) <_P pi(s+1) unless s is listed, in
    which case the relation flips.  The signed variant allows position 0,
    compares against the virtual pi(0) = 0, and closes under the sign
    symmetry.  With signed=None the variant is inferred from the entries
    and from whether 0 is listed.
    """
    pi = tuple(int(v) for v in pi)
    ps = set(int(s) for s in positions)
    if signed is None:
        signed = any(v < 0 for v in pi) or 0 in ps
    n = len(pi)
    validate_perm(pi, signed=signed)
    if signed:
        if not ps <= set(range(0, n)):
            raise ValueError("positions must lie in 0..n-1")
        seq = (0,) + pi
        covers = []
        for s in range(n):
            a, b = seq[s], seq[s + 1]
            covers.append((b, a) if s in ps else (a, b))
        return BPoset.from_covers(n, covers)
    if not ps <= set(range(1, n)):
        raise ValueError("positions must lie in 1..n-1")
    covers = []
    for s in range(1, n):
        a, b = pi[s - 1], pi[s]
        covers.append((b, a) if s in ps else (a, b))
    return Poset.from_covers(n, covers)


def chain_poset(pi, signed: bool | None = None):
    """The total order pi(1) <_P ... <_P pi(n) (signed: anchored below by 0)."""
    return zigzag_poset(pi, (), signed=signed)


# --- generic enumeration ------------------------------------------------------


def _assignments_a(P: Poset, alphabet: Alphabet) -> Iterator[tuple[int, ...]]:
    """All admissible slot assignments for an unsigned poset, as tuples
    indexed by label-1."""
    n = P.n
    size = alphabet.size
    if n == 0:
        yield ()
        return
    # fill in a topological order so every constraint looks backwards
    order: list[int] = []
    placed = 0
    below = [0] * (n + 1)
    for a, b in P.relations():
        below[b] |= 1 << a
    while len(order) < n:
        for v in range(1, n + 1):
            if not placed >> v & 1 and not below[v] & ~placed:
                order.append(v)
                placed |= 1 << v
                break
    checks: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    pos = {v: i for i, v in enumerate(order)}
    for a, b in P.relations():
        need = 1 if a < b else -1
        checks[pos[b]].append((a, need))
    f = [0] * (n + 1)

    def rec(step: int) -> Iterator[tuple[int, ...]]:
        if step == n:
            yield tuple(f[1:])
            return
        v = order[step]
        for s in range(size):
            ok = True
            for a, need in checks[step]:
                if not alphabet.le(f[a], s, need):
                    ok = False
                    break
            if ok:
                f[v] = s
                yield from rec(step + 1)

    yield from rec(0)


def _assignments_b(P: BPoset, alphabet: Alphabet) -> Iterator[tuple[int, ...]]:
    """Admissible assignments for a sign-symmetric poset, recorded on the
    representatives 1..n; f(-i) and f(0) are implied."""
    if alphabet.neg is None:
        raise ValueError("signed poset needs a sign-symmetric alphabet")
    n = P.n
    size = alphabet.size
    if n == 0:
        yield ()
        return
    neg = alphabet.neg
    zero = alphabet.zero
    checks: list[list[tuple[int, int, int]]] = [[] for _ in range(n + 1)]
    for a, b in P.relations():
        need = 1 if a < b else -1
        checks[max(abs(a), abs(b))].append((a, b, need))
    f = [0] * (n + 1)

    def slot(x: int) -> int:
        if x == 0:
            return zero
        return f[x] if x > 0 else neg[f[-x]]

    def rec(m: int) -> Iterator[tuple[int, ...]]:
        if m > n:
            yield tuple(f[1:])
            return
        for s in range(size):
            f[m] = s
            if all(alphabet.le(slot(a), slot(b), need) for a, b, need in checks[m]):
                yield from rec(m + 1)

    yield from rec(1)


def count_partitions(P, spec: ImageSetSpec, force: bool = False) -> int:
    """Number of admissible maps from P into the alphabet spec describes.

    The universal oracle: backtracking for general posets, a prefix-sum
    scan for chains.  Guarded by default at n <= 6, k <= 5.
    """
    check_limit("partition oracle size", P.n, POSET_ORACLE_MAX_N, force)
    check_limit("partition oracle alphabet", spec.k, IMAGE_SET_MAX_K, force)
    signed = isinstance(P, BPoset)
    if signed != spec.signed:
        raise ValueError(f"{spec.kind} does not apply to {type(P).__name__}")
    alphabet = spec.alphabet()
    seq = P.chain_sequence()
    if seq is not None:
        return chain_weight_sum(alphabet, seq, anchored=signed, mode="count")
    it = _assignments_b(P, alphabet) if signed else _assignments_a(P, alphabet)
    return sum(1 for _ in it)


def support_counts(P: Poset, spec: ImageSetSpec, force: bool = False) -> tuple[list, list]:
    """Bucket enriched maps by which magnitudes they hit.

    Returns (c, c0) with c[l-1] the number of maps whose magnitude support
    is exactly {1..l} (l = 1..n) and c0[l] the number with support exactly
    {0..l} (l = 0..n-1).  Binomially weighted sums over these reproduce the
    interior and left counts at every k, which is how the caller uses them.
    """
    if spec.kind not in ("enriched", "left_enriched"):
        raise ValueError("support counting is defined for the enriched kinds")
    if spec.k < P.n:
        raise ValueError("need k >= n so every support pattern can occur")
    check_limit("partition oracle size", P.n, POSET_ORACLE_MAX_N, force)
    check_limit("partition oracle alphabet", spec.k, IMAGE_SET_MAX_K, force)
    alphabet = left_enriched_alphabet(spec.k)
    n = P.n
    c = [0] * n
    c0 = [0] * n
    for assign in _assignments_a(P, alphabet):
        mags = {alphabet.mags[s] for s in assign}
        top = max(mags, default=0)
        if 0 in mags:
            if mags == set(range(0, top + 1)) and top <= n - 1:
                c0[top] += 1
        else:
            if mags == set(range(1, top + 1)) and 1 <= top <= n:
                c[top - 1] += 1
    return c, c0


def partition_monomials(P, spec_or_alphabet, force: bool = False) -> MultiPoly:
    """Sum of exponent monomials over all admissible maps.

    Accepts an ImageSetSpec or a bare Alphabet (the latter for product
    alphabets, which no spec kind names).
    """
    if isinstance(spec_or_alphabet, ImageSetSpec):
        alphabet = spec_or_alphabet.alphabet()
        check_limit("partition oracle alphabet", spec_or_alphabet.k, IMAGE_SET_MAX_K, force)
    else:
        alphabet = spec_or_alphabet
    check_limit("partition oracle size", P.n, POSET_ORACLE_MAX_N, force)
    signed = isinstance(P, BPoset)
    if signed and alphabet.neg is None:
        raise ValueError("signed poset needs a sign-symmetric alphabet")
    seq = P.chain_sequence()
    if seq is not None:
        return chain_weight_sum(alphabet, seq, anchored=signed, mode="poly")
    out = MultiPoly.zero(alphabet.arity)
    it = _assignments_b(P, alphabet) if signed else _assignments_a(P, alphabet)
    for assign in it:
        exps = [0] * alphabet.arity
        for s in assign:
            for i, e in enumerate(alphabet.exps[s]):
                exps[i] += e
        out = out + MultiPoly.monomial(alphabet.arity, exps)
    return out
