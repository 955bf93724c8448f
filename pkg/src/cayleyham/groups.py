"""Finite groups with a (2,s,3) generating pair.

Groups are realized concretely either from two permutations (closure by
breadth-first products) or from a presentation via Todd-Coxeter coset
enumeration.  Either way the result is a :class:`FiniteGroup` carrying an
eager multiplication table, with the identity at index 0.

Permutations multiply left to right: ``(p * q)(i) = q(p(i))``, so that words
in the generators read the same way as paths in the Cayley graph.
"""

from __future__ import annotations

import json
import re
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .errors import CosetEnumerationError, GroupValidationError, PresentationError

# generator columns of a coset table; letters as used in words
LETTERS = "aAbB"
GEN_A, GEN_AINV, GEN_B, GEN_BINV = range(4)
INVERSE = (1, 0, 3, 2)

DEFAULT_MAX_COSETS = 10**6
DEFAULT_MAX_ORDER = 200_000


# ---------------------------------------------------------------------------
# permutations

@dataclass(frozen=True)
class Permutation:
    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(x) for x in self.images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"not a permutation: {images}")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(tuple(range(degree)))

    @classmethod
    def from_cycles(cls, cycles: Sequence[Sequence[int]], degree: int, base: int = 1) -> "Permutation":
        """Build from cycle notation; ``base=1`` for the usual 1-based points."""
        images = list(range(degree))
        for cyc in cycles:
            pts = [p - base for p in cyc]
            for i, p in enumerate(pts):
                images[p] = pts[(i + 1) % len(pts)]
        return cls(tuple(images))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __mul__(self, other: "Permutation") -> "Permutation":
        if other.degree != self.degree:
            raise ValueError("degree mismatch")
        return Permutation(tuple(other.images[i] for i in self.images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def order(self) -> int:
        k, p = 1, self
        while not p.is_identity():
            p = p * self
            k += 1
        return k

    def __call__(self, i: int) -> int:
        return self.images[i]


# ---------------------------------------------------------------------------
# words and presentations

def free_reduce(word: Iterable[int]) -> tuple[int, ...]:
    out: list[int] = []
    for x in word:
        if out and out[-1] == INVERSE[x]:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def invert_word(word: Sequence[int]) -> tuple[int, ...]:
    return tuple(INVERSE[x] for x in reversed(word))


def word_to_str(word: Sequence[int]) -> str:
    return "".join(LETTERS[x] for x in word) or "e"


def str_to_word(text: str) -> tuple[int, ...]:
    if text in ("", "e", "1"):
        return ()
    try:
        return tuple(LETTERS.index(c) for c in text)
    except ValueError:
        raise PresentationError(f"bad word {text!r}") from None


@dataclass(frozen=True)
class GroupPresentation:
    """<a, b | a^2, b^s, (ab)^3, extra relators...>"""

    s: int
    extra_relators: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self):
        if self.s < 3:
            raise PresentationError(f"s = {self.s} < 3")
        for r in self.extra_relators:
            if not r or free_reduce(r) != tuple(r):
                raise PresentationError(f"relator {word_to_str(r)} is empty or not freely reduced")

    @property
    def relators(self) -> list[tuple[int, ...]]:
        base = [(GEN_A, GEN_A), (GEN_B,) * self.s, (GEN_A, GEN_B) * 3]
        return base + [tuple(r) for r in self.extra_relators]

    def __str__(self) -> str:
        parts = [f"a^2 = b^{self.s} = (a*b)^3 = 1"]
        parts += [f"{'*'.join(word_to_str(r))} = 1" for r in self.extra_relators]
        return "; ".join(parts)


class _Parser:
    """Recursive-descent parser for one presentation statement."""

    _token = re.compile(r"\s*(?:(\d+)|(.))")

    def __init__(self, text: str, offset: int):
        self.tokens: list[tuple[str, int]] = []
        for m in self._token.finditer(text):
            if m.group(1) is not None:
                self.tokens.append((m.group(1), offset + m.start(1)))
            elif m.group(2) is not None and not m.group(2).isspace():
                self.tokens.append((m.group(2), offset + m.start(2)))
        self.end = offset + len(text)
        self.i = 0

    def peek(self) -> str | None:
        return self.tokens[self.i][0] if self.i < len(self.tokens) else None

    def pos(self) -> int:
        return self.tokens[self.i][1] if self.i < len(self.tokens) else self.end

    def take(self, expected: str | None = None) -> str:
        tok = self.peek()
        if tok is None or (expected is not None and tok != expected):
            want = expected or "a token"
            raise PresentationError(f"expected {want!r}, found {tok!r}", self.pos())
        self.i += 1
        return tok

    def statement(self) -> list[tuple[int, ...] | None]:
        """Returns the chain of expressions; ``None`` stands for a literal 1."""
        chain = [self.expr()]
        while self.peek() == "=":
            self.take("=")
            chain.append(self.expr())
        if self.peek() is not None:
            raise PresentationError(f"unexpected {self.peek()!r}", self.pos())
        return chain

    def expr(self):
        if self.peek() == "1":
            self.take()
            return None
        word: list[int] = list(self.term())
        while self.peek() in ("*", "(", "a", "A", "b", "B"):
            if self.peek() == "*":
                self.take()
            word.extend(self.term())
        return tuple(word)

    def term(self) -> tuple[int, ...]:
        tok = self.peek()
        if tok == "(":
            self.take("(")
            inner = self.expr()
            self.take(")")
            base = () if inner is None else inner
        elif tok is not None and tok in LETTERS:
            self.take()
            base = (LETTERS.index(tok),)
        else:
            raise PresentationError(f"expected generator or '(', found {tok!r}", self.pos())
        if self.peek() == "^":
            self.take("^")
            sign = 1
            if self.peek() == "-":
                self.take("-")
                sign = -1
            tok = self.peek()
            if tok is None or not tok.isdigit():
                raise PresentationError("expected integer exponent", self.pos())
            self.take()
            k = int(tok) * sign
            base = base * k if k >= 0 else invert_word(base) * (-k)
        return base


def _split_statements(text: str) -> list[tuple[str, int]]:
    out = []
    start = 0
    for m in re.finditer(r"[;\n]", text + "\n"):
        chunk = text[start:m.start()]
        body = chunk.split("#", 1)[0]
        if body.strip():
            out.append((body, start))
        start = m.end()
    return out


def _is_power_of(word: tuple[int, ...], unit: tuple[int, ...]) -> int:
    if not word or len(word) % len(unit):
        return 0
    k = len(word) // len(unit)
    return k if unit * k == word else 0


def parse_presentation(text: str) -> GroupPresentation:
    """Parse ``a^2 = b^s = (a*b)^3 = 1`` followed by optional extra relators."""
    statements = _split_statements(text)
    if not statements:
        raise PresentationError("empty presentation", 0)
    relators: list[tuple[tuple[int, ...], int]] = []
    for body, offset in statements:
        chain = _Parser(body, offset).statement()
        if any(w is None for w in chain):
            words = [w for w in chain if w is not None]
        elif len(chain) >= 2:
            words = [chain[0] + invert_word(w) for w in chain[1:]]
        else:
            raise PresentationError("statement is not an equation", offset)
        relators.extend((w, offset) for w in words)

    header_offset = statements[0][1]
    seen_a = seen_ab = False
    s = None
    extras = []
    for w, off in relators:
        if off == header_offset:
            if not seen_a and w in ((0, 0), (1, 1)):
                seen_a = True
                continue
            if not seen_ab and (_is_power_of(w, (0, 2)) == 3):
                seen_ab = True
                continue
            if s is None and (_is_power_of(w, (2,)) or _is_power_of(w, (3,))):
                s = len(w)
                continue
        reduced = free_reduce(w)
        if not reduced:
            raise PresentationError("relator reduces to the empty word", off)
        extras.append(reduced)
    if not (seen_a and seen_ab and s is not None):
        raise PresentationError("header 'a^2 = b^s = (a*b)^3 = 1' required", header_offset)
    if s < 3:
        raise PresentationError(f"s = {s} < 3: b must have order at least 3", header_offset)
    return GroupPresentation(s=s, extra_relators=tuple(extras))


# ---------------------------------------------------------------------------
# Todd-Coxeter

@dataclass
class CosetTable:
    rows: list[list[int]]
    status: str  # "complete" | "collapsed" | "overflow"
    cosets_defined: int = 0

    @property
    def num_cosets(self) -> int:
        return len(self.rows)

    def action(self, gen: int) -> Permutation:
        return Permutation(tuple(row[gen] for row in self.rows))


class _ToddCoxeter:
    # HLT strategy: every live coset is scanned under every relator, filling
    # gaps by definitions; coincidences are processed with a queue.

    def __init__(self, max_cosets: int):
        self.table: list[list[int | None]] = [[None] * 4]
        self.p = [0]
        self.max_cosets = max_cosets

    def define(self, alpha: int, x: int):
        if len(self.table) >= self.max_cosets:
            raise CosetEnumerationError(
                f"coset table exceeded {self.max_cosets} cosets", status="overflow")
        beta = len(self.table)
        self.table.append([None] * 4)
        self.p.append(beta)
        self.table[alpha][x] = beta
        self.table[beta][INVERSE[x]] = alpha

    def rep(self, k: int) -> int:
        root = k
        while self.p[root] != root:
            root = self.p[root]
        while self.p[k] != root:
            self.p[k], k = root, self.p[k]
        return root

    def merge(self, k: int, l: int, queue: list[int]):
        phi, psi = self.rep(k), self.rep(l)
        if phi != psi:
            mu, nu = min(phi, psi), max(phi, psi)
            self.p[nu] = mu
            queue.append(nu)

    def coincidence(self, alpha: int, beta: int):
        queue: list[int] = []
        self.merge(alpha, beta, queue)
        i = 0
        while i < len(queue):
            gamma = queue[i]
            i += 1
            for x in range(4):
                delta = self.table[gamma][x]
                if delta is None:
                    continue
                self.table[delta][INVERSE[x]] = None
                mu, nu = self.rep(gamma), self.rep(delta)
                if self.table[mu][x] is not None:
                    self.merge(nu, self.table[mu][x], queue)
                elif self.table[nu][INVERSE[x]] is not None:
                    self.merge(mu, self.table[nu][INVERSE[x]], queue)
                else:
                    self.table[mu][x] = nu
                    self.table[nu][INVERSE[x]] = mu

    def scan_and_fill(self, alpha: int, word: Sequence[int]):
        t = self.table
        f, b = alpha, alpha
        i, j = 0, len(word) - 1
        while True:
            while i <= j and t[f][word[i]] is not None:
                f = t[f][word[i]]
                i += 1
            if i > j:
                if f != alpha:
                    self.coincidence(f, alpha)
                return
            while j >= i and t[b][INVERSE[word[j]]] is not None:
                b = t[b][INVERSE[word[j]]]
                j -= 1
            if j < i:
                self.coincidence(f, b)
                return
            if i == j:
                t[f][word[i]] = b
                t[b][INVERSE[word[i]]] = f
                return
            self.define(f, word[i])

    def live(self, k: int) -> bool:
        return self.p[k] == k

    def run(self, relators, subgroup) -> None:
        for w in subgroup:
            if w:
                self.scan_and_fill(0, w)
        alpha = 0
        while alpha < len(self.table):
            for r in relators:
                if not self.live(alpha):
                    break
                self.scan_and_fill(alpha, r)
            if self.live(alpha):
                for x in range(4):
                    if self.table[alpha][x] is None:
                        self.define(alpha, x)
            alpha += 1

    def compact(self) -> list[list[int]]:
        live = [k for k in range(len(self.table)) if self.live(k)]
        index = {k: i for i, k in enumerate(live)}
        return [[index[self.rep(self.table[k][x])] for x in range(4)] for k in live]


def coset_enumerate(pres: GroupPresentation, subgroup: Sequence[Sequence[int]] = (),
                    max_cosets: int = DEFAULT_MAX_COSETS) -> CosetTable:
    """Enumerate the right cosets of ``<subgroup>`` in the presented group.

    Over the trivial subgroup the columns ``a`` and ``b`` of the resulting
    table are the right regular permutation representation of the group.
    A table that exceeds ``max_cosets`` comes back with status "overflow".
    """
    if max_cosets < 1:
        raise ValueError("max_cosets must be >= 1")
    tc = _ToddCoxeter(max_cosets)
    try:
        tc.run(pres.relators, [tuple(w) for w in subgroup])
    except CosetEnumerationError:
        return CosetTable(rows=[], status="overflow", cosets_defined=len(tc.table))
    rows = tc.compact()
    status = "collapsed" if len(rows) == 1 and not any(subgroup) else "complete"
    return CosetTable(rows=rows, status=status, cosets_defined=len(tc.table))


# ---------------------------------------------------------------------------
# finite groups

@dataclass(eq=False)
class FiniteGroup:
    """A finite group given by its full multiplication table.

    ``mult[x, y]`` is the index of the product ``xy``; index 0 is the identity.
    ``element_words[x]`` spells ``x`` in the letters a, b, B (B = b^-1).
    """

    order: int
    mult: np.ndarray
    inv: np.ndarray
    a_idx: int
    b_idx: int
    element_words: list[str]
    name: str = ""
    elements: list | None = field(default=None, repr=False)
    coset_status: str | None = None

    @property
    def binv_idx(self) -> int:
        return int(self.inv[self.b_idx])

    def mul(self, x: int, y: int) -> int:
        return int(self.mult[x, y])

    def power(self, x: int, k: int) -> int:
        r = 0
        for _ in range(k):
            r = int(self.mult[r, x])
        return r

    def evaluate(self, word: str | Sequence[int]) -> int:
        """Index of the element spelled by ``word``."""
        letters = str_to_word(word) if isinstance(word, str) else word
        gens = (self.a_idx, int(self.inv[self.a_idx]), self.b_idx, self.binv_idx)
        x = 0
        for c in letters:
            x = int(self.mult[x, gens[c]])
        return x

    def closure(self, gens: Iterable[int]) -> set[int]:
        gens = list(gens)
        seen = {0}
        queue = deque([0])
        while queue:
            x = queue.popleft()
            for g in gens:
                y = int(self.mult[x, g])
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return seen

    def check_axioms(self, samples: int | None = None) -> bool:
        """Identity, inverses and associativity (all triples, or a deterministic sample)."""
        n = self.order
        idx = np.arange(n)
        if not (np.array_equal(self.mult[0], idx) and np.array_equal(self.mult[:, 0], idx)):
            return False
        if not np.all(self.mult[idx, self.inv] == 0):
            return False
        for row in self.mult:
            if len(set(row.tolist())) != n:
                return False
        triples = range(n) if samples is None else range(0, n, max(1, n // samples))
        for x in triples:
            # (xy)z == x(yz) for all y, z at once
            left = self.mult[self.mult[x]]
            right = self.mult[x][self.mult]
            if not np.array_equal(left, right):
                return False
        return True


def element_order(G: FiniteGroup, x: int) -> int:
    k, y = 1, x
    while y != 0:
        y = int(G.mult[y, x])
        k += 1
    return k


def group_from_permutations(a: Permutation, b: Permutation, max_order: int = DEFAULT_MAX_ORDER,
                            name: str = "") -> FiniteGroup:
    """Close {a, b} under products and tabulate the generated group."""
    if a.degree != b.degree:
        raise ValueError("generators have different degrees")
    binv = b.inverse()
    gens = (a, b, binv)
    letters = "abB"
    ident = Permutation.identity(a.degree)
    elements = [ident]
    index = {ident.images: 0}
    parent = [-1]
    via = [-1]
    words = ["e"]
    right = [[] for _ in gens]  # right[k][x] = index of x * gens[k]
    head = 0
    while head < len(elements):
        x = elements[head]
        for k, g in enumerate(gens):
            y = x * g
            j = index.get(y.images)
            if j is None:
                if len(elements) >= max_order:
                    raise CosetEnumerationError(
                        f"closure exceeded {max_order} elements", status="overflow")
                j = len(elements)
                index[y.images] = j
                elements.append(y)
                parent.append(head)
                via.append(k)
                words.append(letters[k] if head == 0 else words[head] + letters[k])
            right[k].append(j)
        head += 1

    n = len(elements)
    right_arr = np.array(right, dtype=np.int64)
    mult = np.empty((n, n), dtype=np.int64)
    mult[:, 0] = np.arange(n)
    for j in range(1, n):
        mult[:, j] = right_arr[via[j]][mult[:, parent[j]]]
    inv = np.argmin(mult, axis=1)  # identity is index 0, the unique minimum per row
    return FiniteGroup(order=n, mult=mult, inv=inv, a_idx=index[a.images], b_idx=index[b.images],
                       element_words=words, name=name, elements=elements)


def group_from_presentation(pres: GroupPresentation, max_cosets: int = DEFAULT_MAX_COSETS,
                            name: str = "") -> FiniteGroup:
    """Todd-Coxeter over the trivial subgroup, then tabulate the regular representation."""
    table = coset_enumerate(pres, (), max_cosets)
    if table.status == "overflow":
        raise CosetEnumerationError(
            f"coset enumeration overflowed at {max_cosets} cosets; the presentation "
            "may define an infinite group", status="overflow")
    a = table.action(GEN_A)
    b = table.action(GEN_B)
    G = group_from_permutations(a, b, max_order=max(table.num_cosets, 1), name=name)
    if G.order != table.num_cosets:
        raise CosetEnumerationError("regular representation does not match coset count",
                                    status="complete")
    G.coset_status = table.status
    return G


def load_permutation_input(text: str) -> tuple[Permutation, Permutation, int]:
    """Parse the JSON permutation input ``{degree, a, b, s}`` (0-based images)."""
    data = json.loads(text)
    try:
        degree = int(data["degree"])
        a = Permutation(tuple(data["a"]))
        b = Permutation(tuple(data["b"]))
        s = int(data["s"])
    except (KeyError, TypeError, ValueError) as exc:
        raise PresentationError(f"bad permutation input: {exc}") from None
    if a.degree != degree or b.degree != degree:
        raise PresentationError("permutation length does not match degree")
    if s < 3:
        raise PresentationError(f"s = {s} < 3")
    return a, b, s


def generator_isomorphism(G: FiniteGroup, H: FiniteGroup) -> list[int] | None:
    """The isomorphism G -> H sending a -> a, b -> b, if there is one.

    Each element of G is mapped through its defining word; the map is then
    checked to be a bijection preserving the full multiplication table.
    """
    if G.order != H.order:
        return None
    phi = [H.evaluate(w) for w in G.element_words]
    if len(set(phi)) != G.order:
        return None
    phi_arr = np.array(phi)
    if not np.array_equal(phi_arr[G.mult], H.mult[np.ix_(phi_arr, phi_arr)]):
        return None
    return phi


# ---------------------------------------------------------------------------
# (2,s,3) validation

@dataclass
class ValidationReport:
    order: int
    s: int
    order_a: int
    order_b: int
    order_ab: int
    generates: bool
    errors: list[str] = field(default_factory=list)

    @property
    def valid(self) -> bool:
        return not self.errors

    @property
    def order_mod4(self) -> int:
        return self.order % 4

    @property
    def hamilton_case(self) -> str:
        return "cycle" if self.order_mod4 == 2 else "near-cycle"

    def raise_if_invalid(self) -> "ValidationReport":
        if self.errors:
            raise GroupValidationError(self)
        return self

    def to_dict(self) -> dict:
        return {
            "valid": self.valid,
            "order": self.order,
            "order_mod4": self.order_mod4,
            "s": self.s,
            "order_a": self.order_a,
            "order_b": self.order_b,
            "order_ab": self.order_ab,
            "generates": self.generates,
            "errors": list(self.errors),
        }


def validate_233(G: FiniteGroup, s: int) -> ValidationReport:
    a, b = G.a_idx, G.b_idx
    ab = G.mul(a, b)
    rep = ValidationReport(order=G.order, s=s, order_a=element_order(G, a), order_b=element_order(G, b),
                           order_ab=element_order(G, ab), generates=len(G.closure([a, b])) == G.order)
    if s < 3:
        rep.errors.append("s < 3")
    if rep.order_a != 2:
        rep.errors.append(f"order(a) = {rep.order_a}, expected 2")
    if rep.order_b != s:
        if s % rep.order_b == 0:
            rep.errors.append(f"degenerate presentation: order(b) = {rep.order_b} properly divides s = {s}")
        else:
            rep.errors.append(f"order(b) = {rep.order_b}, expected {s}")
    if rep.order_ab != 3:
        rep.errors.append(f"order(ab) = {rep.order_ab}, expected 3")
    if not rep.generates:
        rep.errors.append("<a, b> is a proper subgroup")
    if len({a, b, G.binv_idx} - {0}) != 3:
        rep.errors.append("generating set not of size 3: {a, b, b^-1} must be three distinct non-identity elements")
    if rep.order_a == 2 and G.order % 2:
        rep.errors.append("odd group order with an involution")
    return rep
