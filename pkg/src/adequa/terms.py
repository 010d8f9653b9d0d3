"""Terms of the free unary/biunary monoid and their word combinatorics.

Covers parsing and printing of the surface syntax, letter-count length,
normalization of plus-terms into non-nested words, and the prefix/suffix
machinery (supp, mp, suff, pref, and the P/Q/R sets) that the identity
checker consumes.
"""

from __future__ import annotations

import string
from dataclasses import dataclass
from functools import lru_cache


# ---------------------------------------------------------------- term AST


@dataclass(frozen=True)
class Identity:
    pass


@dataclass(frozen=True)
class Letter:
    name: str


@dataclass(frozen=True)
class Product:
    left: "Term"
    right: "Term"


@dataclass(frozen=True)
class Plus:
    child: "Term"


@dataclass(frozen=True)
class Star:
    child: "Term"


Term = Identity | Letter | Product | Plus | Star


class TermSyntaxError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__("%s at position %d" % (message, position))
        self.position = position


def parse_term(text: str) -> Term:
    """Parse the surface syntax.

    Grammar:
        term    := factor { factor } | "1"
        factor  := atom [ "^+" | "^*" ]
        atom    := LETTER | "(" term ")"
    Whitespace between factors is insignificant.
    """
    pos = 0
    n = len(text)

    def skip_ws():
        nonlocal pos
        while pos < n and text[pos] in " \t\n":
            pos += 1

    def parse_factor() -> Term | None:
        nonlocal pos
        skip_ws()
        if pos >= n:
            return None
        ch = text[pos]
        if ch in string.ascii_lowercase:
            atom: Term = Letter(ch)
            pos += 1
        elif ch == "1":
            atom = Identity()
            pos += 1
        elif ch == "(":
            open_pos = pos
            pos += 1
            inner = parse_sequence()
            skip_ws()
            if pos >= n or text[pos] != ")":
                raise TermSyntaxError("unbalanced parenthesis", open_pos)
            pos += 1
            atom = inner
        elif ch == ")":
            return None
        else:
            raise TermSyntaxError("unexpected character %r" % ch, pos)
        skip_ws()
        while pos < n and text[pos] == "^":
            if pos + 1 >= n or text[pos + 1] not in "+*":
                raise TermSyntaxError("dangling '^'", pos)
            atom = Plus(atom) if text[pos + 1] == "+" else Star(atom)
            pos += 2
            skip_ws()
        return atom

    def parse_sequence() -> Term:
        nonlocal pos
        skip_ws()
        start = pos
        factors: list[Term] = []
        while True:
            f = parse_factor()
            if f is None:
                break
            factors.append(f)
        if not factors:
            raise TermSyntaxError("empty term", start)
        acc = factors[0]
        for f in factors[1:]:
            acc = Product(acc, f)
        return acc

    result = parse_sequence()
    skip_ws()
    if pos != n:
        raise TermSyntaxError("unexpected character %r" % text[pos], pos)
    return result


def term_to_str(t: Term) -> str:
    """Inverse of parse_term up to the grammar's left-associated products."""

    def factor(t: Term) -> str:
        # anything usable as a single grammar factor
        if isinstance(t, Letter):
            return t.name
        if isinstance(t, Identity):
            return "(1)"
        if isinstance(t, Plus):
            return factor(t.child) + "^+"
        if isinstance(t, Star):
            return factor(t.child) + "^*"
        return "(" + seq(t) + ")"

    def seq(t: Term) -> str:
        if isinstance(t, Product):
            return seq(t.left) + factor(t.right)
        if isinstance(t, Identity):
            return "1"
        return factor(t)

    return seq(t)


def term_length(t: Term) -> int:
    """Number of letter occurrences; unary operators add nothing."""
    if isinstance(t, Identity):
        return 0
    if isinstance(t, Letter):
        return 1
    if isinstance(t, Product):
        return term_length(t.left) + term_length(t.right)
    if isinstance(t, (Plus, Star)):
        return term_length(t.child)
    raise TypeError("not a term: %r" % (t,))


def letters_of(t: Term) -> set[str]:
    if isinstance(t, Letter):
        return {t.name}
    if isinstance(t, Product):
        return letters_of(t.left) | letters_of(t.right)
    if isinstance(t, (Plus, Star)):
        return letters_of(t.child)
    return set()


def dualize_term(t: Term) -> Term:
    """Reverse every product, keep unary nodes; an involution."""
    if isinstance(t, Product):
        return Product(dualize_term(t.right), dualize_term(t.left))
    if isinstance(t, Plus):
        return Plus(dualize_term(t.child))
    if isinstance(t, Star):
        return Star(dualize_term(t.child))
    return t


def swap_unary(t: Term) -> Term:
    """Exchange the two unary operators throughout."""
    if isinstance(t, Product):
        return Product(swap_unary(t.left), swap_unary(t.right))
    if isinstance(t, Plus):
        return Star(swap_unary(t.child))
    if isinstance(t, Star):
        return Plus(swap_unary(t.child))
    return t


# ------------------------------------------------------- non-nested words


@dataclass(frozen=True)
class PlusBlock:
    """A +-applied plain word; the word may be empty (the atom ε⁺)."""

    word: str


Atom = str | PlusBlock


@dataclass(frozen=True)
class NonNestedWord:
    atoms: tuple[Atom, ...]

    def __str__(self) -> str:
        if not self.atoms:
            return "1"
        out = []
        for a in self.atoms:
            if isinstance(a, PlusBlock):
                if not a.word:
                    out.append("1^+")
                elif len(a.word) == 1:
                    out.append(a.word + "^+")
                else:
                    out.append("(" + a.word + ")^+")
            else:
                out.append(a)
        return "".join(out)


EMPTY_WORD = NonNestedWord(())


class NestedTermError(ValueError):
    pass


def to_nonnested(t: Term) -> NonNestedWord:
    """Normal form under ε⁺→ε, (x⁺)⁺→x⁺, (xy⁺z)⁺→(xy)⁺(xz)⁺.

    Innermost-first rewriting; sound for the left signature only, so Star
    nodes are rejected.
    """
    if isinstance(t, Star):
        raise NestedTermError("star nodes have no non-nested normal form")
    if isinstance(t, Identity):
        return EMPTY_WORD
    if isinstance(t, Letter):
        return NonNestedWord((t.name,))
    if isinstance(t, Product):
        return NonNestedWord(
            to_nonnested(t.left).atoms + to_nonnested(t.right).atoms
        )
    if isinstance(t, Plus):
        inner = to_nonnested(t.child)
        # u = p0 b1 p1 ... bm pm; u+ = prod_i (p0..p_{i-1} w_i)+ . (p0..pm)+
        # with every empty-word factor dropped (the rule eps+ -> eps).
        out: list[Atom] = []
        plain_prefix = ""
        for a in inner.atoms:
            if isinstance(a, PlusBlock):
                w = plain_prefix + a.word
                if w:
                    out.append(PlusBlock(w))
            else:
                plain_prefix += a
        if plain_prefix:
            out.append(PlusBlock(plain_prefix))
        return NonNestedWord(tuple(out))
    raise TypeError("not a term: %r" % (t,))


def nonnested_to_term(u: NonNestedWord) -> Term:
    acc: Term = Identity()
    first = True
    for a in u.atoms:
        f: Term
        if isinstance(a, PlusBlock):
            inner: Term = Identity()
            ifirst = True
            for ch in a.word:
                inner = Letter(ch) if ifirst else Product(inner, Letter(ch))
                ifirst = False
            f = Plus(inner)
        else:
            f = Letter(a)
        acc = f if first else Product(acc, f)
        first = False
    return acc


def word_length(u: NonNestedWord) -> int:
    return sum(1 for a in u.atoms if isinstance(a, str))


@dataclass(frozen=True)
class WordStats:
    counts: dict  # atom -> occurrence count; blocks do not feed letter counts
    support: frozenset

    def __post_init__(self):
        object.__setattr__(self, "counts", dict(self.counts))


def word_stats(u: NonNestedWord) -> WordStats:
    counts: dict[Atom, int] = {}
    for a in u.atoms:
        counts[a] = counts.get(a, 0) + 1
    return WordStats(counts, frozenset(counts))


def letter_counts(u: NonNestedWord) -> dict[str, int]:
    """|u|_y per letter y; PlusBlock contents are not counted."""
    counts: dict[str, int] = {}
    for a in u.atoms:
        if isinstance(a, str):
            counts[a] = counts.get(a, 0) + 1
    return counts


def plain_projection(u: NonNestedWord) -> str:
    return "".join(a for a in u.atoms if isinstance(a, str))


class AtomNotInSupport(ValueError):
    pass


def mp(u: NonNestedWord, x: Atom) -> tuple[NonNestedWord, NonNestedWord]:
    """(mp_u(x), mp'_u(x)): the longest prefix ending in x, with and
    without its final x."""
    for i in range(len(u.atoms) - 1, -1, -1):
        if u.atoms[i] == x:
            return NonNestedWord(u.atoms[: i + 1]), NonNestedWord(u.atoms[:i])
    raise AtomNotInSupport("atom not in support: %r" % (x,))


def suff(u: NonNestedWord, x: Atom) -> NonNestedWord:
    """The anchored suffix at x.

    For a letter: the shortest suffix containing x.  For a block: from
    the last occurrence, extended left through blocks only (the longest
    suffix adding no further letters).
    """
    last = None
    for i in range(len(u.atoms) - 1, -1, -1):
        if u.atoms[i] == x:
            last = i
            break
    if last is None:
        raise AtomNotInSupport("atom not in support: %r" % (x,))
    if isinstance(x, str):
        return NonNestedWord(u.atoms[last:])
    j = last
    while j > 0 and isinstance(u.atoms[j - 1], PlusBlock):
        j -= 1
    return NonNestedWord(u.atoms[j:])


def pref(w: str, x: str) -> str:
    """Shortest prefix of the plain word w containing x; w itself if absent."""
    i = w.find(x)
    return w if i < 0 else w[: i + 1]


def anchor_factor(u: NonNestedWord, x: Atom, side: str) -> NonNestedWord:
    if side == "suffix":
        return suff(u, x)
    if side == "prefix":
        if any(isinstance(a, PlusBlock) for a in u.atoms) or isinstance(x, PlusBlock):
            raise ValueError("prefix anchor is defined for plain words and letters")
        return NonNestedWord(tuple(pref(plain_projection(u), x)))
    raise ValueError("side must be 'suffix' or 'prefix'")


def _mp_counts(word: str, x: str) -> dict[str, int] | None:
    # letter counts of mp_word(x); None when x does not occur
    i = word.rfind(x)
    if i < 0:
        return None
    counts: dict[str, int] = {}
    for ch in word[: i + 1]:
        counts[ch] = counts.get(ch, 0) + 1
    return counts


def pqr_sets(
    u: NonNestedWord, w_block: PlusBlock, x: str
) -> tuple[frozenset[NonNestedWord], frozenset[NonNestedWord], frozenset[NonNestedWord]]:
    """The P/Q/R word sets attached to a block occurrence and a letter.

    P collects, over each block occurrence k⁺ in the anchored suffix of
    w⁺ with x in supp(k), the plain projection of the prefix up to that
    occurrence followed by k⁺.  Q adds the whole projection followed by
    ε⁺ when the letter x itself occurs in the suffix.  R drops exactly
    the bare blocks whose mp letter counts at x match those of w.
    """
    if w_block not in set(u.atoms):
        raise AtomNotInSupport("block not in support: %r" % (w_block,))
    if x not in set(w_block.word):
        raise AtomNotInSupport("letter not in block support: %r" % (x,))
    s = suff(u, w_block)
    p_set: set[NonNestedWord] = set()
    plain_prefix = ""
    for a in s.atoms:
        if isinstance(a, PlusBlock):
            if x in a.word:
                p_set.add(NonNestedWord(tuple(plain_prefix) + (a,)))
        else:
            plain_prefix += a
    q_set = set(p_set)
    if x in plain_prefix:
        q_set.add(NonNestedWord(tuple(plain_prefix) + (PlusBlock(""),)))
    target = _mp_counts(w_block.word, x)
    r_set = set()
    for el in q_set:
        if len(el.atoms) == 1:
            k = el.atoms[0]
            assert isinstance(k, PlusBlock)
            if _mp_counts(k.word, x) == target:
                continue
        r_set.add(el)
    return frozenset(p_set), frozenset(q_set), frozenset(r_set)
