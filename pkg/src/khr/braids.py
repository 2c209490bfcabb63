"""Braid words and permutations of S_n.

Permutations are represented in word notation: the tuple ``(w(0), ..., w(n-1))``.
Simple reflections are indexed 1..n-1 to match braid-generator notation:
``s_i`` swaps positions ``i-1`` and ``i``.  Products of words are taken left to
right, i.e. ``evaluate_word`` right-multiplies by one reflection per letter.
"""

from __future__ import annotations

import dataclasses
from typing import Iterable, Sequence


@dataclasses.dataclass(frozen=True)
class BraidWord:
    """A word in the Artin generators of Br_n.

    ``letters`` are signed integers: ``+i`` is sigma_i, ``-i`` its inverse,
    with ``1 <= i <= strand_count - 1``.  The empty word is the identity braid.
    """

    strand_count: int
    letters: tuple[int, ...]

    def __post_init__(self):
        if self.strand_count < 1:
            raise ValueError(f"strand count must be >= 1, got {self.strand_count}")
        for a in self.letters:
            if a == 0 or abs(a) >= self.strand_count:
                raise ValueError(
                    f"letter {a} out of range for {self.strand_count} strands"
                )
        object.__setattr__(self, "letters", tuple(self.letters))

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        if self.strand_count != other.strand_count:
            raise ValueError("cannot concatenate braids on different strand counts")
        return BraidWord(self.strand_count, self.letters + other.letters)

    def inverse(self) -> "BraidWord":
        return BraidWord(self.strand_count, tuple(-a for a in reversed(self.letters)))

    def writhe(self) -> int:
        return sum(1 if a > 0 else -1 for a in self.letters)

    def __str__(self) -> str:
        return " ".join(str(a) for a in self.letters)


def parse_braid_word(text: str, n: int) -> BraidWord:
    """Parse a whitespace-separated list of signed generator indices.

    >>> parse_braid_word("1 1 1", 2).letters
    (1, 1, 1)
    >>> parse_braid_word("", 1).letters
    ()
    """
    letters = []
    for tok in text.split():
        try:
            a = int(tok)
        except ValueError:
            raise ValueError(f"bad braid letter {tok!r}") from None
        if a == 0 or abs(a) >= n:
            raise ValueError(f"braid letter {tok!r} out of range for {n} strands")
        letters.append(a)
    return BraidWord(n, tuple(letters))


# -- permutations in word notation ------------------------------------------


def identity(n: int) -> tuple[int, ...]:
    return tuple(range(n))


def is_permutation(word: Sequence[int]) -> bool:
    return sorted(word) == list(range(len(word)))


def compose(x: Sequence[int], y: Sequence[int]) -> tuple[int, ...]:
    """The product xy: apply y first, then x."""
    if len(x) != len(y):
        raise ValueError("size mismatch")
    return tuple(x[v] for v in y)


def inverse(perm: Sequence[int]) -> tuple[int, ...]:
    inv = [0] * len(perm)
    for i, v in enumerate(perm):
        inv[v] = i
    return tuple(inv)


def inversions(perm: Sequence[int]) -> int:
    """Coxeter length: the number of inversions.

    >>> inversions((2, 1, 0))
    3
    """
    n = len(perm)
    return sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])


def right_multiply(perm: Sequence[int], i: int) -> tuple[int, ...]:
    """perm * s_i, where s_i swaps positions i-1 and i (i is 1-based)."""
    w = list(perm)
    w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


def evaluate_word(word: Iterable[int], n: int) -> tuple[int, ...]:
    """Product s_{i_1} s_{i_2} ... of 1-based reflection indices, left to right."""
    perm = identity(n)
    for i in word:
        perm = right_multiply(perm, i)
    return perm


def longest_element(n: int) -> tuple[int, ...]:
    return tuple(range(n - 1, -1, -1))


def permutation_of(b: BraidWord) -> tuple[int, ...]:
    """Image of the braid in S_n: signs of the letters are forgotten.

    >>> permutation_of(BraidWord(3, (1, 2)))
    (1, 2, 0)
    """
    return evaluate_word((abs(a) for a in b.letters), b.strand_count)


def reduced_word(perm: Sequence[int]) -> tuple[int, ...]:
    """A reduced word for perm, 1-based indices, lexicographically first.

    ``evaluate_word(reduced_word(w), n) == w`` and the word length equals the
    inversion count.  Found by bubble-sorting the inverse permutation while
    always taking the smallest available descent.
    """
    inv = list(inverse(perm))
    word = []
    i = 0
    while i < len(inv) - 1:
        if inv[i] > inv[i + 1]:
            word.append(i + 1)
            inv[i], inv[i + 1] = inv[i + 1], inv[i]
            i = max(i - 1, 0)
        else:
            i += 1
    return tuple(word)


def coset_normal_form(
    perm: Sequence[int],
) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Factor w = u * tail with u fixing n-1 and tail = s_{n-1} s_{n-2} ... s_k.

    Returns ``(u, tail)`` with u given on all n points (it fixes the last one)
    and the tail as a tuple of 1-based indices, possibly empty.  Lengths are
    additive: ``inversions(w) == inversions(u) + len(tail)``.
    """
    n = len(perm)
    p = perm.index(n - 1)
    if p == n - 1:
        return tuple(perm), ()
    u = tuple(perm)
    for j in range(p + 1, n):
        u = right_multiply(u, j)
    tail = tuple(range(n - 1, p, -1))
    return u, tail


def jucys_murphy_braid(k: int, n: int) -> BraidWord:
    """The k-th Jucys-Murphy braid in Br_n: j_0 = 1, j_k = s_k j_{k-1} s_k.

    >>> jucys_murphy_braid(2, 3).letters
    (2, 1, 1, 2)
    """
    if not 0 <= k <= n - 1:
        raise ValueError(f"need 0 <= k <= {n - 1}, got {k}")
    letters: tuple[int, ...] = ()
    for i in range(1, k + 1):
        letters = (i,) + letters + (i,)
    return BraidWord(n, letters)
