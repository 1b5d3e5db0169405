"""Exact algebra of the free group F_k and the geometry of its Cayley tree.

Letters are packed into bytes: generator i with exponent +1 has code 2*i,
its inverse has code 2*i + 1, so ``code ^ 1`` inverts a letter.  Text form
uses ``a``-``z`` for generators and ``A``-``Z`` for inverses, with ``1``
for the empty word.  Words are immutable and hashable; every operation is
pure, so values can be shared freely between workers.
"""

from __future__ import annotations

from .errors import NotLoxodromic, PrefixTooShallow

MAX_GENERATORS = 26


def letter_code(gen: int, sign: int) -> int:
    return 2 * gen + (0 if sign > 0 else 1)


def letter_inverse(code: int) -> int:
    return code ^ 1


def letter_char(code: int) -> str:
    gen, inv = divmod(code, 2)
    return chr((65 if inv else 97) + gen)


def parse_letter(ch: str) -> int:
    o = ord(ch)
    if 97 <= o <= 122:
        return 2 * (o - 97)
    if 65 <= o <= 90:
        return 2 * (o - 65) + 1
    raise ValueError(f"not a letter: {ch!r}")


def _reduce_stream(codes) -> bytearray:
    """Stack-reduce an arbitrary letter stream (cancels adjacent inverse pairs)."""
    stack = bytearray()
    for c in codes:
        if stack and stack[-1] == c ^ 1:
            stack.pop()
        else:
            stack.append(c)
    return stack


class Word:
    """A reduced word in F_k, i.e. a group element; word length is the tree metric d(e, g)."""

    __slots__ = ("codes",)

    def __init__(self, codes: bytes = b"", _checked: bool = False):
        if not _checked:
            codes = bytes(_reduce_stream(codes))
        self.codes = codes

    @classmethod
    def from_reduced(cls, codes: bytes) -> "Word":
        w = cls.__new__(cls)
        w.codes = bytes(codes)
        return w

    @classmethod
    def parse(cls, text: str) -> "Word":
        text = text.strip()
        if text in ("", "1"):
            return cls()
        return cls(bytes(parse_letter(ch) for ch in text))

    def __len__(self):
        return len(self.codes)

    def __bool__(self):
        return bool(self.codes)

    def __eq__(self, other):
        return isinstance(other, Word) and self.codes == other.codes

    def __hash__(self):
        return hash((Word, self.codes))

    def __str__(self):
        return "".join(letter_char(c) for c in self.codes) or "1"

    def __repr__(self):
        return f"Word({str(self)!r})"

    def __mul__(self, other: "Word") -> "Word":
        return multiply(self, other)

    def inverse(self) -> "Word":
        return Word.from_reduced(bytes(c ^ 1 for c in reversed(self.codes)))

    def __invert__(self) -> "Word":
        return self.inverse()

    def __pow__(self, m: int) -> "Word":
        if m < 0:
            return self.inverse() ** (-m)
        out = IDENTITY
        for _ in range(m):
            out = out * self
        return out

    def prefix(self, depth: int) -> "Word":
        return Word.from_reduced(self.codes[:depth])

    def max_generator(self) -> int:
        """Number of distinct generators needed to host this word (1 + max index)."""
        return max((c >> 1 for c in self.codes), default=-1) + 1


IDENTITY = Word()


def multiply(u: Word, v: Word) -> Word:
    """Reduced product u*v.  Both inputs are reduced, so cancellation only happens at the seam."""
    a, b = u.codes, v.codes
    t = 0
    limit = min(len(a), len(b))
    while t < limit and a[len(a) - 1 - t] == b[t] ^ 1:
        t += 1
    return Word.from_reduced(a[: len(a) - t] + b[t:])


def common_prefix_len(u: Word, v: Word) -> int:
    a, b = u.codes, v.codes
    i = 0
    limit = min(len(a), len(b))
    while i < limit and a[i] == b[i]:
        i += 1
    return i


def tree_distance(u: Word, v: Word) -> int:
    """d(u, v) = |u^-1 v| on the Cayley tree; left-invariant metric."""
    return len(u) + len(v) - 2 * common_prefix_len(u, v)


def _least_rotation(s: bytes) -> int:
    """Booth's algorithm: index of the lexicographically least rotation of s."""
    n = len(s)
    if n == 0:
        return 0
    ss = s + s
    f = [-1] * len(ss)
    k = 0
    for j in range(1, len(ss)):
        sj = ss[j]
        i = f[j - k - 1]
        while i != -1 and sj != ss[k + i + 1]:
            if sj < ss[k + i + 1]:
                k = j - i - 1
            i = f[i]
        if sj != ss[k + i + 1]:
            if sj < ss[k]:
                k = j
            f[j - k] = -1
        else:
            f[j - k] = i + 1
    return k


class CyclicWord:
    """A conjugacy class of F_k: a cyclically reduced word up to rotation.

    The canonical representative is the lexicographically least rotation
    under the letter-code order (a < A < b < B < ...), which makes classes
    hashable keys for occupation measures.
    """

    __slots__ = ("codes",)

    def __init__(self, codes: bytes, _canonical: bool = False):
        if not _canonical:
            if codes and (codes[0] == codes[-1] ^ 1):
                raise ValueError("not cyclically reduced")
            r = _least_rotation(codes)
            codes = codes[r:] + codes[:r]
        self.codes = bytes(codes)

    def __len__(self):
        return len(self.codes)

    def __bool__(self):
        return bool(self.codes)

    def __eq__(self, other):
        return isinstance(other, CyclicWord) and self.codes == other.codes

    def __hash__(self):
        return hash((CyclicWord, self.codes))

    def __str__(self):
        return "".join(letter_char(c) for c in self.codes) or "1"

    def __repr__(self):
        return f"CyclicWord({str(self)!r})"

    def as_word(self) -> Word:
        return Word.from_reduced(self.codes)

    def inverse(self) -> "CyclicWord":
        return CyclicWord(bytes(c ^ 1 for c in reversed(self.codes)))

    def primitive_root(self) -> "CyclicWord":
        """Smallest w0 with self = w0^m as a cyclic word."""
        n = len(self.codes)
        for p in range(1, n + 1):
            if n % p == 0 and self.codes[:p] * (n // p) == self.codes:
                return CyclicWord(self.codes[:p], _canonical=False)
        return self

    def window_counts(self, depth: int) -> dict[bytes, int]:
        """Counts of length-`depth` subwords of the periodic word, one full period with wrap-around."""
        n = len(self.codes)
        reps = -(-depth // n) + 1 if n else 0
        doubled = self.codes * reps
        counts: dict[bytes, int] = {}
        for i in range(n):
            w = doubled[i : i + depth]
            counts[w] = counts.get(w, 0) + 1
        return counts


def cyclic_reduce(w: Word) -> tuple[CyclicWord, Word]:
    """Split w = conjugator * core * conjugator^-1 with core cyclically reduced.

    The conjugator absorbs the rotation that takes the stripped core to its
    canonical representative, so the identity above holds verbatim.
    """
    codes = w.codes
    i, j = 0, len(codes)
    while j - i >= 2 and codes[i] == codes[j - 1] ^ 1:
        i += 1
        j -= 1
    stripped = codes[i:j]
    r = _least_rotation(stripped)
    core = CyclicWord(stripped[r:] + stripped[:r], _canonical=True)
    conjugator = Word.from_reduced(codes[:i] + stripped[:r])
    return core, conjugator


def translation_length(g: Word) -> int:
    """l(g) = min_x d(x, g x) over tree vertices = cyclically reduced length of g.

    Every nonempty reduced word has a nonempty cyclic core, so on the tree
    every non-identity element is loxodromic.
    """
    core, _ = cyclic_reduce(g)
    return len(core)


class TreeAxis:
    """The invariant line of a loxodromic g: vertices conjugator * core^i * (prefix of core)."""

    __slots__ = ("conjugator", "core")

    def __init__(self, conjugator: Word, core: CyclicWord):
        self.conjugator = conjugator
        self.core = core

    def point(self, t: int) -> Word:
        """Vertex at integer parameter t; t=0 is the conjugator, positive t moves with g."""
        n = len(self.core)
        if t >= 0:
            q, r = divmod(t, n)
            tail = self.core.codes * q + self.core.codes[:r]
        else:
            inv = self.core.inverse().codes
            q, r = divmod(-t, n)
            tail = inv * q + inv[:r]
        return multiply(self.conjugator, Word.from_reduced(tail))

    def __repr__(self):
        return f"TreeAxis(conjugator={self.conjugator!r}, core={self.core!r})"


def axis(g: Word) -> TreeAxis:
    core, conjugator = cyclic_reduce(g)
    if not core:
        raise NotLoxodromic(f"{g!r} has zero translation length")
    return TreeAxis(conjugator, core)


def distance_to_ray(u: Word, prefix: Word) -> int:
    """d(u, gamma_{e,xi}) where xi is any boundary point extending `prefix`.

    Exact provided |prefix| >= |u|: then the common prefix of u with the
    infinite ray equals the common prefix with the finite one.
    """
    if len(prefix) < len(u):
        raise PrefixTooShallow(f"prefix depth {len(prefix)} < |u| = {len(u)}")
    return len(u) - common_prefix_len(u, prefix)


def distance_to_axis(u: Word, ax: TreeAxis) -> int:
    """d(u, axis line): pull back by the conjugator, then compare against both periodic rays."""
    v = multiply(ax.conjugator.inverse(), u)
    n = len(ax.core)
    per_fwd = ax.core.codes
    per_bwd = ax.core.inverse().codes
    best = 0
    for per in (per_fwd, per_bwd):
        m = 0
        while m < len(v) and v.codes[m] == per[m % n]:
            m += 1
        best = max(best, m)
    return len(v) - best
