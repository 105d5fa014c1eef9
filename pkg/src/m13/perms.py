"""Permutations and signed permutations of the 13 labels.

Composition is right to left: ``(tau * sigma)(i) == tau(sigma(i))``, so
``tau * sigma`` means "apply sigma, then tau".

Text format is cycle notation, e.g. ``(1 7 12 6 8)(3 4 10 5 9)``.  In a
signed permutation a label whose counter is flipped carries a ``!`` suffix;
a flipped fixed point is written as a 1-cycle, ``(5!)``.  The identity is
``()``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass

N = 13
_IDENTITY = tuple(range(N))
_CYCLE_RE = re.compile(r"\(([^()]*)\)")


class PermError(ValueError):
    pass


def _tokens(text: str):
    text = text.strip()
    if text in ("", "id", "Id", "e"):
        return []
    if _CYCLE_RE.sub("", text).strip():
        raise PermError(f"cannot parse cycle notation {text!r}")
    cycles = []
    for body in _CYCLE_RE.findall(text):
        cyc = []
        for tok in body.replace(",", " ").split():
            flipped = tok.endswith("!")
            try:
                label = int(tok.rstrip("!"))
            except ValueError:
                raise PermError(f"bad label {tok!r} in {text!r}") from None
            if not 0 <= label < N:
                raise PermError(f"label {label} outside 0..12")
            cyc.append((label, flipped))
        if cyc:
            cycles.append(cyc)
    return cycles


def _image_from_cycles(cycles) -> list[int]:
    image = list(_IDENTITY)
    seen = set()
    for cyc in cycles:
        labels = [lab for lab, _ in cyc]
        if seen & set(labels) or len(set(labels)) != len(labels):
            raise PermError("cycles are not disjoint")
        seen.update(labels)
        for a, b in zip(labels, labels[1:] + labels[:1]):
            image[a] = b
    return image


def _cycles_of(image) -> list[list[int]]:
    seen = [False] * N
    out = []
    for start in range(N):
        if seen[start]:
            continue
        cyc = [start]
        seen[start] = True
        j = image[start]
        while j != start:
            cyc.append(j)
            seen[j] = True
            j = image[j]
        out.append(cyc)
    return out


@dataclass(frozen=True)
class Perm13:
    image: tuple[int, ...] = _IDENTITY

    def __post_init__(self):
        image = tuple(int(x) for x in self.image)
        if sorted(image) != list(_IDENTITY):
            raise PermError(f"{image} is not a permutation of 0..12")
        object.__setattr__(self, "image", image)

    @classmethod
    def identity(cls) -> Perm13:
        return cls()

    @classmethod
    def transposition_pair(cls, a: int, b: int, c: int, d: int) -> Perm13:
        """The double transposition ``(a b)(c d)``."""
        image = list(_IDENTITY)
        image[a], image[b], image[c], image[d] = b, a, d, c
        return cls(tuple(image))

    @classmethod
    def parse(cls, text: str) -> Perm13:
        cycles = _tokens(text)
        if any(f for cyc in cycles for _, f in cyc):
            raise PermError(f"flip marks in unsigned permutation {text!r}")
        return cls(tuple(_image_from_cycles(cycles)))

    def __call__(self, i: int) -> int:
        return self.image[i]

    def __mul__(self, other: Perm13) -> Perm13:
        return Perm13(tuple(self.image[j] for j in other.image))

    def inverse(self) -> Perm13:
        inv = [0] * N
        for i, j in enumerate(self.image):
            inv[j] = i
        return Perm13(tuple(inv))

    def is_identity(self) -> bool:
        return self.image == _IDENTITY

    def cycles(self) -> list[list[int]]:
        """Nontrivial cycles, each starting at its least label."""
        return [c for c in _cycles_of(self.image) if len(c) > 1]

    def cycle_type(self) -> tuple[int, ...]:
        """Lengths of the nontrivial cycles, largest first."""
        return tuple(sorted((len(c) for c in self.cycles()), reverse=True))

    def order(self) -> int:
        from math import lcm
        return lcm(*[len(c) for c in self.cycles()] or [1])

    def __str__(self) -> str:
        return "".join("(" + " ".join(map(str, c)) + ")" for c in self.cycles()) or "()"

    def __repr__(self) -> str:
        return f"Perm13({self})"


@dataclass(frozen=True)
class SignedPerm13:
    """An element of the wreath product of Z/2 with Sym(13).

    ``flip[i]`` records whether the counter that starts on label ``i`` ends
    up turned over.
    """

    perm: Perm13 = Perm13()
    flip: tuple[bool, ...] = (False,) * N

    def __post_init__(self):
        flip = tuple(bool(x) for x in self.flip)
        if len(flip) != N:
            raise PermError("flip vector must have 13 entries")
        object.__setattr__(self, "flip", flip)

    @classmethod
    def identity(cls) -> SignedPerm13:
        return cls()

    @classmethod
    def parse(cls, text: str) -> SignedPerm13:
        cycles = _tokens(text)
        flip = [False] * N
        for cyc in cycles:
            for label, f in cyc:
                flip[label] = f
        return cls(Perm13(tuple(_image_from_cycles(cycles))), tuple(flip))

    @property
    def image(self) -> tuple[int, ...]:
        return self.perm.image

    def __call__(self, i: int) -> int:
        return self.perm.image[i]

    def __mul__(self, other: SignedPerm13) -> SignedPerm13:
        flip = tuple(other.flip[i] ^ self.flip[other.perm.image[i]] for i in range(N))
        return SignedPerm13(self.perm * other.perm, flip)

    def inverse(self) -> SignedPerm13:
        inv = self.perm.inverse()
        return SignedPerm13(inv, tuple(self.flip[inv.image[j]] for j in range(N)))

    def negate(self) -> SignedPerm13:
        """The antipode: same placement with counters 1..12 turned over.

        Label 0 is the hole, which carries no orientation.
        """
        flip = (self.flip[0],) + tuple(not f for f in self.flip[1:])
        return SignedPerm13(self.perm, flip)

    def unsigned(self) -> Perm13:
        return self.perm

    def flipped(self) -> frozenset[int]:
        return frozenset(i for i, f in enumerate(self.flip) if f)

    def is_identity(self) -> bool:
        return self.perm.is_identity() and not any(self.flip)

    def __str__(self) -> str:
        parts = []
        for cyc in _cycles_of(self.perm.image):
            if len(cyc) == 1 and not self.flip[cyc[0]]:
                continue
            parts.append("(" + " ".join(f"{i}!" if self.flip[i] else str(i) for i in cyc) + ")")
        return "".join(parts) or "()"

    def __repr__(self) -> str:
        return f"SignedPerm13({self})"
