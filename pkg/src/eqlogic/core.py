"""Three-valued interpretations over a finite signature.

An interpretation maps every atom to 0 (false), 1 (undefined) or 2 (true).
Interpretations are written as digit strings following the atom order of
their signature, so ``"102"`` over ``p, q, r`` means p=1, q=0, r=2.  The
same string read as a big-endian base-3 numeral gives the interpretation's
index, which is how sets of interpretations address their bits.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

N_MAX = 16

ATOM_RE = re.compile(r"[a-zA-Z][a-zA-Z0-9_]*\Z")


class SignatureError(ValueError):
    """Bad atom names, oversized signatures, or mixing two signatures."""


class InterpretationError(ValueError):
    """Malformed trit sequence or out-of-range index."""


@dataclass(frozen=True)
class Signature:
    """Ordered, duplicate-free tuple of atom names.

    The order given here is kept as is. Use :meth:`of` for the default
    alphabetical order.
    """

    atoms: tuple[str, ...]

    def __post_init__(self):
        atoms = tuple(self.atoms)
        object.__setattr__(self, "atoms", atoms)
        for a in atoms:
            if not isinstance(a, str) or not ATOM_RE.match(a):
                raise SignatureError(f"invalid atom name {a!r}")
        if len(set(atoms)) != len(atoms):
            raise SignatureError(f"duplicate atoms in {atoms}")
        if len(atoms) > N_MAX:
            raise SignatureError(f"signature has {len(atoms)} atoms; at most {N_MAX} supported")

    @classmethod
    def of(cls, *names: str | Iterable[str]) -> Signature:
        """Alphabetical signature; accepts ``of("p", "q")`` or ``of(["q", "p"])``."""
        flat: list[str] = []
        for n in names:
            if isinstance(n, str):
                flat.append(n)
            else:
                flat.extend(n)
        return cls(tuple(sorted(set(flat))))

    @classmethod
    def parse(cls, text: str) -> Signature:
        """Comma-separated atoms in the order given, e.g. ``"p,q,r"``."""
        names = [t.strip() for t in text.split(",") if t.strip()]
        return cls(tuple(names))

    def __len__(self) -> int:
        return len(self.atoms)

    def __iter__(self) -> Iterator[str]:
        return iter(self.atoms)

    def __contains__(self, name: object) -> bool:
        return name in self.atoms

    @property
    def size(self) -> int:
        """Number of interpretations, 3**n."""
        return 3 ** len(self.atoms)

    def position(self, atom: str) -> int:
        try:
            return self.atoms.index(atom)
        except ValueError:
            raise SignatureError(f"atom {atom!r} not in signature {list(self.atoms)}") from None

    def covers(self, names: Iterable[str]) -> bool:
        return set(names) <= set(self.atoms)

    def interpretations(self) -> Iterator[Interpretation]:
        for i in range(self.size):
            yield decode(i, self)

    def __str__(self):
        return "{" + ",".join(self.atoms) + "}"


@dataclass(frozen=True)
class Interpretation:
    sig: Signature
    values: tuple[int, ...]

    def __post_init__(self):
        vals = tuple(self.values)
        object.__setattr__(self, "values", vals)
        if len(vals) != len(self.sig):
            raise InterpretationError(
                f"expected {len(self.sig)} trits for {self.sig}, got {len(vals)}"
            )
        for t in vals:
            if t not in (0, 1, 2):
                raise InterpretationError(f"trit {t!r} not in {{0,1,2}}")

    @classmethod
    def parse(cls, digits: str, sig: Signature) -> Interpretation:
        if not all(c in "012" for c in digits):
            raise InterpretationError(f"not a digit string over 0,1,2: {digits!r}")
        return cls(sig, tuple(int(c) for c in digits))

    @property
    def index(self) -> int:
        return encode(self.values, self.sig)

    def __getitem__(self, atom: str) -> int:
        return self.values[self.sig.position(atom)]

    def __str__(self):
        return "".join(map(str, self.values))


def _check_trits(values: Sequence[int], sig: Signature) -> tuple[int, ...]:
    if isinstance(values, str):
        values = [int(c) if c in "012" else c for c in values]
    vals = tuple(values)
    if len(vals) != len(sig):
        raise InterpretationError(f"expected {len(sig)} trits for {sig}, got {len(vals)}")
    for t in vals:
        if t not in (0, 1, 2):
            raise InterpretationError(f"trit {t!r} not in {{0,1,2}}")
    return vals


def encode(values: Sequence[int] | str, sig: Signature) -> int:
    """Big-endian base-3 index of a trit sequence (or digit string)."""
    idx = 0
    for t in _check_trits(values, sig):
        idx = idx * 3 + t
    return idx


def decode(index: int, sig: Signature) -> Interpretation:
    if not 0 <= index < sig.size:
        raise InterpretationError(f"index {index} outside [0, {sig.size})")
    vals = []
    for _ in range(len(sig)):
        index, t = divmod(index, 3)
        vals.append(t)
    return Interpretation(sig, tuple(reversed(vals)))


def as_interpretation(v: Interpretation | str | int, sig: Signature) -> Interpretation:
    """Coerce a digit string or index to an :class:`Interpretation` over *sig*."""
    if isinstance(v, Interpretation):
        if v.sig != sig:
            raise SignatureError(f"interpretation over {v.sig}, expected {sig}")
        return v
    if isinstance(v, str):
        return Interpretation.parse(v, sig)
    return decode(v, sig)


def _same_sig(u: Interpretation, v: Interpretation) -> None:
    if u.sig != v.sig:
        raise SignatureError(f"signature mismatch: {u.sig} vs {v.sig}")


# allowed (u(p), v(p)) pairs for u <= v
_LEQ_PAIRS = {(0, 0), (1, 1), (1, 2), (2, 2)}


def leq(u: Interpretation, v: Interpretation) -> bool:
    """True iff v arises from u by switching some 1's into 2's."""
    _same_sig(u, v)
    return all(pair in _LEQ_PAIRS for pair in zip(u.values, v.values))


def lt(u: Interpretation, v: Interpretation) -> bool:
    return leq(u, v) and u.values != v.values


def total_of(v: Interpretation) -> Interpretation:
    return Interpretation(v.sig, tuple(2 if t == 1 else t for t in v.values))


def is_classical(v: Interpretation) -> bool:
    return 1 not in v.values
