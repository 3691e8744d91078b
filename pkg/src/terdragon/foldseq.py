"""Folding sequences T_L and the residue laws that characterise them.

Turn sequences are 1-based: ``FoldSeq.signs[0]`` is the sign at absolute index
``origin_index``.  Windows cut out of bi-infinite sequences keep their absolute
origin so residues are never window-relative.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Sequence

import numpy as np


class NotFolding(ValueError):
    """No residue class satisfies the alternation law at some level."""


class AmbiguousWindow(ValueError):
    """Several residue chains survive; the window is too short to decide."""


class BadResidue(ValueError):
    pass


# -- sign strings --------------------------------------------------------------

_SIGN_CHARS = {"+": 1, "-": -1, "−": -1}


def parse_signs(text: str) -> tuple[int, ...]:
    text = text.strip()
    try:
        return tuple(_SIGN_CHARS[c] for c in text)
    except KeyError as exc:
        raise ValueError(f"bad sign character {exc.args[0]!r} in {text!r}") from None


def format_signs(signs: Iterable[int]) -> str:
    return "".join("+" if s > 0 else "-" for s in signs)


@dataclass(frozen=True)
class Lambda:
    entries: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(int(x) for x in self.entries))
        if any(x not in (1, -1) for x in self.entries):
            raise ValueError("fold signs must be +1 or -1")

    @classmethod
    def parse(cls, text: str) -> Lambda:
        return cls(parse_signs(text))

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, k):
        return self.entries[k]

    def __iter__(self):
        return iter(self.entries)

    def __str__(self):
        return format_signs(self.entries)

    def prefix(self, n: int) -> Lambda:
        return Lambda(self.entries[:n])

    def tail(self) -> Lambda:
        return Lambda(self.entries[1:])


def as_lambda(lam) -> Lambda:
    if isinstance(lam, Lambda):
        return lam
    if isinstance(lam, str):
        return Lambda.parse(lam)
    return Lambda(tuple(lam))


@dataclass(frozen=True)
class FoldSeq:
    signs: tuple[int, ...] = ()
    origin_index: int = 1
    lam: Lambda | None = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "signs", tuple(int(s) for s in self.signs))

    def __len__(self):
        return len(self.signs)

    def __iter__(self):
        return iter(self.signs)

    def at(self, h: int) -> int:
        """Sign at absolute index ``h``."""
        return self.signs[h - self.origin_index]

    @property
    def last_index(self) -> int:
        return self.origin_index + len(self.signs) - 1

    def __str__(self):
        return format_signs(self.signs)

    def to_json(self) -> str:
        return json.dumps({
            "lambda": None if self.lam is None else str(self.lam),
            "signs": str(self),
            "origin_index": self.origin_index,
        })

    @classmethod
    def from_json(cls, text: str) -> FoldSeq:
        obj = json.loads(text)
        lam = obj.get("lambda")
        return cls(parse_signs(obj["signs"]), int(obj.get("origin_index", 1)),
                   None if lam is None else Lambda.parse(lam))


class PStep(str, Enum):
    I = "I"
    M = "M"
    S = "S"


def parse_pseq(text: str) -> tuple[PStep, ...]:
    return tuple(PStep(c) for c in text.strip().upper())


# -- generation ----------------------------------------------------------------

def gen_T_array(lam) -> np.ndarray:
    """Turn sequence of T_lam as an int8 array (fast path for large n)."""
    s = np.zeros(0, dtype=np.int8)
    for x in as_lambda(lam):
        s = np.concatenate((s, np.array([x], np.int8), s, np.array([-x], np.int8), s))
    return s


def gen_T(lam) -> FoldSeq:
    lam = as_lambda(lam)
    s: list[int] = []
    for x in lam:
        s = s + [x] + s + [-x] + s
    return FoldSeq(tuple(s), 1, lam)


def bar(s: FoldSeq | Sequence[int]) -> FoldSeq:
    signs = s.signs if isinstance(s, FoldSeq) else tuple(s)
    origin = s.origin_index if isinstance(s, FoldSeq) else 1
    return FoldSeq(tuple(-x for x in reversed(signs)), origin)


def as_foldseq(s) -> FoldSeq:
    if isinstance(s, FoldSeq):
        return s
    if isinstance(s, str):
        return FoldSeq(parse_signs(s))
    return FoldSeq(tuple(s))


# -- residue laws --------------------------------------------------------------

def _residue_verdict(signs: np.ndarray, origin: int, k: int, h: int):
    """Check level-k alternation for residue ``h``.

    Returns ``(eps, evidence)`` when both sides are present and alternate,
    where ``evidence`` is the smaller of the two position counts; ``None`` on a
    contradiction; ``(eps, 0)`` when only one side is present and constant; and
    ``()`` when the window holds no position on either side.
    """
    period = 3 ** (k + 1)
    step = 3 ** k
    n = len(signs)
    first_plus = (h + step - origin) % period
    first_minus = (h + 2 * step - origin) % period
    plus = signs[first_plus:n:period]
    minus = signs[first_minus:n:period]
    if len(plus) == 0 and len(minus) == 0:
        return ()
    eps = int(plus[0]) if len(plus) else -int(minus[0])
    if np.all(plus == eps) and np.all(minus == -eps):
        return (eps, min(len(plus), len(minus)))
    return None


def _level_residues(signs, origin, k, candidates):
    passes, vacuous, failed = [], [], []
    for h in candidates:
        v = _residue_verdict(signs, origin, k, h)
        if v is None:
            failed.append(h)
        elif v == () or v[1] == 0:
            vacuous.append(h)
        else:
            passes.append((h, v[0], v[1]))
    return passes, vacuous, failed


def residue_check(window, k_max: int) -> list[set[tuple[int, int]] | None]:
    """Admissible ``(h mod 3**(k+1), eps)`` per level ``k <= k_max``.

    A residue is reported only if the window holds at least one position on each
    side of the alternation; a level where no residue has that much evidence is
    reported as ``None`` (unconstrained).  An empty set means the window cannot
    be part of a complete folding curve.
    """
    w = as_foldseq(window)
    signs = np.asarray(w.signs, dtype=np.int8)
    out: list[set[tuple[int, int]] | None] = []
    for k in range(k_max + 1):
        passes, vacuous, failed = _level_residues(signs, w.origin_index, k, range(3 ** (k + 1)))
        if not passes and not failed:
            out.append(None)
        else:
            out.append({(h, eps) for h, eps, _ in passes})
    return out


@dataclass
class Extraction:
    lam: Lambda
    residues: list[int]         # h_k mod 3**(k+1), one per extracted level
    stopped: str                # "k_max", "unconstrained" or "ambiguous"


def is_complete_length(w: FoldSeq) -> bool:
    """True for a window starting at index 1 whose length is 3**n - 1 (n >= 1)."""
    m = len(w) + 1
    if w.origin_index != 1 or m < 3:
        return False
    while m % 3 == 0:
        m //= 3
    return m == 1


def _consistent_chains(signs, origin: int, depth: int, anchored: bool):
    """All residue chains (h_0, eps_0), ..., (h_{depth-1}, eps_{depth-1}) that no
    level of the window contradicts; eps is None where the window is silent."""
    chains = [[]]
    for k in range(depth):
        nxt = []
        for chain in chains:
            if anchored:
                cands = [0]
            elif chain:
                cands = [chain[-1][0] + j * 3 ** k for j in range(3)]
            else:
                cands = [0, 1, 2]
            for h in cands:
                v = _residue_verdict(signs, origin, k, h)
                if v is None:
                    continue
                nxt.append(chain + [(h, v[0] if v != () else None)])
        chains = nxt
        if not chains:
            raise NotFolding(f"no residue chain survives level {k}")
    return chains


def _residue_chain(window, k_max: int | None, anchored: bool | None = None) -> Extraction:
    w = as_foldseq(window)
    signs = np.asarray(w.signs, dtype=np.int8)
    if anchored is None:
        anchored = is_complete_length(w)
    # levels with 3**k > len can hold at most one constrained position: never decisive
    depth = 1
    while 3 ** (depth - 1) <= len(w):
        depth += 1
    if k_max is not None:
        depth = min(depth, k_max + 1)
    chains = _consistent_chains(signs, w.origin_index, depth, anchored)
    lam: list[int] = []
    residues: list[int] = []
    stopped = "k_max" if k_max is not None and depth == k_max + 1 else "unconstrained"
    for k in range(depth):
        seen = {c[k] for c in chains}
        if len(seen) != 1:
            stopped = "ambiguous"
            break
        h, eps = seen.pop()
        if eps is None:
            stopped = "unconstrained"
            break
        residues.append(h)
        lam.append(eps)
    return Extraction(Lambda(tuple(lam)), residues, stopped)


def extract_lambda(window, k_max: int | None = None, anchored: bool | None = None) -> Extraction:
    """Recover the fold signs that generate ``window``.

    A level counts as determined when every residue chain the window leaves
    open agrees on it.  With ``k_max`` given, every level up to ``k_max`` must
    be determined (``AmbiguousWindow`` otherwise); without it, extraction runs
    as deep as the window decides.  ``anchored`` pins every residue to 0, i.e.
    reads the window as the start of a curve; by default this applies to
    windows at index 1 of length 3**n - 1, which are complete sequences.
    """
    ext = _residue_chain(window, k_max, anchored)
    if k_max is not None and len(ext.lam) < k_max + 1:
        raise AmbiguousWindow(
            f"window determines only {len(ext.lam)} levels ({ext.stopped}), {k_max + 1} requested")
    return ext


class Case(str, Enum):
    A = "CaseA"
    B = "CaseB"
    UNDETERMINED = "Undetermined"


@dataclass
class WindowClass:
    case: Case
    center: int | None
    levels: int
    center_sign: int | None = None


def _chain_support(signs, origin, chain) -> int:
    """Smallest per-level evidence along ``chain`` (0 if some level lacks a side)."""
    best = None
    for k, (h, _) in enumerate(chain):
        v = _residue_verdict(signs, origin, k, h)
        ev = v[1] if v else 0
        best = ev if best is None else min(best, ev)
    return best or 0


def classify_window(window, horizon: int) -> WindowClass:
    """Which alternative of the complete-curve dichotomy the window is consistent with.

    Among the residue chains of depth ``horizon + 1`` that the window allows,
    only those seeing both sides of the alternation at every level are
    considered, and of these the best supported (largest minimum evidence).
    ``CaseA``: they place exactly one common center inside the window, so the
    window is consistent with ``(bar T, +-1, T)`` around it.  ``CaseB``: the
    center lies outside the window.  A finite window can be embedded in
    sequences of either kind, so neither verdict is a certificate.  Raises
    ``NotFolding`` as :func:`extract_lambda`.
    """
    w = as_foldseq(window)
    signs = np.asarray(w.signs, dtype=np.int8)
    K = len(_residue_chain(w, horizon).residues)
    chains = _consistent_chains(signs, w.origin_index, horizon + 1, is_complete_length(w))
    scored = [(_chain_support(signs, w.origin_index, c), c) for c in chains]
    top = max((sc for sc, _ in scored), default=0)
    if top == 0:
        return WindowClass(Case.UNDETERMINED, None, K)
    period = 3 ** (horizon + 1)
    lo, hi = w.origin_index, w.last_index
    verdicts = set()
    for sc, chain in scored:
        if sc != top:
            continue
        h = chain[-1][0]
        first = lo + (h - lo) % period
        reps = tuple(range(first, hi + 1, period))
        verdicts.add(reps if len(reps) <= 1 else None)
    if len(verdicts) != 1 or None in verdicts:
        return WindowClass(Case.UNDETERMINED, None, K)
    reps = verdicts.pop()
    if not reps:
        return WindowClass(Case.B, None, K)
    return WindowClass(Case.A, reps[0], K, w.at(reps[0]))


def delta_seq(s, h: int = 0) -> FoldSeq:
    """Keep the signs at absolute positions congruent to ``h`` mod 3."""
    w = as_foldseq(s)
    h %= 3
    if len(w) >= 2:
        passes, vacuous, failed = _level_residues(
            np.asarray(w.signs, dtype=np.int8), w.origin_index, 0, [h])
        if failed:
            raise BadResidue(f"residue {h} fails the level-0 alternation")
    start = (h - w.origin_index) % 3
    kept = w.signs[start::3]
    first_pos = w.origin_index + start
    lam = w.lam.tail() if (w.lam is not None and len(w.lam) > 0 and h == 0) else None
    return FoldSeq(kept, (first_pos - h) // 3, lam)
