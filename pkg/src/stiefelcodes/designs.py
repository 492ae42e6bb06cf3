"""Balanced incomplete block designs with resolutions.

A (v, b, rep, k, lambda) design places v points into b blocks of size k such
that every point lies in rep blocks and every point pair in lambda blocks.
A resolution partitions the blocks into rep parallel classes, each of which
partitions the point set.  Points are 1-indexed; blocks are kept as sorted
tuples so file round-trips are deterministic.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from pathlib import Path

from .errors import BudgetExceeded, InvalidParameter, SchemaError, UnknownDesign

BUILTIN_DESIGN_NAMES = ("k4-edges", "ag-2-2", "ag-2-3")


@dataclass(frozen=True)
class BIBD:
    v: int
    b: int
    rep: int
    k: int
    lam: int
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        blocks = tuple(tuple(sorted(int(p) for p in blk)) for blk in self.blocks)
        object.__setattr__(self, "blocks", blocks)
        if self.v < 2 or self.b != len(blocks):
            raise InvalidParameter("declared b must match the number of blocks")
        for blk in blocks:
            if len(set(blk)) != len(blk):
                raise InvalidParameter(f"repeated point inside block {blk}")
            if blk and (blk[0] < 1 or blk[-1] > self.v):
                raise InvalidParameter(f"block {blk} uses points outside 1..{self.v}")

    @classmethod
    def from_blocks(cls, v: int, blocks) -> "BIBD":
        """Infer (b, rep, k, lambda) from the block list itself.

        The inferred values are read off the first block, the first point,
        and the pair {1, 2}; verify_bibd checks them globally.
        """
        blocks = tuple(tuple(sorted(int(p) for p in blk)) for blk in blocks)
        if not blocks:
            raise InvalidParameter("a design needs at least one block")
        k = len(blocks[0])
        rep = sum(1 for blk in blocks if 1 in blk)
        lam = sum(1 for blk in blocks if 1 in blk and 2 in blk)
        return cls(v=v, b=len(blocks), rep=rep, k=k, lam=lam, blocks=blocks)


@dataclass(frozen=True)
class Resolution:
    """Partition of block indices (0-based) into parallel classes."""

    classes: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        classes = tuple(tuple(int(i) for i in cls_) for cls_ in self.classes)
        object.__setattr__(self, "classes", classes)


@dataclass(frozen=True)
class CheckResult:
    ok: bool
    problems: tuple[str, ...] = ()

    def __bool__(self) -> bool:
        return self.ok


def verify_bibd(design: BIBD) -> CheckResult:
    """Check every counting invariant; diagnostics name each violation,
    starting with the first one found."""
    problems = []
    for i, blk in enumerate(design.blocks):
        if len(blk) != design.k:
            problems.append(f"block {i} has size {len(blk)}, expected k={design.k}")
    pair_count = {pair: 0 for pair in combinations(range(1, design.v + 1), 2)}
    for blk in design.blocks:
        for pair in combinations(blk, 2):
            pair_count[pair] += 1
    for pair, c in pair_count.items():
        if c != design.lam:
            problems.append(f"pair {pair} lies in {c} blocks, expected lambda={design.lam}")
    for p in range(1, design.v + 1):
        c = sum(1 for blk in design.blocks if p in blk)
        if c != design.rep:
            problems.append(f"point {p} lies in {c} blocks, expected rep={design.rep}")
    if design.b * design.k != design.v * design.rep:
        problems.append(f"bk = {design.b * design.k} != vr = {design.v * design.rep}")
    if design.lam * (design.v - 1) != design.rep * (design.k - 1):
        problems.append(
            f"lambda(v-1) = {design.lam * (design.v - 1)} != r(k-1) = {design.rep * (design.k - 1)}"
        )
    return CheckResult(not problems, tuple(problems))


def verify_resolution(design: BIBD, res: Resolution) -> CheckResult:
    """Check that the classes partition the block set and that each class
    partitions the point set."""
    problems = []
    seen = [idx for cls_ in res.classes for idx in cls_]
    if sorted(seen) != list(range(design.b)):
        problems.append("classes do not partition the block index set")
    else:
        for ci, cls_ in enumerate(res.classes):
            covered = []
            for idx in cls_:
                covered.extend(design.blocks[idx])
            if sorted(covered) != list(range(1, design.v + 1)):
                dup = next((p for p in covered if covered.count(p) > 1), None)
                if dup is not None:
                    problems.append(f"class {ci} repeats point {dup}")
                else:
                    problems.append(f"class {ci} does not cover every point")
    return CheckResult(not problems, tuple(problems))


def find_resolution(design: BIBD, budget: int = 2_000_000) -> Resolution | None:
    """Search for a resolution by backtracking, or return None if none exists.

    Each parallel class is grown as an exact cover of the point set, always
    pivoting on the lowest uncovered point.  Raises BudgetExceeded when the
    node budget runs out before the search concludes.  Requires lambda = 1;
    adequate for designs with a few dozen blocks.
    """
    check = verify_bibd(design)
    if not check:
        raise InvalidParameter("not a valid design: " + check.problems[0])
    if design.lam != 1:
        raise InvalidParameter("resolution search supports lambda = 1 designs only")
    if design.v % design.k != 0:
        return None  # a parallel class would need v/k blocks

    full = (1 << design.v) - 1
    masks = []
    for blk in design.blocks:
        m = 0
        for p in blk:
            m |= 1 << (p - 1)
        masks.append(m)
    used = [False] * design.b
    classes: list[tuple[int, ...]] = []
    nodes = 0

    def next_class(current: list[int], covered: int) -> bool:
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise BudgetExceeded(f"resolution search exceeded {budget} nodes")
        if covered == full:
            classes.append(tuple(current))
            for idx in current:
                used[idx] = True
            if all(used):
                return True
            if next_class([], 0):
                return True
            for idx in current:
                used[idx] = False
            classes.pop()
            return False
        if not current:
            # Classes can be ordered by their smallest block index, so a
            # fresh class must open with the lowest unused block.
            idx = used.index(False)
            current.append(idx)
            if next_class(current, masks[idx]):
                return True
            current.pop()
            return False
        uncovered = full & ~covered
        pivot = (uncovered & -uncovered).bit_length() - 1  # lowest uncovered point
        for idx in range(design.b):
            if used[idx] or (idx in current):
                continue
            m = masks[idx]
            if not (m >> pivot) & 1 or (m & covered):
                continue
            current.append(idx)
            if next_class(current, covered | m):
                return True
            current.pop()
        return False

    if next_class([], 0):
        return Resolution(tuple(classes))
    return None


def _ag2(q: int) -> tuple[BIBD, Resolution]:
    # Lines of the affine plane of order q (q prime): slopes 0..q-1 plus
    # verticals; point (x, y) is labeled 1 + x + q*y.
    blocks = []
    classes = []
    for m in range(q):
        cls_ = []
        for c in range(q):
            line = sorted(1 + x + q * ((m * x + c) % q) for x in range(q))
            cls_.append(len(blocks))
            blocks.append(tuple(line))
        classes.append(tuple(cls_))
    cls_ = []
    for c in range(q):
        line = sorted(1 + c + q * y for y in range(q))
        cls_.append(len(blocks))
        blocks.append(tuple(line))
    classes.append(tuple(cls_))
    design = BIBD.from_blocks(q * q, blocks)
    return design, Resolution(tuple(classes))


def builtin_design(name: str) -> tuple[BIBD, Resolution]:
    """A shipped resolvable design by name: 'k4-edges' (the edges of the
    complete graph on 4 vertices, resolved into perfect matchings),
    'ag-2-2', or 'ag-2-3' (lines of the affine planes of orders 2 and 3)."""
    if name == "k4-edges":
        blocks = [(1, 2), (3, 4), (1, 3), (2, 4), (1, 4), (2, 3)]
        design = BIBD.from_blocks(4, blocks)
        res = Resolution(((0, 1), (2, 3), (4, 5)))
    elif name == "ag-2-2":
        design, res = _ag2(2)
    elif name == "ag-2-3":
        design, res = _ag2(3)
    else:
        raise UnknownDesign(f"unknown built-in design {name!r}; have {BUILTIN_DESIGN_NAMES}")
    check = verify_bibd(design)
    if not check:
        raise InvalidParameter(f"built-in {name} failed verification: {check.problems[0]}")
    check = verify_resolution(design, res)
    if not check:
        raise InvalidParameter(f"built-in {name} resolution failed: {check.problems[0]}")
    return design, res


def design_to_dict(design: BIBD, res: Resolution | None = None) -> dict:
    out = {"v": design.v, "blocks": [list(blk) for blk in design.blocks]}
    if res is not None:
        out["resolution"] = [list(cls_) for cls_ in res.classes]
    return out


def design_from_dict(data: dict) -> tuple[BIBD, Resolution | None]:
    if not isinstance(data, dict):
        raise SchemaError("design file must hold a JSON object")
    try:
        v = int(data["v"])
        blocks = [[int(p) for p in blk] for blk in data["blocks"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise SchemaError(f"malformed design file: {exc}") from exc
    try:
        design = BIBD.from_blocks(v, blocks)
    except InvalidParameter as exc:
        raise SchemaError(str(exc)) from exc
    res = None
    if "resolution" in data:
        try:
            res = Resolution(tuple(tuple(int(i) for i in cls_) for cls_ in data["resolution"]))
        except (TypeError, ValueError) as exc:
            raise SchemaError(f"malformed resolution: {exc}") from exc
    return design, res


def load_design_file(path) -> tuple[BIBD, Resolution | None]:
    with open(Path(path), "r", encoding="utf-8") as fp:
        try:
            data = json.load(fp)
        except json.JSONDecodeError as exc:
            raise SchemaError(f"not valid JSON: {exc}") from exc
    return design_from_dict(data)
