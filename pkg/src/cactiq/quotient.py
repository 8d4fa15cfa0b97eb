"""Quotient matrices of partitioned matrices and the structured spectral
decomposition for block matrices of the form M_ii = l_i*J + p_i*I,
M_ij = s_ij*J: the spectrum is the quotient spectrum plus each p_i with
multiplicity n_i - 1.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .polynomials import IntPolynomial
from .spectra import DenseSymMatrix, char_poly_int_rows

CLUSTER_TOL = 1e-6


@dataclass(frozen=True)
class IndexPartition:
    """Ordered partition of 0..n-1 into nonempty disjoint blocks."""
    blocks: tuple

    def __init__(self, blocks):
        blocks = tuple(tuple(int(i) for i in b) for b in blocks)
        if any(not b for b in blocks):
            raise ValueError("empty partition block")
        flat = [i for b in blocks for i in b]
        n = len(flat)
        if sorted(flat) != list(range(n)):
            raise ValueError("blocks must partition 0..n-1 exactly")
        object.__setattr__(self, "blocks", blocks)

    @property
    def order(self) -> int:
        return sum(len(b) for b in self.blocks)


@dataclass(frozen=True)
class QuotientMatrix:
    """The t x t matrix of average block row sums."""
    entries: tuple

    @property
    def t(self) -> int:
        return len(self.entries)

    def as_array(self):
        return np.array(self.entries, dtype=float)


class BlockSpec:
    """Structured symmetric block matrix: sizes n_i, diagonal parameters
    (l_i, p_i), off-diagonal parameters s_ij = s_ji."""

    __slots__ = ("sizes", "l", "p", "s")

    def __init__(self, sizes, l, p, s):
        self.sizes = tuple(int(x) for x in sizes)
        t = len(self.sizes)
        self.l = tuple(l)
        self.p = tuple(p)
        self.s = tuple(tuple(row) for row in s)
        if any(n < 1 for n in self.sizes):
            raise ValueError("block sizes must be >= 1")
        if len(self.l) != t or len(self.p) != t:
            raise ValueError("parameter lists must match block count")
        if len(self.s) != t or any(len(row) != t for row in self.s):
            raise ValueError("s must be a t x t table")
        for i in range(t):
            for j in range(t):
                if self.s[i][j] != self.s[j][i]:
                    raise ValueError(f"s[{i}][{j}] != s[{j}][{i}]: matrix not symmetric")

    @property
    def t(self) -> int:
        return len(self.sizes)

    @property
    def order(self) -> int:
        return sum(self.sizes)

    def is_integer(self) -> bool:
        vals = list(self.l) + list(self.p) + [x for row in self.s for x in row]
        return all(float(v).is_integer() for v in vals)

    def to_json(self) -> str:
        return json.dumps({"sizes": list(self.sizes), "l": list(self.l),
                           "p": list(self.p), "s": [list(r) for r in self.s]},
                          sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "BlockSpec":
        d = json.loads(text)
        return cls(d["sizes"], d["l"], d["p"], d["s"])


@dataclass(frozen=True)
class SpectrumMultiset:
    """Eigenvalues with multiplicities, strictly increasing."""
    pairs: tuple

    @classmethod
    def from_values(cls, values, tol: float = CLUSTER_TOL) -> "SpectrumMultiset":
        """Cluster nearby numeric eigenvalues into (value, multiplicity) pairs."""
        vals = sorted(float(v) for v in values)
        pairs = []
        for v in vals:
            if pairs and v - pairs[-1][0] <= tol:
                lam, mult = pairs[-1]
                pairs[-1] = ((lam * mult + v) / (mult + 1), mult + 1)
            else:
                pairs.append((v, 1))
        return cls(tuple(pairs))

    @property
    def total(self) -> int:
        return sum(m for _, m in self.pairs)

    def values(self):
        out = []
        for lam, mult in self.pairs:
            out.extend([lam] * mult)
        return out

    def close_to(self, other: "SpectrumMultiset", tol: float = 1e-8) -> bool:
        a, b = self.values(), other.values()
        return (len(a) == len(b)
                and all(abs(x - y) <= tol for x, y in zip(a, b)))


def quotient_matrix(m: DenseSymMatrix, part: IndexPartition) -> QuotientMatrix:
    """B(M): entry (i,j) is the sum of block M_ij divided by its row count.

    Defined unconditionally; equitability is a separate predicate.
    """
    if part.order != m.order:
        raise ValueError(f"partition covers {part.order} indices, matrix has {m.order}")
    entries = []
    for bi in part.blocks:
        row = []
        for bj in part.blocks:
            total = float(m.data[np.ix_(bi, bj)].sum())
            row.append(total / len(bi))
        entries.append(tuple(row))
    return QuotientMatrix(entries=tuple(entries))


def is_equitable(m: DenseSymMatrix, part: IndexPartition) -> bool:
    """True iff every block M_ij has constant row sums."""
    if part.order != m.order:
        raise ValueError(f"partition covers {part.order} indices, matrix has {m.order}")
    for bi in part.blocks:
        for bj in part.blocks:
            sums = m.data[np.ix_(bi, bj)].sum(axis=1)
            if not np.allclose(sums, sums[0], atol=1e-9):
                return False
    return True


def build_from_spec(spec: BlockSpec) -> DenseSymMatrix:
    """Expand a BlockSpec into the explicit dense matrix."""
    n = spec.order
    offsets = []
    off = 0
    for sz in spec.sizes:
        offsets.append(off)
        off += sz
    rows = [[0.0] * n for _ in range(n)]
    for i, ni in enumerate(spec.sizes):
        oi = offsets[i]
        for a in range(ni):
            for b in range(ni):
                rows[oi + a][oi + b] = spec.l[i] + (spec.p[i] if a == b else 0)
        for j, nj in enumerate(spec.sizes):
            if i == j:
                continue
            oj = offsets[j]
            for a in range(ni):
                for b in range(nj):
                    rows[oi + a][oj + b] = spec.s[i][j]
    if spec.is_integer():
        return DenseSymMatrix.from_int_rows(
            [[int(x) for x in row] for row in rows])
    return DenseSymMatrix(rows)


def natural_partition(spec: BlockSpec) -> IndexPartition:
    """The partition into the spec's consecutive blocks (always equitable)."""
    blocks, off = [], 0
    for sz in spec.sizes:
        blocks.append(tuple(range(off, off + sz)))
        off += sz
    return IndexPartition(blocks)


def spec_quotient_rows(spec: BlockSpec):
    """Rows of the t x t quotient: diagonal l_i*n_i + p_i, off-diagonal s_ij*n_j."""
    t = spec.t
    return [[spec.l[i] * spec.sizes[i] + spec.p[i] if i == j
             else spec.s[i][j] * spec.sizes[j]
             for j in range(t)] for i in range(t)]


def quotient_eigenvalues(spec: BlockSpec):
    """Numeric eigenvalues of the quotient of a symmetric BlockSpec.

    The quotient is diagonally similar to a symmetric matrix under
    D^(1/2) with D = diag(n_i), so the computation stays in eigh.
    """
    t = spec.t
    B = np.array(spec_quotient_rows(spec), dtype=float)
    d = np.sqrt(np.array(spec.sizes, dtype=float))
    sym = B * (d[:, None] / d[None, :])
    sym = (sym + sym.T) / 2
    return [float(x) for x in np.linalg.eigvalsh(sym)]


def quotient_char_poly(spec: BlockSpec) -> IntPolynomial:
    """Exact characteristic polynomial of the quotient matrix, for integer
    parameters (the exact path used by the verification harness)."""
    if not spec.is_integer():
        raise ValueError("exact quotient requires integer parameters")
    rows = [[int(x) for x in row] for row in spec_quotient_rows(spec)]
    return char_poly_int_rows(rows)


def structured_spectrum(spec: BlockSpec, tol: float = CLUSTER_TOL) -> SpectrumMultiset:
    """Full spectrum of the structured matrix: quotient eigenvalues united
    with each p_i at multiplicity n_i - 1."""
    values = list(quotient_eigenvalues(spec))
    for p_i, n_i in zip(spec.p, spec.sizes):
        values.extend([float(p_i)] * (n_i - 1))
    out = SpectrumMultiset.from_values(values, tol=tol)
    if out.total != spec.order:
        raise AssertionError("multiplicities do not sum to the order")
    return out
