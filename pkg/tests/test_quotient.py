import random

import numpy as np
import pytest

from cactiq.families import build_H
from cactiq.graph import from_edges
from cactiq.quotient import (BlockSpec, IndexPartition, SpectrumMultiset,
                             build_from_spec, is_equitable, natural_partition,
                             quotient_char_poly, quotient_matrix,
                             structured_spectrum)
from cactiq.spectra import signless_laplacian

Q_C3 = signless_laplacian(from_edges(3, [(0, 1), (1, 2), (0, 2)]))
Q_P3 = signless_laplacian(from_edges(3, [(0, 1), (1, 2)]))


def random_spec(rng, max_t=4, max_size=5, lo=-3, hi=3):
    t = rng.randint(1, max_t)
    sizes = [rng.randint(1, max_size) for _ in range(t)]
    l = [rng.randint(lo, hi) for _ in range(t)]
    p = [rng.randint(lo, hi) for _ in range(t)]
    s = [[0] * t for _ in range(t)]
    for i in range(t):
        for j in range(i + 1, t):
            s[i][j] = s[j][i] = rng.randint(lo, hi)
    return BlockSpec(sizes, l, p, s)


class TestIndexPartition:
    def test_valid(self):
        part = IndexPartition([(0,), (1, 2)])
        assert part.order == 3

    def test_rejects_gap(self):
        with pytest.raises(ValueError):
            IndexPartition([(0,), (2,)])

    def test_rejects_empty_block(self):
        with pytest.raises(ValueError):
            IndexPartition([(0, 1), ()])


class TestQuotientMatrix:
    def test_c3_single_block(self):
        b = quotient_matrix(Q_C3, IndexPartition([(0, 1, 2)]))
        assert b.entries == ((4.0,),)

    def test_c3_split(self):
        b = quotient_matrix(Q_C3, IndexPartition([(0,), (1, 2)]))
        assert b.entries == ((2.0, 2.0), (1.0, 3.0))

    def test_p3_split_not_equitable_but_defined(self):
        b = quotient_matrix(Q_P3, IndexPartition([(0,), (1, 2)]))
        assert b.entries == ((1.0, 1.0), (0.5, 2.5))

    def test_wrong_cover_rejected(self):
        with pytest.raises(ValueError):
            quotient_matrix(Q_C3, IndexPartition([(0,), (1,)]))


class TestIsEquitable:
    def test_c3(self):
        assert is_equitable(Q_C3, IndexPartition([(0,), (1, 2)]))

    def test_p3(self):
        assert not is_equitable(Q_P3, IndexPartition([(0,), (1, 2)]))

    def test_singletons_always(self):
        assert is_equitable(Q_P3, IndexPartition([(0,), (1,), (2,)]))


class TestBlockSpec:
    def test_symmetry_enforced(self):
        with pytest.raises(ValueError, match="symmetric"):
            BlockSpec([1, 2], [0, 1], [2, 1], [[0, 1], [2, 0]])

    def test_json_round_trip(self):
        spec = random_spec(random.Random(1))
        again = BlockSpec.from_json(spec.to_json())
        assert again.sizes == spec.sizes and again.s == spec.s

    def test_build_j2_plus_i2(self):
        m = build_from_spec(BlockSpec([2], [1], [1], [[0]]))
        assert m.int_rows == ((2, 1), (1, 2))

    def test_build_c3_from_blocks(self):
        spec = BlockSpec([1, 2], [0, 1], [2, 1], [[0, 1], [1, 0]])
        assert build_from_spec(spec).int_rows == Q_C3.int_rows


class TestStructuredSpectrum:
    def test_j2_plus_i2(self):
        got = structured_spectrum(BlockSpec([2], [1], [1], [[0]]))
        assert got.pairs == ((pytest.approx(1.0), 1), (pytest.approx(3.0), 1))

    def test_matches_dense_on_random_specs(self):
        rng = random.Random(42)
        for _ in range(100):
            spec = random_spec(rng)
            dense = build_from_spec(spec)
            want = SpectrumMultiset.from_values(np.linalg.eigvalsh(dense.data))
            got = structured_spectrum(spec)
            assert got.close_to(want, tol=1e-8), spec.to_json()

    def test_quotient_eigenvalues_embed(self):
        # every eigenvalue of an equitable quotient is an eigenvalue of M
        rng = random.Random(7)
        for _ in range(100):
            spec = random_spec(rng)
            dense = build_from_spec(spec)
            part = natural_partition(spec)
            assert is_equitable(dense, part)
            b = quotient_matrix(dense, part).as_array()
            d = np.sqrt(np.array(spec.sizes, dtype=float))
            sym = b * (d[:, None] / d[None, :])
            quotient_eigs = np.linalg.eigvalsh((sym + sym.T) / 2)
            dense_eigs = np.linalg.eigvalsh(dense.data)
            for lam in quotient_eigs:
                assert min(abs(dense_eigs - lam)) < 1e-8


def hub_spec(s, k):
    """The two-stage block structure of Q(H(s, k)): hub, s triangle pairs,
    pendant block."""
    n = 2 * s + k + 1
    sizes = [1] + [2] * s + ([k] if k else [])
    l = [n - 2] + [1] * s + ([0] if k else [])
    p = [1] + [1] * s + ([1] if k else [])
    t = len(sizes)
    sm = [[0] * t for _ in range(t)]
    for j in range(1, t):
        sm[0][j] = sm[j][0] = 1
    return BlockSpec(sizes, l, p, sm)


class TestTwoStageChain:
    @pytest.mark.parametrize("s,k", [(2, 0), (2, 1), (3, 2), (4, 3)])
    def test_hub_family_reduction(self, s, k):
        # beyond the 3x3 reduced quotient, the spectrum is exactly
        # 1 with multiplicity (n+k-3)/2 and 3 with multiplicity (n-k-3)/2
        n = 2 * s + k + 1
        spec = hub_spec(s, k)
        b2 = [[n - 1, 2 * s, k], [1, 3, 0], [1, 0, 1]]
        vals = list(np.linalg.eigvals(np.array(b2, dtype=float)).real)
        vals += [1.0] * ((n + k - 3) // 2) + [3.0] * ((n - k - 3) // 2)
        want = SpectrumMultiset.from_values(vals)
        assert structured_spectrum(spec).close_to(want, tol=1e-7)

    def test_exact_quotient_char_poly(self):
        spec = hub_spec(2, 0)
        p = quotient_char_poly(spec)
        dense = build_from_spec(spec)
        # quotient spectrum embeds: its char poly divides nothing here, but
        # each root must be an eigenvalue of the dense matrix
        roots = np.roots(list(reversed(p.coeffs)))
        dense_eigs = np.linalg.eigvalsh(dense.data)
        for r in roots.real:
            assert min(abs(dense_eigs - r)) < 1e-8


def test_bowtie_block_spec_matches_eigensolver():
    spec = hub_spec(2, 0)
    dense = build_from_spec(spec)
    assert dense.int_rows == signless_laplacian(build_H(2, 0)).int_rows
    got = structured_spectrum(spec)
    want = SpectrumMultiset.from_values(np.linalg.eigvalsh(dense.data))
    assert got.close_to(want, tol=1e-8)
