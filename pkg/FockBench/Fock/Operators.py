#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
FockBench  Copyright (C) 2026  FockBench developers
This program is free software and comes with ABSOLUTELY NO WARRANTY; for details see LICENSE file.

Single-mode dense operators and two-mode operators that are block diagonal in the total photon number.

Block N of a BlockOperator acts on span{|i, N-i>} and is indexed by the occupation i of the first mode.
"""

import logging
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Tuple, Union

import numpy as np
from scipy.linalg import eigh_tridiagonal

from FockBench.config import NUMERICS
from FockBench.Fock.Errors import InvalidParameterError, ShapeError
from FockBench.Fock.LogDomain import assemble, log_factorial
from FockBench.Fock.States import FockState, MultiModeState, _read_only

logger = logging.getLogger()


@dataclass(frozen=True, eq=False)
class DenseOperator:
    """
    Single-mode operator stored as its number-basis matrix.

    Hermiticity and unitarity are checked on demand, never assumed.
    """

    entries: np.ndarray

    def __post_init__(self):
        entries = np.array(self.entries, dtype=complex)
        if entries.ndim != 2 or entries.shape[0] != entries.shape[1]:
            raise ShapeError("DenseOperator needs a square matrix, got shape {}.".format(entries.shape))
        if not np.all(np.isfinite(entries)):
            raise InvalidParameterError("DenseOperator entries must be finite.")
        object.__setattr__(self, "entries", _read_only(entries))

    @classmethod
    def identity(cls, dim: int) -> "DenseOperator":
        return cls(np.eye(dim))

    @property
    def dim(self) -> int:
        return self.entries.shape[0]

    def dagger(self) -> "DenseOperator":
        return DenseOperator(self.entries.conj().T)

    def block(self, size: int) -> np.ndarray:
        """Top-left size x size block."""
        return self.entries[:size, :size].copy()

    def is_hermitian(self, tol: float = 1e-12) -> bool:
        return bool(np.max(np.abs(self.entries - self.entries.conj().T), initial=0.0) <= tol)

    def is_unitary(self, tol: float = 1e-12) -> bool:
        deviation = self.entries.conj().T @ self.entries - np.eye(self.dim)
        return bool(np.max(np.abs(deviation), initial=0.0) <= tol)

    def __matmul__(self, other):
        if isinstance(other, DenseOperator):
            if other.dim != self.dim:
                raise ShapeError("Cannot multiply operators of dimension {} and {}.".format(self.dim, other.dim))
            return DenseOperator(self.entries @ other.entries)
        if isinstance(other, FockState):
            return apply(self, other)
        return NotImplemented

    def __repr__(self):
        return "<DenseOperator dim={:d}>".format(self.dim)


@dataclass(frozen=True, eq=False)
class BlockOperator:
    """
    Two-mode operator preserving the total photon number.

    Attributes
    ----------
    blocks: tuple of np.ndarray
        blocks[N] is the (N+1) x (N+1) matrix on span{|i, N-i>}, i = 0..N
    """

    blocks: Tuple[np.ndarray, ...]

    def __post_init__(self):
        blocks = []
        for N, block in enumerate(self.blocks):
            block = np.array(block)
            if block.shape != (N + 1, N + 1):
                raise ShapeError("Block {:d} must have shape {}, got {}.".format(N, (N + 1, N + 1), block.shape))
            blocks.append(_read_only(block))
        if not blocks:
            raise ShapeError("BlockOperator needs at least the N = 0 block.")
        object.__setattr__(self, "blocks", tuple(blocks))

    @classmethod
    def identity(cls, total_cutoff: int) -> "BlockOperator":
        return cls(tuple(np.eye(N + 1) for N in range(total_cutoff + 1)))

    @classmethod
    def zeros(cls, total_cutoff: int) -> "BlockOperator":
        return cls(tuple(np.zeros((N + 1, N + 1)) for N in range(total_cutoff + 1)))

    @property
    def total_cutoff(self) -> int:
        return len(self.blocks) - 1

    def dagger(self) -> "BlockOperator":
        return BlockOperator(tuple(b.conj().T for b in self.blocks))

    def scaled(self, factor: complex) -> "BlockOperator":
        return BlockOperator(tuple(factor * b for b in self.blocks))

    def max_deviation(self, other: "BlockOperator") -> float:
        """Largest entrywise difference over all blocks."""
        self._check_compatible(other)
        return max(float(np.max(np.abs(a - b))) for a, b in zip(self.blocks, other.blocks))

    def is_unitary(self, tol: float = 1e-12) -> bool:
        return all(np.max(np.abs(b.conj().T @ b - np.eye(b.shape[0]))) <= tol for b in self.blocks)

    def to_dense(self) -> np.ndarray:
        """Matrix on the flattened (total_cutoff+1)^2 occupation grid, index m * (total_cutoff+1) + n."""
        size = self.total_cutoff + 1
        dense = np.zeros((size * size, size * size), dtype=complex)
        for N, block in enumerate(self.blocks):
            i = np.arange(N + 1)
            flat = i * size + (N - i)
            dense[np.ix_(flat, flat)] = block
        return dense

    def _check_compatible(self, other: "BlockOperator"):
        if other.total_cutoff != self.total_cutoff:
            raise ShapeError("Total cutoffs {:d} and {:d} differ.".format(self.total_cutoff, other.total_cutoff))

    def __add__(self, other):
        if not isinstance(other, BlockOperator):
            return NotImplemented
        self._check_compatible(other)
        return BlockOperator(tuple(a + b for a, b in zip(self.blocks, other.blocks)))

    def __sub__(self, other):
        if not isinstance(other, BlockOperator):
            return NotImplemented
        self._check_compatible(other)
        return BlockOperator(tuple(a - b for a, b in zip(self.blocks, other.blocks)))

    def __matmul__(self, other):
        if isinstance(other, BlockOperator):
            self._check_compatible(other)
            return BlockOperator(tuple(a @ b for a, b in zip(self.blocks, other.blocks)))
        if isinstance(other, MultiModeState):
            return apply(self, other)
        return NotImplemented

    def __repr__(self):
        return "<BlockOperator total_cutoff={:d}>".format(self.total_cutoff)


@dataclass(frozen=True, eq=False)
class QuadEigenstate:
    """Truncated generalized eigenvector |theta; r> of the quadrature xi(theta). Never normalized."""

    theta: float
    r: float
    state: FockState


#
# single-mode operators
#


def ladder(cutoff: int) -> Tuple[DenseOperator, DenseOperator]:
    """
    Annihilation and creation operators on the truncated space.

    The truncated commutator [a, a_dag] is the identity except for the corner entry, which equals 1 - cutoff.
    """
    if cutoff < 2:
        raise InvalidParameterError("Ladder operators need cutoff >= 2, got {}.".format(cutoff))
    a = np.diag(np.sqrt(np.arange(1, cutoff, dtype=float)), k=1)
    return DenseOperator(a), DenseOperator(a.T)


def number_operator(cutoff: int) -> DenseOperator:
    return DenseOperator(np.diag(np.arange(cutoff, dtype=float)))


def quadrature_op(theta: float, cutoff: int) -> DenseOperator:
    """xi(theta) = e^{-i theta} a + e^{i theta} a_dag, exactly Hermitian."""
    a, a_dag = ladder(cutoff)
    phase = np.exp(1j * theta)
    return DenseOperator(np.conj(phase) * a.entries + phase * a_dag.entries)


def quad_eigenvectors(theta: float, rs, cutoff: int) -> np.ndarray:
    """
    Rows are the amplitudes of |theta; r> for every r in `rs`.

    Uses the recurrence of the normalized Hermite functions h_n = He_n(r) / sqrt(n!):
    h_{n+1} = (r h_n - sqrt(n) h_{n-1}) / sqrt(n+1). These stay of order e^{r^2/4}, so no log form is needed.
    """
    rs = np.atleast_1d(np.asarray(rs, dtype=float))
    h = np.zeros((rs.size, cutoff))
    h[:, 0] = 1.0
    if cutoff > 1:
        h[:, 1] = rs
    for n in range(1, cutoff - 1):
        h[:, n + 1] = (rs * h[:, n] - math.sqrt(n) * h[:, n - 1]) / math.sqrt(n + 1)
    envelope = np.exp(-0.25 * rs ** 2)
    return envelope[:, None] * h * np.exp(1j * theta * np.arange(cutoff))[None, :]


def quad_eigenstate(theta: float, r: float, cutoff: int) -> QuadEigenstate:
    if cutoff < 2:
        raise InvalidParameterError("Quadrature eigenstates need cutoff >= 2, got {}.".format(cutoff))
    return QuadEigenstate(theta=float(theta), r=float(r), state=FockState(quad_eigenvectors(theta, r, cutoff)[0]))


def _exp_ladder_log(z: complex, cutoff: int, shift: float, lower: bool):
    """
    (log-magnitude, phase) of the entries of e^{-shift} exp(z a_dag) (lower=True) or e^{-shift} exp(z a).

    exp(z a_dag)[m, k] = z^{m-k} / (m-k)! * sqrt(m! / k!) for m >= k, zero otherwise.
    """
    m, k = np.indices((cutoff, cutoff))
    if not lower:
        m, k = k, m
    d = m - k
    valid = d >= 0
    d_safe = np.where(valid, d, 0)
    log_mag = (d_safe * math.log(abs(z)) - log_factorial(d_safe)
               + 0.5 * (log_factorial(m) - log_factorial(k)) - shift)
    log_mag = np.where(valid, log_mag, -np.inf)
    return log_mag, d_safe * np.angle(z)


def displacement(alpha: complex, cutoff: int) -> DenseOperator:
    """
    D(alpha) = e^{-|alpha|^2/2} exp(alpha a_dag) exp(-conj(alpha) a) on the truncated space.

    Both factors are triangular, so every retained entry of the product is exact. The terms of the inner sum
    cancel like e^{|alpha|^2}; use moderate |alpha|.
    """
    alpha = complex(alpha)
    if alpha == 0:
        return DenseOperator.identity(cutoff)
    shift = 0.25 * abs(alpha) ** 2
    upper = assemble(*_exp_ladder_log(alpha, cutoff, shift, lower=True))
    lower = assemble(*_exp_ladder_log(-np.conj(alpha), cutoff, shift, lower=False))
    return DenseOperator(upper @ lower)


def apply(op: Union[DenseOperator, "BlockOperator"], s: Union[FockState, MultiModeState],
          modes: Tuple[int, int] = (0, 1)):
    """
    Matrix-vector action. A BlockOperator acts blockwise on the pair `modes` of a two- or three-mode state.
    """
    if isinstance(op, DenseOperator):
        if not isinstance(s, FockState):
            raise ShapeError("A DenseOperator acts on a FockState, got {}.".format(type(s).__name__))
        if op.dim != s.cutoff:
            raise ShapeError("Operator dimension {:d} does not match cutoff {:d}.".format(op.dim, s.cutoff))
        return FockState(op.entries @ s.amps)

    if not isinstance(s, MultiModeState):
        raise ShapeError("A BlockOperator acts on a MultiModeState, got {}.".format(type(s).__name__))
    if op.total_cutoff != s.total_cutoff:
        raise ShapeError("Operator total cutoff {:d} does not match state total cutoff {:d}.".format(
            op.total_cutoff, s.total_cutoff))
    if len(set(modes)) != 2 or not all(0 <= m < s.modes for m in modes):
        raise ShapeError("Invalid mode pair {} for a {:d}-mode state.".format(modes, s.modes))

    if s.modes == 2:
        order = list(modes)
    else:
        spectator = ({0, 1, 2} - set(modes)).pop()
        order = list(modes) + [spectator]
    amps = np.transpose(s.amps, order)
    out = np.zeros_like(amps)
    T = s.total_cutoff
    if s.modes == 2:
        _apply_blocks(op.blocks, amps, out, T)
    else:
        # spectator occupation c leaves room for T - c photons in the pair
        for c in range(T + 1):
            _apply_blocks(op.blocks, amps[:, :, c], out[:, :, c], T - c)
    return MultiModeState(np.transpose(out, np.argsort(order)))


def _apply_blocks(blocks, amps: np.ndarray, out: np.ndarray, n_max: int):
    for N in range(n_max + 1):
        i = np.arange(N + 1)
        out[i, N - i] = blocks[N] @ amps[i, N - i]


#
# beamsplitter
#


def _generator_couplings(N: int) -> np.ndarray:
    """e_i = sqrt((i+1)(N-i)), the coupling between |i, N-i> and |i+1, N-i-1>."""
    i = np.arange(N, dtype=float)
    return np.sqrt((i + 1) * (N - i))


def beamsplitter_generator(total_cutoff: int) -> BlockOperator:
    """Blocks of c1* c0 - c0* c1, the real antisymmetric generator of theta -> U(theta)."""
    blocks = []
    for N in range(total_cutoff + 1):
        e = _generator_couplings(N)
        blocks.append(np.diag(e, k=1) - np.diag(e, k=-1))
    return BlockOperator(tuple(blocks))


@lru_cache(maxsize=4096)
def _beamsplitter_block_spectral(theta: float, N: int) -> np.ndarray:
    if N == 0:
        return _read_only(np.ones((1, 1)))
    # D^dag G D = i T with D = diag(i^k) and T the symmetric tridiagonal matrix of the couplings
    eigvals, eigvecs = eigh_tridiagonal(np.zeros(N + 1), -_generator_couplings(N))
    rotated = (eigvecs * np.exp(-1j * theta * eigvals)) @ eigvecs.T
    phases = np.array([1, 1j, -1, -1j])[np.arange(N + 1) % 4]
    block = (phases[:, None] * rotated * np.conj(phases)[None, :]).real
    return _read_only(block)


@lru_cache(maxsize=256)
def _beamsplitter_block_binomial(theta: float, N: int) -> np.ndarray:
    c, s = math.cos(theta), math.sin(theta)
    block = np.zeros((N + 1, N + 1))
    for m in range(N + 1):
        n = N - m
        # expand (c u0 + s u1)^m (-s u0 + c u1)^n and collect the power a of u0
        for p in range(m + 1):
            for q in range(n + 1):
                a = p + q
                coefficient = math.comb(m, p) * math.comb(n, q) * c ** p * s ** (m - p) * (-s) ** q * c ** (n - q)
                norm = math.exp(0.5 * (math.lgamma(a + 1) + math.lgamma(N - a + 1)
                                       - math.lgamma(m + 1) - math.lgamma(n + 1)))
                block[a, m] += coefficient * norm
    return _read_only(block)


def beamsplitter(theta: float, total_cutoff: int, method: str = "spectral") -> BlockOperator:
    """
    U(theta) acting as f(u0, u1) -> f(u0 cos + u1 sin, -u0 sin + u1 cos). Block N = 1 is [[cos, sin], [-sin, cos]].

    The "spectral" method exponentiates the tridiagonal generator through its eigendecomposition and stays
    accurate for blocks of a few hundred photons. "binomial" expands the substitution literally and loses
    accuracy to cancellation for large N.
    """
    if total_cutoff < 0:
        raise InvalidParameterError("Total cutoff must be non-negative, got {}.".format(total_cutoff))
    if method == "spectral":
        block_fn = _beamsplitter_block_spectral
    elif method == "binomial":
        block_fn = _beamsplitter_block_binomial
    else:
        raise InvalidParameterError("Unknown beamsplitter method {!r}.".format(method))
    theta = float(theta)
    return BlockOperator(tuple(block_fn(theta, N) for N in range(total_cutoff + 1)))


#
# completeness checks on quadrature eigenstates
#


def _completeness_grid():
    r = np.linspace(-NUMERICS.completeness_r_max, NUMERICS.completeness_r_max, NUMERICS.completeness_nodes)
    w = np.full(r.size, r[1] - r[0])
    w[0] = w[-1] = 0.5 * (r[1] - r[0])
    return r, w


def quadrature_completeness(theta: float, cutoff: int, block: int = 8) -> np.ndarray:
    """Trapezoid estimate of (1/sqrt(2 pi)) int |theta;r><theta;r| dr over the completeness grid, top-left block."""
    r, w = _completeness_grid()
    vectors = quad_eigenvectors(theta, r, cutoff)[:, :block]
    return (vectors.T * w) @ np.conj(vectors) / math.sqrt(2 * math.pi)


def delta_normalization(theta: float, s: float, cutoff: int) -> float:
    """
    Integral over the completeness grid of r -> <theta;r|theta;s> / sqrt(2 pi).

    The truncated overlap is a finite Hermite sum, so the result approaches 1 only slowly with the cutoff.
    """
    r, w = _completeness_grid()
    vectors = quad_eigenvectors(theta, r, cutoff)
    target = quad_eigenvectors(theta, s, cutoff)[0]
    overlaps = np.conj(vectors) @ target
    return float(np.real(np.sum(w * overlaps)) / math.sqrt(2 * math.pi))
