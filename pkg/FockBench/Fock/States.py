#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
FockBench  Copyright (C) 2026  FockBench developers
This program is free software and comes with ABSOLUTELY NO WARRANTY; for details see LICENSE file.

Truncated single- and multi-mode states in the number basis.

The amplitude of |n> is sqrt(n!) times the coefficient of u^n of the state's Bargmann function, i.e. the basis is
the orthonormal system u^n / sqrt(n!). Multi-mode states are truncated by their TOTAL photon number so that
photon-number preserving two-mode operators act exactly on the truncated space.
"""

import logging
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Union

import numpy as np
from numpy.polynomial.laguerre import laggauss
from scipy.stats import poisson

from FockBench.config import NUMERICS
from FockBench.Fock.Errors import InvalidParameterError, OutOfRangeError, ShapeError, TruncationBudgetError
from FockBench.Fock.LogDomain import assemble, compensated_sum, log_factorial, power_terms

logger = logging.getLogger()


def _read_only(array: np.ndarray) -> np.ndarray:
    array.setflags(write=False)
    return array


@dataclass(frozen=True)
class CoherentParams:
    """
    Parameter alpha = |alpha| e^{i theta} of a coherent state.

    Attributes
    ----------
    alpha: complex
        the complex amplitude
    """

    alpha: complex

    def __post_init__(self):
        alpha = complex(self.alpha)
        if not (math.isfinite(alpha.real) and math.isfinite(alpha.imag)):
            raise InvalidParameterError("Coherent amplitude must be finite, got {}.".format(self.alpha))
        object.__setattr__(self, "alpha", alpha)

    @classmethod
    def from_polar(cls, magnitude: float, phase: float) -> "CoherentParams":
        if magnitude < 0:
            raise InvalidParameterError("Magnitude must be non-negative, got {}.".format(magnitude))
        return cls(magnitude * np.exp(1j * phase))

    @property
    def magnitude(self) -> float:
        return abs(self.alpha)

    @property
    def phase(self) -> float:
        """Phase theta in (-pi, pi]."""
        theta = math.atan2(self.alpha.imag, self.alpha.real)
        return math.pi if theta == -math.pi else theta


def as_coherent_params(alpha: Union[CoherentParams, complex, float]) -> CoherentParams:
    if isinstance(alpha, CoherentParams):
        return alpha
    return CoherentParams(alpha)


@dataclass(frozen=True, eq=False)
class FockState:
    """
    Single-mode state truncated to the number states |0>, ..., |cutoff-1>.

    Attributes
    ----------
    amps: np.ndarray
        complex amplitudes, read-only
    truncation_loss: float
        probability mass discarded by the truncation (only known for states built from closed forms)
    """

    amps: np.ndarray
    truncation_loss: float = 0.0

    def __post_init__(self):
        amps = np.array(self.amps, dtype=complex)
        if amps.ndim != 1 or amps.size < 1:
            raise ShapeError("FockState needs a non-empty 1-D amplitude vector, got shape {}.".format(amps.shape))
        if not np.all(np.isfinite(amps)):
            raise InvalidParameterError("FockState amplitudes must be finite.")
        object.__setattr__(self, "amps", _read_only(amps))

    @property
    def cutoff(self) -> int:
        return self.amps.size

    def norm(self) -> float:
        return float(np.linalg.norm(self.amps))

    def normalized(self) -> "FockState":
        nrm = self.norm()
        if nrm == 0:
            raise InvalidParameterError("Cannot normalize the zero state.")
        return FockState(self.amps / nrm)

    def padded(self, cutoff: int) -> np.ndarray:
        """Amplitudes zero-padded or cut to length `cutoff`."""
        out = np.zeros(cutoff, dtype=complex)
        n = min(cutoff, self.cutoff)
        out[:n] = self.amps[:n]
        return out

    def __repr__(self):
        return "<FockState cutoff={:d} norm={:.6g}>".format(self.cutoff, self.norm())


@lru_cache(maxsize=64)
def simplex_mask(modes: int, total_cutoff: int) -> np.ndarray:
    """Boolean array marking occupation tuples with total photon number <= total_cutoff."""
    grids = np.indices((total_cutoff + 1,) * modes)
    return _read_only(grids.sum(axis=0) <= total_cutoff)


@dataclass(frozen=True, eq=False)
class MultiModeState:
    """
    Two- or three-mode state truncated by total photon number.

    Attributes
    ----------
    amps: np.ndarray
        dense complex array of shape (total_cutoff+1,)*modes, identically zero outside the simplex
    discarded_weight: float
        probability mass dropped while building the state
    """

    amps: np.ndarray
    discarded_weight: float = 0.0

    def __post_init__(self):
        amps = np.array(self.amps, dtype=complex)
        if amps.ndim not in (2, 3) or len(set(amps.shape)) != 1:
            raise ShapeError("MultiModeState needs a cubic 2- or 3-mode array, got shape {}.".format(amps.shape))
        if not np.all(np.isfinite(amps)):
            raise InvalidParameterError("MultiModeState amplitudes must be finite.")
        amps = np.where(simplex_mask(amps.ndim, amps.shape[0] - 1), amps, 0.0)
        object.__setattr__(self, "amps", _read_only(amps))

    @classmethod
    def zeros(cls, modes: int, total_cutoff: int) -> "MultiModeState":
        return cls(np.zeros((total_cutoff + 1,) * modes, dtype=complex))

    @classmethod
    def from_blocks(cls, blocks) -> "MultiModeState":
        """Builds a two-mode state from its total photon number blocks; block N lists amps of |m, N-m>, m = 0..N."""
        total_cutoff = len(blocks) - 1
        amps = np.zeros((total_cutoff + 1, total_cutoff + 1), dtype=complex)
        for N, block in enumerate(blocks):
            m = np.arange(N + 1)
            amps[m, N - m] = block
        return cls(amps)

    @property
    def modes(self) -> int:
        return self.amps.ndim

    @property
    def total_cutoff(self) -> int:
        return self.amps.shape[0] - 1

    def block(self, N: int) -> np.ndarray:
        """Amplitudes of |m, N-m>, m = 0..N, of a two-mode state."""
        if self.modes != 2:
            raise ShapeError("Blocks are defined for two-mode states only.")
        if not 0 <= N <= self.total_cutoff:
            raise OutOfRangeError("Block {:d} outside 0..{:d}.".format(N, self.total_cutoff))
        m = np.arange(N + 1)
        return self.amps[m, N - m].copy()

    def norm(self) -> float:
        return float(np.linalg.norm(self.amps))

    def __repr__(self):
        return "<MultiModeState modes={:d} total_cutoff={:d} norm={:.6g}>".format(
            self.modes, self.total_cutoff, self.norm())


#
# constructors
#


def default_cutoff(magnitude: float) -> int:
    """Single-mode cutoff ceil(|a|^2 + 8|a| + 16) used whenever no cutoff is given."""
    return int(math.ceil(magnitude ** 2 + NUMERICS.cutoff_linear * magnitude + NUMERICS.cutoff_constant))


def coherent_truncation_loss(alpha, cutoff: int) -> float:
    """Probability mass of |alpha> above |cutoff-1>, i.e. the Poisson(|alpha|^2) upper tail."""
    mean = as_coherent_params(alpha).magnitude ** 2
    if mean == 0:
        return 0.0
    return float(poisson.sf(cutoff - 1, mean))


def required_cutoff(alpha, budget: float = NUMERICS.truncation_budget) -> int:
    """Smallest cutoff whose coherent truncation loss is below `budget`."""
    mean = as_coherent_params(alpha).magnitude ** 2
    if mean == 0:
        return 1
    cutoff = max(1, int(poisson.isf(budget, mean)) + 1)
    while coherent_truncation_loss(alpha, cutoff) >= budget:
        cutoff += 1
    while cutoff > 1 and coherent_truncation_loss(alpha, cutoff - 1) < budget:
        cutoff -= 1
    return cutoff


def check_truncation_budget(alpha, cutoff: int, budget: float = NUMERICS.truncation_budget, offset: int = 0,
                            what: str = "coherent state") -> float:
    """
    Raises TruncationBudgetError if |alpha> cut at `cutoff` loses more than `budget`.

    `offset` is added to the suggested cutoff, so callers can report the cutoff in their own convention
    (e.g. a two-mode total cutoff). Returns the loss otherwise.
    """
    loss = coherent_truncation_loss(alpha, cutoff)
    if loss >= budget:
        raise TruncationBudgetError(loss, budget, required_cutoff(alpha, budget) + offset, what=what)
    logger.debug("Truncation loss of %s at cutoff %d: %.3e", what, cutoff, loss)
    return loss


def coherent_state(p, cutoff: int) -> FockState:
    """|alpha> = e^{-|alpha|^2/2} sum_n alpha^n / sqrt(n!) |n>, assembled in log-domain."""
    p = as_coherent_params(p)
    if cutoff < 1:
        raise InvalidParameterError("Cutoff must be at least 1, got {}.".format(cutoff))
    log_pow, phase = power_terms(p.alpha, cutoff - 1)
    log_mag = -0.5 * p.magnitude ** 2 + log_pow - 0.5 * log_factorial(np.arange(cutoff))
    return FockState(assemble(log_mag, phase), truncation_loss=coherent_truncation_loss(p, cutoff))


def number_state(n: int, cutoff: int) -> FockState:
    if not 0 <= n < cutoff:
        raise OutOfRangeError("Number state |{:d}> does not fit into cutoff {:d}.".format(n, cutoff))
    amps = np.zeros(cutoff, dtype=complex)
    amps[n] = 1.0
    return FockState(amps)


def tensor(a: FockState, b: FockState, total_cutoff: int) -> MultiModeState:
    """|a> (x) |b> keeping only |m, n> with m + n <= total_cutoff; the dropped mass is reported."""
    if total_cutoff < 0:
        raise InvalidParameterError("Total cutoff must be non-negative, got {}.".format(total_cutoff))
    full = np.outer(a.padded(total_cutoff + 1), b.padded(total_cutoff + 1))
    state = MultiModeState(full)
    discarded = a.norm() ** 2 * b.norm() ** 2 - state.norm() ** 2
    return MultiModeState(state.amps, discarded_weight=max(0.0, discarded))


#
# inner products and contractions
#


def inner(a: Union[FockState, MultiModeState], b: Union[FockState, MultiModeState]) -> complex:
    """<a|b>, conjugate-linear in `a`. Cutoffs may differ; the shorter state is zero-padded."""
    if isinstance(a, FockState) and isinstance(b, FockState):
        cutoff = max(a.cutoff, b.cutoff)
        return complex(np.vdot(a.padded(cutoff), b.padded(cutoff)))
    if isinstance(a, MultiModeState) and isinstance(b, MultiModeState):
        if a.modes != b.modes:
            raise ShapeError("Cannot take inner product of a {:d}-mode and a {:d}-mode state.".format(
                a.modes, b.modes))
        size = max(a.total_cutoff, b.total_cutoff) + 1
        pad_a = [(0, size - a.amps.shape[0])] * a.modes
        pad_b = [(0, size - b.amps.shape[0])] * b.modes
        return complex(np.vdot(np.pad(a.amps, pad_a), np.pad(b.amps, pad_b)))
    raise ShapeError("Cannot take inner product of {} and {}.".format(type(a).__name__, type(b).__name__))


def contract_mode(s: MultiModeState, mode: int, bra: FockState) -> Union[FockState, MultiModeState]:
    """Applies <bra| to one mode: result = sum_n conj(bra[n]) s[..., n, ...]; one mode fewer."""
    if not 0 <= mode < s.modes:
        raise ShapeError("Mode index {} invalid for a {:d}-mode state.".format(mode, s.modes))
    bra_amps = np.conj(bra.padded(s.total_cutoff + 1))
    reduced = np.tensordot(bra_amps, s.amps, axes=([0], [mode]))
    if s.modes == 2:
        return FockState(reduced)
    return MultiModeState(reduced)


def bargmann_eval(s: FockState, w: complex) -> complex:
    """Value at w of the Bargmann function f(u) = sum_n amps[n] u^n / sqrt(n!)."""
    w = complex(w)
    if not (math.isfinite(w.real) and math.isfinite(w.imag)):
        raise InvalidParameterError("Evaluation point must be finite, got {}.".format(w))
    log_pow, phase = power_terms(w, s.cutoff - 1)
    basis = assemble(log_pow - 0.5 * log_factorial(np.arange(s.cutoff)), phase)
    return compensated_sum(s.amps * basis)


def coherent_resolution_of_identity(block: int = 4,
                                    radial_nodes: int = NUMERICS.identity_radial_nodes,
                                    angular_nodes: int = NUMERICS.identity_angular_nodes) -> np.ndarray:
    """
    Quadrature of (1/pi) int |alpha><alpha| d^2 alpha on the top-left `block` x `block` number block.

    Radial part: Gauss-Laguerre in t = |alpha|^2 (exact for the polynomial times e^{-t} integrands),
    angular part: periodic trapezoid.
    """
    t, w = laggauss(radial_nodes)
    phi = 2 * np.pi * np.arange(angular_nodes) / angular_nodes
    n = np.arange(block)
    # amplitude t^{n/2} e^{i n phi} / sqrt(n!) without the e^{-t/2} factor absorbed in the weights
    radial = np.exp(0.5 * n[None, :] * np.log(t)[:, None] - 0.5 * log_factorial(n)[None, :])
    angular = np.exp(1j * np.outer(phi, n))
    amp = radial[:, None, :] * angular[None, :, :]
    weights = w[:, None] / angular_nodes * np.ones(angular_nodes)[None, :]
    return np.einsum("kj,kjm,kjn->mn", weights, amp, np.conj(amp))


#
# fixture serialization
#


def state_to_json(s: Union[FockState, MultiModeState]) -> dict:
    """Plain dict with [re, im] amplitude pairs; multi-mode states list only the non-zero entries."""
    if isinstance(s, FockState):
        return {
            "kind": "FockState",
            "cutoff": s.cutoff,
            "amps": [[float(a.real), float(a.imag)] for a in s.amps],
        }
    entries = []
    for idx in zip(*np.nonzero(s.amps)):
        a = s.amps[idx]
        entries.append([[int(i) for i in idx], float(a.real), float(a.imag)])
    return {
        "kind": "MultiModeState",
        "modes": s.modes,
        "total_cutoff": s.total_cutoff,
        "amps": entries,
    }


def state_from_json(record: dict) -> Union[FockState, MultiModeState]:
    kind = record.get("kind")
    if kind == "FockState":
        amps = np.array([complex(re, im) for re, im in record["amps"]], dtype=complex)
        if amps.size != record["cutoff"]:
            raise ShapeError("Cutoff {} does not match {} amplitudes.".format(record["cutoff"], amps.size))
        return FockState(amps)
    if kind == "MultiModeState":
        amps = np.zeros((record["total_cutoff"] + 1,) * record["modes"], dtype=complex)
        for idx, re, im in record["amps"]:
            amps[tuple(idx)] = complex(re, im)
        return MultiModeState(amps)
    raise ShapeError("Unknown state kind {!r}.".format(kind))
