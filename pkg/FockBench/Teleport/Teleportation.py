#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
FockBench  Copyright (C) 2026  FockBench developers
This program is free software and comes with ABSOLUTELY NO WARRANTY; for details see LICENSE file.

Continuous-variable teleportation of a mode-0 state through the channel sum_n q^n |n>_1 |n>_2.

Modes: 0 holds the input, 1 and 2 the channel. The Bell measurement on modes 0 and 1 is either taken as the ideal
projection onto generalized Bell vectors or realized by two balanced homodyne detectors behind a 50:50
beamsplitter, each modelled by its single-mode conditional kernel.
"""

import logging
import math
from dataclasses import dataclass
from typing import Optional, Union

import numpy as np

from FockBench.config import LRoundingMode
from FockBench.Fock.Errors import InvalidParameterError
from FockBench.Fock.Operators import apply, beamsplitter, displacement, quad_eigenvectors
from FockBench.Fock.States import FockState, MultiModeState, contract_mode, default_cutoff, inner
from FockBench.Homodyne.Kernels import conditional_kernel, kernel_total_cutoff

logger = logging.getLogger()

QUARTER_PI = math.pi / 4
DEFAULT_THREE_MODE_CUTOFF = 24


@dataclass(frozen=True, eq=False)
class EPRChannel:
    """
    Attributes
    ----------
    q: float
        channel parameter, |q| < 1
    cutoff: int
        number of retained terms |n, n>, n < cutoff
    state: MultiModeState
        two-mode state with total cutoff 2 (cutoff - 1)
    discarded_mass: float
        q^{2 cutoff} / (1 - q^2)
    """

    q: float
    cutoff: int
    state: MultiModeState
    discarded_mass: float


@dataclass(frozen=True, eq=False)
class ConditionalOutput:
    """
    Unnormalized mode-2 output operator of the homodyne Bell measurement.

    The finite-oscillator kernels are not rank one, so the output after tracing out modes 0 and 1 is in general
    not a pure state. Its trace is the conditional mass <chi|K_l (x) K_k (x) I|chi>.

    Attributes
    ----------
    density: np.ndarray
        Hermitian positive semidefinite matrix on the mode-2 number basis
    """

    density: np.ndarray

    @classmethod
    def pure(cls, amps: np.ndarray) -> "ConditionalOutput":
        amps = np.asarray(amps, dtype=complex)
        return cls(np.outer(amps, np.conj(amps)))

    @property
    def cutoff(self) -> int:
        return self.density.shape[0]

    def mass(self) -> float:
        return float(np.trace(self.density).real)

    def purity(self) -> float:
        """Tr rho^2 / (Tr rho)^2, 1 for a pure output."""
        mass = self.mass()
        if mass == 0:
            raise InvalidParameterError("Purity is undefined for a zero output.")
        return float(np.vdot(self.density, self.density).real / mass ** 2)

    def fidelity(self, target: FockState) -> float:
        """<t|rho|t> / (|t|^2 Tr rho)."""
        t = target.padded(self.cutoff)
        norm_product = target.norm() ** 2 * self.mass()
        if norm_product == 0:
            raise InvalidParameterError("Fidelity is undefined for zero-norm states.")
        return float(min(1.0, max(0.0, np.vdot(t, self.density @ t).real / norm_product)))

    def leading_state(self) -> FockState:
        """sqrt(lambda_max) times the leading eigenvector, the output itself when it is pure."""
        eigvals, eigvecs = np.linalg.eigh(self.density)
        return FockState(math.sqrt(max(eigvals[-1], 0.0)) * eigvecs[:, -1])


@dataclass(frozen=True, eq=False)
class TeleportOutcome:
    x_minus: float
    p_plus: float
    collapsed: ConditionalOutput
    correction_alpha: complex


def _check_q(q: float):
    if not abs(q) < 1:
        raise InvalidParameterError("Channel parameter needs |q| < 1, got {}.".format(q))


def epr_channel(q: float, cutoff: int) -> EPRChannel:
    _check_q(q)
    if cutoff < 1:
        raise InvalidParameterError("Cutoff must be at least 1, got {}.".format(cutoff))
    total_cutoff = 2 * (cutoff - 1)
    amps = np.zeros((total_cutoff + 1, total_cutoff + 1), dtype=complex)
    n = np.arange(cutoff)
    amps[n, n] = float(q) ** n
    discarded = float(q) ** (2 * cutoff) / (1 - float(q) ** 2)
    return EPRChannel(q=float(q), cutoff=cutoff, state=MultiModeState(amps), discarded_mass=discarded)


def bell_state_vector(alpha_c: complex, total_cutoff: int) -> MultiModeState:
    """pi^{-1/2} sum_n (D(alpha_c)|n>) (x) |n>, truncated by total photon number."""
    d = displacement(alpha_c, total_cutoff + 1).entries
    return MultiModeState(d / math.sqrt(math.pi))


def quadrature_pair_state(x_minus: float, p_plus: float, total_cutoff: int) -> MultiModeState:
    """|x_minus>_0 (x) |p_plus>_1 as |0; sqrt(2) x_minus> (x) |pi/2; sqrt(2) p_plus>."""
    x_vec = quad_eigenvectors(0.0, math.sqrt(2) * x_minus, total_cutoff + 1)[0]
    p_vec = quad_eigenvectors(math.pi / 2, math.sqrt(2) * p_plus, total_cutoff + 1)[0]
    return MultiModeState(np.outer(x_vec, p_vec))


def outcome_to_quadratures(l: int, k: int, lo_mag: float, mode: LRoundingMode = LRoundingMode.ROUND):
    """
    Converts count differences (l, k) into (x_minus, p_plus).

    x = l / (sqrt(2) |lo|) for rounded outcomes; floored outcomes use the bin midpoint (l + 1/2).
    """
    if lo_mag <= 0:
        raise InvalidParameterError("Local oscillator magnitude must be positive, got {}.".format(lo_mag))
    shift = 0.5 if mode is LRoundingMode.FLOOR else 0.0
    scale = math.sqrt(2) * lo_mag
    return (l + shift) / scale, (k + shift) / scale


def _displaced_back(psi0: FockState, alpha_c: complex, cutoff: int) -> np.ndarray:
    """D(alpha_c)^dag psi0 at the given cutoff."""
    d = displacement(alpha_c, cutoff).entries
    return np.conj(d).T @ psi0.padded(cutoff)


def ideal_bell_measure(psi0: FockState, q: float, x_minus: float, p_plus: float,
                       cutoff: Optional[int] = None) -> FockState:
    """
    Mode-2 state sum_k q^k <k|D(alpha)^dag|psi0> |k> after the Bell outcome alpha = x_minus + i p_plus.

    Obtained by contracting mode 1 of the channel with the displaced input; left unnormalized. The pi^{-1/2}
    weight of the Bell vector is dropped, so the output is the Bell-projected state up to that constant factor.
    """
    _check_q(q)
    alpha_c = complex(x_minus, p_plus)
    if cutoff is None:
        cutoff = max(psi0.cutoff, default_cutoff(abs(alpha_c)))
    channel = epr_channel(q, cutoff)
    displaced = _displaced_back(psi0, alpha_c, cutoff)
    # contract_mode conjugates the bra
    bra = FockState(np.conj(displaced))
    out = contract_mode(channel.state, 0, bra)
    return FockState(out.amps[:cutoff])


def teleport_fidelity(output: Union[FockState, ConditionalOutput], psi0: FockState, alpha_c: complex) -> float:
    """
    |<D(alpha)^dag psi0, output>|^2 / (norms squared), invariant under global phases.

    A ConditionalOutput rho gives <t|rho|t> / (|t|^2 Tr rho) with t = D(alpha)^dag psi0.
    """
    cutoff = max(output.cutoff, psi0.cutoff)
    target = FockState(_displaced_back(psi0, alpha_c, cutoff))
    if isinstance(output, ConditionalOutput):
        return output.fidelity(target)
    norm_product = target.norm() ** 2 * output.norm() ** 2
    if norm_product == 0:
        raise InvalidParameterError("Fidelity is undefined for zero-norm states.")
    return float(min(1.0, abs(inner(target, output)) ** 2 / norm_product))


def input_channel_state(psi0: FockState, q: float, total_cutoff: int) -> MultiModeState:
    """psi0 (x) channel on modes 0, 1, 2, truncated to total photon number total_cutoff."""
    _check_q(q)
    size = total_cutoff + 1
    channel_diag = float(q) ** np.arange(size)
    amps = np.zeros((size, size, size), dtype=complex)
    b = np.arange(size)
    amps[:, b, b] = np.outer(psi0.padded(size), channel_diag)
    return MultiModeState(amps)


def _rotated_input(psi0: FockState, q: float, three_mode_cutoff: int) -> np.ndarray:
    """U(pi/4) on modes 0 and 1 of psi0 (x) channel."""
    T = three_mode_cutoff
    return apply(beamsplitter(QUARTER_PI, T), input_channel_state(psi0, q, T), modes=(0, 1)).amps


def limit_bell_amplitudes(psi0: FockState, q: float, lo_mag: float, l: int, k: int,
                          three_mode_cutoff: int = DEFAULT_THREE_MODE_CUTOFF) -> FockState:
    """Mode-2 amplitudes after contracting modes 0 and 1 with (2 pi)^{-1/4} |0; l/|lo|> and |pi/2; k/|lo|>."""
    _check_q(q)
    if lo_mag <= 0:
        raise InvalidParameterError("Local oscillator magnitude must be positive, got {}.".format(lo_mag))
    T = three_mode_cutoff
    chi = _rotated_input(psi0, q, T)
    scale = (2 * math.pi) ** -0.25
    f_l = scale * quad_eigenvectors(0.0, l / lo_mag, T + 1)[0]
    f_k = scale * quad_eigenvectors(math.pi / 2, k / lo_mag, T + 1)[0]
    return FockState(np.einsum("a,b,abc->c", np.conj(f_l), np.conj(f_k), chi))


def homodyne_bell_measure(psi0: FockState, q: float, lo_mag: float, l: int, k: int,
                          three_mode_cutoff: int = DEFAULT_THREE_MODE_CUTOFF,
                          lo_total_cutoff: Optional[int] = None,
                          kernels: str = "conditional") -> ConditionalOutput:
    """
    Bell measurement by two homodyne detectors.

    Modes 0 and 1 pass a 50:50 beamsplitter, then mode 0 is measured with a local oscillator |lo_mag> (outcome l)
    and mode 1 with |i lo_mag> (outcome k). The oscillators enter only through the single-mode kernels
    K = |lo| <lo|Pi^l|lo>, so the five-mode problem reduces exactly to Tr_01[(K_l (x) K_k (x) I) |chi><chi|].
    kernels="limit" uses the rank one quadrature limits (2 pi)^{-1/2} |theta; l/|lo|><theta; l/|lo|| instead,
    which give a pure output.
    """
    _check_q(q)
    if lo_mag <= 0:
        raise InvalidParameterError("Local oscillator magnitude must be positive, got {}.".format(lo_mag))
    T = three_mode_cutoff

    if kernels == "conditional":
        chi = _rotated_input(psi0, q, T)
        if lo_total_cutoff is None:
            lo_total_cutoff = kernel_total_cutoff(lo_mag, T + 1)
        k_l = conditional_kernel(l, lo_mag, T + 1, lo_total_cutoff).matrix
        k_k = conditional_kernel(k, 1j * lo_mag, T + 1, lo_total_cutoff).matrix
        weighted = np.einsum("xa,yb,abc->xyc", k_l, k_k, chi, optimize=True)
        output = ConditionalOutput(np.einsum("xyc,xyd->cd", weighted, np.conj(chi)))
    elif kernels == "limit":
        output = ConditionalOutput.pure(limit_bell_amplitudes(psi0, q, lo_mag, l, k, T).amps)
    else:
        raise InvalidParameterError("Unknown kernel kind {!r}.".format(kernels))

    logger.debug("Homodyne Bell measurement (l=%d, k=%d, |lo|=%.3g, %s kernels): mass %.6g",
                 l, k, lo_mag, kernels, output.mass())
    return output


def homodyne_teleport(psi0: FockState, q: float, lo_mag: float, l: int, k: int,
                      mode: LRoundingMode = LRoundingMode.ROUND, **kwargs) -> TeleportOutcome:
    """Runs the homodyne Bell measurement and records the correction displacement alpha = x_minus + i p_plus."""
    x_minus, p_plus = outcome_to_quadratures(l, k, lo_mag, mode)
    collapsed = homodyne_bell_measure(psi0, q, lo_mag, l, k, **kwargs)
    return TeleportOutcome(x_minus=x_minus, p_plus=p_plus, collapsed=collapsed,
                           correction_alpha=complex(x_minus, p_plus))
