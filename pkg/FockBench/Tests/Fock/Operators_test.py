#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
FockBench  Copyright (C) 2026  FockBench developers
This program is free software and comes with ABSOLUTELY NO WARRANTY; for details see LICENSE file.
"""

import math
import unittest

import numpy as np
from numpy.testing import assert_allclose, assert_array_equal
from parameterized import parameterized

from FockBench.Fock.Errors import InvalidParameterError, ShapeError
from FockBench.Fock.Operators import (BlockOperator, DenseOperator, apply, beamsplitter, beamsplitter_generator,
                                      delta_normalization, displacement, ladder, number_operator, quad_eigenstate,
                                      quadrature_completeness, quadrature_op)
from FockBench.Fock.States import MultiModeState, coherent_state, inner, number_state, tensor
from FockBench.Tests.Utils import random_fock_state


class LadderTest(unittest.TestCase):

    def test_smallest_cutoff(self):
        a, a_dag = ladder(2)
        assert_array_equal(a.entries, [[0, 1], [0, 0]])
        assert_array_equal(a_dag.entries, [[0, 0], [1, 0]])

    def test_lowering(self):
        a, _ = ladder(8)
        assert_allclose(apply(a, number_state(3, 8)).amps, math.sqrt(3) * number_state(2, 8).amps)

    def test_truncated_commutator(self):
        a, a_dag = ladder(8)
        commutator = a.entries @ a_dag.entries - a_dag.entries @ a.entries
        expected = np.eye(8)
        expected[7, 7] = -7
        assert_allclose(commutator, expected, atol=1e-13)

    def test_cutoff_too_small(self):
        with self.assertRaises(InvalidParameterError):
            ladder(1)

    def test_number_operator_on_coherent_state(self):
        s = coherent_state(1.0, 64)
        self.assertAlmostEqual(inner(s, apply(number_operator(64), s)).real, 1.0, places=10)


class QuadratureTest(unittest.TestCase):

    def test_theta_zero(self):
        assert_array_equal(quadrature_op(0.0, 2).entries, [[0, 1], [1, 0]])

    def test_hermitian(self):
        self.assertTrue(quadrature_op(0.7, 40).is_hermitian(tol=0.0))

    def test_eigenvalue_spread(self):
        largest = np.max(np.linalg.eigvalsh(quadrature_op(0.0, 100).entries))
        self.assertGreater(largest, math.sqrt(100))
        self.assertLess(largest, 2 * math.sqrt(100))

    def test_eigenstate_at_origin(self):
        amps = quad_eigenstate(0.0, 0.0, 8).state.amps
        self.assertAlmostEqual(amps[0], 1.0)
        self.assertAlmostEqual(amps[1], 0.0)
        self.assertAlmostEqual(amps[2], -1 / math.sqrt(2))

    def test_eigenstate_ratio(self):
        amps = quad_eigenstate(0.0, 1.0, 8).state.amps
        self.assertAlmostEqual(amps[1] / amps[0], 1.0)

    def test_eigenstate_phase(self):
        amps = quad_eigenstate(math.pi / 2, 1.0, 8).state.amps
        self.assertAlmostEqual(amps[1], 1j * math.exp(-0.25), places=15)

    @parameterized.expand([(0.0, -4.0), (0.3, 1.5), (math.pi / 2, 2.5), (2.0, 4.0)])
    def test_eigenstate_recurrence_residual(self, theta, r):
        cutoff = 40
        state = quad_eigenstate(theta, r, cutoff).state
        residual = quadrature_op(theta, cutoff).entries @ state.amps - r * state.amps
        self.assertLess(np.max(np.abs(residual[:cutoff - 2])), 1e-10)

    @parameterized.expand([(0.0,), (0.7,), (math.pi / 2,)])
    def test_quadrature_completeness(self, theta):
        assert_allclose(quadrature_completeness(theta, 8, block=8), np.eye(8), atol=1e-6)

    def test_delta_normalization(self):
        # truncated overlap at s = 0 integrates to sqrt(2) sum_k (-1)^k C(2k, k) / 4^k over the even levels
        expected = math.sqrt(2) * sum((-1) ** k * math.comb(2 * k, k) / 4 ** k for k in range(6))
        self.assertAlmostEqual(delta_normalization(0.0, 0.0, 12), expected, places=6)


class DisplacementTest(unittest.TestCase):

    def test_zero_is_identity(self):
        assert_array_equal(displacement(0, 6).entries, np.eye(6))

    def test_first_column_is_coherent_state(self):
        D = displacement(1.0, 64)
        assert_allclose(apply(D, number_state(0, 64)).amps, coherent_state(1.0, 64).amps, atol=1e-12)

    def test_complex_first_column(self):
        D = displacement(0.5 - 0.8j, 48)
        assert_allclose(D.entries[:, 0], coherent_state(0.5 - 0.8j, 48).amps, atol=1e-12)

    def test_inverse_on_low_block(self):
        product = displacement(1.0, 64) @ displacement(-1.0, 64)
        assert_allclose(product.block(8), np.eye(8), atol=1e-8)

    def test_unitary_on_low_block(self):
        D = displacement(0.7j, 64).entries
        assert_allclose((D.conj().T @ D)[:10, :10], np.eye(10), atol=1e-10)


class BeamsplitterTest(unittest.TestCase):

    def test_single_photon_block(self):
        theta = 0.4
        U = beamsplitter(theta, 3)
        assert_allclose(U.blocks[1], [[math.cos(theta), math.sin(theta)], [-math.sin(theta), math.cos(theta)]],
                        atol=1e-15)

    def test_balanced_splitting(self):
        s = tensor(number_state(1, 2), number_state(0, 2), 2)
        out = apply(beamsplitter(math.pi / 4, 2), s)
        self.assertAlmostEqual(out.amps[1, 0], 1 / math.sqrt(2), places=14)
        self.assertAlmostEqual(out.amps[0, 1], 1 / math.sqrt(2), places=14)

    def test_blocks_unitary(self):
        U = beamsplitter(0.9, 60)
        for block in U.blocks:
            assert_allclose(block.T @ block, np.eye(block.shape[0]), atol=1e-12)

    def test_group_law(self):
        product = beamsplitter(0.3, 12) @ beamsplitter(0.5, 12)
        self.assertLess(product.max_deviation(beamsplitter(0.8, 12)), 1e-10)

    def test_applied_twice(self):
        s = tensor(random_fock_state(5, seed=11), random_fock_state(5, seed=12), 8)
        twice = apply(beamsplitter(math.pi / 4, 8), apply(beamsplitter(math.pi / 4, 8), s))
        once = apply(beamsplitter(math.pi / 2, 8), s)
        assert_allclose(twice.amps, once.amps, atol=1e-10)

    @parameterized.expand([(0.3, 8), (1.2, 10), (math.pi / 4, 12)])
    def test_binomial_agrees_with_spectral(self, theta, total_cutoff):
        spectral = beamsplitter(theta, total_cutoff)
        binomial = beamsplitter(theta, total_cutoff, method="binomial")
        self.assertLess(spectral.max_deviation(binomial), 1e-12)

    def test_generator(self):
        eps = 1e-7
        difference = (beamsplitter(eps, 6) - BlockOperator.identity(6)).scaled(1 / eps)
        self.assertLess(difference.max_deviation(beamsplitter_generator(6)), 1e-5)

    def test_unknown_method(self):
        with self.assertRaises(InvalidParameterError):
            beamsplitter(0.1, 2, method="expm")

    def test_acts_on_selected_modes_of_three_mode_state(self):
        amps = np.zeros((4, 4, 4), dtype=complex)
        amps[0, 2, 1] = 1.0
        out = apply(beamsplitter(math.pi / 2, 3), MultiModeState(amps), modes=(0, 2))
        # U(pi/2) maps |0, 1> of the pair to -|1, 0>
        self.assertAlmostEqual(out.amps[1, 2, 0], -1.0, places=14)
        self.assertAlmostEqual(out.norm(), 1.0, places=14)


class OperatorShapeTest(unittest.TestCase):

    def test_dense_identity(self):
        s = random_fock_state(5, seed=5)
        assert_array_equal(apply(DenseOperator.identity(5), s).amps, s.amps)

    def test_block_identity(self):
        s = tensor(random_fock_state(4, seed=6), random_fock_state(4, seed=8), 6)
        assert_array_equal(apply(BlockOperator.identity(6), s).amps, s.amps)

    def test_dimension_mismatch(self):
        with self.assertRaises(ShapeError):
            apply(DenseOperator.identity(4), number_state(0, 5))
        with self.assertRaises(ShapeError):
            apply(BlockOperator.identity(3), MultiModeState.zeros(2, 4))
        with self.assertRaises(ShapeError):
            apply(DenseOperator.identity(4), MultiModeState.zeros(2, 3))

    def test_block_shapes_are_validated(self):
        with self.assertRaises(ShapeError):
            BlockOperator((np.eye(1), np.eye(3)))
        with self.assertRaises(ShapeError):
            DenseOperator(np.zeros((2, 3)))

    def test_to_dense_matches_blockwise_application(self):
        U = beamsplitter(0.6, 5)
        s = tensor(random_fock_state(4, seed=9), random_fock_state(4, seed=10), 5)
        dense = U.to_dense() @ s.amps.ravel()
        assert_allclose(dense.reshape(6, 6), apply(U, s).amps, atol=1e-14)
