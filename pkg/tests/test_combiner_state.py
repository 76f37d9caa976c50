#!/usr/bin/env python3
"""
Unit tests for the round-accumulated combiner states and their accounting
"""

import sys
import unittest
from pathlib import Path

import numpy as np
import scipy.linalg

# Add project root to Python path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from core.channel import ChannelFrequencyResponse
from core.combiner import (
    ChipCombinerState,
    ComplexityMeter,
    DespreadOutput,
    SymbolCombinerState,
    chip_level_budget,
    chip_update,
    combining_budget,
    compute_filters,
    demap_chip_level,
    memory_comparison,
    mmse_estimate,
    symbol_level_budget,
    symbol_update_and_demap,
)
from core.errors import RoundOrderViolation, ShapeMismatch
from core.txchain import SystemConfig, qpsk_constellation


def random_complex(rng, shape):
    return rng.standard_normal(shape) + 1j * rng.standard_normal(shape)


def random_response(rng, n_chips, n_taps, n_rx, n_tx, round_index):
    taps = random_complex(rng, (n_taps, n_rx, n_tx)) / np.sqrt(2.0 * n_taps)
    return ChannelFrequencyResponse(bins=np.fft.fft(taps, n=n_chips, axis=0), round_index=round_index)


def stacked_estimate(responses, observations, xi, sigma2, x_prior_f):
    """
    Whole-block stacked-round filter built from full matrices

    Lambda = [blkdiag(Lambda_1,i); ...; blkdiag(Lambda_K,i)], Gamma = (I - D C^-1) / sigma^2,
    Omega = Gamma D - I kron Upsilon, z = Gamma Lambda^H y - Omega x~.
    """
    n_chips, n_tx = x_prior_f.shape
    stacked = np.vstack([scipy.linalg.block_diag(*response.bins) for response in responses])
    y = np.concatenate([y_f.reshape(-1) for y_f in observations])
    D = stacked.conj().T @ stacked
    C = sigma2 * np.kron(np.eye(n_chips), np.diag(1.0 / xi)) + D
    gamma = (np.eye(n_chips * n_tx) - D @ np.linalg.inv(C)) / sigma2
    product = gamma @ D
    blocks = product.reshape(n_chips, n_tx, n_chips, n_tx)
    upsilon = np.mean([blocks[i, :, i, :] for i in range(n_chips)], axis=0)
    omega = product - np.kron(np.eye(n_chips), upsilon)
    z = gamma @ (stacked.conj().T @ y) - omega @ x_prior_f.reshape(-1)
    return z.reshape(n_chips, n_tx)


class TestChipCombinerState(unittest.TestCase):
    """Test cases for chip-level accumulation"""

    def test_recursion_matches_stacked_rounds(self):
        """Accumulated y~ and D_i give the same z_f as the stacked K-round filter"""
        rng = np.random.default_rng(2024)
        n_chips, n_taps, n_tx, rounds = 32, 4, 2, 3
        worst = 0.0
        for instance in range(200):
            n_rx = 1 + instance % 2
            state = ChipCombinerState(n_chips, n_tx)
            responses, observations = [], []
            x_f = random_complex(rng, (n_chips, n_tx)) / np.sqrt(2.0)
            sigma2 = rng.uniform(0.05, 1.0)
            for k in range(1, rounds + 1):
                response = random_response(rng, n_chips, n_taps, n_rx, n_tx, k)
                y_f = (np.einsum('irt,it->ir', response.bins, x_f)
                       + np.sqrt(sigma2 / 2.0) * random_complex(rng, (n_chips, n_rx)))
                state = chip_update(state, y_f, response)
                responses.append(response)
                observations.append(y_f)
            xi = rng.uniform(0.1, 1.0, n_tx)
            x_prior_f = random_complex(rng, (n_chips, n_tx)) / 2.0
            recursive = mmse_estimate(compute_filters(state.gram, xi, sigma2), state.y_tilde, x_prior_f)
            literal = stacked_estimate(responses, observations, xi, sigma2, x_prior_f)
            worst = max(worst, np.linalg.norm(recursive - literal) / np.linalg.norm(literal))
        self.assertLess(worst, 1e-9)

    def test_gram_is_stacked_gram(self):
        """After two rounds D_i equals [Lambda_1; Lambda_2]^H [Lambda_1; Lambda_2]"""
        rng = np.random.default_rng(4)
        state = ChipCombinerState(16, 2)
        first = random_response(rng, 16, 3, 2, 2, 1)
        second = random_response(rng, 16, 3, 2, 2, 2)
        state.update(np.zeros((16, 2)), first).update(np.zeros((16, 2)), second)
        stacked = np.concatenate([first.bins, second.bins], axis=1)
        np.testing.assert_allclose(state.gram, np.einsum('ira,irb->iab', stacked.conj(), stacked), atol=1e-12)
        self.assertEqual(state.rounds, 2)

    def test_first_round_from_zero(self):
        rng = np.random.default_rng(6)
        response = random_response(rng, 8, 2, 1, 2, 1)
        y_f = random_complex(rng, (8, 1))
        state = ChipCombinerState(8, 2).update(y_f, response)
        np.testing.assert_allclose(state.y_tilde, np.einsum('irt,ir->it', response.bins.conj(), y_f))

    def test_round_out_of_order(self):
        rng = np.random.default_rng(7)
        state = ChipCombinerState(8, 2)
        with self.assertRaises(RoundOrderViolation):
            state.update(np.zeros((8, 2)), random_response(rng, 8, 2, 2, 2, 2))
        state.update(np.zeros((8, 2)), random_response(rng, 8, 2, 2, 2, 1))
        with self.assertRaises(RoundOrderViolation):
            state.update(np.zeros((8, 2)), random_response(rng, 8, 2, 2, 2, 1))

    def test_shape_mismatch(self):
        rng = np.random.default_rng(8)
        with self.assertRaises(ShapeMismatch):
            ChipCombinerState(8, 2).update(np.zeros((8, 3)), random_response(rng, 8, 2, 2, 2, 1))

    def test_size_independent_of_rounds(self):
        """2 T_c N_T (N_T + 1) reals after any number of rounds"""
        rng = np.random.default_rng(9)
        state = ChipCombinerState(32, 2)
        for k in range(1, 5):
            state.update(np.zeros((32, 2)), random_response(rng, 32, 4, 2, 2, k))
            self.assertEqual(state.size_reals, 2 * 32 * 2 * 3)


class TestSymbolCombinerState(unittest.TestCase):
    """Test cases for symbol-level accumulation"""

    def setUp(self):
        self.rng = np.random.default_rng(31)
        self.constellation = qpsk_constellation(2.0)

    def output(self, n_symbols=6, theta2=2.0):
        r = (self.rng.standard_normal((1, n_symbols)) + 1j * self.rng.standard_normal((1, n_symbols))) * 0.5
        return DespreadOutput(r=r, gain=np.ones(r.shape), theta2=np.full(r.shape, theta2))

    def test_first_round_equals_single_metric_demap(self):
        d = self.output()
        apriori = self.rng.standard_normal((1, 6, 2))
        state = SymbolCombinerState(1, 6, 4)
        _, extrinsic = symbol_update_and_demap(state, d, apriori, self.constellation, 1)
        np.testing.assert_array_equal(extrinsic, demap_chip_level(d, apriori, self.constellation))

    def test_identical_rounds_double_llrs(self):
        """Two rounds with the same despread output and no priors: LLRs double"""
        d = self.output()
        zeros = np.zeros((1, 6, 2))
        state = SymbolCombinerState(1, 6, 4)
        state, first = symbol_update_and_demap(state, d, zeros, self.constellation, 1)
        state.close_round()
        state, second = symbol_update_and_demap(state, d, zeros, self.constellation, 2)
        np.testing.assert_allclose(second, 2.0 * first, rtol=1e-9, atol=1e-12)

    def test_iterations_reuse_committed_metrics(self):
        """Repeated accumulate calls in one round replace the pending term"""
        state = SymbolCombinerState(1, 4, 4)
        first = -np.ones((1, 4, 4))
        state.accumulate(first, 1)
        np.testing.assert_array_equal(state.accumulate(2.0 * first, 1), 2.0 * first)
        state.close_round()
        np.testing.assert_array_equal(state.committed, 2.0 * first)
        np.testing.assert_array_equal(state.accumulate(first, 2), 3.0 * first)

    def test_round_out_of_order(self):
        state = SymbolCombinerState(1, 4, 4)
        with self.assertRaises(RoundOrderViolation):
            state.accumulate(np.zeros((1, 4, 4)), 2)

    def test_close_without_metrics(self):
        with self.assertRaises(RoundOrderViolation):
            SymbolCombinerState(1, 4, 4).close_round()

    def test_close_twice(self):
        state = SymbolCombinerState(1, 4, 4)
        state.accumulate(np.zeros((1, 4, 4)), 1)
        state.close_round()
        with self.assertRaises(RoundOrderViolation):
            state.close_round()

    def test_size(self):
        self.assertEqual(SymbolCombinerState(2, 64, 4).size_reals, 2 * 64 * 4)


class TestComplexityAccounting(unittest.TestCase):
    """Counters and memory laws of both schemes"""

    COMBOS = [(2, 3), (1, 2), (3, 4)]

    def config(self, n_tx, max_rounds):
        return SystemConfig(n_tx=n_tx, n_rx=2, spreading_factor=8, n_codes=8, max_rounds=max_rounds, n_taps=4,
                            cp_length=4, symbols_per_antenna=32, n_iterations=2).validate()

    def test_chip_counter_matches_budget(self):
        """2 T_c N_T (K - 1)(N_T + 1) additions over K rounds"""
        rng = np.random.default_rng(13)
        for n_tx, rounds in self.COMBOS:
            cfg = self.config(n_tx, rounds)
            meter = ComplexityMeter()
            state = ChipCombinerState(cfg.chips_per_block, n_tx, meter)
            for k in range(1, rounds + 1):
                state.update(np.zeros((cfg.chips_per_block, 2)),
                             random_response(rng, cfg.chips_per_block, 4, 2, n_tx, k))
            expected = 2 * cfg.chips_per_block * n_tx * (rounds - 1) * (n_tx + 1)
            self.assertEqual(meter.additions, expected, f"N_T={n_tx}, K={rounds}")
            self.assertEqual(chip_level_budget(cfg)['additions'], expected)
            self.assertEqual(state.size_reals, chip_level_budget(cfg)['memory_reals'])
            self.assertNotIn(1, meter.by_round)

    def test_symbol_counter_matches_budget(self):
        """T_s N_T (K - 1) N_iter 2^M additions over K rounds"""
        for n_tx, rounds in self.COMBOS:
            cfg = self.config(n_tx, rounds)
            meter = ComplexityMeter()
            state = SymbolCombinerState(n_tx, cfg.symbols_per_antenna, 4, meter)
            for k in range(1, rounds + 1):
                for _ in range(cfg.n_iterations):
                    state.accumulate(np.zeros((n_tx, cfg.symbols_per_antenna, 4)), k)
                state.close_round()
            expected = cfg.symbols_per_antenna * n_tx * (rounds - 1) * cfg.n_iterations * 4
            self.assertEqual(meter.additions, expected, f"N_T={n_tx}, K={rounds}")
            self.assertEqual(symbol_level_budget(cfg)['additions'], expected)
            self.assertEqual(state.size_reals, symbol_level_budget(cfg)['memory_reals'])

    def test_full_scale_chip_count(self):
        """T_c = 2048, N_T = 2, K = 3: 49152 additions"""
        cfg = SystemConfig(symbols_per_antenna=2048).validate()
        self.assertEqual(cfg.chips_per_block, 2048)
        self.assertEqual(chip_level_budget(cfg)['additions'], 49152)

    def test_higher_order_budget(self):
        """Closed-form budgets for N_T = 4, K = 3, M = 4"""
        cfg = SystemConfig(n_tx=4, bits_per_symbol=4)
        self.assertEqual(symbol_level_budget(cfg)['memory_reals'], 256 * 4 * 16)
        self.assertEqual(symbol_level_budget(cfg)['additions'], 256 * 4 * 2 * 3 * 16)
        self.assertEqual(chip_level_budget(cfg)['memory_reals'], 2 * 256 * 4 * 5)

    def test_memory_comparison(self):
        """Full load 2x2 QPSK: symbol-level state is 4/6 of the chip-level state"""
        rows = memory_comparison(SystemConfig())
        self.assertEqual([row['scheme'] for row in rows], ['chip', 'symbol'])
        self.assertEqual(rows[0]['memory_reals'], 2 * 256 * 2 * 3)
        self.assertEqual(rows[1]['memory_reals'], 256 * 2 * 4)
        self.assertAlmostEqual(rows[1]['ratio'], 4.0 / 6.0)

    def test_genie_bound_has_no_cost(self):
        self.assertEqual(combining_budget(SystemConfig(), 'mfb'), {'additions': 0, 'memory_reals': 0})

    def test_meter_reset(self):
        meter = ComplexityMeter()
        meter.add(10, 2)
        meter.add(5, 2)
        self.assertEqual(meter.by_round, {2: 15})
        meter.reset()
        self.assertEqual(meter.additions, 0)
        self.assertEqual(meter.by_round, {})


if __name__ == '__main__':
    unittest.main()
