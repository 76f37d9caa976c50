#!/usr/bin/env python3
"""
Unit tests for the transmit chain: configuration, coding, mapping and spreading
"""

import sys
import unittest
from pathlib import Path

import numpy as np

# Add project root to Python path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from core.errors import BadLength, BadSpreadingFactor, ConfigError, ShapeMismatch, UnsupportedModulation
from core.txchain import (
    Interleaver,
    SystemConfig,
    TransmitChain,
    add_cyclic_prefix,
    convolutional_encode,
    despread,
    map_bits,
    qpsk_constellation,
    spread,
    walsh_matrix,
)
from core.txchain.modulation import SymbolBlock, map_symbols
from core.txchain.coding import CodedFrame

SMALL = SystemConfig(n_tx=2, n_rx=2, spreading_factor=4, n_codes=2, max_rounds=2, n_taps=3,
                     cp_length=3, symbols_per_antenna=16, n_iterations=1)


class TestSystemConfig(unittest.TestCase):
    """Test cases for SystemConfig"""

    def test_defaults(self):
        """Default scenario: T_c = 256, 1024 coded bits, R = 32"""
        cfg = SystemConfig().validate()
        self.assertEqual(cfg.chips_per_block, 256)
        self.assertEqual(cfg.coded_bits, 1024)
        self.assertEqual(cfg.info_bits, 508)
        self.assertAlmostEqual(cfg.symbol_energy, 1.0)
        self.assertAlmostEqual(cfg.rate, 32.0)

    def test_rate_follows_load(self):
        """R = rho M N_T C: 8 and 16 for quarter and half load"""
        self.assertAlmostEqual(SystemConfig(n_codes=4).rate, 8.0)
        self.assertAlmostEqual(SystemConfig(n_codes=8).rate, 16.0)
        self.assertAlmostEqual(SystemConfig(n_codes=4).symbol_energy, 4.0)
        self.assertAlmostEqual(SystemConfig(n_codes=4).load_factor, 0.25)
        self.assertAlmostEqual(SystemConfig(n_codes=8).load_factor, 0.5)

    def test_too_many_codes(self):
        """C = 17 > N = 16 is rejected"""
        with self.assertRaises(ConfigError) as context:
            SystemConfig(n_codes=17, symbols_per_antenna=272).validate()
        self.assertEqual(context.exception.key_path, 'n_codes')
        self.assertIn("C <= N violated", str(context.exception))

    def test_cp_shorter_than_channel(self):
        """T_CP = 5 with L = 10 is rejected"""
        with self.assertRaises(ConfigError) as context:
            SystemConfig(cp_length=5).validate()
        self.assertEqual(context.exception.key_path, 'cp_length')
        self.assertIn("CP shorter than channel", str(context.exception))

    def test_spreading_factor_power_of_two(self):
        with self.assertRaises(ConfigError):
            SystemConfig(spreading_factor=12, n_codes=12, symbols_per_antenna=252).validate()

    def test_with_overrides_validates(self):
        with self.assertRaises(ConfigError):
            SystemConfig().with_overrides(receiver='unknown')

    def test_to_dict_uses_octal_generators(self):
        self.assertEqual(SystemConfig().to_dict()['generators'], ['35', '23'])


class TestCoding(unittest.TestCase):
    """Test cases for the convolutional encoder and interleaver"""

    def test_impulse_response(self):
        """A single 1 produces 11 10 10 01 11 then zeros"""
        cfg = SMALL
        info = np.zeros(cfg.info_bits, dtype=np.uint8)
        info[0] = 1
        codeword = convolutional_encode(info, cfg)
        np.testing.assert_array_equal(codeword[:12], [1, 1, 1, 0, 1, 0, 0, 1, 1, 1, 0, 0])
        self.assertEqual(int(codeword[12:].sum()), 0)

    def test_all_zero_frame(self):
        cfg = SMALL
        codeword = convolutional_encode(np.zeros(cfg.info_bits, dtype=np.uint8), cfg)
        self.assertEqual(codeword.shape, (cfg.coded_bits,))
        self.assertEqual(int(codeword.sum()), 0)

    def test_wrong_length(self):
        with self.assertRaises(BadLength):
            convolutional_encode(np.zeros(SMALL.info_bits + 1, dtype=np.uint8), SMALL)

    def test_interleaver_inverse(self):
        """deinterleave undoes interleave and the permutation is seed-determined"""
        a = Interleaver(64, 3)
        b = Interleaver(64, 3)
        values = np.arange(64)
        np.testing.assert_array_equal(a.permutation, b.permutation)
        np.testing.assert_array_equal(a.deinterleave(a.interleave(values)), values)
        self.assertFalse(np.array_equal(a.interleave(values), values))

    def test_interleaver_length(self):
        with self.assertRaises(BadLength):
            Interleaver(8, 0).interleave(np.zeros(7))

    def test_substream_split_is_contiguous(self):
        """b[t, j, m] = b[(t T_s + j) M + m]"""
        cfg = SMALL
        rng = np.random.default_rng(2)
        frame = TransmitChain(cfg).random_frame(rng)
        interleaved = Interleaver.for_config(cfg).interleave(frame.coded.codeword)
        np.testing.assert_array_equal(frame.coded.bits.reshape(-1), interleaved)
        self.assertEqual(frame.coded.bits.shape, (cfg.n_tx, cfg.symbols_per_antenna, 2))


class TestModulationAndSpreading(unittest.TestCase):
    """Test cases for QPSK mapping and Walsh spreading"""

    def test_gray_mapping(self):
        """(b1, b2) -> sqrt(E_s/2)((1-2b1) + j(1-2b2))"""
        points = map_bits(np.array([[0, 0], [0, 1], [1, 0], [1, 1]]), 2.0)
        np.testing.assert_allclose(points, [1 + 1j, 1 - 1j, -1 + 1j, -1 - 1j])
        constellation = qpsk_constellation(2.0)
        np.testing.assert_allclose(constellation.points, points)
        self.assertEqual(constellation.label(3, 0), 1)

    def test_symbol_energy(self):
        cfg = SMALL
        frame = TransmitChain(cfg).random_frame(np.random.default_rng(4))
        np.testing.assert_allclose(np.abs(frame.symbols.symbols) ** 2, cfg.symbol_energy)

    def test_only_qpsk(self):
        cfg = SystemConfig(bits_per_symbol=4)
        coded = CodedFrame(substreams=np.zeros((2, 1024), dtype=np.uint8), permutation=np.arange(2048),
                           codeword=np.zeros(2048, dtype=np.uint8), bits_per_symbol=4)
        with self.assertRaises(UnsupportedModulation):
            map_symbols(coded, cfg)

    def test_walsh_orthonormal(self):
        W = walsh_matrix(16, 16).W
        np.testing.assert_allclose(W.T @ W, np.eye(16), atol=1e-12)
        np.testing.assert_allclose(np.abs(W), 0.25)

    def test_walsh_rejects_bad_sizes(self):
        with self.assertRaises(BadSpreadingFactor):
            walsh_matrix(12, 4)
        with self.assertRaises(BadSpreadingFactor):
            walsh_matrix(8, 9)

    def test_spread_despread_roundtrip(self):
        """Despreading recovers every symbol at partial load"""
        rng = np.random.default_rng(9)
        walsh = walsh_matrix(8, 3)
        symbols = rng.standard_normal((2, 12)) + 1j * rng.standard_normal((2, 12))
        chips = spread(symbols, walsh)
        self.assertEqual(chips.shape, (2, 32))
        np.testing.assert_allclose(despread(chips, walsh), symbols, atol=1e-12)

    def test_unit_chip_energy(self):
        """E_s = N / C gives unit average chip energy"""
        cfg = SystemConfig(n_codes=4)
        frame = TransmitChain(cfg).random_frame(np.random.default_rng(1))
        self.assertAlmostEqual(float(np.mean(np.abs(frame.chips.chips) ** 2)), 1.0, delta=0.05)

    def test_cyclic_prefix(self):
        chips = np.arange(10).reshape(1, 10)
        np.testing.assert_array_equal(add_cyclic_prefix(chips, 3)[0], [7, 8, 9] + list(range(10)))

    def test_spread_shape_check(self):
        with self.assertRaises(ShapeMismatch):
            spread(np.zeros((2, 5)), walsh_matrix(4, 2))

    def test_chip_frame_shapes(self):
        cfg = SMALL
        frame = TransmitChain(cfg).random_frame(np.random.default_rng(0))
        self.assertEqual(frame.chips.chips.shape, (cfg.n_tx, cfg.chips_per_block))
        self.assertEqual(frame.chips.with_prefix.shape, (cfg.n_tx, cfg.chips_per_block + cfg.cp_length))
        self.assertIsInstance(frame.symbols, SymbolBlock)


if __name__ == '__main__':
    unittest.main()
