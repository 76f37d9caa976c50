#!/usr/bin/env python3
"""
Unit tests for BaseReceiver class
"""

import sys
import unittest
from pathlib import Path

import numpy as np

# Add project root to Python path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from core.receivers.base_receiver import BaseReceiver, RoundResult
from core.txchain import SystemConfig, TransmitChain

SMALL = SystemConfig(n_tx=2, n_rx=2, spreading_factor=4, n_codes=4, max_rounds=2, n_taps=3,
                     cp_length=3, symbols_per_antenna=32, n_iterations=2)


class TestBaseReceiver(unittest.TestCase):
    """Test cases for BaseReceiver abstract class"""

    def setUp(self):
        """Set up test fixtures"""
        # Create a concrete implementation for testing
        class TestReceiver(BaseReceiver):
            kind = 'test'

            def reset_state(self):
                self.resets = getattr(self, 'resets', 0) + 1

            def process_round(self, observation):
                return None

            def state_size_reals(self):
                return 0

        self.receiver = TestReceiver(SMALL)
        self.frame = TransmitChain(SMALL).random_frame(np.random.default_rng(1))

    def test_initialization(self):
        """Test receiver initialization"""
        self.assertIsNone(self.receiver.frame)
        self.assertEqual(self.receiver.round_log, [])
        self.assertEqual(self.receiver.resets, 1)
        self.assertEqual(self.receiver.decoder.n_info, SMALL.info_bits)
        self.assertEqual(self.receiver.meter.additions, 0)

    def test_start_frame_resets_state(self):
        self.receiver.log_round(RoundResult(1, self.frame.info_bits, False, 2, np.zeros((2, 32, 2))))
        self.receiver.start_frame(self.frame)
        self.assertIs(self.receiver.frame, self.frame)
        self.assertEqual(self.receiver.round_log, [])
        self.assertEqual(self.receiver.resets, 2)

    def test_log_round(self):
        """Test round logging functionality"""
        self.receiver.log_round(RoundResult(2, self.frame.info_bits, True, 1, np.zeros((2, 32, 2))))
        self.assertEqual(len(self.receiver.round_log), 1)
        entry = self.receiver.round_log[0]
        self.assertEqual(entry['round'], 2)
        self.assertTrue(entry['success'])
        self.assertEqual(entry['iterations'], 1)

    def test_is_correct(self):
        self.assertFalse(self.receiver.is_correct(self.frame.info_bits))
        self.receiver.start_frame(self.frame)
        self.assertTrue(self.receiver.is_correct(self.frame.info_bits.copy()))
        flipped = self.frame.info_bits.copy()
        flipped[0] ^= 1
        self.assertFalse(self.receiver.is_correct(flipped))

    def test_decode_saturated_llrs(self):
        """Interleaved coded bits as +-LLRs decode back to the info bits"""
        llrs = 10.0 * (1.0 - 2.0 * self.frame.coded.bits.astype(float))
        decoded = self.receiver.decode_llrs(llrs)
        np.testing.assert_array_equal(decoded.info_bits, self.frame.info_bits)

    def test_to_apriori_layout(self):
        """Decoder-order LLRs come back in the transmitted (N_T, T_s, M) layout"""
        codeword_llrs = 1.0 - 2.0 * self.frame.coded.codeword.astype(float)
        apriori = self.receiver.to_apriori(codeword_llrs)
        self.assertEqual(apriori.shape, (2, 32, 2))
        np.testing.assert_array_equal(apriori < 0, self.frame.coded.bits.astype(bool))

    def test_string_representation(self):
        self.assertEqual(str(self.receiver), "TestReceiver(kind=test)")
        self.assertIn("K=2", repr(self.receiver))
        self.assertIn("rounds_logged=0", repr(self.receiver))

    def test_abstract_class_cannot_be_instantiated(self):
        with self.assertRaises(TypeError):
            BaseReceiver(SMALL)


if __name__ == '__main__':
    unittest.main()
