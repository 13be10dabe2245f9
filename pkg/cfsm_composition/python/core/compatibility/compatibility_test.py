# Copyright 2021 The CFSM Composition Authors. All Rights Reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
# ==============================================================================
"""Tests for compatibility."""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import itertools

from absl.testing import absltest
from absl.testing import parameterized

from cfsm_composition.python.core.compatibility import compatibility
from cfsm_composition.python.core.internal.testing import test_utils

IoLabel = compatibility.IoLabel


def _machine(fixture, participant):
  return test_utils.load_fixture(fixture)[participant]


class IoProjectionTest(absltest.TestCase):

  def testSender(self):
    io = compatibility.io_projection(_machine('gateway_left', 'A'))
    self.assertEqual(('0', '1', '2'), io.states)
    self.assertEqual('0', io.initial)
    self.assertEqual(
        (('0', IoLabel.tau(), '1'), ('1', IoLabel.output('m'), '2')),
        tuple(tuple(t) for t in io.transitions))

  def testReceiverErasesSenders(self):
    io = compatibility.io_projection(_machine('gateway_left', 'H'))
    self.assertEqual(((IoLabel.input('m'), '1'), (IoLabel.input('n'), '1')),
                     io.successors('0'))

  def testTauOnly(self):
    m = test_utils.make_cfsm('K', ['0 tau 1', '1 ! C m 2'])
    io = compatibility.io_projection(m)
    self.assertEqual(((IoLabel.tau(), '1'),), io.successors('0'))

  def testRendering(self):
    self.assertEqual('!m', str(IoLabel.output('m')))
    self.assertEqual('?m', str(IoLabel.input('m')))
    self.assertEqual('tau', str(IoLabel.tau()))


class DualLabelTest(parameterized.TestCase):

  @parameterized.named_parameters(
      ('output', IoLabel.output('m'), IoLabel.input('m')),
      ('input', IoLabel.input('x'), IoLabel.output('x')),
      ('tau', IoLabel.tau(), IoLabel.tau()),
  )
  def testDual(self, label, expected):
    self.assertEqual(expected, compatibility.dual_label(label))

  def testInvolution(self):
    label = IoLabel.input('x')
    self.assertEqual(
        label, compatibility.dual_label(compatibility.dual_label(label)))


class GreatestIoCorrespondenceTest(parameterized.TestCase):

  def setUp(self):
    super(GreatestIoCorrespondenceTest, self).setUp()
    self.h = _machine('gateway_left', 'H')
    self.k = _machine('ex_sem', 'K')

  def testHubAndChooser(self):
    correspondence = compatibility.greatest_io_correspondence(self.h, self.k)
    self.assertEqual(
        [('0', '0'), ('0', '1'), ('0', '2'), ('1', '3')], list(correspondence))

  def testMaximality(self):
    greatest = compatibility.greatest_io_correspondence(self.h, self.k)
    pairs = list(itertools.product(self.h.states, self.k.states))
    union = set()
    for n in range(len(pairs) + 1):
      for subset in itertools.combinations(pairs, n):
        if compatibility.is_io_correspondence(self.h, self.k, subset):
          union.update(subset)
    self.assertEqual(greatest.pairs, frozenset(union))

  def testDeletedPairsCannotBeAddedBack(self):
    greatest = compatibility.greatest_io_correspondence(self.h, self.k)
    for pair in itertools.product(self.h.states, self.k.states):
      if pair in greatest:
        continue
      self.assertFalse(
          compatibility.is_io_correspondence(
              self.h, self.k, set(greatest.pairs) | {pair}), pair)

  @parameterized.named_parameters(
      ('ex_gc', 'gateway_left', 'H', 'ex_sem', 'K'),
      ('twelve_six', 'nondeterministic_left', 'H', 'nondeterministic_right',
       'K'),
      ('incompatible', 'incompatible_left', 'H', 'incompatible_right', 'K'),
      ('mixed', 'mixed_left', 'H', 'mixed_right', 'K'),
      ('lock', 'lock_left', 'H', 'lock_right', 'K'),
  )
  def testCertificateIsSound(self, f1, p1, f2, p2):
    m1, m2 = _machine(f1, p1), _machine(f2, p2)
    correspondence = compatibility.greatest_io_correspondence(m1, m2)
    self.assertEqual(
        [], compatibility.io_correspondence_violations(m1, m2, correspondence))


class CheckCompatibilityTest(parameterized.TestCase):

  @parameterized.named_parameters(
      ('ex_gc', 'gateway_left', 'H', 'ex_sem', 'K', True),
      ('twelve_six', 'nondeterministic_left', 'H', 'nondeterministic_right',
       'K', True),
      ('incompatible', 'incompatible_left', 'H', 'incompatible_right', 'K',
       False),
      ('lock', 'lock_left', 'H', 'lock_right', 'K', True),
  )
  def testVerdict(self, f1, p1, f2, p2, expected):
    m1, m2 = _machine(f1, p1), _machine(f2, p2)
    result = compatibility.check_compatibility(m1, m2)
    self.assertEqual(expected, result.compatible)
    self.assertEqual(expected,
                     (m1.initial, m2.initial) in result.correspondence)

  @parameterized.named_parameters(
      ('ex_gc', 'gateway_left', 'H', 'ex_sem', 'K'),
      ('twelve_six', 'nondeterministic_left', 'H', 'nondeterministic_right',
       'K'),
      ('incompatible', 'incompatible_left', 'H', 'incompatible_right', 'K'),
      ('mixed', 'mixed_left', 'H', 'mixed_right', 'K'),
  )
  def testSymmetry(self, f1, p1, f2, p2):
    m1, m2 = _machine(f1, p1), _machine(f2, p2)
    forward = compatibility.check_compatibility(m1, m2)
    backward = compatibility.check_compatibility(m2, m1)
    self.assertEqual(forward.compatible, backward.compatible)
    self.assertEqual(
        set((q2, q) for q, q2 in forward.correspondence),
        set(backward.correspondence.pairs))

  def testSenderAgainstItself(self):
    m = test_utils.make_cfsm('A', ['0 tau 1', '1 ! B m 2'])
    self.assertFalse(compatibility.check_compatibility(m, m).compatible)

  def testTerminalMachines(self):
    m1 = test_utils.make_cfsm('A', [])
    m2 = test_utils.make_cfsm('B', [])
    result = compatibility.check_compatibility(m1, m2)
    self.assertTrue(result.compatible)
    self.assertEqual([('0', '0')], list(result.correspondence))

  def testUnmatchedInputIsAllowed(self):
    h = _machine('nondeterministic_left', 'H')
    k = _machine('nondeterministic_right', 'K')
    result = compatibility.check_compatibility(h, k)
    self.assertTrue(result.compatible)
    self.assertEqual(
        (compatibility.BorderlinePair('0', '0', ('z',)),),
        compatibility.borderline_pairs(h, k, result.correspondence))

  def testNoBorderlinePairsForExactChoice(self):
    h = _machine('gateway_left', 'H')
    k = _machine('ex_sem', 'K')
    result = compatibility.check_compatibility(h, k)
    self.assertEqual(
        (), compatibility.borderline_pairs(h, k, result.correspondence))


class IoCorrespondenceViolationsTest(absltest.TestCase):

  def testReportsEveryClause(self):
    h = _machine('incompatible_left', 'H')
    k = _machine('incompatible_right', 'K')
    violations = compatibility.io_correspondence_violations(
        h, k, [('0', '0'), ('2', '0')])
    self.assertIn((('0', '0'), compatibility.LEFT_TAU_CLAUSE), violations)
    self.assertIn((('2', '0'), compatibility.TERMINAL_CLAUSE), violations)

  def testOutputWithoutInput(self):
    h = _machine('incompatible_left', 'H')
    k = _machine('incompatible_right', 'K')
    self.assertEqual(
        [(('1', '0'), compatibility.LEFT_OUTPUT_CLAUSE)],
        compatibility.io_correspondence_violations(h, k, [('1', '0')]))

  def testEmptyRelationIsValid(self):
    h = _machine('incompatible_left', 'H')
    k = _machine('incompatible_right', 'K')
    self.assertTrue(compatibility.is_io_correspondence(h, k, []))


if __name__ == '__main__':
  absltest.main()
