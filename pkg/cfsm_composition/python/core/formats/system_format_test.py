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
"""Tests for system_format."""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import textwrap

from absl.testing import absltest
from absl.testing import parameterized

from cfsm_composition.python.core.automata import cfsm as cfsm_lib
from cfsm_composition.python.core.automata import labels
from cfsm_composition.python.core.formats import system_format
from cfsm_composition.python.core.gateway import composition
from cfsm_composition.python.core.internal import errors
from cfsm_composition.python.core.internal.testing import test_utils
from cfsm_composition.python.core.semantics import system as system_lib

ActionLabel = labels.ActionLabel

_GATEWAY_LEFT = """\
system gateway_left

machine A {
  init 0
  0 tau 1
  1 ! H m 2
}

machine B {
  init 0
  0 tau 1
  1 ! H n 2
}

machine H {
  init 0
  0 ? A m 1
  0 ? B n 1
}
"""


def _text(source):
  return textwrap.dedent(source).lstrip('\n')


class ParseSystemFileTest(parameterized.TestCase):

  def testGatewayLeft(self):
    system = test_utils.load_fixture('gateway_left')
    self.assertEqual('gateway_left', system.name)
    self.assertEqual(('A', 'B', 'H'), system.participants)
    self.assertEqual(
        ((ActionLabel.input('A', 'H', 'm'), '1'),
         (ActionLabel.input('B', 'H', 'n'), '1')),
        system['H'].successors('0'))

  @parameterized.parameters(*test_utils.ASYMMETRIC_FIXTURES)
  def testFixturesRoundTrip(self, fixture):
    system = test_utils.load_fixture(fixture)
    text = system_format.serialize_system(system)
    self.assertEqual(system, system_format.parse_system_file(text))
    self.assertEqual(
        text,
        system_format.serialize_system(system_format.parse_system_file(text)))

  def testCommentsAndQuotedStates(self):
    system = system_format.parse_system_file(_text("""
        # leading comment
        system s   # trailing comment

        machine A {
          init "start"
          "start" tau "0>1"   # quoted states
          "0>1" ! B m 2
        }

        machine B {
          init 0
          0 ? A m "tau"
        }
        """))
    self.assertEqual('start', system['A'].initial)
    self.assertIn('0>1', system['A'].states)
    self.assertIn('tau', system['B'].states)

  @parameterized.named_parameters(
      ('self_send', """
          system s
          machine A {
            init 0
            0 ! A m 1
          }
          """, 4, 3),
      ('duplicate_init', """
          system s
          machine A {
            init 0
            init 1
          }
          """, 4, 3),
      ('unexpected_character', """
          system s@
          """, 1, 9),
      ('keyword_state', """
          system s
          machine A {
            init machine
          }
          """, 3, 8),
      ('missing_brace', """
          system s
          machine A {
            init 0
          """, 4, 1),
      ('no_machines', """
          system s
          """, 2, 1),
      ('duplicate_machine', """
          system s
          machine A {
            init 0
          }
          machine A {
            init 0
          }
          """, 5, 1),
  )
  def testSyntaxErrors(self, source, line, column):
    with self.assertRaises(errors.ParseError) as cm:
      system_format.parse_system_file(_text(source))
    self.assertEqual((line, column), (cm.exception.line, cm.exception.column))

  def testInvalidMachineIsLocated(self):
    with self.assertRaises(errors.ParseError) as cm:
      system_format.parse_system_file(_text("""
          system s

          machine A {
            init 0
            0 ! B m 1
          }

          machine B {
            init 0
            0 ? A m 1
          }
          """))
    self.assertEqual((5, 3), (cm.exception.line, cm.exception.column))
    self.assertEqual([cfsm_lib.OUTPUT_WITHOUT_TAU_GUARD],
                     [v.kind for v in cm.exception.violations])

  def testEveryInvalidMachineIsLocated(self):
    with self.assertRaises(errors.ParseError) as cm:
      system_format.parse_system_file(_text("""
          system s

          machine A {
            init 0
            0 ! B m 1
          }

          machine B {
            init 0
            0 ! A x 1
          }
          """))
    self.assertEqual((5, 3), (cm.exception.line, cm.exception.column))
    self.assertEqual([cfsm_lib.OUTPUT_WITHOUT_TAU_GUARD] * 2,
                     [v.kind for v in cm.exception.violations])
    self.assertEqual([(5, 3), (10, 3)], cm.exception.locations)
    self.assertIn('machines A, B', str(cm.exception))
    self.assertIn('\n  10:3: ', str(cm.exception))

  def testDanglingParticipantIsLocated(self):
    with self.assertRaises(errors.ParseError) as cm:
      system_format.parse_system_file(_text("""
          system s
          machine A {
            init 0
            0 ? Z m 1
          }
          """))
    self.assertEqual((4, 3), (cm.exception.line, cm.exception.column))
    self.assertEqual([system_lib.DANGLING_PARTICIPANT],
                     [v.kind for v in cm.exception.violations])
    self.assertIn('not closed', str(cm.exception))

  def testParseErrorIsAValueError(self):
    with self.assertRaises(ValueError):
      system_format.parse_system_file('machine')


class SerializeSystemTest(parameterized.TestCase):

  def testCanonicalForm(self):
    system = test_utils.load_fixture('gateway_left')
    self.assertEqual(_GATEWAY_LEFT, system_format.serialize_system(system))

  def testHeader(self):
    system = test_utils.load_fixture('gateway_left')
    text = system_format.serialize_system(system, header=['composed', ''])
    self.assertTrue(text.startswith('# composed\n#\nsystem gateway_left\n'))
    self.assertEqual(system, system_format.parse_system_file(text))

  def testComposedSystemRoundTrips(self):
    cs = composition.compose_systems(
        test_utils.load_fixture('gateway_left'), 'H',
        test_utils.load_fixture('ex_sem'), 'K')
    text = system_format.serialize_system(
        cs.system, header=composition.provenance_header(cs))
    self.assertIn('  "0>1" tau 1\n', text)
    self.assertIn('# K 0>1: peer-input-prefix of 0 --tau--> 1\n', text)
    self.assertEqual(cs.system, system_format.parse_system_file(text))

  @parameterized.named_parameters(
      ('plain', '12', '12'),
      ('primed', "0'", "0'"),
      ('generated', '0>1', '"0>1"'),
      ('normalized', '0#out0', '"0#out0"'),
      ('keyword', 'init', '"init"'),
  )
  def testFormatState(self, state, expected):
    self.assertEqual(expected, system_format.format_state(state))

  def testUnwritableState(self):
    with self.assertRaises(ValueError):
      system_format.format_state('a"b')


class ParseSymmetricSystemFileTest(absltest.TestCase):

  def testOutputsAreGuarded(self):
    system = system_format.parse_symmetric_system_file(
        test_utils.fixture_text('symmetric_right'))
    self.assertEqual(('0', '0#out0', '0#out1', '1'), system['K'].states)
    self.assertEqual(((ActionLabel.tau(), '0#out0'),
                      (ActionLabel.tau(), '0#out1')),
                     system['K'].successors('0'))
    self.assertEqual(('0', '1'), system['B'].states)

  def testAsymmetricFixturesAreUnchanged(self):
    for fixture in ('gateway_left', 'ex_sem'):
      self.assertEqual(
          test_utils.load_fixture(fixture),
          system_format.parse_symmetric_system_file(
              test_utils.fixture_text(fixture)))

  def testStrictParserRejectsSymmetricFixtures(self):
    with self.assertRaises(errors.ParseError):
      test_utils.load_fixture('symmetric_left')


if __name__ == '__main__':
  absltest.main()
