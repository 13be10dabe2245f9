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
"""Tests for system."""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

from absl.testing import absltest
from absl.testing import parameterized

from cfsm_composition.python.core.internal import errors
from cfsm_composition.python.core.internal.testing import test_utils
from cfsm_composition.python.core.semantics import system as system_lib


class ValidateSystemTest(parameterized.TestCase):

  def _machines(self):
    return {
        'K': test_utils.make_cfsm(
            'K', ['0 tau 1', '0 tau 2', '1 ! C m 3', '2 ! D n 3']),
        'C': test_utils.make_cfsm('C', ['0 ? K m 1']),
        'D': test_utils.make_cfsm('D', ['0 ? K n 1']),
    }

  def testClosedSystemIsValid(self):
    system = system_lib.validate_system(self._machines(), name='S')
    self.assertEqual(('C', 'D', 'K'), system.participants)
    self.assertLen(system, 3)
    self.assertIn('K', system)
    self.assertEqual('K', system['K'].subject)

  @parameterized.parameters('ex_sem', 'gateway_left')
  def testFixturesAreValid(self, name):
    system = test_utils.load_fixture(name)
    self.assertEqual(name, system.name)

  def testDanglingParticipant(self):
    machines = {'A': test_utils.make_cfsm('A', ['0 tau 1', '1 ! Z m 2'])}
    with self.assertRaises(errors.SystemValidationError) as cm:
      system_lib.validate_system(machines)
    self.assertEqual([system_lib.DANGLING_PARTICIPANT], cm.exception.kinds)
    self.assertIn('Z', str(cm.exception))

  def testEveryDanglingReferenceIsReported(self):
    machines = self._machines()
    del machines['C']
    del machines['D']
    with self.assertRaises(errors.SystemValidationError) as cm:
      system_lib.validate_system(machines)
    self.assertLen(cm.exception.violations, 2)

  def testNonLocalMachine(self):
    machines = self._machines()
    machines['E'] = machines.pop('C')
    with self.assertRaises(errors.SystemValidationError) as cm:
      system_lib.validate_system(machines)
    self.assertIn(system_lib.NON_LOCAL_MACHINE, cm.exception.kinds)

  def testEmptySystem(self):
    with self.assertRaises(errors.SystemValidationError) as cm:
      system_lib.validate_system({})
    self.assertEqual([system_lib.EMPTY_SYSTEM], cm.exception.kinds)

  def testNotAMachine(self):
    with self.assertRaises(TypeError):
      system_lib.validate_system({'A': 'not a machine'})

  def testUnknownParticipant(self):
    system = system_lib.validate_system(self._machines())
    with self.assertRaises(errors.UnknownParticipantError):
      system['Z']  # pylint: disable=pointless-statement

  def testSequentialParticipants(self):
    system = system_lib.validate_system(self._machines())
    self.assertEqual(('C', 'D'), system_lib.sequential_participants(system))


if __name__ == '__main__':
  absltest.main()
