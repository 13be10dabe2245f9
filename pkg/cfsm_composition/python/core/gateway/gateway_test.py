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
"""Tests for gateway."""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

from absl.testing import absltest
from absl.testing import parameterized

from cfsm_composition.python.core.automata import cfsm as cfsm_lib
from cfsm_composition.python.core.automata import fsa as fsa_lib
from cfsm_composition.python.core.automata import labels
from cfsm_composition.python.core.gateway import gateway as gateway_lib
from cfsm_composition.python.core.internal import errors
from cfsm_composition.python.core.internal.testing import test_utils

ActionLabel = labels.ActionLabel


class BuildGatewayTest(parameterized.TestCase):

  def setUp(self):
    super(BuildGatewayTest, self).setUp()
    self.h = test_utils.load_fixture('gateway_left')['H']
    self.k = test_utils.load_fixture('ex_sem')['K']

  def testHubGateway(self):
    gw = gateway_lib.build_gateway(self.h, 'K')
    expected = test_utils.make_fsa('H', [
        '0 ? A m 2', '2 tau 4', '4 ! K m 1', '0 ? B n 3', '3 tau 5',
        '5 ! K n 1'
    ])
    self.assertTrue(
        test_utils.isomorphic_machines(gw.cfsm, expected,
                                       fixed_states=('0', '1')))
    self.assertEqual(('0', '1'), gw.external_states)
    self.assertEqual(('0!1', "0!1'", '0?1', "0?1'"), gw.internal_states)
    self.assertEqual('H', gw.owner)
    self.assertEqual('K', gw.peer)

  def testChooserGateway(self):
    gw = gateway_lib.build_gateway(self.k, 'H')
    expected = test_utils.make_fsa('K', [
        '0 ? H m 5', '5 tau 1', '1 ! C m 3', '0 ? H n 6', '6 tau 2',
        '2 ! D n 3'
    ])
    self.assertTrue(
        test_utils.isomorphic_machines(gw.cfsm, expected,
                                       fixed_states=('0', '1', '2', '3')))
    self.assertEqual(('0>1', '0>2'), gw.internal_states)

  def testProvenance(self):
    gw = gateway_lib.build_gateway(self.h, 'K')
    received = fsa_lib.Transition('0', ActionLabel.input('A', 'H', 'm'), '1')
    self.assertEqual(
        gateway_lib.Provenance(gateway_lib.INPUT_RELAY, received),
        gw.provenance_of('0?1'))
    self.assertEqual(
        gateway_lib.Provenance(gateway_lib.OUTPUT_RELAY, received),
        gw.provenance_of('0!1'))
    self.assertIsNone(gw.provenance_of('0'))
    with self.assertRaises(errors.UnknownStateError):
      gw.provenance_of('7')

  def testSingleSegment(self):
    m = test_utils.make_cfsm('H', ['0 tau 1', '1 ! A m 2'])
    gw = gateway_lib.build_gateway(m, 'K')
    self.assertLen(gw.cfsm.states, 4)
    self.assertEqual(((ActionLabel.input('K', 'H', 'm'), '0>1'),),
                     gw.cfsm.successors('0'))
    self.assertEqual(((ActionLabel.tau(), '1'),), gw.cfsm.successors('0>1'))
    self.assertEqual(gateway_lib.PEER_INPUT_PREFIX,
                     gw.provenance_of('0>1').role)

  def testSingleInput(self):
    m = test_utils.make_cfsm('H', ['0 ? A m 1'])
    gw = gateway_lib.build_gateway(m, 'K')
    expected = test_utils.make_fsa(
        'H', ['0 ? A m "0?1"', '"0?1" tau "0!1"', '"0!1" ! K m 1'])
    self.assertEqual(expected, gw.cfsm.fsa)

  def testFreshNamesAvoidExistingStates(self):
    m = test_utils.make_cfsm('H', ['0 tau 1', '1 ! A m 2', '2 ? A m 3'])
    clash = cfsm_lib.validate_cfsm(
        fsa_lib.Fsa(set(m.states) | {'0>1'}, '0', m.transitions), 'H')
    gw = gateway_lib.build_gateway(clash, 'K')
    self.assertEqual(("0>1'", '2!3', '2?3'), gw.internal_states)

  @parameterized.parameters(*test_utils.ASYMMETRIC_FIXTURES)
  def testCountsAndTauFact(self, fixture):
    system = test_utils.load_fixture(fixture)
    for participant in system.participants:
      m = system[participant]
      taus = sum(1 for t in m.transitions if t.label.is_tau)
      inputs = sum(1 for t in m.transitions if t.label.is_input)
      gw = gateway_lib.build_gateway(m, 'Zz')
      self.assertLen(gw.cfsm.states, len(m.states) + taus + 2 * inputs)
      self.assertLen(gw.cfsm.transitions,
                     len(m.transitions) + taus + 2 * inputs)
      self.assertEqual(participant, gw.cfsm.subject)
      for state in gw.cfsm.states:
        touching = [
            t for t in gw.cfsm.transitions
            if t.label.is_tau and state in (t.source, t.target)
        ]
        self.assertLessEqual(len(touching), 1)
      self.assertEqual(set(gw.cfsm.states),
                       set(gw.external_states) | set(gw.internal_states))
      self.assertFalse(set(gw.external_states) & set(gw.internal_states))

  @parameterized.parameters('H', 'A')
  def testPeerNameClash(self, peer):
    with self.assertRaises(errors.CompositionError) as cm:
      gateway_lib.build_gateway(self.h, peer)
    self.assertEqual(gateway_lib.PEER_NAME_CLASH, cm.exception.kind)

  def testInvalidInputMachine(self):
    with self.assertRaises(errors.CompositionError) as cm:
      gateway_lib.build_gateway(self.h.fsa, 'K')
    self.assertEqual(gateway_lib.INVALID_INPUT_MACHINE, cm.exception.kind)


class NofStateTest(parameterized.TestCase):

  def setUp(self):
    super(NofStateTest, self).setUp()
    self.gw_h = gateway_lib.build_gateway(
        test_utils.load_fixture('gateway_left')['H'], 'K')
    self.gw_k = gateway_lib.build_gateway(
        test_utils.load_fixture('ex_sem')['K'], 'H')

  @parameterized.named_parameters(
      ('initial', '0', '0'),
      ('terminal', '1', '1'),
      ('received', '0?1', '0'),
      ('forwarding', "0!1'", '0'),
  )
  def testRelayingSide(self, state, expected):
    self.assertEqual(expected, gateway_lib.nof_state(self.gw_h, state))

  @parameterized.named_parameters(
      ('initial', '0', '0'),
      ('peer_input', '0>1', '3'),
      ('committed', '2', '3'),
      ('terminal', '3', '3'),
  )
  def testReceivingSide(self, state, expected):
    self.assertEqual(expected, gateway_lib.nof_state(self.gw_k, state))

  def testUnknownState(self):
    with self.assertRaises(errors.UnknownStateError):
      gateway_lib.nof_state(self.gw_h, '9')


class ProjectStateTest(parameterized.TestCase):

  def setUp(self):
    super(ProjectStateTest, self).setUp()
    self.gw_h = gateway_lib.build_gateway(
        test_utils.load_fixture('gateway_left')['H'], 'K')
    self.gw_k = gateway_lib.build_gateway(
        test_utils.load_fixture('ex_sem')['K'], 'H')

  def testAfterPeerInputMapsBack(self):
    self.assertEqual('0', gateway_lib.project_state(self.gw_k, '0>1'))

  @parameterized.parameters('0?1', '0!1', "0?1'", "0!1'")
  def testBeforePeerOutputMapsForward(self, state):
    self.assertEqual('1', gateway_lib.project_state(self.gw_h, state))

  @parameterized.parameters('0', '1', '2', '3')
  def testExternalStatesAreKept(self, state):
    self.assertEqual(state, gateway_lib.project_state(self.gw_k, state))


if __name__ == '__main__':
  absltest.main()
