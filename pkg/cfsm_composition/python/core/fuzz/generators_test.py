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
"""Tests for the random generators."""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

from absl.testing import absltest
from absl.testing import parameterized

from cfsm_composition.python.core.automata import cfsm as cfsm_lib
from cfsm_composition.python.core.compatibility import compatibility
from cfsm_composition.python.core.fuzz import generators
from cfsm_composition.python.core.gateway import composition
from cfsm_composition.python.core.internal.testing import test_utils
from cfsm_composition.python.core.properties import properties
from cfsm_composition.python.core.semantics import semantics

_SMALL = dict(max_states=3, max_participants=3)


class FuzzParamsTest(parameterized.TestCase):

  def testDefaults(self):
    params = generators.FuzzParams()
    self.assertEqual(42, params.seed)
    self.assertEqual(5, params.max_states)
    self.assertEqual(4, params.max_participants)
    self.assertEqual(3, params.num_messages)
    self.assertEqual(200, params.iterations)
    self.assertFalse(params.require_sequential_gateways)
    self.assertEqual((0.3, 0.4, 0.3), params.biases)

  def testConfigRoundTrip(self):
    params = generators.FuzzParams(seed=7, iterations=3,
                                   require_sequential_gateways=True)
    restored = generators.FuzzParams.from_config(params.get_config())
    self.assertEqual(params, restored)
    self.assertEqual(7, restored.seed)

  @parameterized.named_parameters(
      ('negative_seed', dict(seed=-1)),
      ('no_states', dict(max_states=0)),
      ('no_participants', dict(max_participants=0)),
      ('too_many_participants', dict(max_participants=27)),
      ('no_messages', dict(num_messages=0)),
      ('no_iterations', dict(iterations=0)),
      ('negative_bias', dict(input_bias=-0.1)),
      ('zero_biases', dict(terminal_bias=0, input_bias=0, output_bias=0)),
  )
  def testInvalidValues(self, kwargs):
    with self.assertRaises(ValueError):
      generators.FuzzParams(**kwargs)

  def testSeedMustBeAnInteger(self):
    with self.assertRaises(TypeError):
      generators.FuzzParams(seed='42')

  def testIterationSeedWraps(self):
    params = generators.FuzzParams(seed=2**32 - 1)
    self.assertEqual(0, params.iteration_seed(1))


class RandomMachineTest(parameterized.TestCase):

  @parameterized.parameters(range(20))
  def testMachinesAreComposable(self, seed):
    params = generators.FuzzParams(seed=seed)
    rng = generators.make_rng(params)
    m = generators.random_machine(rng, 'H', ['A', 'B'], params)
    profile = cfsm_lib.machine_profile(m)
    self.assertTrue(profile.io_deterministic)
    self.assertFalse(profile.has_asymmetric_mixed)
    self.assertTrue(set(m.partners()) <= {'A', 'B'})
    self.assertEqual('0', m.initial)

  @parameterized.parameters(range(20))
  def testSequential(self, seed):
    params = generators.FuzzParams(seed=seed)
    m = generators.random_machine(
        generators.make_rng(params), 'H', ['A'], params, sequential=True)
    self.assertTrue(cfsm_lib.is_sequential(m))

  def testNoPartners(self):
    params = generators.FuzzParams(terminal_bias=0.0)
    m = generators.random_machine(generators.make_rng(params), 'H', [],
                                  params)
    self.assertEqual((), m.transitions)


class RandomSystemTest(parameterized.TestCase):

  def testSameSeedSameSystem(self):
    params = generators.FuzzParams(seed=1)
    self.assertEqual(
        generators.random_system(params), generators.random_system(params))

  @parameterized.parameters(range(10))
  def testDomain(self, seed):
    params = generators.FuzzParams(seed=seed, **_SMALL)
    system = generators.random_system(params)
    self.assertBetween(len(system), 2, 3)
    self.assertTrue(any(system[p].transitions for p in system.participants))

  def testSingleParticipant(self):
    params = generators.FuzzParams(max_participants=1)
    system = generators.random_system(params)
    self.assertEqual(('A',), system.participants)
    self.assertEqual((), system['A'].transitions)

  def testFixedMachines(self):
    params = generators.FuzzParams(seed=3)
    h = test_utils.make_cfsm('H', ['0 ? A m 1'])
    system = generators.random_system(
        params, participants=['A'], fixed_machines={'H': h}, name='left')
    self.assertEqual(('A', 'H'), system.participants)
    self.assertEqual(h, system['H'])
    self.assertEqual('left', system.name)

  def testDiversity(self):
    deadlocking = 0
    deadlock_free = 0
    for seed in range(200):
      system = generators.random_system(
          generators.FuzzParams(seed=seed, **_SMALL))
      lts = semantics.build_semantics(system)
      if properties.find_deadlocks(system, lts).holds:
        deadlock_free += 1
      else:
        deadlocking += 1
    self.assertGreaterEqual(deadlocking, 1)
    self.assertGreaterEqual(deadlock_free, 1)


class DeriveCompatiblePeerTest(parameterized.TestCase):

  def testDualOfHub(self):
    h = test_utils.load_fixture('gateway_left')['H']
    k = generators.derive_compatible_peer(h, 'K', ['C', 'D'])
    self.assertTrue(compatibility.check_compatibility(h, k).compatible)
    self.assertTrue(
        test_utils.isomorphic_machines(
            k, test_utils.load_fixture('ex_sem')['K'], fixed_states=('0',)))
    self.assertEqual(('0', '0!1', "0!1'", '1'), k.states)

  def testTerminalMachine(self):
    m = test_utils.make_cfsm('H', [])
    k = generators.derive_compatible_peer(m, 'K', ['B'])
    self.assertEqual(('0',), k.states)
    self.assertEqual((), k.transitions)

  def testSingleOutput(self):
    m = test_utils.make_cfsm('H', ['0 tau 1', '1 ! A m 2'])
    k = generators.derive_compatible_peer(m, 'K', ['B'])
    self.assertEqual(test_utils.make_fsa('K', ['0 ? B m 2']), k.fsa)
    self.assertTrue(compatibility.check_compatibility(m, k).compatible)

  def testPartnersAreUsedRoundRobin(self):
    m = test_utils.make_cfsm('H',
                             ['0 ? A a 1', '1 ? A b 2', '2 ? A c 3'])
    k = generators.derive_compatible_peer(m, 'K', ['B', 'C'])
    self.assertEqual(('B', 'C'), k.partners())
    receivers = [t.label.receiver for t in k.transitions if t.label.is_output]
    self.assertEqual(['B', 'C', 'B'], receivers)

  @parameterized.parameters('gateway_left', 'lock_left', 'lock_right',
                            'ex_sem', 'nondeterministic_left')
  def testDualOfDualRestoresMachine(self, fixture):
    system = test_utils.load_fixture(fixture)
    for participant in system.participants:
      m = system[participant]
      if cfsm_lib.machine_profile(m).has_asymmetric_mixed:
        continue
      dual = generators.derive_compatible_peer(m, 'Kk', ['Pp'])
      dual_of_dual = generators.derive_compatible_peer(dual, 'Hh', ['Qq'])
      self.assertTrue(
          compatibility.check_compatibility(dual, dual_of_dual).compatible)
      self.assertTrue(
          test_utils.isomorphic_machines(
              compatibility.io_projection(m),
              compatibility.io_projection(dual_of_dual)))

  @parameterized.parameters(range(20))
  def testRandomMachines(self, seed):
    params = generators.FuzzParams(seed=seed)
    h = generators.random_machine(generators.make_rng(params), 'H', ['A'],
                                  params)
    k = generators.derive_compatible_peer(h, 'K', ['B', 'C'])
    self.assertTrue(compatibility.check_compatibility(h, k).compatible)
    self.assertFalse(cfsm_lib.machine_profile(k).has_asymmetric_mixed)

  def testMixedStatesAreRejected(self):
    h = test_utils.load_fixture('mixed_left')['H']
    with self.assertRaisesRegex(ValueError, 'mixed states'):
      generators.derive_compatible_peer(h, 'K', ['Zz'])

  @parameterized.named_parameters(
      ('no_partners', 'K', []),
      ('owner_is_subject', 'H', ['B']),
      ('owner_is_partner', 'A', ['B']),
      ('partner_is_owner', 'K', ['K']),
      ('partner_in_domain', 'K', ['A']),
  )
  def testBadArguments(self, owner, partners):
    h = test_utils.load_fixture('gateway_left')['H']
    with self.assertRaises(ValueError):
      generators.derive_compatible_peer(h, owner, partners)


class LockFreedomRegressionPairTest(absltest.TestCase):

  def testMatchesFixtures(self):
    s1, h, s2, k = generators.lock_freedom_regression_pair()
    self.assertEqual(test_utils.load_fixture('lock_left'), s1)
    self.assertEqual(test_utils.load_fixture('lock_right'), s2)
    self.assertEqual(('H', 'K'), (h, k))

  def testCompositionLocksB(self):
    s1, h, s2, k = generators.lock_freedom_regression_pair()
    for component in (s1, s2):
      lts = semantics.build_semantics(component)
      self.assertTrue(properties.find_locks(component, lts).holds)
    cs = composition.compose_systems(s1, h, s2, k)
    self.assertFalse(composition.sequential_gateways(cs))
    lts = semantics.build_semantics(cs.system)
    report = properties.find_locks(cs.system, lts)
    self.assertFalse(report.holds)
    self.assertIn('B', [w.participant for w in report.witnesses])


if __name__ == '__main__':
  absltest.main()
