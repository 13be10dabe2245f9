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
"""Randomized checking that composition preserves communication properties.

Each iteration generates a system S1 with a distinguished participant H,
derives a machine K compatible with H, embeds it in a random system S2 and
composes the two through gateways. Whenever both components satisfy a
property (deadlock freedom, strong lock freedom, or lock freedom with
sequential H and K) the composed system must satisfy it as well. Any
composed system must also satisfy the projection lemma and the implication
chain of the checkers. Every failure is a bug and is recorded with enough
data to replay it.
"""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import collections
import multiprocessing

from absl import logging
import six

from cfsm_composition.python.core.formats import system_format
from cfsm_composition.python.core.fuzz import generators
from cfsm_composition.python.core.gateway import composition
from cfsm_composition.python.core.internal import errors
from cfsm_composition.python.core.properties import properties
from cfsm_composition.python.core.semantics import semantics

PROJECTION_LEMMA = 'projection-lemma'
IMPLICATION_CHAIN = 'implication-chain'

_STATS = ('generated', 'composable', 'skipped', 'deadlock_free', 'lock_free',
          'strongly_lock_free', 'lock_freedom_checked')


class FuzzViolation(
    collections.namedtuple('FuzzViolation', [
        'iteration', 'seed', 'theorem', 'left', 'h', 'right', 'k', 'witness'
    ])):
  """A composed pair that broke a preservation theorem.

  Attributes:
    iteration: Index of the iteration in the campaign.
    seed: The seed the iteration was generated from.
    theorem: The property that was not preserved, or `PROJECTION_LEMMA` or
      `IMPLICATION_CHAIN`.
    left: Serialized S1.
    h: The participant of S1 composed through.
    right: Serialized S2.
    k: The participant of S2 composed through.
    witness: A `dict` describing the violation in the composed system.
  """
  __slots__ = ()

  def to_dict(self):
    return dict(self._asdict())


class FuzzReport(
    collections.namedtuple('FuzzReport',
                           ['params', 'iterations', 'stats', 'violations'])):
  """Outcome of `run_preservation_fuzz`.

  Attributes:
    params: The `FuzzParams` of the campaign.
    iterations: Number of iterations run.
    stats: `dict` counting generated, composable and skipped pairs and the
      pairs satisfying each premise.
    violations: Tuple of `FuzzViolation`s sorted by iteration. Empty unless
      something is broken.
  """
  __slots__ = ()

  def to_dict(self):
    return {
        'params': self.params.get_config(),
        'iterations': self.iterations,
        'stats': dict(self.stats),
        'violations': [v.to_dict() for v in self.violations],
    }


class IterationOutcome(
    collections.namedtuple('IterationOutcome',
                           ['iteration', 'stats', 'violations'])):
  __slots__ = ()


def _witness_summary(witness):
  return {
      'kind': witness.kind,
      'configuration': semantics.configuration_string(witness.configuration),
      'participant': witness.participant,
  }


def generate_pair(params, iteration):
  """Generates the composable pair of one iteration.

  Args:
    params: A `FuzzParams`.
    iteration: The iteration index; the pair only depends on
      `params.iteration_seed(iteration)` and the other knobs.

  Returns:
    A tuple `(s1, 'H', s2, 'K')`.
  """
  rng = generators.make_rng(params, iteration)
  upper = max(params.max_participants, 2)
  left_others = ['A{}'.format(i + 1) for i in range(rng.randint(1, upper))]
  right_others = ['B{}'.format(i + 1) for i in range(rng.randint(1, upper))]

  h = generators.random_machine(
      rng, 'H', left_others, params,
      sequential=params.require_sequential_gateways)
  s1 = generators.random_system(
      params, rng, name='left{}'.format(iteration),
      participants=['H'] + left_others, fixed_machines={'H': h})
  k = generators.derive_compatible_peer(h, 'K', right_others)
  s2 = generators.random_system(
      params, rng, name='right{}'.format(iteration),
      participants=['K'] + right_others, fixed_machines={'K': k})
  return s1, 'H', s2, 'K'


def _holds(system, lts):
  return {
      properties.DEADLOCK_FREEDOM:
          properties.find_deadlocks(system, lts, max_witnesses=1).holds,
      properties.LOCK_FREEDOM:
          properties.find_locks(system, lts, max_witnesses=1).holds,
      properties.STRONG_LOCK_FREEDOM:
          properties.check_strong_lock_freedom(system, lts,
                                               max_witnesses=1).holds,
  }


def run_iteration(params, iteration):
  """Runs one iteration of the campaign.

  Returns:
    An `IterationOutcome`.
  """
  stats = collections.Counter()
  violations = []
  s1, h, s2, k = generate_pair(params, iteration)
  stats['generated'] += 1

  def record(theorem, witness):
    violations.append(FuzzViolation(
        iteration=iteration,
        seed=params.iteration_seed(iteration),
        theorem=theorem,
        left=system_format.serialize_system(s1),
        h=h,
        right=system_format.serialize_system(s2),
        k=k,
        witness=witness))
    logging.error('Iteration %d: %s violated on %s.', iteration, theorem,
                  witness)

  if not composition.check_composability(s1, h, s2, k).composable:
    logging.vlog(1, 'Iteration %d: not composable.', iteration)
    return IterationOutcome(iteration, dict(stats), tuple(violations))
  stats['composable'] += 1

  try:
    left = _holds(s1, semantics.build_semantics(s1, params.max_configurations))
    right = _holds(s2, semantics.build_semantics(s2,
                                                 params.max_configurations))
    cs = composition.compose_systems(s1, h, s2, k)
    lts = semantics.build_semantics(cs.system, params.max_configurations)
  except errors.StateExplosionError as e:
    stats['skipped'] += 1
    logging.vlog(1, 'Iteration %d: skipped, %s', iteration, e)
    return IterationOutcome(iteration, dict(stats), tuple(violations))

  premises = [
      name for name in (properties.DEADLOCK_FREEDOM, properties.LOCK_FREEDOM,
                        properties.STRONG_LOCK_FREEDOM)
      if left[name] and right[name]
  ]
  for name, stat in ((properties.DEADLOCK_FREEDOM, 'deadlock_free'),
                     (properties.LOCK_FREEDOM, 'lock_free'),
                     (properties.STRONG_LOCK_FREEDOM, 'strongly_lock_free')):
    if name in premises:
      stats[stat] += 1

  # Lock freedom is only preserved through sequential gateways.
  if (properties.LOCK_FREEDOM in premises and
      not composition.sequential_gateways(cs)):
    premises.remove(properties.LOCK_FREEDOM)
  if properties.LOCK_FREEDOM in premises:
    stats['lock_freedom_checked'] += 1

  checkers = {
      properties.DEADLOCK_FREEDOM: properties.find_deadlocks,
      properties.LOCK_FREEDOM: properties.find_locks,
      properties.STRONG_LOCK_FREEDOM: properties.check_strong_lock_freedom,
  }
  for name in premises:
    report = checkers[name](cs.system, lts, max_witnesses=1)
    if not report.holds:
      record(name, _witness_summary(report.witnesses[0]))

  lemma = composition.verify_projection_lemma(cs, lts,
                                              params.max_configurations)
  if not lemma.holds:
    configuration, clause = lemma.counterexamples[0]
    record(PROJECTION_LEMMA, {
        'kind': clause,
        'configuration': semantics.configuration_string(configuration),
        'participant': None,
    })
  try:
    properties.check_implication_chain(cs.system, lts)
  except errors.InternalInconsistencyError as e:
    record(IMPLICATION_CHAIN, {
        'kind': IMPLICATION_CHAIN,
        'configuration': None,
        'participant': None,
        'message': str(e),
    })

  logging.vlog(1, 'Iteration %d: %d configurations, premises %s, %d '
               'violations.', iteration, len(lts), ','.join(premises) or '-',
               len(violations))
  return IterationOutcome(iteration, dict(stats), tuple(violations))


def _run_iteration_from_config(args):
  config, iteration = args
  return run_iteration(generators.FuzzParams.from_config(config), iteration)


def run_preservation_fuzz(params, num_workers=1):
  """Runs the preservation campaign described by `params`.

  Args:
    params: A `FuzzParams`.
    num_workers: Number of processes to spread the iterations over. The report
      does not depend on it.

  Returns:
    A `FuzzReport`.

  Raises:
    ValueError: If `num_workers` is not positive.
  """
  if num_workers < 1:
    raise ValueError('num_workers must be >= 1, got {}'.format(num_workers))
  jobs = [(params.get_config(), i) for i in range(params.iterations)]
  if num_workers == 1:
    outcomes = [_run_iteration_from_config(job) for job in jobs]
  else:
    pool = multiprocessing.Pool(num_workers)
    try:
      outcomes = pool.map(_run_iteration_from_config, jobs)
    finally:
      pool.close()
      pool.join()

  stats = collections.OrderedDict((name, 0) for name in _STATS)
  violations = []
  for outcome in sorted(outcomes, key=lambda o: o.iteration):
    for name, count in six.iteritems(outcome.stats):
      stats[name] += count
    violations.extend(outcome.violations)

  logging.info(
      'Preservation fuzzing (seed %d): %d iterations, %d composable, %d '
      'skipped, %d violations.', params.seed, params.iterations,
      stats['composable'], stats['skipped'], len(violations))
  return FuzzReport(params, params.iterations, stats, tuple(violations))
