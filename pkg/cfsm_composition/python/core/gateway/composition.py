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
"""Composition of two communicating systems through a pair of gateways.

Two systems with disjoint domains are composed via H in the first and K in
the second by replacing H with its gateway towards K and K with its gateway
towards H. Composition is only sound for (H, K)-composable systems: H and K
must be compatible, ?!-deterministic and free of asymmetric mixed states.
"""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import collections

from absl import logging

from cfsm_composition.python.core.automata import cfsm as cfsm_lib
from cfsm_composition.python.core.compatibility import compatibility
from cfsm_composition.python.core.gateway import gateway as gateway_lib
from cfsm_composition.python.core.internal import errors
from cfsm_composition.python.core.semantics import semantics
from cfsm_composition.python.core.semantics import system as system_lib

LEFT = 'left'
RIGHT = 'right'

DOMAIN_OVERLAP = 'domain-overlap'
NOT_COMPOSABLE = 'not-composable'
NOT_COMPATIBLE = 'not-compatible'
NOT_IN_DETERMINISTIC = 'not-?-deterministic'
NOT_OUT_DETERMINISTIC = 'not-!-deterministic'
ASYMMETRIC_MIXED = 'asymmetric-mixed'

LEFT_PROJECTION_CLAUSE = 'left-projection'
RIGHT_PROJECTION_CLAUSE = 'right-projection'
CORRESPONDENCE_CLAUSE = 'nof-correspondence'


class Reason(collections.namedtuple('Reason', ['code', 'message'])):
  __slots__ = ()

  def __str__(self):
    return '{}: {}'.format(self.code, self.message)


class ComposabilityReport(
    collections.namedtuple('ComposabilityReport', [
        'disjoint_domains', 'h_profile', 'k_profile', 'compatible',
        'composable', 'reasons'
    ])):
  """Outcome of `check_composability`.

  Attributes:
    disjoint_domains: Whether the two systems share no participant.
    h_profile: `MachineProfile` of H.
    k_profile: `MachineProfile` of K.
    compatible: Whether H and K are compatible.
    composable: Conjunction of all the checks.
    reasons: Tuple of `Reason`s, one per failed check.
  """
  __slots__ = ()


def _machine_reasons(participant, profile):
  reasons = []
  if not profile.in_deterministic:
    reasons.append(Reason(NOT_IN_DETERMINISTIC,
                          '{} is not ?-deterministic'.format(participant)))
  if not profile.out_deterministic:
    reasons.append(Reason(NOT_OUT_DETERMINISTIC,
                          '{} is not !-deterministic'.format(participant)))
  if profile.has_asymmetric_mixed:
    reasons.append(Reason(ASYMMETRIC_MIXED,
                          '{} has asymmetric mixed states'.format(participant)))
  return reasons


def check_composability(s1, h, s2, k):
  """Checks whether `s1` and `s2` are (H, K)-composable.

  Args:
    s1: A `System`.
    h: A participant of `s1`.
    s2: A `System`.
    k: A participant of `s2`.

  Returns:
    A `ComposabilityReport`.

  Raises:
    UnknownParticipantError: If `h` or `k` is not in its system.
  """
  m1, m2 = s1[h], s2[k]
  overlap = sorted(set(s1.participants) & set(s2.participants))
  h_profile = cfsm_lib.machine_profile(m1)
  k_profile = cfsm_lib.machine_profile(m2)
  compatible = compatibility.check_compatibility(m1, m2).compatible

  reasons = []
  if overlap:
    reasons.append(Reason(DOMAIN_OVERLAP,
                          'shared participants {}'.format(','.join(overlap))))
  if not compatible:
    reasons.append(Reason(NOT_COMPATIBLE,
                          '{} and {} are not compatible'.format(h, k)))
  reasons.extend(_machine_reasons(h, h_profile))
  reasons.extend(_machine_reasons(k, k_profile))
  return ComposabilityReport(
      disjoint_domains=not overlap,
      h_profile=h_profile,
      k_profile=k_profile,
      compatible=compatible,
      composable=not reasons,
      reasons=tuple(reasons))


class ComposedSystem(object):
  """A system composed through gateways, with what it was composed from."""

  def __init__(self, system, left, h, right, k, left_gateway, right_gateway,
               forced):
    self._system = system
    self._left = left
    self._h = h
    self._right = right
    self._k = k
    self._left_gateway = left_gateway
    self._right_gateway = right_gateway
    self._forced = forced

  @property
  def system(self):
    return self._system

  @property
  def left(self):
    return self._left

  @property
  def right(self):
    return self._right

  @property
  def h(self):
    return self._h

  @property
  def k(self):
    return self._k

  @property
  def left_gateway(self):
    return self._left_gateway

  @property
  def right_gateway(self):
    return self._right_gateway

  @property
  def forced(self):
    return self._forced

  def gateway(self, side):
    if side == LEFT:
      return self._left_gateway
    if side == RIGHT:
      return self._right_gateway
    raise ValueError('side must be {!r} or {!r}, got {!r}'.format(
        LEFT, RIGHT, side))

  def component(self, side):
    self.gateway(side)
    return self._left if side == LEFT else self._right


def compose_systems(s1, h, s2, k, force=False):
  """Composes `s1` and `s2` via H and K.

  Args:
    s1: A `System`.
    h: A participant of `s1`.
    s2: A `System`.
    k: A participant of `s2`.
    force: Compose even if the systems are not (H, K)-composable. Forced
      compositions reproduce what goes wrong without composability and are
      flagged as such.

  Returns:
    A `ComposedSystem` whose machines are those of `s1` and `s2`, except for H
    and K which are replaced by their gateways.

  Raises:
    CompositionError: With kind `domain-overlap` if the domains intersect, or
      `not-composable` if a composability check fails and `force` is unset.
    UnknownParticipantError: If `h` or `k` is not in its system.
  """
  report = check_composability(s1, h, s2, k)
  if not report.disjoint_domains:
    raise errors.CompositionError(DOMAIN_OVERLAP, str(report.reasons[0]))
  if not report.composable:
    details = '; '.join(str(r) for r in report.reasons)
    if not force:
      raise errors.CompositionError(NOT_COMPOSABLE, details)
    logging.warning('Forcing composition of %s and %s via %s and %s: %s',
                    s1.name, s2.name, h, k, details)

  left_gateway = gateway_lib.build_gateway(s1[h], k)
  right_gateway = gateway_lib.build_gateway(s2[k], h)
  machines = dict(s1.machines)
  machines.update(s2.machines)
  machines[h] = left_gateway.cfsm
  machines[k] = right_gateway.cfsm
  system = system_lib.validate_system(
      machines, name='{}_{}'.format(s1.name, s2.name))
  logging.info('Composed %s and %s via %s and %s into %d participants%s.',
               s1.name, s2.name, h, k, len(system),
               ' (forced)' if not report.composable else '')
  return ComposedSystem(system, s1, h, s2, k, left_gateway, right_gateway,
                        forced=not report.composable)


def project_configuration(cs, configuration, side):
  """Recovers the configuration of one component from a composed one.

  Args:
    cs: A `ComposedSystem`.
    configuration: A configuration of `cs.system`.
    side: `LEFT` or `RIGHT`.

  Returns:
    A configuration of `cs.left` or `cs.right`. The gateway's fresh states
    are resolved with `gateway.project_state`.

  Raises:
    UnknownStateError: If `configuration` is foreign to `cs.system`.
    ValueError: If `side` is neither `LEFT` nor `RIGHT`.
  """
  gateway = cs.gateway(side)
  component = cs.component(side)
  configuration = semantics.check_configuration(cs.system, configuration)
  local = dict(configuration)
  projected = {p: local[p] for p in component.participants}
  owner = gateway.owner
  projected[owner] = gateway_lib.project_state(gateway, local[owner])
  return semantics.make_configuration(projected)


def nof_pair(cs, configuration):
  """The pair of original H and K states the gateways are aligned on."""
  local = dict(semantics.check_configuration(cs.system, configuration))
  return (gateway_lib.nof_state(cs.left_gateway, local[cs.h]),
          gateway_lib.nof_state(cs.right_gateway, local[cs.k]))


class ProjectionLemmaResult(
    collections.namedtuple('ProjectionLemmaResult',
                           ['holds', 'counterexamples'])):
  """Outcome of `verify_projection_lemma`.

  `counterexamples` is a tuple of `(configuration, clause)` pairs.
  """
  __slots__ = ()


def verify_projection_lemma(
    cs, lts, max_configurations=semantics.DEFAULT_MAX_CONFIGURATIONS):
  """Checks that every reachable composed configuration projects soundly.

  For each reachable configuration `s` of the composed system, the left and
  right projections of `s` must be reachable in the component systems, and
  the original states the gateways are aligned on must be related by the
  greatest io-correspondence of H and K.

  The check is only guaranteed to succeed for compositions that were not
  forced; on forced ones it reports which clause fails.

  Args:
    cs: A `ComposedSystem`.
    lts: The semantics of `cs.system`.
    max_configurations: Cap for building the semantics of the components.

  Returns:
    A `ProjectionLemmaResult`.
  """
  left_lts = semantics.build_semantics(cs.left, max_configurations)
  right_lts = semantics.build_semantics(cs.right, max_configurations)
  correspondence = compatibility.greatest_io_correspondence(
      cs.left[cs.h], cs.right[cs.k])
  counterexamples = []
  for configuration in lts.configurations:
    if project_configuration(cs, configuration, LEFT) not in left_lts:
      counterexamples.append((configuration, LEFT_PROJECTION_CLAUSE))
    if project_configuration(cs, configuration, RIGHT) not in right_lts:
      counterexamples.append((configuration, RIGHT_PROJECTION_CLAUSE))
    if nof_pair(cs, configuration) not in correspondence:
      counterexamples.append((configuration, CORRESPONDENCE_CLAUSE))
  if cs.forced and counterexamples:
    logging.info('Projection lemma fails on forced composition %s: %d '
                 'counterexamples.', cs.system.name, len(counterexamples))
  return ProjectionLemmaResult(not counterexamples, tuple(counterexamples))


def sequential_gateways(cs):
  """Whether the original H and K machines are both sequential."""
  return (cfsm_lib.is_sequential(cs.left[cs.h]) and
          cfsm_lib.is_sequential(cs.right[cs.k]))


def provenance_header(cs):
  """Comment lines describing how `cs` was composed."""
  lines = [
      'composed from {} via {} and {} via {}'.format(cs.left.name, cs.h,
                                                   cs.right.name, cs.k),
      'forced: {}'.format('yes' if cs.forced else 'no'),
  ]
  for gateway in (cs.left_gateway, cs.right_gateway):
    for state in gateway.internal_states:
      lines.append('{} {}: {}'.format(gateway.owner, state,
                                      gateway.provenance_of(state)))
  return lines
