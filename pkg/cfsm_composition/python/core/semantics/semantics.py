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
"""Asymmetric synchronous semantics of communicating systems.

The semantics of a system is a labelled transition system whose states are
configurations, i.e. maps assigning a local state to every participant.
There are two kinds of steps:

  * `A->B:m`: A is in a state with an output `A->B!m` and B is in a state with
    an input `A->B?m`; both move along the respective transitions.
  * `tau(A)`: A moves along one of its tau transitions alone.

Since outputs are guarded by tau transitions, a sender commits to a message
with a silent step and the exchange itself is a handshake with a receiver
that may or may not be willing to accept it.

Configurations are represented as tuples of `(participant, state)` pairs
sorted by participant, which makes them hashable, ordered and
self-describing.
"""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import collections

from absl import logging
import six

from cfsm_composition.python.core.automata import labels
from cfsm_composition.python.core.internal import errors

DEFAULT_MAX_CONFIGURATIONS = 1000000


class SemLabel(
    collections.namedtuple('SemLabel', ['sender', 'receiver', 'msg', 'actor'])):
  """Label of a semantic step: an interaction `A->B:m` or `tau(A)`.

  Use the `interaction` and `tau_step` factories. Unused fields hold empty
  strings so that labels are totally ordered.
  """
  __slots__ = ()

  @classmethod
  def interaction(cls, sender, receiver, msg):
    labels.validate_token(sender, 'sender')
    labels.validate_token(receiver, 'receiver')
    labels.validate_token(msg, 'message')
    if sender == receiver:
      raise ValueError(
          'sender and receiver must differ, got {} twice'.format(sender))
    return cls(sender, receiver, msg, '')

  @classmethod
  def tau_step(cls, actor):
    labels.validate_token(actor, 'actor')
    return cls('', '', '', actor)

  @property
  def is_tau(self):
    return bool(self.actor)

  def __str__(self):
    if self.is_tau:
      return 'tau({})'.format(self.actor)
    return '{}->{}:{}'.format(self.sender, self.receiver, self.msg)


def participants_of(label):
  """Participants involved in a semantic step.

  `{A, B}` for `A->B:m` and `{A}` for `tau(A)`. The latter extends the usual
  participant set of tau (which is empty) so that silent moves count as
  involving their actor.
  """
  if label.is_tau:
    return frozenset([label.actor])
  return frozenset([label.sender, label.receiver])


def make_configuration(mapping):
  """Builds a configuration from a `dict` of participant to state."""
  return tuple(sorted(six.iteritems(dict(mapping))))


def configuration_string(configuration):
  """Canonical rendering, e.g. `(A=2,B=0,H=1)`."""
  return '({})'.format(','.join(
      '{}={}'.format(p, q) for p, q in configuration))


def _as_configuration(configuration):
  if isinstance(configuration, dict):
    return make_configuration(configuration)
  return tuple(configuration)


def check_configuration(system, configuration):
  """Returns `configuration` as a tuple, checking it belongs to `system`.

  Raises:
    UnknownStateError: If the domain differs from the system's or a state is
      not a state of the participant's machine.
  """
  configuration = _as_configuration(configuration)
  domain = tuple(p for p, _ in configuration)
  if domain != system.participants:
    raise errors.UnknownStateError(
        'foreign-configuration: domain {} differs from the system domain '
        '{}'.format(list(domain), list(system.participants)))
  for participant, state in configuration:
    if state not in system[participant]:
      raise errors.UnknownStateError(
          'foreign-configuration: {} is not a state of {}'.format(
              state, participant))
  return configuration


def initial_configuration(system):
  return tuple((p, system[p].initial) for p in system.participants)


def _update(configuration, changes):
  return tuple((p, changes.get(p, q)) for p, q in configuration)


class SemLts(object):
  """The reachable part of the semantics of a system.

  Configurations are kept in breadth-first discovery order, so index 0 is the
  initial configuration and "first found" means the lowest index. Outgoing
  steps of each configuration are ordered by label, then by target index.
  """

  def __init__(self, participants, configurations, edges):
    self._participants = tuple(participants)
    self._configurations = tuple(configurations)
    self._index = {c: i for i, c in enumerate(self._configurations)}
    outgoing = [[] for _ in self._configurations]
    for source, label, target in edges:
      outgoing[self._index[source]].append((label, target))
    self._outgoing = [
        tuple(sorted(set(out), key=lambda lt: (lt[0], self._index[lt[1]])))
        for out in outgoing
    ]

  @property
  def participants(self):
    return self._participants

  @property
  def initial(self):
    return self._configurations[0]

  @property
  def configurations(self):
    """Configurations in breadth-first discovery order.

    Checkers rely on this order to report the first witness found. Use
    `sorted_configurations` for output that must not depend on exploration.
    """
    return self._configurations

  @property
  def sorted_configurations(self):
    """Configurations in lexicographic order of their participant states."""
    return tuple(sorted(self._configurations))

  @property
  def edges(self):
    """All `(source, label, target)` steps, grouped by source index."""
    return tuple((self._configurations[i], label, target)
                 for i, out in enumerate(self._outgoing)
                 for label, target in out)

  def __len__(self):
    return len(self._configurations)

  def __contains__(self, configuration):
    return configuration in self._index

  def index(self, configuration):
    try:
      return self._index[configuration]
    except KeyError:
      raise errors.UnknownStateError(
          'unknown-state: {} is not a reachable configuration'.format(
              configuration_string(configuration)))

  def successors(self, configuration):
    return self._outgoing[self.index(configuration)]

  def out_degree(self, configuration):
    return len(self.successors(configuration))


def _steps(system, configuration):
  """Yields every `(SemLabel, target)` step enabled at `configuration`."""
  local = dict(configuration)
  for sender in system.participants:
    for label, target in system[sender].successors(local[sender]):
      if label.is_tau:
        yield (SemLabel.tau_step(sender),
               _update(configuration, {sender: target}))
      elif label.is_output:
        receiver = label.receiver
        wanted = label.dual()
        for peer_label, peer_target in system[receiver].successors(
            local[receiver]):
          if peer_label == wanted:
            yield (SemLabel.interaction(sender, receiver, label.msg),
                   _update(configuration,
                           {sender: target, receiver: peer_target}))


def build_semantics(system, max_configurations=DEFAULT_MAX_CONFIGURATIONS):
  """Explores the reachable configurations of `system` breadth first.

  Args:
    system: A validated `System`.
    max_configurations: Upper bound on the number of configurations.

  Returns:
    A `SemLts`.

  Raises:
    ValueError: If `max_configurations` is not positive.
    StateExplosionError: If more than `max_configurations` configurations are
      reachable. The LTS is never truncated silently.
  """
  if max_configurations < 1:
    raise ValueError('max_configurations must be >= 1, got {}'.format(
        max_configurations))
  initial = initial_configuration(system)
  seen = {initial}
  order = [initial]
  edges = []
  queue = collections.deque([initial])
  while queue:
    configuration = queue.popleft()
    for label, target in sorted(set(_steps(system, configuration))):
      if target not in seen:
        if len(order) >= max_configurations:
          raise errors.StateExplosionError(max_configurations)
        seen.add(target)
        order.append(target)
        queue.append(target)
      edges.append((configuration, label, target))
  logging.vlog(1, 'Semantics of %s: %d configurations, %d steps.',
               system.name, len(order), len(edges))
  return SemLts(system.participants, order, edges)


def enabled_participants(system, configuration):
  """Participants whose local state has at least one outgoing transition.

  This is a property of the machines only: a participant waiting for an input
  nobody offers is still enabled.

  Raises:
    UnknownStateError: If `configuration` does not belong to `system`.
  """
  configuration = check_configuration(system, configuration)
  return tuple(p for p, q in configuration if system[p].successors(q))


def find_run(lts, start, run_labels):
  """Finds a path from `start` realising `run_labels`.

  Args:
    lts: A `SemLts`.
    start: The configuration to start from.
    run_labels: A sequence of `SemLabel`s.

  Returns:
    The list of visited configurations (one more than the labels), for the
    first matching path in successor order, or `None` if there is none.
  """
  run_labels = list(run_labels)
  stack = [(start, [start])]
  while stack:
    configuration, path = stack.pop()
    depth = len(path) - 1
    if depth == len(run_labels):
      return path
    candidates = [target for label, target in lts.successors(configuration)
                  if label == run_labels[depth]]
    for target in reversed(candidates):
      stack.append((target, path + [target]))
  return None
