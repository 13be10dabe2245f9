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
"""Deadlock freedom, lock freedom and strong lock freedom of systems.

All checkers work on the reachable semantics of a system (a `SemLts`) and
return a `PropertyReport`. A report holds iff it carries no witness; every
witness carries evidence that `replay_witness` re-validates against the LTS.

For a reachable configuration `s` and a participant `A` whose local state in
`s` has outgoing transitions:

  * `s` is a deadlock if it has no outgoing step at all;
  * `(s, A)` is a lock if no step involving `A` is reachable from `s`;
  * `(s, A)` violates strong lock freedom if some maximal run from `s` never
    involves `A`. A run is maximal when it is infinite or ends in a
    configuration without outgoing steps.

A silent step `tau(A)` involves `A`.
"""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import abc
import collections

from absl import logging
import numpy as np
from scipy import sparse
from scipy.sparse import csgraph
import six

from cfsm_composition.python.core.internal import errors
from cfsm_composition.python.core.semantics import semantics

DEFAULT_MAX_WITNESSES = 16

DEADLOCK_FREEDOM = 'deadlock-freedom'
LOCK_FREEDOM = 'lock-freedom'
STRONG_LOCK_FREEDOM = 'strong-lock-freedom'

DEADLOCK = 'deadlock'
LOCK = 'lock'
SLF_VIOLATION = 'slf-violation'


class Run(collections.namedtuple('Run', ['start', 'stem', 'cycle'])):
  """A run of a `SemLts`, possibly ending in a cycle.

  Attributes:
    start: The configuration the run starts from.
    stem: Tuple of `(SemLabel, configuration)` steps.
    cycle: Tuple of steps leading from the last configuration of the stem
      back to itself; empty for finite runs.
  """
  __slots__ = ()

  @property
  def is_lasso(self):
    return bool(self.cycle)

  @property
  def last(self):
    return self.stem[-1][1] if self.stem else self.start

  def labels(self):
    return tuple(label for label, _ in self.stem + self.cycle)

  def configurations(self):
    """The start configuration followed by every configuration visited."""
    return (self.start,) + tuple(c for _, c in self.stem + self.cycle)


class Witness(
    collections.namedtuple(
        'Witness', ['kind', 'configuration', 'participant', 'evidence'])):
  """A violation of a communication property.

  Attributes:
    kind: One of `DEADLOCK`, `LOCK` and `SLF_VIOLATION`.
    configuration: The offending reachable configuration.
    participant: The locked participant; `None` for deadlocks.
    evidence: For deadlocks, a `Run` from the initial configuration to the
      deadlock. For locks, the tuple of configurations reachable from
      `configuration`, none of which has a step involving the participant.
      For strong lock freedom violations, a maximal `Run` from
      `configuration` avoiding the participant.
  """
  __slots__ = ()


class PropertyReport(
    collections.namedtuple(
        'PropertyReport',
        ['property', 'holds', 'witnesses', 'num_violations'])):
  """Verdict of a property checker.

  `witnesses` lists at most the requested number of violations, in
  breadth-first discovery order of their configuration and then by
  participant; `num_violations` counts all of them.
  """
  __slots__ = ()


def _involves(label, participant):
  return participant in semantics.participants_of(label)


def _enabled(system, configuration):
  return [p for p, q in configuration if system[p].successors(q)]


def _validate_max_witnesses(max_witnesses):
  if max_witnesses < 1:
    raise ValueError('max_witnesses must be >= 1, got {}'.format(
        max_witnesses))


def _report(name, witnesses, max_witnesses):
  return PropertyReport(
      property=name,
      holds=not witnesses,
      witnesses=tuple(witnesses[:max_witnesses]),
      num_violations=len(witnesses))


def _shortest_run(lts, start, goals, allowed=None):
  """Breadth-first search for a run from `start` to a configuration in `goals`.

  Args:
    lts: A `SemLts`.
    start: Start configuration.
    goals: Predicate over configurations.
    allowed: Optional predicate over `SemLabel`s restricting the steps.

  Returns:
    A finite `Run`, or `None` if no goal is reachable.
  """
  parents = {start: None}
  queue = collections.deque([start])
  while queue:
    configuration = queue.popleft()
    if goals(configuration):
      steps = []
      while parents[configuration] is not None:
        label, previous = parents[configuration]
        steps.append((label, configuration))
        configuration = previous
      return Run(start, tuple(reversed(steps)), ())
    for label, target in lts.successors(configuration):
      if allowed is not None and not allowed(label):
        continue
      if target not in parents:
        parents[target] = (label, configuration)
        queue.append(target)
  return None


def _reachable(lts, start):
  seen = {start}
  order = [start]
  queue = collections.deque([start])
  while queue:
    for _, target in lts.successors(queue.popleft()):
      if target not in seen:
        seen.add(target)
        order.append(target)
        queue.append(target)
  return tuple(order)


def deadlock_configurations(system, lts):
  """All deadlock configurations of `lts`, in discovery order."""
  return [
      c for c in lts.configurations
      if not lts.successors(c) and _enabled(system, c)
  ]


def find_deadlocks(system, lts, max_witnesses=DEFAULT_MAX_WITNESSES):
  """Checks deadlock freedom.

  Configurations where every participant is terminal are successful
  terminations, not deadlocks.

  Args:
    system: A validated `System`.
    lts: The semantics of `system`.
    max_witnesses: Maximum number of witnesses to report.

  Returns:
    A `PropertyReport` for `DEADLOCK_FREEDOM`.
  """
  _validate_max_witnesses(max_witnesses)
  witnesses = []
  for configuration in deadlock_configurations(system, lts):
    evidence = None
    if len(witnesses) < max_witnesses:
      evidence = _shortest_run(lts, lts.initial,
                               lambda c, goal=configuration: c == goal)
    witnesses.append(Witness(DEADLOCK, configuration, None, evidence))
  return _report(DEADLOCK_FREEDOM, witnesses, max_witnesses)


def _involving_closure(lts, participant):
  """Configurations from which a step involving `participant` is reachable."""
  predecessors = collections.defaultdict(list)
  frontier = []
  for source, label, target in lts.edges:
    predecessors[target].append(source)
    if _involves(label, participant):
      frontier.append(source)
  closure = set(frontier)
  queue = collections.deque(frontier)
  while queue:
    for source in predecessors[queue.popleft()]:
      if source not in closure:
        closure.add(source)
        queue.append(source)
  return closure


def lock_pairs(system, lts):
  """All `(configuration, participant)` locks, in discovery order."""
  closures = {p: _involving_closure(lts, p) for p in lts.participants}
  return [(c, p)
          for c in lts.configurations
          for p in _enabled(system, c)
          if c not in closures[p]]


def find_locks(system, lts, max_witnesses=DEFAULT_MAX_WITNESSES):
  """Checks lock freedom.

  A participant counts as enabled as soon as its local state has an outgoing
  transition, including one that no peer can ever match.

  Args:
    system: A validated `System`.
    lts: The semantics of `system`.
    max_witnesses: Maximum number of witnesses to report.

  Returns:
    A `PropertyReport` for `LOCK_FREEDOM` whose witnesses carry the set of
    configurations reachable from the locked configuration.
  """
  _validate_max_witnesses(max_witnesses)
  witnesses = []
  for configuration, participant in lock_pairs(system, lts):
    evidence = None
    if len(witnesses) < max_witnesses:
      evidence = _reachable(lts, configuration)
    witnesses.append(Witness(LOCK, configuration, participant, evidence))
  return _report(LOCK_FREEDOM, witnesses, max_witnesses)


def _cyclic_components(lts, allowed):
  """Strongly connected components of the sub-LTS with internal steps.

  Args:
    lts: A `SemLts`.
    allowed: Predicate over `SemLabel`s selecting the steps of the sub-LTS.

  Returns:
    A pair `(component, cyclic)`: the component label of every configuration
    index, and the set of labels of components containing at least one step.
  """
  n = len(lts)
  rows, cols = [], []
  for source, label, target in lts.edges:
    if allowed(label):
      rows.append(lts.index(source))
      cols.append(lts.index(target))
  graph = sparse.csr_matrix(
      (np.ones(len(rows), dtype=np.int8), (rows, cols)), shape=(n, n))
  _, component = csgraph.connected_components(
      graph, directed=True, connection='strong')
  cyclic = set(
      component[r] for r, c in zip(rows, cols) if component[r] == component[c])
  return component, cyclic


class _AvoidingRuns(object):
  """Maximal runs of a `SemLts` that never involve one participant."""

  def __init__(self, lts, participant):
    self._lts = lts
    self._participant = participant
    self._component, self._cyclic = _cyclic_components(lts, self.allowed)
    self._bad = self._backward_closure()

  def allowed(self, label):
    return not _involves(label, self._participant)

  def _on_cycle(self, configuration):
    return self._component[self._lts.index(configuration)] in self._cyclic

  def _is_target(self, configuration):
    return (not self._lts.successors(configuration) or
            self._on_cycle(configuration))

  def _backward_closure(self):
    predecessors = collections.defaultdict(list)
    for source, label, target in self._lts.edges:
      if self.allowed(label):
        predecessors[target].append(source)
    bad = set(c for c in self._lts.configurations if self._is_target(c))
    queue = collections.deque(bad)
    while queue:
      for source in predecessors[queue.popleft()]:
        if source not in bad:
          bad.add(source)
          queue.append(source)
    return bad

  def has_maximal_run(self, configuration):
    return configuration in self._bad

  def maximal_run(self, configuration):
    """A finite run to a dead configuration or a lasso, avoiding the peer."""
    stem = _shortest_run(self._lts, configuration, self._is_target,
                         self.allowed)
    last = stem.last
    if not self._lts.successors(last):
      return stem
    component = self._component[self._lts.index(last)]

    # Shortest way around the cycle through `last`, staying in its component.
    parents = {}
    queue = collections.deque()
    for label, target in self._lts.successors(last):
      if (self.allowed(label) and
          self._component[self._lts.index(target)] == component and
          target not in parents):
        parents[target] = (label, last)
        queue.append(target)
    while last not in parents:
      configuration = queue.popleft()
      for label, target in self._lts.successors(configuration):
        if (self.allowed(label) and
            self._component[self._lts.index(target)] == component and
            target not in parents):
          parents[target] = (label, configuration)
          queue.append(target)
    steps = []
    current = last
    while True:
      label, previous = parents[current]
      steps.append((label, current))
      current = previous
      if current == last:
        break
    return Run(stem.start, stem.stem, tuple(reversed(steps)))


def slf_violation_pairs(system, lts):
  """All `(configuration, participant)` strong lock freedom violations."""
  runs = {p: _AvoidingRuns(lts, p) for p in lts.participants}
  return [(c, p)
          for c in lts.configurations
          for p in _enabled(system, c)
          if runs[p].has_maximal_run(c)]


def check_strong_lock_freedom(system, lts,
                              max_witnesses=DEFAULT_MAX_WITNESSES):
  """Checks strong lock freedom.

  For every participant the steps involving it are removed; a violation is a
  configuration from which the remaining steps reach either a cycle (an
  infinite avoiding run) or a configuration with no step in the full LTS (a
  finite maximal avoiding run).

  Args:
    system: A validated `System`.
    lts: The semantics of `system`.
    max_witnesses: Maximum number of witnesses to report.

  Returns:
    A `PropertyReport` for `STRONG_LOCK_FREEDOM` whose witnesses carry a
    maximal avoiding `Run`.
  """
  _validate_max_witnesses(max_witnesses)
  runs = {p: _AvoidingRuns(lts, p) for p in lts.participants}
  witnesses = []
  for configuration in lts.configurations:
    for participant in _enabled(system, configuration):
      avoiding = runs[participant]
      if not avoiding.has_maximal_run(configuration):
        continue
      evidence = None
      if len(witnesses) < max_witnesses:
        evidence = avoiding.maximal_run(configuration)
      witnesses.append(
          Witness(SLF_VIOLATION, configuration, participant, evidence))
  return _report(STRONG_LOCK_FREEDOM, witnesses, max_witnesses)


def _replay_run(lts, run):
  current = run.start
  if current not in lts:
    return False
  for label, target in run.stem + run.cycle:
    if (label, target) not in lts.successors(current):
      return False
    current = target
  return True


def replay_witness(lts, witness):
  """Re-validates a witness against the steps of `lts`.

  Args:
    lts: The `SemLts` the witness was found in.
    witness: A `Witness` with evidence.

  Returns:
    True iff the evidence proves the violation.
  """
  configuration = witness.configuration
  if configuration not in lts:
    return False
  evidence = witness.evidence
  if witness.kind == DEADLOCK:
    if lts.successors(configuration):
      return False
    return evidence is None or (_replay_run(lts, evidence) and
                                evidence.start == lts.initial and
                                evidence.last == configuration and
                                not evidence.is_lasso)

  if witness.kind == LOCK:
    reachable = set(evidence)
    if configuration not in reachable:
      return False
    for source in reachable:
      if source not in lts:
        return False
      for label, target in lts.successors(source):
        if target not in reachable or _involves(label, witness.participant):
          return False
    return True

  if witness.kind == SLF_VIOLATION:
    if evidence.start != configuration or not _replay_run(lts, evidence):
      return False
    if any(_involves(l, witness.participant) for l in evidence.labels()):
      return False
    if evidence.is_lasso:
      return evidence.cycle[-1][1] == evidence.last
    return not lts.successors(evidence.last)

  raise ValueError('Unknown witness kind: {}'.format(witness.kind))


def check_implication_chain(system, lts):
  """Cross-checks the three checkers on one system.

  Strong lock freedom implies lock freedom, which implies deadlock freedom.
  Pairwise: every deadlock locks each participant it enables, and every lock
  violates strong lock freedom. Every reported witness must also replay.

  Args:
    system: A validated `System`.
    lts: The semantics of `system`.

  Returns:
    True.

  Raises:
    InternalInconsistencyError: If the checkers contradict each other, which
      is a bug in a checker rather than a property of `system`.
  """
  locks = set(lock_pairs(system, lts))
  slf = set(slf_violation_pairs(system, lts))
  for configuration in deadlock_configurations(system, lts):
    for participant in _enabled(system, configuration):
      if (configuration, participant) not in locks:
        raise errors.InternalInconsistencyError(
            'deadlock {} is not a lock for {}'.format(
                semantics.configuration_string(configuration), participant))
  missing = locks - slf
  if missing:
    configuration, participant = sorted(missing)[0]
    raise errors.InternalInconsistencyError(
        'lock {} for {} is not a strong lock freedom violation'.format(
            semantics.configuration_string(configuration), participant))

  for checker in (find_deadlocks, find_locks, check_strong_lock_freedom):
    for witness in checker(system, lts).witnesses:
      if not replay_witness(lts, witness):
        raise errors.InternalInconsistencyError(
            '{} witness at {} does not replay'.format(
                witness.kind,
                semantics.configuration_string(witness.configuration)))
  logging.vlog(1, 'Implication chain holds: %d locks, %d SLF violations.',
               len(locks), len(slf))
  return True


@six.add_metaclass(abc.ABCMeta)
class PropertyChecker(object):
  """Interface of the communication property checkers."""

  def __init__(self, max_witnesses=DEFAULT_MAX_WITNESSES):
    _validate_max_witnesses(max_witnesses)
    self.max_witnesses = max_witnesses

  @abc.abstractmethod
  def check(self, system, lts):
    """Returns a `PropertyReport` for `system` and its semantics `lts`."""


class DeadlockFreedomChecker(PropertyChecker):

  def check(self, system, lts):
    return find_deadlocks(system, lts, self.max_witnesses)


class LockFreedomChecker(PropertyChecker):

  def check(self, system, lts):
    return find_locks(system, lts, self.max_witnesses)


class StrongLockFreedomChecker(PropertyChecker):

  def check(self, system, lts):
    return check_strong_lock_freedom(system, lts, self.max_witnesses)


class PropertyCheckerFactory(object):
  """Looks up property checkers by their command-line name.

  To add a property, implement `PropertyChecker` and register the class in
  `_checkers`.
  """
  _checkers = collections.OrderedDict([
      ('deadlock', DeadlockFreedomChecker),
      ('lock', LockFreedomChecker),
      ('strong-lock', StrongLockFreedomChecker),
  ])

  @classmethod
  def supported_checkers(cls):
    return tuple(cls._checkers.keys())

  @classmethod
  def checker_is_supported(cls, name):
    return name in cls._checkers

  @classmethod
  def get_property_checker(cls, name):
    """Returns the `PropertyChecker` subclass registered under `name`.

    Raises:
      ValueError: If `name` is not a supported property.
    """
    if not cls.checker_is_supported(name):
      raise ValueError(
          'Unknown property: {name}. Allowed values are : {allowed}'.format(
              name=name, allowed=','.join(cls._checkers.keys())))
    return cls._checkers[name]


def check_property(name, system, lts, max_witnesses=DEFAULT_MAX_WITNESSES):
  """Runs the checker registered under `name`."""
  checker = PropertyCheckerFactory.get_property_checker(name)(max_witnesses)
  report = checker.check(system, lts)
  logging.vlog(1, '%s of %s: holds=%s, %d violations.', report.property,
               system.name, report.holds, report.num_violations)
  return report
