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
"""Finite state automata without accepting states."""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import collections

import six

from cfsm_composition.python.core.internal import errors


class Transition(
    collections.namedtuple('Transition', ['source', 'label', 'target'])):
  __slots__ = ()

  def __str__(self):
    return '{} --{}--> {}'.format(self.source, self.label, self.target)


class Fsa(object):
  """An immutable finite state automaton `<states, initial, transitions>`.

  States are strings. Labels can be any hashable, totally ordered values; the
  CFSM layer uses `ActionLabel` and the compatibility layer uses `IoLabel`.
  All set-valued accessors return sorted tuples so that everything derived
  from an `Fsa` is reproducible.
  """

  def __init__(self, states, initial, transitions):
    """Creates an FSA.

    Args:
      states: Iterable of state ids (strings).
      initial: The initial state; must be one of `states`.
      transitions: Iterable of `(source, label, target)` triples. Duplicates
        are collapsed.

    Raises:
      TypeError: If a state id is not a string.
      ValueError: If `initial` or a transition endpoint is not a state.
    """
    states = frozenset(states)
    for state in states:
      if not isinstance(state, six.string_types) or not state:
        raise TypeError('state ids must be non-empty strings, got {!r}'.format(
            state))
    if initial not in states:
      raise ValueError('initial state {!r} must be one of the states'.format(
          initial))
    transitions = frozenset(Transition(*t) for t in transitions)
    for t in transitions:
      if t.source not in states or t.target not in states:
        raise ValueError(
            'transition {} must connect declared states'.format(t))

    self._states = tuple(sorted(states))
    self._initial = initial
    self._transitions = tuple(sorted(transitions))
    self._outgoing = {state: [] for state in self._states}
    self._incoming = {state: [] for state in self._states}
    for t in self._transitions:
      self._outgoing[t.source].append((t.label, t.target))
      self._incoming[t.target].append(t)
    self._outgoing = {k: tuple(v) for k, v in six.iteritems(self._outgoing)}
    self._incoming = {k: tuple(v) for k, v in six.iteritems(self._incoming)}

  @property
  def states(self):
    return self._states

  @property
  def initial(self):
    return self._initial

  @property
  def transitions(self):
    return self._transitions

  def __contains__(self, state):
    return state in self._outgoing

  def __eq__(self, other):
    if not isinstance(other, Fsa):
      return NotImplemented
    return (self._states == other._states and
            self._initial == other._initial and
            self._transitions == other._transitions)

  def __ne__(self, other):
    result = self.__eq__(other)
    if result is NotImplemented:
      return result
    return not result

  def __hash__(self):
    return hash((self._states, self._initial, self._transitions))

  def __repr__(self):
    return 'Fsa(states={}, initial={!r}, transitions={})'.format(
        len(self._states), self._initial, len(self._transitions))

  def _check_state(self, state):
    if state not in self._outgoing:
      raise errors.UnknownStateError(
          'unknown-state: {!r} is not a state of this automaton'.format(state))

  def successors(self, state):
    """Outgoing `(label, target)` pairs of `state`, ordered by label, target.

    Raises:
      UnknownStateError: If `state` is not a state of the automaton.
    """
    self._check_state(state)
    return self._outgoing[state]

  def incoming(self, state):
    """Transitions entering `state`, in sorted order."""
    self._check_state(state)
    return self._incoming[state]

  def out_degree(self, state):
    return len(self.successors(state))

  def reachable_states(self, from_state=None):
    """Returns the states reachable from `from_state`, sorted.

    `from_state` itself is always included (the empty path).

    Args:
      from_state: Where to start; defaults to the initial state.

    Raises:
      UnknownStateError: If `from_state` is not a state of the automaton.
    """
    if from_state is None:
      from_state = self._initial
    self._check_state(from_state)
    seen = {from_state}
    queue = collections.deque([from_state])
    while queue:
      state = queue.popleft()
      for _, target in self._outgoing[state]:
        if target not in seen:
          seen.add(target)
          queue.append(target)
    return tuple(sorted(seen))


def reachable_states(fsa, from_state):
  """Functional form of `Fsa.reachable_states`."""
  return fsa.reachable_states(from_state)


def successors(fsa, state):
  """Functional form of `Fsa.successors`."""
  return fsa.successors(state)
