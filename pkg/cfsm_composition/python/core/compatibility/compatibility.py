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
"""Compatibility of CFSMs through io-correspondences.

Compatibility ignores the identities of the partners: machines are first
projected onto the io alphabet (`!m`, `?m` and tau). An io-correspondence
between two io machines is a relation `R` on their states such that for every
`(q, q2)` in `R`:

  * `q` is terminal iff `q2` is terminal;
  * every output `q --!m--> r` has an input `q2 --?m--> r2` with `(r, r2)` in
    `R`, and symmetrically for outputs of `q2`;
  * every tau `q --tau--> r` has `(r, q2)` in `R`, and symmetrically every
    `q2 --tau--> r2` has `(q, r2)` in `R`.

Two machines are compatible when some io-correspondence relates their
initial states. Io-correspondences are closed under union, so it is enough to
compute the greatest one.
"""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import collections

from absl import logging

from cfsm_composition.python.core.automata import fsa as fsa_lib
from cfsm_composition.python.core.automata import labels

TERMINAL_CLAUSE = 'terminal'
LEFT_OUTPUT_CLAUSE = 'left-output'
RIGHT_OUTPUT_CLAUSE = 'right-output'
LEFT_TAU_CLAUSE = 'left-tau'
RIGHT_TAU_CLAUSE = 'right-tau'


class IoLabel(collections.namedtuple('IoLabel', ['kind', 'msg'])):
  """An io label: `!m`, `?m` or tau."""
  __slots__ = ()

  @classmethod
  def output(cls, msg):
    return cls(labels.OUTPUT, labels.validate_token(msg, 'message'))

  @classmethod
  def input(cls, msg):
    return cls(labels.INPUT, labels.validate_token(msg, 'message'))

  @classmethod
  def tau(cls):
    return cls(labels.TAU, '')

  @property
  def is_output(self):
    return self.kind == labels.OUTPUT

  @property
  def is_input(self):
    return self.kind == labels.INPUT

  @property
  def is_tau(self):
    return self.kind == labels.TAU

  def __str__(self):
    if self.is_tau:
      return 'tau'
    return self.kind + self.msg


def io_label(label):
  """Erases the partners of an `ActionLabel`."""
  if label.is_tau:
    return IoLabel.tau()
  return IoLabel(label.kind, label.msg)


def dual_label(label):
  """Swaps the polarity of an `IoLabel`; tau is its own dual."""
  if label.is_output:
    return IoLabel(labels.INPUT, label.msg)
  if label.is_input:
    return IoLabel(labels.OUTPUT, label.msg)
  return label


def io_projection(m):
  """Relabels every transition of `m` with its io label.

  Args:
    m: A `Cfsm`.

  Returns:
    An `Fsa` over `IoLabel`s with the states and initial state of `m`.
  """
  return fsa_lib.Fsa(
      m.states, m.initial,
      [(t.source, io_label(t.label), t.target) for t in m.transitions])


class IoCorrespondence(object):
  """A relation between the states of two io machines."""

  def __init__(self, pairs):
    self._pairs = frozenset(pairs)

  @property
  def pairs(self):
    return self._pairs

  def __contains__(self, pair):
    return tuple(pair) in self._pairs

  def __iter__(self):
    return iter(sorted(self._pairs))

  def __len__(self):
    return len(self._pairs)

  def __eq__(self, other):
    if not isinstance(other, IoCorrespondence):
      return NotImplemented
    return self._pairs == other._pairs

  def __ne__(self, other):
    result = self.__eq__(other)
    if result is NotImplemented:
      return result
    return not result

  def __hash__(self):
    return hash(self._pairs)

  def __repr__(self):
    return 'IoCorrespondence({})'.format(sorted(self._pairs))


class CompatibilityResult(
    collections.namedtuple('CompatibilityResult',
                           ['compatible', 'correspondence'])):
  """Verdict of `check_compatibility` with its certificate."""
  __slots__ = ()


class _IoMachine(object):
  """Successors of an io machine indexed by label kind and message."""

  def __init__(self, io_fsa):
    self.fsa = io_fsa
    self.terminal = set()
    self.taus = collections.defaultdict(list)
    self.outputs = collections.defaultdict(list)
    self.inputs = collections.defaultdict(lambda: collections.defaultdict(list))
    for state in io_fsa.states:
      outgoing = io_fsa.successors(state)
      if not outgoing:
        self.terminal.add(state)
      for label, target in outgoing:
        if label.is_tau:
          self.taus[state].append(target)
        elif label.is_output:
          self.outputs[state].append((label.msg, target))
        else:
          self.inputs[state][label.msg].append(target)


def _violated_clause(left, right, relation, q, q2):
  if (q in left.terminal) != (q2 in right.terminal):
    return TERMINAL_CLAUSE
  for msg, r in left.outputs[q]:
    if not any((r, r2) in relation for r2 in right.inputs[q2][msg]):
      return LEFT_OUTPUT_CLAUSE
  for msg, r2 in right.outputs[q2]:
    if not any((r, r2) in relation for r in left.inputs[q][msg]):
      return RIGHT_OUTPUT_CLAUSE
  for r in left.taus[q]:
    if (r, q2) not in relation:
      return LEFT_TAU_CLAUSE
  for r2 in right.taus[q2]:
    if (q, r2) not in relation:
      return RIGHT_TAU_CLAUSE
  return None


def greatest_io_correspondence(m1, m2):
  """Computes the union of all io-correspondences between `m1` and `m2`.

  Starts from all pairs of states and deletes pairs violating a clause with
  respect to the current relation until nothing changes. Only pairs whose
  successors lost a partner are re-examined after the first sweep.

  Args:
    m1: A `Cfsm`.
    m2: A `Cfsm`.

  Returns:
    An `IoCorrespondence`, possibly empty.
  """
  left = _IoMachine(io_projection(m1))
  right = _IoMachine(io_projection(m2))
  relation = set((q, q2) for q in left.fsa.states for q2 in right.fsa.states)

  # A pair depends on the pairs of its successors.
  left_predecessors = collections.defaultdict(set)
  right_predecessors = collections.defaultdict(set)
  for t in left.fsa.transitions:
    left_predecessors[t.target].add(t.source)
  for t in right.fsa.transitions:
    right_predecessors[t.target].add(t.source)

  pending = collections.deque(sorted(relation))
  queued = set(relation)
  while pending:
    pair = pending.popleft()
    queued.discard(pair)
    if pair not in relation:
      continue
    clause = _violated_clause(left, right, relation, *pair)
    if clause is None:
      continue
    relation.discard(pair)
    logging.vlog(1, 'Dropping (%s, %s): %s clause.', pair[0], pair[1], clause)
    r, r2 = pair
    dependents = set()
    for q in left_predecessors[r] | {r}:
      for q2 in right_predecessors[r2] | {r2}:
        dependents.add((q, q2))
    for dependent in sorted(dependents):
      if dependent in relation and dependent not in queued:
        queued.add(dependent)
        pending.append(dependent)
  return IoCorrespondence(relation)


def io_correspondence_violations(m1, m2, pairs):
  """Checks every clause for every pair of a candidate relation.

  This is a direct reading of the definition, independent of the fixpoint
  computation.

  Args:
    m1: A `Cfsm`.
    m2: A `Cfsm`.
    pairs: Iterable of `(state of m1, state of m2)`.

  Returns:
    A sorted list of `((q, q2), clause)` for every violated clause.
  """
  io1, io2 = io_projection(m1), io_projection(m2)
  relation = set(tuple(p) for p in pairs)
  violations = []
  for q, q2 in sorted(relation):
    out1, out2 = io1.successors(q), io2.successors(q2)
    if bool(out1) != bool(out2):
      violations.append(((q, q2), TERMINAL_CLAUSE))
    for label, r in out1:
      if label.is_output and not any(
          l2 == dual_label(label) and (r, r2) in relation for l2, r2 in out2):
        violations.append(((q, q2), LEFT_OUTPUT_CLAUSE))
      if label.is_tau and (r, q2) not in relation:
        violations.append(((q, q2), LEFT_TAU_CLAUSE))
    for label, r2 in out2:
      if label.is_output and not any(
          l1 == dual_label(label) and (r, r2) in relation for l1, r in out1):
        violations.append(((q, q2), RIGHT_OUTPUT_CLAUSE))
      if label.is_tau and (q, r2) not in relation:
        violations.append(((q, q2), RIGHT_TAU_CLAUSE))
  return violations


def is_io_correspondence(m1, m2, pairs):
  return not io_correspondence_violations(m1, m2, pairs)


class BorderlinePair(
    collections.namedtuple('BorderlinePair',
                           ['left', 'right', 'unmatched_inputs'])):
  __slots__ = ()


def _choice_messages(io_fsa, state):
  """Messages of the outputs reachable through the taus of a tau-only state.

  Returns `None` when `state` is not a non-terminal tau-only state.
  """
  outgoing = io_fsa.successors(state)
  if not outgoing or any(not label.is_tau for label, _ in outgoing):
    return None
  return set(out.msg for _, target in outgoing
             for out, _ in io_fsa.successors(target) if out.is_output)


def _input_messages(io_fsa, state):
  return set(l.msg for l, _ in io_fsa.successors(state) if l.is_input)


def borderline_pairs(m1, m2, correspondence):
  """Related pairs where a tau choice meets inputs it can never serve.

  The clauses only ask outputs to be matched, so a state choosing among
  outputs may be related to a peer waiting for more messages than it will
  ever get. These pairs are legal; they are reported for inspection.

  Args:
    m1: A `Cfsm`.
    m2: A `Cfsm`.
    correspondence: An `IoCorrespondence` between `m1` and `m2`.

  Returns:
    A sorted tuple of `BorderlinePair`s.
  """
  io1, io2 = io_projection(m1), io_projection(m2)
  found = []
  for q, q2 in correspondence:
    unmatched = set()
    offered = _choice_messages(io1, q)
    if offered is not None:
      unmatched |= _input_messages(io2, q2) - offered
    offered = _choice_messages(io2, q2)
    if offered is not None:
      unmatched |= _input_messages(io1, q) - offered
    if unmatched:
      found.append(BorderlinePair(q, q2, tuple(sorted(unmatched))))
  return tuple(sorted(found))


def check_compatibility(m1, m2):
  """Decides whether `m1` and `m2` are compatible.

  Args:
    m1: A `Cfsm`.
    m2: A `Cfsm`.

  Returns:
    A `CompatibilityResult` whose `correspondence` is the greatest
    io-correspondence, the certificate of the verdict.
  """
  correspondence = greatest_io_correspondence(m1, m2)
  compatible = (m1.initial, m2.initial) in correspondence
  if compatible:
    for pair in borderline_pairs(m1, m2, correspondence):
      logging.warning(
          'Compatible with unmatched inputs %s at (%s, %s) of %s and %s.',
          ','.join(pair.unmatched_inputs), pair.left, pair.right,
          m1.subject, m2.subject)
  logging.vlog(1, 'Compatibility of %s and %s: %s (%d related pairs).',
               m1.subject, m2.subject, compatible, len(correspondence))
  return CompatibilityResult(compatible, correspondence)
