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
"""Communicating finite-state machines with tau-guarded outputs.

A CFSM is an FSA over `ActionLabel`s where every output is committed to by a
preceding silent step:

  * the source of an output has exactly one incoming transition, labelled
    tau, and differs from the output's target;
  * the target of a tau transition has exactly one outgoing transition, an
    output, and differs from the tau's source.

A machine is local to its subject: every non-tau label has the machine's
owner as subject.
"""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import collections

import six

from cfsm_composition.python.core.automata import fsa as fsa_lib
from cfsm_composition.python.core.automata import labels
from cfsm_composition.python.core.internal import errors

ActionLabel = labels.ActionLabel

OUTPUT_WITHOUT_TAU_GUARD = 'output-without-tau-guard'
TAU_TARGET_NOT_UNIQUE_OUTPUT = 'tau-target-not-unique-output'
SELF_LOOP = 'self-loop-on-tau-or-output'
NON_LOCAL_LABEL = 'non-local-label'
MULTIPLE_INCOMING = 'multiple-incoming-to-output-source'
NORMALIZE_PRECONDITION = 'normalize-precondition'


def fresh_state_id(base, taken):
  """Returns `base`, primed until it does not clash with `taken`.

  The returned id is added to `taken`.
  """
  state = base
  while state in taken:
    state += "'"
  taken.add(state)
  return state


class Cfsm(object):
  """A validated CFSM owned by a participant.

  Do not construct directly; use `validate_cfsm` or `normalize_outputs`.
  """

  def __init__(self, fsa, subject):
    self._fsa = fsa
    self._subject = subject

  @property
  def fsa(self):
    return self._fsa

  @property
  def subject(self):
    return self._subject

  @property
  def states(self):
    return self._fsa.states

  @property
  def initial(self):
    return self._fsa.initial

  @property
  def transitions(self):
    return self._fsa.transitions

  def __contains__(self, state):
    return state in self._fsa

  def successors(self, state):
    return self._fsa.successors(state)

  def incoming(self, state):
    return self._fsa.incoming(state)

  def reachable_states(self, from_state=None):
    return self._fsa.reachable_states(from_state)

  def is_terminal(self, state):
    return not self._fsa.successors(state)

  def partners(self):
    """Participants other than the owner named in some label, sorted."""
    names = set()
    for t in self._fsa.transitions:
      if not t.label.is_tau:
        names.add(t.label.partner)
    return tuple(sorted(names))

  def output_of(self, state):
    """Returns the unique `(label, target)` output of a tau-target state."""
    (label, target), = self._fsa.successors(state)
    return label, target

  def __eq__(self, other):
    if not isinstance(other, Cfsm):
      return NotImplemented
    return self._subject == other._subject and self._fsa == other._fsa

  def __ne__(self, other):
    result = self.__eq__(other)
    if result is NotImplemented:
      return result
    return not result

  def __hash__(self):
    return hash((self._subject, self._fsa))

  def __repr__(self):
    return 'Cfsm(subject={!r}, states={}, transitions={})'.format(
        self._subject, len(self.states), len(self.transitions))


def _cfsm_violations(fsa, subject):
  """Lists every clause of the CFSM definition that `fsa` breaks."""
  violations = []
  for t in fsa.transitions:
    if not isinstance(t.label, ActionLabel):
      raise TypeError('CFSM transitions must carry ActionLabels, got {!r}'
                      .format(t.label))
    if not t.label.is_tau and t.label.subject != subject:
      violations.append(errors.Violation(
          NON_LOCAL_LABEL, t,
          'label subject {} is not the owner {}'.format(
              t.label.subject, subject)))

    if t.label.is_output:
      if t.source == t.target:
        violations.append(errors.Violation(
            SELF_LOOP, t, 'output source and target must differ'))
      incoming = fsa.incoming(t.source)
      if len(incoming) > 1:
        violations.append(errors.Violation(
            MULTIPLE_INCOMING, t,
            'output source {} has {} incoming transitions'.format(
                t.source, len(incoming))))
      elif not incoming or not incoming[0].label.is_tau:
        violations.append(errors.Violation(
            OUTPUT_WITHOUT_TAU_GUARD, t,
            'output source {} must be entered by exactly one tau'.format(
                t.source)))

    elif t.label.is_tau:
      if t.source == t.target:
        violations.append(errors.Violation(
            SELF_LOOP, t, 'tau source and target must differ'))
      outgoing = fsa.successors(t.target)
      if len(outgoing) != 1 or not outgoing[0][0].is_output:
        violations.append(errors.Violation(
            TAU_TARGET_NOT_UNIQUE_OUTPUT, t,
            'tau target {} must have exactly one outgoing transition, an '
            'output'.format(t.target)))
  return violations


def validate_cfsm(fsa, subject):
  """Checks the CFSM conditions and locality, returning a `Cfsm`.

  Args:
    fsa: An `Fsa` over `ActionLabel`s.
    subject: The participant owning the machine.

  Returns:
    A `Cfsm` wrapping `fsa`.

  Raises:
    CfsmValidationError: Listing every violated condition, each with the
      offending transition.
  """
  labels.validate_token(subject, 'subject')
  violations = _cfsm_violations(fsa, subject)
  if violations:
    raise errors.CfsmValidationError(subject, violations)
  return Cfsm(fsa, subject)


class StateClass(
    collections.namedtuple('StateClass', [
        'terminal', 'sending', 'receiving', 'mixed', 'asymmetric_sending',
        'asymmetric_receiving', 'asymmetric_mixed'
    ])):
  """Classification of a CFSM state.

  Exactly one of `terminal`, `sending`, `receiving` and `mixed` holds. A
  state is sending when it has no input among its outgoing transitions; this
  covers both committed states (a single output) and choice states (only tau
  transitions). The asymmetric flags are `False` on terminal states.
  """
  __slots__ = ()

  def name(self):
    for field in ('terminal', 'sending', 'receiving', 'mixed'):
      if getattr(self, field):
        return field


def classify_state(m, state):
  """Classifies `state` of machine `m`.

  Raises:
    UnknownStateError: If `state` is not a state of `m`.
  """
  outgoing = m.successors(state)
  if not outgoing:
    return StateClass(True, False, False, False, False, False, False)
  has_input = any(label.is_input for label, _ in outgoing)
  has_other = any(not label.is_input for label, _ in outgoing)
  sending = not has_input
  receiving = not has_other
  mixed = has_input and has_other
  return StateClass(
      terminal=False,
      sending=sending,
      receiving=receiving,
      mixed=mixed,
      asymmetric_sending=sending,
      asymmetric_receiving=receiving,
      asymmetric_mixed=mixed)


class MachineProfile(
    collections.namedtuple('MachineProfile', [
        'in_deterministic', 'out_deterministic', 'sequential',
        'has_asymmetric_mixed', 'terminal_states'
    ])):
  __slots__ = ()

  @property
  def io_deterministic(self):
    return self.in_deterministic and self.out_deterministic


def machine_profile(m):
  """Computes determinism, sequentiality and mixedness facts of `m`."""
  in_deterministic = True
  out_deterministic = True
  sequential = True
  has_asymmetric_mixed = False
  terminal_states = []

  for state in m.states:
    outgoing = m.successors(state)
    if not outgoing:
      terminal_states.append(state)
    if len(outgoing) > 1:
      sequential = False
    if classify_state(m, state).asymmetric_mixed:
      has_asymmetric_mixed = True

    input_targets = collections.defaultdict(set)
    output_targets = collections.defaultdict(set)
    for label, target in outgoing:
      if label.is_input:
        input_targets[label.msg].add(target)
      elif label.is_tau:
        for out_label, out_target in m.successors(target):
          output_targets[out_label.msg].add(out_target)
    if any(len(t) > 1 for t in six.itervalues(input_targets)):
      in_deterministic = False
    if any(len(t) > 1 for t in six.itervalues(output_targets)):
      out_deterministic = False

  return MachineProfile(
      in_deterministic=in_deterministic,
      out_deterministic=out_deterministic,
      sequential=sequential,
      has_asymmetric_mixed=has_asymmetric_mixed,
      terminal_states=tuple(terminal_states))


def is_sequential(m):
  return all(len(m.successors(state)) <= 1 for state in m.states)


def normalize_outputs(fsa, subject):
  """Guards every output of a tau-free machine with a fresh tau step.

  Each output `p --A->B!m--> r` becomes `p --tau--> p#out<i> --A->B!m--> r`,
  where `i` numbers the outputs of `p` in label order. Inputs are untouched.
  This turns a machine written for symmetric synchronisation into one for the
  asymmetric semantics, where the sender commits to an output before the
  exchange.

  Args:
    fsa: An `Fsa` over `ActionLabel`s without tau transitions.
    subject: The owner of the machine.

  Returns:
    A validated `Cfsm`.

  Raises:
    CfsmValidationError: If `fsa` has tau transitions or non-local labels.
  """
  labels.validate_token(subject, 'subject')
  violations = []
  for t in fsa.transitions:
    if t.label.is_tau:
      violations.append(errors.Violation(
          NORMALIZE_PRECONDITION, t,
          'machines to normalize must not contain tau transitions'))
    elif t.label.subject != subject:
      violations.append(errors.Violation(
          NON_LOCAL_LABEL, t,
          'label subject {} is not the owner {}'.format(
              t.label.subject, subject)))
  if violations:
    raise errors.CfsmValidationError(subject, violations)

  taken = set(fsa.states)
  transitions = []
  for state in fsa.states:
    outputs = [(l, q) for l, q in fsa.successors(state) if l.is_output]
    for i, (label, target) in enumerate(outputs):
      committed = fresh_state_id('{}#out{}'.format(state, i), taken)
      transitions.append((state, ActionLabel.tau(), committed))
      transitions.append((committed, label, target))
  transitions.extend(t for t in fsa.transitions if not t.label.is_output)
  return validate_cfsm(
      fsa_lib.Fsa(taken, fsa.initial, transitions), subject)
