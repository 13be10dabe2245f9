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
"""Seeded generation of random CFSMs, systems and compatible peers."""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import string

import numpy as np
import six

from cfsm_composition.python.core.automata import cfsm as cfsm_lib
from cfsm_composition.python.core.automata import fsa as fsa_lib
from cfsm_composition.python.core.automata import labels
from cfsm_composition.python.core.compatibility import compatibility
from cfsm_composition.python.core.formats import system_format
from cfsm_composition.python.core.internal import errors
from cfsm_composition.python.core.semantics import system as system_lib

ActionLabel = labels.ActionLabel

# numpy seeds must fit in 32 bits.
_SEED_MODULUS = 2**32
_MAX_ATTEMPTS = 100

_TERMINAL, _INPUT, _OUTPUT = 0, 1, 2


class FuzzParams(object):
  """Knobs of the random generators and of the preservation campaign."""

  def __init__(self,
               seed=42,
               max_states=5,
               max_participants=4,
               num_messages=3,
               iterations=200,
               require_sequential_gateways=False,
               max_branches=2,
               terminal_bias=0.3,
               input_bias=0.4,
               output_bias=0.3,
               max_configurations=20000):
    """Creates fuzzing parameters.

    Args:
      seed: Campaign seed; iteration `i` uses `seed + i`.
      max_states: Maximum number of non-committed states per machine.
      max_participants: Maximum number of participants per system.
      num_messages: Size of the message alphabet `m0, m1, ...`.
      iterations: Number of composed pairs to generate.
      require_sequential_gateways: Generate sequential H machines, so that
        lock freedom preservation is checked on every pair.
      max_branches: Maximum number of transitions leaving a state.
      terminal_bias: Weight of terminal states.
      input_bias: Weight of receiving states.
      output_bias: Weight of states choosing among tau-guarded outputs.
      max_configurations: Cap on the configurations of every LTS built.
    """
    self.seed = seed
    self.max_states = max_states
    self.max_participants = max_participants
    self.num_messages = num_messages
    self.iterations = iterations
    self.require_sequential_gateways = require_sequential_gateways
    self.max_branches = max_branches
    self.terminal_bias = terminal_bias
    self.input_bias = input_bias
    self.output_bias = output_bias
    self.max_configurations = max_configurations
    self._validate()

  def _validate(self):
    if not isinstance(self.seed, six.integer_types) or isinstance(
        self.seed, bool):
      raise TypeError('seed must be an integer, got {!r}'.format(self.seed))
    if not 0 <= self.seed < 2**64:
      raise ValueError('seed must be in [0, 2**64), got {}'.format(self.seed))
    for name in ('max_states', 'max_participants', 'num_messages',
                 'iterations', 'max_branches', 'max_configurations'):
      if getattr(self, name) < 1:
        raise ValueError('{} must be >= 1, got {}'.format(
            name, getattr(self, name)))
    if self.max_participants > len(string.ascii_uppercase):
      raise ValueError('max_participants must be <= {}, got {}'.format(
          len(string.ascii_uppercase), self.max_participants))
    biases = self.biases
    if any(b < 0 for b in biases) or not sum(biases) > 0:
      raise ValueError(
          'generator biases must be >= 0 with a positive sum, got {}'.format(
              biases))

  @property
  def biases(self):
    return (self.terminal_bias, self.input_bias, self.output_bias)

  def iteration_seed(self, iteration):
    return (self.seed + iteration) % _SEED_MODULUS

  def get_config(self):
    return {
        'seed': self.seed,
        'max_states': self.max_states,
        'max_participants': self.max_participants,
        'num_messages': self.num_messages,
        'iterations': self.iterations,
        'require_sequential_gateways': self.require_sequential_gateways,
        'max_branches': self.max_branches,
        'terminal_bias': self.terminal_bias,
        'input_bias': self.input_bias,
        'output_bias': self.output_bias,
        'max_configurations': self.max_configurations,
    }

  @classmethod
  def from_config(cls, config):
    """Instantiates a `FuzzParams` from its config.

    Args:
        config: Output of `get_config()`.

    Returns:
        A `FuzzParams` instance.
    """
    return cls(**config)

  def __eq__(self, other):
    if not isinstance(other, FuzzParams):
      return NotImplemented
    return self.get_config() == other.get_config()

  def __ne__(self, other):
    result = self.__eq__(other)
    if result is NotImplemented:
      return result
    return not result

  def __repr__(self):
    return 'FuzzParams({})'.format(', '.join(
        '{}={!r}'.format(k, v) for k, v in sorted(self.get_config().items())))


def make_rng(params, iteration=0):
  return np.random.RandomState(params.iteration_seed(iteration))


def _messages(params):
  return ['m{}'.format(i) for i in range(params.num_messages)]


def _pick(rng, items):
  return items[rng.randint(len(items))]


def random_machine(rng, owner, partners, params, sequential=False):
  """Generates a random ?!-deterministic CFSM without mixed states.

  States `0, 1, ...` are either terminal, receiving or choosing among
  tau-guarded outputs. Every output sits behind a committed state `c<n>`
  entered only by its tau, so the machine is a valid CFSM by construction.
  The messages leaving a state are pairwise distinct.

  Args:
    rng: A `np.random.RandomState`.
    owner: The participant owning the machine.
    partners: Participants the machine may talk to. With no partners every
      state is terminal.
    params: A `FuzzParams`.
    sequential: Leave every state with at most one transition.

  Returns:
    A `Cfsm` owned by `owner`.
  """
  partners = sorted(partners)
  messages = _messages(params)
  num_states = rng.randint(1, params.max_states + 1)
  states = [str(i) for i in range(num_states)]
  weights = np.array(params.biases, dtype=np.float64)
  weights /= weights.sum()

  committed = []
  transitions = []
  for state in states:
    kind = rng.choice(3, p=weights)
    if kind == _TERMINAL or not partners:
      continue
    max_branches = 1 if sequential else min(params.max_branches,
                                            len(messages))
    num_branches = rng.randint(1, max_branches + 1)
    chosen = rng.choice(len(messages), size=num_branches, replace=False)
    for index in sorted(chosen):
      msg = messages[index]
      partner = _pick(rng, partners)
      target = _pick(rng, states)
      if kind == _INPUT:
        transitions.append((state, ActionLabel.input(partner, owner, msg),
                            target))
      else:
        guard = 'c{}'.format(len(committed))
        committed.append(guard)
        transitions.append((state, ActionLabel.tau(), guard))
        transitions.append((guard, ActionLabel.output(owner, partner, msg),
                            target))
  return cfsm_lib.validate_cfsm(
      fsa_lib.Fsa(states + committed, '0', transitions), owner)


def _participant_names(count):
  return list(string.ascii_uppercase[:count])


def random_system(params, rng=None, name='S', participants=None,
                  fixed_machines=None):
  """Generates a random closed system.

  Args:
    params: A `FuzzParams`.
    rng: A `np.random.RandomState`; defaults to one seeded with
      `params.seed`, which makes the result a function of `params`.
    name: The system name.
    participants: The domain. Defaults to `A, B, ...` with a random size of
      at least two (unless `params.max_participants` is 1).
    fixed_machines: Optional `dict` of machines to include as they are; their
      partners must be in `participants`.

  Returns:
    A valid `System` in which at least one machine can move, unless it has a
    single participant.

  Raises:
    RuntimeError: If no non-trivial system was generated within a bounded
      number of attempts.
  """
  if rng is None:
    rng = make_rng(params)
  fixed_machines = dict(fixed_machines or {})
  if participants is None:
    low = min(2, params.max_participants)
    participants = _participant_names(
        rng.randint(low, params.max_participants + 1))
  participants = sorted(set(participants) | set(fixed_machines))

  for _ in range(_MAX_ATTEMPTS):
    machines = dict(fixed_machines)
    for participant in participants:
      if participant in fixed_machines:
        continue
      partners = [p for p in participants if p != participant]
      machines[participant] = random_machine(rng, participant, partners,
                                             params)
    if len(participants) == 1 or any(m.transitions
                                     for m in six.itervalues(machines)):
      return system_lib.validate_system(machines, name=name)
  raise RuntimeError(
      'no non-trivial system over {} generated in {} attempts'.format(
          participants, _MAX_ATTEMPTS))


def _check_peer_arguments(m, owner, partners):
  labels.validate_token(owner, 'owner')
  if not partners:
    raise ValueError('partners must be non-empty')
  for partner in partners:
    labels.validate_token(partner, 'partner')
  taken = {m.subject} | set(m.partners())
  if owner in taken:
    raise ValueError('owner {} must not occur in the machine of {}'.format(
        owner, m.subject))
  clash = sorted((taken | {owner}) & set(partners))
  if clash:
    raise ValueError(
        'partners must be disjoint from {} and the domain of {}, got {}'.format(
            owner, m.subject, clash))
  mixed = [
      q for q in m.states if cfsm_lib.classify_state(m, q).asymmetric_mixed
  ]
  if mixed:
    raise ValueError('machines to dualize must not have mixed states, got '
                     '{}'.format(mixed))


def derive_compatible_peer(m, owner, partners):
  """Builds a machine compatible with `m` by swapping inputs and outputs.

  Every segment `p --tau--> q --H->A!m--> r` of `m` becomes an input
  `p --X->K?m--> r` and every input `p --A->H?m--> r` becomes a tau-guarded
  output `p --tau--> p!r --K->X!m--> r`, where `X` cycles through
  `partners`. Committed states of `m` are dropped.

  Args:
    m: A `Cfsm` without mixed states.
    owner: The participant K owning the new machine.
    partners: Participants K talks to, disjoint from K, from the owner of `m`
      and from its partners.

  Returns:
    A `Cfsm` owned by `owner`, compatible with `m`.

  Raises:
    ValueError: If the arguments break the requirements above.
    InternalInconsistencyError: If the result is not compatible with `m`.
  """
  _check_peer_arguments(m, owner, partners)
  partners = list(partners)
  committed = set(t.target for t in m.transitions if t.label.is_tau)
  taken = set(m.states)
  states = [q for q in m.states if q not in committed or q == m.initial]
  turn = [0]

  def next_partner():
    partner = partners[turn[0] % len(partners)]
    turn[0] += 1
    return partner

  transitions = []
  for t in m.transitions:
    if t.label.is_tau:
      out_label, target = m.output_of(t.target)
      transitions.append(
          (t.source, ActionLabel.input(next_partner(), owner, out_label.msg),
           target))
    elif t.label.is_input:
      guard = cfsm_lib.fresh_state_id('{}!{}'.format(t.source, t.target),
                                      taken)
      states.append(guard)
      transitions.append((t.source, ActionLabel.tau(), guard))
      transitions.append(
          (guard, ActionLabel.output(owner, next_partner(), t.label.msg),
           t.target))
    elif t.source == m.initial:
      # An initial committed state has no tau in the peer to stand for it.
      transitions.append(
          (t.source, ActionLabel.input(next_partner(), owner, t.label.msg),
           t.target))

  peer = cfsm_lib.validate_cfsm(fsa_lib.Fsa(states, m.initial, transitions),
                                owner)
  if not compatibility.check_compatibility(m, peer).compatible:
    raise errors.InternalInconsistencyError(
        'dualized machine of {} is not compatible with it'.format(m.subject))
  return peer


_LOCK_LEFT = """\
system lock_left

machine A {
  init 0
  0 tau 1
  1 ! H m 0
}

machine H {
  init 0
  0 ? A m 0
  0 ? A x 1
}
"""

_LOCK_RIGHT = """\
system lock_right

machine B {
  init 0
  0 ? C stop 1
}

machine C {
  init 0
  0 ? K m 0
  0 ? K x 1
  1 tau 2
  2 ! B stop 3
}

machine K {
  init 0
  0 tau 1
  0 tau 2
  1 ! C m 0
  2 ! C x 3
}
"""


def lock_freedom_regression_pair():
  """A composable pair whose composition is not lock free.

  Both systems are lock free, but H and K are not sequential: K may choose
  to send x, which H never receives from A, so B is locked once composed.

  Returns:
    A tuple `(s1, 'H', s2, 'K')`.
  """
  return (system_format.parse_system_file(_LOCK_LEFT), 'H',
          system_format.parse_system_file(_LOCK_RIGHT), 'K')
