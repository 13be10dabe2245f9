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
"""Gateways: machines turned into forwarders towards a peer system.

The gateway of an H-local machine towards a participant K replaces

  * every segment `p --tau--> q --H->A!m--> r` with
    `p --K->H?m--> p>q --tau--> q --H->A!m--> r`, so that H only sends `m` to
    A after receiving it from K;
  * every input `p --A->H?m--> r` with
    `p --A->H?m--> p?r --tau--> p!r --H->K!m--> r`, so that every message H
    receives is forwarded to K.

States of the original machine are external; the states `p>q`, `p?r` and
`p!r` are fresh, and primed when their name is taken.
"""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import collections

import six

from cfsm_composition.python.core.automata import cfsm as cfsm_lib
from cfsm_composition.python.core.automata import fsa as fsa_lib
from cfsm_composition.python.core.automata import labels
from cfsm_composition.python.core.internal import errors

ActionLabel = labels.ActionLabel

PEER_INPUT_PREFIX = 'peer-input-prefix'
INPUT_RELAY = 'input-relay'
OUTPUT_RELAY = 'output-relay'

PEER_NAME_CLASH = 'peer-name-clash'
INVALID_INPUT_MACHINE = 'invalid-input-machine'


class Provenance(
    collections.namedtuple('Provenance', ['role', 'transition'])):
  """Why a fresh gateway state exists.

  Attributes:
    role: `PEER_INPUT_PREFIX` for `p>q`, `INPUT_RELAY` for `p?r` and
      `OUTPUT_RELAY` for `p!r`.
    transition: The transition of the original machine the state was spawned
      by: the tau `p --tau--> q` or the input `p --A->H?m--> r`.
  """
  __slots__ = ()

  def __str__(self):
    return '{} of {}'.format(self.role, self.transition)


class Gateway(object):
  """The gateway of a machine towards a peer, with its provenance."""

  def __init__(self, cfsm, original, peer, provenance):
    self._cfsm = cfsm
    self._original = original
    self._peer = peer
    self._provenance = dict(provenance)

  @property
  def cfsm(self):
    return self._cfsm

  @property
  def original(self):
    return self._original

  @property
  def owner(self):
    return self._cfsm.subject

  @property
  def peer(self):
    return self._peer

  @property
  def provenance(self):
    return dict(self._provenance)

  @property
  def external_states(self):
    return self._original.states

  @property
  def internal_states(self):
    return tuple(sorted(self._provenance))

  def is_internal(self, state):
    return state in self._provenance

  def provenance_of(self, state):
    """Returns the `Provenance` of a fresh state, `None` for external ones.

    Raises:
      UnknownStateError: If `state` is not a state of the gateway.
    """
    if state not in self._cfsm:
      raise errors.UnknownStateError(
          'unknown-state: {} is not a state of the gateway of {}'.format(
              state, self.owner))
    return self._provenance.get(state)


def _check_tau_fact(m):
  """Every state has at most one tau transition, incoming or outgoing."""
  count = collections.Counter()
  for t in m.transitions:
    if t.label.is_tau:
      count[t.source] += 1
      count[t.target] += 1
  crowded = sorted(s for s, n in six.iteritems(count) if n > 1)
  if crowded:
    raise errors.InternalInconsistencyError(
        'gateway states {} touch more than one tau transition'.format(crowded))


def build_gateway(m, peer):
  """Builds the gateway of `m` towards `peer`.

  Args:
    m: A `Cfsm` owned by H.
    peer: The participant K the gateway forwards to; it must differ from H
      and must not occur in `m`.

  Returns:
    A `Gateway` whose machine has `|m| + #taus + 2 * #inputs` states.

  Raises:
    CompositionError: With kind `peer-name-clash` if `peer` is H or a
      partner of `m`, or `invalid-input-machine` if `m` is not a valid CFSM.
  """
  if not isinstance(m, cfsm_lib.Cfsm):
    raise errors.CompositionError(
        INVALID_INPUT_MACHINE, 'expected a Cfsm, got {!r}'.format(m))
  try:
    cfsm_lib.validate_cfsm(m.fsa, m.subject)
  except errors.CfsmValidationError as e:
    raise errors.CompositionError(INVALID_INPUT_MACHINE, str(e))
  labels.validate_token(peer, 'peer')
  owner = m.subject
  if peer == owner or peer in m.partners():
    raise errors.CompositionError(
        PEER_NAME_CLASH,
        '{} must not be {} nor one of its partners'.format(peer, owner))

  taken = set(m.states)
  provenance = {}
  transitions = []
  for t in m.transitions:
    if t.label.is_output:
      transitions.append(t)
    elif t.label.is_tau:
      out_label, _ = m.output_of(t.target)
      prefix = cfsm_lib.fresh_state_id('{}>{}'.format(t.source, t.target),
                                       taken)
      provenance[prefix] = Provenance(PEER_INPUT_PREFIX, t)
      transitions.append(
          (t.source, ActionLabel.input(peer, owner, out_label.msg), prefix))
      transitions.append((prefix, ActionLabel.tau(), t.target))
    else:
      received = cfsm_lib.fresh_state_id(
          '{}?{}'.format(t.source, t.target), taken)
      forwarding = cfsm_lib.fresh_state_id(
          '{}!{}'.format(t.source, t.target), taken)
      provenance[received] = Provenance(INPUT_RELAY, t)
      provenance[forwarding] = Provenance(OUTPUT_RELAY, t)
      transitions.append((t.source, t.label, received))
      transitions.append((received, ActionLabel.tau(), forwarding))
      transitions.append(
          (forwarding, ActionLabel.output(owner, peer, t.label.msg), t.target))

  gateway_cfsm = cfsm_lib.validate_cfsm(
      fsa_lib.Fsa(taken, m.initial, transitions), owner)
  _check_tau_fact(gateway_cfsm)
  return Gateway(gateway_cfsm, m, peer, provenance)


def nof_state(gateway, state):
  """Maps a gateway state to the original state its peer is aligned with.

  While the gateway relays an input towards the peer (`p?r`, `p!r`) the peer
  has not heard of the message yet, so the state maps back to the input's
  source `p`. Once the gateway has received `m` from the peer (`p>q`) or is
  committed to send it on (the tau target `q`), the peer already took its
  output, so the state maps forward to the target `r` of the output of `q`.
  Every other state maps to itself.

  This differs from mapping a committed state back to the source of its tau
  step: with ex_sem's K, state `2` maps to `3` rather than `0`. Mapping it to
  `0` would pair K's `0` with an H that has already received, and such pairs
  are not related by the io-correspondence of H and K.

  Args:
    gateway: A `Gateway`.
    state: A state of `gateway.cfsm`.

  Returns:
    A state of `gateway.original`.

  Raises:
    UnknownStateError: If `state` is not a state of the gateway.
  """
  provenance = gateway.provenance_of(state)
  original = gateway.original
  if provenance is None:
    incoming = original.incoming(state)
    if incoming and incoming[0].label.is_tau:
      return original.output_of(state)[1]
    return state
  if provenance.role == PEER_INPUT_PREFIX:
    return original.output_of(provenance.transition.target)[1]
  return provenance.transition.source


def project_state(gateway, state):
  """Maps a gateway state to a state of the original machine.

  Fresh states after an input from the peer map back to the state before the
  input; fresh states before an output to the peer map forward to the state
  after the output. External states map to themselves.

  Raises:
    UnknownStateError: If `state` is not a state of the gateway.
  """
  provenance = gateway.provenance_of(state)
  if provenance is None:
    return state
  if provenance.role == PEER_INPUT_PREFIX:
    return provenance.transition.source
  return provenance.transition.target
